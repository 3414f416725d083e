use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Base of a scroll. Each kind has a Picard lattice generated by the
/// listed ample classes: `O(1)` on `P^s` and `Q^q`, the two rulings on
/// `P1 x P1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseSpace {
    ProjSpace(u32),
    Quadric(u32),
    BiProjLine,
}

impl BaseSpace {
    pub fn proj(s: u32) -> Result<Self> {
        let base = BaseSpace::ProjSpace(s);
        base.validate()?;
        Ok(base)
    }

    pub fn quadric(q: u32) -> Result<Self> {
        let base = BaseSpace::Quadric(q);
        base.validate()?;
        Ok(base)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            BaseSpace::ProjSpace(0) => Err(Error::ZeroDimensionalBase),
            // Q^2 is P1 x P1 and must be written as such.
            BaseSpace::Quadric(q) if q < 3 => Err(Error::QuadricTooSmall(q)),
            _ => Ok(()),
        }
    }

    pub fn pic_rank(&self) -> usize {
        match self {
            BaseSpace::ProjSpace(_) | BaseSpace::Quadric(_) => 1,
            BaseSpace::BiProjLine => 2,
        }
    }

    pub fn dim(&self) -> u32 {
        match *self {
            BaseSpace::ProjSpace(s) => s,
            BaseSpace::Quadric(q) => q,
            BaseSpace::BiProjLine => 2,
        }
    }

    /// Anticanonical class in the generator basis.
    pub fn minus_k(&self) -> Vec<i64> {
        match *self {
            BaseSpace::ProjSpace(s) => vec![i64::from(s) + 1],
            BaseSpace::Quadric(q) => vec![i64::from(q)],
            BaseSpace::BiProjLine => vec![2, 2],
        }
    }

    pub fn is_proj_space(&self) -> bool {
        matches!(self, BaseSpace::ProjSpace(_))
    }
}
