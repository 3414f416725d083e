use alloc::vec;

use super::base::BaseSpace;
use super::class::DivisorClass;
use super::scroll::ScrollVariety;
use crate::error::{Error, Result};

/// `P^n` blown up along a linear `P^c`, seen as `P[P^{n-c-1}; 0^{c+1}, 1]`
/// via projection from the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupModel {
    pub n: u32,
    pub c: u32,
    pub scroll: ScrollVariety,
    pub exceptional_class: DivisorClass,
    pub hyperplane_pullback_class: DivisorClass,
}

impl BlowupModel {
    pub fn new(n: u32, c: u32) -> Result<Self> {
        if n < 2 || c + 2 > n {
            return Err(Error::CenterOutOfRange { n, c });
        }
        let mut twists = vec![vec![0]; c as usize + 1];
        twists.push(vec![1]);
        let scroll = ScrollVariety::new(BaseSpace::ProjSpace(n - c - 1), twists)?;
        Ok(BlowupModel {
            n,
            c,
            scroll,
            exceptional_class: DivisorClass::rank_one(-1, 1),
            hyperplane_pullback_class: DivisorClass::rank_one(0, 1),
        })
    }
}
