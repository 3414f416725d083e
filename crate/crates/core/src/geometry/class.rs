use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};

/// The class `O(m; n)`: `m` is the pullback part in the base's generator
/// basis, `n` the multiple of the relative hyperplane class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub base: Vec<i64>,
    pub fiber: i64,
}

impl DivisorClass {
    pub fn new(base: Vec<i64>, fiber: i64) -> Self {
        DivisorClass { base, fiber }
    }

    /// Class over a base of Picard rank one.
    pub fn rank_one(m: i64, n: i64) -> Self {
        DivisorClass {
            base: alloc::vec![m],
            fiber: n,
        }
    }

    pub fn zero(pic_rank: usize) -> Self {
        DivisorClass {
            base: alloc::vec![0; pic_rank],
            fiber: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.fiber == 0 && self.base.iter().all(|&m| m == 0)
    }

    pub fn coords(&self) -> impl Iterator<Item = i64> + '_ {
        self.base
            .iter()
            .copied()
            .chain(core::iter::once(self.fiber))
    }

    /// Divides every coordinate by `k`; `k` must divide all of them.
    pub fn exact_div(&self, k: i64) -> DivisorClass {
        debug_assert!(self.coords().all(|x| x % k == 0));
        DivisorClass {
            base: self.base.iter().map(|m| m / k).collect(),
            fiber: self.fiber / k,
        }
    }
}

/// Largest `r` with `class = r * L` for an integral `L`; the lattice is free
/// so this is the gcd of the coordinates.
pub fn index_of(class: &DivisorClass) -> Result<u64> {
    let g = class.coords().fold(0i64, |acc, x| acc.gcd(&x));
    if g == 0 {
        return Err(Error::ZeroClass);
    }
    Ok(g.unsigned_abs())
}

impl Add for &DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.base.len(), rhs.base.len(), "class rank mismatch");
        DivisorClass {
            base: self
                .base
                .iter()
                .zip(&rhs.base)
                .map(|(a, b)| a + b)
                .collect(),
            fiber: self.fiber + rhs.fiber,
        }
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self + &(-rhs)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        DivisorClass {
            base: self.base.iter().map(|m| -m).collect(),
            fiber: -self.fiber,
        }
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;

    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass {
            base: rhs.base.iter().map(|m| self * m).collect(),
            fiber: self * rhs.fiber,
        }
    }
}

/// `(m;n)` for rank one, `((m1,m2);n)` otherwise.
impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.base.as_slice() {
            [m] => write!(f, "({m};{})", self.fiber),
            parts => {
                f.write_str("((")?;
                for (k, m) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, ");{})", self.fiber)
            }
        }
    }
}

/// Torus-invariant curves that generate the cone of curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveClass {
    /// A line in a fiber of the projection to the base.
    FiberLine,
    /// A line of base ruling `line` inside the section cut out by summand
    /// `summand`.
    SectionLine { summand: usize, line: usize },
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveClass::FiberLine => f.write_str("FiberLine"),
            CurveClass::SectionLine { summand, line } => {
                write!(f, "SectionLine({summand},{line})")
            }
        }
    }
}
