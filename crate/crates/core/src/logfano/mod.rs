//! Log Fano pairs `(X, D)` with `X` a scroll and `D` a sum of prime
//! boundary components, and the gallery of known families.

mod gallery;

use alloc::vec::Vec;

pub use gallery::{
    family, verify_family, Check, Expected, FamilyId, FamilyInstance, FamilyReport, FormulaData,
    Params, Realization,
};

use crate::error::{Error, Result};
use crate::geometry::{index_of, CurveClass, DivisorClass, Normalization, ScrollVariety};
use crate::grammar::RawComponent;

/// One prime component of the boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundarySpec {
    /// The sub-bundle `D_i` (normalized summand index), class `(-b_i; 1)`.
    SubBundle(usize),
    /// Pullback of a prime divisor in the `j`-th base generator class.
    BasePullback(usize),
    /// A general member of the given class.
    GeneralMember(DivisorClass),
}

impl BoundarySpec {
    pub fn class(&self, x: &ScrollVariety) -> Result<DivisorClass> {
        match self {
            BoundarySpec::SubBundle(i) => x.sub_bundle_class(*i),
            BoundarySpec::BasePullback(j) => x.base_class(*j),
            BoundarySpec::GeneralMember(c) => {
                x.check_class(c)?;
                Ok(c.clone())
            }
        }
    }

    /// Translates a component written against a raw presentation.
    pub fn from_raw(raw: &RawComponent, norm: &Normalization) -> Result<Self> {
        Ok(match raw {
            RawComponent::SubBundle(k) => BoundarySpec::SubBundle(norm.summand(*k)?),
            RawComponent::BasePullback(j) => BoundarySpec::BasePullback(*j),
            RawComponent::Member(c) => {
                norm.scroll.check_class(c)?;
                BoundarySpec::GeneralMember(norm.class(c))
            }
        })
    }
}

/// A scroll with a non-empty boundary of effective, pairwise distinct
/// components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogFanoPair {
    x: ScrollVariety,
    boundary: Vec<BoundarySpec>,
}

impl LogFanoPair {
    pub fn new(x: ScrollVariety, boundary: Vec<BoundarySpec>) -> Result<Self> {
        if boundary.is_empty() {
            return Err(Error::EmptyBoundary);
        }
        for (k, part) in boundary.iter().enumerate() {
            let class = part.class(&x)?;
            if let BoundarySpec::BasePullback(_) = part {
                // base_class already rejects out-of-range generators
            } else if !x.is_effective(&class) {
                return Err(Error::NotEffective(k));
            }
            if let Some(j) = boundary[..k].iter().position(|p| p == part) {
                return Err(Error::DuplicateComponent(j, k));
            }
        }
        Ok(LogFanoPair { x, boundary })
    }

    pub fn variety(&self) -> &ScrollVariety {
        &self.x
    }

    pub fn boundary(&self) -> &[BoundarySpec] {
        &self.boundary
    }

    pub fn boundary_class(&self) -> DivisorClass {
        self.boundary
            .iter()
            .map(|p| p.class(&self.x).expect("validated on construction"))
            .fold(DivisorClass::zero(self.x.base().pic_rank()), |acc, c| {
                &acc + &c
            })
    }
}

/// `-(K_X + D)`.
pub fn adjoint_class(pair: &LogFanoPair) -> DivisorClass {
    &pair.x.anticanonical() - &pair.boundary_class()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub adjoint_class: DivisorClass,
    pub is_log_fano: bool,
    /// Largest `r` with `adjoint = r L`.
    pub index: u64,
    /// Minimum adjoint degree over invariant curves; only when ample.
    pub pseudoindex: Option<u64>,
    /// `L` with `adjoint = index * L`.
    pub fundamental_class: DivisorClass,
    /// An invariant curve of non-positive adjoint degree, when not ample.
    pub witness: Option<(CurveClass, i64)>,
}

pub fn check_pair(pair: &LogFanoPair) -> Result<PairReport> {
    report_for_class(&pair.x, adjoint_class(pair))
}

pub(crate) fn report_for_class(x: &ScrollVariety, adjoint: DivisorClass) -> Result<PairReport> {
    let index = index_of(&adjoint)?;
    let witness = x.ampleness_witness(&adjoint);
    let is_log_fano = witness.is_none();
    let pseudoindex = if is_log_fano {
        Some(x.pseudoindex_of(&adjoint)?)
    } else {
        None
    };
    Ok(PairReport {
        fundamental_class: adjoint.exact_div(index as i64),
        adjoint_class: adjoint,
        is_log_fano,
        index,
        pseudoindex,
        witness,
    })
}

/// Adjunction along a sub-bundle component `D_k` (boundary entry `i`):
/// restricting `-(K_X + D)` to `D_k` must give `-(K_{D_k} + E)` where `E`,
/// the conductor, is cut out by the other components. The right-hand side
/// is assembled on `D_k` itself: its own anticanonical class and, for
/// sub-bundle and base components, their intrinsic classes there.
pub fn conductor_adjunction_check(pair: &LogFanoPair, i: usize) -> Result<bool> {
    let k = match pair.boundary.get(i) {
        Some(BoundarySpec::SubBundle(k)) => *k,
        Some(_) => return Err(Error::NotSubBundle(i)),
        None => {
            return Err(Error::ComponentOutOfRange {
                index: i,
                count: pair.boundary.len(),
            })
        }
    };
    let x = &pair.x;
    let (sub, lhs) = x.restrict_to_subbundle(&adjoint_class(pair), k)?;
    let norm = x.delete_summand(k)?;

    let mut rhs = sub.anticanonical();
    for (j, part) in pair.boundary.iter().enumerate() {
        if j == i {
            continue;
        }
        let on_sub = match part {
            BoundarySpec::SubBundle(l) => {
                // D_l meets D_k in the sub-bundle of D_k dropping the same
                // summand; find where it went after deleting k.
                let raw = if *l < k { *l } else { *l - 1 };
                sub.sub_bundle_class(norm.summand(raw)?)?
            }
            BoundarySpec::BasePullback(h) => sub.base_class(*h)?,
            BoundarySpec::GeneralMember(c) => norm.class(c),
        };
        rhs = &rhs - &on_sub;
    }
    Ok(lhs == rhs)
}
