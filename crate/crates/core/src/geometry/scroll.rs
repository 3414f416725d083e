use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::base::BaseSpace;
use super::class::{CurveClass, DivisorClass};
use crate::error::{Error, Result};

/// `P(O(b_0) + ... + O(b_t))` over a [`BaseSpace`], with twists stored in
/// normalized form: the componentwise minimum is subtracted and the twists
/// are sorted lexicographically. Two values are the same bundle presentation
/// exactly when they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScrollVariety {
    base: BaseSpace,
    twists: Vec<Vec<i64>>,
}

/// Result of normalizing raw twists, keeping enough data to translate
/// classes and summand indices written against the raw presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub scroll: ScrollVariety,
    /// Vector subtracted from every raw twist.
    pub shift: Vec<i64>,
    /// `position[k]` is the normalized index of raw summand `k`.
    pub position: Vec<usize>,
}

impl Normalization {
    /// `O(m; n)` on the raw presentation is `O(m + n * shift; n)` after
    /// twisting the bundle by `-shift`.
    pub fn class(&self, raw: &DivisorClass) -> DivisorClass {
        DivisorClass {
            base: raw
                .base
                .iter()
                .zip(&self.shift)
                .map(|(m, v)| m + raw.fiber * v)
                .collect(),
            fiber: raw.fiber,
        }
    }

    pub fn summand(&self, raw_index: usize) -> Result<usize> {
        self.position
            .get(raw_index)
            .copied()
            .ok_or(Error::SummandOutOfRange {
                index: raw_index,
                count: self.position.len(),
            })
    }
}

impl ScrollVariety {
    pub fn new(base: BaseSpace, twists: Vec<Vec<i64>>) -> Result<Self> {
        Ok(Self::normalize(base, twists)?.scroll)
    }

    /// Shorthand for bases of Picard rank one.
    pub fn rank_one(base: BaseSpace, twists: &[i64]) -> Result<Self> {
        Self::new(base, twists.iter().map(|&a| vec![a]).collect())
    }

    pub fn normalize(base: BaseSpace, twists: Vec<Vec<i64>>) -> Result<Normalization> {
        base.validate()?;
        if twists.len() < 2 {
            return Err(Error::TooFewSummands(twists.len()));
        }
        let rank = base.pic_rank();
        for (index, b) in twists.iter().enumerate() {
            if b.len() != rank {
                return Err(Error::TwistLength {
                    index,
                    found: b.len(),
                    expected: rank,
                });
            }
        }
        let shift: Vec<i64> = (0..rank)
            .map(|j| twists.iter().map(|b| b[j]).min().unwrap_or(0))
            .collect();
        let mut tagged: Vec<(Vec<i64>, usize)> = twists
            .into_iter()
            .enumerate()
            .map(|(k, b)| (b.iter().zip(&shift).map(|(x, v)| x - v).collect(), k))
            .collect();
        tagged.sort();
        let mut position = vec![0; tagged.len()];
        for (new, (_, raw)) in tagged.iter().enumerate() {
            position[*raw] = new;
        }
        let twists = tagged.into_iter().map(|(b, _)| b).collect();
        Ok(Normalization {
            scroll: ScrollVariety { base, twists },
            shift,
            position,
        })
    }

    pub fn base(&self) -> BaseSpace {
        self.base
    }

    pub fn twists(&self) -> &[Vec<i64>] {
        &self.twists
    }

    /// Relative dimension `t`; the bundle has `t + 1` summands.
    pub fn fiber_dim(&self) -> usize {
        self.twists.len() - 1
    }

    pub fn dim(&self) -> u32 {
        self.base.dim() + self.fiber_dim() as u32
    }

    pub fn picard_rank(&self) -> usize {
        self.base.pic_rank() + 1
    }

    /// Largest twist coordinate (twists are non-negative once normalized).
    pub fn max_twist(&self) -> i64 {
        self.twists.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn check_class(&self, class: &DivisorClass) -> Result<()> {
        if class.base.len() != self.base.pic_rank() {
            return Err(Error::ClassLength {
                found: class.base.len(),
                expected: self.base.pic_rank(),
            });
        }
        Ok(())
    }

    /// `-K_X = (-K_V - sum b_i; t + 1)`.
    pub fn anticanonical(&self) -> DivisorClass {
        let mut base = self.base.minus_k();
        for b in &self.twists {
            for (m, x) in base.iter_mut().zip(b) {
                *m -= x;
            }
        }
        DivisorClass {
            base,
            fiber: self.twists.len() as i64,
        }
    }

    /// Class `(-b_i; 1)` of the sub-bundle obtained by dropping summand `i`.
    pub fn sub_bundle_class(&self, i: usize) -> Result<DivisorClass> {
        let b = self.twists.get(i).ok_or(Error::SummandOutOfRange {
            index: i,
            count: self.twists.len(),
        })?;
        Ok(DivisorClass {
            base: b.iter().map(|x| -x).collect(),
            fiber: 1,
        })
    }

    /// Pullback of the `j`-th base generator.
    pub fn base_class(&self, j: usize) -> Result<DivisorClass> {
        let rank = self.base.pic_rank();
        if j >= rank {
            return Err(Error::LineOutOfRange { index: j, rank });
        }
        let mut base = vec![0; rank];
        base[j] = 1;
        Ok(DivisorClass { base, fiber: 0 })
    }

    /// Class of `sum_{i=1}^t c_i D_i + d H` over a projective space.
    pub fn divisor_from_components(&self, c: &[i64], d: i64) -> Result<DivisorClass> {
        if !self.base.is_proj_space() {
            return Err(Error::UnsupportedBase);
        }
        if c.len() != self.fiber_dim() {
            return Err(Error::CoefficientLength {
                found: c.len(),
                expected: self.fiber_dim(),
            });
        }
        let m = d - c
            .iter()
            .zip(&self.twists[1..])
            .map(|(ci, b)| ci * b[0])
            .sum::<i64>();
        Ok(DivisorClass::rank_one(m, c.iter().sum()))
    }

    pub fn invariant_curves(&self) -> Vec<CurveClass> {
        let mut curves = vec![CurveClass::FiberLine];
        for summand in 0..self.twists.len() {
            for line in 0..self.base.pic_rank() {
                curves.push(CurveClass::SectionLine { summand, line });
            }
        }
        curves
    }

    /// Intersection number of `class` with an invariant curve. The curve
    /// must come from [`Self::invariant_curves`] and the class must have the
    /// right rank.
    pub fn degree(&self, class: &DivisorClass, curve: CurveClass) -> i64 {
        match curve {
            CurveClass::FiberLine => class.fiber,
            CurveClass::SectionLine { summand, line } => {
                class.base[line] + class.fiber * self.twists[summand][line]
            }
        }
    }

    pub fn degrees<'a>(
        &'a self,
        class: &'a DivisorClass,
    ) -> impl Iterator<Item = (CurveClass, i64)> + 'a {
        self.invariant_curves()
            .into_iter()
            .map(move |c| (c, self.degree(class, c)))
    }

    pub fn is_nef(&self, class: &DivisorClass) -> bool {
        self.degrees(class).all(|(_, d)| d >= 0)
    }

    pub fn is_ample(&self, class: &DivisorClass) -> bool {
        self.degrees(class).all(|(_, d)| d > 0)
    }

    /// Some monomial of the Cox ring has this degree.
    pub fn is_effective(&self, class: &DivisorClass) -> bool {
        crate::sections::has_section(self, class)
    }

    /// First invariant curve on which `class` has non-positive degree.
    pub fn ampleness_witness(&self, class: &DivisorClass) -> Option<(CurveClass, i64)> {
        self.degrees(class).find(|&(_, d)| d <= 0)
    }

    /// Minimum degree over invariant curves of an ample class.
    pub fn pseudoindex_of(&self, class: &DivisorClass) -> Result<u64> {
        if !self.is_ample(class) {
            return Err(Error::NotAmple(format!("{class}")));
        }
        let min = self.degrees(class).map(|(_, d)| d).min().unwrap_or(0);
        Ok(min as u64)
    }

    /// Drops summand `i`, returning the sub-bundle and how the remaining
    /// summands moved.
    pub fn delete_summand(&self, i: usize) -> Result<Normalization> {
        if i >= self.twists.len() {
            return Err(Error::SummandOutOfRange {
                index: i,
                count: self.twists.len(),
            });
        }
        if self.fiber_dim() < 2 {
            return Err(Error::DimensionUnderflow);
        }
        let mut twists = self.twists.clone();
        twists.remove(i);
        ScrollVariety::normalize(self.base, twists)
    }

    /// Restriction of `class` to the sub-bundle `D_i`, in that sub-bundle's
    /// normalized coordinates.
    pub fn restrict_to_subbundle(
        &self,
        class: &DivisorClass,
        i: usize,
    ) -> Result<(ScrollVariety, DivisorClass)> {
        self.check_class(class)?;
        let norm = self.delete_summand(i)?;
        let restricted = norm.class(class);
        Ok((norm.scroll, restricted))
    }

    /// `(s, t)` when this is the product `P^s x P^t`.
    pub fn product_factors(&self) -> Option<(u32, u32)> {
        match self.base {
            BaseSpace::ProjSpace(s) if self.twists.iter().flatten().all(|&x| x == 0) => {
                Some((s, self.fiber_dim() as u32))
            }
            _ => None,
        }
    }

    /// The same product viewed as a bundle over the other factor; the class
    /// coordinates swap.
    pub fn swap_product(&self, class: &DivisorClass) -> Option<(ScrollVariety, DivisorClass)> {
        let (s, t) = self.product_factors()?;
        let swapped = ScrollVariety {
            base: BaseSpace::ProjSpace(t),
            twists: vec![vec![0]; s as usize + 1],
        };
        Some((swapped, DivisorClass::rank_one(class.fiber, class.base[0])))
    }

    /// Exchanges the two rulings of a `P1 x P1` base.
    pub fn swap_rulings(&self, class: &DivisorClass) -> Option<(ScrollVariety, DivisorClass)> {
        if self.base != BaseSpace::BiProjLine {
            return None;
        }
        let twists = self.twists.iter().map(|b| vec![b[1], b[0]]).collect();
        let scroll = ScrollVariety::new(BaseSpace::BiProjLine, twists).ok()?;
        let class = DivisorClass::new(vec![class.base[1], class.base[0]], class.fiber);
        Some((scroll, class))
    }

    /// Rays of the nef cone: the base generators and `(0; 1)`.
    pub fn nef_cone_generators(&self) -> Vec<DivisorClass> {
        let rank = self.base.pic_rank();
        let mut gens: Vec<DivisorClass> = (0..rank)
            .map(|j| self.base_class(j).expect("j < rank"))
            .collect();
        gens.push(DivisorClass::new(vec![0; rank], 1));
        gens
    }

    /// Extremal rays of the effective cone. Every invariant prime divisor is
    /// a base pullback or a sub-bundle `(-b_i; 1)`; a sub-bundle is dropped
    /// when some convex combination of two other twists dominates its twist.
    pub fn effective_cone_generators(&self) -> Vec<DivisorClass> {
        let rank = self.base.pic_rank();
        let mut gens: Vec<DivisorClass> = (0..rank)
            .map(|j| self.base_class(j).expect("j < rank"))
            .collect();
        let mut distinct: Vec<&Vec<i64>> = self.twists.iter().collect();
        distinct.dedup();
        for (k, v) in distinct.iter().enumerate() {
            let others: Vec<&Vec<i64>> = distinct
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, b)| *b)
                .collect();
            let dominated = others
                .iter()
                .any(|u| others.iter().any(|w| segment_dominates(u, w, v)));
            if !dominated {
                gens.push(DivisorClass {
                    base: v.iter().map(|x| -x).collect(),
                    fiber: 1,
                });
            }
        }
        gens
    }
}

/// Whether `lambda * u + (1 - lambda) * w >= v` componentwise for some
/// `lambda` in `[0, 1]`.
fn segment_dominates(u: &[i64], w: &[i64], v: &[i64]) -> bool {
    // Feasible lambda interval [lo, hi] as fractions num/den with den > 0.
    let (mut lo, mut hi) = ((0i128, 1i128), (1i128, 1i128));
    for ((&uj, &wj), &vj) in u.iter().zip(w).zip(v) {
        let slope = i128::from(uj - wj);
        let need = i128::from(vj - wj);
        match slope.cmp(&0) {
            core::cmp::Ordering::Equal => {
                if need > 0 {
                    return false;
                }
            }
            core::cmp::Ordering::Greater => {
                if need * lo.1 > lo.0 * slope {
                    lo = (need, slope);
                }
            }
            core::cmp::Ordering::Less => {
                let (num, den) = (-need, -slope);
                if num * hi.1 < hi.0 * den {
                    hi = (num, den);
                }
            }
        }
    }
    lo.0 * hi.1 <= hi.0 * lo.1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: u32, twists: &[i64]) -> ScrollVariety {
        ScrollVariety::rank_one(BaseSpace::ProjSpace(s), twists).unwrap()
    }

    fn q(n: u32, twists: &[i64]) -> ScrollVariety {
        ScrollVariety::rank_one(BaseSpace::Quadric(n), twists).unwrap()
    }

    fn c(m: i64, n: i64) -> DivisorClass {
        DivisorClass::rank_one(m, n)
    }

    #[test]
    fn normalization_shifts_and_sorts() {
        let norm = ScrollVariety::normalize(
            BaseSpace::Quadric(3),
            vec![vec![0], vec![0], vec![0], vec![-1]],
        )
        .unwrap();
        assert_eq!(norm.scroll, q(3, &[0, 1, 1, 1]));
        assert_eq!(norm.shift, vec![-1]);
        assert_eq!(norm.position, vec![1, 2, 3, 0]);
        assert_eq!(norm.class(&c(1, 1)), c(0, 1));
        assert_eq!(p(2, &[3, 1, 1]).twists(), &[vec![0], vec![0], vec![2]]);
    }

    #[test]
    fn rejects_malformed_twists() {
        assert_eq!(
            ScrollVariety::rank_one(BaseSpace::ProjSpace(2), &[0]),
            Err(Error::TooFewSummands(1))
        );
        assert!(matches!(
            ScrollVariety::new(BaseSpace::BiProjLine, vec![vec![0], vec![1, 1]]),
            Err(Error::TwistLength { index: 0, .. })
        ));
        assert_eq!(
            ScrollVariety::rank_one(BaseSpace::Quadric(2), &[0, 0]),
            Err(Error::QuadricTooSmall(2))
        );
    }

    #[test]
    fn anticanonical_examples() {
        assert_eq!(p(2, &[0, 0, 1]).anticanonical(), c(2, 3));
        for (s, t) in [(1u32, 1usize), (2, 3), (4, 2)] {
            let x = p(s, &vec![0; t + 1]);
            assert_eq!(x.anticanonical(), c(i64::from(s) + 1, t as i64 + 1));
        }
        assert_eq!(q(3, &[0, 0, 0, 2]).anticanonical(), c(1, 4));
        // Same bundle written with shifted twists.
        assert_eq!(q(3, &[5, 5, 5, 7]).anticanonical(), c(1, 4));
    }

    #[test]
    fn divisor_from_components_examples() {
        assert_eq!(
            p(2, &[0, 0, 1]).divisor_from_components(&[1, 0], 0),
            Ok(c(0, 1))
        );
        assert_eq!(
            p(3, &[0, 1, 2]).divisor_from_components(&[0, 0], 3),
            Ok(c(3, 0))
        );
        assert_eq!(
            p(1, &[0, 0, 1, 2]).divisor_from_components(&[0, 1, 1], 0),
            Ok(c(-3, 2))
        );
        assert_eq!(
            q(3, &[0, 1]).divisor_from_components(&[1], 0),
            Err(Error::UnsupportedBase)
        );
    }

    #[test]
    fn degree_examples() {
        let x = p(2, &[0, 0, 2]);
        assert_eq!(x.degree(&c(5, 7), CurveClass::FiberLine), 7);
        assert_eq!(
            x.degree(
                &c(5, 7),
                CurveClass::SectionLine {
                    summand: 0,
                    line: 0
                }
            ),
            5
        );
        assert_eq!(
            x.degree(
                &c(1, 1),
                CurveClass::SectionLine {
                    summand: 2,
                    line: 0
                }
            ),
            3
        );
        // Restricting to the section of summand 2 gives the bundle P[P2; 2]
        // whose O(1; 1) has degree 1 + 2 on a line.
        let (sub, restricted) = x.restrict_to_subbundle(&c(1, 1), 0).unwrap();
        assert_eq!(sub, p(2, &[0, 2]));
        assert_eq!(
            sub.degree(
                &restricted,
                CurveClass::SectionLine {
                    summand: 1,
                    line: 0
                }
            ),
            3
        );
    }

    #[test]
    fn cone_examples() {
        let x = p(2, &[0, 0, 1]);
        assert!(x.is_ample(&c(1, 1)));
        assert!(x.is_nef(&c(0, 1)) && !x.is_ample(&c(0, 1)));
        let norm = ScrollVariety::normalize(
            BaseSpace::Quadric(3),
            vec![vec![0], vec![0], vec![0], vec![-1]],
        )
        .unwrap();
        let y = norm.scroll.clone();
        assert!(!y.is_ample(&norm.class(&c(1, 1))));
        assert_eq!(
            y.ampleness_witness(&c(0, 3)),
            Some((
                CurveClass::SectionLine {
                    summand: 0,
                    line: 0
                },
                0
            ))
        );
    }

    #[test]
    fn pseudoindex_examples() {
        assert_eq!(p(2, &[0, 0, 1]).pseudoindex_of(&c(2, 2)), Ok(2));
        assert_eq!(p(3, &[0, 0]).pseudoindex_of(&c(4, 2)), Ok(2));
        assert_eq!(p(1, &[0, 0, 2]).pseudoindex_of(&c(1, 1)), Ok(1));
        assert!(matches!(
            p(1, &[0, 2]).pseudoindex_of(&c(0, 1)),
            Err(Error::NotAmple(_))
        ));
    }

    #[test]
    fn restriction_examples() {
        let x = p(1, &[0, 0, 1, 2]);
        assert_eq!(
            x.restrict_to_subbundle(&c(2, 2), 3),
            Ok((p(1, &[0, 0, 1]), c(2, 2)))
        );
        let y = p(2, &[0, 0, 1]);
        assert_eq!(
            y.restrict_to_subbundle(&c(4, -3), 1),
            Ok((p(2, &[0, 1]), c(4, -3)))
        );
        let z = p(1, &[0, 2, 2]);
        assert_eq!(
            z.restrict_to_subbundle(&c(1, 1), 0),
            Ok((p(1, &[0, 0]), c(3, 1)))
        );
        assert_eq!(
            p(1, &[0, 3]).restrict_to_subbundle(&c(1, 1), 0),
            Err(Error::DimensionUnderflow)
        );
    }

    #[test]
    fn cone_generators() {
        let x = p(2, &[0, 0, 3]);
        assert_eq!(x.nef_cone_generators(), vec![c(1, 0), c(0, 1)]);
        assert_eq!(x.effective_cone_generators(), vec![c(1, 0), c(-3, 1)]);
        let y = ScrollVariety::new(
            BaseSpace::BiProjLine,
            vec![vec![0, 0], vec![1, 0], vec![0, 1]],
        )
        .unwrap();
        // (0,0) lies under the segment from (1,0) to (0,1).
        assert_eq!(
            y.effective_cone_generators(),
            vec![
                DivisorClass::new(vec![1, 0], 0),
                DivisorClass::new(vec![0, 1], 0),
                DivisorClass::new(vec![0, -1], 1),
                DivisorClass::new(vec![-1, 0], 1),
            ]
        );
    }

    #[test]
    fn product_presentations() {
        let x = p(1, &[0, 0, 0]);
        assert_eq!(x.product_factors(), Some((1, 2)));
        let (y, k) = x.swap_product(&x.anticanonical()).unwrap();
        assert_eq!(y, p(2, &[0, 0]));
        assert_eq!(k, y.anticanonical());
        assert_eq!(p(1, &[0, 1]).product_factors(), None);
    }
}
