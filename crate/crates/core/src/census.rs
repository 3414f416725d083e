//! Bounded exhaustive search for log Fano pairs `(X, D)` with `X` a scroll
//! of dimension `n`, `D` a single nonzero effective class, and the adjoint
//! class meeting an index or pseudoindex bound.
//!
//! The search space is split by scroll presentation ([`candidate_scrolls`]),
//! each part is searched independently ([`rows_for`]) and [`finish`] sorts
//! and classifies the merged rows, so any parallel schedule gives the same
//! output. Rows are ordered by scroll, then boundary class, using the
//! derived orders of [`ScrollVariety`] and [`DivisorClass`].
//!
//! Every scroll has Picard rank at least two, so Picard rank one pairs never
//! appear.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{index_of, BaseSpace, DivisorClass, ScrollVariety};
use crate::logfano::{report_for_class, FamilyId, FamilyInstance, PairReport, Params};
use crate::sections::{member_status, snc_obstruction, MemberStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CensusMode {
    IndexAtLeast(u64),
    PseudoindexAtLeast(u64),
}

impl CensusMode {
    /// Lower bound on the pseudoindex implied by the mode.
    pub fn threshold(self) -> u64 {
        match self {
            CensusMode::IndexAtLeast(r) | CensusMode::PseudoindexAtLeast(r) => r,
        }
    }

    fn accepts(self, index: u64, pseudoindex: u64) -> bool {
        match self {
            CensusMode::IndexAtLeast(r) => index >= r,
            CensusMode::PseudoindexAtLeast(i) => pseudoindex >= i,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CensusQuery {
    pub n: u32,
    pub mode: CensusMode,
    /// Largest twist coordinate of the normalized scroll.
    pub twist_cap: i64,
    /// Drop classes with no reduced member, or whose members are all too
    /// singular along a coordinate stratum to have simple normal crossings.
    pub require_reduced_member: bool,
    /// Prune with the necessary conditions of [`corollary_filter_1`] and
    /// [`corollary_filter_2`]. Never changes the output.
    pub apply_filters: bool,
}

impl CensusQuery {
    pub fn new(n: u32, mode: CensusMode, twist_cap: i64) -> Result<Self> {
        let q = CensusQuery {
            n,
            mode,
            twist_cap,
            require_reduced_member: true,
            apply_filters: true,
        };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::OutOfDomain(alloc::format!(
                "census needs n >= 2, got {}",
                self.n
            )));
        }
        if self.twist_cap < 0 {
            return Err(Error::OutOfDomain(alloc::format!(
                "census needs a non-negative twist cap, got {}",
                self.twist_cap
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub variety: ScrollVariety,
    pub boundary_class: DivisorClass,
    pub decomposition: MemberStatus,
    pub report: PairReport,
    /// Gallery instance with the same canonical pair, if any.
    pub matched: Option<(FamilyId, Params)>,
}

/// Necessary conditions on a log Fano pair over `P^s` with `D` of class
/// `(c; d)`, `d > 0`, and pseudoindex `iota >= t`: `d = 1`, `t = iota`,
/// `s >= iota - 1`, and when `s = iota - 1` also `a_1 = ... = a_{iota-1} = 0`
/// and `c = -a_iota`. Other bases are not constrained.
pub fn corollary_filter_1(x: &ScrollVariety, class: &DivisorClass, iota: u64) -> bool {
    let BaseSpace::ProjSpace(s) = x.base() else {
        return true;
    };
    let t = x.fiber_dim() as u64;
    let a = |i: usize| x.twists()[i][0];
    if class.fiber != 1 || t != iota || u64::from(s) + 1 < iota {
        return false;
    }
    if u64::from(s) + 1 == iota {
        let i = iota as usize;
        return (1..i).all(|k| a(k) == 0) && class.base[0] == -a(i);
    }
    true
}

/// Necessary conditions on a log Fano pair over `P^s` with `t = r + 1`,
/// `r >= 2`, index divisible by `r` and a reduced `D` of class `(c; d)`,
/// `d > 0`: `d = 2`, `s >= r - 1`, and when `s = r - 1` also
/// `a_1 = ... = a_{r-1} = 0` and `c = -a_r - a_{r+1}`.
pub fn corollary_filter_2(x: &ScrollVariety, class: &DivisorClass, r: u64) -> bool {
    let BaseSpace::ProjSpace(s) = x.base() else {
        return true;
    };
    let a = |i: usize| x.twists()[i][0];
    if class.fiber != 2 || u64::from(s) + 1 < r {
        return false;
    }
    if u64::from(s) + 1 == r {
        let i = r as usize;
        return (1..i).all(|k| a(k) == 0) && class.base[0] == -a(i) - a(i + 1);
    }
    true
}

/// The representative of `(X, class)` used for deduplication: products
/// `P^s x P^t` are written with `s <= t` (and the smaller class coordinate
/// first when `s = t`), and a `P1 x P1` base takes the smaller of the two
/// ruling orders.
pub fn canonical_form(x: &ScrollVariety, class: &DivisorClass) -> (ScrollVariety, DivisorClass) {
    let here = (x.clone(), class.clone());
    if let Some((s, t)) = x.product_factors() {
        let swap = s > t || (s == t && class.base[0] > class.fiber);
        if swap {
            return x.swap_product(class).unwrap_or(here);
        }
        return here;
    }
    match x.swap_rulings(class) {
        Some(other) if other < here => other,
        _ => here,
    }
}

fn bases(n: u32) -> Vec<BaseSpace> {
    let mut out: Vec<BaseSpace> = (1..n).map(BaseSpace::ProjSpace).collect();
    out.extend((3..n).map(BaseSpace::Quadric));
    if n >= 3 {
        out.push(BaseSpace::BiProjLine);
    }
    out
}

/// Non-decreasing sequences of `len` values from `0..=cap`.
fn monotone(len: usize, cap: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, cap: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=cap {
            cur.push(v);
            go(len, cap, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, cap, 0, &mut Vec::new(), &mut out);
    out
}

/// Normalized presentations of dimension `query.n` with twists at most the
/// cap, one per isomorphism class of product or ruling swap.
pub fn candidate_scrolls(query: &CensusQuery) -> Vec<ScrollVariety> {
    let cap = query.twist_cap as usize;
    let mut out = Vec::new();
    for base in bases(query.n) {
        let t = (query.n - base.dim()) as usize;
        match base {
            BaseSpace::BiProjLine => {
                let pairs: Vec<Vec<i64>> = (0..=cap)
                    .flat_map(|u| (0..=cap).map(move |v| vec![u as i64, v as i64]))
                    .collect();
                for pick in monotone(t + 1, pairs.len() - 1) {
                    let twists: Vec<Vec<i64>> = pick.iter().map(|&k| pairs[k].clone()).collect();
                    let normalized = (0..2).all(|j| twists.iter().any(|b| b[j] == 0));
                    if !normalized {
                        continue;
                    }
                    let x = ScrollVariety::new(base, twists).expect("valid presentation");
                    // Keep a ruling-swap orbit once; classes are swapped per row.
                    match x.swap_rulings(&DivisorClass::zero(2)) {
                        Some((y, _)) if y < x => {}
                        _ => out.push(x),
                    }
                }
            }
            _ => {
                for seq in monotone(t + 1, cap) {
                    if seq[0] != 0 {
                        continue;
                    }
                    let twists: Vec<i64> = seq.iter().map(|&v| v as i64).collect();
                    let x = ScrollVariety::rank_one(base, &twists).expect("valid presentation");
                    if let Some((s, t)) = x.product_factors() {
                        if s > t {
                            continue;
                        }
                    }
                    out.push(x);
                }
            }
        }
    }
    out.sort();
    out
}

/// Ranges of the base coordinates of a boundary class with fiber part `d`:
/// at least `-d * max twist` (effectivity) and below the anticanonical base
/// part (the adjoint is positive on the section of the zero-twist summand).
fn class_box(x: &ScrollVariety, d: i64) -> Vec<(i64, i64)> {
    let minus_k = x.anticanonical();
    (0..x.base().pic_rank())
        .map(|j| {
            let top = x.twists().iter().map(|b| b[j]).max().unwrap_or(0);
            (-d * top, minus_k.base[j] - 1)
        })
        .collect()
}

fn boxes(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    ranges.iter().fold(vec![Vec::new()], |acc, &(lo, hi)| {
        acc.into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect()
    })
}

fn passes_filters(
    query: &CensusQuery,
    x: &ScrollVariety,
    class: &DivisorClass,
    index: u64,
) -> bool {
    if !query.apply_filters || !x.base().is_proj_space() || class.fiber <= 0 {
        return true;
    }
    let t = x.fiber_dim() as u64;
    let threshold = query.mode.threshold();
    if threshold >= t && !corollary_filter_1(x, class, threshold) {
        return false;
    }
    if query.require_reduced_member
        && t >= 3
        && index.is_multiple_of(t - 1)
        && !corollary_filter_2(x, class, t - 1)
    {
        return false;
    }
    true
}

/// All rows on one scroll, unsorted and unclassified.
pub fn rows_for(query: &CensusQuery, x: &ScrollVariety) -> Vec<CensusRow> {
    let mut rows = Vec::new();
    let t = x.fiber_dim() as i64;
    for d in 0..=t + 1 {
        for base in boxes(&class_box(x, d)) {
            let class = DivisorClass::new(base, d);
            if class.is_zero() || canonical_form(x, &class) != (x.clone(), class.clone()) {
                continue;
            }
            let adjoint = &x.anticanonical() - &class;
            if !x.is_ample(&adjoint) || !x.is_effective(&class) {
                continue;
            }
            let index = index_of(&adjoint).expect("ample classes are nonzero");
            let pseudoindex = x.pseudoindex_of(&adjoint).expect("checked ample");
            if !query.mode.accepts(index, pseudoindex) {
                continue;
            }
            if !passes_filters(query, x, &class, index) {
                continue;
            }
            let decomposition = member_status(x, &class);
            if query.require_reduced_member
                && matches!(
                    decomposition,
                    MemberStatus::NoMember | MemberStatus::ForcedNonReduced
                )
            {
                continue;
            }
            if query.require_reduced_member && snc_obstruction(x, &class).is_some() {
                continue;
            }
            let report = report_for_class(x, adjoint).expect("nonzero adjoint");
            rows.push(CensusRow {
                variety: x.clone(),
                boundary_class: class,
                decomposition,
                report,
                matched: None,
            });
        }
    }
    rows
}

type Keyed = ((ScrollVariety, DivisorClass), FamilyInstance);

fn meets_mode(inst: &FamilyInstance, mode: CensusMode) -> bool {
    mode.accepts(inst.expected.index, inst.expected.pseudoindex)
}

/// Gallery instances of dimension `n` meeting the mode with twist
/// parameters up to `cap`. The first list has scroll models within the cap
/// (keyed by canonical form); the second cannot appear in a census.
fn gallery_targets(query: &CensusQuery) -> (Vec<Keyed>, Vec<FamilyInstance>) {
    let mut visible = Vec::new();
    let mut hidden = Vec::new();
    for id in FamilyId::ALL {
        for r in 2..=query.n {
            for params in id.params_up_to(r, query.twist_cap) {
                let Ok(inst) = crate::logfano::family(id, params) else {
                    continue;
                };
                if inst.dim() != query.n || !meets_mode(&inst, query.mode) {
                    continue;
                }
                match inst.scroll_model() {
                    Some((x, d)) if x.max_twist() <= query.twist_cap => {
                        visible.push((canonical_form(&x, &d), inst));
                    }
                    Some(_) => {}
                    None => hidden.push(inst),
                }
            }
        }
    }
    (visible, hidden)
}

/// Sorts merged rows into the documented order and fills in `matched`.
pub fn finish(query: &CensusQuery, mut rows: Vec<CensusRow>) -> Vec<CensusRow> {
    rows.sort_by(|a, b| (&a.variety, &a.boundary_class).cmp(&(&b.variety, &b.boundary_class)));
    let (visible, _) = gallery_targets(query);
    for row in &mut rows {
        let key = (row.variety.clone(), row.boundary_class.clone());
        row.matched = visible
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, inst)| (inst.id, inst.params));
    }
    rows
}

/// Sequential census.
pub fn enumerate(query: &CensusQuery) -> Result<Vec<CensusRow>> {
    query.validate()?;
    let rows = candidate_scrolls(query)
        .iter()
        .flat_map(|x| rows_for(query, x))
        .collect();
    Ok(finish(query, rows))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchReport {
    /// Row positions with their family.
    pub matched: Vec<(usize, FamilyId, Params)>,
    /// Row positions with no gallery counterpart.
    pub unmatched: Vec<usize>,
    /// Expected scroll instances missing from the rows.
    pub absent: Vec<(FamilyId, Params)>,
    /// Instances of this dimension and mode without a scroll model.
    pub out_of_scope: Vec<(FamilyId, Params)>,
}

impl MatchReport {
    pub fn is_exact(&self) -> bool {
        self.unmatched.is_empty() && self.absent.is_empty()
    }
}

/// Compares census rows with the gallery instances of the query's
/// dimension, mode and twist cap.
pub fn match_table(rows: &[CensusRow], query: &CensusQuery) -> MatchReport {
    let (visible, hidden) = gallery_targets(query);
    let mut matched = Vec::new();
    let mut unmatched = Vec::new();
    for (k, row) in rows.iter().enumerate() {
        match row.matched {
            Some((id, params)) => matched.push((k, id, params)),
            None => unmatched.push(k),
        }
    }
    let absent = visible
        .iter()
        .filter(|(_, inst)| {
            !matched
                .iter()
                .any(|&(_, id, p)| id == inst.id && p == inst.params)
        })
        .map(|(_, inst)| (inst.id, inst.params))
        .collect();
    MatchReport {
        matched,
        unmatched,
        absent,
        out_of_scope: hidden.iter().map(|i| (i.id, i.params)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: u32, twists: &[i64]) -> ScrollVariety {
        ScrollVariety::rank_one(BaseSpace::ProjSpace(s), twists).unwrap()
    }

    fn c(m: i64, n: i64) -> DivisorClass {
        DivisorClass::rank_one(m, n)
    }

    #[test]
    fn filter_one_examples() {
        for m in 0..4 {
            assert!(corollary_filter_1(&p(1, &[0, 0, m]), &c(-m, 1), 2));
            assert!(!corollary_filter_1(&p(1, &[0, 0, m]), &c(-m, 2), 2));
            assert!(!corollary_filter_1(&p(1, &[0, 1, m.max(1)]), &c(0, 1), 2));
        }
    }

    #[test]
    fn filter_two_examples() {
        for (m1, m2) in [(0, 1), (1, 1), (1, 3)] {
            let x = p(1, &[0, 0, m1, m2]);
            assert!(corollary_filter_2(&x, &c(-m1 - m2, 2), 2));
            assert!(!corollary_filter_2(&x, &c(-m1, 1), 2));
            let y = p(1, &[0, 1, m1.max(1), m2.max(1)]);
            for cc in -4..=2 {
                for d in 0..=3 {
                    assert!(!corollary_filter_2(&y, &c(cc, d), 2));
                }
            }
        }
    }

    #[test]
    fn canonical_forms() {
        let (x, d) = canonical_form(&p(3, &[0, 0]), &c(0, 1));
        assert_eq!((x, d), (p(1, &[0, 0, 0, 0]), c(1, 0)));
        let (x, d) = canonical_form(&p(2, &[0, 0, 0]), &c(2, 1));
        assert_eq!((x, d), (p(2, &[0, 0, 0]), c(1, 2)));
    }

    #[test]
    fn small_census() {
        let q = CensusQuery::new(3, CensusMode::PseudoindexAtLeast(2), 2).unwrap();
        let rows = enumerate(&q).unwrap();
        let keys: Vec<_> = rows
            .iter()
            .map(|r| (r.variety.clone(), r.boundary_class.clone()))
            .collect();
        let expected: Vec<_> = (0..=2).map(|m| (p(1, &[0, 0, m]), c(-m, 1))).collect();
        assert_eq!(keys, expected);
        let report = match_table(&rows, &q);
        assert!(report.is_exact(), "{report:?}");
        assert!(rows
            .iter()
            .all(|r| r.matched.map(|(id, _)| id) == Some(FamilyId::TwoRMinusOne)));
    }

    #[test]
    fn rejects_bad_queries() {
        assert!(CensusQuery::new(1, CensusMode::IndexAtLeast(2), 1).is_err());
        assert!(CensusQuery::new(4, CensusMode::IndexAtLeast(2), -1).is_err());
    }
}
