//! Section counts `h^0(X, O(m; n))` and the monomial structure behind them.
//!
//! The Cox ring of `X = P[V; b_0, ..., b_t]` is the Cox ring of `V` with
//! fiber variables `y_0, ..., y_t` adjoined, `deg y_i = (-b_i; 1)`. A class
//! `(m; n)` is spanned by the monomials `y^Q * s` with `Q >= 0`, `|Q| = n`
//! and `s` a section of `O_V(m + sum Q_i b_i)`. [`h0_scroll`] sums over those
//! exponent vectors; [`h0_lattice`] counts the lattice points of the
//! polytope written in the coordinates `(P, Q)` of a projective-space base.
//! The two agree, and the tests check that exhaustively.
//!
//! Exponent vectors are always visited in ascending lexicographic order.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{BaseSpace, DivisorClass, ScrollVariety};

/// Running sum that stays in `u128` until it overflows.
#[derive(Default)]
struct Tally {
    small: u128,
    spill: BigUint,
}

impl Tally {
    fn add_small(&mut self, x: u128) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.spill += self.small;
                self.small = x;
            }
        }
    }

    fn add(&mut self, x: Count) {
        match x {
            Count::Small(v) => self.add_small(v),
            Count::Big(v) => self.spill += v,
        }
    }

    fn finish(self) -> BigUint {
        self.spill + self.small
    }
}

enum Count {
    Small(u128),
    Big(BigUint),
}

impl Count {
    fn is_zero(&self) -> bool {
        match self {
            Count::Small(v) => *v == 0,
            Count::Big(v) => v.is_zero(),
        }
    }

    fn into_big(self) -> BigUint {
        match self {
            Count::Small(v) => BigUint::from(v),
            Count::Big(v) => v,
        }
    }
}

fn binomial_small(n: i64, k: i64) -> Option<u128> {
    if k < 0 || n < k {
        return Some(0);
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 1..=k {
        // acc * (n - k + i) is divisible by i.
        acc = acc.checked_mul(n - k + i)? / i;
    }
    Some(acc)
}

fn binomial_count(n: i64, k: i64) -> Count {
    match binomial_small(n, k) {
        Some(v) => Count::Small(v),
        None => Count::Big(num_integer::binomial(
            BigUint::from(n as u64),
            BigUint::from(k as u64),
        )),
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    binomial_count(n, k).into_big()
}

fn h0_base_count(base: BaseSpace, m: &[i64]) -> Count {
    match base {
        BaseSpace::ProjSpace(s) => {
            let s = i64::from(s);
            binomial_count(m[0] + s, s)
        }
        BaseSpace::Quadric(q) => {
            let (m, q) = (m[0], i64::from(q));
            if m < 0 {
                return Count::Small(0);
            }
            match (
                binomial_small(m + q + 1, q + 1),
                binomial_small(m + q - 1, q + 1),
            ) {
                (Some(a), Some(b)) => Count::Small(a - b),
                _ => Count::Big(binomial(m + q + 1, q + 1) - binomial(m + q - 1, q + 1)),
            }
        }
        BaseSpace::BiProjLine => {
            if m[0] < 0 || m[1] < 0 {
                return Count::Small(0);
            }
            let (a, b) = ((m[0] + 1) as u128, (m[1] + 1) as u128);
            match a.checked_mul(b) {
                Some(v) => Count::Small(v),
                None => Count::Big(BigUint::from(a) * BigUint::from(b)),
            }
        }
    }
}

/// `h^0(V, O_V(m))` on the base.
pub fn h0_base(base: BaseSpace, m: &[i64]) -> BigUint {
    h0_base_count(base, m).into_big()
}

/// Visits every `Q >= 0` of length `len` with `|Q| = total`, in ascending
/// lexicographic order.
pub fn for_each_exponent<F>(len: usize, total: u64, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    fn rec<F: FnMut(&[u64]) -> ControlFlow<()>>(
        q: &mut Vec<u64>,
        pos: usize,
        left: u64,
        f: &mut F,
    ) -> ControlFlow<()> {
        if pos + 1 == q.len() {
            q[pos] = left;
            return f(q);
        }
        for v in 0..=left {
            q[pos] = v;
            rec(q, pos + 1, left - v, f)?;
        }
        ControlFlow::Continue(())
    }
    if len == 0 {
        return if total == 0 {
            f(&[])
        } else {
            ControlFlow::Continue(())
        };
    }
    let mut q = vec![0; len];
    rec(&mut q, 0, total, &mut f)
}

fn base_degree(x: &ScrollVariety, class: &DivisorClass, q: &[u64], out: &mut [i64]) {
    out.copy_from_slice(&class.base);
    for (qi, b) in q.iter().zip(x.twists()) {
        for (o, bj) in out.iter_mut().zip(b) {
            *o += *qi as i64 * bj;
        }
    }
}

/// `h^0(X, O(m; n))` as a sum of base section counts over fiber exponents.
pub fn h0_scroll(x: &ScrollVariety, class: &DivisorClass) -> BigUint {
    if class.fiber < 0 {
        return BigUint::zero();
    }
    let mut tally = Tally::default();
    let mut deg = vec![0; class.base.len()];
    let _ = for_each_exponent(x.twists().len(), class.fiber as u64, |q| {
        base_degree(x, class, q, &mut deg);
        tally.add(h0_base_count(x.base(), &deg));
        ControlFlow::Continue(())
    });
    tally.finish()
}

/// Whether `O(m; n)` has a non-zero section, stopping at the first monomial.
pub fn has_section(x: &ScrollVariety, class: &DivisorClass) -> bool {
    if class.fiber < 0 {
        return false;
    }
    let mut deg = vec![0; class.base.len()];
    for_each_exponent(x.twists().len(), class.fiber as u64, |q| {
        base_degree(x, class, q, &mut deg);
        if deg.iter().all(|&m| m >= 0) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_break()
}

/// Number of `(P_1..P_s) >= 0` with `sum P <= limit`, for every limit up to
/// `max`, built by prefix sums one variable at a time.
fn simplex_counts(s: u32, max: i64) -> Vec<Count> {
    let len = max as usize + 1;
    let mut small: Option<Vec<u128>> = Some(vec![1; len]);
    for _ in 0..s {
        let prev = small.as_ref().expect("checked");
        let mut next = Vec::with_capacity(len);
        let mut acc: u128 = 0;
        let mut overflow = false;
        for v in prev {
            match acc.checked_add(*v) {
                Some(a) => {
                    acc = a;
                    next.push(a);
                }
                None => {
                    overflow = true;
                    break;
                }
            }
        }
        if overflow {
            small = None;
            break;
        }
        small = Some(next);
    }
    if let Some(row) = small {
        return row.into_iter().map(Count::Small).collect();
    }
    let mut row: Vec<BigUint> = vec![BigUint::from(1u8); len];
    for _ in 0..s {
        let mut acc = BigUint::zero();
        for v in row.iter_mut() {
            acc += &*v;
            *v = acc.clone();
        }
    }
    row.into_iter().map(Count::Big).collect()
}

/// Lattice-point count for `D = sum_{i=1}^t c_i D_i + d H` over `P^s`:
/// tuples `(P_1..P_s, Q_1..Q_t)` with `-sum Q >= 0`, `Q_i >= -c_i`,
/// `-sum P + sum a_j Q_j >= -d` and `P >= 0`.
pub fn h0_lattice(x: &ScrollVariety, c: &[i64], d: i64) -> Result<BigUint> {
    let s = match x.base() {
        BaseSpace::ProjSpace(s) => s,
        _ => return Err(Error::UnsupportedBase),
    };
    let t = x.fiber_dim();
    if c.len() != t {
        return Err(Error::CoefficientLength {
            found: c.len(),
            expected: t,
        });
    }
    let a: Vec<i64> = x.twists()[1..].iter().map(|b| b[0]).collect();
    // suffix[i] = sum_{k >= i} c_k: the most the later Q_k can subtract.
    let mut suffix = vec![0i64; t + 1];
    for i in (0..t).rev() {
        suffix[i] = suffix[i + 1] + c[i];
    }

    // Collect the P-budgets -sum... i.e. d + sum a_j Q_j over all valid Q.
    let mut budgets: Vec<i64> = Vec::new();
    fn rec(
        i: usize,
        sum_q: i64,
        budget: i64,
        a: &[i64],
        c: &[i64],
        suffix: &[i64],
        out: &mut Vec<i64>,
    ) {
        if i == a.len() {
            if sum_q <= 0 && budget >= 0 {
                out.push(budget);
            }
            return;
        }
        let lo = -c[i];
        let hi = -sum_q + suffix[i + 1];
        let mut q = lo;
        while q <= hi {
            rec(i + 1, sum_q + q, budget + a[i] * q, a, c, suffix, out);
            q += 1;
        }
    }
    rec(0, 0, d, &a, c, &suffix, &mut budgets);

    let max = budgets.iter().copied().max().unwrap_or(-1);
    if max < 0 {
        return Ok(BigUint::zero());
    }
    let counts = simplex_counts(s, max);
    let mut tally = Tally::default();
    for budget in budgets {
        match &counts[budget as usize] {
            Count::Small(v) => tally.add_small(*v),
            Count::Big(v) => tally.spill += v,
        }
    }
    Ok(tally.finish())
}

/// Monomial data of a class: how many sections, and how often each fiber
/// variable divides every one of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSummary {
    pub count: BigUint,
    /// `mu_i`: minimum exponent of `y_i` over all monomials of the class.
    pub forced_multiplicities: Vec<u64>,
    /// Class minus `sum mu_i [D_i]`.
    pub residual_class: DivisorClass,
}

pub fn monomial_summary(x: &ScrollVariety, class: &DivisorClass) -> MonomialSummary {
    let len = x.twists().len();
    let mut tally = Tally::default();
    let mut mins: Option<Vec<u64>> = None;
    if class.fiber >= 0 {
        let mut deg = vec![0; class.base.len()];
        let _ = for_each_exponent(len, class.fiber as u64, |q| {
            base_degree(x, class, q, &mut deg);
            let here = h0_base_count(x.base(), &deg);
            if !here.is_zero() {
                tally.add(here);
                match &mut mins {
                    None => mins = Some(q.to_vec()),
                    Some(m) => m.iter_mut().zip(q).for_each(|(a, b)| *a = (*a).min(*b)),
                }
            }
            ControlFlow::Continue(())
        });
    }
    let forced = mins.unwrap_or_else(|| vec![0; len]);
    let mut residual = class.clone();
    for (mu, b) in forced.iter().zip(x.twists()) {
        let mu = *mu as i64;
        residual.fiber -= mu;
        for (m, bj) in residual.base.iter_mut().zip(b) {
            *m += mu * bj;
        }
    }
    MonomialSummary {
        count: tally.finish(),
        forced_multiplicities: forced,
        residual_class: residual,
    }
}

/// What the monomial structure forces on members of a linear system.
/// `Unconstrained` only means none of the checked obstructions applies.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MemberStatus {
    NoMember,
    ForcedNonReduced,
    ForcedDecomposition(Vec<DivisorClass>),
    Unconstrained,
}

/// Classifies the members of `|class|`:
///
/// * no monomial at all gives `NoMember`;
/// * over bases other than `P^s` anything else is `Unconstrained`;
/// * some `y_i` dividing every monomial at least twice gives
///   `ForcedNonReduced`;
/// * over `P^s`, the class `(-a_t - a_{t-1}; 2)` with `a_{t-2} < a_t` splits
///   every reduced member into the two top sub-bundles.
pub fn member_status(x: &ScrollVariety, class: &DivisorClass) -> MemberStatus {
    let summary = monomial_summary(x, class);
    if summary.count.is_zero() {
        return MemberStatus::NoMember;
    }
    if !x.base().is_proj_space() {
        return MemberStatus::Unconstrained;
    }
    if summary.forced_multiplicities.iter().any(|&mu| mu >= 2) {
        return MemberStatus::ForcedNonReduced;
    }
    let t = x.fiber_dim();
    if t >= 2 && class.fiber == 2 {
        let a = |i: usize| x.twists()[i][0];
        if class.base[0] == -a(t) - a(t - 1) && a(t - 2) < a(t) {
            return MemberStatus::ForcedDecomposition(vec![
                DivisorClass::rank_one(-a(t), 1),
                DivisorClass::rank_one(-a(t - 1), 1),
            ]);
        }
    }
    MemberStatus::Unconstrained
}

fn monomial_exponents(x: &ScrollVariety, class: &DivisorClass) -> Vec<Vec<u64>> {
    let mut exponents: Vec<Vec<u64>> = Vec::new();
    if class.fiber < 0 {
        return exponents;
    }
    let mut deg = vec![0; class.base.len()];
    let _ = for_each_exponent(x.twists().len(), class.fiber as u64, |q| {
        base_degree(x, class, q, &mut deg);
        if deg.iter().all(|&m| m >= 0) {
            exponents.push(q.to_vec());
        }
        ControlFlow::Continue(())
    });
    exponents
}

/// Coordinate strata `{y_S = 0}` with `S` a set of at most `t` fiber
/// variables that occur in some monomial, smallest first.
fn strata(exponents: &[Vec<u64>], len: usize) -> Vec<Vec<usize>> {
    // Variables that never occur cannot raise the multiplicity.
    let support: Vec<usize> = (0..len)
        .filter(|&i| exponents.iter().any(|q| q[i] > 0))
        .collect();
    let mut sets: Vec<Vec<usize>> = (1u64..(1u64 << support.len()))
        .map(|mask| {
            (0..support.len())
                .filter(|&k| mask & (1 << k) != 0)
                .map(|k| support[k])
                .collect::<Vec<_>>()
        })
        .filter(|set| set.len() < len)
        .collect();
    sets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    sets
}

fn multiplicity(exponents: &[Vec<u64>], set: &[usize]) -> u64 {
    exponents
        .iter()
        .map(|q| set.iter().map(|&i| q[i]).sum::<u64>())
        .min()
        .unwrap_or(0)
}

/// A set `S` of fiber variables, at most `t` of them, such that every
/// monomial of `class` has degree greater than `|S|` in `y_S`. Every member
/// then has multiplicity above `|S|` along the codimension-`|S|` locus
/// `{y_S = 0}`, which no simple normal crossing divisor has. Returns the
/// first such set (smallest, then lexicographic) with the forced
/// multiplicity.
pub fn forced_excess_multiplicity(
    x: &ScrollVariety,
    class: &DivisorClass,
) -> Option<(Vec<usize>, u64)> {
    let exponents = monomial_exponents(x, class);
    if exponents.is_empty() {
        return None;
    }
    strata(&exponents, x.twists().len())
        .into_iter()
        .map(|set| {
            let m = multiplicity(&exponents, &set);
            (set, m)
        })
        .find(|(set, m)| *m > set.len() as u64)
}

/// First stratum `{y_S = 0}` along which no member can have simple normal
/// crossings: multiplicity above `|S|`, or multiplicity exactly `|S|` with
/// a tangent cone that cannot split into `|S|` independent linear forms
/// (some `y_s` with `s` in `S` is missing from it or divides it twice).
fn stratum_obstruction(x: &ScrollVariety, class: &DivisorClass) -> Option<(Vec<usize>, u64)> {
    let exponents = monomial_exponents(x, class);
    if exponents.is_empty() {
        return None;
    }
    for set in strata(&exponents, x.twists().len()) {
        let k = set.len() as u64;
        let m = multiplicity(&exponents, &set);
        if m > k {
            return Some((set, m));
        }
        if m == k && k >= 2 {
            let cone: Vec<&Vec<u64>> = exponents
                .iter()
                .filter(|q| set.iter().map(|&i| q[i]).sum::<u64>() == m)
                .collect();
            let degenerate = set
                .iter()
                .any(|&i| cone.iter().all(|q| q[i] == 0) || cone.iter().all(|q| q[i] >= 2));
            if degenerate {
                return Some((set, m));
            }
        }
    }
    None
}

/// Why no member of a linear system has simple normal crossings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SncObstruction {
    /// Every member is too singular along `{y_S = 0}`, `S = summands`:
    /// multiplicity above `|S|`, or equal to `|S|` with a degenerate
    /// tangent cone.
    StratumSingularity {
        summands: Vec<usize>,
        multiplicity: u64,
    },
    /// `D_component` is a forced component and the rest of the member
    /// restricts to it with a stratum singularity along `summands` (indices
    /// of the normalized sub-bundle), so the two are not transverse.
    NonTransverse {
        component: usize,
        summands: Vec<usize>,
        multiplicity: u64,
    },
}

/// Monomial obstructions to a member of `|class|` with simple normal
/// crossings: a stratum singularity on `X`, or on a forced sub-bundle
/// component after removing it. `None` does not certify that a
/// general member has simple normal crossings.
pub fn snc_obstruction(x: &ScrollVariety, class: &DivisorClass) -> Option<SncObstruction> {
    if let Some((summands, multiplicity)) = stratum_obstruction(x, class) {
        return Some(SncObstruction::StratumSingularity {
            summands,
            multiplicity,
        });
    }
    if x.fiber_dim() < 2 {
        return None;
    }
    let summary = monomial_summary(x, class);
    if summary.count.is_zero() {
        return None;
    }
    for (i, &mu) in summary.forced_multiplicities.iter().enumerate() {
        if mu == 0 {
            continue;
        }
        let rest = class - &x.sub_bundle_class(i).expect("i is a summand");
        if rest.is_zero() {
            continue;
        }
        if let Some(inner) = snc_obstruction(x, &rest) {
            return Some(inner);
        }
        let (sub, restricted) = x.restrict_to_subbundle(&rest, i).expect("fiber_dim >= 2");
        if let Some((summands, multiplicity)) = stratum_obstruction(&sub, &restricted) {
            return Some(SncObstruction::NonTransverse {
                component: i,
                summands,
                multiplicity,
            });
        }
    }
    None
}
