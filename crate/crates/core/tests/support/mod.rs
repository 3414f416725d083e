//! Brute-force oracles shared by the oracle tests and the acceptance suite.
//! They work from the raw monomial description only.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use scrollfano_core::logfano::{adjoint_class, BoundarySpec, LogFanoPair};
use scrollfano_core::sections::MemberStatus;
use scrollfano_core::{BaseSpace, DivisorClass, ScrollVariety};

/// All exponent vectors of the given length and total degree.
pub fn compositions(len: usize, total: u64) -> Vec<Vec<u64>> {
    if len == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(len - 1, total - first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Every monomial `x^P y^Q` of the Cox ring of `P[P^s; a]` with degree
/// `(c; d)`, where `deg x_k = (1; 0)` and `deg y_i = (-a_i; 1)`.
pub fn cox_monomials(s: u32, a: &[i64], c: i64, d: i64) -> Vec<(Vec<u64>, Vec<u64>)> {
    if d < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for q in compositions(a.len(), d as u64) {
        let x_deg = c + q
            .iter()
            .zip(a)
            .map(|(&qi, &ai)| qi as i64 * ai)
            .sum::<i64>();
        if x_deg < 0 {
            continue;
        }
        for p in compositions(s as usize + 1, x_deg as u64) {
            out.push((p, q.clone()));
        }
    }
    out
}

/// Verdict read off the monomial list alone.
pub fn oracle_verdict(s: u32, a: &[i64], c: i64, d: i64) -> MemberStatus {
    let mons = cox_monomials(s, a, c, d);
    if mons.is_empty() {
        return MemberStatus::NoMember;
    }
    let mu: Vec<u64> = (0..a.len())
        .map(|i| mons.iter().map(|(_, q)| q[i]).min().unwrap())
        .collect();
    if mu.iter().any(|&m| m >= 2) {
        return MemberStatus::ForcedNonReduced;
    }
    // A degree-2 system splits into two sub-bundle classes when a fiber
    // variable divides everything (the cofactor is linear in y), or when only
    // two fiber variables occur and no base variable does (a binary
    // quadratic form). The parts are then the two top sub-bundle classes.
    if d == 2 && a.len() >= 3 {
        let t = a.len() - 1;
        let forced = mu.contains(&1);
        let support: Vec<usize> = (0..a.len())
            .filter(|&i| mons.iter().any(|(_, q)| q[i] > 0))
            .collect();
        let binary = support.len() <= 2 && mons.iter().all(|(p, _)| p.iter().all(|&e| e == 0));
        let top = c == -a[t] - a[t - 1];
        if (forced || binary) && top && a[t - 2] < a[t] {
            return MemberStatus::ForcedDecomposition(vec![
                DivisorClass::rank_one(-a[t], 1),
                DivisorClass::rank_one(-a[t - 1], 1),
            ]);
        }
    }
    MemberStatus::Unconstrained
}

/// A random pair on `P[P^s; twists]` (s, t <= 4, twists <= 3) whose boundary
/// is made of sub-bundles and the base hyperplane class.
pub fn random_pair(rng: &mut ChaCha8Rng) -> Option<LogFanoPair> {
    let s = rng.gen_range(1..=4u32);
    let t = rng.gen_range(2..=4usize);
    let twists: Vec<i64> = (0..=t).map(|_| rng.gen_range(0..=3)).collect();
    let x = ScrollVariety::rank_one(BaseSpace::ProjSpace(s), &twists).ok()?;
    let mut boundary = Vec::new();
    for i in 0..=t {
        if rng.gen_bool(0.4) {
            boundary.push(BoundarySpec::SubBundle(i));
        }
    }
    if boundary.is_empty() {
        boundary.push(BoundarySpec::SubBundle(rng.gen_range(0..=t)));
    }
    if rng.gen_bool(0.5) {
        boundary.push(BoundarySpec::BasePullback(0));
    }
    LogFanoPair::new(x, boundary).ok()
}

/// Both sides of adjunction written out by hand on raw twists: restricting
/// `(m; n)` to `D_k` keeps `(m; n)` on `P(+_{i != k} O(a_i))`; the sub-bundle's
/// own anticanonical is `(s + 1 - sum_{i != k} a_i; t)`, and the other
/// components restrict to `(-a_l; 1)` and `(1; 0)`.
pub fn adjunction_by_hand(pair: &LogFanoPair, k: usize) -> bool {
    let x = pair.variety();
    let BaseSpace::ProjSpace(s) = x.base() else {
        unreachable!()
    };
    let a: Vec<i64> = x.twists().iter().map(|b| b[0]).collect();
    let lhs = adjoint_class(pair);
    let mut rhs = DivisorClass::rank_one(
        i64::from(s) + 1
            - a.iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, v)| v)
                .sum::<i64>(),
        a.len() as i64 - 1,
    );
    for part in pair.boundary() {
        match part {
            BoundarySpec::SubBundle(l) if *l == k => {}
            BoundarySpec::SubBundle(l) => rhs = &rhs - &DivisorClass::rank_one(-a[*l], 1),
            BoundarySpec::BasePullback(_) => rhs = &rhs - &DivisorClass::rank_one(1, 0),
            BoundarySpec::GeneralMember(c) => rhs = &rhs - c,
        }
    }
    lhs == rhs
}
