//! Partition combinatorics: symplectic/orthogonal classification, 2-cores and
//! 2-quotients through beta-numbers, the `(h1, h2)` correspondence and
//! unipotent centralizer dimensions.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity `m_i` of the part `i`.
    pub fn mult(&self, i: u32) -> u32 {
        self.0.iter().filter(|&&p| p == i).count() as u32
    }

    /// Distinct parts with their multiplicities, ascending.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((1..=w).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn staircase(d: u32) -> Partition {
        Partition((1..=d).rev().collect())
    }

    /// Height `d` if the partition is the staircase `(d, d-1, ..., 1)`.
    pub fn staircase_height(&self) -> Option<u32> {
        let d = self.len() as u32;
        (*self == Partition::staircase(d)).then_some(d)
    }
}

impl From<Vec<u32>> for Partition {
    fn from(v: Vec<u32>) -> Self {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A pair of partitions, either ordered or stored in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiPartition {
    pub first: Partition,
    pub second: Partition,
    pub ordered: bool,
}

impl BiPartition {
    pub fn ordered(first: Partition, second: Partition) -> Self {
        BiPartition { first, second, ordered: true }
    }

    /// Unordered pair; the component that is smaller by `(size, parts)` comes first.
    pub fn unordered(a: Partition, b: Partition) -> Self {
        let key = |p: &Partition| (p.size(), p.0.clone());
        let (first, second) = if key(&a) <= key(&b) { (a, b) } else { (b, a) };
        BiPartition { first, second, ordered: false }
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    pub fn swap(&self) -> Self {
        if self.ordered {
            BiPartition::ordered(self.second.clone(), self.first.clone())
        } else {
            self.clone()
        }
    }

    /// All ordered pairs `(a, b)` with `|a| + |b| = n`.
    pub fn all(n: u32) -> Vec<BiPartition> {
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            for a in Partition::all(k) {
                for b in Partition::all(n - k) {
                    out.push(BiPartition::ordered(a.clone(), b));
                }
            }
        }
        out
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaData {
    pub kappa_set: BTreeSet<u32>,
    pub kappa: u32,
}

impl KappaData {
    fn from_set(kappa_set: BTreeSet<u32>) -> Self {
        let kappa = kappa_set.len() as u32;
        KappaData { kappa_set, kappa }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionKind {
    Symplectic,
    OrthogonalNondegenerate,
    OrthogonalDegenerate,
    Neither,
}

/// Result of [`classify`]. A partition can be both symplectic and orthogonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: PartitionKind,
    pub symplectic: Option<KappaData>,
    pub orthogonal: Option<KappaData>,
}

impl Classification {
    pub fn is_symplectic(&self) -> bool {
        self.symplectic.is_some()
    }

    pub fn is_orthogonal(&self) -> bool {
        self.orthogonal.is_some()
    }

    pub fn is_degenerate(&self) -> bool {
        self.orthogonal.as_ref().is_some_and(|k| k.kappa == 0)
    }
}

pub fn classify(p: &Partition) -> Classification {
    let mults = p.multiplicities();
    let symplectic = mults
        .iter()
        .all(|&(i, m)| i % 2 == 0 || m % 2 == 0)
        .then(|| KappaData::from_set(mults.iter().filter(|(i, _)| i % 2 == 0).map(|&(i, _)| i).collect()));
    let orthogonal = mults
        .iter()
        .all(|&(i, m)| i % 2 == 1 || m % 2 == 0)
        .then(|| KappaData::from_set(mults.iter().filter(|(i, _)| i % 2 == 1).map(|&(i, _)| i).collect()));
    let kind = match (&symplectic, &orthogonal) {
        (Some(_), _) => PartitionKind::Symplectic,
        (None, Some(k)) if k.kappa == 0 => PartitionKind::OrthogonalDegenerate,
        (None, Some(_)) => PartitionKind::OrthogonalNondegenerate,
        (None, None) => PartitionKind::Neither,
    };
    Classification { kind, symplectic, orthogonal }
}

/// Beta-set `λ + δ_r` as a decreasing list of `r` distinct nonnegative integers.
fn beta_set(p: &Partition, r: usize) -> Vec<u32> {
    (0..r).map(|k| p.0.get(k).copied().unwrap_or(0) + (r - 1 - k) as u32).collect()
}

/// Inverse of [`beta_set`]: subtract the staircase shift from a set of distinct numbers.
fn from_beta(mut xs: Vec<u32>) -> Partition {
    xs.sort_unstable_by(|a, b| b.cmp(a));
    let r = xs.len();
    Partition::new(xs.iter().enumerate().map(|(k, &x)| x - (r - 1 - k) as u32).collect())
}

/// Splits a beta-set by parity: halves of even members and of odd members.
fn split_beta(xs: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let even = xs.iter().filter(|&&x| x % 2 == 0).map(|&x| x / 2).collect();
    let odd = xs.iter().filter(|&&x| x % 2 == 1).map(|&x| x / 2).collect();
    (even, odd)
}

fn core_of_split(l0: usize, l1: usize) -> Partition {
    let xs: Vec<u32> =
        (0..l0).map(|s| 2 * s as u32).chain((0..l1).map(|s| 2 * s as u32 + 1)).collect();
    from_beta(xs)
}

pub fn two_core(p: &Partition) -> Partition {
    let r = p.len().max(1);
    let (even, odd) = split_beta(&beta_set(p, r));
    core_of_split(even.len(), odd.len())
}

/// The ordered 2-quotient `(λ⁽⁰⁾, λ⁽¹⁾)` taken with `r` beta-numbers.
pub fn two_quotient(p: &Partition, r: usize) -> Result<BiPartition> {
    if r < p.len() || r == 0 {
        return Err(Error::Precondition(format!("two_quotient: r={r} below length {}", p.len())));
    }
    let (even, odd) = split_beta(&beta_set(p, r));
    Ok(BiPartition::ordered(from_beta(even), from_beta(odd)))
}

/// Inverse of `(two_core, two_quotient(·, r))`.
pub fn from_core_quotient(d: u32, q0: &Partition, q1: &Partition, r: usize) -> Result<Partition> {
    let target = Partition::staircase(d);
    for l0 in q0.len()..=r {
        let l1 = r - l0;
        if l1 < q1.len() || core_of_split(l0, l1) != target {
            continue;
        }
        let ys0 = beta_set(q0, l0).into_iter().map(|y| 2 * y);
        let ys1 = beta_set(q1, l1).into_iter().map(|y| 2 * y + 1);
        return Ok(from_beta(ys0.chain(ys1).collect()));
    }
    Err(Error::Precondition(format!(
        "from_core_quotient: no split of r={r} beta-numbers realises core {target} with quotient ({q0}, {q1})"
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1H2Data {
    pub h1: u32,
    pub h2: i32,
    pub m_plus: u32,
    pub m_minus: u32,
    pub n_plus: u32,
    pub n_minus: u32,
    pub m: u32,
}

/// Solves `m+ = max(h1+h2, -h1-h2-1)`, `m- = max(h1-h2, h2-h1-1)` with `h1 >= 0`.
pub fn h1h2_from_heights(m_plus: u32, m_minus: u32) -> (u32, i32) {
    let bound = (m_plus + m_minus + 2) as i32;
    let mut sols = Vec::new();
    for h1 in 0..=bound {
        for h2 in -bound..=bound {
            let mp = (h1 + h2).max(-h1 - h2 - 1);
            let mm = (h1 - h2).max(h2 - h1 - 1);
            if mp == m_plus as i32 && mm == m_minus as i32 {
                sols.push((h1 as u32, h2));
            }
        }
    }
    assert_eq!(sols.len(), 1, "(h1,h2) not unique for heights ({m_plus},{m_minus})");
    sols[0]
}

pub fn h1h2_of(mu_plus: &Partition, mu_minus: &Partition) -> H1H2Data {
    let height = |p: &Partition| two_core(p).staircase_height().expect("2-core is a staircase");
    let (m_plus, m_minus) = (height(mu_plus), height(mu_minus));
    let (h1, h2) = h1h2_from_heights(m_plus, m_minus);
    let tri = |d: u32| d * (d + 1) / 2;
    let n_plus = (mu_plus.size() - tri(m_plus)) / 2;
    let n_minus = (mu_minus.size() - tri(m_minus)) / 2;
    let m = h1 * (h1 + 1) + (h2 * h2) as u32;
    H1H2Data { h1, h2, m_plus, m_minus, n_plus, n_minus, m }
}

pub fn delta(h1: u32, h2: i32) -> u32 {
    let a = h1 * (2 * h1 + 1) * (h1 + 1) / 6;
    let b = ((h2 as i64).pow(3) - h2 as i64).unsigned_abs() / 3;
    a + b as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupKind {
    GL,
    Sp,
    SO,
}

/// Dimension of the centralizer of a unipotent element with Jordan type `p`.
pub fn centralizer_dim(p: &Partition, kind: GroupKind) -> Result<u32> {
    let mults = p.multiplicities();
    let c = classify(p);
    let mut cross = 0;
    for (a, &(i, mi)) in mults.iter().enumerate() {
        for &(_, mj) in &mults[a + 1..] {
            cross += i * mi * mj;
        }
    }
    let diag: u32 = mults.iter().map(|&(i, m)| i * m * m).sum();
    let odd_mults: u32 = mults.iter().filter(|(i, _)| i % 2 == 1).map(|&(_, m)| m).sum();
    match kind {
        GroupKind::GL => Ok(diag + 2 * cross),
        GroupKind::Sp if c.is_symplectic() => Ok((diag + odd_mults) / 2 + cross),
        GroupKind::SO if c.is_orthogonal() => Ok((diag - odd_mults) / 2 + cross),
        _ => Err(Error::Incompatible(format!("partition {p} is not of type {kind:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    /// Removes dominoes from the Young diagram until none can be removed.
    fn domino_core(p: &Partition) -> Partition {
        let mut rows = p.parts().to_vec();
        'outer: loop {
            for i in 0..rows.len() {
                let below = rows.get(i + 1).copied().unwrap_or(0);
                if rows[i] >= below + 2 {
                    rows[i] -= 2;
                    rows.retain(|&x| x > 0);
                    continue 'outer;
                }
                let below2 = rows.get(i + 2).copied().unwrap_or(0);
                if i + 1 < rows.len() && rows[i] == rows[i + 1] && rows[i + 1] > below2 {
                    rows[i] -= 1;
                    rows[i + 1] -= 1;
                    rows.retain(|&x| x > 0);
                    continue 'outer;
                }
            }
            return Partition::new(rows);
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify(&p(&[2, 2]));
        assert_eq!(c.kind, PartitionKind::Symplectic);
        assert_eq!(c.symplectic.unwrap().kappa_set, BTreeSet::from([2]));
        let c = classify(&p(&[3, 1]));
        assert_eq!(c.kind, PartitionKind::OrthogonalNondegenerate);
        assert_eq!(c.orthogonal.unwrap().kappa, 2);
        let c = classify(&p(&[2, 2, 1, 1]));
        assert_eq!(c.symplectic.unwrap().kappa_set, BTreeSet::from([2]));
        assert_eq!(c.orthogonal.unwrap().kappa_set, BTreeSet::from([1]));
    }

    #[test]
    fn classify_against_definition() {
        for n in 0..=12 {
            for q in Partition::all(n) {
                let c = classify(&q);
                let sp = (1..=n).all(|i| i % 2 == 0 || q.mult(i) % 2 == 0);
                let ort = (1..=n).all(|i| i % 2 == 1 || q.mult(i) % 2 == 0);
                assert_eq!(c.is_symplectic(), sp);
                assert_eq!(c.is_orthogonal(), ort);
                if ort {
                    let k = (1..=n).filter(|i| i % 2 == 1 && q.mult(*i) > 0).count() as u32;
                    assert_eq!(c.orthogonal.unwrap().kappa, k);
                }
            }
        }
    }

    #[test]
    fn core_examples() {
        assert_eq!(two_core(&p(&[2])), Partition::empty());
        assert_eq!(two_core(&p(&[3])), p(&[1]));
        assert_eq!(two_core(&p(&[1, 1, 1])), p(&[1]));
        assert_eq!(two_core(&p(&[2, 1])), p(&[2, 1]));
    }

    #[test]
    fn core_matches_domino_removal() {
        for n in 0..=12 {
            for q in Partition::all(n) {
                assert_eq!(two_core(&q), domino_core(&q), "{q}");
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let got = two_quotient(&p(&[2]), 1).unwrap();
        assert_eq!((got.first, got.second), (p(&[1]), Partition::empty()));
        let got = two_quotient(&p(&[3]), 2).unwrap();
        assert_eq!((got.first, got.second), (p(&[1]), Partition::empty()));
        let got = two_quotient(&Partition::empty(), 3).unwrap();
        assert!(got.first.is_empty() && got.second.is_empty());
        assert!(two_quotient(&p(&[1, 1]), 1).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(from_core_quotient(0, &p(&[1]), &Partition::empty(), 1).unwrap(), p(&[2]));
        assert_eq!(from_core_quotient(1, &p(&[1]), &Partition::empty(), 2).unwrap(), p(&[3]));
        assert_eq!(from_core_quotient(2, &Partition::empty(), &Partition::empty(), 2).unwrap(), p(&[2, 1]));
        assert_eq!(from_core_quotient(2, &Partition::empty(), &Partition::empty(), 4).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn roundtrip_and_weight() {
        for n in 0..=12 {
            for q in Partition::all(n) {
                let core = two_core(&q);
                let d = core.staircase_height().unwrap();
                for r in q.len().max(1)..=q.len() + 3 {
                    let quo = two_quotient(&q, r).unwrap();
                    assert_eq!(n, core.size() + 2 * quo.size());
                    assert_eq!(from_core_quotient(d, &quo.first, &quo.second, r).unwrap(), q);
                    assert_eq!(two_quotient(&q, r + 1).unwrap(), quo.swap());
                }
            }
        }
    }

    #[test]
    fn h1h2_examples() {
        let h = h1h2_of(&p(&[1]), &p(&[1]));
        assert_eq!((h.h1, h.h2), (1, 0));
        let h = h1h2_of(&p(&[2, 1]), &Partition::empty());
        assert_eq!((h.h1, h.h2, h.m_plus, h.m_minus), (1, 1, 2, 0));
        let h = h1h2_of(&p(&[2]), &Partition::empty());
        assert_eq!((h.h1, h.h2), (0, 0));
        let h = h1h2_of(&p(&[1, 1, 1]), &Partition::empty());
        assert_eq!((h.h1, h.h2), (0, 1));
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(1, 0), 1);
        assert_eq!(delta(1, 1), 1);
        assert_eq!(delta(0, 0), 0);
        assert_eq!(delta(2, -2), 5 + 2);
    }

    #[test]
    fn size_identity_for_h1h2() {
        for n in 0..=10 {
            for a in 0..=n {
                for mp in Partition::all(a) {
                    for mm in Partition::all(n - a) {
                        let h = h1h2_of(&mp, &mm);
                        assert_eq!(n, h.m + 2 * h.n_plus + 2 * h.n_minus);
                    }
                }
            }
        }
    }

    #[test]
    fn centralizer_dim_examples() {
        assert_eq!(centralizer_dim(&p(&[1, 1]), GroupKind::GL).unwrap(), 4);
        assert_eq!(centralizer_dim(&p(&[2]), GroupKind::GL).unwrap(), 2);
        assert_eq!(centralizer_dim(&p(&[2, 2]), GroupKind::Sp).unwrap(), 4);
        assert_eq!(centralizer_dim(&p(&[1, 1]), GroupKind::Sp).unwrap(), 3);
        assert_eq!(centralizer_dim(&p(&[3]), GroupKind::SO).unwrap(), 1);
        assert!(centralizer_dim(&p(&[3]), GroupKind::Sp).is_err());
    }

    /// Dual-partition forms of the same dimensions.
    #[test]
    fn centralizer_dim_dual_forms() {
        for n in 1..=10 {
            for q in Partition::all(n) {
                let dual = q.conjugate();
                let sq: u32 = dual.parts().iter().map(|x| x * x).sum();
                let odd = q.parts().iter().filter(|x| *x % 2 == 1).count() as u32;
                assert_eq!(centralizer_dim(&q, GroupKind::GL).unwrap(), sq);
                if let Ok(d) = centralizer_dim(&q, GroupKind::Sp) {
                    assert_eq!(2 * d, sq + odd);
                }
                if let Ok(d) = centralizer_dim(&q, GroupKind::SO) {
                    assert_eq!(2 * d, sq - odd);
                }
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1u32..6, 0..6).prop_map(Partition::new)
    }

    proptest! {
        #[test]
        fn h1h2_swap_negates(a in arb_partition(), b in arb_partition()) {
            let x = h1h2_of(&a, &b);
            let y = h1h2_of(&b, &a);
            prop_assert_eq!(x.h1, y.h1);
            prop_assert_eq!(x.h2, -y.h2);
        }

        #[test]
        fn quotient_parity_swap(a in arb_partition(), extra in 0usize..4) {
            let r = a.len().max(1) + extra;
            prop_assert_eq!(two_quotient(&a, r + 1).unwrap(), two_quotient(&a, r).unwrap().swap());
        }
    }
}
