//! Hyperoctahedral groups `(ℤ/2)^m ⋊ S_m`.
//!
//! An element `((ε_1..ε_m), τ)` acts on `{±1..±m}` by `i ↦ ε_{τ(i)}·τ(i)`:
//! the permutation first, then the sign flip at the target position.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{BiPartition, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WElement {
    /// `signs[j]` is the flip applied at target position `j`.
    pub signs: Vec<i8>,
    /// `perm[i] = τ(i)`, zero-based.
    pub perm: Vec<usize>,
}

impl WElement {
    pub fn identity(m: usize) -> Self {
        WElement { signs: vec![1; m], perm: (0..m).collect() }
    }

    pub fn new(signs: Vec<i8>, perm: Vec<usize>) -> Self {
        assert_eq!(signs.len(), perm.len());
        WElement { signs, perm }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// Image of the signed point `(i, s)`.
    pub fn apply(&self, i: usize, s: i8) -> (usize, i8) {
        let j = self.perm[i];
        (j, s * self.signs[j])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WElement) -> WElement {
        let m = self.rank();
        let mut perm = vec![0; m];
        let mut signs = vec![1; m];
        for i in 0..m {
            let (j, s) = other.apply(i, 1);
            let (k, t) = self.apply(j, s);
            perm[i] = k;
            signs[k] = t;
        }
        WElement { signs, perm }
    }

    pub fn inverse(&self) -> WElement {
        let m = self.rank();
        let mut perm = vec![0; m];
        let mut signs = vec![1; m];
        for i in 0..m {
            let j = self.perm[i];
            perm[j] = i;
            signs[i] = self.signs[j];
        }
        WElement { signs, perm }
    }

    pub fn is_identity(&self) -> bool {
        self.signs.iter().all(|&s| s == 1) && self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Sign flip at one position.
    pub fn flip(m: usize, pos: usize) -> WElement {
        let mut w = WElement::identity(m);
        w.signs[pos] = -1;
        w
    }

    /// Transposition of two positions.
    pub fn transposition(m: usize, a: usize, b: usize) -> WElement {
        let mut w = WElement::identity(m);
        w.perm.swap(a, b);
        w
    }

    /// All `2^m m!` elements.
    pub fn all(m: usize) -> Vec<WElement> {
        let mut out = Vec::new();
        for perm in (0..m).permutations(m) {
            for mask in 0..(1u32 << m) {
                let signs = (0..m).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect();
                out.push(WElement { signs, perm: perm.clone() });
            }
        }
        out
    }

    /// A representative of the class with the given signed cycle type.
    pub fn representative(t: &SignedCycleType) -> WElement {
        let m = t.size() as usize;
        let mut w = WElement::identity(m);
        let mut start = 0;
        let cycles = t.pos.parts().iter().map(|&l| (l, 1)).chain(t.neg.parts().iter().map(|&l| (l, -1)));
        for (len, sign) in cycles {
            let len = len as usize;
            for k in 0..len {
                w.perm[start + k] = start + (k + 1) % len;
            }
            w.signs[start] = sign;
            start += len;
        }
        w
    }
}

impl fmt::Display for WElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = (0..self.rank())
            .map(|i| {
                let (j, s) = self.apply(i, 1);
                format!("{}{}", if s < 0 { "-" } else { "" }, j + 1)
            })
            .collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

/// Cycle lengths split by the sign product along each cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedCycleType {
    pub pos: Partition,
    pub neg: Partition,
}

impl SignedCycleType {
    pub fn new(pos: Partition, neg: Partition) -> Self {
        SignedCycleType { pos, neg }
    }

    pub fn size(&self) -> u32 {
        self.pos.size() + self.neg.size()
    }

    /// `(length, sign)` for every cycle.
    fn cycles(&self) -> Vec<(u32, i8)> {
        self.pos.parts().iter().map(|&l| (l, 1)).chain(self.neg.parts().iter().map(|&l| (l, -1))).collect()
    }

    pub fn centralizer_order(&self) -> u64 {
        let part = |p: &Partition| -> u64 {
            p.multiplicities().iter().map(|&(i, a)| (2 * i as u64).pow(a) * factorial(a as u64)).product()
        };
        part(&self.pos) * part(&self.neg)
    }

    /// All signed cycle types of rank `m`.
    pub fn all(m: u32) -> Vec<SignedCycleType> {
        BiPartition::all(m).into_iter().map(|b| SignedCycleType::new(b.first, b.second)).collect()
    }
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

pub fn cycle_type(w: &WElement) -> SignedCycleType {
    let m = w.rank();
    let mut seen = vec![false; m];
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let (mut i, mut len, mut sign) = (start, 0, 1i8);
        while !seen[i] {
            seen[i] = true;
            i = w.perm[i];
            sign *= w.signs[i];
            len += 1;
        }
        if sign > 0 {
            pos.push(len)
        } else {
            neg.push(len)
        }
    }
    SignedCycleType::new(Partition::new(pos), Partition::new(neg))
}

/// Conjugacy classes of `𝔚_m` with sizes and centralizer orders.
pub fn classes(m: u32) -> Result<Vec<(SignedCycleType, u64, u64)>> {
    if m > 8 {
        return Err(Error::Budget { needed: m as u64, budget: 8 });
    }
    let order = group_order(m);
    Ok(SignedCycleType::all(m)
        .into_iter()
        .map(|t| {
            let z = t.centralizer_order();
            (t, order / z, z)
        })
        .collect())
}

pub fn group_order(m: u32) -> u64 {
    (1u64 << m) * factorial(m as u64)
}

pub fn sgn(w: &WElement) -> i8 {
    w.signs.iter().product()
}

/// Whether a class of `𝔚_m` splits in the index-2 subgroup `𝔚_m^D`.
pub fn d_split(t: &SignedCycleType) -> bool {
    t.neg.is_empty() && t.pos.parts().iter().all(|p| p % 2 == 0)
}

/// Symmetric-group character `χ^λ` at cycle type `ρ`, by Murnaghan–Nakayama.
pub fn sym_character(lambda: &Partition, rho: &Partition) -> i64 {
    fn rec(beta: &mut Vec<u32>, rho: &[u32], memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
        if rho.is_empty() {
            return 1;
        }
        let key = (beta.clone(), rho.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let r = rho[0];
        let mut total = 0;
        for idx in 0..beta.len() {
            let b = beta[idx];
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            // sign from the number of beta-numbers strictly between b - r and b
            let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            beta[idx] = b - r;
            total += sign * rec(beta, &rho[1..], memo);
            beta[idx] = b;
        }
        memo.insert(key, total);
        total
    }
    assert_eq!(lambda.size(), rho.size(), "size mismatch in symmetric character");
    let l = lambda.len();
    let mut beta: Vec<u32> = (0..l).map(|k| lambda.parts()[k] + (l - 1 - k) as u32).collect();
    rec(&mut beta, rho.parts(), &mut HashMap::new())
}

/// Irreducible character of `𝔚_m` labelled by `(λ, μ)` at a class.
///
/// The trivial character is `((m), ∅)`, the sign-type character `(∅, (m))` is `w ↦ ∏ε_i`.
pub fn irr_character(label: &BiPartition, at: &SignedCycleType) -> Result<i64> {
    if label.size() != at.size() {
        return Err(Error::Incompatible(format!("label of size {} at class of size {}", label.size(), at.size())));
    }
    let cycles = at.cycles();
    let k = label.first.size();
    let mut total = 0;
    for mask in 0..(1u32 << cycles.len()) {
        let inside: u32 = cycles.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| c.0).sum();
        if inside != k {
            continue;
        }
        let (mut a, mut b, mut sign) = (Vec::new(), Vec::new(), 1i64);
        for (i, &(len, s)) in cycles.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.push(len);
            } else {
                b.push(len);
                sign *= s as i64;
            }
        }
        total += sign
            * sym_character(&label.first, &Partition::new(a))
            * sym_character(&label.second, &Partition::new(b));
    }
    Ok(total)
}
