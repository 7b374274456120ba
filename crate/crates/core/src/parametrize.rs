//! Labels of σ-stable irreducible characters and of classes in `GL_n(q)σ`,
//! their enumeration, counts, group orders and class sizes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{eig_orbits, star_orbits, CharOrbitStar, EigOrbit};
use crate::partitions::{centralizer_dim, classify, two_core, GroupKind, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    GL,
    /// Unitary group `GL^-`.
    GLMinus,
    Sp,
    SOOdd,
    SOPlus,
    SOMinus,
    OPlus,
    OMinus,
}

fn prod(range: impl Iterator<Item = u128>) -> u128 {
    range.product()
}

/// Order of a finite classical group; `size` is the matrix size.
pub fn group_order(family: Family, size: u32, q: u64) -> Result<u128> {
    let q = q as u128;
    let bad = || Err(Error::Incompatible(format!("{family:?} of size {size}")));
    let m = size / 2;
    let even = size % 2 == 0;
    let sp = |m: u32| q.pow(m * m) * prod((1..=m).map(|i| q.pow(2 * i) - 1));
    let so_even = |m: u32, plus: bool| {
        if m == 0 {
            return 1;
        }
        let top = if plus { q.pow(m) - 1 } else { q.pow(m) + 1 };
        q.pow(m * (m - 1)) * top * prod((1..m).map(|i| q.pow(2 * i) - 1))
    };
    Ok(match family {
        Family::GL => q.pow(size * size.saturating_sub(1) / 2) * prod((1..=size).map(|i| q.pow(i) - 1)),
        Family::GLMinus => {
            let f = |i: u32| if i % 2 == 0 { q.pow(i) - 1 } else { q.pow(i) + 1 };
            q.pow(size * size.saturating_sub(1) / 2) * prod((1..=size).map(f))
        }
        Family::Sp if even => sp(m),
        Family::SOOdd if !even => sp(m),
        Family::SOPlus if even => so_even(m, true),
        Family::SOMinus if even && m > 0 => so_even(m, false),
        Family::OPlus | Family::OMinus if size == 0 => {
            if family == Family::OMinus {
                return bad();
            }
            1
        }
        Family::OPlus | Family::OMinus if !even => 2 * sp(m),
        Family::OPlus => 2 * so_even(m, true),
        Family::OMinus if m > 0 => 2 * so_even(m, false),
        _ => return bad(),
    })
}

/// `|O^s_m(q)|` with `O^±` identified in odd dimension.
pub fn orthogonal_order(m: u32, sign: i8, q: u64) -> u128 {
    let family = if sign > 0 || m % 2 == 1 { Family::OPlus } else { Family::OMinus };
    group_order(family, m, q).expect("orthogonal order")
}

fn check_budget(n: u32, q: u64) -> Result<()> {
    if n > 6 {
        return Err(Error::Budget { needed: n as u64, budget: 6 });
    }
    if q > 13 {
        return Err(Error::Budget { needed: q, budget: 13 });
    }
    Ok(())
}

/// Label of a σ-stable irreducible character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharType {
    pub lam_plus: Partition,
    pub lam_minus: Partition,
    /// Non-self-inverse orbits of size `2d`.
    pub pairs: Vec<(Partition, CharOrbitStar)>,
    /// Self-inverse orbits of size `2d'`.
    pub selfdual: Vec<(Partition, CharOrbitStar)>,
}

impl CharType {
    pub fn weight(&self) -> u32 {
        let w = |v: &[(Partition, CharOrbitStar)]| v.iter().map(|(l, o)| l.size() * o.size).sum::<u32>();
        self.lam_plus.size() + self.lam_minus.size() + w(&self.pairs) + w(&self.selfdual)
    }

    pub fn is_quadratic_unipotent(&self) -> bool {
        self.pairs.is_empty() && self.selfdual.is_empty()
    }
}

/// Every finitely supported assignment of nonempty partitions to `orbits` of total weight `n`.
fn assignments<T: Clone>(items: &[(T, u32)], n: u32) -> Vec<(Vec<(Partition, T)>, u32)> {
    fn rec<T: Clone>(
        items: &[(T, u32)],
        idx: usize,
        left: u32,
        cur: &mut Vec<(Partition, T)>,
        out: &mut Vec<(Vec<(Partition, T)>, u32)>,
    ) {
        out.push((cur.clone(), left));
        for j in idx..items.len() {
            let (ref item, w) = items[j];
            for k in 1..=left / w {
                for lam in Partition::all(k) {
                    cur.push((lam, item.clone()));
                    rec(items, j + 1, left - k * w, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(items, 0, n, &mut Vec::new(), &mut out);
    out
}

pub fn enum_char_types(n: u32, q: u64) -> Result<Vec<CharType>> {
    check_budget(n, q)?;
    let orbits: Vec<(CharOrbitStar, u32)> = star_orbits(n, q)
        .into_iter()
        .filter(|o| !o.is_trivial() && !o.is_eta(q))
        .map(|o| (o, o.size))
        .collect();
    let mut out = Vec::new();
    for (assigned, left) in assignments(&orbits, n) {
        let (pairs, selfdual): (Vec<_>, Vec<_>) = assigned.into_iter().partition(|(_, o)| !o.self_inverse);
        for k in 0..=left {
            for lp in Partition::all(k) {
                for lm in Partition::all(left - k) {
                    out.push(CharType {
                        lam_plus: lp.clone(),
                        lam_minus: lm,
                        pairs: pairs.clone(),
                        selfdual: selfdual.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Membership in the set of labels whose extensions are uniform functions.
pub fn is_uniform(t: &CharType) -> bool {
    let small = |p: &Partition| two_core(p).size() <= 1;
    let odd = (t.lam_plus.size() % 2) + (t.lam_minus.size() % 2);
    odd <= 1 && small(&t.lam_plus) && small(&t.lam_minus)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnipotentKind {
    Sp,
    /// Orthogonal, with the sign `η(Q)` of the form.
    Ort(i8),
}

/// A unipotent class of a finite symplectic or orthogonal group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnipotentLabel {
    pub kind: UnipotentKind,
    pub partition: Partition,
    /// `(i, e_i)` for each `i` in the κ-set; empty for degenerate orthogonal classes.
    pub signs: Vec<(u32, i8)>,
}

fn sign_tuples(k: usize) -> Vec<Vec<i8>> {
    (0..1u32 << k).map(|mask| (0..k).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect()).collect()
}

/// `η(-1)` for the quadratic character of `F_q^*`.
pub fn eta_minus_one(q: u64) -> i8 {
    if q % 4 == 1 {
        1
    } else {
        -1
    }
}

impl UnipotentLabel {
    pub fn size(&self) -> u32 {
        self.partition.size()
    }

    /// All labels of unipotent classes of `Sp_size(q)`.
    pub fn all_sp(size: u32) -> Vec<UnipotentLabel> {
        let mut out = Vec::new();
        for p in Partition::all(size) {
            let Some(kd) = classify(&p).symplectic else { continue };
            let set: Vec<u32> = kd.kappa_set.into_iter().collect();
            for s in sign_tuples(set.len()) {
                let signs = set.iter().copied().zip(s).collect();
                out.push(UnipotentLabel { kind: UnipotentKind::Sp, partition: p.clone(), signs });
            }
        }
        out
    }

    /// All labels of unipotent classes of `O(Q)` with `dim Q = size` and `η(Q) = form_sign`.
    pub fn all_ort(size: u32, form_sign: i8, q: u64) -> Vec<UnipotentLabel> {
        let mut out = Vec::new();
        let kind = UnipotentKind::Ort(form_sign);
        for p in Partition::all(size) {
            let Some(kd) = classify(&p).orthogonal else { continue };
            if kd.kappa == 0 {
                if form_sign > 0 {
                    out.push(UnipotentLabel { kind, partition: p, signs: Vec::new() });
                }
                continue;
            }
            let set: Vec<u32> = kd.kappa_set.into_iter().collect();
            let kappa_odd = set.iter().filter(|&&i| p.mult(i) % 2 == 1).count() as u32;
            let target = form_sign * if (kappa_odd / 2) % 2 == 1 { eta_minus_one(q) } else { 1 };
            for s in sign_tuples(set.len()) {
                if s.iter().product::<i8>() == target {
                    let signs = set.iter().copied().zip(s).collect();
                    out.push(UnipotentLabel { kind, partition: p.clone(), signs });
                }
            }
        }
        out
    }

    fn sign_of(&self, i: u32) -> i8 {
        self.signs.iter().find(|(j, _)| *j == i).map_or(1, |s| s.1)
    }

    /// Order of the centralizer of the unipotent element inside `Sp` or `O`.
    pub fn centralizer_order(&self, q: u64) -> Result<u128> {
        // parts whose multiplicity space carries a symplectic form: odd for Sp, even for O
        let (kind, sp_parity) = match self.kind {
            UnipotentKind::Sp => (GroupKind::Sp, 1),
            UnipotentKind::Ort(_) => (GroupKind::SO, 0),
        };
        let total_dim = centralizer_dim(&self.partition, kind)?;
        let (mut order, mut red_dim) = (1u128, 0u32);
        for (i, m) in self.partition.multiplicities() {
            if i % 2 == sp_parity {
                order *= group_order(Family::Sp, m, q)?;
                red_dim += m * (m + 1) / 2;
            } else {
                order *= orthogonal_order(m, self.sign_of(i), q);
                red_dim += m * m.saturating_sub(1) / 2;
            }
        }
        Ok(order * (q as u128).pow(total_dim - red_dim))
    }
}

/// Label of a `GL_n(q)`-class in `GL_n(q)σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassData {
    pub eta: i8,
    pub sp_part: UnipotentLabel,
    pub ort_part: UnipotentLabel,
    pub gl_parts: Vec<(EigOrbit, Partition)>,
}

impl ClassData {
    pub fn weight(&self) -> u32 {
        self.sp_part.size() + self.ort_part.size() + self.gl_parts.iter().map(|(x, l)| 2 * x.d * l.size()).sum::<u32>()
    }

    pub fn is_isolated(&self) -> bool {
        self.gl_parts.is_empty()
    }

    pub fn is_quasi_semisimple(&self) -> bool {
        let trivial = |u: &UnipotentLabel| u.partition.parts().iter().all(|&p| p == 1);
        trivial(&self.sp_part) && trivial(&self.ort_part) && self.gl_parts.iter().all(|(_, l)| l.parts().iter().all(|&p| p == 1))
    }

    /// The `(n_+, n_-)` multiplicities of the eigenvalues `±1` of `gσ(g)` on the two blocks.
    pub fn n_plus_minus(&self, n: u32) -> (u32, u32) {
        let (s, o) = (self.sp_part.size(), self.ort_part.size());
        if n % 2 == 0 {
            (s, o)
        } else {
            (o, s)
        }
    }
}

pub fn enum_class_types(n: u32, q: u64) -> Result<Vec<ClassData>> {
    check_budget(n, q)?;
    let orbits: Vec<(EigOrbit, u32)> =
        eig_orbits(n, q).into_iter().filter(|o| o.special.is_none()).map(|o| (o, 2 * o.d)).collect();
    let mut out = Vec::new();
    for (gl_parts, left) in assignments(&orbits, n) {
        let gl_parts: Vec<(EigOrbit, Partition)> = gl_parts.into_iter().map(|(l, o)| (o, l)).collect();
        for s in (0..=left).step_by(2) {
            let o = left - s;
            let etas: &[i8] = if n % 2 == 1 || o > 0 { &[1, -1] } else { &[1] };
            for &eta in etas {
                let form_sign = if n % 2 == 0 { eta } else { 1 };
                for sp in UnipotentLabel::all_sp(s) {
                    for ort in UnipotentLabel::all_ort(o, form_sign, q) {
                        out.push(ClassData { eta, sp_part: sp.clone(), ort_part: ort, gl_parts: gl_parts.clone() });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Order of the centralizer in `GL_n(q)` of an element of the class.
pub fn centralizer_order(c: &ClassData, q: u64) -> Result<u128> {
    let mut order = c.sp_part.centralizer_order(q)? * c.ort_part.centralizer_order(q)?;
    for (x, lam) in &c.gl_parts {
        let qd = q.pow(x.d);
        let family = if x.eps > 0 { Family::GL } else { Family::GLMinus };
        let dim = centralizer_dim(lam, GroupKind::GL)?;
        let mut red_dim = 0;
        for (_, m) in lam.multiplicities() {
            order *= group_order(family, m, qd)?;
            red_dim += m * m;
        }
        order *= (qd as u128).pow(dim - red_dim);
    }
    Ok(order)
}

pub fn class_size(c: &ClassData, n: u32, q: u64) -> Result<u128> {
    if c.weight() != n {
        return Err(Error::Incompatible(format!("class of weight {} for n={n}", c.weight())));
    }
    let g = group_order(Family::GL, n, q)?;
    let z = centralizer_order(c, q)?;
    if g % z != 0 {
        return Err(Error::Incompatible(format!("centralizer order {z} does not divide {g}")));
    }
    Ok(g / z)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountIdentity {
    pub chars: u64,
    pub classes: u64,
    pub equal: bool,
}

pub fn count_identity(n: u32, q: u64) -> Result<CountIdentity> {
    let chars = enum_char_types(n, q)?.len() as u64;
    let classes = enum_class_types(n, q)?.len() as u64;
    Ok(CountIdentity { chars, classes, equal: chars == classes })
}

/// Printed closed-form character counts for `2 ≤ n ≤ 5`.
///
/// For `n = 4, 5` these leave out the orbits of size 4; see [`closed_form_count`].
pub fn printed_closed_form_count(n: u32, q: u64) -> Option<u64> {
    match n {
        2 => Some(q + 3),
        3 => Some(2 * q + 6),
        4 => Some((q - 2) * (q - 3) / 2 + 7 * (q - 2) + 20),
        5 => Some((q - 2) * (q - 3) + 14 * (q - 2) + 36),
        _ => None,
    }
}

/// Closed-form character counts for `2 ≤ n ≤ 5`, including the `q(q-1)/2`
/// characters attached to orbits of size 4 (twice that for `n = 5`).
pub fn closed_form_count(n: u32, q: u64) -> Option<u64> {
    let extra = match n {
        4 => q * (q - 1) / 2,
        5 => q * (q - 1),
        _ => 0,
    };
    printed_closed_form_count(n, q).map(|c| c + extra)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CuspKind {
    Sp,
    SO,
}

/// Whether a cuspidal unipotent pair exists in rank `size`, with its staircase partition.
pub fn cuspidal_support_exists(kind: CuspKind, size: u32) -> (bool, Option<Partition>) {
    for d in 0..=size {
        let (hit, parts): (bool, Vec<u32>) = match kind {
            CuspKind::Sp => (d * (d + 1) == size, (1..=d).rev().map(|i| 2 * i).collect()),
            CuspKind::SO => (d * d == size, (1..=d).rev().map(|i| 2 * i - 1).collect()),
        };
        if hit {
            return (true, Some(Partition::new(parts)));
        }
    }
    (false, None)
}

/// Multiset of class sizes, as size -> multiplicity.
pub fn class_size_histogram(n: u32, q: u64) -> Result<BTreeMap<u128, usize>> {
    let mut out = BTreeMap::new();
    for c in enum_class_types(n, q)? {
        *out.entry(class_size(&c, n, q)?).or_insert(0) += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(Family::GL, 2, 5).unwrap(), 480);
        assert_eq!(group_order(Family::GLMinus, 2, 5).unwrap(), 720);
        for q in [3u64, 5, 7] {
            assert_eq!(group_order(Family::Sp, 2, q).unwrap(), (q * (q * q - 1)) as u128);
            assert_eq!(group_order(Family::OPlus, 2, q).unwrap(), 2 * (q as u128 - 1));
            assert_eq!(group_order(Family::OMinus, 2, q).unwrap(), 2 * (q as u128 + 1));
            assert_eq!(group_order(Family::SOOdd, 3, q).unwrap(), (q * (q * q - 1)) as u128);
        }
        assert!(group_order(Family::Sp, 3, 5).is_err());
        assert!(group_order(Family::SOMinus, 0, 5).is_err());
    }

    /// Unitary order via `|GL_n(q^2)|`-style brute force: count matrices preserving a Hermitian form.
    #[test]
    fn unitary_order_small() {
        // |U_1(q)| = q + 1, |U_2(q)| = q(q+1)(q^2-1)
        assert_eq!(group_order(Family::GLMinus, 1, 5).unwrap(), 6);
        assert_eq!(group_order(Family::GLMinus, 2, 3).unwrap(), 3 * 4 * 8);
    }

    fn mobius(n: u64) -> i64 {
        let mut n = n;
        let mut r = 1;
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                n /= d;
                if n % d == 0 {
                    return 0;
                }
                r = -r;
            }
            d += 1;
        }
        if n > 1 {
            -r
        } else {
            r
        }
    }

    fn npart(k: u32) -> u64 {
        Partition::all(k).len() as u64
    }

    /// Number of inverse-closed classes of `GL_n(q)`, from counts of monic
    /// irreducible polynomials and self-reciprocal ones.
    fn inverse_closed_classes(n: u32, q: u64) -> u64 {
        let divisors = |d: u64| (1..=d).filter(move |e| d % e == 0);
        let irr = |d: u64| {
            let s: i64 = divisors(d).map(|e| mobius(e) * q.pow((d / e) as u32) as i64).sum();
            s as u64 / d - u64::from(d == 1)
        };
        let selfrec = |d: u64| match d {
            1 => 2,
            _ if d % 2 == 1 => 0,
            _ => {
                let h = d / 2;
                let s: i64 = divisors(h).filter(|e| e % 2 == 1).map(|e| mobius(e) * (q.pow((h / e) as u32) as i64 - 1)).sum();
                s as u64 / d
            }
        };
        let mut poly = vec![0u64; n as usize + 1];
        poly[0] = 1;
        let mut mul = |w: usize| {
            let mut next = vec![0u64; n as usize + 1];
            for (i, &c) in poly.iter().enumerate() {
                let mut k = 0;
                while c != 0 && i + k * w <= n as usize {
                    next[i + k * w] += c * npart(k as u32);
                    k += 1;
                }
            }
            poly = next;
        };
        for d in 1..=n as u64 {
            for _ in 0..selfrec(d) {
                mul(d as usize);
            }
            for _ in 0..(irr(d) - selfrec(d)) / 2 {
                mul(2 * d as usize);
            }
        }
        poly[n as usize]
    }

    #[test]
    fn counts_match_polynomial_oracle() {
        for q in [5u64, 9, 13] {
            for n in 1..=5 {
                let c = count_identity(n, q).unwrap();
                assert!(c.equal);
                assert_eq!(c.classes, inverse_closed_classes(n, q), "n={n} q={q}");
            }
        }
        assert_eq!(inverse_closed_classes(4, 5), 54);
    }

    #[test]
    fn char_counts_match_closed_forms() {
        for q in [5u64, 9, 13] {
            for n in 2..=5 {
                let c = count_identity(n, q).unwrap();
                assert!(c.equal, "n={n} q={q}: {c:?}");
                assert_eq!(c.chars, closed_form_count(n, q).unwrap(), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn quadratic_unipotent_count() {
        let qu = enum_char_types(4, 5).unwrap().into_iter().filter(|t| t.is_quadratic_unipotent()).count();
        assert_eq!(qu, 20);
    }

    #[test]
    fn isolated_counts() {
        for (n, want) in [(2, 5), (3, 10), (4, 20), (5, 36)] {
            let iso = enum_class_types(n, 5).unwrap().into_iter().filter(|c| c.is_isolated()).count();
            assert_eq!(iso, want, "n={n}");
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for q in [5u64, 9, 13] {
            for n in 1..=5 {
                let g = group_order(Family::GL, n, q).unwrap();
                let total: u128 = enum_class_types(n, q).unwrap().iter().map(|c| class_size(c, n, q).unwrap()).sum();
                assert_eq!(total, g, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn gl2_sizes_at_q5() {
        let mut sizes: Vec<u128> = enum_class_types(2, 5).unwrap().iter().map(|c| class_size(c, 2, 5).unwrap()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![4, 40, 48, 48, 60, 80, 80, 120]);
    }

    #[test]
    fn unipotent_label_counts() {
        for size in (0..=8).step_by(2) {
            for part in Partition::all(size) {
                if let Some(k) = classify(&part).symplectic {
                    let n = UnipotentLabel::all_sp(size).iter().filter(|u| u.partition == part).count();
                    assert_eq!(n, 1 << k.kappa);
                }
            }
        }
        for size in 1..=8 {
            for part in Partition::all(size) {
                let Some(k) = classify(&part).orthogonal else { continue };
                if k.kappa == 0 {
                    continue;
                }
                for sign in [1, -1] {
                    if size % 2 == 0 || sign == 1 {
                        let n = UnipotentLabel::all_ort(size, sign, 5).iter().filter(|u| u.partition == part).count();
                        assert_eq!(n, 1 << (k.kappa - 1));
                    }
                }
            }
        }
        assert!(UnipotentLabel::all_ort(4, -1, 5).iter().all(|u| u.partition != p(&[2, 2])));
        assert_eq!(UnipotentLabel::all_ort(4, 1, 5).iter().filter(|u| u.partition == p(&[2, 2])).count(), 1);
    }

    /// Unipotent class sizes of `Sp_4(q)` and `O^±_4(q)` add up to the number of unipotent elements `q^{dim - rank}`.
    #[test]
    fn unipotent_classes_fill_unipotent_variety() {
        for q in [3u64, 5] {
            let sp4 = group_order(Family::Sp, 4, q).unwrap();
            let total: u128 = UnipotentLabel::all_sp(4).iter().map(|u| sp4 / u.centralizer_order(q).unwrap()).sum();
            assert_eq!(total, (q as u128).pow(8));
            let sp6 = group_order(Family::Sp, 6, q).unwrap();
            let total: u128 = UnipotentLabel::all_sp(6).iter().map(|u| sp6 / u.centralizer_order(q).unwrap()).sum();
            assert_eq!(total, (q as u128).pow(18));
            for (sign, fam) in [(1, Family::OPlus), (-1, Family::OMinus)] {
                let o4 = group_order(fam, 4, q).unwrap();
                let total: u128 =
                    UnipotentLabel::all_ort(4, sign, q).iter().map(|u| o4 / u.centralizer_order(q).unwrap()).sum();
                assert_eq!(total, (q as u128).pow(4));
            }
            let o5 = group_order(Family::OPlus, 5, q).unwrap();
            let total: u128 = UnipotentLabel::all_ort(5, 1, q).iter().map(|u| o5 / u.centralizer_order(q).unwrap()).sum();
            assert_eq!(total, (q as u128).pow(8));
        }
    }

    #[test]
    fn uniform_examples() {
        let r1eta = CharType { lam_plus: p(&[1]), lam_minus: p(&[1]), pairs: vec![], selfdual: vec![] };
        assert!(!is_uniform(&r1eta));
        let chi3 = CharType { lam_plus: p(&[2, 1]), lam_minus: p(&[]), pairs: vec![], selfdual: vec![] };
        assert!(!is_uniform(&chi3));
        let triv = CharType { lam_plus: p(&[3]), lam_minus: p(&[]), pairs: vec![], selfdual: vec![] };
        assert!(is_uniform(&triv));
        let count = |n| enum_char_types(n, 5).unwrap().iter().filter(|t| !is_uniform(t)).count();
        assert_eq!(count(2), 1);
        assert_eq!(count(3), 2);
    }

    #[test]
    fn cuspidal_examples() {
        assert_eq!(cuspidal_support_exists(CuspKind::Sp, 2), (true, Some(p(&[2]))));
        assert_eq!(cuspidal_support_exists(CuspKind::SO, 1), (true, Some(p(&[1]))));
        assert_eq!(cuspidal_support_exists(CuspKind::Sp, 4).0, false);
        assert_eq!(cuspidal_support_exists(CuspKind::Sp, 6), (true, Some(p(&[4, 2]))));
        assert_eq!(cuspidal_support_exists(CuspKind::SO, 9), (true, Some(p(&[5, 3, 1]))));
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        use std::collections::HashSet;
        for n in 2..=5 {
            let cs = enum_class_types(n, 9).unwrap();
            assert_eq!(cs.iter().collect::<HashSet<_>>().len(), cs.len());
            let ts = enum_char_types(n, 9).unwrap();
            assert_eq!(ts.iter().collect::<HashSet<_>>().len(), ts.len());
            assert!(ts.iter().all(|t| t.weight() == n));
            assert!(cs.iter().all(|c| c.weight() == n));
        }
    }

    #[test]
    fn budget() {
        assert!(enum_char_types(7, 5).is_err());
        assert!(enum_class_types(2, 17).is_err());
    }
}
