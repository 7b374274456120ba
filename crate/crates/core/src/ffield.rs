//! Finite fields `F_{q^r}` with log tables, multiplicative characters, and the
//! two orbit sets: characters under Frobenius and inversion, and eigenvalue
//! classes `{a, -a, a⁻¹, -a⁻¹}` under Frobenius.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cyc::{mod_pow, CycValue};
use crate::error::{Error, Result};

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `(p, e)` with `q = p^e`, for an odd prime power `q`.
pub fn split_prime_power(q: u64) -> Result<(u64, u32)> {
    let p = prime_factors(q).first().copied().ok_or(Error::NotPrime(q))?;
    let mut e = 0;
    let mut t = q;
    while t % p == 0 {
        t /= p;
        e += 1;
    }
    if t != 1 || p == 2 {
        return Err(Error::InadmissibleQ { q, reason: "not an odd prime power".into() });
    }
    Ok((p, e))
}

// Dense polynomials over F_p, coefficients low to high.
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mut a = a.to_vec();
    let dm = m.len() - 1;
    let lead_inv = mod_pow(m[dm], p - 2, p);
    while a.len() > dm {
        let c = a[a.len() - 1] * lead_inv % p;
        let shift = a.len() - 1 - dm;
        for (i, &mi) in m.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - c * mi % p) % p;
        }
        a = trim(a);
        if a.is_empty() {
            break;
        }
    }
    trim(a)
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_rem(&trim(out), m, p)
}

fn poly_powmod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
    let mut r = vec![1];
    let mut b = poly_rem(a, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(&r, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_sub_x(a: &[u64], p: u64) -> Poly {
    let mut a = a.to_vec();
    if a.len() < 2 {
        a.resize(2, 0);
    }
    a[1] = (a[1] + p - 1) % p;
    trim(a)
}

/// Rabin's irreducibility test for a monic polynomial of degree `d`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = (f.len() - 1) as u64;
    let x = vec![0, 1];
    if !poly_rem(&poly_sub_x(&poly_powmod(&x, p.pow(d as u32), f, p), p), f, p).is_empty() {
        return false;
    }
    prime_factors(d).into_iter().all(|l| {
        let h = poly_sub_x(&poly_powmod(&x, p.pow((d / l) as u32), f, p), p);
        poly_gcd(f, &h, p).len() == 1
    })
}

/// Specification of `F_{q^r}` with `q = p^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub e: u32,
    pub r: u32,
    /// Monic modulus, coefficients low to high.
    pub modulus: Vec<u64>,
    /// Encoded generator of the multiplicative group.
    pub generator: u32,
}

impl FieldSpec {
    pub fn q(&self) -> u64 {
        self.p.pow(self.e)
    }

    pub fn degree(&self) -> u32 {
        self.e * self.r
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.degree())
    }
}

/// `F_{p^D}` with elements encoded as integers `Σ c_i p^i` and log/antilog tables.
#[derive(Clone, Debug)]
pub struct Field {
    pub spec: FieldSpec,
    size: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn decode(x: u32, p: u64, d: usize) -> Poly {
    let mut out = Vec::with_capacity(d);
    let mut x = x as u64;
    for _ in 0..d {
        out.push(x % p);
        x /= p;
    }
    trim(out)
}

fn encode(a: &[u64], p: u64) -> u32 {
    a.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
}

/// Builds `F_{q^r}` with the first irreducible monic modulus (lower coefficients
/// ordered lexicographically from the top degree down) and the smallest primitive
/// element in the integer encoding.
pub fn build_field(p: u64, e: u32, r: u32) -> Result<Field> {
    if !is_prime(p) || p == 2 {
        return Err(Error::NotPrime(p));
    }
    let d = (e * r) as usize;
    let size = p.pow(d as u32);
    if size > 1 << 24 {
        return Err(Error::Budget { needed: size, budget: 1 << 24 });
    }
    let modulus = (0..p.pow(d as u32))
        .map(|low| {
            let mut f = decode(low as u32, p, d);
            f.resize(d, 0);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists in every degree");
    let order = size - 1;
    let factors = prime_factors(order);
    let generator = (1..size as u32)
        .find(|&g| {
            let a = decode(g, p, d);
            factors.iter().all(|&l| poly_powmod(&a, order / l, &modulus, p) != vec![1])
        })
        .expect("multiplicative group is cyclic");
    let mut exp = vec![0u32; order as usize];
    let mut log = vec![0u32; size as usize];
    let gp = decode(generator, p, d);
    let mut cur: Poly = vec![1];
    for k in 0..order as usize {
        let c = encode(&cur, p);
        exp[k] = c;
        log[c as usize] = k as u32;
        cur = poly_mulmod(&cur, &gp, &modulus, p);
    }
    let spec = FieldSpec { p, e, r, modulus, generator };
    Ok(Field { spec, size: size as u32, exp, log })
}

impl Field {
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Order of the multiplicative group.
    pub fn units(&self) -> u64 {
        self.size as u64 - 1
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.spec.p as u32;
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        let p = self.spec.p as u32;
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % self.units();
        self.exp[k as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let k = (self.units() - self.log[a as usize] as u64) % self.units();
        self.exp[k as usize]
    }

    pub fn pow(&self, a: u32, e: i64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let k = (self.log[a as usize] as i128 * e as i128).rem_euclid(self.units() as i128);
        self.exp[k as usize]
    }

    /// Discrete logarithm to the fixed generator.
    pub fn log(&self, a: u32) -> u64 {
        assert!(a != 0, "log of zero");
        self.log[a as usize] as u64
    }

    /// `g^k` for the fixed generator `g`.
    pub fn exp(&self, k: i64) -> u32 {
        self.exp[k.rem_euclid(self.units() as i64) as usize]
    }

    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.spec.p as i64) as u32
    }

    /// Elements fixed by `x ↦ x^{p^s}`.
    pub fn in_subfield(&self, a: u32, s: u32) -> bool {
        a == 0 || self.pow(a, self.spec.p.pow(s) as i64) == a
    }

    pub fn is_square(&self, a: u32) -> bool {
        a != 0 && self.log(a) % 2 == 0
    }
}

/// `N_{F_{q^r}/F_{q^s}}(x) = x^{(q^r-1)/(q^s-1)}`, computed inside `field = F_{q^r}`.
pub fn norm(field: &Field, x: u32, r: u32, s: u32) -> Result<u32> {
    if s == 0 || r % s != 0 {
        return Err(Error::Precondition(format!("norm: {s} does not divide {r}")));
    }
    let q = field.spec.q();
    Ok(field.pow(x, ((q.pow(r) - 1) / (q.pow(s) - 1)) as i64))
}

/// The multiplicative character `x ↦ ζ^{k·log x}` of `F_{q^r}^*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultChar {
    pub r: u32,
    pub k: u64,
}

impl MultChar {
    pub fn modulus(&self, q: u64) -> u64 {
        q.pow(self.r) - 1
    }

    pub fn trivial() -> Self {
        MultChar { r: 1, k: 0 }
    }

    /// The quadratic character of `F_q^*`.
    pub fn eta(q: u64) -> Self {
        MultChar { r: 1, k: (q - 1) / 2 }
    }

    pub fn frobenius(&self, q: u64) -> Self {
        let m = self.modulus(q);
        MultChar { r: self.r, k: (self.k as u128 * q as u128 % m as u128) as u64 }
    }

    pub fn inverse(&self, q: u64) -> Self {
        let m = self.modulus(q);
        MultChar { r: self.r, k: (m - self.k % m) % m }
    }

    /// Value at the element with discrete log `log_x` in `F_{q^r}`.
    pub fn eval_log(&self, q: u64, log_x: u64, conductor: u64) -> CycValue {
        let m = self.modulus(q);
        let e = (self.k as u128 * log_x as u128 % m as u128) as i64;
        CycValue::root_of_unity(conductor, q, m, e)
    }
}

/// Evaluates `c` at the nonzero element `x` of `field` (which must be `F_{q^r}`).
pub fn char_eval(field: &Field, c: MultChar, x: u32, conductor: u64) -> Result<CycValue> {
    if x == 0 {
        return Err(Error::Precondition("character evaluated at zero".into()));
    }
    if field.spec.r != c.r {
        return Err(Error::Incompatible(format!("character of degree {} on F_q^{}", c.r, field.spec.r)));
    }
    Ok(c.eval_log(field.spec.q(), field.log(x), conductor))
}

/// Conductor used for all values attached to `(n, q)`: `8·lcm(q^r - 1, r ≤ n)`.
pub fn session_conductor(n: u32, q: u64) -> u64 {
    let lcm = (1..=n.max(2)).fold(1u64, |acc, r| {
        let m = q.pow(r) - 1;
        acc / gcd(acc, m) * m
    });
    lcm * 8
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An orbit of `⟨F⟩ × ⟨inversion⟩` on multiplicative characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharOrbitStar {
    pub rep: MultChar,
    pub size: u32,
    pub self_inverse: bool,
}

impl CharOrbitStar {
    pub fn is_trivial(&self) -> bool {
        self.rep.r == 1 && self.rep.k == 0
    }

    pub fn is_eta(&self, q: u64) -> bool {
        self.rep.r == 1 && self.rep.k == (q - 1) / 2
    }

    /// Frobenius orbit size of the representative.
    pub fn frob_size(&self) -> u32 {
        self.rep.r
    }
}

fn frob_orbit(k: u64, q: u64, m: u64) -> Vec<u64> {
    let mut out = vec![k];
    let mut x = (k as u128 * q as u128 % m as u128) as u64;
    while x != k {
        out.push(x);
        x = (x as u128 * q as u128 % m as u128) as u64;
    }
    out
}

/// All character orbits of total size at most `n`, sorted by `(size, r, k)`.
pub fn star_orbits(n: u32, q: u64) -> Vec<CharOrbitStar> {
    let mut out = Vec::new();
    for r in 1..=n {
        // a primitive orbit at level r has size r (self-inverse) or 2r
        if r > 1 && r % 2 == 1 && 2 * r > n {
            continue;
        }
        let m = q.pow(r) - 1;
        let mut seen = vec![false; m as usize];
        for k in 0..m {
            if seen[k as usize] {
                continue;
            }
            let fo = frob_orbit(k, q, m);
            let inv: Vec<u64> = fo.iter().map(|&x| (m - x) % m).collect();
            for &x in fo.iter().chain(&inv) {
                seen[x as usize] = true;
            }
            if fo.len() as u32 != r {
                continue;
            }
            let self_inverse = fo.contains(&((m - k) % m));
            let size = if self_inverse { r } else { 2 * r };
            if size > n {
                continue;
            }
            let rep = fo.iter().chain(&inv).copied().min().unwrap();
            out.push(CharOrbitStar { rep: MultChar { r, k: rep }, size, self_inverse });
        }
    }
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecialOrbit {
    One,
    I,
}

/// An F-orbit of eigenvalue classes `â = {a, -a, a⁻¹, -a⁻¹}` with `a ∈ F_{q^{2d}}^*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EigOrbit {
    pub d: u32,
    /// Discrete log of the representative in `F_{q^{2d}}`.
    pub rep_log: u64,
    pub eps: i8,
    pub e: i8,
    pub special: Option<SpecialOrbit>,
}

impl EigOrbit {
    pub fn field_degree(&self) -> u32 {
        2 * self.d
    }

    pub fn modulus(&self, q: u64) -> u64 {
        q.pow(2 * self.d) - 1
    }

    pub fn kind(&self) -> (u32, i8, i8) {
        (self.d, self.eps, self.e)
    }
}

fn hat(i: u64, m: u64) -> [u64; 4] {
    let h = m / 2;
    [i, (m - i) % m, (i + h) % m, (m - i + h) % m]
}

/// Type `(ε, e)` of `â` from `a^{q^d} = e·a^ε`, read off logarithms.
fn orbit_type(i: u64, q: u64, d: u32, m: u64) -> (i8, i8) {
    let fi = (i as u128 * q.pow(d) as u128 % m as u128) as u64;
    let h = hat(i, m);
    match h.iter().position(|&x| x == fi) {
        Some(0) => (1, 1),
        Some(1) => (-1, 1),
        Some(2) => (1, -1),
        Some(3) => (-1, -1),
        _ => unreachable!("Frobenius power outside the class"),
    }
}

/// Full F-orbit of `â`, as a set of logarithms modulo `m`.
fn eig_closure(i: u64, q: u64, m: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut x = i;
    loop {
        out.extend(hat(x, m));
        x = (x as u128 * q as u128 % m as u128) as u64;
        if out.contains(&x) {
            return out;
        }
    }
}

/// The orbit containing the element with discrete log `log_a` in `F_{q^{2d0}}`.
pub fn eig_orbit_of(log_a: u64, d0: u32, q: u64) -> EigOrbit {
    let m = q.pow(2 * d0) - 1;
    let quarter = m / 4;
    if log_a % quarter == 0 {
        let special = if log_a % (m / 2) == 0 { SpecialOrbit::One } else { SpecialOrbit::I };
        let rep_log = if special == SpecialOrbit::One { 0 } else { (q * q - 1) / 4 };
        return EigOrbit { d: 1, rep_log, eps: 1, e: 1, special: Some(special) };
    }
    let orbit = eig_closure(log_a, q, m);
    let d = orbit.len() as u32 / 4;
    // rewrite in F_{q^{2d}}, the smallest field containing the orbit
    let md = q.pow(2 * d) - 1;
    let scale = m / md;
    let rep = orbit.iter().map(|&x| x / scale).min().unwrap();
    let (eps, e) = orbit_type(rep, q, d, md);
    EigOrbit { d, rep_log: rep, eps, e, special: None }
}

/// The flagged orbits `1̂`, `𝔦̂` and every F-orbit of size `d ≤ n/2`.
pub fn eig_orbits(n: u32, q: u64) -> Vec<EigOrbit> {
    let m1 = q * q - 1;
    let mut out = vec![
        EigOrbit { d: 1, rep_log: 0, eps: 1, e: 1, special: Some(SpecialOrbit::One) },
        EigOrbit { d: 1, rep_log: m1 / 4, eps: 1, e: 1, special: Some(SpecialOrbit::I) },
    ];
    for d in 1..=n / 2 {
        let m = q.pow(2 * d) - 1;
        let mut seen = vec![false; m as usize];
        for i in 0..m {
            if seen[i as usize] {
                continue;
            }
            let orbit = eig_closure(i, q, m);
            for &x in &orbit {
                seen[x as usize] = true;
            }
            let special = i % (m / 4) == 0;
            if special || orbit.len() as u32 != 4 * d {
                continue;
            }
            let rep = *orbit.iter().next().unwrap();
            let (eps, e) = orbit_type(rep, q, d, m);
            out.push(EigOrbit { d, rep_log: rep, eps, e, special: None });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        let f5 = build_field(5, 1, 1).unwrap();
        assert_eq!(f5.spec.generator, 2);
        let f25 = build_field(5, 1, 2).unwrap();
        assert_eq!(f25.units(), 24);
        let f9 = build_field(3, 2, 1).unwrap();
        let i = f9.exp(2);
        assert_eq!(f9.mul(i, i), f9.neg(1));
        assert!(build_field(9, 1, 1).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, e, r) in [(3, 2, 1), (5, 1, 2), (3, 1, 3)] {
            let f = build_field(p, e, r).unwrap();
            let n = f.size();
            for a in 0..n {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..n {
                    for c in [0, 1, 2, n - 1] {
                        let lhs = f.mul(a, f.add(b, c));
                        assert_eq!(lhs, f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn norm_examples() {
        let f25 = build_field(5, 1, 2).unwrap();
        let g = f25.exp(1);
        let ng = norm(&f25, g, 2, 1).unwrap();
        assert_eq!(ng, f25.exp(6));
        assert!(f25.in_subfield(ng, 1));
        assert_eq!(norm(&f25, 0, 2, 1).unwrap(), 0);
        assert!(norm(&f25, g, 2, 3).is_err());
        let f5 = build_field(5, 1, 1).unwrap();
        assert_eq!(norm(&f5, 3, 1, 1).unwrap(), 3);
    }

    #[test]
    fn norm_is_multiplicative_and_onto() {
        let f = build_field(3, 2, 2).unwrap();
        let mut image = BTreeSet::new();
        for a in 1..f.size() {
            let na = norm(&f, a, 2, 1).unwrap();
            image.insert(na);
            for b in [1, 5, 17] {
                assert_eq!(norm(&f, f.mul(a, b), 2, 1).unwrap(), f.mul(na, norm(&f, b, 2, 1).unwrap()));
            }
        }
        assert_eq!(image.len(), 8);
    }

    #[test]
    fn characters() {
        let f5 = build_field(5, 1, 1).unwrap();
        let n = 8 * 4;
        for x in 1..5 {
            assert_eq!(char_eval(&f5, MultChar::trivial(), x, n).unwrap().to_int(), Some(1));
        }
        assert_eq!(char_eval(&f5, MultChar::eta(5), 2, n).unwrap().to_int(), Some(-1));
        assert!(char_eval(&f5, MultChar::eta(5), 0, n).is_err());
        // ω^q = ω⁻¹ is trivial on F_q^*
        let q = 5;
        let f25 = build_field(5, 1, 2).unwrap();
        let cond = session_conductor(2, q);
        for j in 0..(q + 1) {
            let w = MultChar { r: 2, k: (q - 1) * j };
            assert_eq!(w.frobenius(q), w.inverse(q));
            for a in 1..f25.size() {
                if f25.in_subfield(a, 1) {
                    assert_eq!(char_eval(&f25, w, a, cond).unwrap().to_int(), Some(1));
                }
            }
        }
    }

    #[test]
    fn character_multiplicativity() {
        let f = build_field(3, 2, 1).unwrap();
        let cond = session_conductor(2, 9);
        for k in 0..8 {
            let c = MultChar { r: 1, k };
            for a in 1..9 {
                for b in 1..9 {
                    let lhs = char_eval(&f, c, f.mul(a, b), cond).unwrap();
                    let rhs = &char_eval(&f, c, a, cond).unwrap() * &char_eval(&f, c, b, cond).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn conductor_values() {
        assert_eq!(session_conductor(3, 13), 245952);
        assert_eq!(session_conductor(2, 5), 192);
    }

    #[test]
    fn star_orbit_examples() {
        let orbits = star_orbits(2, 5);
        let size_one: Vec<_> = orbits.iter().filter(|o| o.size == 1).collect();
        assert_eq!(size_one.len(), 2);
        assert!(size_one[0].is_trivial() && size_one[1].is_eta(5));
    }

    /// Each character of `F_{q^r}^*` with orbit size at most `n` occurs in exactly one orbit.
    #[test]
    fn star_orbits_partition_characters() {
        for (n, q) in [(2u32, 5u64), (3, 5), (4, 5), (4, 9)] {
            let orbits = star_orbits(n, q);
            for r in 1..=n {
                let m = q.pow(r) - 1;
                for k in 0..m {
                    let fo = frob_orbit(k, q, m);
                    if fo.len() as u32 != r {
                        continue;
                    }
                    let selfinv = fo.contains(&((m - k) % m));
                    let size = if selfinv { r } else { 2 * r };
                    let hits = orbits
                        .iter()
                        .filter(|o| o.rep.r == r && (fo.contains(&o.rep.k) || fo.contains(&((m - o.rep.k) % m))))
                        .count();
                    assert_eq!(hits, usize::from(size <= n), "n={n} q={q} r={r} k={k}");
                }
            }
        }
    }

    #[test]
    fn eig_orbit_examples() {
        let orbits = eig_orbits(2, 5);
        let regular: Vec<_> = orbits.iter().filter(|o| o.special.is_none()).collect();
        let count = |t: (i8, i8)| regular.iter().filter(|o| (o.eps, o.e) == t).count();
        assert_eq!(count((1, 1)), 0);
        assert_eq!(count((1, -1)), 1);
        assert_eq!(count((-1, 1)), 1);
        assert_eq!(count((-1, -1)), 1);
    }

    #[test]
    fn eig_orbit_counts_at_d1() {
        for q in [5u64, 9, 13] {
            let regular: Vec<_> = eig_orbits(2, q).into_iter().filter(|o| o.special.is_none()).collect();
            let count = |t: (i8, i8)| regular.iter().filter(|o| (o.eps, o.e) == t).count() as u64;
            assert_eq!(count((1, 1)), (q - 5) / 4);
            assert_eq!(count((1, -1)), (q - 1) / 4);
            assert_eq!(count((-1, 1)), (q - 1) / 4);
            assert_eq!(count((-1, -1)), (q - 1) / 4);
        }
    }

    #[test]
    fn eig_type_is_representative_independent() {
        for q in [5u64, 9, 13] {
            for o in eig_orbits(4, q).into_iter().filter(|o| o.special.is_none()) {
                let m = o.modulus(q);
                for x in eig_closure(o.rep_log, q, m) {
                    assert_eq!(orbit_type(x, q, o.d, m), (o.eps, o.e));
                }
            }
        }
    }

    #[test]
    fn orbit_lookup_agrees_with_enumeration() {
        for q in [5u64, 9] {
            let all = eig_orbits(4, q);
            for o in &all {
                let m = o.modulus(q);
                for x in eig_closure(o.rep_log, q, m) {
                    assert_eq!(eig_orbit_of(x, o.d, q), *o);
                }
                if o.d == 1 {
                    // same orbit seen from F_{q^4}
                    let lift = o.rep_log * (q * q + 1);
                    assert_eq!(eig_orbit_of(lift, 2, q), *o);
                }
            }
        }
    }

    #[test]
    fn omega_i_lambda_is_choice_free() {
        for q in [5u64, 9] {
            let f = build_field(split_prime_power(q).unwrap().0, split_prime_power(q).unwrap().1, 2).unwrap();
            let cond = session_conductor(2, q);
            let m = q * q - 1;
            let i_log = m / 4;
            for j in 1..=q {
                let w = MultChar { r: 2, k: (q - 1) * j };
                let mut vals = BTreeSet::new();
                for lam in 1..f.size() {
                    if f.pow(lam, q as i64) != f.neg(lam) {
                        continue;
                    }
                    for ii in [i_log, 3 * i_log] {
                        let x = f.mul(f.exp(ii as i64), lam);
                        vals.insert(char_eval(&f, w, x, cond).unwrap().to_string());
                    }
                }
                assert_eq!(vals.len(), 1);
            }
        }
    }
}
