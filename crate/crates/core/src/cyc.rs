//! Exact values `a + b·√q` with `a, b ∈ ℤ[ζ_N]`.
//!
//! Elements of `ℤ[ζ_N]` are kept in the integral basis obtained as the tensor
//! product, over the prime powers `p^k ‖ N`, of the power bases
//! `{ζ_{p^k}^{t p^{k-1} + i} : 0 ≤ t ≤ p-2, 0 ≤ i < p^{k-1}}`. Exponents of
//! `ζ_N` are split by the Chinese remainder theorem, so a monomial reduces to
//! at most `∏(p-1)` basis terms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

#[derive(Debug)]
struct Local {
    p: u64,
    /// `p^(k-1)`
    step: u64,
    pk: u64,
    cofactor: u64,
    /// inverse of `cofactor` modulo `pk`
    inv: u64,
}

#[derive(Debug)]
struct Basis {
    n: u64,
    locals: Vec<Local>,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

pub(crate) fn mod_inv(a: u64, m: u64) -> u64 {
    let (mut t, mut nt, mut r, mut nr) = (0i128, 1i128, m as i128, (a % m) as i128);
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    assert_eq!(r, 1, "{a} not invertible mod {m}");
    t.rem_euclid(m as i128) as u64
}

fn basis(n: u64) -> Arc<Basis> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| {
            let locals = factorize(n)
                .into_iter()
                .map(|(p, k)| {
                    let pk = p.pow(k);
                    let cofactor = n / pk;
                    let inv = if pk == 1 { 0 } else { mod_inv(cofactor % pk, pk) };
                    Local { p, step: pk / p, pk, cofactor, inv }
                })
                .collect();
            Arc::new(Basis { n, locals })
        })
        .clone()
}

impl Basis {
    /// Writes `ζ_N^e` in the integral basis.
    fn reduce(&self, e: u64, coeff: i64, out: &mut BTreeMap<u64, i64>) {
        let mut acc: Vec<(u64, i64)> = vec![(0, coeff)];
        for l in &self.locals {
            let c = (e % l.pk) * l.inv % l.pk;
            let (t, i) = (c / l.step, c % l.step);
            let terms: Vec<(u64, i64)> = if t == l.p - 1 {
                (0..l.p - 1).map(|t2| (t2 * l.step + i, -1)).collect()
            } else {
                vec![(c, 1)]
            };
            let mut next = Vec::with_capacity(acc.len() * terms.len());
            for &(x, s) in &acc {
                for &(y, s2) in &terms {
                    next.push(((x + l.cofactor * y) % self.n, s * s2));
                }
            }
            acc = next;
        }
        for (x, s) in acc {
            let slot = out.entry(x).or_insert(0);
            *slot += s;
            if *slot == 0 {
                out.remove(&x);
            }
        }
    }
}

fn isqrt_exact(q: u64) -> Option<u64> {
    let r = (q as f64).sqrt().round() as u64;
    (r * r == q).then_some(r)
}

/// An exact element of `ℤ[ζ_N][√q]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Deserialize)]
pub struct CycValue {
    #[serde(rename = "N")]
    n: u64,
    q: u64,
    a: BTreeMap<u64, i64>,
    b: BTreeMap<u64, i64>,
}

impl CycValue {
    pub fn zero(n: u64, q: u64) -> Self {
        CycValue { n, q, a: BTreeMap::new(), b: BTreeMap::new() }
    }

    pub fn from_int(n: u64, q: u64, k: i64) -> Self {
        let mut v = Self::zero(n, q);
        if k != 0 {
            v.a.insert(0, k);
        }
        v
    }

    pub fn one(n: u64, q: u64) -> Self {
        Self::from_int(n, q, 1)
    }

    /// `ζ_N^e`.
    pub fn zeta(n: u64, q: u64, e: i64) -> Self {
        let mut v = Self::zero(n, q);
        basis(n).reduce(e.rem_euclid(n as i64) as u64, 1, &mut v.a);
        v
    }

    /// `ζ_m^e` for a divisor `m` of `N`.
    pub fn root_of_unity(n: u64, q: u64, m: u64, e: i64) -> Self {
        assert_eq!(n % m, 0, "order {m} does not divide conductor {n}");
        Self::zeta(n, q, e.rem_euclid(m as i64) * (n / m) as i64)
    }

    /// The formal square root of `q` (an integer when `q` is a square).
    pub fn sqrt_q(n: u64, q: u64) -> Self {
        match isqrt_exact(q) {
            Some(r) => Self::from_int(n, q, r as i64),
            None => {
                let mut v = Self::zero(n, q);
                v.b.insert(0, 1);
                v
            }
        }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_empty() && self.b.is_empty()
    }

    /// The rational integer value, if the element is one.
    pub fn to_int(&self) -> Option<i64> {
        if !self.b.is_empty() {
            return None;
        }
        match self.a.len() {
            0 => Some(0),
            1 => self.a.get(&0).copied(),
            _ => None,
        }
    }

    pub fn has_sqrt_part(&self) -> bool {
        !self.b.is_empty()
    }

    /// Sign of the first nonzero coefficient in the canonical basis order.
    pub fn leading_sign(&self) -> i64 {
        self.a.values().next().or_else(|| self.b.values().next()).map_or(0, |c| c.signum())
    }

    pub fn conj(&self) -> Self {
        let bs = basis(self.n);
        let flip = |m: &BTreeMap<u64, i64>| {
            let mut out = BTreeMap::new();
            for (&e, &c) in m {
                bs.reduce((self.n - e) % self.n, c, &mut out);
            }
            out
        };
        CycValue { n: self.n, q: self.q, a: flip(&self.a), b: flip(&self.b) }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(self.n, self.q);
        }
        let m = |x: &BTreeMap<u64, i64>| x.iter().map(|(&e, &c)| (e, c * k)).collect();
        CycValue { n: self.n, q: self.q, a: m(&self.a), b: m(&self.b) }
    }

    /// Image under `ζ_N ↦ ζ_M^{M/N}` for a multiple `M` of `N`.
    pub fn embed(&self, m: u64) -> Self {
        assert_eq!(m % self.n, 0, "cannot embed conductor {} into {m}", self.n);
        let bs = basis(m);
        let f = m / self.n;
        let lift = |x: &BTreeMap<u64, i64>| {
            let mut out = BTreeMap::new();
            for (&e, &c) in x {
                bs.reduce(e * f % m, c, &mut out);
            }
            out
        };
        CycValue { n: m, q: self.q, a: lift(&self.a), b: lift(&self.b) }
    }

    /// Rewrites `√q` as a Gauss sum, giving an element of `ℤ[ζ_M]` with `b = 0`.
    ///
    /// Needs `q = p^e` with `p ≡ 1 (mod 4)` and `p | M`, `N | M`.
    pub fn expand_sqrt(&self, m: u64) -> Self {
        let base = self.embed(m);
        if base.b.is_empty() {
            return base;
        }
        let (p, e) = prime_power(self.q).expect("q is a prime power");
        assert!(p % 4 == 1 && m % p == 0, "cannot express sqrt({}) in conductor {m}", self.q);
        let mut root = Self::zero(m, self.q);
        for x in 1..p {
            let leg = if mod_pow(x, (p - 1) / 2, p) == 1 { 1 } else { -1 };
            root = &root + &Self::root_of_unity(m, self.q, p, x as i64).scale(leg);
        }
        root = root.scale(p.pow((e - 1) / 2) as i64);
        let a = CycValue { n: m, q: self.q, a: base.a, b: BTreeMap::new() };
        let b = CycValue { n: m, q: self.q, a: base.b, b: BTreeMap::new() };
        &a + &(&b * &root)
    }

    /// Same element with a different `q` tag; only for values without a `√q` part.
    pub fn retag(&self, q: u64) -> Self {
        assert!(self.b.is_empty() || self.q == q, "retagging a value with a sqrt(q) part");
        CycValue { q, ..self.clone() }
    }

    fn check(&self, other: &Self) {
        assert!(self.n == other.n && self.q == other.q, "mixed cyclotomic contexts");
    }

    fn product(n: u64, x: &BTreeMap<u64, i64>, y: &BTreeMap<u64, i64>, out: &mut BTreeMap<u64, i64>) {
        let bs = basis(n);
        for (&e1, &c1) in x {
            for (&e2, &c2) in y {
                bs.reduce((e1 + e2) % n, c1 * c2, out);
            }
        }
    }

    fn add_into(out: &mut BTreeMap<u64, i64>, x: &BTreeMap<u64, i64>, sign: i64) {
        for (&e, &c) in x {
            let slot = out.entry(e).or_insert(0);
            *slot += sign * c;
            if *slot == 0 {
                out.remove(&e);
            }
        }
    }

    fn terms(n: u64, m: &BTreeMap<u64, i64>) -> String {
        let mut s = String::new();
        for (i, (&e, &c)) in m.iter().enumerate() {
            let body = if e == 0 { c.abs().to_string() } else if c.abs() == 1 { format!("E({n})^{e}") } else { format!("{}*E({n})^{e}", c.abs()) };
            match (i, c < 0) {
                (0, true) => s.push_str(&format!("-{body}")),
                (0, false) => s.push_str(&body),
                (_, true) => s.push_str(&format!("-{body}")),
                (_, false) => s.push_str(&format!("+{body}")),
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q);
    (f.len() == 1).then(|| f[0])
}

impl Add for &CycValue {
    type Output = CycValue;
    fn add(self, o: &CycValue) -> CycValue {
        self.check(o);
        let mut r = self.clone();
        CycValue::add_into(&mut r.a, &o.a, 1);
        CycValue::add_into(&mut r.b, &o.b, 1);
        r
    }
}

impl Sub for &CycValue {
    type Output = CycValue;
    fn sub(self, o: &CycValue) -> CycValue {
        self.check(o);
        let mut r = self.clone();
        CycValue::add_into(&mut r.a, &o.a, -1);
        CycValue::add_into(&mut r.b, &o.b, -1);
        r
    }
}

impl Neg for &CycValue {
    type Output = CycValue;
    fn neg(self) -> CycValue {
        self.scale(-1)
    }
}

impl Mul for &CycValue {
    type Output = CycValue;
    fn mul(self, o: &CycValue) -> CycValue {
        self.check(o);
        let n = self.n;
        let mut a = BTreeMap::new();
        let mut b = BTreeMap::new();
        CycValue::product(n, &self.a, &o.a, &mut a);
        let mut bb = BTreeMap::new();
        CycValue::product(n, &self.b, &o.b, &mut bb);
        CycValue::add_into(&mut a, &bb, self.q as i64);
        CycValue::product(n, &self.a, &o.b, &mut b);
        CycValue::product(n, &self.b, &o.a, &mut b);
        CycValue { n, q: self.q, a, b }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for CycValue {
            type Output = CycValue;
            fn $f(self, o: CycValue) -> CycValue { (&self).$f(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for CycValue {
    type Output = CycValue;
    fn neg(self) -> CycValue {
        self.scale(-1)
    }
}

impl fmt::Display for CycValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = CycValue::terms(self.n, &self.a);
        if self.b.is_empty() {
            return write!(f, "{a}");
        }
        let b = CycValue::terms(self.n, &self.b);
        let b = if b == "1" { String::new() } else if b == "-1" { "-".into() } else { format!("({b})*") };
        let sep = if b.starts_with('-') { "" } else { "+" };
        if self.a.is_empty() {
            write!(f, "{b}sqrt(q)")
        } else {
            write!(f, "{a}{sep}{b}sqrt(q)")
        }
    }
}

impl Serialize for CycValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs = |m: &BTreeMap<u64, i64>| m.iter().map(|(&e, &c)| (e, c)).collect::<Vec<_>>();
        let mut st = s.serialize_struct("CycValue", 4)?;
        st.serialize_field("N", &self.n)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("a", &pairs(&self.a))?;
        st.serialize_field("b", &pairs(&self.b))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rng: &mut ChaCha8Rng, n: u64, q: u64) -> CycValue {
        let mut v = CycValue::zero(n, q);
        for _ in 0..rng.gen_range(0..4) {
            let t = CycValue::zeta(n, q, rng.gen_range(0..n as i64)).scale(rng.gen_range(-3..=3));
            v = &v + &t;
        }
        if rng.gen_bool(0.5) {
            v = &v + &(&CycValue::sqrt_q(n, q) * &CycValue::zeta(n, q, rng.gen_range(0..n as i64)));
        }
        v
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [1u64, 2, 4, 8, 12, 24, 45, 96, 120] {
            let mut s = CycValue::zero(n, 5);
            for e in 0..n as i64 {
                s = &s + &CycValue::zeta(n, 5, e);
            }
            assert_eq!(s.to_int(), Some(if n == 1 { 1 } else { 0 }), "n={n}");
        }
    }

    #[test]
    fn zeta_power_is_one() {
        let n = 96;
        let z = CycValue::zeta(n, 5, 7);
        let mut p = CycValue::one(n, 5);
        for _ in 0..n {
            p = &p * &z;
        }
        assert_eq!(p, CycValue::one(n, 5));
    }

    #[test]
    fn sqrt_q_squares_to_q() {
        let s = CycValue::sqrt_q(24, 5);
        assert_eq!((&s * &s).to_int(), Some(5));
        let s = CycValue::sqrt_q(24, 9);
        assert_eq!(s.to_int(), Some(3));
    }

    #[test]
    fn gauss_sum_is_square_root() {
        for (q, m) in [(5u64, 40u64), (13, 13 * 8), (125, 5 * 24)] {
            let r = CycValue::sqrt_q(8, q).expand_sqrt(m);
            assert!(!r.has_sqrt_part());
            assert_eq!((&r * &r).to_int(), Some(q as i64));
        }
    }

    #[test]
    fn imaginary_unit() {
        let i = CycValue::root_of_unity(24, 5, 4, 1);
        assert_eq!((&i * &i).to_int(), Some(-1));
        assert_eq!((&i * &i.conj()).to_int(), Some(1));
    }

    #[test]
    fn embedding_is_a_ring_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x = random(&mut rng, 24, 5);
            let y = random(&mut rng, 24, 5);
            assert_eq!((&x * &y).embed(120), &x.embed(120) * &y.embed(120));
        }
    }

    #[test]
    fn random_ring_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for i in 0..1000 {
            let (n, q) = if i % 2 == 0 { (96, 5) } else { (720, 13) };
            let x = random(&mut rng, n, q);
            let y = random(&mut rng, n, q);
            let z = random(&mut rng, n, q);
            assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            assert!((&x - &x).is_zero());
        }
    }

    #[test]
    fn json_shape() {
        let v = &CycValue::zeta(8, 5, 1) + &CycValue::sqrt_q(8, 5).scale(-1);
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j["N"], 8);
        assert_eq!(j["a"], serde_json::json!([[1, 1]]));
        assert_eq!(j["b"], serde_json::json!([[0, -1]]));
    }

    #[test]
    fn display() {
        assert_eq!(CycValue::sqrt_q(8, 5).scale(-1).to_string(), "-sqrt(q)");
        assert_eq!(CycValue::from_int(8, 5, 3).to_string(), "3");
        assert_eq!((&CycValue::one(8, 5) + &CycValue::sqrt_q(8, 5)).to_string(), "1+sqrt(q)");
    }
}
