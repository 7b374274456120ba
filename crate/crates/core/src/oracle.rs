//! Character tables of small concrete groups by the Dixon–Schneider method,
//! and a matcher against symbolic tables on the outer coset.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::cyc::{mod_inv, mod_pow, CycValue};
use crate::error::{Error, Result};
use crate::ffield::{gcd, is_prime, prime_factors};
use crate::groupcore::{AutoSpec, GLElement};

pub const MAX_ORDER: usize = 20_000;

type MulFn = Box<dyn Fn(usize, usize) -> usize + Send + Sync>;

/// A finite group on `0..order` with a composition oracle.
pub struct ConcreteGroup {
    order: usize,
    mul: MulFn,
    pub identity: usize,
    pub inverse: Vec<usize>,
    pub element_order: Vec<u64>,
    /// Conjugacy classes, the identity class first, then by smallest member.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub exponent: u64,
}

impl std::fmt::Debug for ConcreteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConcreteGroup").field("order", &self.order).field("classes", &self.classes.len()).finish()
    }
}

impl ConcreteGroup {
    pub fn new(order: usize, identity: usize, generators: &[usize], mul: MulFn) -> Result<ConcreteGroup> {
        if order > MAX_ORDER {
            return Err(Error::Budget { needed: order as u64, budget: MAX_ORDER as u64 });
        }
        let mut inverse = vec![0; order];
        let mut element_order = vec![0u64; order];
        for x in 0..order {
            let (mut cur, mut k, mut prev) = (x, 1u64, identity);
            while cur != identity {
                prev = cur;
                cur = mul(cur, x);
                k += 1;
                if k > order as u64 + 1 {
                    return Err(Error::Oracle(format!("element {x} has no finite order")));
                }
            }
            element_order[x] = k;
            inverse[x] = if k == 1 { identity } else { prev };
        }
        let mut class_of = vec![usize::MAX; order];
        let mut raw = Vec::new();
        for x in 0..order {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = raw.len();
            let mut members = vec![x];
            class_of[x] = id;
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                for &g in generators {
                    let z = mul(mul(g, y), inverse[g]);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        members.push(z);
                    }
                }
                i += 1;
            }
            members.sort();
            raw.push(members);
        }
        raw.sort_by_key(|c| (c[0] != identity, c[0]));
        for (k, c) in raw.iter().enumerate() {
            for &x in c {
                class_of[x] = k;
            }
        }
        let exponent = element_order.iter().fold(1, |acc, &o| acc / gcd(acc, o) * o);
        let group = ConcreteGroup { order, mul, identity, inverse, element_order, classes: raw, class_of, exponent };
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        (self.mul)(a, b)
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.len() as u64).collect()
    }

    /// Class of inverses of each class.
    pub fn inverse_classes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| self.class_of[self.inverse[c[0]]]).collect()
    }

    /// Checks associativity on a deterministic sample of triples.
    pub fn spot_check(&self, samples: usize) -> bool {
        let n = self.order as u64;
        (0..samples as u64).all(|i| {
            let (a, b, c) = ((i * 7919 % n) as usize, (i * 104_729 % n) as usize, (i * 1_299_709 % n) as usize);
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OracleTable {
    pub conductor: u64,
    pub modulus: u64,
    pub class_sizes: Vec<u64>,
    pub degrees: Vec<u64>,
    /// `characters[row][class]`.
    pub characters: Vec<Vec<CycValue>>,
}

fn prime_above(bound: u64, e: u64) -> u64 {
    let mut p = (bound / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

fn primitive_root(p: u64) -> u64 {
    let f = prime_factors(p - 1);
    (2..p).find(|&g| f.iter().all(|&l| mod_pow(g, (p - 1) / l, p) != 1)).expect("prime has a primitive root")
}

/// Matrix of `v ↦ A v` restricted to the span of `basis`, in `basis` coordinates.
/// The basis is in reduced echelon form with the given pivots.
fn restrict(a: &[Vec<u64>], basis: &[Vec<u64>], pivots: &[usize], p: u64) -> Vec<Vec<u64>> {
    let k = basis.len();
    let mut out = vec![vec![0; k]; k];
    for (col, b) in basis.iter().enumerate() {
        let image: Vec<u64> = a.iter().map(|row| row.iter().zip(b).fold(0, |s, (&x, &y)| (s + x * y) % p)).collect();
        for (r, &pv) in pivots.iter().enumerate() {
            out[r][col] = image[pv];
        }
    }
    out
}

/// Reduced echelon form of the rows; returns rows and pivot columns.
fn echelon_mod(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, i);
        let inv = mod_inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let k = rows[i][c];
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = (*x + p - k * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

fn nullspace_mod(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let (red, pivots) = echelon_mod(a.to_vec(), p);
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|fc| {
            let mut v = vec![0; n];
            v[fc] = 1;
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = (p - row[fc]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial via Hessenberg reduction, coefficients from degree 0 upward.
fn charpoly(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    let sub = |a: u64, b: u64| (a + p - b % p) % p;
    for c in 0..n.saturating_sub(2) {
        let Some(i) = (c + 1..n).find(|&i| h[i][c] != 0) else { continue };
        if i != c + 1 {
            h.swap(i, c + 1);
            for row in h.iter_mut() {
                row.swap(i, c + 1);
            }
        }
        let inv = mod_inv(h[c + 1][c], p);
        for i in c + 2..n {
            let k = h[i][c] * inv % p;
            if k == 0 {
                continue;
            }
            for j in 0..n {
                h[i][j] = sub(h[i][j], k * h[c + 1][j]);
            }
            for row in h.iter_mut() {
                row[c + 1] = (row[c + 1] + k * row[i]) % p;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        // (x - h_mm) p_{m}
        let prev = &polys[m];
        let mut next = vec![0; m + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = sub(next[d], c * h[m][m]);
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = prod * h[i + 1][i] % p;
            let coef = prod * h[i][m] % p;
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub(next[d], coef * c);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn roots_mod(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0).collect()
}

/// Class matrix `A_j[i][k] = #{y ∈ C_j : z_k y⁻¹ ∈ C_i}`.
fn class_matrix(g: &ConcreteGroup, j: usize, p: u64) -> Vec<Vec<u64>> {
    let r = g.classes.len();
    let mut a = vec![vec![0u64; r]; r];
    for (k, ck) in g.classes.iter().enumerate() {
        let z = ck[0];
        for &y in &g.classes[j] {
            let i = g.class_of[g.mul(z, g.inverse[y])];
            a[i][k] = (a[i][k] + 1) % p;
        }
    }
    a
}

fn split(g: &ConcreteGroup, p: u64) -> Option<Vec<Vec<u64>>> {
    let r = g.classes.len();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r).map(|i| (0..r).map(|k| u64::from(i == k)).collect()).collect()];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let a = class_matrix(g, j, p);
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let (basis, pivots) = echelon_mod(space, p);
            let m = restrict(&a, &basis, &pivots, p);
            let mut found = 0;
            for lam in roots_mod(&charpoly(m.clone(), p), p) {
                let shifted: Vec<Vec<u64>> = m
                    .iter()
                    .enumerate()
                    .map(|(i, row)| row.iter().enumerate().map(|(k, &x)| if i == k { (x + p - lam) % p } else { x }).collect())
                    .collect();
                let coords = nullspace_mod(&shifted, p);
                found += coords.len();
                let vecs: Vec<Vec<u64>> = coords
                    .iter()
                    .map(|c| (0..r).map(|t| c.iter().zip(&basis).fold(0, |s, (&x, b)| (s + x * b[t]) % p)).collect())
                    .collect();
                next.push(vecs);
            }
            if found != basis.len() {
                return None;
            }
        }
        spaces = next;
    }
    spaces.iter().all(|s| s.len() == 1).then(|| spaces.into_iter().map(|mut s| s.remove(0)).collect())
}

fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Dixon–Schneider character table; values in `ℤ[ζ_E]` for the exponent `E`.
pub fn dixon_table(g: &ConcreteGroup) -> Result<OracleTable> {
    let order = g.order() as u64;
    let e = g.exponent;
    let sizes = g.class_sizes();
    let max_class = *sizes.iter().max().unwrap();
    let mut p = prime_above(2 * (isqrt(order) + 1) * max_class, e);
    let mut vectors = None;
    for _ in 0..8 {
        if let Some(v) = split(g, p) {
            vectors = Some(v);
            break;
        }
        p = prime_above(p, e);
    }
    let vectors = vectors.ok_or_else(|| Error::Oracle("eigenspaces did not split".into()))?;
    let omega = mod_pow(primitive_root(p), (p - 1) / e, p);
    let inv_cls = g.inverse_classes();
    let mut rows = Vec::new();
    for v in vectors {
        let v0 = mod_inv(v[0], p);
        let w: Vec<u64> = v.iter().map(|&x| x * v0 % p).collect();
        let norm = (0..w.len()).fold(0, |s, i| (s + w[i] * w[inv_cls[i]] % p * mod_inv(sizes[i] % p, p)) % p);
        let d2 = order % p * mod_inv(norm, p) % p;
        let d = (1..=isqrt(order)).find(|&d| d * d % p == d2).ok_or_else(|| Error::Oracle("degree not found".into()))?;
        let vals: Vec<u64> = (0..w.len()).map(|i| w[i] * d % p * mod_inv(sizes[i] % p, p) % p).collect();
        let mut row = Vec::new();
        for (c, cl) in g.classes.iter().enumerate() {
            let x = cl[0];
            let o = g.element_order[x];
            let root = mod_pow(omega, e / o, p);
            let mut power_classes = Vec::with_capacity(o as usize);
            let mut cur = g.identity;
            for _ in 0..o {
                power_classes.push(g.class_of[cur]);
                cur = g.mul(cur, x);
            }
            let mut value = CycValue::zero(e, 1);
            for k in 0..o {
                let mut m = 0;
                for (j, &pc) in power_classes.iter().enumerate() {
                    let t = mod_pow(root, (o - (j as u64 * k) % o) % o, p);
                    m = (m + vals[pc] * t) % p;
                }
                m = m * mod_inv(o % p, p) % p;
                if m > d {
                    return Err(Error::Oracle(format!("eigenvalue multiplicity {m} out of range at class {c}")));
                }
                if m > 0 {
                    value = &value + &CycValue::root_of_unity(e, 1, o, k as i64).scale(m as i64);
                }
            }
            row.push(value);
        }
        rows.push((d, vals, row));
    }
    rows.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let table = OracleTable {
        conductor: e,
        modulus: p,
        class_sizes: sizes,
        degrees: rows.iter().map(|r| r.0).collect(),
        characters: rows.into_iter().map(|r| r.2).collect(),
    };
    verify_first_orthogonality(&table, order)?;
    Ok(table)
}

pub fn verify_first_orthogonality(t: &OracleTable, order: u64) -> Result<()> {
    if t.degrees.iter().map(|d| d * d).sum::<u64>() != order {
        return Err(Error::Oracle("sum of squared degrees differs from the group order".into()));
    }
    let conj: Vec<Vec<CycValue>> = t.characters.iter().map(|r| r.iter().map(|v| v.conj()).collect()).collect();
    for (a, ra) in t.characters.iter().enumerate() {
        for (b, rb) in conj.iter().enumerate().skip(a) {
            let mut s = CycValue::zero(t.conductor, 1);
            for ((x, y), &c) in ra.iter().zip(rb).zip(&t.class_sizes) {
                s = &s + &(x * y).scale(c as i64);
            }
            let expect = if a == b { order as i64 } else { 0 };
            if s.to_int() != Some(expect) {
                return Err(Error::Oracle(format!("rows {a} and {b} are not orthogonal")));
            }
        }
    }
    Ok(())
}

pub fn verify_second_orthogonality(t: &OracleTable, order: u64) -> Result<()> {
    let r = t.class_sizes.len();
    for i in 0..r {
        for k in i..r {
            let mut s = CycValue::zero(t.conductor, 1);
            for row in &t.characters {
                s = &s + &(&row[i] * &row[k].conj());
            }
            let expect = if i == k { (order / t.class_sizes[i]) as i64 } else { 0 };
            if s.to_int() != Some(expect) {
                return Err(Error::Oracle(format!("columns {i} and {k} fail the column relation")));
            }
        }
    }
    Ok(())
}

/// `GL_n(q) ⋊ ⟨σ⟩` as a concrete group, with its elements in index order.
pub fn semidirect_group(a: &AutoSpec) -> Result<(ConcreteGroup, Vec<GLElement>)> {
    let mats = a.all_matrices()?;
    let elems: Vec<GLElement> =
        mats.iter().flat_map(|m| [0u8, 1].map(|t| GLElement { mat: m.clone(), twist: t })).collect();
    let index: HashMap<u64, usize> = elems.iter().enumerate().map(|(i, x)| (a.elem_code(x), i)).collect();
    let mut gens: Vec<usize> = a
        .generators()
        .iter()
        .map(|h| index[&a.elem_code(&GLElement { mat: h.clone(), twist: 0 })])
        .collect();
    gens.push(index[&a.elem_code(&GLElement { mat: crate::groupcore::Mat::identity(a.n), twist: 1 })]);
    let spec = a.clone();
    let table = elems.clone();
    let mul: MulFn = Box::new(move |x, y| index[&spec.elem_code(&spec.elem_mul(&table[x], &table[y]))]);
    let identity = elems.iter().position(|x| x.twist == 0 && x.mat.is_identity()).unwrap();
    Ok((ConcreteGroup::new(elems.len(), identity, &gens, mul)?, elems))
}

/// Values of a symbolic table on the outer coset.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OuterBlock {
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub values: Vec<Vec<CycValue>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowMatch {
    pub oracle_row: usize,
    pub label: String,
    pub sign: i8,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatchReport {
    /// Oracle rows not vanishing on the outer coset.
    pub nonzero_rows: usize,
    /// Sign pairs `{χ̃, −χ̃}` among them.
    pub pairs: usize,
    pub vanishing_rows: usize,
    pub matched: Vec<RowMatch>,
    pub tie_break: String,
}

impl MatchReport {
    pub fn summary(&self) -> String {
        format!("matched {}/{} rows", self.matched.len(), self.pairs)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Brings two values into one `ℤ[ζ_M]` without a `√q` part.
pub fn same_value(x: &CycValue, y: &CycValue, p: u64) -> bool {
    let mut m = lcm(x.conductor(), y.conductor());
    if x.has_sqrt_part() || y.has_sqrt_part() {
        m = lcm(m, p);
    }
    let q = if x.has_sqrt_part() { x.q() } else { y.q() };
    let (a, b) = (x.retag(q).expand_sqrt(m), y.retag(q).expand_sqrt(m));
    a == b
}

/// Aligns the oracle rows on the outer coset with the rows of `sym`.
///
/// `column_of[c]` is the symbolic column of oracle class `c`, or `None` for inner classes.
/// `p` is the characteristic, used to write `√q` as a Gauss sum.
pub fn match_outer(t: &OracleTable, column_of: &[Option<usize>], sym: &OuterBlock, p: u64) -> Result<MatchReport> {
    let ncols = sym.columns.len();
    let mut oracle_class = vec![usize::MAX; ncols];
    for (c, col) in column_of.iter().enumerate() {
        if let Some(k) = *col {
            if oracle_class[k] != usize::MAX {
                return Err(Error::Match(format!("column {} hit by two oracle classes", sym.columns[k])));
            }
            oracle_class[k] = c;
        }
    }
    if let Some(k) = oracle_class.iter().position(|&c| c == usize::MAX) {
        return Err(Error::Match(format!("column {} has no oracle class", sym.columns[k])));
    }
    let outer = |row: &[CycValue]| -> Vec<CycValue> { oracle_class.iter().map(|&c| row[c].clone()).collect() };
    let inner_eq = |a: &[CycValue], b: &[CycValue]| column_of.iter().enumerate().all(|(c, k)| k.is_some() || a[c] == b[c]);

    let nonzero: Vec<usize> = (0..t.characters.len()).filter(|&r| outer(&t.characters[r]).iter().any(|v| !v.is_zero())).collect();
    let vanishing_rows = t.characters.len() - nonzero.len();
    // one representative per pair, fixed by the sign of the leading coefficient
    // of the first nonzero outer value
    let mut reps = Vec::new();
    let mut used = vec![false; t.characters.len()];
    for &r in &nonzero {
        if used[r] {
            continue;
        }
        let vr = outer(&t.characters[r]);
        let partner = nonzero.iter().copied().find(|&s| {
            s != r && !used[s] && inner_eq(&t.characters[r], &t.characters[s]) && outer(&t.characters[s]).iter().zip(&vr).all(|(a, b)| *a == -b.clone())
        });
        let Some(s) = partner else {
            return Err(Error::Match(format!("oracle row {r} has no sign partner")));
        };
        used[r] = true;
        used[s] = true;
        let lead = vr.iter().find(|v| !v.is_zero()).unwrap().leading_sign();
        reps.push(if lead > 0 { r } else { s });
    }
    if reps.len() != sym.rows.len() {
        return Err(Error::Match(format!("{} extension pairs against {} symbolic rows", reps.len(), sym.rows.len())));
    }
    // candidate matches with signs
    let mut cand: Vec<Vec<(usize, i8)>> = Vec::new();
    for &r in &reps {
        let vr = outer(&t.characters[r]);
        let mut c = Vec::new();
        for (k, srow) in sym.values.iter().enumerate() {
            for sign in [1i8, -1] {
                if vr.iter().zip(srow).all(|(a, b)| same_value(a, &b.scale(sign as i64), p)) {
                    c.push((k, sign));
                }
            }
        }
        cand.push(c);
    }
    let mut owner: Vec<Option<(usize, i8)>> = vec![None; sym.rows.len()];
    fn augment(i: usize, cand: &[Vec<(usize, i8)>], owner: &mut Vec<Option<(usize, i8)>>, seen: &mut Vec<bool>) -> bool {
        for &(k, s) in &cand[i] {
            if seen[k] {
                continue;
            }
            seen[k] = true;
            if owner[k].map_or(true, |(j, _)| augment(j, cand, owner, seen)) {
                owner[k] = Some((i, s));
                return true;
            }
        }
        false
    }
    for i in 0..reps.len() {
        let mut seen = vec![false; sym.rows.len()];
        augment(i, &cand, &mut owner, &mut seen);
    }
    if let Some(k) = owner.iter().position(|o| o.is_none()) {
        // name the closest cell
        let srow = &sym.values[k];
        let mut best: Option<(usize, usize)> = None;
        for &r in &reps {
            let vr = outer(&t.characters[r]);
            for sign in [1i64, -1] {
                let bad: Vec<usize> = (0..ncols).filter(|&c| !same_value(&vr[c], &srow[c].scale(sign), p)).collect();
                if best.map_or(true, |b| bad.len() < b.1) {
                    best = Some((bad[0], bad.len()));
                }
            }
        }
        let (col, _) = best.unwrap();
        return Err(Error::Match(format!("row {} unmatched, first disagreeing cell at column {}", sym.rows[k], sym.columns[col])));
    }
    let mut matched: Vec<RowMatch> = owner
        .iter()
        .enumerate()
        .map(|(k, o)| {
            let (i, sign) = o.unwrap();
            RowMatch { oracle_row: reps[i], label: sym.rows[k].clone(), sign }
        })
        .collect();
    matched.sort_by_key(|m| m.oracle_row);
    Ok(MatchReport {
        nonzero_rows: nonzero.len(),
        pairs: reps.len(),
        vanishing_rows,
        matched,
        tie_break: "first nonzero outer value has positive leading coefficient in the canonical cyclotomic basis".into(),
    })
}

/// Oracle class index of each element's outer class, keyed by element index.
pub fn outer_class_columns(g: &ConcreteGroup, elems: &[GLElement], column: impl Fn(&GLElement) -> Option<usize>) -> Vec<Option<usize>> {
    g.classes.iter().map(|c| column(&elems[c[0]])).collect()
}

/// Restriction of oracle rows to the inner component, as a multiset keyed by values.
pub fn inner_restrictions(t: &OracleTable, g: &ConcreteGroup, elems: &[GLElement]) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for row in &t.characters {
        let key: Vec<String> =
            g.classes.iter().zip(row).filter(|(c, _)| elems[c[0]].twist == 0).map(|(_, v)| v.to_string()).collect();
        *out.entry(key.join(",")).or_insert(0) += 1;
    }
    out
}
