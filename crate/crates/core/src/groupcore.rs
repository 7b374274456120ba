//! Concrete model of `GL_n(q) ⋊ ⟨σ⟩` for small `n` and `q`.
//!
//! Matrices over `F_q` are stored with entries in `F_{q²}` (the field used for
//! eigenvalues), restricted to the subfield.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{build_field, eig_orbit_of, split_prime_power, Field};
use crate::parametrize::{enum_class_types, ClassData, UnipotentKind, UnipotentLabel};
use crate::partitions::{classify, Partition};

pub const BUDGET_VAR: &str = "GLSIGMA_BUDGET";
pub const DEFAULT_BUDGET: u64 = 20_000;

/// Enumeration budget, overridable through `GLSIGMA_BUDGET`.
pub fn element_budget() -> u64 {
    std::env::var(BUDGET_VAR).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AutoKind {
    Sigma,
    SigmaPrime,
}

/// Square matrix, row-major, entries encoded as elements of `F_{q²}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat {
    pub n: usize,
    pub entries: Vec<u32>,
}

impl Mat {
    pub fn zero(n: usize) -> Mat {
        Mat { n, entries: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Mat {
        Mat::scalar(n, 1)
    }

    pub fn scalar(n: usize, c: u32) -> Mat {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = c;
        }
        m
    }

    pub fn diag(d: &[u32]) -> Mat {
        let n = d.len();
        let mut m = Mat::zero(n);
        for (i, &x) in d.iter().enumerate() {
            m.entries[i * n + i] = x;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.entries[i * self.n + j] = x;
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.n)
    }
}

pub fn mat_mul(f: &Field, a: &Mat, b: &Mat) -> Mat {
    let n = a.n;
    let mut out = Mat::zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0;
            for k in 0..n {
                acc = f.add(acc, f.mul(a.get(i, k), b.get(k, j)));
            }
            out.set(i, j, acc);
        }
    }
    out
}

pub fn mat_add(f: &Field, a: &Mat, b: &Mat) -> Mat {
    Mat { n: a.n, entries: a.entries.iter().zip(&b.entries).map(|(&x, &y)| f.add(x, y)).collect() }
}

pub fn mat_sub(f: &Field, a: &Mat, b: &Mat) -> Mat {
    Mat { n: a.n, entries: a.entries.iter().zip(&b.entries).map(|(&x, &y)| f.sub(x, y)).collect() }
}

pub fn mat_scale(f: &Field, c: u32, a: &Mat) -> Mat {
    Mat { n: a.n, entries: a.entries.iter().map(|&x| f.mul(c, x)).collect() }
}

pub fn mat_apply(f: &Field, a: &Mat, v: &[u32]) -> Vec<u32> {
    (0..a.n).map(|i| (0..a.n).fold(0, |acc, k| f.add(acc, f.mul(a.get(i, k), v[k])))).collect()
}

pub fn mat_pow(f: &Field, a: &Mat, mut e: u64) -> Mat {
    let (mut base, mut out) = (a.clone(), Mat::identity(a.n));
    while e > 0 {
        if e & 1 == 1 {
            out = mat_mul(f, &out, &base);
        }
        base = mat_mul(f, &base, &base);
        e >>= 1;
    }
    out
}

/// Row echelon form of a rectangular matrix given as rows; returns the pivot rows.
fn echelon(f: &Field, mut rows: Vec<Vec<u32>>, ncols: usize) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]);
        rows[r] = rows[r].iter().map(|&x| f.mul(x, inv)).collect();
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let k = rows[i][c];
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(k, *y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank_of_rows(f: &Field, rows: &[Vec<u32>], ncols: usize) -> usize {
    echelon(f, rows.to_vec(), ncols).1.len()
}

/// Basis of `{v : A v = 0}` for a matrix given by rows of length `ncols`.
pub fn nullspace(f: &Field, rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let (red, pivots) = echelon(f, rows.to_vec(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; ncols];
            v[fc] = 1;
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

fn rows_of(a: &Mat) -> Vec<Vec<u32>> {
    a.entries.chunks(a.n).map(|r| r.to_vec()).collect()
}

pub fn det(f: &Field, a: &Mat) -> u32 {
    let n = a.n;
    let mut rows = rows_of(a);
    let mut d = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| rows[i][c] != 0) else { return 0 };
        if p != c {
            rows.swap(p, c);
            d = f.neg(d);
        }
        d = f.mul(d, rows[c][c]);
        let inv = f.inv(rows[c][c]);
        for i in c + 1..n {
            let k = f.mul(rows[i][c], inv);
            if k != 0 {
                let pivot = rows[c].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(k, *y));
                }
            }
        }
    }
    d
}

pub fn mat_inv(f: &Field, a: &Mat) -> Option<Mat> {
    let n = a.n;
    let aug: Vec<Vec<u32>> = rows_of(a)
        .into_iter()
        .enumerate()
        .map(|(i, mut r)| {
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    let (red, pivots) = echelon(f, aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Mat { n, entries: red.iter().flat_map(|r| r[n..].to_vec()).collect() })
}

/// The automorphism `g ↦ J g^{-t} J^{-1}` together with the field it lives over.
#[derive(Clone, Debug)]
pub struct AutoSpec {
    pub kind: AutoKind,
    pub n: usize,
    pub q: u64,
    pub field: Field,
    pub j: Mat,
    pub j_inv: Mat,
    pub t0: Mat,
    subfield: Vec<u32>,
    sub_index: Vec<u32>,
}

/// Element `(g, t)` of the semidirect product; `t = 1` is the outer coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GLElement {
    pub mat: Mat,
    pub twist: u8,
}

impl AutoSpec {
    pub fn new(n: usize, q: u64, kind: AutoKind) -> Result<AutoSpec> {
        let (p, e) = split_prime_power(q)?;
        if n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        let field = build_field(p, e, 2)?;
        let subfield: Vec<u32> = (0..field.size()).filter(|&x| field.pow(x, q as i64) == x).collect();
        let mut sub_index = vec![u32::MAX; field.size() as usize];
        for (i, &x) in subfield.iter().enumerate() {
            sub_index[x as usize] = i as u32;
        }
        let minus = field.neg(1);
        let ones = (n + 1) / 2;
        let t0 = Mat::diag(&(0..n).map(|i| if i < ones { 1 } else { minus }).collect::<Vec<_>>());
        let mut jn = Mat::zero(n);
        for i in 0..n {
            jn.set(i, n - 1 - i, 1);
        }
        let jprime = mat_mul(&field, &t0, &jn);
        let use_prime = (n % 2 == 0) == (kind == AutoKind::Sigma);
        let j = if use_prime { jprime } else { jn };
        let j_inv = mat_inv(&field, &j).expect("J is invertible");
        Ok(AutoSpec { kind, n, q, field, j, j_inv, t0, subfield, sub_index })
    }

    /// Elements of `F_q`, in increasing encoding.
    pub fn subfield(&self) -> &[u32] {
        &self.subfield
    }

    /// A generator of `F_q^*`.
    pub fn subfield_generator(&self) -> u32 {
        self.field.exp(self.q as i64 + 1)
    }

    pub fn in_subfield(&self, x: u32) -> bool {
        self.sub_index[x as usize] != u32::MAX
    }

    /// `η(x)` for `x ∈ F_q^*`.
    pub fn eta(&self, x: u32) -> i8 {
        assert!(x != 0 && self.in_subfield(x), "η is evaluated on F_q^*");
        if (self.field.log(x) / (self.q + 1)) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn group_size(&self) -> u64 {
        let q = self.q;
        let n = self.n as u32;
        (0..n).map(|i| q.pow(n) - q.pow(i)).product()
    }

    pub fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        mat_mul(&self.field, a, b)
    }

    pub fn inv(&self, a: &Mat) -> Result<Mat> {
        mat_inv(&self.field, a).ok_or_else(|| Error::Precondition("singular matrix".into()))
    }

    pub fn det(&self, a: &Mat) -> u32 {
        det(&self.field, a)
    }

    pub fn sigma(&self, g: &Mat) -> Result<Mat> {
        let ginv = self.inv(g)?;
        Ok(self.mul(&self.mul(&self.j, &ginv.transpose()), &self.j_inv))
    }

    pub fn elem_mul(&self, x: &GLElement, y: &GLElement) -> GLElement {
        let h = if x.twist == 1 { self.sigma(&y.mat).expect("group elements are invertible") } else { y.mat.clone() };
        GLElement { mat: self.mul(&x.mat, &h), twist: x.twist ^ y.twist }
    }

    pub fn elem_inv(&self, x: &GLElement) -> GLElement {
        let ginv = self.inv(&x.mat).expect("group elements are invertible");
        let mat = if x.twist == 1 { self.sigma(&ginv).expect("invertible") } else { ginv };
        GLElement { mat, twist: x.twist }
    }

    pub fn elem_pow(&self, x: &GLElement, mut e: u64) -> GLElement {
        let mut base = x.clone();
        let mut out = GLElement { mat: Mat::identity(self.n), twist: 0 };
        while e > 0 {
            if e & 1 == 1 {
                out = self.elem_mul(&out, &base);
            }
            base = self.elem_mul(&base, &base);
            e >>= 1;
        }
        out
    }

    /// Order of an element of the semidirect product.
    pub fn elem_order(&self, x: &GLElement) -> u64 {
        let sq = if x.twist == 1 { self.elem_mul(x, x).mat } else { x.mat.clone() };
        let mut cur = sq.clone();
        let mut k = 1;
        while !cur.is_identity() {
            cur = self.mul(&cur, &sq);
            k += 1;
        }
        if x.twist == 1 {
            2 * k
        } else {
            k
        }
    }

    /// Index of a matrix over `F_q` among the `q^{n²}` matrices.
    pub fn code(&self, a: &Mat) -> u64 {
        a.entries.iter().rev().fold(0u64, |acc, &x| acc * self.q + self.sub_index[x as usize] as u64)
    }

    pub fn decode(&self, mut c: u64) -> Mat {
        let entries = (0..self.n * self.n)
            .map(|_| {
                let x = self.subfield[(c % self.q) as usize];
                c /= self.q;
                x
            })
            .collect();
        Mat { n: self.n, entries }
    }

    pub fn elem_code(&self, x: &GLElement) -> u64 {
        self.code(&x.mat) * 2 + x.twist as u64
    }

    /// Every element of `GL_n(q)`, by increasing code.
    pub fn all_matrices(&self) -> Result<Vec<Mat>> {
        let total = self.q.pow((self.n * self.n) as u32);
        let budget = element_budget();
        if 2 * self.group_size() > budget || total > 64 * budget {
            return Err(Error::Budget { needed: 2 * self.group_size(), budget });
        }
        Ok((0..total).map(|c| self.decode(c)).filter(|m| self.det(m) != 0).collect())
    }

    /// Generators of `GL_n(q)`: transvections with entries spanning `F_q` over `F_p`,
    /// and one diagonal matrix of generator determinant.
    pub fn generators(&self) -> Vec<Mat> {
        let n = self.n;
        let zeta = self.subfield_generator();
        let e = self.field.spec.e;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for k in 0..e {
                    let mut m = Mat::identity(n);
                    m.set(i, j, self.field.pow(zeta, k as i64));
                    out.push(m);
                }
            }
        }
        let mut d = Mat::identity(n);
        d.set(0, 0, zeta);
        out.push(d);
        out
    }
}

pub fn sigma_apply(a: &AutoSpec, g: &Mat) -> Result<Mat> {
    a.sigma(g)
}

/// `η(det g)`, with `σ` mapped to `1`.
pub fn eps_sign(a: &AutoSpec, x: &GLElement) -> i8 {
    a.eta(a.det(&x.mat))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterClass {
    pub rep: GLElement,
    pub size: u64,
    pub centralizer: u64,
    pub eps: i8,
}

/// Orbits of `GL_n(q)` on `GL_n(q)σ` under `x·gσ·x⁻¹ = x g σ(x)⁻¹ σ`.
/// Sorted by the code of the representative, which is the smallest in its class.
pub fn outer_classes(n: usize, q: u64, kind: AutoKind) -> Result<Vec<OuterClass>> {
    let a = AutoSpec::new(n, q, kind)?;
    outer_classes_in(&a)
}

pub fn outer_classes_in(a: &AutoSpec) -> Result<Vec<OuterClass>> {
    let mats = a.all_matrices()?;
    let gens: Vec<(Mat, Mat)> =
        a.generators().into_iter().map(|h| (h.clone(), a.inv(&a.sigma(&h).expect("invertible")).expect("invertible"))).collect();
    let mut seen = vec![false; a.q.pow((a.n * a.n) as u32) as usize];
    let order = a.group_size();
    let mut out = Vec::new();
    for g in &mats {
        if seen[a.code(g) as usize] {
            continue;
        }
        let eps = a.eta(a.det(g));
        let mut queue = VecDeque::from([g.clone()]);
        seen[a.code(g) as usize] = true;
        let mut size = 0u64;
        while let Some(cur) = queue.pop_front() {
            size += 1;
            assert_eq!(a.eta(a.det(&cur)), eps, "ε-sign must be a class invariant");
            for (h, hs) in &gens {
                let next = a.mul(&a.mul(h, &cur), hs);
                let c = a.code(&next) as usize;
                if !seen[c] {
                    seen[c] = true;
                    queue.push_back(next);
                }
            }
        }
        out.push(OuterClass { rep: GLElement { mat: g.clone(), twist: 1 }, size, centralizer: order / size, eps });
    }
    Ok(out)
}

/// Jordan decomposition `x = x_s x_u` inside the semidirect product.
pub fn jordan_parts(a: &AutoSpec, x: &GLElement) -> (GLElement, GLElement) {
    let ord = a.elem_order(x);
    let p = a.field.p();
    let (mut pk, mut rest) = (1u64, ord);
    while rest % p == 0 {
        rest /= p;
        pk *= p;
    }
    // alpha ≡ 1 mod rest, alpha ≡ 0 mod pk
    let alpha = (0..ord).step_by(pk as usize).find(|k| k % rest == 1 % rest).expect("CRT");
    let beta = (1 + ord - alpha) % ord;
    (a.elem_pow(x, alpha), a.elem_pow(x, beta))
}

struct FormData<'a> {
    a: &'a AutoSpec,
    /// Gram matrix of the form preserved by the unipotent part.
    gram: Mat,
    /// Cayley transform of the unipotent part.
    cayley: Mat,
}

impl FormData<'_> {
    fn pair(&self, v: &[u32], w: &[u32]) -> u32 {
        let f = &self.a.field;
        let gw = mat_apply(f, &self.gram, w);
        v.iter().zip(&gw).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
    }

    /// Basis of `block ∩ ker c^i` where `block` is cut out by `cut`.
    fn kernel(&self, cut: &Mat, i: u32) -> Vec<Vec<u32>> {
        let f = &self.a.field;
        let mut rows = rows_of(cut);
        rows.extend(rows_of(&mat_pow(f, &self.cayley, i as u64)));
        nullspace(f, &rows, self.a.n)
    }

    fn jordan_type(&self, cut: &Mat) -> Partition {
        let mut dims = vec![0usize];
        loop {
            let d = self.kernel(cut, dims.len() as u32).len();
            if d == *dims.last().unwrap() {
                break;
            }
            dims.push(d);
        }
        // blocks of size >= i
        let at_least: Vec<usize> = dims.windows(2).map(|w| w[1] - w[0]).collect();
        let mut parts = Vec::new();
        for (i, &c) in at_least.iter().enumerate() {
            let next = at_least.get(i + 1).copied().unwrap_or(0);
            parts.extend(std::iter::repeat((i + 1) as u32).take(c - next));
        }
        Partition::new(parts)
    }

    /// `det` of `(v, w) ↦ β(v, c^{i-1} w)` on a complement of `ker c^{i-1} + c ker c^{i+1}` in `ker c^i`.
    fn multiplicity_det(&self, cut: &Mat, i: u32) -> u32 {
        let f = &self.a.field;
        let n = self.a.n;
        let ki = self.kernel(cut, i);
        let mut span = self.kernel(cut, i - 1);
        span.extend(self.kernel(cut, i + 1).iter().map(|v| mat_apply(f, &self.cayley, v)));
        let mut base_rank = rank_of_rows(f, &span, n);
        let mut chosen = Vec::new();
        for v in ki {
            span.push(v.clone());
            let r = rank_of_rows(f, &span, n);
            if r > base_rank {
                base_rank = r;
                chosen.push(v);
            } else {
                span.pop();
            }
        }
        let ci = mat_pow(f, &self.cayley, (i - 1) as u64);
        let m = chosen.len();
        let mut q = Mat::zero(m);
        for (r, v) in chosen.iter().enumerate() {
            for (c, w) in chosen.iter().enumerate() {
                q.set(r, c, self.pair(v, &mat_apply(f, &ci, w)));
            }
        }
        det(f, &q)
    }

    fn block_det(&self, cut: &Mat) -> (usize, u32) {
        let basis = nullspace(&self.a.field, &rows_of(cut), self.a.n);
        let m = basis.len();
        let mut g = Mat::zero(m);
        for (r, v) in basis.iter().enumerate() {
            for (c, w) in basis.iter().enumerate() {
                g.set(r, c, self.pair(v, w));
            }
        }
        (m, det(&self.a.field, &g))
    }
}

fn sign_of_disc(a: &AutoSpec, m: usize, d: u32) -> i8 {
    let minus = a.field.neg(1);
    a.eta(a.field.mul(a.field.pow(minus, (m / 2) as i64), d))
}

/// The parameter of the `GL_n(q)`-class of `x = gσ` among the enumerated class types.
pub fn class_label(a: &AutoSpec, x: &GLElement) -> Result<ClassData> {
    let n = a.n;
    if n > 3 || x.twist != 1 || a.kind != AutoKind::Sigma {
        return Err(Error::Precondition("class_label needs n ≤ 3, an outer element and kind sigma".into()));
    }
    let f = &a.field;
    let (xs, xu) = jordan_parts(a, x);
    let y = a.elem_mul(&xs, &xs).mat;
    let u = xu.mat;
    let one = Mat::identity(n);
    let m_form = a.mul(&xs.mat, &a.j);
    let gram = a.inv(&m_form)?;
    let cayley = a.mul(&mat_sub(f, &u, &one), &a.inv(&mat_add(f, &u, &one))?);
    let mut fd = FormData { a, gram, cayley };

    let mut eig: BTreeMap<u32, usize> = BTreeMap::new();
    for b in 1..f.size() {
        let k = n - rank_of_rows(f, &rows_of(&mat_sub(f, &y, &Mat::scalar(n, b))), n);
        if k > 0 {
            eig.insert(b, k);
        }
    }
    if eig.values().sum::<usize>() != n {
        return Err(Error::NoLabel("eigenvalues of gσ(g) outside F_{q²}".into()));
    }
    let minus = f.neg(1);
    let cut = |b: u32| mat_sub(f, &y, &Mat::scalar(n, b));
    let (sp_val, ort_val) = if n % 2 == 0 { (1, minus) } else { (minus, 1) };
    let eta = eps_sign(a, x);
    let form_sign = if n % 2 == 0 { eta } else { 1 };

    let ort_dim = eig.get(&ort_val).copied().unwrap_or(0);
    if ort_dim > 0 {
        let (m, d) = fd.block_det(&cut(ort_val));
        let s = sign_of_disc(a, m, d);
        if n % 2 == 1 && s < 0 {
            fd.gram = mat_scale(f, a.subfield_generator(), &fd.gram);
        } else if n % 2 == 0 && s != eta {
            return Err(Error::NoLabel(format!("orthogonal block of sign {s} under ε = {eta}")));
        }
    }

    let label = |val: u32, kind: UnipotentKind| -> UnipotentLabel {
        if !eig.contains_key(&val) {
            return UnipotentLabel { kind, partition: Partition::empty(), signs: Vec::new() };
        }
        let c = cut(val);
        let partition = fd.jordan_type(&c);
        let cls = classify(&partition);
        let kd = match kind {
            UnipotentKind::Sp => cls.symplectic,
            UnipotentKind::Ort(_) => cls.orthogonal,
        };
        let signs = kd
            .map(|kd| {
                kd.kappa_set
                    .into_iter()
                    .map(|i| (i, sign_of_disc(a, partition.mult(i) as usize, fd.multiplicity_det(&c, i))))
                    .collect()
            })
            .unwrap_or_default();
        UnipotentLabel { kind, partition, signs }
    };
    let sp_part = label(sp_val, UnipotentKind::Sp);
    let mut ort_part = label(ort_val, UnipotentKind::Ort(form_sign));
    if ort_part.partition.is_empty() || classify(&ort_part.partition).orthogonal.map_or(0, |k| k.kappa) == 0 {
        ort_part.signs.clear();
    }

    let q = a.q;
    let mut gl_parts = Vec::new();
    let mut done = Vec::new();
    for &b in eig.keys() {
        if b == 1 || b == minus || done.contains(&b) {
            continue;
        }
        let lb = f.log(b);
        if lb % 2 == 1 {
            return Err(Error::NoLabel("eigenvalue without a square root in F_{q²}".into()));
        }
        let orbit = eig_orbit_of(lb / 2, 1, q);
        done.extend([b, f.inv(b), f.pow(b, q as i64), f.inv(f.pow(b, q as i64))]);
        gl_parts.push((orbit, fd.jordan_type(&cut(b))));
    }
    gl_parts.sort();
    // with no orthogonal block in even rank the ε-sign is a function of the rest
    let eta = if n % 2 == 0 && ort_part.partition.is_empty() { 1 } else { eta };
    ort_part.kind = UnipotentKind::Ort(if n % 2 == 0 { eta } else { 1 });
    let c = ClassData { eta, sp_part, ort_part, gl_parts };
    if enum_class_types(n as u32, q)?.contains(&c) {
        Ok(c)
    } else {
        Err(Error::NoLabel(format!("{c:?}")))
    }
}
