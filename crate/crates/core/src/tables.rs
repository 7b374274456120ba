//! Character tables of `GL_2(q)⟨σ⟩` and `GL_3(q)⟨σ⟩` on the outer coset, for `q ≡ 1 mod 4`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cyc::CycValue;
use crate::error::{Error, Result};
use crate::ffield::{eig_orbits, split_prime_power, star_orbits, CharOrbitStar, EigOrbit, MultChar};
use crate::groupcore::{class_label, AutoKind, AutoSpec, GLElement, Mat};
use crate::oracle::OuterBlock;
use crate::parametrize::{centralizer_order, class_size, enum_char_types, enum_class_types, CharType, ClassData};
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharFamily {
    Trivial,
    Eta,
    Steinberg,
    EtaSteinberg,
    /// `R_T(1, η)`.
    SplitQuadratic,
    /// `R_T(α, α⁻¹)`.
    SplitPair,
    /// `R_{T_w}(ω)`.
    NonsplitPair,
    Chi3,
    EtaChi3,
    Chi2,
    EtaChi2,
    /// `R_L(1₂, η)`.
    LeviTrivialEta,
    /// `R_L(η1₂, 1)`.
    LeviEtaTrivial,
    /// `R_L(St, η)`.
    LeviSteinbergEta,
    /// `R_L(ηSt, 1)`.
    LeviEtaSteinberg,
    /// `(α, 1, α⁻¹)`.
    SplitTrivial,
    /// `(α, η, α⁻¹)`.
    SplitEta,
    /// `(ω, 1, ω⁻¹)`.
    NonsplitTrivial,
    /// `(ω, η, ω⁻¹)`.
    NonsplitEta,
}

impl CharFamily {
    pub fn is_parametric(self) -> bool {
        use CharFamily::*;
        matches!(self, SplitPair | NonsplitPair | SplitTrivial | SplitEta | NonsplitTrivial | NonsplitEta)
    }

    /// Whether the parameter is a character of `F_q^*` (as opposed to one of `F_{q²}^*`).
    fn split(self) -> bool {
        use CharFamily::*;
        matches!(self, SplitPair | SplitTrivial | SplitEta)
    }

    pub fn name(self) -> &'static str {
        use CharFamily::*;
        match self {
            Trivial => "1",
            Eta => "eta1",
            Steinberg => "St",
            EtaSteinberg => "etaSt",
            SplitQuadratic => "R_T(1,eta)",
            SplitPair => "R_T(alpha,alpha^-1)",
            NonsplitPair => "R_Tw(omega)",
            Chi3 => "chi3",
            EtaChi3 => "eta chi3",
            Chi2 => "chi2",
            EtaChi2 => "eta chi2",
            LeviTrivialEta => "R_L(1_2,eta)",
            LeviEtaTrivial => "R_L(eta1_2,1)",
            LeviSteinbergEta => "R_L(St,eta)",
            LeviEtaSteinberg => "R_L(etaSt,1)",
            SplitTrivial => "(alpha,1,alpha^-1)",
            SplitEta => "(alpha,eta,alpha^-1)",
            NonsplitTrivial => "(omega,1,omega^-1)",
            NonsplitEta => "(omega,eta,omega^-1)",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharLabel {
    pub family: CharFamily,
    pub param: Option<CharOrbitStar>,
}

impl CharLabel {
    fn plain(family: CharFamily) -> Self {
        CharLabel { family, param: None }
    }

    pub fn name(&self) -> String {
        match self.param {
            None => self.family.name().to_string(),
            Some(o) => format!("{}[k={}]", self.family.name(), o.rep.k),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassLabel {
    /// `1..=9`.
    pub index: u8,
    /// The `±` superscript; present for `n = 3`.
    pub eta: Option<i8>,
    pub param: Option<EigOrbit>,
}

impl ClassLabel {
    pub fn name(&self) -> String {
        let mut s = format!("C{}", self.index);
        match self.eta {
            Some(1) => s.push('+'),
            Some(_) => s.push('-'),
            None => {}
        }
        if let Some(o) = self.param {
            let _ = write!(s, "[a=g^{}]", o.rep_log);
        }
        s
    }

    pub fn is_regular(&self) -> bool {
        self.index >= 6
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub value: CycValue,
}

/// A cell of the form `constant + ε·coefficient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsLinear {
    pub constant: CycValue,
    pub eps: CycValue,
}

impl EpsLinear {
    fn fixed(v: CycValue) -> Self {
        let z = CycValue::zero(v.conductor(), v.q());
        EpsLinear { constant: v, eps: z }
    }

    fn linear(v: CycValue) -> Self {
        let z = CycValue::zero(v.conductor(), v.q());
        EpsLinear { constant: z, eps: v }
    }

    pub fn at(&self, eps: i8) -> CycValue {
        &self.constant + &self.eps.scale(eps as i64)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharTable {
    pub n: u32,
    pub q: u64,
    pub kind: AutoKind,
    pub conductor: u64,
    pub rows: Vec<CharLabel>,
    pub columns: Vec<ClassLabel>,
    pub column_data: Vec<ClassData>,
    /// `η(det g)` on each column.
    pub column_eps: Vec<i8>,
    pub cells: Vec<Vec<TableCell>>,
}

/// Checks `n ∈ {2,3}`, `q` an odd prime power with `q ≡ 1 mod 4` and `q > n`.
pub fn check_admissible(n: u32, q: u64) -> Result<()> {
    if !(2..=3).contains(&n) {
        return Err(Error::Precondition(format!("tables exist for n = 2, 3 only, got {n}")));
    }
    split_prime_power(q)?;
    if q % 4 != 1 {
        return Err(Error::InadmissibleQ { q, reason: "tables need q ≡ 1 mod 4".into() });
    }
    if q <= n as u64 {
        return Err(Error::InadmissibleQ { q, reason: format!("need q > n = {n}") });
    }
    Ok(())
}

/// Character values as discrete logarithms in `F_{q²}` with respect to the field generator.
struct Eval {
    q: u64,
    m2: u64,
    conductor: u64,
}

impl Eval {
    fn new(q: u64) -> Self {
        Eval { q, m2: q * q - 1, conductor: q * q - 1 }
    }

    fn int(&self, k: i64) -> CycValue {
        CycValue::from_int(self.conductor, self.q, k)
    }

    fn sqrt_q(&self) -> CycValue {
        CycValue::sqrt_q(self.conductor, self.q)
    }

    fn log_minus_one(&self) -> u64 {
        self.m2 / 2
    }

    fn log_i(&self) -> u64 {
        self.m2 / 4
    }

    /// `λ` with `λ^q = -λ`.
    fn log_lambda(&self) -> u64 {
        (self.q + 1) / 2
    }

    fn alpha(&self, k: u64, log: u64) -> CycValue {
        let log = log % self.m2;
        assert_eq!(log % (self.q + 1), 0, "α evaluated outside F_q");
        MultChar { r: 1, k }.eval_log(self.q, log / (self.q + 1), self.conductor)
    }

    fn omega(&self, k: u64, log: u64) -> CycValue {
        MultChar { r: 2, k }.eval_log(self.q, log % self.m2, self.conductor)
    }

    fn eta_log(&self, log: u64) -> i8 {
        let log = log % self.m2;
        assert_eq!(log % (self.q + 1), 0);
        if (log / (self.q + 1)) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

fn column_type(o: &EigOrbit) -> u8 {
    match (o.eps, o.e) {
        (1, 1) => 6,
        (-1, 1) => 7,
        (1, -1) => 8,
        _ => 9,
    }
}

/// The regular-class parts `α(a²)+α(a⁻²)`, `ω(a)+ω(a⁻¹)`, `ω(aλ)+ω(a⁻¹λ)` of a parametric row at `a`.
fn regular_sum(ev: &Eval, row: &CharLabel, col_type: u8, a: u64) -> CycValue {
    let k = row.param.expect("parametric row").rep.k;
    let inv = ev.m2 - a % ev.m2;
    match (row.family.split(), col_type) {
        (true, 6 | 8) => &ev.alpha(k, 2 * a) + &ev.alpha(k, 2 * inv),
        (false, 7) => &ev.omega(k, a) + &ev.omega(k, inv),
        (false, 9) => &ev.omega(k, a + ev.log_lambda()) + &ev.omega(k, inv + ev.log_lambda()),
        _ => ev.int(0),
    }
}

/// Position of an isolated `n = 3` column in the printed order `C1±, C2±, C3±, C4+, C5+, C4-, C5-`.
fn isolated_position(index: u8, eta: i8) -> usize {
    let plus = eta > 0;
    match index {
        1..=3 => 2 * (index as usize - 1) + usize::from(!plus),
        4 => if plus { 6 } else { 8 },
        _ => if plus { 7 } else { 9 },
    }
}

/// The printed cell at `(row, col)`, with `a` the discrete log of the column parameter.
fn printed(ev: &Eval, n: u32, row: &CharLabel, col: &ClassLabel, a: Option<u64>) -> EpsLinear {
    use CharFamily::*;
    let q = ev.q as i64;
    let k = row.param.map(|o| o.rep.k);
    if n == 2 {
        let i = col.index as usize - 1;
        let ints = |v: [i64; 9]| EpsLinear::fixed(ev.int(v[i]));
        return match row.family {
            SplitQuadratic => EpsLinear::fixed(ev.sqrt_q().scale([0, -1, 1, 0, 0, 0, 0, 0, 0][i])),
            Trivial => ints([1; 9]),
            Eta => ints([1, 1, 1, 1, -1, 1, 1, -1, -1]),
            Steinberg => ints([q, 0, 0, 1, -1, 1, -1, 1, -1]),
            EtaSteinberg => ints([q, 0, 0, 1, 1, 1, -1, -1, 1]),
            SplitPair => EpsLinear::fixed(match col.index {
                1 => ev.int(q + 1),
                2 | 3 => ev.int(1),
                4 => ev.alpha(k.unwrap(), ev.log_minus_one()).scale(2),
                5 => ev.int(0),
                t => regular_sum(ev, row, t, a.unwrap()),
            }),
            NonsplitPair => EpsLinear::fixed(match col.index {
                1 => ev.int(1 - q),
                2 | 3 => ev.int(1),
                4 => ev.int(0),
                5 => ev.omega(k.unwrap(), ev.log_i() + ev.log_lambda()).scale(2),
                t => regular_sum(ev, row, t, a.unwrap()),
            }),
            f => unreachable!("{f:?} is not a GL2 family"),
        };
    }
    if !col.is_regular() {
        let p = isolated_position(col.index, col.eta.unwrap());
        let (base, coeffs): (CycValue, [i64; 10]) = match row.family {
            Chi3 => (ev.sqrt_q(), [0, 0, 0, 0, 0, 0, 1, -1, -1, 1]),
            EtaChi3 => (ev.sqrt_q(), [0, 0, 0, 0, 0, 0, 1, -1, 1, -1]),
            Trivial => (ev.int(1), [1; 10]),
            Eta => (ev.int(1), [1, -1, 1, -1, 1, -1, 1, 1, -1, -1]),
            Chi2 => (ev.int(1), [q, q, 0, 0, q, q, 0, 0, 0, 0]),
            EtaChi2 => (ev.int(1), [q, -q, 0, 0, q, -q, 0, 0, 0, 0]),
            LeviTrivialEta => (ev.int(1), [1, -1, 1, -1, q, -q, 0, 0, 0, 0]),
            LeviEtaTrivial => (ev.int(1), [1, 1, 1, 1, q, q, 0, 0, 0, 0]),
            LeviSteinbergEta => (ev.int(1), [q, -q, 0, 0, 1, -1, 1, 1, -1, -1]),
            LeviEtaSteinberg => (ev.int(1), [q, q, 0, 0, 1, 1, 1, 1, 1, 1]),
            SplitTrivial => {
                let c = [q + 1, q + 1, 1, 1];
                if p < 4 {
                    return EpsLinear::fixed(ev.int(c[p]));
                }
                let b = ev.alpha(k.unwrap(), ev.log_minus_one());
                (b, [0, 0, 0, 0, q + 1, q + 1, 1, 1, 1, 1])
            }
            SplitEta => {
                let c = [q + 1, -q - 1, 1, -1];
                if p < 4 {
                    return EpsLinear::fixed(ev.int(c[p]));
                }
                let b = ev.alpha(k.unwrap(), ev.log_minus_one());
                (b, [0, 0, 0, 0, q + 1, -q - 1, 1, 1, -1, -1])
            }
            NonsplitTrivial => {
                let c = [1 - q, 1 - q, 1, 1];
                if p < 4 {
                    return EpsLinear::fixed(ev.int(c[p]));
                }
                let b = ev.omega(k.unwrap(), ev.log_i() + ev.log_lambda());
                (b, [0, 0, 0, 0, 1 - q, 1 - q, 1, 1, 1, 1])
            }
            NonsplitEta => {
                let c = [1 - q, q - 1, 1, -1];
                if p < 4 {
                    return EpsLinear::fixed(ev.int(c[p]));
                }
                let b = ev.omega(k.unwrap(), ev.log_i() + ev.log_lambda());
                (b, [0, 0, 0, 0, q - 1, 1 - q, -1, -1, 1, 1])
            }
            f => unreachable!("{f:?} is not a GL3 family"),
        };
        return EpsLinear::fixed(base.scale(coeffs[p]));
    }
    let t = (col.index - 6) as usize;
    let signs = |v: [i64; 4]| ev.int(v[t]);
    match row.family {
        Chi3 | EtaChi3 => EpsLinear::fixed(ev.int(0)),
        Trivial => EpsLinear::fixed(ev.int(1)),
        Eta => EpsLinear::linear(ev.int(1)),
        Chi2 => EpsLinear::fixed(signs([1, -1, 1, -1])),
        EtaChi2 => EpsLinear::linear(signs([1, -1, 1, -1])),
        LeviTrivialEta => EpsLinear::linear(signs([1, 1, -1, -1])),
        LeviEtaTrivial => EpsLinear::fixed(signs([1, 1, -1, -1])),
        LeviSteinbergEta => EpsLinear::linear(signs([1, -1, -1, 1])),
        LeviEtaSteinberg => EpsLinear::fixed(signs([1, -1, -1, 1])),
        SplitTrivial | NonsplitTrivial => EpsLinear::fixed(regular_sum(ev, row, col.index, a.unwrap())),
        SplitEta | NonsplitEta => {
            let s = regular_sum(ev, row, col.index, a.unwrap());
            EpsLinear::linear(if col.index >= 8 { -s } else { s })
        }
        f => unreachable!("{f:?} is not a GL3 family"),
    }
}

/// The parameters `α` (characters of `F_q^*`) and `ω` (with `ω^q = ω⁻¹`) up to inversion, excluding `1, η`.
fn row_parameters(q: u64) -> (Vec<CharOrbitStar>, Vec<CharOrbitStar>) {
    let orbits: Vec<CharOrbitStar> =
        star_orbits(2, q).into_iter().filter(|o| !o.is_trivial() && !o.is_eta(q)).collect();
    let alphas = orbits.iter().filter(|o| o.rep.r == 1 && !o.self_inverse).copied().collect();
    let omegas = orbits.iter().filter(|o| o.rep.r == 2 && o.self_inverse).copied().collect();
    (alphas, omegas)
}

pub fn table_rows(n: u32, q: u64) -> Result<Vec<CharLabel>> {
    use CharFamily::*;
    check_admissible(n, q)?;
    let (alphas, omegas) = row_parameters(q);
    let with = |f: CharFamily, ps: &[CharOrbitStar]| ps.iter().map(move |&p| CharLabel { family: f, param: Some(p) }).collect::<Vec<_>>();
    let mut rows: Vec<CharLabel>;
    if n == 2 {
        rows = [SplitQuadratic, Trivial, Eta, Steinberg, EtaSteinberg].map(CharLabel::plain).to_vec();
        rows.extend(with(SplitPair, &alphas));
        rows.extend(with(NonsplitPair, &omegas));
    } else {
        rows = [
            Chi3,
            EtaChi3,
            Trivial,
            Eta,
            Chi2,
            EtaChi2,
            LeviTrivialEta,
            LeviEtaTrivial,
            LeviSteinbergEta,
            LeviEtaSteinberg,
        ]
        .map(CharLabel::plain)
        .to_vec();
        rows.extend(with(SplitTrivial, &alphas));
        rows.extend(with(SplitEta, &alphas));
        rows.extend(with(NonsplitTrivial, &omegas));
        rows.extend(with(NonsplitEta, &omegas));
    }
    Ok(rows)
}

/// The label of `enum_char_types` attached to a row.
pub fn char_type_of(n: u32, row: &CharLabel) -> CharType {
    use CharFamily::*;
    let p = |v: &[u32]| Partition::new(v.to_vec());
    let e = Partition::empty;
    let (lp, lm) = match row.family {
        Trivial => (p(&[n]), e()),
        Eta => (e(), p(&[n])),
        Steinberg => (p(&[1, 1]), e()),
        EtaSteinberg => (e(), p(&[1, 1])),
        SplitQuadratic => (p(&[1]), p(&[1])),
        SplitPair | NonsplitPair => (e(), e()),
        Chi3 => (p(&[2, 1]), e()),
        EtaChi3 => (e(), p(&[2, 1])),
        Chi2 => (p(&[1, 1, 1]), e()),
        EtaChi2 => (e(), p(&[1, 1, 1])),
        LeviTrivialEta => (p(&[2]), p(&[1])),
        LeviEtaTrivial => (p(&[1]), p(&[2])),
        LeviSteinbergEta => (p(&[1, 1]), p(&[1])),
        LeviEtaSteinberg => (p(&[1]), p(&[1, 1])),
        SplitTrivial | NonsplitTrivial => (p(&[1]), e()),
        SplitEta | NonsplitEta => (e(), p(&[1])),
    };
    let mut t = CharType { lam_plus: lp, lam_minus: lm, pairs: Vec::new(), selfdual: Vec::new() };
    if let Some(o) = row.param {
        if o.self_inverse {
            t.selfdual.push((p(&[1]), o));
        } else {
            t.pairs.push((p(&[1]), o));
        }
    }
    t
}

/// `ρ(-1)`: the central character of the row at `-1`.
fn central_sign(ev: &Eval, row: &CharLabel) -> i8 {
    use CharFamily::*;
    let eta = ev.eta_log(ev.log_minus_one());
    let omega = |r: &CharLabel| {
        let v = ev.omega(r.param.unwrap().rep.k, ev.log_minus_one());
        v.to_int().expect("ω(-1) = ±1") as i8
    };
    match row.family {
        Eta | SplitQuadratic | EtaChi3 | EtaChi2 | LeviTrivialEta | LeviSteinbergEta | SplitEta => eta,
        NonsplitPair | NonsplitTrivial => omega(row),
        NonsplitEta => omega(row) * eta,
        _ => 1,
    }
}

fn sp_shape(c: &ClassData) -> Vec<u32> {
    c.sp_part.partition.parts().to_vec()
}

fn ort_shape(c: &ClassData) -> Vec<u32> {
    c.ort_part.partition.parts().to_vec()
}

fn unique<'a>(classes: &'a [ClassData], what: &str, pred: impl Fn(&ClassData) -> bool) -> Result<&'a ClassData> {
    let hits: Vec<&ClassData> = classes.iter().filter(|c| pred(c)).collect();
    match hits.as_slice() {
        [c] => Ok(c),
        _ => Err(Error::NoLabel(format!("{} classes match {what}", hits.len()))),
    }
}

/// Isolated columns in printed order, with the sign conventions fixed by explicit representatives.
fn isolated_columns(n: u32, q: u64, classes: &[ClassData]) -> Result<Vec<(ClassLabel, ClassData, i8)>> {
    let a = AutoSpec::new(n as usize, q, AutoKind::Sigma)?;
    let f = &a.field;
    let label = |g: Mat| class_label(&a, &GLElement { mat: g, twist: 1 });
    let i = f.exp((q * q - 1) as i64 / 4);
    let minus_i = f.neg(i);
    let isolated = |c: &ClassData| c.gl_parts.is_empty();
    let mut out = Vec::new();
    if n == 2 {
        let col = |index| ClassLabel { index, eta: None, param: None };
        let c1 = unique(classes, "C1", |c| isolated(c) && sp_shape(c) == [1, 1])?;
        let mut u = Mat::identity(2);
        u.set(0, 1, 1);
        let c2 = label(u)?;
        let c3 = unique(classes, "C3", |c| isolated(c) && sp_shape(c) == [2] && *c != c2)?;
        let c4 = unique(classes, "C4", |c| isolated(c) && ort_shape(c) == [1, 1] && c.eta == 1)?;
        let c5 = unique(classes, "C5", |c| isolated(c) && ort_shape(c) == [1, 1] && c.eta == -1)?;
        if label(Mat::diag(&[i, minus_i]))? != *c4 {
            return Err(Error::NoLabel("diag(i,-i)σ outside C4".into()));
        }
        for (k, c, e) in [(1, c1, 1), (3, c3, 1), (4, c4, 1), (5, c5, -1)] {
            out.push((col(k), c.clone(), e));
        }
        out.insert(1, (col(2), c2, 1));
        return Ok(out);
    }
    let mut u = Mat::identity(3);
    u.set(0, 2, 1);
    let g = a.mul(&u, &Mat::diag(&[i, 1, minus_i]));
    let twisted = a.mul(&Mat::diag(&[1, a.subfield_generator(), 1]), &g);
    let c4 = [label(g)?, label(twisted)?];
    for &eta in &[1i8, -1] {
        let col = |index| ClassLabel { index, eta: Some(eta), param: None };
        let c1 = unique(classes, "C1", |c| isolated(c) && sp_shape(c).is_empty() && ort_shape(c) == [1, 1, 1] && c.eta == eta)?;
        let c2 = unique(classes, "C2", |c| isolated(c) && ort_shape(c) == [3] && c.eta == eta)?;
        let c3 = unique(classes, "C3", |c| isolated(c) && sp_shape(c) == [1, 1] && c.eta == eta)?;
        let four = &c4[usize::from(eta < 0)];
        if sp_shape(four) != [2] || four.eta != eta {
            return Err(Error::NoLabel(format!("C4 representative has label {four:?}")));
        }
        let c5 = unique(classes, "C5", |c| isolated(c) && sp_shape(c) == [2] && c.eta == eta && c != four)?;
        for (k, c) in [(1, c1), (2, c2), (3, c3), (4, four), (5, c5)] {
            out.push((col(k), c.clone(), eta));
        }
    }
    out.sort_by_key(|(l, _, _)| isolated_position(l.index, l.eta.unwrap()));
    Ok(out)
}

fn regular_columns(n: u32, q: u64, classes: &[ClassData]) -> Result<Vec<(ClassLabel, ClassData, i8)>> {
    let orbits: Vec<EigOrbit> = eig_orbits(n, q).into_iter().filter(|o| o.special.is_none() && o.d == 1).collect();
    let mut out = Vec::new();
    for index in 6..=9u8 {
        for o in orbits.iter().filter(|o| column_type(o) == index) {
            let gl = vec![(*o, Partition::new(vec![1]))];
            let etas: &[i8] = if n == 2 { &[1] } else { &[1, -1] };
            for &eta in etas {
                let c = unique(classes, "regular column", |c| c.gl_parts == gl && c.eta == eta)?;
                let label = ClassLabel { index, eta: (n == 3).then_some(eta), param: Some(*o) };
                let eps = if n == 2 { o.e } else { eta };
                out.push((label, c.clone(), eps));
            }
        }
    }
    Ok(out)
}

/// Members `a, -a, a⁻¹, -a⁻¹` of the eigenvalue class, as logs in `F_{q²}`.
fn hat_members(m2: u64, a: u64) -> [u64; 4] {
    let h = m2 / 2;
    [a, (m2 - a) % m2, (a + h) % m2, (m2 - a + h) % m2]
}

/// Builds the table with the printed signs, parametric rows and columns taken from orbit data.
pub fn build_table(n: u32, q: u64, kind: AutoKind) -> Result<CharTable> {
    check_admissible(n, q)?;
    let ev = Eval::new(q);
    let rows = table_rows(n, q)?;
    let classes = enum_class_types(n, q)?;
    let mut cols = isolated_columns(n, q, &classes)?;
    cols.extend(regular_columns(n, q, &classes)?);
    let expected = if n == 2 { q + 3 } else { 2 * q + 6 } as usize;
    if rows.len() != expected || cols.len() != expected {
        return Err(Error::Incompatible(format!("{} rows and {} columns, expected {expected}", rows.len(), cols.len())));
    }
    let mut cells = Vec::with_capacity(rows.len());
    for row in &rows {
        let factor = if kind == AutoKind::SigmaPrime && central_sign(&ev, row) < 0 {
            CycValue::root_of_unity(ev.conductor, q, 4, 1)
        } else {
            ev.int(1)
        };
        let mut line = Vec::with_capacity(cols.len());
        for (col, _, eps) in &cols {
            let a = col.param.map(|o| o.rep_log);
            let v = printed(&ev, n, row, col, a).at(*eps);
            if let Some(a) = a {
                for b in hat_members(ev.m2, a) {
                    if printed(&ev, n, row, col, Some(b)).at(*eps) != v {
                        return Err(Error::Incompatible(format!("{} at {} depends on the representative", row.name(), col.name())));
                    }
                }
            }
            line.push(TableCell { value: &v * &factor });
        }
        cells.push(line);
    }
    let (columns, rest): (Vec<ClassLabel>, Vec<(ClassData, i8)>) = cols.into_iter().map(|(l, c, e)| (l, (c, e))).unzip();
    let (column_data, column_eps) = rest.into_iter().unzip();
    Ok(CharTable { n, q, kind, conductor: ev.conductor, rows, columns, column_data, column_eps, cells })
}

/// Value of a parametric row at a regular column, summed over the twisted classes of a torus.
///
/// The split torus is `diag(t)` with entries in `F_q`; the non-split one is `diag(x, [m,] x^q)` with
/// `x ∈ F_{q²}`. One representative is taken per class under twisted conjugation by the torus.
pub fn regular_qss_value(n: u32, q: u64, row: &CharLabel, col: &ClassLabel) -> Result<CycValue> {
    check_admissible(n, q)?;
    if !row.family.is_parametric() {
        return Err(Error::Precondition(format!("{} is not a parametric row", row.name())));
    }
    let Some(orbit) = col.param.filter(|_| col.is_regular()) else {
        return Err(Error::Precondition(format!("{} is not a regular class", col.name())));
    };
    let ev = Eval::new(q);
    let (m2, q1) = (ev.m2, q + 1);
    let k = row.param.unwrap().rep.k;
    let targets = [(2 * orbit.rep_log) % m2, (m2 - 2 * orbit.rep_log % m2) % m2];
    let middles: Vec<u64> = if n == 3 { vec![0, q1] } else { vec![0] };
    let twist_eta = matches!(row.family, CharFamily::SplitEta | CharFamily::NonsplitEta);
    let mut total = ev.int(0);
    let mut add = |b: u64, det: u64, theta: CycValue, m: u64| {
        if !targets.contains(&(b % m2)) {
            return;
        }
        if let Some(e) = col.eta {
            if ev.eta_log(det) != e {
                return;
            }
        }
        let mid = if twist_eta { ev.int(ev.eta_log(m) as i64) } else { ev.int(1) };
        total = &total + &(&theta * &mid);
    };
    for &m in &middles {
        if row.family.split() {
            // diag(t1, [m,] 1) with t1 ∈ F_q^*
            for j in 0..q - 1 {
                let t1 = j * q1;
                add(t1, t1 + m, ev.alpha(k, t1), m);
            }
        } else {
            // diag(x, [m,] x^q) with x running over F_{q²}^* / F_q^*
            for x in 0..q1 {
                let b = (x * (m2 + 1 - q)) % m2;
                add(b, x * q1 + m, ev.omega(k, x), m);
            }
        }
    }
    Ok(total)
}

/// Outcome of the three orthogonality checks.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct OrthogonalityReport {
    pub row_norms: bool,
    pub row_pairs: bool,
    pub columns: bool,
    pub failures: Vec<String>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.row_norms && self.row_pairs && self.columns
    }

    pub fn summary(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }
}

impl CharTable {
    pub fn class_sizes(&self) -> Result<Vec<u128>> {
        self.column_data.iter().map(|c| class_size(c, self.n, self.q)).collect()
    }

    pub fn value(&self, row: usize, col: usize) -> &CycValue {
        &self.cells[row][col].value
    }

    pub fn row_index(&self, family: CharFamily) -> Option<usize> {
        self.rows.iter().position(|r| r.family == family)
    }

    pub fn column_index(&self, index: u8, eta: Option<i8>) -> Option<usize> {
        self.columns.iter().position(|c| c.index == index && c.eta == eta)
    }

    pub fn outer_block(&self) -> OuterBlock {
        OuterBlock {
            rows: self.rows.iter().map(CharLabel::name).collect(),
            columns: self.columns.iter().map(ClassLabel::name).collect(),
            values: self.cells.iter().map(|r| r.iter().map(|c| c.value.clone()).collect()).collect(),
        }
    }

    /// Column of an outer element of the group described by `a` (same `n`, `q` and kind).
    pub fn column_of(&self, a: &AutoSpec, x: &GLElement) -> Result<Option<usize>> {
        if x.twist == 0 {
            return Ok(None);
        }
        let label = match a.kind {
            AutoKind::Sigma => class_label(a, x)?,
            AutoKind::SigmaPrime => {
                let s = AutoSpec::new(a.n, a.q, AutoKind::Sigma)?;
                let g = s.mul(&x.mat, &s.t0);
                class_label(&s, &GLElement { mat: g, twist: 1 })?
            }
        };
        Ok(self.column_data.iter().position(|c| *c == label))
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once("character".to_string()).chain(self.columns.iter().map(ClassLabel::name));
        w.write_record(header).expect("in-memory write");
        for (row, cells) in self.rows.iter().zip(&self.cells) {
            let record = std::iter::once(row.name()).chain(cells.iter().map(|c| c.value.to_string()));
            w.write_record(record).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }
}

/// Exact orthogonality on the outer coset: row norms `|GL_n(q)|`, orthogonal rows, and column
/// relations with the centralizer orders.
pub fn verify_orthogonality(t: &CharTable, class_sizes: &[u128]) -> Result<OrthogonalityReport> {
    if class_sizes.len() != t.columns.len() {
        return Err(Error::Incompatible("one class size per column is needed".into()));
    }
    let order = AutoSpec::new(t.n as usize, t.q, AutoKind::Sigma)?.group_size() as i64;
    let zero = CycValue::from_int(t.conductor, t.q, 0);
    let conj: Vec<Vec<CycValue>> = t.cells.iter().map(|r| r.iter().map(|c| c.value.conj()).collect()).collect();
    let mut rep = OrthogonalityReport { row_norms: true, row_pairs: true, columns: true, failures: Vec::new() };
    let rows = t.rows.len();
    for i in 0..rows {
        for j in i..rows {
            let mut s = zero.clone();
            for (c, &size) in class_sizes.iter().enumerate() {
                s = &s + &(&t.cells[i][c].value * &conj[j][c]).scale(size as i64);
            }
            let want = if i == j { order } else { 0 };
            if s != CycValue::from_int(t.conductor, t.q, want) {
                let (a, b) = (t.rows[i].name(), t.rows[j].name());
                if i == j {
                    rep.row_norms = false;
                    rep.failures.push(format!("row norm of {a} is {s}, expected {want}"));
                } else {
                    rep.row_pairs = false;
                    rep.failures.push(format!("rows {a} and {b} are not orthogonal: {s}"));
                }
            }
        }
    }
    for c in 0..t.columns.len() {
        let z = centralizer_order(&t.column_data[c], t.q)? as i64;
        for d in c..t.columns.len() {
            let mut s = zero.clone();
            for r in 0..rows {
                s = &s + &(&t.cells[r][c].value * &conj[r][d]);
            }
            let want = if c == d { z } else { 0 };
            if s != CycValue::from_int(t.conductor, t.q, want) {
                rep.columns = false;
                rep.failures.push(format!("columns {} and {}: {s}, expected {want}", t.columns[c].name(), t.columns[d].name()));
            }
        }
    }
    Ok(rep)
}

/// Whether the labels of the rows are exactly the σ-stable character labels.
pub fn rows_match_char_types(t: &CharTable) -> Result<bool> {
    let mut mine: Vec<CharType> = t.rows.iter().map(|r| char_type_of(t.n, r)).collect();
    let mut all = enum_char_types(t.n, t.q)?;
    mine.sort();
    all.sort();
    Ok(mine == all)
}
