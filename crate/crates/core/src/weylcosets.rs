//! Solutions of `w⁻¹τwμ⁻¹ ∈ W′` inside the hyperoctahedral group and their
//! coset and fibre bookkeeping.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{cycle_type, SignedCycleType, WElement};

/// A subgroup `W′ ⊂ 𝔚_N` with twists `τ`, `μ`.
#[derive(Clone, Debug)]
pub struct CosetProblem {
    pub rank: usize,
    pub generators: Vec<WElement>,
    pub tau: WElement,
    pub mu: WElement,
    members: BTreeSet<WElement>,
}

/// Subgroup generated by `gens` in `𝔚_rank`.
pub fn closure(rank: usize, gens: &[WElement]) -> BTreeSet<WElement> {
    let mut out = BTreeSet::from([WElement::identity(rank)]);
    let mut frontier = vec![WElement::identity(rank)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g);
            if out.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    out
}

impl CosetProblem {
    pub fn new(rank: usize, generators: Vec<WElement>, tau: WElement, mu: WElement) -> Result<CosetProblem> {
        if rank == 0 || rank > 6 {
            return Err(Error::Precondition(format!("rank {rank} outside 1..=6")));
        }
        if generators.iter().chain([&tau, &mu]).any(|g| g.rank() != rank) {
            return Err(Error::Precondition("element of the wrong rank".into()));
        }
        let members = closure(rank, &generators);
        let p = CosetProblem { rank, generators, tau, mu, members };
        if !p.is_stable(&p.mu) {
            return Err(Error::Precondition("W′ is not μ-stable".into()));
        }
        Ok(p)
    }

    pub fn subgroup(&self) -> &BTreeSet<WElement> {
        &self.members
    }

    pub fn contains(&self, w: &WElement) -> bool {
        self.members.contains(w)
    }

    pub fn is_stable(&self, t: &WElement) -> bool {
        let ti = t.inverse();
        self.generators.iter().all(|g| self.members.contains(&t.compose(g).compose(&ti)))
    }

    /// `w⁻¹τwμ⁻¹`.
    pub fn defect(&self, w: &WElement) -> WElement {
        w.inverse().compose(&self.tau).compose(w).compose(&self.mu.inverse())
    }

    /// Orbit of `ν ∈ W′` under `ν ↦ x⁻¹ ν μxμ⁻¹`, `x ∈ W′`.
    pub fn twisted_class(&self, nu: &WElement) -> BTreeSet<WElement> {
        let mi = self.mu.inverse();
        self.members.iter().map(|x| x.inverse().compose(nu).compose(&self.mu).compose(x).compose(&mi)).collect()
    }

    /// `|C_{W′}(ν)|` for the twisted action.
    pub fn twisted_stabilizer(&self, nu: &WElement) -> u64 {
        let mi = self.mu.inverse();
        self.members.iter().filter(|x| x.inverse().compose(nu).compose(&self.mu).compose(x).compose(&mi) == *nu).count() as u64
    }
}

/// One twisted class of `W′` met by the solution set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FiberClass {
    pub nu: WElement,
    pub nu_type: SignedCycleType,
    pub class: Vec<WElement>,
    pub solutions: Vec<WElement>,
    pub z_tau: u64,
    pub z_nu: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FiberReport {
    pub classes: Vec<FiberClass>,
    pub empty: bool,
}

impl FiberReport {
    pub fn solution_count(&self) -> usize {
        self.classes.iter().map(|c| c.solutions.len()).sum()
    }
}

pub fn centralizer_size(w: &WElement) -> u64 {
    WElement::all(w.rank()).iter().filter(|x| x.compose(w) == w.compose(x)).count() as u64
}

/// Exhaustive solution of `w⁻¹τwμ⁻¹ ∈ W′`, grouped by the twisted class of the defect.
pub fn solve(p: &CosetProblem) -> FiberReport {
    let mut groups: BTreeMap<WElement, Vec<WElement>> = BTreeMap::new();
    let mut class_of: BTreeMap<WElement, WElement> = BTreeMap::new();
    let mut classes: BTreeMap<WElement, BTreeSet<WElement>> = BTreeMap::new();
    for w in WElement::all(p.rank) {
        let d = p.defect(&w);
        if !p.contains(&d) {
            continue;
        }
        let rep = match class_of.get(&d) {
            Some(r) => r.clone(),
            None => {
                let cl = p.twisted_class(&d);
                let rep = cl.iter().next().unwrap().clone();
                for x in &cl {
                    class_of.insert(x.clone(), rep.clone());
                }
                classes.insert(rep.clone(), cl);
                rep
            }
        };
        groups.entry(rep).or_default().push(w);
    }
    let z_tau = centralizer_size(&p.tau);
    let out: Vec<FiberClass> = groups
        .into_iter()
        .map(|(nu, solutions)| FiberClass {
            nu_type: cycle_type(&nu),
            z_nu: p.twisted_stabilizer(&nu),
            class: classes[&nu].iter().cloned().collect(),
            nu,
            solutions,
            z_tau,
        })
        .collect();
    FiberReport { empty: out.is_empty(), classes: out }
}

/// Checks the coset decomposition of a report: disjoint fibres that are unions of right
/// `W′`-cosets, surjective onto each twisted class with fibres of size `z_τ`, and `z_τ/z_ν` cosets.
pub fn verify_structure(p: &CosetProblem, r: &FiberReport) -> Result<()> {
    let fail = |m: String| Err(Error::Incompatible(m));
    let all: BTreeSet<&WElement> = r.classes.iter().flat_map(|c| c.solutions.iter()).collect();
    if all.len() != r.solution_count() {
        return fail("fibres overlap".into());
    }
    for c in &r.classes {
        let sols: BTreeSet<&WElement> = c.solutions.iter().collect();
        if c.solutions.iter().any(|w| p.subgroup().iter().any(|x| !sols.contains(&w.compose(x)))) {
            return fail(format!("fibre over {:?} is not a union of cosets", c.nu));
        }
        let mut fibre: BTreeMap<WElement, u64> = BTreeMap::new();
        for w in &c.solutions {
            *fibre.entry(p.defect(w)).or_default() += 1;
        }
        let class: BTreeSet<WElement> = c.class.iter().cloned().collect();
        if fibre.keys().cloned().collect::<BTreeSet<_>>() != class {
            return fail(format!("defects over {:?} miss part of the class", c.nu));
        }
        if fibre.values().any(|&k| k != c.z_tau) {
            return fail(format!("a fibre over {:?} has size other than {}", c.nu, c.z_tau));
        }
        if c.z_nu * c.class.len() as u64 != p.subgroup().len() as u64 {
            return fail(format!("orbit-stabilizer fails at {:?}", c.nu));
        }
        let cosets: BTreeSet<BTreeSet<WElement>> =
            c.solutions.iter().map(|w| p.subgroup().iter().map(|x| w.compose(x)).collect()).collect();
        if cosets.len() as u64 * c.z_nu != c.z_tau {
            return fail(format!("{} cosets over {:?}, expected z_tau/z_nu", cosets.len(), c.nu));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetCardinality {
    pub nu: SignedCycleType,
    pub coset_count: u64,
    /// Preimage of the whole class.
    pub class_preimage: u128,
    /// Preimage of one coset.
    pub coset_preimage: u128,
}

/// Preimage sizes from `|M_τ|`, `|L′|` and the centraliser order, one entry per class of `report`.
pub fn coset_cardinalities(report: &FiberReport, m_tau: u128, l_prime: u128, centralizer: u128) -> Result<Vec<CosetCardinality>> {
    if centralizer == 0 || (m_tau * l_prime) % centralizer != 0 {
        return Err(Error::Incompatible(format!("{centralizer} does not divide {}", m_tau * l_prime)));
    }
    let per_coset = m_tau * l_prime / centralizer;
    report
        .classes
        .iter()
        .map(|c| {
            if c.z_nu == 0 || c.z_tau % c.z_nu != 0 {
                return Err(Error::Incompatible(format!("z_nu = {} does not divide z_tau = {}", c.z_nu, c.z_tau)));
            }
            let coset_count = c.z_tau / c.z_nu;
            Ok(CosetCardinality {
                nu: c.nu_type.clone(),
                coset_count,
                class_preimage: per_coset * coset_count as u128,
                coset_preimage: per_coset,
            })
        })
        .collect()
}

/// Generators of `𝔚_a × W(D_b)` on the first `a` and next `b` coordinates of `𝔚_{a+b+t}`,
/// the Weyl group of an `Sp_{2a} × SO_{2b}` factor (the remaining `t` coordinates are a torus).
pub fn isolated_subgroup(a: usize, b: usize, t: usize) -> Vec<WElement> {
    let m = a + b + t;
    let mut gens = Vec::new();
    if a > 0 {
        gens.push(WElement::flip(m, 0));
    }
    for i in 1..a {
        gens.push(WElement::transposition(m, i - 1, i));
    }
    for i in a + 1..a + b {
        let s = WElement::transposition(m, i - 1, i);
        gens.push(s.clone());
        gens.push(WElement::flip(m, i - 1).compose(&WElement::flip(m, i)).compose(&s));
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::group_order;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn check_structure(p: &CosetProblem, r: &FiberReport) {
        verify_structure(p, r).unwrap();
    }

    #[test]
    fn trivial_cases() {
        for n in 1..=3 {
            let all = WElement::all(n);
            let id = WElement::identity(n);
            let p = CosetProblem::new(n, all.clone(), id.clone(), id.clone()).unwrap();
            let r = solve(&p);
            assert_eq!(r.classes.len(), 1);
            assert_eq!(r.solution_count() as u64, group_order(n as u32));
            check_structure(&p, &r);
            for tau in &all {
                let p = CosetProblem::new(n, vec![], tau.clone(), tau.clone()).unwrap();
                let r = solve(&p);
                let sols: BTreeSet<WElement> = r.classes[0].solutions.iter().cloned().collect();
                let cent: BTreeSet<WElement> = all.iter().filter(|x| x.compose(tau) == tau.compose(x)).cloned().collect();
                assert_eq!(sols, cent);
            }
        }
    }

    #[test]
    fn rank_two_flip_example() {
        let p = CosetProblem::new(2, vec![WElement::flip(2, 0)], WElement::flip(2, 1), WElement::flip(2, 1)).unwrap();
        let r = solve(&p);
        assert!(!r.empty);
        for c in &r.classes {
            assert_eq!(c.z_tau, 4);
        }
        check_structure(&p, &r);
        let card = coset_cardinalities(&r, 10, 12, 2).unwrap();
        for (c, k) in r.classes.iter().zip(&card) {
            assert_eq!(k.coset_count, 4 / c.z_nu);
            assert_eq!(k.class_preimage, k.coset_preimage * k.coset_count as u128);
        }
    }

    #[test]
    fn cardinalities_reject_bad_input() {
        let p = CosetProblem::new(2, vec![], WElement::identity(2), WElement::identity(2)).unwrap();
        let r = solve(&p);
        assert!(coset_cardinalities(&r, 3, 5, 7).is_err());
        let one = coset_cardinalities(&r, 6, 1, 1).unwrap();
        assert_eq!(one[0].coset_count, 8);
    }

    #[test]
    fn random_problems() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut done = 0;
        while done < 200 {
            let n = rng.gen_range(1..=4);
            let all = WElement::all(n);
            let k = rng.gen_range(0..=2);
            let gens: Vec<WElement> = (0..k).map(|_| all[rng.gen_range(0..all.len())].clone()).collect();
            let tau = all[rng.gen_range(0..all.len())].clone();
            let Ok(p) = CosetProblem::new(n, gens, tau.clone(), tau) else { continue };
            let r = solve(&p);
            check_structure(&p, &r);
            // τ = μ: the identity always solves, so nothing is empty
            assert!(!r.empty);
            assert!(r.classes.iter().any(|c| c.class.contains(&WElement::identity(n))));
            done += 1;
        }
    }

    #[test]
    fn general_twist_and_mu_choice() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut tried = 0;
        while tried < 100 {
            let n = rng.gen_range(2..=4);
            let a = rng.gen_range(0..=n);
            let b = rng.gen_range(0..=n - a);
            let gens = isolated_subgroup(a, b, n - a - b);
            let all = WElement::all(n);
            let tau = all[rng.gen_range(0..all.len())].clone();
            let mu = all[rng.gen_range(0..all.len())].clone();
            let Ok(p) = CosetProblem::new(n, gens.clone(), tau.clone(), mu.clone()) else { continue };
            let r = solve(&p);
            check_structure(&p, &r);
            // emptiness is the absence of any w with w⁻¹τw ∈ W′μ
            let direct = all.iter().any(|w| p.contains(&p.defect(w)));
            assert_eq!(r.empty, !direct);
            // moving μ within W′μ does not change the solution set
            let x = p.subgroup().iter().nth(rng.gen_range(0..p.subgroup().len())).unwrap().clone();
            let p2 = CosetProblem::new(n, gens, tau, x.compose(&mu)).unwrap();
            let s1: BTreeSet<WElement> = r.classes.iter().flat_map(|c| c.solutions.clone()).collect();
            let s2: BTreeSet<WElement> = solve(&p2).classes.iter().flat_map(|c| c.solutions.clone()).collect();
            assert_eq!(s1, s2);
            tried += 1;
        }
    }

    #[test]
    fn isolated_subgroup_orders() {
        // |𝔚_a| · |W(D_b)|
        for (a, b, expect) in [(2usize, 0usize, 8usize), (0, 2, 4), (1, 2, 8), (2, 2, 32), (0, 3, 24), (1, 1, 2)] {
            assert_eq!(closure(a + b, &isolated_subgroup(a, b, 0)).len(), expect);
        }
    }

    #[test]
    fn unstable_subgroup_is_rejected() {
        let s = WElement::transposition(2, 0, 1);
        assert!(CosetProblem::new(2, vec![WElement::flip(2, 0)], s.clone(), s).is_err());
    }
}
