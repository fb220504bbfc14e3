//! Groups that are not simply connected.
//!
//! For `G = G^sc / Z` the character lattice is the kernel of a projection
//! `pi` from the weight lattice onto `Z*`. Vertices whose images generate
//! `Z*` are removed, every other fundamental weight `x_i` is replaced by
//! `z_i = x_i + sum_j a_ij x_{k_j}` with `pi(z_i) = 0`, and the chain search
//! runs on the remaining subdiagram.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::{AbelianGroup, Element};
use crate::demazure::OperatorContext;
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::root_system::{CenterData, DynkinDiagram, Family, SimpleType};
use crate::search::{self, verify_certificate, Certificate, SearchOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lattice {
    SimplyConnected,
    Adjoint,
    /// Type `D_n`, `n` even: the quotient whose characters include `x_n`.
    HalfSpin,
    /// Quotient by the subgroup of order `d` of a cyclic center.
    Cyclic(u64),
    /// `G^m / mu_k` with `mu_k` embedded diagonally.
    Diagonal { copies: usize, order: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub diagram: DynkinDiagram,
    pub lattice: Lattice,
}

fn cyclic_order(ty: &SimpleType) -> Option<u64> {
    let c = ty.center();
    match c.group.orders.as_slice() {
        [] => Some(1),
        [n] => Some(*n),
        _ => None,
    }
}

impl GroupSpec {
    pub fn simply_connected(diagram: DynkinDiagram) -> Self {
        Self {
            diagram,
            lattice: Lattice::SimplyConnected,
        }
    }

    pub fn new(diagram: DynkinDiagram, lattice: Lattice) -> Result<Self> {
        let simple = || -> Result<SimpleType> {
            if diagram.is_simple() {
                Ok(diagram.components[0].ty)
            } else {
                Err(Error::InvalidLattice(format!(
                    "{lattice:?} needs a simple diagram, got {diagram}"
                )))
            }
        };
        match lattice {
            Lattice::SimplyConnected | Lattice::Adjoint => {}
            Lattice::HalfSpin => {
                let ty = simple()?;
                if ty.family != Family::D || ty.rank % 2 != 0 {
                    return Err(Error::InvalidLattice(format!(
                        "half-spin needs type D of even rank, got {ty}"
                    )));
                }
            }
            Lattice::Cyclic(d) => {
                let ty = simple()?;
                match cyclic_order(&ty) {
                    Some(n) if d >= 1 && n % d == 0 => {}
                    _ => {
                        return Err(Error::InvalidLattice(format!(
                            "the center of {ty} has no cyclic subgroup of order {d} to divide by"
                        )))
                    }
                }
            }
            Lattice::Diagonal { copies, order } => {
                let types = diagram.types();
                let ty = types[0];
                if copies == 0 || types.len() != copies || types.iter().any(|t| *t != ty) {
                    return Err(Error::InvalidLattice(format!(
                        "{diagram} is not {copies} copies of one simple type"
                    )));
                }
                match cyclic_order(&ty) {
                    Some(n) if order >= 1 && n % order == 0 => {}
                    _ => {
                        return Err(Error::InvalidLattice(format!(
                            "the center of {ty} has no cyclic subgroup of order {order}"
                        )))
                    }
                }
            }
        }
        Ok(Self { diagram, lattice })
    }

    /// `diagram` repeated `copies` times, divided by the diagonal `mu_order`.
    pub fn diagonal(ty: SimpleType, copies: usize, order: u64) -> Result<Self> {
        let diagram = DynkinDiagram::from_types(&vec![ty; copies]);
        Self::new(diagram, Lattice::Diagonal { copies, order })
    }

    /// The projection `pi` onto `Z*`, as images of the fundamental weights.
    pub fn projection(&self) -> CenterData {
        let n = self.diagram.rank;
        let project_cyclic = |d: u64| {
            let c = self.diagram.center_product();
            let pi = c
                .pi
                .iter()
                .map(|img| img.iter().map(|&v| v % d).collect())
                .collect();
            CenterData {
                group: AbelianGroup::new(vec![d]),
                pi,
            }
        };
        match self.lattice {
            Lattice::SimplyConnected => CenterData {
                group: AbelianGroup::trivial(),
                pi: vec![Vec::new(); n],
            },
            Lattice::Adjoint => self.diagram.center_product(),
            Lattice::HalfSpin => {
                let c = self.diagram.center_product();
                let pi = c.pi.iter().map(|img| vec![img[0]]).collect();
                CenterData {
                    group: AbelianGroup::new(vec![2]),
                    pi,
                }
            }
            Lattice::Cyclic(d) | Lattice::Diagonal { order: d, .. } => project_cyclic(d),
        }
    }

    pub fn positive_root_count(&self) -> usize {
        self.diagram.positive_root_count()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lattice {
            Lattice::SimplyConnected => write!(f, "{}", self.diagram),
            Lattice::Adjoint => write!(f, "{}:adjoint", self.diagram),
            Lattice::HalfSpin => write!(f, "{}:hs", self.diagram),
            Lattice::Cyclic(d) => write!(f, "{}:mu{d}", self.diagram),
            Lattice::Diagonal { copies, order } => {
                write!(f, "{}^{copies}/mu{order}", self.diagram.components[0].ty)
            }
        }
    }
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for t in start..items.len() {
            cur.push(items[t]);
            go(items, k, t + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Inclusion-minimal vertex sets whose images generate `Z*`, by size and
/// then lexicographically. A trivial `Z*` gives the single empty set.
pub fn generating_sets(projection: &CenterData) -> Vec<BTreeSet<usize>> {
    let group = &projection.group;
    if group.is_trivial() {
        return vec![BTreeSet::new()];
    }
    let images = |set: &[usize]| -> Vec<Element> {
        set.iter().map(|&v| projection.pi[v - 1].clone()).collect()
    };
    let useful: Vec<usize> = (1..=projection.pi.len())
        .filter(|&v| !group.is_zero(&projection.pi[v - 1]))
        .collect();
    let mut out = Vec::new();
    for k in 1..=group.prime_length().min(useful.len()) {
        for set in subsets_of_size(&useful, k) {
            if !group.generated_by(&images(&set)) {
                continue;
            }
            let minimal = (0..set.len()).all(|skip| {
                let smaller: Vec<usize> = set
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != skip)
                    .map(|(_, &v)| v)
                    .collect();
                !group.generated_by(&images(&smaller))
            });
            if minimal {
                out.push(set.into_iter().collect());
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    pub removed: Vec<usize>,
    /// `(i, a_i)` for each retained vertex `i`; `a_i[j]` multiplies
    /// `x_{removed[j]}`.
    pub coeffs: Vec<(usize, Vec<u64>)>,
}

impl Substitution {
    pub fn is_empty(&self) -> bool {
        self.removed.is_empty()
    }

    /// Fundamental-weight coordinates of `z_i`.
    pub fn z_coords(&self, nvars: usize, i: usize) -> Vec<i64> {
        let mut lin = vec![0i64; nvars];
        lin[i - 1] = 1;
        if let Some((_, a)) = self.coeffs.iter().find(|(v, _)| *v == i) {
            for (&k, &c) in self.removed.iter().zip(a) {
                lin[k - 1] += c as i64;
            }
        }
        lin
    }

    pub fn z(&self, nvars: usize, i: usize) -> Polynomial {
        Polynomial::linear(&self.z_coords(nvars, i))
    }

    /// `z_i = x_1 + 2*x_3` style descriptions of the nontrivial substitutions.
    pub fn describe(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .filter(|(_, a)| a.iter().any(|&c| c != 0))
            .map(|(i, a)| {
                let mut s = format!("z{i} = x{i}");
                for (&k, &c) in self.removed.iter().zip(a) {
                    match c {
                        0 => {}
                        1 => s.push_str(&format!(" + x{k}")),
                        _ => s.push_str(&format!(" + {c}*x{k}")),
                    }
                }
                s
            })
            .collect()
    }
}

/// Minimal non-negative `a` with `pi(x_i) + sum_j a_j pi(x_{k_j}) = 0`,
/// smallest total first, then lexicographically.
pub fn substitution_for(projection: &CenterData, removed: &BTreeSet<usize>) -> Result<Substitution> {
    let group = &projection.group;
    let removed_list: Vec<usize> = removed.iter().copied().collect();
    let gens: Vec<Element> = removed_list
        .iter()
        .map(|&k| projection.pi[k - 1].clone())
        .collect();
    if !group.generated_by(&gens) {
        return Err(Error::InvalidRemoval(format!(
            "images of {removed_list:?} do not generate {group}"
        )));
    }
    let bounds: Vec<u64> = gens.iter().map(|g| group.span_order(std::slice::from_ref(g))).collect();
    let mut candidates: Vec<Vec<u64>> = vec![Vec::new()];
    for &b in &bounds {
        candidates = candidates
            .into_iter()
            .flat_map(|c| {
                (0..b).map(move |a| {
                    let mut c = c.clone();
                    c.push(a);
                    c
                })
            })
            .collect();
    }
    candidates.sort_by_key(|c| (c.iter().sum::<u64>(), c.clone()));
    let mut coeffs = Vec::new();
    for i in (1..=projection.pi.len()).filter(|v| !removed.contains(v)) {
        let a = candidates
            .iter()
            .find(|a| {
                let mut acc = projection.pi[i - 1].clone();
                for (g, &c) in gens.iter().zip(a.iter()) {
                    acc = group.add(&acc, &group.scale(g, c as i64));
                }
                group.is_zero(&acc)
            })
            .cloned()
            .ok_or_else(|| Error::Inconsistent(format!("no substitution for x{i}")))?;
        coeffs.push((i, a));
    }
    Ok(Substitution {
        removed: removed_list,
        coeffs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alternative {
    pub removed: Vec<usize>,
    pub subdiagram: String,
    pub ud_lower_bound: usize,
}

#[derive(Clone, Debug)]
pub struct CdBound {
    pub spec: GroupSpec,
    pub bound: usize,
    pub positive_roots: usize,
    pub ud_lower_bound: usize,
    pub removed: BTreeSet<usize>,
    pub subdiagram: String,
    /// In original vertex indices.
    pub certificate: Certificate,
    pub substitution: Substitution,
    pub alternatives: Vec<Alternative>,
    pub z_verified: bool,
    pub annotations: Vec<String>,
}

/// Expands `prod z_i^{e_i}` over the certificate monomial and checks that
/// the certificate word takes it to 1.
pub fn verify_z_certificate(
    ctx: &OperatorContext,
    projection: &CenterData,
    substitution: &Substitution,
    cert: &Certificate,
) -> Result<bool> {
    if substitution.is_empty() {
        return Ok(verify_certificate(ctx, cert)?.valid);
    }
    let n = ctx.nvars();
    let mut p = Polynomial::one(n);
    for (v, e) in cert.monomial.factors() {
        if substitution.removed.contains(&v) {
            return Ok(false);
        }
        let coords = substitution.z_coords(n, v);
        if !projection.group.is_zero(&projection.project(&coords)) {
            return Ok(false);
        }
        p = &p * &Polynomial::linear(&coords).pow(e as u32);
    }
    Ok(ctx.apply_word(&cert.word, &p)?.is_one())
}

fn known_annotations(spec: &GroupSpec) -> Vec<String> {
    let mut notes = Vec::new();
    if spec.lattice == Lattice::SimplyConnected {
        for c in &spec.diagram.components {
            if matches!(c.ty.family, Family::A | Family::C) {
                notes.push(format!(
                    "{}: torsion index of the simply connected group is 1, so cd = 0 is known exactly",
                    c.ty
                ));
            }
        }
    }
    notes
}

/// `|Sigma+| - ud` over the best removal; `removed` pins the removal set.
pub fn cd_upper_bound_with(
    spec: &GroupSpec,
    removed: Option<&BTreeSet<usize>>,
    options: SearchOptions,
) -> Result<CdBound> {
    let projection = spec.projection();
    let candidates = match removed {
        Some(set) => {
            if !generating_sets(&projection).contains(set) {
                return Err(Error::InvalidRemoval(format!(
                    "{set:?} is not a minimal generating set for {}",
                    projection.group
                )));
            }
            vec![set.clone()]
        }
        None => generating_sets(&projection),
    };
    let mut alternatives = Vec::new();
    let mut best: Option<(BTreeSet<usize>, String, Certificate, Vec<usize>)> = None;
    for set in candidates {
        let sub = spec.diagram.subdiagram(&set)?;
        let ctx = OperatorContext::new(sub.cartan.clone());
        let lb = search::ud_lower_bound(&ctx, &sub.diagram, options)?;
        alternatives.push(Alternative {
            removed: set.iter().copied().collect(),
            subdiagram: sub.diagram.to_string(),
            ud_lower_bound: lb.bound,
        });
        if best.as_ref().is_none_or(|b| lb.bound > b.2.degree) {
            best = Some((set, sub.diagram.to_string(), lb.certificate, sub.new_to_old));
        }
    }
    let (removed, subdiagram, sub_cert, new_to_old) =
        best.ok_or_else(|| Error::Inconsistent("no generating set".into()))?;
    let full_ctx = OperatorContext::new(spec.diagram.cartan());
    let certificate = sub_cert.relabel(spec.diagram.rank, &new_to_old);
    let substitution = substitution_for(&projection, &removed)?;
    let z_verified = verify_z_certificate(&full_ctx, &projection, &substitution, &certificate)?;
    let positive_roots = spec.positive_root_count();
    Ok(CdBound {
        spec: spec.clone(),
        bound: positive_roots - certificate.degree,
        positive_roots,
        ud_lower_bound: certificate.degree,
        removed,
        subdiagram,
        certificate,
        substitution,
        alternatives,
        z_verified,
        annotations: known_annotations(spec),
    })
}

pub fn cd_upper_bound(spec: &GroupSpec) -> Result<CdBound> {
    cd_upper_bound_with(spec, None, SearchOptions::default())
}

#[derive(Clone, Debug)]
pub struct ProductQuotientBound {
    pub bound: usize,
    pub ud_full: usize,
    pub ud_sub: usize,
    pub removed: BTreeSet<usize>,
    pub cd: CdBound,
}

/// `m |Sigma+| - (m - 1) ud(Sigma) - ud(Sigma')` for `G^m / Z` with the
/// full center embedded diagonally. `removed` uses labels of one copy.
pub fn product_quotient_bound(
    ty: SimpleType,
    m: usize,
    removed: Option<&BTreeSet<usize>>,
) -> Result<ProductQuotientBound> {
    let order = cyclic_order(&ty).ok_or_else(|| {
        Error::InvalidLattice(format!("the center of {ty} is not cyclic"))
    })?;
    let spec = GroupSpec::diagonal(ty, m, order)?;
    let single = DynkinDiagram::simple(ty);
    let ctx = OperatorContext::new(single.cartan());
    let ud_full = search::ud_lower_bound(&ctx, &single, SearchOptions::default())?.bound;

    let own = GroupSpec::new(single.clone(), Lattice::Cyclic(order))?;
    let choices = match removed {
        Some(set) => {
            if !generating_sets(&own.projection()).contains(set) {
                return Err(Error::InvalidRemoval(format!(
                    "{set:?} is not a minimal generating set for the center of {ty}"
                )));
            }
            vec![set.clone()]
        }
        None => generating_sets(&own.projection()),
    };
    let mut best: Option<(usize, BTreeSet<usize>)> = None;
    for set in choices {
        let sub = single.subdiagram(&set)?;
        let sctx = OperatorContext::new(sub.cartan.clone());
        let ud = search::ud_lower_bound(&sctx, &sub.diagram, SearchOptions::default())?.bound;
        if best.as_ref().is_none_or(|b| ud > b.0) {
            best = Some((ud, set));
        }
    }
    let (ud_sub, set) = best.ok_or_else(|| Error::Inconsistent("no generating set".into()))?;
    let bound = m * ty.positive_root_count() - (m - 1) * ud_full - ud_sub;

    let cd = cd_upper_bound_with(&spec, Some(&set), SearchOptions::default())?;
    if cd.bound != bound {
        return Err(Error::Inconsistent(format!(
            "product formula gives {bound}, direct search on {spec} gives {}",
            cd.bound
        )));
    }
    Ok(ProductQuotientBound {
        bound,
        ud_full,
        ud_sub,
        removed: set,
        cd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::parse_diagram;

    fn spec(t: &str, lattice: Lattice) -> GroupSpec {
        GroupSpec::new(parse_diagram(t).unwrap(), lattice).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn generating_sets_presets() {
        let e6 = spec("E6", Lattice::Adjoint).projection();
        assert_eq!(
            generating_sets(&e6),
            vec![set(&[1]), set(&[3]), set(&[5]), set(&[6])]
        );
        let e8 = spec("E8", Lattice::Adjoint).projection();
        assert_eq!(generating_sets(&e8), vec![BTreeSet::new()]);
        let d6 = spec("D6", Lattice::Adjoint).projection();
        let sets = generating_sets(&d6);
        assert!(sets.contains(&set(&[5, 6])));
        assert!(sets.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn substitutions() {
        let e6 = spec("E6", Lattice::Adjoint).projection();
        let s = substitution_for(&e6, &set(&[1])).unwrap();
        assert_eq!(s.z(6, 3), Polynomial::parse("x3 + x1", 6).unwrap());
        assert_eq!(s.z(6, 5), Polynomial::parse("x5 + 2*x1", 6).unwrap());
        assert_eq!(s.z(6, 2), Polynomial::var(6, 2));

        let e7 = spec("E7", Lattice::Adjoint).projection();
        let s = substitution_for(&e7, &set(&[2])).unwrap();
        assert_eq!(s.z(7, 5), Polynomial::parse("x5 + x2", 7).unwrap());
        assert_eq!(s.z(7, 4), Polynomial::var(7, 4));

        let sc = spec("E6", Lattice::SimplyConnected).projection();
        assert!(substitution_for(&sc, &BTreeSet::new()).unwrap().describe().is_empty());
        assert!(substitution_for(&e6, &set(&[2])).is_err());
    }

    #[test]
    fn simply_connected_bounds() {
        for (t, cd) in [("F4", 13), ("G2", 3), ("B3", 3), ("A3", 0), ("D4", 3)] {
            let b = cd_upper_bound(&spec(t, Lattice::SimplyConnected)).unwrap();
            assert_eq!(b.bound, cd, "{t}");
            assert!(b.z_verified);
        }
    }

    #[test]
    fn adjoint_e6_prefers_d5() {
        let b = cd_upper_bound(&spec("E6", Lattice::Adjoint)).unwrap();
        assert_eq!(b.bound, 22);
        assert_eq!(b.removed, set(&[1]));
        assert_eq!(b.subdiagram, "D5");
        assert!(b.z_verified);
        let by_removed: Vec<(Vec<usize>, usize)> = b
            .alternatives
            .iter()
            .map(|a| (a.removed.clone(), a.ud_lower_bound))
            .collect();
        assert_eq!(
            by_removed,
            vec![(vec![1], 14), (vec![3], 11), (vec![5], 11), (vec![6], 14)]
        );
    }

    #[test]
    fn half_spin_and_pgo() {
        for n in [4usize, 6] {
            let hs = cd_upper_bound(&spec(&format!("D{n}"), Lattice::HalfSpin)).unwrap();
            assert_eq!(hs.bound, n * (n - 1) / 2);
            assert!(hs.z_verified);
            let pgo = cd_upper_bound(&spec(&format!("D{n}"), Lattice::Adjoint)).unwrap();
            assert_eq!(pgo.bound, (n - 1) * (n + 2) / 2);
            assert!(pgo.z_verified);
        }
        assert!(GroupSpec::new(parse_diagram("D7").unwrap(), Lattice::HalfSpin).is_err());
    }

    #[test]
    fn product_quotients() {
        for n in 1..=4 {
            for m in 1..=3 {
                let ty = SimpleType::new(Family::A, n).unwrap();
                assert_eq!(product_quotient_bound(ty, m, None).unwrap().bound, n);
            }
        }
        let e6 = SimpleType::new(Family::E, 6).unwrap();
        let b = product_quotient_bound(e6, 2, None).unwrap();
        assert_eq!((b.bound, b.ud_full, b.ud_sub), (39, 19, 14));
        assert!(b.cd.z_verified);
        assert!(product_quotient_bound(e6, 2, Some(&set(&[2]))).is_err());
    }

    #[test]
    fn quotient_never_beats_simply_connected() {
        for t in ["A3", "A5", "B3", "C4", "D4", "D5", "E6", "E7"] {
            let sc = cd_upper_bound(&spec(t, Lattice::SimplyConnected)).unwrap();
            let adj = cd_upper_bound(&spec(t, Lattice::Adjoint)).unwrap();
            assert!(adj.bound >= sc.bound, "{t}");
            assert!(adj.bound <= adj.positive_roots);
        }
    }
}
