//! Lower bounds for the unimodular degree.
//!
//! A bound is always backed by a [`Certificate`]: a monic monomial `p` and a
//! word `w` with `d_w(p) = 1`. Certificates are assembled from steps. A
//! one-chain step `(i_1, ..., i_k)` strips `x_{i_k}^k` from any monomial
//! coprime to the chain; a C-type step walks single bonds up to a double
//! bond and back, stripping `x_{v_1}^{2m-1}`. C-type steps are only accepted
//! after their identity has been checked by direct computation.

use std::cell::RefCell;
use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::demazure::OperatorContext;
use crate::error::{Error, Result};
use crate::polynomial::{Exponent, Monomial, Polynomial};
use crate::root_system::{CartanMatrix, Component, DynkinDiagram, Family};
use crate::weyl;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    OneChain,
    CType,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub kind: StepKind,
    pub path: Vec<usize>,
    pub target: usize,
    pub exponent: usize,
    pub word: Vec<usize>,
}

impl Step {
    pub fn one_chain(cartan: &CartanMatrix, path: Vec<usize>) -> Result<Step> {
        if !cartan.is_one_chain(&path) {
            return Err(Error::MalformedCertificate(format!(
                "{path:?} is not a 1-chain"
            )));
        }
        Ok(Step {
            kind: StepKind::OneChain,
            target: *path.last().unwrap(),
            exponent: path.len(),
            word: path.clone(),
            path,
        })
    }

    /// Single bonds along `v_1..v_{m-1}`, then a double bond with `v_m` long.
    pub fn c_type(cartan: &CartanMatrix, path: Vec<usize>) -> Result<Step> {
        if !is_c_type_path(cartan, &path) {
            return Err(Error::MalformedCertificate(format!(
                "{path:?} is not a C-type path"
            )));
        }
        let m = path.len();
        let mut word = path.clone();
        word.extend(path[..m - 1].iter().rev());
        Ok(Step {
            kind: StepKind::CType,
            target: path[0],
            exponent: 2 * m - 1,
            word,
            path,
        })
    }

    pub fn factor(&self, nvars: usize) -> Monomial {
        Monomial::power(nvars, self.target, self.exponent as Exponent)
    }

    pub fn relabel(&self, map: &[usize]) -> Step {
        let f = |v: &usize| map[*v - 1];
        Step {
            kind: self.kind,
            path: self.path.iter().map(f).collect(),
            target: f(&self.target),
            exponent: self.exponent,
            word: self.word.iter().map(f).collect(),
        }
    }
}

pub fn is_c_type_path(cartan: &CartanMatrix, path: &[usize]) -> bool {
    let m = path.len();
    if m < 2 || path.iter().any(|&v| v == 0 || v > cartan.size()) {
        return false;
    }
    let distinct: BTreeSet<_> = path.iter().collect();
    if distinct.len() != m {
        return false;
    }
    let singles = path[..m - 1]
        .windows(2)
        .all(|w| cartan.is_single_bond(w[0], w[1]));
    let (a, b) = (path[m - 2], path[m - 1]);
    singles && cartan.get(b, a) == -2 && cartan.get(a, b) == -1
}

/// `steps` are stored in application order: `steps[0]` acts first, so its
/// word sits rightmost in `word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub monomial: Monomial,
    pub word: Vec<usize>,
    pub steps: Vec<Step>,
    pub degree: usize,
}

impl Certificate {
    pub fn empty(nvars: usize) -> Self {
        Self {
            monomial: Monomial::one(nvars),
            word: Vec::new(),
            steps: Vec::new(),
            degree: 0,
        }
    }

    pub fn from_steps(nvars: usize, steps: Vec<Step>) -> Self {
        let mut monomial = Monomial::one(nvars);
        let mut word = Vec::new();
        for s in steps.iter().rev() {
            monomial = monomial.mul(&s.factor(nvars));
            word.extend(&s.word);
        }
        Self {
            degree: monomial.degree(),
            monomial,
            word,
            steps,
        }
    }

    /// A bare (monomial, word) pair with no step decomposition.
    pub fn from_word(monomial: Monomial, word: Vec<usize>) -> Self {
        Self {
            degree: monomial.degree(),
            monomial,
            word,
            steps: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.monomial.nvars()
    }

    pub fn check_well_formed(&self) -> Result<()> {
        if self.degree != self.monomial.degree() || self.degree != self.word.len() {
            return Err(Error::MalformedCertificate(format!(
                "degree {} vs monomial degree {} vs word length {}",
                self.degree,
                self.monomial.degree(),
                self.word.len()
            )));
        }
        if !self.steps.is_empty() {
            let rebuilt = Certificate::from_steps(self.nvars(), self.steps.clone());
            if rebuilt.word != self.word || rebuilt.monomial != self.monomial {
                return Err(Error::MalformedCertificate(
                    "steps do not assemble to the stated monomial and word".into(),
                ));
            }
        }
        Ok(())
    }

    /// Move to a ring with `nvars` variables; vertex `k` becomes `map[k - 1]`.
    pub fn relabel(&self, nvars: usize, map: &[usize]) -> Certificate {
        let mut monomial = Monomial::one(nvars);
        for (v, e) in self.monomial.factors() {
            monomial.set_exp(map[v - 1], e);
        }
        Certificate {
            monomial,
            word: self.word.iter().map(|v| map[v - 1]).collect(),
            steps: self.steps.iter().map(|s| s.relabel(map)).collect(),
            degree: self.degree,
        }
    }

    /// Certificates on disjoint vertex sets; earlier parts act first.
    pub fn concat(nvars: usize, parts: &[Certificate]) -> Certificate {
        if parts.iter().all(|p| !p.steps.is_empty() || p.degree == 0) {
            let steps = parts.iter().flat_map(|p| p.steps.iter().cloned()).collect();
            return Certificate::from_steps(nvars, steps);
        }
        let mut monomial = Monomial::one(nvars);
        let mut word = Vec::new();
        for p in parts.iter().rev() {
            monomial = monomial.mul(&p.monomial);
            word.extend(&p.word);
        }
        Certificate::from_word(monomial, word)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    /// Step index, or letter index for certificates without steps.
    pub index: usize,
    pub applied: Vec<usize>,
    pub after: Polynomial,
    /// For step traces: the result is exactly the monomial with this and all
    /// earlier factors removed.
    pub stripped: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    pub result: Polynomial,
    pub trace: Vec<TraceEntry>,
}

impl Verification {
    pub fn steps_strip_cleanly(&self) -> bool {
        self.trace.iter().all(|t| t.stripped != Some(false))
    }
}

pub fn verify_certificate(ctx: &OperatorContext, cert: &Certificate) -> Result<Verification> {
    cert.check_well_formed()?;
    let n = ctx.nvars();
    if cert.nvars() != n {
        return Err(Error::MalformedCertificate(format!(
            "certificate has {} variables, context has {n}",
            cert.nvars()
        )));
    }
    let mut cur = Polynomial::from_monomial(cert.monomial.clone());
    let mut trace = Vec::new();
    if cert.steps.is_empty() {
        for (k, &i) in cert.word.iter().rev().enumerate() {
            cur = ctx.ddiff(i, &cur)?;
            trace.push(TraceEntry {
                index: k,
                applied: vec![i],
                after: cur.clone(),
                stripped: None,
            });
        }
    } else {
        let mut remaining = cert.monomial.clone();
        for (k, step) in cert.steps.iter().enumerate() {
            cur = ctx.apply_word(&step.word, &cur)?;
            let f = step.factor(n);
            let stripped = if f.divides(&remaining) {
                remaining = f.quotient_of(&remaining);
                cur == Polynomial::from_monomial(remaining.clone())
            } else {
                false
            };
            trace.push(TraceEntry {
                index: k,
                applied: step.word.clone(),
                after: cur.clone(),
                stripped: Some(stripped),
            });
        }
    }
    Ok(Verification {
        valid: cur.is_one(),
        result: cur,
        trace,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub allow_ctype: bool,
    /// Components up to this rank get an exhaustive search over processing
    /// orders; larger ones only over leaf-peeling orders.
    pub exhaustive_rank_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            allow_ctype: true,
            exhaustive_rank_cap: 8,
        }
    }
}

type Mask = u128;

#[derive(Clone, Debug)]
struct Plan {
    degree: usize,
    /// Distinct first vertices of step paths, over the whole plan.
    origins: usize,
    /// Exponents by position in the component's sorted vertex list.
    exps: Vec<usize>,
    choice: Option<(usize, Step)>,
}

impl Plan {
    /// Higher degree, then fewer origins, then the lex-largest exponents.
    fn better_than(&self, other: &Plan) -> bool {
        (self.degree, Reverse(self.origins), &self.exps)
            > (other.degree, Reverse(other.origins), &other.exps)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Exhaustive,
    Peeling,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct State {
    unprocessed: Mask,
    /// Origins used so far; left empty when origins are not tracked.
    origins: Mask,
}

/// Step selection for one operator context, with a cache of C-type checks.
pub struct ChainSearch<'a> {
    ctx: &'a OperatorContext,
    allow_ctype: bool,
    ctype_cache: RefCell<HashMap<Vec<usize>, bool>>,
}

impl<'a> ChainSearch<'a> {
    pub fn new(ctx: &'a OperatorContext, allow_ctype: bool) -> Self {
        Self {
            ctx,
            allow_ctype,
            ctype_cache: RefCell::new(HashMap::new()),
        }
    }

    /// Direct check of `d_word(x_{v_1}^{2m-1}) = 1`.
    pub fn ctype_holds(&self, step: &Step) -> bool {
        if let Some(&ok) = self.ctype_cache.borrow().get(&step.path) {
            return ok;
        }
        let p = Polynomial::from_monomial(step.factor(self.ctx.nvars()));
        let ok = self
            .ctx
            .apply_word(&step.word, &p)
            .map(|r| r.is_one())
            .unwrap_or(false);
        self.ctype_cache.borrow_mut().insert(step.path.clone(), ok);
        ok
    }

    /// Parent pointers of a BFS rooted at `root` inside `allowed`.
    fn bfs_parents(&self, root: usize, allowed: &BTreeSet<usize>) -> HashMap<usize, usize> {
        let cartan = self.ctx.cartan();
        let mut parent = HashMap::from([(root, root)]);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in cartan.neighbors(v) {
                if allowed.contains(&w) && !parent.contains_key(&w) {
                    parent.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Every admissible step for `target` using only `unprocessed` vertices.
    pub fn candidate_steps(&self, target: usize, unprocessed: &BTreeSet<usize>) -> Vec<Step> {
        let cartan = self.ctx.cartan();
        let parent = self.bfs_parents(target, unprocessed);
        let mut out = Vec::new();
        for &start in unprocessed {
            if !parent.contains_key(&start) {
                continue;
            }
            let mut path = vec![start];
            let mut cur = start;
            while cur != target {
                cur = parent[&cur];
                path.push(cur);
            }
            if let Ok(step) = Step::one_chain(cartan, path.clone()) {
                out.push(step);
            }
            if self.allow_ctype {
                path.reverse();
                if let Ok(step) = Step::c_type(cartan, path) {
                    if self.ctype_holds(&step) {
                        out.push(step);
                    }
                }
            }
        }
        out
    }

    /// Maximal exponent; ties prefer one-chains, then the smallest path.
    pub fn longest_admissible_step(&self, target: usize, unprocessed: &BTreeSet<usize>) -> Step {
        self.candidate_steps(target, unprocessed)
            .into_iter()
            .min_by(|a, b| {
                b.exponent
                    .cmp(&a.exponent)
                    .then(a.kind.cmp(&b.kind))
                    .then(a.path.cmp(&b.path))
            })
            .expect("the trivial chain (target) is always admissible")
    }

    fn best_plan(
        &self,
        vertices: &[usize],
        state: State,
        mode: Mode,
        memo: &mut HashMap<State, Plan>,
    ) -> Plan {
        if let Some(p) = memo.get(&state) {
            return p.clone();
        }
        let k = vertices.len();
        let mask = state.unprocessed;
        let unprocessed: BTreeSet<usize> = (0..k)
            .filter(|&t| mask >> t & 1 == 1)
            .map(|t| vertices[t])
            .collect();
        let mut best = Plan {
            degree: 0,
            origins: state.origins.count_ones() as usize,
            exps: vec![0; k],
            choice: None,
        };
        let mut first = true;
        for pos in (0..k).filter(|&t| mask >> t & 1 == 1) {
            let v = vertices[pos];
            if mode == Mode::Peeling {
                let deg = self
                    .ctx
                    .cartan()
                    .neighbors(v)
                    .filter(|w| unprocessed.contains(w))
                    .count();
                if deg > 1 {
                    continue;
                }
            }
            let step = self.longest_admissible_step(v, &unprocessed);
            let mut next = State {
                unprocessed: mask & !(1 << pos),
                origins: 0,
            };
            if mode == Mode::Exhaustive {
                let origin = vertices.binary_search(&step.path[0]).expect("path inside component");
                next.origins = state.origins | 1 << origin;
            }
            let rest = self.best_plan(vertices, next, mode, memo);
            let mut exps = rest.exps;
            exps[pos] = step.exponent;
            let cand = Plan {
                degree: rest.degree + step.exponent,
                origins: rest.origins,
                exps,
                choice: Some((pos, step)),
            };
            if first || cand.better_than(&best) {
                best = cand;
                first = false;
            }
        }
        memo.insert(state, best.clone());
        best
    }

    /// Best processing order for one connected vertex set; returns steps in
    /// processing order (the first step may use every vertex). `exhaustive`
    /// searches all orders, otherwise only orders that peel off leaves.
    pub fn search_component(&self, vertices: &[usize], exhaustive: bool) -> Vec<Step> {
        assert!(vertices.len() <= 128, "component too large");
        let mode = if exhaustive { Mode::Exhaustive } else { Mode::Peeling };
        let mut memo = HashMap::new();
        let mut state = State {
            unprocessed: if vertices.len() == 128 {
                Mask::MAX
            } else {
                (1 << vertices.len()) - 1
            },
            origins: 0,
        };
        let mut steps = Vec::new();
        while state.unprocessed != 0 {
            let plan = self.best_plan(vertices, state, mode, &mut memo);
            let (pos, step) = plan.choice.expect("nonempty mask has a choice");
            state.unprocessed &= !(1 << pos);
            if mode == Mode::Exhaustive {
                let origin = vertices.binary_search(&step.path[0]).unwrap();
                state.origins |= 1 << origin;
            }
            steps.push(step);
        }
        steps
    }

    /// All processing orders with all admissible step choices; only for
    /// tiny ranks.
    pub fn brute_force_orders(&self, vertices: &[usize]) -> usize {
        fn go(s: &ChainSearch, left: &BTreeSet<usize>) -> usize {
            let mut best = 0;
            for &t in left {
                let mut rest = left.clone();
                rest.remove(&t);
                let sub = go(s, &rest);
                for step in s.candidate_steps(t, left) {
                    best = best.max(step.exponent + sub);
                }
            }
            best
        }
        go(self, &vertices.iter().copied().collect())
    }
}

fn certificate_for(ctx: &OperatorContext, selection_order: Vec<Step>) -> Certificate {
    let mut steps = selection_order;
    steps.reverse();
    Certificate::from_steps(ctx.nvars(), steps)
}

fn ensure_verified(ctx: &OperatorContext, cert: &Certificate) -> Result<()> {
    let v = verify_certificate(ctx, cert)?;
    if !v.valid {
        return Err(Error::Inconsistent(format!(
            "assembled certificate {} / {:?} does not verify (result {})",
            cert.monomial, cert.word, v.result
        )));
    }
    Ok(())
}

/// Best chain certificate, searched per component and concatenated.
pub fn chain_method_bound(
    ctx: &OperatorContext,
    diagram: &DynkinDiagram,
    options: SearchOptions,
) -> Result<Certificate> {
    let search = ChainSearch::new(ctx, options.allow_ctype);
    let mut parts = Vec::new();
    for comp in &diagram.components {
        let mut vertices = comp.vertices.clone();
        vertices.sort_unstable();
        let exhaustive = vertices.len() <= options.exhaustive_rank_cap;
        let steps = search.search_component(&vertices, exhaustive);
        parts.push(certificate_for(ctx, steps));
    }
    let cert = Certificate::concat(ctx.nvars(), &parts);
    ensure_verified(ctx, &cert)?;
    Ok(cert)
}

/// Heuristic search only (leaf-peeling orders), for comparison.
pub fn chain_method_heuristic(
    ctx: &OperatorContext,
    diagram: &DynkinDiagram,
    allow_ctype: bool,
) -> Result<Certificate> {
    chain_method_bound(
        ctx,
        diagram,
        SearchOptions {
            allow_ctype,
            exhaustive_rank_cap: 0,
        },
    )
}

#[derive(Clone, Debug)]
pub struct CTowerReport {
    /// `(label i, holds)` for i = n down to 1.
    pub checks: Vec<(usize, bool)>,
    pub certificate: Option<Certificate>,
}

impl CTowerReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }
}

/// Tests `d_{i..n-1} d_n d_{n-1..i}(x_i^{2n-2i+1}) = 1` for every `i` on a
/// type C component and, if all hold, assembles the degree `n^2` certificate.
pub fn c_tower_check(ctx: &OperatorContext, comp: &Component) -> Result<CTowerReport> {
    if comp.ty.family != Family::C {
        return Err(Error::InvalidType {
            family: comp.ty.family.letter(),
            rank: comp.ty.rank,
        });
    }
    let n = comp.ty.rank;
    let cartan = ctx.cartan();
    let mut checks = Vec::new();
    let mut steps = Vec::new();
    for i in (1..=n).rev() {
        let path: Vec<usize> = comp.vertices[i - 1..].to_vec();
        let step = if i == n {
            Step::one_chain(cartan, path)?
        } else {
            Step::c_type(cartan, path)?
        };
        let p = Polynomial::from_monomial(step.factor(ctx.nvars()));
        let ok = ctx.apply_word(&step.word, &p)?.is_one();
        checks.push((i, ok));
        steps.push(step);
    }
    let certificate = if checks.iter().all(|c| c.1) {
        let cert = Certificate::from_steps(ctx.nvars(), steps);
        ensure_verified(ctx, &cert)?;
        Some(cert)
    } else {
        None
    };
    Ok(CTowerReport {
        checks,
        certificate,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct BruteForceLimits {
    pub max_degree: Option<usize>,
    pub group_cap: usize,
}

impl Default for BruteForceLimits {
    fn default() -> Self {
        Self {
            max_degree: None,
            group_cap: weyl::DEFAULT_GROUP_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BruteForce {
    pub ud: usize,
    pub witness: Certificate,
}

/// Exponent vectors of total degree `d` in `n` variables, lexicographically
/// descending.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    fn go(n: usize, d: usize, prefix: &mut Vec<Exponent>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d as Exponent);
            out.push(Monomial::from_exponents(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as Exponent);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// Exact unimodular degree by exhaustive search over monomials and Weyl
/// elements of equal length, from the top degree down.
pub fn brute_force_ud(
    ctx: &OperatorContext,
    diagram: &DynkinDiagram,
    limits: BruteForceLimits,
) -> Result<BruteForce> {
    let group = weyl::enumerate(ctx, None, limits.group_cap)?;
    let n = ctx.nvars();
    let top = diagram.positive_root_count();
    let start = limits.max_degree.map_or(top, |m| m.min(top));
    for d in (0..=start).rev() {
        let elements = group.of_length(d);
        let letters: Vec<BTreeSet<usize>> = elements
            .iter()
            .map(|w| w.word.iter().copied().collect())
            .collect();
        let found = monomials_of_degree(n, d).into_par_iter().find_map_first(|m| {
            let support = m.support();
            let p = Polynomial::from_monomial(m.clone());
            elements.iter().zip(&letters).find_map(|(w, ls)| {
                if !support.is_subset(ls) {
                    return None;
                }
                if let Some(&last) = w.word.last() {
                    if !support.contains(&last) {
                        return None;
                    }
                }
                let r = ctx.apply_word(&w.word, &p).ok()?;
                r.is_one()
                    .then(|| Certificate::from_word(m.clone(), w.word.clone()))
            })
        });
        if let Some(witness) = found {
            return Ok(BruteForce { ud: d, witness });
        }
    }
    unreachable!("degree 0 always has the witness (1, identity)")
}

#[derive(Clone, Debug)]
pub struct ComponentBound {
    pub component: Component,
    pub chain_degree: usize,
    pub c_tower: Option<CTowerReport>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug)]
pub struct UdBound {
    pub bound: usize,
    pub certificate: Certificate,
    pub components: Vec<ComponentBound>,
}

/// Best certificate from the chain search (with C-type steps) and, on type C
/// components, the C-type tower.
pub fn ud_lower_bound(
    ctx: &OperatorContext,
    diagram: &DynkinDiagram,
    options: SearchOptions,
) -> Result<UdBound> {
    let mut components = Vec::new();
    for comp in &diagram.components {
        let single = DynkinDiagram {
            rank: diagram.rank,
            components: vec![comp.clone()],
        };
        let chain = chain_method_bound(ctx, &single, options)?;
        let tower = if comp.ty.family == Family::C && options.allow_ctype {
            Some(c_tower_check(ctx, comp)?)
        } else {
            None
        };
        let mut best = chain.clone();
        if let Some(cert) = tower.as_ref().and_then(|t| t.certificate.as_ref()) {
            if cert.degree > best.degree {
                best = cert.clone();
            }
        }
        components.push(ComponentBound {
            component: comp.clone(),
            chain_degree: chain.degree,
            c_tower: tower,
            certificate: best,
        });
    }
    let parts: Vec<Certificate> = components.iter().map(|c| c.certificate.clone()).collect();
    let certificate = Certificate::concat(ctx.nvars(), &parts);
    ensure_verified(ctx, &certificate)?;
    Ok(UdBound {
        bound: certificate.degree,
        certificate,
        components,
    })
}
