//! Seeded randomized checks of the operator identities, the chain theorem,
//! the center presets and the Weyl group enumeration.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::demazure::OperatorContext;
use crate::polynomial::{Exponent, Monomial, Polynomial};
use crate::root_system::{parse_diagram, DynkinDiagram, Family, SimpleType};
use crate::weyl;

pub const MAX_RANK: usize = 4;
pub const MAX_DEGREE: usize = 6;

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const TYPES: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2", "A1+A1",
    "A1+B2", "A2+G2",
];

struct Gen {
    rng: ChaCha8Rng,
    contexts: Vec<(String, OperatorContext)>,
}

impl Gen {
    fn new(seed: u64) -> Self {
        let contexts = TYPES
            .iter()
            .map(|t| {
                let d = parse_diagram(t).expect("fixed type list");
                (t.to_string(), OperatorContext::new(d.cartan()))
            })
            .collect();
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            contexts,
        }
    }

    fn context(&mut self) -> (String, OperatorContext) {
        self.contexts.choose(&mut self.rng).unwrap().clone()
    }

    fn monomial(&mut self, n: usize, degree: usize) -> Monomial {
        let mut exps = vec![0 as Exponent; n];
        for _ in 0..degree {
            exps[self.rng.gen_range(0..n)] += 1;
        }
        Monomial::from_exponents(&exps)
    }

    fn polynomial(&mut self, n: usize, max_degree: usize) -> Polynomial {
        let terms = self.rng.gen_range(1..=4);
        let mut p = Polynomial::zero(n);
        for _ in 0..terms {
            let d = self.rng.gen_range(0..=max_degree);
            let m = self.monomial(n, d);
            p.add_term(m, BigInt::from(self.rng.gen_range(-5i64..=5)));
        }
        p
    }

    fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(1..=n)
    }

    /// A random 1-chain, grown by walking to neighbours `w` of the current
    /// end with `c[w][end] = -1`.
    fn one_chain(&mut self, ctx: &OperatorContext) -> Vec<usize> {
        let cartan = ctx.cartan();
        let n = ctx.nvars();
        let mut chain = vec![self.index(n)];
        let target_len = self.rng.gen_range(1..=n);
        while chain.len() < target_len {
            let end = *chain.last().unwrap();
            let next: Vec<usize> = cartan
                .neighbors(end)
                .filter(|&w| !chain.contains(&w) && cartan.get(w, end) == -1)
                .collect();
            match next.choose(&mut self.rng) {
                Some(&w) => chain.push(w),
                None => break,
            }
        }
        chain
    }
}

fn check(report: &mut PropertyReport, ok: bool, what: impl FnOnce() -> String) {
    report.cases += 1;
    if !ok && report.failures.len() < 10 {
        report.failures.push(what());
    }
}

fn report(name: &'static str) -> PropertyReport {
    PropertyReport {
        name,
        cases: 0,
        failures: Vec::new(),
    }
}

pub fn ddiff_squares_to_zero(seed: u64, cases: usize) -> PropertyReport {
    let mut g = Gen::new(seed);
    let mut r = report("d_i^2 = 0");
    for _ in 0..cases {
        let (t, ctx) = g.context();
        let p = g.polynomial(ctx.nvars(), MAX_DEGREE);
        let i = g.index(ctx.nvars());
        let once = ctx.ddiff(i, &p).unwrap();
        let twice = ctx.ddiff(i, &once).unwrap();
        check(&mut r, twice.is_zero(), || format!("{t}: d{i}d{i}({p}) = {twice}"));
    }
    r
}

pub fn twisted_leibniz(seed: u64, cases: usize) -> PropertyReport {
    let mut g = Gen::new(seed);
    let mut r = report("d_i(pq) = d_i(p) q + s_i(p) d_i(q)");
    for _ in 0..cases {
        let (t, ctx) = g.context();
        let n = ctx.nvars();
        let p = g.polynomial(n, MAX_DEGREE / 2);
        let q = g.polynomial(n, MAX_DEGREE / 2);
        let i = g.index(n);
        let lhs = ctx.ddiff(i, &(&p * &q)).unwrap();
        let rhs = &(&ctx.ddiff(i, &p).unwrap() * &q)
            + &(&ctx.reflect(i, &p).unwrap() * &ctx.ddiff(i, &q).unwrap());
        check(&mut r, lhs == rhs, || format!("{t}: i={i}, p={p}, q={q}"));
    }
    r
}

/// Both alternating words of length `m` for the rank 2 types, on random
/// polynomials.
pub fn braid_relations(seed: u64, cases: usize) -> PropertyReport {
    let mut g = Gen::new(seed);
    let mut r = report("braid relations on A2, B2, G2");
    let rank2: Vec<(&str, usize, OperatorContext)> = [("A2", 3), ("B2", 4), ("G2", 6)]
        .into_iter()
        .map(|(t, m)| (t, m, OperatorContext::new(parse_diagram(t).unwrap().cartan())))
        .collect();
    for k in 0..cases {
        let (t, m, ctx) = &rank2[k % rank2.len()];
        let w1: Vec<usize> = (0..*m).map(|s| 1 + s % 2).collect();
        let w2: Vec<usize> = (0..*m).map(|s| 2 - s % 2).collect();
        let p = g.polynomial(2, MAX_DEGREE);
        let a = ctx.apply_word(&w1, &p).unwrap();
        let b = ctx.apply_word(&w2, &p).unwrap();
        check(&mut r, a == b, || format!("{t}: {w1:?} vs {w2:?} on {p}"));
    }
    r
}

pub fn division_agrees(seed: u64, cases: usize) -> PropertyReport {
    let mut g = Gen::new(seed);
    let mut r = report("closed form = exact division");
    for _ in 0..cases {
        let (t, ctx) = g.context();
        let p = g.polynomial(ctx.nvars(), MAX_DEGREE);
        let i = g.index(ctx.nvars());
        let a = ctx.ddiff(i, &p).unwrap();
        let b = ctx.ddiff_by_division(i, &p);
        check(&mut r, b.as_ref() == Ok(&a), || format!("{t}: i={i}, p={p}"));
    }
    r
}

/// `d_i(x_i^e)` three ways: the operator, the sum formula, and the
/// recursion `d_i(x_i^e) = x_i^{e-1} + y_i d_i(x_i^{e-1})`.
pub fn power_formula(seed: u64, cases: usize) -> PropertyReport {
    let mut g = Gen::new(seed);
    let mut r = report("d_i(x_i^e) = sum x_i^{m-1} y_i^{e-m}");
    for _ in 0..cases {
        let (t, ctx) = g.context();
        let n = ctx.nvars();
        let i = g.index(n);
        let e = g.rng.gen_range(1..=MAX_DEGREE);
        let x = Polynomial::var(n, i);
        let y = ctx.y(i).clone();
        let mut sum = Polynomial::zero(n);
        for m in 1..=e {
            sum = &sum + &(&x.pow(m as u32 - 1) * &y.pow((e - m) as u32));
        }
        let mut rec = Polynomial::one(n);
        for k in 2..=e {
            rec = &x.pow(k as u32 - 1) + &(&y * &rec);
        }
        let op = ctx.ddiff(i, &x.pow(e as u32)).unwrap();
        check(&mut r, op == sum && op == rec, || format!("{t}: i={i}, e={e}"));
    }
    r
}

/// On a 1-chain `(i_1..i_k)` and a monomial `p` coprime to it:
/// `d_{i_1}..d_{i_k}(x_{i_k}^e p)` is 0 for `e < k` and `p` for `e = k`.
pub fn one_chain_theorem(seed: u64, cases: usize) -> PropertyReport {
    let mut g = Gen::new(seed);
    let mut r = report("1-chain theorem (i) and (ii)");
    for _ in 0..cases {
        let (t, ctx) = g.context();
        let n = ctx.nvars();
        let chain = g.one_chain(&ctx);
        let k = chain.len();
        let free: Vec<usize> = (1..=n).filter(|v| !chain.contains(v)).collect();
        let mut p = Monomial::one(n);
        if !free.is_empty() {
            for _ in 0..g.rng.gen_range(0..=MAX_DEGREE - k.min(MAX_DEGREE)) {
                let v = *free.choose(&mut g.rng).unwrap();
                p.set_exp(v, p.exp(v) + 1);
            }
        }
        let target = chain[k - 1];
        let e = g.rng.gen_range(0..=k);
        let input = Polynomial::from_monomial(p.mul(&Monomial::power(n, target, e as Exponent)));
        let out = ctx.apply_word(&chain, &input).unwrap();
        let expected = if e < k {
            Polynomial::zero(n)
        } else {
            Polynomial::from_monomial(p.clone())
        };
        check(&mut r, out == expected, || {
            format!("{t}: chain {chain:?}, e={e}, p={p}: got {out}")
        });
    }
    r
}

fn types_up_to(max_rank: usize) -> Vec<SimpleType> {
    let mut v = Vec::new();
    for n in 1..=max_rank {
        for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if let Ok(t) = SimpleType::new(f, n) {
                v.push(t);
            }
        }
    }
    v
}

pub fn center_presets() -> PropertyReport {
    let mut r = report("pi(alpha_i) = 0 and images generate");
    for t in types_up_to(9) {
        let d = DynkinDiagram::simple(t);
        let c = d.center().unwrap();
        check(&mut r, c.kills_roots(&d.cartan()) && c.images_generate(), || {
            t.to_string()
        });
    }
    r
}

pub fn weyl_counts() -> PropertyReport {
    let mut r = report("Weyl group orders and longest elements");
    let mut list = types_up_to(MAX_RANK);
    list.push(SimpleType::new(Family::F, 4).unwrap());
    list.dedup();
    for t in list {
        let d = DynkinDiagram::simple(t);
        let ctx = OperatorContext::new(d.cartan());
        let g = weyl::enumerate(&ctx, None, weyl::DEFAULT_GROUP_CAP).unwrap();
        let longest = g.longest().map(|w| w.length);
        check(
            &mut r,
            g.len() as u128 == t.weyl_order() && longest == Some(t.positive_root_count()),
            || format!("{t}: {} elements, longest {longest:?}", g.len()),
        );
    }
    for (t, order) in [("C3", 48), ("F4", 1152)] {
        let ctx = OperatorContext::new(parse_diagram(t).unwrap().cartan());
        let g = weyl::enumerate(&ctx, None, weyl::DEFAULT_GROUP_CAP).unwrap();
        check(&mut r, g.len() == order, || format!("|W({t})| = {}", g.len()));
    }
    r
}

pub fn run_all(seed: u64, cases: usize) -> Vec<PropertyReport> {
    vec![
        ddiff_squares_to_zero(seed, cases),
        twisted_leibniz(seed, cases),
        braid_relations(seed, cases),
        division_agrees(seed, cases),
        power_formula(seed, cases),
        one_chain_theorem(seed, cases),
        center_presets(),
        weyl_counts(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        for r in run_all(7, 40) {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }
}
