//! Simple reflections and divided-difference operators on `Z[x_1..x_n]`.
//!
//! `s_i` fixes `x_j` for `j != i` and sends `x_i` to `y_i = x_i - alpha_i`.
//! The operator `d_i(p) = (p - s_i p) / alpha_i` is evaluated without division:
//! writing a term as `x_i^e q` with `q` free of `x_i`,
//!
//! ```text
//! d_i(x_i^e q) = (x_i^{e-1} + x_i^{e-2} y_i + ... + y_i^{e-1}) q
//! ```
//!
//! The quotient form is kept in [`OperatorContext::ddiff_by_division`] as an
//! independent cross-check.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polynomial::{Exponent, Monomial, Polynomial};
use crate::root_system::CartanMatrix;
use crate::weyl::WeylElement;

pub struct OperatorContext {
    cartan: CartanMatrix,
    n: usize,
    alpha: Vec<Polynomial>,
    y: Vec<Polynomial>,
    // per vertex: y_i^k and the closed-form sums S_e
    y_powers: Vec<RwLock<Vec<Polynomial>>>,
    sums: Vec<RwLock<Vec<Polynomial>>>,
}

impl std::fmt::Debug for OperatorContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OperatorContext")
            .field("n", &self.n)
            .field("cartan", &self.cartan)
            .finish()
    }
}

impl Clone for OperatorContext {
    fn clone(&self) -> Self {
        Self::new(self.cartan.clone())
    }
}

impl OperatorContext {
    pub fn new(cartan: CartanMatrix) -> Self {
        let n = cartan.size();
        let alpha: Vec<Polynomial> = (1..=n).map(|i| Polynomial::linear(cartan.row(i))).collect();
        let y: Vec<Polynomial> = (1..=n)
            .map(|i| &Polynomial::var(n, i) - &alpha[i - 1])
            .collect();
        Self {
            n,
            alpha,
            y_powers: (0..n)
                .map(|_| RwLock::new(vec![Polynomial::one(n)]))
                .collect(),
            sums: (0..n)
                .map(|_| RwLock::new(vec![Polynomial::zero(n)]))
                .collect(),
            y,
            cartan,
        }
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// `alpha_i = sum_j c[i][j] x_j`.
    pub fn alpha(&self, i: usize) -> &Polynomial {
        &self.alpha[i - 1]
    }

    /// `y_i = x_i - alpha_i`.
    pub fn y(&self, i: usize) -> &Polynomial {
        &self.y[i - 1]
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn y_power(&self, i: usize, k: usize) -> Polynomial {
        let cache = &self.y_powers[i - 1];
        if let Some(p) = cache.read().unwrap().get(k) {
            return p.clone();
        }
        let mut w = cache.write().unwrap();
        while w.len() <= k {
            let next = w.last().unwrap() * &self.y[i - 1];
            w.push(next);
        }
        w[k].clone()
    }

    /// `S_e = sum_{m=1}^{e} x_i^{m-1} y_i^{e-m}`, with `S_0 = 0`.
    fn power_sum(&self, i: usize, e: usize) -> Polynomial {
        let cache = &self.sums[i - 1];
        if let Some(p) = cache.read().unwrap().get(e) {
            return p.clone();
        }
        let mut built = Vec::new();
        let have = cache.read().unwrap().len();
        for k in have..=e {
            let mut s = Polynomial::zero(self.n);
            for m in 1..=k {
                let xp = Monomial::power(self.n, i, (m - 1) as Exponent);
                s.add_scaled_shifted(&self.y_power(i, k - m), &BigInt::from(1), &xp);
            }
            built.push(s);
        }
        let mut w = cache.write().unwrap();
        for (k, s) in (have..=e).zip(built) {
            if w.len() == k {
                w.push(s);
            }
        }
        w[e].clone()
    }

    /// The ring endomorphism `s_i`.
    pub fn reflect(&self, i: usize, p: &Polynomial) -> Result<Polynomial> {
        self.check_index(i)?;
        let mut out = Polynomial::zero(self.n);
        for (e, q) in p.collect_in(i) {
            let yp = self.y_power(i, e as usize);
            out.add_assign_ref(&(&yp * &q));
        }
        Ok(out)
    }

    /// Divided difference, closed form.
    pub fn ddiff(&self, i: usize, p: &Polynomial) -> Result<Polynomial> {
        self.check_index(i)?;
        let mut out = Polynomial::zero(self.n);
        for (e, q) in p.collect_in(i) {
            if e == 0 {
                continue;
            }
            let s = self.power_sum(i, e as usize);
            out.add_assign_ref(&(&s * &q));
        }
        Ok(out)
    }

    /// Divided difference as the exact quotient `(p - s_i p) / alpha_i`.
    ///
    /// `alpha_i = 2 x_i + L` with `L` free of `x_i`; long division in `x_i`
    /// must leave no remainder and only even intermediate coefficients.
    pub fn ddiff_by_division(&self, i: usize, p: &Polynomial) -> Result<Polynomial> {
        self.check_index(i)?;
        let numerator = p - &self.reflect(i, p)?;
        if numerator.is_zero() {
            return Ok(numerator);
        }
        let lead = self.cartan.get(i, i);
        debug_assert_eq!(lead, 2);
        let mut rest = self.alpha[i - 1].clone();
        rest.add_term(Monomial::power(self.n, i, 1), BigInt::from(-lead));

        let mut slices = numerator.collect_in(i);
        let top = *slices.keys().next_back().unwrap() as usize;
        let mut quotient = vec![Polynomial::zero(self.n); top];
        let take = |slices: &mut std::collections::BTreeMap<Exponent, Polynomial>, k: usize| {
            slices
                .remove(&(k as Exponent))
                .unwrap_or_else(|| Polynomial::zero(self.n))
        };
        let halve = |q: Polynomial| -> Result<Polynomial> {
            let mut out = Polynomial::zero(self.n);
            for (m, c) in q.into_terms() {
                let (h, r) = c.div_rem(&BigInt::from(lead));
                if !r.is_zero() {
                    return Err(Error::Inconsistent(format!(
                        "non-integral quotient dividing by alpha_{i}"
                    )));
                }
                out.add_term(m, h);
            }
            Ok(out)
        };
        for k in (1..=top).rev() {
            let mut coeff = take(&mut slices, k);
            if k < top {
                coeff = &coeff - &(&rest * &quotient[k]);
            }
            quotient[k - 1] = halve(coeff)?;
        }
        let remainder = &take(&mut slices, 0) - &(&rest * &quotient[0]);
        if !remainder.is_zero() {
            return Err(Error::Inconsistent(format!(
                "nonzero remainder dividing by alpha_{i}"
            )));
        }
        let mut out = Polynomial::zero(self.n);
        for (k, q) in quotient.iter().enumerate() {
            out.add_scaled_shifted(q, &BigInt::from(1), &Monomial::power(self.n, i, k as Exponent));
        }
        Ok(out)
    }

    /// `d_{i_1} ... d_{i_l}(p)`: the rightmost letter acts first.
    pub fn apply_word(&self, word: &[usize], p: &Polynomial) -> Result<Polynomial> {
        for &i in word {
            self.check_index(i)?;
        }
        let mut cur = p.clone();
        for &i in word.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.ddiff(i, &cur)?;
        }
        Ok(cur)
    }

    /// Apply `s_{i_1} ... s_{i_l}` (rightmost first).
    pub fn reflect_word(&self, word: &[usize], p: &Polynomial) -> Result<Polynomial> {
        let mut cur = p.clone();
        for &i in word.iter().rev() {
            cur = self.reflect(i, &cur)?;
        }
        Ok(cur)
    }

    /// Coefficients of `c(p)` in the Schubert basis on the given elements:
    /// `epsilon(d_w p)` for each `w`.
    pub fn schubert_expand(
        &self,
        p: &Polynomial,
        elements: &[WeylElement],
    ) -> Result<Vec<(WeylElement, BigInt)>> {
        let degree = if p.is_zero() {
            None
        } else {
            Some(p.homogeneous_degree().ok_or(Error::Inhomogeneous)?)
        };
        for w in elements {
            if let Some(d) = degree {
                if w.length != d {
                    return Err(Error::LengthMismatch {
                        length: w.length,
                        degree: d,
                    });
                }
            }
        }
        elements
            .par_iter()
            .map(|w| {
                let r = self.apply_word(&w.word, p)?;
                Ok((w.clone(), r.constant_term()))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{DynkinDiagram, SimpleType};

    fn ctx(t: &str) -> OperatorContext {
        OperatorContext::new(DynkinDiagram::simple(t.parse::<SimpleType>().unwrap()).cartan())
    }

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn c3_reflection_of_x3() {
        let c = ctx("C3");
        assert_eq!(c.reflect(3, &p("x3", 3)).unwrap(), p("2*x2 - x3", 3));
        assert_eq!(c.reflect(1, &p("x3", 3)).unwrap(), p("x3", 3));
        assert_eq!(c.y(2), &p("x1 - x2 + x3", 3));
    }

    #[test]
    fn ddiff_basics() {
        let c = ctx("C3");
        for i in 1..=3 {
            for j in 1..=3 {
                let d = c.ddiff(i, &Polynomial::var(3, j)).unwrap();
                assert_eq!(d, Polynomial::constant(3, i64::from(i == j)));
            }
            let sq = c.ddiff(i, &Polynomial::var(3, i).pow(2)).unwrap();
            assert_eq!(sq, &Polynomial::var(3, i) + c.y(i));
        }
        assert!(c.ddiff(3, &p("x3", 3)).unwrap().is_one());
        assert!(c.ddiff(2, &Polynomial::constant(3, 7)).unwrap().is_zero());
    }

    #[test]
    fn division_matches_closed_form_on_cubes() {
        let c = ctx("C3");
        let x2 = Polynomial::var(3, 2);
        let y2 = c.y(2).clone();
        let expected = &(&(&x2 * &x2) + &(&x2 * &y2)) + &(&y2 * &y2);
        assert_eq!(c.ddiff_by_division(2, &x2.pow(3)).unwrap(), expected);
        assert_eq!(c.ddiff(2, &x2.pow(3)).unwrap(), expected);
        assert!(c
            .ddiff_by_division(1, &Polynomial::constant(3, 5))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn words_of_the_c3_example() {
        let c = ctx("C3");
        assert!(c.apply_word(&[2, 3, 2], &p("x2^3", 3)).unwrap().is_one());
        assert!(c
            .apply_word(&[1, 2, 3, 2, 1], &p("x1^5", 3))
            .unwrap()
            .is_one());
        assert!(c
            .apply_word(&[1, 2, 3, 2, 1, 2, 3, 2, 3], &p("x1^5*x2^3*x3", 3))
            .unwrap()
            .is_one());
        assert!(c.apply_word(&[2, 2], &p("x2^2*x1", 3)).unwrap().is_zero());
        assert_eq!(c.apply_word(&[], &p("x1", 3)).unwrap(), p("x1", 3));
    }

    #[test]
    fn index_errors() {
        let c = ctx("A2");
        assert!(matches!(
            c.ddiff(3, &Polynomial::one(2)),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        ));
        assert!(c.reflect(0, &Polynomial::one(2)).is_err());
        assert!(c.apply_word(&[1, 5], &Polynomial::one(2)).is_err());
    }
}
