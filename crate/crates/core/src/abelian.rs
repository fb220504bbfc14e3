//! Finite abelian groups presented as products of cyclic factors.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

/// `Z/o_1 x ... x Z/o_k`. The empty product is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub orders: Vec<u64>,
}

pub type Element = Vec<u64>;

impl AbelianGroup {
    pub fn new(orders: Vec<u64>) -> Self {
        assert!(orders.iter().all(|&o| o >= 1), "cyclic factor of order 0");
        Self { orders }
    }

    pub fn trivial() -> Self {
        Self { orders: Vec::new() }
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn zero(&self) -> Element {
        vec![0; self.orders.len()]
    }

    pub fn reduce(&self, raw: &[i64]) -> Element {
        raw.iter()
            .zip(&self.orders)
            .map(|(&v, &o)| v.rem_euclid(o as i64) as u64)
            .collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Element {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((&x, &y), &o)| (x + y) % o)
            .collect()
    }

    pub fn scale(&self, a: &[u64], k: i64) -> Element {
        a.iter()
            .zip(&self.orders)
            .map(|(&x, &o)| ((x as i64 * k).rem_euclid(o as i64)) as u64)
            .collect()
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// Order of the subgroup generated by `gens`.
    pub fn span_order(&self, gens: &[Element]) -> u64 {
        let mut seen: BTreeSet<Element> = BTreeSet::new();
        let mut frontier = vec![self.zero()];
        seen.insert(self.zero());
        while let Some(g) = frontier.pop() {
            for h in gens {
                let s = self.add(&g, h);
                if seen.insert(s.clone()) {
                    frontier.push(s);
                }
            }
        }
        seen.len() as u64
    }

    pub fn generated_by(&self, gens: &[Element]) -> bool {
        self.span_order(gens) == self.order()
    }

    /// Number of prime factors of the order, with multiplicity. Bounds the
    /// size of any irredundant generating set.
    pub fn prime_length(&self) -> usize {
        let mut n = self.order();
        let mut count = 0;
        let mut p = 2;
        while p * p <= n {
            while n.is_multiple_of(p) {
                n /= p;
                count += 1;
            }
            p += 1;
        }
        if n > 1 {
            count += 1;
        }
        count
    }

    /// Every element, in lexicographic order.
    pub fn elements(&self) -> Vec<Element> {
        let mut out = vec![Vec::new()];
        for &o in &self.orders {
            out = out
                .into_iter()
                .flat_map(|prefix: Element| {
                    (0..o).map(move |v| {
                        let mut e = prefix.clone();
                        e.push(v);
                        e
                    })
                })
                .collect();
        }
        out
    }

    pub fn format_element(&self, a: &[u64]) -> String {
        match a.len() {
            0 => "0".to_string(),
            1 => a[0].to_string(),
            _ => format!(
                "({})",
                a.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            ),
        }
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.orders.iter().map(|o| format!("Z/{o}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four_needs_two_generators() {
        let g = AbelianGroup::new(vec![2, 2]);
        assert!(!g.generated_by(&[vec![1, 1]]));
        assert!(g.generated_by(&[vec![1, 0], vec![1, 1]]));
        assert_eq!(g.prime_length(), 2);
    }

    #[test]
    fn cyclic_span() {
        let g = AbelianGroup::new(vec![6]);
        assert_eq!(g.span_order(&[vec![2]]), 3);
        assert_eq!(g.span_order(&[vec![2], vec![3]]), 6);
        assert_eq!(g.elements().len(), 6);
    }

    #[test]
    fn trivial_group() {
        let g = AbelianGroup::trivial();
        assert!(g.is_trivial());
        assert!(g.generated_by(&[]));
        assert_eq!(g.prime_length(), 0);
    }
}
