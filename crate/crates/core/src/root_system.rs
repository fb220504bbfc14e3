//! Dynkin diagrams and Cartan matrices in Bourbaki numbering.
//!
//! Cartan entries follow the row convention `c[i][j] = <alpha_i, alpha_j^vee>`,
//! so row `i` lists the coordinates of the simple root `alpha_i` in the basis
//! of fundamental weights. A double or triple bond `i => j` (long to short)
//! therefore has `c[i][j] = -2` or `-3` and `c[j][i] = -1`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abelian::AbelianGroup;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidType {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Bonds `(i, j, c[i][j], c[j][i])` with 1-based Bourbaki labels.
    fn bonds(&self) -> Vec<(usize, usize, i64, i64)> {
        let n = self.rank;
        let mut out = Vec::new();
        match self.family {
            Family::A => {
                for i in 1..n {
                    out.push((i, i + 1, -1, -1));
                }
            }
            Family::B => {
                for i in 1..n - 1 {
                    out.push((i, i + 1, -1, -1));
                }
                out.push((n - 1, n, -2, -1));
            }
            Family::C => {
                for i in 1..n - 1 {
                    out.push((i, i + 1, -1, -1));
                }
                out.push((n - 1, n, -1, -2));
            }
            Family::D => {
                for i in 1..n - 1 {
                    out.push((i, i + 1, -1, -1));
                }
                out.push((n - 2, n, -1, -1));
            }
            Family::E => {
                out.push((1, 3, -1, -1));
                out.push((2, 4, -1, -1));
                for i in 3..n {
                    out.push((i, i + 1, -1, -1));
                }
            }
            Family::F => {
                out.push((1, 2, -1, -1));
                out.push((2, 3, -2, -1));
                out.push((3, 4, -1, -1));
            }
            Family::G => out.push((1, 2, -1, -3)),
        }
        out
    }

    /// Bourbaki Cartan matrix, 0-based row-major `rank x rank`.
    pub fn cartan_entries(&self) -> Vec<i64> {
        let n = self.rank;
        let mut c = vec![0i64; n * n];
        for i in 0..n {
            c[i * n + i] = 2;
        }
        for (i, j, cij, cji) in self.bonds() {
            c[(i - 1) * n + (j - 1)] = cij;
            c[(j - 1) * n + (i - 1)] = cji;
        }
        c
    }

    /// Images of the fundamental weights in the character group of the
    /// center of the simply connected group.
    pub fn center(&self) -> CenterData {
        let n = self.rank;
        let (orders, images): (Vec<u64>, Vec<Vec<u64>>) = match self.family {
            Family::A => (vec![n as u64 + 1], (1..=n).map(|i| vec![i as u64]).collect()),
            Family::B => (
                vec![2],
                (1..=n).map(|i| vec![u64::from(i == n)]).collect(),
            ),
            Family::C => (vec![2], (1..=n).map(|i| vec![(i % 2) as u64]).collect()),
            Family::D if n.is_multiple_of(2) => (
                vec![2, 2],
                (1..=n)
                    .map(|i| {
                        if i == n - 1 {
                            vec![1, 0]
                        } else if i == n {
                            vec![0, 1]
                        } else {
                            vec![(i % 2) as u64, (i % 2) as u64]
                        }
                    })
                    .collect(),
            ),
            Family::D => (
                vec![4],
                (1..=n)
                    .map(|i| {
                        if i == n - 1 {
                            vec![1]
                        } else if i == n {
                            vec![3]
                        } else {
                            vec![(2 * i % 4) as u64]
                        }
                    })
                    .collect(),
            ),
            Family::E if n == 6 => (
                vec![3],
                [1, 0, 2, 0, 1, 2].iter().map(|&v| vec![v]).collect(),
            ),
            Family::E if n == 7 => (
                vec![2],
                [0, 1, 0, 0, 1, 0, 1].iter().map(|&v| vec![v]).collect(),
            ),
            Family::E | Family::F | Family::G => (Vec::new(), vec![Vec::new(); n]),
        };
        CenterData {
            group: AbelianGroup::new(orders),
            pi: images,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse {
                position: 0,
                expected: "one of A,B,C,D,E,F,G".into(),
            })?;
        let digits = chars.as_str();
        let rank: usize = digits.parse().map_err(|_| Error::Parse {
            position: 1,
            expected: "rank (positive integer)".into(),
        })?;
        SimpleType::new(family, rank)
    }
}

/// One simple component. `vertices[k]` is the global (1-based) vertex
/// carrying Bourbaki label `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub ty: SimpleType,
    pub vertices: Vec<usize>,
}

impl Component {
    /// Bourbaki label (1-based) of a global vertex, if it belongs here.
    pub fn label_of(&self, vertex: usize) -> Option<usize> {
        self.vertices.iter().position(|&v| v == vertex).map(|k| k + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinDiagram {
    pub rank: usize,
    pub components: Vec<Component>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub multiplicity: u8,
    /// Endpoint carrying the long root when `multiplicity > 1`.
    pub long_end: Option<usize>,
}

impl DynkinDiagram {
    /// Concatenate components, numbering vertices consecutively.
    pub fn from_types(types: &[SimpleType]) -> Self {
        let mut next = 1;
        let components = types
            .iter()
            .map(|&ty| {
                let vertices = (next..next + ty.rank).collect();
                next += ty.rank;
                Component { ty, vertices }
            })
            .collect();
        Self {
            rank: next - 1,
            components,
        }
    }

    pub fn simple(ty: SimpleType) -> Self {
        Self::from_types(&[ty])
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    pub fn positive_root_count(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.ty.positive_root_count())
            .sum()
    }

    pub fn types(&self) -> Vec<SimpleType> {
        self.components.iter().map(|c| c.ty).collect()
    }

    pub fn component_of(&self, vertex: usize) -> Option<&Component> {
        self.components.iter().find(|c| c.vertices.contains(&vertex))
    }

    pub fn cartan(&self) -> CartanMatrix {
        let n = self.rank;
        let mut entries = vec![0i64; n * n];
        for comp in &self.components {
            let local = comp.ty.cartan_entries();
            let r = comp.ty.rank;
            for a in 0..r {
                for b in 0..r {
                    let (i, j) = (comp.vertices[a] - 1, comp.vertices[b] - 1);
                    entries[i * n + j] = local[a * r + b];
                }
            }
        }
        CartanMatrix::from_entries(n, entries).expect("Bourbaki tables are valid Cartan matrices")
    }

    pub fn edges(&self) -> Vec<Edge> {
        let c = self.cartan();
        let mut out = Vec::new();
        for i in 1..=self.rank {
            for j in i + 1..=self.rank {
                let (a, b) = (c.get(i, j), c.get(j, i));
                if a == 0 {
                    continue;
                }
                let multiplicity = (a * b) as u8;
                let long_end = match (a, b) {
                    (-1, -1) => None,
                    (x, _) if x < -1 => Some(i),
                    _ => Some(j),
                };
                out.push(Edge {
                    i,
                    j,
                    multiplicity,
                    long_end,
                });
            }
        }
        out
    }

    /// Character data of the center of the simply connected group.
    /// Only defined for a simple diagram; see [`Self::center_product`].
    pub fn center(&self) -> Result<CenterData> {
        if !self.is_simple() {
            return Err(Error::SemisimpleCenter);
        }
        Ok(self.center_product())
    }

    /// Product of the component centers, indexed by global vertex.
    pub fn center_product(&self) -> CenterData {
        let mut orders = Vec::new();
        let mut offsets = Vec::new();
        let mut local = Vec::new();
        for comp in &self.components {
            let c = comp.ty.center();
            offsets.push(orders.len());
            orders.extend(c.group.orders.iter().copied());
            local.push(c);
        }
        let width = orders.len();
        let mut pi = vec![vec![0u64; width]; self.rank];
        for ((comp, c), &off) in self.components.iter().zip(&local).zip(&offsets) {
            for (k, &v) in comp.vertices.iter().enumerate() {
                for (t, &val) in c.pi[k].iter().enumerate() {
                    pi[v - 1][off + t] = val;
                }
            }
        }
        CenterData {
            group: AbelianGroup::new(orders),
            pi,
        }
    }

    /// Induced diagram on the vertices not in `removed`, renumbered
    /// 1..m in increasing order of the old index.
    pub fn subdiagram(&self, removed: &BTreeSet<usize>) -> Result<SubDiagram> {
        for &v in removed {
            if v == 0 || v > self.rank {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    rank: self.rank,
                });
            }
        }
        let new_to_old: Vec<usize> = (1..=self.rank).filter(|v| !removed.contains(v)).collect();
        let mut old_to_new = vec![None; self.rank + 1];
        for (k, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(k + 1);
        }
        let full = self.cartan();
        let m = new_to_old.len();
        let mut entries = vec![0i64; m * m];
        for a in 0..m {
            for b in 0..m {
                entries[a * m + b] = full.get(new_to_old[a], new_to_old[b]);
            }
        }
        let cartan = CartanMatrix::from_entries(m, entries)?;
        let diagram = classify(&cartan)?;
        debug_assert_eq!(diagram.cartan(), cartan);
        Ok(SubDiagram {
            diagram,
            cartan,
            new_to_old,
            old_to_new,
        })
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.ty.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

#[derive(Clone, Debug)]
pub struct SubDiagram {
    pub diagram: DynkinDiagram,
    pub cartan: CartanMatrix,
    /// `new_to_old[k]` is the old index of new vertex `k + 1`.
    pub new_to_old: Vec<usize>,
    /// Indexed by old vertex (slot 0 unused).
    pub old_to_new: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    /// Validates the generalized Cartan matrix axioms for finite type bonds.
    pub fn from_entries(n: usize, entries: Vec<i64>) -> Result<Self> {
        assert_eq!(entries.len(), n * n);
        for i in 0..n {
            if entries[i * n + i] != 2 {
                return Err(Error::Inconsistent(format!("c[{0}][{0}] != 2", i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (entries[i * n + j], entries[j * n + i]);
                if a > 0 || (a == 0) != (b == 0) || !(0..=3).contains(&(a * b)) {
                    return Err(Error::Inconsistent(format!(
                        "bad off-diagonal pair c[{}][{}]={a}, c[{}][{}]={b}",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(Self { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 1-based access.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[(i - 1) * self.n..i * self.n]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(move |&j| j != i && self.get(i, j) != 0)
    }

    pub fn is_single_bond(&self, i: usize, j: usize) -> bool {
        self.get(i, j) == -1 && self.get(j, i) == -1
    }

    /// Distinct indices with `c[i_{t+1}][i_t] = -1` for each consecutive pair.
    pub fn is_one_chain(&self, seq: &[usize]) -> bool {
        if seq.is_empty() || seq.iter().any(|&v| v == 0 || v > self.n) {
            return false;
        }
        let distinct: BTreeSet<_> = seq.iter().collect();
        distinct.len() == seq.len() && seq.windows(2).all(|w| self.get(w[1], w[0]) == -1)
    }

    /// Unique path from `from` to `to` inside the induced forest on `allowed`.
    pub fn tree_path(&self, from: usize, to: usize, allowed: &BTreeSet<usize>) -> Option<Vec<usize>> {
        if !allowed.contains(&from) || !allowed.contains(&to) {
            return None;
        }
        let mut parent = vec![0usize; self.n + 1];
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([to]);
        seen[to] = true;
        while let Some(v) = queue.pop_front() {
            if v == from {
                let mut path = vec![from];
                let mut cur = from;
                while cur != to {
                    cur = parent[cur];
                    path.push(cur);
                }
                return Some(path);
            }
            for w in self.neighbors(v) {
                if allowed.contains(&w) && !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Connected components of the induced subgraph on `vertices`, each
    /// sorted, ordered by smallest member.
    pub fn components_of(&self, vertices: &BTreeSet<usize>) -> Vec<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if vertices.contains(&w) && seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Character data of the center: the projection `pi` from the weight lattice
/// onto the character group of the center, recorded on fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterData {
    pub group: AbelianGroup,
    /// `pi[v - 1]` is the image of `x_v`.
    pub pi: Vec<Vec<u64>>,
}

impl CenterData {
    /// Image of a weight given by its fundamental-weight coordinates.
    pub fn project(&self, coords: &[i64]) -> Vec<u64> {
        let mut acc = vec![0i64; self.group.orders.len()];
        for (&c, img) in coords.iter().zip(&self.pi) {
            for (a, &v) in acc.iter_mut().zip(img) {
                *a += c * v as i64;
            }
        }
        self.group.reduce(&acc)
    }

    /// The root lattice lies in the kernel.
    pub fn kills_roots(&self, cartan: &CartanMatrix) -> bool {
        (1..=cartan.size()).all(|i| self.group.is_zero(&self.project(cartan.row(i))))
    }

    pub fn images_generate(&self) -> bool {
        self.group.generated_by(&self.pi)
    }
}

/// Identify the Bourbaki type and labelling of every connected component of
/// a Cartan matrix of finite type.
pub fn classify(cartan: &CartanMatrix) -> Result<DynkinDiagram> {
    let all: BTreeSet<usize> = (1..=cartan.size()).collect();
    let mut components = Vec::new();
    for comp in cartan.components_of(&all) {
        components.push(classify_connected(cartan, &comp)?);
    }
    let diagram = DynkinDiagram {
        rank: cartan.size(),
        components,
    };
    if diagram.cartan() != *cartan {
        return Err(Error::Inconsistent(
            "recognised type does not reproduce the Cartan matrix".into(),
        ));
    }
    Ok(diagram)
}

fn not_finite() -> Error {
    Error::Inconsistent("diagram is not of finite type".into())
}

fn walk_arm(cartan: &CartanMatrix, from: usize, first: usize) -> Vec<usize> {
    let mut arm = vec![first];
    let (mut prev, mut cur) = (from, first);
    loop {
        let next: Vec<usize> = cartan.neighbors(cur).filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] => {
                arm.push(*w);
                prev = cur;
                cur = *w;
            }
            _ => return arm,
        }
    }
}

fn classify_connected(cartan: &CartanMatrix, vertices: &[usize]) -> Result<Component> {
    let degree = |v: usize| cartan.neighbors(v).count();
    let k = vertices.len();
    let component = |family, order: Vec<usize>| -> Result<Component> {
        Ok(Component {
            ty: SimpleType::new(family, k)?,
            vertices: order,
        })
    };
    if k == 1 {
        return component(Family::A, vertices.to_vec());
    }
    let branches: Vec<usize> = vertices.iter().copied().filter(|&v| degree(v) >= 3).collect();
    if let Some(&branch) = branches.first() {
        if branches.len() > 1 || degree(branch) > 3 {
            return Err(not_finite());
        }
        let mut arms: Vec<Vec<usize>> = cartan
            .neighbors(branch)
            .map(|w| walk_arm(cartan, branch, w))
            .collect();
        // shortest arms first; ties by the leaf with the smaller index
        arms.sort_by_key(|a| (a.len(), *a.last().unwrap()));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        let leaf_first = |arm: &Vec<usize>| arm.iter().rev().copied().collect::<Vec<_>>();
        return match lens.as_slice() {
            [1, 1, 1] => component(
                Family::D,
                vec![arms[0][0], branch, arms[1][0], arms[2][0]],
            ),
            [1, 1, _] => {
                let mut order = leaf_first(&arms[2]);
                order.push(branch);
                order.push(arms[0][0]);
                order.push(arms[1][0]);
                component(Family::D, order)
            }
            [1, 2, m] if (2..=4).contains(m) => {
                let (short, mid, long) = (&arms[0], &arms[1], &arms[2]);
                // E6 has two arms of length 2; the one with the smaller leaf becomes 1-3.
                let (a13, tail) = if *m == 2 && long.last() < mid.last() {
                    (long, mid)
                } else {
                    (mid, long)
                };
                let mut order = vec![a13[1], short[0], a13[0], branch];
                order.extend(tail.iter().copied());
                component(Family::E, order)
            }
            _ => Err(not_finite()),
        };
    }
    // a path
    let ends: Vec<usize> = vertices.iter().copied().filter(|&v| degree(v) == 1).collect();
    if ends.len() != 2 {
        return Err(not_finite());
    }
    let path = full_path(cartan, ends[0]);
    debug_assert_eq!(path.len(), k);
    let multi: Vec<usize> = (0..k - 1)
        .filter(|&t| !cartan.is_single_bond(path[t], path[t + 1]))
        .collect();
    match multi.as_slice() {
        [] => component(Family::A, path),
        [t] => {
            let (u, v) = (path[*t], path[*t + 1]);
            let product = cartan.get(u, v) * cartan.get(v, u);
            let long = if cartan.get(u, v) < -1 { u } else { v };
            let short = if long == u { v } else { u };
            if product == 3 {
                if k != 2 {
                    return Err(not_finite());
                }
                return component(Family::G, vec![short, long]);
            }
            if k == 2 {
                // keep the original order: long-first reads as B2, short-first as C2
                return if long < short {
                    component(Family::B, vec![long, short])
                } else {
                    component(Family::C, vec![short, long])
                };
            }
            if *t == 0 || *t == k - 2 {
                let oriented = if *t == 0 {
                    path.iter().rev().copied().collect::<Vec<_>>()
                } else {
                    path.clone()
                };
                let end = oriented[k - 1];
                let family = if end == short { Family::B } else { Family::C };
                return component(family, oriented);
            }
            if k == 4 {
                let oriented = if path[1] == long {
                    path.clone()
                } else {
                    path.iter().rev().copied().collect()
                };
                return component(Family::F, oriented);
            }
            Err(not_finite())
        }
        _ => Err(not_finite()),
    }
}

fn full_path(cartan: &CartanMatrix, end: usize) -> Vec<usize> {
    let mut path = vec![end];
    let mut prev = 0;
    let mut cur = end;
    loop {
        let next: Vec<usize> = cartan.neighbors(cur).filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] => {
                path.push(*w);
                prev = cur;
                cur = *w;
            }
            _ => return path,
        }
    }
}

/// Parse `A2+A2`, `E8`, ... into a diagram.
pub fn parse_diagram(text: &str) -> Result<DynkinDiagram> {
    let mut types = Vec::new();
    let mut offset = 0;
    for part in text.split('+') {
        let ty = part.parse::<SimpleType>().map_err(|e| match e {
            Error::Parse { position, expected } => Error::Parse {
                position: offset + position + (part.len() - part.trim_start().len()),
                expected,
            },
            other => other,
        })?;
        types.push(ty);
        offset += part.len() + 1;
    }
    Ok(DynkinDiagram::from_types(&types))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    fn rows(t: &str) -> Vec<Vec<i64>> {
        let c = DynkinDiagram::simple(ty(t)).cartan();
        (1..=c.size()).map(|i| c.row(i).to_vec()).collect()
    }

    #[test]
    fn cartan_a2_c3_f4() {
        assert_eq!(rows("A2"), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(
            rows("C3"),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        assert_eq!(
            rows("F4"),
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
        assert_eq!(rows("G2"), vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn invalid_ranks() {
        for bad in ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3"] {
            assert!(bad.parse::<SimpleType>().is_err(), "{bad}");
        }
        assert!("X3".parse::<SimpleType>().is_err());
    }

    #[test]
    fn positive_roots() {
        assert_eq!(DynkinDiagram::simple(ty("F4")).positive_root_count(), 24);
        assert_eq!(DynkinDiagram::simple(ty("E8")).positive_root_count(), 120);
        assert_eq!(DynkinDiagram::simple(ty("A1")).positive_root_count(), 1);
        let u = parse_diagram("A2+B3").unwrap();
        assert_eq!(u.positive_root_count(), 3 + 9);
    }

    #[test]
    fn one_chains() {
        let c = DynkinDiagram::simple(ty("C3")).cartan();
        assert!(c.is_one_chain(&[3, 2, 1]));
        assert!(!c.is_one_chain(&[1, 2, 3]));
        assert!(c.is_one_chain(&[2]));
        assert!(!c.is_one_chain(&[1, 1]));
        assert!(!c.is_one_chain(&[]));
    }

    #[test]
    fn every_type_is_consistent() {
        for t in all_small_types() {
            let d = DynkinDiagram::simple(t);
            let c = d.cartan();
            let center = d.center().unwrap();
            assert!(center.kills_roots(&c), "{t}: pi(alpha) != 0");
            assert!(center.images_generate(), "{t}: images do not generate");
            let back = classify(&c).unwrap();
            assert_eq!(back.cartan(), c, "{t}");
            if !(t.family == Family::D && t.rank == 3) {
                assert_eq!(back, d, "{t}");
            }
        }
    }

    pub(crate) fn all_small_types() -> Vec<SimpleType> {
        let mut v = Vec::new();
        for n in 1..=8 {
            v.push(SimpleType::new(Family::A, n).unwrap());
        }
        for n in 2..=8 {
            v.push(SimpleType::new(Family::B, n).unwrap());
            v.push(SimpleType::new(Family::C, n).unwrap());
        }
        for n in 3..=9 {
            v.push(SimpleType::new(Family::D, n).unwrap());
        }
        for n in 6..=8 {
            v.push(SimpleType::new(Family::E, n).unwrap());
        }
        v.push(SimpleType::new(Family::F, 4).unwrap());
        v.push(SimpleType::new(Family::G, 2).unwrap());
        v
    }

    #[test]
    fn subdiagrams_of_adjoint_examples() {
        let e6 = DynkinDiagram::simple(ty("E6"));
        let s = e6.subdiagram(&BTreeSet::from([1])).unwrap();
        assert_eq!(s.diagram.to_string(), "D5");
        let e7 = DynkinDiagram::simple(ty("E7"));
        let s = e7.subdiagram(&BTreeSet::from([2])).unwrap();
        assert_eq!(s.diagram.to_string(), "A6");
        for n in [4, 6, 8] {
            let d = DynkinDiagram::simple(SimpleType::new(Family::D, n).unwrap());
            let s = d.subdiagram(&BTreeSet::from([n - 1])).unwrap();
            assert_eq!(s.diagram.to_string(), format!("A{}", n - 1));
        }
        let s = e6.subdiagram(&BTreeSet::from([3])).unwrap();
        assert_eq!(s.diagram.to_string(), "A1+A4");
        let s = e6.subdiagram(&BTreeSet::new()).unwrap();
        assert_eq!(s.diagram, e6);
        let e8 = DynkinDiagram::simple(ty("E8"));
        assert_eq!(
            e8.subdiagram(&BTreeSet::from([8])).unwrap().diagram.to_string(),
            "E7"
        );
        assert_eq!(
            e8.subdiagram(&BTreeSet::from([1])).unwrap().diagram.to_string(),
            "D7"
        );
        let f4 = DynkinDiagram::simple(ty("F4"));
        assert_eq!(
            f4.subdiagram(&BTreeSet::from([1])).unwrap().diagram.to_string(),
            "C3"
        );
        assert_eq!(
            f4.subdiagram(&BTreeSet::from([4])).unwrap().diagram.to_string(),
            "B3"
        );
        let c3 = DynkinDiagram::simple(ty("C3"));
        assert_eq!(
            c3.subdiagram(&BTreeSet::from([1])).unwrap().diagram.to_string(),
            "C2"
        );
        let all: BTreeSet<usize> = (1..=6).collect();
        assert_eq!(e6.subdiagram(&all).unwrap().diagram.rank, 0);
    }

    #[test]
    fn center_presets() {
        let e6 = DynkinDiagram::simple(ty("E6")).center().unwrap();
        assert_eq!(e6.group.orders, vec![3]);
        assert_eq!(e6.pi[0], vec![1]);
        assert_eq!(e6.pi[2], vec![2]);
        assert_eq!(e6.pi[1], vec![0]);
        let d6 = DynkinDiagram::simple(ty("D6")).center().unwrap();
        assert_eq!(d6.group.orders, vec![2, 2]);
        assert_eq!(d6.pi[4], vec![1, 0]);
        assert_eq!(d6.pi[5], vec![0, 1]);
        assert_eq!(d6.pi[2], vec![1, 1]);
        assert!(DynkinDiagram::simple(ty("E8")).center().unwrap().group.is_trivial());
        assert!(parse_diagram("A1+A1").unwrap().center().is_err());
    }

    #[test]
    fn edges_record_long_end() {
        let f4 = DynkinDiagram::simple(ty("F4"));
        let e = f4.edges();
        assert_eq!(e.len(), 3);
        assert_eq!(e[1].multiplicity, 2);
        assert_eq!(e[1].long_end, Some(2));
        let b3 = DynkinDiagram::simple(ty("B3"));
        assert_eq!(b3.edges()[1].long_end, Some(2));
        let c3 = DynkinDiagram::simple(ty("C3"));
        assert_eq!(c3.edges()[1].long_end, Some(3));
    }
}
