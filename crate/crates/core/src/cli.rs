//! Command implementations behind the `udbound` binary: group-spec parsing,
//! result documents and their text and JSON renderings.
//!
//! ```text
//! spec    := simple (":" lattice)? | simple "^" m "/mu" k
//! simple  := type ("+" type)*          e.g. E8, C3, A2+A2
//! lattice := sc | adjoint | hs | pgo | mu<d>
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::demazure::OperatorContext;
use crate::error::{Error, Result};
use crate::isogeny::{self, Alternative, GroupSpec, Lattice};
use crate::polynomial::{Exponent, Polynomial};
use crate::properties;
use crate::root_system::{DynkinDiagram, Family, SimpleType};
use crate::search::{self, verify_certificate, Certificate, SearchOptions, Step};
use crate::weyl;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNVERIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

pub const GROUP_CAP_ENV: &str = "UDBOUND_GROUP_CAP";

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ResourceCap { .. } => EXIT_RESOURCE,
        Error::Inconsistent(_) => EXIT_UNVERIFIED,
        _ => EXIT_USAGE,
    }
}

/// The Weyl-enumeration cap, from the environment when set.
pub fn group_cap() -> usize {
    std::env::var(GROUP_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(weyl::DEFAULT_GROUP_CAP)
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, at: usize, expected: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: at,
            expected: expected.into(),
        })
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail(start, what);
        }
        match self.text[start..self.pos].parse() {
            Ok(v) => Ok(v),
            Err(_) => self.fail(start, what),
        }
    }

    fn simple(&mut self) -> Result<SimpleType> {
        let start = self.pos;
        let family = match self.peek().and_then(|c| Family::from_letter(c.to_ascii_uppercase())) {
            Some(f) => f,
            None => return self.fail(start, "type letter A-G"),
        };
        self.pos += 1;
        let rank = self.number("rank")?;
        SimpleType::new(family, rank).or_else(|_| {
            let valid = match family {
                Family::A => "A with rank >= 1",
                Family::B => "B with rank >= 2",
                Family::C => "C with rank >= 2",
                Family::D => "D with rank >= 3",
                Family::E => "E6, E7 or E8",
                Family::F => "F4",
                Family::G => "G2",
            };
            self.fail(start, valid)
        })
    }

    fn word(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut cur = Cursor { text, pos: 0 };
    let mut types = vec![cur.simple()?];
    while cur.eat('+') {
        types.push(cur.simple()?);
    }
    let diagram = DynkinDiagram::from_types(&types);
    let spec = if cur.eat(':') {
        let at = cur.pos;
        let word = cur.word();
        let lattice = match word {
            "sc" => Lattice::SimplyConnected,
            "adjoint" => Lattice::Adjoint,
            "hs" => Lattice::HalfSpin,
            "pgo" => {
                if types.len() != 1 || types[0].family != Family::D {
                    return cur.fail(at, "a lattice valid for this type (pgo needs type D)");
                }
                Lattice::Adjoint
            }
            w if w.starts_with("mu") && w.len() > 2 => match w[2..].parse() {
                Ok(d) => Lattice::Cyclic(d),
                Err(_) => return cur.fail(at + 2, "order of mu"),
            },
            _ => return cur.fail(at, "lattice: sc, adjoint, hs, pgo or mu<d>"),
        };
        GroupSpec::new(diagram, lattice).or_else(|e| match e {
            Error::InvalidLattice(msg) => cur.fail(at, format!("a lattice valid for this type ({msg})")),
            other => Err(other),
        })?
    } else if cur.eat('^') {
        if types.len() != 1 {
            return cur.fail(cur.pos - 1, "a single simple type before '^'");
        }
        let m_at = cur.pos;
        let m = cur.number("number of copies")?;
        if m == 0 {
            return cur.fail(m_at, "at least one copy");
        }
        let slash_at = cur.pos;
        if !(cur.eat('/') && cur.eat('m') && cur.eat('u')) {
            return cur.fail(slash_at, "'/mu'");
        }
        let k_at = cur.pos;
        let k = cur.number("order of mu")?;
        GroupSpec::diagonal(types[0], m, k as u64).or_else(|e| match e {
            Error::InvalidLattice(msg) => cur.fail(k_at, format!("a central subgroup order ({msg})")),
            other => Err(other),
        })?
    } else {
        GroupSpec::simply_connected(diagram)
    };
    if cur.pos != text.len() {
        return cur.fail(cur.pos, "end of input, '+', ':' or '^'");
    }
    Ok(spec)
}

/// Comma-separated vertex indices, `1,2,3`; spaces are ignored.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    if text.trim().is_empty() {
        return Ok(out);
    }
    let mut offset = 0;
    for part in text.split(',') {
        let lead = part.len() - part.trim_start().len();
        let v: usize = part.trim().parse().map_err(|_| Error::Parse {
            position: offset + lead,
            expected: "vertex index".into(),
        })?;
        if v == 0 || v > rank {
            return Err(Error::Parse {
                position: offset + lead,
                expected: format!("vertex index in 1..={rank}"),
            });
        }
        out.push(v);
        offset += part.len() + 1;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    /// Sorted `[variable, exponent]` pairs.
    pub monomial: Vec<(usize, Exponent)>,
    pub word: Vec<usize>,
    pub steps: Vec<Step>,
}

impl CertificateDoc {
    pub fn from_certificate(c: &Certificate) -> Self {
        Self {
            monomial: c.monomial.factors(),
            word: c.word.clone(),
            steps: c.steps.clone(),
        }
    }

    pub fn monomial_text(&self) -> String {
        if self.monomial.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .monomial
            .iter()
            .map(|&(v, e)| if e == 1 { format!("x{v}") } else { format!("x{v}^{e}") })
            .collect();
        parts.join("*")
    }

    pub fn word_text(&self) -> String {
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        parts.join(",")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub group: String,
    /// `|Sigma+|` of the whole diagram, the dimension of `G/B`.
    pub dim_flag: usize,
    pub ud_lower_bound: usize,
    pub cd_upper_bound: Option<usize>,
    pub certificate: CertificateDoc,
    pub removed_vertices: Vec<usize>,
    pub substitution: Vec<String>,
    pub verified: bool,
    pub annotations: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alternatives: Vec<Alternative>,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            position: e.column(),
            expected: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(s, "{k:<13}{v}");
        };
        line("group", self.group.clone());
        line("dim G/B", self.dim_flag.to_string());
        if !self.removed_vertices.is_empty() {
            let r: Vec<String> = self.removed_vertices.iter().map(|v| v.to_string()).collect();
            line("removed", r.join(","));
        }
        for z in &self.substitution {
            line("substitute", z.clone());
        }
        let label = if self.verified { "ud >=" } else { "degree" };
        line(label, self.ud_lower_bound.to_string());
        if let Some(cd) = self.cd_upper_bound {
            line("cd <=", cd.to_string());
        }
        line("monomial", self.certificate.monomial_text());
        line("word", self.certificate.word_text());
        line("verified", if self.verified { "yes" } else { "NO" }.into());
        for a in &self.alternatives {
            let r: Vec<String> = a.removed.iter().map(|v| v.to_string()).collect();
            line(
                "alternative",
                format!("remove {} -> {}, ud >= {}", r.join(","), a.subdiagram, a.ud_lower_bound),
            );
        }
        for a in &self.annotations {
            line("note", a.clone());
        }
        s
    }
}

/// Re-checks a bound document against its group, independently of how it
/// was produced.
pub fn reverify(spec: &GroupSpec, doc: &ResultDocument) -> Result<bool> {
    let n = spec.diagram.rank;
    let ctx = OperatorContext::new(spec.diagram.cartan());
    let mut monomial = crate::polynomial::Monomial::one(n);
    for &(v, e) in &doc.certificate.monomial {
        if v == 0 || v > n {
            return Ok(false);
        }
        monomial.set_exp(v, e);
    }
    let cert = Certificate {
        degree: monomial.degree(),
        monomial,
        word: doc.certificate.word.clone(),
        steps: doc.certificate.steps.clone(),
    };
    if cert.check_well_formed().is_err() || cert.degree != doc.ud_lower_bound {
        return Ok(false);
    }
    let projection = spec.projection();
    let removed: BTreeSet<usize> = doc.removed_vertices.iter().copied().collect();
    let substitution = isogeny::substitution_for(&projection, &removed)?;
    isogeny::verify_z_certificate(&ctx, &projection, &substitution, &cert)
}

pub fn cmd_bound(spec_text: &str, allow_ctype: bool) -> Result<ResultDocument> {
    let spec = parse_group_spec(spec_text)?;
    let options = SearchOptions {
        allow_ctype,
        ..SearchOptions::default()
    };
    let b = isogeny::cd_upper_bound_with(&spec, None, options)?;
    let mut annotations = b.annotations.clone();
    if let Lattice::Diagonal { copies, .. } = spec.lattice {
        annotations.push(format!(
            "{copies} copies: {} = {copies}*{} - ud of the remaining diagram {}",
            b.bound,
            spec.diagram.components[0].ty.positive_root_count(),
            b.subdiagram
        ));
    }
    let mut doc = ResultDocument {
        group: spec.to_string(),
        dim_flag: b.positive_roots,
        ud_lower_bound: b.ud_lower_bound,
        cd_upper_bound: Some(b.bound),
        certificate: CertificateDoc::from_certificate(&b.certificate),
        removed_vertices: b.removed.iter().copied().collect(),
        substitution: b.substitution.describe(),
        verified: false,
        annotations,
        alternatives: if b.alternatives.len() > 1 {
            b.alternatives.clone()
        } else {
            Vec::new()
        },
    };
    doc.verified = reverify(&spec, &doc)?;
    Ok(doc)
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub document: ResultDocument,
    /// `(letter, polynomial after applying it)`, in application order.
    pub trace: Vec<(usize, Polynomial)>,
    pub result: Polynomial,
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, (i, p)) in self.trace.iter().enumerate() {
            let _ = writeln!(s, "{:>3}  d{i:<3} {p}", k + 1);
        }
        let _ = writeln!(s, "result       {}", self.result);
        s.push_str(&self.document.to_text());
        s
    }
}

pub fn cmd_verify(spec_text: &str, monomial_text: &str, word_text: &str) -> Result<VerifyReport> {
    let spec = parse_group_spec(spec_text)?;
    let n = spec.diagram.rank;
    let p = Polynomial::parse(monomial_text, n)?;
    let monomial = p.as_monic_monomial().cloned().ok_or_else(|| Error::Parse {
        position: 0,
        expected: "a monic monomial".into(),
    })?;
    let word = parse_word(word_text, n)?;
    let ctx = OperatorContext::new(spec.diagram.cartan());
    let cert = Certificate::from_word(monomial, word);
    let v = verify_certificate(&ctx, &cert)?;
    let trace = cert
        .word
        .iter()
        .rev()
        .zip(v.trace.iter())
        .map(|(&i, t)| (i, t.after.clone()))
        .collect();
    let document = ResultDocument {
        group: spec.to_string(),
        dim_flag: spec.positive_root_count(),
        ud_lower_bound: cert.degree,
        cd_upper_bound: None,
        certificate: CertificateDoc::from_certificate(&cert),
        removed_vertices: Vec::new(),
        substitution: Vec::new(),
        verified: v.valid,
        annotations: Vec::new(),
        alternatives: Vec::new(),
    };
    Ok(VerifyReport {
        document,
        trace,
        result: v.result,
    })
}

pub fn cmd_brute(spec_text: &str, max_degree: Option<usize>, cap: usize) -> Result<ResultDocument> {
    let spec = parse_group_spec(spec_text)?;
    let ctx = OperatorContext::new(spec.diagram.cartan());
    let b = search::brute_force_ud(
        &ctx,
        &spec.diagram,
        search::BruteForceLimits {
            max_degree,
            group_cap: cap,
        },
    )?;
    let chain = search::ud_lower_bound(&ctx, &spec.diagram, SearchOptions::default())?;
    let exact = max_degree.is_none_or(|m| m >= spec.positive_root_count());
    let mut annotations = vec![format!("chain method gives ud >= {}", chain.bound)];
    if exact {
        annotations.push(format!("exhaustive search: ud = {}", b.ud));
    } else {
        annotations.push(format!(
            "search limited to degree <= {}: ud >= {}",
            max_degree.unwrap(),
            b.ud
        ));
    }
    let verified = verify_certificate(&ctx, &b.witness)?.valid;
    Ok(ResultDocument {
        group: spec.to_string(),
        dim_flag: spec.positive_root_count(),
        ud_lower_bound: b.ud,
        cd_upper_bound: (spec.lattice == Lattice::SimplyConnected)
            .then(|| spec.positive_root_count() - b.ud.max(chain.bound)),
        certificate: CertificateDoc::from_certificate(&b.witness),
        removed_vertices: Vec::new(),
        substitution: Vec::new(),
        verified,
        annotations,
        alternatives: Vec::new(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SchubertTerm {
    pub word: Vec<usize>,
    pub coefficient: String,
}

/// Nonzero coefficients of `p` in the Schubert basis, by element of
/// length `deg p`.
pub fn cmd_schubert(spec_text: &str, poly_text: &str, cap: usize) -> Result<Vec<SchubertTerm>> {
    let spec = parse_group_spec(spec_text)?;
    let n = spec.diagram.rank;
    let p = Polynomial::parse(poly_text, n)?;
    let d = p.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
    let ctx = OperatorContext::new(spec.diagram.cartan());
    let elements = weyl::elements_of_length(&ctx, d, cap)?;
    Ok(ctx
        .schubert_expand(&p, &elements)?
        .into_iter()
        .filter(|(_, c)| *c != 0.into())
        .map(|(w, c)| SchubertTerm {
            word: w.word,
            coefficient: c.to_string(),
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub degree: usize,
    pub monomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub ty: String,
    pub positive_roots: usize,
    pub one_chain: TableEntry,
    pub combined: TableEntry,
    pub cd_upper_bound: usize,
}

pub fn table_types(max_rank: usize) -> Vec<SimpleType> {
    let mut v = Vec::new();
    for (family, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 4)] {
        for n in lo..=max_rank {
            v.push(SimpleType::new(family, n).unwrap());
        }
    }
    for n in 6..=max_rank.min(8) {
        v.push(SimpleType::new(Family::E, n).unwrap());
    }
    if max_rank >= 4 {
        v.push(SimpleType::new(Family::F, 4).unwrap());
    }
    if max_rank >= 2 {
        v.push(SimpleType::new(Family::G, 2).unwrap());
    }
    v
}

pub fn cmd_table(max_rank: usize) -> Result<Vec<TableRow>> {
    table_types(max_rank)
        .into_iter()
        .map(|ty| {
            let d = DynkinDiagram::simple(ty);
            let ctx = OperatorContext::new(d.cartan());
            let chains = search::chain_method_bound(
                &ctx,
                &d,
                SearchOptions {
                    allow_ctype: false,
                    ..SearchOptions::default()
                },
            )?;
            let combined = search::ud_lower_bound(&ctx, &d, SearchOptions::default())?.certificate;
            let entry = |c: &Certificate| TableEntry {
                degree: c.degree,
                monomial: c.monomial.to_string(),
            };
            Ok(TableRow {
                ty: ty.to_string(),
                positive_roots: ty.positive_root_count(),
                one_chain: entry(&chains),
                combined: entry(&combined),
                cd_upper_bound: ty.positive_root_count() - combined.degree,
            })
        })
        .collect()
}

pub fn table_text(rows: &[TableRow]) -> String {
    let w = rows
        .iter()
        .map(|r| r.one_chain.monomial.len().max(r.combined.monomial.len()))
        .max()
        .unwrap_or(8)
        .max(8);
    let mut s = String::new();
    let _ = writeln!(s, "Lower bounds for ud, by certificate degree");
    let _ = writeln!(
        s,
        "{:<5} {:>6}  {:>7}  {:<w$}  {:>8}  {:<w$}",
        "type", "|S+|", "1-chain", "monomial", "combined", "monomial"
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:<5} {:>6}  {:>7}  {:<w$}  {:>8}  {:<w$}",
            r.ty, r.positive_roots, r.one_chain.degree, r.one_chain.monomial, r.combined.degree,
            r.combined.monomial
        );
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "Upper bounds for cd of the simply connected group");
    let _ = writeln!(s, "{:<5} {:>6}  {:>5}  {:>5}", "type", "|S+|", "ud>=", "cd<=");
    for r in rows {
        let _ = writeln!(
            s,
            "{:<5} {:>6}  {:>5}  {:>5}",
            r.ty, r.positive_roots, r.combined.degree, r.cd_upper_bound
        );
    }
    s.lines().map(|l| l.trim_end().to_string() + "\n").collect()
}

pub fn cmd_check(seed: u64, cases: usize) -> Vec<properties::PropertyReport> {
    properties::run_all(seed, cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err(text: &str) -> (usize, String) {
        match parse_group_spec(text) {
            Err(Error::Parse { position, expected }) => (position, expected),
            other => panic!("{text}: {other:?}"),
        }
    }

    #[test]
    fn group_specs() {
        assert_eq!(parse_group_spec("E8").unwrap().to_string(), "E8");
        assert_eq!(parse_group_spec("E6:adjoint").unwrap().to_string(), "E6:adjoint");
        assert_eq!(parse_group_spec("D8:pgo").unwrap().lattice, Lattice::Adjoint);
        assert_eq!(parse_group_spec("D6:hs").unwrap().lattice, Lattice::HalfSpin);
        assert_eq!(parse_group_spec("A2+A2").unwrap().diagram.rank, 4);
        assert_eq!(parse_group_spec("C3:sc").unwrap().lattice, Lattice::SimplyConnected);
        assert_eq!(parse_group_spec("A5:mu3").unwrap().lattice, Lattice::Cyclic(3));
        assert_eq!(
            parse_group_spec("E6^2/mu3").unwrap().lattice,
            Lattice::Diagonal { copies: 2, order: 3 }
        );
    }

    #[test]
    fn group_spec_errors() {
        assert_eq!(parse_err("D7:hs").0, 3);
        assert_eq!(parse_err("E9").0, 0);
        assert_eq!(parse_err("A2+X3").0, 3);
        assert_eq!(parse_err("E6:foo").0, 3);
        assert_eq!(parse_err("E6^2/nu3").0, 4);
        assert_eq!(parse_err("E6^2/mu2").0, 7);
        assert_eq!(parse_err("A2+A2^2/mu3").0, 5);
        assert_eq!(parse_err("B3:pgo").0, 3);
        assert_eq!(parse_err("E8 ").0, 2);
    }

    #[test]
    fn words() {
        assert_eq!(parse_word("1, 2,3", 3).unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_word("", 3).unwrap(), Vec::<usize>::new());
        assert!(matches!(parse_word("1,4", 3), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_word("1,a", 3), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn bound_documents() {
        let f4 = cmd_bound("F4", true).unwrap();
        assert_eq!((f4.ud_lower_bound, f4.cd_upper_bound), (11, Some(13)));
        assert!(f4.verified);
        let f4 = cmd_bound("F4", false).unwrap();
        assert_eq!(f4.cd_upper_bound, Some(14));
        let e6 = cmd_bound("E6:adjoint", true).unwrap();
        assert_eq!(e6.cd_upper_bound, Some(22));
        assert_eq!(e6.alternatives.len(), 4);
        assert!(e6.verified);
        let p = cmd_bound("E6^2/mu3", true).unwrap();
        assert_eq!(p.cd_upper_bound, Some(39));
        assert_eq!(p.dim_flag, 72);
        assert!(p.verified);
        let a = cmd_bound("A3", true).unwrap();
        assert!(a.annotations.iter().any(|n| n.contains("torsion index")));
    }

    #[test]
    fn documents_round_trip_through_json_and_verify() {
        for spec in ["C3", "E6:adjoint", "D6:hs"] {
            let doc = cmd_bound(spec, true).unwrap();
            let back = ResultDocument::from_json(&doc.to_json()).unwrap();
            assert_eq!(back, doc);
            let parsed = parse_group_spec(spec).unwrap();
            assert!(reverify(&parsed, &back).unwrap());
            let r = cmd_verify(
                spec.split(':').next().unwrap(),
                &back.certificate.monomial_text(),
                &back.certificate.word_text(),
            )
            .unwrap();
            assert!(r.document.verified, "{spec}");
        }
    }

    #[test]
    fn tampered_documents_fail() {
        let mut doc = cmd_bound("E6:adjoint", true).unwrap();
        let spec = parse_group_spec("E6:adjoint").unwrap();
        doc.certificate.word.swap(0, 1);
        doc.certificate.steps.clear();
        assert!(!reverify(&spec, &doc).unwrap());
    }

    #[test]
    fn verify_command() {
        let r = cmd_verify("C3", "x1^5*x2^3*x3", "1,2,3,2,1,2,3,2,3").unwrap();
        assert!(r.document.verified);
        assert_eq!(r.trace.len(), 9);
        assert!(cmd_verify("C3", "x3", "3").unwrap().document.verified);
        let bad = cmd_verify("C3", "x3", "2").unwrap();
        assert!(!bad.document.verified);
        assert!(bad.result.is_zero());
        assert!(cmd_verify("C3", "2*x3", "3").is_err());
    }

    #[test]
    fn brute_command() {
        assert_eq!(cmd_brute("C2", None, weyl::DEFAULT_GROUP_CAP).unwrap().ud_lower_bound, 4);
        let g2 = cmd_brute("G2", None, weyl::DEFAULT_GROUP_CAP).unwrap();
        assert!(g2.verified && g2.ud_lower_bound >= 3);
        assert_eq!(
            cmd_brute("E6", None, 1000).unwrap_err(),
            Error::ResourceCap { cap: 1000 }
        );
    }

    #[test]
    fn schubert_command() {
        let terms = cmd_schubert("A2", "x1", weyl::DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].word, vec![1]);
        assert!(matches!(
            cmd_schubert("A2", "x1 + x2^2", 100),
            Err(Error::Inhomogeneous)
        ));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&parse_group_spec("D7:hs").unwrap_err()), EXIT_USAGE);
        assert_eq!(exit_code(&Error::ResourceCap { cap: 1 }), EXIT_RESOURCE);
    }
}
