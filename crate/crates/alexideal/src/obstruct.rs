//! Concordance-theoretic conclusions assembled into reports: pairwise
//! comparisons of ideal classes, ribbon-compatibility certificates,
//! free-basis independence certificates, and a deterministic DOT emitter
//! for the ribbon-compatibility graph.
//!
//! The conclusions are exactly as strong as the algebra allows. A
//! nonprincipal Alexander ideal obstructs 0-sliceness, invertibility in the
//! 0-concordance monoid and (for 2-knots) ribbonness. Equivalent ideal
//! classes never conclude 0-concordance: the ideal-class homomorphism is
//! not injective.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::knots::{Genus, KnotError, SurfaceKnot};
use crate::laurent::LaurentPoly;
use crate::zideal::{IdealClass, LaurentIdeal, QuotientSize, ZidealError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructError {
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Ideal(#[from] ZidealError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    NotZeroSlice,
    NotInvertible,
    NotRibbon,
}

impl Conclusion {
    pub fn tag(&self) -> &'static str {
        match self {
            Conclusion::NotZeroSlice => "NotZeroSlice",
            Conclusion::NotInvertible => "NotInvertible",
            Conclusion::NotRibbon => "NotRibbon",
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// The computed invariant bundle of one knot.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub name: String,
    pub genus: Genus,
    pub ideal: LaurentIdeal,
    pub class: IdealClass,
    pub principal: bool,
    pub determinant: BigUint,
    pub quotient: QuotientSize,
    pub maximal: bool,
    pub symmetric: bool,
    pub conclusions: Vec<Conclusion>,
}

/// Compute every field of the report for one knot.
pub fn report(k: &SurfaceKnot) -> Result<ObstructionReport, ObstructError> {
    let ideal = k.alexander_ideal()?;
    let class = ideal.class_canonical();
    let principal = ideal.is_principal();
    let determinant = k.determinant()?;
    let quotient = ideal.quotient_size();
    let maximal = ideal.is_maximal()?;
    let symmetric = ideal == ideal.invert_t();
    let mut conclusions = Vec::new();
    if !principal {
        conclusions.push(Conclusion::NotZeroSlice);
        conclusions.push(Conclusion::NotInvertible);
        if k.genus == Genus::Surface(0) {
            conclusions.push(Conclusion::NotRibbon);
        }
    }
    Ok(ObstructionReport {
        name: k.name.clone(),
        genus: k.genus,
        ideal,
        class,
        principal,
        determinant,
        quotient,
        maximal,
        symmetric,
        conclusions,
    })
}

#[derive(Serialize)]
struct ReportJson {
    name: String,
    genus: serde_json::Value,
    ideal: Vec<String>,
    class: Vec<String>,
    principal: bool,
    determinant: serde_json::Value,
    quotient: serde_json::Value,
    maximal: bool,
    symmetric: bool,
    conclusions: Vec<String>,
}

impl ObstructionReport {
    /// Canonical JSON with fixed key order.
    pub fn to_json(&self) -> String {
        let genus = match self.genus {
            Genus::Classical => serde_json::Value::from("classical"),
            Genus::Surface(g) => serde_json::Value::from(g),
        };
        let quotient = match &self.quotient {
            QuotientSize::Infinite => serde_json::Value::from("inf"),
            QuotientSize::Finite(n) => match n.to_string().parse::<u64>() {
                Ok(v) => serde_json::Value::from(v),
                Err(_) => serde_json::Value::from(n.to_string()),
            },
        };
        let determinant = match self.determinant.to_string().parse::<u64>() {
            Ok(v) => serde_json::Value::from(v),
            Err(_) => serde_json::Value::from(self.determinant.to_string()),
        };
        let doc = ReportJson {
            name: self.name.clone(),
            genus,
            ideal: self.ideal.basis().iter().map(|g| g.to_string()).collect(),
            class: self.class.basis().iter().map(|g| g.to_string()).collect(),
            principal: self.principal,
            determinant,
            quotient,
            maximal: self.maximal,
            symmetric: self.symmetric,
            conclusions: self.conclusions.iter().map(|c| c.tag().to_string()).collect(),
        };
        serde_json::to_string(&doc).expect("report serialization cannot fail")
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knot:        {}", self.name)?;
        writeln!(f, "genus:       {}", self.genus)?;
        writeln!(f, "ideal:       {}", self.ideal)?;
        writeln!(f, "class:       {}", self.class)?;
        writeln!(f, "principal:   {}", self.principal)?;
        writeln!(f, "determinant: {}", self.determinant)?;
        writeln!(f, "quotient:    {}", self.quotient)?;
        writeln!(f, "maximal:     {}", self.maximal)?;
        writeln!(f, "symmetric:   {}", self.symmetric)?;
        let c: Vec<&str> = self.conclusions.iter().map(|c| c.tag()).collect();
        write!(f, "conclusions: {}", if c.is_empty() { "none".to_string() } else { c.join(", ") })
    }
}

/// Outcome of comparing two knots by their ideal classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distinction {
    /// The classes differ, so the knots are not 0-concordant.
    Distinguished { left: IdealClass, right: IdealClass },
    /// Equivalent classes. Explicitly not a proof of 0-concordance.
    IdealsEquivalent,
}

pub fn distinguish(a: &SurfaceKnot, b: &SurfaceKnot) -> Result<Distinction, ObstructError> {
    let left = a.alexander_ideal()?.class_canonical();
    let right = b.alexander_ideal()?.class_canonical();
    if left == right {
        Ok(Distinction::IdealsEquivalent)
    } else {
        Ok(Distinction::Distinguished { left, right })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IncompatibleReason {
    NonDividingDeterminant,
    NonDividingContent,
    IdealMismatch,
}

impl IncompatibleReason {
    pub fn tag(&self) -> &'static str {
        match self {
            IncompatibleReason::NonDividingDeterminant => "NonDividingDeterminant",
            IncompatibleReason::NonDividingContent => "NonDividingContent",
            IncompatibleReason::IdealMismatch => "IdealMismatch",
        }
    }
}

/// Outcome of the ribbon-concordance compatibility test K0 -> K1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RibbonCompat {
    /// (f) * Delta(K0) = Delta(K1). Necessary for a ribbon concordance
    /// K0 -> K1 to exist; not a proof that one does.
    Witness(LaurentPoly),
    /// No such f exists, which does rule the concordance out.
    Incompatible(IncompatibleReason),
}

/// Decide whether some principal (f) satisfies (f) Delta(K0) = Delta(K1).
/// The only candidate is the quotient of the contents, which is then checked
/// exactly; a determinant divisibility fast path runs first.
pub fn ribbon_compatible(k0: &SurfaceKnot, k1: &SurfaceKnot) -> Result<RibbonCompat, ObstructError> {
    let d0 = k0.determinant()?;
    let d1 = k1.determinant()?;
    if !(&d1 % &d0).to_string().eq("0") {
        return Ok(RibbonCompat::Incompatible(IncompatibleReason::NonDividingDeterminant));
    }
    let i0 = k0.alexander_ideal()?;
    let i1 = k1.alexander_ideal()?;
    let (c0, _) = i0.content_split();
    let (c1, _) = i1.content_split();
    let f = match c1.div_exact(&c0) {
        Some(f) => f,
        None => return Ok(RibbonCompat::Incompatible(IncompatibleReason::NonDividingContent)),
    };
    let lifted = LaurentIdeal::principal(f.clone())?.product(&i0);
    if lifted == i1 {
        Ok(RibbonCompat::Witness(f.normalize_unit()))
    } else {
        Ok(RibbonCompat::Incompatible(IncompatibleReason::IdealMismatch))
    }
}

/// One entry of a free-basis certificate: the maximal ideal data
/// (characteristic p and residue polynomial h mod p) of one knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateEntry {
    pub name: String,
    pub p: u64,
    pub residue: LaurentPoly,
    pub ideal: LaurentIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndependenceOutcome {
    /// Every ideal is maximal and they are pairwise distinct, so the knots
    /// generate a free commutative submonoid of the 0-concordance monoid.
    Certificate(Vec<CertificateEntry>),
    NotMaximal { index: usize },
    EqualPair { i: usize, j: usize },
}

pub fn independence_certificate(
    ks: &[SurfaceKnot],
) -> Result<IndependenceOutcome, ObstructError> {
    let mut entries = Vec::new();
    let mut ideals = Vec::new();
    for (index, k) in ks.iter().enumerate() {
        let ideal = k.alexander_ideal()?;
        if !ideal.is_maximal()? {
            return Ok(IndependenceOutcome::NotMaximal { index });
        }
        let p: u64 = ideal
            .intersect_z()
            .to_string()
            .parse()
            .expect("characteristic of a maximal ideal fits in u64");
        let residue = ideal.image_mod_p(p)?;
        entries.push(CertificateEntry { name: k.name.clone(), p, residue, ideal: ideal.clone() });
        ideals.push(ideal);
    }
    for i in 0..ideals.len() {
        for j in i + 1..ideals.len() {
            if ideals[i] == ideals[j] {
                return Ok(IndependenceOutcome::EqualPair { i, j });
            }
        }
    }
    Ok(IndependenceOutcome::Certificate(entries))
}

/// The directed ribbon-compatibility graph in DOT form: an edge K_i -> K_j
/// whenever `ribbon_compatible` produces a witness (self-loops omitted).
/// Nodes are annotated with the canonical ideal and the determinant. Output
/// is byte-deterministic.
pub fn graph_dot(ks: &[SurfaceKnot]) -> Result<String, ObstructError> {
    let mut out = String::from("digraph ribbon_compatibility {\n");
    for k in ks {
        let ideal = k.alexander_ideal()?;
        let det = k.determinant()?;
        out.push_str(&format!(
            "  \"{}\" [label=\"{}\\n{}\\ndet {}\"];\n",
            escape(&k.name),
            escape(&k.name),
            escape(&ideal.to_string()),
            det
        ));
    }
    for (i, ki) in ks.iter().enumerate() {
        for (j, kj) in ks.iter().enumerate() {
            if i == j {
                continue;
            }
            if let RibbonCompat::Witness(f) = ribbon_compatible(ki, kj)? {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                    escape(&ki.name),
                    escape(&kj.name),
                    escape(&f.to_string())
                ));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
