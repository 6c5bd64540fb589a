//! Serializable command reports and their json, csv and text renderings.

use serde::{Deserialize, Serialize};

use crate::codes::{CyclicCode, Distance};
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub command: String,
    pub input: InputEcho,
    pub outputs: Outputs,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
}

impl ReportRecord {
    pub fn new(command: &str, input: InputEcho) -> ReportRecord {
        ReportRecord {
            command: command.to_string(),
            input,
            outputs: Outputs::default(),
            notes: Vec::new(),
            error: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub drop: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cl: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cr: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_max: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassListing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorization: Option<Factorization>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codes: Option<Vec<CodeSummary>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qsc: Option<QscSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sync: Option<SyncSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairRow>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub kind: String,
    pub message: String,
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        let debug = format!("{e:?}");
        let kind = debug
            .split(|c: char| !c.is_alphanumeric())
            .next()
            .unwrap_or_default()
            .to_string();
        ErrorReport {
            kind,
            message: e.to_string(),
        }
    }
}

/// A distance as a bare number when exact, `{"d_lower": w}` when a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DistanceOut {
    Exact(usize),
    Lower { d_lower: usize },
}

impl From<Distance> for DistanceOut {
    fn from(d: Distance) -> Self {
        match d {
            Distance::Exact(d) => DistanceOut::Exact(d),
            Distance::AtLeast(w) => DistanceOut::Lower { d_lower: w },
        }
    }
}

impl std::fmt::Display for DistanceOut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DistanceOut::Exact(d) => write!(f, "{d}"),
            DistanceOut::Lower { d_lower } => write!(f, ">={d_lower}"),
        }
    }
}

/// Coefficient codes (constant term first) plus the rendered polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyOut {
    pub coeffs: Vec<u64>,
    pub text: String,
}

impl From<&Poly> for PolyOut {
    fn from(p: &Poly) -> Self {
        PolyOut {
            coeffs: p.coeffs().to_vec(),
            text: p.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassListing {
    pub n: u64,
    pub gamma: u64,
    pub classes: Vec<Vec<u64>>,
    pub negation_map_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub n: u64,
    pub q: u64,
    pub gamma: u64,
    pub ell: usize,
    pub t: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field_modulus: Option<PolyOut>,
    pub classes: Vec<ClassFactors>,
    pub residual: PolyOut,
    pub product_identity_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFactors {
    pub class: usize,
    pub representatives: Vec<u64>,
    pub generator: PolyOut,
    pub factors: Vec<MinimalFactor>,
    pub factors_multiply_to_generator: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalFactor {
    pub representative: u64,
    pub coset: Vec<u64>,
    pub degree: usize,
    pub irreducible: bool,
    pub poly: PolyOut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub label: String,
    pub n: usize,
    pub q: u64,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<DistanceOut>,
    pub notation: String,
    pub generator: PolyOut,
    pub dual_k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_d: Option<DistanceOut>,
    pub dual_notation: String,
    pub dual_generator: PolyOut,
    pub dual_containing: bool,
}

impl CodeSummary {
    pub fn new(label: &str, code: &CyclicCode, d: Option<Distance>, dual_d: Option<Distance>) -> Self {
        let dual = code.dual();
        CodeSummary {
            label: label.to_string(),
            n: code.n(),
            q: code.q(),
            k: code.k(),
            d: d.map(Into::into),
            notation: notation(code.n(), code.k(), d, code.q()),
            generator: code.generator().into(),
            dual_k: dual.k(),
            dual_d: dual_d.map(Into::into),
            dual_notation: notation(dual.n(), dual.k(), dual_d, dual.q()),
            dual_generator: dual.generator().into(),
            dual_containing: code.is_dual_containing(),
        }
    }
}

/// `[n,k,d]_q`, with `>=d` for a bound and the distance omitted when unknown.
pub fn notation(n: usize, k: usize, d: Option<Distance>, q: u64) -> String {
    match d {
        Some(d) => format!("[{n},{k},{d}]_{q}"),
        None => format!("[{n},{k}]_{q}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub row: String,
    pub expected: String,
    pub expected_dual: String,
    pub realized: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<CodeSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QscSummary {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula_logical_dimension: Option<usize>,
    pub outer: CodeSummary,
    pub inner: CodeSummary,
    pub quotient: PolyOut,
    pub order_f: usize,
    pub cl: usize,
    pub cr: usize,
    pub length: usize,
    pub logical_dimension: usize,
    pub bit_errors: usize,
    pub phase_errors: usize,
    pub bounds_exact: bool,
    pub max_tolerance: usize,
    pub notation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyncSummary {
    pub delta: i64,
    pub window: (i64, i64),
    pub trials: usize,
    pub recovered: usize,
    pub failures: usize,
    pub outcomes: Vec<TrialOutcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialOutcome {
    pub trial: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recovered: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub n: u64,
    pub q: u64,
    pub ell: u64,
    pub t: u64,
    pub family_eligible: bool,
}

pub fn to_json(record: &ReportRecord) -> String {
    let mut s = serde_json::to_string_pretty(record).expect("report serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<ReportRecord> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

/// One fixed-column table per command; an error row when the command failed.
pub fn to_csv(record: &ReportRecord) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut put = |row: Vec<String>| w.write_record(&row).expect("in-memory csv");
    let o = &record.outputs;
    if let Some(e) = &record.error {
        put(vec!["error".into(), "message".into()]);
        put(vec![e.kind.clone(), e.message.clone()]);
    } else if let Some(c) = &o.classes {
        put(vec!["class".into(), "members".into()]);
        for (i, members) in c.classes.iter().enumerate() {
            put(vec![i.to_string(), join(members, " ")]);
        }
    } else if let Some(f) = &o.factorization {
        put(["class", "representative", "coset", "degree", "irreducible", "polynomial"]
            .map(String::from)
            .to_vec());
        for c in &f.classes {
            for m in &c.factors {
                put(vec![
                    c.class.to_string(),
                    m.representative.to_string(),
                    join(&m.coset, " "),
                    m.degree.to_string(),
                    m.irreducible.to_string(),
                    m.poly.text.clone(),
                ]);
            }
        }
    } else if let Some(t) = &o.table {
        put(["row", "expected", "expected_dual", "realized", "subset", "computed", "computed_dual"]
            .map(String::from)
            .to_vec());
        for r in t {
            put(vec![
                r.row.clone(),
                r.expected.clone(),
                r.expected_dual.clone(),
                r.realized.to_string(),
                r.subset.as_deref().map(|s| join(s, " ")).unwrap_or_default(),
                r.code.as_ref().map(|c| c.notation.clone()).unwrap_or_default(),
                r.code.as_ref().map(|c| c.dual_notation.clone()).unwrap_or_default(),
            ]);
        }
    } else if let Some(codes) = &o.codes {
        put(["label", "n", "q", "k", "d", "dual_k", "dual_d", "dual_containing", "generator"]
            .map(String::from)
            .to_vec());
        for c in codes {
            put(vec![
                c.label.clone(),
                c.n.to_string(),
                c.q.to_string(),
                c.k.to_string(),
                c.d.map(|d| d.to_string()).unwrap_or_default(),
                c.dual_k.to_string(),
                c.dual_d.map(|d| d.to_string()).unwrap_or_default(),
                c.dual_containing.to_string(),
                c.generator.text.clone(),
            ]);
        }
    } else if let Some(s) = &o.qsc {
        put([
            "family", "z", "n", "q", "cl", "cr", "length", "logical_dimension", "order_f",
            "bit_errors", "phase_errors",
        ]
        .map(String::from)
        .to_vec());
        put(vec![
            s.family.clone().unwrap_or_default(),
            s.z.map(|z| z.to_string()).unwrap_or_default(),
            s.inner.n.to_string(),
            s.inner.q.to_string(),
            s.cl.to_string(),
            s.cr.to_string(),
            s.length.to_string(),
            s.logical_dimension.to_string(),
            s.order_f.to_string(),
            s.bit_errors.to_string(),
            s.phase_errors.to_string(),
        ]);
    } else if let Some(s) = &o.sync {
        put(["trial", "delta", "recovered", "ok", "error"].map(String::from).to_vec());
        for t in &s.outcomes {
            put(vec![
                t.trial.to_string(),
                s.delta.to_string(),
                t.recovered.map(|r| r.to_string()).unwrap_or_default(),
                t.ok.to_string(),
                t.error.clone().unwrap_or_default(),
            ]);
        }
    } else if let Some(pairs) = &o.pairs {
        put(["n", "q", "ell", "t", "family_eligible"].map(String::from).to_vec());
        for p in pairs {
            put(vec![
                p.n.to_string(),
                p.q.to_string(),
                p.ell.to_string(),
                p.t.to_string(),
                p.family_eligible.to_string(),
            ]);
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn to_text(record: &ReportRecord) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    let o = &record.outputs;
    if let Some(c) = &o.classes {
        let _ = writeln!(s, "sextic classes mod {} (gamma = {})", c.n, c.gamma);
        for (i, members) in c.classes.iter().enumerate() {
            let _ = writeln!(s, "  C{i} = {{{}}}", join(members, ", "));
        }
        let _ = writeln!(s, "  -C_i = C_(i+3): {}", c.negation_map_holds);
    }
    if let Some(f) = &o.factorization {
        let _ = writeln!(
            s,
            "x^{} - 1 over GF({}), gamma = {}, ell = {}, t = {}",
            f.n, f.q, f.gamma, f.ell, f.t
        );
        if let Some(m) = &f.field_modulus {
            let _ = writeln!(s, "  field modulus: {}", m.text);
        }
        for c in &f.classes {
            let reps: Vec<String> = c.representatives.iter().map(|r| format!("M{r}")).collect();
            let _ = writeln!(s, "  g{} = {}", c.class, reps.join(" * "));
            let _ = writeln!(s, "     = {}", c.generator.text);
            for m in &c.factors {
                let _ = writeln!(
                    s,
                    "    M{} (coset {{{}}}, degree {}) = {}",
                    m.representative,
                    join(&m.coset, ", "),
                    m.degree,
                    m.poly.text
                );
            }
        }
        let _ = writeln!(s, "  residual: {}", f.residual.text);
        let _ = writeln!(s, "  (x - 1) g0 ... g5 = x^n - 1: {}", f.product_identity_holds);
    }
    if let Some(codes) = &o.codes {
        for c in codes {
            let _ = writeln!(
                s,
                "{}: {}  dual {}  dual-containing: {}",
                c.label, c.notation, c.dual_notation, c.dual_containing
            );
            let _ = writeln!(s, "  g = {}", c.generator.text);
            let _ = writeln!(s, "  dual g = {}", c.dual_generator.text);
        }
    }
    if let Some(t) = &o.table {
        for r in t {
            let subset = r
                .subset
                .as_deref()
                .map(|v| format!(" via classes {{{}}}", join(v, ",")))
                .unwrap_or_default();
            let _ = writeln!(
                s,
                "{:<3} {} / {}  {}{}",
                r.row,
                r.expected,
                r.expected_dual,
                if r.realized { "realized" } else { "NOT realized" },
                subset
            );
        }
    }
    if let Some(q) = &o.qsc {
        if let (Some(fam), Some(z), Some(ell), Some(t)) = (&q.family, q.z, q.ell, q.t) {
            let _ = writeln!(s, "family {fam}, z = {z}, ell = {ell}, t = {t}");
        }
        let _ = writeln!(s, "outer {}  inner {}", q.outer.notation, q.inner.notation);
        let _ = writeln!(s, "f = {}  ord(f) = {}", q.quotient.text, q.order_f);
        let _ = writeln!(s, "{}", q.notation);
        let _ = writeln!(
            s,
            "corrects {}{} bit and {}{} phase errors, c_l + c_r <= {}",
            if q.bounds_exact { "" } else { ">=" },
            q.bit_errors,
            if q.bounds_exact { "" } else { ">=" },
            q.phase_errors,
            q.max_tolerance
        );
    }
    if let Some(y) = &o.sync {
        let _ = writeln!(
            s,
            "delta = {} in window ({}, {}): {}/{} recovered",
            y.delta, y.window.0, y.window.1, y.recovered, y.trials
        );
    }
    if let Some(pairs) = &o.pairs {
        for p in pairs {
            let line = format!(
                "n = {:<4} q = {:<4} ell = {:<3} t = {:<3}{}",
                p.n,
                p.q,
                p.ell,
                p.t,
                if p.family_eligible { " family-eligible" } else { "" }
            );
            let _ = writeln!(s, "{}", line.trim_end());
        }
    }
    for note in &record.notes {
        let _ = writeln!(s, "note: {note}");
    }
    if let Some(e) = &record.error {
        let _ = writeln!(s, "error ({}): {}", e.kind, e.message);
    }
    s
}
