//! Command-line surface: argument parsing and the commands behind each
//! subcommand. Every command fills a [`ReportRecord`].

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::codes::{
    dual_oracle, min_distance, CyclicCode, Distance, DistanceOptions, SexticSetup,
};
use crate::cyclotomy::{
    enumerate_valid_pairs, negation_map_check, CyclotomicCoset, SexticClasses,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{self, Poly};
use crate::qsc::{self, Family, QscChain};
use crate::report::{
    self, ClassFactors, ClassListing, CodeSummary, ErrorReport, Factorization, InputEcho,
    MinimalFactor, PairRow, PolyOut, QscSummary, ReportRecord, SyncSummary, TableRow,
    TrialOutcome,
};

#[derive(Parser, Debug)]
#[command(
    name = "sextic-qsc",
    version,
    about = "Dual-containing cyclic codes from sextic cyclotomic classes and quantum synchronizable code parameters"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Subset budget for the minimum-distance support search.
    #[arg(long, default_value_t = 100_000_000, global = true)]
    pub max_work: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::C => Family::C,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// List the six sextic classes modulo n.
    Classes {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        gamma: Option<u64>,
    },
    /// Factor x^n - 1 into g_0..g_5 and their minimal polynomials.
    Factor {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        gamma: Option<u64>,
    },
    /// Parameters of the code generated by a product of g_i, optionally augmented.
    Code {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        gamma: Option<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        classes: Vec<usize>,
        /// Coset representatives whose minimal polynomials are removed.
        #[arg(long, value_delimiter = ',')]
        drop: Vec<u64>,
        /// Skip the minimum-distance computation.
        #[arg(long)]
        no_distance: bool,
    },
    /// Reproduce the parameter table of dual-containing codes.
    Table1,
    /// Quantum synchronizable code parameters from an augmentation family.
    Qsc {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        gamma: Option<u64>,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        z: usize,
        #[arg(long, default_value_t = 0)]
        cl: usize,
        #[arg(long, default_value_t = 0)]
        cr: usize,
        /// Base class index.
        #[arg(long, default_value_t = 0)]
        classes: usize,
    },
    /// Simulate frame-shift recovery on seeded random messages.
    SyncSim {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        gamma: Option<u64>,
        /// Outer code C1, e.g. `classes=1,drop=3`.
        #[arg(long)]
        outer: Option<String>,
        /// Inner code C2, e.g. `classes=1`.
        #[arg(long)]
        inner: Option<String>,
        /// Use a family witness chain instead of --outer/--inner.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, default_value_t = 0)]
        z: usize,
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
        #[arg(long, default_value_t = 0)]
        cl: usize,
        #[arg(long, default_value_t = 0)]
        cr: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List valid (n, q) pairs and whether the augmentation families apply.
    Enumerate {
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        q_max: u64,
    },
}

/// Exit status for a failed command.
pub const EXIT_ERROR: i32 = 1;
/// Exit status when a table row could not be realized.
pub const EXIT_UNREALIZED: i32 = 2;

/// Runs one command; the record carries the error if it failed.
pub fn execute(command: &Command, max_work: u64) -> (ReportRecord, i32) {
    let opts = DistanceOptions {
        max_work,
        ..DistanceOptions::default()
    };
    let (name, input) = echo(command);
    let mut record = ReportRecord::new(name, input);
    let outcome = match command {
        Command::Classes { n, gamma } => cmd_classes(&mut record, *n, *gamma),
        Command::Factor { n, q, gamma } => cmd_factor(&mut record, *n, *q, *gamma),
        Command::Code {
            n,
            q,
            gamma,
            classes,
            drop,
            no_distance,
        } => {
            let opts = if *no_distance { None } else { Some(opts) };
            cmd_code(&mut record, *n, *q, *gamma, classes, drop, opts)
        }
        Command::Table1 => cmd_table1(&mut record, &opts),
        Command::Qsc {
            n,
            q,
            gamma,
            family,
            z,
            cl,
            cr,
            classes,
        } => cmd_qsc(
            &mut record,
            *n,
            *q,
            *gamma,
            (*family).into(),
            *z,
            *cl,
            *cr,
            *classes,
            &opts,
        ),
        Command::SyncSim {
            n,
            q,
            gamma,
            outer,
            inner,
            family,
            z,
            delta,
            cl,
            cr,
            trials,
            seed,
        } => {
            let source = match family {
                Some(f) => ChainSource::Family((*f).into(), *z),
                None => ChainSource::Spec(
                    parse_chain_spec(outer.as_deref().unwrap_or("classes=0")),
                    parse_chain_spec(inner.as_deref().unwrap_or("classes=0,1")),
                ),
            };
            cmd_sync_sim(
                &mut record,
                *n,
                *q,
                *gamma,
                source,
                *delta,
                (*cl, *cr),
                *trials,
                *seed,
            )
        }
        Command::Enumerate { n_max, q_max } => {
            cmd_enumerate(&mut record, *n_max, *q_max);
            Ok(0)
        }
    };
    let code = match outcome {
        Ok(code) => code,
        Err(e) => {
            record.error = Some(ErrorReport::from(&e));
            EXIT_ERROR
        }
    };
    (record, code)
}

pub fn render(record: &ReportRecord, format: Format) -> String {
    match format {
        Format::Json => report::to_json(record),
        Format::Csv => report::to_csv(record),
        Format::Text => report::to_text(record),
    }
}

/// Parses arguments, runs the command and writes the report. Returns the
/// process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { 0 };
        }
    };
    let (record, code) = execute(&cli.command, cli.max_work);
    let text = render(&record, cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("cannot write {}: {e}", path.display());
                return EXIT_ERROR;
            }
        }
        None => print!("{text}"),
    }
    if let Some(e) = &record.error {
        eprintln!("error: {}", e.message);
    }
    code
}

fn echo(command: &Command) -> (&'static str, InputEcho) {
    let mut e = InputEcho::default();
    let name = match command {
        Command::Classes { n, gamma } => {
            e.n = Some(*n);
            e.gamma = *gamma;
            "classes"
        }
        Command::Factor { n, q, gamma } => {
            (e.n, e.q, e.gamma) = (Some(*n), Some(*q), *gamma);
            "factor"
        }
        Command::Code {
            n,
            q,
            gamma,
            classes,
            drop,
            ..
        } => {
            (e.n, e.q, e.gamma) = (Some(*n), Some(*q), *gamma);
            e.classes = Some(classes.clone());
            e.drop = Some(drop.clone());
            "code"
        }
        Command::Table1 => "table1",
        Command::Qsc {
            n,
            q,
            gamma,
            family,
            z,
            cl,
            cr,
            classes,
        } => {
            (e.n, e.q, e.gamma) = (Some(*n), Some(*q), *gamma);
            e.family = Some(Family::from(*family).name().to_string());
            (e.z, e.cl, e.cr) = (Some(*z), Some(*cl), Some(*cr));
            e.classes = Some(vec![*classes]);
            "qsc"
        }
        Command::SyncSim {
            n,
            q,
            gamma,
            outer,
            inner,
            family,
            z,
            delta,
            cl,
            cr,
            trials,
            seed,
        } => {
            (e.n, e.q, e.gamma) = (Some(*n), Some(*q), *gamma);
            if let Some(f) = family {
                e.family = Some(Family::from(*f).name().to_string());
                e.z = Some(*z);
            } else {
                e.outer = Some(outer.clone().unwrap_or_else(|| "classes=0".into()));
                e.inner = Some(inner.clone().unwrap_or_else(|| "classes=0,1".into()));
            }
            (e.delta, e.cl, e.cr) = (Some(*delta), Some(*cl), Some(*cr));
            (e.trials, e.seed) = (Some(*trials), Some(*seed));
            "sync-sim"
        }
        Command::Enumerate { n_max, q_max } => {
            (e.n_max, e.q_max) = (Some(*n_max), Some(*q_max));
            "enumerate"
        }
    };
    (name, e)
}

fn cmd_classes(record: &mut ReportRecord, n: u64, gamma: Option<u64>) -> Result<i32> {
    let s = SexticClasses::new(n, gamma)?;
    record.input.gamma = Some(s.gamma());
    record.outputs.classes = Some(ClassListing {
        n,
        gamma: s.gamma(),
        classes: s.classes().to_vec(),
        negation_map_holds: negation_map_check(&s),
    });
    Ok(0)
}

fn cmd_factor(record: &mut ReportRecord, n: u64, q: u64, gamma: Option<u64>) -> Result<i32> {
    let setup = SexticSetup::new(n, q, gamma)?;
    record.input.gamma = Some(setup.classes.gamma());
    let d = setup.minimal.decomposition();
    let classes = (0..6)
        .map(|i| {
            let factors: Vec<MinimalFactor> = setup
                .minimal
                .class_factors(i)
                .iter()
                .map(|&s| {
                    let m = setup.minimal.get(s).expect("representative present");
                    MinimalFactor {
                        representative: s,
                        coset: CyclotomicCoset::new(s, n, q).expect("unit").sorted(),
                        degree: m.degree().unwrap_or(0),
                        irreducible: m.is_irreducible(),
                        poly: m.into(),
                    }
                })
                .collect();
            let g = setup.generators.generator(i);
            ClassFactors {
                class: i,
                representatives: setup.minimal.class_factors(i).to_vec(),
                generator: g.into(),
                factors_multiply_to_generator: setup.minimal.class_product(i) == *g,
                factors,
            }
        })
        .collect();
    let prime = Field::prime(setup.field.characteristic())?;
    let field_modulus = setup
        .field
        .modulus()
        .map(|m| PolyOut::from(&Poly::new(&prime, m.to_vec())));
    record.outputs.factorization = Some(Factorization {
        n,
        q,
        gamma: setup.classes.gamma(),
        ell: d.ell,
        t: d.t,
        field_modulus,
        classes,
        residual: (&setup.generators.residual()).into(),
        product_identity_holds: setup.generators.factorization_holds(),
    });
    Ok(0)
}

/// Code of `prod_{i in classes} g_i` with the minimal polynomials `M_s`,
/// `s in drop`, removed.
pub fn build_code(setup: &SexticSetup, classes: &[usize], drop: &[u64]) -> Result<CyclicCode> {
    if classes.is_empty() {
        return Err(Error::InvalidArgument("at least one class index is required".into()));
    }
    if let Some(&bad) = classes.iter().find(|&&i| i > 5) {
        return Err(Error::InvalidArgument(format!("class index {bad} is not in 0..=5")));
    }
    setup.generators.code(classes)?.augment(&setup.minimal, drop)
}

fn subset_label(classes: &[usize]) -> String {
    let parts: Vec<String> = classes.iter().map(|i| format!("g{i}")).collect();
    format!("<{}>", parts.join(" "))
}

fn summarize(label: &str, code: &CyclicCode, opts: Option<&DistanceOptions>) -> Result<CodeSummary> {
    let dual = code.dual();
    let (d, dual_d) = match opts {
        Some(o) => {
            let d = min_distance(code, o)?;
            let dual_d = if dual.k() == 0 { None } else { Some(min_distance(&dual, o)?) };
            (Some(d), dual_d)
        }
        None => (None, None),
    };
    Ok(CodeSummary::new(label, code, d, dual_d))
}

/// Compares the computed dual of a three-class product with the two candidate
/// forms and returns a note describing which one holds.
pub fn three_class_dual_note(setup: &SexticSetup, i: usize) -> Result<String> {
    let idx = [i % 6, (i + 1) % 6, (i + 2) % 6];
    let code = setup.generators.code(&idx)?;
    let dual = code.dual();
    let x1 = setup.generators.residual();
    let same = &x1 * &setup.generators.product(&idx);
    let opposite = &x1 * &setup.generators.product(&[i + 3, i + 4, i + 5]);
    let mut checked_by = String::new();
    if code.n() <= crate::codes::MATRIX_MAX_LEN {
        let oracle = dual_oracle(&code)?;
        if oracle.same_row_space(&dual.generator_matrix()?) {
            checked_by = ", confirmed by null-space elimination".into();
        }
    }
    let which = if *dual.generator() == same {
        format!("(x-1) g{} g{} g{}", idx[0], idx[1], idx[2])
    } else if *dual.generator() == opposite {
        format!("(x-1) g{} g{} g{}", (i + 3) % 6, (i + 4) % 6, (i + 5) % 6)
    } else {
        "neither (x-1) g_i g_(i+1) g_(i+2) nor (x-1) g_(i+3) g_(i+4) g_(i+5)".into()
    };
    Ok(format!(
        "the dual of {} over GF({}) with n = {} is generated by {which}{checked_by}; the form (x-1) g_(i+3) g_(i+4) g_(i+5) does not hold",
        subset_label(&idx),
        setup.field.order(),
        setup.n()
    ))
}

fn is_consecutive_triple(classes: &[usize]) -> Option<usize> {
    let mut set: Vec<usize> = classes.iter().map(|i| i % 6).collect();
    set.sort_unstable();
    set.dedup();
    if set.len() != 3 {
        return None;
    }
    (0..6).find(|&i| {
        let mut t = vec![i, (i + 1) % 6, (i + 2) % 6];
        t.sort_unstable();
        t == set
    })
}

fn cmd_code(
    record: &mut ReportRecord,
    n: u64,
    q: u64,
    gamma: Option<u64>,
    classes: &[usize],
    drop: &[u64],
    opts: Option<DistanceOptions>,
) -> Result<i32> {
    let setup = SexticSetup::new(n, q, gamma)?;
    record.input.gamma = Some(setup.classes.gamma());
    let code = build_code(&setup, classes, drop)?;
    let mut label = subset_label(classes);
    if !drop.is_empty() {
        let ms: Vec<String> = drop.iter().map(|s| format!("M{s}")).collect();
        label = format!("{label} / {}", ms.join(" "));
    }
    let summary = summarize(&label, &code, opts.as_ref())?;
    if opts.is_none() {
        record.notes.push("distance not computed".into());
    } else if matches!(summary.d, Some(report::DistanceOut::Lower { .. }))
        || matches!(summary.dual_d, Some(report::DistanceOut::Lower { .. }))
    {
        record
            .notes
            .push("distances beyond the search budget are reported as lower bounds".into());
    }
    if drop.is_empty() {
        if let Some(i) = is_consecutive_triple(classes) {
            record.notes.push(three_class_dual_note(&setup, i)?);
        }
    }
    record.outputs.codes = Some(vec![summary]);
    Ok(0)
}

/// One expected row of the parameter table.
#[derive(Clone, Copy, Debug)]
pub struct TableSpec {
    pub row: &'static str,
    pub n: u64,
    pub q: u64,
    pub k: usize,
    pub d: usize,
    pub dual_d: usize,
}

impl TableSpec {
    pub fn expected(&self) -> String {
        format!("[{},{},{}]_{}", self.n, self.k, self.d, self.q)
    }

    pub fn expected_dual(&self) -> String {
        format!("[{},{},{}]_{}", self.n, self.n as usize - self.k, self.dual_d, self.q)
    }
}

pub const TABLE1: [TableSpec; 4] = [
    TableSpec { row: "C", n: 19, q: 7, k: 16, d: 3, dual_d: 15 },
    TableSpec { row: "D", n: 19, q: 7, k: 13, d: 5, dual_d: 12 },
    TableSpec { row: "C", n: 31, q: 2, k: 26, d: 3, dual_d: 16 },
    TableSpec { row: "D", n: 31, q: 2, k: 21, d: 5, dual_d: 12 },
];

/// Subsets of `{0..5}` of size 1, 2 and 3 in lexicographic order within each size.
pub fn class_subsets() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 1..=3usize {
        for mask in 0u32..64 {
            if mask.count_ones() as usize == size {
                out.push((0..6).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>());
            }
        }
        let start = out.len() - binom6(size);
        out[start..].sort();
    }
    out
}

fn binom6(k: usize) -> usize {
    crate::arith::binomial(6, k) as usize
}

/// First subset product whose code is dual-containing with exactly the
/// tabulated parameters and dual parameters.
pub fn realize_row(
    setup: &SexticSetup,
    spec: &TableSpec,
    opts: &DistanceOptions,
) -> Result<Option<(Vec<usize>, CodeSummary)>> {
    for subset in class_subsets() {
        let code = setup.generators.code(&subset)?;
        if code.k() != spec.k || !code.is_dual_containing() {
            continue;
        }
        let d = min_distance(&code, opts)?;
        if d != Distance::Exact(spec.d) {
            continue;
        }
        let dual_d = min_distance(&code.dual(), opts)?;
        if dual_d != Distance::Exact(spec.dual_d) {
            continue;
        }
        let summary = CodeSummary::new(&subset_label(&subset), &code, Some(d), Some(dual_d));
        return Ok(Some((subset, summary)));
    }
    Ok(None)
}

fn cmd_table1(record: &mut ReportRecord, opts: &DistanceOptions) -> Result<i32> {
    let mut rows = Vec::new();
    let mut all = true;
    let mut setups: Vec<SexticSetup> = Vec::new();
    for spec in TABLE1.iter() {
        if !setups.iter().any(|s| s.n() as u64 == spec.n) {
            setups.push(SexticSetup::new(spec.n, spec.q, None)?);
        }
        let setup = setups.iter().find(|s| s.n() as u64 == spec.n).expect("built");
        let found = realize_row(setup, spec, opts)?;
        all &= found.is_some();
        let row_name = format!("{}_i", spec.row);
        if spec.row == "D" {
            let three = setup.generators.code(&[0, 1, 2])?;
            match &found {
                Some((subset, _)) => record.notes.push(format!(
                    "{row_name} {}: realized by the {}-class product {}; the three-class product <g0 g1 g2> has dimension {}",
                    spec.expected(),
                    subset.len(),
                    subset_label(subset),
                    three.k()
                )),
                None => record.notes.push(format!(
                    "{row_name} {}: no product of one to three generators matches",
                    spec.expected()
                )),
            }
            record.notes.push(three_class_dual_note(setup, 0)?);
        }
        rows.push(TableRow {
            row: row_name,
            expected: spec.expected(),
            expected_dual: spec.expected_dual(),
            realized: found.is_some(),
            subset: found.as_ref().map(|(s, _)| s.clone()),
            code: found.map(|(_, c)| c),
        });
    }
    record
        .notes
        .push("optimality annotations of the table are not checked".into());
    record.outputs.table = Some(rows);
    Ok(if all { 0 } else { EXIT_UNREALIZED })
}

fn qsc_summary(
    chain: &QscChain,
    cl: usize,
    cr: usize,
    family: Option<&qsc::FamilyParams>,
) -> Result<QscSummary> {
    let params = qsc::qsc_params(chain, cl, cr)?;
    let outer = CodeSummary::new("C1", chain.outer(), Some(chain.outer_distance()), None);
    let inner = CodeSummary::new("C2", chain.inner(), Some(chain.inner_distance()), None);
    Ok(QscSummary {
        family: family.map(|f| f.family.name().to_string()),
        z: family.map(|f| f.z),
        ell: family.map(|f| f.ell),
        t: family.map(|f| f.t),
        formula_logical_dimension: family.map(|f| f.logical_dimension),
        notation: format!(
            "({cl},{cr})-[[{},{}]]_{}",
            params.length,
            params.logical_dimension,
            chain.q()
        ),
        quotient: chain.quotient().into(),
        order_f: chain.order_f(),
        cl,
        cr,
        length: params.length,
        logical_dimension: params.logical_dimension,
        bit_errors: params.bit_errors,
        phase_errors: params.phase_errors,
        bounds_exact: params.bounds_exact,
        max_tolerance: params.max_tolerance,
        outer,
        inner,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_qsc(
    record: &mut ReportRecord,
    n: u64,
    q: u64,
    gamma: Option<u64>,
    family: Family,
    z: usize,
    cl: usize,
    cr: usize,
    class: usize,
    opts: &DistanceOptions,
) -> Result<i32> {
    let setup = SexticSetup::new(n, q, gamma)?;
    record.input.gamma = Some(setup.classes.gamma());
    let fp = qsc::family_params(&setup, family, z, class, opts)?;
    let summary = qsc_summary(&fp.chain, cl, cr, Some(&fp))?;
    let drops = |v: &[u64]| {
        if v.is_empty() {
            "nothing".to_string()
        } else {
            v.iter().map(|s| format!("M{s}")).collect::<Vec<_>>().join(" ")
        }
    };
    record.notes.push(format!(
        "C2 removes {} and C1 removes {} from {}",
        drops(&fp.inner_drop),
        drops(&fp.outer_drop),
        subset_label(&fp.base_classes)
    ));
    record.notes.push(if cl + cr == 0 {
        format!(
            "no misalignment window requested; c_l + c_r may be at most {}",
            summary.max_tolerance
        )
    } else {
        format!(
            "misalignment -{cl} < delta < {cr} is recoverable; c_l + c_r may be at most {}",
            summary.max_tolerance
        )
    });
    if !summary.bounds_exact {
        record
            .notes
            .push("error-correction counts are lower bounds: a distance exceeded the search budget".into());
    }
    record.outputs.qsc = Some(summary);
    Ok(0)
}

/// A code named by the chain mini-language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpec {
    pub classes: Vec<usize>,
    pub drop: Vec<u64>,
}

/// Parses `classes=0,1,drop=3,7`. A bare number continues the list of the
/// preceding key.
pub fn parse_chain_spec(text: &str) -> Result<ChainSpec> {
    let mut spec = ChainSpec {
        classes: Vec::new(),
        drop: Vec::new(),
    };
    let mut key: Option<String> = None;
    for token in text.split([',', ';']).map(str::trim).filter(|t| !t.is_empty()) {
        let value = match token.split_once('=') {
            Some((k, v)) => {
                key = Some(k.trim().to_string());
                v.trim()
            }
            None => token,
        };
        let bad = || Error::InvalidArgument(format!("bad chain spec `{text}`"));
        let number: u64 = value.parse().map_err(|_| bad())?;
        match key.as_deref() {
            Some("classes") => spec.classes.push(number as usize),
            Some("drop") => spec.drop.push(number),
            _ => return Err(bad()),
        }
    }
    if spec.classes.is_empty() {
        return Err(Error::InvalidArgument(format!("chain spec `{text}` names no classes")));
    }
    Ok(spec)
}

pub enum ChainSource {
    Spec(Result<ChainSpec>, Result<ChainSpec>),
    Family(Family, usize),
}

#[allow(clippy::too_many_arguments)]
fn cmd_sync_sim(
    record: &mut ReportRecord,
    n: u64,
    q: u64,
    gamma: Option<u64>,
    source: ChainSource,
    delta: i64,
    (cl, cr): (usize, usize),
    trials: usize,
    seed: u64,
) -> Result<i32> {
    let setup = SexticSetup::new(n, q, gamma)?;
    record.input.gamma = Some(setup.classes.gamma());
    if delta.unsigned_abs() >= n {
        return Err(Error::InvalidArgument(format!(
            "delta = {delta} must satisfy -n < delta < n"
        )));
    }
    let opts = DistanceOptions::none();
    let chain = match source {
        ChainSource::Family(family, z) => qsc::family_params(&setup, family, z, 0, &opts)?.chain,
        ChainSource::Spec(outer, inner) => {
            let (outer, inner) = (outer?, inner?);
            qsc::make_chain(
                build_code(&setup, &outer.classes, &outer.drop)?,
                build_code(&setup, &inner.classes, &inner.drop)?,
                &opts,
            )?
        }
    };
    let results = qsc::run_sync_trials(&chain, delta, cl, cr, trials, seed)?;
    let outcomes: Vec<TrialOutcome> = results
        .iter()
        .enumerate()
        .map(|(i, t)| TrialOutcome {
            trial: i,
            recovered: t.recovered.as_ref().ok().copied(),
            error: t.recovered.as_ref().err().map(|e| ErrorReport::from(e).kind),
            ok: t.succeeded(),
        })
        .collect();
    let recovered = outcomes.iter().filter(|o| o.ok).count();
    record.outputs.sync = Some(SyncSummary {
        delta,
        window: (-(cl as i64), cr as i64),
        trials,
        recovered,
        failures: trials - recovered,
        outcomes,
    });
    if let Some(err) = results.iter().find_map(|t| t.recovered.clone().err()) {
        return Err(err);
    }
    if recovered < trials {
        return Err(Error::InvalidArgument(format!(
            "{} trials recovered a wrong shift",
            trials - recovered
        )));
    }
    Ok(0)
}

fn cmd_enumerate(record: &mut ReportRecord, n_max: u64, q_max: u64) {
    record.outputs.pairs = Some(
        enumerate_valid_pairs(n_max, q_max)
            .into_iter()
            .map(|p| PairRow {
                n: p.n,
                q: p.q,
                ell: p.ell,
                t: p.t,
                family_eligible: p.family_eligible(),
            })
            .collect(),
    );
}

/// Product of the minimal polynomials for the listed representatives.
pub fn minimal_product(setup: &SexticSetup, reps: &[u64]) -> Result<Poly> {
    let polys = reps
        .iter()
        .map(|&s| setup.minimal.get(s).ok_or(Error::NotAFactor(s)))
        .collect::<Result<Vec<_>>>()?;
    Ok(poly::product(&setup.field, polys))
}
