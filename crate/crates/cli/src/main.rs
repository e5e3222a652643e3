use std::path::{Path, PathBuf};
use std::process::ExitCode;

use num_complex::Complex64;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qwzeta::algebra::{polymat_det, rational_to_string, PolyMatrix, RatPolynomial, RationalFunction, Rational};
use qwzeta::experiments::{
    apply_lambda_prefactor, builtin_corpus, run_identity_suite, srg_distinguish, CorpusEntry, Operator, SuiteConfig,
};
use qwzeta::graph::{parse_edge_list, parse_graph6, Graph};
use qwzeta::spectra::{self, compare, map_a_spectrum, map_t_spectrum, Comparison, SpectrumMultiset};
use qwzeta::walk::t_matrix;
use qwzeta::zeta::{euler_product_oracle, ihara_reciprocal_bass_form, ihara_reciprocal_edge_form, PowerSeries};
use qwzeta::Error;

#[derive(Parser)]
#[command(name = "qwzeta", version, about = "Exact characteristic polynomials, spectra and zeta functions of Grover walks on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: Options,
}

#[derive(Args, Clone, Copy)]
struct Options {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Multiset comparison tolerance.
    #[arg(long, default_value_t = spectra::DEFAULT_TOLERANCE, global = true, value_parser = positive_f64)]
    tolerance: f64,
    /// Truncation order of zeta series.
    #[arg(long, default_value_t = qwzeta::zeta::DEFAULT_ORDER, global = true, value_parser = positive_usize)]
    order: usize,
    #[arg(long, default_value_t = qwzeta::experiments::DEFAULT_SEED, global = true)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// Graph file: `.g6` is read as graph6, anything else as an edge list.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact characteristic polynomial of an operator.
    Charpoly {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "U")]
        target: Operator,
    },
    /// Numeric spectrum, checked against the closed form where one applies.
    Spectrum {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "U")]
        target: Operator,
    },
    /// Edge and vertex forms of the Ihara zeta reciprocal.
    Zeta {
        #[command(flatten)]
        graph: GraphInput,
        /// Require the cycle-enumeration cross-check; fails with exit code 4
        /// when the graph is too large for it.
        #[arg(long)]
        euler: bool,
    },
    /// Run the identity suite on the built-in corpus or on one graph.
    Verify {
        #[arg(long, value_parser = ["builtin"], conflicts_with_all = ["graph6", "input"])]
        corpus: Option<String>,
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long, conflicts_with = "graph6")]
        input: Option<PathBuf>,
        /// Random weight matrices per graph.
        #[arg(long, default_value_t = 10)]
        weight_trials: usize,
    },
    /// Compare two graphs by A, U+, (U^2)+ and (U^3)+ characteristic polynomials.
    Distinguish {
        /// Graph files (`.g6` or edge list).
        #[arg(num_args = 0..=2)]
        files: Vec<PathBuf>,
        /// Inline graph6 strings, used instead of files.
        #[arg(long, num_args = 1)]
        graph6: Vec<String>,
    },
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeGuard(_) => 4,
            Error::NonzeroRemainder { .. } | Error::InconsistentBound { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

type CmdResult = Result<(String, bool), Failure>;

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(format!("expected an integer >= 1, got {s:?}")),
    }
}

fn read_graph_file(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let graph = if path.extension().is_some_and(|e| e == "g6") {
        parse_graph6(text.trim())
    } else {
        parse_edge_list(&text)
    };
    graph.map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load(graph6: Option<&str>, input: Option<&Path>) -> Result<(String, Graph), Failure> {
    match (graph6, input) {
        (Some(s), None) => Ok((s.to_string(), parse_graph6(s)?)),
        (None, Some(p)) => Ok((p.display().to_string(), read_graph_file(p)?)),
        _ => Err(input_error("give exactly one of --graph6 or --input".into())),
    }
}

#[derive(Serialize)]
struct Header {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    tolerance: f64,
    order: usize,
    seed: u64,
}

impl Header {
    fn new(command: &'static str, o: &Options) -> Self {
        Header {
            tool: "qwzeta",
            version: env!("CARGO_PKG_VERSION"),
            command,
            tolerance: o.tolerance,
            order: o.order,
            seed: o.seed,
        }
    }

    fn text(&self) -> String {
        format!(
            "# qwzeta {} {} tolerance={:e} order={} seed={}\n",
            self.version, self.command, self.tolerance, self.order, self.seed
        )
    }
}

#[derive(Serialize)]
struct GraphSummary {
    source: String,
    n: usize,
    m: usize,
}

impl GraphSummary {
    fn new(source: String, g: &Graph) -> Self {
        GraphSummary {
            source,
            n: g.vertex_count(),
            m: g.edge_count(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn no_csv(command: &str) -> Failure {
    input_error(format!("{command}: csv output carries spectra only; use --format json or text"))
}

#[derive(Serialize)]
struct CharpolyFactored {
    /// Power of `(x^2 - 1)`; negative means it divides.
    prefactor_exponent: i64,
    t_form: RatPolynomial,
    agrees: bool,
}

#[derive(Serialize)]
struct CharpolyDoc {
    header: Header,
    graph: GraphSummary,
    target: &'static str,
    degree: usize,
    coefficients: RatPolynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    factored: Option<CharpolyFactored>,
}

fn cmd_charpoly(o: &Options, input: &GraphInput, target: Operator) -> CmdResult {
    if o.format == Format::Csv {
        return Err(no_csv("charpoly"));
    }
    let (source, g) = load(input.graph6.as_deref(), input.input.as_deref())?;
    let p = qwzeta::algebra::charpoly_exact(&target.matrix(&g)?)?;
    let factored = if target == Operator::U {
        let t = t_matrix(&g)?;
        let n = g.vertex_count();
        let identity = qwzeta::algebra::RationalMatrix::identity(n);
        let two = Rational::from_integer(2.into());
        let det = polymat_det(&PolyMatrix::quadratic(&identity, &t.scale(&-two), &identity)?, 2 * n)?;
        let exponent = g.edge_count() as i64 - n as i64;
        let agrees = apply_lambda_prefactor(&det, exponent)? == p;
        Some(CharpolyFactored {
            prefactor_exponent: exponent,
            t_form: det,
            agrees,
        })
    } else {
        None
    };
    let ok = factored.as_ref().is_none_or(|f| f.agrees);
    let doc = CharpolyDoc {
        header: Header::new("charpoly", o),
        graph: GraphSummary::new(source, &g),
        target: target.name(),
        degree: p.degree().unwrap_or(0),
        coefficients: p,
        factored,
    };
    let out = match o.format {
        Format::Text => {
            let mut s = doc.header.text();
            s.push_str(&format!("det(xI - {}) = {}\n", doc.target, doc.coefficients));
            if let Some(f) = &doc.factored {
                s.push_str(&format!(
                    "= (x^2-1)^({}) * [{}]  {}\n",
                    f.prefactor_exponent,
                    f.t_form,
                    if f.agrees { "agrees" } else { "DISAGREES" }
                ));
            }
            s
        }
        _ => to_json(&doc),
    };
    Ok((out, ok))
}

#[derive(Serialize)]
struct MappedSpectrum {
    from: &'static str,
    values: SpectrumMultiset,
    comparison: Comparison,
}

#[derive(Serialize)]
struct SpectrumDoc {
    header: Header,
    graph: GraphSummary,
    target: &'static str,
    values: SpectrumMultiset,
    #[serde(skip_serializing_if = "Option::is_none")]
    mapped: Option<MappedSpectrum>,
}

fn sorted(s: SpectrumMultiset) -> SpectrumMultiset {
    let tolerance = s.tolerance();
    // Adding 0.0 turns -0.0 into 0.0.
    let mut values: Vec<_> = s.values().iter().map(|z| Complex64::new(z.re + 0.0, z.im + 0.0)).collect();
    values.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    SpectrumMultiset::new(values).with_tolerance(tolerance)
}

fn cmd_spectrum(o: &Options, input: &GraphInput, target: Operator) -> CmdResult {
    let (source, g) = load(input.graph6.as_deref(), input.input.as_deref())?;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let values = sorted(spectra::roots(&qwzeta::algebra::charpoly_exact(&target.matrix(&g)?)?)?.with_tolerance(o.tolerance));
    let real_roots = |op: Operator| -> Result<Vec<f64>, Failure> {
        Ok(spectra::roots(&qwzeta::algebra::charpoly_exact(&op.matrix(&g)?)?)?.real_values()?)
    };
    let closed_form = match target {
        Operator::U if m >= n => Some(("T", map_t_spectrum(&real_roots(Operator::T)?, m, n, o.tolerance)?)),
        Operator::UPlus => {
            let report = g.validate();
            match g.degree_info().regular_degree {
                Some(k) if report.md2 => Some(("A", map_a_spectrum(&real_roots(Operator::A)?, k, m, n, o.tolerance)?)),
                _ => None,
            }
        }
        _ => None,
    };
    let mapped = closed_form.map(|(from, s)| {
        let comparison = compare(&values, &s);
        MappedSpectrum {
            from,
            values: sorted(s),
            comparison,
        }
    });
    let ok = mapped.as_ref().is_none_or(|s| s.comparison.equal);
    let doc = SpectrumDoc {
        header: Header::new("spectrum", o),
        graph: GraphSummary::new(source, &g),
        target: target.name(),
        values,
        mapped,
    };
    let out = match o.format {
        Format::Json => to_json(&doc),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["re", "im", "source"]).map_err(csv_failure)?;
            let mut rows = vec![(doc.target.to_string(), &doc.values)];
            if let Some(s) = &doc.mapped {
                rows.push((format!("{}-map", s.from), &s.values));
            }
            for (label, spectrum) in rows {
                for z in spectrum.values() {
                    w.write_record([z.re.to_string(), z.im.to_string(), label.clone()])
                        .map_err(csv_failure)?;
                }
            }
            String::from_utf8(w.into_inner().map_err(|e| csv_failure(e.into_error()))?).expect("utf-8")
        }
        Format::Text => {
            let mut s = doc.header.text();
            s.push_str(&format!("Spec({}) with {} values\n", doc.target, doc.values.len()));
            for (z, k) in doc.values.clustered() {
                s.push_str(&format!("  {:+.10} {:+.10}i  x{k}\n", z.re, z.im));
            }
            if let Some(mp) = &doc.mapped {
                s.push_str(&format!(
                    "closed form from {}: {} (max pair distance {:e})\n",
                    mp.from,
                    if mp.comparison.equal { "equal" } else { "NOT equal" },
                    mp.comparison.max_pair_distance
                ));
            }
            s
        }
    };
    Ok((out, ok))
}

fn csv_failure(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: format!("csv: {e}"),
    }
}

#[derive(Serialize)]
struct EulerCheck {
    order: usize,
    series: Vec<String>,
    agrees: bool,
}

#[derive(Serialize)]
struct ZetaDoc {
    header: Header,
    graph: GraphSummary,
    edge_form: RatPolynomial,
    vertex_form: RationalFunction,
    equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    euler: Option<EulerCheck>,
}

fn cmd_zeta(o: &Options, input: &GraphInput, force_euler: bool) -> CmdResult {
    if o.format == Format::Csv {
        return Err(no_csv("zeta"));
    }
    let (source, g) = load(input.graph6.as_deref(), input.input.as_deref())?;
    let arcs = g.arcs();
    let edge_form = ihara_reciprocal_edge_form(&arcs)?;
    let vertex_form = ihara_reciprocal_bass_form(&g)?;
    let equal = vertex_form.as_polynomial() == Some(&edge_form);
    let euler = match euler_product_oracle(&arcs, o.order) {
        Ok(series) => {
            let expected = PowerSeries::from_poly(&edge_form, o.order).inverse()?;
            Some(EulerCheck {
                order: o.order,
                series: series.coeffs().iter().map(rational_to_string).collect(),
                agrees: series == expected,
            })
        }
        Err(Error::SizeGuard(_)) if !force_euler => None,
        Err(e) => return Err(e.into()),
    };
    let ok = equal && euler.as_ref().is_none_or(|e| e.agrees);
    let doc = ZetaDoc {
        header: Header::new("zeta", o),
        graph: GraphSummary::new(source, &g),
        edge_form,
        vertex_form,
        equal,
        euler,
    };
    let out = match o.format {
        Format::Text => {
            let mut s = doc.header.text();
            s.push_str(&format!("det(I - t(B-J0)) = {}\n", doc.edge_form.display_in("t")));
            s.push_str(&format!(
                "vertex form: ({}) / ({})  {}\n",
                doc.vertex_form.num().display_in("t"),
                doc.vertex_form.den().display_in("t"),
                if doc.equal { "equal" } else { "NOT equal" }
            ));
            if let Some(e) = &doc.euler {
                s.push_str(&format!(
                    "cycle product to t^{}: {}\n",
                    e.order,
                    if e.agrees { "agrees" } else { "DISAGREES" }
                ));
            }
            s
        }
        _ => to_json(&doc),
    };
    Ok((out, ok))
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    header: Header,
    #[serde(flatten)]
    report: &'a qwzeta::experiments::VerificationReport,
}

fn cmd_verify(
    o: &Options,
    corpus: Option<&str>,
    graph6: Option<&str>,
    input: Option<&Path>,
    weight_trials: usize,
) -> CmdResult {
    if o.format == Format::Csv {
        return Err(no_csv("verify"));
    }
    let entries = if corpus.is_some() {
        builtin_corpus(o.seed)
    } else {
        let (source, g) = load(graph6, input)?;
        vec![CorpusEntry::new(source, g)]
    };
    let config = SuiteConfig {
        seed: o.seed,
        weight_trials,
        tolerance: o.tolerance,
        order: o.order,
        ..SuiteConfig::default()
    };
    let report = run_identity_suite(&entries, &config);
    let out = match o.format {
        Format::Text => format!("{}{}", Header::new("verify", o).text(), report.summary_table()),
        _ => to_json(&VerifyDoc {
            header: Header::new("verify", o),
            report: &report,
        }),
    };
    Ok((out, report.all_passed()))
}

#[derive(Serialize)]
struct DistinguishDoc {
    header: Header,
    first: GraphSummary,
    second: GraphSummary,
    #[serde(flatten)]
    distinction: qwzeta::experiments::Distinction,
}

fn cmd_distinguish(o: &Options, files: &[PathBuf], graph6: &[String]) -> CmdResult {
    if o.format == Format::Csv {
        return Err(no_csv("distinguish"));
    }
    let graphs: Vec<(String, Graph)> = match (files.len(), graph6.len()) {
        (2, 0) => files
            .iter()
            .map(|p| Ok((p.display().to_string(), read_graph_file(p)?)))
            .collect::<Result<_, Failure>>()?,
        (0, 2) => graph6
            .iter()
            .map(|s| Ok((s.clone(), parse_graph6(s)?)))
            .collect::<Result<_, Failure>>()?,
        _ => return Err(input_error("distinguish needs two graph files or two --graph6 strings".into())),
    };
    let (first, second) = (&graphs[0], &graphs[1]);
    let doc = DistinguishDoc {
        header: Header::new("distinguish", o),
        first: GraphSummary::new(first.0.clone(), &first.1),
        second: GraphSummary::new(second.0.clone(), &second.1),
        distinction: srg_distinguish(&first.1, &second.1)?,
    };
    let out = match o.format {
        Format::Text => {
            let mut s = doc.header.text();
            for l in &doc.distinction.details {
                s.push_str(&format!(
                    "level {} {:<4} {}\n",
                    l.level,
                    l.operator,
                    if l.equal { "equal" } else { "differ" }
                ));
            }
            match doc.distinction.level {
                Some(level) => s.push_str(&format!("distinguished at level {level}\n")),
                None => s.push_str("not distinguished\n"),
            }
            s
        }
        _ => to_json(&doc),
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = &cli.options;
    let result = match &cli.command {
        Command::Charpoly { graph, target } => cmd_charpoly(o, graph, *target),
        Command::Spectrum { graph, target } => cmd_spectrum(o, graph, *target),
        Command::Zeta { graph, euler } => cmd_zeta(o, graph, *euler),
        Command::Verify {
            corpus,
            graph6,
            input,
            weight_trials,
        } => {
            if corpus.is_none() && graph6.is_none() && input.is_none() {
                Err(input_error("verify needs --corpus builtin, --graph6 or --input".into()))
            } else {
                cmd_verify(o, corpus.as_deref(), graph6.as_deref(), input.as_deref(), *weight_trials)
            }
        }
        Command::Distinguish { files, graph6 } => cmd_distinguish(o, files, graph6),
    };
    match result {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("qwzeta: identity violated");
                ExitCode::from(3)
            }
        }
        Err(f) => {
            eprintln!("qwzeta: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
