use std::fmt::{self, Display, Write as _};
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use dqw_core::algebra::{
    bernoulli_numbers, bernoulli_polynomial, inv_factorial, modified_identity_sums, word_to_string,
    BernoulliVariant, EpsSeries, Polynomial, Rational,
};
use dqw_core::free_lie::{hausdorff_linear_in_y, hausdorff_series, BracketTree};
use dqw_core::graph::{classify, enumerate_graphs, to_dot, AdmissibleGraph, GraphClass};
use dqw_core::kontsevich::{
    assemble_linear_star, assemble_xn_star_y, loop_vanishing_report, WeightSource,
};
use dqw_core::lie::{builtin_algebra, moyal_matrix, PoissonStructure, StructureConstants};
use dqw_core::star::{
    check_associativity, check_equivalence, seeded_polynomials, CbhStar, CentralSpecialization,
    EquivalenceMode, MoyalStar, StarProduct, UeaStar, XnMethod, XnStarY,
};
use dqw_core::weight::{weight_report, AnglePolynomial};

use crate::args::{
    AlgebraCommand, Command, Format, GraphsCommand, Method, Sampling, VerifyCommand, Weights,
    XnyMethod,
};

/// What a command produced. `ok == false` means a check ran and failed.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub dot: Option<String>,
    pub ok: bool,
}

impl Report {
    fn new(command: &str, text: String, mut json: Value) -> Self {
        if let Value::Object(m) = &mut json {
            m.insert("schema".into(), json!(1));
            m.insert("command".into(), json!(command));
        }
        Report {
            text,
            json,
            dot: None,
            ok: true,
        }
    }

    fn failing_if(mut self, failed: bool) -> Self {
        self.ok = !failed;
        self
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Bad flags or unreadable input; exit 2.
    Usage(String),
    /// The computation itself refused or broke; exit 1.
    Runtime(String),
}

impl Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Runtime(m) => f.write_str(m),
        }
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn usage<E: Display>(what: &str) -> impl FnOnce(E) -> Failure + '_ {
    move |e| Failure::Usage(format!("{what}: {e}"))
}

pub fn run(cmd: &Command, format: Format) -> Result<Report, Failure> {
    if format == Format::Dot && !matches!(cmd, Command::Graphs(_)) {
        return Err(Failure::Usage(
            "--format dot is only available for `graphs enumerate`".into(),
        ));
    }
    match cmd {
        Command::Bernoulli {
            max,
            modified,
            poly,
        } => bernoulli(*max, *modified, *poly),
        Command::Hausdorff {
            degree,
            linear_in_y,
        } => hausdorff(*degree, *linear_in_y),
        Command::Algebra(a) => algebra(a),
        Command::Star {
            method,
            algebra,
            f,
            g,
            order,
            weights,
        } => star(*method, algebra, f, g, *order, *weights),
        Command::Xny {
            n,
            method,
            algebra,
            order,
            x,
            y,
        } => xny(*n, *method, algebra, order.unwrap_or(*n), x, y),
        Command::Graphs(GraphsCommand::Enumerate { n, classify }) => graphs(*n, *classify, format),
        Command::Weight { graph } => weight(graph),
        Command::Verify(v) => verify(v),
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

fn series_json(s: &EpsSeries) -> Value {
    s.to_pairs()
        .into_iter()
        .map(|(k, c)| json!({"eps": k, "coeff": c}))
        .collect()
}

fn load_algebra(spec: &str) -> Result<StructureConstants, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(usage(spec))?;
        StructureConstants::from_json(&text).map_err(usage(spec))
    } else {
        builtin_algebra(spec).map_err(usage("--algebra"))
    }
}

fn parse_poly(flag: &str, text: &str, nvars: usize) -> Result<Polynomial, Failure> {
    Polynomial::parse(text, nvars).map_err(usage(flag))
}

fn parse_linear(flag: &str, text: &str, nvars: usize) -> Result<Vec<Rational>, Failure> {
    let p = parse_poly(flag, text, nvars)?;
    if !p.is_linear_form() || p.is_zero() {
        return Err(Failure::Usage(format!(
            "{flag}: `{text}` is not a nonzero linear form"
        )));
    }
    Ok(p.linear_coefficients())
}

fn source(w: Weights) -> WeightSource {
    match w {
        Weights::Cbh => WeightSource::Cbh,
        Weights::Independent => WeightSource::Independent,
    }
}

/// The product together with any types the assembly had to leave out.
fn build_star(
    method: Method,
    c: &StructureConstants,
    order: usize,
    weights: Weights,
) -> Result<(Box<dyn StarProduct + Send>, Vec<String>), Failure> {
    Ok(match method {
        Method::Moyal => {
            let m = moyal_matrix(c).map_err(usage("--algebra"))?;
            let alpha = PoissonStructure::constant(&m)?;
            (Box::new(MoyalStar::new(&alpha, order)?), Vec::new())
        }
        Method::Uea => (Box::new(UeaStar::new(c, order)?), Vec::new()),
        Method::Cbh => (Box::new(CbhStar::new(c, order)?), Vec::new()),
        Method::Kontsevich => {
            let k = assemble_linear_star(c, order, source(weights))?;
            let missing = k.uncovered().to_vec();
            (Box::new(k), missing)
        }
    })
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Moyal => "moyal",
        Method::Uea => "uea",
        Method::Cbh => "cbh",
        Method::Kontsevich => "kontsevich",
    }
}

fn uncovered_note(text: &mut String, missing: &[String]) {
    if !missing.is_empty() {
        writeln!(text, "uncovered types left out: {}", missing.join(", ")).unwrap();
    }
}

fn bernoulli(max: usize, modified: bool, poly: bool) -> Result<Report, Failure> {
    let variant = if modified {
        BernoulliVariant::Modified
    } else {
        BernoulliVariant::Standard
    };
    let name = if modified { "Bhat" } else { "B" };
    let mut text = String::new();
    if poly {
        let ps: Vec<String> = (0..=max)
            .map(|k| AnglePolynomial::from_poly(bernoulli_polynomial(k, variant)).to_string())
            .collect();
        for (k, p) in ps.iter().enumerate() {
            writeln!(text, "{name}_{k}(t) = {p}").unwrap();
        }
        let json = json!({"variant": variant_name(modified), "polynomials": ps});
        return Ok(Report::new("bernoulli", text, json));
    }
    let b = bernoulli_numbers(max, variant);
    for (k, v) in b.iter().enumerate() {
        writeln!(text, "{name}_{k} = {v}").unwrap();
    }
    let json = json!({"variant": variant_name(modified), "values": strings(&b)});
    Ok(Report::new("bernoulli", text, json))
}

fn variant_name(modified: bool) -> &'static str {
    if modified {
        "modified"
    } else {
        "standard"
    }
}

fn hausdorff(degree: usize, linear_in_y: bool) -> Result<Report, Failure> {
    if degree == 0 {
        return Err(Failure::Usage("--degree must be at least 1".into()));
    }
    if linear_in_y {
        let c = hausdorff_linear_in_y(degree);
        let mut text = String::new();
        for (k, v) in c.iter().enumerate() {
            writeln!(text, "ad_X^{k}(Y): {v}").unwrap();
        }
        return Ok(Report::new(
            "hausdorff",
            text,
            json!({"linear_in_y": strings(&c)}),
        ));
    }
    let h = hausdorff_series(degree);
    let terms: Vec<Value> = h
        .terms()
        .map(|(w, c)| {
            json!({
                "word": word_to_string(w),
                "bracket": BracketTree::standard(w).to_string(),
                "coeff": c.to_string(),
            })
        })
        .collect();
    Ok(Report::new(
        "hausdorff",
        format!("{h}\n"),
        json!({"degree": degree, "terms": terms}),
    ))
}

fn algebra(cmd: &AlgebraCommand) -> Result<Report, Failure> {
    match cmd {
        AlgebraCommand::Validate { file } => {
            let shown = file.display().to_string();
            let text = std::fs::read_to_string(file).map_err(usage(&shown))?;
            let c = StructureConstants::from_json(&text).map_err(usage(&shown))?;
            let r = c.validate();
            let yes = |b: bool| if b { "yes" } else { "no" };
            let text = format!(
                "{} (dim {})\nantisymmetric: {}\njacobi: {}\ntriangular nilpotent: {}\n",
                c.name(),
                c.dim(),
                yes(r.antisymmetric),
                yes(r.jacobi),
                yes(r.triangular_nilpotent)
            );
            let json = json!({
                "name": c.name(),
                "dim": c.dim(),
                "antisymmetric": r.antisymmetric,
                "jacobi": r.jacobi,
                "triangular_nilpotent": r.triangular_nilpotent,
            });
            Ok(Report::new("algebra validate", text, json).failing_if(!r.is_lie()))
        }
        AlgebraCommand::Export { name } => {
            let c = builtin_algebra(name).map_err(usage("name"))?;
            let body = c.to_json();
            let json: Value = serde_json::from_str(&body).expect("own output parses");
            let mut r = Report::new("algebra export", format!("{body}\n"), Value::Null);
            // the file format already carries its own schema field
            r.json = json;
            Ok(r)
        }
    }
}

fn star(
    method: Method,
    algebra: &str,
    f: &str,
    g: &str,
    order: usize,
    weights: Weights,
) -> Result<Report, Failure> {
    let c = load_algebra(algebra)?;
    let (s, missing) = build_star(method, &c, order, weights)?;
    let d = s.nvars();
    let fp = parse_poly("--f", f, d)?;
    let gp = parse_poly("--g", g, d)?;
    let r = s.star(&fp, &gp)?;
    let mut text = format!("{r}\n");
    uncovered_note(&mut text, &missing);
    let json = json!({
        "method": method_name(method),
        "algebra": c.name(),
        "order": order,
        "f": fp.to_string(),
        "g": gp.to_string(),
        "result": series_json(&r),
        "uncovered": missing,
    });
    Ok(Report::new("star", text, json))
}

fn xny(
    n: usize,
    method: XnyMethod,
    algebra: &str,
    order: usize,
    x: &str,
    y: &str,
) -> Result<Report, Failure> {
    let c = load_algebra(algebra)?;
    let d = c.dim();
    let xv = parse_linear("--x", x, d)?;
    let yv = parse_linear("--y", y, d)?;
    let (closed, series) = match method {
        XnyMethod::Cbh | XnyMethod::Uea => {
            let m = if method == XnyMethod::Cbh {
                XnMethod::CbhClosed
            } else {
                XnMethod::UeaClosed
            };
            let t = XnStarY::new(n, order, m)?;
            let s = t.evaluate(&c, &xv, &yv)?;
            (Some(t), s)
        }
        XnyMethod::Assembled => (None, assemble_xn_star_y(&c, n, order, &xv, &yv)?),
    };
    let mut text = String::new();
    if let Some(t) = &closed {
        writeln!(text, "{t}").unwrap();
    }
    writeln!(text, "{series}").unwrap();
    let json = json!({
        "n": n,
        "order": order,
        "algebra": c.name(),
        "closed_form": closed.as_ref().map(|t| t.to_string()),
        "coefficients": closed.as_ref().map(|t| strings(&t.coeffs)),
        "result": series_json(&series),
    });
    Ok(Report::new("xny", text, json))
}

/// Exhaustive enumeration gets out of hand past this many aerial vertices.
const ENUMERATE_MAX: usize = 4;

fn class_flags(c: &GraphClass) -> String {
    let flags = [
        (c.has_loop, "loop"),
        (c.prime, "prime"),
        (c.sym_admissible, "sym-admissible"),
        (c.lie_admissible, "lie-admissible"),
        (c.w_computable, "w-computable"),
    ];
    let set: Vec<&str> = flags.iter().filter(|f| f.0).map(|f| f.1).collect();
    if set.is_empty() {
        "-".into()
    } else {
        set.join(",")
    }
}

fn graphs(n: usize, with_class: bool, format: Format) -> Result<Report, Failure> {
    if n > ENUMERATE_MAX {
        return Err(Failure::Usage(format!("--n is limited to {ENUMERATE_MAX}")));
    }
    let all: Vec<AdmissibleGraph> = enumerate_graphs(n).collect();
    let classes: Vec<Option<GraphClass>> = all
        .par_iter()
        .map(|g| with_class.then(|| classify(g)))
        .collect();
    let mut text = String::new();
    let mut rows = Vec::with_capacity(all.len());
    for (g, c) in all.iter().zip(&classes) {
        match c {
            Some(c) => {
                writeln!(text, "{g}\t{}", class_flags(c)).unwrap();
                rows.push(json!({"graph": g.to_string(), "class": c}));
            }
            None => {
                writeln!(text, "{g}").unwrap();
                rows.push(json!({"graph": g.to_string()}));
            }
        }
    }
    let mut r = Report::new("graphs enumerate", text, json!({"n": n, "graphs": rows}));
    if format == Format::Dot {
        let dots: Vec<String> = all
            .par_iter()
            .enumerate()
            .map(|(i, g)| to_dot(g, &format!("g{}", i + 1)))
            .collect();
        r.dot = Some(dots.concat());
    }
    Ok(r)
}

fn weight(spec: &str) -> Result<Report, Failure> {
    let g = AdmissibleGraph::parse(spec).map_err(usage("--graph"))?;
    let r = weight_report(&g)?;
    let text = format!(
        "graph: {}\nw_I = {}\nw_K = {}\nclass: {}\n",
        r.graph,
        r.weight.w_i,
        r.weight.w_k,
        class_flags(&r.class)
    );
    let json = serde_json::to_value(&r).expect("serializable");
    Ok(Report::new("weight", text, json))
}

fn verify(cmd: &VerifyCommand) -> Result<Report, Failure> {
    match cmd {
        VerifyCommand::Assoc {
            method,
            algebra,
            order,
            degree,
            weights,
            sampling,
        } => verify_assoc(*method, algebra, *order, *degree, *weights, sampling),
        VerifyCommand::Equiv {
            a,
            b,
            algebra,
            degree,
            order,
            xny,
            weights,
            sampling,
        } => verify_equiv(*a, *b, algebra, *degree, *order, *xny, *weights, sampling),
        VerifyCommand::Identities { max } => verify_identities(*max),
        VerifyCommand::Loops { algebra, max_n } => verify_loops(algebra, *max_n),
    }
}

fn verify_assoc(
    method: Method,
    algebra: &str,
    order: usize,
    degree: u32,
    weights: Weights,
    sampling: &Sampling,
) -> Result<Report, Failure> {
    let c = load_algebra(algebra)?;
    let (s, missing) = build_star(method, &c, order, weights)?;
    let polys = seeded_polynomials(s.nvars(), 3 * sampling.trials, degree, sampling.seed);
    let residuals: Vec<EpsSeries> = polys
        .par_chunks(3)
        .map(|t| check_associativity(&s, &t[0], &t[1], &t[2]))
        .collect::<Result<_, _>>()?;
    let bad: Vec<usize> = (0..residuals.len())
        .filter(|&i| !residuals[i].is_zero())
        .collect();
    let mut text = if bad.is_empty() {
        format!(
            "associative on {} triples to eps^{order}\n",
            residuals.len()
        )
    } else {
        let i = bad[0];
        format!(
            "NONZERO residual on {} of {} triples; first: f = {}, g = {}, h = {}: {}\n",
            bad.len(),
            residuals.len(),
            polys[3 * i],
            polys[3 * i + 1],
            polys[3 * i + 2],
            residuals[i]
        )
    };
    uncovered_note(&mut text, &missing);
    let json = json!({
        "method": method_name(method),
        "algebra": c.name(),
        "order": order,
        "seed": sampling.seed,
        "triples": residuals.len(),
        "nonzero": bad,
        "uncovered": missing,
    });
    Ok(Report::new("verify assoc", text, json).failing_if(!bad.is_empty()))
}

#[allow(clippy::too_many_arguments)]
fn verify_equiv(
    a: Method,
    b: Method,
    algebra: &str,
    degree: u32,
    order: usize,
    xny: bool,
    weights: Weights,
    sampling: &Sampling,
) -> Result<Report, Failure> {
    let c = load_algebra(algebra)?;
    let (sa, ma) = build_star(a, &c, order, weights)?;
    let (sb, mb) = build_star(b, &c, order, weights)?;
    let mode = if xny {
        EquivalenceMode::XnyPolarized {
            max_n: degree,
            trials: sampling.trials,
            seed: sampling.seed,
        }
    } else {
        EquivalenceMode::MonomialPairs {
            degree_bound: degree,
        }
    };
    // a Moyal product lives on one coordinate fewer; the other side is read
    // with its central coordinate set to 1
    let report = match (a == Method::Moyal, b == Method::Moyal) {
        (false, true) => check_equivalence(&CentralSpecialization { inner: sa }, &sb, mode)?,
        (true, false) => check_equivalence(&sa, &CentralSpecialization { inner: sb }, mode)?,
        _ => check_equivalence(&sa, &sb, mode)?,
    };
    let equal = report.equal();
    let mut text = String::from(if equal { "EQUAL\n" } else { "NOT EQUAL\n" });
    writeln!(
        text,
        "{} vs {} on {}: {} pairs compared to eps^{order}",
        method_name(a),
        method_name(b),
        c.name(),
        report.compared
    )
    .unwrap();
    for m in report.mismatches.iter().take(5) {
        writeln!(
            text,
            "  f = {}, g = {}: difference {}",
            m.f, m.g, m.difference
        )
        .unwrap();
    }
    let missing: Vec<String> = ma.into_iter().chain(mb).collect();
    uncovered_note(&mut text, &missing);
    let mut json = serde_json::to_value(&report).expect("serializable");
    json["equal"] = json!(equal);
    json["a"] = json!(method_name(a));
    json["b"] = json!(method_name(b));
    json["algebra"] = json!(c.name());
    json["order"] = json!(order);
    Ok(Report::new("verify equiv", text, json).failing_if(!equal))
}

/// The linear-in-Y check needs the full series to degree k + 1, which grows fast.
const HAUSDORFF_K_MAX: usize = 10;

fn verify_identities(max: usize) -> Result<Report, Failure> {
    let mut failures = Vec::new();
    for n in 1..=max {
        let (plain, alt) = modified_identity_sums(n);
        if plain != Rational::from_integer(1.into()) || alt != Rational::from_integer(0.into()) {
            failures.push(format!("bernoulli sums at n = {n}: {plain}, {alt}"));
        }
    }
    let k_max = max.min(HAUSDORFF_K_MAX);
    let lin = hausdorff_linear_in_y(k_max);
    let b = bernoulli_numbers(k_max, BernoulliVariant::Modified);
    for k in 0..=k_max {
        if lin[k] != &b[k] * inv_factorial(k as u32) {
            failures.push(format!("ad_X^{k}(Y) coefficient {}", lin[k]));
        }
    }
    let mut text = if failures.is_empty() {
        format!("identities hold for n <= {max}; Hausdorff linear part for k <= {k_max}\n")
    } else {
        String::new()
    };
    for f in &failures {
        writeln!(text, "FAILED {f}").unwrap();
    }
    let json = json!({"max": max, "hausdorff_k_max": k_max, "failures": failures});
    Ok(Report::new("verify identities", text, json).failing_if(!failures.is_empty()))
}

fn verify_loops(algebra: &str, max_n: usize) -> Result<Report, Failure> {
    if max_n > 3 {
        return Err(Failure::Usage("--max-n is limited to 3".into()));
    }
    let c = load_algebra(algebra)?;
    let r = loop_vanishing_report(&c, max_n);
    let nonzero: Vec<&str> = r.nonzero().map(|e| e.graph.as_str()).collect();
    let mut text = format!(
        "{}: {} loop types up to {max_n} vertices, {} nonzero; triangular nilpotent: {}\n",
        r.algebra,
        r.entries.len(),
        nonzero.len(),
        if r.triangular_nilpotent { "yes" } else { "no" }
    );
    for g in &nonzero {
        writeln!(text, "  nonzero: {g}").unwrap();
    }
    let failed = r.triangular_nilpotent && !r.all_zero();
    let json = serde_json::to_value(&r).expect("serializable");
    Ok(Report::new("verify loops", text, json).failing_if(failed))
}
