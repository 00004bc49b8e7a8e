//! `valdim`: build, verify and search for dependence witnesses.
//!
//! Exit status is 0 when every check passes, 1 when a property fails or no
//! witness could be built, and 2 on usage or parse errors.

use std::cmp::Ordering;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};

use valdim::order::{classify, compare_exponents, validate_matrix};
use valdim::suite::WitnessText;
use valdim::text::{
    monoid_member, parse_exponents, parse_fraction_list, parse_matrix, parse_poly, ElementSyntax,
};
use valdim::witness::{
    homogeneous_relation_search, homogenize_witness, independence_search, lex_witness_pair, overring_lex_witness,
    power_products, tdim_witness, transport_witness_to_lex, vdim_witness, verify_witness_with, witness_trivial,
    witness_w_preorder, OverringElement, ValuationOracle, VdimOracle,
};
use valdim::{
    run_suite, Domain, Error, Linearize, OrderMatrix, QuadScalar, RElem, RingKind, SuiteName, VElem, WElem, Witness,
    WitnessKind,
};

#[derive(Parser)]
#[command(name = "valdim", version, about = "Dependence witnesses over exotic valuation rings")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two exponent vectors under a matrix preorder.
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long = "expA", alias = "exp-a", allow_hyphen_values = true)]
        exp_a: String,
        #[arg(long = "expB", alias = "exp-b", allow_hyphen_values = true)]
        exp_b: String,
    },
    /// Classify an order matrix.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Build a witness with the constructor for the ring and matrix.
    Witness {
        #[arg(long, default_value = "V")]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        elements: String,
    },
    /// Check a claimed witness.
    Verify {
        #[arg(long, default_value = "V")]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        elements: String,
        /// `order` or `preorder`; defaults from the matrix.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Lex witness in V through a witness for the power products under a
    /// square nonnegative integer matrix.
    Transport {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        elements: String,
        /// An order witness for the power products; built when omitted.
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Run the valuative-dimension pipeline over V.
    Vdim {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        elements: String,
    },
    /// Lex witness for quotients of elements of V.
    Overring {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        numerators: String,
        #[arg(long, allow_hyphen_values = true)]
        denominators: String,
    },
    /// Turn a witness under the all-ones row into a homogeneous relation.
    Homogenize {
        #[arg(long, default_value = "V")]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        elements: String,
    },
    /// Exhaustive bounded search for a witness or a homogeneous relation.
    Search {
        #[arg(long, default_value = "V")]
        ring: String,
        /// Required unless `--homogeneous` is given.
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        elements: String,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
        /// Coefficient pool; defaults to 0, ±1 and ± each element.
        #[arg(long, allow_hyphen_values = true)]
        pool: Option<String>,
        /// Search homogeneous relations with a unit coefficient instead.
        #[arg(long)]
        homogeneous: bool,
    },
    /// Run a seeded property suite.
    Suite {
        #[arg(long)]
        name: String,
        #[arg(long, env = "VALDIM_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        scale: usize,
        /// Also write the JSON report here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

enum Fail {
    Usage(String),
    Property(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Property(e.to_string())
    }
}

/// Errors in reading the command line.
fn input<T>(r: valdim::Result<T>) -> Result<T, Fail> {
    r.map_err(|e| Fail::Usage(e.to_string()))
}

struct Output {
    ok: bool,
    json: Value,
    text: String,
}

fn ring(text: &str) -> Result<RingKind, Fail> {
    input(text.parse())
}

fn matrix(text: &str) -> Result<OrderMatrix, Fail> {
    input(parse_matrix(text))
}

/// Elements of the fraction field that pass `member`.
fn members<T: ElementSyntax>(text: &str, ring: RingKind, member: fn(&T) -> bool) -> Result<Vec<T>, Fail> {
    let xs = input(parse_fraction_list::<T>(text))?;
    match xs.iter().find(|x| !member(x)) {
        Some(x) => Err(Fail::Usage(format!("{x} is not an element of {ring}"))),
        None => Ok(xs),
    }
}

fn texts<T: std::fmt::Display>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn witness_text<T: Domain>(w: &Witness<T>) -> String {
    format!(
        "witness: {}\norder: {}\nelements: {}\nkind: {}",
        w.poly,
        w.order,
        texts(&w.elements).join(", "),
        w.kind
    )
}

/// Reports a built witness after checking it again.
fn witness_output<T: Domain>(command: Value, w: &Witness<T>, member: fn(&T) -> bool) -> Output {
    let verdict = verify_witness_with(w, member);
    let mut text = witness_text(w);
    text.push_str(&format!("\nverified: {}", if verdict.passed { "yes" } else { "no" }));
    if let Some(reason) = &verdict.reason {
        text.push_str(&format!("\nreason: {reason}"));
    }
    Output {
        ok: verdict.passed,
        json: json!({
            "command": command,
            "witness": WitnessText::from(w),
            "verified": verdict.passed,
            "reason": verdict.reason,
        }),
        text,
    }
}

fn compare(m: &str, a: &str, b: &str) -> Result<Output, Fail> {
    let om = matrix(m)?;
    let (e, f) = (input(parse_exponents(a))?, input(parse_exponents(b))?);
    let ord = input(compare_exponents(&om, &e.0, &f.0))?;
    let (word, symbol) = match ord {
        Ordering::Less => ("less", "<"),
        Ordering::Equal => ("equal", "="),
        Ordering::Greater => ("greater", ">"),
    };
    Ok(Output {
        ok: true,
        json: json!({ "command": { "verb": "compare", "matrix": m, "expA": a, "expB": b }, "result": word }),
        text: format!("{e} {symbol} {f}"),
    })
}

fn classify_cmd(m: &str) -> Result<Output, Fail> {
    let om = matrix(m)?;
    let class = classify(&om);
    let valid = validate_matrix(&om);
    let rank = om.rank();
    Ok(Output {
        ok: true,
        json: json!({ "command": { "verb": "classify", "matrix": m }, "class": class, "valid": valid, "rank": rank }),
        text: format!(
            "rational: {}\ngraded: {}\ntotal order: {}\nvalid: {valid}\nrank: {rank}",
            class.is_rational, class.is_graded, class.is_total_order
        ),
    })
}

/// `Some(true)` for lex with `X1` first, `Some(false)` for `X2` first.
fn pair_lex(m: &OrderMatrix) -> Option<bool> {
    if *m == OrderMatrix::lex(2) {
        Some(true)
    } else if *m == OrderMatrix::lex_with_priority(&[1, 0]) {
        Some(false)
    } else {
        None
    }
}

fn single<T: Domain>(a: &T) -> Result<Witness<T>, Fail> {
    witness_trivial(a).ok_or_else(|| Fail::Property(format!("{a} is a nonzero nonunit: no single-variable witness")))
}

fn witness_cmd(r: &str, m: &str, e: &str) -> Result<Output, Fail> {
    let kind = ring(r)?;
    let om = matrix(m)?;
    let command = json!({ "verb": "witness", "ring": kind.name(), "matrix": m, "elements": e });
    match kind {
        RingKind::V => {
            let a = members::<VElem>(e, kind, Domain::contains)?;
            check_arity(&om, a.len())?;
            let w = match (a.len(), pair_lex(&om)) {
                (1, _) => single(&a[0])?,
                (2, Some(x_greater)) => lex_witness_pair(&a[0], &a[1], x_greater)?,
                _ => vdim_witness(&om, &a, &ValuationOracle)?.witness,
            };
            Ok(witness_output(command, &w, Domain::contains))
        }
        RingKind::R => {
            let a = members::<RElem>(e, kind, Domain::contains)?;
            check_arity(&om, a.len())?;
            let w = match (a.len(), pair_lex(&om)) {
                (1, _) => single(&a[0])?,
                (2, Some(x_greater)) => lex_witness_pair(&a[0], &a[1], x_greater)?,
                _ => return Err(Fail::Property("witnesses in R are built for lex orders on pairs".into())),
            };
            Ok(witness_output(command, &w, Domain::contains))
        }
        RingKind::W => {
            let a = members::<WElem>(e, kind, Domain::contains)?;
            check_arity(&om, a.len())?;
            let w = match a.len() {
                1 => single(&a[0])?,
                2 => match a.iter().position(Zero::is_zero) {
                    Some(i) => zero_witness(&om, &a, i),
                    None => witness_w_preorder(&om, &a[0], &a[1])?,
                },
                _ => return Err(Fail::Property("witnesses in W are built for pairs".into())),
            };
            Ok(witness_output(command, &w, Domain::contains))
        }
        RingKind::MonoidQ | RingKind::MonoidQu => {
            Err(Fail::Property(format!("no witness constructor for {kind}; use verify or search")))
        }
    }
}

/// `X_i` for the zero entry `a_i`.
fn zero_witness<T: Domain>(m: &OrderMatrix, a: &[T], i: usize) -> Witness<T> {
    Witness {
        poly: valdim::LaurentPoly::var(a.len(), i),
        order: m.clone(),
        elements: a.to_vec(),
        kind: WitnessKind::PreorderWitness,
    }
}

fn check_arity(m: &OrderMatrix, n: usize) -> Result<(), Fail> {
    if m.cols() != n {
        return Err(Fail::Usage(format!("matrix has {} columns for {n} elements", m.cols())));
    }
    Ok(())
}

fn verify_in<T: ElementSyntax>(kind: RingKind, m: &str, p: &str, e: &str, k: Option<&str>, member: fn(&T) -> bool) -> Result<Output, Fail> {
    let om = matrix(m)?;
    let elements = members::<T>(e, kind, member)?;
    check_arity(&om, elements.len())?;
    let poly = input(parse_poly::<T>(p, elements.len()))?;
    let wk = match k {
        Some(k) => input(k.parse())?,
        None if classify(&om).is_total_order => WitnessKind::OrderWitness,
        None => WitnessKind::PreorderWitness,
    };
    let w = Witness { poly, order: om, elements, kind: wk };
    let verdict = verify_witness_with(&w, member);
    let mut text = format!("{}\nverdict: {}", witness_text(&w), if verdict.passed { "pass" } else { "fail" });
    if let Some(reason) = &verdict.reason {
        text.push_str(&format!("\nreason: {reason}"));
    }
    Ok(Output {
        ok: verdict.passed,
        json: json!({
            "command": { "verb": "verify", "ring": kind.name(), "matrix": m, "poly": p, "elements": e, "kind": wk },
            "verdict": if verdict.passed { "pass" } else { "fail" },
            "reason": verdict.reason,
        }),
        text,
    })
}

fn verify_cmd(r: &str, m: &str, p: &str, e: &str, k: Option<&str>) -> Result<Output, Fail> {
    let kind = ring(r)?;
    match kind {
        RingKind::V => verify_in::<VElem>(kind, m, p, e, k, Domain::contains),
        RingKind::R => verify_in::<RElem>(kind, m, p, e, k, Domain::contains),
        RingKind::W => verify_in::<WElem>(kind, m, p, e, k, Domain::contains),
        RingKind::MonoidQ => verify_in::<VElem>(kind, m, p, e, k, monoid_member),
        RingKind::MonoidQu => verify_in::<RElem>(kind, m, p, e, k, monoid_member),
    }
}

fn v_elements(e: &str) -> Result<Vec<VElem>, Fail> {
    members::<VElem>(e, RingKind::V, Domain::contains)
}

fn transport_cmd(m: &str, e: &str, p: Option<&str>) -> Result<Output, Fail> {
    let om = matrix(m)?;
    let a = v_elements(e)?;
    check_arity(&om, a.len())?;
    let command = json!({ "verb": "transport", "ring": "V", "matrix": m, "elements": e, "poly": p });
    let w = match p {
        Some(p) => {
            let int = valdim::order::integerize(&om).map_err(|e| Fail::Usage(e.to_string()))?;
            let b = power_products(&a, &int)?;
            let poly = input(parse_poly::<VElem>(p, a.len()))?;
            let given = Witness { poly, order: om, elements: b, kind: WitnessKind::OrderWitness };
            transport_witness_to_lex(&given, &a)?
        }
        None => tdim_witness(&om, &a, &VdimOracle(ValuationOracle))?,
    };
    Ok(witness_output(command, &w, Domain::contains))
}

fn vdim_cmd(m: &str, e: &str) -> Result<Output, Fail> {
    let om = matrix(m)?;
    let a = v_elements(e)?;
    check_arity(&om, a.len())?;
    let out = vdim_witness(&om, &a, &ValuationOracle)?;
    let command = json!({ "verb": "vdim", "ring": "V", "matrix": m, "elements": e });
    let mut o = witness_output(command, &out.witness, Domain::contains);
    let k = out.scaled.as_ref().map(|s| s.k.to_string());
    let l = out.scaled.as_ref().map(|s| s.l.to_string());
    o.json["refined"] = json!(out.refined.to_string());
    o.json["k"] = json!(k);
    o.json["L"] = json!(l);
    o.json["overring_elements"] = json!(texts(&out.overring));
    o.text = format!(
        "refined: {}\nk: {}\nL: {}\noverring elements: {}\n{}",
        out.refined,
        k.unwrap_or_else(|| "-".into()),
        l.unwrap_or_else(|| "-".into()),
        texts(&out.overring).join(", "),
        o.text
    );
    Ok(o)
}

fn overring_cmd(m: &str, nums: &str, dens: &str) -> Result<Output, Fail> {
    let om = matrix(m)?;
    let (n, d) = (v_elements(nums)?, v_elements(dens)?);
    if n.len() != d.len() {
        return Err(Fail::Usage(format!("{} numerators for {} denominators", n.len(), d.len())));
    }
    check_arity(&om, n.len())?;
    let b = n
        .into_iter()
        .zip(d)
        .map(|(n, d)| OverringElement::new(n, d))
        .collect::<valdim::Result<Vec<_>>>();
    let b = input(b)?;
    let a = valdim::witness::common_denominator(&b);
    let w = overring_lex_witness(&om, &VdimOracle(ValuationOracle), &b)?;
    let command = json!({ "verb": "overring", "ring": "V", "matrix": m, "numerators": nums, "denominators": dens });
    let mut o = witness_output(command, &w, Domain::contains);
    o.json["common_denominator"] = json!(a.to_string());
    o.text = format!("common denominator: {a}\n{}", o.text);
    Ok(o)
}

fn homogenize_in<T: ElementSyntax>(kind: RingKind, p: &str, e: &str) -> Result<Output, Fail> {
    let elements = members::<T>(e, kind, Domain::contains)?;
    let n = elements.len();
    let poly = input(parse_poly::<T>(p, n))?;
    let ones = input(OrderMatrix::new(vec![vec![QuadScalar::from_int(1); n]]))?;
    let w = Witness { poly, order: ones, elements, kind: WitnessKind::PreorderWitness };
    let h = homogenize_witness(&w)?;
    Ok(Output {
        ok: true,
        json: json!({
            "command": { "verb": "homogenize", "ring": kind.name(), "poly": p, "elements": e },
            "relation": h.poly.to_string(),
            "degree": h.degree.to_string(),
            "t0": h.t0.to_string(),
        }),
        text: format!("relation: {}\ndegree: {}\nunit coefficient at: {}", h.poly, h.degree, h.t0),
    })
}

fn homogenize_cmd(r: &str, p: &str, e: &str) -> Result<Output, Fail> {
    let kind = ring(r)?;
    match kind {
        RingKind::V => homogenize_in::<VElem>(kind, p, e),
        RingKind::R => homogenize_in::<RElem>(kind, p, e),
        RingKind::W => homogenize_in::<WElem>(kind, p, e),
        _ => Err(Fail::Usage(format!("{kind} is not a local ring"))),
    }
}

struct SearchArgs<'a> {
    matrix: Option<&'a str>,
    elements: &'a str,
    max_degree: u32,
    pool: Option<&'a str>,
    homogeneous: bool,
}

fn search_in<T: ElementSyntax + Linearize>(kind: RingKind, s: &SearchArgs, member: fn(&T) -> bool) -> Result<Output, Fail> {
    let elements = members::<T>(s.elements, kind, member)?;
    let pool = match s.pool {
        Some(p) => members::<T>(p, kind, member)?,
        None => {
            let mut pool = vec![T::zero(), T::one(), -T::one()];
            for x in &elements {
                pool.push(x.clone());
                pool.push(-x.clone());
            }
            pool
        }
    };
    let command = json!({
        "verb": "search",
        "ring": kind.name(),
        "matrix": s.matrix,
        "elements": s.elements,
        "max_degree": s.max_degree,
        "pool": texts(&pool),
        "homogeneous": s.homogeneous,
    });
    let bound = format!("degree <= {}, pool of {}", s.max_degree, pool.len());
    if s.homogeneous {
        let found = homogeneous_relation_search(&elements, s.max_degree, &pool)?;
        let text = match &found {
            Some(p) => format!("relation: {p}"),
            None => format!("no homogeneous relation with a unit coefficient ({bound})"),
        };
        return Ok(Output {
            ok: true,
            json: json!({ "command": command, "found": found.is_some(), "relation": found.map(|p| p.to_string()) }),
            text,
        });
    }
    let m = s.matrix.ok_or_else(|| Fail::Usage("--matrix is required unless --homogeneous is given".into()))?;
    let om = matrix(m)?;
    check_arity(&om, elements.len())?;
    let found = independence_search(&elements, &om, s.max_degree, &pool)?;
    Ok(match found {
        Some(w) => {
            let mut o = witness_output(command, &w, member);
            o.json["found"] = json!(true);
            o
        }
        None => Output {
            ok: true,
            json: json!({ "command": command, "found": false }),
            text: format!("no witness ({bound})"),
        },
    })
}

fn search_cmd(r: &str, s: &SearchArgs) -> Result<Output, Fail> {
    let kind = ring(r)?;
    match kind {
        RingKind::V => search_in::<VElem>(kind, s, Domain::contains),
        RingKind::R => search_in::<RElem>(kind, s, Domain::contains),
        RingKind::W => search_in::<WElem>(kind, s, Domain::contains),
        RingKind::MonoidQ => search_in::<VElem>(kind, s, monoid_member),
        RingKind::MonoidQu => search_in::<RElem>(kind, s, monoid_member),
    }
}

fn suite_cmd(name: &str, seed: u64, scale: usize, output: Option<&PathBuf>) -> Result<Output, Fail> {
    let name: SuiteName = input(name.parse())?;
    let start = Instant::now();
    let report = run_suite(name, seed, scale);
    let elapsed = start.elapsed();
    let json = report.to_json();
    if let Some(path) = output {
        std::fs::write(path, format!("{json}\n")).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
    }
    let mut text = format!("suite {name}, seed {seed}, scale {scale}\n");
    for (check, t) in &report.summary.checks {
        text.push_str(&format!("  {check}: {} passed, {} failed\n", t.passed, t.failed));
    }
    for c in report.cases.iter().filter(|c| !c.passed()).take(10) {
        text.push_str(&format!("  FAIL #{} {}: {}\n", c.index, c.check, c.reason.as_deref().unwrap_or("")));
    }
    text.push_str(&format!(
        "{}/{} cases passed in {:.2}s",
        report.summary.passed,
        report.summary.total,
        elapsed.as_secs_f64()
    ));
    Ok(Output { ok: report.passed(), json: serde_json::from_str(&json).expect("valid json"), text })
}

fn run(cli: &Cli) -> Result<Output, Fail> {
    match &cli.command {
        Command::Compare { matrix, exp_a, exp_b } => compare(matrix, exp_a, exp_b),
        Command::Classify { matrix } => classify_cmd(matrix),
        Command::Witness { ring, matrix, elements } => witness_cmd(ring, matrix, elements),
        Command::Verify { ring, matrix, poly, elements, kind } => verify_cmd(ring, matrix, poly, elements, kind.as_deref()),
        Command::Transport { matrix, elements, poly } => transport_cmd(matrix, elements, poly.as_deref()),
        Command::Vdim { matrix, elements } => vdim_cmd(matrix, elements),
        Command::Overring { matrix, numerators, denominators } => overring_cmd(matrix, numerators, denominators),
        Command::Homogenize { ring, poly, elements } => homogenize_cmd(ring, poly, elements),
        Command::Search { ring, matrix, elements, max_degree, pool, homogeneous } => search_cmd(
            ring,
            &SearchArgs {
                matrix: matrix.as_deref(),
                elements,
                max_degree: *max_degree,
                pool: pool.as_deref(),
                homogeneous: *homogeneous,
            },
        ),
        Command::Suite { name, seed, scale, output } => suite_cmd(name, *seed, *scale, output.as_ref()),
    }
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                emit(&out.text);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Property(msg)) => {
            if cli.json {
                emit(&json!({ "error": msg }).to_string());
            } else {
                eprintln!("failed: {msg}");
            }
            ExitCode::from(1)
        }
    }
}
