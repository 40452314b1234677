//! Command-line front end for `k3n-core`.
//!
//! Every subcommand except `sweep` prints one JSON object with keys
//! `command`, `inputs`, `result`, `citations` in that order. Domain errors
//! replace `result` and `citations` by an `error` object and exit with 2;
//! usage errors go to standard error and exit with 1.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use k3n_core::baselocus::{self, BaseLocusReport, ModuliVerdict};
use k3n_core::citations::Citation;
use k3n_core::cones::{self, ConeReport};
use k3n_core::flop::{self, BlowupClass, ExceptionalBidegree, VanishingTrace};
use k3n_core::lattice::{GeneralClass, GramLattice, HLClass, Model};
use k3n_core::riemann_roch;
use k3n_core::sections::{self, ExactMatrix};
use k3n_core::Error;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "k3n",
    version,
    about = "Exact lattice and base-locus computations for K3^[2]-type fourfolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// BBF square of a class.
    Square(LatticeClassArgs),
    /// BBF pairing of two classes.
    Pair(PairArgs),
    /// Divisibility of a class.
    Div(LatticeClassArgs),
    /// Euler characteristic C(q/2 + n + 1, n).
    Chi(ChiArgs),
    /// Cone membership in the genus-two example.
    Cone(ExampleClassArgs),
    /// Base-locus verdict on X or X'.
    Baselocus(ModelClassArgs),
    /// Pullback to the common blow-up and restriction to E.
    Flop(FlopArgs),
    /// Numerical Mayer decompositions on a K3 lattice.
    Mayer(MayerArgs),
    /// Non-emptiness and generic base point freeness of M_{d,m}.
    Moduli(ModuliArgs),
    /// Exact rank and kernel of the multiplication map.
    VerifyMu,
    /// CSV of verdicts for 0 <= a, b <= max.
    Sweep(SweepArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Basis {
    /// (H, delta)
    Hd,
    /// (H, L) with L = H - delta
    Hl,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::Hd => "hd",
            Basis::Hl => "hl",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModelArg {
    X,
    Xprime,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::X => Model::X,
            ModelArg::Xprime => Model::XPrime,
        }
    }
}

#[derive(Args, Debug)]
struct LatticeClassArgs {
    #[arg(short = 'a', allow_negative_numbers = true)]
    a: BigInt,
    #[arg(short = 'b', allow_negative_numbers = true)]
    b: BigInt,
    /// q(lambda)/2
    #[arg(long = "d0", default_value = "1", allow_negative_numbers = true)]
    d0: BigInt,
    #[arg(short = 'n', long = "n", default_value_t = 2)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Basis::Hd)]
    basis: Basis,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long, allow_negative_numbers = true)]
    a1: BigInt,
    #[arg(long, allow_negative_numbers = true)]
    b1: BigInt,
    #[arg(long, allow_negative_numbers = true)]
    a2: BigInt,
    #[arg(long, allow_negative_numbers = true)]
    b2: BigInt,
    #[arg(long = "d0", default_value = "1", allow_negative_numbers = true)]
    d0: BigInt,
    #[arg(short = 'n', long = "n", default_value_t = 2)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Basis::Hd)]
    basis: Basis,
}

#[derive(Args, Debug)]
struct ChiArgs {
    #[arg(short = 'q', allow_negative_numbers = true)]
    q: BigInt,
    #[arg(short = 'n', long = "n")]
    n: u32,
}

#[derive(Args, Debug)]
struct ExampleClassArgs {
    #[arg(short = 'a', allow_negative_numbers = true)]
    a: BigInt,
    #[arg(short = 'b', allow_negative_numbers = true)]
    b: BigInt,
    #[arg(long, value_enum, default_value_t = Basis::Hl)]
    basis: Basis,
}

#[derive(Args, Debug)]
struct ModelClassArgs {
    #[command(flatten)]
    class: ExampleClassArgs,
    #[arg(long, value_enum, default_value_t = ModelArg::X)]
    model: ModelArg,
}

#[derive(Args, Debug)]
struct FlopArgs {
    #[command(flatten)]
    class: ExampleClassArgs,
    #[arg(long, value_enum, default_value_t = ModelArg::X)]
    from: ModelArg,
}

#[derive(Args, Debug)]
struct MayerArgs {
    /// g11 for rank 1, g11,g12,g22 for rank 2
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    gram: Vec<BigInt>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    h: Vec<BigInt>,
    #[arg(long, allow_negative_numbers = true)]
    bound: BigInt,
}

#[derive(Args, Debug)]
struct ModuliArgs {
    #[arg(short = 'd', allow_negative_numbers = true)]
    d: BigInt,
    #[arg(short = 'm', allow_negative_numbers = true)]
    m: BigInt,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long = "max")]
    max: u32,
    #[arg(long, value_enum, default_value_t = ModelArg::X)]
    model: ModelArg,
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match cli.command {
        Command::Sweep(args) => Outcome {
            code: 0,
            stdout: sweep_csv(args.max, args.model.into()),
            stderr: String::new(),
        },
        command => {
            let (name, inputs, outcome) = dispatch(command);
            let mut doc = Map::new();
            doc.insert("command".into(), json!(name));
            doc.insert("inputs".into(), inputs);
            let code = match outcome {
                Ok((result, citations)) => {
                    doc.insert("result".into(), result);
                    doc.insert("citations".into(), citations_json(&citations));
                    0
                }
                Err(e) => {
                    doc.insert(
                        "error".into(),
                        json!({ "kind": e.kind(), "message": e.to_string() }),
                    );
                    2
                }
            };
            let mut stdout = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
            stdout.push('\n');
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
    }
}

type Payload = k3n_core::Result<(Value, Vec<Citation>)>;

fn dispatch(command: Command) -> (&'static str, Value, Payload) {
    match command {
        Command::Square(args) => {
            let inputs = lattice_inputs(&args);
            (
                "square",
                inputs,
                lattice_class(&args).map(|c| (json!({ "square": int(&c.square()) }), vec![])),
            )
        }
        Command::Pair(args) => {
            let inputs = json!({
                "a1": int(&args.a1), "b1": int(&args.b1),
                "a2": int(&args.a2), "b2": int(&args.b2),
                "d0": int(&args.d0), "n": args.n, "basis": args.basis.name(),
            });
            let payload = (|| {
                let x = general_class(&args.a1, &args.b1, &args.d0, args.n, args.basis)?;
                let y = general_class(&args.a2, &args.b2, &args.d0, args.n, args.basis)?;
                Ok((json!({ "pair": int(&x.pair(&y)?) }), vec![]))
            })();
            ("pair", inputs, payload)
        }
        Command::Div(args) => {
            let inputs = lattice_inputs(&args);
            let payload = lattice_class(&args).and_then(|c| {
                Ok((
                    json!({ "divisibility": int(&c.divisibility()?), "primitive": c.is_primitive()? }),
                    vec![Citation::DivisibilityFormula],
                ))
            });
            ("div", inputs, payload)
        }
        Command::Chi(args) => {
            let inputs = json!({ "q": int(&args.q), "n": args.n });
            let payload = riemann_roch::euler_characteristic(&args.q, args.n)
                .map(|chi| (json!({ "chi": int(&chi) }), vec![Citation::RiemannRoch]));
            ("chi", inputs, payload)
        }
        Command::Cone(args) => {
            let inputs = example_inputs(&args);
            let c = example_class(&args);
            let result = json!({ "class": hl_json(&c), "square": int(&c.square()), "cones": cone_json(&cones::cone_report(&c)) });
            ("cone", inputs, Ok((result, vec![])))
        }
        Command::Baselocus(args) => {
            let mut inputs = example_inputs(&args.class);
            let model: Model = args.model.into();
            inputs["model"] = json!(model.name());
            let report = baselocus::classify(&example_class(&args.class), model);
            let citations = report.citations.clone();
            ("baselocus", inputs, Ok((baselocus_json(&report), citations)))
        }
        Command::Flop(args) => {
            let mut inputs = example_inputs(&args.class);
            let model: Model = args.from.into();
            inputs["from"] = json!(model.name());
            ("flop", inputs, flop_payload(&example_class(&args.class), model))
        }
        Command::Mayer(args) => {
            let inputs = json!({
                "gram": args.gram.iter().map(int).collect::<Vec<_>>(),
                "h": args.h.iter().map(int).collect::<Vec<_>>(),
                "bound": int(&args.bound),
            });
            ("mayer", inputs, mayer_payload(&args))
        }
        Command::Moduli(args) => {
            let inputs = json!({ "d": int(&args.d), "m": int(&args.m) });
            let payload = baselocus::generic_bpf(&args.d, &args.m).map(|v| {
                let citations = v.citations.clone();
                (moduli_json(&v), citations)
            });
            ("moduli", inputs, payload)
        }
        Command::VerifyMu => ("verify-mu", json!({}), verify_mu_payload()),
        Command::Sweep(_) => unreachable!("handled before dispatch"),
    }
}

/// JSON number when it fits in `i64`, decimal string otherwise.
fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn citations_json(citations: &[Citation]) -> Value {
    Value::Array(
        citations
            .iter()
            .map(|c| json!({ "statement": c.id(), "quote": c.statement() }))
            .collect(),
    )
}

fn lattice_inputs(args: &LatticeClassArgs) -> Value {
    json!({ "a": int(&args.a), "b": int(&args.b), "d0": int(&args.d0), "n": args.n, "basis": args.basis.name() })
}

fn general_class(
    a: &BigInt,
    b: &BigInt,
    d0: &BigInt,
    n: u32,
    basis: Basis,
) -> k3n_core::Result<GeneralClass> {
    match basis {
        Basis::Hd => GeneralClass::new(a.clone(), b.clone(), d0.clone(), n),
        Basis::Hl => {
            if !d0.is_one() || n != 2 {
                return Err(Error::MismatchedAmbient(format!(
                    "the (H, L) basis needs d0 = 1 and n = 2, got d0 = {d0}, n = {n}"
                )));
            }
            Ok(HLClass::new(a.clone(), b.clone()).to_general())
        }
    }
}

fn lattice_class(args: &LatticeClassArgs) -> k3n_core::Result<GeneralClass> {
    general_class(&args.a, &args.b, &args.d0, args.n, args.basis)
}

fn example_inputs(args: &ExampleClassArgs) -> Value {
    json!({ "a": int(&args.a), "b": int(&args.b), "basis": args.basis.name() })
}

fn example_class(args: &ExampleClassArgs) -> HLClass {
    match args.basis {
        Basis::Hl => HLClass::new(args.a.clone(), args.b.clone()),
        Basis::Hd => HLClass::from_hdelta(args.a.clone(), args.b.clone()),
    }
}

fn hl_json(c: &HLClass) -> Value {
    let (h, delta) = c.to_hdelta();
    json!({ "hl": [int(&c.a), int(&c.b)], "hd": [int(&h), int(&delta)] })
}

fn cone_json(r: &ConeReport) -> Value {
    json!({
        "positive_cone_closure": r.in_positive_cone_closure,
        "birational_kahler_closure": r.in_birational_kahler_closure,
        "nef_x": r.in_nef_x,
        "nef_xprime": r.in_nef_xprime,
        "flop_wall": r.on_flop_wall,
        "big": r.is_big,
    })
}

fn trace_json(t: &VanishingTrace) -> Value {
    json!({
        "applies": t.applies,
        "route": t.route.name(),
        "steps": t.steps.iter().map(|s| json!({
            "check": s.check,
            "holds": s.holds,
            "statement": s.citation.id(),
        })).collect::<Vec<_>>(),
    })
}

fn baselocus_json(r: &BaseLocusReport) -> Value {
    json!({
        "class": hl_json(&r.class),
        "model": r.model.name(),
        "verdict": r.verdict.name(),
        "big": r.big,
        "trace": r.trace.as_ref().map_or(Value::Null, trace_json),
    })
}

fn blowup_json(b: &BlowupClass) -> Value {
    json!({ "base": hl_json(&b.base), "e_coeff": b.e_coeff.to_string() })
}

fn bidegree_json(e: &ExceptionalBidegree) -> Value {
    json!([int(&e.s), int(&e.t)])
}

fn flop_payload(c: &HLClass, from: Model) -> Payload {
    let pullback = match from {
        Model::X => flop::pullback_from_x(c),
        Model::XPrime => flop::pullback_from_xprime(c),
    };
    let restriction = pullback.restrict_to_e()?;
    let mut citations = vec![
        Citation::FlopPullbackComparison,
        Citation::ExceptionalRestriction,
        Citation::FlopConstant,
    ];
    let trace = match flop::vanishing_argument_applies(c, from) {
        Ok(t) => {
            citations.extend(t.citations());
            trace_json(&t)
        }
        Err(Error::NotNef { .. }) => Value::Null,
        Err(e) => return Err(e),
    };
    let mut seen = Vec::new();
    citations.retain(|c| {
        let fresh = !seen.contains(c);
        seen.push(*c);
        fresh
    });
    let result = json!({
        "flop_constant": flop::flop_constant().to_string(),
        "line_degree": int(&flop::line_degree(c)),
        "pullback": blowup_json(&pullback),
        "restriction_to_e": bidegree_json(&restriction),
        "vanishing": trace,
    });
    Ok((result, citations))
}

fn mayer_payload(args: &MayerArgs) -> Payload {
    let gram = match args.gram.as_slice() {
        [g11] => vec![vec![g11.clone()]],
        [g11, g12, g22] => vec![vec![g11.clone(), g12.clone()], vec![g12.clone(), g22.clone()]],
        other => {
            return Err(Error::InvalidGram(format!(
                "expected 1 or 3 entries, got {}",
                other.len()
            )))
        }
    };
    let lattice = GramLattice::new(gram)?;
    let found = baselocus::mayer_search(&lattice, &args.h, &args.bound)?;
    let decompositions: Vec<Value> = found
        .iter()
        .map(|d| {
            json!({
                "m": int(&d.m),
                "e": d.e.iter().map(int).collect::<Vec<_>>(),
                "c": d.c.iter().map(int).collect::<Vec<_>>(),
            })
        })
        .collect();
    let result = json!({
        "square": int(&lattice.square(&args.h)?),
        "count": decompositions.len(),
        "decompositions": decompositions,
        "effectivity_checked": false,
    });
    Ok((result, vec![Citation::MayerCriterion]))
}

fn moduli_json(v: &ModuliVerdict) -> Value {
    let witness = v.witness.as_ref().map_or(Value::Null, |w| {
        json!({
            "a": int(w.a()),
            "b": int(w.b()),
            "d0": int(w.half_lambda_square()),
            "n": w.n(),
            "square": int(&w.square()),
        })
    });
    let witness_hl = v
        .witness_hl()
        .map_or(Value::Null, |c| json!([int(&c.a), int(&c.b)]));
    json!({
        "d": int(&v.d),
        "m": int(&v.m),
        "nonempty": v.nonempty,
        "witness": witness,
        "witness_hl": witness_hl,
        "generic_bpf": v.generic_bpf,
    })
}

/// SHA-256 of the matrix text: one line per row, entries in decimal
/// separated by commas, every row terminated by `\n`.
pub fn matrix_digest(m: &ExactMatrix) -> String {
    hex::encode(Sha256::digest(m.to_string().as_bytes()))
}

fn verify_mu_payload() -> Payload {
    let report = sections::verify_kernel_basis()?;
    let matrix = sections::mu_matrix();
    let kernel: Vec<Vec<String>> = report
        .kernel_basis
        .iter()
        .map(|v| v.iter().map(|x| x.to_string()).collect())
        .collect();
    let result = json!({
        "rows": report.source_dim,
        "cols": report.target_dim,
        "rank": report.rank,
        "kernel_dim": report.kernel_dim,
        "kernel_basis": kernel,
        "stated_vectors_annihilated": report.stated_annihilated,
        "stated_vectors_independent": report.stated_independent,
        "stated_vectors_span_kernel": report.stated_span_kernel,
        "image_dim": report.image_dim,
        "h0_h_plus_l": int(&report.h0_h_plus_l),
        "surjective": report.surjective,
        "cross_product_identity": sections::cross_product_identity_check(),
        "matrix_sha256": matrix_digest(&matrix),
    });
    Ok((result, report.citations))
}

/// `a,b,nef,big,verdict` rows for `0 ≤ a, b ≤ max`, `a` major.
pub fn sweep_csv(max: u32, model: Model) -> String {
    let mut out = String::from("a,b,nef,big,verdict\n");
    for a in 0..=max {
        for b in 0..=max {
            let c = HLClass::new(a, b);
            let report = baselocus::classify(&c, model);
            let _ = writeln!(
                out,
                "{a},{b},{},{},{}",
                cones::is_nef(&c, model),
                c.square().is_positive(),
                report.verdict.name()
            );
        }
    }
    out
}
