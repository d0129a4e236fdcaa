//! `qlattice` — expand the product families, verify the identities, list
//! visible points, evaluate the Hessenberg determinants, and count
//! partitions, from one binary.
//!
//! Exit codes: 0 pass/success, 1 verification failure, 2 usage error,
//! 3 inconclusive (numeric mode whose tail estimate exceeds the tolerance).

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::traits::One;
use qlattice::binpart;
use qlattice::detkit::{det, hessenberg_matrix, newton_coeffs, PowerSums};
use qlattice::oracle::{
    count_plane_partitions, count_vector_partitions, parts_in_box, VectorMode,
};
use qlattice::qseries::{
    expand_f_det, expand_f_newton, expand_f_product, expand_g_det, expand_g_newton,
    expand_g_product, functional_eq_check, macmahon_specials, qbinom_product, qbinom_sum,
    quotient_5_6_check, substitute_a, ProductSpec,
};
use qlattice::report::{Status, VerificationReport};
use qlattice::series::{Rat, Series, VarTable};
use qlattice::vpv::{
    axis_identity_check, numeric_hyperquadrant_check, pyramid_identity_check,
    pyramid_power_sums, visible_points, vpv_var_names, NumericError, Region,
};

#[derive(Parser)]
#[command(name = "qlattice", version, about = "Exact q-series product expansion and identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a registered product family as a truncated series
    Expand(ExpandArgs),
    /// Verify a named identity; exit 0 pass, 1 fail, 3 inconclusive
    Verify(VerifyArgs),
    /// Evaluate a Hessenberg determinant family at a given order
    Det(DetArgs),
    /// List visible lattice points of a region as a JSON array
    Vpv(VpvArgs),
    /// Exhaustive partition counting
    Partitions(PartitionsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductName {
    BinaryLhs,
    BinaryRhs,
    F1,
    F2,
    F3,
    G1,
    G2,
    G3,
    Qbinom,
}

#[derive(Args)]
struct ExpandArgs {
    /// Product family to expand
    #[arg(long, value_enum)]
    product: ProductName,
    /// Optional rational substitution for a (e.g. 0, 1, 1/2)
    #[arg(long)]
    a: Option<String>,
    /// Per-variable caps: either a single integer or var=n,var=n,...
    #[arg(long)]
    caps: Option<String>,
    /// Emit the canonical series JSON instead of a human-readable polynomial
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity name: qbinom, fn-det, gn-det, macmahon, functional-eq,
    /// quotient-5-6, vpv-axis, vpv-pyramid, vpv-numeric, binary-weights
    identity: String,
    /// Space dimension n where applicable
    #[arg(long)]
    n: Option<usize>,
    /// MacMahon row bound k (0 = unlimited)
    #[arg(long)]
    k: Option<u32>,
    /// Exponent weights for vpv-numeric, comma-separated
    #[arg(long)]
    b: Option<String>,
    /// Evaluation point for vpv-numeric, comma-separated
    #[arg(long)]
    point: Option<String>,
    /// Numeric tolerance
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    caps: Option<String>,
    /// Deliberately perturb one coefficient before comparing (forces a fail)
    #[arg(long)]
    perturb: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DetArgs {
    /// Power-sum family: constant-a, powers-a, f1, pyramid
    #[arg(long)]
    family: String,
    /// Determinant order (1..=8)
    #[arg(long)]
    k: usize,
    #[arg(long)]
    caps: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VpvArgs {
    /// Region: hyperquadrant, axis, pyramid
    #[arg(long)]
    region: String,
    #[arg(long)]
    caps: Option<String>,
}

#[derive(Args)]
struct PartitionsArgs {
    #[command(subcommand)]
    which: PartitionsCommand,
}

#[derive(Subcommand)]
enum PartitionsCommand {
    /// Count 2-d vector partitions of a target
    Vector {
        /// Target as J,K
        #[arg(long)]
        target: String,
        /// distinct or unrestricted
        #[arg(long)]
        mode: String,
    },
    /// Count plane partitions of n
    Plane {
        #[arg(long)]
        n: u64,
        /// Maximum number of rows
        #[arg(long)]
        rows: Option<u64>,
        /// Restrict to a given trace (main-diagonal sum)
        #[arg(long)]
        trace: Option<u64>,
    },
    /// B(j,k): binary vector partition counts both ways plus the coefficient
    CountB {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        k: u32,
    },
}

/// Caps from flag, then QLATTICE_CAPS, then the built-in default of 4.
/// Accepts a bare integer (uniform) or var=n,var=n,...
#[derive(Clone)]
struct Caps {
    uniform: u32,
    by_name: BTreeMap<String, u32>,
}

impl Caps {
    fn parse(flag: Option<&str>) -> Result<Caps, String> {
        let raw = match flag {
            Some(s) => Some(s.to_string()),
            None => std::env::var("QLATTICE_CAPS").ok(),
        };
        let mut caps = Caps {
            uniform: 4,
            by_name: BTreeMap::new(),
        };
        let Some(raw) = raw else { return Ok(caps) };
        if let Ok(v) = raw.trim().parse::<u32>() {
            caps.uniform = v;
            return Ok(caps);
        }
        for piece in raw.split(',') {
            let (name, val) = piece
                .split_once('=')
                .ok_or_else(|| format!("bad caps entry {piece:?}: expected var=n"))?;
            let v: u32 = val
                .trim()
                .parse()
                .map_err(|_| format!("bad cap value {val:?}"))?;
            caps.by_name.insert(name.trim().to_string(), v);
        }
        Ok(caps)
    }

    fn get(&self, name: &str) -> u32 {
        self.by_name.get(name).copied().unwrap_or(self.uniform)
    }

    fn for_names(&self, names: &[&str]) -> Vec<u32> {
        names.iter().map(|n| self.get(n)).collect()
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| format!("bad rational {s:?}: {e}"))
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("bad number {p:?}: {e}")))
        .collect()
}

fn print_series(s: &Series, json: bool) {
    if json {
        println!("{}", s.to_json());
    } else {
        println!("{s}");
    }
}

fn spec_from_caps(n: usize, caps: &Caps) -> ProductSpec {
    let x_cap = if n == 1 { caps.get("q") } else { caps.get("x") };
    ProductSpec::new(n, x_cap, caps.get("a"), caps.get("t"))
}

fn cmd_expand(args: &ExpandArgs) -> Result<ExitCode, String> {
    let caps = Caps::parse(args.caps.as_deref())?;
    let a = args.a.as_deref().map(parse_rat).transpose()?;
    let series = match args.product {
        ProductName::BinaryLhs | ProductName::BinaryRhs => {
            if a.is_some() {
                return Err("--a does not apply to the binary products".into());
            }
            let ring = binpart::bin_ring(caps.get("q"), caps.get("t"));
            match args.product {
                ProductName::BinaryLhs => binpart::lhs_expand(&ring),
                _ => binpart::rhs_expand(&ring),
            }
        }
        ProductName::Qbinom => {
            let s = qbinom_sum(caps.get("q"), caps.get("a"), caps.get("t"));
            match &a {
                Some(r) => {
                    let zeros = vec![0u32; 3];
                    s.substitute("a", r, &zeros).map_err(|e| e.to_string())?
                }
                None => s,
            }
        }
        ProductName::F1 | ProductName::F2 | ProductName::F3 => {
            let n = match args.product {
                ProductName::F1 => 1,
                ProductName::F2 => 2,
                _ => 3,
            };
            let spec = spec_from_caps(n, &caps);
            let f = expand_f_product(&spec);
            match &a {
                Some(r) => substitute_a(&spec, &f, r),
                None => f,
            }
        }
        ProductName::G1 | ProductName::G2 | ProductName::G3 => {
            let n = match args.product {
                ProductName::G1 => 1,
                ProductName::G2 => 2,
                _ => 3,
            };
            let spec = spec_from_caps(n, &caps);
            let g = expand_g_product(&spec);
            match &a {
                Some(r) => substitute_a(&spec, &g, r),
                None => g,
            }
        }
    };
    print_series(&series, args.json);
    Ok(ExitCode::SUCCESS)
}

/// Add 1 to the coefficient of the last ring variable: a minimal,
/// deterministic corruption used to demonstrate failure reporting.
fn perturb(s: &Series) -> Series {
    let ring = s.ring();
    let mut exps = vec![0u32; ring.arity()];
    exps[ring.arity() - 1] = 1;
    s.add(&Series::monomial(ring, &exps, Rat::one()).unwrap())
}

fn report_exit(r: &VerificationReport, json: bool) -> ExitCode {
    if json {
        println!("{}", r.to_json());
    } else {
        println!("{r}");
    }
    match r.status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(1),
        Status::Inconclusive => ExitCode::from(3),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    let caps = Caps::parse(args.caps.as_deref())?;
    let n = args.n.unwrap_or(2);
    let perturbable = |lhs: &Series| if args.perturb { perturb(lhs) } else { lhs.clone() };

    let report = match args.identity.as_str() {
        "qbinom" => {
            let lhs = qbinom_sum(caps.get("q"), caps.get("a"), caps.get("t"));
            let rhs = qbinom_product(caps.get("q"), caps.get("a"), caps.get("t"));
            VerificationReport::compare("qbinom", &perturbable(&lhs), &rhs)
        }
        "fn-det" => {
            let spec = spec_from_caps(n, &caps);
            let direct = perturbable(&expand_f_product(&spec));
            VerificationReport::compare("fn-det/determinant", &direct, &expand_f_det(&spec))
                .and(VerificationReport::compare(
                    "fn-det/recurrence",
                    &direct,
                    &expand_f_newton(&spec),
                ))
                .with_param("n", n)
        }
        "gn-det" => {
            let spec = spec_from_caps(n, &caps);
            let direct = perturbable(&expand_g_product(&spec));
            VerificationReport::compare("gn-det/determinant", &direct, &expand_g_det(&spec))
                .and(VerificationReport::compare(
                    "gn-det/recurrence",
                    &direct,
                    &expand_g_newton(&spec),
                ))
                .with_param("n", n)
        }
        "macmahon" => {
            let k = args.k.unwrap_or(0);
            match macmahon_specials(k, caps.get("q")) {
                Ok(rhs) => {
                    let r = VerificationReport::compare("macmahon", &perturbable(&rhs), &rhs);
                    r.with_param("k", k)
                }
                Err(r) => r,
            }
        }
        "functional-eq" => {
            if args.perturb {
                return Err("--perturb is not supported for functional-eq".into());
            }
            functional_eq_check(&spec_from_caps(n, &caps))
        }
        "quotient-5-6" => {
            if args.perturb {
                return Err("--perturb is not supported for quotient-5-6".into());
            }
            quotient_5_6_check(caps.get("q"), caps.get("t"))
        }
        "vpv-axis" | "vpv-pyramid" => {
            if args.perturb {
                return Err("--perturb is not supported for the vpv identities".into());
            }
            let names = vpv_var_names(n);
            let c = caps.for_names(&names);
            if args.identity == "vpv-axis" {
                axis_identity_check(n, &c)
            } else {
                pyramid_identity_check(n, &c)
            }
        }
        "vpv-numeric" => {
            if args.perturb {
                return Err("--perturb is not supported for vpv-numeric".into());
            }
            let b = parse_f64_list(args.b.as_deref().ok_or("vpv-numeric requires --b")?)?;
            let point =
                parse_f64_list(args.point.as_deref().ok_or("vpv-numeric requires --point")?)?;
            if b.len() != point.len() {
                return Err("--b and --point must have the same length".into());
            }
            let tol = args.tol.unwrap_or(1e-6);
            let c = vec![caps.uniform; b.len()];
            match numeric_hyperquadrant_check(&b, &point, &c, tol) {
                Ok(r) => r,
                Err(NumericError::OutOfConvergence(x)) => {
                    return Err(format!("point coordinate {x} is outside (-1, 1)"));
                }
                Err(e) => return Err(e.to_string()),
            }
        }
        "binary-weights" => {
            let ring = binpart::bin_ring(caps.get("q"), caps.get("t"));
            let lhs = perturbable(&binpart::lhs_expand(&ring));
            VerificationReport::compare("binary-weights/product", &lhs, &binpart::rhs_expand(&ring))
                .and(VerificationReport::compare(
                    "binary-weights/determinant",
                    &lhs,
                    &binpart::det_coeffs(&ring),
                ))
                .and(VerificationReport::compare(
                    "binary-weights/recurrence",
                    &lhs,
                    &binpart::recurrence_expand(&ring),
                ))
                .and(binpart::functional_eq_check(&ring))
        }
        other => return Err(format!("unknown identity {other:?}")),
    };
    Ok(report_exit(&report, args.json))
}

fn factorial(k: u64) -> Rat {
    (1..=k).fold(Rat::one(), |acc, i| acc * Rat::from_integer(i.into()))
}

fn cmd_det(args: &DetArgs) -> Result<ExitCode, String> {
    if args.k == 0 || args.k > 8 {
        return Err("--k must be in 1..=8".into());
    }
    let caps = Caps::parse(args.caps.as_deref())?;
    let p = match args.family.as_str() {
        "constant-a" => {
            let ring = VarTable::new(&["a"], &[caps.get("a").max(args.k as u32)]);
            let a = Series::var(&ring, "a").unwrap();
            PowerSums(vec![a; args.k])
        }
        "powers-a" => {
            let ring = VarTable::new(&["a"], &[caps.get("a").max(args.k as u32)]);
            let a = Series::var(&ring, "a").unwrap();
            PowerSums((1..=args.k as u32).map(|j| a.pow_u32(j)).collect())
        }
        "f1" => {
            let ring = VarTable::new(&["a", "q"], &[caps.get("a"), caps.get("q")]);
            let one = Series::one(&ring);
            let a = Series::var(&ring, "a").unwrap();
            let q = Series::var(&ring, "q").unwrap();
            PowerSums(
                (1..=args.k as u32)
                    .map(|j| {
                        one.sub(&a.pow_u32(j))
                            .mul(&one.sub(&q.pow_u32(j)).inverse().unwrap())
                    })
                    .collect(),
            )
        }
        "pyramid" => {
            let ring: Arc<VarTable> =
                VarTable::new(&["y", "z"], &[caps.get("y").max(args.k as u32), 1]);
            pyramid_power_sums(&ring, args.k as u32)
        }
        other => return Err(format!("unknown family {other:?}")),
    };
    let m = hessenberg_matrix(&p, args.k).map_err(|e| e.to_string())?;
    let d = det(&m);
    let b = newton_coeffs(&p, args.k).map_err(|e| e.to_string())?;
    debug_assert_eq!(d, b[args.k].scale(&factorial(args.k as u64)));
    if args.json {
        println!(
            "{}",
            serde_json::json!({ "det": d.to_json(), "normalized": b[args.k].to_json() })
        );
    } else {
        println!("det = {d}");
        println!("det/{}! = {}", args.k, b[args.k]);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_vpv(args: &VpvArgs) -> Result<ExitCode, String> {
    let region = match args.region.as_str() {
        "hyperquadrant" => Region::Hyperquadrant,
        "axis" => Region::AxisExtended,
        "pyramid" => Region::Hyperpyramid,
        other => return Err(format!("unknown region {other:?}")),
    };
    let caps = Caps::parse(args.caps.as_deref())?;
    // dimension = number of named caps, else 2 uniform
    let c: Vec<u32> = if caps.by_name.is_empty() {
        vec![caps.uniform; 2]
    } else {
        caps.by_name.values().copied().collect()
    };
    let pts = visible_points(region, &c);
    println!("{}", serde_json::json!(pts));
    Ok(ExitCode::SUCCESS)
}

fn cmd_partitions(args: &PartitionsArgs) -> Result<ExitCode, String> {
    match &args.which {
        PartitionsCommand::Vector { target, mode } => {
            let parts: Vec<u64> = target
                .split(',')
                .map(|p| p.trim().parse::<u64>().map_err(|e| format!("bad target: {e}")))
                .collect::<Result<_, _>>()?;
            if parts.len() != 2 {
                return Err("--target must be J,K".into());
            }
            let mode = match mode.as_str() {
                "distinct" => VectorMode::Distinct,
                "unrestricted" => VectorMode::Unrestricted,
                other => return Err(format!("unknown mode {other:?}")),
            };
            let pool = parts_in_box(&[parts[0], parts[1]]);
            let c = count_vector_partitions(&parts, &pool, mode);
            println!("{c}");
        }
        PartitionsCommand::Plane { n, rows, trace } => {
            println!("{}", count_plane_partitions(*n, *rows, *trace));
        }
        PartitionsCommand::CountB { j, k } => {
            let (d, u) = binpart::count_b(*j as u64, *k as u64);
            let ring = binpart::bin_ring(*j, *k);
            let coeff = binpart::lhs_expand(&ring).coeff(&[*j, *k]).unwrap();
            println!("distinct = {d}");
            println!("unrestricted = {u}");
            println!("coefficient = {coeff}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Expand(a) => cmd_expand(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Det(a) => cmd_det(a),
        Command::Vpv(a) => cmd_vpv(a),
        Command::Partitions(a) => cmd_partitions(a),
    };
    match out {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
