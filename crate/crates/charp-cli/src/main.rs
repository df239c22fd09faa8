//! Command line interface for the prime-characteristic algebra engine.
//!
//! General ideal arithmetic (`gb`, `member`, `colon`, `intersect`,
//! `saturate`, `eliminate`, `bracket-power`) works in any ring
//! `F_p[v0][v1, ..., vn]`; the Frobenius commands (`tau`, `frobenius-ass`,
//! `verify-paper`, `sweep`) work in the fixed ring `F_p[t][x, y]` with a
//! hypersurface polynomial, by default `x*y*(x-y)*(x-t*y)`.
//!
//! Exit codes: 0 for success (including a `member` query that answers
//! "false"), 1 only when `verify-paper` finds one of the asserted
//! identities to be false, 2 for usage or input errors.

mod cell;
mod sweep;

use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use charp_core::{
    factor::DEFAULT_FACTOR_SEED, tau, uni_factor_seeded, Ideal, MonomialOrder, MultiPoly,
    PolyRing, PrimeField,
};

use cell::{ce, check_cell, parse_f, probe_cell, Cell, DEFAULT_F};

#[derive(Parser)]
#[command(
    name = "charp",
    version,
    about = "Exact commutative algebra over F_p[t][x, y]: Groebner bases, ideal \
             arithmetic, and Frobenius-power torsion analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of an ideal
    Gb(GbArgs),
    /// Test whether a polynomial lies in an ideal
    Member(MemberArgs),
    /// Colon ideal (I : J)
    Colon(ColonArgs),
    /// Intersection of two ideals
    Intersect(IntersectArgs),
    /// Saturation (I : J^infinity)
    Saturate(SaturateArgs),
    /// Contract an ideal to a subring by dropping variables
    Eliminate(EliminateArgs),
    /// Generator-wise q-th power (x^q, y^q, ...), q = p^e
    BracketPower(BracketPowerArgs),
    /// The scale 1 + t + ... + t^(q-2) and its irreducible factors
    Tau(TauArgs),
    /// Elementary divisors and associated-prime probes of S/(x^q, y^q, F)
    FrobeniusAss(FrobeniusAssArgs),
    /// Check the torsion and tight-closure identities on a grid of (p, e)
    VerifyPaper(VerifyPaperArgs),
    /// Batch verify-paper plus probes, written as resumable JSON lines
    Sweep(SweepArgs),
}

#[derive(Args)]
struct RingOpts {
    /// Prime characteristic
    #[arg(long)]
    p: u64,
    /// Variable names, coefficient variable first
    #[arg(long, value_delimiter = ',', default_value = "t,x,y")]
    vars: Vec<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OrderName {
    Grevlex,
    Lex,
    /// Two grevlex blocks; the --front variables dominate
    Block,
}

#[derive(Args)]
struct OrderOpts {
    /// Monomial order used for bases and reductions
    #[arg(long, value_enum, default_value_t = OrderName::Grevlex)]
    order: OrderName,
    /// Variables of the dominant block (required for --order block)
    #[arg(long, value_delimiter = ',')]
    front: Option<Vec<String>>,
}

#[derive(Args)]
struct GbArgs {
    #[command(flatten)]
    ring: RingOpts,
    #[command(flatten)]
    order: OrderOpts,
    /// Generators of the ideal
    #[arg(required = true)]
    gens: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MemberArgs {
    #[command(flatten)]
    ring: RingOpts,
    #[command(flatten)]
    order: OrderOpts,
    /// The polynomial to test
    element: String,
    /// Generators of the ideal
    #[arg(long, num_args = 1.., required = true)]
    ideal: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ColonArgs {
    #[command(flatten)]
    ring: RingOpts,
    #[command(flatten)]
    order: OrderOpts,
    /// Generators of the ideal being divided
    #[arg(long, num_args = 1.., required = true)]
    ideal: Vec<String>,
    /// Generators of the divisor ideal
    #[arg(long, num_args = 1.., required = true)]
    by: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct IntersectArgs {
    #[command(flatten)]
    ring: RingOpts,
    #[command(flatten)]
    order: OrderOpts,
    #[arg(long, num_args = 1.., required = true)]
    left: Vec<String>,
    #[arg(long, num_args = 1.., required = true)]
    right: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SaturateArgs {
    #[command(flatten)]
    ring: RingOpts,
    #[command(flatten)]
    order: OrderOpts,
    #[arg(long, num_args = 1.., required = true)]
    ideal: Vec<String>,
    #[arg(long, num_args = 1.., required = true)]
    by: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EliminateArgs {
    #[command(flatten)]
    ring: RingOpts,
    #[command(flatten)]
    order: OrderOpts,
    #[arg(long, num_args = 1.., required = true)]
    ideal: Vec<String>,
    /// Names of the variables to eliminate
    #[arg(long, value_delimiter = ',', required = true)]
    drop: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BracketPowerArgs {
    #[command(flatten)]
    ring: RingOpts,
    #[command(flatten)]
    order: OrderOpts,
    /// Frobenius exponent: q = p^e
    #[arg(long)]
    e: u32,
    #[arg(long, num_args = 1.., required = true)]
    ideal: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TauArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    e: u32,
    /// Seed for the factorization sampler (the result does not depend on
    /// it); defaults to $CHARP_SEED, then a fixed constant
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FrobeniusAssArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    e: u32,
    /// Hypersurface polynomial in t, x, y
    #[arg(long, alias = "F", default_value = DEFAULT_F)]
    f: String,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyPaperArgs {
    /// Primes to check, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    p: Vec<u64>,
    /// Check a single exponent e
    #[arg(long, conflicts_with = "emax")]
    e: Option<u32>,
    /// Check every exponent from 1 to this bound (default 2)
    #[arg(long)]
    emax: Option<u32>,
    /// Hypersurface polynomial in t, x, y
    #[arg(long, alias = "F", default_value = DEFAULT_F)]
    f: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Primes to sweep, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    p: Vec<u64>,
    /// Sweep e = 1 .. emax for each prime
    #[arg(long)]
    emax: u32,
    /// Hypersurface polynomial in t, x, y
    #[arg(long, alias = "F", default_value = DEFAULT_F)]
    f: String,
    /// Output file, one JSON object per line, appended and resumable
    #[arg(long)]
    out: PathBuf,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    seed: Option<u64>,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Gb(args) => cmd_gb(args),
        Command::Member(args) => cmd_member(args),
        Command::Colon(args) => cmd_colon(args),
        Command::Intersect(args) => cmd_intersect(args),
        Command::Saturate(args) => cmd_saturate(args),
        Command::Eliminate(args) => cmd_eliminate(args),
        Command::BracketPower(args) => cmd_bracket_power(args),
        Command::Tau(args) => cmd_tau(args),
        Command::FrobeniusAss(args) => cmd_frobenius_ass(args),
        Command::VerifyPaper(args) => cmd_verify_paper(args),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

fn build_ring(opts: &RingOpts) -> Result<Arc<PolyRing>> {
    let field = PrimeField::new(opts.p).map_err(ce)?;
    let names: Vec<&str> = opts.vars.iter().map(|s| s.as_str()).collect();
    PolyRing::new(field, &names).map_err(ce)
}

fn var_indices(ring: &Arc<PolyRing>, names: &[String]) -> Result<Vec<usize>> {
    names
        .iter()
        .map(|name| {
            ring.var_index(name)
                .ok_or_else(|| anyhow!("unknown variable {name:?} (ring has {:?})", ring.vars()))
        })
        .collect()
}

fn build_order(ring: &Arc<PolyRing>, opts: &OrderOpts) -> Result<MonomialOrder> {
    let n = ring.nvars();
    match opts.order {
        OrderName::Grevlex => Ok(MonomialOrder::grevlex(n)),
        OrderName::Lex => Ok(MonomialOrder::lex(n)),
        OrderName::Block => {
            let names = opts
                .front
                .as_ref()
                .ok_or_else(|| anyhow!("--order block requires --front"))?;
            let front = var_indices(ring, names)?;
            MonomialOrder::elimination(n, &front).map_err(ce)
        }
    }
}

fn order_label(opts: &OrderOpts) -> String {
    match opts.order {
        OrderName::Grevlex => "grevlex".into(),
        OrderName::Lex => "lex".into(),
        OrderName::Block => format!(
            "block({})",
            opts.front.as_deref().unwrap_or_default().join(",")
        ),
    }
}

fn parse_polys(ring: &Arc<PolyRing>, exprs: &[String]) -> Result<Vec<MultiPoly>> {
    exprs.iter().map(|e| parse_f(e, ring)).collect()
}

fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    if let Ok(value) = std::env::var("CHARP_SEED") {
        return value
            .parse()
            .with_context(|| format!("CHARP_SEED must be an unsigned integer, got {value:?}"));
    }
    Ok(DEFAULT_FACTOR_SEED)
}

/// Serialization shared by every command that prints an ideal basis.
#[derive(Serialize)]
struct BasisJson {
    p: u64,
    vars: Vec<String>,
    order: String,
    basis: Vec<String>,
}

fn print_basis(
    ideal: &Ideal,
    order: &MonomialOrder,
    label: String,
    json: bool,
) -> Result<()> {
    let basis = ideal.basis(order);
    if json {
        let out = BasisJson {
            p: ideal.ring().field().characteristic(),
            vars: ideal.ring().vars().to_vec(),
            order: label,
            basis: basis.iter().map(|g| g.display_with(order)).collect(),
        };
        println!("{}", serde_json::to_string(&out)?);
    } else if basis.is_empty() {
        println!("0");
    } else {
        for g in basis.iter() {
            println!("{}", g.display_with(order));
        }
    }
    Ok(())
}

fn cmd_gb(args: GbArgs) -> Result<i32> {
    let ring = build_ring(&args.ring)?;
    let order = build_order(&ring, &args.order)?;
    let ideal = Ideal::new(&ring, parse_polys(&ring, &args.gens)?);
    print_basis(&ideal, &order, order_label(&args.order), args.json)?;
    Ok(0)
}

fn cmd_member(args: MemberArgs) -> Result<i32> {
    let ring = build_ring(&args.ring)?;
    let order = build_order(&ring, &args.order)?;
    let element = parse_f(&args.element, &ring)?;
    let ideal = Ideal::new(&ring, parse_polys(&ring, &args.ideal)?);
    let normal_form = ideal.reduce(&element, &order);
    let member = normal_form.is_zero();
    if args.json {
        #[derive(Serialize)]
        struct MemberJson {
            member: bool,
            normal_form: String,
        }
        let out = MemberJson { member, normal_form: normal_form.display_with(&order) };
        println!("{}", serde_json::to_string(&out)?);
    } else {
        println!("{member}");
    }
    // A negative answer is still a successful computation.
    Ok(0)
}

fn cmd_colon(args: ColonArgs) -> Result<i32> {
    let ring = build_ring(&args.ring)?;
    let order = build_order(&ring, &args.order)?;
    let ideal = Ideal::new(&ring, parse_polys(&ring, &args.ideal)?);
    let by = Ideal::new(&ring, parse_polys(&ring, &args.by)?);
    let result = ideal.colon(&by).map_err(ce)?;
    print_basis(&result, &order, order_label(&args.order), args.json)?;
    Ok(0)
}

fn cmd_intersect(args: IntersectArgs) -> Result<i32> {
    let ring = build_ring(&args.ring)?;
    let order = build_order(&ring, &args.order)?;
    let left = Ideal::new(&ring, parse_polys(&ring, &args.left)?);
    let right = Ideal::new(&ring, parse_polys(&ring, &args.right)?);
    let result = left.intersect(&right);
    print_basis(&result, &order, order_label(&args.order), args.json)?;
    Ok(0)
}

fn cmd_saturate(args: SaturateArgs) -> Result<i32> {
    let ring = build_ring(&args.ring)?;
    let order = build_order(&ring, &args.order)?;
    let ideal = Ideal::new(&ring, parse_polys(&ring, &args.ideal)?);
    let by = Ideal::new(&ring, parse_polys(&ring, &args.by)?);
    let result = ideal.saturate(&by).map_err(ce)?;
    print_basis(&result, &order, order_label(&args.order), args.json)?;
    Ok(0)
}

fn cmd_eliminate(args: EliminateArgs) -> Result<i32> {
    let ring = build_ring(&args.ring)?;
    let order = build_order(&ring, &args.order)?;
    let ideal = Ideal::new(&ring, parse_polys(&ring, &args.ideal)?);
    let drop = var_indices(&ring, &args.drop)?;
    let result = ideal.eliminate(&drop).map_err(ce)?;
    print_basis(&result, &order, order_label(&args.order), args.json)?;
    Ok(0)
}

fn cmd_bracket_power(args: BracketPowerArgs) -> Result<i32> {
    let ring = build_ring(&args.ring)?;
    let order = build_order(&ring, &args.order)?;
    let ideal = Ideal::new(&ring, parse_polys(&ring, &args.ideal)?);
    let q = ring.field().power_of_p(args.e).map_err(ce)?;
    let result = ideal.bracket_power(q).map_err(ce)?;
    print_basis(&result, &order, order_label(&args.order), args.json)?;
    Ok(0)
}

fn cmd_tau(args: TauArgs) -> Result<i32> {
    let field = PrimeField::new(args.p).map_err(ce)?;
    let q = field.power_of_p(args.e).map_err(ce)?;
    let scale = tau(field, args.e).map_err(ce)?;
    let seed = resolve_seed(args.seed)?;
    let factors = uni_factor_seeded(&scale, seed).map_err(ce)?;
    if args.json {
        #[derive(Serialize)]
        struct FactorJson {
            factor: String,
            multiplicity: u32,
        }
        #[derive(Serialize)]
        struct TauJson {
            p: u64,
            e: u32,
            q: u64,
            tau: String,
            factors: Vec<FactorJson>,
        }
        let out = TauJson {
            p: args.p,
            e: args.e,
            q,
            tau: scale.to_string(),
            factors: factors
                .factors
                .iter()
                .map(|(f, m)| FactorJson { factor: f.to_string(), multiplicity: *m })
                .collect(),
        };
        println!("{}", serde_json::to_string(&out)?);
    } else {
        println!("tau({q}) = {scale}");
        let rendered: Vec<String> = factors
            .factors
            .iter()
            .map(|(f, m)| {
                if *m == 1 {
                    format!("({f})")
                } else {
                    format!("({f})^{m}")
                }
            })
            .collect();
        println!("factors: {}", rendered.join(" "));
    }
    Ok(0)
}

fn cmd_frobenius_ass(args: FrobeniusAssArgs) -> Result<i32> {
    let seed = resolve_seed(args.seed)?;
    let data = probe_cell(args.p, args.e, &args.f, seed)?;
    if args.json {
        #[derive(Serialize)]
        struct FrobeniusAssJson<'a> {
            p: u64,
            e: u32,
            q: u64,
            f_expr: &'a str,
            divisors: &'a [String],
            free_rank: usize,
            tau_divides_largest: Option<bool>,
            probes: &'a [cell::ProbeJson],
        }
        let out = FrobeniusAssJson {
            p: args.p,
            e: args.e,
            q: data.q,
            f_expr: &args.f,
            divisors: &data.divisors,
            free_rank: data.free_rank,
            tau_divides_largest: data.tau_divides_largest,
            probes: &data.probes,
        };
        println!("{}", serde_json::to_string(&out)?);
    } else {
        println!("p={} e={} q={}", args.p, args.e, data.q);
        if data.divisors.is_empty() {
            println!("non-unit elementary divisors: none");
        } else {
            println!("non-unit elementary divisors: {}", data.divisors.join(", "));
        }
        println!("free rank: {}", data.free_rank);
        match data.tau_divides_largest {
            Some(verdict) => println!("tau divides the largest divisor: {verdict}"),
            None => println!("tau divides the largest divisor: n/a (no nonzero divisors)"),
        }
        if data.probes.is_empty() {
            println!("probes: none (no torsion to probe)");
        } else {
            println!("probes (irreducible factors of the largest divisor):");
            for probe in &data.probes {
                if probe.associated {
                    let witness = probe.witness.as_deref().unwrap_or("?");
                    println!("  {}: associated, witness {}", probe.pi, witness);
                } else {
                    println!("  {}: not associated", probe.pi);
                }
            }
        }
    }
    Ok(0)
}

fn mark(state: Option<bool>) -> char {
    match state {
        Some(true) => '\u{2713}',  // ✓
        Some(false) => '\u{2717}', // ✗
        None => '\u{00b7}',        // ·
    }
}

fn cmd_verify_paper(args: VerifyPaperArgs) -> Result<i32> {
    let mut primes: Vec<u64> = Vec::new();
    for &p in &args.p {
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    let exponents: Vec<u32> = match (args.e, args.emax) {
        (Some(e), None) => {
            if e == 0 {
                bail!("--e must be at least 1");
            }
            vec![e]
        }
        (None, emax) => {
            let bound = emax.unwrap_or(2);
            if bound == 0 {
                bail!("--emax must be at least 1");
            }
            (1..=bound).collect()
        }
        (Some(_), Some(_)) => unreachable!("clap rejects --e with --emax"),
    };

    let mut cells: Vec<Cell> = Vec::new();
    for &p in &primes {
        for &e in &exponents {
            cells.push(check_cell(p, e, &args.f)?);
        }
    }

    if cells.iter().all(|c| c.degenerate) {
        eprintln!(
            "every requested cell has q = 2, where the witness already lies in the \
             ideal and the statement is vacuous; request a larger exponent"
        );
        return Ok(2);
    }

    let all_ok = cells.iter().all(Cell::ok);
    if args.json {
        #[derive(Serialize)]
        struct CellJson {
            p: u64,
            e: u32,
            q: u64,
            degenerate: bool,
            lemma11: bool,
            thm12_member_tau_g: bool,
            thm12_not_member_g: bool,
            thm12_contraction_is_tau: bool,
            ge_check: Option<bool>,
            ok: bool,
            duration_ms: u64,
        }
        #[derive(Serialize)]
        struct VerifyJson<'a> {
            f_expr: &'a str,
            cells: Vec<CellJson>,
            all_ok: bool,
        }
        let out = VerifyJson {
            f_expr: &args.f,
            cells: cells
                .iter()
                .map(|c| CellJson {
                    p: c.p,
                    e: c.e,
                    q: c.q,
                    degenerate: c.degenerate,
                    lemma11: c.lemma11,
                    thm12_member_tau_g: c.member_tau_g,
                    thm12_not_member_g: c.not_member_g,
                    thm12_contraction_is_tau: c.contraction_is_tau,
                    ge_check: c.ge_check,
                    ok: c.ok(),
                    duration_ms: c.duration_ms,
                })
                .collect(),
            all_ok,
        };
        println!("{}", serde_json::to_string(&out)?);
    } else {
        for c in &cells {
            let not_member = if c.degenerate { None } else { Some(c.not_member_g) };
            let suffix = if c.degenerate { " (degenerate at q=2)" } else { "" };
            println!(
                "p={} e={} q={}: lemma11 {} theorem12 {}{}{} remark13 {}{}",
                c.p,
                c.e,
                c.q,
                mark(Some(c.lemma11)),
                mark(Some(c.member_tau_g)),
                mark(not_member),
                mark(Some(c.contraction_is_tau)),
                mark(c.ge_check),
                suffix,
            );
        }
        if all_ok {
            println!("all checks passed ({} cells)", cells.len());
        } else {
            let failing = cells.iter().filter(|c| !c.ok()).count();
            println!("FAILED: {failing} of {} cells", cells.len());
        }
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn cmd_sweep(args: SweepArgs) -> Result<i32> {
    let mut primes: Vec<u64> = Vec::new();
    for &p in &args.p {
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    let seed = resolve_seed(args.seed)?;
    let cfg = sweep::SweepConfig {
        primes,
        emax: args.emax,
        f_expr: args.f,
        out: args.out,
        jobs: args.jobs,
        seed,
    };
    sweep::run_sweep(&cfg)?;
    Ok(0)
}
