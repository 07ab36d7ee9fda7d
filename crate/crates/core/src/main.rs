//! Batch verification CLI: reproduce the bundled orbit tables, run the
//! dimension identity with cross-checks over type and q ranges, report the
//! conjectural non-coprime rows, and run the affine window check.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use orbitq::orbits::CaseTag;
use orbitq::partitions::ClassicalFamily;
use orbitq::render::{
    classical_table_view, exceptional_table_view, render_report, render_table, Format,
};
use orbitq::report::{explore_noncoprime, verify_family, verify_type, VerifyOptions};
use orbitq::rootsys::{CartanType, Family, RootSystem};

#[derive(Parser)]
#[command(
    name = "orbitq",
    about = "Exact nilpotent-orbit data and integral-root verification for the simple Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format: md, csv or json
    #[arg(long, default_value = "md")]
    format: String,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the orbit-dimension identity and cross-checks over a range
    Verify {
        /// Cartan type, e.g. E8 or B3
        #[arg(long, value_name = "TYPE", conflicts_with = "family")]
        r#type: Option<String>,
        /// Classical family letter A, B, C or D (with --n)
        #[arg(long, requires = "n")]
        family: Option<String>,
        /// Matrix size n or range lo..hi (with --family)
        #[arg(long)]
        n: Option<String>,
        /// q value or range lo..hi (default: through stabilization + 2)
        #[arg(long)]
        q: Option<String>,
        /// Also run the exhaustive matrix-oracle search (n <= 10)
        #[arg(long)]
        with_oracle: bool,
        /// Also run the affine translation window check per record
        #[arg(long)]
        with_prop24: bool,
        /// Window size for --with-prop24 (default 3q)
        #[arg(long)]
        window: Option<i64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print an orbit table
    Table {
        /// Cartan type, e.g. F4 (exceptional tables)
        #[arg(long, value_name = "TYPE", conflicts_with = "family")]
        r#type: Option<String>,
        /// Classical family letter (with --n, one size)
        #[arg(long, requires = "n")]
        family: Option<String>,
        /// Matrix size n (with --family)
        #[arg(long)]
        n: Option<String>,
        /// q value or range (classical tables; default 1..h+2)
        #[arg(long)]
        q: Option<String>,
        /// Print the principal-case table (default)
        #[arg(long, conflicts_with = "coprincipal")]
        principal: bool,
        /// Print the coprincipal-case table
        #[arg(long)]
        coprincipal: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Report both sides of the identity at q not coprime to the lacing
    /// number, using the principal-case weight (conjectural; not asserted)
    ExploreNoncoprime {
        /// Cartan type: G2 or F4
        #[arg(long, value_name = "TYPE")]
        r#type: String,
        /// q value or range lo..hi
        #[arg(long)]
        q: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the affine translation window check for one (type, p, q)
    Prop24 {
        #[arg(long, value_name = "TYPE")]
        r#type: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        /// Window size (default 3q)
        #[arg(long)]
        window: Option<i64>,
    },
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u64 = lo.parse().map_err(|_| format!("bad range `{}`", s))?;
        let hi: u64 = hi.parse().map_err(|_| format!("bad range `{}`", s))?;
        if lo > hi {
            return Err(format!("empty range `{}`", s));
        }
        Ok((lo, hi))
    } else {
        let v: u64 = s.parse().map_err(|_| format!("bad value `{}`", s))?;
        Ok((v, v))
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    match s.to_ascii_uppercase().as_str() {
        "A" => Ok(Family::A),
        "B" => Ok(Family::B),
        "C" => Ok(Family::C),
        "D" => Ok(Family::D),
        other => Err(format!(
            "`{}` is not a classical family letter (A, B, C or D)",
            other
        )),
    }
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), String> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("write {}: {}", path, e)),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            r#type,
            family,
            n,
            q,
            with_oracle,
            with_prop24,
            window,
            output,
        } => {
            let format = Format::parse(&output.format).map_err(|e| e.to_string())?;
            let q_range = q.as_deref().map(parse_range).transpose()?;
            let opts = VerifyOptions {
                with_oracle,
                with_prop24,
                window,
                ..VerifyOptions::default()
            };
            let report = match (r#type, family) {
                (Some(t), None) => {
                    let ct = CartanType::parse(&t).map_err(|e| e.to_string())?;
                    verify_type(ct, q_range, &opts).map_err(|e| e.to_string())?
                }
                (None, Some(f)) => {
                    let letter = parse_family(&f)?;
                    let n_range = parse_range(&n.ok_or("--family needs --n")?)?;
                    verify_family(letter, n_range, q_range, &opts).map_err(|e| e.to_string())?
                }
                _ => return Err("pass exactly one of --type or --family".into()),
            };
            emit(&output, &render_report(&report, format))?;
            if !report.all_passed() {
                for r in report.records.iter().filter(|r| !r.passed()) {
                    eprintln!(
                        "FAILED: {} q={} orbit={} dim={} var_dim={} checks={:?}",
                        r.cartan_type, r.q, r.orbit, r.dim_orbit, r.var_dim, r.checks
                    );
                }
            }
            Ok(report.all_passed())
        }
        Command::Table {
            r#type,
            family,
            n,
            q,
            principal: _,
            coprincipal,
            output,
        } => {
            let format = Format::parse(&output.format).map_err(|e| e.to_string())?;
            let view = match (r#type, family) {
                (Some(t), None) => {
                    let ct = CartanType::parse(&t).map_err(|e| e.to_string())?;
                    let case = if coprincipal {
                        CaseTag::Coprincipal
                    } else {
                        CaseTag::Principal
                    };
                    if ct.is_exceptional() {
                        exceptional_table_view(ct, case).map_err(|e| e.to_string())?
                    } else {
                        let fam = ClassicalFamily::from_cartan_type(ct)
                            .ok_or_else(|| format!("{} has no orbit table", ct))?;
                        let (lo, hi) = match q.as_deref() {
                            Some(s) => parse_range(s)?,
                            None => (1, RootSystem::build(ct).coxeter_number() + 2),
                        };
                        classical_table_view(fam, lo, hi).map_err(|e| e.to_string())?
                    }
                }
                (None, Some(f)) => {
                    let letter = parse_family(&f)?;
                    let (n_lo, n_hi) = parse_range(&n.ok_or("--family needs --n")?)?;
                    if n_lo != n_hi {
                        return Err("table takes a single --n".into());
                    }
                    let fam = match letter {
                        Family::A => ClassicalFamily::new_sl(n_lo),
                        Family::B | Family::D => ClassicalFamily::new_so(n_lo),
                        Family::C => ClassicalFamily::new_sp(n_lo),
                        _ => unreachable!(),
                    }
                    .map_err(|e| e.to_string())?;
                    let (lo, hi) = match q.as_deref() {
                        Some(s) => parse_range(s)?,
                        None => (1, fam.coxeter_number() + 2),
                    };
                    classical_table_view(fam, lo, hi).map_err(|e| e.to_string())?
                }
                _ => return Err("pass exactly one of --type or --family".into()),
            };
            emit(&output, &render_table(&view, format))?;
            Ok(true)
        }
        Command::ExploreNoncoprime { r#type, q, output } => {
            let ct = CartanType::parse(&r#type).map_err(|e| e.to_string())?;
            let (lo, hi) = parse_range(&q)?;
            let format = Format::parse(&output.format).map_err(|e| e.to_string())?;
            let mut records = Vec::new();
            for q in lo..=hi {
                if num_integer::gcd(q, ct.lacing()) == 1 {
                    continue;
                }
                records.push(explore_noncoprime(ct, q).map_err(|e| e.to_string())?);
            }
            let text = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&records).expect("records serialize")
                }
                Format::Csv => {
                    let mut out =
                        String::from("cartan_type,q,orbit,dim_nq,var_dim,equal\r\n");
                    for r in &records {
                        out.push_str(&format!(
                            "{},{},{},{},{},{}\r\n",
                            r.cartan_type, r.q, r.orbit, r.dim_nq, r.var_dim, r.equal
                        ));
                    }
                    out
                }
                Format::Markdown => {
                    let mut out = String::from(
                        "CONJECTURAL: principal-case weight at q not coprime to the lacing number; no equality is asserted.\n\n",
                    );
                    out.push_str("| type | q | orbit | dim_nq | var_dim | equal |\n");
                    out.push_str("|------|---|-------|--------|---------|-------|\n");
                    for r in &records {
                        out.push_str(&format!(
                            "| {} | {} | {} | {} | {} | {} |\n",
                            r.cartan_type, r.q, r.orbit, r.dim_nq, r.var_dim, r.equal
                        ));
                    }
                    out
                }
            };
            emit(&output, &text)?;
            Ok(true)
        }
        Command::Prop24 {
            r#type,
            p,
            q,
            window,
        } => {
            let ct = CartanType::parse(&r#type).map_err(|e| e.to_string())?;
            let rs = RootSystem::build(ct);
            let window = window.unwrap_or(3 * q as i64);
            let report =
                orbitq::affine::verify_prop_2_4(&rs, p, q, window).map_err(|e| e.to_string())?;
            println!(
                "type {} p {} q {} case {} window {} roots_checked {}",
                ct,
                p,
                q,
                report.case.name(),
                report.window,
                report.roots_checked
            );
            println!(
                "bezout choices: {:?}; dominance {}; translation identity {}; vacuum closed form {}",
                report.bezout,
                report.dominance_ok,
                report.translation_ok,
                report.closed_form_ok
            );
            for v in &report.violations {
                eprintln!("violation: {}", v);
            }
            println!("{}", if report.pass() { "PASS" } else { "FAIL" });
            Ok(report.pass())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::FAILURE
        }
    }
}
