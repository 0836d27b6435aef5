use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use entringer::bijections::{
    chuang_phi, omega, omega_inv, omega_signed, phi, phi_inv, phi_signed, psi_b, psi_c, psi_inv,
    psi_signed,
};
use entringer::families::Enumeration;
use entringer::triangles::DEFAULT_N_MAX_CAP;
use entringer::verify::{self, Caps, CheckId, CheckReport};
use entringer::{
    arnold_table, entringer_table, Error, FamilyTag, IncreasingTree, Permutation,
    SignedIncreasingTree, SignedPermutation,
};
use serde_json::json;

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CONJECTURE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "entringer",
    version,
    about = "Entringer and Arnold numbers, their families and bijections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Entringer or Arnold triangle.
    Triangle {
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
        #[arg(long)]
        force: bool,
    },
    /// Stream the members of a family, one per line.
    Enumerate {
        family: FamilyTag,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i32>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
        #[arg(long)]
        force: bool,
    },
    /// Apply a bijection to one object.
    Map {
        name: MapName,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        /// Print the pair-insertion steps (psi only).
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Run exhaustive checks and print a JSON report array.
    Verify {
        /// Comma-separated check ids; all checks when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckId>,
        /// Largest size for type A checks.
        #[arg(long, default_value_t = verify::DEFAULT_TYPE_A_N_MAX)]
        n_max: usize,
        /// Largest size for type B checks.
        #[arg(long, default_value_t = verify::DEFAULT_TYPE_B_N_MAX)]
        n_max_b: usize,
        #[arg(long)]
        force: bool,
    },
    /// Compare Arnold numbers with Hetyei counts.
    Conjecture {
        #[arg(long, default_value_t = verify::DEFAULT_CONJECTURE_N_MAX)]
        n_max: usize,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Entringer,
    Arnold,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
    Boustrophedon,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    Omega,
    OmegaInv,
    Phi,
    PhiInv,
    Psi,
    PsiB,
    PsiInv,
    PsiSigned,
    OmegaSigned,
    PhiSigned,
    ChuangPhi,
}

/// Failure that ends the process with a specific code.
struct Exit(u8, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit(EXIT_USAGE, e.to_string())
    }
}

impl From<io::Error> for Exit {
    fn from(e: io::Error) -> Self {
        Exit(EXIT_USAGE, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Exit(_, msg)) if msg.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(Exit(code, msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Command, out: &mut impl Write) -> Result<u8, Exit> {
    match cmd {
        Command::Triangle {
            kind,
            n,
            format,
            force,
        } => {
            if n == 0 {
                return Err(Exit(EXIT_USAGE, "--n must be at least 1".into()));
            }
            if n > DEFAULT_N_MAX_CAP && !force {
                return Err(Error::GuardExceeded {
                    n,
                    limit: DEFAULT_N_MAX_CAP,
                }
                .into());
            }
            let t = match kind {
                Kind::Entringer => entringer_table(n),
                Kind::Arnold => arnold_table(n),
            };
            match format {
                TableFormat::Text => {
                    for row in 1..=n {
                        let vals: Vec<String> = t
                            .ks(row)
                            .into_iter()
                            .map(|k| t.get(row, k).unwrap().to_string())
                            .collect();
                        writeln!(out, "{}", vals.join(" "))?;
                    }
                }
                TableFormat::Json => writeln!(out, "{}", t.to_json())?,
                TableFormat::Csv => write!(out, "{}", t.to_csv())?,
                TableFormat::Boustrophedon => write!(out, "{}", t.to_boustrophedon())?,
            }
            Ok(0)
        }
        Command::Enumerate {
            family,
            n,
            k,
            format,
            force,
        } => {
            let e = Enumeration::new(family, n).refine(k).force(force);
            e.validate()?;
            let json = format == OutFormat::Json;
            if json {
                write!(
                    out,
                    "{{\"schema_version\":1,\"family\":\"{family}\",\"n\":{n},\"k\":{},\"objects\":[",
                    json!(k)
                )?;
            }
            let mut first = true;
            let mut err = None;
            e.for_each(|obj| {
                if err.is_some() {
                    return;
                }
                let r = if json {
                    let sep = if first { "" } else { "," };
                    write!(out, "{sep}{}", obj.to_json())
                } else {
                    writeln!(out, "{obj}")
                };
                first = false;
                if let Err(e) = r {
                    err = Some(e);
                }
            })?;
            if let Some(e) = err {
                return Err(e.into());
            }
            if json {
                writeln!(out, "]}}")?;
            }
            Ok(0)
        }
        Command::Map {
            name,
            input,
            trace,
            format,
        } => {
            if trace && !matches!(name, MapName::Psi) {
                return Err(Exit(EXIT_USAGE, "--trace is only available for psi".into()));
            }
            let (text, value) = apply_map(name, &input, trace)?;
            match format {
                OutFormat::Text => writeln!(out, "{text}")?,
                OutFormat::Json => writeln!(out, "{value}")?,
            }
            Ok(0)
        }
        Command::Verify {
            checks,
            n_max,
            n_max_b,
            force,
        } => {
            let caps = Caps {
                type_a: n_max,
                type_b: n_max_b,
                force,
            };
            let reports = verify::run_checks(&checks, caps)?;
            print_reports(out, &reports)?;
            let ok = reports.iter().all(CheckReport::passed);
            Ok(if ok { 0 } else { EXIT_VERIFY_FAIL })
        }
        Command::Conjecture { n_max, force } => {
            let reports = verify::check_conjecture(n_max, force)?;
            print_reports(out, &reports)?;
            match reports.iter().find(|r| !r.passed()) {
                None => Ok(0),
                Some(r) => {
                    eprintln!(
                        "counterexample: {}",
                        r.counterexample
                            .as_ref()
                            .map(|v| v.to_string())
                            .unwrap_or_default()
                    );
                    Ok(EXIT_CONJECTURE)
                }
            }
        }
    }
}

fn print_reports(out: &mut impl Write, reports: &[CheckReport]) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, reports)?;
    writeln!(out)
}

fn tree_json(t: &entringer::OneTwoTree) -> serde_json::Value {
    json!({"schema_version": 1, "tree": t.to_json(), "literal": t.to_literal()})
}

fn perm_json(w: &[i32]) -> serde_json::Value {
    json!({"schema_version": 1, "permutation": w})
}

fn apply_map(name: MapName, input: &str, trace: bool) -> Result<(String, serde_json::Value), Exit> {
    let perm = || input.parse::<Permutation>();
    let signed = || input.parse::<SignedPermutation>();
    let tree = || input.parse::<IncreasingTree>();
    let p_out = |p: Permutation| (p.to_string(), perm_json(&p));
    let s_out = |p: SignedPermutation| (p.to_string(), perm_json(&p));
    let t_out = |t: &entringer::OneTwoTree| (t.to_literal(), tree_json(t));
    Ok(match name {
        MapName::Omega => p_out(omega(&tree()?)),
        MapName::OmegaInv => t_out(omega_inv(&perm()?)?.as_tree()),
        MapName::Phi => p_out(phi(&perm()?)?),
        MapName::PhiInv => p_out(phi_inv(&perm()?)?),
        MapName::Psi if trace => {
            let (t, tr) = psi_c(&perm()?, true)?;
            let mut text = String::new();
            for (step, tj) in tr.steps.iter().zip(tr.trees.iter().skip(1)) {
                let b = step.b.map_or("-".to_string(), |b| b.to_string());
                text.push_str(&format!(
                    "i={} a={} b={} case={:?} tree={}\n",
                    step.i,
                    step.a,
                    b,
                    step.case,
                    tj.to_literal()
                ));
            }
            text.push_str(&t.to_literal());
            let mut v = tree_json(&t);
            v["trace"] = serde_json::to_value(&tr).expect("serializable");
            (text, v)
        }
        MapName::Psi => t_out(psi_c(&perm()?, false)?.0.as_tree()),
        MapName::PsiB => t_out(psi_b(&perm()?)?.as_tree()),
        MapName::PsiInv => p_out(psi_inv(&tree()?)?),
        MapName::PsiSigned => t_out(psi_signed(&signed()?)?.as_tree()),
        MapName::OmegaSigned => s_out(omega_signed(&input.parse::<SignedIncreasingTree>()?)),
        MapName::PhiSigned => s_out(phi_signed(&signed()?)?),
        MapName::ChuangPhi => p_out(chuang_phi(&tree()?)),
    })
}
