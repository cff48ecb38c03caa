use std::collections::BTreeSet;
use std::io::Read as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use computads::{
    catalog, cone, io as cio, pushout, smash, suspension, tensor_product, Computad, ComputadMap,
    GenName, GeneratorRelation, PointedComputad, QuotientMode, Sign,
};

/// Combinatorial directed topology for computads.
///
/// Computad arguments accept `-` for stdin, a path to a JSON document,
/// or a catalog name (try `build --list`).
#[derive(Parser)]
#[command(name = "computads", version, about)]
struct Cli {
    /// Emit machine-readable JSON where applicable.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress report output; rely on the exit code.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog entry and print its document.
    Build {
        /// Catalog entry name.
        name: Option<String>,
        /// Write the document to a file instead of stdout.
        #[arg(long)]
        out: Option<String>,
        /// List the available entry names.
        #[arg(long)]
        list: bool,
    },
    /// Tensor product of two computads.
    Tensor { a: String, b: String },
    /// Future (+) or past (-) cone.
    Cone {
        /// `+` or `-`.
        sign: String,
        a: String,
    },
    /// Smash product of two pointed computads.
    Smash {
        a: String,
        b: String,
        /// Basepoints: once for each operand (defaults to the operands'
        /// own basepoints when they have one).
        #[arg(long)]
        base: Vec<String>,
    },
    /// Iterated suspension.
    Suspend {
        a: String,
        #[arg(short, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        base: Option<String>,
    },
    /// Reverse cell directions in the listed dimensions.
    Op {
        a: String,
        /// Comma-separated dimensions, e.g. `1,2`; default all.
        #[arg(long)]
        dims: Option<String>,
    },
    /// Quotient by a relation file of `name ~ name` lines.
    Quotient {
        a: String,
        #[arg(long)]
        rel: String,
        /// Merge forced identifications instead of rejecting.
        #[arg(long)]
        refine: bool,
    },
    /// Collapse the subcomputad listed one name per line.
    Collapse {
        a: String,
        #[arg(long)]
        sub: String,
    },
    /// Pushout of X <- A -> Y along map files of `name -> name` lines.
    Pushout {
        a: String,
        x: String,
        y: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        base_x: Option<String>,
        #[arg(long)]
        base_y: Option<String>,
    },
    /// Validation reports.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Per-dimension generator counts.
    Stats { a: String },
    /// Search for an isomorphism and print a witness.
    Iso { a: String, b: String },
    /// Export a computad.
    #[command(subcommand)]
    Export(ExportCommand),
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Axiom-level validation of one computad.
    Axioms { a: String },
    /// Replay the explicit low-dimensional border expressions against
    /// the tensor definition over all generator pairs.
    TensorBorders {
        a: String,
        b: String,
        #[arg(long, default_value_t = 4)]
        max_total_dim: usize,
    },
}

#[derive(Subcommand)]
enum ExportCommand {
    Json { a: String },
    Dot {
        a: String,
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
    },
}

struct Loaded {
    computad: Computad,
    basepoint: Option<GenName>,
}

fn load(arg: &str) -> Result<Loaded> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        let (computad, basepoint) = cio::from_json(&buf)?;
        return Ok(Loaded {
            computad,
            basepoint,
        });
    }
    if Path::new(arg).exists() {
        let buf = std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        let (computad, basepoint) = cio::from_json(&buf)?;
        return Ok(Loaded {
            computad,
            basepoint,
        });
    }
    let entry = catalog::build(arg)?;
    Ok(Loaded {
        computad: entry.computad,
        basepoint: entry.basepoint,
    })
}

fn pointed(loaded: Loaded, explicit: Option<&str>, what: &str) -> Result<PointedComputad> {
    let base = match explicit {
        Some(s) => s.parse::<GenName>()?,
        None => loaded
            .basepoint
            .clone()
            .ok_or_else(|| anyhow!("{what} has no basepoint; pass --base"))?,
    };
    Ok(PointedComputad::new(loaded.computad, base)?)
}

fn emit(computad: &Computad, basepoint: Option<&GenName>, out: Option<&str>) -> Result<()> {
    let doc = cio::to_json(computad, basepoint, None);
    match out {
        Some(path) => std::fs::write(path, doc).with_context(|| format!("writing {path}"))?,
        None => println!("{doc}"),
    }
    Ok(())
}

fn parse_name(s: &str) -> Result<GenName> {
    Ok(s.parse::<GenName>()?)
}

fn relation_from_file(path: &str) -> Result<GeneratorRelation> {
    let mut rel = GeneratorRelation::new();
    for (i, line) in std::fs::read_to_string(path)?.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (l, r) = line
            .split_once('~')
            .ok_or_else(|| anyhow!("{path}:{}: expected `name ~ name`", i + 1))?;
        rel.relate(parse_name(l.trim())?, parse_name(r.trim())?);
    }
    Ok(rel)
}

fn map_from_file(path: &str) -> Result<ComputadMap> {
    let mut map = ComputadMap::default();
    for (i, line) in std::fs::read_to_string(path)?.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (l, r) = line
            .split_once("->")
            .ok_or_else(|| anyhow!("{path}:{}: expected `name -> name`", i + 1))?;
        map.assignment
            .insert(parse_name(l.trim())?, parse_name(r.trim())?);
    }
    Ok(map)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Build { name, out, list } => {
            if list {
                for n in catalog::NAMES {
                    println!("{n}");
                }
                return Ok(());
            }
            let name = name.ok_or_else(|| anyhow!("missing entry name (or --list)"))?;
            let entry = catalog::build(&name)?;
            if let Some(expected) = &entry.expected_counts {
                let got = entry.computad.counts();
                if &got != expected {
                    bail!("entry `{name}` produced counts {got:?}, expected {expected:?}");
                }
            }
            let doc = cio::to_json(&entry.computad, entry.basepoint.as_ref(), Some(&entry.recipe));
            match out {
                Some(path) => std::fs::write(&path, doc)?,
                None => println!("{doc}"),
            }
            Ok(())
        }
        Command::Tensor { a, b } => {
            let product = tensor_product(&load(&a)?.computad, &load(&b)?.computad)?;
            emit(&product, None, None)
        }
        Command::Cone { sign, a } => {
            let sign = match sign.as_str() {
                "+" => Sign::Plus,
                "-" => Sign::Minus,
                other => bail!("cone sign must be `+` or `-`, got `{other}`"),
            };
            let (result, _) = cone(&load(&a)?.computad, sign)?;
            emit(&result, None, None)
        }
        Command::Smash { a, b, base } => {
            if base.len() > 2 {
                bail!("--base may be given at most twice");
            }
            let ap = pointed(load(&a)?, base.first().map(|s| s.as_str()), &a)?;
            let bp = pointed(load(&b)?, base.get(1).map(|s| s.as_str()), &b)?;
            let result = smash(&ap, &bp)?;
            emit(&result.computad, Some(&result.basepoint), None)
        }
        Command::Suspend { a, k, base } => {
            let ap = pointed(load(&a)?, base.as_deref(), &a)?;
            let result = suspension(&ap, k)?;
            emit(&result.computad, Some(&result.basepoint), None)
        }
        Command::Op { a, dims } => {
            let x = load(&a)?.computad;
            let result = match dims {
                None => x.op_all(),
                Some(list) => {
                    let set: BTreeSet<usize> = list
                        .split(',')
                        .map(|s| s.trim().parse::<usize>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|e| anyhow!("bad --dims list: {e}"))?;
                    x.op_reverse(&set)
                }
            };
            emit(&result, None, None)
        }
        Command::Quotient { a, rel, refine } => {
            let x = load(&a)?.computad;
            let mode = if refine {
                QuotientMode::Refine
            } else {
                QuotientMode::Reject
            };
            let (result, _) =
                computads::quotient_by_relation(&x, &relation_from_file(&rel)?, mode)?;
            emit(&result, None, None)
        }
        Command::Collapse { a, sub } => {
            let x = load(&a)?.computad;
            let members: BTreeSet<GenName> = std::fs::read_to_string(&sub)?
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(parse_name)
                .collect::<Result<_>>()?;
            let (result, _) = computads::collapse(&x, &members)?;
            emit(&result, None, None)
        }
        Command::Pushout {
            a,
            x,
            y,
            left,
            right,
            base_x,
            base_y,
        } => {
            let amb = load(&a)?.computad;
            let xp = pointed(load(&x)?, base_x.as_deref(), &x)?;
            let yp = pointed(load(&y)?, base_y.as_deref(), &y)?;
            let (result, _, _) =
                pushout(&amb, &xp, &yp, &map_from_file(&left)?, &map_from_file(&right)?)?;
            emit(&result.computad, Some(&result.basepoint), None)
        }
        Command::Check(check) => match check {
            CheckCommand::Axioms { a } => {
                let report = load(&a)?.computad.validate();
                if cli.quiet {
                } else if cli.json {
                    println!("{}", serde_json::to_string_pretty(&report)?);
                } else {
                    println!("{report}");
                }
                if report.is_ok() {
                    Ok(())
                } else {
                    bail!("validation failed");
                }
            }
            CheckCommand::TensorBorders {
                a,
                b,
                max_total_dim,
            } => {
                let report = computads::check_tensor_borders(
                    &load(&a)?.computad,
                    &load(&b)?.computad,
                    max_total_dim,
                )?;
                if cli.quiet {
                } else if cli.json {
                    println!("{}", serde_json::to_string_pretty(&report)?);
                } else if report.is_ok() {
                    println!("PASS ({} pairs, {} comparisons)", report.pairs_checked, report.comparisons);
                } else {
                    println!("FAIL {report}");
                }
                if report.is_ok() {
                    Ok(())
                } else {
                    bail!("border oracle mismatch");
                }
            }
        },
        Command::Stats { a } => {
            let counts = load(&a)?.computad.counts();
            let line: Vec<String> = counts
                .iter()
                .enumerate()
                .map(|(d, n)| format!("{d}:{n}"))
                .collect();
            println!("{}", line.join(" "));
            Ok(())
        }
        Command::Iso { a, b } => {
            let x = load(&a)?.computad;
            let y = load(&b)?.computad;
            match computads::find_isomorphism(&x, &y) {
                Some(witness) => {
                    if cli.json {
                        let map: std::collections::BTreeMap<String, String> = witness
                            .assignment
                            .iter()
                            .map(|(k, v)| (k.to_string(), v.to_string()))
                            .collect();
                        println!("{}", serde_json::to_string_pretty(&map)?);
                    } else {
                        for (k, v) in &witness.assignment {
                            println!("{k} -> {v}");
                        }
                    }
                    Ok(())
                }
                None => bail!("not isomorphic"),
            }
        }
        Command::Export(export) => match export {
            ExportCommand::Json { a } => {
                let loaded = load(&a)?;
                emit(&loaded.computad, loaded.basepoint.as_ref(), None)
            }
            ExportCommand::Dot { a, max_dim } => {
                print!("{}", cio::export_dot(&load(&a)?.computad, max_dim));
                Ok(())
            }
        },
    }
}

fn main() {
    let cli = Cli::parse();
    let json = cli.json;
    if let Err(e) = run(cli) {
        if json {
            eprintln!("{}", serde_json::json!({ "error": e.to_string() }));
        } else {
            eprintln!("error: {e}");
        }
        std::process::exit(1);
    }
}
