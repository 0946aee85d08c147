use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use sfw_core::aut::automorphism_group;
use sfw_core::character::CharacterTable;
use sfw_core::corpus::named_group;
use sfw_core::extension::extension_from_out;
use sfw_core::group::parse_group_json;
use sfw_core::index::{jones_spectrum_query, virtual_index, VirtualEmbeddingSpec};
use sfw_core::induced::{InducedHomomorphism, MatrixRep};
use sfw_core::subfactor::{dual_principal_graph, principal_graph};
use sfw_core::verify::{run_suite, run_suite_on_dir, Suite};
use sfw_core::{Complex64, Config, CosetData, DoubleCosetData, Error, GroupHomomorphism, PermGroup, Permutation, Result};

/// Group-subgroup subfactor invariants on finite permutation groups.
///
/// Group arguments are JSON files `{"degree": n, "generators_cycles": ["(0 1)", ...]}`
/// (or `"generators": [[images], ...]`), composed rightmost-first. A few small
/// groups can also be named directly: S3, A3, S4, A4, D4, V4, Z2wrZ3, Z2^3.
#[derive(Parser, Debug)]
#[command(name = "sfw", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// JSON file with config overrides; flags and SFW_* variables take precedence.
    #[arg(long, global = true, env = "SFW_CONFIG")]
    config: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, env = "SFW_ORDER_CAP")]
    order_cap: Option<usize>,
    #[arg(long, global = true, env = "SFW_AUT_CAP")]
    aut_cap: Option<usize>,
    #[arg(long, global = true, env = "SFW_THETA_K_CAP")]
    theta_k_cap: Option<usize>,
    #[arg(long, global = true, env = "SFW_ORACLE_CAP")]
    oracle_cap: Option<usize>,
    #[arg(long, global = true, env = "SFW_CLASS_CAP")]
    class_cap: Option<usize>,
    #[arg(long, global = true, env = "SFW_TOL_CHAR")]
    tol_char: Option<f64>,
    #[arg(long, global = true, env = "SFW_TOL_MULT")]
    tol_mult: Option<f64>,
    #[arg(long, global = true, env = "SFW_TOL_NORM")]
    tol_norm: Option<f64>,
    #[arg(long, global = true, env = "SFW_TOL_SPECTRUM")]
    tol_spectrum: Option<f64>,
}

#[derive(Args, Debug)]
struct Pair {
    #[arg(long)]
    group: String,
    #[arg(long)]
    subgroup: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print [G:H] and the number of double cosets.
    Index(Pair),
    /// Run an invariant suite: theta, graphs, cocycles, extensions, arithmetic or all.
    Verify {
        suite: String,
        /// Directory of pair files `{"name", "group", "subgroup"}`; default corpus if absent.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Principal (default) or dual principal graph.
    Graph {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, conflicts_with = "dual")]
        principal: bool,
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Character table.
    Chartab {
        #[arg(long)]
        group: String,
    },
    /// Extension of a centreless G by the Out cosets listed (comma separated
    /// indices, or "all"). Always prints JSON.
    Extend {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "all")]
        out_subgroup: String,
    },
    /// Locate x in the Jones spectrum.
    Spectrum {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Index of a virtual embedding, from `{"t": .., "parts": [{"s", "index_g_k", "index_h_gamma_k"}]}`.
    Vindex {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Build Ind_K^G of v_γ ⊗ ρ and check it on generators.
    Induce {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        target: String,
        /// `{"images": ["(0 1 2)", ...]}` per generator of K, optionally
        /// `"rho": [[re, im], ...]` for a one-dimensional ρ.
        #[arg(long)]
        gamma: PathBuf,
    },
}

/// Result of a command: text for stdout and whether a verification failed.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn config(g: &Global) -> Result<Config> {
    let mut cfg = match &g.config {
        Some(path) => serde_json::from_str(&read(path)?).map_err(|e| {
            Error::Parse(format!("{}: {e} (line {}, column {})", path.display(), e.line(), e.column()))
        })?,
        None => Config::default(),
    };
    macro_rules! apply {
        ($($f:ident),*) => { $(if let Some(v) = g.$f { cfg.$f = v; })* };
    }
    apply!(order_cap, aut_cap, theta_k_cap, oracle_cap, class_cap, tol_char, tol_mult, tol_norm, tol_spectrum);
    cfg.validate()?;
    Ok(cfg)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_group(arg: &str, cfg: &Config) -> Result<PermGroup> {
    let path = Path::new(arg);
    if !path.exists() {
        match named_group(arg, cfg) {
            Err(Error::Parse(_)) => {}
            named => return named,
        }
    }
    parse_group_json(&read(path)?, cfg).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{arg}: {m}")),
        other => other,
    })
}

fn load_pair(p: &Pair, cfg: &Config) -> Result<(PermGroup, PermGroup)> {
    let g = load_group(&p.group, cfg)?;
    let h = load_group(&p.subgroup, cfg)?;
    h.ensure_subgroup_of(&g, "subgroup")?;
    Ok((g, h))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn run(cli: &Cli) -> Result<Output> {
    let cfg = config(&cli.global)?;
    let json = cli.global.json;
    match &cli.command {
        Command::Index(pair) => {
            let (g, h) = load_pair(pair, &cfg)?;
            let index = CosetData::new(&g, &h)?.index();
            let dc = DoubleCosetData::new(&g, &h)?;
            Ok(Output::ok(if json {
                pretty(&json!({
                    "index": index,
                    "double_cosets": dc.count(),
                    "double_coset_reps": dc.reps.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                }))
            } else {
                format!("index {index}, double_cosets {}\n", dc.count())
            }))
        }
        Command::Verify { suite, corpus } => {
            let suite: Suite = suite.parse()?;
            let report = match corpus {
                Some(dir) => run_suite_on_dir(suite, dir, &cfg)?,
                None => run_suite(suite, &cfg)?,
            };
            let text = if json {
                pretty(&report)
            } else {
                let mut s = format!(
                    "suite {}: {} cases, {} failures, {} skipped, {:.2}s\n",
                    report.suite,
                    report.cases_run,
                    report.failures.len(),
                    report.skipped.len(),
                    report.wall_time_secs
                );
                for f in &report.failures {
                    let _ = writeln!(s, "FAIL {} [{}]: {}", f.case, f.inputs, f.witness);
                }
                s
            };
            Ok(Output {
                text,
                failed: !report.passed(),
            })
        }
        Command::Graph { pair, dual, format, .. } => {
            let (g, h) = load_pair(pair, &cfg)?;
            let graph = if *dual { dual_principal_graph(&g, &h, &cfg)? } else { principal_graph(&g, &h, &cfg)? };
            let format = format.unwrap_or(if json { Format::Json } else { Format::Dot });
            Ok(Output::ok(match format {
                Format::Dot => graph.to_dot(if *dual { "dual_principal" } else { "principal" }),
                Format::Json => graph.to_json()? + "\n",
            }))
        }
        Command::Chartab { group } => {
            let g = load_group(group, &cfg)?;
            let table = CharacterTable::compute(&g, &cfg)?;
            let j = table.to_json();
            if json {
                return Ok(Output::ok(pretty(&j)));
            }
            let mut s = format!("order {}, {} classes\n", j.group_order, j.classes.len());
            let _ = writeln!(s, "class sizes: {:?}", j.classes.iter().map(|c| c.size).collect::<Vec<_>>());
            for (row, d) in j.table.iter().zip(&j.degrees) {
                let cells: Vec<String> = row.iter().map(|&[re, im]| fmt_complex(re, im)).collect();
                let _ = writeln!(s, "d={d}: {}", cells.join(" "));
            }
            Ok(Output::ok(s))
        }
        Command::Extend { group, out_subgroup } => {
            let g = load_group(group, &cfg)?;
            let gens = parse_out_list(&g, out_subgroup, &cfg)?;
            let ext = extension_from_out(&g, &gens, &cfg)?;
            Ok(Output::ok(pretty(&ext.to_json())))
        }
        Command::Spectrum { x, tol } => {
            let v = jones_spectrum_query(*x, tol.unwrap_or(cfg.tol_spectrum))?;
            Ok(Output::ok(if json { pretty(&v) } else { format!("{v}\n") }))
        }
        Command::Vindex { spec } => {
            let text = read(spec)?;
            let spec: VirtualEmbeddingSpec = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("{e} (line {}, column {})", e.line(), e.column())))?;
            let v = virtual_index(&spec)?;
            Ok(Output::ok(if json { pretty(&json!({ "virtual_index": v })) } else { format!("virtual index {v}\n") }))
        }
        Command::Induce { group, subgroup, target, gamma } => {
            let g = load_group(group, &cfg)?;
            let k = load_group(subgroup, &cfg)?;
            let h = load_group(target, &cfg)?;
            let map: GammaFile = serde_json::from_str(&read(gamma)?)
                .map_err(|e| Error::Parse(format!("{e} (line {}, column {})", e.line(), e.column())))?;
            let images = map
                .images
                .iter()
                .map(|s| Permutation::parse_cycles(s, h.degree()))
                .collect::<Result<Vec<_>>>()?;
            let gamma = GroupHomomorphism::from_generator_images(&k, &h, &images)?;
            let rho = match &map.rho {
                None => MatrixRep::trivial(&k),
                Some(values) => {
                    let v: Vec<_> = values.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
                    MatrixRep::from_scalar_images(&k, &v)?
                }
            };
            let ind = InducedHomomorphism::new(&g, &gamma, &rho)?;
            let report = ind.verify()?;
            let text = if json {
                pretty(&json!({
                    "dim": ind.dim(),
                    "section": ind.section.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "report": report,
                    "holds": report.holds(),
                }))
            } else {
                format!(
                    "dim {}, identity {}, multiplicative {}, unitary {}\n",
                    ind.dim(),
                    report.identity_ok,
                    report.multiplicative,
                    report.unitary
                )
            };
            Ok(Output {
                text,
                failed: !report.holds(),
            })
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GammaFile {
    images: Vec<String>,
    #[serde(default)]
    rho: Option<Vec<[f64; 2]>>,
}

fn fmt_complex(re: f64, im: f64) -> String {
    let r = |v: f64| if v.abs() < 5e-10 { 0.0 } else { v };
    let (re, im) = (r(re), r(im));
    if im == 0.0 {
        format!("{re:.4}")
    } else {
        format!("{re:.4}{im:+.4}i")
    }
}

fn parse_out_list(g: &PermGroup, text: &str, cfg: &Config) -> Result<Vec<usize>> {
    if text.trim() == "all" {
        let aut = automorphism_group(g, cfg)?;
        return Ok((1..aut.out_order()).collect());
    }
    text.split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Error::Parse(format!("Out coset index {s:?} is not a nonnegative integer")))
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.global.out {
                Some(path) => std::fs::write(path, &out.text),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(u8::from(out.failed))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
