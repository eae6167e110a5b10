use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use symtwist::groups::{self, RationalMatrix4};
use symtwist::partition::dim_gl;
use symtwist::plethysm::plethysm;
use symtwist::series::DEFAULT_CUTOFF;
use symtwist::text::{format_expr, parse_expr};
use symtwist::{cache, twist, Integer, Partition, Schur, SeriesName, Series, SubChar};

#[derive(Parser)]
#[command(name = "symtwist", version, about = "Exact Schur function algebra and twisted subgroup character products")]
struct Cli {
    /// Directory for persisted coefficient tables.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Truncation degree for series.
    #[arg(long, global = true, default_value_t = DEFAULT_CUTOFF)]
    cutoff: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Outer (Littlewood-Richardson) product.
    Outer {
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        left: Schur,
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        right: Schur,
    },
    /// Skew `left / right`.
    Skew {
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        left: Schur,
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        right: Schur,
    },
    /// Outer coproduct.
    Coprod {
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        f: Schur,
    },
    /// Inner (Kronecker) product.
    Inner {
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        left: Schur,
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        right: Schur,
    },
    /// Plethysm `{inner} ∘ {outer} = s_outer[s_inner]`.
    Plethysm {
        #[arg(long, value_parser = expr, allow_hyphen_values = true)]
        inner: Schur,
        #[arg(long, value_parser = expr, allow_hyphen_values = true)]
        outer: Schur,
    },
    /// Prints a named series, one degree per line.
    Series {
        #[arg(long)]
        name: SeriesName,
        #[arg(long)]
        pi: Option<Partition>,
    },
    /// Restricts a GL character to the stabilizer of symmetry `pi`.
    Branch {
        #[arg(long)]
        pi: Partition,
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        f: Schur,
    },
    /// Lifts a subgroup character back to GL characters.
    Lift {
        #[arg(long)]
        pi: Partition,
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        a: Schur,
    },
    /// Twisted product of two subgroup characters.
    Prod {
        #[arg(long)]
        pi: Partition,
        #[arg(long, value_enum, default_value_t = Route::Lift)]
        route: Route,
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        left: Schur,
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        right: Schur,
    },
    /// Dimension for GL(n), or the formal dimension of a subgroup character
    /// when `--pi` is given.
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pi: Option<Partition>,
        #[arg(value_parser = expr, allow_hyphen_values = true)]
        f: Schur,
    },
    /// The H_{1³}(4) worked example.
    H13 {
        #[command(subcommand)]
        what: H13,
    },
    /// A single Littlewood-Richardson coefficient.
    Lrcoef {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
}

#[derive(Subcommand)]
enum H13 {
    /// Formal dimensions of the long labels.
    Dims,
    /// Modification rules for labels with four parts.
    Modify,
    /// Products with (2).
    Table,
    /// Checks whether a matrix stabilizes the antisymmetric tensor.
    Stabcheck {
        #[arg(long)]
        matrix: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Kernel,
    Lift,
    Cocycle,
}

fn expr(text: &str) -> Result<Schur, String> {
    parse_expr(text).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<String, String> {
    let err = |e: symtwist::Error| e.to_string();
    let out = match cli.command {
        Command::Outer { left, right } => format_expr(&(&left * &right)),
        Command::Skew { left, right } => format_expr(&left.skew(&right)),
        Command::Coprod { f } => f.outer_coproduct().to_string(),
        Command::Inner { left, right } => format_expr(&left.inner_product(&right)),
        Command::Plethysm { inner, outer } => format_expr(&plethysm(&inner, &outer).map_err(err)?),
        Command::Series { name, pi } => {
            let s = Series::named(name, pi.as_ref(), cli.cutoff).map_err(err)?;
            let lines: Vec<String> =
                s.pieces().iter().enumerate().map(|(d, p)| format!("{d}: {}", format_expr(p))).collect();
            lines.join("\n")
        }
        Command::Branch { pi, f } => twist::branch(&f, &pi).map_err(err)?.to_string(),
        Command::Lift { pi, a } => format_expr(&twist::lift(&SubChar::new(pi, a)).map_err(err)?),
        Command::Prod { pi, route, left, right } => {
            let a = SubChar::new(pi.clone(), left);
            let b = SubChar::new(pi, right);
            let r = match route {
                Route::Kernel => twist::pi_newell_littlewood(&a, &b, cli.cutoff),
                Route::Lift => twist::twisted_product_lift(&a, &b),
                Route::Cocycle => twist::twisted_product_cocycle(&a, &b),
            };
            r.map_err(err)?.to_string()
        }
        Command::Dim { n, pi, f } => match pi {
            Some(pi) => groups::formal_dimension(&SubChar::new(pi, f), n).map_err(err)?.to_string(),
            None => f.iter().map(|(lam, c)| c * dim_gl(lam, n)).sum::<Integer>().to_string(),
        },
        Command::H13 { what } => h13(what)?,
        Command::Lrcoef { lambda, mu, nu } => symtwist::schur::lr_coefficient(&lambda, &mu, &nu).to_string(),
    };
    Ok(out)
}

fn h13(what: H13) -> Result<String, String> {
    let err = |e: symtwist::Error| e.to_string();
    let lines: Vec<String> = match what {
        H13::Dims => groups::MODIFIED_LABELS
            .iter()
            .map(|parts| {
                let lam = Partition::new(parts.to_vec()).map_err(err)?;
                let a = SubChar::basis(groups::h13(), lam.clone());
                let formal = groups::formal_dimension(&a, groups::RANK).map_err(err)?;
                Ok(format!("({lam})_{formal}  {{{lam}}}_{}", dim_gl(&lam, groups::RANK)))
            })
            .collect::<Result<_, String>>()?,
        H13::Modify => groups::modification_relations_h13().map_err(err)?.iter().map(|r| r.to_string()).collect(),
        H13::Table => groups::product_table_h13().map_err(err)?.iter().map(|r| r.to_string()).collect(),
        H13::Stabcheck { matrix } => {
            let text = std::fs::read_to_string(&matrix).map_err(|e| format!("{}: {e}", matrix.display()))?;
            let m: RationalMatrix4 = text.parse().map_err(err)?;
            vec![groups::stabilizer_check(&m).to_string()]
        }
    };
    Ok(lines.join("\n"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(dir) = &cli.cache {
        if let Err(e) = cache::load(dir) {
            eprintln!("warning: cache not loaded: {e}");
        }
    }
    let cache_dir = cli.cache.clone();
    let result = run(cli);
    if let Some(dir) = &cache_dir {
        if let Err(e) = cache::save(dir) {
            eprintln!("warning: cache not saved: {e}");
        }
    }
    match result {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
