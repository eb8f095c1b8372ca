use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use ddgl2::catalog::{self, Instance};
use ddgl2::clifford::operator_generators;
use ddgl2::gl2::{gl2_equivalent, GL2Rep};
use ddgl2::io::{mat_to_json, MatrixJson};
use ddgl2::report::{verify_catalog, VerifyOptions};
use ddgl2::scalar::parse_gauss;
use ddgl2::spinor::{
    admissibility, commutant_b, commutant_bprime, spinor_equivalent, Orientation, QSpinorRep,
};
use ddgl2::{Mat, MatSpace, Scalar};

#[derive(Parser)]
#[command(
    name = "ddgl2",
    version,
    about = "Exact checks for quantum GL2 representations and q-spinors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Single,
    Family,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    Default,
    Flipped,
}

#[derive(Subcommand)]
enum Command {
    /// Verify every catalog entry against its claims.
    VerifyCatalog {
        #[arg(long)]
        entry: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Sample point substituted for q in the numeric cross-check.
        #[arg(long, default_value = "2")]
        q0: String,
    },
    /// Solve AB = qBA for B (or B'A = qAB' with --prime).
    Commutant {
        a: PathBuf,
        #[arg(long)]
        prime: bool,
    },
    /// Decide admissibility of the q-spinor (A, B).
    Admissible {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "default")]
        orientation: OrientationArg,
    },
    /// Matrices commuting with every given matrix.
    Centralizer {
        #[arg(required = true)]
        mats: Vec<PathBuf>,
    },
    /// Subalgebra generated by the given matrices, or by a catalog entry's
    /// C_ij and inverse quantum determinant.
    Closure {
        mats: Vec<PathBuf>,
        #[arg(long)]
        entry: Option<String>,
        #[arg(long, value_enum, default_value = "family")]
        mode: Mode,
    },
    /// Search for an equivalence between two representations given as JSON
    /// objects with keys a, b or c11, c12, c21, c22.
    Equiv { left: PathBuf, right: PathBuf },
    /// Print the catalog as a JSON bundle.
    ExportCatalog,
}

fn read_mat(path: &Path) -> anyhow::Result<Mat> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    ddgl2::io::mat_from_json_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn space_json(s: &MatSpace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(mat_to_json).collect::<Vec<_>>(),
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RepFile {
    Gl2 {
        c11: MatrixJson,
        c12: MatrixJson,
        c21: MatrixJson,
        c22: MatrixJson,
    },
    Spinor {
        a: MatrixJson,
        b: MatrixJson,
    },
}

fn read_rep(path: &Path) -> anyhow::Result<Instance> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let rep: RepFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(match rep {
        RepFile::Gl2 { c11, c12, c21, c22 } => Instance::Gl2(GL2Rep::new(
            c11.to_mat()?,
            c12.to_mat()?,
            c21.to_mat()?,
            c22.to_mat()?,
        )?),
        RepFile::Spinor { a, b } => Instance::QSpinor {
            rep: QSpinorRep::new(a.to_mat()?, b.to_mat()?, Scalar::q())?,
            bprime: None,
        },
    })
}

fn print_out(text: &str) -> std::io::Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()
}

fn print_json(v: &Value) -> std::io::Result<()> {
    print_out(&format!("{}\n", serde_json::to_string_pretty(v)?))
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let q = Scalar::q();
    match cli.command {
        Command::VerifyCatalog { entry, format, q0 } => {
            let q0 = parse_gauss(&q0).context("parsing --q0")?;
            let report = verify_catalog(&VerifyOptions { entry, q0 })?;
            match format {
                Format::Json => print_json(&serde_json::to_value(&report)?)?,
                Format::Table => print_out(&report.to_table())?,
            }
            return Ok(report.exit_code() as u8);
        }
        Command::Commutant { a, prime } => {
            let a = read_mat(&a)?;
            let s = if prime {
                commutant_bprime(&a, &q)
            } else {
                commutant_b(&a, &q)
            };
            print_json(&space_json(&s))?;
        }
        Command::Admissible { a, b, orientation } => {
            let (a, b) = (read_mat(&a)?, read_mat(&b)?);
            let orientation = match orientation {
                OrientationArg::Default => Orientation::Default,
                OrientationArg::Flipped => Orientation::Flipped,
            };
            let w = admissibility(&a, &b, &q, orientation)?;
            print_json(&json!({
                "admissible": w.admissible,
                "orientation": orientation,
                "c_space": space_json(&w.c_space),
                "witness_c": w.witness_c.as_ref().map(mat_to_json),
            }))?;
        }
        Command::Centralizer { mats } => {
            let mats = mats
                .iter()
                .map(|p| read_mat(p))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let n = mats[0].rows();
            print_json(&space_json(&MatSpace::centralizer(n, &mats)))?;
        }
        Command::Closure { mats, entry, mode } => {
            let gens = match entry {
                Some(name) => {
                    if !mats.is_empty() {
                        bail!("give either matrix files or --entry, not both");
                    }
                    let e = catalog::entry(&name)?;
                    let insts = match mode {
                        Mode::Single => vec![e.instantiate(&[])?],
                        Mode::Family => e.family()?,
                    };
                    let reps: Vec<GL2Rep<Scalar>> = insts
                        .iter()
                        .map(|i| i.as_gl2().cloned())
                        .collect::<Option<_>>()
                        .with_context(|| format!("{name} is not a GL2 entry"))?;
                    operator_generators(&reps)?
                }
                None => {
                    if mats.is_empty() {
                        bail!("no generators given");
                    }
                    mats.iter()
                        .map(|p| read_mat(p))
                        .collect::<anyhow::Result<Vec<_>>>()?
                }
            };
            let n = gens[0].rows();
            print_json(&space_json(&MatSpace::subalgebra_closure(n, &gens)))?;
        }
        Command::Equiv { left, right } => {
            let (l, r) = (read_rep(&left)?, read_rep(&right)?);
            let out = match (&l, &r) {
                (Instance::Gl2(r1), Instance::Gl2(r2)) => match gl2_equivalent(r1, r2, &q)? {
                    Some(w) => json!({
                        "equivalent": true,
                        "u": mat_to_json(&w.u),
                        "alpha1": w.alpha1.to_string(),
                        "alpha2": w.alpha2.to_string(),
                    }),
                    None => {
                        json!({ "equivalent": false, "search": "monomial scalings q^k, |k| <= 4" })
                    }
                },
                (Instance::QSpinor { rep: r1, .. }, Instance::QSpinor { rep: r2, .. }) => {
                    match spinor_equivalent(r1, r2)? {
                        Some(w) => json!({
                            "equivalent": true,
                            "u": mat_to_json(&w.u),
                            "alpha": w.alpha.to_string(),
                        }),
                        None => {
                            json!({ "equivalent": false, "search": "monomial scalings q^k, |k| <= 4" })
                        }
                    }
                }
                _ => bail!("both files must hold the same kind of representation"),
            };
            print_json(&out)?;
        }
        Command::ExportCatalog => print_json(&catalog::export_bundle()?)?,
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e)
            if e.downcast_ref::<std::io::Error>().map(std::io::Error::kind)
                == Some(std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
