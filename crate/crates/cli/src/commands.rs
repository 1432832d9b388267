use std::collections::BTreeSet;
use std::path::PathBuf;

use bnskein::cobordism::DecoratedCobordism;
use bnskein::colimit::{colim_bruteforce, colim_terminal};
use bnskein::rewrite;
use bnskein::skein::{
    local_connected_closed_form, present, sigma_i_pipeline_dims, tensor_algebra_oracle, unorientable_graded,
};
use bnskein_exact::Ring;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::formats::{load_algebra, parse_cobordism, parse_functor_graph, parse_graph, CobordismDoc};
use crate::report::{graded_table, invariants_json, linmap_report, presentation_report, ring_tag};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Q,
    Z,
}

impl RingArg {
    pub fn ring(self) -> Ring {
        match self {
            RingArg::Q => Ring::Rational,
            RingArg::Z => Ring::Integer,
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct Common {
    /// Compute invariants over the rationals (dimension) or the integers (rank and torsion).
    #[arg(long, value_enum, default_value = "q", global = true)]
    pub ring: RingArg,
    /// Do not run the axiom check on user-supplied algebras.
    #[arg(long, global = true)]
    pub skip_verify: bool,
}

#[derive(Debug, Parser)]
#[command(name = "bnskein", version, about = "Skein modules from Frobenius algebras")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the Frobenius axioms of a built-in or user algebra.
    CheckAlgebra {
        /// Built-in name or path to an algebra file.
        algebra: String,
    },
    /// Evaluate the TQFT on a decorated cobordism.
    Tqft {
        cobordism: PathBuf,
        #[arg(long, default_value = "khovanov")]
        algebra: String,
        /// Use the genus-blind evaluation instead.
        #[arg(long)]
        tilde: bool,
    },
    /// Glue two cobordisms: `top ∘ bottom`.
    Glue {
        #[arg(long)]
        bottom: PathBuf,
        #[arg(long)]
        top: PathBuf,
    },
    /// Colimit of a functor graph.
    Colim {
        graph: PathBuf,
        /// Comma-separated terminal vertices; without it the brute-force presentation is used.
        #[arg(long, value_delimiter = ',')]
        terminal: Option<Vec<String>>,
        /// Compute both presentations and compare their invariants.
        #[arg(long)]
        check: bool,
    },
    /// Present the skein module of a tunneling graph.
    Present { graph: PathBuf },
    /// Graded dimensions of the Σ × I module, optionally against the tensor-algebra oracle.
    SigmaI {
        #[arg(long, default_value = "khovanov")]
        algebra: String,
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = 0)]
        parity: u32,
        #[arg(long)]
        max_k: u32,
        #[arg(long)]
        oracle: bool,
    },
    /// Graded dimensions of the unorientable module, optionally against the rewrite route.
    Unorientable {
        #[arg(long, default_value = "khovanov")]
        algebra: String,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long)]
        max_degree: u32,
        #[arg(long)]
        oracle: bool,
    },
    /// Compare the connected-surface closed form with the presented module.
    LocalConnected { graph: PathBuf },
}

/// A report plus the exit code it should produce.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report, code: 0 }
    }

    fn compared(report: Value, agree: bool) -> Self {
        Outcome {
            report,
            code: if agree { 0 } else { 2 },
        }
    }
}

fn require_q(common: &Common, what: &str) -> Result<()> {
    if common.ring != RingArg::Q {
        return Err(CliError::Usage(format!(
            "{what} is a graded computation and needs --ring q"
        )));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let common = &cli.common;
    let verify = !common.skip_verify;
    let ring = common.ring.ring();
    match &cli.command {
        Command::CheckAlgebra { algebra } => {
            let alg = load_algebra(algebra, false)?;
            let report = alg.verify_axioms();
            let out = json!({
                "algebra": algebra,
                "ring": alg.ring().to_string(),
                "rank": alg.rank(),
                "checked": report.checked,
                "failures": report.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "passed": report.passed(),
            });
            Ok(Outcome {
                code: if report.passed() { 0 } else { 1 },
                report: out,
            })
        }
        Command::Tqft {
            cobordism,
            algebra,
            tilde,
        } => {
            let alg = load_algebra(algebra, verify)?;
            let c = parse_cobordism(cobordism)?;
            let map = if *tilde {
                c.tqft_tilde(&alg)?
            } else {
                c.tqft_eval(&alg)?
            };
            Ok(Outcome::ok(linmap_report(&alg, &map)))
        }
        Command::Glue { bottom, top } => {
            let (b, t) = (parse_cobordism(bottom)?, parse_cobordism(top)?);
            let glued = DecoratedCobordism::compose(&t, &b)?;
            Ok(Outcome::ok(
                serde_json::to_value(CobordismDoc::of(&glued)).expect("serializable"),
            ))
        }
        Command::Colim { graph, terminal, check } => {
            let file = parse_functor_graph(graph, verify)?;
            let alg = file.algebra.to_ring(&ring)?;
            let g = file.graph.to_ring(&ring)?;
            let brute = || colim_bruteforce(&g);
            let (p, inv) = match terminal {
                Some(t) => colim_terminal(&g, &t.iter().cloned().collect::<BTreeSet<_>>(), None)?,
                None => brute()?,
            };
            let mut report = presentation_report(&alg, &ring, &p, &inv);
            if *check {
                let other = brute()?.1;
                let agree = other == inv;
                report["bruteforce"] = invariants_json(&other);
                report["agree"] = Value::Bool(agree);
                return Ok(Outcome::compared(report, agree));
            }
            Ok(Outcome::ok(report))
        }
        Command::Present { graph } => {
            let file = parse_graph(graph, verify)?;
            let (p, inv) = present(&file.algebra, &file.graph, &ring)?;
            Ok(Outcome::ok(presentation_report(
                &file.algebra.to_ring(&ring)?,
                &ring,
                &p,
                &inv,
            )))
        }
        Command::SigmaI {
            algebra,
            genus,
            parity,
            max_k,
            oracle,
        } => {
            require_q(common, "sigma-i")?;
            let alg = load_algebra(algebra, verify)?;
            let pipeline = sigma_i_pipeline_dims(&alg, *genus, *parity, *max_k)?;
            let reference = if *oracle {
                Some(tensor_algebra_oracle(&alg, *genus, *parity, *max_k)?)
            } else {
                None
            };
            let mut report = json!({
                "algebra": algebra,
                "genus": genus,
                "parity": parity,
                "max_k": max_k,
            });
            let table = graded_table("pipeline", &pipeline, reference.as_deref().map(|r| ("oracle", r)));
            merge(&mut report, table);
            let agree = reference.is_none_or(|r| r == pipeline);
            Ok(Outcome::compared(report, agree))
        }
        Command::Unorientable {
            algebra,
            n,
            max_degree,
            oracle,
        } => {
            require_q(common, "unorientable")?;
            let alg = load_algebra(algebra, verify)?;
            let ideal = unorientable_graded(&alg, *n, *max_degree)?;
            let reference = if *oracle {
                Some(rewrite::graded_dimensions(
                    &alg.to_ring(&Ring::Rational)?,
                    *n,
                    *max_degree,
                )?)
            } else {
                None
            };
            let mut report = json!({
                "algebra": algebra,
                "n": n,
                "max_degree": max_degree,
            });
            merge(
                &mut report,
                graded_table("ideal", &ideal, reference.as_deref().map(|r| ("rewrite", r))),
            );
            let agree = reference.is_none_or(|r| r == ideal);
            Ok(Outcome::compared(report, agree))
        }
        Command::LocalConnected { graph } => {
            let file = parse_graph(graph, verify)?;
            let alg = file.algebra.to_ring(&ring)?;
            let closed = local_connected_closed_form(&alg, &file.graph)?;
            let (_, presented) = present(&alg, &file.graph, &ring)?;
            let agree = closed == presented;
            let report = json!({
                "ring": ring_tag(&ring),
                "closed_form": invariants_json(&closed),
                "present": invariants_json(&presented),
                "agree": agree,
            });
            Ok(Outcome::compared(report, agree))
        }
    }
}

fn merge(into: &mut Value, from: Value) {
    if let (Some(a), Value::Object(b)) = (into.as_object_mut(), from) {
        a.extend(b);
    }
}
