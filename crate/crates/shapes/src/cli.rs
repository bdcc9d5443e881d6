//! The `shapes` command line.
//!
//! Every verb writes one JSON document (or DOT for `graph --format dot`) to
//! standard output. Exit codes: 0 on success, 1 on a domain error (with a
//! JSON error object), 2 on a usage error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use shapes_core::groebner::{straighten, GroebnerBasis};
use shapes_core::plucker_ideals::generating_set;
use shapes_core::polyring::{Monomial, OrderKind, RingKind};
use shapes_core::representation::{module_basis, tau_module, GeneratorLabel, ModuleKind};
use shapes_core::tableaux::{extract_trivial_columns, tau_tableau, YoungTableau};
use shapes_core::{Error, Weight};

use crate::cache::{GbCache, DEFAULT_DIR};
use crate::format::{self, to_json};
use crate::parallel;
use crate::verify::{self, Outcome};

#[derive(Parser, Debug)]
#[command(
    name = "shapes",
    version,
    about = "Shape algebra of sl(n): Plücker ideals, Groebner bases, tableaux and module matrices"
)]
pub struct Cli {
    /// Directory holding cached Groebner bases.
    #[arg(long, global = true, default_value = DEFAULT_DIR)]
    pub cache_dir: PathBuf,
    /// Recompute Groebner bases instead of reading or writing the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum RingArg {
    Full,
    ReducedPlus,
    ReducedMinus,
}

impl From<RingArg> for RingKind {
    fn from(r: RingArg) -> RingKind {
        match r {
            RingArg::Full => RingKind::Full,
            RingArg::ReducedPlus => RingKind::ReducedPlus,
            RingArg::ReducedMinus => RingKind::ReducedMinus,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum KindArg {
    /// Quasi-standard monomials in the reduced ring.
    Cone,
    /// Semistandard monomials in the full ring.
    Full,
}

impl From<KindArg> for ModuleKind {
    fn from(k: KindArg) -> ModuleKind {
        match k {
            KindArg::Cone => ModuleKind::QuasiStandardCone,
            KindArg::Full => ModuleKind::SemistandardFull,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

/// `paper` or an explicit order name.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum OrderArg {
    Paper,
    Kind(OrderKind),
}

impl OrderArg {
    fn resolve(self, ring: RingKind) -> OrderKind {
        match self {
            OrderArg::Paper => ring.paper_order(),
            OrderArg::Kind(k) => k,
        }
    }
}

fn parse_order(s: &str) -> Result<OrderArg, String> {
    if s == "paper" {
        return Ok(OrderArg::Paper);
    }
    s.parse().map(OrderArg::Kind).map_err(|e: Error| e.to_string())
}

fn parse_rank(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("not a rank: {s:?}"))?;
    if !(2..=shapes_core::MAX_N).contains(&n) {
        return Err(format!("n must lie in 2..={}", shapes_core::MAX_N));
    }
    Ok(n)
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Quadratic Plücker generators of the ideal.
    Relations {
        #[arg(long, value_parser = parse_rank)]
        n: usize,
        #[arg(long, value_enum, default_value = "full")]
        ring: RingArg,
    },
    /// Reduced Groebner basis of the Plücker ideal.
    Gb {
        #[arg(long, value_parser = parse_rank)]
        n: usize,
        #[arg(long, value_enum, default_value = "reduced-plus")]
        ring: RingArg,
        /// `paper` or one of shape_lex, shape_grevlex, reduced_graded,
        /// anti_shape_lex, anti_reduced_graded.
        #[arg(long, value_parser = parse_order, default_value = "paper")]
        order: OrderArg,
        /// Also list the leading terms.
        #[arg(long)]
        emit_lt: bool,
    },
    /// Normal form of the tableau monomial.
    Straighten {
        #[arg(long, value_parser = parse_rank)]
        n: usize,
        #[arg(long, value_enum, default_value = "reduced-plus")]
        ring: RingArg,
        /// Row form "1 2/3" or column form "cols[(1,3),(2)]".
        #[arg(long)]
        tableau: String,
    },
    /// Splits a semistandard tableau into trivial and quasi-standard parts.
    Extract {
        #[arg(long, value_parser = parse_rank)]
        n: usize,
        #[arg(long)]
        tableau: String,
    },
    /// The reflection τ of a tableau, and of its cone vector when a weight is
    /// given.
    Tau {
        #[arg(long, value_parser = parse_rank)]
        n: usize,
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        weight: Option<String>,
    },
    /// Basis of the module with the given highest weight.
    Basis {
        #[arg(long, value_parser = parse_rank)]
        n: usize,
        /// Comma-separated fundamental coordinates a1,...,a(n-1).
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "cone")]
        kind: KindArg,
    },
    /// Matrix of a generator such as e12, e:3,11 or h:1,-1,0.
    Matrix {
        #[arg(long, value_parser = parse_rank)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        gen: String,
        #[arg(long, value_enum, default_value = "cone")]
        kind: KindArg,
    },
    /// Cone basis with the simple raising and lowering edges.
    Graph {
        #[arg(long, value_parser = parse_rank)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Runs the oracle suite on seeded samples.
    Verify {
        #[arg(long, value_parser = parse_rank)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
}

/// What a run produced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { code: 0, stdout, stderr: String::new() }
    }

    fn usage(message: String) -> Self {
        Output { code: 2, stdout: String::new(), stderr: message }
    }

    fn domain(e: &Error) -> Self {
        Output { code: 1, stdout: to_json(&format::error_doc(e)), stderr: format!("error: {e}\n") }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Output::usage(text) } else { Output::ok(text) };
        }
    };
    run_command(&cli)
}

pub fn run_command(cli: &Cli) -> Output {
    let cache = if cli.no_cache { GbCache::disabled() } else { GbCache::new(&cli.cache_dir) };
    match execute(&cli.command, &cache) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => Output::usage(format!("error: {msg}\n\nFor more information, try '--help'.\n")),
        Err(Failure::Domain(e)) => Output::domain(&e),
    }
}

fn weight(n: usize, text: &str) -> Result<Weight, Failure> {
    let w = format::weight_from_list(n, text).map_err(Failure::Usage)?;
    if !w.is_dominant() {
        return Err(Failure::Domain(Error::InvalidWeight(format!("{w} is not dominant"))));
    }
    Ok(w)
}

fn tableau(n: usize, text: &str) -> Result<YoungTableau, Failure> {
    Ok(YoungTableau::parse(n, text)?)
}

fn basis_for(n: usize, ring: RingKind, order: OrderKind, cache: &GbCache) -> Result<GroebnerBasis, Failure> {
    if ring == RingKind::ReducedMinus && order == RingKind::ReducedMinus.paper_order() {
        return Ok(cache.context(n, false)?.basis(ring)?.clone());
    }
    Ok(cache.basis(n, ring, order)?)
}

fn execute(command: &Command, cache: &GbCache) -> Result<Output, Failure> {
    let doc = match command {
        Command::Relations { n, ring } => {
            let ideal = generating_set(*n, (*ring).into())?;
            to_json(&format::relations_doc(&ideal.generators))
        }
        Command::Gb { n, ring, order, emit_lt } => {
            let ring = RingKind::from(*ring);
            let gb = basis_for(*n, ring, order.resolve(ring), cache)?;
            to_json(&format::groebner_doc(&gb, *emit_lt))
        }
        Command::Straighten { n, ring, tableau: text } => {
            let t = tableau(*n, text)?;
            let ring = RingKind::from(*ring);
            let ctx = cache.context(*n, ring == RingKind::Full)?;
            let nf = straighten(&t, ring, &ctx)?;
            to_json(&format::StraightenDoc {
                tableau: format::tableau_doc(&t),
                normal_form: format::polynomial_doc(&nf),
            })
        }
        Command::Extract { n, tableau: text } => {
            let t = tableau(*n, text)?;
            let (pair, steps) = extract_trivial_columns(&t)?;
            to_json(&format::extract_doc(&t, &pair, &steps))
        }
        Command::Tau { n, tableau: text, weight: w } => {
            let t = tableau(*n, text)?;
            let lambda = w.as_deref().map(|w| weight(*n, w)).transpose()?;
            let (phase, image) = tau_tableau(&t);
            let module_image = match lambda {
                Some(lambda) => {
                    let ctx = cache.context(*n, false)?;
                    Some(format::polynomial_doc(&tau_module(&Monomial::from_tableau(&t), &lambda, &ctx)?))
                }
                None => None,
            };
            to_json(&format::TauDoc {
                tableau: format::tableau_doc(&t),
                image: format::tableau_doc(&image),
                phase: format::phase_doc(&phase),
                module_image,
            })
        }
        Command::Basis { n, weight: w, kind } => {
            let lambda = weight(*n, w)?;
            to_json(&format::basis_doc(&module_basis(&lambda, (*kind).into())?)?)
        }
        Command::Matrix { n, weight: w, gen, kind } => {
            let lambda = weight(*n, w)?;
            let g = GeneratorLabel::parse(*n, gen)?;
            let kind = ModuleKind::from(*kind);
            let basis = module_basis(&lambda, kind)?;
            let ctx = cache.context(*n, kind == ModuleKind::SemistandardFull)?;
            let m = parallel::generator_matrix(&g, &basis, &ctx)?;
            to_json(&format::matrix_doc(&basis, &g.label(), &m))
        }
        Command::Graph { n, weight: w, format: f } => {
            let lambda = weight(*n, w)?;
            let ctx = cache.context(*n, false)?;
            let graph = parallel::diamond_graph(&lambda, &ctx)?;
            match f {
                GraphFormat::Dot => graph.to_dot(),
                GraphFormat::Json => to_json(&format::graph_doc(&graph)),
            }
        }
        Command::Verify { n, seed, samples } => {
            let ctx = cache.context(*n, false)?;
            return Ok(match verify::run(*n, *seed, *samples, &ctx)? {
                Outcome::Passed(report) => Output::ok(to_json(&report)),
                Outcome::Failed(c) => Output {
                    code: 1,
                    stdout: to_json(&json!({ "counterexample": c })),
                    stderr: format!("verification failed: {}\n", c.check),
                },
            });
        }
    };
    Ok(Output::ok(doc))
}
