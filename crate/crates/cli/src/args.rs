//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::family::FamilySpec;

#[derive(Debug, Parser)]
#[command(name = "matconc", version, about = "Numerical checks of matrix concentration inequalities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// C_p and moment bounds over a grid of p.
    BoundsTable(BoundsTableArgs),
    /// Golden–Thompson, Trotter–Lie and trace-power gaps for random pairs.
    GtCheck(GtCheckArgs),
    /// Rademacher MGF dominance and the Gaussian MGF identity.
    MgfCheck(MgfCheckArgs),
    /// Exact trace-MGF gaps and the interpolation chain.
    Lemma2(Lemma2Args),
    /// Moment bound against exact and Monte Carlo moments of ‖Z‖.
    Khintchine(KhintchineArgs),
    /// Tail bound against exact and Monte Carlo tail frequencies.
    Tail(TailArgs),
    /// Empirical covariance deviation for bounded isotropic vectors.
    Covariance(CovarianceArgs),
    /// Norm of Gaussian Wigner sums against 2√m.
    Wigner(WignerArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Master seed; trial t draws from stream t of this seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of trials (or random families).
    #[arg(long, default_value_t = 1000)]
    pub trials: u32,
    /// CSV destination; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Relative tolerance for deterministic gaps.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Rademacher,
    Gaussian,
    Both,
}

impl KindArg {
    pub fn rademacher(self) -> bool {
        matches!(self, KindArg::Rademacher | KindArg::Both)
    }

    pub fn gaussian(self) -> bool {
        matches!(self, KindArg::Gaussian | KindArg::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnsembleArg {
    /// `√d e_J` with `J` uniform.
    Basis,
    /// `√d` times a uniform unit vector.
    Sphere,
}

#[derive(Debug, Args)]
pub struct BoundsTableArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_delimiter = ',', default_values_t = [1.0, 2.0, 4.0])]
    pub p: Vec<f64>,
    /// Adds σ and the moment bound for this family.
    #[arg(long)]
    pub family: Option<FamilySpec>,
}

#[derive(Debug, Args)]
pub struct GtCheckArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
    /// Largest operator norm of A and B.
    #[arg(long, default_value_t = 3.0)]
    pub scale: f64,
}

#[derive(Debug, Args)]
pub struct MgfCheckArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
    /// Operator norm of A.
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [0.1, 0.5, 1.0, 2.0, 4.0])]
    pub s: Vec<f64>,
    /// Gauss–Hermite nodes.
    #[arg(long, default_value_t = 64)]
    pub nodes: usize,
    /// Largest accepted Gaussian MGF residual.
    #[arg(long, default_value_t = 1e-8)]
    pub residual_tol: f64,
}

#[derive(Debug, Args)]
pub struct Lemma2Args {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value = "random:2,6")]
    pub family: FamilySpec,
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_values_t = [-2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0]
    )]
    pub s: Vec<f64>,
    /// Relative tolerance for the telescoping identity.
    #[arg(long, default_value_t = 1e-8)]
    pub telescoping_tol: f64,
}

#[derive(Debug, Args)]
pub struct KhintchineArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value = "random:2,8")]
    pub family: FamilySpec,
    #[arg(long, value_delimiter = ',', default_values_t = [1.0, 2.0, 4.0])]
    pub p: Vec<f64>,
    #[arg(long, value_enum, default_value_t = KindArg::Both)]
    pub kind: KindArg,
}

#[derive(Debug, Args)]
pub struct TailArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value = "random:2,8")]
    pub family: FamilySpec,
    /// Grid points on [0, span·σ].
    #[arg(long, default_value_t = 50)]
    pub points: usize,
    #[arg(long, default_value_t = 4.0)]
    pub span: f64,
    #[arg(long, value_enum, default_value_t = KindArg::Both)]
    pub kind: KindArg,
}

#[derive(Debug, Args)]
pub struct CovarianceArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = EnsembleArg::Basis)]
    pub ensemble: EnsembleArg,
    #[arg(long, default_value_t = 10)]
    pub dim: usize,
    /// Vectors per trial.
    #[arg(long, default_value_t = 10_000)]
    pub n: usize,
    /// Emit the tail-frequency grid instead of per-trial rows.
    #[arg(long)]
    pub grid: bool,
    /// Grid points `t_k = 2kε/points`, `k = 1..=points`.
    #[arg(long, default_value_t = 10)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub struct WignerArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 100)]
    pub m: usize,
}

fn list(values: &[f64]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::BoundsTable(_) => "bounds-table",
            Command::GtCheck(_) => "gt-check",
            Command::MgfCheck(_) => "mgf-check",
            Command::Lemma2(_) => "lemma2",
            Command::Khintchine(_) => "khintchine",
            Command::Tail(_) => "tail",
            Command::Covariance(_) => "covariance",
            Command::Wigner(_) => "wigner",
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::BoundsTable(a) => &a.common,
            Command::GtCheck(a) => &a.common,
            Command::MgfCheck(a) => &a.common,
            Command::Lemma2(a) => &a.common,
            Command::Khintchine(a) => &a.common,
            Command::Tail(a) => &a.common,
            Command::Covariance(a) => &a.common,
            Command::Wigner(a) => &a.common,
        }
    }

    /// Every flag with its effective value, defaults included, in a form
    /// that parses back to the same command.
    pub fn echo(&self) -> String {
        let c = self.common();
        let out = c
            .out
            .as_ref()
            .map(|p| p.display().to_string())
            .unwrap_or_else(|| "-".into());
        let mut flags = vec![
            ("seed", c.seed.to_string()),
            ("trials", c.trials.to_string()),
            ("out", out),
            ("tol", c.tol.to_string()),
        ];
        match self {
            Command::BoundsTable(a) => {
                flags.push(("p", list(&a.p)));
                if let Some(f) = &a.family {
                    flags.push(("family", f.to_string()));
                }
            }
            Command::GtCheck(a) => {
                flags.push(("dim", a.dim.to_string()));
                flags.push(("scale", a.scale.to_string()));
            }
            Command::MgfCheck(a) => {
                flags.push(("dim", a.dim.to_string()));
                flags.push(("scale", a.scale.to_string()));
                flags.push(("s", list(&a.s)));
                flags.push(("nodes", a.nodes.to_string()));
                flags.push(("residual-tol", a.residual_tol.to_string()));
            }
            Command::Lemma2(a) => {
                flags.push(("family", a.family.to_string()));
                flags.push(("s", list(&a.s)));
                flags.push(("telescoping-tol", a.telescoping_tol.to_string()));
            }
            Command::Khintchine(a) => {
                flags.push(("family", a.family.to_string()));
                flags.push(("p", list(&a.p)));
                flags.push(("kind", format!("{:?}", a.kind).to_lowercase()));
            }
            Command::Tail(a) => {
                flags.push(("family", a.family.to_string()));
                flags.push(("points", a.points.to_string()));
                flags.push(("span", a.span.to_string()));
                flags.push(("kind", format!("{:?}", a.kind).to_lowercase()));
            }
            Command::Covariance(a) => {
                flags.push(("ensemble", format!("{:?}", a.ensemble).to_lowercase()));
                flags.push(("dim", a.dim.to_string()));
                flags.push(("n", a.n.to_string()));
                if a.grid {
                    flags.push(("grid", String::new()));
                }
                flags.push(("points", a.points.to_string()));
            }
            Command::Wigner(a) => {
                flags.push(("m", a.m.to_string()));
            }
        }
        let mut line = format!("matconc {}", self.name());
        for (k, v) in flags {
            if v.is_empty() {
                line.push_str(&format!(" --{k}"));
            } else {
                line.push_str(&format!(" --{k} {v}"));
            }
        }
        line
    }
}
