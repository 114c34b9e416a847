//! `--family` mini-language: `wigner:M` or `random:D,N`.

use std::fmt;
use std::str::FromStr;

use matconc_core::ensembles::{random_family, wigner_family};
use matconc_core::{MatrixFamily, Result, RngStream};

/// Stream ids at or above this value are reserved for family draws; trial
/// ids stay below it.
pub const FAMILY_STREAM_BASE: u64 = 1 << 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// The `M(M-1)/2` pair matrices of an `M x M` symmetric matrix.
    Wigner { m: usize },
    /// `N` seeded Gaussian Hermitian members of dimension `D`, each with unit
    /// operator norm.
    Random { dim: usize, n: usize },
}

impl FamilySpec {
    /// Family number `index` under `seed`. Wigner families ignore both.
    pub fn build(&self, seed: u64, index: u64) -> Result<MatrixFamily> {
        match *self {
            FamilySpec::Wigner { m } => wigner_family(m),
            FamilySpec::Random { dim, n } => {
                random_family(&mut RngStream::new(seed, FAMILY_STREAM_BASE + index), dim, n)
            }
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, FamilySpec::Random { .. })
    }

    /// Number of members.
    pub fn members(&self) -> usize {
        match *self {
            FamilySpec::Wigner { m } => m * (m - 1) / 2,
            FamilySpec::Random { n, .. } => n,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Wigner { m } => write!(f, "wigner:{m}"),
            FamilySpec::Random { dim, n } => write!(f, "random:{dim},{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| format!("family {s:?}: expected wigner:M or random:D,N"))?;
        let number = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("family {s:?}: {t:?} is not a non-negative integer"))
        };
        match kind {
            "wigner" => {
                let m = number(args)?;
                if m < 2 {
                    return Err(format!("family {s:?}: M must be at least 2"));
                }
                Ok(FamilySpec::Wigner { m })
            }
            "random" => {
                let (d, n) = args
                    .split_once(',')
                    .ok_or_else(|| format!("family {s:?}: expected random:D,N"))?;
                let (dim, n) = (number(d)?, number(n)?);
                if dim == 0 || n == 0 {
                    return Err(format!("family {s:?}: D and N must be positive"));
                }
                Ok(FamilySpec::Random { dim, n })
            }
            _ => Err(format!("family {s:?}: unknown kind {kind:?}")),
        }
    }
}
