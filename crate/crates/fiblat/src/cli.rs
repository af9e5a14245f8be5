//! Command-line grammar.

use clap::{Args, Parser, Subcommand};

use crate::commands::{EnergyMethod, Family, SumMethod};
use crate::config::Format;

#[derive(Debug, Parser)]
#[command(name = "fiblat", version, about = "Fibonacci lattice energies, Wythoff arrays and their asymptotics")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Mantissa bits: 53 runs in f64, 54 to 106 in double-double.
    #[arg(long, global = true, env = "FIBLAT_PRECISION_BITS", default_value_t = 53)]
    pub precision_bits: u32,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true, env = "FIBLAT_THREADS")]
    pub threads: Option<usize>,
    /// Output format; `wythoff` and `fit` default to csv, the rest to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Rows kept in the series for C and D.
    #[arg(long, global = true)]
    pub i_max: Option<u64>,
    /// Terms kept per row in the series for D.
    #[arg(long, global = true)]
    pub k_max: Option<u64>,
    /// Relative tolerance for the floating-point checks of `verify`.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Wythoff array, or its dual with `--dual`.
    Wythoff {
        #[arg(long, default_value_t = 8)]
        rows: u64,
        #[arg(long, default_value_t = 6)]
        cols: u64,
        /// Print W*_{i,μ_i+j} with the μ_i column instead of W_{i,j} with η_i.
        #[arg(long)]
        dual: bool,
    },
    /// Evaluate the trigonometric sum over the Fibonacci grid of size F_n.
    Sum {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        sigma: f64,
        /// one, fsigma, fsigma:<sigma>, trig:<a0,a1,...> or bern:<2s>.
        #[arg(long, default_value = "one")]
        kernel: String,
        #[arg(long, value_enum, default_value_t = SumMethod::Flat)]
        method: SumMethod,
    },
    /// Tensor-product energy of the rank-1 lattice with N points and generator h.
    Energy {
        /// Number of points N.
        #[arg(long)]
        n: u64,
        /// Generator; defaults to the preceding Fibonacci number when N is one.
        #[arg(long)]
        h: Option<u64>,
        #[arg(long)]
        sigma: f64,
        #[arg(long, default_value_t = 1.0)]
        p: f64,
        #[arg(long, value_enum, default_value_t = EnergyMethod::All)]
        method: EnergyMethod,
    },
    /// Asymptotic constants C and D with error estimates.
    Constants {
        #[arg(long)]
        sigma: f64,
        #[arg(long, default_value = "one")]
        kernel: String,
    },
    /// Exact closed forms over a range of n, or one generalized Dedekind sum.
    Closed {
        /// Family to evaluate; omit it and pass --a --b --c for a single s_{ℓ,m}(a,b;c).
        #[arg(value_enum)]
        family: Option<Family>,
        #[arg(long, conflicts_with_all = ["from", "to"])]
        n: Option<u64>,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
        #[arg(long, default_value_t = 2)]
        ell: u32,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, conflicts_with = "family", requires_all = ["b", "c"])]
        a: Option<u64>,
        #[arg(long, requires = "a")]
        b: Option<u64>,
        #[arg(long, requires = "a")]
        c: Option<u64>,
    },
    /// Run identity suites; exits with 1 on the first counterexample.
    Verify {
        /// wythoff, dual, floor, ineq, reciprocity, closedform, dft, zeta-routes or all; repeatable.
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        /// Range of the suite: largest partitioned integer (wythoff), rows (dual), N and i (floor),
        /// grid points (ineq), random pairs (reciprocity), largest n (closedform), largest N (dft),
        /// rows of the η-series (zeta-routes).
        #[arg(long)]
        limit: Option<u64>,
        /// Seed for the random coprime pairs.
        #[arg(long, default_value_t = 20_260_101)]
        seed: u64,
    },
    /// Residuals of the sum against its asymptote Cn + D.
    Fit {
        #[arg(long)]
        sigma: f64,
        #[arg(long, default_value = "one")]
        kernel: String,
        #[arg(long, default_value_t = 10)]
        n_min: u64,
        #[arg(long, default_value_t = 25)]
        n_max: u64,
        /// n at which D is held out when no closed form exists.
        #[arg(long)]
        n_hold: Option<u64>,
    },
}
