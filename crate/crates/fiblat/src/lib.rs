//! Command-line frontend for `fiblat-core`: IO, output formats, the parallel
//! reducer and run configuration.

pub mod cli;
pub mod commands;
pub mod config;
pub mod output;
pub mod par;

use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cli::{Cli, Command};
use commands::{ClosedQuery, Output, Suite};
use config::{RunConfig, UsageError};

/// `count` coprime pairs `(b, c)` with `1 ≤ b < c ≤ c_max`, reproducible from `seed`.
pub fn random_coprime_pairs(count: usize, c_max: u64, seed: u64) -> Vec<(u64, u64)> {
    assert!(c_max >= 2);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c = rng.random_range(2..=c_max);
        let b = rng.random_range(1..c);
        if b.gcd(&c) == 1 {
            out.push((b, c));
        }
    }
    out
}

pub fn run_config(cli: &Cli) -> Result<RunConfig, UsageError> {
    let g = &cli.global;
    RunConfig::new(g.precision_bits, g.threads, g.format, g.i_max, g.k_max, g.tol)
}

/// Runs one parsed invocation on a pool of `cfg.threads` workers.
pub fn run(cli: &Cli) -> Result<Output, UsageError> {
    let cfg = run_config(cli)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| UsageError(format!("cannot start {} threads: {e}", cfg.threads)))?;
    pool.install(|| dispatch(&cfg, &cli.command))
}

fn dispatch(cfg: &RunConfig, cmd: &Command) -> Result<Output, UsageError> {
    match cmd {
        &Command::Wythoff { rows, cols, dual } => commands::cmd_wythoff(cfg, rows, cols, dual),
        Command::Sum { n, sigma, kernel, method } => commands::cmd_sum(cfg, *n, *sigma, kernel, *method),
        &Command::Energy { n, h, sigma, p, method } => commands::cmd_energy(cfg, n, h, sigma, p, method),
        Command::Constants { sigma, kernel } => commands::cmd_constants(cfg, *sigma, kernel),
        &Command::Closed { family, n, from, to, ell, m, a, b, c } => {
            let q = match (family, a, b, c) {
                (None, Some(a), Some(b), Some(c)) => ClosedQuery::General { ell, m, a, b, c },
                (Some(family), None, ..) => {
                    let (n_from, n_to) = match (n, from, to) {
                        (Some(n), ..) => (n, n),
                        (None, Some(f), Some(t)) => (f, t),
                        (None, Some(f), None) => (f, f),
                        _ => return Err(UsageError("pass --n or --from/--to".into())),
                    };
                    ClosedQuery::Family { family, n_from, n_to, ell, m }
                }
                _ => return Err(UsageError("pass a family, or --a --b --c for a single sum".into())),
            };
            commands::cmd_closed(cfg, &q)
        }
        Command::Verify { suite, limit, seed } => {
            let suites = if suite.iter().any(|s| s == "all") {
                Vec::new()
            } else {
                suite.iter().map(|s| s.parse()).collect::<Result<Vec<Suite>, _>>()?
            };
            commands::cmd_verify(cfg, &suites, *limit, *seed)
        }
        &Command::Fit { sigma, ref kernel, n_min, n_max, n_hold } => {
            commands::cmd_fit(cfg, sigma, kernel, n_min, n_max, n_hold)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_pairs_are_coprime_and_reproducible() {
        let a = random_coprime_pairs(200, 5000, 7);
        assert_eq!(a, random_coprime_pairs(200, 5000, 7));
        assert_ne!(a, random_coprime_pairs(200, 5000, 8));
        assert!(a.iter().all(|&(b, c)| b < c && c <= 5000 && b.gcd(&c) == 1));
    }
}
