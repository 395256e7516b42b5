//! Coupon-collector statistics and the batched-occupancy formulas the
//! diameter estimate is built on, plus a seeded Monte Carlo oracle.
//!
//! For a population of `N` equally likely items: `expected_coverings` is the
//! expected number of uniform draws until every item has appeared,
//! `completion_probability` the asymptotic law for finishing within `T`
//! draws, and `expected_distinct`/`expected_unseen` the occupancy counts
//! after a fixed number of draws.

use crate::error::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Exact mode evaluates the finite sums (practical for `N` up to about
/// `10^8`); asymptotic mode uses the large-`N` forms and accepts any real
/// `N`, however astronomical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    Asymptotic,
}

const EXACT_SUM_LIMIT: f64 = 100_000_000.0;

fn check_population(population: f64, mode: Mode) -> Result<(), Error> {
    if !(population >= 1.0) {
        return Err(Error::InvalidInput(format!(
            "population must be >= 1, got {population}"
        )));
    }
    if mode == Mode::Exact && (population > EXACT_SUM_LIMIT || population.fract() != 0.0) {
        return Err(Error::InvalidInput(format!(
            "exact mode needs an integer population <= {EXACT_SUM_LIMIT:.0}, got {population}"
        )));
    }
    Ok(())
}

fn harmonic(n: u64) -> f64 {
    // summed small-to-large to keep the tail digits
    (1..=n).rev().map(|k| 1.0 / k as f64).sum()
}

fn harmonic_squares(n: u64) -> f64 {
    (1..=n).rev().map(|k| 1.0 / (k as f64 * k as f64)).sum()
}

/// Expected draws to see the whole population: `N * H_N` exactly, or
/// `N ln N + gamma N` asymptotically.
pub fn expected_coverings(population: f64, mode: Mode) -> Result<f64, Error> {
    check_population(population, mode)?;
    Ok(match mode {
        Mode::Exact => population * harmonic(population as u64),
        Mode::Asymptotic => population * (population.ln() + EULER_GAMMA),
    })
}

/// Standard deviation of the covering time; tends to `1.28 N`.
pub fn coverings_stddev(population: f64, mode: Mode) -> Result<f64, Error> {
    check_population(population, mode)?;
    let variance = match mode {
        Mode::Exact => {
            let n = population as u64;
            population * population * harmonic_squares(n) - population * harmonic(n)
        }
        Mode::Asymptotic => {
            std::f64::consts::PI.powi(2) / 6.0 * population * population
                - population * (population.ln() + EULER_GAMMA)
        }
    };
    Ok(variance.max(0.0).sqrt())
}

/// Asymptotic probability that the whole population has been seen within
/// `draws` draws: `exp(-N e^(-T/N))`.
pub fn completion_probability(population: f64, draws: f64) -> Result<f64, Error> {
    Ok((-expected_unseen(population, draws)?).exp())
}

/// Expected number of distinct items among `draws` uniform draws:
/// exactly `N (1 - (1 - 1/N)^n)`, asymptotically `N (1 - e^(-n/N))`.
pub fn expected_distinct(population: f64, draws: f64, mode: Mode) -> Result<f64, Error> {
    check_population(population, Mode::Asymptotic)?;
    if draws < 0.0 {
        return Err(Error::InvalidInput(format!(
            "draws must be >= 0, got {draws}"
        )));
    }
    if draws == 0.0 {
        return Ok(0.0);
    }
    Ok(match mode {
        Mode::Exact => -population * (draws * (-1.0 / population).ln_1p()).exp_m1(),
        Mode::Asymptotic => -population * (-draws / population).exp_m1(),
    })
}

/// Expected number of items never seen after `draws` draws: `N e^(-T/N)`.
pub fn expected_unseen(population: f64, draws: f64) -> Result<f64, Error> {
    check_population(population, Mode::Asymptotic)?;
    if draws < 0.0 {
        return Err(Error::InvalidInput(format!(
            "draws must be >= 0, got {draws}"
        )));
    }
    Ok(population * (-draws / population).exp())
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SimulationSummary {
    pub trials: u64,
    pub mean: f64,
    pub stddev: f64,
}

/// Monte Carlo oracle: draws until full coverage, repeated `trials` times
/// with a seeded generator. Reproducible for a fixed seed.
pub fn simulate_collector(
    population: u64,
    trials: u64,
    seed: u64,
) -> Result<SimulationSummary, Error> {
    if population == 0 || trials == 0 {
        return Err(Error::InvalidInput(
            "population and trials must be positive".into(),
        ));
    }
    // ~N ln N draws per trial
    let per_trial = population as f64 * ((population as f64).ln() + 1.0);
    if per_trial * trials as f64 > 5e9 {
        return Err(Error::BudgetExceeded {
            states: per_trial * trials as f64,
            budget: 5_000_000_000,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut seen = vec![false; population as usize];
    for _ in 0..trials {
        seen.fill(false);
        let mut missing = population;
        let mut draws = 0u64;
        while missing > 0 {
            draws += 1;
            let item = rng.gen_range(0..population) as usize;
            if !seen[item] {
                seen[item] = true;
                missing -= 1;
            }
        }
        sum += draws as f64;
        sum_sq += draws as f64 * draws as f64;
    }
    let mean = sum / trials as f64;
    let variance = (sum_sq / trials as f64 - mean * mean).max(0.0);
    Ok(SimulationSummary {
        trials,
        mean,
        stddev: variance.sqrt(),
    })
}

/// Monte Carlo oracle for the occupancy formulas: mean distinct count among
/// `draws` draws.
pub fn simulate_distinct(
    population: u64,
    draws: u64,
    trials: u64,
    seed: u64,
) -> Result<SimulationSummary, Error> {
    if population == 0 || trials == 0 {
        return Err(Error::InvalidInput(
            "population and trials must be positive".into(),
        ));
    }
    if (draws as f64) * (trials as f64) > 5e9 {
        return Err(Error::BudgetExceeded {
            states: draws as f64 * trials as f64,
            budget: 5_000_000_000,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut seen = vec![false; population as usize];
    for _ in 0..trials {
        seen.fill(false);
        let mut distinct = 0u64;
        for _ in 0..draws {
            let item = rng.gen_range(0..population) as usize;
            if !seen[item] {
                seen[item] = true;
                distinct += 1;
            }
        }
        sum += distinct as f64;
        sum_sq += distinct as f64 * distinct as f64;
    }
    let mean = sum / trials as f64;
    let variance = (sum_sq / trials as f64 - mean * mean).max(0.0);
    Ok(SimulationSummary {
        trials,
        mean,
        stddev: variance.sqrt(),
    })
}
