use std::fmt;
use std::str::FromStr;

use micz_core::exact::Rational;

pub const GRID_N: [usize; 2] = [1, 2];
/// μ values of the acceptance grid; the CLI also accepts −1 and −3/2.
pub const GRID_MU: [(i64, i64); 5] = [(0, 1), (1, 2), (-1, 2), (1, 1), (3, 2)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Lemma1,
    Lemma2,
    Forms,
    Commutators,
    Quadratic,
    Casimir,
    Hamiltonian,
    Spectrum,
    Radial,
    Degeneracy,
    Branch,
    Ladder,
    Expectation,
    ModuleWeight,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Forms,
        Suite::Commutators,
        Suite::Quadratic,
        Suite::Casimir,
        Suite::Hamiltonian,
        Suite::Spectrum,
        Suite::Radial,
        Suite::Degeneracy,
        Suite::Branch,
        Suite::Ladder,
        Suite::Expectation,
        Suite::ModuleWeight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Forms => "forms",
            Suite::Commutators => "commutators",
            Suite::Quadratic => "quadratic",
            Suite::Casimir => "casimir",
            Suite::Hamiltonian => "hamiltonian",
            Suite::Spectrum => "spectrum",
            Suite::Radial => "radial",
            Suite::Degeneracy => "degeneracy",
            Suite::Branch => "branch",
            Suite::Ladder => "ladder",
            Suite::Expectation => "expectation",
            Suite::ModuleWeight => "module-weight",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Suite, ConfigError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("n = {0} is not supported (use 1 or 2)")]
    N(usize),
    #[error("mu = {0} is not supported (use 0, ±1/2, ±1 or ±3/2)")]
    Mu(Rational),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("battery size must be at least 1")]
    EmptyBattery,
    #[error("kmax must be at least 1")]
    Kmax,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// (n, μ) points to run; each must pass `validate_point`.
    pub points: Vec<(usize, Rational)>,
    pub imax: u32,
    pub kmax: u32,
    pub lmax: u32,
    /// Lowering steps per tower.
    pub steps: u32,
    pub battery_size: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            points: grid(),
            imax: 4,
            kmax: 8,
            lmax: 6,
            steps: 5,
            battery_size: 20,
            seed: 0,
            suites: Suite::ALL.to_vec(),
            timings: false,
        }
    }
}

pub fn grid() -> Vec<(usize, Rational)> {
    GRID_N.iter().flat_map(|n| GRID_MU.iter().map(move |(p, q)| (*n, Rational::new(*p, *q)))).collect()
}

pub fn validate_point(n: usize, mu: &Rational) -> Result<(), ConfigError> {
    if !GRID_N.contains(&n) {
        return Err(ConfigError::N(n));
    }
    let ok = mu.is_half_integer_valued() && mu.abs() <= Rational::new(3, 2);
    if !ok {
        return Err(ConfigError::Mu(mu.clone()));
    }
    Ok(())
}

impl RunConfig {
    /// Points from optional --n and --mu: a missing value ranges over the grid.
    pub fn points_for(n: Option<usize>, mu: Option<Rational>) -> Vec<(usize, Rational)> {
        let ns: Vec<usize> = n.map_or(GRID_N.to_vec(), |v| vec![v]);
        let mus: Vec<Rational> = mu.map_or_else(|| GRID_MU.iter().map(|(p, q)| Rational::new(*p, *q)).collect(), |v| vec![v]);
        ns.iter().flat_map(|n| mus.iter().map(move |m| (*n, m.clone()))).collect()
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (n, mu) in &self.points {
            validate_point(*n, mu)?;
        }
        if self.battery_size == 0 {
            return Err(ConfigError::EmptyBattery);
        }
        if self.kmax == 0 {
            return Err(ConfigError::Kmax);
        }
        Ok(())
    }

    pub fn wants(&self, s: Suite) -> bool {
        self.suites.contains(&s)
    }
}
