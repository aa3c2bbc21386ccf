use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quadform::QuadraticForm;

/// Grid of a bound-verification sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub primes: Vec<u64>,
    pub m_schedule: Vec<u64>,
    pub samples: usize,
    pub form: [i64; 6],
    pub seed: u64,
    /// Constant in the `M²/p + C·√p·log²p` column.
    pub estimate_c: f64,
    /// Record wall-clock time per cell. Off by default so that output is
    /// reproducible byte for byte.
    pub timing: bool,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            primes: Vec::new(),
            m_schedule: Vec::new(),
            samples: 1,
            form: [1, 0, -2, 0, 0, 0],
            seed: 0,
            estimate_c: 1.0,
            timing: false,
        }
    }
}

fn list<T: FromStr>(key: &str, v: &str) -> Result<Vec<T>> {
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Error::Config(format!("{key}: cannot parse {s:?}")))
        })
        .collect()
}

fn one<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim()
        .parse()
        .map_err(|_| Error::Config(format!("{key}: cannot parse {v:?}")))
}

impl SweepSpec {
    /// Parses `key = value` lines. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut spec = SweepSpec::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", i + 1)))?;
            let key = key.trim();
            match key {
                "primes" => spec.primes = list(key, value)?,
                "m_schedule" => spec.m_schedule = list(key, value)?,
                "samples" => spec.samples = one(key, value)?,
                "seed" => spec.seed = one(key, value)?,
                "estimate_c" => spec.estimate_c = one(key, value)?,
                "timing" => spec.timing = one(key, value)?,
                "form" => {
                    let c: Vec<i64> = list(key, value)?;
                    spec.form = c
                        .try_into()
                        .map_err(|_| Error::Config("form: expected six coefficients a,b,c,d,e,f".into()))?;
                }
                other => return Err(Error::Config(format!("line {}: unknown key {other:?}", i + 1))),
            }
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Config("samples must be positive".into()));
        }
        if self.m_schedule.contains(&0) {
            return Err(Error::Config("m_schedule entries must be positive".into()));
        }
        QuadraticForm::from_coeffs(self.form)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_config() {
        let s = SweepSpec::parse(
            "# grid\nprimes = 101, 103\nm_schedule = 5,10\nsamples = 20\nform = 1,0,-2,0,0,0\nseed = 1 # fixed\n",
        )
        .unwrap();
        assert_eq!(s.primes, vec![101, 103]);
        assert_eq!(s.m_schedule, vec![5, 10]);
        assert_eq!(s.samples, 20);
        assert_eq!(s.seed, 1);
        assert!(!s.timing);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(SweepSpec::parse("primes 101").is_err());
        assert!(SweepSpec::parse("colour = red").is_err());
        assert!(SweepSpec::parse("form = 1,2,3").is_err());
        assert!(SweepSpec::parse("form = 1,2,1,0,0,0").is_err());
        assert!(SweepSpec::parse("samples = 0").is_err());
    }
}
