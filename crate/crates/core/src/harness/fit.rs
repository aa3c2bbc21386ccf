use std::collections::BTreeMap;

use super::record::ExperimentRecord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentFit {
    /// Least-squares slope of `log(count)` against `log M`.
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual of the fit.
    pub residual: f64,
    pub points: usize,
}

/// Log–log regression of the max count against `M` over rows without
/// errors and with `count >= 1`.
pub fn fit_exponent(records: &[ExperimentRecord]) -> Result<ExponentFit> {
    let pts: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| r.error.is_none() && r.count >= 1)
        .map(|r| ((r.m as f64).ln(), (r.count as f64).ln()))
        .collect();
    if pts.len() < 3 {
        return Err(Error::Underdetermined {
            need: 3,
            got: pts.len(),
        });
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::Underdetermined { need: 2, got: 1 });
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = pts.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    Ok(ExponentFit {
        slope,
        intercept,
        residual: (ss / n).sqrt(),
        points: pts.len(),
    })
}

/// [`fit_exponent`] separately for each prime, in ascending order of `p`.
pub fn fit_by_prime(records: &[ExperimentRecord]) -> Vec<(u64, Result<ExponentFit>)> {
    let mut by_p: BTreeMap<u64, Vec<ExperimentRecord>> = BTreeMap::new();
    for r in records {
        by_p.entry(r.p).or_default().push(r.clone());
    }
    by_p.into_iter().map(|(p, rs)| (p, fit_exponent(&rs))).collect()
}

/// Fit of `|count - M²/p| ≈ C·√p·log²p` over samples at one `(p, M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateFit {
    /// `√p·log²p`.
    pub scale: f64,
    /// `|count - M²/p|` per sample.
    pub deviations: Vec<f64>,
    /// Least-squares `C` over all samples.
    pub c: f64,
    /// Leave-one-out estimates of `C`.
    pub jackknife: Vec<f64>,
    /// Estimates from the first and second half of the samples.
    pub halves: (f64, f64),
    /// Smallest `C` for which every sample satisfies the bound.
    pub c_envelope: f64,
}

impl EstimateFit {
    /// Largest relative distance of a jackknife or half-sample estimate
    /// from `c`.
    pub fn max_relative_shift(&self) -> f64 {
        self.jackknife
            .iter()
            .chain([&self.halves.0, &self.halves.1])
            .map(|v| ((v - self.c) / self.c).abs())
            .fold(0.0, f64::max)
    }
}

fn lsq_through_origin(dev: &[f64], scale: f64) -> f64 {
    // one regressor, constant across samples
    dev.iter().map(|d| d * scale).sum::<f64>() / (dev.len() as f64 * scale * scale)
}

pub fn fit_estimate_constant(p: u64, m: u64, counts: &[u64]) -> Result<EstimateFit> {
    if counts.len() < 4 {
        return Err(Error::Underdetermined {
            need: 4,
            got: counts.len(),
        });
    }
    let pf = p as f64;
    let main = (m as f64).powi(2) / pf;
    let scale = pf.sqrt() * pf.ln().powi(2);
    let deviations: Vec<f64> = counts.iter().map(|&c| (c as f64 - main).abs()).collect();
    let c = lsq_through_origin(&deviations, scale);
    let jackknife = (0..deviations.len())
        .map(|i| {
            let rest: Vec<f64> = deviations
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &d)| d)
                .collect();
            lsq_through_origin(&rest, scale)
        })
        .collect();
    let half = deviations.len() / 2;
    let halves = (
        lsq_through_origin(&deviations[..half], scale),
        lsq_through_origin(&deviations[half..], scale),
    );
    let c_envelope = deviations.iter().fold(0.0f64, |a, &d| a.max(d)) / scale;
    Ok(EstimateFit {
        scale,
        deviations,
        c,
        jackknife,
        halves,
        c_envelope,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::Regime;

    fn rec(m: u64, count: u64) -> ExperimentRecord {
        ExperimentRecord {
            p: 1_000_003,
            m,
            k: 0,
            l: 0,
            lambda: 0,
            form: [1, 0, -2, 0, 0, 0],
            count,
            mean_count: count as f64,
            trivial_bound: 2 * m,
            estimate_bound: 0.0,
            theorem_shape: 0.0,
            regime: Regime::LargeM,
            seed: 0,
            wall_time_ms: None,
            error: None,
        }
    }

    #[test]
    fn synthetic_slopes() {
        let lin: Vec<_> = [2, 4, 8, 16, 32].iter().map(|&m| rec(m, m)).collect();
        let f = fit_exponent(&lin).unwrap();
        assert!((f.slope - 1.0).abs() < 1e-9);
        assert!(f.residual < 1e-9);
        let sq: Vec<_> = [2, 3, 5, 7, 11].iter().map(|&m| rec(m, m * m)).collect();
        assert!((fit_exponent(&sq).unwrap().slope - 2.0).abs() < 1e-9);
    }

    #[test]
    fn underdetermined() {
        let rs = vec![rec(2, 1), rec(3, 0), rec(4, 2)];
        assert_eq!(fit_exponent(&rs), Err(Error::Underdetermined { need: 3, got: 2 }));
    }

    #[test]
    fn estimate_constant_is_the_mean_ratio() {
        let f = fit_estimate_constant(101, 10, &[1, 2, 3, 4]).unwrap();
        let mean = f.deviations.iter().sum::<f64>() / 4.0;
        assert!((f.c - mean / f.scale).abs() < 1e-12);
        assert!(f.deviations.iter().all(|d| *d <= f.c_envelope * f.scale + 1e-12));
    }
}
