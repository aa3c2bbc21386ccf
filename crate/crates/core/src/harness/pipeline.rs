use num_bigint::BigInt;
use rayon::prelude::*;

use crate::boxcount::count_exact;
use crate::conic::LatticePoint;
use crate::decomp::{decompose, recompose, PigeonholeData, Regime};
use crate::error::{Error, Result};
use crate::modmath::PrimeModulus;
use crate::quadform::{standardize, QuadraticForm, SearchBox, StandardKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZRow {
    pub z: BigInt,
    pub n: BigInt,
    /// Lifted solutions, before filtering to the image of the source box.
    pub solutions: usize,
}

#[derive(Debug, Clone)]
pub struct PipelineReport {
    pub kind: StandardKind,
    pub regime: Regime,
    pub pigeonhole: PigeonholeData,
    pub z_max: BigInt,
    pub rows: Vec<ZRow>,
    /// Solutions of the standardized congruence in the transformed hull.
    pub standardized: usize,
    pub decomposed_count: u64,
    pub exact_count: u64,
    /// Solutions in the source box, sorted.
    pub solutions: Vec<(BigInt, BigInt)>,
}

/// Counts `Q ≡ λ (mod p)` in `bx` through standardization, the lift to
/// Diophantine equations and back, then checks the result against
/// [`count_exact`].
pub fn run_pipeline(q: &QuadraticForm, lambda: &BigInt, p: &PrimeModulus, bx: &SearchBox) -> Result<PipelineReport> {
    let inst = standardize(q, lambda, p, bx)?;
    let dec = decompose(&inst)?;
    let solved: Vec<Vec<LatticePoint>> = dec.equations.par_iter().map(|eq| eq.solve()).collect::<Result<_>>()?;
    let pairs: Vec<_> = dec.equations.iter().zip(solved).collect();
    let rows = pairs
        .iter()
        .map(|(eq, pts)| ZRow {
            z: eq.z.clone(),
            n: eq.n.clone(),
            solutions: pts.len(),
        })
        .collect();
    let standardized = recompose(&pairs)?;
    let mut solutions: Vec<(BigInt, BigInt)> = standardized
        .iter()
        .filter_map(|(x, y)| inst.preimage_in_box(x, y))
        .collect();
    solutions.sort();
    let exact = count_exact(q, lambda, p, bx, true);
    let decomposed_count = solutions.len() as u64;
    if exact.solutions.as_ref() != Some(&solutions) {
        return Err(Error::PipelineMismatch {
            decomposed: decomposed_count,
            exact: exact.count,
        });
    }
    Ok(PipelineReport {
        kind: dec.kind,
        regime: dec.regime,
        pigeonhole: dec.pigeonhole,
        z_max: dec.z_max,
        rows,
        standardized: standardized.len(),
        decomposed_count,
        exact_count: exact.count,
        solutions,
    })
}
