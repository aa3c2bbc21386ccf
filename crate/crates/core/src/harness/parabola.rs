use num_bigint::BigInt;
use num_traits::Zero;

use crate::boxcount::count_exact;
use crate::error::Result;
use crate::modmath::PrimeModulus;
use crate::quadform::{QuadraticForm, SearchBox};

#[derive(Debug, Clone, PartialEq)]
pub struct ParabolaRow {
    pub m: u64,
    pub count: u64,
    /// `count / √M`.
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParabolaReport {
    pub p: BigInt,
    pub rows: Vec<ParabolaRow>,
}

/// Counts `y ≡ x² (mod p)` in `[1, M]²` for each `M`. The parabola has zero
/// discriminant, so it goes straight to the column counter.
pub fn parabola_sanity(m_schedule: &[u64], p: &PrimeModulus) -> Result<ParabolaReport> {
    let q = QuadraticForm::new_unchecked(-1, 0, 0, 0, 1, 0);
    let mut rows = Vec::with_capacity(m_schedule.len());
    for &m in m_schedule {
        let bx = SearchBox::new(0, 0, m)?;
        let count = count_exact(&q, &BigInt::zero(), p, &bx, false).count;
        rows.push(ParabolaRow {
            m,
            count,
            ratio: count as f64 / (m as f64).sqrt(),
        });
    }
    Ok(ParabolaReport { p: p.to_bigint(), rows })
}
