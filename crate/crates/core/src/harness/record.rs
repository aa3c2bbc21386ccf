use std::io::{Read, Write};

use crate::decomp::Regime;
use crate::error::{Error, Result};

/// First line of every sweep CSV.
pub const SCHEMA_LINE: &str = "#schema=1";

const COLUMNS: [&str; 20] = [
    "p",
    "M",
    "K",
    "L",
    "lambda",
    "a",
    "b",
    "c",
    "d",
    "e",
    "f",
    "count",
    "mean_count",
    "trivial_bound",
    "estimate_bound",
    "theorem_shape",
    "regime",
    "seed",
    "wall_time_ms",
    "error",
];

/// One sweep cell: `S` samples of `(K, L, λ)` at fixed `(p, M)`.
///
/// `count` is the largest count seen and `(K, L, λ)` the first sample that
/// attained it.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub p: u64,
    pub m: u64,
    pub k: u64,
    pub l: u64,
    pub lambda: u64,
    pub form: [i64; 6],
    pub count: u64,
    pub mean_count: f64,
    pub trivial_bound: u64,
    pub estimate_bound: f64,
    pub theorem_shape: f64,
    pub regime: Regime,
    pub seed: u64,
    pub wall_time_ms: Option<f64>,
    pub error: Option<String>,
}

impl ExperimentRecord {
    fn fields(&self) -> Vec<String> {
        let mut v = vec![
            self.p.to_string(),
            self.m.to_string(),
            self.k.to_string(),
            self.l.to_string(),
            self.lambda.to_string(),
        ];
        v.extend(self.form.iter().map(|c| c.to_string()));
        v.extend([
            self.count.to_string(),
            format!("{:.6}", self.mean_count),
            self.trivial_bound.to_string(),
            format!("{:.6}", self.estimate_bound),
            format!("{:.6}", self.theorem_shape),
            self.regime.name().to_string(),
            self.seed.to_string(),
            self.wall_time_ms.map(|t| format!("{t:.3}")).unwrap_or_default(),
            self.error.clone().unwrap_or_default(),
        ]);
        v
    }

    fn from_fields(row: &csv::StringRecord) -> Result<Self> {
        if row.len() != COLUMNS.len() {
            return Err(Error::Csv(format!(
                "expected {} columns, found {}",
                COLUMNS.len(),
                row.len()
            )));
        }
        fn num<T: std::str::FromStr>(row: &csv::StringRecord, i: usize) -> Result<T> {
            row[i]
                .parse()
                .map_err(|_| Error::Csv(format!("column {}: cannot parse {:?}", COLUMNS[i], &row[i])))
        }
        let mut form = [0i64; 6];
        for (j, c) in form.iter_mut().enumerate() {
            *c = num(row, 5 + j)?;
        }
        let regime = match &row[16] {
            "SmallM" => Regime::SmallM,
            "LargeM" => Regime::LargeM,
            other => return Err(Error::Csv(format!("unknown regime {other:?}"))),
        };
        Ok(ExperimentRecord {
            p: num(row, 0)?,
            m: num(row, 1)?,
            k: num(row, 2)?,
            l: num(row, 3)?,
            lambda: num(row, 4)?,
            form,
            count: num(row, 11)?,
            mean_count: num(row, 12)?,
            trivial_bound: num(row, 13)?,
            estimate_bound: num(row, 14)?,
            theorem_shape: num(row, 15)?,
            regime,
            seed: num(row, 17)?,
            wall_time_ms: if row[18].is_empty() { None } else { Some(num(row, 18)?) },
            error: if row[19].is_empty() {
                None
            } else {
                Some(row[19].to_string())
            },
        })
    }
}

pub fn write_csv<W: Write>(records: &[ExperimentRecord], mut out: W) -> Result<()> {
    writeln!(out, "{SCHEMA_LINE}")?;
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(COLUMNS)?;
    for r in records {
        w.write_record(r.fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<ExperimentRecord>> {
    let mut rd = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(input);
    let header = rd.headers()?.clone();
    if header.iter().ne(COLUMNS.iter().copied()) {
        return Err(Error::Csv("unexpected header row".into()));
    }
    rd.records().map(|row| ExperimentRecord::from_fields(&row?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ExperimentRecord {
        ExperimentRecord {
            p: 101,
            m: 5,
            k: 3,
            l: 4,
            lambda: 7,
            form: [1, 0, -2, 0, 0, 0],
            count: 2,
            mean_count: 0.25,
            trivial_bound: 10,
            estimate_bound: 12.5,
            theorem_shape: 1.5,
            regime: Regime::LargeM,
            seed: 99,
            wall_time_ms: None,
            error: Some("reducible, with a comma".into()),
        }
    }

    #[test]
    fn round_trip() {
        let mut buf = Vec::new();
        write_csv(&[sample()], &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("#schema=1\np,M,K,L,lambda,"));
        assert!(!text.contains('\r'));
        assert_eq!(read_csv(&buf[..]).unwrap(), vec![sample()]);
    }

    #[test]
    fn empty_grid_is_header_only() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 2);
    }
}
