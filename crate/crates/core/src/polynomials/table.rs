//! Coefficient arrays: rows indexed by t-degree, columns by q-degree.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::BiPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTable {
    pub n: usize,
    pub rows: String,
    pub cols: String,
    pub matrix: Vec<Vec<i64>>,
}

impl PolyTable {
    pub fn new(n: usize, p: &BiPoly) -> Result<Self> {
        let matrix = p
            .to_matrix()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        c.to_i64().ok_or_else(|| {
                            Error::invalid(format!("coefficient {c} does not fit in 64 bits"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyTable {
            n,
            rows: "t".into(),
            cols: "q".into(),
            matrix,
        })
    }

    pub fn to_poly(&self) -> Result<BiPoly> {
        if self.rows != "t" || self.cols != "q" {
            return Err(Error::invalid(format!(
                "expected rows \"t\" and cols \"q\", got {:?} and {:?}",
                self.rows, self.cols
            )));
        }
        let m: Vec<Vec<BigInt>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        Ok(BiPoly::from_matrix(&m))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse("polynomial table", s, e.to_string()))
    }

    /// Header `t\q,0,1,..`, then one row per t-degree led by that degree.
    pub fn to_csv(&self) -> String {
        let width = self.matrix.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = String::from("t\\q");
        for a in 0..width {
            out.push_str(&format!(",{a}"));
        }
        out.push('\n');
        for (r, row) in self.matrix.iter().enumerate() {
            out.push_str(&r.to_string());
            for a in 0..width {
                out.push_str(&format!(",{}", row.get(a).copied().unwrap_or(0)));
            }
            out.push('\n');
        }
        out
    }

    /// Reads the CSV layout back; `n` is not part of it.
    pub fn from_csv(n: usize, s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::parse("polynomial table", s, "empty input"))?;
        if !header.starts_with("t\\q") {
            return Err(Error::parse("polynomial table", s, "missing t\\q header"));
        }
        let matrix = lines
            .map(|line| {
                line.split(',')
                    .skip(1)
                    .map(|c| {
                        c.trim()
                            .parse::<i64>()
                            .map_err(|e| Error::parse("polynomial table", s, e.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyTable {
            n,
            rows: "t".into(),
            cols: "q".into(),
            matrix,
        })
    }

    /// Aligned array with `.` for zero entries.
    pub fn to_text(&self) -> String {
        let width = self.matrix.iter().map(Vec::len).max().unwrap_or(0);
        let cell = self
            .matrix
            .iter()
            .flatten()
            .map(|c| c.to_string().len())
            .max()
            .unwrap_or(1)
            .max(width.to_string().len());
        let mut out = format!("{:>4} |", "t\\q");
        for a in 0..width {
            out.push_str(&format!(" {a:>cell$}"));
        }
        out.push('\n');
        out.push_str(&format!("{}\n", "-".repeat(6 + width * (cell + 1))));
        for (r, row) in self.matrix.iter().enumerate() {
            out.push_str(&format!("{r:>4} |"));
            for a in 0..width {
                let c = row.get(a).copied().unwrap_or(0);
                if c.is_zero() {
                    out.push_str(&format!(" {:>cell$}", "."));
                } else {
                    out.push_str(&format!(" {c:>cell$}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> BiPoly {
        BiPoly::from_terms([
            (0, 0, 1),
            (1, 1, 3),
            (3, 1, 2),
            (5, 1, 1),
            (2, 2, 3),
            (4, 2, 2),
            (6, 2, 1),
            (3, 3, 1),
        ])
    }

    #[test]
    fn json_layout_and_round_trip() {
        let t = PolyTable::new(4, &sample()).unwrap();
        assert_eq!(t.matrix[1], vec![0, 3, 0, 2, 0, 1, 0]);
        let json = t.to_json();
        assert!(json.starts_with(r#"{"n":4,"rows":"t","cols":"q","matrix":[[1,0,0,0,0,0,0],"#));
        assert_eq!(
            PolyTable::from_json(&json).unwrap().to_poly().unwrap(),
            sample()
        );
        assert!(PolyTable::from_json("{").is_err());
    }

    #[test]
    fn csv_round_trip() {
        let t = PolyTable::new(4, &sample()).unwrap();
        let csv = t.to_csv();
        assert!(csv.starts_with("t\\q,0,1,2,3,4,5,6\n0,1,0,0,0,0,0,0\n"));
        assert_eq!(PolyTable::from_csv(4, &csv).unwrap(), t);
    }

    #[test]
    fn oversized_coefficients_are_rejected() {
        let big = BiPoly::monomial(BigInt::from(i64::MAX) * 4, 0, 0);
        assert!(PolyTable::new(1, &big).is_err());
    }

    #[test]
    fn text_marks_zeros() {
        let text = PolyTable::new(4, &sample()).unwrap().to_text();
        assert!(text.lines().nth(3).unwrap().contains('3'));
        assert!(text.contains('.'));
    }
}
