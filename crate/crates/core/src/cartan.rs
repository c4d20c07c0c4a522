//! Cartan data for finite Weyl groups.
//!
//! Matrix entries follow `a[i][j] = <alpha_i^vee, alpha_j>`, so the simple
//! reflection `s_i` sends `alpha_j` to `alpha_j - a[i][j] * alpha_i`.
//! Simple roots are numbered as in Bourbaki's tables; products of simple
//! types are written with `x`, e.g. `A1xA1` or `B2xG2`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    label: String,
    matrix: Vec<Vec<i32>>,
}

impl CartanDatum {
    /// Validates the matrix and wraps it. Finite type is only checked later,
    /// when the root closure is built.
    pub fn new(label: impl Into<String>, matrix: Vec<Vec<i32>>) -> Result<Self> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(Error::MalformedCartan("empty matrix".into()));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::MalformedCartan(format!(
                    "row {} has {} entries, expected {rank}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(Error::MalformedCartan(format!(
                        "diagonal entry ({0},{0}) is {a}, expected 2",
                        i + 1
                    )));
                }
                if i != j && a > 0 {
                    return Err(Error::MalformedCartan(format!(
                        "off-diagonal entry ({},{}) is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if i != j && (a == 0) != (matrix[j][i] == 0) {
                    return Err(Error::MalformedCartan(format!(
                        "entries ({0},{1}) and ({1},{0}) must vanish together",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CartanDatum {
            label: label.into(),
            matrix,
        })
    }

    /// Parses labels such as `A3`, `G2`, `E8` or `A1xB2`.
    pub fn from_label(label: &str) -> Result<Self> {
        let trimmed = label.trim();
        let mut blocks = Vec::new();
        for part in trimmed.split(['x', 'X']) {
            blocks.push(simple_type_matrix(part).ok_or_else(|| Error::UnknownType(label.into()))?);
        }
        let rank = blocks.iter().map(Vec::len).sum();
        let mut matrix = vec![vec![0; rank]; rank];
        let mut offset = 0;
        for block in &blocks {
            for (i, row) in block.iter().enumerate() {
                for (j, &a) in row.iter().enumerate() {
                    matrix[offset + i][offset + j] = a;
                }
            }
            offset += block.len();
        }
        CartanDatum::new(trimmed.to_uppercase().replace('X', "x"), matrix)
    }

    /// Reads an integer matrix either as a JSON array of rows or as
    /// whitespace-separated rows, one per line.
    pub fn from_matrix_document(label: impl Into<String>, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let matrix: Vec<Vec<i32>> = if trimmed.starts_with('[') {
            serde_json::from_str(trimmed).map_err(|e| Error::MalformedCartan(e.to_string()))?
        } else {
            trimmed
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| {
                    l.split(|c: char| c.is_whitespace() || c == ',')
                        .filter(|t| !t.is_empty())
                        .map(|t| {
                            t.parse::<i32>()
                                .map_err(|_| Error::MalformedCartan(format!("bad entry `{t}`")))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?
        };
        CartanDatum::new(label, matrix)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.matrix[i][j]
    }

    /// `Some(r)` when the matrix is exactly the type `A_r` matrix in the
    /// standard numbering, which is what the permutation model expects.
    pub fn type_a_rank(&self) -> Option<usize> {
        let r = self.rank();
        (self.matrix == type_a(r)).then_some(r)
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

fn simple_type_matrix(label: &str) -> Option<Vec<Vec<i32>>> {
    let label = label.trim();
    let mut chars = label.chars();
    let letter = chars.next()?.to_ascii_uppercase();
    let rank: usize = chars.as_str().parse().ok()?;
    let m = match (letter, rank) {
        ('A', n) if n >= 1 => type_a(n),
        ('B', n) if n >= 2 => {
            let mut m = type_a(n);
            m[n - 1][n - 2] = -2;
            m
        }
        ('C', n) if n >= 2 => {
            let mut m = type_a(n);
            m[n - 2][n - 1] = -2;
            m
        }
        ('D', n) if n >= 3 => {
            let mut m = type_a(n);
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 2] = 0;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
            m
        }
        ('E', n @ 6..=8) => {
            // 1-3-4-5-6(-7-8) with 2 attached to 4
            let mut m = identity_times_two(n);
            let mut link = |a: usize, b: usize| {
                m[a - 1][b - 1] = -1;
                m[b - 1][a - 1] = -1;
            };
            link(1, 3);
            link(2, 4);
            link(3, 4);
            for k in 4..n {
                link(k, k + 1);
            }
            m
        }
        ('F', 4) => {
            let mut m = type_a(4);
            m[2][1] = -2;
            m
        }
        ('G', 2) => vec![vec![2, -3], vec![-1, 2]],
        _ => return None,
    };
    Some(m)
}

fn identity_times_two(n: usize) -> Vec<Vec<i32>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 2 } else { 0 }).collect())
        .collect()
}

fn type_a(n: usize) -> Vec<Vec<i32>> {
    let mut m = identity_times_two(n);
    for i in 1..n {
        m[i][i - 1] = -1;
        m[i - 1][i] = -1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        let b2 = CartanDatum::from_label("B2").unwrap();
        assert_eq!(b2.matrix(), &[vec![2, -1], vec![-2, 2]]);
        let c3 = CartanDatum::from_label("c3").unwrap();
        assert_eq!(c3.entry(1, 2), -2);
        assert_eq!(c3.label(), "C3");
        let prod = CartanDatum::from_label("A1xA1").unwrap();
        assert_eq!(prod.matrix(), &[vec![2, 0], vec![0, 2]]);
        assert_eq!(prod.label(), "A1xA1");
        let d4 = CartanDatum::from_label("D4").unwrap();
        assert_eq!(d4.matrix()[1], vec![-1, 2, -1, -1]);
        let e6 = CartanDatum::from_label("E6").unwrap();
        assert_eq!(e6.matrix()[3], vec![0, -1, -1, 2, -1, 0]);
    }

    #[test]
    fn unknown_labels() {
        for bad in ["Z9", "A0", "B1", "E9", "F3", "G3", "", "A1x"] {
            assert!(
                matches!(CartanDatum::from_label(bad), Err(Error::UnknownType(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn malformed() {
        assert!(CartanDatum::new("x", vec![vec![2, 1], vec![-1, 2]]).is_err());
        assert!(CartanDatum::new("x", vec![vec![1, -1], vec![-1, 2]]).is_err());
        assert!(CartanDatum::new("x", vec![vec![2, 0], vec![-1, 2]]).is_err());
        assert!(CartanDatum::new("x", vec![vec![2, -1]]).is_err());
        assert!(CartanDatum::new("x", vec![]).is_err());
    }

    #[test]
    fn matrix_documents() {
        let a = CartanDatum::from_matrix_document("m", "[[2,-1],[-1,2]]").unwrap();
        let b = CartanDatum::from_matrix_document("m", "# A2\n2 -1\n-1 2\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.type_a_rank(), Some(2));
        assert!(CartanDatum::from_matrix_document("m", "2 y").is_err());
    }
}
