//! Small dense square matrices (dimension at most 8).
//!
//! Serialized as nested row arrays, e.g. `[[1.0, 0.0], [0.0, 1.0]]`.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Row-major square matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Builds a `dim x dim` matrix from row-major entries.
    /// Panics if `data.len() != dim * dim`.
    pub fn from_rows(dim: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), dim * dim, "matrix data length mismatch");
        Self { dim, data }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] = v;
    }

    /// Largest absolute entrywise asymmetry `max |a_ij - a_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// Quadratic form `x^T A x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.dim);
        let mut acc = 0.0;
        for i in 0..self.dim {
            let mut row = 0.0;
            for j in 0..self.dim {
                row += self.get(i, j) * x[j];
            }
            acc += x[i] * row;
        }
        acc
    }

    /// Matrix-vector product `A x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    /// Determinants of all leading principal minors, in order of size 1..=dim.
    pub fn leading_principal_minors(&self) -> Vec<f64> {
        (1..=self.dim)
            .map(|k| {
                let mut sub = Vec::with_capacity(k * k);
                for i in 0..k {
                    for j in 0..k {
                        sub.push(self.get(i, j));
                    }
                }
                det_in_place(k, &mut sub)
            })
            .collect()
    }

    /// Largest absolute entrywise difference to `other`.
    pub fn max_entry_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
fn det_in_place(n: usize, a: &mut [f64]) -> f64 {
    let mut det = 1.0;
    for col in 0..n {
        let mut pivot = col;
        for row in (col + 1)..n {
            if a[row * n + col].abs() > a[pivot * n + col].abs() {
                pivot = row;
            }
        }
        if a[pivot * n + col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
            }
            det = -det;
        }
        let diag = a[col * n + col];
        det *= diag;
        for row in (col + 1)..n {
            let factor = a[row * n + col] / diag;
            for j in col..n {
                a[row * n + j] -= factor * a[col * n + j];
            }
        }
    }
    det
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[f64]> = self.data.chunks(self.dim).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<f64>> = Vec::deserialize(deserializer)?;
        let dim = rows.len();
        if dim == 0 {
            return Err(D::Error::custom("empty matrix"));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for row in &rows {
            if row.len() != dim {
                return Err(D::Error::custom(format!(
                    "ragged matrix: expected {} columns, got {}",
                    dim,
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix { dim, data })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_minors_are_one() {
        let minors = Matrix::identity(4).leading_principal_minors();
        assert_eq!(minors, vec![1.0; 4]);
    }

    #[test]
    fn det_of_known_matrix() {
        // det [[1,2],[3,4]] = -2
        let m = Matrix::from_rows(2, vec![1.0, 2.0, 3.0, 4.0]);
        let minors = m.leading_principal_minors();
        assert!((minors[1] - (-2.0)).abs() < 1e-12, "got {}", minors[1]);
    }

    #[test]
    fn quadratic_form_matches_hand_value() {
        // [[2,1],[1,3]] at (1,2): 2 + 2*2 + 3*4 = 18
        let m = Matrix::from_rows(2, vec![2.0, 1.0, 1.0, 3.0]);
        assert!((m.quadratic_form(&[1.0, 2.0]) - 18.0).abs() < 1e-12);
    }

    #[test]
    fn singular_matrix_has_zero_minor() {
        let m = Matrix::from_rows(2, vec![1.0, 2.0, 2.0, 4.0]);
        let minors = m.leading_principal_minors();
        assert!(minors[1].abs() < 1e-12);
    }

    #[test]
    fn serde_round_trip() {
        let m = Matrix::from_rows(2, vec![1.0, 0.25, 0.25, 2.0]);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, "[[1.0,0.25],[0.25,2.0]]");
        let back: Matrix = serde_json::from_str(&json).unwrap();
        assert_eq!(m, back);
    }
}
