use super::form::ExteriorForm;
use super::structure::StructureConstants;
use crate::arith::QSqrt3;
use crate::error::{Error, Result};

/// A matrix of forms of one common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixForm {
    rows: usize,
    cols: usize,
    degree: usize,
    entries: Vec<ExteriorForm>,
}

impl MatrixForm {
    pub fn new(rows: usize, cols: usize, entries: Vec<ExteriorForm>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Precondition(format!(
                "{rows}x{cols} matrix needs {} entries",
                rows * cols
            )));
        }
        let degree = entries[0].degree();
        if entries.iter().any(|e| e.degree() != degree) {
            return Err(Error::Precondition(
                "matrix entries must share one degree".into(),
            ));
        }
        Ok(MatrixForm {
            rows,
            cols,
            degree,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize, degree: usize) -> Self {
        MatrixForm {
            rows,
            cols,
            degree,
            entries: vec![ExteriorForm::zero(degree); rows * cols],
        }
    }

    /// A column vector.
    pub fn column(entries: Vec<ExteriorForm>) -> Result<Self> {
        Self::new(entries.len(), 1, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, r: usize, c: usize) -> &ExteriorForm {
        &self.entries[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExteriorForm::is_zero)
    }

    /// Nonzero entries as `(row, col, form)`, zero-based.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, &ExteriorForm)> {
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .map(|(r, c)| (r, c, self.get(r, c)))
            .filter(|(_, _, e)| !e.is_zero())
            .collect()
    }

    fn zip(
        &self,
        other: &MatrixForm,
        f: impl Fn(&ExteriorForm, &ExteriorForm) -> ExteriorForm,
    ) -> Result<Self> {
        if (self.rows, self.cols, self.degree) != (other.rows, other.cols, other.degree) {
            return Err(Error::Precondition(format!(
                "shape mismatch: {}x{} of degree {} vs {}x{} of degree {}",
                self.rows, self.cols, self.degree, other.rows, other.cols, other.degree
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(MatrixForm { entries, ..*self })
    }

    pub fn add(&self, other: &MatrixForm) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &MatrixForm) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &QSqrt3) -> Self {
        MatrixForm {
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
            ..*self
        }
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .flat_map(|c| (0..self.rows).map(move |r| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        MatrixForm {
            rows: self.cols,
            cols: self.rows,
            degree: self.degree,
            entries,
        }
    }

    /// Matrix product with `^` in place of multiplication.
    pub fn wedge(&self, other: &MatrixForm) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Precondition(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let degree = self.degree + other.degree;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = ExteriorForm::zero(degree);
                for k in 0..self.cols {
                    acc = &acc + &self.get(r, k).wedge(other.get(k, c))?;
                }
                entries.push(acc);
            }
        }
        Ok(MatrixForm {
            rows: self.rows,
            cols: other.cols,
            degree,
            entries,
        })
    }

    pub fn d(&self, sc: &StructureConstants) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| sc.d(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixForm {
            entries,
            degree: self.degree + 1,
            ..*self
        })
    }
}

fn check_arity(v: &[ExteriorForm], expected: usize) -> Result<()> {
    if v.len() != expected {
        return Err(Error::Arity {
            expected,
            got: v.len(),
        });
    }
    Ok(())
}

fn build(
    rows: usize,
    cols: usize,
    v: &[ExteriorForm],
    pattern: &[(i64, usize)],
) -> Result<MatrixForm> {
    // (sign, 1-based component), with component 0 for a zero entry
    let degree = v[0].degree();
    let entries = pattern
        .iter()
        .map(|&(s, i)| {
            if i == 0 {
                ExteriorForm::zero(degree)
            } else {
                v[i - 1].scale(&s.into())
            }
        })
        .collect();
    MatrixForm::new(rows, cols, entries)
}

/// `[(x, y, z)]`, the 3x3 matrix of the cross product.
pub fn bracket(v: &[ExteriorForm]) -> Result<MatrixForm> {
    check_arity(v, 3)?;
    #[rustfmt::skip]
    let pattern = [
        (0, 0), (1, 3), (-1, 2),
        (-1, 3), (0, 0), (1, 1),
        (1, 2), (-1, 1), (0, 0),
    ];
    build(3, 3, v, &pattern)
}

/// `[(x, y, z)]_+` for `sign = 1` and `[(x, y, z)]_-` for `sign = -1`.
pub fn bracket_pm(v: &[ExteriorForm], sign: i64) -> Result<MatrixForm> {
    check_arity(v, 3)?;
    if sign != 1 && sign != -1 {
        return Err(Error::Precondition(format!(
            "sign must be +1 or -1, got {sign}"
        )));
    }
    let s = sign;
    #[rustfmt::skip]
    let pattern = [
        (0, 0), (-1, 1), (-1, 2), (s, 3),
        (1, 1), (0, 0), (1, 3), (s, 2),
        (1, 2), (-1, 3), (0, 0), (-s, 1),
        (-s, 3), (-s, 2), (s, 1), (0, 0),
    ];
    build(4, 4, v, &pattern)
}

/// `{(p, q, r, s)}`, a 4x3 matrix.
pub fn braces(v: &[ExteriorForm]) -> Result<MatrixForm> {
    check_arity(v, 4)?;
    #[rustfmt::skip]
    let pattern = [
        (-1, 2), (-1, 3), (1, 4),
        (1, 1), (1, 4), (1, 3),
        (-1, 4), (1, 1), (-1, 2),
        (1, 3), (-1, 2), (-1, 1),
    ];
    build(4, 3, v, &pattern)
}
