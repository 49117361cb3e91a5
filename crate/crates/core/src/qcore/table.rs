use std::fmt;

use crate::error::{Error, Result};

/// A square binary-operation table over `{0, …, n-1}`, stored row-major.
///
/// Construction checks shape and range only; the Latin property is a separate
/// predicate since twisted and biquasigroup operations are checked for it
/// rather than assumed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OpTable {
    order: usize,
    cells: Vec<usize>,
}

impl OpTable {
    /// Builds a table from rows, rejecting ragged or out-of-range input.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let mut cells = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::NotSquare {
                    row: r,
                    len: row.len(),
                    order,
                });
            }
            for (c, &value) in row.iter().enumerate() {
                if value >= order {
                    return Err(Error::EntryOutOfRange {
                        row: r,
                        col: c,
                        value,
                        order,
                    });
                }
            }
            cells.extend_from_slice(row);
        }
        Ok(OpTable { order, cells })
    }

    /// Builds a table from a flat row-major vector of length `order²`.
    pub fn from_cells(order: usize, cells: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        if cells.len() != order * order {
            return Err(Error::NotSquare {
                row: cells.len() / order,
                len: cells.len() % order,
                order,
            });
        }
        if let Some(pos) = cells.iter().position(|&v| v >= order) {
            return Err(Error::EntryOutOfRange {
                row: pos / order,
                col: pos % order,
                value: cells[pos],
                order,
            });
        }
        Ok(OpTable { order, cells })
    }

    /// Fills an `order × order` table from a closure. Values must be in range.
    pub(crate) fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = f(a, b);
                debug_assert!(v < order);
                cells.push(v);
            }
        }
        OpTable { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.cells[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.order)
    }

    /// The table of `(a, b) ↦ self(b, a)`.
    pub fn transpose(&self) -> OpTable {
        OpTable::from_fn(self.order, |a, b| self.get(b, a))
    }

    /// True iff every row and every column is a permutation.
    pub fn is_latin(&self) -> bool {
        let n = self.order;
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.fill(false);
            for c in 0..n {
                let v = self.get(r, c);
                if std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
        }
        for c in 0..n {
            seen.fill(false);
            for r in 0..n {
                let v = self.get(r, c);
                if std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// True iff `rows` is a Latin square.
///
/// A ragged array or an entry outside `{0, …, n-1}` is an input error, not `false`.
pub fn validate_latin<R: AsRef<[usize]>>(rows: &[R]) -> Result<bool> {
    OpTable::from_rows(rows).map(|t| t.is_latin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ErrorKind;

    #[test]
    fn latin_examples() {
        assert!(validate_latin(&[[0, 1], [1, 0]]).unwrap());
        assert!(!validate_latin(&[[0, 0], [1, 1]]).unwrap());
        assert!(validate_latin(&[[0, 2, 1], [2, 1, 0], [1, 0, 2]]).unwrap());
        assert!(validate_latin(&[[0]]).unwrap());
    }

    #[test]
    fn malformed_input_is_an_error() {
        let ragged: Vec<Vec<usize>> = vec![vec![0, 1], vec![1]];
        assert!(matches!(
            validate_latin(&ragged),
            Err(Error::NotSquare { row: 1, .. })
        ));
        let err = validate_latin(&[[0, 2], [1, 0]]).unwrap_err();
        assert!(matches!(err, Error::EntryOutOfRange { value: 2, .. }));
        assert_eq!(err.kind(), ErrorKind::Input);
        let empty: Vec<Vec<usize>> = vec![];
        assert_eq!(validate_latin(&empty), Err(Error::EmptyTable));
    }

    #[test]
    fn column_repeat_is_not_latin() {
        // rows are permutations, column 0 repeats
        assert!(!validate_latin(&[[0, 1, 2], [0, 2, 1], [1, 2, 0]]).unwrap());
    }

    #[test]
    fn from_cells_checks_length() {
        assert!(OpTable::from_cells(2, vec![0, 1, 1]).is_err());
        let t = OpTable::from_cells(2, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(t.get(1, 0), 1);
        assert_eq!(t.transpose(), t);
    }
}
