use std::fmt;

use crate::laurent::LaurentPoly;
use crate::presentation::CPresentation;

/// Abelianized Fox matrix: one row per relator, one column per generator.
#[derive(Clone, PartialEq, Eq)]
pub struct AlexanderMatrix {
    rows: Vec<Vec<LaurentPoly>>,
    // original generator index of each surviving column
    columns: Vec<usize>,
}

impl AlexanderMatrix {
    /// Builds a matrix from explicit rows over generators `1..=cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<LaurentPoly>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        AlexanderMatrix { rows, columns: (1..=cols).collect() }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.columns.len()
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.rows[r][c]
    }

    /// Generator index behind each column.
    pub fn column_generators(&self) -> &[usize] {
        &self.columns
    }

    /// Elementary-ideal-preserving unit pivots.
    ///
    /// While some entry is `±t^k`, takes the first such `(row, col)` in
    /// row-major order, clears the rest of its column with row operations and
    /// deletes the pivot row and column. Zero rows are dropped at the end.
    pub fn simplify_unit_pivots(&self) -> AlexanderMatrix {
        let mut rows = self.rows.clone();
        let mut columns = self.columns.clone();
        while let Some((pr, pc)) = find_unit(&rows) {
            let pivot_row = rows.remove(pr);
            let u = &pivot_row[pc];
            // u^-1 = sign * t^-k
            let inv = LaurentPoly::monomial(u.coeffs()[0].clone(), -u.lowest_exponent().unwrap());
            for row in rows.iter_mut() {
                if row[pc].is_zero() {
                    continue;
                }
                let factor = &row[pc] * &inv;
                for (c, x) in row.iter_mut().enumerate() {
                    if !pivot_row[c].is_zero() {
                        *x -= &(&factor * &pivot_row[c]);
                    }
                }
                debug_assert!(row[pc].is_zero());
            }
            for row in rows.iter_mut() {
                row.remove(pc);
            }
            columns.remove(pc);
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        AlexanderMatrix { rows, columns }
    }
}

fn find_unit(rows: &[Vec<LaurentPoly>]) -> Option<(usize, usize)> {
    rows.iter().enumerate().find_map(|(r, row)| row.iter().position(LaurentPoly::is_unit).map(|c| (r, c)))
}

/// Fox derivatives of every nonempty relator.
///
/// # Panics
/// If a row fails to sum to zero, which would mean a relator with nonzero
/// exponent sum.
pub fn build_matrix(p: &CPresentation) -> AlexanderMatrix {
    let m = p.generator_count();
    assert!(m >= 1, "presentation without generators");
    let rows: Vec<Vec<LaurentPoly>> = p
        .relators()
        .into_iter()
        .filter(|r| !r.is_identity())
        .map(|r| {
            let row: Vec<LaurentPoly> = (1..=m).map(|i| r.fox_abelianized(i)).collect();
            assert!(LaurentPoly::sum(&row).is_zero(), "row of {r} does not sum to zero");
            row
        })
        .collect();
    AlexanderMatrix::from_rows(m, rows)
}

impl fmt::Debug for AlexanderMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "AlexanderMatrix {}x{} over {:?}", self.row_count(), self.col_count(), self.columns)?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
