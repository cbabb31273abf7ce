use std::sync::atomic::{AtomicBool, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use super::AlexanderMatrix;
use crate::laurent::{gcd, LaurentPoly};

/// Fraction-free Bareiss determinant over `Z[t, t^-1]`; every division is
/// exact. The empty matrix has determinant 1.
pub fn determinant(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = a.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

fn submatrix(mat: &AlexanderMatrix, rows: &[usize], cols: &[usize]) -> Vec<Vec<LaurentPoly>> {
    rows.iter().map(|&r| cols.iter().map(|&c| mat.entry(r, c).clone()).collect()).collect()
}

/// `(cols, rows)` index sets of every order-`(cols - 1)` minor: column
/// subsets outer, row subsets inner, both lexicographic.
fn minor_indices(mat: &AlexanderMatrix) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> + '_ {
    let k = mat.col_count() - 1;
    (0..mat.col_count())
        .combinations(k)
        .flat_map(move |cols| (0..mat.row_count()).combinations(k).map(move |rows| (cols.clone(), rows)))
}

fn degenerate(mat: &AlexanderMatrix) -> Option<LaurentPoly> {
    // with no columns left every generator was eliminated: the ideal is everything
    if mat.col_count() <= 1 {
        Some(LaurentPoly::one())
    } else if mat.row_count() < mat.col_count() - 1 {
        Some(LaurentPoly::zero())
    } else {
        None
    }
}

/// Canonical GCD of all order-`(cols - 1)` minors, stopping early once it
/// is 1. Zero when there are fewer than `cols - 1` rows, one when at most
/// one column remains.
pub fn minor_gcd(mat: &AlexanderMatrix) -> LaurentPoly {
    if let Some(d) = degenerate(mat) {
        return d;
    }
    let mut acc = LaurentPoly::zero();
    for (cols, rows) in minor_indices(mat) {
        let det = determinant(submatrix(mat, &rows, &cols));
        acc = gcd(&acc, &det);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Same result as [`minor_gcd`], with determinants computed on the rayon
/// pool and combined by a GCD reduction.
pub fn minor_gcd_parallel(mat: &AlexanderMatrix) -> LaurentPoly {
    if let Some(d) = degenerate(mat) {
        return d;
    }
    let indices: Vec<_> = minor_indices(mat).collect();
    // set once some partial GCD is 1; later minors cannot change the answer
    let done = AtomicBool::new(false);
    let acc = indices
        .par_iter()
        .map(|(cols, rows)| {
            if done.load(Ordering::Relaxed) {
                return LaurentPoly::zero();
            }
            let det = determinant(submatrix(mat, rows, cols)).canonical();
            if det.is_one() {
                done.store(true, Ordering::Relaxed);
            }
            det
        })
        .reduce(LaurentPoly::zero, |a, b| {
            let g = gcd(&a, &b);
            if g.is_one() {
                done.store(true, Ordering::Relaxed);
            }
            g
        });
    if done.load(Ordering::Relaxed) {
        LaurentPoly::one()
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(low, c)
    }

    /// Permutation expansion, for small matrices only.
    fn leibniz(a: &[Vec<LaurentPoly>]) -> LaurentPoly {
        let n = a.len();
        let mut total = LaurentPoly::zero();
        for perm in (0..n).permutations(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let mut term = LaurentPoly::one();
            for (i, &j) in perm.iter().enumerate() {
                term = &term * &a[i][j];
            }
            if inversions % 2 == 1 {
                total -= &term;
            } else {
                total += &term;
            }
        }
        total
    }

    fn arb_entry() -> impl Strategy<Value = LaurentPoly> {
        (-1i64..=1, prop::collection::vec(-2i64..=2, 0..3))
            .prop_map(|(low, c)| LaurentPoly::from_i64s(low, &c))
    }

    #[test]
    fn small_determinants() {
        assert!(determinant(vec![]).is_one());
        let a = vec![vec![p(0, &[0, 1]), p(0, &[1])], vec![p(0, &[1]), p(0, &[0, 1])]];
        // t^2 - 1
        assert_eq!(determinant(a), p(0, &[-1, 0, 1]));
        // zero leading pivot needs a row swap
        let b = vec![vec![LaurentPoly::zero(), p(0, &[2])], vec![p(0, &[3]), p(0, &[1])]];
        assert_eq!(determinant(b), p(0, &[-6]));
    }

    #[test]
    fn degenerate_shapes() {
        let one_col = AlexanderMatrix::from_rows(1, vec![]);
        assert!(minor_gcd(&one_col).is_one());
        let short = AlexanderMatrix::from_rows(3, vec![vec![p(0, &[1]), p(0, &[-1]), LaurentPoly::zero()]]);
        assert!(minor_gcd(&short).is_zero());
        // a lone unit entry pivots away the only column
        let unit = AlexanderMatrix::from_rows(1, vec![vec![p(2, &[-1])]]).simplify_unit_pivots();
        assert_eq!(unit.col_count(), 0);
        assert!(minor_gcd(&unit).is_one());
        assert!(minor_gcd_parallel(&unit).is_one());
    }

    #[test]
    fn z2_gives_t_minus_one() {
        let m = AlexanderMatrix::from_rows(2, vec![vec![p(0, &[1, -1]), p(0, &[-1, 1])]]);
        assert_eq!(minor_gcd(&m), p(0, &[-1, 1]));
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(
            n in 1usize..=4,
            entries in prop::collection::vec(arb_entry(), 16),
        ) {
            let a: Vec<Vec<LaurentPoly>> =
                (0..n).map(|i| entries[i * 4..i * 4 + n].to_vec()).collect();
            prop_assert_eq!(determinant(a.clone()), leibniz(&a));
        }

        #[test]
        fn parallel_matches_serial(
            cols in 2usize..=4,
            rows in 1usize..=5,
            entries in prop::collection::vec(arb_entry(), 20),
        ) {
            let data: Vec<Vec<LaurentPoly>> =
                (0..rows).map(|i| entries[i * 4..i * 4 + cols].to_vec()).collect();
            let m = AlexanderMatrix::from_rows(cols, data);
            prop_assert_eq!(minor_gcd_parallel(&m), minor_gcd(&m));
        }
    }
}
