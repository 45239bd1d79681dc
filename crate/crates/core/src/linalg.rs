//! Exact elimination: reduced row echelon form, greedy row bases, the
//! dependence matrix B(A), and column-space comparison.
//!
//! All routines are pure and exact; they work for any [`Scalar`].

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Reduced row echelon form plus the pivot positions in ascending row order.
pub fn rref<T: Scalar>(m: &Matrix<T>) -> (Matrix<T>, Vec<(usize, usize)>) {
    let rows = m.row_count();
    let cols = m.col_count();
    let mut data: Vec<Vec<T>> = m.iter_rows().map(<[T]>::to_vec).collect();
    let mut pivots = Vec::new();
    let mut lead = 0usize;

    for r in 0..rows {
        let col = match (lead..cols).find(|&c| (r..rows).any(|i| !data[i][c].is_zero())) {
            Some(c) => c,
            None => break,
        };
        let src = (r..rows).find(|&i| !data[i][col].is_zero()).unwrap();
        data.swap(r, src);

        let pivot = data[r][col].clone();
        for x in &mut data[r] {
            *x = x.clone() / pivot.clone();
        }
        for i in 0..rows {
            if i != r && !data[i][col].is_zero() {
                let factor = data[i][col].clone();
                for c in 0..cols {
                    let delta = factor.clone() * data[r][c].clone();
                    data[i][c] = data[i][c].clone() - delta;
                }
            }
        }
        pivots.push((r, col));
        lead = col + 1;
    }

    let reduced = Matrix::from_rows(data).expect("dimensions preserved");
    (reduced, pivots)
}

/// Number of linearly independent rows (equivalently columns).
pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    rref(m).1.len()
}

/// Outcome of the greedy top-to-bottom row-basis scan.
///
/// `basis` and `dependent` partition the row indices; for each dependent row
/// `s_j`, `coefficients` holds the unique expansion `s_j = sum_i c_{ji} r_i`
/// over the basis rows, indexed in `basis` order. Basis rows selected after
/// row `j` was classified get coefficient zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependenceResult<T> {
    pub basis: Vec<usize>,
    pub dependent: Vec<usize>,
    pub coefficients: Vec<Vec<T>>,
}

/// Scan rows top to bottom, adding each row to the basis iff it is
/// independent of the rows already selected, and record the expansion of
/// every dependent row over the basis.
pub fn row_basis<T: Scalar>(m: &Matrix<T>) -> DependenceResult<T> {
    let cols = m.col_count();
    let mut basis: Vec<usize> = Vec::new();
    let mut dependent: Vec<usize> = Vec::new();
    let mut coefficients: Vec<Vec<T>> = Vec::new();

    // Staircase rows kept fully reduced (pivot 1, pivot column cleared
    // elsewhere), each carrying its expansion over the basis rows found so far.
    let mut stairs: Vec<(usize, Vec<T>, Vec<T>)> = Vec::new(); // (pivot col, row, expansion)

    for r in 0..m.row_count() {
        let mut v = m.row(r).to_vec();
        let mut expansion = vec![T::zero(); basis.len()];
        for (pivot_col, stair, stair_exp) in &stairs {
            if v[*pivot_col].is_zero() {
                continue;
            }
            let factor = v[*pivot_col].clone();
            for c in 0..cols {
                let delta = factor.clone() * stair[c].clone();
                v[c] = v[c].clone() - delta;
            }
            for (acc, e) in expansion.iter_mut().zip(stair_exp) {
                *acc = acc.clone() + factor.clone() * e.clone();
            }
        }

        match v.iter().position(|x| !x.is_zero()) {
            None => {
                dependent.push(r);
                coefficients.push(expansion);
            }
            Some(pivot_col) => {
                // v = row_r - sum(expansion_i * basis_i); normalizing gives the
                // new staircase row and its expansion over basis + {row_r}.
                let pivot = v[pivot_col].clone();
                for x in &mut v {
                    *x = x.clone() / pivot.clone();
                }
                let mut exp: Vec<T> = expansion
                    .iter()
                    .map(|e| -(e.clone() / pivot.clone()))
                    .collect();
                exp.push(T::one() / pivot);
                for (_, stair, stair_exp) in &mut stairs {
                    stair_exp.push(T::zero());
                    if !stair[pivot_col].is_zero() {
                        let factor = stair[pivot_col].clone();
                        for c in 0..cols {
                            let delta = factor.clone() * v[c].clone();
                            stair[c] = stair[c].clone() - delta;
                        }
                        for (acc, e) in stair_exp.iter_mut().zip(&exp) {
                            let delta = factor.clone() * e.clone();
                            *acc = acc.clone() - delta;
                        }
                    }
                }
                stairs.push((pivot_col, v, exp));
                basis.push(r);
            }
        }
    }

    // Pad every expansion to the final basis length.
    for c in &mut coefficients {
        c.resize(basis.len(), T::zero());
    }

    DependenceResult {
        basis,
        dependent,
        coefficients,
    }
}

/// The dependence matrix B(A).
///
/// One row per dependent row of `m`; columns are the basis rows in selection
/// order followed by the dependent rows in order. Row `j` carries the
/// expansion coefficients on the basis columns and `-1` in its own column.
/// When every row of `m` is independent the result has zero rows.
pub fn dependence_matrix<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let dep = row_basis(m);
    let nb = dep.basis.len();
    let nd = dep.dependent.len();
    let mut entries = Vec::with_capacity(nd * (nb + nd));
    for (jpos, coeffs) in dep.coefficients.iter().enumerate() {
        entries.extend(coeffs.iter().cloned());
        for j2 in 0..nd {
            entries.push(if j2 == jpos { -T::one() } else { T::zero() });
        }
    }
    let out = Matrix::from_entries(nd, nb + nd, entries).expect("shape by construction");
    let row_label = |i: &usize| m.row_labels()[*i].clone();
    let col_labels: Vec<String> = dep
        .basis
        .iter()
        .map(row_label)
        .chain(dep.dependent.iter().map(row_label))
        .collect();
    let row_labels: Vec<String> = dep.dependent.iter().map(row_label).collect();
    out.with_row_labels(row_labels)
        .and_then(|o| o.with_col_labels(col_labels))
        .expect("label counts by construction")
}

/// Do the columns of `a` and `b` span the same subspace of Q^rows?
///
/// Checked via `rank(a) = rank(b) = rank([a|b])`. The row counts must agree.
pub fn column_space_equal<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<bool> {
    if a.row_count() != b.row_count() {
        return Err(Error::DimensionMismatch(format!(
            "column spaces live in different ambient spaces ({} vs {} rows)",
            a.row_count(),
            b.row_count()
        )));
    }
    let ra = rank(a);
    let rb = rank(b);
    if ra != rb {
        return Ok(false);
    }
    Ok(rank(&a.hstack(b)?) == ra)
}

/// Solve `m * x = target` exactly. Returns the particular solution with all
/// free variables set to zero, or `None` if the system is inconsistent.
pub fn solve_columns<T: Scalar>(m: &Matrix<T>, target: &[T]) -> Result<Option<Vec<T>>> {
    if target.len() != m.row_count() {
        return Err(Error::DimensionMismatch(format!(
            "target of length {} for {} rows",
            target.len(),
            m.row_count()
        )));
    }
    let augmented = m.hstack(&Matrix::from_entries(target.len(), 1, target.to_vec())?)?;
    let (reduced, pivots) = rref(&augmented);
    let aug_col = m.col_count();
    if pivots.iter().any(|&(_, c)| c == aug_col) {
        return Ok(None); // pivot in the augmented column: inconsistent
    }
    let mut solution = vec![T::zero(); m.col_count()];
    for (r, c) in pivots {
        solution[c] = reduced.entry(r, aug_col).clone();
    }
    Ok(Some(solution))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactMatrix, Int, Rational};

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn m(rows: Vec<Vec<i64>>) -> ExactMatrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let i = ExactMatrix::identity(2);
        let (r, p) = rref(&i);
        assert!(r.same_entries(&i));
        assert_eq!(p, vec![(0, 0), (1, 1)]);

        let z = ExactMatrix::zeros(2, 3);
        let (r, p) = rref(&z);
        assert!(r.same_entries(&z));
        assert!(p.is_empty());
    }

    #[test]
    fn rref_two_by_two() {
        // Hand elimination: [[2,4],[1,3]] -> [[1,2],[0,1]] -> [[1,0],[0,1]].
        let a = m(vec![vec![2, 4], vec![1, 3]]);
        let (r, p) = rref(&a);
        assert!(r.same_entries(&ExactMatrix::identity(2)));
        assert_eq!(p, vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn rref_needs_row_swap_and_fractions() {
        let a = m(vec![vec![0, 2], vec![3, 1]]);
        let (r, p) = rref(&a);
        assert!(r.same_entries(&ExactMatrix::identity(2)));
        assert_eq!(p, vec![(0, 0), (1, 1)]);

        let b = m(vec![vec![2, 3], vec![4, 6]]);
        let (r, p) = rref(&b);
        let expected = ExactMatrix::from_rows(vec![
            vec![rat(1), Rational::new(Int::from(3), Int::from(2))],
            vec![rat(0), rat(0)],
        ])
        .unwrap();
        assert!(r.same_entries(&expected));
        assert_eq!(p, vec![(0, 0)]);
    }

    #[test]
    fn row_basis_independent_rows() {
        let dep = row_basis(&ExactMatrix::identity(3));
        assert_eq!(dep.basis, vec![0, 1, 2]);
        assert!(dep.dependent.is_empty());
    }

    #[test]
    fn row_basis_schur() {
        // Oracle: solve a*(1,0) + b*(0,1) = (1,1) by coordinates: a = 1, b = 1.
        let schur = m(vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        let dep = row_basis(&schur);
        assert_eq!(dep.basis, vec![0, 1]);
        assert_eq!(dep.dependent, vec![2]);
        assert_eq!(dep.coefficients, vec![vec![rat(1), rat(1)]]);
    }

    #[test]
    fn row_basis_depth_one_system() {
        // Oracle: a*(1,1) + b*(1,0) = (0,1): second coordinate gives a = 1,
        // first gives b = -1.
        let a = m(vec![vec![1, 1], vec![1, 0], vec![0, 1]]);
        let dep = row_basis(&a);
        assert_eq!(dep.basis, vec![0, 1]);
        assert_eq!(dep.dependent, vec![2]);
        assert_eq!(dep.coefficients, vec![vec![rat(1), rat(-1)]]);
    }

    #[test]
    fn row_basis_duplicate_rows() {
        let a = m(vec![vec![2, 4], vec![2, 4]]);
        let dep = row_basis(&a);
        assert_eq!(dep.basis, vec![0]);
        assert_eq!(dep.dependent, vec![1]);
        assert_eq!(dep.coefficients, vec![vec![rat(1)]]);
    }

    #[test]
    fn row_basis_zero_row_first() {
        let a = m(vec![vec![0, 0], vec![1, 2]]);
        let dep = row_basis(&a);
        assert_eq!(dep.basis, vec![1]);
        assert_eq!(dep.dependent, vec![0]);
        // zero row = empty combination, padded over the late-found basis
        assert_eq!(dep.coefficients, vec![vec![rat(0)]]);
    }

    #[test]
    fn dependence_matrix_identity_is_empty() {
        let b = dependence_matrix(&ExactMatrix::identity(3));
        assert_eq!(b.row_count(), 0);
        assert_eq!(b.col_count(), 3);
    }

    #[test]
    fn dependence_matrix_schur() {
        let schur = m(vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        let b = dependence_matrix(&schur);
        assert!(b.same_entries(&m(vec![vec![1, 1, -1]])));
        assert_eq!(b.row_labels(), &["r2".to_string()]);
        assert_eq!(
            b.col_labels(),
            &["r0".to_string(), "r1".to_string(), "r2".to_string()]
        );
    }

    #[test]
    fn column_space_comparisons() {
        let schur = m(vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        // invertible diagonal column scaling preserves the span
        let scaled = schur.scale_columns(&[rat(3), rat(-2)]).unwrap();
        assert!(column_space_equal(&schur, &scaled).unwrap());
        // appending a zero column preserves the span
        let widened = schur.hstack(&ExactMatrix::zeros(3, 1)).unwrap();
        assert!(column_space_equal(&schur, &widened).unwrap());
        // rank 2 versus rank 3
        assert!(!column_space_equal(&schur, &ExactMatrix::identity(3)).unwrap());
        // mismatched ambient dimension is an error
        assert!(column_space_equal(&schur, &ExactMatrix::identity(2)).is_err());
    }

    #[test]
    fn solve_columns_basic() {
        let a = m(vec![vec![1, -1], vec![0, 0], vec![1, 0]]);
        let sol = solve_columns(&a, &[rat(1), rat(0), rat(1)]).unwrap().unwrap();
        assert_eq!(sol, vec![rat(1), rat(0)]);
        assert!(solve_columns(&a, &[rat(0), rat(1), rat(0)]).unwrap().is_none());
        assert!(solve_columns(&a, &[rat(0)]).is_err());
    }

    #[test]
    fn generic_over_other_exact_scalars() {
        // the elimination layer is scalar-generic; spot-check with Ratio<i64>
        type Q64 = num_rational::Ratio<i64>;
        let a: Matrix<Q64> = Matrix::from_rows(vec![
            vec![Q64::from_integer(2), Q64::from_integer(4)],
            vec![Q64::from_integer(1), Q64::from_integer(3)],
        ])
        .unwrap();
        let (r, p) = rref(&a);
        assert!(r.same_entries(&Matrix::<Q64>::identity(2)));
        assert_eq!(p, vec![(0, 0), (1, 1)]);
    }
}
