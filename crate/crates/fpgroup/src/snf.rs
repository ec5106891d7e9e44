//! Integer matrices and Smith normal form over arbitrary precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged row");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += p;
                    }
                }
            }
        }
        out
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += c * row[b]
    fn add_row_multiple(&mut self, a: usize, b: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(b, j)] * c;
            self[(a, j)] += v;
        }
    }

    /// col[a] += c * col[b]
    fn add_col_multiple(&mut self, a: usize, b: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, b)] * c;
            self[(i, a)] += v;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form `left * m * right = diag`, with `diag` the full matrix
/// shape holding nonnegative diagonal entries in a divisibility chain.
#[derive(Debug, Clone)]
pub struct Snf {
    /// Diagonal entries, including trailing zeros up to `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
    /// Unimodular row-operation witness (rows x rows), if requested.
    pub left: Option<IntMatrix>,
    /// Unimodular column-operation witness (cols x cols), if requested.
    pub right: Option<IntMatrix>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Computes the Smith normal form. Pivot selection takes the minimal nonzero
/// absolute value in the remaining submatrix, which keeps entry growth tame.
pub fn smith_normal_form(m: &IntMatrix, with_witnesses: bool) -> Snf {
    let mut a = m.clone();
    let mut left = with_witnesses.then(|| IntMatrix::identity(a.rows));
    let mut right = with_witnesses.then(|| IntMatrix::identity(a.cols));
    let n = a.rows.min(a.cols);

    let mut k = 0;
    while k < n {
        let Some((pi, pj)) = find_pivot(&a, k) else { break };
        a.swap_rows(k, pi);
        if let Some(l) = left.as_mut() {
            l.swap_rows(k, pi);
        }
        a.swap_cols(k, pj);
        if let Some(r) = right.as_mut() {
            r.swap_cols(k, pj);
        }

        // Alternate a column phase and a row phase. Each phase is a
        // Euclidean pass: entries are reduced mod the pivot and the
        // smallest nonzero remainder is promoted, so the pivot at least
        // halves on every promote. Keeping the phases separate keeps the
        // quotients small; interleaving them lets entry sizes compound.
        loop {
            // Column phase: clear below the pivot with row operations.
            loop {
                for i in k + 1..a.rows {
                    if a[(i, k)].is_zero() {
                        continue;
                    }
                    let q = div_rounded(&a[(i, k)], &a[(k, k)]);
                    if !q.is_zero() {
                        let nq = -&q;
                        a.add_row_multiple(i, k, &nq);
                        if let Some(l) = left.as_mut() {
                            l.add_row_multiple(i, k, &nq);
                        }
                    }
                }
                let best = (k + 1..a.rows)
                    .filter(|&i| !a[(i, k)].is_zero())
                    .min_by_key(|&i| a[(i, k)].abs());
                let Some(i) = best else { break };
                a.swap_rows(k, i);
                if let Some(l) = left.as_mut() {
                    l.swap_rows(k, i);
                }
            }
            // Row phase: clear right of the pivot with column operations.
            // A column swap here can dirty column k again; if so, run
            // another round with the now strictly smaller pivot.
            let mut swapped = false;
            loop {
                for j in k + 1..a.cols {
                    if a[(k, j)].is_zero() {
                        continue;
                    }
                    let q = div_rounded(&a[(k, j)], &a[(k, k)]);
                    if !q.is_zero() {
                        let nq = -&q;
                        a.add_col_multiple(j, k, &nq);
                        if let Some(r) = right.as_mut() {
                            r.add_col_multiple(j, k, &nq);
                        }
                    }
                }
                let best = (k + 1..a.cols)
                    .filter(|&j| !a[(k, j)].is_zero())
                    .min_by_key(|&j| a[(k, j)].abs());
                let Some(j) = best else { break };
                swapped = true;
                a.swap_cols(k, j);
                if let Some(r) = right.as_mut() {
                    r.swap_cols(k, j);
                }
            }
            if !swapped {
                break;
            }
        }

        // Divisibility fix: the pivot must divide every remaining entry.
        if let Some((i, j)) = first_nondivisible(&a, k) {
            let _ = j;
            a.add_row_multiple(k, i, &BigInt::one());
            if let Some(l) = left.as_mut() {
                l.add_row_multiple(k, i, &BigInt::one());
            }
            continue; // redo pivot k with the new row content
        }

        if a[(k, k)].is_negative() {
            a.negate_row(k);
            if let Some(l) = left.as_mut() {
                l.negate_row(k);
            }
        }
        k += 1;
    }

    let diagonal = (0..n).map(|i| a[(i, i)].clone()).collect();
    Snf { diagonal, left, right }
}

/// Nearest-integer division so remainders satisfy |r| <= |b| / 2.
fn div_rounded(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

fn find_pivot(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.rows {
        for j in k..a.cols {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            if v.abs().is_one() {
                return Some((i, j));
            }
            match best {
                Some((bi, bj)) if a[(bi, bj)].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn first_nondivisible(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let p = a[(k, k)].clone();
    if p.abs().is_one() {
        return None;
    }
    for i in k + 1..a.rows {
        for j in k + 1..a.cols {
            if !a[(i, j)].mod_floor(&p).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_i64(s: &Snf) -> Vec<i64> {
        s.diagonal.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn diagonal_matrix_already_smith() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(diag_i64(&smith_normal_form(&m, false)), vec![2, 2]);
    }

    #[test]
    fn zero_matrix_has_zero_diagonal() {
        let m = IntMatrix::zero(3, 5);
        assert_eq!(diag_i64(&smith_normal_form(&m, false)), vec![0, 0, 0]);
    }

    #[test]
    fn worked_two_by_two() {
        // Independent oracle: d1 = gcd of all entries, d1*d2 = |det|.
        let entries = [2i64, 0, 1, 2];
        let d1 = entries.iter().fold(0i64, |g, &v| num_integer::gcd(g, v));
        let det = (2 * 2 - 0 * 1i64).abs();
        assert_eq!((d1, det / d1), (1, 4));

        let m = IntMatrix::from_rows(&[vec![2, 0], vec![1, 2]]);
        assert_eq!(diag_i64(&smith_normal_form(&m, false)), vec![1, 4]);
    }

    #[test]
    fn witnesses_multiply_to_diagonal() {
        let m = IntMatrix::from_rows(&[vec![6, 4, 2], vec![4, 4, 4], vec![2, 4, 6]]);
        let snf = smith_normal_form(&m, true);
        let left = snf.left.clone().unwrap();
        let right = snf.right.clone().unwrap();
        assert!(left.is_unimodular());
        assert!(right.is_unimodular());
        let prod = left.mul(&m).mul(&right);
        for i in 0..prod.rows {
            for j in 0..prod.cols {
                let expect = if i == j { snf.diagonal[i].clone() } else { BigInt::zero() };
                assert_eq!(prod[(i, j)], expect, "at ({i},{j})");
            }
        }
        // Divisibility chain.
        for w in snf.diagonal.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].mod_floor(&w[0]).is_zero() || w[0].is_zero());
            }
        }
    }

    #[test]
    fn det_matches_diagonal_product_up_to_sign() {
        let m = IntMatrix::from_rows(&[vec![3, 1, 0], vec![0, 2, 5], vec![7, 0, 1]]);
        let snf = smith_normal_form(&m, false);
        let prod: BigInt = snf.diagonal.iter().product();
        assert_eq!(m.det().abs(), prod.abs());
    }
}
