//! Exact rational matrices: fraction-free determinants, kernels, solving.

use num::traits::{One, Signed, Zero};

use crate::rational::{Int, Rat};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> RatMatrix {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        assert_eq!(entries.len(), rows * cols, "not rectangular");
        RatMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> RatMatrix {
        let r = rows.len();
        let c = rows[0].len();
        RatMatrix::new(r, c, rows.iter().flat_map(|row| row.iter().cloned()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Exact determinant by Bareiss fraction-free elimination on the
    /// denominator-cleared integer matrix.
    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::Matrix("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        // Clear denominators row by row, tracking the scaling.
        let mut scale = Rat::one();
        let mut m: Vec<Vec<Int>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut lcm = Int::one();
            for j in 0..n {
                lcm = num::integer::lcm(lcm, self.at(i, j).denom().clone());
            }
            scale *= Rat::new(Int::one(), lcm.clone());
            m.push(
                (0..n)
                    .map(|j| {
                        let q = self.at(i, j);
                        q.numer() * &lcm / q.denom()
                    })
                    .collect(),
            );
        }
        let det = int_det_bareiss(&mut m);
        Ok(Rat::from_integer(det) * scale)
    }

    /// Rank via exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.entries.clone();
        gauss_rank(&mut m, self.rows, self.cols)
    }

    /// A basis of the right kernel.
    pub fn null_space(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        for j in 0..self.cols {
            if pivot_of_col[j].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[j] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                vec[pc] = -rref.at(r, j).clone();
            }
            basis.push(vec);
        }
        basis
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let (a, b) = (m.at(r, j).clone(), m.at(p, j).clone());
                    *m.at_mut(r, j) = b;
                    *m.at_mut(p, j) = a;
                }
            }
            let inv = m.at(r, c).recip();
            for j in 0..m.cols {
                let v = m.at(r, j) * &inv;
                *m.at_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in 0..m.cols {
                    let v = m.at(i, j) - &(m.at(r, j) * &f);
                    *m.at_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Solves self * x = b for square invertible self.
    pub fn solve(&self, b: &[Rat]) -> Result<Vec<Rat>> {
        if self.rows != self.cols || b.len() != self.rows {
            return Err(Error::Matrix("solve: shape mismatch".into()));
        }
        let n = self.rows;
        let mut aug = RatMatrix::zero(n, n + 1);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n) = b[i].clone();
        }
        let (rref, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(Error::Matrix("solve: singular matrix".into()));
        }
        Ok((0..n).map(|i| rref.at(i, n).clone()).collect())
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return Err(Error::Matrix("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = RatMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = Rat::one();
        }
        let (rref, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(Error::Matrix("inverse: singular matrix".into()));
        }
        let mut inv = RatMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = rref.at(i, n + j).clone();
            }
        }
        Ok(inv)
    }

    pub fn mat_vec(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..self.cols {
                    s += self.at(i, j) * &x[j];
                }
                s
            })
            .collect()
    }
}

/// Bareiss fraction-free elimination for integer determinants.
/// Destroys the input.
pub fn int_det_bareiss(m: &mut [Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Int::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn gauss_rank(m: &mut [Rat], rows: usize, cols: usize) -> usize {
    let at = |m: &[Rat], i: usize, j: usize| m[i * cols + j].clone();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        for j in 0..cols {
            m.swap(r * cols + j, p * cols + j);
        }
        for i in r + 1..rows {
            if m[i * cols + c].is_zero() {
                continue;
            }
            let f = &at(m, i, c) / &at(m, r, c);
            for j in c..cols {
                let v = at(m, i, j) - &at(m, r, j) * &f;
                m[i * cols + j] = v;
            }
        }
        r += 1;
    }
    r
}

/// Determinant by cofactor expansion; test oracle for small matrices.
pub fn det_cofactor(m: &RatMatrix) -> Rat {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 1 {
        return m.at(0, 0).clone();
    }
    let mut acc = Rat::zero();
    for j in 0..n {
        if m.at(0, j).is_zero() {
            continue;
        }
        let mut sub = RatMatrix::zero(n - 1, n - 1);
        for i in 1..n {
            let mut jj = 0;
            for k in 0..n {
                if k == j {
                    continue;
                }
                *sub.at_mut(i - 1, jj) = m.at(i, k).clone();
                jj += 1;
            }
        }
        let term = m.at(0, j) * &det_cofactor(&sub);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Integer content sign helper used by Pluecker canonicalization.
pub fn is_negative(q: &Rat) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn det_trivial_cases() {
        assert_eq!(RatMatrix::identity(3).det().unwrap(), rat(1));
        let m = RatMatrix::from_rows(&[vec![rat(1), rat(2)], vec![rat(2), rat(4)]]);
        assert_eq!(m.det().unwrap(), rat(0));
        let m = RatMatrix::from_rows(&[vec![rat(0), rat(1)], vec![rat(-1), rat(0)]]);
        assert_eq!(m.det().unwrap(), rat(1));
        assert!(RatMatrix::zero(2, 3).det().is_err());
    }

    #[test]
    fn det_rational_entries() {
        let m = RatMatrix::from_rows(&[
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 5), ratio(1, 7)],
        ]);
        assert_eq!(m.det().unwrap(), ratio(1, 14) - ratio(1, 15));
    }

    #[test]
    fn det_matches_cofactor_exhaustively() {
        // All 3x3 matrices with entries in {-1,0,1} would be 3^9; sample a
        // deterministic stride instead, plus every 2x2 in {-2..2}.
        for code in 0..625 {
            let mut c = code;
            let mut e = Vec::with_capacity(4);
            for _ in 0..4 {
                e.push(rat((c % 5) as i64 - 2));
                c /= 5;
            }
            let m = RatMatrix::new(2, 2, e);
            assert_eq!(m.det().unwrap(), det_cofactor(&m));
        }
        for code in (0..19683).step_by(7) {
            let mut c = code;
            let mut e = Vec::with_capacity(9);
            for _ in 0..9 {
                e.push(rat((c % 3) as i64 - 1));
                c /= 3;
            }
            let m = RatMatrix::new(3, 3, e);
            assert_eq!(m.det().unwrap(), det_cofactor(&m));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = RatMatrix::from_rows(&[
            vec![rat(2), rat(1), rat(0)],
            vec![rat(0), rat(1), rat(1)],
            vec![rat(1), rat(0), rat(3)],
        ]);
        let b = vec![rat(3), rat(5), rat(10)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mat_vec(&x), b);
        let inv = m.inverse().unwrap();
        let prod = (0..3)
            .map(|i| inv.mat_vec(&(0..3).map(|j| m.at(j, i).clone()).collect::<Vec<_>>()))
            .collect::<Vec<_>>();
        for (i, col) in prod.iter().enumerate() {
            for (j, v) in col.iter().enumerate() {
                assert_eq!(*v, if i == j { rat(1) } else { rat(0) });
            }
        }
    }

    #[test]
    fn null_space_of_rank_deficient() {
        let m = RatMatrix::from_rows(&[vec![rat(1), rat(2), rat(3)], vec![rat(2), rat(4), rat(6)]]);
        let ns = m.null_space();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let img = m.mat_vec(&v);
            assert!(img.iter().all(|q| q.is_zero()));
        }
    }
}
