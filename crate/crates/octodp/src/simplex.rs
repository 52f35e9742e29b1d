//! Exact rational linear-program feasibility (phase-1 simplex, Bland's rule).
//!
//! Used to certify regularity of triangulations: strict height systems are
//! rewritten as `A x >= 1`, which is scale-invariant for homogeneous `A`.

use num::traits::{One, Signed, Zero};

use crate::rational::Rat;

/// Decides feasibility of `A x >= b` over free rational `x`.
/// Returns a witness on success.
pub fn feasible(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();
    // y = (u, v, s) >= 0 with A(u - v) - s = b, rows flipped to b >= 0,
    // artificial basis appended.
    let cols = 2 * n + m + m;
    let mut t = vec![vec![Rat::zero(); cols + 1]; m];
    for i in 0..m {
        let flip = b[i].is_negative();
        let sgn = if flip { -Rat::one() } else { Rat::one() };
        for j in 0..n {
            t[i][j] = &a[i][j] * &sgn;
            t[i][n + j] = -&a[i][j] * &sgn;
        }
        // Row is A_i x - s_i = b_i, multiplied through by sgn.
        t[i][2 * n + i] = -sgn.clone();
        t[i][2 * n + m + i] = Rat::one();
        t[i][cols] = if flip { -b[i].clone() } else { b[i].clone() };
    }
    let mut basis: Vec<usize> = (0..m).map(|i| 2 * n + m + i).collect();
    let is_artificial = |j: usize| j >= 2 * n + m;

    loop {
        // Reduced costs for phase-1 objective (sum of artificials).
        let mut entering = None;
        'cols: for j in 0..cols {
            if basis.contains(&j) {
                continue;
            }
            // r_j = c_j - sum_i c_{basis[i]} * t[i][j]
            let mut r = if is_artificial(j) { Rat::one() } else { Rat::zero() };
            for i in 0..m {
                if is_artificial(basis[i]) {
                    r -= &t[i][j];
                }
            }
            if r.is_negative() {
                entering = Some(j);
                break 'cols;
            }
        }
        let Some(j) = entering else { break };
        // Bland ratio test.
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t[i][j].is_positive() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let cmp = (&t[i][cols] * &t[l][j]).cmp(&(&t[l][cols] * &t[i][j]));
                        cmp == std::cmp::Ordering::Less
                            || (cmp == std::cmp::Ordering::Equal && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else {
            // Unbounded phase-1 objective cannot happen (bounded below by 0).
            return None;
        };
        // Pivot on (l, j).
        let piv = t[l][j].clone();
        for v in t[l].iter_mut() {
            *v = &*v / &piv;
        }
        for i in 0..m {
            if i == l || t[i][j].is_zero() {
                continue;
            }
            let f = t[i][j].clone();
            for k in 0..=cols {
                let v = &t[i][k] - &(&t[l][k] * &f);
                t[i][k] = v;
            }
        }
        basis[l] = j;
    }

    // Optimal phase-1 value.
    let mut obj = Rat::zero();
    for i in 0..m {
        if is_artificial(basis[i]) {
            obj += &t[i][cols];
        }
    }
    if !obj.is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for i in 0..m {
        let bi = basis[i];
        if bi < n {
            x[bi] += &t[i][cols];
        } else if bi < 2 * n {
            x[bi - n] -= &t[i][cols];
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn check_witness(a: &[Vec<Rat>], b: &[Rat], x: &[Rat]) {
        for (row, bi) in a.iter().zip(b) {
            let s: Rat = row.iter().zip(x).map(|(c, xi)| c * xi).sum();
            assert!(s >= *bi, "constraint violated: {s} < {bi}");
        }
    }

    #[test]
    fn feasible_box() {
        // x >= 1, -x >= -3 (i.e. 1 <= x <= 3)
        let a = vec![vec![rat(1)], vec![rat(-1)]];
        let b = vec![rat(1), rat(-3)];
        let x = feasible(&a, &b).expect("feasible");
        check_witness(&a, &b, &x);
    }

    #[test]
    fn infeasible_contradiction() {
        // x >= 1 and -x >= 0
        let a = vec![vec![rat(1)], vec![rat(-1)]];
        let b = vec![rat(1), rat(0)];
        assert!(feasible(&a, &b).is_none());
    }

    #[test]
    fn feasible_2d() {
        // x + y >= 1, x - y >= 1, -x >= -10
        let a = vec![
            vec![rat(1), rat(1)],
            vec![rat(1), rat(-1)],
            vec![rat(-1), rat(0)],
        ];
        let b = vec![rat(1), rat(1), rat(-10)];
        let x = feasible(&a, &b).expect("feasible");
        check_witness(&a, &b, &x);
    }

    #[test]
    fn strict_cone_via_margin() {
        // Homogeneous strict system: x > y, y > 0 encoded as >= 1.
        let a = vec![vec![rat(1), rat(-1)], vec![rat(0), rat(1)]];
        let b = vec![rat(1), rat(1)];
        let x = feasible(&a, &b).expect("feasible");
        check_witness(&a, &b, &x);
    }
}
