//! Multivariate resultant of four quaternary quadrics via the degree-5
//! Macaulay matrix (56 monomials), with extraneous-minor division.
//!
//! Normalization: resultant(x^2, y^2, z^2, w^2) = 1 (the monomial system
//! produces the identity matrix).

use itertools::Itertools;
use num::traits::Zero;

use crate::matrix::RatMatrix;
use crate::octanomial::SPACE_VARS;
use crate::poly::SparsePoly;
use crate::rational::{rat, Rat};
use crate::{Error, Result};

/// Degree-5 exponent vectors in 4 variables, in a fixed order.
fn degree5_monomials() -> Vec<[u32; 4]> {
    let mut out = Vec::with_capacity(56);
    for a in 0..=5u32 {
        for b in 0..=5 - a {
            for c in 0..=5 - a - b {
                out.push([a, b, c, 5 - a - b - c]);
            }
        }
    }
    debug_assert_eq!(out.len(), 56);
    out
}

fn is_reduced(m: &[u32; 4]) -> bool {
    m.iter().filter(|&&e| e >= 2).count() == 1
}

/// First i with m_i >= 2; total degree 5 in 4 variables guarantees one.
fn assigned_var(m: &[u32; 4]) -> usize {
    m.iter().position(|&e| e >= 2).expect("degree 5 monomial")
}

fn permute_vars(p: &SparsePoly, sigma: &[usize; 4]) -> SparsePoly {
    let mut out = SparsePoly::zero(&SPACE_VARS);
    for (exps, coeff) in p.terms_grlex() {
        let mut e = vec![0u32; 4];
        for (i, &ei) in exps.iter().enumerate() {
            e[sigma[i]] = ei;
        }
        out = out.add(&SparsePoly::monomial(&SPACE_VARS, e, coeff));
    }
    out
}

fn macaulay_ratio(quadrics: &[SparsePoly; 4]) -> Option<Rat> {
    let monos = degree5_monomials();
    let col_of = |m: &[u32; 4]| monos.iter().position(|x| x == m).unwrap();

    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(56);
    for m in &monos {
        let i = assigned_var(m);
        let mut row = vec![Rat::zero(); 56];
        // (x^m / x_i^2) * q_i
        for (exps, coeff) in quadrics[i].terms_grlex() {
            let mut target = *m;
            target[i] -= 2;
            for (k, &e) in exps.iter().enumerate() {
                target[k] += e;
            }
            row[col_of(&target)] = coeff;
        }
        rows.push(row);
    }
    let full = RatMatrix::from_rows(&rows);
    let det_m = full.det().expect("square");

    // Extraneous minor on non-reduced rows and columns.
    let nr: Vec<usize> = (0..56).filter(|&i| !is_reduced(&monos[i])).collect();
    let sub_rows: Vec<Vec<Rat>> = nr
        .iter()
        .map(|&i| nr.iter().map(|&j| full.at(i, j).clone()).collect())
        .collect();
    let det_e = RatMatrix::from_rows(&sub_rows).det().expect("square");
    if det_e.is_zero() {
        return None;
    }
    Some(det_m / det_e)
}

/// Resultant of a degenerate system via the diagonal perturbation
/// q_i + t*x_i^2, which turns the Macaulay matrix into M + tI and the
/// extraneous minor into E + tI. The ratio is a polynomial in t of degree
/// 56 - 24 = 32, recovered at t = 0 by Lagrange interpolation.
fn perturbed_resultant(quadrics: &[SparsePoly; 4]) -> Result<Rat> {
    const DEG: usize = 32;
    let mut samples: Vec<(Rat, Rat)> = Vec::with_capacity(DEG + 1);
    let mut t = 1i64;
    while samples.len() <= DEG && t <= 200 {
        let tv = rat(t);
        let pert: [SparsePoly; 4] = std::array::from_fn(|i| {
            let mut e = vec![0u32; 4];
            e[i] = 2;
            quadrics[i].add(&SparsePoly::monomial(&SPACE_VARS, e, tv.clone()))
        });
        if let Some(r) = macaulay_ratio(&pert) {
            samples.push((tv, r));
        }
        t += 1;
    }
    if samples.len() <= DEG {
        return Err(Error::Resultant(
            "perturbed extraneous minor degenerate at too many points".into(),
        ));
    }
    // Lagrange evaluation of the interpolant at t = 0.
    let mut acc = Rat::zero();
    for j in 0..samples.len() {
        let mut term = samples[j].1.clone();
        for k in 0..samples.len() {
            if k != j {
                term *= -samples[k].0.clone() / (&samples[j].0 - &samples[k].0);
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// The resultant of four homogeneous quadrics in x, y, z, w.
///
/// Degenerate extraneous minors are retried over all variable permutations
/// (the resultant is invariant since det(P)^16 = 1); if every ordering
/// degenerates, the diagonal-perturbation limit is taken instead.
pub fn resultant_oracle(quadrics: &[SparsePoly; 4]) -> Result<Rat> {
    for q in quadrics {
        if !q.is_homogeneous_of_degree(2) && !q.is_zero() {
            return Err(Error::Resultant(
                "inputs must be homogeneous quadrics".into(),
            ));
        }
    }
    if quadrics.iter().any(|q| q.is_zero()) {
        // A zero form vanishes everywhere; the system has a common zero.
        return Ok(Rat::zero());
    }
    for perm in (0..4usize).permutations(4) {
        let sigma: [usize; 4] = [perm[0], perm[1], perm[2], perm[3]];
        let permuted: [SparsePoly; 4] = std::array::from_fn(|i| permute_vars(&quadrics[i], &sigma));
        if let Some(r) = macaulay_ratio(&permuted) {
            return Ok(r);
        }
    }
    perturbed_resultant(quadrics)
}

/// The four partial derivatives of a quaternary cubic.
pub fn partials(cubic: &SparsePoly) -> [SparsePoly; 4] {
    std::array::from_fn(|i| cubic.partial(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discriminant::full_discriminant;
    use crate::octanomial::{octanomial_cubic, OctanomialCoefficients};
    use crate::rational::rat;

    fn var(n: &str) -> SparsePoly {
        SparsePoly::var(&SPACE_VARS, n)
    }

    #[test]
    fn monomial_system_normalization() {
        let q: [SparsePoly; 4] = [
            var("x").pow(2),
            var("y").pow(2),
            var("z").pow(2),
            var("w").pow(2),
        ];
        assert_eq!(resultant_oracle(&q).unwrap(), rat(1));
    }

    #[test]
    fn zero_form_gives_zero() {
        let q: [SparsePoly; 4] = [
            var("x").pow(2),
            SparsePoly::zero(&SPACE_VARS),
            var("z").pow(2),
            var("w").pow(2),
        ];
        assert_eq!(resultant_oracle(&q).unwrap(), rat(0));
    }

    #[test]
    fn common_zero_gives_zero() {
        // All four vanish at (0:0:0:1).
        let q: [SparsePoly; 4] = [
            var("x").pow(2),
            var("y").pow(2),
            var("z").pow(2),
            var("x").mul(&var("w")),
        ];
        assert_eq!(resultant_oracle(&q).unwrap(), rat(0));
    }

    #[test]
    fn matches_factored_discriminant() {
        // Partials of octanomial cubics: the factored degree-32 discriminant
        // equals -2^16 times the Macaulay-normalized resultant; the unit is
        // fixed across all inputs.
        let unit = -rat(65536);
        for v in [[3i64, -2, 5, 7, 1, -4, 2, 9], [1, 1, 2, -3, 5, -8, 13, 21]] {
            let c = OctanomialCoefficients { c: v.map(rat) };
            let cubic = octanomial_cubic(&c);
            let res = resultant_oracle(&partials(&cubic)).unwrap();
            assert_eq!(&unit * res, full_discriminant(&c).full_discriminant);
        }
    }
}
