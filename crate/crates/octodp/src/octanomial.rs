//! The octanomial cubic and its plane-cubic parametrization.
//!
//! Six moduli determine eight quintic coefficients a..h; the cubic surface
//! is the image of P^2 under four factored ternary cubics, and substituting
//! that basis into the octanomial gives the zero polynomial.

use std::collections::HashMap;


use crate::moduli::ModuliVector;
use crate::poly::SparsePoly;
use crate::rational::Rat;
use crate::Result;

pub const PLANE_VARS: [&str; 3] = ["X", "Y", "Z"];
pub const SPACE_VARS: [&str; 4] = ["x", "y", "z", "w"];

/// The support A of the octanomial, in coefficient order a..h.
pub const SUPPORT: [[u32; 4]; 8] = [
    [1, 1, 1, 0],
    [1, 1, 0, 1],
    [1, 0, 1, 1],
    [0, 1, 1, 1],
    [2, 1, 0, 0],
    [1, 2, 0, 0],
    [0, 0, 2, 1],
    [0, 0, 1, 2],
];

pub const COEFF_NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctanomialCoefficients {
    pub c: [Rat; 8],
}

impl OctanomialCoefficients {
    pub fn get(&self, name: char) -> &Rat {
        &self.c[(name as u8 - b'a') as usize]
    }

    pub fn sum(&self) -> Rat {
        self.c.iter().sum()
    }
}

/// One of the quintics a,b,c,d: built from an ordered partition of
/// {1..6} into three pairs.
fn paired_quintic(d: &[Rat; 6], pairs: [(usize, usize); 3]) -> Rat {
    let prod = |p: (usize, usize)| &d[p.0] * &d[p.1];
    let sum = |p: (usize, usize)| &d[p.0] + &d[p.1];
    let sumsq = |p: (usize, usize)| &d[p.0] * &d[p.0] + &d[p.1] * &d[p.1];
    let [p1, p2, p3] = pairs;
    prod(p1) * prod(p2) * (sum(p1) - sum(p2))
        + prod(p2) * prod(p3) * (sum(p2) - sum(p3))
        + prod(p3) * prod(p1) * (sum(p3) - sum(p1))
        + prod(p3) * sum(p3) * (sumsq(p1) - sumsq(p2))
        + prod(p1) * sum(p1) * (sumsq(p2) - sumsq(p3))
        + prod(p2) * sum(p2) * (sumsq(p3) - sumsq(p1))
}

/// One of the factored quintics e,f,g,h:
/// -(d_i+d_j+d_k)(d_l+d_m+d_n)(..)(..)(..)
fn factored_quintic(
    d: &[Rat; 6],
    t1: [usize; 3],
    t2: [usize; 3],
    diffs: [(usize, usize); 3],
) -> Rat {
    let triple = |t: [usize; 3]| &d[t[0]] + &d[t[1]] + &d[t[2]];
    let mut v = -(triple(t1) * triple(t2));
    for (i, j) in diffs {
        v *= &d[i] - &d[j];
    }
    v
}

/// The eight coefficients of the octanomial, exactly as quintics in d.
/// Indices below are 0-based.
pub fn coefficients_from_moduli(m: &ModuliVector) -> OctanomialCoefficients {
    let d = m.d();
    let a = paired_quintic(d, [(0, 2), (1, 3), (4, 5)]);
    let b = paired_quintic(d, [(0, 1), (2, 4), (3, 5)]);
    let c = paired_quintic(d, [(0, 2), (1, 4), (3, 5)]);
    let dd = paired_quintic(d, [(0, 1), (2, 3), (4, 5)]);
    let e = factored_quintic(d, [0, 2, 4], [1, 3, 5], [(0, 4), (1, 5), (2, 3)]);
    let f = factored_quintic(d, [0, 1, 3], [2, 4, 5], [(0, 3), (1, 4), (2, 5)]);
    let g = factored_quintic(d, [0, 2, 3], [1, 4, 5], [(0, 3), (1, 5), (2, 4)]);
    let h = factored_quintic(d, [0, 1, 4], [2, 3, 5], [(0, 4), (2, 5), (1, 3)]);
    OctanomialCoefficients {
        c: [a, b, c, dd, e, f, g, h],
    }
}

/// The linear form F_ij vanishing on the i-th and j-th base points.
pub fn linear_factor(m: &ModuliVector, i: usize, j: usize) -> SparsePoly {
    let di = m.get(i);
    let dj = m.get(j);
    let cx = di * dj * (di + dj);
    let cy = -(di * di + di * dj + dj * dj);
    let x = SparsePoly::var(&PLANE_VARS, "X").scale(&cx);
    let y = SparsePoly::var(&PLANE_VARS, "Y").scale(&cy);
    let z = SparsePoly::var(&PLANE_VARS, "Z");
    x.add(&y).add(&z)
}

#[derive(Clone, Debug)]
pub struct PlaneCubicBasis {
    pub x: SparsePoly,
    pub y: SparsePoly,
    pub z: SparsePoly,
    pub w: SparsePoly,
}

impl PlaneCubicBasis {
    pub fn as_array(&self) -> [&SparsePoly; 4] {
        [&self.x, &self.y, &self.z, &self.w]
    }
}

/// The basis (x, y, z, w) of factored ternary cubics through the six points.
pub fn plane_cubic_basis(m: &ModuliVector) -> PlaneCubicBasis {
    let f = |i, j| linear_factor(m, i, j);
    PlaneCubicBasis {
        x: f(0, 1).mul(&f(2, 3)).mul(&f(4, 5)),
        y: f(0, 2).mul(&f(1, 4)).mul(&f(3, 5)),
        z: f(0, 1).mul(&f(2, 4)).mul(&f(3, 5)),
        w: f(0, 2).mul(&f(1, 3)).mul(&f(4, 5)),
    }
}

/// The eight-term cubic with the support A.
pub fn octanomial_cubic(c: &OctanomialCoefficients) -> SparsePoly {
    let mut p = SparsePoly::zero(&SPACE_VARS);
    for (exps, coeff) in SUPPORT.iter().zip(&c.c) {
        p = p.add(&SparsePoly::monomial(
            &SPACE_VARS,
            exps.to_vec(),
            coeff.clone(),
        ));
    }
    p
}

/// Substitutes the basis cubics into the octanomial; true iff the result
/// is identically zero in X, Y, Z.
pub fn verify_parametrization(m: &ModuliVector) -> Result<bool> {
    let coeffs = coefficients_from_moduli(m);
    let cubic = octanomial_cubic(&coeffs);
    let basis = plane_cubic_basis(m);
    Ok(substituted_residual(&cubic, &basis)?.is_zero())
}

/// The degree-9 ternary form obtained by composing the cubic with the basis.
pub fn substituted_residual(cubic: &SparsePoly, basis: &PlaneCubicBasis) -> Result<SparsePoly> {
    let mut assign = HashMap::new();
    assign.insert("x".to_string(), basis.x.clone());
    assign.insert("y".to_string(), basis.y.clone());
    assign.insert("z".to_string(), basis.z.clone());
    assign.insert("w".to_string(), basis.w.clone());
    cubic.substitute(&assign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use num::traits::Zero;

    fn sample() -> ModuliVector {
        ModuliVector::from_ints([0, 1, 2, 3, 4, 5]).unwrap()
    }

    #[test]
    fn coefficient_e_example() {
        let c = coefficients_from_moduli(&sample());
        assert_eq!(*c.get('e'), rat(864));
    }

    #[test]
    fn coefficients_sum_to_zero() {
        for d in [
            [0, 1, 2, 3, 4, 5],
            [7, -3, 11, 2, -5, 20],
            [1, 4, 9, 16, 25, 36],
        ] {
            let m = ModuliVector::from_ints(d).unwrap();
            assert!(coefficients_from_moduli(&m).sum().is_zero());
        }
    }

    #[test]
    fn basis_vanishes_at_base_points() {
        let m = sample();
        let basis = plane_cubic_basis(&m);
        for i in 0..6 {
            let di = m.get(i);
            let p = [rat(1), di.clone(), di * di * di];
            for b in basis.as_array() {
                assert!(b.eval(&p).is_zero(), "basis cubic nonzero at point {i}");
                assert!(b.is_homogeneous_of_degree(3));
            }
        }
    }

    #[test]
    fn octanomial_support() {
        let c = coefficients_from_moduli(&sample());
        let cubic = octanomial_cubic(&c);
        assert_eq!(cubic.num_terms(), 8);
        let mut expected: Vec<Vec<u32>> = SUPPORT.iter().map(|e| e.to_vec()).collect();
        expected.sort_by(|a, b| crate::poly::grlex(&b, &a));
        assert_eq!(cubic.support(), expected);
        // All-zero coefficients give the zero polynomial.
        let zero = OctanomialCoefficients {
            c: std::array::from_fn(|_| Rat::zero()),
        };
        assert!(octanomial_cubic(&zero).is_zero());
    }

    #[test]
    fn parametrization_identity() {
        assert!(verify_parametrization(&sample()).unwrap());
    }

    #[test]
    fn perturbed_coefficient_breaks_identity() {
        let m = sample();
        let mut c = coefficients_from_moduli(&m);
        c.c[0] += rat(1);
        let cubic = octanomial_cubic(&c);
        let basis = plane_cubic_basis(&m);
        assert!(!substituted_residual(&cubic, &basis).unwrap().is_zero());
    }

    #[test]
    fn symmetry_action_on_coefficients() {
        // The moduli permutation (23)(45) swaps x<->y and z<->w, so the
        // coefficient vector must transform by (ab)(cd)(ef)(gh) up to sign.
        let m = sample();
        let c = coefficients_from_moduli(&m);
        let d = m.d();
        let permuted = ModuliVector::new([
            d[0].clone(),
            d[2].clone(),
            d[1].clone(),
            d[4].clone(),
            d[3].clone(),
            d[5].clone(),
        ])
        .unwrap();
        let cp = coefficients_from_moduli(&permuted);
        let swapped = [
            c.c[1].clone(),
            c.c[0].clone(),
            c.c[3].clone(),
            c.c[2].clone(),
            c.c[5].clone(),
            c.c[4].clone(),
            c.c[7].clone(),
            c.c[6].clone(),
        ];
        let matches_plus = cp.c == swapped;
        let matches_minus = cp.c.iter().zip(&swapped).all(|(x, y)| *x == -y.clone());
        assert!(matches_plus || matches_minus, "symmetry action failed");
    }
}
