//! The A-discriminant, the factored degree-32 discriminant of the
//! octanomial, and the principal A-determinant.
//!
//! The 49-term A-discriminant is kept as a data file and certified against
//! the Macaulay resultant oracle rather than re-derived.

use std::sync::OnceLock;

use num::traits::{One, Zero};

use crate::octanomial::OctanomialCoefficients;
use crate::poly::SparsePoly;
use crate::rational::{rat, Rat};
use crate::{Error, Result};

pub const COEFF_VARS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

static A_DISC: OnceLock<SparsePoly> = OnceLock::new();

/// The fixed 49-term A-discriminant, degree 8 in a..h.
pub fn a_discriminant() -> &'static SparsePoly {
    A_DISC.get_or_init(|| {
        let data = include_str!("data/a_discriminant.txt");
        let mut p = SparsePoly::zero(&COEFF_VARS);
        for line in data.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let coeff: i64 = it.next().unwrap().parse().expect("bad coefficient");
            let exps: Vec<u32> = it.map(|t| t.parse().expect("bad exponent")).collect();
            assert_eq!(exps.len(), 8, "bad exponent vector");
            p = p.add(&SparsePoly::monomial(&COEFF_VARS, exps, rat(coeff)));
        }
        assert_eq!(p.num_terms(), 49, "A-discriminant must have 49 terms");
        assert!(p.is_homogeneous_of_degree(8));
        p
    })
}

pub fn eval_a_discriminant(c: &OctanomialCoefficients) -> Rat {
    a_discriminant().eval(&c.c)
}

#[derive(Clone, Debug)]
pub struct DiscriminantReport {
    pub full_discriminant: Rat,
    pub a_disc_value: Rat,
    pub principal_value: Rat,
    pub is_smooth: bool,
    pub vanishing_factor: Option<String>,
}

/// The unit constant 2^16 3^5 of the discriminant factorization.
pub fn pow2_16_3_5() -> Rat {
    rat(65536 * 243)
}

fn binomial_factors(c: &OctanomialCoefficients) -> [(&'static str, Rat); 4] {
    let g = |n: char| c.get(n);
    [
        ("ac-eg", g('a') * g('c') - g('e') * g('g')),
        ("ad-fg", g('a') * g('d') - g('f') * g('g')),
        ("bc-eh", g('b') * g('c') - g('e') * g('h')),
        ("bd-fh", g('b') * g('d') - g('f') * g('h')),
    ]
}

/// Evaluates the factored degree-32 discriminant
/// 2^16 3^5 e^2 f^2 g^2 h^2 (ac-eg)^2 (ad-fg)^2 (bc-eh)^2 (bd-fh)^2 Delta_A
/// and reports the first vanishing factor, if any.
pub fn full_discriminant(c: &OctanomialCoefficients) -> DiscriminantReport {
    let mut vanishing = None;
    let mut prod = pow2_16_3_5();
    for name in ['e', 'f', 'g', 'h'] {
        let v = c.get(name);
        if v.is_zero() && vanishing.is_none() {
            vanishing = Some(name.to_string());
        }
        prod *= v * v;
    }
    for (label, v) in binomial_factors(c) {
        if v.is_zero() && vanishing.is_none() {
            vanishing = Some(label.to_string());
        }
        prod *= &v * &v;
    }
    let a_disc = eval_a_discriminant(c);
    if a_disc.is_zero() && vanishing.is_none() {
        vanishing = Some("Delta_A".to_string());
    }
    prod *= &a_disc;
    let is_smooth = !prod.is_zero();
    DiscriminantReport {
        full_discriminant: prod,
        a_disc_value: a_disc,
        principal_value: principal_a_determinant(c),
        is_smooth,
        vanishing_factor: vanishing,
    }
}

/// E_A = abcd e^2 f^2 g^2 h^2 (ac-eg)(ad-fg)(bc-eh)(bd-fh) Delta_A.
pub fn principal_a_determinant(c: &OctanomialCoefficients) -> Rat {
    let mut prod = Rat::one();
    for name in ['a', 'b', 'c', 'd'] {
        prod *= c.get(name);
    }
    for name in ['e', 'f', 'g', 'h'] {
        let v = c.get(name);
        prod *= v * v;
    }
    for (_, v) in binomial_factors(c) {
        prod *= v;
    }
    prod * eval_a_discriminant(c)
}

static E_A_EXPANDED: OnceLock<SparsePoly> = OnceLock::new();

/// The principal A-determinant expanded as a polynomial of degree 28.
pub fn expanded_principal_a_determinant() -> &'static SparsePoly {
    E_A_EXPANDED.get_or_init(|| {
        let v = |n: &str| SparsePoly::var(&COEFF_VARS, n);
        let mut p = v("a").mul(&v("b")).mul(&v("c")).mul(&v("d"));
        for n in ["e", "f", "g", "h"] {
            p = p.mul(&v(n).pow(2));
        }
        for (x, y, u, w) in [
            ("a", "c", "e", "g"),
            ("a", "d", "f", "g"),
            ("b", "c", "e", "h"),
            ("b", "d", "f", "h"),
        ] {
            p = p.mul(&v(x).mul(&v(y)).sub(&v(u).mul(&v(w))));
        }
        let p = p.mul(a_discriminant());
        assert!(p.is_homogeneous_of_degree(28));
        p
    })
}

/// The exponent vector of the unique w-lowest monomial of the expanded
/// principal A-determinant; this is the GKZ vector of the triangulation
/// selected by the weights. Ties mean the weights are not generic.
pub fn gkz_from_weights(w: &[Rat; 8]) -> Result<[u32; 8]> {
    let e_a = expanded_principal_a_determinant();
    let mut best: Option<(Rat, Vec<u32>)> = None;
    let mut tied = false;
    for (exps, _) in e_a.terms_grlex() {
        let weight: Rat = exps
            .iter()
            .zip(w)
            .map(|(&e, wi)| wi * Rat::from_integer(e.into()))
            .sum();
        match &best {
            None => best = Some((weight, exps)),
            Some((bw, _)) => {
                if weight < *bw {
                    best = Some((weight, exps));
                    tied = false;
                } else if weight == *bw {
                    tied = true;
                }
            }
        }
    }
    if tied {
        return Err(Error::Input(
            "weight vector is not generic for the principal A-determinant".into(),
        ));
    }
    let (_, exps) = best.unwrap();
    Ok(std::array::from_fn(|i| exps[i]))
}
