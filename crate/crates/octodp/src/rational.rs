//! Arbitrary-precision rationals, always in lowest terms with positive
//! denominator (that is what `BigRational` guarantees on construction).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Parses "n" or "n/m".
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk = |t: &str| -> Result<Int> {
        t.parse::<Int>()
            .map_err(|_| Error::Input(format!("cannot parse integer {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(mk(s)?)),
        Some((n, d)) => {
            let den = mk(d)?;
            if den.is_zero() {
                return Err(Error::Input(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(mk(n)?, den))
        }
    }
}

/// "n" for integers, "n/m" otherwise.
pub fn rat_string(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Scales a rational vector to coprime integers with the first nonzero
/// entry positive. The zero vector is returned unchanged.
pub fn canonicalize_vector(v: &[Rat]) -> Vec<Rat> {
    let mut lcm = Int::one();
    for q in v {
        lcm = num::integer::lcm(lcm, q.denom().clone());
    }
    let ints: Vec<Int> = v.iter().map(|q| q.numer() * &lcm / q.denom()).collect();
    let mut gcd = Int::zero();
    for n in &ints {
        gcd = num::integer::gcd(gcd, n.clone());
    }
    if gcd.is_zero() {
        return v.to_vec();
    }
    let mut scaled: Vec<Int> = ints.into_iter().map(|n| n / &gcd).collect();
    if let Some(first) = scaled.iter().find(|n| !n.is_zero()) {
        if first.is_negative() {
            for n in &mut scaled {
                *n = -n.clone();
            }
        }
    }
    scaled.into_iter().map(Rat::from_integer).collect()
}

/// Projective equality of coordinate vectors (equal up to a nonzero scalar).
pub fn proportional(u: &[Rat], v: &[Rat]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    canonicalize_vector(u) == canonicalize_vector(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        assert_eq!(parse_rat("7/25").unwrap(), ratio(7, 25));
        assert_eq!(parse_rat("-3").unwrap(), rat(-3));
        assert_eq!(rat_string(&ratio(-3, 4)), "-3/4");
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn canonical_vectors() {
        let v = vec![ratio(-1, 2), rat(1), ratio(-3, 2)];
        let c = canonicalize_vector(&v);
        assert_eq!(c, vec![rat(1), rat(-2), rat(3)]);
        assert!(proportional(&v, &c));
        assert!(!proportional(&v, &[rat(1), rat(2), rat(3)]));
    }
}
