//! p-adic valuations and Newton-polygon root valuations.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::traits::Zero;

use crate::rational::Rat;
use crate::{Error, Result};

/// A prime p >= 5, validated at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if p < 5 {
            return Err(Error::Valuation(format!("prime must be >= 5, got {p}")));
        }
        if !is_prime(p) {
            return Err(Error::Valuation(format!("{p} is not prime")));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn to_int(self) -> BigInt {
        BigInt::from(self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An integer valuation extended by +infinity (the valuation of zero).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtVal {
    Finite(i64),
    Infinity,
}

impl ExtVal {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtVal::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtVal::Finite(v) => Some(v),
            ExtVal::Infinity => None,
        }
    }

    pub fn add(self, other: ExtVal) -> ExtVal {
        match (self, other) {
            (ExtVal::Finite(a), ExtVal::Finite(b)) => ExtVal::Finite(a + b),
            _ => ExtVal::Infinity,
        }
    }
}

impl PartialOrd for ExtVal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtVal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtVal::Finite(a), ExtVal::Finite(b)) => a.cmp(b),
            (ExtVal::Finite(_), ExtVal::Infinity) => Ordering::Less,
            (ExtVal::Infinity, ExtVal::Finite(_)) => Ordering::Greater,
            (ExtVal::Infinity, ExtVal::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtVal::Finite(v) => write!(f, "{v}"),
            ExtVal::Infinity => write!(f, "inf"),
        }
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut n = n.clone();
    loop {
        let (q, r) = num::integer::div_rem(n.clone(), p.clone());
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

/// The exponent of p in q; +infinity for q = 0.
pub fn valuation(q: &Rat, p: Prime) -> ExtVal {
    if q.is_zero() {
        return ExtVal::Infinity;
    }
    let pi = p.to_int();
    ExtVal::Finite(int_valuation(q.numer(), &pi) - int_valuation(q.denom(), &pi))
}

/// A root valuation: a rational slope or +infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RootVal {
    Finite(Ratio<i64>),
    Infinity,
}

impl fmt::Display for RootVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootVal::Finite(v) => write!(f, "{v}"),
            RootVal::Infinity => write!(f, "inf"),
        }
    }
}

/// Root valuations of a degree-n polynomial whose coefficient valuations
/// are given from constant term (index 0) to leading term (index n).
///
/// These are the negated slopes of the lower Newton polygon, counted with
/// multiplicity; an infinite prefix of the coefficient list contributes
/// +infinity roots. Sorted descending.
pub fn newton_root_valuations(coeff_vals: &[ExtVal]) -> Result<Vec<RootVal>> {
    if coeff_vals.len() < 2 {
        return Err(Error::Valuation(
            "need at least two coefficients (degree >= 1)".into(),
        ));
    }
    let n = coeff_vals.len() - 1;
    let lead = match coeff_vals[n] {
        ExtVal::Finite(v) => v,
        ExtVal::Infinity => {
            return Err(Error::Valuation("leading coefficient is zero".into()))
        }
    };
    let pts: Vec<(i64, i64)> = coeff_vals
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.finite().map(|v| (i as i64, v)))
        .collect();
    debug_assert_eq!(pts.last(), Some(&(n as i64, lead)));

    // Lower convex hull by monotone chain (points already sorted by x).
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // Drop b if it is above or on segment a-p.
            if (b.1 - a.1) * (p.0 - a.0) >= (p.1 - a.1) * (b.0 - a.0) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }

    let mut roots = Vec::with_capacity(n);
    // Zero roots: one per missing index before the first finite coefficient.
    for _ in 0..hull[0].0 {
        roots.push(RootVal::Infinity);
    }
    for w in hull.windows(2) {
        let (x0, y0) = w[0];
        let (x1, y1) = w[1];
        let slope = Ratio::new(y1 - y0, x1 - x0);
        for _ in 0..(x1 - x0) {
            roots.push(RootVal::Finite(-slope));
        }
    }
    debug_assert_eq!(roots.len(), n);
    roots.sort();
    roots.reverse();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn fin(v: i64) -> ExtVal {
        ExtVal::Finite(v)
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(5).is_ok());
        assert!(Prime::new(4).is_err());
        assert!(Prime::new(3).is_err());
        assert!(Prime::new(9).is_err());
    }

    #[test]
    fn valuation_examples() {
        let p = Prime::new(5).unwrap();
        assert_eq!(valuation(&rat(250), p), fin(3));
        assert_eq!(valuation(&rat(0), p), ExtVal::Infinity);
        assert_eq!(valuation(&ratio(7, 25), p), fin(-2));
    }

    #[test]
    fn valuation_is_multiplicative() {
        let p = Prime::new(7).unwrap();
        let q = ratio(49, 3);
        let r = ratio(-6, 7);
        assert_eq!(
            valuation(&(&q * &r), p),
            valuation(&q, p).add(valuation(&r, p))
        );
        // Ultrametric with equality when valuations differ.
        let vq = valuation(&q, p);
        let vr = valuation(&r, p);
        let vs = valuation(&(&q + &r), p);
        assert!(vs >= vq.min(vr));
        if vq != vr {
            assert_eq!(vs, vq.min(vr));
        }
    }

    #[test]
    fn newton_polygon_examples() {
        // (t-1)(t-p)(t-p^2): coefficient valuations (3,1,0,0).
        let r = newton_root_valuations(&[fin(3), fin(1), fin(0), fin(0)]).unwrap();
        assert_eq!(
            r,
            vec![
                RootVal::Finite(Ratio::from_integer(2)),
                RootVal::Finite(Ratio::from_integer(1)),
                RootVal::Finite(Ratio::from_integer(0)),
            ]
        );
        // Flat polygon.
        let r = newton_root_valuations(&[fin(0), fin(0), fin(0), fin(0)]).unwrap();
        assert!(r
            .iter()
            .all(|v| *v == RootVal::Finite(Ratio::from_integer(0))));
        // t(t-p): zero constant term.
        let r = newton_root_valuations(&[ExtVal::Infinity, fin(1), fin(0)]).unwrap();
        assert_eq!(
            r,
            vec![RootVal::Infinity, RootVal::Finite(Ratio::from_integer(1))]
        );
        // Error paths.
        assert!(newton_root_valuations(&[]).is_err());
        assert!(newton_root_valuations(&[fin(0), ExtVal::Infinity]).is_err());
    }

    #[test]
    fn newton_polygon_count_matches_degree() {
        let vals = [fin(5), ExtVal::Infinity, fin(1), fin(2), fin(0)];
        let r = newton_root_valuations(&vals).unwrap();
        assert_eq!(r.len(), 4);
    }

    #[test]
    fn fractional_slope() {
        // t^2 - p: valuations (1, inf, 0) -> two roots of valuation 1/2.
        let r = newton_root_valuations(&[fin(1), ExtVal::Infinity, fin(0)]).unwrap();
        assert_eq!(
            r,
            vec![
                RootVal::Finite(Ratio::new(1, 2)),
                RootVal::Finite(Ratio::new(1, 2))
            ]
        );
    }
}
