//! Sparse multivariate polynomials over the rationals.
//!
//! Terms map exponent vectors to nonzero coefficients; the variable list is
//! fixed per polynomial and arithmetic requires matching lists. Canonical
//! term order is graded lexicographic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::traits::{One, Zero};

use crate::rational::{rat_string, Rat};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

/// Graded lexicographic: compare total degree first, then lex.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl SparsePoly {
    pub fn zero(vars: &[&str]) -> SparsePoly {
        SparsePoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rat) -> SparsePoly {
        let mut p = SparsePoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn var(vars: &[&str], name: &str) -> SparsePoly {
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut exps = vec![0u32; vars.len()];
        exps[idx] = 1;
        SparsePoly::monomial(vars, exps, Rat::one())
    }

    pub fn monomial(vars: &[&str], exps: Vec<u32>, coeff: Rat) -> SparsePoly {
        assert_eq!(exps.len(), vars.len());
        let mut p = SparsePoly::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in descending graded-lexicographic order.
    pub fn terms_grlex(&self) -> Vec<(Vec<u32>, Rat)> {
        let mut t: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        t.sort_by(|a, b| grlex(&b.0, &a.0));
        t
    }

    pub fn support(&self) -> Vec<Vec<u32>> {
        self.terms_grlex().into_iter().map(|(e, _)| e).collect()
    }

    fn assert_same_vars(&self, other: &SparsePoly) {
        assert_eq!(self.vars, other.vars, "variable sets differ");
    }

    fn insert_term(&mut self, exps: Vec<u32>, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + coeff;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, q)| (e.clone(), q * c)).collect(),
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        self.assert_same_vars(other);
        let mut out = SparsePoly::zero(&self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> SparsePoly {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut result = SparsePoly::constant(&vars, Rat::one());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rat::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Partial derivative with respect to the i-th variable.
    pub fn partial(&self, i: usize) -> SparsePoly {
        let mut out = SparsePoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (exps, coeff) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            let k = e[i];
            e[i] -= 1;
            out.insert_term(e, coeff * Rat::from_integer(k.into()));
        }
        out
    }

    /// Composes: every variable of self must be assigned a polynomial, and
    /// all assigned polynomials must share one variable set.
    pub fn substitute(&self, assignment: &HashMap<String, SparsePoly>) -> Result<SparsePoly> {
        let mut images: Vec<&SparsePoly> = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            images.push(
                assignment
                    .get(v)
                    .ok_or_else(|| Error::Poly(format!("no assignment for variable {v}")))?,
            );
        }
        let target_vars = images
            .first()
            .map(|p| p.vars.clone())
            .ok_or_else(|| Error::Poly("polynomial has no variables".into()))?;
        for p in &images {
            if p.vars != target_vars {
                return Err(Error::Poly(
                    "assigned polynomials have differing variable sets".into(),
                ));
            }
        }
        let tv: Vec<&str> = target_vars.iter().map(|s| s.as_str()).collect();
        let mut acc = SparsePoly::zero(&tv);
        for (exps, coeff) in &self.terms {
            let mut term = SparsePoly::constant(&tv, coeff.clone());
            for (img, &e) in images.iter().zip(exps) {
                if e > 0 {
                    term = term.mul(&img.pow(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in self.terms_grlex() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", rat_string(&coeff))?;
            for (v, &e) in self.vars.iter().zip(&exps) {
                match e {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn xy() -> (SparsePoly, SparsePoly) {
        let vars = ["x", "y"];
        (SparsePoly::var(&vars, "x"), SparsePoly::var(&vars, "y"))
    }

    #[test]
    fn substitute_square_of_sum() {
        let (x, _) = xy();
        let f = x.mul(&x);
        let big = ["X", "Y"];
        let xy_sum = SparsePoly::var(&big, "X").add(&SparsePoly::var(&big, "Y"));
        let mut assign = HashMap::new();
        assign.insert("x".to_string(), xy_sum.clone());
        assign.insert("y".to_string(), SparsePoly::zero(&big));
        let g = f.substitute(&assign).unwrap();
        // X^2 + 2XY + Y^2
        assert_eq!(g.num_terms(), 3);
        assert_eq!(g.coeff(&[1, 1]), rat(2));
    }

    #[test]
    fn substitute_identity_and_zero() {
        let (x, y) = xy();
        let f = x.mul(&y).add(&x.pow(3)).sub(&y.scale(&rat(7)));
        let mut id = HashMap::new();
        id.insert("x".to_string(), x.clone());
        id.insert("y".to_string(), y.clone());
        assert_eq!(f.substitute(&id).unwrap(), f);
        // xy - yx is the zero polynomial.
        let z = x.mul(&y).sub(&y.mul(&x));
        assert!(z.is_zero());
        assert!(z.substitute(&id).unwrap().is_zero());
        // Missing assignment is an error.
        let mut partial = HashMap::new();
        partial.insert("x".to_string(), x.clone());
        assert!(f.substitute(&partial).is_err());
    }

    #[test]
    fn substitution_is_multiplicative() {
        let (x, y) = xy();
        let f = x.add(&y.scale(&rat(2)));
        let g = x.mul(&x).sub(&y);
        let mut a = HashMap::new();
        a.insert("x".to_string(), y.add(&x.pow(2)));
        a.insert("y".to_string(), x.sub(&y));
        let lhs = f.mul(&g).substitute(&a).unwrap();
        let rhs = f.substitute(&a).unwrap().mul(&g.substitute(&a).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn grlex_ordering() {
        assert_eq!(grlex(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(grlex(&[0, 2], &[1, 1]), Ordering::Less);
        assert_eq!(grlex(&[1, 2], &[2, 0]), Ordering::Greater);
    }

    #[test]
    fn derivative_and_eval() {
        let (x, y) = xy();
        let f = x.pow(2).mul(&y).scale(&rat(3)); // 3 x^2 y
        assert_eq!(f.partial(0).coeff(&[1, 1]), rat(6));
        assert_eq!(f.eval(&[rat(2), rat(5)]), rat(60));
    }
}
