//! Moduli vectors d1..d6 and the 36 root forms of the E6 arrangement.

use num::traits::Zero;

use crate::rational::Rat;
use crate::{Error, Result};

/// The 36 root forms as coefficient vectors in Z^6 with labels:
/// 15 differences d_i - d_j (i < j), 20 triples d_i + d_j + d_k (i < j < k),
/// and the total sum.
pub fn root_form_vectors() -> Vec<(String, [i64; 6])> {
    let mut forms = Vec::with_capacity(36);
    for i in 0..6 {
        for j in i + 1..6 {
            let mut v = [0i64; 6];
            v[i] = 1;
            v[j] = -1;
            forms.push((format!("d{}-d{}", i + 1, j + 1), v));
        }
    }
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                let mut v = [0i64; 6];
                v[i] = 1;
                v[j] = 1;
                v[k] = 1;
                forms.push((format!("d{}+d{}+d{}", i + 1, j + 1, k + 1), v));
            }
        }
    }
    forms.push(("d1+d2+d3+d4+d5+d6".to_string(), [1; 6]));
    forms
}

/// Six rational moduli off all 36 E6 hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliVector {
    d: [Rat; 6],
}

impl ModuliVector {
    /// Checks admissibility eagerly; the violated root form is named.
    pub fn new(d: [Rat; 6]) -> Result<ModuliVector> {
        for (label, coeffs) in root_form_vectors() {
            let val = eval_form(&coeffs, &d);
            if val.is_zero() {
                return Err(Error::Inadmissible(label));
            }
        }
        Ok(ModuliVector { d })
    }

    pub fn from_ints(d: [i64; 6]) -> Result<ModuliVector> {
        ModuliVector::new(d.map(|x| Rat::from_integer(x.into())))
    }

    pub fn d(&self) -> &[Rat; 6] {
        &self.d
    }

    pub fn get(&self, i: usize) -> &Rat {
        &self.d[i]
    }

    /// All 36 labeled root-form values (admissibility guarantees nonzero).
    pub fn root_forms(&self) -> Vec<(String, Rat)> {
        root_form_vectors()
            .into_iter()
            .map(|(label, coeffs)| {
                let v = eval_form(&coeffs, &self.d);
                (label, v)
            })
            .collect()
    }
}

pub(crate) fn eval_form(coeffs: &[i64; 6], d: &[Rat; 6]) -> Rat {
    let mut s = Rat::zero();
    for (c, di) in coeffs.iter().zip(d) {
        if *c != 0 {
            s += di * Rat::from_integer((*c).into());
        }
    }
    s
}

/// Evaluates the 36 root forms at an arbitrary (possibly inadmissible)
/// rational vector; used for admissibility diagnostics and tests.
pub fn root_forms_at(d: &[Rat; 6]) -> Vec<(String, Rat)> {
    root_form_vectors()
        .into_iter()
        .map(|(label, coeffs)| {
            let v = eval_form(&coeffs, d);
            (label, v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn form_count_is_36() {
        assert_eq!(root_form_vectors().len(), 36);
    }

    #[test]
    fn root_form_values() {
        let d = [rat(0), rat(1), rat(2), rat(3), rat(4), rat(5)];
        let forms = root_forms_at(&d);
        let lookup = |label: &str| {
            forms
                .iter()
                .find(|(l, _)| l == label)
                .map(|(_, v)| v.clone())
                .unwrap()
        };
        assert_eq!(lookup("d1-d2"), rat(-1));
        assert_eq!(lookup("d1+d2+d3+d4+d5+d6"), rat(15));
    }

    #[test]
    fn admissibility() {
        assert!(ModuliVector::from_ints([0, 1, 2, 3, 4, 5]).is_ok());
        // Coincident moduli d3 = d4.
        match ModuliVector::from_ints([0, 1, 3, 3, 4, 5]) {
            Err(Error::Inadmissible(label)) => assert_eq!(label, "d3-d4"),
            other => panic!("expected inadmissible, got {other:?}"),
        }
        // Triple hyperplane d1+d2+d3 = 0.
        match ModuliVector::from_ints([0, 1, -1, 3, 4, 5]) {
            Err(Error::Inadmissible(label)) => assert_eq!(label, "d1+d2+d3"),
            other => panic!("expected inadmissible, got {other:?}"),
        }
    }
}
