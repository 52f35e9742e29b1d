//! The acceptance battery: twelve fixed-seed criteria shared by the
//! `verify` CLI command and the integration test suite.

use std::time::Instant;

use num::traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::blowdown::roundtrip_check;
use crate::discriminant::{full_discriminant, gkz_from_weights};
use crate::lines::{full_census, triplet_formula_check};
use crate::macaulay::{partials, resultant_oracle};
use crate::moduli::ModuliVector;
use crate::octanomial::{coefficients_from_moduli, octanomial_cubic, OctanomialCoefficients};
use crate::polytope::{
    enumerate_regular_triangulations, gkz_vector, regular_subdivision, sr_ideal,
    subdivision_as_triangulation, symmetry_orbits, toric_ideal_check, TABLE,
};
use crate::rational::{rat, Rat};
use crate::sampler::{chain_sample, random_seed};
use crate::tropical::{
    arrangement_statistic, classify_arrangement, distinct_tropical_lines,
    initial_form_is_monomial, tropical_smoothness, ArrangementStatistic, ArrangementType,
    SplitString, TropicalSmoothness,
};
use crate::valuation::{newton_root_valuations, ExtVal, Prime, RootVal};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub number: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

const NAMES: [&str; 12] = [
    "parametrization identity",
    "discriminant oracle",
    "triangulation census",
    "toric ideal",
    "line census",
    "product-of-roots formulas",
    "Naruki general vectors",
    "stable arrangement examples",
    "non-stable arrangement examples",
    "discriminant initial form",
    "blow-down round trip",
    "Newton polygon criterion",
];

fn p5() -> Prime {
    Prime::new(5).unwrap()
}

fn random_admissible(rng: &mut ChaCha20Rng, bound: i64) -> ModuliVector {
    loop {
        let d: [i64; 6] = std::array::from_fn(|_| rng.gen_range(-bound..=bound));
        if let Ok(m) = ModuliVector::from_ints(d) {
            return m;
        }
    }
}

fn criterion_1() -> Result<String> {
    let mut rng = ChaCha20Rng::seed_from_u64(101);
    for _ in 0..100 {
        let m = random_admissible(&mut rng, 50);
        if !crate::octanomial::verify_parametrization(&m)? {
            return Err(Error::Input(format!("substitution nonzero at {:?}", m.d())));
        }
        if !coefficients_from_moduli(&m).sum().is_zero() {
            return Err(Error::Input(format!("coefficients do not sum to 0 at {:?}", m.d())));
        }
    }
    Ok("100 moduli: substitution identity and zero coefficient sum".into())
}

fn criterion_2() -> Result<String> {
    // The factored discriminant equals -2^16 times the Macaulay-normalized
    // resultant; the fixed unit is included in the comparison.
    let unit = -rat(65536);
    let mut rng = ChaCha20Rng::seed_from_u64(102);
    for _ in 0..20 {
        let c = OctanomialCoefficients {
            c: std::array::from_fn(|_| rat(rng.gen_range(-9..=9))),
        };
        let res = resultant_oracle(&partials(&octanomial_cubic(&c)))?;
        if &unit * res != full_discriminant(&c).full_discriminant {
            return Err(Error::Resultant(format!(
                "oracle mismatch at coefficients {:?}",
                c.c
            )));
        }
    }
    Ok("20 coefficient vectors: resultant matches the factored formula".into())
}

fn criterion_3() -> Result<String> {
    let ts = enumerate_regular_triangulations();
    if ts.len() != 70 {
        return Err(Error::Census(format!("{} regular triangulations", ts.len())));
    }
    if symmetry_orbits(ts).len() != 14 {
        return Err(Error::Census("regular orbit count is not 14".into()));
    }
    let uni: Vec<_> = ts.iter().filter(|t| t.is_unimodular()).cloned().collect();
    if uni.len() != 53 {
        return Err(Error::Census(format!("{} unimodular triangulations", uni.len())));
    }
    let mut sizes: Vec<usize> = symmetry_orbits(&uni).iter().map(|o| o.len()).collect();
    sizes.sort_unstable();
    if sizes != vec![1, 4, 4, 4, 4, 4, 8, 8, 8, 8] {
        return Err(Error::Census(format!("unimodular orbit sizes {sizes:?}")));
    }
    for (row, entry) in TABLE.iter().enumerate() {
        let w: [Rat; 8] = entry.weights.map(rat);
        let t = subdivision_as_triangulation(&regular_subdivision(&w))
            .ok_or_else(|| Error::Census(format!("row {row} weight is not generic")))?;
        if sr_ideal(&t) != entry.sr {
            return Err(Error::Census(format!("row {row} SR ideal mismatch")));
        }
        if gkz_vector(&t)? != entry.gkz || gkz_from_weights(&w)? != entry.gkz {
            return Err(Error::Census(format!("row {row} GKZ mismatch")));
        }
    }
    Ok("70 regular / 14 orbits / 53 unimodular (1,4,4,4,4,4,8,8,8,8); 10 rows reproduce".into())
}

fn criterion_4() -> Result<String> {
    let w: [Rat; 8] = [4, 4, 3, 1, 1, 1, 1, 7].map(rat);
    let report = toric_ideal_check(&w);
    if !report.homogeneous {
        return Err(Error::Census("binomials are not A-homogeneous".into()));
    }
    let mut got: Vec<String> = report
        .initial
        .iter()
        .map(|m| m.clone().ok_or_else(|| Error::Census("weight tie".into())))
        .collect::<Result<_>>()?;
    got.sort();
    let expected = ["ab", "ac", "ad", "ah", "bg", "cf", "eh", "fh"];
    if got != expected {
        return Err(Error::Census(format!("initial monomials {got:?}")));
    }
    Ok("8 A-homogeneous binomials; initials {ab,ac,ad,ah,bg,cf,eh,fh}".into())
}

fn criterion_5() -> Result<String> {
    let mut rng = ChaCha20Rng::seed_from_u64(105);
    for _ in 0..100 {
        let m = random_admissible(&mut rng, 50);
        // full_census performs every structural check internally.
        full_census(&m)?;
    }
    Ok("100 moduli: 27 lines, SRG(27,10,1,5), all identifications".into())
}

fn criterion_6() -> Result<String> {
    let mut rng = ChaCha20Rng::seed_from_u64(106);
    for _ in 0..100 {
        let m = random_admissible(&mut rng, 50);
        if !triplet_formula_check(&m)? {
            return Err(Error::Line(format!("formula mismatch at {:?}", m.d())));
        }
    }
    Ok("100 moduli: printed Plucker products match census lines".into())
}

/// Moduli built as integer polynomials in p = 5.
fn poly_in_p(terms: &[(i64, u32)]) -> i64 {
    terms.iter().map(|&(c, e)| c * 5i64.pow(e)).sum()
}

/// The five printed Naruki general vectors with their triangulation classes.
pub fn naruki_vectors() -> Vec<(ModuliVector, usize, ArrangementType)> {
    let v = |rows: [&[(i64, u32)]; 6]| {
        ModuliVector::from_ints(std::array::from_fn(|i| poly_in_p(rows[i]))).unwrap()
    };
    vec![
        (
            v([
                &[(2, 0), (1, 5), (-1, 7), (-1, 9)],
                &[(-1, 3), (1, 9)],
                &[(-1, 0), (1, 7)],
                &[(-1, 3), (-1, 7), (1, 9), (1, 11)],
                &[(-1, 0), (1, 9)],
                &[(1, 0), (1, 3), (-1, 9)],
            ]),
            1,
            ArrangementType::Aaaa,
        ),
        (
            v([
                &[(1, 0), (1, 3), (-1, 9)],
                &[(1, 3), (1, 5), (-1, 9)],
                &[(-2, 0), (1, 5), (1, 7), (1, 9), (-1, 11)],
                &[(1, 0), (-1, 3), (-1, 5), (1, 11)],
                &[(-1, 3), (1, 9)],
                &[(-1, 0), (1, 9)],
            ]),
            2,
            ArrangementType::Aaaa,
        ),
        (
            v([
                &[(-1, 0), (1, 7)],
                &[(2, 0), (1, 5), (-1, 7), (-1, 9)],
                &[(-1, 3), (1, 9)],
                &[(-1, 0), (1, 9)],
                &[(1, 0), (1, 3), (-1, 9)],
                &[(1, 0), (1, 3), (-2, 9), (1, 11)],
            ]),
            3,
            ArrangementType::Aaab,
        ),
        (
            v([
                &[(-1, 0), (1, 3), (-1, 5), (1, 7)],
                &[(2, 0), (-1, 7), (1, 9), (-1, 11)],
                &[(2, 0), (-1, 3), (1, 5), (-1, 7), (1, 9), (-1, 11)],
                &[(-1, 0), (1, 7), (-1, 9), (1, 11)],
                &[(-2, 0), (1, 3), (1, 7), (-1, 9), (1, 11)],
                &[(-1, 0), (1, 11)],
            ]),
            4,
            ArrangementType::Aaab,
        ),
        (
            v([
                &[(2, 0), (-1, 5), (-1, 7), (1, 9)],
                &[(2, 0), (-1, 3), (-1, 5), (1, 9)],
                &[(-1, 0), (1, 5), (1, 7), (-1, 9)],
                &[(-1, 0), (1, 3)],
                &[(-1, 0), (1, 5)],
                &[(-1, 0), (1, 3), (-1, 9), (1, 11)],
            ]),
            7,
            ArrangementType::Aaab,
        ),
    ]
}

fn aaaa_statistic() -> ArrangementStatistic {
    ArrangementStatistic::from_strings(
        std::iter::repeat(SplitString::new(4, 0, 2, 1))
            .take(24)
            .chain(std::iter::repeat(SplitString::new(4, 0, 2, 0)).take(3)),
    )
}

fn aaab_statistic() -> ArrangementStatistic {
    ArrangementStatistic::from_strings(
        std::iter::repeat(SplitString::new(2, 2, 2, 1))
            .take(12)
            .chain(std::iter::repeat(SplitString::new(4, 2, 0, 1)).take(12))
            .chain(std::iter::repeat(SplitString::new(4, 2, 1, 0)).take(3)),
    )
}

fn criterion_7() -> Result<String> {
    for (i, (m, class, ty)) in naruki_vectors().into_iter().enumerate() {
        let c = coefficients_from_moduli(&m);
        if tropical_smoothness(&c, p5()) != TropicalSmoothness::Class(class) {
            return Err(Error::Tree(format!(
                "vector {} is not tropically smooth of class {class}",
                i + 1
            )));
        }
        let stat = arrangement_statistic(&m, p5())?;
        let expected = match ty {
            ArrangementType::Aaaa => aaaa_statistic(),
            _ => aaab_statistic(),
        };
        if stat != expected || classify_arrangement(&stat) != ty {
            return Err(Error::Tree(format!("vector {} statistic {stat}", i + 1)));
        }
        let census = full_census(&m)?;
        let (distinct, pair) = distinct_tropical_lines(&census, p5());
        if !distinct {
            return Err(Error::Tree(format!(
                "vector {} tropical lines collide: {pair:?}",
                i + 1
            )));
        }
    }
    Ok("5 vectors: classes 1,2,3,4,7; printed statistics; 27 distinct tropical lines".into())
}

/// The Example 3.7 stable vectors with expected statistics and types.
pub fn stable_examples() -> Vec<(ModuliVector, Vec<(SplitString, usize)>, ArrangementType)> {
    let ss = SplitString::new;
    vec![
        (
            ModuliVector::from_ints([2377, -2375, 1240, 2385, 2425, 2625]).unwrap(),
            vec![
                (ss(2, 2, 1, 0), 1),
                (ss(2, 2, 2, 0), 4),
                (ss(2, 2, 2, 1), 8),
                (ss(4, 2, 0, 1), 12),
                (ss(4, 2, 1, 0), 2),
            ],
            ArrangementType::Aab,
        ),
        (
            ModuliVector::from_ints([-843, 124, 724, 744, 1537, 844]).unwrap(),
            vec![(ss(2, 0, 2, 0), 1), (ss(4, 0, 2, 0), 6), (ss(4, 0, 2, 1), 20)],
            ArrangementType::Aaa,
        ),
    ]
}

/// The Example 3.8 non-stable vectors with expected statistics.
pub fn nonstable_examples() -> Vec<(ModuliVector, Vec<(SplitString, usize)>)> {
    let ss = SplitString::new;
    vec![
        (
            ModuliVector::from_ints([-719, 1081, -359, -347, -9287, 10081]).unwrap(),
            vec![
                (ss(2, 2, 2, 0), 6),
                (ss(3, 2, 1, 0), 3),
                (ss(3, 2, 2, 0), 6),
                (ss(4, 2, 0, 1), 12),
            ],
        ),
        (
            ModuliVector::from_ints([120, -3099, -3095, 620, -595, 3100]).unwrap(),
            vec![
                (ss(2, 2, 2, 0), 2),
                (ss(2, 2, 2, 1), 8),
                (ss(3, 2, 1, 0), 1),
                (ss(3, 2, 2, 0), 2),
                (ss(4, 2, 0, 1), 12),
                (ss(4, 2, 1, 0), 2),
            ],
        ),
        (
            ModuliVector::from_ints([-6719, 1248, 7248, -519, 481, -479]).unwrap(),
            vec![
                (ss(3, 0, 2, 0), 1),
                (ss(4, 0, 2, 0), 4),
                (ss(4, 0, 2, 1), 20),
                (ss(5, 0, 2, 0), 2),
            ],
        ),
    ]
}

fn expected_stat(entries: &[(SplitString, usize)]) -> ArrangementStatistic {
    ArrangementStatistic {
        counts: entries.iter().cloned().collect(),
    }
}

fn criterion_8() -> Result<String> {
    for (m, entries, ty) in stable_examples() {
        let stat = arrangement_statistic(&m, p5())?;
        if stat != expected_stat(&entries) {
            return Err(Error::Tree(format!("statistic {stat} at {:?}", m.d())));
        }
        if classify_arrangement(&stat) != ty {
            return Err(Error::Tree(format!("type mismatch at {:?}", m.d())));
        }
    }
    Ok("both vectors reproduce their statistics and types (aab), (aaa)".into())
}

fn criterion_9() -> Result<String> {
    for (m, entries) in nonstable_examples() {
        let stat = arrangement_statistic(&m, p5())?;
        if stat != expected_stat(&entries) {
            return Err(Error::Tree(format!("statistic {stat} at {:?}", m.d())));
        }
        if classify_arrangement(&stat) != ArrangementType::NonStableUnknown {
            return Err(Error::Tree(format!("not flagged non-stable: {:?}", m.d())));
        }
    }
    Ok("3 vectors: printed statistics verbatim, all flagged non-stable".into())
}

fn criterion_10() -> Result<String> {
    let mut samples: Vec<ModuliVector> = naruki_vectors().into_iter().map(|(m, _, _)| m).collect();
    samples.extend(stable_examples().into_iter().map(|(m, _, _)| m));
    samples.extend(nonstable_examples().into_iter().map(|(m, _)| m));
    for index in 0..200u64 {
        if let Ok(m) = chain_sample(&random_seed(110, index, p5())) {
            samples.push(m);
        }
    }
    let mut smooth = 0usize;
    for m in &samples {
        let c = coefficients_from_moduli(m);
        if tropical_smoothness(&c, p5()).class().is_none() {
            continue;
        }
        smooth += 1;
        if full_discriminant(&c).full_discriminant.is_zero() {
            return Err(Error::Input(format!("singular surface at {:?}", m.d())));
        }
        if !initial_form_is_monomial(&c, p5()) {
            return Err(Error::Input(format!(
                "discriminant initial form not a monomial at {:?}",
                m.d()
            )));
        }
    }
    Ok(format!(
        "{smooth} tropically smooth samples of {}: unique minimal term, matching valuation",
        samples.len()
    ))
}

fn criterion_11() -> Result<String> {
    let mut rng = ChaCha20Rng::seed_from_u64(111);
    for _ in 0..50 {
        let m = random_admissible(&mut rng, 50);
        roundtrip_check(&m)?;
    }
    Ok("50 moduli: projective round trip, base points recovered".into())
}

fn criterion_12() -> Result<String> {
    let vals = newton_root_valuations(&[3, 1, 0, 0].map(ExtVal::Finite))?;
    let expected: Vec<RootVal> = [2, 1, 0]
        .map(|v| RootVal::Finite(num::rational::Ratio::from_integer(v)))
        .to_vec();
    if vals != expected {
        return Err(Error::Valuation(format!("(3,1,0,0) gave {vals:?}")));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(112);
    for _ in 0..1000 {
        let v: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-10..=10));
        let predicted = v[0] + v[2] > 2 * v[1] && v[1] + v[3] > 2 * v[2];
        let roots = newton_root_valuations(&v.map(ExtVal::Finite))?;
        let distinct = roots[0] != roots[1] && roots[1] != roots[2] && roots[0] != roots[2];
        if predicted != distinct {
            return Err(Error::Valuation(format!(
                "prediction {predicted} vs polygon {distinct} at {v:?}"
            )));
        }
    }
    Ok("(3,1,0,0) -> {2,1,0}; 1000 tuples: inequalities match the polygon".into())
}

pub fn run_criterion(number: usize) -> CriterionResult {
    let body: fn() -> Result<String> = match number {
        1 => criterion_1,
        2 => criterion_2,
        3 => criterion_3,
        4 => criterion_4,
        5 => criterion_5,
        6 => criterion_6,
        7 => criterion_7,
        8 => criterion_8,
        9 => criterion_9,
        10 => criterion_10,
        11 => criterion_11,
        12 => criterion_12,
        _ => panic!("criterion number out of range"),
    };
    let start = Instant::now();
    let outcome = body();
    let millis = start.elapsed().as_millis();
    match outcome {
        Ok(detail) => CriterionResult {
            number,
            name: NAMES[number - 1],
            passed: true,
            detail,
            millis,
        },
        Err(e) => CriterionResult {
            number,
            name: NAMES[number - 1],
            passed: false,
            detail: e.to_string(),
            millis,
        },
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=12).map(run_criterion).collect()
}
