//! The 27 lines on an octanomial cubic, built intrinsically from the six
//! plane points, with Plucker coordinates, the full incidence census, and
//! the 135 intersection points.

use std::collections::HashMap;
use std::fmt;

use num::traits::Zero;

use crate::matrix::RatMatrix;
use crate::moduli::ModuliVector;
use crate::octanomial::{
    coefficients_from_moduli, octanomial_cubic, plane_cubic_basis, OctanomialCoefficients,
    PlaneCubicBasis, SPACE_VARS,
};
use crate::poly::SparsePoly;
use crate::rational::{canonicalize_vector, proportional, rat, Rat};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineLabel {
    E(u8),
    F(u8, u8),
    G(u8),
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineLabel::E(i) => write!(f, "E{i}"),
            LineLabel::F(i, j) => write!(f, "F{i}{j}"),
            LineLabel::G(i) => write!(f, "G{i}"),
        }
    }
}

/// The 27 labels in census order: E1..E6, F12..F56, G1..G6.
pub fn all_labels() -> Vec<LineLabel> {
    let mut out = Vec::with_capacity(27);
    for i in 1..=6 {
        out.push(LineLabel::E(i));
    }
    for i in 1..=6u8 {
        for j in i + 1..=6 {
            out.push(LineLabel::F(i, j));
        }
    }
    for i in 1..=6 {
        out.push(LineLabel::G(i));
    }
    out
}

pub fn line_index(label: LineLabel) -> usize {
    all_labels()
        .iter()
        .position(|&l| l == label)
        .expect("valid label")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPoint {
    coords: Vec<Rat>,
}

impl ProjPoint {
    /// Canonical form: divided by the first nonzero coordinate.
    pub fn new(coords: Vec<Rat>) -> Result<ProjPoint> {
        let Some(first) = coords.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::Line("zero vector is not a projective point".into()));
        };
        Ok(ProjPoint {
            coords: coords.into_iter().map(|c| c / &first).collect(),
        })
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(crate::rational::rat_string)
            .collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// Plucker coordinates (p01, p02, p03, p12, p13, p23) of the line through
/// two points of P^3.
pub fn plucker_from_points(u: &[Rat], v: &[Rat]) -> [Rat; 6] {
    const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    PAIRS.map(|(a, b)| &u[a] * &v[b] - &u[b] * &v[a])
}

/// The pairing whose vanishing is incidence of two lines.
pub fn plucker_pairing(p: &[Rat; 6], q: &[Rat; 6]) -> Rat {
    &p[0] * &q[5] - &p[1] * &q[4] + &p[2] * &q[3] + &p[3] * &q[2] - &p[4] * &q[1] + &p[5] * &q[0]
}

#[derive(Clone, Debug)]
pub struct PluckerLine {
    pub label: LineLabel,
    /// Canonicalized: coprime integers, first nonzero positive.
    pub p: [Rat; 6],
    span: [Vec<Rat>; 2],
}

impl PluckerLine {
    pub fn from_span(label: LineLabel, a: Vec<Rat>, b: Vec<Rat>) -> Result<PluckerLine> {
        let p = plucker_from_points(&a, &b);
        if p.iter().all(|c| c.is_zero()) {
            return Err(Error::Line(format!("{label}: spanning points coincide")));
        }
        let canon = canonicalize_vector(&p);
        let p: [Rat; 6] = std::array::from_fn(|i| canon[i].clone());
        let rel = &p[0] * &p[5] - &p[1] * &p[4] + &p[2] * &p[3];
        debug_assert!(rel.is_zero());
        Ok(PluckerLine {
            label,
            p,
            span: [a, b],
        })
    }

    pub fn span(&self) -> [&[Rat]; 2] {
        [&self.span[0], &self.span[1]]
    }

    pub fn meets(&self, other: &PluckerLine) -> bool {
        plucker_pairing(&self.p, &other.p).is_zero()
    }

    /// The point of a span-combination s*A + t*B.
    pub fn at(&self, s: i64, t: i64) -> Vec<Rat> {
        (0..4)
            .map(|k| &self.span[0][k] * rat(s) + &self.span[1][k] * rat(t))
            .collect()
    }
}

/// The six base points (1 : d_i : d_i^3) in P^2.
pub fn base_points(m: &ModuliVector) -> [ProjPoint; 6] {
    std::array::from_fn(|i| {
        let d = m.get(i);
        ProjPoint::new(vec![rat(1), d.clone(), d * d * d]).expect("nonzero")
    })
}

const BIN_VARS: [&str; 2] = ["s", "t"];

/// Substitutes ternary forms in s,t for X,Y,Z in the four basis cubics.
fn compose_basis(basis: &PlaneCubicBasis, map: &[SparsePoly; 3]) -> Result<[SparsePoly; 4]> {
    let mut assign = HashMap::new();
    for (name, p) in ["X", "Y", "Z"].iter().zip(map) {
        assign.insert((*name).to_string(), p.clone());
    }
    let arr = basis.as_array();
    Ok([
        arr[0].substitute(&assign)?,
        arr[1].substitute(&assign)?,
        arr[2].substitute(&assign)?,
        arr[3].substitute(&assign)?,
    ])
}

/// E_i: the image of the exceptional fiber, spanned by two Jacobian columns
/// (the third is killed by the Euler relation at the base point).
pub fn exceptional_line(m: &ModuliVector, i: usize) -> Result<PluckerLine> {
    let basis = plane_cubic_basis(m);
    let d = m.get(i);
    let at = vec![rat(1), d.clone(), d * d * d];
    // (p_i, e2, e3) is a basis of Q^3 since the first coordinate of p_i is 1.
    let col = |v: usize| -> Vec<Rat> {
        basis
            .as_array()
            .iter()
            .map(|c| c.partial(v).eval(&at))
            .collect()
    };
    PluckerLine::from_span(LineLabel::E(i as u8 + 1), col(1), col(2))
        .map_err(|_| Error::Line(format!("E{}: Jacobian rank < 2", i + 1)))
}

/// F_ij: the image of the line through the i-th and j-th base points.
/// Each basis cubic restricts to s*t*(residual linear form).
pub fn connecting_line(m: &ModuliVector, i: usize, j: usize) -> Result<PluckerLine> {
    if i == j {
        return Err(Error::Line("connecting line needs distinct indices".into()));
    }
    let (i, j) = (i.min(j), i.max(j));
    let basis = plane_cubic_basis(m);
    let (di, dj) = (m.get(i), m.get(j));
    let pi = [rat(1), di.clone(), di * di * di];
    let pj = [rat(1), dj.clone(), dj * dj * dj];
    let s = SparsePoly::var(&BIN_VARS, "s");
    let t = SparsePoly::var(&BIN_VARS, "t");
    let map: [SparsePoly; 3] =
        std::array::from_fn(|k| s.scale(&pi[k]).add(&t.scale(&pj[k])));
    let comp = compose_basis(&basis, &map)?;
    let mut alpha = Vec::with_capacity(4);
    let mut beta = Vec::with_capacity(4);
    for c in &comp {
        if !c.coeff(&[3, 0]).is_zero() || !c.coeff(&[0, 3]).is_zero() {
            return Err(Error::Line(format!(
                "F{}{}: restriction not divisible by st",
                i + 1,
                j + 1
            )));
        }
        alpha.push(c.coeff(&[2, 1]));
        beta.push(c.coeff(&[1, 2]));
    }
    PluckerLine::from_span(LineLabel::F(i as u8 + 1, j as u8 + 1), alpha, beta)
}

/// G_i: the image of the conic through the five base points other than the
/// i-th, parametrized by the pencil of lines through one of them.
pub fn conic_line(m: &ModuliVector, i: usize) -> Result<PluckerLine> {
    let basis = plane_cubic_basis(m);
    let pts: Vec<Vec<Rat>> = (0..6)
        .filter(|&k| k != i)
        .map(|k| {
            let d = m.get(k);
            vec![rat(1), d.clone(), d * d * d]
        })
        .collect();
    // The conic through the five points: kernel of the 5x6 monomial matrix.
    let monos = |p: &[Rat]| -> Vec<Rat> {
        vec![
            &p[0] * &p[0],
            &p[0] * &p[1],
            &p[0] * &p[2],
            &p[1] * &p[1],
            &p[1] * &p[2],
            &p[2] * &p[2],
        ]
    };
    let rows: Vec<Vec<Rat>> = pts.iter().map(|p| monos(p)).collect();
    let kernel = RatMatrix::from_rows(&rows).null_space();
    if kernel.len() != 1 {
        return Err(Error::Line(format!(
            "G{}: five points not in general position",
            i + 1
        )));
    }
    let q = &kernel[0];
    let half = crate::rational::ratio(1, 2);
    // Symmetric matrix of the conic.
    let a = [
        [q[0].clone(), &q[1] * &half, &q[2] * &half],
        [&q[1] * &half, q[3].clone(), &q[4] * &half],
        [&q[2] * &half, &q[4] * &half, q[5].clone()],
    ];
    let mut last_err = Error::Line(format!("G{}: no usable pivot", i + 1));
    for pivot in 0..5 {
        match conic_line_with_pivot(&basis, &pts, &a, pivot, i) {
            Ok(line) => return Ok(line),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

fn conic_line_with_pivot(
    basis: &PlaneCubicBasis,
    pts: &[Vec<Rat>],
    a: &[[Rat; 3]; 3],
    pivot: usize,
    i: usize,
) -> Result<PluckerLine> {
    let s = SparsePoly::var(&BIN_VARS, "s");
    let t = SparsePoly::var(&BIN_VARS, "t");
    let pk = &pts[pivot];
    // Pencil directions m(s,t) = s*e2 + t*e3; the pivot has first
    // coordinate 1, so it is never on the line spanned by e2, e3.
    let mvec = [SparsePoly::zero(&BIN_VARS), s.clone(), t.clone()];
    let apply_a = |v: &[SparsePoly; 3]| -> [SparsePoly; 3] {
        std::array::from_fn(|r| {
            (0..3)
                .map(|c| v[c].scale(&a[r][c]))
                .fold(SparsePoly::zero(&BIN_VARS), |acc, x| acc.add(&x))
        })
    };
    let am = apply_a(&mvec);
    // Q(m) = m^T A m and the tangent factor tau = pk^T A m.
    let qm = (0..3)
        .map(|r| mvec[r].mul(&am[r]))
        .fold(SparsePoly::zero(&BIN_VARS), |acc, x| acc.add(&x));
    let tau = (0..3)
        .map(|r| am[r].scale(&pk[r]))
        .fold(SparsePoly::zero(&BIN_VARS), |acc, x| acc.add(&x));
    // Second intersection of the pencil line with the conic.
    let two = rat(2);
    let xmap: [SparsePoly; 3] =
        std::array::from_fn(|r| qm.scale(&pk[r]).sub(&mvec[r].mul(&tau).scale(&two)));
    let comp = compose_basis(basis, &xmap)?;
    // Common degree-5 factor: tangent direction times the four parameters
    // hitting the other base points.
    let mut common = tau.clone();
    for (k, q) in pts.iter().enumerate() {
        if k == pivot {
            continue;
        }
        let det3 = |m2: &[Rat]| -> Rat {
            // det of columns (pk, q, m2)
            let d = RatMatrix::from_rows(&[
                vec![pk[0].clone(), q[0].clone(), m2[0].clone()],
                vec![pk[1].clone(), q[1].clone(), m2[1].clone()],
                vec![pk[2].clone(), q[2].clone(), m2[2].clone()],
            ]);
            d.det().expect("3x3")
        };
        let cs = det3(&[rat(0), rat(1), rat(0)]);
        let ct = det3(&[rat(0), rat(0), rat(1)]);
        if cs.is_zero() && ct.is_zero() {
            return Err(Error::Line(format!("G{}: degenerate pencil factor", i + 1)));
        }
        common = common.mul(&s.scale(&cs).add(&t.scale(&ct)));
    }
    // Residual linear forms by sampling; verified by exact multiplication.
    let samples: [(i64, i64); 6] = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1)];
    let mut chosen: Vec<(i64, i64)> = Vec::new();
    for &(ss, tt) in &samples {
        if !common.eval(&[rat(ss), rat(tt)]).is_zero() {
            if let Some(&(s0, t0)) = chosen.first() {
                if s0 * tt - ss * t0 != 0 {
                    chosen.push((ss, tt));
                    break;
                }
            } else {
                chosen.push((ss, tt));
            }
        }
    }
    if chosen.len() != 2 {
        return Err(Error::Line(format!("G{}: common factor vanishes", i + 1)));
    }
    let [(s1, t1), (s2, t2)] = [chosen[0], chosen[1]];
    let k1 = common.eval(&[rat(s1), rat(t1)]);
    let k2 = common.eval(&[rat(s2), rat(t2)]);
    let det = rat(s1 * t2 - s2 * t1);
    let mut alpha = Vec::with_capacity(4);
    let mut beta = Vec::with_capacity(4);
    for c in &comp {
        let v1 = c.eval(&[rat(s1), rat(t1)]) / &k1;
        let v2 = c.eval(&[rat(s2), rat(t2)]) / &k2;
        let al = (&v1 * rat(t2) - &v2 * rat(t1)) / &det;
        let be = (&v2 * rat(s1) - &v1 * rat(s2)) / &det;
        let residual = s.scale(&al).add(&t.scale(&be));
        if common.mul(&residual) != *c {
            return Err(Error::Line(format!(
                "G{}: residual division failed for pivot {pivot}",
                i + 1
            )));
        }
        alpha.push(al);
        beta.push(be);
    }
    PluckerLine::from_span(LineLabel::G(i as u8 + 1), alpha, beta)
}

pub struct LineCensus {
    pub lines: Vec<PluckerLine>,
    pub incidence: Vec<Vec<bool>>,
    /// Intersection points keyed by index pairs (i < j).
    pub intersections: std::collections::BTreeMap<(usize, usize), ProjPoint>,
}

impl LineCensus {
    pub fn line(&self, label: LineLabel) -> &PluckerLine {
        &self.lines[line_index(label)]
    }

    /// The 10 intersection points on a line, labeled by the other line.
    pub fn points_on_line(&self, idx: usize) -> Vec<(LineLabel, ProjPoint)> {
        let mut out = Vec::new();
        for j in 0..27 {
            if !self.incidence[idx][j] {
                continue;
            }
            let key = (idx.min(j), idx.max(j));
            out.push((self.lines[j].label, self.intersections[&key].clone()));
        }
        out
    }
}

fn intersection_point(a: &PluckerLine, b: &PluckerLine) -> Result<ProjPoint> {
    // Solve u*A1 + v*A2 = w*B1 + x*B2 via the kernel of the 4x4 matrix
    // with those columns.
    let rows: Vec<Vec<Rat>> = (0..4)
        .map(|r| {
            vec![
                a.span[0][r].clone(),
                a.span[1][r].clone(),
                -b.span[0][r].clone(),
                -b.span[1][r].clone(),
            ]
        })
        .collect();
    let kernel = RatMatrix::from_rows(&rows).null_space();
    if kernel.len() != 1 {
        return Err(Error::Line(format!(
            "{} and {}: intersection is not a single point",
            a.label, b.label
        )));
    }
    let k = &kernel[0];
    let point: Vec<Rat> = (0..4)
        .map(|r| &a.span[0][r] * &k[0] + &a.span[1][r] * &k[1])
        .collect();
    ProjPoint::new(point)
}

fn check_line_on_surface(cubic: &SparsePoly, line: &PluckerLine) -> Result<()> {
    // The restriction of the cubic to the span is a binary cubic; it must
    // vanish identically.
    let s = SparsePoly::var(&BIN_VARS, "s");
    let t = SparsePoly::var(&BIN_VARS, "t");
    let mut assign = HashMap::new();
    for (k, name) in SPACE_VARS.iter().enumerate() {
        assign.insert(
            (*name).to_string(),
            s.scale(&line.span[0][k]).add(&t.scale(&line.span[1][k])),
        );
    }
    let restricted = cubic.substitute(&assign)?;
    if restricted.is_zero() {
        Ok(())
    } else {
        Err(Error::Line(format!("{} does not lie on the surface", line.label)))
    }
}

fn coordinate_line_plucker(axis: (usize, usize)) -> [Rat; 6] {
    let mut u = vec![rat(0); 4];
    let mut v = vec![rat(0); 4];
    u[axis.0] = rat(1);
    v[axis.1] = rat(1);
    plucker_from_points(&u, &v)
}

fn check_structure(census: &LineCensus, c: &OctanomialCoefficients) -> Result<()> {
    let fail = |msg: String| Err(Error::Line(msg));
    // Incidence degrees, edge count, strong regularity (27, 10, 1, 5).
    let deg: Vec<usize> = (0..27)
        .map(|i| (0..27).filter(|&j| census.incidence[i][j]).count())
        .collect();
    if deg.iter().any(|&d| d != 10) {
        return fail(format!("incidence degrees are not all 10: {deg:?}"));
    }
    if census.intersections.len() != 135 {
        return fail(format!(
            "expected 135 incident pairs, found {}",
            census.intersections.len()
        ));
    }
    for i in 0..27 {
        for j in i + 1..27 {
            let common = (0..27)
                .filter(|&k| census.incidence[i][k] && census.incidence[j][k])
                .count();
            let expected = if census.incidence[i][j] { 1 } else { 5 };
            if common != expected {
                return fail(format!(
                    "common neighbors of {} and {}: {} (expected {})",
                    census.lines[i].label, census.lines[j].label, common, expected
                ));
            }
        }
    }
    // The four coordinate lines.
    let coord_checks = [
        (LineLabel::F(1, 2), (1usize, 3usize)), // {x=z=0} spans y- and w-axes
        (LineLabel::F(1, 3), (0, 2)),           // {y=w=0}
        (LineLabel::F(4, 6), (0, 3)),           // {y=z=0}
        (LineLabel::F(5, 6), (1, 2)),           // {x=w=0}
    ];
    for (label, axis) in coord_checks {
        let expected = coordinate_line_plucker(axis);
        if !proportional(&census.line(label).p, &expected) {
            return fail(format!("{label} is not the expected coordinate line"));
        }
    }
    // The four lines in coordinate planes, with their second equations.
    let g = |n: char| c.get(n).clone();
    let plane_checks: [(LineLabel, usize, [Rat; 4]); 4] = [
        (LineLabel::F(3, 4), 0, [rat(0), g('d'), g('g'), g('h')]),
        (LineLabel::F(2, 5), 1, [g('c'), rat(0), g('g'), g('h')]),
        (LineLabel::F(3, 5), 2, [g('e'), g('f'), rat(0), g('b')]),
        (LineLabel::F(2, 4), 3, [g('e'), g('f'), g('a'), rat(0)]),
    ];
    for (label, coord, form) in plane_checks {
        let line = census.line(label);
        for pt in &line.span {
            if !pt[coord].is_zero() {
                return fail(format!("{label} is not in the expected coordinate plane"));
            }
            let val: Rat = form.iter().zip(pt).map(|(a, b)| a * b).sum();
            if !val.is_zero() {
                return fail(format!("{label} violates its second plane equation"));
            }
        }
    }
    // F16: defining forms, Plucker formula, disjoint from coordinate lines.
    let f16 = census.line(LineLabel::F(1, 6));
    let bg_ah = &g('b') * &g('g') - &g('a') * &g('h');
    let cf_de = &g('c') * &g('f') - &g('d') * &g('e');
    // Two planes through the line, read off the dual Plucker matrix:
    // (0 : p23 : -p13 : p12) and (p23 : 0 : -p03 : p02).
    let forms: [[Rat; 4]; 2] = [
        [
            rat(0),
            cf_de.clone(),
            &g('a') * &g('c') - &g('e') * &g('g'),
            &g('b') * &g('c') - &g('e') * &g('h'),
        ],
        [
            cf_de.clone(),
            rat(0),
            &g('f') * &g('g') - &g('a') * &g('d'),
            &g('f') * &g('h') - &g('b') * &g('d'),
        ],
    ];
    // The two-form presentation only defines the line when its leading
    // coefficient cf - de is nonzero.
    if !cf_de.is_zero() {
        for pt in &f16.span {
            for form in &forms {
                let val: Rat = form.iter().zip(pt).map(|(a, b)| a * b).sum();
                if !val.is_zero() {
                    return fail("F16 violates its defining forms".into());
                }
            }
        }
    }
    let expected_f16 = [
        bg_ah,
        &g('f') * &g('h') - &g('b') * &g('d'),
        &g('a') * &g('d') - &g('f') * &g('g'),
        &g('b') * &g('c') - &g('e') * &g('h'),
        &g('e') * &g('g') - &g('a') * &g('c'),
        &g('c') * &g('f') - &g('d') * &g('e'),
    ];
    if !proportional(&f16.p, &expected_f16) {
        return fail("F16 Plucker vector mismatch".into());
    }
    // Each F16 coordinate is (up to sign) a distinct 2x2 minor of
    // [[a,b,e,f],[g,h,c,d]].
    let top = [g('a'), g('b'), g('e'), g('f')];
    let bot = [g('g'), g('h'), g('c'), g('d')];
    let mut minors: Vec<Rat> = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            minors.push(&top[i] * &bot[j] - &top[j] * &bot[i]);
        }
    }
    for v in &expected_f16 {
        let hit = minors
            .iter()
            .position(|m| m == v || *m == -v.clone());
        match hit {
            Some(k) => {
                minors.remove(k);
            }
            None => return fail("F16 coordinates are not the maximal minors".into()),
        }
    }
    let coord_labels = [
        LineLabel::F(1, 2),
        LineLabel::F(1, 3),
        LineLabel::F(4, 6),
        LineLabel::F(5, 6),
    ];
    for l in coord_labels {
        if f16.meets(census.line(l)) {
            return fail(format!("F16 unexpectedly meets {l}"));
        }
    }
    // The two pair-triples and the four single-triples.
    let triples: [([LineLabel; 3], Vec<LineLabel>); 6] = [
        (
            [LineLabel::E(1), LineLabel::F(4, 5), LineLabel::G(1)],
            vec![LineLabel::F(1, 2), LineLabel::F(1, 3)],
        ),
        (
            [LineLabel::E(6), LineLabel::F(2, 3), LineLabel::G(6)],
            vec![LineLabel::F(4, 6), LineLabel::F(5, 6)],
        ),
        (
            [LineLabel::E(2), LineLabel::F(3, 6), LineLabel::G(2)],
            vec![LineLabel::F(1, 2)],
        ),
        (
            [LineLabel::E(3), LineLabel::F(2, 6), LineLabel::G(3)],
            vec![LineLabel::F(1, 3)],
        ),
        (
            [LineLabel::E(4), LineLabel::F(1, 5), LineLabel::G(4)],
            vec![LineLabel::F(4, 6)],
        ),
        (
            [LineLabel::E(5), LineLabel::F(1, 4), LineLabel::G(5)],
            vec![LineLabel::F(5, 6)],
        ),
    ];
    for (members, met) in &triples {
        for &m in members {
            let hits: Vec<LineLabel> = coord_labels
                .iter()
                .copied()
                .filter(|&l| census.incidence[line_index(m)][line_index(l)])
                .collect();
            if hits != *met {
                return fail(format!(
                    "{m} meets coordinate lines {hits:?}, expected {met:?}"
                ));
            }
        }
    }
    // Blow-down consistency: E_i meets exactly the F_ij and G_j with j != i.
    for i in 1..=6u8 {
        let ei = line_index(LineLabel::E(i));
        for j in 0..27 {
            let expected = match census.lines[j].label {
                LineLabel::F(u, v) => u == i || v == i,
                LineLabel::G(u) => u != i,
                LineLabel::E(_) => false,
            };
            if census.incidence[ei][j] != expected {
                return fail(format!(
                    "E{} incidence with {} is wrong",
                    i, census.lines[j].label
                ));
            }
        }
    }
    Ok(())
}

/// Builds all 27 lines, their incidences and intersection points, and
/// verifies the census structure.
pub fn full_census(m: &ModuliVector) -> Result<LineCensus> {
    let c = coefficients_from_moduli(m);
    let cubic = octanomial_cubic(&c);
    let mut lines = Vec::with_capacity(27);
    for i in 0..6 {
        lines.push(exceptional_line(m, i)?);
    }
    for i in 0..6 {
        for j in i + 1..6 {
            lines.push(connecting_line(m, i, j)?);
        }
    }
    for i in 0..6 {
        lines.push(conic_line(m, i)?);
    }
    for line in &lines {
        check_line_on_surface(&cubic, line)?;
    }
    let incidence: Vec<Vec<bool>> = (0..27)
        .map(|i| {
            (0..27)
                .map(|j| i != j && lines[i].meets(&lines[j]))
                .collect()
        })
        .collect();
    let mut intersections = std::collections::BTreeMap::new();
    for i in 0..27 {
        for j in i + 1..27 {
            if incidence[i][j] {
                intersections.insert((i, j), intersection_point(&lines[i], &lines[j])?);
            }
        }
    }
    let census = LineCensus {
        lines,
        incidence,
        intersections,
    };
    check_structure(&census, &c)?;
    Ok(census)
}

/// Checks the printed product-of-roots formulas for one member of each of
/// the two pair-triples, up to the triplet's internal ordering.
pub fn triplet_formula_check(m: &ModuliVector) -> Result<bool> {
    let census = full_census(m)?;
    let d = |k: usize| m.get(k - 1).clone();
    let v1 = [
        (d(5) - d(6)) * (d(4) - d(6)) * (d(3) - d(5)) * (d(2) - d(4)),
        rat(0),
        (d(4) - d(6)) * (d(4) - d(6)) * (d(3) - d(5)) * (d(2) - d(5)),
        -((d(5) - d(6)) * (d(5) - d(6)) * (d(3) - d(4)) * (d(2) - d(4))),
        rat(0),
        (d(5) - d(6)) * (d(4) - d(6)) * (d(3) - d(4)) * (d(2) - d(5)),
    ];
    let t1 = [LineLabel::E(1), LineLabel::F(4, 5), LineLabel::G(1)];
    let tri = |k: usize, l: usize, n: usize| d(k) + d(l) + d(n);
    let v2 = [
        tri(3, 4, 5) * tri(2, 4, 5) * tri(1, 3, 4) * tri(1, 2, 5),
        tri(3, 4, 5) * tri(3, 4, 5) * tri(1, 2, 5) * tri(1, 2, 4),
        rat(0),
        rat(0),
        -(tri(2, 4, 5) * tri(2, 4, 5) * tri(1, 3, 5) * tri(1, 3, 4)),
        -(tri(3, 4, 5) * tri(2, 4, 5) * tri(1, 3, 5) * tri(1, 2, 4)),
    ];
    let t2 = [LineLabel::E(6), LineLabel::F(2, 3), LineLabel::G(6)];
    let matches = |v: &[Rat; 6], triple: &[LineLabel; 3]| {
        triple
            .iter()
            .any(|&l| proportional(&census.line(l).p, v))
    };
    Ok(matches(&v1, &t1) && matches(&v2, &t2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ModuliVector {
        ModuliVector::from_ints([0, 1, 2, 3, 4, 5]).unwrap()
    }

    #[test]
    fn base_point_shape() {
        let pts = base_points(&sample());
        assert_eq!(pts[0].coords(), &[rat(1), rat(0), rat(0)]);
        for p in &pts {
            // On the cuspidal cubic X^2 Z = Y^3.
            let c = p.coords();
            assert_eq!(&c[0] * &c[0] * &c[2], &c[1] * &c[1] * &c[1]);
        }
    }

    #[test]
    fn census_structure_holds() {
        // full_census verifies degrees, strong regularity, coordinate-line
        // identities, plane memberships, F16, and the triple incidences.
        let census = full_census(&sample()).unwrap();
        assert_eq!(census.lines.len(), 27);
        assert_eq!(census.intersections.len(), 135);
        for i in 0..27 {
            assert_eq!(census.points_on_line(i).len(), 10);
        }
    }

    #[test]
    fn exceptional_lines_are_skew() {
        let m = sample();
        let lines: Vec<PluckerLine> = (0..6).map(|i| exceptional_line(&m, i).unwrap()).collect();
        for i in 0..6 {
            for j in i + 1..6 {
                assert!(!lines[i].meets(&lines[j]), "E{} meets E{}", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn plucker_relation_holds() {
        let census = full_census(&sample()).unwrap();
        for line in &census.lines {
            let p = &line.p;
            let rel = &p[0] * &p[5] - &p[1] * &p[4] + &p[2] * &p[3];
            assert!(rel.is_zero(), "{}", line.label);
        }
    }

    #[test]
    fn intersection_points_lie_on_both_lines() {
        let census = full_census(&sample()).unwrap();
        for (&(i, j), pt) in &census.intersections {
            for idx in [i, j] {
                let l = &census.lines[idx];
                // pt is in the span: rank of [A, B, pt] stays 2.
                let rows: Vec<Vec<Rat>> = vec![
                    l.span()[0].to_vec(),
                    l.span()[1].to_vec(),
                    pt.coords().to_vec(),
                ];
                assert_eq!(RatMatrix::from_rows(&rows).rank(), 2);
            }
        }
    }

    #[test]
    fn triplet_formulas() {
        assert!(triplet_formula_check(&sample()).unwrap());
        let m = ModuliVector::from_ints([7, -3, 11, 2, -5, 20]).unwrap();
        assert!(triplet_formula_check(&m).unwrap());
    }

    #[test]
    fn line_at_points_on_surface() {
        let m = sample();
        let c = coefficients_from_moduli(&m);
        let cubic = octanomial_cubic(&c);
        let census = full_census(&m).unwrap();
        for line in census.lines.iter().step_by(5) {
            for (s, t) in [(1, 0), (0, 1), (1, 1), (1, 2)] {
                let pt = line.at(s, t);
                assert!(cubic.eval(&pt).is_zero());
            }
        }
    }
}
