//! The support configuration A, regular subdivisions, the exhaustive census
//! of regular triangulations with symmetry classes, GKZ vectors,
//! Stanley-Reisner ideals, and the toric ideal.
//!
//! Conventions are fixed here once: subdivisions use the MIN-plus lower
//! hull; toric initial monomials use MAX (the highest monomials).

use std::collections::BTreeSet;
use std::sync::OnceLock;

use itertools::Itertools;

use num::traits::{Signed, Zero};

use crate::matrix::RatMatrix;
use crate::rational::{rat, Rat};
use crate::simplex;
use crate::{Error, Result};

pub const LABELS: [char; 8] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'];

/// The 8 support points, dehomogenized to Z^3 by dropping the last
/// exponent (the total degree is 3).
pub const POINTS: [[i64; 3]; 8] = [
    [1, 1, 1],
    [1, 1, 0],
    [1, 0, 1],
    [0, 1, 1],
    [2, 1, 0],
    [1, 2, 0],
    [0, 0, 2],
    [0, 0, 1],
];

pub fn labels_string(cell: &[usize]) -> String {
    cell.iter().map(|&i| LABELS[i]).collect()
}

fn label_index(c: char) -> usize {
    (c as u8 - b'a') as usize
}

/// Normalized volume of the simplex on four points (0 if degenerate).
pub fn simplex_volume(cell: &[usize; 4]) -> i64 {
    let p = POINTS;
    let [i, j, k, l] = *cell;
    let u = [p[j][0] - p[i][0], p[j][1] - p[i][1], p[j][2] - p[i][2]];
    let v = [p[k][0] - p[i][0], p[k][1] - p[i][1], p[k][2] - p[i][2]];
    let w = [p[l][0] - p[i][0], p[l][1] - p[i][1], p[l][2] - p[i][2]];
    (u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0]))
        .abs()
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    cells: Vec<[usize; 4]>,
}

impl Triangulation {
    /// Cells are sorted internally and as a list; degenerate cells rejected.
    pub fn new(mut cells: Vec<[usize; 4]>) -> Result<Triangulation> {
        for c in cells.iter_mut() {
            c.sort_unstable();
            if simplex_volume(c) == 0 {
                return Err(Error::Census(format!(
                    "degenerate cell {}",
                    labels_string(c)
                )));
            }
        }
        cells.sort_unstable();
        cells.dedup();
        Ok(Triangulation { cells })
    }

    pub fn cells(&self) -> &[[usize; 4]] {
        &self.cells
    }

    pub fn total_volume(&self) -> i64 {
        self.cells.iter().map(simplex_volume).sum()
    }

    pub fn is_unimodular(&self) -> bool {
        self.cells.len() == 7
    }

    /// Relabels points by the permutation i -> perm[i].
    pub fn apply(&self, perm: &[usize; 8]) -> Triangulation {
        let cells = self
            .cells
            .iter()
            .map(|c| {
                let mut m = c.map(|i| perm[i]);
                m.sort_unstable();
                m
            })
            .collect();
        Triangulation::new(cells).expect("permutation preserves volumes")
    }
}

/// The circuits of A: minimal affinely dependent subsets, as signed pairs
/// (Z+, Z-) of index sets.
pub fn circuits() -> &'static Vec<(Vec<usize>, Vec<usize>)> {
    static CIRCUITS: OnceLock<Vec<(Vec<usize>, Vec<usize>)>> = OnceLock::new();
    CIRCUITS.get_or_init(|| {
        let mut out = Vec::new();
        for size in 3..=5usize {
            for subset in subsets(8, size) {
                // Rows of the 4 x size matrix: homogenized points.
                let rows: Vec<Vec<Rat>> = (0..4)
                    .map(|r| {
                        subset
                            .iter()
                            .map(|&i| if r < 3 { rat(POINTS[i][r]) } else { rat(1) })
                            .collect()
                    })
                    .collect();
                let kernel = RatMatrix::from_rows(&rows).null_space();
                if kernel.len() != 1 || kernel[0].iter().any(|v| v.is_zero()) {
                    continue;
                }
                let mut pos = Vec::new();
                let mut neg = Vec::new();
                for (t, v) in subset.iter().zip(&kernel[0]) {
                    if v.is_positive() {
                        pos.push(*t);
                    } else {
                        neg.push(*t);
                    }
                }
                out.push((pos, neg));
            }
        }
        out
    })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn contained(sub: &[usize], sup: &[usize; 4]) -> bool {
    sub.iter().all(|x| sup.contains(x))
}

/// Two simplices intersect properly iff no circuit has its positive part
/// in one and its negative part in the other.
pub fn properly_intersect(s: &[usize; 4], t: &[usize; 4]) -> bool {
    for (pos, neg) in circuits() {
        if (contained(pos, s) && contained(neg, t)) || (contained(pos, t) && contained(neg, s)) {
            return false;
        }
    }
    true
}

/// All triangulations of A: maximal families of pairwise properly
/// intersecting nondegenerate simplices with normalized volumes summing
/// to 7 (which forces covering).
pub fn enumerate_all_triangulations() -> Vec<Triangulation> {
    let mut simplices: Vec<[usize; 4]> = subsets(8, 4)
        .into_iter()
        .map(|s| [s[0], s[1], s[2], s[3]])
        .filter(|s| simplex_volume(s) > 0)
        .collect();
    simplices.sort_unstable();
    let n = simplices.len();
    let vols: Vec<i64> = simplices.iter().map(simplex_volume).collect();
    let mut compat = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            compat[i][j] = properly_intersect(&simplices[i], &simplices[j]);
        }
    }
    let mut found = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        start: usize,
        vol: i64,
        simplices: &[[usize; 4]],
        vols: &[i64],
        compat: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        found: &mut Vec<Triangulation>,
    ) {
        if vol == 7 {
            let cells = chosen.iter().map(|&i| simplices[i]).collect();
            found.push(Triangulation::new(cells).expect("nondegenerate"));
            return;
        }
        for k in start..simplices.len() {
            if vol + vols[k] > 7 {
                continue;
            }
            if chosen.iter().any(|&c| !compat[c][k]) {
                continue;
            }
            chosen.push(k);
            rec(k + 1, vol + vols[k], simplices, vols, compat, chosen, found);
            chosen.pop();
        }
    }
    rec(0, 0, &simplices, &vols, &compat, &mut chosen, &mut found);
    found.sort_unstable();
    found
}

/// Barycentric coordinates of point p with respect to a nondegenerate cell.
fn barycentric(cell: &[usize; 4], p: usize) -> Vec<Rat> {
    let rows: Vec<Vec<Rat>> = (0..4)
        .map(|r| {
            cell.iter()
                .map(|&i| if r < 3 { rat(POINTS[i][r]) } else { rat(1) })
                .collect()
        })
        .collect();
    let mut b: Vec<Rat> = (0..3).map(|r| rat(POINTS[p][r])).collect();
    b.push(rat(1));
    RatMatrix::from_rows(&rows)
        .solve(&b)
        .expect("cell is nondegenerate")
}

/// The strict height system for regularity: for each cell and each point
/// outside it, w_p - sum(lambda_i w_cell_i) >= margin.
fn height_system(t: &Triangulation) -> (Vec<Vec<Rat>>, Vec<Rat>) {
    let mut a = Vec::new();
    for cell in t.cells() {
        for p in 0..8 {
            if cell.contains(&p) {
                continue;
            }
            let lambda = barycentric(cell, p);
            let mut row = vec![Rat::zero(); 8];
            row[p] = rat(1);
            for (i, l) in cell.iter().zip(lambda) {
                row[*i] -= l;
            }
            a.push(row);
        }
    }
    let b = vec![rat(1); a.len()];
    (a, b)
}

/// A height vector inducing t, when t is regular.
pub fn regularity_witness(t: &Triangulation) -> Option<Vec<Rat>> {
    let (a, b) = height_system(t);
    simplex::feasible(&a, &b)
}

/// True iff w lies strictly inside the secondary cone of t.
pub fn cone_contains_strictly(t: &Triangulation, w: &[Rat; 8]) -> bool {
    let (a, _) = height_system(t);
    a.iter().all(|row| {
        let s: Rat = row.iter().zip(w).map(|(c, wi)| c * wi).sum();
        s.is_positive()
    })
}

/// All 70 regular triangulations, sorted canonically.
pub fn enumerate_regular_triangulations() -> &'static Vec<Triangulation> {
    static REGULAR: OnceLock<Vec<Triangulation>> = OnceLock::new();
    REGULAR.get_or_init(|| {
        enumerate_all_triangulations()
            .into_iter()
            .filter(|t| regularity_witness(t).is_some())
            .collect()
    })
}

/// Cells of the subdivision of A induced by lifting to heights w and
/// projecting the lower hull (MIN convention).
pub fn regular_subdivision(w: &[Rat; 8]) -> Vec<Vec<usize>> {
    let mut cells: BTreeSet<Vec<usize>> = BTreeSet::new();
    for subset in subsets(8, 4) {
        let cell = [subset[0], subset[1], subset[2], subset[3]];
        if simplex_volume(&cell) == 0 {
            continue;
        }
        // Affine l with l(q_i) = w_i on the cell: coefficients (alpha, beta).
        let rows: Vec<Vec<Rat>> = cell
            .iter()
            .map(|&i| {
                let mut r: Vec<Rat> = POINTS[i].iter().map(|&x| rat(x)).collect();
                r.push(rat(1));
                r
            })
            .collect();
        let b: Vec<Rat> = cell.iter().map(|&i| w[i].clone()).collect();
        let l = RatMatrix::from_rows(&rows).solve(&b).expect("nondegenerate");
        let slack: Vec<Rat> = (0..8)
            .map(|p| {
                let lp: Rat = POINTS[p].iter().zip(&l).map(|(&x, c)| c * rat(x)).sum::<Rat>()
                    + l[3].clone();
                &w[p] - lp
            })
            .collect();
        if slack.iter().any(|s| s.is_negative()) {
            continue;
        }
        cells.insert((0..8).filter(|&p| slack[p].is_zero()).collect());
    }
    cells.into_iter().collect()
}

/// Interprets a subdivision as a triangulation when every cell is a simplex.
pub fn subdivision_as_triangulation(cells: &[Vec<usize>]) -> Option<Triangulation> {
    let mut out = Vec::new();
    for c in cells {
        if c.len() != 4 {
            return None;
        }
        out.push([c[0], c[1], c[2], c[3]]);
    }
    Triangulation::new(out).ok()
}

fn check_is_triangulation(t: &Triangulation) -> Result<()> {
    if t.total_volume() != 7 {
        return Err(Error::Census("cell volumes do not sum to 7".into()));
    }
    for (i, s) in t.cells().iter().enumerate() {
        for u in &t.cells()[i + 1..] {
            if !properly_intersect(s, u) {
                return Err(Error::Census(format!(
                    "cells {} and {} intersect improperly",
                    labels_string(s),
                    labels_string(u)
                )));
            }
        }
    }
    Ok(())
}

/// GKZ vector: entry i is the total normalized volume of cells containing
/// point i.
pub fn gkz_vector(t: &Triangulation) -> Result<[u32; 8]> {
    check_is_triangulation(t)?;
    let mut phi = [0u32; 8];
    for c in t.cells() {
        let v = simplex_volume(c) as u32;
        for &i in c {
            phi[i] += v;
        }
    }
    Ok(phi)
}

/// Minimal non-faces of a pure simplicial complex given by facet lists.
pub fn minimal_non_faces(facets: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let is_face = |s: &[usize]| facets.iter().any(|f| s.iter().all(|x| f.contains(x)));
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for size in 1..=n {
        for s in subsets(n, size) {
            if is_face(&s) {
                continue;
            }
            if minimal
                .iter()
                .any(|m| m.iter().all(|x| s.contains(x)))
            {
                continue;
            }
            minimal.push(s);
        }
    }
    minimal
}

/// Stanley-Reisner generators as label strings, sorted by degree then
/// lexicographically.
pub fn sr_ideal(t: &Triangulation) -> Vec<String> {
    let facets: Vec<Vec<usize>> = t.cells().iter().map(|c| c.to_vec()).collect();
    let mut gens: Vec<String> = minimal_non_faces(&facets, 8)
        .iter()
        .map(|s| labels_string(s))
        .collect();
    gens.sort_by(|a, b| (a.len(), a.as_str()).cmp(&(b.len(), b.as_str())));
    gens
}

/// The point permutations induced by affine symmetries of A.
pub fn symmetry_group() -> &'static Vec<[usize; 8]> {
    static GROUP: OnceLock<Vec<[usize; 8]>> = OnceLock::new();
    GROUP.get_or_init(|| {
        // a, b, c, d form an affine basis.
        let basis = [0usize, 1, 2, 3];
        let pt = |i: usize| -> Vec<Rat> { POINTS[i].iter().map(|&x| rat(x)).collect() };
        let mut group = Vec::new();
        for img in (0..8usize).permutations(4) {
            // Affine map sending basis -> img, as 3x3 matrix plus shift.
            let cols: Vec<Vec<Rat>> = (1..4)
                .map(|k| {
                    (0..3)
                        .map(|r| &pt(basis[k])[r] - &pt(basis[0])[r])
                        .collect()
                })
                .collect();
            let rows: Vec<Vec<Rat>> = (0..3)
                .map(|r| (0..3).map(|k| cols[k][r].clone()).collect())
                .collect();
            let Ok(inv) = RatMatrix::from_rows(&rows).inverse() else {
                continue;
            };
            let img_cols: Vec<Vec<Rat>> = (1..4)
                .map(|k| (0..3).map(|r| &pt(img[k])[r] - &pt(img[0])[r]).collect())
                .collect();
            // M = [img deltas] * inv(basis deltas)
            let mut m = vec![vec![Rat::zero(); 3]; 3];
            for r in 0..3 {
                for c in 0..3 {
                    m[r][c] = (0..3).map(|k| &img_cols[k][r] * inv.at(k, c)).sum();
                }
            }
            let shift: Vec<Rat> = (0..3)
                .map(|r| {
                    &pt(img[0])[r]
                        - (0..3).map(|c| &m[r][c] * &pt(basis[0])[c]).sum::<Rat>()
                })
                .collect();
            let apply = |i: usize| -> Option<usize> {
                let q: Vec<Rat> = (0..3)
                    .map(|r| {
                        (0..3).map(|c| &m[r][c] * &pt(i)[c]).sum::<Rat>() + shift[r].clone()
                    })
                    .collect();
                (0..8).find(|&j| (0..3).all(|r| q[r] == pt(j)[r]))
            };
            let mut perm = [0usize; 8];
            let mut ok = true;
            let mut seen = [false; 8];
            for i in 0..8 {
                match apply(i) {
                    Some(j) if !seen[j] => {
                        perm[i] = j;
                        seen[j] = true;
                    }
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                group.push(perm);
            }
        }
        group.sort_unstable();
        group.dedup();
        group
    })
}

/// Partition into orbits under the symmetry group; each orbit is a sorted
/// list of indices into ts.
pub fn symmetry_orbits(ts: &[Triangulation]) -> Vec<Vec<usize>> {
    let group = symmetry_group();
    let mut orbit_of: Vec<Option<usize>> = vec![None; ts.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..ts.len() {
        if orbit_of[i].is_some() {
            continue;
        }
        let id = orbits.len();
        let mut members = Vec::new();
        for perm in group {
            let image = ts[i].apply(perm);
            if let Some(j) = ts.iter().position(|t| *t == image) {
                if orbit_of[j].is_none() {
                    orbit_of[j] = Some(id);
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    orbits
}

/// The eight quadratic binomial generators of the toric ideal, as pairs of
/// monomials; the first monomial of each pair is the underlined (highest
/// under the row-8 weights) one.
pub const TORIC_BINOMIALS: [(&str, &str); 8] = [
    ("ab", "cf"),
    ("ac", "eg"),
    ("ad", "fg"),
    ("ah", "cd"),
    ("bg", "cd"),
    ("cf", "de"),
    ("eh", "bc"),
    ("fh", "bd"),
];

#[derive(Clone, Debug)]
pub struct ToricReport {
    /// Per binomial: the w-initial monomial (MAX convention), or None on a
    /// tie (non-generic weight).
    pub initial: Vec<Option<String>>,
    pub homogeneous: bool,
}

fn monomial_support_sum(m: &str) -> [u32; 4] {
    let mut s = [0u32; 4];
    for c in m.chars() {
        for (k, e) in crate::octanomial::SUPPORT[label_index(c)].iter().enumerate() {
            s[k] += e;
        }
    }
    s
}

fn monomial_weight(m: &str, w: &[Rat; 8]) -> Rat {
    m.chars().map(|c| w[label_index(c)].clone()).sum()
}

/// Checks A-homogeneity of the 8 binomials and reports initial monomials.
pub fn toric_ideal_check(w: &[Rat; 8]) -> ToricReport {
    let homogeneous = TORIC_BINOMIALS
        .iter()
        .all(|(m1, m2)| monomial_support_sum(m1) == monomial_support_sum(m2));
    let initial = TORIC_BINOMIALS
        .iter()
        .map(|(m1, m2)| {
            let w1 = monomial_weight(m1, w);
            let w2 = monomial_weight(m2, w);
            match w1.cmp(&w2) {
                std::cmp::Ordering::Greater => Some((*m1).to_string()),
                std::cmp::Ordering::Less => Some((*m2).to_string()),
                std::cmp::Ordering::Equal => None,
            }
        })
        .collect();
    ToricReport {
        initial,
        homogeneous,
    }
}

/// Supports of the facets of conv(A), as sorted index sets.
pub fn facets() -> Vec<Vec<usize>> {
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for s in subsets(8, 3) {
        // Normal of the plane through the three points, if they span one.
        let rows: Vec<Vec<Rat>> = s
            .iter()
            .map(|&i| {
                let mut r: Vec<Rat> = POINTS[i].iter().map(|&x| rat(x)).collect();
                r.push(rat(1));
                r
            })
            .collect();
        let kernel = RatMatrix::from_rows(&rows).null_space();
        if kernel.len() != 1 {
            continue;
        }
        let f = &kernel[0];
        let value = |p: usize| -> Rat {
            POINTS[p].iter().zip(f).map(|(&x, c)| c * rat(x)).sum::<Rat>() + f[3].clone()
        };
        let vals: Vec<Rat> = (0..8).map(value).collect();
        let pos = vals.iter().any(|v| v.is_positive());
        let neg = vals.iter().any(|v| v.is_negative());
        if pos && neg {
            continue;
        }
        let support: Vec<usize> = (0..8).filter(|&p| vals[p].is_zero()).collect();
        // A facet of a 3-polytope is 2-dimensional: needs 3 affinely
        // independent points, which the spanning subset provides.
        out.insert(support);
    }
    out.into_iter().collect()
}

pub struct TableRow {
    pub weights: [i64; 8],
    pub sr: &'static [&'static str],
    pub gkz: [u32; 8],
    pub orbit_size: usize,
}

/// The ten unimodular symmetry classes: representative weights, SR ideals,
/// GKZ vectors, orbit sizes.
pub const TABLE: [TableRow; 10] = [
    TableRow {
        weights: [4, 1, 7, 2, 9, 5, 9, 9],
        sr: &["ah", "bg", "cf", "de", "eg", "eh", "fg", "fh"],
        gkz: [5, 5, 5, 5, 2, 2, 2, 2],
        orbit_size: 1,
    },
    TableRow {
        weights: [5, 2, 8, 4, 2, 9, 5, 9],
        sr: &["ab", "ac", "ah", "cd", "cf", "eh", "fg", "fh"],
        gkz: [2, 5, 2, 5, 5, 2, 5, 2],
        orbit_size: 4,
    },
    TableRow {
        weights: [8, 3, 1, 1, 4, 9, 6, 9],
        sr: &["ab", "ah", "bg", "cf", "eg", "eh", "fg", "fh"],
        gkz: [3, 3, 5, 7, 4, 2, 2, 2],
        orbit_size: 4,
    },
    TableRow {
        weights: [9, 9, 6, 1, 4, 8, 8, 5],
        sr: &["ab", "ac", "ah", "bc", "bg", "cf", "fg", "fh", "egh"],
        gkz: [2, 2, 3, 7, 6, 2, 3, 3],
        orbit_size: 4,
    },
    TableRow {
        weights: [7, 3, 9, 1, 2, 4, 1, 9],
        sr: &["ab", "ac", "ad", "ah", "bc", "cd", "cf", "fh", "bfg", "deh"],
        gkz: [1, 4, 1, 4, 6, 3, 6, 3],
        orbit_size: 4,
    },
    TableRow {
        weights: [8, 8, 2, 6, 1, 6, 3, 7],
        sr: &["ab", "ac", "ad", "ah", "bc", "bd", "bg", "cf", "egh", "fgh"],
        gkz: [1, 1, 3, 5, 6, 4, 4, 4],
        orbit_size: 4,
    },
    TableRow {
        weights: [4, 2, 4, 1, 3, 8, 4, 4],
        sr: &["ab", "ac", "ah", "bg", "cf", "eh", "fg", "fh"],
        gkz: [2, 3, 4, 7, 5, 2, 3, 2],
        orbit_size: 8,
    },
    TableRow {
        weights: [4, 4, 3, 1, 1, 1, 1, 7],
        sr: &["ab", "ac", "ad", "ah", "bg", "cf", "eh", "fh"],
        gkz: [1, 3, 4, 6, 5, 3, 4, 2],
        orbit_size: 8,
    },
    TableRow {
        weights: [9, 3, 8, 4, 3, 9, 2, 9],
        sr: &["ab", "ac", "ad", "ah", "cd", "cf", "eh", "fh", "bfg"],
        gkz: [1, 5, 2, 4, 5, 3, 6, 2],
        orbit_size: 8,
    },
    TableRow {
        weights: [9, 9, 4, 3, 4, 7, 3, 8],
        sr: &["ab", "ac", "ad", "ah", "bc", "bg", "cf", "fh", "egh"],
        gkz: [1, 2, 3, 6, 6, 3, 4, 3],
        orbit_size: 8,
    },
];

/// The triangulation selected by a table row's representative weights.
pub fn table_triangulation(row: usize) -> &'static Triangulation {
    static REPS: OnceLock<Vec<Triangulation>> = OnceLock::new();
    &REPS.get_or_init(|| {
        TABLE
            .iter()
            .map(|r| {
                let w: [Rat; 8] = std::array::from_fn(|i| rat(r.weights[i]));
                subdivision_as_triangulation(&regular_subdivision(&w))
                    .expect("representative weights are generic")
            })
            .collect()
    })[row]
}

/// The 1-based symmetry class of a unimodular triangulation per the table
/// row order; None if t is not unimodular or not in the census.
pub fn unimodular_class(t: &Triangulation) -> Option<usize> {
    if !t.is_unimodular() || check_is_triangulation(t).is_err() {
        return None;
    }
    for perm in symmetry_group() {
        let image = t.apply(perm);
        for row in 0..10 {
            if image == *table_triangulation(row) {
                return Some(row + 1);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discriminant::gkz_from_weights;

    #[test]
    fn configuration_shape() {
        let f = facets();
        assert_eq!(f.len(), 8);
        let expected = ["aceg", "adfg", "bceh", "bdfh", "aef", "bef", "cgh", "dgh"];
        let mut got: Vec<String> = f.iter().map(|s| labels_string(s)).collect();
        let mut want: Vec<String> = expected
            .iter()
            .map(|s| {
                let mut cs: Vec<char> = s.chars().collect();
                cs.sort_unstable();
                cs.into_iter().collect()
            })
            .collect();
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want);
        // Volume 7, via any representative triangulation.
        assert_eq!(table_triangulation(0).total_volume(), 7);
    }

    #[test]
    fn census_counts() {
        let regular = enumerate_regular_triangulations();
        assert_eq!(regular.len(), 70);
        let orbits = symmetry_orbits(regular);
        assert_eq!(orbits.len(), 14);
        let unimodular: Vec<Triangulation> = regular
            .iter()
            .filter(|t| t.is_unimodular())
            .cloned()
            .collect();
        assert_eq!(unimodular.len(), 53);
        let mut sizes: Vec<usize> = symmetry_orbits(&unimodular)
            .iter()
            .map(|o| o.len())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 4, 4, 4, 4, 4, 8, 8, 8, 8]);
    }

    #[test]
    fn gkz_vectors_distinct() {
        let regular = enumerate_regular_triangulations();
        let mut vectors: Vec<[u32; 8]> =
            regular.iter().map(|t| gkz_vector(t).unwrap()).collect();
        for v in &vectors {
            assert_eq!(v.iter().sum::<u32>(), 28);
        }
        vectors.sort_unstable();
        vectors.dedup();
        assert_eq!(vectors.len(), 70);
    }

    #[test]
    fn table_rows_reproduce() {
        for (row, entry) in TABLE.iter().enumerate() {
            let t = table_triangulation(row);
            assert!(t.is_unimodular(), "row {} not unimodular", row + 1);
            assert_eq!(sr_ideal(t), entry.sr, "SR mismatch in row {}", row + 1);
            assert_eq!(
                gkz_vector(t).unwrap(),
                entry.gkz,
                "GKZ mismatch in row {}",
                row + 1
            );
            // Cross-check against the principal A-determinant.
            let w: [Rat; 8] = std::array::from_fn(|i| rat(entry.weights[i]));
            assert_eq!(gkz_from_weights(&w).unwrap(), entry.gkz);
            assert_eq!(unimodular_class(t), Some(row + 1));
        }
    }

    #[test]
    fn unimodular_orbit_sizes_match_table() {
        let regular = enumerate_regular_triangulations();
        let unimodular: Vec<Triangulation> = regular
            .iter()
            .filter(|t| t.is_unimodular())
            .cloned()
            .collect();
        for orbit in symmetry_orbits(&unimodular) {
            let class = unimodular_class(&unimodular[orbit[0]]).expect("classified");
            assert_eq!(orbit.len(), TABLE[class - 1].orbit_size);
            for &i in &orbit {
                assert_eq!(unimodular_class(&unimodular[i]), Some(class));
            }
        }
    }

    #[test]
    fn flat_weights_give_single_cell() {
        let w: [Rat; 8] = std::array::from_fn(|_| rat(0));
        let cells = regular_subdivision(&w);
        assert_eq!(cells, vec![(0..8).collect::<Vec<usize>>()]);
    }

    #[test]
    fn symmetry_group_order() {
        assert_eq!(symmetry_group().len(), 8);
    }

    #[test]
    fn toric_binomials_homogeneous_and_row8_initials() {
        let w0: [Rat; 8] = std::array::from_fn(|_| rat(0));
        let report = toric_ideal_check(&w0);
        assert!(report.homogeneous);
        assert!(report.initial.iter().all(|i| i.is_none()));
        let w: [Rat; 8] = std::array::from_fn(|i| rat(TABLE[7].weights[i]));
        let report = toric_ideal_check(&w);
        let mut initials: Vec<String> = report.initial.into_iter().map(|i| i.unwrap()).collect();
        initials.sort_unstable();
        assert_eq!(
            initials,
            vec!["ab", "ac", "ad", "ah", "bg", "cf", "eh", "fh"]
        );
    }

    #[test]
    fn secondary_cone_roundtrip() {
        // Witness heights reproduce their triangulation.
        let regular = enumerate_regular_triangulations();
        for t in regular.iter().step_by(7) {
            let w = regularity_witness(t).expect("regular");
            let w: [Rat; 8] = std::array::from_fn(|i| w[i].clone());
            let cells = regular_subdivision(&w);
            assert_eq!(subdivision_as_triangulation(&cells).as_ref(), Some(t));
            assert!(cone_contains_strictly(t, &w));
        }
        let zero: [Rat; 8] = std::array::from_fn(|_| rat(0));
        assert!(!cone_contains_strictly(table_triangulation(0), &zero));
    }

    #[test]
    fn trivial_sr_ideal() {
        assert!(minimal_non_faces(&[vec![0, 1, 2, 3]], 4).is_empty());
    }

    #[test]
    fn unimodular_iff_seven_cells() {
        for t in enumerate_regular_triangulations() {
            let all_unit = t.cells().iter().all(|c| simplex_volume(c) == 1);
            assert_eq!(all_unit, t.cells().len() == 7);
        }
    }
}
