//! p-adic tropicalization: tropical smoothness, distinctness of the 27
//! tropical lines, tree recovery from minor valuations, split statistics,
//! and arrangement-type classification.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::traits::Zero;

use crate::lines::{LineCensus, LineLabel};
use crate::moduli::ModuliVector;
use crate::octanomial::OctanomialCoefficients;
use crate::polytope::{
    cone_contains_strictly, regular_subdivision, subdivision_as_triangulation, unimodular_class,
    Triangulation,
};
use crate::rational::{rat, Rat};
use crate::valuation::{valuation, ExtVal, Prime};
use crate::{Error, Result};

/// Tropicalization of a line: the zero pattern of its Plucker vector and
/// the valuations of the nonzero coordinates, shifted so the minimum is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalLineSignature {
    pub zero_pattern: [bool; 6],
    pub vals: [ExtVal; 6],
}

impl TropicalLineSignature {
    pub fn new(p: &[Rat; 6], prime: Prime) -> TropicalLineSignature {
        let zero_pattern: [bool; 6] = std::array::from_fn(|i| p[i].is_zero());
        let raw: [ExtVal; 6] = std::array::from_fn(|i| valuation(&p[i], prime));
        let min = raw
            .iter()
            .filter_map(|v| v.finite())
            .min()
            .expect("a Plucker vector has a nonzero coordinate");
        let vals = raw.map(|v| match v {
            ExtVal::Finite(x) => ExtVal::Finite(x - min),
            ExtVal::Infinity => ExtVal::Infinity,
        });
        TropicalLineSignature { zero_pattern, vals }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitString {
    pub s2: u32,
    pub s3: u32,
    pub s4: u32,
    pub s5: u32,
}

impl SplitString {
    pub fn new(s2: u32, s3: u32, s4: u32, s5: u32) -> SplitString {
        SplitString { s2, s3, s4, s5 }
    }

    fn as_array(self) -> [u32; 4] {
        [self.s2, self.s3, self.s4, self.s5]
    }

    /// Coordinatewise comparison with the generic strings; a stable tree
    /// is a contraction of a generic one.
    pub fn is_contraction_of_generic(self) -> bool {
        const GENERIC: [[u32; 4]; 4] = [[4, 0, 2, 1], [2, 2, 2, 1], [4, 2, 0, 1], [4, 2, 1, 0]];
        let s = self.as_array();
        GENERIC
            .iter()
            .any(|g| s.iter().zip(g).all(|(a, b)| a <= b))
    }
}

impl fmt::Display for SplitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}{}{}{}]", self.s2, self.s3, self.s4, self.s5)
    }
}

/// A 10-leaf phylogenetic tree as a compatible split system; each split is
/// stored as the leaf-index side not containing leaf 0, with its Buneman
/// isolation index.
#[derive(Clone, Debug)]
pub struct PhyloTree {
    pub leaves: Vec<LineLabel>,
    pub splits: Vec<(BTreeSet<usize>, Rat)>,
}

impl PhyloTree {
    pub fn split_string(&self) -> SplitString {
        let mut s = [0u32; 4];
        for (side, _) in &self.splits {
            let m = side.len().min(self.leaves.len() - side.len());
            s[m - 2] += 1;
        }
        SplitString::new(s[0], s[1], s[2], s[3])
    }

    /// Newick serialization; internal edges carry their isolation indices.
    pub fn newick(&self) -> String {
        // The split sides form a laminar family; nest by containment.
        let n = self.leaves.len();
        let mut clusters: Vec<(BTreeSet<usize>, Rat)> = self.splits.clone();
        clusters.sort_by_key(|(s, _)| std::cmp::Reverse(s.len()));
        fn render(
            members: &BTreeSet<usize>,
            clusters: &[(BTreeSet<usize>, Rat)],
            leaves: &[LineLabel],
        ) -> String {
            // Maximal sub-clusters plus loose leaves.
            let mut parts = Vec::new();
            let mut used: BTreeSet<usize> = BTreeSet::new();
            for (i, (c, w)) in clusters.iter().enumerate() {
                if !c.is_subset(members) || c.len() == members.len() {
                    continue;
                }
                if clusters[..i]
                    .iter()
                    .any(|(d, _)| c.is_subset(d) && d.len() < members.len() && d.len() > c.len())
                {
                    continue;
                }
                parts.push(format!(
                    "{}:{}",
                    render(c, clusters, leaves),
                    crate::rational::rat_string(w)
                ));
                used.extend(c.iter().copied());
            }
            for &m in members {
                if !used.contains(&m) {
                    parts.push(leaves[m].to_string());
                }
            }
            format!("({})", parts.join(","))
        }
        let all: BTreeSet<usize> = (0..n).collect();
        format!("{};", render(&all, &clusters, &self.leaves))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TropicalSmoothness {
    Class(usize),
    NotUnimodular,
    Boundary,
}

impl TropicalSmoothness {
    pub fn class(self) -> Option<usize> {
        match self {
            TropicalSmoothness::Class(c) => Some(c),
            _ => None,
        }
    }
}

/// Coefficient valuations as rational heights, when all are finite.
pub fn coefficient_heights(c: &OctanomialCoefficients, p: Prime) -> Option<[Rat; 8]> {
    let mut out: [Rat; 8] = std::array::from_fn(|_| Rat::zero());
    for i in 0..8 {
        out[i] = rat(valuation(&c.c[i], p).finite()?);
    }
    Some(out)
}

/// The symmetry class (1..10) of the triangulation induced by the
/// coefficient valuations, when it is unimodular.
pub fn tropical_smoothness(c: &OctanomialCoefficients, p: Prime) -> TropicalSmoothness {
    let Some(w) = coefficient_heights(c, p) else {
        return TropicalSmoothness::Boundary;
    };
    let cells = regular_subdivision(&w);
    match subdivision_as_triangulation(&cells) {
        Some(t) => match unimodular_class(&t) {
            Some(class) => TropicalSmoothness::Class(class),
            None => TropicalSmoothness::NotUnimodular,
        },
        None => TropicalSmoothness::NotUnimodular,
    }
}

/// True iff the 27 tropical lines are pairwise distinct; a colliding pair
/// is returned otherwise.
pub fn distinct_tropical_lines(
    census: &LineCensus,
    p: Prime,
) -> (bool, Option<(LineLabel, LineLabel)>) {
    let sigs: Vec<TropicalLineSignature> = census
        .lines
        .iter()
        .map(|l| TropicalLineSignature::new(&l.p, p))
        .collect();
    for i in 0..sigs.len() {
        for j in i + 1..sigs.len() {
            if sigs[i] == sigs[j] {
                return (false, Some((census.lines[i].label, census.lines[j].label)));
            }
        }
    }
    (true, None)
}

/// Valuations of the 45 maximal 2x2 minors of the projected 2x10 matrix of
/// intersection points on a line, using the given Plucker axis pair.
pub fn tree_metric_with_axis(
    idx: usize,
    census: &LineCensus,
    p: Prime,
    axis: (usize, usize),
) -> Result<Vec<ExtVal>> {
    let points = census.points_on_line(idx);
    if points.len() != 10 {
        return Err(Error::Tree(format!(
            "line {} carries {} points, expected 10",
            census.lines[idx].label,
            points.len()
        )));
    }
    let cols: Vec<(Rat, Rat)> = points
        .iter()
        .map(|(_, pt)| (pt.coords()[axis.0].clone(), pt.coords()[axis.1].clone()))
        .collect();
    let mut out = Vec::with_capacity(45);
    for u in 0..10 {
        for v in u + 1..10 {
            let minor = &cols[u].0 * &cols[v].1 - &cols[u].1 * &cols[v].0;
            if minor.is_zero() {
                // Two intersection points coincide (an Eckardt point);
                // the tree metric is undefined for this surface.
                return Err(Error::Input(format!(
                    "coincident intersection points on {}: tree metric undefined",
                    census.lines[idx].label
                )));
            }
            out.push(valuation(&minor, p));
        }
    }
    Ok(out)
}

const PLUCKER_AXES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The first valid projection axis: a pair whose Plucker coordinate is
/// nonzero, so the projection is injective on the line.
pub fn projection_axis(census: &LineCensus, idx: usize) -> Result<(usize, usize)> {
    let p = &census.lines[idx].p;
    (0..6)
        .find(|&k| !p[k].is_zero())
        .map(|k| PLUCKER_AXES[k])
        .ok_or_else(|| Error::Tree("zero Plucker vector".into()))
}

pub fn tree_metric(idx: usize, census: &LineCensus, p: Prime) -> Result<Vec<ExtVal>> {
    tree_metric_with_axis(idx, census, p, projection_axis(census, idx)?)
}

fn pair_index(n: usize, mut u: usize, mut v: usize) -> usize {
    if u > v {
        std::mem::swap(&mut u, &mut v);
    }
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Quartet resolution: Some(pairing) if the valuation sum of that pairing
/// is the strict maximum (the other two being the tied minimum), None for
/// a star quartet. Errors when the four-point condition fails.
fn quartet_resolution(metric: &[ExtVal], n: usize, q: [usize; 4]) -> Result<Option<usize>> {
    let val = |u: usize, v: usize| -> Result<i64> {
        metric[pair_index(n, u, v)]
            .finite()
            .ok_or_else(|| Error::Tree("infinite minor valuation".into()))
    };
    let [i, j, k, l] = q;
    let sums = [
        val(i, j)? + val(k, l)?,
        val(i, k)? + val(j, l)?,
        val(i, l)? + val(j, k)?,
    ];
    let min = *sums.iter().min().unwrap();
    if sums.iter().filter(|&&s| s == min).count() < 2 {
        return Err(Error::Tree(format!(
            "four-point condition fails on quartet {q:?}: {sums:?}"
        )));
    }
    let max = *sums.iter().max().unwrap();
    if max == min {
        return Ok(None);
    }
    Ok(Some(sums.iter().position(|&s| s == max).unwrap()))
}

/// Recovers the tree by exhaustive split testing over all 501 bipartitions.
pub fn recover_tree(metric: &[ExtVal], leaves: Vec<LineLabel>) -> Result<PhyloTree> {
    let n = leaves.len();
    if metric.len() != n * (n - 1) / 2 {
        return Err(Error::Tree("metric length mismatch".into()));
    }
    // Resolution of every quartet, keyed by the sorted quartet.
    let mut resolution: BTreeMap<[usize; 4], Option<usize>> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    resolution.insert([i, j, k, l], quartet_resolution(metric, n, [i, j, k, l])?);
                }
            }
        }
    }
    // Which pairing of the sorted quartet puts {a, b} together.
    let pairing_of = |q: [usize; 4], a: usize, b: usize| -> usize {
        let (x, y) = (a.min(b), a.max(b));
        if (x, y) == (q[0], q[1]) || (x, y) == (q[2], q[3]) {
            0
        } else if (x, y) == (q[0], q[2]) || (x, y) == (q[1], q[3]) {
            1
        } else {
            2
        }
    };
    let val = |u: usize, v: usize| metric[pair_index(n, u, v)].finite().unwrap();
    let mut splits: Vec<(BTreeSet<usize>, Rat)> = Vec::new();
    // Bipartitions: the side not containing leaf 0, of size 2..=n-2.
    for mask in 0u32..(1 << (n - 1)) {
        let side: BTreeSet<usize> = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        if side.len() < 2 || side.len() > n - 2 {
            continue;
        }
        let other: Vec<usize> = (0..n).filter(|i| !side.contains(i)).collect();
        let side_v: Vec<usize> = side.iter().copied().collect();
        let mut ok = true;
        let mut isolation: Option<i64> = None;
        'outer: for a in 0..side_v.len() {
            for b in a + 1..side_v.len() {
                for c in 0..other.len() {
                    for e in c + 1..other.len() {
                        let (i, j, k, l) = (side_v[a], side_v[b], other[c], other[e]);
                        let mut q = [i, j, k, l];
                        q.sort_unstable();
                        if resolution[&q] != Some(pairing_of(q, i, j)) {
                            ok = false;
                            break 'outer;
                        }
                        // Isolation index: same-side sum minus the tied
                        // cross sums, minimized over quartets.
                        let s_same = val(i, j) + val(k, l);
                        let s_cross = val(i, k) + val(j, l);
                        let gap = s_same - s_cross;
                        isolation = Some(isolation.map_or(gap, |m| m.min(gap)));
                    }
                }
            }
        }
        if ok {
            splits.push((side, rat(isolation.expect("nonempty quartet set"))));
        }
    }
    // Tree property: the unanimous splits are pairwise compatible.
    for (i, (s1, _)) in splits.iter().enumerate() {
        for (s2, _) in &splits[i + 1..] {
            let disjoint = s1.is_disjoint(s2);
            let nested = s1.is_subset(s2) || s2.is_subset(s1);
            if !disjoint && !nested {
                return Err(Error::Tree("incompatible split system".into()));
            }
        }
    }
    if splits.len() > n - 3 {
        return Err(Error::Tree(format!(
            "{} splits exceed the tree bound",
            splits.len()
        )));
    }
    Ok(PhyloTree { leaves, splits })
}

pub fn tree_for_line(idx: usize, census: &LineCensus, p: Prime) -> Result<PhyloTree> {
    let metric = tree_metric(idx, census, p)?;
    let leaves: Vec<LineLabel> = census
        .points_on_line(idx)
        .into_iter()
        .map(|(l, _)| l)
        .collect();
    recover_tree(&metric, leaves)
}

/// The multiset of the 27 split strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementStatistic {
    pub counts: BTreeMap<SplitString, usize>,
}

impl ArrangementStatistic {
    pub fn from_strings(strings: impl IntoIterator<Item = SplitString>) -> ArrangementStatistic {
        let mut counts = BTreeMap::new();
        for s in strings {
            *counts.entry(s).or_insert(0) += 1;
        }
        ArrangementStatistic { counts }
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

impl fmt::Display for ArrangementStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(s, u)| format!("{s}^{u}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn arrangement_trees(census: &LineCensus, p: Prime) -> Result<Vec<PhyloTree>> {
    (0..27).map(|i| tree_for_line(i, census, p)).collect()
}

/// Full pipeline: census, 27 metrics, 27 trees, 27 strings.
pub fn arrangement_statistic(d: &ModuliVector, p: Prime) -> Result<ArrangementStatistic> {
    let census = crate::lines::full_census(d)?;
    let trees = arrangement_trees(&census, p)?;
    Ok(ArrangementStatistic::from_strings(
        trees.iter().map(|t| t.split_string()),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrangementType {
    Aaaa,
    Aaab,
    Aab,
    Aaa,
    OtherStable,
    NonStableUnknown,
}

impl fmt::Display for ArrangementType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ArrangementType::Aaaa => "(aaaa)",
            ArrangementType::Aaab => "(aaab)",
            ArrangementType::Aab => "(aab)",
            ArrangementType::Aaa => "(aaa)",
            ArrangementType::OtherStable => "other-stable",
            ArrangementType::NonStableUnknown => "non-stable-unknown",
        };
        f.write_str(s)
    }
}

fn statistic_of(entries: &[(SplitString, usize)]) -> ArrangementStatistic {
    ArrangementStatistic {
        counts: entries.iter().cloned().collect(),
    }
}

/// Classification against the printed statistics, with the contraction
/// criterion deciding stability for everything else.
pub fn classify_arrangement(s: &ArrangementStatistic) -> ArrangementType {
    let ss = |a, b, c, d| SplitString::new(a, b, c, d);
    let known: [(ArrangementType, ArrangementStatistic); 4] = [
        (
            ArrangementType::Aaaa,
            statistic_of(&[(ss(4, 0, 2, 1), 24), (ss(4, 0, 2, 0), 3)]),
        ),
        (
            ArrangementType::Aaab,
            statistic_of(&[(ss(2, 2, 2, 1), 12), (ss(4, 2, 0, 1), 12), (ss(4, 2, 1, 0), 3)]),
        ),
        (
            ArrangementType::Aab,
            statistic_of(&[
                (ss(2, 2, 1, 0), 1),
                (ss(2, 2, 2, 0), 4),
                (ss(2, 2, 2, 1), 8),
                (ss(4, 2, 0, 1), 12),
                (ss(4, 2, 1, 0), 2),
            ]),
        ),
        (
            ArrangementType::Aaa,
            statistic_of(&[(ss(2, 0, 2, 0), 1), (ss(4, 0, 2, 0), 6), (ss(4, 0, 2, 1), 20)]),
        ),
    ];
    for (tag, stat) in &known {
        if s == stat {
            return *tag;
        }
    }
    let stable = s
        .counts
        .keys()
        .all(|string| string.is_contraction_of_generic());
    if stable {
        ArrangementType::OtherStable
    } else {
        ArrangementType::NonStableUnknown
    }
}

/// True iff the valuation vector lies strictly inside the secondary cone.
pub fn cone_inequalities(t: &Triangulation, vals: &[ExtVal; 8]) -> bool {
    let mut w: [Rat; 8] = std::array::from_fn(|_| Rat::zero());
    for i in 0..8 {
        match vals[i].finite() {
            Some(v) => w[i] = rat(v),
            None => return false,
        }
    }
    cone_contains_strictly(t, &w)
}

/// Theorem 3.2 mechanism: the minimum valuation over the 49 terms of the
/// A-discriminant is attained by a unique term, and the evaluated
/// discriminant has exactly that valuation.
pub fn initial_form_is_monomial(c: &OctanomialCoefficients, p: Prime) -> bool {
    let delta = crate::discriminant::a_discriminant();
    let mut best: Option<ExtVal> = None;
    let mut unique = false;
    for (exps, coeff) in delta.terms_grlex() {
        let mut v = valuation(&coeff, p);
        for (e, cv) in exps.iter().zip(&c.c) {
            for _ in 0..*e {
                v = v.add(valuation(cv, p));
            }
        }
        match best {
            None => {
                best = Some(v);
                unique = true;
            }
            Some(b) => {
                if v < b {
                    best = Some(v);
                    unique = true;
                } else if v == b {
                    unique = false;
                }
            }
        }
    }
    let Some(min) = best else { return false };
    unique && valuation(&crate::discriminant::eval_a_discriminant(c), p) == min
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lines::full_census;
    use crate::octanomial::coefficients_from_moduli;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    /// Polynomial-in-p moduli from (coefficient, exponent) lists.
    pub(crate) fn poly_in_p(p: i64, terms: &[(i64, u32)]) -> i64 {
        terms.iter().map(|&(c, e)| c * p.pow(e)).sum()
    }

    fn aaaa_vector_1() -> ModuliVector {
        let p = 5;
        ModuliVector::from_ints([
            poly_in_p(p, &[(2, 0), (1, 5), (-1, 7), (-1, 9)]),
            poly_in_p(p, &[(-1, 3), (1, 9)]),
            poly_in_p(p, &[(-1, 0), (1, 7)]),
            poly_in_p(p, &[(-1, 3), (-1, 7), (1, 9), (1, 11)]),
            poly_in_p(p, &[(-1, 0), (1, 9)]),
            poly_in_p(p, &[(1, 0), (1, 3), (-1, 9)]),
        ])
        .unwrap()
    }

    #[test]
    fn aaaa_pipeline() {
        let m = aaaa_vector_1();
        let c = coefficients_from_moduli(&m);
        assert_eq!(tropical_smoothness(&c, p5()), TropicalSmoothness::Class(1));
        let census = full_census(&m).unwrap();
        let (distinct, witness) = distinct_tropical_lines(&census, p5());
        assert!(distinct, "collision: {witness:?}");
        let stat = arrangement_statistic(&m, p5()).unwrap();
        assert_eq!(stat.total(), 27);
        assert_eq!(
            stat,
            ArrangementStatistic::from_strings(
                std::iter::repeat(SplitString::new(4, 0, 2, 1))
                    .take(24)
                    .chain(std::iter::repeat(SplitString::new(4, 0, 2, 0)).take(3))
            )
        );
        assert_eq!(classify_arrangement(&stat), ArrangementType::Aaaa);
        assert!(initial_form_is_monomial(&c, p5()));
    }

    #[test]
    fn projection_invariance() {
        let m = aaaa_vector_1();
        let census = full_census(&m).unwrap();
        // A line with at least two nonzero Plucker coordinates.
        let idx = 0;
        let nonzero: Vec<usize> = (0..6)
            .filter(|&k| !census.lines[idx].p[k].is_zero())
            .collect();
        assert!(nonzero.len() >= 2);
        let leaves: Vec<LineLabel> = census
            .points_on_line(idx)
            .into_iter()
            .map(|(l, _)| l)
            .collect();
        let m1 = tree_metric_with_axis(idx, &census, p5(), PLUCKER_AXES[nonzero[0]]).unwrap();
        let m2 = tree_metric_with_axis(idx, &census, p5(), PLUCKER_AXES[nonzero[1]]).unwrap();
        let t1 = recover_tree(&m1, leaves.clone()).unwrap();
        let t2 = recover_tree(&m2, leaves).unwrap();
        let sides = |t: &PhyloTree| t.splits.iter().map(|(s, _)| s.clone()).collect::<Vec<_>>();
        assert_eq!(sides(&t1), sides(&t2));
    }

    #[test]
    fn star_metric_has_no_splits() {
        let metric = vec![ExtVal::Finite(1); 45];
        let labels: Vec<LineLabel> = (1..=6)
            .map(LineLabel::E)
            .chain((1..=4).map(LineLabel::G))
            .collect();
        let t = recover_tree(&metric, labels).unwrap();
        assert!(t.splits.is_empty());
        assert_eq!(t.split_string(), SplitString::new(0, 0, 0, 0));
    }

    #[test]
    fn caterpillar_metric_recovers_splits() {
        // Caterpillar 0-1-...-9: leaf i hangs off spine node min(max(i,1),8),
        // every spine edge has length 2. Valuations v = -d/2.
        let pos = |i: usize| i.clamp(1, 8) as i64;
        let mut metric = Vec::new();
        for i in 0..10 {
            for j in i + 1..10 {
                let d = 2 * (pos(j) - pos(i)).abs() + 2;
                metric.push(ExtVal::Finite(-d));
            }
        }
        let labels: Vec<LineLabel> = (1..=6)
            .map(LineLabel::E)
            .chain((1..=4).map(LineLabel::G))
            .collect();
        let t = recover_tree(&metric, labels).unwrap();
        // 7 internal edges; min-side sizes 2,3,4,5,4,3,2.
        assert_eq!(t.splits.len(), 7);
        assert_eq!(t.split_string(), SplitString::new(2, 2, 2, 1));
        for (_, w) in &t.splits {
            assert!(w > &rat(0));
        }
        let nw = t.newick();
        assert!(nw.ends_with(';'));
    }

    #[test]
    fn classification_table() {
        let ss = |a, b, c, d| SplitString::new(a, b, c, d);
        let aaa = statistic_of(&[(ss(2, 0, 2, 0), 1), (ss(4, 0, 2, 0), 6), (ss(4, 0, 2, 1), 20)]);
        assert_eq!(classify_arrangement(&aaa), ArrangementType::Aaa);
        let with_5020 = statistic_of(&[(ss(5, 0, 2, 0), 1), (ss(4, 0, 2, 1), 26)]);
        assert_eq!(
            classify_arrangement(&with_5020),
            ArrangementType::NonStableUnknown
        );
        let with_3220 = statistic_of(&[(ss(3, 2, 2, 0), 27)]);
        assert_eq!(
            classify_arrangement(&with_3220),
            ArrangementType::NonStableUnknown
        );
        let contracted = statistic_of(&[(ss(2, 0, 0, 0), 27)]);
        assert_eq!(classify_arrangement(&contracted), ArrangementType::OtherStable);
    }

    #[test]
    fn boundary_and_unit_coefficients() {
        let mut c = coefficients_from_moduli(&aaaa_vector_1());
        c.c[0] = Rat::zero();
        assert_eq!(tropical_smoothness(&c, p5()), TropicalSmoothness::Boundary);
        let units = OctanomialCoefficients {
            c: [1, 2, 3, 4, 6, 7, 8, 9].map(rat),
        };
        assert_eq!(
            tropical_smoothness(&units, p5()),
            TropicalSmoothness::NotUnimodular
        );
    }

    #[test]
    fn cone_membership_consistency() {
        let m = aaaa_vector_1();
        let c = coefficients_from_moduli(&m);
        let vals: [ExtVal; 8] = std::array::from_fn(|i| valuation(&c.c[i], p5()));
        let t = crate::polytope::table_triangulation(0);
        assert!(cone_inequalities(t, &vals));
        let zero = [ExtVal::Finite(0); 8];
        assert!(!cone_inequalities(t, &zero));
    }
}
