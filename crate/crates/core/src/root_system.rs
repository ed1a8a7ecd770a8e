//! Exact simple root systems: Cartan matrices, positive roots, coroots,
//! Weyl reflections, longest elements and inversion sets.
//!
//! Everything is integer arithmetic in simple-root coordinates. A root is a
//! coefficient vector over the simple roots; the coroot of every generated
//! root is carried alongside it in simple-coroot coordinates, so the pairing
//! `<a, b^v>` is an integer bilinear form through the Cartan matrix. Weights
//! live in fundamental-weight coordinates with exact rational entries.
//!
//! Simple roots are numbered 1-based in the Bourbaki convention throughout
//! the public interface.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rat;

/// Simple type families handled by this crate (G2/F4/E8 never carry an
/// abelian nilradical, so they are not constructed here).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            other => Err(Error::InvalidInput(format!(
                "unknown type family {other:?}; expected one of A, B, C, D, E"
            ))),
        }
    }
}

/// A validated Cartan type such as `E7` or `C4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    /// Rank bounds: `A >= 1`, `B >= 2`, `C >= 2`, `D >= 3`, `E in {6, 7}`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => rank == 6 || rank == 7,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidInput(format!(
                "rank {rank} is out of range for family {}",
                family.letter()
            )))
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Number of positive roots, by the classical count.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E if n == 6 => 36,
            Family::E => 63,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A root in simple-root coordinates. All coefficients share one sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn coefficient(&self, node: usize) -> i64 {
        self.coords[node - 1]
    }

    /// Sum of simple-root coefficients (negative for negative roots).
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded-lexicographic: by height, then by coordinates.
impl Ord for Root {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.height(), &self.coords).cmp(&(other.height(), &other.coords))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Weight {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Weight {
        Weight {
            coords: vec![Rat::from_integer(0); rank],
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn negated(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scaled(&self, by: Rat) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * by).collect(),
        }
    }

    pub fn plus(&self, other: &Weight) -> Weight {
        assert_eq!(self.coords.len(), other.coords.len(), "rank mismatch");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// A Weyl group element stored as a word in simple reflections (1-based
/// indices, not necessarily reduced). Applying the element means applying
/// the reflections left to right: `w(x) = s_{last}(... s_{first}(x) ...)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> WeylElement {
        WeylElement { word: Vec::new() }
    }

    pub fn from_word(word: Vec<usize>) -> WeylElement {
        WeylElement { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Composition `self` then `other`: `(self.then(other))(x) = other(self(x))`.
    pub fn then(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement { word }
    }
}

/// A simple root system with precomputed positive roots and coroots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    /// `cartan[i][j] = <alpha_{i+1}, alpha_{j+1}^v>` (0-based storage).
    cartan: Vec<Vec<i64>>,
    /// Positive roots sorted by (height, coordinates).
    positive_roots: Vec<Root>,
    /// Coroot coordinates of `positive_roots[k]` in the simple-coroot basis.
    coroot_coords: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bonds: Vec<(usize, usize)> = Vec::new();
    match t.family() {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                bonds.push((i, i + 1));
            }
        }
        Family::D => {
            for i in 0..n.saturating_sub(3) {
                bonds.push((i, i + 1));
            }
            bonds.push((n - 3, n - 2));
            bonds.push((n - 3, n - 1));
        }
        Family::E => {
            bonds.push((0, 2));
            bonds.push((2, 3));
            bonds.push((3, 4));
            bonds.push((1, 3));
            bonds.push((4, 5));
            if n == 7 {
                bonds.push((5, 6));
            }
        }
    }
    for (i, j) in bonds {
        c[i][j] = -1;
        c[j][i] = -1;
    }
    // Double bonds: the short simple root sits at the tail of B, the long
    // one at the tail of C.
    match t.family() {
        Family::B => c[n - 2][n - 1] = -2,
        Family::C => c[n - 1][n - 2] = -2,
        _ => {}
    }
    c
}

/// Builds the full positive system by reflection closure from the simple
/// roots, with a deterministic (height, coordinates) ordering.
pub fn build_root_system(t: CartanType) -> RootSystem {
    let n = t.rank();
    let cartan = cartan_matrix(t);

    let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
    for i in 0..n {
        let mut root = vec![0i64; n];
        let mut coroot = vec![0i64; n];
        root[i] = 1;
        coroot[i] = 1;
        seen.insert(root.clone(), coroot.clone());
        queue.push_back((root, coroot));
    }
    while let Some((root, coroot)) = queue.pop_front() {
        for k in 0..n {
            // s_k on root coordinates uses column k of the Cartan matrix,
            // on coroot coordinates row k.
            let pair_root: i64 = (0..n).map(|j| root[j] * cartan[j][k]).sum();
            let pair_coroot: i64 = (0..n).map(|j| cartan[k][j] * coroot[j]).sum();
            let mut new_root = root.clone();
            let mut new_coroot = coroot.clone();
            new_root[k] -= pair_root;
            new_coroot[k] -= pair_coroot;
            if new_root.iter().all(|&c| c >= 0) && !seen.contains_key(&new_root) {
                seen.insert(new_root.clone(), new_coroot.clone());
                queue.push_back((new_root, new_coroot));
            }
        }
    }

    let mut pairs: Vec<(Root, Vec<i64>)> = seen
        .into_iter()
        .map(|(coords, coroot)| (Root { coords }, coroot))
        .collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    assert_eq!(
        pairs.len(),
        t.positive_root_count(),
        "reflection closure of {t} produced the wrong number of positive roots"
    );

    let mut positive_roots = Vec::with_capacity(pairs.len());
    let mut coroot_coords = Vec::with_capacity(pairs.len());
    let mut index = HashMap::with_capacity(pairs.len());
    for (k, (root, coroot)) in pairs.into_iter().enumerate() {
        index.insert(root.coords.clone(), k);
        positive_roots.push(root);
        coroot_coords.push(coroot);
    }

    RootSystem {
        cartan_type: t,
        cartan,
        positive_roots,
        coroot_coords,
        index,
    }
}

impl RootSystem {
    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// `<alpha_i, alpha_j^v>` for simple roots, 1-based.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_root(&self, node: usize) -> Root {
        assert!(
            node >= 1 && node <= self.rank(),
            "simple index {node} out of range"
        );
        let mut coords = vec![0i64; self.rank()];
        coords[node - 1] = 1;
        Root { coords }
    }

    /// Membership test for arbitrary coordinate vectors (either sign).
    pub fn is_root(&self, coords: &[i64]) -> bool {
        if coords.iter().all(|&c| c >= 0) {
            self.index.contains_key(coords)
        } else if coords.iter().all(|&c| c <= 0) {
            let neg: Vec<i64> = coords.iter().map(|&c| -c).collect();
            self.index.contains_key(&neg)
        } else {
            false
        }
    }

    /// Validated construction of a root from raw coordinates.
    pub fn root_from_coords(&self, coords: Vec<i64>) -> Result<Root> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidInput(format!(
                "coordinate vector of length {} in a rank-{} system",
                coords.len(),
                self.rank()
            )));
        }
        if self.is_root(&coords) {
            Ok(Root { coords })
        } else {
            Err(Error::InvalidInput(format!(
                "({}) is not a root of {}",
                coords
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                self.cartan_type
            )))
        }
    }

    /// Coroot coordinates of a root (simple-coroot basis).
    pub fn coroot(&self, root: &Root) -> Vec<i64> {
        if root.is_positive() {
            let k = *self
                .index
                .get(&root.coords)
                .unwrap_or_else(|| panic!("{root} is not a root of {}", self.cartan_type));
            self.coroot_coords[k].clone()
        } else {
            let neg = root.negated();
            let k = *self
                .index
                .get(&neg.coords)
                .unwrap_or_else(|| panic!("{root} is not a root of {}", self.cartan_type));
            self.coroot_coords[k].iter().map(|&c| -c).collect()
        }
    }

    /// `<a, b^v>`, exact integer.
    pub fn pairing_roots(&self, a: &Root, b: &Root) -> i64 {
        assert_eq!(a.coords.len(), self.rank(), "rank mismatch");
        let bv = self.coroot(b);
        let n = self.rank();
        let mut total = 0;
        for i in 0..n {
            if a.coords[i] == 0 {
                continue;
            }
            for j in 0..n {
                total += a.coords[i] * self.cartan[i][j] * bv[j];
            }
        }
        total
    }

    /// `<w, b^v>` for a weight in fundamental coordinates, exact rational.
    pub fn pairing_weight(&self, w: &Weight, b: &Root) -> Rat {
        assert_eq!(w.coords.len(), self.rank(), "rank mismatch");
        let bv = self.coroot(b);
        w.coords
            .iter()
            .zip(&bv)
            .map(|(c, &n)| c * Rat::from_integer(n))
            .sum()
    }

    /// The fundamental weight dual to `alpha_node^v`.
    pub fn fundamental_weight(&self, node: usize) -> Weight {
        assert!(
            node >= 1 && node <= self.rank(),
            "simple index {node} out of range"
        );
        let mut coords = vec![Rat::from_integer(0); self.rank()];
        coords[node - 1] = Rat::from_integer(1);
        Weight { coords }
    }

    /// Half-sum of the positive roots supported on a set of simple nodes,
    /// expressed in fundamental-weight coordinates.
    pub fn half_sum_of_positive_roots(&self, nodes: &BTreeSet<usize>) -> Weight {
        let n = self.rank();
        let mut twice = vec![0i64; n];
        // <gamma, alpha_i^v> summed over the chosen positive roots gives
        // twice the fundamental coordinates of the half-sum.
        for root in self.roots_supported_on(nodes) {
            for i in 0..n {
                let mut p = 0;
                for (j, &g) in root.coords.iter().enumerate() {
                    p += g * self.cartan[j][i];
                }
                twice[i] += p;
            }
        }
        Weight {
            coords: twice.iter().map(|&t| Rat::new(t, 2)).collect(),
        }
    }

    /// Positive roots all of whose support lies in `nodes`.
    pub fn roots_supported_on(&self, nodes: &BTreeSet<usize>) -> Vec<Root> {
        self.positive_roots
            .iter()
            .filter(|r| {
                r.coords
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || nodes.contains(&(i + 1)))
            })
            .cloned()
            .collect()
    }

    pub fn simple_reflection_root(&self, k: usize, root: &Root) -> Root {
        let n = self.rank();
        assert!(k >= 1 && k <= n, "simple index {k} out of range");
        let pair: i64 = (0..n).map(|j| root.coords[j] * self.cartan[j][k - 1]).sum();
        let mut coords = root.coords.clone();
        coords[k - 1] -= pair;
        Root { coords }
    }

    pub fn simple_reflection_weight(&self, k: usize, w: &Weight) -> Weight {
        let n = self.rank();
        assert!(k >= 1 && k <= n, "simple index {k} out of range");
        let ck = w.coords[k - 1];
        let mut coords = w.coords.clone();
        for j in 0..n {
            coords[j] -= ck * Rat::from_integer(self.cartan[k - 1][j]);
        }
        Weight { coords }
    }

    pub fn apply_to_root(&self, w: &WeylElement, root: &Root) -> Root {
        let mut current = root.clone();
        for &k in &w.word {
            current = self.simple_reflection_root(k, &current);
        }
        current
    }

    pub fn apply_to_weight(&self, w: &WeylElement, weight: &Weight) -> Weight {
        let mut current = weight.clone();
        for &k in &w.word {
            current = self.simple_reflection_weight(k, &current);
        }
        current
    }

    /// The unique root maximal in the dominance order.
    pub fn highest_root(&self) -> &Root {
        let beta = self
            .positive_roots
            .last()
            .expect("a simple root system has positive roots");
        // Dominance cross-check against every simple coroot.
        for j in 1..=self.rank() {
            debug_assert!(self.pairing_roots(beta, &self.simple_root(j)) >= 0);
        }
        beta
    }

    /// Longest element of the parabolic Weyl subgroup generated by the given
    /// simple reflections (the full set yields the longest element of the
    /// whole group). Greedy descent, lowest simple index first; the returned
    /// word is reduced.
    pub fn longest_element(&self, nodes: &BTreeSet<usize>) -> WeylElement {
        let n = self.rank();
        for &i in nodes {
            assert!(i >= 1 && i <= n, "simple index {i} out of range");
        }
        // Start from the subsystem's regular dominant weight and reflect
        // down to the antidominant chamber.
        let mut v = vec![0i64; n];
        for &i in nodes {
            v[i - 1] = 1;
        }
        let mut word = Vec::new();
        while let Some(&i) = nodes.iter().find(|&&i| v[i - 1] > 0) {
            let ci = v[i - 1];
            for (j, vj) in v.iter_mut().enumerate() {
                *vj -= ci * self.cartan[i - 1][j];
            }
            word.push(i);
        }
        let expected = self.roots_supported_on(nodes).len();
        assert_eq!(
            word.len(),
            expected,
            "longest-element descent terminated at the wrong length"
        );
        WeylElement { word }
    }

    pub fn longest_element_full(&self) -> WeylElement {
        self.longest_element(&(1..=self.rank()).collect())
    }

    /// `w0 = w_G w_M` for the maximal parabolic at `node`: the longest
    /// element of the Levi applied first, then the longest element of the
    /// whole group. Its inversion set is exactly the nilradical root set.
    pub fn relative_longest_element(&self, node: usize) -> WeylElement {
        let levi: BTreeSet<usize> = (1..=self.rank()).filter(|&i| i != node).collect();
        self.longest_element(&levi)
            .then(&self.longest_element_full())
    }

    /// Positive roots sent negative by `w`, in canonical root order.
    pub fn inversion_set(&self, w: &WeylElement) -> Vec<Root> {
        self.positive_roots
            .iter()
            .filter(|r| !self.apply_to_root(w, r).is_positive())
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn rs(family: Family, rank: usize) -> RootSystem {
        build_root_system(CartanType::new(family, rank).unwrap())
    }

    #[test]
    fn rank_bounds_are_enforced() {
        assert!(CartanType::new(Family::A, 0).is_err());
        assert!(CartanType::new(Family::B, 1).is_err());
        assert!(CartanType::new(Family::D, 2).is_err());
        assert!(CartanType::new(Family::E, 8).is_err());
        assert!(CartanType::new(Family::E, 6).is_ok());
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(rs(Family::A, 1).positive_roots().len(), 1);
        assert_eq!(rs(Family::A, 3).positive_roots().len(), 6);
        assert_eq!(rs(Family::B, 3).positive_roots().len(), 9);
        assert_eq!(rs(Family::C, 4).positive_roots().len(), 16);
        assert_eq!(rs(Family::D, 4).positive_roots().len(), 12);
        assert_eq!(rs(Family::E, 6).positive_roots().len(), 36);
        assert_eq!(rs(Family::E, 7).positive_roots().len(), 63);
    }

    #[test]
    fn closure_under_simple_reflections() {
        for system in [
            rs(Family::B, 3),
            rs(Family::C, 3),
            rs(Family::D, 4),
            rs(Family::E, 6),
        ] {
            for root in system.positive_roots() {
                for k in 1..=system.rank() {
                    let image = system.simple_reflection_root(k, root);
                    assert!(
                        system.is_root(image.coords()),
                        "s_{k}({root}) left the root set"
                    );
                }
            }
        }
    }

    #[test]
    fn height_one_roots_are_the_simple_roots() {
        for system in [rs(Family::A, 4), rs(Family::B, 4), rs(Family::E, 6)] {
            let mut simple: Vec<Root> = system
                .positive_roots()
                .iter()
                .filter(|r| r.height() == 1)
                .cloned()
                .collect();
            let mut expected: Vec<Root> =
                (1..=system.rank()).map(|i| system.simple_root(i)).collect();
            simple.sort();
            expected.sort();
            assert_eq!(simple, expected);
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs(Family::A, 3).highest_root().coords(), &[1, 1, 1]);
        assert_eq!(rs(Family::C, 2).highest_root().coords(), &[2, 1]);
        assert_eq!(rs(Family::B, 3).highest_root().coords(), &[1, 2, 2]);
        assert_eq!(rs(Family::D, 4).highest_root().coords(), &[1, 2, 1, 1]);
        // The adjoint node of E7 carries coefficient 1 in the highest root.
        let e7 = rs(Family::E, 7);
        assert_eq!(e7.highest_root().coords(), &[2, 2, 3, 4, 3, 2, 1]);
    }

    #[test]
    fn pairings() {
        let a3 = rs(Family::A, 3);
        for j in 1..=3 {
            assert_eq!(
                a3.pairing_weight(&a3.fundamental_weight(j), &a3.simple_root(j)),
                rat(1)
            );
        }
        let theta = a3.root_from_coords(vec![1, 1, 1]).unwrap();
        assert_eq!(a3.pairing_weight(&a3.fundamental_weight(2), &theta), rat(1));
        // <a, a^v> = 2 for every root, long or short.
        for system in [rs(Family::B, 3), rs(Family::C, 3), rs(Family::E, 6)] {
            for root in system.positive_roots() {
                assert_eq!(system.pairing_roots(root, root), 2);
            }
        }
    }

    #[test]
    fn longest_element_lengths() {
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.longest_element_full().word(), &[1]);

        let a3 = rs(Family::A, 3);
        assert_eq!(a3.longest_element_full().len(), 6);
        assert_eq!(a3.longest_element(&BTreeSet::from([1, 3])).len(), 2);
        assert_eq!(rs(Family::E, 7).longest_element_full().len(), 63);
    }

    #[test]
    fn inversion_sets() {
        let a3 = rs(Family::A, 3);
        assert!(a3.inversion_set(&WeylElement::identity()).is_empty());
        assert_eq!(a3.inversion_set(&a3.longest_element_full()).len(), 6);

        let w0 = a3.relative_longest_element(2);
        let inv = a3.inversion_set(&w0);
        let expected: Vec<Root> = [vec![0, 1, 0], vec![0, 1, 1], vec![1, 1, 0], vec![1, 1, 1]]
            .into_iter()
            .map(|c| a3.root_from_coords(c).unwrap())
            .collect();
        assert_eq!(inv, expected);
    }

    #[test]
    fn relative_longest_element_properties() {
        // w0 permutes the positive Levi roots and sends the marked
        // fundamental weight to its negative.
        for (family, rank, node) in [
            (Family::A, 3, 2),
            (Family::C, 3, 3),
            (Family::B, 3, 1),
            (Family::D, 4, 4),
            (Family::E, 7, 7),
        ] {
            let system = rs(family, rank);
            let w0 = system.relative_longest_element(node);
            let levi: BTreeSet<usize> = (1..=rank).filter(|&i| i != node).collect();
            for gamma in system.roots_supported_on(&levi) {
                let image = system.apply_to_root(&w0, &gamma);
                assert!(image.is_positive(), "w0 must permute the Levi positives");
                assert_eq!(image.coefficient(node), 0);
            }
            let omega = system.fundamental_weight(node);
            assert_eq!(system.apply_to_weight(&w0, &omega), omega.negated());
        }
    }

    #[test]
    fn half_sum_matches_direct_sum() {
        let a3 = rs(Family::A, 3);
        let levi = BTreeSet::from([1, 3]);
        let rho_m = a3.half_sum_of_positive_roots(&levi);
        // rho_M = (alpha_1 + alpha_3)/2; its pairing with alpha_2^v is -1.
        assert_eq!(a3.pairing_weight(&rho_m, &a3.simple_root(2)), rat(-1));
        assert_eq!(a3.pairing_weight(&rho_m, &a3.simple_root(1)), rat(1));
    }

    #[test]
    fn invalid_roots_are_rejected() {
        let a3 = rs(Family::A, 3);
        assert!(a3.root_from_coords(vec![1, 0, 1]).is_err());
        assert!(a3.root_from_coords(vec![1, 1]).is_err());
        assert!(a3.root_from_coords(vec![-1, -1, 0]).is_ok());
    }
}
