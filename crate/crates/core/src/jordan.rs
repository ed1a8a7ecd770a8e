//! Maximal parabolics with abelian radical and their Jordan invariants.
//!
//! A simple root `alpha_j` qualifies when its coefficient in the highest
//! root is 1 (the radical `N` is then abelian) and `-w_G(alpha_j) = alpha_j`
//! where `w_G` is the longest Weyl element (the parabolic is then conjugate
//! to its opposite). The radical of a qualifying parabolic is a Jordan
//! algebra of rank `r` over a coordinate space of dimension `d`, and
//!
//! ```text
//! dim N = r + r(r-1)d/2
//! ```
//!
//! with the dimensions laid out on a Pierce grid indexed by a maximal set of
//! strongly orthogonal roots. Passing to the Levi of the Heisenberg
//! parabolic (the simple roots perpendicular to the highest root) and taking
//! the unique factor not inside `M` descends `(r, d)` to `(r-1, d)`;
//! iterating gives a tower of groups ending in the rank-one case.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::{build_root_system, CartanType, Family, Root, RootSystem};

/// A qualifying maximal parabolic: marked node, Levi nodes and the
/// nilradical root set. Owns its root system so that descent steps can hand
/// out self-contained data.
#[derive(Debug, Clone)]
pub struct ParabolicDatum {
    rs: RootSystem,
    node: usize,
    levi_nodes: BTreeSet<usize>,
    nilradical: Vec<Root>,
}

impl ParabolicDatum {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn cartan_type(&self) -> CartanType {
        self.rs.cartan_type()
    }

    /// Marked simple node, 1-based.
    pub fn node(&self) -> usize {
        self.node
    }

    pub fn levi_nodes(&self) -> &BTreeSet<usize> {
        &self.levi_nodes
    }

    /// Positive roots with a positive coefficient at the marked node.
    pub fn nilradical_roots(&self) -> &[Root] {
        &self.nilradical
    }

    pub fn nilradical_dim(&self) -> usize {
        self.nilradical.len()
    }

    /// Names of the simple factors of the Levi, e.g. `"A2 x A2"`; `"0"` for
    /// an empty Levi.
    pub fn levi_label(&self) -> String {
        component_set_label(&self.rs, &self.levi_nodes)
    }
}

/// Builds and validates the datum for one marked node.
pub fn parabolic_datum(rs: &RootSystem, node: usize) -> Result<ParabolicDatum> {
    let rank = rs.rank();
    if node < 1 || node > rank {
        return Err(Error::InvalidInput(format!(
            "node {node} out of range for {}",
            rs.cartan_type()
        )));
    }
    let beta = rs.highest_root();
    if beta.coefficient(node) != 1 {
        return Err(Error::InvalidInput(format!(
            "node {node} of {}: the radical is not abelian (highest-root coefficient {})",
            rs.cartan_type(),
            beta.coefficient(node)
        )));
    }
    let w_g = rs.longest_element_full();
    let alpha = rs.simple_root(node);
    if rs.apply_to_root(&w_g, &alpha).negated() != alpha {
        return Err(Error::InvalidInput(format!(
            "node {node} of {}: parabolic is not conjugate to its opposite",
            rs.cartan_type()
        )));
    }
    let nilradical: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|r| r.coefficient(node) > 0)
        .cloned()
        .collect();
    Ok(ParabolicDatum {
        rs: rs.clone(),
        node,
        levi_nodes: (1..=rank).filter(|&i| i != node).collect(),
        nilradical,
    })
}

/// All qualifying nodes of a root system, in node order. May be empty
/// (E6 has abelian radicals but none is self-opposite).
pub fn classify_abelian_parabolics(rs: &RootSystem) -> Vec<ParabolicDatum> {
    (1..=rs.rank())
        .filter_map(|node| parabolic_datum(rs, node).ok())
        .collect()
}

/// What the coordinate space `D = J_12` is. At rank 2 the off-diagonal
/// piece is only a quadratic space; from rank 3 on the products between
/// Pierce pieces force a composition-algebra structure on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordinateKind {
    /// `r = 1`: no off-diagonal piece exists.
    None,
    /// `r = 2`: a quadratic space of dimension `d`.
    QuadraticSpace,
    /// `r >= 3`: a composition algebra (`d` is 1, 2, 4 or 8).
    CompositionAlgebra,
}

impl CoordinateKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CoordinateKind::None => "none",
            CoordinateKind::QuadraticSpace => "quadratic_space",
            CoordinateKind::CompositionAlgebra => "composition_algebra",
        }
    }
}

/// Rank, coordinate dimension and the Pierce grid of the Jordan algebra on
/// the nilradical. `d = 0` by convention when `r = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanDatum {
    pub r: usize,
    pub d: usize,
    pub coordinate_kind: CoordinateKind,
    /// The canonical maximal strongly orthogonal set, highest root first.
    pub strongly_orthogonal: Vec<Root>,
    /// `pierce_dims[i][j]`: 1 on the diagonal, `d` off it.
    pub pierce_dims: Vec<Vec<usize>>,
}

impl JordanDatum {
    pub fn nilradical_dim(&self) -> usize {
        self.r + self.r * (self.r - 1) * self.d / 2
    }
}

fn strongly_orthogonal(rs: &RootSystem, a: &Root, b: &Root) -> bool {
    let sum: Vec<i64> = a
        .coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| x + y)
        .collect();
    let diff: Vec<i64> = a
        .coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| x - y)
        .collect();
    !rs.is_root(&sum) && !rs.is_root(&diff)
}

/// The canonical maximal strongly orthogonal set inside the nilradical:
/// start with the highest root, then repeatedly take the highest nilradical
/// root strongly orthogonal to everything chosen so far.
pub fn strongly_orthogonal_set(pd: &ParabolicDatum) -> Vec<Root> {
    let rs = pd.root_system();
    let mut chosen: Vec<Root> = Vec::new();
    loop {
        let next = pd
            .nilradical_roots()
            .iter()
            .filter(|cand| !chosen.contains(cand))
            .filter(|cand| chosen.iter().all(|b| strongly_orthogonal(rs, cand, b)))
            .max()
            .cloned();
        match next {
            Some(root) => chosen.push(root),
            None => break,
        }
    }
    chosen
}

/// Extracts `(r, d)` and the Pierce grid, cross-checking that the grid
/// covers the nilradical exactly and that the off-diagonal dimensions agree.
pub fn jordan_invariants(pd: &ParabolicDatum) -> Result<JordanDatum> {
    let rs = pd.root_system();
    let s = strongly_orthogonal_set(pd);
    let r = s.len();
    assert!(r >= 1, "a qualifying parabolic has a nonempty nilradical");

    // Pierce piece of a nilradical root: the vector of pairings against the
    // strongly orthogonal coroots must be 2*delta_i (diagonal piece) or
    // delta_i + delta_j (off-diagonal piece).
    let mut sizes: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for alpha in pd.nilradical_roots() {
        let pairings: Vec<i64> = s.iter().map(|b| rs.pairing_roots(alpha, b)).collect();
        let support: Vec<usize> = pairings
            .iter()
            .enumerate()
            .filter(|(_, &p)| p != 0)
            .map(|(i, _)| i)
            .collect();
        let cell = match support.as_slice() {
            [i] if pairings[*i] == 2 => (*i, *i),
            [i, j] if pairings[*i] == 1 && pairings[*j] == 1 => (*i, *j),
            _ => {
                return Err(Error::Inconsistency(format!(
                    "nilradical root {alpha} of {} lies in no Pierce piece (pairings {pairings:?})",
                    rs.cartan_type()
                )))
            }
        };
        *sizes.entry(cell).or_insert(0) += 1;
    }

    for i in 0..r {
        if sizes.get(&(i, i)).copied().unwrap_or(0) != 1 {
            return Err(Error::Inconsistency(format!(
                "diagonal Pierce piece ({i},{i}) of {} is not one-dimensional",
                rs.cartan_type()
            )));
        }
    }
    let mut off: BTreeSet<usize> = BTreeSet::new();
    for i in 0..r {
        for j in (i + 1)..r {
            off.insert(sizes.get(&(i, j)).copied().unwrap_or(0));
        }
    }
    let d = match off.len() {
        0 => 0, // r = 1: no off-diagonal piece exists
        1 => *off.iter().next().unwrap(),
        _ => {
            return Err(Error::Inconsistency(format!(
                "off-diagonal Pierce dimensions of {} disagree: {off:?}",
                rs.cartan_type()
            )))
        }
    };
    let covered: usize = sizes.values().sum();
    if covered != pd.nilradical_dim() {
        return Err(Error::Inconsistency(format!(
            "Pierce grid covers {covered} of {} nilradical roots",
            pd.nilradical_dim()
        )));
    }

    let mut pierce_dims = vec![vec![d; r]; r];
    for (i, row) in pierce_dims.iter_mut().enumerate() {
        row[i] = 1;
    }
    let coordinate_kind = match r {
        1 => CoordinateKind::None,
        2 => CoordinateKind::QuadraticSpace,
        _ => CoordinateKind::CompositionAlgebra,
    };
    if coordinate_kind == CoordinateKind::CompositionAlgebra && ![1, 2, 4, 8].contains(&d) {
        return Err(Error::Inconsistency(format!(
            "rank {r} forces a composition algebra, but d = {d} is not a composition-algebra dimension"
        )));
    }
    let datum = JordanDatum {
        r,
        d,
        coordinate_kind,
        strongly_orthogonal: s,
        pierce_dims,
    };
    if datum.nilradical_dim() != pd.nilradical_dim() {
        return Err(Error::Inconsistency(format!(
            "r + r(r-1)d/2 = {} but dim N = {}",
            datum.nilradical_dim(),
            pd.nilradical_dim()
        )));
    }
    Ok(datum)
}

/// An identified simple factor of a sub-diagram: its abstract type together
/// with the map from ambient node numbers to canonical ones.
#[derive(Debug, Clone)]
pub struct ComponentId {
    pub cartan_type: CartanType,
    /// Ambient node (1-based) -> canonical node of `cartan_type` (1-based).
    pub node_map: BTreeMap<usize, usize>,
}

fn neighbors(rs: &RootSystem, nodes: &BTreeSet<usize>, i: usize) -> Vec<usize> {
    nodes
        .iter()
        .copied()
        .filter(|&j| j != i && rs.cartan_entry(i, j) != 0)
        .collect()
}

fn connected_component(rs: &RootSystem, nodes: &BTreeSet<usize>, start: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(i) = stack.pop() {
        for j in neighbors(rs, nodes, i) {
            if seen.insert(j) {
                stack.push(j);
            }
        }
    }
    seen
}

fn split_components(rs: &RootSystem, nodes: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let mut remaining = nodes.clone();
    let mut out = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        let comp = connected_component(rs, nodes, start);
        for i in &comp {
            remaining.remove(i);
        }
        out.push(comp);
    }
    out
}

/// Walks a path graph from `start` along unvisited neighbors.
fn walk_chain(rs: &RootSystem, nodes: &BTreeSet<usize>, start: usize) -> Vec<usize> {
    let mut path = vec![start];
    let mut seen = BTreeSet::from([start]);
    loop {
        let next = neighbors(rs, nodes, *path.last().unwrap())
            .into_iter()
            .find(|j| !seen.contains(j));
        match next {
            Some(j) => {
                seen.insert(j);
                path.push(j);
            }
            None => return path,
        }
    }
}

/// Identifies one connected sub-diagram. `prefer` breaks the only genuine
/// tie: a rank-2 double bond is `B2` and `C2` at once and inherits the
/// ambient family when that family is B or C.
fn identify_component(
    rs: &RootSystem,
    nodes: &BTreeSet<usize>,
    prefer: Option<Family>,
) -> Result<ComponentId> {
    let k = nodes.len();
    assert!(!nodes.is_empty(), "empty component");
    let single = |family: Family, map: BTreeMap<usize, usize>| -> Result<ComponentId> {
        Ok(ComponentId {
            cartan_type: CartanType::new(family, map.len())?,
            node_map: map,
        })
    };

    if k == 1 {
        let &only = nodes.iter().next().unwrap();
        return single(Family::A, BTreeMap::from([(only, 1)]));
    }

    let mut double_bonds: Vec<(usize, usize)> = Vec::new(); // (long side, short side)
    for &i in nodes {
        for &j in nodes {
            if i != j && rs.cartan_entry(i, j) == -2 {
                double_bonds.push((i, j));
            }
        }
    }

    if double_bonds.is_empty() {
        // Simply laced: a chain is A_k, one branch point is D or E.
        let leaves: Vec<usize> = nodes
            .iter()
            .copied()
            .filter(|&i| neighbors(rs, nodes, i).len() <= 1)
            .collect();
        let branch: Vec<usize> = nodes
            .iter()
            .copied()
            .filter(|&i| neighbors(rs, nodes, i).len() == 3)
            .collect();
        match branch.as_slice() {
            [] => {
                let path = walk_chain(rs, nodes, leaves[0]);
                if path.len() != k {
                    return Err(Error::Inconsistency(format!(
                        "sub-diagram on nodes {nodes:?} is not a chain"
                    )));
                }
                let map = path.iter().enumerate().map(|(p, &i)| (i, p + 1)).collect();
                single(Family::A, map)
            }
            [b] => {
                // Legs away from the branch node, shortest first.
                let mut legs: Vec<Vec<usize>> = neighbors(rs, nodes, *b)
                    .into_iter()
                    .map(|first| {
                        let mut sub = nodes.clone();
                        sub.remove(b);
                        walk_chain(rs, &sub, first)
                    })
                    .collect();
                legs.sort_by_key(|leg| (leg.len(), leg[0]));
                let lens: Vec<usize> = legs.iter().map(|l| l.len()).collect();
                let mut map = BTreeMap::new();
                match lens.as_slice() {
                    [1, 1, m] => {
                        // D_{m+3}: the long leg runs rank-3 .. 1 away from
                        // the branch node rank-2; the short legs are the fork.
                        let rank = m + 3;
                        map.insert(*b, rank - 2);
                        map.insert(legs[0][0], rank - 1);
                        map.insert(legs[1][0], rank);
                        for (step, &i) in legs[2].iter().enumerate() {
                            map.insert(i, rank - 3 - step);
                        }
                        single(Family::D, map)
                    }
                    [1, 2, 2] => {
                        map.insert(*b, 4);
                        map.insert(legs[0][0], 2);
                        map.insert(legs[1][0], 3);
                        map.insert(legs[1][1], 1);
                        map.insert(legs[2][0], 5);
                        map.insert(legs[2][1], 6);
                        single(Family::E, map)
                    }
                    [1, 2, 3] => {
                        map.insert(*b, 4);
                        map.insert(legs[0][0], 2);
                        map.insert(legs[1][0], 3);
                        map.insert(legs[1][1], 1);
                        map.insert(legs[2][0], 5);
                        map.insert(legs[2][1], 6);
                        map.insert(legs[2][2], 7);
                        single(Family::E, map)
                    }
                    _ => Err(Error::Inconsistency(format!(
                        "unrecognized simply-laced sub-diagram with legs {lens:?}"
                    ))),
                }
            }
            _ => Err(Error::Inconsistency(format!(
                "sub-diagram on nodes {nodes:?} has several branch points"
            ))),
        }
    } else {
        if double_bonds.len() > 1 {
            return Err(Error::Inconsistency(
                "sub-diagram carries more than one double bond".to_string(),
            ));
        }
        let (long_side, short_side) = double_bonds[0];
        if k == 2 {
            // B2 and C2 coincide; keep the ambient lettering when it is
            // B or C so towers and Levi labels read like their context.
            let family = match prefer {
                Some(Family::B) => Family::B,
                _ => Family::C,
            };
            let map = match family {
                Family::B => BTreeMap::from([(long_side, 1), (short_side, 2)]),
                _ => BTreeMap::from([(short_side, 1), (long_side, 2)]),
            };
            return single(family, map);
        }
        let short_is_leaf = neighbors(rs, nodes, short_side).len() == 1;
        if short_is_leaf {
            // One short leaf at the tail: B_k, numbered toward the leaf.
            let path = walk_chain(rs, nodes, short_side);
            if path.len() != k {
                return Err(Error::Inconsistency(
                    "double-bond sub-diagram is not a chain".to_string(),
                ));
            }
            let map = path.iter().enumerate().map(|(p, &i)| (i, k - p)).collect();
            single(Family::B, map)
        } else {
            // One long leaf at the tail: C_k.
            let path = walk_chain(rs, nodes, long_side);
            if path.len() != k {
                return Err(Error::Inconsistency(
                    "double-bond sub-diagram is not a chain".to_string(),
                ));
            }
            let map = path.iter().enumerate().map(|(p, &i)| (i, k - p)).collect();
            single(Family::C, map)
        }
    }
}

fn component_set_label(rs: &RootSystem, nodes: &BTreeSet<usize>) -> String {
    if nodes.is_empty() {
        return "0".to_string();
    }
    let prefer = Some(rs.cartan_type().family());
    let mut labels: Vec<String> = split_components(rs, nodes)
        .into_iter()
        .map(|comp| {
            identify_component(rs, &comp, prefer)
                .map(|c| c.cartan_type.to_string())
                .unwrap_or_else(|_| format!("?{}", comp.len()))
        })
        .collect();
    labels.sort();
    labels.join(" x ")
}

/// One step down the tower, or the terminal rank-one case.
#[derive(Debug, Clone)]
pub enum FjStep {
    Descended(ParabolicDatum),
    Terminal,
}

/// Passes to the Levi of the Heisenberg parabolic (simple roots
/// perpendicular to the highest root) and returns the unique simple factor
/// not contained in `M`, re-marked at the image of the marked node.
pub fn fourier_jacobi_step(pd: &ParabolicDatum) -> Result<FjStep> {
    let rs = pd.root_system();
    let beta = rs.highest_root();
    let perp: BTreeSet<usize> = (1..=rs.rank())
        .filter(|&i| rs.pairing_roots(&rs.simple_root(i), beta) == 0)
        .collect();
    if !perp.contains(&pd.node()) {
        // The marked root pairs with the highest root: rank-one case.
        return Ok(FjStep::Terminal);
    }
    let components = split_components(rs, &perp);
    let outside_m: Vec<&BTreeSet<usize>> = components
        .iter()
        .filter(|comp| comp.contains(&pd.node()))
        .collect();
    if outside_m.len() != 1 {
        return Err(Error::Inconsistency(format!(
            "{} factors of the perpendicular Levi meet the marked node",
            outside_m.len()
        )));
    }
    let ident = identify_component(rs, outside_m[0], Some(rs.cartan_type().family()))?;
    let sub_rs = build_root_system(ident.cartan_type);
    let new_node = ident.node_map[&pd.node()];
    let next = parabolic_datum(&sub_rs, new_node)?;
    Ok(FjStep::Descended(next))
}

/// One level of a tower: the group, the marked node, and the invariants at
/// that level. `d` is the constant coordinate dimension of the tower (the
/// terminal rank-one level keeps it for display even though its own Jordan
/// datum has `d = 0`).
#[derive(Debug, Clone)]
pub struct TowerStep {
    pub cartan_type: CartanType,
    pub node: usize,
    pub r: usize,
    pub d: usize,
    pub levi_label: String,
}

/// The descending chain of groups, from the given parabolic down to the
/// rank-one case.
#[derive(Debug, Clone)]
pub struct TowerReport {
    pub d: usize,
    pub steps: Vec<TowerStep>,
}

impl TowerReport {
    pub fn chain_labels(&self) -> Vec<String> {
        self.steps
            .iter()
            .map(|s| s.cartan_type.to_string())
            .collect()
    }
}

impl fmt::Display for TowerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .steps
            .iter()
            .map(|s| format!("{}(node {}, r={})", s.cartan_type, s.node, s.r))
            .collect();
        write!(f, "{}", body.join(" -> "))
    }
}

/// Iterates [`fourier_jacobi_step`], checking that each step decrements `r`
/// by one and preserves `d`.
pub fn build_tower(pd: &ParabolicDatum) -> Result<TowerReport> {
    let mut steps = Vec::new();
    let mut current = pd.clone();
    let top = jordan_invariants(&current)?;
    let tower_d = top.d;
    let mut expected_r = top.r;
    loop {
        let jd = jordan_invariants(&current)?;
        if jd.r != expected_r {
            return Err(Error::Inconsistency(format!(
                "tower step produced rank {} where {} was expected",
                jd.r, expected_r
            )));
        }
        if jd.r >= 2 && jd.d != tower_d {
            return Err(Error::Inconsistency(format!(
                "tower step changed the coordinate dimension from {tower_d} to {}",
                jd.d
            )));
        }
        steps.push(TowerStep {
            cartan_type: current.cartan_type(),
            node: current.node(),
            r: jd.r,
            d: if jd.r >= 2 { jd.d } else { tower_d },
            levi_label: current.levi_label(),
        });
        match fourier_jacobi_step(&current)? {
            FjStep::Descended(next) => {
                current = next;
                expected_r -= 1;
            }
            FjStep::Terminal => break,
        }
    }
    if steps.len() != top.r {
        return Err(Error::Inconsistency(format!(
            "tower of length {} for rank-{} datum",
            steps.len(),
            top.r
        )));
    }
    Ok(TowerReport { d: tower_d, steps })
}

/// A restricted positive root of the type-C rank-`r` system, as a vector in
/// the `e_i` coordinates dual to the distinguished cocharacters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedRoot {
    pub coords: Vec<i64>,
    pub long: bool,
    pub multiplicity: usize,
    /// Whether the root space lies on the nilradical side (`2e_i` and
    /// `e_i + e_j`) rather than in the Levi (`e_i - e_j`).
    pub in_nilradical: bool,
}

/// The restricted root datum of a rank-`r` Jordan algebra over a
/// `d`-dimensional coordinate space: type `C_r`, short multiplicity `d`,
/// long multiplicity 1. Accepts the non-split forms as plain `(r, d)` input.
#[derive(Debug, Clone)]
pub struct RestrictedRootDatum {
    pub r: usize,
    pub short_mult: usize,
    pub long_mult: usize,
    pub positive_roots: Vec<RestrictedRoot>,
}

impl RestrictedRootDatum {
    pub fn nilradical_positive_roots(&self) -> impl Iterator<Item = &RestrictedRoot> {
        self.positive_roots.iter().filter(|r| r.in_nilradical)
    }

    pub fn nilradical_dim(&self) -> usize {
        self.r + self.r * (self.r - 1) * self.short_mult / 2
    }
}

pub fn restricted_datum(r: usize, d: usize) -> Result<RestrictedRootDatum> {
    if r < 1 {
        return Err(Error::InvalidInput(
            "restricted rank must be >= 1".to_string(),
        ));
    }
    let mut positive_roots = Vec::new();
    let e = |i: usize| -> Vec<i64> {
        let mut v = vec![0i64; r];
        v[i] = 1;
        v
    };
    for i in 0..r {
        for j in (i + 1)..r {
            let mut diff = e(i);
            diff[j] = -1;
            positive_roots.push(RestrictedRoot {
                coords: diff,
                long: false,
                multiplicity: d,
                in_nilradical: false,
            });
            let mut sum = e(i);
            sum[j] = 1;
            positive_roots.push(RestrictedRoot {
                coords: sum,
                long: false,
                multiplicity: d,
                in_nilradical: true,
            });
        }
    }
    for i in 0..r {
        let mut long = e(i);
        long[i] = 2;
        positive_roots.push(RestrictedRoot {
            coords: long,
            long: true,
            multiplicity: 1,
            in_nilradical: true,
        });
    }
    Ok(RestrictedRootDatum {
        r,
        short_mult: d,
        long_mult: 1,
        positive_roots,
    })
}
