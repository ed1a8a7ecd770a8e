//! Reducibility points of the local degenerate principal series.
//!
//! Two independent paths produce the same answer and are cross-checked:
//!
//! * a rule engine encoding the classification directly — for rank 2 the
//!   three cases split by the parity of `d` and the discriminant character
//!   of the coordinate space, for rank above 2 (trivial discriminant) the
//!   point list is `{±1, ±(1+d/2), ..., ±(1+(r-1)d/2)}` for the trivial
//!   character and `{0}` for a nontrivial quadratic one;
//! * the descent recursion behind those statements: the Fourier–Jacobi
//!   functor carries `I(chi, s)` at rank `r` to `I(chi*chi_D, s)` at rank
//!   `r - 1` and kills only the trivial representation, so reducibility
//!   points at one level must map into the next level's points once the
//!   locations of the trivial representation are removed.
//!
//! The real-group side contributes the truncated-pyramid shape of the
//! composition series and the co-socle cone of spherical-type weights; both
//! are pure combinatorics here.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{half, rat, rat_string, Rat};

/// The discriminant character of the coordinate space: trivial (split even
/// dimension, or a quaternionic kernel), attached to a quadratic field
/// extension, or undefined in the honest-character sense (odd dimension,
/// where it is metaplectic).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiDTag {
    Trivial,
    QuadraticField,
    Undefined,
}

impl ChiDTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            ChiDTag::Trivial => "trivial",
            ChiDTag::QuadraticField => "quadratic_field",
            ChiDTag::Undefined => "undefined",
        }
    }
}

/// The inducing quadratic character, named relative to the discriminant
/// character when needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterClass {
    Trivial,
    /// A quadratic character different from the trivial one and (when one
    /// exists) from the discriminant character.
    QuadraticNontrivial,
    /// Whatever the discriminant character is.
    ChiD,
    /// The character of the quadratic field extension; meaningful only when
    /// the discriminant tag is `QuadraticField`.
    ChiK,
}

impl CharacterClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CharacterClass::Trivial => "trivial",
            CharacterClass::QuadraticNontrivial => "quadratic_nontrivial",
            CharacterClass::ChiD => "chi_D",
            CharacterClass::ChiK => "chi_K",
        }
    }

    /// Normalizes the relative names against a discriminant tag.
    pub fn resolve(&self, chi_d: ChiDTag) -> Result<ResolvedChar> {
        match self {
            CharacterClass::Trivial => Ok(ResolvedChar::Trivial),
            CharacterClass::QuadraticNontrivial => Ok(ResolvedChar::OtherQuadratic),
            CharacterClass::ChiD => match chi_d {
                ChiDTag::Trivial => Ok(ResolvedChar::Trivial),
                ChiDTag::QuadraticField => Ok(ResolvedChar::ChiK),
                ChiDTag::Undefined => Err(Error::InvalidInput(
                    "chi_D is not an honest quadratic character when dim D is odd".to_string(),
                )),
            },
            CharacterClass::ChiK => match chi_d {
                ChiDTag::QuadraticField => Ok(ResolvedChar::ChiK),
                _ => Err(Error::InvalidInput(
                    "chi_K is meaningful only when the discriminant tag is quadratic_field"
                        .to_string(),
                )),
            },
        }
    }
}

/// A character normalized against the discriminant tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolvedChar {
    Trivial,
    ChiK,
    OtherQuadratic,
}

impl ResolvedChar {
    pub fn is_trivial(&self) -> bool {
        matches!(self, ResolvedChar::Trivial)
    }

    pub fn is_chi_k(&self) -> bool {
        matches!(self, ResolvedChar::ChiK)
    }

    /// Multiplication by the discriminant character, at the tag level.
    /// Quadratic characters square to the trivial one, so this swaps the
    /// trivial class with `chi_K` and fixes everything else.
    pub fn times_chi_d(&self, chi_d: ChiDTag) -> ResolvedChar {
        match chi_d {
            ChiDTag::Trivial | ChiDTag::Undefined => *self,
            ChiDTag::QuadraticField => match self {
                ResolvedChar::Trivial => ResolvedChar::ChiK,
                ResolvedChar::ChiK => ResolvedChar::Trivial,
                ResolvedChar::OtherQuadratic => ResolvedChar::OtherQuadratic,
            },
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ResolvedChar::Trivial => "trivial",
            ResolvedChar::ChiK => "chi_K",
            ResolvedChar::OtherQuadratic => "quadratic_nontrivial",
        }
    }
}

/// Composition structure at one reducibility point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointStructure {
    /// Direct sum of two non-isomorphic irreducibles.
    DirectSum2,
    /// Non-split series of two non-isomorphic irreducibles.
    NonsplitLength2,
    /// Reducible with the trivial representation among the subquotients;
    /// the finer structure is not asserted.
    ContainsTrivial,
}

impl PointStructure {
    pub fn as_str(&self) -> &'static str {
        match self {
            PointStructure::DirectSum2 => "direct_sum_2",
            PointStructure::NonsplitLength2 => "nonsplit_length_2",
            PointStructure::ContainsTrivial => "contains_trivial",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibilityPoint {
    pub s: Rat,
    pub structure: PointStructure,
    /// Set when the trivial representation is a subquotient at this point.
    pub trivial_subquotient: bool,
}

/// The full reducibility locus: finitely many points, irreducible elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibilityReport {
    /// Sorted by location; symmetric under `s -> -s` with equal structure.
    pub points: Vec<ReducibilityPoint>,
    pub irreducible_elsewhere: bool,
}

impl ReducibilityReport {
    fn from_points(mut points: Vec<ReducibilityPoint>) -> ReducibilityReport {
        points.sort_by_key(|p| p.s);
        let report = ReducibilityReport {
            points,
            irreducible_elsewhere: true,
        };
        debug_assert!(report.is_symmetric());
        report
    }

    pub fn locations(&self) -> Vec<Rat> {
        self.points.iter().map(|p| p.s).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.points.iter().all(|p| {
            self.points
                .iter()
                .any(|q| q.s == -p.s && q.structure == p.structure)
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "points": self.points.iter().map(|p| json!({
                "s": rat_string(p.s),
                "structure": p.structure.as_str(),
                "trivial_subquotient": p.trivial_subquotient,
            })).collect::<Vec<_>>(),
            "irreducible_elsewhere": self.irreducible_elsewhere,
        })
    }
}

impl fmt::Display for ReducibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return f.write_str("irreducible everywhere");
        }
        let body: Vec<String> = self
            .points
            .iter()
            .map(|p| {
                let flag = if p.trivial_subquotient {
                    ", trivial"
                } else {
                    ""
                };
                format!("s = {} ({}{})", rat_string(p.s), p.structure.as_str(), flag)
            })
            .collect();
        f.write_str(&body.join("; "))
    }
}

fn point(s: Rat, structure: PointStructure, trivial: bool) -> ReducibilityPoint {
    ReducibilityPoint {
        s,
        structure,
        trivial_subquotient: trivial,
    }
}

fn symmetric_pair(s: Rat, structure: PointStructure, trivial: bool) -> [ReducibilityPoint; 2] {
    [point(-s, structure, trivial), point(s, structure, trivial)]
}

/// The locations `±(1 + (r-1)d/2)` where the trivial representation occurs
/// as a subquotient of the trivial-character series.
pub fn trivial_rep_points(r: usize, d: usize) -> (Rat, Rat) {
    let s = rat(1) + half((r as i64 - 1) * d as i64);
    (-s, s)
}

/// Base of the recursion: the rank-one principal series. The metaplectic
/// rule is the double cover's, reducing at `±1/2` for every character.
pub fn sl2_reducibility(chi: &CharacterClass, metaplectic: bool) -> Result<ReducibilityReport> {
    if metaplectic {
        let pts = symmetric_pair(half(1), PointStructure::NonsplitLength2, false);
        return Ok(ReducibilityReport::from_points(pts.to_vec()));
    }
    let resolved = match chi {
        CharacterClass::Trivial => ResolvedChar::Trivial,
        CharacterClass::QuadraticNontrivial => ResolvedChar::OtherQuadratic,
        CharacterClass::ChiK => ResolvedChar::ChiK,
        CharacterClass::ChiD => {
            return Err(Error::InvalidInput(
                "resolve chi_D against its discriminant tag before the rank-one rule".to_string(),
            ))
        }
    };
    Ok(sl2_resolved(resolved, false))
}

fn sl2_resolved(chi: ResolvedChar, metaplectic: bool) -> ReducibilityReport {
    let pts = if metaplectic {
        symmetric_pair(half(1), PointStructure::NonsplitLength2, false).to_vec()
    } else if chi.is_trivial() {
        symmetric_pair(rat(1), PointStructure::NonsplitLength2, true).to_vec()
    } else {
        vec![point(rat(0), PointStructure::DirectSum2, false)]
    };
    ReducibilityReport::from_points(pts)
}

/// The rule engine. Rank 2 requires `dim D > 2` and a discriminant tag
/// consistent with the parity of `d`; rank 3 and above requires a trivial
/// discriminant tag and refuses otherwise. Rank 1 falls through to the
/// rank-one rule.
pub fn reducibility_points(
    r: usize,
    d: usize,
    chi_d: ChiDTag,
    chi: &CharacterClass,
) -> Result<ReducibilityReport> {
    let resolved = chi.resolve(chi_d)?;
    match r {
        0 => Err(Error::InvalidInput("rank must be at least 1".to_string())),
        1 => Ok(sl2_resolved(resolved, false)),
        2 => {
            if d <= 2 {
                return Err(Error::OutOfScope(format!(
                    "rank-2 classification requires dim D > 2 (got {d})"
                )));
            }
            if d % 2 == 1 {
                if chi_d != ChiDTag::Undefined {
                    return Err(Error::InvalidInput(format!(
                        "odd d = {d} forces the metaplectic discriminant tag `undefined`, got {}",
                        chi_d.as_str()
                    )));
                }
                // d = 2n - 1: points at ±1/2, plus the trivial-representation
                // locations ±(n + 1/2) for the trivial character.
                let mut pts =
                    symmetric_pair(half(1), PointStructure::NonsplitLength2, false).to_vec();
                if resolved.is_trivial() {
                    let (lo, hi) = trivial_rep_points(2, d);
                    pts.extend([
                        point(lo, PointStructure::ContainsTrivial, true),
                        point(hi, PointStructure::ContainsTrivial, true),
                    ]);
                }
                Ok(ReducibilityReport::from_points(pts))
            } else {
                // d = 2n - 2.
                let n = rat(1) + half(d as i64);
                match chi_d {
                    ChiDTag::Trivial => {
                        let pts = if resolved.is_trivial() {
                            let mut v =
                                symmetric_pair(rat(1), PointStructure::NonsplitLength2, false)
                                    .to_vec();
                            v.extend(symmetric_pair(n, PointStructure::NonsplitLength2, true));
                            v
                        } else {
                            vec![point(rat(0), PointStructure::DirectSum2, false)]
                        };
                        Ok(ReducibilityReport::from_points(pts))
                    }
                    ChiDTag::QuadraticField => {
                        let pts = if resolved.is_chi_k() {
                            symmetric_pair(rat(1), PointStructure::NonsplitLength2, false)
                                .to_vec()
                        } else if resolved.is_trivial() {
                            let mut v = vec![point(rat(0), PointStructure::DirectSum2, false)];
                            v.extend(symmetric_pair(n, PointStructure::ContainsTrivial, true));
                            v
                        } else {
                            vec![point(rat(0), PointStructure::DirectSum2, false)]
                        };
                        Ok(ReducibilityReport::from_points(pts))
                    }
                    ChiDTag::Undefined => Err(Error::InvalidInput(format!(
                        "even d = {d} carries an honest discriminant character; tag it trivial or quadratic_field"
                    ))),
                }
            }
        }
        _ => {
            if chi_d != ChiDTag::Trivial {
                return Err(Error::OutOfScope(format!(
                    "rank {r} with discriminant tag {}: only the trivial discriminant is classified",
                    chi_d.as_str()
                )));
            }
            let pts = if resolved.is_trivial() {
                let mut v = Vec::new();
                for i in 0..r as i64 {
                    let s = rat(1) + half(i * d as i64);
                    let is_top = i == r as i64 - 1;
                    v.extend(symmetric_pair(s, PointStructure::NonsplitLength2, is_top));
                }
                v
            } else {
                vec![point(rat(0), PointStructure::DirectSum2, false)]
            };
            Ok(ReducibilityReport::from_points(pts))
        }
    }
}

/// Parameters transported by one application of the Fourier–Jacobi functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FjParams {
    pub r: usize,
    pub d: usize,
    pub chi_d: ChiDTag,
    pub chi: ResolvedChar,
    pub s: Rat,
    /// Set when the current level lives on the metaplectic double cover
    /// (odd `d` toggles this at every step).
    pub metaplectic: bool,
}

impl FjParams {
    pub fn new(
        r: usize,
        d: usize,
        chi_d: ChiDTag,
        chi: &CharacterClass,
        s: Rat,
    ) -> Result<FjParams> {
        Ok(FjParams {
            r,
            d,
            chi_d,
            chi: chi.resolve(chi_d)?,
            s,
            metaplectic: false,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FjTransport {
    Descended(FjParams),
    Terminal,
}

/// `I(chi, s)` at rank `r` maps to `I(chi * chi_D, s)` at rank `r - 1`;
/// `s` is untouched. Rank 1 is terminal.
pub fn fj_image(params: &FjParams) -> FjTransport {
    if params.r <= 1 {
        return FjTransport::Terminal;
    }
    FjTransport::Descended(FjParams {
        r: params.r - 1,
        d: params.d,
        chi_d: params.chi_d,
        chi: params.chi.times_chi_d(params.chi_d),
        s: params.s,
        metaplectic: params.metaplectic ^ (params.chi_d == ChiDTag::Undefined),
    })
}

/// One descent step in a consistency trace.
#[derive(Debug, Clone)]
pub struct FjWitness {
    pub chi: ResolvedChar,
    pub from_rank: usize,
    /// Points at `from_rank` that must survive transport (trivial-representation
    /// locations already removed).
    pub carried: Vec<Rat>,
    /// Points available at `from_rank - 1`.
    pub target: Vec<Rat>,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct FjConsistencyReport {
    pub consistent: bool,
    pub witnesses: Vec<FjWitness>,
}

/// Candidate points at one level: the rule engine where it applies, the
/// recursion-derived set where it does not (rank 2 with `dim D <= 2`).
fn level_points(
    level: usize,
    d: usize,
    chi_d: ChiDTag,
    chi: ResolvedChar,
    metaplectic: bool,
) -> Result<Vec<Rat>> {
    if level == 1 {
        return Ok(sl2_resolved(chi, metaplectic).locations());
    }
    if level == 2 && d <= 2 {
        return Ok(derived_points(level, d, chi_d, chi, metaplectic));
    }
    let chi_tag = match chi {
        ResolvedChar::Trivial => CharacterClass::Trivial,
        ResolvedChar::ChiK => CharacterClass::ChiK,
        ResolvedChar::OtherQuadratic => CharacterClass::QuadraticNontrivial,
    };
    Ok(reducibility_points(level, d, chi_d, &chi_tag)?.locations())
}

/// The recursion-derived candidate set: transport of the level below, plus
/// the trivial-representation locations when the level character is trivial.
fn derived_points(
    level: usize,
    d: usize,
    chi_d: ChiDTag,
    chi: ResolvedChar,
    metaplectic: bool,
) -> Vec<Rat> {
    if level == 1 {
        return sl2_resolved(chi, metaplectic).locations();
    }
    let below = derived_points(
        level - 1,
        d,
        chi_d,
        chi.times_chi_d(chi_d),
        metaplectic ^ (chi_d == ChiDTag::Undefined),
    );
    let mut out = below;
    if chi.is_trivial() {
        let (lo, hi) = trivial_rep_points(level, d);
        for p in [lo, hi] {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

fn admissible_characters(chi_d: ChiDTag) -> Vec<ResolvedChar> {
    match chi_d {
        ChiDTag::QuadraticField => vec![
            ResolvedChar::Trivial,
            ResolvedChar::ChiK,
            ResolvedChar::OtherQuadratic,
        ],
        _ => vec![ResolvedChar::Trivial, ResolvedChar::OtherQuadratic],
    }
}

/// Replays the descent: at every level, the rule engine's points minus the
/// trivial-representation locations must land inside the points one level
/// down, and wherever the rule engine applies its list must equal the
/// recursion-derived one. Returns the full witness trace.
pub fn verify_fj_consistency(r: usize, d: usize, chi_d: ChiDTag) -> Result<FjConsistencyReport> {
    if r == 0 {
        return Err(Error::InvalidInput("rank must be at least 1".to_string()));
    }
    if r >= 3 && chi_d != ChiDTag::Trivial {
        return Err(Error::OutOfScope(format!(
            "rank {r} with discriminant tag {}: only the trivial discriminant is classified",
            chi_d.as_str()
        )));
    }
    if r >= 2 && d >= 3 {
        let parity_ok = (d % 2 == 1) == (chi_d == ChiDTag::Undefined);
        if !parity_ok && r == 2 {
            return Err(Error::InvalidInput(format!(
                "discriminant tag {} is inconsistent with d = {d}",
                chi_d.as_str()
            )));
        }
    }

    let mut witnesses = Vec::new();
    let mut consistent = true;
    for chi0 in admissible_characters(chi_d) {
        let mut chi = chi0;
        let mut metaplectic = false;
        for level in (2..=r).rev() {
            let pts = level_points(level, d, chi_d, chi, metaplectic)?;
            // Cross-check the rule engine against the recursion wherever
            // the rule engine applies.
            if !(level == 2 && d <= 2) {
                let derived = derived_points(level, d, chi_d, chi, metaplectic);
                if pts != derived {
                    consistent = false;
                }
            }
            let (lo, hi) = trivial_rep_points(level, d);
            let carried: Vec<Rat> = pts
                .iter()
                .copied()
                .filter(|&p| !(chi.is_trivial() && (p == lo || p == hi)))
                .collect();
            let chi_below = chi.times_chi_d(chi_d);
            let meta_below = metaplectic ^ (chi_d == ChiDTag::Undefined);
            let target = level_points(level - 1, d, chi_d, chi_below, meta_below)?;
            let ok = carried.iter().all(|p| target.contains(p));
            if !ok {
                consistent = false;
            }
            witnesses.push(FjWitness {
                chi: chi0,
                from_rank: level,
                carried,
                target,
                ok,
            });
            chi = chi_below;
            metaplectic = meta_below;
        }
    }
    Ok(FjConsistencyReport {
        consistent,
        witnesses,
    })
}

/// The truncated pyramid of subquotients at the `i`-th positive
/// reducibility point of the real-group series: cells `(p, q)` with
/// `p, q >= 0` and `r - i <= p + q <= r`, grouped into floors by
/// `t = p + q`. The socle is the `t = r` floor, the co-socle `t = r - i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidReport {
    pub r: usize,
    pub i: usize,
    pub cells: Vec<(usize, usize)>,
    /// `(t, cells on that floor)`, from the co-socle floor down to the socle.
    pub floors: Vec<(usize, Vec<(usize, usize)>)>,
    pub socle_floor: usize,
    pub cosocle_floor: usize,
}

impl PyramidReport {
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "i": self.i,
            "cell_count": self.cell_count(),
            "socle_floor": self.socle_floor,
            "cosocle_floor": self.cosocle_floor,
            "floors": self.floors.iter().map(|(t, cells)| json!({
                "t": t,
                "cells": cells.iter().map(|(p, q)| json!([p, q])).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn jantzen_pyramid(r: usize, i: usize) -> Result<PyramidReport> {
    if i < 1 || i > r {
        return Err(Error::InvalidInput(format!(
            "pyramid index i = {i} out of range 1..={r}"
        )));
    }
    let mut cells = Vec::new();
    let mut floors = Vec::new();
    for t in (r - i)..=r {
        let floor: Vec<(usize, usize)> = (0..=t).map(|p| (p, t - p)).collect();
        cells.extend(floor.iter().copied());
        floors.push((t, floor));
    }
    let expected: usize = ((r - i)..=r).map(|t| t + 1).sum();
    debug_assert_eq!(cells.len(), expected);
    Ok(PyramidReport {
        r,
        i,
        cells,
        floors,
        socle_floor: r,
        cosocle_floor: r - i,
    })
}

/// Result of testing a weight tuple against the co-socle cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KtypeConeCheck {
    pub in_cone: bool,
    /// `(p - q)(d/4)(1, ..., 1) + a` when the tuple lies in the cone.
    pub highest_weight: Option<Vec<i64>>,
}

/// Types of the co-socle constituents `V_{p,q}` form the cone
/// `(p-q)(d/4)(g_1 + ... + g_r) + (a_1 g_1 + ... + a_r g_r)` over
/// non-increasing integer tuples with `a_{p+1} = ... = a_{r-q} = 0`.
pub fn cosocle_ktype_check(
    r: usize,
    d: usize,
    p: usize,
    q: usize,
    a: &[i64],
) -> Result<KtypeConeCheck> {
    if d % 4 != 0 {
        return Err(Error::OutOfScope(format!(
            "the co-socle cone is described only for d divisible by 4 (got {d})"
        )));
    }
    if p + q >= r {
        return Err(Error::InvalidInput(format!(
            "(p, q) = ({p}, {q}) is not a co-socle floor cell: p + q must be r - i for some 1 <= i <= r"
        )));
    }
    if a.len() != r {
        return Err(Error::InvalidInput(format!(
            "expected an r-tuple of length {r}, got {}",
            a.len()
        )));
    }
    if a.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(
            "the tuple must be non-increasing".to_string(),
        ));
    }
    // 1-based positions p+1 ..= r-q must vanish.
    let in_cone = ((p + 1)..=(r - q)).all(|pos| a[pos - 1] == 0);
    let highest_weight = in_cone.then(|| {
        let base = (p as i64 - q as i64) * (d as i64 / 4);
        a.iter().map(|&ai| base + ai).collect()
    });
    Ok(KtypeConeCheck {
        in_cone,
        highest_weight,
    })
}
