//! Global pole ledger of the degenerate Eisenstein series.
//!
//! The constant term along the minimal parabolic is a sum over Weyl
//! representatives; the summand carrying the intertwining operator
//! contributes the closed-form c-function, now read against the completed
//! global zeta profile. A candidate pole survives only if the character
//! coordinates at that point lie on no wall `s_i = 0`, `s_i - s_j = 0`,
//! `s_i + s_j = 0` — on a wall, another summand could cancel the pole, so
//! wall-free candidates are exactly the points the ledger certifies.
//!
//! In the coordinates dual to the distinguished cocharacters the half-sum
//! of positive roots is `rho = (1 + (r-1)d, ..., 1 + d, 1)` and the
//! character line is `chi_s = (s, ..., s) + (d/2)(1 - r, 3 - r, ..., r - 1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{half, rat, rat_string, Rat};
use crate::reducibility::{CharacterClass, ChiDTag};
use crate::zeta::{full_ledger, AffineArg, ZetaProfile};

/// The restricted-torus coordinates of the character line at a numeric `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiSCoordinates {
    pub r: usize,
    pub d: usize,
    pub s: Rat,
    /// `s_i = s + (d/2)(2i - 1 - r)`, `i = 1..r`; consecutive differences
    /// are exactly `d`.
    pub coords: Vec<Rat>,
}

/// Coordinates of the character line with `s` kept formal.
pub fn chi_s_affine(r: usize, d: usize) -> Vec<AffineArg> {
    (1..=r as i64)
        .map(|i| AffineArg::shift(half(d as i64 * (2 * i - 1 - r as i64))))
        .collect()
}

pub fn chi_s_coords(r: usize, d: usize, s: Rat) -> ChiSCoordinates {
    let coords = chi_s_affine(r, d).iter().map(|a| a.eval(s)).collect();
    ChiSCoordinates { r, d, s, coords }
}

/// `rho = (1 + (r-1)d, ..., 1 + d, 1)`.
pub fn rho_coords(r: usize, d: usize) -> Vec<Rat> {
    (1..=r as i64)
        .map(|i| rat(1 + (r as i64 - i) * d as i64))
        .collect()
}

/// A wall containing the character. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WallHit {
    /// `s_i = 0`
    Coordinate { i: usize },
    /// `s_i - s_j = 0`, `i < j`
    Difference { i: usize, j: usize },
    /// `s_i + s_j = 0`, `i < j`
    Sum { i: usize, j: usize },
}

impl fmt::Display for WallHit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WallHit::Coordinate { i } => write!(f, "s_{i} = 0"),
            WallHit::Difference { i, j } => write!(f, "s_{i} - s_{j} = 0"),
            WallHit::Sum { i, j } => write!(f, "s_{i} + s_{j} = 0"),
        }
    }
}

/// All walls containing the character; empty exactly when it is regular.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WallReport {
    pub hits: Vec<WallHit>,
}

impl WallReport {
    pub fn is_regular(&self) -> bool {
        self.hits.is_empty()
    }
}

pub fn wall_check(c: &ChiSCoordinates) -> WallReport {
    let mut hits = Vec::new();
    let zero = rat(0);
    for (i, &si) in c.coords.iter().enumerate() {
        if si == zero {
            hits.push(WallHit::Coordinate { i: i + 1 });
        }
    }
    for i in 0..c.coords.len() {
        for j in (i + 1)..c.coords.len() {
            if c.coords[i] == c.coords[j] {
                hits.push(WallHit::Difference { i: i + 1, j: j + 1 });
            }
            if c.coords[i] + c.coords[j] == zero {
                hits.push(WallHit::Sum { i: i + 1, j: j + 1 });
            }
        }
    }
    WallReport { hits }
}

/// What sits in the residue at a certified pole.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueNote {
    /// The top point carries the trivial representation.
    TrivialRepresentation,
    /// The lower points carry the co-socle; its square integrability is an
    /// annotation recorded from the Aubert-duality argument, not a computed
    /// fact.
    CosocleSquareIntegrable,
}

impl ResidueNote {
    pub fn as_str(&self) -> &'static str {
        match self {
            ResidueNote::TrivialRepresentation => "trivial_representation",
            ResidueNote::CosocleSquareIntegrable => "cosocle_square_integrable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalPole {
    pub location: Rat,
    pub order: i32,
    pub residue: ResidueNote,
}

/// A candidate pole of the c-function summand that was discarded because
/// the character sits on a wall there, so cancellation against another
/// summand cannot be ruled out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectedCandidate {
    pub location: Rat,
    pub walls: WallReport,
}

/// Certified simple poles of the Eisenstein series, positive `s` only.
#[derive(Debug, Clone)]
pub struct GlobalPoleReport {
    pub r: usize,
    pub d: usize,
    pub poles: Vec<GlobalPole>,
    pub rejected: Vec<RejectedCandidate>,
    /// Standing annotation on the residue tags.
    pub note: &'static str,
}

const RESIDUE_NOTE: &str = "square integrability of the co-socle residues is an annotation \
carried over from the Aubert-duality argument, not a computed fact; the \
computed content is the c-function ledger and the wall-regularity filter";

/// Assembles the closed-form c-function under the completed global profile,
/// keeps the positive-location poles, and filters each through the wall
/// check at its own character coordinates.
///
/// Hypotheses gate: `d` divisible by 4, trivial discriminant character and
/// the quadratic-space conditions asserted via `hypotheses_ok`. The
/// rank-one case `r = 1` is accepted as a degenerate base (its ledger is
/// computed from `Z(s)/Z(s+1)` directly) even though the tower machinery
/// has nothing to say there.
pub fn global_pole_ledger(
    r: usize,
    d: usize,
    chi_d: ChiDTag,
    hypotheses_ok: bool,
) -> Result<GlobalPoleReport> {
    if r == 0 {
        return Err(Error::InvalidInput("rank must be at least 1".to_string()));
    }
    if r >= 2 {
        if d % 4 != 0 {
            return Err(Error::OutOfScope(format!(
                "the pole list is certified only for d divisible by 4 (got d = {d})"
            )));
        }
        if chi_d != ChiDTag::Trivial {
            return Err(Error::OutOfScope(
                "the pole list is certified only for trivial discriminant character".to_string(),
            ));
        }
        if !hypotheses_ok {
            return Err(Error::OutOfScope(
                "the split-or-anisotropic hypotheses on the quadratic space were not asserted"
                    .to_string(),
            ));
        }
    }

    let zp = crate::cfunction::closed_form_c(r, d);
    let top = rat(1) + half((r as i64 - 1) * d as i64);
    let window = (rat(0), top + rat(1));
    let ledger = full_ledger(&zp, &ZetaProfile::GlobalCompleted, window)?;

    let mut poles = Vec::new();
    let mut rejected = Vec::new();
    for entry in &ledger.entries {
        if entry.order <= 0 || entry.location <= rat(0) {
            continue;
        }
        let walls = wall_check(&chi_s_coords(r, d, entry.location));
        if walls.is_regular() {
            let residue = if entry.location == top {
                ResidueNote::TrivialRepresentation
            } else {
                ResidueNote::CosocleSquareIntegrable
            };
            poles.push(GlobalPole {
                location: entry.location,
                order: entry.order,
                residue,
            });
        } else {
            rejected.push(RejectedCandidate {
                location: entry.location,
                walls,
            });
        }
    }
    if let Some(bad) = poles.iter().find(|p| p.order > 1) {
        return Err(Error::Inconsistency(format!(
            "certified pole at {} has order {}; the poles here are at most simple",
            rat_string(bad.location),
            bad.order
        )));
    }
    Ok(GlobalPoleReport {
        r,
        d,
        poles,
        rejected,
        note: RESIDUE_NOTE,
    })
}

/// The candidate locations `s_0 > 0` where a pole is possible at all, by
/// case analysis on `(r, d, chi_D, chi)`. This is the upper bound the
/// certified ledger must meet.
pub fn possible_pole_candidates(
    r: usize,
    d: usize,
    chi_d: ChiDTag,
    chi: &CharacterClass,
) -> Result<Vec<Rat>> {
    let resolved = chi.resolve(chi_d)?;
    match chi_d {
        ChiDTag::Trivial => {
            // Poles only for the trivial character, at 1, 1 + d/2, ...
            if resolved.is_trivial() {
                Ok((0..r as i64).map(|i| rat(1) + half(i * d as i64)).collect())
            } else {
                Ok(Vec::new())
            }
        }
        ChiDTag::Undefined => {
            if r != 2 {
                return Err(Error::OutOfScope(format!(
                    "odd-dimensional coordinate space with rank {r}: only r = 2 is modeled"
                )));
            }
            if d % 2 == 0 {
                return Err(Error::InvalidInput(
                    "an undefined discriminant tag belongs to odd d".to_string(),
                ));
            }
            let mut out = vec![half(1)];
            if resolved.is_trivial() {
                out.push(rat(1) + half(d as i64)); // n + 1/2 for d = 2n - 1
            }
            Ok(out)
        }
        ChiDTag::QuadraticField => {
            if r != 2 {
                return Err(Error::OutOfScope(format!(
                    "nontrivial discriminant with rank {r}: only r = 2 is modeled"
                )));
            }
            if d % 2 != 0 {
                return Err(Error::InvalidInput(
                    "a quadratic-field discriminant tag belongs to even d".to_string(),
                ));
            }
            let mut out = Vec::new();
            if resolved.is_chi_k() {
                out.push(rat(1));
            }
            if resolved.is_trivial() {
                out.push(rat(1) + half(d as i64)); // n for d = 2n - 2
            }
            Ok(out)
        }
    }
}

/// The unramified local factor of the Fourier–Jacobi expansion of the
/// constant term: `1 - chi(pi) q^-(s + 1 + (r-1)d/2)`, exact whenever the
/// exponent is an integer.
pub fn unramified_fj_factor(r: usize, d: usize, chi_at_unif: i8, q: u64, s: Rat) -> Result<Rat> {
    if r == 0 {
        return Err(Error::InvalidInput("rank must be at least 1".to_string()));
    }
    let sign = match chi_at_unif {
        1 => rat(1),
        -1 => rat(-1),
        0 => {
            return Err(Error::OutOfScope(
                "ramified characters are excluded; the character value at a uniformizer must be +1 or -1"
                    .to_string(),
            ))
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "character value at a uniformizer must be +1 or -1, got {other}"
            )))
        }
    };
    let exponent = s + rat(1) + half((r as i64 - 1) * d as i64);
    if !exponent.is_integer() {
        return Err(Error::OutOfScope(format!(
            "q^-({}) is irrational; only integer exponents have an exact value",
            rat_string(exponent)
        )));
    }
    let e = *exponent.numer();
    let magnitude = |power: u32| -> Result<i64> {
        (q as i64).checked_pow(power).ok_or_else(|| {
            Error::InvalidInput(format!("q^{power} overflows exact integer arithmetic"))
        })
    };
    let q_pow = if e >= 0 {
        let p = magnitude(
            u32::try_from(e)
                .map_err(|_| Error::InvalidInput(format!("exponent {e} is too large")))?,
        )?;
        Rat::new(1, p)
    } else {
        let p = magnitude(
            u32::try_from(-e)
                .map_err(|_| Error::InvalidInput(format!("exponent {e} is too large")))?,
        )?;
        rat(p)
    };
    Ok(rat(1) - sign * q_pow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_s_examples() {
        assert_eq!(
            chi_s_coords(3, 8, rat(9)).coords,
            vec![rat(1), rat(9), rat(17)]
        );
        assert_eq!(chi_s_coords(2, 2, rat(1)).coords, vec![rat(0), rat(2)]);
    }

    #[test]
    fn chi_s_defining_constraints() {
        for (r, d) in [(1usize, 0usize), (2, 2), (2, 4), (3, 8), (4, 4), (6, 8)] {
            let s = half(7);
            let c = chi_s_coords(r, d, s);
            for i in 1..r {
                assert_eq!(c.coords[i] - c.coords[i - 1], rat(d as i64));
            }
            // At s = -1 - (r-1)d/2 the character is -rho.
            let s0 = rat(-1) - half((r as i64 - 1) * d as i64);
            let anchored = chi_s_coords(r, d, s0);
            let minus_rho: Vec<Rat> = rho_coords(r, d).iter().map(|x| -x).collect();
            assert_eq!(anchored.coords, minus_rho);
        }
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_coords(3, 8), vec![rat(17), rat(9), rat(1)]);
        assert_eq!(rho_coords(1, 0), vec![rat(1)]);
        assert_eq!(rho_coords(2, 4), vec![rat(5), rat(1)]);
    }

    #[test]
    fn wall_checks() {
        assert!(wall_check(&chi_s_coords(3, 8, rat(9))).is_regular());
        assert!(wall_check(&chi_s_coords(2, 4, rat(3))).is_regular());
        let hit = wall_check(&chi_s_coords(2, 2, rat(1)));
        assert_eq!(hit.hits, vec![WallHit::Coordinate { i: 1 }]);
        // A symmetric pair: (r, d) = (2, 4) at s = 2 gives (0 - 4 + 2, 2 + ...)
        let c = chi_s_coords(2, 4, rat(0));
        assert_eq!(c.coords, vec![rat(-2), rat(2)]);
        assert_eq!(wall_check(&c).hits, vec![WallHit::Sum { i: 1, j: 2 }]);
    }

    #[test]
    fn reducibility_points_are_wall_regular_for_d_divisible_by_4() {
        for d in [4usize, 8] {
            for r in 1..=6usize {
                for i in 0..r as i64 {
                    let s0 = rat(1) + half(i * d as i64);
                    let report = wall_check(&chi_s_coords(r, d, s0));
                    assert!(report.is_regular(), "r = {r}, d = {d}, s0 = {s0}");
                }
            }
        }
    }

    #[test]
    fn pole_ledger_3_8() {
        let report = global_pole_ledger(3, 8, ChiDTag::Trivial, true).unwrap();
        let locations: Vec<Rat> = report.poles.iter().map(|p| p.location).collect();
        assert_eq!(locations, vec![rat(1), rat(5), rat(9)]);
        assert!(report.poles.iter().all(|p| p.order == 1));
        assert_eq!(report.poles[2].residue, ResidueNote::TrivialRepresentation);
        assert_eq!(
            report.poles[0].residue,
            ResidueNote::CosocleSquareIntegrable
        );
        // The wall filter is what removed the remaining candidates 4 and 8.
        let rejected: Vec<Rat> = report.rejected.iter().map(|c| c.location).collect();
        assert_eq!(rejected, vec![rat(4), rat(8)]);
    }

    #[test]
    fn pole_ledger_2_4() {
        let report = global_pole_ledger(2, 4, ChiDTag::Trivial, true).unwrap();
        let locations: Vec<Rat> = report.poles.iter().map(|p| p.location).collect();
        assert_eq!(locations, vec![rat(1), rat(3)]);
    }

    #[test]
    fn pole_ledger_degenerate_base() {
        let report = global_pole_ledger(1, 0, ChiDTag::Trivial, true).unwrap();
        let locations: Vec<Rat> = report.poles.iter().map(|p| p.location).collect();
        assert_eq!(locations, vec![rat(1)]);
        assert_eq!(report.poles[0].residue, ResidueNote::TrivialRepresentation);
    }

    #[test]
    fn pole_ledger_refusals() {
        assert!(matches!(
            global_pole_ledger(2, 2, ChiDTag::Trivial, true),
            Err(Error::OutOfScope(_))
        ));
        assert!(matches!(
            global_pole_ledger(3, 8, ChiDTag::QuadraticField, true),
            Err(Error::OutOfScope(_))
        ));
        assert!(matches!(
            global_pole_ledger(3, 8, ChiDTag::Trivial, false),
            Err(Error::OutOfScope(_))
        ));
    }

    #[test]
    fn candidates_match_the_case_analysis() {
        let trivial = CharacterClass::Trivial;
        let quad = CharacterClass::QuadraticNontrivial;
        let chi_k = CharacterClass::ChiK;

        let c = possible_pole_candidates(3, 8, ChiDTag::Trivial, &trivial).unwrap();
        assert_eq!(c, vec![rat(1), rat(5), rat(9)]);
        assert!(possible_pole_candidates(3, 8, ChiDTag::Trivial, &quad)
            .unwrap()
            .is_empty());

        // d = 2n - 1: candidates 1/2 and, for trivial chi, n + 1/2.
        let c = possible_pole_candidates(2, 5, ChiDTag::Undefined, &quad).unwrap();
        assert_eq!(c, vec![half(1)]);
        let c = possible_pole_candidates(2, 5, ChiDTag::Undefined, &trivial).unwrap();
        assert_eq!(c, vec![half(1), half(7)]);

        // d = 2n - 2 with quadratic-field discriminant.
        let c = possible_pole_candidates(2, 4, ChiDTag::QuadraticField, &chi_k).unwrap();
        assert_eq!(c, vec![rat(1)]);
        let c = possible_pole_candidates(2, 4, ChiDTag::QuadraticField, &trivial).unwrap();
        assert_eq!(c, vec![rat(3)]);

        assert!(matches!(
            possible_pole_candidates(3, 4, ChiDTag::QuadraticField, &chi_k),
            Err(Error::OutOfScope(_))
        ));
    }

    #[test]
    fn ledger_meets_candidates() {
        for (r, d) in [(2usize, 4usize), (3, 4), (4, 4), (2, 8), (3, 8)] {
            let report = global_pole_ledger(r, d, ChiDTag::Trivial, true).unwrap();
            let locations: Vec<Rat> = report.poles.iter().map(|p| p.location).collect();
            let candidates =
                possible_pole_candidates(r, d, ChiDTag::Trivial, &CharacterClass::Trivial).unwrap();
            assert_eq!(locations, candidates, "(r, d) = ({r}, {d})");
        }
    }

    #[test]
    fn fj_factor_values() {
        assert_eq!(
            unramified_fj_factor(3, 8, 1, 2, rat(0)).unwrap(),
            Rat::new(511, 512)
        );
        assert_eq!(
            unramified_fj_factor(3, 8, -1, 2, rat(0)).unwrap(),
            Rat::new(513, 512)
        );
        // s -> infinity limit is 1: large s gives a factor close to 1.
        let v = unramified_fj_factor(3, 8, 1, 2, rat(40)).unwrap();
        assert!((rat(1) - v) > rat(0) && (rat(1) - v) < Rat::new(1, 1 << 48));
        assert!(matches!(
            unramified_fj_factor(3, 8, 0, 2, rat(0)),
            Err(Error::OutOfScope(_))
        ));
        assert!(matches!(
            unramified_fj_factor(2, 5, 1, 3, rat(0)),
            Err(Error::OutOfScope(_))
        ));
    }
}
