//! Intertwining c-functions, three independent ways.
//!
//! For the degenerate principal series attached to a qualifying parabolic,
//! the standard intertwining operator scales the spherical vector by a
//! scalar c(s) that is a finite product of zeta-factor quotients. This
//! module computes it
//!
//! * by brute force, as the product over the inversion set of
//!   `w0 = w_G w_M` of `Z(<lambda_s, a^v>)/Z(<lambda_s, a^v> + 1)` with
//!   `lambda_s = s*omega_j - rho_M`,
//! * in closed form from the invariants `(r, d)` alone,
//! * for the quaternionic forms, as a rank-one factorization over the
//!   restricted type-C system, where the short rank-one factor contributes
//!   `Z(t)/Z(t+2)` instead of `Z(t)/Z(t+1)`.
//!
//! The three routes deliberately share no intermediate simplification, so
//! agreement between them is a real cross-check.

use crate::error::{Error, Result};
use crate::jordan::{ParabolicDatum, RestrictedRootDatum};
use crate::rational::{half, rat, Rat};
use crate::root_system::Weight;
use crate::zeta::{AffineArg, ZetaProduct};

/// The line of characters `lambda_s = s*omega_j - rho_M` the degenerate
/// series embeds into, split into the s-linear and constant weights.
#[derive(Debug, Clone)]
pub struct DegenerateCharacter {
    s_weight: Weight,
    const_weight: Weight,
}

impl DegenerateCharacter {
    pub fn for_parabolic(pd: &ParabolicDatum) -> DegenerateCharacter {
        let rs = pd.root_system();
        DegenerateCharacter {
            s_weight: rs.fundamental_weight(pd.node()),
            const_weight: rs.half_sum_of_positive_roots(pd.levi_nodes()).negated(),
        }
    }

    /// `<lambda_s, alpha^v>` as an affine function of s.
    pub fn pairing(&self, pd: &ParabolicDatum, alpha: &crate::root_system::Root) -> AffineArg {
        let rs = pd.root_system();
        let k = rs.pairing_weight(&self.s_weight, alpha);
        let c = rs.pairing_weight(&self.const_weight, alpha);
        assert!(
            k.is_integer() && *k.numer() >= 1,
            "the s-coefficient of a nilradical pairing must be a positive integer, got {k}"
        );
        AffineArg::new(*k.numer(), c)
    }
}

/// Brute-force product over the inversion set of `w0`. Exact for the
/// simply-laced split forms; still well defined for B and C, where factors
/// with `k = 2` appear and the closed form below no longer applies.
pub fn gk_cfunction(pd: &ParabolicDatum) -> ZetaProduct {
    let rs = pd.root_system();
    let w0 = rs.relative_longest_element(pd.node());
    let inversions = rs.inversion_set(&w0);
    debug_assert_eq!(inversions, pd.nilradical_roots());
    let lambda = DegenerateCharacter::for_parabolic(pd);
    let mut product = ZetaProduct::one();
    for alpha in &inversions {
        let t = lambda.pairing(pd, alpha);
        product = product.multiply(&ZetaProduct::quotient(t, t.plus(rat(1))));
    }
    product.normalize()
}

/// Closed form from the invariants alone:
/// `prod_{i=0}^{r-1} Z(s - i*d/2)/Z(s + i*d/2 + 1)`.
pub fn closed_form_c(r: usize, d: usize) -> ZetaProduct {
    let mut product = ZetaProduct::one();
    for i in 0..r as i64 {
        let shift = half(i * d as i64);
        let num = AffineArg::shift(-shift);
        let den = AffineArg::shift(shift + rat(1));
        product = product.multiply(&ZetaProduct::quotient(num, den));
    }
    product.normalize()
}

/// Closed form for the quaternionic forms (`d = 4` anisotropic):
/// `prod_{i=0}^{r-1} Z(s - 2i)/Z(s +- (2i + 1))` with the denominator signs
/// alternating in `i`, anchored at `+` for `i = r - 1`.
pub fn quaternionic_closed_form(r: usize) -> ZetaProduct {
    let mut product = ZetaProduct::one();
    for i in 0..r as i64 {
        let sign: i64 = if (r as i64 - 1 - i) % 2 == 0 { 1 } else { -1 };
        let num = AffineArg::shift(rat(-2 * i));
        let den = AffineArg::shift(rat(sign * (2 * i + 1)));
        product = product.multiply(&ZetaProduct::quotient(num, den));
    }
    product.normalize()
}

/// Rank-one factorization over the restricted type-C system. Each long
/// restricted root `2e_i` on the nilradical side contributes the split
/// rank-one factor `Z(t)/Z(t+1)`; each short one `e_i + e_j` contributes the
/// quaternionic rank-one factor `Z(t)/Z(t+2)`. The coordinate pairing `t`
/// of a restricted root `g` against the character `(s_1, ..., s_r)` is
/// `(g . s)/2`. Only short multiplicity 4 has a rank-one evaluation here.
pub fn restricted_cfunction(
    rrd: &RestrictedRootDatum,
    chi_coords: &[AffineArg],
) -> Result<ZetaProduct> {
    if rrd.short_mult != 4 {
        return Err(Error::OutOfScope(format!(
            "no rank-one evaluation for short multiplicity {}; only the quaternionic case (4) is modeled",
            rrd.short_mult
        )));
    }
    if chi_coords.len() != rrd.r {
        return Err(Error::InvalidInput(format!(
            "character has {} coordinates for restricted rank {}",
            chi_coords.len(),
            rrd.r
        )));
    }
    let mut product = ZetaProduct::one();
    for root in rrd.nilradical_positive_roots() {
        // t = (g . s)/2 exactly; k and c are combined separately.
        let mut twice_k = 0i64;
        let mut twice_c = rat(0);
        for (g, arg) in root.coords.iter().zip(chi_coords) {
            twice_k += g * arg.k();
            twice_c += Rat::from_integer(*g) * arg.c();
        }
        if twice_k % 2 != 0 || twice_k <= 0 {
            return Err(Error::InvalidInput(format!(
                "restricted pairing has s-coefficient {twice_k}/2"
            )));
        }
        let t = AffineArg::new(twice_k / 2, twice_c / rat(2));
        let shift = if root.long { rat(1) } else { rat(2) };
        product = product.multiply(&ZetaProduct::quotient(t, t.plus(shift)));
    }
    Ok(product.normalize())
}

/// The restricted-route c-function for the rank-`r` quaternionic form, with
/// the character coordinates `s_i = s + 2(2i - 1 - r)` of the degenerate
/// line.
pub fn quaternionic_restricted(r: usize) -> Result<ZetaProduct> {
    let rrd = crate::jordan::restricted_datum(r, 4)?;
    let coords = crate::eisenstein::chi_s_affine(r, 4);
    restricted_cfunction(&rrd, &coords)
}

/// Partial sums of the geometric expansion of the quaternionic rank-one
/// integral:
///
/// ```text
/// c(s) = 1 + (q^2 - 1) q^-(s+2) + (q^4 - q^2) q^-2(s+2) + ...
/// ```
///
/// converging to `(1 - q^-(s+2))/(1 - q^-s)` for `s > 0`.
pub fn sl2_quaternion_series(q: u64, s: f64, terms: usize) -> Result<f64> {
    if terms < 1 {
        return Err(Error::InvalidInput(
            "at least one term is required".to_string(),
        ));
    }
    if s <= 0.0 {
        return Err(Error::Divergent(format!(
            "the expansion diverges for s = {s} <= 0"
        )));
    }
    let qf = q as f64;
    // The n-th term (q^2n - q^(2n-2)) q^-n(s+2) equals (1 - q^-2) q^-ns;
    // accumulating it in that form keeps every intermediate finite no
    // matter how many terms are requested.
    let ratio = qf.powf(-s);
    let scale = 1.0 - qf.powi(-2);
    let mut power = 1.0;
    let mut sum = 1.0;
    for _ in 1..terms {
        power *= ratio;
        sum += scale * power;
    }
    Ok(sum)
}

/// The limit of [`sl2_quaternion_series`]: `(1 - q^-(s+2))/(1 - q^-s)`.
pub fn sl2_quaternion_closed(q: u64, s: f64) -> f64 {
    let qf = q as f64;
    (1.0 - qf.powf(-(s + 2.0))) / (1.0 - qf.powf(-s))
}
