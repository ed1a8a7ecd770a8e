//! Formal products of zeta factors `Z(k*s + c)` with exact cancellation.
//!
//! A [`ZetaProduct`] is a quotient of two multisets of affine arguments.
//! Nothing is ever evaluated implicitly: cancellation is multiset
//! cancellation, and questions about poles and zeros are answered relative
//! to an explicit [`ZetaProfile`] describing which zeta function the symbol
//! `Z` stands for. Evaluation happens only in [`eval_numeric`], and only for
//! the p-adic profile where `Z(x) = (1 - q^-x)^-1`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat_string, Rat};

/// The argument `k*s + c` of one zeta factor. `k` is a positive integer and
/// `c` an exact rational; equality and ordering are structural on `(k, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineArg {
    k: i64,
    c: Rat,
}

impl AffineArg {
    pub fn new(k: i64, c: Rat) -> AffineArg {
        assert!(k >= 1, "the coefficient of s must be a positive integer");
        AffineArg { k, c }
    }

    /// The argument `s + c`.
    pub fn shift(c: Rat) -> AffineArg {
        AffineArg::new(1, c)
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn c(&self) -> Rat {
        self.c
    }

    pub fn plus(&self, delta: Rat) -> AffineArg {
        AffineArg {
            k: self.k,
            c: self.c + delta,
        }
    }

    pub fn eval(&self, s: Rat) -> Rat {
        Rat::from_integer(self.k) * s + self.c
    }

    pub fn eval_f64(&self, s: f64) -> f64 {
        self.k as f64 * s + self.c.to_f64().expect("small rational")
    }

    /// Solves `k*s + c = x` for `s`.
    pub fn solve_for(&self, x: Rat) -> Rat {
        (x - self.c) / Rat::from_integer(self.k)
    }
}

impl fmt::Display for AffineArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "s")?;
        } else {
            write!(f, "{}s", self.k)?;
        }
        if !self.c.is_zero() {
            if self.c.is_positive() {
                write!(f, "+{}", rat_string(self.c))?;
            } else {
                write!(f, "-{}", rat_string(-self.c))?;
            }
        }
        Ok(())
    }
}

/// A formal quotient of multisets of zeta factors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZetaProduct {
    numer: BTreeMap<AffineArg, u32>,
    denom: BTreeMap<AffineArg, u32>,
}

fn add_factor(map: &mut BTreeMap<AffineArg, u32>, arg: AffineArg, mult: u32) {
    if mult > 0 {
        *map.entry(arg).or_insert(0) += mult;
    }
}

impl ZetaProduct {
    /// The empty product (the constant 1).
    pub fn one() -> ZetaProduct {
        ZetaProduct::default()
    }

    /// The single factor `Z(arg)`.
    pub fn zeta(arg: AffineArg) -> ZetaProduct {
        let mut numer = BTreeMap::new();
        numer.insert(arg, 1);
        ZetaProduct {
            numer,
            denom: BTreeMap::new(),
        }
    }

    /// `Z(num)/Z(den)` — the shape every rank-one factor takes.
    pub fn quotient(num: AffineArg, den: AffineArg) -> ZetaProduct {
        let mut zp = ZetaProduct::default();
        add_factor(&mut zp.numer, num, 1);
        add_factor(&mut zp.denom, den, 1);
        zp
    }

    /// Raw constructor; does not cancel.
    pub fn from_factors(
        numer: impl IntoIterator<Item = AffineArg>,
        denom: impl IntoIterator<Item = AffineArg>,
    ) -> ZetaProduct {
        let mut zp = ZetaProduct::default();
        for a in numer {
            add_factor(&mut zp.numer, a, 1);
        }
        for a in denom {
            add_factor(&mut zp.denom, a, 1);
        }
        zp
    }

    pub fn numer_factors(&self) -> impl Iterator<Item = (AffineArg, u32)> + '_ {
        self.numer.iter().map(|(&a, &m)| (a, m))
    }

    pub fn denom_factors(&self) -> impl Iterator<Item = (AffineArg, u32)> + '_ {
        self.denom.iter().map(|(&a, &m)| (a, m))
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_empty() && self.denom.is_empty()
    }

    /// True when every factor has `k = 1` and an integer shift.
    pub fn has_only_integer_shifts(&self) -> bool {
        self.numer
            .keys()
            .chain(self.denom.keys())
            .all(|a| a.k == 1 && a.c.is_integer())
    }

    /// Maximal multiset cancellation between numerator and denominator.
    /// Idempotent; the result has disjoint numerator and denominator.
    pub fn normalize(&self) -> ZetaProduct {
        let mut numer = BTreeMap::new();
        let mut denom = BTreeMap::new();
        for (&arg, &n) in &self.numer {
            let d = self.denom.get(&arg).copied().unwrap_or(0);
            if n > d {
                numer.insert(arg, n - d);
            }
        }
        for (&arg, &d) in &self.denom {
            let n = self.numer.get(&arg).copied().unwrap_or(0);
            if d > n {
                denom.insert(arg, d - n);
            }
        }
        ZetaProduct { numer, denom }
    }

    /// Multiset union followed by normalization.
    pub fn multiply(&self, other: &ZetaProduct) -> ZetaProduct {
        let mut zp = self.clone();
        for (&arg, &m) in &other.numer {
            add_factor(&mut zp.numer, arg, m);
        }
        for (&arg, &m) in &other.denom {
            add_factor(&mut zp.denom, arg, m);
        }
        zp.normalize()
    }

    pub fn inverse(&self) -> ZetaProduct {
        ZetaProduct {
            numer: self.denom.clone(),
            denom: self.numer.clone(),
        }
    }

    /// Canonical string form, factors ordered by `(k, c)`:
    /// `Z(s-4)*Z(s)/(Z(s+1)*Z(s+5))`.
    pub fn canonical_string(&self) -> String {
        fn side(map: &BTreeMap<AffineArg, u32>) -> String {
            map.iter()
                .map(|(arg, &m)| {
                    if m == 1 {
                        format!("Z({arg})")
                    } else {
                        format!("Z({arg})^{m}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        }
        match (self.numer.is_empty(), self.denom.is_empty()) {
            (true, true) => "1".to_string(),
            (false, true) => side(&self.numer),
            (true, false) => format!("1/({})", side(&self.denom)),
            (false, false) => format!("{}/({})", side(&self.numer), side(&self.denom)),
        }
    }
}

impl fmt::Display for ZetaProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

/// Which zeta function the symbol `Z` stands for, restricted to real
/// arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaProfile {
    /// `Z(x) = (1 - q^-x)^-1`: a simple pole at `x = 0`, no zeros.
    PAdic { q: u64 },
    /// `Z(x) = pi^(-x/2) Gamma(x/2)`: simple poles at `0, -2, -4, ...`,
    /// no zeros.
    RealArchimedean,
    /// The completed global zeta: simple poles at `0` and `1`, no zeros at
    /// rational points outside the open interval `(0, 1)`. Orders strictly
    /// inside `(0, 1)` are refused rather than asserted.
    GlobalCompleted,
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut n = q;
    let mut p = 0;
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            p = f;
            while n % f == 0 {
                n /= f;
            }
            break;
        }
        f += 1;
    }
    if p == 0 {
        return true; // q itself is prime
    }
    n == 1
}

impl ZetaProfile {
    pub fn p_adic(q: u64) -> Result<ZetaProfile> {
        if is_prime_power(q) {
            Ok(ZetaProfile::PAdic { q })
        } else {
            Err(Error::InvalidInput(format!(
                "residue cardinality {q} is not a prime power"
            )))
        }
    }

    /// Pole order of `Z` at a real rational argument: `+1` for a simple
    /// pole, `0` otherwise. The global profile refuses arguments strictly
    /// inside `(0, 1)`.
    pub fn argument_pole_order(&self, x: Rat) -> Result<i32> {
        let zero = Rat::from_integer(0);
        let one = Rat::from_integer(1);
        match self {
            ZetaProfile::PAdic { .. } => Ok(if x == zero { 1 } else { 0 }),
            ZetaProfile::RealArchimedean => {
                let even_nonpositive = x <= zero && x.is_integer() && x.numer().rem_euclid(2) == 0;
                Ok(if even_nonpositive { 1 } else { 0 })
            }
            ZetaProfile::GlobalCompleted => {
                if x == zero || x == one {
                    Ok(1)
                } else if x > zero && x < one {
                    Err(Error::OutOfScope(format!(
                        "the completed global profile does not decide orders at {} inside (0, 1)",
                        rat_string(x)
                    )))
                } else {
                    Ok(0)
                }
            }
        }
    }

    /// Real pole locations of `Z` whose preimage under `k*s + c` can land in
    /// `[lo, hi]`; used by the ledger scan.
    fn pole_locations_for(&self, arg: AffineArg, lo: Rat, hi: Rat) -> Vec<Rat> {
        match self {
            ZetaProfile::PAdic { .. } => vec![Rat::from_integer(0)],
            ZetaProfile::GlobalCompleted => {
                vec![Rat::from_integer(0), Rat::from_integer(1)]
            }
            ZetaProfile::RealArchimedean => {
                // Poles at even integers <= 0; bound them by the window.
                let min_arg = arg.eval(lo);
                let max_arg = arg.eval(hi);
                let top = max_arg.floor().to_integer().min(0);
                let bottom = min_arg.ceil().to_integer();
                let mut out = Vec::new();
                let mut p = if top.rem_euclid(2) == 0 { top } else { top - 1 };
                while p >= bottom {
                    out.push(Rat::from_integer(p));
                    p -= 2;
                }
                out
            }
        }
    }
}

/// Locations with a nonzero order: positive order = pole, negative = zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LedgerEntry {
    pub location: Rat,
    pub order: i32,
}

/// Pole/zero ledger of a [`ZetaProduct`] over a window, locations strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PoleLedger {
    pub entries: Vec<LedgerEntry>,
}

impl PoleLedger {
    pub fn poles(&self) -> Vec<Rat> {
        self.entries
            .iter()
            .filter(|e| e.order > 0)
            .map(|e| e.location)
            .collect()
    }

    pub fn zeros(&self) -> Vec<Rat> {
        self.entries
            .iter()
            .filter(|e| e.order < 0)
            .map(|e| e.location)
            .collect()
    }

    pub fn order_at(&self, location: Rat) -> i32 {
        self.entries
            .iter()
            .find(|e| e.location == location)
            .map_or(0, |e| e.order)
    }
}

impl fmt::Display for PoleLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("(no poles or zeros)");
        }
        let body: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("{}: {:+}", rat_string(e.location), e.order))
            .collect();
        f.write_str(&body.join(", "))
    }
}

/// Total order of `zp` at `s0` under a profile: numerator orders minus
/// denominator orders, counted with multiplicity.
pub fn pole_order_at(zp: &ZetaProduct, profile: &ZetaProfile, s0: Rat) -> Result<i32> {
    let mut total = 0;
    for (arg, mult) in zp.numer_factors() {
        total += profile.argument_pole_order(arg.eval(s0))? * mult as i32;
    }
    for (arg, mult) in zp.denom_factors() {
        total -= profile.argument_pole_order(arg.eval(s0))? * mult as i32;
    }
    Ok(total)
}

/// Scans the window for every `s` where some factor argument hits a profile
/// pole, and keeps the locations of nonzero total order.
pub fn full_ledger(
    zp: &ZetaProduct,
    profile: &ZetaProfile,
    window: (Rat, Rat),
) -> Result<PoleLedger> {
    let (lo, hi) = window;
    if lo > hi {
        return Err(Error::InvalidInput(format!(
            "empty window [{}, {}]",
            rat_string(lo),
            rat_string(hi)
        )));
    }
    let mut candidates: Vec<Rat> = Vec::new();
    for (arg, _) in zp.numer_factors().chain(zp.denom_factors()) {
        for p in profile.pole_locations_for(arg, lo, hi) {
            let s = arg.solve_for(p);
            if s >= lo && s <= hi && !candidates.contains(&s) {
                candidates.push(s);
            }
        }
    }
    candidates.sort();
    let mut entries = Vec::new();
    for s in candidates {
        let order = pole_order_at(zp, profile, s)?;
        if order != 0 {
            entries.push(LedgerEntry { location: s, order });
        }
    }
    Ok(PoleLedger { entries })
}

/// Numeric value under the p-adic profile:
/// `prod (1 - q^-(k*s+c))^-1` over the numerator divided by the same over
/// the denominator. Refuses factors whose argument vanishes at `s`.
pub fn eval_numeric(zp: &ZetaProduct, profile: &ZetaProfile, s: f64) -> Result<f64> {
    let &ZetaProfile::PAdic { q } = profile else {
        return Err(Error::OutOfScope(
            "numeric evaluation is defined only for the p-adic profile".to_string(),
        ));
    };
    let factor = |arg: AffineArg| -> Result<f64> {
        let x = arg.eval_f64(s);
        if x == 0.0 {
            return Err(Error::Singular(format!(
                "factor Z({arg}) is singular at s = {s}"
            )));
        }
        Ok(1.0 - (q as f64).powf(-x))
    };
    let mut value = 1.0;
    for (arg, mult) in zp.numer_factors() {
        value /= factor(arg)?.powi(mult as i32);
    }
    for (arg, mult) in zp.denom_factors() {
        value *= factor(arg)?.powi(mult as i32);
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{half, rat};

    fn z(c: i64) -> AffineArg {
        AffineArg::shift(rat(c))
    }

    #[test]
    fn normalize_cancels_multisets() {
        let zp = ZetaProduct::from_factors([z(0)], [z(0)]);
        assert!(zp.normalize().is_one());

        let zp = ZetaProduct::from_factors([z(0), z(2)], [z(2), z(3)]);
        assert_eq!(zp.normalize(), ZetaProduct::quotient(z(0), z(3)));

        // Distinct k never cancels.
        let zp = ZetaProduct::from_factors([AffineArg::new(2, rat(0))], [z(0)]);
        assert_eq!(zp.normalize(), zp);
    }

    #[test]
    fn normalize_is_idempotent() {
        let zp = ZetaProduct::from_factors([z(0), z(0), z(1)], [z(0), z(1), z(1)]);
        let once = zp.normalize();
        assert_eq!(once.normalize(), once);
        assert_eq!(once, ZetaProduct::quotient(z(0), z(1)));
    }

    #[test]
    fn multiply_telescopes() {
        let a = ZetaProduct::quotient(z(0), z(1));
        let b = ZetaProduct::quotient(z(1), z(2));
        assert_eq!(a.multiply(&b), ZetaProduct::quotient(z(0), z(2)));
        assert_eq!(a.multiply(&ZetaProduct::one()), a);
        assert!(a.multiply(&a.inverse()).is_one());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(ZetaProduct::one().canonical_string(), "1");
        let zp = ZetaProduct::from_factors([z(-4), z(0)], [z(1), z(5)]);
        assert_eq!(zp.canonical_string(), "Z(s-4)*Z(s)/(Z(s+1)*Z(s+5))");
        let zp =
            ZetaProduct::from_factors([AffineArg::new(2, rat(0)), AffineArg::shift(half(-3))], []);
        assert_eq!(zp.canonical_string(), "Z(s-3/2)*Z(2s)");
        let zp = ZetaProduct::from_factors([], [z(1)]);
        assert_eq!(zp.canonical_string(), "1/(Z(s+1))");
    }

    #[test]
    fn pole_orders_p_adic() {
        let profile = ZetaProfile::p_adic(7).unwrap();
        let zp = ZetaProduct::quotient(z(0), z(1));
        assert_eq!(pole_order_at(&zp, &profile, rat(0)).unwrap(), 1);
        assert_eq!(pole_order_at(&zp, &profile, rat(-1)).unwrap(), -1);
        assert_eq!(pole_order_at(&zp, &profile, rat(3)).unwrap(), 0);
    }

    #[test]
    fn pole_orders_global() {
        let profile = ZetaProfile::GlobalCompleted;
        let zp = ZetaProduct::zeta(z(-4));
        assert_eq!(pole_order_at(&zp, &profile, rat(5)).unwrap(), 1);
        assert_eq!(pole_order_at(&zp, &profile, rat(4)).unwrap(), 1);
        assert_eq!(pole_order_at(&zp, &profile, rat(7)).unwrap(), 0);
        // Arguments strictly inside (0, 1) are refused.
        assert!(matches!(
            pole_order_at(&zp, &profile, half(9)),
            Err(Error::OutOfScope(_))
        ));
    }

    #[test]
    fn ledger_of_closed_quotient() {
        // Z(s)Z(s-4)Z(s-8) / (Z(s+1)Z(s+5)Z(s+9)) under the p-adic profile.
        let zp = ZetaProduct::from_factors([z(0), z(-4), z(-8)], [z(1), z(5), z(9)]);
        let profile = ZetaProfile::p_adic(2).unwrap();
        let ledger = full_ledger(&zp, &profile, (rat(-10), rat(10))).unwrap();
        assert_eq!(ledger.poles(), vec![rat(0), rat(4), rat(8)]);
        assert_eq!(ledger.zeros(), vec![rat(-9), rat(-5), rat(-1)]);

        let empty = full_ledger(&ZetaProduct::one(), &profile, (rat(-10), rat(10))).unwrap();
        assert!(empty.entries.is_empty());
    }

    #[test]
    fn ledger_real_archimedean() {
        let zp = ZetaProduct::zeta(z(0));
        let ledger = full_ledger(&zp, &ZetaProfile::RealArchimedean, (rat(-5), rat(5))).unwrap();
        assert_eq!(ledger.poles(), vec![rat(-4), rat(-2), rat(0)]);
        assert!(ledger.zeros().is_empty());
    }

    #[test]
    fn numeric_evaluation() {
        let p2 = ZetaProfile::p_adic(2).unwrap();
        let p3 = ZetaProfile::p_adic(3).unwrap();
        let zp = ZetaProduct::quotient(z(0), z(1));
        assert!((eval_numeric(&zp, &p2, 1.0).unwrap() - 1.5).abs() < 1e-14);

        let zp = ZetaProduct::quotient(z(0), z(2));
        assert!((eval_numeric(&zp, &p3, 2.0).unwrap() - 10.0 / 9.0).abs() < 1e-14);

        assert_eq!(eval_numeric(&ZetaProduct::one(), &p2, 0.25).unwrap(), 1.0);
        assert!(matches!(
            eval_numeric(&zp, &p2, 0.0),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn prime_powers() {
        for q in [2u64, 3, 4, 5, 8, 9, 27, 121] {
            assert!(ZetaProfile::p_adic(q).is_ok(), "{q}");
        }
        for q in [0u64, 1, 6, 12, 100] {
            assert!(ZetaProfile::p_adic(q).is_err(), "{q}");
        }
    }
}
