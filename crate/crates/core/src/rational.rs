//! Exact rational scalars.
//!
//! Every coordinate, shift and pole location in this crate is an exact
//! rational; the denominators that actually occur divide 4. Reports print
//! rationals as `"p/q"` strings (plain `"p"` for integers).

use num_rational::Rational64;

pub type Rat = Rational64;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Shorthand for `n/2`.
pub fn half(n: i64) -> Rat {
    Rat::new(n, 2)
}

/// Canonical string form: `"9"`, `"-3/2"`.
pub fn rat_string(x: Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the output of [`rat_string`].
pub fn parse_rat(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((n, d)) => Some(Rat::new(n.trim().parse().ok()?, d.trim().parse().ok()?)),
        None => Some(rat(s.trim().parse().ok()?)),
    }
}
