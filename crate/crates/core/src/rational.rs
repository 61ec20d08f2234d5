//! Exact rationals and their `"p/q"` string form.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Representative of `r` modulo 1 in `[0, 1)`.
pub fn frac(r: Rational) -> Rational {
    r - r.floor()
}

/// Parses `"p/q"`, `"p"`, `"-p/q"` or `"+p/q"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Input(format!("malformed rational {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: i64 = num.strip_prefix('+').unwrap_or(num).parse().map_err(|_| bad())?;
    let den: i64 = den.parse().map_err(|_| bad())?;
    if den == 0 {
        return Err(Error::Input(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Renders a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() || r.is_zero() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
