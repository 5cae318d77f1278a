use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Exact square root in `Q`: `Some(r)` with `r >= 0` and `r * r == q`, or
/// `None` when `q` is negative or not a rational square.
pub fn rational_square_root(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    // BigRational is canonical, so q is a square iff numerator and
    // denominator are both perfect squares.
    let num_root = q.numer().sqrt();
    if &(&num_root * &num_root) != q.numer() {
        return None;
    }
    let den_root = q.denom().sqrt();
    if &(&den_root * &den_root) != q.denom() {
        return None;
    }
    Some(Rational::new(num_root, den_root))
}

/// Writes `n = s * f^2` with `s` squarefree, `sign(s) = sign(n)` and `f > 0`.
pub fn squarefree_decompose(n: i64) -> Result<(i64, u64)> {
    if n == 0 {
        return Err(Error::domain("squarefree decomposition of 0"));
    }
    let mut rest = n.unsigned_abs();
    let mut square_part: u64 = 1;
    let mut free_part: u64 = 1;
    let mut p: u64 = 2;
    while p.saturating_mul(p) <= rest {
        let mut e = 0u32;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        square_part *= p.pow(e / 2);
        if e % 2 == 1 {
            free_part *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    free_part *= rest;
    let s = free_part as i64 * n.signum();
    Ok((s, square_part))
}

/// Strict parser for exact rationals: `"p"` or `"p/q"` with decimal integer
/// parts. Decimals, exponents and whitespace are rejected.
pub fn parse_rational(text: &str) -> std::result::Result<Rational, String> {
    fn parse_int(part: &str, allow_sign: bool) -> std::result::Result<BigInt, String> {
        let digits = match part.strip_prefix('-') {
            Some(rest) if allow_sign => rest,
            Some(_) => return Err("unexpected sign in denominator".into()),
            None => part,
        };
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(format!("`{part}` is not an integer"));
        }
        let value = BigInt::parse_bytes(digits.as_bytes(), 10)
            .ok_or_else(|| format!("`{part}` is not an integer"))?;
        Ok(if part.starts_with('-') { -value } else { value })
    }

    if text.contains('.') || text.contains(['e', 'E']) {
        return Err(format!(
            "`{text}` is not exact; write rationals as \"p/q\", decimals are not accepted"
        ));
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (parse_int(n, true)?, parse_int(d, false)?),
        None => (parse_int(text, true)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(format!("`{text}` has a zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"p/q"` rendering; integers render as `"p/1"`.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub(crate) fn rational_sign(q: &Rational) -> i8 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
