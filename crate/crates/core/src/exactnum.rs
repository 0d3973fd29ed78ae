//! Exact rational arithmetic, dense rational polynomials, and
//! sign-certified bisection.
//!
//! Everything downstream (series evaluation, power sums, fixed-point
//! solves) runs on [`Rational`] so that no rounding ever occurs; decimal
//! output is produced only at the presentation layer by
//! [`to_decimal_string`]. The one deliberately inexact primitive is the
//! pair [`nth_root_floor`]/[`nth_root_ceil`], which returns rational
//! bounds on k-th roots with a stated slack (used for Euler-Rayleigh
//! lower bounds and for reporting g-radii in z-units).

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always in canonical form
/// (positive denominator, gcd(|num|, den) = 1). `num_rational` reduces
/// on construction and after every arithmetic operation.
pub type Rational = num_rational::BigRational;

/// Shorthand for a small rational constant.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `x^e` for nonnegative integer exponents (binary exponentiation).
pub fn powi(x: &Rational, e: u64) -> Rational {
    let mut result = Rational::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    result
}

/// `10^e` as a positive big integer.
pub fn pow10(e: u32) -> BigInt {
    BigInt::from(10u32).pow(e)
}

/// Exact division with division-by-zero reported as an error rather than
/// a panic.
pub fn try_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Parse a rational from `p/q`, integer, or decimal notation
/// (`-3`, `0.25`, `1e-10`, `7/3`). Decimals convert exactly via
/// powers-of-ten denominators.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("cannot parse `{}` as a rational", s));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rational::new(n, d));
    }
    // [sign] digits [.digits] [eE [sign] digits]
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if frac_part.contains(['+', '-']) {
        return Err(bad());
    }
    let joined = format!("{}{}", int_part, frac_part);
    if joined.is_empty() || joined == "-" || joined == "+" {
        return Err(bad());
    }
    let n: BigInt = joined.parse().map_err(|_| bad())?;
    let shift = exp - frac_part.len() as i32;
    Ok(if shift >= 0 {
        Rational::from_integer(n * pow10(shift as u32))
    } else {
        Rational::new(n, pow10((-shift) as u32))
    })
}

/// Round `n/d` (d > 0) to the nearest integer, ties to even.
fn round_half_even(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let (q, r) = n.div_mod_floor(d);
    let twice: BigInt = &r << 1;
    match twice.cmp(d) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1
            }
        }
    }
}

/// Decimal exponent e with 10^e <= |x| < 10^(e+1); x must be nonzero.
fn dec_exponent(x: &Rational) -> i64 {
    let n = x.numer().abs();
    let d = x.denom().clone();
    // first guess from bit lengths, then correct by exact comparison
    let mut e = ((n.bits() as i64 - d.bits() as i64) as f64 * std::f64::consts::LOG10_2)
        .floor() as i64;
    let ge = |e: i64| -> bool {
        // |x| >= 10^e
        if e >= 0 {
            n >= &d * pow10(e as u32)
        } else {
            &n * pow10((-e) as u32) >= d
        }
    };
    while !ge(e) {
        e -= 1;
    }
    while ge(e + 1) {
        e += 1;
    }
    e
}

/// Correctly rounded decimal rendering of `x` to `digits` significant
/// digits (round half to even). Small exponents render in plain
/// positional notation, extreme ones in scientific notation. The output
/// is locale-independent and parses back exactly via [`parse_rational`].
pub fn to_decimal_string(x: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let a = x.abs();
    let mut e = dec_exponent(&a);
    let s = digits as i64 - 1 - e;
    let mut m = if s >= 0 {
        round_half_even(&(a.numer() * pow10(s as u32)), a.denom())
    } else {
        round_half_even(a.numer(), &(a.denom() * pow10((-s) as u32)))
    };
    // rounding can carry into one extra digit (e.g. 9.99 -> 10.0)
    if m >= pow10(digits as u32) {
        m /= 10;
        e += 1;
    }
    let ds = m.to_string();
    debug_assert_eq!(ds.len(), digits);
    let sign = if neg { "-" } else { "" };
    let body = if (-6..=digits as i64 + 6).contains(&e) {
        if e >= 0 {
            let point = (e + 1) as usize;
            if point >= digits {
                format!("{}{}", ds, "0".repeat(point - digits))
            } else {
                format!("{}.{}", &ds[..point], &ds[point..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), ds)
        }
    } else if digits == 1 {
        format!("{}e{}", ds, e)
    } else {
        format!("{}.{}e{}", &ds[..1], &ds[1..], e)
    };
    format!("{}{}", sign, body)
}

fn exact_nth_root(m: &BigInt, k: u32) -> Option<BigInt> {
    if m.is_negative() {
        return None;
    }
    let r = m.nth_root(k);
    if r.clone().pow(k) == *m {
        Some(r)
    } else {
        None
    }
}

/// Largest rational of the form r/10^scale with r^k <= x; exact whenever
/// x is a perfect k-th power of a rational. Requires x >= 0. The slack
/// against the true root is below 10^(1-scale).
pub fn nth_root_floor(x: &Rational, k: u32, scale: u32) -> Rational {
    assert!(!x.is_negative(), "nth_root_floor of negative value");
    assert!(k >= 1);
    if x.is_zero() {
        return Rational::zero();
    }
    if let (Some(rn), Some(rd)) = (exact_nth_root(x.numer(), k), exact_nth_root(x.denom(), k)) {
        return Rational::new(rn, rd);
    }
    let scaled = (x.numer() * pow10(k * scale)).div_floor(x.denom());
    Rational::new(scaled.nth_root(k), pow10(scale))
}

/// Smallest rational of the form r/10^scale with r^k >= x; exact whenever
/// x is a perfect k-th power of a rational. Requires x >= 0.
pub fn nth_root_ceil(x: &Rational, k: u32, scale: u32) -> Rational {
    assert!(!x.is_negative(), "nth_root_ceil of negative value");
    assert!(k >= 1);
    if x.is_zero() {
        return Rational::zero();
    }
    if let (Some(rn), Some(rd)) = (exact_nth_root(x.numer(), k), exact_nth_root(x.denom(), k)) {
        return Rational::new(rn, rd);
    }
    let scaled = (x.numer() * pow10(k * scale)).div_ceil(x.denom());
    let mut r = scaled.nth_root(k);
    if r.clone().pow(k) < scaled {
        r += 1;
    }
    Rational::new(r, pow10(scale))
}

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Canonical form: empty for the zero polynomial, otherwise the
/// last (highest-degree) coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    /// Build from coefficients (lowest degree first); trailing zeros are
    /// stripped to keep the canonical form.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact evaluation in Horner order.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Exact evaluation of `p` at `x` (Horner order).
pub fn poly_eval(p: &RationalPolynomial, x: &Rational) -> Rational {
    p.eval(x)
}

/// A pair lo <= hi of rationals asserted to enclose a real value.
/// The width hi - lo is exactly representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedInterval {
    lo: Rational,
    hi: Rational,
}

impl CertifiedInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInput(format!(
                "interval endpoints out of order: [{}, {}]",
                lo, hi
            )));
        }
        Ok(CertifiedInterval { lo, hi })
    }

    /// Degenerate interval [x, x].
    pub fn point(x: Rational) -> Self {
        CertifiedInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &CertifiedInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Widen symmetrically by `slack >= 0`.
    pub fn inflate(&self, slack: &Rational) -> CertifiedInterval {
        debug_assert!(!slack.is_negative());
        CertifiedInterval {
            lo: &self.lo - slack,
            hi: &self.hi + slack,
        }
    }
}

/// Verdict of a sign oracle: a certified sign, or `Unknown` when the
/// oracle could not separate the value from zero within its effort
/// budget. `Unknown` is a verdict, not an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignVerdict {
    Negative,
    Zero,
    Positive,
    Unknown,
}

impl SignVerdict {
    /// Exact sign of a rational (never `Unknown`).
    pub fn of(x: &Rational) -> SignVerdict {
        if x.is_zero() {
            SignVerdict::Zero
        } else if x.is_positive() {
            SignVerdict::Positive
        } else {
            SignVerdict::Negative
        }
    }
}

/// Smallest e >= 0 with q <= 2^e, for a positive rational q.
fn ceil_log2(q: &Rational) -> u64 {
    debug_assert!(q.is_positive());
    if *q <= Rational::one() {
        return 0;
    }
    let n = q.numer();
    let d = q.denom();
    let mut e = (n.bits() as i64 - d.bits() as i64 - 1).max(0) as u64;
    while n > &(d << e) {
        e += 1;
    }
    e
}

fn query_endpoint(
    oracle: &mut impl FnMut(&Rational) -> SignVerdict,
    x: &Rational,
) -> Result<SignVerdict> {
    for _ in 0..3 {
        let v = oracle(x);
        if v != SignVerdict::Unknown {
            return Ok(v);
        }
    }
    Err(Error::BracketInvalid(format!(
        "endpoint sign could not be certified at {}",
        x
    )))
}

/// Shrink a bracket with exactly one sign change of the underlying
/// continuous function down to `width_goal`, using only certified sign
/// verdicts.
///
/// An `Unknown` verdict at a trial midpoint forces retries at perturbed
/// midpoints (perturbation width/4, then -width/4, then width/8; at most
/// 3 retries per step), so the width shrinks by at least 3/4 per
/// accepted step. The endpoints of the returned interval were all
/// certified by the oracle, and the interval is contained in `bracket`.
///
/// Errors: [`Error::BracketInvalid`] when the endpoint signs match or an
/// endpoint stays `Unknown`; [`Error::NoConvergence`] when the goal is
/// not reached within the step budget (4 * ceil(log2(initial width /
/// width_goal)) steps) or no perturbed midpoint can be certified.
pub fn bisect_smallest_root(
    mut sign_oracle: impl FnMut(&Rational) -> SignVerdict,
    bracket: &CertifiedInterval,
    width_goal: &Rational,
) -> Result<CertifiedInterval> {
    if !width_goal.is_positive() {
        return Err(Error::InvalidInput(
            "width_goal must be positive".to_string(),
        ));
    }
    let lo_sign = query_endpoint(&mut sign_oracle, bracket.lo())?;
    if lo_sign == SignVerdict::Zero {
        return Ok(CertifiedInterval::point(bracket.lo().clone()));
    }
    let hi_sign = query_endpoint(&mut sign_oracle, bracket.hi())?;
    if hi_sign == SignVerdict::Zero {
        return Ok(CertifiedInterval::point(bracket.hi().clone()));
    }
    if lo_sign == hi_sign {
        return Err(Error::BracketInvalid(format!(
            "equal endpoint signs over [{}, {}]",
            bracket.lo(),
            bracket.hi()
        )));
    }

    let mut lo = bracket.lo().clone();
    let mut hi = bracket.hi().clone();
    let initial_width = &hi - &lo;
    if initial_width <= *width_goal {
        return CertifiedInterval::new(lo, hi);
    }
    let budget = 4 * ceil_log2(&(&initial_width / width_goal)).max(1);
    let quarter = rat(1, 4);
    let eighth = rat(1, 8);
    let half = rat(1, 2);

    for _ in 0..budget {
        let width = &hi - &lo;
        if width <= *width_goal {
            return CertifiedInterval::new(lo, hi);
        }
        let mid = &lo + &width * &half;
        let candidates = [
            mid.clone(),
            &mid + &width * &quarter,
            &mid - &width * &quarter,
            &mid + &width * &eighth,
        ];
        let mut accepted = None;
        for cand in candidates {
            match sign_oracle(&cand) {
                SignVerdict::Zero => return Ok(CertifiedInterval::point(cand)),
                SignVerdict::Unknown => continue,
                v => {
                    accepted = Some((cand, v));
                    break;
                }
            }
        }
        match accepted {
            Some((cand, v)) => {
                if v == lo_sign {
                    lo = cand;
                } else {
                    hi = cand;
                }
            }
            None => {
                return Err(Error::NoConvergence(format!(
                    "sign could not be certified near the midpoint of [{}, {}]",
                    lo, hi
                )))
            }
        }
    }
    let width = &hi - &lo;
    if width <= *width_goal {
        CertifiedInterval::new(lo, hi)
    } else {
        Err(Error::NoConvergence(format!(
            "step budget exhausted at width {}",
            width
        )))
    }
}

/// f64 view of a rational, for display and plotting only. Splits off a
/// binary exponent first so that huge numerators and denominators do not
/// overflow the conversion.
pub fn to_f64(x: &Rational) -> f64 {
    let n = x.numer();
    let d = x.denom();
    if n.is_zero() {
        return 0.0;
    }
    let ns = (n.bits() as i64 - 64).max(0);
    let ds = (d.bits() as i64 - 64).max(0);
    let n2 = (n >> ns as u64).to_f64().unwrap_or(f64::NAN);
    let d2 = (d >> ds as u64).to_f64().unwrap_or(f64::NAN);
    (n2 / d2) * 2f64.powi((ns - ds).clamp(-100_000, 100_000) as i32)
}
