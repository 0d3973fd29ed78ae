//! Large-order asymptotic expansions of the four radii.
//!
//! Each radius (squared, for the g-kinds) satisfies an exact
//! Mittag-Leffler master equation
//!
//! ```text
//! W = sum_{m>=0} (nu (C + eps(nu)))^{m+1} L_{m+1}(nu)
//! ```
//!
//! with front factor W in {1/2, 1, 1/4, 1/2} per kind and L = eta or
//! theta. Writing L_k(nu) = nu^-k sum_n L_n^(k) nu^-n and collecting
//! powers of 1/nu gives, at leading order, the fixed-point equation
//!
//! ```text
//! x = K - (1/L*) sum_{m>=1} x^{m+1} L_0^(m+1),      K = W / L*
//! ```
//!
//! and at order nu^-(n+1) a relation linear in eps_{n+1}:
//!
//! ```text
//! L* ((-1)^{n+1} C + sum_{m=0}^{n} (-1)^{n-m} eps_{m+1})
//!   + sum_{k=0}^{n+1} sum_{m>=1} A_{m+1,k}(eps_1..eps_k) L_{n-k+1}^(m+1) = 0
//! ```
//!
//! where A_{m+1,k} is the coefficient of x^k in (C + sum eps_j x^j)^{m+1}.
//!
//! Two wirings of the linear multiplier L* are provided:
//!
//! - [`Wiring::Published`] takes L* = 3/4 for **all four** kinds, i.e. the
//!   constants K in {2/3, 4/3, 1/3, 2/3} exactly as the published
//!   fixed-point equations state them. This reproduces the published decimals (0.535898...,
//!   1.17157..., 0.298438..., 0.627719...).
//! - [`Wiring::Consistent`] takes L* = L_0^(1) of the kind's own Rayleigh
//!   family (3/4 for eta, 1/2 for theta), i.e. K in {2/3, 2, 1/3, 1}.
//!   Identical to `Published` for the g-kinds; for the h-kinds this is the
//!   wiring the master equations force (theta_1(nu) = 1/(2(nu+1))), and
//!   the only one whose expansion tracks the certified direct radii. The
//!   published wiring's h-constants are excluded by the h-families' own
//!   Euler-Rayleigh bounds.
//!
//! The published numeric line for the uniform convexity of h carries a
//! convexity label in places; it is treated here as r^uc(h).

use crate::exactnum::{
    bisect_smallest_root, nth_root_floor, parse_rational, powi, rat, rat_int, CertifiedInterval,
    Rational, SignVerdict,
};
use crate::radii::RadiusKind;
use crate::rayleigh::{laurent_tables, LaurentTarget};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};

/// Choice of the linear-term multiplier L* in the fixed-point and
/// epsilon recurrences. See the module docs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wiring {
    /// The published fixed-point constants (L* = 3/4 throughout).
    Published,
    /// L* = the Rayleigh family's own leading coefficient L_0^(1).
    Consistent,
}

impl Wiring {
    pub fn name(self) -> &'static str {
        match self {
            Wiring::Published => "published",
            Wiring::Consistent => "consistent",
        }
    }

    pub fn parse(s: &str) -> Option<Wiring> {
        match s {
            "published" => Some(Wiring::Published),
            "consistent" => Some(Wiring::Consistent),
            _ => None,
        }
    }
}

struct KindWiring {
    /// Linear-term multiplier L*.
    l_star: Rational,
    /// Fixed-point constant K = W / L*.
    k_const: Rational,
    target: LaurentTarget,
}

/// Master-equation front factor W per kind.
pub fn front_factor(kind: RadiusKind) -> Rational {
    match kind {
        RadiusKind::ConvG => rat(1, 2),
        RadiusKind::ConvH => rat_int(1),
        RadiusKind::UconvG => rat(1, 4),
        RadiusKind::UconvH => rat(1, 2),
    }
}

fn kind_wiring(kind: RadiusKind, wiring: Wiring) -> KindWiring {
    let target = match kind {
        RadiusKind::ConvG | RadiusKind::UconvG => LaurentTarget::Eta,
        RadiusKind::ConvH | RadiusKind::UconvH => LaurentTarget::Theta,
    };
    let front = front_factor(kind);
    let l_star = match wiring {
        Wiring::Published => rat(3, 4),
        Wiring::Consistent => match target {
            LaurentTarget::Eta => rat(3, 4),
            LaurentTarget::Theta => rat(1, 2),
        },
    };
    let k_const = &front / &l_star;
    KindWiring {
        l_star,
        k_const,
        target,
    }
}

/// Bisection bracket for the leading constant. The g-kind brackets are
/// rational inner approximations of the published intervals
/// (sqrt(2/7), 7/13) and (4/15, 1/3). The h-kind roots differ per
/// wiring, so each gets its own bracket: the published wiring uses (K/2, K)
/// around the displayed equations' roots, the consistent wiring uses
/// Euler-Rayleigh leading-coefficient brackets (k=2-derived for conv-h,
/// k=1-derived for uconv-h).
fn leading_bracket(kind: RadiusKind, wiring: Wiring) -> (Rational, Rational) {
    match (kind, wiring) {
        (RadiusKind::ConvG, _) => (rat(107, 200), rat(7, 13)),
        (RadiusKind::UconvG, _) => (rat(4, 15), rat(1, 3)),
        (RadiusKind::ConvH, Wiring::Published) => (rat(2, 3), rat(4, 3)),
        (RadiusKind::ConvH, Wiring::Consistent) => (rat(3, 2), rat(14, 9)),
        (RadiusKind::UconvH, Wiring::Published) => (rat(1, 3), rat(2, 3)),
        (RadiusKind::UconvH, Wiring::Consistent) => (rat(2, 3), rat(8, 7)),
    }
}

/// Residual p(x) = x - K + (1/L*) sum_{m=1}^{M} x^{m+1} L_0^(m+1) of the
/// truncated fixed-point equation under the published wiring (1/L* = 4/3,
/// K per the published displays).
pub fn fixed_point_residual(kind: RadiusKind, x: &Rational, m_trunc: usize) -> Rational {
    fixed_point_residual_with(kind, Wiring::Published, x, m_trunc)
}

/// [`fixed_point_residual`] under an explicit wiring.
pub fn fixed_point_residual_with(
    kind: RadiusKind,
    wiring: Wiring,
    x: &Rational,
    m_trunc: usize,
) -> Rational {
    assert!(m_trunc >= 1, "truncation must be at least 1");
    let kw = kind_wiring(kind, wiring);
    let l0 = laurent_tables(kw.target, m_trunc + 1, 0);
    residual_from_table(&kw, &l0, x, m_trunc)
}

fn residual_from_table(
    kw: &KindWiring,
    l0: &[Vec<Rational>],
    x: &Rational,
    m_trunc: usize,
) -> Rational {
    // Horner: after the loop sum = sum_{m=1}^{M} L_0^(m+1) x^m
    let mut sum = Rational::zero();
    for m in (1..=m_trunc).rev() {
        sum = (sum + &l0[m + 1][0]) * x;
    }
    sum *= x / &kw.l_star;
    x - &kw.k_const + sum
}

/// Geometric bound on the dropped tail (1/L*) sum_{m>M} |x|^{m+1}
/// L_0^(m+1). Both Laurent families have L_0^(k) = r^k for k >= 2 with
/// r = 1/2 (eta) or 1/4 (theta), so the majorant ratio is |x| r.
fn truncation_tail_bound(kw: &KindWiring, x_abs: &Rational, m_trunc: usize) -> Rational {
    let ratio = match kw.target {
        LaurentTarget::Eta => rat(1, 2),
        LaurentTarget::Theta => rat(1, 4),
    };
    let geo = x_abs * &ratio;
    debug_assert!(geo < Rational::one(), "leading bracket keeps |x| ratio < 1");
    powi(x_abs, m_trunc as u64 + 2) * powi(&ratio, m_trunc as u64 + 2)
        / ((Rational::one() - geo) * &kw.l_star)
}

/// Certified root of the **truncated** fixed-point polynomial, bisected
/// to `width_goal` over the kind's bracket. Makes no claim about the
/// distance to the untruncated constant; [`leading_constant_with`] is
/// the guarded form.
pub fn truncated_root(
    kind: RadiusKind,
    wiring: Wiring,
    m_trunc: usize,
    width_goal: &Rational,
) -> Result<CertifiedInterval> {
    assert!(m_trunc >= 1, "truncation must be at least 1");
    let (lo, hi) = leading_bracket(kind, wiring);
    let bracket = CertifiedInterval::new(lo, hi)?;
    let kw = kind_wiring(kind, wiring);
    let l0 = laurent_tables(kw.target, m_trunc + 1, 0);
    let oracle = |x: &Rational| SignVerdict::of(&residual_from_table(&kw, &l0, x, m_trunc));
    // a missing sign change signals wrong K / L* wiring for this bracket
    bisect_smallest_root(oracle, &bracket, width_goal).map_err(|e| match e {
        Error::BracketInvalid(msg) => Error::BracketInvalid(format!(
            "{} (kind {}, wiring {}: fixed-point wiring does not match bracket)",
            msg,
            kind.name(),
            wiring.name()
        )),
        other => other,
    })
}

/// Enclosure of the leading constant under the published wiring.
pub fn leading_constant(
    kind: RadiusKind,
    m_trunc: usize,
    width_goal: &Rational,
) -> Result<CertifiedInterval> {
    leading_constant_with(kind, Wiring::Published, m_trunc, width_goal)
}

/// Enclosure of the leading constant: bisection of the truncated
/// residual, guarded by the requirement that the dropped tail (bounded
/// at the bracket's right endpoint) stays below width_goal/10, so the
/// truncation cannot dominate the reported width.
pub fn leading_constant_with(
    kind: RadiusKind,
    wiring: Wiring,
    m_trunc: usize,
    width_goal: &Rational,
) -> Result<CertifiedInterval> {
    let kw = kind_wiring(kind, wiring);
    let (_, hi) = leading_bracket(kind, wiring);
    let term_bound = truncation_tail_bound(&kw, &hi, m_trunc);
    if rat_int(10) * &term_bound >= *width_goal {
        return Err(Error::TruncationTooCoarse {
            term_bound,
            width_goal: width_goal.clone(),
        });
    }
    truncated_root(kind, wiring, m_trunc, width_goal)
}

/// One expansion coefficient eps_n with uncertainty bookkeeping (leading
/// interval sensitivity plus the truncation tail). High-precision, not a
/// certified enclosure of the asymptotic coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct EpsCoeff {
    pub value: Rational,
    pub uncertainty: Rational,
}

/// eps_1..eps_N at a fixed leading constant C via the order-by-order
/// linear solve.
fn epsilon_values(
    kw: &KindWiring,
    c: &Rational,
    n_terms: usize,
    m_trunc: usize,
    l: &[Vec<Rational>],
) -> Vec<Rational> {
    // denominator: L* + sum_m (m+1) C^m L_0^(m+1)
    let mut denom = kw.l_star.clone();
    for m in 1..=m_trunc {
        denom += rat_int(m as i64 + 1) * powi(c, m as u64) * &l[m + 1][0];
    }
    let mut eps: Vec<Rational> = Vec::with_capacity(n_terms);
    for n in 0..n_terms {
        // powers of s(x) = C + eps_1 x + ... + eps_n x^n truncated at
        // x^(n+1); the x^(n+1) coefficient of s^(m+1) is the potential
        // polynomial with eps_{n+1} absent
        let deg = n + 1;
        let mut s = vec![Rational::zero(); deg + 1];
        s[0] = c.clone();
        for (j, e) in eps.iter().enumerate() {
            s[j + 1] = e.clone();
        }
        let mut pows: Vec<Vec<Rational>> = Vec::with_capacity(m_trunc + 2);
        pows.push(vec![Rational::one(); 1]); // s^0, unused
        pows.push(s.clone());
        for _ in 2..=m_trunc + 1 {
            let prev = pows.last().unwrap();
            let mut next = vec![Rational::zero(); deg + 1];
            for i in 0..=deg {
                if prev[i].is_zero() {
                    continue;
                }
                for j in 0..=deg - i {
                    if !s[j].is_zero() {
                        next[i + j] += &prev[i] * &s[j];
                    }
                }
            }
            pows.push(next);
        }
        // alternating block: (-1)^{n+1} C + sum_{m=0}^{n-1} (-1)^{n-m} eps_{m+1}
        let mut alt = if (n + 1) % 2 == 0 { c.clone() } else { -c.clone() };
        for (m, e) in eps.iter().enumerate().take(n) {
            let sign = if (n - m) % 2 == 0 { 1 } else { -1 };
            alt += rat_int(sign) * e;
        }
        let mut num = -(&kw.l_star * alt);
        for k in 0..=n {
            for m in 1..=m_trunc {
                if !pows[m + 1][k].is_zero() {
                    num -= &pows[m + 1][k] * &l[m + 1][n + 1 - k];
                }
            }
        }
        for m in 1..=m_trunc {
            if !pows[m + 1][deg].is_zero() {
                num -= &pows[m + 1][deg] * &l[m + 1][0];
            }
        }
        eps.push(num / &denom);
    }
    eps
}

/// eps_1..eps_N under the published wiring.
pub fn epsilon_coeffs(kind: RadiusKind, n_terms: usize, m_trunc: usize) -> Result<Vec<EpsCoeff>> {
    Ok(epsilon_coeffs_with(kind, Wiring::Published, n_terms, m_trunc)?.1)
}

/// eps_1..eps_N under an explicit wiring, together with the leading
/// interval (solved to width 1e-13) the solve was propagated through.
pub fn epsilon_coeffs_with(
    kind: RadiusKind,
    wiring: Wiring,
    n_terms: usize,
    m_trunc: usize,
) -> Result<(CertifiedInterval, Vec<EpsCoeff>)> {
    let kw = kind_wiring(kind, wiring);
    let leading = truncated_root(kind, wiring, m_trunc, &parse_rational("1e-13").unwrap())?;
    if n_terms == 0 {
        return Ok((leading, Vec::new()));
    }
    let l = laurent_tables(kw.target, m_trunc + 1, n_terms + 1);
    let values = epsilon_values(&kw, &leading.midpoint(), n_terms, m_trunc, &l);
    let at_lo = epsilon_values(&kw, leading.lo(), n_terms, m_trunc, &l);
    let at_hi = epsilon_values(&kw, leading.hi(), n_terms, m_trunc, &l);
    let tail = truncation_tail_bound(&kw, leading.hi(), m_trunc);
    let eps = values
        .into_iter()
        .enumerate()
        .map(|(i, value)| {
            let sens = (&at_lo[i] - &at_hi[i]).abs();
            EpsCoeff {
                value,
                uncertainty: sens + &tail,
            }
        })
        .collect();
    Ok((leading, eps))
}

/// Full expansion record: leading enclosure, eps coefficients with
/// uncertainty, truncation order, and the master-equation front factor.
#[derive(Clone, Debug)]
pub struct AsymptoticExpansion {
    pub kind: RadiusKind,
    pub wiring: Wiring,
    pub leading: CertifiedInterval,
    pub eps: Vec<EpsCoeff>,
    pub truncation: usize,
    pub front_factor: Rational,
}

/// Solve the expansion of `kind` to `n_eps` coefficients at truncation
/// `m_trunc`.
pub fn expansion(
    kind: RadiusKind,
    wiring: Wiring,
    n_eps: usize,
    m_trunc: usize,
) -> Result<AsymptoticExpansion> {
    let (leading, eps) = epsilon_coeffs_with(kind, wiring, n_eps, m_trunc)?;
    Ok(AsymptoticExpansion {
        kind,
        wiring,
        leading,
        eps,
        truncation: m_trunc,
        front_factor: front_factor(kind),
    })
}

fn auto_truncation(kind: RadiusKind, wiring: Wiring) -> usize {
    let kw = kind_wiring(kind, wiring);
    let (_, hi) = leading_bracket(kind, wiring);
    let floor = parse_rational("1e-14").unwrap();
    let mut m = 20usize;
    while truncation_tail_bound(&kw, &hi, m) > floor && m < 320 {
        m *= 2;
    }
    m
}

/// Radius value from the truncated expansion: for g-kinds
/// sqrt(nu (C + sum_{n<N} eps_n nu^-n)) (the radius, not its square),
/// for h-kinds the scaled sum directly. `n_terms` counts the leading
/// constant, so `n_terms = 2` is the two-term value nu C + eps_1.
pub fn asymptotic_radius(kind: RadiusKind, nu: &Rational, n_terms: usize) -> Result<Rational> {
    asymptotic_radius_with(kind, Wiring::Published, nu, n_terms)
}

/// [`asymptotic_radius`] under an explicit wiring. Truncation is chosen
/// automatically so its tail sits far below the reported digits.
pub fn asymptotic_radius_with(
    kind: RadiusKind,
    wiring: Wiring,
    nu: &Rational,
    n_terms: usize,
) -> Result<Rational> {
    if !nu.is_positive() {
        return Err(Error::InvalidInput(format!(
            "asymptotic radius requires nu > 0, got {}",
            nu
        )));
    }
    if n_terms < 1 {
        return Err(Error::InvalidInput("n_terms must be at least 1".into()));
    }
    let m_trunc = auto_truncation(kind, wiring);
    let (leading, eps) = epsilon_coeffs_with(kind, wiring, n_terms - 1, m_trunc)?;
    let inv = Rational::one() / nu;
    let mut val = nu * leading.midpoint();
    for (i, e) in eps.iter().enumerate() {
        val += &e.value * powi(&inv, i as u64);
    }
    if !val.is_positive() {
        return Err(Error::NegativeArgument(format!(
            "truncated expansion nonpositive at nu = {}",
            nu
        )));
    }
    Ok(if kind.is_squared_variable() {
        nth_root_floor(&val, 2, 30)
    } else {
        val
    })
}
