//! The ground-truth layer: Euler-Rayleigh brackets, certified direct
//! radii, Mittag-Leffler residual checks, and comparison reports tying
//! the three routes together.
//!
//! Each radius is the smallest positive zero of its critical family's
//! series in the series variable t; for the g-kinds t = z^2, so the
//! radius in z-units is sqrt(t*). Euler-Rayleigh inequalities give exact
//! two-sided bounds in t-units,
//!
//! ```text
//! S_k^(-1/k)  <  t*  <  S_k / S_{k+1},
//! ```
//!
//! with lower bounds increasing and upper bounds decreasing in k. The
//! k = 3 bracket seeds the certified bisection of [`direct_radius`].
//!
//! [`mittag_leffler_residual`] evaluates 1 - W sum_{m<=M} r^m S_m over
//! the base function's Weierstrass family (W in {2, 1, 4, 2} per kind);
//! the residual vanishes exactly at the radius, which cross-validates
//! the critical-family coefficient rules against the Dini-zero route.

use crate::asympt::{asymptotic_radius_with, Wiring};
use crate::exactnum::{
    bisect_smallest_root, nth_root_ceil, nth_root_floor, rat_int, CertifiedInterval, Rational,
};
use crate::rayleigh::power_sums;
use crate::series::{BesselMap, Order, SeriesEvaluator, SeriesFamily};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// One of the four radii.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RadiusKind {
    /// Radius of convexity of g_nu (critical family ConvexG, t = z^2).
    ConvG,
    /// Radius of convexity of h_nu (critical family ConvexH, t = z).
    ConvH,
    /// Radius of uniform convexity of g_nu (UConvexG, t = z^2).
    UconvG,
    /// Radius of uniform convexity of h_nu (UConvexH, t = z).
    UconvH,
}

impl RadiusKind {
    pub const ALL: [RadiusKind; 4] = [
        RadiusKind::ConvG,
        RadiusKind::ConvH,
        RadiusKind::UconvG,
        RadiusKind::UconvH,
    ];

    /// Series whose smallest positive zero is the radius.
    pub fn critical_family(self) -> SeriesFamily {
        match self {
            RadiusKind::ConvG => SeriesFamily::ConvexG,
            RadiusKind::ConvH => SeriesFamily::ConvexH,
            RadiusKind::UconvG => SeriesFamily::UConvexG,
            RadiusKind::UconvH => SeriesFamily::UConvexH,
        }
    }

    /// Weierstrass quotient of the base function (g' or h'), whose power
    /// sums are the Rayleigh sums eta_k / theta_k.
    pub fn weierstrass_family(self) -> SeriesFamily {
        match self {
            RadiusKind::ConvG | RadiusKind::UconvG => SeriesFamily::WeierstrassG,
            RadiusKind::ConvH | RadiusKind::UconvH => SeriesFamily::WeierstrassH,
        }
    }

    /// True when the series variable is t = z^2, i.e. radius = sqrt(t*).
    pub fn is_squared_variable(self) -> bool {
        matches!(self, RadiusKind::ConvG | RadiusKind::UconvG)
    }

    pub fn base_map(self) -> BesselMap {
        match self {
            RadiusKind::ConvG | RadiusKind::UconvG => BesselMap::G,
            RadiusKind::ConvH | RadiusKind::UconvH => BesselMap::H,
        }
    }

    pub fn is_uniform(self) -> bool {
        matches!(self, RadiusKind::UconvG | RadiusKind::UconvH)
    }

    pub fn name(self) -> &'static str {
        match self {
            RadiusKind::ConvG => "conv-g",
            RadiusKind::ConvH => "conv-h",
            RadiusKind::UconvG => "uconv-g",
            RadiusKind::UconvH => "uconv-h",
        }
    }

    pub fn parse(s: &str) -> Option<RadiusKind> {
        RadiusKind::ALL.iter().copied().find(|k| k.name() == s)
    }

    /// Weight W of the Mittag-Leffler rearrangement 1 - W sum r^m S_m.
    fn ml_weight(self) -> Rational {
        rat_int(match self {
            RadiusKind::ConvG => 2,
            RadiusKind::ConvH => 1,
            RadiusKind::UconvG => 4,
            RadiusKind::UconvH => 2,
        })
    }
}

/// Euler-Rayleigh two-sided bound at index k, in the series variable
/// (squared for g-kinds, plain for h-kinds).
#[derive(Clone, Debug)]
pub struct BoundsBracket {
    pub kind: RadiusKind,
    pub order: Order,
    pub k: usize,
    /// Rational lower bound: exactly S_k^(-1/k) when that root is
    /// rational (always for k = 1), otherwise rounded down with slack
    /// below 10^-30.
    pub lower: Rational,
    /// The exact k-th power of the true lower bound, S_k^(-1).
    pub lower_kth_power: Rational,
    /// Exact upper bound S_k / S_{k+1}.
    pub upper: Rational,
}

impl BoundsBracket {
    /// The bracket as an interval in the series variable.
    pub fn interval(&self) -> CertifiedInterval {
        CertifiedInterval::new(self.lower.clone(), self.upper.clone())
            .expect("Euler-Rayleigh lower bound below upper bound")
    }
}

/// Exact Euler-Rayleigh bracket at index k >= 1.
pub fn euler_rayleigh_bracket(kind: RadiusKind, order: &Order, k: usize) -> BoundsBracket {
    assert!(k >= 1, "bracket index must be at least 1");
    let sums = power_sums(kind.critical_family(), order, k + 1);
    let lower_kth_power = Rational::one() / sums.s(k);
    let lower = nth_root_floor(&lower_kth_power, k as u32, 30);
    let upper = sums.s(k) / sums.s(k + 1);
    BoundsBracket {
        kind,
        order: order.clone(),
        k,
        lower,
        lower_kth_power,
        upper,
    }
}

/// Certified enclosure of the radius in the series variable t
/// (the squared radius for g-kinds). Seeds bisection with the k = 3
/// Euler-Rayleigh bracket, which isolates exactly the smallest zero.
pub fn direct_radius_t(
    kind: RadiusKind,
    order: &Order,
    abs_tol: &Rational,
) -> Result<CertifiedInterval> {
    if !abs_tol.is_positive() {
        return Err(Error::InvalidInput("abs_tol must be positive".to_string()));
    }
    let bracket = euler_rayleigh_bracket(kind, order, 3).interval();
    let mut ev = SeriesEvaluator::new(kind.critical_family(), order.clone());
    let oracle = |t: &Rational| ev.sign_at(t, 64);
    bisect_smallest_root(oracle, &bracket, abs_tol)
}

fn sqrt_scale(abs_tol: &Rational) -> u32 {
    let mut scale = 2u32;
    let mut step = Rational::new(BigInt::one(), BigInt::from(100u32));
    while &step > abs_tol && scale < 64 {
        scale += 1;
        step /= rat_int(10);
    }
    scale + 2
}

/// Certified enclosure of the radius in its natural z-units: the
/// direct enclosure in t, with an outward-rounded square root applied
/// for the g-kinds.
pub fn direct_radius(
    kind: RadiusKind,
    order: &Order,
    abs_tol: &Rational,
) -> Result<CertifiedInterval> {
    if !kind.is_squared_variable() {
        return direct_radius_t(kind, order, abs_tol);
    }
    // dt = dr * 2 sqrt(t); a lower bound on sqrt(t*) converts the radius
    // tolerance into a t-tolerance
    let k1 = euler_rayleigh_bracket(kind, order, 1);
    let sqrt_lo = nth_root_floor(&k1.lower_kth_power, 2, 30);
    let t_tol = if sqrt_lo.is_positive() {
        abs_tol * sqrt_lo
    } else {
        abs_tol * abs_tol
    };
    let mut enclosure = direct_radius_t(kind, order, &t_tol)?;
    let scale = sqrt_scale(abs_tol);
    loop {
        let lo = nth_root_floor(enclosure.lo(), 2, scale);
        let hi = nth_root_ceil(enclosure.hi(), 2, scale);
        let radius = CertifiedInterval::new(lo, hi)?;
        if radius.width() <= *abs_tol {
            return Ok(radius);
        }
        // rare: re-refine within the already-certified interval
        let mut ev = SeriesEvaluator::new(kind.critical_family(), order.clone());
        let oracle = |t: &Rational| ev.sign_at(t, 64);
        let tighter = &enclosure.width() / rat_int(8);
        enclosure = bisect_smallest_root(oracle, &enclosure, &tighter)?;
    }
}

/// Residual 1 - W sum_{m=1}^{M} r^m S_m of the Mittag-Leffler
/// rearrangement over the base function's Weierstrass family, exact in
/// r (given in the series variable). Requires r below the k = 2
/// Euler-Rayleigh lower bound of the Weierstrass family so that the
/// geometric rearrangement converges.
pub fn mittag_leffler_residual(
    kind: RadiusKind,
    order: &Order,
    r: &Rational,
    m_terms: usize,
) -> Result<Rational> {
    if r.is_negative() {
        return Err(Error::NegativeArgument(format!(
            "residual argument must be nonnegative, got {}",
            r
        )));
    }
    let wf = kind.weierstrass_family();
    let wsums = power_sums(wf, order, m_terms.max(2));
    // convergence gate: r below the Weierstrass k = 2 lower bound
    let gate_power = Rational::one() / wsums.s(2);
    let gate = nth_root_floor(&gate_power, 2, 30);
    if r >= &gate {
        return Err(Error::ConvergenceDomain(format!(
            "r = {} is not below the Weierstrass-zero lower bound {}",
            r, gate
        )));
    }
    // Horner over m = M..1 of r^m S_m
    let mut sum = Rational::zero();
    for m in (1..=m_terms).rev() {
        sum = (sum + wsums.s(m)) * r;
    }
    Ok(Rational::one() - kind.ml_weight() * sum)
}

/// Per-row invariant checks of a comparison report.
#[derive(Clone, Debug)]
pub struct CompareChecks {
    /// lower_k strictly increasing and upper_k strictly decreasing in k.
    pub brackets_nested: bool,
    /// The direct enclosure lies strictly inside every bracket.
    pub oracle_within_brackets: bool,
}

/// One (kind, nu) row of a comparison report.
#[derive(Clone, Debug)]
pub struct CompareRow {
    pub kind: RadiusKind,
    pub nu: Rational,
    /// Euler-Rayleigh brackets for k = 1..k_max, series variable.
    pub brackets: Vec<BoundsBracket>,
    /// Direct enclosure in the series variable.
    pub oracle_t: CertifiedInterval,
    /// Direct enclosure in z-units.
    pub oracle_radius: CertifiedInterval,
    /// Asymptotic radius (z-units) with `n_terms` terms.
    pub asymptotic: Rational,
    pub abs_gap: Rational,
    pub rel_gap: Rational,
    pub checks: CompareChecks,
}

/// Comparison report over (kind, nu) cells, with re-checked invariants
/// and ordering annotations.
#[derive(Clone, Debug)]
pub struct CompareReport {
    pub rows: Vec<CompareRow>,
    /// Human-readable re-checks: r^uc < r^c pairings and any violations.
    pub annotations: Vec<String>,
}

/// Build a comparison report: one row per (kind, nu), brackets k = 1..
/// k_max, direct enclosure at `abs_tol`, and the `n_terms`-term
/// asymptotic radius under `wiring`.
pub fn compare_report(
    kinds: &[RadiusKind],
    nus: &[Rational],
    n_terms: usize,
    k_max: usize,
    wiring: Wiring,
    abs_tol: &Rational,
) -> Result<CompareReport> {
    let mut rows = Vec::new();
    for nu in nus {
        for &kind in kinds {
            let order = Order::new(nu.clone())?;
            let brackets: Vec<BoundsBracket> = (1..=k_max)
                .map(|k| euler_rayleigh_bracket(kind, &order, k))
                .collect();
            let oracle_t = direct_radius_t(kind, &order, abs_tol)?;
            let oracle_radius = if kind.is_squared_variable() {
                let scale = sqrt_scale(abs_tol);
                CertifiedInterval::new(
                    nth_root_floor(oracle_t.lo(), 2, scale),
                    nth_root_ceil(oracle_t.hi(), 2, scale),
                )?
            } else {
                oracle_t.clone()
            };
            let asymptotic = asymptotic_radius_with(kind, wiring, nu, n_terms)?;
            let mid = oracle_radius.midpoint();
            let abs_gap = (&asymptotic - &mid).abs();
            let rel_gap = &abs_gap / &mid;
            let brackets_nested = brackets.windows(2).all(|w| {
                w[0].lower < w[1].lower && w[1].upper < w[0].upper
            });
            let oracle_within_brackets = brackets
                .iter()
                .all(|b| &b.lower < oracle_t.lo() && oracle_t.hi() < &b.upper);
            rows.push(CompareRow {
                kind,
                nu: nu.clone(),
                brackets,
                oracle_t,
                oracle_radius,
                asymptotic,
                abs_gap,
                rel_gap,
                checks: CompareChecks {
                    brackets_nested,
                    oracle_within_brackets,
                },
            });
        }
    }
    let mut annotations = Vec::new();
    for nu in nus {
        for (uc, c, label) in [
            (RadiusKind::UconvG, RadiusKind::ConvG, "g"),
            (RadiusKind::UconvH, RadiusKind::ConvH, "h"),
        ] {
            let find = |k: RadiusKind| {
                rows.iter()
                    .find(|r| r.kind == k && &r.nu == nu)
                    .map(|r| r.oracle_radius.clone())
            };
            if let (Some(ruc), Some(rc)) = (find(uc), find(c)) {
                let ok = ruc.hi() < rc.lo();
                annotations.push(format!(
                    "nu = {}: r_uc({label}) < r_c({label}): {}",
                    nu,
                    if ok { "ok" } else { "VIOLATED" },
                ));
            }
        }
    }
    for row in &rows {
        if !row.checks.brackets_nested {
            annotations.push(format!(
                "nu = {}, {}: bracket nesting VIOLATED",
                row.nu,
                row.kind.name()
            ));
        }
        if !row.checks.oracle_within_brackets {
            annotations.push(format!(
                "nu = {}, {}: direct enclosure escapes a bracket",
                row.nu,
                row.kind.name()
            ));
        }
    }
    Ok(CompareReport { rows, annotations })
}
