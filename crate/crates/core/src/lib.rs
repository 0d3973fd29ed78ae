//! Radii of convexity and uniform convexity of normalized Bessel functions.
//!
//! The normalized Bessel functions
//!
//! ```text
//! g_nu(z) = 2^nu Gamma(nu+1) z^(1-nu)   J_nu(z)
//! h_nu(z) = 2^nu Gamma(nu+1) z^(1-nu/2) J_nu(sqrt z)
//! ```
//!
//! (nu > -1) map disks |z| < r onto convex domains up to the radius of
//! convexity r^c, and onto uniformly convex domains up to the radius of
//! uniform convexity r^uc < r^c. Each of the four radii is the smallest
//! positive zero of a critical function: (z g')' for r^c(g), g' + 2z g''
//! for r^uc(g), h' + z h'' for r^c(h), h' + 2z h'' for r^uc(h).
//!
//! This crate computes all four radii by three mutually cross-validating
//! routes, every one of them over exact rational arithmetic:
//!
//! - [`radii::direct_radius`]: certified sign-based bisection on the
//!   critical series, returning an enclosing interval;
//! - [`radii::euler_rayleigh_bracket`]: exact Euler-Rayleigh bounds
//!   S_k^(-1/k) < t* < S_k/S_{k+1} from power sums of reciprocal zeros,
//!   computed both by Newton identities ([`rayleigh::power_sums`]) and by
//!   potential-polynomial series inversion
//!   ([`potpoly::power_sums_via_potential`]);
//! - [`asympt::asymptotic_radius`]: large-nu expansions
//!   t* ~ nu (C + eps_1/nu + eps_2/nu^2 + ...) with the leading constant
//!   solved from a truncated fixed-point polynomial and the eps_n from an
//!   order-by-order linear recurrence.
//!
//! Modules: [`exactnum`] (rationals, polynomials, certified bisection),
//! [`series`] (the six power-series families and certified evaluation),
//! [`rayleigh`] (power sums and 1/nu Laurent coefficients), [`potpoly`]
//! (ordinary potential polynomials and series inversion), [`asympt`]
//! (asymptotic expansions), [`radii`] (brackets, direct radii, residual
//! checks, comparison reports).
//!
//! # Quick start
//!
//! ```
//! use besselrad::{direct_radius, euler_rayleigh_bracket, RadiusKind};
//! use besselrad::exactnum::parse_rational;
//! use besselrad::series::Order;
//!
//! let order = Order::from_int(1).unwrap();
//! let tol = parse_rational("1e-9").unwrap();
//!
//! // certified enclosure of the radius of uniform convexity of g_1
//! let enc = direct_radius(RadiusKind::UconvG, &order, &tol).unwrap();
//! assert!(enc.width() <= tol);
//!
//! // it sits inside the exact k = 1 Euler-Rayleigh bracket
//! // (stated in the squared variable t = z^2 for the g-kinds)
//! let bracket = euler_rayleigh_bracket(RadiusKind::UconvG, &order, 1);
//! let t = enc.midpoint();
//! assert!(bracket.lower < &t * &t && &t * &t < bracket.upper);
//! ```

#![allow(clippy::result_large_err)] // errors carry exact rationals

pub mod asympt;
pub mod exactnum;
pub mod potpoly;
pub mod radii;
pub mod rayleigh;
pub mod series;

pub use asympt::{asymptotic_radius, leading_constant, AsymptoticExpansion, Wiring};
pub use exactnum::{
    bisect_smallest_root, parse_rational, poly_eval, to_decimal_string, CertifiedInterval,
    Rational, RationalPolynomial, SignVerdict,
};
pub use radii::{direct_radius, euler_rayleigh_bracket, BoundsBracket, RadiusKind};
pub use rayleigh::{LaurentCoeffs, LaurentTarget, PowerSums};
pub use series::{Order, SeriesFamily, VariableKind};

use std::fmt;

/// Errors reported by the computation layers.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// The order nu lies outside the admissible range nu > -1.
    OrderOutOfRange(Rational),
    /// A bisection bracket does not straddle a sign change, or an endpoint
    /// sign could not be certified.
    BracketInvalid(String),
    /// An iteration failed to reach its goal within its step budget.
    NoConvergence(String),
    /// The tail-bound term ratio q(N) exceeds 1/2; more terms are needed
    /// before a geometric tail bound applies.
    RatioNotSmall(Rational),
    /// An argument lies outside the convergence domain of a rearranged
    /// series (Mittag-Leffler residual evaluated too far out).
    ConvergenceDomain(String),
    /// A quantity that must be nonnegative came out negative.
    NegativeArgument(String),
    /// Exact division by zero.
    DivisionByZero,
    /// The series truncation is too coarse for the requested certification
    /// width.
    TruncationTooCoarse { term_bound: Rational, width_goal: Rational },
    /// Malformed input (parse failures and similar).
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderOutOfRange(nu) => {
                write!(f, "OrderOutOfRange: nu = {} but nu > -1 is required", nu)
            }
            Error::BracketInvalid(msg) => write!(f, "BracketInvalid: {}", msg),
            Error::NoConvergence(msg) => write!(f, "NoConvergence: {}", msg),
            Error::RatioNotSmall(q) => {
                write!(f, "RatioNotSmall: term ratio bound {} exceeds 1/2", q)
            }
            Error::ConvergenceDomain(msg) => write!(f, "ConvergenceDomain: {}", msg),
            Error::NegativeArgument(msg) => write!(f, "NegativeArgument: {}", msg),
            Error::DivisionByZero => write!(f, "DivisionByZero: exact division by zero"),
            Error::TruncationTooCoarse {
                term_bound,
                width_goal,
            } => write!(
                f,
                "TruncationTooCoarse: last retained term bounded by {} but width goal is {}",
                term_bound, width_goal
            ),
            Error::InvalidInput(msg) => write!(f, "InvalidInput: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
