//! Power sums of reciprocal zeros (Newton identities) and the 1/nu
//! Laurent coefficients of the Rayleigh sums.
//!
//! For a family series F(t) = 1 + sum c_n t^n = prod (1 - t/t_j) with
//! real positive zeros t_j, the power sums S_k = sum t_j^{-k} follow the
//! Newton identity
//!
//! ```text
//! S_k = -k c_k - sum_{i=1}^{k-1} c_i S_{k-i},    S_1 = -c_1.
//! ```
//!
//! (The source recurrence is sometimes typeset with `n` where `k` is
//! meant; `-k c_k` is forced by S_1 = -c_1 and by the large-nu numeric
//! cross-check in the tests.)
//!
//! For the Weierstrass quotients the sums are the classical Rayleigh
//! sums eta_k(nu) (zeros of the Dini function (1-nu)J + zJ') and
//! theta_k(nu) (zeros of (2-nu)J + zJ'), and they admit convergent
//! Laurent expansions for nu > k:
//!
//! ```text
//! eta_k(nu) = nu^-k sum_{n>=0} eta_n^(k) nu^-n
//! ```
//!
//! with coefficients from the double recurrence
//! eta_n^(k) = -k a_n^(k) - sum_{m<=n} sum_{i<k} a_m^(i) eta_{n-m}^(k-i),
//! where a_n^(k) = (-1)^k (2k+1) / (4^k k!) * (-1)^n h_n(1,...,k) and
//! h_n is the complete homogeneous symmetric polynomial (the closed form
//! of the nested multi-sum; equality is tested directly for k, n <= 5).
//! The theta twin replaces (2k+1) by (k+1). For nu <= k the recurrences
//! still produce the formal coefficients, but nothing is asserted about
//! convergence there.

use crate::exactnum::{powi, rat_int, Rational};
use crate::series::{Order, SeriesEvaluator, SeriesFamily};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Power sums S_1..S_K of reciprocal zeros of one family series.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSums {
    pub family: SeriesFamily,
    pub order: Order,
    /// `values[k-1]` = S_k.
    pub values: Vec<Rational>,
}

impl PowerSums {
    /// S_k (1-indexed).
    pub fn s(&self, k: usize) -> &Rational {
        &self.values[k - 1]
    }

    pub fn k_max(&self) -> usize {
        self.values.len()
    }
}

/// Exact S_1..S_K by the Newton-identity recurrence over the family's
/// series coefficients.
pub fn power_sums(family: SeriesFamily, order: &Order, k_max: usize) -> PowerSums {
    assert!(k_max >= 1, "k_max must be at least 1");
    let mut ev = SeriesEvaluator::new(family, order.clone());
    let coeffs: Vec<Rational> = (0..=k_max).map(|n| ev.coefficient(n)).collect();
    let mut values: Vec<Rational> = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let mut s = -rat_int(k as i64) * &coeffs[k];
        for i in 1..k {
            s -= &coeffs[i] * &values[k - i - 1];
        }
        values.push(s);
    }
    PowerSums {
        family,
        order: order.clone(),
        values,
    }
}

/// Which Rayleigh sum a Laurent expansion targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaurentTarget {
    /// eta_k: squared reciprocal zeros of the Dini function d_nu.
    Eta,
    /// theta_k: squared reciprocal zeros of the Dini function e_nu.
    Theta,
}

impl LaurentTarget {
    pub fn name(self) -> &'static str {
        match self {
            LaurentTarget::Eta => "eta",
            LaurentTarget::Theta => "theta",
        }
    }

    pub fn parse(s: &str) -> Option<LaurentTarget> {
        match s {
            "eta" => Some(LaurentTarget::Eta),
            "theta" => Some(LaurentTarget::Theta),
            _ => None,
        }
    }

    /// Weierstrass family whose power sums the target expands.
    pub fn family(self) -> SeriesFamily {
        match self {
            LaurentTarget::Eta => SeriesFamily::WeierstrassG,
            LaurentTarget::Theta => SeriesFamily::WeierstrassH,
        }
    }

    fn lead_numerator(self, k: usize) -> BigInt {
        match self {
            LaurentTarget::Eta => BigInt::from(2 * k as i64 + 1),
            LaurentTarget::Theta => BigInt::from(k as i64 + 1),
        }
    }
}

/// Finite prefix of the 1/nu Laurent expansion of a Rayleigh sum:
/// `coeffs[n]` is the coefficient of nu^-(k+n).
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentCoeffs {
    pub k: usize,
    pub target: LaurentTarget,
    pub coeffs: Vec<Rational>,
}

impl LaurentCoeffs {
    /// Evaluate the truncated expansion at a rational nu (exact).
    pub fn eval(&self, nu: &Rational) -> Rational {
        // Horner in 1/nu, then scale by nu^-k
        let inv = Rational::one() / nu;
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &inv + c;
        }
        acc * powi(&inv, self.k as u64)
    }
}

/// Table h_n(1, 2, ..., k) of complete homogeneous symmetric polynomials
/// for k <= k_max, n <= n_max; h[k][n] built by the two-term recurrence
/// h_n(1..k) = h_n(1..k-1) + k h_{n-1}(1..k).
fn homogeneous_table(k_max: usize, n_max: usize) -> Vec<Vec<BigInt>> {
    let mut h = vec![vec![BigInt::zero(); n_max + 1]; k_max + 1];
    h[0][0] = BigInt::one();
    for k in 1..=k_max {
        for n in 0..=n_max {
            let carry = if n >= 1 {
                BigInt::from(k as u64) * &h[k][n - 1]
            } else {
                BigInt::zero()
            };
            h[k][n] = &h[k - 1][n] + carry;
        }
    }
    h
}

fn factorial(k: usize) -> BigInt {
    (1..=k as u64).map(BigInt::from).fold(BigInt::one(), |a, b| a * b)
}

/// Closed-form expansion coefficients of the family coefficient a_k (or
/// b_k): table[k][n] = lead(k) * (-1)^n h_n(1..k) for 1 <= k <= k_max.
fn expansion_coeff_table(target: LaurentTarget, k_max: usize, n_max: usize) -> Vec<Vec<Rational>> {
    let h = homogeneous_table(k_max, n_max);
    let mut table = vec![vec![Rational::zero(); n_max + 1]; k_max + 1];
    for k in 1..=k_max {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let lead = Rational::new(
            BigInt::from(sign) * target.lead_numerator(k),
            BigInt::from(4u32).pow(k as u32) * factorial(k),
        );
        for n in 0..=n_max {
            let s = if n % 2 == 0 { 1 } else { -1 };
            table[k][n] = &lead * Rational::from_integer(BigInt::from(s) * &h[k][n]);
        }
    }
    table
}

/// a_0^(k)..a_N^(k): expansion coefficients of a_k in powers of 1/nu.
pub fn laurent_a_coeffs(k: usize, n_max: usize) -> Vec<Rational> {
    assert!(k >= 1);
    expansion_coeff_table(LaurentTarget::Eta, k, n_max)[k].clone()
}

/// b_0^(k)..b_N^(k): the theta-side twin of [`laurent_a_coeffs`].
pub fn laurent_b_coeffs(k: usize, n_max: usize) -> Vec<Rational> {
    assert!(k >= 1);
    expansion_coeff_table(LaurentTarget::Theta, k, n_max)[k].clone()
}

/// Full table of Laurent coefficients L[k][n] for k <= k_max, n <= n_max
/// by the double recurrence.
pub(crate) fn laurent_tables(
    target: LaurentTarget,
    k_max: usize,
    n_max: usize,
) -> Vec<Vec<Rational>> {
    let a = expansion_coeff_table(target, k_max, n_max);
    let mut l = vec![vec![Rational::zero(); n_max + 1]; k_max + 1];
    for k in 1..=k_max {
        for n in 0..=n_max {
            let mut v = -rat_int(k as i64) * &a[k][n];
            for m in 0..=n {
                for i in 1..k {
                    v -= &a[i][m] * &l[k - i][n - m];
                }
            }
            l[k][n] = v;
        }
    }
    l
}

/// Laurent prefix of eta_k to order nu^-(k+N).
pub fn laurent_eta(k: usize, n_max: usize) -> LaurentCoeffs {
    assert!(k >= 1);
    LaurentCoeffs {
        k,
        target: LaurentTarget::Eta,
        coeffs: laurent_tables(LaurentTarget::Eta, k, n_max)[k].clone(),
    }
}

/// Laurent prefix of theta_k to order nu^-(k+N).
pub fn laurent_theta(k: usize, n_max: usize) -> LaurentCoeffs {
    assert!(k >= 1);
    LaurentCoeffs {
        k,
        target: LaurentTarget::Theta,
        coeffs: laurent_tables(LaurentTarget::Theta, k, n_max)[k].clone(),
    }
}

/// Laurent prefix for either target.
pub fn laurent(target: LaurentTarget, k: usize, n_max: usize) -> LaurentCoeffs {
    match target {
        LaurentTarget::Eta => laurent_eta(k, n_max),
        LaurentTarget::Theta => laurent_theta(k, n_max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use num_traits::Signed;

    fn order(n: i64) -> Order {
        Order::from_int(n).unwrap()
    }

    fn order_q(n: i64, d: i64) -> Order {
        Order::new(rat(n, d)).unwrap()
    }

    #[test]
    fn first_power_sums() {
        for nu in [order(0), order_q(1, 2), order(1), order_q(7, 3), order(10)] {
            let nu1 = nu.value() + rat_int(1);
            // WeierstrassG: S_1 = 3/(4(nu+1))
            assert_eq!(
                power_sums(SeriesFamily::WeierstrassG, &nu, 1).s(1),
                &(rat(3, 4) / &nu1)
            );
            // UConvexG: S_1 = 15/(4(nu+1))
            assert_eq!(
                power_sums(SeriesFamily::UConvexG, &nu, 1).s(1),
                &(rat(15, 4) / &nu1)
            );
            // WeierstrassH: S_1 = 1/(2(nu+1))
            assert_eq!(
                power_sums(SeriesFamily::WeierstrassH, &nu, 1).s(1),
                &(rat(1, 2) / &nu1)
            );
        }
    }

    #[test]
    fn convexg_second_power_sum() {
        // S_2 = (56 nu + 137) / (16 (nu+1)^2 (nu+2))
        for nu in [order(0), order(1), order_q(7, 3), order(50)] {
            let v = nu.value();
            let expected = (rat_int(56) * v + rat_int(137))
                / (rat_int(16) * powi(&(v + rat_int(1)), 2) * (v + rat_int(2)));
            assert_eq!(power_sums(SeriesFamily::ConvexG, &nu, 2).s(2), &expected);
        }
    }

    #[test]
    fn power_sums_positive() {
        for f in SeriesFamily::ALL {
            for nu in [order_q(-1, 2), order(0), order(1), order(10)] {
                let sums = power_sums(f, &nu, 8);
                for k in 1..=8 {
                    assert!(sums.s(k).is_positive(), "{:?} S_{} at nu={:?}", f, k, nu);
                }
            }
        }
    }

    #[test]
    fn expansion_coeff_examples() {
        // a_0^(1) = -3/4 and a_n^(1) = (-3/4)(-1)^n
        let a1 = laurent_a_coeffs(1, 5);
        for (n, c) in a1.iter().enumerate() {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(c, &(rat(-3, 4) * rat_int(sign)));
        }
        // a_0^(2) = 5/32, a_1^(2) = -15/32
        let a2 = laurent_a_coeffs(2, 3);
        assert_eq!(a2[0], rat(5, 32));
        assert_eq!(a2[1], rat(-15, 32));
        // b_0^(1) = -1/2, b_n^(1) = (-1/2)(-1)^n, b_0^(2) = 3/32
        let b1 = laurent_b_coeffs(1, 4);
        assert_eq!(b1[0], rat(-1, 2));
        assert_eq!(b1[3], rat(1, 2));
        assert_eq!(laurent_b_coeffs(2, 0)[0], rat(3, 32));
    }

    /// The published nested multi-sum form, evaluated literally:
    /// sum over chains 0 <= k_1 <= ... <= k_{k-1} <= n of
    /// (-1)^{k_1} (-2)^{k_2-k_1} ... (-k)^{n-k_{k-1}}.
    fn nested_sum(k: usize, n: usize) -> Rational {
        fn rec(level: usize, k: usize, lo: usize, n: usize, exps_acc: &mut Vec<usize>) -> Rational {
            if level == k {
                // exps_acc holds k_1..k_{k-1}; exponents are the gaps
                let mut total = Rational::one();
                let mut prev = 0usize;
                for (j, &kj) in exps_acc.iter().enumerate() {
                    total *= powi(&rat_int(-(j as i64 + 1)), (kj - prev) as u64);
                    prev = kj;
                }
                total *= powi(&rat_int(-(k as i64)), (n - prev) as u64);
                return total;
            }
            let mut total = Rational::zero();
            for x in lo..=n {
                exps_acc.push(x);
                total += rec(level + 1, k, x, n, exps_acc);
                exps_acc.pop();
            }
            total
        }
        if k == 1 {
            return powi(&rat_int(-1), n as u64);
        }
        rec(1, k, 0, n, &mut Vec::new())
    }

    #[test]
    fn closed_form_equals_nested_sum() {
        for k in 1..=5usize {
            let lead_eta = Rational::new(
                BigInt::from(if k % 2 == 0 { 1 } else { -1 }) * BigInt::from(2 * k as i64 + 1),
                BigInt::from(4u32).pow(k as u32) * factorial(k),
            );
            for (n, an) in laurent_a_coeffs(k, 5).iter().enumerate() {
                assert_eq!(an, &(&lead_eta * nested_sum(k, n)), "a k={} n={}", k, n);
            }
            let lead_theta = Rational::new(
                BigInt::from(if k % 2 == 0 { 1 } else { -1 }) * BigInt::from(k as i64 + 1),
                BigInt::from(4u32).pow(k as u32) * factorial(k),
            );
            for (n, bn) in laurent_b_coeffs(k, 5).iter().enumerate() {
                assert_eq!(bn, &(&lead_theta * nested_sum(k, n)), "b k={} n={}", k, n);
            }
        }
    }

    #[test]
    fn laurent_leading_values() {
        let eta = laurent_tables(LaurentTarget::Eta, 6, 4);
        // eta_n^(1) = (3/4)(-1)^n
        for (n, v) in eta[1].iter().enumerate() {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(v, &(rat(3, 4) * rat_int(sign)));
        }
        // eta_0^(2) = -2 a_0^(2) - a_0^(1) eta_0^(1) = 1/4
        assert_eq!(eta[2][0], rat(1, 4));
        let theta = laurent_tables(LaurentTarget::Theta, 6, 4);
        for (n, v) in theta[1].iter().enumerate() {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(v, &(rat(1, 2) * rat_int(sign)));
        }
        assert_eq!(theta[2][0], rat(1, 16));
    }

    /// Independent combinatorial oracle: h_n(1, 2, ..., k) counts
    /// partitions of {1, ..., n+k} into k nonempty blocks, i.e. equals
    /// the Stirling number S(n+k, k), which has its own recurrence
    /// S(n+1, j) = j S(n, j) + S(n, j-1).
    #[test]
    fn homogeneous_table_matches_stirling_numbers() {
        let n_max = 10usize;
        let k_max = 8usize;
        let h = homogeneous_table(k_max, n_max);
        let size = n_max + k_max + 1;
        let mut stirling = vec![vec![BigInt::zero(); size]; size];
        stirling[0][0] = BigInt::one();
        for n in 1..size {
            for j in 1..=n {
                stirling[n][j] = BigInt::from(j as u64) * &stirling[n - 1][j] + &stirling[n - 1][j - 1];
            }
        }
        for k in 1..=k_max {
            for n in 0..=n_max {
                assert_eq!(h[k][n], stirling[n + k][k], "h_{}(1..{})", n, k);
            }
        }
    }

    /// Numeric cross-check of the Laurent leading coefficients: the exact
    /// power sums at large nu, scaled by nu^k, converge to L_0^(k). The
    /// exact sums stand in for summation over the (transcendental) zeros.
    #[test]
    fn leading_coeffs_match_large_nu_power_sums() {
        let big = order(10_000);
        let eta = power_sums(SeriesFamily::WeierstrassG, &big, 3);
        let theta = power_sums(SeriesFamily::WeierstrassH, &big, 3);
        let nu = big.value();
        // |nu^2 eta_2 - 1/4| = O(1/nu)
        let scaled = powi(nu, 2) * eta.s(2);
        assert!((scaled - rat(1, 4)).abs() < rat(1, 10_000));
        let scaled = powi(nu, 2) * theta.s(2);
        assert!((scaled - rat(1, 16)).abs() < rat(1, 10_000));
        let scaled = powi(nu, 3) * eta.s(3);
        assert!((scaled - rat(1, 8)).abs() < rat(1, 10_000));
        let scaled = powi(nu, 3) * theta.s(3);
        assert!((scaled - rat(1, 64)).abs() < rat(1, 10_000));
    }

    /// Truncated Laurent vs exact power sums: error drops by at least
    /// 0.9 * 2^(k+4) when nu doubles from 100 to 200 (N = 4 prefix, so
    /// the true decay is 2^(k+5)).
    #[test]
    fn laurent_error_shrinks_on_doubling() {
        for k in 1..=3usize {
            for (target, family) in [
                (LaurentTarget::Eta, SeriesFamily::WeierstrassG),
                (LaurentTarget::Theta, SeriesFamily::WeierstrassH),
            ] {
                let prefix = laurent(target, k, 4);
                let err = |nu_int: i64| {
                    let nu = order(nu_int);
                    let exact = power_sums(family, &nu, k).s(k).clone();
                    (exact - prefix.eval(nu.value())).abs()
                };
                let e100 = err(100);
                let e200 = err(200);
                let needed = rat(9, 10) * powi(&rat_int(2), k as u64 + 4);
                assert!(
                    e100 >= needed * &e200,
                    "{:?} k={} ratio {}",
                    target,
                    k,
                    e100 / e200
                );
            }
        }
    }
}
