//! Ordinary potential polynomials and the series-inversion route to
//! power sums.
//!
//! The ordinary potential polynomial A_{alpha,n}(a_1,...,a_n) is the
//! coefficient of z^n in (1 + sum a_k z^k)^alpha, i.e. the sum over all
//! multiplicity sequences l_1 + 2 l_2 + ... + n l_n = n of
//!
//! ```text
//! binom(alpha, l) l! / (l_1! ... l_n!) * a_1^{l_1} ... a_n^{l_n},
//! l = l_1 + ... + l_n,
//! ```
//!
//! so A_{alpha,0} = 1, A_{alpha,1} = alpha a_1,
//! A_{alpha,2} = alpha a_2 + binom(alpha,2) a_1^2.
//!
//! The reciprocal series [1 + sum kappa_n t^n]^{-1} = sum pi_m t^m has
//! pi_0 = 1 and, for kappa_1 != 0,
//!
//! ```text
//! pi_m = sum_{p=1}^{m} (-1)^p kappa_1^p A_{p,m-p}(f_1,...,f_{m-p}),
//! f_n = kappa_{n+1} / kappa_1,
//! ```
//!
//! which feeds the second (route-redundant) computation of power sums:
//! with xi the derivative-over-function numerator coefficients of a
//! family series, -w S_{n+1} = sum_{m<=n} pi_m xi_{n-m}, where w = 2 for
//! the squared-variable families (log derivative taken in z with
//! t = z^2) and w = 1 for the plain ones. The factor w is attached to
//! the family's variable kind, never passed by callers.

use crate::exactnum::{powi, rat_int, Rational};
use crate::rayleigh::PowerSums;
use crate::series::{Order, SeriesEvaluator, SeriesFamily, VariableKind};
use num_traits::{One, Zero};

/// Visit every multiplicity vector (l_1, ..., l_n) with
/// sum i*l_i = n, in colexicographic order of the part sizes.
fn for_each_partition(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(remaining: usize, part: usize, multiplicities: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if remaining == 0 {
            f(multiplicities);
            return;
        }
        if part == 0 {
            return;
        }
        // try every multiplicity of `part`, largest part first
        let max_count = remaining / part;
        for count in 0..=max_count {
            multiplicities[part - 1] = count;
            rec(remaining - count * part, part - 1, multiplicities, f);
        }
        multiplicities[part - 1] = 0;
    }
    let mut multiplicities = vec![0usize; n];
    if n == 0 {
        f(&multiplicities);
        return;
    }
    rec(n, n, &mut multiplicities, f);
}

/// A_{alpha,n}(a_1,...,a_n) with n = a.len(), by the partition sum with
/// memoized falling factorials alpha (alpha-1) ... (alpha-l+1).
pub fn potential_poly(alpha: &Rational, a: &[Rational]) -> Rational {
    let n = a.len();
    // falling[l] = alpha (alpha-1) ... (alpha-l+1); falling[0] = 1
    let mut falling: Vec<Rational> = vec![Rational::one()];
    for l in 0..n {
        let next = falling.last().unwrap() * (alpha - rat_int(l as i64));
        falling.push(next);
    }
    let mut total = Rational::zero();
    for_each_partition(n, &mut |mults| {
        let l: usize = mults.iter().sum();
        // binom(alpha, l) * l! = falling factorial of length l
        let mut term = falling[l].clone();
        for (i, &li) in mults.iter().enumerate() {
            if li == 0 {
                continue;
            }
            for j in 1..=li {
                term /= rat_int(j as i64);
            }
            term *= powi(&a[i], li as u64);
        }
        total += term;
    });
    total
}

/// Direct reciprocal-series recurrence pi_m = -sum_{j=1}^m kappa_j
/// pi_{m-j}; the fallback when kappa_1 = 0, and the test oracle for the
/// potential-polynomial form.
pub fn series_reciprocal(kappa: &[Rational]) -> Vec<Rational> {
    let m_max = kappa.len();
    let mut pi = vec![Rational::one()];
    for m in 1..=m_max {
        let mut v = Rational::zero();
        for j in 1..=m {
            v -= &kappa[j - 1] * &pi[m - j];
        }
        pi.push(v);
    }
    pi
}

/// Coefficients pi_0..pi_M of [1 + sum_{n=1}^{M} kappa_n t^n]^{-1},
/// via potential polynomials when kappa_1 != 0 and by direct series
/// inversion otherwise.
pub fn pi_coeffs(kappa: &[Rational]) -> Vec<Rational> {
    let m_max = kappa.len();
    if m_max == 0 {
        return vec![Rational::one()];
    }
    let kappa1 = &kappa[0];
    if kappa1.is_zero() {
        return series_reciprocal(kappa);
    }
    let f: Vec<Rational> = (1..m_max).map(|n| &kappa[n] / kappa1).collect();
    let mut pi = vec![Rational::one()];
    for m in 1..=m_max {
        let mut v = Rational::zero();
        let mut sign = Rational::one();
        for p in 1..=m {
            sign = -sign; // (-1)^p
            v += &sign * powi(kappa1, p as u64) * potential_poly(&rat_int(p as i64), &f[..m - p]);
        }
        pi.push(v);
    }
    pi
}

/// Power sums by the potential-polynomial route; must agree exactly with
/// the Newton-identity route of [`crate::rayleigh::power_sums`].
pub fn power_sums_via_potential(
    family: SeriesFamily,
    order: &Order,
    k_max: usize,
) -> PowerSums {
    assert!(k_max >= 1, "k_max must be at least 1");
    let mut ev = SeriesEvaluator::new(family, order.clone());
    let coeffs: Vec<Rational> = (0..=k_max).map(|n| ev.coefficient(n)).collect();
    let w = match family.variable_kind() {
        VariableKind::Squared => rat_int(2),
        VariableKind::Plain => rat_int(1),
    };
    // xi_n: coefficients of the derivative-over-function numerator in the
    // variable the log derivative is taken in (z for squared families,
    // giving the extra factor 2)
    let xi: Vec<Rational> = (0..k_max)
        .map(|n| &w * rat_int(n as i64 + 1) * &coeffs[n + 1])
        .collect();
    let pi = pi_coeffs(&coeffs[1..k_max]);
    let mut values = Vec::with_capacity(k_max);
    for n in 0..k_max {
        let mut acc = Rational::zero();
        for m in 0..=n {
            acc += &pi[m] * &xi[n - m];
        }
        values.push(-acc / &w);
    }
    PowerSums {
        family,
        order: order.clone(),
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::rayleigh::power_sums;
    use proptest::prelude::*;

    fn order(n: i64) -> Order {
        Order::from_int(n).unwrap()
    }

    #[test]
    fn potential_poly_base_cases() {
        let alpha = rat(7, 2);
        assert_eq!(potential_poly(&alpha, &[]), Rational::one());
        let a1 = rat(3, 5);
        assert_eq!(potential_poly(&alpha, std::slice::from_ref(&a1)), &alpha * &a1);
        // A_{alpha,2} = alpha a_2 + binom(alpha,2) a_1^2
        let a2 = rat(-2, 7);
        let binom2 = &alpha * (&alpha - rat_int(1)) / rat_int(2);
        assert_eq!(
            potential_poly(&alpha, &[a1.clone(), a2.clone()]),
            &alpha * &a2 + binom2 * &a1 * &a1
        );
    }

    /// Generating-function recurrence route (J.C.P. Miller):
    /// n A_n = sum_{j=1}^{n} ((alpha+1) j - n) a_j A_{n-j}.
    fn potential_poly_by_recurrence(alpha: &Rational, a: &[Rational], n_max: usize) -> Vec<Rational> {
        let mut out = vec![Rational::one()];
        for n in 1..=n_max {
            let mut acc = Rational::zero();
            for j in 1..=n {
                let weight = (alpha + rat_int(1)) * rat_int(j as i64) - rat_int(n as i64);
                acc += weight * &a[j - 1] * &out[n - j];
            }
            out.push(acc / rat_int(n as i64));
        }
        out
    }

    #[test]
    fn partition_sum_matches_recurrence() {
        let a: Vec<Rational> = vec![
            rat(1, 2),
            rat(-1, 3),
            rat(2, 5),
            rat(1, 7),
            rat(-3, 4),
            rat(5, 11),
        ];
        for alpha in [rat_int(-1), rat_int(2), rat_int(3), rat(1, 2)] {
            let by_rec = potential_poly_by_recurrence(&alpha, &a, 6);
            for n in 0..=6usize {
                assert_eq!(
                    potential_poly(&alpha, &a[..n]),
                    by_rec[n],
                    "alpha={} n={}",
                    alpha,
                    n
                );
            }
        }
    }

    #[test]
    fn pi_examples() {
        let kappa = vec![rat(2, 3), rat(-1, 4), rat(1, 5)];
        let pi = pi_coeffs(&kappa);
        assert_eq!(pi[0], Rational::one());
        assert_eq!(pi[1], rat(-2, 3));
        // pi_2 = kappa_1^2 - kappa_2
        assert_eq!(pi[2], rat(4, 9) + rat(1, 4));
    }

    #[test]
    fn pi_fallback_on_zero_leading_coefficient() {
        let kappa = vec![rat_int(0), rat(1, 2), rat(-1, 3)];
        let pi = pi_coeffs(&kappa);
        // (1 + k2 t^2 + k3 t^3)^-1 = 1 - k2 t^2 - k3 t^3 + ...
        assert_eq!(pi[1], rat_int(0));
        assert_eq!(pi[2], rat(-1, 2));
        assert_eq!(pi[3], rat(1, 3));
    }

    #[test]
    fn pi_convolution_is_identity() {
        let kappa = vec![rat(1, 2), rat(-2, 7), rat(3, 5), rat(-1, 9), rat(4, 3)];
        let pi = pi_coeffs(&kappa);
        // (1 + sum kappa_n t^n)(sum pi_m t^m) = 1 through order M
        for n in 1..=kappa.len() {
            let mut conv = pi[n].clone();
            for j in 1..=n {
                conv += &kappa[j - 1] * &pi[n - j];
            }
            assert_eq!(conv, Rational::zero(), "order {}", n);
        }
    }

    #[test]
    fn potential_route_examples() {
        // ConvexG k=1: S_1 = 9/(4(nu+1)) = -xi_0/2
        for nu in [order(0), order(1), order(10)] {
            let nu1 = nu.value() + rat_int(1);
            assert_eq!(
                power_sums_via_potential(SeriesFamily::ConvexG, &nu, 1).s(1),
                &(rat(9, 4) / &nu1)
            );
            // UConvexG k=2: S_2 = 45(4 nu + 9) / (16 (nu+1)^2 (nu+2))
            let expected = rat_int(45) * (rat_int(4) * nu.value() + rat_int(9))
                / (rat_int(16) * powi(&nu1, 2) * (nu.value() + rat_int(2)));
            assert_eq!(
                power_sums_via_potential(SeriesFamily::UConvexG, &nu, 2).s(2),
                &expected
            );
            // UConvexH k=1: the direct assembly gives sigma_1 = -lambda_0 =
            // 3/(2(nu+1)), matching the Newton route (not 15/(8(nu+1)))
            assert_eq!(
                power_sums_via_potential(SeriesFamily::UConvexH, &nu, 1).s(1),
                power_sums(SeriesFamily::UConvexH, &nu, 1).s(1)
            );
            assert_eq!(
                power_sums_via_potential(SeriesFamily::UConvexH, &nu, 1).s(1),
                &(rat(3, 2) / &nu1)
            );
        }
    }

    #[test]
    fn routes_agree_exactly() {
        for f in SeriesFamily::ALL {
            for nu in [
                order(0),
                Order::new(rat(1, 2)).unwrap(),
                order(1),
                Order::new(rat(7, 3)).unwrap(),
                order(10),
            ] {
                let newton = power_sums(f, &nu, 8);
                let potential = power_sums_via_potential(f, &nu, 8);
                for k in 1..=8 {
                    assert_eq!(newton.s(k), potential.s(k), "{:?} k={}", f, k);
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn reciprocal_routes_agree(
            k1n in 1i64..20, k2n in -20i64..20, k3n in -20i64..20, k4n in -20i64..20
        ) {
            let kappa = vec![rat(k1n, 7), rat(k2n, 5), rat(k3n, 11), rat(k4n, 3)];
            prop_assert_eq!(pi_coeffs(&kappa), series_reciprocal(&kappa));
        }
    }
}
