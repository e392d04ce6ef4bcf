//! Truncated formal power series in one variable over [`Rational`],
//! including the secant-count generating function.
//!
//! Truncation order is an explicit argument everywhere; operations never
//! silently extend precision. A binary operation on series of different
//! orders truncates to the smaller one.

use crate::exact::{binomial, binomial_int, frac, pow4, rat, Rational};
use num_traits::{One, Zero};

/// Truncated power series: `coeffs[k]` is the coefficient of z^k,
/// 0 <= k <= order, with `coeffs.len() == order + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series1 {
    coeffs: Vec<Rational>,
}

impl Series1 {
    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        Series1 {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series 1 at the given truncation order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Build a series from explicit coefficients; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Series1 { coeffs }
    }

    /// Polynomial with the given low-order coefficients, padded with zeros.
    pub fn polynomial(low: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, &c) in low.iter().enumerate().take(order + 1) {
            s.coeffs[k] = rat(c);
        }
        s
    }

    /// Truncation order (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of z^k. Panics above the truncation order: the series
    /// makes no claim about those coefficients.
    pub fn coeff(&self, k: usize) -> &Rational {
        assert!(k <= self.order(), "coefficient {} beyond truncation order {}", k, self.order());
        &self.coeffs[k]
    }

    /// All coefficients, 0..=order.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Copy truncated (or zero-padded is forbidden: `new_order <= order`).
    pub fn truncate(&self, new_order: usize) -> Self {
        assert!(new_order <= self.order(), "cannot extend a truncated series");
        Series1 {
            coeffs: self.coeffs[..=new_order].to_vec(),
        }
    }

    pub fn add(&self, other: &Series1) -> Series1 {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        Series1 { coeffs }
    }

    pub fn sub(&self, other: &Series1) -> Series1 {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &other.coeffs[k])
            .collect();
        Series1 { coeffs }
    }

    pub fn neg(&self) -> Series1 {
        Series1 {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Series1 {
        Series1 {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Cauchy product, truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Series1) -> Series1 {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Series1 { coeffs }
    }

    /// Multiply by z^k, shifting coefficients up; the top k coefficients
    /// fall off the truncation order.
    pub fn shift_up(&self, k: usize) -> Series1 {
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for i in k..=order {
            coeffs[i] = self.coeffs[i - k].clone();
        }
        Series1 { coeffs }
    }

    /// Divide by z^k. Panics unless the k lowest coefficients vanish.
    /// The result keeps the same order (its top k coefficients are not
    /// claimed by the input, so the order drops by k).
    pub fn shift_down(&self, k: usize) -> Series1 {
        for i in 0..k {
            assert!(self.coeffs[i].is_zero(), "series not divisible by z^{}", k);
        }
        Series1 {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Multiplicative inverse. Panics when the constant term is zero.
    pub fn inverse(&self) -> Series1 {
        let a0 = &self.coeffs[0];
        assert!(!a0.is_zero(), "cannot invert a series with zero constant term");
        let order = self.order();
        let inv_a0 = Rational::one() / a0;
        let mut out = vec![Rational::zero(); order + 1];
        out[0] = inv_a0.clone();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out[n] = -acc * &inv_a0;
        }
        Series1 { coeffs: out }
    }

    /// Integer power, by repeated squaring. A negative exponent inverts
    /// first and therefore panics on a zero constant term.
    pub fn pow_int(&self, e: i64) -> Series1 {
        if e == 0 {
            return Series1::one(self.order());
        }
        let (mut base, mut exp) = if e < 0 {
            (self.inverse(), (-e) as u64)
        } else {
            (self.clone(), e as u64)
        };
        let mut acc = Series1::one(self.order());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal exponential. Requires constant term 0.
    ///
    /// Uses the recurrence n b_n = sum_{k=1}^{n} k a_k b_{n-k} for b = exp(a).
    pub fn exp(&self) -> Series1 {
        assert!(
            self.coeffs[0].is_zero(),
            "exp requires a series with constant term 0"
        );
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        out[0] = Rational::one();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += rat(k as i64) * &self.coeffs[k] * &out[n - k];
                }
            }
            out[n] = acc / rat(n as i64);
        }
        Series1 { coeffs: out }
    }

    /// Formal logarithm. Requires constant term 1.
    ///
    /// Uses the recurrence n a_n = n b_n - sum_{k=1}^{n-1} k a_k b_{n-k}
    /// for a = log(b).
    pub fn log(&self) -> Series1 {
        assert!(
            self.coeffs[0].is_one(),
            "log requires a series with constant term 1"
        );
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        for n in 1..=order {
            let mut acc = rat(n as i64) * &self.coeffs[n];
            for k in 1..n {
                if !self.coeffs[n - k].is_zero() {
                    acc -= rat(k as i64) * &out[k] * &self.coeffs[n - k];
                }
            }
            out[n] = acc / rat(n as i64);
        }
        Series1 { coeffs: out }
    }

    /// Rational power, computed as exp(e log a). Requires constant term 1,
    /// which is all the closed formulas ever need.
    pub fn pow_rational(&self, e: &Rational) -> Series1 {
        assert!(
            self.coeffs[0].is_one(),
            "rational powers are only defined for constant term 1"
        );
        self.log().scale(e).exp()
    }

    /// Formal integral with the convention that z^n integrates to
    /// z^{n+1}/(n+1); the constant term of the output is 0 and the order
    /// grows by one.
    pub fn integrate(&self) -> Series1 {
        let mut coeffs = vec![Rational::zero(); self.order() + 2];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k + 1] = c / rat(k as i64 + 1);
        }
        Series1 { coeffs }
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Series1 {
        assert!(self.order() >= 1, "cannot differentiate an order-0 series");
        let coeffs = (1..=self.order())
            .map(|k| &self.coeffs[k] * rat(k as i64))
            .collect();
        Series1 { coeffs }
    }

    /// Substitute z -> -z, flipping the sign of odd coefficients.
    pub fn alternating(&self) -> Series1 {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Series1 { coeffs }
    }
}

/// The Catalan generating series: coefficient n is C_n = binom(2n, n)/(n+1).
pub fn catalan_series(order: usize) -> Series1 {
    let coeffs = (0..=order as u64)
        .map(|n| binomial_int(2 * n as i64, n) / rat(n as i64 + 1))
        .collect();
    Series1::from_coeffs(coeffs)
}

/// The polynomial 1 + 4z at the given order.
pub fn one_plus_4z(order: usize) -> Series1 {
    Series1::polynomial(&[1, 4], order)
}

/// (1 + 4z)^{1/2} as a truncated series (binomial series, all exact).
pub fn sqrt_one_plus_4z(order: usize) -> Series1 {
    let half = frac(1, 2);
    let coeffs = (0..=order as u64)
        .map(|k| binomial(&half, k) * pow4(k))
        .collect();
    Series1::from_coeffs(coeffs)
}

/// The secant-count generating function Z_{g,m}(z) = C(-z)^{2g-2-m} (1+4z)^{(g-1)/2}.
///
/// Coefficient d is the expected number N_d(g, m) of d-secant (d-2)-planes
/// to a (2d-2)-dimensional degree-m series on a genus-g curve; coefficient 0
/// is 1 and coefficient 1 is m (the points of a degree-m curve on a general
/// hyperplane).
pub fn secant_gf(g: i64, m: i64, order: usize) -> Series1 {
    assert!(g >= 0, "genus must be nonnegative");
    let c_neg = catalan_series(order).alternating();
    let half_g_minus_1 = frac(g - 1, 2);
    c_neg
        .pow_int(2 * g - 2 - m)
        .mul(&one_plus_4z(order).pow_rational(&half_g_minus_1))
}

/// The exponential form of the same generating function:
/// exp(sum_{n>0} (-1)^{n-1}/n [binom(2n-1, n-1) m + (4^{n-1} - binom(2n-1, n-1)) (2g-2)] z^n).
pub fn secant_gf_exponential_form(g: i64, m: i64, order: usize) -> Series1 {
    let mut inner = Series1::zero(order);
    let mut coeffs = vec![Rational::zero()];
    for n in 1..=order as u64 {
        let b = binomial_int(2 * n as i64 - 1, n - 1);
        let sign = if n % 2 == 1 { rat(1) } else { rat(-1) };
        let bracket = &b * rat(m) + (pow4(n - 1) - &b) * rat(2 * g - 2);
        coeffs.push(sign * bracket / rat(n as i64));
    }
    inner.coeffs = coeffs;
    inner.exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use proptest::prelude::*;

    #[test]
    fn mul_truncates_cauchy_product() {
        let a = Series1::polynomial(&[1, 1], 2);
        let b = Series1::polynomial(&[1, -1], 2);
        assert_eq!(a.mul(&b), Series1::polynomial(&[1, 0, -1], 2));
        assert_eq!(a.mul(&Series1::one(2)), a);
    }

    #[test]
    fn geometric_series_inverse() {
        let inv = Series1::polynomial(&[1, 1], 3).pow_int(-1);
        assert_eq!(inv, Series1::polynomial(&[1, -1, 1, -1], 3));
    }

    #[test]
    fn pow_zero_is_one() {
        let a = Series1::polynomial(&[1, 7, -2], 4);
        assert_eq!(a.pow_int(0), Series1::one(4));
    }

    #[test]
    fn exp_log_basics() {
        assert_eq!(Series1::zero(4).exp(), Series1::one(4));
        let log1pz = Series1::polynomial(&[1, 1], 3).log();
        let expect = Series1::from_coeffs(vec![rat(0), rat(1), frac(-1, 2), frac(1, 3)]);
        assert_eq!(log1pz, expect);
        let a = Series1::polynomial(&[1, 1, 1], 6);
        assert_eq!(a.log().exp(), a);
    }

    #[test]
    fn exp_log_round_trip_zero_constant() {
        let a = Series1::from_coeffs(vec![rat(0), rat(2), frac(-5, 3), rat(1), rat(4)]);
        assert_eq!(a.exp().log(), a);
    }

    #[test]
    fn sqrt_of_one_plus_4z() {
        // (1+4z)^{1/2} = 1 + 2z - 2z^2 + ...
        let s = one_plus_4z(2).pow_rational(&frac(1, 2));
        assert_eq!(s, Series1::polynomial(&[1, 2, -2], 2));
        assert_eq!(s, sqrt_one_plus_4z(2));
        assert_eq!(s.mul(&s), one_plus_4z(2));
        let a = Series1::polynomial(&[1, 3, -1, 2], 5);
        assert_eq!(a.pow_rational(&rat(1)), a);
    }

    #[test]
    fn integrate_and_derive() {
        assert_eq!(Series1::one(0).integrate(), Series1::polynomial(&[0, 1], 1));
        let z2 = Series1::polynomial(&[0, 0, 1], 2);
        assert_eq!(
            z2.integrate(),
            Series1::from_coeffs(vec![rat(0), rat(0), rat(0), frac(1, 3)])
        );
        let a = Series1::polynomial(&[3, 1, 4, 1, 5], 4);
        assert_eq!(a.integrate().derivative(), a);
    }

    #[test]
    fn catalan_values_and_functional_equation() {
        let c = catalan_series(6);
        assert_eq!(c.coeffs()[..4], [rat(1), rat(1), rat(2), rat(5)]);
        assert_eq!(*c.coeff(5), rat(42));
        // C(z) = 1 + z C(z)^2
        let rhs = Series1::one(6).add(&c.mul(&c).shift_up(1));
        assert_eq!(c, rhs);
    }

    #[test]
    fn catalan_matches_square_root_closed_form() {
        // C(z) = (1 - sqrt(1-4z)) / (2z)
        let order = 12;
        let sqrt_1m4z = Series1::polynomial(&[1, -4], order + 1).pow_rational(&frac(1, 2));
        let closed = Series1::one(order + 1)
            .sub(&sqrt_1m4z)
            .shift_down(1)
            .scale(&frac(1, 2));
        assert_eq!(closed, catalan_series(order));
    }

    #[test]
    fn secant_gf_rational_quartic() {
        // Degree-4 rational curve: 1 node count 3 at d=2, no trisecants at d=3.
        let z = secant_gf(0, 4, 3);
        assert_eq!(z.coeffs(), &[rat(1), rat(4), rat(3), rat(0)]);
    }

    #[test]
    fn secant_gf_constant_term_is_one() {
        for g in 0..6 {
            for m in 1..8 {
                assert_eq!(*secant_gf(g, m, 0).coeff(0), rat(1));
            }
        }
    }

    #[test]
    fn secant_gf_genus_three_sextic_nodes() {
        // Plane sextic of genus 3 has (5*4)/2 - 3 = 7 nodes.
        assert_eq!(*secant_gf(3, 6, 2).coeff(2), rat(7));
    }

    #[test]
    fn secant_gf_agrees_with_exponential_form() {
        for g in [0, 1, 2, 5] {
            for m in [1, 3, 7, 10] {
                assert_eq!(secant_gf(g, m, 20), secant_gf_exponential_form(g, m, 20));
            }
        }
    }

    #[test]
    fn catalan_alternating_closed_form() {
        // C(-z) = 2 / ((1+4z)^{1/2} + 1)
        let order = 30;
        let denom = sqrt_one_plus_4z(order).add(&Series1::one(order));
        let closed = denom.inverse().scale(&rat(2));
        assert_eq!(closed, catalan_series(order).alternating());
    }

    #[test]
    fn antiderivative_identity_for_alternating_catalan() {
        // d/dz [1 - (1+4z)^{1/2} + log(((1+4z)^{1/2} + 1)/2)] = (1 - (1+4z)^{1/2})/(2z),
        // and the right side is -C(-z).
        let order = 31;
        let sqrt = sqrt_one_plus_4z(order);
        let assembled = Series1::one(order)
            .sub(&sqrt)
            .add(&sqrt.add(&Series1::one(order)).scale(&frac(1, 2)).log());
        let lhs = assembled.derivative();
        let rhs = Series1::one(order).sub(&sqrt).shift_down(1).scale(&frac(1, 2));
        assert_eq!(lhs, rhs.truncate(order - 1));
        assert_eq!(lhs, catalan_series(order - 1).alternating().neg());
    }

    fn arb_series(order: usize) -> impl Strategy<Value = Series1> {
        proptest::collection::vec((-9i64..=9, 1i64..=4), order + 1)
            .prop_map(|v| Series1::from_coeffs(v.into_iter().map(|(p, q)| frac(p, q)).collect()))
    }

    proptest! {
        #[test]
        fn mul_is_commutative_and_associative(a in arb_series(6), b in arb_series(6), c in arb_series(6)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn square_matches_self_product(a in arb_series(6)) {
            prop_assert_eq!(a.pow_int(2), a.mul(&a));
        }

        #[test]
        fn inverse_is_two_sided(mut a in arb_series(6)) {
            if a.coeffs[0].is_zero() {
                a.coeffs[0] = rat(1);
            }
            prop_assert_eq!(a.mul(&a.inverse()), Series1::one(6));
        }
    }

    #[test]
    fn alternating_catalan_convolution_matches_square() {
        let c = catalan_series(10).alternating();
        // direct coefficientwise convolution
        let mut conv = Series1::zero(10);
        for i in 0..=10usize {
            for j in 0..=10 - i {
                let term = c.coeff(i) * c.coeff(j);
                let k = i + j;
                conv.coeffs[k] += term;
            }
        }
        assert_eq!(conv, c.mul(&c));
    }
}
