//! Truncated formal power series in two variables over [`Rational`],
//! just enough for the bivariate coefficient extractions behind the
//! r = s secant-plane counts.

use crate::exact::{rat, Rational};
use num_traits::{One, Zero};

/// Bivariate truncated series: `coeffs[i][j]` is the coefficient of
/// t1^i t2^j, for 0 <= i <= order1 and 0 <= j <= order2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series2 {
    coeffs: Vec<Vec<Rational>>,
}

impl Series2 {
    pub fn zero(order1: usize, order2: usize) -> Self {
        Series2 {
            coeffs: vec![vec![Rational::zero(); order2 + 1]; order1 + 1],
        }
    }

    pub fn one(order1: usize, order2: usize) -> Self {
        let mut s = Self::zero(order1, order2);
        s.coeffs[0][0] = Rational::one();
        s
    }

    /// Polynomial from explicit terms ((i, j), coefficient); terms beyond
    /// the truncation grid are dropped.
    pub fn polynomial(terms: &[((usize, usize), i64)], order1: usize, order2: usize) -> Self {
        let mut s = Self::zero(order1, order2);
        for &((i, j), c) in terms {
            if i <= order1 && j <= order2 {
                s.coeffs[i][j] = rat(c);
            }
        }
        s
    }

    pub fn order1(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn order2(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        assert!(
            i <= self.order1() && j <= self.order2(),
            "coefficient ({}, {}) beyond truncation orders ({}, {})",
            i,
            j,
            self.order1(),
            self.order2()
        );
        &self.coeffs[i][j]
    }

    /// True when the grid is square and symmetric under swapping t1 and t2.
    pub fn is_symmetric(&self) -> bool {
        self.order1() == self.order2()
            && (0..=self.order1())
                .all(|i| (0..i).all(|j| self.coeffs[i][j] == self.coeffs[j][i]))
    }

    pub fn mul(&self, other: &Series2) -> Series2 {
        let o1 = self.order1().min(other.order1());
        let o2 = self.order2().min(other.order2());
        let mut out = Series2::zero(o1, o2);
        for i1 in 0..=o1 {
            for j1 in 0..=o2 {
                if self.coeffs[i1][j1].is_zero() {
                    continue;
                }
                for i2 in 0..=o1 - i1 {
                    for j2 in 0..=o2 - j1 {
                        if other.coeffs[i2][j2].is_zero() {
                            continue;
                        }
                        out.coeffs[i1 + i2][j1 + j2] += &self.coeffs[i1][j1] * &other.coeffs[i2][j2];
                    }
                }
            }
        }
        out
    }

    /// Multiplicative inverse; panics when the constant term is zero.
    ///
    /// Solved coefficient by coefficient in graded-lexicographic order from
    /// the convolution (self * out)[p][q] = [p == 0 && q == 0].
    pub fn inverse(&self) -> Series2 {
        let a00 = &self.coeffs[0][0];
        assert!(!a00.is_zero(), "cannot invert a bivariate series with zero constant term");
        let (o1, o2) = (self.order1(), self.order2());
        let inv_a00 = Rational::one() / a00;
        let mut out = Series2::zero(o1, o2);
        for p in 0..=o1 {
            for q in 0..=o2 {
                if p == 0 && q == 0 {
                    out.coeffs[0][0] = inv_a00.clone();
                    continue;
                }
                let mut acc = Rational::zero();
                for i in 0..=p {
                    for j in 0..=q {
                        if i == 0 && j == 0 {
                            continue;
                        }
                        if !self.coeffs[i][j].is_zero() {
                            acc += &self.coeffs[i][j] * &out.coeffs[p - i][q - j];
                        }
                    }
                }
                out.coeffs[p][q] = -acc * &inv_a00;
            }
        }
        out
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn pow_int(&self, e: i64) -> Series2 {
        if e == 0 {
            return Series2::one(self.order1(), self.order2());
        }
        let (mut base, mut exp) = if e < 0 {
            (self.inverse(), (-e) as u64)
        } else {
            (self.clone(), e as u64)
        };
        let mut acc = Series2::one(self.order1(), self.order2());
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
}

/// Coefficient of t1^{s+1} t2^{s+1} in
/// ((1+t1)(1+t2))^e (1+t1+t2)^g (t1-t2)^2 [ * (2 t1 t2 + t1 + t2) ],
/// the bivariate product behind the r = s plane counts. The exponent `e`
/// may be negative (the unit factor is inverted).
pub fn s2_build_and_extract(e: i64, g: i64, s: usize, line_factor: bool) -> Rational {
    assert!(g >= 0, "genus must be nonnegative");
    let (o1, o2) = (s + 1, s + 1);
    let unit = Series2::polynomial(&[((0, 0), 1), ((1, 0), 1)], o1, o2)
        .mul(&Series2::polynomial(&[((0, 0), 1), ((0, 1), 1)], o1, o2));
    let genus_factor = Series2::polynomial(&[((0, 0), 1), ((1, 0), 1), ((0, 1), 1)], o1, o2);
    let square = Series2::polynomial(&[((2, 0), 1), ((1, 1), -2), ((0, 2), 1)], o1, o2);
    let mut product = unit.pow_int(e).mul(&genus_factor.pow_int(g)).mul(&square);
    if line_factor {
        product = product.mul(&Series2::polynomial(
            &[((1, 1), 2), ((1, 0), 1), ((0, 1), 1)],
            o1,
            o2,
        ));
    }
    product.coeff(s + 1, s + 1).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use proptest::prelude::*;

    #[test]
    fn constant_term_of_unit_product() {
        let a = Series2::polynomial(&[((0, 0), 3), ((1, 1), 5)], 2, 2);
        let b = Series2::polynomial(&[((0, 0), 7), ((2, 0), -1)], 2, 2);
        assert_eq!(*a.mul(&b).coeff(0, 0), rat(21));
    }

    #[test]
    fn square_difference_extraction() {
        // (t1 - t2)^2 has coefficient -2 at t1 t2.
        let sq = Series2::polynomial(&[((2, 0), 1), ((1, 1), -2), ((0, 2), 1)], 2, 2);
        assert_eq!(*sq.coeff(1, 1), rat(-2));
    }

    #[test]
    fn hand_expanded_quartic_bracket() {
        // (1+t1)^2 (1+t2)^2 (t1-t2)^2 has coefficient -6 at t1^2 t2^2.
        assert_eq!(s2_build_and_extract(2, 0, 1, false), rat(-6));
    }

    #[test]
    fn negative_powers_invert() {
        let unit = Series2::polynomial(&[((0, 0), 1), ((1, 0), 1)], 3, 3)
            .mul(&Series2::polynomial(&[((0, 0), 1), ((0, 1), 1)], 3, 3));
        assert_eq!(unit.pow_int(-2).mul(&unit.pow_int(2)), Series2::one(3, 3));
    }

    fn arb_series2() -> impl Strategy<Value = Series2> {
        proptest::collection::vec((-6i64..=6, 1i64..=3), 16).prop_map(|v| {
            let mut s = Series2::zero(3, 3);
            for (k, (p, q)) in v.into_iter().enumerate() {
                s.coeffs[k / 4][k % 4] = frac(p, q);
            }
            s
        })
    }

    proptest! {
        #[test]
        fn symmetric_products_stay_symmetric(a in arb_series2()) {
            // Symmetrize, then multiply two symmetric grids.
            let mut sym = a.clone();
            for i in 0..=3usize {
                for j in 0..i {
                    sym.coeffs[j][i] = sym.coeffs[i][j].clone();
                }
            }
            prop_assert!(sym.is_symmetric());
            prop_assert!(sym.mul(&sym).is_symmetric());
        }

        #[test]
        fn inverse_is_right_inverse(mut a in arb_series2()) {
            if a.coeffs[0][0].is_zero() {
                a.coeffs[0][0] = rat(2);
            }
            prop_assert_eq!(a.mul(&a.inverse()), Series2::one(3, 3));
        }
    }
}
