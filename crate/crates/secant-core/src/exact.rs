//! Exact arbitrary-precision scalars and the factorial-family utilities
//! every closed formula needs.
//!
//! All arithmetic is exact; there is no floating point anywhere in this
//! crate. The universal scalar is [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Arbitrary-precision exact rational number, always in lowest terms with
/// denominator > 0. Equality is value equality.
pub type Rational = BigRational;

/// Shorthand for an integer-valued `Rational`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Render a rational exactly: `"p/q"`, or just `"p"` when it is an integer.
pub fn exact_str(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// If `r` is an integer, return it as a `BigInt`.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    is_integer(r).then(|| r.numer().clone())
}

/// n! as a `BigInt`.
pub fn factorial_int(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// n! as an integer-valued `Rational`. The empty product 0! is 1.
pub fn factorial(n: u64) -> Rational {
    Rational::from_integer(factorial_int(n))
}

/// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for rational x.
///
/// Negative and half-integer tops are the whole point: for example
/// binomial(-2, 2) = 3 and binomial(-1/2, 2) = 3/8.
pub fn binomial(x: &Rational, k: u64) -> Rational {
    let mut num = Rational::one();
    for i in 0..k {
        num *= x - rat(i as i64);
    }
    num / factorial(k)
}

/// Binomial coefficient with an integer (possibly negative) top argument.
pub fn binomial_int(n: i64, k: u64) -> Rational {
    binomial(&rat(n), k)
}

/// Rising factorial (Pochhammer symbol) x(x+1)...(x+k-1); 1 when k = 0.
pub fn pochhammer(x: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= x + rat(i as i64);
    }
    acc
}

/// Falling factorial x(x-1)...(x-k+1) for an integer x; 1 when k = 0.
///
/// Vanishes naturally when the product crosses zero, which is how the
/// factorial-ratio expressions x!/(x-k)! are evaluated without ever forming
/// a factorial of a negative integer.
pub fn falling_int(x: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc *= BigInt::from(x - i);
    }
    acc
}

/// Product of consecutive factorials lo! (lo+1)! ... hi!, as a `BigInt`.
/// Empty (= 1) when lo > hi.
pub fn factorial_range_product(lo: u64, hi: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut bang = factorial_int(lo);
    let mut k = lo;
    loop {
        if k > hi {
            break;
        }
        acc *= &bang;
        k += 1;
        bang *= k;
    }
    acc
}

/// 4^k as a `Rational`.
pub fn pow4(k: u64) -> Rational {
    Rational::from_integer(BigInt::from(4).pow(k as u32))
}

/// True when `r` is an integer <= 0.
pub fn is_nonpositive_integer(r: &Rational) -> bool {
    is_integer(r) && !r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), rat(1));
        assert_eq!(factorial(5), rat(120));
        assert_eq!(factorial(10), rat(3628800));
    }

    #[test]
    fn binomial_generalized_tops() {
        assert_eq!(binomial(&rat(-2), 2), rat(3));
        assert_eq!(binomial(&frac(-1, 2), 2), frac(3, 8));
        assert_eq!(binomial(&rat(7), 3), rat(35));
        assert_eq!(binomial(&rat(4), 0), rat(1));
    }

    #[test]
    fn pochhammer_small_values() {
        assert_eq!(pochhammer(&frac(1, 2), 3), frac(15, 8));
        assert_eq!(pochhammer(&frac(-7, 3), 0), rat(1));
        assert_eq!(pochhammer(&rat(-3), 5), rat(0));
    }

    #[test]
    fn falling_handles_sign_crossings() {
        assert_eq!(falling_int(3, 5), BigInt::from(0));
        assert_eq!(falling_int(5, 3), BigInt::from(60));
        assert_eq!(falling_int(-2, 2), BigInt::from(6));
    }

    #[test]
    fn factorial_range_product_matches_direct() {
        let direct: BigInt = (2..=5).map(factorial_int).product();
        assert_eq!(factorial_range_product(2, 5), direct);
        assert_eq!(factorial_range_product(4, 3), BigInt::from(1));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=12).prop_map(|(p, q)| frac(p, q))
    }

    proptest! {
        #[test]
        fn binomial_pochhammer_relation(x in arb_rational(), k in 0u64..=8) {
            // binomial(x, k) * k! = pochhammer(x - k + 1, k)
            let lhs = binomial(&x, k) * factorial(k);
            let rhs = pochhammer(&(&x - rat(k as i64) + rat(1)), k);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pochhammer_is_multiplicative(x in arb_rational(), j in 0u64..=6, k in 0u64..=6) {
            let lhs = pochhammer(&x, j + k);
            let rhs = pochhammer(&x, j) * pochhammer(&(&x + rat(j as i64)), k);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn binomial_integer_case(n in 0i64..=20, k in 0u64..=20) {
            prop_assume!(k as i64 <= n);
            let b = binomial_int(n, k);
            prop_assert!(is_integer(&b));
            prop_assert!(!b.is_negative());
            let via_factorials = factorial(n as u64) / (factorial(k) * factorial(n as u64 - k));
            prop_assert_eq!(b, via_factorials);
        }
    }
}
