use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ArithError, Field};

/// An element `rational + surd * sqrt5` of the quadratic field Q(sqrt5).
///
/// `F` is the rational base field; the crate root fixes it to
/// [`BigRational`](num_rational::BigRational), so every value is exact and
/// reduced. Equality is componentwise, which is exact because sqrt5 is
/// irrational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quadratic<F> {
    rational: F,
    surd: F,
}

impl<F: Field> Quadratic<F> {
    pub fn new(rational: F, surd: F) -> Self {
        Quadratic { rational, surd }
    }

    pub fn from_rational(rational: F) -> Self {
        Quadratic {
            rational,
            surd: F::zero(),
        }
    }

    pub fn sqrt5() -> Self {
        Quadratic {
            rational: F::zero(),
            surd: F::one(),
        }
    }

    /// The golden ratio (1 + sqrt5) / 2.
    pub fn phi() -> Self {
        let half = F::one() / (F::one() + F::one());
        Quadratic {
            rational: half.clone(),
            surd: half,
        }
    }

    /// phi^-1 = phi - 1 = (sqrt5 - 1) / 2.
    pub fn phi_inv() -> Self {
        Self::phi() - Self::one()
    }

    pub fn rational_part(&self) -> &F {
        &self.rational
    }

    pub fn surd_part(&self) -> &F {
        &self.surd
    }

    /// Galois conjugate `p - q*sqrt5`.
    pub fn conjugate(&self) -> Self {
        Quadratic {
            rational: self.rational.clone(),
            surd: -self.surd.clone(),
        }
    }

    /// Field norm `p^2 - 5 q^2`, an element of the base field.
    pub fn norm(&self) -> F {
        let five = five::<F>();
        self.rational.clone() * self.rational.clone() - five * self.surd.clone() * self.surd.clone()
    }

    pub fn checked_inv(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Quadratic {
            rational: self.rational.clone() / n.clone(),
            surd: -self.surd.clone() / n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.clone() * rhs.checked_inv()?)
    }
}

fn five<F: Field>() -> F {
    let two = F::one() + F::one();
    two.clone() * two + F::one()
}

impl<F: Field + PartialOrd> Quadratic<F> {
    /// Exact sign: -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        let sign = |x: &F| match x.partial_cmp(&F::zero()) {
            Some(Ordering::Greater) => 1i8,
            Some(Ordering::Less) => -1,
            _ => 0,
        };
        let (p, q) = (sign(&self.rational), sign(&self.surd));
        if q == 0 {
            return p;
        }
        if p == 0 || p == q {
            return q;
        }
        // opposite signs: compare p^2 with 5 q^2
        let lhs = self.rational.clone() * self.rational.clone();
        let rhs = five::<F>() * self.surd.clone() * self.surd.clone();
        match lhs.partial_cmp(&rhs) {
            Some(Ordering::Greater) => p,
            Some(Ordering::Less) => q,
            _ => 0,
        }
    }
}

impl<F: Field + PartialOrd> PartialOrd for Quadratic<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self.clone() - other.clone()).signum().cmp(&0))
    }
}

impl<F: Field> Zero for Quadratic<F> {
    fn zero() -> Self {
        Quadratic {
            rational: F::zero(),
            surd: F::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }
}

impl<F: Field> One for Quadratic<F> {
    fn one() -> Self {
        Quadratic {
            rational: F::one(),
            surd: F::zero(),
        }
    }
}

impl<F: Field> Add for Quadratic<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Quadratic {
            rational: self.rational + rhs.rational,
            surd: self.surd + rhs.surd,
        }
    }
}

impl<F: Field> Sub for Quadratic<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Quadratic {
            rational: self.rational - rhs.rational,
            surd: self.surd - rhs.surd,
        }
    }
}

impl<F: Field> Mul for Quadratic<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + b r)(c + d r) = (ac + 5bd) + (ad + bc) r
        let ac = self.rational.clone() * rhs.rational.clone();
        let bd = self.surd.clone() * rhs.surd.clone();
        let ad = self.rational * rhs.surd;
        let bc = self.surd * rhs.rational;
        Quadratic {
            rational: ac + five::<F>() * bd,
            surd: ad + bc,
        }
    }
}

impl<F: Field> Div for Quadratic<F> {
    type Output = Self;
    /// Panics on division by zero; use [`Quadratic::checked_div`] to get an error instead.
    fn div(self, rhs: Self) -> Self {
        match self.checked_div(&rhs) {
            Ok(q) => q,
            Err(e) => panic!("Quadratic division: {e}"),
        }
    }
}

impl<F: Field> Neg for Quadratic<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Quadratic {
            rational: -self.rational,
            surd: -self.surd,
        }
    }
}

impl<F: Field> From<F> for Quadratic<F> {
    fn from(rational: F) -> Self {
        Quadratic::from_rational(rational)
    }
}

/// Renders as `p + q*sqrt5`, dropping a zero surd part (`p`) or zero rational part (`q*sqrt5`).
impl<F: Field + PartialOrd + fmt::Display> fmt::Display for Quadratic<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            write!(f, "{}", self.rational)
        } else if self.rational.is_zero() {
            write!(f, "{}*sqrt5", self.surd)
        } else if self.surd < F::zero() {
            write!(f, "{} - {}*sqrt5", self.rational, -self.surd.clone())
        } else {
            write!(f, "{} + {}*sqrt5", self.rational, self.surd)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QuadraticNumber, Rational};
    use num_bigint::BigInt;

    fn q(p: i64, pd: i64, s: i64, sd: i64) -> QuadraticNumber {
        Quadratic::new(
            Rational::new(BigInt::from(p), BigInt::from(pd)),
            Rational::new(BigInt::from(s), BigInt::from(sd)),
        )
    }

    #[test]
    fn golden_ratio_identities() {
        let phi = QuadraticNumber::phi();
        assert_eq!(
            phi.clone() * phi.clone(),
            phi.clone() + QuadraticNumber::one()
        );
        assert_eq!(
            phi.checked_inv().unwrap(),
            phi.clone() - QuadraticNumber::one()
        );
        assert_eq!(QuadraticNumber::phi_inv() * phi, QuadraticNumber::one());
        let s = QuadraticNumber::sqrt5();
        assert_eq!(
            s.clone() * s,
            QuadraticNumber::from_rational(Rational::from_integer(5.into()))
        );
    }

    #[test]
    fn conjugate_product() {
        let x = q(1, 1, 1, 1);
        let y = q(1, 1, -1, 1);
        assert_eq!(x * y, q(-4, 1, 0, 1));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(
            QuadraticNumber::zero().checked_inv(),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn div_operator_panics_on_zero() {
        let _ = QuadraticNumber::one() / QuadraticNumber::zero();
    }

    #[test]
    fn sign_of_mixed_terms() {
        assert_eq!(q(3, 1, -1, 1).signum(), 1); // 3 - 2.236
        assert_eq!(q(2, 1, -1, 1).signum(), -1); // 2 - 2.236
        assert_eq!(q(-3, 1, 1, 1).signum(), -1);
        assert_eq!(QuadraticNumber::phi_inv().signum(), 1);
        assert_eq!(QuadraticNumber::zero().signum(), 0);
        assert!(QuadraticNumber::phi() > QuadraticNumber::one());
    }

    #[test]
    fn display_format() {
        assert_eq!(QuadraticNumber::phi().to_string(), "1/2 + 1/2*sqrt5");
        assert_eq!(QuadraticNumber::phi_inv().to_string(), "-1/2 + 1/2*sqrt5");
        assert_eq!(q(3, 4, -1, 2).to_string(), "3/4 - 1/2*sqrt5");
        assert_eq!(QuadraticNumber::zero().to_string(), "0");
        assert_eq!(QuadraticNumber::sqrt5().to_string(), "1*sqrt5");
        assert_eq!(q(-1, 2, 0, 1).to_string(), "-1/2");
    }

    #[test]
    fn generic_over_machine_rationals() {
        use num_rational::Ratio;
        let phi = Quadratic::<Ratio<i64>>::phi();
        assert_eq!(phi.clone() * phi.clone() - phi, Quadratic::one());
    }
}
