use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, One, Zero};

/// Eisenstein integer `a + b*w`, with `w = exp(i*pi/3)` so that `w^2 = w - 1`.
///
/// These are the vertices of the regular triangular tiling of the plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Eisenstein<T> {
    pub a: T,
    pub b: T,
}

impl<T: Clone + Num + Neg<Output = T>> Eisenstein<T> {
    pub fn new(a: T, b: T) -> Self {
        Eisenstein { a, b }
    }

    pub fn omega() -> Self {
        Eisenstein {
            a: T::zero(),
            b: T::one(),
        }
    }

    /// `w^-1 = 1 - w`.
    pub fn omega_inv() -> Self {
        Eisenstein {
            a: T::one(),
            b: -T::one(),
        }
    }

    /// Rotation of `point` about `center` by pi/3: `center + w (point - center)`.
    pub fn rotate_about(center: &Self, point: &Self) -> Self {
        center.clone() + Self::omega() * (point.clone() - center.clone())
    }

    /// Inverse rotation: `center + w^-1 (point - center)`.
    pub fn rotate_back_about(center: &Self, point: &Self) -> Self {
        center.clone() + Self::omega_inv() * (point.clone() - center.clone())
    }
}

impl<T: Clone + Num + Neg<Output = T>> Zero for Eisenstein<T> {
    fn zero() -> Self {
        Eisenstein {
            a: T::zero(),
            b: T::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Clone + Num + Neg<Output = T>> One for Eisenstein<T> {
    fn one() -> Self {
        Eisenstein {
            a: T::one(),
            b: T::zero(),
        }
    }
}

impl<T: Clone + Num + Neg<Output = T>> Add for Eisenstein<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Eisenstein {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<T: Clone + Num + Neg<Output = T>> Sub for Eisenstein<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Eisenstein {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<T: Clone + Num + Neg<Output = T>> Mul for Eisenstein<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + bw)(c + dw) = (ac - bd) + (ad + bc + bd) w
        let bd = self.b.clone() * rhs.b.clone();
        Eisenstein {
            a: self.a.clone() * rhs.a.clone() - bd.clone(),
            b: self.a * rhs.b + self.b * rhs.a + bd,
        }
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for Eisenstein<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Eisenstein {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Eisenstein<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*w", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::EisensteinInteger;
    use proptest::prelude::*;

    fn e(a: i64, b: i64) -> EisensteinInteger {
        Eisenstein::new(a.into(), b.into())
    }

    #[test]
    fn omega_has_order_six() {
        let w = EisensteinInteger::omega();
        let mut acc = EisensteinInteger::one();
        for k in 1..=6 {
            acc = acc * w.clone();
            assert_eq!(acc.is_one(), k == 6, "w^{k}");
        }
        assert_eq!(w.clone() * w.clone(), w.clone() - EisensteinInteger::one());
        assert_eq!(w * EisensteinInteger::omega_inv(), EisensteinInteger::one());
    }

    #[test]
    fn rotate_zero_about_one() {
        assert_eq!(Eisenstein::rotate_about(&e(1, 0), &e(0, 0)), e(1, -1));
    }

    #[test]
    fn rotation_fixes_center_and_has_period_six() {
        let v = e(3, -2);
        assert_eq!(Eisenstein::rotate_about(&v, &v), v);
        let p = e(-1, 5);
        let mut x = p.clone();
        for _ in 0..6 {
            x = Eisenstein::rotate_about(&v, &x);
        }
        assert_eq!(x, p);
        let back = Eisenstein::rotate_back_about(&v, &Eisenstein::rotate_about(&v, &p));
        assert_eq!(back, p);
    }

    proptest! {
        #[test]
        fn ring_laws(a in -50i64..50, b in -50i64..50, c in -50i64..50,
                     d in -50i64..50, f in -50i64..50, g in -50i64..50) {
            let (x, y, z) = (e(a, b), e(c, d), e(f, g));
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y + x * z);
        }
    }
}
