//! Exact points of the triangular lattice.
//!
//! A point is `a + b·ω` with `ω = e^{iπ/3}`, so `ω² = ω − 1` and `ω⁶ = 1`.
//! Multiplying by `ω` turns a vector 60° counterclockwise; every unit edge of
//! an equilateral triangulation developed into the plane is one of the six
//! units `ω^k`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Eisenstein {
    pub a: i64,
    pub b: i64,
}

const UNITS: [Eisenstein; 6] = [
    Eisenstein::new(1, 0),
    Eisenstein::new(0, 1),
    Eisenstein::new(-1, 1),
    Eisenstein::new(-1, 0),
    Eisenstein::new(0, -1),
    Eisenstein::new(1, -1),
];

impl Eisenstein {
    pub const ZERO: Eisenstein = Eisenstein::new(0, 0);
    pub const ONE: Eisenstein = Eisenstein::new(1, 0);
    pub const OMEGA: Eisenstein = Eisenstein::new(0, 1);

    pub const fn new(a: i64, b: i64) -> Self {
        Eisenstein { a, b }
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Self {
        UNITS[k.rem_euclid(6) as usize]
    }

    /// Multiplication by `ω`: `(a, b) -> (-b, a + b)`.
    pub fn rotate60(self) -> Self {
        Eisenstein::new(-self.b, self.a + self.b)
    }

    /// Multiplication by `ω^k`.
    pub fn rotate(self, k: i64) -> Self {
        (0..k.rem_euclid(6)).fold(self, |z, _| z.rotate60())
    }

    /// Squared Euclidean length, `a² + ab + b²`.
    pub fn norm(self) -> i64 {
        self.a * self.a + self.a * self.b + self.b * self.b
    }

    /// Complex conjugate. `conj(ω) = ω⁵ = 1 − ω`.
    pub fn conj(self) -> Self {
        Eisenstein::new(self.a + self.b, -self.b)
    }

    /// Exact quotient, if `rhs` divides `self` in the ring.
    pub fn checked_div(self, rhs: Self) -> Option<Self> {
        let n = rhs.norm();
        if n == 0 {
            return None;
        }
        let num = self * rhs.conj();
        if num.a % n == 0 && num.b % n == 0 {
            Some(Eisenstein::new(num.a / n, num.b / n))
        } else {
            None
        }
    }

    /// `k` with `ω^k == self`, when `self` is a unit.
    pub fn unit_exponent(self) -> Option<u8> {
        UNITS.iter().position(|&u| u == self).map(|k| k as u8)
    }

    /// Determinant of the coordinate pairs. The Euclidean cross product is
    /// this value times `√3/2`, i.e. twice the area of a unit triangle.
    pub fn det(self, other: Self) -> i64 {
        self.a * other.b - self.b * other.a
    }

    /// Cartesian coordinates `(a + b/2, b·√3/2)`.
    pub fn to_cartesian(self) -> (f64, f64) {
        (
            self.a as f64 + 0.5 * self.b as f64,
            self.b as f64 * 3f64.sqrt() / 2.0,
        )
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: Self) -> Self {
        Eisenstein::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for Eisenstein {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: Self) -> Self {
        Eisenstein::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl SubAssign for Eisenstein {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Self {
        Eisenstein::new(-self.a, -self.b)
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: Self) -> Self {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bd(ω − 1)
        Eisenstein::new(
            self.a * rhs.a - self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a + self.b * rhs.b,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn point() -> impl Strategy<Value = Eisenstein> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| Eisenstein::new(a, b))
    }

    #[test]
    fn omega_relations() {
        let w = Eisenstein::OMEGA;
        assert_eq!(w * w, w - Eisenstein::ONE);
        assert_eq!(Eisenstein::omega_pow(5) * w, Eisenstein::ONE);
        for k in 0..6 {
            assert_eq!(Eisenstein::omega_pow(k).norm(), 1);
            assert_eq!(Eisenstein::omega_pow(k).unit_exponent(), Some(k as u8));
        }
        assert_eq!(Eisenstein::new(2, 0).unit_exponent(), None);
        assert_eq!(Eisenstein::omega_pow(-1), Eisenstein::omega_pow(5));
    }

    #[test]
    fn cartesian_matches_norm() {
        let z = Eisenstein::new(3, -7);
        let (x, y) = z.to_cartesian();
        assert!((x * x + y * y - z.norm() as f64).abs() < 1e-9);
    }

    #[test]
    fn division() {
        let z = Eisenstein::new(4, 5);
        let w = Eisenstein::new(1, -2);
        assert_eq!((z * w).checked_div(w), Some(z));
        assert_eq!(Eisenstein::ONE.checked_div(Eisenstein::new(2, 0)), None);
        assert_eq!(Eisenstein::ONE.checked_div(Eisenstein::ZERO), None);
    }

    proptest! {
        #[test]
        fn rotation_is_multiplication(z in point(), k in -12i64..12) {
            prop_assert_eq!(z.rotate(k), z * Eisenstein::omega_pow(k));
            prop_assert_eq!(z.rotate(6), z);
            prop_assert_eq!(z.rotate(k).norm(), z.norm());
        }

        #[test]
        fn ring_laws(x in point(), y in point(), z in point()) {
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
            prop_assert_eq!(x * x.conj(), Eisenstein::new(x.norm(), 0));
        }

        #[test]
        fn det_is_rotation_invariant(x in point(), y in point(), k in 0i64..6) {
            prop_assert_eq!(x.rotate(k).det(y.rotate(k)), x.det(y));
        }
    }
}
