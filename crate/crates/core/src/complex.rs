//! Minimal double-precision complex numbers for the numeric bridge.
//!
//! Exactness lives entirely on the symbolic side; this type only carries
//! evaluated phases and is compared against tolerances, never for equality.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

/// A complex number with `f64` components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct QComplex {
    pub re: f64,
    pub im: f64,
}

impl QComplex {
    pub const ZERO: QComplex = QComplex { re: 0.0, im: 0.0 };
    pub const ONE: QComplex = QComplex { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        QComplex { re, im }
    }

    /// `exp(i theta)` computed directly from the angle.
    pub fn unit_phase(theta: f64) -> Self {
        QComplex {
            re: libm::cos(theta),
            im: libm::sin(theta),
        }
    }

    pub fn abs(self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Distance to another complex number.
    pub fn dist(self, other: QComplex) -> f64 {
        (self - other).abs()
    }

    pub fn scale(self, s: f64) -> Self {
        QComplex::new(self.re * s, self.im * s)
    }
}

impl Add for QComplex {
    type Output = QComplex;
    fn add(self, rhs: QComplex) -> QComplex {
        QComplex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for QComplex {
    type Output = QComplex;
    fn sub(self, rhs: QComplex) -> QComplex {
        QComplex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for QComplex {
    type Output = QComplex;
    fn mul(self, rhs: QComplex) -> QComplex {
        QComplex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Div for QComplex {
    type Output = QComplex;
    fn div(self, rhs: QComplex) -> QComplex {
        let n = rhs.re * rhs.re + rhs.im * rhs.im;
        QComplex::new(
            (self.re * rhs.re + self.im * rhs.im) / n,
            (self.im * rhs.re - self.re * rhs.im) / n,
        )
    }
}

impl Neg for QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        QComplex::new(-self.re, -self.im)
    }
}

impl fmt::Display for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im >= 0.0 {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}
