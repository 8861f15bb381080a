//! Exact arithmetic in Q(sqrt 5), the field the 600-cell coordinates live in.
//!
//! A value is (a + b*sqrt5)/den in canonical form (gcd-reduced, den > 0).
//! Comparison is exact via a sign algorithm on 128-bit intermediates; no two
//! distinct squared distances ever compare equal unless algebraically equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticNumber {
    a: i64,
    b: i64,
    den: i64, // > 0
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl QuadraticNumber {
    pub fn new(a: i64, b: i64, den: i64) -> QuadraticNumber {
        assert!(den != 0, "zero denominator");
        let s = if den < 0 { -1 } else { 1 };
        let g = gcd(gcd(a, b), den).max(1);
        QuadraticNumber {
            a: s * a / g,
            b: s * b / g,
            den: s * den / g,
        }
    }

    pub fn int(n: i64) -> QuadraticNumber {
        QuadraticNumber { a: n, b: 0, den: 1 }
    }

    pub fn zero() -> QuadraticNumber {
        QuadraticNumber::int(0)
    }

    /// (1 + sqrt5)/2, the golden ratio.
    pub fn phi() -> QuadraticNumber {
        QuadraticNumber::new(1, 1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Exact sign of a + b*sqrt5.
    pub fn sign(&self) -> i32 {
        let (a, b) = (self.a as i128, self.b as i128);
        if a == 0 && b == 0 {
            return 0;
        }
        if a >= 0 && b >= 0 {
            return 1;
        }
        if a <= 0 && b <= 0 {
            return -1;
        }
        // opposite signs: compare a^2 with 5 b^2
        let lhs = a * a;
        let rhs = 5 * b * b;
        if a > 0 {
            // a > 0, b < 0: positive iff a^2 > 5 b^2
            if lhs > rhs {
                1
            } else if lhs < rhs {
                -1
            } else {
                0
            }
        } else {
            // a < 0, b > 0
            if rhs > lhs {
                1
            } else if rhs < lhs {
                -1
            } else {
                0
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        (self.a as f64 + self.b as f64 * 5f64.sqrt()) / self.den as f64
    }
}

impl Add for QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, o: QuadraticNumber) -> QuadraticNumber {
        QuadraticNumber::new(
            self.a * o.den + o.a * self.den,
            self.b * o.den + o.b * self.den,
            self.den * o.den,
        )
    }
}

impl Sub for QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, o: QuadraticNumber) -> QuadraticNumber {
        self + (-o)
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber {
            a: -self.a,
            b: -self.b,
            den: self.den,
        }
    }
}

impl Mul for QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, o: QuadraticNumber) -> QuadraticNumber {
        // (a1 + b1 r)(a2 + b2 r) = a1 a2 + 5 b1 b2 + (a1 b2 + a2 b1) r
        QuadraticNumber::new(
            self.a * o.a + 5 * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.den * o.den,
        )
    }
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (*self - *other).sign().cmp(&0)
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            if self.den == 1 {
                write!(f, "{}", self.a)
            } else {
                write!(f, "{}/{}", self.a, self.den)
            }
        } else {
            write!(f, "({}+{}√5)/{}", self.a, self.b, self.den)
        }
    }
}
