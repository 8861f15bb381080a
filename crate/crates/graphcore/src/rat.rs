//! Minimal exact rational arithmetic for stored coordinates.
//!
//! Coordinates attached to graphs and nets are documentation and validation
//! data; no metric algorithm depends on them, so a small i64 fraction type is
//! enough.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Rat {
    num: i64,
    den: i64, // always > 0
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

impl Rat {
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        let s = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rat {
            num: s * num / g,
            den: s * den / g,
        }
    }

    pub fn int(n: i64) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn zero() -> Rat {
        Rat::int(0)
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Parses "p", "-p" or "p/q".
    pub fn parse(s: &str) -> Option<Rat> {
        match s.split_once('/') {
            None => s.trim().parse::<i64>().ok().map(Rat::int),
            Some((p, q)) => {
                let p = p.trim().parse::<i64>().ok()?;
                let q = q.trim().parse::<i64>().ok()?;
                if q == 0 {
                    None
                } else {
                    Some(Rat::new(p, q))
                }
            }
        }
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, o: Rat) -> Rat {
        Rat::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, o: Rat) -> Rat {
        Rat::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, o: Rat) -> Rat {
        Rat::new(self.num * o.num, self.den * o.den)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
