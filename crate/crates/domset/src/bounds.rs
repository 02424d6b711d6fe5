//! Classical upper bounds on the domination number in terms of order and
//! minimum degree, kept exact where the formula is rational.

use std::fmt;

/// Reduced rational with positive denominator, backed by i128.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundsError {
    EmptyGraph,
    Overflow,
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::EmptyGraph => write!(f, "bounds need n >= 1"),
            BoundsError::Overflow => write!(f, "exact rational overflowed; delta too large"),
        }
    }
}

impl std::error::Error for BoundsError {}

impl Rational {
    pub fn new(num: i128, den: i128) -> Rational {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn checked_add(self, other: Rational) -> Option<Rational> {
        let num = self
            .num
            .checked_mul(other.den)?
            .checked_add(other.num.checked_mul(self.den)?)?;
        let den = self.den.checked_mul(other.den)?;
        Some(Rational::new(num, den))
    }

    pub fn checked_mul(self, other: Rational) -> Option<Rational> {
        Some(Rational::new(
            self.num.checked_mul(other.num)?,
            self.den.checked_mul(other.den)?,
        ))
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalBounds {
    /// `(n / (delta+1)) * H_{delta+1}` as an exact rational.
    pub arnautov: Rational,
    /// `n * (1 + ln(delta+1)) / (delta+1)`.
    pub alon: f64,
    /// `floor(n/3)` for delta >= 5, `floor(4n/11)` for delta = 4, absent
    /// otherwise.
    pub theorem_bound: Option<usize>,
}

pub fn classical_bounds(n: usize, delta: usize) -> Result<ClassicalBounds, BoundsError> {
    if n == 0 {
        return Err(BoundsError::EmptyGraph);
    }
    let k = delta as i128 + 1;
    let mut harmonic = Rational::new(0, 1);
    for j in 1..=k {
        harmonic = harmonic
            .checked_add(Rational::new(1, j))
            .ok_or(BoundsError::Overflow)?;
    }
    let arnautov = harmonic
        .checked_mul(Rational::new(n as i128, k))
        .ok_or(BoundsError::Overflow)?;
    let alon = n as f64 * (1.0 + ((delta + 1) as f64).ln()) / (delta + 1) as f64;
    let theorem_bound = theorem_bound(n, delta);
    Ok(ClassicalBounds {
        arnautov,
        alon,
        theorem_bound,
    })
}

pub fn theorem_bound(n: usize, delta: usize) -> Option<usize> {
    if delta >= 5 {
        Some(n / 3)
    } else if delta == 4 {
        Some(4 * n / 11)
    } else {
        None
    }
}
