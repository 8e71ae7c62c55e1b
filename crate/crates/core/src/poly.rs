//! Integer polynomial classes in the counting variable q and Poincare
//! polynomials in the localization variable x.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense integer polynomial in q. Coefficient i multiplies q^i.
///
/// The coefficient vector is kept canonical: no trailing zeros, and the zero
/// polynomial is the empty vector. Negative coefficients are allowed in
/// intermediate arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MotivicClass {
    coeffs: Vec<BigInt>,
}

impl MotivicClass {
    /// Builds a class from raw coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        MotivicClass { coeffs }
    }

    /// The zero class.
    pub fn zero() -> Self {
        MotivicClass { coeffs: Vec::new() }
    }

    /// The unit class.
    pub fn one() -> Self {
        MotivicClass {
            coeffs: vec![BigInt::one()],
        }
    }

    /// c * q^power.
    pub fn monomial(power: usize, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = BigInt::from(c);
        MotivicClass { coeffs }
    }

    /// Convenience constructor from small coefficients.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Read-only view of the canonical coefficient vector.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of q^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree, or None for the zero class.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the coefficient vector reads the same in both directions.
    /// The zero class counts as palindromic.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// True when no coefficient is negative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Returns the first negative coefficient as an error payload, if any.
    pub fn check_nonnegative(&self) -> Result<()> {
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_negative() {
                return Err(Error::NegativeClass {
                    power: i,
                    value: c.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// Sum of coefficients; the point count at q = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        MotivicClass { coeffs }
    }
}

impl Add for &MotivicClass {
    type Output = MotivicClass;
    fn add(self, rhs: &MotivicClass) -> MotivicClass {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        MotivicClass::new(coeffs)
    }
}

impl Sub for &MotivicClass {
    type Output = MotivicClass;
    fn sub(self, rhs: &MotivicClass) -> MotivicClass {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        MotivicClass::new(coeffs)
    }
}

impl Mul for &MotivicClass {
    type Output = MotivicClass;
    fn mul(self, rhs: &MotivicClass) -> MotivicClass {
        if self.is_zero() || rhs.is_zero() {
            return MotivicClass::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        MotivicClass::new(coeffs)
    }
}

impl fmt::Display for MotivicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            match (i, unit_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for MotivicClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MotivicClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(MotivicClass::new(coeffs))
    }
}

/// Class of projective space P^n: 1 + q + ... + q^n.
pub fn projective_class(n: u32) -> MotivicClass {
    MotivicClass::new(vec![BigInt::one(); n as usize + 1])
}

/// Gaussian binomial [n choose s]_q, the class of the Grassmannian of
/// s-dimensional subspaces of an n-dimensional space.
///
/// Computed by the Pascal recurrence `[n,s] = [n-1,s-1] + q^s [n-1,s]`.
pub fn gaussian_class(s: u32, n: u32) -> MotivicClass {
    if s > n {
        return MotivicClass::zero();
    }
    let s = s.min(n - s);
    // row[k] holds [m choose k]_q while m sweeps from 0 to n.
    let mut row: Vec<MotivicClass> = vec![MotivicClass::zero(); s as usize + 1];
    row[0] = MotivicClass::one();
    for _m in 1..=n {
        for k in (1..=s as usize).rev() {
            let shifted = row[k].shift(k);
            row[k] = &row[k - 1] + &shifted;
        }
    }
    row[s as usize].clone()
}

/// Alias for [`gaussian_class`] under its geometric name.
pub fn grassmannian_class(s: u32, n: u32) -> MotivicClass {
    gaussian_class(s, n)
}

/// Class of the g-th symmetric power of the projective line, which is P^g.
pub fn sym_class(g: u32) -> MotivicClass {
    projective_class(g)
}

/// x^morse_index * c(x^2): the Poincare contribution of a fixed-point
/// component with the given class and Morse index.
pub fn to_poincare(c: &MotivicClass, morse_index: i64) -> Result<PoincarePoly> {
    PoincarePoly::from_motivic(c, morse_index)
}

/// Polynomial in the localization variable x with integer coefficients.
/// Every monomial produced by the engine has even exponent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PoincarePoly {
    coeffs: Vec<BigInt>,
}

impl PoincarePoly {
    pub fn zero() -> Self {
        PoincarePoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        PoincarePoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds from raw coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PoincarePoly { coeffs }
    }

    /// Convenience constructor from small coefficients.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// x^beta * c(x^2). Requires beta even and nonnegative.
    pub fn from_motivic(class: &MotivicClass, beta: i64) -> Result<Self> {
        if beta < 0 || beta % 2 != 0 {
            return Err(Error::InvalidInput(format!(
                "weight {beta} must be even and nonnegative"
            )));
        }
        let mut coeffs = vec![BigInt::zero(); beta as usize];
        for c in class.coeffs() {
            coeffs.push(c.clone());
            coeffs.push(BigInt::zero());
        }
        Ok(PoincarePoly::new(coeffs))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &PoincarePoly) -> PoincarePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        PoincarePoly::new(coeffs)
    }

    /// Sum of coefficients. Every exponent is even, so this equals the
    /// evaluation at x = -1, the Euler characteristic.
    pub fn euler_characteristic(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for PoincarePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            match (i, unit_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for PoincarePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PoincarePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(PoincarePoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> BigInt {
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        acc
    }

    #[test]
    fn projective_line_squared() {
        let p1 = projective_class(1);
        let sq = &p1 * &p1;
        assert_eq!(sq, MotivicClass::from_coeffs(&[1, 2, 1]));
    }

    #[test]
    fn gaussian_base_cases() {
        assert_eq!(gaussian_class(0, 5), MotivicClass::one());
        assert_eq!(gaussian_class(5, 5), MotivicClass::one());
        assert_eq!(gaussian_class(3, 2), MotivicClass::zero());
    }

    #[test]
    fn gaussian_lines_are_projective_spaces() {
        for n in 1..=9u32 {
            assert_eq!(gaussian_class(1, n), projective_class(n - 1));
        }
    }

    #[test]
    fn gaussian_two_four() {
        // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4.
        assert_eq!(
            gaussian_class(2, 4),
            MotivicClass::from_coeffs(&[1, 1, 2, 1, 1])
        );
    }

    #[test]
    fn gaussian_symmetry_palindromy_and_counting() {
        for n in 0..=12u32 {
            for s in 0..=n {
                let g = gaussian_class(s, n);
                assert_eq!(g, gaussian_class(n - s, n));
                assert!(g.is_palindromic());
                assert_eq!(g.degree().unwrap_or(0), (s * (n - s)) as usize);
                assert_eq!(g.eval_at_one(), binom(n as u64, s as u64));
            }
        }
    }

    #[test]
    fn display_formats() {
        let c = MotivicClass::from_coeffs(&[1, 0, -2, 1]);
        assert_eq!(c.to_string(), "1 - 2q^2 + q^3");
        assert_eq!(MotivicClass::zero().to_string(), "0");
    }

    #[test]
    fn poincare_from_motivic_doubles_exponents() {
        let c = MotivicClass::from_coeffs(&[1, 1, 1]);
        let p = PoincarePoly::from_motivic(&c, 4).unwrap();
        assert_eq!(p, PoincarePoly::from_coeffs(&[0, 0, 0, 0, 1, 0, 1, 0, 1]));
        assert_eq!(p.euler_characteristic(), BigInt::from(3));
        assert!(PoincarePoly::from_motivic(&c, 3).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let c = MotivicClass::from_coeffs(&[3, 0, -7]);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"["3","0","-7"]"#);
        let back: MotivicClass = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
