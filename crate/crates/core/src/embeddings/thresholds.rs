//! Numeric parameters of the embedding procedures.
//!
//! The formula constructors return the exact proof constants; they are far
//! too large to be met by graphs of any practical size, so the procedures
//! take a [`Thresholds`] value and the constructors are there to report how
//! far an instance is from the guarantees.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, pow, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    /// Density for bad and rich sets.
    #[serde(with = "crate::rational::as_string")]
    pub c: Rational,
    /// Almost-regularity factor.
    #[serde(with = "crate::rational::as_string")]
    pub k: Rational,
    /// Density exponent.
    #[serde(with = "crate::rational::as_string")]
    pub alpha: Rational,
    /// Regularisation constant.
    #[serde(with = "crate::rational::as_string")]
    pub c_big: Rational,
    /// Common-neighbourhood size that makes a set rich (`C(H, s)`).
    pub c_hs: usize,
    /// Blowup part size.
    pub m_blow: usize,
    /// Size of the disjoint sets chosen by the Hall step.
    pub hall_t: usize,
    /// Hypergraph density threshold.
    #[serde(with = "crate::rational::as_string")]
    pub gamma: Rational,
    /// Number of copies offered to the extraction step.
    pub lambda: usize,
    pub c1: usize,
    pub c2: usize,
    #[serde(with = "crate::rational::as_string")]
    pub c3: Rational,
    /// Random attempts before the exhaustive fallback.
    pub retries: usize,
}

impl Default for Thresholds {
    /// Small values suited to hand-sized fixtures.
    fn default() -> Self {
        Thresholds {
            c: rat(1, 2),
            k: int(4),
            alpha: rat(1, 2),
            c_big: int(1),
            c_hs: 1,
            m_blow: 1,
            hall_t: 1,
            gamma: rat(1, 2),
            lambda: 5,
            c1: 1,
            c2: 1,
            c3: int(1),
            retries: 16,
        }
    }
}

impl Thresholds {
    pub fn validate(&self) -> Result<()> {
        let zero = Rational::zero();
        let one = Rational::one();
        let positive_rats = [&self.c, &self.k, &self.alpha, &self.c_big, &self.gamma, &self.c3];
        if positive_rats.iter().any(|r| **r <= zero) {
            return Err(Error::InvalidParameter("thresholds must be positive".into()));
        }
        if [self.c_hs, self.m_blow, self.hall_t, self.lambda, self.c1, self.c2].contains(&0) {
            return Err(Error::InvalidParameter("integer thresholds must be positive".into()));
        }
        if self.c >= one {
            return Err(Error::InvalidParameter("c must be below 1".into()));
        }
        if self.gamma >= one {
            return Err(Error::InvalidParameter("gamma must lie in (0, 1)".into()));
        }
        Ok(())
    }
}

/// The almost-regularity factor `K = 2^{4/α + 2}`, kept as the exponent of
/// two so comparisons stay exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityFactor {
    #[serde(with = "crate::rational::as_string")]
    pub log2: Rational,
}

impl RegularityFactor {
    pub fn for_alpha(alpha: &Rational) -> Result<Self> {
        if *alpha <= Rational::zero() {
            return Err(Error::InvalidParameter("alpha must be positive".into()));
        }
        Ok(RegularityFactor {
            log2: int(4) / alpha + int(2),
        })
    }

    /// `Some(K)` when `K` is an integer.
    pub fn as_integer(&self) -> Option<BigUint> {
        self.log2
            .is_integer()
            .then(|| BigUint::one() << self.log2.to_integer().try_into().unwrap_or(0u64))
    }

    /// Whether `x ≤ K · y` for non-negative integers.
    pub fn bounds(&self, x: usize, y: usize) -> bool {
        if x == 0 {
            return true;
        }
        if y == 0 {
            return false;
        }
        // (x / y)^den ≤ 2^num
        let num = self.log2.numer().clone();
        let den: u32 = self.log2.denom().try_into().expect("small denominator");
        let lhs = pow(&rat(x as i64, y as i64), den);
        let exp: u32 = num.try_into().expect("small exponent");
        lhs <= Rational::from_integer((BigUint::one() << exp).into())
    }

    pub fn to_f64(&self) -> f64 {
        2f64.powf(crate::rational::to_f64(&self.log2))
    }
}

/// `C(H, s) = s (4h)^{s+1}`.
pub fn rich_threshold(h: usize, s: usize) -> BigUint {
    BigUint::from(s) * BigUint::from(4 * h).pow(s as u32 + 1)
}

/// `m = 2^{h+s+3} s^s h^{2s}`.
pub fn blowup_size(h: usize, s: usize) -> BigUint {
    (BigUint::one() << (h + s + 3)) * BigUint::from(s).pow(s as u32) * BigUint::from(h).pow(2 * s as u32)
}

/// `t = 2s (4h)^s`, the Hall set size.
pub fn hall_size(h: usize, s: usize) -> BigUint {
    BigUint::from(2 * s) * BigUint::from(4 * h).pow(s as u32)
}

/// `C3 = s p^p (4h)^{s+1} / (1 - γ)`.
pub fn asymmetric_constant(gamma: &Rational, s: usize, p: usize, h: usize) -> Result<Rational> {
    if *gamma <= Rational::zero() || *gamma >= Rational::one() {
        return Err(Error::InvalidParameter("gamma must lie in (0, 1)".into()));
    }
    let base = BigUint::from(s) * BigUint::from(p).pow(p as u32) * BigUint::from(4 * h).pow(s as u32 + 1);
    Ok(Rational::from_integer(base.into()) / (Rational::one() - gamma))
}

/// `C = λ s r (rK/ε)^{r+s+2} 2^{6+3s+4r}`, the heavy-path threshold.
pub fn heavy_path_constant(lambda: usize, s: usize, r: usize, k: &Rational, eps: &Rational) -> Result<Rational> {
    if *eps <= Rational::zero() {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    let ratio = int(r as i64) * k / eps;
    let two = Rational::from_integer((BigUint::one() << (6 + 3 * s + 4 * r)).into());
    Ok(int((lambda * s * r) as i64) * pow(&ratio, (r + s + 2) as u32) * two)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas() {
        // h = 2, s = 2: 2 * 8^3
        assert_eq!(rich_threshold(2, 2), BigUint::from(1024u32));
        // 2^7 * 4 * 16
        assert_eq!(blowup_size(2, 2), BigUint::from(8192u32));
        assert_eq!(hall_size(2, 2), BigUint::from(256u32));
        assert_eq!(asymmetric_constant(&rat(1, 2), 2, 2, 2).unwrap(), int(2 * 4 * 512 * 2));
        assert_eq!(heavy_path_constant(1, 1, 1, &int(1), &int(1)).unwrap(), int(1 << 13));
    }

    #[test]
    fn regularity_factor() {
        let k = RegularityFactor::for_alpha(&int(1)).unwrap();
        assert_eq!(k.as_integer(), Some(BigUint::from(64u32)));
        assert!(k.bounds(64, 1));
        assert!(!k.bounds(65, 1));
        // α = 3: K = 2^{10/3} ≈ 10.08
        let k = RegularityFactor::for_alpha(&int(3)).unwrap();
        assert_eq!(k.as_integer(), None);
        assert!(k.bounds(10, 1));
        assert!(!k.bounds(11, 1));
        assert!(k.bounds(0, 0));
        assert!(!k.bounds(1, 0));
    }

    #[test]
    fn validation() {
        assert!(Thresholds::default().validate().is_ok());
        let t = Thresholds {
            c: int(1),
            ..Thresholds::default()
        };
        assert!(t.validate().is_err());
        let t = Thresholds {
            gamma: int(0),
            ..Thresholds::default()
        };
        assert!(t.validate().is_err());
    }
}
