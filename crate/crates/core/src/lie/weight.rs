use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, q, Q};

/// A vector in ambient ε-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Q::zero(); rank])
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Weight(xs.iter().map(|&x| q(x)).collect())
    }

    /// `e_i` scaled by `c`.
    pub fn unit(rank: usize, i: usize, c: i64) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i] = q(c);
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn dot(&self, other: &Weight) -> Q {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                got: self.rank(),
            });
        }
        Ok(())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_q).collect()
    }

    pub fn from_strings<S: AsRef<str>>(xs: &[S]) -> Result<Self> {
        xs.iter().map(|s| parse_q(s.as_ref())).collect::<Result<_>>().map(Weight)
    }
}

/// `2(λ,α)/(α,α)`.
pub fn pairing(lambda: &Weight, alpha: &Weight) -> Result<Q> {
    lambda.check_rank(alpha.rank())?;
    let aa = alpha.dot(alpha);
    if aa.is_zero() {
        return Err(Error::ZeroForm);
    }
    Ok(lambda.dot(alpha) * q(2) / aa)
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        Weight::from_strings(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    #[test]
    fn pairing_examples() {
        let a = &Weight::unit(2, 0, 1) - &Weight::unit(2, 1, 1);
        assert_eq!(pairing(&Weight::from_ints(&[3, 1]), &a).unwrap(), q(2));
        let rho = Weight::from_ints(&[1, 0, -1]);
        let a13 = Weight::from_ints(&[1, 0, -1]);
        assert_eq!(pairing(&rho, &a13).unwrap(), q(2));
        assert_eq!(
            pairing(&Weight::from_ints(&[1, 0]), &Weight::from_ints(&[2, 0])).unwrap(),
            q(1)
        );
        assert_eq!(
            pairing(&Weight(vec![qr(1, 2)]), &Weight::from_ints(&[1])).unwrap(),
            q(1)
        );
    }

    #[test]
    fn pairing_rank_mismatch() {
        assert!(matches!(
            pairing(&Weight::from_ints(&[1, 2]), &Weight::from_ints(&[1, 0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
