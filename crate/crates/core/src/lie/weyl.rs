//! Signed permutations of ε-coordinates.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};

use super::weight::Weight;
use crate::error::{Error, Result};
use crate::rational::{q, Q};

/// `w(e_i) = signs[i] · e_{perm[i]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            perm: (0..rank).collect(),
            signs: vec![1; rank],
        }
    }

    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        if signs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: signs.len(),
            });
        }
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Parse(format!("not a permutation: {perm:?}")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Parse(format!("signs must be ±1: {signs:?}")));
        }
        Ok(WeylElement { perm, signs })
    }

    /// Swap of coordinates `i` and `j`.
    pub fn transposition(rank: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(rank);
        w.perm.swap(i, j);
        w
    }

    pub fn sign_flip(rank: usize, i: usize) -> Self {
        let mut w = Self::identity(rank);
        w.signs[i] = -1;
        w
    }

    /// Reflection in `alpha`, provided it is a signed permutation.
    pub fn reflection(alpha: &Weight) -> Option<Self> {
        let n = alpha.rank();
        let aa = alpha.dot(alpha);
        if aa.is_zero() {
            return None;
        }
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        for k in 0..n {
            // s(e_k) = e_k - (2 α_k / (α,α)) α
            let c = &alpha.0[k] * q(2) / &aa;
            let image: Vec<Q> = (0..n)
                .map(|i| {
                    let e = if i == k { Q::one() } else { Q::zero() };
                    e - &c * &alpha.0[i]
                })
                .collect();
            let nz: Vec<usize> = (0..n).filter(|&i| !image[i].is_zero()).collect();
            if nz.len() != 1 {
                return None;
            }
            let i = nz[0];
            perm[k] = i;
            signs[k] = if image[i] == Q::one() {
                1
            } else if image[i] == -Q::one() {
                -1
            } else {
                return None;
            };
        }
        Some(WeylElement { perm, signs })
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement { perm, signs }
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        let mut out = vec![Q::zero(); self.rank()];
        for i in 0..self.rank() {
            out[self.perm[i]] = if self.signs[i] > 0 {
                lambda.0[i].clone()
            } else {
                -lambda.0[i].clone()
            };
        }
        Weight(out)
    }

    /// Determinant of the signed permutation matrix, i.e. `(-1)^length`.
    pub fn sgn(&self) -> i64 {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut parity = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            parity += len - 1;
        }
        parity += self.signs.iter().filter(|&&s| s < 0).count();
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Signed 1-based images: entry `i` is `±(perm[i] + 1)`.
    pub fn encode(&self) -> Vec<i64> {
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s as i64 * (p as i64 + 1))
            .collect()
    }

    pub fn decode(code: &[i64]) -> Result<Self> {
        let mut perm = Vec::with_capacity(code.len());
        let mut signs = Vec::with_capacity(code.len());
        for &c in code {
            if c == 0 {
                return Err(Error::Parse("zero entry in signed permutation".into()));
            }
            perm.push((c.unsigned_abs() - 1) as usize);
            signs.push(if c > 0 { 1 } else { -1 });
        }
        Self::new(perm, signs)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.encode().iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Closure of `generators` under composition, breadth first.
pub fn generate_group(rank: usize, generators: &[WeylElement], cap: usize) -> Result<Vec<WeylElement>> {
    let id = WeylElement::identity(rank);
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut out = vec![id.clone()];
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in generators {
            let next = g.compose(&w);
            if seen.insert(next.clone()) {
                if out.len() >= cap {
                    return Err(Error::EnumerationCapExceeded {
                        order: out.len() as u128 + 1,
                        cap,
                    });
                }
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflections_are_signed_permutations() {
        let a = Weight::from_ints(&[1, -1, 0]);
        let s = WeylElement::reflection(&a).unwrap();
        assert_eq!(s, WeylElement::transposition(3, 0, 1));
        let b = Weight::from_ints(&[1, 1]);
        let s = WeylElement::reflection(&b).unwrap();
        assert_eq!(s.apply(&Weight::from_ints(&[3, 5])), Weight::from_ints(&[-5, -3]));
        let c = Weight::from_ints(&[0, 2]);
        assert_eq!(WeylElement::reflection(&c).unwrap(), WeylElement::sign_flip(2, 1));
        assert!(WeylElement::reflection(&Weight::from_ints(&[1, 2])).is_none());
    }

    #[test]
    fn compose_matches_action() {
        let u = WeylElement::decode(&[2, -3, 1]).unwrap();
        let w = WeylElement::decode(&[-1, 3, 2]).unwrap();
        let x = Weight::from_ints(&[5, 7, 11]);
        assert_eq!(u.compose(&w).apply(&x), u.apply(&w.apply(&x)));
        assert!(u.compose(&u.inverse()).is_identity());
        assert_eq!(u.compose(&w).sgn(), u.sgn() * w.sgn());
    }

    #[test]
    fn encode_roundtrip_and_validation() {
        let w = WeylElement::decode(&[-2, 1, 3]).unwrap();
        assert_eq!(w.encode(), vec![-2, 1, 3]);
        assert!(WeylElement::decode(&[1, 1]).is_err());
        assert!(WeylElement::decode(&[0, 1]).is_err());
    }

    #[test]
    fn group_closure_and_cap() {
        let gens = [WeylElement::transposition(3, 0, 1), WeylElement::transposition(3, 1, 2)];
        assert_eq!(generate_group(3, &gens, 100).unwrap().len(), 6);
        assert!(matches!(
            generate_group(3, &gens, 4),
            Err(Error::EnumerationCapExceeded { .. })
        ));
    }
}
