use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie::RootType;
use crate::rational::binomial;

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not decreasing")));
        }
        parts.shrink_to_fit();
        Ok(Partition(parts))
    }

    /// Sort and drop zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `[a^k, b^l, …]` from `(part, multiplicity)` blocks.
    pub fn from_blocks(blocks: &[(u32, usize)]) -> Self {
        Partition::from_unsorted(
            blocks
                .iter()
                .flat_map(|&(p, k)| std::iter::repeat(p).take(k))
                .collect(),
        )
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// Conjugate partition.
    pub fn dual(&self) -> Partition {
        let top = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=top)
                .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        )
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn tableaux(&self) -> u128 {
        let n = self.size() as u128;
        let dual = self.dual();
        let mut num: u128 = (1..=n).product();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as usize - j - 1;
                let leg = dual.0[j] as usize - i - 1;
                hooks *= (arm + leg + 1) as u128;
                let g = gcd(num, hooks);
                num /= g;
                hooks /= g;
            }
        }
        num / hooks
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                go(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        Partition::new(Vec::<u32>::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// Pair of partitions labelling an irreducible representation of `W(B_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl Bipartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Bipartition { alpha, beta }
    }

    pub fn n(&self) -> u32 {
        self.alpha.size() + self.beta.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

pub const MAX_BIPARTITION_N: u32 = 12;

/// `C(n,|α|)·f^α·f^β`, the dimension of the `W(B_n)` representation.
pub fn bipartition_dim(bp: &Bipartition) -> Result<u64> {
    let n = bp.n();
    if n > MAX_BIPARTITION_N {
        return Err(Error::CapExceeded(format!("n = {n} above {MAX_BIPARTITION_N}")));
    }
    Ok(binomial(n as usize, bp.alpha.size() as usize)
        * bp.alpha.tableaux() as u64
        * bp.beta.tableaux() as u64)
}

/// Dimension as a representation of `W(B_n) = W(C_n)` or of `W(D_n)`;
/// in type D a pair with `α = β` restricts to two halves.
pub fn bipartition_dim_typed(bp: &Bipartition, t: RootType) -> Result<u64> {
    let d = bipartition_dim(bp)?;
    Ok(if t == RootType::D && bp.alpha == bp.beta { d / 2 } else { d })
}

/// Parity rule for nilpotent orbits of the classical algebra with defining dimension `n`.
pub fn valid_nilpotent(p: &Partition, t: RootType, n: u32) -> bool {
    if p.size() != n {
        return false;
    }
    let even_mult = |parity: u32| {
        p.parts()
            .iter()
            .filter(|&&d| d % 2 == parity)
            .all(|&d| p.multiplicity(d) % 2 == 0)
    };
    match t {
        RootType::A => true,
        RootType::B | RootType::D => even_mult(0),
        RootType::C => even_mult(1),
    }
}

/// Type D partitions with only even parts label two orbits.
pub fn is_very_even(p: &Partition, t: RootType) -> bool {
    t == RootType::D && !p.is_empty() && p.parts().iter().all(|d| d % 2 == 0)
}

/// Complex dimension of the nilpotent orbit.
pub fn orbit_dim(p: &Partition, t: RootType, n: u32) -> Result<u64> {
    if !valid_nilpotent(p, t, n) {
        return Err(Error::InvalidPartition(format!("{p} is not a {t:?} orbit of size {n}")));
    }
    let s = p.dual();
    let sq: i64 = s.parts().iter().map(|&x| (x as i64) * (x as i64)).sum();
    let odd = p.parts().iter().filter(|&&d| d % 2 == 1).count() as i64;
    let n = n as i64;
    let d = match t {
        RootType::A => n * n - sq,
        RootType::B | RootType::D => (n * n - n) / 2 - (sq - odd) / 2,
        RootType::C => (n * n + n) / 2 - (sq + odd) / 2,
    };
    Ok(d as u64)
}
