use std::fmt;

use serde::Serialize;

use super::partition::{Bipartition, Partition};
use crate::error::{Error, Result};
use crate::lie::RootType;

/// Two strictly increasing rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Symbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
    #[serde(rename = "type")]
    pub kind: RootType,
}

fn check_kind(t: RootType) -> Result<()> {
    if t == RootType::A {
        return Err(Error::UnsupportedFamily("symbols are defined for types B, C, D".into()));
    }
    Ok(())
}

/// Increasing with zeros in front, then `+ (0, 1, 2, …)`.
fn row(p: &Partition, len: usize) -> Vec<u32> {
    let mut xs: Vec<u32> = p.parts().iter().rev().copied().collect();
    let mut padded = vec![0; len - xs.len()];
    padded.append(&mut xs);
    padded.iter().enumerate().map(|(i, &x)| x + i as u32).collect()
}

fn unrow(xs: &[u32]) -> Option<Partition> {
    let mut parts = Vec::with_capacity(xs.len());
    for (i, &x) in xs.iter().enumerate() {
        parts.push(x.checked_sub(i as u32)?);
    }
    if parts.windows(2).any(|w| w[0] > w[1]) {
        return None;
    }
    Some(Partition::from_unsorted(parts))
}

impl Symbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>, kind: RootType) -> Result<Self> {
        check_kind(kind)?;
        let strict = |v: &[u32]| v.windows(2).all(|w| w[0] < w[1]);
        let shape = match kind {
            RootType::D => top.len() == bottom.len(),
            _ => top.len() == bottom.len() + 1,
        };
        if !strict(&top) || !strict(&bottom) || !shape {
            return Err(Error::IllegalParams(format!("malformed symbol {top:?}/{bottom:?}")));
        }
        Ok(Symbol { top, bottom, kind })
    }

    /// Representative with the shift `(0, x+1) ~ x` removed as often as possible.
    pub fn reduced(&self) -> Symbol {
        let mut s = self.clone();
        while s.top.first() == Some(&0) && s.bottom.first() == Some(&0) {
            s.top = s.top[1..].iter().map(|x| x - 1).collect();
            s.bottom = s.bottom[1..].iter().map(|x| x - 1).collect();
        }
        s
    }

    /// Equality up to simultaneous shift.
    pub fn equivalent(&self, other: &Symbol) -> bool {
        self.kind == other.kind && self.reduced() == other.reduced()
    }

    /// The pair of partitions read off row by row.
    pub fn bipartition(&self) -> Option<Bipartition> {
        Some(Bipartition::new(unrow(&self.top)?, unrow(&self.bottom)?))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "({} / {})", show(&self.top), show(&self.bottom))
    }
}

/// Pad `α` to `m+1` parts and `β` to `m` (type D: both to `m`), `m` minimal.
pub fn symbol_of_bipartition(bp: &Bipartition, t: RootType) -> Result<Symbol> {
    check_kind(t)?;
    let (a, b) = (bp.alpha.len(), bp.beta.len());
    let (lt, lb) = match t {
        RootType::D => {
            let m = a.max(b);
            (m, m)
        }
        _ => {
            let m = a.saturating_sub(1).max(b);
            (m + 1, m)
        }
    };
    Symbol::new(row(&bp.alpha, lt), row(&bp.beta, lb), t)
}

/// Merge `2x+1`/`2x` per row (B) or `2x`/`2x+1` (C, D), sort, subtract `0,1,2,…`.
pub fn partition_of_symbol(s: &Symbol) -> Option<Partition> {
    let odd_top = s.kind == RootType::B;
    let mut merged: Vec<u32> = s
        .top
        .iter()
        .map(|&t| if odd_top { 2 * t + 1 } else { 2 * t })
        .chain(s.bottom.iter().map(|&b| if odd_top { 2 * b } else { 2 * b + 1 }))
        .collect();
    merged.sort_unstable();
    if merged.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    unrow(&merged)
}

/// Inverse of `partition_of_symbol`: the symbol whose merged sequence gives `p`.
pub fn symbol_of_partition(p: &Partition, t: RootType) -> Option<Symbol> {
    if t == RootType::A {
        return None;
    }
    let odd_top = t == RootType::B;
    let base = p.len();
    for len in base..base + 4 {
        let parity_ok = match t {
            RootType::D => len % 2 == 0,
            _ => len % 2 == 1,
        };
        if !parity_ok {
            continue;
        }
        let mut parts: Vec<u32> = p.parts().iter().rev().copied().collect();
        let mut xs = vec![0; len - parts.len()];
        xs.append(&mut parts);
        let seq: Vec<u32> = xs.iter().enumerate().map(|(i, &x)| x + i as u32).collect();
        let (mut top, mut bottom) = (Vec::new(), Vec::new());
        for x in seq {
            let goes_top = (x % 2 == 1) == odd_top;
            if goes_top {
                top.push(x / 2);
            } else {
                bottom.push(x / 2);
            }
        }
        if let Ok(s) = Symbol::new(top, bottom, t) {
            return Some(s);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(xs: &[u32]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn displayed_symbols() {
        let bp = Bipartition::new(p(&[1, 1]), p(&[1, 1]));
        let s = symbol_of_bipartition(&bp, RootType::B).unwrap();
        assert_eq!((s.top.clone(), s.bottom.clone()), (vec![0, 2, 3], vec![1, 2]));
        assert_eq!(partition_of_symbol(&s), Some(p(&[3, 2, 2, 1, 1])));
        let bp = Bipartition::new(Partition::empty(), p(&[2, 1]));
        let s = symbol_of_bipartition(&bp, RootType::C).unwrap();
        assert_eq!((s.top.clone(), s.bottom.clone()), (vec![0, 1, 2], vec![1, 3]));
        assert_eq!(partition_of_symbol(&s), Some(p(&[3, 1, 1, 1])));
        let empty = Bipartition::new(Partition::empty(), Partition::empty());
        let s = symbol_of_bipartition(&empty, RootType::B).unwrap();
        assert_eq!((s.top, s.bottom), (vec![0], vec![]));
    }

    #[test]
    fn inversion() {
        for (part, t) in [
            (p(&[3, 2, 2, 1, 1]), RootType::B),
            (p(&[3, 1, 1, 1]), RootType::C),
            (p(&[2, 2]), RootType::C),
            (p(&[3, 1]), RootType::D),
            (p(&[2, 2, 1, 1]), RootType::D),
        ] {
            let s = symbol_of_partition(&part, t).unwrap();
            assert_eq!(partition_of_symbol(&s), Some(part.clone()), "{part}");
            let bp = s.bipartition().unwrap();
            let again = symbol_of_bipartition(&bp, t).unwrap();
            assert!(again.equivalent(&s));
        }
    }

    #[test]
    fn shift_equivalence() {
        let a = Symbol::new(vec![0, 2, 3], vec![1, 2], RootType::B).unwrap();
        let b = Symbol::new(vec![0, 1, 3, 4], vec![0, 2, 3], RootType::B).unwrap();
        assert!(a.equivalent(&b));
        assert!(Symbol::new(vec![1, 0], vec![], RootType::B).is_err());
    }
}
