use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the classical equal-rank real forms handled by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupId {
    /// `SU(p,q)`.
    Su { p: usize, q: usize },
    /// `SO_e(2p,2q+1)`.
    SoOdd { p: usize, q: usize },
    /// `Sp(2n,R)`.
    SpReal { n: usize },
    /// `Sp(p,q)`.
    SpPq { p: usize, q: usize },
    /// `SO_e(2p,2q)`.
    SoEven { p: usize, q: usize },
    /// `SO*(2n)`.
    SoStar { n: usize },
}

/// Cartan type of the complexified Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

impl GroupId {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            GroupId::Su { p, q } => p >= 1 && q >= 1,
            GroupId::SoOdd { p, .. } => p >= 1,
            GroupId::SpReal { n } => n >= 1,
            GroupId::SpPq { p, q } => p >= 1 && q >= 1,
            GroupId::SoEven { p, q } => p >= 1 && q >= 1,
            GroupId::SoStar { n } => n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IllegalParams(self.to_string()))
        }
    }

    /// Number of ambient coordinates.
    pub fn rank(&self) -> usize {
        match *self {
            GroupId::Su { p, q }
            | GroupId::SoOdd { p, q }
            | GroupId::SpPq { p, q }
            | GroupId::SoEven { p, q } => p + q,
            GroupId::SpReal { n } | GroupId::SoStar { n } => n,
        }
    }

    pub fn root_type(&self) -> RootType {
        match self {
            GroupId::Su { .. } => RootType::A,
            GroupId::SoOdd { .. } => RootType::B,
            GroupId::SpReal { .. } | GroupId::SpPq { .. } => RootType::C,
            GroupId::SoEven { .. } | GroupId::SoStar { .. } => RootType::D,
        }
    }

    /// Dimension `N` of the defining representation of the complex algebra.
    pub fn defining_dim(&self) -> usize {
        let r = self.rank();
        match self.root_type() {
            RootType::A => r,
            RootType::B => 2 * r + 1,
            RootType::C | RootType::D => 2 * r,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupId::Su { p, q } => write!(f, "SU({p},{q})"),
            GroupId::SoOdd { p, q } => write!(f, "SO_e({},{})", 2 * p, 2 * q + 1),
            GroupId::SpReal { n } => write!(f, "Sp({},R)", 2 * n),
            GroupId::SpPq { p, q } => write!(f, "Sp({p},{q})"),
            GroupId::SoEven { p, q } => write!(f, "SO_e({},{})", 2 * p, 2 * q),
            GroupId::SoStar { n } => write!(f, "SO*({})", 2 * n),
        }
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// Accepts the display forms, e.g. `SU(2,1)`, `SO_e(4,5)`, `Sp(4,R)`,
    /// `Sp(1,2)`, `SO*(6)`; `SL(2,R)` is read as `SU(1,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unrecognized group {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let open = compact.find('(').ok_or_else(bad)?;
        if !compact.ends_with(')') {
            return Err(bad());
        }
        let name = compact[..open].to_ascii_lowercase();
        let args: Vec<&str> = compact[open + 1..compact.len() - 1].split(',').collect();
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        let g = match (name.as_str(), args.as_slice()) {
            ("su", [p, q]) => GroupId::Su { p: num(p)?, q: num(q)? },
            ("sl", ["2", r]) if r.eq_ignore_ascii_case("r") => GroupId::Su { p: 1, q: 1 },
            ("sp", [n, r]) if r.eq_ignore_ascii_case("r") => {
                let n = num(n)?;
                if n % 2 != 0 {
                    return Err(bad());
                }
                GroupId::SpReal { n: n / 2 }
            }
            ("sp", [p, q]) => GroupId::SpPq { p: num(p)?, q: num(q)? },
            ("so_e" | "so", [a, b]) => {
                let (a, b) = (num(a)?, num(b)?);
                if a % 2 != 0 {
                    return Err(bad());
                }
                if b % 2 == 1 {
                    GroupId::SoOdd { p: a / 2, q: b / 2 }
                } else {
                    GroupId::SoEven { p: a / 2, q: b / 2 }
                }
            }
            ("so*", [n]) => {
                let n = num(n)?;
                if n % 2 != 0 {
                    return Err(bad());
                }
                GroupId::SoStar { n: n / 2 }
            }
            _ => return Err(bad()),
        };
        g.validate()?;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_roundtrip() {
        for s in ["SU(2,1)", "SO_e(4,5)", "Sp(4,R)", "Sp(1,2)", "SO_e(4,4)", "SO*(6)", "SO_e(2,1)"] {
            let g: GroupId = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert_eq!("SL(2,R)".parse::<GroupId>().unwrap(), GroupId::Su { p: 1, q: 1 });
    }

    #[test]
    fn illegal_params() {
        assert!(matches!("SU(0,3)".parse::<GroupId>(), Err(Error::IllegalParams(_))));
        assert!(GroupId::SoStar { n: 0 }.validate().is_err());
        assert!("SO*(5)".parse::<GroupId>().is_err());
        assert!("G2(1)".parse::<GroupId>().is_err());
    }
}
