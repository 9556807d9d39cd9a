//! Springer correspondence for the representation generated by the compact roots.

mod partition;
mod symbol;

pub use partition::{
    bipartition_dim, bipartition_dim_typed, is_very_even, orbit_dim, valid_nilpotent, Bipartition,
    Partition, MAX_BIPARTITION_N,
};
pub use symbol::{partition_of_symbol, symbol_of_bipartition, symbol_of_partition, Symbol};

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::lie::{build_root_datum, GroupId, RootDatum};
use crate::poly::{linear_form_product, LinearForm, MultiPoly};

/// `σ_K` as a partition (type A) or a bipartition (types B, C, D).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SigmaLabel {
    Partition(Partition),
    Bipartition(Bipartition),
}

impl std::fmt::Display for SigmaLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SigmaLabel::Partition(p) => write!(f, "{p}"),
            SigmaLabel::Bipartition(b) => write!(f, "{b}"),
        }
    }
}

fn ones(k: usize) -> Partition {
    Partition::from_blocks(&[(1, k)])
}

fn twos_ones(p: usize, q: usize) -> Partition {
    let (lo, hi) = (p.min(q), p.max(q));
    Partition::from_blocks(&[(2, lo), (1, hi - lo)])
}

pub fn sigma_k_label(group: GroupId) -> Result<SigmaLabel> {
    group.validate()?;
    let bp = |a: Partition, b: Partition| SigmaLabel::Bipartition(Bipartition::new(a, b));
    Ok(match group {
        GroupId::Su { p, q } => SigmaLabel::Partition(twos_ones(p, q)),
        GroupId::SoOdd { p, q } => bp(ones(p), ones(q)),
        GroupId::SpPq { p, q } => bp(Partition::empty(), twos_ones(p, q)),
        GroupId::SpReal { n } | GroupId::SoStar { n } => bp(ones(n.div_ceil(2)), ones(n / 2)),
        GroupId::SoEven { p, q } => bp(twos_ones(p, q), Partition::empty()),
    })
}

/// The bipartition of `σ_K` (types B, C, D only).
pub fn sigma_k_bipartition(group: GroupId) -> Result<Bipartition> {
    match sigma_k_label(group)? {
        SigmaLabel::Bipartition(b) => Ok(b),
        SigmaLabel::Partition(_) => Err(Error::UnsupportedFamily(format!(
            "{group} is type A: its label is a partition"
        ))),
    }
}

/// Nilpotent orbit attached to `σ_K`, before the parity check.
pub fn candidate_partition(group: GroupId) -> Result<Option<Partition>> {
    Ok(match sigma_k_label(group)? {
        // in type A the orbit is the transposed label
        SigmaLabel::Partition(p) => Some(p),
        SigmaLabel::Bipartition(bp) => {
            partition_of_symbol(&symbol_of_bipartition(&bp, group.root_type())?)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpringerRow {
    pub group: GroupId,
    pub generator: MultiPoly,
    pub generator_text: String,
    pub label: SigmaLabel,
    pub is_springer: bool,
    pub partition: Option<Partition>,
    pub orbit_dim: Option<u64>,
    pub very_even: bool,
}

#[derive(Serialize, Deserialize)]
struct RowRepr {
    group: String,
    generator: String,
    label: SigmaLabel,
    springer: bool,
    partition: Option<Partition>,
    orbit_dim: Option<u64>,
    very_even: bool,
}

impl Serialize for SpringerRow {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RowRepr {
            group: self.group.to_string(),
            generator: self.generator_text.clone(),
            label: self.label.clone(),
            springer: self.is_springer,
            partition: self.partition.clone(),
            orbit_dim: self.orbit_dim,
            very_even: self.very_even,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SpringerRow {
    /// The generator polynomial is rebuilt from the group.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = RowRepr::deserialize(d)?;
        let group: GroupId = r.group.parse().map_err(D::Error::custom)?;
        let datum = build_root_datum(group, &table_config()).map_err(D::Error::custom)?;
        Ok(SpringerRow {
            group,
            generator: generator_poly(&datum),
            generator_text: r.generator,
            label: r.label,
            is_springer: r.springer,
            partition: r.partition,
            orbit_dim: r.orbit_dim,
            very_even: r.very_even,
        })
    }
}

/// `∏_{R_k⁺} α`.
pub fn generator_poly(datum: &RootDatum) -> MultiPoly {
    let forms: Vec<LinearForm> = datum
        .compact_roots()
        .map(|a| LinearForm::from_weight(a).expect("root"))
        .collect();
    linear_form_product(datum.rank, &forms)
}

/// The closed-form row of the reference table: `(Springer?, partition, dim)`.
pub fn reference_row(group: GroupId) -> Result<(bool, Option<Partition>, Option<u64>)> {
    group.validate()?;
    let yes = |p: Partition, d: usize| (true, Some(p), Some(d as u64));
    Ok(match group {
        GroupId::Su { p, q } => yes(twos_ones(p, q), 2 * p * q),
        GroupId::SoOdd { p, q } => {
            if q + 1 >= p {
                yes(
                    Partition::from_blocks(&[(3, 1), (2, 2 * p - 2), (1, 2 * (q + 1 - p))]),
                    2 * p * (2 * q + 1),
                )
            } else {
                (false, None, None)
            }
        }
        GroupId::SpReal { n } => yes(Partition::from_blocks(&[(2, n)]), n * (n + 1)),
        GroupId::SpPq { .. } => (false, None, None),
        GroupId::SoEven { p, q } => {
            let (p, q) = (p.min(q), p.max(q));
            yes(
                Partition::from_blocks(&[(3, 1), (2, 2 * p - 2), (1, 2 * (q - p) + 1)]),
                4 * p * q,
            )
        }
        GroupId::SoStar { n } => {
            let part = if n % 2 == 0 {
                Partition::from_blocks(&[(2, n)])
            } else {
                Partition::from_blocks(&[(2, n - 1), (1, 2)])
            };
            yes(part, n * (n - 1))
        }
    })
}

/// Primitive forms of the compact positive roots, with `(Xi−Xj)(Xi+Xj)` shown as `(Xi^2−Xj^2)`.
pub fn generator_text(datum: &RootDatum) -> String {
    let forms: Vec<LinearForm> = datum
        .compact_roots()
        .map(|a| LinearForm::from_weight(a).expect("root").primitive())
        .collect();
    if forms.is_empty() {
        return "1".into();
    }
    let n = datum.rank;
    let support = |l: &LinearForm| -> Vec<usize> {
        (0..n).filter(|&i| !num_traits::Zero::is_zero(&l.coeffs()[i])).collect()
    };
    let mut used = vec![false; forms.len()];
    let mut out = Vec::new();
    for (k, l) in forms.iter().enumerate() {
        if used[k] {
            continue;
        }
        used[k] = true;
        let s = support(l);
        if s.len() == 1 {
            out.push(format!("X{}", s[0] + 1));
            continue;
        }
        let partner = forms.iter().enumerate().position(|(j, m)| {
            !used[j] && support(m) == s && m != l
        });
        match partner {
            Some(j) => {
                used[j] = true;
                out.push(format!("(X{}^2-X{}^2)", s[0] + 1, s[1] + 1));
            }
            None => out.push(format!("({})", l.to_string().replace(' ', ""))),
        }
    }
    out.join("")
}

pub fn springer_row_with(group: GroupId, config: &Config) -> Result<SpringerRow> {
    let datum = build_root_datum(group, config)?;
    let t = group.root_type();
    let n = group.defining_dim() as u32;
    let generator = generator_poly(&datum);
    debug_assert_eq!(generator.degree().unwrap_or(0) as usize, datum.r_k());
    let label = sigma_k_label(group)?;
    let candidate = candidate_partition(group)?;
    let valid = candidate.as_ref().is_some_and(|p| valid_nilpotent(p, t, n));
    let (partition, orbit_dim_v) = if valid {
        let p = candidate.expect("valid");
        let d = orbit_dim(&p, t, n)?;
        if d as usize != 2 * (datum.r_g() - datum.r_k()) {
            return Err(Error::IllegalParams(format!(
                "{group}: orbit dimension {d} differs from 2(#R_g+ − #R_k+)"
            )));
        }
        (Some(p), Some(d))
    } else {
        (None, None)
    };
    Ok(SpringerRow {
        group,
        generator_text: generator_text(&datum),
        generator,
        very_even: partition.as_ref().is_some_and(|p| is_very_even(p, t)),
        label,
        is_springer: valid,
        partition,
        orbit_dim: orbit_dim_v,
    })
}

/// Configuration for table rows: the rank cap defaults to `TABLE_RANK_CAP` unless overridden.
pub fn table_config() -> Config {
    Config::default().with_max_rank(Config::rank_override().unwrap_or(TABLE_RANK_CAP))
}

pub fn springer_row(group: GroupId) -> Result<SpringerRow> {
    springer_row_with(group, &table_config())
}

pub const TABLE_RANK_CAP: usize = 10;

/// Family selector for the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Su,
    SoOdd,
    SpReal,
    SpPq,
    SoEven,
    SoStar,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Su,
        Family::SoOdd,
        Family::SpReal,
        Family::SpPq,
        Family::SoEven,
        Family::SoStar,
    ];

    pub fn parse(s: &str) -> Result<Vec<Family>> {
        let mut out = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok.to_ascii_lowercase().as_str() {
                "all" => out.extend(Family::ALL),
                "su" => out.push(Family::Su),
                "so-odd" | "so_odd" => out.push(Family::SoOdd),
                "sp-real" | "sp_real" => out.push(Family::SpReal),
                "sp-pq" | "sp_pq" => out.push(Family::SpPq),
                "so-even" | "so_even" => out.push(Family::SoEven),
                "so-star" | "so_star" => out.push(Family::SoStar),
                other => return Err(Error::UnsupportedFamily(other.to_string())),
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Parameter range of the reference table, capped at `max`.
    pub fn groups(self, max: usize) -> Vec<GroupId> {
        let pairs = |lo_q: usize| -> Vec<(usize, usize)> {
            (1..=max)
                .flat_map(|p| (lo_q..=max).map(move |q| (p, q)))
                .collect()
        };
        match self {
            Family::Su => pairs(1).into_iter().filter(|(p, q)| p <= q).map(|(p, q)| GroupId::Su { p, q }).collect(),
            Family::SoOdd => pairs(0).into_iter().map(|(p, q)| GroupId::SoOdd { p, q }).collect(),
            Family::SpReal => (1..=max).map(|n| GroupId::SpReal { n }).collect(),
            Family::SpPq => pairs(1).into_iter().filter(|(p, q)| p <= q).map(|(p, q)| GroupId::SpPq { p, q }).collect(),
            Family::SoEven => pairs(1).into_iter().filter(|(p, q)| p <= q).map(|(p, q)| GroupId::SoEven { p, q }).collect(),
            Family::SoStar => (1..=max).map(|n| GroupId::SoStar { n }).collect(),
        }
    }
}

pub fn springer_table(families: &[Family], max: usize) -> Result<Vec<SpringerRow>> {
    springer_table_with(families, max, &table_config())
}

pub fn springer_table_with(families: &[Family], max: usize, config: &Config) -> Result<Vec<SpringerRow>> {
    families
        .iter()
        .flat_map(|f| f.groups(max))
        .map(|g| springer_row_with(g, config))
        .collect()
}

/// Certify a catalog entry: the reference partition inverts to the catalog bipartition.
pub fn certify_catalog(group: GroupId) -> Result<bool> {
    let (yes, part, _) = reference_row(group)?;
    let t = group.root_type();
    let label = sigma_k_label(group)?;
    match (yes, part, label) {
        (true, Some(p), SigmaLabel::Partition(l)) => Ok(p == l),
        (true, Some(p), SigmaLabel::Bipartition(bp)) => {
            let Some(sym) = symbol_of_partition(&p, t) else {
                return Ok(false);
            };
            let ours = symbol_of_bipartition(&bp, t)?;
            Ok(sym.equivalent(&ours) && sym.bipartition() == Some(bp))
        }
        (false, _, _) => Ok(!springer_row(group)?.is_springer),
        _ => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(xs: &[u32]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn catalog_examples() {
        assert_eq!(
            sigma_k_bipartition(GroupId::SoOdd { p: 2, q: 2 }).unwrap(),
            Bipartition::new(p(&[1, 1]), p(&[1, 1]))
        );
        assert_eq!(
            sigma_k_bipartition(GroupId::SpPq { p: 1, q: 2 }).unwrap(),
            Bipartition::new(Partition::empty(), p(&[2, 1]))
        );
        assert_eq!(
            sigma_k_bipartition(GroupId::SpReal { n: 2 }).unwrap(),
            Bipartition::new(p(&[1]), p(&[1]))
        );
        assert!(sigma_k_bipartition(GroupId::Su { p: 1, q: 2 }).is_err());
    }

    #[test]
    fn rows() {
        let r = springer_row(GroupId::SoOdd { p: 2, q: 2 }).unwrap();
        assert!(r.is_springer);
        assert_eq!(r.partition, Some(p(&[3, 2, 2, 1, 1])));
        assert_eq!(r.orbit_dim, Some(20));
        assert_eq!(r.generator_text, "(X1^2-X2^2)(X3^2-X4^2)X3X4");
        assert!(!springer_row(GroupId::SpPq { p: 1, q: 2 }).unwrap().is_springer);
        let r = springer_row(GroupId::SoStar { n: 3 }).unwrap();
        assert_eq!(r.partition, Some(p(&[2, 2, 1, 1])));
        assert_eq!(r.orbit_dim, Some(6));
        assert!(!springer_row(GroupId::SoOdd { p: 3, q: 1 }).unwrap().is_springer);
        let r = springer_row(GroupId::SoOdd { p: 1, q: 2 }).unwrap();
        assert_eq!(r.partition, Some(p(&[3, 1, 1, 1, 1])));
        assert_eq!(r.orbit_dim, Some(10));
        assert_eq!(springer_row(GroupId::SpPq { p: 1, q: 1 }).unwrap().generator_text, "X1X2");
    }

    #[test]
    fn very_even_flag() {
        let r = springer_row(GroupId::SoStar { n: 2 }).unwrap();
        assert_eq!(r.partition, Some(p(&[2, 2])));
        assert!(r.very_even);
    }

    #[test]
    fn catalog_certified() {
        for f in Family::ALL {
            for g in f.groups(5) {
                assert!(certify_catalog(g).unwrap(), "{g}");
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let r = springer_row(GroupId::SoOdd { p: 2, q: 2 }).unwrap();
        let j = serde_json::to_string(&r).unwrap();
        assert!(j.starts_with(r#"{"group":"SO_e(4,5)","#), "{j}");
        let back: SpringerRow = serde_json::from_str(&j).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn table_small() {
        let rows = springer_table(&Family::ALL, 5).unwrap();
        for r in rows {
            let (yes, part, dim) = reference_row(r.group).unwrap();
            assert_eq!(r.is_springer, yes, "{}", r.group);
            assert_eq!(r.partition, part, "{}", r.group);
            assert_eq!(r.orbit_dim, dim, "{}", r.group);
        }
    }
}
