use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use super::group::{GroupId, RootType};
use super::weight::{pairing, Weight};
use super::weyl::{generate_group, WeylElement};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::rational::{is_integer, qr, Q};

/// A positive root of `g` with its compactness flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub vector: Weight,
    pub compact: bool,
}

/// Which Weyl group to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    G,
    K,
}

/// Integrality rule for the weight lattice `Λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lattice {
    /// All coordinates integral.
    Integral,
    /// All pairwise coordinate differences integral (type A, trace line ignored).
    IntegralDifferences,
}

impl Lattice {
    pub fn contains(&self, w: &Weight) -> bool {
        match self {
            Lattice::Integral => w.0.iter().all(is_integer),
            Lattice::IntegralDifferences => match w.0.first() {
                None => true,
                Some(first) => w.0.iter().all(|x| is_integer(&(x - first))),
            },
        }
    }
}

/// Positive roots, compact split and ρ's for one real form.
#[derive(Debug, Clone)]
pub struct RootDatum {
    pub group: GroupId,
    pub rank: usize,
    pub root_type: RootType,
    pub pos_roots: Vec<Root>,
    pub rho_g: Weight,
    pub rho_k: Weight,
    pub lattice: Lattice,
    config: Config,
    w_g: OnceLock<Vec<WeylElement>>,
    w_k: OnceLock<Vec<WeylElement>>,
}

fn e(n: usize, i: usize) -> Weight {
    Weight::unit(n, i, 1)
}

/// Positive roots of the given type on `n` coordinates.
fn positive_roots(t: RootType, n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(&e(n, i) - &e(n, j));
            if t != RootType::A {
                out.push(&e(n, i) + &e(n, j));
            }
        }
    }
    for i in 0..n {
        match t {
            RootType::B => out.push(e(n, i)),
            RootType::C => out.push(Weight::unit(n, i, 2)),
            _ => {}
        }
    }
    out
}

/// Support of a root, as a pair of coordinate indices (second may repeat the first).
fn support(alpha: &Weight) -> Vec<usize> {
    (0..alpha.rank()).filter(|&i| !alpha.0[i].is_zero()).collect()
}

fn half_sum<'a>(roots: impl Iterator<Item = &'a Weight>, n: usize) -> Weight {
    let half = qr(1, 2);
    roots.fold(Weight::zero(n), |acc, r| &acc + r).scale(&half)
}

fn is_compact(group: &GroupId, alpha: &Weight) -> bool {
    let s = support(alpha);
    let block = |p: usize| -> bool {
        // all support indices on the same side of the split at p
        s.iter().all(|&i| i < p) || s.iter().all(|&i| i >= p)
    };
    match *group {
        // short roots of B_{p+q} only survive in the B_q factor
        GroupId::SoOdd { p, .. } if s.len() == 1 => s[0] >= p,
        GroupId::Su { p, .. } | GroupId::SoOdd { p, .. } | GroupId::SpPq { p, .. } | GroupId::SoEven { p, .. } => {
            block(p)
        }
        // compact = {e_i - e_j}
        GroupId::SpReal { .. } | GroupId::SoStar { .. } => {
            s.len() == 2 && (&alpha.0[s[0]] + &alpha.0[s[1]]).is_zero()
        }
    }
}

impl RootDatum {
    pub fn new(group: GroupId) -> Result<Self> {
        build_root_datum(group, &Config::default())
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn compact_roots(&self) -> impl Iterator<Item = &Weight> {
        self.pos_roots.iter().filter(|r| r.compact).map(|r| &r.vector)
    }

    pub fn noncompact_roots(&self) -> impl Iterator<Item = &Weight> {
        self.pos_roots.iter().filter(|r| !r.compact).map(|r| &r.vector)
    }

    pub fn all_roots(&self) -> impl Iterator<Item = &Weight> {
        self.pos_roots.iter().map(|r| &r.vector)
    }

    /// `♯R_g⁺`.
    pub fn r_g(&self) -> usize {
        self.pos_roots.len()
    }

    /// `♯R_k⁺`.
    pub fn r_k(&self) -> usize {
        self.compact_roots().count()
    }

    /// `ρ_g − ρ_k`.
    pub fn rho_n(&self) -> Weight {
        &self.rho_g - &self.rho_k
    }

    /// Simple roots of the positive system (`Which::K` restricts to compact roots).
    pub fn simple_roots(&self, which: Which) -> Vec<Weight> {
        let roots: Vec<&Weight> = match which {
            Which::G => self.all_roots().collect(),
            Which::K => self.compact_roots().collect(),
        };
        simple_subset(&roots)
    }

    pub fn weyl_order(&self, which: Which) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        let bc = |n: usize| (1u128 << n) * fact(n);
        let d = |n: usize| if n == 0 { 1 } else { (1u128 << (n - 1)) * fact(n) };
        match (self.group, which) {
            (GroupId::Su { p, q }, Which::G) => fact(p + q),
            (GroupId::Su { p, q }, Which::K) => fact(p) * fact(q),
            (GroupId::SoOdd { p, q }, Which::G) => bc(p + q),
            (GroupId::SoOdd { p, q }, Which::K) => d(p) * bc(q),
            (GroupId::SpReal { n }, Which::G) => bc(n),
            (GroupId::SpReal { n }, Which::K) => fact(n),
            (GroupId::SpPq { p, q }, Which::G) => bc(p + q),
            (GroupId::SpPq { p, q }, Which::K) => bc(p) * bc(q),
            (GroupId::SoEven { p, q }, Which::G) => d(p + q),
            (GroupId::SoEven { p, q }, Which::K) => d(p) * d(q),
            (GroupId::SoStar { n }, Which::G) => d(n),
            (GroupId::SoStar { n }, Which::K) => fact(n),
        }
    }

    /// `⟨λ, α∨⟩ ≠ 0` for every root.
    pub fn is_g_regular(&self, lambda: &Weight) -> bool {
        self.all_roots().all(|a| !lambda.dot(a).is_zero())
    }

    /// `⟨λ, α∨⟩ > 0` for every compact positive root.
    pub fn is_k_dominant_regular(&self, lambda: &Weight) -> bool {
        self.compact_roots().all(|a| lambda.dot(a).is_positive())
    }

    /// Membership in `Λ + ρ_g`.
    pub fn in_shifted_lattice(&self, gamma: &Weight) -> bool {
        self.lattice.contains(&(gamma - &self.rho_g))
    }

    /// Membership in the root lattice `Q`.
    pub fn in_root_lattice(&self, v: &Weight) -> bool {
        if !v.0.iter().all(is_integer) {
            return false;
        }
        let sum: Q = v.0.iter().sum();
        match self.root_type {
            RootType::A => sum.is_zero(),
            RootType::B => true,
            RootType::C | RootType::D => is_integer(&(sum / Q::from_integer(2.into()))),
        }
    }

    pub fn is_dominant_integral(&self, lambda: &Weight) -> bool {
        self.all_roots().all(|a| {
            let c = pairing(lambda, a).expect("rank checked");
            is_integer(&c) && !c.is_negative()
        })
    }

    /// Full enumeration of `W_g` or `W_k`.
    pub fn weyl_elements(&self, which: Which) -> Result<Vec<WeylElement>> {
        weyl_elements(self, which)
    }

    /// Cached enumeration; computed once per datum.
    pub fn weyl(&self, which: Which) -> Result<&[WeylElement]> {
        let cell = match which {
            Which::G => &self.w_g,
            Which::K => &self.w_k,
        };
        if let Some(v) = cell.get() {
            return Ok(v);
        }
        let v = weyl_elements(self, which)?;
        Ok(cell.get_or_init(|| v))
    }
}

/// Elements of `roots` that are not a sum of two others.
pub(crate) fn simple_subset(roots: &[&Weight]) -> Vec<Weight> {
    roots
        .iter()
        .filter(|&&a| {
            !roots
                .iter()
                .any(|&b| roots.iter().any(|&c| &(b + c) == a))
        })
        .map(|&a| a.clone())
        .collect()
}

pub fn build_root_datum(group: GroupId, config: &Config) -> Result<RootDatum> {
    group.validate()?;
    let n = group.rank();
    if n > config.max_rank {
        return Err(Error::RankCapExceeded {
            rank: n,
            cap: config.max_rank,
        });
    }
    let root_type = group.root_type();
    let pos_roots: Vec<Root> = positive_roots(root_type, n)
        .into_iter()
        .map(|vector| Root {
            compact: is_compact(&group, &vector),
            vector,
        })
        .collect();
    let rho_g = half_sum(pos_roots.iter().map(|r| &r.vector), n);
    let rho_k = half_sum(pos_roots.iter().filter(|r| r.compact).map(|r| &r.vector), n);
    let lattice = match root_type {
        RootType::A => Lattice::IntegralDifferences,
        _ => Lattice::Integral,
    };
    Ok(RootDatum {
        group,
        rank: n,
        root_type,
        pos_roots,
        rho_g,
        rho_k,
        lattice,
        config: *config,
        w_g: OnceLock::new(),
        w_k: OnceLock::new(),
    })
}

pub fn weyl_elements(datum: &RootDatum, which: Which) -> Result<Vec<WeylElement>> {
    let cap = datum.config.max_weyl_order;
    let order = datum.weyl_order(which);
    if order > cap as u128 {
        return Err(Error::EnumerationCapExceeded { order, cap });
    }
    let gens: Vec<WeylElement> = datum
        .simple_roots(which)
        .iter()
        .map(|a| WeylElement::reflection(a).expect("classical reflections are signed permutations"))
        .collect();
    generate_group(datum.rank, &gens, cap)
}

/// Reflect `gamma` by compact roots until it is `R_k⁺`-dominant.
/// Returns the dominant representative and `sgn(x)`, or `None` when `gamma`
/// is singular for `R_k`.
pub fn k_dominant(datum: &RootDatum, gamma: &Weight) -> Option<(Weight, i64)> {
    let compact: Vec<&Weight> = datum.compact_roots().collect();
    if compact.iter().any(|a| gamma.dot(a).is_zero()) {
        return None;
    }
    let mut g = gamma.clone();
    let mut sign = 1i64;
    loop {
        match compact.iter().find(|a| g.dot(a).is_negative()) {
            None => return Some((g, sign)),
            Some(a) => {
                let c = pairing(&g, a).expect("rank checked");
                g = &g - &a.scale(&c);
                sign = -sign;
            }
        }
    }
}

/// `∏ α(y)` over the given roots.
pub fn root_product<'a>(roots: impl Iterator<Item = &'a Weight>, y: &Weight) -> Q {
    roots.fold(Q::one(), |acc, a| acc * a.dot(y))
}
