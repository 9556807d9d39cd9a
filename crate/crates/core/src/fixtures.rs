//! Worked examples with known answers: SL(2,R), SU(2,1) discrete series, SU(1,n).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dirac::{act_on_family, ds_sign, index_polynomial, spin_weights, IndexFamily};
use crate::error::Result;
use crate::kvirt::{freudenthal, VirtualKModule};
use crate::lie::{GroupId, RootDatum, Weight, WeylElement, Which};
use crate::linalg::solve;
use crate::poly::MultiPoly;
use crate::rational::{q, qr, Q};

/// Weight `m` of `SO(2)` in the coordinates of `SU(1,1)`.
pub fn sl2_weight(m: i64) -> Weight {
    Weight(vec![qr(m, 2), qr(-m, 2)])
}

pub fn sl2_datum() -> Result<RootDatum> {
    RootDatum::new(GroupId::Su { p: 1, q: 1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sl2Module {
    F,
    #[serde(rename = "D+")]
    DPlus,
    #[serde(rename = "D-")]
    DMinus,
    P,
}

impl Sl2Module {
    pub const ALL: [Sl2Module; 4] = [Sl2Module::F, Sl2Module::DPlus, Sl2Module::DMinus, Sl2Module::P];

    pub fn name(self) -> &'static str {
        match self {
            Sl2Module::F => "F",
            Sl2Module::DPlus => "D+",
            Sl2Module::DMinus => "D-",
            Sl2Module::P => "P",
        }
    }

    /// Index family of the coherent family through the module.
    pub fn family(self) -> IndexFamily {
        let e = WeylElement::identity(2);
        let s = WeylElement::transposition(2, 0, 1);
        let base = sl2_weight(1);
        match self {
            Sl2Module::F => IndexFamily::new(base, [(e, -1), (s, 1)]),
            Sl2Module::DPlus => IndexFamily::new(base, [(e, 1)]),
            Sl2Module::DMinus => IndexFamily::new(base, [(s, -1)]),
            Sl2Module::P => IndexFamily::zero(base),
        }
    }

    /// Gelfand-Kirillov dimension.
    pub fn gk_dim(self) -> usize {
        match self {
            Sl2Module::F => 0,
            _ => 1,
        }
    }
}

/// Coherent continuation action of `s` on `F, D⁺, D⁻, P`; column `j` is `s·X_j`.
pub const SL2_S_ACTION: [[i64; 4]; 4] = [
    [-1, 1, 1, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2Fixture {
    pub q_values: BTreeMap<Sl2Module, String>,
    pub q_source: &'static str,
    pub s_action: [[i64; 4]; 4],
    pub s_action_source: &'static str,
    pub trivial: usize,
    pub sign: usize,
    pub decomposition_source: &'static str,
    pub conjecture_coefficients: (String, String),
    pub conjecture_source: &'static str,
    pub ps_index: BTreeMap<&'static str, VirtualKModule>,
    pub ps_source: &'static str,
}

/// `(#trivial, #sign)` from the trace of `s`.
pub fn isotypic_counts(m: &[[i64; 4]; 4]) -> (usize, usize) {
    let tr: i64 = (0..4).map(|i| m[i][i]).sum();
    (((4 + tr) / 2) as usize, ((4 - tr) / 2) as usize)
}

/// Rows of the associated-variety table: multiplicities on the two real forms, then `Q`.
pub const SL2_CYCLE_TABLE: [(&str, [i64; 2], i64); 4] = [
    ("finite-dimensional", [0, 0], 0),
    ("holomorphic discrete series", [1, 0], 1),
    ("antiholomorphic discrete series", [0, 1], -1),
    ("principal series", [1, 1], 0),
];

/// Solve `Q_Y = c₁ m¹_Y + c₂ m²_Y` over the table.
pub fn conjecture_coefficients() -> Option<(Q, Q)> {
    let col = |k: usize| SL2_CYCLE_TABLE.iter().map(|r| q(r.1[k])).collect::<Vec<_>>();
    let b: Vec<Q> = SL2_CYCLE_TABLE.iter().map(|r| q(r.2)).collect();
    let c = solve(&[col(0), col(1)], &b)?;
    Some((c[0].clone(), c[1].clone()))
}

/// `X ⊗ S⁺ − X ⊗ S⁻` with `S⁺ = ⋀^even n_p ⊗ C_{−ρ_n}` for a Verma module of highest weight `mu`.
///
/// The `K`-types of the Verma module are `mu, mu − 2, …`; `terms` of them are summed and
/// the boundary term at the bottom is dropped.
pub fn verma_euler_characteristic(mu: i64, terms: usize) -> Result<VirtualKModule> {
    let d = sl2_datum()?;
    let sw = spin_weights(&d)?;
    // the even exterior powers sit on the minus side when r_g − r_k is odd
    let (even, odd) = if (d.r_g() - d.r_k()) % 2 == 1 {
        (&sw.minus, &sw.plus)
    } else {
        (&sw.plus, &sw.minus)
    };
    let floor = mu - 2 * terms as i64 + 1;
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for k in 0..terms as i64 {
        let ktype = sl2_weight(mu - 2 * k);
        for (side, sgn) in [(even, 1), (odd, -1)] {
            for (w, &m) in side {
                let g = &ktype + w;
                *out.entry(g).or_insert(0) += sgn * m as i64;
            }
        }
    }
    Ok(VirtualKModule::from_parameters(
        &d,
        out.iter()
            .filter(|(g, _)| g.0[0] > qr(floor, 2))
            .map(|(g, &c)| (g, c)),
    ))
}

/// `I(P)`, `I(V₀)`, `I(V₋₂)` as recorded.
pub fn ps_index_constants() -> Result<BTreeMap<&'static str, VirtualKModule>> {
    let d = sl2_datum()?;
    let one = |m: i64| VirtualKModule::from_parameters(&d, [(&sl2_weight(m), -1)]);
    Ok(BTreeMap::from([("P", one(1)), ("V0", one(1)), ("V-2", one(-1))]))
}

pub fn sl2_fixture() -> Result<Sl2Fixture> {
    let d = sl2_datum()?;
    let mut q_values = BTreeMap::new();
    for m in Sl2Module::ALL {
        let p = index_polynomial(&m.family(), &d);
        q_values.insert(m, p.eval(&[q(0), q(0)])?.to_string());
    }
    let (trivial, sign) = isotypic_counts(&SL2_S_ACTION);
    let (c1, c2) = conjecture_coefficients().expect("table is consistent");
    Ok(Sl2Fixture {
        q_values,
        q_source: "SL(2,R) example: index polynomials 0, 1, -1, 0",
        s_action: SL2_S_ACTION,
        s_action_source: "SL(2,R) example: s.F = -F, s.D+ = D+ + F, s.D- = D- + F, s.P = P",
        trivial,
        sign,
        decomposition_source: "SL(2,R) example: three trivial representations and one sign representation",
        conjecture_coefficients: (c1.to_string(), c2.to_string()),
        conjecture_source: "SL(2,R) associated-variety table: c1 = 1, c2 = -1",
        ps_index: ps_index_constants()?,
        ps_source: "indecomposable P: I(P) = -C_1, I(V_0) = -C_1, I(V_-2) = -C_-1",
    })
}

/// Check `s·X` on index families against column `j` of the action matrix.
pub fn sl2_action_consistent() -> bool {
    let s = WeylElement::transposition(2, 0, 1);
    let base = sl2_weight(1);
    Sl2Module::ALL.iter().enumerate().all(|(j, m)| {
        let lhs = act_on_family(&s, &m.family());
        let rhs = Sl2Module::ALL
            .iter()
            .enumerate()
            .fold(IndexFamily::zero(base.clone()), |acc, (i, x)| {
                acc.add(&x.family().scale(SL2_S_ACTION[i][j]))
            });
        lhs == rhs
    })
}

pub fn su21_datum() -> Result<RootDatum> {
    RootDatum::new(GroupId::Su { p: 2, q: 1 })
}

/// Chamber representatives `w₀ = e`, `w₁ = (2 3)`, `w₂ : ρ_g ↦ (0, −1, 1)`.
pub fn su21_chamber_elements() -> [WeylElement; 3] {
    [
        WeylElement::identity(3),
        WeylElement::transposition(3, 1, 2),
        WeylElement::decode(&[3, 1, 2]).expect("permutation"),
    ]
}

/// Discrete-series family for chamber `j`: `ε(w_j ρ_g)·Ẽ_{w_j λ}`.
pub fn su21_ds_family(j: usize, d: &RootDatum) -> Result<IndexFamily> {
    let w = su21_chamber_elements()[j].clone();
    let eps = ds_sign(&w.apply(&d.rho_g), d)?;
    Ok(IndexFamily::new(d.rho_g.clone(), [(w, eps)]))
}

/// Gelfand-Kirillov dimension of the `SU(n,1)` discrete series in chamber `i`.
pub fn su_n1_ds_gk_dim(n: usize, i: usize) -> usize {
    if i == 0 || i == n {
        n
    } else {
        2 * n - 1
    }
}

/// Dimension of the `K`-module with highest weight `mu`, by Freudenthal.
pub fn k_module_dim(mu: &Weight, d: &RootDatum) -> u64 {
    let roots: Vec<Weight> = d.compact_roots().cloned().collect();
    freudenthal(mu, &roots, &d.rho_k).values().sum()
}

/// Lowest `K`-type `λ + ρ_n(λ) − ρ_k` of the discrete series with parameter `λ`.
pub fn lowest_k_type(lambda: &Weight, d: &RootDatum) -> Weight {
    let rho_n = d
        .noncompact_roots()
        .fold(Weight::zero(d.rank), |acc, b| {
            let half = b.scale(&qr(1, 2));
            if lambda.dot(b) > Q::from_integer(0.into()) {
                &acc + &half
            } else {
                &acc - &half
            }
        });
    &(lambda + &rho_n) - &d.rho_k
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Su1nCase {
    pub n: usize,
    pub holomorphic: bool,
    pub lambda: Weight,
    pub multiplicity: u64,
    pub q_value: String,
    pub sign: i64,
}

/// Holomorphic and antiholomorphic discrete series of `SU(1,n)` at a few parameters.
///
/// `multiplicity` is the dimension of the lowest `K`-type; `sign` is `m / Q`.
pub fn su1n_cases(n: usize) -> Result<Vec<Su1nCase>> {
    let d = RootDatum::new(GroupId::Su { p: 1, q: n })?;
    let dk = crate::weyl_action::weyl_dim_poly(&d);
    let mut out = Vec::new();
    for shift in 0..3i64 {
        for holomorphic in [true, false] {
            let mut xs: Vec<i64> = (0..n as i64).map(|k| 3 * (n as i64 - k) + shift * (k % 2)).collect();
            let first = if holomorphic { xs[0] + 1 + shift } else { xs[n - 1] - 1 - shift };
            xs.insert(0, first);
            let lambda = Weight::from_ints(&xs);
            let eps = ds_sign(&lambda, &d)?;
            let qv = dk.eval(&lambda.0)? * q(eps);
            let mult = k_module_dim(&lowest_k_type(&lambda, &d), &d);
            let sign = if qv == q(mult as i64) { 1 } else if qv == -q(mult as i64) { -1 } else { 0 };
            out.push(Su1nCase {
                n,
                holomorphic,
                lambda,
                multiplicity: mult,
                q_value: qv.to_string(),
                sign,
            });
        }
    }
    Ok(out)
}

/// Index polynomial of the `SU(1,n)` discrete series in the given chamber sign.
pub fn su1n_index_poly(n: usize, holomorphic: bool) -> Result<MultiPoly> {
    let d = RootDatum::new(GroupId::Su { p: 1, q: n })?;
    let cases = su1n_cases(n)?;
    let lam = &cases.iter().find(|c| c.holomorphic == holomorphic).expect("case").lambda;
    let fam = IndexFamily::new(lam.clone(), [(WeylElement::identity(n + 1), ds_sign(lam, &d)?)]);
    Ok(index_polynomial(&fam, &d))
}

/// Elements `w` with `wρ_g` `K`-dominant, ordered by `wρ_g` descending.
///
/// For `SU(n,1)` position `i` in this list is the chamber `D_i`.
pub fn chamber_elements(d: &RootDatum) -> Result<Vec<WeylElement>> {
    let mut out: Vec<(Weight, WeylElement)> = d
        .weyl(Which::G)?
        .iter()
        .map(|w| (w.apply(&d.rho_g), w.clone()))
        .filter(|(img, _)| d.is_k_dominant_regular(img))
        .collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out.into_iter().map(|(_, w)| w).collect())
}

/// One discrete-series family per chamber: `ε(wρ_g)` at `w`.
pub fn ds_families(d: &RootDatum) -> Result<Vec<IndexFamily>> {
    chamber_elements(d)?
        .into_iter()
        .map(|w| {
            let eps = ds_sign(&w.apply(&d.rho_g), d)?;
            Ok(IndexFamily::new(d.rho_g.clone(), [(w, eps)]))
        })
        .collect()
}

/// Coherent family of the finite-dimensional representations: `Σ sgn(w)` over chambers.
pub fn finite_dim_family(d: &RootDatum) -> Result<IndexFamily> {
    let mut coeffs = Vec::new();
    for w in d.weyl(Which::G)? {
        if d.is_k_dominant_regular(&w.apply(&d.rho_g)) {
            coeffs.push((w.clone(), w.sgn()));
        }
    }
    Ok(IndexFamily::new(d.rho_g.clone(), coeffs))
}

/// A fixture family with its Gelfand-Kirillov dimension where known.
#[derive(Debug, Clone)]
pub struct LabeledFamily {
    pub label: String,
    pub datum: RootDatum,
    pub family: IndexFamily,
    pub gk_dim: Option<usize>,
}

/// SL(2,R), SU(2,1), SU(n,1) for `n ≤ 4`, Sp(4,R), SO_e(2,3), SO_e(4,1) and SU(2,2).
pub fn labeled_families() -> Result<Vec<LabeledFamily>> {
    let mut out = Vec::new();
    let sl2 = sl2_datum()?;
    for m in Sl2Module::ALL {
        out.push(LabeledFamily {
            label: format!("SL(2,R) {}", m.name()),
            datum: sl2.clone(),
            family: m.family(),
            gk_dim: Some(m.gk_dim()),
        });
    }
    for n in 2..=4 {
        let d = crate::su_n1::datum(n)?;
        for i in 0..=n {
            out.push(LabeledFamily {
                label: format!("SU({n},1) chamber {i}"),
                family: crate::su_n1::ds_family(n, i, &d)?,
                datum: d.clone(),
                gk_dim: Some(su_n1_ds_gk_dim(n, i)),
            });
        }
    }
    for g in [
        GroupId::SpReal { n: 2 },
        GroupId::SoOdd { p: 1, q: 1 },
        GroupId::SoOdd { p: 2, q: 0 },
        GroupId::Su { p: 2, q: 2 },
    ] {
        let d = RootDatum::new(g)?;
        for (k, fam) in ds_families(&d)?.into_iter().enumerate() {
            out.push(LabeledFamily {
                label: format!("{g} discrete series {k}"),
                datum: d.clone(),
                family: fam,
                gk_dim: None,
            });
        }
        out.push(LabeledFamily {
            label: format!("{g} finite-dimensional"),
            family: finite_dim_family(&d)?,
            datum: d,
            gk_dim: Some(0),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2() {
        let f = sl2_fixture().unwrap();
        let qs: Vec<&str> = Sl2Module::ALL.iter().map(|m| f.q_values[m].as_str()).collect();
        assert_eq!(qs, vec!["0", "1", "-1", "0"]);
        assert_eq!((f.trivial, f.sign), (3, 1));
        assert_eq!(f.conjecture_coefficients, ("1".into(), "-1".into()));
        assert!(sl2_action_consistent());
    }

    #[test]
    fn verma_indices() {
        let c = ps_index_constants().unwrap();
        assert_eq!(verma_euler_characteristic(0, 6).unwrap(), c["V0"]);
        assert_eq!(verma_euler_characteristic(-2, 6).unwrap(), c["V-2"]);
        let p = verma_euler_characteristic(0, 6)
            .unwrap()
            .add(&verma_euler_characteristic(-2, 6).unwrap());
        assert_ne!(p, c["P"]);
    }

    #[test]
    fn su21_chambers() {
        let d = su21_datum().unwrap();
        let imgs: Vec<Weight> = su21_chamber_elements().iter().map(|w| w.apply(&d.rho_g)).collect();
        assert_eq!(imgs[2], Weight::from_ints(&[0, -1, 1]));
        assert_eq!(imgs[1], Weight::from_ints(&[1, -1, 0]));
        let signs: Vec<i64> = (0..3)
            .map(|j| su21_ds_family(j, &d).unwrap().coeffs().next().unwrap().1)
            .collect();
        assert_eq!(signs, vec![1, -1, 1]);
    }

    #[test]
    fn chamber_order_matches_su_n1() {
        for n in 2..=4 {
            let d = crate::su_n1::datum(n).unwrap();
            for (i, w) in chamber_elements(&d).unwrap().iter().enumerate() {
                assert_eq!(crate::su_n1::chamber_of(&w.apply(&d.rho_g), n).unwrap().i, i);
            }
        }
    }

    #[test]
    fn chamber_counts() {
        for (g, k) in [(GroupId::SpReal { n: 2 }, 4), (GroupId::Su { p: 2, q: 1 }, 3), (GroupId::SoOdd { p: 1, q: 1 }, 4)] {
            let d = RootDatum::new(g).unwrap();
            assert_eq!(ds_families(&d).unwrap().len(), k, "{g}");
            assert!(index_polynomial(&finite_dim_family(&d).unwrap(), &d).is_zero());
        }
    }

    #[test]
    fn su1n_multiplicities() {
        for n in 2..=4 {
            for c in su1n_cases(n).unwrap() {
                let expected = if c.holomorphic { 1 } else if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(c.sign, expected, "{c:?}");
            }
        }
    }
}
