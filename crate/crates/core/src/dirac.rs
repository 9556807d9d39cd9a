//! Spin module, Dirac index of discrete series and index families.

use std::collections::{BTreeMap, HashMap};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kvirt::{tensor_virtual, tilde_e, weight_multiset, VirtualKModule, WeightMultiset};
use crate::lie::{k_dominant, RootDatum, Weight, WeylElement, Which};
use crate::poly::MultiPoly;
use crate::weyl_action::{act, weyl_dim_poly};

pub const MAX_SPIN_ROOTS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinWeights {
    pub plus: WeightMultiset,
    pub minus: WeightMultiset,
}

/// Weights `−ρ_n + Σ_A β` over subsets `A` of noncompact positive roots.
///
/// `S⁺` takes the subsets with `|A| ≡ r_g − r_k (mod 2)`, so that
/// `ch(S⁺ − S⁻) = d_g / d_k`.
pub fn spin_weights(datum: &RootDatum) -> Result<SpinWeights> {
    let nc: Vec<&Weight> = datum.noncompact_roots().collect();
    if nc.len() > MAX_SPIN_ROOTS {
        return Err(Error::CapExceeded(format!(
            "{} noncompact roots exceed the spin cap {}",
            nc.len(),
            MAX_SPIN_ROOTS
        )));
    }
    let shift = -&datum.rho_n();
    let parity = nc.len() % 2;
    let mut plus = WeightMultiset::new();
    let mut minus = WeightMultiset::new();
    for mask in 0u32..(1 << nc.len()) {
        let w = nc
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(shift.clone(), |acc, (_, b)| &acc + b);
        let side = if mask.count_ones() as usize % 2 == parity {
            &mut plus
        } else {
            &mut minus
        };
        *side.entry(w).or_insert(0) += 1;
    }
    Ok(SpinWeights { plus, minus })
}

/// `(−1)^{#{β noncompact positive : (λ,β) < 0}}`.
pub fn ds_sign(lambda: &Weight, datum: &RootDatum) -> Result<i64> {
    lambda.check_rank(datum.rank)?;
    if !datum.is_g_regular(lambda) {
        return Err(Error::SingularParameter(lambda.to_string()));
    }
    let neg = datum
        .noncompact_roots()
        .filter(|b| lambda.dot(b).is_negative())
        .count();
    Ok(if neg % 2 == 0 { 1 } else { -1 })
}

/// `I(X) = ε(λ)·Ẽ_λ` for the discrete series with Harish-Chandra parameter `λ`.
pub fn index_discrete_series(lambda: &Weight, datum: &RootDatum) -> Result<VirtualKModule> {
    let eps = ds_sign(lambda, datum)?;
    if !datum.in_shifted_lattice(lambda) {
        return Err(Error::OffLattice(lambda.to_string()));
    }
    Ok(tilde_e(lambda, datum).scale(eps))
}

/// `λ ↦ Σ_w a_w Ẽ_{wλ}` on the coset `base + Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexFamily {
    pub base: Weight,
    coeffs: BTreeMap<WeylElement, i64>,
}

impl IndexFamily {
    pub fn new(base: Weight, coeffs: impl IntoIterator<Item = (WeylElement, i64)>) -> Self {
        let mut fam = IndexFamily {
            base,
            coeffs: BTreeMap::new(),
        };
        for (w, a) in coeffs {
            fam.add_coeff(w, a);
        }
        fam
    }

    pub fn zero(base: Weight) -> Self {
        IndexFamily::new(base, [])
    }

    fn add_coeff(&mut self, w: WeylElement, a: i64) {
        if a == 0 {
            return;
        }
        let e = self.coeffs.entry(w.clone()).or_insert(0);
        *e += a;
        if *e == 0 {
            self.coeffs.remove(&w);
        }
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&WeylElement, i64)> {
        self.coeffs.iter().map(|(w, &a)| (w, a))
    }

    pub fn coeff(&self, w: &WeylElement) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, a) in other.coeffs() {
            out.add_coeff(w.clone(), a);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        IndexFamily::new(self.base.clone(), self.coeffs().map(|(w, a)| (w.clone(), c * a)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// Same family with each coefficient moved to the representative `u`
    /// for which `u·base` is `R_k⁺`-dominant.
    pub fn canonical(&self, datum: &RootDatum) -> Result<Self> {
        let wg = datum.weyl(Which::G)?;
        let by_image: HashMap<Weight, &WeylElement> =
            wg.iter().map(|u| (u.apply(&self.base), u)).collect();
        let mut out = IndexFamily::zero(self.base.clone());
        for (w, a) in self.coeffs() {
            let Some((g, s)) = k_dominant(datum, &w.apply(&self.base)) else {
                continue;
            };
            let u = by_image.get(&g).expect("W_g acts simply transitively on regular orbits");
            out.add_coeff((*u).clone(), s * a);
        }
        Ok(out)
    }

    /// Equality up to the `W_k`-coset ambiguity in the `a_w`.
    pub fn coset_equal(&self, other: &Self, datum: &RootDatum) -> Result<bool> {
        if self.base != other.base {
            return Ok(false);
        }
        Ok(self.canonical(datum)? == other.canonical(datum)?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffRepr {
    w: Vec<i64>,
    a: i64,
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    base: Weight,
    coeffs: Vec<CoeffRepr>,
}

impl Serialize for IndexFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyRepr {
            base: self.base.clone(),
            coeffs: self
                .coeffs()
                .map(|(w, a)| CoeffRepr { w: w.encode(), a })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IndexFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = FamilyRepr::deserialize(d)?;
        let coeffs = r
            .coeffs
            .into_iter()
            .map(|c| WeylElement::decode(&c.w).map(|w| (w, c.a)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(IndexFamily::new(r.base, coeffs))
    }
}

/// `Σ_w a_w Ẽ_{wλ}`.
pub fn evaluate_index(fam: &IndexFamily, lambda: &Weight, datum: &RootDatum) -> Result<VirtualKModule> {
    lambda.check_rank(datum.rank)?;
    if !datum.lattice.contains(&(lambda - &fam.base)) {
        return Err(Error::OffLattice(format!("{lambda} is not in {} + Λ", fam.base)));
    }
    Ok(fam
        .coeffs()
        .fold(VirtualKModule::zero(), |acc, (w, a)| {
            acc.add(&tilde_e(&w.apply(lambda), datum).scale(a))
        }))
}

/// `Q(λ) = Σ_w a_w D_k(wλ)`.
pub fn index_polynomial(fam: &IndexFamily, datum: &RootDatum) -> MultiPoly {
    let dk = weyl_dim_poly(datum);
    fam.coeffs().fold(MultiPoly::zero(datum.rank), |acc, (w, a)| {
        acc.add(&act(&w.inverse(), &dk).scale(&crate::rational::q(a)))
    })
}

/// Check `I(X_λ) ⊗ F = Σ_{μ∈Δ(F)} I(X_{λ+μ})`.
pub fn verify_translation(
    fam: &IndexFamily,
    f_highest: &Weight,
    lambda: &Weight,
    datum: &RootDatum,
) -> Result<bool> {
    let delta = weight_multiset(f_highest, datum)?;
    let lhs = tensor_virtual(&evaluate_index(fam, lambda, datum)?, &delta, datum);
    let mut rhs = VirtualKModule::zero();
    for (mu, &m) in &delta {
        rhs = rhs.add(&evaluate_index(fam, &(lambda + mu), datum)?.scale(m as i64));
    }
    Ok(lhs == rhs)
}

/// `a'_u = a_{uw}`, so that `Q_{w·X}(λ) = Q_X(w⁻¹λ)`.
pub fn act_on_family(w: &WeylElement, fam: &IndexFamily) -> IndexFamily {
    let winv = w.inverse();
    IndexFamily::new(
        fam.base.clone(),
        fam.coeffs().map(|(v, a)| (v.compose(&winv), a)),
    )
}

/// `λ₀ − wλ₀ ∈ Q`: `w` lies in the integral Weyl group of `λ₀`.
pub fn in_integral_weyl_group(w: &WeylElement, base: &Weight, datum: &RootDatum) -> bool {
    datum.in_root_lattice(&(base - &w.apply(base)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::GroupId;
    use crate::rational::{q, qr};

    fn sl2() -> RootDatum {
        RootDatum::new(GroupId::Su { p: 1, q: 1 }).unwrap()
    }

    fn hc(n: i64) -> Weight {
        Weight(vec![qr(n, 2), qr(-n, 2)])
    }

    fn s() -> WeylElement {
        WeylElement::transposition(2, 0, 1)
    }

    fn e() -> WeylElement {
        WeylElement::identity(2)
    }

    #[test]
    fn spin_counts() {
        let sw = spin_weights(&sl2()).unwrap();
        assert_eq!(sw.plus.keys().cloned().collect::<Vec<_>>(), vec![hc(1)]);
        assert_eq!(sw.minus.keys().cloned().collect::<Vec<_>>(), vec![hc(-1)]);
        let su21 = RootDatum::new(GroupId::Su { p: 2, q: 1 }).unwrap();
        let sw = spin_weights(&su21).unwrap();
        assert_eq!(sw.plus.values().sum::<u64>() + sw.minus.values().sum::<u64>(), 4);
        let sp4 = RootDatum::new(GroupId::SpReal { n: 2 }).unwrap();
        let sw = spin_weights(&sp4).unwrap();
        assert_eq!(sw.plus.values().sum::<u64>(), 4);
        assert_eq!(sw.minus.values().sum::<u64>(), 4);
    }

    #[test]
    fn ds_index_sl2() {
        let d = sl2();
        assert_eq!(index_discrete_series(&hc(3), &d).unwrap().coeff(&hc(3)), 1);
        assert_eq!(index_discrete_series(&hc(-3), &d).unwrap().coeff(&hc(-3)), -1);
        assert!(matches!(
            index_discrete_series(&hc(0), &d),
            Err(Error::SingularParameter(_))
        ));
    }

    #[test]
    fn sl2_families() {
        let d = sl2();
        let dplus = IndexFamily::new(hc(1), [(e(), 1)]);
        let dminus = IndexFamily::new(hc(1), [(s(), -1)]);
        let f = IndexFamily::new(hc(1), [(e(), -1), (s(), 1)]);
        assert_eq!(evaluate_index(&dplus, &hc(5), &d).unwrap(), tilde_e(&hc(5), &d));
        assert_eq!(index_polynomial(&dplus, &d), MultiPoly::one(2));
        assert_eq!(index_polynomial(&dminus, &d), MultiPoly::one(2).neg());
        assert!(index_polynomial(&f, &d).is_zero());
        assert_eq!(act_on_family(&s(), &dplus), dplus.add(&f));
        assert_eq!(act_on_family(&s(), &dminus), dminus.add(&f));
        assert_eq!(act_on_family(&s(), &f), f.scale(-1));
        let twice = act_on_family(&s(), &act_on_family(&s().inverse(), &dplus));
        assert_eq!(twice, dplus);
        assert_eq!(act_on_family(&e(), &dplus), dplus);
    }

    #[test]
    fn translation_sl2() {
        let d = sl2();
        let dplus = IndexFamily::new(hc(1), [(e(), 1)]);
        assert!(verify_translation(&dplus, &Weight::from_ints(&[1, -1]), &hc(5), &d).unwrap());
        assert!(verify_translation(&dplus, &Weight::zero(2), &hc(5), &d).unwrap());
    }

    #[test]
    fn off_lattice() {
        let d = RootDatum::new(GroupId::SpReal { n: 2 }).unwrap();
        let fam = IndexFamily::new(d.rho_g.clone(), [(WeylElement::identity(2), 1)]);
        assert!(matches!(
            evaluate_index(&fam, &Weight(vec![qr(1, 2), q(3)]), &d),
            Err(Error::OffLattice(_))
        ));
    }

    #[test]
    fn canonical_coset() {
        let d = RootDatum::new(GroupId::Su { p: 2, q: 1 }).unwrap();
        let t = WeylElement::transposition(3, 0, 1);
        let fam = IndexFamily::new(d.rho_g.clone(), [(t, 1)]);
        let can = fam.canonical(&d).unwrap();
        assert_eq!(can, IndexFamily::new(d.rho_g.clone(), [(WeylElement::identity(3), -1)]));
        assert!(fam.coset_equal(&can, &d).unwrap());
        let lam = Weight::from_ints(&[4, 1, -3]);
        assert_eq!(evaluate_index(&fam, &lam, &d).unwrap(), evaluate_index(&can, &lam, &d).unwrap());
    }

    #[test]
    fn json_roundtrip() {
        let fam = IndexFamily::new(hc(1), [(e(), -1), (s(), 1)]);
        let j = serde_json::to_string(&fam).unwrap();
        assert_eq!(
            j,
            r#"{"base":["1/2","-1/2"],"coeffs":[{"w":[1,2],"a":-1},{"w":[2,1],"a":1}]}"#
        );
        let back: IndexFamily = serde_json::from_str(&j).unwrap();
        assert_eq!(back, fam);
    }
}
