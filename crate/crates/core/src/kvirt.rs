//! Virtual `K̃`-modules in the `Ẽ_γ` basis.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{k_dominant, pairing, RootDatum, Weight, Which};
use crate::rational::{is_integer, q, to_i64, Q};
use crate::series::TruncatedSeries;
use crate::weyl_action::weyl_dim_poly;

/// Integer combination of `Ẽ_γ` with `γ` strictly `R_k⁺`-dominant.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VirtualKModule {
    terms: BTreeMap<Weight, i64>,
}

impl VirtualKModule {
    pub fn zero() -> Self {
        VirtualKModule::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(g, &c)| (g, c))
    }

    pub fn coeff(&self, gamma: &Weight) -> i64 {
        self.terms.get(gamma).copied().unwrap_or(0)
    }

    /// Add `c·[γ]` for an already normalized `γ`.
    fn push(&mut self, gamma: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(gamma.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&gamma);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.push(g.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = VirtualKModule::zero();
        for (g, x) in self.terms() {
            out.push(g.clone(), c * x);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// `Σ c·Ẽ_γ` with each `γ` normalized.
    pub fn from_parameters<'a>(
        datum: &RootDatum,
        items: impl IntoIterator<Item = (&'a Weight, i64)>,
    ) -> Self {
        let mut out = VirtualKModule::zero();
        for (g, c) in items {
            out = out.add(&tilde_e(g, datum).scale(c));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    gamma: Weight,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct ModuleRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for VirtualKModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ModuleRepr {
            terms: self
                .terms()
                .map(|(g, c)| TermRepr {
                    gamma: g.clone(),
                    coeff: c,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VirtualKModule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ModuleRepr::deserialize(d)?;
        let mut out = VirtualKModule::zero();
        for t in r.terms {
            out.push(t.gamma, t.coeff);
        }
        Ok(out)
    }
}

/// Weights of a finite-dimensional module with multiplicities.
pub type WeightMultiset = BTreeMap<Weight, u64>;

/// `Ẽ_γ`: zero off `Λ+ρ_g` or on a compact wall, else `sgn(x)·[xγ]`.
pub fn tilde_e(gamma: &Weight, datum: &RootDatum) -> VirtualKModule {
    let mut out = VirtualKModule::zero();
    if gamma.rank() != datum.rank || !datum.in_shifted_lattice(gamma) {
        return out;
    }
    if let Some((g, s)) = k_dominant(datum, gamma) {
        out.push(g, s);
    }
    out
}

/// `Σ c_γ · D_k(γ)`.
pub fn dim_virtual(v: &VirtualKModule, datum: &RootDatum) -> Q {
    let dk = weyl_dim_poly(datum);
    v.terms()
        .map(|(g, c)| dk.eval(&g.0).expect("rank matches") * q(c))
        .sum()
}

/// Freudenthal multiplicities of the irreducible module with the given highest weight.
pub fn weight_multiset(highest: &Weight, datum: &RootDatum) -> Result<WeightMultiset> {
    highest.check_rank(datum.rank)?;
    if !datum.is_dominant_integral(highest) {
        return Err(Error::NotDominantIntegral(highest.to_string()));
    }
    let roots: Vec<Weight> = datum.all_roots().cloned().collect();
    Ok(freudenthal(highest, &roots, &datum.rho_g))
}

/// Freudenthal's recursion for an arbitrary positive system.
pub(crate) fn freudenthal(highest: &Weight, pos_roots: &[Weight], rho: &Weight) -> WeightMultiset {
    // saturate: close under root strings
    let mut set: HashSet<Weight> = HashSet::new();
    let mut stack = vec![highest.clone()];
    set.insert(highest.clone());
    while let Some(mu) = stack.pop() {
        for a in pos_roots {
            let c = pairing(&mu, a).expect("rank");
            let k = to_i64(&c).expect("integral pairing");
            let (step, n) = if k > 0 { (-1, k) } else { (1, -k) };
            for j in 1..=n {
                let nu = &mu + &a.scale(&q(step * j));
                if set.insert(nu.clone()) {
                    stack.push(nu);
                }
            }
        }
    }
    let two_rho = rho.scale(&q(2));
    let mut order: Vec<Weight> = set.into_iter().collect();
    order.sort_by_cached_key(|mu| ((highest - mu).dot(&two_rho), mu.clone()));
    let lr = highest + rho;
    let top = lr.dot(&lr);
    let mut mult: HashMap<Weight, Q> = HashMap::new();
    for mu in &order {
        if mu == highest {
            mult.insert(mu.clone(), q(1));
            continue;
        }
        let mut sum = Q::zero();
        for a in pos_roots {
            let mut k = 1;
            loop {
                let nu = mu + &a.scale(&q(k));
                match mult.get(&nu) {
                    Some(m) => sum += m * nu.dot(a),
                    None => break,
                }
                k += 1;
            }
        }
        let mr = mu + rho;
        let denom = &top - mr.dot(&mr);
        let m = sum * q(2) / denom;
        debug_assert!(is_integer(&m) && !m.is_negative());
        mult.insert(mu.clone(), m);
    }
    mult.into_iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(w, m)| (w, to_i64(&m).expect("integral multiplicity") as u64))
        .collect()
}

/// `Σ_γ Σ_μ c_γ · m_μ · Ẽ_{γ+μ}`.
pub fn tensor_virtual(v: &VirtualKModule, delta: &WeightMultiset, datum: &RootDatum) -> VirtualKModule {
    let mut out = VirtualKModule::zero();
    for (g, c) in v.terms() {
        for (mu, &m) in delta {
            out = out.add(&tilde_e(&(g + mu), datum).scale(c * m as i64));
        }
    }
    out
}

/// Reject `y` on a root hyperplane.
pub(crate) fn check_direction(datum: &RootDatum, y: &Weight) -> Result<()> {
    y.check_rank(datum.rank)?;
    if let Some(a) = datum.all_roots().find(|a| a.dot(y).is_zero()) {
        return Err(Error::SingularDirection(format!("root {a} vanishes on {y}")));
    }
    Ok(())
}

/// `∏_{α} (e^{tα(y)/2} − e^{−tα(y)/2})` to the given order.
pub(crate) fn weyl_denominator<'a>(
    roots: impl Iterator<Item = &'a Weight>,
    y: &Weight,
    order: usize,
) -> TruncatedSeries {
    let half = crate::rational::qr(1, 2);
    roots.fold(TruncatedSeries::one(order), |acc, a| {
        let x = a.dot(y) * &half;
        let f = TruncatedSeries::exp_linear(&x, order).sub(&TruncatedSeries::exp_linear(&-x, order));
        acc.mul(&f)
    })
}

/// `Σ_γ c_γ Σ_{w∈W_k} sgn(w) e^{t·(wγ)(y)}` to the given order.
pub(crate) fn alternating_numerator(
    v: &VirtualKModule,
    datum: &RootDatum,
    y: &Weight,
    order: usize,
) -> Result<TruncatedSeries> {
    let wk = datum.weyl(Which::K)?;
    let mut acc = TruncatedSeries::zero(order);
    for (g, c) in v.terms() {
        for w in wk {
            let x = w.apply(g).dot(y);
            let term = TruncatedSeries::exp_linear(&x, order).scale(&q(c * w.sgn()));
            acc = acc.add(&term);
        }
    }
    Ok(acc)
}

/// Taylor series of `ch_k(V)(exp ty)` through `t^order`.
pub fn ch_series(v: &VirtualKModule, datum: &RootDatum, y: &Weight, order: usize) -> Result<TruncatedSeries> {
    check_direction(datum, y)?;
    let rk = datum.r_k();
    let num = alternating_numerator(v, datum, y, order + rk)?;
    let den = weyl_denominator(datum.compact_roots(), y, order + rk);
    let num = num
        .shift_down(rk)
        .expect("alternating sums vanish to order r_k");
    let den = den.shift_down(rk).expect("d_k vanishes to order r_k");
    Ok(num.div(&den).expect("regular direction").truncate(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::GroupId;
    use crate::rational::qr;

    fn su(p: usize, qq: usize) -> RootDatum {
        RootDatum::new(GroupId::Su { p, q: qq }).unwrap()
    }

    fn hc(n: i64) -> Weight {
        Weight(vec![qr(n, 2), qr(-n, 2)])
    }

    #[test]
    fn tilde_e_cases() {
        let d = su(2, 1);
        let g = Weight::from_ints(&[1, 0, -1]);
        assert_eq!(tilde_e(&g, &d).coeff(&g), 1);
        let s = Weight::from_ints(&[0, 1, -1]);
        assert_eq!(tilde_e(&s, &d).coeff(&g), -1);
        assert!(tilde_e(&Weight::from_ints(&[1, 1, -2]), &d).is_zero());
        let off = Weight(vec![qr(1, 2), q(0), q(-1)]);
        assert!(tilde_e(&off, &d).is_zero());
    }

    #[test]
    fn dims() {
        let d = su(1, 1);
        assert_eq!(dim_virtual(&tilde_e(&hc(7), &d), &d), q(1));
        assert_eq!(dim_virtual(&VirtualKModule::zero(), &d), q(0));
        let su21 = su(2, 1);
        let v = tilde_e(&Weight::from_ints(&[3, 0, -2]), &su21);
        assert_eq!(dim_virtual(&v, &su21), q(3));
    }

    #[test]
    fn multisets() {
        let d = su(1, 1);
        let adj = weight_multiset(&Weight::from_ints(&[1, -1]), &d).unwrap();
        assert_eq!(adj.len(), 3);
        assert!(adj.values().all(|&m| m == 1));
        let su21 = su(2, 1);
        let adj = weight_multiset(&Weight::from_ints(&[1, 0, -1]), &su21).unwrap();
        assert_eq!(adj.get(&Weight::zero(3)), Some(&2));
        assert_eq!(adj.values().sum::<u64>(), 8);
        let sp4 = RootDatum::new(GroupId::SpReal { n: 2 }).unwrap();
        let std = weight_multiset(&Weight::from_ints(&[1, 0]), &sp4).unwrap();
        let keys: Vec<_> = std.keys().cloned().collect();
        for w in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
            assert!(keys.contains(&Weight::from_ints(&w)));
        }
        assert_eq!(std.values().sum::<u64>(), 4);
        assert!(matches!(
            weight_multiset(&Weight::from_ints(&[0, 1]), &sp4),
            Err(Error::NotDominantIntegral(_))
        ));
    }

    #[test]
    fn tensor_sl2() {
        let d = su(1, 1);
        let adj = weight_multiset(&Weight::from_ints(&[1, -1]), &d).unwrap();
        let v = tensor_virtual(&tilde_e(&hc(5), &d), &adj, &d);
        let expect = tilde_e(&hc(3), &d).add(&tilde_e(&hc(5), &d)).add(&tilde_e(&hc(7), &d));
        assert_eq!(v, expect);
        let mut triv = WeightMultiset::new();
        triv.insert(Weight::zero(2), 1);
        assert_eq!(tensor_virtual(&tilde_e(&hc(5), &d), &triv, &d), tilde_e(&hc(5), &d));
    }

    #[test]
    fn tensor_drops_singular() {
        let d = su(2, 1);
        let gamma = Weight::from_ints(&[1, 0, -1]);
        let adj = weight_multiset(&Weight::from_ints(&[1, 0, -1]), &d).unwrap();
        let mu = Weight::from_ints(&[0, 1, -1]);
        assert!(adj.contains_key(&mu));
        assert!(tilde_e(&(&gamma + &mu), &d).is_zero());
        let direct: VirtualKModule = adj
            .iter()
            .filter(|(m, _)| **m != mu)
            .fold(VirtualKModule::zero(), |acc, (m, &k)| {
                acc.add(&tilde_e(&(&gamma + m), &d).scale(k as i64))
            });
        assert_eq!(tensor_virtual(&tilde_e(&gamma, &d), &adj, &d), direct);
    }

    #[test]
    fn series_constant_term() {
        let d = su(1, 1);
        let s = ch_series(&tilde_e(&hc(3), &d), &d, &Weight::from_ints(&[1, -1]), 4).unwrap();
        assert_eq!(s.coeff(0), q(1));
        assert_eq!(s.coeff(1), q(3));
        assert!(ch_series(&VirtualKModule::zero(), &d, &Weight::from_ints(&[1, -1]), 4)
            .unwrap()
            .is_zero());
        let su21 = su(2, 1);
        let v = tilde_e(&su21.rho_g.clone(), &su21);
        let s = ch_series(&v, &su21, &Weight::from_ints(&[1, 0, -1]), 3).unwrap();
        assert_eq!(s.coeff(0), dim_virtual(&v, &su21));
        assert!(matches!(
            ch_series(&v, &su21, &Weight::from_ints(&[1, 1, 0]), 3),
            Err(Error::SingularDirection(_))
        ));
    }

    #[test]
    fn json_shape() {
        let d = su(1, 1);
        let v = tilde_e(&hc(3), &d).sub(&tilde_e(&hc(-1), &d));
        let j = serde_json::to_string(&v).unwrap();
        assert_eq!(
            j,
            r#"{"terms":[{"gamma":["-1/2","1/2"],"coeff":-1},{"gamma":["3/2","-3/2"],"coeff":1}]}"#
        );
        let back: VirtualKModule = serde_json::from_str(&j).unwrap();
        assert_eq!(back, v);
    }
}
