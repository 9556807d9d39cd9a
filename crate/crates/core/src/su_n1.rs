//! Discrete series of `SU(n,1)`: chambers, the determinant character polynomial,
//! and its common divisor with the index polynomial.

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::dirac::{index_polynomial, IndexFamily};
use crate::error::{Error, Result};
use crate::lie::{GroupId, RootDatum, Weight, WeylElement};
use crate::poly::{div_linear_form, linear_form_product, LinearForm, Monomial, MultiPoly};
use crate::rational::binomial;

/// Chamber `D_i` inside the dominant `K`-chamber `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChamberIndex {
    pub n: usize,
    pub i: usize,
}

/// `i = #{j ≤ n : λ_j < λ_{n+1}}`, for `λ ∈ C`.
pub fn chamber_of(lambda: &Weight, n: usize) -> Result<ChamberIndex> {
    lambda.check_rank(n + 1)?;
    let x = &lambda.0;
    if x[..n].windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotInC(lambda.to_string()));
    }
    let i = x[..n].iter().filter(|v| **v < x[n]).count();
    Ok(ChamberIndex { n, i })
}

/// A regular integral point of `D_i`.
pub fn chamber_point(n: usize, i: usize) -> Weight {
    let mut v: Vec<i64> = Vec::with_capacity(n + 1);
    let top = n as i64;
    for k in 0..(n - i) {
        v.push(top - k as i64);
    }
    for k in 0..i {
        v.push(i as i64 - 1 - k as i64);
    }
    v.push(i as i64);
    Weight::from_ints(&v)
}

pub fn datum(n: usize) -> Result<RootDatum> {
    RootDatum::new(GroupId::Su { p: n, q: 1 })
}

/// Discrete-series family through `chamber_point(n, i)`, with its sign.
pub fn ds_family(n: usize, i: usize, d: &RootDatum) -> Result<IndexFamily> {
    check_range(n, i, 0, n)?;
    let base = chamber_point(n, i);
    let eps = crate::dirac::ds_sign(&base, d)?;
    Ok(IndexFamily::new(base, [(WeylElement::identity(n + 1), eps)]))
}

fn check_range(n: usize, i: usize, lo: usize, hi: usize) -> Result<()> {
    if n < 2 || i < lo || i > hi {
        return Err(Error::IndexOutOfRange(format!(
            "i = {i} outside [{lo}, {hi}] for n = {n}"
        )));
    }
    Ok(())
}

fn det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let vars = m[0][0].vars();
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    fn go(m: &[Vec<MultiPoly>], used: u32, vars: usize, memo: &mut HashMap<u32, MultiPoly>) -> MultiPoly {
        let n = m.len();
        let r = used.count_ones() as usize;
        if r == n {
            return MultiPoly::one(vars);
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut acc = MultiPoly::zero(vars);
        let mut pos = 0;
        for c in 0..n {
            if used >> c & 1 == 1 {
                continue;
            }
            if !m[r][c].is_zero() {
                let minor = go(m, used | 1 << c, vars, memo);
                let term = m[r][c].mul(&minor);
                acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            pos += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    go(m, 0, vars, &mut memo)
}

/// Global sign matching the displayed `n = 4, i = 2` normalization.
const SIGN_PIN: i64 = 1;

/// The `n × n` determinant in `λ_1..λ_n` with power rows `λ^{n−2}..λ` and two indicator rows.
pub fn char_poly_det(n: usize, i: usize) -> Result<MultiPoly> {
    check_range(n, i, 1, n.saturating_sub(1))?;
    let mut m: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
    for k in (1..=n - 2).rev() {
        m.push(
            (0..n)
                .map(|c| {
                    let mut e = vec![0; n];
                    e[c] = k as u32;
                    MultiPoly::from_terms(n, [(e, crate::rational::q(1))]).expect("arity")
                })
                .collect(),
        );
    }
    let split = n - i;
    m.push(
        (0..n)
            .map(|c| if c < split { MultiPoly::one(n) } else { MultiPoly::zero(n) })
            .collect(),
    );
    m.push(
        (0..n)
            .map(|c| if c >= split { MultiPoly::one(n) } else { MultiPoly::zero(n) })
            .collect(),
    );
    Ok(det(&m).scale(&crate::rational::q(SIGN_PIN)))
}

/// `λ_p − λ_q` in `vars` variables (0-based indices).
pub fn diff_form(vars: usize, p: usize, q: usize) -> LinearForm {
    let mut c = vec![0i64; vars];
    c[p] = 1;
    c[q] = -1;
    LinearForm::from_ints(&c).expect("p ≠ q")
}

fn root_forms(n: usize) -> Vec<LinearForm> {
    (0..n)
        .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
        .map(|(p, q)| diff_form(n, p, q))
        .collect()
}

/// Largest `k` with `ℓ^k | P`, and the cofactor.
pub fn multiplicity(p: &MultiPoly, l: &LinearForm) -> Result<(u32, MultiPoly)> {
    let mut k = 0;
    let mut cur = p.clone();
    if cur.is_zero() {
        return Ok((u32::MAX, cur));
    }
    while let Some(next) = div_linear_form(&cur, l)? {
        cur = next;
        k += 1;
    }
    Ok((k, cur))
}

/// Root forms `X_p − X_q` dividing `p`, with multiplicities, and the cofactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootFactorization {
    pub factors: Vec<(LinearForm, u32)>,
    pub cofactor: MultiPoly,
}

impl Serialize for RootFactorization {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Factor {
            form: String,
            multiplicity: u32,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            factors: Vec<Factor>,
            cofactor: &'a MultiPoly,
        }
        Repr {
            factors: self
                .factors
                .iter()
                .map(|(l, k)| Factor {
                    form: l.to_string(),
                    multiplicity: *k,
                })
                .collect(),
            cofactor: &self.cofactor,
        }
        .serialize(s)
    }
}

pub fn root_factors(p: &MultiPoly) -> Result<RootFactorization> {
    if p.is_zero() {
        return Err(Error::IllegalParams("zero polynomial has no factorization".into()));
    }
    let mut cur = p.clone();
    let mut factors = Vec::new();
    for l in root_forms(p.vars()) {
        let (k, rest) = multiplicity(&cur, &l)?;
        if k > 0 {
            factors.push((l, k));
            cur = rest;
        }
    }
    Ok(RootFactorization { factors, cofactor: cur })
}

/// Drop a trailing variable that does not occur.
fn drop_last(p: &MultiPoly) -> MultiPoly {
    let n = p.vars();
    MultiPoly::from_terms(
        n - 1,
        p.terms().map(|(m, c)| {
            assert_eq!(m.0[n - 1], 0, "last variable occurs");
            (m.0[..n - 1].to_vec(), c.clone())
        }),
    )
    .expect("arity")
}

/// `Q` for the chamber-`i` family, in `λ_1..λ_n`.
pub fn index_poly(n: usize, i: usize) -> Result<MultiPoly> {
    let d = datum(n)?;
    let fam = ds_family(n, i, &d)?;
    Ok(drop_last(&index_polynomial(&fam, &d)))
}

/// Product of root forms common to `P` and `Q`, by linear-factor extraction.
pub fn gcd_with_index(n: usize, i: usize) -> Result<MultiPoly> {
    check_range(n, i, 1, n - 1)?;
    let p = char_poly_det(n, i)?;
    let q = index_poly(n, i)?;
    let mut r = MultiPoly::one(n);
    for l in root_forms(n) {
        let k = multiplicity(&p, &l)?.0.min(multiplicity(&q, &l)?.0);
        r = r.mul(&l.to_poly().pow(k));
    }
    Ok(r)
}

/// `∏_{p<q≤n−i}(λ_p−λ_q) · ∏_{n−i<r<s≤n}(λ_r−λ_s)`.
pub fn gcd_closed_form(n: usize, i: usize) -> MultiPoly {
    let split = n - i;
    let forms: Vec<LinearForm> = (0..n)
        .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
        .filter(|&(p, q)| (q < split) || (p >= split))
        .map(|(p, q)| diff_form(n, p, q))
        .collect();
    linear_form_product(n, &forms)
}

/// Compact simple roots of `D_i`, in `n+1` coordinates.
pub fn tau_invariant(n: usize, i: usize) -> Result<Vec<Weight>> {
    check_range(n, i, 0, n)?;
    Ok((1..n)
        .filter(|&k| k != n - i)
        .map(|k| &Weight::unit(n + 1, k - 1, 1) - &Weight::unit(n + 1, k, 1))
        .collect())
}

/// Type-A roots that are sums of elements of `tau`.
pub fn roots_generated(tau: &[Weight]) -> Vec<Weight> {
    let mut out: Vec<Weight> = tau.to_vec();
    let mut grew = true;
    while grew {
        grew = false;
        let snapshot = out.clone();
        for a in &snapshot {
            for b in tau {
                let s = a + b;
                let one = crate::rational::q(1);
                let is_root = s.0.iter().filter(|x| **x == one).count() == 1
                    && s.0.iter().filter(|x| **x == -one.clone()).count() == 1
                    && s.0.iter().filter(|x| !x.is_zero()).count() == 2;
                if is_root && !out.contains(&s) {
                    out.push(s);
                    grew = true;
                }
            }
        }
    }
    out.sort();
    out
}

/// Product of the linear forms of `roots_generated(tau_invariant(n, i))` in `λ_1..λ_n`.
pub fn tau_product(n: usize, i: usize) -> Result<MultiPoly> {
    let forms: Vec<LinearForm> = roots_generated(&tau_invariant(n, i)?)
        .iter()
        .map(|a| LinearForm::new(a.0[..n].to_vec()).expect("compact root"))
        .collect();
    Ok(linear_form_product(n, &forms))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub n: usize,
    pub i: usize,
    pub gk_dim: usize,
    pub deg_p: u32,
    pub deg_q: u32,
    pub deg_r: u32,
    pub deg_p_over_r: u32,
    pub deg_q_over_r: u32,
    pub matches_formulas: bool,
}

fn exact_quotient(p: &MultiPoly, r: &MultiPoly, forms: &[LinearForm]) -> Result<MultiPoly> {
    let mut cur = p.clone();
    let mut rest = r.clone();
    for l in forms {
        while let Some(next_r) = div_linear_form(&rest, l)? {
            cur = div_linear_form(&cur, l)?.ok_or_else(|| Error::IllegalParams("R does not divide".into()))?;
            rest = next_r;
        }
    }
    Ok(cur.scale(&(crate::rational::q(1) / rest.coeff(&Monomial::one(rest.vars())))))
}

/// Degrees of `P`, `Q`, `R = gcd`, `P/R`, `Q/R`, computed from the polynomials.
pub fn degree_report(n: usize, i: usize) -> Result<DegreeReport> {
    if n < 4 {
        return Err(Error::IndexOutOfRange(format!("n = {n} below 4")));
    }
    check_range(n, i, 2, n - 2)?;
    let p = char_poly_det(n, i)?;
    let q = index_poly(n, i)?;
    let r = gcd_with_index(n, i)?;
    let forms = root_forms(n);
    let pr = exact_quotient(&p, &r, &forms)?;
    let qr = exact_quotient(&q, &r, &forms)?;
    let deg = |x: &MultiPoly| x.degree().unwrap_or(0);
    let rep = DegreeReport {
        n,
        i,
        gk_dim: 2 * n - 1,
        deg_p: deg(&p),
        deg_q: deg(&q),
        deg_r: deg(&r),
        deg_p_over_r: deg(&pr),
        deg_q_over_r: deg(&qr),
        matches_formulas: false,
    };
    let c2 = |k: usize| binomial(k, 2) as u32;
    let rg = c2(n + 1) as usize;
    let ok = rep.deg_p == c2(n - 1)
        && rep.deg_p as usize == rg - rep.gk_dim
        && rep.deg_q == c2(n)
        && rep.deg_r == c2(i) + c2(n - i)
        && rep.deg_p_over_r as usize == i * (n - i) - (n - 1)
        && rep.deg_q_over_r as usize == i * (n - i);
    Ok(DegreeReport {
        matches_formulas: ok,
        ..rep
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{divides_linear_form, restrict_to_hyperplane, vandermonde};
    use crate::rational::q;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn chambers() {
        assert_eq!(chamber_of(&Weight::from_ints(&[3, 1, 2]), 2).unwrap().i, 1);
        assert_eq!(chamber_of(&Weight::from_ints(&[3, 1, 0]), 2).unwrap().i, 0);
        assert_eq!(chamber_of(&Weight::from_ints(&[3, 1, 5]), 2).unwrap().i, 2);
        assert!(matches!(
            chamber_of(&Weight::from_ints(&[1, 3, 0]), 2),
            Err(Error::NotInC(_))
        ));
        for n in 2..6 {
            for i in 0..=n {
                assert_eq!(chamber_of(&chamber_point(n, i), n).unwrap().i, i);
            }
        }
    }

    #[test]
    fn det_4_2() {
        let n = 4;
        let l = |p, q| x(n, p).sub(&x(n, q));
        let expect = l(0, 1)
            .mul(&l(2, 3))
            .mul(&x(n, 0).add(&x(n, 1)).sub(&x(n, 2)).sub(&x(n, 3)))
            .neg();
        assert_eq!(char_poly_det(4, 2).unwrap(), expect);
    }

    #[test]
    fn det_i1_is_vandermonde() {
        let p = char_poly_det(4, 1).unwrap();
        let v = vandermonde(3);
        let v4 = MultiPoly::from_terms(
            4,
            v.terms().map(|(m, c)| {
                let mut e = m.0.clone();
                e.push(0);
                (e, c.clone())
            }),
        )
        .unwrap();
        assert!(p == v4 || p == v4.neg());
    }

    #[test]
    fn gcd_4_2() {
        let g = gcd_with_index(4, 2).unwrap();
        let expect = x(4, 0).sub(&x(4, 1)).mul(&x(4, 2).sub(&x(4, 3)));
        assert_eq!(g, expect);
        assert_eq!(tau_product(4, 2).unwrap(), expect);
    }

    #[test]
    fn tau_small() {
        let t = tau_invariant(4, 2).unwrap();
        assert_eq!(
            t,
            vec![Weight::from_ints(&[1, -1, 0, 0, 0]), Weight::from_ints(&[0, 0, 1, -1, 0])]
        );
        assert!(tau_invariant(2, 1).unwrap().is_empty());
        assert_eq!(tau_invariant(3, 0).unwrap().len(), 2);
    }

    #[test]
    fn non_divisibility_witness() {
        let p = char_poly_det(4, 2).unwrap();
        assert!(divides_linear_form(&p, &diff_form(4, 0, 1)).unwrap());
        let r = restrict_to_hyperplane(&p, &diff_form(4, 0, 2)).unwrap();
        let v = vandermonde(3);
        assert!(r == v || r == v.neg());
    }

    #[test]
    fn degrees() {
        let r = degree_report(4, 2).unwrap();
        assert_eq!((r.deg_p, r.deg_q, r.deg_r, r.deg_p_over_r, r.deg_q_over_r), (3, 6, 2, 1, 4));
        assert!(r.matches_formulas);
        let r = degree_report(5, 2).unwrap();
        assert_eq!((r.deg_p, r.deg_q, r.deg_r, r.deg_p_over_r, r.deg_q_over_r), (6, 10, 4, 2, 6));
        assert!(r.matches_formulas);
        assert!(degree_report(4, 1).is_err());
    }

    #[test]
    fn factorization_4_2() {
        let f = root_factors(&char_poly_det(4, 2).unwrap()).unwrap();
        assert_eq!(f.factors.iter().map(|(_, k)| k).sum::<u32>(), 2);
        assert_eq!(f.cofactor.degree(), Some(1));
        let j = serde_json::to_value(&f).unwrap();
        assert_eq!(j["factors"][0]["form"], "X1 - X2");
    }

    #[test]
    fn range_errors() {
        assert!(matches!(char_poly_det(4, 0), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(char_poly_det(4, 4), Err(Error::IndexOutOfRange(_))));
        assert_eq!(char_poly_det(2, 1).unwrap(), MultiPoly::constant(2, q(1)));
    }
}
