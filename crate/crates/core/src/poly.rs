//! Exact multivariate polynomials over ℚ.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie::{RootDatum, RootType, Weight};
use crate::rational::{format_q, parse_q, q, Q};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Q) -> Self {
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial::one(vars), c);
        p
    }

    pub fn one(vars: usize) -> Self {
        MultiPoly::constant(vars, Q::one())
    }

    /// The variable `X_{i+1}`.
    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial(e), Q::one());
        p
    }

    pub fn from_terms<I>(vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Q)>,
    {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            if e.len() != vars {
                return Err(Error::DimensionMismatch {
                    expected: vars,
                    got: e.len(),
                });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) {
        assert_eq!(self.vars, other.vars, "polynomial arity mismatch");
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.check_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.check_vars(other);
        let mut out = MultiPoly::zero(self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.vars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, pt: &[Q]) -> Result<Q> {
        if pt.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                got: pt.len(),
            });
        }
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in pt.iter().zip(&m.0) {
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// `∂/∂X_{i+1}`.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                out.add_term(m2, c * q(e as i64));
            }
        }
        out
    }

    /// Apply `op(∂)` to `self`.
    pub fn apply_operator(&self, op: &MultiPoly) -> MultiPoly {
        self.check_vars(op);
        let mut out = MultiPoly::zero(self.vars);
        for (m, c) in &op.terms {
            let mut d = self.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    d = d.derivative(i);
                }
                if d.is_zero() {
                    break;
                }
            }
            out = out.add(&d.scale(c));
        }
        out
    }

    /// Substitute `X_i ↦ images[i]`; result arity is that of the images.
    pub fn substitute(&self, images: &[MultiPoly], out_vars: usize) -> MultiPoly {
        assert_eq!(images.len(), self.vars);
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::one(out_vars), p.clone()])
            .collect();
        let mut out = MultiPoly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(out_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    term = term.mul(&powers[i][e]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Remap monomials by a signed permutation of variables:
    /// `X_i ↦ signs[i]·X_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize], signs: &[i8]) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.vars];
            let mut neg = false;
            for (i, &k) in m.0.iter().enumerate() {
                e[perm[i]] = k;
                if signs[i] < 0 && k % 2 == 1 {
                    neg = !neg;
                }
            }
            out.add_term(Monomial(e), if neg { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Leading (largest graded-lex) term.
    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        MultiPoly::deserialize(v).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// `∏_{i<j} (X_i − X_j)`.
pub fn vandermonde(n: usize) -> MultiPoly {
    let forms: Vec<LinearForm> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut c = vec![Q::zero(); n];
            c[i] = Q::one();
            c[j] = -Q::one();
            LinearForm::new(c).expect("nonzero")
        })
        .collect();
    linear_form_product(n, &forms)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: Vec<Q>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroForm);
        }
        Ok(LinearForm { coeffs })
    }

    pub fn from_ints(xs: &[i64]) -> Result<Self> {
        LinearForm::new(xs.iter().map(|&x| q(x)).collect())
    }

    pub fn from_weight(w: &Weight) -> Result<Self> {
        LinearForm::new(w.0.clone())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn vars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn to_poly(&self) -> MultiPoly {
        let n = self.vars();
        let mut p = MultiPoly::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    pub fn eval(&self, pt: &[Q]) -> Q {
        self.coeffs.iter().zip(pt).map(|(a, b)| a * b).sum()
    }

    /// Index of the variable eliminated by restriction: the last nonzero one.
    pub fn pivot(&self) -> usize {
        (0..self.vars())
            .rev()
            .find(|&i| !self.coeffs[i].is_zero())
            .expect("nonzero form")
    }

    /// Scale so coefficients are coprime integers with positive leading entry.
    pub fn primitive(&self) -> LinearForm {
        use num_integer::Integer;
        let mut den = num_bigint::BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<num_bigint::BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = num_bigint::BigInt::zero();
        for x in &ints {
            g = g.gcd(x);
        }
        let lead_neg = ints.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative());
        if lead_neg {
            g = -g;
        }
        LinearForm {
            coeffs: ints.into_iter().map(|x| Q::from_integer(x / &g)).collect(),
        }
    }

    /// True when `other` is a nonzero scalar multiple of `self`.
    pub fn proportional(&self, other: &LinearForm) -> bool {
        self.primitive() == other.primitive()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

pub fn poly_eval(p: &MultiPoly, pt: &[Q]) -> Result<Q> {
    p.eval(pt)
}

/// Expanded product; the empty product is `1` in `vars` variables.
pub fn linear_form_product(vars: usize, forms: &[LinearForm]) -> MultiPoly {
    forms
        .iter()
        .fold(MultiPoly::one(vars), |acc, l| acc.mul(&l.to_poly()))
}

fn check_form(p: &MultiPoly, l: &LinearForm) -> Result<()> {
    if l.vars() != p.vars() {
        return Err(Error::DimensionMismatch {
            expected: p.vars(),
            got: l.vars(),
        });
    }
    Ok(())
}

/// Eliminate the pivot variable of `l` by solving `l = 0`.
pub fn restrict_to_hyperplane(p: &MultiPoly, l: &LinearForm) -> Result<MultiPoly> {
    check_form(p, l)?;
    let n = p.vars();
    let j = l.pivot();
    let cj = &l.coeffs[j];
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let mut img = MultiPoly::zero(n - 1);
        if i == j {
            for (k, c) in l.coeffs.iter().enumerate() {
                if k != j && !c.is_zero() {
                    let kk = if k < j { k } else { k - 1 };
                    img = img.add(&MultiPoly::var(n - 1, kk).scale(&(-c / cj)));
                }
            }
        } else {
            let ii = if i < j { i } else { i - 1 };
            img = MultiPoly::var(n - 1, ii);
        }
        images.push(img);
    }
    Ok(p.substitute(&images, n - 1))
}

pub fn divides_linear_form(p: &MultiPoly, l: &LinearForm) -> Result<bool> {
    Ok(restrict_to_hyperplane(p, l)?.is_zero())
}

/// Exact quotient `p / l`, or `None` if `l` does not divide `p`.
pub fn div_linear_form(p: &MultiPoly, l: &LinearForm) -> Result<Option<MultiPoly>> {
    check_form(p, l)?;
    let n = p.vars();
    let j = l.pivot();
    let cj = l.coeffs[j].clone();
    let lp = l.to_poly();
    let mut rem = p.clone();
    let mut quot = MultiPoly::zero(n);
    loop {
        let top = rem.terms.keys().map(|m| m.0[j]).max().unwrap_or(0);
        if top == 0 {
            break;
        }
        let mut t = MultiPoly::zero(n);
        for (m, c) in &rem.terms {
            if m.0[j] == top {
                let mut m2 = m.clone();
                m2.0[j] -= 1;
                t.add_term(m2, c / &cj);
            }
        }
        rem = rem.sub(&t.mul(&lp));
        quot = quot.add(&t);
    }
    Ok(if rem.is_zero() { Some(quot) } else { None })
}

/// Generators of the `W`-invariant constant-coefficient operators without constant term.
pub fn invariant_operators(t: RootType, r: usize) -> Vec<MultiPoly> {
    let power_sum = |k: u32| -> MultiPoly {
        let mut p = MultiPoly::zero(r);
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = k;
            p.add_term(Monomial(e), Q::one());
        }
        p
    };
    match t {
        RootType::A => (1..=r as u32).map(power_sum).collect(),
        RootType::B | RootType::C => (1..=r as u32).map(|k| power_sum(2 * k)).collect(),
        RootType::D => {
            let mut ops: Vec<MultiPoly> = (1..r as u32).map(|k| power_sum(2 * k)).collect();
            let mut prod = MultiPoly::zero(r);
            prod.add_term(Monomial(vec![1; r]), Q::one());
            ops.push(prod);
            ops
        }
    }
}

/// Annihilated by every invariant operator of the datum's Weyl group.
pub fn is_harmonic(p: &MultiPoly, datum: &RootDatum) -> bool {
    if p.vars() != datum.rank {
        return false;
    }
    invariant_operators(datum.root_type, datum.rank)
        .iter()
        .all(|op| p.apply_operator(op).is_zero())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("X{}", i + 1)
                    } else {
                        format!("X{}^{}", i + 1, e)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", format_q(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_q(&a), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermRepr {
                    exp: m.0.clone(),
                    coeff: format_q(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = PolyRepr::deserialize(d)?;
        let terms = r
            .terms
            .into_iter()
            .map(|t| parse_q(&t.coeff).map(|c| (t.exp, c)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        MultiPoly::from_terms(r.vars, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::GroupId;
    use crate::rational::qr;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    fn pt(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&v| q(v)).collect()
    }

    #[test]
    fn eval_examples() {
        let p = x(2, 0).sub(&x(2, 1));
        assert_eq!(p.eval(&pt(&[3, 1])).unwrap(), q(2));
        assert_eq!(vandermonde(3).eval(&pt(&[2, 1, 0])).unwrap(), q(2));
        assert_eq!(MultiPoly::zero(4).eval(&pt(&[1, 2, 3, 4])).unwrap(), q(0));
        assert!(matches!(p.eval(&pt(&[1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn restriction_examples() {
        let l = LinearForm::from_ints(&[1, -1]).unwrap();
        let p = x(2, 0).sub(&x(2, 1));
        assert!(restrict_to_hyperplane(&p, &l).unwrap().is_zero());
        let s = x(2, 0).add(&x(2, 1));
        assert_eq!(restrict_to_hyperplane(&s, &l).unwrap(), x(1, 0).scale(&q(2)));
        assert!(matches!(LinearForm::from_ints(&[0, 0]), Err(Error::ZeroForm)));
    }

    #[test]
    fn divisibility() {
        let d = x(2, 0).pow(2).sub(&x(2, 1).pow(2));
        let l = LinearForm::from_ints(&[1, 1]).unwrap();
        assert!(divides_linear_form(&d, &l).unwrap());
        assert_eq!(div_linear_form(&d, &l).unwrap().unwrap(), x(2, 0).sub(&x(2, 1)));
        let m = LinearForm::from_ints(&[1, 2]).unwrap();
        assert!(!divides_linear_form(&d, &m).unwrap());
        assert!(div_linear_form(&d, &m).unwrap().is_none());
    }

    #[test]
    fn harmonic_examples() {
        let a2 = RootDatum::new(GroupId::Su { p: 2, q: 1 }).unwrap();
        let p = x(3, 0).sub(&x(3, 1));
        assert!(is_harmonic(&p, &a2));
        assert!(!is_harmonic(&p.pow(2), &a2));
    }

    #[test]
    fn json_order() {
        let p = x(2, 0).sub(&x(2, 1));
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(
            j,
            r#"{"vars":2,"terms":[{"exp":[1,0],"coeff":"1"},{"exp":[0,1],"coeff":"-1"}]}"#
        );
        let back: MultiPoly = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
        let h = MultiPoly::constant(1, qr(-3, 6));
        assert!(serde_json::to_string(&h).unwrap().contains("\"-1/2\""));
    }

    #[test]
    fn display() {
        let p = x(2, 0).pow(2).sub(&x(2, 1).scale(&q(3))).add(&MultiPoly::one(2));
        assert_eq!(p.to_string(), "X1^2 - 3*X2 + 1");
    }

    #[test]
    fn primitive_forms() {
        let l = LinearForm::new(vec![qr(-1, 2), qr(1, 2)]).unwrap();
        assert_eq!(l.primitive(), LinearForm::from_ints(&[1, -1]).unwrap());
        assert!(l.proportional(&LinearForm::from_ints(&[2, -2]).unwrap()));
    }
}
