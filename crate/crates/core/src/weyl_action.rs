//! Weyl group action on polynomials and orbit spans.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{RootDatum, WeylElement};
use crate::linalg::rref;
use crate::poly::{linear_form_product, LinearForm, Monomial, MultiPoly};
use crate::rational::Q;

pub const MAX_SPAN_COLUMNS: usize = 20_000;

/// `(w·P)(λ) = P(w⁻¹λ)`.
pub fn act(w: &WeylElement, p: &MultiPoly) -> MultiPoly {
    assert_eq!(w.rank(), p.vars(), "arity must equal rank");
    p.permute_vars(w.perm(), w.signs())
}

/// Linearly independent polynomials in reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySpan {
    pub basis: Vec<MultiPoly>,
    pub dim: usize,
    columns: Vec<Monomial>,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl PolySpan {
    /// Echelonized span of arbitrary polynomials of one arity.
    pub fn of(polys: &[MultiPoly]) -> Result<Self> {
        let vars = polys.first().map_or(0, MultiPoly::vars);
        let cols: BTreeSet<Monomial> = polys
            .iter()
            .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
            .collect();
        if cols.len() > MAX_SPAN_COLUMNS {
            return Err(Error::CapExceeded(format!(
                "{} monomial columns exceed {}",
                cols.len(),
                MAX_SPAN_COLUMNS
            )));
        }
        let columns: Vec<Monomial> = cols.into_iter().rev().collect();
        let mut rows: Vec<Vec<Q>> = polys
            .iter()
            .map(|p| columns.iter().map(|m| p.coeff(m)).collect())
            .collect();
        let pivots = rref(&mut rows);
        let basis = rows
            .iter()
            .map(|row| {
                MultiPoly::from_terms(
                    vars,
                    columns
                        .iter()
                        .zip(row)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(m, c)| (m.0.clone(), c.clone())),
                )
                .expect("uniform arity")
            })
            .collect::<Vec<_>>();
        Ok(PolySpan {
            dim: basis.len(),
            basis,
            columns,
            rows,
            pivots,
        })
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        if p.terms().any(|(m, _)| !self.columns.contains(m)) {
            return false;
        }
        let mut v: Vec<Q> = self.columns.iter().map(|m| p.coeff(m)).collect();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if !v[c].is_zero() {
                let f = v[c].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Span of `{w·P : w ∈ W}`.
pub fn orbit_span(p: &MultiPoly, w: &[WeylElement]) -> Result<PolySpan> {
    if p.is_zero() {
        return PolySpan::of(&[]);
    }
    let estimate = p.len().saturating_mul(w.len().max(1));
    let translates: Vec<MultiPoly> = w.iter().map(|x| act(x, p)).collect();
    let span = PolySpan::of(&translates);
    if let Err(Error::CapExceeded(m)) = span {
        return Err(Error::CapExceeded(format!("{m} (≈{estimate} translate terms)")));
    }
    span
}

/// `D_k(λ) = ∏_{α∈R_k⁺} (λ,α)/(ρ_k,α)`.
pub fn weyl_dim_poly(datum: &RootDatum) -> MultiPoly {
    let forms: Vec<LinearForm> = datum
        .compact_roots()
        .map(|a| LinearForm::from_weight(a).expect("roots are nonzero"))
        .collect();
    let norm: Q = datum
        .compact_roots()
        .map(|a| datum.rho_k.dot(a))
        .product();
    linear_form_product(datum.rank, &forms).scale(&(Q::from_integer(1.into()) / norm))
}
