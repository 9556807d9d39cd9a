//! Taylor data of global characters along a regular direction of the compact Cartan.

use serde::{Serialize, Serializer};

use crate::dirac::{evaluate_index, index_polynomial, spin_weights, IndexFamily};
use crate::error::{Error, Result};
use crate::kvirt::{alternating_numerator, check_direction, weyl_denominator, WeightMultiset};
use crate::lie::{root_product, RootDatum, Weight};
use crate::rational::{format_q, q, Q};
use crate::series::{LaurentSeries, TruncatedSeries};

fn exp_sum(ws: &WeightMultiset, y: &Weight, order: usize) -> TruncatedSeries {
    ws.iter().fold(TruncatedSeries::zero(order), |acc, (mu, &m)| {
        acc.add(&TruncatedSeries::exp_linear(&mu.dot(y), order).scale(&q(m as i64)))
    })
}

/// `ch_k(S⁺ − S⁻)(exp ty)` through `t^order`.
pub fn spin_character(datum: &RootDatum, y: &Weight, order: usize) -> Result<TruncatedSeries> {
    let sw = spin_weights(datum)?;
    Ok(exp_sum(&sw.plus, y, order).sub(&exp_sum(&sw.minus, y, order)))
}

/// `d_k · ch(S⁺ − S⁻) = d_g` as truncated series.
pub fn spin_ratio_holds(datum: &RootDatum, y: &Weight, order: usize) -> Result<bool> {
    check_direction(datum, y)?;
    let lhs = weyl_denominator(datum.compact_roots(), y, order).mul(&spin_character(datum, y, order)?);
    let rhs = weyl_denominator(datum.all_roots(), y, order);
    Ok(lhs == rhs)
}

/// `ch_k(I(X_λ)) / ch_k(S⁺ − S⁻)` along `exp ty`, from `t^{−pole}` through `t^{order − r_g}`.
pub fn character_series(
    fam: &IndexFamily,
    lambda: &Weight,
    y: &Weight,
    order: usize,
    datum: &RootDatum,
) -> Result<LaurentSeries> {
    check_direction(datum, y)?;
    let rg = datum.r_g();
    if order < rg {
        return Err(Error::IllegalParams(format!("order {order} below r_g = {rg}")));
    }
    let v = evaluate_index(fam, lambda, datum)?;
    let full = order + rg;
    let num = alternating_numerator(&v, datum, y, full)?;
    let den = weyl_denominator(datum.compact_roots(), y, full).mul(&spin_character(datum, y, full)?);
    let val = den.valuation().expect("regular direction gives a nonzero denominator");
    let den = den.shift_down(val).expect("leading zeros");
    let num = num.truncate(full - val);
    Ok(LaurentSeries {
        valuation: -(val as i64),
        series: num.div(&den).expect("nonzero constant term"),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitReport {
    pub d: i64,
    pub value: Q,
    pub expected: Q,
    pub matched: bool,
}

impl Serialize for LimitReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            d: i64,
            value: String,
            expected: String,
            #[serde(rename = "match")]
            matched: bool,
        }
        Repr {
            d: self.d,
            value: format_q(&self.value),
            expected: format_q(&self.expected),
            matched: self.matched,
        }
        .serialize(s)
    }
}

/// `(∏_{R_k⁺} α(y) / ∏_{R_g⁺} α(y)) · Q_X(λ)`.
pub fn predicted_limit(fam: &IndexFamily, lambda: &Weight, y: &Weight, datum: &RootDatum) -> Result<Q> {
    let ratio = root_product(datum.compact_roots(), y) / root_product(datum.all_roots(), y);
    Ok(ratio * index_polynomial(fam, datum).eval(&lambda.0)?)
}

/// Coefficient of `t^0` in `t^d · ch_g(X_λ)(exp ty)`, against the predicted value.
pub fn leading_limit(
    fam: &IndexFamily,
    lambda: &Weight,
    y: &Weight,
    d: i64,
    datum: &RootDatum,
) -> Result<LimitReport> {
    let q_dim = (datum.r_g() - datum.r_k()) as i64;
    if d < q_dim {
        return Err(Error::IllegalParams(format!(
            "d = {d} below r_g − r_k = {q_dim}: no predicted value"
        )));
    }
    let order = datum.r_g() + d.max(0) as usize + 1;
    let series = character_series(fam, lambda, y, order, datum)?;
    let pole = series.pole_order();
    if pole > d {
        return Err(Error::DUnderflow { d, pole });
    }
    let value = series.coeff(-d).expect("order covers t^{-d}");
    let expected = if d > q_dim {
        Q::from_integer(0.into())
    } else {
        predicted_limit(fam, lambda, y, datum)?
    };
    Ok(LimitReport {
        d,
        matched: value == expected,
        value,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{GroupId, WeylElement};
    use crate::rational::qr;

    fn sl2() -> RootDatum {
        RootDatum::new(GroupId::Su { p: 1, q: 1 }).unwrap()
    }

    fn hc(n: i64) -> Weight {
        Weight(vec![qr(n, 2), qr(-n, 2)])
    }

    fn dplus() -> IndexFamily {
        IndexFamily::new(hc(1), [(WeylElement::identity(2), 1)])
    }

    #[test]
    fn sl2_series() {
        let d = sl2();
        let y = Weight::from_ints(&[1, -1]);
        let s = character_series(&dplus(), &hc(3), &y, 4, &d).unwrap();
        assert_eq!(s.pole_order(), 1);
        assert_eq!(s.coeff(-1), Some(qr(1, 2)));
        // e^{3t}/(e^t − e^{−t}) = 1/(2t) + 3/2 + …
        assert_eq!(s.coeff(0), Some(qr(3, 2)));
        let z = character_series(&IndexFamily::zero(hc(1)), &hc(3), &y, 4, &d).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn sl2_limits() {
        let d = sl2();
        let y = Weight::from_ints(&[1, -1]);
        let r = leading_limit(&dplus(), &hc(3), &y, 1, &d).unwrap();
        assert_eq!(r.value, qr(1, 2));
        assert!(r.matched);
        let r = leading_limit(&dplus(), &hc(3), &y, 2, &d).unwrap();
        assert_eq!(r.value, q(0));
        assert!(r.matched);
        let f = IndexFamily::new(
            hc(1),
            [(WeylElement::identity(2), -1), (WeylElement::transposition(2, 0, 1), 1)],
        );
        let r = leading_limit(&f, &hc(3), &y, 1, &d).unwrap();
        assert_eq!(r.value, q(0));
        assert!(r.matched);
    }

    #[test]
    fn su21_pole() {
        let d = RootDatum::new(GroupId::Su { p: 2, q: 1 }).unwrap();
        let fam = IndexFamily::new(d.rho_g.clone(), [(WeylElement::identity(3), 1)]);
        let y = Weight::from_ints(&[2, 0, -2]);
        let s = character_series(&fam, &d.rho_g, &y, 3, &d).unwrap();
        assert_eq!(s.pole_order(), 2);
        let r = leading_limit(&fam, &d.rho_g, &y, 2, &d).unwrap();
        assert!(r.matched, "{r:?}");
    }

    #[test]
    fn spin_identity() {
        for g in [
            GroupId::Su { p: 1, q: 1 },
            GroupId::Su { p: 2, q: 1 },
            GroupId::SpReal { n: 2 },
            GroupId::SoOdd { p: 1, q: 1 },
        ] {
            let d = RootDatum::new(g).unwrap();
            let y = Weight((1..=d.rank as i64).map(|i| qr(7 * i * i + 1, 3)).collect());
            assert!(spin_ratio_holds(&d, &y, 10).unwrap(), "{g}");
        }
    }

    #[test]
    fn report_json() {
        let r = LimitReport {
            d: 1,
            value: qr(1, 2),
            expected: qr(1, 2),
            matched: true,
        };
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"d":1,"value":"1/2","expected":"1/2","match":true}"#
        );
    }
}
