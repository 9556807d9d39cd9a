//! Truncated power series and Laurent series in one variable `t`, exact over ℚ.

use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{format_q, q, Q};

/// `c_0 + c_1 t + … + c_N t^N  (mod t^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Q>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Q::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = Q::one();
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<Q>, order: usize) -> Self {
        coeffs.resize(order + 1, Q::zero());
        TruncatedSeries { coeffs }
    }

    /// `exp(a t)`.
    pub fn exp_linear(a: &Q, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Q::one();
        coeffs.push(c.clone());
        for k in 1..=order {
            c = c * a / q(k as i64);
            coeffs.push(c.clone());
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Q::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Quotient by a series with nonzero constant term.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let b0 = other.coeffs.first()?.clone();
        if b0.is_zero() {
            return None;
        }
        let n = self.order().min(other.order());
        let mut out: Vec<Q> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut c = self.coeffs[k].clone();
            for j in 1..=k {
                c -= &other.coeffs[j] * &out[k - j];
            }
            out.push(c / &b0);
        }
        Some(TruncatedSeries { coeffs: out })
    }

    /// Divide by `t^k`, dropping the first `k` coefficients (which must vanish).
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) || k > self.order() {
            return None;
        }
        Some(TruncatedSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{}·t^{}", format_q(c), k))
            .collect();
        if parts.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", parts.join(" + "))?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// `t^{valuation} · series`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    pub valuation: i64,
    pub series: TruncatedSeries,
}

impl LaurentSeries {
    pub fn zero(valuation: i64, order: usize) -> Self {
        LaurentSeries {
            valuation,
            series: TruncatedSeries::zero(order),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.series.is_zero()
    }

    /// Coefficient of `t^k`, or `None` beyond the truncation.
    pub fn coeff(&self, k: i64) -> Option<Q> {
        let idx = k - self.valuation;
        if idx < 0 {
            return Some(Q::zero());
        }
        if idx as usize > self.series.order() {
            return None;
        }
        Some(self.series.coeff(idx as usize))
    }

    /// Order of the pole at `t = 0` (0 when there is none).
    pub fn pole_order(&self) -> i64 {
        match self.series.valuation() {
            None => 0,
            Some(v) => (-(self.valuation + v as i64)).max(0),
        }
    }

    /// Largest exponent carried exactly.
    pub fn precision(&self) -> i64 {
        self.valuation + self.series.order() as i64
    }
}
