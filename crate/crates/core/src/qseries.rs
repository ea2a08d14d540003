//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! These are the generating-function oracles: the t-core product
//! `∏ (1-q^{tj})^t / (1-q^j)`, the triangular theta series and the
//! three-fold triangular sum that matches the 4-core series.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients `c[0..=order]` of a power series; everything past `order`
/// is unknown and never touched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    coeffs: Vec<i128>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![0; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = 1;
        s
    }

    /// Builds a series from its coefficient list; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<i128>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "a series needs at least the constant term".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// `(1 - q^e)^{-1} = 1 + q^e + q^{2e} + …` truncated at `order`.
    pub fn geometric(e: usize, order: usize) -> Result<Self> {
        if e == 0 {
            return Err(Error::Domain(
                "geometric series needs a positive exponent".into(),
            ));
        }
        let mut s = Self::zero(order);
        for n in (0..=order).step_by(e) {
            s.coeffs[n] = 1;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`; `None` past the truncation order.
    pub fn coeff(&self, n: usize) -> Option<i128> {
        self.coeffs.get(n).copied()
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// The same series truncated at a smaller order.
    pub fn prefix(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: order,
                right: self.order(),
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// In place: `self *= (1 - q^e)`.
    fn mul_one_minus(&mut self, e: usize) -> Result<()> {
        for n in (e..self.coeffs.len()).rev() {
            self.coeffs[n] = self.coeffs[n]
                .checked_sub(self.coeffs[n - e])
                .ok_or(Error::Overflow("series coefficient"))?;
        }
        Ok(())
    }

    /// In place: `self /= (1 - q^e)`.
    fn div_one_minus(&mut self, e: usize) -> Result<()> {
        for n in e..self.coeffs.len() {
            self.coeffs[n] = self.coeffs[n]
                .checked_add(self.coeffs[n - e])
                .ok_or(Error::Overflow("series coefficient"))?;
        }
        Ok(())
    }
}

/// Cauchy product truncated at the common order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let order = a.order();
    let mut out = TruncatedSeries::zero(order);
    for (i, &x) in a.coeffs.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.coeffs[..=order - i].iter().enumerate() {
            let term = x.checked_mul(y).ok_or(Error::Overflow("series product"))?;
            out.coeffs[i + j] = out.coeffs[i + j]
                .checked_add(term)
                .ok_or(Error::Overflow("series product"))?;
        }
    }
    Ok(out)
}

/// `∏_{j≥1} (1-q^{tj})^t / (1-q^j)` to order `order`; `c[n] = a_t(n)`.
pub fn eta_quotient_tcore(t: usize, order: usize) -> Result<TruncatedSeries> {
    if t < 2 {
        return Err(Error::InvalidCoreParameter(t));
    }
    let mut s = TruncatedSeries::one(order);
    // Factors with j > order are 1 + O(q^{order+1}).
    for j in 1..=order {
        if t * j <= order {
            for _ in 0..t {
                s.mul_one_minus(t * j)?;
            }
        }
        s.div_one_minus(j)?;
    }
    Ok(s)
}

/// `Σ_{ℓ≥0} q^{ℓ(ℓ+1)/2}`.
pub fn theta_triangular(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for tri in triangular_numbers().take_while(|&tri| tri <= order) {
        s.coeffs[tri] = 1;
    }
    s
}

/// `Σ_{m,r,s≥0} q^{m(m+1)/2 + r(r+1) + s(s+1)}`.
pub fn triple_triangular_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let tri: Vec<usize> = triangular_numbers().take_while(|&x| x <= order).collect();
    // r(r+1) is twice a triangular number.
    let pronic: Vec<usize> = tri
        .iter()
        .map(|&x| 2 * x)
        .take_while(|&x| x <= order)
        .collect();
    for &a in &tri {
        for &b in &pronic {
            if a + b > order {
                break;
            }
            for &c in &pronic {
                let e = a + b + c;
                if e > order {
                    break;
                }
                s.coeffs[e] += 1;
            }
        }
    }
    s
}

/// `0, 1, 3, 6, 10, …`
pub fn triangular_numbers() -> impl Iterator<Item = usize> {
    (0usize..).map(|l| l * (l + 1) / 2)
}

/// If `n = ℓ(ℓ+1)/2`, returns `ℓ`.
pub fn triangular_index(n: usize) -> Option<usize> {
    // 8n + 1 = (2ℓ+1)²
    let d = 8 * n + 1;
    let r = d.isqrt();
    (r * r == d).then_some((r - 1) / 2)
}

/// Result of comparing two series coefficient by coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub equal: bool,
    pub first_mismatch: Option<usize>,
}

pub fn verify_identity(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Result<IdentityCheck> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch {
            left: lhs.order(),
            right: rhs.order(),
        });
    }
    let first_mismatch = lhs.coeffs.iter().zip(&rhs.coeffs).position(|(a, b)| a != b);
    Ok(IdentityCheck {
        equal: first_mismatch.is_none(),
        first_mismatch,
    })
}
