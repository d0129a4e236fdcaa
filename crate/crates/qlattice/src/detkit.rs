//! Lower-Hessenberg determinant machinery.
//!
//! Given power sums `p_1..p_K`, the order-`k` matrix has `a_{ij} = p_{i-j+1}`
//! on and below the diagonal, `-i` on the superdiagonal of row `i`, and zeros
//! above it. Its determinant divided by `k!` is the `k`-th coefficient of the
//! generating function whose log-derivative produced the power sums; the same
//! coefficients satisfy the Newton-style recurrence
//! `k B_k = p_k + sum_{j=1}^{k-1} B_j p_{k-j}`, `B_0 = 1`.
//!
//! Two determinant evaluators are provided on purpose: a cofactor recursion
//! that needs no division, and Bareiss fraction-free elimination whose exact
//! divisions work in the truncated ring whenever every pivot has a nonzero
//! constant term. They must agree; `newton_coeffs` is the cheap production
//! path and the determinants are the verification path.

use crate::series::{rat, rat_int, Rat, Series, VarTable};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DetError {
    #[error("requested order {order} exceeds the {available} available power sums")]
    NotEnoughPowerSums { order: usize, available: usize },
    #[error("power sum list is empty")]
    Empty,
}

/// The sequence `p_1..p_K` feeding both pipelines. All entries share a ring.
#[derive(Debug, Clone)]
pub struct PowerSums(pub Vec<Series>);

impl PowerSums {
    pub fn ring(&self) -> &Arc<VarTable> {
        self.0[0].ring()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Order-`k` lower-Hessenberg matrix built from power sums.
#[derive(Debug, Clone)]
pub struct HessenbergMatrix {
    order: usize,
    entries: Vec<Vec<Series>>,
}

impl HessenbergMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> &Series {
        &self.entries[i][j]
    }
}

/// `a_{ij} = p_{i-j+1}` for `i >= j`, `-i` for `j = i+1`, zero otherwise
/// (1-based indices).
pub fn hessenberg_matrix(p: &PowerSums, k: usize) -> Result<HessenbergMatrix, DetError> {
    if p.is_empty() {
        return Err(DetError::Empty);
    }
    if k > p.len() {
        return Err(DetError::NotEnoughPowerSums {
            order: k,
            available: p.len(),
        });
    }
    let ring = p.ring();
    let mut entries = Vec::with_capacity(k);
    for i in 1..=k {
        let mut row = Vec::with_capacity(k);
        for j in 1..=k {
            let e = if i >= j {
                p.0[i - j].clone()
            } else if j == i + 1 {
                Series::constant(ring, rat_int(-(i as i64)))
            } else {
                Series::zero(ring)
            };
            row.push(e);
        }
        entries.push(row);
    }
    Ok(HessenbergMatrix { order: k, entries })
}

/// Determinant by cofactor expansion along the last column, exploiting that
/// the only nonzero entries there are the superdiagonal `-(k-1)` and the
/// diagonal entry. No division, works over any ring element.
pub fn det_cofactor(m: &HessenbergMatrix) -> Series {
    let rows: Vec<usize> = (0..m.order).collect();
    let cols: Vec<usize> = (0..m.order).collect();
    det_rec(&m.entries, &rows, &cols)
}

fn det_rec(entries: &[Vec<Series>], rows: &[usize], cols: &[usize]) -> Series {
    let ring = entries[0][0].ring();
    let n = rows.len();
    if n == 0 {
        return Series::one(ring);
    }
    if n == 1 {
        return entries[rows[0]][cols[0]].clone();
    }
    // expand along the last remaining column
    let col = cols[n - 1];
    let sub_cols: Vec<usize> = cols[..n - 1].to_vec();
    let mut acc = Series::zero(ring);
    for (pos, &row) in rows.iter().enumerate() {
        let a = &entries[row][col];
        if a.is_zero() {
            continue;
        }
        let sub_rows: Vec<usize> = rows
            .iter()
            .copied()
            .filter(|&r| r != row)
            .collect();
        let minor = det_rec(entries, &sub_rows, &sub_cols);
        let term = a.mul(&minor);
        // sign (-1)^{pos + (n-1)}
        if (pos + n - 1).is_multiple_of(2) {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// Determinant by Bareiss one-step fraction-free elimination. The exact
/// divisions happen in the truncated quotient ring, which is only licensed
/// when the divisor is a unit there; returns `None` when some pivot has a
/// zero constant term (callers fall back to `det_cofactor`).
pub fn det_bareiss(m: &HessenbergMatrix) -> Option<Series> {
    let n = m.order;
    let ring = m.entries[0][0].ring();
    if n == 0 {
        return Some(Series::one(ring));
    }
    let mut a = m.entries.clone();
    let mut prev = Series::one(ring);
    for k in 0..n - 1 {
        let pivot = a[k][k].clone();
        if pivot.constant_term() == Rat::from_integer(0.into()) {
            return None;
        }
        let prev_inv = prev.inverse().ok()?;
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&pivot).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.mul(&prev_inv);
            }
        }
        prev = pivot;
    }
    Some(a[n - 1][n - 1].clone())
}

/// Production determinant: cofactor recursion (always defined).
pub fn det(m: &HessenbergMatrix) -> Series {
    det_cofactor(m)
}

/// `B_0..B_K` via `k B_k = p_k + sum_{j=1}^{k-1} B_j p_{k-j}`, with
/// `B_k = det(hessenberg(p, k)) / k!`.
#[allow(clippy::needless_range_loop)]
pub fn newton_coeffs(p: &PowerSums, kmax: usize) -> Result<Vec<Series>, DetError> {
    if p.is_empty() {
        return Err(DetError::Empty);
    }
    if kmax > p.len() {
        return Err(DetError::NotEnoughPowerSums {
            order: kmax,
            available: p.len(),
        });
    }
    let ring = p.ring();
    let mut b = vec![Series::one(ring)];
    for k in 1..=kmax {
        let mut acc = p.0[k - 1].clone();
        for j in 1..k {
            acc = acc.add(&b[j].mul(&p.0[k - j - 1]));
        }
        b.push(acc.scale(&rat(1, k as i64)));
    }
    Ok(b)
}
