//! The binary-weight product identity:
//! `prod_{k>=0} 1/(1 - q t^{2^k}) = prod_{j<=k} (1 + q^{2^j} t^{2^k})`,
//! its Hessenberg determinant coefficients with bottom-row entries
//! `sigma(k) = sum_{2^j | k} 2^j q^{k/2^j}`, the functional equation
//! `f(t)(1 - qt) = f(t^2)` with its scalar recurrence, and the exhaustive
//! B(j,k) vector-partition counts.

use std::sync::Arc;

use crate::detkit::PowerSums;
use crate::report::VerificationReport;
use crate::series::{Rat, Series, VarTable};
use num::traits::One;

/// The (q, t) ring for a binary-weight expansion.
pub fn bin_ring(q_cap: u32, t_cap: u32) -> Arc<VarTable> {
    VarTable::new(&["q", "t"], &[q_cap, t_cap])
}

/// Left product `prod over 2^k <= t_cap of 1/(1 - q t^{2^k})`.
pub fn lhs_expand(ring: &Arc<VarTable>) -> Series {
    let one = Series::one(ring);
    let t_cap = ring.caps()[1];
    let mut acc = one.clone();
    let mut p = 1u32; // 2^k
    while p <= t_cap {
        let factor = one.sub(&Series::monomial(ring, &[1, p], Rat::one()).unwrap());
        acc = acc.mul(&factor.inverse().unwrap());
        p *= 2;
    }
    acc
}

/// Middle product `prod over j <= k, 2^k <= t_cap, 2^j <= q_cap of
/// (1 + q^{2^j} t^{2^k})`.
pub fn rhs_expand(ring: &Arc<VarTable>) -> Series {
    let one = Series::one(ring);
    let q_cap = ring.caps()[0];
    let t_cap = ring.caps()[1];
    let mut acc = one.clone();
    let mut tk = 1u32;
    let mut k = 0u32;
    while tk <= t_cap {
        let mut qj = 1u32;
        for _j in 0..=k {
            if qj > q_cap {
                break;
            }
            let factor = one.add(&Series::monomial(ring, &[qj, tk], Rat::one()).unwrap());
            acc = acc.mul(&factor);
            qj *= 2;
        }
        tk *= 2;
        k += 1;
    }
    acc
}

/// `sigma(k) = sum_{2^j | k, j >= 0} 2^j q^{k/2^j}` as a series in the
/// given ring; the number of summands is 1 + (2-adic valuation of k).
pub fn sigma(ring: &Arc<VarTable>, k: u32) -> Series {
    assert!(k >= 1);
    let mut acc = Series::zero(ring);
    let mut pow2 = 1u32;
    while k.is_multiple_of(pow2) {
        let e = k / pow2;
        if e <= ring.caps()[0] {
            acc = acc.add(
                &Series::monomial(ring, &[e, 0], Rat::from_integer(pow2.into())).unwrap(),
            );
        }
        if pow2 > k / 2 {
            break;
        }
        pow2 *= 2;
    }
    acc
}

/// Power sums `sigma(1..kmax)` for the determinant/recurrence pipelines.
pub fn sigma_power_sums(ring: &Arc<VarTable>, kmax: u32) -> PowerSums {
    PowerSums((1..=kmax).map(|k| sigma(ring, k)).collect())
}

/// `1 + sum_k det(hessenberg(sigma, k))/k! t^k`; must equal [`lhs_expand`].
pub fn det_coeffs(ring: &Arc<VarTable>) -> Series {
    let t_cap = ring.caps()[1];
    let p = sigma_power_sums(ring, t_cap);
    crate::qseries::expand_by_determinant(ring, &p, t_cap)
}

/// Coefficients `A_0..A_kmax` from the scalar recurrence derived from the
/// functional equation: `A_k = q A_{k-1} + [k even] A_{k/2}`, `A_0 = 1`.
/// Each entry is a series in q alone.
pub fn recurrence_coeffs(ring: &Arc<VarTable>, kmax: u32) -> Vec<Series> {
    let q = Series::var(ring, "q").unwrap();
    let mut a = vec![Series::one(ring)];
    for k in 1..=kmax as usize {
        let mut v = q.mul(&a[k - 1]);
        if k % 2 == 0 {
            v = v.add(&a[k / 2]);
        }
        a.push(v);
    }
    a
}

/// Expansion `1 + sum A_k t^k` from [`recurrence_coeffs`].
pub fn recurrence_expand(ring: &Arc<VarTable>) -> Series {
    let t_cap = ring.caps()[1];
    let a = recurrence_coeffs(ring, t_cap);
    let t = Series::var(ring, "t").unwrap();
    let mut acc = Series::zero(ring);
    for (k, ak) in a.iter().enumerate() {
        acc = acc.add(&ak.mul(&t.pow_u32(k as u32)));
    }
    acc
}

/// Checks `f(t)(1 - qt) = f(t^2)` on the expanded left product, and that
/// the scalar recurrence reproduces the same coefficients.
pub fn functional_eq_check(ring: &Arc<VarTable>) -> VerificationReport {
    let one = Series::one(ring);
    let f = lhs_expand(ring);
    let qt = Series::monomial(ring, &[1, 1], Rat::one()).unwrap();
    let lhs = f.mul(&one.sub(&qt));
    let rhs = f.substitute("t", &Rat::one(), &[0, 2]).unwrap();
    let functional = VerificationReport::compare("binary-functional-eq", &lhs, &rhs);
    let rec = VerificationReport::compare("binary-recurrence", &f, &recurrence_expand(ring));
    functional.and(rec)
}

/// Exhaustive `B(j,k)` counts.
///
/// Distinct mode: sets of distinct vectors `<2^a, 2^b>` with `a <= b`
/// summing to `<j,k>`. Unrestricted mode: multisets of vectors `<1, 2^b>`
/// summing to `<j,k>`. Parts are enumerated in decreasing order with
/// pruning on the remaining component sums.
pub fn count_b(j: u64, k: u64) -> (u64, u64) {
    // candidate parts for distinct mode: <2^a, 2^b>, a <= b, within target
    let mut distinct_parts = Vec::new();
    let mut pa = 1u64;
    while pa <= j {
        let mut pb = pa;
        while pb <= k {
            distinct_parts.push((pa, pb));
            pb *= 2;
        }
        pa *= 2;
    }
    distinct_parts.sort();
    distinct_parts.reverse();
    let distinct = count_sets(&distinct_parts, 0, j, k);

    // unrestricted mode parts: <1, 2^b>
    let mut multi_parts = Vec::new();
    let mut pb = 1u64;
    while pb <= k {
        multi_parts.push((1u64, pb));
        pb *= 2;
    }
    multi_parts.sort();
    multi_parts.reverse();
    let unrestricted = count_multisets(&multi_parts, 0, j, k);

    (distinct, unrestricted)
}

fn count_sets(parts: &[(u64, u64)], from: usize, j: u64, k: u64) -> u64 {
    if j == 0 && k == 0 {
        return 1;
    }
    let mut acc = 0;
    for i in from..parts.len() {
        let (a, b) = parts[i];
        if a <= j && b <= k {
            acc += count_sets(parts, i + 1, j - a, k - b);
        }
    }
    acc
}

fn count_multisets(parts: &[(u64, u64)], from: usize, j: u64, k: u64) -> u64 {
    if j == 0 && k == 0 {
        return 1;
    }
    let mut acc = 0;
    for i in from..parts.len() {
        let (a, b) = parts[i];
        if a <= j && b <= k {
            acc += count_multisets(parts, i, j - a, k - b);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detkit::{hessenberg_matrix, newton_coeffs};
    use crate::report::Status;
    use crate::series::{rat_int, SeriesError};

    fn coeffs_of_t(f: &Series, k: u32) -> Series {
        f.coeff_of("t", k).unwrap()
    }

    fn poly_q(ring: &Arc<VarTable>, coeffs: &[(u32, i64)]) -> Series {
        let mut s = Series::zero(ring);
        for &(e, c) in coeffs {
            s = s.add(&Series::monomial(ring, &[e, 0], rat_int(c)).unwrap());
        }
        s
    }

    #[test]
    fn lhs_matches_known_coefficients() {
        let ring = bin_ring(10, 10);
        let f = lhs_expand(&ring);
        // t^1 -> q
        assert_eq!(coeffs_of_t(&f, 1), poly_q(&ring, &[(1, 1)]));
        // t^4 -> q(q^3+q^2+q+1)
        assert_eq!(
            coeffs_of_t(&f, 4),
            poly_q(&ring, &[(4, 1), (3, 1), (2, 1), (1, 1)])
        );
        // t^10 -> q^2(q^8+q^7+q^6+2q^5+2q^4+2q^3+2q^2+2q+1)
        assert_eq!(
            coeffs_of_t(&f, 10),
            poly_q(
                &ring,
                &[
                    (10, 1),
                    (9, 1),
                    (8, 1),
                    (7, 2),
                    (6, 2),
                    (5, 2),
                    (4, 2),
                    (3, 2),
                    (2, 1)
                ]
            )
        );
    }

    #[test]
    fn rhs_equals_lhs() {
        let ring = bin_ring(10, 10);
        assert_eq!(rhs_expand(&ring), lhs_expand(&ring));
        // q^3 t^6 coefficient is 2
        assert_eq!(lhs_expand(&ring).coeff(&[3, 6]).unwrap(), rat_int(2));
    }

    #[test]
    fn rhs_single_factor() {
        let ring = bin_ring(1, 1);
        let one = Series::one(&ring);
        let qt = Series::monomial(&ring, &[1, 1], Rat::one()).unwrap();
        assert_eq!(rhs_expand(&ring), one.add(&qt));
    }

    #[test]
    fn sigma_values() {
        let ring = bin_ring(8, 8);
        assert_eq!(sigma(&ring, 1), poly_q(&ring, &[(1, 1)]));
        assert_eq!(sigma(&ring, 2), poly_q(&ring, &[(2, 1), (1, 2)]));
        assert_eq!(sigma(&ring, 3), poly_q(&ring, &[(3, 1)]));
        assert_eq!(sigma(&ring, 4), poly_q(&ring, &[(4, 1), (2, 2), (1, 4)]));
    }

    #[test]
    fn det_pipeline_matches_product() {
        let ring = bin_ring(8, 8);
        assert_eq!(det_coeffs(&ring), lhs_expand(&ring));
        // A_2 = q^2 + q
        let f = lhs_expand(&ring);
        assert_eq!(coeffs_of_t(&f, 2), poly_q(&ring, &[(2, 1), (1, 1)]));
        assert_eq!(coeffs_of_t(&f, 0), Series::one(&ring));
    }

    #[test]
    fn newton_equals_determinant_route() {
        let ring = bin_ring(8, 8);
        let p = sigma_power_sums(&ring, 6);
        let b = newton_coeffs(&p, 6).unwrap();
        let f = lhs_expand(&ring);
        for k in 0..=6u32 {
            assert_eq!(b[k as usize], coeffs_of_t(&f, k), "A_{k}");
        }
        // and the determinant itself at k = 4
        let m = hessenberg_matrix(&p, 4).unwrap();
        let d = crate::detkit::det(&m);
        assert_eq!(d, b[4].scale(&rat_int(24)));
    }

    #[test]
    fn functional_equation_holds() {
        let ring = bin_ring(12, 12);
        let r = functional_eq_check(&ring);
        assert_eq!(r.status, Status::Pass, "{r}");
        // recurrence gives A_3 = q A_2 = q^3 + q^2
        let a = recurrence_coeffs(&ring, 3);
        assert_eq!(a[3], poly_q(&ring, &[(3, 1), (2, 1)]));
        assert_eq!(a[0], Series::one(&ring));
    }

    #[test]
    fn count_b_examples() {
        assert_eq!(count_b(3, 6), (2, 2));
        assert_eq!(count_b(1, 1), (1, 1));
    }

    #[test]
    fn counts_match_coefficients() {
        let ring = bin_ring(12, 12);
        let f = lhs_expand(&ring);
        for j in 0..=12u32 {
            for k in 0..=12u32 {
                let (d, u) = count_b(j as u64, k as u64);
                assert_eq!(d, u, "B({j},{k}) modes disagree");
                let c = f.coeff(&[j, k]).unwrap();
                assert_eq!(c, rat_int(d as i64), "B({j},{k}) vs coefficient");
            }
        }
    }

    /// The q-degree counts parts, so the coefficient of q^1 t^k is 1
    /// exactly when k is itself a power of two, and the coefficient of
    /// q^m t^k with m = (binary digit sum of k) is at least 1.
    #[test]
    fn q_degree_counts_parts() {
        let ring = bin_ring(12, 12);
        let f = lhs_expand(&ring);
        for k in 1..=12u32 {
            let expected = if k.is_power_of_two() { 1 } else { 0 };
            assert_eq!(f.coeff(&[1, k]).unwrap(), rat_int(expected), "q t^{k}");
            let m = k.count_ones();
            assert!(f.coeff(&[m, k]).unwrap() >= Rat::one(), "q^{m} t^{k}");
        }
    }

    #[test]
    fn coeff_out_of_caps_is_an_error() {
        let ring = bin_ring(4, 4);
        let f = lhs_expand(&ring);
        assert_eq!(f.coeff(&[5, 1]), Err(SeriesError::OutOfCaps));
    }
}
