//! Independent combinatorial counters used to cross-check series
//! coefficients: vector partitions, plane partitions, and ordinary integer
//! partitions, each by direct exhaustive enumeration.

/// Part constraint for vector-partition counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorMode {
    /// Multisets of parts.
    Unrestricted,
    /// Sets of pairwise-distinct parts.
    Distinct,
}

/// Counts vector partitions of `target` into nonzero parts drawn from
/// `parts`. Parts are vectors of the same dimension as `target`; each may be
/// used any number of times (`Unrestricted`) or at most once (`Distinct`).
/// Canonical order (parts chosen in non-increasing index order) makes each
/// multiset counted exactly once.
pub fn count_vector_partitions(target: &[u64], parts: &[Vec<u64>], mode: VectorMode) -> u64 {
    fn rec(target: &[u64], parts: &[Vec<u64>], from: usize, mode: VectorMode) -> u64 {
        if target.iter().all(|&c| c == 0) {
            return 1;
        }
        let mut acc = 0;
        for i in from..parts.len() {
            let p = &parts[i];
            if p.iter().zip(target).all(|(a, t)| a <= t) {
                let rest: Vec<u64> = target.iter().zip(p).map(|(t, a)| t - a).collect();
                let next = match mode {
                    VectorMode::Unrestricted => i,
                    VectorMode::Distinct => i + 1,
                };
                acc += rec(&rest, parts, next, mode);
            }
        }
        acc
    }
    assert!(parts.iter().all(|p| p.len() == target.len()));
    assert!(parts.iter().all(|p| p.iter().any(|&c| c > 0)));
    rec(target, parts, 0, mode)
}

/// All nonzero vectors `v` with `v[i] <= bound[i]`, sorted descending so the
/// canonical-order recursion sees larger parts first.
pub fn parts_in_box(bound: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut v = vec![0u64; bound.len()];
    loop {
        // odometer increment
        let mut i = 0;
        loop {
            if i == v.len() {
                out.sort();
                out.reverse();
                return out;
            }
            if v[i] < bound[i] {
                v[i] += 1;
                break;
            }
            v[i] = 0;
            i += 1;
        }
        out.push(v.clone());
    }
}

/// Counts plane partitions of `n`: arrays `a[i][j] >= 1` weakly decreasing
/// along rows and down columns, summing to `n`. `max_rows = None` allows any
/// number of rows. `trace = Some(s)` keeps only those whose main-diagonal sum
/// `a[0][0] + a[1][1] + ...` equals `s`.
pub fn count_plane_partitions(n: u64, max_rows: Option<u64>, trace: Option<u64>) -> u64 {
    fn rows(remaining: u64, prev: &[u64], rows_left: Option<u64>, depth: usize, diag: u64, trace: Option<u64>) -> u64 {
        let mut acc = if remaining == 0 && trace.is_none_or(|s| s == diag) {
            1
        } else {
            0
        };
        if remaining == 0 || rows_left == Some(0) {
            return acc;
        }
        // enumerate the next row: weakly decreasing, entrywise <= prev,
        // length <= prev.len(), sum <= remaining
        let mut row: Vec<u64> = Vec::new();
        #[allow(clippy::too_many_arguments)]
        fn extend(
            remaining: u64,
            prev: &[u64],
            row: &mut Vec<u64>,
            rows_left: Option<u64>,
            depth: usize,
            diag: u64,
            trace: Option<u64>,
            acc: &mut u64,
        ) {
            if !row.is_empty() {
                let d = diag + if depth < row.len() { row[depth] } else { 0 };
                *acc += rows(
                    remaining,
                    row,
                    rows_left.map(|r| r - 1),
                    depth + 1,
                    d,
                    trace,
                );
            }
            if row.len() == prev.len() {
                return;
            }
            let col_bound = prev[row.len()];
            let row_bound = row.last().copied().unwrap_or(u64::MAX);
            let hi = col_bound.min(row_bound).min(remaining);
            for v in 1..=hi {
                row.push(v);
                extend(remaining - v, prev, row, rows_left, depth, diag, trace, acc);
                row.pop();
            }
        }
        extend(remaining, prev, &mut row, rows_left, depth, diag, trace, &mut acc);
        acc
    }
    if n == 0 {
        return if trace.is_none_or(|s| s == 0) { 1 } else { 0 };
    }
    let first = vec![n; n as usize]; // first row bounded only by n
    rows(n, &first, max_rows, 0, 0, trace)
}

/// Counts ordinary partitions of `n` into parts of size at most `max_part`
/// (use `n` for no restriction), by direct enumeration.
pub fn count_integer_partitions(n: u64, max_part: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut acc = 0;
    for first in 1..=max_part.min(n) {
        acc += count_integer_partitions(n - first, first);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat_int, Rat, Series, VarTable};
    use num::traits::One;

    #[test]
    fn integer_partitions_small() {
        let p: Vec<u64> = (0..=10).map(|n| count_integer_partitions(n, n)).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(count_integer_partitions(6, 2), 4); // 2+2+2, 2+2+1+1, ...
    }

    #[test]
    fn plane_partitions_small() {
        // 1, 1, 3, 6, 13, 24, 48
        let pp: Vec<u64> = (0..=6).map(|n| count_plane_partitions(n, None, None)).collect();
        assert_eq!(pp, vec![1, 1, 3, 6, 13, 24, 48]);
    }

    #[test]
    fn plane_partitions_one_row_are_integer_partitions() {
        for n in 0..=9u64 {
            assert_eq!(
                count_plane_partitions(n, Some(1), None),
                count_integer_partitions(n, n)
            );
        }
    }

    #[test]
    fn plane_partitions_two_rows() {
        // rows <= 2: generating function prod 1/(1-q^j)^min(2,j)
        let ring = VarTable::new(&["q"], &[8]);
        let one = Series::one(&ring);
        let mut gf = one.clone();
        for j in 1..=8u32 {
            let f = one
                .sub(&Series::monomial(&ring, &[j], Rat::one()).unwrap())
                .inverse()
                .unwrap();
            gf = gf.mul(&f.pow_u32(2.min(j)));
        }
        for n in 0..=8u64 {
            assert_eq!(
                rat_int(count_plane_partitions(n, Some(2), None) as i64),
                gf.coeff(&[n as u32]).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn plane_partition_trace_slices_sum_to_total() {
        for n in 0..=6u64 {
            let total = count_plane_partitions(n, None, None);
            let by_trace: u64 = (0..=n).map(|s| count_plane_partitions(n, None, Some(s))).sum();
            assert_eq!(total, by_trace, "n={n}");
        }
        // trace 1 plane partitions of 3: exactly those with a(0,0)>=... and
        // diagonal sum 1, i.e. single-column or single-row shapes with corner 1
        assert_eq!(count_plane_partitions(3, None, Some(3)), 1);
    }

    #[test]
    fn vector_partitions_match_two_variable_product() {
        // prod over (i,j) in box (1..=3, 0..=3), (i,j) != 0 of 1/(1-x^i y^j)
        // counts unrestricted vector partitions with parts in that box.
        let ring = VarTable::new(&["x", "y"], &[3, 3]);
        let one = Series::one(&ring);
        let mut gf = one.clone();
        let mut parts = Vec::new();
        for i in 0..=3u32 {
            for j in 0..=3u32 {
                if i + j == 0 {
                    continue;
                }
                parts.push(vec![i as u64, j as u64]);
                let f = one
                    .sub(&Series::monomial(&ring, &[i, j], Rat::one()).unwrap())
                    .inverse()
                    .unwrap();
                gf = gf.mul(&f);
            }
        }
        for i in 0..=3u64 {
            for j in 0..=3u64 {
                let c = count_vector_partitions(&[i, j], &parts, VectorMode::Unrestricted);
                assert_eq!(
                    rat_int(c as i64),
                    gf.coeff(&[i as u32, j as u32]).unwrap(),
                    "({i},{j})"
                );
            }
        }
    }

    #[test]
    fn distinct_vector_partitions_match_product() {
        let ring = VarTable::new(&["x", "y"], &[3, 3]);
        let one = Series::one(&ring);
        let mut gf = one.clone();
        let parts = parts_in_box(&[3, 3]);
        for p in &parts {
            let f = one.add(&Series::monomial(&ring, &[p[0] as u32, p[1] as u32], Rat::one()).unwrap());
            gf = gf.mul(&f);
        }
        for i in 0..=3u64 {
            for j in 0..=3u64 {
                let c = count_vector_partitions(&[i, j], &parts, VectorMode::Distinct);
                assert_eq!(
                    rat_int(c as i64),
                    gf.coeff(&[i as u32, j as u32]).unwrap(),
                    "({i},{j})"
                );
            }
        }
    }

    #[test]
    fn parts_in_box_shape() {
        let parts = parts_in_box(&[2, 1]);
        assert_eq!(parts.len(), 5); // 3*2 - 1
        assert!(parts.windows(2).all(|w| w[0] > w[1]));
        assert!(!parts.contains(&vec![0, 0]));
    }
}
