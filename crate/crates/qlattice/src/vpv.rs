//! Visible point vector (VPV) identities: lattice enumeration with gcd
//! filtering, exact expansion of the axis-extended hyperquadrant and
//! hyperpyramid products against their closed-form right sides, the
//! pyramid Taylor recurrence, and the numeric polylogarithm check for the
//! general-exponent hyperquadrant identity.

use std::sync::Arc;

use crate::detkit::PowerSums;
use crate::report::{Status, VerificationReport};
use crate::series::{rat, Rat, Series, VarTable};
use num::integer::Integer;
use num::traits::One;

/// Lattice regions rayed from the origin. `n` is the dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// All coordinates >= 1.
    Hyperquadrant,
    /// Leading coordinates >= 0, last coordinate >= 1 (axes included
    /// except the top dimension).
    AxisExtended,
    /// Leading coordinates >= 0 and strictly less than the last, which
    /// is >= 1.
    Hyperpyramid,
}

impl Region {
    pub fn contains(&self, v: &[u32]) -> bool {
        let n = v.len();
        let last = v[n - 1];
        match self {
            Region::Hyperquadrant => v.iter().all(|&c| c >= 1),
            Region::AxisExtended => last >= 1,
            Region::Hyperpyramid => last >= 1 && v[..n - 1].iter().all(|&c| c < last),
        }
    }
}

/// gcd over coordinates; zeros are ignored (gcd(0, k) = k), as required by
/// regions that include lattice points on the axes.
pub fn coordinate_gcd(v: &[u32]) -> u32 {
    v.iter().fold(0u32, |g, &c| g.gcd(&c))
}

/// All vectors of the region within the cap box whose coordinate gcd is 1,
/// in lexicographic order.
pub fn visible_points(region: Region, caps: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut v = vec![0u32; caps.len()];
    loop {
        if region.contains(&v) && coordinate_gcd(&v) == 1 {
            out.push(v.clone());
        }
        // odometer increment; lexicographic order falls out of BTree-style
        // iteration, but we just sort at the end to be explicit
        let mut i = caps.len();
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if v[i] < caps[i] {
                v[i] += 1;
                for x in v[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Whether the product factors are direct `(1 - m)^w` or reciprocal
/// `(1 - m)^{-w}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Direct,
    Reciprocal,
}

/// Exact expansion of a VPV product with last-coordinate weights:
/// `prod over VPVs v of (1 - x^v)^(s / v_last)` where `s` is +1 (direct)
/// or -1 (reciprocal).
pub fn vpv_product_expand(
    region: Region,
    sign: Sign,
    ring: &Arc<VarTable>,
) -> Series {
    let one = Series::one(ring);
    let mut acc = one.clone();
    for v in visible_points(region, ring.caps()) {
        let last = v[v.len() - 1] as i64;
        let w = match sign {
            Sign::Direct => rat(1, last),
            Sign::Reciprocal => rat(-1, last),
        };
        let factor = one.sub(&Series::monomial(ring, &v, Rat::one()).unwrap());
        acc = acc.mul(&factor.pow_const(&w).unwrap());
    }
    acc
}

/// Variable names for the n-dimensional VPV identities: the last variable
/// is always `z`, the leading ones walk backwards through the alphabet.
pub fn vpv_var_names(n: usize) -> Vec<&'static str> {
    match n {
        2 => vec!["y", "z"],
        3 => vec!["x", "y", "z"],
        4 => vec!["w", "x", "y", "z"],
        5 => vec!["v", "w", "x", "y", "z"],
        _ => panic!("VPV identities are stated for n in 2..=5"),
    }
}

pub fn vpv_ring(n: usize, caps: &[u32]) -> Arc<VarTable> {
    VarTable::new(&vpv_var_names(n), caps)
}

/// Right side of the axis-extended identities:
/// `(1 - z)^(1 / prod_i (1 - x_i))`.
pub fn axis_rhs(ring: &Arc<VarTable>) -> Series {
    let one = Series::one(ring);
    let names = ring.names();
    let n = names.len();
    let mut w = one.clone();
    for name in &names[..n - 1] {
        let x = Series::var(ring, name).unwrap();
        w = w.mul(&one.sub(&x).inverse().unwrap());
    }
    let z = Series::var(ring, &names[n - 1]).unwrap();
    one.sub(&z).pow(&w).unwrap()
}

/// Axis-extended identity check: direct product over VPVs with `a_i >= 0`,
/// last coordinate >= 1, against [`axis_rhs`].
pub fn axis_identity_check(n: usize, caps: &[u32]) -> VerificationReport {
    let ring = vpv_ring(n, caps);
    let lhs = vpv_product_expand(Region::AxisExtended, Sign::Direct, &ring);
    let rhs = axis_rhs(&ring);
    VerificationReport::compare("vpv-axis", &lhs, &rhs).with_param("n", n)
}

/// Pyramid power sums: `p_m = prod_i (1 - x_i^m)/(1 - x_i)` over the
/// leading variables.
pub fn pyramid_power_sum(ring: &Arc<VarTable>, m: u32) -> Series {
    let one = Series::one(ring);
    let names = ring.names();
    let n = names.len();
    let mut acc = one.clone();
    for name in &names[..n - 1] {
        let x = Series::var(ring, name).unwrap();
        acc = acc.mul(
            &one.sub(&x.pow_u32(m))
                .mul(&one.sub(&x).inverse().unwrap()),
        );
    }
    acc
}

/// Right side of the hyperpyramid identities: the alternating product over
/// subsets `S` of the leading variables of
/// `(1 - (prod_S x_i) z)^(sigma(S) / prod_i (1 - x_i))`,
/// with `sigma(S) = +1` for odd |S| and `-1` for even |S| (so the empty
/// subset contributes the `1/(1-z)` factor).
pub fn pyramid_rhs(ring: &Arc<VarTable>) -> Series {
    let one = Series::one(ring);
    let names = ring.names();
    let n = names.len();
    let mut base_w = one.clone();
    for name in &names[..n - 1] {
        let x = Series::var(ring, name).unwrap();
        base_w = base_w.mul(&one.sub(&x).inverse().unwrap());
    }
    let mut acc = one.clone();
    for mask in 0u32..(1 << (n - 1)) {
        let mut exps = vec![0u32; n];
        for (i, e) in exps[..n - 1].iter_mut().enumerate() {
            if mask & (1 << i) != 0 {
                *e = 1;
            }
        }
        exps[n - 1] = 1; // z
        let factor = one.sub(&Series::monomial(ring, &exps, Rat::one()).unwrap());
        let w = if mask.count_ones() % 2 == 1 {
            base_w.clone()
        } else {
            base_w.neg()
        };
        acc = acc.mul(&factor.pow(&w).unwrap());
    }
    acc
}

/// Hyperpyramid identity check: reciprocal product over VPVs with all
/// leading coordinates strictly below the last, against [`pyramid_rhs`].
pub fn pyramid_identity_check(n: usize, caps: &[u32]) -> VerificationReport {
    let ring = vpv_ring(n, caps);
    let lhs = vpv_product_expand(Region::Hyperpyramid, Sign::Reciprocal, &ring);
    let rhs = pyramid_rhs(&ring);
    VerificationReport::compare("vpv-pyramid", &lhs, &rhs).with_param("n", n)
}

/// Taylor coefficients of `((1-yz)/(1-z))^{1/(1-y)}` as polynomials in `y`,
/// via the recurrence `n y c_n + (n+2) c_{n+2} = (2 + n + y + ny) c_{n+1}`
/// with `c_0 = c_1 = 1`. The returned list is normalized to the factorial
/// convention of the displayed series: entry `k` is `k! c_k`, an
/// integer-coefficient polynomial (e.g. entry 4 is `6y^3+17y^2+26y+24`).
pub fn taylor_pyramid_coeffs(y_cap: u32, kmax: usize) -> Vec<Series> {
    let ring = VarTable::new(&["y"], &[y_cap]);
    let one = Series::one(&ring);
    let y = Series::var(&ring, "y").unwrap();
    let mut c = vec![one.clone(), one.clone()];
    for n in 0..kmax.saturating_sub(1) {
        let ni = n as i64;
        // (n+2) c_{n+2} = (2 + n + y + ny) c_{n+1} - n y c_n
        let lin = Series::constant(&ring, rat(2 + ni, 1))
            .add(&y.scale(&rat(1 + ni, 1)));
        let next = lin
            .mul(&c[n + 1])
            .sub(&y.mul(&c[n]).scale(&rat(ni, 1)))
            .scale(&rat(1, ni + 2));
        c.push(next);
    }
    let mut fact = Rat::one();
    c.iter()
        .enumerate()
        .map(|(k, s)| {
            if k > 1 {
                fact *= rat(k as i64, 1);
            }
            s.scale(&fact)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericError {
    #[error("polylogarithm tail bound {bound:.3e} exceeds 1e-12 at J = {terms}")]
    PolylogPrecision { bound: f64, terms: usize },
    #[error("|x| must be < 1 for polylogarithm evaluation, got {0}")]
    OutOfConvergence(f64),
}

/// Truncated polylogarithm `Li_s(x) = sum_{j=1}^{J} x^j / j^s`, with the
/// tail bound `|x|^{J+1} / ((1-|x|) max(1, (J+1)^s))` required below 1e-12.
pub fn polylog_f64(s: f64, x: f64, terms: usize) -> Result<f64, NumericError> {
    let ax = x.abs();
    if ax >= 1.0 {
        return Err(NumericError::OutOfConvergence(x));
    }
    let j1 = (terms + 1) as f64;
    let bound = ax.powf(j1) / ((1.0 - ax) * j1.powf(s).max(1.0));
    if bound > 1e-12 {
        return Err(NumericError::PolylogPrecision { bound, terms });
    }
    let mut acc = 0.0;
    for j in 1..=terms {
        acc += x.powi(j as i32) / (j as f64).powf(s);
    }
    Ok(acc)
}

fn polylog_auto(s: f64, x: f64) -> Result<f64, NumericError> {
    for terms in (8..=4096).step_by(8) {
        match polylog_f64(s, x, terms) {
            Ok(v) => return Ok(v),
            Err(NumericError::PolylogPrecision { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    polylog_f64(s, x, 4096)
}

fn binomial_f64(n: u64, k: u64) -> f64 {
    let k = k.min(n - k.min(n));
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * ((n - i) as f64) / ((i + 1) as f64);
    }
    acc
}

/// Crude truncation tail for the hyperquadrant numeric product: every
/// omitted VPV has some coordinate above its cap, hence total degree at
/// least `min(caps) + n`; each omitted factor's |log| is bounded by
/// `r^degree / (1 - r)` with `r = max |x_i|`, and lattice points of total
/// degree `d` in the open hyperquadrant number `C(d-1, n-1)`.
fn hyperquadrant_tail_estimate(caps: &[u32], r: f64) -> f64 {
    let n = caps.len() as u64;
    let d0 = (*caps.iter().min().unwrap() as u64) + n; // smallest omitted degree
    let mut tail = 0.0;
    let mut d = d0;
    loop {
        let term = binomial_f64(d - 1, n - 1) * r.powi(d as i32) / (1.0 - r);
        tail += term;
        if term < 1e-300 || d > d0 + 10_000 {
            break;
        }
        d += 1;
    }
    tail
}

/// Numeric verification of the general-exponent hyperquadrant identity.
///
/// Left side: `exp( sum over VPVs v within caps of
/// -ln(1 - prod x_i^{v_i}) / prod v_i^{b_i} )`.
/// Right side: `exp( prod_i Li_{b_i}(x_i) )`.
///
/// `b_i` must sum to 1 (real weights); the status is `Inconclusive` rather
/// than `Fail` when the truncation tail estimate exceeds the tolerance.
pub fn numeric_hyperquadrant_check(
    b: &[f64],
    point: &[f64],
    caps: &[u32],
    tol: f64,
) -> Result<VerificationReport, NumericError> {
    assert_eq!(b.len(), point.len());
    assert_eq!(b.len(), caps.len());
    assert!(
        (b.iter().sum::<f64>() - 1.0).abs() < 1e-9,
        "weights must sum to 1"
    );
    for &x in point {
        if x.abs() >= 1.0 {
            return Err(NumericError::OutOfConvergence(x));
        }
    }

    let mut log_lhs = 0.0;
    for v in visible_points(Region::Hyperquadrant, caps) {
        let mut m = 1.0;
        let mut w = 1.0;
        for (i, &c) in v.iter().enumerate() {
            m *= point[i].powi(c as i32);
            w *= (c as f64).powf(b[i]);
        }
        log_lhs += -(1.0 - m).ln() / w;
    }

    let mut log_rhs = 1.0;
    for (i, &x) in point.iter().enumerate() {
        log_rhs *= polylog_auto(b[i], x)?;
    }

    let lhs = log_lhs.exp();
    let rhs = log_rhs.exp();
    let residual = (lhs - rhs).abs();
    let r = point.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
    // the tail perturbs log L; scale into value space by |L|
    let tail = hyperquadrant_tail_estimate(caps, r) * lhs.abs();

    let status = if tail > tol {
        Status::Inconclusive
    } else if residual <= tol {
        Status::Pass
    } else {
        Status::Fail
    };
    let mut rep = VerificationReport::pass("vpv-numeric");
    rep.status = status;
    rep.residual = Some(residual);
    rep.tail_estimate = Some(tail);
    Ok(rep
        .with_param("b", format!("{b:?}"))
        .with_param("point", format!("{point:?}"))
        .with_param("tol", tol))
}

/// Pyramid power sums packaged for the determinant/recurrence pipelines.
pub fn pyramid_power_sums(ring: &Arc<VarTable>, kmax: u32) -> PowerSums {
    PowerSums((1..=kmax).map(|m| pyramid_power_sum(ring, m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detkit::{det, hessenberg_matrix, newton_coeffs};
    use crate::series::rat_int;
    use num::traits::Zero;

    #[test]
    fn visible_points_2d_hyperquadrant() {
        let pts = visible_points(Region::Hyperquadrant, &[3, 3]);
        let expect: Vec<Vec<u32>> = vec![
            vec![1, 1],
            vec![1, 2],
            vec![1, 3],
            vec![2, 1],
            vec![2, 3],
            vec![3, 1],
            vec![3, 2],
        ];
        assert_eq!(pts, expect);
        assert!(!pts.contains(&vec![2, 4]));
    }

    #[test]
    fn gcd_with_zero_coordinates() {
        assert_eq!(coordinate_gcd(&[0, 3]), 3);
        assert_eq!(coordinate_gcd(&[0, 0, 2]), 2);
        assert_eq!(coordinate_gcd(&[4, 6]), 2);
    }

    /// Lemma-style partition property: within the cap box, every nonzero
    /// region point is a unique positive multiple of exactly one VPV.
    #[test]
    fn multiples_of_vpvs_partition_the_region() {
        for region in [Region::Hyperquadrant, Region::AxisExtended, Region::Hyperpyramid] {
            let caps = [4u32, 4];
            let vpvs = visible_points(region, &caps);
            let mut covered = std::collections::BTreeSet::new();
            for v in &vpvs {
                for m in 1u32.. {
                    let w: Vec<u32> = v.iter().map(|&c| c * m).collect();
                    if w.iter().zip(&caps).any(|(&c, &cap)| c > cap) {
                        break;
                    }
                    assert!(covered.insert(w.clone()), "{w:?} covered twice ({region:?})");
                }
            }
            // every region point in the box must be covered
            for a in 0..=caps[0] {
                for b in 0..=caps[1] {
                    let w = vec![a, b];
                    if (a, b) != (0, 0) && region.contains(&w) {
                        assert!(covered.contains(&w), "{w:?} uncovered ({region:?})");
                    }
                }
            }
        }
    }

    #[test]
    fn axis_identity_n2_exact() {
        let r = axis_identity_check(2, &[3, 6]);
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn empty_region_product_is_one() {
        let ring = vpv_ring(2, &[0, 0]);
        let p = vpv_product_expand(Region::Hyperquadrant, Sign::Direct, &ring);
        assert_eq!(p, Series::one(&ring));
    }

    #[test]
    fn axis_rhs_at_y_zero_is_one_minus_z() {
        let ring = vpv_ring(2, &[3, 4]);
        let one = Series::one(&ring);
        let z = Series::var(&ring, "z").unwrap();
        let zero = Rat::zero();
        let collapsed = axis_rhs(&ring).substitute("y", &zero, &[0, 0]).unwrap();
        assert_eq!(collapsed, one.sub(&z));
    }

    /// Binomial-theorem expansion of the n = 3 right side: with
    /// D = (1-x)(1-y), the coefficient of z^k is
    /// -(D-1)(2D-1)...((k-1)D-1) / (k! D^k). Independent of the pow/exp/log
    /// machinery used by `axis_rhs`.
    #[test]
    fn axis_rhs_n3_binomial_pattern() {
        let ring = vpv_ring(3, &[3, 3, 4]);
        let one = Series::one(&ring);
        let x = Series::var(&ring, "x").unwrap();
        let y = Series::var(&ring, "y").unwrap();
        let rhs = axis_rhs(&ring);
        let d = one.sub(&x).mul(&one.sub(&y));
        let d_inv = d.inverse().unwrap();
        let mut num = one.clone(); // prod_{j=1}^{k-1} (jD - 1)
        let mut fact = Rat::one();
        for k in 1..=4u32 {
            if k > 1 {
                num = num.mul(&d.scale(&rat_int(k as i64 - 1)).sub(&one));
            }
            fact *= rat_int(k as i64);
            let expect = num
                .mul(&d_inv.pow_u32(k))
                .scale(&(Rat::one() / fact.clone()))
                .neg();
            let got = rhs.coeff_of("z", k).unwrap();
            assert_eq!(got, expect, "z^{k}");
        }
    }

    #[test]
    fn pyramid_power_sum_small_cases() {
        let ring = vpv_ring(2, &[4, 4]);
        let one = Series::one(&ring);
        let y = Series::var(&ring, "y").unwrap();
        assert_eq!(pyramid_power_sum(&ring, 1), one);
        assert_eq!(pyramid_power_sum(&ring, 2), one.add(&y));
    }

    #[test]
    fn pyramid_rhs_n2_closed_form() {
        let ring = vpv_ring(2, &[4, 5]);
        let one = Series::one(&ring);
        let y = Series::var(&ring, "y").unwrap();
        let z = Series::var(&ring, "z").unwrap();
        let yz = y.mul(&z);
        let w = one.sub(&y).inverse().unwrap();
        let expect = one
            .sub(&yz)
            .mul(&one.sub(&z).inverse().unwrap())
            .pow(&w)
            .unwrap();
        assert_eq!(pyramid_rhs(&ring), expect);
    }

    #[test]
    fn pyramid_rhs_at_y_zero() {
        let ring = vpv_ring(2, &[3, 4]);
        let one = Series::one(&ring);
        let z = Series::var(&ring, "z").unwrap();
        let zero = Rat::zero();
        let collapsed = pyramid_rhs(&ring).substitute("y", &zero, &[0, 0]).unwrap();
        assert_eq!(collapsed, one.sub(&z).inverse().unwrap());
    }

    #[test]
    fn pyramid_identity_n2_exact() {
        let r = pyramid_identity_check(2, &[4, 5]);
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn taylor_coeffs_match_display() {
        let c = taylor_pyramid_coeffs(4, 5);
        let ring = c[0].ring().clone();
        let poly = |coeffs: &[i64]| {
            // coeffs in increasing powers of y
            let terms: Vec<(Vec<u32>, Rat)> = coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (vec![i as u32], rat_int(c)))
                .collect();
            let refs: Vec<(&[u32], Rat)> =
                terms.iter().map(|(e, c)| (e.as_slice(), c.clone())).collect();
            Series::from_terms(&ring, &refs).unwrap()
        };
        assert_eq!(c[0], poly(&[1]));
        assert_eq!(c[1], poly(&[1]));
        assert_eq!(c[2], poly(&[2, 1]));
        assert_eq!(c[3], poly(&[6, 5, 2]));
        assert_eq!(c[4], poly(&[24, 26, 17, 6]));
        assert_eq!(c[5], poly(&[120, 154, 129, 74, 24]));
    }

    #[test]
    fn taylor_coeffs_match_pyramid_rhs() {
        let caps = [4u32, 5];
        let ring = vpv_ring(2, &caps);
        let rhs = pyramid_rhs(&ring);
        let c = taylor_pyramid_coeffs(4, 5);
        let mut fact = Rat::one();
        for k in 0..=5u32 {
            if k > 1 {
                fact *= rat_int(k as i64);
            }
            let got = rhs.coeff_of("z", k).unwrap().scale(&fact);
            // re-embed the single-variable polynomial into the (y, z) ring
            let mut expect = Series::zero(&ring);
            for (e, v) in c[k as usize].terms() {
                expect = expect.add(
                    &Series::monomial(&ring, &[e[0], 0], v.clone()).unwrap(),
                );
            }
            assert_eq!(got, expect, "z^{k}");
        }
    }

    /// The 4x4 pyramid determinant evaluates to 6y^3 + 17y^2 + 26y + 24,
    /// and the Newton pipeline reproduces the Taylor table.
    #[test]
    fn pyramid_determinant_and_recurrence() {
        let ring = VarTable::new(&["y", "z"], &[4, 4]);
        let p = pyramid_power_sums(&ring, 4);
        let m = hessenberg_matrix(&p, 4).unwrap();
        let d = det(&m);
        let y = Series::var(&ring, "y").unwrap();
        let expect = y
            .pow_u32(3)
            .scale(&rat_int(6))
            .add(&y.pow_u32(2).scale(&rat_int(17)))
            .add(&y.scale(&rat_int(26)))
            .add(&Series::constant(&ring, rat_int(24)));
        assert_eq!(d, expect);

        let b = newton_coeffs(&p, 4).unwrap();
        let c = taylor_pyramid_coeffs(4, 4);
        let mut fact = Rat::one();
        for k in 0..=4usize {
            if k > 1 {
                fact *= rat_int(k as i64);
            }
            let got = b[k].scale(&fact);
            let mut expect = Series::zero(&ring);
            for (e, v) in c[k].terms() {
                expect = expect.add(&Series::monomial(&ring, &[e[0], 0], v.clone()).unwrap());
            }
            assert_eq!(got, expect, "B_{k}");
        }
    }

    #[test]
    fn polylog_li1_is_minus_log() {
        let v = polylog_f64(1.0, 0.5, 200).unwrap();
        assert!((v - std::f64::consts::LN_2).abs() < 1e-10);
        assert_eq!(polylog_f64(3.0, 0.0, 8).unwrap(), 0.0);
    }

    #[test]
    fn polylog_matches_oversummation() {
        let a = polylog_f64(0.5, 0.1, 200).unwrap();
        let mut b = 0.0;
        for j in 1..=200 {
            b += 0.1f64.powi(j) / (j as f64).sqrt();
        }
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn polylog_tail_bound_enforced() {
        assert!(matches!(
            polylog_f64(0.5, 0.9, 4),
            Err(NumericError::PolylogPrecision { .. })
        ));
    }

    #[test]
    fn numeric_check_zero_point_is_trivial() {
        let r = numeric_hyperquadrant_check(&[0.5, 0.5], &[0.0, 0.1], &[10, 10], 1e-9).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        assert!(r.residual.unwrap() < 1e-12);
    }

    #[test]
    fn numeric_check_undersized_caps_is_inconclusive() {
        let r = numeric_hyperquadrant_check(&[0.5, 0.5], &[0.1, 0.1], &[2, 2], 1e-9).unwrap();
        assert_eq!(r.status, Status::Inconclusive, "{r}");
    }

    /// The s = 1, t = 0 case of the hyperquadrant identity cross-checked
    /// against the exact axis machinery evaluated at the same point:
    /// exp(-ln(1-y) * (z + z^2/1 + ...))? No: Li_1(y) Li_0 is out of range,
    /// so use b = (1, 0): RHS = exp(Li_1(y) Li_0(z)) with Li_0(z) = z/(1-z).
    #[test]
    fn numeric_check_weight_one_zero() {
        let r = numeric_hyperquadrant_check(&[1.0, 0.0], &[0.1, 0.1], &[30, 30], 1e-8).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
    }
}
