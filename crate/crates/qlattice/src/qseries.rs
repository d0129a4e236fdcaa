//! The n-space q-binomial products F_n and their factorial-weighted
//! variants G_n, expanded three independent ways: direct product,
//! Hessenberg determinant, and Newton recurrence. Also the classical
//! q-binomial sum side, the MacMahon plane-partition specializations,
//! and the even/odd symmetric-subset functional equation.

use std::sync::Arc;

use crate::detkit::{det, hessenberg_matrix, newton_coeffs, PowerSums};
use crate::report::{Status, VerificationReport};
use crate::series::{rat_int, Rat, Series, VarTable};
use num::traits::One;

/// Parameters of an F_n / G_n expansion: variable names and per-variable
/// truncation caps. `t_cap` is the expansion order in `t`.
#[derive(Debug, Clone)]
pub struct ProductSpec {
    pub x_names: Vec<String>,
    pub x_caps: Vec<u32>,
    pub a_cap: u32,
    pub t_cap: u32,
}

impl ProductSpec {
    /// Conventional variable names: `q` for n = 1,
    /// `x, y`(, `z`) for n = 2, 3, `x1..xn` beyond.
    pub fn new(n: usize, x_cap: u32, a_cap: u32, t_cap: u32) -> ProductSpec {
        let x_names: Vec<String> = match n {
            1 => vec!["q".into()],
            2 => vec!["x".into(), "y".into()],
            3 => vec!["x".into(), "y".into(), "z".into()],
            _ => (1..=n).map(|i| format!("x{i}")).collect(),
        };
        ProductSpec {
            x_names,
            x_caps: vec![x_cap; n],
            a_cap,
            t_cap,
        }
    }

    pub fn n(&self) -> usize {
        self.x_names.len()
    }

    /// The ring holding x_1..x_n, a, t.
    pub fn ring(&self) -> Arc<VarTable> {
        let mut names: Vec<&str> = self.x_names.iter().map(|s| s.as_str()).collect();
        names.push("a");
        names.push("t");
        let mut caps = self.x_caps.clone();
        caps.push(self.a_cap);
        caps.push(self.t_cap);
        VarTable::new(&names, &caps)
    }
}

/// Iterate all exponent vectors `alpha` with `alpha_i <= caps_i`.
/// Factors outside this box only contribute monomials above truncation.
fn alpha_grid(caps: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &c in caps {
        let mut next = Vec::with_capacity(out.len() * (c as usize + 1));
        for v in &out {
            for e in 0..=c {
                let mut w = v.clone();
                w.push(e);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// The factor pair at grid point alpha: `1 - x^alpha a t` and `1 - x^alpha t`
/// in the product's ring (x vars first, then a, then t).
fn f_factor_exps(alpha: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut with_a = alpha.to_vec();
    with_a.push(1); // a
    with_a.push(1); // t
    let mut without_a = alpha.to_vec();
    without_a.push(0);
    without_a.push(1);
    (with_a, without_a)
}

/// Direct expansion of `F_n = prod (1 - x^alpha a t) / (1 - x^alpha t)`.
pub fn expand_f_product(spec: &ProductSpec) -> Series {
    let ring = spec.ring();
    let one = Series::one(&ring);
    let mut acc = one.clone();
    for alpha in alpha_grid(&spec.x_caps) {
        let (num_e, den_e) = f_factor_exps(&alpha);
        let num = one
            .sub(&Series::monomial(&ring, &num_e, Rat::one()).unwrap());
        let den = one
            .sub(&Series::monomial(&ring, &den_e, Rat::one()).unwrap());
        acc = acc.mul(&num).mul(&den.inverse().unwrap());
    }
    acc
}

/// `p_k = (1 - a^k) / prod_i (1 - x_i^k)`, the F power sums.
pub fn f_power_sum(spec: &ProductSpec, k: u32) -> Series {
    let ring = spec.ring();
    let one = Series::one(&ring);
    let a = Series::var(&ring, "a").unwrap();
    let mut acc = one.sub(&a.pow_u32(k));
    for name in &spec.x_names {
        let x = Series::var(&ring, name).unwrap();
        acc = acc.mul(&one.sub(&x.pow_u32(k)).inverse().unwrap());
    }
    acc
}

/// `p_k = (1 - a^k) exp(x_1^k + ... + x_n^k)`, the G power sums.
pub fn g_power_sum(spec: &ProductSpec, k: u32) -> Series {
    let ring = spec.ring();
    let one = Series::one(&ring);
    let a = Series::var(&ring, "a").unwrap();
    let mut s = Series::zero(&ring);
    for name in &spec.x_names {
        s = s.add(&Series::var(&ring, name).unwrap().pow_u32(k));
    }
    one.sub(&a.pow_u32(k)).mul(&s.exp0().unwrap())
}

fn t_term(ring: &Arc<VarTable>, k: u32) -> Series {
    Series::var(ring, "t").unwrap().pow_u32(k)
}

fn factorial(k: u64) -> Rat {
    (1..=k).fold(Rat::one(), |acc, i| acc * rat_int(i as i64))
}

/// `1 + sum_k det(hessenberg(p, k)) / k! * t^k` from the given power sums.
pub fn expand_by_determinant(ring: &Arc<VarTable>, p: &PowerSums, t_cap: u32) -> Series {
    let mut acc = Series::one(ring);
    for k in 1..=t_cap {
        let m = hessenberg_matrix(p, k as usize).unwrap();
        let d = det(&m);
        let coeff = d.scale(&(Rat::one() / factorial(k as u64)));
        acc = acc.add(&coeff.mul(&t_term(ring, k)));
    }
    acc
}

/// `1 + sum_k B_k t^k` via the Newton recurrence on the given power sums.
pub fn expand_by_recurrence(ring: &Arc<VarTable>, p: &PowerSums, t_cap: u32) -> Series {
    let b = newton_coeffs(p, t_cap as usize).unwrap();
    let mut acc = Series::one(ring);
    for k in 1..=t_cap {
        acc = acc.add(&b[k as usize].mul(&t_term(ring, k)));
    }
    acc
}

/// F_n by the determinant pipeline.
pub fn expand_f_det(spec: &ProductSpec) -> Series {
    let ring = spec.ring();
    let p = PowerSums((1..=spec.t_cap).map(|k| f_power_sum(spec, k)).collect());
    expand_by_determinant(&ring, &p, spec.t_cap)
}

/// F_n by the Newton recurrence pipeline.
pub fn expand_f_newton(spec: &ProductSpec) -> Series {
    let ring = spec.ring();
    let p = PowerSums((1..=spec.t_cap).map(|k| f_power_sum(spec, k)).collect());
    expand_by_recurrence(&ring, &p, spec.t_cap)
}

/// Direct expansion of `G_n = prod ((1 - x^alpha a t)/(1 - x^alpha t))
/// ^ (1/(alpha_1! ... alpha_n!))`.
pub fn expand_g_product(spec: &ProductSpec) -> Series {
    let ring = spec.ring();
    let one = Series::one(&ring);
    let mut acc = one.clone();
    for alpha in alpha_grid(&spec.x_caps) {
        let (num_e, den_e) = f_factor_exps(&alpha);
        let num = one.sub(&Series::monomial(&ring, &num_e, Rat::one()).unwrap());
        let den = one.sub(&Series::monomial(&ring, &den_e, Rat::one()).unwrap());
        let factor = num.mul(&den.inverse().unwrap());
        let weight = alpha
            .iter()
            .fold(Rat::one(), |acc, &e| acc / factorial(e as u64));
        acc = acc.mul(&factor.pow_const(&weight).unwrap());
    }
    acc
}

/// G_n by the determinant pipeline.
pub fn expand_g_det(spec: &ProductSpec) -> Series {
    let ring = spec.ring();
    let p = PowerSums((1..=spec.t_cap).map(|k| g_power_sum(spec, k)).collect());
    expand_by_determinant(&ring, &p, spec.t_cap)
}

/// G_n by the Newton recurrence pipeline.
pub fn expand_g_newton(spec: &ProductSpec) -> Series {
    let ring = spec.ring();
    let p = PowerSums((1..=spec.t_cap).map(|k| g_power_sum(spec, k)).collect());
    expand_by_recurrence(&ring, &p, spec.t_cap)
}

/// The classical q-binomial sum side:
/// `1 + sum_k (a;q)_k / (q;q)_k * t^k` in the ring (q, a, t).
pub fn qbinom_sum(q_cap: u32, a_cap: u32, t_cap: u32) -> Series {
    let ring = VarTable::new(&["q", "a", "t"], &[q_cap, a_cap, t_cap]);
    let one = Series::one(&ring);
    let q = Series::var(&ring, "q").unwrap();
    let a = Series::var(&ring, "a").unwrap();
    let mut acc = one.clone();
    let mut num = one.clone(); // (a;q)_k
    let mut den = one.clone(); // (q;q)_k
    for k in 1..=t_cap {
        num = num.mul(&one.sub(&a.mul(&q.pow_u32(k - 1))));
        den = den.mul(&one.sub(&q.pow_u32(k)));
        let coeff = num.mul(&den.inverse().unwrap());
        acc = acc.add(&coeff.mul(&t_term(&ring, k)));
    }
    acc
}

/// The q-binomial product side `prod_k (1 - a t q^k)/(1 - t q^k)`, same
/// ring as [`qbinom_sum`]. This is F_1 with x renamed to q.
pub fn qbinom_product(q_cap: u32, a_cap: u32, t_cap: u32) -> Series {
    let ring = VarTable::new(&["q", "a", "t"], &[q_cap, a_cap, t_cap]);
    let one = Series::one(&ring);
    let mut acc = one.clone();
    for k in 0..=q_cap {
        let num = one.sub(&Series::monomial(&ring, &[k, 1, 1], Rat::one()).unwrap());
        let den = one.sub(&Series::monomial(&ring, &[k, 0, 1], Rat::one()).unwrap());
        acc = acc.mul(&num).mul(&den.inverse().unwrap());
    }
    acc
}

/// MacMahon specializations of F_2(q,q; a, q) in the single-variable ring q.
///
/// `k = 0` means `a = 0`: the unlimited-row plane partition generating
/// function `prod_j (1/(1-q^j))^j`. `k >= 1` means `a = q^k`: the k-rowed
/// generating function `prod_j (1/(1-q^j))^{min(k,j)}`.
///
/// Both sides are expanded independently (specialized F_2 grid product vs.
/// the right-side power product); equality is asserted and the right side
/// returned. A mismatch reports the first differing power of q.
#[allow(clippy::result_large_err)]
pub fn macmahon_specials(k: u32, q_cap: u32) -> Result<Series, VerificationReport> {
    let ring = VarTable::new(&["q"], &[q_cap]);
    let one = Series::one(&ring);
    let q = Series::var(&ring, "q").unwrap();

    // Left: F_2(q,q;a,q) over the grid alpha1 + alpha2 + 1 <= q_cap,
    // with a = q^k (k >= 1) or a = 0 (k = 0).
    let mut lhs = one.clone();
    for a1 in 0..=q_cap {
        for a2 in 0..=q_cap.saturating_sub(a1) {
            let s = a1 + a2 + 1; // exponent of t-specialized factor
            if s > q_cap {
                continue;
            }
            if k >= 1 && s + k <= q_cap {
                lhs = lhs.mul(&one.sub(&q.pow_u32(s + k)));
            }
            lhs = lhs.mul(&one.sub(&q.pow_u32(s)).inverse().unwrap());
        }
    }

    // Right: prod_j (1/(1-q^j))^{min(k,j)} with min(0-case, j) read as j.
    let mut rhs = one.clone();
    for j in 1..=q_cap {
        let e = if k == 0 { j } else { k.min(j) };
        rhs = rhs.mul(&one.sub(&q.pow_u32(j)).inverse().unwrap().pow_u32(e));
    }

    match VerificationReport::compare("macmahon", &lhs, &rhs) {
        r if r.status == Status::Pass => Ok(rhs),
        r => Err(r.with_param("k", k)),
    }
}

/// The even/odd symmetric-subset functional equation: the alternating
/// product of `F(prod_{i in S} x_i * t)` over subsets `S` of the variables
/// (even |S| in the numerator, odd in the denominator) collapses to
/// `(1 - at)/(1 - t)`.
pub fn functional_eq_check(spec: &ProductSpec) -> VerificationReport {
    let ring = spec.ring();
    let one = Series::one(&ring);
    let f = expand_f_product(spec);
    let n = spec.n();
    let mut num = one.clone();
    let mut den = one.clone();
    for mask in 0u32..(1 << n) {
        // t -> (prod_{i in S} x_i) t
        let mut repl = vec![0u32; ring.arity()];
        for (i, _) in spec.x_names.iter().enumerate() {
            if mask & (1 << i) != 0 {
                repl[i] = 1;
            }
        }
        repl[ring.arity() - 1] = 1; // t itself
        let shifted = f.substitute("t", &Rat::one(), &repl).unwrap();
        if mask.count_ones() % 2 == 0 {
            num = num.mul(&shifted);
        } else {
            den = den.mul(&shifted);
        }
    }
    let lhs = num.mul(&den.inverse().unwrap());
    let a = Series::var(&ring, "a").unwrap();
    let t = Series::var(&ring, "t").unwrap();
    let rhs = one.sub(&a.mul(&t)).mul(&one.sub(&t).inverse().unwrap());
    VerificationReport::compare("functional-eq", &lhs, &rhs).with_param("n", n)
}

/// Even/odd quotient identity: `G_1(q;0,t) / G_1(q^2;0,t^2)` equals
/// `prod_k (1 + t q^k)^{1/k!}`, all expanded in the (q, a, t) ring with a
/// substituted to 0.
pub fn quotient_5_6_check(q_cap: u32, t_cap: u32) -> VerificationReport {
    let spec = ProductSpec::new(1, q_cap, 1, t_cap);
    let ring = spec.ring();
    let one = Series::one(&ring);
    let g = expand_g_product(&spec);
    let g0 = g.substitute("a", &Rat::from_integer(0.into()), &[0, 0, 0]).unwrap();
    // q -> q^2, then t -> t^2
    let g_sq = g0
        .substitute("q", &Rat::one(), &[2, 0, 0])
        .unwrap()
        .substitute("t", &Rat::one(), &[0, 0, 2])
        .unwrap();
    let lhs = g0.mul(&g_sq.inverse().unwrap());

    let mut rhs = one.clone();
    for k in 0..=q_cap {
        let factor = one.add(&Series::monomial(&ring, &[k, 0, 1], Rat::one()).unwrap());
        let w = Rat::one() / factorial(k as u64);
        rhs = rhs.mul(&factor.pow_const(&w).unwrap());
    }
    VerificationReport::compare("quotient-5-6", &lhs, &rhs)
}

/// Specialize a full F/G expansion at `a = r` (rational constant).
pub fn substitute_a(spec: &ProductSpec, f: &Series, r: &Rat) -> Series {
    let ring = spec.ring();
    let zeros = vec![0u32; ring.arity()];
    f.substitute("a", r, &zeros).unwrap()
}
