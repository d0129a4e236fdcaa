//! Exact truncated multivariate power series over the rationals.
//!
//! A [`Series`] lives in a ring described by a [`VarTable`]: an ordered list
//! of variable names together with a per-variable degree cap. Every monomial
//! whose exponent in some variable exceeds that variable's cap is discarded,
//! so arithmetic takes place in the finite quotient ring
//! `Q[x_1,...,x_n] / (x_1^{c_1+1}, ..., x_n^{c_n+1})` and is exact there.
//!
//! Coefficients are arbitrary-precision rationals; zero coefficients are
//! never stored, so term-map equality is series equality.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational coefficient.
pub type Rat = BigRational;

/// Rational `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("cannot invert a series with zero constant term")]
    SingularInput,
    #[error("operation requires constant term 1, found {0}")]
    NonUnitConstant(String),
    #[error("operation requires constant term 0, found {0}")]
    NonzeroConstant(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("monomial exceeds the ring's degree caps")]
    OutOfCaps,
    #[error("no value supplied for variable `{0}`")]
    MissingValue(String),
    #[error("malformed series JSON: {0}")]
    BadJson(String),
}

/// Ordered variable list with per-variable truncation caps.
#[derive(Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    caps: Vec<u32>,
}

impl VarTable {
    /// Build a shared ring descriptor. Panics on duplicate names or on a
    /// name/cap length mismatch.
    pub fn new(names: &[&str], caps: &[u32]) -> Arc<VarTable> {
        assert_eq!(names.len(), caps.len(), "one cap per variable");
        for (i, n) in names.iter().enumerate() {
            assert!(
                !names[..i].contains(n),
                "duplicate variable name `{n}` in ring"
            );
        }
        Arc::new(VarTable {
            names: names.iter().map(|s| s.to_string()).collect(),
            caps: caps.to_vec(),
        })
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn within_caps(&self, exps: &[u32]) -> bool {
        exps.iter().zip(&self.caps).all(|(e, c)| e <= c)
    }

    /// Sum of all caps: an upper bound on the total degree of any stored
    /// monomial, hence on the number of terms needed in exp/log/inverse loops.
    fn total_degree_bound(&self) -> u32 {
        self.caps.iter().sum()
    }
}

/// Truncated multivariate power series: a finite map monomial -> rational.
#[derive(Clone)]
pub struct Series {
    ring: Arc<VarTable>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring)
            && self.terms == other.terms
    }
}

impl Eq for Series {}

impl Series {
    pub fn zero(ring: &Arc<VarTable>) -> Series {
        Series {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<VarTable>) -> Series {
        Series::constant(ring, Rat::one())
    }

    pub fn constant(ring: &Arc<VarTable>, c: Rat) -> Series {
        let mut s = Series::zero(ring);
        if !c.is_zero() {
            s.terms.insert(vec![0; ring.arity()], c);
        }
        s
    }

    /// The series consisting of the single variable `name`.
    pub fn var(ring: &Arc<VarTable>, name: &str) -> Result<Series, SeriesError> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| SeriesError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0u32; ring.arity()];
        e[i] = 1;
        Series::monomial(ring, &e, Rat::one())
    }

    /// Single-term series `c * x^exps`.
    pub fn monomial(ring: &Arc<VarTable>, exps: &[u32], c: Rat) -> Result<Series, SeriesError> {
        assert_eq!(exps.len(), ring.arity(), "exponent vector length mismatch");
        if !ring.within_caps(exps) {
            return Err(SeriesError::OutOfCaps);
        }
        let mut s = Series::zero(ring);
        if !c.is_zero() {
            s.terms.insert(exps.to_vec(), c);
        }
        Ok(s)
    }

    /// Build from a term list; out-of-cap terms are rejected, duplicate
    /// monomials are summed.
    pub fn from_terms(
        ring: &Arc<VarTable>,
        terms: &[(&[u32], Rat)],
    ) -> Result<Series, SeriesError> {
        let mut s = Series::zero(ring);
        for (e, c) in terms {
            if !ring.within_caps(e) {
                return Err(SeriesError::OutOfCaps);
            }
            s.add_term(e.to_vec(), c.clone());
        }
        Ok(s)
    }

    pub fn ring(&self) -> &Arc<VarTable> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&vec![0u32; self.ring.arity()] as &Vec<u32>)
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    fn assert_same_ring(&self, other: &Series) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring,
            "series belong to different rings"
        );
    }

    /// Termwise sum. Panics if the rings differ.
    pub fn add(&self, other: &Series) -> Series {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        let mut out = Series::zero(&self.ring);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Series {
        if c.is_zero() {
            return Series::zero(&self.ring);
        }
        let mut out = Series::zero(&self.ring);
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    /// Convolution product; every monomial exceeding any cap is discarded.
    pub fn mul(&self, other: &Series) -> Series {
        self.assert_same_ring(other);
        let mut out = Series::zero(&self.ring);
        let caps = self.ring.caps();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = ea.clone();
                let mut ok = true;
                for (i, x) in eb.iter().enumerate() {
                    e[i] += x;
                    if e[i] > caps[i] {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    out.add_term(e, ca * cb);
                }
            }
        }
        out
    }

    /// `self^k` for a machine-integer exponent.
    pub fn pow_u32(&self, k: u32) -> Series {
        let mut out = Series::one(&self.ring);
        for _ in 0..k {
            out = out.mul(self);
            if out.is_zero() {
                break;
            }
        }
        out
    }

    /// Multiplicative inverse. Requires a nonzero constant term.
    ///
    /// Writes `f = c(1 + g)` with `g` having zero constant term, then sums
    /// the geometric series in `g`, which nilpotates past the sum of caps.
    pub fn inverse(&self) -> Result<Series, SeriesError> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(SeriesError::SingularInput);
        }
        let inv_c0 = Rat::one() / c0.clone();
        let g = self.scale(&inv_c0).sub(&Series::one(&self.ring));
        let mut out = Series::one(&self.ring);
        let mut pw = Series::one(&self.ring);
        for _ in 1..=self.ring.total_degree_bound() {
            pw = pw.mul(&g).neg();
            if pw.is_zero() {
                break;
            }
            out = out.add(&pw);
        }
        Ok(out.scale(&inv_c0))
    }

    /// `log f` for `f` with constant term 1 (Mercator series in `f - 1`).
    pub fn log1(&self) -> Result<Series, SeriesError> {
        let c0 = self.constant_term();
        if !c0.is_one() {
            return Err(SeriesError::NonUnitConstant(c0.to_string()));
        }
        let g = self.sub(&Series::one(&self.ring));
        let mut out = Series::zero(&self.ring);
        let mut pw = Series::one(&self.ring);
        for m in 1..=self.ring.total_degree_bound() as i64 {
            pw = pw.mul(&g);
            if pw.is_zero() {
                break;
            }
            let sign = if m % 2 == 1 { 1 } else { -1 };
            out = out.add(&pw.scale(&rat(sign, m)));
        }
        Ok(out)
    }

    /// `exp f` for `f` with zero constant term.
    pub fn exp0(&self) -> Result<Series, SeriesError> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(SeriesError::NonzeroConstant(c0.to_string()));
        }
        let mut out = Series::one(&self.ring);
        let mut term = Series::one(&self.ring);
        for m in 1..=self.ring.total_degree_bound() as i64 {
            term = term.mul(self).scale(&rat(1, m));
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// `f^w = exp(w log f)` for `f` with constant term 1 and an arbitrary
    /// series exponent `w`.
    pub fn pow(&self, w: &Series) -> Result<Series, SeriesError> {
        w.mul(&self.log1()?).exp0()
    }

    /// `f^c` for a constant rational exponent.
    pub fn pow_const(&self, c: &Rat) -> Result<Series, SeriesError> {
        self.pow(&Series::constant(&self.ring, c.clone()))
    }

    /// Replace every occurrence of `var^e` by `(coeff * x^repl_exps)^e`,
    /// re-truncating against the ring caps.
    pub fn substitute(
        &self,
        var: &str,
        coeff: &Rat,
        repl_exps: &[u32],
    ) -> Result<Series, SeriesError> {
        let idx = self
            .ring
            .index_of(var)
            .ok_or_else(|| SeriesError::UnknownVariable(var.to_string()))?;
        assert_eq!(repl_exps.len(), self.ring.arity());
        let caps = self.ring.caps();
        let mut out = Series::zero(&self.ring);
        for (e, c) in &self.terms {
            let k = e[idx];
            let mut ne = e.clone();
            ne[idx] = 0;
            let mut ok = true;
            for (i, r) in repl_exps.iter().enumerate() {
                let add = (*r as u64) * (k as u64);
                let total = ne[i] as u64 + add;
                if total > caps[i] as u64 {
                    ok = false;
                    break;
                }
                ne[i] = total as u32;
            }
            if !ok {
                continue;
            }
            // coeff^k; 0^0 = 1 is the k = 0 case, which never reaches here
            // with a zero multiplier because pow_rat(0,0) = 1.
            let mut factor = Rat::one();
            for _ in 0..k {
                factor *= coeff;
            }
            out.add_term(ne, c * factor);
        }
        Ok(out)
    }

    /// Stored coefficient of the given monomial, or 0 if absent.
    /// Out-of-cap monomials are rejected: the caller cannot distinguish a
    /// truncated-away coefficient from a true zero.
    pub fn coeff(&self, exps: &[u32]) -> Result<Rat, SeriesError> {
        assert_eq!(exps.len(), self.ring.arity());
        if !self.ring.within_caps(exps) {
            return Err(SeriesError::OutOfCaps);
        }
        Ok(self
            .terms
            .get(exps)
            .cloned()
            .unwrap_or_else(Rat::zero))
    }

    /// The coefficient of `var^k` as a series in the remaining variables
    /// (still living in the same ring, with `var`'s exponent zeroed).
    pub fn coeff_of(&self, var: &str, k: u32) -> Result<Series, SeriesError> {
        let idx = self
            .ring
            .index_of(var)
            .ok_or_else(|| SeriesError::UnknownVariable(var.to_string()))?;
        let mut out = Series::zero(&self.ring);
        for (e, c) in &self.terms {
            if e[idx] == k {
                let mut ne = e.clone();
                ne[idx] = 0;
                out.add_term(ne, c.clone());
            }
        }
        Ok(out)
    }

    /// Evaluate the truncated polynomial at a point, in double precision.
    pub fn eval_f64(&self, point: &BTreeMap<String, f64>) -> Result<f64, SeriesError> {
        let mut vals = Vec::with_capacity(self.ring.arity());
        for name in self.ring.names() {
            vals.push(
                *point
                    .get(name)
                    .ok_or_else(|| SeriesError::MissingValue(name.clone()))?,
            );
        }
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut m = c.to_f64().unwrap_or(f64::NAN);
            for (i, &k) in e.iter().enumerate() {
                m *= vals[i].powi(k as i32);
            }
            acc += m;
        }
        Ok(acc)
    }

    /// Lexicographically smallest monomial where `self` and `other` differ,
    /// with both coefficients. `None` means the series are equal.
    pub fn first_difference(&self, other: &Series) -> Option<(Vec<u32>, Rat, Rat)> {
        self.assert_same_ring(other);
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let a = self.terms.get(k).cloned().unwrap_or_else(Rat::zero);
            let b = other.terms.get(k).cloned().unwrap_or_else(Rat::zero);
            if a != b {
                return Some((k.clone(), a, b));
            }
        }
        None
    }

    /// Canonical JSON form: variables, caps, and terms sorted
    /// lexicographically by exponent vector. Bit-exact across platforms.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                serde_json::json!({
                    "e": e,
                    "n": c.numer().to_string(),
                    "d": c.denom().to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "vars": self.ring.names(),
            "caps": self.ring.caps(),
            "terms": terms,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Series, SeriesError> {
        let bad = |m: &str| SeriesError::BadJson(m.to_string());
        let vars = v["vars"].as_array().ok_or_else(|| bad("missing vars"))?;
        let caps = v["caps"].as_array().ok_or_else(|| bad("missing caps"))?;
        let names: Vec<&str> = vars
            .iter()
            .map(|x| x.as_str().ok_or_else(|| bad("non-string var")))
            .collect::<Result<_, _>>()?;
        let caps: Vec<u32> = caps
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|u| u as u32)
                    .ok_or_else(|| bad("non-integer cap"))
            })
            .collect::<Result<_, _>>()?;
        let ring = VarTable::new(&names, &caps);
        let mut s = Series::zero(&ring);
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let e: Vec<u32> = t["e"]
                .as_array()
                .ok_or_else(|| bad("missing exponents"))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|u| u as u32)
                        .ok_or_else(|| bad("non-integer exponent"))
                })
                .collect::<Result<_, _>>()?;
            let n: BigInt = t["n"]
                .as_str()
                .ok_or_else(|| bad("missing numerator"))?
                .parse()
                .map_err(|_| bad("bad numerator"))?;
            let d: BigInt = t["d"]
                .as_str()
                .ok_or_else(|| bad("missing denominator"))?
                .parse()
                .map_err(|_| bad("bad denominator"))?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            if e.len() != ring.arity() || !ring.within_caps(&e) {
                return Err(bad("exponent vector out of range"));
            }
            s.add_term(e, Rat::new(n, d));
        }
        Ok(s)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.names();
        let mut first = true;
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_ring(cap: u32) -> Arc<VarTable> {
        VarTable::new(&["t"], &[cap])
    }

    fn qt_ring(qcap: u32, tcap: u32) -> Arc<VarTable> {
        VarTable::new(&["q", "t"], &[qcap, tcap])
    }

    #[test]
    fn add_cancellation_and_identity() {
        let r = t_ring(3);
        let one = Series::one(&r);
        let t = Series::var(&r, "t").unwrap();
        let one_plus_t = one.add(&t);
        assert_eq!(one_plus_t.add(&t.neg()), one);
        assert_eq!(one_plus_t.add(&Series::zero(&r)), one_plus_t);
    }

    #[test]
    fn add_disjoint_supports() {
        let r = qt_ring(2, 2);
        let one = Series::one(&r);
        let q = Series::var(&r, "q").unwrap();
        let t = Series::var(&r, "t").unwrap();
        let sum = one.add(&q).add(&one.add(&t));
        let expect = Series::from_terms(
            &r,
            &[
                (&[0, 0], rat_int(2)),
                (&[1, 0], rat_int(1)),
                (&[0, 1], rat_int(1)),
            ],
        )
        .unwrap();
        assert_eq!(sum, expect);
    }

    #[test]
    fn mul_geometric_telescoping() {
        let r = t_ring(3);
        let t = Series::var(&r, "t").unwrap();
        let one = Series::one(&r);
        let f = one.sub(&t);
        let g = one
            .add(&t)
            .add(&t.pow_u32(2))
            .add(&t.pow_u32(3));
        // (1-t)(1+t+t^2+t^3) = 1 - t^4, and t^4 truncates away
        assert_eq!(f.mul(&g), one);
    }

    #[test]
    fn mul_binomials() {
        let r = qt_ring(1, 1);
        let one = Series::one(&r);
        let q = Series::var(&r, "q").unwrap();
        let t = Series::var(&r, "t").unwrap();
        let prod = one.add(&q).mul(&one.add(&t));
        let expect = Series::from_terms(
            &r,
            &[
                (&[0, 0], rat_int(1)),
                (&[1, 0], rat_int(1)),
                (&[0, 1], rat_int(1)),
                (&[1, 1], rat_int(1)),
            ],
        )
        .unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn inverse_geometric() {
        let r = t_ring(3);
        let one = Series::one(&r);
        let t = Series::var(&r, "t").unwrap();
        let inv = one.sub(&t).inverse().unwrap();
        let expect = one.add(&t).add(&t.pow_u32(2)).add(&t.pow_u32(3));
        assert_eq!(inv, expect);
        assert_eq!(one.inverse().unwrap(), one);
    }

    #[test]
    fn inverse_scaled_round_trip() {
        // inverse(2 - 2t) checked by multiplying back
        let r = t_ring(2);
        let one = Series::one(&r);
        let t = Series::var(&r, "t").unwrap();
        let f = one.sub(&t).scale(&rat_int(2));
        let g = f.inverse().unwrap();
        assert_eq!(f.mul(&g), one);
        assert_eq!(g.coeff(&[0]).unwrap(), rat(1, 2));
        assert_eq!(g.coeff(&[1]).unwrap(), rat(1, 2));
        assert_eq!(g.coeff(&[2]).unwrap(), rat(1, 2));
    }

    #[test]
    fn inverse_zero_constant_rejected() {
        let r = t_ring(3);
        let t = Series::var(&r, "t").unwrap();
        assert_eq!(t.inverse(), Err(SeriesError::SingularInput));
    }

    #[test]
    fn log1_mercator() {
        let r = t_ring(3);
        let one = Series::one(&r);
        let t = Series::var(&r, "t").unwrap();
        assert_eq!(one.log1().unwrap(), Series::zero(&r));
        let lg = one.sub(&t).log1().unwrap();
        let expect = Series::from_terms(
            &r,
            &[
                (&[1], rat_int(-1)),
                (&[2], rat(-1, 2)),
                (&[3], rat(-1, 3)),
            ],
        )
        .unwrap();
        assert_eq!(lg, expect);
    }

    #[test]
    fn exp0_series() {
        let r = VarTable::new(&["q"], &[4]);
        assert_eq!(
            Series::zero(&r).exp0().unwrap(),
            Series::one(&r)
        );
        let q = Series::var(&r, "q").unwrap();
        let e = q.exp0().unwrap();
        let expect = Series::from_terms(
            &r,
            &[
                (&[0], rat_int(1)),
                (&[1], rat_int(1)),
                (&[2], rat(1, 2)),
                (&[3], rat(1, 6)),
                (&[4], rat(1, 24)),
            ],
        )
        .unwrap();
        assert_eq!(e, expect);
    }

    #[test]
    fn exp_log_domain_errors() {
        let r = t_ring(2);
        let one = Series::one(&r);
        let two = Series::constant(&r, rat_int(2));
        assert!(matches!(two.log1(), Err(SeriesError::NonUnitConstant(_))));
        assert!(matches!(one.exp0(), Err(SeriesError::NonzeroConstant(_))));
    }

    #[test]
    fn pow_square_root_round_trip() {
        let r = t_ring(5);
        let one = Series::one(&r);
        let t = Series::var(&r, "t").unwrap();
        let f = one.sub(&t);
        let root = f.pow_const(&rat(1, 2)).unwrap();
        assert_eq!(root.mul(&root), f);
        assert_eq!(f.pow_const(&Rat::zero()).unwrap(), one);
    }

    #[test]
    fn substitute_basics() {
        let r = VarTable::new(&["x", "t"], &[4, 4]);
        let one = Series::one(&r);
        let t = Series::var(&r, "t").unwrap();
        // (1+t)[t -> xt] = 1 + xt
        let s = one.add(&t).substitute("t", &Rat::one(), &[1, 1]).unwrap();
        let expect = Series::from_terms(&r, &[(&[0, 0], rat_int(1)), (&[1, 1], rat_int(1))])
            .unwrap();
        assert_eq!(s, expect);
        // (1+t+t^2)[t -> t^2] = 1 + t^2 + t^4
        let f = one.add(&t).add(&t.pow_u32(2));
        let s = f.substitute("t", &Rat::one(), &[0, 2]).unwrap();
        let expect = Series::from_terms(
            &r,
            &[
                (&[0, 0], rat_int(1)),
                (&[0, 2], rat_int(1)),
                (&[0, 4], rat_int(1)),
            ],
        )
        .unwrap();
        assert_eq!(s, expect);
        assert!(matches!(
            f.substitute("nope", &Rat::one(), &[0, 0]),
            Err(SeriesError::UnknownVariable(_))
        ));
    }

    #[test]
    fn coeff_extraction() {
        let r = t_ring(3);
        let one = Series::one(&r);
        let t = Series::var(&r, "t").unwrap();
        let f = one.add(&t.scale(&rat_int(2)));
        assert_eq!(f.coeff(&[1]).unwrap(), rat_int(2));
        assert_eq!(one.coeff(&[1]).unwrap(), Rat::zero());
        assert_eq!(f.coeff(&[4]), Err(SeriesError::OutOfCaps));
    }

    #[test]
    fn eval_f64_basics() {
        let r = t_ring(20);
        let one = Series::one(&r);
        let t = Series::var(&r, "t").unwrap();
        let mut pt = BTreeMap::new();
        pt.insert("t".to_string(), 0.5);
        assert_eq!(one.add(&t).eval_f64(&pt).unwrap(), 1.5);
        assert_eq!(Series::zero(&r).eval_f64(&pt).unwrap(), 0.0);
        // geometric sum at t = 0.1 with cap 20 vs closed form
        pt.insert("t".to_string(), 0.1);
        let g = one.sub(&t).inverse().unwrap();
        assert!((g.eval_f64(&pt).unwrap() - 1.0 / 0.9).abs() < 1e-12);
        assert!(matches!(
            one.eval_f64(&BTreeMap::new()),
            Err(SeriesError::MissingValue(_))
        ));
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let r = qt_ring(3, 3);
        let one = Series::one(&r);
        let q = Series::var(&r, "q").unwrap();
        let t = Series::var(&r, "t").unwrap();
        let f = one
            .sub(&q.mul(&t).scale(&rat(7, 3)))
            .inverse()
            .unwrap();
        let j = f.to_json();
        let back = Series::from_json(&j).unwrap();
        assert_eq!(back, f);
        assert_eq!(j.to_string(), back.to_json().to_string());
    }

    #[test]
    fn display_readable() {
        let r = qt_ring(2, 2);
        let one = Series::one(&r);
        let q = Series::var(&r, "q").unwrap();
        let t = Series::var(&r, "t").unwrap();
        let f = one.sub(&q.mul(&t).scale(&rat(1, 2)));
        assert_eq!(f.to_string(), "1 - 1/2*q*t");
        assert_eq!(Series::zero(&r).to_string(), "0");
    }
}
