//! Path counts and the higher q,t-Catalan polynomials of Fuss frames.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::fuss::invert_fuss;
use crate::path::{enumerate_paths, DyckPath, Frame};

/// Sparse polynomial in `q` and `t` with nonnegative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QtPolynomial {
    terms: BTreeMap<(u64, u64), BigUint>,
}

impl QtPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn monomial(q: u64, t: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(q, t, BigUint::one());
        p
    }

    pub fn add_term(&mut self, q: u64, t: u64, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.terms.entry((q, t)).or_default() += coeff;
    }

    pub fn coeff(&self, q: u64, t: u64) -> BigUint {
        self.terms.get(&(q, t)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by total degree, then by `q` exponent.
    pub fn terms(&self) -> Vec<(u64, u64, BigUint)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(&(q, t), c)| (q, t, c.clone()))
            .collect();
        out.sort_by_key(|&(q, t, _)| (q + t, q));
        out
    }

    /// Value at `q = t = 1`.
    pub fn eval_one(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn max_q_degree(&self) -> Option<u64> {
        self.terms.keys().map(|&(q, _)| q).max()
    }

    pub fn max_t_degree(&self) -> Option<u64> {
        self.terms.keys().map(|&(_, t)| t).max()
    }

    /// Swap the roles of `q` and `t`.
    pub fn swapped(&self) -> Self {
        QtPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(q, t), c)| ((t, q), c.clone()))
                .collect(),
        }
    }

    /// Multiply by `q^a t^b` for each `(a, b)` term and sum, i.e. `self · other`.
    pub fn mul(&self, other: &QtPolynomial) -> QtPolynomial {
        let mut out = QtPolynomial::zero();
        for (&(q1, t1), c1) in &self.terms {
            for (&(q2, t2), c2) in &other.terms {
                out.add_term(q1 + q2, t1 + t2, c1 * c2);
            }
        }
        out
    }
}

impl AddAssign<&QtPolynomial> for QtPolynomial {
    fn add_assign(&mut self, rhs: &QtPolynomial) {
        for (&(q, t), c) in &rhs.terms {
            self.add_term(q, t, c.clone());
        }
    }
}

impl Add for QtPolynomial {
    type Output = QtPolynomial;

    fn add(mut self, rhs: QtPolynomial) -> QtPolynomial {
        self += &rhs;
        self
    }
}

impl FromIterator<(u64, u64)> for QtPolynomial {
    fn from_iter<I: IntoIterator<Item = (u64, u64)>>(iter: I) -> Self {
        let mut p = QtPolynomial::zero();
        for (q, t) in iter {
            p.add_term(q, t, BigUint::one());
        }
        p
    }
}

fn power(var: &str, e: u64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Highest total degree first, `q`-heavy terms first within a degree.
impl fmt::Display for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .rev()
            .map(|(q, t, c)| {
                let vars: Vec<String> = [power("q", q), power("t", t)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect();
                match (c.is_one(), vars.is_empty()) {
                    (_, true) => c.to_string(),
                    (true, false) => vars.join(" "),
                    (false, false) => format!("{c} {}", vars.join(" ")),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// JSON form: sorted array of `[qexp, texp, "coeff"]`.
impl Serialize for QtPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self.terms();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for (q, t, c) in terms {
            seq.serialize_element(&(q, t, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QtPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(u64, u64, String)> = Vec::deserialize(deserializer)?;
        let mut p = QtPolynomial::zero();
        for (q, t, c) in raw {
            let c: BigUint = c.parse().map_err(serde::de::Error::custom)?;
            p.add_term(q, t, c);
        }
        Ok(p)
    }
}

/// `C(m+n, m) / (m+n)`, the number of Dyck paths in the frame.
pub fn path_count(frame: &Frame) -> BigUint {
    let total = frame.m() + frame.n();
    let small = frame.m().min(frame.n());
    let mut binom = BigUint::one();
    for i in 0..small {
        binom *= total - i;
        binom /= i + 1;
    }
    binom / total
}

fn fuss_frame(k: u64, n: u64) -> Result<Frame> {
    Frame::new(k * n + 1, n)
}

/// `Σ q^dinv t^area` over a stream of paths.
pub fn dinv_area_sum<I: IntoIterator<Item = DyckPath>>(paths: I) -> QtPolynomial {
    paths.into_iter().map(|p| (p.dinv(), p.area())).collect()
}

/// `Σ q^area t^bounce` over a stream of paths in a Fuss frame.
pub fn area_bounce_sum<I: IntoIterator<Item = DyckPath>>(paths: I) -> Result<QtPolynomial> {
    let mut out = QtPolynomial::zero();
    for p in paths {
        let bounce = invert_fuss(&p)?.area();
        out.add_term(p.area(), bounce, BigUint::one());
    }
    Ok(out)
}

/// `Cₙ⁽ᵏ⁾(q,t) = Σ q^dinv t^area` over `𝒟_{kn+1,n}`.
pub fn catalan_qt(k: u64, n: u64) -> Result<QtPolynomial> {
    Ok(dinv_area_sum(enumerate_paths(fuss_frame(k, n)?)))
}

/// `Σ q^area t^bounce` over `𝒟_{kn+1,n}`, bounce via the linear-time inverse.
pub fn catalan_qt_via_bounce(k: u64, n: u64) -> Result<QtPolynomial> {
    area_bounce_sum(enumerate_paths(fuss_frame(k, n)?))
}

/// One step down in `n`: sum over `D' ∈ 𝒟_{m',n'}` (with `n' = n − 1`,
/// `m' = kn' + 1`) of `q^dinv(D') t^area(D')` times
/// `Σᵢ [rᵢ < m'] q^{i−1} t^{kn' − rᵢ}`, where `rᵢ` is the `i`-th smallest
/// rank of `D'`.
pub fn catalan_step(k: u64, n: u64) -> Result<QtPolynomial> {
    if n < 2 {
        return catalan_qt(k, n);
    }
    let reduced = fuss_frame(k, n - 1)?;
    let bound = reduced.m() as i64;
    let top = (k * (n - 1)) as i64;
    let mut out = QtPolynomial::zero();
    for p in enumerate_paths(reduced) {
        let base = QtPolynomial::monomial(p.dinv(), p.area());
        let inner: QtPolynomial = p
            .rank_sequence()
            .values()
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r < bound)
            .map(|(i, &r)| (i as u64, (top - r) as u64))
            .collect();
        out += &base.mul(&inner);
    }
    Ok(out)
}
