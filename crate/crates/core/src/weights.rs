//! Dominant integral weights of `K = U(p) x U(q)` and the lowest weight
//! modules of `U(p,q)` they determine.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::halfint::{HalfInt, HalfIntMultiset, Segment};

/// The signature `(p, q)` of `U(p,q)`; `N = p + q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSignature {
    pub p: usize,
    pub q: usize,
}

impl GroupSignature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::InvalidInput("U(0,0) has rank zero".into()));
        }
        Ok(GroupSignature { p, q })
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// `rho = ((N-1)/2, (N-3)/2, ..., -(N-1)/2)`.
    pub fn rho(&self) -> Vec<HalfInt> {
        let n = self.n() as i64;
        (0..n).map(|i| HalfInt::from_twice(n - 1 - 2 * i)).collect()
    }

    /// Errors unless `other` is the same signature.
    pub fn expect(&self, other: GroupSignature) -> Result<()> {
        if *self == other {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                expected_p: self.p,
                expected_q: self.q,
                got_p: other.p,
                got_q: other.q,
            })
        }
    }
}

/// A `Δ_c^+`-dominant integral weight `(λ_1..λ_p | λ_{p+1}..λ_N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "KWeightRepr", into = "KWeightRepr")]
pub struct KWeight {
    sig: GroupSignature,
    lambda: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct KWeightRepr {
    p: usize,
    q: usize,
    lambda: Vec<i64>,
}

impl TryFrom<KWeightRepr> for KWeight {
    type Error = Error;
    fn try_from(r: KWeightRepr) -> Result<Self> {
        KWeight::new(r.p, r.q, r.lambda)
    }
}

impl From<KWeight> for KWeightRepr {
    fn from(w: KWeight) -> Self {
        KWeightRepr {
            p: w.sig.p,
            q: w.sig.q,
            lambda: w.lambda,
        }
    }
}

impl KWeight {
    pub fn new(p: usize, q: usize, lambda: Vec<i64>) -> Result<Self> {
        let sig = GroupSignature::new(p, q)?;
        if lambda.len() != sig.n() {
            return Err(Error::InvalidInput(format!(
                "weight for U({p},{q}) needs {} entries, got {}",
                sig.n(),
                lambda.len()
            )));
        }
        let (left, right) = lambda.split_at(p);
        if left.windows(2).any(|w| w[0] < w[1]) || right.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "weight {lambda:?} is not dominant for U({p}) x U({q})"
            )));
        }
        Ok(KWeight { sig, lambda })
    }

    pub fn sig(&self) -> GroupSignature {
        self.sig
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    /// `λ_p - λ_{p+1}`, when both sides are nonempty.
    pub fn gap(&self) -> Option<i64> {
        let p = self.sig.p;
        (p > 0 && self.sig.q > 0).then(|| self.lambda[p - 1] - self.lambda[p])
    }

    pub fn is_degenerate(&self) -> bool {
        self.sig.p == 0 || self.sig.q == 0
    }

    pub fn p_prime(&self) -> usize {
        let p = self.sig.p;
        if p == 0 {
            return 0;
        }
        self.lambda[..p].iter().filter(|&&x| x == self.lambda[p - 1]).count()
    }

    pub fn q_prime(&self) -> usize {
        let p = self.sig.p;
        if self.sig.q == 0 {
            return 0;
        }
        self.lambda[p..].iter().filter(|&&x| x == self.lambda[p]).count()
    }

    /// Harish-Chandra coordinate of the `i`-th p-side entry (0-based):
    /// `λ_i + (p-q+1)/2 - i` in 1-based indexing.
    pub(crate) fn p_coord(&self, i: usize) -> HalfInt {
        let (p, q) = (self.sig.p as i64, self.sig.q as i64);
        HalfInt::from_twice(2 * self.lambda[i] + p - q + 1 - 2 * (i as i64 + 1))
    }

    /// Harish-Chandra coordinate of the `k`-th q-side entry (0-based):
    /// `λ_{p+k} + (N-1)/2 - (k-1)` in 1-based indexing.
    pub(crate) fn q_coord(&self, k: usize) -> HalfInt {
        let n = self.sig.n() as i64;
        HalfInt::from_twice(2 * self.lambda[self.sig.p + k] + n - 1 - 2 * k as i64)
    }

    /// Recover `λ` from its coordinate sequences `P_1 > ... > P_p` and
    /// `Q_1 > ... > Q_q`; fails unless the result is dominant and integral.
    pub fn from_coordinates(p_side: &[HalfInt], q_side: &[HalfInt]) -> Result<Self> {
        let (p, q) = (p_side.len(), q_side.len());
        let n = (p + q) as i64;
        let mut lambda = Vec::with_capacity(p + q);
        for (i, x) in p_side.iter().enumerate() {
            let twice = x.twice() - (p as i64 - q as i64 + 1) + 2 * (i as i64 + 1);
            lambda.push(half_to_int(twice)?);
        }
        for (k, x) in q_side.iter().enumerate() {
            let twice = x.twice() - (n - 1) + 2 * k as i64;
            lambda.push(half_to_int(twice)?);
        }
        KWeight::new(p, q, lambda)
    }

    /// Like [`KWeight::from_coordinates`] with the two sides given as
    /// multisets (listed in decreasing order).
    pub fn from_pq(p_set: &HalfIntMultiset, q_set: &HalfIntMultiset) -> Result<Self> {
        KWeight::from_coordinates(&p_set.values_desc(), &q_set.values_desc())
    }
}

fn half_to_int(twice: i64) -> Result<i64> {
    if twice % 2 == 0 {
        Ok(twice / 2)
    } else {
        Err(Error::InvalidInput(
            "coordinates are not in the integral class of the signature".into(),
        ))
    }
}

impl std::fmt::Display for KWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (l, r) = self.lambda.split_at(self.sig.p);
        let show = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", show(l), show(r))
    }
}

/// `p'`, `q'`, `P`, `Q`, `P'`, `Q'` and `I = P' ∩ Q'` of a weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightStats {
    pub p_prime: usize,
    pub q_prime: usize,
    #[serde(rename = "P")]
    pub p_set: HalfIntMultiset,
    #[serde(rename = "Q")]
    pub q_set: HalfIntMultiset,
    #[serde(rename = "P_seg")]
    pub p_seg: Segment,
    #[serde(rename = "Q_seg")]
    pub q_seg: Segment,
    #[serde(rename = "I")]
    pub i_seg: Segment,
}

pub fn weight_stats(w: &KWeight) -> WeightStats {
    let GroupSignature { p, q } = w.sig;
    let n = w.sig.n() as i64;
    let (p_prime, q_prime) = (w.p_prime(), w.q_prime());

    let p_set: HalfIntMultiset = (0..p).map(|i| w.p_coord(i)).collect();
    let q_set: HalfIntMultiset = (0..q).map(|k| w.q_coord(k)).collect();

    let p_seg = if p == 0 {
        Segment::EMPTY
    } else {
        Segment::new(HalfInt::from_twice(2 * w.lambda[p - 1] - (n - 1)), p_prime)
    };
    let q_seg = if q == 0 {
        Segment::EMPTY
    } else {
        let top = HalfInt::from_twice(2 * w.lambda[p] + n - 1);
        Segment::new(top - (q_prime as i64 - 1), q_prime)
    };
    WeightStats {
        p_prime,
        q_prime,
        p_set,
        q_set,
        p_seg,
        q_seg,
        i_seg: p_seg.intersect(&q_seg),
    }
}

/// The infinitesimal character of `π_λ`, i.e. `λ + ρ` after the shift
/// `(-q, ..., -q | p, ..., p)`.
pub fn inf_char_of_lowest_weight(w: &KWeight) -> HalfIntMultiset {
    let GroupSignature { p, q } = w.sig;
    (0..p)
        .map(|i| w.p_coord(i))
        .chain((0..q).map(|k| w.q_coord(k)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnitarityClass {
    NonUnitary,
    Unitary,
    LimitOfDiscreteSeries,
    DiscreteSeries,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unitarity {
    pub class: UnitarityClass,
    /// Set when `p = 0` or `q = 0`; the module is then finite dimensional.
    pub degenerate: bool,
}

impl Unitarity {
    pub fn is_unitarizable(&self) -> bool {
        self.class != UnitarityClass::NonUnitary
    }
}

pub fn unitarity_class(w: &KWeight) -> Unitarity {
    let Some(gap) = w.gap() else {
        return Unitarity {
            class: UnitarityClass::Unitary,
            degenerate: true,
        };
    };
    let n = w.sig.n() as i64;
    let bound = n - (w.p_prime() + w.q_prime()) as i64;
    let class = if gap > n - 1 {
        UnitarityClass::DiscreteSeries
    } else if gap == n - 1 {
        UnitarityClass::LimitOfDiscreteSeries
    } else if gap >= bound {
        UnitarityClass::Unitary
    } else {
        UnitarityClass::NonUnitary
    };
    Unitarity {
        class,
        degenerate: false,
    }
}

/// Every dominant weight of `U(p,q)` with entries in `[-window, window]`,
/// in lexicographic order.
pub fn dominant_weights(sig: GroupSignature, window: i64) -> Vec<KWeight> {
    fn descending(len: usize, hi: i64, lo: i64) -> Vec<Vec<i64>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (lo..=hi).rev() {
            for mut rest in descending(len - 1, first, lo) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let lefts = descending(sig.p, window, -window);
    let rights = descending(sig.q, window, -window);
    let mut out = Vec::with_capacity(lefts.len() * rights.len());
    for l in &lefts {
        for r in &rights {
            let lambda = l.iter().chain(r).copied().collect();
            out.push(KWeight::new(sig.p, sig.q, lambda).expect("generated weights are dominant"));
        }
    }
    out.sort();
    out
}
