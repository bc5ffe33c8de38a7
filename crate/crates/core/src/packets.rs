//! Good A-parameters `ψ = ⊕ χ_{t_i} ⊗ S_{a_i}` of `U(p,q)`, their packets
//! realized by cohomological induction, and the closed-form classification
//! of the unitary lowest weight modules they contain.

use std::fmt;

use log::{debug, info};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohind::{InductionDescriptor, ThetaData};
use crate::error::{Error, Result};
use crate::halfint::{partition_into_segments, HalfInt, HalfIntMultiset, Segment};
use crate::oracle;
use crate::tableaux::{AntiTableau, SignedTableau};
use crate::weights::{
    inf_char_of_lowest_weight, unitarity_class, weight_stats, GroupSignature, KWeight,
};

/// One summand `χ_t ⊗ S_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Summand {
    pub t: i64,
    pub a: usize,
}

impl Summand {
    /// `[(t-a+1)/2, (t+a-1)/2]`.
    pub fn segment(&self) -> Segment {
        Segment::new(HalfInt::from_twice(self.t - self.a as i64 + 1), self.a)
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ_{}⊗S_{}", self.t, self.a)
    }
}

/// A good A-parameter, kept in canonical order: `t` decreasing, and `a`
/// decreasing among equal `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AParameterRepr", into = "AParameterRepr")]
pub struct AParameter {
    sig: GroupSignature,
    summands: Vec<Summand>,
}

#[derive(Serialize, Deserialize)]
struct AParameterRepr {
    p: usize,
    q: usize,
    summands: Vec<Summand>,
}

impl TryFrom<AParameterRepr> for AParameter {
    type Error = Error;
    fn try_from(r: AParameterRepr) -> Result<Self> {
        AParameter::new(GroupSignature::new(r.p, r.q)?, r.summands)
    }
}

impl From<AParameter> for AParameterRepr {
    fn from(psi: AParameter) -> Self {
        AParameterRepr {
            p: psi.sig.p,
            q: psi.sig.q,
            summands: psi.summands,
        }
    }
}

impl AParameter {
    /// Validate and sort into canonical order. Summands are named by their
    /// 1-based position in the input.
    pub fn new(sig: GroupSignature, mut summands: Vec<Summand>) -> Result<Self> {
        let n = sig.n();
        for (k, s) in summands.iter().enumerate() {
            if s.a == 0 {
                return Err(Error::InvalidInput(format!("summand {} ({s}) has a = 0", k + 1)));
            }
            if (s.t + s.a as i64 + n as i64).rem_euclid(2) != 0 {
                return Err(Error::InvalidInput(format!(
                    "summand {} ({s}) is not good: t + a + N = {} is odd",
                    k + 1,
                    s.t + s.a as i64 + n as i64
                )));
            }
        }
        let total: usize = summands.iter().map(|s| s.a).sum();
        if total != n {
            return Err(Error::InvalidInput(format!(
                "summand dimensions add up to {total}, expected N = {n}"
            )));
        }
        summands.sort_by(|x, y| y.t.cmp(&x.t).then(y.a.cmp(&x.a)));
        Ok(AParameter { sig, summands })
    }

    /// The parameter whose summands have the given segments.
    pub fn from_segments(sig: GroupSignature, segments: &[Segment]) -> Result<Self> {
        let summands = segments
            .iter()
            .map(|s| Summand {
                t: s.endpoint_sum(),
                a: s.len(),
            })
            .collect();
        AParameter::new(sig, summands)
    }

    pub fn sig(&self) -> GroupSignature {
        self.sig
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn a(&self, i: usize) -> usize {
        self.summands[i].a
    }

    pub fn a_before(&self, i: usize) -> usize {
        self.summands[..i].iter().map(|s| s.a).sum()
    }

    /// `ν_i` in canonical order.
    pub fn segments(&self) -> Vec<Segment> {
        self.summands.iter().map(Summand::segment).collect()
    }
}

impl fmt::Display for AParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// `χ_ψ`, the disjoint union of the `ν_i`.
pub fn inf_char(psi: &AParameter) -> HalfIntMultiset {
    HalfIntMultiset::from_segments(&psi.segments())
}

/// Every `((p_i,q_i))` with `p_i + q_i = a_i`, `Σ p_i = p`; larger `p_1`
/// first, then larger `p_2`, and so on.
#[allow(non_snake_case)]
pub fn enumerate_D(psi: &AParameter) -> Vec<ThetaData> {
    fn go(
        a: &[usize],
        p_left: usize,
        q_left: usize,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some((&ai, rest)) = a.split_first() else {
            if p_left == 0 && q_left == 0 {
                out.push(acc.clone());
            }
            return;
        };
        for pi in (0..=ai.min(p_left)).rev() {
            let qi = ai - pi;
            if qi > q_left {
                continue;
            }
            acc.push((pi, qi));
            go(rest, p_left - pi, q_left - qi, acc, out);
            acc.pop();
        }
    }
    let a: Vec<usize> = psi.summands.iter().map(|s| s.a).collect();
    let mut out = Vec::new();
    go(&a, psi.sig.p, psi.sig.q, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|blocks| ThetaData::new(blocks).expect("blocks of a good parameter are nonempty"))
        .collect()
}

/// The holomorphic member `d_0` of `D(ψ)` and its middle block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DZero {
    /// 1-based position of the middle block; `None` when `p = 0`.
    pub j: Option<usize>,
    pub d0: ThetaData,
    pub degenerate: bool,
}

impl DZero {
    /// 0-based position of the middle block.
    pub fn j_index(&self) -> Option<usize> {
        self.j.map(|j| j - 1)
    }
}

pub fn d_zero(psi: &AParameter) -> DZero {
    let GroupSignature { p, q } = psi.sig;
    let a: Vec<usize> = psi.summands.iter().map(|s| s.a).collect();
    if p == 0 {
        let blocks = a.iter().map(|&ai| (0, ai)).collect();
        return DZero {
            j: None,
            d0: ThetaData::new(blocks).expect("nonempty blocks"),
            degenerate: true,
        };
    }
    let mut acc = 0;
    let j = a
        .iter()
        .position(|&ai| {
            acc += ai;
            acc >= p
        })
        .expect("a sums to N >= p");
    let before: usize = a[..j].iter().sum();
    let after: usize = a[j + 1..].iter().sum();
    let mut blocks: Vec<(usize, usize)> = a[..j].iter().map(|&ai| (ai, 0)).collect();
    blocks.push((p - before, q - after));
    blocks.extend(a[j + 1..].iter().map(|&ai| (0, ai)));
    DZero {
        j: Some(j + 1),
        d0: ThetaData::new(blocks).expect("nonempty blocks"),
        degenerate: false,
    }
}

/// `Ann` and `AS` of a nonzero member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Invariants {
    pub ann: AntiTableau,
    #[serde(rename = "as")]
    pub as_tab: SignedTableau,
}

impl Invariants {
    pub fn pair(&self) -> (AntiTableau, SignedTableau) {
        (self.ann.clone(), self.as_tab.clone())
    }
}

impl From<(AntiTableau, SignedTableau)> for Invariants {
    fn from((ann, as_tab): (AntiTableau, SignedTableau)) -> Self {
        Invariants { ann, as_tab }
    }
}

/// The module `A_d(ψ)` attached to one `d ∈ D(ψ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PacketMember {
    pub d: ThetaData,
    pub descriptor: InductionDescriptor,
    pub epsilon: Vec<i8>,
    pub nonzero: bool,
    pub invariants: Option<Invariants>,
}

/// `ε_d(e_i) = (-1)^{p_i a_{<i} + q_i (a_{<i}+1) + a_i (a_i-1)/2}`.
pub fn epsilon(d: &ThetaData) -> Vec<i8> {
    d.blocks()
        .iter()
        .enumerate()
        .map(|(i, &(pi, qi))| {
            let below = d.a_before(i);
            let ai = pi + qi;
            let e = pi * below + qi * (below + 1) + ai * (ai - 1) / 2;
            if e.is_multiple_of(2) {
                1
            } else {
                -1
            }
        })
        .collect()
}

pub fn member(psi: &AParameter, d: &ThetaData) -> Result<PacketMember> {
    if d.sig() != psi.sig {
        return Err(Error::NotInPacket(format!(
            "{:?} is a datum for U({},{}), not U({},{})",
            d.blocks(),
            d.sig().p,
            d.sig().q,
            psi.sig.p,
            psi.sig.q
        )));
    }
    if d.len() != psi.len() || (0..d.len()).any(|i| d.a(i) != psi.a(i)) {
        return Err(Error::NotInPacket(format!(
            "block sizes of {:?} do not match the summands of {psi}",
            d.blocks()
        )));
    }
    let n = psi.sig.n() as i64;
    let values = psi
        .summands
        .iter()
        .enumerate()
        .map(|(i, s)| (s.t + s.a as i64 - n) / 2 + psi.a_before(i) as i64)
        .collect();
    let descriptor = InductionDescriptor::new(d.clone(), values)?;
    if descriptor.segments() != psi.segments().as_slice() {
        return Err(Error::Inconsistency(format!(
            "segments of A_d(ψ) for d = {:?} differ from those of {psi}",
            d.blocks()
        )));
    }
    let invariants = descriptor.invariants()?.map(Invariants::from);
    Ok(PacketMember {
        d: d.clone(),
        epsilon: epsilon(d),
        nonzero: invariants.is_some(),
        invariants,
        descriptor,
    })
}

/// All members, in the order of [`enumerate_D`]. Nonzero members are
/// checked to have pairwise distinct invariants.
pub fn packet(psi: &AParameter) -> Result<Vec<PacketMember>> {
    let members = enumerate_D(psi)
        .par_iter()
        .map(|d| member(psi, d))
        .collect::<Result<Vec<_>>>()?;
    let nonzero: Vec<&PacketMember> = members.iter().filter(|m| m.nonzero).collect();
    for (x, m) in nonzero.iter().enumerate() {
        for m2 in &nonzero[x + 1..] {
            if m.invariants == m2.invariants {
                return Err(Error::Inconsistency(format!(
                    "members {:?} and {:?} of {psi} share their invariants",
                    m.d.blocks(),
                    m2.d.blocks()
                )));
            }
        }
    }
    Ok(members)
}

/// `ν_{<j}`, `ν_j`, `ν_{>j}` and the middle block `(p_j, q_j)` of `d_0`.
#[derive(Debug, Clone)]
struct Split {
    before: HalfIntMultiset,
    nu_j: Segment,
    after: HalfIntMultiset,
    p_j: usize,
    q_j: usize,
}

impl Split {
    fn of(psi: &AParameter) -> Option<Split> {
        let dz = d_zero(psi);
        let j = dz.j_index()?;
        let segs = psi.segments();
        let (p_j, q_j) = dz.d0.blocks()[j];
        Some(Split {
            before: HalfIntMultiset::from_segments(&segs[..j]),
            nu_j: segs[j],
            after: HalfIntMultiset::from_segments(&segs[j + 1..]),
            p_j,
            q_j,
        })
    }

    fn nu_j(&self) -> HalfIntMultiset {
        self.nu_j.to_multiset()
    }

    fn meet_before(&self) -> HalfIntMultiset {
        self.nu_j().intersection(&self.before)
    }

    fn meet_after(&self) -> HalfIntMultiset {
        self.nu_j().intersection(&self.after)
    }

    /// The closed-form nonvanishing test for `A_{d_0}(ψ)`.
    fn nonvanishing(&self) -> bool {
        self.before.is_multiplicity_free()
            && self.after.is_multiplicity_free()
            && self.meet_after().len() <= self.p_j
            && self.meet_before().len() <= self.q_j
    }
}

/// The closed-form nonvanishing test for `A_{d_0}(ψ)`: `ν_{<j}` and `ν_{>j}`
/// multiplicity free, `#(ν_j ∩ ν_{>j}) ≤ p_j` and `#(ν_j ∩ ν_{<j}) ≤ q_j`.
/// `None` when `p = 0`.
pub fn d0_nonvanishing(psi: &AParameter) -> Option<bool> {
    Split::of(psi).map(|s| s.nonvanishing())
}

fn require_unitarizable(w: &KWeight) -> Result<()> {
    if unitarity_class(w).is_unitarizable() {
        Ok(())
    } else {
        Err(Error::NotUnitarizable(w.to_string()))
    }
}

/// Which of the four gap regimes a weight falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GapCase {
    /// `N - p' ≤ gap < N - q'`.
    One,
    /// `N - q' ≤ gap < N - p'`.
    Two,
    /// `gap ≥ N - p'` and `gap ≥ N - q'`.
    Three,
    /// `gap < N - p'` and `gap < N - q'`.
    Four,
}

/// `None` when `p = 0` or `q = 0`.
pub fn gap_case(w: &KWeight) -> Option<GapCase> {
    let gap = w.gap()?;
    let n = w.sig().n() as i64;
    let lo_p = gap >= n - w.p_prime() as i64;
    let lo_q = gap >= n - w.q_prime() as i64;
    Some(match (lo_p, lo_q) {
        (true, false) => GapCase::One,
        (false, true) => GapCase::Two,
        (true, true) => GapCase::Three,
        (false, false) => GapCase::Four,
    })
}

/// Whether `Π(ψ)` contains `π_λ`, decided by the closed-form criterion.
/// When `p = 0` or `q = 0` the criterion does not apply and the tableau
/// oracle answers instead.
pub fn contains_lowest_weight(psi: &AParameter, w: &KWeight) -> Result<bool> {
    psi.sig.expect(w.sig())?;
    require_unitarizable(w)?;
    if inf_char(psi) != inf_char_of_lowest_weight(w) {
        debug!("{psi} and {w} have different infinitesimal characters");
        return Ok(false);
    }
    let Some(case) = gap_case(w) else {
        info!("oracle fallback: contains_lowest_weight({psi}, {w}) with p or q zero");
        return oracle::oracle_contains(psi, w);
    };
    let split = Split::of(psi).expect("p >= 1 here");
    if !split.nonvanishing() {
        return Ok(false);
    }

    let s = weight_stats(w);
    let GroupSignature { p, .. } = w.sig();
    let n = w.sig().n() as i64;
    let lam = w.lambda();
    let window = Segment::from_bounds(
        HalfInt::from_twice(2 * lam[p - 1] - (n - 1)),
        HalfInt::from_twice(2 * lam[p] + (n - 1)),
    );
    let nu_j = split.nu_j;
    let upto_j = split.before.union(&split.nu_j());
    let i_set = s.i_seg.to_multiset();

    Ok(match case {
        GapCase::One => window.is_subset_of(&nu_j) && nu_j.is_subset_of(&s.p_seg),
        GapCase::Two => {
            upto_j == s.p_set || (window.is_subset_of(&nu_j) && nu_j.is_subset_of(&s.q_seg))
        }
        GapCase::Three => {
            (s.p_set.is_subset_of(&upto_j) && upto_j.is_subset_of(&s.p_set.union(&i_set)))
                || (s.i_seg.is_subset_of(&nu_j) && nu_j.is_subset_of(&s.q_seg))
        }
        GapCase::Four => window == nu_j,
    })
}

/// Which branch produced the lowest K-type of a packet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PacketCase {
    /// `q_j = 0`.
    One,
    /// `p_j = #(ν_j ∩ ν_{>j})`, `q_j ≠ 0`.
    Two,
    /// `q_j = #(ν_j ∩ ν_{<j}) ≠ 0`.
    Three,
    /// Everything else.
    Four,
}

/// The branch of the closed form that applies to `ψ`, or `None` when
/// `A_{d_0}(ψ)` vanishes or `p = 0`.
pub fn packet_case(psi: &AParameter) -> Option<PacketCase> {
    let s = Split::of(psi)?;
    if !s.nonvanishing() {
        return None;
    }
    let meet_after = s.meet_after().len();
    let meet_before = s.meet_before().len();
    Some(if s.q_j == 0 {
        PacketCase::One
    } else if s.p_j == meet_after {
        PacketCase::Two
    } else if s.q_j == meet_before {
        PacketCase::Three
    } else {
        PacketCase::Four
    })
}

/// The lowest K-type of the unitary lowest weight module in `Π(ψ)`, if
/// there is one. When `p = 0` the closed form does not apply and the
/// tableau oracle answers instead.
pub fn lowest_weight_of_packet(psi: &AParameter) -> Result<Option<KWeight>> {
    let Some(s) = Split::of(psi) else {
        info!("oracle fallback: lowest_weight_of_packet({psi}) with p = 0");
        let found = oracle::oracle_lowest_weights(psi)?;
        return match found.len() {
            0 => Ok(None),
            1 => Ok(found.into_iter().next()),
            k => Err(Error::Inconsistency(format!(
                "{k} lowest weight modules match A_d0({psi})"
            ))),
        };
    };
    let Some(case) = packet_case(psi) else {
        return Ok(None);
    };
    let chi = inf_char(psi);
    let nu_j = s.nu_j();
    let (p_set, q_set) = match case {
        PacketCase::One => (s.before.union(&nu_j), s.after.clone()),
        PacketCase::Two => {
            let m = s.meet_after();
            (s.before.union(&m), nu_j.union(&s.after).difference(&m))
        }
        PacketCase::Three => {
            let m = s.meet_before();
            (s.before.union(&nu_j).difference(&m), m.union(&s.after))
        }
        PacketCase::Four => {
            let w = case_four_weight(psi, &s)?;
            if !unitarity_class(&w).is_unitarizable() {
                return Err(Error::Inconsistency(format!(
                    "{psi} yields the non-unitarizable weight {w}"
                )));
            }
            return Ok(Some(w));
        }
    };
    debug_assert_eq!(p_set.union(&q_set), chi);
    let w = KWeight::from_pq(&p_set, &q_set).map_err(|e| {
        Error::Inconsistency(format!(
            "{psi}: P = {p_set}, Q = {q_set} do not invert to a dominant weight ({e})"
        ))
    })?;
    psi.sig.expect(w.sig())?;
    if !unitarity_class(&w).is_unitarizable() {
        return Err(Error::Inconsistency(format!(
            "{psi} yields the non-unitarizable weight {w}"
        )));
    }
    Ok(Some(w))
}

/// The piecewise formula for the fourth branch, checked against the
/// set-level description `P = {ν_{j,i_0}, ..., ν_{j,#ν_j}} ⊔ {σ > ν_{j,i_0}}`.
fn case_four_weight(psi: &AParameter, s: &Split) -> Result<KWeight> {
    let GroupSignature { p, q } = psi.sig;
    let n = psi.sig.n();
    let nu: Vec<HalfInt> = s.nu_j.values_desc().collect();
    let len = nu.len();
    let sigma = s.before.union(&s.after).values_desc();
    let above = |x: HalfInt| sigma.iter().filter(|&&y| y > x).count();
    let i0 = (1..=len)
        .find(|&i| len + 1 - i + above(nu[i - 1]) == p)
        .ok_or_else(|| {
            Error::Inconsistency(format!("{psi}: no index i_0 in 1..={len} fits p = {p}"))
        })?;

    let half = |twice: i64| HalfInt::from_twice(twice);
    let int = |x: HalfInt, what: &str| {
        x.to_int().ok_or_else(|| {
            Error::Inconsistency(format!("{psi}: {what} evaluates to the half-integer {x}"))
        })
    };
    let mut lam = Vec::with_capacity(n);
    for i in 1..=n {
        let ii = i as i64;
        let x = if i + len < p + i0 {
            sigma[i - 1] - half(p as i64 - q as i64 + 1) + ii
        } else if i <= p {
            nu[0] + half(n as i64 + 1) - len as i64
        } else if i < p + i0 {
            nu[0] - half(n as i64 - 1)
        } else {
            sigma[i - len - 1] - half(n as i64 + 1) - p as i64 + ii
        };
        lam.push(int(x, &format!("λ_{i}"))?);
    }
    let w = KWeight::new(p, q, lam.clone()).map_err(|e| {
        Error::Inconsistency(format!("{psi}: λ = {lam:?} is not dominant ({e})"))
    })?;

    let cut = nu[i0 - 1];
    let p_set: HalfIntMultiset = nu[i0 - 1..]
        .iter()
        .copied()
        .chain(sigma.iter().copied().filter(|&y| y > cut))
        .collect();
    if p_set != weight_stats(&w).p_set {
        return Err(Error::Inconsistency(format!(
            "{psi}: the piecewise weight {w} has P = {} instead of {p_set}",
            weight_stats(&w).p_set
        )));
    }
    Ok(w)
}

/// Every good parameter whose packet contains `π_λ`.
pub fn packets_containing(w: &KWeight) -> Result<Vec<AParameter>> {
    require_unitarizable(w)?;
    let chi = inf_char_of_lowest_weight(w);
    let mut out = Vec::new();
    for parts in partition_into_segments(&chi) {
        let psi = AParameter::from_segments(w.sig(), &parts)?;
        if contains_lowest_weight(&psi, w)? {
            out.push(psi);
        }
    }
    Ok(out)
}

/// Every good parameter of `U(p,q)` whose infinitesimal character has all
/// entries in `[-bound, bound]`, in a fixed order.
pub fn good_parameters(sig: GroupSignature, bound: HalfInt) -> Vec<AParameter> {
    let n = sig.n();
    // Entries of χ_ψ lie in (N-1)/2 + Z.
    let parity = (n as i64 - 1).rem_euclid(2);
    let lo = -bound.twice();
    let first = if (lo - parity).rem_euclid(2) == 0 { lo } else { lo + 1 };
    let mut segs = Vec::new();
    let mut start = first;
    while start <= bound.twice() {
        for len in 1..=n {
            let s = Segment::new(HalfInt::from_twice(start), len);
            if s.end().twice() > bound.twice() {
                break;
            }
            segs.push(s);
        }
        start += 2;
    }

    fn go(
        segs: &[Segment],
        from: usize,
        left: usize,
        acc: &mut Vec<Segment>,
        out: &mut Vec<Vec<Segment>>,
    ) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for k in from..segs.len() {
            if segs[k].len() <= left {
                acc.push(segs[k]);
                go(segs, k, left - segs[k].len(), acc, out);
                acc.pop();
            }
        }
    }
    let mut choices = Vec::new();
    go(&segs, 0, n, &mut Vec::new(), &mut choices);
    choices
        .iter()
        .map(|c| AParameter::from_segments(sig, c).expect("segments in the integral class"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> GroupSignature {
        GroupSignature::new(p, q).unwrap()
    }

    fn psi(p: usize, q: usize, ta: &[(i64, usize)]) -> AParameter {
        AParameter::new(
            sig(p, q),
            ta.iter().map(|&(t, a)| Summand { t, a }).collect(),
        )
        .unwrap()
    }

    fn weight(p: usize, q: usize, lam: &[i64]) -> KWeight {
        KWeight::new(p, q, lam.to_vec()).unwrap()
    }

    fn hs(twices: &[i64]) -> HalfIntMultiset {
        twices.iter().map(|&t| HalfInt::from_twice(t)).collect()
    }

    #[test]
    fn canonical_order_and_goodness() {
        let x = psi(1, 2, &[(-2, 1), (1, 2)]);
        assert_eq!(x.summands()[0], Summand { t: 1, a: 2 });
        let y = psi(2, 2, &[(1, 1), (1, 3)]);
        assert_eq!(y.summands()[0].a, 3);

        let err = AParameter::new(sig(1, 1), vec![Summand { t: 0, a: 1 }, Summand { t: 1, a: 1 }])
            .unwrap_err();
        assert!(matches!(err, Error::InvalidInput(ref m) if m.contains("summand 1")));
        assert!(AParameter::new(sig(1, 1), vec![Summand { t: 0, a: 1 }]).is_err());
    }

    #[test]
    fn inf_char_examples() {
        assert_eq!(inf_char(&psi(1, 1, &[(0, 2)])), hs(&[1, -1]));
        assert_eq!(inf_char(&psi(1, 1, &[(1, 1), (-1, 1)])), hs(&[1, -1]));
        assert_eq!(inf_char(&psi(1, 2, &[(1, 2), (-2, 1)])), hs(&[2, 0, -2]));
    }

    #[test]
    fn enumerate_d_examples() {
        let blocks = |x: &AParameter| -> Vec<Vec<(usize, usize)>> {
            enumerate_D(x).iter().map(|d| d.blocks().to_vec()).collect()
        };
        assert_eq!(blocks(&psi(1, 1, &[(0, 2)])), vec![vec![(1, 1)]]);
        assert_eq!(
            blocks(&psi(1, 1, &[(1, 1), (-1, 1)])),
            vec![vec![(1, 0), (0, 1)], vec![(0, 1), (1, 0)]]
        );
        assert_eq!(blocks(&psi(2, 1, &[(4, 3)])), vec![vec![(2, 1)]]);
    }

    #[test]
    fn d_zero_examples() {
        let z = d_zero(&psi(1, 1, &[(1, 1), (-1, 1)]));
        assert_eq!((z.j, z.d0.blocks()), (Some(1), &[(1, 0), (0, 1)][..]));
        let z = d_zero(&psi(1, 1, &[(0, 2)]));
        assert_eq!((z.j, z.d0.blocks()), (Some(1), &[(1, 1)][..]));
        let z = d_zero(&psi(2, 3, &[(1, 2), (0, 3)]));
        assert_eq!((z.j, z.d0.blocks()), (Some(1), &[(2, 0), (0, 3)][..]));
        let z = d_zero(&psi(0, 2, &[(1, 1), (-1, 1)]));
        assert!(z.degenerate && z.j.is_none());
        assert_eq!(z.d0.blocks(), &[(0, 1), (0, 1)]);
    }

    #[test]
    fn member_examples() {
        let x = psi(1, 1, &[(0, 2)]);
        let m = member(&x, &ThetaData::new(vec![(1, 1)]).unwrap()).unwrap();
        assert_eq!(m.descriptor.values(), &[0]);
        assert_eq!(m.epsilon, vec![1]);
        assert!(m.nonzero);

        let x = psi(1, 1, &[(1, 1), (-1, 1)]);
        let m = member(&x, &ThetaData::new(vec![(1, 0), (0, 1)]).unwrap()).unwrap();
        assert_eq!(m.epsilon, vec![1, 1]);
        assert!(m.nonzero);

        let x = psi(2, 0, &[(1, 1), (1, 1)]);
        let m = member(&x, &ThetaData::new(vec![(1, 0), (1, 0)]).unwrap()).unwrap();
        assert!(!m.nonzero && m.invariants.is_none());

        let bad = ThetaData::new(vec![(1, 1)]).unwrap();
        assert!(matches!(member(&x, &bad), Err(Error::NotInPacket(_))));
    }

    #[test]
    fn packet_examples() {
        assert_eq!(packet(&psi(1, 1, &[(0, 2)])).unwrap().len(), 1);
        let pk = packet(&psi(1, 1, &[(1, 1), (-1, 1)])).unwrap();
        assert_eq!(pk.len(), 2);
        assert!(pk.iter().all(|m| m.nonzero));
        assert_ne!(pk[0].invariants, pk[1].invariants);
        assert!(packet(&psi(2, 0, &[(1, 1), (1, 1)])).unwrap().iter().any(|m| !m.nonzero));
    }

    #[test]
    fn epsilon_ignores_t() {
        let d = ThetaData::new(vec![(1, 1), (0, 1), (2, 0)]).unwrap();
        let x = psi(3, 2, &[(5, 2), (2, 1), (-1, 2)]);
        let y = psi(3, 2, &[(9, 2), (0, 1), (-5, 2)]);
        assert_eq!(member(&x, &d).unwrap().epsilon, member(&y, &d).unwrap().epsilon);
    }

    #[test]
    fn contains_examples() {
        let w = weight(1, 1, &[1, -1]);
        assert!(contains_lowest_weight(&psi(1, 1, &[(1, 1), (-1, 1)]), &w).unwrap());
        assert!(!contains_lowest_weight(&psi(1, 1, &[(0, 2)]), &w).unwrap());
        let w = weight(1, 1, &[0, 0]);
        assert!(contains_lowest_weight(&psi(1, 1, &[(0, 2)]), &w).unwrap());
    }

    #[test]
    fn lowest_weight_examples() {
        let lw = |x: AParameter| lowest_weight_of_packet(&x).unwrap().map(|w| w.lambda().to_vec());
        assert_eq!(lw(psi(1, 1, &[(0, 2)])), Some(vec![0, 0]));
        assert_eq!(lw(psi(2, 1, &[(0, 3)])), Some(vec![0, 0, 0]));
        assert_eq!(lw(psi(1, 2, &[(1, 2), (-2, 1)])), Some(vec![1, 0, -1]));
        assert_eq!(lw(psi(1, 1, &[(1, 1), (-1, 1)])), Some(vec![1, -1]));
        assert_eq!(packet_case(&psi(1, 1, &[(0, 2)])), Some(PacketCase::Four));
    }

    #[test]
    fn packets_containing_examples() {
        let names = |w: KWeight| -> Vec<String> {
            packets_containing(&w).unwrap().iter().map(|x| x.to_string()).collect()
        };
        assert_eq!(names(weight(1, 1, &[1, -1])), vec!["χ_1⊗S_1 ⊕ χ_-1⊗S_1"]);
        assert_eq!(names(weight(1, 1, &[0, 0])), vec!["χ_0⊗S_2"]);
        assert_eq!(names(weight(1, 1, &[1, 0])), vec!["χ_1⊗S_1 ⊕ χ_1⊗S_1"]);
    }

    #[test]
    fn good_parameters_cover_the_window() {
        let all = good_parameters(sig(1, 1), HalfInt::from_twice(1));
        let names: Vec<String> = all.iter().map(|x| x.to_string()).collect();
        assert_eq!(all.len(), 4);
        assert!(names.contains(&"χ_0⊗S_2".to_string()));
        assert!(names.contains(&"χ_1⊗S_1 ⊕ χ_-1⊗S_1".to_string()));
        for x in &all {
            let m = inf_char(x);
            assert!(m.max().unwrap().twice() <= 1 && m.min().unwrap().twice() >= -1);
        }
    }
}
