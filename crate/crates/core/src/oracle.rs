//! Ground truth from the tableau pipeline, and exhaustive sweeps comparing
//! it with the closed-form classification.

use log::debug;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohind::{
    holomorphic_lowest_ktype, lowest_weight_invariants, normalize_blocks, range_class,
    realize_lowest_weight, swap_rewrite, InductionDescriptor, SwapSide, ThetaData,
};
use crate::error::{Error, Result};
use crate::halfint::{partition_into_segments, HalfInt, HalfIntMultiset, Segment};
use crate::packets::{
    contains_lowest_weight, d0_nonvanishing, d_zero, inf_char, lowest_weight_of_packet, member, packet,
    good_parameters, AParameter, Invariants,
};
use crate::tableaux::as_pair_equal;
use crate::weights::{
    dominant_weights, inf_char_of_lowest_weight, unitarity_class, weight_stats, GroupSignature,
    KWeight,
};

fn d0_invariants(psi: &AParameter) -> Result<Option<Invariants>> {
    Ok(member(psi, &d_zero(psi).d0)?.invariants)
}

/// Whether `A_{d_0}(ψ)` is nonzero with the same `(Ann, AS)` as `π_λ`.
pub fn oracle_contains(psi: &AParameter, w: &KWeight) -> Result<bool> {
    psi.sig().expect(w.sig())?;
    if !unitarity_class(w).is_unitarizable() {
        return Err(Error::NotUnitarizable(w.to_string()));
    }
    if inf_char(psi) != inf_char_of_lowest_weight(w) {
        debug!("oracle: {psi} and {w} have different infinitesimal characters");
        return Ok(false);
    }
    let Some(inv) = d0_invariants(psi)? else {
        return Ok(false);
    };
    as_pair_equal(&inv.pair(), &lowest_weight_invariants(w)?)
}

/// Every unitarizable weight of `U(p,q)` whose lowest weight module has
/// infinitesimal character `chi`: each way of splitting `chi` into `P` of
/// size `p` and `Q` of size `q` that inverts to a dominant weight.
pub fn candidate_weights(sig: GroupSignature, chi: &HalfIntMultiset) -> Vec<KWeight> {
    fn choose(
        entries: &[(HalfInt, usize)],
        k: usize,
        acc: &mut Vec<HalfInt>,
        out: &mut Vec<HalfIntMultiset>,
    ) {
        let Some((&(x, m), rest)) = entries.split_first() else {
            if k == 0 {
                out.push(acc.iter().copied().collect());
            }
            return;
        };
        for take in (0..=m.min(k)).rev() {
            acc.extend(std::iter::repeat_n(x, take));
            choose(rest, k - take, acc, out);
            acc.truncate(acc.len() - take);
        }
    }
    if chi.len() != sig.n() {
        return Vec::new();
    }
    let mut subsets = Vec::new();
    choose(chi.entries(), sig.p, &mut Vec::new(), &mut subsets);
    subsets
        .into_iter()
        .filter_map(|p_set| KWeight::from_pq(&p_set, &chi.difference(&p_set)).ok())
        .filter(|w| w.sig() == sig && unitarity_class(w).is_unitarizable())
        .collect()
}

/// Every unitarizable `λ` whose invariants equal those of `A_{d_0}(ψ)`.
pub fn oracle_lowest_weights(psi: &AParameter) -> Result<Vec<KWeight>> {
    let Some(inv) = d0_invariants(psi)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for w in candidate_weights(psi.sig(), &inf_char(psi)) {
        if as_pair_equal(&inv.pair(), &lowest_weight_invariants(&w)?)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// The eight structural facts about `d_0` when `π_λ ∈ Π(ψ)`, as
/// `(item, holds)`. Empty when `p = 0`.
pub fn basic_properties_of_d0(psi: &AParameter, w: &KWeight) -> Vec<(u8, bool)> {
    let dz = d_zero(psi);
    let Some(j) = dz.j_index() else {
        return Vec::new();
    };
    let segs = psi.segments();
    let before = HalfIntMultiset::from_segments(&segs[..j]);
    let after = HalfIntMultiset::from_segments(&segs[j + 1..]);
    let nu_j = segs[j].to_multiset();
    let q_j = dz.d0.blocks()[j].1;
    let i_set = weight_stats(w).i_seg.to_multiset();
    let both = before.intersection(&after);
    let both_i = both.intersection(&i_set);
    let i_meets_j = !i_set.intersection(&nu_j).is_empty();

    vec![
        (1, before.is_multiplicity_free() && after.is_multiplicity_free()),
        (2, !nu_j.is_subset_of(&after) || q_j == 0),
        (3, !nu_j.is_subset_of(&before)),
        (4, i_set.is_subset_of(&before.union(&after))),
        (5, both.is_empty() || (nu_j.is_subset_of(&after) && q_j == 0)),
        (
            6,
            both_i.is_empty()
                || !i_meets_j
                || (nu_j.is_subset_of(&i_set) && i_set.is_subset_of(&after) && q_j == 0),
        ),
        (7, !both_i.is_empty() || i_set.is_subset_of(&nu_j)),
        (8, i_set.is_empty() || i_meets_j),
    ]
}

/// Bounds for [`sweep_verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    #[serde(rename = "max_N")]
    pub max_n: usize,
    /// `|λ_i| ≤ weight_window`.
    pub weight_window: i64,
    /// Entries of `χ_ψ` lie in `[-char_window, char_window]`.
    pub char_window: HalfInt,
}

impl SweepConfig {
    pub fn new(max_n: usize, weight_window: i64, char_window: HalfInt) -> Result<Self> {
        if max_n == 0 || weight_window < 0 || char_window.twice() < 0 {
            return Err(Error::InvalidInput(format!(
                "sweep bounds must be max_N >= 1 and nonnegative windows, got {max_n}, {weight_window}, {char_window}"
            )));
        }
        Ok(SweepConfig {
            max_n,
            weight_window,
            char_window,
        })
    }

    fn signatures(&self) -> Vec<GroupSignature> {
        (1..=self.max_n)
            .flat_map(|n| (0..=n).rev().map(move |p| GroupSignature::new(p, n - p).unwrap()))
            .collect()
    }
}

/// What a finding is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Closed-form membership against the tableau oracle.
    Contains,
    /// Closed-form lowest K-type of a packet against the oracle.
    LowestWeight,
    /// Closed-form nonvanishing of `A_{d_0}(ψ)` against the normalization.
    Nonvanishing,
    /// At most one packet member is a lowest weight module, and it sits at `d_0`.
    Uniqueness,
    /// Nonzero members of a packet have distinct invariants.
    MultiplicityOne,
    /// Realizing `λ` and reading off the lowest K-type gives `λ` back, with
    /// segments carrying `χ_λ`.
    Realization,
    /// `AS` of a lowest weight module has at most two columns with `(+,-)` rows.
    LowestWeightShape,
    /// Block rewrites preserve `(Ann, AS)`.
    Rewrite,
    /// The structural facts about `d_0`, by item.
    BasicProperty(u8),
    /// `lowest_weight_of_packet(ψ) = λ` implies membership.
    RoundTripA,
    /// Membership implies `lowest_weight_of_packet(ψ) = λ`.
    RoundTripB,
    /// An operation failed outright.
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub check: Check,
    pub psi: AParameter,
    pub lambda: Option<KWeight>,
    pub theorem_verdict: String,
    pub oracle_verdict: String,
    pub dumps: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyFailure {
    pub check: Check,
    pub psi: Option<AParameter>,
    pub lambda: Option<KWeight>,
    pub detail: String,
}

/// The smallest configuration, shrinking `max_N` first and the windows
/// after, that still shows a mismatch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Minimized {
    pub config: SweepConfig,
    pub mismatch: Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub instances_checked: usize,
    /// Rewrites whose hypotheses held and whose invariants were compared.
    pub rewrites_checked: usize,
    /// Pairs `(ψ, λ)` with `π_λ ∈ Π(ψ)` according to the oracle.
    pub memberships_found: usize,
    pub mismatches: Vec<Mismatch>,
    pub property_failures: Vec<PropertyFailure>,
    pub minimized: Option<Minimized>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn failures_of(&self, check: Check) -> usize {
        self.mismatches.iter().filter(|m| m.check == check).count()
            + self.property_failures.iter().filter(|f| f.check == check).count()
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    rewrites: usize,
    memberships: usize,
    mismatches: Vec<Mismatch>,
    failures: Vec<PropertyFailure>,
}

impl Tally {
    fn fail(&mut self, check: Check, psi: Option<&AParameter>, w: Option<&KWeight>, detail: String) {
        self.failures.push(PropertyFailure {
            check,
            psi: psi.cloned(),
            lambda: w.cloned(),
            detail,
        });
    }

    fn mismatch(&mut self, check: Check, psi: &AParameter, w: Option<&KWeight>, theorem: String, oracle: String) {
        self.mismatches.push(Mismatch {
            check,
            psi: psi.clone(),
            lambda: w.cloned(),
            theorem_verdict: theorem,
            oracle_verdict: oracle,
            dumps: mismatch_dumps(psi, w),
        });
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.rewrites += other.rewrites;
        self.memberships += other.memberships;
        self.mismatches.extend(other.mismatches);
        self.failures.extend(other.failures);
        self
    }
}

fn verdict<T: std::fmt::Display>(r: &Result<T>) -> String {
    match r {
        Ok(x) => x.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn dump(label: &str, inv: &Option<Invariants>) -> String {
    match inv {
        None => format!("{label}: zero"),
        Some(i) => format!("{label}: Ann\n{}\nAS\n{}", i.ann, i.as_tab),
    }
}

fn mismatch_dumps(psi: &AParameter, w: Option<&KWeight>) -> Vec<String> {
    let mut out = vec![dump("A_d0(psi)", &d0_invariants(psi).unwrap_or(None))];
    if let Some(w) = w {
        out.push(dump(
            "pi_lambda",
            &lowest_weight_invariants(w).ok().map(Invariants::from),
        ));
    }
    out
}

/// Apply every available rewrite to `desc` and record any that changes the
/// invariants. Rewrites outside their hypotheses are skipped.
fn check_rewrites(t: &mut Tally, desc: &InductionDescriptor, psi: Option<&AParameter>, w: Option<&KWeight>) {
    let attempts = [
        ("normalize_blocks", normalize_blocks(desc)),
        ("swap before", swap_rewrite(desc, SwapSide::Before)),
        ("swap after", swap_rewrite(desc, SwapSide::After)),
    ];
    for (name, res) in attempts {
        match res {
            Ok(new) => {
                t.rewrites += 1;
                match (desc.invariants(), new.invariants()) {
                    (Ok(a), Ok(b)) if a == b => {}
                    (Ok(_), Ok(_)) => t.fail(
                        Check::Rewrite,
                        psi,
                        w,
                        format!("{name} changes the invariants of {:?}", desc.segments()),
                    ),
                    (a, b) => t.fail(Check::Rewrite, psi, w, format!("{name}: {a:?} / {b:?}")),
                }
            }
            Err(Error::RewriteUnavailable(_)) | Err(Error::OutsideHypotheses(_)) => {}
            Err(e) => t.fail(Check::Rewrite, psi, w, format!("{name}: {e}")),
        }
    }
}

fn check_weight(w: &KWeight) -> Tally {
    let mut t = Tally::default();
    let chi = inf_char_of_lowest_weight(w);

    match realize_lowest_weight(w) {
        Ok(desc) => {
            match holomorphic_lowest_ktype(&desc) {
                Ok(back) if &back == w => {}
                Ok(back) => t.fail(Check::Realization, None, Some(w), format!("realization has lowest K-type {back}")),
                Err(e) => t.fail(Check::Realization, None, Some(w), e.to_string()),
            }
            if HalfIntMultiset::from_segments(desc.segments()) != chi {
                t.fail(Check::Realization, None, Some(w), "segments do not carry χ_λ".into());
            }
            check_rewrites(&mut t, &desc, None, Some(w));
        }
        Err(e) => t.fail(Check::Realization, None, Some(w), e.to_string()),
    }
    if let Err(e) = lowest_weight_invariants(w) {
        t.fail(Check::LowestWeightShape, None, Some(w), e.to_string());
        return t;
    }

    for parts in partition_into_segments(&chi) {
        let psi = match AParameter::from_segments(w.sig(), &parts) {
            Ok(psi) => psi,
            Err(e) => {
                t.fail(Check::Error, None, Some(w), e.to_string());
                continue;
            }
        };
        t.checked += 1;
        let theorem = contains_lowest_weight(&psi, w);
        let oracle = oracle_contains(&psi, w);
        let (tv, ov) = (verdict(&theorem), verdict(&oracle));
        if tv != ov {
            t.mismatch(Check::Contains, &psi, Some(w), tv, ov);
        }
        if let Ok(m) = member(&psi, &d_zero(&psi).d0) {
            if m.nonzero && range_class(&m.descriptor).mediocre {
                check_rewrites(&mut t, &m.descriptor, Some(&psi), Some(w));
            }
        }
        if !matches!(oracle, Ok(true)) {
            continue;
        }
        t.memberships += 1;
        for (item, holds) in basic_properties_of_d0(&psi, w) {
            if !holds {
                t.fail(Check::BasicProperty(item), Some(&psi), Some(w), format!("item {item} fails"));
            }
        }
        match lowest_weight_of_packet(&psi) {
            Ok(Some(back)) if &back == w => {}
            other => t.fail(
                Check::RoundTripB,
                Some(&psi),
                Some(w),
                format!("lowest_weight_of_packet gives {other:?}"),
            ),
        }
    }
    t
}

fn show_weight(w: &Option<KWeight>) -> String {
    w.as_ref().map_or_else(|| "none".to_string(), |w| w.to_string())
}

fn check_parameter(psi: &AParameter) -> Tally {
    let mut t = Tally::default();
    t.checked += 1;
    let sig = psi.sig();
    let candidates: Vec<(KWeight, Invariants)> =
        match candidate_weights(sig, &inf_char(psi))
            .into_iter()
            .map(|w| lowest_weight_invariants(&w).map(|i| (w, Invariants::from(i))))
            .collect::<Result<Vec<_>>>()
        {
            Ok(c) => c,
            Err(e) => {
                t.fail(Check::LowestWeightShape, Some(psi), None, e.to_string());
                return t;
            }
        };

    let members = match packet(psi) {
        Ok(m) => m,
        Err(e) => {
            t.fail(Check::MultiplicityOne, Some(psi), None, e.to_string());
            return t;
        }
    };
    let d0 = d_zero(psi).d0;
    let mut hits: Vec<(&ThetaData, &KWeight)> = Vec::new();
    for m in members.iter().filter(|m| m.nonzero) {
        for (w, inv) in &candidates {
            if m.invariants.as_ref() == Some(inv) {
                hits.push((&m.d, w));
            }
        }
    }
    if hits.len() > 1 || hits.iter().any(|(d, _)| **d != d0) {
        let shown: Vec<String> = hits.iter().map(|(d, w)| format!("{:?} ~ {w}", d.blocks())).collect();
        t.fail(Check::Uniqueness, Some(psi), None, shown.join("; "));
    }

    let d0_inv = members.iter().find(|m| m.d == d0).and_then(|m| m.invariants.clone());
    if let Some(closed) = d0_nonvanishing(psi) {
        if closed != d0_inv.is_some() {
            t.fail(
                Check::Nonvanishing,
                Some(psi),
                None,
                format!("closed form says nonzero = {closed}, normalization disagrees"),
            );
        }
    }
    let oracle: Vec<&KWeight> = candidates
        .iter()
        .filter(|(_, inv)| d0_inv.as_ref() == Some(inv))
        .map(|(w, _)| w)
        .collect();
    if oracle.len() > 1 {
        let shown: Vec<String> = oracle.iter().map(|w| w.to_string()).collect();
        t.fail(Check::Uniqueness, Some(psi), None, format!("A_d0 matches {}", shown.join(", ")));
    }
    let oracle_lw = oracle.first().map(|&w| w.clone());
    if oracle_lw.is_some() {
        t.memberships += 1;
    }

    let theorem = lowest_weight_of_packet(psi);
    let tv = match &theorem {
        Ok(w) => show_weight(w),
        Err(e) => format!("error: {e}"),
    };
    let ov = show_weight(&oracle_lw);
    if tv != ov {
        t.mismatch(Check::LowestWeight, psi, oracle_lw.as_ref(), tv, ov);
    }
    if let Ok(Some(w)) = &theorem {
        if !matches!(contains_lowest_weight(psi, w), Ok(true)) {
            t.fail(Check::RoundTripA, Some(psi), Some(w), "packet does not contain its own lowest weight".into());
        }
    }

    for (w, _) in &candidates {
        t.checked += 1;
        let oracle = oracle_lw.as_ref() == Some(w);
        let tv = verdict(&contains_lowest_weight(psi, w));
        if tv != oracle.to_string() {
            t.mismatch(Check::Contains, psi, Some(w), tv, oracle.to_string());
        }
    }
    t
}

fn run_sweep(cfg: &SweepConfig) -> SweepReport {
    let sigs = cfg.signatures();
    let weights: Vec<KWeight> = sigs
        .iter()
        .flat_map(|&s| dominant_weights(s, cfg.weight_window))
        .filter(|w| unitarity_class(w).is_unitarizable())
        .collect();
    let params: Vec<AParameter> = sigs
        .iter()
        .flat_map(|&s| good_parameters(s, cfg.char_window))
        .collect();

    let by_weight = weights
        .par_iter()
        .map(check_weight)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge);
    let by_param = params
        .par_iter()
        .map(check_parameter)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge);
    let t = by_weight.merge(by_param);
    SweepReport {
        config: *cfg,
        instances_checked: t.checked,
        rewrites_checked: t.rewrites,
        memberships_found: t.memberships,
        mismatches: t.mismatches,
        property_failures: t.failures,
        minimized: None,
    }
}

/// The smallest configuration that still holds one of the mismatches: its
/// `N`, and windows just wide enough for its weight and parameter.
fn minimize(mismatches: &[Mismatch]) -> Option<Minimized> {
    let config_of = |m: &Mismatch| SweepConfig {
        max_n: m.psi.sig().n(),
        weight_window: m
            .lambda
            .as_ref()
            .map_or(0, |w| w.lambda().iter().map(|x| x.abs()).max().unwrap_or(0)),
        char_window: inf_char(&m.psi)
            .values_desc()
            .into_iter()
            .map(|x| HalfInt::from_twice(x.twice().abs()))
            .max()
            .unwrap_or(HalfInt::from_int(0)),
    };
    let key = |c: &SweepConfig| (c.max_n, c.weight_window, c.char_window);
    let smallest = mismatches.iter().map(config_of).min_by_key(key)?;
    let mismatch = run_sweep(&smallest).mismatches.into_iter().next()?;
    Some(Minimized {
        config: smallest,
        mismatch,
    })
}

/// Exhaustive comparison of the closed forms with the tableau oracle over
/// every signature with `N ≤ max_N`: each unitarizable weight in the weight
/// window against every parameter with its infinitesimal character, and
/// each good parameter in the character window against every candidate
/// weight. The report order depends only on the configuration.
pub fn sweep_verify(cfg: &SweepConfig) -> SweepReport {
    let mut report = run_sweep(cfg);
    if !report.mismatches.is_empty() {
        report.minimized = minimize(&report.mismatches);
    }
    report
}

/// Every two-block datum with `N ≤ max_n` and block values in
/// `[-half_width, half_width]` that lies in the mediocre range.
pub fn two_block_descriptors(max_n: usize, half_width: i64) -> Vec<InductionDescriptor> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for a1 in 1..n {
            let a2 = n - a1;
            for p1 in 0..=a1 {
                for p2 in 0..=a2 {
                    let d = ThetaData::new(vec![(p1, a1 - p1), (p2, a2 - p2)]).expect("nonempty");
                    for v1 in -half_width..=half_width {
                        for v2 in -half_width..=half_width {
                            let desc = InductionDescriptor::new(d.clone(), vec![v1, v2])
                                .expect("two values for two blocks");
                            if range_class(&desc).mediocre {
                                out.push(desc);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The two-block prediction `min(p_1,q_2) + min(q_1,p_2) ≥ #(ν_1 ∩ ν_2)`.
pub fn two_block_predicts_nonzero(desc: &InductionDescriptor) -> bool {
    let b = desc.d().blocks();
    let (p1, q1) = b[0];
    let (p2, q2) = b[1];
    let s: &[Segment] = desc.segments();
    p1.min(q2) + q1.min(p2) >= s[0].intersect(&s[1]).len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoBlockReport {
    pub cases: usize,
    pub failures: Vec<InductionDescriptor>,
}

/// Compare the two-block prediction with the normalization on every case
/// from [`two_block_descriptors`].
pub fn two_block_sweep(max_n: usize, half_width: i64) -> Result<TwoBlockReport> {
    let cases = two_block_descriptors(max_n, half_width);
    let verdicts = cases
        .par_iter()
        .map(|d| Ok((d, !d.normalize()?.is_zero() == two_block_predicts_nonzero(d))))
        .collect::<Result<Vec<_>>>()?;
    Ok(TwoBlockReport {
        cases: cases.len(),
        failures: verdicts
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(d, _)| d.clone())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::packets::Summand;

    fn psi(p: usize, q: usize, ta: &[(i64, usize)]) -> AParameter {
        AParameter::new(
            GroupSignature::new(p, q).unwrap(),
            ta.iter().map(|&(t, a)| Summand { t, a }).collect(),
        )
        .unwrap()
    }

    fn weight(p: usize, q: usize, lam: &[i64]) -> KWeight {
        KWeight::new(p, q, lam.to_vec()).unwrap()
    }

    #[test]
    fn oracle_contains_examples() {
        let w = weight(1, 1, &[1, -1]);
        assert!(oracle_contains(&psi(1, 1, &[(1, 1), (-1, 1)]), &w).unwrap());
        assert!(!oracle_contains(&psi(1, 1, &[(0, 2)]), &w).unwrap());
        assert!(!oracle_contains(&psi(1, 1, &[(3, 1), (1, 1)]), &w).unwrap());
    }

    #[test]
    fn candidates_are_exactly_the_matching_weights() {
        let sig = GroupSignature::new(2, 1).unwrap();
        for w in dominant_weights(sig, 2) {
            if !unitarity_class(&w).is_unitarizable() {
                continue;
            }
            let c = candidate_weights(sig, &inf_char_of_lowest_weight(&w));
            assert!(c.contains(&w), "{w}");
            assert!(c.iter().all(|x| inf_char_of_lowest_weight(x) == inf_char_of_lowest_weight(&w)));
        }
    }

    #[test]
    fn small_sweeps_pass() {
        let r = sweep_verify(&SweepConfig::new(2, 2, HalfInt::from_int(2)).unwrap());
        assert!(r.instances_checked > 0);
        assert_eq!(r.mismatches, vec![]);
        assert_eq!(r.property_failures, vec![]);

        let r = sweep_verify(&SweepConfig::new(1, 1, HalfInt::from_int(1)).unwrap());
        assert!(r.passed() && r.property_failures.is_empty());
    }

    #[test]
    fn sweep_is_deterministic() {
        let cfg = SweepConfig::new(3, 1, HalfInt::from_int(1)).unwrap();
        let a = serde_json::to_string(&sweep_verify(&cfg)).unwrap();
        let b = serde_json::to_string(&sweep_verify(&cfg)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn config_rejects_empty_bounds() {
        assert!(SweepConfig::new(0, 1, HalfInt::from_int(1)).is_err());
        assert!(SweepConfig::new(1, -1, HalfInt::from_int(1)).is_err());
    }
}
