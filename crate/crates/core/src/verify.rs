//! Cross-checks between the two untwistedness deciders.
//!
//! The Cartier-data scan ([`crate::cartier`]) and the subword search
//! ([`crate::walks`]) are computed independently and compared here, together
//! with the intermediate facts linking them:
//!
//! * hesitant jumping walks are exactly the index sequences satisfying
//!   `c_{j0,j1} = 2` and `c_{j1,jt} + ... + c_{j(t-1),jt} = -1` for `t >= 2`;
//! * the Cartan-sum trichotomy for a letter appended to a jumping walk;
//! * extending a jumping walk by an index with negative `c`-sum;
//! * a walk witness gives a sign vector with `m_{sigma,j1} = ell_{j1} + ... + ell_{js}`;
//! * a Cartier witness can be turned back into a walk witness.
//!
//! The sweeps enumerate words raw, without quotienting by diagram symmetries.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartier::{cartier_point, is_untwisted, CartierWitness, SignVector};
use crate::dynkin::DynkinDiagram;
use crate::error::{Error, Result};
use crate::twistcube::{ell_from_weight, TwistParams};
use crate::walks::{
    find_hesitant_jumping_ell_subword, find_hesitant_lambda_subword, is_hesitant_jumping_ell_walk,
    is_hesitant_jumping_walk, jumping_unchecked, SubwordWitness, Word,
};

/// Upper bound on predicate evaluations a sweep may plan for.
pub const SWEEP_BUDGET: u128 = 100_000_000;

/// Both verdicts for one `(diagram, word, ell)` instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub diagram: DynkinDiagram,
    pub word: Word,
    pub ell: Vec<u32>,
    pub avoiding: bool,
    pub avoidance_witness: Option<SubwordWitness>,
    pub untwisted: bool,
    pub cartier_witness: Option<CartierWitness>,
    pub agree: bool,
}

pub fn check_main_theorem(
    d: &DynkinDiagram,
    word: &[usize],
    ell: &[u32],
) -> Result<EquivalenceReport> {
    let p = TwistParams::from_word_and_ell(d, word, ell)?;
    let cartier = is_untwisted(&p)?;
    let walk = find_hesitant_jumping_ell_subword(d, word, ell)?;
    let avoiding = walk.is_none();
    Ok(EquivalenceReport {
        diagram: d.clone(),
        word: Word::new(word),
        ell: ell.to_vec(),
        avoiding,
        avoidance_witness: walk,
        untwisted: cartier.untwisted,
        cartier_witness: cartier.witness,
        agree: avoiding == cartier.untwisted,
    })
}

/// Verdicts for a word and a dominant weight, with `ell_j = lambda_{i_j}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub diagram: DynkinDiagram,
    pub word: Word,
    pub lambda: Vec<u32>,
    pub ell: Vec<u32>,
    pub lambda_avoiding: bool,
    pub lambda_witness: Option<SubwordWitness>,
    pub ell_avoiding: bool,
    pub ell_witness: Option<SubwordWitness>,
    pub untwisted: bool,
    pub agree: bool,
}

pub fn check_corollary(
    d: &DynkinDiagram,
    word: &[usize],
    lambda: &[u32],
) -> Result<CorollaryReport> {
    let ell = ell_from_weight(d, word, lambda)?;
    let lambda_witness = find_hesitant_lambda_subword(d, word, lambda)?;
    let main = check_main_theorem(d, word, &ell)?;
    let lambda_avoiding = lambda_witness.is_none();
    Ok(CorollaryReport {
        diagram: d.clone(),
        word: Word::new(word),
        lambda: lambda.to_vec(),
        ell,
        lambda_avoiding,
        lambda_witness,
        ell_avoiding: main.avoiding,
        ell_witness: main.avoidance_witness,
        untwisted: main.untwisted,
        agree: lambda_avoiding == main.avoiding && main.avoiding == main.untwisted,
    })
}

fn check_indices(indices: &[usize], len: usize) -> Result<()> {
    if let Some(&j) = indices.iter().find(|&&j| j == 0 || j > len) {
        return Err(Error::IndexOutOfRange { index: j, len });
    }
    if indices.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::InvalidIndices(format!(
            "{indices:?} is not strictly increasing"
        )));
    }
    Ok(())
}

/// `c`-conditions on `(j_0 < ... < j_s)`, read from the parameter matrix only.
pub fn cartan_conditions_hold(p: &TwistParams, indices: &[usize]) -> bool {
    if indices.len() < 2 || p.c(indices[0], indices[1]) != 2 {
        return false;
    }
    (2..indices.len()).all(|t| {
        let jt = indices[t];
        indices[1..t].iter().map(|&ju| p.c(ju, jt)).sum::<i64>() == -1
    })
}

/// True when the `c`-conditions and "the subword is a hesitant jumping walk"
/// give the same answer for `indices` (1-based, strictly increasing).
pub fn check_cartan_conditions_match_walk(
    d: &DynkinDiagram,
    word: &[usize],
    indices: &[usize],
) -> Result<bool> {
    if indices.len() < 2 {
        return Err(Error::InvalidIndices("need at least two indices".into()));
    }
    check_indices(indices, word.len())?;
    let zero = vec![0; word.len()];
    let p = TwistParams::from_word(d, word, &zero)?;
    let by_c = cartan_conditions_hold(&p, indices);
    let sub: Vec<usize> = indices.iter().map(|&j| word[j - 1]).collect();
    let by_walk = is_hesitant_jumping_walk(d, &sub)?;
    Ok(by_c == by_walk)
}

/// For a jumping walk `prefix` and a node `next`, checks the sum
/// `S = sum_k cartan(next, prefix_k)` against the distance
/// `delta = d(next, prefix)`: `delta = 0` needs `S >= 0`, `delta = 1` needs
/// `S = -1`, larger distances need `S = 0`.
pub fn check_cartan_sum_trichotomy(
    d: &DynkinDiagram,
    prefix: &[usize],
    next: usize,
) -> Result<bool> {
    d.check_word(prefix)?;
    d.check_node(next)?;
    if !jumping_unchecked(d, prefix) {
        return Err(Error::Precondition(format!(
            "({}) is not a jumping walk",
            Word::new(prefix)
        )));
    }
    let sum: i64 = prefix.iter().map(|&i| d.cartan_unchecked(next, i)).sum();
    Ok(match d.set_distance_unchecked(prefix, &[next]) {
        Some(0) => sum >= 0,
        Some(1) => sum == -1,
        _ => sum == 0,
    })
}

/// For positions `(j_1 < ... < j_{s-1})` forming a jumping walk and a later
/// position `j_s`: if `c_{j1,js} + ... + c_{j(s-1),js} < 0`, the extension must
/// again be a jumping walk and the sum must be `-1`. Vacuously true otherwise.
pub fn check_sum_negative_extension(
    d: &DynkinDiagram,
    word: &[usize],
    indices: &[usize],
    next: usize,
) -> Result<bool> {
    check_indices(indices, word.len())?;
    check_indices(&[next], word.len())?;
    if indices.is_empty() || next <= *indices.last().unwrap() {
        return Err(Error::InvalidIndices(
            "need a non-empty prefix followed by a later index".into(),
        ));
    }
    let zero = vec![0; word.len()];
    let p = TwistParams::from_word(d, word, &zero)?;
    let sub: Vec<usize> = indices.iter().map(|&j| word[j - 1]).collect();
    if !jumping_unchecked(d, &sub) {
        return Err(Error::Precondition(
            "prefix positions do not form a jumping walk".into(),
        ));
    }
    let sum: i64 = indices.iter().map(|&j| p.c(j, next)).sum();
    if sum >= 0 {
        return Ok(true);
    }
    let mut extended = sub;
    extended.push(word[next - 1]);
    Ok(jumping_unchecked(d, &extended) && sum == -1)
}

/// The sign vector built from a hesitant jumping ell-walk witness and the
/// quantities the necessity argument predicts for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessityCheck {
    pub sigma: SignVector,
    pub m: Vec<i64>,
    /// `m_{sigma,j1}`
    pub m_first: i64,
    /// `ell_{j1} + ... + ell_{js}`
    pub ell_tail_sum: i64,
    /// `m_{sigma,j0}`
    pub m_head: i64,
    /// Both identities hold and `m_{sigma,j0} < 0`.
    pub holds: bool,
}

/// With `sigma` minus exactly on the witness positions,
/// `m_{sigma,j1} = ell_{j1} + ... + ell_{js}` and
/// `m_{sigma,j0} = ell_{j0} - ell_{j1} - m_{sigma,j1} < 0`.
pub fn necessity_check(p: &TwistParams, witness: &SubwordWitness) -> Result<NecessityCheck> {
    let idx = &witness.indices;
    if idx.len() < 2 {
        return Err(Error::InvalidIndices(
            "witness needs at least two indices".into(),
        ));
    }
    check_indices(idx, p.n())?;
    let sigma = SignVector::minus_at(p.n(), idx);
    let m = cartier_point(p, &sigma)?.m;
    let ell = p.ell();
    let m_first = m[idx[1] - 1];
    let m_head = m[idx[0] - 1];
    let ell_tail_sum: i64 = idx[1..].iter().map(|&j| i64::from(ell[j - 1])).sum();
    let predicted_head = i64::from(ell[idx[0] - 1]) - i64::from(ell[idx[1] - 1]) - m_first;
    let holds = m_first == ell_tail_sum && m_head == predicted_head && m_head < 0;
    Ok(NecessityCheck {
        sigma,
        m,
        m_first,
        ell_tail_sum,
        m_head,
        holds,
    })
}

/// Constructs a hesitant jumping ell-walk from a sign vector with a negative
/// Cartier component.
///
/// Starts at the largest `k` with `m_{sigma,k} < 0`, takes the smallest later
/// `j_1` with `c_{k,j1} > 0` and `m_{sigma,j1} > 0`, then keeps appending the
/// smallest later index whose accumulated `c`-sum is negative and whose
/// `m_sigma` is positive, until the remaining tail sum stops being positive.
/// Returns `None` if `sigma` has no negative component or the construction
/// gets stuck. Indices are 1-based.
pub fn extract_walk_from_cartier(
    p: &TwistParams,
    sigma: &SignVector,
) -> Result<Option<Vec<usize>>> {
    let m = cartier_point(p, sigma)?.m;
    let n = p.n();
    let c = p.c_matrix();
    let Some(k) = (0..n).rev().find(|&j| m[j] < 0) else {
        return Ok(None);
    };
    let Some(j1) = (k + 1..n).find(|&s| c[k][s] > 0 && m[s] > 0) else {
        return Ok(None);
    };
    let mut seq = vec![k, j1];
    let mut acc: Vec<i64> = c[j1].clone();
    loop {
        let last = *seq.last().unwrap();
        let tail: i64 = (last + 1..n).map(|s| acc[s] * m[s]).sum();
        if -tail <= 0 {
            break;
        }
        let Some(next) = (last + 1..n).find(|&s| acc[s] < 0 && m[s] > 0) else {
            return Ok(None);
        };
        for (a, &cv) in acc.iter_mut().zip(&c[next]) {
            *a += cv;
        }
        seq.push(next);
    }
    Ok(Some(seq.into_iter().map(|j| j + 1).collect()))
}

/// Every word over `1..=rank` of length `len`, in lexicographic order.
pub fn all_words(rank: usize, len: usize) -> Vec<Vec<usize>> {
    product(len, 1, rank as u32)
        .into_iter()
        .map(|v| v.into_iter().map(|x| x as usize).collect())
        .collect()
}

/// Every vector in `{0..=bound}^len`, in lexicographic order.
pub fn all_vectors(bound: u32, len: usize) -> Vec<Vec<u32>> {
    product(len, 0, bound)
}

fn product(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Planned predicate evaluations: `sum_len rank^len (bound+1)^len 2^len`.
pub fn sweep_estimate(rank: usize, max_len: usize, bound: u32) -> u128 {
    let per = rank as u128 * (u128::from(bound) + 1) * 2;
    (1..=max_len as u32)
        .map(|l| per.saturating_pow(l))
        .fold(0u128, u128::saturating_add)
}

fn check_budget(rank: usize, max_len: usize, bound: u32) -> Result<()> {
    let estimate = sweep_estimate(rank, max_len, bound);
    if estimate > SWEEP_BUDGET {
        return Err(Error::BudgetExceeded {
            estimate,
            limit: SWEEP_BUDGET,
        });
    }
    Ok(())
}

/// Totals of a main-theorem sweep. Serializes as
/// `{"instances": N, "disagreements": 0, "untwisted": K, "elapsed_ms": T}`;
/// a counterexample is attached only when one was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub instances: u64,
    pub disagreements: u64,
    pub untwisted: u64,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<EquivalenceReport>,
}

impl SweepSummary {
    pub fn untwisted_fraction(&self) -> f64 {
        if self.instances == 0 {
            0.0
        } else {
            self.untwisted as f64 / self.instances as f64
        }
    }
}

/// Per-word partial results, combined in word order.
trait Merge: Default + Send {
    fn merge(self, later: Self) -> Self;
}

/// Runs `per_word` over every word of length `1..=max_len` in parallel and
/// merges results in lexicographic word order, so the reported failure is
/// the smallest one.
fn sweep_words<S: Merge>(
    rank: usize,
    max_len: usize,
    per_word: impl Fn(&[usize]) -> Result<S> + Sync,
) -> Result<S> {
    let words: Vec<Vec<usize>> = (1..=max_len).flat_map(|len| all_words(rank, len)).collect();
    let parts: Vec<S> = words
        .par_iter()
        .map(|w| per_word(w))
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().fold(S::default(), S::merge))
}

struct VerdictTally<R> {
    instances: u64,
    untwisted: u64,
    disagreements: u64,
    first: Option<R>,
}

impl<R> Default for VerdictTally<R> {
    fn default() -> Self {
        Self {
            instances: 0,
            untwisted: 0,
            disagreements: 0,
            first: None,
        }
    }
}

impl<R: Send> Merge for VerdictTally<R> {
    fn merge(mut self, later: Self) -> Self {
        self.instances += later.instances;
        self.untwisted += later.untwisted;
        self.disagreements += later.disagreements;
        self.first = self.first.or(later.first);
        self
    }
}

/// Compares both deciders on every word of length `1..=max_len` and every
/// `ell` in `{0..=ell_bound}^len`.
pub fn exhaustive_sweep(d: &DynkinDiagram, max_len: usize, ell_bound: u32) -> Result<SweepSummary> {
    check_budget(d.rank(), max_len, ell_bound)?;
    let start = Instant::now();
    let t = sweep_words(d.rank(), max_len, |w| {
        let mut t = VerdictTally::default();
        for ell in all_vectors(ell_bound, w.len()) {
            let r = check_main_theorem(d, w, &ell)?;
            t.instances += 1;
            t.untwisted += u64::from(r.untwisted);
            if !r.agree {
                t.disagreements += 1;
                t.first.get_or_insert(r);
            }
        }
        Ok(t)
    })?;
    Ok(SweepSummary {
        instances: t.instances,
        disagreements: t.disagreements,
        untwisted: t.untwisted,
        elapsed_ms: start.elapsed().as_millis() as u64,
        counterexample: t.first,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollarySweepSummary {
    pub instances: u64,
    pub disagreements: u64,
    pub untwisted: u64,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CorollaryReport>,
}

/// Runs [`check_corollary`] on every word of length `1..=max_len` and every
/// `lambda` in `{0..=lambda_bound}^rank`.
pub fn corollary_sweep(
    d: &DynkinDiagram,
    max_len: usize,
    lambda_bound: u32,
) -> Result<CorollarySweepSummary> {
    let lambdas = all_vectors(lambda_bound, d.rank());
    let estimate = sweep_estimate(d.rank(), max_len, 0).saturating_mul(lambdas.len() as u128);
    if estimate > SWEEP_BUDGET {
        return Err(Error::BudgetExceeded {
            estimate,
            limit: SWEEP_BUDGET,
        });
    }
    let start = Instant::now();
    let t = sweep_words(d.rank(), max_len, |w| {
        let mut t = VerdictTally::default();
        for lambda in &lambdas {
            let r = check_corollary(d, w, lambda)?;
            t.instances += 1;
            t.untwisted += u64::from(r.untwisted);
            if !r.agree {
                t.disagreements += 1;
                t.first.get_or_insert(r);
            }
        }
        Ok(t)
    })?;
    Ok(CorollarySweepSummary {
        instances: t.instances,
        disagreements: t.disagreements,
        untwisted: t.untwisted,
        elapsed_ms: start.elapsed().as_millis() as u64,
        counterexample: t.first,
    })
}

/// A check that failed during a sweep, with enough context to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepFailure {
    pub word: Word,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessLinkSummary {
    pub instances: u64,
    pub twisted: u64,
    pub necessity_checked: u64,
    pub extraction_checked: u64,
    pub failures: u64,
    pub first_failure: Option<SweepFailure>,
}

impl Merge for WitnessLinkSummary {
    fn merge(mut self, later: Self) -> Self {
        self.instances += later.instances;
        self.twisted += later.twisted;
        self.necessity_checked += later.necessity_checked;
        self.extraction_checked += later.extraction_checked;
        self.failures += later.failures;
        self.first_failure = self.first_failure.or(later.first_failure);
        self
    }
}

impl WitnessLinkSummary {
    fn fail(&mut self, word: &[usize], detail: String) {
        self.failures += 1;
        self.first_failure.get_or_insert(SweepFailure {
            word: Word::new(word),
            detail,
        });
    }
}

/// On every instance of the sweep: a walk witness must satisfy the necessity
/// identities, and every Cartier witness must extract to a hesitant jumping
/// ell-walk.
pub fn witness_link_sweep(
    d: &DynkinDiagram,
    max_len: usize,
    ell_bound: u32,
) -> Result<WitnessLinkSummary> {
    check_budget(d.rank(), max_len, ell_bound)?;
    sweep_words(d.rank(), max_len, |w| {
        let mut s = WitnessLinkSummary::default();
        for ell in all_vectors(ell_bound, w.len()) {
            s.instances += 1;
            let p = TwistParams::from_word_and_ell(d, w, &ell)?;
            if let Some(hit) = find_hesitant_jumping_ell_subword(d, w, &ell)? {
                s.necessity_checked += 1;
                let nc = necessity_check(&p, &hit)?;
                if !nc.holds {
                    s.fail(
                        w,
                        format!("ell={ell:?}: necessity identities fail for {hit}: {nc:?}"),
                    );
                }
            }
            let Some(cw) = is_untwisted(&p)?.witness else {
                continue;
            };
            s.twisted += 1;
            s.extraction_checked += 1;
            match extract_walk_from_cartier(&p, &cw.sigma)? {
                Some(idx) => {
                    let sub: Vec<usize> = idx.iter().map(|&j| w[j - 1]).collect();
                    let sub_ell: Vec<u32> = idx.iter().map(|&j| ell[j - 1]).collect();
                    if !is_hesitant_jumping_ell_walk(d, &sub, &sub_ell)? {
                        s.fail(
                            w,
                            format!("ell={ell:?}: extraction from {} gave {idx:?}", cw.sigma),
                        );
                    }
                }
                None => s.fail(
                    w,
                    format!("ell={ell:?}: extraction from {} got stuck", cw.sigma),
                ),
            }
        }
        Ok(s)
    })
}

/// Counts for the structural checks over all words up to a length.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralSummary {
    pub words: u64,
    pub cartan_condition_checks: u64,
    pub cartan_condition_failures: u64,
    pub trichotomy_checks: u64,
    pub trichotomy_failures: u64,
    pub extension_checks: u64,
    pub extension_failures: u64,
    pub first_cartan_condition_failure: Option<SweepFailure>,
    pub first_trichotomy_failure: Option<SweepFailure>,
    pub first_extension_failure: Option<SweepFailure>,
}

impl Merge for StructuralSummary {
    fn merge(mut self, later: Self) -> Self {
        self.words += later.words;
        self.cartan_condition_checks += later.cartan_condition_checks;
        self.cartan_condition_failures += later.cartan_condition_failures;
        self.trichotomy_checks += later.trichotomy_checks;
        self.trichotomy_failures += later.trichotomy_failures;
        self.extension_checks += later.extension_checks;
        self.extension_failures += later.extension_failures;
        self.first_cartan_condition_failure = self
            .first_cartan_condition_failure
            .or(later.first_cartan_condition_failure);
        self.first_trichotomy_failure = self
            .first_trichotomy_failure
            .or(later.first_trichotomy_failure);
        self.first_extension_failure = self
            .first_extension_failure
            .or(later.first_extension_failure);
        self
    }
}

/// For every word of length `1..=max_len`:
///
/// * the `c`-conditions versus hesitant-jumping-walk check on every index
///   sequence of length at least two;
/// * the Cartan-sum trichotomy with the last letter appended to the rest,
///   whenever the rest is a jumping walk;
/// * the negative-sum extension check on every jumping-walk index sequence
///   followed by a later index.
pub fn structural_sweep(d: &DynkinDiagram, max_len: usize) -> Result<StructuralSummary> {
    if max_len > 12 {
        return Err(Error::BudgetExceeded {
            estimate: sweep_estimate(d.rank(), max_len, 0),
            limit: SWEEP_BUDGET,
        });
    }
    check_budget(d.rank(), max_len, 0)?;
    sweep_words(d.rank(), max_len, |w| {
        let mut s = StructuralSummary {
            words: 1,
            ..Default::default()
        };
        let n = w.len();
        let subsets = (1u32..1 << n).map(|mask| {
            (1..=n)
                .filter(|&j| mask >> (j - 1) & 1 == 1)
                .collect::<Vec<_>>()
        });
        for idx in subsets {
            if idx.len() >= 2 {
                s.cartan_condition_checks += 1;
                if !check_cartan_conditions_match_walk(d, w, &idx)? {
                    s.cartan_condition_failures += 1;
                    s.first_cartan_condition_failure
                        .get_or_insert(SweepFailure {
                            word: Word::new(w),
                            detail: format!("indices {idx:?}"),
                        });
                }
                let (prefix, last) = idx.split_at(idx.len() - 1);
                let sub: Vec<usize> = prefix.iter().map(|&j| w[j - 1]).collect();
                if jumping_unchecked(d, &sub) {
                    s.extension_checks += 1;
                    if !check_sum_negative_extension(d, w, prefix, last[0])? {
                        s.extension_failures += 1;
                        s.first_extension_failure.get_or_insert(SweepFailure {
                            word: Word::new(w),
                            detail: format!("prefix {prefix:?}, next {}", last[0]),
                        });
                    }
                }
            }
        }
        let (prefix, next) = w.split_at(n - 1);
        if jumping_unchecked(d, prefix) {
            s.trichotomy_checks += 1;
            if !check_cartan_sum_trichotomy(d, prefix, next[0])? {
                s.trichotomy_failures += 1;
                s.first_trichotomy_failure.get_or_insert(SweepFailure {
                    word: Word::new(w),
                    detail: format!("prefix ({}), next {}", Word::new(prefix), next[0]),
                });
            }
        }
        Ok(s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(r: usize) -> DynkinDiagram {
        DynkinDiagram::a(r).unwrap()
    }

    #[test]
    fn main_theorem_on_sl3() {
        let r = check_main_theorem(&a(2), &[1, 2, 1], &[3, 1, 1]).unwrap();
        assert!(r.agree && r.avoiding && r.untwisted);
        let r = check_main_theorem(&a(2), &[1, 2, 1], &[2, 1, 2]).unwrap();
        assert!(r.agree && !r.avoiding && !r.untwisted);
        assert_eq!(r.avoidance_witness.unwrap().indices, vec![1, 3]);
        let r = check_main_theorem(&a(3), &[1, 2, 1, 3, 2, 1], &[0; 6]).unwrap();
        assert!(r.agree && r.avoiding && r.untwisted);
        assert!(check_main_theorem(&a(2), &[1, 2, 1], &[0, 0]).is_err());
    }

    #[test]
    fn corollary_examples() {
        let r = check_corollary(&a(2), &[1, 2, 1], &[1, 1]).unwrap();
        assert_eq!(r.ell, vec![1, 1, 1]);
        assert!(r.agree && !r.untwisted);
        assert_eq!(r.lambda_witness.unwrap().indices, vec![1, 3]);
        assert_eq!(r.ell_witness.unwrap().indices, vec![1, 3]);

        let r = check_corollary(&a(2), &[1, 2, 1], &[0, 0]).unwrap();
        assert!(r.agree && r.untwisted && r.lambda_avoiding && r.ell_avoiding);

        let r = check_corollary(&a(3), &[1, 2, 1, 3, 2, 1], &[1, 0, 0]).unwrap();
        assert_eq!(r.ell, vec![1, 0, 1, 0, 0, 1]);
        assert!(r.agree && !r.untwisted);
        assert_eq!(r.ell_witness.unwrap().indices, vec![1, 3]);
    }

    #[test]
    fn cartan_conditions_examples() {
        assert!(check_cartan_conditions_match_walk(&a(2), &[1, 2, 1], &[1, 3]).unwrap());
        assert!(check_cartan_conditions_match_walk(&a(2), &[1, 2, 1], &[1, 2]).unwrap());
        let zero = vec![0; 3];
        let p = TwistParams::from_word(&a(2), &[1, 2, 1], &zero).unwrap();
        assert!(cartan_conditions_hold(&p, &[1, 3]));
        assert!(!cartan_conditions_hold(&p, &[1, 2]));
        assert!(check_cartan_conditions_match_walk(&a(2), &[1, 2, 1], &[3, 1]).is_err());
        assert!(check_cartan_conditions_match_walk(&a(2), &[1, 2, 1], &[1, 4]).is_err());
        assert!(check_cartan_conditions_match_walk(&a(2), &[1, 2, 1], &[1]).is_err());
    }

    #[test]
    fn trichotomy_examples() {
        let a5 = a(5);
        assert!(check_cartan_sum_trichotomy(&a5, &[3, 2, 1], 4).unwrap());
        assert!(check_cartan_sum_trichotomy(&a5, &[3, 2, 1], 2).unwrap());
        assert!(check_cartan_sum_trichotomy(&a5, &[1, 2], 5).unwrap());
        assert!(matches!(
            check_cartan_sum_trichotomy(&a5, &[1, 3], 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn trivalent_node_breaks_trichotomy() {
        // All three neighbours of node 2 in D4 are visited before 2 reappears.
        let d4 = DynkinDiagram::d(4).unwrap();
        assert!(!check_cartan_sum_trichotomy(&d4, &[2, 1, 3, 4], 2).unwrap());
        assert!(!check_sum_negative_extension(&d4, &[2, 1, 3, 4, 2], &[1, 2, 3, 4], 5).unwrap());
        let e6 = DynkinDiagram::e(6).unwrap();
        assert!(!check_cartan_sum_trichotomy(&e6, &[4, 2, 3, 5], 4).unwrap());
    }

    #[test]
    fn d4_deciders_disagree() {
        let d4 = DynkinDiagram::d(4).unwrap();
        let r = check_main_theorem(&d4, &[2, 2, 1, 3, 4, 2], &[4, 2, 0, 0, 0, 1]).unwrap();
        assert!(r.avoiding);
        assert!(!r.untwisted);
        assert!(!r.agree);
        let w = r.cartier_witness.unwrap();
        assert_eq!(w.sigma.to_string(), "------");
        assert_eq!(w.m, vec![-1, 3, 1, 1, 1, 1]);
    }

    #[test]
    fn necessity_identities() {
        let p = TwistParams::from_word_and_ell(&a(3), &[1, 2, 1, 3, 2, 1], &[1, 0, 0, 0, 2, 0])
            .unwrap();
        let hit = find_hesitant_jumping_ell_subword(&a(3), &[1, 2, 1, 3, 2, 1], p.ell())
            .unwrap()
            .unwrap();
        assert_eq!(hit.indices, vec![1, 3, 5]);
        let nc = necessity_check(&p, &hit).unwrap();
        assert!(nc.holds);
        assert_eq!(nc.sigma.to_string(), "-+-+-+");
        assert_eq!((nc.m_first, nc.ell_tail_sum, nc.m_head), (2, 2, -1));
    }

    #[test]
    fn extraction_examples() {
        let p = TwistParams::from_word_and_ell(&a(2), &[1, 2, 1], &[2, 1, 2]).unwrap();
        let sigma: SignVector = "-+-".parse().unwrap();
        assert_eq!(
            extract_walk_from_cartier(&p, &sigma).unwrap(),
            Some(vec![1, 3])
        );
        let plus: SignVector = "+++".parse().unwrap();
        assert_eq!(extract_walk_from_cartier(&p, &plus).unwrap(), None);

        // needs a third index: (1,3,5) on (1,2,1,3,2,1)
        let w = [1, 2, 1, 3, 2, 1];
        let p = TwistParams::from_word_and_ell(&a(3), &w, &[1, 0, 0, 0, 2, 0]).unwrap();
        let cw = is_untwisted(&p).unwrap().witness.unwrap();
        let idx = extract_walk_from_cartier(&p, &cw.sigma).unwrap().unwrap();
        let sub: Vec<usize> = idx.iter().map(|&j| w[j - 1]).collect();
        let sub_ell: Vec<u32> = idx.iter().map(|&j| p.ell()[j - 1]).collect();
        assert!(is_hesitant_jumping_ell_walk(&a(3), &sub, &sub_ell).unwrap());
    }

    #[test]
    fn enumeration_helpers() {
        assert_eq!(
            all_words(2, 2),
            vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
        assert_eq!(all_vectors(1, 0), vec![Vec::<u32>::new()]);
        assert_eq!(all_vectors(2, 2).len(), 9);
        assert_eq!(sweep_estimate(2, 1, 2), 12);
    }

    #[test]
    fn small_sweeps() {
        let s = exhaustive_sweep(&a(2), 3, 2).unwrap();
        assert_eq!(s.instances, 2 * 3 + 4 * 9 + 8 * 27);
        assert_eq!(s.disagreements, 0);
        assert!(s.counterexample.is_none());
        let json = serde_json::to_value(&s).unwrap();
        let keys: Vec<_> = json.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 4);

        let c = corollary_sweep(&a(2), 3, 1).unwrap();
        assert_eq!(c.disagreements, 0);
        let l = witness_link_sweep(&a(2), 3, 2).unwrap();
        assert_eq!(l.failures, 0);
        assert!(l.twisted > 0);
        assert_eq!(l.twisted, s.instances - s.untwisted);
        let st = structural_sweep(&a(3), 4).unwrap();
        assert_eq!(
            (
                st.cartan_condition_failures,
                st.trichotomy_failures,
                st.extension_failures
            ),
            (0, 0, 0)
        );
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            exhaustive_sweep(&DynkinDiagram::e(8).unwrap(), 8, 3),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
