//! Walks on a Dynkin diagram and subword searches for the avoidance criteria.
//!
//! A *jumping walk* is a word in which every letter after the first lies at
//! distance exactly one from the set of letters already visited. A *hesitant*
//! walk repeats its first letter once before the walk proper starts. Words and
//! subword witnesses use 1-based positions throughout.

use std::fmt;
use std::ops::{ControlFlow, Deref};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinDiagram;
use crate::error::{Error, Result};

/// A finite sequence of diagram nodes `(i_1, ..., i_n)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(entries: impl Into<Vec<usize>>) -> Self {
        Word(entries.into())
    }

    /// Nodes at the given 1-based positions.
    pub fn subword(&self, indices: &[usize]) -> Result<Word> {
        indices
            .iter()
            .map(|&j| {
                self.0
                    .get(j.wrapping_sub(1))
                    .copied()
                    .ok_or(Error::IndexOutOfRange {
                        index: j,
                        len: self.0.len(),
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Deref for Word {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.0))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).map(Word)
    }
}

/// Parses a comma-separated list of decimal integers; the empty string is the empty list.
pub fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("`{}` is not a valid entry in `{s}`", t.trim())))
        })
        .collect()
}

pub(crate) fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WitnessKind {
    HesitantJumpingEllWalk,
    HesitantLambdaWalk,
}

/// Positions `j_0 < j_1 < ... < j_s` (1-based) of a subword satisfying the
/// predicate named by `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubwordWitness {
    pub indices: Vec<usize>,
    pub kind: WitnessKind,
}

impl SubwordWitness {
    pub fn subword(&self, word: &[usize]) -> Vec<usize> {
        self.indices.iter().map(|&j| word[j - 1]).collect()
    }

    /// `(ell_{j_0}, ..., ell_{j_s})`.
    pub fn restrict(&self, ell: &[u32]) -> Vec<u32> {
        self.indices.iter().map(|&j| ell[j - 1]).collect()
    }
}

impl fmt::Display for SubwordWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.indices))
    }
}

fn check_len(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            what,
            expected,
            found,
        })
    }
}

/// Every letter after the first is at distance exactly 1 from the letters before it.
pub fn is_jumping_walk(d: &DynkinDiagram, w: &[usize]) -> Result<bool> {
    d.check_word(w)?;
    Ok(jumping_unchecked(d, w))
}

pub(crate) fn jumping_unchecked(d: &DynkinDiagram, w: &[usize]) -> bool {
    (1..w.len()).all(|j| d.set_distance_unchecked(&w[..j], &w[j..=j]) == Some(1))
}

/// Length at least 2, first two letters equal, and the tail from the second
/// letter on is a jumping walk.
pub fn is_hesitant_jumping_walk(d: &DynkinDiagram, w: &[usize]) -> Result<bool> {
    d.check_word(w)?;
    Ok(w.len() >= 2 && w[0] == w[1] && jumping_unchecked(d, &w[1..]))
}

/// Inequality `ell_0 - ell_1 < ell_1 + ... + ell_s` of a hesitant jumping ell-walk.
pub fn ell_inequality_holds(ell: &[u32]) -> bool {
    if ell.len() < 2 {
        return false;
    }
    let rhs: i64 = ell[1..].iter().map(|&l| i64::from(l)).sum();
    i64::from(ell[0]) - i64::from(ell[1]) < rhs
}

pub fn is_hesitant_jumping_ell_walk(d: &DynkinDiagram, w: &[usize], ell: &[u32]) -> Result<bool> {
    check_len("ell", w.len(), ell.len())?;
    Ok(is_hesitant_jumping_walk(d, w)? && ell_inequality_holds(ell))
}

/// Consecutive letters are adjacent in the diagram. Revisits are allowed.
pub fn is_diagram_walk(d: &DynkinDiagram, w: &[usize]) -> Result<bool> {
    d.check_word(w)?;
    Ok(w.windows(2).all(|p| d.dist_unchecked(p[0], p[1]) == 1))
}

/// `i_0 = i_1`, the tail is a diagram walk and its last node has a positive
/// weight coefficient.
pub fn is_hesitant_lambda_walk(d: &DynkinDiagram, w: &[usize], lambda: &[u32]) -> Result<bool> {
    check_len("lambda", d.rank(), lambda.len())?;
    Ok(w.len() >= 2
        && w[0] == w[1]
        && is_diagram_walk(d, &w[1..])?
        && lambda[w[w.len() - 1] - 1] > 0)
}

/// Preorder DFS over all hesitant jumping subwords, children in increasing
/// position order, so visits happen in lexicographic order of the 0-based
/// index sequences.
fn visit_hesitant_jumping<B>(
    d: &DynkinDiagram,
    w: &[usize],
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    let n = w.len();
    let mut path = Vec::with_capacity(d.rank() + 1);
    let mut visited = vec![false; d.rank() + 1];
    for j0 in 0..n {
        for j1 in j0 + 1..n {
            if w[j1] != w[j0] {
                continue;
            }
            path.clear();
            path.extend([j0, j1]);
            visited[w[j1]] = true;
            let r = extend(d, w, &mut path, &mut visited, &mut visit);
            visited[w[j1]] = false;
            if let ControlFlow::Break(b) = r {
                return Some(b);
            }
        }
    }
    None
}

fn extend<B>(
    d: &DynkinDiagram,
    w: &[usize],
    path: &mut Vec<usize>,
    visited: &mut [bool],
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    visit(path)?;
    let last = *path.last().expect("path holds j0 and j1");
    for k in last + 1..w.len() {
        let node = w[k];
        if visited[node] {
            continue;
        }
        // Distance to the visited set is 1 iff the node is new and adjacent to a visited node.
        let adjacent = path[1..].iter().any(|&p| d.dist_unchecked(w[p], node) == 1);
        if !adjacent {
            continue;
        }
        visited[node] = true;
        path.push(k);
        let r = extend(d, w, path, visited, visit);
        path.pop();
        visited[node] = false;
        r?;
    }
    ControlFlow::Continue(())
}

/// All index sequences (1-based) whose subword is a hesitant jumping walk, in
/// lexicographic order.
pub fn hesitant_jumping_subwords(d: &DynkinDiagram, w: &[usize]) -> Result<Vec<Vec<usize>>> {
    d.check_word(w)?;
    let mut out = Vec::new();
    visit_hesitant_jumping::<()>(d, w, |p| {
        out.push(p.iter().map(|j| j + 1).collect());
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Lexicographically smallest subword that is a hesitant jumping ell-walk, or
/// `None` when the word is hesitant-jumping-ell-walk-avoiding.
pub fn find_hesitant_jumping_ell_subword(
    d: &DynkinDiagram,
    w: &[usize],
    ell: &[u32],
) -> Result<Option<SubwordWitness>> {
    check_len("ell", w.len(), ell.len())?;
    d.check_word(w)?;
    Ok(visit_hesitant_jumping(d, w, |p| {
        let head = i64::from(ell[p[0]]) - i64::from(ell[p[1]]);
        let tail: i64 = p[1..].iter().map(|&j| i64::from(ell[j])).sum();
        if head < tail {
            ControlFlow::Break(SubwordWitness {
                indices: p.iter().map(|j| j + 1).collect(),
                kind: WitnessKind::HesitantJumpingEllWalk,
            })
        } else {
            ControlFlow::Continue(())
        }
    }))
}

/// Lexicographically smallest subword that is a hesitant lambda-walk, or
/// `None` when the word is hesitant-lambda-walk-avoiding.
///
/// `reach[p]` records whether some diagram walk through strictly increasing
/// positions starting at `p` ends at a node with positive weight; the witness
/// is then read off greedily.
pub fn find_hesitant_lambda_subword(
    d: &DynkinDiagram,
    w: &[usize],
    lambda: &[u32],
) -> Result<Option<SubwordWitness>> {
    check_len("lambda", d.rank(), lambda.len())?;
    d.check_word(w)?;
    let n = w.len();
    let positive = |p: usize| lambda[w[p] - 1] > 0;
    let mut reach = vec![false; n];
    for p in (0..n).rev() {
        reach[p] = positive(p) || (p + 1..n).any(|q| reach[q] && d.dist_unchecked(w[p], w[q]) == 1);
    }
    let start = (0..n).find_map(|j0| {
        (j0 + 1..n)
            .find(|&j1| w[j1] == w[j0] && reach[j1])
            .map(|j1| (j0, j1))
    });
    let Some((j0, j1)) = start else {
        return Ok(None);
    };
    let mut indices = vec![j0, j1];
    let mut cur = j1;
    while !positive(cur) {
        cur = (cur + 1..n)
            .find(|&q| reach[q] && d.dist_unchecked(w[cur], w[q]) == 1)
            .expect("reach[cur] guarantees a continuation");
        indices.push(cur);
    }
    Ok(Some(SubwordWitness {
        indices: indices.into_iter().map(|j| j + 1).collect(),
        kind: WitnessKind::HesitantLambdaWalk,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(r: usize) -> DynkinDiagram {
        DynkinDiagram::a(r).unwrap()
    }

    #[test]
    fn jumping_walk_examples() {
        assert!(is_jumping_walk(&a(4), &[1, 2, 3, 4]).unwrap());
        assert!(is_jumping_walk(&a(5), &[3, 2, 1, 4, 5]).unwrap());
        assert!(is_jumping_walk(&a(5), &[3, 2, 4, 1, 5]).unwrap());
        assert!(!is_jumping_walk(&a(5), &[1, 3, 2, 4]).unwrap());
        let e8 = DynkinDiagram::e(8).unwrap();
        assert!(is_jumping_walk(&e8, &[4, 2, 3, 5, 1, 6, 7, 8]).unwrap());
        let d5 = DynkinDiagram::d(5).unwrap();
        assert!(is_jumping_walk(&d5, &[4, 3, 2, 5, 1]).unwrap());
        assert!(is_jumping_walk(&a(3), &[]).unwrap());
        assert!(is_jumping_walk(&a(3), &[2]).unwrap());
        assert!(!is_jumping_walk(&a(3), &[2, 2]).unwrap());
        assert!(is_jumping_walk(&a(3), &[4]).is_err());
    }

    #[test]
    fn hesitant_examples() {
        assert!(is_hesitant_jumping_walk(&a(2), &[1, 1]).unwrap());
        assert!(!is_hesitant_jumping_walk(&a(4), &[1, 2, 3, 4]).unwrap());
        assert!(is_hesitant_jumping_walk(&a(3), &[2, 2, 1]).unwrap());
        assert!(!is_hesitant_jumping_walk(&a(3), &[2]).unwrap());
        assert!(!is_hesitant_jumping_walk(&a(3), &[2, 2, 2]).unwrap());

        assert!(is_hesitant_jumping_ell_walk(&a(2), &[1, 1], &[2, 2]).unwrap());
        assert!(!is_hesitant_jumping_ell_walk(&a(2), &[1, 1], &[3, 1]).unwrap());
        assert!(!is_hesitant_jumping_ell_walk(&a(2), &[1, 1], &[0, 0]).unwrap());
        assert!(matches!(
            is_hesitant_jumping_ell_walk(&a(2), &[1, 1], &[0]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn ell_subword_search() {
        let w = [1, 2, 1];
        let hit = find_hesitant_jumping_ell_subword(&a(2), &w, &[2, 1, 2])
            .unwrap()
            .unwrap();
        assert_eq!(hit.indices, vec![1, 3]);
        assert_eq!(hit.kind, WitnessKind::HesitantJumpingEllWalk);
        assert_eq!(
            find_hesitant_jumping_ell_subword(&a(2), &w, &[3, 1, 1]).unwrap(),
            None
        );

        let w6 = [1, 2, 1, 3, 2, 1];
        let hit = find_hesitant_jumping_ell_subword(&a(3), &w6, &[9, 9, 1, 1, 1, 1])
            .unwrap()
            .unwrap();
        assert_eq!(hit.indices, vec![3, 6]);
        assert!(find_hesitant_jumping_ell_subword(&a(3), &w6, &[1; 5]).is_err());
    }

    #[test]
    fn hesitant_subwords_of_121321() {
        // (1,6) is also hesitant; its inequality is implied by those of (1,3) and (3,6).
        let all = hesitant_jumping_subwords(&a(3), &[1, 2, 1, 3, 2, 1]).unwrap();
        assert_eq!(
            all,
            vec![
                vec![1, 3],
                vec![1, 3, 5],
                vec![1, 6],
                vec![2, 5],
                vec![2, 5, 6],
                vec![3, 6]
            ]
        );
    }

    #[test]
    fn diagram_walks() {
        assert!(is_diagram_walk(&a(4), &[1, 2, 3, 4]).unwrap());
        assert!(!is_diagram_walk(&a(5), &[3, 2, 4, 1, 5]).unwrap());
        assert!(!is_diagram_walk(&a(2), &[1, 1]).unwrap());
        assert!(is_diagram_walk(&a(3), &[1, 2, 1, 2, 3]).unwrap());
        assert!(is_diagram_walk(&a(3), &[]).unwrap());
    }

    #[test]
    fn lambda_subword_search() {
        let hit = find_hesitant_lambda_subword(&a(2), &[1, 2, 1], &[1, 0])
            .unwrap()
            .unwrap();
        assert_eq!(hit.indices, vec![1, 3]);
        assert_eq!(hit.kind, WitnessKind::HesitantLambdaWalk);
        assert_eq!(
            find_hesitant_lambda_subword(&a(2), &[1, 2, 1], &[0, 0]).unwrap(),
            None
        );
        let hit = find_hesitant_lambda_subword(&a(2), &[1, 2, 2], &[1, 1])
            .unwrap()
            .unwrap();
        assert_eq!(hit.indices, vec![2, 3]);
        // needs an extension: (1,1) then walk 1 -> 2 -> 3 with only lambda_3 > 0
        let hit = find_hesitant_lambda_subword(&a(3), &[1, 1, 2, 3], &[0, 0, 1])
            .unwrap()
            .unwrap();
        assert_eq!(hit.indices, vec![1, 2, 3, 4]);
        assert!(find_hesitant_lambda_subword(&a(2), &[1, 2, 1], &[1]).is_err());
    }

    #[test]
    fn word_parsing() {
        let w: Word = "1, 2,1".parse().unwrap();
        assert_eq!(w.0, vec![1, 2, 1]);
        assert_eq!(w.to_string(), "1,2,1");
        assert!("1,x".parse::<Word>().is_err());
        assert_eq!("".parse::<Word>().unwrap(), Word::default());
        assert_eq!(w.subword(&[1, 3]).unwrap().0, vec![1, 1]);
        assert!(w.subword(&[0]).is_err());
        assert!(w.subword(&[4]).is_err());
    }

    /// Every subset of positions, as 0-based index vectors in lexicographic order.
    fn all_index_sequences(n: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (1u32..(1 << n))
            .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
            .collect();
        out.sort();
        out
    }

    fn word_strategy(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(1..=rank, 0..=max_len)
    }

    proptest! {
        #[test]
        fn jumping_walks_are_distinct_and_connected(w in word_strategy(5, 6)) {
            let d = a(5);
            if is_jumping_walk(&d, &w).unwrap() {
                let mut s = w.clone();
                s.sort_unstable();
                s.dedup();
                prop_assert_eq!(s.len(), w.len());
                // type A: the visited set is an interval
                if let (Some(lo), Some(hi)) = (s.first(), s.last()) {
                    prop_assert_eq!(hi - lo + 1, s.len());
                }
            }
        }

        #[test]
        fn search_matches_brute_force(w in word_strategy(3, 7), seed in prop::collection::vec(0u32..4, 7)) {
            let d = a(3);
            let ell = &seed[..w.len()];
            let brute = all_index_sequences(w.len()).into_iter().find(|idx| {
                let sub: Vec<usize> = idx.iter().map(|&j| w[j]).collect();
                let sub_ell: Vec<u32> = idx.iter().map(|&j| ell[j]).collect();
                is_hesitant_jumping_ell_walk(&d, &sub, &sub_ell).unwrap()
            });
            let found = find_hesitant_jumping_ell_subword(&d, &w, ell).unwrap();
            prop_assert_eq!(
                found.map(|h| h.indices),
                brute.map(|idx| idx.into_iter().map(|j| j + 1).collect::<Vec<_>>())
            );
        }

        #[test]
        fn lambda_search_matches_brute_force(w in word_strategy(4, 7), lambda in prop::collection::vec(0u32..2, 4)) {
            let d = a(4);
            let brute = all_index_sequences(w.len()).into_iter().find(|idx| {
                let sub: Vec<usize> = idx.iter().map(|&j| w[j]).collect();
                is_hesitant_lambda_walk(&d, &sub, &lambda).unwrap()
            });
            let found = find_hesitant_lambda_subword(&d, &w, &lambda).unwrap();
            prop_assert_eq!(
                found.map(|h| h.indices),
                brute.map(|idx| idx.into_iter().map(|j| j + 1).collect::<Vec<_>>())
            );
        }

        #[test]
        fn witness_is_monotone_in_tail_ell(w in word_strategy(4, 7), seed in prop::collection::vec(0u32..3, 7), bump in 1u32..4, pick in 0usize..8) {
            let d = a(4);
            let ell = seed[..w.len()].to_vec();
            if let Some(hit) = find_hesitant_jumping_ell_subword(&d, &w, &ell).unwrap() {
                let sub = hit.subword(&w);
                prop_assert!(is_hesitant_jumping_ell_walk(&d, &sub, &hit.restrict(&ell)).unwrap());
                let tail = &hit.indices[1..];
                let k = tail[pick % tail.len()];
                let mut bigger = ell.clone();
                bigger[k - 1] += bump;
                prop_assert!(find_hesitant_jumping_ell_subword(&d, &w, &bigger).unwrap().is_some());
            }
        }
    }
}
