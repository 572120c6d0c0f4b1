//! Simply-laced Dynkin diagrams of types A, D and E.
//!
//! Nodes are labelled `1..=rank` following the Bourbaki/Humphreys numbering:
//!
//! ```text
//! A_r:  1 - 2 - ... - r
//!
//! D_r:  1 - 2 - ... - (r-2) - (r-1)
//!                       |
//!                       r
//!
//! E_r:  1 - 3 - 4 - 5 - ... - r
//!               |
//!               2
//! ```
//!
//! All-pairs distances are computed once at construction, so every query
//! afterwards is a table lookup.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Family of a simply-laced root system.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

/// A connected simply-laced Dynkin diagram with cached graph distances.
#[derive(Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    family: Family,
    rank: usize,
    edges: Vec<(usize, usize)>,
    // dist[a][b] for 0-based a, b.
    dist: Vec<Vec<usize>>,
}

impl DynkinDiagram {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidDiagram {
            family: family.letter(),
            rank,
            reason,
        };
        let edges: Vec<(usize, usize)> = match family {
            Family::A => {
                if rank < 1 {
                    return Err(invalid("type A requires rank >= 1"));
                }
                (1..rank).map(|a| (a, a + 1)).collect()
            }
            Family::D => {
                if rank < 4 {
                    return Err(invalid("type D requires rank >= 4"));
                }
                let mut e: Vec<_> = (1..rank - 1).map(|a| (a, a + 1)).collect();
                e.push((rank - 2, rank));
                e
            }
            Family::E => match rank {
                6 => vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
                7 => vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
                8 => vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)],
                _ => return Err(invalid("type E requires rank 6, 7 or 8")),
            },
        };
        let dist = all_pairs_distances(rank, &edges);
        Ok(Self {
            family,
            rank,
            edges,
            dist,
        })
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(Family::D, rank)
    }

    pub fn e(rank: usize) -> Result<Self> {
        Self::new(Family::E, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edge set as pairs `(a, b)` with `a < b`, sorted.
    pub fn adjacency(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        e.sort_unstable();
        e
    }

    /// Nodes adjacent to `a`, ascending.
    pub fn neighbors(&self, a: usize) -> Result<Vec<usize>> {
        self.check_node(a)?;
        Ok((1..=self.rank)
            .filter(|&b| self.dist[a - 1][b - 1] == 1)
            .collect())
    }

    pub fn check_node(&self, a: usize) -> Result<()> {
        if a == 0 || a > self.rank {
            Err(Error::NodeOutOfRange {
                node: a,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// Validates every entry of `word` against this diagram.
    pub fn check_word(&self, word: &[usize]) -> Result<()> {
        word.iter().try_for_each(|&a| self.check_node(a))
    }

    /// Shortest-path distance between two nodes.
    pub fn node_distance(&self, a: usize, b: usize) -> Result<usize> {
        self.check_node(a)?;
        self.check_node(b)?;
        Ok(self.dist_unchecked(a, b))
    }

    #[inline]
    pub(crate) fn dist_unchecked(&self, a: usize, b: usize) -> usize {
        self.dist[a - 1][b - 1]
    }

    /// Minimum distance between a node of `a` and a node of `b`.
    ///
    /// Returns `None` (an infinite distance) when either set is empty.
    pub fn set_distance(&self, a: &[usize], b: &[usize]) -> Result<Option<usize>> {
        self.check_word(a)?;
        self.check_word(b)?;
        Ok(self.set_distance_unchecked(a, b))
    }

    pub(crate) fn set_distance_unchecked(&self, a: &[usize], b: &[usize]) -> Option<usize> {
        a.iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.dist_unchecked(x, y))
            .min()
    }

    /// The Cartan integer `<alpha_j, alpha_k^vee>`: 2 on the diagonal, -1 for
    /// adjacent nodes, 0 otherwise.
    pub fn cartan_integer(&self, j: usize, k: usize) -> Result<i64> {
        self.check_node(j)?;
        self.check_node(k)?;
        Ok(self.cartan_unchecked(j, k))
    }

    #[inline]
    pub(crate) fn cartan_unchecked(&self, j: usize, k: usize) -> i64 {
        match self.dist_unchecked(j, k) {
            0 => 2,
            1 => -1,
            _ => 0,
        }
    }

    /// Full `rank x rank` Cartan matrix, row `j-1`, column `k-1`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (1..=self.rank)
            .map(|j| {
                (1..=self.rank)
                    .map(|k| self.cartan_unchecked(j, k))
                    .collect()
            })
            .collect()
    }
}

fn all_pairs_distances(rank: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut nbrs = vec![Vec::new(); rank];
    for &(a, b) in edges {
        nbrs[a - 1].push(b - 1);
        nbrs[b - 1].push(a - 1);
    }
    (0..rank)
        .map(|src| {
            let mut d = vec![usize::MAX; rank];
            d[src] = 0;
            let mut queue = VecDeque::from([src]);
            while let Some(v) = queue.pop_front() {
                for &w in &nbrs[v] {
                    if d[w] == usize::MAX {
                        d[w] = d[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl fmt::Debug for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DynkinDiagram({self})")
    }
}

impl FromStr for DynkinDiagram {
    type Err = Error;

    /// Parses `"A5"`, `"D4"`, `"E7"` (case-insensitive family letter).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty diagram name".into()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| {
            Error::Parse(format!("bad diagram name `{s}`, expected e.g. A3, D4, E6"))
        })?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'D' => Family::D,
            'E' => Family::E,
            'B' | 'C' | 'F' | 'G' => return Err(Error::Unsupported(s.to_string())),
            _ => return Err(Error::Parse(format!("unknown root system family in `{s}`"))),
        };
        Self::new(family, rank)
    }
}

impl Serialize for DynkinDiagram {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DynkinDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
