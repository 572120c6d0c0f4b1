//! Twisted cubes `(C(c, ell), rho)`: parameters, membership, density and
//! signed lattice points.
//!
//! For integer parameters `c = {c_jk}` (`j < k`) and `ell`, the functions
//!
//! ```text
//! A_n(x) = ell_n,   A_j(x) = ell_j - sum_{k > j} c_jk x_k
//! ```
//!
//! cut out `C(c, ell)` coordinate by coordinate: each `x_j` must satisfy
//! `A_j(x) < x_j < 0` or `0 <= x_j <= A_j(x)`. Since `A_j` only reads later
//! coordinates, everything here is evaluated back to front.

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinDiagram;
use crate::error::{Error, Result};

/// Parameters `(c, ell)` of one twisted cube.
///
/// `c` is stored as a full `n x n` matrix whose diagonal and lower triangle
/// are always zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistParams {
    c: Vec<Vec<i64>>,
    ell: Vec<u32>,
}

impl TwistParams {
    /// Builds parameters from a square matrix; entries on or below the
    /// diagonal are ignored.
    pub fn new(c: Vec<Vec<i64>>, ell: Vec<u32>) -> Result<Self> {
        let n = ell.len();
        if c.len() != n {
            return Err(Error::LengthMismatch {
                what: "c rows",
                expected: n,
                found: c.len(),
            });
        }
        let mut c = c;
        for (j, row) in c.iter_mut().enumerate() {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    what: "c row",
                    expected: n,
                    found: row.len(),
                });
            }
            row[..=j].iter_mut().for_each(|v| *v = 0);
        }
        Ok(Self { c, ell })
    }

    /// `c_jk = <alpha_{i_k}, alpha_{i_j}^vee>` and
    /// `ell_j = <m_j w_{i_j} + ... + m_n w_{i_n}, alpha_{i_j}^vee>`, which reduces to
    /// the sum of `m_j'` over `j' >= j` with `i_j' = i_j`.
    pub fn from_word(d: &DynkinDiagram, word: &[usize], mult: &[u32]) -> Result<Self> {
        d.check_word(word)?;
        if mult.len() != word.len() {
            return Err(Error::LengthMismatch {
                what: "mult",
                expected: word.len(),
                found: mult.len(),
            });
        }
        let n = word.len();
        let c = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| {
                        if k > j {
                            d.cartan_unchecked(word[k], word[j])
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let ell = (0..n)
            .map(|j| {
                (j..n)
                    .filter(|&jp| word[jp] == word[j])
                    .map(|jp| mult[jp])
                    .sum()
            })
            .collect();
        Ok(Self { c, ell })
    }

    /// Word-mode parameters with `ell` given directly.
    pub fn from_word_and_ell(d: &DynkinDiagram, word: &[usize], ell: &[u32]) -> Result<Self> {
        if ell.len() != word.len() {
            return Err(Error::LengthMismatch {
                what: "ell",
                expected: word.len(),
                found: ell.len(),
            });
        }
        let zero = vec![0; word.len()];
        let mut p = Self::from_word(d, word, &zero)?;
        p.ell = ell.to_vec();
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.ell.len()
    }

    pub fn ell(&self) -> &[u32] {
        &self.ell
    }

    /// `c_jk` for 1-based `j < k`; zero otherwise.
    pub fn c(&self, j: usize, k: usize) -> i64 {
        self.c[j - 1][k - 1]
    }

    pub fn c_matrix(&self) -> &[Vec<i64>] {
        &self.c
    }

    fn check_point(&self, x: &[i64]) -> Result<()> {
        if x.len() != self.n() {
            return Err(Error::LengthMismatch {
                what: "point",
                expected: self.n(),
                found: x.len(),
            });
        }
        Ok(())
    }

    /// `A_j(x)` for 1-based `j`. Only `x_k` with `k > j` are read.
    pub fn eval_a(&self, j: usize, x: &[i64]) -> Result<i64> {
        self.check_point(x)?;
        if j == 0 || j > self.n() {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.n(),
            });
        }
        Ok(self.a_unchecked(j - 1, x))
    }

    /// 0-based `A_j`; `x` may be any slice covering positions `> j`.
    #[inline]
    pub(crate) fn a_unchecked(&self, j: usize, x: &[i64]) -> i64 {
        let row = &self.c[j];
        i64::from(self.ell[j]) - (j + 1..self.n()).map(|k| row[k] * x[k]).sum::<i64>()
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        self.check_point(x)?;
        Ok(self.contains_unchecked(x))
    }

    fn contains_unchecked(&self, x: &[i64]) -> bool {
        (0..self.n())
            .rev()
            .all(|j| in_branch(x[j], self.a_unchecked(j, x)))
    }

    /// `rho(x)`: zero off `C`, otherwise `(-1)^n prod sgn(x_k)` with
    /// `sgn(t) = 1` for `t < 0` and `-1` for `t >= 0`.
    pub fn density(&self, x: &[i64]) -> Result<i32> {
        self.check_point(x)?;
        if !self.contains_unchecked(x) {
            return Ok(0);
        }
        Ok(sign_of(x))
    }

    /// Integer hull of `C` obtained by propagating coordinate intervals from
    /// the last coordinate down to the first. Returns `(lo, hi)` per coordinate.
    pub fn bounding_box(&self) -> Vec<(i64, i64)> {
        let n = self.n();
        let mut bounds = vec![(0i64, 0i64); n];
        for j in (0..n).rev() {
            let (mut amin, mut amax) = (i64::from(self.ell[j]), i64::from(self.ell[j]));
            for (k, &(lo, hi)) in bounds.iter().enumerate().skip(j + 1) {
                let c = self.c[j][k];
                // term is -c * x_k
                let (t1, t2) = (-c * lo, -c * hi);
                amin += t1.min(t2);
                amax += t1.max(t2);
            }
            bounds[j] = ((amin + 1).min(0), amax.max(0));
        }
        bounds
    }

    /// All lattice points of `C` with their density, sorted lexicographically.
    ///
    /// Coordinates are fixed from `x_n` down to `x_1`; each range is exact
    /// because `A_j` is known once the later coordinates are.
    pub fn lattice_points(&self) -> Vec<SignedLatticePoint> {
        let n = self.n();
        let mut out = Vec::new();
        if n == 0 {
            out.push(SignedLatticePoint {
                x: Vec::new(),
                sign: 1,
            });
            return out;
        }
        let mut x = vec![0i64; n];
        self.fill(n - 1, &mut x, &mut out);
        out.sort_by(|a, b| a.x.cmp(&b.x));
        out
    }

    fn fill(&self, j: usize, x: &mut [i64], out: &mut Vec<SignedLatticePoint>) {
        let a = self.a_unchecked(j, x);
        let range = if a < 0 { a + 1..=-1 } else { 0..=a };
        for v in range {
            x[j] = v;
            if j == 0 {
                out.push(SignedLatticePoint {
                    x: x.to_vec(),
                    sign: sign_of(x),
                });
            } else {
                self.fill(j - 1, x, out);
            }
        }
        x[j] = 0;
    }

    /// Sum of `rho` over the lattice points.
    pub fn signed_count(&self) -> i64 {
        self.lattice_points()
            .iter()
            .map(|p| i64::from(p.sign))
            .sum()
    }
}

#[inline]
fn in_branch(xj: i64, a: i64) -> bool {
    (a < xj && xj < 0) || (0 <= xj && xj <= a)
}

fn sgn(t: i64) -> i32 {
    if t < 0 {
        1
    } else {
        -1
    }
}

fn sign_of(x: &[i64]) -> i32 {
    let parity = if x.len().is_multiple_of(2) { 1 } else { -1 };
    parity * x.iter().map(|&t| sgn(t)).product::<i32>()
}

/// An integer point of `C(c, ell)` and its density value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedLatticePoint {
    pub x: Vec<i64>,
    pub sign: i32,
}

/// Lattice listing in the JSON shape used by the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub points: Vec<SignedLatticePoint>,
    pub positive: usize,
    pub negative: usize,
    pub signed_count: i64,
}

impl LatticeSummary {
    pub fn of(p: &TwistParams) -> Self {
        let points = p.lattice_points();
        let positive = points.iter().filter(|q| q.sign > 0).count();
        let negative = points.len() - positive;
        Self {
            points,
            positive,
            negative,
            signed_count: positive as i64 - negative as i64,
        }
    }
}

/// Multiplicities pulled back from a dominant weight: `m_j = lambda_{i_j}`
/// when `i_j` does not occur again later in the word, `0` otherwise.
pub fn mult_from_weight(d: &DynkinDiagram, word: &[usize], lambda: &[u32]) -> Result<Vec<u32>> {
    check_lambda(d, lambda)?;
    d.check_word(word)?;
    Ok((0..word.len())
        .map(|j| {
            if word[j + 1..].contains(&word[j]) {
                0
            } else {
                lambda[word[j] - 1]
            }
        })
        .collect())
}

/// `ell_j = lambda_{i_j}`.
pub fn ell_from_weight(d: &DynkinDiagram, word: &[usize], lambda: &[u32]) -> Result<Vec<u32>> {
    check_lambda(d, lambda)?;
    d.check_word(word)?;
    Ok(word.iter().map(|&i| lambda[i - 1]).collect())
}

fn check_lambda(d: &DynkinDiagram, lambda: &[u32]) -> Result<()> {
    if lambda.len() != d.rank() {
        return Err(Error::LengthMismatch {
            what: "lambda",
            expected: d.rank(),
            found: lambda.len(),
        });
    }
    Ok(())
}
