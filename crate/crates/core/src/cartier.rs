//! Cartier data `m_sigma` of the divisor attached to a twisted cube, the
//! untwistedness criterion built on it, and the fan of the Bott manifold.
//!
//! For a sign vector `sigma`, `m_sigma` is computed from the back:
//! `m_{sigma,j} = 0` when `sigma_j = +`, and `A_j(m_{sigma,j+1}, ..., m_{sigma,n})`
//! when `sigma_j = -`. The cube is untwisted iff every component of every
//! `m_sigma` is non-negative.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::twistcube::TwistParams;

/// Largest `n` scanned without an explicit override; the scan visits `2^n` sign vectors.
pub const SIGN_SCAN_LIMIT: usize = 30;

// Below this size the scan runs sequentially.
const PARALLEL_THRESHOLD: usize = 14;

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

/// An element of `{+,-}^n`. Displays as e.g. `"-+-"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn all(n: usize, s: Sign) -> Self {
        SignVector(vec![s; n])
    }

    /// Minus exactly at the given 1-based positions.
    pub fn minus_at(n: usize, positions: &[usize]) -> Self {
        let mut v = vec![Sign::Plus; n];
        for &p in positions {
            v[p - 1] = Sign::Minus;
        }
        SignVector(v)
    }

    /// The `index`-th vector in lexicographic order with `-` before `+`.
    pub fn nth(n: usize, index: u64) -> Self {
        SignVector(
            (0..n)
                .map(|j| {
                    if index >> (n - 1 - j) & 1 == 1 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Sign::Minus => "-",
                Sign::Plus => "+",
            })?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|ch| match ch {
                '-' => Ok(Sign::Minus),
                '+' => Ok(Sign::Plus),
                _ => Err(Error::Parse(format!("bad sign `{ch}` in `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

impl Serialize for SignVector {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignVector {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `m_sigma` together with its sign vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartierPoint {
    pub sigma: SignVector,
    pub m: Vec<i64>,
}

pub fn cartier_point(p: &TwistParams, sigma: &SignVector) -> Result<CartierPoint> {
    if sigma.len() != p.n() {
        return Err(Error::LengthMismatch {
            what: "sigma",
            expected: p.n(),
            found: sigma.len(),
        });
    }
    let mut m = vec![0i64; p.n()];
    fill_cartier(p, &sigma.0, &mut m);
    Ok(CartierPoint {
        sigma: sigma.clone(),
        m,
    })
}

fn fill_cartier(p: &TwistParams, sigma: &[Sign], m: &mut [i64]) {
    for j in (0..m.len()).rev() {
        m[j] = match sigma[j] {
            Sign::Plus => 0,
            Sign::Minus => p.a_unchecked(j, m),
        };
    }
}

/// A sign vector and 1-based index with `m_{sigma,j} < 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartierWitness {
    pub sigma: SignVector,
    pub j: usize,
    pub m: Vec<i64>,
}

/// Outcome of the Cartier-data test. Serializes as
/// `{"untwisted": bool, "witness": {"sigma": "-+-", "j": 1, "m": [...]} | null}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Untwistedness {
    pub untwisted: bool,
    pub witness: Option<CartierWitness>,
}

/// Scans all `2^n` sign vectors. Refuses `n > SIGN_SCAN_LIMIT`; see
/// [`is_untwisted_with_limit`].
pub fn is_untwisted(p: &TwistParams) -> Result<Untwistedness> {
    is_untwisted_with_limit(p, false)
}

/// The witness is the first sign vector in lexicographic order (`-` before
/// `+`) having a negative component, with the smallest such `j`. Parallel
/// scans report the same witness as the sequential one.
pub fn is_untwisted_with_limit(p: &TwistParams, allow_large_n: bool) -> Result<Untwistedness> {
    let n = p.n();
    if n > SIGN_SCAN_LIMIT && !allow_large_n {
        return Err(Error::TooLarge {
            what: "Cartier sign scan",
            n,
            limit: SIGN_SCAN_LIMIT,
        });
    }
    if n >= 64 {
        return Err(Error::TooLarge {
            what: "Cartier sign scan",
            n,
            limit: 63,
        });
    }
    let check = |index: u64| -> Option<CartierWitness> {
        let sigma = SignVector::nth(n, index);
        let mut m = vec![0i64; n];
        fill_cartier(p, &sigma.0, &mut m);
        m.iter()
            .position(|&v| v < 0)
            .map(|j| CartierWitness { sigma, j: j + 1, m })
    };
    let total = 1u64 << n;
    let witness = if n < PARALLEL_THRESHOLD {
        (0..total).find_map(check)
    } else {
        (0..total).into_par_iter().find_map_first(check)
    };
    Ok(Untwistedness {
        untwisted: witness.is_none(),
        witness,
    })
}

/// Rays `e_j^+` and `e_j^- = -e_j^+ - sum_{k>j} c_jk e_k^+` of the fan
/// `Sigma(c)`; its maximal cones are indexed by sign vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanDescription {
    pub plus_rays: Vec<Vec<i64>>,
    pub minus_rays: Vec<Vec<i64>>,
}

impl FanDescription {
    pub fn ray(&self, j: usize, s: Sign) -> &[i64] {
        match s {
            Sign::Plus => &self.plus_rays[j - 1],
            Sign::Minus => &self.minus_rays[j - 1],
        }
    }

    /// Generators `{e_j^{sigma_j}}` of the cone for `sigma`.
    pub fn cone(&self, sigma: &SignVector) -> Vec<Vec<i64>> {
        sigma
            .0
            .iter()
            .enumerate()
            .map(|(j, &s)| self.ray(j + 1, s).to_vec())
            .collect()
    }

    /// All `2^n` maximal cones in lexicographic sign order.
    pub fn maximal_cones(&self) -> impl Iterator<Item = (SignVector, Vec<Vec<i64>>)> + '_ {
        let n = self.plus_rays.len();
        (0..1u64 << n).map(move |i| {
            let sigma = SignVector::nth(n, i);
            let gens = self.cone(&sigma);
            (sigma, gens)
        })
    }
}

pub fn fan(p: &TwistParams) -> FanDescription {
    let n = p.n();
    let plus_rays: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|k| i64::from(j == k)).collect())
        .collect();
    let minus_rays = (1..=n)
        .map(|j| {
            (1..=n)
                .map(|k| match k.cmp(&j) {
                    std::cmp::Ordering::Less => 0,
                    std::cmp::Ordering::Equal => -1,
                    std::cmp::Ordering::Greater => -p.c(j, k),
                })
                .collect()
        })
        .collect();
    FanDescription {
        plus_rays,
        minus_rays,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinDiagram;
    use proptest::prelude::*;

    fn a2_121(ell: [u32; 3]) -> TwistParams {
        TwistParams::from_word_and_ell(&DynkinDiagram::a(2).unwrap(), &[1, 2, 1], &ell).unwrap()
    }

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn sign_vectors() {
        assert_eq!(SignVector::nth(3, 0), sv("---"));
        assert_eq!(SignVector::nth(3, 2), sv("-+-"));
        assert_eq!(SignVector::nth(3, 7), sv("+++"));
        assert_eq!(SignVector::minus_at(4, &[1, 3]), sv("-+-+"));
        assert_eq!(sv("-+-").to_string(), "-+-");
        assert!("-x".parse::<SignVector>().is_err());
        assert_eq!(serde_json::to_string(&sv("+-")).unwrap(), "\"+-\"");
    }

    #[test]
    fn cartier_points() {
        let p = a2_121([2, 1, 2]);
        assert_eq!(cartier_point(&p, &sv("+++")).unwrap().m, vec![0, 0, 0]);
        assert_eq!(cartier_point(&p, &sv("-+-")).unwrap().m, vec![-2, 0, 2]);
        let q = a2_121([3, 1, 1]);
        assert_eq!(cartier_point(&q, &sv("---")).unwrap().m, vec![3, 2, 1]);
        assert!(cartier_point(&p, &sv("--")).is_err());
    }

    #[test]
    fn criterion_on_sl3() {
        let u = is_untwisted(&a2_121([3, 1, 1])).unwrap();
        assert!(u.untwisted);
        assert_eq!(u.witness, None);

        let t = is_untwisted(&a2_121([2, 1, 2])).unwrap();
        assert!(!t.untwisted);
        let w = t.witness.unwrap();
        assert_eq!(w.sigma, sv("-+-"));
        assert_eq!(w.j, 1);
        assert_eq!(w.m, vec![-2, 0, 2]);
        let json = serde_json::to_value(is_untwisted(&a2_121([2, 1, 2])).unwrap()).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"untwisted": false, "witness": {"sigma": "-+-", "j": 1, "m": [-2, 0, 2]}})
        );
    }

    #[test]
    fn large_n_guard() {
        let n = SIGN_SCAN_LIMIT + 1;
        let p = TwistParams::new(vec![vec![0; n]; n], vec![0; n]).unwrap();
        assert!(matches!(is_untwisted(&p), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn parallel_scan_agrees_with_sequential() {
        // n above the parallel threshold; negative entries only deep in the order.
        let n = PARALLEL_THRESHOLD + 2;
        let mut c = vec![vec![0i64; n]; n];
        c[0][n - 1] = 2;
        c[3][n - 2] = 1;
        let mut ell = vec![1u32; n];
        ell[0] = 1;
        ell[3] = 0;
        let p = TwistParams::new(c, ell).unwrap();
        let fast = is_untwisted(&p).unwrap();
        let slow = (0..1u64 << n).find_map(|i| {
            let s = SignVector::nth(n, i);
            let m = cartier_point(&p, &s).unwrap().m;
            m.iter().position(|&v| v < 0).map(|j| (s, j + 1))
        });
        let w = fast.witness.unwrap();
        assert_eq!(Some((w.sigma, w.j)), slow);
    }

    #[test]
    fn fan_rays() {
        let one = TwistParams::new(vec![vec![0]], vec![5]).unwrap();
        let f = fan(&one);
        assert_eq!(f.plus_rays, vec![vec![1]]);
        assert_eq!(f.minus_rays, vec![vec![-1]]);

        let f = fan(&a2_121([0, 0, 0]));
        assert_eq!(
            f.minus_rays,
            vec![vec![-1, 1, -2], vec![0, -1, 1], vec![0, 0, -1]]
        );
        assert_eq!(f.maximal_cones().count(), 8);
        let (s, gens) = f.maximal_cones().nth(2).unwrap();
        assert_eq!(s, sv("-+-"));
        assert_eq!(gens, vec![vec![-1, 1, -2], vec![0, 1, 0], vec![0, 0, -1]]);

        let fig1 = TwistParams::new(vec![vec![0, 1], vec![0, 0]], vec![2, 3]).unwrap();
        assert_eq!(fan(&fig1).minus_rays, vec![vec![-1, -1], vec![0, -1]]);
    }

    fn params_strategy() -> impl Strategy<Value = TwistParams> {
        (1usize..=5).prop_flat_map(|n| {
            (
                prop::collection::vec(prop::collection::vec(-2i64..=2, n), n),
                prop::collection::vec(0u32..=3, n),
            )
                .prop_map(|(c, ell)| TwistParams::new(c, ell).unwrap())
        })
    }

    proptest! {
        #[test]
        fn recursion_is_suffix_determined(p in params_strategy(), idx in any::<u64>()) {
            let n = p.n();
            let s = SignVector::nth(n, idx % (1 << n));
            let m = cartier_point(&p, &s).unwrap().m;
            for j in 1..=n {
                let expected = match s.0[j - 1] {
                    Sign::Plus => 0,
                    Sign::Minus => p.eval_a(j, &m).unwrap(),
                };
                prop_assert_eq!(m[j - 1], expected);
            }
        }

        #[test]
        fn witness_is_genuine(p in params_strategy()) {
            let u = is_untwisted(&p).unwrap();
            prop_assert_eq!(u.untwisted, u.witness.is_none());
            if let Some(w) = u.witness {
                let m = cartier_point(&p, &w.sigma).unwrap().m;
                prop_assert!(m[w.j - 1] < 0);
                prop_assert!(m[..w.j - 1].iter().all(|&v| v >= 0));
                prop_assert_eq!(m, w.m);
            }
        }

        #[test]
        fn fan_linear_relation(p in params_strategy()) {
            let f = fan(&p);
            let n = p.n();
            for j in 1..=n {
                for k in 1..=n {
                    let lhs = f.plus_rays[j - 1][k - 1] + f.minus_rays[j - 1][k - 1];
                    let rhs = if k > j { -p.c(j, k) } else { 0 };
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
