//! Pointed matched circles and the chain-level bookkeeping on them.
//!
//! Points are labelled `1..=4k` in the positive direction of the circle,
//! starting just after the basepoint `z`. The interval `I_j = [a_j, a_{j+1}]`
//! carries coordinate `j` (1-based) of an [`H1Chain`]; the interval through
//! `z` is not a coordinate and always has multiplicity zero.

use std::ops::{Add, Index, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PointedMatchedCircle {
    pub n_points: usize,
    pub matching: Vec<[usize; 2]>,
}

/// Rational 1-chain on `(Z, a)`, one coordinate per non-basepoint interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct H1Chain(#[serde(with = "rational::serde_q_vec")] pub Vec<Q>);

/// Rational 0-chain on the marked points `a_1..a_{4k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct H0Chain(#[serde(with = "rational::serde_q_vec")] pub Vec<Q>);

impl PointedMatchedCircle {
    pub fn new(n_points: usize, matching: Vec<[usize; 2]>) -> Result<Self> {
        let pmc = PointedMatchedCircle { n_points, matching };
        pmc.validate()?;
        Ok(pmc)
    }

    /// The genus-one circle with matching `{1,3},{2,4}`.
    pub fn torus() -> Self {
        PointedMatchedCircle {
            n_points: 4,
            matching: vec![[1, 3], [2, 4]],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_points == 0 || !self.n_points.is_multiple_of(4) {
            return Err(Error::BadPointCount(self.n_points));
        }
        let mut seen = vec![false; self.n_points + 1];
        for pair in &self.matching {
            for &p in pair {
                if p == 0 || p > self.n_points {
                    return Err(Error::MalformedMatching(format!("point {p} out of range")));
                }
                if seen[p] {
                    return Err(Error::MalformedMatching(format!("point {p} repeated")));
                }
                seen[p] = true;
            }
        }
        if let Some(p) = (1..=self.n_points).find(|&p| !seen[p]) {
            return Err(Error::MalformedMatching(format!("point {p} missing")));
        }
        Ok(())
    }

    pub fn genus(&self) -> usize {
        self.n_points / 4
    }

    pub fn h1_dim(&self) -> usize {
        self.n_points - 1
    }

    /// Index into `matching` of the pair containing point `p`.
    pub fn pair_of(&self, p: usize) -> Option<usize> {
        self.matching.iter().position(|pair| pair.contains(&p))
    }

    /// The same circle traversed backwards: point `i` becomes `4k + 1 - i`.
    pub fn reversed(&self) -> Self {
        let n = self.n_points;
        PointedMatchedCircle {
            n_points: n,
            matching: self
                .matching
                .iter()
                .map(|[a, b]| [n + 1 - a, n + 1 - b])
                .collect(),
        }
    }

    /// Matching normalised to sorted pairs in sorted order, for comparisons.
    pub fn canonical_matching(&self) -> Vec<[usize; 2]> {
        let mut m: Vec<[usize; 2]> = self
            .matching
            .iter()
            .map(|&[a, b]| [a.min(b), a.max(b)])
            .collect();
        m.sort();
        m
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.n_points == other.n_points && self.canonical_matching() == other.canonical_matching()
    }

    fn check_h1(&self, alpha: &H1Chain) -> Result<()> {
        if alpha.len() != self.h1_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.h1_dim(),
                got: alpha.len(),
            });
        }
        Ok(())
    }

    fn check_h0(&self, x: &H0Chain) -> Result<()> {
        if x.0.len() != self.n_points {
            return Err(Error::DimensionMismatch {
                expected: self.n_points,
                got: x.0.len(),
            });
        }
        Ok(())
    }

    /// Multiplicity of `alpha` on the interval ending at / starting at point `i`.
    fn padded(alpha: &H1Chain, i: usize) -> &Q {
        static ZERO: std::sync::OnceLock<Q> = std::sync::OnceLock::new();
        let zero = ZERO.get_or_init(Q::zero);
        if i == 0 || i > alpha.len() {
            zero
        } else {
            &alpha.0[i - 1]
        }
    }

    /// `∂I_j = a_{j+1} - a_j`, extended linearly.
    pub fn boundary(&self, alpha: &H1Chain) -> Result<H0Chain> {
        self.check_h1(alpha)?;
        Ok(H0Chain(
            (1..=self.n_points)
                .map(|i| Self::padded(alpha, i - 1) - Self::padded(alpha, i))
                .collect(),
        ))
    }

    /// Average local multiplicity of `alpha` near the points of `x`, bilinearly.
    pub fn mu(&self, alpha: &H1Chain, x: &H0Chain) -> Result<Q> {
        self.check_h1(alpha)?;
        self.check_h0(x)?;
        let two = rational::int(2);
        Ok(x.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let i = k + 1;
                c * (Self::padded(alpha, i - 1) + Self::padded(alpha, i)) / &two
            })
            .sum())
    }

    /// The twisting form `μ(β, ∂α)` of the group law.
    pub fn twist(&self, alpha: &H1Chain, beta: &H1Chain) -> Result<Q> {
        let d = self.boundary(alpha)?;
        self.mu(beta, &d)
    }

    /// Pushforward along the orientation-reversing identity: negate and reverse.
    pub fn reverse_orientation(&self, alpha: &H1Chain) -> Result<H1Chain> {
        self.check_h1(alpha)?;
        Ok(H1Chain(alpha.0.iter().rev().map(|c| -c).collect()))
    }
}

impl H1Chain {
    pub fn zero(dim: usize) -> Self {
        H1Chain(vec![Q::zero(); dim])
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        H1Chain(xs.iter().map(|&x| rational::int(x)).collect())
    }

    /// Indicator of the interval `I_j`, 1-based.
    pub fn interval(dim: usize, j: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[j - 1] = rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, q: &Q) -> Self {
        H1Chain(self.0.iter().map(|c| c * q).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }
}

impl H0Chain {
    pub fn point(n_points: usize, i: usize) -> Self {
        let mut v = vec![Q::zero(); n_points];
        v[i - 1] = rational::one();
        H0Chain(v)
    }
}

impl Index<usize> for H1Chain {
    type Output = Q;
    fn index(&self, i: usize) -> &Q {
        &self.0[i]
    }
}

impl Add for &H1Chain {
    type Output = H1Chain;
    fn add(self, rhs: &H1Chain) -> H1Chain {
        H1Chain(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &H1Chain {
    type Output = H1Chain;
    fn sub(self, rhs: &H1Chain) -> H1Chain {
        H1Chain(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &H1Chain {
    type Output = H1Chain;
    fn neg(self) -> H1Chain {
        H1Chain(self.0.iter().map(|a| -a).collect())
    }
}

impl std::fmt::Display for H1Chain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(rational::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}
