//! Exact linear algebra: rational row reduction and integer column echelon form.
//!
//! Both solvers return an affine description of the solution set: one
//! particular solution plus a basis of the homogeneous solutions. Over `Q` the
//! particular solution is the one with every free variable set to zero in the
//! reduced row echelon parameterisation; over `Z` the kernel basis is a basis
//! of the integer lattice of homogeneous solutions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::Q;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution<T> {
    pub particular: Vec<T>,
    pub kernel: Vec<Vec<T>>,
}

/// Reduced row echelon form of a rational matrix, with pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rows: Vec<Vec<Q>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn new(matrix: &[Vec<Q>], ncols: usize) -> Self {
        let mut rows: Vec<Vec<Q>> = matrix.to_vec();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, p) in row.iter_mut().zip(&pivot).take(ncols) {
                        *x -= &f * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        Rref {
            rows,
            pivots,
            ncols,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let free: Vec<usize> = (0..self.ncols)
            .filter(|c| !self.pivots.contains(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.ncols];
                v[f] = Q::from_integer(1.into());
                for (row, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.rows[row][f].clone();
                }
                v
            })
            .collect()
    }
}

pub fn rank(matrix: &[Vec<Q>], ncols: usize) -> usize {
    Rref::new(matrix, ncols).rank()
}

/// Solve `matrix · x = rhs` over `Q`.
pub fn solve_rational(matrix: &[Vec<Q>], ncols: usize, rhs: &[Q]) -> Option<AffineSolution<Q>> {
    assert_eq!(
        matrix.len(),
        rhs.len(),
        "row count and right-hand side disagree"
    );
    let augmented: Vec<Vec<Q>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let red = Rref::new(&augmented, ncols + 1);
    if red.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut particular = vec![Q::zero(); ncols];
    for (row, &p) in red.pivots.iter().enumerate() {
        particular[p] = red.rows[row][ncols].clone();
    }
    let coeffs = Rref {
        rows: red.rows.iter().map(|r| r[..ncols].to_vec()).collect(),
        pivots: red.pivots.clone(),
        ncols,
    };
    Some(AffineSolution {
        particular,
        kernel: coeffs.kernel(),
    })
}

/// Solve `matrix · x = rhs` over `Z` by unimodular column operations.
///
/// The matrix is brought to lower column echelon form `M·V`; the system is then
/// solved by forward substitution, requiring each pivot quotient to be exact.
pub fn solve_integer(
    matrix: &[Vec<BigInt>],
    ncols: usize,
    rhs: &[BigInt],
) -> Option<AffineSolution<BigInt>> {
    let nrows = matrix.len();
    assert_eq!(nrows, rhs.len(), "row count and right-hand side disagree");
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut v: Vec<Vec<BigInt>> = (0..ncols)
        .map(|i| (0..ncols).map(|j| BigInt::from((i == j) as i32)).collect())
        .collect();
    // Column operations act on m's columns and on v's columns alike.
    let swap_cols = |m: &mut Vec<Vec<BigInt>>, v: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in m.iter_mut().chain(v.iter_mut()) {
            row.swap(a, b);
        }
    };
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut c = 0;
    for r in 0..nrows {
        if c == ncols {
            break;
        }
        loop {
            let best = (c..ncols)
                .filter(|&j| !m[r][j].is_zero())
                .min_by(|&a, &b| m[r][a].abs().cmp(&m[r][b].abs()));
            let Some(best) = best else { break };
            swap_cols(&mut m, &mut v, c, best);
            let mut done = true;
            for j in c + 1..ncols {
                if m[r][j].is_zero() {
                    continue;
                }
                let f = m[r][j].div_floor(&m[r][c]);
                for row in m.iter_mut().chain(v.iter_mut()) {
                    let d = &f * &row[c];
                    row[j] -= d;
                }
                if !m[r][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !m[r][c].is_zero() {
            pivots.push((r, c));
            c += 1;
        }
    }
    let rank = pivots.len();
    let mut y = vec![BigInt::zero(); ncols];
    let mut next = 0;
    for r in 0..nrows {
        let limit = if next < rank && pivots[next].0 == r {
            pivots[next].1
        } else {
            next
        };
        let mut acc = rhs[r].clone();
        for j in 0..limit {
            acc -= &m[r][j] * &y[j];
        }
        if next < rank && pivots[next].0 == r {
            let (q, rem) = acc.div_rem(&m[r][limit]);
            if !rem.is_zero() {
                return None;
            }
            y[limit] = q;
            next += 1;
        } else if !acc.is_zero() {
            return None;
        }
    }
    let particular = (0..ncols)
        .map(|i| (0..ncols).fold(BigInt::zero(), |s, j| s + &v[i][j] * &y[j]))
        .collect();
    let kernel = (rank..ncols)
        .map(|j| (0..ncols).map(|i| v[i][j].clone()).collect())
        .collect();
    Some(AffineSolution { particular, kernel })
}
