//! Exact integer rank.
//!
//! [`rank_exact`] runs fraction-free (Bareiss) elimination with full
//! pivoting. Elimination first runs on `i128` with checked arithmetic and
//! restarts on arbitrary-precision integers if any step overflows, so the
//! result is exact for every input. [`rank_mod_p`] is an independent
//! finite-field rank used only as a cross-check.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[i64]>::to_vec)
            .collect()
    }
}

/// Signed adjacency matrix: `+1`/`-1` on Plus/Minus edges, zero elsewhere.
pub fn adjacency_matrix(g: &SignedGraph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n, n);
    for e in g.edges() {
        let s = e.sign.as_int();
        m.set(e.u, e.v, s);
        m.set(e.v, e.u, s);
    }
    m
}

trait ExactScalar: Clone + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn abs_cmp(&self, other: &Self) -> Ordering;
    /// `(a * d - b * c) / divisor`, exact; `None` on overflow.
    fn bareiss_step(a: &Self, d: &Self, b: &Self, c: &Self, divisor: &Self) -> Option<Self>;
}

impl ExactScalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }

    fn bareiss_step(a: &Self, d: &Self, b: &Self, c: &Self, divisor: &Self) -> Option<Self> {
        let num = a.checked_mul(*d)?.checked_sub(b.checked_mul(*c)?)?;
        debug_assert_eq!(num % divisor, 0);
        num.checked_div(*divisor)
    }
}

impl ExactScalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.abs().cmp(&other.abs())
    }

    fn bareiss_step(a: &Self, d: &Self, b: &Self, c: &Self, divisor: &Self) -> Option<Self> {
        let num = a * d - b * c;
        debug_assert!(Zero::is_zero(&(&num % divisor)));
        Some(num / divisor)
    }
}

fn bareiss_rank<T: ExactScalar>(m: &IntMatrix) -> Option<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<T>> = (0..rows)
        .map(|i| (0..cols).map(|j| T::from_i64(m.get(i, j))).collect())
        .collect();
    let mut prev = T::from_i64(1);
    let mut rank = 0;
    while rank < rows && rank < cols {
        // full pivoting: largest |entry|, ties to the lowest (row, col)
        let mut pivot: Option<(usize, usize)> = None;
        for i in rank..rows {
            for j in rank..cols {
                if a[i][j].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => a[i][j].abs_cmp(&a[pi][pj]) == Ordering::Greater,
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(rank, pi);
        if pj != rank {
            for row in a.iter_mut() {
                row.swap(rank, pj);
            }
        }
        let k = rank;
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..cols {
                row[j] = T::bareiss_step(&row[j], &pivot_row[k], &row[k], &pivot_row[j], &prev)?;
            }
            row[k] = T::from_i64(0);
        }
        prev = pivot_row[k].clone();
        rank += 1;
    }
    Some(rank)
}

/// Rank over the rationals, computed exactly.
pub fn rank_exact(m: &IntMatrix) -> usize {
    bareiss_rank::<i128>(m).unwrap_or_else(|| {
        bareiss_rank::<BigInt>(m).expect("arbitrary-precision elimination cannot overflow")
    })
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let pm = p as u128;
    let mut acc = 1u128;
    let mut b = base as u128 % pm;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % pm;
        }
        b = b * b % pm;
        exp >>= 1;
    }
    acc as u64
}

/// Rank over GF(p).
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pm = p as i128;
    let mut a: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| (m.get(i, j) as i128).rem_euclid(pm) as u64)
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pr) = (rank..m.rows()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let inv = pow_mod(a[rank][col], p - 2, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = (row[col] as u128 * inv as u128 % p as u128) as u64;
            for j in col..m.cols() {
                let sub = (factor as u128 * pivot_row[j] as u128 % p as u128) as u64;
                row[j] = (row[j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == m.rows() {
            break;
        }
    }
    Ok(rank)
}

/// Rank of the signed adjacency matrix.
pub fn graph_rank(g: &SignedGraph) -> usize {
    rank_exact(&adjacency_matrix(g))
}

/// Multiplicity of the eigenvalue zero: `n - rank`.
pub fn nullity(g: &SignedGraph) -> usize {
    g.order() - graph_rank(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, uniform_cycle, Sign};

    #[test]
    fn adjacency_examples() {
        assert_eq!(
            adjacency_matrix(&SignedGraph::empty(1)),
            IntMatrix::zeros(1, 1)
        );
        let e = SignedGraph::unsigned(2, [(0, 1)]).unwrap();
        assert_eq!(adjacency_matrix(&e).to_rows(), vec![vec![0, 1], vec![1, 0]]);
        let tri = SignedGraph::new(
            3,
            [(0, 1, Sign::Minus), (1, 2, Sign::Plus), (0, 2, Sign::Plus)],
        )
        .unwrap();
        let a = adjacency_matrix(&tri);
        assert_eq!(a.get(0, 1), -1);
        assert_eq!(a.get(1, 0), -1);
        assert_eq!(a.get(1, 2), 1);
        assert_eq!(a.get(0, 2), 1);
        assert!(a.is_symmetric());
        assert!((0..3).all(|i| a.get(i, i) == 0));
    }

    #[test]
    fn rank_examples() {
        let c4 = uniform_cycle(4, Sign::Plus).unwrap();
        assert_eq!(graph_rank(&c4), 2);
        assert_eq!(rank_exact(&IntMatrix::zeros(3, 4)), 0);
        assert_eq!(graph_rank(&path(4)), 4);
        let p4 = path(4).with_signs(|e| if e.u == 1 { Sign::Minus } else { Sign::Plus });
        assert_eq!(graph_rank(&p4), 4);
        for signs in 0u32..32 {
            let g = uniform_cycle(5, Sign::Plus).unwrap().with_signs(|e| {
                if signs >> e.u & 1 == 1 {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            });
            assert_eq!(graph_rank(&g), 5);
        }
    }

    #[test]
    fn rank_mod_p_examples() {
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(rank_mod_p(&swap, 3), Ok(2));
        let two = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(rank_mod_p(&two, 2), Ok(0));
        assert_eq!(rank_exact(&two), 1);
        let c4 = adjacency_matrix(&uniform_cycle(4, Sign::Plus).unwrap());
        assert_eq!(rank_mod_p(&c4, 5), Ok(2));
        assert_eq!(rank_mod_p(&c4, 4), Err(Error::NotPrime(4)));
        assert_eq!(rank_mod_p(&c4, 1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn nullity_examples() {
        assert_eq!(nullity(&uniform_cycle(4, Sign::Plus).unwrap()), 2);
        assert_eq!(nullity(&path(4)), 0);
        assert_eq!(nullity(&SignedGraph::empty(7)), 7);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // Hadamard-type growth: a 40x40 random-ish ±1 matrix overflows i128
        // in intermediate products; both paths must agree where i128 succeeds.
        let n = 40;
        let mut m = IntMatrix::zeros(n, n);
        let mut state = 0x9e3779b97f4a7c15u64;
        for i in 0..n {
            for j in 0..n {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                m.set(i, j, if state & 1 == 0 { 1 } else { -1 });
            }
        }
        let big = bareiss_rank::<BigInt>(&m).unwrap();
        assert_eq!(rank_exact(&m), big);
        assert!(big <= n);
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank_exact(&m), 2);
        assert_eq!(rank_exact(&m.transpose()), 2);
        let wide = IntMatrix::from_rows(&[vec![1, 0, 0, 1], vec![0, 1, 1, 0]]);
        assert_eq!(rank_exact(&wide), 2);
    }
}
