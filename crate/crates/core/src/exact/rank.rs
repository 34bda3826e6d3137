use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use super::matrix::RatMatrix;
use crate::error::{Error, Result};

/// Incremental row space over the integers, maintained by fraction-free
/// (Bareiss-style cross-multiplication) elimination. Rows are divided by
/// their content gcd after each reduction step to keep entries small.
#[derive(Default)]
pub struct IntRowSpace {
    // (pivot column, reduced row)
    pivots: Vec<(usize, Vec<BigInt>)>,
}

impl IntRowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the stored pivot rows and insert it if it is
    /// independent. Returns true when the row increased the rank.
    pub fn insert(&mut self, mut row: Vec<BigInt>) -> bool {
        for (col, pivot_row) in &self.pivots {
            if row[*col].is_zero() {
                continue;
            }
            let p = pivot_row[*col].clone();
            let r = row[*col].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                *x = &*x * &p - y * &r;
            }
            divide_by_content(&mut row);
        }
        match row.iter().position(|x| !x.is_zero()) {
            Some(col) => {
                self.pivots.push((col, row));
                true
            }
            None => false,
        }
    }
}

fn divide_by_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
    // keep the leading nonzero entry positive
    if let Some(lead) = row.iter().find(|x| !x.is_zero()) {
        if lead.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
    }
}

/// Degree of the minimal polynomial of an integer matrix: the smallest k
/// such that I, A, ..., A^k are linearly dependent as vectors, computed
/// by exact rank on the vectorized power stack.
pub fn min_poly_degree(a: &RatMatrix) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.rows(), a.cols()));
    }
    let n = a.rows();
    let mut space = IntRowSpace::new();
    let mut power = RatMatrix::identity(n);
    for k in 0.. {
        let row = vectorize_integer(&power)?;
        if !space.insert(row) {
            return Ok(k);
        }
        power = power.mul(a)?;
    }
    unreachable!("powers of an n x n matrix become dependent by degree n")
}

fn vectorize_integer(m: &RatMatrix) -> Result<Vec<BigInt>> {
    m.entries()
        .iter()
        .map(|e| {
            if e.denom().is_one() {
                Ok(e.numer().clone())
            } else {
                Err(Error::NonIntegerEntry)
            }
        })
        .collect()
}
