//! Exact rational-independence decisions with integer witnesses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::golden::GoldenReal;

/// Outcome of an independence check. A dependent verdict always carries an
/// explicit nonzero integer relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Independence {
    Independent,
    Dependent { witness: Vec<BigInt> },
}

impl Independence {
    pub fn is_independent(&self) -> bool {
        matches!(self, Independence::Independent)
    }

    pub fn witness(&self) -> Option<&[BigInt]> {
        match self {
            Independence::Independent => None,
            Independence::Dependent { witness } => Some(witness),
        }
    }
}

/// Decides whether the given nonzero values are rationally independent:
/// whether the only rational solution of `y1*v1 + ... + yn*vn = 0` is all
/// zeros.
///
/// Every value embeds into the 2-dimensional rational vector space with
/// basis `{1, phi}`, so independence is exactly linear independence of the
/// embedding vectors; three or more values are always dependent. When
/// dependent, an explicit integer relation is returned, normalized to
/// coprime entries with the first nonzero entry positive.
pub fn rationally_independent(values: &[GoldenReal]) -> Independence {
    assert!(!values.is_empty(), "independence needs at least one value");
    assert!(
        values.iter().all(|v| !v.is_zero()),
        "independence is defined for nonzero values"
    );
    let columns: Vec<[BigRational; 2]> = values
        .iter()
        .map(|v| {
            [
                v.rational_part().as_ratio().clone(),
                v.golden_part().as_ratio().clone(),
            ]
        })
        .collect();
    match rational_kernel_vector(&columns) {
        None => Independence::Independent,
        Some(kernel) => Independence::Dependent { witness: normalize_relation(kernel) },
    }
}

/// Finds a nonzero rational solution of `M y = 0` for a 2-row matrix given
/// by columns, or `None` when the columns are linearly independent.
fn rational_kernel_vector(columns: &[[BigRational; 2]]) -> Option<Vec<BigRational>> {
    let n = columns.len();
    // Gaussian elimination over the rationals on the 2 x n system.
    let mut rows: Vec<Vec<BigRational>> = vec![
        columns.iter().map(|c| c[0].clone()).collect(),
        columns.iter().map(|c| c[1].clone()).collect(),
    ];
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        if rank >= 2 {
            break;
        }
        let Some(pivot_row) = (rank..2).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for value in rows[rank].iter_mut() {
            *value = &*value / &pivot;
        }
        for r in 0..2 {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let pivot_row: Vec<BigRational> = rows[rank].clone();
                for (value, pivot_value) in rows[r].iter_mut().zip(&pivot_row) {
                    *value = &*value - &(&factor * pivot_value);
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if rank == n {
        return None;
    }
    // pick the first free column, set it to 1, and read the pivots off the
    // reduced rows
    let free_col = (0..n).find(|c| !pivot_cols.contains(c)).expect("rank < n");
    let mut solution = vec![BigRational::zero(); n];
    solution[free_col] = BigRational::one();
    for (r, &pc) in pivot_cols.iter().enumerate() {
        solution[pc] = -rows[r][free_col].clone();
    }
    Some(solution)
}

/// Clears denominators, divides by the gcd, and makes the first nonzero
/// entry positive.
fn normalize_relation(kernel: Vec<BigRational>) -> Vec<BigInt> {
    let mut denom_lcm = BigInt::one();
    for v in &kernel {
        denom_lcm = denom_lcm.lcm(v.denom());
    }
    let mut witness: Vec<BigInt> = kernel
        .iter()
        .map(|v| v.numer() * (&denom_lcm / v.denom()))
        .collect();
    let mut g = BigInt::zero();
    for v in &witness {
        g = g.gcd(v);
    }
    if !g.is_zero() && !g.is_one() {
        for v in witness.iter_mut() {
            *v = &*v / &g;
        }
    }
    if let Some(first) = witness.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in witness.iter_mut() {
                *v = -&*v;
            }
        }
    }
    witness
}
