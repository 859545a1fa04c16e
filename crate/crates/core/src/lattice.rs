//! Exact integer linear algebra on lattices: ranks, Hermite and Smith normal
//! forms, saturation indices, integral kernels and sublattice coordinates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{input, Error, Result};
use crate::num::{solve_in_row_span, Point, Rat};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn int_matrix(rows: &[Point]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn ncols(m: &IntMatrix) -> usize {
    m.first().map_or(0, Vec::len)
}

/// Row echelon form under unimodular row operations.
///
/// Returns the nonzero rows; each pivot is positive and the entries above a
/// pivot are reduced into `[0, pivot)`. Pivots are chosen by minimal absolute
/// value to limit coefficient growth.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a: IntMatrix = m.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let cols = ncols(m);
    let mut top = 0;
    for c in 0..cols {
        if top >= a.len() {
            break;
        }
        loop {
            let Some(p) = (top..a.len())
                .filter(|&r| !a[r][c].is_zero())
                .min_by(|&x, &y| a[x][c].abs().cmp(&a[y][c].abs()))
            else {
                break;
            };
            a.swap(top, p);
            let mut done = true;
            for r in top + 1..a.len() {
                if a[r][c].is_zero() {
                    continue;
                }
                let q = a[r][c].div_floor(&a[top][c]);
                let pivot_row = a[top].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                if !a[r][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top < a.len() && !a[top][c].is_zero() {
            if a[top][c].is_negative() {
                for x in a[top].iter_mut() {
                    *x = -x.clone();
                }
            }
            for r in 0..top {
                let q = a[r][c].div_floor(&a[top][c]);
                if !q.is_zero() {
                    let pivot_row = a[top].clone();
                    for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                }
            }
            top += 1;
        }
    }
    a.truncate(top);
    a.retain(|r| r.iter().any(|x| !x.is_zero()));
    a
}

/// Rank of the row span over the rationals.
pub fn integer_rank(m: &IntMatrix) -> usize {
    // Fraction-free elimination: the row lattice rank equals the rational rank.
    hermite_normal_form(m).len()
}

/// A basis of the lattice generated by the rows.
pub fn lattice_basis(m: &IntMatrix) -> IntMatrix {
    hermite_normal_form(m)
}

/// Nonzero invariant factors of the Smith normal form.
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let mut a: IntMatrix = m.clone();
    let rows = a.len();
    let cols = ncols(m);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Minimal nonzero entry in the trailing block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if !a[r][c].is_zero()
                    && best.map_or(true, |(br, bc)| a[r][c].abs() < a[br][bc].abs())
                {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            if !a[r][t].is_zero() {
                let q = a[r][t].div_floor(&a[t][t]);
                let pivot_row = a[t].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                clean &= a[r][t].is_zero();
            }
        }
        for c in t + 1..cols {
            if !a[t][c].is_zero() {
                let q = a[t][c].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let y = row[t].clone();
                    row[c] -= &q * y;
                }
                clean &= a[t][c].is_zero();
            }
        }
        if !clean {
            continue;
        }
        // Divisibility: fold any entry not divisible by the pivot into row t.
        let pivot = a[t][t].clone();
        if let Some(r) = (t + 1..rows).find(|&r| a[r][t + 1..].iter().any(|x| !x.is_multiple_of(&pivot))) {
            let src = a[r].clone();
            for (x, y) in a[t].iter_mut().zip(&src) {
                *x += y;
            }
            continue;
        }
        diag.push(pivot.abs());
        t += 1;
    }
    diag
}

/// The index `[L^sat : L]` of the row lattice `L` in its saturation.
pub fn saturation_index(m: &IntMatrix) -> BigInt {
    smith_invariants(m).into_iter().fold(BigInt::one(), |acc, d| acc * d)
}

/// An integral basis of `{x ∈ ℤ^n : m·x = 0}`.
///
/// Unimodular row reduction of `[mᵀ | I]`; the identity part of the rows
/// whose left block vanishes is a lattice basis of the kernel.
pub fn integer_kernel(m: &IntMatrix, n: usize) -> IntMatrix {
    let k = m.len();
    let aug: IntMatrix = (0..n)
        .map(|j| {
            let mut row: Vec<BigInt> = m.iter().map(|r| r[j].clone()).collect();
            row.extend((0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let h = echelon_keep_zero(&aug, k);
    h.into_iter()
        .filter(|r| r[..k].iter().all(Zero::is_zero))
        .map(|r| r[k..].to_vec())
        .collect()
}

/// Integer row echelon on the first `lead` columns keeping every row.
fn echelon_keep_zero(m: &IntMatrix, lead: usize) -> IntMatrix {
    let mut a = m.clone();
    let mut top = 0;
    for c in 0..lead {
        loop {
            let Some(p) = (top..a.len())
                .filter(|&r| !a[r][c].is_zero())
                .min_by(|&x, &y| a[x][c].abs().cmp(&a[y][c].abs()))
            else {
                break;
            };
            a.swap(top, p);
            let mut done = true;
            for r in top + 1..a.len() {
                if a[r][c].is_zero() {
                    continue;
                }
                let q = a[r][c].div_floor(&a[top][c]);
                let pivot_row = a[top].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                done &= a[r][c].is_zero();
            }
            if done {
                top += 1;
                break;
            }
        }
    }
    a
}

/// An integral basis of the rank-(n−1) lattice `v^⊥ ∩ ℤ^n`.
pub fn kernel_basis(v: &[i64]) -> Result<Vec<Point>> {
    if v.iter().all(|&x| x == 0) {
        return input("kernel basis of the zero vector");
    }
    let m = int_matrix(&[v.to_vec()]);
    Ok(integer_kernel(&m, v.len()).iter().map(|r| to_point(r)).collect())
}

pub fn to_point(r: &[BigInt]) -> Point {
    r.iter().map(crate::num::to_i64).collect()
}

/// Coordinates of each point in the given lattice basis.
pub fn coordinates_in_sublattice(points: &[Point], basis: &[Point]) -> Result<Vec<Point>> {
    let rows: Vec<Vec<Rat>> = basis.iter().map(|b| crate::num::point_to_rat(b)).collect();
    points
        .iter()
        .map(|p| {
            let target = crate::num::point_to_rat(p);
            let x = if rows.is_empty() {
                if p.iter().all(|&c| c == 0) {
                    Some(Vec::new())
                } else {
                    None
                }
            } else {
                solve_in_row_span(&rows, &target)
            };
            match x {
                Some(x) if x.iter().all(|c| c.is_integer()) => {
                    Ok(x.iter().map(|c| crate::num::to_i64(&c.to_integer())).collect())
                }
                _ => Err(Error::Input(format!("point {p:?} is not in the span of the basis"))),
            }
        })
        .collect()
}
