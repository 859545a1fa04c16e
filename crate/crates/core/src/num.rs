//! Exact scalar helpers over arbitrary-precision integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// A lattice point with machine-integer coordinates.
pub type Point = Vec<i64>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn point_to_rat(p: &[i64]) -> Vec<Rat> {
    p.iter().map(|&x| rat(x)).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// `⟨v, a⟩` for a rational direction and an integer point.
pub fn dot_int(v: &[Rat], a: &[i64]) -> Rat {
    v.iter().zip(a).fold(Rat::zero(), |acc, (x, &y)| acc + x * BigInt::from(y))
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn add_points(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_points(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Parses `"p/q"`, `"p"` or a decimal integer into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Input(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn ceil_i64(r: &Rat) -> i64 {
    to_i64(&r.ceil().to_integer())
}

pub fn floor_i64(r: &Rat) -> i64 {
    to_i64(&r.floor().to_integer())
}

pub fn to_i64(n: &BigInt) -> i64 {
    i64::try_from(n).expect("coordinate exceeds the i64 range")
}

/// Least common multiple of the denominators.
pub fn common_denominator(v: &[Rat]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Scales a rational vector to a primitive integer vector with the same direction.
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<BigInt> {
    let den = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn det_rat(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut det = Rat::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rat::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &pivot;
            for c in k..n {
                let t = &f * &a[k][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// Rank of a list of rational vectors.
pub fn rank_rat(rows: &[Vec<Rat>]) -> usize {
    row_echelon(rows).len()
}

/// Reduced row echelon basis of the row span, as `(pivot column, row)` pairs.
pub fn row_echelon(rows: &[Vec<Rat>]) -> Vec<(usize, Vec<Rat>)> {
    let mut basis: Vec<(usize, Vec<Rat>)> = Vec::new();
    for r in rows {
        let mut v = r.clone();
        for (pc, b) in &basis {
            if !v[*pc].is_zero() {
                let f = v[*pc].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[pc].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
            for (_, b) in basis.iter_mut() {
                if !b[pc].is_zero() {
                    let f = b[pc].clone();
                    for (x, y) in b.iter_mut().zip(&v) {
                        *x -= &f * y;
                    }
                }
            }
            basis.push((pc, v));
        }
    }
    basis
}

/// Affine dimension of a finite point set; `None` for the empty set.
pub fn affine_dim(points: &[Vec<Rat>]) -> Option<usize> {
    let first = points.first()?;
    let diffs: Vec<Vec<Rat>> = points[1..].iter().map(|p| sub(p, first)).collect();
    Some(rank_rat(&diffs))
}

pub fn affine_dim_int(points: &[Point]) -> Option<usize> {
    let first = points.first()?;
    let diffs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| point_to_rat(&sub_points(p, first)))
        .collect();
    Some(rank_rat(&diffs))
}

/// Solves `x · A = b` for a row vector `x`, where the rows of `A` are linearly
/// independent; `None` when `b` is outside the row span.
pub fn solve_in_row_span(rows: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let k = rows.len();
    let n = b.len();
    // Transposed system: columns of A^T are the rows.
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|c| {
            let mut row: Vec<Rat> = rows.iter().map(|r| r[c].clone()).collect();
            row.push(b[c].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(p, r);
        let inv = aug[r][c].recip();
        for x in aug[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                let pivot_row = aug[r].clone();
                for (x, y) in aug[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if aug[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][k].clone();
    }
    Some(x)
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn lex_cmp(a: &[Rat], b: &[Rat]) -> std::cmp::Ordering {
    a.cmp(b)
}

pub fn sign(r: &Rat) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}
