//! Facet enumeration of full-dimensional point sets by the double
//! description method over the integers.
//!
//! Facets of `conv(P) ⊂ ℚ^k` correspond to extreme rays of the cone
//! `{y = (y₀, w) : y₀ + ⟨w, p⟩ ≥ 0 for all p ∈ P}`; the cone is pointed
//! because `P` is full-dimensional.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::num::{common_denominator, rank_rat, Rat};

/// A facet inequality `⟨normal, x⟩ ≥ offset` together with the indices of the
/// input points lying on it.
#[derive(Clone, Debug)]
pub struct RawFacet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
    pub incident: Vec<usize>,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn contains(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: Bits,
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// Facets of the convex hull of distinct, affinely spanning points of `ℚ^k`.
///
/// Panics if the points do not span `ℚ^k` affinely; callers reduce to the
/// affine hull first.
pub fn facets_full_dim(points: &[Vec<Rat>]) -> Vec<RawFacet> {
    let n = points.len();
    let k = points[0].len();
    let d = k + 1;
    // Homogenized, integer-scaled constraint rows.
    let rows: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            let den = common_denominator(p);
            let mut r = vec![den.clone()];
            r.extend(p.iter().map(|x| (x * &den).to_integer()));
            r
        })
        .collect();
    let rat_rows: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();

    // Greedy initial basis of d independent rows.
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut trial: Vec<Vec<Rat>> = basis.iter().map(|&j| rat_rows[j].clone()).collect();
        trial.push(rat_rows[i].clone());
        if rank_rat(&trial) == trial.len() {
            basis.push(i);
            if basis.len() == d {
                break;
            }
        }
    }
    assert_eq!(basis.len(), d, "point set is not full-dimensional");

    // Initial rays: columns of the inverse of the basis matrix.
    let inv = invert(&basis.iter().map(|&j| rat_rows[j].clone()).collect::<Vec<_>>());
    let mut rays: Vec<Ray> = (0..d)
        .map(|c| {
            let col: Vec<Rat> = (0..d).map(|r| inv[r][c].clone()).collect();
            let den = common_denominator(&col);
            let v = primitive(col.iter().map(|x| (x * &den).to_integer()).collect());
            let mut zeros = Bits::new(n);
            for (j, &b) in basis.iter().enumerate() {
                if j != c {
                    zeros.set(b);
                }
            }
            Ray { v, zeros }
        })
        .collect();

    let in_basis: Vec<bool> = (0..n).map(|i| basis.contains(&i)).collect();
    for t in (0..n).filter(|&i| !in_basis[i]) {
        let s: Vec<BigInt> = rays.iter().map(|r| idot(&rows[t], &r.v)).collect();
        let plus: Vec<usize> = (0..rays.len()).filter(|&i| s[i].is_positive()).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&i| s[i].is_negative()).collect();
        if minus.is_empty() {
            for (i, r) in rays.iter_mut().enumerate() {
                if s[i].is_zero() {
                    r.zeros.set(t);
                }
            }
            continue;
        }
        let mut created: Vec<Ray> = Vec::new();
        for &p in &plus {
            for &m in &minus {
                let common = rays[p].zeros.and(&rays[m].zeros);
                if common.count() + 2 < d {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(o, r)| o == p || o == m || !r.zeros.contains(&common));
                if !adjacent {
                    continue;
                }
                let v: Vec<BigInt> = rays[m]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(vm, vp)| &s[p] * vm - &s[m] * vp)
                    .collect();
                let mut zeros = common;
                zeros.set(t);
                created.push(Ray { v: primitive(v), zeros });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if s[i].is_negative() {
                continue;
            }
            if s[i].is_zero() {
                r.zeros.set(t);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }

    let mut facets: Vec<RawFacet> = rays
        .into_iter()
        .map(|r| {
            let incident = (0..n).filter(|&i| r.zeros.get(i)).collect();
            RawFacet { normal: r.v[1..].to_vec(), offset: -r.v[0].clone(), incident }
        })
        .collect();
    facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
    facets
}

fn invert(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::from_integer(1.into()) } else { Rat::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("singular basis");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pr = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}
