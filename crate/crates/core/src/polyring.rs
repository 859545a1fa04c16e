//! Sparse polynomials with integer coefficients in the coefficient variables
//! `u_{i,a}`: ring operations, orders and initial parts, gradings, exact
//! division and fraction-free determinants.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::num::Rat;
use crate::subdivision::SupportFamily;

/// The variable `u_{i,a}` with `a` the `point`-th element of `𝒜_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub support: usize,
    pub point: usize,
}

impl Var {
    pub fn new(support: usize, point: usize) -> Var {
        Var { support, point }
    }
}

/// A monomial as variables with positive exponents, sorted by variable.
///
/// Ordered graded lexicographically: higher total degree is larger; at equal
/// degree the monomial with the larger exponent on the first differing
/// variable is larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Var, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial { factors: vec![(v, 1)], degree: 1 }
    }

    pub fn from_factors(mut factors: Vec<(Var, u32)>) -> Monomial {
        factors.retain(|f| f.1 > 0);
        factors.sort();
        let mut merged: Vec<(Var, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|f| f.1).sum();
        Monomial { factors: merged, degree }
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors.binary_search_by(|f| f.0.cmp(&v)).map(|i| self.factors[i].1).unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out, degree: self.degree + other.degree }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for &(v, e) in &self.factors {
            let mut d = 0;
            if j < other.factors.len() && other.factors[j].0 < v {
                return None;
            }
            if j < other.factors.len() && other.factors[j].0 == v {
                d = other.factors[j].1;
                j += 1;
            }
            match e.cmp(&d) {
                Ordering::Less => return None,
                Ordering::Equal => {}
                Ordering::Greater => out.push((v, e - d)),
            }
        }
        if j < other.factors.len() {
            return None;
        }
        Some(Monomial { factors: out, degree: self.degree - other.degree })
    }

    pub fn degree_in_support(&self, i: usize) -> u32 {
        self.factors.iter().filter(|f| f.0.support == i).map(|f| f.1).sum()
    }

    pub fn weight(&self, w: &WeightVector) -> Rat {
        self.factors.iter().fold(Rat::zero(), |acc, (v, e)| acc + &w.values[v.support][v.point] * Rat::from(BigInt::from(*e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let (a, b) = (&self.factors, &other.factors);
            for k in 0..a.len().min(b.len()) {
                if a[k] != b[k] {
                    // The smaller variable present with the larger exponent wins.
                    return match a[k].0.cmp(&b[k].0) {
                        Ordering::Less => Ordering::Greater,
                        Ordering::Greater => Ordering::Less,
                        Ordering::Equal => a[k].1.cmp(&b[k].1),
                    };
                }
            }
            a.len().cmp(&b.len()).reverse()
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A rational weight `ω_{i,a}` on every variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub values: Vec<Vec<Rat>>,
}

/// A polynomial as nonzero terms sorted increasingly by monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparsePoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl SparsePoly {
    pub fn zero() -> SparsePoly {
        SparsePoly::default()
    }

    pub fn one() -> SparsePoly {
        SparsePoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> SparsePoly {
        SparsePoly::from_terms(vec![(Monomial::one(), c)])
    }

    pub fn var(v: Var) -> SparsePoly {
        SparsePoly { terms: vec![(Monomial::var(v), BigInt::one())] }
    }

    pub fn from_terms(mut terms: Vec<(Monomial, BigInt)>) -> SparsePoly {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if out.last().is_some_and(|l| l.1.is_zero()) {
                        out.pop();
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|l| l.1.is_zero()) {
            out.pop();
        }
        SparsePoly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.last()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms
            .binary_search_by(|t| t.0.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        SparsePoly { terms: out }
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly { terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> SparsePoly {
        SparsePoly { terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect() }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        if self.is_zero() || other.is_zero() {
            return SparsePoly::zero();
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(small.len() * large.len());
        for (m, c) in &small.terms {
            for (n, d) in &large.terms {
                *acc.entry(m.mul(n)).or_insert_with(BigInt::zero) += c * d;
            }
        }
        let mut terms: Vec<(Monomial, BigInt)> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        SparsePoly { terms }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        (0..e).fold(SparsePoly::one(), |acc, _| acc.mul(self))
    }

    /// `p / q` when `q` divides `p` in `ℤ[u]`, by leading-term division.
    pub fn exact_divide(&self, q: &SparsePoly) -> Option<SparsePoly> {
        let (lm, lc) = q.leading_term()?;
        if q.len() == 1 {
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                let (quot, rem) = c.div_rem(lc);
                if !rem.is_zero() {
                    return None;
                }
                terms.push((m.div(lm)?, quot));
            }
            return Some(SparsePoly { terms });
        }
        let mut rest: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quotient: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((m, c)) = rest.pop_last() {
            let t = m.div(lm)?;
            let (k, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (n, d) in &q.terms[..q.len() - 1] {
                let key = n.mul(&t);
                let e = rest.entry(key).or_insert_with(BigInt::zero);
                *e -= d * &k;
                if e.is_zero() {
                    let key = n.mul(&t);
                    rest.remove(&key);
                }
            }
            quotient.push((t, k));
        }
        quotient.reverse();
        Some(SparsePoly { terms: quotient })
    }

    /// `(ord_ω(p), init_ω(p))`, or `None` for the zero polynomial.
    pub fn ord_init(&self, w: &WeightVector) -> Option<(Rat, SparsePoly)> {
        let weights: Vec<Rat> = self.terms.iter().map(|(m, _)| m.weight(w)).collect();
        let order = weights.iter().min()?.clone();
        let terms = self.terms.iter().zip(&weights).filter(|(_, x)| **x == order).map(|(t, _)| t.clone()).collect();
        Some((order, SparsePoly { terms }))
    }

    /// The largest total exponent of the variables of support `i`.
    pub fn partial_degree(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree_in_support(i)).max().unwrap_or(0)
    }

    pub fn is_homogeneous_in(&self, i: usize) -> bool {
        let d = self.partial_degree(i);
        self.terms.iter().all(|(m, _)| m.degree_in_support(i) == d)
    }

    /// The common value of `Σ e_{i,a} a` over the terms, if there is one.
    pub fn m_degree(&self, family: &SupportFamily) -> Option<Vec<i64>> {
        let mut out: Option<Vec<i64>> = None;
        for (m, _) in &self.terms {
            let mut d = vec![0i64; family.rank];
            for (v, e) in m.factors() {
                for (x, a) in d.iter_mut().zip(&family.supports[v.support][v.point]) {
                    *x += a * *e as i64;
                }
            }
            match &out {
                None => out = Some(d),
                Some(prev) if *prev == d => {}
                Some(_) => return None,
            }
        }
        out
    }

    /// `(c, q)` with `p = c·q`, `q` primitive and its leading coefficient positive.
    pub fn content_primitive(&self) -> (BigInt, SparsePoly) {
        let mut g = self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        if g.is_zero() {
            return (BigInt::zero(), SparsePoly::zero());
        }
        if self.leading_term().unwrap().1.is_negative() {
            g = -g;
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c / &g)).collect();
        (g, SparsePoly { terms })
    }

    /// Sets `u_{i,a} = 0` for every variable with `keep(v)` false.
    pub fn evaluate_zeroing(&self, keep: impl Fn(Var) -> bool) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().filter(|(m, _)| m.factors().iter().all(|f| keep(f.0))).cloned().collect(),
        }
    }

    /// Keeps the variables whose point index lies in `kept[i]` for each support.
    pub fn evaluate_zeroing_sets(&self, kept: &[Vec<usize>]) -> SparsePoly {
        self.evaluate_zeroing(|v| kept.get(v.support).is_some_and(|k| k.contains(&v.point)))
    }

    /// Renames variables through an injective map.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> SparsePoly {
        SparsePoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_factors(m.factors().iter().map(|&(v, e)| (f(v), e)).collect()), c.clone()))
                .collect(),
        )
    }

    /// Substitutes integers for all variables.
    pub fn evaluate(&self, value: impl Fn(Var) -> BigInt) -> BigInt {
        let mut cache: HashMap<Var, BigInt> = HashMap::new();
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                let x = cache.entry(*v).or_insert_with(|| value(*v));
                t *= num_traits::pow::pow(x.clone(), *e as usize);
            }
            total += t;
        }
        total
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.factors().iter().map(|f| f.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Text form `c * u[i,(a)]^e * ...` with terms in decreasing order.
    pub fn to_text(&self, family: &SupportFamily) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let name = |v: Var| {
            let a = &family.supports[v.support][v.point];
            let coords: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            format!("u[{},({})]", v.support, coords.join(","))
        };
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut parts = vec![c.abs().to_string()];
            for (v, e) in m.factors() {
                parts.push(if *e == 1 { name(*v) } else { format!("{}^{}", name(*v), e) });
            }
            let body = parts.join(" * ");
            match (k, c.is_negative()) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (v, e) in m.factors() {
                write!(f, "*u[{},{}]^{}", v.support, v.point, e)?;
            }
        }
        Ok(())
    }
}

pub type PolyMatrix = Vec<Vec<SparsePoly>>;

/// Determinant by removing rows and columns with at most one nonzero entry,
/// then fraction-free elimination on the remaining block.
pub fn determinant(m: &PolyMatrix) -> SparsePoly {
    let (sign_factor, rest) = structural_reduction(m);
    if sign_factor.is_zero() {
        return SparsePoly::zero();
    }
    sign_factor.mul(&bareiss(rest))
}

/// Peels rows and columns with at most one nonzero entry; returns the product
/// of the peeled entries with sign, and the remaining block.
fn structural_reduction(m: &PolyMatrix) -> (SparsePoly, PolyMatrix) {
    let n = m.len();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let mut factor = SparsePoly::one();
    loop {
        let mut reduced = false;
        for (ri, &r) in rows.iter().enumerate() {
            let nz: Vec<usize> = (0..cols.len()).filter(|&cj| !m[r][cols[cj]].is_zero()).collect();
            if nz.len() <= 1 {
                let Some(&cj) = nz.first() else { return (SparsePoly::zero(), Vec::new()) };
                factor = factor.mul(&m[r][cols[cj]]);
                if (ri + cj) % 2 == 1 {
                    factor = factor.neg();
                }
                rows.remove(ri);
                cols.remove(cj);
                reduced = true;
                break;
            }
        }
        if reduced {
            continue;
        }
        for (cj, &c) in cols.iter().enumerate() {
            let nz: Vec<usize> = (0..rows.len()).filter(|&ri| !m[rows[ri]][c].is_zero()).collect();
            if nz.len() <= 1 {
                let Some(&ri) = nz.first() else { return (SparsePoly::zero(), Vec::new()) };
                factor = factor.mul(&m[rows[ri]][c]);
                if (ri + cj) % 2 == 1 {
                    factor = factor.neg();
                }
                rows.remove(ri);
                cols.remove(cj);
                reduced = true;
                break;
            }
        }
        if !reduced {
            break;
        }
    }
    let rest = rows.iter().map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect()).collect();
    (factor, rest)
}

/// Fraction-free Gaussian elimination with exact divisions by the previous pivot.
pub fn bareiss(mut a: PolyMatrix) -> SparsePoly {
    let n = a.len();
    if n == 0 {
        return SparsePoly::one();
    }
    let mut negate = false;
    let mut prev = SparsePoly::one();
    for k in 0..n {
        // Deterministic pivot: the first nonzero entry in column k with fewest terms.
        let p = (k..n).filter(|&r| !a[r][k].is_zero()).min_by_key(|&r| (a[r][k].len(), r));
        let Some(p) = p else { return SparsePoly::zero() };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_divide(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = SparsePoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Determinant of an integer matrix by fraction-free elimination.
pub fn det_bigint(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else { return BigInt::zero() };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if negate {
        -a[n - 1][n - 1].clone()
    } else {
        a[n - 1][n - 1].clone()
    }
}

/// Substitutes integers into every entry.
pub fn evaluate_matrix(m: &PolyMatrix, value: impl Fn(Var) -> BigInt + Copy) -> Vec<Vec<BigInt>> {
    m.iter().map(|row| row.iter().map(|p| p.evaluate(value)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;
    use proptest::prelude::*;

    fn u(i: usize, j: usize) -> SparsePoly {
        SparsePoly::var(Var::new(i, j))
    }

    fn c(x: i64) -> SparsePoly {
        SparsePoly::constant(BigInt::from(x))
    }

    fn det2() -> SparsePoly {
        u(0, 0).mul(&u(1, 1)).sub(&u(0, 1).mul(&u(1, 0)))
    }

    fn cofactor(m: &PolyMatrix) -> SparsePoly {
        let n = m.len();
        if n == 0 {
            return SparsePoly::one();
        }
        let mut total = SparsePoly::zero();
        for j in 0..n {
            let minor: PolyMatrix =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect()).collect();
            let t = m[0][j].mul(&cofactor(&minor));
            total = if j % 2 == 0 { total.add(&t) } else { total.sub(&t) };
        }
        total
    }

    #[test]
    fn ring_operations() {
        let p = det2();
        assert!(p.add(&p.neg()).is_zero());
        assert_eq!(SparsePoly::one().mul(&p), p);
        let sq = p.mul(&p);
        assert_eq!(sq.len(), 3);
        let mid = u(0, 0).mul(&u(1, 1)).mul(&u(0, 1)).mul(&u(1, 0));
        assert_eq!(sq.coefficient(&mid.terms()[0].0), BigInt::from(-2));
    }

    #[test]
    fn graded_lex_order() {
        let m = |f: Vec<(Var, u32)>| Monomial::from_factors(f);
        let (a, b) = (Var::new(0, 0), Var::new(0, 1));
        assert!(m(vec![(a, 2)]) > m(vec![(a, 1), (b, 1)]));
        assert!(m(vec![(a, 1), (b, 1)]) > m(vec![(b, 2)]));
        assert!(m(vec![(b, 3)]) > m(vec![(a, 2)]));
        assert!(m(vec![(a, 1)]) > m(vec![(b, 1)]));
        assert!(Monomial::one() < m(vec![(b, 1)]));
    }

    #[test]
    fn orders_and_initial_parts() {
        let p = det2();
        let w = WeightVector { values: vec![vec![rat(0), rat(1)], vec![rat(0), rat(1)]] };
        let (o, init) = p.ord_init(&w).unwrap();
        assert_eq!(o, rat(1));
        assert_eq!(init, p);
        let w = WeightVector { values: vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]] };
        assert_eq!(p.ord_init(&w).unwrap(), (rat(0), u(0, 0).mul(&u(1, 1))));
        let zero = WeightVector { values: vec![vec![rat(0); 2]; 2] };
        assert_eq!(p.ord_init(&zero).unwrap().1, p);
        assert!(SparsePoly::zero().ord_init(&zero).is_none());
        let mono = u(0, 1).mul(&u(1, 0));
        assert_eq!(mono.ord_init(&w).unwrap().1, mono);
    }

    #[test]
    fn degrees() {
        let p = det2();
        assert_eq!(p.partial_degree(0), 1);
        assert_eq!(p.partial_degree(1), 1);
        assert!(p.is_homogeneous_in(0));
        assert!(!u(0, 0).add(&u(0, 0).mul(&u(0, 1))).is_homogeneous_in(0));
        let f = SupportFamily::new(1, vec![vec![vec![0], vec![1]], vec![vec![0], vec![1]]]).unwrap();
        assert_eq!(p.m_degree(&f), Some(vec![1]));
        assert_eq!(u(1, 1).m_degree(&f), Some(vec![1]));
        assert_eq!(u(0, 0).add(&u(0, 1)).m_degree(&f), None);
    }

    #[test]
    fn division() {
        let p = det2();
        assert_eq!(p.exact_divide(&p), Some(SparsePoly::one()));
        let x = u(0, 0);
        let y = u(1, 1);
        let diff = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(diff.exact_divide(&x.sub(&y)), Some(x.add(&y)));
        assert_eq!(diff.exact_divide(&x), None);
        assert_eq!(x.scale(&BigInt::from(3)).exact_divide(&x.scale(&BigInt::from(2))), None);
        assert_eq!(SparsePoly::zero().exact_divide(&x), Some(SparsePoly::zero()));
        assert_eq!(x.exact_divide(&SparsePoly::zero()), None);
    }

    #[test]
    fn content_and_sign() {
        let p = det2();
        let (g, q) = p.scale(&BigInt::from(2)).content_primitive();
        assert_eq!(g, BigInt::from(2));
        assert_eq!(q, p);
        assert_eq!(u(0, 0).scale(&BigInt::from(6)).content_primitive(), (BigInt::from(6), u(0, 0)));
        let (g, q) = p.neg().content_primitive();
        assert_eq!(g, BigInt::from(-1));
        assert!(q.leading_term().unwrap().1.is_positive());
    }

    #[test]
    fn zeroing() {
        let p = det2();
        assert_eq!(p.evaluate_zeroing(|_| true), p);
        assert!(p.evaluate_zeroing(|v| v.support != 0).is_zero());
        assert_eq!(p.evaluate_zeroing_sets(&[vec![0], vec![1]]), u(0, 0).mul(&u(1, 1)));
    }

    #[test]
    fn small_determinants() {
        let diag = vec![vec![u(0, 0), c(0)], vec![c(0), u(1, 1)]];
        assert_eq!(determinant(&diag), u(0, 0).mul(&u(1, 1)));
        let gen = vec![vec![u(0, 0), u(0, 1)], vec![u(1, 0), u(1, 1)]];
        assert_eq!(determinant(&gen), det2());
        assert_eq!(bareiss(gen.clone()), det2());
        assert!(determinant(&vec![vec![u(0, 0), u(0, 1)], vec![u(0, 0), u(0, 1)]]).is_zero());
        assert_eq!(determinant(&Vec::new()), SparsePoly::one());
    }

    #[test]
    fn text_format() {
        let f = SupportFamily::new(1, vec![vec![vec![0], vec![1]], vec![vec![0], vec![1]]]).unwrap();
        assert_eq!(det2().to_text(&f), "1 * u[0,(0)] * u[1,(1)] - 1 * u[0,(1)] * u[1,(0)]");
        assert_eq!(u(0, 0).pow(2).scale(&BigInt::from(-3)).to_text(&f), "-3 * u[0,(0)]^2");
        assert_eq!(SparsePoly::zero().to_text(&f), "0");
    }

    fn poly_strategy() -> impl Strategy<Value = SparsePoly> {
        let term = (prop::collection::vec((0usize..2, 0usize..3, 1u32..3), 0..3), -3i64..4);
        prop::collection::vec(term, 0..4).prop_map(|ts| {
            SparsePoly::from_terms(
                ts.into_iter()
                    .map(|(f, c)| {
                        (Monomial::from_factors(f.into_iter().map(|(i, j, e)| (Var::new(i, j), e)).collect()), BigInt::from(c))
                    })
                    .collect(),
            )
        })
    }

    fn weight_strategy() -> impl Strategy<Value = WeightVector> {
        prop::collection::vec(prop::collection::vec(-3i64..4, 3), 2)
            .prop_map(|v| WeightVector { values: v.into_iter().map(|r| r.into_iter().map(rat).collect()).collect() })
    }

    fn matrix_strategy(n: usize) -> impl Strategy<Value = PolyMatrix> {
        let entry = prop_oneof![3 => Just(SparsePoly::zero()), 2 => poly_strategy(), 2 => (0usize..2, 0usize..3).prop_map(|(i, j)| u(i, j))];
        prop::collection::vec(prop::collection::vec(entry, n), n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn initial_parts_are_multiplicative(p in poly_strategy(), q in poly_strategy(), w in weight_strategy()) {
            prop_assume!(!p.is_zero() && !q.is_zero());
            let (op, ip) = p.ord_init(&w).unwrap();
            let (oq, iq) = q.ord_init(&w).unwrap();
            let (opq, ipq) = p.mul(&q).ord_init(&w).unwrap();
            prop_assert_eq!(opq, op + oq);
            prop_assert_eq!(ipq, ip.mul(&iq));
        }

        #[test]
        fn division_inverts_multiplication(p in poly_strategy(), q in poly_strategy()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!(p.mul(&q).exact_divide(&q), Some(p));
        }

        #[test]
        fn ring_laws(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
            prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
            prop_assert_eq!(p.mul(&q), q.mul(&p));
            prop_assert_eq!(p.add(&q).sub(&q), p);
        }

        #[test]
        fn determinant_matches_cofactor_expansion(m in (1usize..6).prop_flat_map(matrix_strategy)) {
            let n = m.len();
            let d = determinant(&m);
            prop_assert_eq!(&d, &cofactor(&m));
            prop_assert_eq!(&bareiss(m.clone()), &d);
            if n >= 2 {
                let mut swapped = m.clone();
                swapped.swap(0, 1);
                prop_assert_eq!(determinant(&swapped), d.neg());
                let mut dup = m.clone();
                dup[1] = dup[0].clone();
                prop_assert!(determinant(&dup).is_zero());
            }
            let value = |v: Var| BigInt::from((v.support * 7 + v.point * 3) as i64 - 4);
            prop_assert_eq!(det_bigint(evaluate_matrix(&m, value)), d.evaluate(value));
        }
    }
}
