//! The classical homogeneous resultant: index sets, Macaulay matrices, the
//! mixed subdivision of the dilated simplex with its incremental chain, and
//! the identification of Macaulay matrices with Canny-Emiris matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canny_emiris::{build_ce_data, build_matrix, choose_delta, CEData};
use crate::error::{input, internal, Error, Result};
use crate::num::{rat, ratio, Point, Rat};
use crate::polyring::{determinant, PolyMatrix, SparsePoly, Var};
use crate::report::Report;
use crate::resultant::{sufficient_admissibility, Provenance, ResultantResult};
use crate::subdivision::{regular_subdivision, IncrementalChain, Lifting, MixedSubdivision, SupportFamily};

const PERTURBATION_ATTEMPTS: u64 = 32;

/// Lattice points of `d·Σ_n` in colexicographic order, so that for `n = 2`
/// and `d = 2` the order is `1, x, x², y, xy, y²`.
pub fn simplex_support(n: usize, d: i64) -> Vec<Point> {
    let mut pts = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        if cur.iter().sum::<i64>() <= d {
            pts.push(cur.clone());
        }
        let mut c = 0;
        loop {
            if c == n {
                pts.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
                return pts;
            }
            if cur[c] < d {
                cur[c] += 1;
                break;
            }
            cur[c] = 0;
            c += 1;
        }
    }
}

/// Index sets for the degrees `d_0, …, d_n` in degree `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpec {
    pub degrees: Vec<i64>,
    pub m: i64,
    /// `Γ`, grouped by part and decreasing lexicographically within a part.
    pub gamma: Vec<Point>,
    /// `part[k] = i` iff `gamma[k] ∈ Γ_i`.
    pub part: Vec<usize>,
    /// Positions in `gamma` of `Γ°`, the points with at least two `c_i ≥ d_i`.
    pub nonreduced: Vec<usize>,
}

impl HomSpec {
    /// `m` defaults to `|d| − n`.
    pub fn new(degrees: &[i64], m: Option<i64>) -> Result<HomSpec> {
        if degrees.is_empty() || degrees.iter().any(|&d| d < 1) {
            return input("degrees must be positive and at least one is needed");
        }
        let n = degrees.len() - 1;
        let critical = degrees.iter().sum::<i64>() - n as i64;
        let m = m.unwrap_or(critical);
        if m < critical {
            return input(format!("degree {m} is below |d| − n = {critical}"));
        }
        let mut gamma: Vec<(usize, Point)> = compositions(n + 1, m)
            .into_iter()
            .map(|c| {
                let i = (0..=n).rev().find(|&i| c[i] >= degrees[i] && (i + 1..=n).all(|j| c[j] < degrees[j]));
                (i.expect("the parts cover Γ"), c)
            })
            .collect();
        gamma.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let nonreduced =
            (0..gamma.len()).filter(|&k| (0..=n).filter(|&i| gamma[k].1[i] >= degrees[i]).count() > 1).collect();
        let (part, gamma) = gamma.into_iter().unzip();
        Ok(HomSpec { degrees: degrees.to_vec(), m, gamma, part, nonreduced })
    }

    pub fn rank(&self) -> usize {
        self.degrees.len() - 1
    }

    /// Positions of `Γ_i`.
    pub fn part_indices(&self, i: usize) -> Vec<usize> {
        (0..self.gamma.len()).filter(|&k| self.part[k] == i).collect()
    }
}

/// All `c ∈ ℕ^len` with `|c| = total`.
fn compositions(len: usize, total: i64) -> Vec<Point> {
    if len == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(len - 1, total - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// `π(c_0, …, c_n) = (c_1, …, c_n)`.
pub fn dehomogenize(c: &[i64]) -> Point {
    c[1..].to_vec()
}

/// The supports `{a ∈ ℕ^n : |a| ≤ d_i}`, each in colexicographic order.
pub fn simplex_family(degrees: &[i64]) -> Result<SupportFamily> {
    if degrees.is_empty() || degrees.iter().any(|&d| d < 1) {
        return input("degrees must be positive and at least one is needed");
    }
    let n = degrees.len() - 1;
    SupportFamily::new(n, degrees.iter().map(|&d| simplex_support(n, d)).collect())
}

/// Index of `d_i e_i` in the `i`-th simplex support, with `e_0 = 0`.
fn vertex_index(n: usize, i: usize, d: i64) -> usize {
    let mut v = vec![0; n];
    if i > 0 {
        v[i - 1] = d;
    }
    simplex_support(n, d).iter().position(|a| *a == v).expect("vertices are lattice points")
}

/// `φ_0 = |x|` and `φ_i = d_i − x_i` for `i > 0`.
pub fn simplex_lifting(family: &SupportFamily, degrees: &[i64]) -> Result<Lifting> {
    let n = family.rank;
    let coeffs: Vec<(Rat, Vec<Rat>)> = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            if i == 0 {
                (rat(0), vec![rat(1); n])
            } else {
                (rat(d), (0..n).map(|j| if j + 1 == i { rat(-1) } else { rat(0) }).collect())
            }
        })
        .collect();
    Lifting::affine(family, &coeffs)
}

/// `M` with the row of `c ∈ Γ_i` holding the coefficients of `t^{c − d_i e_i} P_i`,
/// and its principal submatrix `N` on `Γ°`.
pub fn macaulay_matrices(spec: &HomSpec) -> (PolyMatrix, PolyMatrix) {
    let n = spec.rank();
    let lookup: Vec<HashMap<Point, usize>> = spec
        .degrees
        .iter()
        .map(|&d| simplex_support(n, d).into_iter().enumerate().map(|(j, a)| (a, j)).collect())
        .collect();
    let entry = |r: usize, c: usize| {
        let i = spec.part[r];
        let mut e: Point = spec.gamma[c].iter().zip(&spec.gamma[r]).map(|(x, y)| x - y).collect();
        e[i] += spec.degrees[i];
        if e.iter().any(|&x| x < 0) {
            return SparsePoly::zero();
        }
        SparsePoly::var(Var::new(i, lookup[i][&dehomogenize(&e)]))
    };
    let all: Vec<usize> = (0..spec.gamma.len()).collect();
    let sub = |rows: &[usize]| -> PolyMatrix { rows.iter().map(|&r| rows.iter().map(|&c| entry(r, c)).collect()).collect() };
    (sub(&all), sub(&spec.nonreduced))
}

/// `Res_d = det M / det N` in degree `|d| − n`, normalized by `Res(t_0^{d_0}, …, t_n^{d_n}) = 1`.
pub fn hom_resultant(degrees: &[i64]) -> Result<ResultantResult> {
    hom_resultant_in_degree(degrees, None)
}

/// As [`hom_resultant`], with the matrices taken in degree `m ≥ |d| − n`.
pub fn hom_resultant_in_degree(degrees: &[i64], m: Option<i64>) -> Result<ResultantResult> {
    let spec = HomSpec::new(degrees, m)?;
    let family = simplex_family(degrees)?;
    let (m, nm) = macaulay_matrices(&spec);
    let q = determinant(&m)
        .exact_divide(&determinant(&nm))
        .ok_or_else(|| Error::Internal("det N does not divide det M".into()))?;
    let n = spec.rank();
    let vertices: Vec<usize> = degrees.iter().enumerate().map(|(i, &d)| vertex_index(n, i, d)).collect();
    let value = q.evaluate(|v| if vertices[v.support] == v.point { BigInt::one() } else { BigInt::zero() });
    let poly = if value == BigInt::one() {
        q
    } else if value == -BigInt::one() {
        q.neg()
    } else {
        return internal(format!("the monomial system evaluates to {value}"));
    };
    let r = ResultantResult {
        partial_degrees: (0..family.len()).map(|i| poly.partial_degree(i)).collect(),
        m_degree: poly.m_degree(&family).ok_or_else(|| Error::Internal("the resultant is not isobaric".into()))?,
        poly,
        provenance: Provenance::Quotient,
    };
    hom_degree_report(degrees, &r).into_result().map_err(|e| Error::Internal(e.to_string()))?;
    Ok(r)
}

/// `deg_{u_i} = Π_{j≠i} d_j` and `deg_M = (Π d_l, …, Π d_l)`.
pub fn hom_degree_report(degrees: &[i64], res: &ResultantResult) -> Report {
    let product: i64 = degrees.iter().product();
    let mut r = Report::new("homogeneous resultant degrees");
    for (i, &d) in degrees.iter().enumerate() {
        let expected = product / d;
        let got = res.partial_degrees[i] as i64;
        r.check(format!("degree in u_{i}"), got == expected, format!("expected {expected}, got {got}"));
    }
    let expected = vec![product; degrees.len() - 1];
    r.check("lattice degree", res.m_degree == expected, format!("expected {expected:?}, got {:?}", res.m_degree));
    r
}

/// Vertices `v_{J,l}` of the cell `C_I` with `J ⊆ I^c` and `l ∈ I`.
pub fn simplex_cell_vertices(degrees: &[i64], cell: &[usize]) -> Vec<Point> {
    let n = degrees.len() - 1;
    let complement: Vec<usize> = (0..=n).filter(|i| !cell.contains(i)).collect();
    let e = |i: usize, scale: i64, v: &mut Point| {
        if i > 0 {
            v[i - 1] += scale;
        }
    };
    let mut out: Vec<Point> = Vec::new();
    for mask in 0u64..(1 << complement.len()) {
        let js: Vec<usize> = (0..complement.len()).filter(|&t| mask >> t & 1 == 1).map(|t| complement[t]).collect();
        for &l in cell {
            let mut v = vec![0; n];
            e(l, js.iter().map(|&j| degrees[j]).sum(), &mut v);
            for j in (0..=n).filter(|j| !js.contains(j)) {
                e(j, degrees[j], &mut v);
            }
            out.push(v);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Whether `a ∈ d·Σ_n` lies on the face `d·conv(e_i, e_j : j ∈ I)`.
fn on_simplex_face(a: &[i64], d: i64, i: usize, cell: &[usize]) -> bool {
    let homogeneous: Vec<i64> = std::iter::once(d - a.iter().sum::<i64>()).chain(a.iter().copied()).collect();
    homogeneous.iter().enumerate().all(|(j, &x)| x == 0 || j == i || cell.contains(&j))
}

/// `S(φ)` of `Σ d_i Σ_n`; its cells are the `C_I` for `∅ ≠ I ⊊ {0, …, n}`
/// with point components `d_i e_i` for `i ∈ I` and faces
/// `d_i conv(e_i, e_j : j ∈ I)` otherwise. Both are checked.
pub fn simplex_subdivision(degrees: &[i64]) -> Result<MixedSubdivision> {
    let family = simplex_family(degrees)?;
    let phi = simplex_lifting(&family, degrees)?;
    let sub = regular_subdivision(&family, &phi)?;
    let s = degrees.len();
    let expected = (1usize << s) - 2;
    if sub.cells.len() != expected {
        return internal(format!("{} cells instead of {expected}", sub.cells.len()));
    }
    for c in &sub.cells {
        let cell: Vec<usize> = (0..s).filter(|&i| c.component_dims[i] == 0).collect();
        if cell.is_empty() || cell.len() == s {
            return internal("a simplex cell without the expected point components");
        }
        for i in 0..s {
            let face: Vec<usize> = (0..family.supports[i].len())
                .filter(|&j| {
                    if cell.contains(&i) {
                        j == vertex_index(family.rank, i, degrees[i])
                    } else {
                        on_simplex_face(&family.supports[i][j], degrees[i], i, &cell)
                    }
                })
                .collect();
            if c.components[i] != face {
                return internal(format!("component {i} of the cell with point components {cell:?} is unexpected"));
            }
        }
    }
    Ok(sub)
}

/// `ρ_i = φ_i + μ_i` with `S(ρ)` tight and refining `S(φ)`: `μ = 0` when
/// `S(φ)` is already tight, otherwise small seeded linear functions.
pub fn simplex_rho(degrees: &[i64], seed: u64) -> Result<Lifting> {
    let family = simplex_family(degrees)?;
    let phi = simplex_lifting(&family, degrees)?;
    let coarse = regular_subdivision(&family, &phi)?;
    if coarse.is_tight() {
        return Ok(phi);
    }
    let n = family.rank;
    let total: i64 = degrees.iter().sum();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..PERTURBATION_ATTEMPTS {
        let scale = ratio(1, 64 * (total + 1) * (attempt as i64 + 1));
        let mu: Vec<Vec<Rat>> = (0..family.len()).map(|_| (0..n).map(|_| rat(rng.gen_range(-16..=16)) * &scale).collect()).collect();
        let rho = Lifting {
            values: family
                .supports
                .iter()
                .zip(&phi.values)
                .zip(&mu)
                .map(|((s, v), m)| {
                    s.iter().zip(v).map(|(a, h)| h + a.iter().zip(m).map(|(x, y)| rat(*x) * y).sum::<Rat>()).collect()
                })
                .collect(),
        };
        let fine = regular_subdivision(&family, &rho)?;
        if fine.is_tight() && fine.refines(&coarse)? {
            return Ok(rho);
        }
    }
    Err(Error::Computation(format!("no tight refining perturbation within {PERTURBATION_ATTEMPTS} attempts")))
}

/// `θ_{k,i} = φ_i` for `i < k` and `0` otherwise, ending at [`simplex_rho`];
/// refinements and the sufficient admissibility conditions are verified.
pub fn simplex_chain(degrees: &[i64], seed: u64) -> Result<IncrementalChain> {
    let family = simplex_family(degrees)?;
    let phi = simplex_lifting(&family, degrees)?;
    let rho = simplex_rho(degrees, seed)?;
    let stages = (0..family.len())
        .map(|k| Lifting {
            values: phi
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| if i < k { v.clone() } else { vec![Rat::zero(); v.len()] })
                .collect(),
        })
        .collect();
    let chain = IncrementalChain::from_stages(&family, stages, &rho)?;
    if !chain.refinements_hold()? {
        return internal("the simplex chain does not refine");
    }
    if !sufficient_admissibility(&chain) {
        return internal("the simplex chain fails the sufficient admissibility conditions");
    }
    Ok(chain)
}

/// `δ_i + 1 > 0` and `Σ (δ_i + 1) < 1`.
pub fn is_simplex_delta(delta: &[Rat]) -> bool {
    let shifted: Vec<Rat> = delta.iter().map(|d| d + rat(1)).collect();
    shifted.iter().all(|x| *x > rat(0)) && shifted.iter().sum::<Rat>() < rat(1)
}

/// Positions in `data` of `π(Γ)` in the order of `Γ`.
fn gamma_positions(spec: &HomSpec, data: &CEData) -> Option<Vec<usize>> {
    spec.gamma.iter().map(|c| data.position(&dehomogenize(c))).collect()
}

/// Checks that `π` maps `Γ_i` onto `B_i` with `a(π(c)) = d_i e_i`, `Γ°` onto
/// `B°`, `M` onto `H` and `N` onto `E`, entry by entry.
pub fn correspondence_report(spec: &HomSpec, data: &CEData) -> Report {
    let n = spec.rank();
    let mut r = Report::new("Macaulay and Canny-Emiris matrices");
    r.check("index set sizes", spec.gamma.len() == data.len(), format!("#Γ = {}, #B = {}", spec.gamma.len(), data.len()));
    let Some(pos) = gamma_positions(spec, data) else {
        r.check("index sets", false, "a dehomogenized index is not in B");
        return r;
    };
    let parts_match = pos.iter().enumerate().all(|(k, &p)| {
        let i = spec.part[k];
        data.index[p].support == i && data.index[p].a_index == vertex_index(n, i, spec.degrees[i])
    });
    r.check("partition and row content", parts_match, "");
    let mut nonmixed: Vec<usize> = spec.nonreduced.iter().map(|&k| pos[k]).collect();
    nonmixed.sort_unstable();
    r.check("nonmixed rows", nonmixed == data.nonmixed(), format!("{} nonmixed rows", data.nonmixed().len()));
    let (m, nm) = macaulay_matrices(spec);
    r.check("H equals M", build_matrix(data, &pos) == m, "");
    let e_order: Vec<usize> = spec.nonreduced.iter().map(|&k| pos[k]).collect();
    r.check("E equals N", build_matrix(data, &e_order) == nm, "");
    r
}

/// Builds the Canny-Emiris data of the simplex family with [`simplex_rho`]
/// and compares it with the Macaulay matrices in degree `|d| − n`.
pub fn verify_ce_macaulay_correspondence(degrees: &[i64], delta: Option<&[Rat]>, seed: u64) -> Result<Report> {
    let spec = HomSpec::new(degrees, None)?;
    let family = simplex_family(degrees)?;
    let rho = simplex_rho(degrees, seed)?;
    let delta = match delta {
        Some(d) => {
            if d.len() != family.rank || !is_simplex_delta(d) {
                return input("the translation must satisfy δ_i + 1 > 0 and Σ (δ_i + 1) < 1");
            }
            d.to_vec()
        }
        None => choose_delta(&regular_subdivision(&family, &rho)?, seed, true)?,
    };
    let data = build_ce_data(&family, &rho, &delta)?;
    Ok(correspondence_report(&spec, &data))
}

/// A tight lifting of the supports of degrees `(1, 2, 2)` whose
/// Canny-Emiris matrix is Macaulay's but whose nonmixed minor is `β_2 γ_5`.
pub fn counterexample_lifting(family: &SupportFamily) -> Result<Lifting> {
    Lifting::affine(
        family,
        &[(rat(0), vec![rat(1), rat(1)]), (rat(0), vec![rat(0), ratio(3, 2)]), (rat(0), vec![ratio(3, 2), rat(0)])],
    )
}

/// The translation `(−2/3, −3/4)` used with the degrees `(1, 2, 2)`.
pub fn counterexample_delta() -> Vec<Rat> {
    vec![ratio(-2, 3), ratio(-3, 4)]
}

/// For the counterexample lifting: `H = M`, `E = diag(β_2, γ_5)`,
/// `det E ∤ det H` while `Res_d | det H`. Passing means reproduced.
pub fn counterexample_report() -> Result<Report> {
    let degrees = [1, 2, 2];
    let spec = HomSpec::new(&degrees, None)?;
    let family = simplex_family(&degrees)?;
    let data = build_ce_data(&family, &counterexample_lifting(&family)?, &counterexample_delta())?;
    let mut r = Report::new("non-admissible lifting");
    let Some(pos) = gamma_positions(&spec, &data) else {
        return internal("the index set differs from Γ");
    };
    let (m, _) = macaulay_matrices(&spec);
    let h = build_matrix(&data, &pos);
    r.check("H equals M", h == m, "");
    let mut nonmixed = data.nonmixed();
    nonmixed.sort_by_key(|&k| data.index[k].support);
    let e = build_matrix(&data, &nonmixed);
    let beta2 = SparsePoly::var(Var::new(1, 2));
    let gamma5 = SparsePoly::var(Var::new(2, 5));
    let diagonal = vec![vec![beta2.clone(), SparsePoly::zero()], vec![SparsePoly::zero(), gamma5.clone()]];
    r.check("E is diag(β_2, γ_5)", e == diagonal, format!("{} nonmixed rows", nonmixed.len()));
    let det_h = determinant(&h);
    r.check("det E does not divide det H", det_h.exact_divide(&beta2.mul(&gamma5)).is_none(), "");
    let res = hom_resultant(&degrees)?;
    r.check("the resultant divides det H", det_h.exact_divide(&res.poly).is_some(), "");
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resultant::{is_admissible, resultant};
    use proptest::prelude::*;

    fn u(i: usize, j: usize) -> SparsePoly {
        SparsePoly::var(Var::new(i, j))
    }

    fn z() -> SparsePoly {
        SparsePoly::zero()
    }

    #[test]
    fn index_sets_of_degrees_122() {
        let spec = HomSpec::new(&[1, 2, 2], None).unwrap();
        assert_eq!(spec.m, 3);
        let parts: Vec<Vec<Point>> =
            (0..3).map(|i| spec.part_indices(i).iter().map(|&k| spec.gamma[k].clone()).collect()).collect();
        assert_eq!(parts[0], vec![vec![3, 0, 0], vec![2, 1, 0], vec![2, 0, 1], vec![1, 1, 1]]);
        assert_eq!(parts[1], vec![vec![1, 2, 0], vec![0, 3, 0], vec![0, 2, 1]]);
        assert_eq!(parts[2], vec![vec![1, 0, 2], vec![0, 1, 2], vec![0, 0, 3]]);
        let nonreduced: Vec<Point> = spec.nonreduced.iter().map(|&k| spec.gamma[k].clone()).collect();
        assert_eq!(nonreduced, vec![vec![1, 2, 0], vec![1, 0, 2]]);
        assert!(HomSpec::new(&[1, 2, 2], Some(2)).is_err());
        assert!(HomSpec::new(&[0, 2], None).is_err());
    }

    #[test]
    fn macaulay_matrix_of_degrees_122() {
        let (a, b, g) = (|j| u(0, j), |j| u(1, j), |j| u(2, j));
        let expected: PolyMatrix = vec![
            vec![a(0), a(1), a(2), z(), z(), z(), z(), z(), z(), z()],
            vec![z(), a(0), z(), a(2), a(1), z(), z(), z(), z(), z()],
            vec![z(), z(), a(0), a(1), z(), z(), z(), a(2), z(), z()],
            vec![z(), z(), z(), a(0), z(), z(), a(1), z(), a(2), z()],
            vec![b(0), b(1), b(3), b(4), b(2), z(), z(), b(5), z(), z()],
            vec![z(), b(0), z(), b(3), b(1), b(2), b(4), z(), b(5), z()],
            vec![z(), z(), b(0), b(1), z(), z(), b(2), b(3), b(4), b(5)],
            vec![g(0), g(1), g(3), g(4), g(2), z(), z(), g(5), z(), z()],
            vec![z(), g(0), z(), g(3), g(1), g(2), g(4), z(), g(5), z()],
            vec![z(), z(), g(0), g(1), z(), z(), g(2), g(3), g(4), g(5)],
        ];
        let spec = HomSpec::new(&[1, 2, 2], None).unwrap();
        let (m, nm) = macaulay_matrices(&spec);
        assert_eq!(m, expected);
        assert_eq!(nm, vec![vec![b(2), b(5)], vec![g(2), g(5)]]);
    }

    #[test]
    fn resultant_of_degrees_122() {
        let r = hom_resultant(&[1, 2, 2]).unwrap();
        assert_eq!(r.partial_degrees, vec![4, 2, 2]);
        assert_eq!(r.poly.len(), 234);
        assert_eq!(r.m_degree, vec![4, 4]);
        // The monomial system has resultant one.
        assert_eq!(r.poly.coefficient(&crate::polyring::Monomial::from_factors(vec![(Var::new(0, 0), 4), (Var::new(1, 2), 2), (Var::new(2, 5), 2)])), BigInt::one());
        let sparse = resultant(&simplex_family(&[1, 2, 2]).unwrap(), 0).unwrap();
        assert!(sparse.poly == r.poly || sparse.poly == r.poly.neg());
    }

    #[test]
    fn small_degree_vectors() {
        let spec = HomSpec::new(&[1, 1], None).unwrap();
        let (m, nm) = macaulay_matrices(&spec);
        assert_eq!(m.len(), 2);
        assert!(nm.is_empty());
        let r = hom_resultant(&[1, 1]).unwrap();
        let det = u(0, 0).mul(&u(1, 1)).sub(&u(0, 1).mul(&u(1, 0)));
        assert!(r.poly == det || r.poly == det.neg());
        let r = hom_resultant(&[3]).unwrap();
        assert_eq!(r.poly, u(0, 0));
        let spec = HomSpec::new(&[3], None).unwrap();
        assert_eq!(spec.gamma, vec![vec![3]]);
    }

    #[test]
    fn two_quadratics_match_sylvester() {
        let r = hom_resultant(&[2, 2]).unwrap();
        let f: Vec<SparsePoly> = (0..3).map(|j| u(0, j)).collect();
        let g: Vec<SparsePoly> = (0..3).map(|j| u(1, j)).collect();
        let s = crate::resultant::tests::sylvester(&f, &g);
        assert!(r.poly == s || r.poly == s.neg());
        assert_eq!(r.partial_degrees, vec![2, 2]);
    }

    #[test]
    fn larger_macaulay_quotients_have_the_expected_degrees() {
        for d in [vec![1, 1, 1], vec![2, 1, 1], vec![1, 1, 1, 1], vec![2, 3]] {
            let r = hom_resultant(&d).unwrap();
            assert!(hom_degree_report(&d, &r).passed());
        }
        let base = hom_resultant(&[1, 1, 2]).unwrap();
        assert_eq!(hom_resultant_in_degree(&[1, 1, 2], Some(3)).unwrap().poly, base.poly);
    }

    #[test]
    fn simplex_subdivisions() {
        let sub = simplex_subdivision(&[1, 2, 2]).unwrap();
        assert_eq!(sub.cells.len(), 6);
        assert!(sub.is_tight());
        for c in &sub.cells {
            let cell: Vec<usize> = (0..3).filter(|&i| c.component_dims[i] == 0).collect();
            let mut vertices: Vec<Point> =
                c.polytope.vertices.iter().map(|v| v.iter().map(|x| crate::num::to_i64(&x.to_integer())).collect()).collect();
            vertices.sort();
            assert_eq!(vertices, simplex_cell_vertices(&[1, 2, 2], &cell));
            let dims: usize = c.component_dims.iter().sum();
            assert_eq!(dims, cell.len() * (3 - cell.len()));
        }
        assert_eq!(simplex_subdivision(&[2, 3]).unwrap().cells.len(), 2);
        let sub = simplex_subdivision(&[1, 1, 1, 1]).unwrap();
        assert_eq!(sub.cells.len(), 14);
        assert!(!sub.is_tight());
    }

    #[test]
    fn simplex_chains() {
        let chain = simplex_chain(&[1, 2, 2], 0).unwrap();
        let counts: Vec<usize> = chain.subdivisions.iter().map(|s| s.cells.len()).collect();
        assert_eq!(counts, vec![1, 2, 4]);
        let chain = simplex_chain(&[2, 3], 0).unwrap();
        assert_eq!(chain.subdivisions.len(), 2);
        let chain = simplex_chain(&[1, 1, 1, 1], 0).unwrap();
        assert!(chain.rho.is_tight());
    }

    #[test]
    fn correspondence_for_degrees_122() {
        let r = verify_ce_macaulay_correspondence(&[1, 2, 2], Some(&counterexample_delta()), 0).unwrap();
        assert!(r.passed(), "{r}");
        let f = simplex_family(&[1, 2, 2]).unwrap();
        let chain = simplex_chain(&[1, 2, 2], 0).unwrap();
        let data = build_ce_data(&f, &chain.rho.lifting, &counterexample_delta()).unwrap();
        assert!(is_admissible(&chain, &data).unwrap());
        assert!(verify_ce_macaulay_correspondence(&[1, 2, 2], Some(&[ratio(1, 3), ratio(-1, 2)]), 0).is_err());
    }

    #[test]
    fn correspondence_for_other_degrees() {
        for d in [vec![1, 1], vec![2, 2, 2], vec![1, 1, 1, 1], vec![1, 1, 1, 2]] {
            let r = verify_ce_macaulay_correspondence(&d, None, 3).unwrap();
            assert!(r.passed(), "{d:?}: {r}");
        }
    }

    #[test]
    fn counterexample_is_reproduced() {
        let r = counterexample_report().unwrap();
        assert!(r.passed(), "{r}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn index_set_parts_partition_gamma(d in prop::collection::vec(1i64..4, 1..4), extra in 0i64..2) {
            let n = d.len() - 1;
            let spec = HomSpec::new(&d, Some(d.iter().sum::<i64>() - n as i64 + extra)).unwrap();
            let total: usize = (0..=n).map(|i| spec.part_indices(i).len()).sum();
            prop_assert_eq!(total, spec.gamma.len());
            let binom = (1..=n as i64).fold(BigInt::one(), |acc, k| acc * BigInt::from(spec.m + k) / BigInt::from(k));
            prop_assert_eq!(BigInt::from(spec.gamma.len()), binom);
        }
    }
}
