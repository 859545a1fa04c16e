//! Canny-Emiris matrices: the translated lattice points of `Δ`, their row
//! content, the matrix `H` and its nonmixed principal submatrix `E`, and the
//! verifications relating minors to restrictions, initial parts and degrees.

use std::collections::HashMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{input, internal, Error, Result};
use crate::mixedforms::mixed_volume;
use crate::num::{add_points, point_to_rat, ratio, sub, sub_points, Point, Rat};
use crate::polyring::{determinant, PolyMatrix, SparsePoly, Var, WeightVector};
use crate::polytope::{facet_contains_lattice_point, lattice_points_in_translate};
use crate::report::Report;
use crate::subdivision::{regular_subdivision, restrict, CellType, Lifting, MixedSubdivision, Restriction, SupportFamily};

/// A point `b ∈ B` with its containing translated cell and row content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexPoint {
    pub point: Point,
    /// Index of the cell `C` of `S(ρ)` with `b ∈ C + δ`.
    pub cell: usize,
    /// `i(b)`: the largest index with a point component in the cell.
    pub support: usize,
    /// Index of `a(b)` in `𝒜_{i(b)}`.
    pub a_index: usize,
    /// Whether the cell is not `i`-mixed for any `i`.
    pub nonmixed: bool,
}

/// The index set `B = (Δ + δ) ∩ ℤ^n` in lexicographic order with row content.
#[derive(Clone, Debug)]
pub struct CEData {
    pub family: SupportFamily,
    pub lifting: Lifting,
    pub subdivision: MixedSubdivision,
    pub delta: Vec<Rat>,
    pub index: Vec<IndexPoint>,
    lookup: Vec<HashMap<Point, usize>>,
}

impl CEData {
    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn a(&self, k: usize) -> &Point {
        let b = &self.index[k];
        &self.family.supports[b.support][b.a_index]
    }

    pub fn all(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }

    /// `B_0, …, B_n` as index lists.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.family.len()];
        for (k, b) in self.index.iter().enumerate() {
            parts[b.support].push(k);
        }
        parts
    }

    /// `B°` as an index list.
    pub fn nonmixed(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.index[k].nonmixed).collect()
    }

    pub fn position(&self, b: &[i64]) -> Option<usize> {
        self.index.binary_search_by(|x| x.point.as_slice().cmp(b)).ok()
    }

    pub fn points(&self, subset: &[usize]) -> Vec<Point> {
        subset.iter().map(|&k| self.index[k].point.clone()).collect()
    }

    fn support_index(&self, i: usize, a: &[i64]) -> Option<usize> {
        self.lookup[i].get(a).copied()
    }
}

/// Whether no facet of a cell, translated by `δ`, contains a lattice point.
pub fn is_generic_delta(sub: &MixedSubdivision, delta: &[Rat]) -> bool {
    sub.cells.iter().all(|c| {
        c.polytope.facets.iter().all(|f| !facet_contains_lattice_point(&c.polytope.facet_polytope(f), delta))
    })
}

const PRIMES: [i64; 12] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const DELTA_BUDGET: u64 = 256;

/// A deterministic generic translation vector. With `homogeneous` the
/// coordinates also satisfy `δ_i + 1 > 0` and `Σ (δ_i + 1) < 1`.
pub fn choose_delta(sub: &MixedSubdivision, seed: u64, homogeneous: bool) -> Result<Vec<Rat>> {
    let n = sub.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..DELTA_BUDGET {
        let delta: Vec<Rat> = (0..n)
            .map(|_| {
                let q = PRIMES[rng.gen_range(0..PRIMES.len())];
                let p = rng.gen_range(1..q);
                if homogeneous {
                    ratio(p, q * (n as i64 + 1)) - Rat::from_integer(1.into())
                } else {
                    ratio(-p, q)
                }
            })
            .collect();
        if is_generic_delta(sub, &delta) {
            return Ok(delta);
        }
    }
    Err(Error::Computation(format!("no generic translation found within {DELTA_BUDGET} candidates")))
}

/// Index set and row content of `(𝒜, ρ, δ)`, with the row-content properties
/// (injectivity of `b ↦ b − a(b)` on each `B_i` and `b − a(b) + 𝒜_{i(b)} ⊆ B`)
/// verified.
pub fn build_ce_data(family: &SupportFamily, lifting: &Lifting, delta: &[Rat]) -> Result<CEData> {
    let n = family.rank;
    if family.len() != n + 1 {
        return input(format!("a Canny-Emiris matrix needs {} supports in rank {n}", n + 1));
    }
    if delta.len() != n {
        return input(format!("the translation vector needs {n} coordinates"));
    }
    if family.minkowski_polytope().dim < n {
        return input("a Canny-Emiris matrix needs a full-dimensional Minkowski sum");
    }
    let subdivision = regular_subdivision(family, lifting)?;
    if !subdivision.is_tight() {
        return input("the lifting does not induce a tight mixed subdivision");
    }
    if !is_generic_delta(&subdivision, delta) {
        return input("the translated skeleton of the subdivision contains a lattice point");
    }
    let points = lattice_points_in_translate(&family.minkowski_polytope(), delta);
    let mut index = Vec::with_capacity(points.len());
    for b in points {
        let x = sub(&point_to_rat(&b), delta);
        let hits = subdivision.cells_containing(&x);
        if hits.len() != 1 {
            return internal(format!("{b:?} lies in {} translated cells", hits.len()));
        }
        let cell = hits[0];
        let c = &subdivision.cells[cell];
        let Some(i) = (0..family.len()).rev().find(|&i| c.component_dims[i] == 0) else {
            return internal(format!("the cell of {b:?} has no point component"));
        };
        if c.components[i].len() != 1 {
            return internal(format!("the point component of the cell of {b:?} is not a single point"));
        }
        let nonmixed = !matches!(subdivision.classify_cell(c)?, CellType::IMixed(_));
        index.push(IndexPoint { point: b, cell, support: i, a_index: c.components[i][0], nonmixed });
    }
    let lookup = family
        .supports
        .iter()
        .map(|s| s.iter().enumerate().map(|(j, a)| (a.clone(), j)).collect())
        .collect();
    let data =
        CEData { family: family.clone(), lifting: lifting.clone(), subdivision, delta: delta.to_vec(), index, lookup };
    check_row_content(&data)?;
    Ok(data)
}

fn check_row_content(data: &CEData) -> Result<()> {
    for part in data.partition() {
        let mut shifts: Vec<Point> = part.iter().map(|&k| sub_points(&data.index[k].point, data.a(k))).collect();
        shifts.sort();
        if shifts.windows(2).any(|w| w[0] == w[1]) {
            return internal("b ↦ b − a(b) is not injective on a row class");
        }
    }
    for k in 0..data.len() {
        let shift = sub_points(&data.index[k].point, data.a(k));
        for a in &data.family.supports[data.index[k].support] {
            if data.position(&add_points(&shift, a)).is_none() {
                return internal(format!("b − a(b) + 𝒜_i leaves the index set at {:?}", data.index[k].point));
            }
        }
    }
    Ok(())
}

/// The principal submatrix of `H` on `subset`, rows and columns in the given
/// order; entry `(b, b′)` is `u_{i(b), b′ − b + a(b)}` when that exponent lies
/// in `𝒜_{i(b)}`.
pub fn build_matrix(data: &CEData, subset: &[usize]) -> PolyMatrix {
    subset
        .iter()
        .map(|&r| {
            let row = &data.index[r];
            let shift = sub_points(data.a(r), &row.point);
            subset
                .iter()
                .map(|&c| {
                    let e = add_points(&data.index[c].point, &shift);
                    match data.support_index(row.support, &e) {
                        Some(j) => SparsePoly::var(Var::new(row.support, j)),
                        None => SparsePoly::zero(),
                    }
                })
                .collect()
        })
        .collect()
}

/// The determinant of the principal submatrix on `subset`, never zero.
pub fn principal_minor(data: &CEData, subset: &[usize]) -> Result<SparsePoly> {
    let d = determinant(&build_matrix(data, subset));
    if d.is_zero() {
        return internal("a principal minor of the Canny-Emiris matrix vanished");
    }
    Ok(d)
}

/// `deg_{u_i}(H_C) = #(B_i ∩ C)` with homogeneity, and `deg_M(H_C) = Σ_{b∈C} a(b)`.
pub fn check_minor_degrees(data: &CEData, subset: &[usize], minor: &SparsePoly) -> Report {
    let mut r = Report::new("minor degrees");
    for i in 0..data.family.len() {
        let expected = subset.iter().filter(|&&k| data.index[k].support == i).count() as u32;
        let got = minor.partial_degree(i);
        r.check(
            format!("degree in u_{i}"),
            got == expected && minor.is_homogeneous_in(i),
            format!("expected homogeneous of degree {expected}, got {got}"),
        );
    }
    let expected = subset.iter().fold(vec![0i64; data.family.rank], |acc, &k| add_points(&acc, data.a(k)));
    let got = minor.m_degree(&data.family);
    r.check("lattice degree", got.as_ref() == Some(&expected), format!("expected {expected:?}, got {got:?}"));
    r
}

/// Canny-Emiris data of a restriction to a coarse cell, with the parent
/// index of each of its points.
#[derive(Clone, Debug)]
pub struct RestrictedData {
    pub data: CEData,
    pub restriction: Restriction,
    pub parent_rows: Vec<usize>,
}

impl RestrictedData {
    /// Maps variables of the restricted family to those of the parent.
    pub fn to_parent(&self, p: &SparsePoly) -> SparsePoly {
        p.rename(|v| Var::new(v.support, self.restriction.parent_index[v.support][v.point]))
    }
}

/// The data `(𝒜_D, ρ_D, δ)` for the cell `cell` of a subdivision coarser than `S(ρ)`.
pub fn restricted_ce_data(data: &CEData, coarse: &MixedSubdivision, cell: usize) -> Result<RestrictedData> {
    if !data.subdivision.refines(coarse)? {
        return input("the subdivision of the data does not refine the coarse subdivision");
    }
    let d = coarse.cells.get(cell).ok_or_else(|| Error::Input(format!("no coarse cell {cell}")))?;
    let restriction = restrict(&data.family, &data.lifting, d);
    let sub_data = build_ce_data(&restriction.family, &restriction.lifting, &data.delta)?;
    let parent_rows = sub_data
        .index
        .iter()
        .map(|b| {
            data.position(&b.point)
                .ok_or_else(|| Error::Internal(format!("restricted index point {:?} is not in B", b.point)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RestrictedData { data: sub_data, restriction, parent_rows })
}

/// `B ∩ (D + δ)` as parent indices.
pub fn points_in_translated_cell(data: &CEData, coarse: &MixedSubdivision, cell: usize) -> Vec<usize> {
    let d = &coarse.cells[cell].polytope;
    (0..data.len()).filter(|&k| d.contains(&sub(&point_to_rat(&data.index[k].point), &data.delta))).collect()
}

/// Restricted index set and row content agree with the parent's on `D + δ`,
/// and the restricted submatrix on `C ∩ (D + δ)` is the parent's with
/// `u_{i,a} = 0` for `a ∉ D_i`.
pub fn verify_restriction_evaluation(
    data: &CEData,
    coarse: &MixedSubdivision,
    cell: usize,
    subset: &[usize],
) -> Result<Report> {
    let rd = restricted_ce_data(data, coarse, cell)?;
    let mut r = Report::new(format!("restriction to cell {cell}"));
    let inside = points_in_translated_cell(data, coarse, cell);
    r.check("index set", rd.parent_rows == inside, format!("{} restricted points, {} parent points", rd.parent_rows.len(), inside.len()));
    let content_matches = rd.data.index.iter().zip(&rd.parent_rows).all(|(b, &k)| {
        b.support == data.index[k].support && rd.data.a(rd.parent_rows.iter().position(|&x| x == k).unwrap()) == data.a(k)
    });
    r.check("row content", content_matches, "");
    let parent_subset: Vec<usize> = subset.iter().copied().filter(|k| inside.contains(k)).collect();
    let local_subset: Vec<usize> =
        parent_subset.iter().map(|k| rd.parent_rows.iter().position(|x| x == k).unwrap()).collect();
    let kept = &rd.restriction.parent_index;
    let parent: PolyMatrix = build_matrix(data, &parent_subset)
        .into_iter()
        .map(|row| row.into_iter().map(|p| p.evaluate_zeroing_sets(kept)).collect())
        .collect();
    let local: PolyMatrix = build_matrix(&rd.data, &local_subset)
        .into_iter()
        .map(|row| row.into_iter().map(|p| rd.to_parent(&p)).collect())
        .collect();
    r.check("matrix evaluation", parent == local, format!("{}×{} submatrix", local.len(), local.len()));
    Ok(r)
}

/// For `S(φ) ⪯ S(ρ)` and `ω = φ`: `ord_ω(H_C) = Σ_{b∈C} φ_{i(b)}(a(b))` and
/// `init_ω(H_C) = Π_D H_{𝒜_D, ρ_D, C ∩ (D + δ)}`.
pub fn verify_init_factorization_minors(data: &CEData, phi: &Lifting, subset: &[usize]) -> Result<Report> {
    let coarse = regular_subdivision(&data.family, phi)?;
    let omega = WeightVector { values: phi.envelope_values(&data.family) };
    let minor = principal_minor(data, subset)?;
    let (order, init) = minor.ord_init(&omega).expect("principal minors are nonzero");
    let expected_order = subset
        .iter()
        .map(|&k| omega.values[data.index[k].support][data.index[k].a_index].clone())
        .fold(Rat::zero(), |a, b| a + b);
    let mut product = SparsePoly::one();
    for cell in 0..coarse.cells.len() {
        let rd = restricted_ce_data(data, &coarse, cell)?;
        let local: Vec<usize> = subset.iter().filter_map(|k| rd.parent_rows.iter().position(|x| x == k)).collect();
        product = product.mul(&rd.to_parent(&principal_minor(&rd.data, &local)?));
    }
    let mut r = Report::new("initial part of a minor");
    r.check("order", order == expected_order, format!("expected {expected_order}, got {order}"));
    r.check("initial part", init == product, format!("{} coarse cells, {} terms", coarse.cells.len(), init.len()));
    Ok(r)
}

/// For each `i`, the points of `B_i` in translated `i`-mixed cells number
/// `MV(Δ_j : j ≠ i)`.
pub fn verify_mixed_cell_count(data: &CEData) -> Result<Report> {
    let family = &data.family;
    let mut r = Report::new("mixed cell counts");
    for i in 0..family.len() {
        let count = data
            .index
            .iter()
            .filter(|b| {
                b.support == i
                    && data.subdivision.classify_cell(&data.subdivision.cells[b.cell]).ok() == Some(CellType::IMixed(i))
            })
            .count();
        let in_mixed = data
            .index
            .iter()
            .filter(|b| data.subdivision.classify_cell(&data.subdivision.cells[b.cell]).ok() == Some(CellType::IMixed(i)))
            .count();
        let supports: Vec<Vec<Point>> =
            (0..family.len()).filter(|&j| j != i).map(|j| family.supports[j].clone()).collect();
        let mv = mixed_volume(family.rank, &supports)?;
        let ok = Rat::from_integer(count.into()) == mv && count == in_mixed;
        r.check(format!("support {i}"), ok, format!("{count} points of B_{i} and {in_mixed} points in {i}-mixed cells, mixed volume {mv}"));
    }
    Ok(r)
}
