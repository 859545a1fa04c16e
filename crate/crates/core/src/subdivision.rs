//! Regular mixed subdivisions of Minkowski sums induced by liftings of the
//! supports: cells and components, tightness, refinement, generic liftings,
//! incremental chains and restriction to cells.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{input, Error, Result};
use crate::hull::facets_full_dim;
use crate::num::{affine_dim_int, dot_int, point_to_rat, rank_rat, rat, solve_in_row_span, sub, sub_points, Point, Rat};
use crate::polytope::{convex_hull, minkowski_sum, Polytope};

/// Finite supports `𝒜_0, …, 𝒜_{s−1}` in `ℤ^rank`; the index of a point in its
/// support names the coefficient variable attached to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFamily {
    pub rank: usize,
    pub supports: Vec<Vec<Point>>,
}

impl SupportFamily {
    pub fn new(rank: usize, supports: Vec<Vec<Point>>) -> Result<Self> {
        for (i, s) in supports.iter().enumerate() {
            if s.is_empty() {
                return input(format!("support {i} is empty"));
            }
            if let Some(p) = s.iter().find(|p| p.len() != rank) {
                return input(format!("point {p:?} of support {i} does not have {rank} coordinates"));
            }
            let mut sorted = s.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != s.len() {
                return input(format!("support {i} has repeated points"));
            }
        }
        Ok(SupportFamily { rank, supports })
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }

    pub fn polytope(&self, i: usize) -> Polytope {
        Polytope::from_points(&self.supports[i])
    }

    pub fn polytopes(&self) -> Vec<Polytope> {
        (0..self.len()).map(|i| self.polytope(i)).collect()
    }

    /// `Δ = Σ Δ_i`.
    pub fn minkowski_polytope(&self) -> Polytope {
        if self.is_empty() {
            return convex_hull(&[vec![Rat::zero(); self.rank]]);
        }
        minkowski_sum(&self.polytopes())
    }

    pub fn index_of(&self, i: usize, a: &[i64]) -> Option<usize> {
        self.supports[i].iter().position(|p| p == a)
    }

    /// Number of coefficient variables.
    pub fn num_vars(&self) -> usize {
        self.supports.iter().map(Vec::len).sum()
    }
}

/// Rational values `ν_{i,a}` on every support point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lifting {
    pub values: Vec<Vec<Rat>>,
}

impl Lifting {
    pub fn zero(family: &SupportFamily) -> Self {
        Lifting { values: family.supports.iter().map(|s| vec![Rat::zero(); s.len()]).collect() }
    }

    /// `ν_{i,a} = c_i + ⟨w_i, a⟩` for per-support pairs `(c_i, w_i)`.
    pub fn affine(family: &SupportFamily, coeffs: &[(Rat, Vec<Rat>)]) -> Result<Self> {
        if coeffs.len() != family.len() {
            return input("affine lifting needs one (constant, slope) pair per support");
        }
        if coeffs.iter().any(|(_, w)| w.len() != family.rank) {
            return input("affine lifting slope has the wrong length");
        }
        let values = family
            .supports
            .iter()
            .zip(coeffs)
            .map(|(s, (c, w))| s.iter().map(|a| c + dot_int(w, a)).collect())
            .collect();
        Ok(Lifting { values })
    }

    pub fn pointwise(family: &SupportFamily, values: Vec<Vec<Rat>>) -> Result<Self> {
        let l = Lifting { values };
        l.check(family)?;
        Ok(l)
    }

    pub fn check(&self, family: &SupportFamily) -> Result<()> {
        if self.values.len() != family.len()
            || self.values.iter().zip(&family.supports).any(|(v, s)| v.len() != s.len())
        {
            return input("lifting is not defined on exactly the support points");
        }
        Ok(())
    }

    /// The values of the lower envelopes `ϑ_{ν_i}` at the support points.
    pub fn envelope_values(&self, family: &SupportFamily) -> Vec<Vec<Rat>> {
        family.supports.iter().zip(&self.values).map(|(s, v)| lower_envelope(s, v)).collect()
    }

    /// Whether every lifted point lies on the lower envelope of its support.
    pub fn is_convex(&self, family: &SupportFamily) -> bool {
        self.envelope_values(family) == self.values
    }

    fn scaled(&self, factors: &[Rat]) -> Lifting {
        Lifting {
            values: self.values.iter().zip(factors).map(|(v, f)| v.iter().map(|x| x * f).collect()).collect(),
        }
    }
}

/// Values at each point of the lower envelope of the lifted point set.
pub fn lower_envelope(points: &[Point], heights: &[Rat]) -> Vec<Rat> {
    let p0 = &points[0];
    let mut frame: Vec<Vec<Rat>> = Vec::new();
    for p in &points[1..] {
        let d = point_to_rat(&sub_points(p, p0));
        let mut trial = frame.clone();
        trial.push(d.clone());
        if rank_rat(&trial) == trial.len() {
            frame.push(d);
        }
    }
    if frame.is_empty() {
        return heights.to_vec();
    }
    let local: Vec<Vec<Rat>> = points
        .iter()
        .map(|p| solve_in_row_span(&frame, &point_to_rat(&sub_points(p, p0))).expect("point in affine hull"))
        .collect();
    let top = heights.iter().max().unwrap() + rat(1);
    let mut lifted: Vec<Vec<Rat>> = local
        .iter()
        .zip(heights)
        .map(|(x, h)| {
            let mut y = x.clone();
            y.push(h.clone());
            y
        })
        .collect();
    let mut high = local[0].clone();
    high.push(top);
    lifted.push(high);
    let k = frame.len();
    let lower: Vec<(Vec<Rat>, Rat, Rat)> = facets_full_dim(&lifted)
        .into_iter()
        .filter(|f| f.normal[k].is_positive())
        .map(|f| {
            let w: Vec<Rat> = f.normal[..k].iter().map(|x| Rat::from_integer(x.clone())).collect();
            (w, Rat::from_integer(f.normal[k].clone()), Rat::from_integer(f.offset))
        })
        .collect();
    local
        .iter()
        .map(|x| {
            lower
                .iter()
                .map(|(w, wh, c)| (c - crate::num::dot(w, x)) / wh)
                .max()
                .expect("a lower facet exists")
        })
        .collect()
}

/// An `n`-cell `C = Σ conv(C_i)` of a regular mixed subdivision, with inner
/// normal `(v, 1)` of the lifted lower facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedCell {
    pub normal: Vec<Rat>,
    pub polytope: Polytope,
    /// Indices into `𝒜_i` of the points minimizing `⟨v, a⟩ + ν_{i,a}`.
    pub components: Vec<Vec<usize>>,
    pub component_dims: Vec<usize>,
    /// `κ_i = min_a ⟨v, a⟩ + ν_{i,a}`.
    pub offsets: Vec<Rat>,
}

impl MixedCell {
    pub fn component_points(&self, family: &SupportFamily, i: usize) -> Vec<Point> {
        self.components[i].iter().map(|&j| family.supports[i][j].clone()).collect()
    }

    pub fn component_polytope(&self, family: &SupportFamily, i: usize) -> Polytope {
        Polytope::from_points(&self.component_point_set(family, i))
    }

    fn component_point_set(&self, family: &SupportFamily, i: usize) -> Vec<Point> {
        self.component_points(family, i)
    }

    /// Dimension of `Σ_{j ∈ js} C_j`.
    pub fn sum_dim(&self, family: &SupportFamily, js: &[usize]) -> usize {
        let diffs: Vec<Vec<Rat>> = js
            .iter()
            .flat_map(|&j| {
                let pts = self.component_points(family, j);
                let first = pts[0].clone();
                pts.into_iter().skip(1).map(move |p| point_to_rat(&sub_points(&p, &first)))
            })
            .collect();
        rank_rat(&diffs)
    }

    /// The value of the inf-convolution at `x ∈ C`: `Σκ_i − ⟨v, x⟩`.
    pub fn height_at(&self, x: &[Rat]) -> Rat {
        self.offsets.iter().fold(Rat::zero(), |a, b| a + b) - crate::num::dot(&self.normal, x)
    }
}

/// The type of an `n`-cell of a tight subdivision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellType {
    /// Every component other than the `i`-th is a segment.
    IMixed(usize),
    /// All components are segments (families of `n` supports).
    Mixed,
    Nonmixed,
}

/// The `n`-cells of the subdivision `S(⊞ ϑ_{ν_i})` of `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedSubdivision {
    pub family: SupportFamily,
    pub lifting: Lifting,
    pub cells: Vec<MixedCell>,
}

/// Lower facets of the lifted Minkowski point set `{(Σa_i, Σν_{i,a_i})}`.
pub fn regular_subdivision(family: &SupportFamily, lifting: &Lifting) -> Result<MixedSubdivision> {
    lifting.check(family)?;
    let n = family.rank;
    // Minimal height over every decomposition of each sum point.
    let mut acc: BTreeMap<Point, Rat> = BTreeMap::new();
    acc.insert(vec![0; n], Rat::zero());
    for (s, v) in family.supports.iter().zip(&lifting.values) {
        let mut next: BTreeMap<Point, Rat> = BTreeMap::new();
        for (x, h) in &acc {
            for (a, nu) in s.iter().zip(v) {
                let y = crate::num::add_points(x, a);
                let hy = h + nu;
                match next.get_mut(&y) {
                    Some(old) if *old <= hy => {}
                    Some(old) => *old = hy,
                    None => {
                        next.insert(y, hy);
                    }
                }
            }
        }
        acc = next;
    }
    let xs: Vec<Point> = acc.keys().cloned().collect();
    let mut cells = Vec::new();
    if affine_dim_int(&xs) == Some(n) {
        let top = acc.values().max().unwrap() + rat(1);
        let mut lifted: Vec<Vec<Rat>> = acc
            .iter()
            .map(|(x, h)| {
                let mut y = point_to_rat(x);
                y.push(h.clone());
                y
            })
            .collect();
        let mut high = point_to_rat(&xs[0]);
        high.push(top);
        lifted.push(high);
        for f in facets_full_dim(&lifted) {
            if !f.normal[n].is_positive() {
                continue;
            }
            let wh = Rat::from_integer(f.normal[n].clone());
            let v: Vec<Rat> = f.normal[..n].iter().map(|x| Rat::from_integer(x.clone()) / &wh).collect();
            let cell_points: Vec<Vec<Rat>> = f.incident.iter().map(|&i| point_to_rat(&xs[i])).collect();
            cells.push(make_cell(family, lifting, v, convex_hull(&cell_points)));
        }
    }
    cells.sort_by(|a, b| a.normal.cmp(&b.normal));
    Ok(MixedSubdivision { family: family.clone(), lifting: lifting.clone(), cells })
}

fn make_cell(family: &SupportFamily, lifting: &Lifting, v: Vec<Rat>, polytope: Polytope) -> MixedCell {
    let mut components = Vec::new();
    let mut offsets = Vec::new();
    let mut component_dims = Vec::new();
    for (s, vals) in family.supports.iter().zip(&lifting.values) {
        let scores: Vec<Rat> = s.iter().zip(vals).map(|(a, nu)| dot_int(&v, a) + nu).collect();
        let m = scores.iter().min().unwrap().clone();
        let comp: Vec<usize> = (0..s.len()).filter(|&j| scores[j] == m).collect();
        let pts: Vec<Point> = comp.iter().map(|&j| s[j].clone()).collect();
        component_dims.push(affine_dim_int(&pts).unwrap());
        components.push(comp);
        offsets.push(m);
    }
    MixedCell { normal: v, polytope, components, component_dims, offsets }
}

impl MixedSubdivision {
    pub fn rank(&self) -> usize {
        self.family.rank
    }

    /// Every `n`-cell satisfies `Σ dim C_i = n`.
    pub fn is_tight(&self) -> bool {
        let n = self.rank();
        self.cells.iter().all(|c| c.component_dims.iter().sum::<usize>() == n)
    }

    pub fn classify_cell(&self, c: &MixedCell) -> Result<CellType> {
        let n = self.rank();
        if c.component_dims.iter().sum::<usize>() != n {
            return Err(Error::Input("cell classification needs a tight subdivision".into()));
        }
        classify_dims(&c.component_dims, n)
    }

    /// Indices of the cells containing `x`.
    pub fn cells_containing(&self, x: &[Rat]) -> Vec<usize> {
        (0..self.cells.len()).filter(|&i| self.cells[i].polytope.contains(x)).collect()
    }

    /// Whether `self ⪰ coarse`: each cell and each of its components lies in
    /// a cell of `coarse` and the matching component.
    pub fn refines(&self, coarse: &MixedSubdivision) -> Result<bool> {
        if self.family != coarse.family {
            return input("refinement test between subdivisions of different families");
        }
        let family = &self.family;
        let coarse_components: Vec<Vec<Polytope>> = coarse
            .cells
            .iter()
            .map(|d| (0..family.len()).map(|i| d.component_polytope(family, i)).collect())
            .collect();
        Ok(self.cells.iter().all(|c| {
            coarse.cells.iter().zip(&coarse_components).any(|(d, comps)| {
                d.polytope.contains_polytope(&c.polytope)
                    && (0..family.len()).all(|i| {
                        c.component_points(family, i).iter().all(|a| comps[i].contains(&point_to_rat(a)))
                    })
            })
        }))
    }

    /// Total volume of the cells.
    pub fn total_volume(&self) -> Rat {
        self.cells.iter().map(|c| crate::polytope::normalized_volume(&c.polytope)).fold(Rat::zero(), |a, b| a + b)
    }
}

pub fn classify_dims(dims: &[usize], n: usize) -> Result<CellType> {
    let s = dims.len();
    if s == n {
        return Ok(if dims.iter().all(|&d| d == 1) { CellType::Mixed } else { CellType::Nonmixed });
    }
    if s == n + 1 {
        for i in 0..s {
            if (0..s).all(|j| j == i || dims[j] == 1) {
                return Ok(CellType::IMixed(i));
            }
        }
        return Ok(CellType::Nonmixed);
    }
    input(format!("cell classification needs n or n+1 supports, got {s} in rank {n}"))
}

pub fn is_tight(s: &MixedSubdivision) -> bool {
    s.is_tight()
}

pub fn refines(fine: &MixedSubdivision, coarse: &MixedSubdivision) -> Result<bool> {
    fine.refines(coarse)
}

const LIFTING_RANGE: i64 = 1 << 12;
const ATTEMPT_BUDGET: u64 = 64;

fn random_lifting(family: &SupportFamily, rng: &mut ChaCha8Rng) -> Lifting {
    Lifting {
        values: family
            .supports
            .iter()
            .map(|s| s.iter().map(|_| rat(rng.gen_range(0..LIFTING_RANGE))).collect())
            .collect(),
    }
}

/// A deterministic integer lifting whose subdivision is tight.
pub fn generic_tight_lifting(family: &SupportFamily, seed: u64) -> Result<Lifting> {
    for attempt in 0..ATTEMPT_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        let l = random_lifting(family, &mut rng);
        if regular_subdivision(family, &l)?.is_tight() {
            return Ok(l);
        }
    }
    Err(Error::Computation(format!("no tight lifting found within {ATTEMPT_BUDGET} attempts")))
}

/// `S(θ_0) ⪯ … ⪯ S(θ_n) ⪯ S(ρ)` with `θ_{k,i} = ρ_i` for `i < k` and
/// `θ_{k,i} = 0` for `i ≥ k`.
#[derive(Clone, Debug)]
pub struct IncrementalChain {
    pub stages: Vec<Lifting>,
    pub subdivisions: Vec<MixedSubdivision>,
    pub rho: MixedSubdivision,
}

impl IncrementalChain {
    /// The chain of prefixes of a lifting.
    pub fn from_lifting(family: &SupportFamily, rho: &Lifting) -> Result<Self> {
        let stages: Vec<Lifting> = (0..=family.rank)
            .map(|k| Lifting {
                values: rho
                    .values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| if i < k { v.clone() } else { vec![Rat::zero(); v.len()] })
                    .collect(),
            })
            .collect();
        Self::from_stages(family, stages, rho)
    }

    pub fn from_stages(family: &SupportFamily, stages: Vec<Lifting>, rho: &Lifting) -> Result<Self> {
        if stages.len() != family.rank + 1 {
            return input(format!("an incremental chain in rank {} has {} stages", family.rank, family.rank + 1));
        }
        let subdivisions = stages.iter().map(|t| regular_subdivision(family, t)).collect::<Result<Vec<_>>>()?;
        Ok(IncrementalChain { stages, subdivisions, rho: regular_subdivision(family, rho)? })
    }

    pub fn family(&self) -> &SupportFamily {
        &self.rho.family
    }

    /// `θ_{k,i} = 0` for every `i ≥ k`.
    pub fn is_incremental(&self) -> bool {
        self.stages
            .iter()
            .enumerate()
            .all(|(k, t)| t.values.iter().skip(k).all(|v| v.iter().all(Zero::is_zero)))
    }

    /// `S(θ_k) ⪯ S(θ_{k+1})` for every `k` and `S(θ_n) ⪯ S(ρ)`.
    pub fn refinements_hold(&self) -> Result<bool> {
        for w in self.subdivisions.windows(2) {
            if !w[1].refines(&w[0])? {
                return Ok(false);
            }
        }
        self.rho.refines(self.subdivisions.last().expect("nonempty chain"))
    }

    /// For each stage `k` and cell `D`: `Σ_{j<k} dim D_j + dim Σ_{j≥k} D_j = n`.
    pub fn is_tight(&self) -> bool {
        let family = self.family();
        let n = family.rank;
        let s = family.len();
        self.subdivisions.iter().enumerate().all(|(k, sub)| {
            sub.cells.iter().all(|d| {
                let lower: usize = d.component_dims[..k.min(s)].iter().sum();
                let tail: Vec<usize> = (k.min(s)..s).collect();
                lower + d.sum_dim(family, &tail) == n
            })
        })
    }

    /// Incremental, refining, tight, and ending at a tight `S(ρ)`.
    pub fn verify_tight(&self) -> Result<bool> {
        Ok(self.is_incremental() && self.is_tight() && self.rho.is_tight() && self.refinements_hold()?)
    }
}

/// A tight incremental chain built from scale-separated random liftings
/// `ρ_i = B^{n−i} ν_i`; every property is verified before returning.
pub fn build_incremental_chain(family: &SupportFamily, seed: u64) -> Result<IncrementalChain> {
    let n = family.rank;
    for attempt in 0..ATTEMPT_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        let nu = Lifting {
            values: family.supports.iter().map(|s| s.iter().map(|_| rat(rng.gen_range(0..64))).collect()).collect(),
        };
        let mut base = rat(64);
        for _ in 0..4 {
            let factors: Vec<Rat> = (0..family.len())
                .map(|i| num_traits::pow::pow(base.clone(), n.saturating_sub(i)))
                .collect();
            let rho = nu.scaled(&factors);
            let chain = IncrementalChain::from_lifting(family, &rho)?;
            if chain.verify_tight()? {
                return Ok(chain);
            }
            base = &base * &base;
        }
    }
    Err(Error::Computation(format!("no tight incremental chain found within {ATTEMPT_BUDGET} attempts")))
}

/// A family restricted to a cell, with the parent index of every point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub family: SupportFamily,
    pub lifting: Lifting,
    pub parent_index: Vec<Vec<usize>>,
}

/// `𝒜_D = (𝒜_i ∩ D_i)` and the restricted lifting, for a cell `D` given by
/// its component polytopes.
pub fn restrict(family: &SupportFamily, lifting: &Lifting, d: &MixedCell) -> Restriction {
    let mut supports = Vec::new();
    let mut values = Vec::new();
    let mut parent_index = Vec::new();
    for i in 0..family.len() {
        let comp = d.component_polytope(family, i);
        let idx: Vec<usize> =
            (0..family.supports[i].len()).filter(|&j| comp.contains(&point_to_rat(&family.supports[i][j]))).collect();
        supports.push(idx.iter().map(|&j| family.supports[i][j].clone()).collect());
        values.push(idx.iter().map(|&j| lifting.values[i][j].clone()).collect());
        parent_index.push(idx);
    }
    Restriction { family: SupportFamily { rank: family.rank, supports }, lifting: Lifting { values }, parent_index }
}

/// The points of each `𝒜_i` whose lift lies on the lower face of `D`. For a
/// lifting that is not convex this drops points of `D_i` lifted above it.
pub fn restrict_to_lower_face(family: &SupportFamily, lifting: &Lifting, d: &MixedCell) -> Restriction {
    let parent_index = d.components.clone();
    let supports = parent_index.iter().enumerate().map(|(i, idx)| idx.iter().map(|&j| family.supports[i][j].clone()).collect()).collect();
    let values = parent_index.iter().enumerate().map(|(i, idx)| idx.iter().map(|&j| lifting.values[i][j].clone()).collect()).collect();
    Restriction { family: SupportFamily { rank: family.rank, supports }, lifting: Lifting { values }, parent_index }
}

/// Restriction of `(family, lifting)` to the cell `cell` of `coarse`,
/// checking that `S(lifting)` refines `coarse`.
pub fn restrict_to_cell(
    family: &SupportFamily,
    lifting: &Lifting,
    coarse: &MixedSubdivision,
    cell: usize,
) -> Result<Restriction> {
    let fine = regular_subdivision(family, lifting)?;
    if !fine.refines(coarse)? {
        return Err(Error::Input("the lifting does not refine the coarse subdivision".into()));
    }
    let d = coarse.cells.get(cell).ok_or_else(|| Error::Input(format!("no cell {cell}")))?;
    Ok(restrict(family, lifting, d))
}

/// Points `x − p` of a list, where `p` is its first element, as rationals.
pub fn differences(points: &[Point]) -> Vec<Vec<Rat>> {
    let first = point_to_rat(&points[0]);
    points.iter().skip(1).map(|p| sub(&point_to_rat(p), &first)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;
    use crate::polytope::normalized_volume;
    use proptest::prelude::*;
    use rand::Rng;

    pub(crate) fn simplex_support(n: usize, d: i64) -> Vec<Point> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        loop {
            if cur.iter().sum::<i64>() <= d {
                out.push(cur.clone());
            }
            let mut c = 0;
            loop {
                if c == n {
                    return out;
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

    fn linear_pair() -> SupportFamily {
        SupportFamily::new(1, vec![vec![vec![0], vec![1]], vec![vec![0], vec![1]]]).unwrap()
    }

    fn deg122() -> (SupportFamily, Lifting) {
        let f = SupportFamily::new(2, vec![simplex_support(2, 1), simplex_support(2, 2), simplex_support(2, 2)])
            .unwrap();
        let l = Lifting::affine(
            &f,
            &[
                (rat(0), vec![rat(1), rat(1)]),
                (rat(2), vec![rat(-1), rat(0)]),
                (rat(2), vec![rat(0), rat(-1)]),
            ],
        )
        .unwrap();
        (f, l)
    }

    #[test]
    fn two_cells_for_opposite_slopes() {
        let f = linear_pair();
        let l = Lifting::pointwise(&f, vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]).unwrap();
        let s = regular_subdivision(&f, &l).unwrap();
        assert_eq!(s.cells.len(), 2);
        let spans: Vec<Vec<Vec<Rat>>> = s.cells.iter().map(|c| c.polytope.vertices.clone()).collect();
        assert!(spans.contains(&vec![vec![rat(0)], vec![rat(1)]]));
        assert!(spans.contains(&vec![vec![rat(1)], vec![rat(2)]]));
        for c in &s.cells {
            let comps: Vec<Vec<Point>> = (0..2).map(|i| c.component_points(&f, i)).collect();
            if c.polytope.vertices[0] == vec![rat(0)] {
                assert_eq!(comps, vec![vec![vec![0]], vec![vec![0], vec![1]]]);
            } else {
                assert_eq!(comps, vec![vec![vec![0], vec![1]], vec![vec![1]]]);
            }
        }
    }

    #[test]
    fn zero_lifting_gives_one_cell() {
        let f = linear_pair();
        let s = regular_subdivision(&f, &Lifting::zero(&f)).unwrap();
        assert_eq!(s.cells.len(), 1);
        assert_eq!(s.cells[0].components, vec![vec![0, 1], vec![0, 1]]);
        assert!(!s.is_tight());
    }

    #[test]
    fn simplex_subdivision_has_six_tight_cells() {
        let (f, l) = deg122();
        let s = regular_subdivision(&f, &l).unwrap();
        assert_eq!(s.cells.len(), 6);
        assert!(s.is_tight());
        assert_eq!(s.total_volume(), normalized_volume(&f.minkowski_polytope()));
    }

    #[test]
    fn trivial_subdivision_of_full_dimensional_triangles_is_not_tight() {
        let (f, _) = deg122();
        assert!(!regular_subdivision(&f, &Lifting::zero(&f)).unwrap().is_tight());
    }

    #[test]
    fn non_admissible_lifting_is_tight() {
        let (f, _) = deg122();
        let l = Lifting::affine(
            &f,
            &[
                (rat(0), vec![rat(1), rat(1)]),
                (rat(0), vec![rat(0), ratio(3, 2)]),
                (rat(0), vec![ratio(3, 2), rat(0)]),
            ],
        )
        .unwrap();
        let s = regular_subdivision(&f, &l).unwrap();
        assert_eq!(s.cells.len(), 6);
        assert!(s.is_tight());
        let types: Vec<CellType> = s.cells.iter().map(|c| s.classify_cell(c).unwrap()).collect();
        // Nonmixed cells: (1,0)+(2,0)+Δ_2, Δ_0+(2,0)+(0,2), (0,1)+Δ_1+(0,2).
        assert_eq!(types.iter().filter(|t| **t == CellType::Nonmixed).count(), 3);
        // Δ_0 + (2,0) + (0,2) has two point components.
        let c5 = s.cells.iter().find(|c| c.component_dims == vec![2, 0, 0]).unwrap();
        assert_eq!(s.classify_cell(c5).unwrap(), CellType::Nonmixed);
    }

    #[test]
    fn classification_rules() {
        assert_eq!(classify_dims(&[0, 1, 1], 2).unwrap(), CellType::IMixed(0));
        assert_eq!(classify_dims(&[2, 0, 0], 2).unwrap(), CellType::Nonmixed);
        assert_eq!(classify_dims(&[1, 1], 2).unwrap(), CellType::Mixed);
        assert_eq!(classify_dims(&[2, 0], 2).unwrap(), CellType::Nonmixed);
        let (f, _) = deg122();
        let trivial = regular_subdivision(&f, &Lifting::zero(&f)).unwrap();
        assert!(trivial.classify_cell(&trivial.cells[0]).is_err());
    }

    #[test]
    fn refinement_relations() {
        let (f, l) = deg122();
        let s = regular_subdivision(&f, &l).unwrap();
        let trivial = regular_subdivision(&f, &Lifting::zero(&f)).unwrap();
        assert!(s.refines(&s).unwrap());
        assert!(s.refines(&trivial).unwrap());
        assert!(!trivial.refines(&s).unwrap());
        let chain = IncrementalChain::from_lifting(&f, &l).unwrap();
        assert_eq!(chain.subdivisions[0].cells.len(), 1);
        assert_eq!(chain.subdivisions[1].cells.len(), 2);
        assert_eq!(chain.rho.cells.len(), 6);
        assert!(chain.subdivisions[2].refines(&chain.subdivisions[1]).unwrap());
        assert!(chain.refinements_hold().unwrap());
        assert!(chain.is_incremental());
        let other = SupportFamily::new(2, vec![simplex_support(2, 1); 3]).unwrap();
        let t = regular_subdivision(&other, &Lifting::zero(&other)).unwrap();
        assert!(s.refines(&t).is_err());
    }

    #[test]
    fn generic_lifting_on_one_dimensional_support() {
        let f = SupportFamily::new(1, vec![vec![vec![0], vec![1], vec![2]]]).unwrap();
        let l = generic_tight_lifting(&f, 3).unwrap();
        let s = regular_subdivision(&f, &l).unwrap();
        assert!(s.is_tight());
        // A single support in rank 1 is tight only when the middle point is a vertex.
        assert_eq!(s.cells.len(), 2);
    }

    #[test]
    fn prefix_chain_of_an_affine_lifting_is_tight() {
        let f = SupportFamily::new(2, vec![simplex_support(2, 1), simplex_support(2, 3), simplex_support(2, 2)])
            .unwrap();
        let rho = Lifting::affine(
            &f,
            &[
                (rat(0), vec![rat(3), rat(6)]),
                (rat(0), vec![rat(2), rat(1)]),
                (rat(0), vec![rat(0), rat(0)]),
            ],
        )
        .unwrap();
        let chain = IncrementalChain::from_lifting(&f, &rho).unwrap();
        assert!(chain.is_incremental());
        assert!(chain.is_tight());
        assert!(chain.refinements_hold().unwrap());
    }

    #[test]
    fn built_chains_verify() {
        let (f, _) = deg122();
        let chain = build_incremental_chain(&f, 1).unwrap();
        assert!(chain.verify_tight().unwrap());
        let point = SupportFamily::new(0, vec![vec![vec![]]]).unwrap();
        let chain = build_incremental_chain(&point, 0).unwrap();
        assert_eq!(chain.stages.len(), 1);
        assert_eq!(chain.rho.cells.len(), 1);
    }

    #[test]
    fn restrictions_of_two_cell_subdivision() {
        let f = linear_pair();
        let l = Lifting::pointwise(&f, vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]).unwrap();
        let s = regular_subdivision(&f, &l).unwrap();
        let left = s.cells.iter().position(|c| c.polytope.vertices[0] == vec![rat(0)]).unwrap();
        let r = restrict_to_cell(&f, &l, &s, left).unwrap();
        assert_eq!(r.family.supports, vec![vec![vec![0]], vec![vec![0], vec![1]]]);
        let r = restrict_to_cell(&f, &l, &s, 1 - left).unwrap();
        assert_eq!(r.family.supports, vec![vec![vec![0], vec![1]], vec![vec![1]]]);
        let trivial = regular_subdivision(&f, &Lifting::zero(&f)).unwrap();
        let r = restrict_to_cell(&f, &l, &trivial, 0).unwrap();
        assert_eq!(r.family, f);
        assert!(restrict_to_cell(&f, &Lifting::zero(&f), &s, 0).is_err());
    }

    #[test]
    fn envelope_of_nonconvex_lifting() {
        let pts = vec![vec![0], vec![1], vec![2]];
        let env = lower_envelope(&pts, &[rat(0), rat(5), rat(2)]);
        assert_eq!(env, vec![rat(0), rat(1), rat(2)]);
        let f = SupportFamily::new(1, vec![pts]).unwrap();
        assert!(!Lifting::pointwise(&f, vec![vec![rat(0), rat(5), rat(2)]]).unwrap().is_convex(&f));
    }

    fn family_strategy() -> impl Strategy<Value = SupportFamily> {
        let point = prop::collection::vec(0i64..3, 2);
        let support = prop::collection::btree_set(point, 1..5).prop_map(|s| s.into_iter().collect::<Vec<_>>());
        prop::collection::vec(support, 3).prop_map(|s| SupportFamily::new(2, s).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn cells_cover_and_reconstruct(f in family_strategy(), seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let l = random_lifting(&f, &mut rng);
            let s = regular_subdivision(&f, &l).unwrap();
            let delta = f.minkowski_polytope();
            if delta.dim == 2 {
                prop_assert_eq!(s.total_volume(), normalized_volume(&delta));
            } else {
                prop_assert!(s.cells.is_empty());
            }
            for c in &s.cells {
                let comps: Vec<Polytope> = (0..f.len()).map(|i| c.component_polytope(&f, i)).collect();
                prop_assert_eq!(minkowski_sum(&comps), c.polytope.clone());
            }
            // Distinct cells never share a full-dimensional component.
            for (a, c) in s.cells.iter().enumerate() {
                for d in &s.cells[a + 1..] {
                    for i in 0..f.len() {
                        prop_assert!(!(c.component_dims[i] == 2 && c.components[i] == d.components[i]));
                    }
                }
            }
        }

        #[test]
        fn small_perturbations_refine(f in family_strategy(), seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let coarse = Lifting { values: f.supports.iter().map(|s| s.iter().map(|_| rat(rng.gen_range(0..3))).collect()).collect() };
            let eps = random_lifting(&f, &mut rng);
            let fine = Lifting { values: coarse.values.iter().zip(&eps.values).map(|(c, e)| c.iter().zip(e).map(|(x, y)| x + y / rat(1 << 20)).collect()).collect() };
            let sc = regular_subdivision(&f, &coarse).unwrap();
            let sf = regular_subdivision(&f, &fine).unwrap();
            prop_assert!(sf.refines(&sc).unwrap());
        }

        #[test]
        fn restriction_reproduces_fine_cells(f in family_strategy(), seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let coarse = Lifting { values: f.supports.iter().map(|s| s.iter().map(|_| rat(rng.gen_range(0..3))).collect()).collect() };
            let eps = random_lifting(&f, &mut rng);
            let fine = Lifting { values: coarse.values.iter().zip(&eps.values).map(|(c, e)| c.iter().zip(e).map(|(x, y)| x + y / rat(1 << 20)).collect()).collect() };
            let sc = regular_subdivision(&f, &coarse).unwrap();
            let sf = regular_subdivision(&f, &fine).unwrap();
            for d in &sc.cells {
                let r = restrict(&f, &fine, d);
                let sub = regular_subdivision(&r.family, &r.lifting).unwrap();
                let inside: Vec<&Polytope> = sf.cells.iter().map(|c| &c.polytope).filter(|p| d.polytope.contains_polytope(p)).collect();
                prop_assert_eq!(sub.cells.len(), inside.len());
                for c in &sub.cells {
                    prop_assert!(inside.contains(&&c.polytope));
                }
            }
        }
    }
}
