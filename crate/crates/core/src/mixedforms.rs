//! Mixed volumes and mixed integrals, each by two independent algorithms:
//! inclusion-exclusion over Minkowski sums, and sums over the cells of a
//! mixed subdivision.

use num_traits::{One, Zero};

use crate::error::{input, Error, Result};
use crate::num::{ceil_i64, point_to_rat, rat, Point, Rat};
use crate::polytope::{convex_hull, minkowski_sum, normalized_volume, simplex_volume, triangulate, Polytope};
use crate::subdivision::{generic_tight_lifting, regular_subdivision, CellType, Lifting, SupportFamily};

/// Nonempty subsets of `0..s` as sorted index lists.
fn nonempty_subsets(s: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u64..(1u64 << s)).map(move |mask| (0..s).filter(|&i| mask >> i & 1 == 1).collect())
}

/// `MV = Σ_J (−1)^{n−|J|} vol(Σ_{j∈J} P_j)` for `n` polytopes in rank `n`.
pub fn mixed_volume_ie(ps: &[Polytope]) -> Result<Rat> {
    let n = ps.len();
    if let Some(p) = ps.iter().find(|p| p.ambient != n) {
        return input(format!("mixed volume needs {n} polytopes in rank {n}, got rank {}", p.ambient));
    }
    let mut total = Rat::zero();
    for js in nonempty_subsets(n) {
        let sum = minkowski_sum(&js.iter().map(|&j| ps[j].clone()).collect::<Vec<_>>());
        let v = normalized_volume(&sum);
        if (n - js.len()) % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    if n == 0 {
        total = Rat::one();
    }
    Ok(total)
}

/// Mixed volume of the convex hulls of `n` point sets in rank `n`.
pub fn mixed_volume(rank: usize, supports: &[Vec<Point>]) -> Result<Rat> {
    if supports.len() != rank {
        return input(format!("mixed volume needs {rank} supports in rank {rank}, got {}", supports.len()));
    }
    mixed_volume_ie(&supports.iter().map(|s| Polytope::from_points(s)).collect::<Vec<_>>())
}

/// Sum of the volumes of the mixed cells of a tight subdivision of `Σ Δ_i`.
pub fn mixed_volume_cells(family: &SupportFamily, seed: u64) -> Result<Rat> {
    if family.len() != family.rank {
        return input(format!("mixed volume needs {} supports in rank {}", family.rank, family.rank));
    }
    let lifting = generic_tight_lifting(family, seed)?;
    let s = regular_subdivision(family, &lifting)?;
    let mut total = Rat::zero();
    for c in &s.cells {
        if s.classify_cell(c)? == CellType::Mixed {
            total += normalized_volume(&c.polytope);
        }
    }
    Ok(total)
}

/// `∫_Δ ⊞ϑ_{ν_i} dvol`, integrating the affine height of each cell over a
/// triangulation of the cell.
pub fn integral_of_lifting(family: &SupportFamily, lifting: &Lifting) -> Result<Rat> {
    let s = regular_subdivision(family, lifting)?;
    let n = family.rank;
    let mut total = Rat::zero();
    for c in &s.cells {
        let heights: Vec<Rat> = c.polytope.vertices.iter().map(|x| c.height_at(x)).collect();
        for simplex in triangulate(&c.polytope) {
            let vol = simplex_volume(&simplex.iter().map(|&i| &c.polytope.vertices[i]).collect::<Vec<_>>());
            let mean = simplex.iter().map(|&i| heights[i].clone()).fold(Rat::zero(), |a, b| a + b)
                / rat(n as i64 + 1);
            total += vol * mean;
        }
    }
    Ok(total)
}

fn check_mixed_integral_input(family: &SupportFamily, lifting: &Lifting) -> Result<()> {
    if family.len() != family.rank + 1 {
        return input(format!("mixed integral needs {} supports in rank {}", family.rank + 1, family.rank));
    }
    lifting.check(family)
}

fn subfamily(family: &SupportFamily, lifting: &Lifting, js: &[usize]) -> (SupportFamily, Lifting) {
    (
        SupportFamily { rank: family.rank, supports: js.iter().map(|&j| family.supports[j].clone()).collect() },
        Lifting { values: js.iter().map(|&j| lifting.values[j].clone()).collect() },
    )
}

/// `MI = Σ_J (−1)^{n+1−|J|} ∫_{Σ_J Δ_j} ⊞_J ϑ_j dvol` for `n+1` lifted
/// supports in rank `n`.
pub fn mixed_integral_direct(family: &SupportFamily, lifting: &Lifting) -> Result<Rat> {
    check_mixed_integral_input(family, lifting)?;
    let n = family.rank;
    let mut total = Rat::zero();
    for js in nonempty_subsets(n + 1) {
        let (f, l) = subfamily(family, lifting, &js);
        let v = integral_of_lifting(&f, &l)?;
        if (n + 1 - js.len()) % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

/// The default caps `κ_i = max(0, ⌈max_a ν_{i,a}⌉)`.
pub fn default_caps(lifting: &Lifting) -> Vec<i64> {
    lifting.values.iter().map(|v| v.iter().map(ceil_i64).max().unwrap_or(0).max(0)).collect()
}

/// Mixed integral from mixed volumes of the capped lifted polytopes
/// `conv(gr(ϑ_i), Δ_i × {κ_i})` with the default caps.
pub fn mixed_integral_mv(family: &SupportFamily, lifting: &Lifting) -> Result<Rat> {
    let caps = default_caps(lifting);
    mixed_integral_mv_with_caps(family, lifting, &caps)
}

/// As [`mixed_integral_mv`] with caps `κ_i ≥ max(0, max ν_i)` given explicitly.
pub fn mixed_integral_mv_with_caps(family: &SupportFamily, lifting: &Lifting, caps: &[i64]) -> Result<Rat> {
    check_mixed_integral_input(family, lifting)?;
    let n = family.rank;
    if caps.len() != n + 1 {
        return input("one cap per support is required");
    }
    for (i, k) in caps.iter().enumerate() {
        if *k < 0 || lifting.values[i].iter().any(|v| *v > rat(*k)) {
            return input(format!("cap {k} of support {i} is below the lifting or negative"));
        }
    }
    let capped: Vec<Polytope> = family
        .supports
        .iter()
        .zip(&lifting.values)
        .zip(caps)
        .map(|((s, v), k)| {
            let mut pts = Vec::with_capacity(2 * s.len());
            for (a, h) in s.iter().zip(v) {
                let mut p = point_to_rat(a);
                p.push(h.clone());
                pts.push(p);
                let mut q = point_to_rat(a);
                q.push(rat(*k));
                pts.push(q);
            }
            convex_hull(&pts)
        })
        .collect();
    let polys = family.polytopes();
    let mut total = -mixed_volume_ie(&capped)?;
    for (i, k) in caps.iter().enumerate() {
        if *k == 0 {
            continue;
        }
        let others: Vec<Polytope> = (0..=n).filter(|&j| j != i).map(|j| polys[j].clone()).collect();
        total += rat(*k) * mixed_volume_ie(&others)?;
    }
    Ok(total)
}

/// `μ_i = MI(x_i|_{Δ_0}, …, x_i|_{Δ_n})` for each coordinate `i`.
pub fn isobarism_vector(family: &SupportFamily) -> Result<Point> {
    if family.len() != family.rank + 1 {
        return input(format!("isobarism needs {} supports in rank {}", family.rank + 1, family.rank));
    }
    (0..family.rank)
        .map(|i| {
            let lifting =
                Lifting { values: family.supports.iter().map(|s| s.iter().map(|a| rat(a[i])).collect()).collect() };
            let mi = mixed_integral_direct(family, &lifting)?;
            if !mi.is_integer() {
                return Err(Error::Internal(format!("mixed integral {mi} of a lattice lifting is not an integer")));
            }
            Ok(crate::num::to_i64(mi.numer()))
        })
        .collect()
}
