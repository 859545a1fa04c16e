//! Sparse resultants and eliminants: fundamental subfamilies, admissibility
//! of incremental chains, the determinant quotient `det H / det E`, and the
//! verifications of degrees, orders, initial parts and evaluations.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::canny_emiris::{build_ce_data, choose_delta, principal_minor, CEData};
use crate::error::{input, internal, Error, Result};
use crate::lattice::{coordinates_in_sublattice, int_matrix, integer_kernel, integer_rank, kernel_basis, lattice_basis, saturation_index, to_point};
use crate::mixedforms::{isobarism_vector, mixed_integral_direct, mixed_volume};
use crate::num::{affine_dim_int, dot_int, point_to_rat, rat, sub, sub_points, Point, Rat};
use crate::polyring::{SparsePoly, Var, WeightVector};
use crate::report::Report;
use crate::subdivision::{
    build_incremental_chain, regular_subdivision, restrict, restrict_to_lower_face, CellType, IncrementalChain, Lifting, MixedCell, SupportFamily,
};

/// How a resultant was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `det H / det E` for an admissible chain.
    Quotient,
    /// A closed form: `±1`, or `u_{i,a}^{m_i}` for a single-point support.
    BaseCase,
    /// Computed on a derived family and renamed back.
    Recursion,
}

/// A primitive polynomial with positive leading coefficient and its degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantResult {
    pub poly: SparsePoly,
    pub partial_degrees: Vec<u32>,
    pub m_degree: Point,
    pub provenance: Provenance,
}

impl ResultantResult {
    fn new(family: &SupportFamily, poly: SparsePoly, provenance: Provenance) -> Result<Self> {
        let partial_degrees = (0..family.len()).map(|i| poly.partial_degree(i)).collect();
        let m_degree = poly
            .m_degree(family)
            .ok_or_else(|| Error::Internal("the resultant is not homogeneous for the lattice grading".into()))?;
        Ok(ResultantResult { poly, partial_degrees, m_degree, provenance })
    }
}

/// The unique essential subfamily `𝒜_J` and the exponent `d_𝒜` with
/// `Res_𝒜 = ±Elim_𝒜^{d_𝒜}`. Empty `subset` means `Res_𝒜 = ±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalSubfamily {
    pub subset: Vec<usize>,
    /// A basis of `L_{𝒜_J}`, generated by the differences within each support.
    pub basis: Vec<Point>,
    pub exponent: BigInt,
}

fn differences(family: &SupportFamily, js: &[usize]) -> Vec<Point> {
    js.iter()
        .flat_map(|&j| {
            let s = &family.supports[j];
            s.iter().skip(1).map(move |a| sub_points(a, &s[0]))
        })
        .collect()
}

fn lattice_rank(family: &SupportFamily, js: &[usize]) -> usize {
    let d = differences(family, js);
    if d.is_empty() {
        0
    } else {
        integer_rank(&int_matrix(&d))
    }
}

fn subsets(s: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..(1u64 << s)).map(move |mask| (0..s).filter(|&i| mask >> i & 1 == 1).collect())
}

/// `J` minimal with `rank L_J = #J − 1`, provided every `J′` has
/// `rank L_{J′} ≥ #J′ − 1`; otherwise the resultant is trivial.
pub fn fundamental_subfamily(family: &SupportFamily) -> Result<FundamentalSubfamily> {
    let s = family.len();
    let deficiency: Vec<(Vec<usize>, i64)> =
        subsets(s).map(|js| {
            let d = js.len() as i64 - lattice_rank(family, &js) as i64;
            (js, d)
        }).collect();
    let trivial = FundamentalSubfamily { subset: Vec::new(), basis: Vec::new(), exponent: BigInt::zero() };
    if deficiency.iter().any(|(_, d)| *d > 1) || deficiency.iter().all(|(_, d)| *d < 1) {
        return Ok(trivial);
    }
    let ones: Vec<&Vec<usize>> = deficiency.iter().filter(|(_, d)| *d == 1).map(|(j, _)| j).collect();
    let minimal: Vec<&Vec<usize>> =
        ones.iter().copied().filter(|j| !ones.iter().any(|k| k.len() < j.len() && k.iter().all(|x| j.contains(x)))).collect();
    if minimal.len() != 1 {
        return internal(format!("{} minimal essential subfamilies", minimal.len()));
    }
    let subset = minimal[0].clone();
    let diffs = differences(family, &subset);
    let basis: Vec<Point> = if diffs.is_empty() {
        Vec::new()
    } else {
        lattice_basis(&int_matrix(&diffs)).iter().map(|r| to_point(r)).collect()
    };
    let index = if diffs.is_empty() { BigInt::one() } else { saturation_index(&int_matrix(&diffs)) };
    // The rows of a saturated basis of L^⊥ give a surjection M → M/L^sat.
    let projection: Vec<Point> = integer_kernel(&int_matrix(&diffs), family.rank).iter().map(|r| to_point(r)).collect();
    let projected: Vec<Vec<Point>> = (0..s)
        .filter(|i| !subset.contains(i))
        .map(|i| {
            family.supports[i]
                .iter()
                .map(|a| projection.iter().map(|k| k.iter().zip(a).map(|(x, y)| x * y).sum()).collect())
                .collect()
        })
        .collect();
    let mv = mixed_volume(projection.len(), &projected)?;
    if !mv.is_integer() {
        return internal("mixed volume of lattice polytopes is not an integer");
    }
    let exponent = index * mv.to_integer();
    if exponent.is_zero() {
        return Ok(trivial);
    }
    Ok(FundamentalSubfamily { subset, basis, exponent })
}

/// For each stage `k` and cell `D`: `D` has at most one support in its
/// fundamental subfamily, or every `b ∈ B ∩ (D + δ)` with `i(b) = k` lies in
/// a translated `k`-mixed cell of `S(ρ)`.
pub fn admissibility_report(chain: &IncrementalChain, data: &CEData) -> Result<Report> {
    let family = &data.family;
    let mut r = Report::new("admissibility");
    r.check("refinements", chain.refinements_hold()? && data.subdivision.refines(chain.subdivisions.last().unwrap())?, "");
    r.check("incremental", chain.is_incremental(), "");
    for (k, sub) in chain.subdivisions.iter().enumerate() {
        for (c, d) in sub.cells.iter().enumerate() {
            let restricted = restrict(family, &chain.stages[k], d);
            let fundamental = fundamental_subfamily(&restricted.family)?;
            let small = fundamental.subset.len() <= 1;
            let mixed = data.index.iter().all(|b| {
                b.support != k
                    || !d.polytope.contains(&sub_rat(&b.point, &data.delta))
                    || data.subdivision.classify_cell(&data.subdivision.cells[b.cell]).ok() == Some(CellType::IMixed(k))
            });
            r.check(
                format!("stage {k} cell {c}"),
                small || mixed,
                format!("fundamental subfamily {:?}, row class {k} in {k}-mixed cells: {mixed}", fundamental.subset),
            );
        }
    }
    Ok(r)
}

fn sub_rat(b: &[i64], delta: &[Rat]) -> Vec<Rat> {
    sub(&point_to_rat(b), delta)
}

pub fn is_admissible(chain: &IncrementalChain, data: &CEData) -> Result<bool> {
    Ok(admissibility_report(chain, data)?.passed())
}

/// The geometric sufficient conditions: for each stage `k` and cell `D`,
/// some `dim Σ_J D_j < #J − 1`, or some `D_i` is a point, or
/// `dim Σ_{j≠i,k} D_j < n` for every `i < k`.
pub fn sufficient_admissibility(chain: &IncrementalChain) -> bool {
    let family = chain.family();
    let n = family.rank;
    let s = family.len();
    chain.subdivisions.iter().enumerate().all(|(k, sub)| {
        sub.cells.iter().all(|d: &MixedCell| {
            subsets(s).any(|js| !js.is_empty() && d.sum_dim(family, &js) + 1 < js.len())
                || d.component_dims.contains(&0)
                || (0..k).all(|i| {
                    let js: Vec<usize> = (0..s).filter(|&j| j != i && j != k).collect();
                    d.sum_dim(family, &js) < n
                })
        })
    })
}

/// `deg_{u_i} = MV(Δ_j : j ≠ i)` and `deg_M = μ_Δ`.
pub fn degree_report(family: &SupportFamily, res: &ResultantResult) -> Result<Report> {
    let mut r = Report::new("resultant degrees");
    for i in 0..family.len() {
        let others: Vec<Vec<Point>> = (0..family.len()).filter(|&j| j != i).map(|j| family.supports[j].clone()).collect();
        let mv = mixed_volume(family.rank, &others)?;
        let got = res.partial_degrees[i];
        r.check(
            format!("degree in u_{i}"),
            rat(got as i64) == mv && res.poly.is_homogeneous_in(i),
            format!("mixed volume {mv}, degree {got}"),
        );
    }
    let mu = isobarism_vector(family)?;
    r.check("lattice degree", res.m_degree == mu, format!("isobarism {mu:?}, degree {:?}", res.m_degree));
    Ok(r)
}

/// `Res_𝒜 = ±det H / det E` for data whose subdivision refines the last
/// stage of an admissible chain; the result is primitive and degree-checked.
pub fn sparse_resultant(data: &CEData, chain: &IncrementalChain) -> Result<ResultantResult> {
    let adm = admissibility_report(chain, data)?;
    if !adm.passed() {
        let failed: Vec<String> = adm.failures().iter().map(|c| c.name.clone()).collect();
        return Err(Error::Computation(format!("the incremental chain is not admissible at {}", failed.join(", "))));
    }
    let h = principal_minor(data, &data.all())?;
    let e = principal_minor(data, &data.nonmixed())?;
    let q = h
        .exact_divide(&e)
        .ok_or_else(|| Error::Computation("E does not divide H: non-admissible data or construction bug".into()))?;
    let (content, poly) = q.content_primitive();
    if !content.abs().is_one() {
        return internal(format!("the quotient has content {content}"));
    }
    let res = ResultantResult::new(&data.family, poly, Provenance::Quotient)?;
    degree_report(&data.family, &res)?.into_result().map_err(|e| Error::Internal(e.to_string()))?;
    Ok(res)
}

/// Builds a tight incremental chain, a generic translation and the
/// Canny-Emiris data for `family` from `seed`.
pub fn auto_data(family: &SupportFamily, seed: u64) -> Result<(IncrementalChain, CEData)> {
    let chain = build_incremental_chain(family, seed)?;
    let delta = choose_delta(&chain.rho, seed, false)?;
    let data = build_ce_data(family, &chain.rho.lifting, &delta)?;
    Ok((chain, data))
}

/// `Res_𝒜` with automatically chosen lifting, chain and translation.
pub fn resultant(family: &SupportFamily, seed: u64) -> Result<ResultantResult> {
    if family.len() != family.rank + 1 {
        return input(format!("a resultant needs {} supports in rank {}", family.rank + 1, family.rank));
    }
    if fundamental_subfamily(family)?.subset.is_empty() {
        return ResultantResult::new(family, SparsePoly::one(), Provenance::BaseCase);
    }
    let (chain, data) = auto_data(family, seed)?;
    sparse_resultant(&data, &chain)
}

/// Re-expresses translated supports in coordinates of a lattice basis.
fn in_sublattice(family: &SupportFamily, js: &[usize], basis: &[Point]) -> Result<SupportFamily> {
    let supports = js
        .iter()
        .map(|&j| {
            let s = &family.supports[j];
            let shifted: Vec<Point> = s.iter().map(|a| sub_points(a, &s[0])).collect();
            coordinates_in_sublattice(&shifted, basis)
        })
        .collect::<Result<Vec<_>>>()?;
    SupportFamily::new(basis.len(), supports)
}

/// `Elim_𝒜 = ±Res_{𝒜_J}` with `𝒜_J` in coordinates of `L_{𝒜_J}`, together
/// with the fundamental subfamily.
pub fn sparse_eliminant(family: &SupportFamily, seed: u64) -> Result<(ResultantResult, FundamentalSubfamily)> {
    let fundamental = fundamental_subfamily(family)?;
    if fundamental.subset.is_empty() {
        return Ok((ResultantResult::new(family, SparsePoly::one(), Provenance::BaseCase)?, fundamental));
    }
    let js = &fundamental.subset;
    let sub_family = in_sublattice(family, js, &fundamental.basis)?;
    let sub_res = resultant(&sub_family, seed)?;
    let poly = sub_res.poly.rename(|v| Var::new(js[v.support], v.point));
    Ok((ResultantResult::new(family, poly, Provenance::Recursion)?, fundamental))
}

/// `Res = ±Elim^d`.
pub fn verify_eliminant_power(res: &SparsePoly, elim: &SparsePoly, exponent: &BigInt) -> bool {
    let Some(e) = exponent.to_string().parse::<u32>().ok() else { return false };
    let p = elim.pow(e);
    *res == p || *res == p.neg()
}

/// The resultant of the faces `𝒜_i^v` (minimizing `⟨v, ·⟩`) of `n` supports,
/// over the lattice `v^⊥ ∩ ℤ^n`.
pub fn directional_resultant(family: &SupportFamily, v: &[i64], seed: u64) -> Result<ResultantResult> {
    let n = family.rank;
    if family.len() != n || v.len() != n {
        return input(format!("a directional resultant needs {n} supports and a direction in rank {n}"));
    }
    let g = v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    if g != 1 {
        return input(format!("direction {v:?} is not primitive"));
    }
    let vr = point_to_rat(v);
    let faces: Vec<Vec<usize>> = family
        .supports
        .iter()
        .map(|s| {
            let m = s.iter().map(|a| dot_int(&vr, a)).min().unwrap();
            (0..s.len()).filter(|&j| dot_int(&vr, &s[j]) == m).collect()
        })
        .collect();
    let face_family = SupportFamily {
        rank: n,
        supports: faces.iter().zip(&family.supports).map(|(f, s)| f.iter().map(|&j| s[j].clone()).collect()).collect(),
    };
    let face_sum: Vec<Point> = face_family.supports.iter().fold(vec![vec![0; n]], |acc, s| {
        acc.iter().flat_map(|x| s.iter().map(move |a| crate::num::add_points(x, a))).collect()
    });
    if affine_dim_int(&face_sum).unwrap_or(0) + 1 < n {
        return ResultantResult::new(family, SparsePoly::one(), Provenance::BaseCase);
    }
    let basis = kernel_basis(v)?;
    let projected = in_sublattice(&face_family, &(0..n).collect::<Vec<_>>(), &basis)?;
    let r = resultant(&projected, seed)?;
    let poly = r.poly.rename(|x| Var::new(x.support, faces[x.support][x.point]));
    ResultantResult::new(family, poly, Provenance::Recursion)
}

/// `Res_{𝒜_D}` of the cells of `S(Θ_ω)` in the parent's variables.
fn cell_resultants(family: &SupportFamily, omega: &Lifting, seed: u64) -> Result<Vec<(usize, SparsePoly)>> {
    let s = regular_subdivision(family, omega)?;
    s.cells
        .iter()
        .enumerate()
        .map(|(c, d)| {
            let r = restrict_to_lower_face(family, omega, d);
            let res = resultant(&r.family, seed)?;
            Ok((c, res.poly.rename(|v| Var::new(v.support, r.parent_index[v.support][v.point]))))
        })
        .collect()
}

/// `ord_ω(Res) = MI(ϑ_{ω_0}, …, ϑ_{ω_n})` and
/// `init_ω(Res) = ±Π_D Res_{𝒜_D}` over the cells of `S(Θ_ω)`.
pub fn verify_order_and_init(family: &SupportFamily, omega: &Lifting, res: &SparsePoly, seed: u64) -> Result<Report> {
    omega.check(family)?;
    let (order, init) = res.ord_init(&WeightVector { values: omega.values.clone() }).ok_or_else(|| Error::Input("zero resultant".into()))?;
    let mi = mixed_integral_direct(family, omega)?;
    let product = cell_resultants(family, omega, seed)?.into_iter().fold(SparsePoly::one(), |acc, (_, p)| acc.mul(&p));
    let mut r = Report::new("order and initial part");
    r.check("order", order == mi, format!("mixed integral {mi}, order {order}"));
    r.check("initial part", init == product || init == product.neg(), format!("{} terms", init.len()));
    Ok(r)
}

/// One factor `Res_{𝒜_D}` of an evaluation with vanishing coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellFactor {
    pub cell: usize,
    /// Whether `D` is the cell `Σ conv(Ã_i)` with inner normal `0`.
    pub is_kept_cell: bool,
    pub supports: Vec<Vec<Point>>,
    pub resultant: SparsePoly,
}

/// The outcome of setting `u_{i,a} = 0` for `a ∉ Ã_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroEvaluation {
    pub mixed_integral: Rat,
    pub vanishes: bool,
    pub factors: Vec<CellFactor>,
    pub product: SparsePoly,
    pub report: Report,
}

/// With `ω = 0` on `Ã` and `1` elsewhere: the evaluation vanishes iff
/// `MI(ϑ_ω) ≠ 0`, and otherwise equals `±Π_D Res_{𝒜_D}`.
pub fn zero_coefficient_factorization(
    family: &SupportFamily,
    kept: &[Vec<usize>],
    res: Option<&SparsePoly>,
    seed: u64,
) -> Result<ZeroEvaluation> {
    if kept.len() != family.len()
        || kept.iter().zip(&family.supports).any(|(k, s)| k.is_empty() || k.iter().any(|&j| j >= s.len()))
    {
        return input("kept subsets must be nonempty subsets of the supports");
    }
    let omega = Lifting {
        values: family
            .supports
            .iter()
            .zip(kept)
            .map(|(s, k)| (0..s.len()).map(|j| if k.contains(&j) { rat(0) } else { rat(1) }).collect())
            .collect(),
    };
    let mi = mixed_integral_direct(family, &omega)?;
    let mut report = Report::new("vanishing coefficients");
    let evaluated = res.map(|p| p.evaluate_zeroing_sets(kept));
    if !mi.is_zero() {
        if let Some(e) = &evaluated {
            report.check("evaluation vanishes", e.is_zero(), format!("mixed integral {mi}"));
        }
        return Ok(ZeroEvaluation { mixed_integral: mi, vanishes: true, factors: Vec::new(), product: SparsePoly::zero(), report });
    }
    let sub = regular_subdivision(family, &omega)?;
    let mut factors = Vec::new();
    let mut product = SparsePoly::one();
    for (c, p) in cell_resultants(family, &omega, seed)? {
        let d = &sub.cells[c];
        let only_kept = p.variables().iter().all(|v| kept[v.support].contains(&v.point));
        report.check(format!("cell {c} factor uses kept variables"), only_kept, "");
        product = product.mul(&p);
        factors.push(CellFactor {
            cell: c,
            is_kept_cell: d.normal.iter().all(Zero::is_zero),
            supports: (0..family.len()).map(|i| d.component_points(family, i)).collect(),
            resultant: p,
        });
    }
    if let Some(e) = &evaluated {
        report.check("product formula", *e == product || *e == product.neg(), format!("{} factors", factors.len()));
    }
    Ok(ZeroEvaluation { mixed_integral: mi, vanishes: false, factors, product, report })
}

/// `Elim_𝒜 | det H`, and when `B_i` lies in translated `i`-mixed cells the
/// quotient `det H / Res_𝒜` has no `u_i` variables.
pub fn verify_divisibility(data: &CEData, elim: &SparsePoly, res: Option<&SparsePoly>) -> Result<Report> {
    let h = principal_minor(data, &data.all())?;
    let mut r = Report::new("divisibility");
    r.check("eliminant divides H", h.exact_divide(elim).is_some(), "");
    if let Some(res) = res {
        let q = h.exact_divide(res);
        r.check("resultant divides H", q.is_some(), "");
        if let Some(q) = q {
            for (i, part) in data.partition().iter().enumerate() {
                let hypothesis = !part.is_empty()
                    && part.iter().all(|&k| {
                        data.subdivision.classify_cell(&data.subdivision.cells[data.index[k].cell]).ok()
                            == Some(CellType::IMixed(i))
                    });
                if hypothesis {
                    r.check(
                        format!("quotient free of u_{i}"),
                        q.variables().iter().all(|v| v.support != i),
                        "",
                    );
                }
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::canny_emiris::tests::{deg122_family, delta122, phi122, non_admissible_lifting};
    use proptest::prelude::*;

    pub(crate) fn linear_pair() -> SupportFamily {
        SupportFamily::new(1, vec![vec![vec![0], vec![1]], vec![vec![0], vec![1]]]).unwrap()
    }

    fn u(i: usize, j: usize) -> SparsePoly {
        SparsePoly::var(Var::new(i, j))
    }

    fn det2() -> SparsePoly {
        u(0, 0).mul(&u(1, 1)).sub(&u(0, 1).mul(&u(1, 0)))
    }

    fn same_up_to_sign(a: &SparsePoly, b: &SparsePoly) -> bool {
        a == b || *a == b.neg()
    }

    /// Sylvester determinant of two univariate polynomials with coefficient
    /// vectors indexed by exponent.
    pub(crate) fn sylvester(f: &[SparsePoly], g: &[SparsePoly]) -> SparsePoly {
        let (p, q) = (f.len() - 1, g.len() - 1);
        let size = p + q;
        let mut m = vec![vec![SparsePoly::zero(); size]; size];
        for r in 0..q {
            for (e, c) in f.iter().enumerate() {
                m[r][r + e] = c.clone();
            }
        }
        for r in 0..p {
            for (e, c) in g.iter().enumerate() {
                m[q + r][r + e] = c.clone();
            }
        }
        crate::polyring::determinant(&m)
    }

    #[test]
    fn bivariate_base_case() {
        let f = linear_pair();
        let r = resultant(&f, 0).unwrap();
        assert!(same_up_to_sign(&r.poly, &det2()));
        assert_eq!(r.partial_degrees, vec![1, 1]);
        assert_eq!(r.m_degree, vec![1]);
        let fs = fundamental_subfamily(&f).unwrap();
        assert_eq!(fs.subset, vec![0, 1]);
        assert_eq!(fs.exponent, BigInt::one());
    }

    #[test]
    fn fundamental_subfamilies() {
        let pts = SupportFamily::new(1, vec![vec![vec![0]], vec![vec![0]]]).unwrap();
        assert!(fundamental_subfamily(&pts).unwrap().subset.is_empty());
        assert_eq!(resultant(&pts, 0).unwrap().poly, SparsePoly::one());
        let single = SupportFamily::new(1, vec![vec![vec![3]], vec![vec![0], vec![2]]]).unwrap();
        let fs = fundamental_subfamily(&single).unwrap();
        assert_eq!(fs.subset, vec![0]);
        assert_eq!(fs.exponent, BigInt::from(2));
        assert_eq!(resultant(&single, 0).unwrap().poly, u(0, 0).pow(2));
        let doubled = SupportFamily::new(1, vec![vec![vec![0], vec![2]], vec![vec![0], vec![2]]]).unwrap();
        let fs = fundamental_subfamily(&doubled).unwrap();
        assert_eq!(fs.subset, vec![0, 1]);
        assert_eq!(fs.exponent, BigInt::from(2));
        let f = deg122_family();
        let fs = fundamental_subfamily(&f).unwrap();
        assert_eq!(fs.subset, vec![0, 1, 2]);
        assert_eq!(fs.exponent, BigInt::one());
    }

    #[test]
    fn eliminants() {
        let f = linear_pair();
        let (e, _) = sparse_eliminant(&f, 0).unwrap();
        assert!(same_up_to_sign(&e.poly, &det2()));
        let doubled = SupportFamily::new(1, vec![vec![vec![0], vec![2]], vec![vec![0], vec![2]]]).unwrap();
        let (e, fs) = sparse_eliminant(&doubled, 0).unwrap();
        assert!(same_up_to_sign(&e.poly, &det2()));
        let r = resultant(&doubled, 0).unwrap();
        assert!(verify_eliminant_power(&r.poly, &e.poly, &fs.exponent));
        let pts = SupportFamily::new(1, vec![vec![vec![0]], vec![vec![1]]]).unwrap();
        assert_eq!(sparse_eliminant(&pts, 0).unwrap().0.poly, SparsePoly::one());
        // A redundant third support in rank 2 leaves the eliminant of the other two.
        let f = SupportFamily::new(
            2,
            vec![vec![vec![0, 0], vec![1, 0]], vec![vec![0, 0], vec![1, 0]], vec![vec![0, 0], vec![0, 1], vec![1, 1]]],
        )
        .unwrap();
        let (e, fs) = sparse_eliminant(&f, 0).unwrap();
        assert_eq!(fs.subset, vec![0, 1]);
        assert!(same_up_to_sign(&e.poly, &det2()));
        let r = resultant(&f, 0).unwrap();
        assert!(verify_eliminant_power(&r.poly, &e.poly, &fs.exponent));
    }

    #[test]
    fn simplex_family_resultant() {
        let f = deg122_family();
        let phi = phi122(&f);
        let chain = IncrementalChain::from_lifting(&f, &phi).unwrap();
        let data = build_ce_data(&f, &phi, &delta122()).unwrap();
        assert!(sufficient_admissibility(&chain));
        assert!(is_admissible(&chain, &data).unwrap());
        let r = sparse_resultant(&data, &chain).unwrap();
        assert_eq!(r.partial_degrees, vec![4, 2, 2]);
        assert_eq!(r.poly.len(), 234);
        assert_eq!(r.m_degree, vec![4, 4]);
        let divis = verify_divisibility(&data, &r.poly, Some(&r.poly)).unwrap();
        assert!(divis.passed(), "{divis}");
        let e = principal_minor(&data, &data.nonmixed()).unwrap();
        let h = principal_minor(&data, &data.all()).unwrap();
        assert!(same_up_to_sign(&h.exact_divide(&r.poly).unwrap(), &e));
    }

    #[test]
    fn counterexample_chain_is_not_admissible() {
        let f = deg122_family();
        let rho = non_admissible_lifting(&f);
        let data = build_ce_data(&f, &rho, &delta122()).unwrap();
        let zero = Lifting::zero(&f);
        let chain = IncrementalChain::from_stages(&f, vec![zero.clone(), zero.clone(), zero], &rho).unwrap();
        let report = admissibility_report(&chain, &data).unwrap();
        assert!(!report.passed());
        let failed: Vec<&str> = report.failures().iter().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["stage 1 cell 0", "stage 2 cell 0"]);
        assert!(sparse_resultant(&data, &chain).is_err());
        let h = principal_minor(&data, &data.all()).unwrap();
        let e = principal_minor(&data, &data.nonmixed()).unwrap();
        assert!(h.exact_divide(&e).is_none());
        let res = resultant(&f, 0).unwrap();
        let divis = verify_divisibility(&data, &res.poly, Some(&res.poly)).unwrap();
        assert!(divis.passed(), "{divis}");
    }

    #[test]
    fn orders_and_initial_parts_in_rank_one() {
        let f = linear_pair();
        let res = resultant(&f, 0).unwrap().poly;
        let first = Lifting::pointwise(&f, vec![vec![rat(0), rat(1)], vec![rat(0), rat(1)]]).unwrap();
        let r = verify_order_and_init(&f, &first, &res, 0).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(res.ord_init(&WeightVector { values: first.values.clone() }).unwrap().0, rat(1));
        let second = Lifting::pointwise(&f, vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]).unwrap();
        let r = verify_order_and_init(&f, &second, &res, 0).unwrap();
        assert!(r.passed(), "{r}");
        let (o, init) = res.ord_init(&WeightVector { values: second.values.clone() }).unwrap();
        assert_eq!(o, rat(0));
        assert_eq!(init, u(0, 0).mul(&u(1, 1)));
        let r = verify_order_and_init(&f, &Lifting::zero(&f), &res, 0).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn initial_parts_skip_points_lifted_above_the_envelope() {
        let f = SupportFamily::new(1, vec![vec![vec![0], vec![1], vec![2]], vec![vec![0], vec![1]]]).unwrap();
        let res = resultant(&f, 0).unwrap().poly;
        let omega = Lifting::pointwise(&f, vec![vec![rat(0), rat(5), rat(0)], vec![rat(0), rat(0)]]).unwrap();
        let r = verify_order_and_init(&f, &omega, &res, 0).unwrap();
        assert!(r.passed(), "{r}");
        let (o, init) = res.ord_init(&WeightVector { values: omega.values.clone() }).unwrap();
        assert_eq!(o, rat(0));
        assert!(init.variables().iter().all(|v| *v != Var::new(0, 1)));
        assert_eq!(init.len(), 2);
    }

    #[test]
    fn vanishing_coefficients() {
        let f = linear_pair();
        let res = resultant(&f, 0).unwrap().poly;
        let z = zero_coefficient_factorization(&f, &[vec![0], vec![0]], Some(&res), 0).unwrap();
        assert!(z.vanishes);
        assert_eq!(z.mixed_integral, rat(1));
        assert!(z.report.passed());
        let z = zero_coefficient_factorization(&f, &[vec![0], vec![1]], Some(&res), 0).unwrap();
        assert!(!z.vanishes);
        assert_eq!(z.product, u(0, 0).mul(&u(1, 1)));
        assert!(z.report.passed(), "{}", z.report);
        let z = zero_coefficient_factorization(&f, &[vec![0, 1], vec![0, 1]], Some(&res), 0).unwrap();
        assert_eq!(z.factors.len(), 1);
        assert!(z.factors[0].is_kept_cell);
        assert!(same_up_to_sign(&z.product, &res));
        assert!(zero_coefficient_factorization(&f, &[vec![], vec![0]], None, 0).is_err());
        // Dropping an interior point keeps a single cell without its variable.
        let g = SupportFamily::new(1, vec![vec![vec![0], vec![1], vec![2]], vec![vec![0], vec![1]]]).unwrap();
        let res = resultant(&g, 0).unwrap().poly;
        let z = zero_coefficient_factorization(&g, &[vec![0, 2], vec![0, 1]], Some(&res), 0).unwrap();
        assert!(!z.vanishes);
        assert!(z.report.passed(), "{}", z.report);
        assert_eq!(z.factors.len(), 1);
        assert_eq!(z.factors[0].supports[0], vec![vec![0], vec![2]]);
    }

    #[test]
    fn vanishing_coefficients_in_rank_two() {
        let f = deg122_family();
        let res = resultant(&f, 0).unwrap().poly;
        // Drop the constant term of the linear form.
        let z = zero_coefficient_factorization(&f, &[vec![1, 2], (0..6).collect(), (0..6).collect()], Some(&res), 0).unwrap();
        assert!(!z.vanishes);
        assert!(z.report.passed(), "{}", z.report);
        assert!(z.factors.iter().any(|c| c.is_kept_cell));
    }

    #[test]
    fn directional_resultants() {
        let segment = SupportFamily::new(1, vec![vec![vec![0], vec![2]]]).unwrap();
        assert_eq!(directional_resultant(&segment, &[1], 0).unwrap().poly, u(0, 0));
        assert_eq!(directional_resultant(&segment, &[-1], 0).unwrap().poly, u(0, 1));
        let square: Vec<Point> = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        let f = SupportFamily::new(2, vec![square.clone(), square.clone()]).unwrap();
        let r = directional_resultant(&f, &[0, 1], 0).unwrap();
        // Bottom edges give the linear system u_{i,(0,0)} + u_{i,(1,0)} x.
        assert!(same_up_to_sign(&r.poly, &det2()));
        assert_eq!(directional_resultant(&f, &[1, 1], 0).unwrap().poly, SparsePoly::one());
        assert!(directional_resultant(&f, &[0, 2], 0).is_err());
    }

    #[test]
    fn univariate_resultants_match_sylvester() {
        let f = SupportFamily::new(1, vec![vec![vec![0], vec![1], vec![2]], vec![vec![0], vec![1], vec![2], vec![3]]]).unwrap();
        let r = resultant(&f, 0).unwrap();
        let s = sylvester(&(0..3).map(|j| u(0, j)).collect::<Vec<_>>(), &(0..4).map(|j| u(1, j)).collect::<Vec<_>>());
        assert!(same_up_to_sign(&r.poly, &s));
    }

    fn rank1_family() -> impl Strategy<Value = SupportFamily> {
        let support = prop::collection::btree_set((0i64..4).prop_map(|x| vec![x]), 1..4)
            .prop_map(|s| s.into_iter().collect::<Vec<_>>());
        prop::collection::vec(support, 2).prop_map(|s| SupportFamily::new(1, s).unwrap())
    }

    fn rank2_family() -> impl Strategy<Value = SupportFamily> {
        let point = prop::collection::vec(0i64..2, 2);
        let support = prop::collection::btree_set(point, 1..4).prop_map(|s| s.into_iter().collect::<Vec<_>>());
        prop::collection::vec(support, 3).prop_map(|s| SupportFamily::new(2, s).unwrap())
    }

    /// The Sylvester resultant of the supports viewed as dense polynomials
    /// shifted to start at degree zero.
    fn dense_oracle(f: &SupportFamily) -> SparsePoly {
        let coeffs = |i: usize| {
            let s = &f.supports[i];
            let lo = s.iter().map(|a| a[0]).min().unwrap();
            let hi = s.iter().map(|a| a[0]).max().unwrap();
            (lo..=hi)
                .map(|x| match s.iter().position(|a| a[0] == x) {
                    Some(j) => u(i, j),
                    None => SparsePoly::zero(),
                })
                .collect::<Vec<_>>()
        };
        let (a, b) = (coeffs(0), coeffs(1));
        if a.len() == 1 && b.len() == 1 {
            return SparsePoly::one();
        }
        sylvester(&a, &b)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn rank_one_matches_sylvester(f in rank1_family(), seed in 0u64..100) {
            let r = resultant(&f, seed).unwrap();
            let oracle = dense_oracle(&f);
            let (e, fs) = sparse_eliminant(&f, seed).unwrap();
            // The Sylvester determinant of shifted dense forms is the resultant.
            prop_assert!(same_up_to_sign(&r.poly, &oracle.content_primitive().1));
            if !fs.subset.is_empty() {
                prop_assert!(verify_eliminant_power(&r.poly, &e.poly, &fs.exponent));
            }
        }

        #[test]
        fn rank_two_lifting_independence(f in rank2_family(), s1 in 0u64..100, s2 in 100u64..200) {
            let a = resultant(&f, s1).unwrap();
            let b = resultant(&f, s2).unwrap();
            prop_assert!(same_up_to_sign(&a.poly, &b.poly));
        }

        #[test]
        fn rank_two_order_and_init(f in rank2_family(), w in prop::collection::vec(0i64..3, 12), seed in 0u64..50) {
            let res = resultant(&f, seed).unwrap().poly;
            let mut it = w.into_iter().cycle();
            let omega = Lifting { values: f.supports.iter().map(|s| s.iter().map(|_| rat(it.next().unwrap())).collect()).collect() };
            let r = verify_order_and_init(&f, &omega, &res, seed).unwrap();
            prop_assert!(r.passed(), "{}", r);
        }

        #[test]
        fn sufficient_conditions_imply_admissibility(f in rank2_family(), seed in 0u64..100) {
            prop_assume!(f.minkowski_polytope().dim == 2);
            let (chain, data) = auto_data(&f, seed).unwrap();
            prop_assert!(sufficient_admissibility(&chain));
            prop_assert!(is_admissible(&chain, &data).unwrap());
        }

        #[test]
        fn translation_and_permutation_invariance(f in rank2_family(), t in prop::collection::vec(-2i64..3, 2)) {
            let base = resultant(&f, 0).unwrap().poly;
            let mut moved = f.clone();
            for a in moved.supports[1].iter_mut() {
                a[0] += t[0];
                a[1] += t[1];
            }
            prop_assert!(same_up_to_sign(&resultant(&moved, 0).unwrap().poly, &base));
            let swapped = SupportFamily::new(2, vec![f.supports[2].clone(), f.supports[0].clone(), f.supports[1].clone()]).unwrap();
            let back = resultant(&swapped, 0).unwrap().poly.rename(|v| Var::new([2, 0, 1][v.support], v.point));
            prop_assert!(same_up_to_sign(&back, &base));
        }
    }

    #[test]
    fn nontrivial_sublattice_index() {
        let f = SupportFamily::new(1, vec![vec![vec![0], vec![2]], vec![vec![0], vec![4]]]).unwrap();
        let r = resultant(&f, 0).unwrap();
        let (e, fs) = sparse_eliminant(&f, 0).unwrap();
        assert_eq!(fs.exponent, BigInt::from(2));
        assert!(verify_eliminant_power(&r.poly, &e.poly, &fs.exponent));
        assert_eq!(e.partial_degrees, vec![2, 1]);
    }
}
