//! Exact rational polytopes: convex hulls, faces, support functions,
//! Minkowski sums, normalized volumes and lattice points of translates.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::hull::facets_full_dim;
use crate::num::{
    ceil_i64, det_rat, dot, factorial, floor_i64, point_to_rat, rank_rat, row_echelon, solve_in_row_span, sub,
    Point, Rat,
};

/// A facet inequality `⟨normal, x⟩ ≥ offset`, valid on the affine hull, with
/// the indices of the vertices it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Rat>,
    pub offset: Rat,
    pub vertices: Vec<usize>,
}

/// A nonempty convex polytope in `ℚ^ambient`.
///
/// `vertices` are exactly the extreme points, sorted lexicographically.
/// `equations` cut out the affine hull; `facets` are irredundant inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub ambient: usize,
    pub dim: usize,
    pub vertices: Vec<Vec<Rat>>,
    pub facets: Vec<Facet>,
    pub equations: Vec<(Vec<Rat>, Rat)>,
}

/// The face of a polytope minimizing a linear functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub direction: Vec<Rat>,
    pub vertex_subset: Vec<usize>,
}

/// Convex hull of a nonempty point list.
pub fn convex_hull(points: &[Vec<Rat>]) -> Polytope {
    assert!(!points.is_empty(), "convex hull of an empty point set");
    let ambient = points[0].len();
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let p0 = pts[0].clone();

    // Affine frame: independent difference vectors.
    let mut frame: Vec<Vec<Rat>> = Vec::new();
    for p in &pts[1..] {
        let d = sub(p, &p0);
        let mut trial = frame.clone();
        trial.push(d.clone());
        if rank_rat(&trial) == trial.len() {
            frame.push(d);
        }
    }
    let k = frame.len();
    let equations = complement_equations(&frame, &p0, ambient);

    if k == 0 {
        return Polytope { ambient, dim: 0, vertices: vec![p0], facets: Vec::new(), equations };
    }

    // Coordinates in the frame (identity when full-dimensional).
    let local: Vec<Vec<Rat>> = if k == ambient {
        pts.clone()
    } else {
        pts.iter()
            .map(|p| solve_in_row_span(&frame, &sub(p, &p0)).expect("point outside affine hull"))
            .collect()
    };
    let raw = facets_full_dim(&local);

    // Vertices: points whose incident facet normals span the local space.
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); pts.len()];
    for (f, facet) in raw.iter().enumerate() {
        for &i in &facet.incident {
            incident[i].push(f);
        }
    }
    let is_vertex: Vec<bool> = (0..pts.len())
        .map(|i| {
            let normals: Vec<Vec<Rat>> = incident[i]
                .iter()
                .map(|&f| raw[f].normal.iter().map(|x| Rat::from_integer(x.clone())).collect())
                .collect();
            rank_rat(&normals) == k
        })
        .collect();
    let mut new_index = vec![usize::MAX; pts.len()];
    let mut vertices = Vec::new();
    for i in 0..pts.len() {
        if is_vertex[i] {
            new_index[i] = vertices.len();
            vertices.push(pts[i].clone());
        }
    }

    let to_ambient = AmbientMap::new(&frame, ambient);
    let facets = raw
        .iter()
        .map(|f| {
            let w: Vec<Rat> = f.normal.iter().map(|x| Rat::from_integer(x.clone())).collect();
            let c = Rat::from_integer(f.offset.clone());
            let (normal, offset) = if k == ambient { (w, c) } else { to_ambient.map(&w, &c, &p0) };
            let mut vs: Vec<usize> = f.incident.iter().filter(|&&i| is_vertex[i]).map(|&i| new_index[i]).collect();
            vs.sort_unstable();
            Facet { normal, offset, vertices: vs }
        })
        .collect();
    Polytope { ambient, dim: k, vertices, facets, equations }
}

/// Maps an inequality in frame coordinates to ambient coordinates.
struct AmbientMap {
    pivots: Vec<usize>,
    q: Vec<Vec<Rat>>,
}

impl AmbientMap {
    fn new(frame: &[Vec<Rat>], ambient: usize) -> Self {
        // Pivot columns where the frame restricts to an invertible block.
        let transposed: Vec<Vec<Rat>> = (0..ambient).map(|c| frame.iter().map(|r| r[c].clone()).collect()).collect();
        let mut pivots = Vec::new();
        let mut chosen: Vec<Vec<Rat>> = Vec::new();
        for (c, col) in transposed.iter().enumerate() {
            let mut trial = chosen.clone();
            trial.push(col.clone());
            if rank_rat(&trial) == trial.len() {
                chosen.push(col.clone());
                pivots.push(c);
            }
        }
        let q: Vec<Vec<Rat>> = frame.iter().map(|r| pivots.iter().map(|&c| r[c].clone()).collect()).collect();
        AmbientMap { pivots, q }
    }

    fn map(&self, w: &[Rat], c: &Rat, p0: &[Rat]) -> (Vec<Rat>, Rat) {
        // x − p0 restricted to the pivots equals qᵀλ, so ⟨w, λ⟩ = ⟨q⁻¹w, (x − p0)_J⟩.
        let qt: Vec<Vec<Rat>> = (0..self.q.len()).map(|c| self.q.iter().map(|r| r[c].clone()).collect()).collect();
        let y = solve_in_row_span(&qt, w).expect("invertible frame block");
        let mut normal = vec![Rat::zero(); p0.len()];
        for (j, &c) in self.pivots.iter().enumerate() {
            normal[c] = y[j].clone();
        }
        let offset = c + dot(&normal, p0);
        (normal, offset)
    }
}

fn complement_equations(frame: &[Vec<Rat>], p0: &[Rat], ambient: usize) -> Vec<(Vec<Rat>, Rat)> {
    let echelon = row_echelon(frame);
    let pivot_cols: Vec<usize> = echelon.iter().map(|(c, _)| *c).collect();
    (0..ambient)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![Rat::zero(); ambient];
            v[free] = Rat::from_integer(1.into());
            for (pc, row) in &echelon {
                v[*pc] = -row[free].clone();
            }
            let off = dot(&v, p0);
            (v, off)
        })
        .collect()
}

impl Polytope {
    pub fn from_points(points: &[Point]) -> Polytope {
        convex_hull(&points.iter().map(|p| point_to_rat(p)).collect::<Vec<_>>())
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|(e, c)| dot(e, x) == *c) && self.facets.iter().all(|f| dot(&f.normal, x) >= f.offset)
    }

    /// Membership in the relative interior.
    pub fn contains_relative_interior(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|(e, c)| dot(e, x) == *c) && self.facets.iter().all(|f| dot(&f.normal, x) > f.offset)
    }

    pub fn facet_polytope(&self, f: &Facet) -> Polytope {
        convex_hull(&f.vertices.iter().map(|&i| self.vertices[i].clone()).collect::<Vec<_>>())
    }

    pub fn translate(&self, t: &[Rat]) -> Polytope {
        convex_hull(&self.vertices.iter().map(|v| crate::num::add(v, t)).collect::<Vec<_>>())
    }

    pub fn contains_polytope(&self, other: &Polytope) -> bool {
        other.vertices.iter().all(|v| self.contains(v))
    }
}

/// `h_P(v) = min_{x ∈ P} ⟨v, x⟩`.
pub fn support_value(p: &Polytope, v: &[Rat]) -> Rat {
    p.vertices.iter().map(|x| dot(v, x)).min().expect("nonempty polytope")
}

/// The vertices of `p` attaining `support_value(p, v)`.
pub fn face_in_direction(p: &Polytope, v: &[Rat]) -> Face {
    let h = support_value(p, v);
    let vertex_subset = (0..p.vertices.len()).filter(|&i| dot(v, &p.vertices[i]) == h).collect();
    Face { direction: v.to_vec(), vertex_subset }
}

pub fn minkowski_sum(ps: &[Polytope]) -> Polytope {
    let ambient = ps.first().map_or(0, |p| p.ambient);
    let mut acc = vec![vec![Rat::zero(); ambient]];
    for p in ps {
        assert_eq!(p.ambient, ambient, "Minkowski sum of polytopes in different spaces");
        let mut sums = Vec::with_capacity(acc.len() * p.vertices.len());
        for a in &acc {
            for v in &p.vertices {
                sums.push(crate::num::add(a, v));
            }
        }
        acc = convex_hull(&sums).vertices;
    }
    convex_hull(&acc)
}

/// Simplices (as vertex index lists) of a pulling triangulation from the
/// lexicographically smallest vertex, applied recursively on facets.
pub fn triangulate(p: &Polytope) -> Vec<Vec<usize>> {
    if p.dim == 0 {
        return vec![vec![0]];
    }
    let apex = 0; // vertices are sorted, so index 0 is the lex-min vertex
    let index: HashMap<&Vec<Rat>, usize> = p.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut out = Vec::new();
    for f in &p.facets {
        if f.vertices.contains(&apex) {
            continue;
        }
        let fp = p.facet_polytope(f);
        for simplex in triangulate(&fp) {
            let mut s: Vec<usize> = simplex.iter().map(|&i| index[&fp.vertices[i]]).collect();
            s.push(apex);
            out.push(s);
        }
    }
    out
}

/// Euclidean volume of a simplex in `ℚ^n` given by `n + 1` vertices,
/// normalized so that the unit cube has volume 1.
pub fn simplex_volume(vertices: &[&Vec<Rat>]) -> Rat {
    let n = vertices.len() - 1;
    let rows: Vec<Vec<Rat>> = vertices[1..].iter().map(|v| sub(v, vertices[0])).collect();
    det_rat(&rows).abs() / Rat::from_integer(factorial(n))
}

/// Volume with respect to the lattice `ℤ^n` (covolume 1); zero when `p` is
/// not full-dimensional.
pub fn normalized_volume(p: &Polytope) -> Rat {
    if p.dim < p.ambient {
        return Rat::zero();
    }
    if p.ambient == 0 {
        return Rat::from_integer(1.into());
    }
    triangulate(p)
        .iter()
        .map(|s| simplex_volume(&s.iter().map(|&i| &p.vertices[i]).collect::<Vec<_>>()))
        .fold(Rat::zero(), |a, b| a + b)
}

/// Integer points of `p + delta`, in lexicographic order.
pub fn lattice_points_in_translate(p: &Polytope, delta: &[Rat]) -> Vec<Point> {
    let n = p.ambient;
    let shifted: Vec<Vec<Rat>> = p.vertices.iter().map(|v| crate::num::add(v, delta)).collect();
    let lo: Vec<i64> = (0..n).map(|c| ceil_i64(shifted.iter().map(|v| &v[c]).min().unwrap())).collect();
    let hi: Vec<i64> = (0..n).map(|c| floor_i64(shifted.iter().map(|v| &v[c]).max().unwrap())).collect();
    let mut out = Vec::new();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return out;
    }
    let mut cur = lo.clone();
    loop {
        let x: Vec<Rat> = cur.iter().zip(delta).map(|(&c, d)| Rat::from_integer(c.into()) - d).collect();
        if p.contains(&x) {
            out.push(cur.clone());
        }
        // Odometer increment, last coordinate fastest.
        let mut c = n;
        loop {
            if c == 0 {
                return out;
            }
            c -= 1;
            if cur[c] < hi[c] {
                cur[c] += 1;
                for j in c + 1..n {
                    cur[j] = lo[j];
                }
                break;
            }
        }
    }
}

/// Whether the translate `f + delta` contains an integer point.
pub fn facet_contains_lattice_point(f: &Polytope, delta: &[Rat]) -> bool {
    !lattice_points_in_translate(f, delta).is_empty()
}
