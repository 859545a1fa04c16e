//! Serializable views of results and their text rendering.

use num_traits::One;
use serde::{Deserialize, Serialize};
use sparse_resultant::num::Point;
use sparse_resultant::polyring::{Monomial, PolyMatrix, SparsePoly, Var};
use sparse_resultant::report::Report;
use sparse_resultant::subdivision::{CellType, MixedSubdivision, SupportFamily};

use crate::problem::RatJson;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub title: String,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

impl ReportJson {
    pub fn new(r: &Report) -> ReportJson {
        ReportJson {
            title: r.title.clone(),
            passed: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckJson { name: c.name.clone(), passed: c.passed, detail: c.detail.clone() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub support: usize,
    /// Position of the exponent in the support.
    pub index: usize,
    pub point: Point,
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coefficient: String,
    pub factors: Vec<FactorJson>,
}

/// A polynomial in the coefficient variables `u_{i,a}`, terms in decreasing
/// graded lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub num_terms: usize,
    pub text: String,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn new(p: &SparsePoly, family: &SupportFamily) -> PolyJson {
        let terms = p
            .terms()
            .iter()
            .rev()
            .map(|(m, c)| TermJson {
                coefficient: c.to_string(),
                factors: m
                    .factors()
                    .iter()
                    .map(|(v, e)| FactorJson {
                        support: v.support,
                        index: v.point,
                        point: family.supports[v.support][v.point].clone(),
                        exponent: *e,
                    })
                    .collect(),
            })
            .collect();
        PolyJson { num_terms: p.len(), text: p.to_text(family), terms }
    }

    pub fn to_poly(&self) -> Option<SparsePoly> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let c = t.coefficient.parse().ok()?;
                let m = Monomial::from_factors(t.factors.iter().map(|f| (Var::new(f.support, f.index), f.exponent)).collect());
                Some((m, c))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(SparsePoly::from_terms(terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub kind: String,
    pub normal: Vec<RatJson>,
    pub vertices: Vec<Vec<RatJson>>,
    pub component_dims: Vec<usize>,
    pub components: Vec<Vec<Point>>,
}

pub fn cell_kind(sub: &MixedSubdivision, k: usize) -> String {
    match sub.classify_cell(&sub.cells[k]) {
        Ok(CellType::IMixed(i)) => format!("{i}-mixed"),
        Ok(CellType::Mixed) => "mixed".into(),
        Ok(CellType::Nonmixed) => "nonmixed".into(),
        Err(_) => "not tight".into(),
    }
}

pub fn cells_json(sub: &MixedSubdivision) -> Vec<CellJson> {
    sub.cells
        .iter()
        .enumerate()
        .map(|(k, c)| CellJson {
            kind: cell_kind(sub, k),
            normal: c.normal.iter().map(RatJson::from_rat).collect(),
            vertices: c.polytope.vertices.iter().map(|v| v.iter().map(RatJson::from_rat).collect()).collect(),
            component_dims: c.component_dims.clone(),
            components: (0..sub.family.len()).map(|i| c.component_points(&sub.family, i)).collect(),
        })
        .collect()
}

pub fn rat_text(v: &[RatJson]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|r| match r {
            RatJson::Int(n) => n.to_string(),
            RatJson::Text(s) => s.clone(),
        })
        .collect();
    format!("({})", parts.join(","))
}

pub fn point_text(p: &[i64]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Matrix entries as `u[i,j]`, `j` the position of the exponent in `𝒜_i`.
pub fn matrix_json(m: &PolyMatrix) -> Vec<Vec<String>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|e| match e.terms() {
                    [] => "0".to_string(),
                    [(mono, c)] if c.is_one() && mono.degree() == 1 => {
                        let v = mono.factors()[0].0;
                        format!("u[{},{}]", v.support, v.point)
                    }
                    _ => e.to_string(),
                })
                .collect()
        })
        .collect()
}

/// Rows of a matrix as aligned text with optional labels.
pub fn matrix_lines(m: &[Vec<String>], row_labels: &[String], col_labels: &[String]) -> Vec<String> {
    let cols = m.first().map_or(col_labels.len(), |r| r.len());
    let mut width = vec![1; cols];
    for (j, w) in width.iter_mut().enumerate() {
        *w = m.iter().map(|r| r[j].len()).chain(col_labels.get(j).map(|s| s.len())).max().unwrap_or(1);
    }
    let lw = row_labels.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut out = Vec::new();
    if !col_labels.is_empty() {
        let cells: Vec<String> = col_labels.iter().zip(&width).map(|(s, w)| format!("{s:>w$}")).collect();
        out.push(format!("{:lw$}  {}", "", cells.join("  ")));
    }
    for (r, row) in m.iter().enumerate() {
        let cells: Vec<String> = row.iter().zip(&width).map(|(s, w)| format!("{s:>w$}")).collect();
        let label = row_labels.get(r).cloned().unwrap_or_default();
        out.push(format!("{label:lw$}  {}", cells.join("  ")));
    }
    out
}

/// The complete output of one command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Output {
    pub command: String,
    pub summary: Vec<String>,
    pub result: serde_json::Value,
    #[serde(default)]
    pub reports: Vec<ReportJson>,
    /// Human-readable body for text output.
    #[serde(skip)]
    pub details: Vec<String>,
}

impl Output {
    pub fn new(command: &str) -> Output {
        Output {
            command: command.into(),
            summary: Vec::new(),
            result: serde_json::Value::Null,
            reports: Vec::new(),
            details: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.summary {
            out.push_str(s);
            out.push('\n');
        }
        for s in &self.details {
            out.push_str(s);
            out.push('\n');
        }
        for r in &self.reports {
            out.push_str(&r.title);
            out.push('\n');
            for c in &r.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    out.push_str(&format!("  [{mark}] {}\n", c.name));
                } else {
                    out.push_str(&format!("  [{mark}] {}: {}\n", c.name, c.detail));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("outputs serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_round_trip() {
        let f = SupportFamily::new(1, vec![vec![vec![0], vec![1]], vec![vec![0], vec![1]]]).unwrap();
        let u = |i, j| SparsePoly::var(Var::new(i, j));
        let p = u(0, 0).mul(&u(1, 1)).sub(&u(0, 1).mul(&u(1, 0)));
        let j = PolyJson::new(&p, &f);
        assert_eq!(j.num_terms, 2);
        assert_eq!(j.to_poly().unwrap(), p);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(serde_json::from_str::<PolyJson>(&text).unwrap(), j);
    }

    #[test]
    fn matrices_render_as_variable_names() {
        let m = vec![vec![SparsePoly::var(Var::new(1, 2)), SparsePoly::zero()]];
        assert_eq!(matrix_json(&m), vec![vec!["u[1,2]".to_string(), "0".to_string()]]);
        let lines = matrix_lines(&matrix_json(&m), &["r".into()], &["a".into(), "b".into()]);
        assert_eq!(lines.len(), 2);
    }
}
