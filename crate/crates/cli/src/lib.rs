//! Command-line front end: parses problem files, runs one computation and
//! prints its result as text or JSON, optionally with verification reports.
//!
//! Exit codes: `0` success, `1` computation error, `2` verification failure,
//! `3` input error.

pub mod plot;
pub mod problem;
pub mod render;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sparse_resultant::canny_emiris::{
    build_ce_data, build_matrix, check_minor_degrees, choose_delta, principal_minor, verify_init_factorization_minors,
    verify_mixed_cell_count, verify_restriction_evaluation, CEData,
};
use sparse_resultant::error::{Error, Result};
use sparse_resultant::macaulay::{
    hom_degree_report, hom_resultant_in_degree, macaulay_matrices, simplex_family, verify_ce_macaulay_correspondence,
    HomSpec,
};
use sparse_resultant::mixedforms::{mixed_integral_direct, mixed_integral_mv, mixed_volume, mixed_volume_cells, mixed_volume_ie};
use sparse_resultant::num::format_rat;
use sparse_resultant::polytope::normalized_volume;
use sparse_resultant::report::Report;
use sparse_resultant::resultant::{
    admissibility_report, degree_report, fundamental_subfamily, resultant, sparse_eliminant, sparse_resultant,
    verify_eliminant_power, verify_order_and_init, zero_coefficient_factorization, ResultantResult,
};
use sparse_resultant::subdivision::{
    build_incremental_chain, generic_tight_lifting, regular_subdivision, IncrementalChain, Lifting, SupportFamily,
};

use crate::problem::{Problem, RatJson};
use crate::render::{cells_json, matrix_json, matrix_lines, point_text, rat_text, Output, PolyJson, ReportJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "sparse-resultant", version, about = "Exact sparse resultants from Canny-Emiris matrices")]
pub struct Cli {
    /// Seed for automatic liftings and translations.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub output: Format,
    /// Attach verification reports to every computation.
    #[arg(long, global = true)]
    pub check: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regular mixed subdivision induced by the lifting.
    Subdivide { file: PathBuf },
    /// Mixed volume of n supports in rank n.
    MixedVolume { file: PathBuf },
    /// Mixed integral of the lifting over n + 1 supports.
    MixedIntegral { file: PathBuf },
    /// Index set, row content and Canny-Emiris matrix.
    CeMatrix { file: PathBuf },
    /// Sparse resultant as det H / det E.
    Resultant {
        file: PathBuf,
        /// Also write the polynomial as JSON to this path.
        #[arg(long)]
        poly_out: Option<PathBuf>,
    },
    /// Sparse eliminant and the exponent with Res = ±Elim^d.
    Eliminant { file: PathBuf },
    /// Macaulay matrices and the homogeneous resultant.
    Macaulay {
        /// Degrees d_0,…,d_n.
        #[arg(long = "d", value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
        /// Degree of the matrices, at least |d| − n.
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        matrix_only: bool,
        #[arg(long)]
        verify_correspondence: bool,
    },
    /// Order and initial part of the resultant for the file's lifting as weights.
    InitPart { file: PathBuf },
    /// Resultant with the coefficients outside the kept subsets set to zero.
    ZeroEval {
        file: PathBuf,
        /// Kept point indices per support, e.g. `0,1;0;1,2`.
        #[arg(long)]
        keep: String,
    },
    /// Runs the verification suite on the file's data.
    Verify { file: PathBuf },
    /// SVG drawing of a rank-2 mixed subdivision.
    Plot {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) => 3,
        Error::Verification(_) => 2,
        Error::Computation(_) | Error::Internal(_) => 1,
    }
}

/// Parses arguments, runs the command and prints; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            match cli.output {
                Format::Text => print!("{}", out.to_text()),
                Format::Json => println!("{}", out.to_json()),
            }
            if out.passed() {
                0
            } else {
                let failed: Vec<String> = out
                    .reports
                    .iter()
                    .flat_map(|r| r.checks.iter().filter(|c| !c.passed))
                    .map(|c| if c.detail.is_empty() { c.name.clone() } else { format!("{}: {}", c.name, c.detail) })
                    .collect();
                eprintln!("verification failed: {}", failed.join("; "));
                2
            }
        }
        Err(e) => {
            eprintln!("{e}");
            exit_code(&e)
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let seed = cli.seed;
    match &cli.command {
        Command::Subdivide { file } => subdivide(&Problem::read(file)?, seed, cli.check),
        Command::MixedVolume { file } => mixed_volume_cmd(&Problem::read(file)?, seed, cli.check),
        Command::MixedIntegral { file } => mixed_integral_cmd(&Problem::read(file)?, seed, cli.check),
        Command::CeMatrix { file } => ce_matrix(&Problem::read(file)?, seed, cli.check),
        Command::Resultant { file, poly_out } => resultant_cmd(&Problem::read(file)?, seed, cli.check, poly_out.as_deref()),
        Command::Eliminant { file } => eliminant_cmd(&Problem::read(file)?, seed, cli.check),
        Command::Macaulay { degrees, m, matrix_only, verify_correspondence } => {
            macaulay_cmd(degrees, *m, *matrix_only, *verify_correspondence || cli.check, seed)
        }
        Command::InitPart { file } => init_part(&Problem::read(file)?, seed),
        Command::ZeroEval { file, keep } => zero_eval(&Problem::read(file)?, keep, seed),
        Command::Verify { file } => verify(&Problem::read(file)?, seed),
        Command::Plot { file, out } => plot_cmd(&Problem::read(file)?, seed, out.as_deref()),
    }
}

/// The file's lifting, or a seeded generic tight one.
fn lifting_or_generic(p: &Problem, family: &SupportFamily, seed: u64) -> Result<Lifting> {
    match p.lifting(family)? {
        Some(l) => Ok(l),
        None => generic_tight_lifting(family, p.seed(seed)),
    }
}

/// The chain of prefixes of the file's lifting, or a built tight chain, and
/// the Canny-Emiris data with the file's or a chosen translation.
fn chain_and_data(p: &Problem, family: &SupportFamily, seed: u64) -> Result<(IncrementalChain, CEData)> {
    let seed = p.seed(seed);
    let chain = match p.lifting(family)? {
        Some(rho) => IncrementalChain::from_lifting(family, &rho)?,
        None => build_incremental_chain(family, seed)?,
    };
    let delta = match p.delta()? {
        Some(d) => d,
        None => choose_delta(&chain.rho, seed, false)?,
    };
    let data = build_ce_data(family, &chain.rho.lifting, &delta)?;
    Ok((chain, data))
}

fn degree_word(k: usize) -> &'static str {
    match k {
        2 => "bidegree",
        3 => "tridegree",
        _ => "multidegree",
    }
}

fn tuple(v: &[impl ToString]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn resultant_summary(r: &ResultantResult) -> String {
    format!("{} {}, {} terms", degree_word(r.partial_degrees.len()), tuple(&r.partial_degrees), r.poly.len())
}

fn resultant_json(r: &ResultantResult, family: &SupportFamily) -> serde_json::Value {
    json!({
        "partial_degrees": r.partial_degrees,
        "lattice_degree": r.m_degree,
        "provenance": format!("{:?}", r.provenance).to_lowercase(),
        "polynomial": PolyJson::new(&r.poly, family),
    })
}

fn subdivide(p: &Problem, seed: u64, check: bool) -> Result<Output> {
    let family = p.family()?;
    let lifting = lifting_or_generic(p, &family, seed)?;
    let sub = regular_subdivision(&family, &lifting)?;
    let cells = cells_json(&sub);
    let mut out = Output::new("subdivide");
    out.summary.push(format!("{} cells, tight: {}", sub.cells.len(), sub.is_tight()));
    for (k, c) in cells.iter().enumerate() {
        let comps: Vec<String> = c.components.iter().map(|pts| {
            let s: Vec<String> = pts.iter().map(|a| point_text(a)).collect();
            format!("{{{}}}", s.join(" "))
        }).collect();
        out.details.push(format!("cell {k}: {} normal {} dims {} components {}", c.kind, rat_text(&c.normal), tuple(&c.component_dims), comps.join(" + ")));
    }
    out.result = json!({
        "lifting": lifting.values.iter().map(|v| v.iter().map(RatJson::from_rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "tight": sub.is_tight(),
        "cells": cells,
    });
    if check {
        let mut r = Report::new("subdivision");
        let total = sub.total_volume();
        let whole = normalized_volume(&family.minkowski_polytope());
        r.check("cells cover the Minkowski sum", total == whole, format!("cell volume {total}, total {whole}"));
        r.check("tight", sub.is_tight(), "");
        out.reports.push(ReportJson::new(&r));
    }
    Ok(out)
}

fn mixed_volume_cmd(p: &Problem, seed: u64, check: bool) -> Result<Output> {
    let family = p.family()?;
    if family.len() != family.rank {
        return Err(Error::Input(format!("a mixed volume needs {} supports", family.rank)));
    }
    let mv = mixed_volume(family.rank, &family.supports)?;
    let mut out = Output::new("mixed-volume");
    out.summary.push(format!("mixed volume {}", format_rat(&mv)));
    out.result = json!({ "mixed_volume": format_rat(&mv) });
    if check {
        let mut r = Report::new("mixed volume");
        let ie = mixed_volume_ie(&family.polytopes())?;
        let cells = mixed_volume_cells(&family, p.seed(seed))?;
        r.check("inclusion-exclusion", ie == mv, format_rat(&ie));
        r.check("mixed cells", cells == mv, format_rat(&cells));
        out.reports.push(ReportJson::new(&r));
    }
    Ok(out)
}

fn mixed_integral_cmd(p: &Problem, seed: u64, check: bool) -> Result<Output> {
    let family = p.family()?;
    if family.len() != family.rank + 1 {
        return Err(Error::Input(format!("a mixed integral needs {} supports", family.rank + 1)));
    }
    let lifting = lifting_or_generic(p, &family, seed)?;
    let mi = mixed_integral_direct(&family, &lifting)?;
    let mut out = Output::new("mixed-integral");
    out.summary.push(format!("mixed integral {}", format_rat(&mi)));
    out.result = json!({ "mixed_integral": format_rat(&mi) });
    if check {
        let mut r = Report::new("mixed integral");
        let alt = mixed_integral_mv(&family, &lifting)?;
        r.check("mixed volume formula", alt == mi, format_rat(&alt));
        out.reports.push(ReportJson::new(&r));
    }
    Ok(out)
}

fn ce_matrix(p: &Problem, seed: u64, check: bool) -> Result<Output> {
    let family = p.family()?;
    let (_, data) = chain_and_data(p, &family, seed)?;
    let all = data.all();
    let nonmixed = data.nonmixed();
    let h = matrix_json(&build_matrix(&data, &all));
    let e = matrix_json(&build_matrix(&data, &nonmixed));
    let labels: Vec<String> = data.index.iter().map(|b| point_text(&b.point)).collect();
    let mut out = Output::new("ce-matrix");
    let sizes: Vec<usize> = data.partition().iter().map(Vec::len).collect();
    out.summary.push(format!("{} rows, parts {}, {} nonmixed", data.len(), tuple(&sizes), nonmixed.len()));
    for (k, b) in data.index.iter().enumerate() {
        let mark = if b.nonmixed { " nonmixed" } else { "" };
        out.details.push(format!("b {} i {} a {}{mark}", point_text(&b.point), b.support, point_text(data.a(k))));
    }
    out.details.push("H".into());
    out.details.extend(matrix_lines(&h, &labels, &labels));
    let e_labels: Vec<String> = nonmixed.iter().map(|&k| labels[k].clone()).collect();
    out.details.push("E".into());
    out.details.extend(matrix_lines(&e, &e_labels, &e_labels));
    out.result = json!({
        "delta": data.delta.iter().map(RatJson::from_rat).collect::<Vec<_>>(),
        "rows": data.index.iter().enumerate().map(|(k, b)| json!({
            "point": b.point, "support": b.support, "a": data.a(k), "nonmixed": b.nonmixed, "cell": b.cell,
        })).collect::<Vec<_>>(),
        "h": h,
        "nonmixed": nonmixed,
        "e": e,
    });
    if check {
        out.reports.push(ReportJson::new(&verify_mixed_cell_count(&data)?));
        for subset in [all, nonmixed] {
            let minor = principal_minor(&data, &subset)?;
            out.reports.push(ReportJson::new(&check_minor_degrees(&data, &subset, &minor)));
        }
    }
    Ok(out)
}

fn resultant_cmd(p: &Problem, seed: u64, check: bool, poly_out: Option<&Path>) -> Result<Output> {
    let family = p.family()?;
    if family.len() != family.rank + 1 {
        return Err(Error::Input(format!("a resultant needs {} supports", family.rank + 1)));
    }
    let mut out = Output::new("resultant");
    let res = if fundamental_subfamily(&family)?.subset.is_empty() {
        resultant(&family, p.seed(seed))?
    } else {
        let (chain, data) = chain_and_data(p, &family, seed)?;
        if check {
            out.reports.push(ReportJson::new(&admissibility_report(&chain, &data)?));
        }
        sparse_resultant(&data, &chain)?
    };
    if check {
        out.reports.push(ReportJson::new(&degree_report(&family, &res)?));
    }
    out.summary.push(resultant_summary(&res));
    out.details.push(res.poly.to_text(&family));
    out.result = resultant_json(&res, &family);
    if let Some(path) = poly_out {
        let text = serde_json::to_string_pretty(&PolyJson::new(&res.poly, &family)).expect("polynomials serialize");
        std::fs::write(path, text + "\n").map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(out)
}

fn eliminant_cmd(p: &Problem, seed: u64, check: bool) -> Result<Output> {
    let family = p.family()?;
    let seed = p.seed(seed);
    let (elim, fs) = sparse_eliminant(&family, seed)?;
    let mut out = Output::new("eliminant");
    out.summary.push(format!(
        "fundamental subfamily {:?}, exponent {}, {}",
        fs.subset,
        fs.exponent,
        resultant_summary(&elim)
    ));
    out.details.push(elim.poly.to_text(&family));
    out.result = json!({
        "subset": fs.subset,
        "exponent": fs.exponent.to_string(),
        "eliminant": resultant_json(&elim, &family),
    });
    if check {
        let res = resultant(&family, seed)?;
        let mut r = Report::new("eliminant");
        r.check("Res = ±Elim^d", verify_eliminant_power(&res.poly, &elim.poly, &fs.exponent), resultant_summary(&res));
        out.reports.push(ReportJson::new(&r));
    }
    Ok(out)
}

fn monomial_label(c: &[i64]) -> String {
    let parts: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("t{i}") } else { format!("t{i}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn macaulay_cmd(degrees: &[i64], m: Option<i64>, matrix_only: bool, verify: bool, seed: u64) -> Result<Output> {
    let spec = HomSpec::new(degrees, m)?;
    let (mm, nm) = macaulay_matrices(&spec);
    let mut out = Output::new("macaulay");
    let cols: Vec<String> = spec.gamma.iter().map(|c| monomial_label(c)).collect();
    let rows: Vec<String> = spec
        .gamma
        .iter()
        .zip(&spec.part)
        .map(|(c, &i)| {
            let mut q = c.clone();
            q[i] -= spec.degrees[i];
            let prefix = monomial_label(&q);
            if prefix == "1" {
                format!("P{i}")
            } else {
                format!("{prefix} P{i}")
            }
        })
        .collect();
    let m_text = matrix_json(&mm);
    let n_text = matrix_json(&nm);
    out.summary.push(format!("degree {}, {} rows, {} nonreduced", spec.m, spec.gamma.len(), spec.nonreduced.len()));
    out.details.push("M".into());
    out.details.extend(matrix_lines(&m_text, &rows, &cols));
    out.details.push("N".into());
    let n_labels: Vec<String> = spec.nonreduced.iter().map(|&k| rows[k].clone()).collect();
    let n_cols: Vec<String> = spec.nonreduced.iter().map(|&k| cols[k].clone()).collect();
    out.details.extend(matrix_lines(&n_text, &n_labels, &n_cols));
    let mut result = json!({
        "degrees": spec.degrees,
        "m": spec.m,
        "gamma": spec.gamma,
        "parts": spec.part,
        "nonreduced": spec.nonreduced,
        "m_matrix": m_text,
        "n_matrix": n_text,
    });
    if !matrix_only {
        let family = simplex_family(degrees)?;
        let res = hom_resultant_in_degree(degrees, m)?;
        out.summary.push(resultant_summary(&res));
        out.details.push(res.poly.to_text(&family));
        result["resultant"] = resultant_json(&res, &family);
        if verify {
            out.reports.push(ReportJson::new(&hom_degree_report(degrees, &res)));
        }
    }
    if verify {
        out.reports.push(ReportJson::new(&verify_ce_macaulay_correspondence(degrees, None, seed)?));
    }
    out.result = result;
    Ok(out)
}

fn init_part(p: &Problem, seed: u64) -> Result<Output> {
    let family = p.family()?;
    let seed = p.seed(seed);
    let omega = lifting_or_generic(p, &family, seed)?;
    let res = resultant(&family, seed)?;
    let w = sparse_resultant::polyring::WeightVector { values: omega.values.clone() };
    let (order, init) = res.poly.ord_init(&w).ok_or_else(|| Error::Input("the resultant is zero".into()))?;
    let mi = mixed_integral_direct(&family, &omega)?;
    let report = verify_order_and_init(&family, &omega, &res.poly, seed)?;
    let mut out = Output::new("init-part");
    out.summary.push(format!("order {}, mixed integral {}, initial part with {} terms", format_rat(&order), format_rat(&mi), init.len()));
    out.details.push(init.to_text(&family));
    out.result = json!({
        "order": format_rat(&order),
        "mixed_integral": format_rat(&mi),
        "initial_part": PolyJson::new(&init, &family),
    });
    out.reports.push(ReportJson::new(&report));
    Ok(out)
}

fn parse_keep(keep: &str, family: &SupportFamily) -> Result<Vec<Vec<usize>>> {
    let parts: Vec<&str> = keep.split(';').collect();
    if parts.len() != family.len() {
        return Err(Error::Input(format!("--keep needs {} ';'-separated lists", family.len())));
    }
    parts
        .iter()
        .map(|s| {
            s.split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Input(format!("not an index: {t:?}"))))
                .collect()
        })
        .collect()
}

fn zero_eval(p: &Problem, keep: &str, seed: u64) -> Result<Output> {
    let family = p.family()?;
    let seed = p.seed(seed);
    let kept = parse_keep(keep, &family)?;
    let res = resultant(&family, seed)?;
    let z = zero_coefficient_factorization(&family, &kept, Some(&res.poly), seed)?;
    let mut out = Output::new("zero-eval");
    if z.vanishes {
        out.summary.push(format!("mixed integral {}, the evaluation vanishes", format_rat(&z.mixed_integral)));
    } else {
        out.summary.push(format!("mixed integral 0, product of {} cell resultants", z.factors.len()));
        for f in &z.factors {
            let tag = if f.is_kept_cell { " (kept cell)" } else { "" };
            out.details.push(format!("cell {}{tag}: {}", f.cell, f.resultant.to_text(&family)));
        }
    }
    out.result = json!({
        "mixed_integral": format_rat(&z.mixed_integral),
        "vanishes": z.vanishes,
        "factors": z.factors.iter().map(|f| json!({
            "cell": f.cell,
            "kept_cell": f.is_kept_cell,
            "supports": f.supports,
            "resultant": PolyJson::new(&f.resultant, &family),
        })).collect::<Vec<_>>(),
        "evaluation": PolyJson::new(&res.poly.evaluate_zeroing_sets(&kept), &family),
    });
    out.reports.push(ReportJson::new(&z.report));
    Ok(out)
}

fn verify(p: &Problem, seed: u64) -> Result<Output> {
    let family = p.family()?;
    let (chain, data) = chain_and_data(p, &family, seed)?;
    let mut out = Output::new("verify");
    let mut basic = Report::new("data");
    basic.check("tight subdivision", data.subdivision.is_tight(), format!("{} cells", data.subdivision.cells.len()));
    basic.check("incremental chain refines", chain.refinements_hold()?, "");
    out.reports.push(ReportJson::new(&basic));
    out.reports.push(ReportJson::new(&verify_mixed_cell_count(&data)?));
    let all = data.all();
    for (k, sub) in chain.subdivisions.iter().enumerate() {
        // Restrictions are defined only for stages that the data refines.
        if !data.subdivision.refines(sub)? {
            let mut r = Report::new(format!("stage {k}"));
            r.check("refined by the data", false, "");
            out.reports.push(ReportJson::new(&r));
            continue;
        }
        for cell in 0..sub.cells.len() {
            let mut r = verify_restriction_evaluation(&data, sub, cell, &all)?;
            r.title = format!("restriction to stage {k} cell {cell}");
            out.reports.push(ReportJson::new(&r));
        }
        let mut r = verify_init_factorization_minors(&data, &chain.stages[k], &all)?;
        r.title = format!("initial part at stage {k}");
        out.reports.push(ReportJson::new(&r));
    }
    out.reports.push(ReportJson::new(&admissibility_report(&chain, &data)?));
    let h = principal_minor(&data, &all)?;
    let e = principal_minor(&data, &data.nonmixed())?;
    let mut quotient = Report::new("quotient");
    let q = h.exact_divide(&e);
    quotient.check("E divides H", q.is_some(), if q.is_some() { "" } else { "E does not divide H" });
    if let Some(q) = q {
        let (content, poly) = q.content_primitive();
        let res = ResultantResult {
            partial_degrees: (0..family.len()).map(|i| poly.partial_degree(i)).collect(),
            m_degree: poly.m_degree(&family).unwrap_or_default(),
            poly,
            provenance: sparse_resultant::resultant::Provenance::Quotient,
        };
        quotient.check("primitive quotient", num_traits::Signed::abs(&content) == num_traits::One::one(), content.to_string());
        out.summary.push(format!("det H / det E: {}", resultant_summary(&res)));
        out.reports.push(ReportJson::new(&quotient));
        out.reports.push(ReportJson::new(&degree_report(&family, &res)?));
    } else {
        out.reports.push(ReportJson::new(&quotient));
    }
    let passed = out.reports.iter().filter(|r| r.passed).count();
    out.summary.insert(0, format!("{passed} of {} reports passed", out.reports.len()));
    out.result = json!({ "passed": out.passed(), "delta": data.delta.iter().map(RatJson::from_rat).collect::<Vec<_>>() });
    Ok(out)
}

fn plot_cmd(p: &Problem, seed: u64, path: Option<&Path>) -> Result<Output> {
    let family = p.family()?;
    let lifting = lifting_or_generic(p, &family, seed)?;
    let sub = regular_subdivision(&family, &lifting)?;
    let svg = plot::subdivision_svg(&sub)?;
    let mut out = Output::new("plot");
    out.summary.push(format!("{} cells", sub.cells.len()));
    match path {
        Some(path) => {
            std::fs::write(path, &svg).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
            out.summary.push(format!("written to {}", path.display()));
        }
        None => out.details.push(svg.trim_end().to_string()),
    }
    out.result = json!({ "cells": sub.cells.len(), "svg": path.is_none().then_some(svg) });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keep_lists_parse() {
        let f = SupportFamily::new(1, vec![vec![vec![0], vec![1]], vec![vec![0], vec![1]]]).unwrap();
        assert_eq!(parse_keep("0,1;1", &f).unwrap(), vec![vec![0, 1], vec![1]]);
        assert!(parse_keep("0", &f).is_err());
        assert!(parse_keep("a;0", &f).is_err());
    }

    #[test]
    fn monomial_labels() {
        assert_eq!(monomial_label(&[2, 0, 1]), "t0^2*t2");
        assert_eq!(monomial_label(&[0, 0]), "1");
    }

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(exit_code(&Error::Input(String::new())), 3);
        assert_eq!(exit_code(&Error::Verification(String::new())), 2);
        assert_eq!(exit_code(&Error::Computation(String::new())), 1);
        assert_eq!(exit_code(&Error::Internal(String::new())), 1);
    }
}
