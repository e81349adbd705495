use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use assoc_core::checks::{parallel_facet_pairs, sphericity_check, verify_associahedron};
use assoc_core::exact::{convex_hull, format_rational, parse_rational, Polytope, Rational};
use assoc_core::multi::{
    capoyleas_pach, cyclic_polytope_boundary_fvector, enumerate_k_triangulations, f_vector,
    flip_graph, jonsson_count, purity_and_dimension_check, MAX_FACETS,
};
use assoc_core::realizations::{
    cluster_associahedron, minkowski_associahedron, parabola_config, random_convex_polygon,
    secondary_polytope, triangle_with_midpoints, AffineMap2, ClusterParams, MinkowskiParams,
    PointConfig2D,
};
use assoc_core::Error;
use clap::{ArgGroup, Args, ValueEnum};
use serde_json::{json, Value};

use crate::formats::{
    pair_values, polytope_file, rational_rows, read_json, text, vector, write_json, ConfigFile,
    ParamsFile, PolytopeFile,
};
use crate::report::Report;
use crate::CliError;

/// Largest point configuration handled without `--allow-large`.
const MAX_SECONDARY_POINTS: usize = 9;
/// Largest polygon for the all-segments Capoyleas-Pach search.
const MAX_CAPOYLEAS_N: usize = 8;
/// Ground-set capacity of the crossing enumeration.
const MAX_SEGMENTS: usize = 128;

const KNOWN_FVECTORS: &[((usize, usize), &[u64])] = &[
    ((6, 2), &[3, 3]),
    ((9, 2), &[18, 153, 732, 2115, 3762, 4026, 2376, 594]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckSpec {
    Sphere,
    Parallel(usize),
    Assoc,
}

impl FromStr for CheckSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sphere" => Ok(CheckSpec::Sphere),
            "assoc" => Ok(CheckSpec::Assoc),
            _ => s
                .strip_prefix("parallel=")
                .and_then(|k| k.parse().ok())
                .map(CheckSpec::Parallel)
                .ok_or_else(|| format!("unknown check {s:?}; use sphere, assoc or parallel=K")),
        }
    }
}

impl fmt::Display for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckSpec::Sphere => write!(f, "sphere"),
            CheckSpec::Assoc => write!(f, "assoc"),
            CheckSpec::Parallel(k) => write!(f, "parallel={k}"),
        }
    }
}

#[derive(Args, Debug)]
#[command(group(
    ArgGroup::new("source")
        .required(true)
        .args(["parabola", "ngon", "triangle_midpoints", "config"])
))]
pub struct SecondaryArgs {
    /// Equally spaced points on the parabola: m=<points> [a=<start>] [b=<step>]
    #[arg(long, num_args = 1..=3, value_name = "KEY=VALUE")]
    parabola: Option<Vec<String>>,
    /// Random strictly convex polygon with this many vertices
    #[arg(long, value_name = "M")]
    ngon: Option<usize>,
    /// Seed for --ngon
    #[arg(long, value_name = "SEED", default_value_t = 0)]
    random_seed: u64,
    /// Triangle (0,0),(2,0),(0,2) with its three edge midpoints
    #[arg(long)]
    triangle_midpoints: bool,
    /// Point configuration file
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Apply the random affine map with this seed to the points
    #[arg(long, value_name = "SEED")]
    affine: Option<u64>,
    /// sphere, assoc or parallel=K; repeatable or comma separated
    #[arg(long = "check", value_name = "CHECK", value_delimiter = ',')]
    checks: Vec<CheckSpec>,
    /// Write the polytope here
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Allow more than 9 points
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args, Debug)]
pub struct ClusterArgs {
    #[arg(long)]
    n: usize,
    /// Parameter file; shipped defaults exist for n <= 5
    #[arg(long, value_name = "FILE")]
    params: Option<PathBuf>,
    /// Checks to run (default assoc)
    #[arg(long = "check", value_name = "CHECK", value_delimiter = ',')]
    checks: Vec<CheckSpec>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MinkowskiArgs {
    #[arg(long)]
    n: usize,
    /// all=<value> or a parameter file
    #[arg(long, value_name = "all=V|FILE", default_value = "all=1")]
    alpha: String,
    /// Checks to run (default assoc)
    #[arg(long = "check", value_name = "CHECK", value_delimiter = ',')]
    checks: Vec<CheckSpec>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MultiTask {
    Fvector,
    Facets,
    Flipgraph,
    Jonsson,
    Capoyleas,
    CyclicCompare,
}

#[derive(Args, Debug)]
pub struct MultiArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(value_enum)]
    task: MultiTask,
    /// Lift the 10,000-facet guard
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Polytope file; facets are recomputed from the vertices
    file: PathBuf,
    /// Associahedron dimension to test against (default: the polytope's)
    #[arg(long)]
    n: Option<usize>,
    /// Checks to run (default assoc)
    #[arg(long = "check", value_name = "CHECK", value_delimiter = ',')]
    checks: Vec<CheckSpec>,
}

fn input(e: Error) -> CliError {
    CliError::Input(e.to_string())
}

fn check_list(checks: &[CheckSpec]) -> Value {
    Value::Array(checks.iter().map(|c| Value::String(c.to_string())).collect())
}

/// Shared analysis of a realization: counts, verification, sphericity and
/// opposite facets, plus the requested checks.
fn analyze(report: &mut Report, p: &Polytope, n: usize, checks: &[CheckSpec]) {
    let v = verify_associahedron(p, n);
    let (spherical, radius) = sphericity_check(p);
    let parallel = parallel_facet_pairs(p);
    report.result("dimension", p.intrinsic_dim);
    report.result("vertex_count", p.vertex_count());
    report.result("facet_count", p.facet_count());
    report.result(
        "associahedron",
        json!({
            "is_associahedron": v.is_associahedron,
            "is_simple": v.is_simple,
            "failure_reason": v.failure_reason,
            "facet_diagonals": v.incidence_isomorphism
                .as_ref()
                .map(|m| m.iter().map(|d| d.to_string()).collect::<Vec<_>>()),
        }),
    );
    report.result(
        "sphericity",
        json!({ "spherical": spherical, "radius_squared": radius.as_ref().map(text) }),
    );
    let pairs: Vec<Value> = parallel
        .pairs
        .iter()
        .map(|&(i, j)| json!({ "facets": [i, j], "normal": vector(&p.facets[i].normal) }))
        .collect();
    report.result("parallel_pairs", json!({ "count": parallel.count, "pairs": pairs }));

    for c in checks {
        match *c {
            CheckSpec::Assoc => {
                let detail = match &v.failure_reason {
                    None => format!("combinatorially the {n}-dimensional associahedron"),
                    Some(r) => r.clone(),
                };
                report.check("assoc", v.is_associahedron, detail);
            }
            CheckSpec::Sphere => {
                let detail = match &radius {
                    Some(r) => format!("all vertices have squared norm {}", format_rational(r)),
                    None => "vertex norms differ".into(),
                };
                report.check("sphere", spherical, detail);
            }
            CheckSpec::Parallel(k) => {
                let detail = format!("{} antiparallel facet pairs, expected {k}", parallel.count);
                report.check(&c.to_string(), parallel.count == k, detail);
            }
        }
    }
}

fn write_out(out: &Option<PathBuf>, p: &Polytope, report: &mut Report) -> Result<(), CliError> {
    if let Some(path) = out {
        write_json(path, &polytope_file(p))?;
        report.input("out", path.display().to_string());
    }
    Ok(())
}

fn parse_kv(items: &[String]) -> Result<(usize, Rational, Rational), CliError> {
    let (mut m, mut a, mut b) = (None, Rational::from_integer(0.into()), Rational::from_integer(1.into()));
    for item in items {
        let bad = || CliError::Input(format!("bad --parabola item {item:?}"));
        let (key, value) = item.split_once('=').ok_or_else(bad)?;
        match key {
            "m" => m = Some(value.parse().map_err(|_| bad())?),
            "a" => a = parse_rational(value).ok_or_else(bad)?,
            "b" => b = parse_rational(value).ok_or_else(bad)?,
            _ => return Err(bad()),
        }
    }
    let m = m.ok_or_else(|| CliError::Input("--parabola needs m=<points>".into()))?;
    Ok((m, a, b))
}

/// Applies `map`, restoring counterclockwise order if it reverses orientation.
fn transform(q: &PointConfig2D, map: &AffineMap2) -> Result<PointConfig2D, CliError> {
    let mut pts: Vec<_> = q.points().iter().map(|p| map.apply(p)).collect();
    if map.determinant() < Rational::from_integer(0.into()) {
        pts.reverse();
    }
    PointConfig2D::new(pts).map_err(input)
}

pub fn secondary(args: &SecondaryArgs) -> Result<Report, CliError> {
    let mut report = Report::new("secondary");
    let map = args.affine.map(AffineMap2::from_seed);
    let size_guard = |m: usize| {
        if m > MAX_SECONDARY_POINTS && !args.allow_large {
            Err(CliError::TooLarge(format!(
                "{m} points exceed {MAX_SECONDARY_POINTS}; pass --allow-large"
            )))
        } else {
            Ok(())
        }
    };
    let q = if let Some(items) = &args.parabola {
        let (m, a, b) = parse_kv(items)?;
        size_guard(m)?;
        report.input("source", "parabola");
        report.input("parabola", json!({ "m": m, "a": text(&a), "b": text(&b) }));
        parabola_config(m, &a, &b, map.as_ref()).map_err(input)?
    } else {
        let base = if let Some(m) = args.ngon {
            size_guard(m)?;
            report.input("source", "ngon");
            report.input("ngon", m);
            report.input("random_seed", args.random_seed);
            random_convex_polygon(m, args.random_seed).map_err(input)?
        } else if args.triangle_midpoints {
            report.input("source", "triangle-midpoints");
            triangle_with_midpoints()
        } else {
            let path = args.config.as_ref().expect("source group is required");
            let file: ConfigFile = read_json(path)?;
            report.input("source", "config");
            report.input("config", path.display().to_string());
            let q = PointConfig2D::new(rational_rows(&file.points)?).map_err(input)?;
            size_guard(q.len())?;
            q
        };
        match &map {
            Some(map) => transform(&base, map)?,
            None => base,
        }
    };
    if let Some(seed) = args.affine {
        report.input("affine_seed", seed);
    }
    report.input("checks", check_list(&args.checks));

    let p = secondary_polytope(&q).map_err(input)?;
    report.result(
        "points",
        Value::Array(q.points().iter().map(vector).collect()),
    );
    report.result("triangulation_count", p.vertex_count());
    analyze(&mut report, &p, q.len() - 3, &args.checks);
    write_out(&args.out, &p, &mut report)?;
    Ok(report)
}

fn or_assoc(checks: &[CheckSpec]) -> Vec<CheckSpec> {
    if checks.is_empty() {
        vec![CheckSpec::Assoc]
    } else {
        checks.to_vec()
    }
}

pub fn cluster(args: &ClusterArgs) -> Result<Report, CliError> {
    let mut report = Report::new("cluster");
    report.input("n", args.n);
    let params = match &args.params {
        Some(path) => {
            let file: ParamsFile = read_json(path)?;
            if file.n.is_some_and(|n| n != args.n) {
                return Err(CliError::Input(format!("{} is for n = {}", path.display(), file.n.unwrap())));
            }
            report.input("params", path.display().to_string());
            ClusterParams::new(args.n, pair_values(&file.values)?).map_err(input)?
        }
        None => {
            report.input("params", "default");
            ClusterParams::default_for(args.n).map_err(input)?
        }
    };
    report.input(
        "f",
        params
            .values()
            .iter()
            .map(|((i, j), v)| (format!("{i},{j}"), text(v)))
            .collect::<serde_json::Map<_, _>>(),
    );
    let checks = or_assoc(&args.checks);
    report.input("checks", check_list(&checks));
    let p = match cluster_associahedron(&params) {
        Ok(p) => p,
        Err(e @ (Error::UnsuitableParameters { .. } | Error::NotAPolytope)) => {
            report.check("realization", false, e.to_string());
            return Ok(report);
        }
        Err(e) => return Err(input(e)),
    };
    analyze(&mut report, &p, args.n, &checks);
    write_out(&args.out, &p, &mut report)?;
    Ok(report)
}

pub fn minkowski(args: &MinkowskiArgs) -> Result<Report, CliError> {
    let mut report = Report::new("minkowski");
    report.input("n", args.n);
    let params = match args.alpha.strip_prefix("all=") {
        Some(v) => {
            let v = parse_rational(v)
                .ok_or_else(|| CliError::Input(format!("bad --alpha value {v:?}")))?;
            MinkowskiParams::uniform(args.n, v).map_err(input)?
        }
        None => {
            let path = PathBuf::from(&args.alpha);
            let file: ParamsFile = read_json(&path)?;
            if file.n.is_some_and(|n| n != args.n) {
                return Err(CliError::Input(format!("{} is for n = {}", path.display(), file.n.unwrap())));
            }
            MinkowskiParams::new(args.n, pair_values(&file.values)?).map_err(input)?
        }
    };
    report.input("alpha_source", args.alpha.clone());
    report.input(
        "alpha",
        params
            .alpha()
            .iter()
            .map(|((i, j), v)| (format!("{i},{j}"), text(v)))
            .collect::<serde_json::Map<_, _>>(),
    );
    let checks = or_assoc(&args.checks);
    report.input("checks", check_list(&checks));
    let p = minkowski_associahedron(&params).map_err(input)?;
    analyze(&mut report, &p, args.n, &checks);
    write_out(&args.out, &p, &mut report)?;
    Ok(report)
}

pub fn verify(args: &VerifyArgs) -> Result<Report, CliError> {
    let mut report = Report::new("verify");
    let file: PolytopeFile = read_json(&args.file)?;
    let p = convex_hull(&rational_rows(&file.vertices)?).map_err(input)?;
    let n = args.n.unwrap_or(p.intrinsic_dim);
    let checks = or_assoc(&args.checks);
    report.input("file", args.file.display().to_string());
    report.input("n", n);
    report.input("checks", check_list(&checks));
    if file.vertices.len() != p.vertex_count() {
        report.result("non_vertex_points", file.vertices.len() - p.vertex_count());
    }
    analyze(&mut report, &p, n, &checks);
    Ok(report)
}

fn multi_guard(args: &MultiArgs) -> Result<(), CliError> {
    let (n, k) = (args.n, args.k);
    if k < 1 || n < 2 * k + 1 {
        return Err(CliError::Input(format!(
            "need k >= 1 and n >= 2k+1, got n = {n}, k = {k}"
        )));
    }
    if let MultiTask::Capoyleas = args.task {
        if n * (n - 1) / 2 > MAX_SEGMENTS || (n > MAX_CAPOYLEAS_N && !args.allow_large) {
            return Err(CliError::TooLarge(format!(
                "all-segment search on the {n}-gon; limit is n = {MAX_CAPOYLEAS_N}"
            )));
        }
        return Ok(());
    }
    if n * (n - 2 * k - 1) / 2 > MAX_SEGMENTS {
        return Err(CliError::TooLarge(format!(
            "Δ({n},{k}) has more than {MAX_SEGMENTS} relevant diagonals"
        )));
    }
    let facets = jonsson_count(n, k).map_err(input)?;
    if facets > MAX_FACETS && !args.allow_large {
        return Err(CliError::TooLarge(format!(
            "Δ({n},{k}) has {facets} facets, above {MAX_FACETS}; pass --allow-large"
        )));
    }
    Ok(())
}

pub fn multi(args: &MultiArgs) -> Result<Report, CliError> {
    multi_guard(args)?;
    let (n, k) = (args.n, args.k);
    let task = args.task.to_possible_value().expect("no skipped variants");
    let mut report = Report::new("multi");
    report.input("n", n);
    report.input("k", k);
    report.input("task", task.get_name());
    let facet_size = k * (n - 2 * k - 1);
    match args.task {
        MultiTask::Fvector => {
            let fv = f_vector(n, k).map_err(input)?;
            let facets = fv.0.last().copied().unwrap_or(1) as u128;
            report.result("f_vector", fv.0.clone());
            report.result("dimension", fv.dimension());
            let det = jonsson_count(n, k).map_err(input)?;
            report.check(
                "facet count matches determinant",
                facets == det,
                format!("{facets} facets, determinant {det}"),
            );
            if let Some((_, known)) = KNOWN_FVECTORS.iter().find(|(key, _)| *key == (n, k)) {
                report.check(
                    "known f-vector",
                    fv.0 == *known,
                    format!("computed {fv}, expected {known:?}"),
                );
            }
        }
        MultiTask::Facets => {
            let facets = enumerate_k_triangulations(n, k).map_err(input)?;
            let (pure, dim) = purity_and_dimension_check(n, k).map_err(input)?;
            report.result("facet_count", facets.len());
            report.result("facet_size", facet_size);
            report.result("dimension", dim);
            report.result(
                "facets",
                facets.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            );
            report.check("pure", pure, format!("every facet has {facet_size} diagonals"));
            let det = jonsson_count(n, k).map_err(input)?;
            report.check(
                "facet count matches determinant",
                facets.len() as u128 == det,
                format!("{} facets, determinant {det}", facets.len()),
            );
        }
        MultiTask::Flipgraph => {
            let limit = if args.allow_large { u128::MAX } else { MAX_FACETS };
            let g = flip_graph(n, k, limit).map_err(input)?;
            let deg = g.degrees();
            report.result("nodes", g.nodes.len());
            report.result("edges", g.edges.len());
            report.result("min_degree", deg.iter().min().copied().unwrap_or(0));
            report.result("max_degree", deg.iter().max().copied().unwrap_or(0));
            report.result("every_diagonal_flippable", g.every_diagonal_flippable);
            report.check(
                "connected",
                g.connected,
                format!("{} nodes, {} edges", g.nodes.len(), g.edges.len()),
            );
        }
        MultiTask::Jonsson => {
            let det = jonsson_count(n, k).map_err(input)?;
            let count = enumerate_k_triangulations(n, k).map_err(input)?.len();
            report.result("determinant", det.to_string());
            report.result("enumerated", count);
            report.check(
                "determinant equals enumeration",
                det == count as u128,
                format!("determinant {det}, enumerated {count}"),
            );
        }
        MultiTask::Capoyleas => {
            let r = capoyleas_pach(n, k).map_err(input)?;
            report.result("expected_size", r.expected_size);
            report.result("sizes", r.sizes.clone());
            report.result("maximal_sets", r.maximal_sets);
            report.check(
                "maximal sets have size k(2n-2k-1)",
                r.holds,
                format!("sizes {:?}, expected {}", r.sizes, r.expected_size),
            );
        }
        MultiTask::CyclicCompare => {
            if n != 2 * k + 3 {
                return Err(CliError::Input(format!(
                    "cyclic-compare needs n = 2k+3, got n = {n}, k = {k}"
                )));
            }
            let fv = f_vector(n, k).map_err(input)?;
            let cyc = cyclic_polytope_boundary_fvector(k).map_err(input)?;
            report.result("f_vector", fv.0.clone());
            report.result("cyclic_boundary_f_vector", cyc.0.clone());
            report.check(
                "equals cyclic polytope boundary",
                fv == cyc,
                format!("Δ({n},{k}) {fv}, C({n},{}) boundary {cyc}", 2 * k),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_specs_parse() {
        assert_eq!("sphere".parse(), Ok(CheckSpec::Sphere));
        assert_eq!("parallel=3".parse(), Ok(CheckSpec::Parallel(3)));
        assert_eq!("assoc".parse(), Ok(CheckSpec::Assoc));
        assert!("parallel=x".parse::<CheckSpec>().is_err());
        assert!("round".parse::<CheckSpec>().is_err());
        assert_eq!(CheckSpec::Parallel(2).to_string(), "parallel=2");
    }

    #[test]
    fn parabola_items() {
        let items: Vec<String> = ["m=5", "a=1/2", "b=-2"].iter().map(|s| s.to_string()).collect();
        let (m, a, b) = parse_kv(&items).unwrap();
        assert_eq!((m, format_rational(&a), format_rational(&b)), (5, "1/2".into(), "-2".into()));
        assert!(parse_kv(&["a=1".to_string()]).is_err());
        assert!(parse_kv(&["m=4".to_string(), "c=1".to_string()]).is_err());
    }
}
