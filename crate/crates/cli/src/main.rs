mod args;
mod settings;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use subspace_bounds::bounds::{compare, BoundKind};
use subspace_bounds::exact::{format_rational, parse_rational};
use subspace_bounds::geometry::{distance_spectrum, generate_configuration, Configuration, FrameFile, Metric};
use subspace_bounds::hilbert::{
    fs_leading_coefficient, hilbert_even_sum, hilbert_value_with, HilbertMethod, HilbertSeries,
};
use subspace_bounds::leading::{d_kn, LeadingTermReport};
use subspace_bounds::partition::Partition;
use subspace_bounds::polymethod::lemma51::{ideal_membership_failures, lemma51_report};
use subspace_bounds::polymethod::sampled::sampled_hilbert_rank_with;
use subspace_bounds::polymethod::{
    chordal_eval_matrix, equiangular_eval_matrix, fs_eval_matrix, verify_prop31, Construction, VerifyOptions,
};
use subspace_bounds::serde_util::bigint_value;
use subspace_bounds::symfun::{jack, jack_expansion_coeffs_with, JackNormalization};
use subspace_bounds::Error;

use args::*;
use settings::{resolve, RunManifest, Settings};

enum Output {
    Plain(String),
    Json(Value),
}

struct Ctx {
    settings: Settings,
    with_manifest: bool,
}

impl Ctx {
    fn json(&self, mut v: Value, seeds: Vec<u64>) -> Output {
        if self.with_manifest {
            if let Value::Object(map) = &mut v {
                let manifest = RunManifest::new(&self.settings, seeds);
                map.insert("manifest".into(), serde_json::to_value(manifest).expect("manifest serializes"));
            }
        }
        Output::Json(v)
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::InvalidInput(format!("{}: {e}", path.display()))
}

fn bound_kind(b: BoundName) -> BoundKind {
    match b {
        BoundName::Fs => BoundKind::Fs,
        BoundName::Lines => BoundKind::Lines,
        BoundName::Equiangular => BoundKind::Equiangular,
        BoundName::ChordalLeading => BoundKind::ChordalLeading,
    }
}

fn norm(n: NormArg) -> JackNormalization {
    match n {
        NormArg::P => JackNormalization::P,
        NormArg::J => JackNormalization::J,
    }
}

/// `a..b` or `a..=b` (inclusive), `a,b,c`, or `a`.
fn parse_range(s: &str) -> Result<Vec<u32>, Error> {
    let bad = || Error::InvalidInput(format!("bad range {s:?}"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(num).collect()
}

fn run_bound(ctx: &Ctx, a: &BoundArgs) -> Result<Output, Error> {
    let report = compare(bound_kind(a.which), a.k, a.n, a.s)?;
    if !(a.json || a.baseline) {
        return Ok(Output::Plain(report.value.to_string()));
    }
    let mut v = to_value(&report);
    let map = v.as_object_mut().expect("report is an object");
    let baseline = map.remove("baseline");
    let improvement = map.remove("improvement");
    if a.baseline {
        if let Some(Value::Object(b)) = baseline {
            map.insert("baseline".into(), b["value"].clone());
            map.insert("baseline_name".into(), b["name"].clone());
            map.insert("improvement".into(), improvement.unwrap_or(Value::Null));
        } else {
            map.insert("baseline".into(), Value::Null);
        }
    }
    Ok(ctx.json(v, vec![]))
}

fn csv_field(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run_table(ctx: &Ctx, a: &TableArgs) -> Result<Output, Error> {
    let (ks, ns, ss) = (parse_range(&a.k)?, parse_range(&a.n)?, parse_range(&a.s)?);
    let mut cells = Vec::with_capacity(ks.len() * ns.len() * ss.len());
    for &k in &ks {
        for &n in &ns {
            for &s in &ss {
                cells.push((k, n, s));
            }
        }
    }
    let kind = bound_kind(a.which);
    let workers = a.workers.or(ctx.settings.workers);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        builder = builder.num_threads(w.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidInput(format!("cannot start worker pool: {e}")))?;
    let rows: Vec<Result<Option<String>, Error>> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(k, n, s)| match compare(kind, k, n, s) {
                Ok(r) => {
                    let v = to_value(&r);
                    let baseline = v["baseline"].get("value").cloned().unwrap_or(Value::Null);
                    Ok(Some(format!(
                        "{k},{n},{s},{},{},{},{}",
                        r.value,
                        r.kind,
                        csv_field(&baseline),
                        csv_field(&v["improvement"])
                    )))
                }
                // cells outside the bound's domain are left out of the grid
                Err(Error::Domain(_)) => Ok(None),
                Err(e) => Err(e),
            })
            .collect()
    });
    let mut csv = String::from("k,n,s,value,kind,baseline,improvement\n");
    let mut skipped = 0usize;
    for row in rows {
        match row? {
            Some(line) => {
                csv.push_str(&line);
                csv.push('\n');
            }
            None => skipped += 1,
        }
    }
    match &a.output {
        Some(path) => {
            std::fs::write(path, &csv).map_err(|e| io_err(path, e))?;
            let mut manifest = RunManifest::new(&ctx.settings, vec![]);
            manifest.workers = workers;
            let sidecar = path.with_extension("csv.manifest.json");
            let body = json!({"manifest": manifest, "rows": cells.len() - skipped, "skipped_cells": skipped});
            std::fs::write(&sidecar, serde_json::to_string_pretty(&body).expect("manifest serializes"))
                .map_err(|e| io_err(&sidecar, e))?;
            Ok(Output::Plain(format!("wrote {} rows to {}", cells.len() - skipped, path.display())))
        }
        None => Ok(Output::Plain(csv.trim_end().to_string())),
    }
}

fn run_hilbert(ctx: &Ctx, c: &HilbertCommand) -> Result<Output, Error> {
    match c {
        HilbertCommand::Plucker { k, n, m, method } => {
            let method = match method {
                MethodArg::Closed => HilbertMethod::Closed,
                MethodArg::Series => HilbertMethod::Series,
            };
            Ok(Output::Plain(hilbert_value_with(*k, *n, *m, method)?.to_string()))
        }
        HilbertCommand::EvenSum { k, n, s } => Ok(Output::Plain(hilbert_even_sum(*k, *n, *s)?.to_string())),
        HilbertCommand::Series { k, n } => {
            let s = HilbertSeries::plucker(*k, *n)?;
            let num: Vec<Value> = s.numerator.iter().map(bigint_value).collect();
            Ok(ctx.json(
                json!({"k": k, "n": n, "numerator": num, "denom_exponent": s.denom_exponent, "denom_period": s.denom_period}),
                vec![],
            ))
        }
        HilbertCommand::ProjectionRank { k, n, degree, seed, samples } => {
            let seed = seed.unwrap_or(ctx.settings.seed);
            let r = sampled_hilbert_rank_with(*k, *n, *degree, *samples, seed, ctx.settings.tolerances.rank_factor)?;
            Ok(ctx.json(to_value(&r), vec![seed]))
        }
    }
}

fn run_coeff(ctx: &Ctx, c: &CoeffCommand) -> Result<Output, Error> {
    match c {
        CoeffCommand::Dkn { k, n } => Ok(Output::Plain(format_rational(&d_kn(*k, *n)?))),
        CoeffCommand::Leading { k, n } => Ok(ctx.json(to_value(&LeadingTermReport::compute(*k, *n)?), vec![])),
        CoeffCommand::FsLeading { k, s } => Ok(Output::Plain(format_rational(&fs_leading_coefficient(*k, *s)?))),
    }
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    let parts = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Error::InvalidInput(format!("bad partition {s:?}")))?;
    Partition::new(parts)
}

fn coeff_map<'a>(it: impl Iterator<Item = (&'a Partition, &'a BigRational)>) -> Value {
    let map: Map<String, Value> = it
        .map(|(p, c)| (p.to_string(), Value::String(format_rational(c))))
        .collect();
    Value::Object(map)
}

fn run_jack(ctx: &Ctx, c: &JackCommand) -> Result<Output, Error> {
    match c {
        JackCommand::Expand { k, norm: nm } => {
            let coeffs = jack_expansion_coeffs_with(*k, norm(*nm))?;
            Ok(ctx.json(
                json!({"k": k, "alpha": "2", "normalization": format!("{nm:?}"), "coefficients": coeff_map(coeffs.iter().rev())}),
                vec![],
            ))
        }
        JackCommand::Poly { lambda, alpha, vars, norm: nm } => {
            let lambda = parse_partition(lambda)?;
            let alpha = parse_rational(alpha)?;
            let vars = vars.unwrap_or(lambda.weight() as usize).max(lambda.len());
            let p = jack(&lambda, &alpha, vars, norm(*nm))?;
            Ok(ctx.json(
                json!({
                    "lambda": lambda.to_string(),
                    "alpha": format_rational(&alpha),
                    "vars": vars,
                    "normalization": format!("{nm:?}"),
                    "monomial_coefficients": coeff_map(p.terms()),
                }),
                vec![],
            ))
        }
    }
}

fn run_verify(ctx: &Ctx, a: &VerifyArgs) -> Result<Output, Error> {
    let text = std::fs::read_to_string(&a.file).map_err(|e| io_err(&a.file, e))?;
    let mut file = FrameFile::parse(&text)?;
    file.tol_orth.get_or_insert(ctx.settings.tolerances.tol_orth);
    let frames = file.frames()?;
    let metric: Metric = a.metric.parse()?;
    let tol = ctx.settings.tolerances;
    let seed = a.seed.unwrap_or(ctx.settings.seed);
    match a.check {
        CheckArg::Spectrum => {
            let spec = distance_spectrum(&frames, metric, tol.tol_cluster)?;
            Ok(ctx.json(json!({"file": a.file.display().to_string(), "spectrum": spec}), vec![]))
        }
        CheckArg::Matrix => {
            let spec = distance_spectrum(&frames, metric, tol.tol_cluster)?;
            let m = match metric {
                Metric::Chordal => chordal_eval_matrix(&frames, &spec)?,
                Metric::FubiniStudy => fs_eval_matrix(&frames, &spec)?,
                Metric::Angle(i) => {
                    if spec.s != 1 {
                        return Err(Error::Uncertified(format!("not equiangular: {} distinct angles", spec.s)));
                    }
                    equiangular_eval_matrix(&frames, spec.values[0], i)?
                }
            };
            Ok(ctx.json(
                json!({
                    "matrix": m,
                    "max_offdiag": m.max_offdiag(),
                    "diagonal": m.diagonal(),
                    "diagonal_within_tol": m.is_diagonal(tol.tol_diag),
                }),
                vec![],
            ))
        }
        CheckArg::Rank => {
            let (construction, selector) = match metric {
                Metric::Chordal => (Construction::ChordalP, 1),
                Metric::FubiniStudy => (Construction::FsF, 1),
                Metric::Angle(i) => (Construction::EquiangularF, i),
            };
            let opts = VerifyOptions {
                tolerances: tol,
                selector,
                seed,
                samples: a.samples,
            };
            let report = verify_prop31(&frames, construction, &opts)?;
            let seeds = if construction == Construction::ChordalP { vec![seed] } else { vec![] };
            Ok(ctx.json(
                json!({
                    "s": report.s,
                    "rank": report.matrix_rank,
                    "bound": bigint_value(&report.bound),
                    "satisfied": report.satisfied,
                    "report": report,
                }),
                seeds,
            ))
        }
    }
}

fn run_lemma51(ctx: &Ctx, a: &Lemma51Args) -> Result<Output, Error> {
    let report = lemma51_report(a.n, a.d, a.k)?;
    let mut v = to_value(&report);
    let mut seeds = vec![];
    if a.membership_samples > 0 {
        let seed = a.seed.unwrap_or(ctx.settings.seed);
        let failures = ideal_membership_failures(a.n, a.d, a.k, a.membership_samples, seed)?;
        v["membership_samples"] = json!(a.membership_samples);
        v["membership_failures"] = json!(failures);
        seeds.push(seed);
    }
    if !report.independent {
        return Err(Error::Invariant {
            name: "family independence",
            detail: format!("rank {} but p_d = {}", report.rank, report.p_d),
        });
    }
    Ok(ctx.json(v, seeds))
}

fn run_fixture(ctx: &Ctx, a: &FixtureArgs) -> Result<Output, Error> {
    let seed = a.seed.unwrap_or(ctx.settings.seed);
    let config = match a.name {
        FixtureName::Axes => Configuration::CoordinateAxes,
        FixtureName::Simplex => Configuration::SimplexLines,
        FixtureName::Icosahedron => Configuration::IcosahedronLines,
        FixtureName::Random => Configuration::RandomFrames { count: a.count, seed, k: a.k },
    };
    let frames = generate_configuration(&config, a.n)?;
    let body = FrameFile::from_frames(&frames)?.to_json();
    match &a.output {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| io_err(path, e))?;
            let sidecar = path.with_extension("json.manifest.json");
            let manifest = RunManifest::new(&ctx.settings, vec![seed]);
            std::fs::write(&sidecar, serde_json::to_string_pretty(&json!({"manifest": manifest})).expect("serializes"))
                .map_err(|e| io_err(&sidecar, e))?;
            Ok(Output::Plain(format!("wrote {} frames to {}", frames.len(), path.display())))
        }
        None => Ok(Output::Plain(body)),
    }
}

fn error_line(e: &Error) -> String {
    let mut obj = json!({"kind": e.kind(), "message": e.to_string()});
    if let Error::Invariant { name, .. } = e {
        obj["invariant"] = json!(name);
    }
    if let Error::Unsaturated { first, second } = e {
        obj["ranks"] = json!([first, second]);
    }
    json!({ "error": obj }).to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = match resolve(cli.config.as_deref(), &cli.tol) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}", error_line(&e));
            return ExitCode::from(1);
        }
    };
    let ctx = Ctx {
        settings,
        with_manifest: !cli.no_manifest,
    };
    let result = match &cli.command {
        Command::Bound(a) => run_bound(&ctx, a),
        Command::Table(a) => run_table(&ctx, a),
        Command::Hilbert(c) => run_hilbert(&ctx, c),
        Command::Coeff(c) => run_coeff(&ctx, c),
        Command::Jack(c) => run_jack(&ctx, c),
        Command::Verify(a) => run_verify(&ctx, a),
        Command::Lemma51(a) => run_lemma51(&ctx, a),
        Command::Fixture(a) => run_fixture(&ctx, a),
    };
    let text = match result {
        Ok(Output::Plain(s)) => s,
        Ok(Output::Json(v)) => serde_json::to_string_pretty(&v).expect("output serializes"),
        Err(e) => {
            eprintln!("{}", error_line(&e));
            return ExitCode::from(1);
        }
    };
    // a closed pipe (e.g. `| head`) is not an error
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("{}", error_line(&Error::InvalidInput(format!("cannot write output: {e}"))));
            ExitCode::from(1)
        }
        _ => ExitCode::SUCCESS,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_range("2..=4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_range("5").unwrap(), vec![5]);
        assert_eq!(parse_range("1,4,7").unwrap(), vec![1, 4, 7]);
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("a").is_err());
    }

    #[test]
    fn partitions_parse() {
        assert_eq!(parse_partition("2,1").unwrap().parts(), &[2, 1]);
        assert!(parse_partition("1,2").is_err());
        assert!(parse_partition("x").is_err());
    }

    #[test]
    fn error_lines_are_json() {
        let v: Value = serde_json::from_str(&error_line(&Error::Invariant {
            name: "x",
            detail: "y".into(),
        }))
        .unwrap();
        assert_eq!(v["error"]["kind"], "invariant");
        assert_eq!(v["error"]["invariant"], "x");
    }
}
