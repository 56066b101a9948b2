use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use daisy::census::{census_oracle, run_census, ClosedForm, CubeCensus, Engine};
use daisy::family::{downward_closure, DaisyCube, GeneratorSet, NamedFamily, VertexSet};
use daisy::gf::{expand, SeriesFamily};
use daisy::io::{parse_vertex_file, write_daisy_file};
use daisy::verify::{self, CheckReport, Instance, Subject, SuiteConfig};
use daisy::{BiPoly, UniPoly, Word};
use serde_json::json;

use crate::{BuildArgs, CensusArgs, EngineArg, Format, Input, SeriesArgs, VerifyArgs};

type Result<T> = std::result::Result<T, Box<dyn std::error::Error>>;

/// Exit status of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> ExitCode {
        match s {
            Status::Ok => ExitCode::SUCCESS,
            Status::Failed => ExitCode::from(1),
        }
    }
}

/// A loaded graph: a daisy cube, or an arbitrary vertex set from `--vertices`.
enum Graph {
    Daisy(DaisyCube),
    Raw(VertexSet),
}

struct Loaded {
    instance: Instance,
    graph: Graph,
}

impl Loaded {
    fn vertices(&self) -> &VertexSet {
        match &self.graph {
            Graph::Daisy(g) => g.vertices(),
            Graph::Raw(v) => v,
        }
    }

    fn n(&self) -> usize {
        self.vertices().n()
    }

    /// The daisy cube, also accepting a downward-closed `--vertices` file.
    fn daisy(&self) -> Option<DaisyCube> {
        match &self.graph {
            Graph::Daisy(g) => Some(g.clone()),
            Graph::Raw(v) => DaisyCube::try_from_vertices(v.clone()),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load(input: &Input) -> Result<Loaded> {
    if let Some(name) = &input.family {
        let family = NamedFamily::parse(name, input.k)?;
        let n = input.n.ok_or("--family needs --n")?;
        let cube = family.build(n)?;
        return Ok(Loaded { instance: Instance::family(family.to_string(), n), graph: Graph::Daisy(cube) });
    }
    let check_n = |n: usize| -> Result<()> {
        match input.n {
            Some(m) if m != n => Err(format!("--n {m} does not match word length {n} in file").into()),
            _ => Ok(()),
        }
    };
    if let Some(path) = &input.generators {
        let x = GeneratorSet::from(parse_vertex_file(&read(path)?)?);
        check_n(x.n())?;
        let cube = downward_closure(&x);
        let instance = Instance {
            family: Some(format!("generators:{}", path.display())),
            n: x.n(),
            generators: Some(cube.maximal().iter().map(|w| w.to_string()).collect()),
            ..Default::default()
        };
        return Ok(Loaded { instance, graph: Graph::Daisy(cube) });
    }
    if let Some(path) = &input.vertices {
        let v = parse_vertex_file(&read(path)?)?;
        check_n(v.n())?;
        let instance = Instance { family: Some(format!("vertices:{}", path.display())), n: v.n(), ..Default::default() };
        return Ok(Loaded { instance, graph: Graph::Raw(v) });
    }
    Err("no input: give --family with --n, --generators PATH or --vertices PATH".into())
}

fn parse_anchor(anchor: Option<&str>, n: usize) -> Result<Word> {
    match anchor {
        None => Ok(Word::zeros(n)?),
        Some(s) => {
            let u: Word = s.parse()?;
            if u.len() != n {
                return Err(format!("anchor {s} has length {}, graph has n = {n}", u.len()).into());
            }
            Ok(u)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()).into()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn build(args: &BuildArgs) -> Result<Status> {
    let loaded = load(&args.input)?;
    let cube = loaded.daisy().ok_or("vertex set is not downward closed")?;
    if cube.is_empty() {
        return Err("generator set is empty".into());
    }
    let (v, e, x) = (cube.vertices().len(), cube.vertices().edge_count(), cube.maximal().len());
    let body = match args.format {
        Format::Json => {
            let words = |s: &VertexSet| s.iter().map(|w| w.to_string()).collect::<Vec<_>>();
            let value = json!({
                "instance": loaded.instance,
                "n": cube.n(),
                "vertex_count": v,
                "edge_count": e,
                "maximal": words(cube.maximal()),
                "vertices": words(cube.vertices()),
            });
            format!("{}\n", serde_json::to_string_pretty(&value)?)
        }
        Format::Text | Format::Csv => write_daisy_file(&cube, &loaded.instance.to_string()),
    };
    emit(args.out.as_deref(), &body)?;
    if args.out.is_some() {
        println!("vertices={v} edges={e} maximal={x}");
    }
    Ok(Status::Ok)
}

fn engine_for(arg: Option<EngineArg>, n: usize) -> Engine {
    match arg {
        Some(EngineArg::Oracle) => Engine::Oracle,
        Some(EngineArg::Fast) => Engine::Fast,
        Some(EngineArg::Both) => Engine::Both,
        None if n <= 8 => Engine::Both,
        None => Engine::Fast,
    }
}

fn engine_name(e: Engine) -> &'static str {
    match e {
        Engine::Oracle => "oracle",
        Engine::Fast => "fast",
        Engine::Both => "both",
    }
}

fn poly_file(format: Format, p: serde_json::Value, text: String) -> Result<String> {
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string(&p)?),
        _ => format!("{text}\n"),
    })
}

pub fn census(args: &CensusArgs) -> Result<Status> {
    let loaded = load(&args.input)?;
    let n = loaded.n();
    let anchor = parse_anchor(args.anchor.as_deref(), n)?;
    let mut engine = engine_for(args.engine, n);
    let (census, agreed, oracle) = match loaded.daisy() {
        Some(cube) => {
            let run = run_census(&cube, &anchor, engine)?;
            (run.census, run.agreed, run.oracle_census)
        }
        None => {
            if args.engine.is_some_and(|e| e != EngineArg::Oracle) {
                return Err("the fast engine needs a downward-closed vertex set; use --engine oracle".into());
            }
            engine = Engine::Oracle;
            (census_oracle(loaded.vertices(), &anchor)?, None, None)
        }
    };
    let (c, d, w) = (census.cube_poly(), census.distance_poly(), census.weight_poly());
    let engine_line = match agreed {
        Some(true) => "both (agree)".to_string(),
        Some(false) => "both (DISAGREE)".to_string(),
        None => engine_name(engine).to_string(),
    };

    if let Some(dir) = &args.out {
        fs::create_dir_all(dir)?;
        let ext = if args.format == Format::Json { "json" } else { "txt" };
        fs::write(dir.join("census.csv"), census.to_csv())?;
        fs::write(dir.join(format!("C.{ext}")), poly_file(args.format, json!(c), c.to_string())?)?;
        fs::write(dir.join(format!("D.{ext}")), poly_file(args.format, json!(d), d.to_string())?)?;
        fs::write(dir.join(format!("W.{ext}")), poly_file(args.format, json!(w), w.to_string())?)?;
        println!("[{}] anchor={anchor} engine={engine_line} written to {}", loaded.instance, dir.display());
    } else {
        let body = match args.format {
            Format::Csv => census.to_csv(),
            Format::Json => {
                let value = json!({
                    "instance": loaded.instance,
                    "anchor": anchor.to_string(),
                    "engine": engine_name(engine),
                    "agreed": agreed,
                    "census": census,
                    "C": c,
                    "D": d,
                    "W": w,
                });
                format!("{}\n", serde_json::to_string_pretty(&value)?)
            }
            Format::Text => census_text(&loaded.instance, &anchor, &engine_line, &census, &c, &d, &w),
        };
        print!("{body}");
    }
    if let Some(oracle) = oracle {
        if let Some((k, dd, fast, orc)) = census.first_difference(&oracle) {
            eprintln!("engines disagree at k={k} d={dd}: fast={fast} oracle={orc}");
        }
        return Ok(Status::Failed);
    }
    Ok(Status::Ok)
}

fn census_text(
    instance: &Instance,
    anchor: &Word,
    engine: &str,
    census: &CubeCensus,
    c: &UniPoly,
    d: &BiPoly,
    w: &UniPoly,
) -> String {
    let mut out = String::new();
    writeln!(out, "graph: {instance}").unwrap();
    writeln!(out, "anchor: {}", if anchor.is_empty() { "(empty word)".into() } else { anchor.to_string() }).unwrap();
    writeln!(out, "engine: {engine}").unwrap();
    writeln!(out, "C = {c}").unwrap();
    writeln!(out, "D = {d}").unwrap();
    writeln!(out, "W = {w}").unwrap();
    for (k, count) in census.unreachable() {
        writeln!(out, "unreachable {k}-cubes: {count}").unwrap();
    }
    out.push_str(&census.to_csv());
    out
}

pub fn series(args: &SeriesArgs) -> Result<Status> {
    let family: SeriesFamily = args.family.parse()?;
    if args.m > 30 {
        return Err(format!("--m {} exceeds 30", args.m).into());
    }
    let rows = expand(family, args.m);
    let mismatches = daisy::gf::substitution_mismatches(&rows);
    let body = match args.format {
        Format::Json => {
            let value = json!({
                "family": family.to_string(),
                "m": args.m,
                "rows": rows,
                "cross_check": { "g_is_f_shifted_and_h_is_f_summed": mismatches.is_empty(), "mismatched_n": mismatches },
            });
            format!("{}\n", serde_json::to_string_pretty(&value)?)
        }
        _ => {
            let mut out = String::new();
            for r in &rows {
                writeln!(out, "n={}", r.n).unwrap();
                writeln!(out, "  f = {}", r.f).unwrap();
                writeln!(out, "  g = {}", r.g).unwrap();
                writeln!(out, "  h = {}", r.h).unwrap();
            }
            let verdict = if mismatches.is_empty() { "ok" } else { "MISMATCH" };
            writeln!(out, "cross-check g = f(x+1,z), h = f(x+y,z): {verdict}").unwrap();
            out
        }
    };
    emit(args.out.as_deref(), &body)?;
    Ok(if mismatches.is_empty() { Status::Ok } else { Status::Failed })
}

fn single_check(args: &VerifyArgs, name: &str) -> Result<Vec<CheckReport>> {
    let standalone = match name {
        "q3-minus-values" => Some(vec![verify::check_q3_minus()?]),
        "hypercube-closed-forms" => {
            let n = args.input.n.ok_or("hypercube-closed-forms needs --n")?;
            Some(vec![verify::check_hypercube_closed_forms(n)?])
        }
        "closed-form-w" => {
            let family: ClosedForm = args.input.family.as_deref().ok_or("closed-form-w needs --family")?.parse()?;
            let n = args.input.n.ok_or("closed-form-w needs --n")?;
            Some(vec![verify::check_closed_form_w(family, n)?])
        }
        "series" => {
            let family: SeriesFamily = args.input.family.as_deref().ok_or("series needs --family")?.parse()?;
            Some(vec![verify::check_series(family, args.max_n, args.max_n)?])
        }
        "subcube-anchor" => Some(verify::subcube_anchor_reports(args.input.n.ok_or("subcube-anchor needs --n")?)?),
        _ => None,
    };
    if let Some(reports) = standalone {
        return Ok(reports);
    }

    let loaded = load(&args.input)?;
    if name == "partial-cube" {
        return Ok(vec![verify::check_partial_cube(loaded.instance.clone(), loaded.vertices())]);
    }
    let cube = loaded.daisy().ok_or_else(|| format!("{name} needs a downward-closed vertex set"))?;
    if cube.is_empty() {
        return Err("empty graph".into());
    }
    let subject = Subject::new(loaded.instance.clone(), cube);
    let report = match name {
        "d-from-c" => verify::check_d_from_c(&subject),
        "symmetry" => match &args.anchor {
            Some(a) => {
                let u = parse_anchor(Some(a), subject.cube.n())?;
                if u.bits() == 0 {
                    verify::check_symmetry(&subject)
                } else {
                    verify::symmetry_info(&subject, &u)?
                }
            }
            None => verify::check_symmetry(&subject),
        },
        "w-relations" => verify::check_w_relations(&subject),
        "tree-like" => verify::check_tree_like(&subject),
        "cube-poly-minus1" => verify::check_cube_poly_minus1(&subject),
        "engines" => verify::check_engine_equivalence(&subject),
        "recenter" => {
            let u = parse_anchor(args.anchor.as_deref(), subject.cube.n())?;
            verify::check_recenter(subject.instance.clone(), subject.cube.vertices(), &u)?
        }
        other => return Err(format!("unknown check {other:?}").into()),
    };
    Ok(vec![report])
}

pub fn verify(args: &VerifyArgs) -> Result<Status> {
    let reports = match (&args.check, args.suite.as_deref()) {
        (Some(name), _) => single_check(args, name)?,
        (None, None) | (None, Some("paper")) => {
            let defaults = SuiteConfig::default();
            let cfg = SuiteConfig {
                max_n: args.max_n,
                random_max_n: defaults.random_max_n.min(args.max_n.max(1)),
                random_count: args.random,
                series_m: args.max_n,
                seed: args.seed.unwrap_or(defaults.seed),
                ..defaults
            };
            verify::run_suite(&cfg)?
        }
        (None, Some(other)) => return Err(format!("unknown suite {other:?}").into()),
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut body = String::new();
    for r in &reports {
        match args.format {
            Format::Json => writeln!(body, "{}", r.to_json()).unwrap(),
            _ => writeln!(body, "{r}").unwrap(),
        }
    }
    if args.format != Format::Json {
        writeln!(body, "{} checks, {} passed, {failed} failed", reports.len(), reports.len() - failed).unwrap();
    }
    emit(args.out.as_deref(), &body)?;
    Ok(if failed == 0 { Status::Ok } else { Status::Failed })
}
