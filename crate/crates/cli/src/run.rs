//! The four algorithm commands and their report format.

use std::io::Read;
use std::path::Path;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use tri_extremal::enclosing::{candidates_from, minimum};
use tri_extremal::general_stable::{enumerate_g3stable_detailed, VisitRecord};
use tri_extremal::three_stable::{enumerate_all_3stable_detailed, Enumeration};
use tri_extremal::{parse_polygon, Counters, Error, Polygon, Scalar, Unit, UnitPair};

use crate::{svg, CliError, RunArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    MaxTriangle,
    ThreeStable,
    GeneralStable,
    MinEnclosing,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::MaxTriangle => "max-triangle",
            Algorithm::ThreeStable => "list-3stable",
            Algorithm::GeneralStable => "list-g3stable",
            Algorithm::MinEnclosing => "min-enclosing",
        }
    }
}

/// What one algorithm run reports. Wall time stays out of the JSON form so
/// that repeated runs are byte-identical.
#[derive(Serialize)]
pub struct RunReport {
    pub input_sha256: String,
    pub algorithm: &'static str,
    pub n: usize,
    pub result: Value,
    pub counters: Counters,
    #[serde(skip)]
    pub wall_time: Duration,
}

pub fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(io)?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(io)
    }
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn execute(alg: Algorithm, args: &RunArgs) -> Result<(), CliError> {
    let bytes = read_input(&args.polygon)?;
    let text = std::str::from_utf8(&bytes).map_err(|_| CliError::Usage("polygon file is not UTF-8".into()))?;
    let digest = hex::encode(Sha256::digest(&bytes));
    // Integer files take the machine-integer path; anything else is exact.
    let report = match parse_polygon::<i64>(text) {
        Ok(p) => run(alg, &p, digest, args)?,
        Err(Error::Unrepresentable(_)) => run(alg, &parse_polygon::<tri_extremal::Coord>(text)?, digest, args)?,
        Err(e) => return Err(e.into()),
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serialises"));
    } else {
        print_text(&report);
    }
    Ok(())
}

fn point_json<T: Scalar>(p: &tri_extremal::Point<T>) -> Value {
    json!([p.x.to_string(), p.y.to_string()])
}

fn input_pair<T>(poly: &Polygon<T>, pair: UnitPair) -> Value {
    let (a, b) = (poly.input_unit(pair.first()), poly.input_unit(pair.second()));
    let (a, b) = if poly.was_reversed() { (b, a) } else { (a, b) };
    json!([a, b])
}

fn visits_jsonl<T>(poly: &Polygon<T>, visits: &[VisitRecord]) -> String {
    let mut out = String::new();
    for v in visits {
        let line = json!({
            "pair": input_pair(poly, v.pair),
            "a_first": poly.input_index(v.a_first % poly.len()),
            "a_last": poly.input_index(v.a_last % poly.len()),
            "rotation": v.rotation,
        });
        out.push_str(&line.to_string());
        out.push('\n');
    }
    out
}

fn traces_jsonl<T>(poly: &Polygon<T>, e: &Enumeration) -> String {
    e.traces.iter().map(|t| t.to_jsonl(poly)).collect()
}

fn run<T: Scalar>(alg: Algorithm, poly: &Polygon<T>, digest: String, args: &RunArgs) -> Result<RunReport, CliError> {
    let n = poly.len();
    let start = Instant::now();
    let (result, counters) = match alg {
        Algorithm::MaxTriangle | Algorithm::ThreeStable => {
            let e = enumerate_all_3stable_detailed(poly)?;
            let wall = start.elapsed();
            if let Some(path) = &args.trace {
                write_file(path, &traces_jsonl(poly, &e))?;
            }
            if let Some(path) = &args.svg {
                write_file(path, &svg::three_stable_frames(poly, &e))?;
            }
            let result = if alg == Algorithm::MaxTriangle {
                // First maximum in canonical order, as the library picks it.
                let mut best = None;
                for t in &e.triangles {
                    let area = t.area(poly);
                    if best.as_ref().is_none_or(|(_, a)| area > *a) {
                        best = Some((*t, area));
                    }
                }
                let (best, area) = best.ok_or(Error::NoCandidate)?;
                json!({
                    "triangle": best.to_input(poly),
                    "vertices": best.to_input(poly).indices().map(|i| point_input(poly, i)),
                    "area": area.to_string(),
                })
            } else {
                let mut all: Vec<_> = e.triangles.iter().map(|t| t.to_input(poly)).collect();
                all.sort();
                json!({ "count": all.len(), "triangles": all })
            };
            return Ok(RunReport {
                input_sha256: digest,
                algorithm: alg.name(),
                n,
                result,
                counters: e.counters,
                wall_time: wall,
            });
        }
        Algorithm::GeneralStable | Algorithm::MinEnclosing => {
            let e = enumerate_g3stable_detailed(poly)?;
            if let Some(path) = &args.trace {
                write_file(path, &visits_jsonl(poly, &e.visits))?;
            }
            let result = if alg == Algorithm::GeneralStable {
                if let Some(path) = &args.svg {
                    write_file(path, &svg::general_frames(poly, &e.visits, e.triangles.iter(), None))?;
                }
                let mut all: Vec<_> = e.triangles.iter().map(|t| t.to_input(poly)).collect();
                all.sort();
                json!({ "count": all.len(), "triangles": all })
            } else {
                let candidates = candidates_from(poly, &e.triangles)?;
                let count = candidates.len();
                let (best, minima) = minimum(candidates)?;
                if let Some(path) = &args.svg {
                    write_file(path, &svg::general_frames(poly, &e.visits, minima.iter().map(|m| &m.source), Some(&best)))?;
                }
                json!({
                    "area": best.area.to_string(),
                    "minimum": best.to_input(poly),
                    "minima": minima.iter().map(|m| m.to_input(poly)).collect::<Vec<_>>(),
                    "candidates": count,
                })
            };
            (result, e.counters)
        }
    };
    Ok(RunReport { input_sha256: digest, algorithm: alg.name(), n, result, counters, wall_time: start.elapsed() })
}

/// Coordinates of input vertex `i`.
fn point_input<T: Scalar>(poly: &Polygon<T>, i: usize) -> Value {
    let internal = (0..poly.len()).find(|&k| poly.input_index(k) == i).unwrap_or(i);
    point_json(poly.vertex(internal))
}

fn print_text(r: &RunReport) {
    println!("{} on n = {} (sha256 {})", r.algorithm, r.n, &r.input_sha256[..16]);
    match r.algorithm {
        "max-triangle" => {
            println!("triangle {}", r.result["triangle"]);
            println!("vertices {}", r.result["vertices"]);
            println!("area {}", r.result["area"].as_str().unwrap_or_default());
        }
        "min-enclosing" => {
            let m = &r.result["minimum"];
            println!("area {}", r.result["area"].as_str().unwrap_or_default());
            println!("corners {} {} {}", m["a"], m["b"], m["c"]);
            println!("touching {}", m["source"]["corners"]);
            println!(
                "{} tied minima among {} candidates",
                r.result["minima"].as_array().map_or(0, Vec::len),
                r.result["candidates"]
            );
        }
        _ => {
            println!("{} triangles", r.result["count"]);
            for t in r.result["triangles"].as_array().into_iter().flatten() {
                match t.get("corners") {
                    Some(corners) => println!("  {} area {}", units_text(corners), t["area"].as_str().unwrap_or_default()),
                    None => println!("  {t}"),
                }
            }
        }
    }
    let c = &r.counters;
    println!(
        "counters predicate_evals={} cursor_advances={} gadget_calls={} scan_moves={}",
        c.predicate_evals, c.cursor_advances, c.gadget_calls, c.scan_moves
    );
    println!("time {:.3} ms", r.wall_time.as_secs_f64() * 1e3);
}

fn units_text(corners: &Value) -> String {
    let parts: Vec<String> = corners
        .as_array()
        .into_iter()
        .flatten()
        .map(|c| {
            let unit: Option<Unit> = serde_json::from_value(c["unit"].clone()).ok();
            let name = match unit {
                Some(Unit::Vertex(i)) => format!("v{i}"),
                Some(Unit::Edge(i)) => format!("e{i}"),
                None => "?".into(),
            };
            format!("{name}({}, {})", c["point"][0].as_str().unwrap_or(""), c["point"][1].as_str().unwrap_or(""))
        })
        .collect();
    parts.join(" ")
}
