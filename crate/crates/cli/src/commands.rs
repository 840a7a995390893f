use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::{json, Value};

use dual_complex::builtin::{self, Builtin};
use dual_complex::generate::{random_delta_complex, rng, ComplexShape};
use dual_complex::homology::{betti_numbers, euler_characteristic, homology_equal, BettiVector};
use dual_complex::ops::{
    cartesian_product_triangulated, cone_extension, greedy_collapse, simplicial_product,
    star_subdivision, ConeExtensionInstruction,
};
use dual_complex::snc::{
    run_script, track_embedded_pair, EmbeddedPair, PairScript, ResolutionScript,
};
use dual_complex::{DeltaComplex, SimplexId};

use crate::input::{self, id_list};
use crate::report::{to_value, CliError};
use crate::Command;

/// Embedded-pair file: configuration paths, relative to the pair file,
/// and the vertex map of the inclusion.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairFile {
    inner: PathBuf,
    outer: PathBuf,
    vertex_map: BTreeMap<SimplexId, SimplexId>,
    #[serde(default)]
    resolution: BTreeMap<SimplexId, SimplexId>,
    #[serde(default)]
    filtration: Vec<Vec<SimplexId>>,
}

pub fn execute(command: &Command, seed: u64) -> Result<Value, CliError> {
    match command {
        Command::Validate { input } => validate(input),
        Command::Homology { input, reduced } => {
            let c = input::complex(input)?;
            let b =
                betti_numbers(&c, *reduced).map_err(|e| CliError::validation(Some(input), e))?;
            Ok(json!({
                "betti": b.betti(),
                "w0_dims": b.w0_dims(),
                "reduced": b.is_reduced(),
                "euler": euler_characteristic(&c),
                "f_vector": c.f_vector(),
            }))
        }
        Command::Subdivide {
            input,
            tau,
            new_vertex,
            write,
        } => {
            let c = input::complex(input)?;
            let out = star_subdivision(&c, tau, new_vertex)
                .map_err(|e| CliError::validation(Some(input), e))?;
            transformed(&c, &out, write.as_deref(), json!({}))
        }
        Command::ConeExtend {
            input,
            delta,
            delta0,
            new_vertex,
            write,
        } => {
            let c = input::complex(input)?;
            let instr = ConeExtensionInstruction::new(
                &c,
                id_list(delta),
                id_list(delta0),
                new_vertex.as_str(),
            )
            .map_err(|e| CliError::validation(Some(input), e))?;
            let out =
                cone_extension(&c, &instr).map_err(|e| CliError::validation(Some(input), e))?;
            transformed(&c, &out, write.as_deref(), json!({}))
        }
        Command::Product {
            a,
            b,
            triangulated,
            write,
        } => product(a, b, *triangulated, write.as_deref()),
        Command::BlowupRun {
            config,
            script,
            write,
        } => {
            let cfg = input::config(config)?;
            let script_data: ResolutionScript = input::parse(script)?;
            match run_script(&cfg, &script_data) {
                Ok(history) => {
                    let last = history.last();
                    write_complex(write.as_deref(), last.config.dual())?;
                    Ok(json!({
                        "final_complex": to_value(last.config.dual().to_raw()),
                        "final_w0_dims": last.betti.w0_dims(),
                        "betti_invariant": history.betti_invariant(),
                        "history": to_value(&history),
                    }))
                }
                Err(failure) => Err(CliError::validation(
                    Some(script),
                    format!("step {}: {}", failure.index, failure.cause),
                )
                .with_partial(
                    json!({ "failed_step": failure.index, "history": to_value(&failure.history) }),
                )),
            }
        }
        Command::PairRun { pair, script } => pair_run(pair, script),
        Command::Compare { a, b } => {
            let ca = input::complex(a)?;
            let cb = input::complex(b)?;
            let cmp = homology_equal(&ca, &cb).map_err(|e| CliError::validation(None, e))?;
            Ok(to_value(cmp))
        }
        Command::Collapse { input, target } => {
            let c = input::complex(input)?;
            let t = c
                .subset(id_list(target))
                .map_err(|e| CliError::validation(Some(input), e))?;
            let outcome =
                greedy_collapse(&c, &t).map_err(|e| CliError::validation(Some(input), e))?;
            let verified = outcome.certificate().map(|cert| cert.verify(&c).is_ok());
            Ok(json!({ "outcome": to_value(&outcome), "certificate_verified": verified }))
        }
        Command::Example { name, write } => example(name, seed, write.as_deref()),
    }
}

fn betti(c: &DeltaComplex) -> Result<BettiVector, CliError> {
    betti_numbers(c, false).map_err(|e| CliError::validation(None, e))
}

fn write_complex(path: Option<&Path>, c: &DeltaComplex) -> Result<(), CliError> {
    if let Some(path) = path {
        input::write(path, &input::canonical(&to_value(c.to_raw())))?;
    }
    Ok(())
}

fn transformed(
    before: &DeltaComplex,
    after: &DeltaComplex,
    write: Option<&Path>,
    mut extra: Value,
) -> Result<Value, CliError> {
    write_complex(write, after)?;
    let (b0, b1) = (betti(before)?, betti(after)?);
    extra["complex"] = to_value(after.to_raw());
    extra["f_vector"] = json!(after.f_vector());
    extra["betti_before"] = to_value(&b0);
    extra["betti_after"] = to_value(&b1);
    extra["betti_equal"] = json!(b0.agrees_with(&b1));
    Ok(extra)
}

fn validate(path: &Path) -> Result<Value, CliError> {
    let value: Value = input::parse(path)?;
    let kind = if value.get("component_meta").is_some() {
        let cfg = input::config(path)?;
        return Ok(json!({
            "kind": "configuration",
            "f_vector": cfg.dual().f_vector(),
            "canonical": to_value(cfg.to_raw()),
        }));
    } else if let Some(steps) = value.get("steps") {
        let paired = steps
            .as_array()
            .and_then(|s| s.first())
            .is_some_and(|s| s.get("inner").is_some());
        if paired {
            let s: PairScript =
                serde_json::from_value(value).map_err(|e| CliError::parse(path, e))?;
            return Ok(
                json!({ "kind": "pair_script", "steps": s.steps.len(), "canonical": to_value(&s) }),
            );
        }
        let s: ResolutionScript =
            serde_json::from_value(value).map_err(|e| CliError::parse(path, e))?;
        return Ok(json!({ "kind": "script", "steps": s.steps.len(), "canonical": to_value(&s) }));
    } else {
        "complex"
    };
    let c = input::complex(path)?;
    Ok(json!({
        "kind": kind,
        "dim": c.dim(),
        "f_vector": c.f_vector(),
        "canonical": to_value(c.to_raw()),
    }))
}

fn product(
    a: &Path,
    b: &Path,
    triangulated: bool,
    write: Option<&Path>,
) -> Result<Value, CliError> {
    let ca = input::complex(a)?;
    let cb = input::complex(b)?;
    let invalid = |e| CliError::validation(None, e);
    let (ba, bb) = (betti(&ca)?, betti(&cb)?);
    let mut kunneth = vec![0usize; ba.betti().len() + bb.betti().len()];
    for (i, x) in ba.betti().iter().enumerate() {
        for (j, y) in bb.betti().iter().enumerate() {
            kunneth[i + j] += x * y;
        }
    }
    let kunneth = BettiVector::new(kunneth, false);
    let mut result = json!({ "betti_a": to_value(&ba), "betti_b": to_value(&bb) });
    let tensor = if triangulated {
        let tp = cartesian_product_triangulated(&ca, &cb).map_err(invalid)?;
        let bs = betti(&tp.staircase)?;
        result["staircase_f_vector"] = json!(tp.staircase.f_vector());
        result["staircase_betti"] = to_value(&bs);
        result["staircase_matches_tensor"] = json!(bs.agrees_with(&betti(&tp.tensor)?));
        write_complex(write, &tp.staircase)?;
        tp.tensor.as_ref().clone()
    } else {
        let t = simplicial_product(&ca, &cb).map_err(invalid)?;
        write_complex(write, &t)?;
        t
    };
    let bt = betti(&tensor)?;
    result["f_vector"] = json!(tensor.f_vector());
    result["betti"] = to_value(&bt);
    result["kunneth_holds"] = json!(bt.agrees_with(&kunneth));
    Ok(result)
}

fn pair_run(pair_path: &Path, script_path: &Path) -> Result<Value, CliError> {
    let file: PairFile = input::parse(pair_path)?;
    let base = pair_path.parent().unwrap_or(Path::new("."));
    let inner = input::config(&base.join(&file.inner))?;
    let outer = input::config(&base.join(&file.outer))?;
    let pair = EmbeddedPair::from_vertex_map(
        inner,
        outer,
        &file.vertex_map,
        &file.resolution,
        &file.filtration,
    )
    .map_err(|e| CliError::validation(Some(pair_path), e))?;
    let script: PairScript = input::parse(script_path)?;
    match track_embedded_pair(&pair, &script) {
        Ok(history) => {
            let broken = history.broken();
            Ok(
                json!({ "all_checks_hold": broken.is_none(), "broken": to_value(broken), "history": to_value(&history) }),
            )
        }
        Err(failure) => Err(CliError::validation(
            Some(script_path),
            format!("step {}: {}", failure.index, failure.cause),
        )
        .with_partial(
            json!({ "failed_step": failure.index, "history": to_value(&failure.history) }),
        )),
    }
}

fn example(name: &str, seed: u64, write: Option<&Path>) -> Result<Value, CliError> {
    let (kind, data) = if name == "random" {
        let c = random_delta_complex(&mut rng(seed), ComplexShape::new(8, 3, 6, 80), 2);
        ("complex", to_value(c.to_raw()))
    } else {
        match builtin::by_name(name) {
            Some(Builtin::Complex(c)) => ("complex", to_value(c.to_raw())),
            Some(Builtin::Configuration(c)) => ("configuration", to_value(c.to_raw())),
            None => {
                let mut known: Vec<&str> = builtin::NAMES.to_vec();
                known.push("random");
                return Err(CliError::Usage(format!(
                    "unknown example `{name}`; known: {}",
                    known.join(", ")
                )));
            }
        }
    };
    if let Some(path) = write {
        input::write(path, &input::canonical(&data))?;
    }
    Ok(json!({ "name": name, "kind": kind, "data": data }))
}
