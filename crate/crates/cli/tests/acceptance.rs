//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde_json::Value;

use dual_complex::builtin;
use dual_complex::generate::{
    random_center, random_configuration, random_delta_complex, random_simplicial_complex, rng,
    CenterTag, ComplexShape,
};
use dual_complex::homology::{betti_numbers, euler_characteristic, ChainComplex};
use dual_complex::ops::{
    cartesian_product_triangulated, cone_extension, cone_id, greedy_collapse, simplicial_product,
    star_subdivision, CollapseOutcome, ConeExtensionInstruction, SimplicialMap,
};
use dual_complex::snc::{
    run_script, track_embedded_pair, BlowUpCenter, CenterKind, EmbeddedPair, PairCheck, PairScript,
    PairStep, RawConfiguration, ResolutionScript,
};
use dual_complex::{DeltaComplex, Rational, RawComplex, SimplexId, SncConfiguration};

const SEED: u64 = 20_240_601;

/// Every complex built by criteria 1 to 5 passes through here.
#[derive(Default)]
struct Soundness {
    checked: usize,
    /// Time spent in checks, excluded from the runtime limits of the
    /// criteria that call them.
    spent: Duration,
    failures: Vec<String>,
}

impl Soundness {
    fn check(&mut self, label: &str, c: &DeltaComplex) {
        let start = Instant::now();
        self.run(label, c);
        self.spent += start.elapsed();
    }

    fn run(&mut self, label: &str, c: &DeltaComplex) {
        self.checked += 1;
        let chain = match ChainComplex::<Rational>::of(c) {
            Ok(chain) => chain,
            Err(e) => return self.failures.push(format!("{label}: {e}")),
        };
        if let Err(e) = chain.check_nilpotent() {
            self.failures.push(format!("{label}: {e}"));
        }
        let betti: Vec<usize> = chain.betti();
        let alternating: i64 = betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        if alternating != euler_characteristic(c) {
            self.failures
                .push(format!("{label}: euler characteristic mismatch"));
        }
    }
}

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn(&mut Soundness) -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Time since `start` minus the soundness checks run since then.
fn within(start: (Instant, Duration), s: &Soundness, limit: Duration) -> Result<Duration, String> {
    let elapsed = start.0.elapsed() - (s.spent - start.1);
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })?;
    Ok(elapsed)
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn dualcx(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dualcx"))
        .args(args)
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).expect("utf-8 report");
    let value = serde_json::from_str(&text).expect("report is JSON");
    (out.status.code().unwrap_or(-1), value, text)
}

fn ids<'a>(it: impl IntoIterator<Item = &'a SimplexId>) -> BTreeSet<String> {
    it.into_iter().map(|s| s.as_str().to_owned()).collect()
}

fn simplex_ids(c: &DeltaComplex) -> BTreeSet<String> {
    ids(c.simplices().iter().map(|s| s.id()))
}

fn betti(c: &DeltaComplex) -> Vec<usize> {
    betti_numbers(c, false)
        .expect("rational homology")
        .trimmed()
        .to_vec()
}

fn criterion_1(s: &mut Soundness) -> Verdict {
    let start = (Instant::now(), s.spent);
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let config = dir.path().join("three-axes.json");
    let out = dir.path().join("final.json");
    let (code, _, _) = dualcx(&["example", "three-axes", "--write", config.to_str().unwrap()]);
    ensure(code == 0, || format!("example exited {code}"))?;
    let (code, report, _) = dualcx(&[
        "blowup-run",
        "--config",
        config.to_str().unwrap(),
        "--script",
        data("origin.json").to_str().unwrap(),
        "--write",
        out.to_str().unwrap(),
    ]);
    ensure(code == 0, || format!("blowup-run exited {code}"))?;
    let elapsed = within(start, s, Duration::from_secs(1))?;

    let golden = std::fs::read_to_string(data("star-graph.json")).map_err(|e| e.to_string())?;
    let written = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
    ensure(golden == written, || {
        "final complex differs from the golden file".into()
    })?;

    let expected = RawComplex::new()
        .vertex("a")
        .vertex("b")
        .vertex("c")
        .vertex("v")
        .simplex("v#a", &["v", "a"])
        .simplex("v#b", &["v", "b"])
        .simplex("v#c", &["v", "c"]);
    let expected = DeltaComplex::from_raw(&expected).map_err(|e| e.to_string())?;
    let raw: RawComplex = serde_json::from_str(&written).map_err(|e| e.to_string())?;
    let got = DeltaComplex::from_raw(&raw).map_err(|e| e.to_string())?;
    ensure(got == expected, || {
        "final complex is not the star graph".into()
    })?;

    let states = report["result"]["history"]["states"]
        .as_array()
        .cloned()
        .unwrap_or_default();
    ensure(states.len() == 2, || format!("{} states", states.len()))?;
    for st in &states {
        let b: Vec<usize> =
            serde_json::from_value(st["betti"]["betti"].clone()).map_err(|e| e.to_string())?;
        let trimmed = common::trim(&b);
        ensure(trimmed == [1], || {
            format!("betti {trimmed:?}, expected (1,0)")
        })?;
    }
    ensure(common::oracle_betti(&got) == [1, 0], || {
        "oracle disagrees on the star graph".into()
    })?;
    s.check("three-axes", &builtin::three_axes().dual().clone());
    s.check("star graph", &got);
    Ok(format!(
        "star graph matches golden file, betti (1,0) before and after, {elapsed:.2?}"
    ))
}

/// Simplices reaching `tau` by repeatedly passing to facets.
fn star_by_descent(c: &DeltaComplex, tau: usize) -> BTreeSet<String> {
    let mut reaches = vec![false; c.len()];
    reaches[tau] = true;
    // Indices are ordered by dimension, so facets come first.
    for i in 0..c.len() {
        if c.simplex(i).facets().iter().any(|&f| reaches[f]) {
            reaches[i] = true;
        }
    }
    (0..c.len())
        .filter(|&i| reaches[i])
        .map(|i| c.id_of(i).as_str().to_owned())
        .collect()
}

fn criterion_2(s: &mut Soundness) -> Verdict {
    let start = (Instant::now(), s.spent);
    let mut pairs = 0usize;
    for k in 0..200u64 {
        let c = random_delta_complex(&mut rng(SEED + k), ComplexShape::new(10, 4, 24, 270), 3);
        ensure(c.len() <= 300 && c.dim().unwrap_or(0) <= 4, || {
            format!("complex {k} out of range")
        })?;
        s.check("random complex", &c);
        for tau in 0..c.len() {
            let id = c.id_of(tau).as_str();
            let star = c.star(id).map_err(|e| e.to_string())?;
            ensure(ids(star.iter()) == star_by_descent(&c, tau), || {
                format!("star of {id} in complex {k}")
            })?;
            let closed = c.closed_star(id).map_err(|e| e.to_string())?;
            let sub = star_subdivision(&c, id, "v").map_err(|e| e.to_string())?;
            let instr = ConeExtensionInstruction::new(
                &c,
                closed.iter().map(|x| x.as_str()),
                star.iter().map(|x| x.as_str()),
                "v",
            )
            .map_err(|e| e.to_string())?;
            let cone = cone_extension(&c, &instr).map_err(|e| e.to_string())?;
            ensure(sub == cone, || {
                format!("subdivision at {id} of complex {k} differs from the cone extension")
            })?;
            s.check("subdivision", &sub);
            pairs += 1;
        }
    }
    let elapsed = within(start, s, Duration::from_secs(60))?;
    Ok(format!(
        "200 complexes, {pairs} (complex, simplex) pairs, {elapsed:.2?}"
    ))
}

/// `(Δ_C, Δ⁰_C)` read off the center data, with the intersection defaults
/// of closed star and star.
fn expected_incidence(
    cfg: &SncConfiguration,
    center: &BlowUpCenter,
) -> (BTreeSet<String>, BTreeSet<String>) {
    let dual = cfg.dual();
    let given = |v: &Option<Vec<SimplexId>>| v.as_ref().map(|v| ids(v.iter()));
    match &center.kind {
        CenterKind::IntersectionComponent { sigma_c } => {
            let closed = ids(dual.closed_star(sigma_c.as_str()).unwrap().iter());
            let star = ids(dual.star(sigma_c.as_str()).unwrap().iter());
            (
                given(&center.delta).unwrap_or(closed),
                given(&center.delta0).unwrap_or(star),
            )
        }
        _ => (
            given(&center.delta).unwrap_or_default(),
            given(&center.delta0).unwrap_or_default(),
        ),
    }
}

fn criterion_3(s: &mut Soundness) -> Verdict {
    let start = (Instant::now(), s.spent);
    let mut counts = BTreeMap::new();
    let mut transverse_cyclic = 0usize;
    for k in 0..200u64 {
        let mut r = rng(SEED ^ (k << 8));
        let divisor = k % 2 == 0;
        let dual = random_simplicial_complex(&mut r, ComplexShape::new(7, 3, 5, 80));
        let cfg = random_configuration(&mut r, dual, divisor);
        s.check("configuration", cfg.dual());
        let before_betti = betti(cfg.dual());
        for tag in [
            CenterTag::Intersection,
            CenterTag::Inside,
            CenterTag::Transverse,
        ] {
            let Some(center) = random_center(&mut r, &cfg, tag, "v") else {
                continue;
            };
            let script = ResolutionScript {
                steps: vec![center.clone()],
                strata: Vec::new(),
            };
            let history =
                run_script(&cfg, &script).map_err(|e| format!("configuration {k}: {e}"))?;
            let after = history.last().config.dual();
            s.check("blow-up", after);

            let (delta, delta0) = expected_incidence(&cfg, &center);
            let removed: BTreeSet<String> = simplex_ids(cfg.dual())
                .difference(&simplex_ids(after))
                .cloned()
                .collect();
            let added: BTreeSet<String> = simplex_ids(after)
                .difference(&simplex_ids(cfg.dual()))
                .cloned()
                .collect();
            let mut created: BTreeSet<String> =
                delta.difference(&delta0).map(|t| cone_id("v", t)).collect();
            created.insert("v".into());
            let ledger = &history.ledgers[0];
            ensure(
                removed == delta0 && ids(ledger.eliminated.iter()) == delta0,
                || format!("configuration {k}, {tag:?}: eliminated ledger differs from Δ⁰"),
            )?;
            ensure(
                added == created && ids(ledger.created.iter()) == created,
                || format!("configuration {k}, {tag:?}: created ledger differs from v*Δ¹"),
            )?;

            let after_betti = betti(after);
            let must_agree = match tag {
                CenterTag::Transverse => {
                    let sub = cfg.dual().subset(delta.iter()).unwrap();
                    let restricted = cfg.dual().restrict(&sub).unwrap();
                    // The empty complex has reduced homology in degree −1.
                    let acyclic = !restricted.is_empty()
                        && betti_numbers(&restricted, true)
                            .map_err(|e| e.to_string())?
                            .trimmed()
                            .is_empty();
                    transverse_cyclic += usize::from(!acyclic);
                    acyclic
                }
                _ => true,
            };
            if must_agree {
                ensure(before_betti == after_betti, || {
                    format!("configuration {k}, {tag:?}: betti {before_betti:?} -> {after_betti:?}")
                })?;
            }
            *counts.entry(format!("{tag:?}")).or_insert(0usize) += 1;
        }
    }
    let elapsed = within(start, s, Duration::from_secs(120))?;
    for tag in ["Intersection", "Inside", "Transverse"] {
        ensure(counts.get(tag).copied().unwrap_or(0) >= 20, || {
            format!("too few {tag} centers: {counts:?}")
        })?;
    }
    Ok(format!(
        "centers {counts:?}, {transverse_cyclic} transverse with non-acyclic Δ_C (ledger only), {elapsed:.2?}"
    ))
}

fn criterion_4(s: &mut Soundness) -> Verdict {
    for k in 0..100u64 {
        let c = random_delta_complex(
            &mut rng(SEED.wrapping_mul(31) + k),
            ComplexShape::new(8, 3, 6, 120),
            2,
        );
        let instr =
            ConeExtensionInstruction::new(&c, Vec::<&str>::new(), Vec::<&str>::new(), "apex")
                .map_err(|e| e.to_string())?;
        let out = cone_extension(&c, &instr).map_err(|e| e.to_string())?;
        s.check("random complex", &c);
        s.check("disjoint cone", &out);
        let mut expected = common::oracle_betti(&c);
        expected[0] += 1;
        let got = betti_numbers(&out, false).map_err(|e| e.to_string())?;
        ensure(got.betti() == expected.as_slice(), || {
            format!("complex {k}: {:?} vs {expected:?}", got.betti())
        })?;
    }
    Ok("100 complexes, b0 up by one, higher betti unchanged".into())
}

fn criterion_5(s: &mut Soundness) -> Verdict {
    let start = (Instant::now(), s.spent);
    let t = builtin::circle();
    let tt = simplicial_product(&t, &t).map_err(|e| e.to_string())?;
    s.check("T⊗T", &tt);
    ensure(betti(&tt) == [1, 2, 1], || {
        format!("T⊗T betti {:?}", betti(&tt))
    })?;
    let mut largest = 0;
    for k in 0..50u64 {
        let mut r = rng(SEED + 7_000 + k);
        let a = random_delta_complex(&mut r, ComplexShape::new(7, 2, 10, 60), 1);
        let b = random_delta_complex(&mut r, ComplexShape::new(6, 2, 8, 40), 1);
        ensure(a.len() <= 100 && b.len() <= 100, || {
            format!("pair {k}: factor too large")
        })?;
        let expected = common::trim(&common::kunneth(
            &common::oracle_betti(&a),
            &common::oracle_betti(&b),
        ));
        let tp = cartesian_product_triangulated(&a, &b).map_err(|e| e.to_string())?;
        s.check("factor", &a);
        s.check("factor", &b);
        s.check("tensor", &tp.tensor);
        s.check("staircase", &tp.staircase);
        let bt = betti(&tp.tensor);
        let bs = betti(&tp.staircase);
        ensure(bt == expected, || {
            format!("pair {k}: tensor {bt:?} vs Künneth {expected:?}")
        })?;
        ensure(bs == bt, || {
            format!("pair {k}: staircase {bs:?} vs tensor {bt:?}")
        })?;
        largest = largest.max(tp.tensor.len());
    }
    let elapsed = within(start, s, Duration::from_secs(300))?;
    Ok(format!(
        "T⊗T = (1,2,1), 50 pairs, largest tensor {largest} simplices, {elapsed:.2?}"
    ))
}

fn criterion_6(s: &Soundness) -> Verdict {
    ensure(s.failures.is_empty(), || s.failures.join("; "))?;
    ensure(s.checked > 1000, || {
        format!("only {} complexes checked", s.checked)
    })?;
    Ok(format!(
        "∂∂ = 0 and χ = Σ(−1)^k b_k on {} complexes",
        s.checked
    ))
}

fn configuration(json: &str) -> SncConfiguration {
    let raw: RawConfiguration = serde_json::from_str(json).expect("configuration parses");
    SncConfiguration::from_raw(&raw).expect("configuration validates")
}

/// Two coordinate planes `x = 0`, `y = 0` in 3-space.
fn two_planes() -> SncConfiguration {
    configuration(
        r#"{"vertices":["a","b"],"simplices":[{"id":"ab","facets":["b","a"]}],
            "component_meta":{"a":{"name":"x=0","dim":2},"b":{"name":"y=0","dim":2},"ab":{"name":"z-axis","dim":1}},
            "ambient_dim":3,"divisor_regime":true}"#,
    )
}

fn one_plane() -> SncConfiguration {
    configuration(
        r#"{"vertices":["a"],"component_meta":{"a":{"name":"x=0","dim":2}},"ambient_dim":3,"divisor_regime":true}"#,
    )
}

/// The three axes and a disjoint line.
fn axes_and_far_line() -> SncConfiguration {
    let mut raw = builtin::three_axes().to_raw();
    raw.vertices.push("w".into());
    raw.component_meta.insert(
        "w".into(),
        dual_complex::snc::ComponentMeta {
            name: "far line".into(),
            dim: 1,
        },
    );
    SncConfiguration::from_raw(&raw).expect("disjoint line is a valid stratum")
}

fn identity(cfg: &SncConfiguration, filtration: &[&[&str]]) -> EmbeddedPair {
    let map = SimplicialMap::identity(Arc::new(cfg.dual().clone()));
    let levels = filtration
        .iter()
        .map(|l| cfg.dual().subset(l.iter().copied()).unwrap())
        .collect();
    EmbeddedPair::new(cfg.clone(), cfg.clone(), map, levels).expect("identity pair")
}

fn included(
    inner: SncConfiguration,
    outer: SncConfiguration,
    filtration: &[&[&str]],
) -> EmbeddedPair {
    let vm: BTreeMap<SimplexId, SimplexId> = inner
        .dual()
        .vertex_indices()
        .map(|v| (inner.dual().id_of(v).clone(), inner.dual().id_of(v).clone()))
        .collect();
    let levels: Vec<Vec<SimplexId>> = filtration
        .iter()
        .map(|l| l.iter().map(|&x| x.into()).collect())
        .collect();
    EmbeddedPair::from_vertex_map(inner, outer, &vm, &BTreeMap::new(), &levels)
        .expect("inclusion pair")
}

fn both(center: BlowUpCenter) -> PairStep {
    PairStep {
        inner: center.clone(),
        outer: center,
    }
}

fn hypothesis_suite() -> Vec<(&'static str, EmbeddedPair, PairScript)> {
    let script = |steps: Vec<PairStep>| PairScript { steps };
    let ab = || BlowUpCenter::intersection("ab", "v");
    let origin = || BlowUpCenter::intersection("abc", "v");
    vec![
        (
            "three axes, origin",
            identity(&builtin::three_axes(), &[]),
            script(vec![both(origin())]),
        ),
        (
            "three axes with filtration, origin",
            identity(&builtin::three_axes(), &[&["a"], &["a", "b", "ab"]]),
            script(vec![both(origin())]),
        ),
        (
            "triangle of lines, node ab",
            identity(&builtin::triangle_of_lines(), &[]),
            script(vec![both(ab())]),
        ),
        (
            "triangle of lines, nodes ab and bc",
            identity(&builtin::triangle_of_lines(), &[&["a"]]),
            script(vec![
                both(ab()),
                both(BlowUpCenter::intersection("bc", "w")),
            ]),
        ),
        (
            "coordinate planes, origin",
            identity(&builtin::coordinate_planes(), &[]),
            script(vec![both(origin())]),
        ),
        (
            "coordinate planes, axis then origin",
            identity(&builtin::coordinate_planes(), &[&["c"]]),
            script(vec![
                both(ab()),
                both(BlowUpCenter::intersection("v#c", "w")),
            ]),
        ),
        (
            "two planes in three, axis",
            included(two_planes(), builtin::coordinate_planes(), &[&["a"]]),
            script(vec![both(ab())]),
        ),
        (
            "two planes in three, origin",
            included(two_planes(), builtin::coordinate_planes(), &[]),
            script(vec![PairStep {
                inner: BlowUpCenter::inside("ab", "v")
                    .with_delta(["a", "b", "ab"])
                    .with_center_dim(0),
                outer: origin(),
            }]),
        ),
        (
            "one plane in three, axis",
            included(one_plane(), builtin::coordinate_planes(), &[]),
            script(vec![PairStep {
                inner: BlowUpCenter::inside("a", "v")
                    .with_delta(["a"])
                    .with_center_dim(1),
                outer: ab(),
            }]),
        ),
        (
            "one plane in three, origin",
            included(one_plane(), builtin::coordinate_planes(), &[&["a"]]),
            script(vec![PairStep {
                inner: BlowUpCenter::inside("a", "v")
                    .with_delta(["a"])
                    .with_center_dim(0),
                outer: origin(),
            }]),
        ),
    ]
}

fn criterion_7(_: &mut Soundness) -> Verdict {
    let suite = hypothesis_suite();
    let mut steps = 0;
    for (name, pair, script) in &suite {
        let history = track_embedded_pair(pair, script).map_err(|e| format!("{name}: {e}"))?;
        ensure(history.steps.len() == script.steps.len(), || {
            format!("{name}: stopped early")
        })?;
        ensure(
            history
                .initial_inner_betti
                .agrees_with(&history.initial_outer_betti),
            || format!("{name}: initial betti differ"),
        )?;
        for r in &history.steps {
            ensure(r.failed().is_empty(), || {
                format!("{name}: step {} flags {:?}", r.index, r.failed())
            })?;
            ensure(r.inner_betti.agrees_with(&r.outer_betti), || {
                format!("{name}: betti differ at {}", r.index)
            })?;
            ensure(
                !pair.filtration().is_empty() == r.filtration_persists.is_some(),
                || format!("{name}: filtration check missing"),
            )?;
        }
        steps += script.steps.len();
    }

    let vm: BTreeMap<SimplexId, SimplexId> = ["a", "b", "c"]
        .iter()
        .map(|v| ((*v).into(), (*v).into()))
        .collect();
    let circle_in_disk = EmbeddedPair::from_vertex_map(
        builtin::triangle_of_lines(),
        builtin::coordinate_planes(),
        &vm,
        &BTreeMap::new(),
        &[],
    )
    .map_err(|e| e.to_string())?;
    let h = track_embedded_pair(
        &circle_in_disk,
        &PairScript {
            steps: vec![both(BlowUpCenter::intersection("ab", "v"))],
        },
    )
    .map_err(|e| e.to_string())?;
    let r = &h.steps[0];
    ensure(r.inclusion_extends, || {
        "circle in disk: inclusion should extend".into()
    })?;
    ensure(r.failed().contains(&PairCheck::BettiAgree), || {
        format!("circle in disk flags {:?}", r.failed())
    })?;
    ensure(
        r.inner_betti.trimmed() == [1, 1] && r.outer_betti.trimmed() == [1],
        || {
            format!(
                "circle in disk betti {:?} vs {:?}",
                r.inner_betti, r.outer_betti
            )
        },
    )?;
    let circle_flags = r.failed();

    let far = included(builtin::three_axes(), axes_and_far_line(), &[]);
    let h = track_embedded_pair(
        &far,
        &PairScript {
            steps: vec![both(BlowUpCenter::intersection("abc", "v"))],
        },
    )
    .map_err(|e| e.to_string())?;
    let r = &h.steps[0];
    ensure(r.failed() == [PairCheck::BettiAgree], || {
        format!("far line flags {:?}", r.failed())
    })?;
    ensure(
        r.inner_betti.get(0) == 1 && r.outer_betti.get(0) == 2,
        || "far line: b0 should be 1 vs 2".into(),
    )?;

    Ok(format!(
        "{} pairs, {steps} steps clean; circle in disk flags {circle_flags:?}; far line flags [BettiAgree]",
        suite.len()
    ))
}

fn criterion_8(s: &mut Soundness) -> Verdict {
    let f = star_subdivision(&builtin::filled_triangle(), "abc", "v").map_err(|e| e.to_string())?;
    s.check("subdivided triangle", &f);
    let target = f.subset(["a"]).map_err(|e| e.to_string())?;
    let cert = match greedy_collapse(&f, &target).map_err(|e| e.to_string())? {
        CollapseOutcome::Collapsed(c) => c,
        CollapseOutcome::Stuck { remaining, .. } => {
            return Err(format!("stuck with {remaining:?}"))
        }
    };
    cert.verify(&f).map_err(|e| e.to_string())?;
    ensure(cert.steps.len() == (f.len() - 1) / 2, || {
        "certificate does not remove every other simplex".into()
    })?;

    let mut verified = 1;
    for k in 0..50u64 {
        let c = random_simplicial_complex(&mut rng(SEED + 900 + k), ComplexShape::new(7, 3, 4, 80));
        let first = c.simplices()[0].id().as_str().to_owned();
        let target = c.subset([first.as_str()]).map_err(|e| e.to_string())?;
        if let Some(cert) = greedy_collapse(&c, &target)
            .map_err(|e| e.to_string())?
            .certificate()
        {
            cert.verify(&c).map_err(|e| format!("complex {k}: {e}"))?;
            verified += 1;
        }
    }

    let t = builtin::circle();
    let out = greedy_collapse(&t, &t.subset(["a"]).unwrap()).map_err(|e| e.to_string())?;
    ensure(matches!(out, CollapseOutcome::Stuck { .. }), || {
        "circle collapsed".into()
    })?;
    Ok(format!("F subdivided collapses to a in {} steps, {verified} certificates re-validated, circle stuck", cert.steps.len()))
}

fn strip_timing(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).expect("report is JSON");
    v.as_object_mut().expect("report object").remove("timing");
    v
}

fn criterion_9(_: &mut Soundness) -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let p = |name: &str| data(name).to_str().unwrap().to_owned();
    let t = |name: &str| dir.path().join(name).to_str().unwrap().to_owned();
    let runs: Vec<Vec<String>> = vec![
        vec!["validate".into(), "--in".into(), p("three-axes.json")],
        vec!["homology".into(), "--in".into(), p("circle.json")],
        vec![
            "subdivide".into(),
            "--in".into(),
            p("filled-triangle.json"),
            "--tau".into(),
            "abc".into(),
            "--write".into(),
            t("sub.json"),
        ],
        vec![
            "cone-extend".into(),
            "--in".into(),
            p("circle.json"),
            "--delta".into(),
            "a,b,ab".into(),
            "--delta0".into(),
            "ab".into(),
        ],
        vec![
            "product".into(),
            "--a".into(),
            p("circle.json"),
            "--b".into(),
            p("doubled-edge.json"),
            "--triangulated".into(),
        ],
        vec![
            "blowup-run".into(),
            "--config".into(),
            p("three-axes.json"),
            "--script".into(),
            p("origin.json"),
        ],
        vec![
            "pair-run".into(),
            "--pair".into(),
            p("pair.json"),
            "--script".into(),
            p("pair-script.json"),
        ],
        vec![
            "compare".into(),
            "--a".into(),
            p("filled-triangle.json"),
            "--b".into(),
            p("circle.json"),
        ],
        vec![
            "collapse".into(),
            "--in".into(),
            p("filled-triangle.json"),
            "--target".into(),
            "a".into(),
        ],
        vec![
            "example".into(),
            "random".into(),
            "--seed".into(),
            "17".into(),
        ],
        vec!["homology".into(), "--in".into(), p("missing.json")],
    ];
    for args in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (c1, _, first) = dualcx(&args);
        let (c2, _, second) = dualcx(&args);
        ensure(c1 == c2, || format!("{}: exit codes differ", args[0]))?;
        ensure(strip_timing(&first) == strip_timing(&second), || {
            format!("{}: reports differ", args[0])
        })?;
        let strip = |s: &str| {
            s.lines()
                .filter(|l| !l.contains("elapsed_ms"))
                .collect::<Vec<_>>()
                .join("\n")
        };
        ensure(strip(&first) == strip(&second), || {
            format!("{}: report bytes differ", args[0])
        })?;
    }
    let (_, a, _) = dualcx(&["example", "random", "--seed", "17"]);
    let (_, b, _) = dualcx(&["example", "random", "--seed", "18"]);
    ensure(a["result"] != b["result"], || {
        "seed has no effect on the random example".into()
    })?;
    Ok(format!(
        "{} invocations byte-identical outside timing",
        runs.len()
    ))
}

fn main() -> ExitCode {
    let mut soundness = Soundness::default();
    let criteria: [Criterion; 5] = [
        ("1 three-axes golden file", criterion_1),
        ("2 star subdivision = cone extension", criterion_2),
        ("3 blow-up betti invariance and ledgers", criterion_3),
        ("4 disjoint cone extension", criterion_4),
        ("5 Künneth and product triangulation", criterion_5),
    ];
    let mut results: Vec<(&str, Verdict)> = Vec::new();
    for (name, run) in criteria {
        results.push((name, run(&mut soundness)));
    }
    results.push(("6 chain-complex soundness", criterion_6(&soundness)));
    let rest: [Criterion; 3] = [
        ("7 embedded-pair tracking", criterion_7),
        ("8 collapse certificates", criterion_8),
        ("9 report determinism", criterion_9),
    ];
    for (name, run) in rest {
        results.push((name, run(&mut soundness)));
    }

    let mut failed = 0;
    for (name, verdict) in &results {
        match verdict {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
