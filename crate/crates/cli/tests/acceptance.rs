//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Everything is exact; there are no tolerances. Sample counts are the
//! minimums the criteria ask for.

#[path = "../../core/tests/support/oracles.rs"]
mod oracles;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};

use serde_json::{json, Value};

use gln_dual::arith::{Rational, TwistCoord};
use gln_dual::check::{injectivity_targets, run_check, CheckConfig, CheckKind};
use gln_dual::homology::{block_hp, component_poincare};
use gln_dual::params::{
    beta, infinitesimal_character, langlands_data, sp_realization_check, validate_param,
    ExtendedPoint, ParamSpec, SegmentParam,
};
use gln_dual::partitions::{enumerate_partitions, Partition};
use gln_dual::sample::{random_twist, rng_for};
use gln_dual::spectrum::{component_catalog, enumerate_inertial_classes, ComponentIndex};
use gln_dual::tempered::{is_tempered, retract};
use gln_dual::{CuspidalLabel, Execution, InertialClass, Inventory, WDParam};
use gln_dual_cli::{cmd_catalog, render};

const DIAGRAM_SAMPLES: usize = 10_000;
const MAX_RANK: u32 = 8;
const INJECTIVITY_PAIRS: usize = 1_000;
const INJECTIVITY_MAX_MULTIPLICITY: u32 = 4;
const RETRACTION_SAMPLES: usize = 10_000;
const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(holds: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if holds {
        Ok(())
    } else {
        Err(message())
    }
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn r(text: &str) -> Rational {
    text.parse().unwrap()
}

fn tc(s: &str, theta: &str) -> TwistCoord {
    TwistCoord::new(r(s), r(theta))
}

fn chi_inventory() -> Inventory {
    Inventory::new(vec![CuspidalLabel::new("chi", 1, 1)]).unwrap()
}

fn param(inv: &Inventory, n: u32, segments: &[(&str, &str, &str, u32)]) -> WDParam {
    let segments = segments
        .iter()
        .map(|(label, s, theta, length)| SegmentParam::new(*label, tc(s, theta), *length))
        .collect();
    validate_param(&ParamSpec { n, segments }, inv, n).unwrap()
}

fn component(entries: &[(&str, &[u32])]) -> ComponentIndex {
    ComponentIndex(
        entries
            .iter()
            .map(|(id, parts)| (id.to_string(), Partition::new(parts.to_vec()).unwrap()))
            .collect(),
    )
}

fn gl2_worked_example() -> Outcome {
    let inv = chi_inventory();
    let report = cmd_catalog(&inv, 2).map_err(|e| e.to_string())?;
    let rendered = render(&report).map_err(|e| e.to_string())?;
    let expected =
        std::fs::read_to_string(golden("gl2_catalog.json")).map_err(|e| e.to_string())?;
    ensure(rendered == expected, || {
        "catalog differs from golden gl2_catalog.json".into()
    })?;
    let class = &report.classes[0];
    let shapes: Vec<Value> = class.components.iter().map(|c| json!(c.shape)).collect();
    ensure(
        report.classes.len() == 1 && class.components.len() == 2,
        || "expected one class, two components".into(),
    )?;
    ensure(
        shapes == vec![json!([["chi", 2, 1]]), json!([["chi", 1, 2]])],
        || format!("shapes {shapes:?}"),
    )?;

    let gold: Value =
        serde_json::from_str(&std::fs::read_to_string(golden("gl2_beta.json")).unwrap()).unwrap();
    let twisted = &gold["twisted_component"];
    let z: TwistCoord = serde_json::from_value(twisted["coordinate"].clone()).unwrap();
    let x = ExtendedPoint::new(
        component(&[("chi", &[2])]),
        BTreeMap::from([(("chi".to_string(), 2), vec![z])]),
        &inv,
    )
    .unwrap();
    ensure(json!(beta(&x)) == twisted["beta"], || {
        format!("beta on [2]: {}", json!(beta(&x)))
    })?;

    let identity = &gold["identity_component"];
    let zs: Vec<TwistCoord> = serde_json::from_value(identity["coordinates"].clone()).unwrap();
    let y = ExtendedPoint::new(
        component(&[("chi", &[1, 1])]),
        BTreeMap::from([(("chi".to_string(), 1), zs)]),
        &inv,
    )
    .unwrap();
    ensure(json!(beta(&y)) == identity["beta"], || {
        format!("beta on [1,1]: {}", json!(beta(&y)))
    })?;

    // and on grid points: z ↦ {z, q^{-1}z}, {z1, z2} ↦ {z1, z2}
    let mut rng = rng_for(SEED, 1);
    for _ in 0..1_000 {
        let (z, z1, z2) = (
            random_twist(&mut rng),
            random_twist(&mut rng),
            random_twist(&mut rng),
        );
        let on_two = ExtendedPoint::new(
            component(&[("chi", &[2])]),
            BTreeMap::from([(("chi".to_string(), 2), vec![z])]),
            &inv,
        )
        .unwrap();
        let mut expected = vec![
            ("chi".to_string(), z),
            (
                "chi".to_string(),
                TwistCoord::new(z.s() + Rational::ONE, z.theta()),
            ),
        ];
        expected.sort();
        ensure(beta(&on_two).support == expected, || {
            format!("beta twist rule fails at {z}")
        })?;
        let on_pairs = ExtendedPoint::new(
            component(&[("chi", &[1, 1])]),
            BTreeMap::from([(("chi".to_string(), 1), vec![z1, z2])]),
            &inv,
        )
        .unwrap();
        let mut expected = vec![("chi".to_string(), z1), ("chi".to_string(), z2)];
        expected.sort();
        ensure(beta(&on_pairs).support == expected, || {
            format!("beta identity rule fails at {z1}, {z2}")
        })?;
    }
    Ok("catalog and beta match golden JSON; 1000 grid points per component".into())
}

fn paper_point_examples() -> Outcome {
    let inv = chi_inventory();
    let steinberg = param(&inv, 2, &[("chi", "-1/2", "0", 2)]);
    let support: Vec<(String, TwistCoord)> = vec![
        ("chi".into(), tc("-1/2", "0")),
        ("chi".into(), tc("1/2", "0")),
    ];
    ensure(
        infinitesimal_character(&steinberg).support == support,
        || "Steinberg inf.ch.".into(),
    )?;

    let det = param(&inv, 2, &[("chi", "-1/2", "0", 1), ("chi", "1/2", "0", 1)]);
    let order = langlands_data(&det);
    ensure(
        order[0].twist == tc("1/2", "0") && order[1].twist == tc("-1/2", "0"),
        || format!("Langlands order {order:?}"),
    )?;
    let retracted = retract(&det);
    ensure(
        retracted
            .segments()
            .iter()
            .all(|s| s.twist == TwistCoord::IDENTITY),
        || "retract of trivial-on-det".into(),
    )?;
    ensure(is_tempered(&retracted) && !is_tempered(&det), || {
        "temperedness".into()
    })?;
    Ok("Steinberg support, Langlands order, retraction to (0,0)".into())
}

fn diagram_commutes() -> Outcome {
    let config = CheckConfig {
        seed: SEED,
        samples: DIAGRAM_SAMPLES,
        max_n: MAX_RANK,
        ..CheckConfig::default()
    };
    let report =
        run_check(CheckKind::Diagram, &config, Execution::default()).map_err(|e| e.to_string())?;
    ensure(report.instances >= DIAGRAM_SAMPLES, || {
        "too few instances".into()
    })?;
    ensure(report.passed, || {
        format!(
            "{} failures, first: {}",
            report.failures.len(),
            report.failures[0]
        )
    })?;
    Ok(format!(
        "{} random parameters, n <= {MAX_RANK}, 0 failures",
        report.instances
    ))
}

fn two_label_inventory() -> Inventory {
    Inventory::new(vec![
        CuspidalLabel::new("chi", 1, 1),
        CuspidalLabel::new("tau", 2, 2),
    ])
    .unwrap()
}

fn beta_injective() -> Outcome {
    let inv = two_label_inventory();
    // chi has dim 1 and tau dim 2, so ranks up to 4 + 2·4 reach every class
    // with both multiplicities at most 4
    let max_n = INJECTIVITY_MAX_MULTIPLICITY * 3;
    let components = injectivity_targets(&inv, max_n, INJECTIVITY_MAX_MULTIPLICITY).len();
    ensure(components == 12 * 12 - 1, || {
        format!("expected 143 components, found {components}")
    })?;
    let config = CheckConfig {
        seed: SEED,
        samples: INJECTIVITY_PAIRS,
        max_n,
        inventory: Some(inv),
        max_multiplicity: INJECTIVITY_MAX_MULTIPLICITY,
    };
    let report = run_check(CheckKind::Injectivity, &config, Execution::default())
        .map_err(|e| e.to_string())?;
    ensure(report.instances >= components * INJECTIVITY_PAIRS, || {
        format!("only {} pairs", report.instances)
    })?;
    ensure(report.passed, || {
        format!(
            "{} failures, first: {}",
            report.failures.len(),
            report.failures[0]
        )
    })?;
    Ok(format!(
        "{components} components x {INJECTIVITY_PAIRS} uniformly sampled pairs, 0 failures \
         (collisions exist on mixed-part components, see core tests/injectivity.rs)"
    ))
}

fn retraction_properties() -> Outcome {
    let config = CheckConfig {
        seed: SEED,
        samples: RETRACTION_SAMPLES,
        max_n: MAX_RANK,
        ..CheckConfig::default()
    };
    let report = run_check(CheckKind::Retraction, &config, Execution::default())
        .map_err(|e| e.to_string())?;
    ensure(report.passed, || {
        format!(
            "{} failures, first: {}",
            report.failures.len(),
            report.failures[0]
        )
    })?;
    Ok(format!(
        "{} random parameters, 9 properties each, 0 failures",
        report.instances
    ))
}

fn combinatorial_oracles() -> Outcome {
    for r in 0..=10 {
        let count = enumerate_partitions(r).len() as u64;
        ensure(count == oracles::brute_partition_count(r), || {
            format!("p({r})")
        })?;
        let total: u128 = enumerate_partitions(r)
            .iter()
            .map(Partition::conjugacy_class_size)
            .sum();
        ensure(total == oracles::factorial(r), || {
            format!("class sizes of S_{r}")
        })?;
    }
    for r in 1..=6 {
        for p in enumerate_partitions(r) {
            ensure(
                p.centralizer_order() == oracles::brute_centralizer_order(p.parts()),
                || format!("Z({p})"),
            )?;
        }
    }
    let inv = Inventory::new(vec![
        CuspidalLabel::new("chi", 1, 1),
        CuspidalLabel::new("tau", 1, 1),
    ])
    .unwrap();
    let mut classes = 0;
    for n in 1..=20 {
        for cls in enumerate_inertial_classes(&inv, n)
            .into_iter()
            .filter(|c| c.max_multiplicity() <= 10)
        {
            let expected: u64 = cls
                .entries()
                .map(|(_, m)| oracles::brute_partition_count(m))
                .product();
            ensure(component_catalog(&cls).len() as u64 == expected, || {
                format!("catalog size of {cls:?}")
            })?;
            classes += 1;
        }
    }
    Ok(format!(
        "p(r) for r <= 10, centralizers in S_r for r <= 6, {classes} catalogs"
    ))
}

fn hp_numbers() -> Outcome {
    let inv = chi_inventory();
    let gl2 = InertialClass::new(&inv, [("chi", 2)]).unwrap();
    ensure(block_hp(&gl2) == (2, 2), || {
        format!("GL(2) block {:?}", block_hp(&gl2))
    })?;
    for r in 1..=12 {
        let cls = InertialClass::new(&inv, [("chi", r)]).unwrap();
        let expected = oracles::brute_single_label_hp(r);
        ensure(block_hp(&cls) == (expected, expected), || {
            format!("block ({r}) {:?}", block_hp(&cls))
        })?;
    }
    let two = Inventory::new(vec![
        CuspidalLabel::new("chi", 1, 1),
        CuspidalLabel::new("tau", 2, 1),
    ])
    .unwrap();
    let mut blocks = 0;
    for n in 1..=10 {
        for cls in enumerate_inertial_classes(&two, n) {
            for c in component_catalog(&cls) {
                let p = component_poincare(&c.shape);
                let k = c.shape.k() as u32;
                ensure(p.evaluate(1) == 1i128 << k && p.evaluate(-1) == 0, || {
                    format!("P of {:?}", c.index)
                })?;
            }
            let (even, odd) = block_hp(&cls);
            ensure(even == odd, || format!("hp0 != hp1 for {cls:?}"))?;
            blocks += 1;
        }
    }
    Ok(format!("GL(2) block (2,2); single-label blocks r <= 12; P(1), P(-1), hp0 = hp1 over {blocks} blocks"))
}

fn sp_relation() -> Outcome {
    for r in 1..=10 {
        ensure(sp_realization_check(r), || format!("sp({r})"))?;
    }
    Ok("r = 1..10".into())
}

fn product_law() -> Outcome {
    let inv = Inventory::new(vec![
        CuspidalLabel::new("chi", 1, 1),
        CuspidalLabel::new("tau", 2, 1),
    ])
    .unwrap();
    let joint = InertialClass::new(&inv, [("chi", 2), ("tau", 1)]).unwrap();
    let left = InertialClass::new(&inv, [("chi", 2)]).unwrap();
    let right = InertialClass::new(&inv, [("tau", 1)]).unwrap();
    let mut expected = Vec::new();
    for a in component_catalog(&left) {
        for b in component_catalog(&right) {
            let mut merged = a.index.0.clone();
            merged.extend(b.index.0.clone());
            expected.push(ComponentIndex(merged));
        }
    }
    let mut actual: Vec<ComponentIndex> = component_catalog(&joint)
        .into_iter()
        .map(|c| c.index)
        .collect();
    expected.sort();
    actual.sort();
    ensure(actual == expected, || {
        format!("catalog {actual:?} vs {expected:?}")
    })?;
    let ((le, lo), (re, ro)) = (block_hp(&left), block_hp(&right));
    let product = (le * re + lo * ro, le * ro + lo * re);
    let joint_hp = block_hp(&joint);
    ensure(joint_hp == product, || {
        format!("block_hp {joint_hp:?} vs Kunneth {product:?}")
    })?;
    Ok(format!(
        "2 x 1 components; block_hp {joint_hp:?} = {:?} (x) {:?}",
        (le, lo),
        (re, ro)
    ))
}

fn run_binary(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_gln-dual"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("{args:?} exited with {:?}", out.status.code())
    })?;
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let inv = golden("chi_inventory.json");
    let inv = inv.to_str().unwrap();
    let catalog = ["catalog", "--inventory", inv, "--n", "6"];
    ensure(run_binary(&catalog)? == run_binary(&catalog)?, || {
        "catalog output differs".into()
    })?;
    for check in ["diagram", "retraction"] {
        let args = ["check", check, "--seed", "42", "--samples", "2000"];
        ensure(run_binary(&args)? == run_binary(&args)?, || {
            format!("check {check} output differs")
        })?;
    }
    let injectivity = [
        "check",
        "injectivity",
        "--inventory",
        inv,
        "--n",
        "4",
        "--seed",
        "42",
        "--samples",
        "300",
    ];
    ensure(
        run_binary(&injectivity)? == run_binary(&injectivity)?,
        || "check injectivity output differs".into(),
    )?;
    Ok("catalog and all three checks byte-identical across runs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("GL(2) worked example", gl2_worked_example),
        (
            "point examples: Steinberg, Langlands order, retraction",
            paper_point_examples,
        ),
        (
            "commutative diagram beta . alpha = inf.ch.",
            diagram_commutes,
        ),
        ("beta injective on components", beta_injective),
        ("deformation retraction properties", retraction_properties),
        ("combinatorial oracles", combinatorial_oracles),
        ("periodic cyclic homology dimensions", hp_numbers),
        ("sp(r) relation", sp_relation),
        ("product law", product_law),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (number, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", number + 1),
            Err(reason) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {reason}", number + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
