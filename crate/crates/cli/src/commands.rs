use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use orbline_core::stability::{mass_squared, RejectReason};
use orbline_core::{
    central_charge, class_of, degree, ext1_dim, gepner_check, hom_dim, is_semistable, max_gap,
    parse_rat, phase, scan, slope, theorem1_check, wild_gap, BasisLabel, Catalog, ChargeAssignment,
    Error, Exactness, GaussRat, Phase, SemistabilityVerdict, SheafObject, Slope, StabilityParam,
    Theorem1Verdict, WeightSpec, WeightType,
};
use serde_json::Value;

use crate::report::{
    gauss_pair, tau_pair, write_scan_csv, GapJson, GldimJson, VerifyJson, WindowJson,
};
use crate::{grid, Command, Failure};

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn internal(e: Error) -> Failure {
    Failure::Internal(e.to_string())
}

fn object(spec: &WeightSpec, literal: &str) -> Result<SheafObject, Failure> {
    SheafObject::parse(spec, literal).map_err(usage)
}

pub fn run(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Classify { spec } => classify(&spec.spec, out),
        Command::NormalForm { spec, element } => {
            let s = &spec.spec;
            let x = s.parse_lvec(&element).map_err(usage)?;
            writeln!(out, "normal_form: {x}")?;
            writeln!(out, "deg: {}", s.deg(&x))?;
            Ok(())
        }
        Command::K0Class { spec, obj } => {
            let s = &spec.spec;
            let e = object(s, &obj)?;
            let cls = class_of(s, &e);
            writeln!(out, "object: {e}")?;
            writeln!(out, "class: {cls}")?;
            writeln!(out, "rank: {}", cls.rank())?;
            writeln!(out, "degree: {}", degree(s, &cls))?;
            Ok(())
        }
        Command::Charge { spec, tau, obj } => charge(&spec.spec, &tau.tau, &obj, out),
        Command::Homdim {
            spec,
            from,
            to,
            ext,
        } => {
            let s = &spec.spec;
            let (e, f) = (object(s, &from)?, object(s, &to)?);
            if ext {
                writeln!(out, "ext1: {}", ext1_dim(s, &e, &f))?;
            } else {
                writeln!(out, "hom: {}", hom_dim(s, &e, &f))?;
            }
            Ok(())
        }
        Command::Gldim {
            spec,
            tau,
            window,
            json,
        } => {
            let s = &spec.spec;
            let (l, n) = window.resolve(s);
            let catalog = Catalog::build(s, &tau.tau, l, n).map_err(usage)?;
            let report = max_gap(&catalog).map_err(internal)?;
            if json {
                let doc = GldimJson {
                    gap: GapJson::from(&report),
                    weights: s.to_string(),
                    tau: tau_pair(&tau.tau),
                    window: WindowJson { l, n },
                };
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&doc).map_err(|e| Failure::Internal(e.to_string()))?
                )?;
            } else {
                writeln!(out, "value: {}", report.value.exact_string())?;
                writeln!(out, "float: {}", report.float_value)?;
                writeln!(out, "exactness: {}", report.exactness)?;
                let kind = if report.witness.ext { "ext1" } else { "hom" };
                writeln!(
                    out,
                    "witness: {kind} {} -> {}",
                    report.witness.a, report.witness.b
                )?;
                writeln!(out, "catalog: {} objects, L = {l}, N = {n}", catalog.len())?;
            }
            Ok(())
        }
        Command::Scan {
            spec,
            grid,
            out: path,
            window,
            threads,
        } => {
            let s = &spec.spec;
            let (l, n) = window.resolve(s);
            let points = grid::parse_grid(&grid)?;
            let table = match threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| Failure::Internal(e.to_string()))?
                    .install(|| scan(s, &points, l, n)),
                None => scan(s, &points, l, n),
            }
            .map_err(usage)?;
            let written = match path.as_deref() {
                None => write_scan_csv(&table, &mut *out),
                Some(p) if p == Path::new("-") => write_scan_csv(&table, &mut *out),
                Some(p) => write_scan_csv(&table, std::fs::File::create(p)?),
            };
            written.map_err(|e| Failure::Internal(e.to_string()))
        }
        Command::VerifyTheorems { spec, tau, window } => {
            let (l, n) = window.resolve(&spec.spec);
            verify(&spec.spec, &tau.tau, l, n, out)
        }
        Command::CheckThm1 { spec, charges } => check_thm1(&spec.spec, &charges, out),
    }
}

fn classify(s: &WeightSpec, out: &mut dyn Write) -> Result<(), Failure> {
    let omega = s.omega();
    writeln!(out, "weights: {s}")?;
    writeln!(out, "lcm: {}", s.lcm())?;
    writeln!(out, "chi: {}", s.euler_char())?;
    writeln!(out, "type: {}", s.classify())?;
    writeln!(out, "omega: {omega}")?;
    writeln!(out, "deg_omega: {}", s.deg(&omega))?;
    Ok(())
}

fn charge(
    s: &WeightSpec,
    sigma: &StabilityParam,
    literal: &str,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let e = object(s, literal)?;
    let cls = class_of(s, &e);
    let z = central_charge(s, sigma, &cls);
    writeln!(out, "object: {e}")?;
    writeln!(out, "Z: {z}")?;
    writeln!(out, "mass_squared: {}", mass_squared(&z))?;
    match phase(s, sigma, &e) {
        Ok(p) => writeln!(out, "phase: {} ({})", p.exact_string(), p.to_f64())?,
        Err(err) => return Err(usage(err)),
    }
    match slope(s, &cls) {
        Ok(Slope::Finite(m)) => writeln!(out, "slope: {m}")?,
        Ok(Slope::Infinite) => writeln!(out, "slope: inf")?,
        Err(_) => writeln!(out, "slope: undefined")?,
    }
    let verdict = match is_semistable(sigma, &e, &s.euler_char()) {
        SemistabilityVerdict::Semistable(c) => format!("{c:?}"),
        SemistabilityVerdict::Unknown => "unknown".into(),
    };
    writeln!(out, "semistable: {verdict}")?;
    Ok(())
}

/// Runs every check for one weight type and prints a JSON report.
fn verify(
    s: &WeightSpec,
    sigma: &StabilityParam,
    l: u32,
    n: u32,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let mut failures = Vec::new();
    let kind = s.classify();

    let z = ChargeAssignment::from_slope(s, sigma);
    let theorem1 = match theorem1_check(s, &z) {
        Theorem1Verdict::Accept(t) if &t == sigma.tau() => "accept".to_string(),
        other => {
            failures.push(format!("theorem1 round trip: {other:?}"));
            "reject".to_string()
        }
    };
    for (name, perturbed, expect) in perturbations(s, &z) {
        match theorem1_check(s, &perturbed) {
            Theorem1Verdict::Reject(reason) if expect(&reason) => {}
            other => failures.push(format!("theorem1 {name} perturbation: {other:?}")),
        }
    }

    let gepner = gepner_check(s, sigma);
    if gepner != (kind == WeightType::Tubular) {
        failures.push(format!("gepner check is {gepner} for {kind} type"));
    }

    let catalog = Catalog::build(s, sigma, l, n).map_err(usage)?;
    let report = max_gap(&catalog).map_err(internal)?;
    let one = Phase::integer(1);
    let mut lower_bound = None;
    let gldim = match kind {
        WeightType::Domestic | WeightType::Tubular => {
            if report.value != one || report.exactness != Exactness::ExactGlobal {
                failures.push(format!(
                    "expected gldim 1 (exact), found {} ({})",
                    report.value, report.exactness
                ));
            }
            format!("{} (exact)", report.value)
        }
        WeightType::Wild => {
            let wg = wild_gap(s, sigma).map_err(internal)?;
            if wg.value <= one {
                failures.push(format!("wild gap {} is not above 1", wg.value));
            }
            if report.value < wg.value {
                failures.push(format!(
                    "max gap {} below wild gap {}",
                    report.value, wg.value
                ));
            }
            lower_bound = Some(report.float_value);
            format!(">= {} (window lower bound)", report.value)
        }
    };

    let doc = VerifyJson {
        weights: s.to_string(),
        weight_type: kind.to_string(),
        chi: s.euler_char().to_string(),
        tau: tau_pair(sigma),
        window: WindowJson { l, n },
        theorem1,
        gepner,
        gldim,
        lower_bound,
        max_gap: GapJson::from(&report),
        passed: failures.is_empty(),
        failures,
    };
    let text = serde_json::to_string_pretty(&doc).map_err(|e| Failure::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    if doc.passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

type Perturbation = (&'static str, ChargeAssignment, fn(&RejectReason) -> bool);

fn perturbations(s: &WeightSpec, z: &ChargeAssignment) -> Vec<Perturbation> {
    let mut out: Vec<Perturbation> = Vec::new();

    let mut mass = z.clone();
    mass.set(
        BasisLabel::S,
        z.get(&BasisLabel::S) + &GaussRat::from_ints(1, 0),
    );
    out.push(("mass", mass, |r| matches!(r, RejectReason::Mass { .. })));

    if let Some(point) = (0..s.len()).find(|&i| s.weight(i) > 1) {
        let label = BasisLabel::Tube { point, index: 1 };
        let mut tube = z.clone();
        tube.set(
            label.clone(),
            z.get(&label) + &GaussRat::real(orbline_core::rat(1, 2)),
        );
        out.push(("tube", tube, |r| {
            matches!(r, RejectReason::TubeConsistency { .. })
        }));
    }

    let mut upper = z.clone();
    let tau = z.get(&BasisLabel::O);
    upper.set(
        BasisLabel::O,
        GaussRat::new(tau.re.clone(), -tau.im.clone()),
    );
    out.push(("phase", upper, |r| {
        matches!(r, RejectReason::StructureSheafPhase { .. })
    }));
    out
}

fn json_rat(v: &Value) -> Result<orbline_core::Rat, Failure> {
    match v {
        Value::String(s) => parse_rat(s).map_err(usage),
        Value::Number(n) if n.is_i64() => Ok(orbline_core::rat(n.as_i64().unwrap_or_default(), 1)),
        other => Err(Failure::Usage(format!(
            "expected a rational string, got {other}"
        ))),
    }
}

fn check_thm1(s: &WeightSpec, path: &Path, out: &mut dyn Write) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let doc: BTreeMap<String, Vec<Value>> = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut values = BTreeMap::new();
    for (key, pair) in &doc {
        let label = BasisLabel::parse(s, key).map_err(usage)?;
        let [re, im] = &pair[..] else {
            return Err(Failure::Usage(format!("charge of {key} must be [re, im]")));
        };
        values.insert(label, GaussRat::new(json_rat(re)?, json_rat(im)?));
    }
    let z = ChargeAssignment::new(s, values).map_err(usage)?;
    match theorem1_check(s, &z) {
        Theorem1Verdict::Accept(tau) => {
            let [re, im] = gauss_pair(&tau);
            writeln!(out, "accept: tau = {re},{im}")?;
            Ok(())
        }
        Theorem1Verdict::Reject(reason) => {
            writeln!(out, "reject: {reason}")?;
            Err(Failure::Verification)
        }
    }
}
