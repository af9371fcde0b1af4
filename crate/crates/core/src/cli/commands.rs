use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use crate::algebra::{Dga, DgaMorphism, PrimeField};
use crate::catalog::{catalog, catalog_entry, lambda2_product};
use crate::diagrams::{chekanov_dga, rotation_number, validate, DiagramFile};
use crate::homology::{
    betti, cone_feasible, find_augmentations, linearise, not_twist_spun_report, Augmentation,
    Feasibility, Verdict,
};
use crate::spun::{twist_spun_dga, SpunOptions};
use crate::variety::{
    augmentation_points, basis_change_scan, catalog_polynomial, line_containment, meets_line,
    polynomial_locus, Containment, LocusPolynomial, TorusPointSet,
};

use super::args::{
    AugmentArgs, CatalogCmd, Cli, Command, DgaCmd, LinhomArgs, ObstructCmd, SpinArgs, VarietyArgs,
};
use super::dgafile::{load_dga, save_dga, verify, Provenance};
use super::{CliError, Outcome, EXIT_OBSTRUCTION, EXIT_OK};

type Res = Result<Outcome, CliError>;

pub(super) fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Catalog(_) => "catalog list",
        Command::Dga(DgaCmd::Check { .. }) => "dga check",
        Command::Dga(DgaCmd::FromDiagram { .. }) => "dga from-diagram",
        Command::Spin(_) => "spin",
        Command::Augment(_) => "augment",
        Command::Linhom(_) => "linhom",
        Command::ConeCheck { .. } => "cone-check",
        Command::Obstruct(_) => "obstruct product",
        Command::Variety(_) => "variety",
    }
}

pub(super) fn dispatch(cli: &Cli) -> Res {
    match &cli.command {
        Command::Catalog(CatalogCmd::List) => catalog_list(),
        Command::Dga(DgaCmd::Check { dga, p }) => dga_check(dga, *p, cli.no_verify),
        Command::Dga(DgaCmd::FromDiagram { file, p, output }) => {
            from_diagram(file, *p, output.as_deref())
        }
        Command::Spin(a) => spin(a, cli.no_verify),
        Command::Augment(a) => augment(a, cli.no_verify),
        Command::Linhom(a) => linhom(a, cli.no_verify),
        Command::ConeCheck { dims } => cone_check(dims),
        Command::Obstruct(ObstructCmd::Product { r }) => obstruct_product(*r),
        Command::Variety(a) => variety(a, cli.no_verify),
    }
}

fn ok(text: String, json: Value) -> Res {
    Ok(Outcome {
        text,
        json,
        code: EXIT_OK,
    })
}

fn field(p: u32) -> Result<PrimeField, CliError> {
    PrimeField::new(p).map_err(|e| CliError::Invalid(e.to_string()))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// A catalog name or a DGA file. Catalog algebras are built over `F_p`;
/// files must already be over `F_p` when `require_p` is set.
fn resolve(
    arg: &str,
    p: u32,
    require_p: bool,
    no_verify: bool,
) -> Result<(Dga, Option<Provenance>), CliError> {
    if let Ok(entry) = catalog_entry(arg) {
        let a = entry
            .dga(field(p)?)?
            .ok_or_else(|| CliError::Invalid(format!("catalog entry `{arg}` has no algebra")))?;
        let prov = match entry.spun(field(p)?)? {
            Some(s) => Provenance::Spun(s.provenance()),
            None => Provenance::Catalog { entry: arg.into() },
        };
        return Ok((a, Some(prov)));
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(CliError::Usage(format!(
            "`{arg}` is neither a catalog entry nor a file"
        )));
    }
    let (a, file) = load_dga(&read(path)?, no_verify)?;
    if require_p && a.field().characteristic() != p {
        return Err(CliError::Invalid(format!(
            "`{arg}` is over F_{} but F_{p} was requested",
            a.field().characteristic()
        )));
    }
    Ok((a, file.provenance))
}

fn catalog_list() -> Res {
    let mut text = String::new();
    let mut rows = Vec::new();
    for e in catalog() {
        let rot = e.rotation_number();
        let rot_s = rot.map_or("-".to_string(), |r| r.to_string());
        let _ = writeln!(
            text,
            "{:<14} {:<10} rot {:>2}  {}",
            e.name,
            e.kind(),
            rot_s,
            e.notes
        );
        rows.push(
            json!({ "name": e.name, "kind": e.kind(), "rotation_number": rot, "notes": e.notes }),
        );
    }
    ok(text, json!({ "entries": rows }))
}

fn describe(a: &Dga) -> (String, Value) {
    let mut text = format!("{} over F_{}\n", a.name(), a.field().characteristic());
    let mut gens = Vec::new();
    for g in a.ids() {
        let c = a.gen(g);
        let d = a.render(a.differential(g));
        let _ = writeln!(
            text,
            "  d {} = {}    (degree {}, length {})",
            c.name, d, c.degree, c.length
        );
        gens.push(json!({ "name": c.name, "degree": c.degree, "length": c.length.to_string(), "differential": d }));
    }
    (
        text,
        json!({ "name": a.name(), "characteristic": a.field().characteristic(), "generators": gens }),
    )
}

fn dga_check(arg: &str, p: u32, no_verify: bool) -> Res {
    let (a, _) = resolve(arg, p, false, true)?;
    let problems = verify(&a);
    if !problems.is_empty() && !no_verify {
        return Err(CliError::Verification(problems.join("; ")));
    }
    let (mut text, mut v) = describe(&a);
    text.push_str(if problems.is_empty() {
        "all checks pass\n"
    } else {
        "checks skipped (--no-verify)\n"
    });
    v["problems"] = json!(problems);
    v["verified"] = json!(!no_verify);
    ok(text, v)
}

fn from_diagram(path: &Path, p: u32, output: Option<&Path>) -> Res {
    let file = DiagramFile::from_json(&read(path)?)?;
    let d = validate(file)?;
    let a = chekanov_dga(&d, field(p)?)?;
    let saved = save_dga(
        &a,
        Some(Provenance::Diagram {
            name: d.name().into(),
        }),
        true,
    );
    let (mut text, mut v) = describe(&a);
    let _ = writeln!(text, "rotation number {}", rotation_number(&d));
    v["rotation_number"] = json!(rotation_number(&d));
    if let Some(o) = output {
        write_file(o, &saved)?;
    } else {
        v["file"] = serde_json::from_str(&saved).expect("saved DGA is JSON");
    }
    ok(text, v)
}

fn parse_phi(a: &Dga, arg: &str) -> Result<DgaMorphism, CliError> {
    let mut images = DgaMorphism::identity(a).images().to_vec();
    if arg == "id" {
        return Ok(DgaMorphism::new(images));
    }
    for line in read(Path::new(arg))?.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("expected `x = polynomial`, got `{line}`")))?;
        let g = a
            .index_of(lhs.trim())
            .ok_or_else(|| CliError::Parse(format!("unknown generator `{}`", lhs.trim())))?;
        images[g as usize] = a.parse(rhs.trim())?;
    }
    Ok(DgaMorphism::new(images))
}

fn spin(args: &SpinArgs, no_verify: bool) -> Res {
    let (a, _) = resolve(&args.dga, args.p, false, no_verify)?;
    let phi = parse_phi(&a, &args.phi)?;
    let opts = SpunOptions {
        lambda_twist: args.lambda_twist,
        ..SpunOptions::default()
    };
    let s = twist_spun_dga(&a, &phi, &opts)?;
    let saved = save_dga(&s.dga, Some(Provenance::Spun(s.provenance())), true);
    let (text, mut v) = describe(&s.dga);
    if let Some(o) = &args.output {
        write_file(o, &saved)?;
    } else {
        v["file"] = serde_json::from_str(&saved).expect("saved DGA is JSON");
    }
    ok(text, v)
}

fn augment(args: &AugmentArgs, no_verify: bool) -> Res {
    let (a, _) = resolve(&args.dga, args.p, true, no_verify)?;
    let mu = args.mu.unwrap_or(args.p - 1);
    let augs = find_augmentations(&a, args.p, mu, args.lambda, args.graded)?;
    let mut text = format!(
        "{} {}augmentation(s) of {} over F_{} at mu = {}, lambda = {}\n",
        augs.len(),
        if args.graded { "graded " } else { "" },
        a.name(),
        args.p,
        mu,
        args.lambda
    );
    for e in &augs {
        let vals: Vec<String> = a
            .ids()
            .map(|g| format!("{}={}", a.gen(g).name, e.values[g as usize]))
            .collect();
        let _ = writeln!(text, "  {}", vals.join(" "));
    }
    if let Some(o) = &args.output {
        write_file(
            o,
            &serde_json::to_string_pretty(&augs).expect("augmentations serialize"),
        )?;
    }
    ok(
        text,
        json!({ "count": augs.len(), "mu": mu, "lambda": args.lambda, "augmentations": augs }),
    )
}

fn load_augmentation(path: &Path) -> Result<Augmentation, CliError> {
    let v: Value =
        serde_json::from_str(&read(path)?).map_err(|e| CliError::Parse(e.to_string()))?;
    let v = match v {
        Value::Array(mut xs) if !xs.is_empty() => xs.swap_remove(0),
        Value::Array(_) => {
            return Err(CliError::Invalid(format!(
                "{}: no augmentations",
                path.display()
            )))
        }
        other => other,
    };
    serde_json::from_value(v).map_err(|e| CliError::Parse(e.to_string()))
}

fn linhom(args: &LinhomArgs, no_verify: bool) -> Res {
    let e1 = load_augmentation(&args.eps)?;
    let e2 = match &args.eps2 {
        Some(p) => load_augmentation(p)?,
        None => e1.clone(),
    };
    let (a, _) = resolve(&args.dga, e1.p, true, no_verify)?;
    let c = linearise(&a, &e1, &e2)?;
    let b = betti(&c);
    let mut text = String::from("degree  dim\n");
    for (k, v) in &b.0 {
        let _ = writeln!(text, "{k:>6}  {v}");
    }
    ok(text, json!({ "betti": b }))
}

/// `k:n` pairs separated by commas.
pub(crate) fn parse_window(s: &str) -> Result<std::collections::BTreeMap<i32, usize>, CliError> {
    let bad = || CliError::Parse(format!("expected `k:n,k:n,…`, got `{s}`"));
    let mut out = std::collections::BTreeMap::new();
    for part in s.split(',') {
        let (k, n) = part.split_once(':').ok_or_else(bad)?;
        let k: i32 = k.trim().parse().map_err(|_| bad())?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        if out.insert(k, n).is_some() {
            return Err(CliError::Parse(format!("degree {k} appears twice")));
        }
    }
    Ok(out)
}

fn render_feasibility(f: &Feasibility) -> String {
    match f {
        Feasibility::Feasible { witness } => {
            let w: Vec<String> = witness
                .iter()
                .rev()
                .map(|(k, v)| format!("d_{k}={v}"))
                .collect();
            format!("feasible: {}\n", w.join(", "))
        }
        Feasibility::Infeasible {
            steps,
            first_negative,
            ..
        } => {
            let w: Vec<String> = steps
                .iter()
                .map(|s| format!("d_{}={}", s.degree, s.value))
                .collect();
            format!(
                "infeasible: {} (negative at degree {first_negative})\n",
                w.join(", ")
            )
        }
    }
}

fn cone_check(dims: &str) -> Res {
    let window = parse_window(dims)?;
    let f = cone_feasible(&window)?;
    let code = if f.is_feasible() {
        EXIT_OK
    } else {
        EXIT_OBSTRUCTION
    };
    Ok(Outcome {
        text: render_feasibility(&f),
        json: json!({ "window": window, "feasibility": f }),
        code,
    })
}

fn obstruct_product(r: u32) -> Res {
    let inv = lambda2_product(r).map_err(|e| CliError::Invalid(e.to_string()))?;
    let report = not_twist_spun_report(&inv, r)?;
    let mut text = format!("product of the unknot with lambda2:{}\n", 2 * r);
    let _ = writeln!(text, "chord degrees: {:?}", report.degrees);
    let _ = writeln!(
        text,
        "graded augmentation candidates: {}",
        report.graded_candidates
    );
    for a in &report.assumptions {
        let _ = writeln!(text, "assumption: {a}");
    }
    let w: Vec<String> = report
        .window
        .iter()
        .rev()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect();
    let _ = writeln!(text, "window: {{{}}}", w.join(", "));
    text.push_str(&render_feasibility(&report.feasibility));
    let fires = report.verdict == Verdict::NotTwistSpun;
    let _ = writeln!(
        text,
        "verdict: {}",
        if fires {
            "not a twist spun"
        } else {
            "inconclusive"
        }
    );
    let _ = writeln!(text, "caveat: {}", report.caveat);
    Ok(Outcome {
        text,
        json: serde_json::to_value(&report).expect("reports serialize"),
        code: if fires { EXIT_OBSTRUCTION } else { EXIT_OK },
    })
}

fn target_polynomial(t: &str) -> Result<Option<LocusPolynomial>, CliError> {
    if t.starts_with("poly:") {
        return catalog_polynomial(t)
            .map(Some)
            .ok_or_else(|| CliError::Invalid(format!("no catalog polynomial `{t}`")));
    }
    if t.contains('[') {
        return Ok(Some(t.parse()?));
    }
    Ok(None)
}

fn variety(args: &VarietyArgs, no_verify: bool) -> Res {
    let set: TorusPointSet = match target_polynomial(&args.target)? {
        Some(poly) => polynomial_locus(&poly, args.q)?,
        None => {
            let (a, _) = resolve(&args.target, args.q, true, no_verify)?;
            augmentation_points(&a, args.q, !args.ungraded)?
        }
    };
    let pts: Vec<String> = set
        .points
        .iter()
        .map(|(m, l)| format!("({m},{l})"))
        .collect();
    let mut text = format!(
        "{} point(s) over F_{}: {}\n",
        set.points.len(),
        args.q,
        pts.join(" ")
    );
    let mut v = json!({ "q": args.q, "points": set.points, "meets_line": meets_line(&set) });
    let mut code = EXIT_OK;
    if args.line_test {
        let c = line_containment(&set);
        let line = match &c {
            Containment::Contained => "contained in mu = -1".to_string(),
            Containment::Empty => "empty (vacuously contained)".to_string(),
            Containment::NotContained { witness } => {
                format!("not contained, witness ({},{})", witness.0, witness.1)
            }
        };
        let _ = writeln!(text, "line test: {line}");
        if !c.holds() {
            code = EXIT_OBSTRUCTION;
        }
        v["containment"] = serde_json::to_value(&c).expect("serializes");
    }
    if let Some(bound) = args.scan {
        let row = basis_change_scan(&set, bound);
        match row {
            Some((a, b)) => {
                let _ = writeln!(text, "basis change: mu^{a} lambda^{b} = -1 on every point");
                code = EXIT_OK;
            }
            None => {
                let _ = writeln!(text, "basis change: none with entries bounded by {bound}");
            }
        }
        v["basis_change"] = json!(row);
    }
    Ok(Outcome {
        text,
        json: v,
        code,
    })
}
