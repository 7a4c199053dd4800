use serde_json::{json, Value};

use xhopf::algebra::Side;
use xhopf::bialgebroid::{check_schauenburg, check_takeuchi, galois_map};
use xhopf::check::CheckReport;
use xhopf::complexes::bar::bar_resolution;
use xhopf::complexes::resolution::FreeResolution;
use xhopf::duality::derived::{check_delta_chain_map, check_double_dual};
use xhopf::duality::underived::{check_dual_bases, omega0_independent};
use xhopf::duality::{cap_omega_underived, delta_underived, detect_duality, dual_bases, duality_report};
use xhopf::homology::{ext, tor};
use xhopf::instances::catalog::{builtin_instances, info, lie_module, load, FdInstance, Instance};
use xhopf::instances::ce::{ce_resolution, truncated_bar};
use xhopf::instances::fd::{dual_numbers, q_times_q, upper_triangular};
use xhopf::instances::lie::LieAlgebra;
use xhopf::instances::pbw::{check_translation_ug, PbwRing};
use xhopf::oracle::hochschild_report;
use xhopf::products::{
    bullet_table, cap_table, ce_diagonal, cup_table, lifted_diagonal, swapped_cup_table, yoneda_table, Diagonal,
};
use xhopf::qlinalg::{fmt_q, q, unit_vec, vec_scale, Q};
use xhopf::ring::{FdRing, Ring};
use xhopf::{Error, Result};

use crate::{DerivedArgs, ResolutionKind};

pub struct Outcome {
    pub report: Value,
    pub passed: bool,
}

fn ok(report: Value) -> Result<Outcome> {
    Ok(Outcome { report, passed: true })
}

fn resolution_json<R: Ring>(p: &FreeResolution<R>) -> Value {
    json!({
        "name": p.name(),
        "ranks": p.ranks(),
        "complete": p.is_complete(),
        "window": p.window(),
        "certificate": p.certificate(),
    })
}

fn failed_checks(r: &CheckReport) -> Value {
    serde_json::to_value(r.failures()).expect("checks serialize")
}

/// The bar resolution of a finite-dimensional instance, with its homotopy checks.
fn fd_bar(f: &FdInstance, depth: usize) -> Result<(FdRing, FreeResolution<FdRing>, CheckReport)> {
    check_depth(&f.name, depth)?;
    let ring = f.ring()?;
    let (p, rep) = bar_resolution(&f.data, &ring, depth)?;
    Ok((ring, p, rep))
}

/// Degrees at or beyond the instance's bar depth limit are outside the window.
fn check_depth(name: &str, depth: usize) -> Result<()> {
    match info(name)?.bar_depth_limit {
        Some(limit) if depth > limit => Err(Error::WindowExceeded { requested: depth - 1, window: limit - 1 }),
        None => Err(Error::Invalid(format!("{name} has no bar resolution"))),
        _ => Ok(()),
    }
}

/// The lifted diagonal grows with the tensor square of the bar resolution.
fn check_product_degree(name: &str, total: usize) -> Result<()> {
    match info(name)?.product_degree_limit {
        Some(limit) if total > limit => Err(Error::WindowExceeded { requested: total, window: limit }),
        _ => Ok(()),
    }
}

fn ce_levels(g: &LieAlgebra) -> Vec<usize> {
    (0..=g.dim() + 1).collect()
}

fn lie_resolution(name: &str, g: &LieAlgebra, kind: ResolutionKind, max: usize) -> Result<FreeResolution<PbwRing>> {
    let ring = PbwRing::new(g.clone());
    match kind {
        ResolutionKind::Ce => ce_resolution(&ring, &ce_levels(g)),
        ResolutionKind::Bar if g.is_abelian() => {
            check_depth(name, max + 1)?;
            truncated_bar(&ring, max + 1, max + 1)
        }
        ResolutionKind::Bar => Err(Error::Invalid(format!(
            "the truncated bar resolution over U({}) is only certified for abelian g",
            g.name()
        ))),
    }
}

pub fn verify_hopf(name: &str) -> Result<Outcome> {
    let mut report = CheckReport::new();
    match load(name)? {
        Instance::Fd(f) => {
            report.extend(check_takeuchi(&f.data));
            match galois_map(f.data.clone()) {
                Ok(h) => {
                    report.record_bool("galois_invertible", true, "");
                    report.extend(check_schauenburg(&h));
                }
                Err(Error::NotInvertible { rank, dim }) => {
                    report.record_bool("galois_invertible", false, &format!("rank {rank} of {dim}"));
                }
                Err(e) => return Err(e),
            }
        }
        Instance::Lie { lie, .. } => report.extend(check_translation_ug(&PbwRing::new(lie), 3)),
    }
    let passed = report.all_passed();
    Ok(Outcome {
        report: json!({ "command": "verify-hopf", "instance": name, "passed": passed, "checks": report.checks }),
        passed,
    })
}

fn derived_rows<R: Ring>(p: &FreeResolution<R>, m: &R::Module, max: usize, homology: bool) -> Result<Vec<Value>> {
    (0..=max)
        .map(|n| {
            let g = if homology { tor(m, p, n)? } else { ext(p, m, n)? };
            let classes: Vec<Vec<String>> =
                g.homology.representatives().iter().map(|r| r.iter().map(fmt_q).collect()).collect();
            Ok(json!({ "degree": n, "dim": g.dim(), "classes": classes }))
        })
        .collect()
}

pub fn derived(args: &DerivedArgs, homology: bool) -> Result<Outcome> {
    let side = if homology { Side::Right } else { Side::Left };
    let max = args.max_degree;
    let (resolution, rows, passed, witness) = match load(&args.instance)? {
        Instance::Fd(f) => {
            if args.resolution == Some(ResolutionKind::Ce) {
                return Err(Error::Invalid("the CE resolution exists only for Lie instances".into()));
            }
            let m = f.module(&args.module, side)?;
            let (_, p, rep) = fd_bar(&f, max + 1)?;
            let rows = derived_rows(&p, &m, max, homology)?;
            (resolution_json(&p), rows, rep.all_passed(), failed_checks(&rep))
        }
        Instance::Lie { lie, .. } => {
            let kind = args.resolution.unwrap_or(ResolutionKind::Ce);
            let m = lie_module(&args.module, &lie, side)?;
            let p = lie_resolution(&args.instance, &lie, kind, max)?;
            (resolution_json(&p), derived_rows(&p, &m, max, homology)?, true, json!([]))
        }
    };
    let dims: Vec<Value> = rows.iter().map(|r| r["dim"].clone()).collect();
    Ok(Outcome {
        report: json!({
            "command": if homology { "tor" } else { "ext" },
            "instance": args.instance,
            "parameters": { "module": args.module, "max_degree": max },
            "resolution": resolution,
            "dims": dims,
            "rows": rows,
            "failed_checks": witness,
        }),
        passed,
    })
}

fn tables_agree(tables: &[&xhopf::products::ProductTable]) -> bool {
    tables.windows(2).all(|w| w[0].table == w[1].table)
}

fn cup_report<R: Ring>(p: &FreeResolution<R>, diag: &Diagonal<R::Elem>, m: usize, n: usize) -> Result<(Value, bool)> {
    let cup = cup_table(p, diag, m, n)?;
    let yon = yoneda_table(p, m, n)?;
    let swap = swapped_cup_table(p, diag, m, n)?;
    let agree = tables_agree(&[&cup, &yon, &swap]);
    Ok((json!({ "resolution": resolution_json(p), "cup": cup, "yoneda": yon, "graded_swap": swap, "agree": agree }), agree))
}

pub fn cup(name: &str, m: usize, n: usize) -> Result<Outcome> {
    let (body, passed) = match load(name)? {
        Instance::Fd(f) => {
            check_product_degree(name, m + n)?;
            let (_, p, rep) = fd_bar(&f, m + n + 1)?;
            let diag = lifted_diagonal(&p, m + n)?;
            let (body, agree) = cup_report(&p, &diag, m, n)?;
            (body, agree && rep.all_passed())
        }
        Instance::Lie { lie, .. } => {
            let p = lie_resolution(name, &lie, ResolutionKind::Ce, m + n)?;
            p.check_window(m + n)?;
            cup_report(&p, &ce_diagonal(&p), m, n)?
        }
    };
    Ok(Outcome { report: json!({ "command": "cup", "instance": name, "parameters": { "m": m, "n": n }, "result": body }), passed })
}

fn cap_report<R: Ring>(
    p: &FreeResolution<R>,
    diag: &Diagonal<R::Elem>,
    module: &R::Module,
    m: usize,
    n: usize,
) -> Result<(Value, bool)> {
    let cap = cap_table(p, diag, module, m, n)?;
    let bullet = bullet_table(p, module, m, n)?;
    let agree = tables_agree(&[&cap, &bullet]);
    Ok((json!({ "resolution": resolution_json(p), "cap": cap, "bullet": bullet, "agree": agree }), agree))
}

pub fn cap(name: &str, module: &str, m: usize, n: usize) -> Result<Outcome> {
    if m > n {
        return Err(Error::Invalid(format!("cap needs m ≤ n, got m = {m}, n = {n}")));
    }
    let (body, passed) = match load(name)? {
        Instance::Fd(f) => {
            let nm = f.module(module, Side::Right)?;
            check_product_degree(name, n)?;
            let (_, p, rep) = fd_bar(&f, n + 1)?;
            let diag = lifted_diagonal(&p, n)?;
            let (body, agree) = cap_report(&p, &diag, &nm, m, n)?;
            (body, agree && rep.all_passed())
        }
        Instance::Lie { lie, .. } => {
            let nm = lie_module(module, &lie, Side::Right)?;
            let p = lie_resolution(name, &lie, ResolutionKind::Ce, n)?;
            p.check_window(n)?;
            cap_report(&p, &ce_diagonal(&p), &nm, m, n)?
        }
    };
    Ok(Outcome {
        report: json!({ "command": "cap", "instance": name, "parameters": { "module": module, "m": m, "n": n }, "result": body }),
        passed,
    })
}

pub fn duality(name: &str, module: &str) -> Result<Outcome> {
    let (body, passed) = match load(name)? {
        Instance::Fd(f) => {
            let ring = f.ring()?;
            let a = ring.base_module();
            let db = dual_bases(&ring, &a)?;
            let left = f.module(module, Side::Left)?;
            let right = f.module(module, Side::Right)?;
            let cap = cap_omega_underived(&left, &a, &db)?;
            let (delta, inv) = delta_underived(&right, &a, &db)?;
            let mut checks = check_dual_bases(&ring, &a, &db);
            // a redundant generating set: every basis vector, after the doubled originals
            let mut other: Vec<Vec<Q>> = db.generators.iter().map(|g| vec_scale(&q(2), g)).collect();
            other.extend((0..a.dim()).map(|i| unit_vec(a.dim(), i)));
            let independent = omega0_independent(&ring, &a, db.generators.clone(), other)?;
            checks.record_bool("omega0_generator_independent", independent, "second generating set");
            let passed = cap.bijective && delta.bijective && inv.left && inv.right && checks.all_passed();
            let body = json!({
                "d": 0,
                "Astar_dim": db.hom.dim(),
                "omega": db.omega0.iter().map(fmt_q).collect::<Vec<_>>(),
                "table": [{
                    "m": 0,
                    "ext_dim": cap.source_dim,
                    "tor_dim": cap.target_dim,
                    "rank": cap.rank,
                    "bijective": cap.bijective,
                }],
                "delta": { "map": delta, "inverse": inv },
                "checks": checks.checks,
            });
            (body, passed)
        }
        Instance::Lie { lie, .. } => {
            let levels = ce_levels(&lie);
            let p = lie_resolution(name, &lie, ResolutionKind::Ce, lie.dim())?;
            let dd = detect_duality(&p, &levels)?;
            let left = lie_module(module, &lie, Side::Left)?;
            let right = lie_module(module, &lie, Side::Right)?;
            let report = duality_report(&p, &ce_diagonal(&p), &dd, &left)?;
            let mut checks = check_delta_chain_map(&p, &dd, &right);
            checks.extend(check_double_dual(&p, &dd, &levels)?);
            let passed = checks.all_passed() && report.table.iter().all(|r| r.bijective);
            let mut body = serde_json::to_value(&report).expect("reports serialize");
            body["checks"] = serde_json::to_value(&checks.checks).expect("checks serialize");
            body["dual_resolution"] = resolution_json(&dd.dual);
            (body, passed)
        }
    };
    Ok(Outcome { report: json!({ "command": "duality", "instance": name, "parameters": { "module": module }, "result": body }), passed })
}

pub fn instances_list() -> Result<Outcome> {
    ok(json!({ "command": "instances list", "instances": builtin_instances() }))
}

pub fn instances_show(name: &str) -> Result<Outcome> {
    let inst = load(name)?;
    ok(json!({ "command": "instances show", "instance": name, "data": inst.to_json() }))
}

pub fn oracle_hochschild(algebra: &str, max: usize) -> Result<Outcome> {
    let a = match algebra.trim_start_matches("env-") {
        "dual" => dual_numbers(),
        "qxq" => q_times_q(),
        "upper" => upper_triangular(),
        _ => return Err(Error::Invalid(format!("unknown algebra {algebra:?}; expected dual, qxq or upper"))),
    };
    ok(json!({ "command": "oracle hochschild", "result": hochschild_report(algebra, &a, max) }))
}
