//! One function per subcommand. Each returns the result twice: as a JSON
//! value and as a plain table, both in canonical order so identical
//! invocations produce identical bytes.

use std::path::Path;

use serde_json::{json, Value};

use tiltlab_core::catalog::Catalog;
use tiltlab_core::cluster_algebra::{correspondence_check, enumerate_clusters, initial_seed, mutate};
use tiltlab_core::cluster_cat::{cluster_tilted_dims, cluster_tilted_quiver};
use tiltlab_core::complex::build_complex;
use tiltlab_core::quiver::{euler_form, is_sincere, positive_roots, Quiver};
use tiltlab_core::rep::{hom_ext, indec_for_root, Representation};
use tiltlab_core::tilting::{
    complements, enumerate_tilting, is_slice, kronecker_volume_partial, volume_sum,
    weighted_kronecker_closed, weighted_kronecker_limits, weighted_kronecker_partial,
};
use tiltlab_core::Rat;

use crate::formats::{
    export_complex, parse_dim_list, parse_dims, vertex_label, QuiverDto,
};
use crate::{cache, formats, CliError, CliResult};

/// A command result in both output formats.
pub struct Rendered {
    /// Machine form.
    pub json: Value,
    /// Human form (plain text, no trailing newline).
    pub table: String,
}

/// Largest total dimension of a positive root — the natural catalog cap
/// for Dynkin quivers.
fn auto_cap(q: &Quiver) -> Option<i64> {
    positive_roots(q)
        .ok()
        .and_then(|roots| roots.iter().map(|r| r.iter().sum()).max())
}

fn resolve_cap(q: &Quiver, cap: Option<i64>) -> CliResult<i64> {
    match cap.or_else(|| auto_cap(q)) {
        Some(c) if c > 0 => Ok(c),
        Some(_) => Err(CliError::Input("--cap must be positive".into())),
        None => Err(CliError::Input(
            "this quiver is not Dynkin, so the catalog is infinite; pass an explicit --cap"
                .into(),
        )),
    }
}

fn catalog_for(q: &Quiver, quiver_bytes: &[u8], cap: Option<i64>) -> CliResult<Catalog> {
    let cap = resolve_cap(q, cap)?;
    Ok(cache::load_or_build(quiver_bytes, q, cap)?.0)
}

fn dims_value(dims: &[i64]) -> Value {
    json!(dims)
}

/// `roots`: positive roots of a Dynkin quiver.
pub fn roots(q: &Quiver) -> CliResult<Rendered> {
    let roots = positive_roots(q)?;
    let mut lines = vec![format!("{} positive roots", roots.len())];
    for r in &roots {
        lines.push(format!("  {}", q.dim_string(r)));
    }
    Ok(Rendered {
        json: json!({
            "quiver": QuiverDto::of(q),
            "count": roots.len(),
            "roots": roots,
        }),
        table: lines.join("\n"),
    })
}

/// `catalog`: the exceptional modules up to the cap, with Hom/Ext tables.
pub fn catalog(q: &Quiver, quiver_bytes: &[u8], cap: Option<i64>) -> CliResult<Rendered> {
    let catalog = catalog_for(q, quiver_bytes, cap)?;
    let tables = catalog.tables()?;
    let mut lines = vec![format!(
        "{} exceptional modules (cap {}, {})",
        catalog.entries().len(),
        catalog.cap(),
        if catalog.is_complete() {
            "complete"
        } else {
            "possibly truncated"
        }
    )];
    for (i, e) in catalog.entries().iter().enumerate() {
        lines.push(format!(
            "  #{i}  {}  total {}",
            q.dim_string(&e.dims),
            e.dims.iter().sum::<i64>()
        ));
    }
    Ok(Rendered {
        json: json!({
            "cap": catalog.cap(),
            "complete": catalog.is_complete(),
            "entries": catalog.entries().iter().map(|e| dims_value(&e.dims)).collect::<Vec<_>>(),
            "hom": tables.hom,
            "ext": tables.ext,
        }),
        table: lines.join("\n"),
    })
}

fn resolve_module(
    q: &Quiver,
    dims: Option<&str>,
    rep_path: Option<&Path>,
    which: &str,
) -> CliResult<Representation> {
    match (dims, rep_path) {
        (Some(d), None) => Ok(indec_for_root(q, &parse_dims(d, q.n())?)?),
        (None, Some(p)) => formats::load_representation(p, q),
        _ => Err(CliError::Usage(format!(
            "give exactly one of --{which} DIMS or --rep-{which} FILE"
        ))),
    }
}

/// `homext`: Hom and Ext dimensions between two modules, each given as an
/// exceptional-root dimension vector or an explicit representation file.
pub fn homext(
    q: &Quiver,
    from: Option<&str>,
    to: Option<&str>,
    rep_from: Option<&Path>,
    rep_to: Option<&Path>,
) -> CliResult<Rendered> {
    let v = resolve_module(q, from, rep_from, "from")?;
    let w = resolve_module(q, to, rep_to, "to")?;
    let (hom, ext) = hom_ext(q, &v, &w)?;
    let euler = euler_form(q, v.dims(), w.dims())?;
    let table = format!(
        "hom {} -> {} = {hom}\next {} -> {} = {ext}\neuler form = {euler}",
        q.dim_string(v.dims()),
        q.dim_string(w.dims()),
        q.dim_string(v.dims()),
        q.dim_string(w.dims()),
    );
    Ok(Rendered {
        json: json!({
            "from": v.dims(),
            "to": w.dims(),
            "hom": hom,
            "ext": ext,
            "euler": euler,
        }),
        table,
    })
}

/// `tilting`: every tilting module of the catalog.
pub fn tilting(q: &Quiver, quiver_bytes: &[u8], cap: Option<i64>) -> CliResult<Rendered> {
    let catalog = catalog_for(q, quiver_bytes, cap)?;
    let tiltings = enumerate_tilting(&catalog)?;
    let mut lines = vec![format!("{} tilting modules", tiltings.len())];
    let mut as_dims = Vec::new();
    for (i, t) in tiltings.iter().enumerate() {
        let dims: Vec<Vec<i64>> = t
            .iter()
            .map(|&ix| catalog.entries()[ix].dims.clone())
            .collect();
        let pretty: Vec<String> = dims.iter().map(|d| q.dim_string(d)).collect();
        lines.push(format!("  T{}  {}", i + 1, pretty.join(" + ")));
        as_dims.push(dims);
    }
    Ok(Rendered {
        json: json!({
            "count": as_dims.len(),
            "complete": catalog.is_complete(),
            "tilting_modules": as_dims,
        }),
        table: lines.join("\n"),
    })
}

/// `complements`: the ways to extend an almost complete partial tilting
/// module, given as a semicolon-separated list of dimension vectors.
pub fn complements_cmd(
    q: &Quiver,
    quiver_bytes: &[u8],
    cap: Option<i64>,
    modules: &str,
) -> CliResult<Rendered> {
    let catalog = catalog_for(q, quiver_bytes, cap)?;
    let dims = parse_dim_list(modules, q.n())?;
    let set: Vec<usize> = dims
        .iter()
        .map(|d| catalog.require(d))
        .collect::<Result<_, _>>()?;
    let comps = complements(&catalog, &set)?;
    let mut total = vec![0i64; q.n()];
    for d in &dims {
        for (t, x) in total.iter_mut().zip(d) {
            *t += x;
        }
    }
    let comp_dims: Vec<Vec<i64>> = comps
        .iter()
        .map(|&i| catalog.entries()[i].dims.clone())
        .collect();
    let mut lines = vec![format!(
        "{} complement(s) for the {} partial module",
        comp_dims.len(),
        if is_sincere(&total) {
            "sincere"
        } else {
            "non-sincere"
        }
    )];
    for d in &comp_dims {
        lines.push(format!("  {}", q.dim_string(d)));
    }
    Ok(Rendered {
        json: json!({
            "partial": dims,
            "sincere": is_sincere(&total),
            "count": comp_dims.len(),
            "complements": comp_dims,
        }),
        table: lines.join("\n"),
    })
}

fn is_kronecker_shape(q: &Quiver) -> bool {
    q.n() == 2
        && q.arrows().len() == 2
        && (q.arrow_count(0, 1) == 2 || q.arrow_count(1, 0) == 2)
}

fn parse_weights(s: &str) -> CliResult<(Rat, Rat)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(CliError::Input(format!(
            "expected two comma-separated weights, got {s:?}"
        )));
    }
    let parse = |p: &str| {
        p.parse::<Rat>()
            .map_err(|e| CliError::Input(format!("bad weight {p:?}: {e}")))
    };
    Ok((parse(parts[0])?, parse(parts[1])?))
}

/// `volume`: full length-volume report for Dynkin quivers; preprojective
/// partial sums (optionally weighted) for the double-arrow quiver.
pub fn volume(
    q: &Quiver,
    partial: Option<usize>,
    weights: Option<&str>,
) -> CliResult<Rendered> {
    if partial.is_none() && weights.is_none() {
        let report = volume_sum(q)?;
        let mut lines = Vec::new();
        let mut terms = Vec::new();
        for t in &report.terms {
            let pretty: Vec<String> = t.dims.iter().map(|d| q.dim_string(d)).collect();
            lines.push(format!("  {}  {}", t.value, pretty.join(" + ")));
            terms.push(json!({
                "dims": t.dims,
                "value": t.value.to_string(),
            }));
        }
        lines.push(format!("total = {}", report.total));
        return Ok(Rendered {
            json: json!({ "total": report.total.to_string(), "terms": terms }),
            table: lines.join("\n"),
        });
    }
    if !is_kronecker_shape(q) {
        return Err(CliError::Input(
            "--partial/--weights apply to the double-arrow (Kronecker) quiver only; \
             Dynkin quivers take the plain volume sum"
                .into(),
        ));
    }
    let n = partial.ok_or_else(|| {
        CliError::Usage("--weights needs --partial N to know how far to sum".into())
    })?;
    match weights {
        None => {
            let value = kronecker_volume_partial(n);
            Ok(Rendered {
                json: json!({ "partial_n": n, "value": value.to_string() }),
                table: format!("partial volume over {n} preprojective tilts = {value}"),
            })
        }
        Some(w) => {
            let (x, y) = parse_weights(w)?;
            let partial_value = weighted_kronecker_partial(n, &x, &y)?;
            let closed = weighted_kronecker_closed(n, &x, &y)?;
            let (telescoped, quoted) = weighted_kronecker_limits(&x, &y)?;
            let agree = telescoped == quoted;
            let table = format!(
                "weighted partial sum (n = {n}, x = {x}, y = {y}) = {partial_value}\n\
                 closed form = {closed}\n\
                 telescoped limit = {telescoped}\n\
                 equal-weight form 1/(2xy) = {quoted}{}",
                if agree {
                    " (limits agree)"
                } else {
                    " (limits differ; reported, not asserted)"
                }
            );
            Ok(Rendered {
                json: json!({
                    "partial_n": n,
                    "x": x.to_string(),
                    "y": y.to_string(),
                    "partial": partial_value.to_string(),
                    "closed_form": closed.to_string(),
                    "telescoped_limit": telescoped.to_string(),
                    "equal_weight_limit": quoted.to_string(),
                    "limits_agree": agree,
                }),
                table,
            })
        }
    }
}

/// `complex`: build the plain or extended complex, print a summary, and
/// optionally write the full export (simplices, generators, dual forms).
pub fn complex_cmd(
    q: &Quiver,
    quiver_bytes: &[u8],
    cap: Option<i64>,
    extended: bool,
    out: Option<&Path>,
) -> CliResult<Rendered> {
    let catalog = catalog_for(q, quiver_bytes, cap)?;
    let complex = build_complex(&catalog, extended)?;
    let export = export_complex(&complex)?;
    if let Some(path) = out {
        std::fs::write(path, serde_json::to_string_pretty(&export)? + "\n")?;
    }
    let mut lines = vec![
        format!(
            "{} complex over {} modules (cap {}, {})",
            if extended { "extended" } else { "plain" },
            catalog.entries().len(),
            catalog.cap(),
            if catalog.is_complete() {
                "complete"
            } else {
                "possibly truncated"
            }
        ),
        format!("f-vector = {:?}", export.f_vector),
        format!("euler characteristic = {}", export.euler_characteristic),
        format!(
            "ridges: {} boundary, {} interior, {} violations",
            export.boundary_ridges, export.interior_ridges, export.ridge_violations
        ),
        format!("{} maximal simplices", export.maximal_simplices.len()),
    ];
    for (i, s) in complex.maximal_simplices().iter().enumerate() {
        let labels: Vec<String> = s.iter().map(|&v| vertex_label(&catalog, v)).collect();
        lines.push(format!("  #{i}  {}", labels.join("  ")));
    }
    Ok(Rendered {
        json: serde_json::to_value(&export)?,
        table: lines.join("\n"),
    })
}

/// `fan`: which maximal cones of the extended complex contain a vector.
pub fn fan(
    q: &Quiver,
    quiver_bytes: &[u8],
    cap: Option<i64>,
    point: &str,
) -> CliResult<Rendered> {
    let catalog = catalog_for(q, quiver_bytes, cap)?;
    let complex = build_complex(&catalog, true)?;
    let d = parse_dims(point, q.n())?;
    let hits = complex.locate(&d)?;
    let mut lines = vec![format!(
        "{} containing cone(s) for {}",
        hits.len(),
        q.dim_string(&d)
    )];
    let mut cones = Vec::new();
    for &i in &hits {
        let labels: Vec<String> = complex.maximal_simplices()[i]
            .iter()
            .map(|&v| vertex_label(&catalog, v))
            .collect();
        lines.push(format!("  #{i}  {}", labels.join("  ")));
        cones.push(json!({ "index": i, "vertices": labels }));
    }
    Ok(Rendered {
        json: json!({ "point": d, "cones": cones }),
        table: lines.join("\n"),
    })
}

/// `clusters`: mutation closure of the initial seed; optionally verify the
/// denominator correspondence against the module catalog.
pub fn clusters(
    q: &Quiver,
    quiver_bytes: &[u8],
    cap: Option<i64>,
    depth_cap: usize,
    verify: bool,
) -> CliResult<Rendered> {
    let names = q.vertex_ids().to_vec();
    let enumeration = enumerate_clusters(q, depth_cap)?;
    let variables: Vec<String> = enumeration
        .variables
        .iter()
        .map(|v| v.render(&names).map_err(CliError::from))
        .collect::<CliResult<_>>()?;
    let clusters: Vec<Vec<String>> = enumeration
        .clusters
        .iter()
        .map(|c| {
            c.iter()
                .map(|v| v.render(&names).map_err(CliError::from))
                .collect::<CliResult<_>>()
        })
        .collect::<CliResult<_>>()?;
    let mut lines = vec![format!(
        "{} cluster variables, {} clusters ({})",
        variables.len(),
        clusters.len(),
        if enumeration.complete {
            "complete"
        } else {
            "truncated at the depth cap"
        }
    )];
    for v in &variables {
        lines.push(format!("  {v}"));
    }
    let mut json_value = json!({
        "complete": enumeration.complete,
        "variable_count": variables.len(),
        "variables": variables,
        "cluster_count": clusters.len(),
        "clusters": clusters,
    });
    if verify {
        let catalog = catalog_for(q, quiver_bytes, cap)?;
        let report = correspondence_check(&catalog)?;
        lines.push(format!(
            "correspondence: {} (bijection {}, simplices {}, fan {})",
            if report.passed() { "PASS" } else { "FAIL" },
            report.bijection_holds,
            report.clusters_match_simplices,
            report.fan_inequalities_hold
        ));
        json_value["correspondence"] = json!({
            "passed": report.passed(),
            "bijection": report.bijection_holds,
            "clusters_match_simplices": report.clusters_match_simplices,
            "fan_inequalities": report.fan_inequalities_hold,
        });
    }
    Ok(Rendered {
        json: json_value,
        table: lines.join("\n"),
    })
}

/// `mutate`: apply a comma-separated sequence of vertex mutations to the
/// initial seed and print the resulting cluster and exchange matrix.
pub fn mutate_cmd(q: &Quiver, at: &str) -> CliResult<Rendered> {
    let names = q.vertex_ids().to_vec();
    let mut seed = initial_seed(q);
    let mut applied = Vec::new();
    for part in at.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let k = q.vertex_index(part)?;
        seed = mutate(&seed, k)?;
        applied.push(part.to_string());
    }
    let variables: Vec<String> = seed
        .cluster()
        .iter()
        .map(|v| v.render(&names).map_err(CliError::from))
        .collect::<CliResult<_>>()?;
    let mut lines = vec![format!("after mutations at [{}]:", applied.join(", "))];
    for (name, v) in names.iter().zip(&variables) {
        lines.push(format!("  x[{name}] = {v}"));
    }
    lines.push("exchange matrix:".into());
    for row in seed.matrix() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        lines.push(format!("  [{}]", cells.join(" ")));
    }
    Ok(Rendered {
        json: json!({
            "applied": applied,
            "variables": variables,
            "matrix": seed.matrix(),
        }),
        table: lines.join("\n"),
    })
}

/// `cta` with `--modules`: endomorphism / extension-bimodule dimensions of
/// the cluster-tilted algebra attached to a tilting module.
pub fn cta_dims(
    q: &Quiver,
    quiver_bytes: &[u8],
    cap: Option<i64>,
    modules: &str,
) -> CliResult<Rendered> {
    let catalog = catalog_for(q, quiver_bytes, cap)?;
    let dims = parse_dim_list(modules, q.n())?;
    let reps: Vec<Representation> = dims
        .iter()
        .map(|d| {
            catalog
                .require(d)
                .map(|i| catalog.entries()[i].rep.clone())
        })
        .collect::<Result<_, _>>()?;
    let result = cluster_tilted_dims(q, &reps)?;
    let slice = is_slice(q, &reps)?;
    let table = format!(
        "dim End(T) = {}\ndim extension bimodule = {}\ndim cluster-tilted algebra = {}\nslice: {}",
        result.end_a,
        result.j_dim,
        result.end_c,
        if slice { "yes" } else { "no" }
    );
    Ok(Rendered {
        json: json!({
            "end_a": result.end_a,
            "j_dim": result.j_dim,
            "end_c": result.end_c,
            "slice": slice,
        }),
        table,
    })
}

/// `cta` with `--presentation`: close a presented algebra's relations into
/// reverse arrows and validate the resulting quiver shape.
pub fn cta_quiver(path: &Path) -> CliResult<Rendered> {
    let presentation = formats::load_presentation(path)?;
    let q = presentation.quiver().clone();
    let (raw, report) = cluster_tilted_quiver(&presentation);
    let arrows: Vec<(String, String)> = raw
        .arrows
        .iter()
        .map(|&(t, h)| (raw.vertices[t].clone(), raw.vertices[h].clone()))
        .collect();
    let added = raw.arrows.len() - q.arrows().len();
    let mut lines = vec![format!(
        "{} arrows ({} original + {} added), validation {}",
        arrows.len(),
        q.arrows().len(),
        added,
        if report.passed() { "passed" } else { "FAILED" }
    )];
    for (t, h) in &arrows {
        lines.push(format!("  {t} -> {h}"));
    }
    if !report.loops.is_empty() {
        lines.push(format!("loops at: {:?}", report.loops));
    }
    if !report.two_cycles.is_empty() {
        lines.push(format!("2-cycles: {:?}", report.two_cycles));
    }
    Ok(Rendered {
        json: json!({
            "vertices": raw.vertices,
            "arrows": arrows,
            "added_arrows": added,
            "loops": report.loops,
            "two_cycles": report.two_cycles,
            "passed": report.passed(),
        }),
        table: lines.join("\n"),
    })
}

/// `check`: the full invariant sweep. Returns the rendering plus the
/// number of failed checks so the caller can set the exit code.
pub fn check() -> CliResult<(Rendered, usize)> {
    let lines = crate::checks::run_all();
    let failed = lines.iter().filter(|l| !l.passed).count();
    let mut table: Vec<String> = lines
        .iter()
        .map(|l| {
            format!(
                "{}  {} — {}",
                if l.passed { "ok  " } else { "FAIL" },
                l.name,
                l.detail
            )
        })
        .collect();
    table.push(format!(
        "{} checks, {} failed",
        lines.len(),
        failed
    ));
    let json_value = json!({
        "checks": lines
            .iter()
            .map(|l| json!({ "name": l.name, "passed": l.passed, "detail": l.detail }))
            .collect::<Vec<_>>(),
        "total": lines.len(),
        "failed": failed,
    });
    Ok((
        Rendered {
            json: json_value,
            table: table.join("\n"),
        },
        failed,
    ))
}
