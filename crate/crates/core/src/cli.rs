//! Command-line front end.
//!
//! Exit codes: 0 computed, 1 an `--assert-matched` check failed, 2 malformed
//! input or usage, 3 numeric failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog::{
    builtin_group, builtin_ring, group_characters, group_ring, matched_vectg_oracle, subgroups,
    vect_g_module, GroupTable, DEFAULT_SUBGROUP_BOUND,
};
use crate::error::{Error, Result};
use crate::frobenius::{frobenius_report, morita_rescale_check};
use crate::fusion::{fp_dimensions, validate_fusion_ring, FusionRing};
use crate::io;
use crate::nimrep::{is_indecomposable, regular_module, validate_nimrep, NimRep};
use crate::numeric::{round_sig12, C64, DEFAULT_TOL};
use crate::pivotal::{
    c_invariant, enumerate_characters, global_dimension, is_spherical, validate_dim_char, DimChar,
};
use crate::trace::{matched_report, solve_module_trace, spherical_certificate, TraceCertificate};

#[derive(Debug, Parser)]
#[command(
    name = "modtrace",
    version,
    about = "Module traces over pivotal fusion rings"
)]
struct Cli {
    /// Absolute tolerance for numeric comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Emit one JSON document instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when a trace query is unmatched or not flexible.
    #[arg(long, global = true)]
    assert_matched: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the fusion ring axioms.
    Validate { ring: String },
    /// Frobenius-Perron dimensions.
    FpDims { ring: String },
    /// Dimension characters passing the pivotal filters.
    Characters { ring: String },
    /// Decide module-trace existence for one module.
    Trace {
        ring: String,
        /// Character file, index into `characters`, or `fp`.
        #[arg(long = "char")]
        character: String,
        /// Module file or `regular`.
        #[arg(long)]
        module: String,
        /// Also report dimensions rescaled to 1 at this module simple.
        #[arg(long)]
        normalize_at: Option<usize>,
    },
    /// Matchedness over a list of modules.
    Flexible {
        ring: String,
        #[arg(long = "char")]
        character: String,
        #[arg(long, num_args = 1.., required = true)]
        modules: Vec<String>,
    },
    /// Inner-hom algebra data for one module simple.
    Frobenius {
        ring: String,
        #[arg(long = "char")]
        character: String,
        #[arg(long)]
        module: String,
        #[arg(long)]
        object: usize,
    },
    /// Vect_G instances generated from a group.
    Vectg {
        /// Group file or builtin (`Z:<n>`, `S3`, `Z2xZ2`, ...).
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroups: bool,
        #[arg(long)]
        characters: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Builtin ring with its characters.
    Builtin {
        name: String,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

struct Output {
    json: Value,
    text: String,
    code: i32,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            code: 0,
        }
    }
}

/// Parses `args` (including the program name) and runs the verb, writing
/// the result to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(output) => {
            let written = if cli.json {
                serde_json::to_string_pretty(&output.json)
                    .map(|s| writeln!(out, "{s}"))
                    .map_err(Error::from)
            } else {
                Ok(write!(out, "{}", output.text))
            };
            match written {
                Ok(Ok(())) => output.code,
                _ => 2,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Numeric(_) => 3,
                _ => 2,
            }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let tol = cli.tol;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Usage("--tol must be a positive number".into()));
    }
    match &cli.command {
        Command::Validate { ring } => cmd_validate(ring),
        Command::FpDims { ring } => cmd_fp_dims(ring),
        Command::Characters { ring } => cmd_characters(ring, tol),
        Command::Trace {
            ring,
            character,
            module,
            normalize_at,
        } => cmd_trace(cli, ring, character, module, *normalize_at),
        Command::Flexible {
            ring,
            character,
            modules,
        } => cmd_flexible(cli, ring, character, modules),
        Command::Frobenius {
            ring,
            character,
            module,
            object,
        } => cmd_frobenius(cli, ring, character, module, *object),
        Command::Vectg {
            group,
            subgroups,
            characters,
            emit,
        } => cmd_vectg(tol, group, *subgroups, *characters, emit.as_deref()),
        Command::Builtin { name, emit } => cmd_builtin(tol, name, emit.as_deref()),
    }
}

fn num(x: f64) -> Value {
    json!(round_sig12(x))
}

fn cplx(z: C64) -> Value {
    json!([round_sig12(z.re), round_sig12(z.im)])
}

fn cvec(v: &[C64]) -> Value {
    Value::Array(v.iter().map(|&z| cplx(z)).collect())
}

fn fmt12(x: f64) -> String {
    let r = round_sig12(x);
    format!("{r}")
}

/// Residuals are tiny by design; scientific notation keeps them readable.
fn fmt_residual(x: f64) -> String {
    format!("{x:.3e}")
}

fn fmt_c(z: C64) -> String {
    let (re, im) = (round_sig12(z.re), round_sig12(z.im));
    if im < 0.0 {
        format!("{re}-{}·i", -im)
    } else {
        format!("{re}+{im}·i")
    }
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(cell);
                s.push_str(&" ".repeat(w - cell.chars().count() + 2));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

/// A ring file, or a builtin name when no such file exists.
fn load_ring_arg(arg: &str) -> Result<FusionRing> {
    let path = Path::new(arg);
    if path.exists() {
        io::load_ring(path)
    } else {
        builtin_ring(arg)
            .map_err(|_| Error::Usage(format!("'{arg}' is neither a ring file nor a builtin ring")))
    }
}

fn valid_ring(arg: &str) -> Result<FusionRing> {
    let ring = load_ring_arg(arg)?;
    let report = validate_fusion_ring(&ring);
    if !report.valid {
        let first = &report.violations[0];
        return Err(Error::Structural(format!(
            "ring fails {} axiom check(s), first: {} at {:?}",
            report.violations.len(),
            first.axiom,
            first.indices
        )));
    }
    Ok(ring)
}

fn load_char_arg(ring: &FusionRing, arg: &str, tol: f64) -> Result<DimChar> {
    let ch = if arg == "fp" {
        DimChar::from_real(&fp_dimensions(ring)?)
    } else if let Ok(idx) = arg.parse::<usize>() {
        let chars = enumerate_characters(ring)?;
        chars.get(idx).cloned().ok_or_else(|| {
            Error::Usage(format!(
                "character index {idx} out of range ({} available)",
                chars.len()
            ))
        })?
    } else {
        io::load_character(Path::new(arg), ring)?
    };
    let report = validate_dim_char(ring, &ch, tol)?;
    if !report.valid {
        return Err(Error::Structural(format!(
            "character fails {} check(s), first: {}",
            report.violations.len(),
            report.violations[0].check
        )));
    }
    Ok(ch)
}

fn load_module_arg(ring: &FusionRing, arg: &str) -> Result<NimRep> {
    let rep = if arg == "regular" {
        regular_module(ring)
    } else {
        io::load_module(Path::new(arg), ring)?
    };
    let report = validate_nimrep(ring, &rep)?;
    if !report.valid {
        let first = &report.violations[0];
        return Err(Error::Structural(format!(
            "module fails {} check(s), first: {} at {:?}",
            report.violations.len(),
            first.axiom,
            first.indices
        )));
    }
    Ok(rep)
}

fn char_json(ring: &FusionRing, ch: &DimChar, tol: f64) -> Value {
    json!({
        "d": cvec(&ch.d),
        "spherical": is_spherical(ring, ch, tol),
        "dimC": num(global_dimension(ch)),
        "C": cplx(c_invariant(ch)),
    })
}

fn char_text(ring: &FusionRing, ch: &DimChar) -> String {
    let rows: Vec<Vec<String>> = ring
        .labels()
        .iter()
        .zip(&ch.d)
        .map(|(l, &z)| vec![format!("{l}:"), fmt_c(z)])
        .collect();
    table(&["simple", "dimension"], &rows)
}

fn certificate_json(cert: &TraceCertificate) -> Value {
    let opt = |x: Option<f64>| x.map_or(Value::Null, num);
    json!({
        "matched": cert.matched,
        "dimC": num(cert.dim_c),
        "C": cplx(cert.c),
        "spherical_by_C": cert.spherical_by_c,
        "d": cert.dims().map_or(Value::Null, cvec),
        "anchors": cert.trace.as_ref().map_or(Value::Null, |t| json!(t.anchors)),
        "blocks": cert.blocks,
        "Q": Value::Array(cert.q.q.iter().map(|row| cvec(row)).collect()),
        "eigenvalues": cert.q_report.eigenvalues.iter().map(|&x| num(x)).collect::<Vec<_>>(),
        "residuals": {
            "idempotent": num(cert.q_report.idempotent_residual),
            "hermitian": num(cert.q_report.hermitian_residual),
            "right_eigen": opt(cert.right_eigen_residual),
            "left_eigen": opt(cert.left_eigen_residual),
        },
        "q_properties_ok": cert.q_report.passed,
        "diagnostics": cert.diagnostics,
    })
}

fn certificate_text(cert: &TraceCertificate) -> String {
    let mut s = format!(
        "matched: {}\ndim(C): {}\nC: {}\nspherical by C: {}\n",
        cert.matched,
        fmt12(cert.dim_c),
        fmt_c(cert.c),
        cert.spherical_by_c
    );
    if let Some(d) = cert.dims() {
        let rows: Vec<Vec<String>> = d
            .iter()
            .enumerate()
            .map(|(i, &z)| vec![format!("m{i}"), fmt_c(z)])
            .collect();
        s.push_str(&table(&["object", "trace dimension"], &rows));
    }
    s.push_str(&format!(
        "residuals: Q²-dim(C)Q {}  Q-Q† {}\n",
        fmt_residual(cert.q_report.idempotent_residual),
        fmt_residual(cert.q_report.hermitian_residual)
    ));
    for d in &cert.diagnostics {
        s.push_str(&format!("diagnostic: {d}\n"));
    }
    s
}

fn cmd_validate(arg: &str) -> Result<Output> {
    let ring = load_ring_arg(arg)?;
    let report = validate_fusion_ring(&ring);
    let json = json!({
        "valid": report.valid,
        "rank": ring.rank(),
        "violations": report.violations,
    });
    let mut text = format!("valid: {}\n", report.valid);
    if !report.valid {
        let rows: Vec<Vec<String>> = report
            .violations
            .iter()
            .map(|v| {
                vec![
                    v.axiom.clone(),
                    format!("{:?}", v.indices),
                    v.lhs.to_string(),
                    v.rhs.to_string(),
                ]
            })
            .collect();
        text.push_str(&table(&["axiom", "indices", "lhs", "rhs"], &rows));
    }
    Ok(Output {
        json,
        text,
        code: if report.valid { 0 } else { 2 },
    })
}

fn cmd_fp_dims(arg: &str) -> Result<Output> {
    let ring = valid_ring(arg)?;
    let fp = fp_dimensions(&ring)?;
    let total: f64 = fp.iter().map(|x| x * x).sum();
    let json = json!({
        "labels": ring.labels(),
        "fp_dims": fp.iter().map(|&x| num(x)).collect::<Vec<_>>(),
        "fp_global_dimension": num(total),
    });
    let rows: Vec<Vec<String>> = ring
        .labels()
        .iter()
        .zip(&fp)
        .map(|(l, &x)| vec![l.clone(), fmt12(x)])
        .collect();
    let mut text = table(&["simple", "FPdim"], &rows);
    text.push_str(&format!("FPdim(C): {}\n", fmt12(total)));
    Ok(Output::ok(json, text))
}

fn cmd_characters(arg: &str, tol: f64) -> Result<Output> {
    let ring = valid_ring(arg)?;
    let chars = enumerate_characters(&ring)?;
    let json = json!({
        "labels": ring.labels(),
        "characters": chars.iter().map(|ch| char_json(&ring, ch, tol)).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for (k, ch) in chars.iter().enumerate() {
        text.push_str(&format!(
            "character {k} (spherical: {}, dim(C) = {})\n",
            is_spherical(&ring, ch, tol),
            fmt12(global_dimension(ch))
        ));
        text.push_str(&char_text(&ring, ch));
    }
    Ok(Output::ok(json, text))
}

fn cmd_trace(
    cli: &Cli,
    ring_arg: &str,
    char_arg: &str,
    module_arg: &str,
    normalize_at: Option<usize>,
) -> Result<Output> {
    let ring = valid_ring(ring_arg)?;
    let ch = load_char_arg(&ring, char_arg, cli.tol)?;
    let rep = load_module_arg(&ring, module_arg)?;
    let cert = solve_module_trace(&ring, &ch, &rep, cli.tol)?;
    let mut json = certificate_json(&cert);
    let mut text = certificate_text(&cert);
    if let Some(i) = normalize_at {
        if i >= rep.module_rank() {
            return Err(Error::Usage(format!("--normalize-at {i} out of range")));
        }
        let normalized = cert.trace.as_ref().map(|t| t.normalized_at(i));
        json["d_normalized"] = normalized.as_deref().map_or(Value::Null, cvec);
        if let Some(n) = &normalized {
            let dims: Vec<String> = n.iter().map(|&z| fmt_c(z)).collect();
            text.push_str(&format!("normalized at m{i}: {}\n", dims.join(", ")));
        }
    }
    Ok(Output {
        json,
        text,
        code: assert_code(cli, cert.matched),
    })
}

fn assert_code(cli: &Cli, ok: bool) -> i32 {
    if cli.assert_matched && !ok {
        1
    } else {
        0
    }
}

fn cmd_flexible(
    cli: &Cli,
    ring_arg: &str,
    char_arg: &str,
    module_args: &[String],
) -> Result<Output> {
    let ring = valid_ring(ring_arg)?;
    let ch = load_char_arg(&ring, char_arg, cli.tol)?;
    let reps = module_args
        .iter()
        .map(|m| load_module_arg(&ring, m))
        .collect::<Result<Vec<_>>>()?;
    let report = matched_report(&ring, &ch, &reps, cli.tol)?;
    let sph = spherical_certificate(&ring, &ch, &reps, cli.tol)?;
    let json = json!({
        "flexible": report.flexible,
        "note": report.note,
        "modules": module_args
            .iter()
            .zip(&report.certificates)
            .map(|(name, cert)| {
                let mut v = certificate_json(cert);
                v["module"] = json!(name);
                v
            })
            .collect::<Vec<_>>(),
        "spherical": {
            "C": cplx(sph.c),
            "dimC": num(sph.dim_c),
            "verdict": sph.verdict,
            "witness": sph.witness.map(|i| module_args[i].clone()),
            "witness_d": sph.witness_dims.as_deref().map_or(Value::Null, cvec),
        },
    });
    let rows: Vec<Vec<String>> = module_args
        .iter()
        .zip(&report.certificates)
        .map(|(name, cert)| {
            vec![
                name.clone(),
                cert.matched.to_string(),
                cert.diagnostics.first().cloned().unwrap_or_default(),
            ]
        })
        .collect();
    let mut text = table(&["module", "matched", "diagnostic"], &rows);
    text.push_str(&format!(
        "flexible: {} ({})\n",
        report.flexible, report.note
    ));
    text.push_str(&format!(
        "C: {}  dim(C): {}  verdict: {}\n",
        fmt_c(sph.c),
        fmt12(sph.dim_c),
        serde_json::to_value(sph.verdict)?
            .as_str()
            .unwrap_or_default()
    ));
    if let Some(i) = sph.witness {
        text.push_str(&format!("real-dimension witness: {}\n", module_args[i]));
    }
    Ok(Output {
        json,
        text,
        code: assert_code(cli, report.flexible),
    })
}

fn cmd_frobenius(
    cli: &Cli,
    ring_arg: &str,
    char_arg: &str,
    module_arg: &str,
    object: usize,
) -> Result<Output> {
    let ring = valid_ring(ring_arg)?;
    let ch = load_char_arg(&ring, char_arg, cli.tol)?;
    let rep = load_module_arg(&ring, module_arg)?;
    let cert = solve_module_trace(&ring, &ch, &rep, cli.tol)?;
    let report = frobenius_report(&ring, &rep, object, &cert, cli.tol)?;
    let morita = if cert.matched {
        Some(morita_rescale_check(&cert, object, cli.tol)?)
    } else {
        None
    };
    let mut frob = json!({
        "object": report.object,
        "multiplicities": report.multiplicities,
        "dimA": num(report.dim_a),
        "haploid": report.haploid,
        "beta_1": num(report.beta_1),
        "beta_A": num(report.beta_a),
        "positivity_ok": report.positivity_ok,
        "consistent_with_certificate": report.consistent_with_certificate,
    });
    frob["morita"] = match &morita {
        Some(m) => json!({
            "scale": [round_sig12(m.scale[0]), round_sig12(m.scale[1])],
            "max_residual": num(m.max_residual),
            "ok": m.ok,
        }),
        None => Value::Null,
    };
    let mut json = certificate_json(&cert);
    json["frobenius"] = frob;

    let mult: Vec<String> = ring
        .labels()
        .iter()
        .zip(&report.multiplicities)
        .filter(|(_, &n)| n != 0)
        .map(|(l, &n)| {
            if n == 1 {
                l.clone()
            } else {
                format!("{n}·{l}")
            }
        })
        .collect();
    let mut text = certificate_text(&cert);
    text.push_str(&format!(
        "<m{object}, m{object}> = {}\ndim A: {}\nhaploid: {}\nbeta_1: {}  beta_A: {}\npositive: {}\n",
        mult.join(" + "),
        fmt12(report.dim_a),
        report.haploid,
        fmt12(report.beta_1),
        fmt12(report.beta_a),
        report.positivity_ok
    ));
    if let Some(m) = &morita {
        text.push_str(&format!(
            "rescale factor: {}  residual: {}  ok: {}\n",
            fmt_c(C64::new(m.scale[0], m.scale[1])),
            fmt_residual(m.max_residual),
            m.ok
        ));
    }
    Ok(Output {
        json,
        text,
        code: assert_code(cli, cert.matched),
    })
}

fn load_group_arg(arg: &str) -> Result<GroupTable> {
    let path = Path::new(arg);
    if path.exists() {
        io::load_group(path)
    } else {
        builtin_group(arg)
    }
}

fn cmd_vectg(
    tol: f64,
    group_arg: &str,
    show_subgroups: bool,
    show_characters: bool,
    emit: Option<&Path>,
) -> Result<Output> {
    let group = load_group_arg(group_arg)?;
    let ring = group_ring(&group)?;
    let subs = subgroups(&group, DEFAULT_SUBGROUP_BOUND)?;
    let modules = subs
        .iter()
        .map(|h| vect_g_module(&group, h))
        .collect::<Result<Vec<_>>>()?;
    let abelian = group.is_abelian();
    let chars = if abelian {
        group_characters(&group)?
    } else {
        Vec::new()
    };

    let mut json = json!({
        "order": group.order(),
        "abelian": abelian,
        "subgroup_count": subs.len(),
    });
    let mut text = format!(
        "order: {}\nabelian: {}\nsubgroups: {}\n",
        group.order(),
        abelian,
        subs.len()
    );
    if show_subgroups {
        json["subgroups"] = json!(subs);
        let rows: Vec<Vec<String>> = subs
            .iter()
            .enumerate()
            .map(|(i, h)| vec![format!("H{i}"), h.len().to_string(), format!("{h:?}")])
            .collect();
        text.push_str(&table(&["subgroup", "order", "elements"], &rows));
    }
    if show_characters {
        json["characters"] = json!(chars.iter().map(|k| k.phases.clone()).collect::<Vec<_>>());
        let rows: Vec<Vec<String>> = chars
            .iter()
            .enumerate()
            .map(|(i, k)| vec![format!("κ{i}"), format!("{:?}", k.phases)])
            .collect();
        text.push_str(&format!(
            "character phases in units of 2π/{}\n",
            group.order()
        ));
        text.push_str(&table(&["character", "phases"], &rows));
    }

    if abelian {
        let mut matched = Vec::new();
        let mut disagreements = 0usize;
        let mut rows = Vec::new();
        for (ki, kappa) in chars.iter().enumerate() {
            let d = kappa.to_dim_char();
            let mut row = Vec::new();
            let mut cells = vec![format!("κ{ki}")];
            for (h, rep) in subs.iter().zip(&modules) {
                let solver = solve_module_trace(&ring, &d, rep, tol)?.matched;
                let oracle = matched_vectg_oracle(h, kappa);
                if solver != oracle {
                    disagreements += 1;
                }
                row.push(solver);
                cells.push(if solver { "yes".into() } else { "no".into() });
            }
            matched.push(row);
            rows.push(cells);
        }
        json["matched"] = json!(matched);
        json["oracle_disagreements"] = json!(disagreements);
        let header: Vec<String> = std::iter::once("matched".to_string())
            .chain((0..subs.len()).map(|i| format!("H{i}")))
            .collect();
        let header: Vec<&str> = header.iter().map(String::as_str).collect();
        text.push_str(&table(&header, &rows));
        text.push_str(&format!("oracle disagreements: {disagreements}\n"));
    }

    if let Some(dir) = emit {
        fs::create_dir_all(dir)?;
        io::save_group(&dir.join("group.json"), &group)?;
        io::save_ring(&dir.join("ring.json"), &ring)?;
        for (k, kappa) in chars.iter().enumerate() {
            io::save_character(
                &dir.join(format!("char_{k}.json")),
                &ring,
                &kappa.to_dim_char(),
            )?;
        }
        for (i, rep) in modules.iter().enumerate() {
            io::save_module(&dir.join(format!("module_{i}.json")), &ring, rep)?;
        }
    }
    Ok(Output::ok(json, text))
}

fn cmd_builtin(tol: f64, name: &str, emit: Option<&Path>) -> Result<Output> {
    let ring = builtin_ring(name)?;
    let fp = fp_dimensions(&ring)?;
    let chars = if ring.is_commutative() {
        enumerate_characters(&ring)?
    } else {
        Vec::new()
    };
    let reg = regular_module(&ring);
    let json = json!({
        "name": name,
        "fingerprint": ring.fingerprint(),
        "ring": serde_json::to_value(&ring)?,
        "fp_dims": fp.iter().map(|&x| num(x)).collect::<Vec<_>>(),
        "characters": chars.iter().map(|ch| char_json(&ring, ch, tol)).collect::<Vec<_>>(),
        "regular_indecomposable": is_indecomposable(&reg),
    });
    let mut text = format!(
        "{name}: rank {}, simples {}\n",
        ring.rank(),
        ring.labels().join(", ")
    );
    for (k, ch) in chars.iter().enumerate() {
        text.push_str(&format!("character {k}\n"));
        text.push_str(&char_text(&ring, ch));
    }
    if let Some(dir) = emit {
        fs::create_dir_all(dir)?;
        io::save_ring(&dir.join("ring.json"), &ring)?;
        for (k, ch) in chars.iter().enumerate() {
            io::save_character(&dir.join(format!("char_{k}.json")), &ring, ch)?;
        }
        io::save_module(&dir.join("regular.json"), &ring, &reg)?;
    }
    Ok(Output::ok(json, text))
}
