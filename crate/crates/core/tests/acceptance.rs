//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::path::Path;
use std::time::Instant;

use common::*;
use modtrace::catalog::{
    builtin_ring, group_characters, group_ring, matched_vectg_oracle, subgroups, vect_g_module,
};
use modtrace::cli;
use modtrace::fusion::{fp_dimensions, FusionRing};
use modtrace::io;
use modtrace::nimrep::is_indecomposable;
use modtrace::pivotal::{
    c_invariant, conjugate_char, enumerate_characters, global_dimension, is_spherical,
};
use modtrace::trace::{fp_module_trace, solve_module_trace};
use modtrace::{DimChar, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// 1. Vect_G criterion, exhaustive over abelian groups of order ≤ 12.
fn vect_g_exhaustive() -> Outcome {
    let start = Instant::now();
    let mut cases = 0usize;
    let mut disagreements = Vec::new();
    for (gname, g) in abelian_groups_upto_12() {
        let ring = group_ring(&g).map_err(|e| e.to_string())?;
        let subs = subgroups(&g, 64).map_err(|e| e.to_string())?;
        let chars = group_characters(&g).map_err(|e| e.to_string())?;
        for h in &subs {
            let rep = vect_g_module(&g, h).map_err(|e| e.to_string())?;
            for kappa in &chars {
                let cert = solve_module_trace(&ring, &kappa.to_dim_char(), &rep, TOL)
                    .map_err(|e| e.to_string())?;
                cases += 1;
                if cert.matched != matched_vectg_oracle(h, kappa) {
                    disagreements.push(format!("{gname} H={h:?} κ={:?}", kappa.phases));
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(disagreements.is_empty(), || {
        format!("disagreements: {disagreements:?}")
    })?;
    check(secs < 5.0, || format!("took {secs:.2}s"))?;
    Ok(format!(
        "{cases} (group, H, κ) cases, 0 disagreements, {secs:.2}s"
    ))
}

/// 2. Q² = dim(C)·Q and Q hermitian on ≥ 500 instances.
fn q_structure() -> Outcome {
    let pool = instance_pool();
    check(pool.len() >= 500, || {
        format!("only {} instances", pool.len())
    })?;
    let (mut worst_idem, mut worst_herm) = (0f64, 0f64);
    for inst in &pool {
        let cert =
            solve_module_trace(&inst.ring, &inst.ch, &inst.rep, TOL).map_err(|e| e.to_string())?;
        let r = &cert.q_report;
        worst_idem = worst_idem.max(r.idempotent_residual);
        worst_herm = worst_herm.max(r.hermitian_residual);
        check(r.idempotent_residual < 1e-8, || {
            format!("{}: ‖Q²−dim(C)Q‖ = {:e}", inst.name, r.idempotent_residual)
        })?;
        check(r.hermitian_residual < 1e-10, || {
            format!("{}: ‖Q−Q†‖ = {:e}", inst.name, r.hermitian_residual)
        })?;
    }
    Ok(format!(
        "{} instances; max ‖Q²−dim(C)Q‖ = {worst_idem:.1e}, max ‖Q−Q†‖ = {worst_herm:.1e}",
        pool.len()
    ))
}

/// 3. Right/left eigenvector contracts and the C dichotomy on matched instances.
fn eigen_contracts() -> Outcome {
    let mut matched = 0usize;
    for inst in instance_pool() {
        let cert =
            solve_module_trace(&inst.ring, &inst.ch, &inst.rep, TOL).map_err(|e| e.to_string())?;
        if !cert.matched {
            continue;
        }
        matched += 1;
        let right = cert.right_eigen_residual.unwrap_or(f64::INFINITY);
        let left = cert.left_eigen_residual.unwrap_or(f64::INFINITY);
        check(right < 1e-8, || {
            format!("{}: right residual {right:e}", inst.name)
        })?;
        check(left < 1e-8, || {
            format!("{}: left residual {left:e}", inst.name)
        })?;
        let c = c_invariant(&inst.ch);
        let dim = global_dimension(&inst.ch);
        let near_dim = (c - C64::new(dim, 0.0)).norm() < 1e-7;
        let near_zero = c.norm() < 1e-7;
        check(near_dim || near_zero, || format!("{}: C = {c}", inst.name))?;
        check(near_dim == is_spherical(&inst.ring, &inst.ch, TOL), || {
            format!("{}: C branch disagrees with is_spherical", inst.name)
        })?;
    }
    Ok(format!("{matched} matched instances"))
}

/// 4. The FP character is flexible and its trace is the Perron vector.
fn pseudo_unitary_flexibility() -> Outcome {
    let mut names: Vec<String> = vec!["fibonacci".into(), "ising".into(), "rep_s3".into()];
    names.extend((1..=8).map(|n| format!("zn:{n}")));
    let mut modules = 0usize;
    for name in &names {
        let ring = builtin_ring(name).map_err(|e| e.to_string())?;
        let fp = DimChar::from_real(&fp_dimensions(&ring).map_err(|e| e.to_string())?);
        for (mname, rep) in generated_modules(name, &ring) {
            if !is_indecomposable(&rep) {
                continue;
            }
            modules += 1;
            let cert = solve_module_trace(&ring, &fp, &rep, TOL).map_err(|e| e.to_string())?;
            let d = cert
                .dims()
                .ok_or_else(|| format!("{name}/{mname} unmatched"))?;
            let w = fp_module_trace(&ring, &rep).map_err(|e| e.to_string())?;
            for (x, y) in d.iter().zip(&w) {
                check((x - C64::new(*y, 0.0)).norm() < 1e-8, || {
                    format!("{name}/{mname}: d_M {d:?} vs FP {w:?}")
                })?;
            }
        }
    }
    Ok(format!(
        "{modules} indecomposable modules over {} rings",
        names.len()
    ))
}

/// 5. Fibonacci closed forms.
fn fibonacci_closed_form() -> Outcome {
    let p = phi();
    let ring = builtin_ring("fibonacci").map_err(|e| e.to_string())?;
    let chars = enumerate_characters(&ring).map_err(|e| e.to_string())?;
    let reg = modtrace::nimrep::regular_module(&ring);
    let expect = [(p + 2.0, [1.0, p]), (3.0 - p, [1.0, 1.0 - p])];
    for (ch, (dim, d)) in chars.iter().zip(expect) {
        let cert = solve_module_trace(&ring, ch, &reg, TOL).map_err(|e| e.to_string())?;
        check((cert.dim_c - dim).abs() < 1e-10, || {
            format!("dim(C) = {}", cert.dim_c)
        })?;
        let got = cert.dims().ok_or("unmatched")?;
        for (x, y) in got.iter().zip(d) {
            check((x - C64::new(y, 0.0)).norm() < 1e-10, || {
                format!("d_M = {got:?}")
            })?;
        }
    }
    check(chars.len() == 2, || format!("{} characters", chars.len()))?;
    Ok("dim(C) = φ+2 and 3−φ, d_M = (1, φ) and (1, 1−φ)".into())
}

/// 6. Conjugation is an involution whose fixed points are the spherical characters.
fn conjugation() -> Outcome {
    let mut names: Vec<String> = vec!["fibonacci".into(), "ising".into(), "rep_s3".into()];
    names.extend((1..=12).map(|n| format!("zn:{n}")));
    let mut count = 0usize;
    let mut fixed = 0usize;
    for name in &names {
        let ring = builtin_ring(name).map_err(|e| e.to_string())?;
        for ch in enumerate_characters(&ring).map_err(|e| e.to_string())? {
            count += 1;
            let back = conjugate_char(&conjugate_char(&ch));
            let err = back
                .d
                .iter()
                .zip(&ch.d)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            check(err < 1e-10, || format!("{name}: involution error {err:e}"))?;
            let is_fixed = conjugate_char(&ch).approx_eq(&ch, 1e-10);
            fixed += usize::from(is_fixed);
            check(is_fixed == is_spherical(&ring, &ch, TOL), || {
                format!("{name}: fixed point / spherical mismatch for {:?}", ch.d)
            })?;
        }
    }
    Ok(format!(
        "{count} characters, {fixed} spherical fixed points"
    ))
}

/// 7. dim⟨m,m⟩ > 0 and the Morita rescaling identity.
fn frobenius_positivity() -> Outcome {
    let mut objects = 0usize;
    for inst in instance_pool().into_iter().filter(indecomposable) {
        let cert =
            solve_module_trace(&inst.ring, &inst.ch, &inst.rep, TOL).map_err(|e| e.to_string())?;
        let Some(d) = cert.dims() else { continue };
        let k = d.len();
        for m in 0..k {
            objects += 1;
            let dim_a = cert.q.q[m][m].re;
            check(dim_a > 1e-9, || {
                format!("{}: dim⟨m{m},m{m}⟩ = {dim_a}", inst.name)
            })?;
            for n in 0..k {
                let err = (cert.q.q[n][m] - d[m].conj() * d[n]).norm();
                check(err < 1e-8, || {
                    format!("{}: rescale residual {err:e}", inst.name)
                })?;
            }
        }
    }
    Ok(format!("{objects} module simples"))
}

/// 8. 2×2-minor rank-one test against a brute-force eigenspace search.
fn oracle_equivalence() -> Outcome {
    let pool = small_pool();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut matched = 0usize;
    for _ in 0..200 {
        let inst = &pool[rng.random_range(0..pool.len())];
        let cert =
            solve_module_trace(&inst.ring, &inst.ch, &inst.rep, TOL).map_err(|e| e.to_string())?;
        let brute = brute_force_nowhere_zero(inst).is_some();
        check(cert.matched == brute, || {
            format!(
                "{}: minors say {}, search says {brute}",
                inst.name, cert.matched
            )
        })?;
        matched += usize::from(brute);
    }
    Ok(format!(
        "200 draws from {} small instances, {matched} matched, 0 disagreements",
        pool.len()
    ))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["modtrace"];
    argv.extend_from_slice(args);
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 output"))
}

/// 9. Byte-identical JSON across runs, and emit/reload round trips.
fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let root = dir.path();
    let mut runs = 0usize;
    let mut twice = |args: Vec<String>| -> Result<(), String> {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (c1, o1) = run_cli(&args);
        let (c2, o2) = run_cli(&args);
        runs += 1;
        check(c1 == 0 && c2 == 0, || format!("{args:?} exited {c1}/{c2}"))?;
        check(o1 == o2, || format!("{args:?} output differs between runs"))?;
        serde_json::from_str::<serde_json::Value>(&o1).map_err(|e| format!("{args:?}: {e}"))?;
        Ok(())
    };
    let s = |x: &str| x.to_string();
    for name in ["fibonacci", "ising", "rep_s3", "zn:2", "zn:3", "zn:4"] {
        let emit = root.join(name.replace(':', "_"));
        let e = emit.to_string_lossy().to_string();
        twice(vec![
            s("builtin"),
            s(name),
            s("--emit"),
            e.clone(),
            s("--json"),
        ])?;
        twice(vec![s("validate"), s(name), s("--json")])?;
        twice(vec![s("fp-dims"), s(name), s("--json")])?;
        twice(vec![s("characters"), s(name), s("--json")])?;
        let ring_file = format!("{e}/ring.json");
        let module = format!("{e}/regular.json");
        let ch = format!("{e}/char_0.json");
        twice(vec![
            s("trace"),
            ring_file.clone(),
            s("--char"),
            ch.clone(),
            s("--module"),
            module.clone(),
            s("--json"),
        ])?;
        twice(vec![
            s("flexible"),
            ring_file.clone(),
            s("--char"),
            s("1"),
            s("--modules"),
            module.clone(),
            module.clone(),
            s("--json"),
        ])?;
        twice(vec![
            s("frobenius"),
            ring_file.clone(),
            s("--char"),
            ch.clone(),
            s("--module"),
            module.clone(),
            s("--object"),
            s("0"),
            s("--json"),
        ])?;

        let ring = builtin_ring(name).map_err(|e| e.to_string())?;
        round_trip(&emit, &ring)?;
    }
    for group in ["Z:4", "Z2xZ2", "S3"] {
        let emit = root.join(group.replace(':', "_"));
        let e = emit.to_string_lossy().to_string();
        twice(vec![
            s("vectg"),
            s("--group"),
            s(group),
            s("--subgroups"),
            s("--characters"),
            s("--emit"),
            e.clone(),
            s("--json"),
        ])?;
        let ring = io::load_ring(&emit.join("ring.json")).map_err(|e| e.to_string())?;
        round_trip(&emit, &ring)?;
        twice(vec![
            s("vectg"),
            s("--group"),
            format!("{e}/group.json"),
            s("--json"),
        ])?;
    }
    Ok(format!(
        "{runs} invocations byte-identical across two runs; emitted files reload exactly"
    ))
}

/// Every emitted file reloads to an equal value and re-emits identically.
fn round_trip(dir: &Path, ring: &FusionRing) -> Result<(), String> {
    let mut entries: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    entries.sort();
    let scratch = dir.join("again.json");
    for path in entries {
        let fname = path
            .file_name()
            .and_then(|s| s.to_str())
            .unwrap_or_default()
            .to_string();
        let original = std::fs::read(&path).map_err(|e| e.to_string())?;
        let err = |e: modtrace::Error| format!("{fname}: {e}");
        if fname == "ring.json" {
            let r = io::load_ring(&path).map_err(err)?;
            check(&r == ring, || "ring differs".into())?;
            io::save_ring(&scratch, &r).map_err(err)?;
        } else if fname == "group.json" {
            let g = io::load_group(&path).map_err(err)?;
            io::save_group(&scratch, &g).map_err(err)?;
        } else if fname.starts_with("char_") {
            let ch = io::load_character(&path, ring).map_err(err)?;
            io::save_character(&scratch, ring, &ch).map_err(err)?;
        } else if fname.starts_with("module_") || fname == "regular.json" {
            let m = io::load_module(&path, ring).map_err(err)?;
            io::save_module(&scratch, ring, &m).map_err(err)?;
        } else {
            continue;
        }
        let again = std::fs::read(&scratch).map_err(|e| e.to_string())?;
        check(again == original, || {
            format!("{fname} does not re-emit identically")
        })?;
    }
    let _ = std::fs::remove_file(&scratch);
    Ok(())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "AC1 Vect_G criterion (exhaustive, order <= 12)",
            vect_g_exhaustive,
        ),
        (
            "AC2 Q structural properties (>= 500 instances)",
            q_structure,
        ),
        ("AC3 eigenvector contracts and C dichotomy", eigen_contracts),
        (
            "AC4 FP character flexible, trace = Perron vector",
            pseudo_unitary_flexibility,
        ),
        ("AC5 Fibonacci closed form", fibonacci_closed_form),
        (
            "AC6 conjugation involution, spherical fixed points",
            conjugation,
        ),
        (
            "AC7 Frobenius positivity and rescaling",
            frobenius_positivity,
        ),
        (
            "AC8 rank-one test vs brute-force eigenspace search",
            oracle_equivalence,
        ),
        ("AC9 CLI determinism and round trips", cli_determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
