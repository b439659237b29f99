"""Smoke test for the modtrace Python extension.

Build and install first, e.g. ``maturin develop -m crates/python/Cargo.toml``,
then run ``python python/smoke_test.py``.
"""

import math

import modtrace

PHI = (1 + math.sqrt(5)) / 2


def close(a, b, tol=1e-10):
    return abs(a - b) <= tol


def fibonacci():
    ring, chars = modtrace.builtin("fibonacci")
    assert ring.labels == ["1", "tau"]
    assert ring.validate()["valid"]
    assert close(ring.fp_dimensions()[1], PHI)
    assert len(chars) == 2

    reg = ring.regular_module()
    cert = modtrace.solve_module_trace(ring, chars[0], reg)
    assert cert.matched
    assert close(cert.dim_c, PHI + 2)
    assert close(cert.d[1], PHI)
    assert cert.right_eigen_residual < 1e-8

    galois = modtrace.solve_module_trace(ring, chars[1], reg)
    assert galois.matched
    assert close(galois.dim_c, 3 - PHI)
    assert close(galois.d[1], 1 - PHI)

    frob = modtrace.frobenius_report(ring, reg, 1, cert)
    assert frob["positivity_ok"] and frob["morita"]["ok"]

    again = modtrace.FusionRing.from_json(ring.to_json())
    assert again == ring


def vect_g():
    ring, chars, modules = modtrace.vect_g("Z:4")
    disagreements = 0
    for ch, phases in chars:
        for subgroup, rep in modules:
            cert = modtrace.solve_module_trace(ring, ch, rep)
            oracle = all(phases[h] == 0 for h in subgroup)
            disagreements += cert.matched != oracle
    assert disagreements == 0


def unmatched_diagnostic():
    ring, chars = modtrace.builtin("zn:2")
    single = modtrace.NimRep(1, [[[1]], [[1]]])
    assert single.validate(ring)["valid"]
    cert = modtrace.solve_module_trace(ring, chars[1], single)
    assert not cert.matched and cert.d is None
    assert any("zero entry in Q" in line for line in cert.diagnostics)


def rejects_bad_input():
    try:
        modtrace.FusionRing(["1"], 0, [0], [[[-1]]])
    except ValueError:
        pass
    else:
        raise AssertionError("negative structure constant accepted")


def main():
    fibonacci()
    vect_g()
    unmatched_diagnostic()
    rejects_bad_input()
    print("modtrace python smoke test: ok")


if __name__ == "__main__":
    main()
