"""Smoke tests for the python bindings: exact certificates, stability
arithmetic, and a small end-to-end solve + reconstruction."""

import os
import sys

MODULE_DIR = os.environ.get("G2OCT_MODULE_DIR")
if MODULE_DIR:
    sys.path.insert(0, MODULE_DIR)

import _g2oct as g2  # noqa: E402


def test_algebra_certificate_passes():
    cert = g2.algebra_certificate()
    assert cert.all_pass()
    assert len(cert.checks) >= 15
    assert cert.failures() == 0


def test_stability_classify_matches_oracle():
    for genus in (2, 3):
        for d in range(-1, 6 * genus - 5):
            for beta in (False, True):
                for delta in (False, True):
                    datum = g2.HiggsDatum(genus, d, beta, delta)
                    a = g2.classify(datum)
                    b = g2.enumeration_oracle(datum)
                    assert a.verdict == b.verdict


def test_moduli_dimensions():
    for genus in (2, 5):
        for d in range(0, 6 * genus - 5):
            m = g2.moduli_description(genus, d)
            assert not m.empty
            assert m.total_dim == d + 8 * genus - 8
    assert g2.moduli_description(2, 0).components == 16


def test_solve_and_reconstruct():
    p = g2.SolverProblem()
    p.nx = p.ny = 17
    p.b_coeffs = [1.0 + 0.0j]
    p.dd_coeffs = [1.0 + 0.0j]
    ok, c1, c3 = g2.constant_balance(1.0 + 0.0j, 1.0 + 0.0j)
    assert ok
    p.u1_boundary = lambda x, y: c1
    p.u3_boundary = lambda x, y: c3
    grid, report = g2.newton_solve(p)
    assert report.converged
    assert max(abs(v - c1) for v in grid.u1) < 1e-10
    conn = g2.assemble_flat_connection(p, grid)
    curve = g2.reconstruct_curve(conn)
    assert curve.worst_qf < 1e-5
    checks = g2.curve_checks(curve, conn, p)
    assert checks.cert.all_pass()
    assert checks.rank2_points > 0
