import math

import numpy as np
import pytest

import qabacus


def dense(op):
    return op.toarray() if hasattr(op, "toarray") else np.asarray(op)


def test_car_ladders_agree():
    a_jw, ad_jw = qabacus.fermion_ladder_jordan_wigner(3)
    a_cl, ad_cl = qabacus.fermion_ladder_from_clifford(3)
    for x, y in zip(a_jw + ad_jw, a_cl + ad_cl):
        assert np.max(np.abs(dense(x) - dense(y))) <= 1e-12
    report = qabacus.verify_car(3)
    assert report["pass"]


def test_clifford_generators_anticommute():
    gens = [dense(g) for g in qabacus.clifford_generators(6)]
    for i, a in enumerate(gens):
        for j, b in enumerate(gens):
            expected = 2.0 * np.eye(8) if i == j else np.zeros((8, 8))
            assert np.allclose(a @ b + b @ a, expected, atol=1e-12)


def test_ccr_boundary_defect():
    c, cd = qabacus.boson_ladder(1, 6)
    comm = dense(c[0]) @ dense(cd[0]) - dense(cd[0]) @ dense(c[0])
    assert np.allclose(np.diag(comm)[:-1], 1.0, atol=1e-12)
    assert comm[-1, -1].real == pytest.approx(-6.0, abs=1e-12)
    assert qabacus.verify_ccr(2, 3)["pass"]


def test_intertwiner_budget():
    with pytest.raises(qabacus.BudgetExceeded):
        qabacus.intertwiner(21)


def test_sym_space():
    p = dense(qabacus.symmetrizer(3))
    assert np.allclose(p @ p, p, atol=1e-12)
    assert round(np.trace(p).real) == 4
    e = dense(qabacus.embed_sym(4))
    assert np.allclose(e.conj().T @ e, np.eye(5), atol=1e-12)
    c0, c1, c0d, c1d = qabacus.sym_ladder(3)
    out = dense(c0) @ np.array([0, 0, 1, 0])
    assert np.allclose(out, [0, math.sqrt(2), 0], atol=1e-15)


def test_sym_vectors():
    v = {"k": 2, "flavor": "e", "re": [1, 0, 0], "im": [0, 0, 0]}
    t = qabacus.basis_convert(v, "tilde")
    assert t["re"][0] == pytest.approx(math.sqrt(2))
    t11 = {"k": 2, "flavor": "tilde", "re": [0, 1, 0], "im": [0, 0, 0]}
    assert qabacus.sym_inner(t11, t11, "exp") == pytest.approx(0.5)


def test_su2_homomorphism():
    rng = np.random.default_rng(0)

    def haar():
        z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        q, r = np.linalg.qr(z)
        return q * (np.diag(r) / np.abs(np.diag(r)))

    u1, u2 = haar(), haar()
    lhs = qabacus.su2_induced(u1 @ u2, 5)
    rhs = qabacus.su2_induced(u1, 5) @ qabacus.su2_induced(u2, 5)
    assert np.max(np.abs(lhs - rhs)) <= 1e-10


def test_stellar_round_trip():
    cfg = qabacus.stars_from_poly([1, 0, -1])
    zetas = sorted(s["beta"][0] / s["alpha"][0] for s in cfg["stars"])
    assert zetas == pytest.approx([-1.0, 1.0])
    back = qabacus.poly_from_stars(cfg)
    assert np.allclose(back, [1, 0, -1], atol=1e-14)
    poles = qabacus.stars_from_poly([0, 0, 1])
    assert all(s["alpha"] == [0.0, 0.0] for s in poles["stars"])
    merged = qabacus.directional_derivative([1, -4, 4], 1, 0)
    assert np.allclose(merged, [2, -4])


def test_tape():
    psi = qabacus.tape_basis_state("0", 4)
    out = qabacus.append_blank(psi)
    assert [g["k"] for g in out["grades"]] == [2]
    assert qabacus.graded_inner(psi, out) == 0
    assert qabacus.graded_inner(out, out) == pytest.approx(1.0)
    flipped = qabacus.apply_gate(psi, np.array([[0, 1], [1, 0]], dtype=complex), 0)
    assert flipped["grades"][0]["re"] == [0.0, 1.0]
    sym = qabacus.symmetrize_tape(qabacus.tape_basis_state("01"))
    assert sym["grades"][0]["re"][1] == pytest.approx(1 / math.sqrt(2))
    with pytest.raises(ValueError):
        qabacus.apply_gate(psi, np.eye(4, dtype=complex), 0, strict=True)


def test_oscillator():
    table = qabacus.degeneracy_table(10)
    assert [row["multiplicity"] for row in table[:11]] == list(range(1, 12))
    h = dense(qabacus.hamiltonian_2d(2))
    assert h[4, 4].real == pytest.approx(3.0)


def test_verify_all_deterministic():
    a = qabacus.verify_all(0)
    b = qabacus.verify_all(0)
    assert a == b
    assert a["pass"]
