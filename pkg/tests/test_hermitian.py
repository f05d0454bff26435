import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from chtriangles.errors import DegenerateGram, IsotropicArgument, NotPolar
from chtriangles.hermitian import (
    HermitianMatrix, PointKind, Position, classify_point, geodesic_position, gram_signature, inner,
    norm_sq, preserves, reflection, tance, vec,
)
from chtriangles.triangle import build_gram

STD = HermitianMatrix.standard()
E = np.eye(3, dtype=complex)

cplx = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)
vectors = st.tuples(cplx, cplx, cplx).map(lambda c: np.array(c, dtype=complex))


def _tance_scalar(p, q):
    # independent re-evaluation for diag(1, 1, -1)
    def form(u, v):
        return u[0].conjugate() * v[0] + u[1].conjugate() * v[1] - u[2].conjugate() * v[2]
    return (form(p, q) * form(q, p)).real / (form(p, p).real * form(q, q).real)


def test_inner_product_examples():
    G = build_gram(0.6, 0.7, 0.8, 0.1)
    assert inner(E[0], E[0], G) == pytest.approx(1)
    assert inner(E[0], E[1], G) == pytest.approx(0.6)
    assert inner(E[2], E[2], STD) == -1


def test_inner_is_conjugate_linear_in_first_slot():
    u, v = np.array([1, 2j, 0.5]), np.array([0.3, -1, 2j])
    a = 2 - 1j
    assert inner(a * u, v, STD) == pytest.approx(a.conjugate() * inner(u, v, STD))
    assert inner(u, a * v, STD) == pytest.approx(a * inner(u, v, STD))


def test_tance_examples():
    p = vec(1, 0.2, 0.3)
    assert tance(p, p, STD) == pytest.approx(1)
    G = build_gram(0.6, 0.7, 0.8, 0.1)
    assert tance(E[0], E[1], G) == pytest.approx(0.36)
    with pytest.raises(IsotropicArgument):
        tance(vec(1, 0, 1), p, STD)


@given(vectors, vectors, cplx, cplx)
def test_tance_matches_scalar_oracle_and_is_projective(p, q, a, b):
    if abs(norm_sq(p, STD)) < 1e-3 or abs(norm_sq(q, STD)) < 1e-3 or abs(a) < 1e-3 or abs(b) < 1e-3:
        return
    ta = tance(p, q, STD)
    assert ta == pytest.approx(_tance_scalar(p, q), rel=1e-12, abs=1e-12)
    assert tance(a * p, b * q, STD) == pytest.approx(ta, rel=1e-10, abs=1e-10)


def test_classify_point_examples():
    assert classify_point(vec(0, 0, 1), STD).kind is PointKind.NEGATIVE
    assert classify_point(vec(1, 0, 1), STD).kind is PointKind.ISOTROPIC
    assert classify_point(vec(1, 0, 0), STD).kind is PointKind.POSITIVE


def test_geodesic_positions():
    c = math.cos(math.pi / 4)
    G = build_gram(c, c, c, 0.0)
    pos = geodesic_position(E[0], E[1], G)
    assert pos.kind is Position.CONCURRENT and pos.angle == pytest.approx(math.pi / 4)
    # (3,3,3) start: I2 p1 against p3 is asymptotic
    G = build_gram(0.5, 0.5, 0.5, -1.0)
    I2 = reflection(E[1], G)
    assert geodesic_position(I2 @ E[0], E[2], G).kind is Position.ASYMPTOTIC
    assert geodesic_position(vec(1, 0, 0), vec(0, 1, 0), STD).kind is Position.CONCURRENT
    with pytest.raises(NotPolar):
        geodesic_position(vec(0, 0, 1), vec(1, 0, 0), STD)


def test_reflection_examples():
    M = reflection(E[0], STD)
    assert np.allclose(M, np.diag([1, -1, -1]))
    r1 = 0.8
    G = build_gram(r1, 0.9, 0.85, 0.3)
    M2 = reflection(E[1], G)
    assert np.allclose(M2 @ E[1], E[1])
    assert np.allclose(M2 @ E[0], 2 * r1 * E[1] - E[0])


@given(st.floats(0.55, 1.0), st.floats(0.55, 1.0), st.floats(0.55, 1.0), st.floats(-1, 1), vectors)
def test_reflection_is_involutive_isometry(r1, r2, r3, t, p):
    try:
        G = build_gram(r1, r2, r3, t)
    except Exception:
        return
    if norm_sq(p, G) < 1e-2:
        return
    M = reflection(p, G)
    assert np.allclose(M @ M, np.eye(3), atol=1e-10)
    assert preserves(M, G)
    assert abs(np.linalg.det(M) - 1) < 1e-10


def test_gram_signature_examples():
    assert gram_signature(STD) == (2, 1, 0)
    assert gram_signature(build_gram(0.5, 0.5, 0.5, -1.0)) == (2, 0, 1)
    c = math.cos(math.pi / 14)
    assert gram_signature(build_gram(c, c, c, -1.0)) == (2, 1, 0)


def test_signature_tracks_admissibility_on_grid():
    for r1 in np.linspace(0.5, 1, 6):
        for r2 in np.linspace(r1, 1, 4):
            for r3 in np.linspace(r2, 1, 4):
                for t in np.linspace(-1, 1, 9):
                    d = 1 + 2 * r1 * r2 * r3 * t - (r1 * r1 + r2 * r2 + r3 * r3)
                    if d < -1e-6:
                        assert gram_signature(build_gram(r1, r2, r3, t)) == (2, 1, 0)


def test_hermitian_matrix_is_symmetrised_and_frozen():
    with pytest.raises(DegenerateGram):
        HermitianMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    H = HermitianMatrix.from_upper((1, 1, 1), 0.5j, 0.2, 0.1)
    assert H[1, 0] == -0.5j
    with pytest.raises(ValueError):
        H.array[0, 0] = 3
