import math
import random

import numpy as np
import pytest

import ndlham as nh
from ndlham.errors import NotRegular


def test_k4_spectrum():
    eigs = nh.spectrum(nh.complete(4))
    assert eigs == pytest.approx([3, -1, -1, -1], abs=1e-9)


def test_petersen_spectrum_char_poly():
    eigs = nh.spectrum(nh.petersen())
    expected = [3] + [1] * 5 + [-2] * 4
    assert eigs == pytest.approx(expected, abs=1e-9)
    # cross-check against the characteristic polynomial (x-3)(x-1)^5(x+2)^4
    for x in eigs:
        assert abs((x - 3) * (x - 1) ** 5 * (x + 2) ** 4) < 1e-6


def test_c5_circulant_formula():
    eigs = nh.spectrum(nh.cycle(5))
    expected = sorted(
        (2 * math.cos(2 * math.pi * k / 5) for k in range(5)), reverse=True
    )
    assert eigs == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("q", [5, 13, 17, 29])
def test_paley_closed_form(q):
    eigs = nh.spectrum(nh.paley(q))
    d = (q - 1) // 2
    pos = (-1 + math.sqrt(q)) / 2
    neg = (-1 - math.sqrt(q)) / 2
    assert eigs[0] == pytest.approx(d, abs=1e-9)
    for x in eigs[1:]:
        assert min(abs(x - pos), abs(x - neg)) < 1e-9


def test_jacobi_matches_lapack(corpus):
    for name, g in corpus:
        mine = np.array(nh.spectrum(g))
        ref = np.sort(np.linalg.eigvalsh(g.adjacency_matrix()))[::-1]
        assert np.allclose(mine, ref, atol=1e-9), name


def test_trace_invariants(corpus):
    for name, g in corpus:
        eigs = nh.spectrum(g)
        n, d = g.n, g.degree(0)
        assert abs(sum(eigs)) < n * 1e-9, name
        assert abs(sum(x * x for x in eigs) - n * d) < n * 1e-8, name
        assert abs(eigs[0] - d) < 1e-9, name


def test_certify_examples():
    cert = nh.certify(nh.complete(4), 0.1)
    assert cert.d == 3
    assert cert.lam == pytest.approx(1.0, abs=1e-9)
    assert cert.eigenvalue_ratio == pytest.approx(3.0, abs=1e-8)

    cert = nh.certify(nh.petersen(), 0.1)
    assert cert.lam == pytest.approx(2.0, abs=1e-9)
    assert cert.eigenvalue_ratio == pytest.approx(1.5, abs=1e-8)

    cert = nh.certify(nh.paley(13), 0.1)
    assert cert.lam == pytest.approx((1 + math.sqrt(13)) / 2, abs=1e-9)
    assert cert.eigenvalue_ratio == pytest.approx(6 / 2.302776, rel=1e-5)


def test_certify_diagnostics_natural_logs():
    cert = nh.certify(nh.paley(13), 0.1)
    lam = cert.lam
    assert cert.cond1_margin == pytest.approx(
        (6 / lam) / math.log(13) ** 1.1, rel=1e-12
    )
    assert cert.cond2_ratio == pytest.approx(
        math.log(6) * math.log(6 / lam) / math.log(13), rel=1e-12
    )


def test_certify_connectivity():
    assert nh.certify(nh.petersen()).connected
    two_triangles = nh.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not nh.certify(two_triangles).connected


def test_certify_rejects_irregular():
    path = nh.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(NotRegular):
        nh.certify(path)


def test_relabel_invariance():
    rng = random.Random(7)
    g = nh.paley(13)
    base = nh.spectrum(g)
    for _ in range(3):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert nh.spectrum(g.relabeled(perm)) == pytest.approx(base, abs=1e-8)


def test_certificate_json_keys():
    d = nh.certify(nh.complete(4)).to_json_dict()
    assert set(d) == {
        "n", "d", "lambda", "eigenvalues", "eigenvalue_ratio",
        "cond1_margin", "cond2_ratio", "connected", "epsilon",
    }
