import pytest

import ndlham as nh
from ndlham.errors import InconsistentTrace, InvalidParameters
from ndlham.hamiltonize import merge_budget


def hamilton_factor(g):
    return next(f for f in nh.enumerate_two_factors(g) if f.num_components == 1)


def test_posa_close_adjacent_endpoints():
    k4 = nh.complete(4)
    kind, path, rots = nh.posa_close(k4, (0, 1, 2, 3), forbidden=(), budget=5)
    assert kind == "cycle"
    assert rots == []


def test_posa_close_extendable():
    kind, path, rots = nh.posa_close(nh.cycle(5), (0, 1), forbidden=(), budget=5)
    assert kind == "extendable"
    assert rots == []


def test_posa_close_petersen_spanning_path_never_closes():
    pet = nh.petersen()
    # a Hamilton path of the Petersen graph
    hp = (0, 1, 2, 3, 4, 9, 6, 8, 5, 7)
    for a, b in zip(hp, hp[1:]):
        assert pet.has_edge(a, b)
    kind, _, _ = nh.posa_close(pet, hp, forbidden=(), budget=100)
    assert kind == "failure"


def test_posa_close_rejects_bad_path():
    with pytest.raises(InvalidParameters):
        nh.posa_close(nh.cycle(5), (0, 2), forbidden=(), budget=3)


def test_trivial_single_cycle():
    c6 = nh.cycle(6)
    cert = nh.certify(c6)
    f = hamilton_factor(c6)
    tr = nh.two_factor_to_hamilton(c6, f, cert)
    assert tr.success
    assert tr.replacements == 0


def test_k6_two_triangles():
    k6 = nh.complete(6)
    cert = nh.certify(k6)
    f = nh.TwoFactor.from_components([(0, 1, 2), (3, 4, 5)])
    tr = nh.two_factor_to_hamilton(k6, f, cert)
    assert tr.success
    assert tr.replacements <= 4
    nh.replay(k6, f, tr)


def test_petersen_all_factors_fail():
    pet = nh.petersen()
    cert = nh.certify(pet)
    for f in nh.enumerate_two_factors(pet):
        tr = nh.two_factor_to_hamilton(pet, f, cert)
        assert not tr.success


def test_all_factors_small_complete_graphs():
    for n in range(4, 8):
        g = nh.complete(n)
        cert = nh.certify(g)
        for f in nh.enumerate_two_factors(g):
            tr = nh.two_factor_to_hamilton(g, f, cert)
            assert tr.success, (n, f)
            nh.replay(g, f, tr)
            assert all(x <= tr.budget for x in tr.per_merge_replacements)


def test_determinism():
    g = nh.random_regular(10, 4, 2)
    cert = nh.certify(g)
    fs = nh.enumerate_two_factors(g)[:20]
    for f in fs:
        a = nh.two_factor_to_hamilton(g, f, cert)
        b = nh.two_factor_to_hamilton(g, f, cert)
        assert a == b


def test_budget_formula():
    import math

    assert merge_budget(10, 3, 2.0, 10.0) == math.ceil(
        10 * math.log(10) / math.log(1.5)
    )
    assert merge_budget(12, 2, 2.0, 10.0) == 12  # degenerate d/lambda


def test_replay_rejects_corrupt_trace():
    k6 = nh.complete(6)
    cert = nh.certify(k6)
    f = nh.TwoFactor.from_components([(0, 1, 2), (3, 4, 5)])
    tr = nh.two_factor_to_hamilton(k6, f, cert)
    import dataclasses

    bad = dataclasses.replace(tr, trace=tr.trace + (("insert", 0, 1),))
    with pytest.raises(InconsistentTrace):
        nh.replay(k6, f, bad)
    pet = nh.petersen()
    fp = nh.enumerate_two_factors(pet)[0]
    bad2 = dataclasses.replace(tr, trace=(("insert", 0, 2),))  # non-edge of Petersen
    with pytest.raises(InconsistentTrace):
        nh.replay(pet, fp, bad2)


def test_replay_rejects_wrong_factor():
    k6 = nh.complete(6)
    cert = nh.certify(k6)
    f = nh.TwoFactor.from_components([(0, 1, 2), (3, 4, 5)])
    tr = nh.two_factor_to_hamilton(k6, f, cert)
    other = nh.TwoFactor.from_components([(0, 1, 3), (2, 4, 5)])
    with pytest.raises(InconsistentTrace):
        nh.replay(k6, other, tr)


def test_trace_json_shape():
    k6 = nh.complete(6)
    cert = nh.certify(k6)
    f = nh.TwoFactor.from_components([(0, 1, 2), (3, 4, 5)])
    d = nh.two_factor_to_hamilton(k6, f, cert).to_json_dict()
    assert d["success"] is True
    assert all(set(op) == {"op", "u", "v"} for op in d["trace"])
