from __future__ import annotations

from iolab.checks import CheckResult, verify
from iolab.constructions import QSpec, incidence_bipartite, q_construction, semiorder
from iolab.poset import incomparability_graph, poset_from_pairs


def names(results):
    return {r.name: r.status for r in results}


def test_verify_on_interval_orders():
    for P in (semiorder(7), incidence_bipartite(4), q_construction(QSpec((semiorder(4), semiorder(5))))):
        res = names(verify(P))
        assert "fail" not in res.values()
        assert res["maximal antichains agree with oracle"] == "pass"


def test_verify_skips_interval_checks_for_2plus2():
    res = verify(poset_from_pairs(4, [(0, 1), (2, 3)]))
    assert all(r.status != "fail" for r in res)
    assert len(res) < len(verify(semiorder(4)))


def test_verify_on_a_graph():
    res = verify(incomparability_graph(semiorder(6)))
    assert all(r.status == "pass" for r in res)


def test_oracle_checks_skip_above_the_guard():
    res = verify(semiorder(20))
    assert any(r.status == "skip" for r in res)
    assert not any(r.status == "fail" for r in res)


def test_seeded_runs_agree():
    P = incidence_bipartite(5)
    assert [r.to_json() for r in verify(P, seed=3)] == [r.to_json() for r in verify(P, seed=3)]


def test_check_result_json():
    assert CheckResult("x", "pass", "").to_json()["status"] == "pass"
