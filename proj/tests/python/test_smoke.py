import json

import pytest

import redei_forge as rf


def test_thue_frozen():
    assert rf.solve_thue(7, 2) == (1, 2)
    assert rf.solve_thue(13, 5) == (2, 3)


def test_vinogradov_range():
    p, alpha = 11, 3
    for a in range(1, p):
        x, y = rf.solve_vinogradov(p, a, alpha)
        assert 1 <= x <= alpha
        assert 1 <= y <= p // alpha
        assert (a * x) % p in ((y) % p, (-y) % p)


def test_expressible_frozen():
    rep = rf.expressible_set(7, 2, 1)
    assert rep["expressible"] == [1, 3, 4, 6]
    assert rep["inexpressible"] == [2, 5]
    assert rep["bound"] == 4
    assert rep["bound_applies"] is True
    assert rep["passed"] is True
    by_a = {w["a"]: w for w in rep["witnesses"]}
    assert by_a[1]["x"] == 1 and by_a[1]["y"] == 1


def test_redei_audit_pipeline():
    rep = rf.redei_audit(7, 2, 1)
    assert rep["branch"] == "pipeline"
    assert rep["division_ok"] is True
    assert rep["exceptional"] == [2, 5]
    assert rep["smallest_index"] == 2
    assert rep["d_bound"] == 2
    assert rep["multiplicities"] == {0: 3, 1: 3}
    assert rep["passed"] is True


def test_redei_audit_pigeonhole_branch():
    rep = rf.redei_audit(5, 4, 1)
    assert rep["branch"] == "delta-exceeds-p"
    assert rep["exceptional"] == []
    assert rep["passed"] is True


def test_find_pair_and_bounds():
    rep = rf.find_pair(13, 2, 4, 4)
    assert (rep["s"], rep["y"]) == (1, 2)
    assert (rep["constructive_s"], rep["constructive_y"]) == (1, 2)
    assert rep["h_new"] == 3 and rep["h_classic"] == 4

    cmp_ = rf.compare_bounds(13, 2, 4)
    assert cmp_["claim_a_applicable"] and cmp_["claim_a_holds"]


def test_two_squares():
    assert rf.sum_two_squares(13) == (2, 3)
    assert rf.sum_two_squares(29) == (2, 5)
    with pytest.raises(ValueError):
        rf.sum_two_squares(7)


def test_directions():
    pts = [(0, 0), (1, 1), (0, 1)]
    r = rf.ratio_set(13, pts)
    assert r["q"] == [0, 1]
    assert r["has_infinite_direction"] is True

    rep = rf.verify_direction_bound(13, pts, 1)
    assert rep["passed"] is True
    assert rep["observed"] == 2


def test_hp_and_corollary():
    chk = rf.hp_check(13, [0, 1], 4)
    assert chk["member"] is True and chk["bound_holds"] is True

    sr = rf.corollary_max_search(13, 6)
    assert sr["max_size"] == 3
    assert sr["bound_holds"] is True


def test_sweep_report_roundtrip():
    out = rf.run_sweep("main", p_min=3, p_max=13, workers=2, seed=42)
    assert out["failed"] == 0
    records = json.loads(out["report"])
    assert len(records) == out["records"] > 0
    assert all(rec["passed"] for rec in records)
    assert all(rec["elapsed_ms"] == 0 for rec in records)


def test_input_errors_map_to_value_error():
    with pytest.raises(ValueError):
        rf.solve_thue(8, 2)
    with pytest.raises(ValueError):
        rf.expressible_set(7, 0, 1)
    with pytest.raises(ValueError):
        rf.run_sweep("nonsense", 3, 13)
