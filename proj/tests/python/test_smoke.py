"""Smoke tests for the twinwidth extension module."""

import pytest

import twinwidth as tw

P4 = "p tww 4 3\n1 2\n2 3\n3 4\n"
C5 = "p tww 5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n"


def test_parse_instance():
    n, edges = tw.parse_instance(P4)
    assert n == 4
    assert sorted(edges) == [(1, 2), (2, 3), (3, 4)]


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError, match="line 3"):
        tw.parse_instance("p tww 3 2\n1 2\n1 2\n")


def test_render_sequence():
    assert tw.render_sequence([(1, 2), (1, 3)]) == "1 2\n1 3\n"
    assert tw.render_sequence([]) == ""


def test_verify_sequence():
    width, per_step = tw.verify_sequence(P4, [(1, 2), (1, 3), (1, 4)])
    assert width == 1
    assert per_step == [1, 1, 1]
    with pytest.raises(ValueError, match="step 2"):
        tw.verify_sequence(P4, [(1, 3), (1, 3), (1, 4)])


def test_solve_exact():
    res = tw.solve_exact(P4)
    assert res["width"] == 1
    assert res["optimal"] is True
    assert len(res["sequence"]) == 3
    width, _ = tw.verify_sequence(P4, res["sequence"])
    assert width == 1


def test_solve_heuristic():
    res = tw.solve_heuristic(C5, seed=3, rounds=8)
    assert res["width"] == 2  # optimal for C5, reachable by the greedy seed
    width, _ = tw.verify_sequence(C5, res["sequence"])
    assert width == 2


def test_oracle():
    res = tw.oracle_twinwidth(C5)
    assert res["width"] == 2
    width, _ = tw.verify_sequence(C5, res["sequence"])
    assert width == 2


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
