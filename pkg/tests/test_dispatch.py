import pytest
from hypothesis import given

from conftest import frameworks
from prefext import ArgumentationFramework, InputError, dispatch, generate
from prefext.dispatch import (
    MIS_ABOVE,
    ORIENTED_BELOW,
    base_mis,
    base_mls,
    base_oriented,
    choose,
    crossovers,
    thresholds_csv,
)


def test_choose_examples():
    assert choose(generate("Fn", (5,))) == "oriented"
    assert choose(generate("bidirTriangles", (2,))) == "mis"
    af = ArgumentationFramework(4, [(0, 1), (1, 0), (1, 2), (2, 1), (3, 0)])
    assert choose(af) == "mls"


def test_empty_framework():
    rep = dispatch(ArgumentationFramework(0))
    assert rep.extensions == [0] and rep.count == 1


def test_thresholds_match_constants():
    a, b = crossovers()
    assert round(a, 4) in (0.6684, 0.6685)
    assert round(b, 4) in (0.8004, 0.8005)
    assert ORIENTED_BELOW == 0.6684 and MIS_ABOVE == 0.8004
    assert abs(base_mls(1) - 1.48210) < 1e-5 and abs(base_mls(0) - 1.29289) < 1e-5
    assert abs(base_mis(0.5) - 1.44225) < 1e-5
    assert abs(base_oriented(0) - 1.23205) < 1e-5


def test_thresholds_csv():
    lines = thresholds_csv().splitlines()
    assert lines[0] == "r,base_oriented,base_mls,base_mis"
    assert len(lines) == 102
    assert lines[-1].startswith("1.0000,")


@pytest.mark.parametrize("mode", ["auto", "oracle", "mis", "oriented", "mls", "mase2k"])
def test_modes_agree_with_loops(mode):
    af = ArgumentationFramework(5, [(0, 0), (0, 1), (1, 2), (2, 1), (3, 2), (4, 3), (3, 4)])
    rep = dispatch(af, mode)
    assert sorted(rep.extensions) == sorted(dispatch(af, "oracle").extensions)
    assert rep.count == len(rep.extensions)


def test_unknown_mode():
    with pytest.raises(InputError):
        dispatch(ArgumentationFramework(1), "magic")


def test_report_dict():
    rep = dispatch(generate("bidirTriangles", (1,)), instance="t")
    d = rep.as_dict()
    assert d["algorithm"] == "mis" and d["count"] == 3 and d["r"] == 1.0
    assert set(d["stats"]) == {"leaves", "nodes", "max_depth", "calls"}


@given(frameworks(max_n=8, loops=True))
def test_all_modes_set_equal(af):
    want = sorted(dispatch(af, "oracle").extensions)
    for mode in ("auto", "mis", "oriented", "mls", "mase2k"):
        assert sorted(dispatch(af, mode).extensions) == want
