from __future__ import annotations

import pytest

from glp.catalog import build_construction, catalog, lookup
from glp.dynkin import algebra_dim
from glp.errors import UnknownConstruction
from glp.slicer import check_additivity

NAMES = [c.name for c in catalog()]


@pytest.mark.parametrize("name", NAMES)
def test_every_construction_verifies(name):
    res = build_construction(name)
    assert res.ok, [c.line() for c in res.checks if not c.passed]
    c = res.construction
    assert sum(c.expected_slice_sizes.values()) + c.base_rank + c.k == algebra_dim(c.expected_type)
    assert sum(res.graded.dims().values()) == algebra_dim(c.expected_type)


def test_family_groups_cover_listed_families():
    families = {c.family for c in catalog()}
    assert families == {
        "Bn-from-An-1", "G2-from-A1-kind3", "Cn-from-Sym2", "G2-from-Sym3", "Dn-from-Λ2",
        "E6/E7/E8-from-Λ3", "F4-from-spin7", "F4-from-C3ω3", "E6/E7/E8-from-D-spin",
        "E6-double-spin-D4", "D6/E7-quaternionic-spin",
    }


def test_e7_from_lambda3_sizes():
    res = build_construction("E7-from-Λ3")
    sizes = {q: len(v) for q, v in res.listed.items()}
    assert sizes[1] == sizes[-1] == 35 and sizes[2] == sizes[-2] == 7 and sizes[0] == 42
    assert res.type_label == "E7"


def test_e8_from_d7_spin_sizes():
    res = build_construction("E8-from-D7-spin")
    sizes = {q: len(v) for q, v in res.listed.items()}
    assert (sizes[1], sizes[2], sizes[0]) == (64, 14, 84)


def test_e8_from_lambda3_completion_flagged():
    res = build_construction("E8-from-Λ3")
    assert res.listed_total(include_completion=False) == 224
    assert res.listed_total() == 240
    assert res.type_label == "E8"
    assert any("224" in f and "240" in f for f in res.flags)


def test_lookup_aliases_and_errors():
    assert lookup("F4-from-C3w3").name == "F4-from-C3ω3"
    assert lookup("e6-from-l3").name == "E6-from-Λ3"
    with pytest.raises(UnknownConstruction):
        build_construction("H3-from-nowhere")


def test_slices_are_sorted_and_stable():
    a = build_construction("G2-from-A1-kind3")
    b = build_construction("G2-from-A1-kind3")
    assert list(a.listed) == sorted(a.listed)
    assert a.listed == b.listed
    for vs in a.listed.values():
        assert list(vs) == sorted(vs)


@pytest.mark.parametrize("name", ["E6-from-D5-spin", "C3-from-Sym2", "E7-quaternionic-spin"])
def test_generated_grading_is_additive(name):
    assert check_additivity(build_construction(name).graded)
