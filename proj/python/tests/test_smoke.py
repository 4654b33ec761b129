import json
from pathlib import Path

import pytest

import colsys

DATA = Path(__file__).resolve().parents[2] / "data"


def test_example_triangle_is_accepted():
    sys_ = colsys.example_system()
    assert sys_.colors == 13 and sys_.origin == 1
    assert len(sys_.horizontal) == 36 and len(sys_.vertical) == 53
    tri = {"depth": 54, "rows": colsys.example_triangle()}
    assert colsys.check(sys_, tri) is None
    assert colsys.check(sys_, [1, 8, 2, 0, 9, 0, 9, 4, 8, 1]) is None
    assert colsys.check(sys_, [2])["kind"] == "origin"


def test_files_match_fixture():
    loaded = colsys.ColoringSystem.load(str(DATA / "example1_system.json"))
    assert loaded == colsys.example_system()
    tri = json.loads((DATA / "example1_triangle.json").read_text())
    assert tri["rows"] == colsys.example_triangle()


def test_input_errors():
    with pytest.raises(colsys.InputError):
        colsys.ColoringSystem(2, 0, [(0, 64)])
    with pytest.raises(ValueError):
        colsys.check(colsys.ColoringSystem(2, 0), [0, 5])
    assert colsys.ColoringSystem(2, 3).errors()


def test_codec():
    assert colsys.diag_index(1, 1) == 4
    assert colsys.diag_index(3, 4) == 31
    assert colsys.diag_tile(5) == (2, 0)


def test_search():
    empty = colsys.ColoringSystem(1, 0)
    full = colsys.ColoringSystem(1, 0, [(0, 0)], [(0, 0)])
    v_only = colsys.ColoringSystem(1, 0, [], [(0, 0)])
    assert colsys.max_accept_length(empty, 10) == ("exact", 1)
    assert colsys.max_accept_length(v_only, 10) == ("exact", 2)
    assert colsys.length_profile(v_only, 4) == [1, 1, 0, 0]
    assert colsys.enumerate(full, 5) == [[0, 0, 0, 0, 0]]
    assert colsys.extendable_colors(v_only, [0], 3) == []
    assert colsys.build_chain(empty, 2) is None
    assert colsys.classify(empty) == {"verdict": "bounded", "max_length": 1}
    assert colsys.classify(full)["verdict"] == "has_coloring"

    chain = colsys.build_chain(colsys.example_system(), 55)
    assert len(chain) == 55
    assert colsys.check(colsys.example_system(), chain) is None

    alt = colsys.ColoringSystem(2, 0, [(0, 1), (1, 0)], [(0, 0), (1, 1)])
    w = colsys.find_periodic_witness(alt)
    assert (w["period_x"], w["period_y"], w["cells"]) == (2, 1, [[0, 1]])


def test_isomorphism():
    a = colsys.ColoringSystem(2, 1, [(1, 1)], [(1, 1)])
    assert colsys.canonical_form(a) == colsys.ColoringSystem(2, 0, [(0, 0)], [(0, 0)])
    assert colsys.is_isomorphic(a, colsys.canonical_form(a))
    b = colsys.ColoringSystem(2, 0, [], [(0, 0)])
    assert not colsys.is_isomorphic(colsys.ColoringSystem(2, 0, [(0, 0)]), b)


def test_census():
    one = colsys.census(1, depth_cap=10, period_cap=2, records=True)
    assert one["summary"]["mu_exact"] == 3
    assert [r["verdict"] for r in one["records"]] == [
        "bounded", "bounded", "bounded", "has_coloring"]
    two = colsys.census(2, depth_cap=32, jobs=2)["summary"]
    assert two["total_systems"] == 512
    assert two["mu_exact"] == 6
    assert colsys.system_count(2) == 512
    assert colsys.system_index(colsys.system_at(2, 73)) == 73


def test_render():
    tri = {"depth": 54, "rows": colsys.example_triangle()}
    text = colsys.render(tri)
    assert text.splitlines()[-1] == "1 2 0 1 2 0 1 2 0 1"
    assert colsys.render([1], "text") == "1\n"
    assert colsys.render(tri, "ppm").startswith("P3\n10 10\n255\n")
    with pytest.raises(ValueError):
        colsys.render(tri, "png")
