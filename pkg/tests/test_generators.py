import io
import json
from fractions import Fraction as F

import pytest

from pointline import (
    DomainError,
    GeneratorSpec,
    PointFormatError,
    build_arrangement,
    circle,
    collinear,
    dump_points,
    grid,
    load_points,
    max_lines_through_point,
    near_pencil,
    point,
    random_points,
)


def test_grid_33():
    ps = grid(3, 3)
    assert ps.n == 9
    assert build_arrangement(ps).max_collinear == 3


def test_grid_22_all_two_point_lines():
    arr = build_arrangement(grid(2, 2))
    assert dict(arr.size_hist) == {2: 6}


def test_grid_requires_both_dimensions():
    with pytest.raises(DomainError):
        grid(1, 2)
    with pytest.raises(DomainError):
        grid(3, 1)


@pytest.mark.parametrize("n", [3, 4, 5, 17, 100, 200])
def test_near_pencil_closed_form(n):
    arr = build_arrangement(near_pencil(n))
    expected = {2: n - 1}
    expected[n - 1] = expected.get(n - 1, 0) + 1
    assert dict(arr.size_hist) == expected
    assert arr.max_collinear == n - 1
    if n > 3:
        # apex (last point) lies on all n-1 short lines
        assert max_lines_through_point(arr) == (n - 1, n - 1)


def test_near_pencil_rejects_small_n():
    with pytest.raises(DomainError):
        near_pencil(2)


def test_circle_first_points():
    ps = circle(3)
    assert ps.points[0] == point(1, 0)
    assert ps.points[1] == point(0, 1)
    assert ps.points[2] == point(F(-3, 5), F(4, 5))


@pytest.mark.parametrize("n", [3, 5, 12, 40])
def test_circle_no_three_collinear(n):
    arr = build_arrangement(circle(n))
    assert dict(arr.size_hist) == {2: n * (n - 1) // 2}
    assert arr.max_collinear == 2


def test_circle_points_on_unit_circle():
    for p in circle(25).points:
        assert p.x * p.x + p.y * p.y == 1


def test_circle_degree():
    arr = build_arrangement(circle(10))
    assert max_lines_through_point(arr)[1] == 9


def test_random_points_deterministic():
    a = random_points(5, 42, 10)
    b = random_points(5, 42, 10)
    assert a == b
    assert random_points(5, 43, 10) != a


def test_random_points_range_and_uniqueness():
    ps = random_points(10, 7, 2)
    assert len(set(ps.points)) == 10
    for p in ps.points:
        assert -2 <= p.x <= 2 and -2 <= p.y <= 2


def test_random_points_capacity():
    with pytest.raises(DomainError):
        random_points(26, 1, 2)  # (2*2+1)^2 = 25 slots
    assert random_points(25, 1, 2).n == 25  # exactly fills the lattice


def test_collinear_sets():
    arr = build_arrangement(collinear(5))
    assert dict(arr.size_hist) == {5: 1}
    assert build_arrangement(collinear(2)).num_lines == 1
    with pytest.raises(DomainError):
        collinear(1)


def test_closed_forms_exhaustive():
    """Both structured families match their closed-form histograms on [3, 200]."""
    for n in range(3, 201):
        hist = dict(build_arrangement(near_pencil(n)).size_hist)
        expected = {2: n - 1}
        expected[n - 1] = expected.get(n - 1, 0) + 1
        assert hist == expected, f"near_pencil({n})"
    for n in range(3, 201):
        hist = dict(build_arrangement(circle(n)).size_hist)
        assert hist == {2: n * (n - 1) // 2}, f"circle({n})"


def test_generator_spec_dispatch():
    ps = GeneratorSpec("grid", {"w": 2, "h": 3}).build()
    assert ps.n == 6
    assert GeneratorSpec("circle", {"n": 4}).build() == circle(4)
    with pytest.raises(DomainError):
        GeneratorSpec("hexagon", {}).build()


# ---------------------------------------------------------------------------
# File format
# ---------------------------------------------------------------------------


def _roundtrip(ps):
    buf = io.StringIO()
    dump_points(ps, buf)
    buf.seek(0)
    return load_points(buf)


def test_roundtrip_lattice():
    ps = grid(3, 4)
    assert _roundtrip(ps) == ps


def test_roundtrip_rational_coordinates():
    ps = circle(9)
    assert _roundtrip(ps) == ps


def test_dump_emits_reduced_rational_strings():
    buf = io.StringIO()
    dump_points(circle(3), buf)
    data = json.loads(buf.getvalue())
    assert data["points"][2] == ["-3/5", "4/5"]


def _load(text: str):
    return load_points(io.StringIO(text))


def test_load_rejects_bad_json():
    with pytest.raises(PointFormatError, match="line 1"):
        _load("{not json")


def test_load_rejects_missing_points_field():
    with pytest.raises(PointFormatError, match="points"):
        _load('{"rows": []}')


def test_load_rejects_empty_list():
    with pytest.raises(PointFormatError):
        _load('{"points": []}')


def test_load_rejects_malformed_entries():
    with pytest.raises(PointFormatError, match="point 1"):
        _load('{"points": [["0", "0"], ["1"]]}')


def test_load_rejects_non_rational_strings():
    for bad in ('1.5', '1/0', '+3', 'x', '3/-2', ''):
        with pytest.raises(PointFormatError, match="field"):
            _load(json.dumps({"points": [["0", "0"], [bad, "1"]]}))


def test_load_rejects_numbers():
    with pytest.raises(PointFormatError, match="field x"):
        _load('{"points": [[1, 2]]}')


def test_load_rejects_duplicates():
    with pytest.raises(PointFormatError, match="duplicates"):
        _load('{"points": [["1", "2"], ["2/2", "4/2"]]}')


def test_load_accepts_unreduced_and_negative():
    ps = _load('{"points": [["-4/2", "0"], ["3", "9/3"]]}')
    assert ps.points[0] == point(-2, 0)
    assert ps.points[1] == point(3, 3)
