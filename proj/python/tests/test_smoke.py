from fractions import Fraction
from itertools import product

import pytest

import alcoved


def test_qd_counts_and_hstar():
    q3 = alcoved.make_qd(3)
    assert q3.dim == 3
    assert len(q3.constraints) == 12
    assert len(alcoved.lattice_points(q3)) == 15
    assert alcoved.interior_lattice_points(q3) == [(0, 0, 0)]
    assert alcoved.hstar(q3) == [1, 11, 11, 1]
    assert alcoved.ehrhart_polynomial(alcoved.make_qd(2)) == [Fraction(1), Fraction(3), Fraction(3)]
    assert len(alcoved.alcove_triangulation(q3)) == 24


def test_explicit_constraints_and_json():
    p = alcoved.AlcovedPolytope(2, [(1, 0, 1), (0, 1, 0), (2, 0, 1), (0, 2, 0)])
    assert p.bounds == [(0, 1), (0, 1)]
    assert alcoved.count_dilate(p, 10) == 121
    assert alcoved.from_json(p.to_json()) == p
    with pytest.raises(alcoved.AlcovedError):
        alcoved.AlcovedPolytope(1, [(1, 0, 0), (0, 1, 0)])
    with pytest.raises(ValueError):
        alcoved.from_json("{")


def test_box_scan_agrees():
    p = alcoved.random_alcoved(3, 5, small=True)
    pts = alcoved.lattice_points(p)
    brute = [
        x
        for x in product(range(-1, 3), repeat=3)
        if all(((x[i - 1] if i else 0) - (x[j - 1] if j else 0)) <= k for i, j, k in p.constraints)
    ]
    assert sorted(pts) == sorted(brute)


def test_large_counts_are_exact_ints():
    assert alcoved.count_dilate(alcoved.make_qd(3), 1000) == 1001**4 - 1000**4


def test_boundary_triangulation_and_diagnostic():
    square = alcoved.make_box([(-1, 1), (-1, 1)])
    cells = alcoved.boundary_compatible_triangulation(square)
    assert len(cells) == 8
    assert all((0, 0) in c for c in cells)
    with pytest.raises(alcoved.HypothesisViolated) as info:
        alcoved.boundary_compatible_triangulation(alcoved.make_sharp_distance_example(3))
    assert info.value.facet == (1, 0, 3)
    assert info.value.distance == 2


def test_distances_and_reflexivity():
    sharp = alcoved.make_sharp_distance_example(4)
    assert alcoved.max_facet_distance(sharp) == 3
    assert not alcoved.main_theorem_hypothesis(sharp)
    assert alcoved.is_reflexive(alcoved.make_qd(3))
    assert alcoved.gorenstein_index(alcoved.make_scaled_chain_simplex(3), 4) == 4


def test_scan_report():
    a = alcoved.scan(3, 10, seed=1, jobs=1)
    b = alcoved.scan(3, 10, seed=1, jobs=4)
    assert a == b
    assert len(a["records"]) == 10
    assert a["summary"]["theorem_violations"] == 0
    assert all(r["unimodal"] for r in a["records"])


def test_unimodal_and_verify():
    assert alcoved.is_unimodal([1, 98, 188, 22]) == (True, [2])
    assert alcoved.is_unimodal([1, 0, 1])[0] is False
    results = alcoved.verify(dim_max=3)
    assert len(results) == 10
    assert all(passed for _, passed, _ in results)
