"""Boundary matrices and reduced homology dimensions."""

import random
from itertools import combinations

import pytest

from helpers import random_complex
from srbetti import (
    GF_DEFAULT,
    QQ,
    DimensionOutOfRangeError,
    FieldSpec,
    boundary_matrix,
    boundary_squared_is_zero,
    complex_from_facets,
    f_vector,
    fixture_path,
    induced_subcomplex,
    read_complex,
    reduced_homology_dims,
)

GF2 = FieldSpec.prime(2)


def simplex_boundary(k):
    """Boundary of the k-simplex: all k-subsets of k+1 vertices."""
    verts = [str(i) for i in range(1, k + 2)]
    return complex_from_facets([list(c) for c in combinations(verts, k)])


def test_augmentation_matrix():
    c = complex_from_facets([["a"], ["b"], ["c"]])
    m = boundary_matrix(c, 0)
    assert (m.rows, m.cols) == (1, 3)
    assert m.entries == ((0, 0, 1), (0, 1, 1), (0, 2, 1))


def test_edge_boundary_signs():
    c = complex_from_facets([["1", "2"]])
    m = boundary_matrix(c, 1)
    assert (m.rows, m.cols) == (2, 1)
    assert m.entries == ((0, 0, -1), (1, 0, 1))


def test_triangle_boundary_signs():
    c = complex_from_facets([["1", "2", "3"]])
    m = boundary_matrix(c, 2)
    # rows are the edges sorted by mask: 12, 13, 23
    assert (m.rows, m.cols) == (3, 1)
    assert m.entries == ((0, 0, 1), (1, 0, -1), (2, 0, 1))


def test_degree_range():
    c = complex_from_facets([["1", "2"]])
    m = boundary_matrix(c, -1)
    assert (m.rows, m.cols) == (0, 1)
    with pytest.raises(DimensionOutOfRangeError):
        boundary_matrix(c, 2)
    with pytest.raises(DimensionOutOfRangeError):
        boundary_matrix(c, -2)


def test_boundary_squared_zero():
    rnd = random.Random(3001)
    for _ in range(40):
        assert boundary_squared_is_zero(random_complex(rnd))
    assert boundary_squared_is_zero(read_complex(fixture_path("rp2.cplx")))


def test_homology_examples():
    tri = complex_from_facets([["1", "2"], ["1", "3"], ["2", "3"]])
    assert reduced_homology_dims(tri, GF_DEFAULT).dims == (0, 0, 1)
    two = complex_from_facets([["a"], ["b"]])
    assert reduced_homology_dims(two, GF_DEFAULT).dims == (0, 1)
    cone = complex_from_facets([["1", "2", "3", "4"]])
    assert all(b == 0 for b in reduced_homology_dims(cone, GF_DEFAULT).dims)


def test_empty_complex_degree_minus_one():
    c4 = complex_from_facets([["1", "2"], ["2", "3"], ["3", "4"], ["1", "4"]])
    empty = induced_subcomplex(c4, [])
    assert reduced_homology_dims(empty, GF_DEFAULT).dims == (1,)
    # any complex with a vertex has nothing in degree -1
    assert reduced_homology_dims(c4, GF_DEFAULT).get(-1) == 0


def test_simplex_boundary_spheres():
    for k in range(2, 7):
        dims = reduced_homology_dims(simplex_boundary(k), GF_DEFAULT)
        for i in range(-1, k):
            assert dims.get(i) == (1 if i == k - 1 else 0), (k, i)


def test_euler_identity():
    rnd = random.Random(3002)
    for _ in range(60):
        c = random_complex(rnd)
        f = f_vector(c)
        b = reduced_homology_dims(c, GF_DEFAULT)
        lhs = sum((-1) ** i * f.get(i) for i in range(0, f.d)) - 1
        rhs = sum((-1) ** i * b.get(i) for i in range(0, f.d)) - b.get(-1)
        assert lhs == rhs


def test_projective_plane_homology_by_field():
    rp2 = read_complex(fixture_path("rp2.cplx"))
    assert f_vector(rp2).entries == (1, 6, 15, 10)
    assert reduced_homology_dims(rp2, QQ).dims == (0, 0, 0, 0)
    assert reduced_homology_dims(rp2, GF_DEFAULT).dims == (0, 0, 0, 0)
    assert reduced_homology_dims(rp2, GF2).dims == (0, 0, 1, 1)
