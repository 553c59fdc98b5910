import pytest

from blockbetti.core.errors import BudgetExceeded
from blockbetti.resolutions.matrix import ExactMatrix, rank
from blockbetti.resolutions.simplicial import SimplicialComplex, bits, homology_ranks

# six-vertex triangulation of the real projective plane
RP2 = [
    (1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
    (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6),
]


@pytest.mark.parametrize("p,expected", [(2, 2), (3, 1), (5, 2), (0, 2)])
def test_rank_depends_on_characteristic(p, expected):
    # determinant -3
    assert rank(2, 2, [{0: 1, 1: 2}, {0: 2, 1: 1}], p) == expected


def test_rank_over_gf2_uses_parity():
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: 1}]
    assert rank(3, 3, rows, 2) == 2
    assert rank(3, 3, rows, 3) == 3


def test_zero_matrix_has_rank_zero():
    assert ExactMatrix(3, 2, [{}, {}, {}], 7).rank() == 0
    assert ExactMatrix(2, 2, [{0: 7}, {1: 14}], 7).nnz == 0


def test_from_entries_accumulates():
    m = ExactMatrix.from_entries(2, 2, {(0, 0): 1, (1, 1): 1}, 0)
    assert m.rank() == 2
    assert m.to_sympy().tolist() == [[1, 0], [0, 1]]


def test_invariant_factors():
    m = ExactMatrix(2, 2, [{0: 2}, {1: 3}], 0)
    assert m.invariant_factors() == [1, 6]
    with pytest.raises(ValueError):
        m.reduce_mod(3).invariant_factors()
    assert m.reduce_mod(3).rank() == 1


def test_matrix_size_guard():
    m = ExactMatrix(2, 2, [{0: 1, 1: 1}, {0: 1}], 2)
    m.check_size(3)
    with pytest.raises(BudgetExceeded) as info:
        m.check_size(2)
    assert info.value.limit == "matrix_nonzeros"


def test_bits():
    assert bits(0b101001) == [0, 3, 5]
    assert bits(0) == []


def test_void_and_empty_complexes():
    assert SimplicialComplex([]).is_void
    assert SimplicialComplex([]).dimension == -2
    empty = SimplicialComplex([0])
    assert empty.dimension == -1
    assert empty.homology_ranks(2) == {-1: 1}


def test_circle():
    circle = SimplicialComplex.from_sets([(0, 1), (1, 2), (0, 2)])
    assert circle.homology_ranks(2) == {-1: 0, 0: 0, 1: 1}
    assert homology_ranks(circle, 3) == [0, 0, 1]


def test_two_points():
    assert SimplicialComplex.from_sets([(0,), (1,)]).homology_ranks(5) == {-1: 0, 0: 1}


def test_facets_are_reduced_to_maximal_ones():
    c = SimplicialComplex.from_sets([(0, 1, 2), (0, 1), (3,)])
    assert c.facets == [0b111, 0b1000]
    assert c.faces(2) == [0b011, 0b101, 0b110]


def test_from_faces_matches_from_facets():
    faces = [0, 0b1, 0b10, 0b100, 0b11, 0b110]
    c = SimplicialComplex.from_faces(faces)
    assert sorted(c.facets) == [0b11, 0b110]
    assert c.homology_ranks(2) == {-1: 0, 0: 0, 1: 0}


@pytest.mark.parametrize("p,h1,h2", [(2, 1, 1), (3, 0, 0), (0, 0, 0)])
def test_projective_plane_homology(p, h1, h2):
    ranks = SimplicialComplex.from_sets(RP2).homology_ranks(p)
    assert ranks == {-1: 0, 0: 0, 1: h1, 2: h2}


def test_projective_plane_torsion():
    homology = {h.k: h for h in SimplicialComplex.from_sets(RP2).integral_homology()}
    assert homology[1].rank == 0
    assert homology[1].torsion == [2]
    assert homology[2].rank == 0
    assert homology[0].torsion == []


def test_face_budget():
    c = SimplicialComplex.from_sets([range(10)], max_faces=50)
    with pytest.raises(BudgetExceeded):
        c.faces(5)
