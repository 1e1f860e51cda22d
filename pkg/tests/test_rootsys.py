import numpy as np
import pytest

from quantum_schubert.errors import InputError
from quantum_schubert.rootsys import build, cartan_matrix, inverse, parse_type, reduced_word
from quantum_schubert.rootsys.cartan import expected_root_count
from quantum_schubert.rootsys.parabolic import ParabolicChoice, minimal_cosets
from quantum_schubert.rootsys.system import from_word, is_negative

ALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("C", 2), ("C", 3), ("C", 4),
             ("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]

HIGHEST_ROOTS = {
    ("A", 3): (1, 1, 1),
    ("B", 3): (1, 2, 2),
    ("C", 3): (2, 2, 1),
    ("D", 4): (1, 2, 1, 1),
    ("E", 6): (1, 2, 2, 3, 2, 1),
    ("E", 7): (2, 2, 3, 4, 3, 2, 1),
    ("E", 8): (2, 3, 4, 6, 5, 4, 3, 2),
    ("F", 4): (2, 3, 4, 2),
    ("G", 2): (3, 2),
}

COXETER_NUMBERS = {("A", 3): 4, ("B", 3): 6, ("C", 4): 8, ("D", 5): 8, ("E", 6): 12, ("E", 7): 18, ("E", 8): 30,
                   ("F", 4): 12, ("G", 2): 6}


def test_parse_type():
    assert parse_type("E6") == ("E", 6)
    assert parse_type(" b3 ") == ("B", 3)
    assert parse_type("D", 5) == ("D", 5)
    assert parse_type("A2", 2) == ("A", 2)


@pytest.mark.parametrize("label, rank", [("E5", None), ("Z3", None), ("E6", 7), ("A", None), ("D3", None),
                                         ("G", 3), ("B1", None), ("A0", None)])
def test_parse_type_rejects(label, rank):
    with pytest.raises(InputError):
        parse_type(label, rank)


def test_cartan_entries():
    assert cartan_matrix("A", 2).tolist() == [[2, -1], [-1, 2]]
    # alpha_1 long, alpha_2 short
    assert cartan_matrix("B", 2).tolist() == [[2, -2], [-1, 2]]
    assert cartan_matrix("C", 2).tolist() == [[2, -1], [-2, 2]]
    assert cartan_matrix("G", 2).tolist() == [[2, -1], [-3, 2]]
    d4 = cartan_matrix("D", 4)
    assert d4[1, 2] == d4[1, 3] == d4[0, 1] == -1
    assert d4[2, 3] == 0
    e6 = cartan_matrix("E", 6)
    assert e6[1, 3] == -1 and e6[1, 2] == 0


@pytest.mark.parametrize("series, rank", ALL_TYPES)
def test_build(series, rank):
    rs = build(series, rank)
    assert len(rs.roots) == expected_root_count(series, rank)
    assert len(rs.positive_roots) * 2 == len(rs.roots)
    assert rs.marks == rs.highest_root
    assert np.array_equal(rs.cartan_array, cartan_matrix(series, rank))
    assert max(rs.root_lengths) == 2
    for i in range(rank):
        assert rs.coroot_values(rs.simple_root(i)) == tuple(rs.cartan[k][i] for k in range(rank))
        assert rs.simple_reflection(i).act(rs.simple_root(i)) == tuple(-b for b in rs.simple_root(i))


@pytest.mark.parametrize("key", sorted(HIGHEST_ROOTS))
def test_highest_roots(key):
    assert build(*key).highest_root == HIGHEST_ROOTS[key]


@pytest.mark.parametrize("key", sorted(COXETER_NUMBERS))
def test_coxeter_numbers(key):
    assert build(*key).coxeter_number == COXETER_NUMBERS[key]


def test_root_lengths():
    assert build("B", 2).root_lengths == (2, 1)
    assert build("C", 3).root_lengths == (1, 1, 2)
    assert build("G", 2).root_lengths[0] * 3 == build("G", 2).root_lengths[1]


def test_build_is_cached():
    assert build("E", 6) is build("E", 6)


def test_weyl_element_matrix_is_built_once():
    rs = build("B", 3)
    w = rs.simple_reflection(0) * rs.simple_reflection(1)
    assert w.matrix is w.matrix
    assert w == rs.simple_reflection(0) * rs.simple_reflection(1)
    assert w.act((1, 0, 0)) == tuple(int(v) for v in w.matrix[:, 0])


@pytest.mark.parametrize("series, rank, order", [("A", 2, 6), ("A", 3, 24), ("B", 2, 8), ("B", 3, 48),
                                                 ("G", 2, 12)])
def test_weyl_words_and_inverses(series, rank, order):
    rs = build(series, rank)
    group = minimal_cosets(rs, ParabolicChoice.borel())
    assert len(group) == order
    assert len(set(group)) == order
    for w in group:
        word = reduced_word(rs, w)
        assert len(word) == rs.length(w)
        assert from_word(rs, word) == w
        assert (inverse(rs, w) * w).is_identity()
        assert rs.length(inverse(rs, w)) == rs.length(w)


def test_longest_element_negates_positive_roots():
    rs = build("B", 3)
    longest = minimal_cosets(rs, ParabolicChoice.borel())[-1]
    assert rs.length(longest) == len(rs.positive_roots)
    assert all(is_negative(longest.act(beta)) for beta in rs.positive_roots)


def test_to_json():
    j = build("G", 2).to_json()
    assert j == {"type": "G2", "cartan": [[2, -1], [-3, 2]], "roots": 12, "highest_root": [3, 2], "marks": [3, 2]}
