import pytest

from quantum_schubert.errors import InputError
from quantum_schubert.rootsys import (
    alcove_walk,
    build,
    center_compose,
    center_elements,
    center_to_weyl,
    levi_conjugation_check,
    phi_homomorphism_check,
    sign_check,
)
from quantum_schubert.rootsys.center import center_element, center_inverse, composition_table, in_closed_alcove

CENTER_SIZES = [("A", 1, 1), ("A", 2, 2), ("A", 4, 4), ("B", 3, 1), ("C", 3, 1), ("D", 4, 3), ("D", 5, 3),
                ("E", 6, 2), ("E", 7, 1), ("E", 8, 0), ("F", 4, 0), ("G", 2, 0)]


@pytest.mark.parametrize("series, rank, size", CENTER_SIZES)
def test_nontrivial_center_elements(series, rank, size):
    rs = build(series, rank)
    elements = center_elements(rs)
    assert elements[0].is_identity
    assert len(elements) - 1 == size
    assert all(rs.marks[c.node] == 1 for c in elements[1:])


def test_mark_two_node_is_not_central():
    rs = build("B", 3)
    with pytest.raises(InputError):
        center_element(rs, 1)
    with pytest.raises(InputError):
        center_element(rs, 5)


@pytest.mark.parametrize("series, rank", [(s, r) for s, r, size in CENTER_SIZES if size])
def test_alcove_walk_has_no_translation(series, rank):
    rs = build(series, rank)
    for c in center_elements(rs):
        walk = alcove_walk(rs, c)
        assert all(t == 0 for t in walk.translation)
        assert in_closed_alcove(rs, walk.endpoint)
        assert walk.linear_part == center_to_weyl(rs, c)
        assert sign_check(rs, c)
    assert center_to_weyl(rs, center_elements(rs)[0]).is_identity()


@pytest.mark.parametrize("series, rank", [(s, r) for s, r, size in CENTER_SIZES if size])
def test_center_embeds_in_the_weyl_group(series, rank):
    rs = build(series, rank)
    assert phi_homomorphism_check(rs)
    for c in center_elements(rs):
        assert levi_conjugation_check(rs, c, center_inverse(rs, c))


def test_levi_check_needs_inverse_pair():
    rs = build("A", 2)
    _, x1, _ = center_elements(rs)
    with pytest.raises(InputError):
        levi_conjugation_check(rs, x1, x1)


def test_cyclic_center_of_a2():
    table = composition_table(build("A", 2))
    assert table[("x1", "x1")] == "x2"
    assert table[("x1", "x2")] == "1"
    assert table[("x2", "x2")] == "x1"
    assert table[("1", "x2")] == "x2"


def test_klein_four_center_of_d4():
    rs = build("D", 4)
    assert [c.label for c in center_elements(rs)] == ["1", "x1", "x3", "x4"]
    table = composition_table(rs)
    for label in ("x1", "x3", "x4"):
        assert table[(label, label)] == "1"
    assert table[("x1", "x3")] == "x4"


def test_cyclic_center_of_d5():
    rs = build("D", 5)
    _, x1, x4, x5 = center_elements(rs)
    assert center_compose(rs, x4, x4) == x1
    assert center_compose(rs, x4, x5).is_identity
    assert center_inverse(rs, x4) == x5


def test_center_element_json():
    c = center_elements(build("E", 6))[1]
    assert c.to_json() == {"node": 1, "coweight": ["1", "0", "0", "0", "0", "0"]}
