import pytest
from hypothesis import given, strategies as st

from vuf.errors import InvalidInputError
from vuf.rootsys import build_root_system, pairing, reflect

from oracles import (
    e_pairing,
    e_reflect,
    e_vector,
    simple_to_e,
    type_a_positive_roots_e,
)


def A(rank):
    return build_root_system("A", rank)


def test_a2_positive_roots_exactly_three():
    rs = A(2)
    assert {r.coeffs for r in rs.positive_roots} == {(1, 0), (0, 1), (1, 1)}


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_type_a_counts_match_coordinate_model(rank):
    assert A(rank).num_positive == len(type_a_positive_roots_e(rank))


def test_a1_single_root():
    assert A(1).num_positive == 1


def test_ordering_graded_by_height_then_lex():
    rs = A(4)
    keys = [(r.height, r.coeffs) for r in rs.positive_roots]
    assert keys == sorted(keys)
    assert rs.positive_roots[0].coeffs == (0, 0, 0, 1)
    assert rs.positive_roots[-1].coeffs == (1, 1, 1, 1)


def test_reflect_simple_examples_a2():
    rs = A(2)
    a, b = rs.simple(0), rs.simple(1)
    assert reflect(a, 0) == -a
    assert reflect(b, 0) == a + b
    assert reflect(a + b, 1) == a


def test_pairing_examples():
    rs = A(2)
    a, b = rs.simple(0), rs.simple(1)
    assert pairing(a, 0) == 2
    assert pairing(a + b, 1) == 1
    rs4 = A(4)
    theta = rs4.root((1, 1, 1, 0))  # e1 - e4 in the coordinate model
    assert pairing(theta, 1) == 0


@pytest.mark.parametrize("rank", [2, 3, 4])
def test_full_agreement_with_e_model(rank):
    rs = A(rank)
    e_roots = {e_vector(rank, p) for p in type_a_positive_roots_e(rank)}
    assert {simple_to_e(rank, r.coeffs) for r in rs.positive_roots} == e_roots
    for r in rs.positive_roots:
        re = simple_to_e(rank, r.coeffs)
        for i in range(rank):
            de = simple_to_e(rank, rs.simple(i).coeffs)
            assert simple_to_e(rank, reflect(r, i).coeffs) == e_reflect(re, de)
            assert pairing(r, i) == e_pairing(re, de)


@pytest.mark.parametrize(
    "family,rank,count",
    [("A", 3, 6), ("B", 2, 4), ("B", 3, 9), ("C", 3, 9), ("D", 2, 2), ("D", 4, 12)],
)
def test_positive_root_counts(family, rank, count):
    assert build_root_system(family, rank).num_positive == count


@pytest.mark.parametrize("family,rank", [("A", 4), ("B", 3), ("C", 3), ("D", 4)])
def test_reflections_are_involutions_everywhere(family, rank):
    rs = build_root_system(family, rank)
    for r in rs.all_roots():
        for i in range(rank):
            assert reflect(reflect(r, i), i) == r


@pytest.mark.parametrize("family,rank", [("A", 4), ("D", 4)])
def test_simply_laced_reflection_formula(family, rank):
    rs = build_root_system(family, rank)
    for r in rs.all_roots():
        for i in range(rank):
            expected = tuple(
                c - pairing(r, i) * d
                for c, d in zip(r.coeffs, rs.simple(i).coeffs)
            )
            assert reflect(r, i).coeffs == expected


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 2), ("D", 4)])
def test_simple_reflections_generate_all_roots(family, rank):
    rs = build_root_system(family, rank)
    orbit = {rs.simple(i).coeffs for i in range(rank)}
    frontier = list(orbit)
    while frontier:
        nxt = []
        for coeffs in frontier:
            for i in range(rank):
                image = reflect(rs.root(coeffs), i).coeffs
                if image not in orbit:
                    orbit.add(image)
                    nxt.append(image)
        frontier = nxt
    assert orbit == {r.coeffs for r in rs.all_roots()}


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 3), ("C", 3), ("D", 4)])
def test_cartan_invariants(family, rank):
    C = build_root_system(family, rank).cartan
    for i in range(rank):
        assert C[i][i] == 2
        for j in range(rank):
            if i != j:
                assert C[i][j] <= 0
                assert (C[i][j] == 0) == (C[j][i] == 0)


def test_pairing_antisymmetric_under_negation():
    rs = A(3)
    for r in rs.positive_roots:
        for i in range(3):
            assert pairing(-r, i) == -pairing(r, i)


def test_root_sign_coherence():
    for r in A(4).all_roots():
        signs = {c > 0 for c in r.coeffs if c != 0}
        assert len(signs) == 1


@given(st.sampled_from(range(10)), st.sampled_from(range(4)))
def test_reflection_involutive_property_a4(root_idx, simple_idx):
    rs = A(4)
    r = rs.positive_roots[root_idx]
    assert reflect(reflect(r, simple_idx), simple_idx) == r


def test_unsupported_inputs_rejected():
    with pytest.raises(InvalidInputError):
        build_root_system("E", 8)
    with pytest.raises(InvalidInputError):
        build_root_system("A", 0)
    with pytest.raises(InvalidInputError):
        build_root_system("D", 1)
    with pytest.raises(InvalidInputError):
        A(2).root((2, 0))
    with pytest.raises(InvalidInputError):
        reflect(A(2).simple(0), 5)
