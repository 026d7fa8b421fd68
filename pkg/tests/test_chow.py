import itertools

import pytest

from vuf.chow import (
    cokernel_order,
    d_exponent,
    poincare_polynomial,
    pullback_matrix,
    pushforward_matrix,
    schubert_basis,
)
from vuf.errors import InvalidInputError
from vuf.parabolic import from_explicit, from_profile, thickening_length
from vuf.rootsys import build_root_system
from vuf.weyl import LeviSubset, longest_element, weyl_group

from oracles import perm_all


def A(rank):
    return build_root_system("A", rank)


def borel_datum(rank, simple_idx, n=1, p=2):
    rs = A(rank)
    return from_explicit(rs, LeviSubset.of(rs), {-rs.simple(simple_idx): n}, p=p)


def test_d_exponent_examples():
    datum = borel_datum(4, 1)
    g = weyl_group(datum.system)
    assert d_exponent(datum, g.identity) == 0
    assert d_exponent(datum, longest_element(g)) == 1
    # s_a s_b sends -b to a+b, which is positive, so the exponent is 1.
    w = g.from_word((0, 1))
    assert w.act(-datum.system.simple(1)) == datum.system.simple(0) + datum.system.simple(1)
    assert d_exponent(datum, w) == 1


def test_transfer_matrices_reduced_datum_are_identity():
    rs = A(2)
    datum = from_explicit(rs, LeviSubset.of(rs), {}, p=3)
    push, pull = pushforward_matrix(datum), pullback_matrix(datum)
    assert set(push.entries) == {1} and set(pull.entries) == {1}


def test_transfer_matrices_a4_single_direction():
    datum = borel_datum(4, 1, p=2)
    push, pull = pushforward_matrix(datum), pullback_matrix(datum)
    basis = push.basis
    assert len(basis) == 120
    top_idx = len(basis) - 1
    assert push.entry(top_idx) == 2
    assert pull.entry(0) == 2  # identity class
    # Composition in either order is multiplication by p^(top exponent).
    for k in range(len(basis)):
        assert push.entry(k) * pull.entry(k) == 2


def test_cokernel_order_reduced_and_a4():
    rs = A(2)
    reduced = from_explicit(rs, LeviSubset.of(rs), {}, p=5)
    assert int(cokernel_order(reduced)) == 1

    datum = borel_datum(4, 1, p=2)
    coker = cokernel_order(datum)
    basis = schubert_basis(datum.levi)
    top = d_exponent(datum, basis.top)
    assert coker.exponent == sum(top - d_exponent(datum, w) for w in basis.reps)
    # Independent count: d(w) = 1 exactly when w inverts the one-line
    # positions 2 and 3, which is half of the 120 permutations.
    beta = datum.system.simple(1)
    ones = sum(1 for w in basis.reps if not w.act(beta).is_positive)
    assert ones == 60 and coker.exponent == 120 - ones == 60
    assert coker.p == 2


def test_exponent_bounds_and_thickening_cross_check():
    rs = A(2)
    datum = from_profile(rs, {-rs.simple(0): 2, -rs.simple(1): 1}, p=2)
    basis = schubert_basis(datum.levi)
    top = d_exponent(datum, basis.top)
    assert top == thickening_length(datum) == 4
    for w in basis.reps:
        assert 0 <= d_exponent(datum, w) <= top


def test_d_exponent_requires_minimal_rep():
    rs = A(2)
    levi = LeviSubset.of(rs, {0})
    datum = from_explicit(rs, levi, {-rs.simple(1): 1}, p=2)
    g = weyl_group(rs)
    with pytest.raises(InvalidInputError):
        d_exponent(datum, g.simple(0))  # s_a is not minimal in its coset


def test_poincare_polynomials():
    a2 = A(2)
    borel = poincare_polynomial(LeviSubset.of(a2))
    assert borel.coeffs == (1, 2, 2, 1)
    assert borel(2) == 21
    assert poincare_polynomial(LeviSubset.of(A(1))).coeffs == (1, 1)
    assert poincare_polynomial(LeviSubset.of(a2, {0})).coeffs == (1, 1, 1)


def test_poincare_against_inversion_statistic():
    # Independent route: the coefficient of q^k counts permutations of S4
    # with k inversions.
    from oracles import perm_length

    coeffs = poincare_polynomial(LeviSubset.of(A(3))).coeffs
    counted = [0] * len(coeffs)
    for p in perm_all(4):
        counted[perm_length(p)] += 1
    assert list(coeffs) == counted


@pytest.mark.parametrize("indices", [(), (0,), (1,), (0, 1), (0, 2)])
def test_poincare_palindromic_and_counts_classes(indices):
    levi = LeviSubset.of(A(3), indices)
    poly = poincare_polynomial(levi)
    assert poly.is_palindromic
    assert poly(1) == len(schubert_basis(levi))


def test_schubert_basis_grading_and_distinctness():
    basis = schubert_basis(LeviSubset.of(A(3), {1}))
    lengths = [w.length for w in basis.reps]
    assert lengths == sorted(lengths)
    assert len(set(basis.reps)) == len(basis.reps) == 12  # 24 / 2
