import pytest

from vuf.errors import InvalidInputError
from vuf.parabolic import (
    PERMISSIVE,
    STRICT,
    from_explicit,
    from_profile,
    is_prime,
    propagation_violations,
    thickening_length,
)
from vuf.rootsys import build_root_system
from vuf.weyl import LeviSubset

from oracles import e_dot, simple_to_e, type_a_positive_roots_e, e_vector


def A(rank):
    return build_root_system("A", rank)


def borel(system):
    return LeviSubset.of(system)


def profile_closure_oracle(rank, finite_simple_exponents):
    """Recompute the closure in e-coordinates: a negative root picks up the
    minimum exponent over constrained simples whose pairing is positive."""
    out = {}
    for pair in type_a_positive_roots_e(rank):
        theta = e_vector(rank, pair)
        mins = [
            n
            for j, n in finite_simple_exponents.items()
            if e_dot(theta, simple_to_e(rank, tuple(1 if k == j else 0 for k in range(rank)))) > 0
        ]
        if mins:
            out[theta] = min(mins)
    return out


def test_profile_closure_a4_single_simple():
    rs = A(4)
    b = rs.simple(1)
    datum = from_profile(rs, {-b: 1}, p=2)
    got = {simple_to_e(4, (-r).coeffs): n for r, n in datum.orders}
    assert got == profile_closure_oracle(4, {1: 1})
    names = {str(r) for r in datum.roots}
    assert names == {"-b", "-a-b", "-b-g", "-b-g-d"}
    assert all(n == 1 for _, n in datum.orders)


def test_profile_all_infinite_is_reduced():
    rs = A(3)
    profile = {-rs.simple(i): None for i in range(3)}
    datum = from_profile(rs, profile, p=5)
    assert datum.is_reduced
    assert thickening_length(datum) == 0


def test_profile_closure_a2_two_simples():
    rs = A(2)
    a, b = rs.simple(0), rs.simple(1)
    datum = from_profile(rs, {-a: 2, -b: 1}, p=2)
    assert datum.exponents == {-a: 2, -b: 1, -(a + b): 1}
    assert got_matches_oracle(datum)
    assert thickening_length(datum) == 4


def got_matches_oracle(datum):
    rank = datum.system.rank
    finite = {}
    for r, n in datum.orders:
        if (-r).height == 1:
            finite[next(iter(r.support))] = n
    oracle = profile_closure_oracle(rank, finite)
    got = {simple_to_e(rank, (-r).coeffs): n for r, n in datum.orders}
    return got == oracle


def test_profile_output_always_passes_strict_validation():
    rs = A(4)
    cases = [
        {-rs.simple(1): 1},
        {-rs.simple(0): 2, -rs.simple(1): 1},
        {-rs.simple(0): 3, -rs.simple(2): 1, -rs.simple(3): 2},
    ]
    for profile in cases:
        datum = from_profile(rs, profile, p=3)
        assert propagation_violations(datum) == []


def test_profile_monotone_under_smaller_profiles():
    rs = A(3)
    big = from_profile(rs, {-rs.simple(0): 3, -rs.simple(1): 2}, p=2)
    small = from_profile(rs, {-rs.simple(0): 2, -rs.simple(1): 1}, p=2)
    assert set(big.roots) == set(small.roots)
    assert thickening_length(small) < thickening_length(big)


def test_explicit_paper_data_valid():
    rs = A(4)
    b = rs.simple(1)
    datum = from_explicit(rs, borel(rs), {-b: 1}, p=2)
    assert datum.roots == (-b,)
    assert datum.warnings == ()
    assert thickening_length(datum) == 1
    a = rs.simple(0)
    datum2 = from_explicit(rs, borel(rs), {-a: 1}, p=2)
    assert datum2.roots == (-a,)


def test_explicit_rejects_positive_roots():
    rs = A(4)
    with pytest.raises(InvalidInputError):
        from_explicit(rs, borel(rs), {rs.simple(0): 1}, p=2)


def test_explicit_rejects_bad_exponents_and_characteristic():
    rs = A(2)
    with pytest.raises(InvalidInputError):
        from_explicit(rs, borel(rs), {-rs.simple(0): 0}, p=2)
    with pytest.raises(InvalidInputError):
        from_explicit(rs, borel(rs), {-rs.simple(0): 1}, p=4)
    with pytest.raises(InvalidInputError):
        from_profile(rs, {-rs.simple(0): 1}, p=1)


def test_explicit_respects_levi_radical():
    rs = A(2)
    levi = LeviSubset.of(rs, {0})
    a, b = rs.simple(0), rs.simple(1)
    datum = from_explicit(rs, levi, {-b: 1}, p=2)
    assert datum.roots == (-b,)
    with pytest.raises(InvalidInputError):
        from_explicit(rs, levi, {-a: 1}, p=2)  # -a is a Levi root, not radical


def test_permissive_warns_strict_raises():
    rs = A(2)
    a, b = rs.simple(0), rs.simple(1)
    bad = {-a: 1, -b: 1, -(a + b): 5}
    datum = from_explicit(rs, borel(rs), bad, p=2, mode=PERMISSIVE)
    assert len(datum.warnings) == 1
    with pytest.raises(InvalidInputError):
        from_explicit(rs, borel(rs), bad, p=2, mode=STRICT)


def test_unconstrained_nonsimple_direction_is_not_a_violation():
    rs = A(2)
    ab = rs.simple(0) + rs.simple(1)
    datum = from_explicit(rs, borel(rs), {-ab: 3}, p=2, mode=STRICT)
    assert datum.warnings == ()


def test_profile_requires_borel_and_simple_keys():
    rs = A(2)
    with pytest.raises(InvalidInputError):
        from_profile(rs, {-rs.simple(0): 1}, p=2, levi=LeviSubset.of(rs, {1}))
    with pytest.raises(InvalidInputError):
        from_profile(rs, {-(rs.simple(0) + rs.simple(1)): 1}, p=2)
    with pytest.raises(InvalidInputError):
        from_profile(rs, {rs.simple(0): 1}, p=2)


def test_is_prime():
    assert [p for p in range(14) if is_prime(p)] == [2, 3, 5, 7, 11, 13]
