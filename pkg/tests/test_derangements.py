import itertools
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from evengillis.derangements import (
    GuardExceeded,
    MultisetSpec,
    classical_alternating_sum,
    classical_derangements,
    multiset_derangements_enum,
    multiset_derangements_ie,
    multiset_permutations,
)

from conftest import brute_force_derangements

# frozen from brute_force_derangements (distinct permutations of labelled letters)
FROZEN = {
    (1, 1): 1,
    (2, 1): 0,
    (1, 1, 1): 2,
    (2, 1, 1): 2,
    (2, 2, 2): 10,
    (3, 2, 1): 3,
    (3, 3, 2): 24,
    (3, 3, 3): 56,
    (4, 4, 1): 8,
    (1, 1, 1, 1): 9,
    (2, 2, 2, 2): 297,
    (3, 2, 2, 1): 126,
    (1,) * 7: 1854,
}


@pytest.mark.parametrize("spec,expected", sorted(FROZEN.items()))
def test_frozen_values_both_methods(spec, expected):
    assert multiset_derangements_enum(spec) == expected
    assert multiset_derangements_ie(spec) == expected


def test_oracle_sanity():
    assert brute_force_derangements((1, 1, 1)) == 2
    assert brute_force_derangements((2, 1, 1)) == 2


def test_spec_validation():
    with pytest.raises(ValueError):
        MultisetSpec((1, -1))
    with pytest.raises(TypeError):
        MultisetSpec((1.5,))
    s = MultisetSpec((0, 2, 3, 0, 1))
    assert s.total == 6 and s.k == 5
    assert s.canonical() == MultisetSpec((3, 2, 1))


def test_classical_examples():
    assert [classical_derangements(n) for n in (0, 1, 4)] == [1, 0, 9]


def test_classical_brute_force():
    for n in range(8):
        perms = itertools.permutations(range(n))
        assert classical_derangements(n) == sum(all(p[i] != i for i in range(n)) for p in perms)


def test_classical_matches_alternating_sum_and_ones():
    for n in range(19):
        assert classical_alternating_sum(n) == classical_derangements(n)
    for n in range(9):
        assert classical_derangements(n) == multiset_derangements_ie((1,) * n)


@pytest.mark.parametrize("n", range(1, 19))
def test_nearest_integer_to_n_factorial_over_e(n):
    d = classical_derangements(n)
    # n!/e - D(n) = n! * sum_{j>n} (-1)^j/j!, bounded by the first omitted term
    assert Fraction(math.factorial(n), math.factorial(n + 1)) <= Fraction(1, 2)
    # the finite part is exact; what is left beyond it is below n!/(n+40)!
    tail = sum(Fraction((-1) ** j * math.factorial(n), math.factorial(j)) for j in range(n + 1, n + 40))
    beyond = Fraction(math.factorial(n), math.factorial(n + 40))
    assert abs(tail) + beyond < Fraction(1, 2)
    assert d == math.factorial(n) * sum(Fraction((-1) ** j, math.factorial(j)) for j in range(n + 1))
    with mpmath.workdps(60):
        assert int(mpmath.nint(mpmath.factorial(n) / mpmath.e)) == d


@pytest.mark.parametrize(
    "spec,count", [((1, 1), 2), ((2, 1), 3), ((2, 2), 6), ((), 1), ((0, 3), 1)]
)
def test_permutation_counts(spec, count):
    arrangements = list(multiset_permutations(spec))
    assert len(arrangements) == count == len(set(arrangements))


@given(st.lists(st.integers(0, 3), max_size=4))
@settings(deadline=None)
def test_permutations_distinct_and_complete(ms):
    arrangements = list(multiset_permutations(ms))
    expected = math.factorial(sum(ms)) // math.prod(math.factorial(n) for n in ms)
    assert len(arrangements) == len(set(arrangements)) == expected
    assert arrangements == sorted(arrangements)
    for a in arrangements:
        assert all(a.count(i) == n for i, n in enumerate(ms))


def test_guard():
    with pytest.raises(GuardExceeded) as info:
        multiset_derangements_enum((7, 6))
    assert info.value.total == 13 and info.value.limit == 12
    assert "13" in str(info.value) and "12" in str(info.value)
    with pytest.raises(GuardExceeded):
        list(multiset_permutations((2, 2), guard=3))
    assert multiset_derangements_enum((2, 2), guard=4) == 1


def test_empty_spec():
    assert multiset_derangements_ie(()) == 1
    assert multiset_derangements_enum(()) == 1


@pytest.mark.parametrize("n1", range(9))
def test_kronecker_base(n1):
    for n2 in range(9):
        assert multiset_derangements_ie((n1, n2)) == (1 if n1 == n2 else 0)


def _specs_up_to(total, k):
    for k_ in range(k + 1):
        for spec in itertools.product(range(total + 1), repeat=k_):
            if sum(spec) <= total:
                yield spec


def test_oracle_equivalence_exhaustive():
    for spec in _specs_up_to(9, 4):
        if max(spec, default=0) <= 6:
            assert multiset_derangements_enum(spec) == multiset_derangements_ie(spec), spec


def test_enum_matches_independent_brute_force():
    for spec in _specs_up_to(7, 3):
        assert multiset_derangements_enum(spec) == brute_force_derangements(spec), spec


specs = st.lists(st.integers(0, 3), max_size=4).filter(lambda s: sum(s) <= 9)


@given(specs, st.randoms())
@settings(deadline=None, max_examples=50)
def test_symmetry_and_zero_dropping(ms, rnd):
    shuffled = ms[:]
    rnd.shuffle(shuffled)
    d = multiset_derangements_ie(ms)
    assert multiset_derangements_ie(shuffled) == d
    assert multiset_derangements_enum(shuffled) == multiset_derangements_enum(ms) == d
    assert multiset_derangements_ie([n for n in ms if n]) == d
    assert multiset_derangements_ie(ms + [0]) == d
    assert multiset_derangements_enum(ms + [0]) == d


def _naive_ie(ms):
    total = sum(ms)
    out = 0
    for js in itertools.product(*(range(n + 1) for n in ms)):
        term = Fraction(math.factorial(total - sum(js)))
        for n, j in zip(ms, js):
            term *= Fraction(math.comb(n, j), math.factorial(n - j))
        out += (-1) ** sum(js) * term
    return out


def test_grouped_ie_matches_term_by_term_sum():
    assert len(list(itertools.product(range(3), range(2), range(2)))) == 12
    assert _naive_ie((2, 1, 1)) == 2
    for spec in itertools.product(range(4), repeat=3):
        assert multiset_derangements_ie(spec) == _naive_ie(spec), spec
