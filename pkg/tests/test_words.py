import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from avoidwords.words import (
    P123,
    P132,
    P213,
    P231,
    P312,
    P321,
    BruteForceCapError,
    avoidance_involution,
    contains_pattern,
    count_avoiders_bruteforce,
    count_avoiders_enumeration,
    count_avoiders_recurrence,
    multiset_permutations,
)


# -------- containment --------

def test_pattern_is_its_own_witness():
    assert contains_pattern([1, 2, 3], P123)


def test_two_distinct_letters_cannot_contain():
    assert not contains_pattern([2, 2, 1], P123)


def test_hand_checked_containment():
    assert contains_pattern([1, 3, 2, 4], P123)  # subsequence (1,3,4)


def test_contains_all_six_patterns_generic():
    w = [3, 1, 4, 2, 5]
    for p in (P123, P132, P213, P231, P312, P321):
        assert contains_pattern(w, p) == _naive_contains(w, p)


def _naive_contains(word, pattern):
    for i, j, k in itertools.combinations(range(len(word)), 3):
        a, b, c = word[i], word[j], word[k]
        if len({a, b, c}) < 3:
            continue
        ranks = sorted((a, b, c))
        if tuple(ranks.index(v) + 1 for v in (a, b, c)) == pattern:
            return True
    return False


@settings(max_examples=150)
@given(st.lists(st.integers(1, 5), max_size=8))
def test_fast_scans_agree_with_naive(word):
    for p in (P123, P132, P231):
        assert contains_pattern(word, p) == _naive_contains(word, p)


# -------- brute-force counting --------

def test_catalan_c3():
    assert count_avoiders_bruteforce((1, 1, 1), P123) == 5


def test_two_letters_all_avoid():
    assert count_avoiders_bruteforce((2, 2), P123) == 6


def test_222_is_43():
    assert count_avoiders_bruteforce((2, 2, 2), P123) == 43


def test_cap_enforced():
    with pytest.raises(BruteForceCapError):
        count_avoiders_bruteforce((7, 7), P123)
    assert count_avoiders_bruteforce((7, 7), P123, cap=14) == 3432  # C(14,7)


def test_multiset_permutations_lexicographic_and_complete():
    words = list(multiset_permutations((2, 1)))
    assert words == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert len(list(multiset_permutations((1, 1, 1, 1)))) == 24


@pytest.mark.parametrize("vector", [(1, 1, 1), (2, 2), (2, 1, 1), (2, 2, 1), (3, 2, 1)])
@pytest.mark.parametrize("pattern", [P123, P132, P231])
def test_pruned_search_equals_full_enumeration(vector, pattern):
    assert count_avoiders_bruteforce(vector, pattern) == count_avoiders_enumeration(
        vector, pattern
    )


def test_generic_pattern_falls_back():
    assert count_avoiders_bruteforce((1, 1, 1), P321) == 5


# -------- the involution --------

def test_involution_fixes_empty():
    assert avoidance_involution(()) == ()


def test_involution_hand_examples():
    assert avoidance_involution((2, 2, 1)) == (2, 2, 1)
    assert avoidance_involution((1, 3, 2)) == (1, 2, 3)


@settings(max_examples=250)
@given(st.lists(st.integers(1, 4), max_size=9))
def test_involution_properties(word):
    w = tuple(word)
    fw = avoidance_involution(w)
    assert sorted(fw) == sorted(w)  # multiset preserved
    assert avoidance_involution(fw) == w  # involution
    assert contains_pattern(w, P123) == contains_pattern(fw, P132)
    assert contains_pattern(w, P132) == contains_pattern(fw, P123)


# -------- the multiset recurrence --------

def test_recurrence_base_values():
    assert count_avoiders_recurrence(()) == 1
    assert count_avoiders_recurrence((1, 1)) == 2
    assert count_avoiders_recurrence((1, 1, 1)) == 5
    assert count_avoiders_recurrence((2, 2, 2)) == 43


def test_recurrence_symmetric():
    rng = random.Random(7)
    for _ in range(10):
        vec = [rng.randint(0, 3) for _ in range(rng.randint(1, 5))]
        shuffled = vec[:]
        rng.shuffle(shuffled)
        assert count_avoiders_recurrence(vec) == count_avoiders_recurrence(shuffled)


def test_recurrence_agrees_with_bruteforce_small():
    vectors = [
        v
        for n in range(1, 4)
        for v in itertools.product(range(4), repeat=n)
        if 0 < sum(v) <= 7
    ]
    for v in vectors:
        assert count_avoiders_recurrence(v) == count_avoiders_bruteforce(v, P123)


def test_equinumeracy_spot_checks():
    for v in [(2, 2, 2), (3, 2, 1), (2, 2, 1, 1)]:
        c123 = count_avoiders_bruteforce(v, P123)
        assert count_avoiders_bruteforce(v, P132) == c123
        assert count_avoiders_bruteforce(v, P231) == c123
