import math

import pytest

from cyclohecke.tableaux import (
    Multipartition,
    Permutation,
    all_permutations,
    block_shift_perm,
    coset_factorisation,
    dominance_leq,
    entry_one_condition,
    enumerate_multipartitions,
    enumerate_standard_tableaux,
    initial_tableaux,
    m_k,
    orbit_invariants,
    shift,
    sigma_class_representatives,
    tableau_word,
)


def mp(*comps):
    return Multipartition(tuple(tuple(c) for c in comps))


def hook_count(lam):
    # independent oracle: multinomial times the hook length formula per component
    n = lam.n
    out = math.factorial(n)
    for comp in lam.components:
        conj = [sum(1 for x in comp if x > j) for j in range(comp[0])] if comp else []
        hooks = 1
        for i, row in enumerate(comp):
            for j in range(row):
                hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
        out = out // hooks
    return out


def test_enumeration_counts():
    assert [m.components for m in enumerate_multipartitions(1, 3)] == [((3,),), ((2, 1),), ((1, 1, 1),)]
    assert len(enumerate_multipartitions(2, 2)) == 5
    assert enumerate_multipartitions(2, 0) == (mp((), ()),)
    assert len(enumerate_multipartitions(3, 2)) == 9


def test_tableau_counts():
    assert len(enumerate_standard_tableaux(mp((1,), (1,)))) == 2
    assert len(enumerate_standard_tableaux(mp((2, 1)))) == 2
    assert len(enumerate_standard_tableaux(mp((1,), (1,), (1,)))) == 6


@pytest.mark.parametrize("r,n", [(1, 4), (2, 3), (3, 3), (2, 4), (4, 2)])
def test_tableau_counts_match_hook_formula(r, n):
    total = 0
    for lam in enumerate_multipartitions(r, n):
        tabs = enumerate_standard_tableaux(lam)
        assert len(tabs) == hook_count(lam)
        assert all(t.is_standard() for t in tabs)
        total += len(tabs) ** 2
    assert total == r ** n * math.factorial(n)


def test_dominance_examples():
    assert dominance_leq(mp((1, 1), ()), mp((2,), ()))
    assert not dominance_leq(mp((2,), ()), mp((1, 1), ()))
    for lam in enumerate_multipartitions(2, 3):
        top, bottom = initial_tableaux(lam)
        for s in enumerate_standard_tableaux(lam):
            assert dominance_leq(s, top)
            assert dominance_leq(bottom, s)


@pytest.mark.parametrize("r,n", [(1, 4), (2, 3), (2, 4)])
def test_dominance_is_antisymmetric(r, n):
    shapes = enumerate_multipartitions(r, n)
    for a in shapes:
        for b in shapes:
            if a != b and dominance_leq(a, b):
                assert not dominance_leq(b, a)


def test_initial_tableaux():
    top, _ = initial_tableaux(mp((2,)))
    assert top.rows() == [[[1, 2]]]
    top, _ = initial_tableaux(mp((1,), (1,)))
    assert top.component_of(1) == 1
    top, bottom = initial_tableaux(mp((1, 1)))
    assert top == bottom


def test_shift_examples():
    assert shift(mp((1,), ()), 1, 2) == mp((), (1,))
    shapes = enumerate_multipartitions(2, 2)
    for lam in shapes:
        assert shift(lam, 2, 2) == lam
        for a in range(3):
            for b in range(3):
                assert shift(shift(lam, a, 2), b, 2) == shift(lam, a + b, 2)


@pytest.mark.parametrize("r,p,n", [(2, 2, 3), (4, 2, 2), (4, 4, 2), (3, 3, 3), (2, 2, 4)])
def test_shift_is_a_bijection_on_tableaux(r, p, n):
    for lam in enumerate_multipartitions(r, n):
        tabs = enumerate_standard_tableaux(lam)
        for z in range(p):
            image = {shift(t, z, p) for t in tabs}
            assert image == set(enumerate_standard_tableaux(shift(lam, z, p)))


def test_orbit_invariants():
    assert orbit_invariants(mp((1,), (1,)), 2) == (1, 2)
    assert orbit_invariants(mp((2,), ()), 2) == (2, 1)
    assert orbit_invariants(mp((1,), (2,), (1,), (2,)), 4) == (2, 2)


def test_class_representatives():
    reps = sigma_class_representatives(2, 2, 2)
    assert reps == (mp((2,), ()), mp((1, 1), ()), mp((1,), (1,)))
    assert sum(orbit_invariants(lam, 2)[1] for lam in reps) == 4
    assert len(sigma_class_representatives(2, 1, 2)) == 5


@pytest.mark.parametrize("r,p,n", [(2, 2, 3), (4, 2, 2), (4, 4, 2), (3, 3, 2), (2, 2, 4)])
def test_plam_divides_tableau_count(r, p, n):
    for lam in enumerate_multipartitions(r, n):
        _, plam = orbit_invariants(lam, p)
        tabs = enumerate_standard_tableaux(lam)
        assert len(tabs) % plam == 0
        good = [t for t in tabs if entry_one_condition(t, p)]
        assert len(good) * plam == len(tabs)


def test_tableau_words():
    lam = mp((1,), (1,))
    top, _ = initial_tableaux(lam)
    d, word = tableau_word(top)
    assert d == Permutation.identity(2) and word == ()
    other = [t for t in enumerate_standard_tableaux(lam) if t != top][0]
    d, word = tableau_word(other)
    assert word == (1,) and d == Permutation.simple(1, 2)


@pytest.mark.parametrize("r,n", [(1, 4), (2, 3), (2, 4)])
def test_word_is_reduced_and_reaches_t(r, n):
    for lam in enumerate_multipartitions(r, n):
        top, bottom = initial_tableaux(lam)
        for t in enumerate_standard_tableaux(lam):
            d, word = tableau_word(t)
            assert top.act(d) == t
            assert len(word) == d.length()
            assert Permutation.from_word(word, n) == d
        # length of d(t_lam) is the inversion count of its one-line form
        d, _ = tableau_word(bottom)
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if d.images[i] > d.images[j])
        assert d.length() == inv


def test_m_k_examples():
    lam = mp((1,), (1,))
    top, _ = initial_tableaux(lam)
    other = [t for t in enumerate_standard_tableaux(lam) if t != top][0]
    assert m_k(other, 1, 2) == top
    assert m_k(other, 0, 2) == other
    for lam in enumerate_multipartitions(2, 3):
        top, _ = initial_tableaux(lam)
        for k in range(4):
            assert m_k(top, k, 2) == top


@pytest.mark.parametrize("r,p,n", [(2, 2, 3), (4, 2, 2), (4, 4, 2), (2, 2, 4)])
def test_m_k_dominates_and_factorises(r, p, n):
    for lam in enumerate_multipartitions(r, n):
        for t in enumerate_standard_tableaux(lam):
            for k in range(p):
                m = m_k(t, k, p)
                assert m.is_standard()
                assert dominance_leq(t, m)
                x, dk = coset_factorisation(t, k, p)
                d, _ = tableau_word(t)
                assert x * dk == d
                assert x.length() + dk.length() == d.length()


def test_block_shift_perm():
    assert block_shift_perm(1, 1) == Permutation.simple(1, 2)
    assert block_shift_perm(3, 0, 1, 5) == Permutation.identity(5)
    assert block_shift_perm(2, 1).images == (2, 3, 1)


def test_all_permutations_count():
    assert len(all_permutations(4)) == 24
