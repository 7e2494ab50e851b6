import random
from fractions import Fraction

import pytest

from cyclohecke.exactfield import default_params, make_params
from cyclohecke.linalg import BlockMatrix
from cyclohecke.seminormal import (
    DESK_BOUND_ENV,
    DeskBoundExceeded,
    SeminormalForm,
    ab_coefficients,
    f_element,
    gamma_table,
    jm_idempotent,
    phi_element,
    q_factorial,
    residue,
    sigma_apply,
    specht_model,
    word_basis_expand,
)
from cyclohecke.tableaux import (
    Multipartition,
    dominance_leq,
    enumerate_standard_tableaux,
    initial_tableaux,
    shift,
)

from conftest import ACCEPTANCE_GRID, form

P222 = default_params(2, 2, 2)
LAM11 = Multipartition(((1,), (1,)))
TOP11, _ = initial_tableaux(LAM11)
LOW11 = [t for t in enumerate_standard_tableaux(LAM11) if t != TOP11][0]


def test_residues_at_two_cells():
    assert residue(P222, TOP11, 1) == -3
    assert residue(P222, LOW11, 1) == 3


def test_residue_type_a():
    P = default_params(1, 1, 2)
    top, _ = initial_tableaux(Multipartition(((2,),)))
    assert residue(P, top, 2) == P.q * P.Q[0]


def test_a_coefficient_by_hand():
    a, b = ab_coefficients(P222, TOP11, 1)
    # (q - 1) res(2) / (res(2) - res(1)) with res = -3, 3
    assert a == Fraction(1 * 3, 3 - (-3))
    assert a == Fraction(1, 2)
    # the swap is dominated, so the off-diagonal factor is 1
    assert b == 1


def test_gamma_ratio_on_an_edge():
    g = gamma_table(P222, [LAM11])
    # (q a - b)(a - q b)/(a - b)^2 with a = -3, b = 3, q = 2
    assert g[LOW11] / g[TOP11] == Fraction((2 * -3 - 3) * (-3 - 2 * 3), 36)
    assert g[LOW11] / g[TOP11] == Fraction(9, 4)


def test_single_cell_gamma_is_one():
    P = default_params(1, 1, 1)
    lam = Multipartition(((1,),))
    assert gamma_table(P, [lam])[initial_tableaux(lam)[0]] == 1


def test_q_factorial():
    q = P222.q
    assert q_factorial(q, 0) == 1
    assert q_factorial(q, 2) == q + 1
    assert q_factorial(q, 3) == 21


def test_generator_matrices_small():
    model = specht_model(P222, LAM11)
    assert model.tableaux == (TOP11, LOW11)
    T0 = model.generators[0]
    assert T0 == [[-3, 0], [0, 3]]
    P = default_params(1, 1, 2)
    col = specht_model(P, Multipartition(((1, 1),)))
    assert col.generators[1] == [[-1]]


@pytest.mark.parametrize("point", [(2, 2, 3), (2, 1, 3), (3, 3, 2), (2, 2, 4), (1, 1, 4)])
def test_a_coefficients_sum_to_q_minus_one(point):
    sf = form(*point)
    for lam in sf.shapes:
        for s in sf.std[lam]:
            for i in range(1, sf.n):
                t = s.swap(i)
                if t.is_standard():
                    assert sf.a_coeff(s, i) + sf.a_coeff(t, i) == sf.params.q - 1


def _paths(sf, target):
    """Every descending chain of adjacent swaps from t^lambda to target."""
    top, _ = initial_tableaux(target.shape)
    out = []

    def walk(cur, acc):
        if cur == target:
            out.append(acc)
            return
        for i in range(1, sf.n):
            nxt = cur.swap(i)
            if nxt.is_standard() and dominance_leq(nxt, cur) and dominance_leq(target, nxt):
                a, b = sf.residue(cur, i), sf.residue(nxt, i)
                q = sf.params.q
                walk(nxt, acc * (q * a - b) * (a - q * b) / ((a - b) * (a - b)))

    walk(top, sf.one())
    return out


@pytest.mark.parametrize("point", [(2, 2, 3), (3, 3, 2), (1, 1, 4), (2, 2, 4)])
def test_gamma_path_independence(point):
    sf = form(*point)
    for lam in sf.shapes:
        top, _ = initial_tableaux(lam)
        for t in sf.std[lam]:
            values = _paths(sf, t)
            assert values
            assert all(v == sf.gamma(t) / sf.gamma(top) for v in values)


@pytest.mark.parametrize("point", ACCEPTANCE_GRID)
def test_generators_satisfy_relations(point):
    sf = form(*point)
    T = sf.generators()
    I = sf.identity()
    q = sf.params.q
    for i in range(1, sf.n):
        assert ((T[i] - I * q) @ (T[i] + I)).is_zero()
    if sf.n >= 2:
        assert T[0] @ T[1] @ T[0] @ T[1] == T[1] @ T[0] @ T[1] @ T[0]
    for i in range(1, sf.n - 1):
        assert T[i] @ T[i + 1] @ T[i] == T[i + 1] @ T[i] @ T[i + 1]
    acc = I
    for Qc in sf.params.Q:
        acc = acc @ (T[0].power(sf.p, sf.dims) - I * Qc ** sf.p)
    assert acc.is_zero()


def test_jm_idempotents_complete(sf222):
    total = sf222.zero_element()
    for lam in sf222.shapes:
        for t in sf222.std[lam]:
            F = jm_idempotent(P222, t)
            assert F @ F == F
            assert F == sf222.matrix_unit(t, t)
            total = total + F
    assert total == sf222.identity()


def test_f_element_and_phi(sf222):
    for lam in sf222.shapes:
        top, _ = initial_tableaux(lam)
        assert phi_element(P222, top) == sf222.identity()
        for s in sf222.std[lam]:
            for t in sf222.std[lam]:
                f = f_element(P222, s, t)
                assert sf222.star(f) == f_element(P222, t, s)
                lhs = sf222.phi_star(s) @ sf222.matrix_unit(top, top, sf222.gamma(top)) @ phi_element(P222, t)
                assert lhs == f
    with pytest.raises(ValueError):
        sf222.matrix_unit(TOP11, initial_tableaux(Multipartition(((2,), ())))[0])


def test_word_basis_expansions(sf222):
    L1 = sf222.jm_elements()[0]
    nz = word_basis_expand(P222, L1)
    assert len(nz) == 1
    (a, w), c = nz[0]
    assert a == (1, 0) and w.length() == 0 and c == 1
    nz = word_basis_expand(P222, sf222.identity())
    assert len(nz) == 1 and nz[0][0][0] == (0, 0) and nz[0][1] == 1


def _random_element(sf, rng):
    x = sf.zero_element()
    for _ in range(3):
        lam = rng.choice(sf.shapes)
        d = sf.dims[lam]
        x.blocks[lam][rng.randrange(d)][rng.randrange(d)] = sf.params.scalar(rng.randint(-4, 4))
    return x


@pytest.mark.parametrize("point", [(2, 2, 2), (3, 3, 2)])
def test_sigma_basic_rules(point):
    sf = form(*point)
    T = sf.generators()
    assert sigma_apply(sf.params, T[0]) == T[0] * sf.params.eps
    assert sigma_apply(sf.params, T[1]) == T[1]
    rng = random.Random(7)
    for _ in range(20):
        x = _random_element(sf, rng)
        assert sigma_apply(sf.params, x, sf.p) == x
        y = _random_element(sf, rng)
        assert sf.sigma_apply(x @ y) == sf.sigma_apply(x) @ sf.sigma_apply(y)


@pytest.mark.parametrize("point", [(2, 2, 2), (3, 3, 2), (2, 2, 3)])
def test_sigma_moves_idempotents(point):
    sf = form(*point)
    for lam in sf.shapes:
        for t in sf.std[lam]:
            u = shift(t, 1, sf.p)
            assert sf.sigma_apply(sf.matrix_unit(t, t)) == sf.matrix_unit(u, u)


def test_desk_bound(monkeypatch):
    monkeypatch.setenv(DESK_BOUND_ENV, "10")
    sf = SeminormalForm(default_params(2, 2, 2))
    with pytest.raises(DeskBoundExceeded, match="r\\^n n! = 8|exceeds"):
        SeminormalForm(default_params(2, 2, 3)).word_basis()
    # 8 <= 10 still builds
    assert sf.word_basis().size == 8


def test_python_backend_agrees_with_flint(sf222):
    from cyclohecke.seminormal import WordBasis
    fast = WordBasis(sf222)
    slow = WordBasis(sf222, backend="python")
    x = sf222.f_element(TOP11, LOW11)
    assert fast.expand(x) == slow.expand(x)
    assert slow.assemble(slow.expand(x)) == x


def test_block_matrix_algebra(sf222):
    T = sf222.generators()
    x = T[0] + T[1]
    flat = x.flatten()
    assert BlockMatrix.unflatten(sf222.shapes, sf222.dims, flat, 2) == x
    assert (x - x).is_zero()
    assert T[0].power(2, sf222.dims) == T[0] @ T[0]


def test_unknown_mutation_rejected():
    with pytest.raises(ValueError):
        SeminormalForm(P222, mutation="nonsense")


def test_custom_params_equal_defaults():
    assert make_params(2, 2, 2, "2", ["3"]) == P222
