import math

import pytest

from cyclohecke.exactfield import default_params
from cyclohecke.gprn import (
    EntryOneViolation,
    A_ij,
    R_coeff,
    f_k,
    grpn_basis,
    grpn_central_idempotents,
    h_lambda,
    h_lambda_l1_l2,
    h_t,
    r_coeff,
    twisted_center_basis,
)
from cyclohecke.tableaux import (
    Multipartition,
    entry_one_condition,
    initial_tableaux,
    orbit_invariants,
    shift,
    sigma_class_representatives,
)

from conftest import form, layer


def expected_dim(r, p, n):
    return r ** n * math.factorial(n) // p


@pytest.mark.parametrize("point,count", [((2, 2, 2), 4), ((3, 3, 2), 6), ((2, 2, 3), 24)])
def test_basis_cardinality(point, count):
    assert expected_dim(*point) == count
    assert len(grpn_basis(default_params(*point))) == count


@pytest.mark.parametrize("point", [(2, 2, 2), (3, 3, 2), (4, 2, 2), (4, 4, 2), (2, 1, 3), (1, 1, 3)])
def test_basis_is_sigma_fixed(point):
    sf = form(*point)
    for e in grpn_basis(sf.params).elements:
        assert sf.sigma_apply(e.matrix) == e.matrix


def test_p_one_basis_is_seminormal():
    P = default_params(1, 1, 3)
    sf = form(1, 1, 3)
    for e in grpn_basis(P).elements:
        assert e.terms == {(e.s, e.t): sf.one()}
        assert e.matrix == sf.f_element(e.s, e.t)


def test_idempotent_count_and_sum():
    P = default_params(2, 2, 2)
    ids = grpn_central_idempotents(P)
    reps = sigma_class_representatives(2, 2, 2)
    assert [orbit_invariants(lam, 2)[1] for lam in reps] == [1, 1, 2]
    assert len(ids) == 4
    total = form(2, 2, 2).zero_element()
    for F in ids:
        assert F @ F == F
        total = total + F
    assert total == form(2, 2, 2).identity()


@pytest.mark.parametrize("point,dims", [((2, 2, 2), {0: 5, 1: 1}), ((3, 3, 2), {0: 9, 1: 0, 2: 0})])
def test_twisted_center_counts(point, dims):
    P = default_params(*point)
    for k, want in dims.items():
        assert len(twisted_center_basis(P, k)) == want


def test_r_and_R_at_initial_tableaux():
    P = default_params(4, 4, 2)
    sf = form(4, 4, 2)
    for lam in sf.shapes:
        top, _ = initial_tableaux(lam)
        for k in range(5):
            assert r_coeff(P, top, k) == 1
        for s in sf.std[lam]:
            for t in sf.std[lam]:
                assert R_coeff(P, s, t, 0) == 1
                R = R_coeff(P, s, t, 1)
                g = sf.gamma
                assert R * R == g(s) * g(t) / (g(shift(s, 1, 4)) * g(shift(t, 1, 4)))


def _branch_shapes(point):
    sf = form(*point)
    out = {}
    for lam in sf.shapes:
        _, plam = orbit_invariants(lam, sf.p)
        out.setdefault(plam, []).append(lam)
    return out


@pytest.mark.parametrize("point,plam", [((2, 2, 2), 2), ((2, 2, 4), 2), ((4, 2, 2), 2), ((4, 4, 2), 2),
                                        ((3, 3, 3), 3)])
def test_h_lambda_square_in_each_branch(point, plam):
    sf = form(*point)
    shapes = _branch_shapes(point).get(plam)
    assert shapes, "the grid point must exercise this branch"
    for lam in shapes:
        o, _ = orbit_invariants(lam, sf.p)
        top, _ = initial_tableaux(lam)
        h = h_lambda(sf.params, lam)
        assert h * h == sf.gamma(shift(top, o, sf.p)) / sf.gamma(top)
        assert h_lambda_l1_l2(sf.params, lam, 0, plam) == 1


def test_odd_branch_absent_at_332():
    # every shape at (3,3,2) has p_lam = 1, so only the trivial branch runs there
    assert set(_branch_shapes((3, 3, 2))) == {1}
    for lam in form(3, 3, 2).shapes:
        assert h_lambda(form(3, 3, 2).params, lam) == 1


def test_h_t_requires_entry_one():
    P = default_params(2, 2, 2)
    lam = Multipartition(((1,), (1,)))
    bad = [t for t in form(2, 2, 2).std[lam] if not entry_one_condition(t, 2)]
    assert bad
    with pytest.raises(EntryOneViolation):
        h_t(P, bad[0], 0, 1)


def test_A_zero_zero_is_one():
    P = default_params(4, 4, 2)
    L = layer(4, 4, 2)
    for lam in L.reps:
        good = [t for t in L.sf.std[lam] if entry_one_condition(t, 4)]
        for s in good:
            for t in L.sf.std[lam]:
                assert A_ij(P, s, t, 0, 0) == 1


@pytest.mark.parametrize("point", [(2, 2, 2), (4, 4, 2), (2, 2, 3)])
def test_orthogonality_on_matrices(point):
    L = layer(*point)
    P = L.params
    elems = grpn_basis(P).elements
    for a in elems:
        for b in elems:
            prod = a.matrix @ b.matrix
            if a.shape == b.shape and a.t == b.s and a.k == b.k:
                _, plam = orbit_invariants(a.shape, L.p)
                want = f_k(P, a.s, b.t, a.k) * (L.sf.gamma(a.t) * plam)
            else:
                want = L.sf.zero_element()
            assert prod == want


@pytest.mark.parametrize("point", [(2, 2, 2), (3, 3, 2), (4, 2, 2)])
def test_twisted_center_equations(point):
    L = layer(*point)
    T = L.sf.generators()
    for k in range(L.p):
        e = L.sf.params.eps ** k
        for lam, z in L.twisted_center(k):
            assert z @ T[0] == (T[0] @ z) * e
            for i in range(1, L.sf.n):
                assert z @ T[i] == T[i] @ z
