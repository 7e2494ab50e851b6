import random
from fractions import Fraction

import pytest

from cyclohecke.exactfield import (
    CycloRational,
    FieldDivisionByZero,
    check_semisimple,
    cyclotomic_polynomial,
    default_params,
    eps_power,
    euler_phi,
    field_arith,
    make_params,
    parse_rational,
)

from conftest import ACCEPTANCE_GRID


def test_cyclotomic_polynomials():
    # constant term first
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("p", range(1, 13))
def test_degree_is_totient(p):
    assert len(cyclotomic_polynomial(p)) - 1 == euler_phi(p)


def test_zeta_squares():
    z2 = CycloRational.zeta(2)
    assert z2 * z2 == 1
    assert z2 == -1
    z4 = CycloRational.zeta(4)
    assert z4 * z4 == -1


def test_inverse_of_one_plus_i():
    z = CycloRational.zeta(4)
    half = Fraction(1, 2)
    assert 1 / (1 + z) == CycloRational(4, [half, -half])
    assert field_arith(CycloRational.rational(4, 1), 1 + z, "div") == (1 - z) / 2


def test_division_by_zero_is_distinct():
    with pytest.raises(FieldDivisionByZero):
        CycloRational.rational(3, 1) / CycloRational.rational(3, 0)


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5, 6, 8])
def test_field_axioms_on_random_triples(p):
    rng = random.Random(p)

    def rand():
        return CycloRational(p, [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(euler_phi(p))])

    for _ in range(30):
        a, b, c = rand(), rand(), rand()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        if a:
            assert a * a.inverse() == 1


@pytest.mark.parametrize("p", [1, 2, 3, 4, 6])
def test_eps_order(p):
    P = make_params(p, p, 2, 2, [3])
    from math import gcd
    for t in range(p):
        order = p // gcd(t, p)
        assert eps_power(P, t) ** order == 1
        assert all(eps_power(P, t) ** m != 1 for m in range(1, order))
    assert eps_power(P, p) == 1
    if p in (2, 4):
        assert eps_power(P, p // 2) == -1


def test_semisimple_examples():
    assert check_semisimple(make_params(2, 2, 2, 2, [3]))
    bad = check_semisimple(make_params(2, 2, 2, 1, [3]))
    assert not bad and "q-integer" in bad.witness
    bad = check_semisimple(make_params(2, 1, 2, 2, ["3", "6"]))
    assert not bad
    assert bad.witness == "Q_1 - q^-1*Q_2"


def test_default_params_points():
    for (r, p, n), Q in {(2, 2, 2): [3], (4, 2, 2): [3, 5], (3, 3, 2): [3]}.items():
        P = default_params(r, p, n)
        assert P.q == 2
        assert list(P.Q) == [CycloRational.rational(p, x) for x in Q]


@pytest.mark.parametrize("point", ACCEPTANCE_GRID + [(3, 3, 3), (2, 2, 4)])
def test_default_params_semisimple_on_grid(point):
    assert check_semisimple(default_params(*point))


def test_params_reject_bad_divisibility():
    with pytest.raises(ValueError):
        make_params(3, 2, 2, 2, [3])
    with pytest.raises(ValueError):
        make_params(4, 2, 2, 2, [3])


def test_parse_rational_strings():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-2") == -2
    with pytest.raises(ValueError):
        parse_rational("0.5e")


def test_json_round_trip():
    x = CycloRational(5, [Fraction(1, 3), 0, -2, Fraction(7, 2)])
    assert CycloRational.from_json(5, x.to_json()) == x
