"""Exact arithmetic in Q(zeta_p) and semisimple parameter points.

Elements of the cyclotomic field are stored as coefficient vectors of
length phi(p) over the rationals, reduced modulo the p-th cyclotomic
polynomial, constant term first.

>>> z = CycloRational.zeta(4)
>>> z * z
CycloRational(4, ['-1', '0'])
>>> 1 / (1 + z)
CycloRational(4, ['1/2', '-1/2'])
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "FieldDivisionByZero",
    "SemisimplicityError",
    "CycloRational",
    "HeckeParams",
    "SemisimpleCheck",
    "cyclotomic_polynomial",
    "euler_phi",
    "field_arith",
    "eps_power",
    "check_semisimple",
    "default_params",
    "make_params",
    "parse_rational",
    "format_rational",
]


class FieldDivisionByZero(ZeroDivisionError):
    """Raised when dividing by the zero element of Q(zeta_p)."""


class SemisimplicityError(ValueError):
    """Raised when a parameter point fails the semisimplicity product."""

    def __init__(self, message: str, witness: str | None = None):
        super().__init__(message)
        self.witness = witness


# ---------------------------------------------------------------------------
# polynomials over Q, as lists of Fractions, constant term first


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise FieldDivisionByZero("polynomial division by zero")
    _trim(a)
    if len(a) < len(b):
        return [], a
    quot = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        a.pop()
        _trim(a)
    return _trim(quot), a


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: Sequence, b: Sequence) -> list:
    m = max(len(a), len(b))
    out = [Fraction(0)] * m
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _divisors(p: int) -> list[int]:
    return [m for m in range(1, p + 1) if p % m == 0]


def euler_phi(p: int) -> int:
    return sum(1 for k in range(1, p + 1) if gcd(k, p) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(p: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_p, constant term first.

    Obtained by dividing x^p - 1 by Phi_m for every proper divisor m of p.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if p < 1:
        raise ValueError("p must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (p - 1) + [Fraction(1)]
    for m in _divisors(p):
        if m == p:
            continue
        num, rem = _poly_divmod(num, cyclotomic_polynomial(m))
        assert not rem, "cyclotomic division left a remainder"
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


@lru_cache(maxsize=None)
def _reduction_table(p: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row k holds x^k mod Phi_p for 0 <= k < 2*phi(p) - 1."""
    phi = cyclotomic_polynomial(p)
    deg = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    for _ in range(max(1, 2 * deg - 1)):
        rows.append(tuple(cur))
        # multiply by x and reduce using the monic relation
        top = cur[-1]
        nxt = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(deg):
                nxt[i] -= top * phi[i]
        cur = nxt
    return tuple(rows)


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse an exact rational given as "a/b", "a" or a number; floats refused."""
    if isinstance(text, float):
        raise TypeError("floating point input is not accepted")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = str(text).strip()
    if not s or any(ch in s for ch in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(s)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


class CycloRational:
    """An element of Q(zeta_p) in canonical reduced coordinates."""

    __slots__ = ("p", "c", "_hash")

    def __init__(self, p: int, coeffs: Iterable = ()):
        deg = len(cyclotomic_polynomial(p)) - 1
        vals = [Fraction(x) for x in coeffs]
        if len(vals) > deg:
            vals = _reduce(p, vals)
        vals += [Fraction(0)] * (deg - len(vals))
        self.p = p
        self.c = tuple(vals)
        self._hash = None

    # constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, p: int, c: tuple) -> "CycloRational":
        obj = cls.__new__(cls)
        obj.p = p
        obj.c = c
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, p: int, x) -> "CycloRational":
        deg = len(cyclotomic_polynomial(p)) - 1
        return cls._raw(p, (Fraction(x),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zeta(cls, p: int) -> "CycloRational":
        deg = len(cyclotomic_polynomial(p)) - 1
        if deg == 1:
            # p = 1 or 2: zeta is the root of x - 1 or x + 1
            return cls.rational(p, -cyclotomic_polynomial(p)[0])
        return cls._raw(p, (Fraction(0), Fraction(1)) + (Fraction(0),) * (deg - 2))

    @classmethod
    def from_json(cls, p: int, data: Sequence[str]) -> "CycloRational":
        return cls(p, [parse_rational(x) for x in data])

    # basic protocol ---------------------------------------------------
    def _coerce(self, other) -> "CycloRational":
        if isinstance(other, CycloRational):
            if other.p != self.p:
                raise ValueError("mixing elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, Rational)):
            return CycloRational.rational(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloRational._raw(self.p, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycloRational._raw(self.p, tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloRational._raw(self.p, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloRational._raw(self.p, tuple(a * other for a in self.c))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if len(self.c) == 1:
            return CycloRational._raw(self.p, (self.c[0] * o.c[0],))
        deg = len(self.c)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(o.c):
                    if y:
                        prod[i + j] += x * y
        return CycloRational._raw(self.p, tuple(_reduce(self.p, prod)))

    __rmul__ = __mul__

    def inverse(self) -> "CycloRational":
        if not self:
            raise FieldDivisionByZero("division by zero in Q(zeta_%d)" % self.p)
        if len(self.c) == 1:
            return CycloRational._raw(self.p, (1 / self.c[0],))
        # extended Euclid on (a, Phi_p): find u with u*a = 1 mod Phi_p
        modulus = [Fraction(x) for x in cyclotomic_polynomial(self.p)]
        r0, r1 = modulus, _trim(list(self.c))
        s0, s1 = [], [Fraction(1)]
        while r1:
            quo, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quo, s1))
        # r0 is a nonzero constant since Phi_p is irreducible
        assert len(r0) == 1
        inv = [x / r0[0] for x in s0]
        return CycloRational(self.p, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        out = CycloRational.rational(self.p, 1)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, CycloRational):
            return self.p == other.p and self.c == other.c
        if isinstance(other, (int, Rational)):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self.c[1:]):
                self._hash = hash(self.c[0])
            else:
                self._hash = hash((self.p, self.c))
        return self._hash

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_json(self) -> list[str]:
        return [format_rational(x) for x in self.c]

    def __repr__(self):
        return "CycloRational(%d, %r)" % (self.p, [str(x) for x in self.c])

    def __str__(self):
        terms = []
        for k, x in enumerate(self.c):
            if not x:
                continue
            if k == 0:
                terms.append(str(x))
            else:
                mono = "z" if k == 1 else "z^%d" % k
                terms.append(mono if x == 1 else "%s*%s" % (x, mono))
        return " + ".join(terms) if terms else "0"


def _reduce(p: int, poly: Sequence[Fraction]) -> list[Fraction]:
    table = _reduction_table(p)
    deg = len(table[0])
    out = [Fraction(0)] * deg
    for k, x in enumerate(poly):
        if not x:
            continue
        if k < deg:
            out[k] += x
            continue
        if k >= len(table):
            # long inputs: fall back to polynomial division
            _, rem = _poly_divmod(poly, cyclotomic_polynomial(p))
            rem = list(rem) + [Fraction(0)] * (deg - len(rem))
            return rem
        row = table[k]
        for i in range(deg):
            if row[i]:
                out[i] += x * row[i]
    return out


def field_arith(a: CycloRational, b: CycloRational, op: str) -> CycloRational:
    """Apply one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


# ---------------------------------------------------------------------------
# Hecke parameters


@dataclass(frozen=True)
class HeckeParams:
    """Parameters (r, p, d, n, q, Q_1..Q_d) with eps the class of zeta_p."""

    r: int
    p: int
    d: int
    n: int
    q: CycloRational
    Q: tuple[CycloRational, ...]
    eps: CycloRational = field(compare=False)

    def one(self) -> CycloRational:
        return CycloRational.rational(self.p, 1)

    def scalar(self, x) -> CycloRational:
        return CycloRational.rational(self.p, x)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "p": self.p,
            "d": self.d,
            "n": self.n,
            "q": self.q.to_json(),
            "Q": [x.to_json() for x in self.Q],
        }


def make_params(r: int, p: int, n: int, q, Q: Sequence) -> HeckeParams:
    """Build parameters from rational q and Q values (not yet checked)."""
    if r < 1 or p < 1 or n < 1:
        raise ValueError("r, p, n must be positive")
    if r % p:
        raise ValueError(f"p={p} does not divide r={r}")
    d = r // p
    if len(Q) != d:
        raise ValueError(f"expected {d} cyclotomic parameters, got {len(Q)}")
    qq = q if isinstance(q, CycloRational) else CycloRational.rational(p, parse_rational(q))
    QQ = tuple(
        x if isinstance(x, CycloRational) else CycloRational.rational(p, parse_rational(x))
        for x in Q
    )
    return HeckeParams(r, p, d, n, qq, QQ, CycloRational.zeta(p))


def eps_power(params: HeckeParams, t: int) -> CycloRational:
    """eps^t, exponent reduced mod p."""
    return _eps_power_cached(params.p, t % params.p)


@lru_cache(maxsize=None)
def _eps_power_cached(p: int, t: int) -> CycloRational:
    return CycloRational.zeta(p) ** t


@dataclass(frozen=True)
class SemisimpleCheck:
    ok: bool
    witness: str | None = None

    def __bool__(self):
        return self.ok


def _fmt_q_power(k: int) -> str:
    if k == 0:
        return ""
    return "q*" if k == 1 else "q^%d*" % k


def _fmt_eps_power(t: int) -> str:
    if t == 0:
        return ""
    return "eps*" if t == 1 else "eps^%d*" % t


def _semisimple_factors(params: HeckeParams):
    """Yield (label, value) for every factor of the semisimplicity product."""
    q, n, p, d = params.q, params.n, params.p, params.d
    one = params.one()
    for i in range(1, n + 1):
        val = sum((q ** e for e in range(i)), params.scalar(0))
        yield "q-integer [%d]_q = 1 + q + ... + q^%d" % (i, i - 1), val
    for k in range(-n + 1, n):
        for i in range(d):
            for j in range(i + 1, d):
                for t in range(p):
                    val = params.Q[i] - eps_power(params, t) * q ** k * params.Q[j]
                    label = "Q_%d - %s%sQ_%d" % (i + 1, _fmt_eps_power(t), _fmt_q_power(k), j + 1)
                    yield label, val
        for i in range(d):
            for t in range(1, p):
                val = params.Q[i] * (one - eps_power(params, t) * q ** k)
                label = "Q_%d*(1 - %s%s1)" % (i + 1, _fmt_eps_power(t), _fmt_q_power(k))
                yield label.replace("*1)", ")"), val


def check_semisimple(params: HeckeParams) -> SemisimpleCheck:
    """Evaluate the full semisimplicity product; report the first zero factor.

    The guards q != 0, q != 1 and Q_c != 0 are checked first; q = 1 is
    reported against the q-integer family since it degenerates the Hecke
    quadratic relation.
    """
    if params.q == 0:
        return SemisimpleCheck(False, "q-integer factor: q = 0 (q must be invertible)")
    if params.q == 1:
        return SemisimpleCheck(False, "q-integer factor: q = 1 (q must differ from 1)")
    for i, Qc in enumerate(params.Q):
        if not Qc:
            return SemisimpleCheck(False, "Q_%d = 0" % (i + 1))
    for label, val in _semisimple_factors(params):
        if not val:
            return SemisimpleCheck(False, label)
    return SemisimpleCheck(True, None)


def _odd_primes():
    k = 3
    while True:
        if all(k % m for m in range(3, int(k ** 0.5) + 1, 2)):
            yield k
        k += 2


def default_params(r: int, p: int, n: int, max_tries: int = 64) -> HeckeParams:
    """q = 2 and Q_c the c-th odd prime, shifted along the primes until semisimple."""
    if r % p:
        raise ValueError(f"p={p} does not divide r={r}")
    d = r // p
    primes = []
    gen = _odd_primes()
    while len(primes) < d + max_tries:
        primes.append(next(gen))
    for start in range(max_tries):
        params = make_params(r, p, n, 2, primes[start:start + d])
        if check_semisimple(params):
            return params
    raise SemisimplicityError(f"no semisimple default found for (r,p,n)=({r},{p},{n})")
