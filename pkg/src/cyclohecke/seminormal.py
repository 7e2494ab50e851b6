"""Seminormal form of the semisimple cyclotomic Hecke algebra H_{r,n}.

The algebra is realised as the product of End(S(lambda)) over all
r-multipartitions of n.  Modules are right modules written as row vectors,
so the matrix of a product h1*h2 is the matrix of h1 times that of h2, and
the seminormal basis element f_{st} is gamma_s times the matrix unit E_{st}.

Everything is exact; the word-basis oracle re-expands a block matrix in the
basis L_1^{a_1}...L_n^{a_n} T_w to apply the automorphism sigma
(T_0 -> eps*T_0, T_i -> T_i) without appealing to the seminormal formulas.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct
from typing import Iterable, Sequence

from .exactfield import CycloRational, HeckeParams, eps_power
from .linalg import BlockMatrix, RationalSolver, transpose, zeros
from .tableaux import (
    Multipartition,
    Permutation,
    StandardTableau,
    dominance_leq,
    enumerate_multipartitions,
    enumerate_standard_tableaux,
    initial_tableaux,
    m_k,
    shift,
    tableau_word,
)

__all__ = [
    "DeskBoundExceeded",
    "CorruptedParameters",
    "SeminormalForm",
    "SpechtModel",
    "residue",
    "ab_coefficients",
    "q_factorial",
    "q_integer",
    "gamma_table",
    "specht_model",
    "jm_idempotent",
    "f_element",
    "phi_element",
    "word_basis_expand",
    "sigma_apply",
    "desk_bound",
    "MUTATIONS",
]

DESK_BOUND_ENV = "CYCLOHECKE_DESK_BOUND"
DEFAULT_DESK_BOUND = 1000

# fault injections understood by the mutation harness
MUTATIONS = ("gamma_scale", "eps_power", "wrong_mk", "drop_A_factor", "h_parity")


class DeskBoundExceeded(ValueError):
    """The word-basis oracle would exceed the configured size bound."""


class CorruptedParameters(ArithmeticError):
    """Residues collided although the parameters were declared semisimple."""


def desk_bound() -> int:
    raw = os.environ.get(DESK_BOUND_ENV)
    if raw is None:
        return DEFAULT_DESK_BOUND
    return int(raw)


def q_integer(q: CycloRational, m: int) -> CycloRational:
    return sum((q ** e for e in range(m)), q * 0)


def q_factorial(q: CycloRational, m: int) -> CycloRational:
    """[m]_q! with [0]_q! = 1."""
    out = q * 0 + 1
    for k in range(1, m + 1):
        out = out * q_integer(q, k)
    return out


def _b_quotient(q, a, b):
    """(q a - b)(a - q b)/(a - b)^2, symmetric in a and b."""
    return (q * a - b) * (a - q * b) / ((a - b) * (a - b))


@dataclass
class SpechtModel:
    shape: Multipartition
    tableaux: tuple[StandardTableau, ...]
    generators: list  # T_0 .. T_{n-1} as square matrices


class SeminormalForm:
    """All seminormal data of H_{r,n} at one parameter point."""

    def __init__(self, params: HeckeParams, mutation: str | None = None):
        if mutation is not None and mutation not in MUTATIONS:
            raise ValueError(f"unknown mutation {mutation!r}")
        self.params = params
        self.mutation = mutation
        self.p = params.p
        self.n = params.n
        self.shapes = enumerate_multipartitions(params.r, params.n)
        self.std = {lam: enumerate_standard_tableaux(lam) for lam in self.shapes}
        self.index = {t: i for lam in self.shapes for i, t in enumerate(self.std[lam])}
        self.dims = {lam: len(self.std[lam]) for lam in self.shapes}
        self._res: dict = {}
        self._gamma: dict = {}
        self._gens: list | None = None
        self._jm: list | None = None
        self._word_basis = None
        self._mutated_tableau = None
        if mutation == "gamma_scale":
            # the last tableau of the first shape with more than one
            for lam in self.shapes:
                if self.dims[lam] > 1:
                    self._mutated_tableau = self.std[lam][-1]
                    break

    # -- scalars ---------------------------------------------------------
    def zero(self) -> CycloRational:
        return self.params.scalar(0)

    def one(self) -> CycloRational:
        return self.params.one()

    def residue(self, t: StandardTableau, k: int) -> CycloRational:
        key = (t, k)
        val = self._res.get(key)
        if val is None:
            d = self.params.d
            a, b, c = t.cell(k)
            block = (c - 1) // d + 1
            c0 = (c - 1) % d
            val = eps_power(self.params, block) * self.params.q ** (b - a) * self.params.Q[c0]
            self._res[key] = val
        return val

    def residues(self, t: StandardTableau) -> tuple:
        return tuple(self.residue(t, k) for k in range(1, self.n + 1))

    def a_coeff(self, s: StandardTableau, i: int) -> CycloRational:
        q = self.params.q
        hi, lo = self.residue(s, i + 1), self.residue(s, i)
        if hi == lo:
            raise CorruptedParameters(f"equal residues of {i}, {i + 1} in {s}")
        return (q - 1) * hi / (hi - lo)

    def ab_coefficients(self, s: StandardTableau, i: int):
        """(A_i(s), B_i(s)) or (A_i(s), 'row'/'column') when s(i,i+1) is not standard."""
        t = s.swap(i)
        if not t.is_standard():
            a, _, c = s.cell(i)
            a2, _, c2 = s.cell(i + 1)
            kind = "row" if (a == a2 and c == c2) else "column"
            return self.a_coeff(s, i), kind
        if dominance_leq(t, s):
            return self.a_coeff(s, i), self.one()
        b = _b_quotient(self.params.q, self.residue(s, i), self.residue(t, i))
        return self.a_coeff(s, i), b

    # -- gamma coefficients ---------------------------------------------
    def anchor(self, lam: Multipartition) -> CycloRational:
        """gamma of t^lambda from the closed product formula."""
        P = self.params
        q, d, p = P.q, P.d, P.p
        out = self.one()
        for comp in lam.components:
            for row in comp:
                out = out * q_factorial(q, row)
        for i in range(d):
            for s in range(1, p + 1):
                comp = lam.components[i + (s - 1) * d]
                if not comp:
                    continue
                for j in range(i, d):
                    for t in range(1, p + 1):
                        if i == j and s >= t:
                            continue
                        base = eps_power(P, s) * P.Q[i]
                        rhs = eps_power(P, t) * P.Q[j]
                        for a, length in enumerate(comp, start=1):
                            for b in range(1, length + 1):
                                out = out * (q ** (b - a) * base - rhs)
        return out

    def gamma(self, t: StandardTableau) -> CycloRational:
        val = self._gamma.get(t)
        if val is None:
            _, word = tableau_word(t)
            cur, _ = initial_tableaux(t.shape)
            val = self.anchor(t.shape)
            for i in word:
                nxt = cur.swap(i)
                val = val * _b_quotient(self.params.q, self.residue(cur, i), self.residue(nxt, i))
                cur = nxt
            assert cur == t
            if self._mutated_tableau is not None and t == self._mutated_tableau:
                val = val * 2
            self._gamma[t] = val
        return val

    def gamma_table(self, shapes: Iterable[Multipartition] | None = None) -> dict:
        shapes = self.shapes if shapes is None else shapes
        return {t: self.gamma(t) for lam in shapes for t in self.std[lam]}

    def m(self, t: StandardTableau, k: int) -> StandardTableau:
        """m_k(t); the ``wrong_mk`` mutation cuts one block late."""
        if self.mutation == "wrong_mk" and k % self.p:
            return m_k(t, k + 1, self.p)
        return m_k(t, k, self.p)

    def shift(self, t, z: int):
        return shift(t, z, self.p)

    # -- matrices ---------------------------------------------------------
    def specht_model(self, lam: Multipartition) -> SpechtModel:
        tabs = self.std[lam]
        dim = len(tabs)
        p = self.p
        gens = []
        t0 = zeros(p, dim)
        for i, s in enumerate(tabs):
            t0[i][i] = self.residue(s, 1)
        gens.append(t0)
        for i in range(1, self.n):
            m = zeros(p, dim)
            for a, s in enumerate(tabs):
                t = s.swap(i)
                if not t.is_standard():
                    _, kind = self.ab_coefficients(s, i)
                    m[a][a] = self.params.q if kind == "row" else -self.one()
                    continue
                b = self.index[t]
                m[a][a] = self.a_coeff(s, i)
                if dominance_leq(t, s):
                    m[a][b] = self.one()
                else:
                    m[a][b] = self.gamma(s) / self.gamma(t)
            gens.append(m)
        return SpechtModel(lam, tabs, gens)

    def generators(self) -> list[BlockMatrix]:
        """Block matrices of T_0, ..., T_{n-1}."""
        if self._gens is None:
            models = {lam: self.specht_model(lam) for lam in self.shapes}
            self._gens = [
                BlockMatrix(self.shapes, {lam: models[lam].generators[i] for lam in self.shapes}, self.p)
                for i in range(self.n)
            ]
        return self._gens

    def identity(self) -> BlockMatrix:
        return BlockMatrix.identity(self.shapes, self.dims, self.p)

    def zero_element(self) -> BlockMatrix:
        return BlockMatrix.zero(self.shapes, self.dims, self.p)

    def scalar_element(self, c) -> BlockMatrix:
        return self.identity() * c

    def jm_elements(self) -> list[BlockMatrix]:
        """L_1 = T_0 and L_{k+1} = q^{-1} T_k L_k T_k, as products of generators."""
        if self._jm is None:
            T = self.generators()
            qinv = self.params.q.inverse()
            L = [T[0]]
            for k in range(1, self.n):
                L.append((T[k] @ L[-1] @ T[k]) * qinv)
            self._jm = L
        return self._jm

    def residue_sets(self) -> list[list[CycloRational]]:
        out = []
        for k in range(1, self.n + 1):
            seen = []
            for lam in self.shapes:
                for t in self.std[lam]:
                    v = self.residue(t, k)
                    if v not in seen:
                        seen.append(v)
            out.append(seen)
        return out

    def jm_idempotent(self, t: StandardTableau) -> BlockMatrix:
        """F_t as the product over k of (L_k - c)/(res_t(k) - c)."""
        L = self.jm_elements()
        out = self.identity()
        ident = self.identity()
        for k, rset in enumerate(self.residue_sets(), start=1):
            rt = self.residue(t, k)
            for c in rset:
                if c == rt:
                    continue
                out = out @ ((L[k - 1] - ident * c) * (rt - c).inverse())
        return out

    def matrix_unit(self, s: StandardTableau, t: StandardTableau, coeff=None) -> BlockMatrix:
        if s.shape != t.shape:
            raise ValueError("s and t must have the same shape")
        x = self.zero_element()
        x.blocks[s.shape][self.index[s]][self.index[t]] = self.one() if coeff is None else coeff
        return x

    def f_element(self, s: StandardTableau, t: StandardTableau) -> BlockMatrix:
        return self.matrix_unit(s, t, self.gamma(s))

    def combination(self, terms: dict) -> BlockMatrix:
        """Block matrix of sum c * f_{uv} over a dict {(u, v): c}."""
        x = self.zero_element()
        for (u, v), c in terms.items():
            if not c:
                continue
            blk = x.blocks[u.shape]
            i, j = self.index[u], self.index[v]
            blk[i][j] = blk[i][j] + c * self.gamma(u)
        return x

    def chain(self, t: StandardTableau) -> list[tuple[int, StandardTableau]]:
        """[(i_j, t_{j-1})]: the letters of d(t) with the tableau they act on."""
        _, word = tableau_word(t)
        cur, _ = initial_tableaux(t.shape)
        out = []
        for i in word:
            out.append((i, cur))
            cur = cur.swap(i)
        return out

    def phi_element(self, t: StandardTableau) -> BlockMatrix:
        """Phi_t = prod_j (T_{i_j} - A_{i_j}(t_{j-1})) along the canonical word."""
        T = self.generators()
        out = self.identity()
        ident = self.identity()
        for i, cur in self.chain(t):
            out = out @ (T[i] - ident * self.a_coeff(cur, i))
        return out

    def phi_star(self, t: StandardTableau) -> BlockMatrix:
        """Image of Phi_t under the anti-involution fixing every T_i: the
        factors multiplied in reverse order."""
        T = self.generators()
        out = self.identity()
        ident = self.identity()
        for i, cur in reversed(self.chain(t)):
            out = out @ (T[i] - ident * self.a_coeff(cur, i))
        return out

    def star(self, x: BlockMatrix) -> BlockMatrix:
        """The anti-involution through the gamma Gram matrix: G x^T G^{-1}."""
        def fn(lam, m):
            tabs = self.std[lam]
            g = [self.gamma(t) for t in tabs]
            mt = transpose(m)
            return [[g[i] * mt[i][j] / g[j] for j in range(len(tabs))] for i in range(len(tabs))]
        return x.map_blocks(fn)

    # -- word basis oracle -------------------------------------------------
    def word_basis(self) -> "WordBasis":
        if self._word_basis is None:
            self._word_basis = WordBasis(self)
        return self._word_basis

    def word_basis_expand(self, x: BlockMatrix) -> list:
        return self.word_basis().expand(x)

    def sigma_apply(self, x: BlockMatrix, power: int = 1) -> BlockMatrix:
        return self.word_basis().sigma(x, power)


class WordBasis:
    """The basis {L_1^{a_1}...L_n^{a_n} T_w : 0 <= a_i < r, w in Sym_n}."""

    def __init__(self, sf: SeminormalForm, backend: str = "auto"):
        P = sf.params
        size = P.r ** P.n * _factorial(P.n)
        bound = desk_bound()
        if size > bound:
            raise DeskBoundExceeded(
                f"word basis of size r^n n! = {size} exceeds the desk bound {bound}"
                f" (set {DESK_BOUND_ENV} to raise it)"
            )
        self.sf = sf
        self.size = size
        n = P.n
        L = sf.jm_elements()
        T = sf.generators()
        lpow = []
        for k in range(n):
            pows = [sf.identity()]
            for _ in range(1, P.r):
                pows.append(pows[-1] @ L[k])
            lpow.append(pows)
        # T_w by breadth-first extension along reduced words
        tw = {Permutation.identity(n): sf.identity()}
        frontier = [Permutation.identity(n)]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(1, n):
                    ws = w * Permutation.simple(i, n)
                    if ws in tw or ws.length() != w.length() + 1:
                        continue
                    tw[ws] = tw[w] @ T[i]
                    nxt.append(ws)
            frontier = nxt
        perms = sorted(tw, key=lambda w: (w.length(), w.images))
        self.labels = []
        columns = []
        for a in iproduct(range(P.r), repeat=n):
            lm = sf.identity()
            for k, e in enumerate(a):
                if e:
                    lm = lm @ lpow[k][e]
            for w in perms:
                self.labels.append((a, w))
                columns.append((lm @ tw[w]).flatten())
        self.columns = columns
        rows = [list(r) for r in zip(*columns)]
        self.solver = RationalSolver(rows, sf.p, backend)

    def expand(self, x: BlockMatrix) -> list:
        """Coefficients of x in the word basis, in ``labels`` order."""
        return self.solver.solve(x.flatten())

    def assemble(self, coeffs: Sequence) -> BlockMatrix:
        sf = self.sf
        vec = self.solver.apply(list(coeffs))
        return BlockMatrix.unflatten(sf.shapes, sf.dims, vec, sf.p)

    def sigma(self, x: BlockMatrix, power: int = 1) -> BlockMatrix:
        coeffs = self.expand(x)
        P = self.sf.params
        scaled = [c * eps_power(P, power * sum(a)) for c, (a, _) in zip(coeffs, self.labels)]
        return self.assemble(scaled)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# ---------------------------------------------------------------------------
# functional surface; each call reuses one cached SeminormalForm per params


@lru_cache(maxsize=32)
def _form(params: HeckeParams) -> SeminormalForm:
    return SeminormalForm(params)


def residue(params: HeckeParams, t: StandardTableau, k: int) -> CycloRational:
    return _form(params).residue(t, k)


def ab_coefficients(params: HeckeParams, s: StandardTableau, i: int):
    return _form(params).ab_coefficients(s, i)


def gamma_table(params: HeckeParams, shapes: Iterable[Multipartition] | None = None) -> dict:
    return _form(params).gamma_table(shapes)


def specht_model(params: HeckeParams, shape: Multipartition) -> SpechtModel:
    return _form(params).specht_model(shape)


def jm_idempotent(params: HeckeParams, t: StandardTableau) -> BlockMatrix:
    return _form(params).jm_idempotent(t)


def f_element(params: HeckeParams, s: StandardTableau, t: StandardTableau) -> BlockMatrix:
    return _form(params).f_element(s, t)


def phi_element(params: HeckeParams, t: StandardTableau) -> BlockMatrix:
    return _form(params).phi_element(t)


def word_basis_expand(params: HeckeParams, x: BlockMatrix) -> list:
    wb = _form(params).word_basis()
    return [(lab, c) for lab, c in zip(wb.labels, wb.expand(x)) if c]


def sigma_apply(params: HeckeParams, x: BlockMatrix, power: int = 1) -> BlockMatrix:
    return _form(params).sigma_apply(x, power)
