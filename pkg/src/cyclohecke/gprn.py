"""Coefficient families and bases attached to the sigma-fixed subalgebra.

Everything is expressed through the gamma table of a SeminormalForm:
the quotients r and R, the square roots h, the A coefficients, the basis
f^[k]_{st} of H_{r,p,n}, its central idempotents, and the twisted centres
Z(H_{r,n})^{(k)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactfield import CycloRational, HeckeParams, eps_power
from .linalg import BlockMatrix
from .seminormal import SeminormalForm
from .tableaux import (
    Multipartition,
    StandardTableau,
    block_sizes_prefix,
    entry_one_condition,
    initial_tableaux,
    orbit_invariants,
    sigma_class_representatives,
)

__all__ = [
    "EntryOneViolation",
    "GrpnLayer",
    "GrpnElement",
    "GrpnBasis",
    "r_coeff",
    "R_coeff",
    "h_lambda",
    "h_lambda_l1_l2",
    "h_t",
    "A_ij",
    "f_k",
    "grpn_basis",
    "grpn_central_idempotents",
    "twisted_center_basis",
]


class EntryOneViolation(ValueError):
    """The tableau does not carry 1 in its first o_lambda blocks."""


@dataclass
class GrpnElement:
    shape: Multipartition
    s: StandardTableau
    t: StandardTableau
    k: int
    terms: dict  # {(u, v): coefficient of f_{uv}}
    matrix: BlockMatrix


@dataclass
class GrpnBasis:
    params: HeckeParams
    elements: list

    def __len__(self):
        return len(self.elements)


class GrpnLayer:
    def __init__(self, sf: SeminormalForm):
        self.sf = sf
        self.p = sf.p
        self.params = sf.params
        self.reps = sigma_class_representatives(sf.params.r, sf.p, sf.n)
        self._h_lam: dict = {}

    # -- helpers ----------------------------------------------------------
    def orbit(self, lam: Multipartition) -> tuple[int, int]:
        return orbit_invariants(lam, self.p)

    def g(self, t: StandardTableau) -> CycloRational:
        return self.sf.gamma(t)

    def sh(self, t, z: int):
        return self.sf.shift(t, z)

    def m(self, t: StandardTableau, k: int) -> StandardTableau:
        return self.sf.m(t, k)

    def top(self, lam: Multipartition) -> StandardTableau:
        return initial_tableaux(lam)[0]

    # -- r and R ----------------------------------------------------------
    def r(self, t: StandardTableau, k: int) -> CycloRational:
        return self.g(t) / self.g(self.m(t, k))

    def R(self, s: StandardTableau, t: StandardTableau, k: int) -> CycloRational:
        tl = self.top(s.shape)
        return self.g(tl) / self.g(self.sh(tl, k)) * self.r(s, k) * self.r(t, k)

    # -- square roots -----------------------------------------------------
    def h_lambda(self, lam: Multipartition) -> CycloRational:
        """The explicit square root of gamma_{t^lam<o>}/gamma_{t^lam}."""
        val = self._h_lam.get(lam)
        if val is not None:
            return val
        o, plam = self.orbit(lam)
        one = self.sf.one()
        if plam == 1:
            self._h_lam[lam] = one
            return one
        q = self.params.q
        a = block_sizes_prefix(lam, o, self.p)
        tl = self.top(lam)
        res = [self.sf.residue(tl, i) for i in range(1, a + 1)]
        even = plam % 2 == 0
        if self.sf.mutation == "h_parity":
            even = not even
        top_k = plam // 2 - 1 if even else (plam - 1) // 2
        out = one
        for k in range(1, top_k + 1):
            e = eps_power(self.params, k * o)
            for ri in res:
                for rj in res:
                    out = out * (q * rj - e * ri) * (rj - q * e * ri) / ((rj - e * ri) ** 2)
        if even:
            out = out * (q + 1) ** a / CycloRational.rational(self.p, 2 ** a)
            for i in range(a):
                for j in range(i):
                    ri, rj = res[i], res[j]
                    out = out * (q * rj + ri) * (rj + q * ri) / ((rj + ri) ** 2)
        self._h_lam[lam] = out
        return out

    def _mo_ratio(self, lam: Multipartition, c: int) -> CycloRational:
        """gamma_{m_o(t^lam<c o>)}/gamma_{t^lam<c o>}."""
        o, _ = self.orbit(lam)
        u = self.sh(self.top(lam), c * o)
        return self.g(self.m(u, o)) / self.g(u)

    def h_lambda_l1_l2(self, lam: Multipartition, l1: int, l2: int) -> CycloRational:
        """Closed product form, valid for all non-negative l1, l2."""
        out = self.h_lambda(lam) ** l2
        for k in range(l2):
            out = out * self._mo_ratio(lam, l1 + k)
        return out

    def h_lambda_recursive(self, lam: Multipartition, l1: int, l2: int) -> CycloRational:
        """The same numbers from the step-by-step recursion in l2."""
        out = self.sf.one()
        for step in range(1, l2 + 1):
            out = out * self.h_lambda(lam) * self._mo_ratio(lam, l1 + step - 1)
        return out

    def _require_entry_one(self, t: StandardTableau):
        if not entry_one_condition(t, self.p):
            o, _ = self.orbit(t.shape)
            raise EntryOneViolation(f"entry 1 of {t.label()} is not in blocks 1..{o}")

    def h_t(self, t: StandardTableau, x: int, l: int) -> CycloRational:
        """h_{t,x}^{<l>} for t with 1 in its first o blocks (x = 0 gives h_t^{<l>})."""
        self._require_entry_one(t)
        o, _ = self.orbit(t.shape)
        base = self.h_lambda_l1_l2(t.shape, 0, l) * self.g(self.m(t, l * o)) / self.g(t)
        if x % self.p == 0:
            return base
        tl = self.sh(t, l * o)
        return base * self.g(t) * self.g(self.m(tl, x)) / (self.g(self.m(t, x)) * self.g(tl))

    def entry_one_preimage(self, s: StandardTableau) -> tuple[StandardTableau, int]:
        """(s0, l1) with s = s0<l1 o> and s0 meeting the entry-1 condition."""
        o, plam = self.orbit(s.shape)
        for l1 in range(plam):
            s0 = self.sh(s, -l1 * o)
            if entry_one_condition(s0, self.p):
                return s0, l1
        raise AssertionError("unreachable: some shift brings 1 into the first blocks")

    def h_shifted(self, s: StandardTableau, l: int) -> CycloRational:
        """h_s^{<l>} for an arbitrary s of a class representative shape."""
        s0, l1 = self.entry_one_preimage(s)
        o, _ = self.orbit(s.shape)
        return self.h_t(s0, l1 * o, l)

    # -- A coefficients and the basis ---------------------------------------
    def A(self, s: StandardTableau, t: StandardTableau, i: int, j: int) -> CycloRational:
        lam = s.shape
        o, _ = self.orbit(lam)
        tl = self.top(lam)
        si = self.sh(s, i * o)
        val = (self.g(tl) / self.g(self.sh(tl, j))) * (self.g(si) / self.g(self.m(si, j))) * (
            self.g(t) / self.g(self.m(t, j))
        )
        if self.sf.mutation == "drop_A_factor":
            return val
        return val / self.h_shifted(s, i)

    def f_terms(self, s: StandardTableau, t: StandardTableau, k: int) -> dict:
        """f^[k]_{st} as {(u, v): c} meaning sum c * f_{uv}."""
        lam = s.shape
        o, plam = self.orbit(lam)
        if self.sf.mutation == "eps_power":
            root = eps_power(self.params, 1)
        else:
            root = eps_power(self.params, o)
        terms = {}
        for i in range(plam):
            phase = root ** (k * i)
            for j in range(self.p):
                key = (self.sh(s, i * o + j), self.sh(t, j))
                terms[key] = terms.get(key, self.sf.zero()) + phase * self.A(s, t, i, j)
        return terms

    def f_matrix(self, s: StandardTableau, t: StandardTableau, k: int) -> BlockMatrix:
        return self.sf.combination(self.f_terms(s, t, k))

    def multiply_terms(self, a: dict, b: dict) -> dict:
        """Product of two f-combinations by f_{uv} f_{st} = delta_{vs} gamma_s f_{ut}."""
        by_left: dict = {}
        for (u, v), c in b.items():
            by_left.setdefault(u, []).append((v, c))
        out: dict = {}
        for (u, v), c in a.items():
            for w, d in by_left.get(v, ()):
                key = (u, w)
                out[key] = out.get(key, self.sf.zero()) + c * d * self.g(v)
        return {key: c for key, c in out.items() if c}

    def basis_labels(self) -> list[tuple[Multipartition, StandardTableau, StandardTableau, int]]:
        out = []
        for lam in self.reps:
            _, plam = self.orbit(lam)
            good = [t for t in self.sf.std[lam] if entry_one_condition(t, self.p)]
            for k in range(plam):
                for s in good:
                    for t in good:
                        out.append((lam, s, t, k))
        return out

    def basis(self) -> GrpnBasis:
        elems = []
        for lam, s, t, k in self.basis_labels():
            terms = self.f_terms(s, t, k)
            elems.append(GrpnElement(lam, s, t, k, terms, self.sf.combination(terms)))
        return GrpnBasis(self.params, elems)

    def central_idempotent_terms(self, lam: Multipartition, k: int) -> dict:
        _, plam = self.orbit(lam)
        out: dict = {}
        for t in self.sf.std[lam]:
            if not entry_one_condition(t, self.p):
                continue
            scale = (self.g(t) * plam).inverse()
            for key, c in self.f_terms(t, t, k).items():
                out[key] = out.get(key, self.sf.zero()) + c * scale
        return out

    def central_idempotents(self) -> list[tuple[Multipartition, int, BlockMatrix]]:
        out = []
        for lam in self.reps:
            _, plam = self.orbit(lam)
            for k in range(plam):
                out.append((lam, k, self.sf.combination(self.central_idempotent_terms(lam, k))))
        return out

    def twisted_center(self, k: int) -> list[tuple[Multipartition, BlockMatrix]]:
        """F_{lam,k} for every shape fixed by the shift <k>."""
        out = []
        for lam in self.sf.shapes:
            if self.sh(lam, k) != lam:
                continue
            terms = {}
            for t in self.sf.std[lam]:
                terms[(self.sh(t, k), t)] = self.g(self.m(t, k)).inverse()
            out.append((lam, self.sf.combination(terms)))
        return out


# ---------------------------------------------------------------------------
# functional surface


@lru_cache(maxsize=32)
def _layer(params: HeckeParams) -> GrpnLayer:
    return GrpnLayer(SeminormalForm(params))


def r_coeff(params: HeckeParams, t: StandardTableau, k: int) -> CycloRational:
    return _layer(params).r(t, k)


def R_coeff(params: HeckeParams, s: StandardTableau, t: StandardTableau, k: int) -> CycloRational:
    return _layer(params).R(s, t, k)


def h_lambda(params: HeckeParams, lam: Multipartition) -> CycloRational:
    return _layer(params).h_lambda(lam)


def h_lambda_l1_l2(params: HeckeParams, lam: Multipartition, l1: int, l2: int) -> CycloRational:
    return _layer(params).h_lambda_l1_l2(lam, l1, l2)


def h_t(params: HeckeParams, t: StandardTableau, x: int, l: int) -> CycloRational:
    return _layer(params).h_t(t, x, l)


def A_ij(params: HeckeParams, s: StandardTableau, t: StandardTableau, i: int, j: int) -> CycloRational:
    return _layer(params).A(s, t, i, j)


def f_k(params: HeckeParams, s: StandardTableau, t: StandardTableau, k: int) -> BlockMatrix:
    return _layer(params).f_matrix(s, t, k)


def grpn_basis(params: HeckeParams) -> GrpnBasis:
    layer = _layer(params)
    basis = layer.basis()
    P = params
    expected = P.r ** P.n * _fact(P.n) // P.p
    if len(basis) != expected:
        raise AssertionError(f"basis has {len(basis)} elements, expected {expected}")
    return basis


def grpn_central_idempotents(params: HeckeParams) -> list[BlockMatrix]:
    return [m for _, _, m in _layer(params).central_idempotents()]


def twisted_center_basis(params: HeckeParams, k: int) -> list[BlockMatrix]:
    return [m for _, m in _layer(params).twisted_center(k)]


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out
