"""Property suites over one parameter point, plus brute-force oracles.

Each check is a function of a shared ``Context`` and reports through a
``Tally``: the first failing case aborts the check and is kept, fully
serialised, as its counterexample.  Checks never mutate the context
beyond filling its caches, so they may run in any order or in separate
processes.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice
from typing import Callable, Iterable

from .exactfield import CycloRational, HeckeParams, check_semisimple, default_params, eps_power, make_params
from .exactfield import SemisimplicityError
from .gprn import EntryOneViolation, GrpnLayer
from .linalg import BlockMatrix, determinant, field_rank, inverse, matmul, msub, mscale, zeros
from .seminormal import MUTATIONS, DeskBoundExceeded, SeminormalForm, desk_bound
from .tableaux import (
    Multipartition,
    StandardTableau,
    dominance_leq,
    entry_one_condition,
    enumerate_multipartitions,
    enumerate_standard_tableaux,
    initial_tableaux,
    orbit_invariants,
    sigma_class_representatives,
)

__all__ = [
    "CHECKS",
    "CheckResult",
    "VerificationReport",
    "run_suite",
    "twisted_centralizer_dim",
    "brute_force_center_dims",
    "dim_audit",
    "mutation_sweep",
    "SAMPLE_CAP",
]

SCHEMA_VERSION = 1
SAMPLE_CAP = 200  # tuples per check once n >= 4
ROUND_TRIP_SAMPLES = 50
SIGMA_ORDER_SAMPLES = 20


class _Failed(Exception):
    def __init__(self, what: str, data: dict):
        super().__init__(what)
        self.what = what
        self.data = data


def _ser(v):
    if isinstance(v, (StandardTableau, Multipartition)):
        return v.label()
    if isinstance(v, CycloRational):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _ser(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_ser(x) for x in v]
    return v


class Tally:
    def __init__(self):
        self.cases = 0
        self.notes: dict = {}

    def expect(self, cond: bool, what: str, **data):
        self.cases += 1
        if not cond:
            raise _Failed(what, {k: _ser(v) for k, v in data.items()})

    def equal(self, lhs, rhs, what: str, **data):
        """Compare two values; scalars are echoed into the counterexample."""
        self.cases += 1
        if lhs != rhs:
            if isinstance(lhs, CycloRational) or isinstance(rhs, CycloRational):
                data = dict(data, lhs=lhs, rhs=rhs)
            raise _Failed(what, {k: _ser(v) for k, v in data.items()})


# ---------------------------------------------------------------------------
# shared state


class Context:
    def __init__(self, params: HeckeParams, mutation: str | None = None):
        self.params = params
        self.p = params.p
        self.n = params.n
        self.sf = SeminormalForm(params, mutation)
        self.layer = GrpnLayer(self.sf)
        self.sampled = self.n >= 4
        self._basis = None
        self._T0inv = None

    def take(self, it: Iterable) -> list:
        return list(islice(it, SAMPLE_CAP)) if self.sampled else list(it)

    def tableaux(self) -> list:
        return [t for lam in self.sf.shapes for t in self.sf.std[lam]]

    def pairs(self):
        for lam in self.sf.shapes:
            for s in self.sf.std[lam]:
                for t in self.sf.std[lam]:
                    yield s, t

    def entry_one(self, lam) -> list:
        return [t for t in self.sf.std[lam] if entry_one_condition(t, self.p)]

    def basis(self):
        if self._basis is None:
            self._basis = self.layer.basis()
        return self._basis

    def t0_inverse(self) -> BlockMatrix:
        if self._T0inv is None:
            self._T0inv = self.sf.generators()[0].map_blocks(lambda _, m: inverse(m) if m else m)
        return self._T0inv

    def subalgebra_generators(self) -> list[tuple[str, BlockMatrix]]:
        """T_0^p, T_0^{-1} T_1 T_0 and T_1..T_{n-1}."""
        T = self.sf.generators()
        out = [("T0^p", T[0].power(self.p, self.sf.dims))]
        if self.n >= 2:
            out.append(("T0^-1 T1 T0", self.t0_inverse() @ T[1] @ T[0]))
        out.extend(("T%d" % i, T[i]) for i in range(1, self.n))
        return out

    def sigma(self, x: BlockMatrix, power: int = 1) -> BlockMatrix:
        return self.sf.sigma_apply(x, power)


# ---------------------------------------------------------------------------
# seminormal structure


def check_tiact(ctx: Context, tl: Tally):
    sf, P = ctx.sf, ctx.params
    q, p, n = P.q, ctx.p, ctx.n
    for lam in sf.shapes:
        model = sf.specht_model(lam)
        T = model.generators
        d = sf.dims[lam]
        one = [[sf.one() if i == j else sf.zero() for j in range(d)] for i in range(d)]
        zero = zeros(p, d)

        def poly(m, roots):
            out = one
            for c in roots:
                out = matmul(out, msub(m, mscale(c, one)))
            return out

        for a, s in enumerate(model.tableaux):
            tl.equal(T[0][a][a], sf.residue(s, 1), "T0 diagonal entry is res(1)", shape=lam, tableau=s)
            for b in range(d):
                if a != b:
                    tl.expect(not T[0][a][b], "T0 is diagonal", shape=lam, row=a, col=b)
        T0p = T[0]
        for _ in range(p - 1):
            T0p = matmul(T0p, T[0])
        tl.expect(poly(T0p, [Qc ** p for Qc in P.Q]) == zero, "prod_c (T0^p - Q_c^p) = 0", shape=lam)
        split = [eps_power(P, e) * Qc for e in range(1, p + 1) for Qc in P.Q]
        tl.expect(poly(T[0], split) == zero, "prod (T0 - eps^t Q_c) = 0", shape=lam)
        if n >= 2:
            lhs = matmul(matmul(T[0], T[1]), matmul(T[0], T[1]))
            rhs = matmul(matmul(T[1], T[0]), matmul(T[1], T[0]))
            tl.expect(lhs == rhs, "T0 T1 T0 T1 = T1 T0 T1 T0", shape=lam)
        for i in range(1, n):
            quad = matmul(msub(T[i], mscale(q, one)), msub(T[i], mscale(-sf.one(), one)))
            tl.expect(quad == zero, "(Ti - q)(Ti + 1) = 0", shape=lam, i=i)
            if i >= 2:
                tl.expect(matmul(T[0], T[i]) == matmul(T[i], T[0]), "T0 Ti = Ti T0", shape=lam, i=i)
            for j in range(i + 2, n):
                tl.expect(matmul(T[i], T[j]) == matmul(T[j], T[i]), "Ti Tj = Tj Ti", shape=lam, i=i, j=j)
            if i + 1 < n:
                a1 = matmul(matmul(T[i], T[i + 1]), T[i])
                a2 = matmul(matmul(T[i + 1], T[i]), T[i + 1])
                tl.expect(a1 == a2, "braid relation", shape=lam, i=i)
    # the Jucys-Murphy elements act diagonally by residues
    L = sf.jm_elements()
    for k, Lk in enumerate(L, start=1):
        for lam in sf.shapes:
            blk = Lk.blocks[lam]
            for a, s in enumerate(sf.std[lam]):
                tl.equal(blk[a][a], sf.residue(s, k), "L_k eigenvalue is res(k)", tableau=s, k=k)
                for b in range(sf.dims[lam]):
                    if a != b:
                        tl.expect(not blk[a][b], "L_k is diagonal", tableau=s, k=k)


def check_dist(ctx: Context, tl: Tally):
    seen: dict = {}
    for t in ctx.tableaux():
        key = ctx.sf.residues(t)
        tl.expect(key not in seen, "distinct tableaux share all residues", s=seen.get(key), t=t)
        seen[key] = t


def _block_f(sf, s, t):
    d = sf.dims[s.shape]
    m = zeros(sf.p, d)
    m[sf.index[s]][sf.index[t]] = sf.gamma(s)
    return m


def check_gamma_mult(ctx: Context, tl: Tally):
    sf = ctx.sf
    quads = (
        (u, v, s, t)
        for lam in sf.shapes
        for u in sf.std[lam] for v in sf.std[lam]
        for s in sf.std[lam] for t in sf.std[lam]
    )
    for u, v, s, t in ctx.take(quads):
        lhs = matmul(_block_f(sf, u, v), _block_f(sf, s, t))
        rhs = mscale(sf.gamma(s), _block_f(sf, u, t)) if v == s else zeros(sf.p, sf.dims[u.shape])
        tl.expect(lhs == rhs, "f_uv f_st = delta_vs gamma_s f_ut", u=u, v=v, s=s, t=t)


def check_gammacoeff(ctx: Context, tl: Tally):
    sf = ctx.sf
    q = ctx.params.q
    for t in ctx.tableaux():
        tl.expect(bool(sf.gamma(t)), "gamma_t is invertible", t=t)
    # edge recursion: every admissible swap, not only the canonical word
    for s in ctx.tableaux():
        for i in range(1, ctx.n):
            t = s.swap(i)
            if not t.is_standard() or not dominance_leq(t, s):
                continue
            a, b = sf.residue(s, i), sf.residue(t, i)
            expect = sf.gamma(s) * (q * a - b) * (a - q * b) / ((a - b) * (a - b))
            tl.equal(sf.gamma(t), expect, "gamma_t = B_i gamma_s along an edge", s=s, t=t, i=i)
    for i, Ti in enumerate(sf.generators()):
        tl.expect(sf.star(Ti) == Ti, "the anti-involution fixes T_i", i=i)
    for s, t in ctx.take(ctx.pairs()):
        tl.expect(sf.star(sf.f_element(s, t)) == sf.f_element(t, s), "f_st^* = f_ts", s=s, t=t)
    L = sf.jm_elements()
    for t in ctx.take(iter(ctx.tableaux())):
        f = sf.f_element(t, t)
        for k in range(1, ctx.n + 1):
            tl.expect(f @ L[k - 1] == f * sf.residue(t, k), "f_tt L_k = res_t(k) f_tt", t=t, k=k)


def check_ft(ctx: Context, tl: Tally):
    sf = ctx.sf
    total = sf.zero_element()
    for t in ctx.tableaux():
        F = sf.jm_idempotent(t)
        tl.expect(F == sf.f_element(t, t) * sf.gamma(t).inverse(), "F_t = f_tt / gamma_t", t=t)
        total = total + F
    tl.expect(total == sf.identity(), "sum of F_t is the identity")


def check_sigma_ft(ctx: Context, tl: Tally):
    sf = ctx.sf
    for t in ctx.take(iter(ctx.tableaux())):
        lhs = ctx.sigma(sf.matrix_unit(t, t))
        tl.expect(lhs == sf.matrix_unit(sf.shift(t, 1), sf.shift(t, 1)), "sigma(F_t) = F_{t<1>}", t=t)


def check_sigma_action(ctx: Context, tl: Tally):
    sf = ctx.sf
    for lam in sf.shapes:
        cur = initial_tableaux(lam)[0]
        for j in range(ctx.p):
            nxt = sf.shift(cur, 1)
            ratio = sf.gamma(cur) / sf.gamma(nxt)
            lhs = ctx.sigma(sf.f_element(cur, cur))
            tl.expect(lhs == sf.f_element(nxt, nxt) * ratio, "sigma(f_uu) = gamma_u/gamma_{u<1>} f_{u<1>u<1>}",
                      shape=lam, shift=j)
            cur = nxt
        tl.expect(cur == initial_tableaux(lam)[0], "p shifts return to the initial tableau", shape=lam)


def check_recursive_a(ctx: Context, tl: Tally):
    sf = ctx.sf
    for lam in sf.shapes:
        top = initial_tableaux(lam)[0]
        tl.expect(sf.phi_element(top) == sf.identity(), "Phi of the initial tableau is 1", shape=lam)
    for t in ctx.tableaux():
        phi = sf.phi_element(t)
        tl.expect(sf.star(phi) == sf.phi_star(t), "star of Phi_t is the reversed product", t=t)
        tl.expect(bool(determinant(phi.blocks[t.shape])), "Phi_t is invertible on its block", t=t)
    for s, t in ctx.take(ctx.pairs()):
        top = initial_tableaux(s.shape)[0]
        mid = sf.matrix_unit(top, top, sf.gamma(top))
        tl.expect(
            sf.phi_star(s) @ mid @ sf.phi_element(t) == sf.f_element(s, t),
            "f_st = Phi_s^* f_top,top Phi_t",
            s=s,
            t=t,
        )


# ---------------------------------------------------------------------------
# coefficient identities


def _shift_range(ctx: Context):
    return range(ctx.p + 1)


def check_gtsft(ctx: Context, tl: Tally):
    sf, g = ctx.sf, ctx.sf.gamma
    for t in ctx.take(iter(ctx.tableaux())):
        top = initial_tableaux(t.shape)[0]
        for k in _shift_range(ctx):
            m = sf.m(t, k)
            tk, topk, mk = sf.shift(t, k), sf.shift(top, k), sf.shift(m, k)
            lhs = g(t) / g(tk)
            tl.equal(lhs, g(top) / g(topk) * (g(t) / g(m)) ** 2, "first form of gamma_t/gamma_t<k>", t=t, k=k)
            tl.equal(lhs, g(topk) / g(top) * (g(m) / g(tk)) ** 2, "second form of gamma_t/gamma_t<k>", t=t, k=k)
            tl.equal(g(m) / g(top), g(mk) / g(topk), "gamma_m/gamma_top is shift invariant", t=t, k=k)
            tl.equal(g(t) * g(tk), g(m) * g(mk), "gamma_t gamma_t<k> = gamma_m gamma_m<k>", t=t, k=k)


def check_snphit(ctx: Context, tl: Tally):
    sf, L, g = ctx.sf, ctx.layer, ctx.sf.gamma
    for t in ctx.take(iter(ctx.tableaux())):
        top = initial_tableaux(t.shape)[0]
        for k in _shift_range(ctx):
            m, tk, topk = sf.m(t, k), sf.shift(t, k), sf.shift(top, k)
            r = L.r(t, k)
            tl.equal(r, g(sf.shift(m, k)) / g(tk), "r_tk = gamma_{m<k>}/gamma_{t<k>}", t=t, k=k)
            tl.equal(r, g(topk) / g(top) * g(m) / g(tk), "r_tk through the initial tableau", t=t, k=k)
    for s, t in ctx.take(ctx.pairs()):
        for k in _shift_range(ctx):
            top = initial_tableaux(s.shape)[0]
            ms, mt = sf.m(s, k), sf.m(t, k)
            sk, tk, topk = sf.shift(s, k), sf.shift(t, k), sf.shift(top, k)
            R = L.R(s, t, k)
            tl.equal(R, g(topk) / g(top) * g(ms) * g(mt) / (g(sk) * g(tk)), "R form one", s=s, t=t, k=k)
            tl.equal(R, g(ms) * g(t) / (g(sk) * g(mt)), "R form two", s=s, t=t, k=k)
            tl.equal(R, g(s) * g(mt) / (g(ms) * g(tk)), "R form three", s=s, t=t, k=k)
    # the intertwining identity on matrices
    for t in ctx.take(iter(ctx.tableaux())):
        top = initial_tableaux(t.shape)[0]
        for k in range(1, ctx.p):
            topk = sf.shift(top, k)
            lhs = sf.f_element(topk, topk) @ sf.phi_element(t)
            rhs = sf.f_element(topk, sf.shift(t, k)) * L.r(t, k)
            tl.expect(lhs == rhs, "f_{top<k> top<k>} Phi_t = r_tk f_{top<k> t<k>}", t=t, k=k)


def check_sigma_fst(ctx: Context, tl: Tally):
    sf, L = ctx.sf, ctx.layer
    for s, t in ctx.take(ctx.pairs()):
        for k in range(1, ctx.p + 1):
            lhs = ctx.sigma(sf.f_element(s, t), k)
            rhs = sf.f_element(sf.shift(s, k), sf.shift(t, k)) * L.R(s, t, k)
            tl.expect(lhs == rhs, "sigma^k(f_st) = R_stk f_{s<k> t<k>}", s=s, t=t, k=k)


def _compositions(k: int):
    if k == 0:
        yield ()
        return
    for first in range(1, k + 1):
        for rest in _compositions(k - first):
            yield (first,) + rest


def check_prop_rstk(ctx: Context, tl: Tally):
    sf, L, g = ctx.sf, ctx.layer, ctx.sf.gamma
    p = ctx.p
    for s, t in ctx.take(ctx.pairs()):
        for k in range(1, p + 1):
            sk, tk = sf.shift(s, k), sf.shift(t, k)
            tl.equal(L.R(s, t, k) ** 2, g(s) * g(t) / (g(sk) * g(tk)), "R_stk^2", s=s, t=t, k=k)
            for mu in _compositions(k):
                prod, a = sf.one(), 0
                for part in mu:
                    prod = prod * L.R(sf.shift(s, a), sf.shift(t, a), part)
                    a += part
                tl.equal(prod, L.R(s, t, k), "composition law", s=s, t=t, composition=list(mu))
            c = math.lcm(k, p) // k
            prod = sf.one()
            for l in range(c):
                prod = prod * L.R(sf.shift(s, l * k), sf.shift(t, l * k), k)
            tl.equal(prod, sf.one(), "R product around the orbit is 1", s=s, t=t, k=k)


def check_mainthm1(ctx: Context, tl: Tally):
    sf, L = ctx.sf, ctx.layer
    for t in ctx.take(iter(ctx.tableaux())):
        o, plam = orbit_invariants(t.shape, ctx.p)
        for k in range(plam + 1):
            for l in range(plam + 1):
                lhs = L.r(t, l * o) * L.r(sf.shift(t, l * o), k * o)
                rhs = L.r(t, k * o) * L.r(sf.shift(t, k * o), l * o)
                tl.equal(lhs, rhs, "r_{t,lo} r_{t<lo>,ko} symmetric in k, l", t=t, k=k, l=l)


def check_claim1(ctx: Context, tl: Tally):
    sf, g = ctx.sf, ctx.sf.gamma
    for lam in sf.shapes:
        o, plam = orbit_invariants(lam, ctx.p)
        top = initial_tableaux(lam)[0]
        for k in range(plam + 1):
            for l in range(plam + 1):
                a, b = sf.shift(top, l * o), sf.shift(top, k * o)
                tl.equal(
                    g(sf.m(a, k * o)) / g(a), g(sf.m(b, l * o)) / g(b), "cross ratio symmetry", shape=lam, k=k, l=l
                )


# ---------------------------------------------------------------------------
# square roots


def check_square_prop(ctx: Context, tl: Tally):
    sf, L, g = ctx.sf, ctx.layer, ctx.sf.gamma
    branches = {"even": 0, "odd": 0, "trivial": 0}
    for lam in sf.shapes:
        o, plam = orbit_invariants(lam, ctx.p)
        branches["trivial" if plam == 1 else ("even" if plam % 2 == 0 else "odd")] += 1
        top = initial_tableaux(lam)[0]
        h = L.h_lambda(lam)
        tl.equal(h * h, g(sf.shift(top, o)) / g(top), "h_lam^2 = gamma_{top<o>}/gamma_top", shape=lam)
        if plam == 1:
            tl.equal(h, sf.one(), "h_lam = 1 when the orbit has one shape", shape=lam)
    tl.notes["parity_branches"] = branches


def _h_shapes(ctx: Context):
    for lam in ctx.sf.shapes:
        o, plam = orbit_invariants(lam, ctx.p)
        yield lam, o, plam, initial_tableaux(lam)[0]


def check_prophlam(ctx: Context, tl: Tally):
    sf, L, g = ctx.sf, ctx.layer, ctx.sf.gamma
    for lam, o, plam, top in _h_shapes(ctx):
        for l1 in range(plam + 1):
            tl.equal(L.h_lambda_l1_l2(lam, l1, 0), sf.one(), "h_{lam,l,0} = 1", shape=lam, l=l1)
            for l2 in range(plam + 1):
                h = L.h_lambda_l1_l2(lam, l1, l2)
                tl.equal(h, L.h_lambda_recursive(lam, l1, l2), "closed form matches recursion", shape=lam, l1=l1, l2=l2)
                want = g(sf.shift(top, (l1 + l2) * o)) / g(sf.shift(top, l1 * o))
                tl.equal(h * h, want, "h_{lam,l1,l2}^2", shape=lam, l1=l1, l2=l2)


def check_sqhlam(ctx: Context, tl: Tally):
    for lam, o, plam, top in _h_shapes(ctx):
        tl.equal(ctx.layer.h_lambda_l1_l2(lam, 0, plam), ctx.sf.one(), "h_{lam,0,p_lam} = 1", shape=lam)


def check_congruence(ctx: Context, tl: Tally):
    L = ctx.layer
    for lam, o, plam, top in _h_shapes(ctx):
        for l1 in range(plam):
            for l2 in range(plam):
                h = L.h_lambda_l1_l2(lam, l1, l2)
                tl.equal(L.h_lambda_l1_l2(lam, l1 + plam, l2), h, "period p_lam in l1", shape=lam, l1=l1, l2=l2)
                tl.equal(L.h_lambda_l1_l2(lam, l1, l2 + plam), h, "period p_lam in l2", shape=lam, l1=l1, l2=l2)
    for t in ctx.take(iter(ctx.tableaux())):
        for k in range(ctx.p):
            tl.equal(L.r(t, k + ctx.p), L.r(t, k), "r_tk has period p", t=t, k=k)


def check_hlaml1l2(ctx: Context, tl: Tally):
    L = ctx.layer
    for lam, o, plam, top in _h_shapes(ctx):
        for l1 in range(plam + 1):
            for l2 in range(plam + 1):
                lhs = L.h_lambda_l1_l2(lam, 0, l1 + l2)
                rhs = L.h_lambda_l1_l2(lam, 0, l1) * L.h_lambda_l1_l2(lam, l1, l2)
                tl.equal(lhs, rhs, "h_{lam,0,l1+l2} = h_{lam,0,l1} h_{lam,l1,l2}", shape=lam, l1=l1, l2=l2)


def check_hlamquo(ctx: Context, tl: Tally):
    sf, L, g = ctx.sf, ctx.layer, ctx.sf.gamma
    for lam, o, plam, top in _h_shapes(ctx):
        for l1 in range(plam + 1):
            for l2 in range(plam + 1):
                u = sf.shift(top, l1 * o)
                lhs = L.h_lambda_l1_l2(lam, l1, l2) / L.h_lambda_l1_l2(lam, 0, l2)
                tl.equal(lhs, g(sf.m(u, l2 * o)) / g(u), "h_{lam,l1,l2}/h_{lam,0,l2}", shape=lam, l1=l1, l2=l2)


def _entry_one_tableaux(ctx: Context):
    out = []
    for lam in ctx.sf.shapes:
        o, plam = orbit_invariants(lam, ctx.p)
        out.extend((t, o, plam) for t in ctx.entry_one(lam))
    return ctx.take(iter(out))


def check_plamht(ctx: Context, tl: Tally):
    for t, o, plam in _entry_one_tableaux(ctx):
        for l in range(plam):
            tl.equal(ctx.layer.h_t(t, l * o, plam), ctx.sf.one(), "h_{t<lo>}^{<p_lam>} = 1", t=t, l=l)


def check_squareht(ctx: Context, tl: Tally):
    sf, L, g = ctx.sf, ctx.layer, ctx.sf.gamma
    for t, o, plam in _entry_one_tableaux(ctx):
        for l1 in range(plam + 1):
            for l2 in range(plam + 1):
                want = g(sf.shift(t, (l1 + l2) * o)) / g(sf.shift(t, l1 * o))
                tl.equal(L.h_t(t, l1 * o, l2) ** 2, want, "(h_{t<l1 o>}^{<l2>})^2", t=t, l1=l1, l2=l2)


def check_htkl(ctx: Context, tl: Tally):
    L = ctx.layer
    for t, o, plam in _entry_one_tableaux(ctx):
        for l1 in range(plam + 1):
            for l2 in range(plam + 1):
                lhs = L.h_t(t, 0, l1 + l2)
                rhs = L.h_t(t, 0, l1) * L.h_t(t, l1 * o, l2)
                tl.equal(lhs, rhs, "h_t^{<l1+l2>} = h_t^{<l1>} h_{t<l1 o>}^{<l2>}", t=t, l1=l1, l2=l2)
    # the entry-one precondition is enforced
    for lam in ctx.sf.shapes:
        bad = [t for t in ctx.sf.std[lam] if not entry_one_condition(t, ctx.p)]
        if bad:
            try:
                L.h_t(bad[0], 0, 1)
            except EntryOneViolation:
                tl.expect(True, "entry-one violation raised")
            else:
                tl.expect(False, "h_t accepted a tableau without 1 in its first blocks", t=bad[0])


def check_compatible(ctx: Context, tl: Tally):
    sf, L, g = ctx.sf, ctx.layer, ctx.sf.gamma
    for t, o, plam in _entry_one_tableaux(ctx):
        for a in range(plam):
            for l in range(plam):
                tl_ = sf.shift(t, l * o)
                ta, tal = sf.shift(t, a * o), sf.shift(t, (a + l) * o)
                for x in range(ctx.p):
                    y = a * o + x
                    lhs = L.h_t(t, 0, l) * g(t) * g(sf.m(tl_, y)) / (g(sf.m(t, y)) * g(tl_))
                    rhs = L.h_t(t, a * o, l) * g(ta) * g(sf.m(tal, x)) / (g(sf.m(ta, x)) * g(tal))
                    tl.equal(lhs, rhs, "h_{t,x} is well defined", t=t, a=a, l=l, x=x)


def check_square_roots2(ctx: Context, tl: Tally):
    sf, L, g = ctx.sf, ctx.layer, ctx.sf.gamma
    for t, o, plam in _entry_one_tableaux(ctx):
        for x in range(ctx.p):
            for l in range(plam + 1):
                want = g(sf.shift(t, x + l * o)) / g(sf.shift(t, x))
                tl.equal(L.h_t(t, x, l) ** 2, want, "(h_{t,x}^{<l>})^2", t=t, x=x, l=l)


def check_htklx(ctx: Context, tl: Tally):
    L = ctx.layer
    for t, o, plam in _entry_one_tableaux(ctx):
        for x in range(ctx.p):
            for l1 in range(plam + 1):
                for l2 in range(plam + 1):
                    lhs = L.h_t(t, x, l1 + l2)
                    rhs = L.h_t(t, x, l1) * L.h_t(t, x + l1 * o, l2)
                    tl.equal(lhs, rhs, "h_{t,x} cocycle law", t=t, x=x, l1=l1, l2=l2)


# ---------------------------------------------------------------------------
# the sigma-fixed subalgebra


def _rep_pairs(ctx: Context):
    for lam in ctx.layer.reps:
        o, plam = orbit_invariants(lam, ctx.p)
        good = ctx.entry_one(lam)
        for s in good:
            for t in ctx.sf.std[lam]:
                yield lam, o, plam, s, t


def check_astij(ctx: Context, tl: Tally):
    sf, L, g = ctx.sf, ctx.layer, ctx.sf.gamma
    p = ctx.p
    for lam, o, plam, s, t in ctx.take(_rep_pairs(ctx)):
        top = initial_tableaux(lam)[0]
        tl.equal(L.A(s, t, 0, 0), sf.one(), "A_00 = 1", s=s, t=t)
        for i in range(plam):
            si = sf.shift(s, i * o)
            hinv = L.h_shifted(s, i).inverse()
            for j in range(p):
                A = L.A(s, t, i, j)
                topj = sf.shift(top, j)
                form1 = hinv * g(topj) / g(top) * g(sf.m(si, j)) * g(sf.m(t, j)) / (
                    g(sf.shift(s, i * o + j)) * g(sf.shift(t, j))
                )
                tl.equal(A, form1, "A_ij via shifted gammas", s=s, t=t, i=i, j=j)
                tl.equal(A, hinv * L.R(si, t, j), "A_ij = R_{s<io> t, j}/h_s^{<i>}", s=s, t=t, i=i, j=j)
                form3 = L.h_t(s, j, i).inverse() * g(top) / g(topj) * g(s) * g(t) / (g(sf.m(s, j)) * g(sf.m(t, j)))
                tl.equal(A, form3, "A_ij via h_{s,j}", s=s, t=t, i=i, j=j)
                tl.equal(A, L.h_t(s, j, i).inverse() * L.R(s, t, j), "A_ij = R_stj/h_{s,j}^{<i>}", s=s, t=t, i=i, j=j)
                want = g(s) * g(t) / (g(sf.shift(s, i * o + j)) * g(sf.shift(t, j)))
                tl.equal(A * A, want, "A_ij^2", s=s, t=t, i=i, j=j)
                step = A * L.R(sf.shift(s, i * o + j), sf.shift(t, j), 1)
                tl.equal(L.A(s, t, i, j + 1), step, "A_{i,j+1} = A_ij R_{..,1}", s=s, t=t, i=i, j=j)


def check_fstk(ctx: Context, tl: Tally):
    sf = ctx.sf
    for e in ctx.take(iter(ctx.basis().elements)):
        tl.expect(e.matrix == sf.combination(e.terms), "matrix and sparse forms agree", s=e.s, t=e.t, k=e.k)
        tl.expect(ctx.sigma(e.matrix) == e.matrix, "f^[k]_st is sigma-fixed", s=e.s, t=e.t, k=e.k)


def check_orth(ctx: Context, tl: Tally):
    L, sf = ctx.layer, ctx.sf
    elems = ctx.basis().elements
    pairs = ((a, b) for a in elems for b in elems)
    for n_pair, (a, b) in enumerate(ctx.take(pairs)):
        prod = L.multiply_terms(a.terms, b.terms)
        if a.shape == b.shape and a.t == b.s and a.k == b.k:
            _, plam = orbit_invariants(a.shape, ctx.p)
            scale = sf.gamma(a.t) * plam
            want = {key: c * scale for key, c in L.f_terms(a.s, b.t, a.k).items()}
            want = {key: c for key, c in want.items() if c}
        else:
            want = {}
        tl.expect(prod == want, "f^[k]_st f^[l]_uv = delta delta p_lam gamma_t f^[k]_sv",
                  s=a.s, t=a.t, k=a.k, u=b.s, v=b.t, l=b.k)
        if n_pair % 7 == 0:
            # the sparse product agrees with the matrix product
            tl.expect(a.matrix @ b.matrix == sf.combination(prod), "sparse and matrix products agree",
                      s=a.s, t=a.t, u=b.s, v=b.t)


def check_mainthm3(ctx: Context, tl: Tally):
    P = ctx.params
    basis = ctx.basis()
    want = P.r ** P.n * math.factorial(P.n) // P.p
    tl.equal(len(basis), want, "basis cardinality is r^n n!/p", count=len(basis), expected=want)
    rows = [e.matrix.flatten() for e in basis.elements]
    rk = field_rank(rows, ctx.p)
    tl.equal(rk, want, "basis elements are linearly independent", rank=rk, expected=want)


def check_mainthm4(ctx: Context, tl: Tally):
    sf, L = ctx.sf, ctx.layer
    ids = L.central_idempotents()
    want = sum(orbit_invariants(lam, ctx.p)[1] for lam in L.reps)
    tl.equal(len(ids), want, "number of central idempotents", count=len(ids), expected=want)
    total = sf.zero_element()
    gens = ctx.subalgebra_generators()
    for lam, k, F in ids:
        tl.expect(F @ F == F, "idempotent", shape=lam, k=k)
        tl.expect(not F.is_zero(), "nonzero", shape=lam, k=k)
        for name, h in gens:
            tl.expect(F @ h == h @ F, "commutes with the subalgebra generators", shape=lam, k=k, generator=name)
        total = total + F
    for a, (lam1, k1, F1) in enumerate(ids):
        for lam2, k2, F2 in ids[a + 1:]:
            tl.expect((F1 @ F2).is_zero(), "orthogonal", first=[lam1, k1], second=[lam2, k2])
    tl.expect(total == sf.identity(), "central idempotents sum to 1")


def check_mainthm5(ctx: Context, tl: Tally):
    sf, L = ctx.sf, ctx.layer
    T = sf.generators()
    for k in range(ctx.p):
        zs = L.twisted_center(k)
        want = sum(1 for lam in sf.shapes if k % orbit_invariants(lam, ctx.p)[0] == 0)
        tl.equal(len(zs), want, "count of F_{lam,k} is #{lam : o_lam | k}", k=k, count=len(zs), expected=want)
        ek = eps_power(ctx.params, k)
        for lam, z in zs:
            tl.expect(z @ T[0] == (T[0] @ z) * ek, "z T0 = eps^k T0 z", shape=lam, k=k)
            for i in range(1, ctx.n):
                tl.expect(z @ T[i] == T[i] @ z, "z Ti = Ti z", shape=lam, k=k, i=i)
            if k == 0:
                ident = sf.zero_element()
                ident.blocks[lam] = sf.identity().blocks[lam]
                tl.expect(z == ident, "F_{lam,0} is the block identity", shape=lam)


def check_dimcor(ctx: Context, tl: Tally):
    dims = brute_force_center_dims(ctx.params.r, ctx.p, ctx.n, ctx.params)
    for k in range(ctx.p):
        want = sum(1 for lam in ctx.sf.shapes if k % orbit_invariants(lam, ctx.p)[0] == 0)
        tl.equal(dims[k], want, "twisted centre dimension", k=k, nullspace=dims[k], expected=want)
        tl.equal(len(ctx.layer.twisted_center(k)), dims[k], "basis size matches nullspace", k=k)


def check_weightdecomp(ctx: Context, tl: Tally):
    sf, P, p = ctx.sf, ctx.params, ctx.p
    T = sf.generators()
    T0inv = ctx.t0_inverse()
    gens = ctx.subalgebra_generators()

    def tau(x, e):
        for _ in range(e % p):
            x = T0inv @ x @ T[0]
        return x

    for k in range(p):
        basis = [z for _, z in ctx.layer.twisted_center(k)]
        ek = eps_power(P, k)
        sig = [[z] for z in basis]
        for z_list in sig:
            for _ in range(1, p):
                z_list.append(ctx.sigma(z_list[-1]))
        for z_list in sig:
            s = z_list[1] if p > 1 else z_list[0]
            tl.expect(s @ T[0] == (T[0] @ s) * ek, "sigma preserves the twisted centre", k=k)
        total = 0
        inv_p = P.scalar(1) / p
        for l in range(p):
            proj = []
            for z_list in sig:
                acc = sf.zero_element()
                for j, zj in enumerate(z_list):
                    acc = acc + zj * eps_power(P, -l * j)
                proj.append(acc * inv_p)
            rows = [x.flatten() for x in proj if not x.is_zero()]
            dim = field_rank(rows, p) if rows else 0
            total += dim
            T0ml = tau(sf.identity(), 0)
            for _ in range(l):
                T0ml = T0ml @ T0inv
            for z in proj:
                if z.is_zero():
                    continue
                tl.expect(ctx.sigma(z) == z * eps_power(P, l), "slice element has weight l", k=k, l=l)
                u = z @ T0ml
                tl.expect(ctx.sigma(u) == u, "z T0^-l lies in the fixed subalgebra", k=k, l=l)
                tl.expect(u @ T[0] == (T[0] @ u) * ek, "u T0 = eps^k T0 u", k=k, l=l)
                for name, h in gens:
                    tl.expect(u @ h == tau(h, l) @ u, "u h = tau^l(h) u", k=k, l=l, generator=name)
                tl.expect(tau(u, p) == u, "tau^p fixes u", k=k, l=l)
        tl.equal(total, len(basis), "slices add up to the twisted centre", k=k, slices=total, dim=len(basis))


# ---------------------------------------------------------------------------
# the oracle itself and dimension bookkeeping


def _random_element(ctx: Context, rng: random.Random) -> BlockMatrix:
    sf, P = ctx.sf, ctx.params
    x = sf.zero_element()
    for _ in range(rng.randint(1, 4)):
        lam = rng.choice(sf.shapes)
        d = sf.dims[lam]
        i, j = rng.randrange(d), rng.randrange(d)
        c = P.scalar(rng.randint(-5, 5)) * eps_power(P, rng.randrange(P.p))
        x.blocks[lam][i][j] = x.blocks[lam][i][j] + c
    return x


def check_oracle(ctx: Context, tl: Tally):
    sf, P = ctx.sf, ctx.params
    wb = sf.word_basis()
    rng = random.Random(0)
    samples = [_random_element(ctx, rng) for _ in range(ROUND_TRIP_SAMPLES)]
    for idx, x in enumerate(samples):
        tl.expect(wb.assemble(wb.expand(x)) == x, "expand then reassemble is the identity", sample=idx)
    for idx, x in enumerate(samples[:SIGMA_ORDER_SAMPLES]):
        tl.expect(wb.sigma(x, P.p) == x, "sigma^p is the identity", sample=idx)
    for idx in range(0, 10, 2):
        x, y = samples[idx], samples[idx + 1]
        tl.expect(wb.sigma(x @ y) == wb.sigma(x) @ wb.sigma(y), "sigma is multiplicative", sample=idx)
    T = sf.generators()
    tl.expect(wb.sigma(T[0]) == T[0] * P.eps, "sigma(T0) = eps T0")
    for i in range(1, ctx.n):
        tl.expect(wb.sigma(T[i]) == T[i], "sigma(Ti) = Ti", i=i)
    for name, h in ctx.subalgebra_generators():
        tl.expect(wb.sigma(h) == h, "sigma fixes the subalgebra generators", generator=name)
    coeffs = wb.expand(sf.identity())
    nz = [lab for lab, c in zip(wb.labels, coeffs) if c]
    tl.expect(len(nz) == 1 and sum(nz[0][0]) == 0 and nz[0][1].length() == 0, "identity expands to one word")
    if P.r > 1:  # for r = 1, L_1 is the scalar Q_1
        coeffs = wb.expand(T[0])
        nz = [(lab, c) for lab, c in zip(wb.labels, coeffs) if c]
        ok = len(nz) == 1 and nz[0][0][0] == (1,) + (0,) * (ctx.n - 1) and nz[0][1] == 1
        tl.expect(ok, "L_1 expands to one word")


def check_dims(ctx: Context, tl: Tally):
    P = ctx.params
    rec = dim_audit(P.r, P.p, P.n)
    tl.expect(rec["hecke_dim_ok"], "sum of squared tableau counts is r^n n!", **rec)
    tl.expect(rec["subalgebra_dim_ok"], "restricted dimensions add up to r^n n!/p", **rec)
    tl.equal(len(ctx.basis()), rec["subalgebra_dim"], "basis count matches the audit")


@dataclass(frozen=True)
class CheckSpec:
    name: str
    anchor: str
    fn: Callable
    oracle: bool = False


CHECKS: tuple[CheckSpec, ...] = (
    CheckSpec("tiact", "generator matrices on the seminormal basis satisfy every defining relation", check_tiact),
    CheckSpec("GammaCoeffi", "f_uv f_st = delta_vs gamma_s f_ut", check_gamma_mult),
    CheckSpec("gammacoeff", "gamma recursion along edges; f_st^* = f_ts; f_tt L_k = res_t(k) f_tt", check_gammacoeff),
    CheckSpec("dist", "residue sequences separate standard tableaux", check_dist),
    CheckSpec("Ft", "F_t from Jucys-Murphy products equals f_tt/gamma_t; sum F_t = 1", check_ft),
    CheckSpec("sigmaFt", "sigma(F_t) = F_{t<1>}", check_sigma_ft, oracle=True),
    CheckSpec("sigmaaction", "sigma(f_uu) = gamma_u/gamma_{u<1>} f_{u<1>u<1>} along the shift orbit of top",
              check_sigma_action, oracle=True),
    CheckSpec("recursiveA", "f_st = Phi_s^* f_{top,top} Phi_t; Phi_top = 1", check_recursive_a),
    CheckSpec("gtsft", "gamma_t/gamma_{t<k>} through m_k(t)", check_gtsft),
    CheckSpec("snphit", "alternate forms of r and R; f_{top<k>top<k>} Phi_t", check_snphit),
    CheckSpec("sigmafst", "sigma^k(f_st) = R_{st,k} f_{s<k>t<k>}", check_sigma_fst, oracle=True),
    CheckSpec("propRstk", "R squared, composition law, orbit product", check_prop_rstk),
    CheckSpec("mainthm1", "r_{t,lo} r_{t<lo>,ko} = r_{t,ko} r_{t<ko>,lo}", check_mainthm1),
    CheckSpec("claim1", "gamma_{m_ko(top<lo>)}/gamma_{top<lo>} symmetric in k, l", check_claim1),
    CheckSpec("squareProp", "h_lam^2 = gamma_{top<o>}/gamma_top", check_square_prop),
    CheckSpec("prophlam", "h_{lam,l1,l2}^2 and the recursive definition", check_prophlam),
    CheckSpec("sqhlam", "h_{lam,0,p_lam} = 1", check_sqhlam),
    CheckSpec("congruence", "periodicity of r and the h_lam family", check_congruence),
    CheckSpec("hlaml1l2", "h_{lam,0,l1+l2} = h_{lam,0,l1} h_{lam,l1,l2}", check_hlaml1l2),
    CheckSpec("hlamQuo", "h_{lam,l1,l2}/h_{lam,0,l2} as a gamma quotient", check_hlamquo),
    CheckSpec("plamht", "h_{t<lo>}^{<p_lam>} = 1", check_plamht),
    CheckSpec("squareht", "(h_{t<l1 o>}^{<l2>})^2 as a gamma quotient", check_squareht),
    CheckSpec("htkl", "h_t^{<l1+l2>} = h_t^{<l1>} h_{t<l1 o>}^{<l2>}", check_htkl),
    CheckSpec("CompatibleEnsure", "h_{t,x} does not depend on the splitting of x", check_compatible),
    CheckSpec("SquareRoots2", "(h_{t,x}^{<l>})^2 = gamma_{t<x+lo>}/gamma_{t<x>}", check_square_roots2),
    CheckSpec("htklx", "h_{t,x}^{<l1+l2>} = h_{t,x}^{<l1>} h_{t,x+l1 o}^{<l2>}", check_htklx),
    CheckSpec("Astij", "equivalent forms, square and update law of A_ij", check_astij),
    CheckSpec("fstk", "f^[k]_st is sigma-fixed", check_fstk, oracle=True),
    CheckSpec("orth", "f^[k]_st f^[l]_uv = delta_tu delta_kl p_lam gamma_t f^[k]_sv", check_orth),
    CheckSpec("mainthm3", "the f^[k]_st form a basis of size r^n n!/p", check_mainthm3),
    CheckSpec("mainthm4", "central primitive idempotents of the fixed subalgebra", check_mainthm4),
    CheckSpec("mainthm5", "F_{lam,k} satisfy the twisted centraliser equations", check_mainthm5),
    CheckSpec("dimcor", "twisted centre dimension is #{lam : o_lam | k}", check_dimcor),
    CheckSpec("weightdecomp", "sigma-weight slices of the twisted centre", check_weightdecomp, oracle=True),
    CheckSpec("oracle", "word-basis round trip and sigma sanity", check_oracle, oracle=True),
    CheckSpec("dims", "dimension audit", check_dims),
)

CHECK_INDEX = {c.name: c for c in CHECKS}


# ---------------------------------------------------------------------------
# report


@dataclass
class CheckResult:
    name: str
    anchor: str
    status: str  # "pass" | "fail" | "error"
    cases: int
    seconds: float
    counterexample: dict | None = None
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "cases": self.cases,
            "seconds": round(self.seconds, 4),
            "counterexample": self.counterexample,
            "notes": self.notes,
        }


@dataclass
class VerificationReport:
    r: int
    p: int
    n: int
    params: dict
    sampled: bool
    results: list
    mutation: str | None = None

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.results)

    def failures(self) -> list:
        return [c for c in self.results if c.status != "pass"]

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "grid_point": {"r": self.r, "p": self.p, "n": self.n},
            "params": self.params,
            "mutation": self.mutation,
            "sampled": self.sampled,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.results],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "status", "cases", "seconds", "anchor"])
        for c in self.results:
            w.writerow([c.name, c.status, c.cases, "%.4f" % c.seconds, c.anchor])
        return buf.getvalue()


def _params_key(params: HeckeParams) -> tuple:
    return (params.r, params.p, params.n, str(params.q), tuple(str(x) for x in params.Q))


@lru_cache(maxsize=8)
def _context_from_key(key: tuple, mutation: str | None) -> Context:
    r, p, n, q, Q = key
    return Context(make_params(r, p, n, q, Q), mutation)


def _run_check(ctx: Context, spec: CheckSpec) -> CheckResult:
    tl = Tally()
    start = time.perf_counter()
    status, cex = "pass", None
    try:
        spec.fn(ctx, tl)
    except _Failed as exc:
        status, cex = "fail", {"what": exc.what, **exc.data}
    except Exception as exc:  # an exception inside a check is a failure with a trace of its input
        status, cex = "error", {"what": type(exc).__name__, "message": str(exc)}
    return CheckResult(spec.name, spec.anchor, status, tl.cases, time.perf_counter() - start, cex, tl.notes)


def _worker(key: tuple, mutation: str | None, name: str) -> CheckResult:
    return _run_check(_context_from_key(key, mutation), CHECK_INDEX[name])


def resolve_scope(scope: Iterable[str] | None) -> list[str]:
    if scope is None:
        return [c.name for c in CHECKS]
    names = list(dict.fromkeys(scope))
    unknown = [x for x in names if x not in CHECK_INDEX]
    if unknown:
        raise ValueError("unknown check name(s): %s" % ", ".join(unknown))
    return [c.name for c in CHECKS if c.name in names]


def run_suite(
    r: int,
    p: int,
    n: int,
    params: HeckeParams | None = None,
    scope: Iterable[str] | None = None,
    mutation: str | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Run the selected checks (all by default) at one grid point."""
    if params is None:
        params = default_params(r, p, n)
    elif (params.r, params.p, params.n) != (r, p, n):
        raise ValueError("params do not match the grid point")
    ok = check_semisimple(params)
    if not ok:
        raise SemisimplicityError("parameters are not semisimple", ok.witness)
    if mutation is not None and mutation not in MUTATIONS:
        raise ValueError(f"unknown mutation {mutation!r}")
    names = resolve_scope(scope)
    if any(CHECK_INDEX[x].oracle for x in names):
        size = r ** n * math.factorial(n)
        bound = desk_bound()
        if size > bound:
            raise DeskBoundExceeded(
                f"oracle checks at (r,p,n)=({r},{p},{n}) need a word basis of size r^n n! = {size};"
                f" the desk bound is {bound}"
            )
    key = _params_key(params)
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_worker, key, mutation, x) for x in names]
            results = [f.result() for f in futures]
    else:
        ctx = Context(params, mutation)
        results = [_run_check(ctx, CHECK_INDEX[x]) for x in names]
    return VerificationReport(r, p, n, params.to_json(), n >= 4, results, mutation)


# ---------------------------------------------------------------------------
# brute-force oracles


def twisted_centralizer_dim(sf: SeminormalForm, lam: Multipartition, k: int) -> int:
    """dim {X in End(S(lam)) : X T0 = eps^k T0 X, X Ti = Ti X}."""
    P = sf.params
    T = sf.specht_model(lam).generators
    d = sf.dims[lam]
    ek = eps_power(P, k)
    zero = sf.zero()
    rows = []
    for idx, A in enumerate(T):
        c = ek if idx == 0 else sf.one()
        # (X A - c A X)_{ij} as a linear form in the d*d entries of X
        for i in range(d):
            for j in range(d):
                row = [zero] * (d * d)
                for l in range(d):
                    if A[l][j]:
                        row[i * d + l] = row[i * d + l] + A[l][j]
                    if A[i][l]:
                        row[l * d + j] = row[l * d + j] - c * A[i][l]
                if any(row):
                    rows.append(row)
    return d * d - (field_rank(rows, P.p) if rows else 0)


def brute_force_center_dims(r: int, p: int, n: int, params: HeckeParams | None = None) -> dict:
    """k -> dimension of the sigma-twisted k-centre, from a nullspace solve.

    An element of the twisted centre lies in the product of the End(S(mu));
    the equations do not couple different blocks, so each block is solved
    on its own.
    """
    params = default_params(r, p, n) if params is None else params
    sf = SeminormalForm(params)
    return {k: sum(twisted_centralizer_dim(sf, lam, k) for lam in sf.shapes) for k in range(p)}


def dim_audit(r: int, p: int, n: int) -> dict:
    """Dimension bookkeeping from tableau counts alone."""
    if r % p:
        raise ValueError(f"p={p} does not divide r={r}")
    shapes = enumerate_multipartitions(r, n)
    counts = {lam: len(enumerate_standard_tableaux(lam)) for lam in shapes}
    total = sum(c * c for c in counts.values())
    hecke = r ** n * math.factorial(n)
    sub = 0
    for lam in sigma_class_representatives(r, p, n):
        _, plam = orbit_invariants(lam, p)
        piece = counts[lam] // plam
        sub += plam * piece * piece
    return {
        "r": r,
        "p": p,
        "n": n,
        "shapes": len(shapes),
        "classes": len(sigma_class_representatives(r, p, n)),
        "sum_std_squared": total,
        "hecke_dim": hecke,
        "hecke_dim_ok": total == hecke,
        "subalgebra_sum": sub,
        "subalgebra_dim": hecke // p,
        "subalgebra_dim_ok": sub * p == hecke and hecke % p == 0,
    }


MUTATION_POINTS = ((2, 2, 2), (4, 4, 2))


def mutation_sweep(points: Iterable[tuple[int, int, int]] = MUTATION_POINTS) -> dict:
    """mutation -> list of (point, failing check names); an empty list means missed."""
    out = {}
    for mutation in MUTATIONS:
        hits = []
        for r, p, n in points:
            rep = run_suite(r, p, n, mutation=mutation)
            bad = [c.name for c in rep.failures()]
            if bad:
                hits.append({"point": [r, p, n], "failed": bad})
        out[mutation] = hits
    return out
