"""Acceptance criteria 1-8, one printed PASS/FAIL line each.

Run under pytest (the lines go straight to the terminal) or directly with
``python3 tests/test_acceptance.py``.
"""

import functools
import math
import sys

import pytest

from cyclohecke.exactfield import default_params
from cyclohecke.gprn import grpn_basis
from cyclohecke.verify import brute_force_center_dims, mutation_sweep, run_suite

GRID = [(1, 1, 3), (2, 2, 2), (2, 2, 3), (2, 1, 3), (3, 3, 2), (4, 2, 2), (4, 4, 2)]
SAMPLED = [(2, 2, 4)]

STRUCTURE = ["GammaCoeffi", "gammacoeff", "Ft", "sigmaFt", "sigmaaction", "recursiveA", "dist"]
COEFFICIENTS = ["mainthm1", "propRstk", "gtsft", "snphit", "claim1", "sigmafst"]
SQUARE_ROOTS = ["squareProp", "prophlam", "sqhlam", "congruence", "hlaml1l2", "hlamQuo", "plamht", "squareht",
                "htkl", "CompatibleEnsure", "SquareRoots2", "htklx"]
SUBALGEBRA = ["Astij", "fstk", "orth", "mainthm3", "mainthm4", "dims"]


@functools.lru_cache(maxsize=None)
def _suite(point, scope):
    return run_suite(*point, scope=list(scope))


def _run(points, scope):
    bad = []
    for pt in points:
        rep = _suite(pt, tuple(scope))
        bad.extend((pt, c.name, c.counterexample) for c in rep.failures())
    return bad


def _line(num, title, ok, detail):
    return "[%s] criterion %d: %s -- %s" % ("PASS" if ok else "FAIL", num, title, detail)


def criterion_1():
    bad = _run(GRID, ["tiact"])
    return not bad, "defining relations in every Specht model at %d grid points" % len(GRID), bad


def criterion_2():
    bad = _run(GRID + SAMPLED, STRUCTURE)
    return not bad, "f-multiplication, F_t, sigma(F_t) exhaustive n<=3, sampled at (2,2,4)", bad


def criterion_3():
    bad = _run([pt for pt in GRID if pt[2] <= 3], COEFFICIENTS)
    return not bad, "r/R identities over all tableaux and shifts", bad


def criterion_4():
    points = GRID + SAMPLED + [(3, 3, 3)]
    bad = _run(points, SQUARE_ROOTS)
    branches = {"even": [], "odd": []}
    for pt in points:
        rep = _suite(pt, tuple(SQUARE_ROOTS))
        seen = rep.results[0].notes.get("parity_branches", {})
        for key in branches:
            if seen.get(key):
                branches[key].append(pt)
    # n odd leaves no shape fixed by the shift at (2,2,3), so (2,2,n) is met at n = 2 and 4
    need = {"even": [(2, 2, 2), (2, 2, 4), (4, 2, 2)], "odd": [(3, 3, 3)]}
    for key, pts in need.items():
        for pt in pts:
            if pt not in branches[key]:
                bad.append((pt, "branch " + key, "not exercised"))
    detail = "h families and cocycle laws; even branch at %s, odd branch at %s" % (
        branches["even"], branches["odd"])
    return not bad, detail, bad


def criterion_5():
    bad = _run(GRID, SUBALGEBRA)
    counts = {}
    for pt, want in [((2, 2, 2), 4), ((3, 3, 2), 6), ((2, 2, 3), 24)]:
        got = len(grpn_basis(default_params(*pt)))
        counts[pt] = got
        if got != want or want != pt[0] ** pt[2] * math.factorial(pt[2]) // pt[1]:
            bad.append((pt, "count", got))
    return not bad, "sigma-fixed orthogonal basis, counts %s, idempotent suite" % counts, bad


def criterion_6():
    points = [(2, 2, 2), (3, 3, 2), (4, 2, 2)]
    bad = _run(points, ["mainthm5", "dimcor"])
    dims = {pt: brute_force_center_dims(*pt) for pt in points}
    bad += _run([(2, 2, 2)], ["weightdecomp"])
    return not bad, "twisted centres match nullspace dims %s; slices at (2,2,2)" % dims, bad


def criterion_7():
    sweep = mutation_sweep()
    missed = [m for m, hits in sweep.items() if not hits]
    caught = {m: sorted({c for h in hits for c in h["failed"]})[:3] for m, hits in sweep.items()}
    return not missed, "all %d mutations detected, e.g. %s" % (len(sweep), caught), missed


def criterion_8():
    bad = _run([(2, 2, 2), (3, 3, 2)], ["oracle"])
    return not bad, "50-element round trip and sigma^p = id at (2,2,2), (3,3,2)", bad


CRITERIA = [
    (1, "relation suite", criterion_1),
    (2, "seminormal structure", criterion_2),
    (3, "coefficient identities", criterion_3),
    (4, "square roots", criterion_4),
    (5, "G(r,p,n) basis", criterion_5),
    (6, "twisted centres", criterion_6),
    (7, "mutation sensitivity", criterion_7),
    (8, "oracle round trip", criterion_8),
]


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[str(c[0]) for c in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, detail, bad = fn()
    with capsys.disabled():
        print("\n" + _line(num, title, ok, detail))
    assert ok, bad


if __name__ == "__main__":
    failed = 0
    for num, title, fn in CRITERIA:
        ok, detail, bad = fn()
        print(_line(num, title, ok, detail))
        if not ok:
            failed += 1
            print("    ", bad)
    sys.exit(1 if failed else 0)
