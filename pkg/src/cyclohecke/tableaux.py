"""Multipartitions, standard tableaux, block shifts and coset data.

Permutations act on the right of tableaux: ``t.act(w)`` replaces every
entry x by its image under w, and ``t.act(u * v) == t.act(u).act(v)``.
Cells are indexed by their position in the row reading of the initial
tableau t^lambda, so ``d(t)`` sends x to the entry of t sitting in the
cell that holds x in t^lambda.

>>> lam = Multipartition(((1,), (1,)))
>>> [t.entries for t in enumerate_standard_tableaux(lam)]
[(1, 2), (2, 1)]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Sequence

__all__ = [
    "Multipartition",
    "StandardTableau",
    "Permutation",
    "enumerate_partitions",
    "enumerate_multipartitions",
    "enumerate_standard_tableaux",
    "dominance_leq",
    "initial_tableaux",
    "shift",
    "orbit_invariants",
    "sigma_class_representatives",
    "tableau_word",
    "m_k",
    "block_shift_perm",
    "entry_one_condition",
    "block_sizes_prefix",
    "conjugate_tableau",
    "coset_factorisation",
    "all_permutations",
]


@dataclass(frozen=True, order=False)
class Multipartition:
    components: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(int(x) for x in c) for c in self.components)
        for c in comps:
            if any(x <= 0 for x in c) or any(c[i] < c[i + 1] for i in range(len(c) - 1)):
                raise ValueError(f"not a partition: {c}")
        object.__setattr__(self, "components", comps)

    @property
    def r(self) -> int:
        return len(self.components)

    @cached_property
    def n(self) -> int:
        return sum(sum(c) for c in self.components)

    def sizes(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in self.components)

    def block(self, t: int, p: int) -> tuple[tuple[int, ...], ...]:
        """The t-th block (1-based, any integer taken mod p) of d components."""
        d = self.r // p
        t = (t - 1) % p
        return self.components[t * d:(t + 1) * d]

    @cached_property
    def cells(self) -> tuple[tuple[int, int, int], ...]:
        """Cells (row, col, comp) in row-reading order, all 1-based."""
        out = []
        for c, comp in enumerate(self.components, start=1):
            for a, length in enumerate(comp, start=1):
                for b in range(1, length + 1):
                    out.append((a, b, c))
        return tuple(out)

    @cached_property
    def cell_index(self) -> dict:
        return {cell: i for i, cell in enumerate(self.cells)}

    def conjugate(self) -> "Multipartition":
        return Multipartition(tuple(_conj(c) for c in reversed(self.components)))

    def sort_key(self):
        # larger component sequences first; equals padded comparison
        return tuple(tuple(-x for x in c) + (0,) * (self.n - len(c)) for c in self.components)

    def label(self) -> str:
        return "|".join(",".join(map(str, c)) if c else "-" for c in self.components)

    def to_json(self) -> list:
        return [list(c) for c in self.components]

    def __repr__(self):
        return "Multipartition(%s)" % self.label()


def _conj(part: Sequence[int]) -> tuple[int, ...]:
    if not part:
        return ()
    return tuple(sum(1 for x in part if x >= i) for i in range(1, part[0] + 1))


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line form: images[x-1] is the image of x."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        im = list(range(1, n + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return cls(tuple(im))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # right action: x(uv) = (xu)v
        return Permutation(tuple(other(self(x)) for x in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def length(self) -> int:
        im = self.images
        return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])

    def reduced_word(self) -> list[int]:
        """Reduced word by bubble sort, smallest descent first."""
        im = list(self.images)
        word = []
        # a position descent at i means w = s_i w' with l(w') < l(w)
        while True:
            for i in range(len(im) - 1):
                if im[i] > im[i + 1]:
                    break
            else:
                break
            # s_i w swaps positions i, i+1 of the one-line form
            im[i], im[i + 1] = im[i + 1], im[i]
            word.append(i + 1)
        return word


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling; ``entries[i]`` is the entry of the i-th cell in row reading."""

    shape: Multipartition
    entries: tuple[int, ...]

    @cached_property
    def position(self) -> dict:
        """entry -> 0-based cell position."""
        return {e: i for i, e in enumerate(self.entries)}

    def cell(self, k: int) -> tuple[int, int, int]:
        return self.shape.cells[self.position[k]]

    def component_of(self, k: int) -> int:
        return self.cell(k)[2]

    def rows(self) -> list[list[list[int]]]:
        comps: list[list[list[int]]] = [[[] for _ in c] for c in self.shape.components]
        for (a, b, c), e in zip(self.shape.cells, self.entries):
            comps[c - 1][a - 1].append(e)
        return comps

    def act(self, w: Permutation) -> "StandardTableau":
        return StandardTableau(self.shape, tuple(w(e) for e in self.entries))

    def swap(self, i: int) -> "StandardTableau":
        """Exchange the entries i and i+1 (may leave the standard set)."""
        def f(e):
            return i + 1 if e == i else i if e == i + 1 else e
        return StandardTableau(self.shape, tuple(f(e) for e in self.entries))

    def is_standard(self) -> bool:
        idx = self.shape.cell_index
        for (a, b, c), e in zip(self.shape.cells, self.entries):
            right = idx.get((a, b + 1, c))
            if right is not None and self.entries[right] < e:
                return False
            below = idx.get((a + 1, b, c))
            if below is not None and self.entries[below] < e:
                return False
        return True

    def restriction_shape(self, k: int) -> tuple[tuple[int, ...], ...]:
        """Shape of the subtableau holding 1..k, as a tuple of compositions."""
        counts = [dict() for _ in self.shape.components]
        for (a, b, c), e in zip(self.shape.cells, self.entries):
            if e <= k:
                counts[c - 1][a] = counts[c - 1].get(a, 0) + 1
        out = []
        for cnt in counts:
            rows = [cnt[a] for a in sorted(cnt)]
            out.append(tuple(rows))
        return tuple(out)

    def label(self) -> str:
        parts = []
        for comp in self.rows():
            parts.append("/".join(",".join(map(str, row)) for row in comp) if comp else "-")
        return "|".join(parts)

    def to_json(self) -> list:
        return self.rows()

    def __repr__(self):
        return "Tableau(%s)" % self.label()


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def enumerate_partitions(n: int, maxpart: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of n in decreasing lexicographic order."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in enumerate_partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_multipartitions(r: int, n: int) -> tuple[Multipartition, ...]:
    """All r-multipartitions of n, larger component sequences first."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            if remaining == 0:
                out.append(Multipartition(tuple(prefix)))
            return
        for size in range(remaining, -1, -1):
            for part in enumerate_partitions(size):
                rec(prefix + [part], remaining - size, slots - 1)

    rec([], n, r)
    out.sort(key=Multipartition.sort_key)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_standard_tableaux(shape: Multipartition) -> tuple[StandardTableau, ...]:
    """All standard tableaux, starting with t^lambda, then in the order
    of the reverse-lexicographic list of entry sequences."""
    n = shape.n
    cells = shape.cells
    idx = shape.cell_index
    # predecessors in the diagram: the cell to the left and the one above
    preds = []
    for (a, b, c) in cells:
        pr = []
        if b > 1:
            pr.append(idx[(a, b - 1, c)])
        if a > 1:
            pr.append(idx[(a - 1, b, c)])
        preds.append(pr)
    filled = [0] * len(cells)
    out = []

    def rec(k):
        if k > n:
            out.append(StandardTableau(shape, tuple(filled)))
            return
        for i in range(len(cells)):
            if filled[i] == 0 and all(filled[j] for j in preds[i]):
                filled[i] = k
                rec(k + 1)
                filled[i] = 0

    rec(1)
    # placing k in the earliest available cell first yields t^lambda first
    return tuple(out)


def _shape_dominates(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """a dominates b for sequences of compositions (restricted shapes)."""
    tot_a = tot_b = 0
    for ca, cb in zip(a, b):
        run_a, run_b = tot_a, tot_b
        for i in range(max(len(ca), len(cb))):
            run_a += ca[i] if i < len(ca) else 0
            run_b += cb[i] if i < len(cb) else 0
            if run_a < run_b:
                return False
        tot_a += sum(ca)
        tot_b += sum(cb)
    return True


def dominance_leq(a, b) -> bool:
    """True iff a is dominated by b (b dominates a), for shapes or tableaux."""
    if isinstance(a, Multipartition) and isinstance(b, Multipartition):
        if a.n != b.n or a.r != b.r:
            raise ValueError("dominance needs the same n and r")
        return _shape_dominates(b.components, a.components)
    if isinstance(a, StandardTableau) and isinstance(b, StandardTableau):
        if a.shape.n != b.shape.n or a.shape.r != b.shape.r:
            raise ValueError("dominance needs the same n and r")
        for k in range(1, a.shape.n + 1):
            if not _shape_dominates(b.restriction_shape(k), a.restriction_shape(k)):
                return False
        return True
    raise TypeError("dominance compares two shapes or two tableaux")


def initial_tableaux(shape: Multipartition) -> tuple[StandardTableau, StandardTableau]:
    """(t^lambda, t_lambda): row reading filling and the conjugate of the
    row reading filling of the conjugate shape."""
    top = StandardTableau(shape, tuple(range(1, shape.n + 1)))
    conj_shape = shape.conjugate()
    conj_top = StandardTableau(conj_shape, tuple(range(1, shape.n + 1)))
    return top, conjugate_tableau(conj_top)


def conjugate_tableau(t: StandardTableau) -> StandardTableau:
    shape = t.shape.conjugate()
    r = t.shape.r
    val = {}
    for (a, b, c), e in zip(t.shape.cells, t.entries):
        val[(b, a, r + 1 - c)] = e
    return StandardTableau(shape, tuple(val[cell] for cell in shape.cells))


# ---------------------------------------------------------------------------
# shifts and orbits


def _block_perm(r: int, p: int, z: int) -> list[int]:
    """Component order of the shifted object: new component j is old component out[j]."""
    d = r // p
    out = []
    for blk in range(p):
        src = (blk + z) % p
        out.extend(range(src * d, (src + 1) * d))
    return out


def shift(x, z: int, p: int):
    """Cyclic block shift by z: blocks (x^[z+1], ..., x^[z+p])."""
    if isinstance(x, Multipartition):
        if x.r % p:
            raise ValueError("p must divide the number of components")
        order = _block_perm(x.r, p, z)
        return Multipartition(tuple(x.components[j] for j in order))
    if isinstance(x, StandardTableau):
        return _shift_tableau(x, z % p, p)
    raise TypeError("shift applies to multipartitions and tableaux")


@lru_cache(maxsize=None)
def _shift_tableau(t: StandardTableau, z: int, p: int) -> StandardTableau:
    shape = shift(t.shape, z, p)
    order = _block_perm(t.shape.r, p, z)
    val = {}
    for (a, b, c), e in zip(t.shape.cells, t.entries):
        val[(a, b, c)] = e
    ents = tuple(val[(a, b, order[c - 1] + 1)] for (a, b, c) in shape.cells)
    return StandardTableau(shape, ents)


@lru_cache(maxsize=None)
def orbit_invariants(shape: Multipartition, p: int) -> tuple[int, int]:
    """(o, p/o) with o the least k >= 1 fixing the shape under shift."""
    for k in range(1, p + 1):
        if shift(shape, k, p) == shape:
            return k, p // k
    raise AssertionError("unreachable: shift by p is the identity")


@lru_cache(maxsize=None)
def sigma_class_representatives(r: int, p: int, n: int) -> tuple[Multipartition, ...]:
    """One shape per shift orbit: the orbit member listed first by
    enumerate_multipartitions."""
    if r % p:
        raise ValueError("p must divide r")
    seen = set()
    reps = []
    for lam in enumerate_multipartitions(r, n):
        if lam in seen:
            continue
        orbit = {shift(lam, z, p) for z in range(p)}
        seen |= orbit
        reps.append(min(orbit, key=Multipartition.sort_key))
    return tuple(reps)


def block_sizes_prefix(shape: Multipartition, k: int, p: int) -> int:
    """a_k: number of cells in blocks 1..k."""
    d = shape.r // p
    return sum(shape.sizes()[: k * d])


def entry_one_condition(t: StandardTableau, p: int) -> bool:
    """1 lies in blocks 1..o of t, o being the orbit period of its shape."""
    o, _ = orbit_invariants(t.shape, p)
    d = t.shape.r // p
    return t.component_of(1) <= o * d


# ---------------------------------------------------------------------------
# words and cosets


@lru_cache(maxsize=None)
def tableau_word(t: StandardTableau) -> tuple[Permutation, tuple[int, ...]]:
    """d(t) with its canonical reduced word.

    The word is read off by straightening: repeatedly exchange the smallest
    i whose successor i+1 sits in an earlier cell, which walks up the
    dominance order to t^lambda one step at a time.
    """
    word = []
    cur = t
    while True:
        pos = cur.position
        for i in range(1, t.shape.n):
            if pos[i + 1] < pos[i]:
                break
        else:
            break
        cur = cur.swap(i)
        word.append(i)
    d = Permutation(t.entries)
    return d, tuple(reversed(word))


def m_k(t: StandardTableau, k: int, p: int) -> StandardTableau:
    """t^lambda x_k for the parabolic factorisation d(t) = x_k d_k at the
    cut a_k; k is read mod p and m_0 is the identity map."""
    k %= p
    if k == 0:
        return t
    a = block_sizes_prefix(t.shape, k, p)
    first = sorted(t.entries[:a])
    rest = sorted(t.entries[a:])
    rank = {e: i + 1 for i, e in enumerate(first)}
    rank.update({e: a + i + 1 for i, e in enumerate(rest)})
    return StandardTableau(t.shape, tuple(rank[e] for e in t.entries))


def coset_factorisation(t: StandardTableau, k: int, p: int) -> tuple[Permutation, Permutation]:
    """(x_k, d_k) with d(t) = x_k d_k."""
    d, _ = tableau_word(t)
    x = Permutation(m_k(t, k, p).entries)
    dk = x.inverse() * d
    return x, dk


def block_shift_perm(a: int, b: int, k: int = 0, n: int | None = None) -> Permutation:
    """w_{a,b} shifted by k: sends k+1..k+a to k+b+1..k+a+b and
    k+a+1..k+a+b to k+1..k+b."""
    if n is None:
        n = k + a + b
    if min(a, b, k) < 0 or k + a + b > n:
        raise ValueError("need a, b, k >= 0 and k + a + b <= n")
    im = list(range(1, n + 1))
    for x in range(1, a + 1):
        im[k + x - 1] = k + b + x
    for x in range(1, b + 1):
        im[k + a + x - 1] = k + x
    return Permutation(tuple(im))


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(im) for im in permutations(range(1, n + 1))]
