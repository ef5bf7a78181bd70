"""Wreath products G wr S_n and their conjugacy theory by cycle type.

An element is a pair (parts, perm): an n-tuple of base-group element indices
and a permutation of the n slots.  Multiplication follows the semidirect
rule (g, s)(h, t) = (g * (s . h), s t) where (s . h)_i = h_{s^-1(i)}.

Conjugacy is decided by the type matrix: entry (r, c) counts the r-cycles of
the permutation part whose cycle product g_{i_r} ... g_{i_1} lies in base
class c.  Two elements are conjugate iff their types agree, the centralizer
order is a product formula over the type, and classes enumerate as
base-class-colored partitions of n.  None of that needs the group enumerated,
so class-level work scales far beyond an element sweep.
"""

from __future__ import annotations

import itertools
import math
from typing import NamedTuple

from .catalog import catalog_group
from .groups import (ConjugacyClasses, FiniteGroup, Homomorphism, Permutation,
                     ResourceLimitError, direct_product, max_order_cap)


class WreathElement(NamedTuple):
    parts: tuple[int, ...]
    perm: Permutation


class TypeMatrix:
    """Complete conjugacy invariant of a wreath-product element.

    Stored sparsely as (cycle length r, base class c, multiplicity) triples
    sorted by (r, c), zero multiplicities omitted.
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        if isinstance(entries, dict):
            entries = [(r, c, m) for (r, c), m in entries.items()]
        cleaned = sorted((int(r), int(c), int(m)) for r, c, m in entries if m)
        for r, c, m in cleaned:
            if r < 1 or c < 0 or m < 1:
                raise ValueError(f"bad type entry ({r}, {c}, {m})")
        self.entries = tuple(cleaned)

    @classmethod
    def single(cls, r: int, c: int) -> "TypeMatrix":
        return cls([(r, c, 1)])

    @property
    def n(self) -> int:
        return sum(r * m for r, _, m in self.entries)

    def multiplicity(self, r: int, c: int) -> int:
        for rr, cc, m in self.entries:
            if (rr, cc) == (r, c):
                return m
        return 0

    def __add__(self, other: "TypeMatrix") -> "TypeMatrix":
        counts: dict = {}
        for r, c, m in self.entries + other.entries:
            counts[(r, c)] = counts.get((r, c), 0) + m
        return TypeMatrix(counts)

    def __eq__(self, other) -> bool:
        return isinstance(other, TypeMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        inner = ", ".join(f"{m} x ({r}-cycle in class {c})"
                          for r, c, m in self.entries)
        return f"TypeMatrix[{inner or 'empty'}]"

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [list(e) for e in self.entries]}

    @classmethod
    def from_json(cls, doc: dict) -> "TypeMatrix":
        t = cls(doc["entries"])
        if "n" in doc and t.n != doc["n"]:
            raise ValueError(f"type entries sum to {t.n}, header says {doc['n']}")
        return t


# ---------------------------------------------------------------------------
# type computation


def cycle_product(G: FiniteGroup, x: WreathElement, cycle) -> int:
    """g_{i_r} * g_{i_{r-1}} * ... * g_{i_1} for a cycle (i_1, ..., i_r)."""
    acc = 0
    for i in cycle:
        acc = G.mul(x.parts[i], acc)
    return acc


def type_of(G: FiniteGroup, x: WreathElement) -> TypeMatrix:
    """Type matrix of an element of G wr S_n (fixed points count as 1-cycles).

    Rotating a cycle conjugates its product, so the base class is independent
    of the starting point.
    """
    counts: dict = {}
    cls = G.classes
    for cyc in x.perm.cycles():
        c = cls.class_of_index(cycle_product(G, x, cyc))
        key = (len(cyc), c)
        counts[key] = counts.get(key, 0) + 1
    return TypeMatrix(counts)


def classes_by_type(G: FiniteGroup, n: int):
    """All conjugacy classes of G wr S_n as (TypeMatrix, representative).

    Enumerates base-class-colored partitions of n; the representative of a
    type takes consecutive cycles in (r, c) order with the base class
    representative in the first slot of each cycle.  The list is sorted by
    the type's entry tuple, so the ordering is reproducible.

    Requires only the conjugacy classes of G, never G wr S_n itself.
    """
    k = G.classes.num_classes
    pairs = [(r, c) for r in range(1, n + 1) for c in range(k)]

    types: list[TypeMatrix] = []

    def go(i: int, budget: int, acc: list):
        if budget == 0:
            types.append(TypeMatrix(list(acc)))
            return
        if i == len(pairs):
            return
        r, c = pairs[i]
        go(i + 1, budget, acc)
        for m in range(1, budget // r + 1):
            acc.append((r, c, m))
            go(i + 1, budget - r * m, acc)
            acc.pop()

    go(0, n, [])
    types.sort(key=lambda t: t.entries)

    reps = G.classes.reps
    out = []
    for t in types:
        parts = [0] * n
        cycles = []
        pos = 0
        for r, c, m in t.entries:
            for _ in range(m):
                cycles.append(tuple(range(pos, pos + r)))
                parts[pos] = reps[c]
                pos += r
        rep = WreathElement(tuple(parts), Permutation.from_cycles(n, cycles))
        out.append((t, rep))
    return out


def centralizer_order(G: FiniteGroup, t: TypeMatrix) -> int:
    """|C(x)| in G wr S_n for x of type t:
    product over entries of (r * |C_G(g_c)|)^m * m!.

    A single n-cycle typed by class c gives n * |C_G(g_c)|.
    """
    cls = G.classes
    total = 1
    for r, c, m in t.entries:
        total *= (r * cls.centralizer_order(c)) ** m * math.factorial(m)
    return total


def are_conjugate(Gn: "WreathGroup", x: WreathElement, y: WreathElement) -> bool:
    base = Gn.base
    return type_of(base, x) == type_of(base, y)


def fuse_class(t1: TypeMatrix, t2: TypeMatrix) -> TypeMatrix:
    """Type of the image of a pair of classes under the side-by-side
    embedding G_n x G_m -> G_{n+m}: entrywise sum."""
    return t1 + t2


# ---------------------------------------------------------------------------
# the group itself


class WreathGroup(FiniteGroup):
    """G wr S_n with conjugacy decided by type.

    Elements enumerate lazily (parts-major, both factors lexicographic), so
    class-level work never forces the |G|^n * n! carrier into memory.
    """

    def __init__(self, base: FiniteGroup, n: int, *, max_order=None):
        order = base.order ** n * math.factorial(n)
        cap = max_order_cap(max_order)
        if order > cap:
            raise ResourceLimitError(
                f"|{base.label} wr S{n}| = {order} exceeds the element cap {cap}")
        base_mul, base_inv = base.mul, base.inv

        def wmul(x: WreathElement, y: WreathElement) -> WreathElement:
            moved = x.perm.permute(y.parts)
            parts = tuple(base_mul(g, h) for g, h in zip(x.parts, moved))
            return WreathElement(parts, x.perm * y.perm)

        def winv(x: WreathElement) -> WreathElement:
            pinv = x.perm.inverse()
            parts = pinv.permute(tuple(base_inv(g) for g in x.parts))
            return WreathElement(parts, pinv)

        ident = Permutation.identity(n)
        gens = [WreathElement((g,) + (0,) * (n - 1), ident)
                for g in base.generator_indices] if n else []
        if n >= 2:
            gens.append(WreathElement((0,) * n,
                                      Permutation.from_cycles(n, [(0, 1)])))
        if n >= 3:
            gens.append(WreathElement((0,) * n,
                                      Permutation.from_cycles(n, [tuple(range(n))])))
        super().__init__(f"{base.label} wr S{n}", None, wmul, inv_desc=winv,
                         generators=gens, order=order)
        self.base = base
        self.n = n

        typed = classes_by_type(base, n)
        self.types = [t for t, _ in typed]
        self._type_index = {t: i for i, t in enumerate(self.types)}
        sizes = [order // centralizer_order(base, t) for t in self.types]
        for t, size in zip(self.types, sizes):
            assert size * centralizer_order(base, t) == order
        type_index = self._type_index

        def classify(d: WreathElement) -> int:
            t = type_of(base, d)
            try:
                return type_index[t]
            except KeyError:
                raise ValueError(f"{d!r} is not an element of {self.label}") from None

        self._classes = ConjugacyClasses(self, sizes, [rep for _, rep in typed],
                                         classifier=classify)

    def _enumerate(self):
        perms = [Permutation(p) for p in itertools.permutations(range(self.n))]
        return [WreathElement(parts, perm)
                for parts in itertools.product(range(self.base.order),
                                               repeat=self.n)
                for perm in perms]

    def class_index_of_type(self, t: TypeMatrix) -> int:
        return self._type_index[t]


def wreath_group(G: FiniteGroup, n: int, *, max_order=None) -> WreathGroup:
    """Cached per-base tower of wreath products.

    The cap is enforced on cache hits too, so a caller asking for a bounded
    build is refused consistently whether or not the level already exists.
    """
    cache = G.__dict__.setdefault("_wreath_levels", {})
    if n not in cache:
        cache[n] = WreathGroup(G, n, max_order=max_order)
    W = cache[n]
    cap = max_order_cap(max_order)
    if W.order > cap:
        raise ResourceLimitError(
            f"|{G.label} wr S{n}| = {W.order} exceeds the element cap {cap}")
    return W


# ---------------------------------------------------------------------------
# structure maps


def embed_product(G: FiniteGroup, n: int, m: int) -> Homomorphism:
    """The injective homomorphism G_n x G_m -> G_{n+m} acting on the first n
    and last m letters; its domain is the direct product group."""
    Gn, Gm = wreath_group(G, n), wreath_group(G, m)
    amb = wreath_group(G, n + m)
    P = direct_product(Gn, Gm)[0]

    def embed(d) -> WreathElement:
        x = Gn.elements[d[0]]
        y = Gm.elements[d[1]]
        images = tuple(x.perm.images) + tuple(n + j for j in y.perm.images)
        return WreathElement(x.parts + y.parts, Permutation(images))

    return Homomorphism(P, amb, desc_map=embed, label=f"embed {n}+{m}")


def quotient_to_symmetric(Gn: WreathGroup) -> Homomorphism:
    """The surjection G wr S_n -> S_n forgetting the base parts."""
    Sn = catalog_group(f"S{Gn.n}")
    return Homomorphism(Gn, Sn, desc_map=lambda d: d.perm,
                        label="permutation part")


# ---------------------------------------------------------------------------
# counting


def class_count_series(num_base_classes: int, N: int) -> list[int]:
    """Coefficients of prod_{r>=1} (1 - q^r)^(-k) up to q^N, k the number of
    base classes; coefficient n is the class count of G wr S_n."""
    k = num_base_classes
    coeffs = [1] + [0] * N
    for r in range(1, N + 1):
        # multiply by sum_m C(m+k-1, k-1) q^(r m)
        nxt = [0] * (N + 1)
        for i, a in enumerate(coeffs):
            if a == 0:
                continue
            m = 0
            while i + r * m <= N:
                nxt[i + r * m] += a * math.comb(m + k - 1, k - 1)
                m += 1
        coeffs = nxt
    return coeffs
