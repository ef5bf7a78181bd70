"""Finite groups over an enumerated carrier of opaque element descriptors.

Elements are addressed by stable integer indices; the descriptor type
(permutation, index pair, wreath tuple, ...) is only touched by the native
multiplication of each construction.  Index 0 is always the identity.
Groups of order <= 4096 get a flat Cayley table on first bulk use; larger
groups always multiply through their native representation.
"""

from __future__ import annotations

import itertools
import os
import random
from array import array
from typing import Callable, Iterable, Sequence

DEFAULT_MAX_ORDER = 200_000
TABLE_LIMIT = 4096
ENV_MAX_ORDER = "WREATHFOCK_MAX_ORDER"


class ResourceLimitError(RuntimeError):
    """A construction would exceed the configured element cap."""


class NotAHomomorphismError(ValueError):
    pass


class NotASubgroupError(ValueError):
    pass


def max_order_cap(explicit: int | None = None) -> int:
    """Element cap for group constructions; overridable per call or via env."""
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_MAX_ORDER)
    return int(env) if env else DEFAULT_MAX_ORDER


# ---------------------------------------------------------------------------
# permutations


class Permutation:
    """Bijection of {0, ..., n-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                images[a] = b
            if cyc:
                images[cyc[-1]] = cyc[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # function composition: (p*q)(i) = p(q(i))
        p, q = self.images, other.images
        return Permutation(p[q[i]] for i in range(len(p)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images))

    def permute(self, seq: Sequence) -> tuple:
        """Place-permute a sequence: result[p(i)] = seq[i]."""
        out = [None] * len(self.images)
        for i, j in enumerate(self.images):
            out[j] = seq[i]
        return tuple(out)

    def cycles(self, include_fixed: bool = True) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its least point, sorted by it."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def sign(self) -> int:
        return -1 if (self.degree - len(self.cycles())) % 2 else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


# ---------------------------------------------------------------------------
# groups


class ConjugacyClasses:
    """Partition of a group into conjugation orbits, deterministically indexed.

    Orbit-computed classes are ordered by least member index; direct products
    use lexicographic pairs of factor classes; wreath groups use their
    cycle-type order.  Either way the indexing is reproducible.
    """

    def __init__(self, group, sizes, rep_descs, *, class_of=None, classifier=None):
        self.group = group
        self.sizes = tuple(sizes)
        self.rep_descs = tuple(rep_descs)
        self._class_of = class_of
        self._classifier = classifier
        if class_of is None and classifier is None:
            raise ValueError("need a class_of array or a classifier")

    def __len__(self) -> int:
        return len(self.sizes)

    @property
    def num_classes(self) -> int:
        return len(self.sizes)

    @property
    def class_of(self) -> Sequence[int]:
        """Class index per element index (materializes the whole array)."""
        if self._class_of is None:
            cls = self._classifier
            self._class_of = array("i", (cls(d) for d in self.group.elements))
        return self._class_of

    def class_of_index(self, i: int) -> int:
        if self._class_of is not None:
            return self._class_of[i]
        return self._classifier(self.group.elements[i])

    def class_of_desc(self, desc) -> int:
        if self._classifier is not None:
            return self._classifier(desc)
        return self.class_of[self.group.index_of(desc)]

    @property
    def reps(self) -> tuple[int, ...]:
        """One representative element index per class."""
        return tuple(self.group.index_of(d) for d in self.rep_descs)

    def members(self, k: int) -> list[int]:
        co = self.class_of
        return [i for i in range(self.group.order) if co[i] == k]

    def centralizer_order(self, k: int) -> int:
        # orbit-stabilizer: |class| * |centralizer| = |G|
        return self.group.order // self.sizes[k]


class FiniteGroup:
    """A finite group: enumerated hashable descriptors plus a native product.

    `elements` may be built lazily by subclasses; all index-level operations
    (`mul`, `inv`, `index_of`) force enumeration.  Instances are treated as
    immutable once constructed.
    """

    def __init__(self, label, elements, mul_desc, *, inv_desc=None,
                 generators=(), order=None, classes=None):
        self.label = label
        self._mul_desc = mul_desc
        self._inv_desc = inv_desc
        self._elements = None if elements is None else list(elements)
        self._order = order if order is not None else (
            len(self._elements) if self._elements is not None else None)
        self._gen_descs = tuple(generators)
        self._classes = classes
        self._index: dict | None = None
        self._table = None
        self._inverses = None

    # -- enumeration --------------------------------------------------

    def _enumerate(self) -> list:
        raise NotImplementedError("no elements given and no lazy enumeration")

    @property
    def elements(self) -> list:
        if self._elements is None:
            self._elements = self._enumerate()
        return self._elements

    @property
    def order(self) -> int:
        if self._order is None:
            self._order = len(self.elements)
        return self._order

    def __len__(self) -> int:
        return self.order

    @property
    def index(self) -> dict:
        if self._index is None:
            self._index = {d: i for i, d in enumerate(self.elements)}
        return self._index

    def index_of(self, desc) -> int:
        try:
            return self.index[desc]
        except KeyError:
            raise ValueError(f"{desc!r} is not an element of {self.label}") from None

    @property
    def identity(self) -> int:
        return 0

    @property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self.index_of(d) for d in self._gen_descs)

    # -- arithmetic ----------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        t = self._table
        if t is not None:
            return t[i * self._order + j]
        els = self.elements
        return self.index_of(self._mul_desc(els[i], els[j]))

    def inv(self, i: int) -> int:
        if self._inverses is None:
            self._inverses = self._compute_inverses()
        return self._inverses[i]

    def _compute_inverses(self):
        els = self.elements
        if self._inv_desc is not None:
            return array("i", (self.index_of(self._inv_desc(d)) for d in els))
        inv = array("i", [-1] * self.order)
        for i in range(self.order):
            if inv[i] >= 0:
                continue
            for j in range(self.order):
                if self.mul(i, j) == 0:
                    inv[i], inv[j] = j, i
                    break
        return inv

    def conj(self, s: int, x: int) -> int:
        """s * x * s^-1"""
        return self.mul(self.mul(s, x), self.inv(s))

    def element_order(self, i: int) -> int:
        k, acc = 1, i
        while acc != 0:
            acc = self.mul(acc, i)
            k += 1
        return k

    def cayley_table(self):
        """Flat row-major multiplication table (orders <= 4096 only)."""
        if self._table is None:
            n = self.order
            if n > TABLE_LIMIT:
                raise ResourceLimitError(
                    f"no Cayley table above order {TABLE_LIMIT} (|{self.label}| = {n})")
            els = self.elements
            index = self.index
            mul = self._mul_desc
            t = array("i", bytes(4 * n * n))
            for i, a in enumerate(els):
                base = i * n
                for j, b in enumerate(els):
                    t[base + j] = index[mul(a, b)]
            self._table = t
        return self._table

    # -- conjugacy -----------------------------------------------------

    @property
    def classes(self) -> ConjugacyClasses:
        if self._classes is None:
            class_of, rep_descs, sizes = conjugation_orbits(self)
            self._classes = ConjugacyClasses(self, sizes, rep_descs,
                                             class_of=class_of)
        return self._classes

    def __repr__(self) -> str:
        return f"<group {self.label} of order {self.order}>"


# ---------------------------------------------------------------------------
# construction and inspection


def group_from_permutation_generators(degree, generators, label=None, *,
                                      max_order=None):
    """Closure of permutation generators under products, enumerated by BFS.

    Deterministic: the identity is index 0 and new elements appear in
    breadth-first order with the generators applied in the given order.
    """
    gens = [g if isinstance(g, Permutation) else Permutation(g)
            for g in generators]
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != {degree}")
    cap = max_order_cap(max_order)
    ident = Permutation.identity(degree)
    elements = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                y = w * g
                if y not in index:
                    if len(elements) >= cap:
                        raise ResourceLimitError(
                            f"closure exceeds the element cap {cap}")
                    index[y] = len(elements)
                    elements.append(y)
                    new.append(y)
        frontier = new
    if label is None:
        label = f"<perm group on {degree} points>"
    return FiniteGroup(label, elements, Permutation.__mul__,
                       inv_desc=Permutation.inverse, generators=gens)


def conjugation_orbits(G: FiniteGroup, gens=None):
    """Brute-force conjugacy classes: orbit closure under conjugation.

    Conjugating by a generating set reaches the full orbit.  Returns
    (class_of, rep_descs, sizes) with classes ordered by least member index,
    so representatives are the least index in each class.
    """
    n = G.order
    if gens is None:
        gens = list(G.generator_indices) or find_generators(G)
    ginv = [G.inv(g) for g in gens]
    class_of = array("i", [-1] * n)
    rep_descs, sizes = [], []
    for seed in range(n):
        if class_of[seed] >= 0:
            continue
        k = len(rep_descs)
        rep_descs.append(G.elements[seed])
        class_of[seed] = k
        frontier = [seed]
        count = 1
        while frontier:
            nxt = []
            for x in frontier:
                for g, gi in zip(gens, ginv):
                    y = G.mul(g, G.mul(x, gi))
                    if class_of[y] < 0:
                        class_of[y] = k
                        nxt.append(y)
                        count += 1
            frontier = nxt
        sizes.append(count)
    return class_of, rep_descs, sizes


def _closure_indices(G: FiniteGroup, gens: Sequence[int]) -> set[int]:
    closed = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in closed:
                    closed.add(y)
                    nxt.append(y)
        frontier = nxt
    return closed


def find_generators(G: FiniteGroup) -> list[int]:
    """Small generating set, greedily: adjoin the least element outside the
    running closure until the closure is the whole group."""
    gens: list[int] = []
    closed = {0}
    for i in range(G.order):
        if i in closed:
            continue
        gens.append(i)
        closed = _closure_indices(G, gens)
        if len(closed) == G.order:
            break
    return gens


def centralizer(G: FiniteGroup, x: int) -> list[int]:
    """All s with s*x == x*s; a subgroup containing the identity."""
    return [s for s in range(G.order) if G.mul(s, x) == G.mul(x, s)]


def subgroup(G: FiniteGroup, members: Iterable[int], label=None):
    """Subgroup on a subset of element indices, plus its inclusion.

    Membership is verified (identity, closure, inverses); descriptors of the
    subgroup are the ambient indices, listed in increasing order.

    Returns (S, incl).
    """
    idxs = sorted(set(members))
    if not idxs or idxs[0] != 0:
        raise NotASubgroupError("not a subgroup: missing identity")
    member_set = set(idxs)
    for a in idxs:
        if G.inv(a) not in member_set:
            raise NotASubgroupError(f"not a subgroup: inverse of {a} missing")
        for b in idxs:
            if G.mul(a, b) not in member_set:
                raise NotASubgroupError(
                    f"not a subgroup: product of {a} and {b} escapes")
    S = FiniteGroup(label or f"<subgroup of {G.label}, order {len(idxs)}>",
                    idxs, G.mul, inv_desc=G.inv,
                    generators=[idxs[g] for g in find_generators_on(G, idxs)])
    incl = Homomorphism(S, G, images=idxs, label="inclusion")
    return S, incl


def find_generators_on(G: FiniteGroup, idxs: Sequence[int]) -> list[int]:
    # greedy generating set for a sub-carrier, returned as positions in idxs
    pos = {a: p for p, a in enumerate(idxs)}
    gens: list[int] = []
    closed = {0}
    for p, a in enumerate(idxs):
        if a in closed:
            continue
        gens.append(p)
        closed = {0}
        frontier = [0]
        gidx = [idxs[g] for g in gens]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gidx:
                    y = G.mul(x, g)
                    if y not in closed:
                        closed.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(closed) == len(idxs):
            break
    return gens


def direct_product(G: FiniteGroup, H: FiniteGroup, label=None):
    """Direct product with projections and inclusions.

    Elements are index pairs (i, j) in lexicographic order, and conjugacy
    classes are pairs of factor classes, likewise in lexicographic order.

    Returns (P, proj_G, proj_H, incl_G, incl_H).
    """
    nG, nH = G.order, H.order
    if nG * nH > max_order_cap():
        raise ResourceLimitError(
            f"product order {nG * nH} exceeds the element cap")
    elements = [(i, j) for i in range(nG) for j in range(nH)]

    def mul(a, b):
        return (G.mul(a[0], b[0]), H.mul(a[1], b[1]))

    def inv(a):
        return (G.inv(a[0]), H.inv(a[1]))

    gens = [(g, 0) for g in G.generator_indices] + \
           [(0, h) for h in H.generator_indices]
    P = FiniteGroup(label or f"({G.label} x {H.label})", elements, mul,
                    inv_desc=inv, generators=gens)
    cG, cH = G.classes, H.classes
    kH = cH.num_classes
    sizes = [sa * sb for sa in cG.sizes for sb in cH.sizes]
    rep_descs = [(ra, rb) for ra in cG.reps for rb in cH.reps]
    P._classes = ConjugacyClasses(
        P, sizes, rep_descs,
        classifier=lambda d: cG.class_of_index(d[0]) * kH + cH.class_of_index(d[1]))
    proj_G = Homomorphism(P, G, index_map=lambda i: elements[i][0],
                          label="first projection")
    proj_H = Homomorphism(P, H, index_map=lambda i: elements[i][1],
                          label="second projection")
    incl_G = Homomorphism(G, P, desc_map=lambda d: (G.index_of(d), 0),
                          label="first inclusion")
    incl_H = Homomorphism(H, P, desc_map=lambda d: (0, H.index_of(d)),
                          label="second inclusion")
    if nG * nH <= 2000:
        for f in (proj_G, proj_H):
            f.verify()
        for f in (incl_G, incl_H):
            f.verify()
    return P, proj_G, proj_H, incl_G, incl_H


# ---------------------------------------------------------------------------
# homomorphisms


class Homomorphism:
    """Group homomorphism dom -> cod as a total map on element indices.

    Backed by an eager image list, an index-level map, or a descriptor-level
    map; the image list is materialized on demand.  `verify()` checks
    multiplicativity over all pairs (exhaustive at desk scale).
    """

    def __init__(self, dom, cod, images=None, *, index_map=None,
                 desc_map=None, label=""):
        if sum(x is not None for x in (images, index_map, desc_map)) != 1:
            raise ValueError("need exactly one of images/index_map/desc_map")
        self.dom = dom
        self.cod = cod
        self.label = label
        self._images = None if images is None else list(images)
        self._index_map = index_map
        self._desc_map = desc_map

    @property
    def images(self) -> list[int]:
        if self._images is None:
            if self._index_map is not None:
                self._images = [self._index_map(i)
                                for i in range(self.dom.order)]
            else:
                self._images = [self.cod.index_of(self._desc_map(d))
                                for d in self.dom.elements]
        return self._images

    def __call__(self, i: int) -> int:
        if self._images is not None:
            return self._images[i]
        if self._index_map is not None:
            return self._index_map(i)
        return self.cod.index_of(self._desc_map(self.dom.elements[i]))

    def map_desc(self, desc):
        """Image of a dom descriptor as a cod descriptor."""
        if self._desc_map is not None:
            return self._desc_map(desc)
        return self.cod.elements[self(self.dom.index_of(desc))]

    def verify(self, sample: int | None = None, seed: int = 0) -> None:
        """Check f(x*y) == f(x)*f(y); exhaustive unless a sample size is given."""
        dom, cod = self.dom, self.cod
        f = self.images
        if f[0] != 0:
            raise NotAHomomorphismError("not a homomorphism: identity moves")
        if dom.order <= TABLE_LIMIT:
            dom.cayley_table()
        if cod.order <= TABLE_LIMIT:
            cod.cayley_table()
        n = dom.order
        if sample is None:
            pairs = ((i, j) for i in range(n) for j in range(n))
        else:
            rng = random.Random(seed)
            pairs = ((rng.randrange(n), rng.randrange(n))
                     for _ in range(sample))
        for i, j in pairs:
            if f[dom.mul(i, j)] != cod.mul(f[i], f[j]):
                raise NotAHomomorphismError(
                    f"not a homomorphism: fails at pair ({i}, {j})")

    def image_set(self) -> set[int]:
        return set(self.images)

    def is_surjective(self) -> bool:
        return len(self.image_set()) == self.cod.order

    def is_injective(self) -> bool:
        return len(self.image_set()) == self.dom.order

    def kernel(self) -> list[int]:
        return [i for i, fi in enumerate(self.images) if fi == 0]

    def __repr__(self) -> str:
        name = self.label or "hom"
        return f"<{name}: {self.dom.label} -> {self.cod.label}>"


def compose_homs(outer: Homomorphism, inner: Homomorphism) -> Homomorphism:
    if inner.cod is not outer.dom:
        raise ValueError("composition mismatch")
    return Homomorphism(inner.dom, outer.cod,
                        index_map=lambda i: outer(inner(i)),
                        label=f"{outer.label} o {inner.label}")


def hom_from_generator_images(dom, gens, cod, images, label=""):
    """The homomorphism sending the given generators of dom to the given
    images, extended along BFS words and then verified on all pairs.

    Raises NotAHomomorphismError if the images are inconsistent, ValueError
    if the generators do not generate dom.  Generators and images may be
    element indices or descriptors.
    """
    gidx = [_as_index(dom, g) for g in gens]
    himg = [_as_index(cod, h) for h in images]
    if len(gidx) != len(himg):
        raise ValueError("generator/image count mismatch")
    img = [-1] * dom.order
    img[0] = 0
    frontier = [0]
    seen = 1
    while frontier:
        nxt = []
        for x in frontier:
            for g, h in zip(gidx, himg):
                y = dom.mul(x, g)
                cand = cod.mul(img[x], h)
                if img[y] < 0:
                    img[y] = cand
                    nxt.append(y)
                    seen += 1
                elif img[y] != cand:
                    raise NotAHomomorphismError(
                        "not a homomorphism: inconsistent generator images")
        frontier = nxt
    if seen < dom.order:
        raise ValueError(
            f"generators do not generate {dom.label} "
            f"(reached {seen} of {dom.order})")
    f = Homomorphism(dom, cod, images=img, label=label)
    f.verify()
    return f


def _as_index(G: FiniteGroup, x) -> int:
    if isinstance(x, int) and not isinstance(x, bool):
        if not 0 <= x < G.order:
            raise ValueError(f"index {x} out of range for {G.label}")
        return x
    return G.index_of(x)


# ---------------------------------------------------------------------------
# axiom checking (test-time toggle)


def check_group_axioms(G: FiniteGroup, *, exhaustive_limit: int = 300,
                       samples: int = 20_000, seed: int = 0) -> str:
    """Identity, inverses, and associativity.

    Identity and inverses are always exhaustive.  Associativity is cubic, so
    it is exhaustive only up to `exhaustive_limit` and seeded-random sampled
    above that.  Returns "exhaustive" or "sampled"; raises on any failure.
    """
    n = G.order
    for i in range(n):
        if G.mul(0, i) != i or G.mul(i, 0) != i:
            raise ValueError(f"identity fails at {i}")
        if G.mul(i, G.inv(i)) != 0 or G.mul(G.inv(i), i) != 0:
            raise ValueError(f"inverse fails at {i}")
    if n <= exhaustive_limit:
        t = G.cayley_table()
        rng = range(n)
        for i in rng:
            row_i = i * n
            for j in rng:
                ij = t[row_i + j] * n
                jn = j * n
                for k in rng:
                    if t[ij + k] != t[row_i + t[jn + k]]:
                        raise ValueError(f"associativity fails at ({i},{j},{k})")
        return "exhaustive"
    rng = random.Random(seed)
    for _ in range(samples):
        i, j, k = (rng.randrange(n) for _ in range(3))
        if G.mul(G.mul(i, j), k) != G.mul(i, G.mul(j, k)):
            raise ValueError(f"associativity fails at ({i},{j},{k})")
    return "sampled"
