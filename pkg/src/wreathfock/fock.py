"""The graded algebra F(G) = sum_n q^n Class(G wr S_n).

The product of class functions on G wr S_n and G wr S_m is their external
product on the side-by-side subgroup G_n x G_m of G wr S_{n+m}, Frobenius
induced up.  The default implementation works entirely in type space: a
pair of classes fuses to the entrywise sum of their types, so

    (f * g)[t] = |C(t)| * sum over t1 + t2 = t of
                 f[t1] g[t2] / (|C(t1)| |C(t2)|),

with all centralizer orders given by the product formula.  The literal
element-sum induction is kept as the ``"elements"`` oracle strategy; the
two must agree exactly wherever the ambient group is enumerable.

The distinguished generators are the indicators of single-n-cycle classes;
monomials in them, one per colored partition of n, form a basis of level n
(F(G) is a graded-symmetric algebra on the generators), which the
change-of-basis matrix certifies by exact invertibility.
"""

from __future__ import annotations

from fractions import Fraction

from .classfun import (ClassFunction, external_product, induce, one,
                       pullback_along)
from .groups import FiniteGroup, direct_product
from .wreath import (TypeMatrix, WreathElement, WreathGroup,
                     class_count_series, classes_by_type, embed_product,
                     quotient_to_symmetric, wreath_group)

DEFAULT_MAX_LEVEL = 4


def _wreath_of(f: ClassFunction) -> WreathGroup:
    if not isinstance(f.group, WreathGroup):
        raise ValueError("expected a class function on a wreath product")
    return f.group


def fock_product(f: ClassFunction, g: ClassFunction,
                 strategy: str = "fusion") -> ClassFunction:
    """Graded product F(G) level n x level m -> level n+m.

    ``"fusion"`` never touches elements; ``"elements"`` builds the product
    group and the embedding and runs the literal induction sum (the oracle).
    """
    Gn, Gm = _wreath_of(f), _wreath_of(g)
    if Gn.base is not Gm.base:
        raise ValueError("factors live over different base groups")
    base = Gn.base
    amb = wreath_group(base, Gn.n + Gm.n)
    if strategy == "fusion":
        acc = [Fraction(0)] * amb.classes.num_classes
        cn = [Gn.order // s for s in Gn.classes.sizes]
        cm = [Gm.order // s for s in Gm.classes.sizes]
        for j1, t1 in enumerate(Gn.types):
            if f.values[j1] == 0:
                continue
            for j2, t2 in enumerate(Gm.types):
                if g.values[j2] == 0:
                    continue
                a = amb.class_index_of_type(t1 + t2)
                acc[a] += f.values[j1] * g.values[j2] / (cn[j1] * cm[j2])
        sizes = amb.classes.sizes
        return ClassFunction(amb, (amb.order // s * x
                                   for s, x in zip(sizes, acc)))
    if strategy == "elements":
        emb = embed_product(base, Gn.n, Gm.n)
        F = external_product(f, g, emb.dom)
        emb.dom.classes.class_of  # materialize before the element sweep
        return induce(F, emb, strategy="elements")
    raise ValueError(f"unknown strategy: {strategy}")


def delta(G: FiniteGroup, n: int, c: int) -> ClassFunction:
    """Generator at level n colored by base class c: the indicator of the
    class whose permutation part is one n-cycle with cycle product in c."""
    Gn = wreath_group(G, n)
    idx = Gn.class_index_of_type(TypeMatrix.single(n, c))
    vals = [Fraction(0)] * Gn.classes.num_classes
    vals[idx] = Fraction(1)
    return ClassFunction(Gn, vals)


def monomial_value(G: FiniteGroup, mu: TypeMatrix,
                   strategy: str = "fusion") -> ClassFunction:
    """Product of generators with exponents given by mu: entry (r, c, m)
    contributes delta(G, r, c) to the m-th power.  Lands at level mu.n."""
    result = one(wreath_group(G, 0))
    for r, c, m in mu.entries:
        d = delta(G, r, c)
        for _ in range(m):
            result = fock_product(result, d, strategy=strategy)
    return result


def change_of_basis(G: FiniteGroup, n: int, strategy: str = "fusion"):
    """Square matrix of generator-monomial values on the classes of
    G wr S_n; rows and columns are both indexed by the colored partitions
    of n in their canonical order.  Invertibility says the monomials are a
    basis of level n.

    Returns (rows, types).
    """
    types = [t for t, _ in classes_by_type(G, n)]
    rows = [list(monomial_value(G, t, strategy=strategy).values)
            for t in types]
    return rows, types


def module_action_over_sym(f: ClassFunction, x: ClassFunction) -> ClassFunction:
    """Class(S_n) acts on level n through the permutation-part quotient:
    f . x = (f o quotient) * x."""
    Gn = _wreath_of(x)
    q = quotient_to_symmetric(Gn)
    if f.group is not q.cod:
        raise ValueError(f"expected a class function on S{Gn.n}")
    return pullback_along(f, q) * x


# ---------------------------------------------------------------------------
# product bases


def _cached_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    cache = G.__dict__.setdefault("_product_with", {})
    key = id(H)
    if key not in cache:
        cache[key] = (H, direct_product(G, H)[0])
    return cache[key][1]


def kunneth_generator_identity(G: FiniteGroup, H: FiniteGroup, n: int,
                               c: int, d: int, return_sides: bool = False):
    """Restricting delta_G(n,c) x delta_H(n,d) along the diagonal embedding
    (G x H) wr S_n -> (G wr S_n) x (H wr S_n) gives exactly
    delta_{G x H}(n, c x d).

    Both sides are computed on class representatives by splitting each into
    its G- and H-coordinates; no group is enumerated.
    """
    P = _cached_product(G, H)
    kH = H.classes.num_classes
    Pn = wreath_group(P, n)
    dG, dH = delta(G, n, c), delta(H, n, d)
    pairs = P.elements
    lhs = []
    for rep in Pn.classes.rep_descs:
        aparts = tuple(pairs[p][0] for p in rep.parts)
        bparts = tuple(pairs[p][1] for p in rep.parts)
        va = dG.at_desc(WreathElement(aparts, rep.perm))
        vb = dH.at_desc(WreathElement(bparts, rep.perm))
        lhs.append(va * vb)
    rhs = delta(P, n, c * kH + d)
    ok = tuple(lhs) == rhs.values
    if return_sides:
        return ok, ClassFunction(Pn, lhs), rhs
    return ok


def graded_dimension_series(G: FiniteGroup, N: int):
    """Class counts of G wr S_n for n <= N, twice: by enumerating colored
    partitions and by expanding prod_{r>=1} (1-q^r)^(-k) as a power series.

    Returns (counts, series); the two must agree.
    """
    counts = [len(classes_by_type(G, n)) for n in range(N + 1)]
    series = class_count_series(G.classes.num_classes, N)
    return counts, series


# ---------------------------------------------------------------------------
# graded elements


class FockElement:
    """A finitely supported graded family {n: class function on G wr S_n},
    truncated above ``max_level`` (products drop overflowing levels, i.e.
    we work modulo q^(max_level+1))."""

    def __init__(self, base: FiniteGroup, levels: dict, *,
                 max_level: int = DEFAULT_MAX_LEVEL):
        self.base = base
        self.max_level = max_level
        self.levels = {n: f for n, f in sorted(levels.items())
                       if n <= max_level and any(f.values)}

    @classmethod
    def unit(cls, G: FiniteGroup, *, max_level: int = DEFAULT_MAX_LEVEL):
        return cls(G, {0: one(wreath_group(G, 0))}, max_level=max_level)

    @classmethod
    def generator(cls, G: FiniteGroup, n: int, c: int, *,
                  max_level: int = DEFAULT_MAX_LEVEL):
        return cls(G, {n: delta(G, n, c)}, max_level=max_level)

    def level(self, n: int) -> ClassFunction:
        f = self.levels.get(n)
        if f is None:
            Gn = wreath_group(self.base, n)
            return ClassFunction(Gn, [0] * Gn.classes.num_classes)
        return f

    def _compatible(self, other: "FockElement"):
        if self.base is not other.base:
            raise ValueError("elements live over different base groups")

    def __add__(self, other: "FockElement") -> "FockElement":
        self._compatible(other)
        cap = min(self.max_level, other.max_level)
        out = dict(self.levels)
        for n, f in other.levels.items():
            out[n] = out[n] + f if n in out else f
        return FockElement(self.base, out, max_level=cap)

    def __mul__(self, other):
        if not isinstance(other, FockElement):
            return FockElement(self.base,
                               {n: f * other for n, f in self.levels.items()},
                               max_level=self.max_level)
        self._compatible(other)
        cap = min(self.max_level, other.max_level)
        out: dict = {}
        for n, f in self.levels.items():
            for m, g in other.levels.items():
                if n + m > cap:
                    continue
                fg = fock_product(f, g)
                out[n + m] = out[n + m] + fg if n + m in out else fg
        return FockElement(self.base, out, max_level=cap)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, FockElement) and self.base is other.base
                and self.levels == other.levels)

    def __repr__(self) -> str:
        inner = ", ".join(f"q^{n} {f!r}" for n, f in self.levels.items())
        return f"FockElement({inner or '0'})"

    def to_json(self) -> dict:
        return {"group": self.base.label,
                "max_level": self.max_level,
                "levels": {str(n): f.to_json()
                           for n, f in self.levels.items()}}
