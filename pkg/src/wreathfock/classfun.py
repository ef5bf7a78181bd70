"""Exact class-function algebra on finite groups.

A class function is a rational vector indexed by the conjugacy classes of a
group, with the class indicators as the working basis.  All arithmetic is
over `fractions.Fraction`; nothing here is numeric-approximate, and no
irreducible characters are ever computed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import ratlinalg
from .groups import FiniteGroup, Homomorphism


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class ClassFunction:
    """Rational-valued function, constant on conjugacy classes."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values: Iterable):
        self.group = group
        vals = tuple(_frac(v) for v in values)
        if len(vals) != group.classes.num_classes:
            raise ValueError(
                f"{group.label} has {group.classes.num_classes} classes, "
                f"got {len(vals)} values")
        self.values = vals

    # -- evaluation -----------------------------------------------------

    def at_class(self, k: int) -> Fraction:
        return self.values[k]

    def at_index(self, i: int) -> Fraction:
        return self.values[self.group.classes.class_of_index(i)]

    def at_desc(self, desc) -> Fraction:
        return self.values[self.group.classes.class_of_desc(desc)]

    def support(self) -> list[int]:
        return [k for k, v in enumerate(self.values) if v != 0]

    # -- arithmetic -----------------------------------------------------

    def _same_group(self, other: "ClassFunction"):
        if self.group is not other.group:
            raise ValueError("class functions live on different groups")

    def __add__(self, other):
        self._same_group(other)
        return ClassFunction(self.group,
                             (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        self._same_group(other)
        return ClassFunction(self.group,
                             (a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return ClassFunction(self.group, (-a for a in self.values))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._same_group(other)
            return ClassFunction(
                self.group, (a * b for a, b in zip(self.values, other.values)))
        return ClassFunction(self.group, (a * _frac(other) for a in self.values))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ClassFunction)
                and self.group is other.group
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.group), self.values))

    def __repr__(self) -> str:
        vals = ", ".join(str(v) for v in self.values)
        return f"ClassFunction({self.group.label}: [{vals}])"

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"group": self.group.label,
                "values": [f"{v.numerator}/{v.denominator}"
                           for v in self.values]}

    @classmethod
    def from_json(cls, doc: dict, group: FiniteGroup) -> "ClassFunction":
        return cls(group, (Fraction(s) for s in doc["values"]))


def zero(G: FiniteGroup) -> ClassFunction:
    return ClassFunction(G, [0] * G.classes.num_classes)


def one(G: FiniteGroup) -> ClassFunction:
    return ClassFunction(G, [1] * G.classes.num_classes)


def indicator(G: FiniteGroup, k: int) -> ClassFunction:
    vals = [Fraction(0)] * G.classes.num_classes
    vals[k] = Fraction(1)
    return ClassFunction(G, vals)


def indicator_basis(G: FiniteGroup) -> list[ClassFunction]:
    return [indicator(G, k) for k in range(G.classes.num_classes)]


class ClassFunSpace:
    """The space of class functions of a group in its indicator basis."""

    def __init__(self, group: FiniteGroup):
        self.group = group

    @property
    def dim(self) -> int:
        return self.group.classes.num_classes

    def basis(self) -> list[ClassFunction]:
        return indicator_basis(self.group)


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """<f, g> = (1/|G|) sum_x f(x) g(x), summed class-by-class.

    Values are rational, so no conjugation enters.
    """
    f._same_group(g)
    sizes = f.group.classes.sizes
    total = sum((size * a * b
                 for size, a, b in zip(sizes, f.values, g.values)),
                Fraction(0))
    return total / f.group.order


def span_rank(funcs: Sequence[ClassFunction]):
    """Rank of a family of class functions and indices of a spanning
    subfamily (deterministic first-come selection)."""
    return ratlinalg.span_select([f.values for f in funcs])


# ---------------------------------------------------------------------------
# transport along homomorphisms


def pullback_along(f: ClassFunction, h: Homomorphism) -> ClassFunction:
    """f o h, a class function on the domain of h.

    Pulling back is a ring homomorphism for the pointwise product.
    """
    if f.group is not h.cod:
        raise ValueError("function lives on a different group than h lands in")
    dom_classes = h.dom.classes
    cod_classes = h.cod.classes
    vals = [f.values[cod_classes.class_of_desc(h.map_desc(rd))]
            for rd in dom_classes.rep_descs]
    return ClassFunction(h.dom, vals)


def restrict(f: ClassFunction, incl: Homomorphism) -> ClassFunction:
    """Restriction along an injective homomorphism (subgroup inclusion)."""
    if not incl.is_injective():
        raise ValueError("restriction needs an injective homomorphism")
    return pullback_along(f, incl)


def induce(f: ClassFunction, incl: Homomorphism,
           strategy: str = "fusion") -> ClassFunction:
    """Frobenius induction of f along an injective homomorphism H -> G.

    (Ind f)(g) = (1/|H|) sum over r in G with r^-1 g r in H of f(r^-1 g r).

    Strategies, interchangeable and agreeing exactly:

    * ``"elements"``: the literal element sum above (enumerates G; the
      reference oracle).
    * ``"fusion"``: (Ind f)(g) = |C_G(g)| * sum over H-classes [h] fusing
      into [g] of f(h) / |C_H(h)|; needs only class data of G, never an
      element sweep, so it scales to large ambient groups.
    """
    H, G = incl.dom, incl.cod
    if f.group is not H:
        raise ValueError("function lives on a different group than incl's domain")
    if strategy == "fusion":
        g_classes = G.classes
        acc = [Fraction(0)] * g_classes.num_classes
        h_classes = H.classes
        for j, rd in enumerate(h_classes.rep_descs):
            a = g_classes.class_of_desc(incl.map_desc(rd))
            cent_h = H.order // h_classes.sizes[j]
            acc[a] += f.values[j] / cent_h
        vals = [G.order // g_classes.sizes[a] * acc[a]
                for a in range(g_classes.num_classes)]
        return ClassFunction(G, vals)
    if strategy == "elements":
        if not incl.is_injective():
            raise ValueError("induction needs an injective homomorphism")
        preimage = {incl(i): i for i in range(H.order)}
        g_classes = G.classes
        h_classes = H.classes
        vals = []
        for y in g_classes.reps:
            total = Fraction(0)
            for r in range(G.order):
                z = G.mul(G.mul(G.inv(r), y), r)
                j = preimage.get(z)
                if j is not None:
                    total += f.values[h_classes.class_of_index(j)]
            vals.append(total / H.order)
        return ClassFunction(G, vals)
    raise ValueError(f"unknown induction strategy: {strategy}")


def external_product(f: ClassFunction, g: ClassFunction,
                     P: FiniteGroup) -> ClassFunction:
    """f x g on a direct product group built by `direct_product`, whose
    classes are lexicographic pairs of factor classes."""
    kf = f.group.classes.num_classes
    kg = g.group.classes.num_classes
    if P.classes.num_classes != kf * kg:
        raise ValueError("P does not look like the product of the factors")
    vals = [a * b for a in f.values for b in g.values]
    return ClassFunction(P, vals)
