"""Pullback (fibered) groups and the decomposition of their class rings.

Given surjections alpha: G -> K and beta: H -> K, the pullback is the
subgroup Gamma = {(g, h) : alpha(g) = beta(h)} of G x H, of order
|G| |H| / |K|.  The main theorem realized here: when Gamma is
conjugacy-closed in G x H, restriction of class functions induces a ring
isomorphism  Class(G) (x)_{Class(K)} Class(H)  ->  Class(Gamma),
which the code verifies by exact rank computations in the indicator bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import ratlinalg
from .classfun import indicator, pullback_along
from .groups import (FiniteGroup, Homomorphism, compose_homs, direct_product,
                     subgroup)
from .wreath import (TypeMatrix, WreathElement, WreathGroup, type_of,
                     wreath_group, quotient_to_symmetric)


@dataclass
class PullbackGroup:
    """Carrier and structure maps of a pullback G x_K H."""
    G: FiniteGroup
    H: FiniteGroup
    K: FiniteGroup
    alpha: Homomorphism
    beta: Homomorphism
    product: FiniteGroup
    carrier: FiniteGroup
    incl: Homomorphism        # carrier -> product
    proj_G: Homomorphism      # carrier -> G
    proj_H: Homomorphism      # carrier -> H

    @property
    def order(self) -> int:
        return self.carrier.order


def build_pullback(alpha: Homomorphism, beta: Homomorphism,
                   label: str | None = None) -> PullbackGroup:
    """Construct {(g, h) : alpha(g) = beta(h)} inside G x H.

    Both maps must land in the same group and be surjective; the carrier
    order is checked against |G| |H| / |K|.
    """
    if alpha.cod is not beta.cod:
        raise ValueError("alpha and beta must land in the same group")
    if not alpha.is_surjective() or not beta.is_surjective():
        raise ValueError("pullback needs surjective structure maps")
    G, H, K = alpha.dom, beta.dom, alpha.cod
    P, pG, pH, _, _ = direct_product(G, H)
    a, b = alpha.images, beta.images
    members = [i for i, (x, y) in enumerate(P.elements) if a[x] == b[y]]
    expected = G.order * H.order // K.order
    carrier, incl = subgroup(P, members,
                             label=label or f"({G.label} x_{K.label} {H.label})")
    if carrier.order != expected:
        raise AssertionError(
            f"pullback order {carrier.order} != |G||H|/|K| = {expected}")
    proj_G = compose_homs(pG, incl)
    proj_H = compose_homs(pH, incl)
    if carrier.order ** 2 <= 500_000:
        proj_G.verify()
        proj_H.verify()
    return PullbackGroup(G, H, K, alpha, beta, P, carrier, incl,
                         proj_G, proj_H)


# ---------------------------------------------------------------------------
# conjugacy closedness


def is_conjugacy_closed(incl: Homomorphism):
    """Whether every subgroup class is the full intersection of its ambient
    class with the subgroup: [x]_sub == [x]_amb ∩ sub for all x.

    Returns (True, None) or (False, (x, y)) with a witness pair of ambient
    descriptors: conjugate in the ambient group, both inside the subgroup,
    not conjugate there.
    """
    sub, amb = incl.dom, incl.cod
    sub_classes, amb_classes = sub.classes, amb.classes
    in_sub = {}     # ambient index -> sub class index
    for i in range(sub.order):
        in_sub[incl(i)] = sub_classes.class_of_index(i)
    amb_of_sub_class = [amb_classes.class_of_index(incl(r))
                        for r in sub_classes.reps]
    members: dict[int, list[int]] = {}
    for a in set(amb_of_sub_class):
        members[a] = amb_classes.members(a)
    for j, a in enumerate(amb_of_sub_class):
        for y in members[a]:
            jy = in_sub.get(y)
            if jy is not None and jy != j:
                x = amb.elements[incl(sub_classes.reps[j])]
                return False, (x, amb.elements[y])
    return True, None


def restriction_map_matrix(incl: Homomorphism):
    """0/1 matrix of class containment: entry (j, i) is 1 when subgroup
    class j lies inside ambient class i.  Every row sums to 1."""
    sub, amb = incl.dom, incl.cod
    amb_classes = amb.classes
    rows = []
    for rd in sub.classes.rep_descs:
        a = amb_classes.class_of_desc(incl.map_desc(rd))
        row = [Fraction(0)] * amb_classes.num_classes
        row[a] = Fraction(1)
        rows.append(row)
    return rows


def fusion_pattern(incl: Homomorphism) -> dict[str, int]:
    """How subgroup classes sit inside ambient classes: counts of ambient
    classes containing 0, 1, or >= 2 subgroup classes, plus the rank of the
    restriction map Class(amb) -> Class(sub) in the indicator bases."""
    m = restriction_map_matrix(incl)
    namb = incl.cod.classes.num_classes
    hits = [0] * namb
    for row in m:
        hits[row.index(Fraction(1))] += 1
    rank = ratlinalg.rank(m)
    return {
        "ambient_classes": namb,
        "sub_classes": len(m),
        "empty": sum(1 for h in hits if h == 0),
        "bijective": sum(1 for h in hits if h == 1),
        "splitting": sum(1 for h in hits if h >= 2),
        "max_split": max(hits) if hits else 0,
        "image_rank": rank,
        "kernel_dim": namb - rank,
        "surjective": rank == len(m),
    }


# ---------------------------------------------------------------------------
# the tensor presentation and the decomposition theorem


@dataclass
class TensorPresentation:
    """Class(G) (x)_{Class(K)} Class(H) presented over the indicator basis
    pairs: the ambient space Class(G) (x) Class(H) modulo the relations
    alpha*(xi) rho (x) gamma - rho (x) beta*(xi) gamma."""
    dim_ambient: int
    relations: list
    relation_rank: int
    quotient_dim: int


def tensor_over_classk(pb: PullbackGroup) -> TensorPresentation:
    G, H, K = pb.G, pb.H, pb.K
    kG = G.classes.num_classes
    kH = H.classes.num_classes
    kK = K.classes.num_classes
    alpha_star = [pullback_along(indicator(K, x), pb.alpha).values
                  for x in range(kK)]
    beta_star = [pullback_along(indicator(K, x), pb.beta).values
                 for x in range(kK)]
    relations = []
    for x in range(kK):
        u, v = alpha_star[x], beta_star[x]
        for rho in range(kG):
            for gam in range(kH):
                # (alpha*(xi) * e_rho) (x) e_gam  -  e_rho (x) (beta*(xi) * e_gam)
                rel = [Fraction(0)] * (kG * kH)
                rel[rho * kH + gam] += u[rho]
                rel[rho * kH + gam] -= v[gam]
                relations.append(rel)
    rr = ratlinalg.rank(relations)
    return TensorPresentation(kG * kH, relations, rr, kG * kH - rr)


@dataclass
class DecompositionReport:
    conj_closed: bool
    witness: Optional[tuple]
    quotient_dim: int
    map_rank: int
    carrier_classes: int
    is_isomorphism: bool

    def to_json(self) -> dict:
        return {"conj_closed": self.conj_closed,
                "witness": [repr(w) for w in self.witness] if self.witness else None,
                "quotient_dim": self.quotient_dim,
                "map_rank": self.map_rank,
                "carrier_classes": self.carrier_classes,
                "is_isomorphism": self.is_isomorphism}


def verify_class_ring_decomposition(pb: PullbackGroup) -> DecompositionReport:
    """Check whether restriction gives Class(G) (x)_{Class(K)} Class(H)
    ~ Class(Gamma): builds the map on indicator pairs, confirms the
    relations die, and compares exact ranks."""
    G, H = pb.G, pb.H
    kG = G.classes.num_classes
    kH = H.classes.num_classes
    kC = pb.carrier.classes.num_classes
    images = []
    for rho in range(kG):
        f = pullback_along(indicator(G, rho), pb.proj_G)
        for gam in range(kH):
            g = pullback_along(indicator(H, gam), pb.proj_H)
            images.append((f * g).values)
    pres = tensor_over_classk(pb)
    for rel in pres.relations:
        out = [Fraction(0)] * kC
        for idx, coef in enumerate(rel):
            if coef:
                for t in range(kC):
                    out[t] += coef * images[idx][t]
        if any(out):
            raise AssertionError("tensor relation does not vanish on the carrier")
    map_rank = ratlinalg.rank(images)
    closed, witness = is_conjugacy_closed(pb.incl)
    iso = (map_rank == kC and pres.quotient_dim == map_rank)
    return DecompositionReport(closed, witness, pres.quotient_dim,
                               map_rank, kC, iso)


# ---------------------------------------------------------------------------
# wreath specialization: (A x B) wr S_n as a pullback over S_n


def semidirect_product_iso(A: FiniteGroup, B: FiniteGroup, n: int):
    """(A x B) wr S_n ~ A_n x_{S_n} B_n via ((a, b), s) -> ((a, s), (b, s)).

    Builds the pullback of the two permutation-part quotients and the
    explicit map, verifies it is a bijective homomorphism, and returns
    (pb, phi).
    """
    AB = direct_product(A, B)[0]
    W = wreath_group(AB, n)
    An, Bn = wreath_group(A, n), wreath_group(B, n)
    pb = build_pullback(quotient_to_symmetric(An), quotient_to_symmetric(Bn))
    P = pb.product
    pairs = AB.elements

    def split(d: WreathElement):
        aparts = tuple(pairs[p][0] for p in d.parts)
        bparts = tuple(pairs[p][1] for p in d.parts)
        ia = An.index_of(WreathElement(aparts, d.perm))
        ib = Bn.index_of(WreathElement(bparts, d.perm))
        return P.index_of((ia, ib))

    phi = Homomorphism(W, pb.carrier, desc_map=split, label="wreath split")
    if W.order ** 2 <= 500_000:
        phi.verify()
    else:
        phi.verify(sample=20_000)
    if not phi.is_injective() or W.order != pb.carrier.order:
        raise AssertionError("wreath split map is not bijective")
    return pb, phi


def n_cycle_classes_closed(A: FiniteGroup, B: FiniteGroup, n: int):
    """For every class of (A x B) wr S_n whose permutation part is a single
    n-cycle, decide whether it is closed in A_n x B_n, by type arithmetic:
    the class is closed iff no other class projects to the same pair of
    types.  Returns a list of (class_index, type, closed)."""
    AB = direct_product(A, B)[0]
    W = wreath_group(AB, n)
    kB = B.classes.num_classes

    def project(t: TypeMatrix):
        ca: dict = {}
        cb: dict = {}
        for r, c, m in t.entries:
            ka = (r, c // kB)
            kb = (r, c % kB)
            ca[ka] = ca.get(ka, 0) + m
            cb[kb] = cb.get(kb, 0) + m
        return TypeMatrix(ca), TypeMatrix(cb)

    projections = [project(t) for t in W.types]
    out = []
    for idx, t in enumerate(W.types):
        if len(t.entries) == 1 and t.entries[0][0] == n and t.entries[0][2] == 1:
            same = [j for j, p in enumerate(projections) if p == projections[idx]]
            out.append((idx, t, same == [idx]))
    return out


def n_cycle_closed_brute(A: FiniteGroup, B: FiniteGroup, n: int):
    """Brute-force oracle for `n_cycle_classes_closed`: conjugate each
    embedded n-cycle representative by ambient generators to exhaust its
    A_n x B_n class, then compare the members lying in (A x B) wr S_n
    against the type-defined class."""
    AB = direct_product(A, B)[0]
    W = wreath_group(AB, n)
    An, Bn = wreath_group(A, n), wreath_group(B, n)
    amb = direct_product(An, Bn)[0]
    pair_index = {p: i for i, p in enumerate(AB.elements)}
    pairs = AB.elements

    def embed(d: WreathElement) -> tuple:
        aparts = tuple(pairs[p][0] for p in d.parts)
        bparts = tuple(pairs[p][1] for p in d.parts)
        return (An.index_of(WreathElement(aparts, d.perm)),
                Bn.index_of(WreathElement(bparts, d.perm)))

    def joint(desc: tuple) -> WreathElement | None:
        xa, xb = An.elements[desc[0]], Bn.elements[desc[1]]
        if xa.perm != xb.perm:
            return None
        parts = tuple(pair_index[(a, b)] for a, b in zip(xa.parts, xb.parts))
        return WreathElement(parts, xa.perm)

    gens = list(amb.generator_indices)
    ginv = [amb.inv(g) for g in gens]
    out = []
    for idx, t in enumerate(W.types):
        if not (len(t.entries) == 1 and t.entries[0][0] == n
                and t.entries[0][2] == 1):
            continue
        seed = amb.index_of(embed(W.classes.rep_descs[idx]))
        orbit = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for x in frontier:
                for g, gi in zip(gens, ginv):
                    y = amb.mul(g, amb.mul(x, gi))
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        closed = True
        for y in orbit:
            w = joint(amb.elements[y])
            if w is not None and W.classes.class_of_desc(w) != idx:
                closed = False
                break
        out.append((idx, t, closed))
    return out
