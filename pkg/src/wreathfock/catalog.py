"""Built-in group catalog and JSON (de)serialization of groups and maps.

Catalog identifiers: ``trivial``, ``C<n>`` (cyclic), ``S<n>`` (symmetric),
``D<2n>`` (dihedral of order 2n, n >= 3), and ``Dic3`` (the order-12 group
with presentation a^6 = 1, b^2 = a^3, b a b^-1 = a^-1, generated by three
elements of orders 4, 2, 3).

Group files are JSON ``{"name", "degree", "generators": [[int, ...], ...]}``
with 0-based permutation image arrays; homomorphism files are
``{"from", "to", "generator_images"}`` where each image is either a
permutation image array (permutation codomains) or an element index.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache

from .groups import (FiniteGroup, Homomorphism, Permutation,
                     group_from_permutation_generators,
                     hom_from_generator_images)

_CYCLIC = re.compile(r"^C(\d+)$")
_SYMMETRIC = re.compile(r"^S(\d+)$")
_DIHEDRAL = re.compile(r"^D(\d+)$")


@lru_cache(maxsize=None)
def catalog_group(name: str) -> FiniteGroup:
    """The built-in group with the given identifier (cached, so repeated
    lookups share one instance)."""
    if name == "trivial":
        return group_from_permutation_generators(1, [], label="trivial")
    if name == "Dic3":
        return _dic3()
    m = _CYCLIC.match(name)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ValueError(f"bad cyclic order: {name}")
        gens = [] if n == 1 else [Permutation.from_cycles(n, [tuple(range(n))])]
        return group_from_permutation_generators(n, gens, label=name)
    m = _SYMMETRIC.match(name)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ValueError(f"bad symmetric degree: {name}")
        if n == 1:
            gens = []
        elif n == 2:
            gens = [Permutation.from_cycles(2, [(0, 1)])]
        else:
            gens = [Permutation.from_cycles(n, [(0, 1)]),
                    Permutation.from_cycles(n, [tuple(range(n))])]
        return group_from_permutation_generators(n, gens, label=name)
    m = _DIHEDRAL.match(name)
    if m:
        order = int(m.group(1))
        if order % 2 or order < 6:
            raise ValueError(f"dihedral names are D<2n> with n >= 3: {name}")
        n = order // 2
        rot = Permutation.from_cycles(n, [tuple(range(n))])
        refl = Permutation((n - i) % n for i in range(n))
        return group_from_permutation_generators(n, [rot, refl], label=name)
    raise KeyError(f"unknown catalog group: {name}")


def _dic3() -> FiniteGroup:
    # descriptors (i, j) = a^i b^j with i mod 6, j mod 2
    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        i = i1 + (-i2 if j1 else i2) + (3 if j1 and j2 else 0)
        return (i % 6, j1 ^ j2)

    def inv(x):
        i, j = x
        return ((i + 3) % 6, 1) if j else ((-i) % 6, 0)

    elements = [(i, j) for j in (0, 1) for i in range(6)]
    # b, a^3, a^2: orders 4, 2, 3
    return FiniteGroup("Dic3", elements, mul, inv_desc=inv,
                       generators=[(0, 1), (3, 0), (2, 0)])


def is_catalog_name(name: str) -> bool:
    try:
        catalog_group(name)
        return True
    except (KeyError, ValueError):
        return False


# ---------------------------------------------------------------------------
# group files


def group_to_json(G: FiniteGroup) -> dict:
    gens = [G.elements[i] for i in G.generator_indices]
    if not all(isinstance(g, Permutation) for g in gens):
        raise ValueError("only permutation groups serialize to group files")
    degree = gens[0].degree if gens else 1
    return {"name": G.label, "degree": degree,
            "generators": [list(g.images) for g in gens]}


def group_from_json(doc: dict) -> FiniteGroup:
    try:
        name = doc["name"]
        degree = int(doc["degree"])
        gens = [Permutation(img) for img in doc["generators"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ValueError(f"bad group definition: {e}") from e
    return group_from_permutation_generators(degree, gens, label=name)


def load_group_file(path) -> FiniteGroup:
    with open(path) as fh:
        return group_from_json(json.load(fh))


def resolve_group(spec, registry: dict | None = None) -> FiniteGroup:
    """Group from a catalog name, a registry key, an inline definition dict,
    or a {"file": path} reference."""
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, str):
        if registry and spec in registry:
            return registry[spec]
        return catalog_group(spec)
    if isinstance(spec, dict):
        if "file" in spec:
            return load_group_file(spec["file"])
        return group_from_json(spec)
    raise ValueError(f"cannot interpret group reference: {spec!r}")


# ---------------------------------------------------------------------------
# homomorphism files


def _image_index(cod: FiniteGroup, entry) -> int:
    if isinstance(entry, list):
        return cod.index_of(Permutation(entry))
    if isinstance(entry, int):
        return entry
    raise ValueError(f"bad generator image: {entry!r}")


def hom_from_json(doc: dict, registry: dict | None = None,
                  dom: FiniteGroup | None = None,
                  cod: FiniteGroup | None = None) -> Homomorphism:
    """Homomorphism from generator images on the domain's stored generators.

    The map is extended along words and verified on all pairs, exactly as
    `hom_from_generator_images` does.
    """
    dom = dom if dom is not None else resolve_group(doc["from"], registry)
    cod = cod if cod is not None else resolve_group(doc["to"], registry)
    entries = doc["generator_images"]
    gens = dom.generator_indices
    if len(entries) != len(gens):
        raise ValueError(
            f"{dom.label} has {len(gens)} stored generators, "
            f"got {len(entries)} images")
    images = [_image_index(cod, e) for e in entries]
    return hom_from_generator_images(dom, gens, cod, images,
                                     label=doc.get("label", ""))


def load_hom_file(path, registry=None, dom=None, cod=None) -> Homomorphism:
    with open(path) as fh:
        return hom_from_json(json.load(fh), registry, dom, cod)
