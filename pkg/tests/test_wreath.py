import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathfock.catalog import catalog_group
from wreathfock.groups import (Permutation, ResourceLimitError,
                               check_group_axioms, conjugation_orbits)
from wreathfock.wreath import (TypeMatrix, WreathElement, centralizer_order,
                               class_count_series, classes_by_type,
                               cycle_product, embed_product, fuse_class,
                               quotient_to_symmetric, type_of, wreath_group)

# ---------------------------------------------------------------------------
# type matrices


def test_type_matrix_normalizes():
    t = TypeMatrix({(2, 1): 1, (1, 0): 2})
    assert t.entries == ((1, 0, 2), (2, 1, 1))
    assert t.n == 4
    assert t.multiplicity(2, 1) == 1
    assert t.multiplicity(7, 7) == 0
    assert TypeMatrix([(2, 1, 1), (1, 0, 2)]) == t
    assert hash(TypeMatrix.single(3, 2)) == hash(TypeMatrix({(3, 2): 1}))


def test_type_matrix_rejects_bad_entries():
    with pytest.raises(ValueError):
        TypeMatrix({(0, 1): 1})
    with pytest.raises(ValueError):
        TypeMatrix({(2, -1): 1})
    with pytest.raises(ValueError):
        TypeMatrix({(2, 1): -1})
    # zero multiplicities are dropped, not an error
    assert TypeMatrix({(2, 1): 0}) == TypeMatrix({})


def test_type_matrix_add_merges_multiplicities():
    a = TypeMatrix({(1, 0): 1, (2, 1): 1})
    b = TypeMatrix({(2, 1): 2})
    assert (a + b).entries == ((1, 0, 1), (2, 1, 3))
    assert (a + b).n == a.n + b.n
    assert fuse_class(a, b) == a + b


def test_type_matrix_json():
    t = TypeMatrix({(2, 2): 1, (3, 3): 1})
    doc = t.to_json()
    assert doc == {"n": 5, "entries": [[2, 2, 1], [3, 3, 1]]}
    assert TypeMatrix.from_json(doc) == t
    with pytest.raises(ValueError):
        TypeMatrix.from_json({"n": 4, "entries": [[2, 2, 1], [3, 3, 1]]})


entry = st.tuples(st.integers(1, 4), st.integers(0, 2))
typem = st.dictionaries(entry, st.integers(1, 3), min_size=0, max_size=3) \
          .map(TypeMatrix)


@given(typem, typem, typem)
def test_type_addition_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert (a + b).n == a.n + b.n


# ---------------------------------------------------------------------------
# cycle products and types


def test_c4_five_strand_example(C4):
    g = 1  # a generator of C4
    x = WreathElement((g, g, g, g, g),
                      Permutation.from_cycles(5, [(0, 1), (2, 3, 4)]))
    t = type_of(C4, x)
    g2 = C4.mul(g, g)
    g3 = C4.mul(g2, g)
    c2 = C4.classes.class_of_index(g2)
    c3 = C4.classes.class_of_index(g3)
    assert t == TypeMatrix({(2, c2): 1, (3, c3): 1})


def test_cycle_product_is_ordered(S3):
    # non-abelian base: the product walks the cycle backwards
    a = S3.index_of(Permutation.from_cycles(3, [(0, 1)]))
    b = S3.index_of(Permutation.from_cycles(3, [(1, 2)]))
    x = WreathElement((a, b), Permutation.from_cycles(2, [(0, 1)]))
    assert cycle_product(S3, x, (0, 1)) == S3.mul(b, a)


def test_type_is_conjugation_invariant():
    G = catalog_group("S3")
    W = wreath_group(G, 2)
    for x in W.elements:
        tx = type_of(G, x)
        for g in W.elements:
            y = W.elements[W.conj(W.index_of(g), W.index_of(x))]
            assert type_of(G, y) == tx


@pytest.mark.parametrize("name,n", [("C2", 3), ("C3", 2), ("S3", 2)])
def test_types_are_exactly_the_conjugacy_classes(name, n):
    # brute-force conjugation orbits vs the type invariant
    G = catalog_group(name)
    W = wreath_group(G, n)
    class_of, rep_descs, _ = conjugation_orbits(W)
    by_type = {}
    orbit_members = [set() for _ in rep_descs]
    for i, x in enumerate(W.elements):
        by_type.setdefault(type_of(G, x), set()).add(i)
        orbit_members[class_of[i]].add(i)
    orbits = {frozenset(v) for v in orbit_members}
    assert orbits == {frozenset(v) for v in by_type.values()}
    assert len(by_type) == len(classes_by_type(G, n))


def test_wreath_group_structure(C3):
    W = wreath_group(C3, 2)
    assert W.order == 3 ** 2 * 2
    assert check_group_axioms(W) == "exhaustive"
    assert W.elements[0] == WreathElement((0, 0), Permutation.identity(2))


def test_wreath_group_is_cached(C3):
    assert wreath_group(C3, 2) is wreath_group(C3, 2)


def test_wreath_order_cap(S3):
    with pytest.raises(ResourceLimitError):
        wreath_group(S3, 4, max_order=10_000)


def test_class_equation_from_types():
    G = catalog_group("C4")
    n = 5
    order = G.order ** n * math.factorial(n)
    total = sum(order // centralizer_order(G, t)
                for t, _ in classes_by_type(G, n))
    assert total == order


def test_class_sizes_match_brute(C2):
    W = wreath_group(C2, 3)
    _, _, brute_sizes = conjugation_orbits(W)
    by_formula = Counter(W.order // centralizer_order(C2, t)
                         for t, _ in classes_by_type(C2, 3))
    assert Counter(brute_sizes) == by_formula


def test_single_cycle_centralizer_formula(S3):
    # an n-cycle over class c has centralizer of order n * |C_G(g)|
    n = 3
    for c in range(S3.classes.num_classes):
        t = TypeMatrix.single(n, c)
        assert centralizer_order(S3, t) == n * S3.classes.centralizer_order(c)


def test_centralizer_matches_brute_scan(C3):
    W = wreath_group(C3, 2)
    for t, rep in classes_by_type(C3, 2):
        i = W.index_of(rep)
        brute = sum(1 for g in range(W.order)
                    if W.mul(g, i) == W.mul(i, g))
        assert brute == centralizer_order(C3, t)


def test_class_reps_have_their_type(C4):
    for t, rep in classes_by_type(C4, 5):
        assert type_of(C4, rep) == t


def test_wreath_classes_property_agrees(C2):
    W = wreath_group(C2, 3)
    typed = classes_by_type(C2, 3)
    assert W.classes.num_classes == len(typed)
    for k, (t, rep) in enumerate(typed):
        assert W.classes.class_of_desc(rep) == k
        assert W.classes.sizes[k] == W.order // centralizer_order(C2, t)


# ---------------------------------------------------------------------------
# embeddings and quotients


def test_embed_product_is_a_homomorphism(C2):
    emb = embed_product(C2, 1, 2)
    emb.verify()
    assert emb.is_injective()
    assert emb.dom.order == 2 * 8
    assert emb.cod.order == wreath_group(C2, 3).order


def test_embedding_fuses_types(C2):
    emb = embed_product(C2, 2, 1)
    W2, W1 = wreath_group(C2, 2), wreath_group(C2, 1)
    # product elements are (index-in-W2, index-in-W1) pairs
    for i, x in enumerate(W2.elements):
        for j, y in enumerate(W1.elements):
            z = emb.map_desc((i, j))
            assert type_of(C2, z) == type_of(C2, x) + type_of(C2, y)


def test_quotient_to_symmetric(C2):
    W = wreath_group(C2, 3)
    q = quotient_to_symmetric(W)
    q.verify()
    assert q.is_surjective()
    assert q.cod.order == 6
    assert len(q.kernel()) == C2.order ** 3


# ---------------------------------------------------------------------------
# counting


def test_class_count_series_values():
    assert class_count_series(1, 6) == [1, 1, 2, 3, 5, 7, 11]
    assert class_count_series(2, 6) == [1, 2, 5, 10, 20, 36, 65]


@pytest.mark.parametrize("name,k", [("trivial", 1), ("C2", 2), ("S3", 3)])
def test_series_matches_enumeration(name, k):
    G = catalog_group(name)
    series = class_count_series(k, 5)
    counts = [len(classes_by_type(G, n)) for n in range(6)]
    assert counts == series


def test_classes_sorted_canonically(C2):
    typed = classes_by_type(C2, 3)
    keys = [t.entries for t, _ in typed]
    assert keys == sorted(keys)
