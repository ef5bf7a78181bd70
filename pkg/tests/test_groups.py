import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathfock.catalog import catalog_group
from wreathfock.groups import (NotAHomomorphismError, NotASubgroupError,
                               Permutation, ResourceLimitError, centralizer,
                               check_group_axioms, compose_homs,
                               direct_product, group_from_permutation_generators,
                               hom_from_generator_images, subgroup)

# ---------------------------------------------------------------------------
# permutations


def test_permutation_compose_and_invert():
    p = Permutation.from_cycles(4, [(0, 1, 2)])
    q = Permutation.from_cycles(4, [(2, 3)])
    # (p*q)(i) = p(q(i))
    assert (p * q)(2) == p(3)
    assert (p * p.inverse()).is_identity
    assert p ** 3 == Permutation.identity(4)
    assert p ** -1 == p.inverse()


def test_permutation_cycles_and_sign():
    p = Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])
    assert p.cycles() == ((0, 1), (2, 3, 4))
    assert p.sign() == -1  # transposition odd, 3-cycle even
    assert Permutation.from_cycles(3, [(0, 1)]).sign() == -1
    assert Permutation.identity(3).cycles(include_fixed=True) == ((0,), (1,), (2,))


def test_permute_moves_position_i_to_pi():
    p = Permutation.from_cycles(3, [(0, 1, 2)])
    assert p.permute(("a", "b", "c")) == ("c", "a", "b")


perms4 = st.permutations(range(4)).map(lambda im: Permutation(tuple(im)))


@given(perms4, perms4, perms4)
def test_permutation_group_laws(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert (p * q).inverse() == q.inverse() * p.inverse()
    assert (p * q).sign() == p.sign() * q.sign()


@given(perms4, st.lists(st.integers(0, 9), min_size=4, max_size=4))
def test_permute_is_an_action(p, seq):
    # permuting by p then q == permuting by q*p
    q = Permutation.from_cycles(4, [(0, 3)])
    assert q.permute(p.permute(seq)) == (q * p).permute(seq)


# ---------------------------------------------------------------------------
# enumerated groups


def test_identity_is_index_zero_everywhere(S3, D12, Dic3):
    for G in (S3, D12, Dic3):
        assert G.mul(0, 3) == 3
        assert G.mul(3, 0) == 3
        assert G.inv(0) == 0


def test_catalog_orders():
    for name, order in [("trivial", 1), ("C2", 2), ("C5", 5), ("S3", 6),
                        ("S4", 24), ("D8", 8), ("D12", 12), ("Dic3", 12)]:
        assert catalog_group(name).order == order


def test_s3_class_sizes_in_rep_order(S3):
    assert S3.classes.sizes == (1, 3, 2)
    assert S3.classes.centralizer_order(1) == 2


def test_d12_has_six_classes(D12):
    assert D12.classes.num_classes == 6
    assert sorted(D12.classes.sizes) == [1, 1, 2, 2, 3, 3]


def test_dic3_element_orders(Dic3):
    # dicyclic of order 12: a has order 6, b order 4, one central involution
    orders = sorted(Dic3.element_order(i) for i in range(Dic3.order))
    assert orders == [1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6]
    gens = [Dic3.element_order(i) for i in Dic3.generator_indices]
    assert gens == [4, 2, 3]


@pytest.mark.parametrize("name", ["C2", "C6", "S3", "S4", "D8", "D12", "Dic3"])
def test_group_axioms_exhaustive(name):
    assert check_group_axioms(catalog_group(name)) == "exhaustive"


def test_class_equation(S3, D12):
    for G in (S3, D12):
        assert sum(G.classes.sizes) == G.order


def test_classes_partition_elements(S3):
    seen = set()
    for k in range(S3.classes.num_classes):
        mem = S3.classes.members(k)
        assert len(mem) == S3.classes.sizes[k]
        seen.update(mem)
    assert seen == set(range(S3.order))


def test_conjugation_preserves_class(S3):
    cls = S3.classes
    for x in range(S3.order):
        for g in range(S3.order):
            assert cls.class_of_index(S3.conj(g, x)) == cls.class_of_index(x)


def test_orbit_stabilizer(S3):
    # |class| * |centralizer| = |G|
    for x in range(S3.order):
        Z = centralizer(S3, x)
        k = S3.classes.class_of_index(x)
        assert len(Z) * S3.classes.sizes[k] == S3.order


def test_element_order_divides_group_order(D12):
    for i in range(D12.order):
        assert D12.order % D12.element_order(i) == 0


def test_enumeration_is_deterministic():
    a = catalog_group("S4")
    b = group_from_permutation_generators(
        4, [Permutation.from_cycles(4, [(0, 1)]),
            Permutation.from_cycles(4, [(0, 1, 2, 3)])], label="again")
    assert a.elements == b.elements
    assert a.classes.rep_descs == b.classes.rep_descs


def test_enumeration_cap():
    with pytest.raises(ResourceLimitError):
        group_from_permutation_generators(
            5, [Permutation.from_cycles(5, [(0, 1)]),
                Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])],
            max_order=100)


def test_cayley_table_agrees_with_native(S3):
    tbl = S3.cayley_table()
    n = S3.order
    for i in range(n):
        for j in range(n):
            assert tbl[i * n + j] == S3.mul(i, j)


# ---------------------------------------------------------------------------
# subgroups, products, homomorphisms


def test_subgroup_inclusion(S3):
    rot = S3.index_of(Permutation.from_cycles(3, [(0, 1, 2)]))
    H, incl = subgroup(S3, [0, rot, S3.inv(rot)])
    assert H.order == 3
    incl.verify()
    assert incl.is_injective() and not incl.is_surjective()


def test_subgroup_rejects_non_closed(S3):
    t = S3.index_of(Permutation.from_cycles(3, [(0, 1)]))
    u = S3.index_of(Permutation.from_cycles(3, [(1, 2)]))
    with pytest.raises(NotASubgroupError):
        subgroup(S3, [0, t, u])  # t*u is a 3-cycle, missing


def test_direct_product_structure(C2, C3):
    P, pG, pH, iG, iH = direct_product(C2, C3)
    assert P.order == 6
    assert P.classes.num_classes == 6
    assert check_group_axioms(P) == "exhaustive"
    for f in (pG, pH, iG, iH):
        f.verify()
    # projections undo inclusions
    for x in range(C2.order):
        assert pG(iG(x)) == x
        assert pH(iG(x)) == 0


def test_product_class_index_is_pair_structured(S3, C2):
    P, pG, pH, _, _ = direct_product(S3, C2)
    kH = C2.classes.num_classes
    for x in range(P.order):
        cG = S3.classes.class_of_index(pG(x))
        cH = C2.classes.class_of_index(pH(x))
        assert P.classes.class_of_index(x) == cG * kH + cH


def test_hom_from_generator_images_sign(S3, C2):
    sgn = hom_from_generator_images(S3, S3.generator_indices, C2, [1, 0],
                                    label="sgn")
    assert sgn.is_surjective() and not sgn.is_injective()
    assert len(sgn.kernel()) == 3
    idC2 = hom_from_generator_images(C2, [1], C2, [1])
    two = compose_homs(idC2, sgn)
    assert two.dom is S3 and two.cod is C2
    assert [two(x) for x in range(S3.order)] == [sgn(x) for x in range(S3.order)]


def test_hom_rejects_inconsistent_images(S3, C3):
    # a transposition cannot map to an order-3 element
    with pytest.raises(NotAHomomorphismError):
        hom_from_generator_images(S3, S3.generator_indices, C3, [1, 0])


def test_hom_rejects_non_generating(S3, C2):
    rot = S3.index_of(Permutation.from_cycles(3, [(0, 1, 2)]))
    H, _ = subgroup(S3, [0, rot, S3.inv(rot)])
    with pytest.raises(ValueError):
        hom_from_generator_images(H, [0], C2, [0])


def test_compose_requires_matching_ends(S3, C2, C3):
    sgn = hom_from_generator_images(S3, S3.generator_indices, C2, [1, 0])
    with pytest.raises(ValueError):
        compose_homs(sgn, sgn)


@settings(max_examples=25)
@given(st.integers(0, 11), st.integers(0, 11))
def test_hom_property_on_dic3(x, y):
    Dic3 = catalog_group("Dic3")
    C2 = catalog_group("C2")
    # quotient by <a>: b maps to the flip, a to nothing
    f = hom_from_generator_images(Dic3, Dic3.generator_indices, C2, [1, 0, 0])
    assert f(Dic3.mul(x, y)) == C2.mul(f(x), f(y))
