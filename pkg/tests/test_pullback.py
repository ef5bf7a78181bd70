from fractions import Fraction

import pytest

from wreathfock import ratlinalg
from wreathfock.catalog import catalog_group
from wreathfock.groups import (Permutation, hom_from_generator_images,
                               subgroup)
from wreathfock.pullback import (build_pullback, fusion_pattern,
                                 is_conjugacy_closed, n_cycle_classes_closed,
                                 n_cycle_closed_brute, restriction_map_matrix,
                                 semidirect_product_iso, tensor_over_classk,
                                 verify_class_ring_decomposition)


def _sign(S3, C2):
    return hom_from_generator_images(S3, S3.generator_indices, C2, [1, 0],
                                     label="sgn")


def _collapse(G, T):
    return hom_from_generator_images(G, G.generator_indices, T,
                                     [0] * len(G.generator_indices))


@pytest.fixture(scope="module")
def gamma(S3, C2):
    sgn = _sign(S3, C2)
    return build_pullback(sgn, sgn)


def test_sign_pullback_order_and_classes(gamma):
    assert gamma.order == 18
    assert gamma.carrier.classes.num_classes == 6
    assert gamma.product.classes.num_classes == 9


def test_pullback_membership(gamma, S3, C2):
    sgn = _sign(S3, C2)
    for i in range(gamma.order):
        g = gamma.proj_G(i)
        h = gamma.proj_H(i)
        assert sgn(g) == sgn(h)


def test_pullback_needs_common_codomain(S3, C2, C3):
    sgn = _sign(S3, C2)
    to_c3 = _collapse(C3, catalog_group("trivial"))
    with pytest.raises(ValueError):
        build_pullback(sgn, to_c3)


def test_pullback_needs_surjective_maps(S3, C2):
    sgn = _sign(S3, C2)
    non_onto = hom_from_generator_images(C2, [1], S3, [0])
    with pytest.raises(ValueError):
        build_pullback(hom_from_generator_images(S3, S3.generator_indices,
                                                 S3, S3.generator_indices),
                       non_onto)


def test_sign_pullback_not_conjugacy_closed(gamma, S3):
    closed, witness = is_conjugacy_closed(gamma.incl)
    assert not closed
    x, y = witness
    # the failure lives on pairs of 3-cycles
    assert [S3.element_order(i) for i in x] == [3, 3]
    assert [S3.element_order(i) for i in y] == [3, 3]
    # same ambient class, different carrier class (carrier descriptors are
    # ambient element indices)
    amb, sub = gamma.product, gamma.carrier
    assert amb.classes.class_of_desc(x) == amb.classes.class_of_desc(y)
    assert sub.classes.class_of_desc(amb.index_of(x)) != \
        sub.classes.class_of_desc(amb.index_of(y))


def test_restriction_matrix_shape(gamma):
    m = restriction_map_matrix(gamma.incl)
    assert len(m) == 6 and all(len(row) == 9 for row in m)
    for row in m:
        assert sum(row) == 1
    assert ratlinalg.rank(m) == 5


def test_sign_pullback_fusion_pattern(gamma):
    assert fusion_pattern(gamma.incl) == {
        "ambient_classes": 9, "sub_classes": 6,
        "empty": 4, "bijective": 4, "splitting": 1, "max_split": 2,
        "image_rank": 5, "kernel_dim": 4, "surjective": False,
    }


def test_sign_pullback_tensor_presentation(gamma):
    pres = tensor_over_classk(gamma)
    assert pres.dim_ambient == 9
    assert pres.quotient_dim == 5
    assert pres.relation_rank == 4


def test_sign_pullback_is_not_tensor_decomposable(gamma):
    rep = verify_class_ring_decomposition(gamma)
    assert not rep.conj_closed
    assert rep.quotient_dim == 5
    assert rep.map_rank == 5
    assert rep.carrier_classes == 6
    assert not rep.is_isomorphism
    doc = rep.to_json()
    assert doc["is_isomorphism"] is False and doc["witness"] is not None


def test_dihedral_dicyclic_decomposition(D12, Dic3, S3):
    r = D12.index_of(Permutation.from_cycles(6, [(0, 1, 2, 3, 4, 5)]))
    s = D12.index_of(Permutation((0, 5, 4, 3, 2, 1)))
    r2 = D12.mul(r, r)
    r3 = D12.mul(r2, r)
    c123 = S3.index_of(Permutation((1, 2, 0)))
    t23 = S3.index_of(Permutation((0, 2, 1)))
    psi1 = hom_from_generator_images(D12, [s, r3, r2], S3, [t23, 0, c123])
    psi2 = hom_from_generator_images(Dic3, Dic3.generator_indices, S3,
                                     [t23, 0, c123])
    assert psi1.is_surjective() and psi2.is_surjective()
    pb = build_pullback(psi1, psi2)
    assert pb.order == 24
    closed, witness = is_conjugacy_closed(pb.incl)
    assert closed and witness is None
    rep = verify_class_ring_decomposition(pb)
    assert rep.is_isomorphism
    assert rep.quotient_dim == rep.map_rank == rep.carrier_classes == 12


def test_trivial_k_gives_direct_product(C2, C3, trivial):
    pb = build_pullback(_collapse(C2, trivial), _collapse(C3, trivial))
    assert pb.order == 6
    rep = verify_class_ring_decomposition(pb)
    assert rep.conj_closed and rep.is_isomorphism
    assert rep.quotient_dim == 6


def test_diagonal_is_closed_and_decomposes(S3):
    ident = hom_from_generator_images(S3, S3.generator_indices, S3,
                                      S3.generator_indices)
    pb = build_pullback(ident, ident)
    assert pb.order == 6  # the diagonal copy of S3
    closed, _ = is_conjugacy_closed(pb.incl)
    assert closed
    rep = verify_class_ring_decomposition(pb)
    assert rep.is_isomorphism and rep.quotient_dim == 3


@pytest.mark.parametrize("a,b,n", [("C2", "C2", 2), ("C2", "C3", 2)])
def test_wreath_of_product_splits_as_pullback(a, b, n):
    A, B = catalog_group(a), catalog_group(b)
    pb, phi = semidirect_product_iso(A, B, n)
    assert phi.dom.order == pb.order
    assert phi.is_injective() and phi.is_surjective()
    assert pb.order == (A.order * B.order) ** n * [1, 1, 2, 6][n]


def test_n_cycle_classes_closed_matches_brute():
    A, B = catalog_group("C2"), catalog_group("C3")
    fast = n_cycle_classes_closed(A, B, 2)
    brute = n_cycle_closed_brute(A, B, 2)
    assert fast == brute
    assert len(fast) == 6  # one n-cycle class per base class of C2 x C3
    assert all(closed for _, _, closed in fast)
