"""Tour of the finite-group layer: enumerated groups, conjugacy classes,
centralizers, subgroups, products, and homomorphisms.

Every group is a table of opaque element indices with index 0 the identity,
so the same machinery drives permutation groups, abstractly presented
groups, and the wreath/pullback constructions built on top of them.
"""

from wreathfock import (Permutation, catalog_group, centralizer,
                        direct_product, hom_from_generator_images, subgroup)

S3 = catalog_group("S3")
print(f"{S3.label}: order {S3.order}")
for k in range(S3.classes.num_classes):
    rep = S3.elements[S3.classes.reps[k]]
    print(f"  class {k}: size {S3.classes.sizes[k]}, "
          f"centralizer order {S3.classes.centralizer_order(k)}, rep {rep!r}")

rot = S3.index_of(Permutation.from_cycles(3, [(0, 1, 2)]))
print(f"\ncentralizer of a 3-cycle: {len(centralizer(S3, rot))} elements")

# the cyclic subgroup generated by the 3-cycle, with its inclusion map
H, incl = subgroup(S3, [0, rot, S3.inv(rot)])
print(f"subgroup <(0 1 2)>: order {H.order}, "
      f"injective inclusion: {incl.is_injective()}")

# the sign map, built from generator images and verified on all pairs
C2 = catalog_group("C2")
sgn = hom_from_generator_images(S3, S3.generator_indices, C2, [1, 0],
                                label="sign")
print(f"sign map kernel: {[S3.elements[i] for i in sgn.kernel()]!r}")

P, pG, pH, _, _ = direct_product(C2, catalog_group("C3"))
print(f"\n{P.label}: order {P.order}, {P.classes.num_classes} classes "
      "(pairs of factor classes)")

# Dic3 is presented by a multiplication rule rather than permutations;
# nothing downstream can tell the difference
Dic3 = catalog_group("Dic3")
orders = sorted(Dic3.element_order(i) for i in range(Dic3.order))
print(f"{Dic3.label}: element orders {orders}")
