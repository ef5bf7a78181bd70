"""Wreath levels of a product group against products of wreath levels.

Two compatibility statements, both checkable exactly:

* generator identity: restricting an external product of single-cycle
  generators along (G x H) wr S_n -> (G wr S_n) x (H wr S_n) gives the
  single-cycle generator of the product group, color pair by color pair;
* the wreath product of a direct product splits as a fibered product
  of the factor wreath products over S_n, matching class data.

The class-count series ties it together: levels of G x H are counted by
the partition-product series with (number of G classes) x (number of H
classes) colors.
"""

from wreathfock import (catalog_group, class_count_series, direct_product,
                        graded_dimension_series, kunneth_generator_identity,
                        n_cycle_classes_closed, semidirect_product_iso)

C2, C3 = catalog_group("C2"), catalog_group("C3")

print("generator identity over C2 x C3:")
for n in (1, 2, 3):
    ok = all(kunneth_generator_identity(C2, C3, n, c, d)
             for c in range(2) for d in range(3))
    print(f"  level {n}: all 6 color pairs agree: {ok}")

pb, phi = semidirect_product_iso(C2, C3, 2)
print(f"\n(C2 x C3) wr S2 -> {pb.carrier.label}: "
      f"bijective homomorphism onto order {pb.order}")

report = n_cycle_classes_closed(C2, C3, 2)
print(f"single 2-cycle classes closed in the ambient product: "
      f"{all(closed for _, _, closed in report)} "
      f"({len(report)} classes checked)")

P = direct_product(C2, C3)[0]
counts, series = graded_dimension_series(P, 6)
print(f"\nclass counts of (C2 x C3) wr S_n, n <= 6:")
print(f"  by type enumeration : {counts}")
print(f"  by product formula  : {series}")
print(f"  six colors each way : {series == class_count_series(6, 6)}")
