"""Conjugacy in wreath products G wr S_n without enumerating elements.

An element is (parts, perm); walking each cycle of the permutation and
multiplying the parts along it gives a base-class label per cycle.  The
resulting count matrix m(cycle length, base class) is a complete conjugacy
invariant, so class lists, sizes, and centralizer orders all come from
colored partitions of n.
"""

from wreathfock import (Permutation, TypeMatrix, WreathElement, catalog_group,
                        centralizer_order, classes_by_type, type_of,
                        wreath_group)

C4 = catalog_group("C4")
g = 1  # a fixed generator of C4

# a five-strand element with a 2-cycle and a 3-cycle, every part equal to g
x = WreathElement((g, g, g, g, g),
                  Permutation.from_cycles(5, [(0, 1), (2, 3, 4)]))
t = type_of(C4, x)
print(f"type of ((g,g,g,g,g), (0 1)(2 3 4)) over C4: {t!r}")
print(f"  cycle products land in the classes of g^2 and g^3")
print(f"  centralizer order in C4 wr S5: {centralizer_order(C4, t)}")

order = C4.order ** 5 * 120
typed = classes_by_type(C4, 5)
print(f"\nC4 wr S5 has order {order} and {len(typed)} conjugacy classes;")
print(f"  class equation check: "
      f"{sum(order // centralizer_order(C4, u) for u, _ in typed) == order}")

# small enough to enumerate: compare the invariant with actual conjugation
S3 = catalog_group("S3")
W = wreath_group(S3, 2)
print(f"\n{W.label}: order {W.order}, {W.classes.num_classes} classes")
x, y = W.elements[5], W.elements[17]
same = W.classes.class_of_desc(x) == W.classes.class_of_desc(y)
print(f"  elements 5 and 17 conjugate: {same} "
      f"(types {type_of(S3, x)!r} vs {type_of(S3, y)!r})")

single = TypeMatrix.single(2, 2)
print(f"\nsingle 2-cycle over the 3-cycle class of S3: "
      f"centralizer order {centralizer_order(S3, single)} = 2 * 3")
