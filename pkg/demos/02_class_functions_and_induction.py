"""Class functions over exact rationals: the indicator basis, the invariant
inner product, restriction, and Frobenius induction computed two
independent ways.
"""

from wreathfock import (Permutation, catalog_group, indicator,
                        indicator_basis, induce, inner_product, one, restrict,
                        subgroup)

S3 = catalog_group("S3")
rot = S3.index_of(Permutation.from_cycles(3, [(0, 1, 2)]))
C3, incl = subgroup(S3, [0, rot, S3.inv(rot)])

print("indicator basis of Class(S3):")
for k, e in enumerate(indicator_basis(S3)):
    print(f"  e_{k} values {[str(v) for v in e.values]}, "
          f"<e_{k}, e_{k}> = {inner_product(e, e)}")

f = indicator(S3, 2)              # the 3-cycle class
res = restrict(f, incl)
print(f"\nrestriction of the 3-cycle indicator to <(0 1 2)>: "
      f"{[str(v) for v in res.values]}")

g = indicator(C3, 1)              # one of the two 3-cycles inside
print("\ninduction of a single 3-cycle indicator, two ways:")
by_fusion = induce(g, incl, strategy="fusion")
by_elements = induce(g, incl, strategy="elements")
print(f"  class-fusion formula : {[str(v) for v in by_fusion.values]}")
print(f"  element-sum formula  : {[str(v) for v in by_elements.values]}")
assert by_fusion == by_elements

trivial, t_incl = subgroup(S3, [0])
reg = induce(one(trivial), t_incl)
print(f"\ninduction from the trivial subgroup (the regular class function): "
      f"{[str(v) for v in reg.values]}")

print("\nFrobenius reciprocity <Ind f, g> == <f, Res g> on all basis pairs:")
ok = all(inner_product(induce(a, incl), b) ==
         inner_product(a, restrict(b, incl))
         for a in indicator_basis(C3) for b in indicator_basis(S3))
print(f"  holds exactly: {ok}")
