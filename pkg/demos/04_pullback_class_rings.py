"""Fibered products of groups and when their class ring splits as a tensor
product over the common quotient.

Two worked scenarios bundled as JSON files:

* s3xs3.json — S3 x_{C2} S3 along the sign map twice.  The subgroup is NOT
  conjugacy-closed in S3 x S3 (two diagonal-ish 3-cycle pairs fuse), and the
  class ring is strictly smaller than the tensor product.
* d12_dic3.json — D12 x_{S3} Dic3 along two explicit surjections.  Here the
  pullback IS conjugacy-closed and the tensor decomposition is exact.
"""

import json
from pathlib import Path

from wreathfock import build_pullback, fusion_pattern, is_conjugacy_closed, \
    verify_class_ring_decomposition
from wreathfock.catalog import hom_from_json, resolve_group

HERE = Path(__file__).resolve().parent


def load(name):
    doc = json.loads((HERE / "scenarios" / name).read_text())
    G, H, K = (resolve_group(doc[k]) for k in ("G", "H", "K"))
    alpha = hom_from_json(doc["alpha"], dom=G, cod=K)
    beta = hom_from_json(doc["beta"], dom=H, cod=K)
    return build_pullback(alpha, beta)


for name in ("s3xs3.json", "d12_dic3.json"):
    pb = load(name)
    closed, witness = is_conjugacy_closed(pb.incl)
    rep = verify_class_ring_decomposition(pb)
    print(f"{pb.carrier.label}: order {pb.order}, "
          f"{rep.carrier_classes} classes")
    print(f"  conjugacy-closed: {closed}" +
          (f", witness {witness}" if witness else ""))
    print(f"  fusion pattern: {fusion_pattern(pb.incl)}")
    print(f"  tensor quotient dim {rep.quotient_dim}, "
          f"restriction rank {rep.map_rank} "
          f"=> isomorphism: {rep.is_isomorphism}\n")
