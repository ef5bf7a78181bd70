"""Command-line interface.

Exit codes: 0 success (all checks pass), 1 a verified property failed,
2 usage or input error, 3 resource cap exceeded.  All output is
deterministic: identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import ratlinalg
from .catalog import (catalog_group, is_catalog_name, load_group_file,
                      load_hom_file, hom_from_json, resolve_group)
from .fock import (DEFAULT_MAX_LEVEL, change_of_basis, graded_dimension_series,
                   kunneth_generator_identity, monomial_value)
from .golden import run_all
from .groups import (DEFAULT_MAX_ORDER, FiniteGroup, Homomorphism,
                     ResourceLimitError)
from .pullback import (build_pullback, fusion_pattern, is_conjugacy_closed,
                       verify_class_ring_decomposition)
from .wreath import TypeMatrix, centralizer_order, classes_by_type, wreath_group


def _emit(args, obj, table: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(obj, sort_keys=True,
                                    separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(table + "\n")


def _load_base(name: str) -> FiniteGroup:
    if is_catalog_name(name):
        return catalog_group(name)
    if os.path.exists(name):
        return load_group_file(name)
    raise KeyError(f"unknown group {name!r} (not a catalog name or a file)")


# ---------------------------------------------------------------------------
# group


def _group_arg(args) -> FiniteGroup:
    if args.file and args.group:
        raise ValueError("give a group name or --file, not both")
    if args.file:
        return load_group_file(args.file)
    if not args.group:
        raise ValueError("a group name or --file is required")
    return _load_base(args.group)


def cmd_group_info(args) -> int:
    G = _group_arg(args)
    doc = {"name": G.label, "order": G.order,
           "num_classes": G.classes.num_classes,
           "generator_orders": [G.element_order(i)
                                for i in G.generator_indices]}
    _emit(args, doc,
          f"group {G.label}: order {G.order}, "
          f"{G.classes.num_classes} conjugacy classes, "
          f"generator orders {doc['generator_orders']}")
    return 0


def cmd_group_classes(args) -> int:
    G = _group_arg(args)
    cls = G.classes
    rows = [{"index": k, "size": cls.sizes[k],
             "centralizer_order": cls.centralizer_order(k),
             "rep": repr(G.elements[cls.reps[k]])}
            for k in range(cls.num_classes)]
    doc = {"name": G.label, "order": G.order, "classes": rows}
    lines = [f"group {G.label}: {cls.num_classes} classes"]
    for r in rows:
        lines.append(f"  class {r['index']}: size {r['size']}, "
                     f"centralizer {r['centralizer_order']}, rep {r['rep']}")
    _emit(args, doc, "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# wreath


def cmd_wreath_classes(args) -> int:
    G = _load_base(args.base)
    typed = classes_by_type(G, args.n)
    order = G.order ** args.n * math.factorial(args.n)
    rows = []
    for k, (t, _) in enumerate(typed):
        cent = centralizer_order(G, t)
        rows.append({"index": k, "type": t.to_json(),
                     "size": order // cent, "centralizer_order": cent})
    doc = {"base": G.label, "n": args.n, "order": order,
           "num_classes": len(typed), "classes": rows}
    lines = [f"{G.label} wr S{args.n}: order {order}, {len(typed)} classes"]
    for r in rows:
        lines.append(f"  class {r['index']}: entries {r['type']['entries']}, "
                     f"size {r['size']}, centralizer {r['centralizer_order']}")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_wreath_centralizer(args) -> int:
    G = _load_base(args.base)
    t = TypeMatrix.from_json({"n": args.n, "entries": json.loads(args.type)})
    if t.n != args.n:
        raise ValueError(f"type entries sum to {t.n}, not {args.n}")
    cent = centralizer_order(G, t)
    doc = {"base": G.label, "n": args.n, "type": t.to_json(),
           "centralizer_order": cent}
    _emit(args, doc,
          f"centralizer order of type {list(map(list, t.entries))} "
          f"in {G.label} wr S{args.n}: {cent}")
    return 0


# ---------------------------------------------------------------------------
# pullback


def _trivial_hom(G: FiniteGroup, K: FiniteGroup) -> Homomorphism:
    if K.order != 1:
        raise ValueError("only maps to the trivial group can be implied; "
                         "give --alpha/--beta or a scenario file")
    return Homomorphism(G, K, index_map=lambda i: 0, label="collapse")


def _load_scenario(args):
    if args.scenario:
        with open(args.scenario) as fh:
            doc = json.load(fh)
        G = resolve_group(doc["G"])
        H = resolve_group(doc["H"])
        K = resolve_group(doc["K"])
        alpha = (hom_from_json(doc["alpha"], dom=G, cod=K)
                 if doc.get("alpha") else _trivial_hom(G, K))
        beta = (hom_from_json(doc["beta"], dom=H, cod=K)
                if doc.get("beta") else _trivial_hom(H, K))
        return G, H, K, alpha, beta
    if not (args.G and args.H and args.K):
        raise ValueError("need --scenario or all of --G/--H/--K")
    G, H, K = _load_base(args.G), _load_base(args.H), _load_base(args.K)
    alpha = (load_hom_file(args.alpha, dom=G, cod=K)
             if args.alpha else _trivial_hom(G, K))
    beta = (load_hom_file(args.beta, dom=H, cod=K)
            if args.beta else _trivial_hom(H, K))
    return G, H, K, alpha, beta


def cmd_pullback_build(args) -> int:
    G, H, K, alpha, beta = _load_scenario(args)
    pb = build_pullback(alpha, beta)
    doc = {"G": G.label, "H": H.label, "K": K.label,
           "order": pb.order,
           "num_classes": pb.carrier.classes.num_classes}
    _emit(args, doc,
          f"pullback {G.label} x_{K.label} {H.label}: order {pb.order}, "
          f"{doc['num_classes']} classes")
    return 0


def cmd_pullback_check_closed(args) -> int:
    _, _, _, alpha, beta = _load_scenario(args)
    pb = build_pullback(alpha, beta)
    closed, witness = is_conjugacy_closed(pb.incl)
    pat = fusion_pattern(pb.incl)
    doc = {"conj_closed": closed,
           "witness": [repr(w) for w in witness] if witness else None,
           "fusion_pattern": pat}
    text = f"conjugacy-closed: {closed}"
    if witness:
        text += f"\nwitness (ambient-conjugate, not sub-conjugate): {witness}"
    _emit(args, doc, text)
    return 0


def cmd_pullback_verify_iso(args) -> int:
    G, H, K, alpha, beta = _load_scenario(args)
    pb = build_pullback(alpha, beta)
    rep = verify_class_ring_decomposition(pb)
    doc = {"G": G.label, "H": H.label, "K": K.label, "order": pb.order}
    doc.update(rep.to_json())
    lines = [f"pullback {G.label} x_{K.label} {H.label}: order {pb.order}",
             f"conjugacy-closed: {rep.conj_closed}",
             f"tensor quotient dim: {rep.quotient_dim}",
             f"restriction map rank: {rep.map_rank} "
             f"(carrier has {rep.carrier_classes} classes)",
             f"class ring is the tensor product: {rep.is_isomorphism}"]
    _emit(args, doc, "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# fock


def cmd_fock_basis(args) -> int:
    G = _load_base(args.group)
    if args.level > args.max_level:
        raise ValueError(f"level {args.level} above --max-level {args.max_level}")
    rows, types = change_of_basis(G, args.level)
    d = ratlinalg.det(rows)
    doc = {"group": G.label, "level": args.level, "dimension": len(rows),
           "determinant": f"{d.numerator}/{d.denominator}",
           "invertible": d != 0}
    _emit(args, doc,
          f"level {args.level} over {G.label}: {len(rows)} generator "
          f"monomials, determinant {d}, invertible: {d != 0}")
    return 0 if d != 0 else 1


def cmd_fock_product(args) -> int:
    G = _load_base(args.group)
    mu = TypeMatrix(json.loads(args.monomial))
    if mu.n > args.max_level:
        raise ValueError(f"monomial level {mu.n} above --max-level "
                         f"{args.max_level}")
    f = monomial_value(G, mu)
    doc = {"group": G.label, "monomial": mu.to_json(), "level": mu.n,
           "values": f.to_json()["values"]}
    _emit(args, doc,
          f"monomial {list(map(list, mu.entries))} at level {mu.n} "
          f"over {G.label}:\n  " + " ".join(doc["values"]))
    return 0


def cmd_fock_kunneth(args) -> int:
    G, H = _load_base(args.G), _load_base(args.H)
    checks, failures = 0, 0
    for n in range(1, args.max_level + 1):
        for c in range(G.classes.num_classes):
            for d in range(H.classes.num_classes):
                checks += 1
                if not kunneth_generator_identity(G, H, n, c, d):
                    failures += 1
    doc = {"G": G.label, "H": H.label, "max_level": args.max_level,
           "checks": checks, "all_equal": failures == 0}
    _emit(args, doc,
          f"generator identity over {G.label} x {H.label} up to level "
          f"{args.max_level}: {checks - failures}/{checks} agree")
    return 0 if failures == 0 else 1


def cmd_fock_series(args) -> int:
    G = _load_base(args.group)
    counts, series = graded_dimension_series(G, args.max)
    doc = {"group": G.label, "max": args.max, "counts": counts,
           "series": series, "agree": counts == series}
    _emit(args, doc,
          f"class counts of {G.label} wr S_n, n <= {args.max}: "
          f"{','.join(map(str, counts))} "
          f"(series: {','.join(map(str, series))}; agree: {counts == series})")
    return 0 if counts == series else 1


# ---------------------------------------------------------------------------
# golden


def cmd_golden(args) -> int:
    results = run_all()
    doc = [{"name": name, "passed": ok, "detail": detail}
           for name, ok, detail in results]
    if args.format == "json":
        _emit(args, doc, "")
    else:
        lines = []
        for name, ok, detail in results:
            lines.append(f"{'PASS' if ok else 'FAIL'} {name}")
            lines.extend("     " + ln for ln in detail.splitlines())
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if all(ok for _, ok, _ in results) else 1


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"),
                        default="table")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help="element cap for group constructions")
    common.add_argument("--max-level", type=int, default=DEFAULT_MAX_LEVEL,
                        help="highest graded level commands may touch")

    p = argparse.ArgumentParser(
        prog="wreathfock",
        description="Exact class-function algebra on finite groups, wreath "
                    "products, pullbacks, and the graded Fock algebra.")
    sub = p.add_subparsers(dest="command", required=True)

    pg = sub.add_parser("group", help="inspect a single group")
    gsub = pg.add_subparsers(dest="subcommand", required=True)
    gi = gsub.add_parser("info", parents=[common])
    gi.add_argument("group", nargs="?",
                    help="catalog name or group JSON file")
    gi.add_argument("--file", help="group JSON file")
    gi.set_defaults(fn=cmd_group_info)
    gc = gsub.add_parser("classes", parents=[common])
    gc.add_argument("group", nargs="?")
    gc.add_argument("--file", help="group JSON file")
    gc.set_defaults(fn=cmd_group_classes)

    pw = sub.add_parser("wreath", help="wreath-product conjugacy data")
    wsub = pw.add_subparsers(dest="subcommand", required=True)
    wc = wsub.add_parser("classes", parents=[common])
    wc.add_argument("base")
    wc.add_argument("n", type=int)
    wc.set_defaults(fn=cmd_wreath_classes)
    wz = wsub.add_parser("centralizer", parents=[common])
    wz.add_argument("base")
    wz.add_argument("n", type=int)
    wz.add_argument("--type", required=True,
                    help='type entries as JSON, e.g. "[[2,2,1],[3,3,1]]"')
    wz.set_defaults(fn=cmd_wreath_centralizer)

    pp = sub.add_parser("pullback", help="fibered products and class rings")
    psub = pp.add_subparsers(dest="subcommand", required=True)
    for name, fn in (("build", cmd_pullback_build),
                     ("check-closed", cmd_pullback_check_closed),
                     ("verify-iso", cmd_pullback_verify_iso)):
        sp = psub.add_parser(name, parents=[common])
        sp.add_argument("--scenario", help="scenario JSON file")
        sp.add_argument("--G")
        sp.add_argument("--H")
        sp.add_argument("--K")
        sp.add_argument("--alpha", help="homomorphism JSON file G -> K")
        sp.add_argument("--beta", help="homomorphism JSON file H -> K")
        sp.set_defaults(fn=fn)

    pf = sub.add_parser("fock", help="the graded algebra of wreath levels")
    fsub = pf.add_subparsers(dest="subcommand", required=True)
    fb = fsub.add_parser("basis", parents=[common])
    fb.add_argument("group")
    fb.add_argument("--level", type=int, required=True)
    fb.set_defaults(fn=cmd_fock_basis)
    fp = fsub.add_parser("product", parents=[common])
    fp.add_argument("group")
    fp.add_argument("--monomial", required=True,
                    help='generator exponents as JSON triples [[r,c,m],...]')
    fp.set_defaults(fn=cmd_fock_product)
    fk = fsub.add_parser("kunneth", parents=[common])
    fk.add_argument("G")
    fk.add_argument("H")
    fk.set_defaults(fn=cmd_fock_kunneth)
    fs = fsub.add_parser("series", parents=[common])
    fs.add_argument("group")
    fs.add_argument("--max", type=int, default=6)
    fs.set_defaults(fn=cmd_fock_series)

    pgold = sub.add_parser("golden", parents=[common],
                           help="recompute all worked examples and report "
                                "pass/fail")
    pgold.set_defaults(fn=cmd_golden)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_order != DEFAULT_MAX_ORDER:
        os.environ["WREATHFOCK_MAX_ORDER"] = str(args.max_order)
    try:
        return args.fn(args)
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
