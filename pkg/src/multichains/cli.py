"""Command-line front end.

Every subcommand prints one JSON document (or a plain-text summary) and
exits 0 iff all checks it performs pass, 1 if some check fails, 2 on bad
input and 3 when a size guard refuses the computation.
"""
from __future__ import annotations

import argparse
import itertools
import json
import random
import sys

from . import corpus
from .complexes import (
    DEFAULT_MAX_FACES,
    ComplexSizeError,
    count_distinct_graphs,
    multichain_complex,
    multichain_graph,
)
from .geometry import (
    image_point,
    preimage,
    random_interior_point,
    subdivision_certificate,
    tableau_is_valid,
)
from .homology import reduced_homology
from .homotopy import (
    check_closure,
    closure_cl,
    closure_image_isomorphism,
    fiber_complex,
    muhle_closure,
    muhle_order,
    prime_order,
    support_map_is_monotone,
)
from .poset import Poset, PosetError, longest_chain_length, maximal_chains, order_complex, read_poset
from .relations import (
    DEFAULT_MAX_TRIPLES,
    IndexMap,
    OracleSizeError,
    Relation,
    all_index_maps,
    enumerate_script_I,
    is_partial_order_map,
    is_reflexive_map,
    is_transitive_map,
    oracle_check_axioms,
    parse_kappa,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# argument handling


def load_poset(args) -> Poset:
    if args.corpus:
        try:
            return corpus.get(args.corpus)
        except KeyError as e:
            raise InputError(e.args[0]) from None
    if not args.poset:
        raise InputError("one of --poset or --corpus is required")
    try:
        return read_poset(args.poset)
    except OSError as e:
        raise InputError(f"cannot read {args.poset}: {e.strerror}") from None


def select_maps(choice: str | None, r: int, default: str = "normalized") -> list:
    """Index maps named by ``--iota``: a list, ``all-reflexive``, ``all`` or ``normalized``."""
    choice = choice or default
    if choice == "all":
        return all_index_maps(r)
    if choice == "all-reflexive":
        return enumerate_script_I(r)
    if choice == "normalized":
        return [m for m in all_index_maps(r) if m.values[0] == 1]
    iota = IndexMap.parse(choice)
    if iota.r != r:
        raise InputError(f"--iota {choice} has length {iota.r} but --r is {r}")
    return [iota]


def select_kappas(args, iota: IndexMap) -> list:
    if args.kappa is not None:
        kappa = parse_kappa(args.kappa)
        if len(kappa) != iota.ell:
            raise InputError(f"--kappa needs {iota.ell} entries for iota = {iota}")
        return [kappa]
    return [tuple(k) for k in itertools.product((0, 1), repeat=iota.ell)]


def build_relations(args, P: Poset) -> list:
    kind = args.relation
    if kind == "muhle":
        return [Relation("muhle", r=args.r)]
    out = []
    for iota in select_maps(args.iota, args.r, default="normalized"):
        if kind == "general":
            if args.kappa is None:
                raise InputError("--relation general needs --kappa")
            out.extend(Relation("general", iota, k) for k in select_kappas(args, iota))
        else:
            out.append(Relation(kind, iota))
    return out


def complex_for(P: Poset, rel: Relation, max_faces: int):
    """Clique complex for symmetric relations, order complex for partial orders."""
    if rel.kind in ("iota", "general"):
        return multichain_complex(P, rel.r, rel, max_faces)
    order = muhle_order(P, rel.r) if rel.kind == "muhle" else prime_order(P, rel.r, rel.iota)
    return order.order_complex()


def complex_stats(K) -> dict:
    return {
        "f_vector": list(K.f_vector()),
        "dimension": K.dimension(),
        "pure": K.is_pure(),
        "euler_characteristic": K.euler_characteristic(),
    }


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, failures)


def cmd_classify(args, P):
    rows, failures = [], []
    has_two_chain = longest_chain_length(P) >= 1
    for iota in select_maps(args.iota, args.r, default="normalized"):
        row = {
            "iota": str(iota),
            "reflexive": is_reflexive_map(iota),
            "transitive": is_transitive_map(iota),
            "partial_order": is_partial_order_map(iota),
        }
        if args.oracle:
            rep = oracle_check_axioms(P, args.r, iota, max_triples=args.max_triples)
            prime = oracle_check_axioms(P, args.r, relation=Relation("iota-prime", iota),
                                        max_triples=args.max_triples)
            row["oracle"] = {
                "reflexive": rep.reflexive,
                "antisymmetric": rep.antisymmetric,
                "transitive": rep.transitive,
                "partial_order": rep.partial_order,
                "prime_partial_order": prime.partial_order,
            }
            if has_two_chain:
                expect = {
                    "reflexive": rep.reflexive,
                    "transitive": rep.transitive,
                    "partial_order": rep.partial_order,
                }
                diffs = [k for k, v in expect.items() if row[k] != v]
                if row["transitive"] != prime.partial_order:
                    diffs.append("prime_partial_order")
                row["diffs"] = diffs
                failures.extend(f"iota={iota}: {k}" for k in diffs)
        rows.append(row)
    payload = {"r": args.r, "rows": rows}
    if args.oracle and not has_two_chain:
        payload["note"] = "poset has no 2-chain; oracle values reported without diffing"
    return payload, failures


def cmd_complex(args, P):
    results = []
    for rel in build_relations(args, P):
        K = complex_for(P, rel, args.max_faces)
        entry = {"relation": str(rel), "complex": K.to_dict(), **complex_stats(K)}
        if args.dimacs and rel.kind in ("iota", "general"):
            entry["dimacs"] = multichain_graph(P, rel.r, rel).to_dimacs()
        results.append(entry)
    return {"r": args.r, "results": results}, []


def cmd_homology(args, P):
    base = reduced_homology(order_complex(P))
    results = []
    for rel in build_relations(args, P):
        H = reduced_homology(complex_for(P, rel, args.max_faces))
        results.append({"relation": str(rel), "homology": H.to_dict(),
                        "matches_order_complex": H.same_groups(base)})
    return {"r": args.r, "order_complex_homology": base.to_dict(), "results": results}, []


def cmd_certify(args, P):
    results, failures = [], []
    for iota in select_maps(args.iota, args.r, default="all-reflexive"):
        cert = subdivision_certificate(P, args.r, iota, args.max_faces)
        if cert.kind == "subdivision":
            consistent = cert.verdict
        else:
            consistent = all(d.holds for _, d in cert.dichotomies)
        d = cert.to_dict()
        d["consistent"] = consistent
        results.append(d)
        if not consistent:
            failures.append(f"iota={iota}: {cert.kind} check failed")
    return {"r": args.r, "results": results}, failures


def cmd_count_graphs(args, P):
    count = count_distinct_graphs(P, args.r)
    expected = 2 ** (args.r - 1) if longest_chain_length(P) >= 2 else 1
    failures = [] if count == expected else [f"count {count} != expected {expected}"]
    return {"r": args.r, "count": count, "expected": expected, "matches": count == expected}, failures


def cmd_explore(args, P):
    base = reduced_homology(order_complex(P))
    rows = []
    for iota in select_maps(args.iota, args.r, default="normalized"):
        for kappa in select_kappas(args, iota):
            rel = Relation("general", iota, kappa)
            K = multichain_complex(P, args.r, rel, args.max_faces)
            H = reduced_homology(K)
            rows.append({
                "iota": str(iota),
                "kappa": ",".join(map(str, kappa)),
                "transitive_iota": is_transitive_map(iota),
                **complex_stats(K),
                "homology": H.to_dict(),
                "matches_order_complex": H.same_groups(base),
            })
    return {"r": args.r, "order_complex_homology": base.to_dict(), "rows": rows}, []


def cmd_homotopy(args, P):
    """Closure operator and fiber reports for each transitive map."""
    base = reduced_homology(order_complex(P))
    chains = maximal_chains(P)
    results, failures = [], []
    for iota in select_maps(args.iota, args.r, default="normalized"):
        if iota.values[0] != 1 or not is_transitive_map(iota):
            results.append({"iota": str(iota), "skipped": "map is not transitive with iota(1) = 1"})
            continue
        order = prime_order(P, args.r, iota)
        H = reduced_homology(order.order_complex())
        closure = check_closure(lambda m: closure_cl(m, iota), order)
        fibers = []
        for ch in chains:
            labels = [str(P.labels[p]) for p in ch]
            point = reduced_homology(fiber_complex(P, args.r, iota, ch)).is_trivial()
            witness, clQ, Q0 = closure_image_isomorphism(P, args.r, iota, ch)
            fibers.append({"chain": labels, "homology_point": point,
                           "isomorphism": witness.to_dict(clQ.carrier, Q0.carrier)})
            if not point:
                failures.append(f"iota={iota}: fiber over {labels} is not a homology point")
            if not witness.is_isomorphism:
                failures.append(f"iota={iota}: closure image over {labels} is not isomorphic to Q0")
        entry = {
            "iota": str(iota),
            "homology": H.to_dict(),
            "matches_order_complex": H.same_groups(base),
            "closure": closure.to_dict(P),
            "support_map_monotone": support_map_is_monotone(order),
            "fibers": fibers,
        }
        if not entry["matches_order_complex"]:
            failures.append(f"iota={iota}: homology differs from the order complex")
        if not closure.is_closure:
            failures.append(f"iota={iota}: cl is not a closure operator")
        if not entry["support_map_monotone"]:
            failures.append(f"iota={iota}: support map is not monotone")
        results.append(entry)
    morder = muhle_order(P, args.r)
    mclosure = check_closure(muhle_closure, morder)
    mH = reduced_homology(morder.order_complex())
    muhle = {"homology": mH.to_dict(), "matches_order_complex": mH.same_groups(base),
             "closure": mclosure.to_dict(P)}
    if not muhle["matches_order_complex"]:
        failures.append("muhle: homology differs from the order complex")
    if not mclosure.is_closure:
        failures.append("muhle: constant-top map is not a closure operator")
    return {"r": args.r, "order_complex_homology": base.to_dict(),
            "results": results, "muhle": muhle}, failures


def cmd_roundtrip(args, P):
    """Seeded preimage round trips through the averaging map."""
    rng = random.Random(args.seed)
    results, failures = [], []
    for iota in select_maps(args.iota, args.r, default="all-reflexive"):
        if not is_reflexive_map(iota):
            raise InputError(f"round trips need a reflexive map, got {iota}")
        for ch in maximal_chains(P):
            bad = 0
            for _ in range(args.samples):
                z = random_interior_point(ch, rng)
                tab, combo = preimage(z, iota)
                if image_point(combo) != z.as_dict() or not tableau_is_valid(P, tab, iota):
                    bad += 1
            labels = [str(P.labels[p]) for p in ch]
            results.append({"iota": str(iota), "chain": labels, "samples": args.samples, "failures": bad})
            if bad:
                failures.append(f"iota={iota} chain={labels}: {bad} failed round trips")
    return {"r": args.r, "seed": args.seed, "results": results}, failures


COMMANDS = {
    "classify": (cmd_classify, "closed-form predicates per index map, optionally diffed against brute force"),
    "complex": (cmd_complex, "build a complex and report its face statistics"),
    "homology": (cmd_homology, "reduced integral homology, compared with the order complex"),
    "certify": (cmd_certify, "exact subdivision certificates or dimension/purity dichotomy reports"),
    "count-graphs": (cmd_count_graphs, "number of distinct multichain graphs over the reflexive maps"),
    "explore": (cmd_explore, "sweep (iota, kappa) pairs and compare homology with the order complex"),
    "homotopy": (cmd_homotopy, "closure operator and fiber checks"),
    "roundtrip": (cmd_roundtrip, "seeded preimage round trips through the averaging map"),
}


# ---------------------------------------------------------------------------
# output


def _text(payload, failures) -> str:
    lines = []

    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)) and v and not _flat(v):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {_inline(v)}")
        elif isinstance(obj, list):
            for item in obj:
                if isinstance(item, (dict, list)) and not _flat(item):
                    lines.append(f"{pad}-")
                    walk(item, indent + 1)
                else:
                    lines.append(f"{pad}- {_inline(item)}")
        else:
            lines.append(f"{pad}{_inline(obj)}")

    walk(payload)
    lines.append("status: " + ("ok" if not failures else f"{len(failures)} failure(s)"))
    lines.extend(f"  FAIL {f}" for f in failures)
    return "\n".join(lines) + "\n"


def _flat(v) -> bool:
    if isinstance(v, dict):
        return False
    return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)


def _inline(v) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v)


def emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--poset", metavar="FILE", help="poset file, one 'a < b' per line")
    src.add_argument("--corpus", metavar="NAME", help=f"built-in poset: {', '.join(sorted({**corpus.CORPUS, **corpus.EXTRA}))}")
    common.add_argument("--r", type=int, required=True, help="multichain length")
    common.add_argument("--iota", metavar="LIST|all-reflexive|all",
                        help="index map such as 1,4,5; default depends on the command")
    common.add_argument("--kappa", metavar="LIST", help="per-block flags such as 0,1,0")
    common.add_argument("--relation", choices=("iota", "iota-prime", "muhle", "general"), default="iota")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--oracle", action="store_true", help="classify: diff against brute force")
    common.add_argument("--samples", type=int, default=1000, help="roundtrip: points per chain and map")
    common.add_argument("--dimacs", action="store_true", help="complex: include the graph in DIMACS form")
    common.add_argument("--max-faces", type=int, default=DEFAULT_MAX_FACES)
    common.add_argument("--max-triples", type=int, default=DEFAULT_MAX_TRIPLES)

    parser = argparse.ArgumentParser(prog="multichains", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.r < 1:
            raise InputError("--r must be at least 1")
        P = load_poset(args)
        func = COMMANDS[args.command][0]
        payload, failures = func(args, P)
    except (InputError, PosetError, ValueError) as e:
        print(json.dumps({"error": "input", "message": str(e)}), file=sys.stderr)
        return EXIT_INPUT
    except (ComplexSizeError, OracleSizeError) as e:
        print(json.dumps({"error": "guard", "message": str(e)}), file=sys.stderr)
        return EXIT_GUARD
    report = {"command": args.command, **payload, "ok": not failures, "failures": failures}
    if args.format == "json":
        emit(json.dumps(report, indent=2) + "\n", args.output)
    else:
        emit(_text(payload, failures), args.output)
    return EXIT_OK if not failures else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
