"""Command-line front end.

Loads structures from JSON, runs property checks, censuses, searches, and
theorem verifiers, and emits deterministic reports.

Exit codes: 0 all checks passed; 1 a property or theorem violation was
found (the report carries a witness); 2 malformed input or usage error;
3 a search budget was exceeded.  ``LATKIT_THREADS`` caps sweep
parallelism; given the same configuration and seed, JSON reports are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import builders, embedding, lattice, monoid, order, topology

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    name: Optional[str] = None
    inputs: tuple = ()
    budget_nodes: Optional[int] = None
    samples: int = 1000
    seed: int = 0
    output_format: str = "table"
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.budget_nodes is not None and self.budget_nodes <= 0:
            raise InputError("--budget-nodes must be positive")
        if self.samples <= 0:
            raise InputError("--samples must be positive")


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("LATKIT_THREADS", "1")))
    except ValueError:
        return 1


def _parallel_map(fn, items):
    n = _threads()
    if n <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# structure loading


def load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def parse_order_spec(obj):
    """An order given as ``{"powerset": n}``, ``{"chains": [...]}`` or the
    generator-pair format ``{"size": n, "pairs": [...]}``."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise InputError("order spec must be an object")
    if "powerset" in obj:
        return builders.powerset_lattice(int(obj["powerset"]))
    if "chains" in obj:
        return builders.chain_product([int(d) for d in obj["chains"]]).order
    try:
        return order.order_from_json(obj)
    except order.OrderError as exc:
        raise InputError(str(exc)) from exc


def parse_map_fixture(obj) -> order.MonotoneMap:
    dom = parse_order_spec(obj.get("dom"))
    cod = parse_order_spec(obj.get("cod"))
    try:
        return order.MonotoneMap(dom, cod, tuple(int(v) for v in obj["image"]))
    except (KeyError, TypeError, order.OrderError) as exc:
        raise InputError(f"malformed map fixture: {exc}") from exc


# ---------------------------------------------------------------------------
# verifier registry


@dataclass(frozen=True)
class Verifier:
    slug: str
    description: str
    run: Callable  # (RunConfig) -> report dict with a "holds" bool


def _verify_powerset_form(cfg: RunConfig) -> dict:
    x = int(cfg.options.get("x") or 2)
    y = int(cfg.options.get("y") or 3)
    dom = builders.powerset_lattice(x)
    cod = builders.powerset_lattice(y)
    census = embedding.enumerate_embeddings(
        dom, cod, convex_range=True, budget_nodes=cfg.budget_nodes)
    formula = embedding.powerset_formula_census(x, y, dom, cod)
    decompositions_ok = True
    for mm in census.maps:
        dec = embedding.powerset_decompose(mm)
        if embedding.powerset_embedding(dec.h, dec.b, dom, cod).image != mm.image:
            decompositions_ok = False
    holds = census.images() == formula and decompositions_ok
    return {
        "holds": holds,
        "x": x,
        "y": y,
        "census": len(census),
        "formula_census": len(formula),
        "decompositions_ok": decompositions_ok,
    }


def _verify_chainprod_form(cfg: RunConfig) -> dict:
    k = int(cfg.options.get("k") or 2)
    m = int(cfg.options.get("m") or 2)
    i = int(cfg.options.get("i") or 1)
    j = int(cfg.options.get("j") or 2)
    dom_cp = builders.chain_product([k] * i)
    cod_cp = builders.chain_product([m] * j)
    census = embedding.enumerate_embeddings(
        dom_cp.order, cod_cp.order, convex_range=True,
        budget_nodes=cfg.budget_nodes)
    formula = embedding.chainprod_formula_census(dom_cp, cod_cp)
    mismatches = 0
    for mm in census.maps:
        dec = embedding.chainprod_decompose(mm, dom_cp, cod_cp)
        if embedding.chainprod_embedding(
                dec.g, dec.y, dom_cp, cod_cp).image != mm.image:
            mismatches += 1
    holds = census.images() == formula and mismatches == 0
    return {
        "holds": holds,
        "shape": {"k": k, "m": m, "i": i, "j": j},
        "census": len(census),
        "formula_census": len(formula),
        "mismatches": mismatches,
    }


def _verify_preregular_continuity(cfg: RunConfig) -> dict:
    max_size = int(cfg.options.get("max_size") or 4)
    posets = []
    for n in range(1, max_size + 1):
        posets.extend(builders.enumerate_posets(n))
    pairs = [(p, q) for p in posets for q in posets if p.size <= q.size]

    def work(pq):
        p, q = pq
        return embedding.verify_preregular_continuity(
            p, q, budget_nodes=cfg.budget_nodes)

    reports = _parallel_map(work, pairs)
    violations = [v for r in reports for v in r["violations"]]
    return {
        "holds": not violations,
        "max_size": max_size,
        "pairs": len(pairs),
        "embeddings": sum(r["embeddings"] for r in reports),
        "violations": violations,
    }


def _verify_convex_preregular(cfg: RunConfig) -> dict:
    max_size = int(cfg.options.get("max_size") or 5)
    violations = []
    lattices = 0
    subsets = 0
    for n in range(1, max_size + 1):
        for lq in builders.enumerate_lattices(n):
            lattices += 1
            for amask in range(1 << n):
                subsets += 1
                if lattice.is_convex(lq, amask) and not lattice.is_preregular(lq, amask):
                    violations.append({
                        "lattice": order.order_to_json(lq),
                        "subset": list(order.bits(amask)),
                    })
    return {
        "holds": not violations,
        "max_size": max_size,
        "lattices": lattices,
        "subsets": subsets,
        "violations": violations,
    }


def _verify_extension_convexity(cfg: RunConfig) -> dict:
    n = int(cfg.options.get("n") or 2)
    m = int(cfg.options.get("m") or n + 1)
    L = builders.powerset_lattice(n)
    M = builders.powerset_lattice(m)
    basis = [0] + [1 << i for i in range(n)]
    census = embedding.enumerate_embeddings(
        L, M, convex_range=True, budget_nodes=cfg.budget_nodes)
    failures = []
    for mm in census.maps:
        sig = {b: mm.image[b] for b in basis}
        rep = embedding.verify_convexity_transfer(L, basis, M.full_mask, M, sig)
        if not rep["holds"] or tuple(rep["extension"]) != mm.image:
            failures.append({"image": list(mm.image), "report": rep})
    return {
        "holds": not failures,
        "n": n,
        "m": m,
        "embeddings": len(census),
        "failures": failures,
    }


def _verify_cat_ro_iso(cfg: RunConfig) -> dict:
    points = int(cfg.options.get("points") or 3)
    tops = topology.enumerate_topologies(points)

    def work(t):
        try:
            cat = topology.category_algebra(t)
        except topology.TopologyError as exc:
            return {"error": str(exc), "opens": topology.topology_to_json(t)}
        return None

    failures = [r for r in _parallel_map(work, tops) if r is not None]
    return {
        "holds": not failures,
        "points": points,
        "topologies": len(tops),
        "failures": failures,
    }


def _verify_atom_image(cfg: RunConfig) -> dict:
    x = int(cfg.options.get("x") or 2)
    y = int(cfg.options.get("y") or 3)
    dom = builders.powerset_lattice(x)
    cod = builders.powerset_lattice(y)
    census = embedding.enumerate_embeddings(dom, cod,
                                            budget_nodes=cfg.budget_nodes)
    bad = [
        list(mm.image) for mm in census.maps
        if not embedding.atom_image_check(mm)
    ]
    return {
        "holds": not bad,
        "x": x,
        "y": y,
        "embeddings": len(census),
        "violations": bad,
    }


def _verify_monoid_distributivity(cfg: RunConfig) -> dict:
    if cfg.inputs:
        mon = monoid.monoid_from_json(load_json(cfg.inputs[0]))
    else:
        mon = monoid.VectorMonoid(int(cfg.options.get("dims") or 2))
    reports = {
        mode: monoid.check_distributivity(
            mon, mode, samples=cfg.samples, seed=cfg.seed)
        for mode in monoid.DISTRIBUTIVITY_MODES
    }
    return {
        "holds": all(r["holds"] for r in reports.values()),
        "modes": reports,
    }


def _verify_disjoint_sum(cfg: RunConfig) -> dict:
    if cfg.inputs:
        mon = monoid.monoid_from_json(load_json(cfg.inputs[0]))
    else:
        mon = monoid.VectorMonoid(int(cfg.options.get("dims") or 2))
    rep = monoid.check_disjoint_sum_laws(mon, samples=cfg.samples, seed=cfg.seed)
    return {"holds": rep["holds"], "report": rep}


def _verify_group_completion(cfg: RunConfig) -> dict:
    if cfg.inputs:
        mon = monoid.monoid_from_json(load_json(cfg.inputs[0]))
        try:
            gc = monoid.group_completion(mon)
        except monoid.NotCancellativeError:
            return {"holds": True, "cancellative": False, "rejected": True}
        return {
            "holds": True,
            "cancellative": True,
            "classes": gc.group.size,
            "embedding_injective": len(set(gc.embedding)) == mon.size,
        }
    max_size = int(cfg.options.get("max_size") or 4)
    checked = rejected = 0
    failures = []
    for n in range(1, max_size + 1):
        for mon_ in monoid.enumerate_commutative_monoids(n):
            if not mon_.is_cancellative:
                rejected += 1
                continue
            checked += 1
            gc = monoid.group_completion(mon_)
            if (len(gc.group.invertibles) != gc.group.size
                    or len(set(gc.embedding)) != mon_.size):
                failures.append(monoid.monoid_to_json(mon_))
    return {
        "holds": not failures,
        "max_size": max_size,
        "cancellative_checked": checked,
        "noncancellative_skipped": rejected,
        "failures": failures,
    }


def _search_convex_not_preregular(cfg: RunConfig) -> dict:
    max_size = int(cfg.options.get("max_size") or 5)
    for n in range(1, max_size + 1):
        for q in builders.enumerate_posets(n):
            if lattice.classify(q)["lattice"]:
                continue
            for amask in range(1 << n):
                if lattice.is_convex(q, amask) and not lattice.is_preregular(q, amask):
                    return {
                        "holds": True,
                        "found": True,
                        "poset": order.order_to_json(q),
                        "subset": list(order.bits(amask)),
                    }
    return {"holds": True, "found": False, "max_size": max_size}


def _search_open_meager(cfg: RunConfig) -> dict:
    points = int(cfg.options.get("points") or 3)
    for t in topology.enumerate_topologies(points):
        u = topology.largest_open_meager(t)
        if u:
            return {"holds": True, "found": True,
                    "topology": topology.topology_to_json(t),
                    "largest_open_meager": sorted(order.bits(u))}
    return {"holds": True, "found": False, "points": points,
            "note": "every topology on this many points is a Baire space"}


def _sweep_baire(cfg: RunConfig) -> dict:
    points = int(cfg.options.get("points") or 3)
    tops = topology.enumerate_topologies(points)
    mismatches = [
        topology.topology_to_json(t) for t in tops
        if topology.is_baire(t) != (topology.largest_open_meager(t) == 0)
    ]
    return {
        "holds": not mismatches,
        "points": points,
        "topologies": len(tops),
        "all_baire": all(topology.is_baire(t) for t in tops),
        "mismatches": mismatches,
    }


VERIFIERS = {
    "thm-powerset-form": Verifier(
        "thm-powerset-form",
        "convex-range power-set embeddings are exactly the maps a -> h[a] | b",
        _verify_powerset_form),
    "thm-chainprod-form": Verifier(
        "thm-chainprod-form",
        "convex-range chain-product embeddings are shifted partial projections",
        _verify_chainprod_form),
    "thm-preregular-continuity": Verifier(
        "thm-preregular-continuity",
        "embeddings with preregular range preserve nonempty sups and infs",
        _verify_preregular_continuity),
    "lem-convex-preregular": Verifier(
        "lem-convex-preregular",
        "convex subsets of lattices are preregular",
        _verify_convex_preregular),
    "thm-extension-convexity": Verifier(
        "thm-extension-convexity",
        "basis extensions are unique and keep a convex range",
        _verify_extension_convexity),
    "prop-cat-ro-iso": Verifier(
        "prop-cat-ro-iso",
        "category algebra is isomorphic to the residual regular open algebra",
        _verify_cat_ro_iso),
    "cor-atom-image": Verifier(
        "cor-atom-image",
        "embeddings map atoms onto the relative atoms of their range",
        _verify_atom_image),
    "law-monoid-distributivity": Verifier(
        "law-monoid-distributivity",
        "addition distributes over joins and meets of the associated order",
        _verify_monoid_distributivity),
    "law-disjoint-sum": Verifier(
        "law-disjoint-sum",
        "disjoint elements add to their join and sums stay disjoint",
        _verify_disjoint_sum),
    "lem-group-completion": Verifier(
        "lem-group-completion",
        "cancellative commutative monoids embed into their pair-class group",
        _verify_group_completion),
}

ALIASES = {
    "powerset-characterization": "thm-powerset-form",
    "chainprod-characterization": "thm-chainprod-form",
}

SEARCHES = {
    "convex-not-preregular": Verifier(
        "convex-not-preregular",
        "hunt a non-lattice poset with a convex non-preregular subset",
        _search_convex_not_preregular),
    "open-meager": Verifier(
        "open-meager",
        "hunt a topology with a nonempty largest open meager set",
        _search_open_meager),
}

SWEEPS = {
    "cat-ro-iso": Verifier(
        "cat-ro-iso",
        "category algebra vs regular open algebra over every topology",
        _verify_cat_ro_iso),
    "baire": Verifier(
        "baire",
        "Baire verdict agrees with emptiness of the largest open meager set",
        _sweep_baire),
    "convex-preregular": Verifier(
        "convex-preregular",
        "convex implies preregular over every lattice up to a size bound",
        _verify_convex_preregular),
}


# ---------------------------------------------------------------------------
# check command


def _check_convexity(cfg: RunConfig) -> dict:
    mm = parse_map_fixture(load_json(cfg.inputs[0]))
    witness = lattice.convexity_witness(mm.cod, mm.range_mask)
    if witness is None:
        return {"holds": True, "witness": None}
    missing = witness["missing"]
    if builders.is_powerset_order(mm.cod):
        # report codomain elements as subsets of the ground set
        return {
            "holds": False,
            "witness": sorted(order.bits(missing)),
            "between": [sorted(order.bits(witness["p"])),
                        sorted(order.bits(witness["q"]))],
        }
    return {
        "holds": False,
        "witness": missing,
        "between": [witness["p"], witness["q"]],
    }


def _check_embedding(cfg: RunConfig) -> dict:
    mm = parse_map_fixture(load_json(cfg.inputs[0]))
    return {"holds": mm.is_embedding, "witness": None}


def _check_preregular(cfg: RunConfig) -> dict:
    obj = load_json(cfg.inputs[0])
    q = parse_order_spec(obj.get("order"))
    subset = order.subset_from_json(q, obj.get("subset", []))
    report = lattice.subset_report(q, subset.mask)
    holds = report["preregular_up"]["holds"] and report["preregular_down"]["holds"]
    return {"holds": holds, "report": report}


def _check_classify(cfg: RunConfig) -> dict:
    q = parse_order_spec(load_json(cfg.inputs[0]))
    return {"holds": True, "classification": lattice.classify(q)}


def _check_distributive(cfg: RunConfig) -> dict:
    q = parse_order_spec(load_json(cfg.inputs[0]))
    lv = lattice.lattice_view(q)
    return {"holds": lattice.is_distributive(lv), "witness": None}


CHECKS = {
    "convexity": _check_convexity,
    "embedding": _check_embedding,
    "preregular": _check_preregular,
    "classify": _check_classify,
    "distributive": _check_distributive,
}


# ---------------------------------------------------------------------------
# output and dispatch


def emit_report(cfg: RunConfig, report: dict, stream=None):
    stream = stream or sys.stdout
    if cfg.output_format == "json":
        doc = {"command": cfg.command, "name": cfg.name, "seed": cfg.seed,
               "report": report}
        stream.write(json.dumps(doc, sort_keys=True) + "\n")
        return
    stream.write(f"{cfg.command} {cfg.name or ''}".rstrip() + "\n")
    for key, value in report.items():
        stream.write(f"  {key}: {value}\n")


def _registry_listing() -> list:
    rows = []
    for group, table in (("verify", VERIFIERS), ("search", SEARCHES),
                         ("sweep", SWEEPS)):
        for slug in sorted(table):
            rows.append({"command": group, "slug": slug,
                         "description": table[slug].description})
    for slug in sorted(CHECKS):
        rows.append({"command": "check", "slug": slug,
                     "description": f"check a structure for {slug}"})
    return rows


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latkit",
        description="checkers, censuses, and theorem verifiers for finite "
                    "order structures")
    parser.add_argument("--list", action="store_true",
                        help="list registered verifiers and exit")
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--budget-nodes", type=int, default=None)

    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed at the top level
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("table", "json"),
                        default=argparse.SUPPRESS)
    shared.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    shared.add_argument("--samples", type=int, default=argparse.SUPPRESS)
    shared.add_argument("--budget-nodes", type=int, default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--input", action="append", default=[],
                       help="path to a JSON structure or fixture")

    pv = sub.add_parser("verify", parents=[shared],
                        help="run a registered theorem verifier")
    pv.add_argument("name", nargs="?")
    pv.add_argument("--list", dest="list_local", action="store_true")
    common(pv)
    for opt in ("x", "y", "k", "m", "i", "j", "n", "points", "max-size", "dims"):
        pv.add_argument(f"--{opt}", type=int, default=None)

    pc = sub.add_parser("check", parents=[shared],
                        help="check one structure for one property")
    pc.add_argument("name", choices=sorted(CHECKS))
    common(pc)

    pe = sub.add_parser("enumerate", parents=[shared],
                        help="export an embedding census as JSON lines")
    pe.add_argument("--dom", help="order spec (inline JSON)")
    pe.add_argument("--cod", help="order spec (inline JSON)")
    common(pe)
    pe.add_argument("--convex-range", action="store_true")
    pe.add_argument("--preregular-range", action="store_true")
    pe.add_argument("--downward-closed-range", action="store_true")

    ps = sub.add_parser("search", parents=[shared],
                        help="hunt for a witness structure")
    ps.add_argument("name", choices=sorted(SEARCHES))
    common(ps)
    ps.add_argument("--points", type=int, default=None)
    ps.add_argument("--max-size", type=int, default=None)

    pw = sub.add_parser("sweep", parents=[shared],
                        help="exhaustive family sweep")
    pw.add_argument("name", choices=sorted(SWEEPS))
    common(pw)
    pw.add_argument("--points", type=int, default=None)
    pw.add_argument("--max-size", type=int, default=None)
    return parser


def _options_from(args) -> dict:
    out = {}
    for opt in ("x", "y", "k", "m", "i", "j", "n", "points", "dims"):
        v = getattr(args, opt, None)
        if v is not None:
            out[opt] = v
    v = getattr(args, "max_size", None)
    if v is not None:
        out["max_size"] = v
    return out


def _run_enumerate(cfg: RunConfig) -> int:
    if cfg.inputs:
        obj = load_json(cfg.inputs[0])
        dom = parse_order_spec(obj.get("dom"))
        cod = parse_order_spec(obj.get("cod"))
        filters = obj.get("filters", {})
    else:
        if not cfg.options.get("dom") or not cfg.options.get("cod"):
            raise InputError("enumerate needs --dom and --cod or --input")
        dom = parse_order_spec(cfg.options["dom"])
        cod = parse_order_spec(cfg.options["cod"])
        filters = cfg.options.get("filters", {})
    census = embedding.enumerate_embeddings(
        dom, cod,
        convex_range=bool(filters.get("convex_range")),
        preregular_range=bool(filters.get("preregular_range")),
        downward_closed_range=bool(filters.get("downward_closed_range")),
        budget_nodes=cfg.budget_nodes,
    )
    for line in embedding.census_to_json_lines(census):
        sys.stdout.write(line + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    if args.list or (getattr(args, "list_local", False)):
        cfg = RunConfig(command="list", output_format=args.format)
        if args.format == "json":
            sys.stdout.write(json.dumps({"verifiers": _registry_listing()},
                                        sort_keys=True) + "\n")
        else:
            for row in _registry_listing():
                sys.stdout.write(
                    f"{row['command']:9s} {row['slug']:28s} {row['description']}\n")
        return EXIT_OK

    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        cfg = RunConfig(
            command=args.command,
            name=getattr(args, "name", None),
            inputs=tuple(getattr(args, "input", []) or []),
            budget_nodes=args.budget_nodes,
            samples=args.samples,
            seed=args.seed,
            output_format=args.format,
            options=_options_from(args),
        )
        if args.command == "enumerate":
            cfg.options["dom"] = getattr(args, "dom", None)
            cfg.options["cod"] = getattr(args, "cod", None)
            cfg.options["filters"] = {
                "convex_range": getattr(args, "convex_range", False),
                "preregular_range": getattr(args, "preregular_range", False),
                "downward_closed_range": getattr(args, "downward_closed_range", False),
            }
            return _run_enumerate(cfg)

        if args.command == "verify":
            if cfg.name is None:
                raise InputError("verify needs a verifier name (see --list)")
            slug = ALIASES.get(cfg.name, cfg.name)
            if slug not in VERIFIERS:
                raise InputError(f"unknown verifier {cfg.name!r}")
            report = VERIFIERS[slug].run(cfg)
        elif args.command == "check":
            if not cfg.inputs:
                raise InputError("check needs --input")
            report = CHECKS[cfg.name](cfg)
        elif args.command == "search":
            report = SEARCHES[cfg.name].run(cfg)
        elif args.command == "sweep":
            report = SWEEPS[cfg.name].run(cfg)
        else:
            raise InputError(f"unknown command {args.command!r}")
    except embedding.BudgetExceededError as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (InputError, order.OrderError, lattice.OrderError,
            monoid.MonoidError, topology.TopologyError,
            embedding.HypothesisFailed, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE

    emit_report(cfg, report)
    return EXIT_OK if report.get("holds", False) else EXIT_VIOLATION


if __name__ == "__main__":
    raise SystemExit(main())
