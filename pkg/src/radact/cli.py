"""Command-line surface.

Exit codes: 0 success, 1 for violations or failed decision commands asked to
assert, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog as cat
from . import injectivity as inj
from . import radical as rd
from . import verifier
from .congruence import all_congruences
from .core import ActHom, subact_act_by_mask, subact_from_members
from .errors import ParseError, RadactError, UnknownTheorem
from .universe import default_universe
from .verifier import to_json, to_text, verify_all


def _shared(parser):
    parser.add_argument("--monoid-max", type=int, default=3)
    parser.add_argument("--act-max", type=int, default=4)
    parser.add_argument("--hull-bound", type=int, default=6)
    parser.add_argument("--con-bound", type=int, default=7)
    parser.add_argument("--radical", default="rG")
    parser.add_argument("--report", choices=("text", "json"), default="text")
    parser.add_argument("--seed-catalog", default=None)
    parser.add_argument("--monoid", action="append", default=[],
                        help="extra monoid file")
    parser.add_argument("--radical-file", action="append", default=[],
                        help="extensional radical table file to register")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="radact",
        description="finite monoid acts: radicals, closure, injectivity, "
        "and property certification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _shared(p)
        return p

    p = add("validate", help="validate a monoid or act file")
    p.add_argument("--act", default=None)

    p = add("congruences", help="list every congruence of an act")
    p.add_argument("--act", required=True)

    p = add("radical", help="print the radical congruence of an act")
    p.add_argument("--act", required=True)

    add("classify", help="taxonomy flags of a radical over the universe")

    p = add("closure", help="closure of a subact under the chosen radical")
    p.add_argument("--act", required=True)
    p.add_argument("--members", required=True,
                   help="space-separated subact members")

    p = add("dense", help="is the subact dense for the chosen radical")
    p.add_argument("--act", required=True)
    p.add_argument("--members", required=True)

    p = add("injective", help="decide plain injectivity")
    p.add_argument("--act", required=True)

    p = add("r-injective", help="decide injectivity relative to the radical")
    p.add_argument("--act", required=True)
    p.add_argument("--mode", choices=("auto", "criterion", "universe"),
                   default="auto")

    p = add("weakly-injective", help="decide weak injectivity")
    p.add_argument("--act", required=True)

    p = add("hull", help="search the bounded injective hull")
    p.add_argument("--act", required=True)
    p.add_argument("--bound", type=int, default=None)

    p = add("r-hull", help="relative injective hull via the closure operator")
    p.add_argument("--act", required=True)
    p.add_argument("--bound", type=int, default=None)

    p = add("pushout", help="transfer pushout of a subact inclusion and a map")
    p.add_argument("--act", required=True, help="the mono's target act")
    p.add_argument("--members", required=True,
                   help="members of the dense subact being pushed out")
    p.add_argument("--into", required=True, help="the map's target act")
    p.add_argument("--map", required=True,
                   help="images of the subact members, in member order")

    p = add("limit", help="direct limit of a chain of acts")
    p.add_argument("--acts", required=True, help="comma-separated act names")
    p.add_argument("--maps", required=True,
                   help="semicolon-separated link maps, entries space-separated")

    add("enumerate", help="universe summary")

    p = add("verify", help="run property checkers")
    p.add_argument("--all", action="store_true")
    p.add_argument("--theorem", action="append", default=[])

    return parser


def _load_catalog(args):
    c = cat.Catalog()
    if args.seed_catalog:
        c.load_dir(args.seed_catalog)
    for path in args.monoid:
        c.load_file(path)
    return c


def _universe(args):
    u = default_universe(
        monoid_max=args.monoid_max,
        act_max=args.act_max,
        hull_bound=args.hull_bound,
        con_bound=args.con_bound,
    )
    for path in args.radical_file:
        with open(path) as fh:
            text = fh.read()
        c = _load_catalog(args)
        name, table = cat.parse_radical_table(text, c.acts)
        r = rd.extensional_radical(name, table, args.con_bound)
        _require_coverage(r, u)
        u.register_radical(r)
    return u


def _require_coverage(radical, universe):
    for act in universe.acts:
        try:
            radical.of(act)
        except RadactError:
            raise ParseError(
                1,
                f"extensional radical {radical.name!r} has no entry matching "
                f"universe act {act.name}",
            )


def _resolve_act(args, catalog):
    import os

    spec = args.act
    if os.path.exists(spec):
        with open(spec) as fh:
            return cat.parse_act(fh.read(), catalog.monoids)
    if spec in catalog.acts:
        return catalog.acts[spec]
    raise ParseError(1, f"cannot resolve act {spec!r}")


def _resolve_radical(args, universe):
    return universe.radical(args.radical)


def _print_act(act, out):
    print(f"elements {act.size}", file=out)
    print("action", file=out)
    for row in act.action:
        print(" ".join(str(v) for v in row), file=out)


def _subact_of(act, members_text):
    members = [int(tok) for tok in members_text.split()]
    return subact_from_members(act, members)


def run(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _dispatch(args, out, err)
    except (ParseError, UnknownTheorem) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except RadactError as exc:
        print(f"error: {exc}", file=err)
        return 1


def _dispatch(args, out, err) -> int:
    cmd = args.command

    if cmd == "validate":
        catalog = _load_catalog(args)
        if args.act:
            act = _resolve_act(args, catalog)
            print(f"ok act {act.name} over {act.monoid.name} "
                  f"elements={act.size}", file=out)
        else:
            for name in sorted(catalog.monoids):
                m = catalog.monoids[name]
                print(f"ok monoid {name} elements={m.size}", file=out)
        return 0

    if cmd == "enumerate":
        u = _universe(args)
        print(f"monoids {len(u.monoids)}", file=out)
        for m in u.monoids:
            print(f"{m.name} elements={m.size} acts={len(u.acts_over(m))}",
                  file=out)
        print(f"acts {len(u.acts)}", file=out)
        print("radicals " + " ".join(r.name for r in u.radicals), file=out)
        return 0

    if cmd == "classify":
        u = _universe(args)
        r = _resolve_radical(args, u)
        flags = rd.classify_radical(r, u).flags()
        for k, v in flags.items():
            print(f"{k} {'true' if v else 'false'}", file=out)
        return 0

    if cmd == "verify":
        u = _universe(args)
        if args.theorem and not args.all:
            reports = [verifier.verify(tid, u) for tid in args.theorem]
            doc = {
                "schema": verifier.SCHEMA,
                "results": [r.payload() for r in reports],
                "generated_at": verifier._timestamp(),
                "timings_ms": {
                    r.theorem_id: round(r.duration_ms, 3) for r in reports
                },
            }
            violated = any(r.status == "violated" for r in reports)
        else:
            doc = verify_all(u)
            violated = bool(doc["summary"]["violated"])
        if args.report == "json":
            out.write(to_json(doc))
        else:
            if "summary" in doc:
                out.write(to_text(doc))
            else:
                for rep in doc["results"]:
                    line = (
                        f"{rep['theorem_id']:<10} {rep['status']:<22}"
                        f" checked={rep['instances_checked']}"
                        f" filtered={rep['hypothesis_filtered']}"
                        f" skipped={rep['instances_skipped']}"
                    )
                    print(line, file=out)
        return 1 if violated else 0

    # the remaining commands all need a catalog act
    catalog = _load_catalog(args)
    act = _resolve_act(args, catalog) if hasattr(args, "act") and args.act \
        else None

    if cmd == "congruences":
        for chi in all_congruences(act, args.con_bound):
            print(str(chi), file=out)
        return 0

    u = _universe(args)

    if cmd == "radical":
        r = _resolve_radical(args, u)
        print(str(r.of(act)), file=out)
        return 0

    if cmd == "closure":
        r = _resolve_radical(args, u)
        sub = _subact_of(act, args.members)
        closed = rd.closure(r, act, sub)
        print(" ".join(str(x) for x in closed.members), file=out)
        return 0

    if cmd == "dense":
        r = _resolve_radical(args, u)
        sub = _subact_of(act, args.members)
        print("true" if rd.is_r_dense(r, act, sub) else "false", file=out)
        return 0

    if cmd == "injective":
        print("true" if inj.is_injective(act, u) else "false", file=out)
        return 0

    if cmd == "r-injective":
        r = _resolve_radical(args, u)
        value = inj.is_r_injective(r, act, u, args.mode)
        print("true" if value else "false", file=out)
        return 0

    if cmd == "weakly-injective":
        print("true" if inj.is_weakly_injective(act, u) else "false", file=out)
        return 0

    if cmd == "hull":
        bound = args.bound or args.hull_bound
        ext = inj.injective_hull(act, bound, u)
        _print_act(ext.target, out)
        return 0

    if cmd == "r-hull":
        r = _resolve_radical(args, u)
        bound = args.bound or args.hull_bound
        ext = inj.r_injective_hull(r, act, bound, u)
        print(f"method {ext.method}", file=out)
        _print_act(ext.target, out)
        return 0

    if cmd == "pushout":
        r = _resolve_radical(args, u)
        sub = _subact_of(act, args.members)
        inner, incl = subact_act_by_mask(act, sub.mask)
        target = cat.parse_act(open(args.into).read(), catalog.monoids) \
            if _is_path(args.into) else catalog.acts[args.into]
        images = [int(tok) for tok in args.map.split()]
        f = ActHom(inner, target, tuple(images))
        d, ulab, vlab = inj.transfer_pushout(r, incl, f)
        _print_act(d, out)
        print("u " + " ".join(str(x) for x in ulab.map), file=out)
        print("v " + " ".join(str(x) for x in vlab.map), file=out)
        return 0

    if cmd == "limit":
        names = args.acts.split(",")
        acts = []
        for name in names:
            args_act = argparse.Namespace(**vars(args))
            args_act.act = name
            acts.append(_resolve_act(args_act, catalog))
        maps = []
        for i, chunk in enumerate(args.maps.split(";")):
            images = tuple(int(tok) for tok in chunk.split())
            maps.append(ActHom(acts[i], acts[i + 1], images))
        chain = inj.DirectedChain(tuple(acts), tuple(maps))
        limit, legs = inj.direct_limit(chain)
        _print_act(limit, out)
        for i, leg in enumerate(legs):
            print(f"leg{i} " + " ".join(str(x) for x in leg.map), file=out)
        return 0

    raise ParseError(1, f"unhandled command {cmd!r}")


def _is_path(spec):
    import os

    return os.path.exists(spec)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
