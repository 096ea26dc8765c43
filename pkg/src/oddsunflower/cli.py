"""Command-line entry point: ``oddsun {check,construct,bounds,mos,reduce}``.

Exit codes for ``check``: 0 free, 1 witness found, 2 search budget exceeded,
3 input error. Other commands return 0 on success, 1 on a failed comparison
or mismatch, 3 on input error.

Environment: ``ODDSUN_CAP`` (materialization cap, members) and
``ODDSUN_BUDGET`` (odd-sunflower search nodes) set the defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import mpmath

from . import bounds as bnd
from . import constructions as con
from .detectors import (
    BudgetExceeded,
    find_classic_sunflower,
    find_even_sunflower,
    find_odd_sunflower,
)
from .errors import InvalidParameter, SunflowerError
from .family import is_antichain, uniformity
from .fileformats import (
    legend_json,
    parse_3dm,
    parse_family,
    parse_family_lines,
    render_family,
    render_sections,
)
from .mos import MosSearchConfig, enumerate_mos
from .reduction import reduce_3dm, solve_3dm, verify_reduction

EXIT_FREE, EXIT_FOUND, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3

BOUND_NAMES = {
    1: "direct powers of C3",
    2: "C9 wr C3",
    3: "C160511 wr (C9 wr C3)",
}


class Report:
    """Collects output so it is written once, as text or as one JSON object."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.data: dict = {}
        # commands that stream a family to stdout move the report to stderr
        self.stream = sys.stdout

    def say(self, line: str) -> None:
        self.lines.append(line)

    def flush(self) -> None:
        stream = self.stream
        if self.as_json:
            stream.write(json.dumps(self.data, sort_keys=True) + "\n")
        else:
            stream.write("".join(line + "\n" for line in self.lines))
        stream.flush()


def _read(path: str) -> str:
    return Path(path).read_text()


def cmd_check(args, rep: Report) -> int:
    fam, lines = parse_family_lines(_read(args.family))
    uni = uniformity(fam)
    rep.data.update(
        kind=args.kind,
        members=len(fam),
        universe=fam.universe,
        antichain=is_antichain(fam),
        uniformity=uni,
    )
    if args.kind == "odd":
        res = find_odd_sunflower(fam, limit=args.budget)
    elif args.kind == "even":
        res = find_even_sunflower(fam)
    else:
        res = find_classic_sunflower(fam)

    rep.say(f"members: {len(fam)}  universe: {fam.universe}")
    rep.say(f"antichain: {'yes' if is_antichain(fam) else 'no'}  "
            f"uniform: {uni if uni is not None else 'no'}")
    if isinstance(res, BudgetExceeded):
        rep.data["result"] = "budget-exceeded"
        rep.data["nodes"] = res.nodes
        rep.say(f"UNDECIDED: budget of {args.budget} nodes exhausted")
        return EXIT_BUDGET
    if res is None:
        rep.data["result"] = "free"
        rep.say(f"FREE: no {args.kind} sunflower")
        return EXIT_FREE
    rep.data["result"] = "found"
    witness = [lines[i] for i in res.indices]
    rep.say(f"FOUND: {args.kind} sunflower with {len(witness)} members")
    if args.witness:
        rep.data["witness_lines"] = witness
        rep.say("witness lines: " + " ".join(map(str, witness)))
    return EXIT_FOUND


def _build(args):
    cap = args.cap
    name, params = args.name, args.params
    need = {"cn": 1, "cnplus": 1, "construction1": 1, "tree": 1, "dsum": 2,
            "wreath": 2, "construction2": 0}[name]
    if len(params) != need:
        raise InvalidParameter(f"construct {name} takes {need} parameter(s)")
    if name == "cn":
        return con.c_n(int(params[0]))
    if name == "cnplus":
        return con.c_n_plus(int(params[0]))
    if name == "construction1":
        return con.construction1(int(params[0]), cap)
    if name == "tree":
        return con.binary_tree_family(int(params[0]), cap)
    if name == "construction2":
        return con.construction2(cap)
    f, g = (parse_family(_read(p)) for p in params)
    if name == "dsum":
        return con.direct_sum(f, g, cap)[0]
    return con.wreath(f, g, cap)[0]


def cmd_construct(args, rep: Report) -> int:
    fam = _build(args)
    uni = uniformity(fam)
    text = render_family(fam)
    rep.data.update(name=args.name, members=len(fam), universe=fam.universe, uniformity=uni)
    rep.say(f"{args.name}: {len(fam)} members, universe {fam.universe}, "
            f"uniform: {uni if uni is not None else 'no'}")
    if args.out:
        Path(args.out).write_text(text)
        rep.data["out"] = args.out
    else:
        sys.stdout.write(text)
        rep.stream = sys.stderr
    return 0


def cmd_bounds(args, rep: Report) -> int:
    which = [args.eq] if args.eq else [1, 2, 3]
    values = bnd.growth_bounds()
    ok_all = True
    rep.data["bounds"] = []
    for i in which:
        b = values[i]
        thr = bnd.THRESHOLDS[i]
        ok = b.value > thr
        ok_all &= ok
        rep.data["bounds"].append({
            "index": i, "name": BOUND_NAMES[i], "value": b.value,
            "log_size": b.log_size, "universe": b.universe,
            "threshold": thr, "ok": ok,
        })
        rep.say(f"[{i}] {BOUND_NAMES[i]}: {b.value:.10f} {'>' if ok else '<='} {thr} "
                f"{'OK' if ok else 'FAIL'}")
    if 3 in which:
        hp = mpmath.nstr(bnd.construction3_bound_hp(), 40)
        rep.data["construction3_hp"] = hp
        rep.say(f"    high-precision check: {hp}")
    return 0 if ok_all else 1


def cmd_mos(args, rep: Report) -> int:
    if args.k in (1, 2, 3):
        base = MosSearchConfig.default(args.k)
        cfg = MosSearchConfig(
            args.k,
            args.max_members if args.max_members is not None else base.max_members,
            args.max_n if args.max_n is not None else base.max_universe,
        )
    elif args.max_n is None or args.max_members is None:
        raise InvalidParameter("k >= 4 needs both --max-n and --max-members")
    else:
        cfg = MosSearchConfig(args.k, args.max_members, args.max_n)
    classes = enumerate_mos(cfg)
    noun = "class" if len(classes) == 1 else "classes"
    rep.say(f"{len(classes)} {noun}")
    bounded = args.k >= 4
    if bounded:
        rep.say("(bounded search: completeness not claimed)")
    rep.data.update(k=args.k, count=len(classes), bounded_search=bounded,
                    classes=[c.family.as_lists() for c in classes])
    for i, c in enumerate(classes, start=1):
        rep.say(f"  {i}: " + " ".join("".join(map(str, s)) if c.universe < 10
                                      else "{" + ",".join(map(str, s)) + "}"
                                      for s in c.family.as_lists()))
    if args.out:
        sections = [
            (f"class {i}: {len(c.canonical_members)} members, "
             f"{c.automorphism_count} automorphisms", c.family)
            for i, c in enumerate(classes, start=1)
        ]
        Path(args.out).write_text(render_sections(sections))
    return 0


def cmd_reduce(args, rep: Report) -> int:
    inst = parse_3dm(_read(args.threedm))
    red = reduce_3dm(inst, pad=not args.unpadded)
    text = render_family(red.family)
    rep.data.update(n=inst.n, edges=len(inst.edges), members=len(red.family),
                    universe=red.family.universe)
    rep.say(f"reduced: {len(red.family)} members, universe {red.family.universe}")
    if args.out:
        Path(args.out).write_text(text)
        Path(args.out + ".legend.json").write_text(legend_json(red))
    status = 0
    if args.verify:
        ok = verify_reduction(inst, pad=not args.unpadded)
        has = "YES" if solve_3dm(inst) is not None else "NO"
        if ok:
            rep.say(f"EQUIVALENT (both {has})")
        else:
            rep.say(f"MISMATCH (3DM {has})")
            status = 1
        rep.data["verify"] = "EQUIVALENT" if ok else "MISMATCH"
        rep.data["matching"] = has == "YES"
    if not args.out:
        sys.stdout.write(text)
        rep.stream = sys.stderr
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddsun", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit one JSON object")

    c = sub.add_parser("check", help="search a family file for a sunflower")
    c.add_argument("kind", choices=["odd", "even", "classic"])
    c.add_argument("family")
    c.add_argument("--witness", action="store_true", help="print witness line numbers")
    c.add_argument("--budget", type=int,
                   default=int(os.environ.get("ODDSUN_BUDGET", 10**7)))
    common(c)
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("construct", help="write one of the explicit families")
    k.add_argument("name", choices=["cn", "cnplus", "dsum", "wreath",
                                    "construction1", "construction2", "tree"])
    k.add_argument("params", nargs="*")
    k.add_argument("--out")
    k.add_argument("--cap", type=int, default=int(os.environ.get("ODDSUN_CAP", 2**20)))
    common(k)
    k.set_defaults(func=cmd_construct)

    b = sub.add_parser("bounds", help="evaluate the growth-rate lower bounds")
    g = b.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true")
    g.add_argument("--eq", type=int, choices=[1, 2, 3],
                   help="1: C3 direct powers, 2: C9 wr C3, 3: C160511 wr (C9 wr C3)")
    common(b)
    b.set_defaults(func=cmd_bounds)

    m = sub.add_parser("mos", help="enumerate minimal odd-sunflowers")
    m.add_argument("k", type=int)
    m.add_argument("--max-n", type=int, dest="max_n")
    m.add_argument("--max-members", type=int, dest="max_members")
    m.add_argument("--out")
    common(m)
    m.set_defaults(func=cmd_mos)

    r = sub.add_parser("reduce", help="reduce a 3DM instance to a family")
    r.add_argument("threedm")
    r.add_argument("--out")
    r.add_argument("--verify", action="store_true")
    r.add_argument("--unpadded", action="store_true",
                   help="skip padding to an even tag family (demonstrates failure)")
    common(r)
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    rep = Report(args.json)
    try:
        code = args.func(args, rep)
    except (SunflowerError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    rep.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
