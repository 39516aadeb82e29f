"""Command line front end.

Exit codes: 0 success, 1 usage error (bad flags, names or pairs),
2 data or consistency error.  Errors go to stderr as one line
``error[CODE]: message``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from .nilpotent import NilpotentOrbit, OrbitDataError, all_orbits, orbits_meeting
from .pairs import (
    Classification,
    ConsistencyError,
    PairError,
    SymmetricPair,
    catalog,
    classify,
    generate_table,
    lookup,
    proper_sl2_witnesses,
)
from .rootcore import DynkinType, RootDataError, WeightedDynkinDiagram
from .satake import RealFormError, all_real_forms, matches, parse_name, satake_of

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage().strip()}")


def _weights_text(w: WeightedDynkinDiagram) -> str:
    return " ".join(str(x) for x in w.weights)


def _vector_text(v) -> Optional[str]:
    return None if v is None else " ".join(str(Fraction(x)) for x in v)


def _orbit_record(o: NilpotentOrbit) -> dict:
    return {"label": o.name, "wdd": _weights_text(o.wdd)}


def classification_record(pair: SymmetricPair, c: Classification) -> dict:
    """Flat record shared by text and JSON output."""
    return {
        "schema_version": SCHEMA_VERSION,
        "g": str(pair.g),
        "h": str(pair.h),
        "g_c": str(pair.g_c),
        "set": c.set_label,
        "cond5": c.cond5,
        "cond6": c.cond6,
        "cond7": c.cond7,
        "cond8": c.cond8,
        "witness": None if c.witness_orbit is None else c.witness_orbit.name,
        "witness_wdd": None if c.witness_orbit is None else _weights_text(c.witness_orbit.wdd),
        "certificate": _vector_text(c.certificate),
        "no_compact_quotient": c.no_compact_quotient,
        "family": pair.family,
        "citation": pair.citation,
    }


def _text_value(v) -> str:
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "-"
    return str(v)


def render_text_record(rec: dict) -> str:
    return "\n".join(f"{k}: {_text_value(v)}" for k, v in rec.items())


def parse_text_record(text: str) -> dict:
    """Inverse of ``render_text_record``."""
    out = {}
    for line in text.strip().splitlines():
        k, _, v = line.partition(": ")
        if v == "true":
            out[k] = True
        elif v == "false":
            out[k] = False
        elif v == "-":
            out[k] = None
        elif v.lstrip("-").isdigit():
            out[k] = int(v)
        else:
            out[k] = v
    return out


def _emit(out: TextIO, fmt: str, data, text: str):
    if fmt == "json":
        out.write(json.dumps(data, sort_keys=False) + "\n")
    else:
        out.write(text + ("\n" if text else ""))


def _cmd_classify(args, out):
    pair = lookup(args.g, args.h)
    c = classify(pair)
    rec = classification_record(pair, c)
    _emit(out, args.format, rec, render_text_record(rec))


def _cmd_orbits(args, out):
    dtype = DynkinType.parse(args.type)
    if args.real_form:
        s = satake_of(parse_name(args.real_form))
        orbits = orbits_meeting(dtype, s)
    else:
        orbits = all_orbits(dtype)
    recs = [_orbit_record(o) for o in orbits]
    text = "\n".join(f"{r['label']} | {r['wdd']}" for r in recs)
    data = {"schema_version": SCHEMA_VERSION, "type": str(dtype), "real_form": args.real_form, "orbits": recs}
    _emit(out, args.format, data, text)


def _cmd_match(args, out):
    dtype = DynkinType.parse(args.type)
    try:
        weights = tuple(Fraction(x) for x in args.weights.split(","))
    except ValueError:
        raise UsageError(f"cannot parse weights {args.weights!r}")
    w = WeightedDynkinDiagram(dtype, weights)
    result = matches(w, satake_of(parse_name(args.real_form)))
    data = {"schema_version": SCHEMA_VERSION, "type": str(dtype), "weights": _weights_text(w),
            "real_form": args.real_form, "match": result}
    _emit(out, args.format, data, _text_value(result))


def _cmd_witnesses(args, out):
    pair = lookup(args.g, args.h)
    rep = proper_sl2_witnesses(pair)
    if rep.real_level:
        groups = [{"shape": o.name, "diagrams": [str(d) for d in ds]} for o, ds in rep.signed]
        lines = [f"{g['shape']}: " + ", ".join(g["diagrams"]) for g in groups]
    else:
        groups = [_orbit_record(o) for o in rep.orbits]
        lines = [f"{g['label']} | {g['wdd']}" for g in groups]
    lines.append(f"total: {rep.count()}")
    data = {"schema_version": SCHEMA_VERSION, "g": str(pair.g), "h": str(pair.h), "g_c": str(pair.g_c),
            "level": "real" if rep.real_level else "complex", "witnesses": groups, "total": rep.count()}
    _emit(out, args.format, data, "\n".join(lines))


def _cmd_table(args, out):
    which = {"1": "table1", "4": "table4"}[args.which]
    rows = generate_table(which, args.rank_bound, workers=args.workers)
    recs = [classification_record(p, c) for p, c in rows]
    text = "\n".join(f"{r['set']} | {r['g']} | {r['h']} | {r['g_c']} | {r['family']}" for r in recs)
    data = {"schema_version": SCHEMA_VERSION, "table": which, "rank_bound": args.rank_bound, "rows": recs}
    _emit(out, args.format, data, text)


def _cmd_catalog(args, out):
    forms = [str(f) for f in all_real_forms(args.rank_bound)]
    pairs = [{"g": str(p.g), "h": str(p.h), "g_c": str(p.g_c), "family": p.family}
             for p in catalog(args.rank_bound)]
    lines = ["# real forms"] + forms + ["# pairs"]
    lines += [f"{p['g']} | {p['h']} | {p['g_c']} | {p['family']}" for p in pairs]
    data = {"schema_version": SCHEMA_VERSION, "rank_bound": args.rank_bound, "real_forms": forms, "pairs": pairs}
    _emit(out, args.format, data, "\n".join(lines))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sympairs", description="Proper SL(2,R)-actions on symmetric spaces.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="classify a symmetric pair into A, B or C")
    c.add_argument("--g", required=True)
    c.add_argument("--h", required=True)
    c.set_defaults(func=_cmd_classify)

    o = sub.add_parser("orbits", help="list nilpotent orbits and their weighted Dynkin diagrams")
    o.add_argument("--type", required=True)
    o.add_argument("--real-form")
    o.set_defaults(func=_cmd_orbits)

    m = sub.add_parser("match", help="test a weighted Dynkin diagram against a real form")
    m.add_argument("--type", required=True)
    m.add_argument("--weights", required=True)
    m.add_argument("--real-form", required=True)
    m.set_defaults(func=_cmd_match)

    w = sub.add_parser("witnesses", help="enumerate proper SL(2,R) witnesses")
    w.add_argument("--g", required=True)
    w.add_argument("--h", required=True)
    w.set_defaults(func=_cmd_witnesses)

    t = sub.add_parser("table", help="regenerate the B list (1) or the A list (4)")
    t.add_argument("--which", required=True, choices=("1", "4"))
    t.add_argument("--rank-bound", type=int, default=8)
    t.add_argument("--workers", type=int, default=None)
    t.set_defaults(func=_cmd_table)

    k = sub.add_parser("catalog", help="list known real forms and symmetric pairs")
    k.add_argument("--rank-bound", type=int, default=4)
    k.set_defaults(func=_cmd_catalog)

    for sp in (c, o, m, w, t, k):
        sp.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    return p


def run(argv: Sequence[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(list(argv))
        if getattr(args, "rank_bound", 2) < 2:
            raise UsageError("--rank-bound must be at least 2")
        args.func(args, out)
    except UsageError as e:
        err.write(f"error[usage]: {str(e).splitlines()[0]}\n")
        return 1
    except (RealFormError, PairError, RootDataError) as e:
        code = "name" if isinstance(e, RealFormError) else "input"
        err.write(f"error[{code}]: {e}\n")
        return 1
    except (ConsistencyError, OrbitDataError) as e:
        err.write(f"error[consistency]: {e}\n")
        return 2
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
