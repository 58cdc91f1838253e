"""Command line: face ring tables, loop-space ranks and verification suites.

Every command writes one JSON document with a ``schema`` field.  Exit codes:
0 ok, 1 a check failed, 2 parse error, 3 invalid poset, 4 ring is not a
field, 5 bounds above the hard limits.
"""

import argparse
import json
import sys

import yaml

from .facering import FaceRing, PosetError, SimplicialPoset, mayer_vietoris
from .homlin import NotAFieldError, WindowError
from .loops import hh_free_loops, totals, tor_loops
from .rings import ring_from_name

SCHEMA = "hgaform/1"

EXIT_FAIL, EXIT_PARSE, EXIT_INVALID, EXIT_FIELD, EXIT_LIMIT = 1, 2, 3, 4, 5

MAX_WINDOW = 16


class InputError(ValueError):
    def __init__(self, message, location=None):
        ValueError.__init__(self, message)
        self.location = location


class LimitError(ValueError):
    pass


# --- input --------------------------------------------------------------------------------

def load_poset(path):
    """Read ``vertices`` plus ``facets`` (complex) or ``elements`` (poset) from YAML or JSON."""
    try:
        with open(path) as fh:
            doc = yaml.safe_load(fh)
    except OSError as e:
        raise InputError(str(e), {"file": path})
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        loc = {"file": path}
        if mark is not None:
            loc.update(line=mark.line + 1, column=mark.column + 1)
        raise InputError(getattr(e, "problem", None) or str(e), loc)
    return parse_poset(doc, path)


def parse_poset(doc, path="<input>"):
    if not isinstance(doc, dict):
        raise InputError("top level must be a mapping", {"file": path, "field": ""})
    if "vertices" not in doc or not isinstance(doc["vertices"], list):
        raise InputError("missing list field 'vertices'", {"file": path, "field": "vertices"})
    vertices = doc["vertices"]
    name = str(doc.get("name", path))
    if "facets" in doc:
        facets = doc["facets"]
        if not isinstance(facets, list):
            raise InputError("'facets' must be a list", {"file": path, "field": "facets"})
        for i, f in enumerate(facets):
            if not isinstance(f, list):
                raise InputError("facet must be a list", {"file": path, "field": "facets[%d]" % i})
        return SimplicialPoset.from_complex(vertices, facets, name=name)
    if "elements" in doc:
        elements = doc["elements"]
        if not isinstance(elements, list):
            raise InputError("'elements' must be a list", {"file": path, "field": "elements"})
        for i, e in enumerate(elements):
            where = {"file": path, "field": "elements[%d]" % i}
            if not isinstance(e, dict):
                raise InputError("element must be a mapping", where)
            for key in ("id", "rank"):
                if key not in e:
                    raise InputError("element lacks %r" % key, where)
            if not isinstance(e["rank"], int) or e["rank"] < 0:
                raise InputError("rank must be a non-negative integer", where)
            if not isinstance(e.get("covers", []), list) or not isinstance(e.get("vertices", []), list):
                raise InputError("'covers' and 'vertices' must be lists", where)
        return SimplicialPoset.from_elements(vertices, elements, name=name)
    raise InputError("need 'facets' or 'elements'", {"file": path, "field": ""})


# --- output -------------------------------------------------------------------------------

def rank_table(ranks):
    return [{"k": k, "m": m, "rank": r} for (k, m), r in sorted(ranks.items())]


def emit(doc, out):
    text = json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _header(args, command):
    return {"schema": SCHEMA, "command": command, "seed": args.seed}


def _window(args):
    if args.window < 0:
        raise InputError("window must be non-negative", {"flag": "--window"})
    if args.window > MAX_WINDOW:
        raise LimitError("window %d exceeds %d" % (args.window, MAX_WINDOW))
    return args.window


# --- commands -----------------------------------------------------------------------------

def cmd_facering(args):
    P = load_poset(args.input)
    window = _window(args)
    report = P.validate()
    doc = _header(args, "facering")
    doc.update(input=args.input, window=window, ring=args.ring, poset=report)
    if not report["valid"]:
        emit(doc, args.out)
        return EXIT_INVALID
    R = FaceRing(P, window, ring_from_name(args.ring))
    hilbert = R.hilbert()
    relations = [dict(r, status="pass" if r["status"] else "fail") for r in R.check_relations()]
    generated = [R.generated_dims(d) for d in range(window + 1)]
    doc.update(hilbert=[{"degree": d, "dim": n} for d, n in enumerate(hilbert)], relations=relations,
               generated=generated, generation="pass" if generated == hilbert else "fail")
    ok = all(r["status"] == "pass" for r in relations) and generated == hilbert
    if args.cover:
        parts = [P.subposet(part) for part in _cover(P, args.cover)]
        mv = mayer_vietoris(P, parts[0], parts[1], window, ring_from_name(args.ring))
        doc["mayer_vietoris"] = mv
        ok = ok and all(r["status"] for r in mv)
    emit(doc, args.out)
    return 0 if ok else EXIT_FAIL


def _cover(P, text):
    """``a,b;c,d`` lists the top elements of the two halves."""
    halves = text.split(";")
    if len(halves) != 2:
        raise InputError("cover needs two halves separated by ';'", {"flag": "--cover"})
    out = []
    for h in halves:
        tops = []
        for item in h.split(","):
            item = item.strip()
            match = [x for x in P.elements() if _names_match(x, item)]
            if not match:
                raise InputError("unknown element %r" % item, {"flag": "--cover"})
            tops.append(match[0])
        out.append(tops)
    return out


def _names_match(x, item):
    """Poset ids match literally; faces of a complex by vertex set, as '1-4' or '14'."""
    if isinstance(x, tuple):
        parts = item.split("-") if "-" in item else list(item)
        return sorted(str(v) for v in x) == sorted(parts)
    return str(x) == item


def _loops(args, command, fn):
    P = load_poset(args.input)
    window = _window(args)
    ring = ring_from_name(args.ring)
    report = P.validate()
    if not report["valid"]:
        doc = _header(args, command)
        doc.update(input=args.input, poset=report)
        emit(doc, args.out)
        return EXIT_INVALID
    ranks = fn(P, window, ring)
    doc = _header(args, command)
    doc.update(input=args.input, window=window, ring=ring.name, ranks=rank_table(ranks),
               totals=[{"k": k, "rank": r} for k, r in totals(ranks).items()])
    emit(doc, args.out)
    return 0


def cmd_tor(args):
    return _loops(args, "tor", tor_loops)


def cmd_hh(args):
    return _loops(args, "hh", hh_free_loops)


def cmd_verify(args):
    from .verify import LIMITS, run_suite
    bounds = {}
    for key in ("kl", "dim", "dims", "k", "l", "rank", "deg", "samples"):
        v = getattr(args, key)
        if v is None:
            continue
        if v < 0:
            raise InputError("bound must be non-negative", {"flag": "--" + key})
        if v > LIMITS[key]:
            raise LimitError("--%s %d exceeds the limit %d" % (key, v, LIMITS[key]))
        bounds[key] = v
    bounds["seed"] = args.seed
    certs = run_suite(args.suite, **bounds)
    records = sorted((c.record() for c in certs),
                     key=lambda r: json.dumps([r["identity"], r["instance"]], sort_keys=True, default=str))
    failed = sum(r["status"] == "fail" for r in records)
    doc = _header(args, "verify")
    doc.update(suite=args.suite, bounds={k: v for k, v in bounds.items() if k != "seed"},
               checked=len(records), failed=failed, status="pass" if not failed else "fail",
               records=records)
    emit(doc, args.out)
    return 0 if not failed else EXIT_FAIL


# --- entry point --------------------------------------------------------------------------

def build_parser():
    from .verify import SUITES
    p = argparse.ArgumentParser(prog="hgaform", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", "-o", default=None, help="write JSON here instead of stdout")

    fr = sub.add_parser("facering", help="Hilbert table and relation checks for k[Sigma]")
    fr.add_argument("input")
    fr.add_argument("--window", type=int, default=8)
    fr.add_argument("--ring", default="QQ")
    fr.add_argument("--cover", default=None, help="Mayer-Vietoris cover as 'tops1;tops2'")
    common(fr)
    fr.set_defaults(fn=cmd_facering)

    for name, fn, text in (("tor", cmd_tor, "bigraded Tor over k[Sigma] (based loops)"),
                           ("hh", cmd_hh, "bigraded HH of k[Sigma] (free loops)")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("input")
        sp.add_argument("--window", type=int, default=8)
        sp.add_argument("--ring", default="QQ")
        common(sp)
        sp.set_defaults(fn=fn)

    v = sub.add_parser("verify", help="run an identity suite and write certificates")
    v.add_argument("suite", choices=SUITES)
    for key in ("kl", "dim", "dims", "k", "l", "rank", "deg", "samples"):
        v.add_argument("--" + key, type=int, default=None)
    common(v)
    v.set_defaults(fn=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_PARSE
    try:
        return args.fn(args)
    except InputError as e:
        _error("parse error", e, e.location)
        return EXIT_PARSE
    except PosetError as e:
        _error("invalid poset", e, {"problems": e.problems})
        return EXIT_INVALID
    except NotAFieldError as e:
        _error("not a field", e)
        return EXIT_FIELD
    except (LimitError, WindowError) as e:
        _error("limits exceeded", e)
        return EXIT_LIMIT
    except ValueError as e:
        if "coefficient ring" in str(e):
            _error("parse error", e, {"flag": "--ring"})
            return EXIT_PARSE
        raise


def _error(kind, exc, location=None):
    doc = {"schema": SCHEMA, "error": kind, "message": str(exc)}
    if location:
        doc["location"] = location
    sys.stderr.write(json.dumps(doc, sort_keys=True, default=str) + "\n")


if __name__ == "__main__":
    sys.exit(main())
