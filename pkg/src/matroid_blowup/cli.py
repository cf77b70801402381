"""Command-line front end.

Every command reads a graph (``--graph``) or a point configuration
(``--config``) from JSON, and writes JSON (default) or aligned text. Output
carries a metadata block with the request, field, tower dimension and the
poset fingerprint, so identical requests give byte-identical output.

Exit codes: 0 success, 1 invalid input, 2 precondition violation,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .arrangement import (
    ConfigurationError,
    PointConfiguration,
    PreconditionError,
    arrangement_of_graph,
    build_arrangement,
)
from .degree import (
    BlowupTower,
    DegreeMismatchError,
    SelfIntersectionOnlyWarning,
    degree_d,
    monomial_degree,
)
from .divisors import build_Sbar
from .fields import Field
from .graphs import Graph, GraphError
from .matroid import (
    ResourceLimitError,
    beta_invariant,
    characteristic_polynomial,
    chromatic_polynomial,
    has_minor,
    is_modular,
    is_nice,
    signed_beta,
)
from .segre import segre_class

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def parse_range(text: str) -> list:
    """"2..5" -> [2, 3, 4, 5]; "3" -> [3]; "2,4,7" -> [2, 4, 7]."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise InputError(f"bad range {text!r}") from None


def parse_monomial(text: str) -> dict:
    """"0:2,5:1" -> {0: 2, 5: 1} (generator id : exponent, id 0 is H0)."""
    out = {}
    try:
        for part in text.split(","):
            g, a = part.split(":")
            out[int(g)] = out.get(int(g), 0) + int(a)
    except ValueError:
        raise InputError(f"bad monomial {text!r}; expected id:exp,...") from None
    return out


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def load_graph(args):
    if not args.graph:
        return None
    data = _read_json(args.graph)
    try:
        return Graph.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from None


def load_poset(args):
    """(poset, graph or None) from --graph / --config."""
    field = Field(args.field) if args.field else None
    if args.graph and args.config:
        raise InputError("give either --graph or --config, not both")
    if args.graph:
        g = load_graph(args)
        return arrangement_of_graph(g, field=field or Field("Q")), g
    if args.config:
        data = _read_json(args.config)
        if not isinstance(data, dict):
            raise InputError("configuration JSON must be an object")
        if field is not None:
            data = dict(data, field=field.tag)
        try:
            return build_arrangement(PointConfiguration.from_json(data)), None
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed configuration JSON: {exc}") from None
    raise InputError("an input is required: --graph FILE or --config FILE")


def _n(args, poset) -> int:
    return args.n if getattr(args, "n", None) is not None else poset.rank_of_top + args.padding


def _meta(args, poset=None, n=None) -> dict:
    req = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    meta = {"command": args.command, "request": req}
    if poset is not None:
        meta["field"] = poset.field.tag
        meta["fingerprint"] = poset.fingerprint()
        meta["rank"] = poset.rank_of_top
    if n is not None:
        meta["n"] = n
    return meta


def _table_text(title, rows, cols, values) -> str:
    width = max([len(str(v)) for row in values for v in row] + [4]) + 2
    lines = [title, "n\\m".ljust(6) + "".join(str(c).rjust(width) for c in cols)]
    for r, row in zip(rows, values):
        lines.append(str(r).ljust(6) + "".join(str(v).rjust(width) for v in row))
    return "\n".join(lines)


# -- commands --------------------------------------------------------------------

def cmd_flats(args):
    P, _ = load_poset(args)
    body = P.to_json()
    text = "\n".join(
        f"{e['id']:>4} {e['kind']:<6} rank {e['rank']}  atoms {e['atoms']}"
        for e in body["elements"]
    )
    return _meta(args, P), body, text


def cmd_charpoly(args):
    P, _ = load_poset(args)
    p = characteristic_polynomial(P, args.x)
    return _meta(args, P), p.to_json(), str(p)


def cmd_chromatic(args):
    g = load_graph(args)
    if g is None:
        raise InputError("chromatic needs --graph")
    p = chromatic_polynomial(g)
    body = {"polynomial": p.to_json()}
    text = str(p)
    if args.m is not None:
        body["m"] = args.m
        body["value"] = str(p(args.m))
        text = str(p(args.m))
    return _meta(args), body, text


def cmd_beta(args):
    P, _ = load_poset(args)
    b, B = beta_invariant(P, args.x), signed_beta(P, args.x)
    return _meta(args, P), {"beta": str(b), "signed_beta": str(B)}, f"beta = {b}\nB = {B}"


def cmd_modular(args):
    P, _ = load_poset(args)
    if args.x is not None:
        ok = is_modular(P, args.x)
        return _meta(args, P), {"x": args.x, "modular": ok}, str(ok).lower()
    mods = [x for x in P.lattice_ids if is_modular(P, x)]
    return _meta(args, P), {"modular": mods}, " ".join(map(str, mods))


def cmd_sbar(args):
    P, _ = load_poset(args)
    S = build_Sbar(P)
    if args.m is not None:
        S = S.evaluate(args.m)
    return _meta(args, P), S.to_json(), repr(S)


def cmd_degree(args):
    P, _ = load_poset(args)
    n = _n(args, P)
    tower = BlowupTower(P, n)
    if args.monomial:
        val = monomial_degree(tower, parse_monomial(args.monomial))
        return _meta(args, P, n), {"degree": str(val)}, str(val)
    if args.m is None:
        raise InputError("degree needs --monomial or --m")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SelfIntersectionOnlyWarning)
        val = degree_d(tower, args.m)
    body = {"m": args.m, "d": str(val),
            "self_intersection_only": any(issubclass(w.category, SelfIntersectionOnlyWarning)
                                          for w in caught)}
    return _meta(args, P, n), body, str(val)


def _grid(args, fn):
    P, _ = load_poset(args)
    ms, ns = parse_range(args.m), parse_range(args.n)
    for n in ns:
        if n <= P.rank_of_top:
            raise PreconditionError(f"n = {n} must exceed r(1) = {P.rank_of_top}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SelfIntersectionOnlyWarning)
        values = [[fn(BlowupTower(P, n), m) for m in ms] for n in ns]
    return P, ms, ns, values


def cmd_dtable(args):
    P, ms, ns, vals = _grid(args, degree_d)
    body = {"m": ms, "n": ns, "rows": [[str(v) for v in row] for row in vals],
            "nice": is_nice(P)}
    return _meta(args, P), body, _table_text("d(m,n)", ns, ms, vals)


def cmd_s0table(args):
    P, ms, ns, vecs = _grid(args, segre_class)
    body = {"m": ms, "n": ns,
            "rows": [[str(v.s0) for v in row] for row in vecs],
            "components": [[[str(c) for c in v.components] for v in row] for row in vecs],
            "nice": is_nice(P)}
    return _meta(args, P), body, _table_text("s0(m,n)", ns, ms,
                                             [[v.s0 for v in row] for row in vecs])


def cmd_nice(args):
    P, _ = load_poset(args)
    ok = is_nice(P)
    return _meta(args, P), {"nice": ok}, str(ok).lower()


def cmd_minor(args):
    P, _ = load_poset(args)
    ok = has_minor(P, args.target, max_points=args.max_points)
    return _meta(args, P), {"target": args.target, "has_minor": ok}, str(ok).lower()


def cmd_verify(args):
    from .verifier import build_corpus, congruence_scan, default_towers, run_identity_suite
    from .verifier.report import IdentityReport

    if args.corpus != "default":
        raise InputError(f"unknown corpus {args.corpus!r}")
    report = IdentityReport()
    if args.suite in ("all", "identities"):
        report.merge(run_identity_suite(build_corpus()))
    if args.suite in ("all", "congruences"):
        report.merge(congruence_scan(default_towers()))
    return _meta(args), report.to_json(), report.summary(), (0 if report.passed else EXIT_VERIFY)


def cmd_congruence(args):
    from .verifier import congruence_scan, default_towers
    from .verifier.corpus import CorpusEntry

    if args.graph or args.config:
        P, g = load_poset(args)
        entry = CorpusEntry("input", P.config, g, P)
        entries, P0 = [entry], P
    else:
        entries, P0 = default_towers(), None
    report = congruence_scan(entries, parse_range(args.m), args.n_max)
    return (_meta(args, P0), report.to_json(), report.summary(),
            0 if report.passed else EXIT_VERIFY)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matroid-blowup", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_, inputs=True):
        sp = sub.add_parser(name, help=help_)
        if inputs:
            sp.add_argument("--graph", help="graph JSON file")
            sp.add_argument("--config", help="point configuration JSON file")
            sp.add_argument("--field", help="Q or GF:p (overrides the input's field)")
            sp.add_argument("--padding", type=int, default=1,
                            help="tower dimension n = r(1) + padding (default 1)")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.set_defaults(func=func)
        return sp

    add("flats", cmd_flats, "list the poset L and M")
    add("charpoly", cmd_charpoly, "characteristic polynomial of L/x").add_argument(
        "--x", type=int, default=0)
    add("chromatic", cmd_chromatic, "chromatic polynomial of a graph").add_argument(
        "--m", type=int)
    add("beta", cmd_beta, "beta invariant of L/x").add_argument("--x", type=int, default=0)
    add("modular", cmd_modular, "modular elements").add_argument("--x", type=int)
    add("sbar", cmd_sbar, "the class S-bar(t) in the H-basis").add_argument("--m", type=int)
    sp = add("degree", cmd_degree, "degree of a monomial, or d(m, n)")
    sp.add_argument("--monomial", help="generator exponents, e.g. 0:1,3:2 (0 is H0)")
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int, help="tower dimension (overrides --padding)")
    for name, func in (("dtable", cmd_dtable), ("s0table", cmd_s0table)):
        sp = add(name, func, f"{name[:-5]}(m, n) table")
        sp.add_argument("--m", default="2..5")
        sp.add_argument("--n", default="3..7")
    add("nice", cmd_nice, "is the lattice nice")
    sp = add("minor", cmd_minor, "search for an L4 or F7 minor")
    sp.add_argument("--target", choices=("L4", "F7"), required=True)
    sp.add_argument("--max-points", type=int, default=10)
    sp = add("verify", cmd_verify, "run the identity and congruence suites", inputs=False)
    sp.add_argument("--suite", choices=("all", "identities", "congruences"), default="all")
    sp.add_argument("--corpus", default="default")
    sp = add("congruence", cmd_congruence, "congruence scan on an input or on K3, K4")
    sp.add_argument("--m", default="1..5")
    sp.add_argument("--n-max", type=int, default=7)
    return parser


def render(meta, body, text, fmt) -> str:
    if fmt == "text":
        return text
    return json.dumps({"meta": meta, "result": body}, sort_keys=True, indent=2)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise InputError("a subcommand is required")
        out = args.func(args)
        code = out[3] if len(out) > 3 else EXIT_OK
        print(render(out[0], out[1], out[2], args.format))
        return code
    except (PreconditionError, ResourceLimitError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InputError, GraphError, ConfigurationError, DegreeMismatchError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
