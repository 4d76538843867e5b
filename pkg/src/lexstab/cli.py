"""Command-line interface.

Every subcommand prints one report: ``command``, ``args``, ``input_digest``
and ``results``.  Big integers are decimal strings.  Exit status is 0 on
success, 1 for bad input and 2 when a mathematical invariant fails; errors go
to stderr as a single JSON line.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from typing import Any, Callable

from . import approx, hamilton, lcbc, monomial, oracle, unilex
from .errors import InputError, InvariantViolation, LexstabError

MAX_DMAX = 13
MAX_NMAX = 12
MAX_BLOCKS = 6


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _load_json(value: str) -> Any:
    if value == "-":
        text = sys.stdin.read()
    elif value.lstrip().startswith(("{", "[")):
        text = value
    else:
        try:
            with open(value, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {value}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg} at line {exc.lineno}") from None


def parse_ideal_spec(obj: Any):
    """Return ``(kind, value)`` for one of the three ideal-spec shapes."""
    if not isinstance(obj, dict):
        raise InputError("an ideal spec must be a JSON object")
    kinds = []
    if "generators" in obj or "variables" in obj:
        kinds.append("monomial")
    if "ci_degrees" in obj:
        kinds.append("ci")
    if "c" in obj:
        kinds.append("c")
    if len(kinds) != 1:
        raise InputError(
            'spec needs exactly one of {"variables","generators"}, {"ci_degrees"} or {"c"}'
        )
    kind = kinds[0]
    if kind == "monomial":
        return kind, monomial.MonomialIdeal.from_json(obj)
    if kind == "ci":
        degs = obj["ci_degrees"]
        if not isinstance(degs, list) or not all(isinstance(m, int) for m in degs):
            raise InputError("ci_degrees must be a list of integers")
        return kind, [int(m) for m in degs]
    return kind, lcbc.CoeffVector.from_json(obj)


def _ci_ideal(degrees: list[int]) -> monomial.MonomialIdeal:
    if not degrees or any(m < 1 for m in degrees):
        raise InputError("ci_degrees must be a nonempty list of positive integers")
    gens = []
    for i, m in enumerate(degrees):
        exps = [0] * len(degrees)
        exps[i] = m
        gens.append(monomial.Monomial(tuple(exps)))
    return monomial.minimalize(gens, len(degrees))


def coefficients_of(kind: str, value) -> lcbc.CoeffVector:
    if kind == "monomial":
        return monomial.hilbert_numerator(value)
    if kind == "ci":
        return lcbc.ci_numerator(value)
    return value


def ideal_of(kind: str, value) -> monomial.MonomialIdeal:
    if kind == "monomial":
        return value
    if kind == "ci":
        return _ci_ideal(value)
    raise InputError("this command needs a monomial ideal or ci_degrees, not raw coefficients")


def _cap(name: str, value: int, cap: int, unsafe: bool) -> None:
    if value > cap and not unsafe:
        raise InputError(f"{name}={value} exceeds the cap {cap}; pass --unsafe-unbounded to override")


# ---------------------------------------------------------------------------
# subcommands: each returns (input object, results, tabular rows)
# ---------------------------------------------------------------------------

def cmd_approx(args):
    spec = _load_json(args.spec)
    kind, value = parse_ideal_spec(spec)
    _cap("dmax", args.dmax, MAX_DMAX, args.unsafe_unbounded)
    c = coefficients_of(kind, value)
    seq = approx.b_sequence(c, args.dmax)
    results = {"c": c.to_json()["c"], **seq.to_json()}
    if args.cross_check:
        for d in range(0, args.dmax):
            other = approx.a_by_difference(c, seq.b[1:d + 1], d)
            if other != seq.a[d]:
                raise InvariantViolation(
                    f"a_{d + 1}: recursion gives {seq.a[d]}, difference gives {other}"
                )
        results["cross_check"] = "ok"
    header = ["d", "a_d", "b_d"]
    rows = [[d, "" if d == 0 else seq.a[d - 1], seq.b[d]] for d in range(args.dmax + 1)]
    return spec, results, (header, rows)


def cmd_hamilton(args):
    _cap("nmax", args.nmax, MAX_NMAX, args.unsafe_unbounded)
    table = hamilton.ell(args.nmax)
    results: dict[str, Any] = {
        "table": [
            {"n": n, "ell": str(l), "H": None if H is None else str(H)}
            for n, l, H in table.rows()
        ]
    }
    if args.check_bounds:
        rep = hamilton.check_bounds(table)
        results["bounds"] = {"ok": rep.ok, "checked": rep.checked, "first_violation": rep.first_violation}
    if args.alt_check:
        mism = []
        for n in range(1, args.nmax):
            if hamilton.ell_alt_a(n, table) != table.ell[n + 1]:
                mism.append(f"alt_a n={n}")
        for n in range(args.nmax + 1):
            if hamilton.ell_alt_b(n, table) != table.ell[n]:
                mism.append(f"alt_b n={n}")
        for n in range(args.nmax + 1):
            if hamilton.hamilton_alt_c(n, table) != table.H(n + 1):
                mism.append(f"alt_c n={n}")
        results["alt_check"] = {"ok": not mism, "mismatches": mism}
    rows = [[n, l, "" if H is None else H] for n, l, H in table.rows()]
    return None, results, (["n", "ell_n", "H_n"], rows)


def cmd_rho(args):
    guard = hamilton.DEFAULT_GUARD_DIGITS
    env = os.environ.get("LEXSTAB_PRECISION")
    if env:
        try:
            guard = int(env)
        except ValueError:
            raise InputError(f"LEXSTAB_PRECISION must be an integer, got {env!r}") from None
    _cap("n+1", args.n + 1, MAX_NMAX, args.unsafe_unbounded)
    table = hamilton.ell(args.n + 1)
    est = hamilton.rho_estimate(args.n, table, args.digits, guard)
    results = est.to_json()
    results["guard_digits"] = guard
    rows = [[k, v] for k, v in results.items()]
    return None, results, (["field", "value"], rows)


def cmd_lucas(args):
    _cap("blocks", args.blocks, MAX_BLOCKS, args.unsafe_unbounded)
    arr = hamilton.lucas_array(args.blocks, args.width)
    results = arr.to_json()
    results["H"] = [str(h) for h in arr.hamilton_numbers()]
    rows = [[i, r.indentation, *r.entries] for i, r in enumerate(arr.rows)]
    header = ["row", "indentation"] + [f"e{k}" for k in range(args.width)]
    return None, results, (header, rows)


def cmd_unilex(args):
    spec = _load_json(args.gamma)
    g = unilex.GammaSpec.from_json(spec)
    gens = unilex.generators_from_gamma(g)
    n = g.total
    hf = [unilex.hf_gamma(g, args.nvars, t) for t in range(args.tmax + 1)]
    results = {
        "gamma": g.to_json()["gamma"],
        "generators": [list(m.padded(n)) for m in gens],
        "generators_text": [str(m) for m in gens],
        "nvars": args.nvars,
        "hilbert_function": [str(v) for v in hf],
    }
    rows = [[t, v] for t, v in enumerate(hf)]
    return spec, results, (["t", "dim"], rows)


def cmd_oracle(args):
    spec = _load_json(args.ideal)
    I = ideal_of(*parse_ideal_spec(spec))
    if args.explicit and args.nvars is None:
        raise InputError("--explicit needs --nvars")
    if args.nvars is not None:
        if args.explicit:
            res = oracle.lex_approx_explicit(I, args.nvars, args.dmax)
        else:
            res = oracle.lex_approx_macaulay(I, args.nvars, args.dmax)
        results = res.to_json()
        a, b = res.a, res.b
    else:
        stab = oracle.stabilization(I, args.dmax, args.margin)
        results = {"mode": "stabilization", **stab.to_json()}
        a, b = stab.a, stab.b
    rows = [[d, a[d - 1], b[d]] for d in range(1, args.dmax + 1)]
    return spec, results, (["d", "a_d", "b_d"], rows)


def cmd_fit(args):
    obj = _load_json(args.samples)
    raw = obj["samples"] if isinstance(obj, dict) and "samples" in obj else obj
    try:
        samples = [(int(N), int(t), int(v)) for N, t, v in raw]
    except (TypeError, ValueError) as exc:
        raise InputError(f"samples must be [N, t, value] triples: {exc}") from None
    c = lcbc.fit(samples, args.smin, args.smax)
    results = c.to_json()
    rows = [[s, cs] for s, cs in c]
    return obj, results, (["s", "c_s"], rows)


COMMANDS: dict[str, Callable] = {
    "approx": cmd_approx,
    "hamilton": cmd_hamilton,
    "rho": cmd_rho,
    "lucas": cmd_lucas,
    "unilex": cmd_unilex,
    "oracle": cmd_oracle,
    "fit": cmd_fit,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"], default="json")
    common.add_argument("--timing", action="store_true", help="report wall time on stderr")
    common.add_argument("--unsafe-unbounded", action="store_true",
                        help="lift the size caps on dmax, nmax and blocks")

    p = _Parser(prog="lexstab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("approx", parents=[common], help="stable generator counts a_d, b_d")
    s.add_argument("--spec", required=True, help="JSON text, file path, or - for stdin")
    s.add_argument("--dmax", type=int, default=MAX_DMAX)
    s.add_argument("--cross-check", action="store_true",
                   help="recompute every a_d by the difference method")

    s = sub.add_parser("hamilton", parents=[common], help="table of ell_n and H_n")
    s.add_argument("--nmax", type=int, default=MAX_NMAX)
    s.add_argument("--check-bounds", action="store_true")
    s.add_argument("--alt-check", action="store_true")

    s = sub.add_parser("rho", parents=[common], help="growth constant estimate")
    s.add_argument("--n", type=int, default=9)
    s.add_argument("--digits", type=int, default=43)

    s = sub.add_parser("lucas", parents=[common], help="Lucas block array")
    s.add_argument("--blocks", type=int, default=6)
    s.add_argument("--width", type=int, default=8)

    s = sub.add_parser("unilex", parents=[common], help="universal lex ideal from Gamma")
    s.add_argument("--gamma", required=True)
    s.add_argument("--nvars", type=int, required=True)
    s.add_argument("--tmax", type=int, default=6)

    s = sub.add_parser("oracle", parents=[common], help="direct lex-ideal construction")
    s.add_argument("--ideal", required=True)
    s.add_argument("--dmax", type=int, default=6)
    s.add_argument("--margin", type=int, default=4)
    s.add_argument("--explicit", action="store_true")
    s.add_argument("--nvars", type=int)

    s = sub.add_parser("fit", parents=[common], help="recover c_s from samples")
    s.add_argument("--samples", required=True)
    s.add_argument("--smin", type=int, required=True)
    s.add_argument("--smax", type=int, required=True)
    return p


def _digest(command: str, args: dict, payload: Any) -> str:
    blob = json.dumps({"command": command, "args": args, "input": payload},
                      sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()


def _render(fmt: str, report: dict, table) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    header, rows = table
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    cells = [[str(x) for x in header]] + [[str(x) for x in r] for r in rows]
    ncol = max(len(r) for r in cells)
    widths = [max(len(r[i]) for r in cells if i < len(r)) for i in range(ncol)]
    lines = ["  ".join(c.rjust(widths[i]) for i, c in enumerate(r)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        start = time.perf_counter()
        payload, results, table = COMMANDS[args.command](args)
        elapsed = time.perf_counter() - start
        echo = {k: v for k, v in vars(args).items() if k not in ("command", "format", "timing")}
        report = {
            "command": args.command,
            "args": echo,
            "input_digest": _digest(args.command, echo, payload),
            "results": results,
        }
        stdout.write(_render(args.format, report, table))
        if args.timing:
            stderr.write(json.dumps({"timing_seconds": round(elapsed, 6)}) + "\n")
        return 0
    except InputError as exc:
        stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    except InvariantViolation as exc:
        stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2
    except LexstabError as exc:  # pragma: no cover - every subclass is handled above
        stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
