"""Command-line interface.

Usage::

    mahlerres --p P [--lambda L] [--json] VERB ARGS...
    mahlerres --fixtures FILE

Verbs: decompose, residues, summable, reduce, certify, telescope, vcoeff,
disp.  Exit codes: 0 success, 1 other library error or failing fixture,
2 parse or usage error, 3 unsupported input, 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from contextlib import redirect_stdout
from io import StringIO

from .constants import Point
from .errors import InternalVerificationFailure, MahlerError, ParseError, UnsupportedError
from .mahlercoeff import v_taylor
from .parse import parse_expr
from .ratfun import PFD, pf_decompose
from .residues import certificate, reduce
from .telescope import decide_dependence, verify_verdict
from .trees import INF, INFINITY, disp, supp

VERBS = ("decompose", "residues", "summable", "reduce", "certify", "telescope", "vcoeff", "disp")
NEEDS_LAMBDA = ("residues", "summable", "reduce", "certify")


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mahlerres", description="Twisted Mahler discrete residues and summability.")
    ap.add_argument("--p", type=int, help="Mahler radix p >= 2")
    ap.add_argument("--lambda", dest="lam", type=int, help="twist lambda")
    ap.add_argument("--json", action="store_true", help="emit JSON")
    ap.add_argument("--fixtures", metavar="FILE", help="run a fixture file of {command, expect} lines")
    ap.add_argument("verb", nargs="?", choices=VERBS)
    return ap


def _split(argv: list[str]) -> tuple[list[str], list[str]]:
    """Flags and the verb go to argparse; everything after the verb is input."""
    for i, tok in enumerate(argv):
        if tok in VERBS:
            head, tail = argv[: i + 1], argv[i + 1 :]
            inputs, extra = [], []
            j = 0
            while j < len(tail):
                t = tail[j]
                if t == "--json":
                    extra.append(t)
                elif t in ("--p", "--lambda") and j + 1 < len(tail):
                    extra.extend(tail[j : j + 2])
                    j += 1
                elif t.startswith(("--p=", "--lambda=")):
                    extra.append(t)
                else:
                    inputs.append(t)
                j += 1
            return head[:-1] + extra + head[-1:], inputs
    return argv, []


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def pfd_json(d: PFD) -> dict:
    return {
        "laurent": [{"exp": e, "value": v.text()} for e, v in sorted(d.laurent.items())],
        "poles": [
            {"point": pt.text(), "degree": k, "value": v.text()}
            for pt in sorted(d.poles, key=Point.sort_key)
            for k, v in sorted(d.poles[pt].items())
        ],
    }


def _disp_text(v) -> str:
    return "infinity" if v is INF else str(v)


def residues_json(expr: str, p: int, lam: int) -> dict:
    f = parse_expr(expr, p)
    red = reduce(f, lam, p)
    inf_entries, tree_entries = [], []
    for loc in red.locals:
        for rv in loc.residues:
            if rv.locus == INFINITY:
                for i in sorted(rv.entries, key=lambda i: (abs(i), i)):
                    inf_entries.append({"traj": i, "value": rv.entries[i].text()})
            else:
                for a in sorted(rv.entries, key=Point.sort_key):
                    tree_entries.append(
                        {"tree": rv.locus_text(), "degree": rv.degree, "point": a.text(), "value": rv.entries[a].text()}
                    )
    cert = None
    if red.is_summable():
        g = certificate(red.f, lam, p)
        cert = g.text()
    return {
        "p": p,
        "lambda": lam,
        "summable": red.is_summable(),
        "residues": {"infinity": inf_entries, "trees": tree_entries},
        "certificate": cert,
        "residual": red.residual.text(),
    }


def _one_input(verb: str, inputs: list[str]) -> str:
    if len(inputs) != 1:
        raise UsageError(f"{verb} takes exactly one expression")
    return inputs[0]


def run(argv: list[str]) -> int:
    """Run one command; returns the exit code and writes to stdout."""
    head, inputs = _split(list(argv))
    ap = _parser()
    try:
        ns = ap.parse_args(head)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if ns.fixtures:
            return run_fixtures(ns.fixtures)
        if ns.verb is None:
            raise UsageError("a verb is required")
        if ns.p is None or ns.p < 2:
            raise UsageError("--p must be given as an integer >= 2")
        if ns.verb in NEEDS_LAMBDA and ns.lam is None:
            raise UsageError(f"{ns.verb} requires --lambda")
        out = _dispatch(ns.verb, ns.p, ns.lam, ns.json, inputs)
        sys.stdout.write(out if out.endswith("\n") else out + "\n")
        return 0
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 3
    except InternalVerificationFailure as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 4
    except MahlerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(verb: str, p: int, lam, as_json: bool, inputs: list[str]) -> str:
    if verb == "vcoeff":
        if len(inputs) != 3:
            raise UsageError("vcoeff takes m k n")
        try:
            m, k, n = (int(v) for v in inputs)
        except ValueError as exc:
            raise UsageError("vcoeff arguments must be integers") from exc
        if not (1 <= k <= m) or n < 0:
            raise UsageError("vcoeff needs 1 <= k <= m and n >= 0")
        v = v_taylor(m, k, n, p)
        return _dump({"p": p, "m": m, "k": k, "n": n, "value": str(v)}) if as_json else str(v)

    if verb == "telescope":
        if not inputs:
            raise UsageError("telescope takes one or more expressions")
        a = [parse_expr(s, p) for s in inputs]
        verdict = decide_dependence(a, p)
        if not verify_verdict(a, p, verdict):
            raise InternalVerificationFailure("dependence witness failed to verify")
        if as_json:
            return _dump(verdict.to_json())
        if verdict.dependent:
            k = ",".join(str(v) for v in verdict.coefficients)
            return f"dependent\nk: ({k})\ng: {verdict.witness.text()}"
        return "independent"

    expr = _one_input(verb, inputs)
    if verb == "decompose":
        d = pf_decompose(parse_expr(expr, p))
        if as_json:
            return _dump(pfd_json(d))
        lines = [f"x^{e}: {v.text()}" for e, v in sorted(d.laurent.items())]
        for pt in sorted(d.poles, key=Point.sort_key):
            for k, v in sorted(d.poles[pt].items()):
                lines.append(f"1/(x-{pt.text()})^{k}: {v.text()}")
        return "\n".join(lines) if lines else "0"

    if verb == "disp":
        d = pf_decompose(parse_expr(expr, p))
        rows = []
        for locus in supp(d, p):
            name = "infinity" if locus == INFINITY else locus.key_text()
            rows.append({"locus": name, "disp": _disp_text(disp(d, locus, p))})
        if as_json:
            return _dump({"p": p, "dispersion": rows})
        return "\n".join(f"{r['locus']}: {r['disp']}" for r in rows) if rows else "empty support"

    if verb == "residues":
        obj = residues_json(expr, p, lam)
        if as_json:
            return _dump(obj)
        lines = [f"infinity traj {r['traj']}: {r['value']}" for r in obj["residues"]["infinity"]]
        lines += [
            f"{r['tree']} degree {r['degree']} at {r['point']}: {r['value']}" for r in obj["residues"]["trees"]
        ]
        lines.append(f"summable: {'true' if obj['summable'] else 'false'}")
        return "\n".join(lines)

    f = parse_expr(expr, p)
    if verb == "summable":
        red = reduce(f, lam, p)
        s = red.is_summable()
        return _dump({"p": p, "lambda": lam, "summable": s}) if as_json else ("true" if s else "false")

    if verb == "reduce":
        red = reduce(f, lam, p)
        obj = {"p": p, "lambda": lam, "residual": red.residual.text(), "certificate_part": red.certificate_part.text()}
        if as_json:
            return _dump(obj)
        return f"residual: {obj['residual']}\ncertificate_part: {obj['certificate_part']}"

    if verb == "certify":
        g = certificate(f, lam, p)
        if as_json:
            return _dump({"p": p, "lambda": lam, "summable": g is not None, "certificate": g.text() if g else None})
        return g.text() if g is not None else "not summable"

    raise UsageError(f"unknown verb {verb}")


def run_fixtures(path: str) -> int:
    """Run each {command, expect} line; expect may hold stdout, exit and json keys."""
    failures = 0
    total = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            total += 1
            rec = json.loads(line)
            cmd = rec["command"]
            argv = shlex.split(cmd) if isinstance(cmd, str) else list(cmd)
            expect = rec.get("expect", {})
            if not isinstance(expect, dict):
                expect = {"stdout": expect}
            buf = StringIO()
            with redirect_stdout(buf):
                code = run(argv)
            out = buf.getvalue().strip()
            ok = code == expect.get("exit", 0)
            if ok and "stdout" in expect:
                ok = out == str(expect["stdout"]).strip()
            if ok and "json" in expect:
                try:
                    got = json.loads(out)
                except json.JSONDecodeError:
                    got = None
                ok = isinstance(got, dict) and all(got.get(k) == v for k, v in expect["json"].items())
            print(f"{'PASS' if ok else 'FAIL'} line {lineno}: {' '.join(argv)}")
            failures += not ok
    print(f"{total - failures}/{total} fixtures passed")
    return 1 if failures else 0


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
