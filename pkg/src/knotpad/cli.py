"""Command-line front end.

Subcommands wrap the library pipelines and write UTF-8 JSON artifacts (SVG or
plain text for renders).  Every run serializes a RunManifest; output files
depend only on the inputs, so reruns are byte-identical.

Exit codes: 0 ok, 2 parse error, 3 not a knot, 4 budget or cap exceeded,
5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .alternating import reduce_alternating, theory_exponent
from .bracket import (
    framed_invariant,
    framed_invariant_plat,
    tl_vafa_exponent,
    twist_power,
)
from .corpus import corpus_entries
from .groups import load_preset
from .homcount import dw_vafa_exponent_full, homcount_pd, homcount_plat
from .pd import BudgetError, DiagramError, NotAKnotError, OrientedPDDiagram, parse_pd
from .plat import PlatDiagram, parse_plat
from .platreduce import bridge_distance, certificates_for, reduce_plat, volume_bounds
from .render import render_object

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_A_KNOT = 3
EXIT_BUDGET = 4
EXIT_VERIFY = 5

VERIFY_PD_CAP = 48


class VerificationError(Exception):
    pass


def _load_object(path: str) -> OrientedPDDiagram | PlatDiagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DiagramError(f"cannot read {path}: {exc}") from exc
    try:
        kind = json.loads(text).get("type")
    except (json.JSONDecodeError, AttributeError) as exc:
        raise DiagramError(f"{path}: malformed JSON document") from exc
    if kind == "pd":
        return parse_pd(text)
    if kind == "plat":
        return parse_plat(text)
    raise DiagramError(f'{path}: expected "type" of "pd" or "plat", got {kind!r}')


def _parse_theory(sel: str):
    """("tl", N) or ("dw", group) from a tl:<N> | dw:<group>/<class> selector."""
    if sel.startswith("tl:"):
        try:
            n = int(sel[3:])
        except ValueError as exc:
            raise DiagramError(f"bad theory selector {sel!r}") from exc
        if n < 3:
            raise DiagramError("tl:<N> needs N >= 3")
        return ("tl", n)
    if sel.startswith("dw:"):
        return ("dw", load_preset(sel[3:]))
    raise DiagramError(f"bad theory selector {sel!r}; use tl:<N> or dw:<group>/<class>")


def _invariant_of(obj, theory):
    kind, param = theory
    if kind == "tl":
        if isinstance(obj, PlatDiagram):
            return framed_invariant_plat(obj, param)
        return framed_invariant(obj, param, cap=VERIFY_PD_CAP)
    if isinstance(obj, PlatDiagram):
        return homcount_plat(obj, param)
    return homcount_pd(obj, param)


def _json_dump(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n"


def _emit(args, text: str, manifest: dict) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        manifest["outputs"] = [args.out]
        Path(args.out + ".manifest.json").write_text(
            _json_dump(manifest), encoding="utf-8"
        )
    else:
        sys.stdout.write(text)
        manifest["outputs"] = ["-"]
        sys.stderr.write(_json_dump(manifest))


def _manifest(args, command: str) -> dict:
    return {
        "type": "run-manifest",
        "command": command,
        "inputs": [args.input] if getattr(args, "input", None) else [],
        "theory": getattr(args, "theory", None),
        "flags": {
            "verify": bool(getattr(args, "verify", False)),
            "format": getattr(args, "format", None),
        },
        "exit_status": 0,
        "timing_s": 0.0,
    }


def _cmd_reduce_alt(args) -> tuple[str, dict]:
    K = _load_object(args.input)
    if not isinstance(K, OrientedPDDiagram):
        raise DiagramError("reduce-alt expects a PD document")
    theory = _parse_theory(args.theory)
    T = theory_exponent(args.theory)
    report = reduce_alternating(K, T)
    if args.verify:
        kind, param = theory
        target = report.plat if report.plat is not None else report.output
        got = _invariant_of(target, theory)
        want = _invariant_of(K, theory)
        if kind == "tl":
            want = want * twist_power(param, report.r)
        if got != want:
            raise VerificationError("invariant mismatch after reduce-alt")
    return _json_dump(report.to_json_obj()), {"case": report.case, "r": report.r}


def _cmd_reduce_plat(args) -> tuple[str, dict]:
    K = _load_object(args.input)
    if not isinstance(K, OrientedPDDiagram):
        raise DiagramError("reduce-plat expects a PD document")
    theory = _parse_theory(args.theory)
    report = reduce_plat(K, args.theory)
    if args.verify:
        if _invariant_of(report.output, theory) != _invariant_of(K, theory):
            raise VerificationError("invariant mismatch after reduce-plat")
    return _json_dump(report.to_json_obj()), {
        "m": report.m,
        "n": report.n,
        "distance": report.distance,
    }


def _cmd_invariant(args) -> tuple[str, dict]:
    obj = _load_object(args.input)
    kind, param = _parse_theory(args.theory)
    value = _invariant_of(obj, (kind, param))
    if kind == "tl":
        payload = {
            "type": "invariant",
            "theory": args.theory,
            "ring": f"Z[x]/(x^{param}-1)",
            "coefficients": list(value.vec),
        }
    else:
        payload = {"type": "invariant", "theory": args.theory, "count": int(value)}
    return _json_dump(payload), {}


def _cmd_exponent(args) -> tuple[str, dict]:
    kind, param = _parse_theory(args.theory)
    e = tl_vafa_exponent(param) if kind == "tl" else dw_vafa_exponent_full(param)
    payload = {"type": "exponent", "theory": args.theory, "exponent": e}
    return _json_dump(payload), {"exponent": e}


def _cmd_certify(args) -> tuple[str, dict]:
    P = _load_object(args.input)
    if not isinstance(P, PlatDiagram):
        raise DiagramError("certify expects a plat document")
    certs = certificates_for(P)
    payload = {
        "type": "certificate",
        "m": P.m,
        "n": P.n,
        "certificates": certs,
    }
    if certs["m_ge_3"] and certs["n_gt_bound"]:
        d = bridge_distance(P.m, P.n)
        lo, hi = volume_bounds(P.m, P.n)
        payload["distance"] = d
        payload["volume_bounds"] = [lo, hi]
    if not all(certs.values()):
        failed = sorted(k for k, v in certs.items() if not v)
        raise VerificationError(f"certificates failed: {', '.join(failed)}")
    return _json_dump(payload), {}


def _cmd_render(args) -> tuple[str, dict]:
    obj = _load_object(args.input)
    return render_object(obj, args.format), {"format": args.format}


def _cmd_corpus(args) -> tuple[str, dict]:
    outdir = Path(args.out or "corpus")
    outdir.mkdir(parents=True, exist_ok=True)
    names = []
    for name, obj in corpus_entries().items():
        suffix = ".plat.json" if isinstance(obj, PlatDiagram) else ".pd.json"
        (outdir / (name + suffix)).write_text(obj.serialize(), encoding="utf-8")
        names.append(name + suffix)
    index = {"type": "corpus-index", "entries": names}
    # the primary artifact is the index file inside the corpus directory
    args.out = str(outdir / "index.json")
    return _json_dump(index), {"written": len(names)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotpad", description="knot diagram reduction pipelines"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, needs_input=True, needs_theory=False, needs_format=False):
        p = sub.add_parser(name)
        if needs_input:
            p.add_argument("input", help="input .pd.json or .plat.json file")
        if needs_theory:
            p.add_argument(
                "--theory", required=True, help="tl:<N> or dw:<group>/<class>"
            )
            p.add_argument(
                "--verify",
                action="store_true",
                help="recheck the invariant exactly (may be slow)",
            )
        if needs_format:
            p.add_argument("--format", choices=("svg", "ascii"), default="svg")
        p.add_argument("--out", help="output path (default: stdout)")
        p.set_defaults(func=func)

    add("reduce-alt", _cmd_reduce_alt, needs_theory=True)
    add("reduce-plat", _cmd_reduce_plat, needs_theory=True)
    add("invariant", _cmd_invariant, needs_theory=True)
    add("exponent", _cmd_exponent, needs_input=False, needs_theory=True)
    add("certify", _cmd_certify)
    add("render", _cmd_render, needs_format=True)
    add("corpus", _cmd_corpus, needs_input=False)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    manifest = _manifest(args, args.command)
    start = time.perf_counter()
    try:
        text, extra = args.func(args)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except NotAKnotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_A_KNOT
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    manifest.update(extra)
    manifest["timing_s"] = round(time.perf_counter() - start, 6)
    _emit(args, text, manifest)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
