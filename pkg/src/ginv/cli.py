"""Command-line front end.

Exit codes:
  0  success (certificate found, all claims Pass, document written)
  1  IO or parse failure
  2  usage error
  3  no inverse exists (or the oracle found none)
  4  unknown-at-bound: the bounded search missed, nothing is proved
  5  a claim has a counterexample, or a certificate fails its replay
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
import tempfile
from dataclasses import dataclass
from typing import Any, Sequence

from ginv.errors import GinvError, InvalidFormat, Unsupported
from ginv.finite import oracle_search
from ginv.gen_inverse import Outcome, Status, compute
from ginv.certificate import InverseCertificate, verify
from ginv.kinds import InverseKind, kind_names
from ginv.ring import Element, StarRing
from ginv.specs import element_from_doc, ring_from_spec

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_NOT_FOUND, EXIT_UNKNOWN, EXIT_COUNTEREXAMPLE = range(6)

_STATUS_EXIT = {Status.FOUND: EXIT_OK, Status.NOT_FOUND: EXIT_NOT_FOUND,
                Status.UNKNOWN: EXIT_UNKNOWN}

DEFAULT_SCHEMA_RINGS = (
    {"kind": "Zn", "n": 6, "involution": "identity"},
    {"kind": "Zn", "n": 8, "involution": "identity"},
    {"kind": "MatZp", "p": 2, "size": 2, "involution": "transpose"},
    {"kind": "MatQ(i)", "size": 2, "involution": "conjugate-transpose"},
    {"kind": "Toeplitz", "band_bound": 4, "corr_bound": 4, "involution": "transpose"},
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors always exit 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _kind(name: str) -> InverseKind:
    try:
        return InverseKind.parse(name)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown kind {name!r}; valid kinds: {', '.join(kind_names())}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ginv", description="Exact generalized inverses in rings with involution.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def ring_element(sp, required=True):
        sp.add_argument("--ring", required=required,
                        help="ring spec: JSON file, inline JSON, or shorthand like Z6, M2(Z3), "
                             "M2(Q(i)), Toeplitz")
        sp.add_argument("--element", help="element: JSON file, inline JSON or a name")
        sp.add_argument("--kind", type=_kind, help="inverse kind, kebab-case")
        sp.add_argument("--aux", nargs=2, metavar=("B", "C"), help="(b, c) for bc kinds")
        sp.add_argument("--k-max", type=int, help="index bound (default: GINV_KMAX or ring)")
        sp.add_argument("--out", help="write the document here instead of stdout")

    c = sub.add_parser("compute", help="compute and certify an inverse")
    ring_element(c, required=False)
    c.add_argument("--bounds", help="Toeplitz search bounds BAND[,CORR]")
    c.add_argument("--verify-only", metavar="CERT",
                   help="re-verify a document previously written by compute")

    v = sub.add_parser("verify", help="run a claim suite")
    v.add_argument("--suite", required=True, help="suite TOML file")
    v.add_argument("--out")
    v.add_argument("--format", choices=("json", "markdown", "md", "dot"))
    v.add_argument("--seed", type=int, help="seed for sampled scopes")
    v.add_argument("--workers", type=int, default=1)

    s = sub.add_parser("schema", help="emit the relation schema")
    s.add_argument("--rings", nargs="+", help="ring specs (default: the five standard rings)")
    s.add_argument("--format", choices=("json", "markdown", "md", "dot"), default="dot")
    s.add_argument("--out")

    o = sub.add_parser("oracle", help="exhaustive search certificate (finite rings)")
    ring_element(o)
    return p


@dataclass
class Command:
    verb: str
    args: argparse.Namespace


def parse_args(argv: Sequence[str] | None = None) -> Command:
    ns = build_parser().parse_args(argv)
    return Command(ns.verb, ns)


# -- input decoding ------------------------------------------------------------------

_SHORT = [
    (re.compile(r"^Z_?(\d+)$"), lambda m: {"kind": "Zn", "n": int(m[1]), "involution": "identity"}),
    (re.compile(r"^M_?(\d+)\(Z_?(\d+)\)$"),
     lambda m: {"kind": "MatZp", "p": int(m[2]), "size": int(m[1]), "involution": "transpose"}),
    (re.compile(r"^M_?(\d+)\(Q\(i\)\)$"),
     lambda m: {"kind": "MatQ(i)", "size": int(m[1]), "involution": "conjugate-transpose"}),
    (re.compile(r"^Toeplitz(\(Q\))?$"),
     lambda m: {"kind": "Toeplitz", "band_bound": 4, "corr_bound": 4, "involution": "transpose"}),
]


def _read_doc(arg: str) -> Any:
    """File contents if ``arg`` names a file, else inline JSON, else the bare string."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidFormat(f"{arg}: {exc}") from None
    try:
        return json.loads(arg)
    except json.JSONDecodeError:
        return arg


def ring_spec_from_arg(arg: str) -> dict:
    doc = _read_doc(arg)
    if isinstance(doc, str):
        for pat, build in _SHORT:
            m = pat.match(doc.replace(" ", ""))
            if m:
                return build(m)
        raise InvalidFormat(f"cannot read ring spec {arg!r}")
    return doc


def _apply_bounds(spec: dict, bounds: str | None) -> dict:
    if bounds is None:
        return spec
    if spec.get("kind") != "Toeplitz":
        raise UsageError("--bounds only applies to the Toeplitz ring")
    try:
        parts = [int(b) for b in bounds.split(",")]
    except ValueError:
        raise UsageError(f"bad --bounds {bounds!r}") from None
    if not 1 <= len(parts) <= 2 or min(parts) < 1:
        raise UsageError(f"bad --bounds {bounds!r}")
    band, corr = parts[0], parts[-1]
    return {**spec, "band_bound": band, "corr_bound": corr}


def element_from_arg(arg: str, ring: StarRing) -> Element:
    return element_from_doc(_read_doc(arg), ring)


def resolve_kmax(arg: int | None, ring: StarRing) -> int:
    if arg is None:
        env = os.environ.get("GINV_KMAX")
        if env is None:
            return ring.default_kmax()
        try:
            arg = int(env)
        except ValueError:
            raise UsageError(f"GINV_KMAX must be an integer, got {env!r}") from None
    if arg < 1:
        raise UsageError(f"k-max must be >= 1, got {arg}")
    return arg


# -- output --------------------------------------------------------------------------

def write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ginv-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dump(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def outcome_document(outcome: Outcome, ring: StarRing, a: Element,
                     aux: tuple[Element, Element] | None, k_max: int) -> dict:
    doc = outcome.to_json()
    doc["ring"] = ring.spec()
    doc["k_max"] = k_max
    doc.setdefault("a", a.encode())
    if aux is not None:
        doc.setdefault("aux", {"b": aux[0].encode(), "c": aux[1].encode()})
    return doc


# -- verbs ---------------------------------------------------------------------------

def _need(ns, *names):
    missing = [n for n in names if getattr(ns, n.replace("-", "_")) is None]
    if missing:
        raise UsageError(f"{ns.verb} needs " + ", ".join(f"--{m}" for m in missing))


def _inputs(ns):
    spec = _apply_bounds(ring_spec_from_arg(ns.ring), getattr(ns, "bounds", None))
    ring = ring_from_spec(spec)
    a = element_from_arg(ns.element, ring)
    aux = None
    if ns.kind.needs_aux:
        if ns.aux is None:
            raise UsageError(f"kind {ns.kind.value} needs --aux B C")
        aux = (element_from_arg(ns.aux[0], ring), element_from_arg(ns.aux[1], ring))
    return ring, a, aux, resolve_kmax(ns.k_max, ring)


def cmd_compute(ns) -> int:
    if ns.verify_only is not None:
        return _verify_only(ns)
    _need(ns, "ring", "element", "kind")
    ring, a, aux, k_max = _inputs(ns)
    outcome = compute(ns.kind, a, aux, k_max, oracle_fallback=True)
    write_output(_dump(outcome_document(outcome, ring, a, aux, k_max)), ns.out)
    return _STATUS_EXIT[outcome.status]


def _verify_only(ns) -> int:
    doc = _read_doc(ns.verify_only)
    if not isinstance(doc, dict) or "kind" not in doc or "status" not in doc:
        raise InvalidFormat(f"{ns.verify_only} is not a compute document")
    spec = doc.get("ring") or ring_spec_from_arg(ns.ring or "")
    ring = ring_from_spec(spec)
    kind = InverseKind.parse(doc["kind"])
    status = Status(doc["status"])
    report: dict[str, Any] = {"kind": kind.value, "ring_id": ring.ring_id,
                              "stored_status": status.value}
    if status is Status.FOUND:
        cert = InverseCertificate.from_json(doc, ring)
        ok = verify(cert)
        report.update(status=status.value if ok else "invalid", verified=ok,
                      equations=[eq.to_json() for eq in cert.equations_checked])
        code = EXIT_OK if ok else EXIT_COUNTEREXAMPLE
    else:
        a = element_from_doc(doc["a"], ring)
        aux = None
        if doc.get("aux"):
            aux = (ring.element(doc["aux"]["b"]), ring.element(doc["aux"]["c"]))
        k_max = int(doc.get("k_max", ring.default_kmax()))
        again = compute(kind, a, aux, k_max, oracle_fallback=True)
        ok = again.status is status
        report.update(status=again.status.value, verified=ok)
        code = _STATUS_EXIT[status] if ok else EXIT_COUNTEREXAMPLE
    write_output(_dump(report), ns.out)
    return code


def _format_for(out: str | None, explicit: str | None, fallback: str | None) -> str:
    if explicit:
        return explicit
    if out:
        ext = os.path.splitext(out)[1].lower()
        guess = {".json": "json", ".md": "markdown", ".dot": "dot", ".gv": "dot"}.get(ext)
        if guess:
            return guess
    return fallback or "markdown"


def cmd_verify(ns) -> int:
    from ginv.verifier.report import emit_report
    from ginv.verifier.suite import load_suite, run_suite, suite_schema

    try:
        suite = load_suite(ns.suite, ns.seed)
    except OSError as exc:
        print(f"ginv: cannot read suite: {exc}", file=sys.stderr)
        return EXIT_IO
    if suite.needs_seed:
        raise UsageError("the suite has sampled scopes without a seed; pass --seed")
    results = run_suite(suite, workers=max(1, ns.workers))
    schema = suite_schema(suite)
    fmt = _format_for(ns.out, ns.format, suite.schema_format)
    write_output(emit_report(results, schema, fmt), ns.out)
    failed = any(r.verdict.name == "Counterexample" for r in results)
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def cmd_schema(ns) -> int:
    from ginv.verifier.report import emit_report
    from ginv.verifier.schema import build_relation_schema

    specs = ([ring_spec_from_arg(r) for r in ns.rings] if ns.rings
             else list(DEFAULT_SCHEMA_RINGS))
    schema = build_relation_schema([ring_from_spec(s) for s in specs])
    write_output(emit_report([], schema, ns.format), ns.out)
    return EXIT_OK


def cmd_oracle(ns) -> int:
    _need(ns, "element", "kind")
    ring, a, aux, k_max = _inputs(ns)
    cert = oracle_search(a, ns.kind, aux, k_max)
    if cert is None:
        doc = {"kind": ns.kind.value, "status": Status.NOT_FOUND.value,
               "reason": f"exhaustive search found no {ns.kind.value} inverse",
               "a": a.encode(), "ring": ring.spec(), "k_max": k_max}
        write_output(_dump(doc), ns.out)
        return EXIT_NOT_FOUND
    out = Outcome(ns.kind, Status.FOUND, cert)
    write_output(_dump(outcome_document(out, ring, a, aux, k_max)), ns.out)
    return EXIT_OK


_VERBS = {"compute": cmd_compute, "verify": cmd_verify, "schema": cmd_schema,
          "oracle": cmd_oracle}


def execute(cmd: Command) -> int:
    try:
        return _VERBS[cmd.verb](cmd.args)
    except UsageError as exc:
        print(f"ginv: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Unsupported as exc:
        print(f"ginv: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, GinvError, ValueError, KeyError) as exc:
        print(f"ginv: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_IO


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cmd = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return execute(cmd)


if __name__ == "__main__":
    sys.exit(main())
