"""Command-line front end: algebra files in, structured reports out.

Exit codes: 0 when every requested check holds, 1 when a law or Hopf
condition fails, 2 for unreadable or malformed input and for requests the
input cannot support (unknown module names, module-level commands with a
custom braid).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__
from .emcat import (
    RightModule,
    base_monoid,
    coherence_check,
    module_laws,
    module_tensor,
    regular_module,
    unit_constraints,
)
from .hopf import (
    check_left_hopf,
    hopf_verdicts,
    idempotent_E_T,
    idempotent_F,
    solve_antipode,
    verify_whm,
)
from .lincore import AlgebraError, LinMap, rank
from .wbm import AxiomCheck, AxiomReport, WeakBimonoid, check_tau_axioms, check_weak_bimonoid

TOOL = "weakhopf"
EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
MAX_DIFFS = 5


class ParseError(AlgebraError):
    pass


class InputRejected(AlgebraError):
    """Input parses but cannot be used for the requested command."""


# -- scalars and matrices ---------------------------------------------------


def format_scalar(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def matrix_to_json(f: LinMap) -> list[list[str]]:
    return [[format_scalar(v) for v in row] for row in f.dense()]


def _parse_scalar(value: Any, where: str) -> Fraction:
    if not isinstance(value, str):
        raise ParseError(f"{where}: expected a string such as \"3\" or \"-1/2\", got {json.dumps(value)}")
    text = value.strip()
    try:
        if "." in text or "e" in text.lower():
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: {value!r} is not an exact rational") from None


def _parse_matrix(value: Any, rows: int, cols: int, where: str) -> LinMap:
    if not isinstance(value, list) or len(value) != rows:
        got = len(value) if isinstance(value, list) else type(value).__name__
        raise ParseError(f"{where}: expected {rows} rows, got {got}")
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise ParseError(f"{where}[{i}]: expected {cols} entries, got {got}")
        out.append([_parse_scalar(v, f"{where}[{i}][{j}]") for j, v in enumerate(row)])
    return LinMap(cols, rows, out)


def _parse_vector(value: Any, length: int, where: str) -> list[Fraction]:
    if not isinstance(value, list) or len(value) != length:
        got = len(value) if isinstance(value, list) else type(value).__name__
        raise ParseError(f"{where}: expected a list of {length} entries, got {got}")
    return [_parse_scalar(v, f"{where}[{j}]") for j, v in enumerate(value)]


# -- the algebra file -------------------------------------------------------

RESERVED_MODULES = ("regular", "base")


class AlgebraSpec:
    """A parsed algebra file: the weak bimonoid plus named modules and metadata."""

    def __init__(self, B: WeakBimonoid, modules: dict[str, RightModule] | None = None,
                 meta: dict[str, str] | None = None):
        self.B = B
        self.modules = dict(modules or {})
        self.meta = dict(meta or {})

    def to_json(self) -> dict[str, Any]:
        B = self.B
        doc: dict[str, Any] = {
            "dim": B.dim,
            "tensor_order": "left-major",
            "mu": matrix_to_json(B.mu),
            "eta": [format_scalar(v) for v in B.eta.T.dense()[0]],
            "delta": matrix_to_json(B.delta),
            "eps": [format_scalar(v) for v in B.eps.dense()[0]],
        }
        if B.braid is not None:
            doc["braid"] = matrix_to_json(B.braid)
        if self.modules:
            doc["modules"] = {
                name: {"carrier": m.carrier, "action": matrix_to_json(m.action)}
                for name, m in self.modules.items()
            }
        if self.meta:
            doc["meta"] = dict(self.meta)
        return doc

    def dumps(self) -> str:
        return dump_json(self.to_json())

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraSpec) and self.B == other.B
                and self.modules == other.modules and self.meta == other.meta)


def parse_spec(doc: Any) -> AlgebraSpec:
    if not isinstance(doc, dict):
        raise ParseError("top level: expected a JSON object")
    known = {"dim", "tensor_order", "mu", "eta", "delta", "eps", "braid", "modules", "meta"}
    extra = sorted(set(doc) - known)
    if extra:
        raise ParseError(f"top level: unknown field(s) {', '.join(extra)}")
    for key in ("dim", "tensor_order", "mu", "eta", "delta", "eps"):
        if key not in doc:
            raise ParseError(f"{key}: required field missing")
    if doc["tensor_order"] != "left-major":
        raise ParseError(f"tensor_order: only \"left-major\" is supported, got {json.dumps(doc['tensor_order'])}")
    n = doc["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"dim: expected a positive integer, got {json.dumps(n)}")
    mu = _parse_matrix(doc["mu"], n, n * n, "mu")
    delta = _parse_matrix(doc["delta"], n * n, n, "delta")
    eta = LinMap.column(_parse_vector(doc["eta"], n, "eta"))
    eps = LinMap.row(_parse_vector(doc["eps"], n, "eps"))
    braid = None
    if doc.get("braid") is not None:
        braid = _parse_matrix(doc["braid"], n * n, n * n, "braid")
    try:
        B = WeakBimonoid(n, mu, eta, delta, eps, braid)
    except AlgebraError as exc:
        raise ParseError(f"braid: {exc}") from None
    modules: dict[str, RightModule] = {}
    raw = doc.get("modules", {})
    if not isinstance(raw, dict):
        raise ParseError("modules: expected an object mapping names to modules")
    for name, m in raw.items():
        where = f"modules.{name}"
        if name in RESERVED_MODULES:
            raise ParseError(f"{where}: the name {name!r} is reserved for a built-in module")
        if not isinstance(m, dict) or set(m) != {"carrier", "action"}:
            raise ParseError(f"{where}: expected exactly the fields carrier and action")
        k = m["carrier"]
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise ParseError(f"{where}.carrier: expected a nonnegative integer")
        modules[name] = RightModule(k, _parse_matrix(m["action"], k, k * n, f"{where}.action"))
    meta = doc.get("meta", {})
    if not isinstance(meta, dict) or not all(isinstance(v, str) for v in meta.values()):
        raise ParseError("meta: expected an object with string values")
    return AlgebraSpec(B, modules, meta)


def loads_spec(text: str) -> AlgebraSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_spec(doc)


def load_spec(path: str | Path) -> tuple[AlgebraSpec, bytes]:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise ParseError(f"{path}: not valid UTF-8") from None
    return loads_spec(text), data


# -- deterministic JSON -----------------------------------------------------


def _is_flat(x: Any) -> bool:
    return isinstance(x, list) and all(not isinstance(v, (list, dict)) for v in x)


def dump_json(obj: Any) -> str:
    """Sorted keys, two-space indent, lists of scalars kept on one line."""

    def enc(x: Any, indent: int) -> str:
        pad = "  " * (indent + 1)
        end = "  " * indent
        if isinstance(x, dict):
            if not x:
                return "{}"
            items = [f"{pad}{json.dumps(k)}: {enc(x[k], indent + 1)}" for k in sorted(x)]
            return "{\n" + ",\n".join(items) + "\n" + end + "}"
        if isinstance(x, list):
            if _is_flat(x):
                return "[" + ", ".join(json.dumps(v) for v in x) + "]"
            return "[\n" + ",\n".join(pad + enc(v, indent + 1) for v in x) + "\n" + end + "]"
        return json.dumps(x)

    return enc(obj, 0) + "\n"


# -- report assembly --------------------------------------------------------


def witness_json(w: tuple[LinMap, LinMap]) -> dict[str, Any]:
    lhs, rhs = w
    diffs = []
    a, b = lhs.dense(), rhs.dense()
    for i in range(lhs.cod):
        for j in range(lhs.dom):
            if a[i][j] != b[i][j]:
                diffs.append({"row": i, "col": j, "lhs": format_scalar(a[i][j]),
                              "rhs": format_scalar(b[i][j])})
                if len(diffs) == MAX_DIFFS:
                    break
        if len(diffs) == MAX_DIFFS:
            break
    total = sum(1 for i in range(lhs.cod) for j in range(lhs.dom) if a[i][j] != b[i][j])
    return {"shape": [lhs.cod, lhs.dom], "differing_entries": total, "first_differences": diffs}


def section_json(report: AxiomReport) -> dict[str, Any]:
    """Group a report by check name, keeping the first failure's witness."""
    grouped: dict[str, list[AxiomCheck]] = {}
    for c in report.checks:
        grouped.setdefault(c.name, []).append(c)
    checks = []
    for name, items in grouped.items():
        failed = [c for c in items if not c.holds]
        entry: dict[str, Any] = {"name": name, "holds": not failed, "instances": len(items)}
        if failed:
            entry["failed_at"] = [c.where for c in failed if c.where]
            first = next((c for c in failed if c.witness is not None), None)
            if first is not None:
                entry["witness"] = witness_json(first.witness)
        checks.append(entry)
    return {"title": report.title, "ok": report.ok, "checks": checks}


def skipped_section(title: str, reason: str, ok: bool = True) -> dict[str, Any]:
    return {"title": title, "ok": ok, "skipped": reason, "checks": []}


def error_section(title: str, exc: Exception) -> dict[str, Any]:
    return {"title": title, "ok": False, "error": f"{type(exc).__name__}: {exc}", "checks": []}


class ReportBuilder:
    def __init__(self, command: str, data: bytes, options: dict[str, Any]):
        self.command = command
        self.sha = hashlib.sha256(data).hexdigest()
        self.options = options
        self.sections: dict[str, dict[str, Any]] = {}
        self.derived: dict[str, Any] = {}
        self.failed = False

    def add(self, key: str, section: dict[str, Any], counts: bool = True) -> bool:
        if not counts:
            section["informational"] = True
        self.sections[key] = section
        if counts and not section["ok"]:
            self.failed = True
        return section["ok"]

    def fail(self) -> None:
        self.failed = True

    def finish(self) -> tuple[dict[str, Any], int]:
        code = EXIT_FAIL if self.failed else EXIT_PASS
        return {
            "tool": TOOL,
            "version": __version__,
            "command": self.command,
            "input_sha256": self.sha,
            "options": self.options,
            "sections": self.sections,
            "derived": self.derived,
            "status": "fail" if self.failed else "pass",
            "exit_code": code,
        }, code


def _axioms(rb: ReportBuilder, B: WeakBimonoid) -> bool:
    return rb.add("axioms", section_json(check_weak_bimonoid(B)))


def _tau(rb: ReportBuilder, B: WeakBimonoid, dims: Sequence[int]) -> None:
    if not B.symmetric:
        rb.add("tau", skipped_section("weak bimonad conditions on - (x) B",
                                      "custom braid: c_{Y,B} is only known for Y = B"))
        return
    rb.add("tau", section_json(check_tau_axioms(B, dims)))


def _base(rb: ReportBuilder, B: WeakBimonoid) -> bool:
    title = "separable Frobenius monoid"
    if not B.symmetric:
        raise InputRejected("the base monoid needs the symmetric swap; this file sets a custom braid")
    try:
        R = base_monoid(B)
    except AlgebraError as exc:
        rb.add("base", error_section(title, exc))
        return False
    rb.add("base", section_json(R.laws))
    rb.derived["base"] = {
        "R_dim": R.R_dim,
        "P": matrix_to_json(R.P),
        "I": matrix_to_json(R.I),
        "r_action": matrix_to_json(R.r_action),
        "mu_R": matrix_to_json(R.mu_R),
        "eta_R": matrix_to_json(R.eta_R),
        "delta_R": matrix_to_json(R.delta_R),
        "eps_R": matrix_to_json(R.eps_R),
        "eps_R_eta_R": format_scalar((R.eps_R @ R.eta_R).dense()[0][0]),
    }
    return True


def _resolve_modules(spec: AlgebraSpec) -> dict[str, RightModule]:
    B = spec.B
    mods = {"regular": regular_module(B), "base": base_monoid(B).module}
    mods.update(spec.modules)
    return mods


def _hopf(rb: ReportBuilder, B: WeakBimonoid, dims: Sequence[int], require_hopf: bool) -> None:
    res = solve_antipode(B)
    verdicts = hopf_verdicts(B, dims)
    info: dict[str, Any] = {
        "antipode": matrix_to_json(res.nu) if res.nu is not None else "none",
        "antipode_unique": res.unique,
        "invertible": res.invertible,
        "antipode_inverse": matrix_to_json(res.nu_inverse) if res.nu_inverse is not None else "none",
        "op_antipode": matrix_to_json(res.nu_op) if res.nu_op is not None else "none",
        "right_weak_hopf": verdicts.right_weak_hopf,
        "left_weak_hopf": verdicts.left_weak_hopf,
        "invertible_antipode": verdicts.invertible_antipode,
    }
    rb.derived["hopf"] = info
    # a missing antipode is a result; only broken identities count as failures
    eq = res.equations_report
    rb.add("antipode", section_json(eq), counts=res.nu is not None)
    left = check_left_hopf(B)
    rb.add("left_hopf", section_json(left), counts=res.nu is not None or res.nu_op is not None)
    if res.nu is not None:
        use = sorted(set(dims)) if B.symmetric else [1]
        checks: list[AxiomCheck] = []
        ranks = {}
        for X in use:
            for Y in use:
                rep = verify_whm(B, X, Y, res.nu, strict=False)
                checks.extend(rep.checks)
        rb.add("weak_hopf", section_json(AxiomReport("weak right Hopf", tuple(checks))))
        for X in use:
            for Y in use:
                ranks[f"X={X},Y={Y}"] = {"E": rank(idempotent_E_T(B, X, Y)),
                                         "F": rank(idempotent_F(B, X, Y))}
        info["idempotent_ranks"] = ranks
    equivalence = AxiomReport("invertible antipode equivalences", (
        AxiomCheck("verdicts_coincide", verdicts.coincide),
    ))
    rb.add("hopf_equivalence", section_json(equivalence))
    if require_hopf and not (verdicts.right_weak_hopf and verdicts.left_weak_hopf):
        rb.fail()


# -- commands ---------------------------------------------------------------


def cmd_check(spec: AlgebraSpec, data: bytes, args) -> tuple[dict, int]:
    rb = ReportBuilder("check", data, {"dims": args.dims})
    _axioms(rb, spec.B)
    _tau(rb, spec.B, args.dims)
    return rb.finish()


def cmd_base(spec: AlgebraSpec, data: bytes, args) -> tuple[dict, int]:
    rb = ReportBuilder("base", data, {})
    if _axioms(rb, spec.B):
        _base(rb, spec.B)
    else:
        rb.add("base", skipped_section("separable Frobenius monoid", "axioms fail", ok=False))
    return rb.finish()


def cmd_module_tensor(spec: AlgebraSpec, data: bytes, args) -> tuple[dict, int]:
    B = spec.B
    if not B.symmetric:
        raise InputRejected("module-level commands need the symmetric swap; this file sets a custom braid")
    rb = ReportBuilder("module-tensor", data, {"left": args.left, "right": args.right})
    if not _axioms(rb, B):
        rb.add("modules", skipped_section("truncated tensor product", "axioms fail", ok=False))
        return rb.finish()
    mods = _resolve_modules(spec)
    for name in (args.left, args.right):
        if name not in mods:
            raise InputRejected(f"unknown module {name!r}; available: {', '.join(sorted(mods))}")
    A, C = mods[args.left], mods[args.right]
    laws = []
    for label, m in ((args.left, A), (args.right, C)):
        laws.extend(AxiomCheck(c.name, c.holds, c.witness, label) for c in module_laws(m, B).checks)
    if not rb.add("module_laws", section_json(AxiomReport("right module laws", tuple(laws)))):
        return rb.finish()
    try:
        T = module_tensor(A, C, B)
        uc = [unit_constraints(A, B), unit_constraints(C, B)]
    except AlgebraError as exc:
        rb.add("modules", error_section("truncated tensor product", exc))
        return rb.finish()
    rb.add("modules", section_json(coherence_check({args.left: A, args.right: C}, B, strict=False)))
    rb.derived["module_tensor"] = {
        "carrier": T.product.carrier,
        "E_rank": T.product.carrier,
        "E": matrix_to_json(T.E),
        "p": matrix_to_json(T.p),
        "i": matrix_to_json(T.i),
        "action": matrix_to_json(T.product.action),
        "unit_constraints": {
            label: {"rho": matrix_to_json(u.rho), "lambda": matrix_to_json(u.lam)}
            for label, u in zip((args.left, args.right), uc)
        },
    }
    return rb.finish()


def cmd_antipode(spec: AlgebraSpec, data: bytes, args) -> tuple[dict, int]:
    rb = ReportBuilder("antipode", data, {"dims": args.dims, "require_hopf": args.require_hopf})
    if _axioms(rb, spec.B):
        _hopf(rb, spec.B, args.dims, args.require_hopf)
    return rb.finish()


def cmd_report(spec: AlgebraSpec, data: bytes, args) -> tuple[dict, int]:
    B = spec.B
    rb = ReportBuilder("report", data, {"dims": args.dims, "require_hopf": args.require_hopf})
    if not _axioms(rb, B):
        return rb.finish()
    _tau(rb, B, args.dims)
    if B.symmetric and _base(rb, B):
        mods = _resolve_modules(spec)
        bad = [n for n, m in mods.items() if not module_laws(m, B).ok]
        if bad:
            rb.add("modules", skipped_section("monoidal coherence of module products",
                                              f"not modules: {', '.join(bad)}", ok=False))
        else:
            try:
                rep = coherence_check(mods, B, strict=False)
                rb.add("modules", section_json(rep))
                rb.derived["module_carriers"] = {n: m.carrier for n, m in mods.items()}
            except AlgebraError as exc:
                rb.add("modules", error_section("monoidal coherence of module products", exc))
    elif not B.symmetric:
        rb.add("base", skipped_section("separable Frobenius monoid", "custom braid"))
    _hopf(rb, B, args.dims, args.require_hopf)
    return rb.finish()


# -- text rendering ---------------------------------------------------------


def _render_value(key: str, value: Any, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        out.append(f"{pad}{key}:")
        for k in sorted(value):
            _render_value(k, value[k], indent + 1, out)
    elif isinstance(value, list) and value and all(isinstance(r, list) for r in value):
        out.append(f"{pad}{key}: {len(value)}x{len(value[0]) if value else 0}")
        for row in value:
            out.append(f"{pad}  [" + " ".join(f"{v:>4}" for v in row) + "]")
    else:
        out.append(f"{pad}{key}: {json.dumps(value) if not isinstance(value, str) else value}")


def render_text(doc: dict[str, Any]) -> str:
    out = [f"{doc['tool']} {doc['version']} {doc['command']}",
           f"input sha256: {doc['input_sha256']}"]
    for key, sec in doc["sections"].items():
        verdict = "PASS" if sec["ok"] else ("NO" if sec.get("informational") else "FAIL")
        out.append(f"[{verdict}] {key}: {sec['title']}")
        for note in ("skipped", "error"):
            if note in sec:
                out.append(f"    {note}: {sec[note]}")
        for c in sec["checks"]:
            mark = "ok  " if c["holds"] else "FAIL"
            line = f"    {mark} {c['name']} ({c['instances']})"
            if c.get("failed_at"):
                line += " at " + "; ".join(c["failed_at"])
            out.append(line)
            if "witness" in c:
                w = c["witness"]
                out.append(f"         {w['differing_entries']} differing entries in a "
                           f"{w['shape'][0]}x{w['shape'][1]} matrix")
                for d in w["first_differences"]:
                    out.append(f"         ({d['row']},{d['col']}): {d['lhs']} != {d['rhs']}")
    if doc["derived"]:
        out.append("derived:")
        for k in sorted(doc["derived"]):
            _render_value(k, doc["derived"][k], 1, out)
    out.append(f"status: {doc['status']} (exit {doc['exit_code']})")
    return "\n".join(out) + "\n"


# -- entry point ------------------------------------------------------------


def _dims(text: str) -> list[int]:
    try:
        dims = sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated positive integers, got {text!r}")
    if not dims or dims[0] < 1:
        raise argparse.ArgumentTypeError("dimensions must be positive")
    return dims


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL,
        description="Exact verification of weak bimonoid data and the structures it induces.",
        epilog="Exit status: 0 all checks hold, 1 a check fails, 2 input error.",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, dims: bool = True, hopf: bool = False) -> None:
        p.add_argument("file", help="algebra file (JSON, tensor_order left-major)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if dims:
            p.add_argument("--dims", type=_dims, default=[1, 2],
                           help="comma-separated test dimensions (default 1,2)")
        if hopf:
            p.add_argument("--require-hopf", action="store_true",
                           help="fail unless the algebra is weak Hopf with invertible antipode")

    common(sub.add_parser("check", help="weak bimonoid axioms and monad-level conditions"))
    common(sub.add_parser("base", help="the separable Frobenius base monoid R"), dims=False)
    mt = sub.add_parser("module-tensor", help="truncated tensor product of two modules")
    mt.add_argument("file")
    mt.add_argument("left", help="module name (from the file, or regular / base)")
    mt.add_argument("right", help="module name (from the file, or regular / base)")
    mt.add_argument("--format", choices=("text", "json"), default="text")
    common(sub.add_parser("antipode", help="antipode, weak Hopf witnesses and B^op checks"), hopf=True)
    common(sub.add_parser("report", help="the whole pipeline"), hopf=True)
    ex = sub.add_parser("corpus", help="print a built-in example as an algebra file")
    ex.add_argument("name", nargs="?", help="omit to list the available names")
    return parser


COMMANDS: dict[str, Callable] = {
    "check": cmd_check,
    "base": cmd_base,
    "module-tensor": cmd_module_tensor,
    "antipode": cmd_antipode,
    "report": cmd_report,
}


def corpus_spec(name: str) -> AlgebraSpec:
    from . import zoo

    entry = zoo.get(name)
    extra = {k: v for k, v in entry.modules().items() if k not in RESERVED_MODULES}
    meta = {"name": entry.name, "description": entry.description, "basis": " ".join(entry.basis)}
    return AlgebraSpec(entry.B, extra, meta)


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    if args.command == "corpus":
        from . import zoo

        if args.name is None:
            stdout.write("\n".join(zoo.CORPUS_NAMES) + "\n")
            return EXIT_PASS
        try:
            stdout.write(corpus_spec(args.name).dumps())
        except KeyError as exc:
            stderr.write(f"{TOOL}: {exc.args[0]}\n")
            return EXIT_INPUT
        return EXIT_PASS
    try:
        spec, data = load_spec(args.file)
        doc, code = COMMANDS[args.command](spec, data, args)
    except (ParseError, InputRejected) as exc:
        stderr.write(f"{TOOL}: {exc}\n")
        return EXIT_INPUT
    if args.format == "json":
        stdout.write(dump_json(doc))
    else:
        stdout.write(render_text(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
