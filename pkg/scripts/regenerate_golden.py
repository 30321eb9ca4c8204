"""Rewrite tests/golden from the built-in corpus.

Run after an intentional change to the report format or the corpus; the CLI
tests compare against these files byte for byte.
"""

import io
from pathlib import Path

from weakhopf import zoo
from weakhopf.cli import AlgebraSpec, corpus_spec, main

ROOT = Path(__file__).resolve().parent.parent / "tests" / "golden"
ALGEBRAS = ROOT / "algebras"
REPORTS = ROOT / "reports"

# the expected exit status of each report is recorded next to it
EXTRA = {
    "mutant_diagonal2": lambda: AlgebraSpec(
        zoo.mutate(zoo.get("diagonal2").B, "unit_weak_comultiplicative"),
        meta={"name": "mutant_diagonal2",
              "description": "k x k with one comultiplication entry changed"}),
    "exterior": lambda: AlgebraSpec(
        zoo.exterior_algebra(),
        meta={"name": "exterior", "description": "exterior algebra on one generator, super braid"}),
}


def report(path: Path) -> tuple[str, int]:
    out = io.StringIO()
    code = main(["report", str(path), "--format", "json"], stdout=out)
    return out.getvalue(), code


def regenerate() -> None:
    ALGEBRAS.mkdir(parents=True, exist_ok=True)
    REPORTS.mkdir(parents=True, exist_ok=True)
    specs = {name: corpus_spec(name) for name in zoo.CORPUS_NAMES}
    specs.update({name: make() for name, make in EXTRA.items()})
    for name, spec in specs.items():
        path = ALGEBRAS / f"{name}.json"
        path.write_text(spec.dumps())
        text, code = report(path)
        (REPORTS / f"{name}.json").write_text(text)
        print(f"{name}: exit {code}")


if __name__ == "__main__":
    regenerate()
