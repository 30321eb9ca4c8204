"""Driving the command-line tool on a file written from scratch.

The algebra is k[Z/3] with basis 1, g, g2, written out by hand in the file
format: rationals as strings, tensor indices left-major.
"""

import json
import tempfile
from pathlib import Path

from weakhopf.cli import main

n = 3
mu = [["0"] * (n * n) for _ in range(n)]
delta = [["0"] * n for _ in range(n * n)]
for a in range(n):
    for b in range(n):
        mu[(a + b) % n][a * n + b] = "1"
    delta[a * n + a][a] = "1"

doc = {
    "dim": n,
    "tensor_order": "left-major",
    "mu": mu,
    "eta": ["1", "0", "0"],
    "delta": delta,
    "eps": ["1", "1", "1"],
    "modules": {"trivial": {"carrier": 1, "action": [["1", "1", "1"]]}},
    "meta": {"name": "hand-written Z/3"},
}

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "z3.json"
    path.write_text(json.dumps(doc, indent=2))

    print("$ weakhopf antipode z3.json --require-hopf")
    code = main(["antipode", str(path), "--require-hopf"])
    print(f"exit status {code}\n")

    print("$ weakhopf module-tensor z3.json trivial regular")
    code = main(["module-tensor", str(path), "trivial", "regular"])
    print(f"exit status {code}\n")

    doc["mu"][0][0] = "2"
    path.write_text(json.dumps(doc))
    print("after changing one multiplication entry:")
    print("$ weakhopf check z3.json --dims 1")
    code = main(["check", str(path), "--dims", "1"])
    print(f"exit status {code}\n")

    path.write_text('{"dim": 3, "tensor_order": "left-major", "mu": []}')
    print("$ weakhopf check broken.json")
    code = main(["check", str(path)])
    print(f"exit status {code}")
