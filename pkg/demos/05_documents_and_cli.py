"""Shareable documents and the command-line front end.

Every object round-trips through a one-object-per-file JSON format, which
is how counterexamples and reports travel between runs.
Run:  python demos/05_documents_and_cli.py
"""

import tempfile
from pathlib import Path

from dconvex import LatticeSet, PartitionSpec, documents
from dconvex.cli import main

workdir = Path(tempfile.mkdtemp(prefix="dconvex-demo-"))

s = LatticeSet.of([(0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 0), (1, 1, 0, 1)])
documents.dump(s, workdir / "s.json")
documents.dump(PartitionSpec(((0, 2), (1, 3))), workdir / "pairs.json")

print("serialized set document:")
print(documents.to_text(s))

print("$ dconvex op aggregate s.json --spec pairs.json --out t.json")
main(["op", "aggregate", str(workdir / "s.json"), "--spec", str(workdir / "pairs.json"), "--out", str(workdir / "t.json")])
print((workdir / "t.json").read_text())

print("$ dconvex check t.json --class integrally-convex-set")
code = main(["check", str(workdir / "t.json"), "--class", "integrally-convex-set"])
print(f"(exit code {code}: 0 member, 1 non-member, 2 input error)")

print("\n$ dconvex examples --run EX3.3")
main(["examples", "--run", "EX3.3"])
