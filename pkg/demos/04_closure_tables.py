"""Reproduce the closure tables with a few randomized trials per cell.

Closed cells run seeded positive trials (transform a random member, check it
is still a member); non-closed cells replay exact counterexamples from the
registry.  Run:  python demos/04_closure_tables.py
"""

from dconvex.lab import run_closure_matrix, run_counterexamples

report = run_closure_matrix(trials=3, seed="demo", max_dim=4)
print(report.render_text())

print("registry replays:")
for result in run_counterexamples():
    print(f"  {result.record_id}: {'pass' if result.passed else 'FAIL'}")
