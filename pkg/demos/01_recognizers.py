"""Walk through the membership recognizers on small hand-built instances.

Run:  python demos/01_recognizers.py
"""

from fractions import Fraction

from dconvex import ClassLabel, LatticeFn, LatticeSet, check_fn, check_set, verify_witness

# A four-point set in Z^3.  It is produced by collapsing pairs of
# coordinates of a perfectly well-behaved six-dimensional set, and the
# midpoint property breaks in the process.
t = LatticeSet.of([(0, 0, 0), (0, 1, 1), (1, 1, 0), (1, 2, 1)])

print("T =", t.sorted_points())
for label in (ClassLabel.LNAT_SET, ClassLabel.IC_SET, ClassLabel.MNAT_SET):
    verdict = check_set(t, label)
    print(f"  {label.value:<22} member={verdict.member}", end="")
    if verdict.witness:
        w = verdict.witness
        print(f"  witness: {w.kind} at {w.points}", end="")
        assert verify_witness(t, w)  # every witness replays through the axiom
    print()

# The same story for functions: a quadratic that is perfectly midpoint
# convex in two variables stops being so after a free variable is appended.
vals = {}
for a in range(-2, 3):
    for b in range(-2, 3):
        for c in range(-2, 3):
            vals[(a, b, c)] = Fraction(a * a + a * b + b * b)
g = LatticeFn(3, vals)
print("\ng(x) = x1^2 + x1 x2 + x2^2 on [-2,2]^3")
for label in (ClassLabel.GLOBAL_DMC_FN, ClassLabel.LOCAL_DMC_FN, ClassLabel.IC_FN):
    verdict = check_fn(g, label)
    line = f"  {label.value:<22} member={verdict.member}"
    if verdict.witness:
        line += f"  witness: {verdict.witness.points}"
    print(line)

# Witnesses are concrete: replay the book-keeping for the printed pair.
x, y = (1, 0, 0), (0, 1, 2)
up, down = (1, 1, 1), (0, 0, 1)
print(
    f"\nat x={x}, y={y}: g(x)+g(y) = {g.values[x] + g.values[y]}"
    f" < g({up})+g({down}) = {g.values[up] + g.values[down]}"
)
