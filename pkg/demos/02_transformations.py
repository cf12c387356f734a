"""Direct sum, splitting and aggregation, and what survives them.

Run:  python demos/02_transformations.py
"""

from dconvex import (
    ClassLabel,
    LatticeSet,
    PartitionSpec,
    SplitSpec,
    aggregate_set,
    check_set,
    cube,
    minkowski_sum_set,
    split_set,
)

# Splitting one coordinate into a block of two: the singleton at the origin
# becomes the antidiagonal, and stops being a box (or midpoint closed).
origin = LatticeSet.of([(0,)])
anti = split_set(origin, SplitSpec((2,)), cube(2, -2, 2))
print("split of {0}:", anti.sorted_points())
for label in (ClassLabel.INTEGER_BOX, ClassLabel.LNAT_SET, ClassLabel.MNAT_SET):
    print(f"  {label.value:<14}", check_set(anti, label).member)

# Aggregation can break integral convexity.  The classic four-point source:
s = LatticeSet.of([(0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 0), (1, 1, 0, 1)])
t = aggregate_set(s, PartitionSpec(((0, 2), (1, 3))))
print("\nsource is integrally convex:", check_set(s, ClassLabel.IC_SET).member)
print("aggregated image:", t.sorted_points())
print("image is integrally convex:", check_set(t, ClassLabel.IC_SET).member)

# The image is exactly a Minkowski sum: aggregation of a direct sum by
# corresponding pairs is how sums of sets are assembled here.
s1 = LatticeSet.of([(0, 0), (1, 1)])
s2 = LatticeSet.of([(1, 0), (0, 1)])
print("\nMinkowski sum route:", minkowski_sum_set(s1, s2).sorted_points())

# Exchange-driven classes are sturdier; the same operations preserve them.
basis = LatticeSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
agg = aggregate_set(basis, PartitionSpec(((0, 1), (2,))))
print("\nunit basis aggregated:", agg.sorted_points())
print("still M-convex:", check_set(agg, ClassLabel.M_SET).member)
