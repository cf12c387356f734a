import random
from fractions import Fraction

import pytest

from dconvex.core import LatticeFn, LatticeSet, LiftedInputError, cube, indicator_fn
from dconvex.ops import (
    PartitionSpec,
    SplitSpec,
    aggregate_fn,
    aggregate_set,
    aggregate_set_elementary,
    convolution_fn,
    direct_sum_fn,
    direct_sum_lifted_set,
    direct_sum_set,
    minkowski_sum_set,
    split_fn,
    split_set,
    split_set_elementary,
)

F = Fraction


def test_direct_sum_set():
    s1 = LatticeSet.of([(1, 0), (0, 1)])
    s2 = LatticeSet.of([(t,) for t in range(3)])
    got = direct_sum_set(s1, s2)
    assert got == LatticeSet.of(
        [(1, 0, 0), (1, 0, 1), (1, 0, 2), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    )
    assert len(got) == len(s1) * len(s2)
    z = LatticeSet.of([(0,)])
    assert direct_sum_set(z, z) == LatticeSet.of([(0, 0)])


def test_direct_sum_fn():
    f1 = LatticeFn.of({(0,): 3})
    f2 = LatticeFn.of({(0,): 4})
    assert direct_sum_fn(f1, f2) == LatticeFn.of({(0, 0): 7})
    s1 = LatticeSet.of([(1, 0), (0, 1)])
    s2 = LatticeSet.of([(2,)])
    assert direct_sum_fn(indicator_fn(s1), indicator_fn(s2)) == indicator_fn(
        direct_sum_set(s1, s2)
    )


def test_direct_sum_rejects_lifted():
    s = LatticeSet(2, frozenset({(0, 0)}), lifted=True)
    with pytest.raises(LiftedInputError):
        direct_sum_set(s, s)


def test_split_set_examples():
    origin = LatticeSet.of([(0,)])
    got = split_set(origin, SplitSpec((2,)), cube(2, -2, 2))
    assert got == LatticeSet.of([(t, -t) for t in range(-2, 3)])
    # identity splitting is intersection with the window
    s = LatticeSet.of([(0, 3), (1, 1)])
    assert split_set(s, SplitSpec((1, 1)), cube(2, 0, 2)) == LatticeSet.of([(1, 1)])
    got = split_set(LatticeSet.of([(0, 0), (1, 1)]), SplitSpec((1, 2)), cube(3, 0, 1))
    assert got == LatticeSet.of([(0, 0, 0), (1, 0, 1), (1, 1, 0)])


def test_split_fn_examples():
    f = LatticeFn.of({(0,): 5, (1,): 7})
    got = split_fn(f, SplitSpec((2,)), cube(2, 0, 1))
    assert got == LatticeFn.of({(0, 0): 5, (1, 0): 7, (0, 1): 7})
    g = LatticeFn.of({(0, 2): F(1, 2), (1, 2): 4})
    ident = split_fn(g, SplitSpec((1, 1)), cube(2, 0, 2))
    assert ident == g
    # elementary split merges the first two output slots
    h = split_fn(g, SplitSpec((2, 1)), cube(3, 0, 2))
    assert h.values[(0, 1, 2)] == 4 and h.values[(0, 0, 2)] == F(1, 2)


def test_aggregate_set_examples():
    s = LatticeSet.of([(0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 0), (1, 1, 0, 1)])
    got = aggregate_set(s, PartitionSpec(((0, 2), (1, 3))))
    assert got == LatticeSet.of([(1, 0), (0, 1), (2, 1), (1, 2)])
    assert aggregate_set(s, PartitionSpec.identity(4)) == s
    s6 = LatticeSet.of(
        [(0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 1), (1, 1, 0, 0, 0, 0), (1, 1, 0, 0, 1, 1)]
    )
    got = aggregate_set(s6, PartitionSpec(((0, 3), (1, 4), (2, 5))))
    assert got == LatticeSet.of([(0, 0, 0), (0, 1, 1), (1, 1, 0), (1, 2, 1)])


def test_aggregate_fn_examples():
    s = LatticeSet.of([(0, 1), (1, 0)])
    spec = PartitionSpec(((0, 1),))
    assert aggregate_fn(indicator_fn(s), spec) == indicator_fn(aggregate_set(s, spec))
    f = LatticeFn.of({(0, 0): 1, (1, -1): 2})
    assert aggregate_fn(f, spec) == LatticeFn.of({(0,): 1})


def test_aggregate_laminar_composes():
    # |x1+x2+x3| + (x1+x2)^2 + x3^2 aggregated over {1,2},{3} collapses to
    # |y1+y2| + y1^2 + y2^2 because the value only depends on the sums
    vals = {}
    for a in range(-2, 3):
        for b in range(-2, 3):
            for c in range(-2, 3):
                vals[(a, b, c)] = F(abs(a + b + c) + (a + b) ** 2 + c * c)
    f = LatticeFn(3, vals)
    got = aggregate_fn(f, PartitionSpec(((0, 1), (2,))))
    for (y1, y2), v in got.values.items():
        assert v == abs(y1 + y2) + y1 * y1 + y2 * y2


def test_elementary_chains_match():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(2, 3)
        pts = frozenset(
            tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(rng.randint(1, 6))
        )
        s = LatticeSet(n, pts)
        blocks = [1] * n
        for _ in range(rng.randint(1, 2)):
            blocks[rng.randrange(n)] += 1
        spec = SplitSpec(tuple(blocks))
        w = cube(spec.output_dim, -3, 3)
        assert split_set(s, spec, w) == split_set_elementary(s, spec, w)
        groups = [[i] for i in range(n)]
        gi = rng.randrange(len(groups) - 1)
        groups[gi] = groups[gi] + groups.pop(gi + 1)
        pspec = PartitionSpec(tuple(tuple(g) for g in groups))
        assert aggregate_set(s, pspec) == aggregate_set_elementary(s, pspec)


def test_minkowski_examples():
    s1 = LatticeSet.of([(0, 0), (1, 1)])
    s2 = LatticeSet.of([(1, 0), (0, 1)])
    assert minkowski_sum_set(s1, s2) == LatticeSet.of([(1, 0), (0, 1), (2, 1), (1, 2)])
    zero = LatticeSet.of([(0, 0)])
    assert minkowski_sum_set(s1, zero) == s1
    with pytest.raises(ValueError):
        minkowski_sum_set(s1, LatticeSet.of([(0,)]))


def test_convolution_examples():
    s1 = LatticeSet.of([(0, 0), (1, 1)])
    s2 = LatticeSet.of([(1, 0), (0, 1)])
    got = convolution_fn(indicator_fn(s1), indicator_fn(s2))
    assert got == indicator_fn(minkowski_sum_set(s1, s2))
    # convolution with the indicator of the origin is the identity
    f = LatticeFn.of({(0, 1): F(1, 2), (2, 2): 3})
    origin = indicator_fn(LatticeSet.of([(0, 0)]))
    assert convolution_fn(f, origin) == f


def test_convolution_takes_fiber_minimum():
    f1 = LatticeFn.of({(0,): 0, (1,): 5})
    f2 = LatticeFn.of({(0,): 0, (1,): 1})
    got = convolution_fn(f1, f2)
    assert got.values[(1,)] == 1  # 0 + 1 beats 5 + 0
    assert got.values[(2,)] == 6


def test_direct_sum_lifted_set_is_all_ones_invariant():
    s1 = LatticeSet(2, frozenset({(0, 0), (1, 0)}), lifted=True)
    s2 = LatticeSet(2, frozenset({(0, 0)}), lifted=True)
    got = direct_sum_lifted_set(s1, s2, shift_bound=1)
    assert got.lifted and got.dim == 4
    assert (1, 0, 0, 0) in got and (2, 1, 1, 1) in got
