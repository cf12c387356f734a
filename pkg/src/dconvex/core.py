"""Lattice points, windows, finite sets and functions on Z^n.

Conventions used throughout the package:

* a point is a plain ``tuple[int, ...]``; coordinate indices are 0-based;
* a :class:`LatticeSet` / :class:`LatticeFn` is an explicit finite object,
  optionally "lifted" along the all-ones direction.  A lifted object denotes
  ``{p + a*1 : p stored, a in Z}``; stored representatives are normalized so
  the last coordinate is 0, which makes equality of lifted objects decidable.
  Lifted functions carry a ``ramp`` r with f(x + 1) = f(x) + r;
* every type is immutable after construction and safe to share across
  threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .rationals import INF, Value

Point = Tuple[int, ...]


class LiftedInputError(ValueError):
    """An operation received a lifted object it cannot handle."""


class EmptyResultError(ValueError):
    """A windowed restriction produced no points."""


# ---------------------------------------------------------------------------
# point arithmetic


def zero(n: int) -> Point:
    return (0,) * n


def ones(n: int) -> Point:
    return (1,) * n


def unit(n: int, i: int) -> Point:
    return tuple(1 if j == i else 0 for j in range(n))


def vadd(p: Point, q: Point) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def vsub(p: Point, q: Point) -> Point:
    return tuple(a - b for a, b in zip(p, q))


def vneg(p: Point) -> Point:
    return tuple(-a for a in p)


def vshift(p: Point, a: int) -> Point:
    """p + a * (1,...,1)."""
    return tuple(c + a for c in p)


def linf_distance(p: Point, q: Point) -> int:
    return max(abs(a - b) for a, b in zip(p, q))


def supports(p: Point) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Positive and negative supports: indices with p_i > 0 resp. p_i < 0."""
    plus = tuple(i for i, c in enumerate(p) if c > 0)
    minus = tuple(i for i, c in enumerate(p) if c < 0)
    return plus, minus


def midpoint_round(x: Point, y: Point) -> Tuple[Point, Point]:
    """Componentwise round-up and round-down of (x+y)/2.

    Returns (ceil, floor); ceil >= floor componentwise and
    ceil + floor = x + y.
    """
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    up = tuple((a + b + 1) // 2 for a, b in zip(x, y))
    down = tuple((a + b) // 2 for a, b in zip(x, y))
    return up, down


def join_meet(x: Point, y: Point) -> Tuple[Point, Point]:
    """Componentwise max and min (the lattice join and meet)."""
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return tuple(map(max, x, y)), tuple(map(min, x, y))


def prefix_point(p: Point) -> Point:
    """Cumulative sums (p1, p1+p2, ..., p1+...+pn)."""
    out = []
    acc = 0
    for c in p:
        acc += c
        out.append(acc)
    return tuple(out)


def difference_point(p: Point) -> Point:
    """First differences (p1, p2-p1, ..., pn-p_{n-1}); inverse of
    :func:`prefix_point`."""
    out = []
    prev = 0
    for c in p:
        out.append(c - prev)
        prev = c
    return tuple(out)


# ---------------------------------------------------------------------------
# windows


@dataclass(frozen=True)
class Window:
    """A finite box [lo, hi] used to materialize possibly infinite results."""

    lo: Point
    hi: Point

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise ValueError("window bounds disagree in dimension")
        if any(a > b for a, b in zip(self.lo, self.hi)):
            raise ValueError(f"window has lo > hi: {self.lo} vs {self.hi}")

    @property
    def dim(self) -> int:
        return len(self.lo)

    def contains(self, p: Point) -> bool:
        return all(a <= c <= b for a, c, b in zip(self.lo, p, self.hi))

    def points(self) -> Iterator[Point]:
        ranges = [range(a, b + 1) for a, b in zip(self.lo, self.hi)]
        return itertools.product(*ranges)

    def size(self) -> int:
        n = 1
        for a, b in zip(self.lo, self.hi):
            n *= b - a + 1
        return n


def cube(n: int, lo: int, hi: int) -> Window:
    return Window((lo,) * n, (hi,) * n)


# ---------------------------------------------------------------------------
# lattice sets


def _normalize_rep(p: Point) -> Point:
    return vshift(p, -p[-1])


@dataclass(frozen=True)
class LatticeSet:
    """Finite subset of Z^n, or (``lifted=True``) the set
    {p + a*1 : p in points, a in Z} with representatives normalized to a
    zero last coordinate."""

    dim: int
    points: frozenset = field(default_factory=frozenset)
    lifted: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        pts = frozenset(tuple(int(c) for c in p) for p in self.points)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")
        if self.lifted:
            pts = frozenset(_normalize_rep(p) for p in pts)
        object.__setattr__(self, "points", pts)

    @staticmethod
    def of(points: Iterable[Iterable[int]], lifted: bool = False) -> "LatticeSet":
        pts = [tuple(int(c) for c in p) for p in points]
        if not pts:
            raise ValueError("cannot infer dimension of an empty set")
        return LatticeSet(len(pts[0]), frozenset(pts), lifted)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: Point) -> bool:
        if self.lifted:
            return _normalize_rep(p) in self.points
        return p in self.points

    def sorted_points(self) -> list:
        return sorted(self.points)

    def bounding_box(self) -> Window:
        if not self.points:
            raise EmptyResultError("empty set has no bounding box")
        pts = self.points
        lo = tuple(min(p[i] for p in pts) for i in range(self.dim))
        hi = tuple(max(p[i] for p in pts) for i in range(self.dim))
        return Window(lo, hi)

    def translate(self, t: Point) -> "LatticeSet":
        return LatticeSet(self.dim, frozenset(vadd(p, t) for p in self.points), self.lifted)


# ---------------------------------------------------------------------------
# lattice functions


@dataclass(frozen=True, eq=False)
class LatticeFn:
    """Finite map Z^n -> Q, +infinity outside the stored domain.

    When ``lifted`` the denoted function satisfies f(x + 1) = f(x) + ramp and
    the stored representatives have last coordinate 0.
    """

    dim: int
    values: Mapping[Point, Fraction] = field(default_factory=dict)
    lifted: bool = False
    ramp: Fraction = Fraction(0)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        vals: Dict[Point, Fraction] = {}
        for p, v in self.values.items():
            q = tuple(int(c) for c in p)
            if len(q) != self.dim:
                raise ValueError(f"point {q} does not have dimension {self.dim}")
            v = Fraction(v)
            if self.lifted:
                shift = q[-1]
                q = _normalize_rep(q)
                v = v - shift * Fraction(self.ramp)
            if q in vals and vals[q] != v:
                raise ValueError(f"conflicting values for representative {q}")
            vals[q] = v
        if not vals:
            raise ValueError("function domain must be nonempty")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "ramp", Fraction(self.ramp))

    @staticmethod
    def of(entries: Mapping, lifted: bool = False, ramp=Fraction(0)) -> "LatticeFn":
        items = {tuple(int(c) for c in p): Fraction(v) for p, v in dict(entries).items()}
        if not items:
            raise ValueError("function domain must be nonempty")
        n = len(next(iter(items)))
        return LatticeFn(n, items, lifted, Fraction(ramp))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeFn):
            return NotImplemented
        return (self.dim, self.lifted, self.ramp, dict(self.values)) == (
            other.dim,
            other.lifted,
            other.ramp,
            dict(other.values),
        )

    def value(self, p: Point) -> Value:
        if self.lifted:
            shift = p[-1]
            rep = _normalize_rep(p)
            base = self.values.get(rep)
            if base is None:
                return INF
            return base + shift * self.ramp
        v = self.values.get(tuple(p))
        return INF if v is None else v

    def domain(self) -> LatticeSet:
        return LatticeSet(self.dim, frozenset(self.values), self.lifted)

    def sorted_items(self) -> list:
        return sorted(self.values.items())

    def __len__(self) -> int:
        return len(self.values)


def indicator_fn(s: LatticeSet) -> LatticeFn:
    """0 on the set, +infinity elsewhere; preserves the lift (ramp 0)."""
    return LatticeFn(s.dim, {p: Fraction(0) for p in s.points}, s.lifted, Fraction(0))


# ---------------------------------------------------------------------------
# change of coordinates behind multimodularity
#
# The bidiagonal unimodular matrix with unit diagonal and -1 subdiagonal maps
# p to its first differences; its inverse (lower triangular all ones) maps x
# to its prefix sums.  prefix_transform pulls an object back through that
# matrix, so a multimodular input yields an object with discrete midpoint
# convexity.


def prefix_transform(obj):
    """Map every domain point to its prefix sums.  Rejects lifted inputs:
    the all-ones direction is not preserved by the coordinate change."""
    if obj.lifted:
        raise LiftedInputError("prefix transform is only defined for finite objects")
    if isinstance(obj, LatticeSet):
        return LatticeSet(obj.dim, frozenset(prefix_point(p) for p in obj.points))
    return LatticeFn(obj.dim, {prefix_point(p): v for p, v in obj.values.items()})


def difference_transform(obj):
    """Exact inverse of :func:`prefix_transform` (first differences)."""
    if obj.lifted:
        raise LiftedInputError("difference transform is only defined for finite objects")
    if isinstance(obj, LatticeSet):
        return LatticeSet(obj.dim, frozenset(difference_point(p) for p in obj.points))
    return LatticeFn(obj.dim, {difference_point(p): v for p, v in obj.values.items()})


# ---------------------------------------------------------------------------
# windowed restriction


def _lift_shift_range(p: Point, w: Window):
    lo = max(a - c for a, c in zip(w.lo, p))
    hi = min(b - c for b, c in zip(w.hi, p))
    return lo, hi


def restrict_to_window(obj, w: Window):
    """Intersect a set or function with the box [w.lo, w.hi].

    Lifted objects are materialized (every representative shifted by all
    multiples of the all-ones vector that stay inside the window) and the
    result is a plain finite object.  An empty intersection raises
    :class:`EmptyResultError`.
    """
    if w.dim != obj.dim:
        raise ValueError(f"window dimension {w.dim} != object dimension {obj.dim}")
    if isinstance(obj, LatticeSet):
        if obj.lifted:
            pts = set()
            for p in obj.points:
                lo, hi = _lift_shift_range(p, w)
                for a in range(lo, hi + 1):
                    pts.add(vshift(p, a))
        else:
            pts = {p for p in obj.points if w.contains(p)}
        if not pts:
            raise EmptyResultError("restriction produced an empty set")
        return LatticeSet(obj.dim, frozenset(pts))
    if isinstance(obj, LatticeFn):
        vals: Dict[Point, Fraction] = {}
        if obj.lifted:
            for p, v in obj.values.items():
                lo, hi = _lift_shift_range(p, w)
                for a in range(lo, hi + 1):
                    vals[vshift(p, a)] = v + a * obj.ramp
        else:
            vals = {p: v for p, v in obj.values.items() if w.contains(p)}
        if not vals:
            raise EmptyResultError("restriction produced an empty domain")
        return LatticeFn(obj.dim, vals)
    raise TypeError(f"cannot restrict object of type {type(obj)!r}")
