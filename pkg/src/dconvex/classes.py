"""Membership recognizers for the discrete convexity classes.

Every recognizer is an exact brute-force check of the defining axiom over
the stored points.  A negative verdict carries a witness that replays as a
genuine violation through :func:`verify_witness`.  Scanning is done in
lexicographic order and stops at the first violation, so verdicts are
deterministic.

Conventions for infinite values inside axioms: an inequality with +infinity
on the left-hand side holds; +infinity on the right-hand side is only
satisfied by +infinity on the left.  Internally the recognizers use ``None``
for +infinity on top of plain ``Fraction`` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .core import (
    LatticeFn,
    LatticeSet,
    LiftedInputError,
    Point,
    Window,
    difference_point,
    join_meet,
    linf_distance,
    midpoint_round,
    prefix_point,
    prefix_transform,
    supports,
    unit,
    vadd,
    vshift,
    vsub,
)
from .hull import half_midpoint, in_local_hull, local_extension_value
from .rationals import is_finite


class ClassLabel(str, Enum):
    INTEGER_BOX = "integer-box"
    SEPARABLE_CONVEX = "separable-convex"
    IC_SET = "integrally-convex-set"
    IC_FN = "integrally-convex-fn"
    LNAT_SET = "lnat-set"
    LNAT_FN = "lnat-fn"
    L_SET = "l-set"
    L_FN = "l-fn"
    MNAT_SET = "mnat-set"
    MNAT_FN = "mnat-fn"
    M_SET = "m-set"
    M_FN = "m-fn"
    MULTIMODULAR_SET = "multimodular-set"
    MULTIMODULAR_FN = "multimodular-fn"
    GLOBAL_DMC_SET = "global-dmc-set"
    GLOBAL_DMC_FN = "global-dmc-fn"
    LOCAL_DMC_FN = "local-dmc-fn"
    JUMP_SYSTEM = "jump-system"
    CONST_PARITY_JUMP = "const-parity-jump"
    SIMULT_EXCH_JUMP = "simult-exch-jump"
    JUMP_M_FN = "jump-m-fn"
    JUMP_MNAT_FN = "jump-mnat-fn"


SET_LABELS = frozenset(
    {
        ClassLabel.INTEGER_BOX,
        ClassLabel.IC_SET,
        ClassLabel.LNAT_SET,
        ClassLabel.L_SET,
        ClassLabel.MNAT_SET,
        ClassLabel.M_SET,
        ClassLabel.MULTIMODULAR_SET,
        ClassLabel.GLOBAL_DMC_SET,
        ClassLabel.JUMP_SYSTEM,
        ClassLabel.CONST_PARITY_JUMP,
        ClassLabel.SIMULT_EXCH_JUMP,
    }
)

FN_LABELS = frozenset(
    {
        ClassLabel.SEPARABLE_CONVEX,
        ClassLabel.IC_FN,
        ClassLabel.LNAT_FN,
        ClassLabel.L_FN,
        ClassLabel.MNAT_FN,
        ClassLabel.M_FN,
        ClassLabel.MULTIMODULAR_FN,
        ClassLabel.GLOBAL_DMC_FN,
        ClassLabel.LOCAL_DMC_FN,
        ClassLabel.JUMP_M_FN,
        ClassLabel.JUMP_MNAT_FN,
    }
)


class LabelKindError(ValueError):
    """Set label applied to a function or vice versa."""


@dataclass(frozen=True)
class Witness:
    """A concrete axiom violation.

    ``points`` carries the points (and, for jump axioms, the increment
    vector) involved; ``indices`` the coordinate indices where relevant.
    """

    kind: str
    points: Tuple[Point, ...]
    indices: Tuple[int, ...] = ()


@dataclass(frozen=True)
class Verdict:
    member: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.member


_OK = Verdict(True, None)


def _fail(kind: str, points, indices=()) -> Verdict:
    return Verdict(False, Witness(kind, tuple(points), tuple(indices)))


# ---------------------------------------------------------------------------
# small helpers over Fraction-or-None (None = +infinity)


def _add(a, b):
    if a is None or b is None:
        return None
    return a + b


def _less(a, b) -> bool:
    """a < b with None meaning +infinity."""
    if a is None:
        return False
    if b is None:
        return True
    return a < b


def increments(x: Point, y: Point) -> List[Point]:
    """All signed unit steps s with x + s inside the box [x ^ y, x v y],
    sorted lexicographically."""
    n = len(x)
    out = []
    for i in range(n):
        if x[i] < y[i]:
            out.append(unit(n, i))
        elif x[i] > y[i]:
            out.append(tuple(-c for c in unit(n, i)))
    return sorted(out)


def _ordered_pairs(pts: Sequence[Point]):
    for x in pts:
        for y in pts:
            if x != y:
                yield x, y


def _unordered_pairs(pts: Sequence[Point]):
    for i, x in enumerate(pts):
        for y in pts[i + 1 :]:
            yield x, y


# ---------------------------------------------------------------------------
# set recognizers


def _check_integer_box(s: LatticeSet) -> Verdict:
    box = s.bounding_box()
    for p in box.points():
        if p not in s.points:
            return _fail("box-gap", (p,))
    return _OK


def _check_lnat_set(s: LatticeSet) -> Verdict:
    pts = s.sorted_points()
    for x, y in _unordered_pairs(pts):
        up, down = midpoint_round(x, y)
        if up not in s.points or down not in s.points:
            return _fail("midpoint", (x, y))
    return _OK


def _check_global_dmc_set(s: LatticeSet) -> Verdict:
    pts = s.sorted_points()
    for x, y in _unordered_pairs(pts):
        if linf_distance(x, y) < 2:
            continue
        up, down = midpoint_round(x, y)
        if up not in s.points or down not in s.points:
            return _fail("midpoint-far", (x, y))
    return _OK


def _check_ic_set(s: LatticeSet) -> Verdict:
    pts = s.sorted_points()
    for x, y in _unordered_pairs(pts):
        if linf_distance(x, y) <= 1:
            continue  # both endpoints lie in N((x+y)/2), so the midpoint is covered
        if not in_local_hull(s, half_midpoint(x, y)):
            return _fail("hull-midpoint", (x, y))
    return _OK


def _check_mnat_set(s: LatticeSet) -> Verdict:
    pts = s.sorted_points()
    n = s.dim
    for x, y in _ordered_pairs(pts):
        d = vsub(x, y)
        plus, minus = supports(d)
        for i in plus:
            ei = unit(n, i)
            if vsub(x, ei) in s.points and vadd(y, ei) in s.points:
                continue
            if any(
                vadd(vsub(x, ei), unit(n, j)) in s.points
                and vsub(vadd(y, ei), unit(n, j)) in s.points
                for j in minus
            ):
                continue
            return _fail("exchange-mnat", (x, y), (i,))
    return _OK


def _check_m_set(s: LatticeSet) -> Verdict:
    pts = s.sorted_points()
    n = s.dim
    for x, y in _ordered_pairs(pts):
        d = vsub(x, y)
        plus, minus = supports(d)
        for i in plus:
            ei = unit(n, i)
            if any(
                vadd(vsub(x, ei), unit(n, j)) in s.points
                and vsub(vadd(y, ei), unit(n, j)) in s.points
                for j in minus
            ):
                continue
            return _fail("exchange-m", (x, y), (i,))
    return _OK


def _check_jump_system(s: LatticeSet) -> Verdict:
    pts = s.sorted_points()
    for x, y in _ordered_pairs(pts):
        for step in increments(x, y):
            xs = vadd(x, step)
            if xs in s.points:
                continue
            if any(vadd(xs, t) in s.points for t in increments(xs, y)):
                continue
            return _fail("jump-2step", (x, y, step))
    return _OK


def _check_const_parity_jump(s: LatticeSet) -> Verdict:
    pts = s.sorted_points()
    for x, y in _ordered_pairs(pts):
        for step in increments(x, y):
            xs = vadd(x, step)
            ys = vsub(y, step)
            if any(
                vadd(xs, t) in s.points and vsub(ys, t) in s.points
                for t in increments(xs, y)
            ):
                continue
            return _fail("jump-exc", (x, y, step))
    return _OK


def _check_simult_exch_jump(s: LatticeSet) -> Verdict:
    pts = s.sorted_points()
    for x, y in _ordered_pairs(pts):
        for step in increments(x, y):
            xs = vadd(x, step)
            ys = vsub(y, step)
            if xs in s.points and ys in s.points:
                continue
            if any(
                vadd(xs, t) in s.points and vsub(ys, t) in s.points
                for t in increments(xs, y)
            ):
                continue
            return _fail("jump-exc-nat", (x, y, step))
    return _OK


def _lifted_shift_span(r: Point, r2: Point):
    deltas = [a - b for a, b in zip(r, r2)]
    return min(deltas) - 1, max(deltas) + 1


def _check_l_set(s: LatticeSet) -> Verdict:
    if s.lifted:
        # Exact: relative shifts outside the coordinate spread give a
        # comparable pair, for which closure under join/meet is automatic.
        reps = s.sorted_points()
        for i, r in enumerate(reps):
            for r2 in reps[i:]:
                lo, hi = _lifted_shift_span(r, r2)
                for a in range(lo, hi + 1):
                    y = vshift(r2, a)
                    if y == r:
                        continue
                    jn, mt = join_meet(r, y)
                    if jn not in s or mt not in s:
                        return _fail("submodular", (r, y))
        return _OK
    # Finite input: treated as a windowed sample over its bounding box.
    # Negative verdicts are sound; a pass is only a necessary condition.
    pts = s.sorted_points()
    for x, y in _unordered_pairs(pts):
        jn, mt = join_meet(x, y)
        if jn not in s.points or mt not in s.points:
            return _fail("submodular", (x, y))
    box = s.bounding_box()
    for p in pts:
        for step in (1, -1):
            t = vshift(p, step)
            if box.contains(t) and t not in s.points:
                return _fail("ones-shift", (p, t))
    return _OK


def _check_multimodular_set(s: LatticeSet) -> Verdict:
    inner = _check_lnat_set(prefix_transform(s))
    if inner.member:
        return _OK
    p, q = inner.witness.points
    return _fail("multimodular-midpoint", (difference_point(p), difference_point(q)))


# ---------------------------------------------------------------------------
# function recognizers


def _check_separable(f: LatticeFn) -> Verdict:
    dom = f.domain()
    box_verdict = _check_integer_box(dom)
    if not box_verdict.member:
        return box_verdict
    vals = f.values
    box = dom.bounding_box()
    n = f.dim
    for x in sorted(vals):
        for i in range(n):
            lo = vsub(x, unit(n, i))
            hi = vadd(x, unit(n, i))
            if box.contains(lo) and box.contains(hi):
                if vals[lo] + vals[hi] < 2 * vals[x]:
                    return _fail("axis-convexity", (x,), (i,))
        for i in range(n):
            for j in range(i + 1, n):
                xi = vadd(x, unit(n, i))
                xj = vadd(x, unit(n, j))
                xij = vadd(xi, unit(n, j))
                if box.contains(xij):
                    if vals[x] + vals[xij] != vals[xi] + vals[xj]:
                        return _fail("modularity", (x,), (i, j))
    return _OK


def _check_lnat_fn(f: LatticeFn) -> Verdict:
    vals = f.values
    get = vals.get
    pts = sorted(vals)
    for x, y in _unordered_pairs(pts):
        up, down = midpoint_round(x, y)
        if _less(vals[x] + vals[y], _add(get(up), get(down))):
            return _fail("midpoint", (x, y))
    return _OK


def _check_global_dmc_fn(f: LatticeFn) -> Verdict:
    vals = f.values
    get = vals.get
    pts = sorted(vals)
    for x, y in _unordered_pairs(pts):
        if linf_distance(x, y) < 2:
            continue
        up, down = midpoint_round(x, y)
        if _less(vals[x] + vals[y], _add(get(up), get(down))):
            return _fail("midpoint-far", (x, y))
    return _OK


def _check_local_dmc_fn(f: LatticeFn) -> Verdict:
    dom_verdict = _check_global_dmc_set(f.domain())
    if not dom_verdict.member:
        return _fail("domain-not-dmc", dom_verdict.witness.points)
    vals = f.values
    get = vals.get
    pts = sorted(vals)
    for x, y in _unordered_pairs(pts):
        if linf_distance(x, y) != 2:
            continue
        up, down = midpoint_round(x, y)
        if _less(vals[x] + vals[y], _add(get(up), get(down))):
            return _fail("midpoint-two", (x, y))
    return _OK


def _check_ic_fn(f: LatticeFn) -> Verdict:
    vals = f.values
    pts = sorted(vals)
    for x, y in _unordered_pairs(pts):
        if linf_distance(x, y) <= 1:
            continue  # lambda = (1/2, 1/2) on x, y already meets the bound
        mid = half_midpoint(x, y)
        ext = local_extension_value(f, mid)
        if not is_finite(ext) or 2 * ext > vals[x] + vals[y]:
            return _fail("hull-midpoint", (x, y))
    return _OK


def _check_mnat_fn(f: LatticeFn) -> Verdict:
    vals = f.values
    get = vals.get
    pts = sorted(vals)
    n = f.dim
    for x, y in _ordered_pairs(pts):
        d = vsub(x, y)
        plus, minus = supports(d)
        lhs = vals[x] + vals[y]
        for i in plus:
            ei = unit(n, i)
            xi = vsub(x, ei)
            yi = vadd(y, ei)
            best = _add(get(xi), get(yi))  # the j = 0 option
            for j in minus:
                ej = unit(n, j)
                cand = _add(get(vadd(xi, ej)), get(vsub(yi, ej)))
                if _less(cand, best):
                    best = cand
            if _less(lhs, best):
                return _fail("exchange-mnat-fn", (x, y), (i,))
    return _OK


def _check_m_fn(f: LatticeFn) -> Verdict:
    vals = f.values
    get = vals.get
    pts = sorted(vals)
    n = f.dim
    for x, y in _ordered_pairs(pts):
        d = vsub(x, y)
        plus, minus = supports(d)
        lhs = vals[x] + vals[y]
        for i in plus:
            ei = unit(n, i)
            xi = vsub(x, ei)
            yi = vadd(y, ei)
            best = None
            for j in minus:
                ej = unit(n, j)
                cand = _add(get(vadd(xi, ej)), get(vsub(yi, ej)))
                if _less(cand, best):
                    best = cand
            if _less(lhs, best):
                return _fail("exchange-m-fn", (x, y), (i,))
    return _OK


def _check_jump_m_fn(f: LatticeFn) -> Verdict:
    vals = f.values
    get = vals.get
    pts = sorted(vals)
    for x, y in _ordered_pairs(pts):
        lhs = vals[x] + vals[y]
        for step in increments(x, y):
            xs = vadd(x, step)
            ys = vsub(y, step)
            best = None
            for t in increments(xs, y):
                cand = _add(get(vadd(xs, t)), get(vsub(ys, t)))
                if _less(cand, best):
                    best = cand
            if _less(lhs, best):
                return _fail("jump-m-fn", (x, y, step))
    return _OK


def _check_jump_mnat_fn(f: LatticeFn) -> Verdict:
    vals = f.values
    get = vals.get
    pts = sorted(vals)
    for x, y in _ordered_pairs(pts):
        lhs = vals[x] + vals[y]
        for step in increments(x, y):
            xs = vadd(x, step)
            ys = vsub(y, step)
            one = _add(get(xs), get(ys))
            if not _less(lhs, one):
                continue
            best = None
            for t in increments(xs, y):
                cand = _add(get(vadd(xs, t)), get(vsub(ys, t)))
                if _less(cand, best):
                    best = cand
            if _less(lhs, best):
                return _fail("jump-mnat-fn", (x, y, step))
    return _OK


def _check_l_fn(f: LatticeFn) -> Verdict:
    if f.lifted:
        reps = sorted(f.values)
        for i, r in enumerate(reps):
            for r2 in reps[i:]:
                lo, hi = _lifted_shift_span(r, r2)
                for a in range(lo, hi + 1):
                    y = vshift(r2, a)
                    if y == r:
                        continue
                    jn, mt = join_meet(r, y)
                    lhs = f.values[r] + _fn_get(f, y)
                    if _less(lhs, _add(_fn_get(f, jn), _fn_get(f, mt))):
                        return _fail("submodular", (r, y))
        return _OK
    # Finite sample: necessary conditions only (sound negatives).
    vals = f.values
    get = vals.get
    pts = sorted(vals)
    for x, y in _unordered_pairs(pts):
        jn, mt = join_meet(x, y)
        if _less(vals[x] + vals[y], _add(get(jn), get(mt))):
            return _fail("submodular", (x, y))
    box = f.domain().bounding_box()
    delta = None
    anchor = None
    for p in pts:
        for step in (1, -1):
            t = vshift(p, step)
            if box.contains(t) and t not in vals:
                return _fail("ones-shift", (p, t))
        t = vshift(p, 1)
        if t in vals:
            d = vals[t] - vals[p]
            if delta is None:
                delta, anchor = d, p
            elif d != delta:
                return _fail("ramp", (anchor, p))
    return _OK


def _check_multimodular_fn(f: LatticeFn) -> Verdict:
    inner = _check_lnat_fn(prefix_transform(f))
    if inner.member:
        return _OK
    p, q = inner.witness.points
    return _fail("multimodular-midpoint", (difference_point(p), difference_point(q)))


# ---------------------------------------------------------------------------
# public entry points

_SET_DISPATCH = {
    ClassLabel.INTEGER_BOX: _check_integer_box,
    ClassLabel.IC_SET: _check_ic_set,
    ClassLabel.LNAT_SET: _check_lnat_set,
    ClassLabel.L_SET: _check_l_set,
    ClassLabel.MNAT_SET: _check_mnat_set,
    ClassLabel.M_SET: _check_m_set,
    ClassLabel.MULTIMODULAR_SET: _check_multimodular_set,
    ClassLabel.GLOBAL_DMC_SET: _check_global_dmc_set,
    ClassLabel.JUMP_SYSTEM: _check_jump_system,
    ClassLabel.CONST_PARITY_JUMP: _check_const_parity_jump,
    ClassLabel.SIMULT_EXCH_JUMP: _check_simult_exch_jump,
}

_FN_DISPATCH = {
    ClassLabel.SEPARABLE_CONVEX: _check_separable,
    ClassLabel.IC_FN: _check_ic_fn,
    ClassLabel.LNAT_FN: _check_lnat_fn,
    ClassLabel.L_FN: _check_l_fn,
    ClassLabel.MNAT_FN: _check_mnat_fn,
    ClassLabel.M_FN: _check_m_fn,
    ClassLabel.MULTIMODULAR_FN: _check_multimodular_fn,
    ClassLabel.GLOBAL_DMC_FN: _check_global_dmc_fn,
    ClassLabel.LOCAL_DMC_FN: _check_local_dmc_fn,
    ClassLabel.JUMP_M_FN: _check_jump_m_fn,
    ClassLabel.JUMP_MNAT_FN: _check_jump_mnat_fn,
}


def check_set(s: LatticeSet, label: ClassLabel) -> Verdict:
    if not isinstance(s, LatticeSet):
        raise LabelKindError(f"check_set needs a LatticeSet, got {type(s).__name__}")
    label = ClassLabel(label)
    if label not in SET_LABELS:
        raise LabelKindError(f"{label.value} is a function label")
    if not s.points:
        raise ValueError("membership is undefined for the empty set")
    if s.lifted and label is not ClassLabel.L_SET:
        raise LiftedInputError(f"{label.value} needs a finite set")
    return _SET_DISPATCH[label](s)


def check_fn(f: LatticeFn, label: ClassLabel) -> Verdict:
    if not isinstance(f, LatticeFn):
        raise LabelKindError(f"check_fn needs a LatticeFn, got {type(f).__name__}")
    label = ClassLabel(label)
    if label not in FN_LABELS:
        raise LabelKindError(f"{label.value} is a set label")
    if f.lifted and label is not ClassLabel.L_FN:
        raise LiftedInputError(f"{label.value} needs a finite function")
    return _FN_DISPATCH[label](f)


def check(obj, label: ClassLabel) -> Verdict:
    if isinstance(obj, LatticeSet):
        return check_set(obj, label)
    return check_fn(obj, label)


# ---------------------------------------------------------------------------
# minimizer sets and the polyhedral description of multimodular sets


def argmin_perturbed(f: LatticeFn, c: Sequence) -> LatticeSet:
    """Exact minimizer set of x -> f(x) - c.x over the domain of f.

    For a lifted function the perturbation must satisfy sum(c) = ramp, in
    which case the objective is invariant along the lift and the result is a
    lifted set; any other c is unbounded and rejected.
    """
    cvec = [Fraction(v) for v in c]
    if len(cvec) != f.dim:
        raise ValueError("perturbation dimension mismatch")
    if f.lifted:
        if sum(cvec) != f.ramp:
            raise ValueError("perturbed lifted function has no minimizer (unbounded along the lift)")
        best = None
        arg: List[Point] = []
        for p, v in f.sorted_items():
            score = v - sum((ci * pi for ci, pi in zip(cvec, p)), Fraction(0))
            if best is None or score < best:
                best, arg = score, [p]
            elif score == best:
                arg.append(p)
        return LatticeSet(f.dim, frozenset(arg), lifted=True)
    best = None
    arg = []
    for p, v in f.sorted_items():
        score = v - sum((ci * pi for ci, pi in zip(cvec, p)), Fraction(0))
        if best is None or score < best:
            best, arg = score, [p]
        elif score == best:
            arg.append(p)
    return LatticeSet(f.dim, frozenset(arg))


def multimodular_polyhedral_check(s: LatticeSet, w: Window) -> bool:
    """Tightest consecutive-interval sum bounds, then compare: the set is
    multimodular iff it equals the lattice points of the window satisfying
    a_I <= x(I) <= b_I for every consecutive index interval I."""
    if s.lifted:
        raise LiftedInputError("polyhedral check needs a finite set")
    if not s.points:
        raise ValueError("membership is undefined for the empty set")
    pts = s.sorted_points()
    if not all(w.contains(p) for p in pts):
        raise ValueError("set is not contained in the window")
    n = s.dim
    intervals = [(i, j) for i in range(n) for j in range(i, n)]
    bounds = {}
    for i, j in intervals:
        sums = [sum(p[i : j + 1]) for p in pts]
        bounds[(i, j)] = (min(sums), max(sums))
    candidate = set()
    for p in s.bounding_box().points():
        ok = True
        for i, j in intervals:
            t = sum(p[i : j + 1])
            lo, hi = bounds[(i, j)]
            if not lo <= t <= hi:
                ok = False
                break
        if ok:
            candidate.add(p)
    return candidate == set(s.points)


# ---------------------------------------------------------------------------
# witness replay


def _fn_get(f: LatticeFn, p: Point):
    if f.lifted:
        v = f.value(p)
        return None if not is_finite(v) else v
    return f.values.get(p)


def _member(obj, p: Point) -> bool:
    if isinstance(obj, LatticeSet):
        return p in obj
    return _fn_get(obj, p) is not None


def verify_witness(obj, witness: Witness) -> bool:
    """Replay a witness through the axiom it claims to violate.

    Returns True iff the recorded data is a genuine violation for this
    object, independently of how the witness was found.
    """
    kind = witness.kind
    pts = witness.points

    if kind == "box-gap":
        (p,) = pts
        dom = obj if isinstance(obj, LatticeSet) else obj.domain()
        return dom.bounding_box().contains(p) and p not in dom.points

    if kind in ("midpoint", "midpoint-far", "midpoint-two"):
        x, y = pts
        if kind == "midpoint-far" and linf_distance(x, y) < 2:
            return False
        if kind == "midpoint-two" and linf_distance(x, y) != 2:
            return False
        up, down = midpoint_round(x, y)
        if isinstance(obj, LatticeSet):
            return (
                x in obj.points
                and y in obj.points
                and (up not in obj.points or down not in obj.points)
            )
        fx, fy = _fn_get(obj, x), _fn_get(obj, y)
        if fx is None or fy is None:
            return False
        return _less(fx + fy, _add(_fn_get(obj, up), _fn_get(obj, down)))

    if kind == "domain-not-dmc":
        x, y = pts
        dom = obj.domain()
        if linf_distance(x, y) < 2:
            return False
        up, down = midpoint_round(x, y)
        return (
            x in dom.points
            and y in dom.points
            and (up not in dom.points or down not in dom.points)
        )

    if kind == "hull-midpoint":
        x, y = pts
        mid = half_midpoint(x, y)
        if isinstance(obj, LatticeSet):
            return x in obj.points and y in obj.points and not in_local_hull(obj, mid)
        fx, fy = _fn_get(obj, x), _fn_get(obj, y)
        if fx is None or fy is None:
            return False
        ext = local_extension_value(obj, mid)
        return not is_finite(ext) or 2 * ext > fx + fy

    if kind == "submodular":
        x, y = pts
        jn, mt = join_meet(x, y)
        if isinstance(obj, LatticeSet):
            return x in obj and y in obj and (jn not in obj or mt not in obj)
        fx, fy = _fn_get(obj, x), _fn_get(obj, y)
        if fx is None or fy is None:
            return False
        return _less(fx + fy, _add(_fn_get(obj, jn), _fn_get(obj, mt)))

    if kind == "ones-shift":
        x, t = pts
        if vsub(t, x) not in ((1,) * len(x), (-1,) * len(x)):
            return False
        dom = obj if isinstance(obj, LatticeSet) else obj.domain()
        return x in dom.points and dom.bounding_box().contains(t) and t not in dom.points

    if kind == "ramp":
        x, y = pts
        fx, fx1 = _fn_get(obj, x), _fn_get(obj, vshift(x, 1))
        fy, fy1 = _fn_get(obj, y), _fn_get(obj, vshift(y, 1))
        if None in (fx, fx1, fy, fy1):
            return False
        return fx1 - fx != fy1 - fy

    if kind == "axis-convexity":
        (x,) = pts
        (i,) = witness.indices
        ei = unit(obj.dim, i)
        lo, hi, mi = _fn_get(obj, vsub(x, ei)), _fn_get(obj, vadd(x, ei)), _fn_get(obj, x)
        if None in (lo, hi, mi):
            return False
        return lo + hi < 2 * mi

    if kind == "modularity":
        (x,) = pts
        i, j = witness.indices
        ei, ej = unit(obj.dim, i), unit(obj.dim, j)
        a = _fn_get(obj, x)
        b = _fn_get(obj, vadd(vadd(x, ei), ej))
        c1 = _fn_get(obj, vadd(x, ei))
        c2 = _fn_get(obj, vadd(x, ej))
        if None in (a, b, c1, c2):
            return False
        return a + b != c1 + c2

    if kind in ("exchange-mnat", "exchange-m"):
        x, y = pts
        (i,) = witness.indices
        n = obj.dim
        if x not in obj.points or y not in obj.points:
            return False
        plus, minus = supports(vsub(x, y))
        if i not in plus:
            return False
        ei = unit(n, i)
        if kind == "exchange-mnat":
            if vsub(x, ei) in obj.points and vadd(y, ei) in obj.points:
                return False
        return not any(
            vadd(vsub(x, ei), unit(n, j)) in obj.points
            and vsub(vadd(y, ei), unit(n, j)) in obj.points
            for j in minus
        )

    if kind in ("exchange-mnat-fn", "exchange-m-fn"):
        x, y = pts
        (i,) = witness.indices
        n = obj.dim
        fx, fy = _fn_get(obj, x), _fn_get(obj, y)
        if fx is None or fy is None:
            return False
        plus, minus = supports(vsub(x, y))
        if i not in plus:
            return False
        ei = unit(n, i)
        xi, yi = vsub(x, ei), vadd(y, ei)
        best = _add(_fn_get(obj, xi), _fn_get(obj, yi)) if kind == "exchange-mnat-fn" else None
        for j in minus:
            ej = unit(n, j)
            cand = _add(_fn_get(obj, vadd(xi, ej)), _fn_get(obj, vsub(yi, ej)))
            if _less(cand, best):
                best = cand
        return _less(fx + fy, best)

    if kind in ("jump-2step", "jump-exc", "jump-exc-nat"):
        x, y, step = pts
        if x not in obj.points or y not in obj.points:
            return False
        if step not in increments(x, y):
            return False
        xs, ys = vadd(x, step), vsub(y, step)
        if kind == "jump-2step":
            if xs in obj.points:
                return False
            return not any(vadd(xs, t) in obj.points for t in increments(xs, y))
        if kind == "jump-exc-nat" and xs in obj.points and ys in obj.points:
            return False
        return not any(
            vadd(xs, t) in obj.points and vsub(ys, t) in obj.points
            for t in increments(xs, y)
        )

    if kind in ("jump-m-fn", "jump-mnat-fn"):
        x, y, step = pts
        fx, fy = _fn_get(obj, x), _fn_get(obj, y)
        if fx is None or fy is None:
            return False
        if step not in increments(x, y):
            return False
        xs, ys = vadd(x, step), vsub(y, step)
        lhs = fx + fy
        if kind == "jump-mnat-fn":
            one = _add(_fn_get(obj, xs), _fn_get(obj, ys))
            if not _less(lhs, one):
                return False
        best = None
        for t in increments(xs, y):
            cand = _add(_fn_get(obj, vadd(xs, t)), _fn_get(obj, vsub(ys, t)))
            if _less(cand, best):
                best = cand
        return _less(lhs, best)

    if kind == "multimodular-midpoint":
        x, y = pts
        pulled = prefix_transform(obj)
        inner = Witness("midpoint", (prefix_point(x), prefix_point(y)))
        return verify_witness(pulled, inner)

    raise ValueError(f"unknown witness kind {kind!r}")
