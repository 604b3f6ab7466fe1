"""Piecewise-linear representation of an integer array over ``[lo..hi]``.

The array is stored as the breakpoints of its linear interpolation. For every
breakpoint ``x`` two Interval-add sets hold the slope and intercept of the
segment starting at ``x``, so ``A[x] = alpha[x] * x + beta[x]``. The last
breakpoint (``hi``) has no segment of its own; its pair only encodes its value,
which stays correct under range adds on either set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..interval_add import IntervalAddSet


class DomainError(IndexError):
    pass


@dataclass
class RayEvent:
    """One explicit ray shooting, recorded when instrumentation is on."""

    origin: int
    direction: int
    slope: int
    origin_is_boundary: bool
    origin_active: bool
    next_active: int | None = None
    gamma: object = None  # Fraction slope of the mega-segment the ray enters
    removed: list = field(default_factory=list)
    created: list = field(default_factory=list)
    created_active: list = field(default_factory=list)
    stop: int | None = None
    next_active_after: str | None = None  # "deleted" | "passive" | "active"


class PiecewiseLinear:
    def __init__(self, lo: int, hi: int):
        if lo > hi:
            raise DomainError(f"empty domain [{lo}, {hi}]")
        self.lo, self.hi = lo, hi
        self.Da = IntervalAddSet()
        self.Db = IntervalAddSet()
        self.Da.insert(lo, 0)
        self.Db.insert(lo, 0)
        if hi != lo:
            self.Da.insert(hi, 0)
            self.Db.insert(hi, 0)
        self.inserted = 2 if hi != lo else 1
        self.op_count = 0
        self.instrument = False
        self.rays: list[RayEvent] = []

    # breakpoint helpers

    def _check_range(self, i, j):
        if i > j or i < self.lo or j > self.hi:
            raise DomainError(f"range [{i}, {j}] outside [{self.lo}, {self.hi}]")

    def _val(self, x: int) -> int:
        return self.Da.lookup(x) * x + self.Db.lookup(x)

    def _eval(self, k: int) -> int:
        """Value of the stored interpolation at k."""
        p = self.Da.floor(k)
        return self.Da.lookup(p) * k + self.Db.lookup(p)

    def _is_bp(self, x: int) -> bool:
        return self.Da.lookup(x) is not None

    def _split(self, x: int) -> None:
        """Make x a breakpoint without changing the function."""
        if x < self.lo or x > self.hi or self._is_bp(x):
            return
        p = self.Da.floor(x)
        self.Da.insert(x, self.Da.lookup(p))
        self.Db.insert(x, self.Db.lookup(p))
        self.inserted += 1

    def _remove_bp(self, x: int) -> None:
        self.Da.remove(x)
        self.Db.remove(x)

    def _link(self, a: int, va: int, b: int, vb: int) -> None:
        """Set the segment starting at breakpoint a to pass through (b, vb)."""
        slope, rem = divmod(vb - va, b - a)
        if rem:
            raise AssertionError(f"non-integer slope between {a} and {b}")
        self.Da.assign(a, slope)
        self.Db.assign(a, va - slope * a)

    def _set_value(self, x: int, v: int) -> None:
        """Re-anchor x's own pair at value v keeping its slope (used at hi)."""
        self.Db.assign(x, v - self.Da.lookup(x) * x)

    def _add_bp(self, x: int) -> None:
        if not self._is_bp(x):
            self.Da.insert(x, 0)
            self.Db.insert(x, 0)
            self.inserted += 1

    def _relink_around(self, x: int, vx: int, left: int | None, vleft: int | None,
                       right: int | None, vright: int | None) -> None:
        if left is not None:
            self._link(left, vleft, x, vx)
        if right is not None:
            self._link(x, vx, right, vright)
        elif x == self.hi:
            self._set_value(x, vx)

    def _merge(self, x: int) -> bool:
        """Drop x if the segments on both sides have equal slopes."""
        if x <= self.lo or x >= self.hi or not self._is_bp(x):
            return False
        p = self.Da.prev(x)
        if self.Da.lookup(p) == self.Da.lookup(x):
            self._remove_bp(x)
            return True
        return False

    def _slope_active(self, x: int) -> bool:
        """Activity of breakpoint x read off the stored slopes."""
        if x == self.lo or x == self.hi:
            return True
        return self.Da.lookup(x) > self.Da.lookup(self.Da.prev(x))

    def _shoot(self, origin: int, slope: int, d: int, end: int, on_active=None):
        """Replace the stored function beyond ``origin`` (direction d) by the ray of
        the given slope until the first breakpoint strictly below the ray, or
        until ``end``. Returns ``(stop, touched, removed, reached)`` where
        ``reached`` tells whether ``end`` itself was on or above the ray.
        """
        Da = self.Da
        step = Da.next if d > 0 else Da.prev
        v0 = self._val(origin)
        ds = slope * d
        prev, prev_v = origin, v0
        removed = []
        w = step(origin)
        while True:
            vw = self._val(w)
            rw = v0 + ds * (w - origin)
            if rw > vw:
                break
            if w == end:
                outer = step(end)
                v_outer = self._val(outer) if outer is not None else None
                if d > 0:
                    self._link(origin, v0, end, rw)
                    self._relink_around(end, rw, None, None, outer, v_outer)
                else:
                    self._link(end, rw, origin, v0)
                    if outer is not None:
                        self._link(outer, v_outer, end, rw)
                touched = [origin, end] + ([outer] if outer is not None else [])
                return end, touched, removed, True
            if on_active is not None:
                on_active(w)
            self._remove_bp(w)
            removed.append(w)
            prev, prev_v = w, vw
            w = step(w)
        # the segment between prev and w crosses the ray
        s = (vw - prev_v) // (w - prev)
        den = ds - s
        num = prev_v - s * prev - v0 + ds * origin
        if d > 0:
            xp = num // den
        else:
            xp = -((-num) // den)
        exact = num % den == 0
        chain = [(origin, v0)]
        if xp != origin:
            chain.append((xp, v0 + ds * (xp - origin)))
        if not exact and xp + d != w:
            xq = xp + d
            chain.append((xq, prev_v + s * (xq - prev)))
        chain.append((w, vw))
        for x, _ in chain[1:-1]:
            self._add_bp(x)
        if d < 0:
            chain.reverse()
        for (a, va), (b, vb) in zip(chain, chain[1:]):
            self._link(a, va, b, vb)
        touched = [x for x, _ in chain]
        return w, touched, removed, False

    # public helpers shared by both engines

    def breakpoints(self) -> list[tuple[int, int, int]]:
        """``(x, y, slope)`` for every stored breakpoint."""
        return [(x, a * x + b, a) for (x, a), (_, b) in zip(self.Da.items(), self.Db.items())]

    def _interp_values(self) -> list[int]:
        xs = list(self.Da.items())
        bs = list(self.Db.items())
        out: list[int] = []
        ends = [x for x, _ in xs[1:]] + [self.hi + 1]
        for (x, a), (_, b), end in zip(xs, bs, ends):
            if a:
                out.extend(range(a * x + b, a * end + b, a))
            else:
                out.extend([b] * (end - x))
        return out

    def _begin(self, i, j):
        self._check_range(i, j)
        self.op_count += 1

    def _next_active_scan(self, x: int):
        """Next breakpoint after x that is active by stored slopes (instrumentation)."""
        y = self.Da.next(x)
        while y is not None and not self._slope_active(y):
            y = self.Da.next(y)
        return y

    def _prev_active_scan(self, x: int):
        y = self.Da.prev(x)
        while y is not None and not self._slope_active(y):
            y = self.Da.prev(y)
        return y
