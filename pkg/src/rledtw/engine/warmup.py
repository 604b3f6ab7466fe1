"""Range engine that applies every wave by explicit ray shooting."""

from __future__ import annotations

from fractions import Fraction

from .base import PiecewiseLinear, RayEvent


class WarmupEngine(PiecewiseLinear):
    """Array over ``[lo..hi]`` (initially zero) kept as maximal linear segments.

    Each wave shoots a ray from every breakpoint whose outgoing segment is
    steeper than the wave slope, deleting breakpoints on or above it.
    """

    def lookup(self, k: int) -> int:
        if not self.lo <= k <= self.hi:
            raise IndexError(k)
        return self._eval(k)

    def values(self) -> list[int]:
        return self._interp_values()

    def __len__(self):
        return len(self.Da)

    def _cleanup(self, points) -> None:
        for x in sorted(set(points)):
            self._merge(x)

    def _add(self, i, j, c, target) -> None:
        pts = [x for x in (i - 1, i, j, j + 1) if self.lo <= x <= self.hi]
        for x in pts:
            self._split(x)
        target.add_to_range(i, j, c)
        if i > self.lo:
            self._link(i - 1, self._val(i - 1), i, self._val(i))
        if j < self.hi:
            self._link(j, self._val(j), j + 1, self._val(j + 1))
        self._cleanup(pts)

    def add_const(self, i: int, j: int, c: int) -> None:
        self._begin(i, j)
        self._add(i, j, c, self.Db)

    def add_gradient(self, i: int, j: int, g: int) -> None:
        self._begin(i, j)
        self._add(i, j, g, self.Da)

    def left_wave(self, i: int, j: int, alpha: int) -> None:
        self._begin(i, j)
        if alpha < 0:
            raise ValueError("wave slope must be non-negative")
        if i == j:
            return
        pts = [x for x in (i, j, j + 1) if x <= self.hi]
        for x in pts:
            self._split(x)
        touched = list(pts)
        cur = i
        while True:
            hit = self.Da.next_gt(cur - 1, alpha)
            if hit is None or hit[0] >= j:
                break
            stop = self._ray(hit[0], alpha, 1, j, i, touched)
            if stop == j:
                break
            cur = stop
        self._cleanup(touched)

    def right_wave(self, i: int, j: int, alpha: int) -> None:
        self._begin(i, j)
        if alpha < 0:
            raise ValueError("wave slope must be non-negative")
        if i == j:
            return
        pts = [x for x in (i - 1, i, j) if x >= self.lo]
        for x in pts:
            self._split(x)
        touched = list(pts)
        cur = j
        while True:
            hit = self.Da.prev_lt(cur, -alpha)
            if hit is None or hit[0] < i:
                break
            origin = self.Da.next(hit[0])
            stop = self._ray(origin, alpha, -1, i, j, touched)
            if stop == i:
                break
            cur = stop
        self._cleanup(touched)

    def _ray(self, origin, alpha, d, end, start, touched):
        ev = None
        if self.instrument:
            ev = self._ray_event(origin, alpha, d, start, end)
        stop, t, removed, _ = self._shoot(origin, alpha, d, end)
        touched.extend(t)
        if ev is not None:
            ev.removed = removed
            ev.stop = stop
            ev.created = [x for x in t if min(origin, stop) < x < max(origin, stop)]
            ev.created_active = [x for x in ev.created if self._is_bp(x) and self._slope_active(x)]
            q = ev.next_active
            if q is not None:
                if not self._is_bp(q):
                    ev.next_active_after = "deleted"
                else:
                    ev.next_active_after = "active" if self._slope_active(q) else "passive"
            self.rays.append(ev)
        return stop

    def _ray_event(self, origin, alpha, d, start, end) -> RayEvent:
        ev = RayEvent(origin, d, alpha, origin == start, self._slope_active(origin))
        q = self._next_active_scan(origin) if d > 0 else self._prev_active_scan(origin)
        # only mega-segments lying strictly inside the wave range are checked
        if ev.origin_active and q is not None and (q - end) * d < 0:
            ev.next_active = q
            ev.gamma = Fraction(self._val(q) - self._val(origin), q - origin)
        return ev

    def dump(self) -> str:
        return "\n".join(f"{x}, {y}, {a}" for x, y, a in self.breakpoints())
