"""Range engine with deferred short rays (amortized polylog per operation).

Breakpoints where the slope strictly increases, plus the two domain ends, are
*active*; consecutive active points bound a mega-segment whose interior is
concave. Rays that cannot change the set of active points are not shot;
their slope is recorded as a pending left ray (``rho``, keyed by the left
active point) or pending right ray (``rho_r``, keyed by the right one) in two
Add-min sets, so one range chmin defers a whole run of them. The true array
inside a mega-segment ``[q, q']`` is

    A[x] = min(stored[x], A[q] + rho[q] * (x - q), A[q'] + rho_r[q'] * (q' - x))

and ``flush(q)`` materializes both pending rays.

Each active ``q`` also carries two trigger slopes, stored as ``2*floor(s)``
plus one when ``s`` is fractional so integer comparisons against wave slopes
stay exact:

* left trigger: the larger of the mega-segment slope and the slope from ``q``
  to the stored point one cell before ``q'``. A left ray of slope ``a`` from
  ``q`` can delete or deactivate ``q'`` only if ``a`` is at most this value.
* right trigger: the mirror image, negated so that a right ray of slope ``a``
  needs explicit handling exactly when the trigger is at most ``-a``.
"""

from __future__ import annotations

from fractions import Fraction

from ..add_min import FLAT_LIMIT, AddMinSet
from ..interval_add import IntervalAddSet
from .base import PiecewiseLinear, RayEvent

SLOPE_INF = 1 << 100
_FINITE = SLOPE_INF >> 1


def _enc(num: int, den: int) -> int:
    """Order-preserving integer code of num/den (den > 0)."""
    f, r = divmod(num, den)
    return 2 * f + (1 if r else 0)


class LazyEngine(PiecewiseLinear):
    def __init__(self, lo: int, hi: int, flat_limit: int = FLAT_LIMIT):
        super().__init__(lo, hi)
        self.Dt = IntervalAddSet()  # left triggers; its keys are the active points
        self.Dp = IntervalAddSet()  # right triggers
        # a small flat_limit forces the pending-ray sets to recurse (tests)
        self.Dr = AddMinSet(flat_limit=flat_limit)
        self.Drp = AddMinSet(flat_limit=flat_limit)
        self.flushes = 0
        for x in {lo, hi}:
            self._add_active(x)
        self._refresh(lo)

    # active-point bookkeeping

    def _active(self, x) -> bool:
        return self.Dt.lookup(x) is not None

    def active_points(self) -> list[int]:
        return self.Dt.keys()

    def _add_active(self, x: int) -> None:
        self.Dt.insert(x, 0)
        self.Dp.insert(x, 0)
        self.Dr.insert(x, SLOPE_INF)
        self.Drp.insert(x, SLOPE_INF)

    def _drop_active(self, x: int) -> None:
        self.Dt.remove(x)
        self.Dp.remove(x)
        self.Dr.remove(x)
        self.Drp.remove(x)

    def _refresh(self, q) -> None:
        """Recompute the triggers of the mega-segment starting at q."""
        if q is None or not self._active(q):
            return
        nq = self.Dt.next(q)
        if nq is None:
            self.Dt.assign(q, 0)
            self.Dp.assign(q, 0)
            return
        vq, vn = self._val(q), self._val(nq)
        span = nq - q
        g = _enc(vn - vq, span)
        left = right = g
        if span > 1:
            left = max(g, _enc(self._eval(nq - 1) - vq, span - 1))
            right = min(g, _enc(vn - self._eval(q + 1), span - 1))
        self.Dt.assign(q, left)
        self.Dp.assign(q, right)

    # flushing

    def flush(self, q: int) -> None:
        """Materialize the pending rays of the mega-segment starting at q."""
        if not self._active(q):
            raise KeyError(f"{q} is not an active point")
        self._flush(q)

    def _flush(self, q) -> None:
        if q is None or (self.Dr.min_all() >= _FINITE and self.Drp.min_all() >= _FINITE):
            return
        nq = self.Dt.next(q)
        rho = self.Dr.lookup(q)
        rho_r = self.Drp.lookup(nq) if nq is not None else SLOPE_INF
        if rho >= _FINITE and rho_r >= _FINITE:
            return
        self.flushes += 1
        touched = []
        if rho < _FINITE:
            self.Dr.assign(q, SLOPE_INF)
            if nq is not None:
                _, t, _, reached = self._shoot(q, rho, 1, nq)
                if reached:
                    raise AssertionError("pending left ray reached the next active point")
                touched += t
        if rho_r < _FINITE:
            self.Drp.assign(nq, SLOPE_INF)
            _, t, _, reached = self._shoot(nq, rho_r, -1, q)
            if reached:
                raise AssertionError("pending right ray reached the previous active point")
            touched += t
        for x in sorted(set(touched)):
            if not self._active(x):
                self._merge(x)
        self._refresh(q)

    def clone(self) -> "LazyEngine":
        """Independent copy (structures duplicated, counters and rays reset)."""
        dup = LazyEngine.__new__(LazyEngine)
        dup.lo, dup.hi = self.lo, self.hi
        dup.Da, dup.Db = self.Da.copy(), self.Db.copy()
        dup.Dt, dup.Dp = self.Dt.copy(), self.Dp.copy()
        dup.Dr, dup.Drp = self.Dr.copy(), self.Drp.copy()
        dup.inserted, dup.op_count, dup.flushes = self.inserted, self.op_count, 0
        dup.instrument, dup.rays = False, []
        return dup

    def flush_all(self) -> None:
        for q in self.Dt.keys():
            if self._active(q):
                self._flush(q)

    def _flush_around(self, xs) -> None:
        for x in xs:
            if self.lo <= x <= self.hi:
                q = self.Dt.floor(x)
                self._flush(q)
                if q == x:
                    self._flush(self.Dt.prev(x))

    def _settle(self, xs) -> None:
        """Restore activity, canonical segments and triggers around touched points."""
        cand = sorted({x for x in xs if x is not None and self.lo <= x <= self.hi})
        self._flush_around(cand)
        for x in cand:
            if not self._is_bp(x):
                continue
            now = self._slope_active(x)
            if now and not self._active(x):
                self._add_active(x)
            elif not now and self._active(x):
                self._drop_active(x)
        for x in cand:
            if not self._active(x):
                self._merge(x)
        qs = set()
        for x in cand:
            q = self.Dt.floor(x)
            qs.add(q)
            if q is not None:
                qs.add(self.Dt.prev(q))
        for q in qs:
            self._refresh(q)

    # public operations

    def lookup(self, k: int) -> int:
        if not self.lo <= k <= self.hi:
            raise IndexError(k)
        self._flush(self.Dt.floor(k))
        return self._eval(k)

    def _add(self, i, j, c, gradient: bool) -> None:
        pts = [x for x in (i - 1, i, j, j + 1) if self.lo <= x <= self.hi]
        self._flush_around(pts)
        for x in pts:
            self._split(x)
        if gradient:
            self.Da.add_to_range(i, j, c)
            self.Dt.add_to_range(i, j, 2 * c)
            self.Dp.add_to_range(i, j, 2 * c)
            self.Dr.add_to_range(i, j, c)
            self.Drp.add_to_range(i, j, -c)
        else:
            self.Db.add_to_range(i, j, c)
        if i > self.lo:
            self._link(i - 1, self._val(i - 1), i, self._val(i))
        if j < self.hi:
            self._link(j, self._val(j), j + 1, self._val(j + 1))
        self._settle(pts)

    def add_const(self, i: int, j: int, c: int) -> None:
        self._begin(i, j)
        self._add(i, j, c, False)

    def add_gradient(self, i: int, j: int, g: int) -> None:
        self._begin(i, j)
        self._add(i, j, g, True)

    def left_wave(self, i: int, j: int, alpha: int) -> None:
        self._begin(i, j)
        if alpha < 0:
            raise ValueError("wave slope must be non-negative")
        if i == j:
            return
        pts = [x for x in (i, j, j + 1) if x <= self.hi]
        self._flush_around(pts)
        for x in pts:
            self._split(x)
        touched = list(pts)
        p = i
        done = False
        if self.Da.lookup(i) > alpha:
            p = self._explicit(i, alpha, 1, j, i, touched)
            done = p == j
        Dt = self.Dt
        while not done:
            qb = Dt.floor(j - 1)
            xw = Dt.ceil(p)
            if xw is None or xw >= qb:
                break
            if xw > p and self.Da.lookup(self.Da.prev(xw)) == alpha:
                # its own ray would flatten xw into a passive point
                p = self._explicit(xw, alpha, 1, j, i, touched)
                done = p == j
                continue
            hit = Dt.next_gt(xw - 1, 2 * alpha - 1)
            z = hit[0] if hit is not None and hit[0] < qb else qb
            if xw < z:
                self.Dr.min_range(xw, z - 1, alpha)
            if z == qb:
                p = qb
                break
            p = self._explicit(z, alpha, 1, j, i, touched)
            done = p == j
        if not done:
            # the mega-segment holding the segment that ends at j
            qb = Dt.floor(j - 1)
            self._flush(qb)
            cur = max(p, qb)
            while True:
                hit = self.Da.next_gt(cur - 1, alpha)
                if hit is None or hit[0] >= j:
                    break
                cur = self._explicit(hit[0], alpha, 1, j, i, touched)
                if cur == j:
                    break
        self._settle(touched)

    def right_wave(self, i: int, j: int, alpha: int) -> None:
        self._begin(i, j)
        if alpha < 0:
            raise ValueError("wave slope must be non-negative")
        if i == j:
            return
        pts = [x for x in (i - 1, i, j) if x >= self.lo]
        self._flush_around(pts)
        for x in pts:
            self._split(x)
        touched = list(pts)
        p = j
        done = False
        if self.Da.lookup(self.Da.prev(j)) < -alpha:
            p = self._explicit(j, alpha, -1, i, j, touched)
            done = p == i
        Dt = self.Dt
        while not done:
            qa = Dt.ceil(i + 1)
            xw = Dt.floor(p)
            if xw is None or xw <= qa:
                break
            if xw < p and self.Da.lookup(xw) == -alpha:
                p = self._explicit(xw, alpha, -1, i, j, touched)
                done = p == i
                continue
            hit = self.Dp.prev_lt(xw, -2 * alpha + 1)
            o = Dt.next(hit[0]) if hit is not None else None
            if o is None or o <= qa:
                o = qa
            if o < xw:
                self.Drp.min_range(o + 1, xw, alpha)
            if o == qa:
                p = qa
                break
            p = self._explicit(o, alpha, -1, i, j, touched)
            done = p == i
        if not done:
            # the mega-segment holding the segment that starts at i
            qa = Dt.ceil(i + 1)
            self._flush(Dt.prev(qa))
            cur = min(p, qa)
            while True:
                hit = self.Da.prev_lt(cur, -alpha)
                if hit is None or hit[0] < i:
                    break
                cur = self._explicit(self.Da.next(hit[0]), alpha, -1, i, j, touched)
                if cur == i:
                    break
        self._settle(touched)

    def _explicit(self, origin, alpha, d, end, start, touched) -> int:
        self._flush(self.Dt.floor(origin if d > 0 else origin - 1))
        if self.instrument:
            self.rays.append(RayEvent(origin, d, alpha, origin == start, self._active(origin)))
        swallow = self._swallow_right if d > 0 else self._swallow_left
        stop, t, removed, _ = self._shoot(origin, alpha, d, end, swallow)
        if self.instrument:
            ev = self.rays[-1]
            ev.removed, ev.stop = removed, stop
        touched.extend(t)
        self._settle(t)
        return stop

    def _swallow_right(self, w: int) -> None:
        if self._active(w):
            self._flush(w)
            self._drop_active(w)

    def _swallow_left(self, w: int) -> None:
        if self._active(w):
            self._flush(self.Dt.prev(w))
            self._drop_active(w)

    # inspection

    def pending(self) -> list[tuple[int, int, int]]:
        """``(q, rho, rho_r)`` per active point; ``SLOPE_INF`` marks none."""
        out = []
        for (q, r), (_, rr) in zip(self.Dr.items(), self.Drp.items()):
            out.append((q, r if r < _FINITE else SLOPE_INF, rr if rr < _FINITE else SLOPE_INF))
        return out

    def gammas(self) -> list[tuple[int, Fraction | None]]:
        acts = self.Dt.keys()
        out = []
        for q, nq in zip(acts, acts[1:] + [None]):
            out.append((q, None if nq is None else Fraction(self._val(nq) - self._val(q), nq - q)))
        return out

    def values(self) -> list[int]:
        """The true array, composed from stored segments and pending rays
        without mutating the engine."""
        vals = self._interp_values()
        lo = self.lo
        acts = self.pending()
        for (q, rho, _), (nq, _, rho_r) in zip(acts, acts[1:]):
            if rho < SLOPE_INF:
                vq = vals[q - lo]
                for x in range(q + 1, nq):
                    r = vq + rho * (x - q)
                    if r < vals[x - lo]:
                        vals[x - lo] = r
            if rho_r < SLOPE_INF:
                vn = vals[nq - lo]
                for x in range(q + 1, nq):
                    r = vn + rho_r * (nq - x)
                    if r < vals[x - lo]:
                        vals[x - lo] = r
        return vals

    def __len__(self):
        return len(self.Da)

    def dump(self) -> str:
        lines = [f"{x}, {y}, {a}" for x, y, a in self.breakpoints()]
        for (q, g), (_, rho, rho_r) in zip(self.gammas(), self.pending()):
            fmt = lambda v: "inf" if v >= SLOPE_INF else str(v)
            lines.append(f"active {q}, {g if g is not None else '-'}, {fmt(rho)}, {fmt(rho_r)}")
        return "\n".join(lines)
