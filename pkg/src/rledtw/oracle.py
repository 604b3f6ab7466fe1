"""Reference algorithms used as ground truth: cell-by-cell DP, block-by-block
propagation, and literal evaluation of the range operations."""

from __future__ import annotations

import math

from .ops import ADD_CONST, ADD_GRADIENT, LEFT_WAVE, RIGHT_WAVE, RangeOp
from .rle import CostFn, RleString, expand, infinity


class SizeLimitExceeded(ValueError):
    pass


NAIVE_CELL_LIMIT = 50_000_000
BLOCK_WORK_LIMIT = 200_000_000


def _finite(value: int, inf: int):
    return math.inf if value >= inf else value


def dp_table(s: RleString, t: RleString, f: CostFn, limit: int = NAIVE_CELL_LIMIT) -> list[list[int]]:
    """Full (N+1) x (M+1) table of DTW prefix distances, INF on the borders."""
    n_len, m_len = s.length, t.length
    if n_len * m_len > limit:
        raise SizeLimitExceeded(f"{n_len}x{m_len} cells exceeds {limit}")
    inf = infinity(n_len, m_len, f.delta_max)
    xs, ys = expand(s), expand(t)
    rows = [[0] + [inf] * m_len]
    # one row of costs per distinct symbol of S
    cost_rows = {}
    for a in set(xs):
        cost_rows[a] = [0] + [f(a, b) for b in ys]
    prev = rows[0]
    for i in range(1, n_len + 1):
        cur = [inf] * (m_len + 1)
        crow = cost_rows[xs[i - 1]]
        left = inf
        for j in range(1, m_len + 1):
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if left < best:
                best = left
            left = best + crow[j]
            cur[j] = left
        rows.append(cur)
        prev = cur
    return rows


def naive_dtw(s: RleString, t: RleString, f: CostFn, limit: int = NAIVE_CELL_LIMIT):
    """Exact DTW by the textbook recurrence; ``math.inf`` if unreachable."""
    table = dp_table(s, t, f, limit)
    return _finite(table[-1][-1], infinity(s.length, t.length, f.delta_max))


def run_bounds(s: RleString) -> list[tuple[int, int]]:
    """1-based ``(first, last)`` coordinates of every run."""
    out = []
    pos = 0
    for _, length in s.runs:
        out.append((pos + 1, pos + length))
        pos += length
    return out


def block_dtw(s: RleString, t: RleString, f: CostFn, limit: int = BLOCK_WORK_LIMIT,
              stats: dict | None = None):
    """DTW in O(Nm + Mn): each block's last row and column from its first ones.

    If ``stats`` is given, ``stats["cells"]`` counts the boundary cells computed.

    Inside a block every cell is reached most cheaply along its diagonal from
    the block's input, so ``dist(x, y) = dist(x', y') + c * (x - x')``.
    """
    n_len, m_len = s.length, t.length
    if n_len * t.n + m_len * s.n > limit:
        raise SizeLimitExceeded("block propagation work exceeds limit")
    inf = infinity(n_len, m_len, f.delta_max)
    rows, cols = run_bounds(s), run_bounds(t)
    # bottom[y] = dist(i1 - 1, y) for the current block row
    bottom = [0] + [inf] * m_len
    for (i1, i2), (sa, _) in zip(rows, s.runs):
        h = i2 - i1 + 1
        # left[x - i1 + 1] = dist(x, j1 - 1) for x in [i1 - 1 .. i2]
        left = [bottom[0]] + [inf] * h
        new_bottom = [inf] * (m_len + 1)
        for (j1, j2), (tb, _) in zip(cols, t.runs):
            c = f(sa, tb)
            w = j2 - j1 + 1
            # first row of the block: dist(i1, y)
            top = [0] * w
            run = inf
            for k in range(w):
                y = j1 + k
                best = min(bottom[y - 1], bottom[y], run)
                if k == 0:
                    best = min(best, left[1])
                run = best + c
                top[k] = run
            # first column of the block: dist(x, j1)
            first = [0] * h
            run = inf
            for k in range(h):
                x = i1 + k
                best = min(left[k], left[k + 1], run)
                if k == 0:
                    best = min(best, bottom[j1])
                run = best + c
                first[k] = run

            def inp(x, y):
                # input vertex on the diagonal of (x, y)
                steps = min(x - i1, y - j1)
                x0, y0 = x - steps, y - steps
                base = top[y0 - j1] if x0 == i1 else first[x0 - i1]
                return base + c * steps

            for y in range(j1, j2 + 1):
                new_bottom[y] = inp(i2, y)
            new_left = [inf] * (h + 1)
            new_left[0] = bottom[j2]
            for x in range(i1, i2 + 1):
                new_left[x - i1 + 1] = inp(x, j2)
            left = new_left
            if stats is not None:
                stats["cells"] = stats.get("cells", 0) + 2 * (w + h)
        bottom = new_bottom
    return _finite(bottom[m_len], inf)


def brute_range_ops(a: list[int], op: RangeOp, lo: int = 1) -> list[int]:
    """Apply ``op`` literally to dense array ``a`` whose first index is ``lo``."""
    hi = lo + len(a) - 1
    i, j, c = op.i, op.j, op.c
    if i > j or i < lo or j > hi:
        raise IndexError(f"range [{i}, {j}] outside [{lo}, {hi}]")
    out = list(a)
    if op.kind == ADD_CONST:
        for k in range(i, j + 1):
            out[k - lo] += c
    elif op.kind == ADD_GRADIENT:
        for k in range(i, j + 1):
            out[k - lo] += k * c
    elif op.kind == LEFT_WAVE:
        for k in range(i, j + 1):
            out[k - lo] = min(a[t - lo] + (k - t) * c for t in range(i, k + 1))
    elif op.kind == RIGHT_WAVE:
        for k in range(i, j + 1):
            out[k - lo] = min(a[t - lo] + (t - k) * c for t in range(k, j + 1))
    return out


def wave_recurrence(a: list[int], i: int, j: int, alpha: int, lo: int = 1) -> list[int]:
    """Left wave by the running recurrence ``L(k) = min(A[k], L(k-1) + alpha)``."""
    hi = lo + len(a) - 1
    if i > j or i < lo or j > hi:
        raise IndexError(f"range [{i}, {j}] outside [{lo}, {hi}]")
    out = list(a)
    for k in range(i + 1, j + 1):
        cand = out[k - 1 - lo] + alpha
        if cand < out[k - lo]:
            out[k - lo] = cand
    return out


class BruteArray:
    """Dense model exposing the engine interface, for differential tests."""

    def __init__(self, lo: int, hi: int):
        if lo > hi:
            raise ValueError("lo > hi")
        self.lo, self.hi = lo, hi
        self.a = [0] * (hi - lo + 1)

    def lookup(self, k: int) -> int:
        if not self.lo <= k <= self.hi:
            raise IndexError(k)
        return self.a[k - self.lo]

    def values(self) -> list[int]:
        return list(self.a)

    def _apply(self, kind, i, j, c):
        self.a = brute_range_ops(self.a, RangeOp(kind, i, j, c), self.lo)

    def add_const(self, i, j, c):
        self._apply(ADD_CONST, i, j, c)

    def add_gradient(self, i, j, g):
        self._apply(ADD_GRADIENT, i, j, g)

    def left_wave(self, i, j, alpha):
        if alpha < 0:
            raise ValueError("negative wave slope")
        # the recurrence is O(j - i); equivalence with the literal form is tested
        self.a = wave_recurrence(self.a, i, j, alpha, self.lo)

    def right_wave(self, i, j, alpha):
        if alpha < 0:
            raise ValueError("negative wave slope")
        rev = self.a[::-1]
        lo, hi = self.lo, self.hi
        # mirror index k -> lo + hi - k
        rev = wave_recurrence(rev, lo + hi - j, lo + hi - i, alpha, lo)
        self.a = rev[::-1]
