"""DTW of run-length encoded strings by sweeping a frontier over run blocks.

The frontier ``F[-N..M]`` holds, for every diagonal ``d = y - x``, the DTW
distance of the one grid vertex on that diagonal lying on the boundary of
the processed region. Processing a block rewrites the diagonals it spans with
a constant number of range operations on an engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .engine import LazyEngine
from .oracle import run_bounds
from .rle import CostFn, RleString, check_value, infinity


@dataclass(frozen=True)
class BlockParams:
    i1: int
    i2: int
    j1: int
    j2: int
    c: int  # cost of the block's symbol pair

    @property
    def h(self) -> int:
        return self.i2 - self.i1 + 1

    @property
    def w(self) -> int:
        return self.j2 - self.j1 + 1

    @property
    def a(self) -> int:
        return self.j1 - self.i2

    @property
    def b(self) -> int:
        return self.j2 - self.i1

    @property
    def z(self) -> int:
        return self.j1 - self.i1

    @property
    def d1(self) -> int:
        return self.j1 - self.i1

    @property
    def d2(self) -> int:
        return self.j2 - self.i2


def block_params(s: RleString, t: RleString, f: CostFn, i: int, j: int) -> BlockParams:
    """Parameters of the block formed by run i of s and run j of t (1-based)."""
    if not 1 <= i <= s.n or not 1 <= j <= t.n:
        raise IndexError(f"block ({i}, {j}) outside {s.n} x {t.n}")
    i1 = sum(length for _, length in s.runs[: i - 1]) + 1
    j1 = sum(length for _, length in t.runs[: j - 1]) + 1
    return BlockParams(i1, i1 + s.runs[i - 1][1] - 1, j1, j1 + t.runs[j - 1][1] - 1,
                       f(s.runs[i - 1][0], t.runs[j - 1][0]))


class Frontier:
    """The frontier array plus counters for engine calls."""

    def __init__(self, n_len: int, m_len: int, inf: int, engine=LazyEngine):
        self.inf = inf
        self.engine = engine(-n_len, m_len)
        self.ops = 0
        self.blocks = 0
        self.block_ops_max = 0
        self.n_len, self.m_len = n_len, m_len
        if m_len >= 1:
            self._do("add_const", 1, m_len, inf)
        if n_len >= 1:
            self._do("add_const", -n_len, -1, inf)

    def _do(self, name, i, j, c):
        self.ops += 1
        getattr(self.engine, name)(i, j, c)

    def lookup(self, d: int) -> int:
        self.ops += 1
        return self.engine.lookup(d)

    def values(self) -> list[int]:
        return self.engine.values()


def phase1(fr: Frontier, p: BlockParams) -> None:
    """Turn the values entering the block into its first row and column."""
    a, b, z, c = p.a, p.b, p.z, p.c
    # z - 1 and z + 1 stay inside [-N..M] since i1, j1 >= 1
    below, here, after = fr.lookup(z - 1), fr.lookup(z), fr.lookup(z + 1)
    corner = c + min(below, here, after)
    fr._do("add_const", z, z, corner - c - here)
    fr._do("left_wave", z, b, c)
    fr._do("right_wave", a, z, c)
    fr._do("add_const", a, b, c)


def phase2(fr: Frontier, p: BlockParams) -> None:
    """Turn the block's first row and column into its last row and column."""
    a, b, c = p.a, p.b, p.c
    lo_d, hi_d = min(p.d1, p.d2), max(p.d1, p.d2)
    if a <= lo_d - 1:
        fr._do("add_const", a, lo_d - 1, -a * c)
        fr._do("add_gradient", a, lo_d - 1, c)
    # input and output on these diagonals are min(w, h) - 1 diagonal steps apart
    fr._do("add_const", lo_d, hi_d, (min(p.w, p.h) - 1) * c)
    if hi_d + 1 <= b:
        fr._do("add_const", hi_d + 1, b, b * c)
        fr._do("add_gradient", hi_d + 1, b, -c)


def block_order(n: int, m: int, order: str = "row"):
    if order == "row":
        return [(i, j) for i in range(1, n + 1) for j in range(1, m + 1)]
    if order == "col":
        return [(i, j) for j in range(1, m + 1) for i in range(1, n + 1)]
    raise ValueError(f"unknown block order {order!r}")


Observer = Callable[[str, BlockParams, Frontier], None]


def solve(s: RleString, t: RleString, f: CostFn, engine=LazyEngine, order: str = "row",
          observer: Optional[Observer] = None) -> Frontier:
    """Process every block; the finished frontier holds DTW(s, t) at M - N."""
    n_len, m_len = s.length, t.length
    inf = infinity(n_len, m_len, f.delta_max)
    fr = Frontier(n_len, m_len, inf, engine)
    rows, cols = run_bounds(s), run_bounds(t)
    for i, j in block_order(s.n, t.n, order):
        (i1, i2), (j1, j2) = rows[i - 1], cols[j - 1]
        p = BlockParams(i1, i2, j1, j2, f(s.runs[i - 1][0], t.runs[j - 1][0]))
        before = fr.ops
        phase1(fr, p)
        if observer is not None:
            observer("input", p, fr)
        phase2(fr, p)
        if observer is not None:
            observer("output", p, fr)
        fr.blocks += 1
        fr.block_ops_max = max(fr.block_ops_max, fr.ops - before)
    return fr


def run(s: RleString, t: RleString, f: CostFn, engine=LazyEngine, order: str = "row"):
    """Exact DTW distance; ``math.inf`` if the sentinel is reached."""
    fr = solve(s, t, f, engine, order)
    value = check_value(fr.engine.lookup(t.length - s.length))
    return math.inf if value >= fr.inf else value
