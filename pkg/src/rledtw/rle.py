"""Run-length encoded strings, cost functions and the finite infinity sentinel."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence

# Values are plain Python ints (unbounded), so arithmetic never wraps.
# ``check_value`` enforces the documented magnitude bound when debugging.
VALUE_BITS = 127


class RleError(ValueError):
    """Malformed run-length input."""


class CostError(ValueError):
    """Invalid cost function or symbol outside its alphabet."""


class ValueOverflow(ArithmeticError):
    """A value left the signed 128-bit range."""


def check_value(v: int) -> int:
    if not -(1 << VALUE_BITS) <= v < (1 << VALUE_BITS):
        raise ValueOverflow(v)
    return v


@dataclass(frozen=True)
class RleString:
    """Canonical run-length encoding: runs of ``(symbol_id, length)``.

    ``alphabet`` maps symbol ids back to their printable labels.
    """

    runs: tuple[tuple[int, int], ...]
    alphabet: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.runs:
            raise RleError("empty string")
        prev = None
        for sym, length in self.runs:
            if length < 1:
                raise RleError(f"run length must be positive, got {length}")
            if sym < 0:
                raise RleError(f"negative symbol id {sym}")
            if sym == prev:
                raise RleError("adjacent runs share a symbol; use from_runs to canonicalize")
            prev = sym
        if self.length >= 1 << 64:
            raise RleError("expanded length does not fit in 64 bits")

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[int, int]], alphabet: Sequence[str] = ()) -> RleString:
        merged: list[list[int]] = []
        for sym, length in runs:
            if length < 1:
                raise RleError(f"run length must be positive, got {length}")
            if merged and merged[-1][0] == sym:
                merged[-1][1] += length
            else:
                merged.append([sym, length])
        return cls(tuple((s, n) for s, n in merged), tuple(alphabet))

    @classmethod
    def from_symbols(cls, symbols: Iterable[int], alphabet: Sequence[str] = ()) -> RleString:
        return cls.from_runs(((s, 1) for s in symbols), alphabet)

    @property
    def n(self) -> int:
        return len(self.runs)

    @property
    def length(self) -> int:
        return sum(length for _, length in self.runs)

    def label(self, sym: int) -> str:
        if sym < len(self.alphabet):
            return self.alphabet[sym]
        return str(sym)

    def render(self) -> str:
        return ",".join(f"{self.label(s)}:{n}" for s, n in self.runs)

    def __str__(self):
        return self.render()


class SymbolTable:
    """Assigns symbol ids in first-appearance order; shareable across strings."""

    def __init__(self, labels: Iterable[str] = ()):
        self.ids: dict[str, int] = {}
        for label in labels:
            self.intern(label)

    def intern(self, label: str) -> int:
        if label not in self.ids:
            self.ids[label] = len(self.ids)
        return self.ids[label]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.ids)


def parse_rle(text: str, table: SymbolTable | None = None) -> RleString:
    """Parse ``sym:count,sym:count,...`` into a canonical RleString."""
    if table is None:
        table = SymbolTable()
    text = text.strip()
    if not text:
        raise RleError("empty input")
    runs = []
    for token in text.split(","):
        label, sep, count = token.strip().rpartition(":")
        if not sep or not label:
            raise RleError(f"malformed token {token!r}")
        try:
            length = int(count)
        except ValueError:
            raise RleError(f"malformed count in {token!r}") from None
        if length < 1:
            raise RleError(f"count must be >= 1 in {token!r}")
        runs.append((table.intern(label), length))
    return RleString.from_runs(runs, table.labels)


def parse_raw(text: str, table: SymbolTable | None = None) -> RleString:
    """Each character is a run of length one, then canonicalized."""
    if table is None:
        table = SymbolTable()
    if not text:
        raise RleError("empty input")
    syms = [table.intern(ch) for ch in text]
    return RleString.from_symbols(syms, table.labels)


def expand(s: RleString, limit: int = 10_000_000) -> list[int]:
    if s.length > limit:
        raise RleError(f"expanded length {s.length} exceeds limit {limit}")
    out: list[int] = []
    for sym, length in s.runs:
        out.extend([sym] * length)
    return out


class CostFn:
    """Non-negative integer cost between symbol ids.

    Build with :meth:`discrete`, :meth:`absolute` or :meth:`from_matrix`.
    """

    def __init__(self, kind: str, matrix: tuple[tuple[int, ...], ...] | None = None,
                 max_symbol: int | None = None):
        self.kind = kind
        self.matrix = matrix
        self.max_symbol = max_symbol
        if kind == "matrix":
            if not matrix or any(len(row) != len(matrix) for row in matrix):
                raise CostError("cost matrix must be square and non-empty")
            if any(c < 0 for row in matrix for c in row):
                raise CostError("costs must be non-negative")
            self.delta_max = max(max(row) for row in matrix)
        elif kind == "discrete":
            self.delta_max = 1
        elif kind == "abs":
            if max_symbol is None:
                raise CostError("absolute cost needs max_symbol to bound delta_max")
            self.delta_max = max_symbol
        else:
            raise CostError(f"unknown cost kind {kind!r}")

    @classmethod
    def discrete(cls) -> CostFn:
        return cls("discrete")

    @classmethod
    def absolute(cls, max_symbol: int) -> CostFn:
        return cls("abs", max_symbol=max_symbol)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> CostFn:
        return cls("matrix", tuple(tuple(int(c) for c in row) for row in rows))

    def __call__(self, x: int, y: int) -> int:
        if self.kind == "discrete":
            return 0 if x == y else 1
        if self.kind == "abs":
            if not (0 <= x <= self.max_symbol and 0 <= y <= self.max_symbol):
                raise CostError(f"symbol out of range: ({x}, {y})")
            return abs(x - y)
        size = len(self.matrix)
        if not (0 <= x < size and 0 <= y < size):
            raise CostError(f"symbol out of range: ({x}, {y})")
        return self.matrix[x][y]

    def __repr__(self):
        if self.kind == "matrix":
            return f"CostFn.from_matrix({[list(r) for r in self.matrix]})"
        if self.kind == "abs":
            return f"CostFn.absolute({self.max_symbol})"
        return "CostFn.discrete()"


def cost(f: CostFn, x: int, y: int) -> int:
    return f(x, y)


def parse_cost_csv(text: str, table: SymbolTable) -> CostFn:
    """Read a square cost matrix whose first row and column hold symbol labels.

    Labels are interned into ``table`` so that ids line up with parsed strings.
    """
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if len(rows) < 2:
        raise CostError("cost CSV needs a header row and at least one data row")
    header = [h.strip() for h in rows[0][1:]]
    size = len(header)
    for label in header:
        table.intern(label)
    width = len(table.ids)
    matrix = [[0] * width for _ in range(width)]
    seen_rows = set()
    for row in rows[1:]:
        if len(row) != size + 1:
            raise CostError(f"row {row!r} has {len(row)} cells, expected {size + 1}")
        src = table.intern(row[0].strip())
        if src >= width:
            raise CostError(f"row label {row[0]!r} missing from header")
        seen_rows.add(src)
        for label, cell in zip(header, row[1:]):
            try:
                c = int(cell)
            except ValueError:
                raise CostError(f"non-integer cost {cell!r}") from None
            if c < 0:
                raise CostError(f"negative cost {c}")
            matrix[src][table.ids[label]] = c
    if len(seen_rows) != width:
        raise CostError("every header symbol needs a row")
    return CostFn.from_matrix(matrix)


def infinity(n_total: int, m_total: int, delta_max: int) -> int:
    """Sentinel strictly above any DTW value of strings with these lengths."""
    return (n_total + m_total + 1) * (delta_max + 1)
