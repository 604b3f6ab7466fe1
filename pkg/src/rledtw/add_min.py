"""Point set with range add, range chmin and exact lookups in worst-case polylog time.

Points are grouped into consecutive segments of one or two points. ``D`` holds
every point; the first point of each segment (its representative) is also
stored in a recursive instance ``R``. The value of a point is

    min(D[x], R[rep(x)])

so a range chmin over whole segments is a single recursive chmin on ``R``.
No two adjacent segments are both singletons, hence ``|R| <= ceil(2|D| / 3)``.
A flat level keeps exact values in ``D`` and no ``R``; that is where the
recursion bottoms out. A level turns recursive when it grows past
``flat_limit`` points and flat again only below half of that, so a size
hovering at the limit does not rebuild on every update.
"""

from __future__ import annotations

from typing import Optional

from .interval_add import IntervalAddSet

INF = 1 << 200
FLAT_LIMIT = 512


class AddMinSet:
    def __init__(self, inf: int = INF, flat_limit: int = FLAT_LIMIT):
        if flat_limit < 2:
            raise ValueError("flat_limit must be at least 2")
        self.inf = inf
        self.flat_limit = flat_limit
        self.min_recursive = max(2, flat_limit // 2)
        self.D = IntervalAddSet()
        self.R: Optional[AddMinSet] = None

    def __len__(self):
        return len(self.D)

    def __contains__(self, x):
        return self.D.lookup(x) is not None

    def copy(self) -> "AddMinSet":
        dup = AddMinSet(self.inf, self.flat_limit)
        dup.D = self.D.copy()
        dup.R = self.R.copy() if self.R is not None else None
        return dup

    # segment bookkeeping (derived from the keys of D and R)

    def _rep(self, x: int) -> int:
        return self.R.D.floor(x)

    def _partner(self, x: int) -> Optional[int]:
        """The other point of x's segment, if it has two."""
        rkeys = self.R.D
        if rkeys.lookup(x) is not None:
            nxt = self.D.next(x)
            if nxt is not None and rkeys.lookup(nxt) is None:
                return nxt
            return None
        return self.D.prev(x)

    def _seg_len(self, rep: int) -> int:
        nxt = self.D.next(rep)
        if nxt is not None and self.R.D.lookup(nxt) is None:
            return 2
        return 1

    def _normalize(self, rep: int) -> None:
        """Fold R's contribution into D for the segment of ``rep``."""
        r_val = self.R.lookup(rep)
        if r_val >= self.inf:
            return
        D = self.D
        for x in (rep, self._partner(rep)):
            if x is not None and D.lookup(x) > r_val:
                D.assign(x, r_val)
        self.R.assign(rep, self.inf)

    # public operations

    def lookup(self, x: int) -> Optional[int]:
        d = self.D.lookup(x)
        if d is None or self.R is None:
            return d
        r = self.R.lookup(self._rep(x))
        return r if r < d else d

    def assign(self, x: int, c: int) -> None:
        """Set the value of an existing point; its partner keeps its value."""
        if self.D.lookup(x) is None:
            raise KeyError(x)
        if self.R is None:
            self.D.assign(x, c)
            return
        rep = self._rep(x)
        partner = self._partner(x)
        r_val = self.R.lookup(rep)
        top = c
        if partner is not None:
            pv = self.lookup(partner)
            self.D.assign(partner, pv)
            if pv > top:
                top = pv
        self.D.assign(x, c)
        if r_val < top:
            self.R.assign(rep, self.inf)

    def shift(self, x: int, x_new: int) -> None:
        """Move point x to x_new, strictly between its neighbours, keeping y."""
        d = self.D.lookup(x)
        if d is None:
            raise KeyError(x)
        if x_new == x:
            return
        prev, nxt = self.D.prev(x), self.D.next(x)
        if (prev is not None and x_new <= prev) or (nxt is not None and x_new >= nxt):
            raise ValueError(f"shift target {x_new} leaves the gap around {x}")
        self.D.remove(x)
        self.D.insert(x_new, d)
        if self.R is not None and self.R.D.lookup(x) is not None:
            self.R.shift(x, x_new)

    def insert(self, x: int, y: int) -> None:
        D = self.D
        if D.lookup(x) is not None:
            raise KeyError(f"duplicate x {x}")
        if self.R is None:
            D.insert(x, y)
            if len(D) > self.flat_limit:
                self._build()
            return
        R = self.R
        p, s = D.prev(x), D.next(x)
        if p is None:
            # new leftmost point; s starts the first segment
            if self._seg_len(s) == 1:
                self._normalize(s)
                R.shift(s, x)
            else:
                R.insert(x, self.inf)
            D.insert(x, y)
            return
        rp = self._rep(p)
        if rp == p and self._seg_len(p) == 1:
            self._normalize(p)
            D.insert(x, y)
            return
        if rp != p:
            # p closes a full segment; s (if any) starts the next one
            if s is not None and self._seg_len(s) == 1:
                self._normalize(s)
                R.shift(s, x)
            else:
                R.insert(x, self.inf)
            D.insert(x, y)
            return
        # x falls inside the two-point segment [p, s]
        self._normalize(p)
        after = R.D.next(p)
        before = R.D.prev(p)
        if after is not None and self._seg_len(after) == 1:
            # [p, x] and [s, after]
            self._normalize(after)
            R.shift(after, s)
        elif before is not None and self._seg_len(before) == 1:
            # [before, p] and [x, s]
            self._normalize(before)
            R.shift(p, x)
        else:
            # [p, x] and [s]
            R.insert(s, self.inf)
        D.insert(x, y)

    def remove(self, x: int) -> bool:
        D = self.D
        if D.lookup(x) is None:
            return False
        if self.R is None:
            D.remove(x)
            return True
        if len(D) - 1 < self.min_recursive:
            self._flatten()
            D.remove(x)
            return True
        R = self.R
        rep = self._rep(x)
        partner = self._partner(x)
        if partner is None:
            D.remove(x)
            R.remove(x)
            return True
        self._normalize(rep)
        if rep == x:
            R.shift(x, partner)
            rep = partner
        D.remove(x)
        self._fix_singleton(rep)
        return True

    def _fix_singleton(self, u: int) -> None:
        R = self.R
        before, after = R.D.prev(u), R.D.next(u)
        if before is not None and self._seg_len(before) == 1:
            self._normalize(before)
            self._normalize(u)
            R.remove(u)
        elif after is not None and self._seg_len(after) == 1:
            self._normalize(after)
            self._normalize(u)
            R.remove(after)

    def _range_core(self, i: int, j: int, edge, bulk) -> None:
        """Apply ``edge`` to partially covered boundary segments pointwise and
        ``bulk(lo, hi)`` to the run of whole segments in between."""
        if i > j:
            raise ValueError(f"empty range [{i}, {j}]")
        D = self.D
        lo, hi = D.ceil(i), D.floor(j)
        if lo is None or hi is None or lo > hi:
            return
        if self.R is None:
            bulk(lo, hi)
            return
        if self.R.D.lookup(lo) is None:
            # lo is the second point of a segment starting before i
            edge(lo)
            lo = D.next(lo)
            if lo is None or lo > hi:
                return
        partner = self._partner(hi)
        if partner is not None and partner > hi:
            edge(hi)
            hi = D.prev(hi)
            if hi is None or lo > hi:
                return
        bulk(lo, hi)

    def add_to_range(self, i: int, j: int, c: int) -> None:
        if c == 0:
            if i > j:
                raise ValueError(f"empty range [{i}, {j}]")
            return

        def edge(x):
            self.assign(x, self.lookup(x) + c)

        def bulk(lo, hi):
            self.D.add_to_range(lo, hi, c)
            if self.R is not None:
                self.R.add_to_range(lo, hi, c)

        self._range_core(i, j, edge, bulk)

    def min_range(self, i: int, j: int, c: int) -> None:
        def edge(x):
            if self.lookup(x) > c:
                self.assign(x, c)

        def bulk(lo, hi):
            if self.R is not None:
                self.R.min_range(lo, hi, c)
                return
            for x, y in self.D.items(lo, hi):
                if y > c:
                    self.D.assign(x, c)

        self._range_core(i, j, edge, bulk)

    # level transitions

    def _build(self) -> None:
        """Switch a flat level to the recursive representation."""
        self.R = AddMinSet(self.inf, self.flat_limit)
        for k, x in enumerate(self.D.keys()):
            if k % 2 == 0:
                self.R.insert(x, self.inf)

    def _flatten(self) -> None:
        values = [(x, self.lookup(x)) for x in self.D.keys()]
        self.R = None
        for x, y in values:
            self.D.assign(x, y)

    # introspection

    def items(self) -> list[tuple[int, int]]:
        """All ``(x, value)`` pairs in x order, one linear pass per level."""
        pairs = list(self.D.items())
        if self.R is None:
            return pairs
        reps = dict(self.R.items())
        out = []
        cur = self.inf
        for x, y in pairs:
            r = reps.get(x)
            if r is not None:
                cur = r
            out.append((x, cur if cur < y else y))
        return out

    def min_all(self) -> int:
        """Smallest value over all points (``inf`` when empty)."""
        root = self.D.root
        best = root.mn if root is not None else self.inf
        if self.R is not None:
            r = self.R.min_all()
            if r < best:
                best = r
        return best

    def depth(self) -> int:
        return 1 + (self.R.depth() if self.R is not None else 0)

    def audit(self) -> None:
        """Segment structure at every level: representatives are points,
        the first point is one, segments hold one or two points and no two
        adjacent segments are singletons. Linear in the size of each level."""
        level = self
        while level.R is not None:
            keys = [x for x, _ in level.D.items()]
            assert len(keys) >= level.min_recursive, "recursive level too small"
            reps = [x for x, _ in level.R.D.items()]
            assert reps and reps[0] == keys[0], "first point must be a representative"
            pos = {x: k for k, x in enumerate(keys)}
            idx = [pos.get(x) for x in reps]
            assert None not in idx, "representative missing from D"
            lengths = [b - a for a, b in zip(idx, idx[1:] + [len(keys)])]
            assert all(n in (1, 2) for n in lengths), "segment length outside 1..2"
            for a, b in zip(lengths, lengths[1:]):
                assert a == 2 or b == 2, "adjacent singleton segments"
            assert len(reps) <= -(-2 * len(keys) // 3)
            level = level.R
        assert len(level.D) <= level.flat_limit, "flat level too large"

    def check(self) -> None:
        """Audit segment structure (no two adjacent singletons) recursively."""
        self.D.check()
        if self.R is None:
            assert len(self.D) <= self.flat_limit, "flat level too large"
            return
        assert len(self.D) >= self.min_recursive, "recursive level too small"
        keys = self.D.keys()
        reps = set(self.R.D.keys())
        assert reps <= set(keys), "representative missing from D"
        assert keys[0] in reps, "first point must be a representative"
        lengths = []
        for x in keys:
            if x in reps:
                lengths.append(1)
            else:
                lengths[-1] += 1
        assert all(n <= 2 for n in lengths), "segment longer than two"
        for a, b in zip(lengths, lengths[1:]):
            assert a == 2 or b == 2, "adjacent singleton segments"
        assert len(reps) <= -(-2 * len(keys) // 3)
        self.R.check()

    def __repr__(self):
        return f"AddMinSet({self.items()})"
