"""Ordered point set with range add on y and directional threshold search.

Implemented as an AVL tree keyed by x. Every node carries a pending ``lazy``
increment owed to its children (delta representation) and the min/max of y
over its subtree, so all operations are O(log n) in the worst case.
"""

from __future__ import annotations

from typing import Iterator, Optional


class DuplicateKey(KeyError):
    pass


class _Node:
    __slots__ = ("key", "val", "lazy", "mn", "mx", "kmin", "kmax", "left", "right", "height")

    def __init__(self, key: int, val: int):
        self.key = key
        self.val = val
        self.lazy = 0
        self.mn = val
        self.mx = val
        self.kmin = key
        self.kmax = key
        self.left: Optional[_Node] = None
        self.right: Optional[_Node] = None
        self.height = 1


def _h(node):
    return node.height if node is not None else 0


def _apply(node, c):
    node.val += c
    node.mn += c
    node.mx += c
    node.lazy += c


def _push(node):
    lz = node.lazy
    if lz:
        if node.left is not None:
            _apply(node.left, lz)
        if node.right is not None:
            _apply(node.right, lz)
        node.lazy = 0


def _pull(node):
    left, right = node.left, node.right
    mn = mx = node.val
    if left is not None:
        if left.mn < mn:
            mn = left.mn
        if left.mx > mx:
            mx = left.mx
        node.kmin = left.kmin
        hl = left.height
    else:
        node.kmin = node.key
        hl = 0
    if right is not None:
        if right.mn < mn:
            mn = right.mn
        if right.mx > mx:
            mx = right.mx
        node.kmax = right.kmax
        hr = right.height
    else:
        node.kmax = node.key
        hr = 0
    node.mn = mn
    node.mx = mx
    node.height = (hl if hl > hr else hr) + 1


def _rot_right(node):
    pivot = node.left
    _push(node)
    _push(pivot)
    node.left = pivot.right
    pivot.right = node
    _pull(node)
    _pull(pivot)
    return pivot


def _rot_left(node):
    pivot = node.right
    _push(node)
    _push(pivot)
    node.right = pivot.left
    pivot.left = node
    _pull(node)
    _pull(pivot)
    return pivot


def _rebalance(node):
    _pull(node)
    left, right = node.left, node.right
    hl = left.height if left is not None else 0
    hr = right.height if right is not None else 0
    if hl - hr > 1:
        if _h(left.left) < _h(left.right):
            _push(node)
            node.left = _rot_left(left)
        return _rot_right(node)
    if hr - hl > 1:
        if _h(right.right) < _h(right.left):
            _push(node)
            node.right = _rot_right(right)
        return _rot_left(node)
    return node


def _copy(node):
    if node is None:
        return None
    dup = _Node.__new__(_Node)
    dup.key, dup.val, dup.lazy = node.key, node.val, node.lazy
    dup.mn, dup.mx, dup.kmin, dup.kmax = node.mn, node.mx, node.kmin, node.kmax
    dup.height = node.height
    dup.left = _copy(node.left)
    dup.right = _copy(node.right)
    return dup


def _insert(node, key, val):
    if node is None:
        return _Node(key, val)
    _push(node)
    if key < node.key:
        node.left = _insert(node.left, key, val)
    elif key > node.key:
        node.right = _insert(node.right, key, val)
    else:
        raise DuplicateKey(key)
    return _rebalance(node)


def _pop_min(node):
    """Detach the leftmost node; returns (new_subtree, detached)."""
    _push(node)
    if node.left is None:
        return node.right, node
    node.left, smallest = _pop_min(node.left)
    return _rebalance(node), smallest


def _remove(node, key):
    if node is None:
        raise KeyError(key)
    _push(node)
    if key < node.key:
        node.left = _remove(node.left, key)
    elif key > node.key:
        node.right = _remove(node.right, key)
    else:
        if node.left is None:
            return node.right
        if node.right is None:
            return node.left
        node.right, succ = _pop_min(node.right)
        succ.left, succ.right = node.left, node.right
        return _rebalance(succ)
    return _rebalance(node)


def _add_range(node, i, j, c):
    if node is None or node.kmax < i or node.kmin > j:
        return
    if i <= node.kmin and node.kmax <= j:
        _apply(node, c)
        return
    _push(node)
    if i <= node.key <= j:
        node.val += c
    _add_range(node.left, i, j, c)
    _add_range(node.right, i, j, c)
    _pull(node)


def _next_gt(node, acc, x, y):
    if node is None or node.kmax <= x or node.mx + acc <= y:
        return None
    inner = acc + node.lazy
    found = _next_gt(node.left, inner, x, y)
    if found is not None:
        return found
    if node.key > x and node.val + acc > y:
        return node.key, node.val + acc
    return _next_gt(node.right, inner, x, y)


def _prev_lt(node, acc, x, y):
    if node is None or node.kmin >= x or node.mn + acc >= y:
        return None
    inner = acc + node.lazy
    found = _prev_lt(node.right, inner, x, y)
    if found is not None:
        return found
    if node.key < x and node.val + acc < y:
        return node.key, node.val + acc
    return _prev_lt(node.left, inner, x, y)


class IntervalAddSet:
    """Points with distinct integer x supporting the six Interval-add operations
    plus ordered navigation (predecessor/successor) over x."""

    def __init__(self, points=()):
        self.root: Optional[_Node] = None
        self.size = 0
        for x, y in points:
            self.insert(x, y)

    def __len__(self):
        return self.size

    def __contains__(self, x):
        return self.lookup(x) is not None

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return self.items()

    def copy(self) -> "IntervalAddSet":
        dup = IntervalAddSet()
        dup.root = _copy(self.root)
        dup.size = self.size
        return dup

    def lookup(self, x: int) -> Optional[int]:
        node, acc = self.root, 0
        while node is not None:
            if x == node.key:
                return node.val + acc
            acc += node.lazy
            node = node.left if x < node.key else node.right
        return None

    def insert(self, x: int, y: int) -> None:
        self.root = _insert(self.root, x, y)
        self.size += 1

    def remove(self, x: int) -> bool:
        if self.lookup(x) is None:
            return False
        self.root = _remove(self.root, x)
        self.size -= 1
        return True

    def assign(self, x: int, y: int) -> None:
        """Set the y of an existing point (insert if absent)."""
        path = []
        node = self.root
        while node is not None and node.key != x:
            _push(node)
            path.append(node)
            node = node.left if x < node.key else node.right
        if node is None:
            self.insert(x, y)
            return
        delta = y - node.val
        if not delta:
            return
        _push(node)
        node.val = y
        _pull(node)
        for anc in reversed(path):
            _pull(anc)

    def add_to_range(self, i: int, j: int, c: int) -> None:
        if i > j:
            raise ValueError(f"empty range [{i}, {j}]")
        if c:
            _add_range(self.root, i, j, c)

    def next_gt(self, x: int, y: int) -> Optional[tuple[int, int]]:
        """Point with the smallest x' > x among points with y' > y."""
        return _next_gt(self.root, 0, x, y)

    def prev_lt(self, x: int, y: int) -> Optional[tuple[int, int]]:
        """Point with the largest x' < x among points with y' < y."""
        return _prev_lt(self.root, 0, x, y)

    # ordered navigation over x

    def floor(self, x: int) -> Optional[int]:
        """Largest key <= x."""
        node, best = self.root, None
        while node is not None:
            if node.key <= x:
                best = node.key
                if node.key == x:
                    break
                node = node.right
            else:
                node = node.left
        return best

    def ceil(self, x: int) -> Optional[int]:
        """Smallest key >= x."""
        node, best = self.root, None
        while node is not None:
            if node.key >= x:
                best = node.key
                if node.key == x:
                    break
                node = node.left
            else:
                node = node.right
        return best

    def prev(self, x: int) -> Optional[int]:
        return self.floor(x - 1)

    def next(self, x: int) -> Optional[int]:
        return self.ceil(x + 1)

    def first(self) -> Optional[int]:
        return self.root.kmin if self.root is not None else None

    def last(self) -> Optional[int]:
        return self.root.kmax if self.root is not None else None

    def items(self, lo: Optional[int] = None, hi: Optional[int] = None) -> Iterator[tuple[int, int]]:
        """In-order ``(x, y)`` pairs with lo <= x <= hi."""
        out: list[tuple[int, int]] = []
        if lo is None and hi is None:
            # plain in-order walk with an explicit stack
            stack = []
            node, acc = self.root, 0
            while stack or node is not None:
                while node is not None:
                    stack.append((node, acc))
                    acc += node.lazy
                    node = node.left
                node, acc = stack.pop()
                out.append((node.key, node.val + acc))
                acc += node.lazy
                node = node.right
            return iter(out)

        def walk(node, acc):
            if node is None:
                return
            if lo is not None and node.kmax < lo:
                return
            if hi is not None and node.kmin > hi:
                return
            inner = acc + node.lazy
            walk(node.left, inner)
            if (lo is None or node.key >= lo) and (hi is None or node.key <= hi):
                out.append((node.key, node.val + acc))
            walk(node.right, inner)

        walk(self.root, 0)
        return iter(out)

    def keys(self) -> list[int]:
        return [x for x, _ in self.items()]

    @property
    def height(self) -> int:
        return _h(self.root)

    def check(self) -> None:
        """Audit AVL balance, key order and subtree aggregates."""

        def walk(node, acc):
            if node is None:
                return 0, None, None, None, None
            inner = acc + node.lazy
            hl, lmn, lmx, lkmin, lkmax = walk(node.left, inner)
            hr, rmn, rmx, rkmin, rkmax = walk(node.right, inner)
            assert abs(hl - hr) <= 1, "AVL balance violated"
            assert node.height == max(hl, hr) + 1, "stale height"
            if lkmax is not None:
                assert lkmax < node.key
            if rkmin is not None:
                assert rkmin > node.key
            vals = [node.val + acc] + [v for v in (lmn, lmx, rmn, rmx) if v is not None]
            assert node.mn + acc == min(vals) and node.mx + acc == max(vals), "stale min/max"
            kmin = lkmin if lkmin is not None else node.key
            kmax = rkmax if rkmax is not None else node.key
            assert node.kmin == kmin and node.kmax == kmax, "stale key bounds"
            return (node.height, node.mn + acc, node.mx + acc, kmin, kmax)

        walk(self.root, 0)
        assert self.size == len(self.keys())

    def __repr__(self):
        return f"IntervalAddSet({list(self.items())})"
