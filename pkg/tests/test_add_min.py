import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rledtw.add_min import AddMinSet


def run_sequence(seed: int, length: int, span: int = 1000, flat_limit: int | None = None,
                 full_check: bool = False) -> int:
    """Random ops against a dict model, structural audit after each one.
    Returns the largest recursion depth seen."""
    rng = random.Random(seed)
    s = AddMinSet() if flat_limit is None else AddMinSet(flat_limit=flat_limit)
    m: dict[int, int] = {}
    deepest = 0
    for _ in range(length):
        r = rng.random()
        x = rng.randint(0, span)
        if r < 0.35:
            y = rng.randint(-30, 30)
            if x in m:
                with pytest.raises(KeyError):
                    s.insert(x, y)
            else:
                s.insert(x, y)
                m[x] = y
        elif r < 0.5:
            assert s.remove(x) == (x in m)
            m.pop(x, None)
        elif r < 0.65:
            j = rng.randint(x, span)
            c = rng.randint(-5, 5)
            s.add_to_range(x, j, c)
            for k in m:
                if x <= k <= j:
                    m[k] += c
        elif r < 0.8:
            j = rng.randint(x, span)
            c = rng.randint(-30, 30)
            s.min_range(x, j, c)
            for k in m:
                if x <= k <= j:
                    m[k] = min(m[k], c)
        elif r < 0.9 and m:
            k = rng.choice(sorted(m))
            c = rng.randint(-30, 30)
            s.assign(k, c)
            m[k] = c
        elif m:
            keys = sorted(m)
            idx = rng.randrange(len(keys))
            k = keys[idx]
            left = keys[idx - 1] + 1 if idx else k - 3
            right = keys[idx + 1] - 1 if idx + 1 < len(keys) else k + 3
            target = rng.randint(left, right)
            s.shift(k, target)
            m[target] = m.pop(k)
        assert s.lookup(x) == m.get(x)
        s.audit()
        if full_check:
            s.check()
        assert s.items() == sorted(m.items())
        deepest = max(deepest, s.depth())
        if m:
            # recursion shrinks by a factor 3/2 per level above the flat one
            assert s.depth() <= math.log(len(m), 1.5) + 2
    return deepest


def test_worked_examples():
    s = AddMinSet()
    s.insert(2, 8)
    s.min_range(1, 3, 5)
    assert s.lookup(2) == 5
    t = AddMinSet()
    for x, y in [(1, 4), (2, 9), (5, 3)]:
        t.insert(x, y)
    t.add_to_range(1, 5, 2)
    assert [t.lookup(x) for x in (1, 2, 5)] == [6, 11, 5]
    u = AddMinSet()
    for x, y in [(1, 4), (2, 9), (5, 3)]:
        u.insert(x, y)
    u.min_range(2, 5, 7)
    assert [u.lookup(x) for x in (1, 2, 5)] == [4, 7, 3]
    u.remove(2)
    assert u.lookup(2) is None


def test_full_range_add_and_noops():
    s = AddMinSet()
    s.insert(1, 4)
    s.insert(5, 3)
    s.add_to_range(1, 5, 2)
    assert s.items() == [(1, 6), (5, 5)]
    s.add_to_range(1, 5, 0)
    s.min_range(1, 5, 10 ** 40)
    assert s.items() == [(1, 6), (5, 5)]
    with pytest.raises(ValueError):
        s.add_to_range(5, 1, 1)
    with pytest.raises(ValueError):
        s.min_range(5, 1, 1)


def _filled(n, flat_limit=4):
    s = AddMinSet(flat_limit=flat_limit)
    for x in range(n):
        s.insert(10 * x, x)
    return s


def test_assign_keeps_partner():
    s = _filled(30)
    s.min_range(0, 1000, 5)
    before = s.items()
    s.assign(120, 40)
    after = dict(s.items())
    assert after[120] == 40
    assert all(after[x] == y for x, y in before if x != 120)
    s.assign(130, s.lookup(130))
    assert dict(s.items())[130] == after[130]
    with pytest.raises(KeyError):
        s.assign(7, 1)


def test_shift():
    s = _filled(30)
    s.min_range(0, 1000, 2)
    s.shift(100, 104)
    assert s.lookup(100) is None and s.lookup(104) == 2
    s.audit()
    with pytest.raises(ValueError):
        s.shift(104, 110)
    with pytest.raises(KeyError):
        s.shift(7, 8)
    # shifting every representative keeps all values
    for x in [k for k, _ in s.R.items()]:
        if x + 1 not in dict(s.items()):
            s.shift(x, x + 1)
    s.audit()
    assert sorted(v for _, v in s.items()) == sorted(min(x, 2) for x in range(30))


def test_remove_middle_of_three_run():
    # remove from every position of a long run; the structure must repair itself
    for victim in range(0, 200, 10):
        s = _filled(20)
        s.remove(victim)
        s.audit()
        s.check()
        assert [x for x, _ in s.items()] == [10 * x for x in range(20) if 10 * x != victim]


def test_copy_is_independent():
    s = _filled(25)
    dup = s.copy()
    s.min_range(0, 1000, -1)
    assert all(v == -1 for _, v in s.items())
    assert dup.items() == [(10 * x, x) for x in range(25)]


def test_min_all():
    s = _filled(40)
    assert s.min_all() == 0
    s.min_range(100, 150, -7)
    assert s.min_all() == -7
    assert AddMinSet().min_all() == AddMinSet().inf


def test_flat_limit_validation():
    with pytest.raises(ValueError):
        AddMinSet(flat_limit=1)


@pytest.mark.parametrize("seed", range(30))
def test_model_sequences_small_levels(seed):
    # a tiny flat limit forces deep recursion in short sequences
    deepest = run_sequence(seed, 300, span=200, flat_limit=4, full_check=True)
    assert deepest >= 3


@pytest.mark.parametrize("seed", range(20))
def test_model_sequences_default(seed):
    run_sequence(seed, 300)


def test_default_limit_recurses_beyond_flat_level():
    rng = random.Random(12)
    s, m = AddMinSet(), {}
    for x in rng.sample(range(10_000), 1500):
        y = rng.randint(-99, 99)
        s.insert(x, y)
        m[x] = y
    assert s.depth() >= 3
    for _ in range(150):
        i = rng.randint(0, 10_000)
        j = rng.randint(i, 10_000)
        c = rng.randint(-40, 40)
        if rng.random() < 0.5:
            s.min_range(i, j, c)
            m.update({k: min(v, c) for k, v in m.items() if i <= k <= j})
        else:
            s.add_to_range(i, j, c)
            m.update({k: v + c for k, v in m.items() if i <= k <= j})
        x = rng.choice(sorted(m))
        if rng.random() < 0.5:
            s.remove(x)
            del m[x]
        assert s.lookup(x) == m.get(x)
    s.audit()
    s.check()
    assert s.items() == sorted(m.items())


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 40), st.integers(-20, 20)), max_size=100))
def test_model_hypothesis(ops):
    s, m = AddMinSet(flat_limit=4), {}
    for kind, x, y in ops:
        if kind == 0 and x not in m:
            s.insert(x, y)
            m[x] = y
        elif kind == 1:
            assert s.remove(x) == (x in m)
            m.pop(x, None)
        elif kind == 2:
            s.min_range(x, x + 10, y)
            for k in m:
                if x <= k <= x + 10:
                    m[k] = min(m[k], y)
        else:
            s.add_to_range(x, x + 10, y)
            for k in m:
                if x <= k <= x + 10:
                    m[k] += y
        s.audit()
    assert s.items() == sorted(m.items())
