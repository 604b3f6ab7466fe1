import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rledtw.engine import SLOPE_INF, DomainError, LazyEngine, WarmupEngine
from rledtw.engine.audit import active_from_values, audit, check_structure
from rledtw.oracle import BruteArray

from _util import OPS, maximal_breakpoints, random_op

ENGINES = [WarmupEngine, LazyEngine]


def build(engine_cls, lo, hi, ops):
    e = engine_cls(lo, hi)
    for kind, i, j, c in ops:
        getattr(e, kind)(i, j, c)
    return e


def spike(engine_cls):
    """[0, 10, 10, 0] on [1..4]."""
    return build(engine_cls, 1, 4, [("add_const", 2, 3, 10)])


@pytest.mark.parametrize("cls", ENGINES)
class TestInterface:
    def test_new(self, cls):
        assert cls(1, 10).lookup(7) == 0
        assert cls(-5, 5).lookup(-5) == 0
        assert cls(1, 1).lookup(1) == 0
        with pytest.raises(DomainError):
            cls(3, 2)

    def test_domain_errors(self, cls):
        e = cls(1, 5)
        with pytest.raises(IndexError):
            e.lookup(0)
        with pytest.raises(DomainError):
            e.add_const(0, 2, 1)
        with pytest.raises(DomainError):
            e.add_gradient(3, 2, 1)
        with pytest.raises(DomainError):
            e.left_wave(1, 6, 1)
        with pytest.raises(ValueError):
            e.left_wave(1, 5, -1)
        with pytest.raises(ValueError):
            e.right_wave(1, 5, -1)

    def test_add_const(self, cls):
        e = build(cls, 1, 4, [("add_const", 2, 3, 5)])
        assert [e.lookup(k) for k in range(1, 5)] == [0, 5, 5, 0]
        assert e.values() == [0, 5, 5, 0]

    def test_adjacent_equal_adds_merge(self, cls):
        e = build(cls, 1, 8, [("add_const", 2, 3, 5)])
        before = len(e)
        e.add_const(4, 5, 5)
        assert len(e) == len(maximal_breakpoints(e.values(), 1)) + 1
        assert len(e) <= before

    def test_infinity_initialization(self, cls):
        inf = 10 ** 6
        e = build(cls, -4, 6, [("add_const", 1, 6, inf), ("add_const", -4, -1, inf)])
        assert e.lookup(0) == 0
        assert all(e.lookup(k) == inf for k in range(-4, 7) if k != 0)

    def test_add_gradient(self, cls):
        e = build(cls, 1, 4, [("add_gradient", 1, 3, 2)])
        assert e.values() == [2, 4, 6, 0]
        f = build(cls, -2, 2, [("add_gradient", -2, 0, 3)])
        assert [f.lookup(k) for k in (-2, -1, 0)] == [-6, -3, 0]

    def test_left_wave(self, cls):
        e = spike(cls)
        e.left_wave(1, 4, 3)
        assert e.lookup(3) == 6
        assert e.values() == [0, 3, 6, 0]

    def test_right_wave(self, cls):
        e = spike(cls)
        e.right_wave(1, 4, 3)
        assert e.values() == [0, 6, 3, 0]

    def test_gentle_wave_changes_nothing(self, cls):
        e = build(cls, 1, 9, [("add_gradient", 1, 9, 2), ("add_const", 4, 6, -3)])
        before = e.values()
        e.left_wave(1, 9, 5)
        assert e.values() == before

    def test_right_wave_without_steep_descent(self, cls):
        # every slope is at least -alpha, so cells to the right never help
        e = build(cls, 1, 9, [("add_gradient", 1, 9, -3), ("add_const", 5, 9, 2)])
        before = e.values()
        e.right_wave(1, 9, 3)
        assert e.values() == before
        f = build(cls, 1, 9, [("add_gradient", 2, 9, 1)])
        before = f.values()
        f.right_wave(1, 9, 0)
        assert f.values() == before

    def test_fractional_crossing(self, cls):
        # rise to 10 at 11, then fall with slope -1; the unit-slope ray from 10
        # crosses the falling segment at 15.5
        e = build(cls, 0, 20, [("add_gradient", 11, 20, -1), ("add_const", 11, 20, 21)])
        e.left_wave(10, 20, 1)
        ref = BruteArray(0, 20)
        ref.add_gradient(11, 20, -1)
        ref.add_const(11, 20, 21)
        ref.left_wave(10, 20, 1)
        assert e.values() == ref.values()
        if isinstance(e, LazyEngine):
            e.flush_all()
        xs = [x for x, _, _ in e.breakpoints()]
        assert 15 in xs and 16 in xs
        assert e.lookup(15) == 5 and e.lookup(16) == 5

    def test_single_cell_domain(self, cls):
        e = cls(3, 3)
        for kind in OPS:
            getattr(e, kind)(3, 3, 4)
        # +4, then +3*4, the waves have nothing to relax
        assert e.values() == [16]

    def test_dump_lines(self, cls):
        e = spike(cls)
        lines = e.dump().splitlines()
        assert lines[0] == "1, 0, 10"
        assert "2, 10, 0" in lines


def test_differential_against_brute():
    rng = random.Random(21)
    for _ in range(150):
        lo = rng.randint(-10, 5)
        hi = lo + rng.randint(0, 60)
        lazy, warm, ref = LazyEngine(lo, hi), WarmupEngine(lo, hi), BruteArray(lo, hi)
        # pending-ray sets with a tiny flat level recurse even on small domains
        deep = LazyEngine(lo, hi, flat_limit=4)
        for _ in range(rng.randint(1, 60)):
            op = random_op(rng, lo, hi)
            for e in (lazy, warm, ref, deep):
                getattr(e, op[0])(*op[1:])
            truth = ref.values()
            assert warm.values() == truth
            got = warm.breakpoints()
            want = maximal_breakpoints(truth, lo)
            if hi > lo:
                want = want + [(hi, truth[-1], None)]
            # the slope stored at hi has no successor and is not compared
            assert [p[:2] for p in got] == [p[:2] for p in want]
            assert [p[2] for p in got[:-1]] == [p[2] for p in want[:-1]]
            audit(lazy, truth)
            audit(deep, truth)
            check_structure(lazy)
            k = rng.randint(lo, hi)
            assert lazy.lookup(k) == truth[k - lo]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 25), st.lists(st.tuples(st.sampled_from(OPS), st.integers(0, 25),
                                              st.integers(0, 25), st.integers(-9, 9)), max_size=25))
def test_differential_hypothesis(n, raw):
    lazy, warm, ref = LazyEngine(0, n), WarmupEngine(0, n), BruteArray(0, n)
    for kind, a, b, c in raw:
        i, j = sorted((min(a, n), min(b, n)))
        if kind.endswith("wave"):
            c = abs(c)
        for e in (lazy, warm, ref):
            getattr(e, kind)(i, j, c)
        audit(lazy, ref.values())
        assert warm.values() == ref.values()


class TestFlush:
    def _lazy_with_pending(self):
        # a long falling run then a gentle left wave: the deferred ray is pending
        rng = random.Random(4)
        for _ in range(500):
            lazy, ref = LazyEngine(0, 30), BruteArray(0, 30)
            for _ in range(12):
                op = random_op(rng, 0, 30)
                getattr(lazy, op[0])(*op[1:])
                getattr(ref, op[0])(*op[1:])
            if any(r < SLOPE_INF or rr < SLOPE_INF for _, r, rr in lazy.pending()):
                return lazy, ref
        raise AssertionError("no pending ray produced")

    def test_flush_without_pending_is_noop(self):
        e = build(LazyEngine, 0, 10, [("add_const", 3, 6, 4)])
        before = (e.breakpoints(), e.active_points())
        for q in e.active_points():
            e.flush(q)
        assert (e.breakpoints(), e.active_points()) == before

    def test_flush_requires_active_point(self):
        e = build(LazyEngine, 0, 10, [("add_gradient", 0, 10, 1), ("add_const", 0, 4, 50)])
        passive = [x for x, _, _ in e.breakpoints() if x not in e.active_points()]
        assert passive
        with pytest.raises(KeyError):
            e.flush(passive[0])

    def test_flush_materializes_pending_rays(self):
        lazy, ref = self._lazy_with_pending()
        for q, r, rr in lazy.pending():
            if r < SLOPE_INF:
                lazy.flush(q)
                nq = lazy.Dt.next(q)
                for x in range(q, nq + 1):
                    assert lazy._eval(x) == ref.lookup(x)
                assert lazy.Dr.lookup(q) >= SLOPE_INF
        lazy.flush_all()
        assert all(r >= SLOPE_INF and rr >= SLOPE_INF for _, r, rr in lazy.pending())
        assert lazy._interp_values() == ref.values()

    def test_full_flush_matches_warmup_state(self):
        rng = random.Random(8)
        for _ in range(100):
            lo, hi = 0, rng.randint(1, 40)
            lazy, warm = LazyEngine(lo, hi), WarmupEngine(lo, hi)
            for _ in range(30):
                op = random_op(rng, lo, hi)
                getattr(lazy, op[0])(*op[1:])
                getattr(warm, op[0])(*op[1:])
            lazy.flush_all()
            assert [p[:2] for p in lazy.breakpoints()] == [p[:2] for p in warm.breakpoints()]

    def test_clone_is_independent(self):
        lazy, ref = self._lazy_with_pending()
        dup = lazy.clone()
        dup.flush_all()
        dup.add_const(0, 30, 7)
        assert lazy.values() == ref.values()
        assert dup.values() == [v + 7 for v in ref.values()]


def test_dump_golden():
    ops = [("add_const", 2, 5, 9), ("add_gradient", 4, 8, -2), ("left_wave", 0, 8, 2)]
    e = build(LazyEngine, 0, 8, ops)
    ref = BruteArray(0, 8)
    for kind, i, j, c in ops:
        getattr(ref, kind)(i, j, c)
    truth = ref.values()
    assert truth == [0, 0, 2, 4, 1, -1, -12, -14, -16]
    assert e.values() == truth
    lines = e.dump().splitlines()
    bps = maximal_breakpoints(truth, 0)
    assert lines[:len(bps)] == [f"{x}, {y}, {r}" for x, y, r in bps]
    assert lines == [
        "0, 0, 0",
        "1, 0, 2",
        "3, 4, -3",
        "4, 1, -2",
        "5, -1, -11",
        "6, -12, -2",
        "8, -16, -2",
        "active 0, 0, inf, inf",
        "active 1, 1/3, inf, inf",
        "active 4, -13/2, inf, inf",
        "active 6, -2, inf, inf",
        "active 8, -, inf, inf",
    ]


def test_ray_origins_and_long_rays():
    rng = random.Random(5)
    rays = 0
    for _ in range(300):
        lo, hi = 0, rng.randint(2, 40)
        warm, lazy = WarmupEngine(lo, hi), LazyEngine(lo, hi)
        warm.instrument = lazy.instrument = True
        for _ in range(40):
            op = random_op(rng, lo, hi, slope=8)
            getattr(warm, op[0])(*op[1:])
            getattr(lazy, op[0])(*op[1:])
        for ev in warm.rays + lazy.rays:
            assert ev.origin_is_boundary or ev.origin_active
        for ev in warm.rays:
            rays += 1
            # rays never create active points inside the range
            assert ev.created_active == []
            if ev.next_active is None:
                continue
            long_ray = ev.gamma >= ev.slope if ev.direction > 0 else ev.gamma <= -ev.slope
            if long_ray:
                assert ev.next_active_after in ("deleted", "passive")
            else:
                # short rays stay inside their mega-segment
                assert all((x - ev.next_active) * ev.direction < 0 for x in ev.removed)
    assert rays > 1000


def test_short_ray_can_flatten_next_active_point():
    # the ray is short (it does not reach the next active point), yet rounding
    # its crossing up lands exactly on that point, which then stops being active
    warm = build(WarmupEngine, 0, 4, [("add_gradient", 3, 4, 4), ("add_const", 3, 3, 8),
                                      ("add_gradient", 2, 3, 5)])
    warm.instrument = True
    warm.right_wave(0, 4, 3)
    ev = warm.rays[0]
    assert (ev.origin, ev.next_active, ev.slope) == (4, 2, 3)
    assert ev.gamma > -ev.slope  # short for a right wave
    assert ev.next_active_after == "passive"
    assert 2 not in active_from_values(warm.values(), 0)


def test_breakpoint_budget():
    rng = random.Random(13)
    ops = inserted = 0
    for _ in range(100):
        lo, hi = 0, rng.randint(1, 300)
        e = LazyEngine(lo, hi)
        for _ in range(100):
            op = random_op(rng, lo, hi)
            getattr(e, op[0])(*op[1:])
        ops += e.op_count
        inserted += e.inserted
    assert inserted <= 20 * ops
