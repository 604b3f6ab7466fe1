"""Debug auditor for the lazy engine.

A cloned engine is flushed completely; its stored interpolation then equals
the true array and is compared with the lazy state of the original.
"""

from __future__ import annotations

from .lazy import _FINITE, LazyEngine, _enc


class AuditError(AssertionError):
    pass


def active_from_values(vals: list[int], lo: int) -> list[int]:
    """Domain ends plus every interior x where the slope strictly increases."""
    n = len(vals)
    out = [lo]
    for k in range(1, n - 1):
        if vals[k + 1] - vals[k] > vals[k] - vals[k - 1]:
            out.append(lo + k)
    if n > 1:
        out.append(lo + n - 1)
    return out


def _triggers(stored: list[int], lo: int, q: int, nq: int) -> tuple[int, int]:
    vq, vn = stored[q - lo], stored[nq - lo]
    span = nq - q
    g = _enc(vn - vq, span)
    if span == 1:
        return g, g
    left = max(g, _enc(stored[nq - 1 - lo] - vq, span - 1))
    right = min(g, _enc(vn - stored[q + 1 - lo], span - 1))
    return left, right


def audit(engine: LazyEngine, truth: list[int] | None = None) -> list[int]:
    """Check the lazy state of ``engine``; returns the true array.

    Raises AuditError on the first violated property.
    """
    lo = engine.lo
    stored = engine._interp_values()
    if engine.Dr.min_all() >= _FINITE and engine.Drp.min_all() >= _FINITE:
        full = stored  # nothing pending: flushing would not change anything
    else:
        flushed = engine.clone()
        flushed.flush_all()
        full = flushed._interp_values()
    composed = engine.values()
    if composed != full:
        raise AuditError("pending-ray composition differs from the flushed clone")
    if truth is not None and full != truth:
        raise AuditError("flushed clone differs from the reference array")

    acts = engine.active_points()
    if acts != active_from_values(full, lo):
        raise AuditError(f"active set {acts} differs from the true one")

    # pending slopes steeper than their mega-segment
    pend = engine.pending()
    for (q, rho, _), (nq, _, rho_r) in zip(pend, pend[1:]):
        # compare with the chord slope dv / dx without leaving the integers
        dv, dx = full[nq - lo] - full[q - lo], nq - q
        if rho < _FINITE and not rho * dx > dv:
            raise AuditError(f"pending left slope {rho} at {q} not above {dv}/{dx}")
        if rho_r < _FINITE and not rho_r * dx > -dv:
            raise AuditError(f"pending right slope {rho_r} at {nq} not above {-dv}/{dx}")

    trig = [(t, p) for (_, t), (_, p) in zip(engine.Dt.items(), engine.Dp.items())]
    for k, (q, nq) in enumerate(zip(acts, acts[1:])):
        if trig[k] != _triggers(stored, lo, q, nq):
            raise AuditError(f"stale triggers at {q}")
        # the true array is never below the chord of its mega-segment
        dv, dx = full[nq - lo] - full[q - lo], nq - q
        for x in range(q + 1, nq):
            if (full[x - lo] - full[q - lo]) * dx < dv * (x - q):
                raise AuditError(f"point {x} below the mega-segment [{q}, {nq}]")
    return full


def check_structure(engine) -> None:
    """Canonical breakpoints: ends present, integer slopes, adjacent slopes distinct."""
    bps = engine.breakpoints()
    if bps[0][0] != engine.lo or bps[-1][0] != engine.hi:
        raise AuditError("domain ends must be breakpoints")
    for (_, _, a), (_, _, b) in zip(bps, bps[1:-1]):
        if a == b:
            raise AuditError("adjacent segments share a slope")
    engine.Da.check()
    engine.Db.check()
