"""Seeded random DTW instances for verification and benchmarks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .rle import CostFn, RleString


@dataclass
class Instance:
    s: RleString
    t: RleString
    f: CostFn

    def describe(self) -> str:
        return f"S={self.s.render()} T={self.t.render()} cost={self.f!r}"


def random_rle(rng: random.Random, alphabet: int, runs: int, max_run_len: int) -> RleString:
    labels = [chr(ord("a") + k) for k in range(alphabet)]
    out = []
    prev = None
    for _ in range(runs):
        sym = rng.randrange(alphabet)
        if sym == prev:
            # keep the requested run count by picking a different symbol
            sym = (sym + 1 + rng.randrange(alphabet - 1)) % alphabet
        out.append((sym, rng.randint(1, max_run_len)))
        prev = sym
    return RleString(tuple(out), tuple(labels))


def random_cost(rng: random.Random, alphabet: int, zero_diagonal: bool, max_cost: int = 9) -> CostFn:
    rows = [[rng.randint(0, max_cost) for _ in range(alphabet)] for _ in range(alphabet)]
    if zero_diagonal:
        for k in range(alphabet):
            rows[k][k] = 0
    return CostFn.from_matrix(rows)


def random_instance(rng: random.Random, max_runs: int = 30, max_run_len: int = 15,
                    max_alphabet: int = 5, zero_diagonal: bool | None = None) -> Instance:
    """Alphabet in [2..max_alphabet], run counts in [1..max_runs], run lengths
    in [1..max_run_len], costs in [0..9]; the zero diagonal is a coin flip
    unless fixed by the caller."""
    k = rng.randint(2, max_alphabet)
    s = random_rle(rng, k, rng.randint(1, max_runs), max_run_len)
    t = random_rle(rng, k, rng.randint(1, max_runs), max_run_len)
    if zero_diagonal is None:
        zero_diagonal = rng.random() < 0.5
    return Instance(s, t, random_cost(rng, k, zero_diagonal))
