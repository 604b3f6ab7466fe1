"""Range-operation descriptors shared by the engines and the brute-force model."""

from __future__ import annotations

from dataclasses import dataclass

ADD_CONST = "add_const"
ADD_GRADIENT = "add_gradient"
LEFT_WAVE = "left_wave"
RIGHT_WAVE = "right_wave"

KINDS = (ADD_CONST, ADD_GRADIENT, LEFT_WAVE, RIGHT_WAVE)


@dataclass(frozen=True)
class RangeOp:
    kind: str
    i: int
    j: int
    c: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown range operation {self.kind!r}")

    def apply(self, engine) -> None:
        getattr(engine, self.kind)(self.i, self.j, self.c)

    def __str__(self):
        return f"{self.kind}({self.i}, {self.j}, {self.c})"
