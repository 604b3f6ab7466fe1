"""Exact dynamic time warping over run-length encoded strings."""

from .dtw import BlockParams, block_params, run, solve
from .oracle import block_dtw, dp_table, naive_dtw
from .rle import CostFn, RleString, parse_raw, parse_rle

__all__ = [
    "BlockParams",
    "CostFn",
    "RleString",
    "block_dtw",
    "block_params",
    "dp_table",
    "naive_dtw",
    "parse_raw",
    "parse_rle",
    "run",
    "solve",
]
