"""Mapping between the relative-error domain (raw values) and the
absolute-error domain (log2 space with sign-separating factors).

Positive values map below a boundary hyperplane, negative values above it,
and exact zeros map to a reserved code value, so no separate sign bits are
stored.  Bounding the absolute error of the mapped value by ``b_a`` bounds
the pointwise relative error of the round-tripped value by ``b_r``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConfigError,
    DegenerateBlock,
    NonFiniteInput,
    NonRepresentableFactor,
    SubnormalMinimum,
)

__all__ = [
    "BlockStats",
    "TransformParams",
    "compute_block_stats",
    "make_transform_params",
    "derive_transform_params",
    "forward_map",
    "inverse_map",
    "zero_sub_floor_magnitudes",
    "float_floor",
]


def float_floor(dtype) -> float:
    """Smallest positive normal value of the element type."""
    return float(np.finfo(np.dtype(dtype)).tiny)


@dataclass(frozen=True)
class BlockStats:
    """Per-block magnitude statistics feeding the factor construction.

    ``abs_min``/``abs_max`` are None for an all-zero (degenerate) block,
    which signals the trivial-block encoding path.
    """

    abs_min: float | None
    abs_max: float | None
    has_zero: bool
    has_negative: bool
    count: int

    @property
    def is_degenerate(self) -> bool:
        return self.abs_min is None


@dataclass(frozen=True)
class TransformParams:
    """Factors, bounds, and thresholds of the relative<->absolute mapping.

    Only ``factor_pos``, ``factor_neg`` and ``b_r`` are serialized; every
    other field is re-derived through :func:`derive_transform_params`, so a
    reloaded block uses bit-identical thresholds.
    """

    factor_pos: float
    factor_neg: float
    epsilon0: float
    b_r: float
    b_a: float
    boundary: float
    zero_code_value: float
    zero_threshold: float
    # log2 of the factors; forward/inverse work in sum form to avoid
    # overflow/underflow of the products.
    lg_pos: float
    lg_neg: float


def compute_block_stats(block) -> BlockStats:
    """Scan a block for the statistics the transform needs.

    ``abs_min`` ignores exact zeros.  Raises :class:`NonFiniteInput` on any
    NaN or Inf.
    """
    arr = np.asarray(block)
    if arr.size == 0:
        raise DegenerateBlock("empty block")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput("block contains NaN or Inf")
    mags = np.abs(arr.astype(np.float64, copy=False))
    nonzero = mags[mags > 0.0]
    has_zero = bool(nonzero.size < mags.size)
    has_negative = bool(np.any(arr < 0))
    if nonzero.size == 0:
        return BlockStats(None, None, has_zero, has_negative, int(arr.size))
    return BlockStats(
        abs_min=float(nonzero.min()),
        abs_max=float(nonzero.max()),
        has_zero=has_zero,
        has_negative=has_negative,
        count=int(arr.size),
    )


def derive_transform_params(
    factor_pos: float, factor_neg: float, b_r: float, epsilon0: float
) -> TransformParams:
    """Rebuild the full parameter set from the three serialized fields.

    Used both when constructing params from block statistics and when
    loading a container, so all thresholds agree bit-for-bit.
    """
    b_a = float(np.log2(1.0 + b_r))
    lg_pos = float(np.log2(factor_pos))
    lg_neg = float(np.log2(factor_neg))
    zero_code_value = float(np.log2(epsilon0) + lg_pos)
    zero_threshold = zero_code_value + b_a
    boundary = float(lg_neg + np.log2(factor_pos - epsilon0) - b_a)
    return TransformParams(
        factor_pos=factor_pos,
        factor_neg=factor_neg,
        epsilon0=epsilon0,
        b_r=b_r,
        b_a=b_a,
        boundary=boundary,
        zero_code_value=zero_code_value,
        zero_threshold=zero_threshold,
        lg_pos=lg_pos,
        lg_neg=lg_neg,
    )


def make_transform_params(
    stats: BlockStats, b_r: float, epsilon0: float | None = None
) -> TransformParams:
    """Construct the per-block mapping factors from block statistics.

    ``epsilon0`` defaults to the 32-bit float floor; pass the floor of the
    actual element type.
    """
    if not (0.0 < b_r < 1.0):
        raise ConfigError(f"relative error bound must be in (0, 1), got {b_r}")
    if stats.is_degenerate:
        raise DegenerateBlock("all-zero block has no transform parameters")
    if epsilon0 is None:
        epsilon0 = float_floor(np.float32)
    abs_min = stats.abs_min
    abs_max = stats.abs_max
    if abs_min <= epsilon0:
        raise SubnormalMinimum(
            f"abs_min={abs_min!r} <= epsilon0={epsilon0!r}; reclassify "
            "sub-floor magnitudes as zeros and recompute stats"
        )
    factor_pos = abs_min
    factor_neg = ((abs_max + epsilon0) * factor_pos * (1.0 + b_r) ** 2) / (
        abs_min - epsilon0
    )
    if not np.isfinite(factor_neg):
        raise NonRepresentableFactor(
            f"factor_neg overflows for abs_min={abs_min!r}, abs_max={abs_max!r}"
        )
    return derive_transform_params(factor_pos, factor_neg, b_r, epsilon0)


def forward_map(x, p: TransformParams):
    """Map relative-domain values into the absolute domain.

    Positive values go through the positive factor, negative values through
    the negative factor (landing above the boundary), zeros to the reserved
    zero code value.  Accepts scalars or arrays.
    """
    arr = np.asarray(x, dtype=np.float64)
    mag = np.abs(arr)
    with np.errstate(divide="ignore"):
        lg = np.log2(mag)
    out = np.where(arr > 0.0, lg + p.lg_pos, lg + p.lg_neg)
    out = np.where(arr == 0.0, p.zero_code_value, out)
    if np.ndim(x) == 0:
        return float(out)
    return out


def inverse_map(v, p: TransformParams):
    """Map absolute-domain values back to the relative domain.

    Values at or below the zero threshold snap to exact 0; values at or
    below the boundary decode by the positive rule, above it by the
    negative rule.  Accepts scalars or arrays.
    """
    arr = np.asarray(v, dtype=np.float64)
    pos = np.exp2(arr - p.lg_pos)
    neg = -np.exp2(arr - p.lg_neg)
    out = np.where(arr > p.boundary, neg, pos)
    out = np.where(arr <= p.zero_threshold, 0.0, out)
    if np.ndim(v) == 0:
        return float(out)
    return out


def zero_sub_floor_magnitudes(data: np.ndarray, epsilon0: float) -> np.ndarray:
    """Reclassify magnitudes at or below the representational floor as
    exact zeros, guaranteeing ``abs_min > epsilon0`` afterwards."""
    out = np.array(data, dtype=np.float64, copy=True)
    out[np.abs(out) <= epsilon0] = 0.0
    return out
