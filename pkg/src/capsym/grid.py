"""Discrete boxes in R^1/R^2 with cell-centered fields, masks, and measure primitives."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "GridDomain",
    "Field",
    "Mask",
    "measure",
    "superlevel",
    "distribution_function",
    "truncate",
    "shift_plus",
    "interval_mask",
    "box_mask",
    "disk_mask",
    "mask_from_predicate",
    "is_subset",
    "tent_field",
    "save_field",
    "load_field",
    "save_mask",
    "load_mask",
    "field_to_csv",
    "write_columns",
]


@dataclass(frozen=True)
class GridDomain:
    """Axis-aligned box split into equal cells; every set is a union of whole cells.

    Cells are identified with their centers, so measures are exact multiples of
    ``cell_measure`` and set algebra is bit-exact.
    """

    shape: tuple[int, ...]
    spacing: tuple[float, ...]
    origin: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "shape", tuple(int(n) for n in self.shape))
        object.__setattr__(self, "spacing", tuple(float(h) for h in self.spacing))
        object.__setattr__(self, "origin", tuple(float(x) for x in self.origin))
        if len(self.shape) not in (1, 2):
            raise ValueError("only 1D and 2D grids are supported")
        if not (len(self.shape) == len(self.spacing) == len(self.origin)):
            raise ValueError("shape, spacing and origin must have equal length")
        if any(n < 1 for n in self.shape):
            raise ValueError("cell counts must be positive")
        if any(not np.isfinite(h) or h <= 0 for h in self.spacing):
            raise ValueError("spacings must be positive finite reals")
        if any(not np.isfinite(x) for x in self.origin):
            raise ValueError("origin must be finite")

    @classmethod
    def box(cls, lo, hi, shape) -> "GridDomain":
        """Domain covering the box [lo, hi] with the given cell counts."""
        lo = np.atleast_1d(np.asarray(lo, dtype=float))
        hi = np.atleast_1d(np.asarray(hi, dtype=float))
        shape = tuple(int(n) for n in np.atleast_1d(shape))
        if not (len(lo) == len(hi) == len(shape)):
            raise ValueError("lo, hi and shape must have equal length")
        if np.any(hi <= lo):
            raise ValueError("box must have positive extent")
        spacing = tuple((b - a) / n for a, b, n in zip(lo, hi, shape))
        return cls(shape=shape, spacing=spacing, origin=tuple(lo))

    @property
    def dim(self) -> int:
        return len(self.shape)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape))

    @property
    def cell_measure(self) -> float:
        return float(np.prod(self.spacing))

    @property
    def measure(self) -> float:
        return self.cell_measure * self.size

    def axis_centers(self, axis: int) -> np.ndarray:
        n = self.shape[axis]
        return self.origin[axis] + (np.arange(n) + 0.5) * self.spacing[axis]

    def center_grids(self) -> tuple[np.ndarray, ...]:
        """Cell-center coordinate arrays, one per axis, each of shape ``self.shape``."""
        axes = [self.axis_centers(a) for a in range(self.dim)]
        if self.dim == 1:
            return (axes[0],)
        return tuple(np.meshgrid(*axes, indexing="ij"))

    def descriptor(self) -> dict:
        return {"shape": list(self.shape), "spacing": list(self.spacing), "origin": list(self.origin)}


@dataclass(frozen=True, eq=False)
class Field:
    """One finite real value per cell, in fixed row-major cell order."""

    domain: GridDomain
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != self.domain.shape:
            raise ValueError(f"values shape {vals.shape} does not match domain shape {self.domain.shape}")
        if not np.all(np.isfinite(vals)):
            raise ValueError("fields store finite reals only")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(cls, domain: GridDomain, fn) -> "Field":
        """Sample ``fn`` at cell centers; ``fn`` receives one coordinate array per axis."""
        return cls(domain, np.asarray(fn(*domain.center_grids()), dtype=float))

    @classmethod
    def constant(cls, domain: GridDomain, value: float) -> "Field":
        return cls(domain, np.full(domain.shape, float(value)))

    def min(self) -> float:
        return float(self.values.min())

    def max(self) -> float:
        return float(self.values.max())


@dataclass(frozen=True, eq=False)
class Mask:
    """One boolean per cell, same cell order as Field."""

    domain: GridDomain
    members: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.members)
        if arr.dtype != np.bool_:
            arr = arr.astype(bool)
        if arr.shape != self.domain.shape:
            raise ValueError(f"members shape {arr.shape} does not match domain shape {self.domain.shape}")
        object.__setattr__(self, "members", arr)

    @classmethod
    def empty(cls, domain: GridDomain) -> "Mask":
        return cls(domain, np.zeros(domain.shape, dtype=bool))

    @classmethod
    def full(cls, domain: GridDomain) -> "Mask":
        return cls(domain, np.ones(domain.shape, dtype=bool))

    @property
    def count(self) -> int:
        return int(np.count_nonzero(self.members))


def measure(mask: Mask) -> float:
    """Lebesgue measure of a cell set: cell_measure times the number of true cells."""
    return mask.domain.cell_measure * mask.count


def superlevel(u: Field, t: float) -> Mask:
    """Cells whose stored value is strictly greater than ``t``."""
    return Mask(u.domain, u.values > t)


def distribution_function(u: Field, t: float) -> float:
    return measure(superlevel(u, t))


def truncate(u: Field, cap: float) -> Field:
    """Pointwise clamp to [-cap, cap]."""
    if cap < 0:
        raise ValueError("truncation level must be nonnegative")
    return Field(u.domain, np.clip(u.values, -cap, cap))


def shift_plus(u: Field, c: float) -> Field:
    """Pointwise max(u - c, 0)."""
    return Field(u.domain, np.maximum(u.values - c, 0.0))


def is_subset(a: Mask, b: Mask) -> bool:
    if a.domain != b.domain:
        raise ValueError("masks live on different domains")
    return bool(np.all(~a.members | b.members))


def mask_from_predicate(domain: GridDomain, predicate) -> Mask:
    """Cells whose centers satisfy ``predicate`` (vectorized over coordinate arrays)."""
    return Mask(domain, np.asarray(predicate(*domain.center_grids()), dtype=bool))


def interval_mask(domain: GridDomain, lo: float, hi: float, closed: bool = True) -> Mask:
    if domain.dim != 1:
        raise ValueError("interval_mask needs a 1D domain")
    x = domain.axis_centers(0)
    if closed:
        return Mask(domain, (x >= lo) & (x <= hi))
    return Mask(domain, (x > lo) & (x < hi))


def box_mask(domain: GridDomain, lo, hi, closed: bool = True) -> Mask:
    lo = np.atleast_1d(np.asarray(lo, dtype=float))
    hi = np.atleast_1d(np.asarray(hi, dtype=float))
    grids = domain.center_grids()
    out = np.ones(domain.shape, dtype=bool)
    for a, g in enumerate(grids):
        if closed:
            out &= (g >= lo[a]) & (g <= hi[a])
        else:
            out &= (g > lo[a]) & (g < hi[a])
    return Mask(domain, out)


def disk_mask(domain: GridDomain, radius: float, center=None, closed: bool = True) -> Mask:
    grids = domain.center_grids()
    if center is None:
        center = (0.0,) * domain.dim
    r2 = sum((g - c) ** 2 for g, c in zip(grids, center))
    if closed:
        return Mask(domain, r2 <= radius**2)
    return Mask(domain, r2 < radius**2)


def tent_field(domain: GridDomain) -> Field:
    """max(1 - |x|, 0), radially in 2D."""
    grids = domain.center_grids()
    r = np.sqrt(sum(g**2 for g in grids))
    return Field(domain, np.maximum(1.0 - r, 0.0))


# ---------------------------------------------------------------------------
# Serialization: a plain-text format with a single header line
#   dim  shape[0..dim)  spacing[0..dim)  origin[0..dim)
# followed by one value per line in row-major cell order.

def _header(domain: GridDomain) -> str:
    parts = [str(domain.dim)]
    parts += [str(n) for n in domain.shape]
    parts += [repr(h) for h in domain.spacing]
    parts += [repr(x) for x in domain.origin]
    return " ".join(parts)


def _parse_header(line: str) -> GridDomain:
    tok = line.split()
    dim = int(tok[0])
    if len(tok) != 1 + 3 * dim:
        raise ValueError("malformed header line")
    shape = tuple(int(t) for t in tok[1 : 1 + dim])
    spacing = tuple(float(t) for t in tok[1 + dim : 1 + 2 * dim])
    origin = tuple(float(t) for t in tok[1 + 2 * dim : 1 + 3 * dim])
    return GridDomain(shape=shape, spacing=spacing, origin=origin)


def save_field(u: Field, path) -> None:
    lines = [_header(u.domain)]
    lines += [repr(float(v)) for v in u.values.ravel()]
    Path(path).write_text("\n".join(lines) + "\n")


def load_field(path) -> Field:
    lines = Path(path).read_text().splitlines()
    domain = _parse_header(lines[0])
    vals = np.array([float(s) for s in lines[1 : 1 + domain.size]], dtype=float)
    if vals.size != domain.size:
        raise ValueError("value count does not match header shape")
    return Field(domain, vals.reshape(domain.shape))


def save_mask(m: Mask, path) -> None:
    lines = [_header(m.domain)]
    lines += ["1" if v else "0" for v in m.members.ravel()]
    Path(path).write_text("\n".join(lines) + "\n")


def load_mask(path) -> Mask:
    lines = Path(path).read_text().splitlines()
    domain = _parse_header(lines[0])
    vals = np.array([int(s) for s in lines[1 : 1 + domain.size]], dtype=bool)
    if vals.size != domain.size:
        raise ValueError("value count does not match header shape")
    return Mask(domain, vals.reshape(domain.shape))


def field_to_csv(u: Field, path) -> None:
    """Cell centers and values, one row per cell, for plotting."""
    grids = [g.ravel() for g in u.domain.center_grids()]
    header = ["x", "value"] if u.domain.dim == 1 else ["x", "y", "value"]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in zip(*grids, u.values.ravel()):
            writer.writerow([repr(float(v)) for v in row])


def write_columns(path, *columns, header: str | None = None) -> None:
    """Whitespace-separated column file (e.g. x, u(x), u*(x)) for any plotting tool."""
    cols = [np.asarray(c).ravel() for c in columns]
    n = len(cols[0])
    if any(len(c) != n for c in cols):
        raise ValueError("columns must have equal length")
    lines = []
    if header:
        lines.append("# " + header)
    for i in range(n):
        lines.append(" ".join(repr(float(c[i])) for c in cols))
    Path(path).write_text("\n".join(lines) + "\n")
