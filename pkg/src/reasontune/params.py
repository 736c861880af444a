"""Four-dimensional inference-parameter space: grid, sampling, neighborhoods.

The space couples two continuous knobs (temperature, top_p) with two discrete
ones (max reasoning steps, planning interval). Continuous knobs are treated as
the discrete grid values everywhere; their continuous ranges act only as
validation bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product

from .errors import BudgetError, GridRangeError
from .seeding import rng_for

TEMPERATURE_BOUNDS = (0.1, 0.5)
TOP_P_BOUNDS = (0.85, 0.98)
ALLOWED_STEPS = (4, 6, 8, 10, 12)
ALLOWED_INTERVALS = (1, 2, 4)

DEFAULT_TEMPERATURES = (0.1, 0.2, 0.3, 0.4, 0.5)
DEFAULT_STEPS = ALLOWED_STEPS
DEFAULT_INTERVALS = ALLOWED_INTERVALS
DEFAULT_TOP_PS = (0.85, 0.90, 0.95, 0.98)

AXIS_NAMES = ("temperature", "max_steps", "planning_interval", "top_p")


@dataclass(frozen=True, slots=True, order=True)
class ParameterConfig:
    """One point in the search space.

    Ordering is lexicographic on (temperature, max_steps, planning_interval,
    top_p), which is the tie-break order used throughout the optimizer.
    """

    temperature: float
    max_steps: int
    planning_interval: int
    top_p: float

    def __post_init__(self) -> None:
        lo, hi = TEMPERATURE_BOUNDS
        if not lo <= self.temperature <= hi:
            raise GridRangeError(
                "temperature",
                f"temperature {self.temperature} outside [{lo}, {hi}]",
            )
        if self.max_steps not in ALLOWED_STEPS:
            raise GridRangeError(
                "max_steps", f"max_steps {self.max_steps} not in {ALLOWED_STEPS}"
            )
        if self.planning_interval not in ALLOWED_INTERVALS:
            raise GridRangeError(
                "planning_interval",
                f"planning_interval {self.planning_interval} not in {ALLOWED_INTERVALS}",
            )
        lo, hi = TOP_P_BOUNDS
        if not lo <= self.top_p <= hi:
            raise GridRangeError("top_p", f"top_p {self.top_p} outside [{lo}, {hi}]")
        if self.planning_interval > self.max_steps:
            raise GridRangeError(
                "planning_interval",
                f"planning_interval {self.planning_interval} exceeds max_steps {self.max_steps}",
            )

    @property
    def config_id(self) -> str:
        """Canonical short identifier, used for file names and seed keys."""
        return f"T{self.temperature:g}_S{self.max_steps}_I{self.planning_interval}_P{self.top_p:g}"

    def as_tuple(self) -> tuple[float, int, int, float]:
        return (self.temperature, self.max_steps, self.planning_interval, self.top_p)

    def to_dict(self) -> dict:
        return {
            "temperature": self.temperature,
            "max_steps": self.max_steps,
            "planning_interval": self.planning_interval,
            "top_p": self.top_p,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ParameterConfig":
        return cls(
            temperature=float(data["temperature"]),
            max_steps=int(data["max_steps"]),
            planning_interval=int(data["planning_interval"]),
            top_p=float(data["top_p"]),
        )


def _validated_axis(name: str, values, allowed: tuple | None, bounds: tuple | None):
    vals = tuple(sorted(set(values)))
    if not vals:
        raise GridRangeError(name, f"axis {name} is empty")
    for v in vals:
        if allowed is not None and v not in allowed:
            raise GridRangeError(name, f"{name} value {v} not in {allowed}")
        if bounds is not None and not bounds[0] <= v <= bounds[1]:
            raise GridRangeError(name, f"{name} value {v} outside {list(bounds)}")
    return vals


@dataclass(frozen=True, slots=True)
class ParameterGrid:
    """Ordered axis values defining a rectangular search grid.

    Axes are normalized at construction: deduplicated, sorted ascending,
    validated against the allowed ranges.
    """

    temperatures: tuple[float, ...] = DEFAULT_TEMPERATURES
    steps: tuple[int, ...] = DEFAULT_STEPS
    intervals: tuple[int, ...] = DEFAULT_INTERVALS
    top_ps: tuple[float, ...] = DEFAULT_TOP_PS

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "temperatures",
            _validated_axis("temperature", self.temperatures, None, TEMPERATURE_BOUNDS),
        )
        object.__setattr__(
            self, "steps", _validated_axis("max_steps", self.steps, ALLOWED_STEPS, None)
        )
        object.__setattr__(
            self,
            "intervals",
            _validated_axis("planning_interval", self.intervals, ALLOWED_INTERVALS, None),
        )
        object.__setattr__(
            self, "top_ps", _validated_axis("top_p", self.top_ps, None, TOP_P_BOUNDS)
        )

    @property
    def axes(self) -> tuple[tuple, tuple, tuple, tuple]:
        return (self.temperatures, self.steps, self.intervals, self.top_ps)

    @property
    def size(self) -> int:
        n = 1
        for axis in self.axes:
            n *= len(axis)
        return n

    def contains(self, config: ParameterConfig) -> bool:
        return (
            config.temperature in self.temperatures
            and config.max_steps in self.steps
            and config.planning_interval in self.intervals
            and config.top_p in self.top_ps
        )

    def to_dict(self) -> dict:
        return {
            "temperatures": list(self.temperatures),
            "steps": list(self.steps),
            "intervals": list(self.intervals),
            "top_ps": list(self.top_ps),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ParameterGrid":
        return cls(
            temperatures=tuple(data["temperatures"]),
            steps=tuple(data["steps"]),
            intervals=tuple(data["intervals"]),
            top_ps=tuple(data["top_ps"]),
        )


def enumerate_grid(grid: ParameterGrid) -> list[ParameterConfig]:
    """Full Cartesian product in lexicographic (T, S, I, P) order."""
    return [
        ParameterConfig(t, s, i, p)
        for t, s, i, p in product(grid.temperatures, grid.steps, grid.intervals, grid.top_ps)
    ]


def smart_sample(grid: ParameterGrid, k: int, seed: int) -> list[ParameterConfig]:
    """Draw k distinct configs deterministically, covering every axis value.

    Strategy: the first one or two samples are the extreme diagonal corners
    of the grid (all-minimum, then all-maximum), probing where monotone
    accuracy/cost/speed trade-offs peak. The remaining budget is filled
    Latin-hypercube style: per axis, a column of values containing every
    not-yet-covered value first and then cycled extras, shuffled with a
    per-axis seeded generator, then zipped into configs. Collisions are
    replaced by the lexicographically smallest unused grid configs.

    Guarantees: output is a subset of ``enumerate_grid(grid)`` with no
    duplicates and exactly k elements; whenever k is at least an axis's
    cardinality, every value on that axis appears in some sample; the result
    is a pure function of (grid, k, seed).
    """
    if k < 1:
        raise ValueError(f"sample budget k must be >= 1, got {k}")
    if k > grid.size:
        raise BudgetError(f"sample budget k={k} exceeds grid size {grid.size}")

    low = ParameterConfig(*(axis[0] for axis in grid.axes))
    high = ParameterConfig(*(axis[-1] for axis in grid.axes))
    corners = [low] if k == 1 or low == high else [low, high]
    corners = corners[:k]

    fill_n = k - len(corners)
    columns: list[list] = []
    for name, axis in zip(AXIS_NAMES, grid.axes):
        covered = {getattr(c, name) for c in corners}
        column = [v for v in axis if v not in covered]
        cursor = 0
        while len(column) < fill_n:
            column.append(axis[cursor % len(axis)])
            cursor += 1
        column = column[:fill_n]
        rng_for(seed, "smart_sample", name).shuffle(column)
        columns.append(column)

    candidates = corners + [
        ParameterConfig(*vals) for vals in zip(*columns)
    ] if fill_n else list(corners)

    out: list[ParameterConfig] = []
    seen: set[ParameterConfig] = set()
    for cand in candidates:
        if cand not in seen:
            seen.add(cand)
            out.append(cand)
    if len(out) < k:
        for cfg in enumerate_grid(grid):
            if len(out) == k:
                break
            if cfg not in seen:
                seen.add(cfg)
                out.append(cfg)
    return out


def neighborhood(center: ParameterConfig, grid: ParameterGrid) -> list[ParameterConfig]:
    """All configs one grid index away from center along exactly one axis."""
    if not grid.contains(center):
        raise ValueError(f"center {center.config_id} does not lie on the grid")
    neighbors: list[ParameterConfig] = []
    for name, axis in zip(AXIS_NAMES, grid.axes):
        idx = axis.index(getattr(center, name))
        for delta in (-1, 1):
            j = idx + delta
            if 0 <= j < len(axis):
                neighbors.append(replace(center, **{name: axis[j]}))
    deduped = list(dict.fromkeys(neighbors))
    return [cfg for cfg in deduped if cfg != center]
