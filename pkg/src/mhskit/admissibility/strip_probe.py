"""
Strip Probe Module

A finite boundedness probe for the splitting part of a period map on a
vertical strip. The lifted period map is evaluated in float mode on a grid,
each value is read exactly and retracted to the real-split locus, and the
grading is reported in the S(W)(R) chart. Rows of the grid are heights on a
geometric ladder; a row's sup norm is the largest absolute chart coordinate
on it. The divergence flag is a heuristic: the top row sup must exceed the
configured multiple of the bottom row sup, with strictly increasing sups over
the top rows of the ladder.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from mhskit.admissibility.grid_runner import GridRunner
from mhskit.admissibility.local_model import LocalModel1D, lifted_structure
from mhskit.errors import NumericalOverflowError, StructureError
from mhskit.linalg.scalars import to_fraction
from mhskit.settings import get_options
from mhskit.splittings.grading import SplittingChart
from mhskit.splittings.retraction import get_retraction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerticalStrip:
    """The region a < Re z < b, Im z > c of the upper half-plane."""
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
        if not self.a < self.b:
            raise StructureError(f"Strip needs a < b, got a = {self.a}, b = {self.b}")
        if self.c <= 0:
            raise StructureError(f"Strip floor must be positive, got c = {self.c}")

    @property
    def width(self) -> Fraction:
        return self.b - self.a

    def contains(self, x: Any, y: Any) -> bool:
        x, y = to_fraction(x), to_fraction(y)
        return self.a < x < self.b and y > self.c

    def grid(self, nx: int, ny: int, height_factor: Any = 10) -> Tuple[List[float], List[float]]:
        """
        nx interior abscissas and ny heights from c to height_factor * c, geometrically spaced.
        """
        if nx < 1 or ny < 1:
            raise StructureError(f"Grid must be at least 1 x 1, got {nx} x {ny}")
        xs = [float(self.a + self.width * (i + 1) / (nx + 1)) for i in range(nx)]
        c, factor = float(self.c), float(height_factor)
        if ny == 1:
            return xs, [c]
        return xs, [c * factor ** (j / (ny - 1)) for j in range(ny)]


@dataclass
class ProbeRow:
    height: float
    abscissas: List[float]
    coordinates: List[List[float]] = field(default_factory=list)
    sup_norm: Optional[float] = None
    overflow: Optional[str] = None


@dataclass
class ProbeReport:
    retraction: str
    chart_dim: int
    rows: List[ProbeRow]
    divergence: bool
    ratio: Optional[float]
    threshold: float

    @property
    def sup_norms(self) -> List[Optional[float]]:
        return [row.sup_norm for row in self.rows]

    def to_frame(self) -> pd.DataFrame:
        """One line per height: sup norm and overflow message."""
        return pd.DataFrame({
            'height': [row.height for row in self.rows],
            'sup_norm': [row.sup_norm for row in self.rows],
            'overflow': [row.overflow for row in self.rows],
        })

    def points_frame(self) -> pd.DataFrame:
        """One line per grid point with its chart coordinates."""
        records = []
        for row in self.rows:
            for x, coordinates in zip(row.abscissas, row.coordinates):
                record = {'x': x, 'y': row.height}
                record.update({f"c{j}": value for j, value in enumerate(coordinates)})
                records.append(record)
        return pd.DataFrame.from_records(records)

    def to_dict(self, digits: int = 12) -> Dict[str, Any]:
        def rounded(value: Optional[float]) -> Optional[float]:
            if value is None or not math.isfinite(value):
                return value
            return float(f"{value:.{digits}g}")

        return {
            'retraction': self.retraction,
            'chart_dim': self.chart_dim,
            'divergence': self.divergence,
            'ratio': rounded(self.ratio),
            'threshold': self.threshold,
            'rows': [{'height': rounded(row.height), 'sup_norm': rounded(row.sup_norm),
                      **({'overflow': row.overflow} if row.overflow else {})} for row in self.rows],
        }


def divergence_flag(sups: Sequence[float], threshold: float, min_rows: int) -> Tuple[bool, Optional[float]]:
    """
    (flag, top/bottom ratio) for a ladder of row sups ordered by height.

    The ratio is infinite when the bottom sup is zero and the top one is not.
    """
    if not sups:
        return False, None
    bottom, top = sups[0], sups[-1]
    if bottom > 0:
        ratio = top / bottom
    else:
        ratio = math.inf if top > 0 else 1.0
    if len(sups) < min_rows:
        return False, ratio
    tail = sups[-min_rows:]
    increasing = all(a < b for a, b in zip(tail, tail[1:]))
    return increasing and ratio > threshold, ratio


def _chart_coordinates(model: LocalModel1D, chart: SplittingChart, retraction, x: float, y: float) -> List[float]:
    mhs = lifted_structure(model, complex(x, y))
    grading = retraction.retract(mhs).grading
    values = []
    for c in chart.coordinates(grading):
        try:
            values.append(float(c.re))
        except OverflowError as e:
            raise NumericalOverflowError(f"chart coordinate at z = {x}+{y}i exceeds float range: {e}")
    return values


def strip_splitting_probe(model: LocalModel1D, strip: VerticalStrip, grid: Tuple[int, int] = (20, 20),
                          retraction: str = "delta", **options: Any) -> ProbeReport:
    """
    Probe the S(W)(R) part of the retracted period map on a vertical strip.

    Options override the settings defaults: divergence_threshold, min_ladder_rows,
    height_factor and workers. Overflow on a row is recorded on that row and the
    row is left out of the divergence decision.
    """
    settings = get_options(**options)
    retractor = get_retraction(retraction)
    chart = SplittingChart(model.weight)
    xs, heights = strip.grid(grid[0], grid[1], settings['height_factor'])

    def evaluate(height: float) -> ProbeRow:
        row = ProbeRow(height, xs)
        try:
            row.coordinates = [_chart_coordinates(model, chart, retractor, x, height) for x in xs]
        except NumericalOverflowError as e:
            logger.warning("overflow at height %s: %s", height, e)
            row.coordinates, row.overflow = [], str(e)
            return row
        row.sup_norm = max((abs(v) for point in row.coordinates for v in point), default=0.0)
        return row

    rows = GridRunner(settings['workers']).run(evaluate, heights)
    finite = [row.sup_norm for row in rows if row.sup_norm is not None]
    threshold = float(settings['divergence_threshold'])
    flag, ratio = divergence_flag(finite, threshold, settings['min_ladder_rows'])
    logger.debug("strip probe: sups %s, divergence %s", finite, flag)
    return ProbeReport(retraction, chart.dim, rows, flag, ratio, threshold)
