"""
Report Converter Module

This module provides functionality for converting computed results into
JSON-ready data and pandas DataFrames.
"""

import json
import logging
import math
from fractions import Fraction
from typing import Any, Dict, List

import pandas as pd

from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import GaussianRational, format_scalar

logger = logging.getLogger(__name__)


class ReportConverter:
    """
    Handles conversion of results to JSON and tabular formats.
    """

    def __init__(self, significant_digits: int = 12):
        """Initialize the report converter."""
        self.significant_digits = significant_digits

    def to_data(self, value: Any) -> Any:
        """
        Convert a result to plain JSON data.

        Objects with to_dict are asked for it; exact scalars become strings,
        floats are rounded to the configured significant digits.
        """
        if hasattr(value, "to_dict"):
            return self.to_data(value.to_dict())
        if isinstance(value, Matrix):
            return value.to_strings()
        if isinstance(value, (GaussianRational, Fraction)):
            return format_scalar(value)
        if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
            return value
        if isinstance(value, float):
            if not math.isfinite(value):
                return str(value)
            return float(f"{value:.{self.significant_digits}g}")
        if isinstance(value, dict):
            return {str(k): self.to_data(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [self.to_data(v) for v in value]
        raise TypeError(f"Cannot convert {type(value).__name__} to JSON data")

    def to_json(self, value: Any) -> str:
        """Sorted keys and two-space indentation so exact reports are byte-stable."""
        return json.dumps(self.to_data(value), sort_keys=True, indent=2)

    def records_to_dataframe(self, records: List[Dict[str, Any]]) -> pd.DataFrame:
        """
        Convert a list of report dictionaries to a DataFrame.

        Args:
            records: Dictionaries sharing their keys

        Returns:
            DataFrame with one row per record
        """
        if not records:
            return pd.DataFrame()
        return pd.DataFrame.from_records([self.to_data(r) for r in records])

    def dataframe_to_records(self, df: pd.DataFrame) -> List[Dict[str, Any]]:
        return [self.to_data(record) for record in df.to_dict(orient="records")]

    def hodge_classes_frame(self, classes: List[Any]) -> pd.DataFrame:
        """One row per Hodge class: its coordinates and its norm."""
        records = []
        for c in classes:
            record = {f"v{j}": x for j, x in enumerate(c.vector)}
            record['norm'] = format_scalar(c.norm)
            records.append(record)
        return pd.DataFrame.from_records(records)
