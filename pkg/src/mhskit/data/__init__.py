"""
MHSKit Data Module

Schemas for the JSON fixtures, the fixture importer and the report converter.
"""

from mhskit.data.fixture_importer import FixtureImporter
from mhskit.data.report_converter import ReportConverter
from mhskit.data.schemas import detect_schema, schema_check

__all__ = ["FixtureImporter", "ReportConverter", "detect_schema", "schema_check"]
