"""End-to-end analysis workflows."""

from qbcap.pipeline.pipeline import BatteryAnalysisPipeline, write_csv

__all__ = ["BatteryAnalysisPipeline", "write_csv"]
