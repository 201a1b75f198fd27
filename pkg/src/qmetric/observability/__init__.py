"""Logging and report rendering."""
from .logger import JsonFormatter, configure_logging
from .reporting import persist_report, render_text, report_to_dict, report_to_json, write_csv

__all__ = [
    "JsonFormatter",
    "configure_logging",
    "persist_report",
    "render_text",
    "report_to_dict",
    "report_to_json",
    "write_csv",
]
