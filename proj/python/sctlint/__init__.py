"""Size-change termination checker for higher-order rewrite systems."""

import json
from pathlib import Path

from ._core import matrix_mul, summary, to_dot
from ._core import analyze_json as _analyze_json

__all__ = ["analyze", "analyze_file", "matrix_mul", "summary", "to_dot"]


def analyze(text, file="<string>", mode="idempotent", check_cc=True, strict_partial=False, lint=False):
    """Analyze source text and return the report as a dict."""
    return json.loads(_analyze_json(text, file, mode, check_cc, strict_partial, lint))


def analyze_file(path, **options):
    path = Path(path)
    return analyze(path.read_text(), str(path), **options)
