"""Exact motivic series, module classification and polyomino counts."""

import json

from ._pointmod import (
    Motive,
    PointmodError,
    area_series,
    count_commuting_nilpotent_pairs,
    distinct_pair_contribution,
    enumerate_parallelogram,
    feit_fine_series,
    fixed_module_count,
    gl_class,
    gl_order,
    hilb_punctual_series,
    punctual_series,
    verify_stratification,
)
from ._pointmod import _classify_json

__all__ = [
    "Motive",
    "PointmodError",
    "area_series",
    "classify",
    "count_commuting_nilpotent_pairs",
    "distinct_pair_contribution",
    "enumerate_parallelogram",
    "feit_fine_series",
    "fixed_module_count",
    "gl_class",
    "gl_order",
    "hilb_punctual_series",
    "punctual_series",
    "verify_stratification",
]


def classify(module):
    """Classify a module given as a dict (or JSON string) in the module schema."""
    doc = module if isinstance(module, str) else json.dumps(module)
    return json.loads(_classify_json(doc))
