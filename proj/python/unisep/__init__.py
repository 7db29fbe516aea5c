"""Jordan types of unipotent elements of Sp_2l(2) on irreducible modules."""

import json

from . import _core
from ._core import BudgetExceeded, Error, ParseError, hesselink_label, jordan_type, preset_names

__version__ = _core.__version__

__all__ = [
    "BudgetExceeded",
    "Error",
    "ParseError",
    "Report",
    "chop",
    "classify",
    "hesselink_label",
    "jordan_type",
    "labels",
    "preset_names",
    "separate",
    "table3",
]


class Report(dict):
    """A decoded JSON report; ``ok`` is False when a hard assertion failed."""

    def __init__(self, raw):
        text, ok = raw
        super().__init__(json.loads(text))
        self.ok = ok


def classify(preset, word):
    return Report(_core.classify(preset, word))


def chop(preset, expr, seed=1, budget=32000):
    return Report(_core.chop(preset, expr, seed, budget))


def labels(preset, seed=1, saturation=20000, workers=1):
    return Report(_core.labels(preset, seed, saturation, workers))


def separate(preset, seed=1, saturation=20000, workers=1, budget=32000):
    return Report(_core.separate(preset, seed, saturation, workers, budget))


def table3(seed=1, budget=7216, workers=1):
    return Report(_core.table3(seed, budget, workers))
