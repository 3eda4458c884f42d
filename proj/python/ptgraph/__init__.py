"""Exact interval representations, pointed and tolerance graph classes.

Graphs are dicts {"n": 4, "edges": [[0, 1], ...]}, digraphs use "arcs".
Representations are {"kind": "cmptg", "items": [{"lo": "0", "hi": "2"}, ...]}.
Numbers come back as exact fraction strings such as "69/10".
"""

import json
from fractions import Fraction

from . import _core
from ._core import InvalidInput

__all__ = [
    "InvalidInput",
    "augmented_matrix",
    "catalog",
    "catalog_names",
    "check_condition",
    "check_optimized",
    "cicd_to_labeling",
    "classify",
    "cmptg_to_umtg",
    "find_ordering",
    "optimized_to_cicd",
    "pcmptg_to_50mtg",
    "pcmptg_to_ucmptg",
    "proper_to_ucmptg",
    "realize",
    "recheck",
    "run_cli",
    "umtg_to_cmptg",
    "verify",
]


def _dump(obj):
    return json.dumps(obj, default=_number)


def _number(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _labels(values):
    return [_number(v) if isinstance(v, Fraction) else str(v) for v in values]


def classify(structure, cls, max_n=None, max_branches=None, budget_ms=None):
    """Verdict plus certificate for one class, as a dict."""
    return json.loads(_core.classify(_dump(structure), cls, max_n, max_branches, budget_ms))


def recheck(structure, certificate):
    """(ok, message) for a certificate produced by classify."""
    return _core.recheck(_dump(structure), _dump(certificate))


def realize(rep):
    return json.loads(_core.realize(_dump(rep)))


def verify(rep, structure):
    """(ok, missing, extra) comparing the realized structure with a target."""
    ok, missing, extra = _core.verify(_dump(rep), _dump(structure))
    return ok, [tuple(e) for e in missing], [tuple(e) for e in extra]


def cmptg_to_umtg(rep):
    return json.loads(_core.cmptg_to_umtg(_dump(rep)))


def umtg_to_cmptg(rep):
    return json.loads(_core.umtg_to_cmptg(_dump(rep)))


def pcmptg_to_ucmptg(rep):
    return json.loads(_core.pcmptg_to_ucmptg(_dump(rep)))


def pcmptg_to_50mtg(rep):
    return json.loads(_core.pcmptg_to_50mtg(_dump(rep)))


def proper_to_ucmptg(graph):
    return json.loads(_core.proper_to_ucmptg(_dump(graph)))


def optimized_to_cicd(digraph, labels):
    return json.loads(_core.optimized_to_cicd(_dump(digraph), _labels(labels)))


def cicd_to_labeling(rep):
    return [Fraction(v) for v in json.loads(_core.cicd_to_labeling(_dump(rep)))]


def check_condition(structure, kind, ordering):
    return json.loads(_core.check_condition(_dump(structure), kind, list(ordering)))


def find_ordering(structure, kind):
    return json.loads(_core.find_ordering(_dump(structure), kind))


def check_optimized(structure, labels):
    """(holds, violating triple or [])."""
    return _core.check_optimized(_dump(structure), _labels(labels))


def augmented_matrix(structure, ordering=None):
    return _core.augmented_matrix(_dump(structure), None if ordering is None else list(ordering))


def catalog_names():
    return _core.catalog_names()


def catalog(name, n=None, alpha=None):
    if isinstance(alpha, Fraction):
        alpha = _number(alpha)
    return json.loads(_core.catalog(name, n, alpha))


def run_cli(args, stdin=""):
    """(exit code, stdout, stderr) of one command-line invocation."""
    return _core.run_cli(list(args), stdin)
