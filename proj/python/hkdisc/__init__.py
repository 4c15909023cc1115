"""Discriminants of Horn-Kapranov parametrizations.

Matrices are lists of integer rows. Polynomials are dicts in the
``{"vars": [...], "terms": [{"c": "<int>", "e": [...]}]}`` layout.
"""

import json

from . import _hkdisc
from ._hkdisc import DomainError, ParseError

__all__ = [
    "DomainError",
    "ParseError",
    "colength",
    "defect",
    "degree",
    "diagram_check",
    "gauss_check",
    "gcd_maximal_minors",
    "group_product",
    "homogenize",
    "implicitize",
    "sparse_origin_multiplicity",
    "staircase_multiplicity",
    "transfer",
]


def _dump(poly):
    return poly if isinstance(poly, str) else json.dumps(poly)


def implicitize(c, seed=0):
    return json.loads(_hkdisc.implicitize(c, seed))


def degree(c, seed=0, trials=5):
    return json.loads(_hkdisc.degree(c, seed, trials))


def transfer(delta, m):
    return json.loads(_hkdisc.transfer(_dump(delta), m))


def group_product(f, m):
    return json.loads(_hkdisc.group_product(_dump(f), m))


def homogenize(delta, b):
    return json.loads(_hkdisc.homogenize(_dump(delta), b))


def gauss_check(c, delta, trials=20, seed=0):
    return _hkdisc.gauss_check(c, _dump(delta), trials, seed)


def gcd_maximal_minors(c):
    return int(_hkdisc.gcd_maximal_minors(c))


diagram_check = _hkdisc.diagram_check
defect = _hkdisc.defect
staircase_multiplicity = _hkdisc.staircase_multiplicity
colength = _hkdisc.colength
sparse_origin_multiplicity = _hkdisc.sparse_origin_multiplicity
