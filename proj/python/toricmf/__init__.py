"""Defining binomials and Macaulayfication of simplicial codimension-two
semigroup rings.

Every function taking ``spec`` accepts either a problem document (str) or a
dict with keys ``a``, ``b``, ``c`` and optional ``torsion``.
"""

import json as _json

from . import _core
from ._core import InvalidInput, ResourceLimit, ext_gcd, hj_expand, kernel_of_pair_map, normalize_basis

__all__ = [
    "InvalidInput",
    "ResourceLimit",
    "analyze",
    "build_fan",
    "ext_gcd",
    "generators",
    "hj_expand",
    "in_lattice",
    "kernel_of_pair_map",
    "lattice_ltilde",
    "new_semigroup_generators",
    "normalize_basis",
    "parse_input",
    "semigroup_member",
]


def _text(spec):
    return spec if isinstance(spec, str) else _json.dumps(spec)


def analyze(spec, verify=False, max_degree=12, orders=()):
    """Full report as a dict; integers inside are decimal strings."""
    return _json.loads(_core.analyze(_text(spec), verify, max_degree, list(orders)))


def parse_input(spec):
    return _core.parse_input(_text(spec))


def lattice_ltilde(spec):
    return _core.lattice_ltilde(_text(spec))


def build_fan(spec):
    return _core.build_fan(_text(spec))


def generators(spec):
    return _core.generators(_text(spec))


def semigroup_member(spec, coords, tors=None):
    return _core.semigroup_member(_text(spec), list(coords), None if tors is None else list(tors))


def in_lattice(spec, w):
    return _core.in_lattice(_text(spec), list(w))


def new_semigroup_generators(spec):
    return _core.new_semigroup_generators(_text(spec))
