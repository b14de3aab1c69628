"""Exact computations on the Chamanara surface and its Veech group.

Numbers come back as exact strings such as "15/2" or "1/4√2"; use
fractions.Fraction on the rational ones.
"""

import json
from fractions import Fraction

from . import _chamanara
from ._chamanara import DomainError, Error, ParseError, decompose_csv, decompose_svg, domain_svg, scan

__all__ = [
    "DomainError",
    "Error",
    "ParseError",
    "decompose",
    "decompose_csv",
    "decompose_svg",
    "domain_svg",
    "is_member",
    "moduli",
    "reduce",
    "scan",
    "surface",
    "verify",
    "word_matrix",
]


def decompose(n, depth=8):
    return json.loads(_chamanara.decompose_json(n, depth))


def moduli(n, depth=8):
    """Modulus of each cylinder, largest cylinder first."""
    return [Fraction(c["modulus"]) for c in decompose(n, depth)["cylinders"]]


def verify(depth=8):
    return json.loads(_chamanara.verify_json(depth))


def reduce(re, im):
    return json.loads(_chamanara.reduce_json(str(re), str(im)))


def is_member(a, b, c, d):
    return json.loads(_chamanara.member_json(str(a), str(b), str(c), str(d)))


def word_matrix(word):
    return json.loads(_chamanara.word_matrix_json(word))


def surface(depth=8):
    return json.loads(_chamanara.surface_json(depth))
