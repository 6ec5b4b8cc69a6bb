"""Generalized pseudo-quadratic forms over division rings.

Thin wrapper over the C++ core. Elements are passed as strings in the same
syntax as form files ("w+1", "(t^3+t)/(t^2+1)", "1 + 2i - 3/4k"); reports come
back as dicts decoded from the JSON the CLI prints.
"""

import json

from ._core import (
    SUITE_COUNT,
    Form,
    GpqError,
    GpqParseError,
    builtin_names,
)
from . import _core

__all__ = [
    "Form",
    "GpqError",
    "GpqParseError",
    "SUITE_COUNT",
    "builtin_names",
    "classify",
    "cover",
    "dominant_cover",
    "enumerate_space",
    "hull",
    "pair_info",
    "verify",
]


def pair_info(ring, sigma="id", eps="1"):
    return json.loads(_core.pair_info(ring, sigma, eps))


def enumerate_space(form, source="auto"):
    return json.loads(form.enumerate(source))


def cover(form, S, T=(), basis=None):
    return json.loads(form.cover(list(S), list(T), basis))


def dominant_cover(form, basis=None):
    return json.loads(form.dominant_cover(basis))


def classify(geometry_text):
    return json.loads(_core.classify(geometry_text))


def hull(geometry_text):
    return json.loads(_core.hull(geometry_text))


def verify(suite="all", seed=42):
    ids = range(1, SUITE_COUNT + 1) if suite == "all" else [int(suite)]
    return [_core.verify(i, seed) for i in ids]
