"""Exact structure constants and certificates for electrical Lie algebras."""

import json

from ._ela import ClosureDiverged, ParseError, UnsupportedType, bracket, suites
from . import _ela

__all__ = ["ClosureDiverged", "ParseError", "UnsupportedType", "bracket", "suites", "table", "dim", "verify", "rep"]


def table(family, rank):
    return json.loads(_ela.table_json(family, rank))


def dim(family, rank):
    return json.loads(_ela.dim_json(family, rank))


def verify(suite, family, rank):
    return json.loads(_ela.verify_json(suite, family, rank))


def rep(family, rank):
    return json.loads(_ela.rep_json(family, rank))
