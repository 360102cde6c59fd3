"""Partitions, abacus combinatorics and Specht modules of symmetric groups over GF(p).

Partitions are passed and returned as lists of positive integers, largest first.
"""

import json

from ._core import (
    ConfigError,
    DomainError,
    Inconclusive,
    InternalError,
    ShapeError,
    SizeMismatch,
    SpechtkitError,
    abacus_positions,
    block_members,
    classify_rouquier_block,
    conjugate,
    dominates,
    is_p_regular,
    is_p_restricted,
    is_rouquier,
    ladder_numbers,
    lr_coefficient,
    mullineux,
    p_core,
    p_quotient,
    p_weight,
    parse,
    regularize,
    specht_dimension,
)
from . import _core

__version__ = "0.1.0"


def irreducible_specht(partition, p, max_dim=1500, seed=0):
    """Irreducibility verdict for S^partition over GF(p) as a dict."""
    return json.loads(_core.irreducible_specht_json(list(partition), p, max_dim, seed))


def verify(partition, p, max_dim=1500, seed=0):
    """Search for a signed permutation module having S^partition as a summand."""
    return json.loads(_core.verify_json(list(partition), p, max_dim, seed))


def pipeline(partition, p):
    """Specht filtration of the induced module for a Rouquier-block partition."""
    return json.loads(_core.pipeline_json(list(partition), p))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
