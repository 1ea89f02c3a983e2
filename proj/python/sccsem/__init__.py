"""Python bindings for the sccsem argumentation library."""

import json

from ._core import (
    Error,
    Framework,
    LimitExceeded,
    brute_force,
    construct,
    extensions,
    families,
    grounded,
    is_extension,
    parse_apx,
    parse_tgf,
    random_framework,
    truncate,
)
from . import _core

__all__ = [
    "Error",
    "Framework",
    "LimitExceeded",
    "brute_force",
    "check",
    "construct",
    "extensions",
    "families",
    "grounded",
    "is_extension",
    "parse_apx",
    "parse_tgf",
    "random_framework",
    "truncate",
    "truncation_study",
]


def check(framework, criterion, semantics, other=None, relation="cap", unattacked=None):
    """Evaluate a criterion; returns the JSON report as a dict."""
    return json.loads(_core.check_json(framework, criterion, semantics, other, relation, unattacked))


def truncation_study(family, semantics, levels, track, params=None, k=3):
    """Credulous acceptance of `track` on truncations of a built-in family."""
    return json.loads(_core.truncation_study_json(family, params or {}, semantics, list(levels), list(track), k))
