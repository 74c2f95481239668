"""Exact-arithmetic K-stability engine for del Pezzo surfaces with cyclic
quotient singularities.

Thin wrapper over the compiled ``_kdelta`` extension. Rationals cross the
boundary as exact ``"p/q"`` strings; structured results cross as canonical
JSON text. This layer decodes JSON into dicts and offers
:class:`fractions.Fraction` helpers, so no precision is ever lost.
"""

from __future__ import annotations

import json as _json
from fractions import Fraction

try:
    from ._kdelta import (  # type: ignore[attr-defined]
        ComputationError,
        ValidationError,
        alpha_delta_bounds,
        catalog_flags,
        catalog_model_json,
        catalog_names,
        catalog_roles,
        classify,
        delta,
        delta_recipe,
        hilbert_series,
        hilbert_series_check,
        hj_evaluate,
        hj_expand,
        liu_excludes,
        recipe_canonical,
        recipe_model_json,
        solution_set,
        table1,
        table1_tsv,
        volume_formula,
        zariski,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _kdelta import (  # type: ignore[no-redef]
        ComputationError,
        ValidationError,
        alpha_delta_bounds,
        catalog_flags,
        catalog_model_json,
        catalog_names,
        catalog_roles,
        classify,
        delta,
        delta_recipe,
        hilbert_series,
        hilbert_series_check,
        hj_evaluate,
        hj_expand,
        liu_excludes,
        recipe_canonical,
        recipe_model_json,
        solution_set,
        table1,
        table1_tsv,
        volume_formula,
        zariski,
    )

__all__ = [
    "ComputationError",
    "ValidationError",
    "alpha_delta_bounds",
    "catalog_flags",
    "catalog_model_json",
    "catalog_names",
    "catalog_roles",
    "classify",
    "delta",
    "delta_recipe",
    "delta_report",
    "frac",
    "hilbert_series",
    "hilbert_series_check",
    "hj_evaluate",
    "hj_expand",
    "liu_excludes",
    "model",
    "recipe_canonical",
    "recipe_model_json",
    "solution_set",
    "table1",
    "table1_rows",
    "table1_tsv",
    "volume",
    "volume_formula",
    "zariski",
    "zariski_report",
]


def frac(s: str) -> Fraction:
    """Exact ``"p/q"`` string -> :class:`fractions.Fraction`."""
    return Fraction(s)


def volume(n: int, m: int, k: int) -> Fraction:
    """(-K)^2 of S_{n,m}^k as an exact Fraction."""
    return frac(volume_formula(n, m, k))


def model(name: str, role: str) -> dict:
    """Decoded model dump of one role of a catalogued configuration."""
    return _json.loads(catalog_model_json(name, role))


def delta_report(name: str, flag: str) -> dict:
    """Decoded delta report (chamber walk embedded) for a catalogued flag."""
    return _json.loads(delta(name, flag))


def zariski_report(name: str, flag: str) -> dict:
    """Decoded chamber-walk report for a catalogued flag."""
    return _json.loads(zariski(name, flag))


def table1_rows(jobs: int = 1) -> list[dict]:
    """Decoded classification table rows."""
    return _json.loads(table1(jobs))["rows"]
