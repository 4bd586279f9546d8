"""Enumeration budgets, overridable through the POSTLAB_BUDGET environment variable.

POSTLAB_BUDGET holds comma-separated ``field=value`` pairs, e.g.
``POSTLAB_BUDGET="brute_force_vars=18,oracle_edges=20"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Budgets:
    a_max: int = 4                  # max function arity in enumeration ops
    preserves_combos: int = 1 << 22  # |R|**arity tuple choices per preservation check
    enum_candidates: int = 1 << 17   # candidate functions in polymorphism enumeration
    closure_steps: int = 1 << 24     # composition attempts in clone closure
    brute_force_vars: int = 22       # csp_sat_value enumerates 2**n assignments
    monotonicity_bits: int = 20      # exhaustive monotonicity check up to 2**N masks
    oracle_edges: int = 24           # odd-factor subset oracle edge limit
    flat_threshold_terms: int = 1 << 18  # term limit for flat threshold circuits
    cq_aux_vars: int = 2             # existential variables in conjunctive-query search
    cq_max_atoms: int = 4            # atoms per conjunctive query
    cq_states: int = 200_000         # distinct CQ intersection states before UNKNOWN


def _from_env(base: Budgets) -> Budgets:
    raw = os.environ.get("POSTLAB_BUDGET", "").strip()
    if not raw:
        return base
    known = {f.name for f in fields(Budgets)}
    overrides = {}
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in known:
            raise ValueError(f"POSTLAB_BUDGET: unknown budget field {key!r}")
        overrides[key] = int(value)
    return replace(base, **overrides)


DEFAULT = _from_env(Budgets())


def budgets(override: Budgets | None = None) -> Budgets:
    """Return the effective budget set (the module default unless overridden)."""
    return DEFAULT if override is None else override
