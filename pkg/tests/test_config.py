"""Budget configuration and environment overrides."""

import pytest

from postlab.config import Budgets, _from_env, budgets


def test_defaults():
    b = Budgets()
    assert b.a_max == 4
    assert b.brute_force_vars == 22


def test_env_override(monkeypatch):
    monkeypatch.setenv("POSTLAB_BUDGET", "brute_force_vars=18, oracle_edges=20")
    b = _from_env(Budgets())
    assert b.brute_force_vars == 18 and b.oracle_edges == 20
    assert b.a_max == 4


def test_env_rejects_unknown_field(monkeypatch):
    monkeypatch.setenv("POSTLAB_BUDGET", "nope=3")
    with pytest.raises(ValueError):
        _from_env(Budgets())


def test_budgets_passthrough():
    custom = Budgets(a_max=3)
    assert budgets(custom) is custom
    assert budgets(None).a_max == 4
