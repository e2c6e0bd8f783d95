"""Smoke runs of the verification sweeps at reduced sizes."""

import pytest

from partition_asymptotics import run_suite
from partition_asymptotics.verify import (
    verify_asymptotics,
    verify_gf,
    verify_lemma1,
    verify_lemma2,
    verify_oracle,
    verify_thm1,
    verify_thm2,
)


def test_lemma1_small():
    result = verify_lemma1(m_max=60)
    assert result.ok and result.counterexample is None
    assert result.checked == 60


def test_lemma2_small(ctx80):
    result = verify_lemma2(m_max=60, ctx=ctx80)
    assert result.ok


def test_thm1_small(ctx80, table):
    result = verify_thm1(n_max=60, ctx=ctx80, table=table)
    assert result.ok
    assert result.checked == 60 * 13


def test_thm2_small(ctx80, table):
    assert verify_thm2(n_max=60, ctx=ctx80, table=table).ok


def test_gf_small(ctx60):
    assert verify_gf(order=40, ctx=ctx60).ok


def test_asymptotics(ctx80):
    assert verify_asymptotics(ctx80).ok


def test_oracle_small(table):
    result = verify_oracle(n_max=400, table=table)
    assert result.ok
    assert result.checked == 401


def test_run_suite_dispatch(ctx80):
    result = run_suite("oracle", n_max=100)
    assert result.suite == "oracle" and result.ok
    with pytest.raises(ValueError):
        run_suite("nonsense")
