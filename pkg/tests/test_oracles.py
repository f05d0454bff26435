from mpmath import mp, mpf

import oracles
from reference import FROZEN


def test_frozen_table_matches_oracle():
    table = oracles.table()
    assert set(table) == set(FROZEN)
    for key, value in table.items():
        assert abs(value - mpf(FROZEN[key])) < mpf(10) ** -17, key


def test_oracle_working_precision():
    assert mp.dps >= 50
