import pytest

from onehull.constants import MATCHED, UPPER_ONLY
from onehull.search import reproduce_table1, tabulate


def test_stored_witnesses_close_cells(seeded_store):
    '''
    Stored [14,3,7] and [14,6,5] codes meet the reference values without searching
    '''
    report = reproduce_table1((14, 14), (3, 3), budget=1, seed=0, store=seeded_store)
    assert report.cell(14, 3).status == MATCHED
    report = tabulate((14, 14), (3, 6), seeded_store)
    assert report.cell(14, 3).status == MATCHED
    assert report.cell(14, 6).status == MATCHED
    assert report.cell(14, 4).status == UPPER_ONLY
    assert report.counts()[MATCHED] == 2


def test_derived_children_fill_longer_cells(seeded_store):
    '''
    Duplicating the parity column of the [14,3,7] code gives a [16,3,8] witness
    '''
    report = reproduce_table1((14, 16), (3, 3), budget=1, seed=0, store=seeded_store)
    assert report.cell(14, 3).witness.d == 7
    witness = report.cell(16, 3).witness
    assert witness is not None
    assert witness.d == 8
    assert report.cell(16, 3).status == MATCHED


@pytest.mark.slow
def test_reproduce_first_columns(store):
    '''
    k = 1 and k = 2 at n = 14 are found by search and stored
    '''
    report = reproduce_table1((14, 14), (1, 2), budget=4096, seed=0, store=store)
    assert report.cell(14, 1).status == MATCHED
    assert report.cell(14, 2).status == MATCHED
    assert store.best_distance(14, 1) == 14
    assert store.best_distance(14, 2) == 8
    assert len(report.to_tsv().splitlines()) == 6


@pytest.mark.slow
def test_lower_bound_reproduction_rate():
    '''
    Witnesses reach at least 90% of the exact values for 14 <= n <= 20, k <= 6
    '''
    report = reproduce_table1((14, 20), (1, 6), budget=10 ** 5, seed=0)
    exact = [cell for cell in report if cell.reference is not None and cell.reference.exact]
    met = [cell for cell in exact if cell.witness is not None
           and cell.witness.d >= cell.reference.lower]
    assert len(exact) == 42
    assert len(met) >= 0.9 * len(exact)
    for cell in met:
        assert cell.witness.hull_dim == 1
        assert (cell.witness.n, cell.witness.k) == (cell.n, cell.k)
