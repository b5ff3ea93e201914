import pytest

from onehull.bounds import BoundInterval, exactly
from onehull.code import LinearCode, certify, hull_dimension, minimum_distance
from onehull.constants import (
    BUILDUP_EXHAUSTIVE,
    BUILDUP_RANDOM,
    DUPLICATE_PARITY,
    EXHAUSTIVE_SYSTEMATIC,
    LOWER_ONLY,
    MATCHED,
    OPEN,
    SHORTEN_DERIVE,
    UPPER_ONLY,
)
from onehull.constructions import build_up
from onehull.exceptions import InfeasibleSearchError, PreconditionError
from onehull.search import (
    SearchConfig,
    cell_status,
    check_feasible,
    derive_from_transforms,
    determine_d_one,
    exhaustive_nonexistence,
    find_code,
    get_deterministic_hash,
    _Seed,
    search,
    tabulate,
)

FIVE_TWO = ['11100', '00111']


def test_deterministic_hash():
    '''
    Same inputs, same value; num_bytes bounds the range
    '''
    assert get_deterministic_hash(1, 14, 3) == get_deterministic_hash(1, 14, 3)
    assert get_deterministic_hash(1, 14, 3) != get_deterministic_hash(2, 14, 3)
    assert get_deterministic_hash('x', num_bytes=2) < 2 ** 16


def test_config_validation(lcd_13_5):
    with pytest.raises(PreconditionError):
        SearchConfig(16, 8, 4, EXHAUSTIVE_SYSTEMATIC).validate()
    with pytest.raises(PreconditionError):
        SearchConfig(14, 3, 7, BUILDUP_RANDOM).validate()
    with pytest.raises(PreconditionError):
        SearchConfig(5, 2, 3, SHORTEN_DERIVE).validate()
    with pytest.raises(PreconditionError):
        SearchConfig(14, 3, 7, BUILDUP_EXHAUSTIVE, seeds=(lcd_13_5,)).validate()
    with pytest.raises(PreconditionError):
        SearchConfig(5, 5, 1, EXHAUSTIVE_SYSTEMATIC).validate()
    with pytest.raises(PreconditionError):
        SearchConfig(5, 2, 3, 'annealing').validate()
    SearchConfig(14, 3, 7, BUILDUP_RANDOM, seed=0).validate()


def test_check_feasible():
    check_feasible(14, 3, 8)
    with pytest.raises(InfeasibleSearchError):
        check_feasible(14, 3, 9)
    with pytest.raises(InfeasibleSearchError):
        search(SearchConfig(16, 8, 7, seed=1))


def test_exhaustive_finds_small_code():
    '''
    The [5,2,3] witness comes back certified with a one-dimensional hull
    '''
    record = find_code(SearchConfig(5, 2, 3, EXHAUSTIVE_SYSTEMATIC))
    assert record is not None
    assert (record.n, record.k, record.d, record.hull_dim) == (5, 2, 3, 1)
    assert record.provenance.startswith(EXHAUSTIVE_SYSTEMATIC)


def test_repetition_shortcut():
    record = find_code(SearchConfig(9, 1, 8, EXHAUSTIVE_SYSTEMATIC))
    assert record.generator.to_strings() == ['111111110']
    assert find_code(SearchConfig(9, 1, 9, EXHAUSTIVE_SYSTEMATIC)) is None


def test_exhaustive_nonexistence():
    '''
    No [6,3,3] or [7,4,3] code has a one-dimensional hull
    '''
    for n, k in ((6, 3), (7, 4)):
        certificate = exhaustive_nonexistence(n, k, 3)
        assert not certificate.exists
        assert certificate.scanned > 0
        assert 'result=nonexistent' in certificate.to_text()
    certificate = exhaustive_nonexistence(5, 2, 3)
    assert certificate.exists
    assert 'witness:' in certificate.to_text()
    with pytest.raises(PreconditionError):
        exhaustive_nonexistence(16, 8, 4)


@pytest.mark.parametrize('n, k, value, certified', [
    (5, 2, 3, False),
    (6, 3, 2, True),
    (7, 4, 2, True),
])
def test_determine_d_one(n, k, value, certified):
    result = determine_d_one(n, k)
    assert result.value == value
    assert result.witness.hull_dim == 1
    assert (result.certificate is not None) == certified
    if certified:
        assert result.certificate.d == value + 1


def test_buildup_exhaustive(lcd_12_2, lcd_13_5):
    '''
    Given seeds reach [14,3,7] and [14,6,5]
    '''
    record = find_code(SearchConfig(14, 3, 7, BUILDUP_EXHAUSTIVE, seeds=(lcd_12_2,)))
    assert (record.n, record.k, record.d, record.hull_dim) == (14, 3, 7, 1)
    record = find_code(SearchConfig(14, 6, 5, BUILDUP_EXHAUSTIVE, seeds=(lcd_13_5,)))
    assert (record.n, record.k, record.d, record.hull_dim) == (14, 6, 5, 1)



def test_seed_distance_below_target(lcd_12_2):
    '''
    A [12,2,6] seed can still give distance 7 through the two-column step, never through one column
    '''
    tagged = (12,) + tuple(lcd_12_2.generator.to_ints())
    assert minimum_distance(lcd_12_2) == 6
    assert _Seed.of(tagged, 14).reaches(7)
    assert not _Seed.of(tagged, 14).reaches(9)
    assert _Seed.of(tagged, 13).reaches(6)
    assert not _Seed.of(tagged, 13).reaches(7)


def test_buildup_random_two_column(lcd_12_2):
    '''
    Random x over a [12,2,6] seed finds a [14,3,7] code
    '''
    cfg = SearchConfig(14, 3, 7, BUILDUP_RANDOM, budget=4096, seed=0, seeds=(lcd_12_2,))
    record = find_code(cfg)
    assert record is not None
    assert (record.n, record.k, record.d, record.hull_dim) == (14, 3, 7, 1)

def test_buildup_random_is_deterministic(lcd_13_5):
    '''
    Fixed seed: same witness in-process and across worker processes
    '''
    cfg = SearchConfig(14, 6, 5, BUILDUP_RANDOM, budget=4096, seed=3, seeds=(lcd_13_5,))
    first = find_code(cfg)
    assert first is not None
    assert first.d == 5
    assert find_code(cfg).canonical_rows() == first.canonical_rows()
    parallel = find_code(cfg._replace(workers=2))
    assert parallel.canonical_rows() == first.canonical_rows()


def test_buildup_random_budget():
    '''
    No [14,6,6] code has a one-dimensional hull, so the budget runs out
    '''
    outcome = search(SearchConfig(14, 6, 6, BUILDUP_RANDOM, budget=512, seed=1))
    assert outcome.record is None
    assert outcome.exhausted
    assert outcome.scanned >= 512


def test_shorten_derive():
    '''
    Puncturing the zero column of a [6,2] seed gives the [5,2,3] code
    '''
    seed = LinearCode.from_strings(['011100', '000111'])
    cfg = SearchConfig(5, 2, 3, SHORTEN_DERIVE, budget=100, seeds=(seed,))
    record = find_code(cfg)
    assert record is not None
    assert record.provenance == 'seed>puncture@1'
    assert record.generator.to_strings() == FIVE_TWO


def test_derive_from_transforms(lcd_12_2, x_14_3):
    '''
    Simplex padding, duplicated parity and the odd-k extension of a [14,3,7] code
    '''
    record = certify(build_up(lcd_12_2, x_14_3), 'buildup')
    children = derive_from_transforms(record)
    shapes = {(child.n, child.k): child for child in children}
    assert set(shapes) == {(21, 3), (16, 3), (15, 3)}
    assert shapes[(21, 3)].d == 11
    assert shapes[(16, 3)].d == 8
    for child in children:
        assert child.hull_dim == 1
        assert child.provenance.startswith('buildup>')


def test_derive_from_transforms_odd_distance():
    record = certify(LinearCode.from_strings(FIVE_TWO), 'five')
    children = derive_from_transforms(record)
    assert len(children) == 1
    child, = children
    assert (child.n, child.k, child.d) == (7, 2, 4)
    assert child.provenance == f"five>{DUPLICATE_PARITY}"
    assert hull_dimension(LinearCode(child.generator)) == 1


def test_derive_from_transforms_lcd(lcd_12_2):
    assert derive_from_transforms(certify(lcd_12_2, 'lcd')) == []


def test_cell_status():
    record = certify(LinearCode.from_strings(FIVE_TWO), 'five')
    assert cell_status(exactly(3), 3, record) == MATCHED
    assert cell_status(exactly(3), 3, None) == UPPER_ONLY
    assert cell_status(exactly(3), 4, record) == LOWER_ONLY
    assert cell_status(BoundInterval(3, 4, ()), 4, record) == OPEN


def test_tabulate(store, lcd_12_2, x_14_3):
    '''
    Stored witnesses turn upper-only cells into matched ones
    '''
    report = tabulate((14, 14), (3, 3))
    assert report.cell(14, 3).status == UPPER_ONLY
    assert '7U' in report.to_text()
    assert report.to_tsv().splitlines()[0] == 'n\\k\t3'
    store.save(certify(build_up(lcd_12_2, x_14_3), 'buildup'))
    report = tabulate((14, 14), (3, 3), store)
    assert report.cell(14, 3).status == MATCHED
    assert report.counts()[MATCHED] == 1


def test_tabulate_open_cell():
    report = tabulate((29, 29), (15, 15))
    cell = report.cell(29, 15)
    assert cell.status == OPEN
    assert cell.value_text() == '6-7'
    assert len(report) == 1
