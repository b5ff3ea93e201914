import pytest

from onehull.code import LinearCode, hull_dimension, is_lcd, minimum_distance
from onehull.exceptions import DimensionMismatchError, PreconditionError
from onehull.gf2core import BitMatrix, BitVector
from onehull.transforms import (
    CoordinateSet,
    MultiplicityVector,
    code_from_multiplicities,
    column_multiplicities,
    duplicate_column_prepend,
    hull_decompose,
    hull_support,
    multiplicity_bounds,
    pad_simplex,
    parity_column,
    prepend_column,
    puncture,
    remove_duplicate_column_pair,
    shorten,
    shorten_lcd_coordinate,
    simplex_matrix,
    strip_simplex,
)

FIVE_TWO = LinearCode.from_strings(['11100', '00111'])


def test_coordinate_set():
    '''
    CoordinateSet.of validates 1-based coordinates
    '''
    target = CoordinateSet.of([4, 1], 5)
    assert target.indices == (1, 4)
    assert target.zero_based == [0, 3]
    with pytest.raises(PreconditionError):
        CoordinateSet.of([1, 1], 5)
    with pytest.raises(PreconditionError):
        CoordinateSet.of([6], 5)
    with pytest.raises(DimensionMismatchError):
        puncture(FIVE_TWO, CoordinateSet.of([1], 6))


def test_puncture_hamming(hamming):
    punctured = puncture(hamming, [7])
    assert (punctured.n, punctured.k) == (6, 4)
    assert minimum_distance(punctured) == 2


def test_puncture_repairs_rank():
    '''
    Dependent rows after puncturing are dropped
    '''
    punctured = puncture(LinearCode(BitMatrix.identity(2)), [2])
    assert (punctured.n, punctured.k) == (1, 1)
    with pytest.raises(PreconditionError):
        puncture(FIVE_TWO, [1, 2, 3, 4, 5])


def test_shorten_hamming(hamming):
    shortened = shorten(hamming, [7])
    assert (shortened.n, shortened.k) == (6, 3)
    assert minimum_distance(shortened) == 3
    with pytest.raises(PreconditionError):
        shorten(LinearCode(BitMatrix.identity(2)), [1, 2])


def test_prepend_columns_keep_gram():
    '''
    A duplicated column pair leaves GG^T unchanged
    '''
    column = BitVector.from_string('10')
    prepended = prepend_column(FIVE_TWO, column)
    assert prepended.generator.to_strings() == ['111100', '000111']
    doubled = duplicate_column_prepend(FIVE_TWO, column)
    assert doubled.generator.to_strings() == ['1111100', '0000111']
    assert doubled.gram() == FIVE_TWO.gram()
    assert remove_duplicate_column_pair(doubled) == FIVE_TWO
    with pytest.raises(PreconditionError):
        remove_duplicate_column_pair(LinearCode(BitMatrix.identity(3)))
    with pytest.raises(DimensionMismatchError):
        prepend_column(FIVE_TWO, BitVector.from_string('101'))


def test_parity_column(hamming):
    '''
    One bit per row, set exactly on the odd-weight rows
    '''
    assert parity_column(hamming).to_string() == '1110'
    assert parity_column(LinearCode.from_strings(['1100', '0111'])).to_string() == '01'
    assert parity_column(FIVE_TWO).to_string() == '11'


def test_simplex_matrix():
    assert simplex_matrix(2).to_strings() == ['011', '101']
    assert simplex_matrix(3).shape == (3, 7)


def test_pad_simplex(hamming):
    '''
    Each simplex block adds 2^(k-1) to every nonzero weight
    '''
    padded = pad_simplex(hamming, 1)
    assert (padded.n, padded.k) == (22, 4)
    assert minimum_distance(padded) == 11
    assert hull_dimension(padded) == hull_dimension(hamming)
    assert pad_simplex(hamming, 0) == hamming
    with pytest.raises(PreconditionError):
        pad_simplex(FIVE_TWO, 1)
    with pytest.raises(PreconditionError):
        pad_simplex(hamming, -1)


def test_multiplicities(simplex3):
    vector = column_multiplicities(simplex3)
    assert vector == MultiplicityVector(3, (1,) * 7)
    assert vector.length == 7
    assert code_from_multiplicities(vector) == simplex3
    with pytest.raises(PreconditionError):
        column_multiplicities(LinearCode.from_strings(['10100', '01100']))
    with pytest.raises(PreconditionError):
        code_from_multiplicities(MultiplicityVector(3, (1, 0, 0, 0, 0, 0, 0)))
    with pytest.raises(DimensionMismatchError):
        code_from_multiplicities(MultiplicityVector(3, (1, 1, 1)))


def test_strip_simplex(simplex3):
    '''
    strip_simplex undoes pad_simplex when d > m 2^(k-1)
    '''
    padded = pad_simplex(simplex3, 1)
    assert strip_simplex(padded, 1).same_code(simplex3)
    with pytest.raises(PreconditionError):
        strip_simplex(simplex3, 1)
    with pytest.raises(PreconditionError):
        strip_simplex(padded, 3)


def test_multiplicity_bounds():
    assert multiplicity_bounds(7, 3, 4) == (1, 1)
    assert multiplicity_bounds(14, 3, 8) == (2, 2)
    with pytest.raises(PreconditionError):
        multiplicity_bounds(7, 2, 4)


def test_hull_decompose(hamming):
    '''
    C1 from the hull, C2 orthogonal to it
    '''
    first, second = hull_decompose(hamming, 1)
    assert (first.k, second.k) == (1, 3)
    for row in first.rows():
        assert hamming.contains(row)
        assert second.is_orthogonal_to(row)
    assert LinearCode(first.generator.vstack(second.generator)).same_code(hamming)
    with pytest.raises(PreconditionError):
        hull_decompose(hamming, 4)


def test_hull_support():
    assert hull_support(FIVE_TWO) == [1, 2, 4, 5]
    assert shorten_lcd_coordinate(FIVE_TWO) == 1
    assert is_lcd(shorten(FIVE_TWO, [shorten_lcd_coordinate(FIVE_TWO)]))
    with pytest.raises(PreconditionError):
        hull_support(LinearCode.from_strings(['1100', '0011']))
