import pytest

from onehull.code import (
    LinearCode,
    hull,
    hull_dimension,
    is_even_like,
    is_lcd,
    minimum_distance,
    weight_profile,
)
from onehull.constructions import (
    build_up,
    build_up_one,
    extend_hull_one,
    hull_one_from_lcd,
    hull_one_from_lcd_pair,
    hyperbolize,
    inverse_build_up,
    inverse_build_up_one,
    lcd_append_column,
    lcd_to_hull_one_column,
    orthonormalize,
    parity_pair_code,
    repetition_hull_one,
    trivial_hull_decompose,
)
from onehull.exceptions import DimensionMismatchError, PreconditionError
from onehull.gf2core import BitVector

FIVE_TWO = LinearCode.from_strings(['11100', '00111'])
# hull spanned by the all-ones vector
ONES_HULL = LinearCode.from_strings(['111111', '110000', '011000'])


def test_build_up_fourteen_three_seven(lcd_12_2, x_14_3):
    '''
    LCD [12,2,6] seed and x of weight 7 give a [14,3,7] code with one-dimensional hull
    '''
    built = build_up(lcd_12_2, x_14_3)
    assert (built.n, built.k) == (14, 3)
    assert built.generator.to_strings() == [
        '10100110010111',
        '11111111000000',
        '00000111111100',
    ]
    assert hull_dimension(built) == 1
    assert minimum_distance(built) == 7
    assert hull(built).basis.row(0) == built.generator.row(0)


def test_build_up_smallest_seed():
    built = build_up(LinearCode.from_strings(['1']), BitVector.from_string('1'))
    assert built.generator.to_strings() == ['101', '111']
    assert hull_dimension(built) == 1


def test_build_up_preconditions(lcd_12_2, x_14_3):
    with pytest.raises(PreconditionError):
        build_up(FIVE_TWO, BitVector.from_string('10000'))
    with pytest.raises(PreconditionError):
        build_up(lcd_12_2, BitVector.from_string('110000000000'))
    with pytest.raises(DimensionMismatchError):
        build_up(lcd_12_2, BitVector.from_string('1'))


def test_build_up_one_fourteen_six_five(lcd_13_5, x_14_6):
    '''
    LCD [13,5,5] seed and a dual vector give a [14,6,5] code with one-dimensional hull
    '''
    assert is_lcd(lcd_13_5)
    assert lcd_13_5.is_orthogonal_to(x_14_6)
    built = build_up_one(lcd_13_5, x_14_6)
    assert (built.n, built.k) == (14, 6)
    assert built.generator.row(0).to_string() == '11011010001011'
    assert hull_dimension(built) == 1
    assert minimum_distance(built) == 5


def test_build_up_one_preconditions(lcd_13_5):
    with pytest.raises(PreconditionError):
        build_up_one(lcd_13_5, lcd_13_5.generator.row(0))
    with pytest.raises(PreconditionError):
        build_up_one(LinearCode.from_strings(['100']), BitVector.from_string('011'))


def test_inverse_build_up(lcd_12_2, x_14_3):
    '''
    The recovered seed rebuilds a code with the same weight distribution
    '''
    built = build_up(lcd_12_2, x_14_3)
    seed, x = inverse_build_up(built)
    assert (seed.n, seed.k) == (12, 2)
    assert is_lcd(seed)
    assert x.weight() % 2 == 1
    rebuilt = build_up(seed, x)
    assert hull_dimension(rebuilt) == 1
    assert weight_profile(rebuilt).distribution == weight_profile(built).distribution


def test_inverse_build_up_preconditions():
    with pytest.raises(PreconditionError):
        inverse_build_up(LinearCode.from_strings(['11000', '00111']))
    with pytest.raises(PreconditionError):
        inverse_build_up(ONES_HULL)
    with pytest.raises(PreconditionError):
        inverse_build_up(LinearCode.from_strings(['1111']))
    with pytest.raises(PreconditionError):
        inverse_build_up(LinearCode.from_strings(['1100', '0011']))


def test_inverse_build_up_one(lcd_13_5, x_14_6):
    built = build_up_one(lcd_13_5, x_14_6)
    seed, x = inverse_build_up_one(built)
    assert (seed.n, seed.k) == (13, 5)
    assert is_lcd(seed)
    assert seed.is_orthogonal_to(x)
    assert x.weight() % 2 == 1
    rebuilt = build_up_one(seed, x)
    assert weight_profile(rebuilt).distribution == weight_profile(built).distribution


def test_orthonormalize(lcd_13_5, lcd_12_2):
    '''
    Odd-like LCD codes get an orthonormal basis of the same code
    '''
    for code in (lcd_13_5, lcd_12_2):
        basis = orthonormalize(code)
        assert basis.is_valid()
        assert basis.code.same_code(code)
    with pytest.raises(PreconditionError):
        orthonormalize(FIVE_TWO)


def test_orthonormalize_even_rows():
    '''
    Only one odd row: the even pair is folded into it
    '''
    code = LinearCode.from_strings(['1000000', '0110000', '0011000'])
    assert is_lcd(code)
    basis = orthonormalize(code)
    assert basis.is_valid()
    assert basis.code.same_code(code)


def test_hyperbolize():
    '''
    1100, 0110 reduce to a hyperbolic pair agreeing on the first coordinate
    '''
    code = LinearCode.from_strings(['1100', '0110'])
    basis = hyperbolize(code)
    assert basis.is_valid()
    assert basis.code.same_code(code)
    (left, right), = basis.pairs
    assert left[0] == right[0]
    with pytest.raises(PreconditionError):
        hyperbolize(LinearCode.from_strings(['1000', '0100']))
    with pytest.raises(PreconditionError):
        hyperbolize(FIVE_TWO)


def test_lcd_to_hull_one_column(lcd_13_5, lcd_12_2):
    '''
    Odd dimension LCD codes gain a column and a one-dimensional hull
    '''
    column = lcd_to_hull_one_column(lcd_13_5)
    assert (column.n, column.k) == (14, 5)
    assert hull_dimension(column) == 1
    assert is_even_like(column)
    with pytest.raises(PreconditionError):
        lcd_to_hull_one_column(lcd_12_2)


def test_extend_hull_one(lcd_12_2, x_14_3):
    '''
    Odd k: one more coordinate, hull stays one-dimensional, parity class flips
    '''
    built = build_up(lcd_12_2, x_14_3)
    extended = extend_hull_one(built)
    assert (extended.n, extended.k) == (15, 3)
    assert hull_dimension(extended) == 1
    assert is_even_like(extended) != is_even_like(built)
    single = extend_hull_one(LinearCode.from_strings(['1111']))
    assert single.generator.to_strings() == ['01111']
    with pytest.raises(PreconditionError):
        extend_hull_one(FIVE_TWO)


def test_lcd_append_column():
    code = lcd_append_column(FIVE_TWO)
    assert (code.n, code.k) == (6, 2)
    assert is_lcd(code)


def test_trivial_hull_decompose():
    '''
    C = C0 + <1> with C0 an even-like LCD code
    '''
    complement = trivial_hull_decompose(ONES_HULL)
    assert (complement.n, complement.k) == (6, 2)
    assert is_lcd(complement)
    assert is_even_like(complement)
    with pytest.raises(PreconditionError):
        trivial_hull_decompose(FIVE_TWO)
    with pytest.raises(PreconditionError):
        trivial_hull_decompose(LinearCode.from_strings(['1111']))


def test_hull_one_from_lcd_pair():
    code = LinearCode.from_strings(['1000'])
    result = hull_one_from_lcd_pair(code, BitVector.from_string('0110'))
    assert (result.n, result.k) == (4, 2)
    assert hull(result).basis.row(0).to_string() == '0110'
    with pytest.raises(PreconditionError):
        hull_one_from_lcd_pair(code, BitVector.from_string('0111'))
    with pytest.raises(PreconditionError):
        hull_one_from_lcd_pair(code, BitVector.from_string('1100'))


def test_hull_one_from_lcd():
    '''
    First single-coordinate shortening or puncturing with a one-dimensional hull
    '''
    found = hull_one_from_lcd(lcd_append_column(FIVE_TWO))
    assert found is not None
    name, coordinate, child = found
    assert name in ('shorten', 'puncture')
    assert 1 <= coordinate <= 6
    assert hull_dimension(child) == 1
    assert hull_one_from_lcd(LinearCode.from_strings(['1000'])) is None


def test_repetition_hull_one():
    assert repetition_hull_one(6).generator.to_strings() == ['111111']
    assert repetition_hull_one(7).generator.to_strings() == ['1111110']
    assert hull_dimension(repetition_hull_one(7)) == 1
    with pytest.raises(PreconditionError):
        repetition_hull_one(1)


def test_parity_pair_code():
    code = parity_pair_code(6, 3)
    assert code.generator.to_strings() == ['100111', '010110', '001110']
    assert hull_dimension(code) == 1
    assert minimum_distance(code) == 2
    with pytest.raises(PreconditionError):
        parity_pair_code(5, 3)


def test_parity_pair_code_shape():
    code = parity_pair_code(12, 1)
    assert (code.n, code.k) == (12, 1)
    assert hull_dimension(code) == 1
