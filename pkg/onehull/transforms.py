'''
Length and dimension changing operations on codes
'''
import logging
from typing import Iterable, List, NamedTuple, Tuple

import numpy as np

from onehull.code import LinearCode, hull, minimum_distance
from onehull.exceptions import DimensionMismatchError, PreconditionError
from onehull.gf2core import BitMatrix, BitVector, kernel_basis, mat_mul, rank

log = logging.getLogger(__name__)


class CoordinateSet(NamedTuple):
    '''
    A set of 1-based coordinates of a length-n code
    '''
    indices: Tuple[int, ...]
    ambient_length: int

    @classmethod
    def of(cls, indices: Iterable[int], ambient_length: int) -> 'CoordinateSet':
        '''Validate and sort'''
        values = list(indices)
        if len(set(values)) != len(values):
            raise PreconditionError('CoordinateSet', f"duplicate coordinates in {values}")
        for index in values:
            if not 1 <= index <= ambient_length:
                raise PreconditionError(
                    'CoordinateSet', f"coordinate {index} outside [1, {ambient_length}]")
        return cls(tuple(sorted(values)), ambient_length)

    @property
    def zero_based(self) -> List[int]:
        '''Internal 0-based positions'''
        return [index - 1 for index in self.indices]


class MultiplicityVector(NamedTuple):
    '''
    Column counts of a code against the canonical simplex column order
    '''
    k: int
    m: Tuple[int, ...]

    @property
    def length(self) -> int:
        '''Total number of columns'''
        return sum(self.m)


def _coordinates(code: LinearCode, coordinates) -> CoordinateSet:
    if isinstance(coordinates, CoordinateSet):
        if coordinates.ambient_length != code.n:
            raise DimensionMismatchError('CoordinateSet', code.n, coordinates.ambient_length)
        return coordinates
    return CoordinateSet.of(coordinates, code.n)


def puncture(code: LinearCode, coordinates) -> LinearCode:
    '''
    Delete the coordinates in T, repairing the rank when it drops
    '''
    target = _coordinates(code, coordinates)
    if len(target.indices) >= code.n:
        raise PreconditionError('puncture', 'cannot delete every coordinate')
    matrix = code.generator.delete_columns(target.zero_based)
    if rank(matrix) < code.k:
        repaired = LinearCode.from_spanning_matrix(matrix)
        log.debug('Puncturing on %s dropped the dimension from %d to %d',
                  target.indices, code.k, repaired.k)
        return repaired
    return LinearCode(matrix)


def shorten(code: LinearCode, coordinates) -> LinearCode:
    '''
    Codewords vanishing on T, restricted to the remaining coordinates
    '''
    target = _coordinates(code, coordinates)
    on_target = code.generator.select_columns(target.zero_based)
    coefficients = kernel_basis(on_target.transpose())
    if coefficients.rows == 0:
        raise PreconditionError('shorten', f"no nonzero codeword vanishes on {target.indices}")
    subcode = mat_mul(coefficients, code.generator)
    return LinearCode(subcode.delete_columns(target.zero_based))


def _check_column(code: LinearCode, column: BitVector, operation: str) -> None:
    if column.length != code.k:
        raise DimensionMismatchError(operation, code.k, column.length)


def prepend_column(code: LinearCode, column: BitVector) -> LinearCode:
    '''
    Generator (v^T, G)
    '''
    _check_column(code, column, 'prepend_column')
    return LinearCode(BitMatrix.from_rows([column]).transpose().hstack(code.generator))


def duplicate_column_prepend(code: LinearCode, column: BitVector) -> LinearCode:
    '''
    Generator (v^T, v^T, G); GG^T is unchanged
    '''
    _check_column(code, column, 'duplicate_column_prepend')
    pair = BitMatrix.from_rows([column, column]).transpose()
    return LinearCode(pair.hstack(code.generator))


def parity_column(code: LinearCode) -> BitVector:
    '''
    The column that extends every generator row to even weight
    '''
    return BitVector.from_bits(row.weight() & 1 for row in code.generator.iter_rows())


def remove_duplicate_column_pair(code: LinearCode) -> LinearCode:
    '''
    Delete the first pair of equal columns; GG^T is unchanged
    '''
    seen = {}
    for index, column in enumerate(code.generator.transpose().to_strings()):
        if column in seen:
            return LinearCode(code.generator.delete_columns([seen[column], index]))
        seen[column] = index
    raise PreconditionError('remove_duplicate_column_pair', 'no column appears twice')


def simplex_matrix(k: int) -> BitMatrix:
    '''
    S_k with columns 1..2^k-1 in binary, least significant bit in the last row
    '''
    values = np.arange(1, 2 ** k, dtype=np.int64)
    shifts = np.arange(k - 1, -1, -1, dtype=np.int64).reshape(-1, 1)
    return BitMatrix.from_dense(((values >> shifts) & 1).astype(np.uint8), 2 ** k - 1)


def pad_simplex(code: LinearCode, blocks: int) -> LinearCode:
    '''
    [S_k | ... | S_k | G] with `blocks` simplex copies
    '''
    if code.k < 3:
        raise PreconditionError('pad_simplex', f"needs k >= 3, got k={code.k}")
    if blocks < 0:
        raise PreconditionError('pad_simplex', 'the number of blocks must be non-negative')
    matrix = code.generator
    simplex = simplex_matrix(code.k)
    for _ in range(blocks):
        matrix = simplex.hstack(matrix)
    return LinearCode(matrix)


def _column_values(code: LinearCode) -> np.ndarray:
    dense = code.generator.to_dense().astype(np.int64)
    weights = 2 ** np.arange(code.k - 1, -1, -1, dtype=np.int64)
    return weights @ dense


def column_multiplicities(code: LinearCode) -> MultiplicityVector:
    '''
    Count each column against the canonical S_k order
    '''
    values = _column_values(code)
    zero = np.flatnonzero(values == 0)
    if zero.size:
        raise PreconditionError('column_multiplicities',
                                f"coordinate {int(zero[0]) + 1} is a zero column")
    counts = np.bincount(values, minlength=2 ** code.k)[1:]
    return MultiplicityVector(code.k, tuple(int(count) for count in counts))


def code_from_multiplicities(vector: MultiplicityVector) -> LinearCode:
    '''
    G_k(m): m_i copies of the i-th simplex column, in canonical order
    '''
    if len(vector.m) != 2 ** vector.k - 1:
        raise DimensionMismatchError('MultiplicityVector', 2 ** vector.k - 1, len(vector.m))
    if any(count < 0 for count in vector.m):
        raise PreconditionError('code_from_multiplicities', 'multiplicities must be non-negative')
    columns = np.repeat(np.arange(2 ** vector.k - 1), vector.m)
    simplex = simplex_matrix(vector.k).to_dense()
    matrix = BitMatrix.from_dense(simplex[:, columns], int(columns.size))
    if rank(matrix) < vector.k:
        raise PreconditionError('code_from_multiplicities',
                                'the selected columns do not span F_2^k')
    return LinearCode(matrix)


def strip_simplex(code: LinearCode, blocks: int) -> LinearCode:
    '''
    Remove `blocks` copies of every simplex column
    '''
    vector = column_multiplicities(code)
    if min(vector.m) < blocks:
        raise PreconditionError('strip_simplex',
                                f"some column occurs fewer than {blocks} times")
    distance = minimum_distance(code)
    if distance <= blocks * 2 ** (code.k - 1):
        raise PreconditionError(
            'strip_simplex', f"needs d > {blocks * 2 ** (code.k - 1)}, got d={distance}")
    return code_from_multiplicities(
        MultiplicityVector(vector.k, tuple(count - blocks for count in vector.m)))


def multiplicity_bounds(n: int, k: int, d: int) -> Tuple[int, int]:
    '''
    Range of every multiplicity of a [n, k, >= d] code without zero columns
    '''
    if k < 3:
        raise PreconditionError('multiplicity_bounds', f"needs k >= 3, got k={k}")
    lower = max(0, 2 * d - n)
    numerator = (2 ** (k - 1) - 1) * d
    upper = n - (-(-numerator // 2 ** (k - 2)))
    return lower, upper


def hull_decompose(code: LinearCode, t: int) -> Tuple[LinearCode, LinearCode]:
    '''
    Split C = C1 + C2 with C1 spanned by t hull vectors and C1 orthogonal to C2
    '''
    info = hull(code)
    if not 1 <= t <= info.dimension:
        raise PreconditionError('hull_decompose',
                                f"t={t} outside [1, {info.dimension}] (hull dimension)")
    if code.k - t < 1:
        raise PreconditionError('hull_decompose', f"k - t must be positive, got {code.k - t}")
    basis = list(info.basis.iter_rows())
    current = BitMatrix.from_rows(basis)
    for row in code.generator.iter_rows():
        candidate = current.vstack(BitMatrix.from_rows([row]))
        if rank(candidate) > current.rows:
            basis.append(row)
            current = candidate
    return LinearCode(BitMatrix.from_rows(basis[:t])), LinearCode(BitMatrix.from_rows(basis[t:]))


def hull_support(code: LinearCode) -> List[int]:
    '''
    1-based support of the hull vector of a hull-1 code
    '''
    info = hull(code)
    if info.dimension != 1:
        raise PreconditionError('hull_support', f"hull dimension is {info.dimension}, not 1")
    return info.basis.row(0).support()


def shorten_lcd_coordinate(code: LinearCode) -> int:
    '''
    Lowest 1-based coordinate whose shortening of a hull-1 code is LCD
    '''
    return hull_support(code)[0]

