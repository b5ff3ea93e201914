'''
Binary linear codes: duals, hulls, weight enumeration and certification
'''
import logging
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from onehull.bounds import griesmer_max_d
from onehull.exceptions import (
    DimensionMismatchError,
    EnumerationCapExceeded,
    PreconditionError,
    RankDeficientError,
)
from onehull.formats import format_matrix_text, parse_matrix_text
from onehull.gf2core import (
    BitMatrix,
    BitVector,
    dependent_rows,
    gram,
    kernel_basis,
    mat_mul,
    popcount_rows,
    rank,
    row_space_equal,
    rref,
)
from onehull.records import CodeRecord, utc_now
from onehull.settings import get_settings_value

log = logging.getLogger(__name__)

# Codewords of the low generator rows are tabulated; the rest are walked in Gray order
TABLE_ROWS = 16


class LinearCode:
    '''
    A binary [n, k] code given by a full-rank k x n generator matrix
    '''
    __slots__ = ('generator', '_profile')

    def __init__(self, generator: BitMatrix) -> None:
        if generator.rows < 1:
            raise PreconditionError('new_code', 'a code needs at least one generator row')
        found = rank(generator)
        if found != generator.rows:
            raise RankDeficientError(found, generator.rows,
                                     [row + 1 for row in dependent_rows(generator)])
        self.generator = generator
        self._profile: Optional['WeightProfile'] = None

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> 'LinearCode':
        '''Build from "0101" row strings'''
        return cls(BitMatrix.from_rows(list(rows)))

    @classmethod
    def from_spanning_matrix(cls, matrix: BitMatrix) -> 'LinearCode':
        '''
        The code spanned by the rows of `matrix`, dropping dependent rows via rref
        '''
        echelon = rref(matrix)
        if echelon.rank == 0:
            raise PreconditionError('new_code', 'the rows span the zero space')
        return cls(echelon.matrix.select_rows(list(range(echelon.rank))))

    @property
    def n(self) -> int:
        '''Length'''
        return self.generator.cols

    @property
    def k(self) -> int:
        '''Dimension'''
        return self.generator.rows

    def rows(self) -> List[BitVector]:
        '''Generator rows'''
        return list(self.generator.iter_rows())

    def gram(self) -> BitMatrix:
        '''G * G^T'''
        return gram(self.generator)

    def contains(self, vector: BitVector) -> bool:
        '''Membership test'''
        if vector.length != self.n:
            raise DimensionMismatchError('contains', self.n, vector.length)
        return rank(self.generator.vstack(BitMatrix.from_rows([vector]))) == self.k

    def is_orthogonal_to(self, vector: BitVector) -> bool:
        '''True when `vector` lies in the dual code'''
        return all(row.dot(vector) == 0 for row in self.generator.iter_rows())

    def same_code(self, other: 'LinearCode') -> bool:
        '''Row-space equality'''
        return row_space_equal(self.generator, other.generator)

    def encode(self, message: BitVector) -> BitVector:
        '''message * G'''
        product = mat_mul(BitMatrix.from_rows([message]), self.generator)
        return product.row(0)

    def codewords(self) -> Iterator[BitVector]:
        '''All 2^k codewords in Gray order, starting at zero; small k only'''
        current = BitVector.zeros(self.n)
        yield current
        for step in range(1, 2 ** self.k):
            bit = (step & -step).bit_length() - 1
            current = current ^ self.generator.row(bit)
            yield current

    def to_text(self, comments: Sequence[str] = ()) -> str:
        '''The code file format'''
        return format_matrix_text(self.generator, comments)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.generator == other.generator

    def __hash__(self) -> int:
        return hash(self.generator)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}])"


class HullInfo(NamedTuple):
    '''
    Hull(C) = C intersected with its dual
    '''
    dimension: int
    basis: BitMatrix


class WeightProfile(NamedTuple):
    '''
    Minimum distance and weight distribution of the nonzero codewords
    '''
    min_distance: int
    distribution: Tuple[Tuple[int, int], ...]
    even_like: bool

    @property
    def odd_like(self) -> bool:
        '''At least one codeword has odd weight'''
        return not self.even_like


def new_code(generator: BitMatrix) -> LinearCode:
    '''Validate and wrap a full-rank generator'''
    return LinearCode(generator)


def parse_code(text: str, source: str = '<string>') -> Tuple[LinearCode, List[str]]:
    '''
    Parse the code file format into a code and its comment lines
    '''
    parsed = parse_matrix_text(text, source)
    return LinearCode(parsed.matrix), parsed.comments


def dual(code: LinearCode) -> LinearCode:
    '''
    The [n, n-k] dual code
    '''
    if code.k >= code.n:
        raise PreconditionError('dual', f"the [{code.n},{code.k}] code has a zero-dimensional dual")
    return LinearCode(kernel_basis(code.generator))


def hull(code: LinearCode) -> HullInfo:
    '''
    Hull dimension k - rank(GG^T) and the basis {x G : x in ker(GG^T)}
    '''
    coefficients = kernel_basis(code.gram())
    basis = mat_mul(coefficients, code.generator)
    return HullInfo(coefficients.rows, basis)


def hull_dimension(code: LinearCode) -> int:
    '''k - rank(GG^T)'''
    return code.k - rank(code.gram())


def is_lcd(code: LinearCode) -> bool:
    '''GG^T nonsingular'''
    return rank(code.gram()) == code.k


def is_self_orthogonal(code: LinearCode) -> bool:
    '''GG^T == 0'''
    return code.gram().is_zero()


def is_even_like(code: LinearCode) -> bool:
    '''All generator rows have even weight, hence every codeword does'''
    return not (popcount_rows(code.generator.words) & 1).any()


def hull_information_coordinates(code: LinearCode) -> List[int]:
    '''
    1-based coordinates lying in some information set of the hull
    '''
    info = hull(code)
    if info.dimension == 0:
        return []
    columns = info.basis.to_dense().any(axis=0)
    return [index + 1 for index in np.flatnonzero(columns).tolist()]


def systematic_form(code: LinearCode) -> Tuple[LinearCode, List[int]]:
    '''
    The reduced generator and its information set (1-based pivot coordinates)
    '''
    echelon = rref(code.generator)
    return LinearCode(echelon.matrix), echelon.pivot_coordinates


def _weight_counts(generator: BitMatrix) -> np.ndarray:
    k, n = generator.rows, generator.cols
    low = min(k, TABLE_ROWS)
    table = np.zeros((1, generator.words.shape[1]), dtype=np.uint64)
    for index in range(low):
        table = np.concatenate([table, table ^ generator.words[index]])
    counts = np.zeros(n + 1, dtype=np.int64)
    offset = np.zeros(generator.words.shape[1], dtype=np.uint64)
    for step in range(2 ** (k - low)):
        if step:
            bit = (step & -step).bit_length() - 1
            offset = offset ^ generator.words[low + bit]
        counts += np.bincount(popcount_rows(table ^ offset), minlength=n + 1)
    counts[0] -= 1
    return counts


def weight_profile(code: LinearCode, enumeration_cap: Optional[int] = None) -> WeightProfile:
    '''
    Exact weight distribution by enumerating all 2^k - 1 nonzero codewords
    '''
    if code._profile is not None:  # pylint: disable=protected-access
        return code._profile  # pylint: disable=protected-access
    if enumeration_cap is None:
        enumeration_cap = get_settings_value('enumeration_cap')
    if 2 ** code.k > enumeration_cap:
        raise EnumerationCapExceeded(code.k, enumeration_cap)
    counts = _weight_counts(code.generator)
    distribution = tuple((weight, int(count)) for weight, count in enumerate(counts.tolist())
                         if count and weight)
    profile = WeightProfile(distribution[0][0], distribution, is_even_like(code))
    code._profile = profile  # pylint: disable=protected-access
    return profile


def minimum_distance(code: LinearCode, enumeration_cap: Optional[int] = None) -> int:
    '''Shorthand for weight_profile(...).min_distance'''
    return weight_profile(code, enumeration_cap).min_distance


def dual_distance(code: LinearCode, enumeration_cap: Optional[int] = None) -> int:
    '''
    Minimum distance of the dual code
    '''
    if code.k >= code.n:
        raise PreconditionError('dual_distance', 'the dual code is zero-dimensional')
    columns = code.generator.transpose()
    if popcount_rows(columns.words).min() == 0:
        return 1
    if len(set(columns.to_strings())) < code.n:
        return 2
    return minimum_distance(dual(code), enumeration_cap)


def certify(code: LinearCode, provenance: str = 'unknown',
            enumeration_cap: Optional[int] = None) -> CodeRecord:
    '''
    Bundle n, k, d, hull dimension and parity class into a record
    '''
    profile = weight_profile(code, enumeration_cap)
    return CodeRecord(
        code.generator,
        d=profile.min_distance,
        hull_dim=hull_dimension(code),
        even_like=profile.even_like,
        provenance=provenance,
        certified_at=utc_now(),
    )


def verify_record(record: CodeRecord, enumeration_cap: Optional[int] = None) -> bool:
    '''
    Re-certify a record from its generator and compare every field
    '''
    code = LinearCode(record.generator)
    fresh = certify(code, record.provenance, enumeration_cap)
    matches = ((fresh.n, fresh.k, fresh.d, fresh.hull_dim, fresh.even_like)
               == (record.n, record.k, record.d, record.hull_dim, record.even_like))
    if not matches:
        log.warning('Record [%s,%s,%s] hull=%s does not re-certify (found d=%d hull=%d)',
                    record.n, record.k, record.d, record.hull_dim, fresh.d, fresh.hull_dim)
    return matches


def griesmer_gap(code: LinearCode, enumeration_cap: Optional[int] = None) -> int:
    '''
    How far the code's distance is below the Griesmer maximum for its (n, k)
    '''
    return griesmer_max_d(code.n, code.k) - minimum_distance(code, enumeration_cap)
