'''
Bit-packed linear algebra over GF(2)

Rows are stored as little-endian 64 bit words: coordinate j lives in word j // 64,
bit j % 64. Padding bits past the logical length are always zero.
'''
import logging
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from onehull.exceptions import DimensionMismatchError

log = logging.getLogger(__name__)

WORD_BITS = 64
_ONE = np.uint64(1)
_POPCOUNT8 = np.array([bin(i).count('1') for i in range(256)], dtype=np.int64)


def word_count(length: int) -> int:
    '''Number of 64 bit words holding `length` bits (at least one)'''
    return max(1, (length + WORD_BITS - 1) // WORD_BITS)


def popcount_each(values: np.ndarray) -> np.ndarray:
    '''
    Set bits of every uint64 element, same shape as the input
    '''
    words = np.ascontiguousarray(values, dtype='<u8')
    as_bytes = words.view(np.uint8).reshape(words.shape + (8,))
    return _POPCOUNT8[as_bytes].sum(axis=-1)


def popcount_rows(words: np.ndarray) -> np.ndarray:
    '''Weight of each packed row of a (rows, words) array'''
    return popcount_each(words).sum(axis=-1)


def _pack(bits: np.ndarray, length: int) -> np.ndarray:
    '''Pack a (rows, length) 0/1 array into (rows, words) uint64'''
    rows = bits.shape[0]
    padded = np.zeros((rows, word_count(length) * WORD_BITS), dtype=np.uint8)
    padded[:, :length] = bits[:, :length] & 1
    packed = np.packbits(padded, axis=1, bitorder='little')
    return np.ascontiguousarray(packed).view('<u8').astype(np.uint64)


def _unpack(words: np.ndarray, length: int) -> np.ndarray:
    '''Unpack (rows, words) uint64 into a (rows, length) uint8 0/1 array'''
    as_bytes = np.ascontiguousarray(words, dtype='<u8').view(np.uint8)
    return np.unpackbits(as_bytes, axis=1, bitorder='little')[:, :length]


def _column_bits(words: np.ndarray, column: int) -> np.ndarray:
    return ((words[:, column >> 6] >> np.uint64(column & 63)) & _ONE).astype(bool)


def _frozen(words: np.ndarray) -> np.ndarray:
    words = np.array(words, dtype=np.uint64, copy=True)
    words.setflags(write=False)
    return words


class BitVector:
    '''
    An immutable vector of GF(2)^length
    '''
    __slots__ = ('length', 'words')

    def __init__(self, length: int, words: np.ndarray) -> None:
        if length < 0:
            raise ValueError('BitVector length must be non-negative')
        words = np.asarray(words, dtype=np.uint64).reshape(-1)
        if words.size != word_count(length):
            raise DimensionMismatchError('BitVector words', word_count(length), words.size)
        tail = length % WORD_BITS
        if tail and int(words[-1]) >> tail:
            raise ValueError('BitVector padding bits must be zero')
        self.length = length
        self.words = _frozen(words)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> 'BitVector':
        '''Build from a sequence of 0/1 values'''
        array = np.asarray(list(bits), dtype=np.uint8).reshape(1, -1)
        return cls(array.shape[1], _pack(array, array.shape[1])[0])

    @classmethod
    def from_string(cls, text: str) -> 'BitVector':
        '''Build from a string such as "10110"'''
        text = text.strip()
        if any(char not in '01' for char in text):
            raise ValueError(f"Not a binary string: {text!r}")
        return cls.from_bits(int(char) for char in text)

    @classmethod
    def from_int(cls, length: int, value: int) -> 'BitVector':
        '''Bit j of `value` becomes coordinate j'''
        words = [(value >> (WORD_BITS * i)) & (2 ** WORD_BITS - 1) for i in range(word_count(length))]
        return cls(length, np.array(words, dtype=np.uint64))

    @classmethod
    def zeros(cls, length: int) -> 'BitVector':
        '''The zero vector'''
        return cls(length, np.zeros(word_count(length), dtype=np.uint64))

    @classmethod
    def ones(cls, length: int) -> 'BitVector':
        '''The all-ones vector'''
        return cls.from_bits([1] * length)

    @classmethod
    def unit(cls, length: int, index: int) -> 'BitVector':
        '''The unit vector with a one at 0-based `index`'''
        bits = [0] * length
        bits[index] = 1
        return cls.from_bits(bits)

    def to_list(self) -> List[int]:
        '''The coordinates as a list of ints'''
        return _unpack(self.words.reshape(1, -1), self.length)[0].tolist()

    def to_string(self) -> str:
        '''The coordinates as a "0101" string'''
        return ''.join(str(bit) for bit in self.to_list())

    def to_int(self) -> int:
        '''Inverse of from_int'''
        return sum(int(word) << (WORD_BITS * i) for i, word in enumerate(self.words))

    def weight(self) -> int:
        '''Hamming weight'''
        return int(popcount_each(self.words).sum())

    def support(self) -> List[int]:
        '''1-based coordinates of the nonzero entries'''
        return [i + 1 for i, bit in enumerate(self.to_list()) if bit]

    def is_zero(self) -> bool:
        '''True for the zero vector'''
        return not self.words.any()

    def dot(self, other: 'BitVector') -> int:
        '''Standard inner product mod 2'''
        self._check(other)
        return int(popcount_each(self.words & other.words).sum()) & 1

    def concat(self, other: 'BitVector') -> 'BitVector':
        '''Juxtaposition (self | other)'''
        return BitVector.from_bits(self.to_list() + other.to_list())

    def delete(self, indices: Iterable[int]) -> 'BitVector':
        '''Drop the given 0-based coordinates'''
        drop = set(indices)
        return BitVector.from_bits(bit for i, bit in enumerate(self.to_list()) if i not in drop)

    def _check(self, other: 'BitVector') -> None:
        if self.length != other.length:
            raise DimensionMismatchError('BitVector operation', self.length, other.length)

    def __xor__(self, other: 'BitVector') -> 'BitVector':
        self._check(other)
        return BitVector(self.length, self.words ^ other.words)

    __add__ = __xor__

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise IndexError(index)
        return int(self.words[index >> 6] >> np.uint64(index & 63)) & 1

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_list())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and np.array_equal(self.words, other.words)

    def __hash__(self) -> int:
        return hash((self.length, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"BitVector('{self.to_string()}')"


class BitMatrix:
    '''
    An immutable rows x cols matrix over GF(2), row-major
    '''
    __slots__ = ('rows', 'cols', 'words')

    def __init__(self, rows: int, cols: int, words: np.ndarray) -> None:
        words = np.asarray(words, dtype=np.uint64).reshape(rows, word_count(cols))
        tail = cols % WORD_BITS
        if tail and rows and (words[:, -1] >> np.uint64(tail)).any():
            raise ValueError('BitMatrix padding bits must be zero')
        self.rows = rows
        self.cols = cols
        self.words = _frozen(words)

    @classmethod
    def from_dense(cls, bits: Union[np.ndarray, Sequence[Sequence[int]]],
                   cols: Optional[int] = None) -> 'BitMatrix':
        '''Build from a 2-D array-like of 0/1 values'''
        array = np.asarray(bits, dtype=np.uint8)
        if array.size == 0:
            width = cols if cols is not None else (array.shape[1] if array.ndim == 2 else 0)
            array = np.zeros((array.shape[0] if array.ndim == 2 else 0, width), dtype=np.uint8)
        if array.ndim != 2:
            raise ValueError('BitMatrix.from_dense expects a 2-D array')
        return cls(array.shape[0], array.shape[1], _pack(array, array.shape[1]))

    @classmethod
    def from_rows(cls, rows: Sequence[Union[BitVector, str]],
                  cols: Optional[int] = None) -> 'BitMatrix':
        '''Build from BitVectors or "0101" strings'''
        vectors = [BitVector.from_string(row) if isinstance(row, str) else row for row in rows]
        if not vectors:
            return cls.zeros(0, cols or 0)
        width = vectors[0].length
        for vector in vectors:
            if vector.length != width:
                raise DimensionMismatchError('BitMatrix rows', width, vector.length)
        return cls(len(vectors), width, np.stack([vector.words for vector in vectors]))

    @classmethod
    def from_ints(cls, values: Sequence[int], cols: int) -> 'BitMatrix':
        '''Rows given as integers with bit j at coordinate j (cols <= 64)'''
        if cols > WORD_BITS:
            return cls.from_rows([BitVector.from_int(cols, int(value)) for value in values], cols)
        return cls(len(values), cols, np.array([int(v) for v in values], dtype=np.uint64).reshape(-1, 1))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'BitMatrix':
        '''The zero matrix'''
        return cls(rows, cols, np.zeros((rows, word_count(cols)), dtype=np.uint64))

    @classmethod
    def identity(cls, size: int) -> 'BitMatrix':
        '''I_size'''
        return cls.from_dense(np.eye(size, dtype=np.uint8), size)

    @classmethod
    def ones(cls, rows: int, cols: int) -> 'BitMatrix':
        '''The all-ones matrix J'''
        return cls.from_dense(np.ones((rows, cols), dtype=np.uint8), cols)

    @property
    def shape(self) -> Tuple[int, int]:
        '''(rows, cols)'''
        return self.rows, self.cols

    @property
    def T(self) -> 'BitMatrix':  # pylint: disable=invalid-name
        '''Transpose'''
        return self.transpose()

    def to_dense(self) -> np.ndarray:
        '''A (rows, cols) uint8 array of 0/1'''
        return _unpack(self.words, self.cols)

    def to_strings(self) -> List[str]:
        '''Rows as "0101" strings'''
        return [''.join(str(bit) for bit in row) for row in self.to_dense().tolist()]

    def to_ints(self) -> List[int]:
        '''Rows as integers, bit j at coordinate j'''
        return [self.row(i).to_int() for i in range(self.rows)]

    def row(self, index: int) -> BitVector:
        '''Row as a BitVector'''
        return BitVector(self.cols, self.words[index])

    def column(self, index: int) -> BitVector:
        '''Column as a BitVector of length rows'''
        return BitVector.from_bits(_column_bits(self.words, index).astype(np.uint8))

    def iter_rows(self) -> Iterator[BitVector]:
        '''Iterate over the rows'''
        for index in range(self.rows):
            yield self.row(index)

    def transpose(self) -> 'BitMatrix':
        '''A new matrix holding the transpose'''
        return BitMatrix.from_dense(self.to_dense().T, self.rows)

    def hstack(self, other: 'BitMatrix') -> 'BitMatrix':
        '''(self | other)'''
        if self.rows != other.rows:
            raise DimensionMismatchError('hstack rows', self.rows, other.rows)
        return BitMatrix.from_dense(np.hstack([self.to_dense(), other.to_dense()]),
                                    self.cols + other.cols)

    def vstack(self, other: 'BitMatrix') -> 'BitMatrix':
        '''self on top of other'''
        if self.cols != other.cols:
            raise DimensionMismatchError('vstack cols', self.cols, other.cols)
        return BitMatrix(self.rows + other.rows, self.cols, np.vstack([self.words, other.words]))

    def select_columns(self, indices: Sequence[int]) -> 'BitMatrix':
        '''Keep the given 0-based columns, in the given order'''
        return BitMatrix.from_dense(self.to_dense()[:, list(indices)], len(indices))

    def delete_columns(self, indices: Iterable[int]) -> 'BitMatrix':
        '''Drop the given 0-based columns'''
        drop = set(indices)
        return self.select_columns([c for c in range(self.cols) if c not in drop])

    def select_rows(self, indices: Sequence[int]) -> 'BitMatrix':
        '''Keep the given 0-based rows'''
        return BitMatrix(len(indices), self.cols, self.words[list(indices)])

    def is_zero(self) -> bool:
        '''True when every entry is 0'''
        return not self.words.any()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.words, other.words)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.to_strings()!r})"


class Echelon(NamedTuple):
    '''
    Reduced row-echelon form and the 0-based pivot columns
    '''
    matrix: BitMatrix
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        '''Number of pivots'''
        return len(self.pivots)

    @property
    def pivot_coordinates(self) -> List[int]:
        '''1-based pivot columns'''
        return [pivot + 1 for pivot in self.pivots]


def _eliminate(words: np.ndarray, cols: int) -> Tuple[np.ndarray, List[int]]:
    work = np.array(words, dtype=np.uint64, copy=True)
    nrows = work.shape[0]
    pivots: List[int] = []
    row = 0
    for column in range(cols):
        if row == nrows:
            break
        hits = np.flatnonzero(_column_bits(work[row:], column))
        if hits.size == 0:
            continue
        pivot = row + int(hits[0])
        if pivot != row:
            work[[row, pivot]] = work[[pivot, row]]
        mask = _column_bits(work, column)
        mask[row] = False
        if mask.any():
            work[mask] ^= work[row]
        pivots.append(column)
        row += 1
    return work, pivots


def rref(matrix: BitMatrix) -> Echelon:
    '''
    Reduced row-echelon form; zero rows stay at the bottom
    '''
    work, pivots = _eliminate(matrix.words, matrix.cols)
    return Echelon(BitMatrix(matrix.rows, matrix.cols, work), tuple(pivots))


def rank(matrix: BitMatrix) -> int:
    '''Rank over GF(2)'''
    return len(_eliminate(matrix.words, matrix.cols)[1])


def mat_mul(left: BitMatrix, right: BitMatrix) -> BitMatrix:
    '''
    Matrix product mod 2
    '''
    if left.cols != right.rows:
        raise DimensionMismatchError('mat_mul', left.cols, right.rows)
    out = np.zeros((left.rows, right.words.shape[1]), dtype=np.uint64)
    dense = left.to_dense().astype(bool)
    for inner in range(left.cols):
        selected = dense[:, inner]
        if selected.any():
            out[selected] ^= right.words[inner]
    return BitMatrix(left.rows, right.cols, out)


def gram(matrix: BitMatrix) -> BitMatrix:
    '''M * M^T'''
    return mat_mul(matrix, matrix.transpose())


def kernel_basis(matrix: BitMatrix) -> BitMatrix:
    '''
    Basis of {v : M v^T = 0}, one vector per free column of the echelon form
    '''
    work, pivots = _eliminate(matrix.words, matrix.cols)
    pivot_set = set(pivots)
    free = [c for c in range(matrix.cols) if c not in pivot_set]
    basis = np.zeros((len(free), matrix.cols), dtype=np.uint8)
    if free:
        reduced = _unpack(work[:len(pivots)], matrix.cols)
        basis[np.arange(len(free)), free] = 1
        if pivots:
            basis[:, pivots] = reduced[:, free].T
    return BitMatrix.from_dense(basis, matrix.cols)


def solve(matrix: BitMatrix, rhs: BitVector) -> Optional[BitVector]:
    '''
    A particular solution v of M v^T = b^T, or None when inconsistent
    '''
    if rhs.length != matrix.rows:
        raise DimensionMismatchError('solve', matrix.rows, rhs.length)
    augmented = np.hstack([matrix.to_dense(), np.array(rhs.to_list(), dtype=np.uint8).reshape(-1, 1)])
    work, pivots = _eliminate(_pack(augmented, matrix.cols + 1), matrix.cols + 1)
    if matrix.cols in pivots:
        return None
    reduced = _unpack(work, matrix.cols + 1)
    solution = np.zeros(matrix.cols, dtype=np.uint8)
    for row, pivot in enumerate(pivots):
        solution[pivot] = reduced[row, matrix.cols]
    return BitVector.from_bits(solution)


def row_space_equal(left: BitMatrix, right: BitMatrix) -> bool:
    '''True when both matrices span the same space'''
    if left.cols != right.cols:
        return False
    joint = rank(left.vstack(right))
    return rank(left) == joint == rank(right)


def in_row_space(matrix: BitMatrix, vector: BitVector) -> bool:
    '''True when `vector` is a combination of the rows of `matrix`'''
    return rank(matrix.vstack(BitMatrix.from_rows([vector]))) == rank(matrix)


def dependent_rows(matrix: BitMatrix) -> List[int]:
    '''
    0-based rows that do not raise the rank when added in order
    '''
    offending = []
    current = 0
    for index in range(matrix.rows):
        if rank(matrix.select_rows(list(range(index + 1)))) == current:
            offending.append(index)
        else:
            current += 1
    return offending


def int_rank(rows: Sequence[int]) -> int:
    '''
    Rank of rows encoded as python integers
    '''
    basis: List[int] = []
    for value in rows:
        for pivot in basis:
            value = min(value, value ^ pivot)
        if value:
            basis.append(value)
            basis.sort(reverse=True)
    return len(basis)
