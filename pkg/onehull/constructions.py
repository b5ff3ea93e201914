'''
Constructions linking LCD codes and codes with one-dimensional hull

The building-up step turns an LCD [n, k] code into an [n+2, k+1] (or, for a dual
vector, an [n+1, k+1]) code whose hull has dimension one; the inverse steps recover
an LCD seed from any such code.
'''
import logging
from typing import List, NamedTuple, Optional, Tuple

from onehull.code import (
    LinearCode,
    hull,
    hull_dimension,
    is_even_like,
    is_lcd,
    minimum_distance,
)
from onehull.exceptions import DimensionMismatchError, InvalidStateError, PreconditionError
from onehull.gf2core import BitMatrix, BitVector, gram, rank, rref, solve
from onehull.transforms import hull_decompose, puncture, shorten

log = logging.getLogger(__name__)


class OrthonormalBasis(NamedTuple):
    '''
    Rows with Gram matrix I_k
    '''
    basis: BitMatrix

    @property
    def code(self) -> LinearCode:
        '''The spanned code'''
        return LinearCode(self.basis)

    def is_valid(self) -> bool:
        '''Gram == I_k'''
        return gram(self.basis) == BitMatrix.identity(self.basis.rows)


class HyperbolicBasis(NamedTuple):
    '''
    Pairs (c_i, c'_i) with c_i.c_i = c'_i.c'_i = 0, c_i.c'_i = 1, pairs mutually
    orthogonal and c_i, c'_i agreeing on the first coordinate
    '''
    pairs: Tuple[Tuple[BitVector, BitVector], ...]

    @property
    def matrix(self) -> BitMatrix:
        '''Rows c_1, c'_1, c_2, c'_2, ...'''
        return BitMatrix.from_rows([row for pair in self.pairs for row in pair])

    @property
    def code(self) -> LinearCode:
        '''The spanned code'''
        return LinearCode(self.matrix)

    def is_valid(self) -> bool:
        '''Check all four pairing conditions'''
        for i, (left, right) in enumerate(self.pairs):
            if left.dot(left) or right.dot(right) or not left.dot(right):
                return False
            if left[0] != right[0]:
                return False
            for j, (other_left, other_right) in enumerate(self.pairs):
                if i == j:
                    continue
                if left.dot(other_left) or left.dot(other_right) or right.dot(other_right):
                    return False
        return True


def _require_lcd(code: LinearCode, operation: str) -> None:
    if not is_lcd(code):
        raise PreconditionError(operation, 'the code is not LCD')


def _split_pair(pending: List[BitVector], operation: str) -> Tuple[BitVector, BitVector]:
    first = pending.pop(0)
    for index, candidate in enumerate(pending):
        if first.dot(candidate):
            second = pending.pop(index)
            break
    else:
        raise InvalidStateError(f"{operation}: no partner for {first.to_string()}")
    # r + (r.b) a + (r.a) b is orthogonal to both a and b
    for index, row in enumerate(pending):
        projected = row
        if row.dot(second):
            projected = projected ^ first
        if row.dot(first):
            projected = projected ^ second
        pending[index] = projected
    return first, second


def orthonormalize(code: LinearCode) -> OrthonormalBasis:
    '''
    Congruence reduction of GG^T to I_k.

    An odd row is split off and the rest projected against it. When only even rows
    remain they hold a hyperbolic pair (a, b); an already-finished odd row u is then
    replaced by u+a, u+b, u+a+b, which are odd and mutually orthogonal.
    '''
    _require_lcd(code, 'orthonormalize')
    if is_even_like(code):
        raise PreconditionError('orthonormalize', 'the code is even-like; use hyperbolize')
    pending = code.rows()
    done: List[BitVector] = []
    while pending:
        odd = next((index for index, row in enumerate(pending) if row.weight() % 2), None)
        if odd is not None:
            unit = pending.pop(odd)
            pending = [row ^ unit if row.dot(unit) else row for row in pending]
            done.append(unit)
            continue
        if not done:
            raise InvalidStateError('orthonormalize: every remaining row is even')
        first, second = _split_pair(pending, 'orthonormalize')
        unit = done.pop()
        done.extend([unit ^ first, unit ^ second, unit ^ first ^ second])
    result = OrthonormalBasis(BitMatrix.from_rows(done))
    if not result.is_valid():
        raise InvalidStateError('orthonormalize: Gram matrix is not the identity')
    return result


def hyperbolize(code: LinearCode) -> HyperbolicBasis:
    '''
    Symplectic pairing of an even-like LCD code
    '''
    _require_lcd(code, 'hyperbolize')
    if not is_even_like(code):
        raise PreconditionError('hyperbolize', 'the code is odd-like; use orthonormalize')
    if code.k % 2:
        raise InvalidStateError('hyperbolize: an even-like LCD code has even dimension')
    pending = code.rows()
    pairs = []
    while pending:
        if len(pending) == 1:
            raise InvalidStateError('hyperbolize: a single row is left unpaired')
        first, second = _split_pair(pending, 'hyperbolize')
        if first[0] and not second[0]:
            second = first ^ second
        elif second[0] and not first[0]:
            first = first ^ second
        pairs.append((first, second))
    result = HyperbolicBasis(tuple(pairs))
    if not result.is_valid():
        raise InvalidStateError('hyperbolize: pairing conditions failed')
    return result


def _check_length(code: LinearCode, vector: BitVector, operation: str) -> None:
    if vector.length != code.n:
        raise DimensionMismatchError(operation, code.n, vector.length)


def build_up(code: LinearCode, x: BitVector) -> LinearCode:
    '''
    [n+2, k+1] code with one-dimensional hull from an LCD [n, k] code and x.x = 1.

    Top row (1, 0, x); row i+1 is (y_i, y_i, r_i) with y_i = x.r_i.
    '''
    _require_lcd(code, 'build_up')
    _check_length(code, x, 'build_up')
    if x.weight() % 2 == 0:
        raise PreconditionError('build_up', 'x must have odd weight')
    rows = [BitVector.from_bits([1, 0]).concat(x)]
    for row in code.rows():
        y = x.dot(row)
        rows.append(BitVector.from_bits([y, y]).concat(row))
    return LinearCode(BitMatrix.from_rows(rows))


def build_up_one(code: LinearCode, x: BitVector) -> LinearCode:
    '''
    [n+1, k+1] code with one-dimensional hull: generator [1 x; 0 G] for odd-weight x in the dual
    '''
    _require_lcd(code, 'build_up_one')
    _check_length(code, x, 'build_up_one')
    if not code.is_orthogonal_to(x):
        raise PreconditionError('build_up_one', 'x is not in the dual code')
    if x.weight() % 2 == 0:
        raise PreconditionError('build_up_one', 'x must have odd weight')
    rows = [BitVector.from_bits([1]).concat(x)]
    rows.extend(BitVector.zeros(1).concat(row) for row in code.rows())
    return LinearCode(BitMatrix.from_rows(rows))


def _hull_vector(code: LinearCode, operation: str) -> BitVector:
    info = hull(code)
    if info.dimension != 1:
        raise PreconditionError(operation, f"hull dimension is {info.dimension}, not 1")
    return info.basis.row(0)


def _information_set(columns: BitMatrix, start: List[int]) -> List[int]:
    chosen = list(start)
    current = rank(columns.select_rows(chosen))
    for index in range(columns.rows):
        if index in chosen:
            continue
        trial = chosen + [index]
        trial_rank = rank(columns.select_rows(trial))
        if trial_rank > current:
            chosen, current = trial, trial_rank
    return chosen


def _systematic_on(code: LinearCode, information: List[int]) -> List[BitVector]:
    order = information + [index for index in range(code.n) if index not in information]
    reduced = rref(code.generator.select_columns(order)).matrix
    restore = [0] * code.n
    for position, index in enumerate(order):
        restore[index] = position
    return list(reduced.select_columns(restore).iter_rows())


def inverse_build_up(code: LinearCode) -> Tuple[LinearCode, BitVector]:
    '''
    LCD [n-2, k-1] seed and odd-weight x with build_up(seed, x) equivalent to the code
    '''
    if code.k < 2:
        raise PreconditionError('inverse_build_up', 'needs k >= 2')
    hull_vector = _hull_vector(code, 'inverse_build_up')
    if hull_vector == BitVector.ones(code.n):
        raise PreconditionError('inverse_build_up',
                                'the hull is spanned by the all-ones vector; '
                                'use trivial_hull_decompose')
    distance = minimum_distance(code)
    if distance <= 2:
        raise PreconditionError('inverse_build_up', f"needs d > 2, got d={distance}")
    columns = code.generator.transpose()
    support = set(index - 1 for index in hull_vector.support())
    pair = None
    for first in sorted(support):
        for second in range(code.n):
            if second not in support and rank(columns.select_rows([first, second])) == 2:
                pair = (first, second)
                break
        if pair:
            break
    if pair is None:
        raise PreconditionError('inverse_build_up',
                                'no coordinate outside the hull support is independent of it')
    information = _information_set(columns, list(pair))
    rows = _systematic_on(code, information)
    # hull vector becomes the first row; the second row stays as is
    coefficients = [hull_vector[index] for index in information]
    first = BitVector.zeros(code.n)
    for row, used in zip(rows, coefficients):
        if used:
            first = first ^ row
    if first != hull_vector:
        raise InvalidStateError('inverse_build_up: systematic rows do not span the hull vector')
    seed_rows = [(first ^ rows[1]).delete(pair)] + [row.delete(pair) for row in rows[2:]]
    seed = LinearCode(BitMatrix.from_rows(seed_rows))
    x = hull_vector.delete(pair)
    if not is_lcd(seed) or x.weight() % 2 == 0:
        raise InvalidStateError('inverse_build_up: recovered seed is not LCD with odd x')
    log.debug('Recovered an LCD [%d,%d] seed by deleting coordinates %d and %d',
              seed.n, seed.k, pair[0] + 1, pair[1] + 1)
    return seed, x


def _lcd_shortening(code: LinearCode, hull_vector: BitVector) -> Tuple[int, LinearCode]:
    for coordinate in hull_vector.support():
        shortened = shorten(code, [coordinate])
        if is_lcd(shortened):
            return coordinate, shortened
    raise InvalidStateError('no coordinate in the hull support shortens to an LCD code')


def inverse_build_up_one(code: LinearCode) -> Tuple[LinearCode, BitVector]:
    '''
    LCD [n-1, k-1] seed and odd-weight x in its dual with build_up_one(seed, x)
    equivalent to the code
    '''
    hull_vector = _hull_vector(code, 'inverse_build_up_one')
    if code.k < 2:
        raise PreconditionError('inverse_build_up_one', 'needs k >= 2')
    coordinate, seed = _lcd_shortening(code, hull_vector)
    position = coordinate - 1
    word = next(row for row in code.rows() if row[position])
    shifted = word.delete([position])
    rhs = BitVector.from_bits(row.dot(shifted) for row in seed.rows())
    coefficients = solve(seed.gram(), rhs)
    if coefficients is None:
        raise InvalidStateError('inverse_build_up_one: seed Gram matrix is singular')
    x = shifted ^ seed.encode(coefficients)
    if x.weight() % 2 == 0:
        raise InvalidStateError('inverse_build_up_one: recovered x has even weight')
    log.debug('Shortened on coordinate %d to an LCD [%d,%d] seed', coordinate, seed.n, seed.k)
    return seed, x


def _complement_rows(code: LinearCode) -> Tuple[BitVector, List[BitVector]]:
    if code.k == 1:
        return _hull_vector(code, 'complement'), []
    hull_part, rest = hull_decompose(code, 1)
    return hull_part.rows()[0], rest.rows()


def lcd_to_hull_one_column(code: LinearCode) -> LinearCode:
    '''
    Even-like [n+1, k] code with one-dimensional hull from an LCD code of odd dimension:
    rows (1, b_i) over an orthonormal basis, so GG^T = J_k - I_k
    '''
    if code.k % 2 == 0:
        raise PreconditionError('lcd_to_hull_one_column', f"needs odd k, got k={code.k}")
    basis = orthonormalize(code)
    rows = [BitVector.ones(1).concat(row) for row in basis.basis.iter_rows()]
    return LinearCode(BitMatrix.from_rows(rows))


def extend_hull_one(code: LinearCode) -> LinearCode:
    '''
    [n+1, k] code with one-dimensional hull for odd k; for k >= 3 the parity class flips.

    The LCD complement of the hull is put in orthonormal or hyperbolic form, its rows
    get a leading 1 and the hull vector a leading 0.
    '''
    if code.k % 2 == 0:
        raise PreconditionError('extend_hull_one', f"needs odd k, got k={code.k}")
    _hull_vector(code, 'extend_hull_one')
    hull_row, rest = _complement_rows(code)
    rows = [BitVector.zeros(1).concat(hull_row)]
    if rest:
        complement = LinearCode(BitMatrix.from_rows(rest))
        if is_even_like(complement):
            basis = hyperbolize(complement).matrix
        else:
            basis = orthonormalize(complement).basis
        rows.extend(BitVector.ones(1).concat(row) for row in basis.iter_rows())
    return LinearCode(BitMatrix.from_rows(rows))


def lcd_append_column(code: LinearCode) -> LinearCode:
    '''
    LCD [n+1, k] code from a code with hull <c>: rows (0, c_i) over a complement
    of the hull and (1, c)
    '''
    hull_row, rest = _complement_rows(code)
    rows = [BitVector.zeros(1).concat(row) for row in rest]
    rows.append(BitVector.ones(1).concat(hull_row))
    return LinearCode(BitMatrix.from_rows(rows))


def trivial_hull_decompose(code: LinearCode) -> LinearCode:
    '''
    The even-like LCD [n, k-1] complement C0 of a code with C = C0 + <1>
    '''
    hull_vector = _hull_vector(code, 'trivial_hull_decompose')
    if hull_vector != BitVector.ones(code.n):
        raise PreconditionError('trivial_hull_decompose', 'the hull is not spanned by 1')
    if code.n % 2 or code.k % 2 == 0:
        raise InvalidStateError(
            f"trivial_hull_decompose: hull <1> forces n even and k odd, got n={code.n} k={code.k}")
    if code.k == 1:
        raise PreconditionError('trivial_hull_decompose', 'the complement of <1> is zero')
    _, rest = _complement_rows(code)
    complement = LinearCode(BitMatrix.from_rows(rest))
    if not is_lcd(complement) or not is_even_like(complement):
        raise InvalidStateError('trivial_hull_decompose: complement is not an even-like LCD code')
    return complement


def hull_one_from_lcd_pair(code: LinearCode, c: BitVector) -> LinearCode:
    '''
    Append a self-orthogonal dual vector c to an LCD code: the hull becomes <c>
    '''
    _require_lcd(code, 'hull_one_from_lcd_pair')
    _check_length(code, c, 'hull_one_from_lcd_pair')
    if c.weight() % 2:
        raise PreconditionError('hull_one_from_lcd_pair', 'c.c must be 0')
    if not code.is_orthogonal_to(c):
        raise PreconditionError('hull_one_from_lcd_pair', 'c is not orthogonal to the code')
    if c.is_zero() or code.contains(c):
        raise PreconditionError('hull_one_from_lcd_pair', 'c lies inside the LCD code')
    return LinearCode(code.generator.vstack(BitMatrix.from_rows([c])))


def hull_one_from_lcd(code: LinearCode) -> Optional[Tuple[str, int, LinearCode]]:
    '''
    First shortening, then first puncturing, of an LCD code on one coordinate that has
    one-dimensional hull; None when neither exists
    '''
    _require_lcd(code, 'hull_one_from_lcd')
    for name, operation in (('shorten', shorten), ('puncture', puncture)):
        for coordinate in range(1, code.n + 1):
            try:
                child = operation(code, [coordinate])
            except PreconditionError:
                continue
            if hull_dimension(child) == 1:
                return name, coordinate, child
    return None


def repetition_hull_one(n: int) -> LinearCode:
    '''
    [n, 1] code with one-dimensional hull of largest distance: 1 for even n, 1 with
    the last coordinate cleared for odd n
    '''
    if n < 2:
        raise PreconditionError('repetition_hull_one', f"needs n >= 2, got n={n}")
    row = BitVector.ones(n) if n % 2 == 0 else BitVector.ones(n - 1).concat(BitVector.zeros(1))
    return LinearCode(BitMatrix.from_rows([row]))


def parity_pair_code(n: int, k: int) -> LinearCode:
    '''
    [n, k] code with one-dimensional hull for n - k >= 3, of distance 2 once k >= 2.

    Row 1 is e_1 plus ones on columns k+1..k+3, row i is e_i plus ones on columns
    k+1, k+2, so GG^T = diag(0, 1, ..., 1).
    '''
    if k < 1 or n - k < 3:
        raise PreconditionError('parity_pair_code', f"needs k >= 1 and n - k >= 3, got n={n} k={k}")
    pair = BitVector.ones(2).concat(BitVector.zeros(n - k - 2))
    rows = [BitVector.unit(k, 0).concat(BitVector.ones(3)).concat(BitVector.zeros(n - k - 3))]
    rows.extend(BitVector.unit(k, index).concat(pair) for index in range(1, k))
    return LinearCode(BitMatrix.from_rows(rows))
