'''
Distance bounds for codes with one-dimensional hull
'''
import logging
from math import comb
from typing import Callable, Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from onehull.constants import (
    CODIMENSION_BOUND,
    DEFAULT_ENCODING,
    DIMENSION_MONOTONE,
    FORMULA_CODIM,
    FORMULA_K,
    GRIESMER,
    IMPORTED,
    LCD_DATA,
    LCD_EVEN_LENGTH,
    LCD_EXTEND,
    LCD_PARITY,
    LCD_PUNCTURE,
    LCD_SHORTEN,
    SMALL_TABLE,
    SPHERE_PACKING,
    TABLE1,
    TABLE2,
    TABLE3,
)
from onehull.exceptions import (
    InconsistentBoundsError,
    PreconditionError,
    UncoveredParametersError,
)
from onehull.formats import parse_lcd_data
from onehull.tables import reference_tables

log = logging.getLogger(__name__)

# k = 5 residues mod 31 where the closed form leaves a gap: lower bound offset
K5_GAP_OFFSETS = {13: -1, 15: -1, 23: -1, 27: -1, 0: -2, 1: -2, 8: -2, 12: -2, 16: -2}
K5_EXACT_OFFSETS = {21: 0, 25: 0, 29: 0, 4: -2}
K5_MINUS_ONE = {2, 3, 5, 6, 7, 9, 10, 11, 14, 17, 18, 19, 20, 22, 24, 26, 28, 30}


class BoundInterval(NamedTuple):
    '''
    lower <= d <= upper, with the sources that established either side
    '''
    lower: int
    upper: int
    provenance: Tuple[str, ...]

    @property
    def exact(self) -> bool:
        '''Both sides agree'''
        return self.lower == self.upper

    def contains(self, value: int) -> bool:
        '''lower <= value <= upper'''
        return self.lower <= value <= self.upper

    def intersects(self, other: 'BoundInterval') -> bool:
        '''The intervals overlap'''
        return max(self.lower, other.lower) <= min(self.upper, other.upper)

    def __str__(self) -> str:
        return f"[{self.lower},{self.upper}] ({'; '.join(self.provenance)})"


def exactly(value: int, *provenance: str) -> BoundInterval:
    '''[value, value]'''
    return BoundInterval(value, value, tuple(provenance))


def combine(n: int, k: int, intervals: Iterable[BoundInterval]) -> BoundInterval:
    '''
    Intersect intervals, keeping the tags of the sides that bind
    '''
    items = list(intervals)
    if not items:
        raise PreconditionError('combine', 'no intervals to combine')
    lower = max(item.lower for item in items)
    upper = min(item.upper for item in items)
    if lower > upper:
        raise InconsistentBoundsError(n, k, lower, upper)
    tags: List[str] = []
    for item in items:
        if item.lower == lower and item.lower > 0 or item.upper == upper:
            tags.extend(tag for tag in item.provenance if tag not in tags)
    return BoundInterval(lower, upper, tuple(tags))


def _check_range(operation: str, n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise PreconditionError(operation, f"needs 1 <= k <= n, got n={n} k={k}")


def griesmer_length(k: int, d: int) -> int:
    '''
    Sum of ceil(d / 2^i) for i < k
    '''
    return sum(-(-d // 2 ** i) for i in range(k))


def griesmer_max_d(n: int, k: int) -> int:
    '''
    Largest d with griesmer_length(k, d) <= n
    '''
    _check_range('griesmer_max_d', n, k)
    d = 1
    while d < n and griesmer_length(k, d + 1) <= n:
        d += 1
    return d


def hamming_volume(n: int, radius: int) -> int:
    '''Number of words within `radius` of a fixed word'''
    return sum(comb(n, i) for i in range(radius + 1))


def _packs(n: int, k: int, d: int) -> bool:
    if k > n:
        return False
    if 2 ** k * hamming_volume(n, (d - 1) // 2) > 2 ** n:
        return False
    if d % 2 == 0:
        # [n, k, d] punctures to [n-1, k, d-1]
        return k <= n - 1 and 2 ** k * hamming_volume(n - 1, (d - 2) // 2) <= 2 ** (n - 1)
    return True


def sphere_packing_max_d(n: int, k: int) -> int:
    '''
    Largest d that passes the Hamming volume inequality
    '''
    _check_range('sphere_packing_max_d', n, k)
    d = 1
    while d < n and _packs(n, k, d + 1):
        d += 1
    return d


def _k_family(n: int, k: int) -> Optional[BoundInterval]:
    tag = FORMULA_K.format(k)
    if k == 1:
        return exactly(n - 1 if n % 2 else n, tag)
    if k == 2 and n > 2:
        value = 2 * n // 3
        return exactly(value if n % 6 in (1, 5) else value - 1, tag)
    if k == 3 and n > 3:
        value = 4 * n // 7
        return exactly(value if n % 7 in (1, 3, 4, 5) else value - 1, tag)
    if k == 4 and n >= 7:
        value = 8 * n // 15
        return exactly(value if n % 15 in (11, 13) else value - 1, tag)
    if k == 5 and n >= 7:
        value = 16 * n // 31
        residue = n % 31
        if residue in K5_EXACT_OFFSETS:
            return exactly(value + K5_EXACT_OFFSETS[residue], tag)
        if residue in K5_MINUS_ONE:
            return exactly(value - 1, tag)
        return combine(n, k, [BoundInterval(value + K5_GAP_OFFSETS[residue], n, (tag,)),
                              BoundInterval(0, griesmer_max_d(n, k), (GRIESMER,)),
                              BoundInterval(0, sphere_packing_max_d(n, k), (SPHERE_PACKING,))])
    return None


def _codimension_family(n: int, k: int) -> Optional[BoundInterval]:
    codim = n - k
    tag = FORMULA_CODIM.format(codim)
    if codim == 1:
        return exactly(1 if n % 2 else 2, tag)
    if codim == 2 and n > 2:
        return exactly(2 if n % 2 else 1, tag)
    if codim == 3:
        return exactly({4: 4, 5: 3}.get(n, 2), tag)
    if codim == 4:
        if n == 5:
            return exactly(4, tag)
        return exactly(3 if n <= 12 else 2, tag)
    if codim == 5:
        if n == 6:
            return exactly(6, tag)
        if n in (7, 8, 10, 12):
            return exactly(4, tag)
        return exactly(3 if n <= 27 else 2, tag)
    return None


def d_one_formula(n: int, k: int) -> BoundInterval:
    '''
    Closed-form d_one(n, k) for k <= 5, for n - k <= 5, and for n >= 2^(n-k) when n - k >= 3.

    Every applicable family is intersected; the k = 5 residues the closed form does not
    settle come back as [lower bound, Griesmer].
    '''
    if not 1 <= k < n:
        raise PreconditionError('d_one_formula', f"needs 1 <= k < n, got n={n} k={k}")
    families = [family for family in (_k_family(n, k), _codimension_family(n, k))
                if family is not None]
    codim = n - k
    if codim >= 3 and n >= 2 ** codim:
        families.append(exactly(2, CODIMENSION_BOUND))
    if not families:
        raise UncoveredParametersError(n, k)
    return combine(n, k, families)


def d_lcd_table2(n: int) -> Optional[int]:
    '''
    d_LCD(n, 5) where n mod 31 is one of the twelve tabulated residues
    '''
    return reference_tables().table2(n)


def table3_lookup(n: int) -> Optional[int]:
    '''
    d_one(n, 5) where n mod 31 is one of the twelve tabulated residues
    '''
    return reference_tables().table3(n)


def table1_lookup(n: int, k: int) -> Optional[BoundInterval]:
    '''
    The frozen 14 <= n <= 30 entry, exact or an interval
    '''
    entry = reference_tables().table1.get((n, k))
    if entry is None:
        return None
    return BoundInterval(entry[0], entry[1], (TABLE1,))


def small_lookup(n: int, k: int) -> Optional[BoundInterval]:
    '''Anchored small-length values'''
    value = reference_tables().small_values.get((n, k))
    return None if value is None else exactly(value, SMALL_TABLE)


class LcdOracle:
    '''
    Known d_LCD(n, k) values: built-in families plus user data
    '''

    def __init__(self, values: Optional[Mapping[Tuple[int, int], int]] = None) -> None:
        self.values: Dict[Tuple[int, int], int] = dict(values or {})

    @classmethod
    def from_file(cls, path: str) -> 'LcdOracle':
        '''Load `n k d` lines'''
        with open(path, 'r', encoding=DEFAULT_ENCODING) as handle:
            return cls(parse_lcd_data(handle.read(), path))

    def lookup(self, n: int, k: int) -> Optional[Tuple[int, str]]:
        '''
        The value and where it came from, or None
        '''
        if n < 1 or not 1 <= k <= n:
            return None
        if (n, k) in self.values:
            return self.values[(n, k)], LCD_DATA
        if k == 1:
            return (n if n % 2 else n - 1), LCD_DATA
        if k == 3 and n >= 8 and n % 7 == 1:
            return 4 * (n // 7) - 1, LCD_DATA
        if (n, k) == (30, 25):
            return 2, LCD_DATA
        if k == 5:
            value = d_lcd_table2(n)
            if value is not None:
                return value, TABLE2
        return None

    def __call__(self, n: int, k: int) -> Optional[int]:
        found = self.lookup(n, k)
        return None if found is None else found[0]


def _tagged(tag: str, source: str) -> str:
    return tag if source == LCD_DATA else f"{tag}({source})"


def composite_upper_bound(n: int, k: int, d_lcd_oracle: Optional[LcdOracle] = None,
                          d_one_oracle: Optional[Callable[[int, int], Optional[int]]] = None
                          ) -> BoundInterval:
    '''
    Combine Griesmer, sphere packing and every LCD linkage the oracle can feed.

    Upper side: d_LCD(n-1, k-1), d_LCD(n-1, k) + 1, d_LCD(n+1, k) and, when k is even or
    n is odd, d_one(n, k-1). Lower side, for odd k: d_LCD(n-1, k) rounded up to even,
    d_LCD(n+1, k) - 1, and d_LCD(n, k) itself when n is even and that value is odd.
    '''
    _check_range('composite_upper_bound', n, k)
    oracle = d_lcd_oracle or LcdOracle()
    intervals = [BoundInterval(0, griesmer_max_d(n, k), (GRIESMER,)),
                 BoundInterval(0, sphere_packing_max_d(n, k), (SPHERE_PACKING,))]

    def lcd(length: int, dimension: int) -> Optional[Tuple[int, str]]:
        if length < dimension or dimension < 1:
            return None
        return oracle.lookup(length, dimension)

    if k >= 2 and (found := lcd(n - 1, k - 1)):
        intervals.append(BoundInterval(0, found[0], (_tagged(LCD_SHORTEN, found[1]),)))
    below = lcd(n - 1, k)
    if below:
        intervals.append(BoundInterval(0, below[0] + 1, (_tagged(LCD_PUNCTURE, below[1]),)))
    above = lcd(n + 1, k)
    if above and 2 <= k <= n - 1:
        intervals.append(BoundInterval(0, above[0], (_tagged(LCD_EXTEND, above[1]),)))
    if d_one_oracle is not None and k >= 2 and (k % 2 == 0 or n % 2 == 1):
        previous = d_one_oracle(n, k - 1)
        if previous is not None:
            intervals.append(BoundInterval(0, previous, (DIMENSION_MONOTONE,)))

    if k % 2 == 1:
        if below:
            value = below[0] + 1 if below[0] % 2 else below[0]
            intervals.append(BoundInterval(value, n, (_tagged(LCD_PARITY, below[1]),)))
        if above and above[0] >= 2:
            intervals.append(BoundInterval(above[0] - 1, n, (_tagged(LCD_PUNCTURE, above[1]),)))
        same = lcd(n, k)
        if n % 2 == 0 and same and same[0] % 2 == 1:
            intervals.append(BoundInterval(same[0], n, (_tagged(LCD_EVEN_LENGTH, same[1]),)))
    return combine(n, k, intervals)


def _direct_upper(n: int, k: int) -> Optional[int]:
    '''Upper bound from the frozen and closed-form sources only'''
    uppers = []
    for lookup in (table1_lookup, small_lookup):
        found = lookup(n, k)
        if found is not None:
            uppers.append(found.upper)
    if 1 <= k < n:
        try:
            uppers.append(d_one_formula(n, k).upper)
        except UncoveredParametersError:
            pass
    return min(uppers) if uppers else None


def best_bound(n: int, k: int, d_lcd_oracle: Optional[LcdOracle] = None,
               use_tables: bool = True) -> BoundInterval:
    '''
    Everything known about d_one(n, k): closed forms, frozen tables, imported facts
    and the composite LCD inequalities.

    With use_tables=False only the closed forms and the LCD linkages are consulted.
    '''
    if not 1 <= k < n:
        raise PreconditionError('best_bound', f"needs 1 <= k < n, got n={n} k={k}")
    intervals = [composite_upper_bound(n, k, d_lcd_oracle,
                                       _direct_upper if use_tables else None)]
    try:
        intervals.append(d_one_formula(n, k))
    except UncoveredParametersError:
        log.debug('No closed form covers (%d, %d)', n, k)
    if not use_tables:
        return combine(n, k, intervals)
    for lookup in (table1_lookup, small_lookup):
        found = lookup(n, k)
        if found is not None:
            intervals.append(found)
    if k == 5 and (value := table3_lookup(n)) is not None:
        intervals.append(exactly(value, TABLE3))
    imported = reference_tables().imported_upper(n, k)
    if imported is not None:
        intervals.append(BoundInterval(0, imported, (IMPORTED,)))
    return combine(n, k, intervals)
