'''
Frozen reference data: the 14 <= n <= 30 d_one table, the d_LCD(n,5) and d_one(n,5)
residue tables, small anchored values and imported nonexistence facts
'''
import hashlib
import logging
import os
from functools import lru_cache
from typing import Dict, NamedTuple, Optional, Tuple

from onehull.constants import DEFAULT_ENCODING, TABLE1_RESOURCE, TABLE1_SHA256
from onehull.exceptions import InvalidStateError, ParseError

log = logging.getLogger(__name__)

Cell = Tuple[int, int]
Interval = Tuple[int, int]

TABLE1_MIN_LENGTH = 14
TABLE1_MAX_LENGTH = 30

# n = 31m + r: value 16m + offset
TABLE2_OFFSETS: Dict[int, int] = {
    1: -1, 5: 1, 6: 1, 9: 3, 13: 5, 17: 7,
    20: 9, 21: 9, 24: 11, 25: 11, 28: 13, 29: 13,
}
TABLE3_OFFSETS: Dict[int, int] = {
    2: 0, 6: 2, 7: 2, 10: 4, 14: 6, 18: 8,
    21: 10, 22: 10, 25: 12, 26: 12, 29: 14, 30: 14,
}

SMALL_VALUES: Dict[Cell, int] = {
    (4, 1): 4, (5, 1): 4, (6, 1): 6,
    (5, 2): 3,
    (4, 3): 2, (6, 3): 2, (7, 3): 3, (9, 3): 4,
    (7, 4): 2, (10, 4): 4, (11, 4): 5,
    (9, 5): 3, (11, 5): 4,
}

# (n, k, d): no [n, k, d] code with one-dimensional hull exists
IMPORTED_NONEXISTENCE: Tuple[Tuple[int, int, int], ...] = (
    (16, 8, 5), (16, 10, 4), (17, 9, 5), (18, 8, 6), (20, 4, 10), (20, 8, 7),
    (20, 10, 6), (22, 4, 11), (22, 8, 8), (23, 6, 10), (24, 4, 12), (25, 6, 11),
    (26, 8, 10), (27, 6, 12), (28, 8, 11), (29, 6, 13), (23, 14, 5),
)


def _parse_cell(text: str, line: int, source: str) -> Interval:
    low, sep, high = text.partition('-')
    if not low.isdigit() or (sep and not high.isdigit()):
        raise ParseError(line, f"bad table entry {text!r}", source)
    interval = (int(low), int(high) if sep else int(low))
    if interval[0] > interval[1]:
        raise ParseError(line, f"empty interval {text!r}", source)
    return interval


def parse_table1_text(text: str, source: str = '<string>') -> Dict[Cell, Interval]:
    '''
    Parse "n | v1 v2 ..." rows, one entry per k = 1..n-1
    '''
    table: Dict[Cell, Interval] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        head, sep, body = line.partition('|')
        if not sep or not head.strip().isdigit():
            raise ParseError(number, 'expected "n | values"', source)
        n = int(head)
        entries = body.split()
        if len(entries) != n - 1:
            raise ParseError(number, f"row n={n} has {len(entries)} entries, expected {n - 1}",
                             source)
        for k, entry in enumerate(entries, start=1):
            table[(n, k)] = _parse_cell(entry, number, source)
    return table


def table1_path() -> str:
    '''Location of the bundled table'''
    return os.path.join(os.path.dirname(__file__), TABLE1_RESOURCE)


def load_table1(path: Optional[str] = None, verify: bool = True) -> Dict[Cell, Interval]:
    '''
    Read the bundled table, refusing it when the checksum does not match
    '''
    path = path or table1_path()
    with open(path, 'rb') as handle:
        raw = handle.read()
    if verify:
        digest = hashlib.sha256(raw).hexdigest()
        if digest != TABLE1_SHA256:
            raise InvalidStateError(f"{path} checksum {digest} does not match {TABLE1_SHA256}")
    return parse_table1_text(raw.decode(DEFAULT_ENCODING), path)


def _residue_value(n: int, offsets: Dict[int, int]) -> Optional[int]:
    m, r = divmod(n, 31)
    if r not in offsets:
        return None
    return 16 * m + offsets[r]


class ReferenceTables(NamedTuple):
    '''
    Every frozen table, loaded once
    '''
    table1: Dict[Cell, Interval]
    small_values: Dict[Cell, int]
    imported_nonexistence: Tuple[Tuple[int, int, int], ...]

    @staticmethod
    def table2(n: int) -> Optional[int]:
        '''d_LCD(n, 5) for the residues the table covers'''
        if n < 5:
            return None
        value = _residue_value(n, TABLE2_OFFSETS)
        if value is None or value < 1:
            return None
        return value

    @staticmethod
    def table3(n: int) -> Optional[int]:
        '''d_one(n, 5) for the residues the table covers'''
        if n <= 5:
            return None
        return _residue_value(n, TABLE3_OFFSETS)

    def imported_upper(self, n: int, k: int) -> Optional[int]:
        '''
        Smallest d - 1 over imported facts "no [n, k, d] code with one-dimensional hull"
        '''
        bounds = [d - 1 for (fact_n, fact_k, d) in self.imported_nonexistence
                  if (fact_n, fact_k) == (n, k)]
        return min(bounds) if bounds else None


@lru_cache(maxsize=1)
def reference_tables() -> ReferenceTables:
    '''
    The process-wide tables
    '''
    table1 = load_table1()
    log.debug('Loaded %d reference cells for %d <= n <= %d',
              len(table1), TABLE1_MIN_LENGTH, TABLE1_MAX_LENGTH)
    return ReferenceTables(table1, dict(SMALL_VALUES), IMPORTED_NONEXISTENCE)
