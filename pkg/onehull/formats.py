'''
Text formats: the generator-matrix code file and the d_LCD data file

Code file: optional `#` comment lines, then `n k`, then k rows of n characters from {0,1}.
'''
import logging
from typing import Dict, List, NamedTuple, Sequence, Tuple

from onehull.exceptions import ParseError
from onehull.gf2core import BitMatrix

log = logging.getLogger(__name__)

COMMENT = '#'


class MatrixFile(NamedTuple):
    '''
    A parsed code file before any rank check
    '''
    n: int
    k: int
    matrix: BitMatrix
    comments: List[str]
    row_lines: List[int]


def _parse_ints(text: str, count: int, line: int, source: str, what: str) -> List[int]:
    fields = text.split(' ')
    if len(fields) != count or not all(field.isdigit() for field in fields):
        raise ParseError(line, f"expected {what} as {count} space-separated decimals, got {text!r}",
                         source)
    return [int(field) for field in fields]


def parse_matrix_text(text: str, source: str = '<string>') -> MatrixFile:
    '''
    Parse the code file format
    '''
    comments: List[str] = []
    header = None
    rows: List[str] = []
    row_lines: List[int] = []
    last_line = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        line = raw.rstrip('\r')
        if line.startswith(COMMENT):
            comments.append(line[1:].strip())
            continue
        if not line.strip():
            continue
        if header is None:
            n, k = _parse_ints(line.strip(), 2, number, source, 'header "n k"')
            if n < 1 or k < 1:
                raise ParseError(number, f"n and k must be positive, got n={n} k={k}", source)
            if k > n:
                raise ParseError(number, f"k={k} exceeds n={n}", source)
            header = (n, k)
            continue
        n, k = header
        if len(rows) == k:
            raise ParseError(number, f"unexpected extra row; header declares k={k}", source)
        row = line.strip()
        if len(row) != n:
            raise ParseError(number, f"row has {len(row)} characters, expected n={n}", source)
        if any(char not in '01' for char in row):
            raise ParseError(number, 'rows may only contain 0 and 1', source)
        rows.append(row)
        row_lines.append(number)
    if header is None:
        raise ParseError(last_line + 1, 'missing header "n k"', source)
    n, k = header
    if len(rows) != k:
        raise ParseError(last_line + 1, f"expected {k} rows, found {len(rows)}", source)
    return MatrixFile(n, k, BitMatrix.from_rows(rows), comments, row_lines)


def format_matrix_text(matrix: BitMatrix, comments: Sequence[str] = ()) -> str:
    '''
    Emit the code file format, comments first
    '''
    lines = [f"{COMMENT} {comment}" for comment in comments]
    lines.append(f"{matrix.cols} {matrix.rows}")
    lines.extend(matrix.to_strings())
    return '\n'.join(lines) + '\n'


def parse_header_comments(comments: Sequence[str]) -> Dict[str, str]:
    '''
    Collect `key=value` tokens from comment lines; other tokens are ignored
    '''
    header: Dict[str, str] = {}
    for comment in comments:
        for token in comment.split():
            key, sep, value = token.partition('=')
            if sep and key:
                header[key] = value
    return header


def parse_lcd_data(text: str, source: str = '<string>') -> Dict[Tuple[int, int], int]:
    '''
    Parse `n k d` lines of known d_LCD values
    '''
    values: Dict[Tuple[int, int], int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT, 1)[0].strip()
        if not line:
            continue
        n, k, d = _parse_ints(' '.join(line.split()), 3, number, source, '"n k d"')
        if not 1 <= k <= n or d < 1 or d > n:
            raise ParseError(number, f"implausible d_LCD entry n={n} k={k} d={d}", source)
        values[(n, k)] = d
    log.debug('Loaded %d d_LCD values from %s', len(values), source)
    return values


def parse_coordinates(text: str) -> List[int]:
    '''
    Parse "1,3,5-7" into sorted unique 1-based coordinates
    '''
    coordinates = set()
    for part in text.split(','):
        part = part.strip()
        if not part:
            continue
        low, sep, high = part.partition('-')
        if sep:
            coordinates.update(range(int(low), int(high) + 1))
        else:
            coordinates.add(int(low))
    return sorted(coordinates)
