'''
Certified code records and the on-disk record store
'''
import logging
import os
from datetime import datetime
from typing import Any, List, Optional, Tuple

from dateutil.tz import tzutc

from onehull.attributes import (
    AttributeContainer,
    BooleanAttribute,
    NumberAttribute,
    UnicodeAttribute,
    UTCDateTimeAttribute,
)
from onehull.constants import (
    CODE_FILE_SUFFIX, DEFAULT_ENCODING, NONEXIST_FILE_TEMPLATE, RECORD_FILE_TEMPLATE,
)
from onehull.exceptions import ParseError, RecordDoesNotExist
from onehull.formats import format_matrix_text, parse_header_comments, parse_matrix_text
from onehull.gf2core import BitMatrix, rref
from onehull.results import Results

log = logging.getLogger(__name__)

FIRST_HEADER_LINE = ('d', 'hull', 'provenance')


def utc_now() -> datetime:
    '''Current UTC time'''
    return datetime.now(tz=tzutc())


class CodeRecord(AttributeContainer):
    '''
    A certified (n, k, d, hull dimension) witness together with its generator
    '''
    n = NumberAttribute()
    k = NumberAttribute()
    d = NumberAttribute()
    hull_dim = NumberAttribute(attr_name='hull')
    even_like = BooleanAttribute()
    provenance = UnicodeAttribute(default='unknown')
    certified_at = UTCDateTimeAttribute(null=True)

    def __init__(self, generator: BitMatrix, **attributes: Any) -> None:
        attributes.setdefault('n', generator.cols)
        attributes.setdefault('k', generator.rows)
        super().__init__(**attributes)
        self.generator = generator

    def canonical_rows(self) -> Tuple[str, ...]:
        '''Rows of the reduced echelon form, used for tie-breaking'''
        return tuple(rref(self.generator).matrix.to_strings())

    def is_better_than(self, other: 'CodeRecord') -> bool:
        '''Higher distance wins; equal distance falls back to the smaller echelon form'''
        if self.d != other.d:
            return self.d > other.d
        return self.canonical_rows() < other.canonical_rows()

    def with_provenance(self, provenance: str) -> 'CodeRecord':
        '''Copy with a different provenance'''
        values = dict(self.attribute_values)
        values['provenance'] = provenance
        return CodeRecord(self.generator, **values)

    def to_text(self) -> str:
        '''The code file format with the record header as comment lines'''
        header = self.serialize_header()
        header.pop('n')
        header.pop('k')
        first = ' '.join(f"{key}={header.pop(key)}" for key in FIRST_HEADER_LINE)
        rest = ' '.join(f"{key}={value}" for key, value in sorted(header.items()))
        return format_matrix_text(self.generator, [first, rest])

    @classmethod
    def from_text(cls, text: str, source: str = '<string>') -> 'CodeRecord':
        '''Inverse of to_text'''
        parsed = parse_matrix_text(text, source)
        values = cls.deserialize_header(parse_header_comments(parsed.comments))
        for key in ('d', 'hull_dim'):
            if key not in values:
                raise ParseError(1, f"record header is missing {key}", source)
        values['n'] = parsed.n
        values['k'] = parsed.k
        return cls(parsed.matrix, **values)

    def __repr__(self) -> str:
        return (f"CodeRecord(n={self.n}, k={self.k}, d={self.d}, hull={self.hull_dim}, "
                f"provenance={self.provenance!r})")


class RecordStore:
    '''
    One record file per (n, k) under a directory
    '''

    def __init__(self, directory: str) -> None:
        self.directory = directory

    def path(self, n: int, k: int) -> str:
        '''File holding the (n, k) record'''
        return os.path.join(self.directory, RECORD_FILE_TEMPLATE.format(n=n, k=k))

    def exists(self, n: int, k: int) -> bool:
        '''True when a record for (n, k) is stored'''
        return os.path.isfile(self.path(n, k))

    def get(self, n: int, k: int) -> CodeRecord:
        '''
        Load the (n, k) record
        '''
        path = self.path(n, k)
        if not os.path.isfile(path):
            raise RecordDoesNotExist(n, k)
        with open(path, 'r', encoding=DEFAULT_ENCODING) as handle:
            return CodeRecord.from_text(handle.read(), path)

    def save(self, record: CodeRecord, only_if_better: bool = True) -> bool:
        '''
        Write the record; with only_if_better an equal or better stored record is kept
        '''
        if only_if_better and self.exists(record.n, record.k):
            current = self.get(record.n, record.k)
            if not record.is_better_than(current):
                log.debug('Keeping stored [%d,%d,%d] record', current.n, current.k, current.d)
                return False
        os.makedirs(self.directory, exist_ok=True)
        if record.certified_at is None:
            record.certified_at = utc_now()
        with open(self.path(record.n, record.k), 'w', encoding=DEFAULT_ENCODING) as handle:
            handle.write(record.to_text())
        log.info('Stored [%d,%d,%d] hull=%d record', record.n, record.k, record.d, record.hull_dim)
        return True

    def delete(self, n: int, k: int) -> None:
        '''Remove the (n, k) record'''
        if not self.exists(n, k):
            raise RecordDoesNotExist(n, k)
        os.remove(self.path(n, k))

    def scan(self) -> Results:
        '''
        Every stored record
        '''
        records: List[CodeRecord] = []
        if os.path.isdir(self.directory):
            for name in sorted(os.listdir(self.directory)):
                if not name.endswith(CODE_FILE_SUFFIX):
                    continue
                with open(os.path.join(self.directory, name), 'r',
                          encoding=DEFAULT_ENCODING) as handle:
                    records.append(CodeRecord.from_text(handle.read(), name))
        return Results(records)

    def best_distance(self, n: int, k: int) -> Optional[int]:
        '''d of the stored record, if any'''
        if not self.exists(n, k):
            return None
        return self.get(n, k).d

    def write_certificate(self, n: int, k: int, d: int, text: str) -> str:
        '''Write a nonexistence certificate and return its path'''
        os.makedirs(self.directory, exist_ok=True)
        path = os.path.join(self.directory, NONEXIST_FILE_TEMPLATE.format(n=n, k=k, d=d))
        with open(path, 'w', encoding=DEFAULT_ENCODING) as handle:
            handle.write(text)
        log.info('Wrote nonexistence certificate %s', path)
        return path
