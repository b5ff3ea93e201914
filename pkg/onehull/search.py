'''
Witness search, desk-scale nonexistence certificates and the d_one table reproduction
'''
import concurrent.futures
import hashlib
import logging
from collections import deque
from typing import (
    Callable, Dict, Hashable, Iterable, List, NamedTuple, Optional, Sequence, Tuple,
)

import numpy as np

from onehull.bounds import (
    BoundInterval, LcdOracle, best_bound, griesmer_max_d, sphere_packing_max_d, table1_lookup,
)
from onehull.code import LinearCode, certify
from onehull.constants import (
    BUILDUP_EXHAUSTIVE,
    BUILDUP_RANDOM,
    DUPLICATE_PARITY,
    EXHAUSTIVE_SYSTEMATIC,
    EXTEND_HULL_ONE,
    FORMAT_TEXT,
    FORMAT_TSV,
    GRIESMER,
    LOWER_ONLY,
    MATCHED,
    MAX_SEARCH_LENGTH,
    MAX_SYSTEMATIC_BITS,
    OPEN,
    PAD_SIMPLEX,
    PROVENANCE_SEPARATOR,
    PUNCTURE_OFF_HULL,
    SHORTEN_DERIVE,
    SPHERE_PACKING,
    STATUS_SHORT,
    STRATEGIES,
    UPPER_ONLY,
)
from onehull.constructions import (
    extend_hull_one, hull_one_from_lcd, lcd_to_hull_one_column, repetition_hull_one,
)
from onehull.exceptions import (
    EnumerationCapExceeded,
    InfeasibleSearchError,
    InvalidStateError,
    PreconditionError,
)
from onehull.formats import format_matrix_text
from onehull.gf2core import BitMatrix, int_rank, kernel_basis, popcount_each, rref
from onehull.records import CodeRecord, RecordStore
from onehull.settings import get_settings_value
from onehull.transforms import (
    duplicate_column_prepend, hull_support, pad_simplex, parity_column, puncture, shorten,
)

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 6
# Odd-weight x vectors drawn per sampled seed
SAMPLES_PER_SEED = 256
# Draws per seed row when looking for a row of weight >= d - 1
ROW_DRAWS = 64

Range = Tuple[int, int]
# (seed length, row, row, ...)
TaggedSeed = Tuple[int, ...]


def get_deterministic_hash(*inputs: Hashable, num_bytes: int = 8) -> int:
    '''A stable integer from the repr of the inputs'''
    input_bytes = repr(inputs).encode('utf-8')
    hash_bytes = hashlib.sha256(input_bytes).digest()
    return int.from_bytes(hash_bytes[:num_bytes], byteorder='big', signed=False)


class SearchConfig(NamedTuple):
    '''
    One search request.

    budget counts evaluated candidates; strata and workers fall back to the settings.
    seeds are LCD [n-1, k-1] or [n-2, k-1] codes for the building-up strategies and
    arbitrary starting codes for shorten-derive.
    '''
    n: int
    k: int
    target_d: int
    strategy: str = BUILDUP_RANDOM
    budget: Optional[int] = None
    seed: Optional[int] = None
    seeds: Tuple[LinearCode, ...] = ()
    strata: Optional[int] = None
    workers: Optional[int] = None

    def validate(self) -> None:
        '''
        Raise PreconditionError for an unusable configuration
        '''
        if self.strategy not in STRATEGIES:
            raise PreconditionError('search', f"unknown strategy {self.strategy!r}")
        if not 1 <= self.k < self.n:
            raise PreconditionError('search', f"needs 1 <= k < n, got n={self.n} k={self.k}")
        if self.n > MAX_SEARCH_LENGTH:
            raise PreconditionError('search', f"n={self.n} is above {MAX_SEARCH_LENGTH}")
        if self.target_d < 1:
            raise PreconditionError('search', 'the target distance must be positive')
        if self.budget is not None and self.budget < 1:
            raise PreconditionError('search', 'the budget must be positive')
        if self.strategy == EXHAUSTIVE_SYSTEMATIC and \
                self.k * (self.n - self.k) > MAX_SYSTEMATIC_BITS:
            raise PreconditionError(
                'search', f"exhaustive-systematic needs k(n-k) <= {MAX_SYSTEMATIC_BITS}, "
                f"got {self.k * (self.n - self.k)}")
        if self.strategy == BUILDUP_RANDOM and self.seed is None:
            raise PreconditionError('search', 'buildup-random needs an explicit seed')
        if self.strategy == SHORTEN_DERIVE:
            if self.budget is None:
                raise PreconditionError('search', 'shorten-derive needs a budget')
            return
        for seed_code in self.seeds:
            if seed_code.n not in (self.n - 1, self.n - 2) or seed_code.k != self.k - 1:
                raise PreconditionError(
                    'search', f"seed [{seed_code.n},{seed_code.k}] cannot build an "
                    f"[{self.n},{self.k}] code")

    @property
    def stratum_count(self) -> int:
        '''Number of strata the candidate stream is split into'''
        return max(1, self.strata or get_settings_value('search_strata'))

    @property
    def worker_count(self) -> int:
        '''Worker processes; 1 runs the strata in-process'''
        return max(1, self.workers or get_settings_value('workers'))


class SearchOutcome(NamedTuple):
    '''
    The best witness found, how many candidates were evaluated and whether the
    budget ran out before the candidate space did
    '''
    record: Optional[CodeRecord]
    scanned: int
    exhausted: bool


class _StratumResult(NamedTuple):
    rows: Optional[Tuple[int, ...]]
    d: int
    scanned: int
    exhausted: bool
    provenance: str


def _popcount(value: int) -> int:
    return bin(value).count('1')


def _span(rows: Sequence[int]) -> np.ndarray:
    span = np.zeros(1, dtype=np.uint64)
    for row in rows:
        span = np.concatenate([span, span ^ np.uint64(row)])
    return span


def _gram_rank(rows: Sequence[int]) -> int:
    gram_rows = [sum((_popcount(left & right) & 1) << index for index, right in enumerate(rows))
                 for left in rows]
    return int_rank(gram_rows)


def _share(budget: Optional[int], strata: int, stratum: int) -> Optional[int]:
    if budget is None:
        return None
    return budget // strata + (1 if stratum < budget % strata else 0)


def _canonical(rows: Sequence[int], n: int) -> Tuple[str, ...]:
    return tuple(rref(BitMatrix.from_ints(list(rows), n)).matrix.to_strings())


def _merge(n: int, results: Sequence[_StratumResult]) -> Optional[_StratumResult]:
    '''Largest d wins, then the smallest reduced echelon form'''
    found = [result for result in results if result.rows is not None]
    if not found:
        return None
    return min(found, key=lambda result: (-result.d, _canonical(result.rows, n)))


def _run_strata(worker: Callable[..., _StratumResult], arguments: Sequence[tuple],
                workers: int) -> List[_StratumResult]:
    if workers <= 1 or len(arguments) <= 1:
        return [worker(*args) for args in arguments]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(worker, *args) for args in arguments]
        return [future.result() for future in futures]


class _SystematicScan:
    '''
    Depth-first scan of generators [I_k | A] with the rows of A in non-decreasing order.

    A partial generator is dropped as soon as a combination of its rows has weight below
    d. Every surviving generator with the requested hull dimension is handed to `visit`,
    which returns True to stop the scan.
    '''

    def __init__(self, n: int, k: int, d: int, hull_dim: int,
                 visit: Callable[[List[int], int], bool], stratum: int = 0, strata: int = 1,
                 budget: Optional[int] = None, chunk: Optional[int] = None) -> None:
        self.k = k
        self.redundancy = n - k
        self.d = d
        self.hull_dim = hull_dim
        self.visit = visit
        self.stratum = stratum
        self.strata = strata
        self.budget = budget
        self.chunk = chunk or get_settings_value('search_chunk')
        self.scanned = 0
        self.nodes = 0
        self.exhausted = False

    def run(self) -> '_SystematicScan':
        '''Scan the whole stratum, or until visit or the budget stops it'''
        self._extend([], np.zeros(1, dtype=np.uint64), np.zeros(1, dtype=np.int64), 0)
        return self

    def rows(self, chosen: Sequence[int]) -> List[int]:
        '''Full generator rows, bit j at coordinate j'''
        return [(1 << index) | (value << self.k) for index, value in enumerate(chosen)]

    def _candidates(self, level: int, low: int, high: int) -> np.ndarray:
        values = np.arange(low, high, dtype=np.uint64)
        if level == 0 and self.strata > 1:
            values = values[values % np.uint64(self.strata) == np.uint64(self.stratum)]
        return values

    def _extend(self, chosen: List[int], span: np.ndarray, info: np.ndarray,
                start: int) -> bool:
        if len(chosen) == self.k:
            return self._leaf(chosen, span, info)
        self.nodes += 1
        limit = 1 << self.redundancy
        for low in range(start, limit, self.chunk):
            values = self._candidates(len(chosen), low, min(low + self.chunk, limit))
            keep = np.ones(len(values), dtype=bool)
            for word, weight in zip(span.tolist(), info.tolist()):
                keep &= popcount_each(values ^ np.uint64(word)) + (weight + 1) >= self.d
                if not keep.any():
                    break
            for value in values[keep].tolist():
                grown = np.concatenate([span, span ^ np.uint64(value)])
                if self._extend(chosen + [value], grown, np.concatenate([info, info + 1]), value):
                    return True
        return False

    def _leaf(self, chosen: List[int], span: np.ndarray, info: np.ndarray) -> bool:
        if self.budget is not None and self.scanned >= self.budget:
            self.exhausted = True
            return True
        self.scanned += 1
        rows = self.rows(chosen)
        if self.k - _gram_rank(rows) != self.hull_dim:
            return False
        distance = int((popcount_each(span[1:]) + info[1:]).min())
        return self.visit(rows, distance)


def _exhaustive_stratum(n: int, k: int, d: int, stratum: int, strata: int,
                        budget: Optional[int], chunk: int) -> _StratumResult:
    found: List[Tuple[Tuple[int, ...], int]] = []

    def visit(rows: List[int], distance: int) -> bool:
        found.append((tuple(rows), distance))
        return True

    scan = _SystematicScan(n, k, d, 1, visit, stratum, strata, budget, chunk).run()
    log.debug('Exhaustive stratum %d/%d of [%d,%d,%d]: %d generators, %d nodes',
              stratum, strata, n, k, d, scan.scanned, scan.nodes)
    provenance = f"{EXHAUSTIVE_SYSTEMATIC}:stratum={stratum}"
    if found:
        rows, distance = found[0]
        return _StratumResult(rows, distance, scan.scanned, False, provenance)
    return _StratumResult(None, 0, scan.scanned, scan.exhausted, provenance)


def _dual_rows(rows: Sequence[int], length: int) -> List[int]:
    return kernel_basis(BitMatrix.from_ints(list(rows), length)).to_ints()


def _combine(basis: Sequence[int], coefficients: np.ndarray) -> np.ndarray:
    values = np.zeros(len(coefficients), dtype=np.uint64)
    for index, row in enumerate(basis):
        selected = ((coefficients >> np.uint64(index)) & np.uint64(1)).astype(bool)
        values[selected] ^= np.uint64(row)
    return values


def _odd(values: np.ndarray) -> np.ndarray:
    return values[(popcount_each(values) & 1) == 1]


class _Seed(NamedTuple):
    '''
    An LCD seed as integer rows with its codeword span.

    A seed of length n-1 feeds the one-column building-up [1 x; 0 G] with x in the
    dual; a seed of length n-2 feeds the two-column building-up with any odd x.
    '''
    rows: Tuple[int, ...]
    length: int
    two_column: bool
    span: np.ndarray
    distance: int

    @classmethod
    def of(cls, tagged: TaggedSeed, n: int) -> '_Seed':
        '''Unpack a (length, rows...) tuple'''
        length, rows = tagged[0], tuple(tagged[1:])
        span = _span(rows)
        distance = int(popcount_each(span[1:]).min()) if rows else length + 1
        return cls(rows, length, length == n - 2, span, distance)

    def reaches(self, d: int) -> bool:
        '''
        Whether some x can lift this seed to distance d

        (y, y, c) weighs wt(c) + 2y after two columns, (0, c) keeps wt(c) after one
        '''
        return self.distance >= (d - 2 if self.two_column else d)

    @property
    def is_lcd(self) -> bool:
        '''GG^T nonsingular'''
        return _gram_rank(self.rows) == len(self.rows)

    def distances(self, xs: np.ndarray) -> np.ndarray:
        '''
        Minimum distance of the built code for every candidate x
        '''
        if self.two_column:
            best = np.full(len(xs), self.length + 2, dtype=np.int64)
        else:
            best = np.full(len(xs), self.distance, dtype=np.int64)
        for word in self.span.tolist():
            word64 = np.uint64(word)
            best = np.minimum(best, popcount_each(xs ^ word64) + 1)
            if self.two_column and word:
                parity = popcount_each(xs & word64) & 1
                best = np.minimum(best, _popcount(word) + 2 * parity)
        return best

    def generator(self, x: int) -> List[int]:
        '''
        Rows [1 x; 0 G] for one column, (1, 0, x) and (y_i, y_i, r_i) for two
        '''
        if not self.two_column:
            return [1 | (x << 1)] + [row << 1 for row in self.rows]
        rows = [1 | (x << 2)]
        for row in self.rows:
            rows.append((3 if _popcount(x & row) & 1 else 0) | (row << 2))
        return rows

    def first_hit(self, xs: np.ndarray, target: int) -> Optional[Tuple[int, int]]:
        '''First x, in stream order, reaching the target distance'''
        if not len(xs):
            return None
        distances = self.distances(xs)
        hits = np.flatnonzero(distances >= target)
        if not len(hits):
            return None
        first = int(hits[0])
        return int(xs[first]), int(distances[first])


def _buildup_exhaustive_stratum(n: int, d: int, tagged: Sequence[TaggedSeed], stratum: int,
                                strata: int, budget: Optional[int],
                                chunk: int) -> _StratumResult:
    scanned = 0
    for index, entry in enumerate(tagged):
        if index % strata != stratum:
            continue
        seed = _Seed.of(entry, n)
        if not seed.reaches(d) or not seed.is_lcd:
            scanned += 1
            continue
        dual = [] if seed.two_column else _dual_rows(seed.rows, seed.length)
        space = 1 << (seed.length if seed.two_column else len(dual))
        for low in range(0, space, chunk):
            high = min(low + chunk, space)
            if budget is not None:
                high = min(high, low + budget - scanned)
                if high <= low:
                    return _StratumResult(None, 0, scanned, True, '')
            counters = np.arange(low, high, dtype=np.uint64)
            xs = _odd(counters if seed.two_column else _combine(dual, counters))
            scanned += high - low
            hit = seed.first_hit(xs, d)
            if hit is not None:
                x, distance = hit
                provenance = f"{BUILDUP_EXHAUSTIVE}:seed={index}:stratum={stratum}"
                return _StratumResult(tuple(seed.generator(x)), distance, scanned, False,
                                      provenance)
    return _StratumResult(None, 0, scanned, False, '')


def _random_seed(rng: np.random.Generator, n: int, k: int, d: int) -> TaggedSeed:
    '''Systematic [I_{k-1} | A] seed of length n-1, rows of A drawn with weight >= d-1'''
    redundancy = n - k
    rows = []
    for index in range(k - 1):
        draws = rng.integers(0, 1 << redundancy, size=ROW_DRAWS, dtype=np.uint64)
        heavy = draws[popcount_each(draws) >= d - 1]
        value = int(heavy[0]) if len(heavy) else int(draws[0])
        rows.append((1 << index) | (value << (k - 1)))
    return (n - 1,) + tuple(rows)


def _buildup_random_stratum(n: int, k: int, d: int, tagged: Sequence[TaggedSeed],
                            entropy: int, stratum: int, budget: int) -> _StratumResult:
    rng = np.random.default_rng(entropy)
    scanned = 0
    while scanned < budget:
        if tagged:
            seed = _Seed.of(tagged[int(rng.integers(0, len(tagged)))], n)
        else:
            seed = _Seed.of(_random_seed(rng, n, k, d), n)
        if not seed.reaches(d) or not seed.is_lcd:
            scanned += 1
            continue
        samples = min(SAMPLES_PER_SEED, budget - scanned)
        if seed.two_column:
            xs = rng.integers(0, 1 << seed.length, size=samples, dtype=np.uint64)
        else:
            dual = _dual_rows(seed.rows, seed.length)
            xs = _combine(dual, rng.integers(0, 1 << len(dual), size=samples, dtype=np.uint64))
        scanned += samples
        hit = seed.first_hit(_odd(xs), d)
        if hit is not None:
            x, distance = hit
            provenance = f"{BUILDUP_RANDOM}:entropy={entropy}"
            return _StratumResult(tuple(seed.generator(x)), distance, scanned, False,
                                  provenance)
    return _StratumResult(None, 0, scanned, True, '')


def _lcd_seeds(n: int, k: int, d: int) -> List[TaggedSeed]:
    '''
    Every systematic LCD [n-1, k-1] seed of distance >= d, rows of A non-decreasing
    '''
    if (k - 1) * (n - k) > MAX_SYSTEMATIC_BITS:
        raise PreconditionError(
            'search', f"generating LCD [{n - 1},{k - 1}] seeds needs (k-1)(n-k) <= "
            f"{MAX_SYSTEMATIC_BITS}; pass seeds instead")
    seeds: List[TaggedSeed] = []

    def visit(rows: List[int], _distance: int) -> bool:
        seeds.append((n - 1,) + tuple(rows))
        return False

    _SystematicScan(n - 1, k - 1, d, 0, visit).run()
    log.debug('Generated %d LCD [%d,%d,>=%d] seeds', len(seeds), n - 1, k - 1, d)
    return seeds


def _tagged_seeds(cfg: SearchConfig) -> List[TaggedSeed]:
    return [(seed.n,) + tuple(seed.generator.to_ints()) for seed in cfg.seeds]


def _record(n: int, rows: Sequence[int], provenance: str) -> CodeRecord:
    record = certify(LinearCode(BitMatrix.from_ints(list(rows), n)), provenance)
    if record.hull_dim != 1:
        raise InvalidStateError(
            f"search produced a [{record.n},{record.k}] code with hull {record.hull_dim}")
    return record


def _outcome(n: int, results: Sequence[_StratumResult]) -> SearchOutcome:
    scanned = sum(result.scanned for result in results)
    best = _merge(n, results)
    if best is None:
        return SearchOutcome(None, scanned, any(result.exhausted for result in results))
    return SearchOutcome(_record(n, best.rows, best.provenance), scanned, False)


def _exhaustive(cfg: SearchConfig) -> SearchOutcome:
    strata = cfg.stratum_count
    chunk = get_settings_value('search_chunk')
    arguments = [(cfg.n, cfg.k, cfg.target_d, stratum, strata,
                  _share(cfg.budget, strata, stratum), chunk) for stratum in range(strata)]
    return _outcome(cfg.n, _run_strata(_exhaustive_stratum, arguments, cfg.worker_count))


def _buildup_exhaustive(cfg: SearchConfig) -> SearchOutcome:
    strata = cfg.stratum_count
    chunk = get_settings_value('search_chunk')
    tagged = _tagged_seeds(cfg) or _lcd_seeds(cfg.n, cfg.k, cfg.target_d)
    arguments = [(cfg.n, cfg.target_d, tagged, stratum, strata,
                  _share(cfg.budget, strata, stratum), chunk) for stratum in range(strata)]
    return _outcome(cfg.n, _run_strata(_buildup_exhaustive_stratum, arguments,
                                       cfg.worker_count))


def _buildup_random(cfg: SearchConfig) -> SearchOutcome:
    strata = cfg.stratum_count
    budget = cfg.budget or DEFAULT_BUDGET
    tagged = _tagged_seeds(cfg)
    arguments = []
    for stratum in range(strata):
        share = _share(budget, strata, stratum)
        if share:
            entropy = get_deterministic_hash(cfg.seed, cfg.n, cfg.k, cfg.target_d, stratum)
            arguments.append((cfg.n, cfg.k, cfg.target_d, tagged, entropy, stratum, share))
    return _outcome(cfg.n, _run_strata(_buildup_random_stratum, arguments, cfg.worker_count))


def _chain(record: CodeRecord, step: str) -> str:
    return f"{record.provenance}{PROVENANCE_SEPARATOR}{step}"


def _child(record: CodeRecord, code: LinearCode, step: str) -> Optional[CodeRecord]:
    try:
        return certify(code, _chain(record, step))
    except EnumerationCapExceeded as error:
        log.warning('Skipping %s of [%d,%d,%d]: %s', step, record.n, record.k, record.d, error)
        return None


def derive_from_transforms(record: CodeRecord) -> List[CodeRecord]:
    '''
    Certified children of a one-dimensional-hull record under every transform that
    keeps the hull one-dimensional and the distance from dropping:
    simplex padding (k >= 3), duplicated parity column (odd d), the parity-flipping
    extension (odd k) and puncturing off the hull support (even-like codes)
    '''
    if record.hull_dim != 1:
        log.debug('No transforms apply to a hull of dimension %d', record.hull_dim)
        return []
    code = LinearCode(record.generator)
    children: List[Optional[CodeRecord]] = []
    if record.k >= 3:
        children.append(_child(record, pad_simplex(code, 1), PAD_SIMPLEX))
    if record.d % 2:
        children.append(_child(record, duplicate_column_prepend(code, parity_column(code)),
                               DUPLICATE_PARITY))
    if record.k % 2:
        children.append(_child(record, extend_hull_one(code), EXTEND_HULL_ONE))
    if record.even_like:
        support = set(hull_support(code))
        outside = [coordinate for coordinate in range(1, record.n + 1)
                   if coordinate not in support]
        if outside:
            child = _child(record, puncture(code, [outside[0]]),
                           f"{PUNCTURE_OFF_HULL}@{outside[0]}")
            if child is not None and child.hull_dim == 1 and child.k == record.k:
                children.append(child)
            else:
                log.debug('Puncturing [%d,%d] at %d lost the one-dimensional hull',
                          record.n, record.k, outside[0])
    derived = [child for child in children if child is not None]
    for child in derived:
        if child.hull_dim != 1:
            raise InvalidStateError(f"{child.provenance} has hull dimension {child.hull_dim}")
    log.debug('Derived %d children from [%d,%d,%d]', len(derived), record.n, record.k, record.d)
    return derived


def _single_coordinate(record: CodeRecord, name: str,
                       operation: Callable[[LinearCode, List[int]], LinearCode],
                       k: int) -> Iterable[Optional[CodeRecord]]:
    code = LinearCode(record.generator)
    for coordinate in range(1, record.n + 1):
        try:
            child = operation(code, [coordinate])
        except PreconditionError:
            continue
        if child.k == k:
            yield _child(record, child, f"{name}@{coordinate}")


def _moves(record: CodeRecord, n: int, k: int) -> List[CodeRecord]:
    '''Children that move the record toward (n, k)'''
    extra_length, extra_dimension = record.n - n, record.k - k
    if extra_dimension < 0:
        return []
    children: List[Optional[CodeRecord]] = []
    if record.hull_dim == 0:
        code = LinearCode(record.generator)
        found = hull_one_from_lcd(code)
        if found is not None:
            name, coordinate, child = found
            children.append(_child(record, child, f"{name}@{coordinate}"))
        if record.k % 2:
            children.append(_child(record, lcd_to_hull_one_column(code),
                                   'lcd_to_hull_one_column'))
    elif record.hull_dim == 1:
        if extra_length < extra_dimension:
            children.extend(derive_from_transforms(record))
        else:
            if extra_dimension > 0:
                children.extend(_single_coordinate(record, 'shorten', shorten, record.k - 1))
            if extra_length > extra_dimension:
                children.extend(_single_coordinate(record, 'puncture', puncture, record.k))
    return [child for child in children if child is not None and child.hull_dim <= 1]


def _shorten_derive(cfg: SearchConfig, sources: Sequence[CodeRecord]) -> SearchOutcome:
    pool = [certify(code, 'seed') for code in cfg.seeds] + list(sources)
    queue = deque(pool)
    seen = {(record.n, record.canonical_rows()) for record in pool}
    spent = 0
    while queue:
        record = queue.popleft()
        if (record.n, record.k, record.hull_dim) == (cfg.n, cfg.k, 1):
            if record.d >= cfg.target_d:
                return SearchOutcome(record, spent, False)
            continue
        for child in _moves(record, cfg.n, cfg.k):
            spent += 1
            if spent > cfg.budget:
                return SearchOutcome(None, spent - 1, True)
            key = (child.n, child.canonical_rows())
            if key not in seen:
                seen.add(key)
                queue.append(child)
    return SearchOutcome(None, spent, False)


def check_feasible(n: int, k: int, d: int) -> None:
    '''
    Raise InfeasibleSearchError when d is above the Griesmer or sphere packing maximum
    '''
    for source, bound in ((GRIESMER, griesmer_max_d(n, k)),
                          (SPHERE_PACKING, sphere_packing_max_d(n, k))):
        if d > bound:
            raise InfeasibleSearchError(n, k, d, bound, source)


def search(cfg: SearchConfig, sources: Sequence[CodeRecord] = ()) -> SearchOutcome:
    '''
    Run one strategy; `sources` feeds shorten-derive alongside cfg.seeds
    '''
    cfg.validate()
    check_feasible(cfg.n, cfg.k, cfg.target_d)
    log.info('Searching [%d,%d,>=%d] with %s', cfg.n, cfg.k, cfg.target_d, cfg.strategy)
    if cfg.strategy == SHORTEN_DERIVE:
        outcome = _shorten_derive(cfg, sources)
    elif cfg.k == 1:
        record = certify(repetition_hull_one(cfg.n), 'repetition')
        outcome = SearchOutcome(record if record.d >= cfg.target_d else None, 1, False)
    elif cfg.strategy == EXHAUSTIVE_SYSTEMATIC:
        outcome = _exhaustive(cfg)
    elif cfg.strategy == BUILDUP_EXHAUSTIVE:
        outcome = _buildup_exhaustive(cfg)
    else:
        outcome = _buildup_random(cfg)
    if outcome.record is not None:
        log.info('Found [%d,%d,%d] after %d candidates (%s)', outcome.record.n,
                 outcome.record.k, outcome.record.d, outcome.scanned, outcome.record.provenance)
    else:
        log.info('No [%d,%d,>=%d] witness after %d candidates%s', cfg.n, cfg.k, cfg.target_d,
                 outcome.scanned, ', budget exhausted' if outcome.exhausted else '')
    return outcome


def find_code(cfg: SearchConfig, sources: Sequence[CodeRecord] = ()) -> Optional[CodeRecord]:
    '''
    A certified record with d >= target_d and a one-dimensional hull, or None
    '''
    return search(cfg, sources).record


class NonexistenceCertificate(NamedTuple):
    '''
    Outcome of an exhaustive scan for [n, k, >=d] codes with one-dimensional hull
    '''
    n: int
    k: int
    d: int
    witness: Optional[CodeRecord]
    scanned: int

    @property
    def exists(self) -> bool:
        '''A witness turned up'''
        return self.witness is not None

    def to_text(self) -> str:
        '''The certificate file body'''
        lines = [
            f"# onehull exhaustive certificate n={self.n} k={self.k} d={self.d}",
            f"result={'exists' if self.exists else 'nonexistent'}",
            f"method={EXHAUSTIVE_SYSTEMATIC}",
            f"scanned={self.scanned}",
        ]
        if self.exists:
            lines.append(f"claim: a [{self.n},{self.k},{self.witness.d}] code with "
                         'one-dimensional hull exists')
            lines.append('witness:')
            lines.append(format_matrix_text(self.witness.generator).rstrip('\n'))
        else:
            lines.extend([
                f"claim: no [{self.n},{self.k},>={self.d}] binary code has a one-dimensional hull",
                'reduction: every code is permutation-equivalent to one generated by [I_k | A]',
                'reduction: hull dimension and minimum distance are permutation-invariant',
                'reduction: rows of A are scanned in non-decreasing order, covering every '
                'reordering of the information set',
                'pruning: a partial generator is dropped once a combination of its rows has '
                'weight below d',
            ])
        return '\n'.join(lines) + '\n'


def exhaustive_nonexistence(n: int, k: int, d: int,
                            workers: Optional[int] = None) -> NonexistenceCertificate:
    '''
    Scan every systematic generator for a one-dimensional hull and distance >= d
    '''
    if not 1 <= k < n:
        raise PreconditionError('exhaustive_nonexistence', f"needs 1 <= k < n, got n={n} k={k}")
    if k * (n - k) > MAX_SYSTEMATIC_BITS:
        raise PreconditionError(
            'exhaustive_nonexistence',
            f"k(n-k) = {k * (n - k)} is above the {MAX_SYSTEMATIC_BITS} bit guard")
    if d < 1:
        raise PreconditionError('exhaustive_nonexistence', 'd must be positive')
    cfg = SearchConfig(n, k, d, EXHAUSTIVE_SYSTEMATIC, workers=workers)
    outcome = _exhaustive(cfg)
    certificate = NonexistenceCertificate(n, k, d, outcome.record, outcome.scanned)
    log.info('[%d,%d,>=%d] with one-dimensional hull: %s after %d generators', n, k, d,
             'exists' if certificate.exists else 'nonexistent', certificate.scanned)
    return certificate


class DOneDetermination(NamedTuple):
    '''
    Exact d_one(n, k) with a witness and the certificate ruling out value + 1
    '''
    n: int
    k: int
    value: int
    witness: CodeRecord
    certificate: Optional[NonexistenceCertificate]


def determine_d_one(n: int, k: int, workers: Optional[int] = None) -> DOneDetermination:
    '''
    Walk d down from min(Griesmer, sphere packing) until an exhaustive scan finds a
    witness; the previous scan certifies the value is exact
    '''
    top = min(griesmer_max_d(n, k), sphere_packing_max_d(n, k))
    previous: Optional[NonexistenceCertificate] = None
    for d in range(top, 0, -1):
        certificate = exhaustive_nonexistence(n, k, d, workers)
        if certificate.exists:
            return DOneDetermination(n, k, certificate.witness.d, certificate.witness, previous)
        previous = certificate
    raise InvalidStateError(f"no [{n},{k}] code with one-dimensional hull was found")


class CellReport(NamedTuple):
    '''
    One (n, k) cell of the reproduced table
    '''
    n: int
    k: int
    reference: Optional[BoundInterval]
    bound: BoundInterval
    witness: Optional[CodeRecord]
    status: str

    @property
    def target(self) -> BoundInterval:
        '''The frozen value when there is one, the computed bound otherwise'''
        return self.reference or self.bound

    def value_text(self) -> str:
        '''"7" or "5-6"'''
        target = self.target
        return str(target.lower) if target.exact else f"{target.lower}-{target.upper}"


def cell_status(target: BoundInterval, upper: int, witness: Optional[CodeRecord]) -> str:
    '''
    MATCHED when a witness reaches the value and the bound closes it from above
    '''
    if not target.exact:
        return OPEN
    lower_met = witness is not None and witness.d >= target.lower
    upper_met = upper <= target.upper
    if lower_met and upper_met:
        return MATCHED
    if lower_met:
        return LOWER_ONLY
    if upper_met:
        return UPPER_ONLY
    return OPEN


class Table1Report:
    '''
    Cells keyed by (n, k), rendered as a grid with lengths down and dimensions across
    '''

    def __init__(self, cells: Iterable[CellReport]) -> None:
        self.cells: Dict[Tuple[int, int], CellReport] = {(cell.n, cell.k): cell for cell in cells}

    def cell(self, n: int, k: int) -> CellReport:
        '''The (n, k) cell'''
        return self.cells[(n, k)]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells[key] for key in sorted(self.cells))

    def counts(self) -> Dict[str, int]:
        '''Cells per status'''
        totals = {status: 0 for status in STATUS_SHORT}
        for cell in self.cells.values():
            totals[cell.status] += 1
        return totals

    def _grid(self, render: Callable[[CellReport], str]) -> List[List[str]]:
        lengths = sorted({n for n, _ in self.cells})
        dimensions = sorted({k for _, k in self.cells})
        grid = [['n\\k'] + [str(k) for k in dimensions]]
        for n in lengths:
            grid.append([str(n)] + [render(self.cells[(n, k)]) if (n, k) in self.cells else ''
                                    for k in dimensions])
        return grid

    def _summary(self) -> str:
        return '# ' + ' '.join(f"{status}={count}" for status, count in self.counts().items())

    def to_tsv(self) -> str:
        '''Value grid, then the status grid, tab separated'''
        values = self._grid(lambda cell: cell.value_text())
        statuses = self._grid(lambda cell: STATUS_SHORT[cell.status])
        lines = ['\t'.join(row) for row in values]
        lines.append('# status')
        lines.extend('\t'.join(row) for row in statuses)
        lines.append(self._summary())
        return '\n'.join(lines) + '\n'

    def to_text(self) -> str:
        '''Aligned grid with the status letter after each value'''
        grid = self._grid(lambda cell: f"{cell.value_text()}{STATUS_SHORT[cell.status]}")
        widths = [max(len(row[column]) for row in grid) for column in range(len(grid[0]))]
        lines = ['  '.join(entry.rjust(width) for entry, width in zip(row, widths)).rstrip()
                 for row in grid]
        lines.append(self._summary())
        return '\n'.join(lines) + '\n'

    def render(self, output_format: str = FORMAT_TSV) -> str:
        '''to_tsv or to_text'''
        if output_format == FORMAT_TEXT:
            return self.to_text()
        return self.to_tsv()


def _cells(n_range: Range, k_range: Range) -> Iterable[Tuple[int, int]]:
    for n in range(n_range[0], n_range[1] + 1):
        for k in range(max(1, k_range[0]), min(k_range[1], n - 1) + 1):
            yield n, k


def _cell(n: int, k: int, witness: Optional[CodeRecord], import_upper: bool,
          d_lcd_oracle: Optional[LcdOracle]) -> CellReport:
    reference = table1_lookup(n, k)
    bound = best_bound(n, k, d_lcd_oracle, use_tables=import_upper)
    if witness is not None and witness.d > bound.upper:
        raise InvalidStateError(
            f"witness [{n},{k},{witness.d}] ({witness.provenance}) beats the upper bound {bound}")
    target = reference or bound
    return CellReport(n, k, reference, bound, witness, cell_status(target, bound.upper, witness))


def _stored(store: Optional[RecordStore]) -> Dict[Tuple[int, int], CodeRecord]:
    if store is None:
        return {}
    return {key: record for key, record in store.scan().collection().items()
            if record.hull_dim == 1}


def tabulate(n_range: Range, k_range: Range, store: Optional[RecordStore] = None,
             import_upper: bool = True, d_lcd_oracle: Optional[LcdOracle] = None
             ) -> Table1Report:
    '''
    Bounds merged with stored witnesses, no searching
    '''
    witnesses = _stored(store)
    return Table1Report(_cell(n, k, witnesses.get((n, k)), import_upper, d_lcd_oracle)
                        for n, k in _cells(n_range, k_range))


def _witness_search(n: int, k: int, d: int, budget: int, seed: int) -> Optional[CodeRecord]:
    if k * (n - k) <= MAX_SYSTEMATIC_BITS:
        cfg = SearchConfig(n, k, d, EXHAUSTIVE_SYSTEMATIC, budget=budget)
    else:
        cfg = SearchConfig(n, k, d, BUILDUP_RANDOM, budget=budget, seed=seed)
    try:
        return find_code(cfg)
    except InfeasibleSearchError as error:
        log.warning('Skipping [%d,%d,%d]: %s', n, k, d, error)
        return None


def reproduce_table1(n_range: Range, k_range: Range, budget: int, seed: int = 0,
                     store: Optional[RecordStore] = None, import_upper: bool = True,
                     d_lcd_oracle: Optional[LcdOracle] = None) -> Table1Report:
    '''
    Try to reach every cell's value with stored records, derived children and
    search, then close it from above with the bounds
    '''
    pool = _stored(store)
    cells = []
    for n, k in _cells(n_range, k_range):
        target = table1_lookup(n, k) or best_bound(n, k, d_lcd_oracle, use_tables=import_upper)
        witness = pool.get((n, k))
        if witness is None or witness.d < target.lower:
            found = _witness_search(n, k, target.lower, budget, seed)
            if found is not None and (witness is None or found.is_better_than(witness)):
                witness = found
        if witness is not None:
            pool[(n, k)] = witness
            if store is not None:
                store.save(witness)
            for child in derive_from_transforms(witness):
                current = pool.get((child.n, child.k))
                if child.n <= n_range[1] and (current is None or child.is_better_than(current)):
                    pool[(child.n, child.k)] = child
        cells.append(_cell(n, k, witness, import_upper, d_lcd_oracle))
    report = Table1Report(cells)
    log.info('Reproduced %d cells: %s', len(report), report.counts())
    return report
