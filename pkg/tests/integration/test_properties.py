'''
Randomized checks over small codes.

Each test runs twice through the runs fixture: a quick count (property_runs, or
ONEHULL_PROPERTY_RUNS) and, under the slow marker, full_property_runs instances.
'''

from onehull.code import (
    dual,
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
    hyperbolize,
    inverse_build_up,
    inverse_build_up_one,
    orthonormalize,
)
from onehull.exceptions import PreconditionError
from onehull.gf2core import BitVector, gram, rank
from onehull.transforms import (
    column_multiplicities, pad_simplex, puncture, shorten, strip_simplex,
)


def random_vector(rng, length):
    return BitVector.from_bits(rng.integers(0, 2, size=length).tolist())


def random_odd_vector(rng, length):
    while True:
        vector = random_vector(rng, length)
        if vector.weight() % 2:
            return vector


def random_shape(rng, low=3, high=12):
    n = int(rng.integers(low, high + 1))
    return n, int(rng.integers(1, n))


def random_lcd(random_code, n, k):
    while True:
        code = random_code(n, k)
        if is_lcd(code):
            return code


def brute_force_distance(code):
    return min(word.weight() for word in code.codewords() if not word.is_zero())


def test_hull_dimension_matches_gram(rng, random_code, runs):
    '''
    dim hull = k - rank(GG^T) and the hull basis lies in both C and its dual
    '''
    for _ in range(runs):
        code = random_code(*random_shape(rng))
        info = hull(code)
        assert info.dimension == code.k - rank(gram(code.generator))
        for row in info.basis.iter_rows():
            assert code.contains(row)
            assert code.is_orthogonal_to(row)


def test_dual_is_an_involution(rng, random_code, runs):
    for _ in range(runs):
        code = random_code(*random_shape(rng))
        other = dual(code)
        assert other.k == code.n - code.k
        for row in other.rows():
            assert code.is_orthogonal_to(row)
        assert dual(other).same_code(code)
        assert hull_dimension(other) == hull_dimension(code)


def test_weight_profile_matches_brute_force(rng, random_code, runs):
    for _ in range(runs):
        n = int(rng.integers(2, 13))
        code = random_code(n, int(rng.integers(1, min(n, 8) + 1)))
        profile = weight_profile(code)
        assert profile.min_distance == brute_force_distance(code)
        assert sum(count for _, count in profile.distribution) == 2 ** code.k - 1
        assert profile.even_like == all(word.weight() % 2 == 0 for word in code.codewords())


def test_build_up_round_trip(rng, random_code, runs):
    '''
    build_up gives a one-dimensional hull; inverting it gives back an LCD seed
    that rebuilds the same weight distribution
    '''
    inverted = 0
    for _ in range(runs):
        n, k = random_shape(rng, 3, 10)
        seed = random_lcd(random_code, n, k)
        x = random_odd_vector(rng, n)
        built = build_up(seed, x)
        assert (built.n, built.k) == (n + 2, k + 1)
        assert hull_dimension(built) == 1
        assert hull(built).basis.row(0) == built.generator.row(0)
        if minimum_distance(built) <= 2:
            continue
        try:
            recovered, y = inverse_build_up(built)
        except PreconditionError:
            continue
        assert (recovered.n, recovered.k) == (n, k)
        assert is_lcd(recovered)
        rebuilt = build_up(recovered, y)
        assert weight_profile(rebuilt).distribution == weight_profile(built).distribution
        inverted += 1
    assert inverted > 0


def test_build_up_one_round_trip(rng, random_code, runs):
    built_count = 0
    for _ in range(runs):
        n, k = random_shape(rng, 3, 10)
        seed = random_lcd(random_code, n, k)
        dual_code = dual(seed)
        candidates = [dual_code.encode(random_vector(rng, dual_code.k)) for _ in range(16)]
        x = next((word for word in candidates if word.weight() % 2), None)
        if x is None:
            continue
        built = build_up_one(seed, x)
        assert (built.n, built.k) == (n + 1, k + 1)
        assert hull_dimension(built) == 1
        recovered, y = inverse_build_up_one(built)
        assert (recovered.n, recovered.k) == (n, k)
        assert is_lcd(recovered)
        assert recovered.is_orthogonal_to(y)
        assert hull_dimension(build_up_one(recovered, y)) == 1
        built_count += 1
    assert built_count > 0


def test_lcd_normal_forms(rng, random_code, runs):
    '''
    Odd-like LCD codes orthonormalize, even-like ones hyperbolize, both spanning the code
    '''
    for _ in range(runs):
        code = random_lcd(random_code, *random_shape(rng, 3, 10))
        if is_even_like(code):
            basis = hyperbolize(code)
        else:
            basis = orthonormalize(code)
        assert basis.is_valid()
        assert basis.code.same_code(code)


def test_extend_hull_one(rng, random_code, runs):
    '''
    Odd k codes built up from even dimension seeds gain a coordinate and flip parity class
    '''
    for _ in range(runs):
        n = int(rng.integers(3, 10))
        k = 2 * int(rng.integers(1, (n - 1) // 2 + 1))
        code = build_up(random_lcd(random_code, n, k), random_odd_vector(rng, n))
        extended = extend_hull_one(code)
        assert (extended.n, extended.k) == (code.n + 1, code.k)
        assert hull_dimension(extended) == 1
        assert is_even_like(extended) != is_even_like(code)


def test_pad_and_strip_simplex(rng, random_code, runs):
    '''
    Each simplex block adds 2^(k-1) to every nonzero weight and strips back off
    '''
    for _ in range(runs):
        n = int(rng.integers(4, 12))
        code = random_code(n, int(rng.integers(3, min(n, 6) + 1)))
        blocks = int(rng.integers(1, 3))
        padded = pad_simplex(code, blocks)
        assert hull_dimension(padded) == hull_dimension(code)
        assert minimum_distance(padded) == minimum_distance(code) + blocks * 2 ** (code.k - 1)
        try:
            original = column_multiplicities(code)
        except PreconditionError:
            continue
        assert column_multiplicities(strip_simplex(padded, blocks)) == original


def test_shorten_puncture_duality(rng, random_code, runs):
    '''
    The dual of C shortened on T is the dual of C punctured on T
    '''
    for _ in range(runs):
        n = int(rng.integers(4, 12))
        code = random_code(n, int(rng.integers(2, n - 1)))
        coordinate = int(rng.integers(1, n + 1))
        shortened = shorten(code, [coordinate])
        assert dual(shortened).same_code(puncture(dual(code), [coordinate]))
