import os

import numpy as np
import pytest

from onehull.code import LinearCode
from onehull.gf2core import BitMatrix, BitVector, rank
from onehull.records import RecordStore
from onehull.settings import get_settings_value
from onehull.transforms import simplex_matrix

LCD_12_2 = ['111111000000', '000111111100']
X_14_3 = '100110010111'

LCD_13_5 = [
    '1000011010111',
    '0100011100010',
    '0010010001110',
    '0001000111011',
    '0000101111101',
]
X_14_6 = '1011010001011'

HAMMING_7_4 = ['1000011', '0100101', '0010110', '0001111']


def property_runs() -> int:
    '''Instance count for randomized checks, scaled with ONEHULL_PROPERTY_RUNS'''
    return int(os.environ.get('ONEHULL_PROPERTY_RUNS', get_settings_value('property_runs')))


def random_matrix(rng: np.random.Generator, rows: int, cols: int) -> BitMatrix:
    '''Uniform 0/1 matrix'''
    return BitMatrix.from_dense(rng.integers(0, 2, size=(rows, cols)), cols)


@pytest.fixture
def rng():
    return np.random.default_rng(20241019)


@pytest.fixture
def lcd_12_2():
    return LinearCode.from_strings(LCD_12_2)


@pytest.fixture
def x_14_3():
    return BitVector.from_string(X_14_3)


@pytest.fixture
def lcd_13_5():
    return LinearCode.from_strings(LCD_13_5)


@pytest.fixture
def x_14_6():
    return BitVector.from_string(X_14_6)


@pytest.fixture
def hamming():
    return LinearCode.from_strings(HAMMING_7_4)


@pytest.fixture
def simplex3():
    return LinearCode(simplex_matrix(3))


@pytest.fixture
def store(tmp_path):
    return RecordStore(str(tmp_path / 'store'))


@pytest.fixture(params=['quick', pytest.param('full', marks=pytest.mark.slow)])
def runs(request):
    '''Quick instance count, and the full count under the slow marker'''
    if request.param == 'full':
        return get_settings_value('full_property_runs')
    return property_runs()


@pytest.fixture
def random_code(rng):
    '''Factory for uniformly drawn full-rank [n, k] codes'''
    def draw(n, k):
        while True:
            matrix = random_matrix(rng, k, n)
            if rank(matrix) == k:
                return LinearCode(matrix)
    return draw


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: exhaustive scans taking more than a few seconds')
