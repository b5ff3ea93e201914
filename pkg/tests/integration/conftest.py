import pytest

from onehull import settings
from onehull.code import certify
from onehull.constants import ENV_STORE
from onehull.constructions import build_up, build_up_one


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    monkeypatch.setattr(settings, 'runtime_settings', {})
    monkeypatch.delenv(ENV_STORE, raising=False)


@pytest.fixture
def seeded_store(store, lcd_12_2, x_14_3, lcd_13_5, x_14_6):
    '''
    Store holding the built [14,3,7] and [14,6,5] codes
    '''
    store.save(certify(build_up(lcd_12_2, x_14_3), 'buildup'))
    store.save(certify(build_up_one(lcd_13_5, x_14_6), 'buildup1'))
    return store
