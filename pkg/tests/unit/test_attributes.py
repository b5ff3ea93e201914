from datetime import datetime

import pytest
from dateutil.tz import tzutc

from onehull.attributes import (
    BOOLEAN,
    DATETIME,
    NUMBER,
    STRING,
    AttributeContainer,
    BooleanAttribute,
    NumberAttribute,
    UnicodeAttribute,
    UTCDateTimeAttribute,
)


class Sample(AttributeContainer):
    length = NumberAttribute()
    hull_dim = NumberAttribute(attr_name='hull')
    label = UnicodeAttribute(default='none')
    stamp = UTCDateTimeAttribute(null=True)


def test_boolean_attribute():
    '''
    BooleanAttribute.default
    '''
    attr = BooleanAttribute()
    assert attr.attr_type == BOOLEAN
    attr = BooleanAttribute(default=True)
    assert attr.default is True


def test_boolean_serialize():
    '''
    BooleanAttribute.serialize
    '''
    attr = BooleanAttribute()
    assert attr.serialize(True) == '1'
    assert attr.serialize(False) == '0'
    assert attr.serialize(None) is None


def test_boolean_deserialize():
    '''
    BooleanAttribute.deserialize
    '''
    attr = BooleanAttribute()
    assert attr.deserialize('1') is True
    assert attr.deserialize('False') is False
    with pytest.raises(ValueError):
        attr.deserialize('maybe')


def test_number_attribute():
    attr = NumberAttribute()
    assert attr.attr_type == NUMBER
    assert attr.serialize(7) == '7'
    assert attr.deserialize('7') == 7


def test_unicode_attribute():
    '''
    Header values stay a single token
    '''
    attr = UnicodeAttribute()
    assert attr.attr_type == STRING
    assert attr.serialize('buildup random') == 'buildup_random'
    assert attr.serialize('') is None


def test_utc_datetime_attribute():
    attr = UTCDateTimeAttribute()
    assert attr.attr_type == DATETIME
    stamp = datetime(2024, 3, 1, 12, 30, tzinfo=tzutc())
    text = attr.serialize(stamp)
    assert text == '2024-03-01T12:30:00.000000+0000'
    assert attr.deserialize(text) == stamp
    assert attr.serialize(datetime(2024, 3, 1, 12, 30)) == text


def test_container_defaults_and_names():
    '''
    attr_name maps a header key onto a python attribute
    '''
    sample = Sample(length=5, hull_dim=1)
    assert sample.label == 'none'
    assert sample.stamp is None
    assert set(Sample.get_attributes()) == {'length', 'hull_dim', 'label', 'stamp'}
    assert sample.serialize_header() == {'length': '5', 'hull': '1', 'label': 'none'}


def test_container_round_trip():
    header = Sample(length=5, hull_dim=1, label='seed').serialize_header()
    values = Sample.deserialize_header(dict(header, unknown='x'))
    assert values == {'length': 5, 'hull_dim': 1, 'label': 'seed'}


def test_container_rejects_unknown_and_null():
    with pytest.raises(ValueError):
        Sample(width=3)
    with pytest.raises(ValueError):
        Sample(hull_dim=1).serialize_header()
