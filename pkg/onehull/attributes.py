# pylint: disable=unsubscriptable-object
'''
Typed header fields for stored code records
'''
from datetime import datetime
from inspect import getmembers
from typing import Any, Callable, Dict, Generic, Optional, TypeVar, Union

import stringcase
from dateutil.parser import parse
from dateutil.tz import tzutc

from onehull.constants import DATETIME_FORMAT

_T = TypeVar('_T')
_A = TypeVar('_A', bound='Attribute')

BOOLEAN = 'bool'
NUMBER = 'number'
STRING = 'string'
DATETIME = 'datetime'


class AttributeContainerMeta(type):
    '''
    Metaclass collecting the attributes declared on a container class
    '''

    def __init__(cls, name, bases, attrs, *args, **kwargs):
        super().__init__(name, bases, attrs, *args, **kwargs)  # type: ignore
        AttributeContainerMeta._initialize_attributes(cls)

    @staticmethod
    def _initialize_attributes(cls):  # pylint: disable=bad-staticmethod-argument
        '''
        Initialize attributes on the class.
        '''
        cls._attributes = {}
        cls._header_to_python_attrs = {}

        for name, attribute in getmembers(cls, lambda o: isinstance(o, Attribute)):
            cls._attributes[name] = attribute
            if attribute.attr_name is not None:
                cls._header_to_python_attrs[attribute.attr_name] = name
            else:
                attribute.attr_name = stringcase.snakecase(name)


class Attribute(Generic[_T]):
    '''
    A header field of a record
    '''
    attr_type: str
    null = False

    def __init__(self,
                 null: Optional[bool] = None,
                 default: Optional[Union[_T, Callable[..., _T]]] = None,
                 attr_name: Optional[str] = None,
                 ) -> None:
        self.default = default
        if null is not None:
            self.null = null
        self.attr_name = attr_name

    def __set__(self, instance: Any, value: Optional[_T]) -> None:
        if instance is not None:
            attr_name = instance._header_to_python_attrs.get(self.attr_name, self.attr_name)
            instance.attribute_values[attr_name] = value

    def __get__(self: _A, instance: Any, owner: Any) -> Union[_A, _T]:
        if instance is not None:
            attr_name = instance._header_to_python_attrs.get(self.attr_name, self.attr_name)
            return instance.attribute_values.get(attr_name, None)
        return self

    def serialize(self, value: Any) -> Optional[str]:  # pylint: disable=no-self-use
        '''
        Returns the header text for a value
        '''
        if value is None:
            return None
        return str(value)

    def deserialize(self, value: str) -> Any:  # pylint: disable=no-self-use
        '''
        Performs any needed deserialization on the header text
        '''
        return value


class UnicodeAttribute(Attribute[str]):
    '''
    A single-token text field; whitespace is replaced so the header stays one token
    '''
    attr_type = STRING

    def serialize(self, value):
        if not value:
            return None
        return '_'.join(str(value).split())


class NumberAttribute(Attribute[int]):
    '''
    An integer field
    '''
    attr_type = NUMBER

    def deserialize(self, value):
        return int(value)


class BooleanAttribute(Attribute[bool]):
    '''
    A boolean field written as 0/1
    '''
    attr_type = BOOLEAN

    def serialize(self, value):
        if value is None:
            return None
        return '1' if value else '0'

    def deserialize(self, value):
        if value in ('1', 'true', 'True'):
            return True
        if value in ('0', 'false', 'False'):
            return False
        raise ValueError(f"Not a boolean header value: {value!r}")


class UTCDateTimeAttribute(Attribute[datetime]):
    '''
    A UTC timestamp field
    '''
    attr_type = DATETIME

    def serialize(self, value):
        if value is None:
            return None
        if value.tzinfo is None:
            value = value.replace(tzinfo=tzutc())
        return value.astimezone(tzutc()).strftime(DATETIME_FORMAT)

    def deserialize(self, value):
        return parse(value).astimezone(tzutc())


class AttributeContainer(metaclass=AttributeContainerMeta):
    '''
    Parent class for objects that hold header attributes
    '''

    def __init__(self, **attributes: Any) -> None:
        self.attribute_values: Dict[str, Any] = {}
        self._set_defaults()
        self._set_attributes(**attributes)

    @classmethod
    def get_attributes(cls) -> Dict[str, Attribute]:
        '''
        Returns the attributes of this class as a mapping from `python_attr_name` => `attribute`.
        '''
        return cls._attributes  # type: ignore  # pylint: disable=no-member

    @classmethod
    def _header_to_python_attr(cls, header_key: str) -> str:
        return cls._header_to_python_attrs.get(header_key, header_key)  # type: ignore  # pylint: disable=no-member

    def _set_defaults(self) -> None:
        for name, attr in self.get_attributes().items():
            value = attr.default() if callable(attr.default) else attr.default
            if value is not None:
                setattr(self, name, value)

    def _set_attributes(self, **attributes: Any) -> None:
        for attr_name, attr_value in attributes.items():
            if attr_name not in self.get_attributes():
                raise ValueError("Attribute {} specified does not exist".format(attr_name))
            setattr(self, attr_name, attr_value)

    def serialize_header(self) -> Dict[str, str]:
        '''
        Header key => text for every non-null attribute
        '''
        header = {}
        for name, attr in self.get_attributes().items():
            text = attr.serialize(getattr(self, name))
            if text is None:
                if not attr.null:
                    raise ValueError(f"Attribute {name} cannot be null")
                continue
            header[attr.attr_name] = text
        return header

    @classmethod
    def deserialize_header(cls, header: Dict[str, str]) -> Dict[str, Any]:
        '''
        Inverse of serialize_header; unknown keys are ignored
        '''
        values = {}
        attributes = cls.get_attributes()
        for key, text in header.items():
            name = cls._header_to_python_attr(stringcase.snakecase(key))
            if name in attributes:
                values[name] = attributes[name].deserialize(text)
        return values
