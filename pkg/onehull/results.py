# pylint: disable=unsubscriptable-object
'''
Iterator class for stepping through scanned records
'''
from typing import Dict, Iterable, Optional, Tuple


class Results:
    '''
    Results wraps the records returned by a store scan.

    Records are kept in (n, k) order, best distance first, and can be iterated repeatedly.
    '''

    def __init__(self, records: Iterable):
        self.records = sorted(records, key=lambda record: (record.n, record.k, -record.d))

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    def collection(self, output: Optional[Dict[Tuple[int, int], object]] = None):
        '''
        Map (n, k) to the best record seen for that cell.

        If output is passed in, records already present there compete with the scanned ones.
        '''
        if output is None:
            output = {}

        for record in self.records:
            key = (record.n, record.k)
            current = output.get(key)
            if current is None or record.is_better_than(current):
                output[key] = record
        return output
