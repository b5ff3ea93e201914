'''
onehull constants
'''

# Search strategies
EXHAUSTIVE_SYSTEMATIC = 'exhaustive-systematic'
BUILDUP_RANDOM = 'buildup-random'
BUILDUP_EXHAUSTIVE = 'buildup-exhaustive'
SHORTEN_DERIVE = 'shorten-derive'
STRATEGIES = [EXHAUSTIVE_SYSTEMATIC, BUILDUP_RANDOM, BUILDUP_EXHAUSTIVE, SHORTEN_DERIVE]

# Exhaustive systematic search is limited to 2^28 generators
MAX_SYSTEMATIC_BITS = 28
# Integer codeword encodings are single 64-bit words
MAX_SEARCH_LENGTH = 64

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_BUDGET = 4

# Table cell status
MATCHED = 'MATCHED'
LOWER_ONLY = 'LOWER-ONLY'
UPPER_ONLY = 'UPPER-ONLY'
OPEN = 'OPEN'
STATUS_SHORT = {MATCHED: 'M', LOWER_ONLY: 'L', UPPER_ONLY: 'U', OPEN: 'O'}

# Provenance tags
GRIESMER = 'griesmer'
SPHERE_PACKING = 'sphere-packing'
TABLE1 = 'table1'
TABLE2 = 'table2'
TABLE3 = 'table3'
SMALL_TABLE = 'small-table'
IMPORTED = 'imported'
LCD_DATA = 'lcd-data'
LCD_SHORTEN = 'lcd-shorten'
LCD_PUNCTURE = 'lcd-puncture'
LCD_EXTEND = 'lcd-extend'
LCD_PARITY = 'lcd-parity'
LCD_EVEN_LENGTH = 'lcd-even-length'
DIMENSION_MONOTONE = 'dimension-monotone'
CODIMENSION_BOUND = 'codimension-bound'
FORMULA_K = 'formula k={}'
FORMULA_CODIM = 'formula n-k={}'

# Transform names used in provenance chains
PAD_SIMPLEX = 'pad_simplex'
DUPLICATE_PARITY = 'duplicate_parity'
EXTEND_HULL_ONE = 'extend_hull_one'
PUNCTURE_OFF_HULL = 'puncture_off_hull'
PROVENANCE_SEPARATOR = '>'

# Files
DEFAULT_ENCODING = 'utf-8'
CODE_FILE_SUFFIX = '.code'
RECORD_FILE_TEMPLATE = '{n}_{k}' + CODE_FILE_SUFFIX
NONEXIST_FILE_TEMPLATE = 'nonexist_{n}_{k}_{d}.txt'
DATETIME_FORMAT = '%Y-%m-%dT%H:%M:%S.%f%z'
TABLE1_RESOURCE = 'data/table1.txt'
TABLE1_SHA256 = 'b84291af863a108b0092c3ec838dbf02c5bd2061d0ed51ec7568c951d5f76eb9'

# Output formats
FORMAT_TSV = 'tsv'
FORMAT_TEXT = 'text'
FORMATS = [FORMAT_TSV, FORMAT_TEXT]

# Environment
ENV_STORE = 'ONEHULL_STORE'
ENV_CONFIG = 'ONEHULL_CONFIG'
