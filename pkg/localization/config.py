"""RunConfig files: flat ``key=value`` lines, repeated keys build lists."""
import re
from pathlib import Path

from localization.exceptions import InvalidDescriptor

LIST_KEYS = ('bundle', 'chart', 'summand')
SCALAR_KEYS = ('space', 'nmax', 'rank', 'seed', 'trials', 'format', 'threads',
               'builtin', 'chart_index', 'c3', 'timing')

_SUMMAND_TOKEN = re.compile(r'O(?:\([^)]*\)|-?\d+)?')
# commas outside parentheses separate summands
_SEPARATOR = re.compile(r',(?![^()]*\))')


def read_config_file(path):
    values = {}
    text = Path(path).read_text(encoding='utf-8')
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise InvalidDescriptor(f"{path}:{number}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split('=', 1))
        key = key.replace('-', '_')
        if key not in LIST_KEYS and key not in SCALAR_KEYS:
            raise InvalidDescriptor(f"{path}:{number}: unknown key {key!r}")
        values.setdefault(key, []).append(value)
    return values


def merge_config(file_values, flags):
    """Flags that were given override file values; list keys are replaced, not appended."""
    merged = {}
    for key in SCALAR_KEYS:
        if file_values.get(key):
            merged[key] = file_values[key][-1]
    for key in LIST_KEYS:
        if file_values.get(key):
            merged[key] = list(file_values[key])
    for key, value in flags.items():
        if value is None or value == []:
            continue
        merged[key] = value
    return merged


def split_bundle(entries):
    """'O,O1' or repeated entries -> ['O', 'O1']; keeps 'O(1,-2)' whole."""
    if isinstance(entries, str):
        entries = [entries]
    tokens = []
    for entry in entries:
        chunks = _SEPARATOR.split(entry.replace(' ', ''))
        if not all(_SUMMAND_TOKEN.fullmatch(chunk) for chunk in chunks):
            raise InvalidDescriptor(f"cannot read bundle {entry!r}")
        tokens.extend(chunks)
    return tokens


def parse_vectors(text, count=None):
    """'1,0,0/0,1,0/0,0,1' -> ((1, 0, 0), (0, 1, 0), (0, 0, 1))."""
    try:
        vectors = tuple(tuple(int(x) for x in chunk.split(',')) for chunk in text.split('/'))
    except ValueError:
        raise InvalidDescriptor(f"cannot read integer vectors from {text!r}")
    if any(len(v) != 3 for v in vectors):
        raise InvalidDescriptor(f"every vector in {text!r} needs three entries")
    if count is not None and len(vectors) != count:
        raise InvalidDescriptor(f"{text!r} has {len(vectors)} vectors, expected {count}")
    return vectors
