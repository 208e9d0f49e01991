import json

import pytest

from cartanshift.exterior import ExtIdeal
from cartanshift.formats import (FormatError, complex_to_json, dumps, ideal_to_json, read_complex,
                                 read_ideal, triangle_to_json)
from cartanshift.symmetric import SymIdeal


def test_complex_round_trip():
    text = '{"n": 4, "facets": [[3, 4], [1, 2]]}'
    c = read_complex(text)
    assert complex_to_json(c) == {"n": 4, "facets": [[1, 2], [3, 4]]}
    assert read_complex(complex_to_json(c)) == c


@pytest.mark.parametrize("text", [
    "not json", "[1, 2]", '{"facets": []}', '{"n": -1, "facets": []}', '{"n": 2, "facets": [[1, 3]]}',
    '{"n": 2, "facets": [[1, 1]]}', '{"n": 2, "facets": "x"}', '{"n": 2, "facets": [[true]]}',
])
def test_bad_complexes(text):
    with pytest.raises(FormatError):
        read_complex(text)


def test_ideal_round_trip():
    j = read_ideal('{"n": 4, "ring": "exterior", "generators": [[3, 4], [1, 2]]}')
    assert isinstance(j, ExtIdeal)
    assert ideal_to_json(j) == {"n": 4, "ring": "exterior", "generators": [[1, 2], [3, 4]]}
    s = read_ideal('{"n": 3, "ring": "symmetric", "generators": [[1, 1, 1], [0, 2, 0]]}')
    assert isinstance(s, SymIdeal) and s.d_max == 3
    assert ideal_to_json(s)["generators"] == [[0, 2, 0], [1, 1, 1]]
    big = read_ideal('{"n": 2, "ring": "symmetric", "generators": [[3, 1]]}')
    assert big.d_max == 4


@pytest.mark.parametrize("text", [
    '{"n": 2, "ring": "other", "generators": []}',
    '{"n": 2, "ring": "exterior", "generators": [[0]]}',
    '{"n": 2, "ring": "symmetric", "generators": [[1]]}',
    '{"n": 2, "ring": "symmetric", "generators": [[-1, 2]]}',
    '{"n": 2, "ring": "exterior"}',
])
def test_bad_ideals(text):
    with pytest.raises(FormatError):
        read_ideal(text)


def test_canonical_dumps():
    assert dumps({"b": 1, "a": [1, 2]}) == json.dumps({"a": [1, 2], "b": 1}, indent=2) + "\n"
    assert triangle_to_json({(2, 1): 3, (1, 0): 1}) == {"1,0": 1, "2,1": 3}
