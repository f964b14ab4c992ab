import json

import pytest
from hypothesis import given

from cayleyfn.constructions import WORKED_EPSILON_TEXT
from cayleyfn.errors import ParseError, SizeMismatch
from cayleyfn.transformation import (Transformation, commutes, compose, constant, format_json,
                                     format_two_row, identity, image_chain, is_idempotent, parse,
                                     power)

from conftest import same_size_maps, transformations, vertices


def test_compose_identity_left_and_right():
    f = Transformation((2, 0, 0))
    assert compose(identity(3), f) == f
    assert compose(f, identity(3)) == f


def test_compose_is_left_action():
    f = Transformation((1, 2, 0))
    g = Transformation((0, 0, 2))
    assert compose(f, g).map == tuple(f(g(x)) for x in range(3))
    assert compose(f, g).map == (1, 1, 0)


def test_compose_size_mismatch():
    with pytest.raises(SizeMismatch):
        compose(identity(2), identity(3))
    with pytest.raises(SizeMismatch):
        commutes(identity(2), identity(3))


def test_worked_example_epsilon_idempotent(worked):
    _, eps = worked
    assert compose(eps, eps) == eps
    assert is_idempotent(eps)
    assert power(eps, 2) == eps


def test_worked_example_alpha_squared(worked):
    alpha, _ = worked
    sq = compose(alpha, alpha)
    expected = {"a": "c", "b": "d", "c": "e", "d": "b", "e": "c"}
    for x, y in expected.items():
        assert sq(alpha.index(x)) == alpha.index(y)


def test_power_zero_is_identity():
    assert power(Transformation((1, 1, 0)), 0) == identity(3)


def test_worked_example_alpha_fourth_power_fixes_cycle(worked):
    alpha, _ = worked
    p4 = power(alpha, 4)
    for lab in "bcde":
        v = alpha.index(lab)
        assert p4(v) == v


def test_image_chain_examples(worked):
    alpha, _ = worked
    assert image_chain(identity(4)) == [frozenset(range(4))]
    assert image_chain(alpha) == [frozenset(range(13)), vertices(alpha, "b", "c", "d", "e")]
    assert image_chain(constant(3)) == [frozenset({0, 1, 2}), frozenset({0})]
    assert len(image_chain(Transformation((0, 0, 1)))) - 1 == 2


def test_commutes_examples(worked):
    alpha, eps = worked
    assert commutes(alpha, eps)
    f = Transformation((2, 2, 1, 0))
    assert commutes(f, identity(4))
    assert not commutes(Transformation((1, 0, 2)), Transformation((0, 0, 2)))


# ---------------------------------------------------------------------------
# parsing


def test_parse_smallest_table():
    t = parse("a b / b b")
    assert t.map == (1, 1)
    assert t.labels == ("a", "b")


def test_parse_worked_example_epsilon():
    eps = parse(WORKED_EPSILON_TEXT)
    assert eps.size == 13
    assert is_idempotent(eps)
    assert eps.labels[:3] == ("a", "a1", "a2")


def test_parse_multiline_and_tight_slash():
    assert parse("x y z\n/\ny z z\n").map == (1, 2, 2)
    assert parse("x y/y x").map == (1, 0)


def test_round_trip_text_normalized():
    text = "  a   b c /  b b   a "
    assert format_two_row(parse(text)) == " ".join(text.split())


def test_parse_json():
    t = parse('{"labels": ["p", "q"], "map": [1, 1]}')
    assert t == Transformation((1, 1))
    assert t.labels == ("p", "q")
    assert parse('{"map": [0, 0, 1]}').labels is None
    assert parse(format_json(t)) == t


@pytest.mark.parametrize("text, fragment, line, column", [
    ("a b / b c", "unknown label 'c'", 1, 9),
    ("a b a / a a a", "duplicate label 'a'", 1, 5),
    ("a b / a", "wrong arity", 1, 8),
    ("a b\n/ a a a", "wrong arity", 2, 7),
    ("a b a b", "exactly one '/'", 1, 8),
    ("a / a / a", "exactly one '/'", 1, 7),
    ("", "empty", 1, 1),
])
def test_parse_errors_have_positions(text, fragment, line, column):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert fragment in str(info.value)
    assert (info.value.line, info.value.column) == (line, column)


@pytest.mark.parametrize("record", [
    {"labels": ["a"], "map": [0, 0]},
    {"labels": ["a", "a"], "map": [0, 0]},
    {"map": [0, 2]},
    {"map": []},
    {"labels": ["a b", "c"], "map": [0, 0]},
])
def test_parse_json_errors(record):
    with pytest.raises(ParseError):
        parse(json.dumps(record))


def test_bad_json_reports_position():
    with pytest.raises(ParseError) as info:
        parse('{"map": [0,\n 1')
    assert info.value.line == 2


def test_labels_do_not_affect_equality():
    assert Transformation((1, 0), ("x", "y")) == Transformation((1, 0))
    assert hash(Transformation((1, 0), ("x", "y"))) == hash(Transformation((1, 0)))


def test_invalid_construction():
    with pytest.raises(ValueError):
        Transformation(())
    with pytest.raises(ValueError):
        Transformation((0, 2))
    with pytest.raises(ValueError):
        Transformation((0, 1), ("a", "a"))


# ---------------------------------------------------------------------------
# properties


@given(same_size_maps(3))
def test_compose_associative(fgh):
    f, g, h = fgh
    assert compose(f, compose(g, h)) == compose(compose(f, g), h)


@given(transformations(), transformations(max_size=1).map(lambda t: 0))
def test_power_additive(f, _):
    for m in range(4):
        for n in range(4):
            assert power(f, m + n) == compose(power(f, m), power(f, n))


@given(transformations(max_size=10))
def test_image_chain_strictly_decreasing(f):
    chain = image_chain(f)
    sizes = [len(s) for s in chain]
    assert all(a > b for a, b in zip(sizes, sizes[1:]))
    assert frozenset(f.map[x] for x in chain[-1]) == chain[-1]
    assert len(chain) - 1 <= f.size


@given(transformations())
def test_idempotent_commutes_with_itself(f):
    if is_idempotent(f):
        assert commutes(f, f)
    assert commutes(f, identity(f.size))


@given(transformations())
def test_round_trip(f):
    assert parse(format_two_row(f)) == f
    assert parse(format_json(f)) == f
