import pytest
from hypothesis import given, strategies as st

from goodgroups.presentation import (
    BUILTIN_FAMILIES,
    Presentation,
    PresentationError,
    PresentationSyntaxError,
    builtin,
    commutator,
    conjugate,
    format_word,
    gen,
    parse_builtin_spec,
    parse_presentation,
    parse_word,
    reduce_word,
    word_inv,
    word_mul,
)

a, b = gen(0), gen(1)
words = st.lists(st.tuples(st.integers(0, 2), st.integers(-3, 3)), max_size=12)


def test_quaternion_relators():
    p = parse_presentation("gens: a,b; rels: a^4=1, a^2=b^2=[a,b]")
    assert p.generators == ("a", "b")
    assert p.relators == (
        ((0, 4),),
        ((0, 2), (1, -2)),
        word_mul(((1, 2),), word_inv(commutator(a, b))),
    )


def test_single_relator_trivial():
    p = parse_presentation("gens: a; rels: a^1=1")
    assert p.relators == (((0, 1),),)


def test_conjugation_chain():
    p = parse_presentation("gens: a,b; rels: a^8=1, b^4=1, a^b=a^5")
    assert p.relators == (((0, 8),), ((1, 4),), ((1, -1), (0, 1), (1, 1), (0, -5)))


def test_commutator_and_conjugate_expansion():
    assert parse_word("[a,b]", ["a", "b"]) == ((0, -1), (1, -1), (0, 1), (1, 1))
    assert parse_word("a^b", ["a", "b"]) == ((1, -1), (0, 1), (1, 1))
    assert commutator(a, b) == ((0, -1), (1, -1), (0, 1), (1, 1))
    assert conjugate(a, b) == ((1, -1), (0, 1), (1, 1))


def test_power_binds_tighter_than_juxtaposition():
    assert parse_word("ab^2", ["a", "b"]) == ((0, 1), (1, 2))
    assert parse_word("(ab)^2", ["a", "b"]) == ((0, 1), (1, 1), (0, 1), (1, 1))
    assert parse_word("a^-1 b^-2", ["a", "b"]) == ((0, -1), (1, -2))
    assert parse_word("a*a*a", ["a"]) == ((0, 3),)


def test_empty_relator_list_is_free():
    p = parse_presentation("gens: a, b; rels:")
    assert p.is_free


@pytest.mark.parametrize(
    "text, offset",
    [
        ("gens: a, b; rels: a^4 = c", 24),
        ("gens: a; rels: a^", 17),
        ("gens a; rels: a", 5),
        ("gens: a, a; rels: a", 9),
        ("gens: a; rels: a^4 = 1 )", 23),
    ],
)
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(PresentationSyntaxError) as exc:
        parse_presentation(text)
    assert exc.value.offset == offset


def test_offset_is_in_bytes():
    with pytest.raises(PresentationSyntaxError) as exc:
        parse_presentation("gens: a; rels: a^4 = é")
    assert exc.value.offset == len("gens: a; rels: a^4 = ".encode())


def test_builtin_examples():
    assert builtin("S", (2, 2)) == parse_presentation("gens: a, b; rels: a^4 = b^4 = 1, a^b = a^3")
    gq = builtin("GenQuaternion", (4,))
    assert gq == parse_presentation("gens: a, b; rels: a^8 = 1, b^2 = a^4, a^b = a^-1")
    h = builtin("H245")
    assert h.generators == ("x", "y", "u", "v")
    x2 = ((0, 2),)
    assert word_mul(x2, ((3, -2),)) in h.relators  # x^2 = v^2


@pytest.mark.parametrize(
    "name, params",
    [("S", (1, 2)), ("S", (2,)), ("DihedralPow", (2,)), ("Cyclic", (6,)), ("TheoremIII", (1,)), ("Nope", ())],
)
def test_builtin_parameter_errors(name, params):
    with pytest.raises(PresentationError):
        builtin(name, params)


def test_parse_builtin_spec():
    assert parse_builtin_spec("S(2,3)") == ("S", (2, 3))
    assert parse_builtin_spec("Q8") == ("Q8", ())
    assert parse_builtin_spec("TheoremIII[3]") == ("TheoremIII", (3,))


@pytest.mark.parametrize("name", BUILTIN_FAMILIES)
def test_builtin_round_trip(name):
    params = {"Cyclic": (8,), "S": (2, 3), "ModularS": (3, 1), "DihedralPow": (3,), "GenQuaternion": (4,), "TheoremIII": (2,)}
    p = builtin(name, params.get(name, ()))
    assert parse_presentation(p.pretty()) == p


@given(words)
def test_reduce_idempotent(w):
    r = reduce_word(w)
    assert reduce_word(r) == r
    assert all(e != 0 for _, e in r)
    assert all(x[0] != y[0] for x, y in zip(r, r[1:]))


@given(words)
def test_word_times_inverse_is_empty(w):
    w = reduce_word(w)
    assert word_mul(w, word_inv(w)) == ()


@given(st.lists(words, min_size=1, max_size=4))
def test_random_presentation_round_trip(rels):
    rels = [reduce_word(r) for r in rels]
    p = Presentation(("a", "b", "c"), tuple(r for r in rels if r))
    assert parse_presentation(p.pretty()) == p
    for r in p.relators:
        assert parse_word(format_word(r, p.generators), p.generators) == r


def test_relator_generator_range_checked():
    with pytest.raises(PresentationError):
        Presentation(("a",), (((1, 1),),))
