"""Finite presentations: words, a small text DSL and the built-in families.

The DSL looks like::

    gens: a, b; rels: a^4 = 1, a^2 = b^2 = [a, b]

Words are juxtapositions (or ``*``-products) of factors.  A factor is a
generator name, ``1``, a parenthesised word or a commutator ``[u, v]``,
optionally followed by ``^`` and either a signed integer (power) or another
factor (conjugation, ``u^v = v^-1 u v``).  ``[u, v]`` is ``u^-1 v^-1 u v``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Word = tuple[tuple[int, int], ...]
"""A word is a tuple of ``(generator index, nonzero exponent)`` syllables."""


class PresentationError(ValueError):
    pass


class PresentationSyntaxError(PresentationError):
    """Raised on malformed DSL text; ``offset`` is the UTF-8 byte offset."""

    def __init__(self, message: str, text: str, pos: int):
        self.offset = len(text[:pos].encode("utf-8"))
        self.pos = pos
        super().__init__(f"{message} at byte {self.offset}")


# ---------------------------------------------------------------------------
# word algebra


def reduce_word(syllables: Iterable[tuple[int, int]]) -> Word:
    """Freely reduce: merge adjacent equal generators and drop zero exponents."""
    out: list[tuple[int, int]] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            e = out[-1][1] + exp
            out.pop()
            if e:
                out.append((gen, e))
        else:
            out.append((gen, exp))
    return tuple(out)


def word_mul(*words: Word) -> Word:
    return reduce_word(s for w in words for s in w)


def word_inv(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def word_pow(w: Word, k: int) -> Word:
    if k < 0:
        w, k = word_inv(w), -k
    return reduce_word(s for _ in range(k) for s in w)


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u^-1 v^-1 u v``."""
    return word_mul(word_inv(u), word_inv(v), u, v)


def conjugate(u: Word, v: Word) -> Word:
    """``u^v = v^-1 u v``."""
    return word_mul(word_inv(v), u, v)


def gen(i: int, e: int = 1) -> Word:
    return reduce_word([(i, e)])


def word_letters(w: Word) -> list[int]:
    """Expand to a letter list: ``2*i`` for ``g_i`` and ``2*i + 1`` for ``g_i^-1``."""
    out = []
    for g, e in w:
        out.extend([2 * g + (e < 0)] * abs(e))
    return out


def format_word(w: Word, names: Sequence[str]) -> str:
    if not w:
        return "1"
    parts = []
    for g, e in w:
        parts.append(names[g] if e == 1 else f"{names[g]}^{e}")
    return "*".join(parts)


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(reduce_word(r) for r in self.relators))
        for r in self.relators:
            for g, _ in r:
                if not 0 <= g < len(self.generators):
                    raise PresentationError(f"relator uses generator id {g} out of range")

    @property
    def is_free(self) -> bool:
        """True when there are no relators; coset enumeration rejects these."""
        return not self.relators

    def pretty(self) -> str:
        """Canonical text form, parseable by :func:`parse_presentation`."""
        rels = ", ".join(format_word(r, self.generators) for r in self.relators)
        return f"gens: {', '.join(self.generators)}; rels: {rels}"

    def __str__(self) -> str:
        return self.pretty()


_NAME = re.compile(r"[A-Za-z][0-9_]*")


class _Lexer:
    """Tokenizer.  A name is one letter plus optional digits/underscores."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> tuple[str, str] | None:
        self._skip()
        if self.pos >= len(self.text):
            return None
        c = self.text[self.pos]
        if c.isdigit():
            m = re.compile(r"\d+").match(self.text, self.pos)
            return ("num", m.group())
        if c.isalpha() and c.isascii():
            m = _NAME.match(self.text, self.pos)
            return ("name", m.group())
        if c in "^[](),;:=*-+":
            return ("op", c)
        raise PresentationSyntaxError(f"unexpected character {c!r}", self.text, self.pos)

    def next(self) -> tuple[str, str] | None:
        tok = self.peek()
        if tok is not None:
            self.pos += len(tok[1])
        return tok

    def expect(self, kind: str, value: str | None = None) -> str:
        self._skip()
        start = self.pos
        tok = self.next()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = "end of input" if tok is None else repr(tok[1])
            raise PresentationSyntaxError(f"expected {want!r}, got {got}", self.text, start)
        return tok[1]

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] == value

    def keyword(self, word: str):
        self._skip()
        if not self.text.startswith(word, self.pos):
            raise PresentationSyntaxError(f"expected {word!r}", self.text, self.pos)
        self.pos += len(word)

    def error(self, message: str):
        self._skip()
        raise PresentationSyntaxError(message, self.text, self.pos)


class _WordParser:
    def __init__(self, lex: _Lexer, names: Sequence[str]):
        self.lex = lex
        self.index = {n: i for i, n in enumerate(names)}

    def word(self) -> Word:
        w = self.factor()
        while True:
            tok = self.lex.peek()
            if tok is None:
                return w
            if tok == ("op", "*"):
                self.lex.next()
                w = word_mul(w, self.factor())
            elif tok[0] in ("name", "num") or tok[1] in ("(", "["):
                w = word_mul(w, self.factor())
            else:
                return w

    def factor(self) -> Word:
        w = self.atom()
        while self.lex.at("^"):
            self.lex.next()
            tok = self.lex.peek()
            if tok is None:
                self.lex.error("missing exponent")
            if tok[0] == "num" or tok == ("op", "-"):
                sign = 1
                if tok == ("op", "-"):
                    self.lex.next()
                    sign = -1
                w = word_pow(w, sign * int(self.lex.expect("num")))
            else:
                w = conjugate(w, self.atom())
        return w

    def atom(self) -> Word:
        self.lex._skip()
        start = self.lex.pos
        tok = self.lex.next()
        if tok is None:
            self.lex.error("unexpected end of input")
        kind, value = tok
        if kind == "name":
            if value not in self.index:
                raise PresentationSyntaxError(f"unknown generator {value!r}", self.lex.text, start)
            return gen(self.index[value])
        if kind == "num":
            if value != "1":
                raise PresentationSyntaxError("only the literal 1 may stand for a word", self.lex.text, start)
            return ()
        if value == "(":
            w = self.word()
            self.lex.expect("op", ")")
            return w
        if value == "[":
            u = self.word()
            self.lex.expect("op", ",")
            v = self.word()
            self.lex.expect("op", "]")
            return commutator(u, v)
        raise PresentationSyntaxError(f"unexpected {value!r}", self.lex.text, start)


def parse_presentation(text: str) -> Presentation:
    """Parse ``gens: <names>; rels: <relation>, ...``.

    A relation ``x = y = z`` contributes ``x y^-1`` and ``y z^-1`` in source
    order; a bare word ``x`` means ``x = 1``.  Relators that reduce to the
    empty word are dropped.  The ``rels:`` part may be empty (free group).
    """
    lex = _Lexer(text)
    lex.keyword("gens")
    lex.expect("op", ":")
    names: list[str] = []
    while True:
        lex._skip()
        start = lex.pos
        name = lex.expect("name")
        if name in names:
            raise PresentationSyntaxError(f"duplicate generator {name!r}", text, start)
        names.append(name)
        if not lex.at(","):
            break
        lex.next()
    lex.expect("op", ";")
    lex.keyword("rels")
    lex.expect("op", ":")
    wp = _WordParser(lex, names)
    relators: list[Word] = []
    if lex.peek() is not None:
        while True:
            chain = [wp.word()]
            while lex.at("="):
                lex.next()
                chain.append(wp.word())
            if len(chain) == 1:
                chain.append(())
            for x, y in zip(chain, chain[1:]):
                r = word_mul(x, word_inv(y))
                if r:
                    relators.append(r)
            if not lex.at(","):
                break
            lex.next()
    if lex.peek() is not None:
        lex.error("trailing input")
    return Presentation(tuple(names), tuple(relators))


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse a single word over the given generator names."""
    lex = _Lexer(text)
    w = _WordParser(lex, names).word()
    if lex.peek() is not None:
        lex.error("trailing input")
    return w


# ---------------------------------------------------------------------------
# built-in families


def _is_pow2(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _need(cond: bool, msg: str):
    if not cond:
        raise PresentationError(msg)


def _cyclic(n: int) -> Presentation:
    _need(_is_pow2(n), f"Cyclic order must be a power of 2, got {n}")
    return parse_presentation(f"gens: c; rels: c^{n}")


def _s(n: int, m: int) -> Presentation:
    _need(n >= 2 and m >= 2, "S(n,m) needs n, m >= 2")
    return parse_presentation(
        f"gens: a, b; rels: a^{2**n} = b^{2**m} = 1, a^b = a^{1 + 2 ** (n - 1)}"
    )


def _modular_s(n: int, m: int = 1) -> Presentation:
    _need(n >= 2 and m == 1, "ModularS(n,1) needs n >= 2 and m = 1")
    return parse_presentation(f"gens: a, b; rels: a^{2**n} = b^2 = 1, a^b = a^{1 + 2 ** (n - 1)}")


def _dihedral(k: int) -> Presentation:
    _need(k >= 3, "DihedralPow(k) needs k >= 3")
    return parse_presentation(f"gens: a, b; rels: a^{2 ** (k - 1)} = b^2 = 1, a^b = a^-1")


def _gen_quaternion(k: int) -> Presentation:
    _need(k >= 3, "GenQuaternion(k) needs k >= 3")
    return parse_presentation(
        f"gens: a, b; rels: a^{2 ** (k - 1)} = 1, b^2 = a^{2 ** (k - 2)}, a^b = a^-1"
    )


def _q8() -> Presentation:
    return parse_presentation("gens: a, b; rels: a^4 = 1, a^2 = b^2 = [a, b]")


def _s22() -> Presentation:
    return parse_presentation("gens: a, b; rels: a^4 = b^4 = 1, a^2 = [b, a]")


def _theorem_iii(n: int) -> Presentation:
    _need(n >= 2, "TheoremIII(n) needs n >= 2")
    return parse_presentation(
        f"gens: a, b, d; rels: a^4 = 1, a^2 = b^2 = [a, b], d^{2**n} = 1, "
        f"[a, d] = d^{2 ** (n - 1)}, [b, d] = 1"
    )


def _h32() -> Presentation:
    return parse_presentation(
        "gens: x, y, u; rels: x^4 = y^4 = 1, x^2 = [y, x], y^2 = u^2 = [u, x], x^2*y^2 = [u, y]"
    )


def _h245() -> Presentation:
    return parse_presentation(
        "gens: x, y, u, v; rels: x^4 = y^4 = [v, u] = 1, x^2 = v^2 = [y, x] = [v, y], "
        "y^2 = u^2 = [u, x], x^2*y^2 = [u, y] = [v, x]"
    )


def _h245_witness_form() -> Presentation:
    # the presentation the explicit H245 witness pair is written in; the
    # squares relation reads f^2 = d^2 = a^2 (with b^2 = a^2 the group is not H245)
    return parse_presentation(
        "gens: a, b, d, f; rels: a^4 = b^4 = 1, f^2 = d^2 = a^2, [a, b] = 1, "
        "[a, d] = [b, f] = [d, f] = b^2, [b, d] = a^2, [a, f] = a^2*b^2"
    )


def _s22_q8_witness_form() -> Presentation:
    # central product of S(2,2) with Q8, amalgamating a^2 b^2 with the central involution
    return parse_presentation(
        "gens: a, b, d, f; rels: a^4 = d^4 = 1, b^2 = a^2 = [a, b], f^2 = d^2 = [d, f], "
        "[a, d] = [b, d] = [b, f] = 1, [a, f] = a^2"
    )


def _q8_q8() -> Presentation:
    return parse_presentation(
        "gens: a, b, c, d; rels: a^4 = 1, a^2 = b^2 = [a, b], c^4 = 1, c^2 = d^2 = [c, d], "
        "[a, c] = [a, d] = [b, c] = [b, d] = 1"
    )


_FAMILIES = {
    "Cyclic": (_cyclic, 1),
    "S": (_s, 2),
    "ModularS": (_modular_s, (1, 2)),
    "DihedralPow": (_dihedral, 1),
    "GenQuaternion": (_gen_quaternion, 1),
    "Q8": (_q8, 0),
    "S22": (_s22, 0),
    "TheoremIII": (_theorem_iii, 1),
    "H32": (_h32, 0),
    "H245": (_h245, 0),
    "H245W": (_h245_witness_form, 0),
    "S22oQ8": (_s22_q8_witness_form, 0),
    "Q8xQ8": (_q8_q8, 0),
}

BUILTIN_FAMILIES = tuple(_FAMILIES)


def builtin(name: str, params: Sequence[int] = ()) -> Presentation:
    """Presentation of a named family member, e.g. ``builtin("S", [2, 2])``.

    ``H245W`` and ``S22oQ8`` are the alternative four-generator forms of
    ``H245`` and of the central product of ``S22`` with ``Q8`` in which the
    explicit witness pairs are written; ``Q8xQ8`` uses generators ``a,b,c,d``.
    """
    if name not in _FAMILIES:
        raise PresentationError(f"unknown family {name!r}; known: {', '.join(_FAMILIES)}")
    fn, arity = _FAMILIES[name]
    params = tuple(int(p) for p in params)
    allowed = arity if isinstance(arity, tuple) else (arity,)
    if len(params) not in allowed:
        raise PresentationError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


_SPEC = re.compile(r"^\s*([A-Za-z][A-Za-z0-9]*)\s*(?:[\(\[]\s*([0-9,\s]*)[\)\]])?\s*$")


def parse_builtin_spec(spec: str) -> tuple[str, tuple[int, ...]]:
    """Split ``"S(2,3)"`` / ``"S[2,3]"`` / ``"Q8"`` into name and parameters."""
    m = _SPEC.match(spec)
    if not m:
        raise PresentationError(f"bad builtin spec {spec!r}")
    args = m.group(2)
    params = tuple(int(x) for x in args.split(",") if x.strip()) if args else ()
    return m.group(1), params
