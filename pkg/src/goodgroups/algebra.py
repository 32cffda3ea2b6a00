"""The group algebra KG for K = GF(2) or GF(4).

An element stores one GF(2) coefficient plane per bit of the field element
(GF(4) scalars are ``0, 1, w = 2, w^2 = 3``).  For linear algebra each
element is also viewed as a GF(2) vector of length ``k * |G|`` packed into an
int: plane ``p`` occupies bits ``p*|G| .. (p+1)*|G| - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import gf2
from .groups import FiniteGroup, Subgroup, conjugacy_classes
from .presentation import PresentationSyntaxError, _Lexer, format_word


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^k) for k in {1, 2}; scalars are ints ``0 .. 2^k - 1``."""

    degree: int

    def __post_init__(self):
        if self.degree not in (1, 2):
            raise AlgebraError("only GF(2) and GF(4) are supported")

    @property
    def size(self) -> int:
        return 1 << self.degree

    @property
    def name(self) -> str:
        return f"gf{self.size}"

    def add(self, x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_table[x, y])

    @property
    def mul_table(self) -> np.ndarray:
        return _mul_table(self.degree)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return next(y for y in range(self.size) if self.mul(x, y) == 1)

    def elements(self) -> range:
        return range(self.size)


@lru_cache(maxsize=None)
def _mul_table(degree: int) -> np.ndarray:
    if degree == 1:
        t = np.array([[0, 0], [0, 1]])
    else:
        # GF(4) = GF(2)[w]/(w^2 + w + 1), scalar b0 + 2*b1 <-> b0 + b1 w
        t = np.zeros((4, 4), dtype=np.int64)
        for x in range(4):
            for y in range(4):
                x0, x1, y0, y1 = x & 1, x >> 1, y & 1, y >> 1
                c0 = (x0 & y0) ^ (x1 & y1)
                c1 = (x0 & y1) ^ (x1 & y0) ^ (x1 & y1)
                t[x, y] = c0 | (c1 << 1)
    t.flags.writeable = False
    return t


GF2 = FieldSpec(1)
GF4 = FieldSpec(2)


def field_from_name(name: str) -> FieldSpec:
    try:
        return {"gf2": GF2, "gf4": GF4}[name.lower()]
    except KeyError:
        raise AlgebraError(f"unknown field {name!r} (use gf2 or gf4)") from None


def convolve(g: FiniteGroup, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """GF(2) product of coefficient vectors: ``(xy)[k] = sum_g x[g] y[g^-1 k]``.

    Works on trailing axis; leading axes broadcast (used for batches).
    """
    # uint8 wraps mod 256 which preserves parity
    return (y[..., g.ldiv] @ x[..., :, None])[..., 0] & 1 if x.ndim > 1 else (y[g.ldiv] @ x) & 1


class AlgebraElement:
    """An immutable element of KG."""

    __slots__ = ("group", "field", "planes")

    def __init__(self, group: FiniteGroup, field: FieldSpec, planes):
        planes = np.asarray(planes, dtype=np.uint8).reshape(field.degree, group.order) & 1
        planes.flags.writeable = False
        self.group = group
        self.field = field
        self.planes = planes

    # -- constructors

    @classmethod
    def zero(cls, group: FiniteGroup, field: FieldSpec = GF2) -> "AlgebraElement":
        return cls(group, field, np.zeros((field.degree, group.order), dtype=np.uint8))

    @classmethod
    def basis(cls, group: FiniteGroup, x: int, field: FieldSpec = GF2, scalar: int = 1) -> "AlgebraElement":
        p = np.zeros((field.degree, group.order), dtype=np.uint8)
        for b in range(field.degree):
            p[b, x] = (scalar >> b) & 1
        return cls(group, field, p)

    @classmethod
    def one(cls, group: FiniteGroup, field: FieldSpec = GF2) -> "AlgebraElement":
        return cls.basis(group, group.identity, field)

    @classmethod
    def from_int(cls, group: FiniteGroup, field: FieldSpec, v: int) -> "AlgebraElement":
        n = group.order
        k = field.degree
        nbytes = (k * n + 7) // 8
        bits = np.unpackbits(np.frombuffer(v.to_bytes(nbytes, "little"), dtype=np.uint8), bitorder="little")
        return cls(group, field, bits[: k * n].reshape(k, n))

    @classmethod
    def from_coeffs(cls, group: FiniteGroup, field: FieldSpec, coeffs: Sequence[int]) -> "AlgebraElement":
        c = np.asarray(coeffs, dtype=np.int64)
        return cls(group, field, np.stack([(c >> b) & 1 for b in range(field.degree)]))

    # -- views

    def to_int(self) -> int:
        bits = self.planes.reshape(-1)
        return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")

    @property
    def coeffs(self) -> np.ndarray:
        out = np.zeros(self.group.order, dtype=np.int64)
        for b in range(self.field.degree):
            out |= self.planes[b].astype(np.int64) << b
        return out

    def coefficient(self, x: int) -> int:
        return int(self.coeffs[x])

    def support(self) -> list[int]:
        return [int(x) for x in np.flatnonzero(self.planes.any(axis=0))]

    def is_zero(self) -> bool:
        return not self.planes.any()

    # -- arithmetic

    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected an AlgebraElement")
        if other.group is not self.group or other.field != self.field:
            raise AlgebraError("elements belong to different algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if isinstance(other, int):
            other = AlgebraElement.one(self.group, self.field) * other
        self._check(other)
        return AlgebraElement(self.group, self.field, self.planes ^ other.planes)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return self

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        self._check(other)
        g = self.group
        if self.field.degree == 1:
            return AlgebraElement(g, self.field, convolve(g, self.planes[0], other.planes[0])[None, :])
        x0, x1 = self.planes
        y0, y1 = other.planes
        a = convolve(g, x0, y0)
        b = convolve(g, x1, y1)
        c = convolve(g, x0, y1) ^ convolve(g, x1, y0)
        return AlgebraElement(g, self.field, np.stack([a ^ b, c ^ b]))

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        return NotImplemented

    def scale(self, s: int) -> "AlgebraElement":
        if s not in self.field.elements():
            raise AlgebraError(f"{s} is not a scalar of {self.field.name}")
        table = self.field.mul_table
        return AlgebraElement.from_coeffs(self.group, self.field, table[s][self.coeffs])

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            return unit_inverse(self) ** (-k)
        r = AlgebraElement.one(self.group, self.field)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == AlgebraElement.one(self.group, self.field) * other
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return other.group is self.group and other.field == self.field and bool((self.planes == other.planes).all())

    def __hash__(self) -> int:
        return hash((id(self.group), self.field, self.planes.tobytes()))

    def commutes_with(self, other: "AlgebraElement") -> bool:
        return self * other == other * self

    def __repr__(self) -> str:
        return f"AlgebraElement({format_element(self)})"

    def __str__(self) -> str:
        return format_element(self)


def add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x + y


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def square(x: AlgebraElement) -> AlgebraElement:
    return x * x


def augmentation(x: AlgebraElement) -> int:
    """Sum of coefficients (the augmentation map to the field)."""
    return int(np.bitwise_xor.reduce(x.coeffs)) if x.group.order else 0


def bar(group: FiniteGroup, x: int, field: FieldSpec = GF2) -> AlgebraElement:
    """Sum of the distinct powers of ``x``."""
    p = np.zeros((field.degree, group.order), dtype=np.uint8)
    y = group.identity
    for _ in range(group.element_order(x)):
        p[0, y] = 1
        y = int(group.mul[y, x])
    return AlgebraElement(group, field, p)


def group_element(group: FiniteGroup, x: int, field: FieldSpec = GF2) -> AlgebraElement:
    return AlgebraElement.basis(group, x, field)


class NotNormalized(AlgebraError):
    pass


def unit_inverse(u: AlgebraElement) -> AlgebraElement:
    """Inverse of an augmentation-1 element: ``sum_i (1 + u)^i``.

    ``1 + u`` lies in the augmentation ideal, which is nilpotent for a
    finite 2-group in characteristic 2, so the sum is finite.
    """
    if augmentation(u) != 1:
        raise NotNormalized("unit_inverse needs augmentation 1")
    one = AlgebraElement.one(u.group, u.field)
    t = one + u
    total = one
    term = one
    for _ in range(u.group.order + 1):
        term = term * t
        if term.is_zero():
            return total
        total = total + term
    raise AlgebraError("1 + u is not nilpotent; is the group a 2-group?")


# ---------------------------------------------------------------------------
# subspaces of KG, in the GF(2) view


def ambient_dim(group: FiniteGroup, field: FieldSpec) -> int:
    return field.degree * group.order


def _scalar_multiples(x: AlgebraElement) -> list[int]:
    # GF(2)-spanning set of the K-line through x
    return [x.scale(s).to_int() for s in range(1, x.field.size)] if x.field.degree > 1 else [x.to_int()]


def commutator_subspace(group: FiniteGroup, field: FieldSpec = GF2) -> gf2.SubspaceBasis:
    """The span of all ``xy - yx`` (spanned by ``gh + hg`` over group elements)."""
    n = group.order
    vecs = []
    mul = group.mul
    for g in range(n):
        for h in range(g + 1, n):
            a, b = int(mul[g, h]), int(mul[h, g])
            if a != b:
                v = (1 << a) | (1 << b)
                for plane in range(field.degree):
                    vecs.append(v << (plane * n))
    return gf2.span(vecs, ambient_dim(group, field))


def augmentation_ideal(group: FiniteGroup, n: Subgroup | Iterable[int], field: FieldSpec = GF2) -> gf2.SubspaceBasis:
    """``I(N)``: span of ``g (m - 1)`` for ``g`` in ``G`` and ``m`` in ``N``."""
    members = n.members if isinstance(n, Subgroup) else frozenset(n)
    gens = [m for m in members if m != group.identity]
    size = group.order
    vecs = []
    for g in range(size):
        for m in gens:
            a = int(group.mul[g, m])
            v = (1 << a) | (1 << g)
            for plane in range(field.degree):
                vecs.append(v << (plane * size))
    return gf2.span(vecs, ambient_dim(group, field))


def augmentation_zero(group: FiniteGroup, field: FieldSpec = GF2) -> gf2.SubspaceBasis:
    return augmentation_ideal(group, range(group.order), field)


def class_count(group: FiniteGroup) -> int:
    return len(conjugacy_classes(group))


# ---------------------------------------------------------------------------
# literals like "1 + a + b*c^2"


def parse_element(text: str, group: FiniteGroup, field: FieldSpec = GF2) -> AlgebraElement:
    """Parse a literal such as ``1 + a + b*c^2`` or ``1 + b(1 + c^2)``.

    Grammar (products bind tighter than sums, powers tighter than products)::

        sum     := product (('+' | '-') product)*
        product := factor ('*'? factor)*
        factor  := primary ('^' (['-'] int | primary))*
        primary := name | '1' | '(' sum ')' | '[' sum ',' sum ']'

    ``x^y`` with a non-integer exponent is ``y^-1 x y``.  Over GF(4) the
    names ``w`` and ``w2`` denote the scalars w and w^2 unless they are
    generator names.
    """
    return _LiteralParser(text, group, field).parse()


class _LiteralParser:
    def __init__(self, text: str, group: FiniteGroup, field: FieldSpec):
        self.lex = _Lexer(text)
        self.group = group
        self.field = field
        self.index = {n: i for i, n in enumerate(group.gen_names)}

    def parse(self) -> AlgebraElement:
        x = self.sum()
        if self.lex.peek() is not None:
            self.lex.error("trailing input")
        return x

    def sum(self) -> AlgebraElement:
        x = self.product()
        while self.lex.at("+") or self.lex.at("-"):
            self.lex.next()
            x = x + self.product()
        return x

    def product(self) -> AlgebraElement:
        x = self.factor()
        while True:
            tok = self.lex.peek()
            if tok == ("op", "*"):
                self.lex.next()
                x = x * self.factor()
            elif tok is not None and (tok[0] in ("name", "num") or tok[1] in ("(", "[")):
                x = x * self.factor()
            else:
                return x

    def factor(self) -> AlgebraElement:
        x = self.primary()
        while self.lex.at("^"):
            self.lex.next()
            tok = self.lex.peek()
            if tok is not None and (tok[0] == "num" or tok == ("op", "-")):
                sign = 1
                if tok == ("op", "-"):
                    self.lex.next()
                    sign = -1
                x = _power(x, sign * int(self.lex.expect("num")))
            else:
                y = self.primary()
                x = _power(y, -1) * x * y
        return x

    def primary(self) -> AlgebraElement:
        lex = self.lex
        lex._skip()
        start = lex.pos
        tok = lex.next()
        if tok is None:
            lex.error("unexpected end of input")
        kind, value = tok
        g, f = self.group, self.field
        if kind == "name":
            if value in self.index:
                return group_element(g, g.generators[self.index[value]], f)
            if f.degree == 2 and value in ("w", "w2"):
                return AlgebraElement.one(g, f) * (2 if value == "w" else 3)
            raise PresentationSyntaxError(f"unknown generator {value!r}", lex.text, start)
        if kind == "num":
            if value not in ("0", "1"):
                raise PresentationSyntaxError("only 0 and 1 are numeric literals", lex.text, start)
            return AlgebraElement.one(g, f) * int(value)
        if value == "(":
            x = self.sum()
            lex.expect("op", ")")
            return x
        if value == "[":
            u = self.sum()
            lex.expect("op", ",")
            v = self.sum()
            lex.expect("op", "]")
            return _power(u, -1) * _power(v, -1) * u * v
        raise PresentationSyntaxError(f"unexpected {value!r}", lex.text, start)


def _power(x: AlgebraElement, k: int) -> AlgebraElement:
    supp = x.support()
    if k < 0 and len(supp) == 1 and x.coefficient(supp[0]) == 1:
        return group_element(x.group, x.group.power(supp[0], k), x.field)
    return x**k


def format_element(x: AlgebraElement) -> str:
    """Canonical literal: terms in element-index order, identity first as ``1``."""
    g = x.group
    coeffs = x.coeffs
    terms = []
    order = [g.identity] + [i for i in range(g.order) if i != g.identity]
    for i in order:
        c = int(coeffs[i])
        if not c:
            continue
        word = format_word(g.words[i], g.gen_names)
        if c == 1:
            terms.append(word)
        else:
            s = {2: "w", 3: "w^2"}[c]
            terms.append(s if word == "1" else f"{s}*{word}")
    return " + ".join(terms) if terms else "0"
