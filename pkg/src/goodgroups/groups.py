"""Finite groups as multiplication tables.

Groups are built by coset enumeration over the trivial subgroup or by product
constructions, and carry enough bookkeeping (generator indices and names,
a word for every element) to evaluate words and format elements.  Everything
else here is subgroup arithmetic on the table: closures, centre, derived and
Frattini subgroups, the subgroup generated by involutions, and a backtracking
isomorphism test.
"""

from __future__ import annotations

import json
import string
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .presentation import Presentation, Word, format_word, word_letters

DEFAULT_COSET_LIMIT = 100_000
MAX_ORDER = 4096


class GroupError(ValueError):
    pass


class CosetLimitExceeded(GroupError):
    pass


class NotAnAutomorphism(GroupError):
    pass


class RelatorViolation(GroupError):
    pass


# ---------------------------------------------------------------------------
# the table type


class FiniteGroup:
    """An immutable finite group given by its multiplication table.

    ``mul[i, j]`` is the index of the product of elements ``i`` and ``j``.
    ``generators`` are element indices and ``gen_names`` their display names;
    words in those names can be evaluated with :meth:`evaluate`.
    """

    def __init__(
        self,
        mul,
        generators: Sequence[int] = (),
        gen_names: Sequence[str] | None = None,
        identity: int | None = None,
        validate: bool = True,
    ):
        mul = np.array(mul, dtype=np.int32)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise GroupError("multiplication table must be a nonempty square array")
        n = mul.shape[0]
        if identity is None:
            hits = np.flatnonzero((mul == np.arange(n)[None, :]).all(axis=1))
            if len(hits) != 1:
                raise GroupError("table has no two-sided identity")
            identity = int(hits[0])
        mul.flags.writeable = False
        self.mul = mul
        self.order = n
        self.identity = int(identity)
        self.generators = tuple(int(g) for g in generators)
        if gen_names is None:
            gen_names = _default_names(len(self.generators))
        self.gen_names = tuple(gen_names)
        if len(self.gen_names) != len(self.generators):
            raise GroupError("one name per generator required")
        if validate:
            self.validate()

    def validate(self, associativity_limit: int = 256) -> None:
        """Check closure, identity, inverses, generation and (for small orders) associativity."""
        n, mul, e = self.order, self.mul, self.identity
        if mul.min() < 0 or mul.max() >= n:
            raise GroupError("table entries out of range")
        if not (mul[e] == np.arange(n)).all() or not (mul[:, e] == np.arange(n)).all():
            raise GroupError("identity law fails")
        if any(len(np.unique(row)) != n for row in mul) or any(len(np.unique(col)) != n for col in mul.T):
            raise GroupError("table is not a Latin square (inverse law fails)")
        if n <= associativity_limit and not is_associative(mul):
            raise GroupError("multiplication is not associative")
        if len(self.closure(self.generators)) != n:
            raise GroupError("generators do not span the group")

    # -- basic element arithmetic

    @cached_property
    def inv(self) -> np.ndarray:
        rows, cols = np.nonzero(self.mul == self.identity)
        out = np.empty(self.order, dtype=np.int32)
        out[rows] = cols
        out.flags.writeable = False
        return out

    def m(self, *xs: int) -> int:
        r = self.identity
        for x in xs:
            r = int(self.mul[r, x])
        return r

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = int(self.inv[x]), -k
        r, base = self.identity, x
        while k:
            if k & 1:
                r = int(self.mul[r, base])
            base = int(self.mul[base, base])
            k >>= 1
        return r

    def comm(self, x: int, y: int) -> int:
        """``[x, y] = x^-1 y^-1 x y``."""
        return self.m(int(self.inv[x]), int(self.inv[y]), x, y)

    def conj(self, x: int, y: int) -> int:
        """``x^y = y^-1 x y``."""
        return self.m(int(self.inv[y]), x, y)

    @cached_property
    def orders(self) -> np.ndarray:
        n, mul, e = self.order, self.mul, self.identity
        out = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        for k in range(1, n + 1):
            hit = (cur == e) & (out == 0)
            out[hit] = k
            if (out > 0).all():
                break
            cur = mul[cur, np.arange(n)]
        out.flags.writeable = False
        return out

    def element_order(self, x: int) -> int:
        return int(self.orders[x])

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.orders))

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    @cached_property
    def ldiv(self) -> np.ndarray:
        """``ldiv[k, g]`` is ``g^-1 k``, the ``h`` with ``g h = k``."""
        n = self.order
        out = np.empty((n, n), dtype=np.int32)
        rows = np.arange(n)[:, None]
        out[self.mul, rows] = np.broadcast_to(np.arange(n)[None, :], (n, n))
        out.flags.writeable = False
        return out

    # -- words

    def evaluate(self, w: Word) -> int:
        r = self.identity
        for g, e in w:
            r = int(self.mul[r, self.power(self.generators[g], e)])
        return r

    @cached_property
    def words(self) -> tuple[Word, ...]:
        """A shortest word in the generators for every element (BFS tree)."""
        out: list[Word | None] = [None] * self.order
        out[self.identity] = ()
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for i, g in enumerate(self.generators):
                for y, step in ((int(self.mul[x, g]), 1), (int(self.mul[x, self.inv[g]]), -1)):
                    if out[y] is None:
                        w = out[x]
                        if w and w[-1][0] == i and (w[-1][1] > 0) == (step > 0):
                            out[y] = w[:-1] + ((i, w[-1][1] + step),)
                        else:
                            out[y] = w + ((i, step),)
                        queue.append(y)
        return tuple(out)  # type: ignore[arg-type]

    def name(self, x: int) -> str:
        return format_word(self.words[x], self.gen_names)

    @property
    def names(self) -> list[str]:
        return [self.name(x) for x in range(self.order)]

    # -- closures

    def closure(self, elements: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by ``elements`` (breadth-first right multiplication)."""
        gens = sorted({int(x) for x in elements} - {self.identity})
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = int(self.mul[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, gens={list(self.gen_names)})"

    # -- serialization

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "identity": self.identity,
            "generators": list(self.generators),
            "gen_names": list(self.gen_names),
            "mul": self.mul.tolist(),
            "names": self.names,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "FiniteGroup":
        g = cls(
            data["mul"],
            generators=data["generators"],
            gen_names=data.get("gen_names"),
            identity=data["identity"],
        )
        if int(data["order"]) != g.order:
            raise GroupError("declared order does not match table")
        return g

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "FiniteGroup":
        return cls.from_json(json.loads(text))


def _default_names(k: int) -> list[str]:
    letters = string.ascii_lowercase
    if k <= len(letters):
        return list(letters[:k])
    return [f"g{i}" for i in range(k)]


def is_associative(mul: np.ndarray) -> bool:
    """Exhaustive check of ``(xy)z == x(yz)``."""
    mul = np.asarray(mul)
    for x in range(mul.shape[0]):
        # (x y) z for all y, z versus x (y z)
        if not (mul[mul[x]] == mul[x][mul]).all():
            return False
    return True


def relabel(g: FiniteGroup, perm: Sequence[int], validate: bool = False) -> FiniteGroup:
    """The same group with element ``x`` renamed ``perm[x]``."""
    perm = np.asarray(perm)
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    mul = perm[g.mul[np.ix_(inv, inv)]]
    return FiniteGroup(
        mul,
        generators=[int(perm[x]) for x in g.generators],
        gen_names=g.gen_names,
        identity=int(perm[g.identity]),
        validate=validate,
    )


def canonical(g: FiniteGroup) -> FiniteGroup:
    """Renumber so the identity is 0 and the rest follow breadth-first generator closure."""
    order = [g.identity]
    seen = {g.identity}
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for s in g.generators:
            y = int(g.mul[x, s])
            if y not in seen:
                seen.add(y)
                order.append(y)
    if len(order) != g.order:
        raise GroupError("generators do not span the group")
    perm = np.empty(g.order, dtype=np.int64)
    perm[order] = np.arange(g.order)
    return relabel(g, perm)


# ---------------------------------------------------------------------------
# coset enumeration


class _CosetTable:
    """HLT coset enumeration with lookahead over the trivial subgroup."""

    def __init__(self, ngens: int, relators: list[list[int]], limit: int):
        self.ncols = 2 * ngens
        self.relators = relators
        self.limit = limit
        self.table: list[list[int]] = [[-1] * self.ncols]
        self.parent: list[int] = [0]
        self.live = 1

    def rep(self, c: int) -> int:
        p = self.parent
        r = c
        while p[r] != r:
            r = p[r]
        while p[c] != r:
            p[c], c = r, p[c]
        return r

    def define(self, c: int, x: int) -> int:
        if self.live >= self.limit:
            self.lookahead()
            if self.live >= self.limit:
                raise CosetLimitExceeded(f"coset enumeration exceeded {self.limit} live cosets")
            c = self.rep(c)
            if self.table[c][x] >= 0:
                return self.table[c][x]
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        return d

    def merge(self, k: int, l: int, queue: list[int]):
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        if k > l:
            k, l = l, k
        self.parent[l] = k
        self.live -= 1
        queue.append(l)

    def coincidence(self, a: int, b: int):
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        table = self.table
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = table[e][x]
                if f < 0:
                    continue
                if table[f][x ^ 1] == e:
                    table[f][x ^ 1] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if table[e1][x] >= 0:
                    self.merge(f1, table[e1][x], queue)
                elif table[f1][x ^ 1] >= 0:
                    self.merge(e1, table[f1][x ^ 1], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1

    def scan(self, alpha: int, w: list[int], fill: bool) -> None:
        table = self.table
        f, b = alpha, alpha
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != alpha:
                    self.coincidence(f, alpha)
                return
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            if not fill:
                return
            self.define(f, w[i])
            # define may have triggered a lookahead that merged cosets
            if self.parent[alpha] != alpha:
                return
            f, b = self.rep(f), self.rep(b)

    def lookahead(self):
        for c in range(len(self.table)):
            if self.parent[c] != c:
                continue
            for w in self.relators:
                self.scan(c, w, fill=False)
                if self.parent[c] != c:
                    break

    def run(self):
        alpha = 0
        while alpha < len(self.table):
            if self.parent[alpha] == alpha:
                for w in self.relators:
                    self.scan(alpha, w, fill=True)
                    if self.parent[alpha] != alpha:
                        break
                if self.parent[alpha] == alpha:
                    for x in range(self.ncols):
                        if self.table[alpha][x] < 0:
                            self.define(alpha, x)
            alpha += 1

    def compact(self) -> np.ndarray:
        live = [c for c in range(len(self.table)) if self.parent[c] == c]
        index = {c: i for i, c in enumerate(live)}
        out = np.empty((len(live), self.ncols), dtype=np.int64)
        for i, c in enumerate(live):
            for x in range(self.ncols):
                out[i, x] = index[self.rep(self.table[c][x])]
        return out


def todd_coxeter(p: Presentation, coset_limit: int = DEFAULT_COSET_LIMIT) -> FiniteGroup:
    """Enumerate cosets of the trivial subgroup and return the regular table.

    Element ``i`` is the coset ``i``; the identity coset is element 0 and the
    result is renumbered canonically (breadth-first over the generators).
    """
    if p.is_free:
        raise GroupError("presentation has no relators (free group)")
    if coset_limit < 1:
        raise GroupError("coset_limit must be positive")
    k = len(p.generators)
    rels = [word_letters(r) for r in p.relators]
    ct = _CosetTable(k, rels, coset_limit)
    ct.run()
    table = ct.compact()
    n = table.shape[0]
    # right action of generator i on cosets is table[:, 2i]; element j's column
    # in the multiplication table follows a spanning-tree word for j
    mul = np.empty((n, n), dtype=np.int64)
    mul[:, 0] = np.arange(n)
    done = np.zeros(n, dtype=bool)
    done[0] = True
    queue = deque([0])
    while queue:
        j = queue.popleft()
        for x in range(2 * k):
            y = int(table[j, x])
            if not done[y]:
                done[y] = True
                mul[:, y] = table[mul[:, j], x]
                queue.append(y)
    gens = [int(table[0, 2 * i]) for i in range(k)]
    g = FiniteGroup(mul, generators=gens, gen_names=p.generators, identity=0, validate=False)
    g = canonical(g)
    g.validate()
    for r in p.relators:
        if g.evaluate(r) != g.identity:
            raise GroupError("relator does not evaluate to the identity")
    return g


# ---------------------------------------------------------------------------
# subgroups


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(repr=False, compare=False)
    members: frozenset[int]

    def __post_init__(self):
        g = self.parent
        if g.identity not in self.members:
            raise GroupError("subgroup must contain the identity")
        if g.order % len(self.members):
            raise GroupError("subgroup order must divide the group order")

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        return int(x) in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def is_normal(self) -> bool:
        g = self.parent
        return all(g.conj(x, s) in self.members for x in self.members for s in g.generators)

    def is_central(self) -> bool:
        return self.members <= center(self.parent).members

    def index(self) -> int:
        return self.parent.order // self.order


def subgroup_generated(g: FiniteGroup, s: Iterable[int]) -> Subgroup:
    return Subgroup(g, g.closure(s))


def center(g: FiniteGroup) -> Subgroup:
    mul = g.mul
    members = np.flatnonzero((mul == mul.T).all(axis=1))
    return Subgroup(g, frozenset(int(x) for x in members))


def centralizer(g: FiniteGroup, s: Iterable[int]) -> Subgroup:
    s = list(s)
    mul = g.mul
    mask = np.ones(g.order, dtype=bool)
    for x in s:
        mask &= mul[:, x] == mul[x, :]
    return Subgroup(g, frozenset(int(x) for x in np.flatnonzero(mask)))


def commutator_subgroup(g: FiniteGroup) -> Subgroup:
    n = g.order
    inv, mul = g.inv, g.mul
    # [x, y] = x^-1 y^-1 x y for all pairs
    xy = mul
    yx_inv = inv[mul.T]  # (y x)^-1 = x^-1 y^-1
    comms = mul[yx_inv, xy]
    return subgroup_generated(g, np.unique(comms).tolist())


def squares(g: FiniteGroup) -> set[int]:
    return {int(x) for x in np.unique(g.mul[np.arange(g.order), np.arange(g.order)])}


def involutions(g: FiniteGroup) -> list[int]:
    return [int(x) for x in np.flatnonzero(g.orders == 2)]


def omega_subgroup(g: FiniteGroup) -> Subgroup:
    """Subgroup generated by all elements of order 2."""
    return subgroup_generated(g, involutions(g))


def frattini_subgroup(g: FiniteGroup) -> Subgroup:
    """``G' G^2``: generated by squares and commutators (Frattini for 2-groups)."""
    return subgroup_generated(g, squares(g) | set(commutator_subgroup(g).members))


def agemo_like(g: FiniteGroup, k: int) -> Subgroup:
    """``<x^(2^k) : x in G>``."""
    return subgroup_generated(g, {g.power(x, 2**k) for x in range(g.order)})


def omega_like(g: FiniteGroup, k: int) -> Subgroup:
    """``<x : x^(2^k) = 1>``."""
    return subgroup_generated(g, [x for x in range(g.order) if g.power(x, 2**k) == g.identity])


def exponent(g: FiniteGroup) -> int:
    return g.exponent


def element_order(g: FiniteGroup, x: int) -> int:
    return g.element_order(x)


def conjugacy_classes(g: FiniteGroup) -> list[frozenset[int]]:
    n = g.order
    seen = np.zeros(n, dtype=bool)
    out = []
    inv, mul = g.inv, g.mul
    for x in range(n):
        if seen[x]:
            continue
        # y^-1 x y over all y
        cls = np.unique(mul[inv, mul[x]])
        seen[cls] = True
        out.append(frozenset(int(c) for c in cls))
    return out


def maximal_subgroups_intersection(g: FiniteGroup) -> Subgroup:
    """Intersection of all maximal subgroups, by brute force (small groups only).

    Used as an independent cross-check of :func:`frattini_subgroup`.
    """
    n = g.order
    subs: set[frozenset[int]] = set()
    # every maximal subgroup is generated by at most d elements; for the small
    # 2-groups this is used on, growing subgroups one element at a time works
    frontier = {frozenset({g.identity})}
    while frontier:
        new = set()
        for h in frontier:
            for x in range(n):
                if x in h:
                    continue
                k = g.closure(set(h) | {x})
                if len(k) < n and k not in subs:
                    subs.add(k)
                    new.add(k)
        frontier = new
    maximal = [h for h in subs if not any(h < k for k in subs)]
    if not maximal:
        return Subgroup(g, frozenset({g.identity}))
    inter = frozenset.intersection(*maximal)
    return Subgroup(g, inter)


def quotient(g: FiniteGroup, n: Subgroup, gen_names: Sequence[str] | None = None) -> FiniteGroup:
    """``G/N`` for a normal subgroup ``N``; generators are the images of ``g``'s."""
    if not n.is_normal():
        raise GroupError("quotient needs a normal subgroup")
    label = -np.ones(g.order, dtype=np.int64)
    reps = []
    members = np.array(sorted(n.members))
    for x in range(g.order):
        if label[x] >= 0:
            continue
        coset = g.mul[x, members]
        label[coset] = len(reps)
        reps.append(x)
    reps = np.array(reps)
    mul = label[g.mul[np.ix_(reps, reps)]]
    gens = [int(label[s]) for s in g.generators]
    names = list(gen_names) if gen_names is not None else list(g.gen_names)
    return canonical(FiniteGroup(mul, gens, names, identity=int(label[g.identity])))


# ---------------------------------------------------------------------------
# products


def _merge_names(a: Sequence[str], b: Sequence[str]) -> list[str]:
    used = set(a)
    out = list(a)
    spare = (c for c in string.ascii_lowercase if c not in used and c not in b)
    for name in b:
        if name in used:
            name = next(spare)
        used.add(name)
        out.append(name)
    return out


def direct_product(g: FiniteGroup, h: FiniteGroup, gen_names: Sequence[str] | None = None) -> FiniteGroup:
    """Componentwise table; pair ``(x, y)`` is element ``x * |h| + y``.

    Clashing generator names in ``h`` are renamed to unused letters unless
    ``gen_names`` is given.
    """
    nh = h.order
    mul = (g.mul[:, None, :, None] * nh + h.mul[None, :, None, :]).reshape(g.order * nh, g.order * nh)
    gens = [x * nh + h.identity for x in g.generators] + [g.identity * nh + y for y in h.generators]
    names = list(gen_names) if gen_names is not None else _merge_names(g.gen_names, h.gen_names)
    return canonical(FiniteGroup(mul, gens, names, identity=g.identity * nh + h.identity, validate=False))


def _check_automorphism(n: FiniteGroup, perm: np.ndarray) -> None:
    if sorted(perm.tolist()) != list(range(n.order)):
        raise NotAnAutomorphism("action is not a bijection")
    if not (perm[n.mul] == n.mul[np.ix_(perm, perm)]).all():
        raise NotAnAutomorphism("action does not respect multiplication")


def semidirect_product(
    n: FiniteGroup,
    h: FiniteGroup,
    action: Mapping[int, Sequence[int]] | Sequence[Sequence[int]],
    gen_names: Sequence[str] | None = None,
) -> FiniteGroup:
    """``N x| H`` with ``(n1, h1)(n2, h2) = (n1 * act(h1)(n2), h1 h2)``.

    ``action`` maps each generator of ``h`` (by position in ``h.generators``
    or, for a mapping, by element index) to a permutation of ``n``'s elements.
    The assignment must extend to a homomorphism ``H -> Aut(N)``.
    """
    if isinstance(action, Mapping):
        perms = {int(k): np.asarray(v, dtype=np.int64) for k, v in action.items()}
    else:
        perms = {s: np.asarray(v, dtype=np.int64) for s, v in zip(h.generators, action)}
    for s in h.generators:
        if s not in perms:
            raise GroupError(f"no action given for generator {s}")
    for p in perms.values():
        _check_automorphism(n, p)
    ident = np.arange(n.order)
    act: list[np.ndarray | None] = [None] * h.order
    act[h.identity] = ident
    queue = deque([h.identity])
    while queue:
        x = queue.popleft()
        for s in h.generators:
            y = int(h.mul[x, s])
            a = act[x][perms[s]]  # act(x s) = act(x) o act(s)
            if act[y] is None:
                act[y] = a
                queue.append(y)
            elif not (act[y] == a).all():
                raise RelatorViolation("generator action does not extend to a homomorphism")
    acts = np.stack(act)  # (|H|, |N|)
    for x in range(h.order):
        if not (acts[h.mul[x]] == act[x][acts]).all():
            raise RelatorViolation("generator action does not extend to a homomorphism")
    nn, nh = n.order, h.order
    # element (a, x) -> a * nh + x
    A = np.arange(nn)[:, None, None, None]
    X = np.arange(nh)[None, :, None, None]
    B = np.arange(nn)[None, None, :, None]
    Y = np.arange(nh)[None, None, None, :]
    first = n.mul[A, acts[X, B]]
    mul = (first * nh + h.mul[X, Y]).reshape(nn * nh, nn * nh)
    gens = [a * nh + h.identity for a in n.generators] + [n.identity * nh + y for y in h.generators]
    names = list(gen_names) if gen_names is not None else _merge_names(n.gen_names, h.gen_names)
    return canonical(FiniteGroup(mul, gens, names, identity=n.identity * nh + h.identity, validate=False))


def central_product(
    g: FiniteGroup, h: FiniteGroup, z_g: int, z_h: int, gen_names: Sequence[str] | None = None
) -> FiniteGroup:
    """``(G x H) / <(z_g, z_h^-1)>`` for central elements of equal order."""
    zg, zh = center(g), center(h)
    if z_g not in zg or z_h not in zh:
        raise GroupError("central product needs central elements")
    if g.element_order(z_g) != h.element_order(z_h):
        raise GroupError("identified elements must have equal orders")
    nh = h.order
    mul = (g.mul[:, None, :, None] * nh + h.mul[None, :, None, :]).reshape(g.order * nh, g.order * nh)
    gens = [x * nh + h.identity for x in g.generators] + [g.identity * nh + y for y in h.generators]
    names = list(gen_names) if gen_names is not None else _merge_names(g.gen_names, h.gen_names)
    prod = FiniteGroup(mul, gens, names, identity=g.identity * nh + h.identity, validate=False)
    z = z_g * nh + int(h.inv[z_h])
    return quotient(prod, subgroup_generated(prod, [z]))


# ---------------------------------------------------------------------------
# isomorphism


@dataclass(frozen=True)
class Isomorphism:
    """A verified isomorphism; ``images[x]`` is the image of element ``x``."""

    source: FiniteGroup = field(repr=False)
    target: FiniteGroup = field(repr=False)
    images: tuple[int, ...]
    generator_images: dict[str, int]

    def __call__(self, x: int) -> int:
        return self.images[x]


def _element_fingerprints(g: FiniteGroup) -> list[tuple]:
    cls_size = np.zeros(g.order, dtype=np.int64)
    for c in conjugacy_classes(g):
        for x in c:
            cls_size[x] = len(c)
    sq = g.mul[np.arange(g.order), np.arange(g.order)]
    roots = np.bincount(sq, minlength=g.order)
    return [
        (int(g.orders[x]), int(cls_size[x]), int(roots[x]), int(cls_size[sq[x]]))
        for x in range(g.order)
    ]


def group_fingerprint(g: FiniteGroup) -> tuple:
    """Isomorphism invariants used for pruning: order census, centre, derived subgroup..."""
    fp = sorted(_element_fingerprints(g))
    return (
        g.order,
        g.exponent,
        len(center(g)),
        len(commutator_subgroup(g)),
        len(conjugacy_classes(g)),
        tuple(fp),
    )


def generating_set(g: FiniteGroup) -> list[int]:
    """A small generating set; minimal for p-groups (a basis of ``G/Phi(G)``).

    Elements of large order and small class are preferred, which keeps the
    candidate lists short in :func:`isomorphism_test`.
    """
    phi = frattini_subgroup(g).members
    n = g.order
    is_p_group = n & (n - 1) == 0
    fps = _element_fingerprints(g)
    counts: dict[tuple, int] = {}
    for f in fps:
        counts[f] = counts.get(f, 0) + 1
    cand = sorted(range(n), key=lambda x: (counts[fps[x]], -int(g.orders[x]), x))
    chosen: list[int] = []
    span = set(phi) if is_p_group else {g.identity}
    span = set(g.closure(span))
    for x in cand:
        if len(span) == n:
            break
        if x in span:
            continue
        chosen.append(x)
        span = set(g.closure(span | {x}))
    return chosen


def isomorphism_test(g: FiniteGroup, h: FiniteGroup) -> Isomorphism | None:
    """Backtracking search for an isomorphism ``g -> h``; ``None`` if none exists.

    Images of a small generating set of ``g`` are tried among elements of ``h``
    with matching fingerprints; each partial assignment is propagated over the
    subgroup it generates and abandoned on the first conflict.  A complete
    candidate is verified on the full tables before being returned.
    """
    if g.order != h.order:
        return None
    if group_fingerprint(g) != group_fingerprint(h):
        return None
    n = g.order
    fg, fh = _element_fingerprints(g), _element_fingerprints(h)
    gens = generating_set(g)
    by_fp: dict[tuple, list[int]] = {}
    for y in range(n):
        by_fp.setdefault(fh[y], []).append(y)
    candidates = [by_fp.get(fg[s], []) for s in gens]
    gmul, hmul = g.mul, h.mul

    def extend(phi: dict[int, int], used: set[int], s: int, t: int):
        # propagate phi over <domain, s> with s -> t; return None on conflict
        phi = dict(phi)
        used = set(used)
        phi[s] = t
        used.add(t)
        queue = deque(phi.keys())
        active = [x for x in gens_so_far] + [s]
        while queue:
            x = queue.popleft()
            for a in active:
                for y, img in ((int(gmul[x, a]), int(hmul[phi[x], phi[a]])), (int(gmul[a, x]), int(hmul[phi[a], phi[x]]))):
                    if y in phi:
                        if phi[y] != img:
                            return None
                    else:
                        if img in used:
                            return None
                        phi[y] = img
                        used.add(img)
                        queue.append(y)
        return phi, used

    gens_so_far: list[int] = []

    def search(i: int, phi: dict[int, int], used: set[int]):
        if i == len(gens):
            return phi if len(phi) == n else None
        s = gens[i]
        for t in candidates[i]:
            if t in used:
                continue
            r = extend(phi, used, s, t)
            if r is None:
                continue
            gens_so_far.append(s)
            res = search(i + 1, *r)
            gens_so_far.pop()
            if res is not None:
                return res
        return None

    phi0 = {g.identity: h.identity}
    result = search(0, phi0, {h.identity})
    if result is None:
        return None
    images = np.array([result[x] for x in range(n)])
    if len(set(images.tolist())) != n or not (images[gmul] == hmul[np.ix_(images, images)]).all():
        raise AssertionError("isomorphism candidate failed verification")
    return Isomorphism(
        g, h, tuple(int(x) for x in images), {nm: int(images[s]) for nm, s in zip(g.gen_names, g.generators)}
    )


def are_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    return isomorphism_test(g, h) is not None


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class StructuralReport:
    order: int
    exponent: int
    abelian: bool
    center_order: int
    derived_order: int
    frattini_order: int
    omega_order: int
    frattini_equals_omega: bool
    omega_central: bool
    involutions_central: bool
    derived_in_omega: bool
    conjugacy_classes: int

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def structural_report(g: FiniteGroup) -> StructuralReport:
    z = center(g)
    d = commutator_subgroup(g)
    phi = frattini_subgroup(g)
    om = omega_subgroup(g)
    return StructuralReport(
        order=g.order,
        exponent=g.exponent,
        abelian=g.is_abelian,
        center_order=len(z),
        derived_order=len(d),
        frattini_order=len(phi),
        omega_order=len(om),
        frattini_equals_omega=phi.members == om.members,
        omega_central=om.members <= z.members,
        involutions_central=set(involutions(g)) <= z.members,
        derived_in_omega=d.members <= om.members,
        conjugacy_classes=len(conjugacy_classes(g)),
    )


def cyclic_group(n: int, name: str = "c") -> FiniteGroup:
    i = np.arange(n)
    return FiniteGroup((i[:, None] + i[None, :]) % n, generators=[1 % n] if n > 1 else [0], gen_names=[name])
