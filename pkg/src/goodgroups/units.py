"""Involutions of the normalized unit group V(KG).

In characteristic 2, ``(1 + z)^2 = 1 + z^2``, so the involutions of V(KG) are
exactly the elements ``1 + z`` with ``z != 0``, ``z^2 = 0`` (such ``z`` have
augmentation 0 automatically).  Every square-zero ``z`` lies in the linear
space

    W = {z : aug(z) = 0 and z^2 in [KG, KG]}

because ``z -> z^2 mod [KG, KG]`` is additive.  The search over W is exact
but cut down first: on the radical R of the form ``B(u, v) = uv + vu``
restricted to W, squaring is additive, so ``(c + t)^2 = c^2 + t^2`` for
``t`` in R.  Hence W only has to be enumerated modulo R: a coset ``c + R``
contains square-zero elements iff ``c^2`` lies in ``R^2``, and then they form
a coset of ``T = {t in R : t^2 = 0}``.  The remaining coordinates are walked
in Gray-code order with vectorised blocks.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from . import gf2
from .algebra import (
    GF2,
    AlgebraElement,
    AlgebraError,
    FieldSpec,
    ambient_dim,
    augmentation,
    augmentation_ideal,
    bar,
    commutator_subspace,
    format_element,
    group_element,
    parse_element,
)
from .groups import (
    FiniteGroup,
    center,
    involutions,
    isomorphism_test,
    omega_subgroup,
)

DEFAULT_MAX_DIM = 26
LOW_BLOCK = 16


class DimensionExceeded(RuntimeError):
    pass


def max_dim_default() -> int:
    return int(os.environ.get("GOODGROUPS_MAX_DIM", DEFAULT_MAX_DIM))


def workers_default() -> int:
    return int(os.environ.get("GOODGROUPS_WORKERS", 1))


# ---------------------------------------------------------------------------
# the linear hull of the square-zero elements


def square_zero_kernel(group: FiniteGroup, field: FieldSpec = GF2) -> gf2.SubspaceBasis:
    """W = {z : aug(z) = 0, z^2 in L(KG)}, as a subspace of the GF(2) view."""
    L = commutator_subspace(group, field)
    n = ambient_dim(group, field)

    def f(v: int) -> int:
        z = AlgebraElement.from_int(group, field, v)
        # two augmentation bits cover GF(4)
        return (L.reduce((z * z).to_int()) << 2) | augmentation(z)

    return gf2.kernel_of_additive_map(f, n)


@dataclass
class QuadraticData:
    """Squaring restricted to W, in coordinates adapted to the radical."""

    group: FiniteGroup
    field: FieldSpec
    W: gf2.SubspaceBasis
    radical: list[int]  # basis of R
    radical_squares: list[int]  # t^2 for the radical basis
    T: gf2.SubspaceBasis  # square-zero part of R
    complement: list[int]  # basis of a complement of R in W
    squares: list[int]  # c_i^2 for the complement basis, reduced mod R^2
    polar: list[list[int]]  # c_i c_j + c_j c_i, reduced mod R^2
    raw_squares: list[int]  # c_i^2, unreduced
    raw_polar: list[list[int]]

    @property
    def kernel_dim(self) -> int:
        return self.W.rank

    @property
    def enum_dim(self) -> int:
        return len(self.complement)

    @cached_property
    def _solver(self) -> gf2.Solver:
        return gf2.Solver(self.radical_squares)

    @cached_property
    def _image(self) -> gf2.SubspaceBasis:
        return gf2.span(self.radical_squares, ambient_dim(self.group, self.field))

    def element(self, v: int) -> AlgebraElement:
        return AlgebraElement.from_int(self.group, self.field, v)

    def point(self, mask: int) -> int:
        """The complement vector with coordinates ``mask``."""
        return gf2.combine(mask, self.complement)

    def square_of_point(self, mask: int) -> int:
        sq = 0
        idx = [i for i in range(self.enum_dim) if (mask >> i) & 1]
        for a, i in enumerate(idx):
            sq ^= self.raw_squares[i]
            for j in idx[a + 1 :]:
                sq ^= self.raw_polar[i][j]
        return sq

    def lift(self, mask: int) -> int:
        """A square-zero element of ``point(mask) + R`` (mask must be a solution)."""
        c = self.point(mask)
        pre = self._solver.solve(self.square_of_point(mask))
        if pre is None:
            raise AssertionError("lift called on a non-solution")
        return c ^ gf2.combine(pre, self.radical)


def _square(group, field, v: int) -> int:
    z = AlgebraElement.from_int(group, field, v)
    return (z * z).to_int()


def quadratic_data(group: FiniteGroup, field: FieldSpec = GF2) -> QuadraticData:
    W = square_zero_kernel(group, field)
    basis = list(W.rows)
    els = [AlgebraElement.from_int(group, field, v) for v in basis]
    n = ambient_dim(group, field)
    d = len(basis)
    sq = [(e * e).to_int() for e in els]
    pol = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            v = (els[i] * els[j] + els[j] * els[i]).to_int()
            pol[i][j] = pol[j][i] = v
    images = [sum(pol[i][j] << (j * n) for j in range(d)) for i in range(d)]
    rad_coords = gf2.kernel_from_images(images, d)
    radical = [gf2.combine(c, basis) for c in rad_coords.rows]
    radical_squares = [_square(group, field, t) for t in radical]
    T = gf2.span(
        [gf2.combine(c, radical) for c in gf2.kernel_from_images(radical_squares, len(radical)).rows], n
    )
    rad_span = gf2.span(radical, n)
    complement = gf2.complement_basis(rad_span, W)
    # quadratic data on the complement, re-derived in complement coordinates
    cels = [AlgebraElement.from_int(group, field, v) for v in complement]
    e = len(complement)
    csq = [(x * x).to_int() for x in cels]
    cpol = [[0] * e for _ in range(e)]
    for i in range(e):
        for j in range(i + 1, e):
            v = (cels[i] * cels[j] + cels[j] * cels[i]).to_int()
            cpol[i][j] = cpol[j][i] = v
    image = gf2.span(radical_squares, n)
    red_sq = [image.reduce(v) for v in csq]
    red_pol = [[image.reduce(v) for v in row] for row in cpol]
    return QuadraticData(group, field, W, radical, radical_squares, T, complement, red_sq, red_pol, csq, cpol)


# ---------------------------------------------------------------------------
# vectorised Gray-code search for zeros of the reduced quadratic map


def _words(v: int, nwords: int) -> np.ndarray:
    return np.array([(v >> (64 * i)) & 0xFFFFFFFFFFFFFFFF for i in range(nwords)], dtype=np.uint64)


def _xor_table(vectors: np.ndarray) -> np.ndarray:
    """All ``2^m`` XOR-combinations of the rows of ``vectors``; row ``c`` uses bits of ``c``."""
    table = np.zeros((1, vectors.shape[1]), dtype=np.uint64)
    for v in vectors:
        table = np.concatenate([table, table ^ v])
    return table


def _block_solutions(args) -> np.ndarray:
    """Zeros with the high coordinates restricted to one prefix block."""
    sq, pol, k, h_lo, h_hi = args
    e = sq.shape[0]
    nw = sq.shape[1]
    h = e - k
    # low table: Q(c) for c over the first k coordinates
    qlo = np.zeros((1, nw), dtype=np.uint64)
    for j in range(k):
        lin = _xor_table(pol[j, :j]) if j else np.zeros((1, nw), dtype=np.uint64)
        qlo = np.concatenate([qlo, qlo ^ sq[j] ^ lin])
    out = []
    # high coordinates k .. e-1 split as (fixed prefix bits above h_lo) + Gray walk over h_lo bits
    fixed = h_hi
    hmask = 0
    qh = np.zeros(nw, dtype=np.uint64)
    cross = np.zeros((e, nw), dtype=np.uint64)  # B(z_hi, b_m)

    def flip(i):
        nonlocal qh, hmask
        m = k + i
        qh = qh ^ sq[m] ^ cross[m]
        cross[:] ^= pol[m]
        hmask ^= 1 << i

    for i in range(h - h_lo):
        if (fixed >> i) & 1:
            flip(h_lo + i)
    steps = 1 << h_lo
    for s in range(steps):
        if s:
            flip((s & -s).bit_length() - 1)
        lin = _xor_table(cross[:k]) if k else np.zeros((1, nw), dtype=np.uint64)
        total = qlo ^ lin ^ qh
        hits = np.flatnonzero(~total.any(axis=1))
        if len(hits):
            out.append(hits.astype(np.int64) | (hmask << k))
    return np.concatenate(out) if out else np.zeros(0, dtype=np.int64)


def quadratic_zeros(
    squares: Sequence[int],
    polar: Sequence[Sequence[int]],
    nbits: int,
    workers: int = 1,
    low_block: int = LOW_BLOCK,
) -> Iterator[np.ndarray]:
    """Yield batches of coordinate masks ``c`` with ``Q(c) = 0``.

    ``Q(sum c_i b_i) = sum c_i squares[i] + sum_{i<j} c_i c_j polar[i][j]``.
    The first ``low_block`` coordinates are tabulated; the rest are walked in
    Gray-code order, updating ``Q`` with the polarization identity.
    """
    e = len(squares)
    nw = max(1, (nbits + 63) // 64)
    sq = np.stack([_words(v, nw) for v in squares]) if e else np.zeros((0, nw), dtype=np.uint64)
    pol = np.zeros((e, e, nw), dtype=np.uint64)
    for i in range(e):
        for j in range(e):
            if i != j:
                pol[i, j] = _words(polar[i][j], nw)
    k = min(e, low_block)
    h = e - k
    if h == 0 or workers <= 1:
        # split into prefix blocks anyway so callers can stop early
        split = min(h, 6)
        for prefix in range(1 << split):
            yield _block_solutions((sq, pol, k, h - split, prefix))
        return
    split = min(h, max(1, (workers - 1).bit_length() + 2))
    jobs = [(sq, pol, k, h - split, prefix) for prefix in range(1 << split)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for batch in pool.map(_block_solutions, jobs):
            yield batch


# ---------------------------------------------------------------------------
# enumeration and the commuting decision


def _check_dim(qd: QuadraticData, max_dim: int):
    if qd.enum_dim > max_dim:
        raise DimensionExceeded(
            f"enumeration dimension {qd.enum_dim} (dim W = {qd.kernel_dim}) exceeds max_dim {max_dim}"
        )


def square_zero_generators(qd: QuadraticData, workers: int = 1) -> Iterator[int]:
    """Square-zero elements whose T-cosets cover all square-zero elements.

    Yields one lift per solution coset; together with ``qd.T`` these describe
    the whole set ``{z : z^2 = 0}`` as a union of cosets of ``T``.
    """
    for batch in quadratic_zeros(qd.squares, qd.polar, ambient_dim(qd.group, qd.field), workers):
        for mask in batch.tolist():
            yield qd.lift(int(mask))


def enumerate_involutions(
    group: FiniteGroup, field: FieldSpec = GF2, max_dim: int | None = None, workers: int | None = None
) -> Iterator[AlgebraElement]:
    """Every involution ``1 + z`` of V(KG), each exactly once."""
    max_dim = max_dim_default() if max_dim is None else max_dim
    workers = workers_default() if workers is None else workers
    qd = quadratic_data(group, field)
    _check_dim(qd, max_dim)
    one = AlgebraElement.one(group, field).to_int()
    for s in square_zero_generators(qd, workers):
        for t in qd.T.elements():
            z = s ^ t
            if z:
                yield AlgebraElement.from_int(group, field, one ^ z)


def count_involutions(group: FiniteGroup, field: FieldSpec = GF2, max_dim: int | None = None) -> int:
    qd = quadratic_data(group, field)
    _check_dim(qd, max_dim_default() if max_dim is None else max_dim)
    cosets = sum(len(b) for b in quadratic_zeros(qd.squares, qd.polar, ambient_dim(group, field)))
    return cosets * (1 << qd.T.rank) - 1


def naive_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product by explicit double loop over supports (independent of ``AlgebraElement.__mul__``)."""
    g = x.group
    fm = x.field.mul_table
    cx, cy = x.coeffs, y.coeffs
    out = [0] * g.order
    for a in np.flatnonzero(cx).tolist():
        for b in np.flatnonzero(cy).tolist():
            k = int(g.mul[a, b])
            out[k] ^= int(fm[cx[a], cy[b]])
    return AlgebraElement.from_coeffs(g, x.field, out)


def is_noncommuting_involution_pair(x: AlgebraElement, y: AlgebraElement) -> bool:
    one = AlgebraElement.one(x.group, x.field)
    return (
        naive_mul(x, x) == one
        and naive_mul(y, y) == one
        and x != one
        and y != one
        and naive_mul(x, y) != naive_mul(y, x)
    )


@dataclass(frozen=True)
class Verdict:
    tag: str  # "Good" | "Bad" | "Unknown"
    witness: tuple[AlgebraElement, AlgebraElement] | None = None
    reason: str = ""
    kernel_dim: int | None = None
    enum_dim: int | None = None
    elapsed: float = 0.0
    span_dim: int | None = None

    @property
    def good(self) -> bool:
        return self.tag == "Good"

    def to_json(self, group_name: str = "", field: FieldSpec = GF2) -> dict:
        out = {
            "group": group_name,
            "field": field.name,
            "verdict": self.tag,
            "kernel_dim": self.kernel_dim,
            "enum_dim": self.enum_dim,
            "elapsed": round(self.elapsed, 4),
        }
        if self.witness is not None:
            out["witness"] = [format_element(w) for w in self.witness]
        if self.reason:
            out["reason"] = self.reason
        return out


class _CommutingSpan:
    """Greedy basis of the span of accepted square-zero elements, all pairwise commuting."""

    def __init__(self, group: FiniteGroup, field: FieldSpec):
        self.group, self.field = group, field
        self.n = ambient_dim(group, field)
        self.rows: dict[int, int] = {}  # pivot -> reduced vector
        self.basis: list[tuple[int, AlgebraElement]] = []

    def reduce(self, v: int) -> int:
        while v:
            p = v.bit_length() - 1
            r = self.rows.get(p)
            if r is None:
                return v
            v ^= r
        return 0

    def offer(self, v: int) -> tuple[AlgebraElement, AlgebraElement] | None:
        """Add ``v``; return a noncommuting pair if ``v`` fails against the basis."""
        red = self.reduce(v)
        if not red:
            return None
        z = AlgebraElement.from_int(self.group, self.field, v)
        for _, u in self.basis:
            if z * u != u * z:
                return z, u
        self.rows[red.bit_length() - 1] = red
        self.basis.append((v, z))
        return None

    @property
    def dim(self) -> int:
        return len(self.rows)


class _MaskEchelon:
    """Echelon rows over coordinate masks, reducing whole int64 batches at once.

    Rows are kept in insertion order; each new row is already reduced by the
    earlier ones, so one sequential pass clears every pivot.
    """

    def __init__(self, rows: Sequence[int] = ()):
        self.rows: list[int] = []
        for r in rows:
            self.add(r)

    def add(self, r: int) -> None:
        r = self.reduce_one(r)
        if r:
            self.rows.append(r)

    def reduce_one(self, m: int) -> int:
        for r in self.rows:
            if (m >> (r.bit_length() - 1)) & 1:
                m ^= r
        return m

    def reduce(self, masks: np.ndarray) -> np.ndarray:
        m = masks.copy()
        for r in self.rows:
            p = r.bit_length() - 1
            m ^= ((m >> p) & 1) * np.int64(r)
        return m


def all_involutions_commute(
    group: FiniteGroup,
    field: FieldSpec = GF2,
    max_dim: int | None = None,
    workers: int | None = None,
) -> Verdict:
    """Exhaustive decision: do all involutions of V(KG) commute?

    Commuting with ``z`` is additive in the other argument, so it suffices
    that a basis of the span of square-zero elements pairwise commutes.
    Returns ``Unknown`` when the enumeration dimension exceeds ``max_dim``.
    """
    t0 = time.perf_counter()
    max_dim = max_dim_default() if max_dim is None else max_dim
    workers = workers_default() if workers is None else workers
    qd = quadratic_data(group, field)
    if qd.enum_dim > max_dim:
        return Verdict(
            "Unknown",
            reason=f"enumeration dimension {qd.enum_dim} exceeds max_dim {max_dim}",
            kernel_dim=qd.kernel_dim,
            enum_dim=qd.enum_dim,
            elapsed=time.perf_counter() - t0,
        )
    acc = _CommutingSpan(group, field)
    one = AlgebraElement.one(group, field)

    def bad(pair):
        x, y = one + pair[0], one + pair[1]
        if not is_noncommuting_involution_pair(x, y):
            raise AssertionError("witness failed independent re-verification")
        return Verdict(
            "Bad", (x, y), kernel_dim=qd.kernel_dim, enum_dim=qd.enum_dim, elapsed=time.perf_counter() - t0
        )

    for t in qd.T.rows:
        pair = acc.offer(t)
        if pair:
            return bad(pair)
    # With R = T inside the accepted span, a lift lies in the span iff its
    # complement coordinates do, which is a batch test on the masks.
    fast = qd.T.rank == len(qd.radical)
    seen = _MaskEchelon()
    n = ambient_dim(group, field)
    for batch in quadratic_zeros(qd.squares, qd.polar, n, workers):
        if not fast:
            for mask in batch.tolist():
                pair = acc.offer(qd.lift(int(mask)))
                if pair:
                    return bad(pair)
            continue
        res = seen.reduce(batch)
        while True:
            hits = np.flatnonzero(res)
            if not len(hits):
                break
            i = int(hits[0])
            pair = acc.offer(qd.lift(int(batch[i])))
            if pair:
                return bad(pair)
            r = int(res[i])
            seen.rows.append(r)
            p = r.bit_length() - 1
            res = res ^ (((res >> p) & 1) * np.int64(r))
    return Verdict(
        "Good",
        kernel_dim=qd.kernel_dim,
        enum_dim=qd.enum_dim,
        elapsed=time.perf_counter() - t0,
        span_dim=acc.dim,
    )


def square_zero_span(group: FiniteGroup, field: FieldSpec = GF2, max_dim: int | None = None) -> gf2.SubspaceBasis:
    """Span of all ``z`` with ``z^2 = 0``."""
    qd = quadratic_data(group, field)
    _check_dim(qd, max_dim_default() if max_dim is None else max_dim)
    vecs = list(qd.T.rows) + list(square_zero_generators(qd))
    return gf2.span(vecs, ambient_dim(group, field))


# ---------------------------------------------------------------------------
# Omega(V) = 1 + I(Omega(G))


@dataclass(frozen=True)
class OmegaCheck:
    holds: bool
    contains: bool  # 1 + I(Omega(G)) consists of involutions (or 1)
    contained: bool | None  # every involution lies in 1 + I(Omega(G)); None if not checked
    partial: bool
    ideal_dim: int
    involution_count: int | None
    diagnostic: str = ""


def omega_v_equals_ideal(group: FiniteGroup, field: FieldSpec = GF2, max_dim: int | None = None) -> OmegaCheck:
    """Check ``Omega(V) = 1 + I(Omega(G))`` via both inclusions."""
    max_dim = max_dim_default() if max_dim is None else max_dim
    ideal = augmentation_ideal(group, omega_subgroup(group), field)
    els = [AlgebraElement.from_int(group, field, v) for v in ideal.rows]
    contains = True
    diag = ""
    for i, b in enumerate(els):
        if not (b * b).is_zero():
            contains, diag = False, f"ideal basis element {format_element(b)} does not square to zero"
            break
        for c in els[i + 1 :]:
            if b * c != c * b:
                contains = False
                diag = f"ideal basis elements {format_element(b)} and {format_element(c)} do not commute"
                break
        if not contains:
            break
    qd = quadratic_data(group, field)
    if qd.enum_dim > max_dim:
        return OmegaCheck(False, contains, None, True, ideal.rank, None, diag or "enumeration skipped: dimension")
    contained = True
    for t in qd.T.rows:
        if t not in ideal:
            contained = False
            diag = diag or f"square-zero {format_element(qd.element(t))} lies outside I(Omega(G))"
            break
    solutions = 0
    if contained:
        n = ambient_dim(group, field)
        radical_inside = all(r in ideal for r in qd.radical)
        # masks c whose complement point lies in the ideal; with R inside the
        # ideal this decides membership of every lift of c
        inside = _MaskEchelon(gf2.kernel_from_images([ideal.reduce(c) for c in qd.complement], qd.enum_dim).rows)
        for batch in quadratic_zeros(qd.squares, qd.polar, n):
            solutions += len(batch)
            if radical_inside:
                out = np.flatnonzero(inside.reduce(batch))
                masks = [int(batch[out[0]])] if len(out) else []
            else:
                masks = [int(m) for m in batch.tolist() if qd.lift(int(m)) not in ideal][:1]
            if masks:
                contained = False
                s = qd.lift(masks[0])
                diag = diag or f"square-zero {format_element(qd.element(s))} lies outside I(Omega(G))"
                break
    count = solutions * (1 << qd.T.rank) - 1 if contained else None
    return OmegaCheck(contains and contained, contains, contained, False, ideal.rank, count, diag)


# ---------------------------------------------------------------------------
# explicit witnesses


def _literal(group: FiniteGroup, field: FieldSpec, x) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        return x
    return parse_element(x, group, field)


def verify_witness_pair(group: FiniteGroup, field: FieldSpec, x1, x2) -> bool:
    """True iff ``x1^2 = x2^2 = 1`` and ``x1 x2 != x2 x1``.  Literals must have augmentation 1."""
    a, b = _literal(group, field, x1), _literal(group, field, x2)
    for x in (a, b):
        if augmentation(x) != 1:
            raise AlgebraError(f"{format_element(x)} does not have augmentation 1")
    one = AlgebraElement.one(group, field)
    return a * a == one and b * b == one and a * b != b * a


@dataclass(frozen=True)
class KnownWitness:
    host: tuple[str, tuple[int, ...]]  # builtin presentation the literals are written in
    z1: str
    z2: str


KNOWN_WITNESSES: dict[str, KnownWitness] = {
    "Q8xQ8": KnownWitness(("Q8xQ8", ()), "1+a+bc^2+c+abc+a^2d+abd+acd+bcd", "1+b(1+c^2)"),
    "H245": KnownWitness(("H245W", ()), "1+a+ab+d+a^2bd+f+bf+ab^2df+a^3b^3df", "1+(b+b^-1)"),
    "S22oQ8": KnownWitness(("S22oQ8", ()), "1+d^2a+b+a^3d+bd+f+abf+df+abdf", "1+b(1+d^2)"),
}


def transport(x: AlgebraElement, images: Sequence[int], target: FiniteGroup) -> AlgebraElement:
    coeffs = np.zeros(target.order, dtype=np.int64)
    coeffs[np.asarray(images)] = x.coeffs
    return AlgebraElement.from_coeffs(target, x.field, coeffs)


@dataclass(frozen=True)
class Witness:
    x: AlgebraElement
    y: AlgebraElement
    shape: str

    def literals(self) -> tuple[str, str]:
        return format_element(self.x), format_element(self.y)


def _first_noncommuting(cands: Sequence[AlgebraElement], one: AlgebraElement) -> tuple | None:
    """Among involutions ``cands`` find a noncommuting pair via the span trick."""
    acc = _CommutingSpan(one.group, one.field)
    for x in cands:
        pair = acc.offer((x + one).to_int())
        if pair:
            return one + pair[0], one + pair[1]
    return None


def witness_search(group: FiniteGroup, field: FieldSpec = GF2, host_groups: dict | None = None) -> Witness | None:
    """Try constructive shapes of noncommuting involution pairs; ``None`` proves nothing.

    Shapes, in order: (a) group involutions; (b) ``1 + (a+1) g`` with ``a`` in
    Omega(G); (c) ``1 + (1+c^2)(c+b)``, ``1 + (1+c^2)(c+cb)`` with ``|c| = 8``;
    (d) ``1 + g (1 + g^(2^(t-2))) (1 + b)`` against an involution ``b``,
    ``|g| = 2^t > 4``; (e) the known order-64 witness pairs.
    """
    one = AlgebraElement.one(group, field)
    G = group

    def found(x, y, shape):
        if not is_noncommuting_involution_pair(x, y):
            raise AssertionError("witness failed re-verification")
        return Witness(x, y, shape)

    invs = [group_element(G, a, field) for a in involutions(G)]
    pair = _first_noncommuting(invs, one)
    if pair:
        return found(*pair, "a")

    omega = sorted(omega_subgroup(G).members - {G.identity})
    cands = list(invs)
    for a in omega:
        ap1 = group_element(G, a, field) + one
        for g in range(G.order):
            x = one + ap1 * group_element(G, g, field)
            if x != one and x * x == one:
                cands.append(x)
    pair = _first_noncommuting(cands, one)
    if pair:
        return found(*pair, "b")

    for c in np.flatnonzero(G.orders == 8).tolist():
        cc = group_element(G, c, field)
        left = one + cc * cc
        for b in range(G.order):
            bb = group_element(G, b, field)
            x = one + left * (cc + bb)
            y = one + left * (cc + cc * bb)
            if x * x == one and y * y == one and x * y != y * x:
                return found(x, y, "c")

    for g in range(G.order):
        t = int(G.orders[g]).bit_length() - 1
        if t <= 2:
            continue
        gg = group_element(G, g, field)
        h = group_element(G, G.power(g, 2 ** (t - 2)), field)
        for b in involutions(G):
            bb = group_element(G, b, field)
            x = one + gg * (one + h) * (one + bb)
            if x * x == one and x * bb != bb * x:
                return found(x, bb, "d")

    if G.order == 64:
        from .groups import todd_coxeter
        from .presentation import builtin

        for key, kw in KNOWN_WITNESSES.items():
            host = (host_groups or {}).get(key) or todd_coxeter(builtin(*kw.host))
            iso = isomorphism_test(host, G)
            if iso is None:
                continue
            x = transport(parse_element(kw.z1, host, field), iso.images, G)
            y = transport(parse_element(kw.z2, host, field), iso.images, G)
            return found(x, y, f"e:{key}")
    return None


# ---------------------------------------------------------------------------
# oracles for the abelian and cyclic lemmas


def _all_vectors(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    return ((idx[:, None] >> np.arange(n)[None, :]) & 1).astype(np.uint8)


def batch_squares(group: FiniteGroup, Z: np.ndarray) -> np.ndarray:
    """Squares of a batch of GF(2) coefficient rows, by direct convolution."""
    out = np.zeros_like(Z)
    ld = group.ldiv
    for g in range(group.order):
        out ^= Z[:, g, None] & Z[:, ld[:, g]]
    return out


EXHAUSTIVE_LIMIT = 16


def lemma4_oracle(group: FiniteGroup, field: FieldSpec = GF2, max_dim: int | None = None) -> bool:
    """For abelian ``G``: ``{z : z^2 = 0}`` equals ``I(Omega(G))``.

    Exhaustive over all of KG when it has at most ``2^16`` elements (GF(2)
    only); otherwise the square-zero set is taken from the kernel enumeration.
    """
    if not group.is_abelian:
        raise AlgebraError("lemma4_oracle needs an abelian group")
    ideal = augmentation_ideal(group, omega_subgroup(group), field)
    if field.degree == 1 and group.order <= EXHAUSTIVE_LIMIT:
        Z = _all_vectors(group.order)
        sq = batch_squares(group, Z)
        zero = ~sq.any(axis=1)
        hits = np.flatnonzero(zero)
        if len(hits) != 1 << ideal.rank:
            return False
        weights = 1 << np.arange(group.order, dtype=np.int64)
        return all(int(v) in ideal for v in (Z[hits].astype(np.int64) @ weights).tolist())
    span = square_zero_span(group, field, max_dim)
    qd = quadratic_data(group, field)
    # abelian: squaring is additive, so the square-zero set is a subspace
    return span == ideal and qd.enum_dim == 0 and qd.T == ideal


def _rot(v: int, i: int, n: int) -> int:
    mask = (1 << n) - 1
    i %= n
    return ((v << i) | (v >> (n - i))) & mask


def cyclic_mul(u: int, v: int, n: int) -> int:
    """Product in GF(2)[C_n] with bit ``i`` standing for ``c^i``."""
    out = 0
    i = 0
    while u:
        if u & 1:
            out ^= _rot(v, i, n)
        u >>= 1
        i += 1
    return out


def lemma5_oracle(n: int) -> bool:
    """Over GF(2)[C_{2^n}]: ``v^2`` in ``v KH (1 + c^(2^(n-1)))`` forces ``v^2 = 0``.

    Exhaustive over all ``2^(2^n)`` elements, ``2 <= n <= 4``.
    """
    if not 2 <= n <= 4:
        raise ValueError("lemma5_oracle supports 2 <= n <= 4")
    size = 1 << n
    half = 1 << (n - 1)
    ideal_gen = 1 | (1 << half)
    for v in range(1 << size):
        sq = cyclic_mul(v, v, size)
        if not sq:
            continue
        u = cyclic_mul(v, ideal_gen, size)
        sub = gf2.span([_rot(u, i, size) for i in range(size)], size)
        if sq in sub:
            return False
    return True
