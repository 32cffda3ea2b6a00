"""GF(2) linear algebra on int bitsets.

Vectors are Python ints; bit ``i`` is coordinate ``i``.  A
:class:`SubspaceBasis` keeps its rows in reduced row-echelon form with the
highest set bit of each row as its pivot.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence


@dataclass(frozen=True)
class SubspaceBasis:
    dim: int
    rows: tuple[int, ...] = ()

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(r.bit_length() - 1 for r in self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: int) -> int:
        """Residue of ``v`` modulo the subspace (canonical: no pivot bits set)."""
        for r in self.rows:
            if (v >> (r.bit_length() - 1)) & 1:
                v ^= r
        return v

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def extend(self, vectors: Iterable[int]) -> "SubspaceBasis":
        return span(list(self.rows) + list(vectors), self.dim)

    def is_subspace_of(self, other: "SubspaceBasis") -> bool:
        return all(r in other for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.dim, self.rows))

    def elements(self) -> Iterable[int]:
        """All ``2**rank`` vectors of the subspace, in Gray-code order."""
        v = 0
        yield v
        for i in range(1, 1 << self.rank):
            v ^= self.rows[(i & -i).bit_length() - 1]
            yield v


def span(vectors: Iterable[int], dim: int) -> SubspaceBasis:
    """Row-reduce ``vectors`` into a basis of their span."""
    rows: dict[int, int] = {}  # pivot -> row
    for v in vectors:
        if v >> dim:
            raise ValueError("vector exceeds ambient dimension")
        for p in sorted(rows, reverse=True):
            if (v >> p) & 1:
                v ^= rows[p]
        if not v:
            continue
        p = v.bit_length() - 1
        for q in rows:
            if (rows[q] >> p) & 1:
                rows[q] ^= v
        rows[p] = v
    return SubspaceBasis(dim, tuple(rows[p] for p in sorted(rows, reverse=True)))


def full_space(dim: int) -> SubspaceBasis:
    return SubspaceBasis(dim, tuple(1 << i for i in reversed(range(dim))))


def rank(vectors: Sequence[int]) -> int:
    rows: list[int] = []
    for v in vectors:
        for r in rows:
            v = min(v, v ^ r)
        if v:
            rows.append(v)
            rows.sort(reverse=True)
    return len(rows)


class NonAdditiveMap(AssertionError):
    pass


def kernel_of_additive_map(
    f: Callable[[int], int] | Sequence[int],
    dim: int,
    spot_checks: int = 16,
    seed: int = 0,
) -> SubspaceBasis:
    """Kernel of an additive map ``GF(2)^dim -> GF(2)^m``.

    ``f`` is either a callable on int vectors or the list of images of the
    standard basis vectors.  For a callable, additivity is spot-checked on
    random pairs and :class:`NonAdditiveMap` raised on failure.
    """
    if callable(f):
        images = [f(1 << i) for i in range(dim)]
        rng = random.Random(seed)
        for _ in range(spot_checks if dim else 0):
            u, v = rng.getrandbits(dim), rng.getrandbits(dim)
            if f(u ^ v) != f(u) ^ f(v):
                raise NonAdditiveMap("map is not additive over GF(2)")
    else:
        images = list(f)
        if len(images) != dim:
            raise ValueError("need one image per basis vector")
    return kernel_from_images(images, dim)


def kernel_from_images(images: Sequence[int], dim: int) -> SubspaceBasis:
    """Kernel of the linear map sending basis vector ``i`` to ``images[i]``."""
    rows: dict[int, tuple[int, int]] = {}  # pivot -> (image, preimage)
    kernel: list[int] = []
    for i, img in enumerate(images):
        pre = 1 << i
        while img:
            p = img.bit_length() - 1
            if p not in rows:
                rows[p] = (img, pre)
                break
            ri, rp = rows[p]
            img ^= ri
            pre ^= rp
        else:
            kernel.append(pre)
    return span(kernel, dim)


def image_basis(images: Sequence[int], dim_out: int) -> SubspaceBasis:
    return span(images, dim_out)


class Solver:
    """Incremental echelon form remembering how each row was combined.

    ``solve(v)`` returns a combination mask ``c`` with ``XOR(images[i] for i in c) == v``
    or ``None`` when ``v`` is outside the span.
    """

    def __init__(self, images: Sequence[int]):
        self.rows: dict[int, tuple[int, int]] = {}
        for i, img in enumerate(images):
            pre = 1 << i
            while img:
                p = img.bit_length() - 1
                if p not in self.rows:
                    self.rows[p] = (img, pre)
                    break
                ri, rp = self.rows[p]
                img ^= ri
                pre ^= rp

    def solve(self, v: int) -> int | None:
        pre = 0
        while v:
            p = v.bit_length() - 1
            if p not in self.rows:
                return None
            ri, rp = self.rows[p]
            v ^= ri
            pre ^= rp
        return pre


def intersect(b1: SubspaceBasis, b2: SubspaceBasis) -> SubspaceBasis:
    """``b1 ∩ b2``: kernel of ``(x, y) -> sum x_i u_i + sum y_j w_j`` mapped back."""
    if b1.dim != b2.dim:
        raise ValueError("ambient dimensions differ")
    images = list(b1.rows) + list(b2.rows)
    k = kernel_from_images(images, len(images))
    out = []
    for c in k.rows:
        v = 0
        for i, r in enumerate(b1.rows):
            if (c >> i) & 1:
                v ^= r
        out.append(v)
    return span(out, b1.dim)


def complement_basis(sub: SubspaceBasis, whole: SubspaceBasis) -> list[int]:
    """Vectors of ``whole`` that extend ``sub`` to a basis of ``whole``."""
    acc = sub
    out = []
    for r in whole.rows:
        if r not in acc:
            out.append(r)
            acc = acc.extend([r])
    return out


def combine(mask: int, vectors: Sequence[int]) -> int:
    v = 0
    i = 0
    while mask:
        if mask & 1:
            v ^= vectors[i]
        mask >>= 1
        i += 1
    return v
