"""Finite group engine over explicit permutation elements.

A :class:`GroupTable` is the closure of a generating set of permutations,
with a canonical element order (lexicographic on image tuples), index-level
multiplication, and subgroups stored as bitsets over the element indices.
Everything downstream (coset actions, conjugacy classes, characters, group
algebra) works with element indices into one of these tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .perm import Permutation

__all__ = ["GroupTable", "Subgroup", "generate", "GroupSizeError"]

#: Largest group order for which the dense Cayley table is materialized.
#: Beyond this, products are composed on demand (the table would need
#: O(|G|^2) memory, 11 GB already at |G| = 53248).
DENSE_TABLE_CAP = 4096

#: Default cap on closure size; generate() fails loudly above it.
DEFAULT_MAX_ORDER = 10**6


class GroupSizeError(RuntimeError):
    pass


class GroupTable:
    """Canonically indexed element list of a finite permutation group.

    Elements are sorted lexicographically by image tuple, which makes
    index 0 the identity and all derived indices deterministic across
    runs.  Instances are immutable after construction and safe to share.
    """

    def __init__(self, rows: np.ndarray, generator_indices: Sequence[int],
                 dense_cap: int = DENSE_TABLE_CAP):
        rows = np.ascontiguousarray(rows, dtype=np.uint8)
        self._rows = rows
        self.order = int(rows.shape[0])
        self.degree = int(rows.shape[1])
        self._index = {rows[i].tobytes(): i for i in range(self.order)}
        self.generator_indices = tuple(int(g) for g in generator_indices)
        self._table = None
        if self.order <= dense_cap:
            self._table = kernels.mul_table(rows)
        inv_rows = np.argsort(rows, axis=1).astype(np.uint8)
        self._inv = kernels.lookup_rows(rows, inv_rows)
        self.index_of_identity = self._index[
            np.arange(self.degree, dtype=np.uint8).tobytes()
        ]
        assert self.index_of_identity == 0, "identity is the lex minimum"
        self._perms: list[Permutation | None] = [None] * self.order
        self._coset_cache: dict[int, tuple[list[list[int]], np.ndarray]] = {}
        self._classes: list[list[int]] | None = None
        self._class_of: list[int] | None = None

    # -- elements ------------------------------------------------------

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    @property
    def dense_table(self) -> np.ndarray | None:
        return self._table

    def perm(self, i: int) -> Permutation:
        cached = self._perms[i]
        if cached is None:
            cached = Permutation(self._rows[i])
            self._perms[i] = cached
        return cached

    def elements(self) -> list[Permutation]:
        return [self.perm(i) for i in range(self.order)]

    def index_of(self, p: Permutation) -> int:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        key = bytes(p.images)
        try:
            return self._index[key]
        except KeyError:
            raise ValueError(f"{p!r} is not an element of this group") from None

    # -- multiplication --------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return int(self._table[i, j])
        row = self._rows[j][self._rows[i]]
        return self._index[row.tobytes()]

    def inv(self, i: int) -> int:
        return int(self._inv[i])

    def conjugate(self, i: int, g: int) -> int:
        """g^-1 * i * g."""
        return self.mul(self.mul(self.inv(g), i), g)

    def power(self, i: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(i), -k)
        acc = self.index_of_identity
        base = i
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def element_order(self, i: int) -> int:
        return lcm(*self.perm(i).cycle_type())

    def closure_of(self, indices: Iterable[int]) -> set[int]:
        """Subgroup (as an index set) generated by the given elements."""
        gens = sorted(set(indices))
        seen = {self.index_of_identity, *gens}
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    # -- subgroups -------------------------------------------------------

    def subgroup(self, gen_indices: Iterable[int]) -> "Subgroup":
        members = self.closure_of(gen_indices)
        bits = 0
        for i in members:
            bits |= 1 << i
        return Subgroup(self, bits)

    def subgroup_from_indices(self, indices: Iterable[int],
                              validate: bool = False) -> "Subgroup":
        bits = 0
        for i in indices:
            bits |= 1 << int(i)
        sub = Subgroup(self, bits)
        if validate:
            members = sub.indices()
            for a in members:
                for b in members:
                    if not sub.contains(self.mul(a, b)):
                        raise ValueError("index set is not closed under product")
        return sub

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, 1 << self.index_of_identity)

    def whole_group(self) -> "Subgroup":
        return Subgroup(self, (1 << self.order) - 1)

    def is_normal(self, sub: "Subgroup") -> bool:
        """True iff g^-1 * sub * g = sub for all g (generators suffice)."""
        self._own(sub)
        for g in self.generator_indices:
            bits = 0
            for h in sub.indices():
                bits |= 1 << self.conjugate(h, g)
            if bits != sub.bitset:
                return False
        return True

    # -- cosets and actions ----------------------------------------------

    def _own(self, sub: "Subgroup") -> None:
        if sub.parent is not self:
            raise ValueError("subgroup belongs to a different group table")

    def _coset_data(self, sub: "Subgroup") -> tuple[list[list[int]], np.ndarray]:
        self._own(sub)
        cached = self._coset_cache.get(sub.bitset)
        if cached is not None:
            return cached
        members = sub.indices()
        block_of = np.full(self.order, -1, dtype=np.int64)
        blocks: list[list[int]] = []
        for x in range(self.order):
            if block_of[x] >= 0:
                continue
            coset = sorted(self.mul(h, x) for h in members)
            for y in coset:
                block_of[y] = len(blocks)
            blocks.append(coset)
        data = (blocks, block_of)
        self._coset_cache[sub.bitset] = data
        return data

    def right_cosets(self, sub: "Subgroup") -> list[list[int]]:
        """Partition into right cosets, ordered by minimal element index
        (the identity coset first)."""
        return self._coset_data(sub)[0]

    def coset_action(self, sub: "Subgroup", g: int) -> Permutation:
        """Permutation induced by right multiplication by g on the right
        cosets of ``sub``; g -> coset_action(sub, g) is a homomorphism."""
        blocks, block_of = self._coset_data(sub)
        images = [int(block_of[self.mul(block[0], g)]) for block in blocks]
        return Permutation(images)

    def as_dict(self) -> dict:
        """Serialized form for reports: elements in cycle notation plus
        generator indices."""
        return {
            "order": str(self.order),
            "degree": str(self.degree),
            "generator_indices": [str(g) for g in self.generator_indices],
            "elements": [self.perm(i).cycle_string() for i in range(self.order)],
        }

    # -- conjugacy classes -------------------------------------------------

    def conjugacy_classes(self) -> list[list[int]]:
        """Classes ordered by (size, minimal element index)."""
        if self._classes is None:
            seen = [False] * self.order
            classes = []
            for i in range(self.order):
                if seen[i]:
                    continue
                orbit = {i}
                frontier = [i]
                while frontier:
                    x = frontier.pop()
                    for g in self.generator_indices:
                        y = self.conjugate(x, g)
                        if y not in orbit:
                            orbit.add(y)
                            frontier.append(y)
                cls = sorted(orbit)
                for y in cls:
                    seen[y] = True
                classes.append(cls)
            classes.sort(key=lambda c: (len(c), c[0]))
            self._classes = classes
            class_of = [0] * self.order
            for ci, cls in enumerate(classes):
                for y in cls:
                    class_of[y] = ci
            self._class_of = class_of
        return self._classes

    def class_of(self, i: int) -> int:
        self.conjugacy_classes()
        assert self._class_of is not None
        return self._class_of[i]


@dataclass(frozen=True)
class Subgroup:
    """A subgroup stored as a bitset over the parent's element indices."""

    parent: GroupTable
    bitset: int

    def __post_init__(self):
        if not (self.bitset >> self.parent.index_of_identity) & 1:
            raise ValueError("subgroup must contain the identity")
        if self.parent.order % self.order != 0:
            raise ValueError(
                f"order {self.order} does not divide {self.parent.order}"
            )

    @property
    def order(self) -> int:
        return self.bitset.bit_count()

    def indices(self) -> list[int]:
        return [i for i in range(self.parent.order) if (self.bitset >> i) & 1]

    def contains(self, i: int) -> bool:
        return bool((self.bitset >> i) & 1)

    __contains__ = contains

    def index_in_parent(self) -> int:
        return self.parent.order // self.order

    def is_subset_of(self, other: "Subgroup") -> bool:
        return self.bitset & ~other.bitset == 0

    def conjugate_by(self, g: int) -> "Subgroup":
        """g^-1 * self * g as a subgroup of the same parent."""
        bits = 0
        for h in self.indices():
            bits |= 1 << self.parent.conjugate(h, g)
        return Subgroup(self.parent, bits)


def generate(gens: Sequence[Permutation], max_order: int = DEFAULT_MAX_ORDER,
             dense_cap: int = DENSE_TABLE_CAP) -> GroupTable:
    """Closure of a generating set, as a canonically ordered GroupTable.

    Raises :class:`GroupSizeError` if the closure exceeds ``max_order``.
    """
    if not gens:
        raise ValueError("need at least one generator")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise ValueError("generators must share one degree")
    if degree > 255:
        raise ValueError("degrees above 255 are not supported")

    gen_tuples = [g.images for g in gens]
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for b in gen_tuples:
                c = tuple(b[x] for x in a)
                if c not in seen:
                    if len(seen) >= max_order:
                        raise GroupSizeError(
                            f"closure exceeds the size cap of {max_order} elements"
                        )
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt

    rows = np.array(sorted(seen), dtype=np.uint8)
    index = {rows[i].tobytes(): i for i in range(rows.shape[0])}
    gen_indices = [index[bytes(t)] for t in gen_tuples]
    return GroupTable(rows, gen_indices, dense_cap=dense_cap)
