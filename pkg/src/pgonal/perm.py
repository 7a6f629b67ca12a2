"""Exact permutation arithmetic on {0, ..., n-1}.

Composition is left-to-right everywhere: ``compose(a, b)`` means "apply a,
then b".  This matches the right action of a group on right cosets, which
is the single convention used by every module in this package.  Points are
0-based internally; cycle-notation input/output uses 1-based labels.
"""

from __future__ import annotations

import re
from math import lcm
from typing import Iterable, Iterator, Sequence

__all__ = ["Permutation", "compose", "cycle_type", "is_even"]


class Permutation:
    """An immutable bijection of {0, ..., n-1}, stored as its image tuple.

    ``images[k]`` is the image of point ``k``.  The degree ``n`` is fixed
    per instance; operations on permutations of different degrees raise
    ``ValueError`` rather than padding silently.
    """

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(x) for x in images)
        n = len(imgs)
        seen = [False] * n
        for x in imgs:
            if not 0 <= x < n:
                raise ValueError(f"image {x} out of range for degree {n}")
            if seen[x]:
                raise ValueError(f"not a bijection: image {x} repeated")
            seen[x] = True
        self._images = imgs

    # -- construction ------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        """Parse 1-based cycle notation, e.g. ``"(1,2,3)(4,5,6)"``.

        Whitespace is ignored; the identity is written ``"()"``.
        """
        compact = re.sub(r"\s+", "", text)
        if compact == "()":
            return cls.identity(degree)
        body = re.fullmatch(r"(\([0-9,]+\))+", compact)
        if body is None:
            raise ValueError(f"malformed cycle notation: {text!r}")
        images = list(range(degree))
        touched = set()
        for cycle_text in re.findall(r"\(([0-9,]+)\)", compact):
            points = [int(tok) for tok in cycle_text.split(",") if tok]
            if len(points) < 2:
                raise ValueError(f"cycle too short in {text!r}")
            for pt in points:
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} outside 1..{degree}")
                if pt in touched:
                    raise ValueError(f"point {pt} appears in two cycles")
                touched.add(pt)
            for a, b in zip(points, points[1:] + points[:1]):
                images[a - 1] = b - 1
        return cls(images)

    # -- basic queries -----------------------------------------------

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __getitem__(self, point: int) -> int:
        return self._images[point]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"

    def is_identity(self) -> bool:
        return all(img == k for k, img in enumerate(self._images))

    # -- group operations --------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``a * b`` applies a first, then b."""
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for k, img in enumerate(self._images):
            inv[img] = k
        return Permutation(inv)

    def __pow__(self, exponent: int) -> "Permutation":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Permutation.identity(self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def order(self) -> int:
        return lcm(*self.cycle_type())

    # -- cycle structure ---------------------------------------------

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Cycles as tuples of 0-based points, each starting at its
        minimum, listed in order of that minimum."""
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            pt = self._images[start]
            while pt != start:
                cyc.append(pt)
                seen[pt] = True
                pt = self._images[pt]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """1-based cycle notation; the identity prints as ``"()"``."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join(
            "(" + ",".join(str(pt + 1) for pt in cyc) + ")" for cyc in cycles
        )

    def cycle_type(self) -> tuple[int, ...]:
        """Multiset of cycle lengths (ascending), fixed points included."""
        lengths = sorted(len(c) for c in self.cycles(include_fixed=True))
        return tuple(lengths)

    def is_even(self) -> bool:
        moved = sum(length - 1 for length in self.cycle_type())
        return moved % 2 == 0


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The permutation "apply a, then b".

    Both arguments must have the same degree.
    """
    if a.degree != b.degree:
        raise ValueError(
            f"degree mismatch: {a.degree} vs {b.degree} (no silent padding)"
        )
    bi = b.images
    return Permutation(tuple(bi[x] for x in a.images))


def cycle_type(a: Permutation) -> tuple[int, ...]:
    return a.cycle_type()


def is_even(a: Permutation) -> bool:
    return a.is_even()
