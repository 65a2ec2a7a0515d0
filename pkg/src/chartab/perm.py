"""Permutations on {0, ..., degree-1} stored as full image tuples.

Composition is left-to-right: (p * q) sends x to q[p[x]], i.e. apply p
first.  This matches the exponent convention x^(gh) = (x^g)^h used by the
group-theoretic code throughout.
"""

from __future__ import annotations

import re
from math import lcm

_CYCLE_RE = re.compile(r"\(\s*((?:\d+[\s,]*)*)\)")


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images, _checked: bool = False):
        images = tuple(images)
        if not _checked:
            n = len(images)
            if sorted(images) != list(range(n)):
                raise ValueError(f"not a permutation of 0..{n - 1}: {images!r}")
        self.images = images
        self._hash = hash(images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree), _checked=True)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        q = other.images
        return Permutation(tuple(q[i] for i in self.images), _checked=True)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv), _checked=True)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its minimum."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            j = self.images[i]
            seen[i] = True
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation[{self.cycle_string()}, deg={self.degree}]"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation like "(0 1 2)(3 4)" into a permutation.

    Accepts spaces or commas between points; "()" is the identity.
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation literal")
    consumed = 0
    images = list(range(degree))
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[consumed:m.start()].strip():
            raise ValueError(f"bad permutation literal: {text!r}")
        consumed = m.end()
        body = m.group(1).strip()
        if not body:
            continue
        points = [int(tok) for tok in re.split(r"[\s,]+", body)]
        if len(set(points)) != len(points):
            raise ValueError(f"repeated point in cycle: {text!r}")
        if max(points) >= degree:
            raise ValueError(f"point {max(points)} out of range for degree {degree}")
        cyc = list(range(degree))
        for a, b in zip(points, points[1:]):
            cyc[a] = b
        cyc[points[-1]] = points[0]
        composed = Permutation(images, _checked=True) * Permutation(cyc, _checked=True)
        images = list(composed.images)
    if stripped[consumed:].strip():
        raise ValueError(f"bad permutation literal: {text!r}")
    return Permutation(images)
