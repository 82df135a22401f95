"""GF(2)^n vectors as int bitsets, Hamming-weight orbits, and orbit-indexed connection sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb
from typing import Iterable, Iterator


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (two routes to the same value disagreed)."""


def binom(s: int, t: int) -> int:
    """C(s, t) with the zero-outside-range convention: 0 whenever t < 0 or t > s."""
    if t < 0 or t > s:
        return 0
    return comb(s, t)


def orbit_size(n: int, i: int) -> int:
    """Number of weight-i vectors in GF(2)^n, i.e. C(n, i), exact."""
    if not 0 <= i <= n:
        raise ValueError(f"orbit index {i} out of range for n={n}")
    return comb(n, i)


@dataclass(frozen=True)
class Gf2Vector:
    """A vector of GF(2)^n stored as an n-bit integer; addition is XOR."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits {self.bits:#b} out of range for n={self.n}")

    def __xor__(self, other: Gf2Vector) -> Gf2Vector:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")
        return Gf2Vector(self.n, self.bits ^ other.bits)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()


def weight(v: Gf2Vector) -> int:
    """Hamming weight: the number of 1 coordinates."""
    return v.bits.bit_count()


@dataclass(frozen=True)
class OrbitIndexSet:
    """A union of weight classes: indices I encode S = {v != 0 : |v| in I} in GF(2)^n.

    Membership in S depends on |v| only, so S is invariant under every
    coordinate permutation.  The empty index set is legal and encodes the
    edgeless graph.
    """

    n: int
    indices: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        object.__setattr__(self, "indices", frozenset(self.indices))
        bad = [i for i in self.indices if not 1 <= i <= self.n]
        if bad:
            raise ValueError(f"orbit indices {sorted(bad)} out of range 1..{self.n}")

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> OrbitIndexSet:
        return cls(n, frozenset(indices))

    @classmethod
    def from_bitmask(cls, n: int, mask: int) -> OrbitIndexSet:
        """Bit i-1 of mask set <=> orbit index i belongs to the set."""
        if not 0 <= mask < (1 << n):
            raise ValueError(f"mask {mask} out of range for n={n}")
        return cls(n, frozenset(i for i in range(1, n + 1) if mask >> (i - 1) & 1))

    @property
    def bitmask(self) -> int:
        return sum(1 << (i - 1) for i in self.indices)

    @property
    def sorted_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.indices))

    @classmethod
    def parse(cls, text: str) -> OrbitIndexSet:
        """Parse the text form ``n=<int>;I=<comma-separated ascending ints>``."""
        try:
            n_part, i_part = text.strip().split(";")
            if not n_part.startswith("n=") or not i_part.startswith("I="):
                raise ValueError
            n = int(n_part[2:])
            body = i_part[2:]
            indices = [int(tok) for tok in body.split(",")] if body else []
        except ValueError:
            raise ValueError(f"malformed index-set text {text!r}; expected 'n=4;I=1,4'") from None
        return cls(n, frozenset(indices))

    def format(self) -> str:
        return f"n={self.n};I={','.join(str(i) for i in self.sorted_indices)}"

    def size(self) -> int:
        """|S| = sum of C(n, i) over the member indices."""
        return sum(comb(self.n, i) for i in self.indices)

    def contains(self, v: Gf2Vector) -> bool:
        """Whether the vector belongs to S (the zero vector never does)."""
        if v.n != self.n:
            raise ValueError(f"dimension mismatch: vector n={v.n}, set n={self.n}")
        return v.bits.bit_count() in self.indices

    def contains_bits(self, bits: int) -> bool:
        return bits.bit_count() in self.indices

    def complement(self) -> OrbitIndexSet:
        """The index set of the complement graph's connection set: {1..n} minus indices."""
        return OrbitIndexSet(self.n, frozenset(range(1, self.n + 1)) - self.indices)

    def is_full(self) -> bool:
        return len(self.indices) == self.n

    def vectors(self) -> Iterator[int]:
        """Members of S as int bitsets, grouped by weight, ascending within each weight."""
        for i in self.sorted_indices:
            for pos in combinations(range(self.n), i):
                yield sum(1 << p for p in pos)


class ResidueFamily(str, Enum):
    """Named index-set shapes: weight residues mod 4, all-but-top, and odd weights."""

    S0 = "s0"
    S1 = "s1"
    S2 = "s2"
    S3 = "s3"
    S_MINUS = "s_minus"
    S_ODD = "s_odd"


def expand_family(tag: ResidueFamily | str, n: int) -> OrbitIndexSet:
    """The exact index set a named shape denotes at dimension n."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    tag = ResidueFamily(tag)
    if tag in (ResidueFamily.S0, ResidueFamily.S1, ResidueFamily.S2, ResidueFamily.S3):
        r = int(tag.value[1])
        indices = frozenset(i for i in range(1, n + 1) if i % 4 == r)
    elif tag is ResidueFamily.S_MINUS:
        indices = frozenset(range(1, n))
    else:
        indices = frozenset(range(1, n + 1, 2))
    return OrbitIndexSet(n, indices)


def complement_index_set(s: OrbitIndexSet) -> OrbitIndexSet:
    """Index set whose expansion is the complement of S within the nonzero vectors."""
    return s.complement()


def is_connected(s: OrbitIndexSet) -> bool:
    """Whether the graph with connection set S is connected, i.e. S generates GF(2)^n.

    A weight class with odd i < n generates everything.  Even classes only
    reach the even-weight subgroup.  The top class {all-ones} generates a
    2-element subgroup on its own (a perfect matching, disconnected for
    n >= 2), but for odd n it lifts the even-weight subgroup to the whole
    group when paired with any other class.
    """
    if not s.indices:
        return False
    n = s.n
    if any(i % 2 == 1 and i < n for i in s.indices):
        return True
    if n in s.indices and n % 2 == 1:
        return n == 1 or len(s.indices) >= 2
    return False
