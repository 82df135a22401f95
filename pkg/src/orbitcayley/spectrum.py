"""Exact eigenvalues of orbit Cayley graphs: binomial character sums and a Walsh-Hadamard oracle.

Eigenvalues are exact integers throughout; no floating point enters this
module.  The double-binomial sum is the normative definition, the
three-term recurrence is an optional fast path, and the Walsh-Hadamard
transform of the connection-set indicator is the independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .core import ConsistencyError, OrbitIndexSet, binom

WHT_MAX_N = 24  # transform is O(n * 2^n) time and O(2^n) memory
NAIVE_WHT_MAX_N = 8  # the O(4^n) summation is a test oracle only


def orbit_character_sum(n: int, i: int, k: int) -> int:
    """Character sum over the weight-i orbit for any character index of weight k.

    Normative form: sum_j (-1)^j C(k, j) C(n-k, i-j).
    """
    if not 0 <= i <= n:
        raise ValueError(f"orbit weight {i} out of range 0..{n}")
    if not 0 <= k <= n:
        raise ValueError(f"character weight {k} out of range 0..{n}")
    return sum((-1) ** j * binom(k, j) * binom(n - k, i - j) for j in range(i + 1))


def character_sum_row(n: int, i: int) -> tuple[int, ...]:
    """All orbit character sums for k = 0..n via the three-term recurrence in k.

    (n - k) * row[k+1] = (n - 2i) * row[k] - k * row[k-1], started from
    row[0] = C(n, i); every division is exact.
    """
    if not 0 <= i <= n:
        raise ValueError(f"orbit weight {i} out of range 0..{n}")
    row = [comb(n, i)]
    prev = 0
    for k in range(n):
        num = (n - 2 * i) * row[k] - k * prev
        q, r = divmod(num, n - k)
        if r:
            raise ConsistencyError(f"recurrence division not exact at n={n}, i={i}, k={k}")
        prev = row[k]
        row.append(q)
    return tuple(row)


def eigenvalue(s: OrbitIndexSet, k: int) -> int:
    """The eigenvalue attached to weight-k character indices: the sum over member orbits."""
    if not 0 <= k <= s.n:
        raise ValueError(f"character weight {k} out of range 0..{s.n}")
    return sum(orbit_character_sum(s.n, i, k) for i in s.indices)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues lambda_0..lambda_n; lambda_k has multiplicity C(n, k)."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} values, got {len(self.values)}")

    def multiplicity(self, k: int) -> int:
        return comb(self.n, k)

    def entries(self) -> list[tuple[int, int, int]]:
        """(k, value, multiplicity) triples."""
        return [(k, v, comb(self.n, k)) for k, v in enumerate(self.values)]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {"k": k, "value": v, "multiplicity": m} for k, v, m in self.entries()
            ],
        }


@dataclass(frozen=True)
class DistinctSpectrum:
    """(value, total multiplicity) pairs, values strictly descending."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def to_csv(self) -> str:
        lines = ["value,multiplicity"]
        lines += [f"{v},{m}" for v, m in self.pairs]
        return "\n".join(lines) + "\n"


def distinct(spec: Spectrum) -> DistinctSpectrum:
    """Collapse equal eigenvalues, summing multiplicities."""
    acc: dict[int, int] = {}
    for k, v in enumerate(spec.values):
        acc[v] = acc.get(v, 0) + comb(spec.n, k)
    pairs = tuple(sorted(acc.items(), key=lambda p: -p[0]))
    return DistinctSpectrum(spec.n, pairs)


def _check_invariants(spec: Spectrum, set_size: int) -> None:
    # zeroth moment sum(C(n,k)) = 2^n holds by construction of entries
    n = spec.n
    mults = [comb(n, k) for k in range(n + 1)]
    if sum(v * m for v, m in zip(spec.values, mults)) != 0:
        raise ConsistencyError("spectrum trace is nonzero")
    if sum(v * v * m for v, m in zip(spec.values, mults)) != (1 << n) * set_size:
        raise ConsistencyError("spectrum second moment does not match edge count")
    if spec.values[0] != set_size or any(v > set_size for v in spec.values):
        raise ConsistencyError("degree eigenvalue is not the maximum")


def full_spectrum(s: OrbitIndexSet, method: str = "binomial") -> Spectrum:
    """Closed-form spectrum of the orbit Cayley graph on 2^n vertices.

    ``method`` selects the normative binomial sums or the recurrence fast path.
    """
    if method == "binomial":
        values = tuple(eigenvalue(s, k) for k in range(s.n + 1))
    elif method == "recurrence":
        rows = [character_sum_row(s.n, i) for i in s.sorted_indices]
        values = tuple(sum(row[k] for row in rows) for k in range(s.n + 1))
    else:
        raise ValueError(f"unknown method {method!r}")
    spec = Spectrum(s.n, values)
    _check_invariants(spec, s.size())
    return spec


@lru_cache(maxsize=32)
def _weight_table(n: int) -> np.ndarray:
    """weights[x] = popcount(x) for all x < 2^n, built by doubling."""
    w = np.zeros(1 << n, dtype=np.uint8)
    for b in range(n):
        w[1 << b : 1 << (b + 1)] = w[: 1 << b] + 1
    w.setflags(write=False)
    return w


def _indicator(s: OrbitIndexSet) -> np.ndarray:
    w = _weight_table(s.n)
    f = np.zeros(1 << s.n, dtype=np.int64)
    for i in s.indices:
        f[w == i] = 1
    return f


def _fwht(a: np.ndarray) -> np.ndarray:
    """In-place butterfly transform; int64 stays exact for n <= 24."""
    size = a.size
    h = 1
    while h < size:
        a = a.reshape(-1, 2, h)
        x = a[:, 0, :].copy()
        a[:, 0, :] = x + a[:, 1, :]
        a[:, 1, :] = x - a[:, 1, :]
        a = a.reshape(size)
        h *= 2
    return a


def _wht_naive(f: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros_like(f)
    for y in range(1 << n):
        acc = 0
        for x in range(1 << n):
            if f[x]:
                acc += -1 if (x & y).bit_count() & 1 else 1
        out[y] = acc
    return out


def wht_spectrum(s: OrbitIndexSet, method: str = "butterfly") -> Spectrum:
    """Oracle spectrum: transform the 0/1 indicator of S over all 2^n points.

    Groups the transform by the weight of the character index and insists the
    value is constant within each weight class before returning.
    """
    if method == "butterfly":
        if s.n > WHT_MAX_N:
            raise ValueError(f"n={s.n} exceeds the transform cap {WHT_MAX_N}")
        fhat = _fwht(_indicator(s))
    elif method == "naive":
        if s.n > NAIVE_WHT_MAX_N:
            raise ValueError(f"n={s.n} exceeds the naive-summation cap {NAIVE_WHT_MAX_N}")
        fhat = _wht_naive(_indicator(s), s.n)
    else:
        raise ValueError(f"unknown method {method!r}")

    w = _weight_table(s.n)
    values = []
    for k in range(s.n + 1):
        cls = fhat[w == k]
        if not (cls == cls[0]).all():
            raise ConsistencyError(f"transform not constant on weight class k={k}")
        values.append(int(cls[0]))
    spec = Spectrum(s.n, tuple(values))
    _check_invariants(spec, s.size())
    return spec
