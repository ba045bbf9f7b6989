"""Canonical bipartitions of an n-qubit register.

A bipartition splits the register into a subset of m qubits and its
complement. Swapping the two sides gives the same physical cut, so only
m <= floor(n/2) is enumerated, and for the balanced case m = n/2 exactly one
representative per complementary pair is kept (the one containing qubit 0).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb


@dataclass(frozen=True)
class Bipartition:
    """A canonical subset of qubit indices defining one side of a cut."""

    n_qubits: int
    subset: tuple[int, ...]

    def __post_init__(self):
        subset = tuple(self.subset)
        object.__setattr__(self, "subset", subset)
        if subset != tuple(sorted(set(subset))):
            raise ValueError(f"subset must be sorted and distinct, got {subset}")
        if not subset or any(q < 0 or q >= self.n_qubits for q in subset):
            raise ValueError(f"subset {subset} out of range for {self.n_qubits} qubits")
        if 2 * len(subset) > self.n_qubits:
            raise ValueError(
                f"subset size {len(subset)} exceeds floor(n/2) for n = {self.n_qubits}"
            )
        if 2 * len(subset) == self.n_qubits and 0 not in subset:
            raise ValueError(f"balanced subset {subset} must contain qubit 0")

    @property
    def m(self) -> int:
        return len(self.subset)

    @property
    def complement(self) -> tuple[int, ...]:
        members = set(self.subset)
        return tuple(q for q in range(self.n_qubits) if q not in members)


def count_bipartitions(n: int, m: int) -> int:
    """Number of nonequivalent m-vs-(n-m) cuts: C(n, m), halved when m = n/2."""
    if not 1 <= m <= n // 2:
        raise ValueError(f"m must satisfy 1 <= m <= floor(n/2), got m={m}, n={n}")
    c = comb(n, m)
    return c // 2 if 2 * m == n else c


@lru_cache(maxsize=None)
def _canonical_bipartitions(n: int, m: int) -> tuple[Bipartition, ...]:
    balanced = 2 * m == n
    return tuple(
        Bipartition(n, subset)
        for subset in itertools.combinations(range(n), m)
        if not (balanced and subset[0] != 0)
    )


def enumerate_bipartitions(n: int, m: int) -> list[Bipartition]:
    """All canonical size-m bipartitions in lexicographic subset order."""
    if not 1 <= m <= n // 2:
        raise ValueError(f"m must satisfy 1 <= m <= floor(n/2), got m={m}, n={n}")
    return list(_canonical_bipartitions(n, m))
