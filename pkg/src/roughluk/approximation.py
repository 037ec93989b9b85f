"""Subsets of a finite universe and the upper/lower approximation operators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

from .info_table import Partition
from .report import Report

DEFAULT_MAX_UNIVERSE = 12


class UniverseMismatch(ValueError):
    pass


class BoundExceeded(ValueError):
    """The universe (or algebra) is too large for exhaustive checking."""


@dataclass(frozen=True)
class ObjectSet:
    """A subset of a fixed universe, stored as a bitmask over its positions."""

    universe: tuple[str, ...]
    mask: int

    @classmethod
    def of(cls, universe: Iterable[str], members: Iterable[str] = ()) -> ObjectSet:
        universe = tuple(universe)
        pos = {x: i for i, x in enumerate(universe)}
        mask = 0
        for x in members:
            try:
                mask |= 1 << pos[x]
            except KeyError:
                raise KeyError(f"unknown object {x}") from None
        return cls(universe, mask)

    @classmethod
    def empty(cls, universe: Iterable[str]) -> ObjectSet:
        return cls(tuple(universe), 0)

    @classmethod
    def full(cls, universe: Iterable[str]) -> ObjectSet:
        universe = tuple(universe)
        return cls(universe, (1 << len(universe)) - 1)

    def _same(self, other: ObjectSet) -> None:
        if self.universe != other.universe:
            raise UniverseMismatch("sets belong to different universes")

    def __and__(self, other: ObjectSet) -> ObjectSet:
        self._same(other)
        return ObjectSet(self.universe, self.mask & other.mask)

    def __or__(self, other: ObjectSet) -> ObjectSet:
        self._same(other)
        return ObjectSet(self.universe, self.mask | other.mask)

    def __sub__(self, other: ObjectSet) -> ObjectSet:
        self._same(other)
        return ObjectSet(self.universe, self.mask & ~other.mask)

    def __invert__(self) -> ObjectSet:
        return complement(self)

    def __le__(self, other: ObjectSet) -> bool:
        self._same(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: ObjectSet) -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: ObjectSet) -> bool:
        return other <= self

    def __contains__(self, x: str) -> bool:
        return bool(self.mask >> self.universe.index(x) & 1)

    def __iter__(self) -> Iterator[str]:
        return (x for i, x in enumerate(self.universe) if self.mask >> i & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def members(self) -> list[str]:
        """Members in universe order; this is the serialized form."""
        return list(self)

    def __repr__(self) -> str:
        return "{" + ",".join(self) + "}"


def _check(p: Partition, a: ObjectSet) -> None:
    if a.universe != p.universe:
        raise UniverseMismatch("set is not over the partition's universe")


def upper_mask(p: Partition, mask: int) -> int:
    out = 0
    for b in p.block_masks:
        if b & mask:
            out |= b
    return out


def lower_mask(p: Partition, mask: int) -> int:
    out = 0
    for b in p.block_masks:
        if b & ~mask == 0:
            out |= b
    return out


def upper(p: Partition, a: ObjectSet) -> ObjectSet:
    """Union of the blocks that meet ``a``."""
    _check(p, a)
    return ObjectSet(a.universe, upper_mask(p, a.mask))


def lower(p: Partition, a: ObjectSet) -> ObjectSet:
    """Union of the blocks contained in ``a``."""
    _check(p, a)
    return ObjectSet(a.universe, lower_mask(p, a.mask))


def complement(a: ObjectSet) -> ObjectSet:
    return ObjectSet(a.universe, ((1 << len(a.universe)) - 1) & ~a.mask)


def is_closed(p: Partition, a: ObjectSet) -> bool:
    _check(p, a)
    return upper_mask(p, a.mask) == a.mask


def closed_masks(p: Partition) -> list[int]:
    blocks = p.block_masks
    out = []
    for sel in range(1 << len(blocks)):
        m = 0
        for j, b in enumerate(blocks):
            if sel >> j & 1:
                m |= b
        out.append(m)
    return out


def closed_elements(p: Partition) -> list[ObjectSet]:
    """All unions of blocks, ordered by the bitmask of selected blocks."""
    return [ObjectSet(p.universe, m) for m in closed_masks(p)]


def all_subsets(p: Partition) -> Iterator[ObjectSet]:
    for m in range(1 << p.size):
        yield ObjectSet(p.universe, m)


def require_bound(n: int, bound: int, what: str = "universe") -> None:
    if n > bound:
        raise BoundExceeded(f"{what} of size {n} exceeds the exhaustive bound {bound}")


def upper_table(p: Partition) -> np.ndarray:
    """``upper_mask`` for every subset mask, indexed by mask."""
    n = p.size
    subsets = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int64)
    for b in p.block_masks:
        out |= np.where(subsets & b, b, 0)
    return out


def lower_table(p: Partition) -> np.ndarray:
    n = p.size
    subsets = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int64)
    for b in p.block_masks:
        out |= np.where((subsets & b) == b, b, 0)
    return out


def _names(p: Partition, mask: int) -> list[str]:
    return ObjectSet(p.universe, int(mask)).members()


def check_monadic_axioms(
    p: Partition,
    operator: Callable[[int], int] | None = None,
    max_universe: int = DEFAULT_MAX_UNIVERSE,
) -> Report:
    """Exhaustively check M0, M1, M2 over all subsets of the universe.

    ``operator`` maps a subset bitmask to a bitmask and defaults to the upper
    approximation of ``p``. A fourth check, that every image is a union of
    blocks, separates the real operator from degenerate ones such as the
    identity, which satisfies M0-M2 on its own.
    """
    require_bound(p.size, max_universe)
    n = p.size
    if operator is None:
        table = upper_table(p)
    else:
        table = np.array([operator(m) for m in range(1 << n)], dtype=np.int64)
    subsets = np.arange(1 << n, dtype=np.int64)
    report = Report("monadic axioms")

    report.add("M0: M(empty) = empty",
               None if table[0] == 0 else {"M(empty)": _names(p, table[0])}, 1)

    bad = np.nonzero(subsets & ~table)[0]
    report.add("M1: A <= MA", None if bad.size == 0 else {"A": _names(p, bad[0])}, 1 << n)

    cex = None
    for b in range(1 << n):
        mb = table[b]
        lhs = table[subsets & mb]
        rhs = table & mb
        diff = np.nonzero(lhs != rhs)[0]
        if diff.size:
            cex = {"A": _names(p, diff[0]), "B": _names(p, b)}
            break
    report.add("M2: M(A & MB) = MA & MB", cex, 1 << (2 * n))

    cex = None
    for a in range(1 << n):
        m = int(table[a])
        if upper_mask(p, m) != m:
            cex = {"A": _names(p, a), "MA": _names(p, m)}
            break
    report.add("M closed under blocks", cex, 1 << n)
    return report
