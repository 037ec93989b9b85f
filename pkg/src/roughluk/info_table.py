"""Pawlak information tables and their indiscernibility partitions."""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence


class TableError(ValueError):
    """Raised for malformed information-table input."""


@dataclass(frozen=True)
class InformationTable:
    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    cells: dict[tuple[str, str], str] = field(repr=False)

    def __post_init__(self):
        if not self.objects:
            raise TableError("table has no objects")
        if not self.attributes:
            raise TableError("table has no attributes")
        for kind, names in (("object", self.objects), ("attribute", self.attributes)):
            seen = set()
            for name in names:
                if name in seen:
                    raise TableError(f"duplicate {kind} {name}")
                seen.add(name)
        for x in self.objects:
            for a in self.attributes:
                if (x, a) not in self.cells:
                    raise TableError(f"missing cell for object {x}, attribute {a}")
        if len(self.cells) != len(self.objects) * len(self.attributes):
            raise TableError("cells outside the object/attribute grid")

    def value(self, obj: str, attr: str) -> str:
        return self.cells[obj, attr]

    def row(self, obj: str) -> tuple[str, ...]:
        return tuple(self.cells[obj, a] for a in self.attributes)

    @classmethod
    def from_rows(cls, attributes: Sequence[str], rows: dict[str, Sequence[str]]) -> InformationTable:
        cells = {}
        for obj, values in rows.items():
            if len(values) != len(attributes):
                raise TableError(f"arity mismatch for object {obj}")
            for a, v in zip(attributes, values):
                cells[obj, a] = v
        return cls(tuple(rows), tuple(attributes), cells)


def parse_table(text: str) -> InformationTable:
    """Parse a CSV document with header ``object,attr1,...,attrN``.

    Cells are whitespace-trimmed and compared as exact strings. Blank lines
    are skipped; row numbers in errors are physical CSV record numbers with
    the header as row 1.
    """
    reader = csv.reader(io.StringIO(text))
    header = None
    objects: list[str] = []
    cells: dict[tuple[str, str], str] = {}
    for record in reader:
        if not record or all(not c.strip() for c in record) and len(record) == 1:
            continue
        row = reader.line_num
        values = [c.strip() for c in record]
        if header is None:
            header = values
            if len(header) < 2:
                raise TableError("header must name at least one attribute after the object column")
            for col, name in enumerate(header, start=1):
                if not name:
                    raise TableError(f"empty header cell at row {row}, column {col}")
            attrs = header[1:]
            if len(set(attrs)) != len(attrs):
                dup = next(a for i, a in enumerate(attrs) if a in attrs[:i])
                raise TableError(f"duplicate attribute {dup}")
            continue
        if len(values) != len(header):
            raise TableError(f"arity mismatch at row {row}: expected {len(header)} cells, got {len(values)}")
        for col, v in enumerate(values, start=1):
            if not v:
                raise TableError(f"empty cell at row {row}, column {col}")
        obj = values[0]
        if obj in objects:
            raise TableError(f"duplicate object {obj} at row {row}")
        objects.append(obj)
        for a, v in zip(header[1:], values[1:]):
            cells[obj, a] = v
    if header is None:
        raise TableError("empty table")
    if not objects:
        raise TableError("table has a header but no object rows")
    return InformationTable(tuple(objects), tuple(header[1:]), cells)


@dataclass(frozen=True)
class Partition:
    """A partition of an ordered universe into nonempty, disjoint blocks.

    ``block_masks`` holds each block as a bitmask over universe positions
    (bit i is ``universe[i]``); every set-level operation downstream works on
    these masks.
    """

    universe: tuple[str, ...]
    blocks: tuple[tuple[str, ...], ...]
    class_of: dict[str, int] = field(init=False, repr=False, compare=False)
    block_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("universe has repeated objects")
        index = {x: i for i, x in enumerate(self.universe)}
        class_of: dict[str, int] = {}
        masks = []
        for b, block in enumerate(self.blocks):
            if not block:
                raise ValueError(f"block {b} is empty")
            mask = 0
            for x in block:
                if x not in index:
                    raise ValueError(f"object {x} of block {b} is not in the universe")
                if x in class_of:
                    raise ValueError(f"object {x} appears in two blocks")
                class_of[x] = b
                mask |= 1 << index[x]
            masks.append(mask)
        missing = [x for x in self.universe if x not in class_of]
        if missing:
            raise ValueError(f"objects not covered by any block: {missing}")
        object.__setattr__(self, "class_of", class_of)
        object.__setattr__(self, "block_masks", tuple(masks))

    @classmethod
    def from_blocks(cls, universe: Sequence[str], blocks: Sequence[Sequence[str]]) -> Partition:
        """Build a partition with blocks put in canonical order.

        Members are ordered by universe position and blocks by their least
        member, so equal partitions compare equal however they were listed.
        """
        pos = {x: i for i, x in enumerate(universe)}
        ordered = [tuple(sorted(b, key=lambda x: pos.get(x, len(pos)))) for b in blocks]
        ordered.sort(key=lambda b: pos.get(b[0], len(pos)) if b else -1)
        return cls(tuple(universe), tuple(ordered))

    @classmethod
    def from_labels(cls, universe: Sequence[str], labels: Sequence[int]) -> Partition:
        groups: dict[int, list[str]] = {}
        for x, lab in zip(universe, labels, strict=True):
            groups.setdefault(lab, []).append(x)
        return cls.from_blocks(universe, list(groups.values()))

    @property
    def size(self) -> int:
        return len(self.universe)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.universe)) - 1

    def same_block(self, x: str, y: str) -> bool:
        return self.class_of[x] == self.class_of[y]

    def to_json(self) -> dict:
        return {"universe": list(self.universe), "blocks": [list(b) for b in self.blocks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def indiscernibility_partition(t: InformationTable) -> Partition:
    """Group objects that agree on every attribute."""
    groups: dict[tuple[str, ...], list[str]] = {}
    for x in t.objects:
        groups.setdefault(t.row(x), []).append(x)
    return Partition.from_blocks(t.objects, list(groups.values()))


def _restricted_growth(n: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    labels = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield list(labels)
            return
        for lab in range(top + 2):
            labels[i] = lab
            yield from rec(i + 1, max(top, lab))

    labels[0] = 0
    yield from rec(1, 0)


def set_partitions(universe: Sequence[str]) -> Iterator[Partition]:
    """Every partition of ``universe`` (Bell-number many), in a fixed order."""
    for labels in _restricted_growth(len(universe)):
        yield Partition.from_labels(universe, labels)


def random_partition(universe: Sequence[str], rng: random.Random) -> Partition:
    """A partition drawn by assigning each object a random block label.

    Not uniform over set partitions; used only to sample test spaces.
    """
    n = len(universe)
    k = rng.randint(1, n)
    return Partition.from_labels(universe, [rng.randrange(k) for _ in range(n)])
