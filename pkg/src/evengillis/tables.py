"""Table compilation, caching and export for derangement counts.

A table covers the box ``0 <= n_i <= max_per_arg[i]``. For ``k >= 2`` the
cell at index ``(n_1, ..., n_k)`` is ``D(n_1, ..., n_k)``. A one-argument
table lists the classical numbers: cell ``n`` is ``D(1, ..., 1)`` with ``n``
ones, since ``D(n)`` with a single address is trivially zero.

Cells are looked up in a :class:`TableCache` under the canonical key (zeros
dropped, sorted descending), so permuted specs share one entry.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import __version__
from .derangements import (
    DEFAULT_GUARD,
    GuardExceeded,
    MultisetSpec,
    multiset_derangements_enum,
    multiset_derangements_ie,
)
from .linearization import linearization_coefficient

log = logging.getLogger(__name__)

__all__ = [
    "METHODS",
    "FORMATS",
    "IdentityViolation",
    "TableRequest",
    "TableCache",
    "CacheEntry",
    "Cell",
    "Table",
    "compute_value",
    "build_table",
    "render",
]

METHODS = ("ie", "enum", "integral", "all")
FORMATS = ("text", "csv", "json")
_ALL = ("enum", "ie", "integral")


class IdentityViolation(RuntimeError):
    """Independent methods disagreed on a cell."""

    def __init__(self, spec: MultisetSpec, values: dict):
        self.spec = spec
        self.values = values
        detail = ", ".join(f"{m}={v}" for m, v in sorted(values.items()))
        super().__init__(f"methods disagree at {spec}: {detail}")


@dataclass(frozen=True)
class TableRequest:
    max_per_arg: tuple[int, ...]
    method: str = "ie"
    format: str = "text"

    def __post_init__(self):
        object.__setattr__(self, "max_per_arg", tuple(self.max_per_arg))
        if not self.max_per_arg:
            raise ValueError("a table needs at least one argument range")
        if any(m < 0 for m in self.max_per_arg):
            raise ValueError("range maxima must be nonnegative")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; choose from {METHODS}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; choose from {FORMATS}")

    @property
    def k(self) -> int:
        return len(self.max_per_arg)

    def indices(self):
        return itertools.product(*(range(m + 1) for m in self.max_per_arg))

    def spec_for(self, index: Sequence[int]) -> MultisetSpec:
        if self.k == 1:
            return MultisetSpec((1,) * index[0])
        return MultisetSpec(tuple(index))


@dataclass
class CacheEntry:
    value: int
    methods: set[str]


@dataclass
class TableCache:
    entries: dict[tuple[int, ...], CacheEntry] = field(default_factory=dict)
    version: str = __version__

    @staticmethod
    def key(spec: MultisetSpec) -> tuple[int, ...]:
        return spec.canonical().multiplicities

    def get(self, spec: MultisetSpec) -> Optional[CacheEntry]:
        return self.entries.get(self.key(spec))

    def record(self, spec: MultisetSpec, value: int, methods) -> None:
        key = self.key(spec)
        entry = self.entries.get(key)
        if entry is None:
            self.entries[key] = CacheEntry(value, set(methods))
        elif entry.value != value:
            raise IdentityViolation(spec, {"cached": entry.value, "/".join(sorted(methods)): value})
        else:
            entry.methods.update(methods)

    def to_json(self) -> str:
        doc = {
            "version": self.version,
            "entries": [
                {"spec": list(key), "value": str(e.value), "methods": sorted(e.methods)}
                for key, e in sorted(self.entries.items())
            ],
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "TableCache":
        doc = json.loads(text)
        if not isinstance(doc, dict) or "entries" not in doc:
            raise ValueError("cache document must be an object with 'entries'")
        cache = cls(version=str(doc.get("version", __version__)))
        for item in doc["entries"]:
            spec = MultisetSpec(tuple(int(n) for n in item["spec"]))
            value = item["value"]
            if not isinstance(value, str) or not value.isdigit():
                raise ValueError(f"cache value for {spec} must be a decimal string")
            methods = item.get("methods") or []
            if not methods or not set(methods) <= set(_ALL):
                raise ValueError(f"cache entry {spec} has bad provenance {methods!r}")
            cache.record(spec, int(value), methods)
        if cache.version != __version__:
            log.warning("cache written by version %s, running %s", cache.version, __version__)
            cache.version = __version__
        return cache

    @classmethod
    def load(cls, path) -> "TableCache":
        if not os.path.exists(path):
            return cls()
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_json())


def _run_method(method: str, spec: MultisetSpec, guard: int) -> int:
    if method == "ie":
        return multiset_derangements_ie(spec)
    if method == "enum":
        return multiset_derangements_enum(spec, guard)
    value = linearization_coefficient(spec)
    if value.denominator != 1:
        raise IdentityViolation(spec, {"integral": value})
    return value.numerator


@dataclass(frozen=True)
class Cell:
    index: tuple[int, ...]
    spec: MultisetSpec
    value: int
    methods: tuple[str, ...]
    note: Optional[str] = None


def compute_value(
    spec: MultisetSpec,
    method: str = "ie",
    guard: int = DEFAULT_GUARD,
    cache: Optional[TableCache] = None,
) -> tuple[int, tuple[str, ...], Optional[str]]:
    """Return ``(value, methods, note)`` for one spec.

    Under ``"all"`` the enumeration is skipped above the guard and the note
    says so; an explicit ``"enum"`` above the guard raises
    :class:`GuardExceeded`. Any disagreement raises :class:`IdentityViolation`.
    """
    wanted = list(_ALL) if method == "all" else [method]
    note = None
    if "enum" in wanted and spec.total > guard:
        if method != "all":
            raise GuardExceeded(spec.total, guard)
        wanted.remove("enum")
        note = f"enum skipped: N={spec.total} exceeds guard {guard}"

    entry = cache.get(spec) if cache is not None else None
    done = entry.methods if entry is not None else set()
    values = {m: _run_method(m, spec, guard) for m in wanted if m not in done}
    seen = set(values.values()) | ({entry.value} if entry is not None else set())
    if len(seen) != 1:
        if entry is not None:
            values["cached"] = entry.value
        raise IdentityViolation(spec, values)
    value = seen.pop()
    if cache is not None and values:
        cache.record(spec, value, values)
    return value, tuple(sorted(wanted)), note


@dataclass(frozen=True)
class Table:
    request: TableRequest
    cells: tuple[Cell, ...]

    def value_at(self, index: Sequence[int]) -> int:
        return self._by_index[tuple(index)].value

    @property
    def _by_index(self) -> dict:
        return {c.index: c for c in self.cells}


def build_table(
    request: TableRequest, guard: int = DEFAULT_GUARD, cache: Optional[TableCache] = None
) -> Table:
    cells = []
    for index in request.indices():
        spec = request.spec_for(index)
        value, methods, note = compute_value(spec, request.method, guard, cache)
        cells.append(Cell(tuple(index), spec, value, methods, note))
    return Table(request, tuple(cells))


# -- rendering ---------------------------------------------------------------


def _blocks(table: Table):
    """Yield ``(label, rows)`` 2-D slices; trailing indices select the block."""
    req = table.request
    lookup = table._by_index
    rows_max, cols_max = req.max_per_arg[0], req.max_per_arg[1]
    tails = itertools.product(*(range(m + 1) for m in req.max_per_arg[2:]))
    for tail in tails:
        label = ", ".join(f"n{i + 3}={v}" for i, v in enumerate(tail))
        rows = [
            [lookup[(r, c) + tail].value for c in range(cols_max + 1)]
            for r in range(rows_max + 1)
        ]
        yield label, rows


def _render_text(table: Table) -> str:
    req = table.request
    out = io.StringIO()
    if req.k == 1:
        width = max(len(str(c.value)) for c in table.cells)
        nwidth = max(1, len(str(req.max_per_arg[0])))
        out.write(f"{'n':>{nwidth}}  {'D(n)':>{width}}\n")
        for c in table.cells:
            out.write(f"{c.index[0]:>{nwidth}}  {c.value:>{width}}\n")
    else:
        first = True
        for label, rows in _blocks(table):
            if not first:
                out.write("\n")
            first = False
            if label:
                out.write(label + "\n")
            corner = "n1\\n2"
            labels = [str(r) for r in range(len(rows))]
            width = max(len(str(v)) for row in rows for v in row)
            width = max(width, len(str(len(rows[0]) - 1)))
            lw = max(len(corner), max(map(len, labels)))
            header = " ".join(f"{c:>{width}}" for c in range(len(rows[0])))
            out.write(f"{corner:<{lw}} {header}\n")
            for lab, row in zip(labels, rows):
                out.write(f"{lab:<{lw}} " + " ".join(f"{v:>{width}}" for v in row) + "\n")
    notes = [c for c in table.cells if c.note]
    if notes:
        out.write("\nnotes:\n")
        for c in notes:
            out.write(f"  {c.spec}: {c.note}\n")
    return out.getvalue()


def _render_csv(table: Table) -> str:
    req = table.request
    out = io.StringIO()
    writer = csv.writer(out)
    if req.k == 1:
        writer.writerow(["n", "D"])
        for c in table.cells:
            writer.writerow([c.index[0], c.value])
        return out.getvalue()
    for label, rows in _blocks(table):
        if label:
            writer.writerow([label.replace(", ", ";")])
        writer.writerow(["n1\\n2", *range(len(rows[0]))])
        for r, row in enumerate(rows):
            writer.writerow([r, *row])
    return out.getvalue()


def _render_json(table: Table) -> str:
    req = table.request
    cells = []
    for c in table.cells:
        item = {
            "index": list(c.index),
            "spec": list(c.spec.multiplicities),
            "value": str(c.value),
            "methods": list(c.methods),
        }
        if c.note:
            item["note"] = c.note
        cells.append(item)
    doc = {
        "version": __version__,
        "k": req.k,
        "max_per_arg": list(req.max_per_arg),
        "method": req.method,
        "cells": cells,
    }
    return json.dumps(doc, indent=2) + "\n"


def render(table: Table, fmt: Optional[str] = None) -> str:
    fmt = fmt or table.request.format
    if fmt == "text":
        return _render_text(table)
    if fmt == "csv":
        return _render_csv(table)
    if fmt == "json":
        return _render_json(table)
    raise ValueError(f"unknown format {fmt!r}")
