"""Knot tables: ``name<TAB>braid`` per line, ``#`` comments ignored."""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterator

from .braid import Braid, closure_components, format_braid, minus, parse_braid
from .errors import ComponentError, InputError, SchemaError

MIRROR_SUFFIX = "-mr"


@dataclass(frozen=True)
class KnotTable:
    entries: tuple[tuple[str, Braid], ...]

    def __post_init__(self):
        seen = set()
        for name, b in self.entries:
            if not name:
                raise SchemaError("knot names must be nonempty")
            if name in seen:
                raise SchemaError(f"duplicate knot name {name!r}")
            seen.add(name)
            if closure_components(b) != 1:
                raise ComponentError(f"{name}: closure of {format_braid(b)} is not a knot")

    def __iter__(self) -> Iterator[tuple[str, Braid]]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def names(self) -> list[str]:
        return [name for name, _ in self.entries]

    def get(self, name: str) -> Braid:
        for n, b in self.entries:
            if n == name:
                return b
        raise InputError(f"no knot named {name!r} in table")

    def with_mirrors(self) -> KnotTable:
        """Each entry followed by its reversed mirror, named ``<name>-mr``."""
        out = []
        for name, b in self.entries:
            out.append((name, b))
            out.append((name + MIRROR_SUFFIX, minus(b)))
        return KnotTable(tuple(out))


def parse_table(text: str) -> KnotTable:
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            raise SchemaError(f"line {lineno}: expected 'name<TAB>braid'")
        name, braid_text = line.split("\t", 1)
        name = name.strip()
        try:
            b = parse_braid(braid_text)
        except InputError as exc:
            raise type(exc)(f"{name or f'line {lineno}'}: {exc}") from None
        entries.append((name, b))
    return KnotTable(tuple(entries))


def load_table(path: str | Path) -> KnotTable:
    return parse_table(Path(path).read_text(encoding="utf-8"))


def bundled_table() -> KnotTable:
    text = resources.files("knotsurgery").joinpath("data/knots.tsv").read_text(encoding="utf-8")
    return parse_table(text)
