"""Reading and writing the line-based ``.suf`` table format.

::

    # comment
    chain service : *,**,***,****
    chain price : -,0,+
    codomain : 1,2,3,4,5,6,7,8
    *,-,- -> 1
    ...

Chains are declared in coordinate order, labels ascending; then one line per
domain point. Unary maps (one block per coordinate) use the same arrow
syntax under a ``map <name>`` header.
"""

from __future__ import annotations

import re
from importlib import resources
from typing import Sequence

import numpy as np

from .chains import Chain, ProductDomain
from .table import UnaryMap, UtilityTable

__all__ = [
    "ParseError",
    "parse_table",
    "render_table",
    "parse_maps",
    "render_maps",
    "load_table",
    "load_maps",
    "hotel_table",
    "hotel_maps",
]

_BAD_LABEL = re.compile(r"[,\s]|->")


class ParseError(ValueError):
    """A malformed input file. ``code`` names the failure mode."""

    MALFORMED = "malformed-line"
    BAD_LABEL = "bad-label"
    UNKNOWN_LABEL = "unknown-label"
    DUPLICATE_POINT = "duplicate-point"
    INCOMPLETE = "incomplete-table"
    CODOMAIN = "codomain"
    NO_CHAINS = "no-chains"
    ARITY = "arity"
    MAP_BLOCK = "map-block"

    def __init__(self, code: str, message: str, line: int | None = None):
        self.code = code
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _labels(text: str, no: int) -> tuple[str, ...]:
    labels = tuple(part.strip() for part in text.split(","))
    for lab in labels:
        if not lab or _BAD_LABEL.search(lab):
            raise ParseError(ParseError.BAD_LABEL, f"invalid label {lab!r}", no)
    if len(set(labels)) != len(labels):
        raise ParseError(ParseError.BAD_LABEL, "repeated label in chain", no)
    return labels


def _arrow(line: str, no: int) -> tuple[str, str]:
    if line.count("->") != 1:
        raise ParseError(ParseError.MALFORMED, f"expected '<labels> -> <label>', got {line!r}", no)
    left, right = (part.strip() for part in line.split("->"))
    return left, right


def parse_table(text: str) -> UtilityTable:
    chains: list[Chain] = []
    codomain: Chain | None = None
    rows: dict[tuple[int, ...], tuple[int, int]] = {}
    domain = None
    for no, line in _lines(text):
        head, _, rest = line.partition(":")
        words = head.split()
        if "->" not in line and words and words[0] == "chain":
            if domain is not None:
                raise ParseError(ParseError.MALFORMED, "chain declared after data rows", no)
            if len(words) != 2 or not _:
                raise ParseError(ParseError.MALFORMED, "expected 'chain <name> : <labels>'", no)
            chains.append(Chain(_labels(rest, no), name=words[1]))
            continue
        if "->" not in line and words == ["codomain"]:
            if codomain is not None:
                raise ParseError(ParseError.CODOMAIN, "second codomain line", no)
            if domain is not None:
                raise ParseError(ParseError.MALFORMED, "codomain declared after data rows", no)
            codomain = Chain(_labels(rest, no), name="codomain")
            continue
        left, right = _arrow(line, no)
        if domain is None:
            if not chains:
                raise ParseError(ParseError.NO_CHAINS, "data row before any chain line", no)
            if codomain is None:
                raise ParseError(ParseError.CODOMAIN, "data row before the codomain line", no)
            domain = ProductDomain(tuple(chains))
        labels = tuple(part.strip() for part in left.split(","))
        if len(labels) != domain.n:
            raise ParseError(ParseError.ARITY, f"expected {domain.n} labels, got {len(labels)}", no)
        try:
            x = domain.parse_point(labels)
            v = codomain.index(right)
        except KeyError as exc:
            raise ParseError(ParseError.UNKNOWN_LABEL, exc.args[0], no) from None
        if x in rows:
            raise ParseError(
                ParseError.DUPLICATE_POINT, f"duplicate point {left} (first given on line {rows[x][1]})", no
            )
        rows[x] = (v, no)
    if not chains:
        raise ParseError(ParseError.NO_CHAINS, "no chain lines")
    if codomain is None:
        raise ParseError(ParseError.CODOMAIN, "no codomain line")
    domain = domain or ProductDomain(tuple(chains))
    if len(rows) != domain.size:
        raise ParseError(ParseError.INCOMPLETE, f"incomplete table: {len(rows)} of {domain.size} points")
    values = np.empty(domain.shape, dtype=np.int64)
    for x, (v, _no) in rows.items():
        values[x] = v
    return UtilityTable(domain, codomain, values)


def render_table(f: UtilityTable) -> str:
    """Canonical text: chains, codomain, then points in lexicographic order."""
    out = []
    for i, c in enumerate(f.domain.chains):
        out.append(f"chain {c.name or f'x{i + 1}'} : {','.join(c.labels)}")
    out.append(f"codomain : {','.join(f.codomain.labels)}")
    for x, v in f.items():
        out.append(f"{f.domain.format_point(x)} -> {f.codomain.labels[v]}")
    return "\n".join(out) + "\n"


def parse_maps(text: str, domain: ProductDomain, codomain: Chain) -> list[UnaryMap]:
    """Blocks ``map <name>`` followed by ``<source label> -> <target label>`` rows;
    the ``i``-th block is the map for coordinate ``i``."""
    blocks: list[tuple[int, dict[int, int]]] = []
    for no, line in _lines(text):
        words = line.split()
        if "->" not in line and words and words[0] == "map":
            if len(blocks) >= domain.n:
                raise ParseError(ParseError.MAP_BLOCK, f"more map blocks than the {domain.n} coordinates", no)
            blocks.append((no, {}))
            continue
        if not blocks:
            raise ParseError(ParseError.MAP_BLOCK, "map row before any 'map' header", no)
        left, right = _arrow(line, no)
        src = domain.chains[len(blocks) - 1]
        try:
            x, v = src.index(left), codomain.index(right)
        except KeyError as exc:
            raise ParseError(ParseError.UNKNOWN_LABEL, exc.args[0], no) from None
        rows = blocks[-1][1]
        if x in rows:
            raise ParseError(ParseError.DUPLICATE_POINT, f"source label {left} given twice", no)
        rows[x] = v
    if len(blocks) != domain.n:
        raise ParseError(ParseError.MAP_BLOCK, f"expected {domain.n} map blocks, found {len(blocks)}")
    maps = []
    for (no, rows), src in zip(blocks, domain.chains):
        if len(rows) != src.size:
            raise ParseError(ParseError.INCOMPLETE, f"map has {len(rows)} of {src.size} source labels", no)
        maps.append(UnaryMap(src, codomain, tuple(rows[x] for x in range(src.size))))
    return maps


def render_maps(phis: Sequence[UnaryMap], names: Sequence[str] | None = None) -> str:
    out = []
    for i, phi in enumerate(phis):
        name = names[i] if names else (phi.source.name or f"x{i + 1}")
        out.append(f"map {name}")
        out.extend(f"{a} -> {b}" for a, b in phi.labels())
    return "\n".join(out) + "\n"


def load_table(path) -> UtilityTable:
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read())


def load_maps(paths: Sequence, domain: ProductDomain, codomain: Chain) -> list[UnaryMap]:
    text = []
    for path in paths:
        with open(path, encoding="utf-8") as fh:
            text.append(fh.read())
    return parse_maps("\n".join(text), domain, codomain)


def hotel_table() -> UtilityTable:
    """The hotel rating example (service x price x location -> 1..8)."""
    return parse_table(resources.files(__package__).joinpath("data/hotel.suf").read_text(encoding="utf-8"))


def hotel_maps() -> list[UnaryMap]:
    """The local utility functions for the hotel example."""
    f = hotel_table()
    text = resources.files(__package__).joinpath("data/hotel_phi.suf").read_text(encoding="utf-8")
    return parse_maps(text, f.domain, f.codomain)
