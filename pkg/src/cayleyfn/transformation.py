"""Finite full transformations of {0, ..., n-1}.

A transformation is stored as a tuple ``map`` where ``map[i]`` is the image
of ``i``.  Optional ``labels`` are presentation metadata only: they take no
part in equality or hashing.

Composition uses left action throughout: ``compose(f, g)(x) == f(g(x))``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .errors import ParseError, SizeMismatch

__all__ = [
    "Transformation",
    "identity",
    "constant",
    "compose",
    "power",
    "image_chain",
    "is_idempotent",
    "commutes",
    "parse",
    "format_two_row",
    "format_json",
    "to_record",
    "lcm",
]


@dataclass(frozen=True)
class Transformation:
    map: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        m = tuple(int(v) for v in self.map)
        object.__setattr__(self, "map", m)
        n = len(m)
        if n == 0:
            raise ValueError("transformation on an empty set")
        for i, v in enumerate(m):
            if not 0 <= v < n:
                raise ValueError(f"image of {i} is {v}, outside 0..{n - 1}")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != n:
                raise ValueError(f"{len(labels)} labels for {n} points")
            if len(set(labels)) != n:
                raise ValueError("labels are not pairwise distinct")
            object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        return len(self.map)

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __len__(self) -> int:
        return len(self.map)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def index(self, label: str) -> int:
        """Vertex carrying ``label`` (plain integers when unlabelled)."""
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def with_map(self, new_map: Iterable[int]) -> Transformation:
        """Same carrier and labels, different map."""
        return Transformation(tuple(new_map), self.labels)

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def is_permutation(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def __repr__(self):
        return f"Transformation({list(self.map)})"


def identity(n: int, labels: Sequence[str] | None = None) -> Transformation:
    return Transformation(tuple(range(n)), labels)


def constant(n: int, value: int = 0) -> Transformation:
    return Transformation((value,) * n)


def _check_sizes(f: Transformation, g: Transformation) -> None:
    if f.size != g.size:
        raise SizeMismatch(f"sizes differ: {f.size} and {g.size}")


def compose(f: Transformation, g: Transformation) -> Transformation:
    """``x -> f(g(x))``."""
    _check_sizes(f, g)
    fm = f.map
    return Transformation(tuple(fm[y] for y in g.map), f.labels or g.labels)


def power(f: Transformation, k: int) -> Transformation:
    if k < 0:
        raise ValueError("negative exponent")
    result = tuple(range(f.size))
    base = f.map
    # square-and-multiply; composition of powers of f commutes
    while k:
        if k & 1:
            result = tuple(base[y] for y in result)
        base = tuple(base[y] for y in base)
        k >>= 1
    return Transformation(result, f.labels)


def image_chain(f: Transformation) -> list[frozenset[int]]:
    """img(f^0), img(f^1), ... up to the first set equal to its successor.

    The last index of the returned list is the stabilizer of ``f``.
    """
    current = frozenset(range(f.size))
    chain = [current]
    while True:
        nxt = frozenset(f.map[x] for x in current)
        if nxt == current:
            return chain
        chain.append(nxt)
        current = nxt


def is_idempotent(f: Transformation) -> bool:
    m = f.map
    return all(m[m[x]] == m[x] for x in range(len(m)))


def commutes(f: Transformation, g: Transformation) -> bool:
    _check_sizes(f, g)
    fm, gm = f.map, g.map
    return all(fm[gm[x]] == gm[fm[x]] for x in range(len(fm)))


def lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


# ---------------------------------------------------------------------------
# text formats

_TOKEN = re.compile(r"/|[^\s/]+")


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def parse(text: str) -> Transformation:
    """Read either the two-row table ``x1 x2 ... / y1 y2 ...`` or the JSON
    record ``{"labels": [...], "map": [...]}``."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input", 1, 1)
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_two_row(text)


def _parse_two_row(text: str) -> Transformation:
    tokens = [(m.group(), m.start()) for m in _TOKEN.finditer(text)]
    slashes = [i for i, (tok, _) in enumerate(tokens) if tok == "/"]
    if len(slashes) != 1:
        where = tokens[slashes[1]][1] if len(slashes) > 1 else len(text)
        raise ParseError("expected exactly one '/' separating the two rows",
                         *_position(text, where))
    cut = slashes[0]
    top, bottom = tokens[:cut], tokens[cut + 1:]
    if not top:
        raise ParseError("empty top row", *_position(text, tokens[cut][1]))
    index: dict[str, int] = {}
    for tok, off in top:
        if tok in index:
            raise ParseError(f"duplicate label {tok!r}", *_position(text, off))
        index[tok] = len(index)
    if len(bottom) != len(top):
        off = bottom[len(top)][1] if len(bottom) > len(top) else len(text)
        raise ParseError(
            f"wrong arity: top row has {len(top)} entries, bottom row {len(bottom)}",
            *_position(text, off))
    images = []
    for tok, off in bottom:
        if tok not in index:
            raise ParseError(f"unknown label {tok!r}", *_position(text, off))
        images.append(index[tok])
    return Transformation(tuple(images), tuple(index))


def _parse_json(text: str) -> Transformation:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(record, dict) or "map" not in record:
        raise ParseError("record must be an object with a 'map' field")
    images = record["map"]
    labels = record.get("labels")
    if not isinstance(images, list) or not images:
        raise ParseError("'map' must be a non-empty list")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in images):
        raise ParseError("'map' entries must be integers")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != len(images):
            raise ParseError(
                f"wrong arity: {len(images)} map entries but "
                f"{len(labels) if isinstance(labels, list) else 'no'} labels")
        seen = set()
        for lab in labels:
            if not isinstance(lab, str) or not lab or re.search(r"[\s/]", lab):
                raise ParseError(f"invalid label {lab!r}")
            if lab in seen:
                raise ParseError(f"duplicate label {lab!r}")
            seen.add(lab)
    for i, v in enumerate(images):
        if not 0 <= v < len(images):
            raise ParseError(f"unknown target {v} at map index {i}")
    return Transformation(tuple(images), tuple(labels) if labels else None)


def format_two_row(f: Transformation) -> str:
    top = " ".join(f.label(x) for x in range(f.size))
    bottom = " ".join(f.label(y) for y in f.map)
    return f"{top} / {bottom}"


def to_record(f: Transformation) -> dict:
    return {"labels": list(f.labels) if f.labels is not None else None,
            "map": list(f.map)}


def format_json(f: Transformation) -> str:
    return json.dumps(to_record(f))
