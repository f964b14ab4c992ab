"""Eventually periodic descriptions of infinite functional digraph components.

Two skeletons are supported:

``RroDescriptor``
    a maximal right ray x0 -> x1 -> ... with finite branches.  Position i
    carries ``prefix[i]`` while inside the prefix and a periodic pattern
    afterwards.
``DoubleRayDescriptor``
    a double ray ... -> x-1 -> x0 -> x1 -> ... with an explicit window of
    positions -w..w and periodic tails on both sides.  Branches may be
    infinite.

Each position carries a multiset of ``BranchSpec``.  Tail lengths are
constants; a growing-branch structure is modelled with an explicit prefix
plus ``unbounded=True``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .cayley import Status
from .errors import HasInfiniteBranch, ParseError, RadiusTooSmall
from .transformation import Transformation

__all__ = [
    "BranchSpec",
    "PeriodicTail",
    "TRIVIAL_TAIL",
    "RroDescriptor",
    "DoubleRayDescriptor",
    "SymStatus",
    "SymbolicVerdict",
    "check_rro_condition",
    "check_doubleray_theorem",
    "check_no_infinite_branch_case",
    "phi_rro_theorem",
    "phi_doubleray_theorem",
    "lift_one_cycles",
    "Materialization",
    "materialize",
    "interior_branches",
    "interior_rro_check",
    "parse_descriptor",
    "descriptor_to_record",
    "UNBOUNDED",
]

UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class BranchSpec:
    length: int | None  # None for an infinite branch
    multiplicity: int | str = 1

    def __post_init__(self):
        if self.length is not None and self.length < 1:
            raise ValueError("finite branch lengths are at least 1")
        if self.multiplicity != UNBOUNDED and (
                not isinstance(self.multiplicity, int) or self.multiplicity < 1):
            raise ValueError(f"bad multiplicity {self.multiplicity!r}")

    @classmethod
    def finite(cls, length: int, multiplicity: int | str = 1) -> BranchSpec:
        return cls(length, multiplicity)

    @classmethod
    def infinite(cls, multiplicity: int | str = 1) -> BranchSpec:
        return cls(None, multiplicity)

    @property
    def is_infinite(self) -> bool:
        return self.length is None

    @property
    def kind(self) -> str:
        return "infinite" if self.length is None else "finite"


Multiset = tuple[BranchSpec, ...]


def _multiset(specs) -> Multiset:
    out = []
    for b in specs:
        if isinstance(b, BranchSpec):
            out.append(b)
        elif b in ("inf", "infinite", None):
            out.append(BranchSpec.infinite())
        else:
            out.append(BranchSpec.finite(int(b)))
    return tuple(out)


@dataclass(frozen=True)
class PeriodicTail:
    pattern: tuple[Multiset, ...]

    def __post_init__(self):
        if not self.pattern:
            raise ValueError("a periodic tail needs at least one slot")
        object.__setattr__(self, "pattern", tuple(_multiset(p) for p in self.pattern))

    @property
    def period(self) -> int:
        return len(self.pattern)

    def slot(self, j: int) -> Multiset:
        return self.pattern[j % len(self.pattern)]


TRIVIAL_TAIL = PeriodicTail(((),))


@dataclass(frozen=True)
class RroDescriptor:
    prefix: tuple[Multiset, ...]
    tail: PeriodicTail = TRIVIAL_TAIL
    unbounded: bool = False

    skeleton = "rro"

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(_multiset(p) for p in self.prefix))
        for ms in self.prefix + self.tail.pattern:
            if any(b.is_infinite for b in ms):
                raise ValueError("branches of a right ray are finite")

    @property
    def extent(self) -> int:
        return len(self.prefix)

    def branches_at(self, i: int) -> Multiset:
        if i < 0:
            raise IndexError("ray positions are non-negative")
        if i < len(self.prefix):
            return self.prefix[i]
        return self.tail.slot(i - len(self.prefix))

    def representative_positions(self) -> Iterator[int]:
        """Prefix positions, then one full tail period."""
        yield from range(len(self.prefix) + self.tail.period)


@dataclass(frozen=True)
class DoubleRayDescriptor:
    window: tuple[Multiset, ...]
    left_tail: PeriodicTail = TRIVIAL_TAIL
    right_tail: PeriodicTail = TRIVIAL_TAIL

    skeleton = "double_ray"

    def __post_init__(self):
        if len(self.window) % 2 != 1:
            raise ValueError("the window must cover positions -w..w")
        object.__setattr__(self, "window", tuple(_multiset(p) for p in self.window))

    @property
    def extent(self) -> int:
        return len(self.window) // 2

    def branches_at(self, p: int) -> Multiset:
        w = self.extent
        if p > w:
            return self.right_tail.slot(p - w - 1)
        if p < -w:
            return self.left_tail.slot(-w - 1 - p)
        return self.window[p + w]

    def representative_positions(self) -> Iterator[int]:
        """One left period, the window, one right period (left to right)."""
        w = self.extent
        yield from range(-w - self.left_tail.period, w + self.right_tail.period + 1)

    def has_infinite_branch(self) -> bool:
        return any(b.is_infinite for p in self.representative_positions()
                   for b in self.branches_at(p))


class SymStatus(str, enum.Enum):
    SATISFIED = "Satisfied"
    VIOLATED = "Violated"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SymbolicVerdict:
    status: SymStatus
    witness_position: int | None = None
    alpha_status: Status | None = None
    detail: str = ""
    check: str = ""

    def to_record(self) -> dict:
        return {"check": self.check, "status": self.status.value,
                "witness_position": self.witness_position,
                "alpha_status": self.alpha_status.value if self.alpha_status else None,
                "detail": self.detail}


# ---------------------------------------------------------------------------
# checks


def check_rro_condition(d: RroDescriptor) -> SymbolicVerdict:
    """Every branch ending at ray position i has length at most i.

    Tail lengths are constant while i grows, so one period at the first
    governed indices decides the whole tail.
    """
    name = "rro_condition"
    for i in d.representative_positions():
        for b in d.branches_at(i):
            if b.length > i:
                return SymbolicVerdict(SymStatus.VIOLATED, i, None,
                                       f"branch of length {b.length} at position {i}", name)
    if d.unbounded:
        return SymbolicVerdict(SymStatus.VIOLATED, None, None,
                               "branch lengths grow without bound", name)
    return SymbolicVerdict(SymStatus.SATISFIED, None, None, "", name)


def _has_infinite(ms: Multiset) -> bool:
    return any(b.is_infinite for b in ms)


def _has_length(ms: Multiset, s: int) -> bool:
    return any(b.length == s for b in ms)


def check_doubleray_theorem(d: DoubleRayDescriptor, s: int) -> SymbolicVerdict:
    """Some position i carries a finite branch of length s (when s > 0)
    and every position j > i carries an infinite branch."""
    name = "doubleray_theorem"
    if s < 0:
        raise ValueError("s must be non-negative")
    w = d.extent
    for j in range(d.right_tail.period):
        if not _has_infinite(d.right_tail.slot(j)):
            p = w + 1 + j
            return SymbolicVerdict(SymStatus.VIOLATED, p, None,
                                   f"no infinite branch at position {p} (right tail)", name)
    # rightmost position lacking an infinite branch bounds i from below
    last_gap = None
    for p in range(w, -w - 1, -1):
        if not _has_infinite(d.branches_at(p)):
            last_gap = p
            break
    if last_gap is None:
        for j in range(d.left_tail.period):
            if not _has_infinite(d.left_tail.slot(j)):
                last_gap = -w - 1 - j
                break
    if s == 0:
        i = last_gap if last_gap is not None else -w
        return SymbolicVerdict(SymStatus.SATISFIED, i, None,
                               "every position right of the witness has an infinite branch", name)
    lo = last_gap if last_gap is not None else -w - d.left_tail.period
    for p in d.representative_positions():
        if p >= lo and _has_length(d.branches_at(p), s):
            return SymbolicVerdict(SymStatus.SATISFIED, p, None,
                                   f"finite branch of length {s} at position {p}", name)
    return SymbolicVerdict(SymStatus.VIOLATED, last_gap, None,
                           f"no finite branch of length {s} at or right of position {lo}", name)


def check_no_infinite_branch_case(d: DoubleRayDescriptor, s: int) -> SymbolicVerdict:
    """s == 0, or some position carries a finite branch of length exactly s."""
    name = "no_infinite_branch_case"
    if d.has_infinite_branch():
        raise HasInfiniteBranch("descriptor contains an infinite branch")
    if s == 0:
        return SymbolicVerdict(SymStatus.SATISFIED, None, None, "s = 0", name)
    for p in d.representative_positions():
        if _has_length(d.branches_at(p), s):
            return SymbolicVerdict(SymStatus.SATISFIED, p, None,
                                   f"branch of length {s} at position {p}", name)
    return SymbolicVerdict(SymStatus.VIOLATED, None, None,
                           f"no branch of length {s} anywhere", name)


def _phi_verdict(inner: SymbolicVerdict, name: str) -> SymbolicVerdict:
    if inner.status is SymStatus.SATISFIED:
        return SymbolicVerdict(SymStatus.SATISFIED, inner.witness_position, Status.CAYLEY,
                               "fixed vertices lift to a witness structure in D_alpha; " + inner.detail,
                               name)
    return SymbolicVerdict(SymStatus.UNKNOWN, inner.witness_position, Status.UNKNOWN,
                           "condition fails on D_Phi, which is not conclusive for alpha; "
                           + inner.detail, name)


def phi_rro_theorem(d: RroDescriptor) -> SymbolicVerdict:
    return _phi_verdict(check_rro_condition(d), "phi_rro_theorem")


def phi_doubleray_theorem(d: DoubleRayDescriptor, s: int) -> SymbolicVerdict:
    return _phi_verdict(check_doubleray_theorem(d, s), "phi_doubleray_theorem")


def lift_one_cycles(d, satellite_counts: Sequence[int] | None = None):
    """Descriptor of alpha restricted to the fixed vertices of epsilon.

    Alpha maps the fixed vertex of a component to the fixed vertex of its
    Phi-image, so the lifted digraph has the same skeleton, each finite
    branch of length k lifts to one of length k and infinite branches stay
    infinite.  Satellite counts cannot change that subdigraph; they are
    only validated against the explicit part of the descriptor.
    """
    if satellite_counts is not None:
        if len(satellite_counts) != len(d.prefix if isinstance(d, RroDescriptor) else d.window):
            raise ValueError("one satellite count per explicit descriptor position")
        if any(c < 0 for c in satellite_counts):
            raise ValueError("satellite counts are non-negative")

    def lift(ms: Multiset) -> Multiset:
        return tuple(BranchSpec(b.length, b.multiplicity) for b in ms)

    def lift_tail(t: PeriodicTail) -> PeriodicTail:
        return PeriodicTail(tuple(lift(ms) for ms in t.pattern))

    if isinstance(d, RroDescriptor):
        return RroDescriptor(tuple(lift(ms) for ms in d.prefix), lift_tail(d.tail), d.unbounded)
    return DoubleRayDescriptor(tuple(lift(ms) for ms in d.window),
                               lift_tail(d.left_tail), lift_tail(d.right_tail))


# ---------------------------------------------------------------------------
# finite truncation


@dataclass(frozen=True)
class Materialization:
    transformation: Transformation
    boundary: frozenset[int]
    spine: dict[int, int] = field(compare=False)  # position -> vertex
    radius: int = 0

    @property
    def position_of(self) -> dict[int, int]:
        return {v: p for p, v in self.spine.items()}


def materialize(d, radius: int) -> Materialization:
    """Finite digraph of every position within ``radius``.

    The last ray vertex is closed with a self-loop; the left end of a
    double ray and the far tip of each truncated infinite branch become
    artificial initial vertices.  All of these are returned as boundary.
    Unbounded multiplicities are materialized ``radius`` times.
    """
    if radius < d.extent:
        raise RadiusTooSmall(f"radius {radius} is smaller than descriptor extent {d.extent}")
    if isinstance(d, RroDescriptor):
        positions = list(range(0, radius + 1))
    else:
        positions = list(range(-radius, radius + 1))
    images: list[int] = []
    labels: list[str] = []
    boundary = set()
    spine = {}
    for p in positions:
        spine[p] = len(images)
        images.append(-1)
        labels.append(f"x{p}")
    for p in positions[:-1]:
        images[spine[p]] = spine[p + 1]
    images[spine[positions[-1]]] = spine[positions[-1]]
    boundary.add(spine[positions[-1]])
    if isinstance(d, DoubleRayDescriptor):
        boundary.add(spine[positions[0]])

    for p in positions:
        for k, b in enumerate(d.branches_at(p)):
            copies = radius if b.multiplicity == UNBOUNDED else b.multiplicity
            length = radius if b.is_infinite else b.length
            for c in range(copies):
                target = spine[p]
                for j in range(length):
                    v = len(images)
                    images.append(target)
                    labels.append(f"b{p}.{k}.{c}.{j}")
                    target = v
                if b.is_infinite:
                    boundary.add(target)
    return Materialization(Transformation(tuple(images), tuple(labels)),
                           frozenset(boundary), spine, radius)


def interior_branches(mat: Materialization) -> list[tuple[int, int]]:
    """(position, length) for every chain from a genuine initial vertex to
    the first spine vertex, read from the finite map alone."""
    m = mat.transformation.map
    spine_pos = mat.position_of
    has_pre = set(m)
    out = []
    for v in range(len(m)):
        if v in has_pre or v in spine_pos or v in mat.boundary:
            continue
        u, steps = v, 0
        while u not in spine_pos:
            u, steps = m[u], steps + 1
            if steps > len(m):
                break
        else:
            out.append((spine_pos[u], steps))
    return sorted(out)


def interior_rro_check(mat: Materialization, margin: int = 0) -> SymbolicVerdict:
    """Brute-force version of the rro condition on a truncation, limited to
    positions at most ``radius - margin``."""
    limit = mat.radius - margin
    bad = [p for p, length in interior_branches(mat) if p <= limit and length > p]
    if bad:
        return SymbolicVerdict(SymStatus.VIOLATED, min(bad), None, "", "interior_rro")
    return SymbolicVerdict(SymStatus.SATISFIED, None, None, "", "interior_rro")


# ---------------------------------------------------------------------------
# file format


def _spec_from_json(obj) -> BranchSpec:
    if isinstance(obj, bool):
        raise ParseError(f"bad branch spec {obj!r}")
    if isinstance(obj, int):
        return BranchSpec.finite(obj)
    if obj in ("inf", "infinite"):
        return BranchSpec.infinite()
    if isinstance(obj, dict):
        mult = obj.get("multiplicity", 1)
        kind = obj.get("kind", "infinite" if obj.get("length") is None else "finite")
        if kind == "infinite":
            return BranchSpec.infinite(mult)
        return BranchSpec.finite(int(obj["length"]), mult)
    raise ParseError(f"bad branch spec {obj!r}")


def _spec_to_json(b: BranchSpec):
    if b.multiplicity == 1:
        return "inf" if b.is_infinite else b.length
    out = {"kind": b.kind, "multiplicity": b.multiplicity}
    if not b.is_infinite:
        out["length"] = b.length
    return out


def _multisets(rows) -> tuple[Multiset, ...]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("expected a list of branch lists")
    return tuple(tuple(_spec_from_json(b) for b in r) for r in rows)


def _tail(obj) -> PeriodicTail:
    if obj is None:
        return TRIVIAL_TAIL
    pattern = _multisets(obj.get("pattern", [[]]))
    if "period" in obj and obj["period"] != len(pattern):
        raise ParseError(f"period {obj['period']} does not match pattern of length {len(pattern)}")
    return PeriodicTail(pattern)


def parse_descriptor(text: str):
    """Read a descriptor record.  Returns ``(descriptor, extras)`` where
    extras holds optional fields such as ``s``."""
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(rec, dict):
        raise ParseError("descriptor must be a JSON object")
    skeleton = rec.get("skeleton")
    tails = rec.get("tails") or {}
    extras = {k: rec[k] for k in ("s", "name") if k in rec}
    try:
        if skeleton == "rro":
            d = RroDescriptor(_multisets(rec.get("prefix", [])),
                              _tail(tails if "pattern" in tails else None),
                              bool(rec.get("unbounded", False)))
        elif skeleton == "double_ray":
            d = DoubleRayDescriptor(_multisets(rec.get("window", [[]])),
                                    _tail(tails.get("left")), _tail(tails.get("right")))
        else:
            raise ParseError(f"unknown skeleton {skeleton!r}")
    except (ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None
    return d, extras


def _tail_record(t: PeriodicTail) -> dict:
    return {"period": t.period, "pattern": [[_spec_to_json(b) for b in ms] for ms in t.pattern]}


def descriptor_to_record(d) -> dict:
    if isinstance(d, RroDescriptor):
        return {"skeleton": "rro",
                "prefix": [[_spec_to_json(b) for b in ms] for ms in d.prefix],
                "tails": _tail_record(d.tail),
                "unbounded": d.unbounded}
    return {"skeleton": "double_ray",
            "window": [[_spec_to_json(b) for b in ms] for ms in d.window],
            "tails": {"left": _tail_record(d.left_tail), "right": _tail_record(d.right_tail)}}
