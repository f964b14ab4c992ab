"""Deciding whether a finite transformation is a Cayley function.

Two independent full characterizations are implemented:

* ``zupnik_finite`` works only with powers of alpha and orbits of points.
* ``digraph_cayley_finite`` reads cycle lengths and branch lengths off the
  functional digraph.

``is_cayley`` runs both and refuses to answer if they disagree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .digraph import decompose
from .errors import InconsistencyError
from .transformation import Transformation, lcm

__all__ = [
    "Status",
    "CayleyVerdict",
    "zupnik_finite",
    "zupnik_witnesses",
    "digraph_cayley_finite",
    "is_cayley",
]


class Status(str, enum.Enum):
    CAYLEY = "Cayley"
    NOT_CAYLEY = "NotCayley"
    UNKNOWN = "Unknown"

    @property
    def exit_code(self) -> int:
        return {"Cayley": 0, "NotCayley": 1, "Unknown": 2}[self.value]


@dataclass(frozen=True)
class CayleyVerdict:
    status: Status
    criterion: str
    witness: Any = None
    details: dict = field(default_factory=dict, compare=False)

    @property
    def is_cayley(self) -> bool:
        return self.status is Status.CAYLEY

    def to_record(self) -> dict:
        return {"status": self.status.value, "criterion": self.criterion,
                "witness": self.witness, "details": self.details}


def _power_table(alpha: Transformation, upto: int) -> list[tuple[int, ...]]:
    m = alpha.map
    powers = [tuple(range(alpha.size))]
    for _ in range(upto):
        powers.append(tuple(m[y] for y in powers[-1]))
    return powers


def _zupnik_data(alpha: Transformation):
    """Powers alpha^0..alpha^(s+L), with each distinct power interned."""
    # stabilizer straight from the image chain, independent of decompose()
    m = alpha.map
    image = frozenset(range(alpha.size))
    s = 0
    while True:
        nxt = frozenset(m[x] for x in image)
        if nxt == image:
            break
        image = nxt
        s += 1
    # alpha permutes its stable image; L = order of that permutation
    cycle_lengths = []
    seen = set()
    for v in sorted(image):
        if v in seen:
            continue
        k, u = 0, v
        while True:
            seen.add(u)
            u = m[u]
            k += 1
            if u == v:
                break
        cycle_lengths.append(k)
    period = lcm(cycle_lengths)
    powers = _power_table(alpha, s + period)
    ids: dict[tuple[int, ...], int] = {}
    power_id = [ids.setdefault(p, len(ids)) for p in powers]
    if s == 0:
        omega = list(range(alpha.size))
    else:
        before = _power_table(alpha, s)
        omega = [a for a in range(alpha.size)
                 if before[s][a] in image and before[s - 1][a] not in image]
    return s, image, period, powers, power_id, omega


def _implication_holds(a, powers, power_id) -> bool:
    # alpha^m(a) == alpha^n(a) must force alpha^m == alpha^n; equal orbit
    # values are compared against the first index carrying that value
    first: dict[int, int] = {}
    for idx, p in enumerate(powers):
        v = p[a]
        if v in first:
            if power_id[first[v]] != power_id[idx]:
                return False
        else:
            first[v] = idx
    return True


def zupnik_witnesses(alpha: Transformation) -> list[int]:
    """Every point of Omega satisfying the power implication, ascending."""
    s, image, period, powers, power_id, omega = _zupnik_data(alpha)
    return [a for a in omega if _implication_holds(a, powers, power_id)]


def zupnik_finite(alpha: Transformation) -> CayleyVerdict:
    """Power criterion.  On a finite carrier the stabilizer always exists
    and alpha is a bijection of its stable image, so only the second case
    of the criterion can occur."""
    s, image, period, powers, power_id, omega = _zupnik_data(alpha)
    if len({powers[1][x] for x in image}) != len(image):
        # cannot happen on a finite set: alpha maps img(alpha^s) onto itself
        raise InconsistencyError("alpha is not injective on its stable image")
    details = {"stabilizer": s, "period": period, "omega": sorted(omega)}
    for a in sorted(omega):
        if _implication_holds(a, powers, power_id):
            return CayleyVerdict(Status.CAYLEY, "zupnik", a, details)
    return CayleyVerdict(Status.NOT_CAYLEY, "zupnik", None,
                         {**details, "failed": "no point of omega satisfies "
                                               "the power implication"})


def digraph_cayley_finite(alpha: Transformation) -> CayleyVerdict:
    """Digraph criterion for carriers with no double rays or rro components:
    the distinct cycle lengths all divide the largest one, and when
    branches exist some cycle of that largest length carries a branch of
    maximal length."""
    dec = decompose(alpha)
    lengths = sorted(set(dec.cycle_lengths))
    k_max = lengths[-1]
    s = max((c.max_branch_length for c in dec.components), default=0)
    details = {"cycle_lengths": lengths, "sup_b": s}
    bad = [k for k in lengths if k_max % k]
    if bad:
        return CayleyVerdict(
            Status.NOT_CAYLEY, "digraph",
            {"clause": "divisibility", "cycle_length": bad[0], "max": k_max},
            details)
    if s > 0:
        carriers = [i for i, c in enumerate(dec.components)
                    if c.cycle_length == k_max and c.max_branch_length == s]
        if not carriers:
            return CayleyVerdict(
                Status.NOT_CAYLEY, "digraph",
                {"clause": "longest-branch", "sup_b": s, "max": k_max},
                details)
        return CayleyVerdict(Status.CAYLEY, "digraph",
                             {"component": carriers[0]}, details)
    return CayleyVerdict(Status.CAYLEY, "digraph", None, details)


def is_cayley(alpha: Transformation) -> CayleyVerdict:
    zup = zupnik_finite(alpha)
    dig = digraph_cayley_finite(alpha)
    if zup.status is not dig.status:
        raise InconsistencyError(
            f"deciders disagree on {list(alpha.map)}: zupnik={zup.status.value}, "
            f"digraph={dig.status.value}")
    details = {**dig.details, "zupnik": zup.details}
    if zup.is_cayley:
        return CayleyVerdict(Status.CAYLEY, "both", {"zupnik": zup.witness,
                                                     "digraph": dig.witness},
                             details)
    return CayleyVerdict(Status.NOT_CAYLEY, "both", dig.witness, details)
