"""Transformations commuting with an idempotent.

An idempotent epsilon splits the carrier into components, each a fixed
vertex with depth-1 satellites.  A transformation alpha commutes with
epsilon exactly when it sends every component into a single component,
fixed vertex to fixed vertex; the induced map on components is ``Phi``.

The finite sufficiency test (``main_theorem_finite``) and the structural
checks of ``verify_lemmas`` are phrased in terms of the digraph of Phi.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cayley import Status
from .digraph import decompose
from .errors import NotIdempotent, NotInCentralizer, SizeMismatch
from .transformation import Transformation, is_idempotent

__all__ = [
    "EpsilonComponent",
    "IdempotentStructure",
    "CentralizerCheck",
    "PhiMap",
    "SufficiencyVerdict",
    "LemmaCheck",
    "idempotent_structure",
    "check_centralizer",
    "build_phi",
    "main_theorem_finite",
    "random_idempotent",
    "random_commuting",
    "verify_lemmas",
]


@dataclass(frozen=True)
class EpsilonComponent:
    fixed_vertex: int
    satellite_vertices: frozenset[int]

    @property
    def domain(self) -> frozenset[int]:
        return self.satellite_vertices | {self.fixed_vertex}


@dataclass(frozen=True)
class IdempotentStructure:
    components: tuple[EpsilonComponent, ...]
    component_index: tuple[int, ...]

    def __len__(self):
        return len(self.components)

    def satellite_counts(self) -> list[int]:
        return [len(c.satellite_vertices) for c in self.components]


def _require_idempotent(epsilon: Transformation) -> None:
    if not is_idempotent(epsilon):
        raise NotIdempotent("epsilon is not idempotent")


def idempotent_structure(epsilon: Transformation) -> IdempotentStructure:
    _require_idempotent(epsilon)
    m = epsilon.map
    fixed = [v for v in range(epsilon.size) if m[v] == v]
    position = {z: i for i, z in enumerate(fixed)}
    satellites: dict[int, set[int]] = {z: set() for z in fixed}
    for v in range(epsilon.size):
        if m[v] != v:
            satellites[m[v]].add(v)
    comps = tuple(EpsilonComponent(z, frozenset(satellites[z])) for z in fixed)
    return IdempotentStructure(comps, tuple(position[m[v]] for v in range(epsilon.size)))


@dataclass(frozen=True)
class CentralizerCheck:
    ok: bool
    pairs: tuple[tuple[int, int], ...]
    violation: dict | None = None

    def __bool__(self):
        return self.ok


def check_centralizer(alpha: Transformation, epsilon: Transformation) -> CentralizerCheck:
    """Component-wise commutation test.

    For each epsilon-component with fixed vertex y, alpha(y) must be a
    fixed vertex z and alpha must carry the whole component into the
    component of z.  ``pairs`` lists (source, target) component indices
    up to the first violation.
    """
    if alpha.size != epsilon.size:
        raise SizeMismatch(f"sizes differ: {alpha.size} and {epsilon.size}")
    struct = idempotent_structure(epsilon)
    idx = struct.component_index
    em, am = epsilon.map, alpha.map
    pairs = []
    for g, comp in enumerate(struct.components):
        z = am[comp.fixed_vertex]
        if em[z] != z:
            return CentralizerCheck(False, tuple(pairs), {
                "component": g, "reason": "fixed vertex not sent to a fixed vertex",
                "vertex": comp.fixed_vertex, "image": z})
        d = idx[z]
        for x in sorted(comp.satellite_vertices):
            if idx[am[x]] != d:
                return CentralizerCheck(False, tuple(pairs), {
                    "component": g, "reason": "containment", "vertex": x,
                    "image": am[x], "expected_component": d,
                    "actual_component": idx[am[x]]})
        pairs.append((g, d))
    return CentralizerCheck(True, tuple(pairs))


@dataclass(frozen=True)
class PhiMap:
    base: Transformation
    component_index: tuple[int, ...]
    structure: IdempotentStructure = field(compare=False, repr=False)

    def __call__(self, g: int) -> int:
        return self.base.map[g]


def build_phi(alpha: Transformation, epsilon: Transformation) -> PhiMap:
    check = check_centralizer(alpha, epsilon)
    if not check:
        raise NotInCentralizer(f"alpha does not commute with epsilon: {check.violation}")
    struct = idempotent_structure(epsilon)
    base_map = [d for _, d in check.pairs]
    labels = None
    if alpha.labels is not None or epsilon.labels is not None:
        named = epsilon if epsilon.labels is not None else alpha
        labels = tuple(named.label(c.fixed_vertex) for c in struct.components)
    return PhiMap(Transformation(tuple(base_map), labels), struct.component_index, struct)


@dataclass(frozen=True)
class SufficiencyVerdict:
    status: Status
    M: frozenset[int]
    s: int
    failed_condition: str | None = None
    carrier_component: int | None = None

    def to_record(self) -> dict:
        return {"status": self.status.value, "M": sorted(self.M), "s": self.s,
                "failed_condition": self.failed_condition,
                "carrier_component": self.carrier_component}


def main_theorem_finite(alpha: Transformation, epsilon: Transformation) -> SufficiencyVerdict:
    """Sufficient condition for alpha to be Cayley, read off D_Phi.

    M is the set of cycle lengths of D_Phi (each epsilon-cycle is a fixed
    point, so the general cycle data collapses to these lengths) and s is
    the longest branch of D_Phi.  Failure only yields Unknown.
    """
    phi = build_phi(alpha, epsilon)
    dec = decompose(phi.base)
    M = frozenset(dec.cycle_lengths)
    top = max(M)
    s = max((c.max_branch_length for c in dec.components), default=0)
    if any(top % k for k in M):
        return SufficiencyVerdict(Status.UNKNOWN, M, s,
                                  "largest cycle length is not a multiple of every element of M")
    if s > 0:
        carriers = [i for i, c in enumerate(dec.components)
                    if c.cycle_length == top and c.max_branch_length == s]
        if not carriers:
            return SufficiencyVerdict(Status.UNKNOWN, M, s,
                                      "no component with the largest cycle has a branch of length s")
        return SufficiencyVerdict(Status.CAYLEY, M, s, None, carriers[0])
    return SufficiencyVerdict(Status.CAYLEY, M, s)


def random_idempotent(n: int, seed) -> Transformation:
    rng = random.Random(seed)
    k = rng.randint(1, n)
    fixed = sorted(rng.sample(range(n), k))
    fixed_set = set(fixed)
    return Transformation(tuple(v if v in fixed_set else rng.choice(fixed)
                                for v in range(n)))


def random_commuting(epsilon: Transformation, seed) -> Transformation:
    """Draw a component map Phi' uniformly, then send each fixed vertex to
    the fixed vertex of its Phi'-image and each satellite anywhere inside
    that image component."""
    struct = idempotent_structure(epsilon)
    rng = random.Random(seed)
    t = len(struct)
    phi = [rng.randrange(t) for _ in range(t)]
    domains = [sorted(c.domain) for c in struct.components]
    out = [0] * epsilon.size
    for g, comp in enumerate(struct.components):
        target = struct.components[phi[g]]
        out[comp.fixed_vertex] = target.fixed_vertex
        for x in sorted(comp.satellite_vertices):
            out[x] = rng.choice(domains[phi[g]])
    return Transformation(tuple(out), epsilon.labels)


# ---------------------------------------------------------------------------
# structural checks


@dataclass(frozen=True)
class LemmaCheck:
    lemma_id: str
    component: int
    check: str
    passed: bool
    detail: str = ""
    strict: bool = True  # False: informational, the bound is ambiguous as stated

    def to_record(self) -> dict:
        return {"lemma_id": self.lemma_id, "component": self.component,
                "check": self.check, "pass": self.passed, "detail": self.detail,
                "strict": self.strict}


def verify_lemmas(alpha: Transformation, epsilon: Transformation) -> list[LemmaCheck]:
    """Check the structural consequences of alpha commuting with epsilon,
    one D_Phi component at a time.

    L1  alpha carries each component into its Phi-image; L and Z are closed.
    L2  fixed vertices on the Phi-cycle form one alpha-cycle of length k;
        every alpha-cycle inside L has length a multiple of k.
    L3  (when some Phi-cycle component has no satellites) satellites form no
        alpha-cycle, and alpha-depths obey l <= k-1 (A branchless) or
        l <= k+s.
    L4  the bound l <= m*k + s under both readings of m (minimum and maximum
        satellite count on the cycle).  Recorded, never strict.
    """
    phi = build_phi(alpha, epsilon)
    struct = phi.structure
    comps = struct.components
    cidx = struct.component_index
    em, am = epsilon.map, alpha.map
    fixed = {c.fixed_vertex for c in comps}
    phi_dec = decompose(phi.base)
    alpha_dec = decompose(alpha)
    report: list[LemmaCheck] = []

    for a_idx, A in enumerate(phi_dec.components):
        k = A.cycle_length
        members = sorted(A.vertices)
        L = {x for g in members for x in comps[g].domain}
        Z = {comps[g].fixed_vertex for g in members}
        Zc = [comps[g].fixed_vertex for g in A.cycle]
        add = report.append

        bad = [(x, am[x]) for g in members for x in comps[g].domain
               if cidx[am[x]] != phi.base.map[g]]
        add(LemmaCheck("L1", a_idx, "images stay in the Phi-image component",
                       not bad, f"violations {bad[:3]}" if bad else ""))
        add(LemmaCheck("L1", a_idx, "alpha maps L into L",
                       all(am[x] in L for x in L)))
        add(LemmaCheck("L1", a_idx, "alpha maps Z into Z",
                       all(am[x] in Z for x in Z)))
        add(LemmaCheck("L1", a_idx, "Phi-cycle components have 1-cycles",
                       all(em[comps[g].fixed_vertex] == comps[g].fixed_vertex
                           for g in A.cycle)))

        orbit_ok = True
        for z in Zc:
            u, steps = am[z], 1
            while u != z and steps <= len(L):
                u, steps = am[u], steps + 1
            if u != z or steps != k:
                orbit_ok = False
        add(LemmaCheck("L2", a_idx, "fixed vertices on the Phi-cycle form alpha-cycles of length k",
                       orbit_ok, f"k={k}"))
        cycles_in_L = [c for c in alpha_dec.components if c.cycle[0] in L]
        lengths = [c.cycle_length for c in cycles_in_L]
        add(LemmaCheck("L2", a_idx, "alpha-cycles in L have length a multiple of k",
                       all(len_ % k == 0 for len_ in lengths),
                       f"k={k}, cycle lengths {lengths}"))

        sat_counts = [len(comps[g].satellite_vertices) for g in A.cycle]
        s_A = A.max_branch_length
        l_max = max((alpha_dec.depth[x] for x in L), default=0)
        if min(sat_counts) == 0:
            sat_on_cycle = [v for c in cycles_in_L for v in c.cycle if v not in fixed]
            add(LemmaCheck("L3", a_idx, "satellites induce no alpha-cycle",
                           not sat_on_cycle,
                           f"satellite cycle vertices {sat_on_cycle[:3]}" if sat_on_cycle else ""))
            bound = k - 1 if s_A == 0 else k + s_A
            add(LemmaCheck("L3", a_idx,
                           "alpha branch lengths <= k-1" if s_A == 0 else "alpha branch lengths <= k+s",
                           l_max <= bound, f"max length {l_max}, bound {bound} (k={k}, s={s_A})"))
        for reading, m in (("min", min(sat_counts)), ("max", max(sat_counts))):
            bound = m * k + s_A
            add(LemmaCheck("L4", a_idx, f"alpha branch lengths <= m*k+s, m={reading} satellite count",
                           l_max <= bound, f"max length {l_max}, bound {bound} (m={m}, k={k}, s={s_A})",
                           strict=False))
    return report
