"""Structure of the functional digraph of a finite transformation.

Every component of a finite functional digraph is one cycle together with
the trees hanging off it.  ``decompose`` computes that structure once; the
other helpers (stable image, stabilizer, omega, sup_b, twigs) read it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .transformation import Transformation

__all__ = [
    "Branch",
    "FiniteComponent",
    "ComponentDecomposition",
    "TwigSet",
    "decompose",
    "stable_image",
    "stabilizer",
    "omega",
    "sup_b",
    "twigs",
    "depths",
]


@dataclass(frozen=True)
class Branch:
    path: tuple[int, ...]

    def __post_init__(self):
        if len(self.path) < 2:
            raise ValueError("a branch has length at least 1")

    @property
    def length(self) -> int:
        return len(self.path) - 1

    @property
    def start(self) -> int:
        return self.path[0]

    @property
    def attach(self) -> int:
        return self.path[-1]


@dataclass(frozen=True)
class FiniteComponent:
    cycle: tuple[int, ...]
    tree_parent: dict[int, int]
    branches: tuple[Branch, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle) | frozenset(self.tree_parent)

    @property
    def cycle_length(self) -> int:
        return len(self.cycle)

    @property
    def max_branch_length(self) -> int:
        return max((b.length for b in self.branches), default=0)


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[FiniteComponent, ...]
    vertex_to_component: tuple[int, ...]
    depth: tuple[int, ...]

    @cached_property
    def cycle_vertices(self) -> frozenset[int]:
        return frozenset(v for c in self.components for v in c.cycle)

    @property
    def cycle_lengths(self) -> list[int]:
        return [c.cycle_length for c in self.components]

    @property
    def branches(self) -> list[Branch]:
        return [b for c in self.components for b in c.branches]


@dataclass(frozen=True)
class TwigSet:
    twigs: tuple[Branch, ...]

    def __iter__(self):
        return iter(self.twigs)

    def __len__(self):
        return len(self.twigs)


def _cycle_flags(m: tuple[int, ...]) -> list[bool]:
    n = len(m)
    on_cycle = [False] * n
    state = [0] * n  # 0 unseen, 1 on current walk, 2 finished
    for start in range(n):
        if state[start]:
            continue
        walk = []
        v = start
        while state[v] == 0:
            state[v] = 1
            walk.append(v)
            v = m[v]
        if state[v] == 1:
            # closed a new cycle at v
            u = v
            while True:
                on_cycle[u] = True
                u = m[u]
                if u == v:
                    break
        for u in walk:
            state[u] = 2
    return on_cycle


def depths(alpha: Transformation) -> tuple[int, ...]:
    """Distance from each vertex to the cycle of its component."""
    return decompose(alpha).depth


def decompose(alpha: Transformation) -> ComponentDecomposition:
    m = alpha.map
    n = len(m)
    on_cycle = _cycle_flags(m)

    preimages: list[list[int]] = [[] for _ in range(n)]
    for x, y in enumerate(m):
        preimages[y].append(x)

    # reverse BFS from the cycles: depth and owning cycle root
    depth = [-1] * n
    root = [-1] * n
    for v in range(n):
        if on_cycle[v] and root[v] < 0:
            u = v
            cyc = []
            while True:
                cyc.append(u)
                u = m[u]
                if u == v:
                    break
            r = min(cyc)
            for u in cyc:
                root[u] = r
                depth[u] = 0
    frontier = [v for v in range(n) if on_cycle[v]]
    while frontier:
        nxt = []
        for y in frontier:
            for x in preimages[y]:
                if depth[x] < 0:
                    depth[x] = depth[y] + 1
                    root[x] = root[y]
                    nxt.append(x)
        frontier = nxt

    # components ordered by smallest vertex
    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(root[v], []).append(v)
    order = sorted(members, key=lambda r: members[r][0])
    comp_of_root = {r: i for i, r in enumerate(order)}

    components = []
    for r in order:
        cycle = [r]
        u = m[r]
        while u != r:
            cycle.append(u)
            u = m[u]
        tree_parent = {v: m[v] for v in members[r] if not on_cycle[v]}
        branches = []
        for v in members[r]:
            if on_cycle[v] or preimages[v]:
                continue
            path = [v]
            while not on_cycle[path[-1]]:
                path.append(m[path[-1]])
            branches.append(Branch(tuple(path)))
        components.append(
            FiniteComponent(tuple(cycle), tree_parent, tuple(branches)))

    return ComponentDecomposition(
        components=tuple(components),
        vertex_to_component=tuple(comp_of_root[root[v]] for v in range(n)),
        depth=tuple(depth),
    )


def stable_image(alpha: Transformation) -> frozenset[int]:
    """Vertices lying in the image of every power; for finite carriers
    these are exactly the cycle vertices."""
    return decompose(alpha).cycle_vertices


def stabilizer(alpha: Transformation) -> int:
    return max(decompose(alpha).depth)


def omega(alpha: Transformation) -> frozenset[int]:
    """All of S when the stabilizer is 0, otherwise the vertices whose
    distance to the stable image is exactly the stabilizer."""
    d = decompose(alpha).depth
    s = max(d)
    if s == 0:
        return frozenset(range(alpha.size))
    return frozenset(v for v, dv in enumerate(d) if dv == s)


def sup_b(alpha: Transformation) -> int:
    return max((b.length for b in decompose(alpha).branches), default=0)


def twigs(alpha: Transformation) -> TwigSet:
    """Finite branches ending at their first stable-image vertex.

    Walks forward from every initial vertex; on a finite carrier these
    coincide with the branches.
    """
    m = alpha.map
    sim = stable_image(alpha)
    has_preimage = set(m)
    out = []
    for v in range(alpha.size):
        if v in has_preimage or v in sim:
            continue
        path = [v]
        while path[-1] not in sim:
            path.append(m[path[-1]])
        out.append(Branch(tuple(path)))
    return TwigSet(tuple(out))
