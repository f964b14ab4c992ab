"""Worked instances used by the test-suite, the CLI demos and the docs."""

from __future__ import annotations

from dataclasses import dataclass

from .symbolic import BranchSpec, DoubleRayDescriptor, RroDescriptor
from .transformation import Transformation, parse

__all__ = [
    "WORKED_LABELS",
    "WORKED_EPSILON_TEXT",
    "WORKED_ALPHA_TEXT",
    "worked_example",
    "unknown_but_cayley_pair",
    "unknown_not_cayley_pair",
    "GROWING_RAY",
    "TWO_BRANCH_DOUBLE_RAY",
    "ClosingConstruction",
    "closing_construction",
]

WORKED_LABELS = "a a1 a2 b b1 b2 b3 c c1 c2 d e e1"
WORKED_EPSILON_TEXT = f"{WORKED_LABELS} / a a a b b b b c c c d e e"
WORKED_ALPHA_TEXT = f"{WORKED_LABELS} / b b b c c c c d d d e b b"


def worked_example() -> tuple[Transformation, Transformation]:
    """(alpha, epsilon) on the 13-point set a, a1, ..., e1."""
    return parse(WORKED_ALPHA_TEXT), parse(WORKED_EPSILON_TEXT)


def _pair(images: dict[str, str], eps: dict[str, str]):
    labels = tuple(eps)
    idx = {lab: i for i, lab in enumerate(labels)}
    alpha = Transformation(tuple(idx[images[lab]] for lab in labels), labels)
    epsilon = Transformation(tuple(idx[eps[lab]] for lab in labels), labels)
    return alpha, epsilon


def unknown_not_cayley_pair() -> tuple[Transformation, Transformation]:
    """Five single-point epsilon-components; alpha swaps two of them and
    rotates the other three, so D_Phi has cycle lengths {2, 3}."""
    eps = {v: v for v in ("P0", "P1", "Q0", "Q1", "Q2")}
    images = {"P0": "P1", "P1": "P0", "Q0": "Q1", "Q1": "Q2", "Q2": "Q0"}
    return _pair(images, eps)


def unknown_but_cayley_pair() -> tuple[Transformation, Transformation]:
    """D_Phi has cycle lengths {2, 3} so the sufficiency test gives up, yet
    alpha is a permutation with cycle type (2)(3)(6) and therefore Cayley.

    The three-cycle components each carry two satellites, which alpha
    strings into a single 6-cycle.
    """
    eps = {"P0": "P0", "P1": "P1",
           "Q0": "Q0", "Q1": "Q1", "Q2": "Q2",
           "q0": "Q0", "q1": "Q1", "q2": "Q2",
           "r0": "Q0", "r1": "Q1", "r2": "Q2"}
    images = {"P0": "P1", "P1": "P0",
              "Q0": "Q1", "Q1": "Q2", "Q2": "Q0",
              "q0": "q1", "q1": "q2", "q2": "r0",
              "r0": "r1", "r1": "r2", "r2": "q0"}
    return _pair(images, eps)


# Right ray whose branch lengths outgrow their attachment index:
# branches [y0 x1], [y2 y1 x2], [y3 y4 y5 y6 x3], and longer ones beyond.
GROWING_RAY = RroDescriptor(
    prefix=((), (BranchSpec.finite(1),), (BranchSpec.finite(2),), (BranchSpec.finite(4),)),
    unbounded=True,
)

# Double ray with branches [z2 z1 z0 x1] and [y2 y1 y0 x2].
TWO_BRANCH_DOUBLE_RAY = DoubleRayDescriptor(
    window=((), (), (), (BranchSpec.finite(3),), (BranchSpec.finite(3),)),
)


@dataclass(frozen=True)
class ClosingConstruction:
    epsilon: Transformation
    alpha: Transformation
    boundary: frozenset[int]
    fixed_line: dict[int, int]      # position -> fixed vertex of X_p
    satellite_line: dict[int, int]  # position -> first satellite of X_p
    phi_descriptor: DoubleRayDescriptor
    stabilizer: int
    radius: int


def closing_construction(s: int, radius: int, side_branches: bool = False) -> ClosingConstruction:
    """Truncated (epsilon, alpha) pair whose D_Phi is a double ray without
    infinite branches, yet alpha is Cayley with stabilizer ``s``.

    Components X_p (|p| <= radius) have a fixed vertex f_p and a satellite
    q_p; alpha shifts both lines one step right.  For 1 <= p <= s, X_p gets
    a second satellite q'_p, and the q' vertices are chained so that
    q'_1 -> ... -> q'_s -> f_(s+1) is a branch of length s.  With
    ``side_branches`` the two length-3 Phi-branches of
    ``TWO_BRANCH_DOUBLE_RAY`` are attached at X_1 and X_2, each of their
    components carrying one satellite mapped onto the next fixed vertex;
    the stabilizer then becomes max(s, 3).
    """
    if radius < s + 2:
        raise ValueError("radius must exceed s + 1")
    labels: list[str] = []
    eps: list[int] = []
    alp: list[int] = []

    def new(label: str) -> int:
        labels.append(label)
        eps.append(-1)
        alp.append(-1)
        return len(labels) - 1

    positions = range(-radius, radius + 1)
    f = {p: new(f"f{p}") for p in positions}
    q = {p: new(f"q{p}") for p in positions}
    extra = {p: new(f"r{p}") for p in range(1, s + 1)}
    for p in positions:
        nxt = min(p + 1, radius)
        eps[f[p]] = f[p]
        eps[q[p]] = f[p]
        alp[f[p]] = f[nxt]
        alp[q[p]] = q[nxt]
    for p, v in extra.items():
        eps[v] = f[p]
        alp[v] = extra[p + 1] if p < s else f[s + 1]
    window = [()] * 5
    stab = s
    if side_branches:
        for name, attach in (("z", 1), ("y", 2)):
            fixed = [new(f"{name}{j}") for j in range(3)]
            sats = [new(f"{name}{j}s") for j in range(3)]
            for j in range(3):
                eps[fixed[j]] = fixed[j]
                eps[sats[j]] = fixed[j]
                target = f[attach] if j == 0 else fixed[j - 1]
                alp[fixed[j]] = target
                alp[sats[j]] = target
        window = [(), (), (), (BranchSpec.finite(3),), (BranchSpec.finite(3),)]
        stab = max(s, 3)
    boundary = frozenset({f[-radius], q[-radius], f[radius], q[radius]})
    return ClosingConstruction(
        epsilon=Transformation(tuple(eps), tuple(labels)),
        alpha=Transformation(tuple(alp), tuple(labels)),
        boundary=boundary,
        fixed_line=f,
        satellite_line=q,
        phi_descriptor=DoubleRayDescriptor(tuple(window)),
        stabilizer=stab,
        radius=radius,
    )
