"""Round-handle decomposition data and the stagewise fiber-surface ledger.

The total space decomposes into one 4-ball, ell solid tori (S^1 x B^3),
and ell round 1-handles, each joining the ball's boundary to the boundary
of a distinct solid torus.  The attaching maps are recorded only through
this combinatorial shadow (which pieces are joined, d_p feet per region);
framings are deliberately out of scope.

Each handle attachment rebuilds the fiber surface: 2*d_p disks are removed
(d_p from each of the two pieces being joined) and d_p annuli are glued in,
so chi drops by exactly 2*d_p per stage, the component count drops by one,
and the number of boundary circles never changes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import seifert
from .seifert import SeifertLinkData


@dataclass(frozen=True)
class RoundHandle:
    index: int
    d_p: int
    joins: tuple[int, int]  # component ids: (ball side, solid-torus side)

    def __post_init__(self):
        if self.joins[0] == self.joins[1]:
            raise ValueError("a round handle cannot join a component to itself")


@dataclass(frozen=True)
class FiberStage:
    index: int
    chi: int
    components: int
    boundary_circles: int
    disks_removed: int = 0  # 0 for the initial stage
    annuli_glued: int = 0


@dataclass(frozen=True)
class HandleDecomposition:
    link: SeifertLinkData
    ball_piece: int
    solid_tori: tuple[int, ...]
    round_handles: tuple[RoundHandle, ...]
    stages: tuple[FiberStage, ...]

    @property
    def pieces(self) -> int:
        return 1 + len(self.solid_tori)


def build(link: SeifertLinkData) -> HandleDecomposition:
    """Assemble the decomposition and run the fiber ledger for one link."""
    ell = link.n
    d_p, _ = seifert.degrees(link)
    ball = 0
    tori = tuple(range(1, ell + 1))
    # Critical values are ordered by increasing |F|; with only combinatorial
    # data the stage order is the index order.
    handles = tuple(
        RoundHandle(index=i, d_p=d_p, joins=(ball, i)) for i in tori
    )

    chi = seifert.euler_characteristic_base(link.p, link.q, link.m - link.n)
    components = ell + 1
    boundary = seifert.boundary_circles(link)
    stages = [FiberStage(index=0, chi=chi, components=components,
                         boundary_circles=boundary)]
    for i in tori:
        chi -= 2 * d_p
        components -= 1
        stages.append(FiberStage(
            index=i,
            chi=chi,
            components=components,
            boundary_circles=boundary,
            disks_removed=2 * d_p,
            annuli_glued=d_p,
        ))

    decomposition = HandleDecomposition(
        link=link,
        ball_piece=ball,
        solid_tori=tori,
        round_handles=handles,
        stages=tuple(stages),
    )
    _check(decomposition)
    return decomposition


def _check(h: HandleDecomposition):
    last = h.stages[-1]
    first = h.stages[0]
    assert h.pieces - len(h.round_handles) == 1, "attachments must leave one component"
    assert last.components == 1
    assert last.chi - first.chi == -2 * len(h.round_handles) * _d_p(h)
    assert all(s.boundary_circles == first.boundary_circles for s in h.stages)
    assert last.chi == seifert.euler_characteristic_total(h.link)


def _d_p(h: HandleDecomposition) -> int:
    return seifert.degrees(h.link)[0]


def genus_report(h: HandleDecomposition) -> tuple[int, int]:
    """(genus, boundary circles) of the final connected fiber."""
    last = h.stages[-1]
    num = 2 - last.chi - last.boundary_circles
    if num % 2 != 0 or num < 0:
        raise AssertionError("inconsistent ledger: genus is not a nonnegative integer")
    return num // 2, last.boundary_circles
