"""Explicit recoloring paths between proper colorings.

A path is a list of single-vertex moves, each keeping the coloring proper.
The builders here never search: every path comes out of a constructive
argument, so success is certified by construction and failure surfaces as
a structured exception (a colorability witness or a violated precondition).

Three builders layer on each other:

* ``path_core`` rewrites a coreless region, one peel level at a time.
* ``path_to_good_greedy`` walks any proper coloring into greedy shape.
* ``path_between_good_greedy`` joins two greedy-shaped colorings by
  freezing one color class per recursion level.

``connect`` composes all three; ``verify_path`` re-checks any path cold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core_peel import _active_set, _first_fit_along, beta_core
from .errors import (
    NonemptyCoreError,
    NotColorableEvidence,
    SpareColorError,
    StepCapExceededError,
    ValidationError,
)
from .hypergraph import Coloring, Hypergraph, is_proper
from .independence import (
    ColorabilityWitness,
    MISequence,
    check_good_greedy,
    extend_to_mis,
)

__all__ = [
    "DEFAULT_STEP_CAP",
    "RecolorStep",
    "PathStats",
    "RecolorPath",
    "PathVerdict",
    "path_core",
    "path_to_good_greedy",
    "path_between_good_greedy",
    "connect",
    "verify_path",
]

DEFAULT_STEP_CAP = 10 ** 7


@dataclass(frozen=True)
class RecolorStep:
    vertex: int
    new_color: int


@dataclass
class PathStats:
    """Move counts by construction phase, accumulated while building."""

    inter_moves: int = 0
    core_moves: int = 0
    detour_moves: int = 0
    final_moves: int = 0
    final_depth: int = 0
    max_inter_recolors: int = 0
    detours_per_level: list = field(default_factory=list)

    def absorb(self, other: "PathStats") -> None:
        self.inter_moves += other.inter_moves
        self.core_moves += other.core_moves
        self.detour_moves += other.detour_moves
        self.final_moves += other.final_moves
        self.final_depth = max(self.final_depth, other.final_depth)
        self.max_inter_recolors = max(self.max_inter_recolors,
                                      other.max_inter_recolors)
        self.detours_per_level.extend(other.detours_per_level)


@dataclass(frozen=True)
class RecolorPath:
    start: Coloring
    steps: tuple
    end: Coloring
    stats: PathStats

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class PathVerdict:
    """Outcome of an independent replay of a path."""

    ok: bool
    end: Optional[Coloring]
    failure_index: Optional[int]
    reason: Optional[str]


def _validate_params(alpha: int, beta: int, q: int) -> None:
    if alpha < 0 or beta < 1:
        raise ValidationError(f"need alpha >= 0 and beta >= 1, got ({alpha}, {beta})")
    if q < alpha + beta + 1:
        raise ValidationError(
            f"need q >= alpha + beta + 1 = {alpha + beta + 1}, got q={q}")


def _colors_list(H: Hypergraph, coloring: Coloring, q: int) -> list:
    """1-indexed mutable copy of a coloring, range-checked against q."""
    if len(coloring) != H.n:
        raise ValidationError("coloring length does not match the vertex count")
    if any(c > q for c in coloring.colors):
        raise ValidationError(f"coloring uses a color above q={q}")
    return [0] + list(coloring.colors)


def _edge_flags(H: Hypergraph, active: frozenset) -> list:
    """Per-edge booleans: does the edge sit entirely inside ``active``?"""
    act = [False] * (H.n + 1)
    for v in active:
        act[v] = True
    return [all(act[u] for u in e) for e in H.edges]


def _core_steps(H, edge_ok, order, chi, tau, spare_pool, cap, stats):
    """Rewrite the peel-ordered region ``order`` from chi to tau in place.

    Level i replays the moves built for the first i vertices of the order
    with vertex order[i] now live; any replayed move blocked by an edge
    through the new vertex gets a detour that parks the new vertex on a
    spare color first. Peeling guarantees a spare exists: at most beta-1
    live edges meet the new vertex inside the level, while the pool holds
    beta+1 colors none of which appear outside the region.
    """
    edges = H.edges
    inc = H.incidence
    rank = {v: i for i, v in enumerate(order)}
    pool = tuple(spare_pool)
    steps = []
    for i, vnew in enumerate(order):
        cur = chi[:]

        def mono_edge(w, c):
            # edge through w that goes fully monochromatic in c, ignoring
            # inactive edges and vertices deeper than level i
            for ei in inc[w - 1]:
                if not edge_ok[ei]:
                    continue
                for u in edges[ei]:
                    if u != w and (rank.get(u, -1) > i or cur[u] != c):
                        break
                else:
                    return ei
            return -1

        out = []
        detours = 0
        for w, c in steps:
            ei = mono_edge(w, c)
            if ei >= 0:
                if vnew not in edges[ei] or cur[vnew] != c:
                    raise ValidationError(
                        "replayed move blocked by an edge avoiding the newly "
                        "activated vertex; region preconditions are violated")
                spare = 0
                for s in pool:
                    if s != c and mono_edge(vnew, s) < 0:
                        spare = s
                        break
                if not spare:
                    raise SpareColorError(
                        f"no spare color for vertex {vnew} at level {i}")
                out.append((vnew, spare))
                cur[vnew] = spare
                detours += 1
            out.append((w, c))
            cur[w] = c
            if len(out) > cap:
                raise StepCapExceededError(
                    f"level {i} outgrew the step cap", cap=cap)
        if cur[vnew] != tau[vnew]:
            if mono_edge(vnew, tau[vnew]) >= 0:
                raise ValidationError(
                    f"target color of vertex {vnew} is blocked at its own "
                    "level; the target coloring is not proper here")
            out.append((vnew, tau[vnew]))
            cur[vnew] = tau[vnew]
        steps = out
        stats.detours_per_level.append(detours)
        stats.detour_moves += detours
    stats.core_moves += len(steps)
    return steps


def _inter_steps(H, active, chi, q, a, beta, floor, cap, stats):
    """Walk ``chi`` restricted to ``active`` into greedy shape above ``floor``.

    Builds a maximally independent classes on colors floor+1..floor+a,
    seeding each from chi's own class so no vertex moves more than once,
    then recolors the leftover onto at most beta colors along a peel order.
    Returns (steps, new colors). Raises NotColorableEvidence with the class
    sequence and core when the leftover cannot be peeled.
    """
    cur = chi[:]
    steps = []
    residual = set(active)
    classes = []
    recolors = 0
    for level in range(1, a + 1):
        color = floor + level
        if residual:
            seed = frozenset(v for v in residual if chi[v] == color)
            part = extend_to_mis(H, residual, seed_set=seed)
        else:
            part = frozenset()
        classes.append(part)
        for v in sorted(part):
            if cur[v] != color:
                steps.append((v, color))
                cur[v] = color
                recolors = max(recolors, 1)
        residual -= part
    stats.inter_moves += len(steps)
    stats.max_inter_recolors = max(stats.max_inter_recolors, recolors)
    if len(steps) > cap:
        raise StepCapExceededError("class phase outgrew the step cap", cap=cap)
    W = frozenset(residual)
    peel = beta_core(H, beta, W)
    if peel.core:
        raise NotColorableEvidence(ColorabilityWitness(
            MISequence(tuple(classes), W), frozenset(peel.core)))
    if W:
        wcolors = {cur[v] for v in W}
        if min(wcolors) <= floor + a or len(wcolors) > beta:
            # leftover colors are untidy: first-fit them onto the beta-block
            # just above the classes, walking there along the peel order
            target = _first_fit_along(
                H, peel.order, range(floor + a + 1, floor + a + beta + 1))
            tau = cur[:]
            for v, c in target.items():
                tau[v] = c
            edge_ok = _edge_flags(H, active)
            bridge = _core_steps(H, edge_ok, peel.order, cur, tau,
                                 range(floor + a + 1, floor + a + beta + 2),
                                 cap, stats)
            for v, c in bridge:
                steps.append((v, c))
                cur[v] = c
            if len(steps) > cap:
                raise StepCapExceededError(
                    "bridge phase outgrew the step cap", cap=cap)
    return steps, cur


def _final_steps(H, active, chi, tau, q, a, beta, floor, depth, cap, stats):
    """Steps from chi to tau on ``active``, both greedy-shaped above ``floor``.

    Peels one class per level: park chi's copy of color floor+1 on an unused
    color, paint tau's class floor+1 into place, then freeze that class and
    recurse on the rest with one fewer greedy level. The base case hands the
    (coreless, since tau is greedy-shaped) remainder to the region rewriter.
    """
    if all(chi[v] == tau[v] for v in active):
        return []
    stats.final_depth = max(stats.final_depth, depth)
    if a == 0:
        peel = beta_core(H, beta, active)
        if peel.core:
            raise ValidationError(
                "residual keeps a core; the endpoints were not greedy-shaped")
        edge_ok = _edge_flags(H, active)
        return _core_steps(H, edge_ok, peel.order, chi, tau,
                           range(floor + 1, floor + beta + 2), cap, stats)
    cls = floor + 1
    cur = chi[:]
    out = []
    tau_class = sorted(v for v in active if tau[v] == cls)
    chi_class = sorted(v for v in active if cur[v] == cls)
    if chi_class == tau_class:
        chi_class = []          # class already in place, park nothing
        tau_class_todo = []
    else:
        tau_class_todo = tau_class
    if chi_class:
        used = {cur[v] for v in active}
        park = 0
        for cand in range(floor + 1, q + 1):
            if cand not in used:
                park = cand
                break
        if not park:
            # a+beta distinct colors live above floor at most, and
            # q - floor >= a + beta + 1, so this cannot trigger
            raise ValidationError("no unused color above the floor")
        for v in chi_class:
            out.append((v, park))
            cur[v] = park
    for v in tau_class_todo:
        if cur[v] != cls:
            out.append((v, cls))
            cur[v] = cls
    stats.final_moves += len(out)
    if len(out) > cap:
        raise StepCapExceededError("class swap outgrew the step cap", cap=cap)
    sub_active = frozenset(active) - frozenset(tau_class)
    try:
        mid, shaped = _inter_steps(H, sub_active, cur, q, a - 1, beta,
                                   floor + 1, cap, stats)
        out.extend(mid)
        out.extend(_final_steps(H, sub_active, shaped, tau, q, a - 1, beta,
                                floor + 1, depth + 1, cap, stats))
    except NotColorableEvidence as exc:
        w = exc.witness
        lifted = ColorabilityWitness(
            MISequence((frozenset(tau_class),) + w.sequence.sets,
                       w.sequence.residual),
            w.core_vertices)
        raise NotColorableEvidence(lifted) from None
    if len(out) > cap:
        raise StepCapExceededError("recursion outgrew the step cap", cap=cap)
    return out


def _assemble(H, start, steps, stats):
    cur = [0] + list(start.colors)
    for v, c in steps:
        cur[v] = c
    return RecolorPath(start=start,
                       steps=tuple(RecolorStep(v, c) for v, c in steps),
                       end=Coloring(tuple(cur[1:])),
                       stats=stats)


def path_core(H: Hypergraph, region: Iterable[int], chi: Coloring,
              tau: Coloring, alpha: int, beta: int, q: int,
              step_cap: int = DEFAULT_STEP_CAP) -> RecolorPath:
    """Path from chi to tau when they differ only on a coreless region.

    Preconditions enforced: both colorings proper with colors in [q], equal
    off the region, colors off the region within 1..alpha, tau bringing at
    most beta colors onto the region beyond those used outside, and the
    region free of a beta-core. Needs q >= alpha + beta + 1.
    """
    _validate_params(alpha, beta, q)
    W = frozenset(_active_set(H, region))
    chi_l = _colors_list(H, chi, q)
    tau_l = _colors_list(H, tau, q)
    if not is_proper(H, chi):
        raise ValidationError("start coloring is not proper")
    if not is_proper(H, tau):
        raise ValidationError("target coloring is not proper")
    outside_colors = set()
    for v in range(1, H.n + 1):
        if v in W:
            continue
        if chi_l[v] != tau_l[v]:
            raise ValidationError(
                f"colorings disagree at vertex {v} outside the region")
        if chi_l[v] > alpha:
            raise ValidationError(
                f"vertex {v} outside the region wears color {chi_l[v]} > alpha")
        outside_colors.add(chi_l[v])
    fresh = {tau_l[v] for v in W} - outside_colors
    if len(fresh) > beta:
        raise ValidationError(
            f"target brings {len(fresh)} new colors onto the region, "
            f"more than beta={beta}")
    peel = beta_core(H, beta, W)
    if peel.core:
        raise NonemptyCoreError(
            f"region keeps a {beta}-core of {len(peel.core)} vertices",
            core=peel.core)
    stats = PathStats()
    edge_ok = [True] * H.m
    steps = _core_steps(H, edge_ok, peel.order, chi_l, tau_l,
                        range(alpha + 1, alpha + beta + 2), step_cap, stats)
    return _assemble(H, chi, steps, stats)


def path_to_good_greedy(H: Hypergraph, chi: Coloring, q: int, alpha: int,
                        beta: int, step_cap: int = DEFAULT_STEP_CAP):
    """Walk a proper coloring into greedy shape; returns (path, end coloring).

    Raises NotColorableEvidence carrying the maximally independent class
    sequence and the stuck core when the instance is not (alpha, beta)-
    colorable along the constructed sequence.
    """
    _validate_params(alpha, beta, q)
    chi_l = _colors_list(H, chi, q)
    if not is_proper(H, chi):
        raise ValidationError("start coloring is not proper")
    stats = PathStats()
    active = frozenset(range(1, H.n + 1))
    steps, _ = _inter_steps(H, active, chi_l, q, alpha, beta, 0,
                            step_cap, stats)
    path = _assemble(H, chi, steps, stats)
    return path, path.end


def path_between_good_greedy(H: Hypergraph, chi: Coloring, tau: Coloring,
                             q: int, alpha: int, beta: int,
                             step_cap: int = DEFAULT_STEP_CAP) -> RecolorPath:
    """Path between two greedy-shaped colorings of the same instance."""
    _validate_params(alpha, beta, q)
    chi_l = _colors_list(H, chi, q)
    tau_l = _colors_list(H, tau, q)
    if not check_good_greedy(H, chi, alpha, beta):
        raise ValidationError("start coloring is not greedy-shaped")
    if not check_good_greedy(H, tau, alpha, beta):
        raise ValidationError("target coloring is not greedy-shaped")
    stats = PathStats()
    active = frozenset(range(1, H.n + 1))
    steps = _final_steps(H, active, chi_l, tau_l, q, alpha, beta, 0, 1,
                         step_cap, stats)
    return _assemble(H, chi, steps, stats)


def _reversed_steps(path: RecolorPath):
    """The same walk backwards: each move undone with the color it clobbered."""
    cur = [0] + list(path.start.colors)
    olds = []
    for st in path.steps:
        olds.append(cur[st.vertex])
        cur[st.vertex] = st.new_color
    return [(st.vertex, old)
            for st, old in zip(reversed(path.steps), reversed(olds))]


def connect(H: Hypergraph, chi1: Coloring, chi2: Coloring, q: int, alpha: int,
            beta: int, step_cap: int = DEFAULT_STEP_CAP) -> RecolorPath:
    """Full path between two arbitrary proper colorings.

    Route: chi1 -> greedy shape, greedy -> greedy, then the second walk
    reversed back down to chi2. Raises NotColorableEvidence if any stage
    exposes non-(alpha, beta)-colorability.
    """
    _validate_params(alpha, beta, q)
    _colors_list(H, chi1, q)
    _colors_list(H, chi2, q)
    if not is_proper(H, chi1):
        raise ValidationError("first coloring is not proper")
    if not is_proper(H, chi2):
        raise ValidationError("second coloring is not proper")
    if chi1.colors == chi2.colors:
        return RecolorPath(chi1, (), chi1, PathStats())
    p1, shaped1 = path_to_good_greedy(H, chi1, q, alpha, beta, step_cap)
    p2, shaped2 = path_to_good_greedy(H, chi2, q, alpha, beta, step_cap)
    mid = path_between_good_greedy(H, shaped1, shaped2, q, alpha, beta,
                                   step_cap)
    steps = [(st.vertex, st.new_color) for st in p1.steps]
    steps += [(st.vertex, st.new_color) for st in mid.steps]
    steps += _reversed_steps(p2)
    if len(steps) > step_cap:
        raise StepCapExceededError("composed path outgrew the step cap",
                                   cap=step_cap)
    stats = PathStats()
    stats.absorb(p1.stats)
    stats.absorb(mid.stats)
    stats.absorb(p2.stats)
    return _assemble(H, chi1, steps, stats)


def verify_path(H: Hypergraph, path: RecolorPath, q: int) -> PathVerdict:
    """Replay a path cold and report the first violation, if any.

    Checks the start is proper in [q], every step changes exactly one vertex
    to a different in-range color, and properness holds after each move.
    """
    cols = list(path.start.colors)
    if len(cols) != H.n:
        return PathVerdict(False, None, None, "start-length-mismatch")
    if any(c > q for c in cols):
        return PathVerdict(False, None, None, "start-color-out-of-range")
    if not is_proper(H, path.start):
        return PathVerdict(False, None, None, "improper-start")
    cur = [0] + cols
    for idx, st in enumerate(path.steps):
        v, c = st.vertex, st.new_color
        if not 1 <= v <= H.n:
            return PathVerdict(False, None, idx, "vertex-out-of-range")
        if not 1 <= c <= q:
            return PathVerdict(False, None, idx, "color-out-of-range")
        if cur[v] == c:
            return PathVerdict(False, None, idx, "hamming-step")
        cur[v] = c
        for ei in H.incidence[v - 1]:
            if all(cur[u] == c for u in H.edges[ei]):
                return PathVerdict(False, None, idx, "improper-intermediate")
    return PathVerdict(True, Coloring(tuple(cur[1:])), None, None)
