"""Brute-force ground truth for the single-vertex recoloring graph.

The recoloring graph on q colors has one node per proper coloring and an
edge between colorings at Hamming distance exactly 1. Everything here is
exhaustive and budgeted: enumeration refuses outright when q**n exceeds its
budget, and the all-pairs diameter sweep refuses when the largest component
is too big to BFS from every node.

Colorings are encoded internally as mixed-radix integers (digit v is the
color of vertex v), which makes neighbor probing one add and one dict lookup.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InstanceTooLargeError, ValidationError
from .hypergraph import Coloring, Hypergraph, is_proper

__all__ = ["GammaStats", "enumerate_proper", "gamma_stats", "gamma_distance"]

DEFAULT_BUDGET = 10 ** 7
DEFAULT_DIAMETER_BUDGET = 10 ** 8


@dataclass(frozen=True)
class GammaStats:
    """Census of the recoloring graph for one (H, q)."""

    num_colorings: int
    num_components: int
    component_sizes: tuple[int, ...]  # ascending
    diameter: Optional[int]  # None when skipped or when there are no colorings
    connected: bool


def _check_budget(H: Hypergraph, q: int, budget: int) -> None:
    if q < 1:
        raise ValidationError(f"q must be positive, got {q}")
    if q ** H.n > budget:
        raise InstanceTooLargeError(
            f"q**n = {q}**{H.n} exceeds the enumeration budget {budget}")


def _finishing_edges(H: Hypergraph) -> list[list[tuple[int, ...]]]:
    # for each vertex v, the other members of every edge whose maximum is v;
    # checking these as v is assigned prunes every improper prefix exactly once
    fin: list[list[tuple[int, ...]]] = [[] for _ in range(H.n + 1)]
    for e in H.edges:
        fin[e[-1]].append(e[:-1])
    return fin


def _proper_codes(H: Hypergraph, q: int) -> Iterator[tuple[int, ...]]:
    """Yield proper colorings as tuples, in lexicographic order."""
    n = H.n
    fin = _finishing_edges(H)
    assign = [0] * (n + 1)
    v = 1
    while v >= 1:
        assign[v] += 1
        if assign[v] > q:
            assign[v] = 0
            v -= 1
            continue
        c = assign[v]
        ok = True
        for others in fin[v]:
            mono = True
            for u in others:
                if assign[u] != c:
                    mono = False
                    break
            if mono:
                ok = False
                break
        if not ok:
            continue
        if v == n:
            yield tuple(assign[1:])
        else:
            v += 1


def enumerate_proper(H: Hypergraph, q: int, budget: int = DEFAULT_BUDGET) -> Iterator[Coloring]:
    """All proper q-colorings in lexicographic order (budgeted backtracking)."""
    _check_budget(H, q, budget)
    for tup in _proper_codes(H, q):
        yield Coloring(tup)


def _encode(tup: tuple[int, ...], pows: list[int]) -> int:
    code = 0
    for i, c in enumerate(tup):
        code += (c - 1) * pows[i]
    return code


def _component_of(start: int, index: dict[int, int], codes: list[int],
                  seen: bytearray, n: int, q: int, pows: list[int]) -> list[int]:
    """BFS over coloring codes; returns the component as a list of node indices."""
    comp = [start]
    seen[start] = 1
    queue = deque([start])
    while queue:
        ci = queue.popleft()
        code = codes[ci]
        rem = code
        for i in range(n):
            digit = rem % q
            rem //= q
            base = code - digit * pows[i]
            for d in range(q):
                if d == digit:
                    continue
                ni = index.get(base + d * pows[i])
                if ni is not None and not seen[ni]:
                    seen[ni] = 1
                    comp.append(ni)
                    queue.append(ni)
    return comp


def gamma_stats(H: Hypergraph, q: int, budget: int = DEFAULT_BUDGET,
                compute_diameter: bool = True,
                diameter_budget: int = DEFAULT_DIAMETER_BUDGET) -> GammaStats:
    """Count proper colorings, split them into components, optionally sweep
    the largest component for its diameter.

    The diameter sweep runs BFS from every node of the largest component and
    refuses (InstanceTooLargeError) when |C|**2 * n * (q-1) would exceed
    diameter_budget. Pass compute_diameter=False to skip it.
    """
    _check_budget(H, q, budget)
    n = H.n
    pows = [q ** i for i in range(n)]
    codes: list[int] = []
    index: dict[int, int] = {}
    for tup in _proper_codes(H, q):
        code = _encode(tup, pows)
        index[code] = len(codes)
        codes.append(code)
    total = len(codes)
    seen = bytearray(total)
    components: list[list[int]] = []
    for start in range(total):
        if not seen[start]:
            components.append(_component_of(start, index, codes, seen, n, q, pows))
    sizes = tuple(sorted(len(c) for c in components))
    diameter: Optional[int] = None
    if compute_diameter and total > 0:
        largest = max(components, key=len)
        work = len(largest) * len(largest) * n * (q - 1)
        if work > diameter_budget:
            raise InstanceTooLargeError(
                f"diameter sweep needs ~{work} probes, over the budget {diameter_budget}")
        diameter = _diameter_of(largest, codes, index, n, q, pows)
    return GammaStats(
        num_colorings=total,
        num_components=len(components),
        component_sizes=sizes,
        diameter=diameter,
        connected=len(components) <= 1,
    )


def _diameter_of(comp: list[int], codes: list[int], index: dict[int, int],
                 n: int, q: int, pows: list[int]) -> int:
    local = {ci: i for i, ci in enumerate(comp)}
    diameter = 0
    for src in comp:
        dist = [-1] * len(comp)
        dist[local[src]] = 0
        queue = deque([src])
        far = 0
        while queue:
            ci = queue.popleft()
            dci = dist[local[ci]]
            code = codes[ci]
            rem = code
            for i in range(n):
                digit = rem % q
                rem //= q
                base = code - digit * pows[i]
                for d in range(q):
                    if d == digit:
                        continue
                    ni = index.get(base + d * pows[i])
                    if ni is not None:
                        li = local.get(ni)
                        if li is not None and dist[li] < 0:
                            dist[li] = dci + 1
                            far = dci + 1
                            queue.append(ni)
        diameter = max(diameter, far)
    return diameter


def gamma_distance(H: Hypergraph, q: int, sigma: Coloring, tau: Coloring,
                   budget: int = DEFAULT_BUDGET) -> Optional[int]:
    """Exact recoloring distance between two proper colorings, or None if
    they sit in different components."""
    _check_budget(H, q, budget)
    for name, col in (("sigma", sigma), ("tau", tau)):
        if len(col) != H.n:
            raise ValidationError(f"{name} has wrong length")
        if any(c > q for c in col.colors):
            raise ValidationError(f"{name} uses colors above q={q}")
        if not is_proper(H, col):
            raise ValidationError(f"{name} is not proper")
    n = H.n
    pows = [q ** i for i in range(n)]
    codes: list[int] = []
    index: dict[int, int] = {}
    for tup in _proper_codes(H, q):
        code = _encode(tup, pows)
        index[code] = len(codes)
        codes.append(code)
    src = _encode(sigma.colors, pows)
    dst = _encode(tau.colors, pows)
    if src == dst:
        return 0
    dist = {src: 0}
    queue = deque([src])
    while queue:
        code = queue.popleft()
        dcode = dist[code]
        rem = code
        for i in range(n):
            digit = rem % q
            rem //= q
            base = code - digit * pows[i]
            for d in range(q):
                if d == digit:
                    continue
                nxt = base + d * pows[i]
                if nxt in index and nxt not in dist:
                    if nxt == dst:
                        return dcode + 1
                    dist[nxt] = dcode + 1
                    queue.append(nxt)
    return None
