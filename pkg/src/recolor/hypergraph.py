"""k-uniform hypergraphs, proper colorings, random generators, and text I/O.

Vertices are the 1-based ids 1..n and colors are 1-based positive integers.
Edges are stored canonically: each edge is a sorted k-tuple of distinct
vertices, the edge list is sorted lexicographically, and duplicates are
rejected. Instances are immutable after construction, so they can be shared
freely between threads and reused as dictionary keys.

A coloring is proper when no edge is monochromatic, i.e. every edge sees at
least two distinct colors.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdgeError,
    EdgeArityError,
    InstanceTooLargeError,
    RepeatedVertexError,
    ValidationError,
    VertexRangeError,
)

__all__ = [
    "Coloring",
    "Hypergraph",
    "build",
    "generate_hnm",
    "generate_hnp",
    "is_proper",
    "hamming",
    "hypergraph_to_text",
    "hypergraph_from_text",
    "read_hypergraph",
    "write_hypergraph",
    "coloring_to_text",
    "coloring_from_text",
    "read_coloring",
    "write_coloring",
]


@dataclass(frozen=True)
class Coloring:
    """A color per vertex; index with a 1-based vertex id."""

    colors: tuple[int, ...]

    def __post_init__(self):
        for c in self.colors:
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise ValidationError(f"colors must be positive integers, got {c!r}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Coloring":
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, vertex: int) -> int:
        return self.colors[vertex - 1]

    def replace(self, vertex: int, color: int) -> "Coloring":
        """New coloring with one vertex recolored."""
        lst = list(self.colors)
        lst[vertex - 1] = color
        return Coloring(tuple(lst))

    def used_colors(self) -> set[int]:
        return set(self.colors)


class Hypergraph:
    """Immutable k-uniform hypergraph on {1..n} with a per-vertex incidence index.

    ``edges`` is the canonical edge tuple; ``incidence[v-1]`` lists the indices
    of the edges containing vertex v.
    """

    __slots__ = ("n", "k", "edges", "incidence")

    def __init__(self, n: int, k: int, edges: Iterable[Sequence[int]]):
        if not isinstance(n, int) or not isinstance(k, int):
            raise ValidationError("n and k must be integers")
        if k < 2:
            raise ValidationError(f"uniformity k must be at least 2, got {k}")
        if n < k:
            raise ValidationError(f"need n >= k, got n={n}, k={k}")
        canon = []
        seen = set()
        for raw in edges:
            e = tuple(raw)
            if len(e) != k:
                raise EdgeArityError(f"edge {e!r} has {len(e)} vertices, expected {k}")
            for v in e:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise VertexRangeError(f"vertex id {v!r} is not an integer")
                if not 1 <= v <= n:
                    raise VertexRangeError(f"vertex {v} outside 1..{n} in edge {e!r}")
            se = tuple(sorted(e))
            if len(set(se)) != k:
                raise RepeatedVertexError(f"edge {e!r} repeats a vertex")
            if se in seen:
                raise DuplicateEdgeError(f"duplicate edge {se!r}")
            seen.add(se)
            canon.append(se)
        canon.sort()
        self.n = n
        self.k = k
        self.edges = tuple(canon)
        inc = [[] for _ in range(n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                inc[v - 1].append(idx)
        self.incidence = tuple(tuple(lst) for lst in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise VertexRangeError(f"vertex {v} outside 1..{self.n}")
        return len(self.incidence[v - 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, k={self.k}, m={self.m})"


def build(n: int, k: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validate and canonicalize an explicit edge list."""
    return Hypergraph(n, k, edges)


def generate_hnm(n: int, m: int, k: int, seed: int) -> Hypergraph:
    """Draw exactly m distinct uniformly random k-sets, deterministic per seed.

    Rejection sampling with a seen-set; fine as long as m is well below
    C(n, k), which is the sane regime for these instances anyway.
    """
    if k < 2 or n < k:
        raise ValidationError(f"need n >= k >= 2, got n={n}, k={k}")
    total = math.comb(n, k)
    if not 0 <= m <= total:
        raise ValidationError(f"m={m} outside 0..C({n},{k})={total}")
    rng = random.Random(seed)
    pool = range(1, n + 1)
    seen = set()
    out = []
    while len(out) < m:
        e = tuple(sorted(rng.sample(pool, k)))
        if e not in seen:
            seen.add(e)
            out.append(e)
    return Hypergraph(n, k, out)


# Above this many potential edges, generate_hnp stops enumerating all k-sets
# and samples the edge count from the exact binomial instead.
DEFAULT_ENUMERATION_LIMIT = 200_000

# Hard refusal: edge counts beyond this cannot be materialized sensibly.
_MAX_MATERIALIZED_EDGES = 5_000_000


def _binomial_draw(rng: random.Random, trials: int, p: float) -> int:
    """Exact inverse-CDF binomial sample; O(mean) time, log-space pmf walk."""
    if p <= 0.0:
        return 0
    if p >= 1.0:
        return trials
    mean = trials * p
    if mean > _MAX_MATERIALIZED_EDGES:
        raise InstanceTooLargeError(
            f"expected edge count {mean:.3g} is too large to materialize")
    u = rng.random()
    log_ratio = math.log(p) - math.log1p(-p)
    logpmf = trials * math.log1p(-p)
    cdf = math.exp(logpmf)
    i = 0
    while u > cdf and i < trials:
        logpmf += math.log(trials - i) - math.log(i + 1) + log_ratio
        i += 1
        cdf += math.exp(logpmf)
    return i


def generate_hnp(n: int, p: float, k: int, seed: int,
                 enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT) -> Hypergraph:
    """Include each of the C(n,k) possible edges independently with probability p.

    Deterministic per seed. While C(n,k) <= enumeration_limit the k-sets are
    enumerated in lexicographic order and kept with probability p each; beyond
    that the edge count is drawn from Binomial(C(n,k), p) and that many
    distinct k-sets are sampled uniformly, which yields the same distribution.
    """
    if k < 2 or n < k:
        raise ValidationError(f"need n >= k >= 2, got n={n}, k={k}")
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"p={p} outside [0, 1]")
    total = math.comb(n, k)
    rng = random.Random(seed)
    if total <= enumeration_limit:
        edges = [e for e in itertools.combinations(range(1, n + 1), k)
                 if rng.random() < p]
        return Hypergraph(n, k, edges)
    m = _binomial_draw(rng, total, p)
    if m > _MAX_MATERIALIZED_EDGES:
        raise InstanceTooLargeError(f"sampled edge count {m} is too large to materialize")
    pool = range(1, n + 1)
    seen = set()
    out = []
    while len(out) < m:
        e = tuple(sorted(rng.sample(pool, k)))
        if e not in seen:
            seen.add(e)
            out.append(e)
    return Hypergraph(n, k, out)


def is_proper(H: Hypergraph, coloring: Coloring) -> bool:
    """True iff no edge is monochromatic (every edge sees >= 2 colors)."""
    cols = coloring.colors
    if len(cols) != H.n:
        raise ValidationError(f"coloring has {len(cols)} entries, hypergraph has {H.n} vertices")
    for e in H.edges:
        first = cols[e[0] - 1]
        mono = True
        for v in e:
            if cols[v - 1] != first:
                mono = False
                break
        if mono:
            return False
    return True


def hamming(c1: Coloring, c2: Coloring) -> int:
    """Number of vertices on which the two colorings differ."""
    if len(c1) != len(c2):
        raise ValidationError(f"length mismatch: {len(c1)} vs {len(c2)}")
    return sum(a != b for a, b in zip(c1.colors, c2.colors))


# --- plain-text serialization ---------------------------------------------
#
# Hypergraph: first line "n k m", then m lines of k space-separated vertex
# ids (each line sorted, lines in lexicographic order). Coloring: one line
# of n space-separated colors. Both round-trip exactly.


def hypergraph_to_text(H: Hypergraph) -> str:
    lines = [f"{H.n} {H.k} {H.m}"]
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def hypergraph_from_text(text: str) -> Hypergraph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValidationError("empty hypergraph text")
    head = lines[0].split()
    if len(head) != 3:
        raise ValidationError(f"header must be 'n k m', got {lines[0]!r}")
    try:
        n, k, m = (int(x) for x in head)
    except ValueError as exc:
        raise ValidationError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ValidationError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            edges.append(tuple(int(x) for x in ln.split()))
        except ValueError as exc:
            raise ValidationError(f"bad edge line {ln!r}") from exc
    return Hypergraph(n, k, edges)


def write_hypergraph(H: Hypergraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(hypergraph_to_text(H))


def read_hypergraph(path) -> Hypergraph:
    with open(path) as fh:
        return hypergraph_from_text(fh.read())


def coloring_to_text(coloring: Coloring) -> str:
    return " ".join(map(str, coloring.colors)) + "\n"


def coloring_from_text(text: str) -> Coloring:
    parts = text.split()
    if not parts:
        raise ValidationError("empty coloring text")
    try:
        return Coloring(tuple(int(x) for x in parts))
    except ValueError as exc:
        raise ValidationError(f"bad coloring text {text!r}") from exc


def write_coloring(coloring: Coloring, path) -> None:
    with open(path, "w") as fh:
        fh.write(coloring_to_text(coloring))


def read_coloring(path) -> Coloring:
    with open(path) as fh:
        return coloring_from_text(fh.read())
