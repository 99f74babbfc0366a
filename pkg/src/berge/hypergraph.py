"""Linear {2,3}-uniform hypergraphs: validation, shadow, restriction, unions.

Vertices are dense 0-based integers.  A hypergraph is *linear* when every
two hyperedges meet in at most one vertex; equivalently, every vertex pair
lies in at most one hyperedge.  All types here are immutable after
construction and safe to share between workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    DuplicateEdgeError,
    EdgeSizeError,
    FormatError,
    LinearityError,
    VertexOutOfRangeError,
)

Edge = tuple[int, ...]  # sorted tuple of 2 or 3 distinct vertex ids


@dataclass(frozen=True)
class LinearHypergraph:
    """A validated linear {2,3}-uniform hypergraph.

    ``edges`` is a lexicographically sorted tuple of sorted vertex tuples.
    Construct through :func:`validate`; building the dataclass directly
    bypasses all invariant checks.
    """

    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def m2(self) -> int:
        return sum(1 for e in self.edges if len(e) == 2)

    @property
    def m3(self) -> int:
        return sum(1 for e in self.edges if len(e) == 3)

    def __repr__(self) -> str:
        return f"LinearHypergraph(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class ShadowGraph:
    """The two-shadow: all vertex pairs contained in some hyperedge.

    ``cover`` maps each pair to the unique hyperedge containing it
    (unique by linearity).
    """

    n: int
    pairs: tuple[tuple[int, int], ...]
    cover: dict[tuple[int, int], Edge] = field(repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.pairs)


def validate(n: int, raw_edges) -> LinearHypergraph:
    """Check sizes, ranges, duplicates and linearity; return the hypergraph.

    ``raw_edges`` is any iterable of vertex collections.  Edges are sorted
    and the edge list is sorted, so equal inputs in any order produce equal
    hypergraphs.  n=0 and edgeless hypergraphs are legal.
    """
    if n < 0:
        raise VertexOutOfRangeError(f"vertex count must be non-negative, got {n}")
    edges: list[Edge] = []
    for raw in raw_edges:
        vs = tuple(sorted(raw))
        if len(set(vs)) != len(vs) or len(vs) not in (2, 3):
            raise EdgeSizeError(f"hyperedge {tuple(raw)!r} must have 2 or 3 distinct vertices")
        for v in vs:
            if not isinstance(v, int) or v < 0 or v >= n:
                raise VertexOutOfRangeError(f"vertex {v!r} out of range [0, {n}) in edge {vs}")
        edges.append(vs)
    edges.sort()
    seen_pair: dict[tuple[int, int], Edge] = {}
    prev: Edge | None = None
    for e in edges:
        if e == prev:
            raise DuplicateEdgeError(f"hyperedge {e} appears twice")
        prev = e
        for p in itertools.combinations(e, 2):
            other = seen_pair.get(p)
            if other is not None:
                raise LinearityError(f"edges {other} and {e} share the pair {p}")
            seen_pair[p] = e
    return LinearHypergraph(n=n, edges=tuple(edges))


def shadow(h: LinearHypergraph) -> ShadowGraph:
    """Two-shadow of ``h`` with the pair -> hyperedge cover map."""
    cover: dict[tuple[int, int], Edge] = {}
    for e in h.edges:
        for p in itertools.combinations(e, 2):
            cover[p] = e
    pairs = tuple(sorted(cover))
    return ShadowGraph(n=h.n, pairs=pairs, cover=cover)


def degree(h: LinearHypergraph, v: int) -> int:
    """Number of hyperedges incident to ``v``."""
    _check_vertex(h, v)
    return sum(1 for e in h.edges if v in e)


def shadow_degree(h: LinearHypergraph, v: int) -> int:
    """Number of shadow pairs incident to ``v``.

    For a linear hypergraph this equals the sum of (|e|-1) over edges
    containing ``v``, since no two edges repeat a pair.
    """
    _check_vertex(h, v)
    return sum(len(e) - 1 for e in h.edges if v in e)


def restrict(h: LinearHypergraph, vertices) -> tuple[LinearHypergraph, dict[int, int]]:
    """Restriction to a vertex subset: keep e∩V whenever it has >= 2 vertices.

    The surviving edges are relabeled onto 0..|V|-1 (sorted order of V) and
    the old->new mapping is returned alongside.  The result is again a valid
    linear {2,3}-uniform hypergraph.
    """
    vset = set(vertices)
    for v in vset:
        _check_vertex(h, v)
    order = sorted(vset)
    mapping = {old: new for new, old in enumerate(order)}
    kept = []
    for e in h.edges:
        cut = tuple(mapping[v] for v in e if v in vset)
        if len(cut) >= 2:
            kept.append(cut)
    return validate(len(order), kept), mapping


def components(h: LinearHypergraph) -> list[list[int]]:
    """Connected components of the shadow (equivalently of ``h``).

    Isolated vertices form singleton components.  Components are sorted by
    their minimum vertex and internally sorted.
    """
    parent = list(range(h.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in h.edges:
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    groups: dict[int, list[int]] = {}
    for v in range(h.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def disjoint_union(h1: LinearHypergraph, h2: LinearHypergraph) -> LinearHypergraph:
    """Disjoint union; vertices of ``h2`` are shifted up by ``h1.n``."""
    shifted = [tuple(v + h1.n for v in e) for e in h2.edges]
    return validate(h1.n + h2.n, list(h1.edges) + shifted)


def _check_vertex(h: LinearHypergraph, v: int) -> None:
    if not 0 <= v < h.n:
        raise VertexOutOfRangeError(f"vertex {v} out of range [0, {h.n})")


# ---------------------------------------------------------------------------
# .hg text format: "n m" header, then m lines of 2 or 3 vertex indices.
# Lines starting with '#' are comments.
# ---------------------------------------------------------------------------

def parse_hg(text: str) -> LinearHypergraph:
    """Parse the .hg text format, running full validation."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty .hg input")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"non-integer header {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges but {len(body)} lines follow")
    edges = []
    for ln in body:
        try:
            vs = [int(tok) for tok in ln.split()]
        except ValueError:
            raise FormatError(f"non-integer vertex in line {ln!r}") from None
        edges.append(vs)
    return validate(n, edges)


def format_hg(h: LinearHypergraph) -> str:
    """Serialize to the .hg text format (round-trips through parse_hg)."""
    out = [f"{h.n} {h.m}"]
    for e in h.edges:
        out.append(" ".join(str(v) for v in e))
    return "\n".join(out) + "\n"


def load_hg(path) -> LinearHypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hg(fh.read())


def save_hg(h: LinearHypergraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_hg(h))
