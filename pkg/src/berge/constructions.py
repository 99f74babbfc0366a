"""Generators for extremal and near-extremal families.

The Steiner triple systems come from the two classical quasigroup
constructions: Bose for n ≡ 3 (mod 6) and Skolem for n ≡ 1 (mod 6), which
together cover every admissible order.  All generators are deterministic,
emitting a fixed canonical labeling for a given parameter.
"""

from __future__ import annotations

import itertools

from .errors import BadParityError, BadResidueError
from .hypergraph import LinearHypergraph, disjoint_union, validate

FAMILIES = (
    "fano",
    "sts_bose",
    "sts_skolem",
    "disjoint_sts",
    "star_k3",
    "matching_k2",
    "two_edge_clique",
)


def fano() -> LinearHypergraph:
    """The 7-point, 7-triple system covering every pair exactly once."""
    triples = [
        (0, 1, 2), (0, 3, 4), (0, 5, 6),
        (1, 3, 5), (1, 4, 6),
        (2, 3, 6), (2, 4, 5),
    ]
    return validate(7, triples)


def sts_bose(n: int) -> LinearHypergraph:
    """Steiner triple system on n points for n ≡ 3 (mod 6).

    Points are Z_q x {0,1,2} with q = n/3 odd, labeled i*3 + level.  Uses
    the idempotent commutative quasigroup x∘y = (x+y)(q+1)/2 mod q.
    """
    if n < 3 or n % 6 != 3:
        raise BadResidueError(f"Bose construction needs n ≡ 3 (mod 6), n >= 3; got {n}")
    q = n // 3
    half = (q + 1) // 2  # multiplicative inverse of 2 mod q

    def pt(x: int, lvl: int) -> int:
        return x * 3 + lvl

    triples = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(q)]
    for x in range(q):
        for y in range(x + 1, q):
            z = ((x + y) * half) % q
            for lvl in range(3):
                triples.append((pt(x, lvl), pt(y, lvl), pt(z, (lvl + 1) % 3)))
    return validate(n, triples)


def sts_skolem(n: int) -> LinearHypergraph:
    """Steiner triple system on n points for n ≡ 1 (mod 6).

    Points are Z_{2t} x {0,1,2} plus one extra point, with the
    half-idempotent commutative quasigroup on Z_{2t}:
    x∘y = s/2 if s = x+y mod 2t is even, else (s-1)/2 + t.
    """
    if n < 7 or n % 6 != 1:
        raise BadResidueError(f"Skolem construction needs n ≡ 1 (mod 6), n >= 7; got {n}")
    t = n // 6
    q = 2 * t
    inf = n - 1

    def op(x: int, y: int) -> int:
        s = (x + y) % q
        return s // 2 if s % 2 == 0 else (s - 1) // 2 + t

    def pt(x: int, lvl: int) -> int:
        return x * 3 + lvl

    triples = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(t)]
    for x in range(t):
        for lvl in range(3):
            triples.append((inf, pt(t + x, lvl), pt(x, (lvl + 1) % 3)))
    for x in range(q):
        for y in range(x + 1, q):
            z = op(x, y)
            for lvl in range(3):
                triples.append((pt(x, lvl), pt(y, lvl), pt(z, (lvl + 1) % 3)))
    return validate(n, triples)


def steiner_triple_system(n: int) -> LinearHypergraph:
    """STS(n) via whichever of Bose/Skolem matches n's residue class."""
    if n % 6 == 3:
        return sts_bose(n)
    if n % 6 == 1 and n >= 7:
        return sts_skolem(n)
    raise BadResidueError(f"a Steiner triple system requires n ≡ 1 or 3 (mod 6), n >= 3; got {n}")


def extremal_disjoint_sts(k: int, copies: int) -> LinearHypergraph:
    """``copies`` disjoint Steiner triple systems on k points each.

    On n = k*copies vertices this has exactly (k-1)n/6 hyperedges and no
    Berge path of length k, which makes the edge bound for path-free
    3-uniform linear hypergraphs tight.
    """
    if copies < 1:
        raise BadResidueError(f"need at least one copy, got {copies}")
    block = steiner_triple_system(k)
    out = block
    for _ in range(copies - 1):
        out = disjoint_union(out, block)
    return out


def star_k3(n: int) -> LinearHypergraph:
    """(n-1)/2 triples all sharing vertex 0, for odd n >= 3.

    Shadow has 3(n-1)/2 edges and the longest Berge path is 2: the extremal
    family for forbidden path length 3.
    """
    if n < 3 or n % 2 == 0:
        raise BadParityError(f"star construction needs odd n >= 3; got {n}")
    triples = [(0, 2 * i + 1, 2 * i + 2) for i in range((n - 1) // 2)]
    return validate(n, triples)


def matching_k2(n: int) -> LinearHypergraph:
    """n/3 pairwise disjoint triples, for n ≡ 0 (mod 3).

    Shadow has n edges and the longest Berge path is 1: the extremal family
    for forbidden path length 2.
    """
    if n < 3 or n % 3 != 0:
        raise BadResidueError(f"triple matching needs n ≡ 0 (mod 3), n >= 3; got {n}")
    triples = [(3 * i, 3 * i + 1, 3 * i + 2) for i in range(n // 3)]
    return validate(n, triples)


def two_edge_clique(n: int) -> LinearHypergraph:
    """All C(n,2) pairs as 2-edges (trivially linear)."""
    if n < 1:
        raise BadResidueError(f"need n >= 1, got {n}")
    return validate(n, list(itertools.combinations(range(n), 2)))


def build(family: str, n: int | None = None, k: int | None = None,
          copies: int | None = None) -> LinearHypergraph:
    """Dispatch a family name plus parameters to its generator."""
    if family == "fano":
        return fano()
    if family == "sts_bose":
        return sts_bose(_require(n, "n"))
    if family == "sts_skolem":
        return sts_skolem(_require(n, "n"))
    if family == "disjoint_sts":
        return extremal_disjoint_sts(_require(k, "k"), _require(copies, "copies"))
    if family == "star_k3":
        return star_k3(_require(n, "n"))
    if family == "matching_k2":
        return matching_k2(_require(n, "n"))
    if family == "two_edge_clique":
        return two_edge_clique(_require(n, "n"))
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _require(value: int | None, name: str) -> int:
    if value is None:
        raise ValueError(f"this family requires --{name}")
    return value
