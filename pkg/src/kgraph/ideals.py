"""Saturated hereditary vertex sets, cofinality, and quotient graphs.

A vertex set H is hereditary when reachability out of H stays in H:
whenever a path has range in H its source is in H too.  Paths factor
into edges, so checking single edges suffices.  H is saturated when a
vertex all of whose degree-n continuations land in H is itself in H for
some n; testing the single-color degrees e_i and iterating captures the
general rule, since vLambda^n factors through vLambda^(e_i) step by
step.  The two closure rules interleave to a least fixpoint.

Nontrivial saturated hereditary sets are exactly what blocks cofinality:
any such H traps the vertices it contains, and conversely the closure of
any single vertex that fails to reach everything is such a set.  The
quotient by H keeps the vertices outside H and the edges whose source
survives; the result is rebuilt through full validation rather than
assumed correct.
"""

import os
from itertools import product as _iproduct

import numpy as np

from .degrees import Degree
from .errors import ContractViolationError, LimitExceededError
from .factorization import KGraph, SquareTable, segment
from .infinite import ep_samples, ep_segment
from .skeleton import Skeleton

# A VertexSet is a frozenset of vertex ids; serialized as a sorted list.
VertexSet = frozenset

DEFAULT_ENUM_LIMIT = 20
ENUM_LIMIT_ENV = "KGRAPH_MAX_VERTICES"


def vertex_set_to_json(h):
    return sorted(h)


def _as_set(g, vertices):
    h = frozenset(vertices)
    for v in h:
        g.require_vertex(v)
    return h


def is_hereditary(g, h):
    """Every edge with range in h has source in h."""
    h = _as_set(g, h)
    return all(
        e.source in h for e in g.skeleton.edges.values() if e.range in h
    )


def is_saturated(g, h):
    """No vertex outside h has all its color-i out-edges landing in h."""
    h = _as_set(g, h)
    for v in g.vertices:
        if v in h:
            continue
        for color in range(1, g.k + 1):
            if all(g.edge(eid).source in h for eid in g.skeleton.out_edges(v, color)):
                return False
    return True


def sat_her_closure(g, seed):
    """Least saturated hereditary superset of seed."""
    h = set(_as_set(g, seed))
    changed = True
    while changed:
        changed = False
        for e in g.skeleton.edges.values():
            if e.range in h and e.source not in h:
                h.add(e.source)
                changed = True
        for v in g.vertices:
            if v in h:
                continue
            for color in range(1, g.k + 1):
                if all(g.edge(eid).source in h for eid in g.skeleton.out_edges(v, color)):
                    h.add(v)
                    changed = True
                    break
    return frozenset(h)


def _enum_limit():
    raw = os.environ.get(ENUM_LIMIT_ENV)
    if raw is None:
        return DEFAULT_ENUM_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise LimitExceededError(f"{ENUM_LIMIT_ENV}={raw!r} is not an integer") from None


def enumerate_sat_her(g, limit=None):
    """All saturated hereditary sets, sorted by size then contents.

    Every such set is a join of singleton closures, so the lattice is
    grown from those under union-then-closure.  Refuses graphs larger
    than the limit (default 20 vertices, env KGRAPH_MAX_VERTICES).
    """
    if limit is None:
        limit = _enum_limit()
    if len(g.vertices) > limit:
        raise LimitExceededError(
            f"{len(g.vertices)} vertices exceeds enumeration limit {limit}"
        )
    generators = [sat_her_closure(g, {v}) for v in g.vertices]
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        base = frontier.pop()
        for gen in generators:
            joined = base | gen
            if joined not in found:
                joined = sat_her_closure(g, joined)
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    return sorted(found, key=lambda h: (len(h), sorted(h)))


class Cofinal:
    cofinal = True

    def to_json(self):
        return {"verdict": "cofinal"}

    def __repr__(self):
        return "Cofinal()"


class NotCofinal:
    cofinal = False

    def __init__(self, certificate):
        self.certificate = certificate

    def to_json(self):
        return {"verdict": "not_cofinal", "certificate": vertex_set_to_json(self.certificate)}

    def __repr__(self):
        return f"NotCofinal({sorted(self.certificate)!r})"


def is_cofinal(g):
    """Cofinal iff every singleton closure is everything.

    Otherwise the least nontrivial closure (fewest vertices, then
    lexicographically) is returned as the obstruction certificate.
    """
    everything = frozenset(g.vertices)
    obstructions = []
    for v in g.vertices:
        closure = sat_her_closure(g, {v})
        if closure != everything:
            obstructions.append(closure)
    if not obstructions:
        return Cofinal()
    least = min(obstructions, key=lambda h: (len(h), sorted(h)))
    return NotCofinal(least)


def _reachable_from(g, v):
    """Vertices reachable from v walking edges range -> source."""
    seen = {v}
    stack = [v]
    while stack:
        cur = stack.pop()
        for color in range(1, g.k + 1):
            for eid in g.skeleton.out_edges(cur, color):
                nxt = g.edge(eid).source
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return seen


def cofinality_oracle(g, depth):
    """Sampled cross-check: every vertex meets every sampled path.

    For each eventually periodic x (prefix/loop entries <= depth, from
    every start vertex) and each vertex v, look for n <= depth*(1,..,1)
    with x(n) reachable from v.  Test-side helper.

    The verdict for x depends only on the box segment x(0, depth*1):
    every position searched lies inside it.  Samples sharing that
    segment are checked once.  A vertex whose forward reach is the
    whole graph meets any sample (hits contain the start vertex), so
    when every vertex has full reach the loop cannot fail at all.
    """
    reach = {v: _reachable_from(g, v) for v in g.vertices}
    need = [v for v in g.vertices if len(reach[v]) < len(g.vertices)]
    if not need:
        return True
    zero = Degree((0,) * g.k)
    top = Degree((depth,) * g.k)
    boxes = [Degree(t) for t in _iproduct(range(depth + 1), repeat=g.k)]
    for start in g.vertices:
        seen = set()
        for x in ep_samples(g, start, depth, depth):
            lam = ep_segment(x, zero, top)
            if lam in seen:
                continue
            seen.add(lam)
            hits = {segment(lam, n, n).range_vertex for n in boxes}
            for v in need:
                if not (hits & reach[v]):
                    return False
    return True


def quotient(g, h):
    """The graph left after deleting H and everything it absorbs.

    Keeps vertices outside H and edges whose source survives; hereditary
    H then cannot leave a dangling range.  The result passes the whole
    validation stack or the call fails loudly.
    """
    h = _as_set(g, h)
    if not is_hereditary(g, h):
        raise ContractViolationError(f"{sorted(h)!r} is not hereditary")
    if not is_saturated(g, h):
        raise ContractViolationError(f"{sorted(h)!r} is not saturated")
    keep_vertices = [v for v in g.vertices if v not in h]
    if not keep_vertices:
        raise ContractViolationError("cannot quotient by the full vertex set")
    keep_edges = [e for e in g.skeleton.edges.values() if e.source not in h]
    keep_ids = {e.id for e in keep_edges}
    entries = [
        (pair, image)
        for pair, image in g.squares.entries
        if all(eid in keep_ids for eid in pair + image)
    ]
    skel = Skeleton(g.k, keep_vertices, keep_edges)
    return KGraph.build(skel, SquareTable(entries))


def core_dimensions(g, n):
    """|Lambda^n v| for every v, via products of the vertex matrices."""
    g.require_rank(n)
    mats = g.skeleton.vertex_matrices()
    size = len(g.vertices)
    acc = np.identity(size, dtype=object)
    for color, power in enumerate(n.coords):
        for _ in range(power):
            acc = acc @ mats[color]
    return {v: int(sum(acc[:, i])) for i, v in enumerate(g.vertices)}
