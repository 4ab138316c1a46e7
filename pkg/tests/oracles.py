"""Brute-force cross-checks, written independently of the library's search.

The periodicity oracle enumerates finite paths outright (no pair
propagation, no memoization) and looks for a separating pair of segments.
Finding a witness proves aperiodicity; exhausting the depth box proves
nothing, so the test harness treats oracle-no-witness plus a Periodic
verdict as agreement.  Paths are generated without touching the library's
caches so a bug there cannot mask itself.
"""

from itertools import product

from kgraph import Degree, Path, add, join, segment, subtract


def _chains(g, v, color, length):
    """Edge-id tuples of one color, range end first, starting at v."""
    if length == 0:
        yield (), v
        return
    for eid in g.skeleton.out_edges(v, color):
        src = g.skeleton.edges[eid].source
        for rest, end in _chains(g, src, color, length - 1):
            yield (eid,) + rest, end


def iter_paths(g, v, n):
    """All paths in vLambda^n, canonical form, built without caching."""

    def blocks(vertex, color):
        if color > g.k:
            yield (), vertex
            return
        for chain, end in _chains(g, vertex, color, n[color - 1]):
            for rest, final in blocks(end, color + 1):
                yield chain + rest, final

    for edge_ids, source in blocks(v, 1):
        yield Path(g, v, source, n, edge_ids)


def brute_force_witness(g, v, m, n, depth):
    """First path whose m- and n-segments differ, or None at this depth.

    Scans lambda in vLambda^(j+q) for every q with entries <= depth,
    smallest |q| first, where j = m v n.
    """
    j = join(m, n)
    boxes = sorted(
        (Degree(q) for q in product(range(depth + 1), repeat=g.k)),
        key=lambda q: (sum(q), tuple(q)),
    )
    for q in boxes:
        total = add(j, q)
        for lam in iter_paths(g, v, total):
            ext = subtract(lam.degree, j)
            if segment(lam, m, add(m, ext)) != segment(lam, n, add(n, ext)):
                return lam
    return None


def pairs_up_to(k, entry_bound):
    """Unordered {m, n} pairs with entries <= entry_bound, m != n."""
    degrees = [Degree(t) for t in product(range(entry_bound + 1), repeat=k)]
    for i, m in enumerate(degrees):
        for n in degrees[i + 1 :]:
            yield m, n


def brute_force_sat_her_sets(g):
    """All saturated hereditary vertex sets by testing every subset."""
    from kgraph import is_hereditary, is_saturated

    verts = list(g.vertices)
    out = []
    for mask in range(1 << len(verts)):
        h = frozenset(v for i, v in enumerate(verts) if mask >> i & 1)
        if is_hereditary(g, h) and is_saturated(g, h):
            out.append(h)
    return sorted(out, key=lambda h: (len(h), sorted(h)))
