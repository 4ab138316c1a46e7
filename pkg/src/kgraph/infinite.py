"""Eventually periodic infinite paths.

An infinite path is represented by a finite prefix rho and a loop gamma
with r(gamma) = s(gamma) = s(rho); the path is rho.gamma.gamma...  The
loop degree must be >= 1 in every coordinate so that unrolling it covers
any requested degree.  Two representations can denote the same path;
`ep_equal` decides that exactly.

Equality works block by block.  After cutting both paths at the join of
the prefix degrees, the tails are purely periodic, and a purely periodic
tail is determined by the cycle formed by its next loop-degree worth of
edges.  Comparing the two tails over blocks of degree g1 + g2 and
memoizing the visited cycle pairs terminates (finitely many cycles of a
fixed degree) and is exact: a difference at any degree shows up in some
block, and a revisited pair means the comparison has entered a cycle that
can never produce a difference.
"""

from itertools import product as _iproduct

from .degrees import Degree, add, join, leq, subtract, zero
from .errors import CompositionError, DegreeError
from .factorization import compose, factor, segment


class EventuallyPeriodicPath:
    """Value type for rho.gamma^infinity; structural equality only."""

    __slots__ = ("prefix", "loop")

    def __init__(self, prefix, loop):
        if prefix.graph is not loop.graph:
            raise CompositionError("prefix and loop belong to different graphs")
        if loop.range_vertex != loop.source_vertex:
            raise CompositionError("loop must start and end at the same vertex")
        if loop.range_vertex != prefix.source_vertex:
            raise CompositionError("loop must sit at the prefix's source")
        if any(c < 1 for c in loop.degree):
            raise DegreeError(f"loop degree {loop.degree!r} must be >= 1 in every coordinate")
        self.prefix = prefix
        self.loop = loop

    @property
    def graph(self):
        return self.prefix.graph

    @property
    def range_vertex(self):
        return self.prefix.range_vertex

    def __eq__(self, other):
        return (
            isinstance(other, EventuallyPeriodicPath)
            and self.prefix == other.prefix
            and self.loop == other.loop
        )

    def __hash__(self):
        return hash((self.prefix, self.loop))

    def __repr__(self):
        return f"EP<{self.prefix!r}.({self.loop!r})^inf>"

    def to_json(self):
        return {"prefix": self.prefix.to_json(), "loop": self.loop.to_json()}

    def minimized(self):
        """Peel whole loop copies off the prefix tail; same infinite path."""
        rho, gam = self.prefix, self.loop
        g = gam.degree
        while leq(g, rho.degree):
            cut = subtract(rho.degree, g)
            if segment(rho, cut, rho.degree) != gam:
                break
            rho, _ = factor(rho, cut)
        return EventuallyPeriodicPath(rho, gam)


def _unrolled(x, n):
    """A finite prefix of x of degree >= n."""
    full = x.prefix
    while not leq(n, full.degree):
        full = compose(full, x.loop)
    return full


def ep_segment(x, m, n):
    """x(m, n) for an eventually periodic x; any m <= n."""
    if not leq(m, n):
        raise DegreeError(f"segment needs m <= n, got {m!r}, {n!r}")
    return segment(_unrolled(x, n), m, n)


def ep_shift(x, p):
    """The shifted path sigma^p(x), re-minimizing the prefix."""
    full = _unrolled(x, p)
    rho = segment(full, p, full.degree)
    return EventuallyPeriodicPath(rho, x.loop).minimized()


def ep_equal(x, y, cycle_cache=None):
    """Exact equality of the denoted infinite paths.

    `cycle_cache` may be a dict shared across calls on one graph; it
    memoizes verdicts for pure-cycle pairs.
    """
    if x.graph is not y.graph:
        return False
    if x.range_vertex != y.range_vertex:
        return False
    cut = join(x.prefix.degree, y.prefix.degree)
    if ep_segment(x, zero(cut.rank), cut) != ep_segment(y, zero(cut.rank), cut):
        return False
    cx = ep_segment(x, cut, add(cut, x.loop.degree))
    cy = ep_segment(y, cut, add(cut, y.loop.degree))
    return _cycles_equal(cx, cy, cycle_cache)


def _cycles_equal(cx, cy, cache=None):
    """Whether cx^inf = cy^inf; both must be cycles at the same vertex."""
    start = (cx, cy)
    if cache is not None and start in cache:
        return cache[start]
    seen = set()
    state = start
    verdict = True
    while state not in seen:
        seen.add(state)
        a, b = state
        xa = EventuallyPeriodicPath(a.graph.vertex_path(a.range_vertex), a)
        xb = EventuallyPeriodicPath(b.graph.vertex_path(b.range_vertex), b)
        block = add(a.degree, b.degree)
        if ep_segment(xa, zero(block.rank), block) != ep_segment(xb, zero(block.rank), block):
            verdict = False
            break
        state = (
            ep_segment(xa, block, add(block, a.degree)),
            ep_segment(xb, block, add(block, b.degree)),
        )
    if cache is not None:
        cache[start] = verdict
    return verdict


def ep_compose(mu, x):
    """mu.x as an eventually periodic path; needs s(mu) = r(x)."""
    return EventuallyPeriodicPath(compose(mu, x.prefix), x.loop)


def ep_samples(g, v, prefix_bound, loop_bound):
    """Deterministic generator of eventually periodic paths from v.

    Prefix degrees range over entries <= prefix_bound, loop degrees over
    entries in 1..loop_bound; loops are filtered to actual cycles.
    """
    g.require_vertex(v)
    k = g.k
    for pdeg in _iproduct(range(prefix_bound + 1), repeat=k):
        for rho in g.paths_from(v, Degree(pdeg)):
            w = rho.source_vertex
            for ldeg in _iproduct(range(1, loop_bound + 1), repeat=k):
                for gam in g.paths_from(w, Degree(ldeg)):
                    if gam.source_vertex == w:
                        yield EventuallyPeriodicPath(rho, gam)


def ep_samples_unique(g, v, prefix_bound, loop_bound):
    """Like ep_samples but deduplicated by minimized representation."""
    seen = set()
    for x in ep_samples(g, v, prefix_bound, loop_bound):
        m = x.minimized()
        key = (m.prefix, m.loop)
        if key not in seen:
            seen.add(key)
            yield m
