"""Deciding local periodicity and producing checkable certificates.

A vertex v is locally periodic for a pair m != n when every infinite
path x from v satisfies sigma^m(x) = sigma^n(x).  Writing j = m v n,
every such x splits as lam.y with lam in vLambda^j, and the condition
becomes: for each lam, the two tails L = lam(m, j) and R = lam(n, j)
give L.y = R.y for every infinite y from s(lam).

That tail condition is decided by pair propagation.  A state is the
ordered pair (L, R); it refutes immediately when r(L) != r(R).  For a
block degree s that covers every coordinate (see below), extend by each
kappa in s(L)Lambda^s and compare the degree-s prefixes of L.kappa and
R.kappa.  A mismatch refutes; otherwise the residual tails form the
successor state, with the same degrees as (L, R).  States are pairs of
bounded-degree paths, so the space is finite: breadth-first search with
memoization terminates, any reachable refutation yields a finite path
witnessing aperiodicity (assembled by back-tracing and re-validated on
construction), and if no refutation is reachable every revisited state
is consistent, which is exactly periodicity.

The block degree is s = (a v b) v (1,...,1) where a = j - m, b = j - n.
Full support is what makes the block chain t*s cofinal in N^k; comparing
along a non-cofinal chain can miss differences hiding in an untouched
coordinate (one blue loop plus two flip-squared red loops separates
sigma^(1,0) from sigma^(2,0) only through red edges).

Bounded scans report "aperiodic up to B", never more: nothing here
assumes that periods found at one scale generate anything at another.
"""

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from itertools import product as _iproduct

from .degrees import Degree, add, join, leq, ones, positive_part, subtract
from .errors import ContractViolationError, InconclusiveError
from .factorization import compose, factor, segment
from .infinite import ep_compose, ep_equal, ep_samples


class PairState:
    """One node of the propagation graph: the two pending tails."""

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    @property
    def source(self):
        return self.left.source_vertex

    def __eq__(self, other):
        return (
            isinstance(other, PairState)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return hash((self.left, self.right))

    def __repr__(self):
        return f"PairState({self.left!r}, {self.right!r})"


class AperiodicityWitness:
    """A finite path separating sigma^m from sigma^n at its range vertex.

    Construction recomputes both segments and refuses a path that does
    not actually separate, so a witness object is always trustworthy.
    """

    def __init__(self, vertex, m, n, lam):
        g = lam.graph
        j = join(m, n)
        if lam.range_vertex != vertex:
            raise ContractViolationError("witness path does not start at the claimed vertex")
        if not leq(j, lam.degree):
            raise ContractViolationError("witness path shorter than m v n")
        q = subtract(lam.degree, j)
        self.vertex = vertex
        self.m = m
        self.n = n
        self.lam = lam
        self.segment_m = segment(lam, m, add(m, q))
        self.segment_n = segment(lam, n, add(n, q))
        if self.segment_m == self.segment_n:
            raise ContractViolationError("witness path does not separate the two shifts")

    def to_json(self):
        return {
            "vertex": self.vertex,
            "m": self.m.to_json(),
            "n": self.n.to_json(),
            "lambda": self.lam.to_json(),
            "segment_m": self.segment_m.to_json(),
            "segment_n": self.segment_n.to_json(),
        }


class PeriodicityTuple:
    """(mu, alpha, nu) certifying local periodicity at a vertex.

    mu in vLambda^m, alpha in s(mu)Lambda^(m v n - m), nu = (mu.alpha)(0, n);
    then mu.alpha.y = nu.alpha.y for every infinite y while the degrees of
    mu.alpha and nu.alpha differ, which is what downstream analysis needs.
    Construction re-derives nu and checks the degree inequality.
    """

    def __init__(self, vertex, m, n, mu, alpha):
        if mu.range_vertex != vertex:
            raise ContractViolationError("mu does not start at the claimed vertex")
        if mu.degree != m:
            raise ContractViolationError("d(mu) != m")
        if alpha.degree != subtract(join(m, n), m):
            raise ContractViolationError("d(alpha) != (m v n) - m")
        mu_alpha = compose(mu, alpha)
        nu, _ = factor(mu_alpha, n)
        nu_alpha = compose(nu, alpha)  # raises if s(nu) != r(alpha)
        if mu_alpha.degree == nu_alpha.degree:
            raise ContractViolationError("tuple degrees collapse; m and n must differ")
        self.vertex = vertex
        self.m = m
        self.n = n
        self.mu = mu
        self.alpha = alpha
        self.nu = nu
        self.mu_alpha = mu_alpha
        self.nu_alpha = nu_alpha

    def to_json(self):
        return {
            "vertex": self.vertex,
            "m": self.m.to_json(),
            "n": self.n.to_json(),
            "mu": self.mu.to_json(),
            "alpha": self.alpha.to_json(),
            "nu": self.nu.to_json(),
        }


class Periodic:
    """Verdict: sigma^m = sigma^n on every infinite path from the vertex."""

    def __init__(self, vertex, m, n):
        self.vertex = vertex
        self.m = m
        self.n = n

    periodic = True

    def __repr__(self):
        return f"Periodic({self.vertex!r}, {self.m!r}, {self.n!r})"


class Aperiodic:
    """Verdict: some infinite path separates the shifts; witness attached."""

    def __init__(self, witness):
        self.witness = witness

    periodic = False

    def __repr__(self):
        return f"Aperiodic({self.witness.lam!r})"


def local_periodicity_at(g, v, m, n):
    """Exact decision for one (vertex, m, n) triple; m != n required."""
    g.require_vertex(v)
    g.require_rank(m)
    g.require_rank(n)
    if m == n:
        raise ContractViolationError("local periodicity needs two distinct degrees")
    j = join(m, n)
    a = subtract(j, m)
    b = subtract(j, n)
    block = join(join(a, b), ones(g.k))
    parents = {}
    queue = deque()
    for lam in g.paths_from(v, j):
        left = segment(lam, m, j)
        right = segment(lam, n, j)
        if left.range_vertex != right.range_vertex:
            return Aperiodic(AperiodicityWitness(v, m, n, lam))
        state = PairState(left, right)
        if state not in parents:
            parents[state] = (None, lam)
            queue.append(state)
    while queue:
        state = queue.popleft()
        for kappa in g.paths_from(state.source, block):
            lk = compose(state.left, kappa)
            rk = compose(state.right, kappa)
            lk_head, lk_tail = factor(lk, block)
            rk_head, rk_tail = factor(rk, block)
            if lk_head != rk_head:
                lam = _assemble(parents, state)
                lam = compose(lam, kappa)
                return Aperiodic(AperiodicityWitness(v, m, n, lam))
            succ = PairState(lk_tail, rk_tail)
            if succ not in parents:
                parents[succ] = (state, kappa)
                queue.append(succ)
    return Periodic(v, m, n)


def _assemble(parents, state):
    """Rebuild lam.kappa_1...kappa_t for the discovery path of a state."""
    pieces = []
    cur = state
    while True:
        prev, step = parents[cur]
        pieces.append(step)
        if prev is None:
            break
        cur = prev
    pieces.reverse()
    lam = pieces[0]
    for kappa in pieces[1:]:
        lam = compose(lam, kappa)
    return lam


class AperiodicReport:
    """Scan outcome: no periodic pair up to the bound; witnesses for each."""

    def __init__(self, bound, entries):
        self.bound = bound
        self.entries = list(entries)  # (vertex, p, witness)

    periodic = False

    def to_json(self):
        return {
            "verdict": "aperiodic",
            "bound": self.bound,
            "witnesses": [
                {"vertex": v, "p": list(p), "witness": w.to_json()}
                for v, p, w in self.entries
            ],
        }


class PeriodicReport:
    """Scan outcome: first periodic hit in (vertex, p) lexicographic order."""

    def __init__(self, bound, vertex, p, m, n, tup):
        self.bound = bound
        self.vertex = vertex
        self.p = p
        self.m = m
        self.n = n
        self.tuple = tup

    periodic = True

    def to_json(self):
        return {
            "verdict": "periodic",
            "bound": self.bound,
            "vertex": self.vertex,
            "p": list(self.p),
            "m": self.m.to_json(),
            "n": self.n.to_json(),
            "tuple": self.tuple.to_json(),
        }


def default_bound(g):
    """|vertices| + the largest single-color edge count."""
    per_color = [0] * g.k
    for e in g.skeleton.edges.values():
        per_color[e.color - 1] += 1
    return len(g.vertices) + max(per_color)


def signed_vectors(k, bound):
    """Nonzero vectors with entries in [-bound, bound], lexicographic."""
    for p in _iproduct(range(-bound, bound + 1), repeat=k):
        if any(c != 0 for c in p):
            yield p


def scan_aperiodicity(g, bound=None, jobs=None):
    """Test every vertex against every difference vector up to the bound.

    Each signed p is reduced to its minimal pair (m, n) = positive_part(p);
    testing minimal pairs at every vertex is equivalent to testing all
    pairs (docs/minimal-pairs.md).  Returns the first periodic hit in
    (vertex, p) lexicographic order, or an AperiodicReport carrying one
    witness per (vertex, p).  `jobs` only parallelizes; output is
    identical by construction.
    """
    if bound is None:
        bound = default_bound(g)
    if bound < 1:
        raise ContractViolationError("scan bound must be >= 1")
    tasks = [
        (v, p)
        for v in g.vertices
        for p in signed_vectors(g.k, bound)
    ]

    def run(task):
        v, p = task
        m, n = positive_part(p)
        return local_periodicity_at(g, v, m, n)

    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, tasks))
    else:
        results = None

    entries = []
    for i, (v, p) in enumerate(tasks):
        res = results[i] if results is not None else run((v, p))
        if res.periodic:
            m, n = positive_part(p)
            tup = periodicity_tuple(g, v, m, n)
            return PeriodicReport(bound, v, p, m, n, tup)
        entries.append((v, p, res.witness))
    return AperiodicReport(bound, entries)


def periodicity_tuple(g, v, m, n):
    """Canonically least certificate tuple for a periodic triple."""
    res = local_periodicity_at(g, v, m, n)
    if not res.periodic:
        raise ContractViolationError(
            f"triple ({v!r}, {m!r}, {n!r}) is aperiodic; no tuple exists"
        )
    j = join(m, n)
    mu = g.paths_from(v, m)[0]
    alpha = g.paths_from(mu.source_vertex, subtract(j, m))[0]
    return PeriodicityTuple(v, m, n, mu, alpha)


def aperiodic_prefix(g, v, pairs, depth_limit=None):
    """Chain one separating witness per pair into a single path from v.

    Raises if any pair turns out periodic at the reached vertex, and
    refuses (Inconclusive) if the chained degree outgrows depth_limit.
    """
    eta = g.vertex_path(v)
    for idx, (m, n) in enumerate(pairs):
        res = local_periodicity_at(g, eta.source_vertex, m, n)
        if res.periodic:
            raise ContractViolationError(
                f"pair #{idx} {(m, n)!r} is periodic at {eta.source_vertex!r}"
            )
        eta = compose(eta, res.witness.lam)
        if depth_limit is not None and eta.degree.size > depth_limit:
            raise InconclusiveError(
                f"chained prefix degree {eta.degree!r} exceeds depth limit {depth_limit}"
            )
    return eta


def condition_b_oracle(g, v, depth):
    """Brute-force check: does some sampled x separate all bounded pairs?

    Samples eventually periodic x from v (prefix/loop entries <= depth)
    and returns True when one of them satisfies mu.x != nu.x for every
    distinct mu, nu with source v and |d| <= depth.  Test-side helper;
    exponential and proud of it.
    """
    g.require_vertex(v)
    into = []
    for n in _iproduct(range(depth + 1), repeat=g.k):
        if sum(n) <= depth:
            into.extend(g.paths_into(v, Degree(n)))
    cache = {}
    for x in ep_samples(g, v, depth, depth):
        ok = True
        for i, mu in enumerate(into):
            for nu in into[i + 1 :]:
                if ep_equal(ep_compose(mu, x), ep_compose(nu, x), cache):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False
