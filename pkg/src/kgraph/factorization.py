"""Commuting squares, canonical path form, and unique factorization.

A rank-k graph is presented by a validated skeleton plus one commuting
square per composable two-color pair of edges: for colors i < j, the
square table is a bijection sending each pair (f, g) with f of color i,
g of color j and s(f) = r(g) to a pair (g', f') with the colors reversed,
r(g') = r(f) and s(f') = s(g).  The two-edge paths f.g and g'.f' are
declared equal, and every path then has a unique normal form in which
edge colors appear in ascending blocks (all color-1 edges first, then
color-2, and so on).  Normalization is bubble sort on colors where each
adjacent transposition applies the matching square; the square bijections
make every swap well defined and, for k >= 3, the cube condition checked
below makes the result independent of swap order.  For k >= 4 coherence
over all color triples is sufficient (higher cubes follow from the
three-color ones); the test suite cross-checks this claim by normalizing
under two different swap schedules.

Equality of presentations with the abstract unique-factorization
definition of a rank-k graph is a standard fact assumed here, not
re-proved.

Degree-0 paths are vertices.  A path's edge sequence is written with the
range end first: edges[0] has range r(lambda) and edges[-1] has source
s(lambda), and compose(mu, nu) requires s(mu) = r(nu).
"""

from itertools import product as _iproduct

from .degrees import Degree, add, leq, subtract, unit, zero
from .errors import CompositionError, ContractViolationError, DegreeError, ValidationError
from .skeleton import ValidationReport


class SquareTable:
    """The square bijections, keyed by ordered edge-id pairs.

    `forward` maps an ascending-color pair (f, g) to its image (g', f');
    `backward` is the inverse.  Entries are kept as given so an invalid
    table can still be serialized and reported on.
    """

    def __init__(self, entries):
        self.entries = tuple((tuple(pair), tuple(image)) for pair, image in entries)
        self.forward = {}
        self.backward = {}
        self.duplicate_keys = []
        self.duplicate_images = []
        for pair, image in self.entries:
            if pair in self.forward:
                self.duplicate_keys.append(pair)
            else:
                self.forward[pair] = image
            if image in self.backward:
                self.duplicate_images.append(image)
            else:
                self.backward[image] = pair

    @classmethod
    def from_json(cls, data):
        return cls((tuple(row["pair"]), tuple(row["image"])) for row in data["squares"])

    def to_json(self):
        rows = sorted(self.entries)
        return {"squares": [{"pair": list(p), "image": list(i)} for p, i in rows]}


def _composable_pairs(skeleton, ci, cj):
    """All (e1, e2) with colors (ci, cj) and s(e1) = r(e2), sorted."""
    out = []
    for eid in sorted(skeleton.edges):
        e = skeleton.edges[eid]
        if e.color != ci:
            continue
        for gid in skeleton.out_edges(e.source, cj):
            out.append((eid, gid))
    return out


def validate_squares(skeleton, table):
    """Exhaustively check the square table against the skeleton."""
    skeleton.require_validated()
    problems = []
    for pair in table.duplicate_keys:
        problems.append(f"square {pair!r}: pair listed more than once")
    for image in table.duplicate_images:
        problems.append(f"square image {image!r}: hit by more than one pair")
    for (fid, gid), (g2id, f2id) in table.forward.items():
        missing = [eid for eid in (fid, gid, g2id, f2id) if eid not in skeleton.edges]
        if missing:
            problems.append(f"square {(fid, gid)!r}: unknown edge id(s) {missing!r}")
            continue
        f, g = skeleton.edge(fid), skeleton.edge(gid)
        g2, f2 = skeleton.edge(g2id), skeleton.edge(f2id)
        if not f.color < g.color:
            problems.append(f"square {(fid, gid)!r}: pair colors ({f.color},{g.color}) not ascending")
            continue
        if f.source != g.range:
            problems.append(f"square {(fid, gid)!r}: pair not composable (s({fid})={f.source}, r({gid})={g.range})")
        if (g2.color, f2.color) != (g.color, f.color):
            problems.append(f"square {(fid, gid)!r}: image colors ({g2.color},{f2.color}) do not mirror ({g.color},{f.color})")
            continue
        if g2.source != f2.range:
            problems.append(f"square {(fid, gid)!r}: image not composable")
        if g2.range != f.range:
            problems.append(f"square {(fid, gid)!r}: image range {g2.range!r} != pair range {f.range!r}")
        if f2.source != g.source:
            problems.append(f"square {(fid, gid)!r}: image source {f2.source!r} != pair source {g.source!r}")
    # Totality and bijectivity, color pair by color pair.
    for ci in range(1, skeleton.k + 1):
        for cj in range(ci + 1, skeleton.k + 1):
            pairs = _composable_pairs(skeleton, ci, cj)
            images = _composable_pairs(skeleton, cj, ci)
            for p in pairs:
                if p not in table.forward:
                    problems.append(f"colors ({ci},{cj}): composable pair {p!r} has no square")
            for q in images:
                if q not in table.backward:
                    problems.append(f"colors ({ci},{cj}): composable pair {q!r} is not the image of any square")
            claimed = {table.forward[p] for p in pairs if p in table.forward}
            for img in sorted(claimed - set(images)):
                problems.append(f"colors ({ci},{cj}): square image {img!r} is not a composable pair")
    return ValidationReport("squares", problems)


def _swap_ids(forward, backward, colors, a, b):
    """Apply the square to adjacent edge ids (a, b); colors must differ."""
    if colors[a] < colors[b]:
        return forward[(a, b)]
    return backward[(a, b)]


def validate_cubes(skeleton, table):
    """Check swap-order confluence on every three-distinct-color triple.

    For a composable triple (e1, e2, e3) whose colors are pairwise
    distinct, reversing the color order by swaps at positions
    (1,2),(0,1),(1,2) must agree with swapping at (0,1),(1,2),(0,1).
    Trivially true for k < 3.
    """
    skeleton.require_validated()
    problems = []
    if skeleton.k < 3:
        return ValidationReport("cubes", problems)
    colors = {eid: e.color for eid, e in skeleton.edges.items()}

    def swap(a, b):
        return _swap_ids(table.forward, table.backward, colors, a, b)

    for e1 in sorted(skeleton.edges):
        color1 = colors[e1]
        for color2 in range(1, skeleton.k + 1):
            if color2 == color1:
                continue
            for e2 in skeleton.out_edges(skeleton.edge(e1).source, color2):
                for color3 in range(1, skeleton.k + 1):
                    if color3 in (color1, color2):
                        continue
                    for e3 in skeleton.out_edges(skeleton.edge(e2).source, color3):
                        try:
                            a, b, c = e1, e2, e3
                            b1, c1 = swap(b, c)
                            a1, b2 = swap(a, b1)
                            c2, b3 = swap(b2, c1)
                            route1 = (a1, c2, b3)
                            x1, y1 = swap(a, b)
                            y2, z1 = swap(y1, c)
                            x2, y3 = swap(x1, y2)
                            route2 = (x2, y3, z1)
                        except KeyError as missing:
                            problems.append(
                                f"cube ({e1},{e2},{e3}): square lookup failed for {missing}"
                            )
                            continue
                        if route1 != route2:
                            problems.append(
                                f"cube ({e1},{e2},{e3}): swap schedules disagree "
                                f"({route1!r} vs {route2!r})"
                            )
    return ValidationReport("cubes", problems)


class Path:
    """A path in canonical (colors ascending) form.  Treat as immutable."""

    __slots__ = ("graph", "range_vertex", "source_vertex", "degree", "edges", "_hash")

    def __init__(self, graph, range_vertex, source_vertex, degree, edges):
        self.graph = graph
        self.range_vertex = range_vertex
        self.source_vertex = source_vertex
        self.degree = degree
        self.edges = tuple(edges)
        self._hash = hash((range_vertex, self.edges))

    def is_vertex(self):
        return not self.edges

    def __eq__(self, other):
        return (
            isinstance(other, Path)
            and self.graph is other.graph
            and self.range_vertex == other.range_vertex
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.is_vertex():
            return f"Path<{self.range_vertex}>"
        return f"Path<{self.range_vertex}:{'.'.join(self.edges)}>"

    def to_json(self):
        return {"range": self.range_vertex, "edges": list(self.edges)}


class KGraph:
    """A validated skeleton plus square table; the path calculus lives here."""

    def __init__(self, skeleton, squares, _token=None):
        if _token is not KGraph._build_token:
            raise ContractViolationError("use KGraph.build so validation cannot be skipped")
        self.skeleton = skeleton
        self.squares = squares
        self.k = skeleton.k
        self._colors = {eid: e.color for eid, e in skeleton.edges.items()}
        self._paths_from = {}
        self._paths_into = {}

    _build_token = object()

    @classmethod
    def build(cls, skeleton, squares):
        report = skeleton.validate()
        if not report.ok:
            raise ValidationError(report)
        report = validate_squares(skeleton, squares)
        if not report.ok:
            raise ValidationError(report)
        report = validate_cubes(skeleton, squares)
        if not report.ok:
            raise ValidationError(report)
        return cls(skeleton, squares, _token=cls._build_token)

    @property
    def vertices(self):
        return self.skeleton.vertices

    def edge(self, eid):
        return self.skeleton.edge(eid)

    def require_vertex(self, v):
        if not self.skeleton.has_vertex(v):
            raise ContractViolationError(f"unknown vertex {v!r}")

    def require_rank(self, n):
        if n.rank != self.k:
            raise DegreeError(f"degree rank {n.rank} does not match graph rank {self.k}")

    def vertex_path(self, v):
        self.require_vertex(v)
        return Path(self, v, v, zero(self.k), ())

    def edge_path(self, eid):
        e = self.edge(eid)
        return Path(self, e.range, e.source, unit(self.k, e.color), (eid,))

    def _swap(self, a, b):
        ca, cb = self._colors[a], self._colors[b]
        if ca == cb:
            raise ContractViolationError("cannot swap edges of equal color")
        if ca < cb:
            return self.squares.forward[(a, b)]
        return self.squares.backward[(a, b)]

    def _normalize(self, seq):
        """Sort a composable edge sequence into ascending color blocks."""
        arr = list(seq)
        colors = self._colors
        n = len(arr)
        changed = True
        while changed:
            changed = False
            for i in range(n - 1):
                if colors[arr[i]] > colors[arr[i + 1]]:
                    arr[i], arr[i + 1] = self._swap(arr[i], arr[i + 1])
                    changed = True
        return tuple(arr)

    def _degree_of(self, edge_ids):
        counts = [0] * self.k
        for eid in edge_ids:
            counts[self._colors[eid] - 1] += 1
        return Degree(counts)

    def path(self, range_vertex, edge_ids):
        """Build a path from an arbitrary composable edge sequence."""
        self.require_vertex(range_vertex)
        edge_ids = tuple(edge_ids)
        if not edge_ids:
            return self.vertex_path(range_vertex)
        at = range_vertex
        for eid in edge_ids:
            e = self.edge(eid)
            if e.range != at:
                raise CompositionError(f"edge {eid!r} has range {e.range!r}, expected {at!r}")
            at = e.source
        edges = self._normalize(edge_ids)
        return Path(self, range_vertex, at, self._degree_of(edges), edges)

    # -- enumeration ---------------------------------------------------

    def paths_from(self, v, n):
        """All of vLambda^n: canonical paths with range v and degree n.

        Enumeration order is lexicographic on the canonical edge-id
        sequence; downstream "canonically least" choices rely on it.
        """
        self.require_vertex(v)
        self.require_rank(n)
        key = (v, n)
        hit = self._paths_from.get(key)
        if hit is not None:
            return hit
        if n.is_zero():
            out = (self.vertex_path(v),)
        else:
            color = next(i + 1 for i, c in enumerate(n) if c > 0)
            rest = subtract(n, unit(self.k, color))
            out = []
            for eid in self.skeleton.out_edges(v, color):
                e = self.edge(eid)
                for tail in self.paths_from(e.source, rest):
                    out.append(
                        Path(self, v, tail.source_vertex, n, (eid,) + tail.edges)
                    )
            out = tuple(out)
        self._paths_from[key] = out
        return out

    def paths_into(self, v, n):
        """All of Lambda^n v: canonical paths with source v and degree n."""
        self.require_vertex(v)
        self.require_rank(n)
        key = (v, n)
        hit = self._paths_into.get(key)
        if hit is not None:
            return hit
        if n.is_zero():
            out = (self.vertex_path(v),)
        else:
            color = next(self.k - i for i, c in enumerate(reversed(n.coords)) if c > 0)
            rest = subtract(n, unit(self.k, color))
            out = []
            for eid in self.skeleton.in_edges(v, color):
                e = self.edge(eid)
                for head in self.paths_into(e.range, rest):
                    out.append(
                        Path(self, head.range_vertex, v, n, head.edges + (eid,))
                    )
            out = tuple(sorted(out, key=lambda p: p.edges))
        self._paths_into[key] = out
        return out


def _same_graph(*paths):
    g = paths[0].graph
    for p in paths[1:]:
        if p.graph is not g:
            raise CompositionError("paths belong to different graphs")
    return g


def compose(mu, nu):
    """mu then nu; needs s(mu) = r(nu)."""
    g = _same_graph(mu, nu)
    if mu.source_vertex != nu.range_vertex:
        raise CompositionError(
            f"cannot compose: s={mu.source_vertex!r} vs r={nu.range_vertex!r}"
        )
    if mu.is_vertex():
        return nu
    if nu.is_vertex():
        return mu
    edges = g._normalize(mu.edges + nu.edges)
    return Path(g, mu.range_vertex, nu.source_vertex, add(mu.degree, nu.degree), edges)


def factor(lam, m):
    """The unique (mu, nu) with d(mu) = m and lam = mu.nu; needs m <= d(lam)."""
    g = lam.graph
    g.require_rank(m)
    if not leq(m, lam.degree):
        raise DegreeError(f"factor degree {m!r} exceeds path degree {lam.degree!r}")
    colors = g._colors
    working = list(lam.edges)
    prefix = []
    for color in range(1, g.k + 1):
        for _ in range(m[color - 1]):
            idx = next(i for i, eid in enumerate(working) if colors[eid] == color)
            while idx > 0:
                working[idx - 1], working[idx] = g._swap(working[idx - 1], working[idx])
                idx -= 1
            prefix.append(working.pop(0))
    mu_source = g.edge(prefix[-1]).source if prefix else lam.range_vertex
    mu = Path(g, lam.range_vertex, mu_source, m, tuple(prefix))
    rest = g._normalize(working)
    nu = Path(g, mu_source, lam.source_vertex, subtract(lam.degree, m), rest)
    return mu, nu


def segment(lam, m, n):
    """lam(m, n): the piece of lam between degrees m and n (m <= n <= d)."""
    if not leq(m, n):
        raise DegreeError(f"segment needs m <= n, got {m!r}, {n!r}")
    head, _ = factor(lam, n)
    _, mid = factor(head, m)
    return mid


def extend_by_edge(lam, eid):
    """Append one edge at the source end."""
    return compose(lam, lam.graph.edge_path(eid))


def paths_from(g, v, n):
    return g.paths_from(v, n)


def paths_into(g, v, n):
    return g.paths_into(v, n)


def normalize_by_schedule(g, edge_ids, schedule):
    """Normalize with an explicit swap order; for cross-checking only.

    `schedule` picks which out-of-order adjacent position to swap next,
    given the list of current positions; normalization must not care.
    """
    arr = list(edge_ids)
    colors = g._colors
    while True:
        spots = [i for i in range(len(arr) - 1) if colors[arr[i]] > colors[arr[i + 1]]]
        if not spots:
            break
        i = schedule(spots)
        arr[i], arr[i + 1] = g._swap(arr[i], arr[i + 1])
    return tuple(arr)


def degrees_up_to(max_degree):
    """All degrees <= max_degree, sorted by total size then coordinates."""
    spans = [range(c + 1) for c in max_degree.coords]
    return sorted((Degree(t) for t in _iproduct(*spans)), key=lambda d: (d.size, d.coords))


def all_paths_up_to(g, max_degree):
    """Every path of every degree <= max_degree, in a deterministic order."""
    out = []
    for n in degrees_up_to(max_degree):
        for v in g.vertices:
            out.extend(g.paths_from(v, n))
    return out
