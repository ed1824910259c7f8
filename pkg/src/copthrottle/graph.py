"""Immutable graph core: adjacency sets, BFS distance machinery, and the
structural vertex predicates (corners, boundary vertices, distance
domination, k-radius, feedback sets, outerplanarity) that everything else
builds on.

Vertices are dense 0-indexed integers.  Distance to an unreachable vertex
is ``None``, never a sentinel integer.  Exhaustive searches take an
explicit work budget and raise :class:`BudgetExceeded` rather than
silently degrade.
"""

from __future__ import annotations

import itertools
from collections import deque
from math import comb
from typing import Iterable, NamedTuple, Optional, Sequence

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed its work budget."""

    def __init__(self, operation: str, required: int, budget: int):
        super().__init__(
            f"{operation}: requires ~{required} elementary steps, budget is {budget}"
        )
        self.operation = operation
        self.required = required
        self.budget = budget


class CornerWitness(NamedTuple):
    """A vertex ``corner`` whose closed neighborhood lies inside ``dominator``'s."""

    corner: int
    dominator: int


class Graph:
    """Simple undirected graph on vertices ``0..n-1``, immutable after construction.

    Parameters
    ----------
    n : int
        Number of vertices (may be 0).
    edges : iterable of (u, v)
        Undirected edges; loops are rejected, duplicates collapse.
    name : str, optional
        Label carried through serialization.
    """

    __slots__ = ("n", "name", "adj", "nbr", "closed", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), name: str | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.name = name
        sets: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in sets)
        self.nbr: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in sets)
        self.closed: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s | {v})) for v, s in enumerate(sets)
        )
        self._edges: tuple[tuple[int, int], ...] = tuple(
            (u, v) for u in range(n) for v in self.adj[u] if u < v
        )

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbr[u]

    def closed_nbr(self, v: int) -> frozenset[int]:
        return self.nbr[v] | {v}

    def check_vertex(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return v

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.m}>"

    def with_name(self, name: str) -> "Graph":
        return Graph(self.n, self._edges, name=name)

    def induced(self, keep: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``keep``.

        Returns the new graph plus the relabeling map ``old_ids`` with
        ``old_ids[new] = old``; new ids follow the sorted order of ``keep``.
        """
        old_ids = tuple(sorted(set(keep)))
        pos = {old: new for new, old in enumerate(old_ids)}
        for v in old_ids:
            self.check_vertex(v)
        edges = [
            (pos[u], pos[v]) for u, v in self._edges if u in pos and v in pos
        ]
        return Graph(len(old_ids), edges, name=self.name), old_ids

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            queue = deque([s])
            seen[s] = True
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())


# ---------------------------------------------------------------------------
# distances


def distances_from_set(g: Graph, sources: Iterable[int]) -> list[Optional[int]]:
    """Multi-source BFS distances d(v, S); ``None`` where v is unreachable.

    Raises ``ValueError`` on an empty source set or out-of-range ids.
    """
    src = sorted(set(sources))
    if not src:
        raise ValueError("source set must be non-empty")
    for v in src:
        g.check_vertex(v)
    dist: list[Optional[int]] = [None] * g.n
    queue = deque()
    for v in src:
        dist[v] = 0
        queue.append(v)
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adj[u]:
            if dist[w] is None:
                dist[w] = du + 1
                queue.append(w)
    return dist


def distances_from(g: Graph, source: int) -> list[Optional[int]]:
    return distances_from_set(g, (source,))


def all_pairs_distances(g: Graph) -> list[list[Optional[int]]]:
    return [distances_from(g, v) for v in range(g.n)]


def max_distance(g: Graph, sources: Iterable[int]) -> Optional[int]:
    """max_v d(v, S); ``None`` if some vertex is unreachable from S."""
    dist = distances_from_set(g, sources)
    best = 0
    for d in dist:
        if d is None:
            return None
        if d > best:
            best = d
    return best


def eccentricity(g: Graph, v: int) -> Optional[int]:
    return max_distance(g, (v,))


def radius_and_center(g: Graph) -> tuple[int, int]:
    """(rad(G), least central vertex) for a connected graph."""
    if not g.is_connected() or g.n == 0:
        raise ValueError("radius requires a non-empty connected graph")
    best_v, best_e = 0, None
    for v in range(g.n):
        e = eccentricity(g, v)
        if best_e is None or e < best_e:
            best_v, best_e = v, e
    return best_e, best_v


def diameter(g: Graph) -> int:
    if not g.is_connected() or g.n == 0:
        raise ValueError("diameter requires a non-empty connected graph")
    return max(eccentricity(g, v) for v in range(g.n))


def bfs_tree(g: Graph, root: int) -> tuple[list[int], list[Optional[int]], list[int]]:
    """BFS tree from ``root``: (parent, depth, visit order); parent[root] = -1.

    Unreached vertices get depth ``None`` and parent -1.
    """
    g.check_vertex(root)
    parent = [-1] * g.n
    depth: list[Optional[int]] = [None] * g.n
    order = []
    depth[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in g.adj[u]:
            if depth[w] is None:
                depth[w] = depth[u] + 1
                parent[w] = u
                queue.append(w)
    return parent, depth, order


# ---------------------------------------------------------------------------
# k-radius and distance domination


def k_radius_exact(
    g: Graph, k: int, budget: int = DEFAULT_BUDGET
) -> tuple[Optional[int], tuple[int, ...]]:
    """rad_k(G) = min over |S|=k of max_v d(v,S), by exhaustive enumeration.

    Returns (value, witness set); value is ``None`` (unreachable) when no
    k-set reaches every vertex, which happens iff G is disconnected with
    more than k components.  Witness is the lexicographically least
    optimal set.
    """
    if not (1 <= k <= g.n):
        raise ValueError(f"k={k} must be in 1..n={g.n}")
    required = comb(g.n, k) * (g.n + g.m + k)
    if required > budget:
        raise BudgetExceeded("k_radius_exact", required, budget)
    best: Optional[int] = None
    witness: tuple[int, ...] = ()
    for S in itertools.combinations(range(g.n), k):
        d = max_distance(g, S)
        if d is None:
            continue
        if best is None or d < best:
            best, witness = d, S
            if best == 0:
                break
    if best is None:
        return None, ()
    return best, witness


def _covers(g: Graph, S: Sequence[int], k: int) -> bool:
    dist = distances_from_set(g, S)
    return all(d is not None and d <= k for d in dist)


def k_distance_dominating(
    g: Graph, k: int, mode: str = "greedy", budget: int = DEFAULT_BUDGET
) -> tuple[int, ...]:
    """A set S with d(v, S) <= k for every vertex v.

    ``exact`` enumerates subsets by increasing size (lexicographically
    least minimum set).  ``greedy`` walks a BFS spanning tree, repeatedly
    taking the k-th ancestor of a deepest remaining vertex and discarding
    its subtree; for connected G with n >= k+1 this yields at most
    floor(n/(k+1)) vertices.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.n == 0:
        return ()
    if mode == "exact":
        size, witness = domination_number(g, k, budget=budget, method="enumerate")
        if size is None:
            raise ValueError("graph has more components than any covering set can reach")
        return witness
    if mode != "greedy":
        raise ValueError(f"unknown mode {mode!r}")
    if not g.is_connected():
        raise ValueError("greedy mode requires a connected graph")
    parent, depth, order = bfs_tree(g, 0)
    children: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        if parent[v] >= 0:
            children[parent[v]].append(v)
    remaining = set(range(g.n))
    chosen: list[int] = []
    while remaining:
        v = max(remaining, key=lambda x: (depth[x], -x))
        if depth[v] <= k:
            # everything left is within k of the root
            chosen.append(0)
            break
        u = v
        for _ in range(k):
            u = parent[u]
        chosen.append(u)
        # the subtree under u has height <= k (v was deepest), so u covers it
        stack = [u]
        while stack:
            w = stack.pop()
            if w in remaining:
                remaining.discard(w)
                stack.extend(children[w])
        if len(remaining) <= k:
            # a connected remainder of <= k vertices hangs off parent(u),
            # hence lies within distance k of u already
            break
    result = tuple(sorted(set(chosen)))
    assert _covers(g, result, k)
    return result


def domination_number(
    g: Graph, k: int = 1, budget: int = DEFAULT_BUDGET, method: str = "auto"
) -> tuple[Optional[int], tuple[int, ...]]:
    """Exact k-distance domination number gamma_k(G) with a witness.

    ``enumerate`` tries subsets by increasing size within the budget;
    ``milp`` solves the set-cover integer program with scipy's HiGHS
    backend (used for orders where enumeration is hopeless); ``auto``
    picks between them.  Returns (None, ()) when no set of any size
    covers (impossible for k >= 1: singletons cover their own vertex,
    so this only guards the empty graph).
    """
    if g.n == 0:
        return 0, ()
    balls = [set(g.closed[v]) for v in range(g.n)]
    if k > 1:
        for v in range(g.n):
            dist = distances_from(g, v)
            balls[v] = {u for u, d in enumerate(dist) if d is not None and d <= k}
    if method == "auto":
        method = "enumerate" if g.n <= 16 else "milp"
    if method == "milp":
        return _domination_milp(g, balls)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    universe = set(range(g.n))
    spent = 0
    for size in range(1, g.n + 1):
        step = comb(g.n, size) * (size + 1)
        spent += step
        if spent > budget:
            raise BudgetExceeded("domination_number", spent, budget)
        for S in itertools.combinations(range(g.n), size):
            covered = set()
            for v in S:
                covered |= balls[v]
            if covered == universe:
                return size, S
    return None, ()


def _domination_milp(g: Graph, balls: list[set[int]]) -> tuple[int, tuple[int, ...]]:
    import numpy as np
    from scipy.optimize import LinearConstraint, milp

    A = np.zeros((g.n, g.n))
    for v, ball in enumerate(balls):
        for u in ball:
            A[u, v] = 1.0
    res = milp(
        c=np.ones(g.n),
        constraints=LinearConstraint(A, lb=np.ones(g.n)),
        integrality=np.ones(g.n),
        bounds=(0, 1),
    )
    if not res.success:
        raise RuntimeError(f"milp domination solve failed: {res.message}")
    witness = tuple(v for v in range(g.n) if res.x[v] > 0.5)
    return len(witness), witness


# ---------------------------------------------------------------------------
# corners, boundary vertices, geodesics


def corners(g: Graph) -> list[CornerWitness]:
    """All ordered pairs (v, u) with v != u and N[v] subseteq N[u].

    Ordered by corner id, then dominator id.
    """
    out = []
    closed = [g.nbr[v] | {v} for v in range(g.n)]
    for v in range(g.n):
        for u in range(g.n):
            if u != v and closed[v] <= closed[u]:
                out.append(CornerWitness(v, u))
    return out


def corners_of(g: Graph, v: int) -> list[int]:
    """Dominators of v: every u != v with N[v] subseteq N[u]."""
    cv = g.nbr[v] | {v}
    return [u for u in range(g.n) if u != v and cv <= (g.nbr[u] | {u})]


def boundary_vertices(g: Graph, v: int) -> tuple[int, ...]:
    """Vertices u with d(u,v) >= d(w,v) for every neighbor w of u.

    Computed within v's component; vertices unreachable from v are skipped.
    """
    g.check_vertex(v)
    dist = distances_from(g, v)
    out = []
    for u in range(g.n):
        du = dist[u]
        if du is None:
            continue
        if all(dist[w] is not None and dist[w] <= du for w in g.adj[u]):
            out.append(u)
    return tuple(out)


def geodesic_between(g: Graph, u: int, v: int) -> list[int]:
    """A shortest u-v path, extending through the lowest-id eligible neighbor."""
    g.check_vertex(u)
    g.check_vertex(v)
    dist = distances_from(g, v)
    if dist[u] is None:
        raise ValueError(f"vertices {u} and {v} are in different components")
    path = [u]
    cur = u
    while cur != v:
        cur = min(w for w in g.adj[cur] if dist[w] == dist[cur] - 1)
        path.append(cur)
    return path


def is_geodesic(g: Graph, path: Sequence[int]) -> bool:
    """True iff ``path`` is a shortest path between its endpoints."""
    if len(path) == 0:
        return False
    if len(set(path)) != len(path):
        return False
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            return False
    dist = distances_from(g, path[0])
    return dist[path[-1]] == len(path) - 1


# ---------------------------------------------------------------------------
# feedback vertex number


def feedback_vertex_number(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> tuple[int, tuple[int, ...]]:
    """Minimum number of vertices whose removal leaves a forest, with witness.

    Exhaustive search by increasing set size; witness is lexicographically
    least at the optimal size.
    """
    if g.is_forest():
        return 0, ()
    spent = 0
    for size in range(1, g.n + 1):
        spent += comb(g.n, size) * (g.n + g.m)
        if spent > budget:
            raise BudgetExceeded("feedback_vertex_number", spent, budget)
        for S in itertools.combinations(range(g.n), size):
            if _is_forest_without(g, set(S)):
                return size, S
    raise AssertionError("unreachable: removing all vertices leaves a forest")


def _is_forest_without(g: Graph, removed: set[int]) -> bool:
    n_left = g.n - len(removed)
    seen = set()
    edges = 0
    comps = 0
    for s in range(g.n):
        if s in removed or s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in removed:
                    continue
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                if u < w:
                    edges += 1
    return edges == n_left - comps


# ---------------------------------------------------------------------------
# outerplanarity via forbidden minors


def has_clique(g: Graph, size: int) -> bool:
    for S in itertools.combinations(range(g.n), size):
        if all(g.has_edge(a, b) for a, b in itertools.combinations(S, 2)):
            return True
    return False


def _has_k23_subgraph(edges_adj: list[set[int]]) -> bool:
    n = len(edges_adj)
    for a in range(n):
        for b in range(a + 1, n):
            common = (edges_adj[a] & edges_adj[b]) - {a, b}
            if len(common) >= 3:
                return True
    return False


def _has_k4_subgraph(edges_adj: list[set[int]]) -> bool:
    n = len(edges_adj)
    for a in range(n):
        na = sorted(x for x in edges_adj[a] if x > a)
        for i, b in enumerate(na):
            nb = edges_adj[b]
            for c in na[i + 1 :]:
                if c not in nb:
                    continue
                if (edges_adj[a] & nb & edges_adj[c]) - {a, b, c}:
                    return True
    return False


def _has_minor(g: Graph, base_test, budget: int, counter: list[int]) -> bool:
    """Branch search: base subgraph test, else try every edge contraction.

    Memoizes on the exact contracted edge set; contraction keeps the
    smaller endpoint label so commuting contractions collide in the memo.
    """
    memo: set[frozenset[frozenset[int]]] = set()

    def rec(adj: list[set[int]], alive: frozenset[int]) -> bool:
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceeded("is_outerplanar", counter[0], budget)
        if base_test(adj):
            return True
        key = frozenset(
            frozenset((u, v)) for u in alive for v in adj[u] if u < v
        )
        if key in memo:
            return False
        memo.add(key)
        for u in sorted(alive):
            for v in sorted(adj[u]):
                if v < u:
                    continue
                # contract uv into u
                new_adj = [set(s) for s in adj]
                merged = (new_adj[u] | new_adj[v]) - {u, v}
                for w in new_adj[v]:
                    new_adj[w].discard(v)
                for w in new_adj[u]:
                    new_adj[w].discard(u)
                new_adj[v] = set()
                new_adj[u] = merged
                for w in merged:
                    new_adj[w].add(u)
                if rec(new_adj, alive - {v}):
                    return True
        return False

    adj0 = [set(g.nbr[v]) for v in range(g.n)]
    return rec(adj0, frozenset(range(g.n)))


def is_outerplanar(g: Graph, budget: int = 4 * 10**6) -> bool:
    """True iff G has neither a K4 nor a K_{2,3} minor.

    Exhaustive contraction search with subgraph-containment base cases;
    intended for desk scale (n up to roughly 12).
    """
    counter = [0]
    if _has_minor(g, _has_k4_subgraph, budget, counter):
        return False
    if _has_minor(g, _has_k23_subgraph, budget, counter):
        return False
    return True
