"""Immutable undirected simple graphs, seeded family generators and file I/O.

Vertices are 0-based everywhere inside the library; the DIMACS format is
1-based and gets converted at the parsing boundary.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import GraphFormatError, ResourceLimitError

FAMILIES = (
    "gnp",
    "random_regular",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "petersen",
)


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Instances are immutable after construction; all algorithms take
    read-only views, so sharing a Graph across threads is safe.
    """

    __slots__ = ("n", "m", "adjacency", "_degrees", "_csr", "_closed_csr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", len(seen))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_degrees", np.array([len(a) for a in adj], dtype=np.int64))
        object.__setattr__(self, "_csr", None)
        object.__setattr__(self, "_closed_csr", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic accessors ---------------------------------------------------

    def _check_vertex(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise ValueError(f"vertex id {v} out of range for n={self.n}")
        return v

    def degree(self, v: int) -> int:
        return len(self.adjacency[self._check_vertex(v)])

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    @property
    def min_degree(self) -> int:
        return int(self._degrees.min())

    @property
    def max_degree(self) -> int:
        return int(self._degrees.max())

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[self._check_vertex(v)]

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        """N[v] = N(v) ∪ {v}, sorted ascending."""
        v = self._check_vertex(v)
        return tuple(sorted(self.adjacency[v] + (v,)))

    def restricted_neighborhood(self, v: int, closed: bool = True) -> tuple[int, ...]:
        """The fixed delta-subset N'(v) used by the probabilistic constructions.

        Deterministic selection rule: the ``min_degree`` lowest-indexed
        neighbors of v, plus v itself iff ``closed``.
        """
        v = self._check_vertex(v)
        picked = self.adjacency[v][: self.min_degree]
        if closed:
            return tuple(sorted(picked + (v,)))
        return picked

    def has_edge(self, u: int, v: int) -> bool:
        u, v = self._check_vertex(u), self._check_vertex(v)
        a = self.adjacency[u]
        i = bisect.bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    # -- array views for kernels -------------------------------------------

    def csr(self, closed: bool = False) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) arrays; ``closed`` includes each vertex itself."""
        attr = "_closed_csr" if closed else "_csr"
        cached = getattr(self, attr)
        if cached is None:
            lists = (
                [self.closed_neighborhood(v) for v in range(self.n)]
                if closed
                else self.adjacency
            )
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v, a in enumerate(lists):
                indptr[v + 1] = indptr[v] + len(a)
            indices = np.fromiter(
                (u for a in lists for u in a), dtype=np.int64, count=int(indptr[-1])
            )
            cached = (indptr, indices)
            object.__setattr__(self, attr, cached)
        return cached

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adjacency == other.adjacency
        )

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- deterministic family generators ----------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(n1: int, n2: int) -> Graph:
    if n1 < 1 or n2 < 1:
        raise ValueError("complete bipartite needs both part sizes >= 1")
    return Graph(n1 + n2, [(i, n1 + j) for i in range(n1) for j in range(n2)])


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))        # outer cycle
        edges.append((i, i + 5))              # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return Graph(10, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); identical (n, p, seed) gives an identical graph."""
    if n < 1:
        raise ValueError("gnp needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    draws = rng.random(n * (n - 1) // 2)
    rows, cols = np.triu_indices(n, k=1)
    mask = draws < p
    return Graph(n, zip(rows[mask].tolist(), cols[mask].tolist()))


def random_regular(n: int, d: int, seed: int, max_attempts: int = 100_000) -> Graph:
    """Random d-regular graph via the pairing model with rejection."""
    if not 0 <= d < n:
        raise ValueError("random regular needs 0 <= d < n")
    if (n * d) % 2 != 0:
        raise ValueError("random regular needs n*d even")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for _ in range(max_attempts):
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = int(stubs[i]), int(stubs[i + 1])
            if u > v:
                u, v = v, u
            if u == v or (u, v) in edges:
                ok = False
                break
            edges.add((u, v))
        if ok:
            return Graph(n, edges)
    raise ResourceLimitError(
        f"pairing model failed to produce a simple {d}-regular graph "
        f"on {n} vertices in {max_attempts} attempts"
    )


@dataclass(frozen=True)
class GraphFamilySpec:
    """Seeded recipe for a test graph; identical spec gives identical graph."""

    family: str
    n: int | None = None
    n2: int | None = None   # second part size (complete_bipartite only)
    p: float | None = None  # edge probability (gnp only)
    d: int | None = None    # degree (random_regular only)
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")


def generate(spec: GraphFamilySpec) -> Graph:
    fam = spec.family
    if fam == "petersen":
        return petersen()
    if spec.n is None:
        raise ValueError(f"family {fam!r} needs n")
    if fam == "path":
        return path(spec.n)
    if fam == "cycle":
        return cycle(spec.n)
    if fam == "complete":
        return complete(spec.n)
    if fam == "complete_bipartite":
        if spec.n2 is None:
            raise ValueError("complete_bipartite needs n2")
        return complete_bipartite(spec.n, spec.n2)
    if fam == "gnp":
        if spec.p is None:
            raise ValueError("gnp needs p")
        return gnp(spec.n, spec.p, spec.seed)
    if fam == "random_regular":
        if spec.d is None:
            raise ValueError("random_regular needs d")
        return random_regular(spec.n, spec.d, spec.seed)
    raise ValueError(f"unknown family {fam!r}")


# -- file formats ------------------------------------------------------------
#
# edge_list: one "u v" pair per line, whitespace-separated, '#' comments.
#            The writer emits a "# n=<N>" comment so isolated trailing
#            vertices survive a round trip; the reader honors it.
# dimacs:    "p edge <n> <m>" header plus "e <u> <v>" lines, 1-based.

GRAPH_FORMATS = ("edge_list", "dimacs")


def write_graph(g: Graph, fmt: str = "edge_list") -> str:
    if fmt == "edge_list":
        lines = [f"# n={g.n}"]
        lines += [f"{u} {v}" for u, v in g.edges()]
        return "\n".join(lines) + "\n"
    if fmt == "dimacs":
        lines = [f"p edge {g.n} {g.m}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}")


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected integer {what}, got {token!r}", lineno) from None


def _read_edge_list(text: str) -> Graph:
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    declared_n: int | None = None
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n=") and declared_n is None:
                declared_n = _parse_int(body[2:].strip(), lineno, "vertex count")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {raw!r}", lineno)
        u = _parse_int(parts[0], lineno, "vertex id")
        v = _parse_int(parts[1], lineno, "vertex id")
        if u < 0 or v < 0:
            raise GraphFormatError("vertex ids must be nonnegative", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"duplicate edge ({key[0]},{key[1]})", lineno)
        seen.add(key)
        edges.append(key)
        max_seen = max(max_seen, u, v)
    n = declared_n if declared_n is not None else max_seen + 1
    if n < 1:
        raise GraphFormatError("empty edge list and no '# n=' header")
    if max_seen >= n:
        raise GraphFormatError(f"vertex id {max_seen} exceeds declared n={n}")
    return Graph(n, edges)


def _read_dimacs(text: str) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError(f"expected 'p edge n m', got {raw!r}", lineno)
            n = _parse_int(parts[2], lineno, "vertex count")
            m = _parse_int(parts[3], lineno, "edge count")
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge before problem line", lineno)
            if len(parts) != 3:
                raise GraphFormatError(f"expected 'e u v', got {raw!r}", lineno)
            u = _parse_int(parts[1], lineno, "vertex id")
            v = _parse_int(parts[2], lineno, "vertex id")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            key = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if key in seen:
                raise GraphFormatError(f"duplicate edge ({u},{v})", lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line")
    if m is not None and m != len(edges):
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def read_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse a graph; when fmt is None it is sniffed from the content."""
    if fmt is None:
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fmt = "dimacs" if line[0] in ("p", "c", "e") else "edge_list"
            break
        else:
            fmt = "edge_list"
    if fmt == "edge_list":
        return _read_edge_list(text)
    if fmt == "dimacs":
        return _read_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def load_graph(path: str, fmt: str | None = None) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return read_graph(fh.read(), fmt)


def save_graph(g: Graph, path: str, fmt: str = "edge_list") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_graph(g, fmt))
