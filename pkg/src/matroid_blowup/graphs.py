"""Simple graphs: validation, components, canonical forms, small enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations


class GraphError(ValueError):
    """Raised for graphs with loops, parallel edges or bad vertex indices."""


@dataclass(frozen=True)
class Graph:
    """Simple loopless graph on vertices ``0..vertices-1``."""

    vertices: int
    edges: tuple

    def __post_init__(self):
        if self.vertices < 0:
            raise GraphError("negative vertex count")
        seen = set()
        norm = []
        for e in self.edges:
            u, v = (int(a) for a in e)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise GraphError(f"edge {(u, v)} references a missing vertex")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"parallel edge {key}")
            seen.add(key)
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def complete(cls, k: int) -> "Graph":
        return cls(k, tuple(combinations(range(k), 2)))

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(int(data["vertices"]), tuple(tuple(e) for e in data["edges"]))

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "edges": [list(e) for e in self.edges]}

    def components(self) -> int:
        parent = list(range(self.vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        count = self.vertices
        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                count -= 1
        return count

    def edge_set(self) -> frozenset:
        return frozenset((min(u, v), max(u, v)) for u, v in self.edges)

    def canonical_form(self) -> tuple:
        """Exhaustive canonical form; only meant for small graphs."""
        return _canonical(self.vertices, self.edge_set())


@lru_cache(maxsize=None)
def _canonical(nv: int, edges: frozenset) -> tuple:
    best = None
    for perm in permutations(range(nv)):
        enc = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))
        if best is None or enc < best:
            best = enc
    return (nv, best or ())


def all_graphs(max_vertices: int = 5, min_vertices: int = 1):
    """All simple graphs up to isomorphism with the given vertex counts."""
    out = []
    for nv in range(min_vertices, max_vertices + 1):
        pairs = list(combinations(range(nv), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            edges = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
            key = _canonical(nv, edges)
            if key in seen:
                continue
            seen.add(key)
            out.append(Graph(nv, key[1]))
    return out
