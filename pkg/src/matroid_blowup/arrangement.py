"""Point configurations, their lattice of flats L and intersection closure M.

The poset built here is the combinatorial skeleton of the blow-up tower:
every non-bottom element is a linear subspace of P^n that gets blown up,
ordered by containment and ranked by ``1 + projective dimension``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Hashable, Optional, Sequence

from .fields import Field, QQ
from .graphs import Graph
from .linalg import Subspace, rref

BOTTOM, FLAT, EXTRA = "bottom", "L", "M"


class ConfigurationError(ValueError):
    """Invalid point configuration (zero vector, repeated point, too small ambient)."""


class PreconditionError(ValueError):
    """An operation was called outside its domain (e.g. a lattice op on an M element)."""


@dataclass(frozen=True)
class PointConfiguration:
    """Labelled nonzero vectors of length ``ambient_dim + 1`` over ``field``."""

    field: Field
    ambient_dim: int
    points: tuple
    labels: tuple

    def __post_init__(self):
        f = self.field
        pts = tuple(tuple(f(v) for v in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(self.labels) != len(pts):
            raise ConfigurationError("labels and points differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise ConfigurationError("duplicate labels")
        normals = set()
        for p in pts:
            if len(p) != self.ambient_dim + 1:
                raise ConfigurationError(
                    f"point of length {len(p)} in P^{self.ambient_dim}"
                )
            basis, _ = rref([p], f)
            if not basis:
                raise ConfigurationError("zero vector is not a projective point")
            if basis in normals:
                raise ConfigurationError("two points are projectively equal")
            normals.add(basis)
        if self.ambient_dim < self.rank + 1:
            raise ConfigurationError(
                f"span of rank {self.rank} needs codimension >= 2; "
                f"ambient dimension must be >= {self.rank + 1}"
            )

    @classmethod
    def from_vectors(cls, vectors, field: Field = QQ, ambient_dim: Optional[int] = None,
                     labels: Optional[Sequence[Hashable]] = None) -> "PointConfiguration":
        """Build a configuration, zero-padding vectors up to ``ambient_dim + 1``.

        ``ambient_dim`` defaults to the minimum legal value ``rank + 1``.
        """
        vectors = [list(v) for v in vectors]
        width = max((len(v) for v in vectors), default=1)
        rank = len(rref(vectors, field)[0]) if vectors else 0
        if ambient_dim is None:
            ambient_dim = max(width - 1, rank + 1)
        padded = [v + [0] * (ambient_dim + 1 - len(v)) for v in vectors]
        if labels is None:
            labels = tuple(range(len(vectors)))
        return cls(field, ambient_dim, tuple(tuple(v) for v in padded), tuple(labels))

    @property
    def ncols(self) -> int:
        return self.ambient_dim + 1

    @property
    def rank(self) -> int:
        return len(rref(list(self.points), self.field)[0]) if self.points else 0

    def span(self, indices=None) -> Subspace:
        idx = range(len(self.points)) if indices is None else indices
        return Subspace.span([self.points[i] for i in idx], self.ncols, self.field)

    def to_json(self) -> dict:
        return {
            "field": self.field.tag,
            "ambient_dim": self.ambient_dim,
            "points": [[str(v) for v in p] for p in self.points],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PointConfiguration":
        field = Field(data.get("field", "Q"))
        points = [[field(v) for v in p] for p in data["points"]]
        labels = data.get("labels")
        if "ambient_dim" not in data:
            return cls.from_vectors(points, field, labels=labels)
        return cls(field, int(data["ambient_dim"]), tuple(map(tuple, points)),
                   tuple(labels if labels is not None else range(len(points))))


@dataclass(frozen=True)
class LatticeElement:
    id: int
    kind: str
    span: Optional[Subspace]
    atoms: frozenset
    rank: int


def embed_graph(graph: Graph, padding: int = 1, field: Field = QQ) -> PointConfiguration:
    """Cycle-matroid embedding: the edge {u, v} becomes the point e_u - e_v.

    Vectors live in K^(vertices + padding), so the ambient space is
    P^(vertices - 1 + padding). Point labels are edge indices.
    """
    if padding < 1:
        raise ConfigurationError("padding must be >= 1")
    width = graph.vertices + padding
    pts = []
    for u, v in graph.edges:
        vec = [0] * width
        vec[u], vec[v] = 1, -1
        pts.append(tuple(vec))
    return PointConfiguration(field, width - 1, tuple(pts), tuple(range(len(pts))))


class ArrangementPoset:
    """The ranked family L ∪ M ∪ {bottom}, ordered by containment.

    Element ids are assigned by sorting on (rank, kind, echelon form), so the
    ids do not depend on the order in which the points were listed.
    """

    def __init__(self, config: PointConfiguration, flats, extras=()):
        self.config = config
        # flats: iterable of frozensets of point indices; extras: Subspaces
        entries = []
        for fl in flats:
            span = config.span(sorted(fl))
            labels = frozenset(config.labels[i] for i in fl)
            entries.append((FLAT, span, labels))
        for sp in extras:
            labels = frozenset(
                config.labels[i] for i, p in enumerate(config.points) if sp.contains_vector(p)
            )
            entries.append((EXTRA, sp, labels))
        entries.sort(key=lambda e: (e[1].rank, e[0] == EXTRA, e[1].key()))
        elems = [LatticeElement(0, BOTTOM, None, frozenset(), 0)]
        for i, (kind, span, labels) in enumerate(entries, start=1):
            elems.append(LatticeElement(i, kind, span, labels, span.rank))
        self.elements = tuple(elems)
        self._by_span = {e.span: e.id for e in elems if e.span is not None}
        self._by_atoms = {e.atoms: e.id for e in elems if e.kind != EXTRA}
        n = len(elems)
        below = [set([0, i]) for i in range(n)]
        for a in elems[1:]:
            for b in elems[1:]:
                if a.id != b.id and a.rank < b.rank and a.span <= b.span:
                    below[b.id].add(a.id)
        below[0] = {0}
        self._below = tuple(frozenset(s) for s in below)
        above = [set() for _ in range(n)]
        for z, s in enumerate(self._below):
            for x in s:
                above[x].add(z)
        self._above = tuple(frozenset(s) for s in above)
        self.top = self._by_atoms[frozenset(config.labels)] if config.points else 0
        ranks = {}
        for e in elems:
            ranks.setdefault(e.rank, []).append(e.id)
        self.by_rank = {r: tuple(v) for r, v in sorted(ranks.items())}
        self.cache = {}

    # -- basic queries -------------------------------------------------
    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i) -> LatticeElement:
        return self.elements[i]

    @property
    def bottom(self) -> int:
        return 0

    @property
    def field(self) -> Field:
        return self.config.field

    @property
    def rank_of_top(self) -> int:
        return self.elements[self.top].rank

    def rank(self, x: int) -> int:
        return self.elements[x].rank

    def kind(self, x: int) -> str:
        return self.elements[x].kind

    def is_flat(self, x: int) -> bool:
        return self.elements[x].kind != EXTRA

    @property
    def lattice_ids(self) -> tuple:
        """L including bottom, sorted by id."""
        return tuple(e.id for e in self.elements if e.kind != EXTRA)

    @property
    def flat_ids(self) -> tuple:
        """L without bottom."""
        return tuple(e.id for e in self.elements if e.kind == FLAT)

    @property
    def extra_ids(self) -> tuple:
        """M."""
        return tuple(e.id for e in self.elements if e.kind == EXTRA)

    @property
    def atom_ids(self) -> tuple:
        return tuple(e.id for e in self.elements if e.kind == FLAT and e.rank == 1)

    def leq(self, x: int, z: int) -> bool:
        return x in self._below[z]

    def below(self, z: int) -> frozenset:
        """All w <= z (bottom included)."""
        return self._below[z]

    def above(self, x: int) -> frozenset:
        """All w >= x."""
        return self._above[x]

    def interval(self, x: int, z: int) -> list:
        """Ids of L elements y with x <= y <= z."""
        return [y for y in self._above[x] & self._below[z] if self.is_flat(y)]

    def id_of_span(self, span: Subspace) -> Optional[int]:
        return self._by_span.get(span)

    def id_of_atoms(self, atoms) -> Optional[int]:
        return self._by_atoms.get(frozenset(atoms))

    def atom_of_label(self, label) -> int:
        return self._by_atoms[frozenset([label])]

    def fingerprint(self) -> str:
        import hashlib

        h = hashlib.sha256()
        h.update(self.field.tag.encode())
        for e in self.elements:
            h.update(f"{e.id}:{e.kind}:{e.rank};".encode())
        for z in range(len(self)):
            h.update((",".join(map(str, sorted(self._below[z]))) + "|").encode())
        return h.hexdigest()[:16]

    def to_json(self) -> dict:
        return {
            "field": self.field.tag,
            "ambient_dim": self.config.ambient_dim,
            "top": self.top,
            "elements": [
                {"id": e.id, "kind": e.kind, "rank": e.rank,
                 "atoms": sorted(e.atoms, key=repr)}
                for e in self.elements
            ],
            "order": [[x, z] for z in range(len(self)) for x in sorted(self._below[z])],
        }

    def __repr__(self):
        return (f"ArrangementPoset(|L|={len(self.lattice_ids)}, |M|={len(self.extra_ids)}, "
                f"rank={self.rank_of_top}, field={self.field.tag})")


def _flats(config: PointConfiguration) -> set:
    """All flats (closed point-index sets) of the configuration, bottom included."""
    k = len(config.points)
    flats = {frozenset()}
    layer = set()
    for i in range(k):
        layer.add(frozenset([i]))
    while layer:
        flats |= layer
        nxt = set()
        for fl in layer:
            span = config.span(sorted(fl))
            rest = [i for i in range(k) if i not in fl]
            done = set()
            for p in rest:
                if p in done:
                    continue
                bigger = span.join(config.span([p]))
                closure = frozenset(i for i in range(k) if bigger.contains_vector(config.points[i]))
                done |= closure
                nxt.add(closure)
        layer = nxt - flats
    return flats


def build_flat_lattice(config: PointConfiguration) -> ArrangementPoset:
    """Poset of L only: all distinct spans of subsets of the points, plus bottom."""
    flats = [f for f in _flats(config) if f]
    return ArrangementPoset(config, flats)


def close_under_intersection(poset: ArrangementPoset) -> ArrangementPoset:
    """Add the family M of intersections of flats that are not themselves flats."""
    family = [poset[x].span for x in poset.flat_ids]
    known = set(family)
    new = list(family)
    while new:
        found = []
        old = len(family) - len(new)
        for i, a in enumerate(new):
            # unordered pairs: new x old, and new x new with j < i
            for b in family[: old + i]:
                c = a.intersect(b)
                if not c.is_empty() and c not in known:
                    known.add(c)
                    found.append(c)
        family.extend(found)
        new = found
    flats = {frozenset(poset.config.labels.index(l) for l in poset[x].atoms)
             for x in poset.flat_ids}
    extras = [s for s in family if s not in set(poset[x].span for x in poset.flat_ids)]
    return ArrangementPoset(poset.config, flats, extras)


def build_arrangement(config: PointConfiguration) -> ArrangementPoset:
    """Full poset L ∪ M for a configuration."""
    return close_under_intersection(build_flat_lattice(config))


def arrangement_of_graph(graph: Graph, padding: int = 1, field: Field = QQ) -> ArrangementPoset:
    return build_arrangement(embed_graph(graph, padding, field))


def meet_join(poset: ArrangementPoset, x: int, y: int):
    """Meet and join of two L elements, computed inside L."""
    if not (poset.is_flat(x) and poset.is_flat(y)):
        raise PreconditionError("meet/join are defined on L elements only")
    ax, ay = poset[x].atoms, poset[y].atoms
    meet = poset.id_of_atoms(ax & ay)
    if x == 0 or y == 0:
        return meet, (y if x == 0 else x)
    span = poset[x].span.join(poset[y].span)
    cfg = poset.config
    atoms = frozenset(l for l, p in zip(cfg.labels, cfg.points) if span.contains_vector(p))
    return meet, poset.id_of_atoms(atoms)


def meet(poset, x, y) -> int:
    return meet_join(poset, x, y)[0]


def join(poset, x, y) -> int:
    return meet_join(poset, x, y)[1]
