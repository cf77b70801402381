"""The test corpus: small graphs, named matroids and random rational configurations."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from ..arrangement import (
    ArrangementPoset,
    ConfigurationError,
    PointConfiguration,
    arrangement_of_graph,
    build_arrangement,
    embed_graph,
)
from ..fields import Field, QQ
from ..graphs import Graph, all_graphs
from ..matroid import fano_configuration, four_point_line


@dataclass(frozen=True)
class CorpusConfig:
    """Size knobs. Defaults keep the full identity suite to about a minute."""

    max_vertices: int = 5
    graph_padding: int = 1
    random_configs: int = 8
    random_max_points: int = 6
    random_width: int = 4
    random_coord_bound: int = 1
    seed: int = 20240521
    named: bool = True


@dataclass
class CorpusEntry:
    name: str
    config: PointConfiguration
    graph: Optional[Graph] = None
    _poset: Optional[ArrangementPoset] = field(default=None, repr=False)

    @property
    def poset(self) -> ArrangementPoset:
        if self._poset is None:
            self._poset = build_arrangement(self.config)
        return self._poset


def graph_name(g: Graph) -> str:
    edges = "".join(f"{u}{v}" for u, v in g.edges)
    return f"graph_v{g.vertices}_e{edges or '-'}"


def uniform_configuration(rank: int, size: int) -> PointConfiguration:
    """U_{rank,size} realized on the moment curve (t^0, ..., t^(rank-1))."""
    vecs = [[t ** i for i in range(rank)] for t in range(size - 1)]
    vecs.append([0] * (rank - 1) + [1])
    return PointConfiguration.from_vectors(vecs)


def non_fano_configuration() -> PointConfiguration:
    vecs = [[a, b, c] for a in (0, 1) for b in (0, 1) for c in (0, 1) if (a, b, c) != (0, 0, 0)]
    return PointConfiguration.from_vectors(vecs, field=QQ)


def named_entries() -> list:
    gf2 = Field("GF(2)")
    return [
        CorpusEntry("L4", four_point_line()),
        CorpusEntry("F7_GF2", fano_configuration()),
        CorpusEntry("nonFano_Q", non_fano_configuration()),
        CorpusEntry("K4_GF2", embed_graph(Graph.complete(4), field=gf2), Graph.complete(4)),
        CorpusEntry("U2_5", uniform_configuration(2, 5)),
        CorpusEntry("U3_5", uniform_configuration(3, 5)),
    ]


def random_configurations(cfg: CorpusConfig) -> list:
    rng = random.Random(cfg.seed)
    out = []
    b = cfg.random_coord_bound
    attempts = 0
    while len(out) < cfg.random_configs and attempts < 1000 * max(1, cfg.random_configs):
        attempts += 1
        k = rng.randint(2, cfg.random_max_points)
        vecs = [[rng.randint(-b, b) for _ in range(cfg.random_width)] for _ in range(k)]
        try:
            pc = PointConfiguration.from_vectors(vecs)
        except ConfigurationError:
            continue
        out.append(CorpusEntry(f"random_{len(out)}", pc))
    return out


def build_corpus(cfg: CorpusConfig | None = None) -> list:
    """Deterministic list of :class:`CorpusEntry`; posets are built lazily."""
    cfg = cfg or CorpusConfig()
    entries = [
        CorpusEntry(graph_name(g), embed_graph(g, cfg.graph_padding), g)
        for g in all_graphs(cfg.max_vertices)
    ]
    if cfg.named:
        entries.extend(named_entries())
    entries.extend(random_configurations(cfg))
    return entries


def graph_entry(g: Graph, padding: int = 1) -> CorpusEntry:
    e = CorpusEntry(graph_name(g), embed_graph(g, padding), g)
    e._poset = arrangement_of_graph(g, padding)
    return e
