"""The preprocessing pipeline: run the reductions in rounds and collect the pieces for lifting."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .graph import ColoredGraph, VertexRenaming, is_automorphism
from .lifting import LiftError, RepresentationMap, lift
from .perm import SparseAutomorphism
from .probing import probe_1ir_all_classes, probe_inf_size2, probe_inf_sizeB
from .quotient import component_cells, flip_dense_pairs, rep_weights, remove_singletons
from .reductions import (link_cells, reduce_obfuscated_edge_flip, reduce_obfuscated_matchings,
                         reduce_unique_endpoint_paths, remove_degree0, remove_degree1,
                         remove_universal)
from .refinement import Coloring, refine

COUNTERS = ("singletons", "deg0", "universal", "deg1", "deg2_match", "deg2_unique", "deg2_flip",
            "edges_flipped", "probes_attempted", "probes_succeeded")
REMOVALS = ("singletons", "deg0", "universal", "deg1", "deg2_match", "deg2_unique", "deg2_flip")


@dataclass
class ScheduleConfig:
    deg0: bool = True
    deg1: bool = True
    deg2_unique: bool = True
    deg2_match: bool = True
    deg2_flip: bool = True
    edge_flip: bool = True
    probe_1ir: bool = True
    probe_size2: bool = True
    probe_sizeB: bool = True
    components: bool = True
    B: int = 8
    shrink_threshold: float = 0.25
    t_cap: int | None = None

    def __post_init__(self):
        if not 0 < self.shrink_threshold < 1:
            raise ValueError("shrink_threshold must lie in (0, 1)")
        if self.B < 3:
            raise ValueError("B must be at least 3")


@dataclass
class PreprocessReport:
    """Everything needed to turn generators of the reduced graph into generators for the input.

    ``graph`` is the reduced graph colored by the final coloring ``coloring``;
    ``renaming`` maps its vertices to input ids, ``rep`` is the flattened
    representation map over input ids and ``kernel`` holds generators over
    input ids that fix every remaining vertex.
    """

    original: ColoredGraph
    graph: ColoredGraph
    coloring: Coloring
    rep: RepresentationMap
    renaming: VertexRenaming
    kernel: list[SparseAutomorphism]
    stats: Counter
    iterations: int
    chain: list | None = field(default=None, repr=False)

    def summary(self) -> dict:
        out = {k: int(self.stats[k]) for k in COUNTERS}
        out.update(iterations=self.iterations, n_in=self.original.n, m_in=self.original.m,
                   n_out=self.graph.n, m_out=self.graph.m, kernel_gens=len(self.kernel))
        return out


class _Pipeline:
    def __init__(self, G: ColoredGraph, cfg: ScheduleConfig, record_chain: bool):
        self.cfg = cfg
        self.G = G
        self.pi = Coloring.from_colors(G.colors)
        self.F = RepresentationMap()
        self.ren = VertexRenaming.identity(G.n)
        self.K: list[SparseAutomorphism] = []
        self.stats: Counter = Counter({k: 0 for k in COUNTERS})
        self.chain = [] if record_chain else None

    def _lift(self, phis) -> None:
        for phi in phis:
            if phi:
                self.K.append(lift(phi, self.F, self.ren))

    def apply(self, op, *args, **kw) -> bool:
        """Run one reduction on the current graph; returns whether vertices vanished."""
        R = RepresentationMap()
        K: list = []
        if op is remove_singletons:
            G2, pi2, r = op(self.G, self.pi, R)
        elif op in (remove_degree0, remove_universal, remove_degree1):
            G2, pi2, r = op(self.G, self.pi, R, K, self.stats)
        else:
            G2, pi2, r = op(self.G, self.pi, R, self.stats, *args, **kw)
        self._lift(K)
        changed = G2 is not self.G
        if changed:
            self.F.absorb_stage(self.ren, R)
            self.ren = self.ren.then(r)
            if self.chain is not None:
                self.chain.append((R, r))
            self.G, self.pi = G2, pi2
        return changed

    def singletons(self) -> None:
        before = self.G.n
        if self.apply(remove_singletons):
            self.stats["singletons"] += before - self.G.n

    def probe(self) -> None:
        cfg = self.cfg
        if not (cfg.probe_1ir or cfg.probe_size2 or cfg.probe_sizeB):
            return
        if cfg.components:
            parts = [set(v for c in comp for v in self.pi.cell(c)) for comp in component_cells(self.G, self.pi)]
        else:
            parts = [None]
        G, pi = self.G, self.pi
        for part in parts:
            K: list = []
            if cfg.probe_1ir:
                pi, K = probe_1ir_all_classes(G, pi, K, vertices=part, stats=self.stats)
            if cfg.probe_size2:
                pi, K = probe_inf_size2(G, pi, K, vertices=part, stats=self.stats)
            if cfg.probe_sizeB:
                pi, K = probe_inf_sizeB(G, pi, K, B=cfg.B, vertices=part, stats=self.stats)
            # found maps are automorphisms of (G, pi) for the coloring before the probe
            self._lift(K)
        self.pi = pi

    def iteration(self) -> None:
        cfg = self.cfg
        self.pi = refine(self.G, self.pi)
        self.singletons()
        if cfg.deg0:
            adj, perm = self.G.adj, self.pi.perm
            if any(not adj[perm[c]] for c in self.pi.cell_ids()):
                self.apply(remove_degree0)
            adj, perm, n = self.G.adj, self.pi.perm, self.G.n
            if n > 1 and any(len(adj[perm[c]]) == n - 1 for c in self.pi.cell_ids()):
                self.apply(remove_universal)
        if cfg.deg1 and any(len(self.G.adj[self.pi.perm[c]]) == 1 for c in self.pi.cell_ids()):
            self.apply(remove_degree1)
            # attachment cells whose leaves are all gone are now isolated
            if cfg.deg0 and any(not self.G.adj[self.pi.perm[c]] for c in self.pi.cell_ids()):
                self.apply(remove_degree0)
        if cfg.deg2_match or cfg.deg2_unique or cfg.deg2_flip:
            w = rep_weights(self.G, self.pi)
            if link_cells(w):
                if cfg.deg2_match and self.apply(reduce_obfuscated_matchings):
                    w = rep_weights(self.G, self.pi)
                if cfg.deg2_unique and self.apply(reduce_unique_endpoint_paths, t_cap=cfg.t_cap):
                    w = rep_weights(self.G, self.pi)
                if cfg.deg2_flip:
                    self.apply(reduce_obfuscated_edge_flip, weights=w)
        if cfg.edge_flip:
            G2, removed = flip_dense_pairs(self.G, self.pi)
            if removed:
                self.G = G2
                self.stats["edges_flipped"] += removed
        self.probe()
        self.singletons()

    def low_degree_left(self) -> bool:
        adj, perm = self.G.adj, self.pi.perm
        return any(len(adj[perm[c]]) <= 1 for c in self.pi.cell_ids())


def preprocess(G: ColoredGraph, cfg: ScheduleConfig | None = None, record_chain: bool = False) -> PreprocessReport:
    """Shrink ``G`` while keeping track of its automorphism group.

    Rounds run refinement, singleton removal, the degree-0/universal/degree-1
    and degree-2 reductions, edge flips and per-component probing, then drop
    singletons again.  Another round follows only while low-degree vertices
    remain and the round removed at least ``shrink_threshold`` of the vertices
    it started with.
    """
    cfg = cfg or ScheduleConfig()
    run = _Pipeline(G, cfg, record_chain)
    iterations = 0
    while True:
        start = run.G.n
        iterations += 1
        run.iteration()
        if run.G.n == 0 or not run.low_degree_left():
            break
        if run.G.n > (1 - cfg.shrink_threshold) * start:
            break
    Gr = run.G
    reduced = ColoredGraph(Gr.adj, run.pi.as_colors())
    return PreprocessReport(G, reduced, run.pi, run.F, run.ren, run.K, run.stats, iterations, run.chain)


def reconstruct_group(report: PreprocessReport, reduced_gens) -> list[SparseAutomorphism]:
    """Kernel generators plus lifts of generators of the reduced graph, all over input ids."""
    out = list(report.kernel)
    for phi in reduced_gens:
        if not isinstance(phi, SparseAutomorphism):
            phi = SparseAutomorphism.from_array(phi)
        if not is_automorphism(report.graph, phi):
            raise LiftError("reduced generator is not an automorphism of the reduced graph")
        if phi:
            out.append(lift(phi, report.rep, report.renaming))
    return out
