"""Theorem-verification sweeps: predicted values against exact oracles.

Each sweep enumerates every instance of a result's hypothesis class within
a size budget, computes the structural prediction (closed form, classifier
verdict, or claimed property) and the exhaustive-solver oracle, and records
the pair.  Records are line-replayable: every one carries its instance in
graph6.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .classify import (
    block_graph_diam3_criterion,
    classify_cactus_rad2_diam2,
    classify_cactus_rad2_diam3,
    classify_radius1,
)
from .criticality import is_edge_critical
from .enumeration import EnumerationFilter, enumerate_graphs
from .families import FamilySpec, build, closed_form_chi_rho, closed_form_critical
from .graphio import emit_graph6, parse_graph6
from .graphs import (
    Graph,
    block_decomposition,
    bridges,
    components,
    delete_edge,
    delete_vertex,
    diameter,
    induced_subgraph,
    is_cactus,
    is_connected,
    is_tree,
    radius,
    universal_vertices,
)
from .independence import (
    alpha,
    check_lemma_rad3,
    haynes_check,
    is_alpha_critical,
    mis_avoiding,
)
from .iso import is_isomorphic
from .packing import chi_rho, diam2_formula, verify_packing_coloring
from .criticality import is_vertex_critical

THEOREMS: dict[str, "Sweep"] = {}

DEFAULT_JOBS = 1


@dataclass
class Sweep:
    theorem: str
    describe: Callable[[dict], str]
    payloads: Callable[[dict], list[dict]]
    evaluate: Callable[[dict], tuple[object, object, Optional[str]]]
    defaults: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    theorem: str
    description: str
    records: list[dict]
    wall_time_s: float

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def disagreements(self) -> list[dict]:
        return [r for r in self.records if not r["agree"]]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def summary(self) -> str:
        status = "OK" if self.ok else f"FAIL ({len(self.disagreements)} disagreements)"
        return (
            f"{self.theorem}: {status} — {self.total} instances, "
            f"{self.description}, {self.wall_time_s:.2f}s"
        )

    def write_ldjson(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for rec in self.records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")


def _register(theorem: str, describe, payloads, evaluate, **defaults):
    THEOREMS[theorem] = Sweep(theorem, describe, payloads, evaluate, defaults)


def _graph_of(payload: dict) -> Graph:
    if "spec" in payload and payload["spec"] is not None:
        from .families import parse_spec

        return build(parse_spec(payload["spec"])).graph
    return parse_graph6(payload["g6"])


def evaluate_payload(theorem: str, payload: dict) -> dict:
    sweep = THEOREMS[theorem]
    t0 = time.perf_counter()
    predicted, oracle, spec = sweep.evaluate(payload)
    micros = int((time.perf_counter() - t0) * 1e6)
    G = _graph_of(payload)
    return {
        "theorem": theorem,
        "instance_g6": emit_graph6(G),
        "spec": spec,
        "predicted": predicted,
        "oracle": oracle,
        "agree": predicted == oracle,
        "micros": micros,
    }


def _eval_star(args):
    return evaluate_payload(*args)


def run_sweep(
    theorem: str,
    *,
    max_vertices: Optional[int] = None,
    base_max: Optional[int] = None,
    jobs: int = DEFAULT_JOBS,
    corpus: Optional[list[Graph]] = None,
) -> VerificationReport:
    """Run one theorem sweep and return its report.

    ``corpus`` substitutes externally supplied graphs for internal
    enumeration in class-based sweeps; the sweep's own hypothesis-class
    predicate still filters them.
    """
    if theorem not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem!r}; known: {sorted(THEOREMS)}")
    sweep = THEOREMS[theorem]
    cfg = dict(sweep.defaults)
    if max_vertices is not None:
        cfg["max_vertices"] = max_vertices
    if base_max is not None:
        cfg["base_max"] = base_max
    cfg["corpus"] = corpus
    t0 = time.perf_counter()
    payloads = sweep.payloads(cfg)
    if jobs > 1 and len(payloads) > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            records = pool.map(_eval_star, [(theorem, p) for p in payloads])
    else:
        records = [evaluate_payload(theorem, p) for p in payloads]
    records.sort(key=lambda r: (r["instance_g6"], r["spec"] or ""))
    wall = time.perf_counter() - t0
    return VerificationReport(theorem, sweep.describe(cfg), records, wall)


# -- shared generators ---------------------------------------------------------


def _spec_payloads(specs: Iterable[FamilySpec]) -> list[dict]:
    return [{"spec": str(s)} for s in specs]


def _class_payloads(cfg: dict, filt: EnumerationFilter, predicate=None) -> list[dict]:
    corpus = cfg.get("corpus")
    if corpus is not None:
        graphs = [g for g in corpus if g.n <= filt.max_n]
        if predicate is not None:
            graphs = [g for g in graphs if predicate(g)]
        else:
            graphs = [g for g in graphs if _matches_filter(g, filt)]
    else:
        graphs = list(enumerate_graphs(filt))
        if predicate is not None:
            graphs = [g for g in graphs if predicate(g)]
    return [{"g6": emit_graph6(g)} for g in graphs]


def _matches_filter(g: Graph, filt: EnumerationFilter) -> bool:
    if not (filt.min_n <= g.n <= filt.max_n):
        return False
    if filt.structure == "tree" and not is_tree(g):
        return False
    if filt.structure == "cactus" and not is_cactus(g):
        return False
    if filt.connected is not None and is_connected(g) != filt.connected:
        return False
    if filt.radius is not None and (not is_connected(g) or radius(g) != filt.radius):
        return False
    if filt.diameter is not None and (not is_connected(g) or diameter(g) != filt.diameter):
        return False
    return True


def _g15_specs(max_v: int) -> list[FamilySpec]:
    out = []
    for m1 in range((max_v - 5) // 2 + 1):
        for k1 in range(max_v - 5 - 2 * m1 + 1):
            if k1 + m1 >= 1 and 5 + k1 + 2 * m1 <= max_v:
                out.append(FamilySpec("gqr", r=5, pairs=((k1, m1),)))
    return out


def _gq2_specs(r: int, max_v: int) -> list[FamilySpec]:
    out = []
    budget = max_v - r
    for k1 in range(budget + 1):
        for m1 in range((budget - k1) // 2 + 1):
            if k1 + m1 < 1:
                continue
            for k2 in range(budget - k1 - 2 * m1 + 1):
                for m2 in range((budget - k1 - 2 * m1 - k2) // 2 + 1):
                    if k2 + m2 < 1:
                        continue
                    out.append(FamilySpec("gqr", r=r, pairs=((k1, m1), (k2, m2))))
    return out


def _g14_specs(max_v: int) -> list[FamilySpec]:
    out = []
    for m1 in range((max_v - 4) // 2 + 1):
        for k1 in range(max_v - 4 - 2 * m1 + 1):
            if k1 + m1 >= 1:
                out.append(FamilySpec("gqr", r=4, pairs=((k1, m1),)))
    return out


def _h_lemma7_specs(max_v: int) -> list[FamilySpec]:
    out = []
    budget = max_v - 2
    for m1 in range(1, budget // 2 + 1):
        for k1 in range(budget - 2 * m1 + 1):
            for k2 in range(2, budget - 2 * m1 - k1 + 1):
                out.append(FamilySpec("h", pairs=((k1, m1), (k2, 0))))
    return out


# -- evaluators ----------------------------------------------------------------


def _eval_formula(payload):
    from .families import parse_spec

    spec = parse_spec(payload["spec"])
    predicted = closed_form_chi_rho(spec)
    oracle = chi_rho(build(spec).graph).value
    return predicted, oracle, str(spec)


def _eval_closed_critical(payload):
    from .families import parse_spec

    spec = parse_spec(payload["spec"])
    predicted = closed_form_critical(spec)
    oracle = is_edge_critical(build(spec).graph).critical
    return predicted, oracle, str(spec)


def _eval_never_critical(payload):
    from .families import parse_spec

    spec = parse_spec(payload["spec"])
    oracle = is_edge_critical(build(spec).graph).critical
    return False, oracle, str(spec)


_register(
    "pro4",
    lambda cfg: f"pendant-decorated C5, one cut vertex, |V|<={cfg['max_vertices']}: formula vs solver",
    lambda cfg: _spec_payloads(_g15_specs(cfg["max_vertices"])),
    _eval_formula,
    max_vertices=14,
)

_register(
    "pro5",
    lambda cfg: f"decorated C5 with k1>0, |V|<={cfg['max_vertices']}: never critical",
    lambda cfg: _spec_payloads(
        s for s in _g15_specs(cfg["max_vertices"]) if s.pairs[0][0] > 0
    ),
    _eval_never_critical,
    max_vertices=12,
)

_register(
    "pro6",
    lambda cfg: "single triangle on C5: not critical",
    lambda cfg: _spec_payloads([FamilySpec("gqr", r=5, pairs=((0, 1),))]),
    _eval_never_critical,
)

_register(
    "pro7",
    lambda cfg: f"decorated C5, one cut vertex, |V|<={cfg['max_vertices']}: criticality iff k1=0, m1>=2",
    lambda cfg: _spec_payloads(_g15_specs(cfg["max_vertices"])),
    _eval_closed_critical,
    max_vertices=12,
)

_register(
    "pro8",
    lambda cfg: f"decorated C5, two cut vertices, |V|<={cfg['max_vertices']}: formula vs solver",
    lambda cfg: _spec_payloads(_gq2_specs(5, cfg["max_vertices"])),
    _eval_formula,
    max_vertices=14,
)

_register(
    "pro9",
    lambda cfg: f"decorated C5, two cut vertices, |V|<={cfg['max_vertices']}: never critical",
    lambda cfg: _spec_payloads(_gq2_specs(5, cfg["max_vertices"])),
    _eval_never_critical,
    max_vertices=12,
)

_register(
    "pro10",
    lambda cfg: f"decorated C4, one cut vertex, |V|<={cfg['max_vertices']}: formula vs solver",
    lambda cfg: _spec_payloads(_g14_specs(cfg["max_vertices"])),
    _eval_formula,
    max_vertices=14,
)

_register(
    "pro11",
    lambda cfg: f"decorated C4, one cut vertex, |V|<={cfg['max_vertices']}: never critical",
    lambda cfg: _spec_payloads(_g14_specs(cfg["max_vertices"])),
    _eval_never_critical,
    max_vertices=12,
)

_register(
    "pro12",
    lambda cfg: f"decorated C4, two cut vertices, |V|<={cfg['max_vertices']}: formula vs solver",
    lambda cfg: _spec_payloads(_gq2_specs(4, cfg["max_vertices"])),
    _eval_formula,
    max_vertices=14,
)

_register(
    "pro13",
    lambda cfg: f"decorated C4, two cut vertices, |V|<={cfg['max_vertices']}: criticality clauses",
    lambda cfg: _spec_payloads(_gq2_specs(4, cfg["max_vertices"])),
    _eval_closed_critical,
    max_vertices=12,
)

_register(
    "pro15",
    lambda cfg: f"decorated C4, leaves only, k1+k2>=3, |V|<={cfg['max_vertices']}: never critical",
    lambda cfg: _spec_payloads(
        s
        for s in _gq2_specs(4, cfg["max_vertices"])
        if s.pairs[0][1] == 0 and s.pairs[1][1] == 0
        and s.pairs[0][0] + s.pairs[1][0] >= 3
    ),
    _eval_never_critical,
    max_vertices=12,
)

_register(
    "pro16",
    lambda cfg: f"decorated C4, mixed pendants, |V|<={cfg['max_vertices']}: never critical",
    lambda cfg: _spec_payloads(
        s
        for s in _gq2_specs(4, cfg["max_vertices"])
        if s.pairs[0][1] + s.pairs[1][1] >= 1
        and s.pairs[0][0] + s.pairs[1][0] >= 1
    ),
    _eval_never_critical,
    max_vertices=12,
)


def _eval_lemma4(payload):
    G = parse_graph6(payload["g6"])
    bound = G.n - alpha(G) + 1
    value = chi_rho(G).value
    holds = value <= bound
    if diameter(G) == 2:
        holds = holds and value == bound
    return True, holds, None


_register(
    "lemma4",
    lambda cfg: f"connected graphs n<={cfg['max_vertices']}: chi <= |V|-alpha+1, equality at diameter 2",
    lambda cfg: _class_payloads(
        cfg, EnumerationFilter(max_n=cfg["max_vertices"], connected=True)
    ),
    _eval_lemma4,
    max_vertices=7,
)


def _eval_lemma5(payload):
    from .families import parse_spec

    spec = parse_spec(payload["spec"])
    return spec.n + 2, chi_rho(build(spec).graph).value, str(spec)


_register(
    "lemma5",
    lambda cfg: f"friendship graphs with at most {(cfg['max_vertices'] - 1) // 2} triangles: chi = n+2",
    lambda cfg: _spec_payloads(
        FamilySpec("friendship", n=i)
        for i in range(1, (cfg["max_vertices"] - 1) // 2 + 1)
    ),
    _eval_lemma5,
    max_vertices=11,
)


def _eval_lemma6(payload):
    from .families import parse_spec

    spec = parse_spec(payload["spec"])
    G = build(spec).graph
    rep = is_edge_critical(G)
    return True, rep.base_chi_rho == 4 and rep.critical, str(spec)


_register(
    "lemma6",
    lambda cfg: "C4 with one leaf on each of two adjacent vertices: 4-critical",
    lambda cfg: _spec_payloads([FamilySpec("gqr", r=4, pairs=((1, 0), (1, 0)))]),
    _eval_lemma6,
)


def _eval_lemma7(payload):
    from .families import parse_spec

    spec = parse_spec(payload["spec"])
    G = build(spec).graph
    predicted = G.n - alpha(G) + 1
    return predicted, chi_rho(G).value, str(spec)


_register(
    "lemma7",
    lambda cfg: f"double-hub H(k1,m1;k2,0), m1>=1, k2>=2, |V|<={cfg['max_vertices']}: chi = |V|-alpha+1",
    lambda cfg: _spec_payloads(_h_lemma7_specs(cfg["max_vertices"])),
    _eval_lemma7,
    max_vertices=13,
)


def _c3_main_block_cactus(g: Graph) -> bool:
    if not is_cactus(g) or g.edge_count < g.n:
        return False
    cyc = [b.order for b in block_decomposition(g).blocks if b.is_cycle]
    return bool(cyc) and max(cyc) == 3


def _eval_lemma8(payload):
    G = parse_graph6(payload["g6"])
    verdict = block_graph_diam3_criterion(G)
    return verdict.predicted_critical, is_edge_critical(G).critical, None


_register(
    "lemma8",
    lambda cfg: f"diameter-3 block-graph cacti with triangle main block, n<={cfg['max_vertices']}: central-block criterion vs solver",
    lambda cfg: _class_payloads(
        cfg,
        EnumerationFilter(max_n=cfg["max_vertices"], structure="cactus", diameter=3),
        predicate=lambda g: is_cactus(g) and diameter(g) == 3 and _c3_main_block_cactus(g),
    ),
    _eval_lemma8,
    max_vertices=9,
)


def _teo1_instances() -> list[FamilySpec]:
    g = lambda *pairs: FamilySpec("gqr", r=3, pairs=tuple(pairs))
    h = lambda *pairs: FamilySpec("h", pairs=tuple(pairs))
    return [
        g((1, 0), (1, 0), (1, 0)),
        g((2, 0), (2, 0), (0, 1)),
        g((0, 2), (0, 2), (0, 2)), g((0, 3), (0, 2), (0, 2)),
        g((0, 2), (0, 2), (2, 0)), g((0, 3), (0, 2), (2, 0)),
        g((0, 2), (2, 0), (2, 0)), g((0, 3), (2, 0), (2, 0)),
        h((2, 0), (0, 1)),
        h((0, 2), (0, 2)), h((0, 3), (0, 2)),
        h((0, 2), (2, 0)), h((0, 3), (2, 0)),
    ]


_register(
    "teo1",
    lambda cfg: "triangle-main-block critical clauses at their two smallest parameter settings",
    lambda cfg: _spec_payloads(_teo1_instances()),
    _eval_closed_critical,
)


def _eval_teo3(payload):
    G = parse_graph6(payload["g6"])
    verdict = classify_cactus_rad2_diam2(G)
    return verdict.predicted_critical, is_edge_critical(G).critical, None


_register(
    "teo3",
    lambda cfg: f"radius-2 diameter-2 cacti n<={cfg['max_vertices']}: classifier vs solver",
    lambda cfg: _class_payloads(
        cfg,
        EnumerationFilter(max_n=cfg["max_vertices"], structure="cactus", radius=2, diameter=2),
        predicate=lambda g: is_cactus(g) and radius(g) == 2 and diameter(g) == 2,
    ),
    _eval_teo3,
    max_vertices=10,
)


def _eval_teo4(payload):
    G = parse_graph6(payload["g6"])
    verdict = classify_cactus_rad2_diam3(G)
    return verdict.predicted_critical, is_edge_critical(G).critical, None


_register(
    "teo4",
    lambda cfg: f"radius-2 diameter-3 cacti n<={cfg['max_vertices']}: classifier vs solver",
    lambda cfg: _class_payloads(
        cfg,
        EnumerationFilter(max_n=cfg["max_vertices"], structure="cactus", radius=2, diameter=3),
        predicate=lambda g: is_cactus(g) and radius(g) == 2 and diameter(g) == 3,
    ),
    _eval_teo4,
    max_vertices=10,
)


def _hub_plus(base: Graph) -> Graph:
    edges = base.edges() + [(v, base.n) for v in range(base.n)]
    return Graph(base.n + 1, edges)


def _hub_payloads(cfg) -> list[dict]:
    corpus = cfg.get("corpus")
    if corpus is not None:
        graphs = [g for g in corpus if g.n >= 2 and is_connected(g) and radius(g) == 1]
    else:
        bases = enumerate_graphs(EnumerationFilter(max_n=cfg["base_max"]))
        graphs = [_hub_plus(b) for b in bases]
    return [{"g6": emit_graph6(g)} for g in graphs]


def _eval_thm12(payload):
    G = parse_graph6(payload["g6"])
    verdict = classify_radius1(G)
    return verdict.predicted_critical, is_edge_critical(G).critical, None


_register(
    "thm12",
    lambda cfg: f"hub joined to every graph on <={cfg['base_max']} vertices: classifier vs solver",
    _hub_payloads,
    _eval_thm12,
    base_max=6,
)


def _eval_pro14(payload):
    G = parse_graph6(payload["g6"])
    if G.n < 3:
        return True, True, None
    critical = is_edge_critical(G).critical
    no_leaf = all(G.degree(v) != 1 for v in range(G.n))
    return True, (not critical) or no_leaf, None


_register(
    "pro14",
    lambda cfg: f"radius-1 graphs (hub + base<={cfg['base_max']}): critical implies no leaf",
    _hub_payloads,
    _eval_pro14,
    base_max=7,
)


def _eval_cor1(payload):
    G = parse_graph6(payload["g6"])
    if G.n < 3:
        return True, True, None
    if not is_edge_critical(G).critical:
        return True, True, None
    for u in sorted(universal_vertices(G)):
        rest, _ = delete_vertex(G, u)
        for comp in components(rest):
            sub, _ = induced_subgraph(rest, comp)
            if not is_alpha_critical(sub).critical:
                return True, False, None
    return True, True, None


_register(
    "cor1",
    lambda cfg: f"critical radius-1 graphs (hub + base<={cfg['base_max']}): stripped graph splits into alpha-critical parts",
    _hub_payloads,
    _eval_cor1,
    base_max=7,
)


def _eval_cor_haynes(payload):
    G = parse_graph6(payload["g6"])
    ok = all(mis_avoiding(G, (v,)) is not None for v in range(G.n))
    return True, ok, None


_register(
    "cor-haynes",
    lambda cfg: f"alpha-critical connected graphs n<={cfg['max_vertices']}: some maximum independent set avoids each vertex",
    lambda cfg: _class_payloads(
        cfg,
        EnumerationFilter(max_n=cfg["max_vertices"], min_n=2, connected=True),
        predicate=lambda g: g.n >= 2 and is_connected(g) and is_alpha_critical(g).critical,
    ),
    _eval_cor_haynes,
    max_vertices=7,
)


def _lem_rad3_payloads(cfg) -> list[dict]:
    graphs = []
    for n in range(7, cfg["max_vertices"] + 1, 2):
        graphs.append(build(FamilySpec("cycle", n=n)).graph)
    small = enumerate_graphs(
        EnumerationFilter(max_n=min(7, cfg["max_vertices"]), min_n=4, connected=True)
    )
    for g in small:
        if radius(g) >= 3 and is_alpha_critical(g).critical:
            graphs.append(g)
    seen = set()
    out = []
    for g in graphs:
        key = emit_graph6(g)
        if key not in seen:
            seen.add(key)
            out.append({"g6": key})
    return out


def _eval_lem_rad3(payload):
    G = parse_graph6(payload["g6"])
    return True, check_lemma_rad3(G), None


_register(
    "lem-rad3",
    lambda cfg: f"alpha-critical graphs of radius>=3 (odd cycles to C{cfg['max_vertices']} plus enumerated): distance-3 pairs avoidable",
    _lem_rad3_payloads,
    _eval_lem_rad3,
    max_vertices=11,
)


def _eval_teo2(payload):
    G = parse_graph6(payload["g6"])
    return haynes_check(G), is_alpha_critical(G).critical, None


_register(
    "teo2",
    lambda cfg: f"connected graphs n<={cfg['max_vertices']}: per-edge criterion equals alpha-criticality",
    lambda cfg: _class_payloads(
        cfg, EnumerationFilter(max_n=cfg["max_vertices"], connected=True)
    ),
    _eval_teo2,
    max_vertices=7,
)


def _eval_obsv1(payload):
    G = parse_graph6(payload["g6"])
    d = diameter(G)
    for e in sorted(bridges(G)):
        H = delete_edge(G, e)
        for comp in components(H):
            sub, _ = induced_subgraph(H, comp)
            if sub.n >= 1 and diameter(sub) > d:
                return True, False, None
    return True, True, None


_register(
    "obsv1",
    lambda cfg: f"connected graphs n<={cfg['max_vertices']}: components after a bridge removal never exceed the diameter",
    lambda cfg: _class_payloads(
        cfg, EnumerationFilter(max_n=cfg["max_vertices"], min_n=2, connected=True)
    ),
    _eval_obsv1,
    max_vertices=7,
)


def _eval_lemma1(payload):
    from .families import parse_spec

    spec = parse_spec(payload["spec"])
    G = build(spec).graph
    want = spec.n // 2
    return True, radius(G) == want and diameter(G) == want, str(spec)


_register(
    "lemma1",
    lambda cfg: f"cycles up to C{cfg['max_vertices']}: radius = diameter = floor(n/2)",
    lambda cfg: _spec_payloads(
        FamilySpec("cycle", n=n) for n in range(3, cfg["max_vertices"] + 1)
    ),
    _eval_lemma1,
    max_vertices=12,
)


def _eval_mainblock(payload):
    G = parse_graph6(payload["g6"])
    lengths = [b.order for b in block_decomposition(G).blocks if b.is_cycle]
    return True, all(ln in (3, 4, 5) for ln in lengths), None


_register(
    "lem-mainblock",
    lambda cfg: f"radius-2 cacti n<={cfg['max_vertices']}: every cycle block is C3, C4 or C5",
    lambda cfg: _class_payloads(
        cfg,
        EnumerationFilter(max_n=cfg["max_vertices"], structure="cactus", radius=2),
        predicate=lambda g: is_cactus(g) and radius(g) == 2,
    ),
    _eval_mainblock,
    max_vertices=10,
)


def _eval_pro2(payload):
    G = parse_graph6(payload["g6"])
    c4 = build(FamilySpec("cycle", n=4)).graph
    c5 = build(FamilySpec("cycle", n=5)).graph
    return True, is_isomorphic(G, c4) or is_isomorphic(G, c5), None


_register(
    "pro2",
    lambda cfg: f"radius-2 diameter-2 cacti n<={cfg['max_vertices']}: only C4 and C5 exist",
    lambda cfg: _class_payloads(
        cfg,
        EnumerationFilter(max_n=cfg["max_vertices"], structure="cactus", radius=2, diameter=2),
        predicate=lambda g: is_cactus(g) and radius(g) == 2 and diameter(g) == 2,
    ),
    _eval_pro2,
    max_vertices=10,
)


def _eval_pro3(payload):
    G = parse_graph6(payload["g6"])
    predicted = G.n == 4  # the only radius-2 diameter-3 tree that is critical is P4
    return predicted, is_edge_critical(G).critical, None


_register(
    "pro3",
    lambda cfg: f"radius-2 diameter-3 trees n<={cfg['max_vertices']}: critical iff P4",
    lambda cfg: _class_payloads(
        cfg,
        EnumerationFilter(max_n=cfg["max_vertices"], structure="tree", radius=2, diameter=3),
        predicate=lambda g: is_tree(g) and radius(g) == 2 and diameter(g) == 3,
    ),
    _eval_pro3,
    max_vertices=10,
)
