"""Executable checks of the edge-connectivity statements, per complex and in campaigns.

For a simplicial d-polytope with minimum degree delta and edge connectivity
lambda the checks are:

* every minimum cut is trivial whenever lambda <= 4d - 7 (unconditionally for d = 3);
* lambda >= min(delta, 4d - 6);
* the graph is d-connected;
* a nontrivial minimum cut of a d-connected graph touches at least d
  vertices on each side.

Only complexes whose provenance guarantees polytopality can violate these;
other spheres are analysed but never counted against them.
"""

from __future__ import annotations

import json
import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .complex import SimplicialComplex, link, min_degree, require_valid, skeleton_graph, validate, write_facet_list
from .constructions import (
    LabeledConstruction,
    nontrivial_cut_polytope,
    random_connected_sum_sphere,
    random_plane_triangulation,
)
from .cuts import (
    ORACLE_MAX_N,
    EdgeCut,
    brute_force_min_cuts,
    classify,
    find_nontrivial_min_cut,
    global_min_cut,
    vertex_connectivity_at_least,
)
from .errors import InvalidInputError, OracleScaleExceeded

log = logging.getLogger(__name__)

FAMILIES = ("plane-triangulations", "connected-sum-spheres", "proposition-constructions")
WORKERS_ENV = "POLYCUT_WORKERS"
# uniform flips keep a degree-3 vertex; biased ones reach minimum degree 4 and 5
FLIP_BIASES = (0.0, 0.5, 1.0)


def trivial_cut_threshold(d: int) -> int:
    """Largest minimum-cut size at which triviality is guaranteed: 4d - 7."""
    return 4 * d - 7


def guaranteed_edge_connectivity(delta: int, d: int) -> int:
    return min(delta, 4 * d - 6)


@dataclass
class VerificationReport:
    d: int
    n_vertices: int
    delta: int
    lambda_: int
    theorem_applicable: bool
    all_min_cuts_trivial: bool
    corollary_holds: bool
    lemma21_holds: bool | None
    witness: EdgeCut | None
    provenance: dict
    polytopal: bool
    balinski_holds: bool
    oracle_checked: bool = False
    oracle_min_cuts: int | None = None
    oracle_nontrivial_min_cuts: int | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def contradiction(self) -> bool:
        return bool(self.violations)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "n_vertices": self.n_vertices,
            "delta": self.delta,
            "lambda": self.lambda_,
            "theorem_applicable": self.theorem_applicable,
            "all_min_cuts_trivial": self.all_min_cuts_trivial,
            "corollary_holds": self.corollary_holds,
            "lemma21_holds": self.lemma21_holds,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "provenance": self.provenance,
            "polytopal": self.polytopal,
            "balinski_holds": self.balinski_holds,
            "oracle_checked": self.oracle_checked,
            "oracle_min_cuts": self.oracle_min_cuts,
            "oracle_nontrivial_min_cuts": self.oracle_nontrivial_min_cuts,
            "contradiction": self.contradiction,
            "violations": list(self.violations),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def analyze(
    complex: SimplicialComplex,
    provenance: dict | None = None,
    polytopal: bool | None = None,
    force_oracle: bool = False,
) -> VerificationReport:
    """Compute delta and lambda, decide whether a nontrivial minimum cut exists, and check the statements.

    ``polytopal`` defaults to True for d = 3 (every simplicial 2-sphere is a
    polytope boundary) and False otherwise.  The exhaustive oracle runs
    whenever n <= 22; ``force_oracle`` makes larger inputs an error instead of
    skipping it.
    """
    require_valid(complex)
    d = complex.dim_d
    if polytopal is None:
        polytopal = d == 3
    provenance = dict(provenance or {})
    g = skeleton_graph(complex)
    if force_oracle and g.n > ORACLE_MAX_N:
        raise OracleScaleExceeded(f"oracle requested for n={g.n} > {ORACLE_MAX_N}")

    delta = min_degree(g)
    lam = global_min_cut(g).cardinality
    witness = find_nontrivial_min_cut(g, lam)
    all_trivial = witness is None
    applicable = d == 3 or lam <= trivial_cut_threshold(d)
    corollary = lam >= guaranteed_edge_connectivity(delta, d)
    balinski = vertex_connectivity_at_least(g, d)
    violations = []

    nontrivial_cuts = [] if witness is None else [witness]
    oracle_checked = g.n <= ORACLE_MAX_N
    n_oracle = n_oracle_nontrivial = None
    if oracle_checked:
        oracle = brute_force_min_cuts(g)
        n_oracle = len(oracle)
        oracle_nontrivial = [c.cut for c in oracle if not c.classification.trivial]
        n_oracle_nontrivial = len(oracle_nontrivial)
        if oracle[0].cut.cardinality != lam:
            violations.append(f"oracle minimum {oracle[0].cut.cardinality} != global min cut {lam}")
        if bool(oracle_nontrivial) == all_trivial:
            violations.append("oracle disagrees with the flow search on the existence of a nontrivial minimum cut")
        nontrivial_cuts += oracle_nontrivial

    lemma21 = None
    if nontrivial_cuts and balinski:
        counts = [classify(g, cut) for cut in nontrivial_cuts]
        lemma21 = all(c.n_x >= d and c.n_xbar >= d for c in counts)
        if not lemma21:
            violations.append(f"nontrivial minimum cut of a {d}-connected graph touches fewer than {d} vertices on a side")

    if lam > delta:
        violations.append(f"lambda={lam} exceeds delta={delta}")
    if witness is not None and witness.cardinality != lam:
        violations.append(f"witness has {witness.cardinality} edges, lambda={lam}")
    if (not applicable or all_trivial) and lam <= delta and not corollary:
        violations.append("corollary fails although the triviality statement holds")
    if polytopal:
        if not balinski:
            violations.append(f"graph is not {d}-connected")
        if applicable and not all_trivial:
            violations.append(f"nontrivial minimum cut of size {lam} <= {trivial_cut_threshold(d)}")
        if not corollary:
            violations.append(f"lambda={lam} < min(delta, 4d-6)={guaranteed_edge_connectivity(delta, d)}")

    return VerificationReport(
        d=d,
        n_vertices=g.n,
        delta=delta,
        lambda_=lam,
        theorem_applicable=applicable,
        all_min_cuts_trivial=all_trivial,
        corollary_holds=corollary,
        lemma21_holds=lemma21,
        witness=witness,
        provenance=provenance,
        polytopal=polytopal,
        balinski_holds=balinski,
        oracle_checked=oracle_checked,
        oracle_min_cuts=n_oracle,
        oracle_nontrivial_min_cuts=n_oracle_nontrivial,
        violations=violations,
    )


# --- links --------------------------------------------------------------------


@dataclass
class LinkCheck:
    vertex: int
    n_vertices: int
    valid: bool
    connected: bool
    spans_neighbours: bool
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.valid and self.connected and self.spans_neighbours


@dataclass
class LinkReport:
    d: int
    checks: list[LinkCheck]
    sampled: bool

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[LinkCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "sampled": self.sampled,
            "n_checked": len(self.checks),
            "passed": self.passed,
            "failures": [asdict(c) for c in self.failures],
        }


def verify_links(
    complex: SimplicialComplex,
    sample_threshold: int = 200,
    sample_size: int = 50,
    seed: int = 0,
) -> LinkReport:
    """Each vertex link must be a valid sphere of one dimension less with a (d-1)-connected graph.

    The link's vertices must also be exactly the neighbours of the vertex.
    Above ``sample_threshold`` vertices a uniform sample is checked instead.
    """
    require_valid(complex)
    d = complex.dim_d
    if d < 3:
        raise InvalidInputError("link checks need d >= 3")
    g = skeleton_graph(complex)
    vertices = complex.vertices
    sampled = len(vertices) > sample_threshold
    if sampled:
        vertices = sorted(random.Random(seed).sample(vertices, sample_size))
    checks = []
    for v in vertices:
        lk = link(complex, v)
        rep = validate(lk)
        problems = list(rep.problems)
        spans = lk.vertex_set == g.adj[v]
        if not spans:
            problems.append("link vertices differ from the neighbourhood")
        connected = False
        if rep.valid:
            lg = skeleton_graph(lk)
            if lg.n > d - 1:
                connected = vertex_connectivity_at_least(lg, d - 1)
            if not connected:
                problems.append(f"link graph is not {d - 1}-connected")
        checks.append(LinkCheck(v, lk.n_vertices, rep.valid, connected, spans, problems))
    return LinkReport(d, checks, sampled)


# --- campaigns ------------------------------------------------------------------


@dataclass
class CampaignConfig:
    """Instance generator settings.

    ``plane-triangulations`` draws n in [n_min, n_max], a flip count in
    [0, flip_factor * n] and a flip bias from ``FLIP_BIASES``.  ``connected-sum-spheres`` glues parts_min..parts_max
    simplex or cyclic boundaries of dimension ``d``.
    ``proposition-constructions`` builds one instance per d in [d_min, d_max]
    and ignores ``count``.
    """

    family: str
    count: int = 100
    seed: int = 0
    n_min: int = 10
    n_max: int = 40
    flip_factor: int = 10
    d: int = 4
    parts_min: int = 2
    parts_max: int = 5
    max_cyclic_extra: int = 6
    d_min: int = 4
    d_max: int = 8
    links: bool = True
    out_dir: str | None = None
    workers: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidInputError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.count < 0:
            raise InvalidInputError("count must be non-negative")

    def to_dict(self) -> dict:
        out = asdict(self)
        del out["out_dir"], out["workers"]
        return out


@dataclass
class InstanceResult:
    index: int
    provenance: dict
    report: VerificationReport
    links: LinkReport | None
    designated_cut: int | None = None
    designated_cut_is_min_nontrivial: bool | None = None

    @property
    def failed(self) -> bool:
        return (
            self.report.contradiction
            or (self.links is not None and self.report.polytopal and not self.links.passed)
            or self.designated_cut_is_min_nontrivial is False
        )

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "provenance": self.provenance,
            "report": self.report.to_dict(),
            "links": None if self.links is None else self.links.to_dict(),
            "designated_cut": self.designated_cut,
            "designated_cut_is_min_nontrivial": self.designated_cut_is_min_nontrivial,
            "failed": self.failed,
        }


@dataclass
class CampaignSummary:
    family: str
    config: dict
    results: list[InstanceResult]
    persisted: list[str] = field(default_factory=list)

    @property
    def n_failed(self) -> int:
        return sum(r.failed for r in self.results)

    @property
    def passed(self) -> bool:
        return self.n_failed == 0

    def counts(self) -> dict:
        reports = [r.report for r in self.results]
        return {
            "instances": len(reports),
            "polytopal": sum(r.polytopal for r in reports),
            "all_min_cuts_trivial": sum(r.all_min_cuts_trivial for r in reports),
            "theorem_applicable": sum(r.theorem_applicable for r in reports),
            "applicable_and_all_trivial": sum(r.theorem_applicable and r.all_min_cuts_trivial for r in reports),
            "lambda_equals_delta": sum(r.lambda_ == r.delta for r in reports),
            "corollary_holds": sum(r.corollary_holds for r in reports),
            "oracle_checked": sum(r.oracle_checked for r in reports),
            "links_passed": sum(1 for r in self.results if r.links is not None and r.links.passed),
            "failed": self.n_failed,
        }

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "config": self.config,
            "counts": self.counts(),
            "failed_instances": [r.index for r in self.results if r.failed],
            "persisted": self.persisted,
            "instances": [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _instance_seeds(seed: int, count: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.randrange(2**32) for _ in range(count)]


def _jobs(config: CampaignConfig) -> list[tuple]:
    if config.family == "proposition-constructions":
        return [(i, config, None, d) for i, d in enumerate(range(config.d_min, config.d_max + 1))]
    return [(i, config, s, None) for i, s in enumerate(_instance_seeds(config.seed, config.count))]


def make_instance(config: CampaignConfig, seed: int | None, d: int | None):
    """Build one campaign instance: (complex, provenance, labeled construction or None)."""
    if config.family == "plane-triangulations":
        rng = random.Random(seed)
        n = rng.randint(config.n_min, config.n_max)
        flips = rng.randint(0, config.flip_factor * n)
        bias = rng.choice(FLIP_BIASES)
        cx = random_plane_triangulation(n, flips, seed, bias)
        return cx, {"family": config.family, "n": n, "flips": flips, "bias": bias, "seed": seed}, None
    if config.family == "connected-sum-spheres":
        rng = random.Random(seed)
        parts = rng.randint(config.parts_min, config.parts_max)
        cx = random_connected_sum_sphere(config.d, parts, seed, config.max_cyclic_extra)
        return cx, {"family": config.family, "d": config.d, "parts": parts, "seed": seed}, None
    lc = nontrivial_cut_polytope(d)
    return lc.complex, {"family": config.family, **lc.provenance}, lc


def run_instance(job: tuple) -> InstanceResult:
    index, config, seed, d = job
    cx, provenance, labeled = make_instance(config, seed, d)
    report = analyze(cx, provenance=provenance, polytopal=True)
    links = verify_links(cx, seed=index) if config.links else None
    result = InstanceResult(index, provenance, report, links)
    if labeled is not None:
        result.designated_cut = len(labeled.designated_cut)
        result.designated_cut_is_min_nontrivial = _check_designated(labeled, report)
    return result


def _check_designated(lc: LabeledConstruction, report: VerificationReport) -> bool:
    g = skeleton_graph(lc.complex)
    cut = EdgeCut.from_side(g, lc.side_x())
    return (
        cut.edges == lc.designated_cut
        and len(g.without_edges(cut.edges).components()) == 2
        and cut.cardinality == report.lambda_
        and not classify(g, cut).trivial
    )


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def campaign(config: CampaignConfig) -> CampaignSummary:
    """Generate, analyse and link-check every instance; persist failures under ``out_dir``.

    Instances are independent and may run in worker processes; results are
    ordered by instance index, so the summary does not depend on scheduling.
    """
    jobs = _jobs(config)
    workers = config.workers or default_workers()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_instance, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [run_instance(job) for job in jobs]
    results.sort(key=lambda r: r.index)

    summary = CampaignSummary(config.family, config.to_dict(), results)
    if config.out_dir is not None:
        out = Path(config.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for r in results:
            if r.failed:
                summary.persisted.append(persist_counterexample(config, r, out / "contradictions"))
        (out / "summary.json").write_text(summary.to_json())
    for r in results:
        if r.failed:
            log.warning("instance %d failed: %s", r.index, r.report.violations)
    return summary


def persist_counterexample(config: CampaignConfig, result: InstanceResult, directory: Path) -> str:
    directory.mkdir(parents=True, exist_ok=True)
    stem = f"instance_{result.index:04d}"
    job = _jobs(config)[result.index]
    cx, _, _ = make_instance(config, job[2], job[3])
    write_facet_list(cx, directory / f"{stem}.fl", header=[json.dumps(result.provenance, sort_keys=True)])
    (directory / f"{stem}.json").write_text(json.dumps(result.to_dict(), sort_keys=True, indent=2) + "\n")
    return f"contradictions/{stem}.fl"
