"""Verification suites over graph streams.

A *source* is either the built-in enumeration of order ``n`` or a graph6
file. Each graph becomes one :class:`VerificationRecord`; a suite is a fixed
list of named checks, each resolving to ``pass``, ``fail`` or
``not-applicable``. Records are sorted by graph6 string (then stream
position), so the report does not depend on the number of workers.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from . import graph6
from .connectivity import edge_connectivity, vertex_connectivity
from .criticality import (
    build_contraction_bipartite,
    even_components_counterexample,
    extract_property_p_cuts,
    find_deficiency_structure,
    is_k_factor_critical,
    is_minimal_kfc,
    neighborhood_counterexample,
    verify_property_p,
)
from .errors import ContractViolation, GraphError
from .graph import Graph, degree, induced_components, min_degree
from .matching import TUTTE_LIMIT, find_barrier, has_perfect_matching, max_matching, tutte_condition_holds
from .planarity import check_planarity, is_bipartite, is_planar_by_contraction, verify_minor_embedding

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"

SUITES = ("conjecture", "lemmas", "tutte-crosscheck", "property-p", "planarity-crosscheck")
DEFAULT_KS = (1, 2, 3)
CONTRACTION_LIMIT = 9


@dataclass
class VerificationRecord:
    graph_id: str
    index: int
    n: int
    m: int
    checks: dict[str, str] = field(default_factory=dict)
    facts: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return FAIL in self.checks.values()

    def to_dict(self, with_certificates: bool = False) -> dict:
        out = {
            "graph": self.graph_id,
            "n": self.n,
            "m": self.m,
            "checks": self.checks,
            "facts": self.facts,
        }
        # failures always carry their witness
        certs = {
            name: c
            for name, c in self.certificates.items()
            if with_certificates or self.checks.get(name) == FAIL
        }
        if certs:
            out["certificates"] = certs
        return out


@dataclass
class RunSummary:
    suite: str
    k: int | None
    records: list[VerificationRecord]
    wall_time: float = 0.0

    @property
    def total_graphs(self) -> int:
        return len(self.records)

    @property
    def failures(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.failed]

    def per_check_counts(self) -> dict[str, dict[str, int]]:
        counts: dict[str, dict[str, int]] = {}
        for r in self.records:
            for name, status in r.checks.items():
                slot = counts.setdefault(name, {PASS: 0, FAIL: 0, NA: 0})
                slot[status] += 1
        return dict(sorted(counts.items()))

    def to_dict(self) -> dict:
        # wall time is left out on purpose: reports must be byte-identical
        return {
            "summary": {
                "suite": self.suite,
                "k": self.k,
                "total_graphs": self.total_graphs,
                "checks": self.per_check_counts(),
                "failures": [r.graph_id for r in self.failures],
            }
        }


# -- per-graph facts, computed at most once -------------------------------------


class _Facts:
    def __init__(self, g: Graph):
        self.g = g
        self._kfc: dict[int, bool] = {}
        self._minimal: dict[int, bool] = {}

    def kfc(self, k: int) -> bool:
        if k not in self._kfc:
            self._kfc[k] = 0 <= k < self.g.n and is_k_factor_critical(self.g, k)
        return self._kfc[k]

    def minimal(self, k: int) -> bool:
        if k not in self._minimal:
            self._minimal[k] = self.kfc(k) and is_minimal_kfc(self.g, k)
        return self._minimal[k]

    @cached_property
    def min_degree(self) -> int | None:
        return min_degree(self.g) if self.g.n else None

    @cached_property
    def planarity(self):
        return check_planarity(self.g)

    @property
    def planar(self) -> bool:
        return self.planarity[0]

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.g)

    @cached_property
    def lam(self) -> int:
        return edge_connectivity(self.g)

    def min_degree_witness(self) -> dict:
        v = min(range(self.g.n), key=lambda x: (degree(self.g, x), x))
        return {"min_degree": self.min_degree, "vertex": v}


def _name(base: str, k: int, suffixed: bool) -> str:
    return f"{base}[k={k}]" if suffixed else base


def _suite_conjecture(rec: VerificationRecord, f: _Facts, k: int | None) -> None:
    ks = DEFAULT_KS if k is None else (k,)
    rec.facts["min_degree"] = f.min_degree
    for kk in ks:
        name = _name("conjecture", kk, k is None)
        minimal = f.minimal(kk)
        rec.facts[_name("minimal_kfc", kk, k is None)] = minimal
        if not minimal:
            rec.checks[name] = NA
            continue
        ok = f.min_degree == kk + 1
        rec.checks[name] = PASS if ok else FAIL
        rec.certificates[name] = f.min_degree_witness()
        if not ok:
            # k = 1, 2 are settled results, so a failure there is our bug
            label = "implementation-bug" if kk in (1, 2) else "conjecture-counterexample"
            rec.certificates[name]["label"] = label
    if k is None or k == 3:
        name = "planar-theorem"
        if not f.minimal(3) or not f.planar:
            rec.checks[name] = NA
        else:
            ok = f.min_degree == 4
            rec.checks[name] = PASS if ok else FAIL
            rec.certificates[name] = f.min_degree_witness()
            if not ok:
                rec.certificates[name]["label"] = "implementation-bug"
        rec.facts["planar"] = f.planar


def _suite_lemmas(rec: VerificationRecord, f: _Facts, k: int | None) -> None:
    g = f.g
    ks = DEFAULT_KS if k is None else (k,)
    for kk in ks:
        name = _name("lemma1", kk, k is None)
        if kk < 1 or not f.kfc(kk):
            rec.checks[name] = NA
            continue
        rec.checks[name] = PASS if f.kappa >= kk and f.lam >= kk + 1 else FAIL
        rec.certificates[name] = {"vertex_connectivity": f.kappa, "edge_connectivity": f.lam}

    if g.n == 0 or not f.planar:
        rec.checks["lemma2"] = NA
    else:
        rec.checks["lemma2"] = PASS if f.min_degree <= 5 else FAIL
        rec.certificates["lemma2"] = f.min_degree_witness()

    if g.n < 3 or not is_bipartite(g) or not f.planar:
        rec.checks["lemma3"] = NA
    else:
        rec.checks["lemma3"] = PASS if g.m <= 2 * g.n - 4 else FAIL
        rec.certificates["lemma3"] = {"edges": g.m, "bound": 2 * g.n - 4}

    three_fc = g.n >= 4 and f.kfc(3)
    if not three_fc:
        rec.checks["lemma4"] = NA
        rec.checks["lemma5"] = NA
        return
    S = even_components_counterexample(g)
    rec.checks["lemma4"] = PASS if S is None else FAIL
    if S is not None:
        odd = induced_components(g, frozenset(range(g.n)) - S).odd_components()
        rec.certificates["lemma4"] = {"S": sorted(S), "odd_components": [sorted(c) for c in odd]}
    H = neighborhood_counterexample(g)
    rec.checks["lemma5"] = PASS if H is None else FAIL
    if H is not None:
        nb = sorted(set().union(*(g.adj[v] for v in H)) - H)
        rec.certificates["lemma5"] = {"H": sorted(H), "neighborhood": nb}


def _suite_tutte(rec: VerificationRecord, f: _Facts, k: int | None) -> None:
    g = f.g
    if g.n > TUTTE_LIMIT:
        rec.checks["tutte"] = NA
        return
    pm = has_perfect_matching(g)
    tutte = tutte_condition_holds(g)
    rec.checks["tutte"] = PASS if pm == tutte else FAIL
    rec.facts["perfect_matching"] = pm
    cert: dict = {"matching": [list(p) for p in sorted(max_matching(g).pairs)]}
    barrier = find_barrier(g)
    if barrier is not None:
        cert["barrier"] = barrier.to_dict()
    rec.certificates["tutte"] = cert


def _suite_property_p(rec: VerificationRecord, f: _Facts, k: int | None) -> None:
    g = f.g
    names = ("deficiency-structure", "property-p-verified", "contraction-bound")
    if not f.minimal(3):
        for name in names:
            rec.checks[name] = NA
        return
    structures = []
    for u, v in g.edges():
        try:
            structures.append(find_deficiency_structure(g, u, v, 3))
        except ContractViolation as exc:
            rec.checks[names[0]] = FAIL
            rec.certificates[names[0]] = {"edge": [u, v], "reason": str(exc)}
            rec.checks[names[1]] = NA
            rec.checks[names[2]] = NA
            return
    rec.checks[names[0]] = PASS
    rec.certificates[names[0]] = {"structures": [d.to_dict() for d in structures]}

    present = 0
    bad_cut = None
    for d in structures:
        for cut in extract_property_p_cuts(g, d):
            if cut is None:
                continue
            present += 1
            if bad_cut is None and not verify_property_p(g, cut):
                bad_cut = cut
    rec.checks[names[1]] = PASS if bad_cut is None else FAIL
    if bad_cut is not None:
        rec.certificates[names[1]] = bad_cut.to_dict()
    rec.facts["property_p_cuts"] = present
    rec.facts["edge_sides"] = 2 * len(structures)

    if not f.planar:
        rec.checks[names[2]] = NA
        return
    worst = None
    for d in structures:
        h = build_contraction_bipartite(g, d)
        if h.edge_count > h.planar_edge_bound:
            worst = {"edge": list(d.edge), "edges": h.edge_count, "bound": h.planar_edge_bound}
            break
    rec.checks[names[2]] = PASS if worst is None else FAIL
    if worst is not None:
        rec.certificates[names[2]] = worst


def _suite_planarity(rec: VerificationRecord, f: _Facts, k: int | None) -> None:
    g = f.g
    planar, emb = f.planarity
    rec.facts["planar"] = planar
    if emb is not None:
        rec.certificates["planarity"] = emb.to_dict()
    if g.n > CONTRACTION_LIMIT:
        rec.checks["planarity"] = NA
        return
    agree = planar == is_planar_by_contraction(g)
    valid = emb is None or verify_minor_embedding(g, emb)
    rec.checks["planarity"] = PASS if agree and valid else FAIL
    if not (agree and valid):
        rec.certificates["planarity"] = {
            "minor_search_planar": planar,
            "embedding": emb.to_dict() if emb else None,
            "embedding_valid": valid,
        }


_RUNNERS = {
    "conjecture": _suite_conjecture,
    "lemmas": _suite_lemmas,
    "tutte-crosscheck": _suite_tutte,
    "property-p": _suite_property_p,
    "planarity-crosscheck": _suite_planarity,
}


def evaluate(g: Graph, suite: str, k: int | None = None, index: int = 0) -> VerificationRecord:
    """Run one suite on one graph."""
    if suite not in _RUNNERS:
        raise GraphError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    rec = VerificationRecord(graph6.encode(g).decode("ascii"), index, g.n, g.m)
    _RUNNERS[suite](rec, _Facts(g), k)
    return rec


def describe_graph(text: str | bytes) -> VerificationRecord:
    """Every basic invariant of one graph plus the conjecture and lemma checks."""
    g = graph6.decode(text)
    f = _Facts(g)
    rec = VerificationRecord(graph6.encode(g).decode("ascii"), 0, g.n, g.m)
    planar, emb = f.planarity
    rec.facts.update(
        min_degree=f.min_degree,
        vertex_connectivity=f.kappa,
        edge_connectivity=f.lam,
        planar=planar,
        bipartite=is_bipartite(g),
    )
    if emb is not None:
        rec.certificates["planarity"] = emb.to_dict()
    kfc = {}
    minimal = {}
    for kk in range(4):
        if kk >= g.n or (g.n - kk) % 2:
            continue
        kfc[str(kk)] = f.kfc(kk)
        if f.kfc(kk):
            minimal[str(kk)] = f.minimal(kk)
    rec.facts["k_factor_critical"] = kfc
    rec.facts["minimal_kfc"] = minimal
    _suite_conjecture(rec, f, None)
    _suite_lemmas(rec, f, None)
    for kk in DEFAULT_KS:
        rec.facts.pop(_name("minimal_kfc", kk, True), None)
    return rec


# -- streams and parallel execution -----------------------------------------------


def load_source(n: int | None = None, path: str | Path | None = None) -> list[bytes]:
    """graph6 lines of a built-in enumeration or of a file, in stream order."""
    if (n is None) == (path is None):
        raise GraphError("give exactly one of n or an input path")
    if n is not None:
        from .enumeration import enumerate_graphs

        return [graph6.encode(g) for g in enumerate_graphs(n)]
    lines = []
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                graph6.decode(line)
            except graph6.Graph6Error as exc:
                raise graph6.Graph6Error(f"line {lineno}: {exc.reason}", exc.offset) from None
            lines.append(line)
    return lines


def _run_chunk(args: tuple[int, list[bytes], str, int | None]) -> list[VerificationRecord]:
    start, chunk, suite, k = args
    return [evaluate(graph6.decode(line), suite, k, start + i) for i, line in enumerate(chunk)]


def _chunks(items: list[bytes], parts: int) -> list[tuple[int, list[bytes]]]:
    size = max(1, -(-len(items) // parts))
    return [(i, items[i : i + size]) for i in range(0, len(items), size)]


def run_suite(
    lines: list[bytes], suite: str, k: int | None = None, jobs: int = 1
) -> RunSummary:
    """Evaluate ``suite`` on every graph; ``jobs > 1`` uses worker processes.

    The stream is cut into contiguous line ranges up front, and the merged
    records are sorted by ``(graph6, position)``.
    """
    if suite not in _RUNNERS:
        raise GraphError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if k is not None and k < 0:
        raise GraphError("k must be non-negative")
    t0 = time.perf_counter()
    if jobs <= 0:
        jobs = os.cpu_count() or 1
    tasks = [(start, chunk, suite, k) for start, chunk in _chunks(lines, max(1, jobs * 4))]
    if jobs == 1 or len(tasks) <= 1:
        parts = [_run_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_chunk, tasks))
    records = sorted((r for part in parts for r in part), key=lambda r: (r.graph_id, r.index))
    return RunSummary(suite, k, records, time.perf_counter() - t0)


def format_jsonl(summary: RunSummary, with_certificates: bool = False) -> str:
    out = [json.dumps(r.to_dict(with_certificates), sort_keys=True) for r in summary.records]
    out.append(json.dumps(summary.to_dict(), sort_keys=True))
    return "\n".join(out) + "\n"


def format_tsv(summary: RunSummary) -> str:
    names = list(summary.per_check_counts())
    rows = ["\t".join(["graph6", "n", "m", *names])]
    for r in summary.records:
        rows.append("\t".join([r.graph_id, str(r.n), str(r.m), *(r.checks.get(c, "") for c in names)]))
    for name, counts in summary.per_check_counts().items():
        rows.append(f"# {name}\tpass={counts[PASS]}\tfail={counts[FAIL]}\tnot-applicable={counts[NA]}")
    rows.append(f"# total_graphs\t{summary.total_graphs}\tfailures\t{len(summary.failures)}")
    return "\n".join(rows) + "\n"


__all__ = [
    "PASS",
    "FAIL",
    "NA",
    "SUITES",
    "VerificationRecord",
    "RunSummary",
    "evaluate",
    "describe_graph",
    "load_source",
    "run_suite",
    "format_jsonl",
    "format_tsv",
]
