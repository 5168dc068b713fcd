from __future__ import annotations

from functools import lru_cache
from pathlib import Path

import pytest

from factorcrit import graph6
from factorcrit.enumeration import enumerate_graphs
from factorcrit.kernels import available_backends, load_backend

DATA = Path(__file__).parent / "data"

ACCEPTANCE_TITLES = {
    1: "minimal 1-fc graphs on 3, 5, 7 vertices have min degree 2",
    2: "minimal 3-fc planar graphs on 5, 7, 9 vertices have min degree 4",
    3: "k-fc graphs (n <= 8, k = 1..3) are k-connected and (k+1)-edge-connected",
    4: "blossom perfect-matching decision equals exhaustive Tutte check, n <= 8",
    5: "3-fc graphs n <= 9: every 3-set leaves only even components",
    6: "3-fc graphs n <= 7: odd H with cut neighbourhood has |N(H)| >= 4",
    7: "deficiency structure on every edge of minimal 3-fc graphs n <= 9; K5 spot value",
    8: "planar graphs n <= 8 have min degree <= 5; bipartite planar m <= 2n-4",
    9: "minor search agrees with contraction oracle n <= 7; K5, K3,3, Petersen certified",
    10: "K4, K5, K6, C5 criticality pins",
    11: "graph6 round trip for n <= 8 and the three fixed strings",
    12: "suite output byte-identical for --jobs 1 and --jobs 8",
}

_acceptance_results: dict[int, str] = {}


@lru_cache(maxsize=None)
def graphs_of_order(n: int):
    return tuple(enumerate_graphs(n))


@lru_cache(maxsize=None)
def stream(name: str):
    with open(DATA / name, "rb") as fh:
        return tuple(graph6.decode(line) for line in fh if line.strip())


@pytest.fixture(params=available_backends())
def backend(request):
    return load_backend(request.param)


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or not marker.args:
        return
    cid = marker.args[0]
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        ok = call.excinfo is None
        prev = _acceptance_results.get(cid, "PASS")
        _acceptance_results[cid] = "PASS" if ok and prev == "PASS" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for cid, title in ACCEPTANCE_TITLES.items():
        status = _acceptance_results.get(cid, "NOT RUN")
        terminalreporter.write_line(f"ACCEPTANCE {cid:>2} {status:<7} {title}")
