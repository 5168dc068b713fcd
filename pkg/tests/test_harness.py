from __future__ import annotations

import json

import pytest

from factorcrit import graph6, harness
from factorcrit.errors import Graph6Error, GraphError
from factorcrit.families import complete, cycle, petersen
from factorcrit.graph import Graph
from factorcrit.harness import (
    FAIL,
    NA,
    PASS,
    SUITES,
    describe_graph,
    evaluate,
    format_jsonl,
    format_tsv,
    load_source,
    run_suite,
)
from factorcrit.matching import BarrierCertificate, verify_barrier
from factorcrit.planarity import MinorEmbedding, verify_minor_embedding

K5_G6 = graph6.encode(complete(5))


def test_conjecture_n5_k1():
    summary = run_suite(load_source(n=5), "conjecture", k=1)
    assert summary.total_graphs == 34
    assert summary.failures == []
    assert summary.per_check_counts()["conjecture"][PASS] == 2


def test_tutte_n4():
    summary = run_suite(load_source(n=4), "tutte-crosscheck")
    assert summary.total_graphs == 11
    assert summary.per_check_counts() == {"tutte": {PASS: 11, FAIL: 0, NA: 0}}


def test_k5_file(tmp_path):
    path = tmp_path / "k5.g6"
    path.write_bytes(K5_G6 + b"\n")
    summary = run_suite(load_source(path=path), "conjecture", k=3)
    (rec,) = summary.records
    assert rec.facts["minimal_kfc"] is True
    assert rec.facts["min_degree"] == 4
    assert rec.checks == {"conjecture": PASS, "planar-theorem": NA}


@pytest.mark.parametrize("suite", SUITES)
def test_every_check_once_and_counts_consistent(suite):
    summary = run_suite(load_source(n=5), suite)
    names = set(summary.per_check_counts())
    for rec in summary.records:
        assert set(rec.checks) == names
    for name, counts in summary.per_check_counts().items():
        assert sum(counts.values()) == summary.total_graphs
    assert summary.failures == [r for r in summary.records if FAIL in r.checks.values()]


def test_sorted_by_graph6():
    summary = run_suite(load_source(n=6), "lemmas")
    ids = [r.graph_id for r in summary.records]
    assert ids == sorted(ids)


def test_jobs_do_not_change_output(tmp_path):
    lines = load_source(n=6)
    a = format_jsonl(run_suite(lines, "property-p", k=3, jobs=1), True)
    b = format_jsonl(run_suite(lines, "property-p", k=3, jobs=3), True)
    assert a == b


def test_duplicates_keep_stream_order(tmp_path):
    path = tmp_path / "dup.g6"
    path.write_bytes(b"D~{\nC~\nD~{\n")
    summary = run_suite(load_source(path=path), "conjecture", jobs=2)
    assert [(r.graph_id, r.index) for r in summary.records] == [("C~", 1), ("D~{", 0), ("D~{", 2)]


def test_fail_records_carry_labelled_certificates(monkeypatch):
    monkeypatch.setattr(harness, "min_degree", lambda g: 99)
    rec = evaluate(complete(5), "conjecture", k=3)
    assert rec.checks["conjecture"] == FAIL
    out = rec.to_dict()
    assert out["certificates"]["conjecture"]["label"] == "conjecture-counterexample"
    rec = evaluate(cycle(5), "conjecture", k=1)
    assert rec.to_dict()["certificates"]["conjecture"]["label"] == "implementation-bug"
    # planar minimal 3-fc graph from the n = 7 enumeration
    rec = evaluate(graph6.decode("FLr~o"), "conjecture", k=3)
    assert rec.checks["planar-theorem"] == FAIL
    assert rec.to_dict()["certificates"]["planar-theorem"]["label"] == "implementation-bug"


def test_passing_certificates_only_on_request():
    rec = evaluate(petersen(), "planarity-crosscheck")
    assert rec.checks["planarity"] == NA  # beyond the contraction oracle
    assert "certificates" not in rec.to_dict()
    assert "planarity" in rec.to_dict(with_certificates=True)["certificates"]


def test_certificates_reverify():
    for g in (complete(5), graph6.decode("FK~vg")):
        rec = evaluate(g, "planarity-crosscheck")
        cert = rec.certificates["planarity"]
        emb = MinorEmbedding(cert["target"], tuple(frozenset(b) for b in cert["branch_sets"].values()))
        assert verify_minor_embedding(g, emb)
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    rec = evaluate(star, "tutte-crosscheck")
    b = rec.certificates["tutte"]["barrier"]
    cert = BarrierCertificate(
        frozenset(b["S"]), tuple(frozenset(c) for c in b["odd_components"]), b["deficiency"]
    )
    assert verify_barrier(star, cert)


def test_property_p_suite_on_k5():
    rec = evaluate(complete(5), "property-p")
    assert rec.checks == {
        "deficiency-structure": PASS,
        "property-p-verified": PASS,
        "contraction-bound": NA,
    }
    assert rec.facts["property_p_cuts"] == rec.facts["edge_sides"] == 20


def test_describe_examples():
    rec = describe_graph(graph6.encode(complete(4)))
    assert rec.facts["planar"] and rec.facts["vertex_connectivity"] == 3
    assert rec.facts["minimal_kfc"] == {"0": False, "2": True}
    rec = describe_graph("D~{")
    assert not rec.facts["planar"]
    assert rec.certificates["planarity"]["target"] == "K5"
    assert rec.facts["minimal_kfc"]["3"] is True
    rec = describe_graph(graph6.encode(cycle(5)))
    assert rec.facts["planar"] and rec.facts["min_degree"] == 2
    assert rec.facts["minimal_kfc"] == {"1": True}
    assert not rec.failed


def test_describe_parse_error():
    with pytest.raises(Graph6Error) as info:
        describe_graph("D~")
    assert info.value.offset == 2


def test_errors(tmp_path):
    with pytest.raises(GraphError):
        run_suite([], "nope")
    with pytest.raises(GraphError):
        load_source()
    with pytest.raises(GraphError):
        load_source(n=3, path="x")
    with pytest.raises(OSError):
        load_source(path=tmp_path / "missing.g6")
    bad = tmp_path / "bad.g6"
    bad.write_bytes(b"D~{\nD~\n")
    with pytest.raises(Graph6Error, match="line 2"):
        load_source(path=bad)


def test_formats():
    summary = run_suite(load_source(n=3), "tutte-crosscheck")
    lines = format_jsonl(summary).splitlines()
    assert len(lines) == 5
    assert json.loads(lines[-1])["summary"]["total_graphs"] == 4
    assert "wall" not in lines[-1]
    tsv = format_tsv(summary).splitlines()
    assert tsv[0].split("\t") == ["graph6", "n", "m", "tutte"]
    assert tsv[-1].startswith("# total_graphs\t4")
