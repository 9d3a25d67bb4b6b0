"""Acceptance suite: the eight headline guarantees, each timed and reported.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line
per criterion alongside its runtime budget.
"""

import json
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations

from helpers import graph_corpus
from ldpcbounds import (
    DecodeStatus,
    ErrorPattern,
    brute_force_f,
    cage_upper_bound,
    check_lemmas,
    decode_parallel,
    decode_serial,
    edge_vertex_incidence,
    girth,
    guaranteed_correction_count,
    inverse_edge_vertex_incidence,
    is_trapping_set,
    moore_bound,
    search_min_trapping_set,
    trapping_matches_decoder,
    trapping_set_size_bound,
    verify_main_theorem,
)
from ldpcbounds.alist import write_alist
from ldpcbounds.cages import build_gadget, cage, embed_gadget
from ldpcbounds.cli import main


@contextmanager
def criterion(number: int, budget_s: float, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        print(f"criterion {number}: FAIL - {title}: {exc!r}")
        raise
    elapsed = time.perf_counter() - start
    if elapsed >= budget_s:
        print(f"criterion {number}: FAIL - {title}: took {elapsed:.2f}s, budget {budget_s:g}s")
        raise AssertionError(f"criterion {number} exceeded its runtime budget")
    print(f"criterion {number}: PASS - {title} ({elapsed:.2f}s < {budget_s:g}s)")


def test_criterion_1_bound_formula_table():
    with criterion(1, 1.0, "bound formulas match hand evaluations exactly"):
        assert moore_bound(3, 5) == 10
        assert moore_bound(2, 6) == 6
        assert moore_bound(2, 4) == 4
        assert moore_bound(Fraction(3, 2), 4) == 3
        assert moore_bound(Fraction(5, 2), 5) == Fraction(29, 4)
        assert cage_upper_bound(3, 5) == Fraction(62, 3)
        assert cage_upper_bound(3, 6) == Fraction(118, 3)
        assert cage_upper_bound(4, 5) == 54


def test_criterion_2_weight_one_sweeps(
    tmp_path, capsys, code_g3_girth8_n96, code_g4_girth8_n128
):
    with criterion(2, 60.0, "weight-1 sweeps pass on girth-8 codes, both decoders"):
        assert guaranteed_correction_count(3, 8) == 1
        assert guaranteed_correction_count(4, 8) == 1
        for name, t in [("g3.alist", code_g3_girth8_n96), ("g4.alist", code_g4_girth8_n128)]:
            assert t.n <= 200 and girth(t) == 8
            path = tmp_path / name
            write_alist(t, path)
            exit_code = main(["verify-correction", "--code", str(path), "--weight", "1"])
            report = json.loads(capsys.readouterr().out)
            assert exit_code == 0
            for algo in ("parallel", "serial"):
                sweep = report["result"]["sweeps"][algo]
                assert sweep["patterns_checked"] == t.n
                assert sweep["all_corrected"] is True


def test_criterion_3_expansion_certificates(
    code_g3_girth6_n24,
    code_g3_girth8_n30,
    code_g4_girth6_n32,
    code_g4_girth8_n128,
    code_g5_girth6_n50,
):
    codes = [
        code_g3_girth6_n24,
        code_g3_girth8_n30,
        code_g4_girth6_n32,
        code_g4_girth8_n128,
        code_g5_girth6_n50,
    ]
    with criterion(3, 300.0, "exhaustive expansion certificates on five codes"):
        assert {t.gamma for t in codes} == {3, 4, 5}
        assert {girth(t) for t in codes} == {6, 8}
        for t in codes:
            cert = verify_main_theorem(t)
            assert cert.passed, (t.n, cert.worst_subset)
            assert cert.complete
            assert cert.k_max_checked == cert.k_max_required
            assert cert.threshold == Fraction(3 * t.gamma, 4)
            assert cert.worst_expansion > cert.threshold


def test_criterion_4_lemma_oracles(code_g3_girth6_n12):
    t = code_g3_girth6_n12
    with criterion(4, 60.0, "extremal edge counts and lemma flags on all small subsets"):
        assert brute_force_f(4, 4) == 4
        assert brute_force_f(5, 4) == 6
        assert brute_force_f(5, 5) == 5
        assert brute_force_f(4, 3) == 6
        subsets = 0
        for k in range(1, 7):
            for s in combinations(range(t.n), k):
                lc = check_lemmas(t, s)
                assert lc.lemma1_ok and lc.lemma2_ok, s
                subsets += 1
        assert subsets == 2509


def test_criterion_5_witness_equality(code_g3_girth8_n60):
    with criterion(5, 1.0, "gadget meets the size bound and traps both decoders"):
        gadget = build_gadget(3, 4)
        assert gadget.a == 4 == trapping_set_size_bound(3, 8).exact
        embedded = embed_gadget(code_g3_girth8_n60, gadget)
        assert is_trapping_set(embedded.graph, embedded.subset)
        pattern = ErrorPattern(embedded.graph.n, embedded.subset)
        for decode in (decode_parallel, decode_serial):
            res = decode(embedded.graph, pattern)
            assert res.status is DecodeStatus.FIXED_POINT
            assert res.rounds == 1
            assert res.final == pattern


def test_criterion_6_no_small_potential_trapping_sets(
    code_g3_girth8_n30, code_g3_girth8_n60, code_g3_girth8_n96
):
    codes = [code_g3_girth8_n30, code_g3_girth8_n60, code_g3_girth8_n96]
    with criterion(6, 60.0, "no potential trapping set below size 4 on three codes"):
        assert len({t.n for t in codes}) == 3
        for t in codes:
            assert t.gamma == 3 and girth(t) == 8
            res = search_min_trapping_set(t, 3, potential_only=True)
            assert res.found is None
            assert res.complete
            assert res.sizes_completed == 3


def test_criterion_7_iff_equivalence(code_g3_girth8_n30):
    t = code_g3_girth8_n30
    with criterion(7, 60.0, "structural iff behavioral over all subsets up to size 4"):
        assert t.n <= 30
        checked = 0
        for k in range(1, 5):
            for s in combinations(range(t.n), k):
                assert trapping_matches_decoder(t, s), s
                checked += 1
        assert checked == 31930


def test_criterion_8_transform_properties():
    with criterion(8, 60.0, "girth doubling and incidence round-trip on corpus and cages"):
        graphs = list(graph_corpus(seed=88, count=50))
        assert len(graphs) == 50
        graphs += [cage(d, g).graph for d, g in
                   [(3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (4, 5)]]
        for g in graphs:
            t = edge_vertex_incidence(g)
            assert girth(t) == 2 * girth(g)
            if g.edge_count:
                res = inverse_edge_vertex_incidence(t)
                assert res.collapsed_edges == 0
                assert res.graph == g
