import pytest

from oracle import brute_min, monitored, nx_product, to_nx
from powdom.errors import InvalidParameterError
from powdom.families import (
    complete,
    complete_bipartite,
    cycle,
    empty,
    fan,
    path,
    star,
    wheel,
)
from powdom.corpus import connected_graphs
from powdom.graph import Graph
from powdom.theorems import (
    BOUND_HOLDS,
    BOUND_TIGHT,
    CPDS_ORDER_BOUND,
    CZF_CDS_BOUND,
    MATCH,
    PASSING,
    SKIPPED,
    SUITES,
    VIOLATION,
    ZF_DS_BOUND,
    HypothesisNotMet,
    cartesian_bounds,
    cartesian_characterization,
    cartesian_exact,
    cartesian_lex_path,
    check_cartesian_bound,
    check_cartesian_exact,
    check_corollary,
    check_lex,
    check_tensor,
    corollary_bound,
    has_violation,
    is_empty_pair,
    is_triangle,
    lex_cpds_case,
    lex_cpds_formula,
    run_suite,
    tensor_exact,
)

PAW = connected_graphs(4)[2]


def test_structural_tests():
    assert is_empty_pair(empty(2)) and not is_empty_pair(complete(2))
    assert is_triangle(cycle(3)) and not is_triangle(path(3))
    assert PAW.m == 4 and sorted(PAW.degree(v) for v in range(4)) == [1, 2, 2, 3]


@pytest.mark.parametrize("G, H, case, value", [
    (path(4), complete(2), 1, 2),
    (complete(3), empty(2), 2, 1),
    (complete(3), cycle(4), 3, 2),
    (cycle(5), path(3), 1, 3),
    (star(3), complete(3), 2, 1),
])
def test_lex_formula_examples(G, H, case, value):
    assert lex_cpds_case(G, H) == (case, value)
    assert lex_cpds_formula(G, H) == value


def test_lex_formula_rejects_trivial_or_disconnected_g():
    with pytest.raises(InvalidParameterError):
        lex_cpds_formula(Graph(1), complete(2))
    with pytest.raises(InvalidParameterError):
        lex_cpds_formula(empty(2), complete(2))
    with pytest.raises(InvalidParameterError):
        lex_cpds_formula(complete(2), Graph(1))


def test_lex_formula_accepts_disconnected_h():
    assert lex_cpds_formula(path(3), empty(3)) == 2


@pytest.mark.parametrize("G", [complete(3), star(3), PAW, complete(4)])
def test_lex_case_three_counterexample(G):
    # (u, 0) with u universal sees every vertex except (u, 2); (u, 1) then forces it
    H = cycle(4)
    assert lex_cpds_case(G, H) == (3, 2)
    g = nx_product("lexicographic", G, H)
    u = next(v for v in range(G.n) if G.degree(v) == G.n - 1)
    assert monitored(g, {u * H.n}) == set(g)
    assert brute_min(g, "cpds") == 1
    assert check_lex(G, H).verdict == VIOLATION


def test_cartesian_bounds_examples():
    bounds = dict(cartesian_bounds(complete(3), path(3)))
    assert bounds[CZF_CDS_BOUND] == 1
    assert dict(cartesian_bounds(cycle(4), cycle(4)))[CPDS_ORDER_BOUND] == 4
    assert [b for b, _ in cartesian_bounds(cycle(4), path(2))] == [CPDS_ORDER_BOUND, CZF_CDS_BOUND, ZF_DS_BOUND]


def test_bound_report_targets():
    r = check_cartesian_bound(ZF_DS_BOUND, cycle(4), path(3))
    assert r.invariant == "pds" and r.verdict in (BOUND_HOLDS, BOUND_TIGHT)
    r = check_cartesian_bound(CZF_CDS_BOUND, complete(3), path(3), expect_tight=True)
    assert (r.predicted, r.oracle, r.verdict) == (1, 1, BOUND_TIGHT)


def test_corollary_examples():
    assert corollary_bound("C", complete(3), 5) == 2
    assert corollary_bound("P", path(4), 3) == 2
    assert corollary_bound("W", complete(3), 4) == 3
    with pytest.raises(HypothesisNotMet):
        corollary_bound("W", complete(3), 3)


@pytest.mark.parametrize("family, G, n, predicted", [
    ("C", path(3), 3, 2),
    ("W", complete(3), 4, 3),
    ("F", path(3), 3, 2),
])
def test_corollary_tightness_counterexamples(family, G, n, predicted):
    build = {"C": cycle, "W": wheel, "F": fan}[family]
    g = nx_product("cartesian", G, build(n))
    r = check_corollary(family, G, n)
    assert r.predicted == predicted
    assert r.oracle == brute_min(g, "cpds") == predicted - 1
    assert r.verdict == VIOLATION


@pytest.mark.parametrize("family, m, n, value", [
    ("kmkn", 4, 4, 3),
    ("km-k1n", 5, 3, 3),
    ("k1x-k1y", 3, 4, 3),
    ("table-cm-fn", 3, 3, 2),
    ("table-cm-wn", 3, 4, 2),
    ("table-wm-wn", 4, 4, 3),
])
def test_cartesian_exact_examples(family, m, n, value):
    assert cartesian_exact(family, m, n) == value
    assert check_cartesian_exact(family, m, n).verdict == MATCH


@pytest.mark.parametrize("family, m, n", [
    ("km-k1n", 2, 3), ("kmkn", 4, 3), ("k1x-k1y", 4, 3), ("table-cm-wn", 3, 3),
])
def test_cartesian_out_of_range_is_skipped(family, m, n):
    with pytest.raises(HypothesisNotMet):
        cartesian_exact(family, m, n)
    r = check_cartesian_exact(family, m, n)
    assert r.verdict == SKIPPED and not r.hypotheses_met and r.reason


def test_unknown_ids_rejected():
    with pytest.raises(InvalidParameterError):
        cartesian_exact("nope", 3, 3)
    with pytest.raises(InvalidParameterError):
        tensor_exact("nope")
    with pytest.raises(InvalidParameterError):
        run_suite("nope")


def test_emended_rows_are_annotated():
    assert check_cartesian_exact("table-cm-wn", 3, 4).note


@pytest.mark.parametrize("G, H", [(complete(4), cycle(4)), (wheel(4), cycle(5)), (complete(4), complete(4))])
def test_characterization_examples(G, H):
    assert cartesian_characterization(G, H).verdict == MATCH


def test_characterization_converse_counterexample():
    # Z_c(K_4) = 3, yet F_3 □ K_4 has a connected power dominating set of size 2
    r = cartesian_characterization(fan(3), complete(4))
    assert brute_min(to_nx(complete(4)), "czfs") == 3
    assert r.oracle == brute_min(nx_product("cartesian", fan(3), complete(4)), "cpds") == 2
    assert r.verdict == VIOLATION


def test_characterization_skips_small_factors():
    assert cartesian_characterization(complete(3), cycle(4)).verdict == SKIPPED
    assert cartesian_characterization(cycle(4), cycle(4)).verdict == SKIPPED


@pytest.mark.parametrize("G, n, m", [(complete(3), 2, 2), (complete(3), 2, 3), (star(3), 3, 2)])
def test_lex_path_examples(G, n, m):
    r = cartesian_lex_path(G, n, m)
    assert (r.predicted, r.oracle, r.verdict) == (2, 2, MATCH)


def test_lex_path_needs_universal_vertex():
    assert cartesian_lex_path(cycle(4), 2, 2).verdict == SKIPPED


@pytest.mark.parametrize("case", [
    ("kmkn", 3, 4, 2),
    ("g-kxy", complete(4), 1, 2, 3),
    ("g-kxy", complete(4), 2, 2, 4),
    ("g-kxy", cycle(3), 1, 1, 1),
    ("multipartite-multipartite", (1, 1, 2), (1, 2, 2), 3),
    ("multipartite-multipartite", (1, 1, 2), (1, 1, 2), 2),
    ("g-multipartite", complete(4), (1, 2, 2), 3),
])
def test_tensor_examples(case):
    *args, value = case
    assert tensor_exact(*args) == value
    assert check_tensor(*args).verdict == MATCH


def test_tensor_hypotheses():
    with pytest.raises(HypothesisNotMet):
        tensor_exact("g-kxy", cycle(4), 1, 1)
    with pytest.raises(HypothesisNotMet):
        tensor_exact("two-universal", complete(3), star(3))
    with pytest.raises(HypothesisNotMet):
        tensor_exact("multipartite-multipartite", (2, 1, 1), (1, 1, 2))
    assert check_tensor("kmkn", 2, 3).verdict == SKIPPED


def test_tensor_reduction_example():
    G = complete(4)
    g = nx_product("tensor", G, complete(2))
    assert tensor_exact("g-kxy-reduction", G, 2, 3) == brute_min(g, "cds")
    assert brute_min(nx_product("tensor", G, complete_bipartite(2, 3)), "cpds") == tensor_exact(
        "g-kxy-reduction", G, 2, 3)


@pytest.mark.parametrize("G, H", [(complete(3), PAW), (path(4), PAW), (PAW, PAW)])
def test_tensor_value_one_without_k2(G, H):
    g = nx_product("tensor", G, H)
    assert brute_min(g, "cpds") == 1


def test_verdict_rules():
    assert PASSING == {MATCH, BOUND_HOLDS, BOUND_TIGHT, SKIPPED}
    r = check_lex(path(4), complete(2))
    assert r.to_dict()["verdict"] == MATCH
    assert not has_violation([r])


@pytest.mark.parametrize("suite_id, count", [("cartesian-kmkn", 10), ("cartesian-k1x-k1y", 3)])
def test_suite_sizes(suite_id, count):
    reports = run_suite(suite_id)
    assert len(reports) == count
    assert all(r.verdict == MATCH for r in reports)


@pytest.mark.parametrize("suite_id", [
    "cartesian-kmkn", "cartesian-km-k1n", "cartesian-k1x-k1y", "cartesian-table", "cartesian-lex-path",
    "bounds-thm2", "bounds-thm3", "bounds-pds", "bounds-thm3-tight", "tensor-exact", "tensor-universal",
    "tensor-multipartite",
])
def test_suites_without_violations(suite_id):
    reports = run_suite(suite_id)
    assert reports
    assert not has_violation(reports), [r.instance for r in reports if r.verdict == VIOLATION]


@pytest.mark.slow
def test_tensor_reduction_suite():
    assert not has_violation(run_suite("tensor-reduction", threads=4))


@pytest.mark.parametrize("suite_id", [
    "lex-theorem1", "lex-extended", "cartesian-corollaries", "cartesian-characterization", "tensor-k2-necessity",
])
def test_suites_with_known_counterexamples(suite_id):
    # these statements are contradicted by small instances pinned above
    assert has_violation(run_suite(suite_id))


def test_every_suite_is_covered():
    listed = {
        "cartesian-kmkn", "cartesian-km-k1n", "cartesian-k1x-k1y", "cartesian-table", "cartesian-lex-path",
        "bounds-thm2", "bounds-thm3", "bounds-pds", "bounds-thm3-tight", "tensor-exact", "tensor-universal",
        "tensor-multipartite", "tensor-reduction", "lex-theorem1", "lex-extended", "cartesian-corollaries",
        "cartesian-characterization", "tensor-k2-necessity",
    }
    assert listed == set(SUITES)


def test_suite_order_is_thread_independent():
    assert run_suite("bounds-thm3", seeds=10, threads=3) == run_suite("bounds-thm3", seeds=10)
