import json
from pathlib import Path

import pytest

from bonematch import (
    GuardExceededError,
    SearchConstraints,
    THEOREM_IDS,
    TheoremSpec,
    bs,
    build_graph,
    canonical_code,
    check_theorem,
    complete_graph,
    e_family,
    exhaustive_sweep,
    extremal_search,
    path_graph,
    random_connected,
    s_family,
    star_graph,
    t_family,
    t_tree,
)
from bonematch.harness import _instance_row, rows_to_csv


def cycle(k):
    return build_graph(k, [(v, (v + 1) % k) for v in range(k)])


def test_theorem_id_registry():
    assert THEOREM_IDS == (
        "thm-1.2-clawfree",
        "thm-1.3-bonefree",
        "thm-1.4-main",
        "thm-1.4-m3",
        "thm-1.6-q=2p+1",
        "thm-1.6-q=2p-1",
        "thm-1.8-single-even",
        "thm-1.8-all-even",
        "cor-1.3",
        "cor-2.3-snailhorn",
        "prop-5.1-mod",
    )
    with pytest.raises(ValueError):
        TheoremSpec("thm-9.9-unknown")


def test_clawfree_bound_on_triangle():
    r = check_theorem(complete_graph(3), TheoremSpec("thm-1.2-clawfree"))
    assert r.to_json_dict() == {
        "theorem": "thm-1.2-clawfree",
        "hypotheses": {"connected": True, "alpha_l < 3": True},
        "hypotheses_met": True,
        "bound": 1,
        "actual": 1,
        "pass": True,
        "vacuous": False,
        "indeterminate": False,
        "note": "",
    }


def test_clawfree_check_is_vacuous_on_a_claw():
    r = check_theorem(star_graph(3), TheoremSpec("thm-1.2-clawfree"))
    assert r.passed and r.vacuous
    assert r.hypotheses == (("connected", True), ("alpha_l < 3", False))


def test_bonefree_bound():
    r = check_theorem(cycle(6), TheoremSpec("thm-1.3-bonefree"))
    assert r.passed and not r.vacuous
    # auto parameter n = max(alpha_l + 1, 4) = 4, so the bound is n - 2 = 2
    assert (r.bound_value, r.actual_deficiency) == (2, 0)
    r6 = check_theorem(cycle(6), TheoremSpec("thm-1.3-bonefree", n=6))
    assert (r6.bound_value, r6.actual_deficiency) == (4, 0)
    r2 = check_theorem(bs(2, 2), TheoremSpec("thm-1.3-bonefree"))
    assert r2.passed and r2.vacuous
    assert ("no bones", False) in r2.hypotheses


def test_odd_admitting_bound_smallest_case():
    r = check_theorem(bs(2, 3), TheoremSpec("thm-1.4-m3", n=4))
    assert r.passed and not r.vacuous
    assert r.bound_value == 3 == r.actual_deficiency  # extremal: bound is tight
    names = [name for name, _ in r.hypotheses]
    assert names == [
        "connected",
        "n > 3",
        "alpha_l < n",
        "admitting all odd",
        "no p+q+-1 in admitting",
    ]


def test_odd_admitting_bound_auto_n():
    # n defaults to max(alpha_l + 1, 4); for the smallest odd bone that is 4
    r = check_theorem(bs(2, 3), TheoremSpec("thm-1.4-m3"))
    assert r.passed and r.bound_value == 3


def test_general_odd_admitting_bound():
    r = check_theorem(t_tree(5, 4), TheoremSpec("thm-1.4-main", m=5, n=4))
    assert r.passed and not r.vacuous
    assert r.bound_value == 11
    assert r.actual_deficiency == 5


def test_parameter_validation():
    with pytest.raises(ValueError):
        check_theorem(t_tree(5, 4), TheoremSpec("thm-1.4-main", m=4, n=4))
    with pytest.raises(ValueError):
        check_theorem(t_tree(5, 4), TheoremSpec("thm-1.4-main", n=4))
    with pytest.raises(ValueError):
        check_theorem(t_family(2, 3), TheoremSpec("thm-1.6-q=2p+1", p=2, n=4))


def test_two_odd_indices_bounds_are_tight_on_their_families():
    r = check_theorem(t_family(2, 3), TheoremSpec("thm-1.6-q=2p+1", p=3, n=4))
    assert r.passed and r.bound_value == 4 == r.actual_deficiency
    assert ("admitting within {3,7}", True) in r.hypotheses
    r2 = check_theorem(s_family(3, 3), TheoremSpec("thm-1.6-q=2p-1", p=3, n=4))
    assert r2.passed and r2.bound_value == 5 == r2.actual_deficiency
    assert ("admitting within {3,5}", True) in r2.hypotheses


def test_single_even_index_bound():
    r = check_theorem(e_family(3, 2, 2), TheoremSpec("thm-1.8-single-even", m=4, p=2, n=5))
    assert r.passed and not r.vacuous
    assert r.bound_value == 7 and r.actual_deficiency == 4
    assert ("omega < m", True) in r.hypotheses
    assert ("admitting within {4}", True) in r.hypotheses


def test_all_even_bound_is_tight_on_smallest_even_bone():
    r = check_theorem(bs(2, 2), TheoremSpec("thm-1.8-all-even", n=4))
    assert r.passed and r.bound_value == 2 == r.actual_deficiency
    assert ("omega < 3", True) in r.hypotheses
    assert ("admitting all even", True) in r.hypotheses


def test_tree_equality_check():
    r = check_theorem(t_tree(5, 4), TheoremSpec("cor-1.3", m=5, n=4))
    assert r.passed
    assert r.bound_value == 5 == r.actual_deficiency
    assert r.note == "equality check"
    r2 = check_theorem(t_tree(5, 5), TheoremSpec("cor-1.3", m=5, n=4))
    assert not r2.passed  # wrong parameters: value must match exactly


def test_snail_horn_criterion_on_critical_graph():
    r = check_theorem(bs(2, 3), TheoremSpec("cor-2.3-snailhorn"))
    assert r.passed and not r.vacuous
    assert r.hypotheses == (
        ("connected", True),
        ("nontrivial", True),
        ("deficiency-critical", True),
    )
    r2 = check_theorem(bs(2, 2), TheoremSpec("cor-2.3-snailhorn"))
    assert r2.passed and r2.vacuous  # not critical, so nothing to check


def test_congruence_report():
    r = check_theorem(t_tree(5, 4), TheoremSpec("prop-5.1-mod", m=5, n=4))
    assert r.passed
    assert r.bound_value is None
    assert r.note == "congruence report, not an asserted bound"


def test_guard_exceeded_yields_indeterminate():
    r = check_theorem(t_tree(7, 5), TheoremSpec("thm-1.8-single-even", m=5, p=1, n=5))
    assert r.indeterminate and not r.passed
    assert "clique number" in r.note


def test_exhaustive_sweep_counts():
    rep = exhaustive_sweep(4, TheoremSpec("thm-1.2-clawfree"))
    assert rep.passed
    d = rep.to_json_dict()
    # connected labelled graphs on 1..4 vertices: 1 + 1 + 4 + 38
    assert d["connected"] == 44 and d["checked"] == 44
    # exactly the 4 labelled claws fail the hypothesis
    assert d["hypotheses_met"] == 40 and d["vacuous"] == 4
    assert d["max_deficiency_met"] == 1
    assert d["violations"] == []


def test_exhaustive_sweep_multiple_theorems_clean_at_five():
    for tid in ("thm-1.3-bonefree", "thm-1.8-all-even"):
        rep = exhaustive_sweep(5, TheoremSpec(tid))
        assert rep.passed and rep.connected_count == 1 + 1 + 4 + 38 + 728


def test_exhaustive_sweep_guard():
    with pytest.raises(GuardExceededError):
        exhaustive_sweep(8, TheoremSpec("thm-1.2-clawfree"))


def test_exhaustive_sweep_artifacts(tmp_path):
    rep = exhaustive_sweep(4, TheoremSpec("thm-1.2-clawfree"), out_dir=tmp_path)
    assert sorted(p.name for p in tmp_path.iterdir()) == ["instances.csv", "summary.json"]
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary == rep.to_json_dict()
    lines = (tmp_path / "instances.csv").read_text().splitlines()
    assert lines[0] == "instance,n,alpha_l,omega,admitting,deficiency,bound,pass"
    assert len(lines) == 1 + 44


def test_instance_rows_and_csv():
    r = check_theorem(bs(2, 3), TheoremSpec("thm-1.4-m3", n=4))
    row = _instance_row(bs(2, 3), r)
    assert row["instance"] == "BS(2,3)"
    assert (row["n"], row["alpha_l"], row["admitting"]) == (7, 3, "3")
    assert rows_to_csv([row]) == (
        "instance,n,alpha_l,omega,admitting,deficiency,bound,pass\n"
        '"BS(2,3)",7,3,,3,3,3,True\n'
    )


def test_canonical_code():
    assert canonical_code(path_graph(3)) == canonical_code(build_graph(3, [(1, 0), (1, 2)]))
    assert canonical_code(path_graph(4)) != canonical_code(star_graph(3))
    with pytest.raises(GuardExceededError):
        canonical_code(path_graph(8))


def test_random_connected():
    assert random_connected(6, 0.4, seed=5) == random_connected(6, 0.4, seed=5)
    assert random_connected(1, 0.5, seed=1).n == 1
    assert random_connected(5, 1.0, seed=2) == complete_graph(5)
    from bonematch import is_connected

    for seed in range(30):
        assert is_connected(random_connected(9, 0.15, seed=seed))
    with pytest.raises(ValueError):
        random_connected(0, 0.5, seed=0)
    with pytest.raises(ValueError):
        random_connected(3, 0.0, seed=0)
    with pytest.raises(ValueError):
        random_connected(3, 1.5, seed=0)


def test_search_constraints_validation():
    with pytest.raises(ValueError):
        SearchConstraints(7, admitting="weird")


def test_extremal_search_finds_odd_bone_landscape():
    rep = extremal_search(SearchConstraints(7, alpha_l_max=3, admitting="odd"), iters=600, seed=11)
    assert rep.feasible_seen > 0
    assert rep.best_deficiency == 3  # the 7-vertex double broom is optimal here
    assert rep.iterations == 600 and rep.seed == 11
    assert rep.mod_base == 1 and rep.mod_hit


def test_extremal_search_reports_unsatisfiable_constraints():
    rep = extremal_search(SearchConstraints(6, alpha_l_max=1, admitting="odd"), iters=200, seed=3)
    assert rep.feasible_seen == 0
    assert rep.best_graph is None and rep.best_deficiency is None
    assert not rep.mod_hit


def test_extremal_search_is_deterministic_and_reports_congruence():
    a = extremal_search(SearchConstraints(7, alpha_l_max=3, admitting="odd"), iters=600, seed=11)
    b = extremal_search(SearchConstraints(7, alpha_l_max=3, admitting="odd"), iters=600, seed=11)
    assert a == b
    c = extremal_search(SearchConstraints(7, alpha_l_max=4, admitting="odd"), iters=400, seed=2)
    assert c.mod_base == 2
    assert c.mod_hit == (c.best_deficiency % 2 == 1)
    d = c.to_json_dict()
    assert set(d) == {
        "n", "alpha_l_max", "omega_max", "admitting", "iterations", "seed",
        "best_graph", "best_deficiency", "feasible_seen", "mod_base", "mod_hit",
    }
