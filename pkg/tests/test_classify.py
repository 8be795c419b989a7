"""Classification grid against the hand-written golden table and cross checks."""

import csv
import json
import pathlib

import pytest

from reesag import (
    ClassLabel,
    Evidence,
    RULE_LABELS,
    classify,
    cross_check,
    ineq_sides,
    mu_K,
    render_ascii,
    render_csv,
    render_json,
    table,
)

GOLDEN = pathlib.Path(__file__).parent / "data" / "table_10_9.csv"


def golden_cells():
    with GOLDEN.open(newline="") as fh:
        return {
            (int(row["d"]), int(row["ell"])): row["label"]
            for row in csv.DictReader(fh)
        }


def test_golden_file_shape():
    cells = golden_cells()
    assert len(cells) == 81
    assert set(cells) == {(d, ell) for d in range(2, 11) for ell in range(1, 10)}


def test_table_matches_golden():
    grid = table(10, 9)
    for key, expected in golden_cells().items():
        label, _ = grid[key]
        assert label.symbol == expected, f"cell {key}"


def test_rule_labels_cover_and_determine():
    grid = table(12, 12)
    seen = set()
    for (d, ell), (label, evidence) in grid.items():
        assert evidence.rule in RULE_LABELS
        assert RULE_LABELS[evidence.rule] is label
        assert (evidence.d, evidence.ell) == (d, ell)
        seen.add(evidence.rule)
    assert seen == set(RULE_LABELS)


def test_classify_frozen_cells():
    label, ev = classify(4, 3)
    assert label is ClassLabel.GORENSTEIN_GRADED
    assert (ev.rule, ev.mu_K, ev.gap) == ("gorenstein-diagonal", 1, 0)

    label, ev = classify(3, 1)
    assert label is ClassLabel.ALMOST_GORENSTEIN_GRADED
    assert (ev.rule, ev.gap) == ("parameter-ideal", None)

    label, ev = classify(2, 5)
    assert label is ClassLabel.ALMOST_GORENSTEIN_GRADED
    assert (ev.rule, ev.gap) == ("dimension-two", None)

    label, ev = classify(5, 2)
    assert label is ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY
    assert (ev.rule, ev.gap, ev.mu_K) == ("divisor-local-only", 0, 2)
    assert ev.obstruction == (1, 32)

    label, ev = classify(4, 2)
    assert label is ClassLabel.NONE
    assert (ev.rule, ev.gap, ev.obstruction) == ("gap-positive", 4, None)


def test_classify_diagonal_is_gorenstein():
    for d in range(3, 51):
        label, ev = classify(d, d - 1)
        assert label is ClassLabel.GORENSTEIN_GRADED
        assert ev.mu_K == 1


def test_classify_degenerate_2_1():
    # d = 2, ell = 1 sits on the diagonal, so the Gorenstein rule fires first
    label, ev = classify(2, 1)
    assert label is ClassLabel.GORENSTEIN_GRADED
    assert ev.rule == "gorenstein-diagonal"


def test_classify_domain():
    with pytest.raises(ValueError):
        classify(1, 1)
    with pytest.raises(ValueError):
        classify(2, 0)
    with pytest.raises(ValueError):
        table(1, 5)
    with pytest.raises(ValueError):
        table(5, 0)


def test_cross_check_sweep():
    for d in range(3, 31):
        for ell in range(2, 31):
            assert cross_check(d, ell), f"({d}, {ell})"


def test_cross_check_agrees_with_mu_and_gap():
    label, _ = classify(9, 4)
    assert label is ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY
    assert ineq_sides(9, 4).gap == 0 and mu_K(9, 4) > 1


def test_cross_check_domain():
    with pytest.raises(ValueError):
        cross_check(2, 2)
    with pytest.raises(ValueError):
        cross_check(3, 1)


def test_label_ordering_and_symbols():
    assert ClassLabel.NONE < ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY
    assert ClassLabel.ALMOST_GORENSTEIN_LOCAL_ONLY < ClassLabel.ALMOST_GORENSTEIN_GRADED
    assert ClassLabel.ALMOST_GORENSTEIN_GRADED < ClassLabel.GORENSTEIN_GRADED
    assert max(ClassLabel) is ClassLabel.GORENSTEIN_GRADED
    assert [lab.symbol for lab in sorted(ClassLabel)] == ["X", "AGL", "AG", "Gor"]
    assert ClassLabel("Gor") is ClassLabel.GORENSTEIN_GRADED


def test_evidence_as_dict_omits_absent_fields():
    _, ev = classify(2, 3)
    d = ev.as_dict()
    assert set(d) == {"b", "mu_K", "rule"}
    _, ev = classify(7, 4)
    assert set(ev.as_dict()) == {"b", "mu_K", "rule", "gap"}
    _, ev = classify(7, 2)
    assert set(ev.as_dict()) == {"b", "mu_K", "rule", "gap", "obstruction"}
    assert ev.as_dict()["obstruction"] == {"mu_bound": 2, "e_bound": 128}


def test_render_csv_equals_golden_content():
    assert render_csv(table(10, 9)) == GOLDEN.read_text()


def test_render_json_round_trip():
    grid = table(4, 3)
    cells = json.loads(render_json(grid))
    assert len(cells) == 9
    by_key = {(c["d"], c["ell"]): c for c in cells}
    for (d, ell), (label, evidence) in grid.items():
        cell = by_key[(d, ell)]
        assert cell["label"] == label.symbol
        assert cell["evidence"] == evidence.as_dict()
    # d-major ordering
    assert [(c["d"], c["ell"]) for c in cells] == sorted(by_key)


def test_render_ascii_layout():
    grid = table(4, 3)
    lines = render_ascii(grid).splitlines()
    assert lines[0].split() == ["d\\l", "1", "2", "3"]
    assert lines[1].split() == ["2", "Gor", "AG", "AG"]
    assert lines[2].split() == ["3", "AG", "Gor", "X"]
    assert lines[3].split() == ["4", "AG", "X", "Gor"]


def test_evidence_is_frozen():
    _, ev = classify(3, 2)
    assert isinstance(ev, Evidence)
    with pytest.raises(AttributeError):
        ev.gap = 7
