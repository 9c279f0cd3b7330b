import csv
import json
import math
import os

import numpy as np
import pytest

from fracineq.bounds import BoundKind
from fracineq.errors import DomainError
from fracineq.funcspace import abs_deriv_pow, lookup
from fracineq.harness import (
    CSV_COLUMNS,
    Boxes,
    SweepSpec,
    _Instance,
    _run_one,
    check_hh_suite,
    check_identity_suite,
    draw_instances,
    load_sweep_spec,
    resolve_m_sign,
    run_sweep,
    summarize,
    write_json,
)
from fracineq.quadrature import DEFAULT_CONFIG


SMALL = SweepSpec(n_samples=6, seed=11)


def test_boxes_validation():
    with pytest.raises(DomainError):
        Boxes(alpha=(0.0, 2.0))
    with pytest.raises(DomainError):
        Boxes(lam=(-0.2, 0.5))
    with pytest.raises(DomainError):
        Boxes(q=(0.5, 2.0))
    with pytest.raises(DomainError):
        Boxes(ratio=(0.9, 2.0))
    with pytest.raises(DomainError):
        Boxes(s=(0.5, 1.2))


def test_spec_validation():
    with pytest.raises(DomainError):
        SweepSpec(n_samples=0)
    with pytest.raises(DomainError):
        SweepSpec(kinds=())
    with pytest.raises(DomainError):
        SweepSpec(kinds=("noetherian",))
    # corollary-qualified kinds are accepted
    SweepSpec(kinds=("ga-s/simpson", "hh"))


def test_toml_loader_round_trip(tmp_path):
    path = tmp_path / "spec.toml"
    path.write_text(
        "\n".join(
            [
                "[sweep]",
                "seed = 9",
                "n_samples = 17",
                'kinds = ["ga-s", "sm-ga"]',
                "",
                "[boxes]",
                "alpha = [0.4, 2.5]",
                "lambda = [0.1, 0.9]",
                "",
                "[tolerances]",
                "abs_tol = 1e-11",
                "max_subdivisions = 500",
            ]
        )
    )
    spec = load_sweep_spec(path)
    assert spec.seed == 9
    assert spec.n_samples == 17
    assert spec.kinds == ("ga-s", "sm-ga")
    assert spec.boxes.alpha == (0.4, 2.5)
    assert spec.boxes.lam == (0.1, 0.9)
    assert spec.boxes.q == (1.0, 4.0)  # untouched default
    assert spec.quad.abs_tol == pytest.approx(1e-11)
    assert spec.quad.max_subdivisions == 500


class TestDrawing:
    def test_same_seed_same_instances(self):
        one, _ = draw_instances(SMALL)
        two, _ = draw_instances(SMALL)
        assert [i.iid for i in one] == [i.iid for i in two]
        for a, b in zip(one, two):
            assert a.f.name == b.f.name
            assert a.p.iv.a == b.p.iv.a
            assert a.p.alpha == b.p.alpha
            assert a.p.lam == b.p.lam

    def test_draws_respect_boxes(self):
        boxes = Boxes(alpha=(0.5, 1.5), q=(1.0, 2.0), a=(0.5, 6.0), ratio=(1.5, 5.0))
        spec = SweepSpec(n_samples=10, seed=3, boxes=boxes)
        instances, _ = draw_instances(spec)
        for inst in instances:
            p = inst.p
            assert 0.5 <= p.alpha <= 1.5
            assert 1.0 <= p.q <= 2.0
            assert 0.5 <= p.iv.a
            assert 1.5 - 1e-12 <= p.iv.b / p.iv.a <= 5.0 + 1e-12
            assert p.iv.a <= p.x <= p.iv.b

    def test_every_instance_arrives_certified(self):
        instances, stats = draw_instances(SMALL)
        assert all(inst.cert.certified for inst in instances)
        assert all(v["accepted"] == 6 for v in stats.values())

    def test_corollary_kind_pins_its_parameters(self):
        spec = SweepSpec(kinds=("ga-s/simpson", "quasi-geometric/ostrowski"), n_samples=4, seed=2)
        instances, _ = draw_instances(spec)
        simpson = [i for i in instances if i.kind.corollary == "simpson"]
        ostrow = [i for i in instances if i.kind.corollary == "ostrowski"]
        assert len(simpson) == len(ostrow) == 4
        for inst in simpson:
            assert inst.p.lam == pytest.approx(1.0 / 3.0)
            assert inst.p.x == pytest.approx(inst.p.iv.geometric_mean)
            assert inst.M is None
        for inst in ostrow:
            assert inst.p.lam == 0.0
            assert inst.M is not None and inst.M.M >= 0.0

    def test_chain_kind_yields_two_rows_per_draw(self):
        spec = SweepSpec(kinds=("hh",), n_samples=5, seed=4)
        instances, _ = draw_instances(spec)
        assert len(instances) == 10
        labels = {i.kind.label for i in instances}
        assert labels == {"hh/left", "hh/right"}


class TestSweep:
    def test_summary_counts_match_rows(self):
        res = run_sweep(SMALL)
        assert res.summary["n_rows"] == len(res.reports)
        assert res.summary["violations"] == sum(1 for r in res.reports if not r.passed)
        assert res.summary["violations"] == 0
        assert res.summary["sign_second_term"] == "minus"
        assert [r.instance_id for r in res.reports] == sorted(
            r.instance_id for r in res.reports
        )

    def test_artifacts_written_and_consistent(self, tmp_path):
        prefix = str(tmp_path / "out")
        res = run_sweep(SMALL, prefix)
        with open(prefix + ".csv") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == list(CSV_COLUMNS)
        assert len(rows) - 1 == res.summary["n_rows"]
        for row in rows[1:]:
            float(row[12]), float(row[13]), float(row[14])  # lhs, rhs, slack parse
            assert row[15] in ("true", "false")
        data = json.loads(open(prefix + ".json").read())
        assert len(data["rows"]) == len(rows) - 1
        assert data["summary"]["violations"] == res.summary["violations"]

    def test_threaded_run_matches_serial(self, monkeypatch):
        serial = run_sweep(SMALL)
        monkeypatch.setenv("FRACINEQ_THREADS", "3")
        threaded = run_sweep(SMALL)
        assert len(serial.reports) == len(threaded.reports)
        for a, b in zip(serial.reports, threaded.reports):
            assert a.instance_id == b.instance_id
            assert a.lhs == b.lhs
            assert a.rhs == b.rhs
            assert a.slack == b.slack
            assert a.passed == b.passed

    def test_failure_becomes_an_error_row_not_an_exception(self, tmp_path):
        # a handle without a derivative cannot feed the derivative-based
        # right side; the sweep must record that, not crash
        broken = abs_deriv_pow(lookup("pow-2"), 2.0)
        donor, _ = draw_instances(SweepSpec(n_samples=1, seed=1, kinds=("ga-s",)))
        inst = _Instance("ga-s-err", BoundKind("ga-s"), broken, donor[0].p, None)
        rep = _run_one(inst, DEFAULT_CONFIG)
        assert rep.error == "MissingDerivative"
        assert not rep.passed
        assert math.isnan(rep.lhs) and math.isnan(rep.rhs)
        summary = summarize(SMALL, [inst], [rep], audit=[], sign="minus")
        assert summary["violations"] == 1
        assert summary["violation_classes"]["ga-s-err"] == "error:MissingDerivative"
        path = str(tmp_path / "err.json")
        write_json([rep], summary, path)
        row = json.loads(open(path).read())["rows"][0]
        assert row["lhs"] is None and row["error"] == "MissingDerivative"


def test_sign_resolution_prefers_the_reducing_convention():
    assert resolve_m_sign() == "minus"


def test_identity_suite_restricted_run_passes():
    summary = check_identity_suite(
        functions=("log", "pow-2"), alphas=(0.8, 2.0), lams=(0.0, 1.0), m_values=(0.6, 1.0)
    )
    assert summary.passed
    assert summary.max_rel_dev <= 1e-7
    assert summary.m_sign == "minus"


def test_chain_suite_small_run_passes():
    summary = check_hh_suite(n_functions=5)
    assert summary.passed
    assert summary.min_gap_left >= -1e-9
    assert summary.min_gap_right >= -1e-9
