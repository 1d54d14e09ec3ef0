"""Unit tests for tdc/cli.py — cmd_verify / tdc verify subcommand."""

import argparse
import json
from unittest.mock import patch

import pytest

from tdc.cli import cmd_verify
from tdc.commands import _multipartite_members
from tdc.families import VerificationReport, VerificationRow


@pytest.fixture(autouse=True)
def _in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("TDC_NODE_BUDGET", raising=False)


def _make_args(
    family: str = "cycle",
    range: str | None = "3..8",
    workers: int | None = None,
    budget: int | None = None,
    format: str | None = None,
    verbose: str | None = None,
) -> argparse.Namespace:
    """Build a minimal Namespace for cmd_verify."""
    return argparse.Namespace(
        family=family, range=range, workers=workers, budget=budget, format=format, verbose=verbose
    )


def _rows(capsys):
    return json.loads(capsys.readouterr().out)["rows"]


class TestVerifyMatches:
    def test_cycles(self, capsys):
        cmd_verify(_make_args())
        out = capsys.readouterr().out
        assert "6/6 match, 0 mismatched, 0 unresolved" in out
        assert "erratum" not in out

    def test_params_after_colon(self, capsys):
        cmd_verify(_make_args(family="path:2..5", range=None, format="json"))
        assert [r["spec"] for r in _rows(capsys)] == ["path:2", "path:3", "path:4", "path:5"]

    def test_single_multipartite_instance(self, capsys):
        cmd_verify(_make_args(family="multipartite:2,2,1", range=None, format="json"))
        rows = _rows(capsys)
        assert [(r["spec"], r["exact_value"]) for r in rows] == [("multipartite:2,2,1", 3)]

    def test_multipartite_range_expands_to_partitions(self, capsys):
        cmd_verify(_make_args(family="multipartite", range="4", format="json"))
        assert len(_rows(capsys)) == 4

    def test_trees(self, capsys):
        cmd_verify(_make_args(family="tree", range="5..6", format="json"))
        rows = _rows(capsys)
        assert len(rows) == 3 + 6
        assert all(r["match"] and r["lower_bound_ok"] for r in rows)

    def test_workers(self, capsys):
        cmd_verify(_make_args(family="wheel", range="3..7", workers=2, format="json"))
        assert all(r["match"] for r in _rows(capsys))

    def test_verbose_progress(self, capsys):
        cmd_verify(_make_args(range="3..4", verbose="true"))
        err = capsys.readouterr().err
        assert "[tdc] cycle:3: formula 3, exact 3" in err
        assert "[tdc] cycle:4: formula 2, exact 2" in err


class TestVerifyExitCodes:
    def test_known_erratum_is_reported_but_exits_0(self, capsys):
        cmd_verify(_make_args(range="9..10"))
        out = capsys.readouterr().out
        assert "1/2 match, 1 mismatched, 0 unresolved" in out
        assert "erratum (known): cycle:10 formula 8 exact 7" in out

    def test_mismatch_exits_1_and_names_the_erratum(self, capsys):
        report = VerificationReport([VerificationRow("cycle:3", 2, 3)])
        with patch("tdc.commands.verify_family", return_value=report), \
             pytest.raises(SystemExit) as exc_info:
            cmd_verify(_make_args())
        assert exc_info.value.code == 1
        assert "erratum: cycle:3 formula 2 exact 3" in capsys.readouterr().out

    def test_budget_exits_3(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            cmd_verify(_make_args(range="13", budget=1))
        assert exc_info.value.code == 3
        assert "0 mismatched, 1 unresolved" in capsys.readouterr().out

    def test_unknown_family_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            cmd_verify(_make_args(family="star"))
        assert exc_info.value.code == 2
        assert "no closed form for family 'star'" in capsys.readouterr().err

    def test_missing_range_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            cmd_verify(_make_args(range=None))
        assert exc_info.value.code == 2
        assert "needs --range" in capsys.readouterr().err

    def test_orders_in_both_places_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            cmd_verify(_make_args(family="path:2..5", range="2..9"))
        assert exc_info.value.code == 2
        assert "not both" in capsys.readouterr().err

    def test_out_of_domain_exits_2(self):
        with pytest.raises(SystemExit) as exc_info:
            cmd_verify(_make_args(range="2..4"))
        assert exc_info.value.code == 2


class TestMultipartiteMembers:
    def test_partitions_of_five(self):
        assert _multipartite_members(5) == [
            (4, 1),
            (3, 2),
            (3, 1, 1),
            (2, 2, 1),
            (2, 1, 1, 1),
        ]

    def test_at_most_four_parts(self):
        assert all(2 <= len(p) <= 4 for p in _multipartite_members(8))
