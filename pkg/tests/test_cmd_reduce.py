"""Unit tests for tdc/cli.py — cmd_reduce / tdc reduce subcommand."""

import argparse
import json
from unittest.mock import patch

import pytest

from tdc.cli import cmd_reduce
from tdc.graph import Family, FamilySpec, generate
from tdc.parse import load_graph, save_graph
from tdc.reduction import ReductionCheck


@pytest.fixture(autouse=True)
def _in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    save_graph("c5.col", generate(FamilySpec(Family.CYCLE, (5,))))


def _make_args(input: str = "c5.col", k=None, out=None, check: bool = False, format=None) -> argparse.Namespace:
    """Build a minimal Namespace for cmd_reduce."""
    return argparse.Namespace(
        input=input, k=k, out=out, check=check, budget=None, format=format, verbose=None
    )


class TestReduce:
    def test_default_k_and_output_path(self, tmp_path, capsys):
        cmd_reduce(_make_args())
        assert capsys.readouterr().out.strip() == "3 -> 4"
        reduced = load_graph(str(tmp_path / "c5-reduced.col"))
        assert reduced == generate(FamilySpec(Family.WHEEL, (5,)))

    def test_explicit_k_and_out(self, tmp_path, capsys):
        cmd_reduce(_make_args(k=5, out="w.col"))
        assert capsys.readouterr().out.strip() == "5 -> 6"
        assert (tmp_path / "w.col").read_text().startswith("c universal vertex 6 added; k 5 -> 6\n")

    def test_json_input_keeps_extension(self, tmp_path, capsys):
        save_graph("p4.json", generate(FamilySpec(Family.PATH, (4,))))
        cmd_reduce(_make_args(input="p4.json", format="json"))
        data = json.loads(capsys.readouterr().out)
        assert data["output"] == "p4-reduced.json"
        assert (data["k"], data["k_prime"], data["universal"]) == (2, 3, 4)
        assert load_graph(str(tmp_path / "p4-reduced.json")).n == 5

    def test_check(self, capsys):
        cmd_reduce(_make_args(check=True))
        assert "check: chi = 3, reduced chi_dt = 4, holds" in capsys.readouterr().out

    def test_check_json(self, capsys):
        cmd_reduce(_make_args(check=True, format="json"))
        data = json.loads(capsys.readouterr().out)
        assert data["check"]["holds"] is True
        assert data["check"]["universal_singleton"] is True


class TestReduceExitCodes:
    def test_bad_k_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            cmd_reduce(_make_args(k=0))
        assert exc_info.value.code == 2
        assert "at least 1" in capsys.readouterr().err

    def test_failed_check_exits_1(self, capsys):
        failed = ReductionCheck(3, 5, False, True, None, False)
        with patch("tdc.commands.verify_reduction", return_value=failed), \
             pytest.raises(SystemExit) as exc_info:
            cmd_reduce(_make_args(check=True))
        assert exc_info.value.code == 1
        assert "FAILS" in capsys.readouterr().out

    def test_inconclusive_check_exits_3(self, capsys):
        with patch("tdc.commands.verify_reduction", return_value=ReductionCheck(3, None, None)), \
             pytest.raises(SystemExit) as exc_info:
            cmd_reduce(_make_args(check=True))
        assert exc_info.value.code == 3
        assert "inconclusive" in capsys.readouterr().out

    def test_missing_input_exits_2(self):
        with pytest.raises(SystemExit) as exc_info:
            cmd_reduce(_make_args(input="absent.col"))
        assert exc_info.value.code == 2
