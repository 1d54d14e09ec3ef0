"""Unit tests for tdc/cli.py — cmd_gen / tdc gen subcommand."""

import argparse
import json

import pytest

from tdc.cli import cmd_gen
from tdc.graph import Family, FamilySpec, generate
from tdc.parse import load_graph


@pytest.fixture(autouse=True)
def _in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def _make_args(family: str = "cycle:4", seed=None, out=None, format=None, verbose=None) -> argparse.Namespace:
    """Build a minimal Namespace for cmd_gen."""
    return argparse.Namespace(family=family, seed=seed, out=out, format=format, verbose=verbose)


class TestGenOutput:
    def test_dimacs_on_stdout(self, capsys):
        cmd_gen(_make_args())
        assert capsys.readouterr().out == "c cycle:4\np edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n"

    def test_json_on_stdout(self, capsys):
        cmd_gen(_make_args(format="json"))
        assert json.loads(capsys.readouterr().out) == {"n": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]]}

    @pytest.mark.parametrize("name", ["wheel.col", "wheel.json"])
    def test_writes_file(self, tmp_path, name):
        cmd_gen(_make_args(family="wheel:5", out=name))
        assert load_graph(str(tmp_path / name)) == generate(FamilySpec(Family.WHEEL, (5,)))

    def test_verbose_reports_the_write(self, capsys):
        cmd_gen(_make_args(out="g.col", verbose="true"))
        assert "[tdc] wrote cycle:4 (4 vertices, 4 edges) to g.col" in capsys.readouterr().err

    def test_persisted_format_applies(self, capsys):
        from tdc.config import set_format

        set_format("json")
        cmd_gen(_make_args(family="path:2"))
        assert json.loads(capsys.readouterr().out)["n"] == 2


class TestGenSeeds:
    def test_seed_fills_in_random_tree(self, capsys):
        cmd_gen(_make_args(family="random-tree:8", seed=5))
        first = capsys.readouterr().out
        cmd_gen(_make_args(family="random-tree:8,5"))
        assert capsys.readouterr().out == first
        assert first.startswith("c random-tree:8,5\np edge 8 7\n")

    def test_seed_overrides_given_seed(self, capsys):
        cmd_gen(_make_args(family="random-graph:7,1,2,0", seed=3))
        assert capsys.readouterr().out.startswith("c random-graph:7,1,2,3\n")

    def test_seed_on_fixed_family_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            cmd_gen(_make_args(seed=1))
        assert exc_info.value.code == 2
        assert "--seed only applies to random families" in capsys.readouterr().err


class TestGenErrors:
    @pytest.mark.parametrize(
        "family, message",
        [
            ("hypercube:3", "unknown family 'hypercube'"),
            ("cycle", "needs parameters"),
            ("cycle:2", "cycle"),
            ("path:x", "integer"),
        ],
    )
    def test_bad_family_exits_2(self, capsys, family, message):
        with pytest.raises(SystemExit) as exc_info:
            cmd_gen(_make_args(family=family))
        assert exc_info.value.code == 2
        err = capsys.readouterr().err
        assert err.startswith("[tdc] ")
        assert message in err
