import json

import pytest

from edgewave.cli import main, parse_complex


class TestComplexGrammar:
    @pytest.mark.parametrize("text,expect", [
        ("1+0i", 1 + 0j),
        ("1", 1 + 0j),
        ("2.5-1i", 2.5 - 1j),
        ("-0.5+0.25i", -0.5 + 0.25j),
        ("i", 1j),
        ("-i", -1j),
        ("3i", 3j),
        ("1e-2+2e-1i", 0.01 + 0.2j),
    ])
    def test_parse(self, text, expect):
        assert parse_complex(text) == expect

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_complex("1+2j+3")


class TestAnalyze:
    def test_rational_example(self, capsys):
        code = main(["analyze", "--alpha", "1/3", "--case", "imp-imp",
                     "--eta1", "1+0i", "--eta2", "1+0i", "--k", "1",
                     "--nmax", "6"])
        out = capsys.readouterr().out
        assert code == 0
        assert "order lower bound (assembled systems): 2" in out
        assert "guaranteed bound (angle grid):         2" in out

    def test_irrational_example(self, capsys):
        code = main(["analyze", "--alpha", "0.6180339887", "--case", "pec-pmc",
                     "--nmax", "8"])
        out = capsys.readouterr().out
        assert code == 0
        assert ">= 8" in out
        assert "irrational" in out

    def test_half_gives_zero_bound(self, capsys):
        code = main(["analyze", "--alpha", "1/2", "--case", "imp-imp",
                     "--eta1", "1", "--eta2", "1", "--k", "1", "--nmax", "4"])
        out = capsys.readouterr().out
        assert code == 0
        assert "order lower bound (assembled systems): 0" in out

    def test_missing_eta_is_usage_error(self, capsys):
        code = main(["analyze", "--alpha", "1/3", "--case", "imp-imp"])
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_bad_angle_is_usage_error(self, capsys):
        code = main(["analyze", "--alpha", "1/1", "--case", "pec-pmc"])
        assert code == 1

    def test_json_output(self, capsys):
        code = main(["analyze", "--alpha", "1/3", "--case", "imp-imp",
                     "--eta1", "1", "--eta2", "1", "--nmax", "3", "--json"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["alpha"]["rational"] == [1, 3]
        assert data["case"] == "imp-imp"
        assert data["order_lower_bound"] == 2
        assert data["theorem_bound"] == 2

    def test_json_round_trips(self, capsys):
        from edgewave.vanish import VanishReport
        main(["analyze", "--alpha", "2/5", "--case", "imp-pec", "--eta2",
              "1-1i", "--nmax", "4", "--json"])
        data = json.loads(capsys.readouterr().out)
        assert VanishReport.from_json_dict(data).to_json_dict() == data


class TestTable:
    def test_impimp_bounds(self, capsys):
        code = main(["table", "--case", "imp-imp",
                     "--alphas", "1/2", "1/3", "1/4", "2/5", "--nmax", "6"])
        out = capsys.readouterr().out
        assert code == 0
        lines = [ln.split() for ln in out.strip().splitlines()[1:]]
        assert [ln[3] for ln in lines] == ["0", "2", "3", "4"]

    def test_pecpmc_bounds(self, capsys):
        code = main(["table", "--case", "pec-pmc", "--alphas", "1/2", "1/4"])
        out = capsys.readouterr().out
        assert code == 0
        lines = [ln.split() for ln in out.strip().splitlines()[1:]]
        assert [ln[3] for ln in lines] == ["0", "1"]

    def test_empty_list(self, capsys):
        code = main(["table", "--case", "imp-imp", "--alphas"])
        assert code == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 1

    def test_json_mode(self, capsys):
        code = main(["table", "--case", "imp-imp", "--alphas", "1/3",
                     "--nmax", "4", "--json"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data) == 1 and data[0]["theorem_bound"] == 2


class TestExitCodes:
    def test_rank_ambiguity_exits_two(self, capsys):
        # a tolerance placed inside the spectrum triggers the ambiguity guard
        code = main(["analyze", "--alpha", "1/3", "--case", "imp-imp",
                     "--eta1", "1", "--eta2", "1", "--nmax", "2",
                     "--tol", "0.1"])
        assert code == 2
        assert "rank ambiguity" in capsys.readouterr().err


class TestVerifyCommand:
    def test_single_suite(self, capsys):
        code = main(["verify", "--suite", "specfun"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.count("[PASS]") == 6

    def test_seed_reproducible_json(self, capsys, monkeypatch):
        monkeypatch.setenv("EDGEWAVE_SEED", "123")
        main(["verify", "--suite", "specfun", "--json"])
        first = capsys.readouterr().out
        main(["verify", "--suite", "specfun", "--json"])
        second = capsys.readouterr().out
        assert first == second
