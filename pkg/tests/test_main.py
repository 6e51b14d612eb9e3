"""End-to-end tests of the command-line interface."""

import json

import pytest

from config.settings import reset_settings
from main import EXIT_CAPACITY, EXIT_ERROR, EXIT_INCONSISTENT, EXIT_OK, RunConfig, main, run

pytestmark = pytest.mark.integration

P1_ANSWER = "{p(1), p(2), q(1,f(1,2)), r(1,f(1,2))}\n"


def cli(capsys, *argv):
    code = main([str(arg) for arg in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestSolve:
    def test_p1(self, capsys, corpus_path):
        code, out, _ = cli(capsys, "solve", corpus_path("p1"))

        assert code == EXIT_OK
        assert out == P1_ANSWER

    def test_p2_shows_relied_on_relation(self, capsys, corpus_path):
        code, out, _ = cli(capsys, "solve", corpus_path("p2"))

        assert code == EXIT_OK
        assert out == "{p(a,b), t(a,b)}\n"

    def test_show_sorts(self, capsys, corpus_path):
        _, out, _ = cli(capsys, "solve", "--show-sorts", corpus_path("p1"))

        assert "s3(f(2,1))" in out
        assert "p(1)" in out

    def test_show_support(self, capsys, corpus_path):
        code, out, _ = cli(capsys, "solve", "--show-support", corpus_path("e2_full"))

        assert code == EXIT_OK
        assert out == "{c(a), -p(a), -q(a)}\n% support: {rn(1,a)}\n"

    def test_inconsistent_program(self, capsys, corpus_path):
        code, out, _ = cli(capsys, "solve", corpus_path("e1"))

        assert code == EXIT_INCONSISTENT
        assert out == ""

    def test_limit(self, capsys, tmp_path):
        program = tmp_path / "choice.sp"
        program.write_text(
            "sorts definition\ns(a).\npredicates declaration\np(s)\nq(s)\n"
            "program rules\np(X) :- not q(X).\nq(X) :- not p(X).\n"
        )
        _, all_out, _ = cli(capsys, "solve", program)
        _, one_out, _ = cli(capsys, "solve", "-n", "1", program)

        assert all_out == "{p(a)}\n{q(a)}\n"
        assert one_out == "{p(a)}\n"

    def test_json_format(self, capsys, corpus_path):
        code, out, _ = cli(capsys, "solve", "--format", "json", corpus_path("e2_full"))
        record = json.loads(out)

        assert code == EXIT_OK
        assert record["literals"] == ["c(a)", "-p(a)", "-q(a)"]
        assert record["support"] == ["rn(1,a)"]
        assert record["elapsed_ms"] >= 0

    @pytest.mark.parametrize("name", ["p1", "p2", "e1", "e2_default", "e2_full", "weak_example"])
    def test_translation_engine_gives_same_output(self, capsys, corpus_path, name):
        direct = cli(capsys, "solve", "--show-support", corpus_path(name))
        translated = cli(capsys, "solve", "--show-support", "--engine", "translation", corpus_path(name))

        assert translated[:2] == direct[:2]

    def test_oracle_backend(self, capsys, corpus_path):
        _, out, _ = cli(capsys, "solve", "--backend", "oracle", corpus_path("p1"))
        assert out == P1_ANSWER

    def test_unused_sort_atoms_do_not_change_answers(self, capsys, corpus_path):
        _, extended, _ = cli(capsys, "solve", corpus_path("p1_extended"))
        assert extended == P1_ANSWER


class TestCheckAndGround:
    def test_check_prints_sort_table(self, capsys, corpus_path, golden):
        code, out, _ = cli(capsys, "check", corpus_path("p1"))

        assert code == EXIT_OK
        assert out == golden("p1.check")

    def test_check_warns_on_unused_declaration(self, capsys, tmp_path):
        program = tmp_path / "unused.sp"
        program.write_text("sorts definition\ns(a).\npredicates declaration\np(s)\nq(s)\nprogram rules\np(a).\n")
        code, _, err = cli(capsys, "check", program)

        assert code == EXIT_OK
        assert "warning: predicate q(s) is declared but never used" in err

    @pytest.mark.parametrize("name", ["p1", "p2"])
    def test_ground(self, capsys, corpus_path, golden, name):
        code, out, _ = cli(capsys, "ground", corpus_path(name))

        assert code == EXIT_OK
        assert out == golden(f"{name}.ground")


class TestTranslate:
    def test_prints_counterpart(self, capsys, corpus_path, golden):
        code, out, _ = cli(capsys, "translate", corpus_path("weak_example"))

        assert code == EXIT_OK
        assert out == golden("weak_example.dlv")

    def test_writes_output_file(self, capsys, corpus_path, golden, tmp_path):
        target = tmp_path / "p1.dlv"
        code, out, _ = cli(capsys, "translate", corpus_path("p1"), "-o", target)

        assert code == EXIT_OK
        assert out == ""
        assert target.read_text() == golden("p1.dlv")

    def test_solve_counterpart_in_process(self, capsys, corpus_path):
        code, out, _ = cli(capsys, "translate", "--solve", corpus_path("weak_example"))

        assert code == EXIT_OK
        assert out == "{-p(a), q(a), s(a)}\n"

    def test_external_solver(self, capsys, corpus_path, mocker):
        completed = mocker.MagicMock(returncode=0, stdout="{s(a), appl(rn(1,a)), q(a), -p(a)}\n", stderr="")
        run_mock = mocker.patch("translate.external.subprocess.run", return_value=completed)

        code, out, _ = cli(capsys, "translate", "--solver", "/opt/dlv", corpus_path("weak_example"))

        assert code == EXIT_OK
        assert out == "{-p(a), q(a), s(a)}\n"
        assert run_mock.call_args[0][0][0] == "/opt/dlv"

    def test_external_solver_failure(self, capsys, corpus_path, mocker):
        completed = mocker.MagicMock(returncode=1, stdout="", stderr="parse error")
        mocker.patch("translate.external.subprocess.run", return_value=completed)

        code, _, err = cli(capsys, "translate", "--solver", "/opt/dlv", corpus_path("weak_example"))

        assert code == EXIT_ERROR
        assert "status 1" in err


class TestErrors:
    def test_sort_error(self, capsys, corpus_path):
        code, out, err = cli(capsys, "solve", corpus_path("misspelled"))

        assert code == EXIT_ERROR
        assert out == ""
        assert "misspelled.sp:7:" in err
        assert "argument jone of parent(jone,mary) is not of sort person" in err

    def test_syntax_error(self, capsys, tmp_path):
        program = tmp_path / "bad.sp"
        program.write_text("sorts definition\ns(a).\npredicates declaration\np(s)\nprogram rules\np(a) :- $.\n")
        code, _, err = cli(capsys, "check", program)

        assert code == EXIT_ERROR
        assert "bad.sp:6:" in err

    def test_atom_cap(self, capsys, corpus_path):
        code, _, err = cli(capsys, "--atom-cap", "1", "solve", corpus_path("p1"))

        assert code == EXIT_CAPACITY
        assert "resource cap exceeded" in err

    def test_grounding_error(self, capsys, tmp_path):
        program = tmp_path / "unsafe.sp"
        program.write_text("sorts definition\ns(a).\npredicates declaration\np(nat)\nprogram rules\np(X).\n")
        code, _, err = cli(capsys, "ground", program)

        assert code == EXIT_ERROR
        assert "X" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = cli(capsys, "solve", tmp_path / "missing.sp")

        assert code == EXIT_ERROR
        assert "missing.sp" in err

    def test_no_command(self, capsys):
        code, out, _ = cli(capsys)

        assert code == EXIT_ERROR
        assert "usage" in out

    def test_unknown_command(self, capsys):
        code, _, err = cli(capsys, "frobnicate")

        assert code == EXIT_ERROR
        assert "invalid choice" in err

    def test_missing_input(self, capsys):
        code, _, _ = cli(capsys, "solve")
        assert code == EXIT_ERROR

    def test_negative_limit(self, capsys, corpus_path):
        code, _, err = cli(capsys, "solve", "-n", "-1", corpus_path("p1"))

        assert code == EXIT_ERROR
        assert "invalid option limit" in err

    def test_help_exits_zero(self, capsys):
        code, out, _ = cli(capsys, "--help")

        assert code == EXIT_OK
        assert "solve" in out


class TestConfig:
    def test_caps_default_to_settings(self, monkeypatch):
        monkeypatch.setenv("SPARC_ATOM_CAP", "77")
        reset_settings()

        assert RunConfig(verb="check", input_path="x.sp").atom_cap == 77

    def test_input_required(self):
        with pytest.raises(ValueError, match="needs an input file"):
            RunConfig(verb="solve")

    def test_bench_needs_no_input(self):
        assert RunConfig(verb="bench").input_path is None


class TestBench:
    def test_bench_sweep(self, capsys, tmp_path):
        code, out, _ = cli(
            capsys, "bench", "--vertices", "2", "--densities", "1.0", "--seeds", "0", "--emit", tmp_path
        )

        assert code == EXIT_OK
        assert "sp_n2_d1_s0" in out
        assert (tmp_path / "sp_n2_d1_s0.sp").exists()

    def test_bench_invalid_parameters(self, capsys):
        code, _, err = cli(capsys, "bench", "--vertices", "1", "--densities", "0.5", "--seeds", "0")

        assert code == EXIT_ERROR
        assert "at least 2 vertices" in err


def test_run_exits_with_main_status(mocker):
    mocker.patch("main.main", return_value=EXIT_INCONSISTENT)
    with pytest.raises(SystemExit) as exc:
        run()
    assert exc.value.code == EXIT_INCONSISTENT
