import json
from fractions import Fraction

import pytest

from simplexopt.cli import main

EXAMPLE_QUADRATIC = "2*x1^2 + x2^2 - 5*x1*x2"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


class TestGridMin:
    def test_example_text(self, capsys):
        code, out, _ = run(capsys, "grid-min", EXAMPLE_QUADRATIC, "--n", "2", "--r", "2")
        assert code == 0
        assert "-1/2" in out
        assert "alpha=(1, 1)" in out
        assert "wall time" in out

    def test_example_json(self, capsys):
        code, payload, _ = run_json(capsys, "grid-min", EXAMPLE_QUADRATIC, "--n", "2", "--r", "2")
        assert code == 0
        assert payload["value"] == "-1/2"
        assert payload["argmin"]["alpha"] == [1, 1]
        assert payload["argmin"]["point"] == ["1/2", "1/2"]
        assert payload["evaluations"] == 3

    def test_cubic_even_order(self, capsys):
        code, payload, _ = run_json(capsys, "grid-min", "x1^3 + x2^3", "--n", "2", "--r", "4")
        assert code == 0 and payload["value"] == "1/4"

    def test_zero_polynomial(self, capsys):
        code, payload, _ = run_json(capsys, "grid-min", "x1 - x1", "--n", "2", "--r", "2")
        assert code == 0
        assert payload["value"] == "0/1"
        assert payload["argmin"]["alpha"] == [0, 2]

    def test_max_flag(self, capsys):
        code, payload, _ = run_json(
            capsys, "grid-min", "x1^2 + x2^2", "--n", "2", "--r", "3", "--max"
        )
        assert code == 0 and payload["value"] == "1/1" and payload["mode"] == "max"

    def test_json_is_byte_stable(self, capsys):
        _, first, _ = run(capsys, "grid-min", EXAMPLE_QUADRATIC, "--n", "2", "--r", "2", "--json")
        _, second, _ = run(capsys, "grid-min", EXAMPLE_QUADRATIC, "--n", "2", "--r", "2", "--json")
        assert first == second
        assert "wall" not in first

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "grid-min", "x1^3 + x1*x2", "--n", "2", "--r", "2")
        assert code == 2 and "mixed degrees" in err

    def test_precondition_exit_code(self, capsys):
        code, _, err = run(capsys, "grid-min", "x1^2", "--n", "1", "--r", "0")
        assert code == 3 and "order" in err

    def test_threads_flag_changes_nothing(self, capsys):
        _, base, _ = run_json(capsys, "grid-min", EXAMPLE_QUADRATIC, "--n", "2", "--r", "5")
        _, threaded, _ = run_json(
            capsys, "grid-min", EXAMPLE_QUADRATIC, "--n", "2", "--r", "5", "--threads", "3"
        )
        assert base == threaded


class TestBernstein:
    def test_closed_route_example(self, capsys):
        code, payload, _ = run_json(
            capsys, "bernstein", EXAMPLE_QUADRATIC, "--n", "2", "--r", "2", "--route", "closed"
        )
        assert code == 0
        terms = {tuple(t["exponents"]): Fraction(t["coefficient"]) for t in payload["reduced_terms"]}
        assert terms == {
            (1, 0): Fraction(1),
            (0, 1): Fraction(1, 2),
            (2, 0): Fraction(1),
            (0, 2): Fraction(1, 2),
            (1, 1): Fraction(-5, 2),
        }

    def test_definitional_route(self, capsys):
        code, payload, _ = run_json(
            capsys, "bernstein", EXAMPLE_QUADRATIC, "--n", "2", "--r", "2", "--route", "def"
        )
        assert code == 0
        terms = {
            tuple(t["exponents"]): Fraction(t["coefficient"])
            for t in payload["homogeneous_terms"]
        }
        assert terms == {(2, 0): Fraction(2), (0, 2): Fraction(1), (1, 1): Fraction(-1)}

    def test_eval_point(self, capsys):
        code, payload, _ = run_json(
            capsys,
            "bernstein",
            "x1^3 + x2^3",
            "--n",
            "2",
            "--r",
            "2",
            "--eval",
            "1/2,1/2",
        )
        assert code == 0
        assert payload["eval"]["value"] == "5/8"

    def test_auto_route_agreement(self, capsys):
        code, payload, _ = run_json(
            capsys, "bernstein", "x1^2 + x2^2 + x3^2", "--n", "3", "--r", "4"
        )
        assert code == 0
        assert "homogeneous_terms" in payload and "reduced_terms" in payload


class TestBound:
    def test_squarefree_example(self, capsys):
        code, payload, _ = run_json(
            capsys,
            "bound",
            " -x1*x2",
            "--n",
            "2",
            "--r",
            "3",
            "--theorem",
            "sqfree",
            "--range=-1/4,0",
        )
        assert code == 0
        cert = payload["certificates"][0]
        assert cert["theorem"] == "squarefree"
        assert Fraction(cert["gap"]) == Fraction(1, 36)
        assert Fraction(cert["bound_value"]) == Fraction(1, 12)
        assert cert["satisfied"] is True
        assert Fraction(cert["ratio"]) == Fraction(1, 9)

    def test_quadratic_auto_range(self, capsys):
        code, payload, _ = run_json(
            capsys, "bound", "x1^2 + x2^2", "--n", "2", "--r", "3", "--theorem", "quad"
        )
        assert code == 0
        cert = payload["certificates"][0]
        assert cert["range"] == {"lower": "0/1", "upper": "1/1", "provenance": "bernstein_coefficient_range"}
        assert cert["satisfied"] is True

    def test_general_emits_two_certificates(self, capsys):
        code, payload, _ = run_json(
            capsys, "bound", "x1^4 + x2^4", "--n", "2", "--r", "4", "--theorem", "general"
        )
        assert code == 0
        theorems = [c["theorem"] for c in payload["certificates"]]
        assert theorems == ["general", "general_coefficient_range"]

    def test_inapplicable_theorem_exit_code(self, capsys):
        code, _, err = run(
            capsys, "bound", "x1^3 + x2^3", "--n", "2", "--r", "3", "--theorem", "quad"
        )
        assert code == 3 and "degree" in err


class TestPtas:
    def test_example(self, capsys):
        code, payload, _ = run_json(
            capsys, "ptas", "x1^2 + x2^2", "--n", "2", "--epsilon", "1/3"
        )
        assert code == 0
        assert payload["theorem"] == "quadratic"
        assert payload["r"] == 3
        assert payload["value"] == "5/9"
        assert payload["point"]["alpha"] == [1, 2]

    def test_squarefree_example(self, capsys):
        code, payload, _ = run_json(
            capsys, "ptas", " -x1*x2", "--n", "2", "--epsilon", "1/2"
        )
        assert code == 0
        assert payload["theorem"] == "squarefree"
        assert payload["value"] == "-1/4"

    def test_epsilon_validation(self, capsys):
        code, _, err = run(capsys, "ptas", "x1^2", "--n", "1", "--epsilon", "2")
        assert code == 3

    def test_epsilon_parse_error(self, capsys):
        code, _, err = run(capsys, "ptas", "x1^2", "--n", "1", "--epsilon", "a/b")
        assert code == 2


class TestMoments:
    def test_example(self, capsys):
        code, payload, _ = run_json(
            capsys, "moments", "--n", "2", "--r", "3", "--beta", "2,0", "--x", "1/3,2/3"
        )
        assert code == 0
        assert payload["direct"] == payload["stirling"] == "5/3"
        assert payload["equal"] is True

    def test_off_simplex_rejected(self, capsys):
        code, _, err = run(
            capsys, "moments", "--n", "2", "--r", "3", "--beta", "1,0", "--x", "1/3,1/3"
        )
        assert code == 3 and "simplex" in err


class TestStableSet:
    def test_five_cycle(self, capsys, tmp_path):
        lines = ["p 5 5"] + [f"e {i + 1} {(i + 1) % 5 + 1}" for i in range(5)]
        graph = tmp_path / "c5.dimacs"
        graph.write_text("\n".join(lines) + "\n", encoding="utf-8")
        code, payload, _ = run_json(capsys, "stable-set", str(graph), "--r", "2", "--brute")
        assert code == 0
        assert payload["grid_value"] == "1/2"
        assert payload["alpha_lower"] == 2
        assert payload["alpha_exact"] == 2

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "stable-set", "no-such-file.dimacs", "--r", "2")
        assert code == 2

    def test_bad_graph(self, capsys, tmp_path):
        graph = tmp_path / "bad.dimacs"
        graph.write_text("p 2 1\ne 1 3\n", encoding="utf-8")
        code, _, err = run(capsys, "stable-set", str(graph), "--r", "2")
        assert code == 2 and "out of range" in err


class TestSelftest:
    def test_passes(self, capsys):
        code, payload, _ = run_json(capsys, "selftest")
        assert code == 0
        assert payload["passed"] is True
        assert all(check["passed"] for check in payload["checks"])


def _collect_rational_strings(node, found):
    if isinstance(node, dict):
        for value in node.values():
            _collect_rational_strings(value, found)
    elif isinstance(node, list):
        for value in node:
            _collect_rational_strings(value, found)
    elif isinstance(node, str) and "/" in node and node.lstrip("-").replace("/", "").isdigit():
        found.append(node)


class TestJsonContracts:
    def test_every_emitted_rational_reparses(self, capsys):
        invocations = [
            ("grid-min", EXAMPLE_QUADRATIC, "--n", "2", "--r", "5"),
            ("bernstein", "x1^3 + x2^3", "--n", "2", "--r", "3", "--eval", "1/3,2/3"),
            ("bound", "x1^2 + x2^2", "--n", "2", "--r", "4"),
            ("ptas", EXAMPLE_QUADRATIC, "--n", "2", "--epsilon", "1/7"),
            ("moments", "--n", "2", "--r", "4", "--beta", "2,1", "--x", "2/5,3/5"),
        ]
        for argv in invocations:
            code, payload, _ = run_json(capsys, *argv)
            assert code == 0
            rationals = []
            _collect_rational_strings(payload, rationals)
            assert rationals, f"no rationals found for {argv[0]}"
            for text in rationals:
                value = Fraction(text)
                assert f"{value.numerator}/{value.denominator}" == text

    def test_auto_route_output_is_byte_stable(self, capsys):
        args = ("bernstein", EXAMPLE_QUADRATIC, "--n", "2", "--r", "4", "--json")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second


class TestArgErrors:
    def test_unknown_flag_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["grid-min", "x1^2", "--n", "1", "--r", "2", "--frobnicate"])
        assert exc.value.code == 2


class TestEnvironment:
    def test_threads_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("SIMPLEX_THREADS", "2")
        code, payload, _ = run_json(capsys, "grid-min", EXAMPLE_QUADRATIC, "--n", "2", "--r", "6")
        assert code == 0
        monkeypatch.setenv("SIMPLEX_THREADS", "1")
        code2, payload2, _ = run_json(capsys, "grid-min", EXAMPLE_QUADRATIC, "--n", "2", "--r", "6")
        assert code2 == 0 and payload == payload2

    def test_bad_env_value(self, capsys, monkeypatch):
        monkeypatch.setenv("SIMPLEX_THREADS", "lots")
        code, _, err = run(capsys, "grid-min", "x1^2", "--n", "1", "--r", "2")
        assert code == 2 and "SIMPLEX_THREADS" in err


class TestInternalInvariantSurfaces:
    def test_moment_mismatch_exits_four(self, capsys, monkeypatch):
        import simplexopt.cli as cli_module

        monkeypatch.setattr(cli_module, "moment_stirling", lambda *a, **k: Fraction(999))
        code, _, err = run(
            capsys, "moments", "--n", "2", "--r", "2", "--beta", "1,0", "--x", "1/2,1/2"
        )
        assert code == 4 and "mismatch" in err

    def test_route_disagreement_exits_four(self, capsys, monkeypatch):
        import simplexopt.cli as cli_module
        from simplexopt import GeneralPolynomial
        from simplexopt.bernstein import BernsteinResult

        def broken_closed_form(f, r):
            return BernsteinResult(
                homogeneous=None,
                reduced=GeneralPolynomial(f.n, {(0,) * f.n: Fraction(1234)}),
                r=r,
                source="closed_form",
            )

        monkeypatch.setattr(cli_module, "bernstein_closed_form", broken_closed_form)
        code, _, err = run(capsys, "bernstein", "x1^2 + x2^2", "--n", "2", "--r", "3")
        assert code == 4 and "disagreement" in err
