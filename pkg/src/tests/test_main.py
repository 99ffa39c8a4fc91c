import json
from pathlib import Path

import main
from src.services import clifford
from src.services.quat import TernaryForm

GOLDEN = Path(__file__).parent / "golden"
HURWITZ = ["1", "1", "1", "1", "1", "1"]


def w_vector(a=0, d=0):
    return [str(a)] + ["0"] * 30 + [str(d)]


def test_order_from_form_matches_golden(capsys):
    assert main.main(["order", "from-form", *HURWITZ]) == 0
    expected = (GOLDEN / "order_from_form_hurwitz.txt").read_text()
    assert capsys.readouterr().out == expected


def test_order_from_form_wrong_arity_is_a_usage_error(capsys):
    assert main.main(["order", "from-form", "1", "1", "1", "1", "1"]) == 2


def test_order_from_form_json(capsys):
    assert main.main(["--json", "order", "from-form", *HURWITZ]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["reduced_discriminant"] == "2"
    assert payload["maximal"] is True
    assert payload["table"][0][0] == ["-1", "1", "0", "0"]


def test_order_suborders_count(capsys):
    assert main.main(["order", "suborders", "--form", *HURWITZ, "--index", "2", "--count-only"]) == 0
    form = TernaryForm(1, 1, 1, 1, 1, 1)
    expected = sum(1 for m in clifford.hnf_matrices(2) if clifford.suborder_test(form, m))
    assert capsys.readouterr().out.strip() == str(expected)


def test_order_maximal_rejects_indefinite_forms(capsys):
    assert main.main(["order", "maximal", "--form", "1", "1", "-1", "0", "0", "0"]) == 2
    assert "domain_error" in capsys.readouterr().err


def test_w_rank_and_quartic(capsys):
    assert main.main(["w", "rank", *w_vector(a=1)]) == 0
    assert capsys.readouterr().out.strip() == "rank: 1"
    assert main.main(["w", "quartic", *w_vector(a=1, d=1)]) == 0
    assert capsys.readouterr().out.strip() == "quartic: 1"


def test_gsp6_embed_identity(capsys):
    identity = [str(int(i == j)) for i in range(6) for j in range(6)]
    assert main.main(["gsp6", "embed", *identity]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "similitude: 1"
    assert len(lines) == 33
    assert lines[1].split() == ["1"] + ["0"] * 31


def test_ctable_shows_eight_c_functions(capsys):
    assert main.main(["ctable"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 8
    assert lines[0] == "c1: 1"


def test_ctable_unknown_place(capsys):
    assert main.main(["ctable", "--place", "padic"]) == 2


def test_check_fe(capsys):
    assert main.main(["ctable", "check-fe", "--db", "2", "--samples", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "functional equation: PASS (3 samples)"


def test_check_fe_rejects_even_prime_sets(capsys):
    assert main.main(["ctable", "check-fe", "--db", "2", "3"]) == 2


def test_dirichlet(tmp_path, capsys):
    coeffs = tmp_path / "coeffs.txt"
    coeffs.write_text("# a b c d e f value\n1 1 1 1 1 1 1\n")
    assert main.main(["dirichlet", "--form", *HURWITZ, "--weight", "4",
                      "--coeffs", str(coeffs), "--max-n", "1"]) == 0
    assert capsys.readouterr().out.strip() == "1 1"


def test_dirichlet_missing_class(tmp_path, capsys):
    coeffs = tmp_path / "coeffs.txt"
    coeffs.write_text("1 1 1 1 1 1 1\n")
    code = main.main(["dirichlet", "--form", *HURWITZ, "--weight", "4",
                      "--coeffs", str(coeffs), "--max-n", "2"])
    assert code == 1
    assert "missing_coefficient_class" in capsys.readouterr().err


def test_verify_fixed_checks(capsys):
    assert main.main(["verify", "all", "--trials", "0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7
    assert all(": PASS (" in line for line in lines)


def test_verify_is_deterministic(capsys):
    assert main.main(["verify", "jordan", "--trials", "3", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert main.main(["verify", "jordan", "--trials", "3", "--seed", "5"]) == 0
    assert capsys.readouterr().out == first


def test_verify_json(capsys):
    assert main.main(["verify", "diffop", "--trials", "0", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert payload["suites"][0]["suite"] == "diffop"


def test_negative_trials_is_a_usage_error(capsys):
    assert main.main(["verify", "all", "--trials", "-1"]) == 2
