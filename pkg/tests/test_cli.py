import json

from radring import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv, "--json")
    return code, json.loads(out)


def test_analyze_gaussian_case(capsys):
    code, out = run_json(capsys, "analyze", "5", "2", "-1")
    assert code == 0
    assert out["r"] == 4 and out["n_is_prime"] is True
    assert out["verdict"]["is_field"] is False
    assert out["factored"] == "(x+2)(x+3)"
    assert out["splitting"]["t"] == 1 and out["splitting"]["copies"] == 2
    assert out["units"] == {"predicted": 16, "enumerated": 16}


def test_analyze_field_case(capsys):
    code, out = run_json(capsys, "analyze", "3", "2", "2")
    assert code == 0
    assert out["verdict"]["is_field"] is True
    assert out["units"] == {"predicted": 8, "enumerated": 8}


def test_analyze_cubic_case(capsys):
    code, out = run_json(capsys, "analyze", "13", "3", "5")
    assert code == 0
    assert out["verdict"]["is_field"] is False
    assert out["splitting"]["t"] == 1 and out["splitting"]["copies"] == 3
    assert out["units"]["predicted"] == 1728 and out["units"]["enumerated"] == 1728


def test_analyze_composite(capsys):
    code, out = run_json(capsys, "analyze", "12", "2", "5")
    assert code == 0
    assert out["verdict"]["is_field"] is False
    assert out["verdict"]["reasons"][0]["code"] == "COMPOSITE_N"
    assert out["crt_moduli"] == [4, 3]
    assert out["factors"] is None


def test_element_zero_divisor(capsys):
    code, out = run_json(capsys, "element", "5", "2", "-1", "3,4")
    assert code == 0
    assert out["det"] == 0 and out["is_unit"] is False
    assert out["witness"] is not None
    # witness validity is the contract; the exact witness is lexicographically first
    from radring import ring

    params = ring.make_params(5, 2, -1)
    w = params.element(out["witness"])
    assert (params.element([3, 4]) * w).is_zero and not w.is_zero


def test_element_unit_with_inverse(capsys):
    code, out = run_json(capsys, "element", "7", "2", "3", "2,3")
    assert code == 0
    assert out["det"] == 5 and out["is_unit"] is True
    assert out["inverse"] == [6, 5]


def test_element_cubic_unit(capsys):
    code, out = run_json(capsys, "element", "7", "3", "2", "1,1,1")
    assert code == 0
    assert out["det"] == 1 and out["is_unit"] is True


def test_element_pair_arithmetic(capsys):
    code, out = run_json(capsys, "element", "7", "2", "3", "2,3", "6,5")
    assert code == 0
    assert out["product"] == [1, 0]
    assert out["sum"] == [1, 1]


def test_element_wrong_count_usage_error(capsys):
    code, _, err = run_cli(capsys, "element", "5", "2", "-1", "3,4,1")
    assert code == 2
    assert "error" in err


def test_factor_prediction_match(capsys):
    code, out = run_json(capsys, "factor", "13", "3", "5")
    assert code == 0
    assert out["prediction"] == {"applicable": True, "t": 1, "factor_count": 3, "match": True}
    assert [f["coeffs"] for f in out["factors"]] == [[2, 1], [5, 1], [6, 1]]


def test_factor_irreducible(capsys):
    code, out = run_json(capsys, "factor", "7", "3", "2")
    assert code == 0
    assert out["prediction"]["t"] == 3 and out["prediction"]["match"] is True
    assert len(out["factors"]) == 1


def test_factor_hypothesis_fallback_with_certificate(capsys):
    code, out = run_json(capsys, "factor", "5", "3", "2")
    assert code == 0
    assert out["prediction"] == {"applicable": False, "reason": "m does not divide q-1"}
    assert out["squarefree_certificate"] == {"d": 3, "b": 3}
    assert [f["coeffs"] for f in out["factors"]] == [[2, 1], [4, 3, 1]]


def test_factor_extension_field(capsys):
    code, out = run_json(capsys, "factor", "3^2", "2", "2")
    assert code == 0
    assert out["field"]["p"] == 3 and out["field"]["k"] == 2
    assert out["field"]["modulus"] == [1, 0, 1]


def test_count_irreducible(capsys):
    for q, m, mm, pred in [("13", "3", 3, 8), ("13", "2", 4, 6), ("7", "3", 3, 4)]:
        code, out = run_json(capsys, "count-irreducible", q, m)
        assert code == 0
        assert out["M"] == mm and out["predicted"] == pred
        assert out["enumerated"] == pred and out["match"] is True


def test_count_irreducible_hypothesis_error(capsys):
    code, _, err = run_cli(capsys, "count-irreducible", "5", "3")
    assert code == 2
    assert "divide" in err


def test_verify_suite_exit_codes(capsys):
    code, out = run_json(capsys, "verify", "pythagorean")
    assert code == 0
    assert out["ok"] is True and out["failures"] == 0
    assert out["suites"][0]["checked"] == 25  # primes up to 100


def test_verify_unknown_suite_usage_error(capsys):
    code, _, _ = run_cli(capsys, "verify", "bogus")
    assert code == 2


def test_json_determinism(capsys):
    code1, out1, _ = run_cli(capsys, "factor", "13", "6", "2", "--seed", "5", "--json")
    code2, out2, _ = run_cli(capsys, "factor", "13", "6", "2", "--seed", "5", "--json")
    assert code1 == code2 == 0
    assert out1 == out2


def test_missing_args_usage_error(capsys):
    assert cli.main(["analyze", "5"]) == 2


def test_text_output_contains_key_facts(capsys):
    code, out, _ = run_cli(capsys, "analyze", "5", "2", "-1")
    assert code == 0
    assert "(x+2)(x+3)" in out
    assert "field: no" in out


def test_json_round_trips_to_domain_values(capsys):
    from radring import ring, structure
    from radring.gfq import FieldSpec

    code, out = run_json(capsys, "element", "5", "2", "-1", "3,4")
    assert code == 0
    a = ring.element_from_json({**out["params"], "coeffs": out["element"]})
    assert a == ring.make_params(5, 2, -1).element([3, 4])
    assert ring.unital_det(a) == out["det"]

    code, out = run_json(capsys, "analyze", "13", "3", "5")
    verdict = structure.is_field(13, 3, 5)
    assert out["verdict"] == verdict.to_json()
    st = structure.splitting_type(FieldSpec(13), 3, FieldSpec(13).element(5))
    assert out["splitting"]["t"] == st.t
    assert out["splitting"]["factor_count"] == st.factor_count

    code, out = run_json(capsys, "count-irreducible", "13", "3")
    rep = structure.count_irreducible(FieldSpec(13), 3)
    for key in ("q", "m", "M", "predicted", "enumerated"):
        assert out[key] == rep.to_json()[key]

    code, out = run_json(capsys, "factor", "3^2", "2", "2")
    spec = FieldSpec(out["field"]["p"], out["field"]["k"], tuple(out["field"]["modulus"]))
    assert spec == FieldSpec.extension(3, 2, 0)
