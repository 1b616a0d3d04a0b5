import contextlib
import io
import json
import os

from mobiuskit.cli import main

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "data")
GOLDEN = os.path.join(DATA, "golden")


def data(name):
    return os.path.join(DATA, name)


def run(argv, env=None):
    old = {}
    if env:
        for key, value in env.items():
            old[key] = os.environ.get(key)
            os.environ[key] = value
    try:
        stream = io.StringIO()
        with contextlib.redirect_stdout(stream):
            code = main(argv)
        return code, stream.getvalue()
    finally:
        for key, value in old.items():
            if value is None:
                os.environ.pop(key, None)
            else:
                os.environ[key] = value


def parse(stdout):
    return json.loads(stdout)


def test_validate_success():
    code, out = run(["validate", "--category", data("six.json")])
    assert code == 0
    report = parse(out)
    assert report["results"]["valid"] is True
    assert report["results"]["arrows"] == 5


def test_validate_reports_law_violation():
    bad = {
        "objects": ["a"],
        "arrows": [
            {"name": "1a", "src": "a", "tgt": "a"},
            {"name": "f", "src": "a", "tgt": "a"},
        ],
        "identities": {"a": "1a"},
        "compose": [
            ["1a", "1a", "1a"],
            ["f", "1a", "f"],
            ["1a", "f", "f"],
            ["f", "f", "1a"],
        ],
    }
    path = data("tmp_bad_assoc.json")
    with open(path, "w") as handle:
        json.dump(bad, handle)
    try:
        code, out = run(["validate", "--category", path])
        assert code == 0  # x*x=1 on one loop is C2: a valid category
        bad["compose"][3][2] = "f"
        bad["arrows"].append({"name": "g", "src": "a", "tgt": "a"})
        bad["compose"] += [["g", "1a", "g"], ["1a", "g", "g"], ["g", "g", "1a"],
                           ["f", "g", "1a"], ["g", "f", "g"]]
        with open(path, "w") as handle:
            json.dump(bad, handle)
        code, out = run(["validate", "--category", path])
        assert code == 2
        assert parse(out)["results"]["valid"] is False
    finally:
        os.remove(path)


def test_schema_violation_exits_1(capfd):
    bad = {"objects": ["a"], "arrows": [], "identities": {}, "compose": [["x", "y", "z"], ["x", "y", "z"]]}
    path = data("tmp_bad_schema.json")
    with open(path, "w") as handle:
        json.dump(bad, handle)
    try:
        code, _ = run(["validate", "--category", path])
        err = capfd.readouterr().err
        assert code == 1
        assert "compose[1]" in err and "duplicate" in err
    finally:
        os.remove(path)


def test_missing_compose_pair_exits_1(capfd):
    bad = {
        "objects": ["a"],
        "arrows": [{"name": "1a", "src": "a", "tgt": "a"}],
        "identities": {"a": "1a"},
        "compose": [],
    }
    path = data("tmp_missing_pair.json")
    with open(path, "w") as handle:
        json.dump(bad, handle)
    try:
        code, _ = run(["validate", "--category", path])
        err = capfd.readouterr().err
        assert code == 1
        assert "missing entry" in err
    finally:
        os.remove(path)


def test_unknown_flag_exits_1(capfd):
    code, _ = run(["euler", "--category", data("six.json"), "--nonsense"])
    assert code == 1


def test_missing_file_exits_1(capfd):
    code, _ = run(["euler", "--category", data("no_such.json")])
    assert code == 1
    assert "no such file" in capfd.readouterr().err


def test_mobius_coarse_six_values():
    code, out = run(["mobius", "--algebra", "coarse", "--category", data("six.json"), "--rig", "rat"])
    assert code == 0
    report = parse(out)
    assert report["results"]["mobius"]["matrix"] == [["1", "-1"], ["-1", "2"]]
    assert report["rig"] == "rat"


def test_mobius_fine_group_not_invertible():
    code, out = run(["mobius", "--algebra", "fine", "--category", data("group_c2.json")])
    assert code == 2
    assert parse(out)["results"]["status"] == "not_invertible"


def test_mobius_family_range():
    code, out = run(["mobius", "--family", "dinj", "--from", "0", "--to", "3"])
    assert code == 0
    rows = parse(out)["results"]["mobius"]
    assert rows[0] == ["1", "-1", "1", "-1"]
    assert rows[1][2] == "-2"


def test_mobius_family_requires_range(capfd):
    code, _ = run(["mobius", "--family", "dinj"])
    assert code == 1
    code, _ = run(["mobius", "--family", "dinj", "--from", "-1", "--to", "2"])
    assert code == 1
    code, _ = run(["mobius", "--family", "divisibility", "--from", "0", "--to", "6"])
    assert code == 1


def test_euler_c2_is_one_half():
    code, out = run(["euler", "--category", data("group_c2.json")])
    assert code == 0
    assert parse(out)["results"]["euler_characteristic"] == "1/2"


def test_nerve_euler_square_and_six():
    code, out = run(["nerve-euler", "--category", data("square.json")])
    assert code == 0
    assert parse(out)["results"]["euler_characteristic"] == "1"
    code, out = run(["nerve-euler", "--category", data("six.json")])
    assert code == 2
    assert parse(out)["results"]["status"] == "not_nerve_finite"


def test_magnitude_and_study():
    code, out = run(["magnitude", "--metric", data("two_points_d1.json")])
    assert code == 0
    assert parse(out)["results"]["magnitude"] == "1.46211715726"
    code, out = run(["magnitude", "--metric", data("two_points_d1.json"), "--study", "11,101"])
    assert code == 0
    study = parse(out)["results"]["study"]
    assert [n for n, _ in study] == [11, 101]


def test_graded_report():
    code, out = run(["graded", "--graph", data("one_vertex_two_loops.json"), "--degree", "6"])
    assert code == 0
    results = parse(out)["results"]
    assert results["mobius_total"] == "1 - 2*t"
    assert results["zeta"]["matrix"][0][0].startswith("1 + 2*t + 4*t^2")


def test_classify_six_negative_exit():
    code, out = run(["classify", "--category", data("six.json")])
    assert code == 2
    results = parse(out)["results"]
    assert results["mobius_category"] is False
    assert results["fine_inversion_q"] == "ok"
    assert results["nontrivial_idempotents"] == ["e"]
    code, _ = run(["classify", "--category", data("chain3.json")])
    assert code == 0


def test_functor_check_report():
    code, out = run([
        "functor-check",
        "--src", data("six.json"),
        "--tgt", data("six_codiscrete.json"),
        "--map", data("six_collapse_functor.json"),
    ])
    assert code == 0
    results = parse(out)["results"]
    assert results["functor_valid"] is True
    assert results["bijective_on_objects"] is True
    assert results["ulf"] is False
    assert results["fibre_sizes"]["c_a_a"] == 2


def test_matrix_transitive_negative_exit():
    code, out = run(["matrix", "--op", "transitive", "--in", data("matrix_nontransitive.json")])
    assert code == 2
    assert parse(out)["results"]["counterexample_path"] == [0, 1, 2]


def test_matrix_zeros():
    code, out = run(["matrix", "--op", "zeros", "--in", data("matrix_3x3.json")])
    assert code == 0
    assert parse(out)["results"]["zero_pattern_inherited"] is True


def test_compare_parallel_compositions():
    code, out = run([
        "compare",
        "--category-a", data("parallel_first.json"),
        "--category-b", data("parallel_second.json"),
    ])
    assert code == 0
    results = parse(out)["results"]
    assert results["menni_hom_sums_agree"] is True
    assert results["haigh_first"] is True


def test_compare_rejects_different_graphs(capfd):
    code, _ = run([
        "compare",
        "--category-a", data("six.json"),
        "--category-b", data("chain3.json"),
    ])
    assert code == 1
    assert "same underlying graph" in capfd.readouterr().err


def test_incompatible_rig_fails_before_computation(capfd):
    code, _ = run(["mobius", "--algebra", "coarse", "--category", data("six.json"), "--rig", "nat"])
    assert code == 1
    code, _ = run(["magnitude", "--metric", data("two_points_d1.json"), "--rig", "rat"])
    assert code == 1
    code, _ = run(["graded", "--graph", data("one_vertex_two_loops.json"), "--degree", "4", "--rig", "int"])
    assert code == 1


def test_rig_env_variable_and_flag_precedence():
    code, out = run(["euler", "--category", data("six.json")], env={"MOBIUSKIT_RIG": "int"})
    assert code == 0
    assert parse(out)["rig"] == "int"
    code, out = run(
        ["euler", "--category", data("six.json"), "--rig", "rat"],
        env={"MOBIUSKIT_RIG": "int"},
    )
    assert code == 0
    assert parse(out)["rig"] == "rat"


def test_threads_flag_validated(capfd):
    code, _ = run(["euler", "--category", data("six.json"), "--threads", "0"])
    assert code == 1
    code, _ = run(["euler", "--category", data("six.json"), "--threads", "4"])
    assert code == 0


def test_output_is_deterministic():
    argv = ["mobius", "--algebra", "coarse", "--category", data("six.json")]
    _, first = run(argv)
    _, second = run(argv)
    assert first == second


def test_timing_flag_adds_field():
    code, out = run(["euler", "--category", data("six.json"), "--timing"])
    assert code == 0
    assert "timing_ms" in parse(out)


def test_golden_reports_reproduce_byte_for_byte():
    with open(os.path.join(GOLDEN, "manifest.json"), encoding="utf-8") as handle:
        manifest = json.load(handle)
    assert len(manifest) >= 20
    for name, case in sorted(manifest.items()):
        argv = [part.replace("{D}", DATA) for part in case["argv"]]
        code, out = run(argv)
        with open(os.path.join(GOLDEN, f"{name}.out.json"), encoding="utf-8") as handle:
            expected = handle.read()
        assert out == expected, f"golden mismatch for {name}"
        assert code == case["exit_code"], f"exit code mismatch for {name}"
