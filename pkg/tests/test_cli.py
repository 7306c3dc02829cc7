import json

import pytest

from logometre.cli import main

from conftest import HAND_CORPUS


@pytest.fixture()
def hand_file(tmp_path):
    path = tmp_path / "hand.tsv"
    path.write_text(HAND_CORPUS, encoding="utf-8")
    return path


def _run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(hand_file, capsys):
    code, out, err = _run(capsys, "validate", hand_file)
    assert code == 0
    assert out == "ok: 3 documents, 15 tokens, 5 sentences, language fr-x-test\n"


def test_validate_data_error(tmp_path, capsys):
    bad = tmp_path / "bad.tsv"
    bad.write_text("#!logometre v1 lang=xx tags=NOUN\n#### id=d\na\ta\n",
                   encoding="utf-8")
    code, out, err = _run(capsys, "validate", bad)
    assert code == 2
    assert err.startswith("MalformedLine")
    assert "line 3" in err


def test_usage_error_exit_code(capsys):
    code, out, err = _run(capsys, "dict")          # missing corpus argument
    assert code == 1
    code, out, err = _run(capsys, "nonsense")
    assert code == 1


def test_dict_csv_and_top(hand_file, capsys):
    code, out, _ = _run(capsys, "dict", hand_file, "--top", "2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "rank,lemma,count,relative_freq_per_10k"
    assert lines[1] == "1,pays,4,4000"
    assert len(lines) == 3


def test_dict_select_and_json(hand_file, capsys):
    code, out, _ = _run(capsys, "dict", hand_file, "--select", "country=BR",
                        "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["total_filtered_tokens"] == 2
    assert [e["lemma"] for e in payload["entries"]] == ["povo", "trabalho"]


def test_compare_fixture(fixture_files, capsys):
    code, out, _ = _run(capsys, "compare", fixture_files["a"], fixture_files["b"],
                        "--lexicon", fixture_files["lexicon"], "--top", "20")
    assert code == 0
    payload = json.loads(out)
    assert payload["overlap"] == 18
    assert payload["k"] == 20


def test_cooc_then_ca_and_svg(fixture_files, tmp_path, capsys):
    matrix_path = tmp_path / "matrix.json"
    code, _, _ = _run(capsys, "cooc", fixture_files["a"], "--n", "40",
                      "-o", matrix_path)
    assert code == 0
    matrix = json.loads(matrix_path.read_text(encoding="utf-8"))
    assert len(matrix["labels"]) == 40

    svg_path = tmp_path / "map.svg"
    out_path = tmp_path / "solution.json"
    code, _, _ = _run(capsys, "ca", matrix_path, "--axes", "1,2",
                      "--svg", svg_path, "--cluster", "4", "-o", out_path)
    assert code == 0
    solution = json.loads(out_path.read_text(encoding="utf-8"))
    assert len(solution["singular_values"]) == len(solution["inertia_pct"])
    assert solution["clusters"]["k"] == 4
    svg = svg_path.read_text(encoding="utf-8")
    assert svg.startswith("<svg") and "factor-map" in svg


def test_ca_zero_matrix_exit_2(tmp_path, capsys):
    matrix_path = tmp_path / "zero.json"
    matrix_path.write_text(json.dumps({
        "labels": ["a", "b"], "counts": [[0, 0], [0, 0]],
        "context": {"unit": "sentence"}, "n_contexts": 0,
    }), encoding="utf-8")
    code, _, err = _run(capsys, "ca", matrix_path)
    assert code == 2
    assert err.startswith("ZeroMatrix")


def test_pivot_output_and_absent(fixture_files, capsys):
    code, out, _ = _run(capsys, "pivot", fixture_files["a"], "--word", "na005",
                        "--min-joint", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["pivot"] == "na005"
    assert payload["entries"]

    code, _, err = _run(capsys, "pivot", fixture_files["a"], "--word", "absent-zzz")
    assert code == 2
    assert err.startswith("PivotAbsent")


def test_report_command(fixture_files, tmp_path, capsys):
    config_path = tmp_path / "config.json"
    config_path.write_text(json.dumps({
        "k": 20, "n_lemmas": 50, "pivots": [["na005", "nb005"]],
    }), encoding="utf-8")
    report_path = tmp_path / "report.json"
    html_path = tmp_path / "report.html"
    code, _, _ = _run(capsys, "report", fixture_files["a"], fixture_files["b"],
                      "--lexicon", fixture_files["lexicon"],
                      "--config", config_path, "-o", report_path,
                      "--html", html_path)
    assert code == 0
    payload = json.loads(report_path.read_text(encoding="utf-8"))
    assert payload["rank_comparison"]["overlap"] == 18
    assert html_path.read_text(encoding="utf-8").count('class="factor-map"') == 2


def test_window_context_flag(fixture_files, capsys):
    code, out, _ = _run(capsys, "cooc", fixture_files["a"], "--n", "10",
                        "--context", "window", "--window", "12")
    assert code == 0
    assert json.loads(out)["context"] == {"unit": "window", "window": 12}
    # --window without window unit is a usage error
    code, _, _ = _run(capsys, "cooc", fixture_files["a"], "--n", "10",
                      "--window", "12")
    assert code == 1
