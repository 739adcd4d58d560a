"""Command line behaviour: payload shapes, exit codes, canonical echoes.

Everything runs through cli.main(argv) in-process; a single subprocess
test at the end confirms the module entry point is wired up.
"""

import json
import subprocess
import sys

import pytest

from starword import cli
from starword.commands import SCHEMA_VERSION


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    lines = [ln for ln in captured.out.splitlines() if ln.strip()]
    assert len(lines) == 1, captured.out
    return code, json.loads(lines[0]), captured.err


def test_validate_motzkin_valid(capsys):
    code, report, err = run(capsys, "validate-motzkin", "[[x][y]]z")
    assert code == 0
    assert report["schema_version"] == SCHEMA_VERSION
    assert report["command"] == "validate-motzkin"
    assert report["inputs"] == {"word": "[[x][y]]z"}
    assert report["result"] == {"valid": True}
    assert err == ""


def test_validate_motzkin_invalid_is_a_result_not_an_error(capsys):
    code, report, _ = run(capsys, "validate-motzkin", "[x][yz")
    assert code == 2
    assert report["result"] == {"valid": False, "reason": "unbalanced",
                                "position": 4}
    code, report, _ = run(capsys, "validate-motzkin", "x][y[z]")
    assert code == 2
    assert report["result"] == {"valid": False, "reason": "prefix",
                                "position": 2}


def test_encode_and_decode(capsys):
    code, report, _ = run(capsys, "encode", "[[abc]ab]")
    assert code == 0
    assert report["result"] == {"motzkin": "[[abc]ab]"}
    code, report, _ = run(capsys, "decode", "[[x][y]]z")
    assert code == 0
    assert report["result"] == {"bracketed": "[[x][y]]z"}


def test_depth_and_path(capsys):
    code, report, _ = run(capsys, "depth", "[[abc]ab]")
    assert code == 0
    assert report["result"] == {"depth": 2}
    code, report, _ = run(capsys, "path", "[[x][y]]z")
    assert code == 0
    assert report["result"] == {"path": "UUxDUyDDz"}


def test_inputs_echo_canonical_text(capsys):
    _, report, _ = run(capsys, "encode", " [ [ a b c ] a b ] ")
    assert report["inputs"] == {"word": "[[abc]ab]"}
    _, report, _ = run(capsys, "depth", "eps")
    assert report["inputs"] == {"word": "eps"}
    assert report["result"] == {"depth": 0}


def test_occurrences_bracketed(capsys):
    code, report, _ = run(capsys, "occurrences", "ab", "[[abc]ab]",
                          "--bracketed")
    assert code == 0
    assert report["inputs"] == {"subword": "ab", "host": "[[abc]ab]",
                                "mode": "bracketed"}
    assert report["result"] == {
        "count": 2,
        "placements": [
            {"location": {"start": 3, "end": 4}, "context": "[[*c]ab]"},
            {"location": {"start": 7, "end": 8}, "context": "[[abc]*]"},
        ],
    }


def test_occurrences_plain(capsys):
    code, report, _ = run(capsys, "occurrences", "xyx", "xyxyx")
    assert code == 0
    assert report["inputs"]["mode"] == "word"
    assert report["result"]["count"] == 2
    assert [p["location"] for p in report["result"]["placements"]] == \
        [{"start": 1, "end": 3}, {"start": 3, "end": 5}]


def test_classify_nested(capsys):
    code, report, _ = run(capsys, "classify", "[[abc]ab]", "2..6", "3..4",
                          "--bracketed")
    assert code == 0
    assert report["inputs"] == {"host": "[[abc]ab]", "first": "2..6",
                                "second": "3..4", "mode": "bracketed"}
    assert report["result"] == {"relation": "nested", "connector": "[*c]",
                                "direction": "second"}


def test_classify_separated(capsys):
    code, report, _ = run(capsys, "classify", "[[abc]ab]", "2..6", "7..8",
                          "--bracketed")
    assert code == 0
    assert report["result"] == {"relation": "separated", "context": "[*1*2]",
                                "order": "first"}


def test_classify_intersecting_with_contexts(capsys):
    code, report, _ = run(capsys, "classify", "xyxyxy", "1..3", "3..5",
                          "--context")
    assert code == 0
    assert report["result"] == {
        "relation": "intersecting", "context": "*y", "a": "xy", "b": "x",
        "c": "yx", "orientation": "first",
        "first_context": "*yxy", "second_context": "xy*y",
    }


def test_oracle_check(capsys):
    code, report, _ = run(capsys, "oracle-check", "xyxyxy", "1..3", "1..2")
    assert code == 0
    assert report["result"] == {"oracle": ["nested"], "fast": "nested",
                                "agree": True}
    code, report, _ = run(capsys, "oracle-check", "[[abc]ab]", "2..6", "7..8",
                          "--bracketed")
    assert code == 0
    assert report["result"]["agree"] is True
    assert report["result"]["fast"] == "separated"


def test_enumerate(capsys):
    code, report, _ = run(capsys, "enumerate-motzkin", "--length", "2",
                          "--alphabet", "x")
    assert code == 0
    assert report["result"] == {"count": 2, "words": ["xx", "[]"]}


def test_parse_error_exits_1(capsys):
    code, report, err = run(capsys, "encode", "{")
    assert code == 1
    assert report["command"] == "encode"
    assert report["error"]["code"] == "parse-error"
    assert report["error"]["position"] == 1
    assert "result" not in report
    assert err != ""


def test_malformed_location_exits_1(capsys):
    code, report, _ = run(capsys, "classify", "xyxyxy", "2-6", "1..2")
    assert code == 1
    assert report["error"]["code"] == "parse-error"


def test_unbalanced_operand_exits_2(capsys):
    code, report, _ = run(capsys, "depth", "[x")
    assert code == 2
    assert report["error"]["code"] == "invalid-motzkin"
    assert report["error"]["position"] == 1


def test_empty_subword_exits_2(capsys):
    code, report, _ = run(capsys, "occurrences", "eps", "xyx")
    assert code == 2
    assert report["error"]["code"] == "invalid-input"


def test_bad_range_exits_3(capsys):
    code, report, _ = run(capsys, "classify", "xyxyxy", "5..2", "1..2")
    assert code == 3
    assert report["error"]["code"] == "invalid-location"


def test_out_of_range_interval_exits_3(capsys):
    code, report, _ = run(capsys, "classify", "xyx", "1..9", "1..2")
    assert code == 3
    assert report["error"]["code"] == "invalid-location"


def test_unbalanced_interval_exits_3(capsys):
    code, report, _ = run(capsys, "classify", "[[abc]ab]", "1..8", "2..6",
                          "--bracketed")
    assert code == 3
    assert report["error"]["code"] == "invalid-location"


def test_usage_errors_exit_1(capsys):
    assert cli.main(["no-such-command"]) == 1
    capsys.readouterr()
    assert cli.main(["classify", "xyx"]) == 1
    capsys.readouterr()
    assert cli.main(["enumerate-motzkin", "--length", "2"]) == 1
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "starword.cli", "encode", "[[abc]ab]"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"] == {"motzkin": "[[abc]ab]"}
