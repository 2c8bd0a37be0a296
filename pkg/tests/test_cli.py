#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: tests/test_cli.py
# Purpose: Command line: records, rescaled outputs and exit codes
#
# Description of code and how it works:
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.1.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.1.0 (2026-10-17): Initial tests.
###################################################################
#
import io
import json

import pytest

from quarticde_app import cli
from quarticde_app.connectors.catalog import sweep_catalog
from quarticde_app.errors import EXIT_INVALID_INPUT, EXIT_NOT_VALID, EXIT_OK, EXIT_RESOURCE_REFUSED
from quarticde_app.search import verify

H206_GEN = "2131205/32,8767168835/512"


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def quads(recs):
    return [(r["h"], r["A"], r["B"], r["C"], r["D"]) for r in recs if r["kind"] == "quadruple"]


def test_solve_emits_descaled_record():
    code, text = run("solve", "--h", "16", "--gen", "340,680", "--multiples", "2")
    assert code == EXIT_OK
    assert quads(records(text)) == [
        ("16", "1203", "38", "653", "588"),
        ("1", "1203", "76", "653", "1176"),
    ]


def test_solve_with_target_and_gen_file(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text(H206_GEN + "\n", encoding="utf-8")
    code, text = run("solve", "--h", "103/8", "--gen-file", str(path), "--target", "206")
    assert code == EXIT_OK
    recs = records(text)
    assert quads(recs)[-1] == ("206", "3331690696", "1760253623", "3682044372", "1746613911")
    assert recs[-1]["twist_t"] == "1/2"


def test_solve_twist_flag():
    code, text = run("solve", "--h", "16", "--gen", "340,680", "--multiples", "3", "--twist", "2")
    assert code == EXIT_OK
    assert ("1", "1584749", "2061283", "555617", "2219449") in quads(records(text))


def test_method2_integerize():
    code, text = run("method2", "--z", "5/3", "--gen", "2500/81,109000/729", "--multiples", "1", "--integerize")
    assert code == EXIT_OK
    recs = records(text)
    assert recs[0]["kind"] == "h-value"
    assert recs[0]["h"] == "4/3"
    assert quads(recs) == [
        ("4/3", "101", "158", "171", "88"),
        ("108", "303", "158", "513", "88"),
    ]
    assert recs[1]["z"] == "5/3"


def test_method2_target():
    code, text = run("method2", "--z", "3/2", "--gen", "135/4,351/2", "--multiples", "2", "--target", "12256974")
    assert code == EXIT_OK
    assert quads(records(text))[-1] == ("12256974", "1018029", "2861", "142923", "17207")


def test_verify_exit_codes():
    code, text = run("verify", "--h", "206", "--quad", "3923,1084,4747,506")
    assert code == EXIT_OK
    assert records(text)[0]["valid"] is True
    code, text = run("verify", "--h", "206", "--quad", "3923,1084,4747,507")
    assert code == EXIT_NOT_VALID
    assert records(text)[0]["valid"] is False


def test_search_records_and_empty_result():
    code, text = run("search", "--h", "3", "--bound", "12")
    assert code == EXIT_OK
    first = records(text)[0]
    assert (first["kind"], first["A"], first["B"], first["C"], first["D"]) == ("search-hit", "4", "1", "2", "3")
    code, text = run("search", "--h", "1", "--bound", "50")
    assert (code, text) == (EXIT_OK, "")


def test_search_budget_refusal():
    code, text = run("--pair-budget", "10", "search", "--h", "1", "--bound", "100")
    assert code == EXIT_RESOURCE_REFUSED
    assert text == ""


@pytest.mark.parametrize("argv", [
    ("solve", "--h", "1.5", "--gen", "340,680"),
    ("solve", "--h", "16", "--gen", "340,681"),
    ("solve", "--h", "1", "--gen", "340,680"),
    ("verify", "--h", "206", "--quad", "1,2,3"),
    ("parametric", "--family", "nope", "--params", "1"),
    ("parametric", "--family", "ex5", "--params", "1"),
    ("method2", "--z", "0", "--gen", "1,1"),
])
def test_invalid_input_exit_code(argv):
    code, _ = run(*argv)
    assert code == EXIT_INVALID_INPUT


def test_bad_config_exit_code():
    code, _ = run("--threads", "0", "search", "--h", "3", "--bound", "10")
    assert code == EXIT_INVALID_INPUT


def test_survey_rows():
    code, text = run("survey", "--h-range", "3:5", "--bound", "12")
    assert code == EXIT_OK
    rows = records(text)
    assert [r["h"] for r in rows] == ["3", "4", "5"]
    assert rows[0]["found"] and rows[0]["A"] == "4"
    assert rows[2]["B"] == "0"


def test_parametric_params_and_sweep():
    code, text = run("parametric", "--family", "master", "--params", "1,1")
    assert code == EXIT_OK
    assert quads(records(text)) == [("5", "3", "0", "1", "2")]
    code, text = run("parametric", "--family", "ex5", "--params", "1", "--allow-correction")
    assert quads(records(text)) == [("15", "2", "0", "1", "1")]
    code, text = run("parametric", "--family", "master", "--sweep", "-1..1")
    assert code == EXIT_OK
    assert all(verify(*q) for q in quads(records(text)))


def test_families_table():
    code, text = run("--output", "table", "families")
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0].split()[:3] == ["kind", "name", "arity"]
    assert len(lines) == 2 + 16
    assert any(line.split()[1] == "ex5" and " no " in f" {line} " for line in lines[2:])


def test_twist_scan_record():
    code, text = run("twist-scan", "--h", "1", "--t-list", "1,2,3", "--bound", "100")
    assert code == EXIT_OK
    (rec,) = records(text)
    assert (rec["t"], rec["twisted_h"], rec["exhausted"]) == ("2", "16", False)
    assert "340,680" in rec["general_points"]
    assert rec["skipped_singular"] == ["1"]


def test_sweep_command():
    code, text = run("sweep")
    assert code == EXIT_OK
    recs = records(text)
    assert len(recs) == len(sweep_catalog())
    assert sum(r["status"] == "erratum" for r in recs) == 5


def test_conjecture2_entries_and_catalog_default():
    code, text = run("conjecture2", "--n", "108", "--entry", "5/3:2500/81,109000/729", "--multiples", "1")
    assert code == EXIT_OK
    (rec,) = records(text)
    assert rec["miss"] is False
    assert rec["matches"] == [{"z": "5/3", "multiple_index": 1, "h": "4/3", "t": "3"}]
    code, text = run("conjecture2", "--n", "108", "--multiples", "1")
    assert records(text)[0]["miss"] is False


def test_records_round_trip_through_verify():
    _, text = run("solve", "--h", "16", "--gen", "340,680", "--multiples", "4")
    for h, A, B, C, D in quads(records(text)):
        assert verify(h, int(A), int(B), int(C), int(D))


def test_output_is_deterministic():
    argv = ("search", "--h", "3", "--bound", "30", "--segments", "3")
    assert run(*argv) == run(*argv)


def test_search_flags_after_subcommand():
    code, text = run("search", "--h", "3", "--bound", "30", "--segments", "3", "--threads", "1")
    assert code == EXIT_OK
    assert records(text)[0]["provenance"] == "search"
    code, text = run("survey", "--h-range", "1:2", "--bound", "100", "--pair-budget", "10")
    assert (code, text) == (EXIT_RESOURCE_REFUSED, "")


def test_negative_flag_values():
    code, text = run("verify", "--h", "-206", "--quad", "3923,506,4747,1084")
    assert code == EXIT_OK
    assert records(text)[0]["h"] == "-206"
    code, text = run("verify", "--h", "-7/10", "--quad", "1,2,1,2")
    assert (code, records(text)[0]["h"]) == (EXIT_OK, "-7/10")
    code, text = run("verify", "--h", "206", "--quad", "-3923,1084,4747,506")
    assert code == EXIT_OK
    assert records(text)[0]["A"] == "-3923"


def test_attach_negative_values():
    argv = ["--log-level", "DEBUG", "solve", "--h", "-805/3977", "--gen", "-1/4,2", "--integerize"]
    assert cli.attach_negative_values(argv) == [
        "--log-level", "DEBUG", "solve", "--h=-805/3977", "--gen=-1/4,2", "--integerize",
    ]
    assert cli.attach_negative_values(["--h=-3", "--quad", "-.5"]) == ["--h=-3", "--quad=-.5"]


def test_unreadable_files_exit_invalid_input(tmp_path):
    bad = tmp_path / "latin1.txt"
    bad.write_bytes(b"340,680 \xff\n")
    code, _ = run("solve", "--h", "16", "--gen-file", str(bad))
    assert code == EXIT_INVALID_INPUT
    code, _ = run("sweep", "--catalog", str(bad))
    assert code == EXIT_INVALID_INPUT


def test_render_table_aligns_columns():
    table = cli.render_table([{"h": "1", "A": "158"}, {"h": "206", "A": None}])
    assert table.splitlines() == ["h    A", "---  ---", "1    158", "206  -"]
