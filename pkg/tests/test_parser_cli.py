from __future__ import annotations

import json
import subprocess
import sys

import pytest

from hfkit import EvalError, ParseError, Session, parse, run_suite
from hfkit.parser import Braces, EmptySet, Ident, Let, Numeral, Op, format_expr, parse_program


def test_parse_empty_set():
    assert parse("{}") == EmptySet()


def test_parse_nested():
    assert parse("{{},{{}}}") == Braces((EmptySet(), Braces((EmptySet(),))))


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse("{,")
    assert exc.value.line == 1 and exc.value.col == 2
    assert exc.value.expected


def test_parse_numeral_and_ident():
    assert parse("12") == Numeral(12)
    assert parse("spam") == Ident("spam")


def test_parse_infix_and_prefix():
    assert parse("2 in 3") == Op("in", (Numeral(2), Numeral(3)))
    assert parse("in 2 3") == Op("in", (Numeral(2), Numeral(3)))
    assert parse("rank {{{}}}") == Op("rank", (Braces((Braces((EmptySet(),)),)),))


def test_parse_program_let():
    stmts = parse_program("let x = {{}}\ncanon x\n")
    assert stmts[0] == Let("x", Braces((EmptySet(),)))
    assert stmts[1] == Op("canon", (Ident("x"),))


def test_parse_rejects_trailing_junk():
    with pytest.raises(ParseError):
        parse("{} {}")


def test_format_expr_roundtrip():
    samples = [
        EmptySet(),
        Braces((EmptySet(), Braces((EmptySet(),)))),
        Numeral(7),
        Op("in", (Numeral(2), Numeral(3))),
        Op("rank", (Braces((EmptySet(),)),)),
    ]
    for ast in samples:
        assert parse(format_expr(ast)) == ast


def test_eval_rank():
    s = Session()
    assert s.run_program("rank {{{}}}") == ["2"]


def test_eval_st_ordinal_queries():
    s = Session()
    # {0, {0}} is hereditarily transitive; adding {{0}} breaks it
    assert s.run_program("ord? {{},{{}}}") == ["true"]
    assert s.run_program("ord? {{},{{}},{{{}}}}") == ["false"]
    assert s.run_program("transitive? {{{}}}") == ["false"]


def test_eval_numerals_expand():
    s = Session()
    assert s.run_program("2 in 3") == ["true"]
    assert s.run_program("canon 2") == ["{{},{{}}}"]
    assert s.run_program("3 sub 2") == ["false"]


def test_eval_let_and_commands():
    s = Session()
    out = s.run_program(
        "let x = {{},{{}}}\n"
        "let r = psi x\n"
        "phi r\n"
        "eq x 2\n"
    )
    assert out == ["{{},{{}}}", "true"]


def test_eval_phi_type_error():
    s = Session()
    with pytest.raises(EvalError):
        s.run_program("phi {}")


def test_eval_tov_type_error():
    s = Session()
    with pytest.raises(EvalError):
        s.run_program("tov {}")


def test_eval_tomewo_tov_roundtrip():
    s = Session()
    out = s.run_program("let m = tomewo {{{}}}\nm eq m\ntov m")
    assert out == ["true", "{{{}}}"]


def test_eval_mewo_rendering():
    s = Session()
    out = s.run_program("let m = tomewo {{{}}}\nm")
    assert out == ["mewo { elems: a b; lt: a<b; marked: b }"]


def test_eval_unbound_and_shadowing():
    s = Session()
    with pytest.raises(EvalError):
        s.run_program("canon nope")
    with pytest.raises(EvalError):
        s.run_program("let x = {}\nlet x = {{}}")


def test_eval_numeral_bound():
    s = Session(numeral_bound=5)
    with pytest.raises(Exception) as exc:
        s.run_program("canon 6")
    assert "bound" in str(exc.value)


def test_canon_sorted_members():
    s = Session()
    assert s.run_program("canon {{{}},{}}") == ["{{},{{}}}"]


def test_json_command_roundtrip():
    s = Session()
    (line,) = s.run_program("json {{},{{}}}")
    assert json.loads(line) == {"nodes": [[], [0], [0, 1]], "root": 2}


def test_dot_command():
    s = Session()
    (line,) = s.run_program("let m = tomewo {{{}}}\ndot m")
    assert line.startswith("digraph") and "->" in line
    (line,) = s.run_program("dot {{}}")
    assert line.startswith("digraph") and "->" in line


# -- suites ---------------------------------------------------------------------


def test_run_suite_all_passes():
    report = run_suite("all", seed=42, max_size=4, max_depth=4)
    assert report["failures"] == []
    assert report["cases"] > 20
    assert report["suite"] == "all" and report["seed"] == 42


def test_run_suite_deterministic():
    a = run_suite("correspondence", seed=7, max_size=4, max_depth=4)
    b = run_suite("correspondence", seed=7, max_size=4, max_depth=4)
    assert a == b


def test_run_suite_counterexamples():
    report = run_suite("counterexamples")
    assert report["failures"] == []
    assert report["cases"] >= 4


def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        run_suite("nope")


# -- console entry points ---------------------------------------------------------


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "hfkit.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
    )


def test_cli_check_exit_codes():
    ok = run_cli("check", "--suite", "counterexamples")
    assert ok.returncode == 0
    report = json.loads(ok.stdout)
    assert report["failures"] == []
    usage = run_cli("check", "--suite", "nope")
    assert usage.returncode == 2


def test_cli_check_seeded_reports_identical():
    a = run_cli("check", "--suite", "sets", "--seed", "42", "--max-size", "4")
    b = run_cli("check", "--suite", "sets", "--seed", "42", "--max-size", "4")
    assert a.stdout == b.stdout and a.returncode == 0


def test_cli_repl_and_batch_agree(tmp_path):
    text = "let x = {{},{{}}}\nrank x\nx in 3\ncanon {2,0,1}\n"
    script = tmp_path / "session.hf"
    script.write_text(text)
    batch = run_cli("run", str(script))
    repl = run_cli("repl", stdin=text)
    assert batch.returncode == 0 and repl.returncode == 0
    assert batch.stdout == repl.stdout
    assert batch.stdout.splitlines() == ["2", "true", "{{},{{}},{{},{{}}}}"]


def test_cli_run_reports_errors(tmp_path):
    script = tmp_path / "bad.hf"
    script.write_text("canon {,}\n")
    res = run_cli("run", str(script))
    assert res.returncode == 1
    assert "error" in res.stderr


def test_cli_mewo_file(tmp_path):
    path = tmp_path / "two.mewo"
    path.write_text("mewo { elems: a b; lt: a<b; marked: b }\n")
    text = run_cli("mewo", str(path))
    assert text.returncode == 0
    assert text.stdout.strip() == "mewo { elems: a b; lt: a<b; marked: b }"
    dot = run_cli("mewo", str(path), "--format", "dot")
    assert "a -> b" in dot.stdout
    as_json = run_cli("mewo", str(path), "--format", "json")
    doc = json.loads(as_json.stdout)
    assert doc["marked"] == ["b"]
    path2 = tmp_path / "two.json"
    path2.write_text(as_json.stdout)
    back = run_cli("mewo", str(path2))
    assert back.stdout == text.stdout


def test_cli_mewo_file_invalid(tmp_path):
    path = tmp_path / "bad.mewo"
    path.write_text("mewo { elems: a b; lt: ; marked: }\n")
    res = run_cli("mewo", str(path))
    assert res.returncode == 1
