import json
from pathlib import Path

import pytest

from msetmap import DuplicateName, ParseError, UndeclaredName
from msetmap.cli import eval_expression, parse_document, render_document
from msetmap.cli.main import main

from corpus import DATA, corpus

WORKED = str(DATA / "worked.msm")


def env(name):
    return parse_document((DATA / f"{name}.msm").read_text())


@pytest.mark.parametrize(
    "expr,expected",
    [
        ("f(A)", "{ 5/s, 0/t, 0/x, 5/y, 5/z }"),
        ("f^-1(M)", "{ 1/a, 1/b, 4/c, 1/d }"),
        ("card(A)", "11"),
        ("~(~A)", "{ 1/a, 4/b, 2/c, 4/d }"),
        ("~A", "{ 3/a, 0/b, 2/c, 0/d }"),
        ("A - ~A", "{ 0/a, 4/b, 0/c, 4/d }"),
        ("A + ~A & A", "{ 1/a, 4/b, 2/c, 4/d }"),
        ("(A + ~A) & A", "{ 1/a, 4/b, 2/c, 4/d }"),
        ("sub(f(f^-1(M)), M)", "true"),
        ("sub(M, f(f^-1(M)))", "false"),
        ("coin(A, ~A)", "false"),
        ("d(A, A)", "0.000000"),
        ("d(f(A), M)", "6.082763"),
        ("S(A, A)", "1.000000"),
        ("dia(Y)", "11.180340"),
        ("parikh(A)", "(1,4,2,4)"),
        ("parikh(A; d,c,b,a)", "(4,2,4,1)"),
        ("khomenko(f, A)", "{ 4/s, 0/t, 0/x, 5/y, 2/z }"),
    ],
)
def test_eval_on_worked_example(expr, expected):
    assert eval_expression(env("worked"), expr) == expected


def test_irreversibility_example():
    e = env("irreversible")
    assert eval_expression(e, "f(A) & f(B)") == "{ 0/x, 5/y, 4/z }"
    assert eval_expression(e, "f(A & B)") == "{ 0/x, 5/y, 0/z }"
    assert eval_expression(e, "sub(f(A) & f(B), f(A & B))") == "false"
    assert eval_expression(e, "f^-1(f(A))") == "{ 4/a, 4/b, 1/c, 4/d }"
    assert eval_expression(e, "f(f^-1(M))") == "{ 0/x, 0/y, 0/z }"


def test_complement_example():
    e = env("complement")
    assert eval_expression(e, "~g(A)") == "{ 4/s, 7/t, 2/x, 6/y, 5/z }"
    assert eval_expression(e, "g(~A)") == "{ 4/s, 0/t, 2/x, 6/y, 5/z }"


def test_parikh_example():
    assert eval_expression(env("parikh"), "parikh(A; e,a,b,d,c)") == "(3,4,3,0,1)"


def test_map_name_shadows_builtin():
    e = parse_document(
        "space X^1 { a }\nmset A in X = { 1/a }\nmap card : X -> X { u: a->a ; p: 0,1 }\n"
    )
    assert eval_expression(e, "card(A)") == "{ 1/a }"


def test_empty_document():
    e = parse_document("")
    assert not e.spaces and not e.msets and not e.maps


@pytest.mark.parametrize(
    "text,error,line,column",
    [
        ("mset A in X = { }", UndeclaredName, 1, 11),
        ("space X^1 { a }\nspace X^2 { b }", DuplicateName, 2, 7),
        ("space X^1 { a }\nmset A in X = { 2/a }", ParseError, 2, 6),
        ("space X^1 { a }\nmset A in X = { 1/b }", ParseError, 2, 19),
        ("space X^1 { a }\nmset A in X = { 1/a, 1/a }", ParseError, 2, 24),
        ("space X^1 { a, a }", ParseError, 1, 1),
        ("space X^1 { a }\nmap f : X -> X { u: a->a ; p: 0,0 }", ParseError, 2, 31),
        ("space X^1 { a }\nmap f : X^2 -> X { u: a->a ; p: 0,1 }", ParseError, 2, 11),
        ("space X^1 { a }\nmap f : X -> X { u: ; p: 0,1 }", ParseError, 2, 5),
        ("spaces X^1 { a }", ParseError, 1, 1),
        ("space X^1 { a } extra", ParseError, 1, 17),
        ("space X^1 { a", ParseError, 1, 14),
        ("space X^1 { a $ }", ParseError, 1, 15),
    ],
)
def test_parse_errors_are_located(text, error, line, column):
    with pytest.raises(error) as info:
        parse_document(text)
    assert (info.value.line, info.value.column) == (line, column)


@pytest.mark.parametrize(
    "expr,column",
    [("A + M", 3), ("Q", 1), ("g(A)", 1), ("f(M)", 1), ("card(A, A)", 1), ("dia(A)", 5), ("sub(A)", 1)],
)
def test_eval_errors_carry_position(expr, column):
    from msetmap import EvalError

    with pytest.raises(EvalError) as info:
        eval_expression(env("worked"), expr)
    assert info.value.position == column


def test_expression_syntax_error():
    with pytest.raises(ParseError):
        eval_expression(env("worked"), "A + ")


@pytest.mark.parametrize("name,text", sorted(corpus().items()))
def test_round_trip(name, text):
    first = parse_document(text)
    rendered = render_document(first)
    second = parse_document(rendered)
    assert second == first
    assert render_document(second) == rendered


def test_corpus_is_large_enough():
    docs = corpus()
    assert len(docs) >= 20
    assert {"worked", "irreversible", "complement", "parikh"} <= set(docs)


# -- command line ----------------------------------------------------------


def test_cli_eval(capsys):
    assert main(["eval", WORKED, "f(A)", "card(A)"]) == 0
    assert capsys.readouterr().out == "{ 5/s, 0/t, 0/x, 5/y, 5/z }\n11\n"


def test_cli_eval_error_exit_codes(capsys):
    assert main(["eval", WORKED, "A + M"]) == 2
    assert main(["eval", WORKED, "A + "]) == 1
    assert "column" in capsys.readouterr().err


def test_cli_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.msm"
    bad.write_text("space X^1 { a }\nmset A in Z = { }\n")
    assert main(["show", str(bad)]) == 1
    assert "2:11" in capsys.readouterr().err
    assert main(["show", str(tmp_path / "missing.msm")]) == 1


def test_cli_usage_error():
    assert main([]) == 1
    assert main(["audit", "--max-bound", "x"]) == 1


def test_cli_show(capsys):
    assert main(["show", WORKED]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == "map f : X^4 -> Y^5 { u: a->y, b->y, c->z, d->s ; p: 0,1,5,5,5 }"


def test_cli_claims(capsys):
    assert main(["claims"]) == 0
    assert capsys.readouterr().out.splitlines()[0].startswith("T1.1\t")


def test_cli_audit_single_claim(capsys):
    assert main(["audit", "--claim", "T1.17"]) == 0
    out = capsys.readouterr().out
    assert "CLAIM T1.17 holds" in out
    assert "SUMMARY claims=1 holds=1 violated=0 conditional=0" in out


def test_cli_audit_unknown_claim(capsys):
    assert main(["audit", "--claim", "bogus"]) != 0
    assert "bogus" in capsys.readouterr().err


def test_cli_audit_strict_and_json(capsys):
    assert main(["audit", "--claim", "TA.2", "--strict"]) == 3
    capsys.readouterr()
    assert main(["audit", "--claim", "TA.2-amended", "--strict", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["results"][0]["status"] == "holds"


def test_cli_audit_is_byte_deterministic(capsys):
    args = ["audit", "--seed", "42", "--max-universe", "2", "--max-bound", "2", "--trials", "100"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "msetmap", "eval", WORKED, "f^-1(M)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "{ 1/a, 1/b, 4/c, 1/d }\n"
