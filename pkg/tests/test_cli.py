import io
import random
import shlex
from pathlib import Path

import pytest

from ordhomeo.cli import main
from ordhomeo.homeo import parse_homeo
from ordhomeo.ordinals import format_ordinal, parse_ordinal

from helpers import random_ordinal

GOLDEN = Path(__file__).parent / "golden"
DATA = GOLDEN / "data"


def run_cli(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def load_cases():
    cases = []
    lines = (GOLDEN / "cases.txt").read_text().splitlines()
    i = 0
    while i < len(lines):
        line = lines[i]
        if not line.startswith("$ "):
            i += 1
            continue
        command = shlex.split(line[2:])
        i += 1
        exit_code = 0
        if i < len(lines) and lines[i].startswith("? exit"):
            exit_code = int(lines[i].split()[-1])
            i += 1
        body = []
        while i < len(lines) and not lines[i].startswith("$ "):
            body.append(lines[i])
            i += 1
        while body and body[-1] == "":
            body.pop()
        expected = "\n".join(body) + "\n" if body else ""
        cases.append((line[2:], command, exit_code, expected))
    return cases


CASES = load_cases()


@pytest.mark.parametrize("label,command,exit_code,expected",
                         CASES, ids=[c[0] for c in CASES])
def test_golden(label, command, exit_code, expected, monkeypatch, capsys):
    monkeypatch.chdir(DATA)
    code, out = run_cli(command)
    assert out == expected
    assert code == exit_code


def test_corpus_is_large_enough():
    assert len(CASES) >= 25


def test_round_trip_random_ordinals():
    rng = random.Random(90)
    for _ in range(1000):
        x = random_ordinal(rng, max_rank=4, max_coef=30)
        code, out = run_cli(["ord", "eval", format_ordinal(x)])
        assert code == 0
        assert out.strip() == format_ordinal(x)
        assert parse_ordinal(out.strip()) == x


def test_emitted_homeo_reparses_canonically(monkeypatch):
    monkeypatch.chdir(DATA)
    for args in (["homeo", "check", "swap.hom"],
                 ["homeo", "invert", "swap.hom"],
                 ["homeo", "compose", "swap.hom", "trans01.hom"],
                 ["dyn", "transitive", "w -> w*2", "5 -> 9"],
                 ["dyn", "baire-witness", "trans1w1.hom", "1"]):
        code, out = run_cli(args)
        assert code == 0
        g = parse_homeo(out)
        from ordhomeo.homeo import format_homeo
        assert format_homeo(g) == out


def test_emitted_constraints_reparse_canonically(monkeypatch):
    monkeypatch.chdir(DATA)
    from ordhomeo.sieve import format_constraints, parse_constraints
    for args in (["sieve", "normalize", "dup.cs"],
                 ["sieve", "normalize", "forced.cs"]):
        code, out = run_cli(args)
        assert code == 0
        assert format_constraints(parse_constraints(out)) == out


def test_missing_file(monkeypatch, capsys):
    monkeypatch.chdir(DATA)
    code, out = run_cli(["homeo", "check", "nope.hom"])
    assert code == 1 and out == ""


def test_resource_error_exit_code():
    code, out = run_cli(["ord", "eval", "w^" * 40 + "w"])
    assert code == 3 and out == ""
