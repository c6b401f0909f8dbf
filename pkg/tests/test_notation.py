import random
from fractions import Fraction as F
from importlib.resources import files

import pytest
from hypothesis import given, settings, strategies as st

from jgbtda.notation import (JGBSemanticError, JGBSyntaxError, ParseError, Pitch, Score, parse_score,
                             resolve_symbol, serialize_score, total_duration)
from oracles import random_jgb

HWANG, TAE, JUNG4 = Pitch(3), Pitch(4), Pitch(5)


def notes(score):
    return [(e.pitch.scientific, e.duration) for e in score.events]


def test_scale_tokens():
    assert Pitch.from_token("jung").scientific == "G#3"
    assert Pitch.from_token("hwang").scientific == "D#4"
    assert Pitch.from_token("jung'").scientific == "G#4"
    assert Pitch.from_token("tae'").scientific == "F5"
    assert Pitch.from_token("jung''").scientific == "G#5"
    assert [Pitch(i).token for i in range(11)][-1] == "jung''"
    for bad in ("im''", "sol", "jung'''"):
        with pytest.raises(ValueError):
            Pitch.from_token(bad)


def test_single_jeonggan_is_one_beat():
    assert notes(parse_score("hwang\n")) == [("D#4", 1)]


def test_two_slots_split_the_beat():
    assert notes(parse_score("hwang tae\n")) == [("D#4", F(1, 2)), ("F4", F(1, 2))]


def test_continuation_extends_previous_note():
    assert notes(parse_score("hwang\n-\n")) == [("D#4", 2)]


def test_up_symbol_after_hwang_is_tae():
    assert notes(parse_score("hwang\n^\n")) == [("D#4", 1), ("F4", 1)]


def test_rows_times_slots():
    s = parse_score("nam / im tae hwang\n")
    assert notes(s) == [("C4", F(1, 2)), ("A#3", F(1, 6)), ("F4", F(1, 6)), ("D#4", F(1, 6))]
    assert [e.start_jeonggan for e in s.events] == [0, F(1, 2), F(2, 3), F(5, 6)]


@pytest.mark.parametrize("symbol,prev,slot,expected", [
    ("vv", JUNG4, F(1), [(TAE, F(1, 2)), (HWANG, F(1, 2))]),
    ("=", TAE, F(1, 2), [(TAE, F(1, 2))]),
    ("^^", JUNG4, F(1), [(Pitch(7), F(1))]),
    ("^", HWANG, F(1), [(TAE, F(1))]),
    ("!", Pitch(1), F(1), [(Pitch(1), F(5, 6)), (Pitch(2), F(1, 6))]),
])
def test_resolve_symbol(symbol, prev, slot, expected):
    assert resolve_symbol(symbol, prev, slot) == expected


def test_resolve_symbol_errors():
    with pytest.raises(ValueError):
        resolve_symbol("^", Pitch(10), F(1))
    with pytest.raises(ValueError):
        resolve_symbol("vv", Pitch(1), F(1))
    with pytest.raises(ValueError):
        resolve_symbol("!", HWANG, F(1, 6))


def test_ingeojil_in_parse_and_configurable_short():
    assert notes(parse_score("im\n!\n")) == [("A#3", F(11, 6)), ("C4", F(1, 6))]
    assert notes(parse_score("im\n!\n", ingeojil_short=F(1, 3))) == [("A#3", F(5, 3)), ("C4", F(1, 3))]


def test_symbols_cross_jeonggan_and_column_boundaries():
    text = "#jeonggan-per-column 6\n" + "hwang\n" * 6 + "|\n^\n"
    assert notes(parse_score(text))[-1] == ("F4", 1)


def test_headers_comments_and_columns():
    s = parse_score("#title Test piece\n#jeonggan-per-column 12\n% comment\nnam  % trailing\n\n")
    assert s.title == "Test piece" and s.jeonggan_per_column == 12
    assert notes(s) == [("C4", 1)]


@pytest.mark.parametrize("text,kind,line,col", [
    ("^\n", JGBSemanticError, 1, 1),
    ("hwang\n  foo\n", JGBSyntaxError, 2, 3),
    ("a / b / c / d\n", JGBSyntaxError, 1, 1),
    ("hwang tae nam im\n", JGBSyntaxError, 1, 15),
    ("jung''\n^\n", JGBSemanticError, 2, 1),
    ("im\nvv\n", JGBSemanticError, 2, 1),
    ("hwang\nnam nam nam / nam nam !\n", JGBSemanticError, 2, 23),
    ("-\n", JGBSemanticError, 1, 1),
    ("hwang\n|\n", JGBSemanticError, 2, 1),
    ("hwang\n#title late\n", JGBSyntaxError, 2, 1),
    ("#colour red\n", JGBSyntaxError, 1, 1),
    ("#jeonggan-per-column 8\n", JGBSyntaxError, 1, 1),
    ("hwang / tae\nnam im / tae hwang\n", JGBSemanticError, 2, 1),
])
def test_errors_report_position(text, kind, line, col):
    with pytest.raises(kind) as info:
        parse_score(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert isinstance(info.value, ParseError)


def test_no_preceding_note_message():
    with pytest.raises(JGBSemanticError, match="no preceding note"):
        parse_score("^\n")


def test_total_duration():
    assert total_duration(parse_score("hwang tae\nnam / im tae hwang\n-\n")) == 3
    assert total_duration(Score()) == 0


@pytest.mark.parametrize("name", ["three_beats.jgb", "sample_dodeuri.jgb", "sample_taryong.jgb"])
def test_bundled_scores_conserve_time(name):
    text = (files("jgbtda") / "data" / name).read_text(encoding="utf-8")
    body = [ln.split("%")[0].strip() for ln in text.splitlines()]
    n_lines = sum(1 for ln in body if ln and not ln.startswith("#") and ln != "|")
    assert total_duration(parse_score(text)) == n_lines


def test_serialize_canonical_form():
    s = parse_score("hwang / !\n")
    assert serialize_score(s) == "#title\n#jeonggan-per-column 6\nhwang - - / - - tae\n"


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(1, 30), st.sampled_from([6, 12]))
def test_round_trip_and_conservation(seed, n_lines, per_column):
    text = random_jgb(random.Random(seed), n_lines, per_column)
    score = parse_score(text)
    assert total_duration(score) == n_lines
    assert all(6 % e.duration.denominator == 0 for e in score.events)
    assert all(0 <= e.pitch.degree_index <= 10 for e in score.events)
    again = parse_score(serialize_score(score))
    assert again.events == score.events
    onset = 0
    for e in score.events:
        assert e.start_jeonggan == onset
        onset += e.duration
