"""Parsing of the JGB-v1 text encoding of Jeongganbo scores.

A score file is a header followed by one line per Jeonggan::

    #title Sample
    #jeonggan-per-column 6
    hwang                % one beat
    hwang tae            % two slots in one row: 1/2 + 1/2
    nam' / -             % two rows: 1/2 + continuation
    |                    % column break

Rows inside a Jeonggan are separated by ``/`` and slots within a row by
whitespace.  A slot lasts ``1 / (rows * slots_in_row)`` Jeonggans.  Pitch
tokens are ``jung im nam hwang tae`` with up to two ``'`` octave marks;
the symbols ``- ^ ^^ vv = !`` are resolved against the previous sounded note.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

__all__ = [
    "SCALE",
    "YULMYEONG",
    "SYMBOLS",
    "Pitch",
    "NoteEvent",
    "Score",
    "ParseError",
    "JGBSyntaxError",
    "JGBSemanticError",
    "parse_score",
    "resolve_symbol",
    "total_duration",
    "serialize_score",
    "on_sixth_grid",
    "DEFAULT_INGEOJIL_SHORT",
]

#: The eleven pitches used in the corpus, lowest first.
SCALE = ("G#3", "A#3", "C4", "D#4", "F4", "G#4", "A#4", "C5", "D#5", "F5", "G#5")
YULMYEONG = ("jung", "im", "nam", "hwang", "tae")
SYMBOLS = ("-", "^", "^^", "vv", "=", "!")

DEFAULT_INGEOJIL_SHORT = Fraction(1, 6)
MAX_ROWS = 3
MAX_SLOTS = 3
VALID_COLUMN_LENGTHS = (6, 12)


@dataclass(frozen=True, order=True)
class Pitch:
    """A degree of the 11-note scale; 0 is Jung (G#3), 10 is Jung'' (G#5)."""

    degree_index: int

    def __post_init__(self):
        if not 0 <= self.degree_index < len(SCALE):
            raise ValueError(f"pitch degree {self.degree_index} outside scale 0..{len(SCALE) - 1}")

    @classmethod
    def from_token(cls, token: str) -> "Pitch":
        base = token.rstrip("'")
        octave = len(token) - len(base)
        if base not in YULMYEONG or octave > 2:
            raise ValueError(f"unknown pitch token {token!r}")
        return cls(YULMYEONG.index(base) + 5 * octave)

    @property
    def token(self) -> str:
        return YULMYEONG[self.degree_index % 5] + "'" * (self.degree_index // 5)

    @property
    def name(self) -> str:
        """Yulmyeong name, e.g. ``Hwang`` or ``Jung''``."""
        return YULMYEONG[self.degree_index % 5].capitalize() + "'" * (self.degree_index // 5)

    @property
    def scientific(self) -> str:
        return SCALE[self.degree_index]

    def shifted(self, steps: int) -> "Pitch":
        return Pitch(self.degree_index + steps)

    def __str__(self):
        return self.scientific


@dataclass(frozen=True)
class NoteEvent:
    pitch: Pitch
    duration: Fraction
    start_jeonggan: Fraction


@dataclass(frozen=True)
class Score:
    title: str = ""
    jeonggan_per_column: int = 6
    events: tuple[NoteEvent, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.jeonggan_per_column not in VALID_COLUMN_LENGTHS:
            raise ValueError(f"jeonggan-per-column must be 6 or 12, got {self.jeonggan_per_column}")

    @classmethod
    def from_notes(cls, notes: Iterable[tuple[Pitch, Fraction]], title: str = "",
                   jeonggan_per_column: int = 6) -> "Score":
        """Build a gapless score from ``(pitch, duration)`` pairs."""
        events = []
        onset = Fraction(0)
        for pitch, dur in notes:
            dur = Fraction(dur)
            events.append(NoteEvent(pitch, dur, onset))
            onset += dur
        return cls(title, jeonggan_per_column, tuple(events))

    def __len__(self):
        return len(self.events)


class ParseError(ValueError):
    """Invalid JGB-v1 input; carries a 1-based line and column."""

    kind = "parse"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{self.kind} error at line {line}, column {column}: {message}")


class JGBSyntaxError(ParseError):
    kind = "syntax"


class JGBSemanticError(ParseError):
    kind = "semantic"


def on_sixth_grid(value: Fraction) -> bool:
    return 6 % Fraction(value).denominator == 0


def resolve_symbol(symbol: str, previous_pitch: Pitch, slot_duration: Fraction,
                   ingeojil_short: Fraction = DEFAULT_INGEOJIL_SHORT) -> list[tuple[Pitch, Fraction]]:
    """Expand a context symbol into concrete ``(pitch, duration)`` notes.

    For ``!`` the first pair is the extension of the previous note (same
    pitch, ``slot - short``) and the second is the short upper note; callers
    merge the extension into the preceding event.  Raises ``ValueError`` when
    the result would leave the scale or the ingeojil slot is too short.
    """
    slot = Fraction(slot_duration)
    if slot <= 0:
        raise ValueError("slot duration must be positive")
    if symbol == "^":
        return [(_step(previous_pitch, 1, symbol), slot)]
    if symbol == "^^":
        return [(_step(previous_pitch, 2, symbol), slot)]
    if symbol == "vv":
        half = slot / 2
        return [(_step(previous_pitch, -1, symbol), half), (_step(previous_pitch, -2, symbol), half)]
    if symbol == "=":
        return [(previous_pitch, slot)]
    if symbol == "!":
        short = Fraction(ingeojil_short)
        if slot - short <= 0:
            raise ValueError(f"ingeojil slot {slot} not longer than the short note {short}")
        return [(previous_pitch, slot - short), (_step(previous_pitch, 1, symbol), short)]
    raise ValueError(f"unknown symbol {symbol!r}")


def _step(pitch: Pitch, steps: int, symbol: str) -> Pitch:
    target = pitch.degree_index + steps
    if not 0 <= target < len(SCALE):
        raise ValueError(f"symbol {symbol!r} after {pitch.name} ({pitch.scientific}) leaves the 11-pitch scale")
    return Pitch(target)


def total_duration(score: Score) -> Fraction:
    return sum((e.duration for e in score.events), Fraction(0))


_TOKEN_RE = re.compile(r"/|[^\s/]+")


class _Builder:
    """Mutable accumulator of notes while scanning a file."""

    def __init__(self, ingeojil_short: Fraction):
        self.short = Fraction(ingeojil_short)
        self.pitches: list[Pitch] = []
        self.durations: list[Fraction] = []
        self.origins: list[tuple[int, int]] = []

    def add(self, pitch: Pitch, dur: Fraction, origin: tuple[int, int]):
        self.pitches.append(pitch)
        self.durations.append(dur)
        self.origins.append(origin)

    def slot(self, token: str, dur: Fraction, line: int, col: int):
        if token == "-":
            if not self.pitches:
                raise JGBSemanticError("continuation '-' with no preceding note", line, col)
            self.durations[-1] += dur
            return
        if token in SYMBOLS:
            if not self.pitches:
                raise JGBSemanticError(f"symbol {token!r} with no preceding note", line, col)
            try:
                notes = resolve_symbol(token, self.pitches[-1], dur, self.short)
            except ValueError as exc:
                raise JGBSemanticError(str(exc), line, col) from None
            if token == "!":
                self.durations[-1] += notes[0][1]
                notes = notes[1:]
            for pitch, d in notes:
                self.add(pitch, d, (line, col))
            return
        try:
            pitch = Pitch.from_token(token)
        except ValueError:
            raise JGBSyntaxError(f"bad token {token!r}", line, col) from None
        self.add(pitch, dur, (line, col))


def parse_score(source_text: str, ingeojil_short: Fraction = DEFAULT_INGEOJIL_SHORT) -> Score:
    """Parse JGB-v1 text into a :class:`Score` with all symbols resolved."""
    short = Fraction(ingeojil_short)
    if short <= 0 or not on_sixth_grid(short):
        raise ValueError(f"ingeojil short-note length must be a positive multiple of 1/6, got {short}")
    title = ""
    per_column = 6
    builder = _Builder(short)
    n_lines = 0
    in_column = 0
    saw_break = False

    for lineno, raw in enumerate(source_text.splitlines(), start=1):
        text = raw.split("%", 1)[0].rstrip()
        stripped = text.strip()
        if not stripped:
            continue
        indent = len(text) - len(text.lstrip()) + 1
        if stripped.startswith("#"):
            if n_lines or saw_break:
                raise JGBSyntaxError("header line after body", lineno, indent)
            key, _, value = stripped[1:].partition(" ")
            value = value.strip()
            if key == "title":
                title = value
            elif key == "jeonggan-per-column":
                if value not in ("6", "12"):
                    raise JGBSyntaxError(f"jeonggan-per-column must be 6 or 12, got {value!r}",
                                         lineno, indent)
                per_column = int(value)
            else:
                raise JGBSyntaxError(f"unknown header key {key!r}", lineno, indent)
            continue
        if stripped == "|":
            if in_column != per_column:
                raise JGBSemanticError(
                    f"column has {in_column} Jeonggans, expected {per_column}", lineno, indent)
            in_column = 0
            saw_break = True
            continue

        rows: list[list[tuple[str, int]]] = [[]]
        for m in _TOKEN_RE.finditer(text):
            if m.group() == "/":
                rows.append([])
            else:
                rows[-1].append((m.group(), m.start() + 1))
        if len(rows) > MAX_ROWS:
            raise JGBSyntaxError(f"{len(rows)} rows in one Jeonggan (max {MAX_ROWS})", lineno, indent)
        for row in rows:
            if not row:
                raise JGBSyntaxError("empty row in Jeonggan", lineno, indent)
            if len(row) > MAX_SLOTS:
                raise JGBSyntaxError(f"{len(row)} slots in one row (max {MAX_SLOTS})",
                                     lineno, row[MAX_SLOTS][1])
        for row in rows:
            dur = Fraction(1, len(rows) * len(row))
            for token, col in row:
                builder.slot(token, dur, lineno, col)
        n_lines += 1
        in_column += 1
        if saw_break and in_column > per_column:
            raise JGBSemanticError(f"column exceeds {per_column} Jeonggans", lineno, indent)

    events = []
    onset = Fraction(0)
    for pitch, dur, (line, col) in zip(builder.pitches, builder.durations, builder.origins):
        if not on_sixth_grid(dur):
            raise JGBSemanticError(f"note length {dur} is not a multiple of 1/6 Jeonggan", line, col)
        events.append(NoteEvent(pitch, dur, onset))
        onset += dur
    return Score(title, per_column, tuple(events))


_GRIDS = {1: (1, 1), 2: (1, 2), 3: (1, 3), 6: (2, 3)}


def serialize_score(score: Score) -> str:
    """Render a score as canonical JGB-v1 (explicit pitches and ``-`` only)."""
    total = total_duration(score)
    if total.denominator != 1:
        raise ValueError(f"score length {total} is not a whole number of Jeonggans")
    lines = [f"#title {score.title}".rstrip(), f"#jeonggan-per-column {score.jeonggan_per_column}"]
    onsets: dict[int, list[tuple[Fraction, Pitch]]] = {}
    for e in score.events:
        if not on_sixth_grid(e.start_jeonggan) or not on_sixth_grid(e.duration):
            raise ValueError(f"event at {e.start_jeonggan} is off the 1/6 grid")
        onsets.setdefault(int(e.start_jeonggan), []).append((e.start_jeonggan % 1, e.pitch))

    for g in range(int(total)):
        starts = onsets.get(g, [])
        n = 1
        for offset, _ in starts:
            n = math.lcm(n, offset.denominator)
        n_rows, n_slots = _GRIDS[n]
        slots = ["-"] * n
        for offset, pitch in starts:
            slots[int(offset * n)] = pitch.token
        rows = [" ".join(slots[r * n_slots:(r + 1) * n_slots]) for r in range(n_rows)]
        lines.append(" / ".join(rows))
        if (g + 1) % score.jeonggan_per_column == 0:
            lines.append("|")
    return "\n".join(lines) + "\n"

