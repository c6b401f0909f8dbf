"""
Reading a Jeongganbo score
==========================

A JGB-v1 file has one line per Jeonggan (one beat).  Rows inside a
Jeonggan are split by ``/`` and slots by spaces, so ``nam / im tae hwang``
is a half-beat Nam followed by three sixth-beat notes.
"""

from fractions import Fraction

from jgbtda.notation import Pitch, parse_score, resolve_symbol, serialize_score, total_duration

text = """#title warm-up
#jeonggan-per-column 6
hwang            % one full beat
hwang tae        % two half beats
nam / im tae hwang
-                % hold the Hwang for another beat
jung'
vv               % two lower neighbours: Tae, then Hwang
"""
score = parse_score(text)

# %%
# Each event carries a pitch, an exact rational length and its onset.
for e in score.events:
    print(f"{str(e.start_jeonggan):>5}  {e.pitch.name:<6} {e.pitch.scientific:<4} {e.duration}")
print("total beats:", total_duration(score))

# %%
# Symbols resolve against the previous pitch.  Ingeojil (``!``) holds the
# previous note and ends on a short note one step higher.
print(resolve_symbol("^^", Pitch.from_token("jung'"), Fraction(1)))
print(resolve_symbol("!", Pitch.from_token("im"), Fraction(1)))

# %%
# Serialization writes a canonical grid; parsing it back gives the same events.
canonical = serialize_score(score)
print(canonical)
assert parse_score(canonical).events == score.events
