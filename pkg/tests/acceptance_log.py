"""Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

LINES: list[str] = []


def record(number: int, name: str, ok: bool, detail: str = "") -> bool:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {name}" + (f"  ({detail})" if detail else "")
    LINES.append(line)
    print(line)
    return ok
