"""Shared sink for the one-line acceptance verdicts printed after the run."""

LINES: list[str] = []


def record(number: int, ok: bool, detail: str) -> None:
    LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
