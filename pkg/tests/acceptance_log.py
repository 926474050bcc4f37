"""Collects per-criterion outcomes so the terminal summary prints one line each."""
from __future__ import annotations

_PARTS: dict = {}


def record(criterion: int, label: str, passed: bool) -> bool:
    _PARTS.setdefault(criterion, []).append((label, bool(passed)))
    print(f"criterion {criterion} [{label}]: {'PASS' if passed else 'FAIL'}")
    return passed


def summary_lines() -> list:
    out = []
    for criterion in sorted(_PARTS):
        parts = _PARTS[criterion]
        status = "PASS" if all(ok for _, ok in parts) else "FAIL"
        detail = "; ".join(f"{label} {'ok' if ok else 'failed'}" for label, ok in parts)
        out.append(f"criterion {criterion:2d}: {status}  ({detail})")
    return out
