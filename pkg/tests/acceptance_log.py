"""Collects one verdict line per acceptance criterion for the terminal summary."""

RESULTS: dict = {}


def record(criterion: str, ok: bool, detail: str) -> None:
    RESULTS[criterion] = (ok, detail)
    assert ok, f"{criterion}: {detail}"
