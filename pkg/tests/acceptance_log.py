"""Collects one pass/fail line per acceptance criterion."""

LINES: list[str] = []


def record(number: int, title: str, failures: list, elapsed: float, limit: float | None = None) -> bool:
    slow = limit is not None and elapsed >= limit
    ok = not failures and not slow
    detail = f"{elapsed:.1f}s" + (f" (limit {limit:.0f}s)" if limit else "")
    if failures:
        shown = ", ".join(map(str, failures[:4]))
        detail += f"; {len(failures)} failing: {shown}{' ...' if len(failures) > 4 else ''}"
    if slow:
        detail += "; over time limit"
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  [{detail}]"
    LINES.append(line)
    print(line)
    return ok
