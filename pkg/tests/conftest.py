import contextlib
import time

ACCEPTANCE_LINES = []


@contextlib.contextmanager
def criterion(number, title, limit_s=None):
    """Record a PASS/FAIL line for an acceptance criterion, including its time limit."""
    notes = []
    start = time.perf_counter()
    try:
        yield notes
        elapsed = time.perf_counter() - start
        if limit_s is not None:
            assert elapsed < limit_s, f"took {elapsed:.2f}s, limit {limit_s}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        ACCEPTANCE_LINES.append(f"FAIL  criterion {number}: {title} ({elapsed:.2f}s) -- {exc}")
        raise
    extra = f" [{'; '.join(notes)}]" if notes else ""
    ACCEPTANCE_LINES.append(f"PASS  criterion {number}: {title} ({elapsed:.2f}s){extra}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
