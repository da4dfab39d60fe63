CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        status, label = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {label}")
