import _corpus


def pytest_terminal_summary(terminalreporter):
    if _corpus.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _corpus.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
