import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    records = getattr(module, "RECORDS", None)
    if records:
        terminalreporter.section("acceptance criteria")
        for line in records:
            terminalreporter.write_line(line)
