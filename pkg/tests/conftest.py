import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker:
            item.user_properties.append(("criterion", f"{marker.args[0]}. {marker.args[1]}"))


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for key in ("passed", "failed"):
        for report in terminalreporter.stats.get(key, []):
            label = dict(report.user_properties).get("criterion")
            if label and report.when == "call":
                outcomes.setdefault(label, []).append(report.outcome == "passed")
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(outcomes, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"[{'PASS' if all(outcomes[label]) else 'FAIL'}] {label}")
