def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark and mark.args:
            item.user_properties.append(("criterion", tuple(mark.args)))


def pytest_terminal_summary(terminalreporter):
    status = {}
    for reports in terminalreporter.stats.values():
        for rep in reports:
            if getattr(rep, "when", None) != "call":
                continue
            for key, value in getattr(rep, "user_properties", []):
                if key == "criterion":
                    status[value] = "PASS" if rep.passed else "FAIL"
    if not status:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), outcome in sorted(status.items()):
        terminalreporter.write_line(f"{outcome} criterion {num}: {title}")
