def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for line in mod.summary_lines():
        tr.write_line(line)
    for k in sorted(mod.RESULTS):
        notes = mod.RESULTS[k][3]
        if notes:
            tr.write_line(f"criterion {k} notes:")
            for n in notes:
                tr.write_line(f"  {n}")
