from collections import defaultdict

# filled in by test_acceptance.py: criterion -> [(part, passed, detail)]
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = defaultdict(list)


def criterion_lines(results) -> list[str]:
    lines = []
    for k in sorted(results):
        parts = results[k]
        ok = all(p[1] for p in parts)
        detail = "; ".join(f"{name}: {'ok' if good else 'FAILED'} ({info})" for name, good, info in parts)
        lines.append(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
    return lines


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in criterion_lines(ACCEPTANCE):
        terminalreporter.write_line(line)
