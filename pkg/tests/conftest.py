from hypothesis import HealthCheck, settings

# fixed seed: every property run draws the same examples
settings.register_profile(
    "bh",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("bh")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py::test_criterion_" in getattr(rep, "nodeid", "") and rep.when == "call":
                n = int(rep.nodeid.split("test_criterion_")[1].split("_")[0])
                lines.append((n, outcome, rep.nodeid.split("::")[1]))
    if lines:
        terminalreporter.section("acceptance criteria")
        for n, outcome, name in sorted(lines):
            terminalreporter.write_line(f"criterion {n}: {'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
