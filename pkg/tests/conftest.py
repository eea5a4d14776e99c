"""Suite-wide hooks.

The acceptance module names its tests test_criterion_NN_<slug>; the log
hook below turns each into one visible pass/fail line so the acceptance
gate can be read off the pytest output directly.
"""


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    tag = name[len("test_criterion_"):]
    num, _, slug = tag.partition("_")
    outcome = "PASS" if report.passed else "FAIL"
    print(f"\nacceptance criterion {int(num):2d} {outcome}: {slug.replace('_', ' ')}")
