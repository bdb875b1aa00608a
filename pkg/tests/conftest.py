import pytest

from zdlab.corpus import DEFAULT_CORPUS
from zdlab.harness import Instance, parse_corpus

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.append((marker.args[0], marker.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, outcome in sorted(_criteria):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {text}")


@pytest.fixture(scope="session")
def corpus_instances():
    out = []
    for entry in parse_corpus(DEFAULT_CORPUS):
        ring_text, ideal_text = entry.text.split(";")
        out.append(Instance.from_specs(ring_text, ideal_text))
    return out


@pytest.fixture(scope="session")
def corpus_rings(corpus_instances):
    seen = {}
    for inst in corpus_instances:
        seen.setdefault(inst.spec.split(";")[0].strip(), inst)
    return list(seen.values())
