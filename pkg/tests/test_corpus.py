"""Every corpus fixture must pass all of its recorded facts."""

import pytest

from curveforms import corpus


@pytest.mark.parametrize("name", list(corpus.FIXTURES))
def test_fixture(name):
    report = corpus.run_fixture(name)
    failures = [f"{c.name}: {c.detail}" for c in report.checks if not c.ok]
    assert not failures, "; ".join(failures)
    assert report.checks, "fixture recorded no checks"


def test_unknown_fixture_rejected():
    with pytest.raises(KeyError):
        corpus.run_corpus(["no_such_fixture"])


def test_full_corpus_runs_green():
    reports = corpus.run_corpus()
    assert len(reports) == len(corpus.FIXTURES)
    assert all(r.ok for r in reports)


def test_generation_failure_expectation_flag():
    assert corpus.FIXTURES["acampo"].expects_generation_failure
    assert not corpus.FIXTURES["circle"].expects_generation_failure
