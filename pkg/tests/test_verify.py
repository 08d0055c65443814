import pytest

from contbinom import verify
from contbinom.verify import CHECKS, SUITES, build_tasks, run_suite, run_task


def test_every_task_has_a_check():
    for suite in SUITES:
        for name, _ in build_tasks(suite, n_max=4, l_max=4, k_max=4):
            assert name in CHECKS


def test_identity_count_is_inclusive_grid():
    assert len(build_tasks("identity")) == 61 * 61
    assert len(build_tasks("identity", n_max=3, l_max=2)) == 4 * 3


def test_unknown_suite():
    with pytest.raises(ValueError):
        build_tasks("nope")


def test_all_concatenates_suites():
    bounds = dict(n_max=3, l_max=3, k_max=3)
    assert build_tasks("all", **bounds) == [t for s in SUITES for t in build_tasks(s, **bounds)]


@pytest.mark.parametrize("suite", SUITES)
def test_small_suites_pass(suite):
    summary = run_suite(suite, n_max=6, l_max=6, k_max=6)
    assert summary.checked > 0
    assert summary.failed == 0
    assert summary.ok


def test_failures_are_recorded(monkeypatch):
    monkeypatch.setitem(verify.CHECKS, "theorem", lambda n, l: (n, l) != (1, 2))
    summary = run_suite("identity", n_max=2, l_max=2)
    assert summary.checked == 9
    assert summary.failures == [("theorem", (("n", 1), ("l", 2)))]
    assert summary.as_dict()["failed"] == 1


def test_exceptions_count_as_failures():
    assert run_task(("lemma23", (("n", 5), ("l", 2)))) is False


def test_parallel_matches_serial():
    serial = run_suite("uv", jobs=1, k_max=8, n_max=8)
    parallel = run_suite("uv", jobs=3, k_max=8, n_max=8)
    assert serial.as_dict() == parallel.as_dict()
