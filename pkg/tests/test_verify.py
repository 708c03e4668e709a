import random

import pytest

from youngrep.errors import LimitError
from youngrep.verify import (
    CheckResult, check_coxeter, check_paper_fixtures, check_words, run_suite,
)


def test_check_result_str():
    assert str(CheckResult("hook formula", True, "sum f^2 = 24 = 4!")) == "[PASS] hook formula: sum f^2 = 24 = 4!"
    assert str(CheckResult("oracle", False)) == "[FAIL] oracle"


def test_run_suite_reports_through_callback():
    lines = []
    results = run_suite(3, log_callback=lines.append)
    assert all(r.passed for r in results)
    assert lines == [str(r) for r in results]
    assert "paper matrices" not in [r.name for r in results]


def test_run_suite_n4_includes_fixtures():
    results = run_suite(4)
    by_name = {r.name: r for r in results}
    assert by_name["paper matrices"].passed
    assert "(1 3 4 2)" in by_name["paper matrices"].detail


def test_run_suite_limits():
    with pytest.raises(LimitError):
        run_suite(11)
    with pytest.raises(LimitError):
        run_suite(9, with_oracle=True)


def test_words_sampled_above_exhaustive_range():
    assert check_words(7, random.Random(1)).passed


def test_individual_checks():
    assert check_coxeter(5).passed
    assert check_paper_fixtures().passed


def test_failed_check_is_reported_not_raised(monkeypatch):
    import youngrep.verify as verify

    def broken(n):
        raise LimitError("too big")

    monkeypatch.setattr(verify, "check_coxeter", broken)
    results = run_suite(2)
    failed = [r for r in results if not r.passed]
    assert [r.name for r in failed] == ["coxeter relations"]
    assert "LimitError" in failed[0].detail


def test_bad_generator_index_is_reported_per_check(monkeypatch):
    import youngrep.verify as verify
    from youngrep.shapes import Partition
    from youngrep.specht import generator_matrix

    monkeypatch.setattr(verify, "check_coxeter", lambda n: generator_matrix(Partition((n,)), n))
    results = run_suite(3)
    failed = [r for r in results if not r.passed]
    assert [r.name for r in failed] == ["coxeter relations"]
    assert "GeneratorIndexError" in failed[0].detail
