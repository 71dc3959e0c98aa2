"""
Exhaustive verification reports and the ordered cycle-system search
"""
import pytest

from src.config_manager import ConfigManager
from src.digraph import LabelledEulerianDigraph, digraph_to_matrix
from src.dyck_core import parse_word
from src.errors import NotInFamily
from src.verification import BijectionVerifier, _next_cycles, catalan
from tests.oracles import ballot_count


@pytest.fixture
def verifier():
    return BijectionVerifier(ConfigManager())


@pytest.mark.parametrize('n', range(0, 12))
def test_catalan_matches_ballot_count(n):
    assert catalan(n) == ballot_count(n)


def test_check_word_running_example(verifier):
    matrix, failures = verifier.check_word(parse_word("xxxDDxDDxD"))
    assert failures == []
    assert matrix.to_text() == "11100\n10010\n00001"


@pytest.mark.parametrize('n', range(1, 9))
def test_semilength_reports_pass(verifier, n):
    report = verifier.check_semilength(n)
    assert report.passed, report.failures[:5]
    assert report.word_count == report.matrix_count == ballot_count(n)


def test_check_up_to(verifier):
    reports = verifier.check_up_to(3)
    assert [r.word_count for r in reports] == [1, 2, 5]
    assert all(r.passed for r in reports)


def test_check_up_to_is_capped(verifier, monkeypatch):
    monkeypatch.setenv("DYCK_SAFETY_LIMIT", "2")
    capped = BijectionVerifier(ConfigManager())
    assert len(capped.check_up_to(9)) == 2


@pytest.mark.slow
@pytest.mark.parametrize('n', (9, 10))
def test_semilength_reports_pass_large(verifier, n):
    assert verifier.check_semilength(n).passed


def test_next_cycles_share_a_proper_prefix():
    candidates = list(_next_cycles((1, 2, 3), 3, 4))
    assert (1, 4) in candidates
    assert (1, 2, 4) in candidates
    assert (4,) in candidates
    assert all(c[:1] == (1,) or 1 not in c for c in candidates)
    # the whole previous cycle is never kept
    assert not any(c[:3] == (1, 2, 3) for c in candidates)
    assert len(set(candidates)) == len(candidates)


def test_small_family_search(verifier):
    report = verifier.search_cycle_systems(max_vertices=3, max_cycles=3)
    assert report.systems_explored == report.accepted + len(report.counterexamples)
    assert report.accepted > 0


def test_family_search_finds_known_counterexample(verifier):
    report = verifier.search_cycle_systems(max_vertices=5, max_cycles=3)
    assert ((1, 2, 3), (1, 4), (3, 5)) in report.counterexamples
    for system in report.counterexamples:
        with pytest.raises(NotInFamily):
            digraph_to_matrix(LabelledEulerianDigraph(system))


def test_every_word_matrix_is_accepted_by_search(verifier):
    """Systems coming from Dyck words up to semilength 4 are all accepted"""
    report = verifier.search_cycle_systems(max_vertices=4, max_cycles=4)
    assert report.accepted == sum(ballot_count(n) for n in range(1, 5))


@pytest.mark.slow
def test_full_family_search(verifier):
    report = verifier.search_cycle_systems(max_vertices=5, max_cycles=6)
    assert report.systems_explored == report.accepted + len(report.counterexamples)
    assert report.counterexamples
