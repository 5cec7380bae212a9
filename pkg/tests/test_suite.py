import pytest

from pvmoduli.suite import (
    STATUSES, SUITES, UnknownCheckId, all_checks, run, run_one, select, suite_of,
)


@pytest.fixture(scope="module")
def full():
    return run()


def test_catalogue_size_and_ids():
    ids = [c.id for c in all_checks()]
    assert len(ids) >= 40
    assert len(ids) == len(set(ids))
    assert all(c.paper_anchor for c in all_checks())


def test_every_check_in_a_suite():
    for c in all_checks():
        assert suite_of(c) in SUITES


def test_no_failures(full):
    bad = [(r.id, r.witness) for r in full if r.status == "fail"]
    assert bad == []


def test_discrepancies_are_flagged(full):
    flagged = {c.id for c in all_checks() if c.flagged}
    for r in full:
        assert r.status in STATUSES
        if r.status == "paper_discrepancy":
            assert r.id in flagged and r.witness


def test_d_trivial_on_boundary_passes():
    assert run_one("pic.D.trivial-on-boundary").status == "pass"


def test_unknown_ids():
    with pytest.raises(UnknownCheckId):
        run_one("no.such.check")
    with pytest.raises(UnknownCheckId):
        select(ids=["algebra.rho", "nope"])
    with pytest.raises(UnknownCheckId):
        select(suite="astrology")


def test_subset_matches_full_run(full):
    by_id = {r.id: r.stable() for r in full}
    ids = ["symmetry.order", "algebra.rho", "riccati.jets-x1"]
    sub = run(ids)
    # catalogue order, independent of request order
    assert [r.id for r in sub] == [i for i in by_id if i in ids]
    assert all(r.stable() == by_id[r.id] for r in sub)


def test_suite_selection():
    ids = select(suite="surface")
    assert ids and all(i.startswith("pic.") for i in ids)


def test_parallel_matches_serial():
    ids = select(suite="symmetry")
    assert [r.stable() for r in run(ids, jobs=2)] == [r.stable() for r in run(ids)]
