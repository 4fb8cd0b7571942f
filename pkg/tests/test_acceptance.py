"""Acceptance criteria, each run through the verification suite.

Every criterion maps to one or more registered checks.  A criterion passes
when all of its checks are within tolerance and their combined runtime is
inside the stated budget.  One summary line per criterion is printed at the
end of the session.
"""

import pytest

from besselfrac.verify import CHECKS, run_checks

from conftest import ACCEPTANCE_LINES

CRITERIA = {
    1: ("kernel norm", 5),
    2: ("kernel transform", 20),
    3: ("self-reciprocity", 10),
    4: ("inversion", 30),
    5: ("convolution theorem", 60),
    6: ("kernel identities", 20),
    7: ("Young inequalities", 30),
    8: ("approximate identity", 30),
    9: ("resolvent contraction and defect", 60),
    10: ("fractional power routes", 90),
    11: ("alpha = 1 and semigroup", 30),
    12: ("similarity", 10),
    13: ("scaling law", 5),
    14: ("mu = 1/2 closed forms", 10),
}


def test_every_criterion_has_checks():
    covered = {c.criterion for c in CHECKS if c.criterion is not None}
    assert covered == set(CRITERIA)


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    title, budget = CRITERIA[number]
    results = run_checks(criteria={number})
    assert results
    seconds = sum(r.seconds for r in results)
    ok = all(r.passed for r in results) and seconds < budget
    worst = max(results, key=lambda r: r.max_error / r.tolerance if r.tolerance else float("inf"))
    ACCEPTANCE_LINES.append(
        f"{'PASS' if ok else 'FAIL'} {number:2d} {title}: "
        f"worst {worst.check_name} error {worst.max_error:.2e} (tol {worst.tolerance:.0e}), "
        f"{seconds:.1f}s of {budget}s"
    )
    for r in results:
        assert r.passed, f"{r.check_name}: {r.max_error:.3e} > {r.tolerance:.1e} {r.detail}"
    assert seconds < budget
