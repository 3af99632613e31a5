"""Acceptance criteria: one test per numbered criterion, one printed
pass/fail line each.  All tolerances are zero: every assertion is an exact
equality at the stated truncation.  The bodies live in
prismlab.acceptance so the CLI criteria suites run the same checks."""
from prismlab.acceptance import CRITERIA


def _run(num):
    fn = dict(CRITERIA)[num]
    ok, detail = fn(seed=0, scale=1.0)
    print("[%s] criterion %d: %s" % ("PASS" if ok else "FAIL", num, detail))
    assert ok, "criterion %d failed (%s)" % (num, detail)


def test_criterion_01_witt_kernel():
    _run(1)


def test_criterion_02_derham_isomorphism():
    _run(2)


def test_criterion_03_char_p_discrepancy():
    _run(3)


def test_criterion_04_canonical_point():
    _run(4)


def test_criterion_05_q_exponential():
    _run(5)


def test_criterion_06_hopf_algebra():
    _run(6)


def test_criterion_07_eigen_embeddings():
    _run(7)


def test_criterion_08_pd_duality():
    _run(8)


def test_criterion_09_integer_valued():
    _run(9)


def test_criterion_10_equivariance():
    _run(10)


def test_criterion_11_hodge_tate():
    _run(11)


def test_criterion_12_group_laws():
    _run(12)
