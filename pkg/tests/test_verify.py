import json

import pytest

from braidkit.catalog import catalog_build
from braidkit.garside import desingularize
from braidkit.verify import (
    CheckSpec, VerificationReport, bkl_relation_instances, conjugation_pairs, oracle_agreement,
    proof_step_identities, relation_multiset, run_acceptance_suite, sb2_property, verify_abelianization, verify_bkl,
    verify_proof_steps, verify_quotient_orders, verify_roundtrip, verify_soundness, verify_structural_coincidence,
    _sb_alphabet, _sigma_power,
)
from braidkit.words import Word, free_reduce


def verdicts(report):
    return {c.verdict for c in report.checks}


@pytest.mark.parametrize("family,n", [("artin_two_gen", 5), ("bp_reduced", 4), ("singular_two_gen", 4),
                                      ("sphere_two_gen", 5), ("bkl", 4), ("artin_canonical", 4),
                                      ("typeB_canonical", 4), ("bp_canonical", 4)])
def test_soundness_passes(family, n):
    report = verify_soundness(family, {"n": n})
    assert report.checks and verdicts(report) == {"pass"}
    torsion = family.startswith("type")
    assert len(report.checks) == len(catalog_build(family, n=n, torsion=torsion).relations)


def test_soundness_labels_quotient_level_checks():
    report = verify_soundness("typeD_reduced", {"n": 4})
    assert verdicts(report) == {"pass"}
    assert all("quotient-level soundness" in c.spec.provenance for c in report.checks)


def test_families_without_oracle_skip():
    report = verify_soundness("br_g34", {})
    assert verdicts(report) == {"skip"} and "no oracle" in report.checks[0].observed
    assert report.overall == "pass"


def test_quotient_orders():
    r = verify_quotient_orders("artin_two_gen", {"n": 5, "torsion": True})
    assert r.checks[0].expected == "120" and r.overall == "pass"
    r = verify_quotient_orders("sphere_two_gen", {"n": 3})
    assert r.checks[0].observed == "12" and r.overall == "pass"
    r = verify_quotient_orders("g25_quotient", {})
    assert r.checks[0].observed == "648" and r.overall == "pass"


def test_quotient_without_expected_value_is_reported_only():
    r = verify_quotient_orders("typeB_reduced", {"n": 3, "torsion": True})
    assert r.checks[0].verdict == "skip" and r.checks[0].observed.isdigit()


def test_overflow_is_a_failure():
    r = verify_quotient_orders("artin_two_gen", {"n": 5}, expected=1, max_cosets=500)
    assert r.checks[0].observed == "overflow" and r.overall == "fail" and r.only_overflow_failures


def test_wrong_expected_value_fails():
    assert verify_quotient_orders("artin_two_gen", {"n": 3, "torsion": True}, expected=7).overall == "fail"


def test_roundtrip_examples():
    r = verify_roundtrip("artin", 6)
    (s3,) = [c for c in r.checks if c.spec.id.endswith("/s3")]
    assert s3.observed.startswith("s1 s2 s3 s4 s5 s1 s2 s3 s4 s5 s1 ") and s3.verdict == "pass"
    assert r.overall == "pass"
    assert any(c.spec.id.endswith("/x3") for c in verify_roundtrip("singular", 4).checks)
    assert verify_roundtrip("singular", 4).overall == "pass"
    assert verify_roundtrip("bp", 4).overall == "pass"
    for fam in ("typeB", "typeD", "sphere"):
        assert verify_roundtrip(fam, 5).overall == "pass"


def test_proof_steps():
    labels = [label for label, _, _ in proof_step_identities(4)]
    assert "sigma x1 = x2 sigma" in labels and "sigma^4 x1 = x1 sigma^4" in labels
    assert any("(i=3, j=1)" in label for label in labels)
    for n in (3, 4):
        assert verify_proof_steps(n).overall == "pass"
    with pytest.raises(ValueError):
        verify_proof_steps(7)


def test_adjacent_pair_does_not_commute():
    # j - i = -1 gives a conjugate of s1 sharing a strand with x1
    assert (2, 1) not in conjugation_pairs(4)
    alpha = _sb_alphabet(4)
    c = _sigma_power(4, -1) + [("s1", 1)] + _sigma_power(4, 1)
    lhs = free_reduce(Word(alpha, tuple([("x1", 1)] + c)))
    rhs = free_reduce(Word(alpha, tuple(c + [("x1", 1)])))
    assert desingularize(lhs, 4) != desingularize(rhs, 4)


def test_bkl():
    inst = {frozenset(i) if len(i) == 2 else i for i in bkl_relation_instances(4)}
    assert frozenset([(4, 3), (2, 1)]) in inst
    assert frozenset([(3, 1), (4, 2)]) not in inst
    assert ((3, 2), (2, 1), (3, 1)) in inst
    for n in (3, 4):
        r = verify_bkl(n)
        assert r.overall == "pass"
        assert r.checks[-1].spec.id.endswith("builder")


def test_abelianization_checks():
    assert verify_abelianization("br_g34", {"torsion": True}).overall == "pass"
    assert verify_abelianization("artin_two_gen", {"n": 5}, expected="Z^2").overall == "fail"


def test_relation_multiset():
    d = catalog_build("typeD_reduced", n=4)
    assert relation_multiset(d) == relation_multiset(d.renamed({}))
    r = verify_structural_coincidence(3)
    assert r.checks[0].spec.kind == "structural"


def test_randomized_suites_small():
    checked, bad, equal = oracle_agreement(samples=200, seed=1, max_length=3)
    assert bad == 0 and 0 < equal < checked
    assert sb2_property(samples=100, seed=2) == (100, 0)


def test_report_json_schema_and_stability():
    def strip(text):
        data = json.loads(text)
        for c in data["checks"]:
            c["millis"] = 0
        return data
    a = run_acceptance_suite([1, 10]).to_json()
    b = run_acceptance_suite([1, 10]).to_json()
    assert strip(a) == strip(b)
    data = json.loads(a)
    assert set(data) == {"version", "checks", "overall"}
    for c in data["checks"]:
        assert {"id", "family", "params", "kind", "verdict", "expected", "observed", "millis"} <= set(c)
        assert c["verdict"] in ("pass", "fail", "skip") and c["provenance"]
    ids = [c["id"] for c in data["checks"]]
    assert len(ids) == len(set(ids))


def test_check_spec_validation():
    with pytest.raises(ValueError):
        CheckSpec("x", "artin_two_gen", {}, "nonsense")
    assert VerificationReport().overall == "pass"
