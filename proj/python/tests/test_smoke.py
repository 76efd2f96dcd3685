from fractions import Fraction

import nkoszul


def test_polynomial_hilbert_series():
    A = nkoszul.polynomial(3)
    assert A.hilbert_series(5) == [1, 3, 6, 10, 15, 21]
    assert A.dual_dims(4) == [1, 3, 3, 1, 0]


def test_antisymmetrizer_certificate_and_dvp():
    A = nkoszul.antisymmetrizer(4, 3)
    cert = nkoszul.koszul_certificate(A, 5)
    assert cert["passed"] is True
    assert nkoszul.dvp_check(A, 6)["passed"] is True


def test_non_koszul_presentation():
    spec = {
        "n": 2,
        "N": 2,
        "relations": [
            {"grade": 2, "terms": [{"word": [0, 0], "coeff": "1"}]},
            {"grade": 2, "terms": [{"word": [0, 1], "coeff": "1"}, {"word": [1, 1], "coeff": "1"}]},
        ],
    }
    import json

    A = nkoszul.Algebra.from_json(json.dumps(spec))
    cert = nkoszul.koszul_certificate(A, 5)
    assert cert["passed"] is False
    assert cert["first_failure"]["m"] == 4


def test_kmt_on_quantum_plane():
    report = nkoszul.kmt_check(nkoszul.quantum_space(2), 3)
    assert report["passed"] and report["counit_matches"]


def test_counting_identities():
    assert all(nkoszul.identity_eq1(4, m) == 0 for m in range(1, 8))
    assert nkoszul.count_admissible(3, 2, 4) == 15
    assert nkoszul.admissible_identity_check(4, 3, 8)["passed"] is True


def test_master_theorems():
    Z = nkoszul.random_rational_matrix(3, 1)
    assert all(Fraction(x).denominator <= 9 for row in Z for x in row)
    assert nkoszul.mmt_check(Z, 4)["passed"] is True
    assert nkoszul.nmt_check(3, Z, 4)["passed"] is True


def test_run_matches_cli():
    code, report = nkoszul.run("dual-dims", algebra="antisym", n=4, N=3, max_degree=6)
    assert code == 0
    assert report["verdict"] == "holds"
    code, report = nkoszul.run("hilbert", algebra="nonsense", n=2)
    assert code == 2
