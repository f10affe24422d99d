import math

import pyzest


def test_scalar_arithmetic():
    i = pyzest.Scalar.root(1, 4)
    assert (i * i) == pyzest.Scalar.root(1, 2)
    assert i.pow(4).is_one()
    assert i.order() == 4
    assert pyzest.parse_scalar("-1") == pyzest.Scalar.root(1, 2)
    roots = pyzest.nth_roots(pyzest.Scalar.one(), 6)
    assert len(roots) == 6
    assert all(q.pow(6).is_one() for q in roots)


def test_group_basics():
    g = pyzest.Group.metacyclic33(3)
    assert g.order() == 18
    assert not g.is_abelian()
    s = pyzest.GroupElement([1, 0])
    t = pyzest.GroupElement([0, 1])
    assert g.mul(t, s) == g.mul(g.pow(s, 2), t)


def test_enumeration_counts():
    for n in range(2, 7):
        data = pyzest.enumerate_a12(n)
        expected = 2 * n if n % 2 == 0 else n
        assert len(data) == expected
        assert all(pyzest.verify(d)["all_pass"] for d in data)
    assert len(pyzest.enumerate_fk3(9, 1)) == 27
    assert len(pyzest.enumerate_fk3(3, 1)) == 3


def test_braiding_matrix():
    v = pyzest.builtin_a12(3)
    q = pyzest.braiding_matrix(v)
    assert q[0][0] == pyzest.Scalar.root(1, 2)
    assert q[1][1] == pyzest.Scalar.root(1, 3)


def test_coquasi_verification():
    d = pyzest.enumerate_a12(2)[0]
    rep = pyzest.verify_coquasi(d)
    assert rep["all_pass"]
    names = {row["name"] for row in rep["rows"]}
    assert "pentagon" in names


def test_z4_claim_check():
    good = pyzest.builtin_z4(pyzest.Scalar.root(1, 2), pyzest.Scalar.root(1, 4))
    assert pyzest.verify_braided(good)["all_pass"]
    bad = pyzest.builtin_z4(pyzest.Scalar.root(1, 4), pyzest.Scalar.root(1, 8))
    rep = pyzest.verify_braided(bad)
    assert not rep["all_pass"]
    failing = {row["name"] for row in rep["rows"] if not row["pass"]}
    assert "(BZ3)" in failing


def test_json_roundtrip():
    d = pyzest.enumerate_a12(3)[1]
    text = pyzest.datum_to_json(d)
    back = pyzest.datum_from_json(text)
    assert pyzest.datum_to_json(back) == text


def test_cohomology_counts():
    for n in range(1, 5):
        for m in range(1, 5):
            assert pyzest.cohomology_classes(2, n, m) == math.gcd(n, m)
