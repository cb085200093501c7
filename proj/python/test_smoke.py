import pytest

import _reslat as rl


def test_corpus_keys():
    keys = rl.corpus_keys()
    assert "RL7Q" in keys and "CHAIN3_LUK" in keys
    assert len(keys) == 7


def test_rl7q_facts():
    a = rl.builtin("RL7Q")
    assert a.n == 7
    assert a.boolean_center() == ["0", "1"]
    assert rl.dense_elements(a) == ["e", "1"]
    assert rl.radical(a) == ["e", "1"]
    assert rl.regular_elements(a) == ["0", "b", "d", "1"]
    assert rl.is_glivenko(a)
    assert rl.satisfies_star_equation(a)
    assert len(rl.all_filters(a)) == 5

    report = rl.classify(a)
    assert report["verdicts"]["quasi_local"] == "false"
    assert report["verdicts"]["semilocal"] == "true"
    assert report["max_count"] == 2


def test_operations():
    a = rl.builtin("CHAIN3_LUK")
    h = a.index_of("h")
    assert a.prod(h, h) == a.index_of("0")
    assert a.neg(h) == h
    assert a.order_of(h) == 2
    assert a.order_of(a.index_of("1")) is None
    assert a.leq(a.index_of("0"), h)


def test_quotient():
    a = rl.builtin("RL6D")
    q = rl.quotient(a, ["d"])
    assert q.n == 3
    assert q.elements == ["0/F", "b/F", "d/F"]


def test_check_claims_clean():
    for key in rl.corpus_keys():
        results = rl.check_claims(rl.builtin(key))
        assert all(c["status"] != "FAIL" for c in results)


def test_counts():
    assert rl.count_algebras(2) == 1
    assert rl.count_algebras(3) == 2
    assert rl.count_algebras(4) == 7


def test_errors():
    with pytest.raises(Exception):
        rl.builtin("NOPE")
    a = rl.builtin("BOOL2")
    with pytest.raises(Exception):
        a.index_of("zz")
