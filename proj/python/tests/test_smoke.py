import pytest

import unlabelled_necklaces as un


def test_small_counts():
    assert [un.count(n) for n in range(1, 7)] == [1, 2, 2, 4, 4, 8]


def test_enumerate_matches_count():
    for n in range(1, 11):
        assert len(un.enumerate(n)) == un.count(n)


def test_rank_positions():
    for n in range(1, 9):
        for k, w in enumerate(un.enumerate(n)):
            assert un.rank(w)["rank_total"] == k
            assert un.unrank(k, n) == w


def test_breakdown_identities():
    w = un.enumerate(10)[37]
    r = un.rank(w, 8)
    assert r["rank_total"] == r["rank_asymmetric"] + r["rank_symmetric"] + r["rank_enclosing"]
    assert r["rank_necklace"] == 2 * r["rank_asymmetric"] + r["rank_symmetric"] + r["rank_enclosing"]


def test_big_roundtrip():
    n = 40
    k = un.count(n) // 3
    assert un.count(n) > 2**32
    w = un.unrank(k, n)
    assert un.rank(w)["rank_total"] == k


def test_errors():
    with pytest.raises(ValueError):
        un.rank("1100")
    with pytest.raises(ValueError):
        un.rank("01x")
    with pytest.raises((ValueError, IndexError)):
        un.unrank(un.count(6), 6)
