"""Smoke test for the compiled `combinadics` extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`,
then run `python crates/python/python/smoke_test.py`.
"""

import itertools
import math

import combinadics as c


def colex(n, k):
    return sorted(itertools.combinations(range(n), k), key=lambda t: t[::-1])


def main():
    assert str(c.encode(7, 3)) == "4,3,0"
    assert c.Combinadic.zero(3).coefficients == [2, 1, 0]
    assert c.decode(c.Combinadic([5, 1, 0])) == 10

    for r in range(1, 6):
        rep = c.Combinadic.zero(r)
        for m in range(2000):
            assert rep == c.encode(m, r) and rep.decode() == m
            rep = rep.successor()

    for k in range(1, 5):
        for pos, t in enumerate(colex(9, k)):
            assert c.rank(list(t)) == pos
            assert c.unrank(pos, k) == list(t)

    big = list(range(950, 1000))
    x = c.rank(big)
    assert x == math.comb(1000, 50) - 1
    assert c.unrank(x, 50) == big

    assert c.binomial(200, 100) == math.comb(200, 100)
    assert list(c.enumerate(2, 0, 4)) == [[0, 1], [0, 2], [1, 2], [0, 3]]
    assert c.from_bitstring(c.to_bitstring([0, 3, 4], 6)) == [0, 3, 4]
    assert c.split_range(3, 0, 10, 2) == [(0, 5), (5, 10)]

    report = c.sweep_uniqueness(3, 20)
    assert report.passed and report.values_covered == 1140
    assert c.sweep_identities(20, 20).passed
    assert c.sweep_roundtrip(4, 5000).passed

    try:
        c.Combinadic.parse("3,3,0")
    except c.CombinadicsError as e:
        assert str(e).startswith("NotStrictlyDecreasing")
    else:
        raise AssertionError("expected CombinadicsError")

    assert c.run_cli(["encode", "7", "--terms", "3"]) == (0, "4,3,0\n", "")
    print("combinadics smoke test: ok")


if __name__ == "__main__":
    main()
