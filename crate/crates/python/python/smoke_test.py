"""Smoke test for the sympair_py extension.

Build and run from the workspace root:

    cargo build --release -p sympair-py
    cp target/release/libsympair_py.so crates/python/python/sympair_py.so
    python3 crates/python/python/smoke_test.py
"""

import sys

import sympair_py as sp


def main() -> int:
    f3 = sp.Field(3)
    assert f3.q == 3
    assert f3.mul(2, 2) == 1
    assert f3.inv(2) == 2

    f4 = sp.Field(2, 2)
    assert f4.modulus == [1, 1, 1]
    assert all(f4.mul(a, f4.inv(a)) == 1 for a in range(1, 4))

    f2 = sp.Field(2)
    assert f2.pair_weight([1, 0, 1, 0, 0]) == 4
    assert f2.hamming_weight([1, 0, 1, 0, 0]) == 2
    assert f2.run_count([1, 0, 0, 0, 1], [0] * 5) == ([0, 4], 1)
    assert f2.pair_distance([1, 0, 0, 0, 1], [0] * 5) == 3
    assert f3.pair_read([2, 1, 0]) == [(2, 1), (1, 0), (0, 2)]

    code = sp.CodeSpec(3, 2, 4)
    assert (code.n, code.dimension) == (9, 5)
    d_p, branch = code.pair_distance()
    assert d_p == 6, branch
    assert code.min_pair_weight()[0] == d_p
    assert code.contains(code.encode([1, 2, 0, 1]))
    successes, trials, rate = code.simulate(t=2, trials=50, seed=7)
    assert (successes, trials, rate) == (50, 50, 1.0)

    assert [row[3] for row in sp.table(3, 2)] == [2, 3, 4, 4, 6, 6, 6, 9, 9, 0]
    assert sp.mds(5, 1) == [0, 1, 2, 3]
    assert all(row[5] == "match" for row in sp.verify(2, 3))

    try:
        sp.CodeSpec(3, 2, 1).min_pair_weight(max_enum=10)
    except sp.BudgetExhausted:
        pass
    else:
        raise AssertionError("expected BudgetExhausted")

    try:
        sp.Field(4)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for non-prime p")

    print("sympair_py smoke test: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
