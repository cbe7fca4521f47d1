"""Smoke test for the `cobweb` extension module.

Build and place the module next to this script first:

    cargo build -p cobweb-py --release --features extension-module
    cp target/release/libcobweb.so python/cobweb.so

then run `python3 python/smoke_test.py`.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import cobweb  # noqa: E402


def main():
    assert cobweb.fib(5) == 5
    assert cobweb.fibonomial(5, 2) == 15
    assert cobweb.fibonomial(0, 3) == 0
    assert all(cobweb.fibonomial(20, k, method=m) == cobweb.fibonomial(20, k)
               for k in range(21) for m in ("a", "b"))
    assert cobweb.f_factorial(6) == 240
    assert cobweb.f_falling(6, 3) == 120
    assert cobweb.q_binomial(4, 2) == [1, 1, 2, 1, 1]
    assert cobweb.c_coeff([1, 2, 3], 2) == 11
    assert cobweb.s_coeff([1, 1, 1], 2) == 6
    assert cobweb.c_coeff([3, 1, 2], 2, sort=True) == 11

    p = cobweb.CobwebPoset(6)
    assert p.level_sizes == [1, 1, 2, 3, 5, 8]
    assert p.vertex_count == 20
    assert p.coord_of(8) == (1, 5)
    assert p.linear_index(1, 5) == 8
    assert not p.leq(3, 4)
    assert p.zeta() == p.zeta(explicit=True)
    z, mu = p.zeta(), p.mobius()
    n = p.vertex_count
    prod = [[sum(z[i][t] * mu[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    assert prod == [[int(i == j) for j in range(n)] for i in range(n)]
    assert len(p.enumerate_max_chains(1, 1, 5)) == 30
    assert p.count_max_chains(2, 3, 6) == 120
    assert cobweb.CobwebPoset(3).count_all_chains(1, 3) == 2

    t = cobweb.find_tiling(2, 1, 3, model="permuted")
    assert t is not None and t.is_valid() and len(t) == 15 and len(t.cover) == 30
    assert cobweb.find_tiling(3, 2, 2) is not None
    assert cobweb.find_tiling(2, 1, 3) is None
    assert cobweb.aligned_obstruction(2, 3) is not None

    assert cobweb.n_of_r([1, 4], 4) == 4
    assert cobweb.fibonomial_via_paths(4, 2) == cobweb.fibonomial(5, 2)
    assert cobweb.count_ideals(10) == cobweb.fib(12)
    assert cobweb.beck_identities(10, 4)

    try:
        cobweb.CobwebPoset(13).zeta()
    except cobweb.GuardExceeded:
        pass
    else:
        raise AssertionError("expected GuardExceeded")
    try:
        cobweb.f_falling(2, 3)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    failed = [r for r in cobweb.verify("all") if not r[2]]
    assert not failed, failed

    print("cobweb", cobweb.__version__, "smoke test ok")


if __name__ == "__main__":
    main()
