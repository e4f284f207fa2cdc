"""Time the three handler disciplines on right-nested Or chains of growing length.

Handling is iterative, so depth is bounded only by memory; the list carrier is
a tuple, so the concatenations make the total cost quadratic in the length.
"""
import argparse
import time

from scoped_effects.effects import mk_ndet_e, mk_once_alg_em, once, or_chain
from scoped_effects.em import handle_em
from scoped_effects.functorial import handle_e
from scoped_effects.indexed import handle_ix, mk_once_ix
from scoped_effects.prog import bind, ret


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[1_000, 10_000, 20_000])
    args = ap.parse_args()
    single = lambda a: (a,)
    ndet, em, ix = mk_ndet_e(), mk_once_alg_em(), mk_once_ix()
    print(f"{'n':>7} {'build':>8} {'functorial':>11} {'em':>8} {'indexed':>8} {'bind':>8} {'once':>8}")
    for n in args.sizes:
        p, t_build = timed(lambda: or_chain(n))
        expected = tuple(range(n + 1))
        r1, t1 = timed(lambda: handle_e(ndet, p))
        r2, t2 = timed(lambda: handle_em(em, single, p))
        r3, t3 = timed(lambda: handle_ix(ix, single, p))
        assert r1 == r2 == r3 == expected
        _, t4 = timed(lambda: bind(p, lambda a: ret(a + 1)))
        r5, t5 = timed(lambda: handle_e(ndet, once(p)))
        assert r5 == (0,)
        print(f"{n:>7} {t_build:8.3f} {t1:11.3f} {t2:8.3f} {t3:8.3f} {t4:8.3f} {t5:8.3f}")


if __name__ == "__main__":
    main()
