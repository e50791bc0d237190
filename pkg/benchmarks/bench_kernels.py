"""Compare the compiled kernels with the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py``.
"""

import argparse
import random
import timeit

from crystalmonoid import _kernels, kernels
from crystalmonoid.crystal import parse_type
from crystalmonoid.plactic import build_rule_table

try:
    from crystalmonoid import _speedups
except ImportError:
    _speedups = None


def bench(label, fn, number):
    best = min(timeit.repeat(fn, number=number, repeat=5)) / number
    print(f"{label:<36} {best * 1e6:10.2f} us")
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", default="C:3")
    ap.add_argument("--length", type=int, default=200)
    ap.add_argument("--number", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    ct = parse_type(args.type)
    t = build_rule_table(ct)
    rng = random.Random(args.seed)
    word = tuple(rng.choice(ct.alphabet) for _ in range(args.length))
    symbols = t.letters(word)
    i = ct.labels[0]
    eps, phi = ct._eps[i], ct._phi[i]
    m, rule_of, starts, lens, flat, dec = t._kern
    guard = t.step_guard(symbols)

    impls = [("python", _kernels)] + ([("cython", _speedups)] if _speedups else [])
    print(f"type {ct.spec}, word length {args.length}, selected backend: {kernels.BACKEND}")
    times = {}
    for name, mod in impls:
        times[name, "bracket"] = bench(f"bracket [{name}]", lambda: mod.bracket(word, ct.offset, eps, phi),
                                       args.number)
        times[name, "rewrite"] = bench(f"rewrite_leftmost [{name}]",
                                       lambda: mod.rewrite_leftmost(symbols, m, rule_of, starts, lens, flat,
                                                                    dec, guard),
                                       max(1, args.number // 10))
    if _speedups:
        for k in ("bracket", "rewrite"):
            print(f"speedup {k}: {times['python', k] / times['cython', k]:.1f}x")
        assert _kernels.bracket(word, ct.offset, eps, phi) == _speedups.bracket(word, ct.offset, eps, phi)
        assert (_kernels.rewrite_leftmost(symbols, m, rule_of, starts, lens, flat, dec, guard)
                == _speedups.rewrite_leftmost(symbols, m, rule_of, starts, lens, flat, dec, guard))
    else:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
