"""Compare the compiled kernels with the pure-Python ones on representative inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit
from itertools import permutations

from rookeuler import _pykernels
from rookeuler.posets import permutation_poset

try:
    from rookeuler import _ckernels
except ImportError:
    _ckernels = None

PI17 = (2, 4, 6, 8, 10, 1, 12, 3, 15, 5, 17, 7, 9, 11, 13, 14, 16)


def cases(mod):
    masks = permutation_poset(PI17).predecessor_masks()
    return {
        "rook table 3,4,5,6,7,8,8": lambda: mod.rook_ascent_table((3, 4, 5, 6, 7, 8, 8)),
        "multiset table 3^7 content 3,2,2": lambda: mod.multiset_ascent_table((3,) * 7, (0,) * 7, (3, 2, 2)),
        "Bruhat interval 41568237 (exc)": lambda: mod.lower_interval_stat_counts((4, 1, 5, 6, 8, 2, 3, 7), False, 2),
        "Bruhat interval 8765 4321 (des)": lambda: mod.lower_interval_stat_counts((8, 7, 6, 5, 4, 3, 2, 1), False, 1),
        "weak interval w0 in S_8": lambda: mod.lower_interval_stat_counts((8, 7, 6, 5, 4, 3, 2, 1), True, 1),
        "linear extensions of P_pi, n=17": lambda: mod.linear_extension_stat_counts(17, masks, 1),
        "S_6 Bruhat sweep": lambda: [mod.lower_interval_stat_counts(w, False, 1)
                                     for w in permutations(range(1, 7))],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py = cases(_pykernels)
    cy = cases(_ckernels) if _ckernels else {}
    print(f"{'case':40s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in py.items():
        tp = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        if name in cy:
            assert cy[name]() == fn() or sorted(cy[name]()) == sorted(fn())
            tc = min(timeit.repeat(cy[name], number=1, repeat=args.repeat))
            print(f"{name:40s} {tp * 1e3:9.1f}ms {tc * 1e3:9.1f}ms {tp / tc:7.1f}x")
        else:
            print(f"{name:40s} {tp * 1e3:9.1f}ms {'n/a':>10s}")


if __name__ == "__main__":
    main()
