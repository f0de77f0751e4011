"""Time the compiled and numpy enumeration kernels on the same extension codes.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from codeweights import kernels
from codeweights.codes import extend_code, weight_distribution
from codeweights.families import field_for_q, rm1_code, simplex_code

CASES = [
    ("RM_2(1,4) over GF(2^5)", lambda: extend_code(rm1_code(field_for_q(2), 5), 5)),
    ("S_2(5) over GF(2^5)", lambda: extend_code(simplex_code(field_for_q(2), 5), 5)),
    ("RM_2(1,5) over GF(2^4)", lambda: extend_code(rm1_code(field_for_q(2), 6), 4)),
    ("S_3(4) over GF(3^4)", lambda: extend_code(simplex_code(field_for_q(3), 4), 4)),
    ("RM_3(1,3) over GF(3^4)", lambda: extend_code(rm1_code(field_for_q(3), 4), 4)),
    ("S_5(3) over GF(5^3)", lambda: extend_code(simplex_code(field_for_q(5), 3), 3)),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"{'case':28s} {'visited':>12s} " + " ".join(f"{b:>10s}" for b in backends) + "   speedup")
    for name, build in CASES:
        code = build()
        # warm field tables outside the timed region
        code.field.add_table()
        times = {}
        results = set()
        for b in backends:
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                results.add(weight_distribution(code, budget=1 << 40, backend=b))
                best = min(best, time.perf_counter() - t)
            times[b] = best
        assert len(results) == 1, "backends disagree"
        speed = times["python"] / times["cython"] if "cython" in times else 1.0
        print(f"{name:28s} {(code.q ** code.k - 1) // (code.q - 1):12d} " + " ".join(f"{times[b]:9.3f}s" for b in backends)
              + f"   {speed:6.1f}x")


if __name__ == "__main__":
    main()
