"""Connection counts of the (cbrt 2, cbrt 4) ladder under several readings of
"a ladder of length N".

    python scripts/length_interpretations.py [--length 1000] [--slack 50]

The default reading bounds both indices: n, k in 1..N. The one-sided readings
let the other index run up to N + slack, which is enough for every connection
in this ladder since |n - k| stays small.
"""
import argparse

from cfladder.algebraic import nth_root, reciprocal_scale
from cfladder.cf import expand
from cfladder.ladder import build_ladder


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--length", type=int, default=1000)
    ap.add_argument("--slack", type=int, default=50)
    args = ap.parse_args()
    N, extra = args.length, args.length + args.slack

    xi = nth_root(2, 3)
    eta = reciprocal_scale(xi, 2)
    conns = build_ladder(expand(xi, extra + 1), expand(eta, extra + 1), 2).connections

    readings = {
        "n, k <= N (default)": lambda c: c.n <= N and c.k <= N,
        "n <= N only": lambda c: c.n <= N,
        "k <= N only": lambda c: c.k <= N,
        "n, k <= N - 1 (b_0..b_{N-1} each)": lambda c: c.n <= N - 1 and c.k <= N - 1,
        "n, k <= N + 1": lambda c: c.n <= N + 1 and c.k <= N + 1,
    }
    for name, keep in readings.items():
        print(f"{name:40s} {sum(1 for c in conns if keep(c))}")


if __name__ == "__main__":
    main()
