"""List fold-fibre sizes over Y_N° grouped into shift orbits.

One line per orbit: a representative, the Catalan word of its fibre, the
fibre size, and the orbit length.  The weighted total must come out to
2^(N-1), one preimage for every partition of Y_N.
"""

import argparse

from cyclehull.moebius import (
    enumerate_circ,
    fibre_factorization,
    fold_fibre_size,
)
from cyclehull.partitions import format_partition, tau_orbit


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=11)
    args = ap.parse_args()
    n = args.n

    seen = set()
    total = 0
    orbits = 0
    for lam in enumerate_circ(n):
        if lam in seen:
            continue
        orbit = set(tau_orbit(lam, n))
        seen |= orbit
        orbits += 1
        size = fold_fibre_size(lam, n)
        word = fibre_factorization(lam, n)
        total += size * len(orbit)
        name = format_partition(lam) or "()"
        print(f"{name:24s} {word:28s} size {size:4d}  orbit {len(orbit):3d}")
    print(f"[{orbits} orbits, {len(seen)} vertices, "
          f"fibre total {total} = 2^{n - 1}]")
    assert total == 2 ** (n - 1)


if __name__ == "__main__":
    main()
