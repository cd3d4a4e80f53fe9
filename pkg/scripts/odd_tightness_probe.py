"""Probe the tight family with odd m against the odd-factor theorem.

The family (m+1 copies of K_{2m}, m+1 hubs) is built for odd m and checked
for: edge connectivity m+1, even order, an odd factor with degrees >= m, and
none with degrees >= m+2. Findings are printed, not asserted.
"""

import argparse

from pfk.connectivity import edge_connectivity
from pfk.criteria import delta_cap, min_parity_exists, search_delta_certificate, theorem4_delta
from pfk.factor import find_min_parity_factor
from pfk.generators import tight_family


def probe(m):
    inst = tight_family(m)
    g = inst.graph
    lam = edge_connectivity(g)[0]
    at_m = find_min_parity_factor(g, [m] * g.n)
    over = [m + 2] * g.n
    at_m2 = find_min_parity_factor(g, over)
    hub_delta = theorem4_delta(g, inst.hubs, over)
    if g.n <= delta_cap():
        cert = min_parity_exists(g, over).certificate
    else:
        cert = search_delta_certificate(g, over)
    return {
        "m": m,
        "n": g.n,
        "lambda": lam,
        "even_order": g.n % 2 == 0,
        "odd_factor_deg>=m": at_m is not None,
        "odd_factor_deg>=m+2": at_m2 is not None,
        "delta(hubs)": hub_delta,
        "certificate": None if cert is None else (sorted(cert.T), cert.value),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=int, nargs="+", default=[1, 3, 5])
    args = ap.parse_args()
    for m in args.m:
        if m % 2 == 0:
            raise SystemExit(f"odd m only, got {m}")
        r = probe(m)
        tight = r["lambda"] == m + 1 and r["odd_factor_deg>=m"] and not r["odd_factor_deg>=m+2"]
        print(" ".join(f"{k}={v}" for k, v in r.items()), f"tight={tight}")


if __name__ == "__main__":
    main()
