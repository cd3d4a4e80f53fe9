"""Run the bundled verification campaigns and write one JSON summary each.

    python scripts/run_campaigns.py --out results/
"""

import argparse
import json
import time
from pathlib import Path

from pfk.cli import BUNDLED, load_campaign_config
from pfk.harness import run_campaign


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results")
    ap.add_argument("names", nargs="*", default=list(BUNDLED))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in args.names:
        cfg = load_campaign_config(name)
        start = time.perf_counter()
        summary = run_campaign(cfg)
        elapsed = time.perf_counter() - start
        (out / f"{name}.json").write_text(json.dumps(summary.as_dict(), indent=1))
        print(f"{name:<10} instances={len(summary.reports):<4} passed={summary.passed:<4} "
              f"defects={summary.defects} ({elapsed:.1f}s)")
        failed += summary.defects > 0
    raise SystemExit(4 if failed else 0)


if __name__ == "__main__":
    main()
