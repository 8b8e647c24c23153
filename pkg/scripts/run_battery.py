"""Run every verification suite and write the reports to one JSON file.

    python3 scripts/run_battery.py --out battery.json [--enable-n6]
"""

import argparse
import json
import time
from pathlib import Path

from braidcheck.suites import list_suites, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="battery.json")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--enable-n6", action="store_true")
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = []
    for name in list_suites():
        r = run_suite(name, seed=args.seed, enable_n6=args.enable_n6 or None)
        print(r.table(), flush=True)
        reports.append(r.to_dict())
    Path(args.out).write_text(json.dumps(reports, indent=2) + "\n")
    failed = [r["suite"] for r in reports if r["status"] != "pass"]
    print(f"{len(reports) - len(failed)}/{len(reports)} suites passed in {time.perf_counter() - t0:.1f}s -> {args.out}")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
