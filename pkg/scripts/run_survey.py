"""Run the full verification survey and write the JSON report plus a timing table.

    python scripts/run_survey.py --n-max 8 --m-max 32 --out results/
"""

import argparse
import time
from pathlib import Path

from groupgraphs.verify import Status, survey, survey_to_json


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--m-max", type=int, default=32)
    parser.add_argument("--out", type=Path, default=Path("results"))
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    rows = survey(args.n_max, args.m_max)
    total = time.perf_counter() - start

    (args.out / "survey.json").write_text(survey_to_json(rows))
    (args.out / "survey_timed.json").write_text(survey_to_json(rows, timings=True))

    counts = {s: 0 for s in Status}
    for row in rows:
        for r in row.reports:
            counts[r.status] += 1
    print(f"{len(rows)} rows in {total:.2f} s")
    for status, k in counts.items():
        print(f"  {status.value:<15} {k}")
    slowest = sorted(rows, key=lambda r: r.seconds, reverse=True)[:5]
    print("slowest rows:")
    for row in slowest:
        print(f"  {row.kind} {row.parameter:<3} {row.seconds:.3f} s")


if __name__ == "__main__":
    main()
