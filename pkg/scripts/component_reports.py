#!/usr/bin/env python3
"""Print the stratum-by-stratum Euler characteristic reports of the two
worked (1,2,1) families, as a table or as JSON."""
import argparse
import json

from localp1.validation import component_chi_report


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--json", action="store_true")
    args = p.parse_args(argv)
    reports = [component_chi_report(name) for name in ("Ex52", "Ex57")]
    if args.json:
        print(json.dumps({r.name: {"total": r.total, "rows": r.as_table()} for r in reports},
                         indent=2))
        return
    for rep in reports:
        print(f"{rep.name}: total {rep.total}")
        for row in rep.rows:
            print(f"  {row.label:<34} reduced={row.reduced!s:<5} stable={row.stable!s:<5} "
                  f"chi={row.chi:+d} contributes {row.contribution:+d}")
            for line in row.config.to_text().splitlines():
                print(f"      {line}")


if __name__ == "__main__":
    main()
