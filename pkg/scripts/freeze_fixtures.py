"""Recover S8_1 and S10_1 with classify and freeze them into sgsr/data.

Both graphs are the unique survivors with (a, b) = (-2, 4) at their order.
The sidecar records the classify call so the fixture can be reproduced.

    python3 scripts/freeze_fixtures.py [--out DIR]
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from sgsr.catalog import SEARCH_DERIVED, fixture_dir
from sgsr.formats import write_sg
from sgsr.search import classify

TARGETS = {"S8_1": (8, (-2, 4, 4)), "S10_1": (10, (-2, 4, 2))}
R, RHO = 5, 3


def freeze(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    for name, (n, abc) in TARGETS.items():
        report = classify(n, R, RHO)
        hits = [s for s in report.survivors if (s.params.a, s.params.b, s.params.c) == abc]
        if len(hits) != 1:
            raise SystemExit(f"{name}: expected one survivor with {abc}, found {len(hits)}")
        s = hits[0]
        (out / f"{name}.sg").write_text(write_sg(s.graph))
        sidecar = {
            "name": name,
            "expected": s.params.to_json(),
            "class": str(s.label),
            "provenance": SEARCH_DERIVED,
            "rule": f"unique survivor of classify with parameters {s.params}, canonical labelling",
            "canonical": s.form.hex(),
            "classify": {"n": n, "r": R, "rho": RHO, "mode": report.mode, "source": report.source,
                         "method": "pruned", "underlying_count": report.underlying_count,
                         "survivor_count": len(report.survivors)},
        }
        (out / f"{name}.json").write_text(json.dumps(sidecar, indent=2) + "\n")
        print(f"{name}: {s.params} {s.label} -> {out / (name + '.sg')}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=fixture_dir())
    freeze(ap.parse_args().out)


if __name__ == "__main__":
    main()
