#!/usr/bin/env python3
"""Regenerates the bundled geo snapshot under data/.

Country rows are the real ISO 3166-1 alpha-2 inventory (via pytz).
Subdivision rows are synthetic: ISO publishes no free machine-readable
3166-2 master file, so this script fabricates a deterministic set with the
same shape and magnitude as the real standard (4,085 coded plus 142
uncoded rows). Coordinates are deterministic pseudo-values derived from the
row key; they are placeholders, not real geography.

Usage: python3 tools/make_geo_snapshot.py [data-dir]
"""

import csv
import hashlib
import string
import sys
from pathlib import Path

import pytz

CODED_SUBDIVISIONS = 4085
UNCODED_SUBDIVISIONS = 142

ALNUM = string.digits + string.ascii_uppercase


def pseudo_coord(key: str, lo: float, hi: float) -> str:
    digest = int.from_bytes(hashlib.sha256(key.encode()).digest()[:8], "big")
    value = lo + (digest / 2**64) * (hi - lo)
    return f"{value:.4f}"


def suffix(n: int) -> str:
    """Deterministic 1-3 char [A-Z0-9] suffix for the n-th subdivision."""
    out = ""
    n += 1
    while n:
        n, rem = divmod(n - 1, len(ALNUM))
        out = ALNUM[rem] + out
    return out


def main() -> None:
    data_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    data_dir.mkdir(parents=True, exist_ok=True)
    countries = sorted(pytz.country_names.items())

    with open(data_dir / "countries.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["name", "iso_3166_1", "longitude", "latitude",
                    "population", "area_km2", "agri_land_km2", "climate",
                    "wikipedia"])
        for code, name in countries:
            w.writerow([name, code,
                        pseudo_coord("lon:" + code, -180, 180),
                        pseudo_coord("lat:" + code, -90, 90),
                        "", "", "", "", ""])

    with open(data_dir / "subdivisions.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["name", "iso_3166_2", "country_code", "longitude",
                    "latitude", "population", "area_km2", "wikipedia"])
        for i in range(CODED_SUBDIVISIONS):
            code, country = countries[i % len(countries)]
            sub = f"{code}-{suffix(i // len(countries))}"
            w.writerow([f"{country} Region {i // len(countries) + 1}", sub,
                        code,
                        pseudo_coord("lon:" + sub, -180, 180),
                        pseudo_coord("lat:" + sub, -90, 90),
                        "", "", ""])
        for i in range(UNCODED_SUBDIVISIONS):
            code, country = countries[i % len(countries)]
            key = f"{code}/uncoded{i // len(countries) + 1}"
            w.writerow([f"{country} Territory {i // len(countries) + 1}", "",
                        code,
                        pseudo_coord("lon:" + key, -180, 180),
                        pseudo_coord("lat:" + key, -90, 90),
                        "", "", ""])


if __name__ == "__main__":
    main()
