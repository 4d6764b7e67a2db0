"""Builds knots.jsonl and the reference-invariant fixture from a KnotInfo
CSV export (knotinfo_data_complete.csv, pipe separated).

usage: python3 extract_knotinfo.py path/to/knotinfo_data_complete.csv
"""

import csv
import json
import re
import sys
from pathlib import Path

MAX_CROSSINGS = 11
HERE = Path(__file__).resolve().parent
TERM = re.compile(r"([+-]?)\s*(\d*)\*?(t(?:\^\(?(-?\d+)\)?)?)?")


def parse_poly(text):
    """KnotInfo polynomial text in t -> {exponent: coefficient}."""
    terms = {}
    s = text.replace(" ", "")
    pos = 0
    while pos < len(s):
        m = TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        sign, digits, tpart, exp = m.groups()
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        if tpart:
            e = int(exp) if exp is not None else 1
        else:
            e = 0
        terms[e] = terms.get(e, 0) + coeff
        pos = m.end()
    return {e: c for e, c in terms.items() if c}


def serialize(terms):
    lo, hi = min(terms), max(terms)
    coeffs = ",".join(str(terms.get(e, 0)) for e in range(lo, hi + 1))
    return f"offset={lo}; coeffs=[{coeffs}]"


def main():
    csv.field_size_limit(10**9)
    rows = list(csv.DictReader(open(sys.argv[1]), delimiter="|"))[1:]
    table, reference = [], []
    for r in rows:
        if not r["crossing_number"].isdigit():
            continue
        c = int(r["crossing_number"])
        if c > MAX_CROSSINGS:
            continue
        name = r["classical_conway_name"] or r["name"]
        pd = json.loads(r["pd_notation"]) if r["pd_notation"] else []
        rec = {"name": name, "pd": pd}
        if r["name"] != name:
            rec["aliases"] = [r["name"]]
        table.append(rec)
        reference.append(
            {
                "name": name,
                "jones": serialize(parse_poly(r["jones_polynomial"])),
                "alexander": serialize(parse_poly(r["alexander_polynomial"])),
                "signature": int(r["signature"]),
                "determinant": max(1, int(r["determinant"])),
                "alternating": r["alternating"] == "Y",
            }
        )
    with open(HERE / "knots.jsonl", "w") as f:
        for rec in table:
            f.write(json.dumps(rec, separators=(",", ":")) + "\n")
    out = HERE.parent / "tests" / "data" / "knotinfo_reference.jsonl"
    with open(out, "w") as f:
        for rec in reference:
            f.write(json.dumps(rec, separators=(",", ":")) + "\n")
    print(len(table), "records")


if __name__ == "__main__":
    main()
