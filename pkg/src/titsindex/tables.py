"""Golden documents reproducing the classification tables.

Every document is generated from the rules file plus the engine, and
serialized deterministically (two-space indent, keys in insertion order,
UTF-8, trailing newline) so that regenerating gives identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .catalog import exceptional_rows, load_rules, parse_family, row_index, torsion_primes
from .diagrams import to_bourbaki
from .render import render_text


def dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _flag(row, p):
    return "yes" if p in row["primes"] else "no"


def _index_fields(family, row, rules):
    ix = row_index(family, row["id"], rules)
    return {
        "index": row["id"],
        "distinguished": [list(o) for o in ix.distinguished],
        "bourbaki": list(to_bourbaki(ix.diagram, ix.distinguished_vertices)),
    }


def _rows(family, primes, columns, rules):
    out = []
    for row in exceptional_rows(family, rules):
        entry = _index_fields(family, row, rules)
        for col in columns:
            if col in row:
                entry[col] = row[col]
        for p in primes:
            entry[f"{p}-index"] = _flag(row, p)
        entry["signature"] = row.get("signature")
        out.append(entry)
    return out


def table_torsion_primes(rules=None):
    data = load_rules(rules)["torsion_primes"]
    rows = []
    for r in data["rows"]:
        rows.append({"types": r["types"], "center_exponent": r["center_exponent"], "primes": r["primes"]})
    checks = {name: sorted(torsion_primes(name[0], int(name[1:]), rules))
              for name in ("A1", "A5", "B3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8")}
    return {"table": "torsion_primes", "caption": "Primes S(G)", "rows": rows, "examples": checks}


def table_F4(rules=None):
    return {"table": "F4", "caption": "Tits index of a group of type F4",
            "rows": _rows("F4", (2, 3), ("f3", "f5", "g3", "condition"), rules)}


def table_1E6(rules=None):
    return {"table": "1E6", "caption": "Possible Tits indexes of groups of type 1E6",
            "rows": _rows("1E6", (2, 3), ("ind_A",), rules)}


def table_1E6_trivial(rules=None):
    rows = []
    for r in load_rules(rules)["tables"]["1E6_trivial_tits_class"]:
        row = next(x for x in exceptional_rows("1E6", rules) if x["id"] == r["row"])
        rows.append({**_index_fields("1E6", row, rules), "f3": r["f3"], "g3": r["g3"]})
    return {"table": "1E6_trivial_tits_class",
            "caption": "Possible Tits indexes for G of type 1E6 with t_G = 0", "rows": rows}


def table_2E6(rules=None):
    rows = []
    for row in exceptional_rows("2E6", rules):
        entry = _index_fields("2E6", row, rules)
        entry["b"] = row["b"]
        sig = row.get("signature")
        entry["over_R"] = "no" if sig is None else f"yes ({sig})"
        entry["signature"] = sig
        rows.append(entry)
    return {"table": "2E6", "caption": "Possible Tits 2-indexes for G of type 2E6", "rows": rows}


def table_E7(rules=None):
    return {"table": "E7", "caption": "Tits indexes of groups of type E7",
            "rows": _rows("E7", (2, 3), ("ind_A",), rules)}


def table_E7_mod3(rules=None):
    rows = []
    for r in load_rules(rules)["tables"]["E7_mod3"]:
        row = next(x for x in exceptional_rows("E7", rules) if x["id"] == r["row"])
        rows.append({**_index_fields("E7", row, rules), "b": r["b"]})
    return {"table": "E7_mod3", "caption": "Possible Tits 3-indexes for a group of type E7", "rows": rows}


def table_E8(rules=None):
    return {"table": "E8", "caption": "Possible Tits indexes for a group of type E8",
            "rows": _rows("E8", (2, 3, 5), (), rules)}


def _j3(name, family, extra, rules):
    cols = []
    for r in load_rules(rules)["tables"][name]:
        row = next(x for x in exceptional_rows(family, rules) if x["id"] == r["row"])
        entry = {"J3": r["J3"], **_index_fields(family, row, rules)}
        entry[extra] = r[extra]
        cols.append(entry)
    return {"table": name, "caption": f"Mod-3 J-invariant and Tits 3-index for {family}", "columns": cols}


def table_J3_1E6(rules=None):
    return _j3("J3_1E6", "1E6", "ind_A", rules)


def table_J3_E8(rules=None):
    return _j3("J3_E8", "E8", "rost", rules)


TABLES = {
    "torsion_primes": table_torsion_primes,
    "F4": table_F4,
    "1E6": table_1E6,
    "1E6_trivial_tits_class": table_1E6_trivial,
    "2E6": table_2E6,
    "E7": table_E7,
    "E7_mod3": table_E7_mod3,
    "E8": table_E8,
    "J3_1E6": table_J3_1E6,
    "J3_E8": table_J3_E8,
}


def diagrams_text(rules=None):
    blocks = []
    for key in ("G2", "3D4", "F4", "1E6", "2E6", "E7", "E8"):
        family = parse_family(key)
        for row in exceptional_rows(family, rules):
            ix = row_index(family, row["id"], rules)
            blocks.append(f"# {family.name} {row['id']}\n{render_text(ix)}\n")
    return "\n".join(blocks)


def golden_files(rules=None):
    """File name -> text, for every golden artifact."""
    out = {f"{name}.json": dumps(fn(rules)) for name, fn in TABLES.items()}
    out["diagrams.txt"] = diagrams_text(rules)
    return out


def write_tables(out_dir, rules=None):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in golden_files(rules).items():
        path = out_dir / name
        path.write_bytes(text.encode("utf-8"))
        written.append(path)
    return written
