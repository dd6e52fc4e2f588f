# cli/render.py
import csv
import io
import json
from typing import Any, Dict, List, Union

from cli.schemas import OutputFormat
from models import InvariantReport

Payload = Union[Dict[str, Any], List[Dict[str, Any]]]


def _terms_text(terms: List[Dict[str, Any]]) -> str:
    if not terms:
        return "0"
    return " + ".join(f"{t['coeff']}*a" + "a".join(str(i) for i in t["monomial"]) for t in terms)


def report_row(r: InvariantReport) -> Dict[str, Any]:
    data = r.model_dump(mode="json")
    pont = "0" if r.pontrjagin == "zero" else "; ".join(_terms_text(p) for p in data["pontrjagin"])
    return {
        "g": r.spec.g,
        "k": r.spec.k,
        "n": r.spec.n,
        "N": r.spec.N,
        "dimension": r.dimension,
        "s": r.s,
        "homotopy_class": r.homotopy_class,
        "betti": " ".join(map(str, r.betti)),
        "torsion_free": r.torsion_free,
        "c1": _terms_text(data["c1"]),
        "pontrjagin": pont,
        "w2_rank": r.w2_rank,
    }


def render(payload: Payload, rows: List[Dict[str, Any]], fmt: OutputFormat) -> str:
    """
    JSON dumps the full payload; csv and text use the flattened rows.
    """
    if fmt is OutputFormat.JSON:
        return json.dumps(payload, indent=2) + "\n"
    if fmt is OutputFormat.CSV:
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        return buf.getvalue()
    return "".join("  ".join(f"{k}={v}" for k, v in row.items()) + "\n" for row in rows)
