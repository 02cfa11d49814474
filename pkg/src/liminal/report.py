"""JSON-ready report records and deterministic serialization."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .core import WeightSystem, classify, liminal_defect, minimal_exponent
from .milnor import milnor_number, poincare_polynomial, s_vector, spectrum
from .t1 import t1_decomposition

SAFE_INT = 2**53


def rational(x: Fraction) -> dict[str, Any]:
    return {"num": x.numerator, "den": x.denominator}


def jsonable(obj: Any) -> Any:
    """Recursively convert to JSON types; ints beyond 2**53 become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, Fraction):
        return jsonable(rational(obj))
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def classify_record(ws: WeightSystem) -> dict[str, Any]:
    return {
        "weight_system": ws.to_dict(),
        "canonical": ws.canonical().to_dict(),
        "dim": ws.dim,
        "liminal_defect": liminal_defect(ws),
        "minimal_exponent": rational(minimal_exponent(ws)),
        "classification": classify(ws).to_dict(),
    }


def spectrum_record(ws: WeightSystem) -> dict[str, Any]:
    pp = poincare_polynomial(ws)
    return {
        "weight_system": ws.to_dict(),
        "dim": ws.dim,
        "milnor_number": milnor_number(ws),
        "poincare": pp.to_list(),
        "spectrum": spectrum(ws).to_json(),
        "s_vector": list(s_vector(ws)),
    }


def t1_record(ws: WeightSystem) -> dict[str, Any]:
    return {"weight_system": ws.to_dict(), "dim": ws.dim, "t1": t1_decomposition(ws).to_json()}


def full_record(ws: WeightSystem) -> dict[str, Any]:
    rec = classify_record(ws)
    rec.update(spectrum_record(ws))
    rec.update(t1_record(ws))
    return rec


def load_schema(name: str) -> dict[str, Any]:
    from importlib import resources

    return json.loads((resources.files("liminal") / "schemas" / f"{name}.schema.json").read_text())
