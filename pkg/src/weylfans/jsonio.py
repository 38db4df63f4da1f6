"""Canonical JSON encoding shared by the library and the CLI.

Rationals serialize as "p/q" strings with positive denominator and the
fraction in lowest terms, vectors as arrays, matrices as row-major arrays
of arrays.  Field ordering is fixed by construction, so decoding an emitted
document and re-encoding it reproduces the bytes exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction as Q
from typing import Mapping, Sequence

from .errors import InvalidInput
from .linalg import Matrix, Vector, qm, qv
from .polyhedra import Fan, cone, fan
from .rootsys import RootSystem, WeylElement, build_root_system


def fraction_to_str(x) -> str:
    x = Q(x)
    return f"{x.numerator}/{x.denominator}"


def str_to_fraction(s: str) -> Q:
    try:
        if "/" in s:
            p, q = s.split("/")
            return Q(int(p), int(q))
        return Q(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"malformed rational {s!r}") from exc


def encode_vector(v: Sequence) -> list[str]:
    return [fraction_to_str(x) for x in v]


def decode_vector(data: Sequence[str]) -> Vector:
    return qv([str_to_fraction(x) for x in data])


def encode_matrix(m: Sequence[Sequence]) -> list[list[str]]:
    return [encode_vector(row) for row in m]


def decode_matrix(data: Sequence[Sequence[str]]) -> Matrix:
    return qm([decode_vector(row) for row in data])


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def fan_to_json(f: Fan) -> dict:
    rays = f.rays()
    index = {r: i for i, r in enumerate(rays)}
    return {
        "ambient_dim": f.ambient_dim,
        "lattice": "standard" if f.lattice is None else encode_matrix(f.lattice),
        "rays": [encode_vector(r) for r in rays],
        "maximal_cones": sorted(sorted(index[g] for g in c.gens) for c in f.maximal_cones),
    }


def fan_from_json(data: Mapping) -> Fan:
    try:
        dim = int(data["ambient_dim"])
        lattice = None if data["lattice"] == "standard" else decode_matrix(data["lattice"])
        rays = [decode_vector(r) for r in data["rays"]]
        cone_indices = data["maximal_cones"]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed fan document: {exc}") from exc
    cones = [
        cone([rays[i] for i in ids], lattice=lattice, ambient_dim=dim)
        for ids in cone_indices
    ]
    return fan(cones)


def weyl_element_to_json(w: WeylElement) -> dict:
    return {
        "matrix": encode_matrix(w.matrix),
        "word": list(w.word) if w.word is not None else None,
    }


def weyl_element_from_json(data: Mapping) -> WeylElement:
    word = data.get("word")
    return WeylElement(decode_matrix(data["matrix"]), tuple(word) if word is not None else None)


def root_system_to_json(rs: RootSystem) -> dict:
    return {
        "type": rs.label,
        "rank": rs.rank,
        "ambient_dim": rs.ambient_dim,
        "simple_roots": encode_matrix(rs.simple_roots),
        "cartan_matrix": [[int(x) for x in row] for row in rs.cartan],
        "fundamental_weights": encode_matrix(rs.fundamental_weights),
        "fundamental_coweights": encode_matrix(rs.fundamental_coweights),
        "highest_root": encode_vector(rs.highest_root),
        "root_count": len(rs.roots),
    }


def root_system_from_json(data: Mapping) -> RootSystem:
    """Rebuild from the type label and cross-check every serialized field."""
    rs = build_root_system(str(data["type"]))
    emitted = root_system_to_json(rs)
    for key, value in data.items():
        if key not in emitted or emitted[key] != value:
            raise InvalidInput(f"root system document field {key!r} is inconsistent")
    return rs


def ledger_to_json(ledger) -> dict:
    return {
        "components": [
            {"name": name, "coefficient": coeff} for name, coeff in ledger.components
        ],
        "history": [
            {"point": point, "through": list(through), "exceptional": new}
            for point, through, new in ledger.history
        ],
    }


def ledger_from_json(data: Mapping):
    from .toric import SurfaceBlowupLedger

    try:
        components = tuple(
            (str(c["name"]), int(c["coefficient"])) for c in data["components"]
        )
        history = tuple(
            (str(h["point"]), tuple(str(t) for t in h["through"]), str(h["exceptional"]))
            for h in data["history"]
        )
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed ledger document: {exc}") from exc
    return SurfaceBlowupLedger(components=components, history=history)


def colored_fan_to_json(f) -> dict:
    cones = sorted(f.cones, key=lambda cc: (cc.cone.gens, sorted(cc.colors)))
    rays = sorted({g for cc in cones for g in cc.cone.gens})
    index = {r: i for i, r in enumerate(rays)}
    return {
        "rank": f.rank,
        "rays": [encode_vector(r) for r in rays],
        "cones": [
            {
                "rays": sorted(index[g] for g in cc.cone.gens),
                "colors": sorted(cc.colors),
            }
            for cc in cones
        ],
        "valuation_cone": encode_matrix(f.valuation_cone.gens),
        "rho_table": {k: encode_vector(v) for k, v in sorted(f.rho_table.items())},
        "boundary_divisors": [
            {"name": name, "ray": encode_vector(ray)} for name, ray in f.boundary_divisors()
        ],
    }
