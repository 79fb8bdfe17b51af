"""JSON encodings for tilings, flip paths, labelings, walls, and spin points.

Direction indices are 1-based on the wire and 0-based in memory.
"""

from __future__ import annotations

from fractions import Fraction

from .engine import DOMAINS, Labeling
from .flips import FlipMove, FlipPath
from .laurent import LaurentPoly
from .spinor import SpinPoint
from .tropical import Cutcurve, Wall
from .zonogon import Tiling, ZonogonSpec


def tiling_to_json(t: Tiling) -> dict:
    return {
        "A": list(t.spec.a),
        "rhombi": [
            {"base": list(base), "dirs": [j + 1, k + 1]}
            for base, (j, k) in t.canonical_rhombi()
        ],
    }


def tiling_from_json(data: dict, spec: ZonogonSpec | None = None) -> Tiling:
    if spec is None:
        spec = ZonogonSpec(data["A"])
    elif tuple(spec.a) != tuple(data["A"]):
        raise ValueError("tiling multiplicities disagree with the spec")
    rhombi = [
        (tuple(r["base"]), (r["dirs"][0] - 1, r["dirs"][1] - 1))
        for r in data["rhombi"]
    ]
    return Tiling(spec, rhombi)


def flip_path_to_json(path: FlipPath) -> dict:
    return {
        "start": tiling_to_json(path.start),
        "moves": [
            {
                "base": list(m.base),
                "dirs": [d + 1 for d in m.dirs],
                "dir": m.direction,
            }
            for m in path.moves
        ],
    }


def flip_path_from_json(data: dict, spec: ZonogonSpec | None = None) -> FlipPath:
    start = tiling_from_json(data["start"], spec)
    moves = [
        FlipMove(tuple(m["base"]), tuple(d - 1 for d in m["dirs"]), m["dir"])
        for m in data["moves"]
    ]
    return FlipPath(start, moves)


def _fraction_to_json(x: Fraction) -> str:
    return str(Fraction(x))


def _fraction_from_json(s) -> Fraction:
    return Fraction(str(s))


def laurent_to_json(p: LaurentPoly) -> dict:
    terms = []
    for exps, coeff in sorted(p.terms.items()):
        terms.append(
            {
                "coeff": str(coeff),
                "exps": {",".join(map(str, v)): e for v, e in exps},
            }
        )
    return {"terms": terms}


def laurent_from_json(data: dict) -> LaurentPoly:
    out = LaurentPoly()
    for term in data["terms"]:
        exps = {
            tuple(int(c) for c in key.split(",")): e
            for key, e in term["exps"].items()
        }
        out = out + LaurentPoly.monomial(exps, int(term["coeff"]))
    return out


def labeling_to_json(labeling: Labeling) -> dict:
    dom = labeling.domain.name
    values = []
    for vertex in sorted(labeling.values):
        val = labeling.values[vertex]
        if dom == "laurent":
            enc = laurent_to_json(val)
        else:
            enc = _fraction_to_json(val)
        values.append({"vertex": list(vertex), "value": enc})
    return {"A": list(labeling.spec.a), "domain": dom, "values": values}


def labeling_from_json(data: dict, tiling: Tiling | None = None) -> Labeling:
    spec = tiling.spec if tiling is not None else ZonogonSpec(data["A"])
    if tuple(spec.a) != tuple(data["A"]):
        raise ValueError("labeling multiplicities disagree with the spec")
    domain = DOMAINS[data["domain"]]
    values = {}
    for item in data["values"]:
        vertex = tuple(item["vertex"])
        if data["domain"] == "laurent":
            values[vertex] = laurent_from_json(item["value"])
        else:
            values[vertex] = _fraction_from_json(item["value"])
    return Labeling(spec, domain, values, tiling)


def wall_to_json(w: Wall, g: Cutcurve | None = None) -> dict:
    out = {"s": w.s + 1, "c": w.c}
    if g is not None:
        out["cutcurve"] = [list(p) for p in g.points]
    return out


def wall_from_json(data: dict):
    w = Wall(data["s"] - 1, data["c"])
    g = None
    if "cutcurve" in data:
        g = Cutcurve(tuple(tuple(p) for p in data["cutcurve"]))
    return w, g


def propagation_report_to_json(report) -> dict:
    def enc_edge(e):
        base, i = e
        return {"base": list(base), "dir": i + 1}

    out = {
        "recurrence_ok": report.recurrence_ok,
        "hypothesis_ok": report.hypothesis_ok,
        "violations": [enc_edge(e) for e in report.violations],
    }
    if report.hypothesis_witness is not None:
        w = report.hypothesis_witness
        out["hypothesis_witness"] = (
            enc_edge(w) if isinstance(w, tuple) and len(w) == 2 else repr(w)
        )
    return out


def spin_point_to_json(p: SpinPoint) -> dict:
    def key(mask):
        return ",".join(str((mask >> i) & 1) for i in range(p.n))

    even = {}
    odd = {}
    for mask in sorted(p.coords):
        enc = _fraction_to_json(p.coords[mask])
        (even if mask.bit_count() % 2 == 0 else odd)[key(mask)] = enc
    return {"n": p.n, "even": even, "odd": odd}


def spin_point_from_json(data: dict) -> SpinPoint:
    n = data["n"]
    coords = {}
    for group in ("even", "odd"):
        for key, enc in data[group].items():
            bits = [int(b) for b in key.split(",")]
            mask = sum(b << i for i, b in enumerate(bits))
            coords[mask] = _fraction_from_json(enc)
    return SpinPoint(n, coords)
