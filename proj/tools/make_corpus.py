#!/usr/bin/env python3
"""Writes the bundled algebra and module files under data/."""

import json
import pathlib
from fractions import Fraction

ROOT = pathlib.Path(__file__).resolve().parent.parent / "data"


def canon(x, p):
    if p:
        return str(int(x) % p)
    return str(Fraction(x))


def zeros(n):
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def tensor_json(t, p):
    return [[[canon(v, p) for v in cell] for cell in row] for row in t]


def scaled(t, s):
    return [[[v * s for v in cell] for cell in row] for row in t]


def identity(n):
    return [[1 if r == c else 0 for c in range(n)] for r in range(n)]


def matrix_json(m, p):
    return [[canon(v, p) for v in row] for row in m]


def field(p):
    return {"type": "Fp", "p": p} if p else {"type": "Q"}


def algebra(p, n, kind, tensors, grading=None, endos=None):
    labels = list(tensors)
    doc = {
        "field": field(p),
        "dim": n,
        "labels": labels,
        "kind": kind,
        "brackets": {k: tensor_json(t, p) for k, t in tensors.items()},
    }
    if grading is not None:
        doc["grading"] = grading
    if endos is not None:
        doc["endos"] = {k: [matrix_json(m, p) for m in ms] for k, ms in endos.items()}
    return doc


def write(path, doc):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def heisenberg():
    t = zeros(3)
    t[0][1][2], t[1][0][2] = 1, -1
    return t


def sl2():
    # basis e, f, H
    t = zeros(3)
    t[2][0][0], t[0][2][0] = 2, -2
    t[2][1][1], t[1][2][1] = -2, 2
    t[0][1][2], t[1][0][2] = 1, -1
    return t


def leibniz2():
    t = zeros(2)
    t[0][0][1] = 1
    return t


def super11():
    t = zeros(2)
    t[1][1][0] = 1
    return t


def adjoint_first(tensors, n):
    return {k: [[[t[i][a][l] for a in range(n)] for l in range(n)] for i in range(n)] for k, t in tensors.items()}


def adjoint_second(tensors, n):
    f = {k: [[[-t[a][i][l] for a in range(n)] for l in range(n)] for i in range(n)] for k, t in tensors.items()}
    g = adjoint_first(tensors, n)
    return f, g


def module(alg_path, m, f, p, g=None, grading=None):
    doc = {
        "algebra": alg_path,
        "carrier_dim": m,
        "f": {k: [matrix_json(x, p) for x in ms] for k, ms in f.items()},
    }
    if g is not None:
        doc["g"] = {k: [matrix_json(x, p) for x in ms] for k, ms in g.items()}
    if grading is not None:
        doc["carrier_grading"] = grading
    return doc


def main():
    c = ROOT / "corpus"
    idn = {"sigma": [identity(2)], "sigma_ring": [identity(2)], "sigma_check": [identity(2)]}
    for kind, grading, endos in [
        ("first", None, None),
        ("second", None, None),
        ("third", None, idn),
        ("super_first", [0, 1], None),
        ("super_second", [0, 1], None),
        ("super_third", [0, 1], idn),
    ]:
        write(c / f"zero_{kind}.json",
              algebra(0, 2, kind, {"h": zeros(2), "k": zeros(2)}, grading, endos))

    h3 = {"h": heisenberg(), "k": scaled(heisenberg(), 2)}
    write(c / "h3_scaled.json", algebra(0, 3, "first", h3))
    write(c / "h3_scaled_f5.json", algebra(5, 3, "first", h3))
    s = {"h": sl2(), "k": scaled(sl2(), 2)}
    write(c / "sl2_scaled_f5.json", algebra(5, 3, "first", s))
    lb = {"h": leibniz2(), "k": scaled(leibniz2(), 2)}
    write(c / "leibniz2_scaled.json", algebra(0, 2, "second", lb))
    write(c / "leibniz2_scaled_f5.json", algebra(5, 2, "second", lb))
    sp = {"h": super11(), "k": scaled(super11(), 2)}
    write(c / "super11_scaled.json", algebra(0, 2, "super_first", sp, [0, 1]))
    write(c / "super_leibniz_scaled.json", algebra(0, 2, "super_second", sp, [0, 1]))
    id3 = {"sigma": [identity(3)], "sigma_ring": [identity(3)], "sigma_check": [identity(3)]}
    write(c / "sl2_identity_third.json", algebra(5, 3, "third", {"h": sl2()}, None, id3))

    bad = {"h": sl2(), "k": sl2()}
    bad["k"][0][1] = [1, 0, 0]  # [e, f]_k = e
    bad["k"][1][0] = [-1, 0, 0]
    write(c / "corrupted.json", algebra(5, 3, "first", bad))

    m = ROOT / "modules"
    write(m / "h3_adjoint.json", module("../corpus/h3_scaled.json", 3, adjoint_first(h3, 3), 0))
    write(m / "h3_adjoint_f5.json", module("../corpus/h3_scaled_f5.json", 3, adjoint_first(h3, 3), 5))
    broken = adjoint_first(h3, 3)
    broken["k"][0][0][0] += 1  # f_k(e1) moved off the adjoint action
    write(m / "h3_adjoint_corrupted.json", module("../corpus/h3_scaled.json", 3, broken, 0))
    write(m / "sl2_adjoint_f5.json", module("../corpus/sl2_scaled_f5.json", 3, adjoint_first(s, 3), 5))
    write(m / "h3_zero_rep.json",
          module("../corpus/h3_scaled.json", 1, {k: [[[0]]] * 3 for k in h3}, 0))
    f, g = adjoint_second(lb, 2)
    write(m / "leibniz2_adjoint.json", module("../corpus/leibniz2_scaled.json", 2, f, 0, g))

    write(ROOT / "subspaces" / "h3_center.json", {"ambient_dim": 3, "rows": [["0", "0", "1"]]})
    write(ROOT / "subspaces" / "h3_e1.json", {"ambient_dim": 3, "rows": [["1", "0", "0"]]})


if __name__ == "__main__":
    main()
