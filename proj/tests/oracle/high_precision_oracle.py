#!/usr/bin/env python3
"""Writes tests/fixtures/golden.json from 50-digit mpmath evaluations.

Every map is written out from its closed form here, independently of the C++
sources; generators come from numerical differentiation of those closed
forms at eps = 0. Inputs are the exact doubles the fixture file stores.
"""

import json
import sys
from pathlib import Path

from mpmath import diff, mp, mpf, sqrt

mp.dps = 50


def m(x):
    return mpf(float(x))


def S1(st, c):
    rho, v, p, e = st
    return (e + p) / (c * c - v * v)


def map1(st, eps, c):
    rho, v, p, e = st
    S = S1(st, c)
    a = eps * p + 1
    b = eps * (p + S * v * v) + 1
    rs = rho * sqrt(a * a - v * v / c**2) / (b * sqrt(1 - v * v / c**2))
    es = S * (c * c * a * a - v * v) / (a * b) - p / a
    return [rs, v / a, p / a, es]


def form1(st, form, eps, c):
    rho, v, p, e = st
    dt, dx = form
    S = S1(st, c)
    return [-eps * (S * v * dx - (p + S * v * v) * dt) + dt, dx]


def map4(st, a, c):
    rho, v, p, e = st
    a1, a2, a3, a4 = a
    S = S1(st, c)
    beta = sqrt(1 - v * v / c**2)
    den = p + S * v * v + a2
    # Signed root: (p + a2) sqrt(Delta) keeps the eps < 0 branch of the group.
    rs = a3 * rho * (p + a2) * sqrt(1 - a1**2 * v * v / (c**2 * (p + a2) ** 2)) / (beta * den)
    ps = a4 - a1**2 * a3 / (p + a2)
    es = a3 * S * (c * c * (p + a2) ** 2 - a1**2 * v * v) / ((p + a2) * den) - ps
    return [rs, -a1 * v / (p + a2), ps, es]


def form4(st, a, form, c):
    rho, v, p, e = st
    a1, a2, a3, a4 = a
    dt, dx = form
    S = S1(st, c)
    return [(S * v * dx - (p + S * v * v + a2) * dt) / a1, dx]


def map2(st, eps, c):
    rho, u, v, p, e = st
    q2 = u * u + v * v
    S = (e + p) / (c * c - q2)
    a = eps * p + 1
    b = eps * (p + S * q2) + 1
    # Expanded radical rather than the Delta factorization used elsewhere.
    rs = rho * c * sqrt(a * a - q2 / c**2) / (sqrt(c * c - q2) * b)
    es = (e + p) * (c * c * a * a - q2) / (a * (a * (c * c - q2) + eps * (e + p) * q2)) - p / a
    return [rs, u / a, v / a, p / a, es]


def frame2(st, eps, c):
    rho, u, v, p, e = st
    S = (e + p) / (c * c - u * u - v * v)
    return [1 + eps * (p + S * v * v), -eps * S * u * v, -eps * S * u * v, 1 + eps * (p + S * u * u)]


def matmul(a, b):
    return [a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]]


def inv1(st, form, c):
    rho, v, p, e = st
    dt, dx = form
    J1 = (c * p - v * e) * (c - v) / ((c * p + v * e) * (c + v))
    J2 = rho * p / (c * p + e * v) * sqrt((c - v) / (c + v))
    J3 = v * (c * p + e * v) * ((c * c * p + e * v * v) * dt - v * (e + p) * dx) / (
        p * (c - v) * (p * c * c + e * v * v))
    return {"J1": J1, "J2": J2, "J3": J3}


def inv2(st, c):
    rho, u, v, p, e = st
    q = sqrt(u * u + v * v)
    J3 = (c * p - e * q) * (c - q) / ((c * p + e * q) * (c + q))
    num = rho * (J3 * (c + q) + c - q)
    return {"J1": u / p, "J2": v / p, "J3": J3, "J4": num / sqrt(c * c - q * q), "J4_printed": num / (c * c - q * q)}


def f(x):
    return float(x)


def state_rec(vals, keys, c):
    out = {k: f(x) for k, x in zip(keys, vals)}
    out["c"] = f(c)
    return out


K1 = ["rho", "v", "p", "e"]
K2 = ["rho", "u", "v", "p", "e"]

cases = []


def case(name, op, inp, exp, abs_tol=1e-13, rel_tol=1e-12, prov="derived"):
    cases.append({"name": name, "operation": op, "input": inp, "expected": exp,
                  "abs_tol": abs_tol, "rel_tol": rel_tol, "provenance": prov})


STATES_1D = {
    "A": (1, 0.5, 1, 3),
    "slow": (1.3, -0.4, 0.7, 2.2),
    "rest": (1, 0, 1, 3),
}
STATES_2D = {
    "B": (1, 0.3, 0.4, 1, 3),
    "oblique": (0.8, -0.25, 0.5, 0.6, 1.9),
}

for label, raw in STATES_1D.items():
    c = m(1)
    st = [m(x) for x in raw]
    rec = dict(zip(K1, [float(x) for x in raw]))
    rec["c"] = 1.0
    S = S1(st, c)
    case(f"derived_1d {label}", "derived_1d", {"state": rec},
         {"gammaSq": f(1 / (c * c - st[1] ** 2)), "S": f(S)})
    for eps in (0.05, 0.1, -0.1, 1.0):
        e_ = m(eps)
        out = state_rec(map1(st, e_, c), K1, c)
        for form in ((1.0, 0.0), (0.7, 0.3)):
            fm = form1(st, [m(form[0]), m(form[1])], e_, c)
            exp = dict(out)
            exp["dt"], exp["dx"] = f(fm[0]), f(fm[1])
            case(f"transform_state_1param {label} eps={eps} form={form}", "transform_state_1param",
                 {"state": rec, "eps": eps, "form": {"dt": form[0], "dx": form[1]}}, exp)
        a = [-1 / e_, 1 / e_, m(1), 1 / e_]
        a_in = [f(x) for x in a]
        case(f"transform_state_4param {label} eps-params={eps}", "transform_state_4param",
             {"state": rec, "params": a_in}, state_rec(map4(st, [m(x) for x in a_in], c), K1, c))
    a_in = [-2.0, 0.5, 1.5, 0.3]
    case(f"transform_state_4param {label} generic", "transform_state_4param",
         {"state": rec, "params": a_in}, state_rec(map4(st, [m(x) for x in a_in], c), K1, c))
    fm = form4(st, [m(x) for x in a_in], [m(0.7), m(0.3)], c)
    case(f"transform_form_4param {label} generic", "transform_form_4param",
         {"state": rec, "params": a_in, "form": {"dt": 0.7, "dx": 0.3}}, {"dt": f(fm[0]), "dx": f(fm[1])})

    form = [m(1), m(0.3)]
    tangent = [diff(lambda t, k=k: map1(st, t, c)[k], 0) for k in range(4)]
    dDt = diff(lambda t: form1(st, form, t, c)[0], 0)
    case(f"generator_1d {label}", "generator_1d", {"state": rec, "form": {"dt": 1.0, "dx": 0.3}},
         {"dRho": f(tangent[0]), "dV": f(tangent[1]), "dP": f(tangent[2]), "dE": f(tangent[3]),
          "dDt": f(dDt), "dDx": 0.0}, abs_tol=1e-12)
    if raw[1] != 0:
        J = inv1(st, form, c)
        case(f"invariants_1d {label}", "invariants_1d", {"state": rec, "form": {"dt": 1.0, "dx": 0.3}},
             {k: f(v) for k, v in J.items()})
        # Same invariants evaluated on the image of the orbit at eps = 0.1.
        img = map1(st, m(0.1), c)
        img_form = form1(st, form, m(0.1), c)
        img_rec = state_rec(img, K1, c)
        case(f"invariants_1d {label} image eps=0.1", "invariants_1d",
             {"state": img_rec, "form": {"dt": f(img_form[0]), "dx": f(img_form[1])}},
             {k: f(v) for k, v in J.items()}, abs_tol=1e-12, rel_tol=1e-11)

for label, raw in STATES_2D.items():
    c = m(1)
    st = [m(x) for x in raw]
    rec = dict(zip(K2, [float(x) for x in raw]))
    rec["c"] = 1.0
    q2 = st[1] ** 2 + st[2] ** 2
    case(f"derived_2d {label}", "derived_2d", {"state": rec},
         {"qSq": f(q2), "Gamma": f(1 / sqrt(c * c - q2)), "R": f(st[0] / sqrt(c * c - q2)),
          "S": f((st[4] + st[3]) / (c * c - q2))})
    for eps in (0.05, 0.1, -0.1):
        e_ = m(eps)
        fr = frame2(st, e_, c)
        exp = state_rec(map2(st, e_, c), K2, c)
        exp["frame"] = [f(x) for x in fr]
        exp["det"] = f(fr[0] * fr[3] - fr[1] * fr[2])
        exp["jacobian_ok"] = True
        case(f"transform_state_1param_2d {label} eps={eps}", "transform_state_1param_2d",
             {"state": rec, "eps": eps, "with_frame": True}, exp)
        a = [-1 / e_, 1 / e_, m(1), 1 / e_]
        a_in = [f(x) for x in a]
        # With a1 scaling the four-parameter frame is the one-parameter frame.
        case(f"transform_frame_4param_2d {label} eps-params={eps} scaled", "transform_frame_4param_2d",
             {"state": rec, "params": a_in, "scaled": True},
             {"frame": [f(x) for x in fr], "det": f(fr[0] * fr[3] - fr[1] * fr[2])}, abs_tol=1e-12)
        case(f"delta_1param_2d {label} eps={eps}", "delta_1param_2d", {"state": rec, "eps": eps},
             {"delta": f(1 - q2 / (c * c * (e_ * st[3] + 1) ** 2))})
    m_in = [1.1, 0.2, -0.1, 0.9]
    mm = [m(x) for x in m_in]
    tangent = [diff(lambda t, k=k: map2(st, t, c)[k], 0) for k in range(5)]
    dframe = [diff(lambda t, k=k: matmul(frame2(st, t, c), mm)[k], 0) for k in range(4)]
    case(f"generator_2d {label}", "generator_2d", {"state": rec, "frame": m_in},
         {"dRho": f(tangent[0]), "dU": f(tangent[1]), "dV": f(tangent[2]), "dP": f(tangent[3]),
          "dE": f(tangent[4]), "dFrame": [f(x) for x in dframe]}, abs_tol=1e-12)
    J = inv2(st, c)
    case(f"invariants_2d {label}", "invariants_2d", {"state": rec}, {k: f(v) for k, v in J.items()})
    img = map2(st, m(0.1), c)
    Jimg = inv2(img, c)
    exp = {k: f(v) for k, v in J.items() if k != "J4_printed"}
    case(f"invariants_2d {label} image eps=0.1", "invariants_2d", {"state": state_rec(img, K2, c)}, exp,
         abs_tol=1e-12, rel_tol=1e-11)
    case(f"invariants_2d {label} printed J4 image eps=0.1", "invariants_2d", {"state": state_rec(img, K2, c)},
         {"J4_printed": f(Jimg["J4_printed"])})

for eps in (0.1, -0.25):
    e_ = m(eps)
    case(f"params_from_epsilon {eps}", "params_from_epsilon", {"eps": eps},
         {"a1": f(-1 / e_), "a2": f(1 / e_), "a3": 1.0, "a4": f(1 / e_)})

# Closed-form back-substitution of the constant manufactured profiles.
rho1 = f(sqrt(m(0.75)) / m(0.5))
case("manufacture_steady_1d constant", "manufacture_steady_1d",
     {"spec": {"velocity": {"mean": 0.5, "amplitude": 0.0}, "n": 16}},
     {"rho": [rho1, rho1], "v": [0.5, 0.5], "p": [1.0, 1.0], "e": [3.0, 3.0]}, prov="trivial")
case("manufacture_aligned_2d constant", "manufacture_aligned_2d",
     {"spec": {"velocity": {"mean": 0.5, "amplitude": 0.0}, "n": 16}},
     {"rho": [rho1, rho1], "u": [0.5, 0.5], "v": [0.0, 0.0], "p": [1.5, 1.5], "e": [1.5, 1.5]}, prov="trivial")

# Error contract.
case("superluminal state", "transform_state_1param",
     {"state": {"rho": 1.0, "v": 1.5, "p": 1.0, "e": 3.0, "c": 1.0}, "eps": 0.1},
     {"error": "SuperluminalState"}, prov="trivial")
case("eps zero has no four-parameter form", "params_from_epsilon", {"eps": 0.0}, {"error": "ZeroEpsilon"},
     prov="trivial")
case("a1 zero", "transform_form_4param",
     {"state": {"rho": 1.0, "v": 0.5, "p": 1.0, "e": 3.0, "c": 1.0}, "params": [0.0, 1.0, 1.0, 1.0],
      "form": {"dt": 1.0, "dx": 0.0}}, {"error": "ZeroA1"}, prov="trivial")
case("amplitude drives v through zero", "manufacture_steady_1d",
     {"spec": {"velocity": {"mean": 0.5, "amplitude": 0.6}, "n": 16}}, {"error": "UnphysicalManufacture"},
     prov="trivial")
case("identity at eps zero", "transform_state_1param",
     {"state": {"rho": 1.0, "v": 0.5, "p": 1.0, "e": 3.0, "c": 1.0}, "eps": 0.0},
     {"rho": 1.0, "v": 0.5, "p": 1.0, "e": 3.0, "c": 1.0}, prov="trivial")

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures" / "golden.json"
out.write_text(json.dumps({"schema": "1", "cases": cases}, indent=2) + "\n")
print(f"wrote {len(cases)} cases to {out}")
