"""Arbitrary-precision oracle used to freeze expected values in the C++ tests.

Run: python3 tests/oracle/freeze_values.py [--header tests/support/oracle_values.hpp]
"""
import re
import sys

from mpmath import mp, mpf, sqrt, pi, exp, asinh

mp.dps = 40
G = mpf("6.67430e-11")
HBAR = mpf("1.054571817e-34")
KB = mpf("1.380649e-23")
G_SURF = mpf("9.80665")
U = mpf("1.66053906660e-27")
M_RB = mpf("86.909180527") * U
A_RB = mpf("5.2e-9")
D_RB = mpf("5.8e-30") * mpf("1e-12")
W0 = 2 * pi * mpf("0.2")


VALUES = []


def ident(label):
    return "k" + "".join(w.capitalize() for w in re.split(r"[^0-9a-zA-Z]+", label) if w)


def show(label, v):
    VALUES.append((ident(label), label, v))
    print(f"{label:40s} {mp.nstr(v, 17)}")


def write_header(path):
    lines = [
        "#pragma once",
        "",
        "// Generated by tests/oracle/freeze_values.py (mpmath, 40 digits). Do not edit.",
        "",
        "namespace oracle {",
        "",
    ]
    seen = set()
    for name, label, v in VALUES:
        if name in seen:
            continue
        seen.add(name)
        lines.append(f"inline constexpr double {name} = {mp.nstr(v, 17, min_fixed=0, max_fixed=0)};  // {label}")
    lines += ["", "}  // namespace oracle", ""]
    with open(path, "w") as f:
        f.write("\n".join(lines))


def trap(eps):
    wp2 = W0**2 + eps / 2
    wz2 = W0**2 - eps
    return sqrt(wp2), sqrt(wz2)


def profile(na, wp, wz):
    u0 = 4 * pi * HBAR**2 * A_RB / M_RB
    lam = wz / wp
    r = (15 * na * u0 * lam / (4 * pi * M_RB * wp**2)) ** (mpf(1) / 5)
    mu = M_RB / 2 * wp**2 * r**2
    n0 = mu / u0
    wbar = (wp**2 * wz) ** (mpf(1) / 3)
    aho = sqrt(HBAR / (M_RB * wbar))
    return r, mu, n0, na * A_RB / aho, aho


show("rb87 mass", M_RB)
sources = {
    "earth": (mpf("5.972e24"), mpf("6.371e6")),
    "sphere": (mpf("20e-6"), mpf("1e-3")),
}
for name, (mass, dist) in sources.items():
    eps = 2 * mass * G / dist**3
    wp, wz = trap(eps)
    show(f"{name} eps", eps)
    show(f"{name} w0^2/eps", W0**2 / eps)
    show(f"{name} wz^2", wz**2)
    show(f"{name} wp^2", wp**2)
    show(f"{name} z_g", mass * G / dist**2 / wz**2)
    show(f"{name} dw3 exact", sqrt(3) * wp - sqrt(2 * wp**2 + wz**2))
    show(f"{name} dw3 approx", 3 * eps / (4 * sqrt(3) * W0))
    show(f"{name} w22 exact", sqrt(2) * wp)
    show(f"{name} w33 exact", sqrt(3) * wp)
    show(f"{name} w32 exact", sqrt(2 * wp**2 + wz**2))
    for l in range(2, 9):
        show(f"{name} dw{l} exact", sqrt(l) * wp - sqrt((l - 1) * wp**2 + wz**2))
    for na, nr in ((mpf("1e6"), mpf("1e3")), (mpf("1e8"), mpf("1e4"))):
        r, mu, n0, tfp, aho = profile(na, wp, wz)
        tag = f"{name} {int(na):d}"
        show(tag + " R_tf", r)
        show(tag + " mu", mu)
        show(tag + " n0", n0)
        show(tag + " tf_param", tfp)
        show(tag + " a_ho", aho)
        drel = 2 * W0**2 / eps / (sqrt(3) * W0 * 100 * sqrt(2 * mpf("1e4") * nr * (nr + 1)))
        show(tag + " delta_rel", drel)
        show(tag + " delta_abs", drel * eps)
        show(tag + " force gal (2R)", drel * eps * 2 * r / mpf("1e-2"))
        gamma = sqrt(3) * W0 * (KB * mpf("1e-10") / mu) ** mpf(1.5) * sqrt(n0 * A_RB**3)
        show(tag + " 1/gamma", 1 / gamma)
        show(tag + " t_hl", 3 / (2 * D_RB * n0**2))

eps_e = 2 * sources["earth"][0] * G / sources["earth"][1] ** 3
wp, wz = trap(eps_e)
show("earth potential rho=0 z=1e-4", M_RB / 2 * wz**2 * mpf("1e-8"))
show("pumped N_alpha=1e6 r=4", mpf("1e6") * exp(8) / 4)
nr = mpf("1e4")
hs = 8 * nr * (nr + 1)
nb = mpf(3) / 2 * nr
show("ratio su2 1e4", 8 * nb * (nb + 2) / 3 / hs)
show("ratio su11 1e4", 4 * nb * (nb + 2) / 3 / hs)
show("ratio pumped 1e4", nr * exp(2 * asinh(sqrt(nr))) / 4 / hs)

s = mpf("600e-6")
k = 2 * pi / mpf("1.56e-6")
tgeom = 2 * sqrt(2 * s / G_SURF)
show("t_free geometric", tgeom)
show("n bound at t_geom", M_RB * s / (HBAR * k * tgeom))
best = None
for n in range(2, 40, 2):
    t = min(tgeom, M_RB * s / (HBAR * k * n))
    phi = HBAR * n**2 * k**2 * eps_e * t**3 / (2 * M_RB)
    if best is None or phi > best[2]:
        best = (n, t, phi)
show("joint optimum n", best[0])
show("joint optimum t", best[1])
show("joint optimum phi", best[2])
h_ff = 8 * mpf("1e4") * (mpf("1e8") + 2 * mpf("1e4"))
show("joint optimum delta_rel", 1 / (sqrt(mpf("1e4") * h_ff) * best[2]))
phi18 = HBAR * 18**2 * k**2 * eps_e * tgeom**3 / (2 * M_RB)
show("n=18 t_geom phi", phi18)
show("n=18 t_geom delta_rel", 1 / (sqrt(mpf("1e4") * h_ff) * phi18))
show("stated ceiling", M_RB * eps_e * s ** mpf(2.5) / (sqrt(2 * G_SURF) * HBAR))
show("constraint ceiling", sqrt(2) * M_RB * eps_e * s ** mpf(2.5) / (sqrt(G_SURF) * HBAR))
dphi = M_RB * s * eps_e * mpf("30e-6") * 100 / HBAR
show("trapped dphi", dphi)
show("trapped delta_rel", 1 / (sqrt(mpf("1e4") * h_ff) * dphi))

if len(sys.argv) == 3 and sys.argv[1] == "--header":
    write_header(sys.argv[2])
