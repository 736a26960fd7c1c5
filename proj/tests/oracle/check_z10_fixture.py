"""Independent check of the Zhat_{1,0} dz^2 sinogram fixture at gamma = 0.

Zhat_{1,0}(z) = -i sqrt(2/pi) z (unit norm on the disk, phase of the leading
coefficient l_1 / (2i)). The lifted 2-tensor is Zhat_{1,0}(z) e^{2 i theta},
integrated along fan-beam chords without weight.
"""
import csv
import json
import sys

import mpmath as mp

mp.mp.dps = 30


def chord_value(beta, alpha):
    mu = mp.cos(alpha)
    theta = beta + mp.pi + alpha
    e_th = mp.expj(theta)
    start = mp.expj(beta)
    zhat = lambda z: -1j * mp.sqrt(2 / mp.pi) * z
    integral = mp.quad(lambda t: zhat(start + t * e_th), [0, 2 * mu])
    return integral * mp.expj(2 * theta)


def check_coeffs(path, tol=1e-13):
    # Zhat_{1,0} dz^2 maps to sigma_{1,0} psihat^+_{1,-1}, sigma_{1,0}^2 = 2 pi at gamma = 0.
    with open(path) as fh:
        data = json.load(fh)
    worst = 0.0
    for c in data["coeffs"]:
        want = mp.sqrt(2 * mp.pi) if (c["n"], c["k"], c["parity"]) == (1, -1, "+") else 0
        worst = max(worst, float(abs(mp.mpc(c["re"], c["im"]) - want)))
    found = any((c["n"], c["k"]) == (1, -1) for c in data["coeffs"])
    print(f"coeffs={len(data['coeffs'])} max abs err={worst:.3e}")
    return found and worst < tol


def main(path, tol=1e-13):
    worst = 0.0
    rows = 0
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        assert header == ["beta", "alpha", "re", "im"], header
        for beta, alpha, re, im in reader:
            want = chord_value(mp.mpf(beta), mp.mpf(alpha))
            got = mp.mpc(float(re), float(im))
            worst = max(worst, float(abs(got - want)))
            rows += 1
    print(f"rows={rows} max abs err={worst:.3e}")
    ok = rows > 0 and worst < tol
    if len(sys.argv) > 2:
        ok = check_coeffs(sys.argv[2]) and ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
