"""Reference values of Ai, Ai', U = Bi - sqrt(3) Ai, U' from mpmath.

Regenerate with: python3 gen_airy_golden.py > airy_golden.csv
"""
import random

import mpmath as mp

mp.mp.dps = 40
SQ3 = mp.sqrt(3)


def row(z):
    a = mp.airyai(z)
    ap = mp.airyai(z, derivative=1)
    b = mp.airybi(z)
    bp = mp.airybi(z, derivative=1)
    u = b - SQ3 * a
    up = bp - SQ3 * ap
    vals = [z, a, ap, u, up]
    out = []
    for v in vals:
        v = mp.mpc(v)
        out += [mp.nstr(v.real, 20, min_fixed=-1, max_fixed=-1), mp.nstr(v.imag, 20, min_fixed=-1, max_fixed=-1)]
    return ",".join(out)


def main():
    rng = random.Random(20261015)
    pts = []
    for theta in [0, 1, -1, 2, -2, 2.666666, -2.666666, 3.333333, -3.333333, 4]:
        for r in [0.5, 3.0, 6.0, 8.9, 9.1, 12.0, 20.0, 30.0]:
            pts.append(mp.mpf(r) * mp.expjpi(mp.mpf(theta) / 4))
    for _ in range(160):
        r = 30 * mp.sqrt(rng.random())
        th = mp.mpf(2 * rng.random() - 1) * mp.pi
        pts.append(mp.mpc(float(r * mp.cos(th)), float(r * mp.sin(th))))
    print("re,im,ai_re,ai_im,aip_re,aip_im,u_re,u_im,up_re,up_im")
    for z in pts:
        z = mp.mpc(float(mp.re(z)), float(mp.im(z)))
        print(row(z))


if __name__ == "__main__":
    main()
