"""Independent high-precision reference values.

Evaluated with mpmath at 50 digits straight from the closed forms, without
the package's polynomial or interval code.  ``python tests/oracles.py``
prints the table that the tests freeze.
"""

from mpmath import mp, mpf, cos, pi, sqrt, findroot, linspace

mp.dps = 50


def c(n):
    return cos(pi / n)


def _A(x, y, z):
    return 4 * (x * x + y * y + z * z) - 3


def _B(x, y, z):
    return z * z + 4 * x * x * y * y - 1


def f1(x, y, z):
    return -3 * _A(x, y, z) ** 2 + (16 * x * y * z) ** 2


def f2(x, y, z):
    a = _A(x, y, z)
    return -a * a + 3 * a + (8 * x * y * z) ** 2 - 9


def f3(x, y, z):
    return -3 * _A(x, y, z) + 32 * x * y * z


def f4(x, y, z):
    a, b = _A(x, y, z), _B(x, y, z)
    return 3 * a * a - 12 * b * a + 16 * b * b - (8 * x * y * z) ** 2


def g2(x, y, z):
    return 8 * (x * x + y * y - 2 * x * x * y * y) + 4 * z * z - 5


def g3(x, y, z):
    a = _A(x, y, z)
    return -27 * a * a - 54 * a + 52 * (8 * x * y * z) ** 2 - 27


def x1():
    return (79 - 50 * sqrt(10)) / 169


def g4(x, y, z):
    return 2 * _B(x, y, z) - _A(x, y, z) - x1()


def g5(x, y, z):
    b = _B(x, y, z)
    return 25 * ((4 * x * y * z) ** 2 - b * b) - 27 * (2 * y * y * (1 - 2 * x * x) + 2 * x * x + z * z) ** 2


def goldman(x, y):
    a2 = x * x + y * y
    return a2 * a2 - 8 * (x**3 - 3 * x * y * y) + 18 * a2 - 27


def h(r, t):
    """f of the W_B trace at parameter t."""
    p = r[0] * r[1] * r[2]
    x = 8 * p * t - 4 * sum(v * v for v in r) + 3
    y = 8 * p * sqrt(1 - t * t)
    return goldman(x, y)


def t_max(r):
    p = r[0] * r[1] * r[2]
    return min((sum(v * v for v in r) - 1) / (2 * p), mpf(1))


def t_wa(r):
    return (r[2] ** 2 + 4 * r[0] ** 2 * r[1] ** 2 - 1) / (4 * r[0] * r[1] * r[2])


def onset_wb(ns, samples=4000):
    """First sign change of h on [-1, t_max] from a dense scan, refined by bisection."""
    r = [c(n) for n in ns]
    ts = linspace(-1, t_max(r), samples + 1)
    prev = ts[0]
    for t in ts[1:]:
        if h(r, t) < 0:
            return findroot(lambda s: h(r, s), (prev, t), solver="bisect")
        prev = t
    return None


def t_x0(n):
    """Parameter where the circle meets the ray y = -sqrt(3) x, all three angles pi/n."""
    r = c(n)
    a = 12 * r * r - 3
    p = r**3
    x0 = (-2 * a + sqrt(4 * (-3 * a * a + 256 * p * p))) / 8
    return x0, (x0 + a) / (8 * p)


def table():
    c14, c9, c8 = c(14), c(9), c(8)
    return {
        "4f1_min": 4 * f1(c14, c14, c14),
        "4f1_max": 4 * f1(1, 1, 1),
        "f2_min": f2(c14, c14, c14),
        "2f3_min": 2 * f3(c14, c14, c14),
        "f4_min": f4(c14, c14, 1),
        "g2_min": g2(c8, 1, 1),
        "g3_min": g3(c9, c9, c9),
        "g4_max": g4(c9, 1, 1),
        "g5_min": g5(c9, 1, 1),
        "ineq_4_2": 8 * c14**2 - 3,
        "inline_31": 2 * (12 * c14**2 - 3) - 8,
        "inline_35": -50 * (12 * c9**2 - 3) + 210,
        "x1": x1(),
        "cos_pi_14": c14,
        "cos_pi_9": c9,
        "t_wa_444": t_wa([c(4)] * 3),
        "onset_wb_444": onset_wb((4, 4, 4)),
        "t_max_444": t_max([c(4)] * 3),
        "t_wa_14": t_wa([c14] * 3),
        "onset_wb_14": onset_wb((14, 14, 14)),
        "x0_14": t_x0(14)[0],
        "t_x0_14": t_x0(14)[1],
        "circle_center_14": 3 - 12 * c14**2,
        "circle_radius_14": 8 * c14**3,
    }


if __name__ == "__main__":
    for k, v in table().items():
        print(f"{k:10s} {mp.nstr(v, 20)}")
