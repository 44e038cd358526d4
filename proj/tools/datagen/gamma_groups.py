"""The small groups Gamma with named classes and centralizer characters, and
the Fourier pairing on M(Gamma). Values are computed in floating point and
rounded to rationals with small denominators; every entry is checked."""

import cmath
import itertools
from fractions import Fraction


def compose(p, q):
    return tuple(p[i] for i in q)


def inverse(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def cycle_perm(n, *cycles):
    p = list(range(n))
    for c in cycles:
        for i, x in enumerate(c):
            p[x] = c[(i + 1) % len(c)]
    return tuple(p)


def cycle_type(p):
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        k, x = 0, i
        while x not in seen:
            seen.add(x)
            x = p[x]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))


def sign(p):
    return (-1) ** sum(k - 1 for k in cycle_type(p))


def power_index(g, x):
    """k with g^k == x, for x in <g>."""
    e = tuple(range(len(g)))
    y, k = e, 0
    while True:
        if y == x:
            return k
        y = compose(g, y)
        k += 1
        if y == e and k > 0 and x != e:
            raise ValueError("not a power")


def cyclic_chars(g, n, names):
    return {nm: (lambda x, j=j: cmath.exp(2j * cmath.pi * j * power_index(g, x) / n))
            for j, nm in enumerate(names)}


SYM_CHARS = {
    3: {"1": {}, "r": {(1, 1, 1): 2, (2, 1): 0, (3,): -1}, "eps": None},
    4: {"1": {}, "sigma": {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0},
        "lambda1": {(1, 1, 1, 1): 3, (2, 1, 1): 1, (2, 2): -1, (3, 1): 0, (4,): -1},
        "lambda2": {(1, 1, 1, 1): 3, (2, 1, 1): -1, (2, 2): -1, (3, 1): 0, (4,): 1},
        "eps": None},
}


def sym_char(n, nm):
    spec = SYM_CHARS[n][nm]
    if nm == "1":
        return lambda x: 1
    if nm == "eps":
        return sign
    return lambda x: spec[cycle_type(x)]


def build(name):
    """Returns (elements, [(class name, rep, {char name: function})])."""
    if name == "1":
        e = (0,)
        return [e], [("1", e, {"1": lambda x: 1})]
    if name == "Z2":
        e, g = (0, 1), (1, 0)
        ch = {"1": lambda x: 1, "eps": lambda x: 1 if x == e else -1}
        return [e, g], [("1", e, ch), ("g", g, ch)]
    if name == "Z2xZ2":
        a, b = cycle_perm(4, (0, 1)), cycle_perm(4, (2, 3))
        e = tuple(range(4))
        els = [e, a, b, compose(a, b)]

        def lin(A, B):
            return lambda x: (A if x[0] != 0 else 1) * (B if x[2] != 2 else 1)

        ch = {"1": lin(1, 1), "ea": lin(-1, 1), "eb": lin(1, -1), "eab": lin(-1, -1)}
        return els, [("1", e, ch), ("a", a, ch), ("b", b, ch), ("ab", compose(a, b), ch)]
    if name == "S3":
        els = list(itertools.permutations(range(3)))
        e = tuple(range(3))
        g2, g3 = cycle_perm(3, (0, 1)), cycle_perm(3, (0, 1, 2))
        at1 = {nm: sym_char(3, nm) for nm in ("1", "r", "eps")}
        at2 = {"1": lambda x: 1, "eps": lambda x: 1 if x == e else -1}
        return els, [("1", e, at1), ("g2", g2, at2),
                     ("g3", g3, cyclic_chars(g3, 3, ["1", "theta", "theta2"]))]
    if name == "S4":
        els = list(itertools.permutations(range(4)))
        e = tuple(range(4))
        g2 = cycle_perm(4, (0, 1))
        g2p = cycle_perm(4, (0, 1), (2, 3))
        g3 = cycle_perm(4, (0, 1, 2))
        g4 = cycle_perm(4, (0, 1, 2, 3))
        at1 = {nm: sym_char(4, nm) for nm in ("1", "sigma", "lambda1", "lambda2", "eps")}

        def lin2(A, B):
            return lambda x: (A if x[0] != 0 else 1) * (B if x[2] != 2 else 1)

        at2 = {"1": lin2(1, 1), "eps": lin2(-1, -1), "eps'": lin2(1, -1), "eps''": lin2(-1, 1)}

        def d8(A, B):
            return lambda x: (A if sign(x) < 0 else 1) * (B if x[0] in (2, 3) else 1)

        at2p = {"1": d8(1, 1), "r": lambda x: 2 if x == e else (-2 if x == g2p else 0),
                "eps": d8(-1, -1), "eps'": d8(1, -1), "eps''": d8(-1, 1)}
        return els, [("1", e, at1), ("g2", g2, at2), ("g2p", g2p, at2p),
                     ("g3", g3, cyclic_chars(g3, 3, ["1", "theta", "theta2"])),
                     ("g4", g4, cyclic_chars(g4, 4, ["1", "i", "-1", "-i"]))]
    raise ValueError(name)


def build_M(name):
    _, cls = build(name)
    return [(x, s) for x, _, chars in cls for s in chars]


def to_fraction(z, bound=1000):
    if abs(z.imag) > 1e-9:
        raise ValueError(f"non-real Fourier entry {z}")
    f = Fraction(z.real).limit_denominator(bound)
    if abs(float(f) - z.real) > 1e-9:
        raise ValueError(f"irrational Fourier entry {z}")
    return f


def fourier_matrix(name, M=None):
    els, cls = build(name)
    if M is None:
        M = build_M(name)
    rep = {x: r for x, r, _ in cls}
    chars = {x: ch for x, _, ch in cls}

    def cent(x):
        return [g for g in els if compose(g, x) == compose(x, g)]

    F = []
    for x, s in M:
        row = []
        for y, t in M:
            xr, yr = rep[x], rep[y]
            total = 0
            for g in els:
                gi = inverse(g)
                gyg = compose(compose(g, yr), gi)
                if compose(xr, gyg) != compose(gyg, xr):
                    continue
                gxg = compose(compose(gi, xr), g)
                total += complex(chars[x][s](gyg)) * complex(chars[y][t](gxg)).conjugate()
            row.append(to_fraction(total / (len(cent(xr)) * len(cent(yr)))))
        F.append(row)
    return F
