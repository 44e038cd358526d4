#!/usr/bin/env python3
"""Generate labeling hints and family tables under data/.

Input is the JSON written by `uniflip_dump` (classes as reduced words,
characters with b-invariants and fake degrees). Classical characters are
identified by the Murnaghan-Nakayama rule; classical families come from
symbols (pairs of beta-sets). Exceptional names follow (dim, b) with a fixed rule for
primed pairs, and the F4 S4-family embedding is found by search.

Usage: make_data.py DUMP.json OUTDIR [F4_CHOICE]
"""

import itertools
import json
import sys
from fractions import Fraction

import gamma_groups as gg

VERSION = 1


def fnv1a64(data: bytes) -> str:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


def write_file(path, type_name, records):
    dumped = json.dumps(records, separators=(",", ":"), sort_keys=True, ensure_ascii=False)
    doc = {
        "type": type_name,
        "version": VERSION,
        "checksum": fnv1a64(dumped.encode()),
        "records": records,
    }
    with open(path, "w") as f:
        json.dump(doc, f, indent=1, sort_keys=True)
        f.write("\n")


# ---------------------------------------------------------------- partitions

def partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def n_of(p):
    return sum(i * x for i, x in enumerate(p))


def rim_hooks(p, k):
    """Yield (smaller partition, height) for each rim hook of length k."""
    m = len(p)
    beta = [p[i] + (m - 1 - i) for i in range(m)]
    s = set(beta)
    for x in beta:
        y = x - k
        if y < 0 or y in s:
            continue
        ht = sum(1 for z in beta if y < z < x)
        nb = sorted((s - {x}) | {y}, reverse=True)
        q = tuple(v - (m - 1 - i) for i, v in enumerate(nb))
        yield tuple(v for v in q if v > 0), ht


def mn_sym(lam, cycles):
    if not cycles:
        return 1 if sum(lam) == 0 else 0
    k, rest = cycles[0], cycles[1:]
    return sum((-1) ** ht * mn_sym(q, rest) for q, ht in rim_hooks(lam, k))


def mn_hyper(alpha, beta, cycles):
    """Character of W(B_n) at signed cycles [(length, sign)]."""
    if not cycles:
        return 1 if sum(alpha) + sum(beta) == 0 else 0
    (k, s), rest = cycles[0], cycles[1:]
    total = 0
    for q, ht in rim_hooks(alpha, k):
        total += (-1) ** ht * mn_hyper(q, beta, rest)
    for q, ht in rim_hooks(beta, k):
        total += (-1) ** ht * s * mn_hyper(alpha, q, rest)
    return total


# --------------------------------------------------------- signed permutations

def simple_signed(series, n, i):
    """Simple reflection i (1-based) as (perm, signs) on n coordinates."""
    m = n + 1 if series == "A" else n
    perm = list(range(m))
    sign = [1] * m
    if series == "A" or i < n:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    elif series in "BC":
        sign[n - 1] = -1
    else:  # D: e_{n-1} <-> -e_n
        perm[n - 2], perm[n - 1] = perm[n - 1], perm[n - 2]
        sign[n - 2] = sign[n - 1] = -1
    return perm, sign


def compose(a, b):
    """(a*b)(e_j) = a(b(e_j))."""
    pa, sa = a
    pb, sb = b
    n = len(pa)
    perm = [pa[pb[j]] for j in range(n)]
    sign = [sa[pb[j]] * sb[j] for j in range(n)]
    return perm, sign


def word_element(series, n, word):
    m = n + 1 if series == "A" else n
    el = (list(range(m)), [1] * m)
    for i in word:
        el = compose(el, simple_signed(series, n, i))
    return el


def signed_cycles(el):
    perm, sign = el
    seen = [False] * len(perm)
    out = []
    for j in range(len(perm)):
        if seen[j]:
            continue
        length, s, x = 0, 1, j
        while not seen[x]:
            seen[x] = True
            s *= sign[x]
            x = perm[x]
            length += 1
        out.append((length, s))
    return sorted(out, reverse=True)


# ------------------------------------------------------------------- naming

def part_str(p):
    return "".join(str(x) for x in p) if p else "-"


def bip_name(a, b):
    return f"({part_str(a)},{part_str(b)})"


def dim_sym(lam):
    return mn_sym(lam, [1] * sum(lam))


# ------------------------------------------------------------------ symbols

def symbol_bc(a, b, m):
    a = list(reversed(a)) + []
    a = [0] * (m + 1 - len(a)) + a
    bb = list(reversed(b))
    bb = [0] * (m - len(bb)) + bb
    return tuple(x + i for i, x in enumerate(a)), tuple(x + i for i, x in enumerate(bb))


def symbol_d(a, b, m):
    aa = [0] * (m - len(a)) + list(reversed(a))
    bb = [0] * (m - len(b)) + list(reversed(b))
    return tuple(x + i for i, x in enumerate(aa)), tuple(x + i for i, x in enumerate(bb))


def is_special(top, bot):
    seq = []
    for i in range(len(top)):
        seq.append(top[i])
        if i < len(bot):
            seq.append(bot[i])
    return all(seq[i] <= seq[i + 1] for i in range(len(seq) - 1))


def singles(top, bot):
    ms = list(top) + list(bot)
    return sorted(x for x in set(ms) if ms.count(x) == 1)


# --------------------------------------------------------------- per type

def match_rows(dump, theory):
    """theory: list of (name, value vector). Returns name per dumped character."""
    names = []
    for ch in dump["chars"]:
        hits = [name for name, vals in theory if vals == ch["values"]]
        if len(hits) != 1:
            raise SystemExit(f"{dump['type']}: character {ch['values']} matches {hits}")
        names.append(hits[0])
    if len(set(names)) != len(names):
        raise SystemExit(f"{dump['type']}: labeling not injective")
    return names


def hint_records(dump, names, disamb=None):
    """One record per character: name, dim, b and traces on every class word."""
    recs = []
    for ch, name in zip(dump["chars"], names):
        traces = [{"word": c["word"], "value": v} for c, v in zip(dump["classes"], ch["values"])]
        recs.append({"name": name, "dim": ch["values"][0], "b": ch["b"], "traces": traces})
    return sorted(recs, key=lambda r: (r["b"], r["dim"], r["name"]))


def labels_A(dump):
    n = int(dump["type"][1:])
    theory = []
    for lam in partitions(n + 1):
        vals = []
        for c in dump["classes"]:
            cyc = [l for l, _ in signed_cycles(word_element("A", n, c["word"]))]
            vals.append(mn_sym(lam, cyc))
        theory.append(("[" + part_str(lam) + "]", vals, n_of(lam)))
    names = match_rows(dump, [(a, v) for a, v, _ in theory])
    bs = {a: b for a, _, b in theory}
    for ch, nm in zip(dump["chars"], names):
        assert ch["b"] == bs[nm], (dump["type"], nm, ch["b"], bs[nm])
    return names


def bipartitions(n):
    for k in range(n, -1, -1):
        for a in partitions(k):
            for b in partitions(n - k):
                yield a, b


def labels_BC(dump):
    n = int(dump["type"][1:])
    theory = []
    for a, b in bipartitions(n):
        vals = [mn_hyper(a, b, signed_cycles(word_element("B", n, c["word"]))) for c in dump["classes"]]
        theory.append((bip_name(a, b), vals, 2 * n_of(a) + 2 * n_of(b) + sum(b), (a, b)))
    names = match_rows(dump, [(t[0], t[1]) for t in theory])
    info = {t[0]: t for t in theory}
    for ch, nm in zip(dump["chars"], names):
        assert ch["b"] == info[nm][2], (dump["type"], nm)
    return names, {nm: info[nm][3] for nm in names}


def labels_D(dump):
    n = int(dump["type"][1:])
    cyc = [signed_cycles(word_element("D", n, c["word"])) for c in dump["classes"]]
    split = [all(s == 1 and l % 2 == 0 for l, s in cy) for cy in cyc]
    names, bips = [], {}
    for ch in dump["chars"]:
        hits = []
        for a, b in bipartitions(n):
            if (a, b) > (b, a):
                continue
            vals = [mn_hyper(a, b, cy) for cy in cyc]
            if a != b:
                if vals == ch["values"]:
                    hits.append((bip_name(a, b), (a, b)))
            else:
                half = [v // 2 for v in vals]
                if all(sp or h == v for sp, h, v in zip(split, half, ch["values"])):
                    hits.append((bip_name(a, b), (a, b)))
        if len(hits) != 1:
            raise SystemExit(f"D: {ch['values']} matches {hits}")
        names.append(hits[0][0])
        bips[hits[0][0]] = hits[0][1]
    # Degenerate pairs: '+' takes the larger value on the first split class.
    first_split = split.index(True)
    final = list(names)
    for nm in set(names):
        idx = [i for i, x in enumerate(names) if x == nm]
        if len(idx) == 2:
            i, j = sorted(idx, key=lambda k: -dump["chars"][k]["values"][first_split])
            final[i], final[j] = nm + "+", nm + "-"
            bips[nm + "+"] = bips[nm + "-"] = bips.pop(nm)
    return final, bips


def labels_exceptional(dump, long_simple, short_simple, tie_pair=None):
    """phi{d},{b} names; a pair sharing (d, b) gets ' for the character with
    the larger trace on the long simple reflection than on the short one. Pairs
    equal on both take ' for the larger trace on the product in `tie_pair`."""
    kl = dump["simple_classes"][long_simple - 1]
    ks = dump["simple_classes"][short_simple - 1]
    kt = dump["pair_classes"][tie_pair] if tie_pair else None
    groups = {}
    for i, ch in enumerate(dump["chars"]):
        groups.setdefault((ch["values"][0], ch["b"]), []).append(i)
    names = [None] * len(dump["chars"])
    for (d, b), idx in groups.items():
        base = f"phi{d},{b}"
        if len(idx) == 1:
            names[idx[0]] = base
        elif len(idx) == 2:
            i, j = idx
            vi, vj = dump["chars"][i]["values"], dump["chars"][j]["values"]
            key_i = (vi[kl] - vi[ks], vi[kt] if kt is not None else 0)
            key_j = (vj[kl] - vj[ks], vj[kt] if kt is not None else 0)
            if key_i == key_j:
                raise SystemExit(f"cannot split {base}")
            if key_i < key_j:
                i, j = j, i
            names[i], names[j] = base + "'", base + "''"
        else:
            raise SystemExit(f"triple {base}")
    return names


# ---------------------------------------------------------------- families

def classical_families(names, bips, series, n):
    m = n + 2
    fam = {}
    for nm in names:
        a, b = bips[nm]
        if series == "D":
            top, bot = symbol_d(a, b, m)
        else:
            top, bot = symbol_bc(a, b, m)
        key = tuple(sorted(top + bot))
        fam.setdefault(key, []).append((nm, top, bot))
    records = []
    for key, mem in sorted(fam.items()):
        if len(mem) == 1 or (series == "D" and len(mem) == 2 and mem[0][1] == mem[0][2]):
            for nm, _, _ in mem:
                records.append({"members": [nm], "gamma": "1", "embedding": {nm: ["1", "1"]}})
            continue
        if len(mem) != 3:
            raise SystemExit(f"unexpected family size {len(mem)} in {series}{n}")
        s = singles(mem[0][1], mem[0][2])
        emb = {}
        for nm, top, bot in mem:
            if is_special(top, bot) or (series == "D" and is_special(bot, top)):
                emb[nm] = ["1", "1"]
        if len(emb) != 1:
            raise SystemExit("special not unique")
        # The two others: the one whose bottom row holds the largest single
        # goes to (1,eps), the other to (g,1).
        for nm, top, bot in mem:
            if nm in emb:
                continue
            holder = bot if series != "D" else (bot if s[0] in top else top)
            emb[nm] = ["1", "eps"] if s[-1] in holder else ["g", "1"]
        records.append({"members": sorted(emb), "gamma": "Z2", "embedding": emb})
    return records


def fourier_check(gamma, emb, dims):
    """F v == v where v puts dim E at m_E."""
    M = gg.build_M(gamma)
    F = gg.fourier_matrix(gamma, M)
    idx = {m: i for i, m in enumerate(M)}
    v = [Fraction(0)] * len(M)
    for nm, (x, s) in emb.items():
        v[idx[(x, s)]] = Fraction(dims[nm])
    Fv = [sum(F[i][j] * v[j] for j in range(len(M))) for i in range(len(M))]
    return Fv == v


def poly_eval(coeffs, q):
    return sum(Fraction(c) * q ** k for k, c in enumerate(coeffs))


def degrees_ok(gamma, emb, fds):
    M = gg.build_M(gamma)
    F = gg.fourier_matrix(gamma, M)
    idx = {m: i for i, m in enumerate(M)}
    for i in range(len(M)):
        for q in (2, 3, 4, 5, 7, 8, 9, 16):
            val = sum(F[i][idx[tuple(e)]] * poly_eval(fds[nm], q) for nm, e in emb.items())
            if val.denominator != 1 or val <= 0:
                return False
    return True


def cyclotomic_form_ok(gamma, emb, fds, a, big_a):
    """Every unipotent degree is c q^a prod Phi_d^k of degree big_a, with value dim E at q=1."""
    import sympy

    u = sympy.symbols("u")
    M = gg.build_M(gamma)
    F = gg.fourier_matrix(gamma, M)
    idx = {m: i for i, m in enumerate(M)}
    polys = []
    for i in range(len(M)):
        co = [Fraction(0)] * (big_a + 5)
        for nm, e in emb.items():
            for k, c in enumerate(fds[nm]):
                co[k] += F[i][idx[tuple(e)]] * Fraction(c)
        nz = [k for k, c in enumerate(co) if c]
        if not nz or (nz[0], nz[-1]) != (a, big_a):
            return False
        expr = sum(sympy.Rational(c.numerator, c.denominator) * u ** k for k, c in enumerate(co))
        for fac, _ in sympy.factor_list(expr)[1]:
            fp = sympy.Poly(fac, u)
            if fp.as_expr() != u and not fp.is_cyclotomic:
                return False
        polys.append(co)
    return all(sum(polys[idx[tuple(e)]]) == dims_of(fds)[nm] for nm, e in emb.items())


def dims_of(fds):
    return {nm: sum(Fraction(c) for c in co) for nm, co in fds.items()}


def f4_s4_embedding(dims, fds, members, special, a, big_a):
    """All embeddings of the F4 21-element family that pass the exact checks.

    Binary x[E,m] with E placed once, slots used at most once, F v = v, and
    every F-row positive at a few q. Principal series members sit at pairs
    with sigma(x) = sigma(1). Float solutions are re-checked exactly."""
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp

    gamma = "S4"
    M = gg.build_M(gamma)
    F = gg.fourier_matrix(gamma, M)
    els, cls = gg.build(gamma)
    rep = {x: r for x, r, _ in cls}
    chars = {x: ch for x, _, ch in cls}
    e = tuple(range(4))
    nM, nE = len(M), len(members)
    nv = nM * nE

    def var(i, m):
        return i * nM + m

    rows, lo, hi = [], [], []

    def add(r, l, h):
        rows.append(r)
        lo.append(l)
        hi.append(h)

    for i in range(nE):
        r = np.zeros(nv)
        r[[var(i, m) for m in range(nM)]] = 1
        add(r, 1, 1)
    for m in range(nM):
        r = np.zeros(nv)
        r[[var(i, m) for i in range(nE)]] = 1
        trivial = abs(complex(chars[M[m][0]][M[m][1]](rep[M[m][0]])) /
                      complex(chars[M[m][0]][M[m][1]](e)) - 1) < 1e-9
        add(r, 0, 1 if trivial else 0)
    r = np.zeros(nv)
    r[var(members.index(special), M.index(("1", "1")))] = 1
    add(r, 1, 1)
    for m in range(nM):
        r = np.zeros(nv)
        for i, nm in enumerate(members):
            for mp in range(nM):
                r[var(i, mp)] += float(F[m][mp]) * dims[nm]
            r[var(i, m)] -= dims[nm]
        add(r, 0, 0)
    for q in (2, 3, 5, 7):
        for m in range(nM):
            r = np.zeros(nv)
            for i, nm in enumerate(members):
                val = float(poly_eval(fds[nm], q))
                for mp in range(nM):
                    r[var(i, mp)] += float(F[m][mp]) * val
            add(r / np.max(np.abs(r)), 1e-9, np.inf)
    A = np.array(rows)
    found, results = [], []
    while True:
        cons = [LinearConstraint(A, lo, hi)]
        for s in found:
            r = np.zeros(nv)
            r[s] = 1
            cons.append(LinearConstraint(r, -np.inf, nE - 1))
        res = milp(np.zeros(nv), constraints=cons, integrality=np.ones(nv), bounds=Bounds(0, 1))
        if res.status != 0:
            break
        s = [k for k in range(nv) if res.x[k] > 0.5]
        found.append(s)
        emb = {members[k // nM]: list(M[k % nM]) for k in s}
        if (fourier_check(gamma, emb, dims) and degrees_ok(gamma, emb, fds)
                and cyclotomic_form_ok(gamma, emb, fds, a, big_a)):
            results.append(emb)
    results.sort(key=lambda emb: [M.index(tuple(emb[nm])) for nm in members])
    return results


def main():
    dump_path, out = sys.argv[1], sys.argv[2]
    f4_choice = int(sys.argv[3]) if len(sys.argv) > 3 else 0
    dumps = json.load(open(dump_path))
    for d in dumps:
        t = d["type"]
        series, n = t[0], int(t[1:])
        dims = {}
        fds = {}
        if series == "A":
            names = labels_A(d)
        elif series in "BC":
            names, bips = labels_BC(d)
        elif series == "D":
            names, bips = labels_D(d)
        elif t == "G2":
            names = labels_exceptional(d, 1, 2)
        elif t == "F4":
            names = labels_exceptional(d, 1, 4, "13")
        else:
            raise SystemExit(t)
        for ch, nm in zip(d["chars"], names):
            dims[nm] = ch["values"][0]
            fds[nm] = ch["fake_degree"]
        write_file(f"{out}/labels/{t}.json", t, hint_records(d, names))

        if series == "A":
            fam = [{"members": [nm], "gamma": "1", "embedding": {nm: ["1", "1"]}} for nm in names]
        elif series in "BCD":
            fam = classical_families(names, bips, series, n)
        elif t == "G2":
            fam = [{"members": [nm], "gamma": "1", "embedding": {nm: ["1", "1"]}}
                   for nm in ("phi1,0", "phi1,6")]
            fam.append({"members": ["phi1,3'", "phi1,3''", "phi2,1", "phi2,2"], "gamma": "S3",
                        "embedding": {"phi2,1": ["1", "1"], "phi2,2": ["g2", "1"],
                                      "phi1,3'": ["1", "r"], "phi1,3''": ["g3", "1"]}})
        else:
            single = ["phi1,0", "phi9,2", "phi8,3'", "phi8,3''", "phi8,9'", "phi8,9''", "phi9,10", "phi1,24"]
            fam = [{"members": [nm], "gamma": "1", "embedding": {nm: ["1", "1"]}} for nm in single]
            for sp, pr in (("phi4,1", "phi2,4"), ("phi4,13", "phi2,16")):
                fam.append({"members": [sp, pr + "'", pr + "''"], "gamma": "Z2",
                            "embedding": {sp: ["1", "1"], pr + "'": ["1", "eps"], pr + "''": ["g", "1"]}})
            big = ["phi12,4", "phi9,6'", "phi9,6''", "phi6,6'", "phi6,6''", "phi16,5",
                   "phi4,7'", "phi4,7''", "phi4,8", "phi1,12'", "phi1,12''"]
            sols = f4_s4_embedding(dims, fds, big, "phi12,4", 4, 20)
            print(f"F4: {len(sols)} admissible S4 embeddings", file=sys.stderr)
            for k, s in enumerate(sols):
                print(f"  [{k}]", json.dumps(s, sort_keys=True), file=sys.stderr)
            if not sols:
                raise SystemExit("no F4 embedding")
            fam.append({"members": sorted(big), "gamma": "S4", "embedding": sols[f4_choice]})
        members = sorted(nm for r in fam for nm in r["members"])
        assert members == sorted(names), t
        for r in fam:
            r["members"] = sorted(r["members"])
            if not fourier_check(r["gamma"], r["embedding"], dims):
                raise SystemExit(f"{t}: F v != v for {r['members']}")
            if not degrees_ok(r["gamma"], r["embedding"], fds):
                raise SystemExit(f"{t}: degrees not positive integers for {r['members']}")
        write_file(f"{out}/families/{t}.json", t, fam)
        print(f"{t}: {len(names)} labels, {len(fam)} families", file=sys.stderr)


if __name__ == "__main__":
    main()
