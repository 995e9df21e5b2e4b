"""Regenerate the JSON fixtures under fixtures/.

    python3 scripts/make_fixtures.py [outdir]

Hopf algebras: the doubles of k[Z2] and k[S3], the double of the Sweedler
algebra and the small quantum group u_q(sl2) at q = zeta_3.  Frobenius objects:
the tensor unit, and X (x) X^ for selected modules X, normalized to be special,
plus one unnormalized copy whose mult o comult is dim_q(X) != 1 times the identity.
"""
from __future__ import annotations

import sys
from functools import lru_cache
from pathlib import Path

from bulkcor.frobenius import internal_end_frobenius, trivial_frobenius
from bulkcor.hopf import (HopfData, cyclic_group_table, drinfeld_double, drinfeld_double_of_group,
                          grouplikes_of_double, sweedler_algebra, symmetric_group_table, with_ribbon)
from bulkcor.io import UNIT_MODULE, frobenius_to_json, hopf_to_json, module_to_json, write_json
from bulkcor.linalg import Matrix
from bulkcor.rep import direct_sum, wedderburn
from bulkcor.scalar import Scalar


def small_quantum_sl2(ell: int = 3) -> HopfData:
    """u_q(sl2) at q = zeta_ell (ell odd) on the PBW basis F^a K^b E^c.

    Delta E = E (x) K + 1 (x) E, Delta F = F (x) 1 + K^-1 (x) F, Delta K = K (x) K,
    R = (1/ell) sum_ij q^(-2ij) K^i (x) K^j . sum_k (q - q^-1)^k / [k]! q^(k(k-1)/2) E^k (x) F^k,
    ribbon v = K^-1 u and pivot K.
    """
    n = ell
    q = Scalar.zeta(n)
    one, zero = Scalar.rational(1, n), Scalar.rational(0, n)
    qq = q - q ** (n - 1)
    basis = [(a, b, c) for a in range(ell) for b in range(ell) for c in range(ell)]
    index = {m: i for i, m in enumerate(basis)}
    d = len(basis)
    rank = {"F": 0, "K": 1, "E": 2}

    def qp(k):
        return q ** (k % n)

    def qint(m):
        return (qp(m) - qp(-m)) / qq

    @lru_cache(None)
    def normal_form(word):
        for i in range(len(word) - 1):
            x, y = word[i], word[i + 1]
            if rank[x] <= rank[y]:
                continue
            pre, post = word[:i], word[i + 2:]
            out: dict = {}

            def add(w, c):
                for m, cc in normal_form(w).items():
                    out[m] = out.get(m, zero) + c * cc

            if (x, y) == ("E", "F"):
                add(pre + ("F", "E") + post, one)
                add(pre + ("K",) + post, one / qq)
                add(pre + ("K",) * (ell - 1) + post, -one / qq)
            elif (x, y) == ("E", "K"):
                add(pre + ("K", "E") + post, qp(-2))
            else:
                add(pre + ("F", "K") + post, qp(-2))
            return {m: c for m, c in out.items() if not c.is_zero()}
        a, b, c = word.count("F"), word.count("K"), word.count("E")
        if a >= ell or c >= ell:
            return {}
        return {(a, b % ell, c): one}

    def word(m):
        a, b, c = m
        return ("F",) * a + ("K",) * b + ("E",) * c

    def mul(x, y):
        out: dict = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                for m, c in normal_form(word(m1) + word(m2)).items():
                    out[m] = out.get(m, zero) + c1 * c2 * c
        return {m: c for m, c in out.items() if not c.is_zero()}

    def tmul(x, y):
        out: dict = {}
        for (a1, b1), c1 in x.items():
            for (a2, b2), c2 in y.items():
                for ma, ca in mul({a1: one}, {a2: one}).items():
                    for mb, cb in mul({b1: one}, {b2: one}).items():
                        out[(ma, mb)] = out.get((ma, mb), zero) + c1 * c2 * ca * cb
        return {k: c for k, c in out.items() if not c.is_zero()}

    def power(x, k, prod, unit):
        out = unit
        for _ in range(k):
            out = prod(out, x)
        return out

    def vec(x):
        return Matrix.from_entries(d, 1, [x.get(m, zero) for m in basis], n)

    e0 = (0, 0, 0)
    K, Ki, E, F = (0, 1, 0), (0, ell - 1, 0), (0, 0, 1), (1, 0, 0)
    mult = [[zero] * (d * d) for _ in range(d)]
    for i, mi in enumerate(basis):
        for j, mj in enumerate(basis):
            for m, c in normal_form(word(mi) + word(mj)).items():
                mult[index[m]][i * d + j] += c
    unit = vec({e0: one})

    t_unit = {(e0, e0): one}
    dE, dF, dK = {(E, K): one, (e0, E): one}, {(F, e0): one, (Ki, F): one}, {(K, K): one}
    comult = [[zero] * d for _ in range(d * d)]
    for k, (a, b, c) in enumerate(basis):
        x = tmul(tmul(power(dF, a, tmul, t_unit), power(dK, b, tmul, t_unit)), power(dE, c, tmul, t_unit))
        for (m1, m2), v in x.items():
            comult[index[m1] * d + index[m2]][k] = v
    counit = Matrix.from_entries(1, d, [one if m[0] == 0 and m[2] == 0 else zero for m in basis], n)

    sE, sF, sK = mul({E: -one}, {Ki: one}), mul({K: -one}, {F: one}), {Ki: one}
    antipode = [[zero] * d for _ in range(d)]
    for k, (a, b, c) in enumerate(basis):
        x = mul(mul(power(sE, c, mul, {e0: one}), power(sK, b, mul, {e0: one})), power(sF, a, mul, {e0: one}))
        for m, v in x.items():
            antipode[index[m]][k] = v

    cartan = {}
    for i in range(ell):
        for j in range(ell):
            key = ((0, i, 0), (0, j, 0))
            cartan[key] = cartan.get(key, zero) + qp(-2 * i * j) / Scalar.rational(ell, n)
    theta, fact = {}, one
    for k in range(ell):
        if k:
            fact = fact * qint(k)
        theta[((0, 0, k), (k, 0, 0))] = qq ** k / fact * qp(k * (k - 1) // 2)
    r = tmul(cartan, theta)
    r_summands = [(vec({a: c}), vec({b: one})) for (a, b), c in sorted(r.items())]
    h = HopfData(d, n, Matrix.from_rows(mult, n), unit, Matrix.from_rows(comult, n), counit,
                 Matrix.from_rows(antipode, n), r_summands, name=f"u_q(sl2), q = zeta_{ell}")
    pivot = vec({K: one})
    return with_ribbon(h, h.mul(h.inv(pivot), h.drinfeld_element), pivot)


def sweedler_double() -> HopfData:
    """D(H4) with its canonical R, pivot the grouplike g and v = g^-1 u (not ribbon)."""
    h4 = sweedler_algebra()
    dd = drinfeld_double(h4, "D(Sweedler)")
    g = grouplikes_of_double(h4, dd)[1]
    return with_ribbon(dd, dd.mul(dd.inv(g), dd.drinfeld_element), g)


HOPF = {
    "d_z2": lambda: drinfeld_double_of_group(cyclic_group_table(2), name="D(k[Z2])"),
    "d_sweedler": sweedler_double,
    "uq_sl2_3": small_quantum_sl2,
    "d_s3": lambda: drinfeld_double_of_group(symmetric_group_table(3), 3, name="D(k[S3])"),
}

# (hopf, simple index, multiplicity, normalized)
INTERNAL_ENDS = [
    ("d_z2", 1, 2, True),
    ("d_z2", 1, 2, False),
    ("d_sweedler", 1, 2, True),
    ("d_sweedler", 0, 1, True),
    ("uq_sl2_3", 1, 1, True),
    ("d_s3", 2, 1, True),
]


def main(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    write_json(outdir / "trivial_frob.json", frobenius_to_json(trivial_frobenius(HOPF["d_z2"]()), UNIT_MODULE))
    algebras = {}
    for key, make in HOPF.items():
        algebras[key] = make()
        write_json(outdir / f"{key}.json", hopf_to_json(algebras[key]))
        print(f"wrote {key}.json (dim {algebras[key].dim})")
    simples = {}
    for key, s, mult, normalized in INTERNAL_ENDS:
        h = algebras[key]
        if key not in simples:
            simples[key] = wedderburn(h).simples
        x = simples[key][s]
        tag = f"s{s}" if mult == 1 else f"s{s}x{mult}"
        if mult > 1:
            x = direct_sum([x] * mult, tag)
        else:
            x.name = tag
        f = internal_end_frobenius(x, normalized, f"End({tag})")
        base = f"{key}_end_{tag}"
        write_json(outdir / f"{base}_module.json", module_to_json(f.object, f"{key}.json"))
        name = base if normalized else f"{base}_unnormalized"
        write_json(outdir / f"{name}.json", frobenius_to_json(f, f"{base}_module.json"))
        print(f"wrote {name}.json (dim {f.dim})")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures")
