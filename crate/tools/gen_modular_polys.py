#!/usr/bin/env python3
"""Generate classical modular polynomials Phi_N (N prime) as exact integer
data files, via q-expansions.

Method: compute the q-expansion of j from E4^3 / Delta, then build
Phi_N(X, j(tau)) = (X - j(N tau)) * prod_k (X - j((tau+k)/N)) using power
sums in the variable s = q^(1/N) (only exponents divisible by N survive the
root-of-unity averaging, so all arithmetic stays in integer series), and
finally rewrite each coefficient Laurent series as a polynomial in j.

Output format: first line N; then lines "i j c" (i >= j) meaning the
coefficient c of X^i Y^j, with the symmetric closure implied.

Usage: gen_modular_polys.py OUTDIR N [N...]
"""

import sys
from fractions import Fraction


def series_mul(a, b, prec):
    out = [0] * prec
    for i, x in enumerate(a):
        if x == 0 or i >= prec:
            continue
        for j, y in enumerate(b):
            if i + j >= prec:
                break
            if y:
                out[i + j] += x * y
    return out


def series_inv(a, prec):
    # a[0] must be 1
    assert a[0] == 1
    out = [0] * prec
    out[0] = 1
    for k in range(1, prec):
        acc = 0
        for j in range(1, min(k, len(a) - 1) + 1):
            acc += a[j] * out[k - j]
        out[k] = -acc
    return out


def j_series(prec):
    """Coefficients c(-1), c(0), ..., c(prec-2) of j(q)."""
    # E4 = 1 + 240 sum sigma3(n) q^n
    e4 = [0] * prec
    e4[0] = 1
    sigma3 = [0] * prec
    for d in range(1, prec):
        d3 = d * d * d
        for m in range(d, prec, d):
            sigma3[m] += d3
    for n in range(1, prec):
        e4[n] = 240 * sigma3[n]
    e43 = series_mul(series_mul(e4, e4, prec), e4, prec)
    # Delta / q = prod (1-q^n)^24
    dq = [0] * prec
    dq[0] = 1
    for n in range(1, prec):
        # multiply by (1 - q^n)^24 via binomial expansion
        term = [0] * prec
        term[0] = 1
        c = 1
        for k in range(1, 25):
            c = c * (24 - k + 1) // k
            if n * k >= prec:
                break
            term[n * k] = (-1) ** k * c
        dq = series_mul(dq, term, prec)
    inv = series_inv(dq, prec)
    jq = series_mul(e43, inv, prec)  # this is j*q as a power series
    return jq  # jq[n] = coefficient of q^(n-1) in j


def phi_n(N, buffer=12):
    prec_q = N + buffer + 3          # need j-polynomials of degree <= N+1
    prec_s = N * prec_q              # s = q^(1/N)
    jc = j_series(prec_s + 2)        # jc[n] = c(n-1); full s-range needed

    # j as series in s with valuation -1: represent shifted by +1:
    # js[n] = coefficient of s^(n-1)
    js = [0] * (prec_s + 2)
    for n, c in enumerate(jc):
        if n < len(js):
            js[n] = c
    # power sums P_m(q) of the N conjugates j((tau+k)/N), m = 1..N
    # j_s^m has valuation -m; store shifted by +m: arr[n] = coeff of s^(n-m)
    power = [None] * (N + 1)
    cur = [0] * (prec_s + 2)
    cur[0] = 1  # j^0 = 1 shifted by 0
    psums = []
    shifted = cur
    for m in range(1, N + 1):
        shifted = series_mul(shifted, js, prec_s + 2)
        # coefficient of s^e is shifted[e + m]; keep e divisible by N
        # P_m coefficient of q^(e/N) is N * shifted[e + m]
        pm = {}
        for idx, c in enumerate(shifted):
            e = idx - m
            if c and e % N == 0:
                pm[e // N] = N * c
        psums.append(pm)
        power[m] = shifted

    # Laurent series helpers over Q, dict exponent -> coeff
    def ladd(a, b):
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, 0) + v
            if out[k] == 0:
                del out[k]
        return out

    def lneg(a):
        return {k: -v for k, v in a.items()}

    def lmul(a, b, lo, hi):
        out = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = ka + kb
                if lo <= k <= hi:
                    out[k] = out.get(k, 0) + va * vb
        return {k: v for k, v in out.items() if v != 0}

    def lscale(a, c):
        return {k: v * c for k, v in a.items() if v * c != 0}

    LO, HI = -(N + 2), prec_q - 1

    # Newton's identities: e_m = (1/m) sum_{i=1..m} (-1)^(i-1) e_{m-i} P_i
    es = [dict() for _ in range(N + 1)]
    es[0] = {0: Fraction(1)}
    pfrac = [{k: Fraction(v) for k, v in pm.items()} for pm in psums]
    for m in range(1, N + 1):
        acc = {}
        for i in range(1, m + 1):
            t = lmul(es[m - i], pfrac[i - 1], LO, HI)
            if i % 2 == 0:
                t = lneg(t)
            acc = ladd(acc, t)
        es[m] = lscale(acc, Fraction(1, m))

    # j(N tau)
    jN = {}
    for n, c in enumerate(jc):
        e = (n - 1) * N
        if LO <= e <= HI and c:
            jN[e] = Fraction(c)

    # F(X) = prod_k (X - j((tau+k)/N)) = sum (-1)^m e_m X^(N-m)
    # Phi(X) = (X - j(Ntau)) * F(X)
    fcoef = []  # fcoef[d] = coefficient Laurent series of X^d in F
    for d in range(N + 1):
        m = N - d
        c = es[m]
        if m % 2 == 1:
            c = lneg(c)
        fcoef.append(c)
    phic = [dict() for _ in range(N + 2)]
    for d in range(N + 1):
        phic[d + 1] = ladd(phic[d + 1], fcoef[d])
        phic[d] = ladd(phic[d], lneg(lmul(jN, fcoef[d], LO, HI)))

    # reduce each phic[d] to a polynomial in j
    jlaurent = {n - 1: Fraction(c) for n, c in enumerate(jc) if c}
    jpows = [{0: Fraction(1)}]
    for _ in range(N + 2):
        jpows.append(lmul(jpows[-1], jlaurent, LO, HI))

    # products against j(Ntau) (pole order N) contaminate the top N+2
    # orders; everything below valid_hi is exact and must cancel
    valid_hi = prec_q - N - 4
    assert valid_hi >= 6, "buffer too small"
    table = {}
    for d in range(N + 2):
        cur = phic[d]
        while cur:
            v = min(cur.keys())
            if v > valid_hi:
                break  # truncation noise only
            if v > 0:
                raise AssertionError(f"nonzero tail in X^{d}: {cur}")
            m = -v
            lead = cur[v]
            assert lead.denominator == 1, (d, v, lead)
            table[(d, m)] = int(lead)
            cur = ladd(cur, lneg(lscale(jpows[m], lead)))
    # verify symmetry and integrality
    for (i, jdeg), c in table.items():
        assert table.get((jdeg, i), 0) == c, f"asymmetry at {(i, jdeg)}"
    return table


KNOWN_PHI2 = {
    (3, 0): 1,
    (2, 2): -1,
    (2, 1): 1488,
    (2, 0): -162000,
    (1, 1): 40773375,
    (1, 0): 8748000000,
    (0, 0): -157464000000000,
}


def main():
    outdir = sys.argv[1]
    levels = [int(x) for x in sys.argv[2:]]
    for n in levels:
        table = phi_n(n)
        if n == 2:
            for key, val in KNOWN_PHI2.items():
                assert table.get(key) == val, (key, table.get(key), val)
            print("phi_2 matches the classical table")
        # Kronecker congruence: Phi_N(X,Y) = (X^N - Y)(X - Y^N) mod N
        kron = {}
        for (i, j), c in {(n, 1): 1, (n + 1, 0): 0}.items():
            pass
        # build (X^N - Y)(X - Y^N) coefficients
        prod = {}
        for (i1, j1, c1) in [(n, 0, 1), (0, 1, -1)]:
            for (i2, j2, c2) in [(1, 0, 1), (0, n, -1)]:
                key = (i1 + i2, j1 + j2)
                prod[key] = prod.get(key, 0) + c1 * c2
        allkeys = set(table) | set(prod)
        for key in allkeys:
            diff = table.get(key, 0) - prod.get(key, 0)
            assert diff % n == 0, f"Kronecker congruence fails at {key} for N={n}"
        print(f"phi_{n}: Kronecker congruence ok; {len(table)} terms")
        lines = [str(n)]
        for (i, j) in sorted(table.keys(), reverse=True):
            if i >= j:
                lines.append(f"{i} {j} {table[(i, j)]}")
        with open(f"{outdir}/phi_{n}.txt", "w") as f:
            f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
