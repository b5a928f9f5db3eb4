#!/usr/bin/env python3
"""Regenerate the bundled OEIS reference fixtures.

Each sequence is computed here from a textbook recurrence or closed
form, independently of the Rust library, and written in OEIS b-file
format ("index value" lines, # comments allowed). 30 terms per file.

Run from the repository root:  python3 scripts/gen_fixtures.py
"""

import os
from fractions import Fraction
from math import comb, factorial

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "crates", "cli", "fixtures")
TERMS = 30


def double_factorial_odd(k):
    """(2k-1)!! with (-1)!! = 1."""
    out = 1
    for i in range(1, k + 1):
        out *= 2 * i - 1
    return out


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def a000108():
    return [catalan(n) for n in range(TERMS)]


def a000898():
    a = [1, 2]
    while len(a) < TERMS:
        n = len(a)
        a.append(2 * (a[n - 1] + (n - 1) * a[n - 2]))
    return a


def a001263():
    # Narayana triangle, OEIS indexing: T(n,k) = C(n-1,k-1)*C(n,k-1)/k
    out = []
    n = 1
    while len(out) < TERMS:
        for k in range(1, n + 1):
            out.append(comb(n - 1, k - 1) * comb(n, k - 1) // k)
        n += 1
    return out[:TERMS]


def a001591():
    a = [0, 0, 0, 0, 1]
    while len(a) < TERMS:
        a.append(sum(a[-5:]))
    return a[:TERMS]


def a007318():
    out = []
    n = 0
    while len(out) < TERMS:
        out.extend(comb(n, k) for k in range(n + 1))
        n += 1
    return out[:TERMS]


def delannoy_rows(rows):
    t = []
    for n in range(rows):
        row = [1] * (n + 1)
        for k in range(1, n):
            row[k] = t[n - 1][k - 1] + t[n - 1][k] + (t[n - 2][k - 1] if n >= 2 else 0)
        t.append(row)
    return t


def a008288():
    out = []
    for row in delannoy_rows(10):
        out.extend(row)
    return out[:TERMS]


def eulerian_rows(rows):
    # t[n] counts permutations of n+1 elements by descents
    t = [[1]]
    for n in range(1, rows):
        prev = t[-1]
        row = []
        for k in range(n + 1):
            up = (k + 1) * (prev[k] if k < len(prev) else 0)
            down = (n + 1 - k) * (prev[k - 1] if k >= 1 else 0)
            row.append(up + down)
        t.append(row)
    return t


def a008292():
    out = []
    for row in eulerian_rows(10):
        out.extend(row)
    return out[:TERMS]


def a055151():
    out = []
    n = 0
    while len(out) < TERMS:
        for k in range(n // 2 + 1):
            out.append(factorial(n) // (factorial(k) * factorial(k + 1) * factorial(n - 2 * k)))
        n += 1
    return out[:TERMS]


def a059344():
    out = []
    n = 0
    while len(out) < TERMS:
        for k in range(n // 2 + 1):
            out.append(comb(n, 2 * k) * 2**k * double_factorial_odd(k))
        n += 1
    return out[:TERMS]


def a077938():
    a = [1, 2, 5]
    while len(a) < TERMS:
        a.append(2 * a[-1] + a[-2] + 2 * a[-3])
    return a[:TERMS]


def a100861():
    out = []
    n = 0
    while len(out) < TERMS:
        for k in range(n // 2 + 1):
            out.append(comb(n, 2 * k) * double_factorial_odd(k))
        n += 1
    return out[:TERMS]


def a100862():
    out = []
    n = 0
    while len(out) < TERMS:
        for k in range(n + 1):
            acc = Fraction(0)
            for j in range(0, min(k, n - k) + 1):
                acc += Fraction(comb(k, j), factorial(n - k - j) * 2**j)
            val = acc * Fraction(factorial(n), factorial(k))
            assert val.denominator == 1
            out.append(val.numerator)
        n += 1
    return out[:TERMS]


def gamma_peel(row):
    """Gamma coefficients of a palindromic row: repeatedly strip the
    leading coefficient against the basis x^i (1+x)^(n-2i)."""
    n = len(row) - 1
    current = list(row)
    gamma = []
    for i in range(n // 2 + 1):
        g = current[i]
        gamma.append(g)
        for j in range(n + 1):
            c = comb(n - 2 * i, j - i) if 0 <= j - i <= n - 2 * i else 0
            current[j] -= g * c
    assert all(v == 0 for v in current), "row is not reciprocal"
    return gamma


def a101280():
    out = []
    for row in eulerian_rows(10):
        out.extend(gamma_peel(row))
    return out[:TERMS]


def a271875():
    # beta array (1, x/c(x)): series arithmetic on integer lists
    order = 16
    c = [catalan(n) for n in range(order + 1)]
    # 1/c = 1 - x*c  (from c = 1 + x c^2)
    f = [0] * (order + 1)  # x/c = x - x^2 c
    f[1] = 1
    for i in range(2, order + 1):
        f[i] = -c[i - 2]
    rows = []
    power = [1] + [0] * order  # f^k
    for k in range(9):
        rows.append(list(power))
        power = [sum(power[i] * f[n - i] for i in range(n + 1)) for n in range(order + 1)]
    out = []
    for n in range(9):
        for k in range(n + 1):
            out.append(rows[k][n])
    return out[:TERMS]


SEQUENCES = {
    "A000108": (a000108, 0, "Catalan numbers"),
    "A000898": (a000898, 0, "a(n) = 2*(a(n-1) + (n-1)*a(n-2))"),
    "A001263": (a001263, 1, "Narayana triangle read by rows"),
    "A001591": (a001591, 0, "Pentanacci numbers"),
    "A007318": (a007318, 0, "Pascal's triangle read by rows"),
    "A008288": (a008288, 0, "Delannoy numbers read by antidiagonals"),
    "A008292": (a008292, 1, "Eulerian triangle read by rows"),
    "A055151": (a055151, 0, "Motzkin polynomial coefficients"),
    "A059344": (a059344, 0, "2^n x^n in Hermite polynomials, nonzero coefficients"),
    "A077938": (a077938, 0, "Expansion of 1/(1 - 2x - x^2 - 2x^3)"),
    "A100861": (a100861, 0, "Bessel triangle: k-matchings of K(n)"),
    "A100862": (a100862, 0, "k-matchings of the corona K'(n)"),
    "A101280": (a101280, 1, "Gamma coefficients of the Eulerian triangle"),
    "A271875": (
        a271875,
        0,
        "Riordan array (1, x/c(x)); signs follow the defining array, "
        "which may differ from the canonical OEIS normalization",
    ),
}


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    for anum, (fn, offset, desc) in sorted(SEQUENCES.items()):
        terms = fn()
        assert len(terms) == TERMS, anum
        path = os.path.join(OUT_DIR, f"{anum}.txt")
        with open(path, "w") as fh:
            fh.write(f"# {anum}: {desc}\n")
            fh.write(f"# generated by scripts/gen_fixtures.py, {TERMS} terms\n")
            for i, v in enumerate(terms):
                fh.write(f"{offset + i} {v}\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
