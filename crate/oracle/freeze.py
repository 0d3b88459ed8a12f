"""Independent oracle for the congruence catalog.

Evaluates both sides of every congruence with Python fractions (Euler
numbers and polynomials from sympy), reduces them modulo p^e and writes
crates/core/tests/data/oracle.tsv. Pointwise checks record the last index.

    python3 oracle/freeze.py
"""

from fractions import Fraction as Fr
from math import comb, factorial
from pathlib import Path

import sympy

PRIMES = list(sympy.primerange(5, 48))
OUT = Path(__file__).resolve().parent.parent / "crates/core/tests/data/oracle.tsv"


def red(x, m):
    x = Fr(x)
    return x.numerator * pow(x.denominator, -1, m) % m


def leg(a, p):
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def harm(n, order=1, alt=False):
    return sum(Fr((-1) ** k if alt else 1, k**order) for k in range(1, n + 1))


def poch(a, k):
    r = Fr(1)
    for i in range(k):
        r *= a + i
    return r


def core(n, k):
    return Fr(
        factorial(2 * n + 2 * k) * factorial(2 * n - 2 * k) * comb(2 * n - 2 * k, n - k),
        factorial(n + k) * factorial(n - k) * factorial(n) ** 2,
    )


def F(n, k):
    if n < k:
        return Fr(0)
    return (-1) ** (n + k) * (6 * n - 2 * k + 1) / Fr(2) ** (9 * n - 3 * k) * core(n, k)


def G(n, k):
    if n < k or n == 0:
        return Fr(0)
    return (-1) ** (n + k) * n * n / (Fr(2) ** (9 * n - 3 * k - 4) * (2 * n + 2 * k - 1)) * core(n, k)


def rows(p):
    h = (p - 1) // 2
    q = Fr(2 ** (p - 1) - 1, p)
    E = int(sympy.euler(p - 3))
    e14 = sympy.euler(p - 3, sympy.Rational(1, 4))
    EQ = Fr(int(e14.p), int(e14.q))
    s = (-1) ** h
    ram = lambda top: sum(Fr((6 * n + 1) * comb(2 * n, n) ** 3, (-512) ** n) for n in range(top + 1))
    l32 = s * p * (1 - p * q + p * p * q * q)
    block = 3 * p * p * (1 + 4 * p - 6 * p * q)
    k = h
    yield "THM_1_1", 4, ram(h), p * leg(-2, p) + Fr(p**3, 4) * leg(2, p) * E
    yield "THM_1_2", 1, sum(Fr(comb(2 * k, k), 2**k) * harm(k) ** 2 for k in range(1, h + 1)), s * q * q - E
    yield "REMARK_1_2_FULL", 1, sum(Fr(comb(2 * k, k), 2**k) * harm(k) ** 2 for k in range(p)), s * q * q - E
    yield "THM_1_3", 4, ram(p - 1), p * leg(-2, p) + Fr(p**3, 16) * EQ
    yield "VH_ZUDILIN", 3, sum((4 * k + 1) * (-1) ** k * (poch(Fr(1, 2), k) / factorial(k)) ** 3 for k in range(h + 1)), s * p
    yield "CXH_3K1", 4, sum(Fr((3 * k + 1) * comb(2 * k, k) ** 3, (-8) ** k) for k in range(p)), p * s + p**3 * E
    yield "SUN_4K1", 4, sum(Fr((4 * k + 1) * comb(2 * k, k) ** 3, (-64) ** k) for k in range(p)), p * s + p**3 * E
    yield "GUO_LIU", 4, sum(
        (-1) ** k * (4 * k - 1) * poch(Fr(-1, 2), k) ** 3 / factorial(k) ** 3 for k in range((p + 1) // 2 + 1)
    ), p * (-1) ** ((p + 1) // 2) + p**3 * (2 - E)
    yield "WOLSTENHOLME_H1", 2, harm(p - 1), 0
    yield "WOLSTENHOLME_H2", 1, harm(p - 1, 2), 0
    yield "BINOM_2P1P", 3, comb(2 * p - 1, p - 1), 1
    yield "LEM_2_2", 1, sum(Fr((-1) ** k, k) * harm(k) for k in range(1, h + 1)), q * q / 2 + s * E
    yield "AUX_BINOM_P1", 2, (-1) ** (p - 2) * comb(p - 1, p - 2), 1 - p * harm(p - 2)
    yield "SUM_ALT_INV", 2, harm(h, 1, True), -q + Fr(p, 2) * q * q - s * p * E
    if p > 5:
        yield "SUM_ALT_INV2", 1, harm(h, 2, True), 2 * s * E
    yield "H_HALF", 1, harm(h), -2 * q
    yield "H2_HALF", 1, harm(h, 2), 0
    yield "BINOM_TRANSFER", 1, comb(2 * h, h), comb(h, h) * (-4) ** h
    yield "MORLEY", 3, comb(p - 1, h), s * 4 ** (p - 1)
    yield "LEM_3_2", 4, F(h, h), l32
    yield "LEM_3_3", 2, sum(comb(h, k) * (-2) ** k * harm(k) for k in range(1, h + 1)), s * (-q + Fr(p, 2) * q * q) + p * E
    yield "LEM_3_4", 4, sum(G(h + 1, k) for k in range(1, h + 1)), p * leg(-2, p) + Fr(p**3, 4) * leg(2, p) * E - l32
    yield "TWO_POW_HALF", 3, 2**h, leg(2, p) * (1 + Fr(p, 2) * q - Fr(p * p, 8) * q * q)
    dfact = Fr(factorial(2 * k - 2), 2 ** (k - 1) * factorial(k - 1))
    yield "AUX_ODD_PRODUCT", 3, (-2) ** (k - 1) * poch(Fr(p + 3, 2) - k, k - 1), dfact * comb(h, k - 1) * (-4) ** (k - 1) / comb(2 * k - 2, k - 1)
    yield "LEM_4_1", 4, F(p - 1, p - 1), -block
    yield "BINOM_4P", 2, comb(4 * p - 1, 2 * p - 1), 3
    yield "LEM_4_3_A", 1, sum(Fr(8**k, k * (2 * k - 1) * comb(2 * k, k)) for k in range(1, h + 1)), EQ / 4
    yield "LEM_4_3_B", 1, leg(-2, p) * sum(Fr(2**k, k * k * comb(2 * k, k)) for k in range(1, h + 1)), EQ / 4
    yield "LEM_4_4", 4, sum(G(p, k) for k in range(1, h + 1)), Fr(p**3, 16) * EQ
    yield "LEM_4_4_TERM", 4, G(p, h), Fr(p**3, 4) * Fr(8**h, h * (2 * h - 1) * comb(2 * h, h))
    yield "LEM_4_5", 4, G(p, (p + 1) // 2), p * leg(-2, p) * (1 - Fr(3 * p, 2) * q + Fr(15 * p * p, 8) * q * q)
    yield "LEM_4_6", 4, sum(G(p, k) for k in range((p + 3) // 2, p)), leg(-2, p) * 3 * p * p * (q / 2 - Fr(5, 8) * p * q * q) + block
    yield "SIGMA_SUM_1", 2, sum(comb(h, k) * Fr((-2) ** k, k) for k in range(1, h + 1)), q - Fr(p, 2) * q * q - p * s * E
    yield "SIGMA_SUM_2", 1, sum(comb(h, k) * Fr((-2) ** k, k * k) for k in range(1, h + 1)), -q * q / 2 + s * E
    yield "SIGMA_SUM_3", 1, sum(comb(h, k) * Fr((-2) ** k, k) * harm(k) for k in range(1, h + 1)), s * E
    yield "E_P3", 1, E, E
    yield "E_P3_QUARTER", 1, EQ, EQ


def main():
    lines = ["# id\tp\te\tlhs\trhs"]
    for p in PRIMES:
        for name, e, lhs, rhs in rows(p):
            m = p**e
            lines.append(f"{name}\t{p}\t{e}\t{red(lhs, m)}\t{red(rhs, m)}")
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} rows to {OUT}")


if __name__ == "__main__":
    main()
