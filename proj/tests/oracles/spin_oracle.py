"""Exact contraction matrix elements for the spin tests (sympy, exact arithmetic).

With w_n = v_{n-s}, K- = S-/sqrt(s+1), K+ = S+/sqrt(s+1), K3 = S3/(s+1):
  <w_{n-1}|K- w_n> = sqrt(n (2s - n + 1) / (s + 1))  against sqrt(2n)
  <w_{n+1}|K+ w_n> = sqrt((n + 1)(2s - n) / (s + 1))  against sqrt(2n + 2)
  <w_n|K3 w_n>     = (n - s)/(s + 1)                  against -1

    python3 spin_oracle.py
"""

import sympy as sp


def defects(s, n_max):
    s = sp.Rational(s)
    minus = max(abs(sp.sqrt(n * (2 * s - n + 1) / (s + 1)) - sp.sqrt(2 * n)) for n in range(1, n_max + 1))
    plus = max(abs(sp.sqrt((n + 1) * (2 * s - n) / (s + 1)) - sp.sqrt(2 * n + 2)) for n in range(0, n_max))
    k3 = max(abs((n - s) / (s + 1) + 1) for n in range(0, n_max + 1))
    return minus, plus, k3


def main():
    print("// s, minus, plus, k3")
    for s in (200, 400, 800):
        m, p, k = defects(s, 3)
        print(f"    {{{s}, {sp.N(m, 20)}, {sp.N(p, 20)}, {sp.N(k, 20)}}},")


if __name__ == "__main__":
    main()
