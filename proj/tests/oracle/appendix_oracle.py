#!/usr/bin/env python3
"""Independent symbolic oracle for the certificate polynomials.

Builds the four bounding functions with sympy, substitutes x -> 1/x,
factors, shifts, and writes every coefficient to a C++ fixture header.
Also freezes high-precision reference values (pi, sin 1, tan 1, ...)
computed with mpmath. Run once; the output is committed.

    python3 tests/oracle/appendix_oracle.py > tests/fixtures/appendix_oracle.hpp
"""
from sympy import (Poly, Rational, expand, factor, factorial, fraction,
                   symbols, together)
import mpmath

x, PI = symbols("x pi", positive=True)


def u(t, p):
    return sum((-1) ** k * t ** (2 * k + 1) / factorial(2 * k + 1) for k in range(p + 1))


def v(t, q):
    return sum((-1) ** k * t ** (2 * k) / factorial(2 * k) for k in range(q + 1))


a = Rational(8, 945) * x**2
b = Rational(8, 945) * x**2 - Rational(16, 14175) * x**4
K = 160 / PI**5 - 16 / PI**3
K2 = 960 / PI**6 - 96 / PI**4
y = PI / 2 - x

m = 2 + (Rational(8, 45) - a) * x**3 * u(x, 4) / v(x, 3) - ((u(x, 3) / x) ** 2 + 1 / x * u(x, 3) / v(x, 4))
n = 2 + (Rational(8, 45) - b) * x**3 * u(x, 5) / v(x, 4) - ((u(x, 6) / x) ** 2 + 1 / x * u(x, 6) / v(x, 3))
p = 2 + (16 / PI**4 + K * x) * y**3 * v(x, 2) / u(x, 1) - ((v(x, 1) / y) ** 2 + 1 / y * v(x, 1) / u(x, 2))
q = 2 + (16 / PI**4 + K * x + K2 * x**2) * y**3 * v(x, 1) / u(x, 2) - ((v(x, 2) / y) ** 2 + 1 / y * v(x, 2) / u(x, 1))


def pi_terms(c):
    """Coefficient (a polynomial in pi with integer coefficients) -> [(exp, int)]."""
    c = expand(c)
    pc = Poly(c, PI)
    return sorted((mon[0], int(coef)) for mon, coef in zip(pc.monoms(), pc.coeffs()))


def emit_poly(name, poly):
    cs = poly.all_coeffs()[::-1]
    print(f"inline const OraclePoly {name} = {{")
    for c in cs:
        terms = ", ".join(f'{{{e}, "{v}"}}' for e, v in pi_terms(c))
        print(f"    {{{terms}}},")
    print("};")


print("// Generated by tests/oracle/appendix_oracle.py. Do not edit.")
print("#pragma once\n#include <string_view>\n#include <utility>\n#include <vector>\n")
print("namespace wilker::oracle {\n")
print("using OracleTerm = std::pair<int, std::string_view>;")
print("using OraclePoly = std::vector<std::vector<OracleTerm>>;\n")

names = {"m": ("A", 1), "n": ("D", 1), "p": ("E", 3), "q": ("F", 2)}
for fname, f in (("m", m), ("n", n), ("p", p), ("q", q)):
    letter, shift = names[fname]
    g = together(f.subs(x, 1 / x))
    num, den = fraction(factor(g))
    shifted = Poly(expand(num.subs(x, x + shift)), x)
    lc = shifted.LC().subs(PI, mpmath.pi)
    sign = 1 if lc > 0 else -1
    shifted = Poly(expand(sign * shifted.as_expr()), x)
    print(f"// {fname}(1/x) = {'-' if sign < 0 else ''}{letter}(x-{shift}) / ({den})")
    emit_poly(letter, shifted)
    print(f"inline constexpr int {letter}_sign = {sign};\n")

for letter, trunc, deg, scale in (("B", v(x, 4), 8, 40320), ("C", v(x, 3), 6, 720)):
    lifted = Poly(expand(scale * x**deg * trunc.subs(x, 1 / x)), x)
    if lifted.LC() < 0:
        lifted = -lifted
    emit_poly(letter, Poly(expand(lifted.as_expr().subs(x, x + 1)), x))
    print()

mpmath.mp.dps = 110
def dig(val):
    return mpmath.nstr(val, 105, strip_zeros=False)

print(f'inline constexpr std::string_view kPi100 = "{dig(mpmath.pi)}";')
print(f'inline constexpr std::string_view kSin1 = "{dig(mpmath.sin(1))}";')
print(f'inline constexpr std::string_view kTan1 = "{dig(mpmath.tan(1))}";')
one = mpmath.mpf(1)
ratio1 = ((mpmath.sin(one)) ** 2 + mpmath.tan(one) - 2) / mpmath.tan(one)
print(f'inline constexpr std::string_view kWilkerRatio1 = "{dig(ratio1)}";')
print("\n}  // namespace wilker::oracle")
