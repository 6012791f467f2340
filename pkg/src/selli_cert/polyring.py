"""Dense integer polynomials with exact resultants, discriminants, and
rational root extraction.

Coefficients are stored in ascending order (index i holds the coefficient
of x^i) and trailing zeros are stripped, so the leading coefficient of a
nonzero polynomial is never zero; the zero polynomial is the empty tuple.

The resultant follows the convention

    Res(f, g) = lc(f)^deg(g) * prod over roots r of f of g(r),

computed exactly as the determinant of the Sylvester matrix by Bareiss
fraction-free elimination (no floating point, no modular reconstruction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors
from .errors import ParameterError

__all__ = [
    "Rational",
    "IntPolynomial",
    "resultant",
    "discriminant",
    "cubic_discriminant",
    "rational_roots",
]

Rational = Fraction


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple[int, ...]  # ascending, no trailing zeros

    @classmethod
    def from_coefficients(cls, coeffs) -> "IntPolynomial":
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        if self.is_zero:
            raise ParameterError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def evaluate_rational(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.from_coefficients(
            i * c for i, c in enumerate(self.coefficients) if i > 0
        )

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.from_coefficients(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial.zero()
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial.from_coefficients(out)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)})"


def _bareiss_determinant(rows: list[list[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) = lc(f)^deg(g) * prod g(roots of f), exact."""
    if f.is_zero or g.is_zero:
        raise ParameterError("resultant of the zero polynomial is undefined")
    m, n = f.degree, g.degree
    if m == 0:
        return f.coefficients[0] ** n
    if n == 0:
        return g.coefficients[0] ** m
    fd = list(reversed(f.coefficients))
    gd = list(reversed(g.coefficients))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - i - m - 1))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - i - n - 1))
    return _bareiss_determinant(rows)


def discriminant(f: IntPolynomial) -> int:
    """disc(f) = (-1)^(d(d-1)/2) * Res(f, f') / lc(f), exact integer."""
    d = f.degree
    if d < 2:
        raise ParameterError("discriminant requires degree >= 2")
    res = resultant(f, f.derivative())
    lead = f.leading_coefficient
    num = (-1) ** (d * (d - 1) // 2) * res
    q, r = divmod(num, lead)
    if r != 0:
        raise AssertionError("discriminant division is always exact")
    return q


def cubic_discriminant(a: int, b: int, c: int, d: int) -> int:
    """Discriminant of a*x^3 + b*x^2 + c*x + d by the closed form."""
    if a == 0:
        raise ParameterError("leading coefficient must be nonzero")
    return (
        b * b * c * c
        - 4 * a * c**3
        - 4 * b**3 * d
        - 27 * a * a * d * d
        + 18 * a * b * c * d
    )


def rational_roots(f: IntPolynomial, *, budget: int = 10**6) -> list[Fraction]:
    """All rational roots of f, exact, sorted ascending.

    Rational root theorem on the primitive part: any root p/q in lowest
    terms has p | constant term and q | leading coefficient.  Candidates
    are confirmed with exact integer arithmetic (clearing denominators),
    never floating point.
    """
    if f.is_zero:
        raise ParameterError("every rational is a root of the zero polynomial")
    coeffs = list(f.coefficients)
    roots: set[Fraction] = set()
    # strip powers of x: x = 0 is a root iff the constant term vanishes
    shift = 0
    while coeffs[shift] == 0:
        shift += 1
    if shift:
        roots.add(Fraction(0))
        coeffs = coeffs[shift:]
    if len(coeffs) > 1:
        const, lead = coeffs[0], coeffs[-1]
        deg = len(coeffs) - 1
        for p in divisors(const, budget=budget):
            for q in divisors(lead, budget=budget):
                cand = Fraction(p, q)
                if cand.numerator != p:  # not in lowest terms, seen already
                    continue
                for num in (p, -p):
                    # exact check: sum a_i num^i q^(deg-i) == 0
                    acc = 0
                    power = 1
                    for i, a in enumerate(coeffs):
                        acc += a * power * q ** (deg - i)
                        power *= num
                    if acc == 0:
                        roots.add(Fraction(num, q))
    return sorted(roots)
