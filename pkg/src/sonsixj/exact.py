"""Exact arithmetic kernel: gamma values, Pochhammer symbols, surds, factored products.

Every quantity in this package is exact.  The value domain is built from three layers:

* ``Fraction`` for plain rationals (half-integers are Fractions with denominator <= 2),
* ``GammaExact`` for rationals times an integer power of sqrt(pi),
* ``SurdValue`` for rationals times the square root of a squarefree integer.

Gamma evaluation is exact at integer and half-integer arguments.  Ratios of gammas at
nonpositive integers are resolved by a common epsilon shift of every argument; see
``gamma_ratio_product``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction
HalfInt = Fraction


class PoleError(ArithmeticError):
    """A gamma factor is evaluated at a nonpositive integer with no cancelling partner."""


class ResidualSqrtPiError(ArithmeticError):
    """A value that must be rational retained a nonzero power of sqrt(pi)."""


class RadicandMismatchError(ArithmeticError):
    """Surd addition was attempted across different radicands."""


def is_half_integer(x: Fraction | int) -> bool:
    """True when 2*x is an integer."""
    return (2 * Fraction(x)).denominator == 1


def twice(x: Fraction | int) -> int:
    """The integer 2*x of a half-integer value."""
    d = 2 * Fraction(x)
    if d.denominator != 1:
        raise ValueError(f"not a half-integer: {x}")
    return int(d)


def as_integer(x: Fraction | int) -> int:
    """The value as a plain int; raises if it is not integral."""
    f = Fraction(x)
    if f.denominator != 1:
        raise ValueError(f"not an integer: {x}")
    return int(f)


def is_nonpositive_integer(x: Fraction | int) -> bool:
    f = Fraction(x)
    return f.denominator == 1 and f <= 0


# ---------------------------------------------------------------------------
# gamma at half-integer arguments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GammaExact:
    """Exact value coeff * sqrt(pi)**sqrtpi_exp with rational coeff."""

    coeff: Fraction
    sqrtpi_exp: int = 0

    def __post_init__(self) -> None:
        if self.coeff == 0:
            object.__setattr__(self, "sqrtpi_exp", 0)

    def __mul__(self, other: "GammaExact | Fraction | int") -> "GammaExact":
        if isinstance(other, GammaExact):
            return GammaExact(self.coeff * other.coeff, self.sqrtpi_exp + other.sqrtpi_exp)
        return GammaExact(self.coeff * other, self.sqrtpi_exp)

    __rmul__ = __mul__

    def __truediv__(self, other: "GammaExact | Fraction | int") -> "GammaExact":
        if isinstance(other, GammaExact):
            if other.coeff == 0:
                raise ZeroDivisionError("division by exact zero")
            return GammaExact(self.coeff / other.coeff, self.sqrtpi_exp - other.sqrtpi_exp)
        return GammaExact(self.coeff / other, self.sqrtpi_exp)

    def __neg__(self) -> "GammaExact":
        return GammaExact(-self.coeff, self.sqrtpi_exp)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def to_rational(self) -> Fraction:
        """The value as a Fraction; raises if sqrt(pi) did not cancel."""
        if self.coeff != 0 and self.sqrtpi_exp != 0:
            raise ResidualSqrtPiError(f"residual sqrt(pi)**{self.sqrtpi_exp}")
        return self.coeff


@lru_cache(maxsize=None)
def _odd_factorial_ratio(m: int) -> Fraction:
    """(2m)! / (4**m m!) for m >= 0, the rational part of Gamma(m + 1/2)."""
    return Fraction(math.factorial(2 * m), 4**m * math.factorial(m))


def gamma_exact(x: Fraction | int) -> GammaExact:
    """Gamma(x) for half-integer x, exact.

    Integer x >= 1 gives (x-1)!.  Half-odd x gives a rational multiple of sqrt(pi),
    positive or negative argument alike.  Nonpositive integers raise PoleError.
    """
    x = Fraction(x)
    if x.denominator == 1:
        n = int(x)
        if n <= 0:
            raise PoleError(f"gamma pole at {n}")
        return GammaExact(Fraction(math.factorial(n - 1)))
    if x.denominator != 2:
        raise ValueError(f"gamma_exact needs a half-integer argument, got {x}")
    m = (x - Fraction(1, 2))
    m = int(m)
    if m >= 0:
        return GammaExact(_odd_factorial_ratio(m), 1)
    # Gamma(1/2 - k) = (-4)**k k! / (2k)! * sqrt(pi) with k = -m
    k = -m
    coeff = Fraction((-4) ** k * math.factorial(k), math.factorial(2 * k))
    return GammaExact(coeff, 1)


def gamma_ratio_product(
    numerators: "list[Fraction | int] | tuple",
    denominators: "list[Fraction | int] | tuple",
) -> GammaExact:
    """prod Gamma(num_i) / prod Gamma(den_j) with one common epsilon shift.

    Every argument is read as arg + eps for the same eps -> 0.  Nonpositive-integer
    arguments are poles: a surplus of them in the denominator makes the ratio an exact 0,
    a surplus in the numerator raises PoleError, and equal counts pair off, each pair
    contributing (-1)**(x - y) * y! / x! for numerator argument -x against denominator
    argument -y.  The result does not depend on how the poles are paired.
    """
    num_poles: list[int] = []
    den_poles: list[int] = []
    value = GammaExact(Fraction(1))
    for a in numerators:
        f = Fraction(a)
        if is_nonpositive_integer(f):
            num_poles.append(-int(f))
        else:
            value = value * gamma_exact(f)
    for a in denominators:
        f = Fraction(a)
        if is_nonpositive_integer(f):
            den_poles.append(-int(f))
        else:
            value = value / gamma_exact(f)
    if len(num_poles) > len(den_poles):
        raise PoleError(
            f"unpaired gamma poles in numerator: {sorted(-x for x in num_poles)}"
        )
    if len(num_poles) < len(den_poles):
        return GammaExact(Fraction(0))
    for x, y in zip(sorted(num_poles), sorted(den_poles)):
        sign = -1 if (x - y) % 2 else 1
        value = value * Fraction(sign * math.factorial(y), math.factorial(x))
    return value


def pochhammer(a: Fraction | int, k: int) -> Fraction:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), exact; (a)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


# ---------------------------------------------------------------------------
# integer-argument fast paths
# ---------------------------------------------------------------------------

_FACTORIALS: list[int] = [1]


def factorial(n: int) -> int:
    """n! from a growing shared table."""
    if n < 0:
        raise ValueError(f"factorial of negative {n}")
    table = _FACTORIALS
    while len(table) <= n:
        table.append(table[-1] * len(table))
    return table[n]


def poch_int(a: int, k: int) -> int:
    """(a)_k for integer a as an exact integer, 0 when the range crosses zero."""
    if k < 0:
        raise ValueError("poch_int needs k >= 0")
    if k == 0:
        return 1
    if a > 0:
        return factorial(a + k - 1) // factorial(a - 1)
    if a + k - 1 >= 0:
        return 0
    # all factors negative: (a)_k = (-1)**k (-a)! / (-a-k)!
    v = factorial(-a) // factorial(-a - k)
    return -v if k % 2 else v


_ODD_PRODUCTS: list[int] = [1]


def _odd_product(t: int) -> int:
    """1 * 3 * 5 * ... * (2t - 1)."""
    table = _ODD_PRODUCTS
    while len(table) <= t:
        table.append(table[-1] * (2 * len(table) - 1))
    return table[t]


def poch_half(twice_a: int, k: int) -> Fraction:
    """(a)_k for a = twice_a / 2 with twice_a odd; exact and never zero."""
    if twice_a % 2 == 0:
        raise ValueError("poch_half needs an odd doubled argument")
    if k < 0:
        raise ValueError("poch_half needs k >= 0")
    num = 1
    v = twice_a
    for _ in range(k):
        num *= v
        v += 2
    return Fraction(num, 2**k)


def binomial(n: int, k: int) -> int:
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# squarefree surds
# ---------------------------------------------------------------------------

def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1; trial division first, Pollard rho for survivors."""
    if n < 1:
        raise ValueError("factor_int needs n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    inc = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < 100000:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += inc[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def squarefree_decompose(n: int) -> tuple[int, int]:
    """n = s**2 * r with r squarefree; returns (s, r) for n >= 1."""
    s, r = 1, 1
    for p, e in factor_int(n).items():
        s *= p ** (e // 2)
        if e % 2:
            r *= p
    return s, r


@dataclass(frozen=True)
class SurdValue:
    """coeff * sqrt(radicand) in normal form.

    radicand is a squarefree positive integer (as Fraction); coeff = 0 forces radicand 1.
    Equality of normal forms is equality of values.
    """

    coeff: Fraction
    radicand: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.coeff == 0 and self.radicand != 1:
            object.__setattr__(self, "radicand", Fraction(1))

    @staticmethod
    def zero() -> "SurdValue":
        return SurdValue(Fraction(0))

    @staticmethod
    def of_rational(q: Fraction | int) -> "SurdValue":
        return SurdValue(Fraction(q))

    def is_zero(self) -> bool:
        return self.coeff == 0

    def is_rational(self) -> bool:
        return self.radicand == 1

    def to_rational(self) -> Fraction:
        if self.coeff != 0 and self.radicand != 1:
            raise ValueError(f"not rational: {self}")
        return self.coeff

    def __neg__(self) -> "SurdValue":
        return SurdValue(-self.coeff, self.radicand)

    def __add__(self, other: "SurdValue") -> "SurdValue":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.radicand != other.radicand:
            raise RadicandMismatchError(
                f"cannot add sqrt({self.radicand}) to sqrt({other.radicand})"
            )
        return SurdValue(self.coeff + other.coeff, self.radicand)

    def __sub__(self, other: "SurdValue") -> "SurdValue":
        return self + (-other)

    def __mul__(self, other: "SurdValue | Fraction | int") -> "SurdValue":
        if not isinstance(other, SurdValue):
            return SurdValue(self.coeff * other, self.radicand) if other != 0 else SurdValue.zero()
        if self.is_zero() or other.is_zero():
            return SurdValue.zero()
        r1, r2 = int(self.radicand), int(other.radicand)
        g = math.gcd(r1, r2)
        # both squarefree, so r1 r2 = g**2 * (r1/g)(r2/g) with squarefree cofactor
        return SurdValue(self.coeff * other.coeff * g, Fraction((r1 // g) * (r2 // g)))

    __rmul__ = __mul__

    def __truediv__(self, other: "SurdValue | Fraction | int") -> "SurdValue":
        if not isinstance(other, SurdValue):
            return SurdValue(self.coeff / other, self.radicand)
        if other.is_zero():
            raise ZeroDivisionError("division by exact zero surd")
        # 1 / (c sqrt(r)) = (1 / (c r)) sqrt(r)
        inv = SurdValue(1 / (other.coeff * other.radicand), other.radicand)
        return self * inv

    def __abs__(self) -> "SurdValue":
        return SurdValue(abs(self.coeff), self.radicand)

    def sign(self) -> int:
        c = self.coeff
        return 0 if c == 0 else (1 if c > 0 else -1)

    def square(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    def __float__(self) -> float:
        return float(self.coeff) * math.sqrt(float(self.radicand))

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coeff)
        return f"{self.coeff}*sqrt({self.radicand})"


def surd_normalize(coeff: Fraction | int, radicand: Fraction | int) -> SurdValue:
    """Normal form of coeff * sqrt(radicand) for rational radicand >= 0.

    The radicand is reduced to a squarefree positive integer; square factors and the
    radicand's denominator move into the coefficient.
    """
    coeff = Fraction(coeff)
    radicand = Fraction(radicand)
    if radicand < 0:
        raise ValueError("negative radicand")
    if coeff == 0 or radicand == 0:
        return SurdValue.zero()
    # sqrt(p/q) = sqrt(pq) / q
    p, q = radicand.numerator, radicand.denominator
    s, r = squarefree_decompose(p * q)
    return SurdValue(coeff * Fraction(s, q), Fraction(r))


# ---------------------------------------------------------------------------
# factored products: exact products of gammas kept in prime-exponent form
# ---------------------------------------------------------------------------

_PRIMES: list[int] = [2, 3, 5, 7, 11, 13]


def _extend_primes(limit: int) -> None:
    primes = _PRIMES
    while primes[-1] < limit:
        top = primes[-1] + 2
        while True:
            if all(top % p for p in primes if p * p <= top):
                primes.append(top)
                break
            top += 2


def primes_up_to(limit: int) -> list[int]:
    if limit >= 2:
        _extend_primes(limit)
    return [p for p in _PRIMES if p <= limit]


@lru_cache(maxsize=4096)
def _factorial_exponents(m: int) -> tuple[tuple[int, int], ...]:
    """Prime exponent vector of m! via Legendre's formula."""
    out = []
    for p in primes_up_to(m) if m >= 2 else []:
        e, q = 0, m
        while q:
            q //= p
            e += q
        out.append((p, e))
    return tuple(out)


class FactoredProduct:
    """A positive-or-signed exact product held as prime exponents times sqrt(pi)**pi_half.

    Supports multiplying in factorials, integers, rationals and half-integer gamma
    values with positive or negative exponents, an exact square root, and conversion
    to Fraction / SurdValue.  Exponent bookkeeping avoids ever factoring a large value.
    """

    __slots__ = ("exps", "pi_half", "sign", "_zero")

    def __init__(self) -> None:
        self.exps: dict[int, int] = {}
        self.pi_half = 0
        self.sign = 1
        self._zero = False

    def copy(self) -> "FactoredProduct":
        out = FactoredProduct()
        out.exps = dict(self.exps)
        out.pi_half = self.pi_half
        out.sign = self.sign
        out._zero = self._zero
        return out

    def is_zero(self) -> bool:
        return self._zero

    def set_zero(self) -> "FactoredProduct":
        self._zero = True
        return self

    def _bump(self, p: int, e: int) -> None:
        newe = self.exps.get(p, 0) + e
        if newe:
            self.exps[p] = newe
        else:
            self.exps.pop(p, None)

    def mul_int(self, v: int, e: int = 1) -> "FactoredProduct":
        """Multiply by v**e for a nonzero integer v (factored by trial division)."""
        if self._zero:
            return self
        if v == 0:
            if e <= 0:
                raise ZeroDivisionError("zero with nonpositive exponent")
            return self.set_zero()
        if v < 0:
            if e % 2:
                self.sign = -self.sign
            v = -v
        for p, k in factor_int(v).items():
            self._bump(p, k * e)
        return self

    def mul_fraction(self, q: Fraction, e: int = 1) -> "FactoredProduct":
        if self._zero:
            return self
        self.mul_int(q.numerator, e)
        if not self._zero:
            self.mul_int(q.denominator, -e)
        return self

    def mul_factorial(self, m: int, e: int = 1) -> "FactoredProduct":
        if self._zero:
            return self
        if m < 0:
            raise ValueError(f"factorial of negative {m}")
        for p, k in _factorial_exponents(m):
            self._bump(p, k * e)
        return self

    def mul_gamma(self, x: Fraction | int, e: int = 1) -> "FactoredProduct":
        """Multiply by Gamma(x)**e at half-integer x."""
        if self._zero:
            return self
        x = Fraction(x)
        if x.denominator == 1:
            n = int(x)
            if n <= 0:
                raise PoleError(f"gamma pole at {n}")
            return self.mul_factorial(n - 1, e)
        if x.denominator != 2:
            raise ValueError(f"gamma argument must be half-integer, got {x}")
        m = int(x - Fraction(1, 2))
        if m >= 0:
            # Gamma(m + 1/2) = (2m)! / (4**m m!) sqrt(pi)
            self.mul_factorial(2 * m, e)
            self.mul_factorial(m, -e)
            self._bump(2, -2 * m * e)
        else:
            k = -m
            # Gamma(1/2 - k) = (-4)**k k! / (2k)! sqrt(pi)
            if (k * e) % 2:
                self.sign = -self.sign
            self._bump(2, 2 * k * e)
            self.mul_factorial(k, e)
            self.mul_factorial(2 * k, -e)
        self.pi_half += e
        return self

    def mul(self, other: "FactoredProduct", e: int = 1) -> "FactoredProduct":
        if self._zero:
            return self
        if other._zero:
            if e <= 0:
                raise ZeroDivisionError("zero factored product with nonpositive exponent")
            return self.set_zero()
        for p, k in other.exps.items():
            self._bump(p, k * e)
        self.pi_half += other.pi_half * e
        if e % 2 and other.sign < 0:
            self.sign = -self.sign
        return self

    def to_fraction(self) -> Fraction:
        if self._zero:
            return Fraction(0)
        if self.pi_half != 0:
            raise ResidualSqrtPiError(f"residual sqrt(pi)**{self.pi_half}")
        num = den = 1
        for p, e in self.exps.items():
            if e > 0:
                num *= p**e
            else:
                den *= p**-e
        return Fraction(self.sign * num, den)

    def to_gamma_exact(self) -> GammaExact:
        if self._zero:
            return GammaExact(Fraction(0))
        num = den = 1
        for p, e in self.exps.items():
            if e > 0:
                num *= p**e
            else:
                den *= p**-e
        return GammaExact(Fraction(self.sign * num, den), self.pi_half)

    def sqrt_surd(self) -> SurdValue:
        """Exact square root as a SurdValue; requires a nonnegative pi-free value."""
        if self._zero:
            return SurdValue.zero()
        if self.pi_half != 0:
            raise ResidualSqrtPiError(f"residual sqrt(pi)**{self.pi_half} under sqrt")
        if self.sign < 0:
            raise ValueError("square root of a negative factored product")
        cnum = cden = 1
        rad = 1
        for p, e in sorted(self.exps.items()):
            if e % 2:
                # p**e = p**(e-1) * p, the stray p joins the radicand
                rad *= p
                e -= 1
            half = e // 2
            if half > 0:
                cnum *= p**half
            elif half < 0:
                cden *= p**-half
        return SurdValue(Fraction(cnum, cden), Fraction(rad))
