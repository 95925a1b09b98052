"""Integer helpers for the censuses: gcd, divisor enumeration, divisor counting.

Arbitrary-precision integers are Python ints; exact rationals are
fractions.Fraction throughout the package.  Divisor enumeration is plain trial
division up to sqrt(|n|): census inputs keep |n| polynomial in the box radius,
so nothing fancier is warranted.
"""

import math

from .errors import DomainError


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor; gcd(0, 0) = 0."""
    return math.gcd(a, b)


def divisors(n: int) -> list[int]:
    """All positive divisors of |n| in ascending order.  n must be nonzero."""
    if n == 0:
        raise DomainError("divisors of zero are undefined")
    n = abs(n)
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def divisor_count(n: int) -> int:
    """tau(|n|), computed from the prime factorization (independent of divisors())."""
    if n == 0:
        raise DomainError("divisor count of zero is undefined")
    n = abs(n)
    count = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            count *= e + 1
        p += 1 if p == 2 else 2
    if n > 1:
        count *= 2
    return count
