"""Shared integer helpers: primality, factorization, divisors, orders mod n."""

from math import isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def primes_upto(n: int) -> list[int]:
    """All primes p <= n, ascending."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, n + 1) if sieve[p]]


def smallest_prime_factors(n: int) -> list[int]:
    """spf[m] = least prime factor of m, for 2 <= m <= n (spf[0] = spf[1] = 0)."""
    spf = list(range(n + 1))
    if n >= 1:
        spf[1] = 0
    if n >= 0:
        spf[0] = 0
    for p in range(2, isqrt(n) + 1):
        if spf[p] == p:
            for m in range(p * p, n + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {p: exponent}; n must be nonzero."""
    if n == 0:
        raise ValueError("cannot factorize zero")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("divisors defined for positive integers")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def valuation(n: int, p: int) -> int:
    """Largest k with p^k | n; n must be nonzero."""
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/nZ)*; requires gcd(a, n) = 1."""
    a %= n
    if a == 0:
        raise ValueError("a must be invertible mod n")
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
        if k > n:
            raise ValueError("a is not invertible mod n")
    return k
