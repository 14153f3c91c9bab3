"""Small integer helpers."""

from __future__ import annotations

from math import prod


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` as ``{prime: exponent}``."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def pi_part(n: int, primes) -> int:
    return prod(p_part(n, p) for p in set(primes))


def is_prime_power(n: int) -> bool:
    return n > 1 and len(factorize(n)) == 1


def square_divisor(n: int) -> int | None:
    """Return some ``p*p`` dividing ``n``, or None when ``n`` is square free."""
    for p, e in factorize(n).items():
        if e > 1:
            return p * p
    return None
