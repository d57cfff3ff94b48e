"""Arithmetic over Z2[z].

Polynomials are handled as integers internally (bit i = coefficient of
z^i); the public functions take and return :class:`BinaryPolynomial`.
"""

from functools import lru_cache

from .types import MAX_DEGREE, BinaryPolynomial, Gf2Error


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise Gf2Error("zero modulus")
    m = a.bit_length() - 1
    n = b.bit_length() - 1
    if m < n:
        return 0, a
    b <<= m - n
    q = 0
    for i in range(m - n + 1):
        q <<= 1
        if (a >> (m - i)) & 1:
            a ^= b
            q ^= 1
        b >>= 1
    return q, a


def _mod(a: int, b: int) -> int:
    return _divmod(a, b)[1]


def _mulmod(a: int, b: int, q: int) -> int:
    return _mod(_mul(a, b), q)


def _powmod(a: int, e: int, q: int) -> int:
    result = _mod(1, q)
    base = _mod(a, q)
    while e:
        if e & 1:
            result = _mulmod(result, base, q)
        base = _mulmod(base, base, q)
        e >>= 1
    return result


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _is_irreducible(q: int) -> bool:
    # Ben-Or: q has no factor of degree i for any i <= deg(q)/2.
    d = q.bit_length() - 1
    x = 0b10
    power = x
    for _ in range(d // 2):
        power = _mulmod(power, power, q)
        if _gcd(power ^ x, q) != 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def _has_order(g: int, order: int, q: int) -> bool:
    """True if g has multiplicative order exactly ``order`` modulo q."""
    if _powmod(g, order, q) != 1:
        return False
    return all(_powmod(g, order // p, q) != 1 for p in _prime_factors(order))


def poly_mul_mod(
    a: BinaryPolynomial, b: BinaryPolynomial, q: BinaryPolynomial
) -> BinaryPolynomial:
    """Return (a * b) mod q over Z2."""
    if q.is_zero():
        raise Gf2Error("zero modulus")
    return BinaryPolynomial(bits=_mulmod(a.bits, b.bits, q.bits))


def poly_divmod(
    a: BinaryPolynomial, b: BinaryPolynomial
) -> tuple[BinaryPolynomial, BinaryPolynomial]:
    quotient, remainder = _divmod(a.bits, b.bits)
    return BinaryPolynomial(bits=quotient), BinaryPolynomial(bits=remainder)


def poly_gcd(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    """Greatest common divisor; over Z2 every nonzero polynomial is monic."""
    if a.is_zero() and b.is_zero():
        raise Gf2Error("gcd of two zero polynomials is undefined")
    return BinaryPolynomial(bits=_gcd(a.bits, b.bits))


def is_irreducible(q: BinaryPolynomial) -> bool:
    """True iff q has no nontrivial factor over Z2."""
    if q.bits < 2:
        raise Gf2Error(f"Irreducibility is undefined for constant polynomial {q}")
    return _is_irreducible(q.bits)


def is_primitive(q: BinaryPolynomial) -> bool:
    """True iff q is irreducible and z generates the unit group modulo q."""
    if not is_irreducible(q):
        return False
    if _mod(0b10, q.bits) == 0:
        return False
    d = q.bits.bit_length() - 1
    return _has_order(0b10, (1 << d) - 1, q.bits)


@lru_cache(maxsize=None)
def default_modulus(k: int) -> BinaryPolynomial:
    """Smallest irreducible polynomial of degree k under the integer encoding."""
    if not 1 <= k <= MAX_DEGREE:
        raise Gf2Error(f"Modulus degree must be in [1, {MAX_DEGREE}], got {k}")
    for bits in range(1 << k, 1 << (k + 1)):
        if _is_irreducible(bits):
            return BinaryPolynomial(bits=bits)
    raise Gf2Error(f"No irreducible polynomial of degree {k}")  # pragma: no cover


@lru_cache(maxsize=None)
def primitive_polynomials(count: int) -> tuple[BinaryPolynomial, ...]:
    """First ``count`` primitive polynomials, by degree then integer encoding."""
    found: list[BinaryPolynomial] = []
    degree = 1
    while len(found) < count:
        if degree > MAX_DEGREE:
            raise Gf2Error(f"Ran out of primitive polynomials of degree <= {MAX_DEGREE}")
        for bits in range((1 << degree) + 1, 1 << (degree + 1), 2):
            candidate = BinaryPolynomial(bits=bits)
            if is_primitive(candidate):
                found.append(candidate)
                if len(found) == count:
                    break
        degree += 1
    return tuple(found)


def unit_group_generator(q: BinaryPolynomial) -> int:
    """Integer encoding of a generator of the units modulo an irreducible q."""
    if not is_irreducible(q):
        raise Gf2Error(f"Modulus {q} is not irreducible; its unit group is not a field's")
    d = q.bits.bit_length() - 1
    order = (1 << d) - 1
    if order == 1:
        return 1
    for g in range(2, 1 << d):
        if _has_order(g, order, q.bits):
            return g
    raise Gf2Error(f"No generator found modulo {q}")  # pragma: no cover


def unit_group_elements(q: BinaryPolynomial) -> list[int]:
    """g^0, g^1, ..., g^(2^d - 2) modulo an irreducible q of degree d, as integers."""
    g = unit_group_generator(q)
    order = (1 << (q.bits.bit_length() - 1)) - 1
    elements = [1]
    for _ in range(order - 1):
        elements.append(_mulmod(elements[-1], g, q.bits))
    return elements
