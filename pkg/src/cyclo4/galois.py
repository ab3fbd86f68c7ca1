"""Galois rings of characteristic 4 and their distinguished units.

GR(4**r, 4) is realized as Z4[X]/(f) for a monic degree-r modulus f whose
reduction mod 2 is irreducible over the two-element field (a basic
irreducible). The canonical modulus for a given r is the Graeffe lift of
the lexicographically smallest irreducible of degree r, which makes every
constructed ring, and hence every downstream value, reproducible.

For an odd prime p with r the order of 2 mod p, the unit group (of order
2**r * (2**r - 1)) contains elements of order p; ``find_gamma`` returns
such a beta together with gamma = 3*beta, a unit of order 2p satisfying
gamma**p = 3 = -1.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import f2
from .primes import factorize, require_odd_prime
from .ringpoly import RingPolynomial, Z4


class GaloisRing:
    """The ring Z4[X]/(f) for a monic basic irreducible f of degree r."""

    def __init__(self, modulus: RingPolynomial):
        if modulus.ring is not Z4:
            raise ValueError("modulus must be a polynomial over Z4")
        r = modulus.degree
        if not isinstance(r, int) or r < 1:
            raise ValueError("modulus must have positive degree")
        if modulus.coeffs[-1] != Z4.one:
            raise ValueError("modulus must be monic")
        mod2 = 0
        for i, c in enumerate(modulus.coeffs):
            if c.value % 2:
                mod2 |= 1 << i
        if not f2.is_irreducible(mod2):
            raise ValueError("modulus is not basic irreducible (reducible mod 2)")
        self.modulus = modulus
        self.r = r
        self._mod2 = mod2
        self._key = (r, tuple(c.value for c in modulus.coeffs))
        self._reduction = self._build_reduction()
        self.zero = GaloisRingElement(self, (0,) * r)
        self.one = GaloisRingElement(self, (1,) + (0,) * (r - 1))
        self.x = GaloisRingElement(self, tuple(1 if i == 1 else 0 for i in range(r)))
        if r == 1:
            self.x = GaloisRingElement(self, ((-self.modulus.coeffs[0].value) % 4,))

    def _build_reduction(self) -> np.ndarray:
        # row k = coefficient vector of X**(r+k) mod f, for k = 0..r-2
        r = self.r
        f_low = [c.value for c in self.modulus.coeffs[:r]]
        rows = []
        cur = [(-v) % 4 for v in f_low]  # X**r mod f
        rows.append(list(cur))
        for _ in range(r - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c - top * v) % 4 for c, v in zip(cur, f_low)]
            rows.append(list(cur))
        if r == 1:
            return np.zeros((0, 1), dtype=np.int64)
        return np.array(rows, dtype=np.int64)

    def element(self, coords) -> "GaloisRingElement":
        coords = [int(c) % 4 for c in coords]
        if len(coords) > self.r:
            raise ValueError("coordinate vector longer than the extension degree")
        coords += [0] * (self.r - len(coords))
        return GaloisRingElement(self, tuple(coords))

    def embed(self, n: int) -> "GaloisRingElement":
        """Canonical embedding of Z4: the constant with value n mod 4."""
        return self.element([int(n) % 4])

    def _mul_coords(self, a: tuple, b: tuple) -> tuple:
        t = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if len(t) > self.r:
            low = t[: self.r].copy()
            low += t[self.r :] @ self._reduction[: len(t) - self.r]
            t = low
        else:
            t = np.pad(t, (0, self.r - len(t)))
        return tuple(int(v) for v in t % 4)

    @property
    def unit_group_order(self) -> int:
        return (1 << self.r) * ((1 << self.r) - 1)

    def __eq__(self, other):
        return isinstance(other, GaloisRing) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GR(4^{self.r},4)"


class GaloisRingElement:
    """A residue class in GR(4**r, 4), stored as its degree < r representative."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: GaloisRing, coords: tuple):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("GaloisRingElement is immutable")

    def _check_ring(self, other):
        if not isinstance(other, GaloisRingElement):
            raise TypeError(f"expected GaloisRingElement, got {type(other).__name__}")
        if self.ring != other.ring:
            raise ValueError("elements of different rings")

    def is_unit(self) -> bool:
        """Units are exactly the elements with a nonzero mod-2 reduction."""
        return any(c % 2 for c in self.coords)

    def __add__(self, other):
        self._check_ring(other)
        return GaloisRingElement(
            self.ring, tuple((a + b) % 4 for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        self._check_ring(other)
        return GaloisRingElement(
            self.ring, tuple((a - b) % 4 for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self):
        return GaloisRingElement(self.ring, tuple((-a) % 4 for a in self.coords))

    def __mul__(self, other):
        self._check_ring(other)
        return GaloisRingElement(self.ring, self.ring._mul_coords(self.coords, other.coords))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "GaloisRingElement":
        """Unit inverse: invert mod 2 in the residue field, then lift."""
        if not self.is_unit():
            raise ZeroDivisionError("not a unit in the Galois ring")
        ring = self.ring
        a2 = 0
        for i, c in enumerate(self.coords):
            if c % 2:
                a2 |= 1 << i
        b2 = f2.inverse_mod(a2, ring._mod2)
        b1 = ring.element([(b2 >> i) & 1 for i in range(ring.r)])
        b = b1 * (ring.embed(2) - self * b1)
        if self * b != ring.one:
            raise RuntimeError("internal: unit inversion failed")
        return b

    def as_residue(self):
        """The Z4 value of an embedded constant; rejects proper extension elements."""
        if any(self.coords[1:]):
            raise ValueError("element does not lie in the embedded Z4")
        return Z4.embed(self.coords[0])

    @property
    def is_embedded_constant(self) -> bool:
        return not any(self.coords[1:])

    def __eq__(self, other):
        return (
            isinstance(other, GaloisRingElement)
            and self.ring == other.ring
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.ring._key, self.coords))

    def __str__(self):
        if not any(self.coords):
            return "0"
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                sym = "w" if i == 1 else f"w^{i}"
                parts.append(sym if c == 1 else f"{c}*{sym}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self} in {self.ring!r}>"


def ord2_mod_p(p: int) -> int:
    """The least r >= 1 with 2**r = 1 mod p; divides p - 1."""
    require_odd_prime(p)
    r, t = 1, 2 % p
    while t != 1:
        t = t * 2 % p
        r += 1
    return r


def lift_irreducible(h: int) -> RingPolynomial:
    """Graeffe lift of an irreducible over the two-element field.

    For h of degree r the lift f is the monic polynomial over Z4 with
    f(X**2) = (-1)**r * h(X) * h(-X); it reduces to h mod 2 and divides
    X**(2**r - 1) - 1 in Z4[X], so its roots are units of order dividing
    2**r - 1. One step suffices in characteristic 4.

    The argument is a bitmask (bit i = coefficient of X**i).
    """
    if not f2.is_irreducible(h):
        raise ValueError("polynomial is reducible over the two-element field")
    r = f2.degree(h)
    bits = [(h >> i) & 1 for i in range(r + 1)]
    hz4 = RingPolynomial.from_ints(Z4, bits)
    hneg = RingPolynomial.from_ints(
        Z4, [b if i % 2 == 0 else -b for i, b in enumerate(bits)]
    )
    prod = hz4 * hneg
    if r % 2:
        prod = -prod
    if any(c.value for c in prod.coeffs[1::2]):
        raise RuntimeError("internal: Graeffe product has odd-degree terms")
    f = RingPolynomial(Z4, prod.coeffs[0::2])
    if f.degree != r or f.coeffs[-1] != Z4.one:
        raise RuntimeError("internal: Graeffe lift is not monic of the right degree")
    return f


@lru_cache(maxsize=None)
def construct_ring(p: int) -> GaloisRing:
    """The canonical GR(4**r, 4) for an odd prime p, r = ord of 2 mod p."""
    r = ord2_mod_p(p)
    ring = GaloisRing(lift_irreducible(f2.lex_smallest_irreducible(r)))
    # Teichmüller check on the lift: the class of X has order dividing 2**r - 1.
    if ring.x ** ((1 << r) - 1) != ring.one:
        raise RuntimeError("internal: modulus is not a Graeffe lift")
    return ring


def multiplicative_order(x: GaloisRingElement, bound: int, factors=None) -> int:
    """The least k >= 1 with x**k = 1, given a multiple ``bound`` of the order.

    The bound is factored by trial division unless a factorization
    {prime: exponent} is supplied; bounds above 2**64 require one.
    """
    if not x.is_unit():
        raise ValueError("order is defined for units only")
    if bound < 1:
        raise ValueError("bound must be positive")
    if factors is None:
        if bound > 1 << 64:
            raise ValueError("bound too large to factor; supply its factorization")
        factors = factorize(bound)
    if x ** bound != x.ring.one:
        raise ValueError("order does not divide the supplied bound")
    k = bound
    for q in factors:
        while k % q == 0 and x ** (k // q) == x.ring.one:
            k //= q
    return k


def find_gamma(ring: GaloisRing, p: int) -> tuple[GaloisRingElement, GaloisRingElement]:
    """A unit beta of order exactly p and gamma = 3*beta of order exactly 2p.

    Candidates u = X, X+1, X+2, ... (base-4 coordinate counter, non-units
    skipped) are raised to the power |unit group| / p; the first result
    distinct from 1 has order p since p is prime. Determinism of the scan
    keeps every derived table reproducible.
    """
    require_odd_prime(p)
    r = ring.r
    if ((1 << r) - 1) % p != 0:
        raise ValueError(f"p={p} does not divide 2**{r} - 1; wrong ring for this p")
    exponent = ring.unit_group_order // p
    beta = None
    k = 4  # coords of X in the base-4 counter
    while k < 1 << (2 * r):
        coords = []
        t = k
        while t:
            coords.append(t % 4)
            t //= 4
        if any(c % 2 for c in coords):
            cand = ring.element(coords)
            b = cand ** exponent
            if b != ring.one:
                beta = b
                break
        k += 1
    if beta is None:
        raise RuntimeError("internal: no unit of order p found; ring is inconsistent")
    if beta ** p != ring.one:
        raise RuntimeError("internal: candidate power does not have order p")
    gamma = ring.embed(3) * beta
    if gamma ** p != ring.embed(3):
        raise RuntimeError("internal: gamma**p != -1")
    return beta, gamma


@lru_cache(maxsize=128)
def powers_of(x: GaloisRingElement, count: int) -> tuple:
    """(x**0, x**1, ..., x**(count-1)), built incrementally and cached."""
    out = [x.ring.one]
    for _ in range(count - 1):
        out.append(out[-1] * x)
    return tuple(out)
