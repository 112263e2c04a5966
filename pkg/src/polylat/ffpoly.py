"""Exact arithmetic for polynomials over the prime field Z_b.

Polynomials are kept in canonical form: a tuple of coefficient digits in
[0, b), lowest degree first, with no trailing zeros (the zero polynomial is
the empty tuple).  Every polynomial also has an integer encoding obtained by
reading its digits as a base-b integer, constant term least significant,
e.g. x^4 + x + 1 over Z_2 has encoding 19 and digit string "10011".

The module provides modular multiplication, irreducibility and primitivity
tests (exact, by trial division and order computation), deterministic
modulus discovery, formal Laurent expansion of w(x)/p(x), the fixed-point
map of the first m Laurent digits, and discrete-log tables for a primitive
element.  Tables of size b^m are capped by ``SIZE_LIMIT_LOG2``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

# Cap on table/point-set sizes: require m*log2(b) <= SIZE_LIMIT_LOG2.
SIZE_LIMIT_LOG2 = 26

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality check for small n."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = 49
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_size(b: int, m: int, limit: int | None = None) -> None:
    """Raise if b^m exceeds the configured size cap."""
    lim = SIZE_LIMIT_LOG2 if limit is None else limit
    if m * np.log2(b) > lim + 1e-9:
        raise ValueError(
            f"b^m = {b}^{m} exceeds the size cap 2^{lim}; "
            "raise polylat.ffpoly.SIZE_LIMIT_LOG2 to override")


def _canon(digits) -> tuple:
    out = list(digits)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Poly:
    """Immutable polynomial over Z_b (b prime)."""

    __slots__ = ("base", "coeffs")

    def __init__(self, base: int, coeffs=()):
        if not is_prime(base):
            raise ValueError(f"base {base} is not prime")
        coeffs = _canon(coeffs)
        for c in coeffs:
            if not 0 <= c < base:
                raise ValueError(f"coefficient {c} out of range [0, {base})")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @classmethod
    def from_encoding(cls, base: int, encoding: int) -> "Poly":
        """Polynomial whose base-b digits are the digits of ``encoding``."""
        if encoding < 0:
            raise ValueError("encoding must be nonnegative")
        digits = []
        while encoding:
            encoding, r = divmod(encoding, base)
            digits.append(r)
        return cls(base, digits)

    @classmethod
    def x(cls, base: int) -> "Poly":
        return cls(base, (0, 1))

    @classmethod
    def one(cls, base: int) -> "Poly":
        return cls(base, (1,))

    @classmethod
    def parse(cls, base: int, text: str) -> "Poly":
        """Parse a digit string (most significant first), falling back to a
        decimal integer encoding.

        A token whose characters are all valid base-b digits is read as a
        digit string; anything else must be a decimal encoding.
        """
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial text")
        if all(ch.isdigit() and int(ch) < base for ch in text):
            return cls(base, tuple(int(ch) for ch in reversed(text)))
        if text.isdigit():
            return cls.from_encoding(base, int(text))
        raise ValueError(f"cannot parse polynomial {text!r} in base {base}")

    @property
    def encoding(self) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.base + c
        return v

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def digit_string(self) -> str:
        if not self.coeffs:
            return "0"
        return "".join(str(c) for c in reversed(self.coeffs))

    def _like(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.base != self.base:
            raise ValueError(f"base mismatch: {self.base} vs {other.base}")

    def __add__(self, other: "Poly") -> "Poly":
        self._like(other)
        return Poly(self.base, _add(self.coeffs, other.coeffs, self.base))

    def __sub__(self, other: "Poly") -> "Poly":
        self._like(other)
        neg = tuple((-c) % self.base for c in other.coeffs)
        return Poly(self.base, _add(self.coeffs, neg, self.base))

    def __mul__(self, other: "Poly") -> "Poly":
        self._like(other)
        return Poly(self.base, _mul(self.coeffs, other.coeffs, self.base))

    def __divmod__(self, other: "Poly"):
        self._like(other)
        q, r = _divmod(self.coeffs, other.coeffs, self.base)
        return Poly(self.base, q), Poly(self.base, r)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and other.base == self.base
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.base, self.coeffs))

    def __repr__(self):
        return f"Poly(base={self.base}, '{self.digit_string()}')"


def _add(a: tuple, c: tuple, b: int) -> tuple:
    n = max(len(a), len(c))
    a = a + (0,) * (n - len(a))
    c = c + (0,) * (n - len(c))
    return _canon((x + y) % b for x, y in zip(a, c))


def _mul(a: tuple, c: tuple, b: int) -> tuple:
    if not a or not c:
        return ()
    out = [0] * (len(a) + len(c) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, cj in enumerate(c):
                out[i + j] = (out[i + j] + ai * cj) % b
    return _canon(out)


def _divmod(a: tuple, p: tuple, b: int):
    if not p:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    m = len(p) - 1
    lc_inv = pow(p[-1], b - 2, b)
    q = [0] * max(0, len(a) - m)
    while len(a) - 1 >= m and a:
        if a[-1] == 0:
            a.pop()
            continue
        d = len(a) - 1 - m
        f = (a[-1] * lc_inv) % b
        q[d] = f
        for i, pi in enumerate(p):
            a[d + i] = (a[d + i] - f * pi) % b
        while a and a[-1] == 0:
            a.pop()
    return _canon(q), _canon(a)


@dataclass(frozen=True)
class Modulus:
    """An irreducible polynomial p of degree m, the rule's modulus."""

    p: Poly
    primitive: bool = False

    def __post_init__(self):
        if self.p.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if not is_irreducible(self.p):
            raise ValueError(f"{self.p!r} is not irreducible")
        if self.primitive and not is_primitive(self.p, Poly.x(self.p.base)):
            raise ValueError(f"x is not a primitive element mod {self.p!r}")

    @property
    def b(self) -> int:
        return self.p.base

    @property
    def m(self) -> int:
        return self.p.degree

    @property
    def n_points(self) -> int:
        return self.b ** self.m


def poly_mul_mod(a: Poly, c: Poly, p: Modulus) -> Poly:
    """a*c reduced mod p(x); result has degree < m."""
    if a.base != p.b or c.base != p.b:
        raise ValueError("base mismatch between operands and modulus")
    return (a * c) % p.p


def poly_pow_mod(g: Poly, e: int, p: Modulus) -> Poly:
    """g^e mod p by square and multiply."""
    result = Poly.one(p.b)
    base = g % p.p
    while e:
        if e & 1:
            result = poly_mul_mod(result, base, p)
        base = poly_mul_mod(base, base, p)
        e >>= 1
    return result


def is_irreducible(p: Poly) -> bool:
    """Exact test by trial division with all monic divisors of degree <= m/2."""
    b, m = p.base, p.degree
    if m < 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        # monic candidates of degree d: encodings b^d .. 2*b^d - 1
        for e in range(b ** d, 2 * b ** d):
            div = Poly.from_encoding(b, e)
            if (p % div).is_zero():
                return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_primitive(p: Poly, g: Poly) -> bool:
    """True iff the multiplicative order of g mod p equals b^m - 1.

    Assumes p irreducible.  Checked via g^((b^m-1)/r) != 1 for every prime
    r dividing the group order (the order always divides b^m - 1).
    """
    b, m = p.base, p.degree
    mod = Modulus(p)
    g = g % p
    if g.is_zero():
        raise ValueError("g must be nonzero mod p")
    n = b ** m - 1
    if n == 1:
        return True
    if poly_pow_mod(g, n, mod) != Poly.one(b):
        return False
    return all(poly_pow_mod(g, n // r, mod) != Poly.one(b)
               for r in _prime_factors(n))


def find_modulus(b: int, m: int, require_primitive: bool = False) -> Modulus:
    """Smallest-encoding irreducible (optionally primitive, with g = x)
    polynomial of degree m.  Deterministic, so constructions are
    reproducible; pass an explicit modulus to use a different p.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if not is_prime(b):
        raise ValueError(f"base {b} is not prime")
    for e in range(b ** m, b ** (m + 1)):
        cand = Poly.from_encoding(b, e)
        if not is_irreducible(cand):
            continue
        if require_primitive and not is_primitive(cand, Poly.x(b)):
            continue
        return Modulus(cand, primitive=require_primitive)
    raise RuntimeError(f"no irreducible polynomial of degree {m} found")


def laurent_digits(w: Poly, p: Modulus, L: int):
    """First L coefficients u_1..u_L of w(x)/p(x) = u_1 x^-1 + u_2 x^-2 + ...

    Computed by exact long division over Z_b; requires deg(w) < m.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    if w.base != p.b:
        raise ValueError("base mismatch")
    b, m = p.b, p.m
    if w.degree >= m:
        raise ValueError("deg(w) must be < deg(p)")
    pc = p.p.coeffs
    lc_inv = pow(pc[-1], b - 2, b)
    r = list(w.coeffs) + [0] * (m - len(w.coeffs))
    u = []
    for _ in range(L):
        r = [0] + r                       # multiply the remainder by x
        d = (r[m] * lc_inv) % b
        u.append(d)
        if d:
            for i, pi in enumerate(pc):
                r[i] = (r[i] - d * pi) % b
        r = r[:m]
    return tuple(u)


def v_m(w: Poly, p: Modulus) -> int:
    """Integer numerator n in [0, b^m) with v_m(w/p) = n / b^m.

    The digits u_1..u_m of the Laurent expansion of w/p are packed most
    significant first.
    """
    b = p.b
    num = 0
    for d in laurent_digits(w, p, p.m):
        num = num * b + d
    return num


@dataclass(frozen=True)
class DiscreteLogTable:
    """Bijection k <-> g^k mod p plus the degree sequence t_k.

    pow[k] is the integer encoding of g^k mod p for k = 0..b^m-2, log is the
    inverse map (log[pow[k]] = k, log[0] = -1), and t[k] = deg(g^k mod p).
    """

    modulus: Modulus
    g: Poly
    pow: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)
    t: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.pow)


def build_log_table(p: Modulus, g: Poly | None = None) -> DiscreteLogTable:
    """Power/log/degree tables for the primitive element g (default x).

    Built by repeated modular multiplication in O(b^m * m); raises if a
    power repeats early (g not primitive).
    """
    b, m = p.b, p.m
    check_size(b, m)
    if g is None:
        g = Poly.x(b)
    if g.base != b:
        raise ValueError("base mismatch")
    n = b ** m - 1
    pows = np.zeros(n, dtype=np.int64)
    ts = np.zeros(n, dtype=np.int64)
    if b == 2 and g == Poly.x(2):
        # Z_2 fast path: encodings are bit masks, reduction is XOR.
        pe = p.p.encoding
        cur = 1
        for k in range(n):
            pows[k] = cur
            ts[k] = cur.bit_length() - 1
            cur <<= 1
            if cur >> m:
                cur ^= pe
        if cur != 1:
            raise ValueError("g is not primitive mod p (early repeat)")
    else:
        pc = p.p.coeffs
        lc_inv = pow(pc[-1], b - 2, b)
        gc = list((g % p.p).coeffs)
        cur = [1] + [0] * (m - 1)
        deg = 0
        bpow = [b ** i for i in range(m)]
        for k in range(n):
            pows[k] = sum(c * bp for c, bp in zip(cur, bpow))
            ts[k] = deg
            # cur <- cur * g mod p
            out = [0] * (m + len(gc))
            for i, ci in enumerate(cur):
                if ci:
                    for j, gj in enumerate(gc):
                        out[i + j] = (out[i + j] + ci * gj) % b
            for d in range(len(out) - 1, m - 1, -1):
                f = (out[d] * lc_inv) % b
                if f:
                    for i, pi in enumerate(pc):
                        out[d - m + i] = (out[d - m + i] - f * pi) % b
            cur = out[:m]
            deg = m - 1
            while deg >= 0 and cur[deg] == 0:
                deg -= 1
        if cur != [1] + [0] * (m - 1):
            raise ValueError("g is not primitive mod p (early repeat)")
    if pows[0] != 1:
        raise AssertionError("pow[0] must encode 1")
    log = np.full(b ** m, -1, dtype=np.int64)
    log[pows] = np.arange(n, dtype=np.int64)
    if np.any(log[1:] < 0):
        raise ValueError("g is not primitive mod p (powers not a bijection)")
    return DiscreteLogTable(modulus=p, g=g, pow=pows, log=log, t=ts)


@lru_cache(maxsize=32)
def _cached_log_table(b: int, p_encoding: int) -> DiscreteLogTable:
    return build_log_table(Modulus(Poly.from_encoding(b, p_encoding)))


def log_table_for(p: Modulus) -> DiscreteLogTable:
    """Cached log table for modulus p with g = x (requires x primitive)."""
    return _cached_log_table(p.b, p.p.encoding)
