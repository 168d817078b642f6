"""Arithmetic in GF(p^e) for small prime powers.

A field context carries the prime p, the extension degree e, and a monic
irreducible modulus of degree e over GF(p), stored as a coefficient list
from the constant term up (so x^2 + x + 1 is (1, 1, 1)).  The modulus is
chosen deterministically: the lexicographically smallest coefficient
tuple, constant term first, that is irreducible.  Irreducibility is
decided by trial division against all monic irreducibles of degree at
most e/2, which is exhaustive and cheap at the degrees in scope.

Field elements are canonical integers in [0, q): the base-p digits of the
integer are the residue-polynomial coefficients, constant term in the
least significant digit.  This encoding is what appears in every
serialized matrix.  For small q the context precomputes full operation
tables; contexts are immutable and all arithmetic is pure.
"""

from __future__ import annotations

from itertools import product

MAX_EXTENSION_DEGREE = 4
_TABLE_LIMIT = 256  # build full op tables when q <= this


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, e) with p prime and q = p^e, or raise ValueError."""
    if isinstance(q, bool) or not isinstance(q, int) or q < 2:
        raise ValueError(f"field order must be an int >= 2, got {q!r}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1  # q itself is prime
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


# ----------------------------------------------------------------------
# polynomials over GF(p): coefficient lists, constant term first, trimmed


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    # Remainder of a modulo m; m need not be monic.
    a = _trim(list(a))
    dm = len(m) - 1
    lead_inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = (a[-1] * lead_inv) % p
        for i, mi in enumerate(m):
            a[i + shift] = (a[i + shift] - factor * mi) % p
        _trim(a)
    return a


def _poly_ext_gcd(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int], list[int]]:
    # Returns (g, x, y) with x*a + y*b = g over GF(p).
    r0, r1 = _trim(list(a)), _trim(list(b))
    x0, x1 = [1], []
    y0, y1 = [], [1]
    while r1:
        # quotient of r0 by r1
        quot: list[int] = []
        rem = list(r0)
        d1 = len(r1) - 1
        lead_inv = pow(r1[-1], -1, p)
        while rem and len(rem) - 1 >= d1:
            shift = len(rem) - 1 - d1
            factor = (rem[-1] * lead_inv) % p
            while len(quot) < shift + 1:
                quot.append(0)
            quot[shift] = factor
            for i, ci in enumerate(r1):
                rem[i + shift] = (rem[i + shift] - factor * ci) % p
            _trim(rem)
        qx = _poly_mul(quot, x1, p)
        qy = _poly_mul(quot, y1, p)
        x2 = _poly_sub(x0, qx, p)
        y2 = _poly_sub(y0, qy, p)
        r0, r1 = r1, rem
        x0, x1 = x1, x2
        y0, y1 = y1, y2
    return r0, x0, y0


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _trim(out)


def _monic_irreducibles(p: int, degree: int) -> list[list[int]]:
    if degree == 1:
        return [[a, 1] for a in range(p)]
    lower: list[list[int]] = []
    for d in range(1, degree // 2 + 1):
        lower.extend(_monic_irreducibles(p, d))
    found = []
    for coeffs in product(range(p), repeat=degree):
        cand = list(coeffs) + [1]
        if all(_poly_mod(cand, irr, p) for irr in lower):
            found.append(cand)
    return found


def _is_irreducible(cand: list[int], p: int) -> bool:
    degree = len(cand) - 1
    for d in range(1, degree // 2 + 1):
        for irr in _monic_irreducibles(p, d):
            if not _poly_mod(cand, irr, p):
                return False
    return True


# ----------------------------------------------------------------------


class FieldCtx:
    """Immutable GF(p^e) context; elements are ints in [0, q)."""

    __slots__ = ("p", "e", "q", "modulus", "_add_t", "_mul_t", "_neg_t", "_inv_t")

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        if self.q <= _TABLE_LIMIT:
            self._build_tables()
        else:
            self._add_t = self._mul_t = self._neg_t = self._inv_t = None

    def _build_tables(self) -> None:
        q = self.q
        self._add_t = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        self._mul_t = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        self._neg_t = [self._neg_raw(a) for a in range(q)]
        self._inv_t = [0] + [self._inv_raw(a) for a in range(1, q)]

    # -- canonical integer encoding

    def decode(self, a: int) -> tuple[int, ...]:
        """Base-p digits of a, constant coefficient first, length e."""
        digits = []
        for _ in range(self.e):
            digits.append(a % self.p)
            a //= self.p
        return tuple(digits)

    def encode(self, coeffs: tuple[int, ...] | list[int]) -> int:
        value = 0
        for c in reversed(coeffs):
            value = value * self.p + c % self.p
        return value

    def elements(self) -> range:
        return range(self.q)

    # -- raw arithmetic on encodings

    def _add_raw(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        da, db = self.decode(a), self.decode(b)
        return self.encode([(x + y) % self.p for x, y in zip(da, db)])

    def _neg_raw(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        return self.encode([(-x) % self.p for x in self.decode(a)])

    def _mul_raw(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        prod = _poly_mul(list(self.decode(a)), list(self.decode(b)), self.p)
        rem = _poly_mod(prod, list(self.modulus), self.p)
        return self.encode(rem + [0] * (self.e - len(rem)))

    def _inv_raw(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.e == 1:
            return pow(a, -1, self.p)
        g, x, _ = _poly_ext_gcd(_trim(list(self.decode(a))), list(self.modulus), self.p)
        # g is a nonzero constant since the modulus is irreducible
        scale = pow(g[0], -1, self.p)
        inv = [(c * scale) % self.p for c in x]
        inv = _poly_mod(inv, list(self.modulus), self.p)
        return self.encode(inv + [0] * (self.e - len(inv)))

    # -- public operations

    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return self._add_t[a][b]
        return self._add_raw(a, b)

    def neg(self, a: int) -> int:
        if self._neg_t is not None:
            return self._neg_t[a]
        return self._neg_raw(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return self._mul_t[a][b]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self._inv_t is not None:
            return self._inv_t[a]
        return self._inv_raw(a)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    # -- identity and rendering

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.q}) = GF({self.p})[x]/({_poly_str(self.modulus)})"


def _poly_str(coeffs: tuple[int, ...]) -> str:
    parts = []
    for exp in range(len(coeffs) - 1, -1, -1):
        c = coeffs[exp]
        if not c:
            continue
        if exp == 0:
            parts.append(str(c))
        else:
            power = "x" if exp == 1 else f"x^{exp}"
            parts.append(power if c == 1 else f"{c}*{power}")
    return " + ".join(parts) if parts else "0"


def make_field(p: int, e: int, *, max_degree: int = MAX_EXTENSION_DEGREE) -> FieldCtx:
    """Construct GF(p^e) with the deterministic smallest irreducible modulus.

    For e = 1 the modulus is x (arithmetic is plain mod p).  Rejects
    composite p and extension degrees outside [1, max_degree].
    """
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"field characteristic must be prime, got {p!r}")
    if isinstance(e, bool) or not isinstance(e, int) or not 1 <= e <= max_degree:
        raise ValueError(f"extension degree must be in [1, {max_degree}], got {e!r}")
    if e == 1:
        return FieldCtx(p, 1, (0, 1))
    for coeffs in product(range(p), repeat=e):
        cand = list(coeffs) + [1]
        if _is_irreducible(cand, p):
            return FieldCtx(p, e, tuple(cand))
    raise RuntimeError(f"no irreducible polynomial of degree {e} over GF({p})")  # unreachable


def field_of_order(q: int, *, max_degree: int = MAX_EXTENSION_DEGREE) -> FieldCtx:
    """GF(q) for a prime power q; rejects q = 1 and non-prime-powers."""
    p, e = factor_prime_power(q)
    return make_field(p, e, max_degree=max_degree)
