"""Exact arithmetic in finite fields GF(p^s).

Elements are stored in the polynomial basis: an element of GF(p^s) is a
length-s vector of residues mod p, read as a polynomial in the generator
``a`` modulo a fixed monic irreducible polynomial of degree s.  The modulus
is chosen deterministically (first irreducible in the enumeration of monic
polynomials by ascending integer code), so results are reproducible.
"""

from __future__ import annotations

from functools import lru_cache

MAX_PRIME = 1 << 16
MAX_FIELD_SIZE = 1 << 20


class CapacityError(ValueError):
    """Requested object exceeds the library's desk-scale limits."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# univariate polynomials over GF(p), little-endian coefficient tuples,
# used only to pick and apply the field modulus


def _trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _umul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _usub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return _trim(out)


def _umod(a, mod, p):
    # mod is monic
    a = list(a)
    d = len(mod) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % p
        if c:
            for j in range(d):
                a[i - d + j] = (a[i - d + j] - c * mod[j]) % p
        a[i] = 0
    return _trim(a)


def _upowmod(base, e, mod, p):
    result = (1,)
    base = _umod(base, mod, p)
    while e:
        if e & 1:
            result = _umod(_umul(result, base, p), mod, p)
        base = _umod(_umul(base, base, p), mod, p)
        e >>= 1
    return result


def _ugcd(a, b, p):
    while b:
        a, b = b, _urem(a, b, p)
    return a


def _urem(a, b, p):
    # remainder of a by arbitrary nonzero b
    inv = pow(b[-1], p - 2, p)
    a = list(_trim(a))
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = (a[-1] * inv) % p
        shift = len(a) - 1 - db
        for j, y in enumerate(b):
            a[shift + j] = (a[shift + j] - c * y) % p
        a = list(_trim(a))
    return tuple(a)


def _is_irreducible(low, p):
    """Rabin test for f = x^s + sum(low[i] x^i) over GF(p)."""
    s = len(low)
    if s == 1:
        return True
    mod = tuple(low) + (1,)
    x = (0, 1)
    # x^(p^s) == x mod f
    xq = x
    for _ in range(s):
        xq = _upowmod(xq, p, mod, p)
    if _usub(xq, x, p) != ():
        return False
    for t in prime_factors(s):
        xe = x
        for _ in range(s // t):
            xe = _upowmod(xe, p, mod, p)
        g = _ugcd(mod, _usub(xe, x, p), p)
        if len(g) - 1 != 0:
            return False
    return True


def _usub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return _trim(out)


def _find_modulus(p, s):
    """First monic irreducible of degree s, enumerating low coefficients
    as base-p digits of 0, 1, 2, ...  For s=1 this yields x."""
    for code in range(p**s):
        low = []
        k = code
        for _ in range(s):
            low.append(k % p)
            k //= p
        if _is_irreducible(tuple(low), p):
            return tuple(low)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------


class FieldContext:
    """A finite field GF(p^s) with a fixed modulus and generator symbol a."""

    __slots__ = ("p", "s", "q", "modulus", "zero", "one", "_elements", "_red")

    def __init__(self, p: int, s: int, modulus: tuple[int, ...]):
        self.p = p
        self.s = s
        self.q = p**s
        self.modulus = modulus  # low coefficients; leading 1 implicit
        # x^d mod modulus for d = s .. 2s-2, used to reduce products
        mod_full = modulus + (1,)
        self._red = {}
        for d in range(s, 2 * s - 1):
            self._red[d] = _umod((0,) * d + (1,), mod_full, p)
        self.zero = FieldElement(self, (0,) * s)
        self.one = FieldElement(self, (1,) + (0,) * (s - 1))
        self._elements = None

    # -- construction -------------------------------------------------

    def element(self, value) -> FieldElement:
        """Coerce an int (constant), coefficient vector, or element."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ValueError("field context mismatch")
            return value
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.s - 1)
            return FieldElement(self, coeffs)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.s:
            raise ValueError(f"expected {self.s} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    @property
    def generator(self) -> FieldElement:
        if self.s == 1:
            raise ValueError("prime field has no generator symbol a")
        return FieldElement(self, (0, 1) + (0,) * (self.s - 2))

    def from_index(self, k: int) -> FieldElement:
        """Element number k in enumeration order (0 -> 0, 1 -> 1, ...)."""
        coeffs = []
        for _ in range(self.s):
            coeffs.append(k % self.p)
            k //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> list[FieldElement]:
        if self._elements is None:
            self._elements = [self.from_index(k) for k in range(self.q)]
        return self._elements

    def random_element(self, rng) -> FieldElement:
        return self.from_index(rng.randrange(self.q))

    def random_nonzero(self, rng) -> FieldElement:
        return self.from_index(rng.randrange(1, self.q))

    # -- coefficient-tuple arithmetic ----------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        p, s = self.p, self.s
        if s == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * s - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] = (conv[i + j] + x * y) % p
        out = conv[:s]
        for d in range(s, 2 * s - 1):
            c = conv[d]
            if c:
                for j, r in enumerate(self._red[d]):
                    out[j] = (out[j] + c * r) % p
        return tuple(out)

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inversion of zero field element")
        if self.s == 1:
            return (pow(a[0], self.p - 2, self.p),)
        return self._pow(a, self.q - 2)

    def _pow(self, a, e):
        result = self.one.coeffs
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    # -- identity -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldContext):
            return NotImplemented
        return (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"

    def modulus_str(self) -> str:
        if self.s == 1:
            return "a"
        parts = [f"a^{self.s}"]
        for d in range(self.s - 1, -1, -1):
            c = self.modulus[d]
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append("a" if c == 1 else f"{c}*a")
            else:
                parts.append(f"a^{d}" if c == 1 else f"{c}*a^{d}")
        return "+".join(parts)


class FieldElement:
    """An element of a FieldContext, canonical coefficient vector."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ValueError("field context mismatch")
            return other
        if isinstance(other, int):
            return self.ctx.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(o.coeffs, self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg(self.coeffs))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, self.ctx._inv(o.coeffs)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            return FieldElement(self.ctx, self.ctx._pow(self.ctx._inv(self.coeffs), -e))
        return FieldElement(self.ctx, self.ctx._pow(self.coeffs, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx._inv(self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.ctx.p, self.ctx.s))

    def index(self) -> int:
        """Position in enumeration order (base-p digits)."""
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.ctx.p + c
        return k

    def __int__(self):
        if self.ctx.s != 1:
            raise ValueError("only prime-field elements convert to int")
        return self.coeffs[0]

    def __str__(self):
        if self.ctx.s == 1:
            return str(self.coeffs[0])
        parts = []
        for d in range(self.ctx.s - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append("a" if c == 1 else f"{c}*a")
            else:
                parts.append(f"a^{d}" if c == 1 else f"{c}*a^{d}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"{self} in {self.ctx!r}"


@lru_cache(maxsize=None)
def make_field(p: int, s: int = 1) -> FieldContext:
    """Build GF(p^s) with the deterministically chosen modulus."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if not isinstance(s, int) or s < 1:
        raise ValueError(f"extension degree must be >= 1, got {s}")
    if p > MAX_PRIME:
        raise CapacityError(f"characteristic {p} exceeds cap {MAX_PRIME}")
    if p**s > MAX_FIELD_SIZE:
        raise CapacityError(f"field size {p}^{s} exceeds cap {MAX_FIELD_SIZE}")
    return FieldContext(p, s, _find_modulus(p, s))


@lru_cache(maxsize=None)
def field_of_size(q: int) -> FieldContext:
    """GF(q) for a prime power q."""
    if q < 2:
        raise ValueError(f"field size must be >= 2, got {q}")
    factors = prime_factors(q)
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = factors[0]
    s = 0
    n = q
    while n > 1:
        n //= p
        s += 1
    if p**s != q:
        raise ValueError(f"{q} is not a prime power")
    return make_field(p, s)


def enumerate_elements(ctx: FieldContext) -> list[FieldElement]:
    """All q elements, starting 0, 1, then by ascending enumeration index."""
    return ctx.elements()


def embed(elem: FieldElement, target: FieldContext) -> FieldElement:
    """Embed a prime-field element into an extension of the same characteristic."""
    if elem.ctx == target:
        return elem
    if elem.ctx.s != 1 or elem.ctx.p != target.p:
        raise ValueError("only prime-subfield embeddings are supported")
    return target.element(elem.coeffs[0])
