"""Exact arithmetic in the two-level finite field tower F_p <= F_q <= F_{q^N}.

Here q = p^m for a prime p.  An element of an extension of degree e over a
subfield with r elements is encoded as the integer sum(c_i * r**i), where
(c_0, ..., c_{e-1}) are its coordinates in the polynomial basis, low degree
first.  Encodings nest: an element of F_{q^N} is an integer below q**N whose
base-q digits are its F_q coordinates, and each F_q coordinate is an integer
below p**m whose base-p digits are F_p coordinates.

Moduli are chosen deterministically: among the monic irreducible polynomials
of the required degree, the one whose integer encoding (constant coefficient
in the least significant digit) is smallest.  For F_8 this selects
x^3 + x + 1, so the residue class a of x satisfies a^3 = a + 1 and is
primitive.

All objects are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from typing import Iterable


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The prime field F_p with elements encoded as integers 0..p-1."""

    def __init__(self, p: int) -> None:
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        self.p = p
        self.order = p
        self.char = p

    def _check(self, a: int) -> int:
        if not 0 <= a < self.p:
            raise ValueError(f"{a} is not an element of F_{self.p}")
        return a

    def add(self, a: int, b: int) -> int:
        return (self._check(a) + self._check(b)) % self.p

    def sub(self, a: int, b: int) -> int:
        return (self._check(a) - self._check(b)) % self.p

    def neg(self, a: int) -> int:
        return (-self._check(a)) % self.p

    def mul(self, a: int, b: int) -> int:
        return (self._check(a) * self._check(b)) % self.p

    def inv(self, a: int) -> int:
        if self._check(a) == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        return pow(self._check(a), e, self.p)

    def elements(self) -> range:
        return range(self.p)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class ExtField:
    """An extension K[x]/(modulus) of a subfield K, elements encoded as integers.

    ``modulus`` is a monic polynomial over the subfield, given as a tuple of
    subfield encodings, low degree first, including the leading 1.
    """

    def __init__(self, subfield, modulus: Iterable[int]) -> None:
        modulus = tuple(modulus)
        if len(modulus) < 2:
            raise ValueError("modulus must have degree at least 1")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.subfield = subfield
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.order = subfield.order ** self.degree
        self.char = subfield.char
        # Over F_2 the encoding is a plain bitmask, so products reduce with
        # shifts and xors instead of digit-level arithmetic.
        self._bits = isinstance(subfield, PrimeField) and subfield.p == 2
        if self._bits:
            self._modint = sum(c << i for i, c in enumerate(modulus))
            self._top = 1 << self.degree

    def _check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of the field of order {self.order}")
        return a

    def digits(self, a: int) -> list[int]:
        """Subfield coordinates of ``a``, low degree first."""
        self._check(a)
        r = self.subfield.order
        out = []
        for _ in range(self.degree):
            a, d = divmod(a, r)
            out.append(d)
        return out

    def undigits(self, coeffs: Iterable[int]) -> int:
        r = self.subfield.order
        a = 0
        for c in reversed(list(coeffs)):
            if not 0 <= c < r:
                raise ValueError(f"coordinate {c} out of range for subfield of order {r}")
            a = a * r + c
        return a

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self._bits:
            return a ^ b
        sf = self.subfield
        return self.undigits(sf.add(x, y) for x, y in zip(self.digits(a), self.digits(b)))

    def sub(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self._bits:
            return a ^ b
        sf = self.subfield
        return self.undigits(sf.sub(x, y) for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        self._check(a)
        if self._bits:
            return a
        sf = self.subfield
        return self.undigits(sf.neg(x) for x in self.digits(a))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self._bits:
            res = 0
            while b:
                if b & 1:
                    res ^= a
                b >>= 1
                a <<= 1
                if a & self._top:
                    a ^= self._modint
            return res
        sf = self.subfield
        da = self.digits(a)
        db = self.digits(b)
        prod = [0] * (2 * self.degree - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    if bj:
                        prod[i + j] = sf.add(prod[i + j], sf.mul(ai, bj))
        # long division by the monic modulus
        for idx in range(len(prod) - 1, self.degree - 1, -1):
            c = prod[idx]
            if c:
                prod[idx] = 0
                base = idx - self.degree
                for t in range(self.degree):
                    mt = self.modulus[t]
                    if mt:
                        prod[base + t] = sf.sub(prod[base + t], sf.mul(c, mt))
        return self.undigits(prod[: self.degree])

    def inv(self, a: int) -> int:
        if self._check(a) == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply exponentiation; pow(a, 0) = 1."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        self._check(a)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"ExtField(order={self.order}, modulus={self.modulus})"


def multiplicative_order(field, a: int) -> int:
    """Order of ``a`` in the multiplicative group; a must be nonzero."""
    if a == 0:
        raise ValueError("zero has no multiplicative order")
    k = 1
    y = a
    while y != 1:
        y = field.mul(y, a)
        k += 1
        if k > field.order:
            raise AssertionError("element order exceeded the group order")
    return k


# ---------------------------------------------------------------------------
# polynomial helpers over an arbitrary field view (for irreducibility search)
# ---------------------------------------------------------------------------

def _poly_mod(dividend: list[int], divisor: list[int], field) -> list[int]:
    """Remainder of dividend by a monic divisor, coefficients low degree first."""
    rem = list(dividend)
    dd = len(divisor) - 1
    for idx in range(len(rem) - 1, dd - 1, -1):
        c = rem[idx]
        if c:
            rem[idx] = 0
            base = idx - dd
            for t in range(dd):
                if divisor[t]:
                    rem[base + t] = field.sub(rem[base + t], field.mul(c, divisor[t]))
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _int_to_poly(t: int, degree: int, field) -> list[int]:
    """Monic polynomial of the given degree whose low coefficients encode t."""
    coeffs = []
    r = field.order
    for _ in range(degree):
        t, d = divmod(t, r)
        coeffs.append(d)
    coeffs.append(1)
    return coeffs


def is_irreducible(poly: list[int], field) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for dd in range(1, deg // 2 + 1):
        for t in range(field.order ** dd):
            divisor = _int_to_poly(t, dd, field)
            if not _poly_mod(poly, divisor, field):
                return False
    return True


def find_irreducible(field, degree: int) -> tuple[int, ...]:
    """Smallest monic irreducible of the given degree, by integer encoding."""
    if degree < 1:
        raise ValueError("degree must be positive")
    for t in range(field.order ** degree):
        poly = _int_to_poly(t, degree, field)
        if is_irreducible(poly, field):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


# ---------------------------------------------------------------------------
# the tower
# ---------------------------------------------------------------------------

class FieldTower:
    """The tower F_p <= F_q = F_{p^m} <= F_{q^N} with deterministic moduli.

    Attributes:
        p, m, N: tower parameters.
        q: order of the middle field, p**m.
        modulus_q: monic irreducible of degree m over F_p (tuple of ints).
        modulus_qN: monic irreducible of degree N over F_q (tuple of F_q
            encodings).
        base: field view for F_q (arithmetic on integers below q).
        ext: field view for F_{q^N} (arithmetic on integers below q**N).
        basis: the polynomial F_q-basis 1, b, ..., b^(N-1) of F_{q^N}, as
            encodings (so basis[i] == q**i).
    """

    def __init__(self, p: int, m: int, N: int) -> None:
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if m < 1 or N < 1:
            raise ValueError("extension degrees must be positive")
        self.p = p
        self.m = m
        self.N = N
        prime = PrimeField(p)
        self.modulus_q = find_irreducible(prime, m)
        self.base = prime if m == 1 else ExtField(prime, self.modulus_q)
        self.q = p ** m
        self.modulus_qN = find_irreducible(self.base, N)
        self.ext = ExtField(self.base, self.modulus_qN)
        self.basis = tuple(self.q ** i for i in range(N))
        self._primitive: int | None = None

    @property
    def order(self) -> int:
        """Order of the top field, q**N."""
        return self.ext.order

    def expand(self, x: int) -> tuple[int, ...]:
        """F_q coordinates of x in the polynomial basis, low degree first."""
        return tuple(self.ext.digits(x))

    def contract(self, coeffs: Iterable[int]) -> int:
        """Inverse of expand; requires exactly N coordinates below q."""
        coeffs = tuple(coeffs)
        if len(coeffs) != self.N:
            raise ValueError(f"expected {self.N} coordinates, got {len(coeffs)}")
        return self.ext.undigits(coeffs)

    def frobenius(self, x: int, j: int) -> int:
        """x raised to the q**j power; an F_q-linear automorphism of F_{q^N}."""
        if j < 0:
            raise ValueError("frobenius power must be nonnegative")
        return self.ext.pow(x, self.q ** (j % self.N))

    def primitive_element(self) -> int:
        """Smallest encoding whose multiplicative order is q**N - 1."""
        if self._primitive is None:
            target = self.order - 1
            for x in range(1, self.order):
                if multiplicative_order(self.ext, x) == target:
                    self._primitive = x
                    break
        assert self._primitive is not None
        return self._primitive

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "N": self.N,
            "modulus_q": list(self.modulus_q),
            "modulus_qN": [self.fq_coeffs(c) for c in self.modulus_qN],
        }

    @staticmethod
    def from_json(data: dict) -> "FieldTower":
        tower = FieldTower(int(data["p"]), int(data["m"]), int(data["N"]))
        if "modulus_q" in data and tuple(data["modulus_q"]) != tower.modulus_q:
            raise ValueError("stored modulus_q does not match the deterministic choice")
        if "modulus_qN" in data:
            stored = tuple(tower.fq_from_coeffs(c) for c in data["modulus_qN"])
            if stored != tower.modulus_qN:
                raise ValueError("stored modulus_qN does not match the deterministic choice")
        return tower

    def fq_coeffs(self, a: int) -> list[int]:
        """F_p coordinates of an F_q element, low degree first."""
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of F_{self.q}")
        out = []
        for _ in range(self.m):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def fq_from_coeffs(self, coeffs: Iterable[int]) -> int:
        coeffs = list(coeffs)
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(coeffs)}")
        a = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise ValueError(f"coordinate {c} out of range mod {self.p}")
            a = a * self.p + c
        return a

    def ext_coeffs(self, x: int) -> list[list[int]]:
        """Nested F_p coordinates of an F_{q^N} element."""
        return [self.fq_coeffs(c) for c in self.expand(x)]

    def ext_from_coeffs(self, coeffs: Iterable[Iterable[int]]) -> int:
        return self.contract(self.fq_from_coeffs(c) for c in coeffs)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldTower):
            return NotImplemented
        return (self.p, self.m, self.N) == (other.p, other.m, other.N)

    def __hash__(self) -> int:
        return hash((FieldTower, self.p, self.m, self.N))

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, m={self.m}, N={self.N})"


def build_tower(p: int, m: int, N: int) -> FieldTower:
    """Build the tower F_p <= F_{p^m} <= F_{(p^m)^N} with deterministic moduli."""
    return FieldTower(p, m, N)
