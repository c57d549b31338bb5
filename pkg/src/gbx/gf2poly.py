"""Polynomial arithmetic over F2[x] and the quotient rings F2[x]/(x^l - 1).

Two representations are used throughout:

* plain polynomials over F2[x] are python ints, bit i holding the
  coefficient of x^i (so ``0b10001`` is ``1 + x^4``);
* ring elements carry their ring dimension explicitly via :class:`RingPoly`.
"""

from __future__ import annotations

from dataclasses import dataclass

NEG_INF = float("-inf")  # degree of the zero polynomial


# ---------------------------------------------------------------------------
# plain F2[x] arithmetic on int bit-masks

def f2_degree(p: int):
    """Degree of a plain polynomial; -inf for the zero polynomial."""
    if p == 0:
        return NEG_INF
    return p.bit_length() - 1


def f2_weight(p: int) -> int:
    return bin(p).count("1")


def f2_mul(u: int, v: int) -> int:
    """Carry-less (XOR) product in F2[x]."""
    out = 0
    while v:
        low = v & -v
        out ^= u << (low.bit_length() - 1)
        v ^= low
    return out


def f2_divmod(u: int, v: int) -> tuple[int, int]:
    """Quotient and remainder of u by v in F2[x]."""
    if v == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dv = v.bit_length() - 1
    q = 0
    while u.bit_length() - 1 >= dv and u:
        shift = (u.bit_length() - 1) - dv
        q ^= 1 << shift
        u ^= v << shift
    return q, u


def f2_mod(u: int, v: int) -> int:
    return f2_divmod(u, v)[1]


def f2_gcd(*polys: int) -> int:
    """Greatest common divisor of plain polynomials (Euclid, n-ary by folding).

    Over F2 every nonzero polynomial is already monic, so no normalization
    step is needed. Raises if all arguments are zero.
    """
    g = 0
    for p in polys:
        a, b = g, p
        while b:
            a, b = b, f2_mod(a, b)
        g = a
    if g == 0:
        raise ValueError("gcd of all-zero polynomials is undefined")
    return g


def x_pow_minus_one(ell: int) -> int:
    """The modulus x^l + 1 (== x^l - 1 over F2) as a plain polynomial."""
    return (1 << ell) | 1


def geometric_sum(ell: int, kappa: int) -> int:
    """sum_{i=0}^{kappa-1} x^{i*l} as a plain polynomial."""
    out = 0
    for i in range(kappa):
        out |= 1 << (i * ell)
    return out


# ---------------------------------------------------------------------------
# quotient-ring elements

@dataclass(frozen=True)
class RingPoly:
    """Element of F2[x]/(x^l - 1); ``coeffs[i]`` is the coefficient of x^i."""

    coeffs: tuple
    ring_dim: int

    def __post_init__(self):
        if self.ring_dim < 1:
            raise ValueError("ring dimension must be positive")
        if len(self.coeffs) != self.ring_dim:
            raise ValueError("coefficient count must equal the ring dimension")
        if any(c not in (0, 1) for c in self.coeffs):
            raise ValueError("coefficients must be bits")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_mask(cls, mask: int, ring_dim: int) -> "RingPoly":
        if mask < 0 or mask >> ring_dim:
            raise ValueError("polynomial does not fit in the ring")
        return cls(tuple((mask >> i) & 1 for i in range(ring_dim)), ring_dim)

    @classmethod
    def zero(cls, ring_dim: int) -> "RingPoly":
        return cls.from_mask(0, ring_dim)

    @classmethod
    def one(cls, ring_dim: int) -> "RingPoly":
        return cls.from_mask(1, ring_dim)

    # -- views -------------------------------------------------------------

    @property
    def mask(self) -> int:
        m = 0
        for i, c in enumerate(self.coeffs):
            m |= c << i
        return m

    @property
    def degree(self):
        return f2_degree(self.mask)

    @property
    def weight(self) -> int:
        return sum(self.coeffs)

    def lift(self, ring_dim: int) -> "RingPoly":
        """Reinterpret in a (usually larger) ring, reducing mod x^l - 1."""
        return RingPoly.from_mask(ring_reduce(self.mask, ring_dim), ring_dim)

    def __str__(self) -> str:
        return format_poly(self.mask)


def ring_reduce(mask: int, ring_dim: int) -> int:
    """Reduce a plain polynomial modulo x^ring_dim - 1 (fold exponents)."""
    out = mask & ((1 << ring_dim) - 1)
    mask >>= ring_dim
    while mask:
        out ^= mask & ((1 << ring_dim) - 1)
        mask >>= ring_dim
    return out


def poly_add(u: RingPoly, v: RingPoly) -> RingPoly:
    """Coefficient-wise XOR of two elements of the same ring."""
    if u.ring_dim != v.ring_dim:
        raise ValueError("ring dimension mismatch")
    return RingPoly.from_mask(u.mask ^ v.mask, u.ring_dim)


def poly_mul(u: RingPoly, v: RingPoly) -> RingPoly:
    """Product in F2[x]/(x^l - 1): convolution with exponents taken mod l."""
    if u.ring_dim != v.ring_dim:
        raise ValueError("ring dimension mismatch")
    return RingPoly.from_mask(ring_reduce(f2_mul(u.mask, v.mask), u.ring_dim),
                              u.ring_dim)


def poly_gcd(*polys: int) -> int:
    """gcd of plain F2[x] polynomials (alias kept for the public surface)."""
    return f2_gcd(*polys)


# ---------------------------------------------------------------------------
# text format: "1+x+x^4" monomial sums, or bit strings "11001"

def parse_poly(text: str) -> int:
    """Parse a plain polynomial from monomial or bit-string form."""
    s = text.strip().lower().replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if len(s) > 1 and set(s) <= {"0", "1"}:
        # bit string, index i = coefficient of x^i
        mask = 0
        for i, ch in enumerate(s):
            if ch == "1":
                mask |= 1 << i
        return mask
    if s == "0":
        return 0
    mask = 0
    for term in s.split("+"):
        if term == "1":
            mask ^= 1
        elif term == "x":
            mask ^= 2
        elif term.startswith("x^"):
            e = int(term[2:])
            if e < 0:
                raise ValueError(f"negative exponent in {text!r}")
            mask ^= 1 << e
        else:
            raise ValueError(f"cannot parse polynomial term {term!r}")
    return mask


def parse_ring_poly(text: str, ring_dim: int) -> RingPoly:
    mask = ring_reduce(parse_poly(text), ring_dim)
    return RingPoly.from_mask(mask, ring_dim)


def format_poly(mask: int) -> str:
    """Emit monomial form, e.g. 0b10011 -> '1+x+x^4'."""
    if mask == 0:
        return "0"
    terms = []
    i = 0
    while mask >> i:
        if (mask >> i) & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        i += 1
    return "+".join(terms)
