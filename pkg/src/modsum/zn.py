"""Subsets of Z_n and their modular sumsets.

A :class:`ZnSet` stores its members as a Python ``int`` bit-vector, so sets
over any modulus work; the array kernels in :mod:`modsum._kernels` are the
fast path for building whole tables when n is small.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import EmptyOperand, IncompatibleModuli, InvalidInput


def _rotl(bits: int, s: int, n: int) -> int:
    """Rotate an n-bit vector left by s, i.e. translate the set by +s mod n."""
    if s == 0:
        return bits
    full = (1 << n) - 1
    return ((bits << s) | (bits >> (n - s))) & full


@dataclass(frozen=True)
class ZnSet:
    """A subset of Z_n; ``bits`` has bit i set iff residue i is a member."""

    modulus: int
    bits: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 1:
            raise InvalidInput(f"modulus must be a positive integer, got {self.modulus!r}")
        if self.bits < 0 or self.bits >> self.modulus:
            raise InvalidInput(f"bit-vector {self.bits:#x} has residues outside Z_{self.modulus}")

    @classmethod
    def from_members(cls, modulus: int, members: Iterable[int]) -> ZnSet:
        if not isinstance(modulus, int) or modulus < 1:
            raise InvalidInput(f"modulus must be a positive integer, got {modulus!r}")
        bits = 0
        for x in members:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < modulus:
                raise InvalidInput(f"residue {x!r} is not in [0, {modulus - 1}]")
            bits |= 1 << x
        return cls(modulus, bits)

    @classmethod
    def full(cls, modulus: int) -> ZnSet:
        return cls(modulus, (1 << modulus) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.modulus) if self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.modulus and bool(self.bits >> x & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    @property
    def is_full(self) -> bool:
        return self.bits == (1 << self.modulus) - 1

    def issubset(self, other: ZnSet) -> bool:
        _same_modulus(self, other)
        return self.bits & ~other.bits == 0

    def translate(self, t: int) -> ZnSet:
        return ZnSet(self.modulus, _rotl(self.bits, t % self.modulus, self.modulus))

    def __add__(self, other: ZnSet) -> ZnSet:
        if not isinstance(other, ZnSet):
            return NotImplemented
        return sumset(self, other)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"

    def __repr__(self) -> str:
        return f"ZnSet(n={self.modulus}, {self})"

    def to_json(self) -> dict:
        return {"n": self.modulus, "members": list(self.members)}

    @classmethod
    def from_json(cls, obj: dict) -> ZnSet:
        try:
            return cls.from_members(obj["n"], obj["members"])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"not a ZnSet object: {obj!r}") from exc


def make_set(modulus: int, members: Iterable[int]) -> ZnSet:
    """Build a subset of Z_modulus; duplicate members are ignored."""
    return ZnSet.from_members(modulus, members)


def all_subsets(n: int, *, nonempty: bool = True) -> Iterator[ZnSet]:
    """Every subset of Z_n in ascending bit-pattern order."""
    for bits in range(1 if nonempty else 0, 1 << n):
        yield ZnSet(n, bits)


def _same_modulus(a: ZnSet, b: ZnSet) -> None:
    if a.modulus != b.modulus:
        raise IncompatibleModuli(f"moduli differ: {a.modulus} vs {b.modulus}")


def _nonempty(*sets: ZnSet) -> None:
    for s in sets:
        if not s.bits:
            raise EmptyOperand("operation requires a nonempty set")


def sumset(a: ZnSet, b: ZnSet) -> ZnSet:
    """{(x + y) mod n : x in a, y in b}, as a union of translates of ``b``."""
    _same_modulus(a, b)
    _nonempty(a, b)
    n = a.modulus
    out = 0
    for x in a.members:
        out |= _rotl(b.bits, x, n)
    return ZnSet(n, out)


def modular_difference_set(a: ZnSet) -> ZnSet:
    """Nonzero differences (x - y) mod n over distinct members; closed under negation."""
    _nonempty(a)
    n = a.modulus
    out = 0
    for x in a.members:
        # a - x, then drop the zero coming from x - x
        out |= _rotl(a.bits, (n - x) % n, n)
    return ZnSet(n, out & ~1)


def paper_difference_set(a: ZnSet) -> frozenset[int]:
    """Absolute differences |x - y| of distinct canonical representatives.

    This is the absolute-value form; it is *not* what governs sumset sizes in
    Z_n (see :func:`modular_difference_set`).
    """
    _nonempty(a)
    return frozenset(abs(x - y) for x, y in combinations(a.members, 2))


def is_arithmetic_progression(a: ZnSet) -> int | None:
    """Common difference of the sorted representatives, or None.

    A singleton returns 0; a pair returns its gap.
    """
    _nonempty(a)
    m = a.members
    if len(m) == 1:
        return 0
    d = m[1] - m[0]
    if all(m[i + 1] - m[i] == d for i in range(len(m) - 1)):
        return d
    return None


def stabilizer(a: ZnSet) -> ZnSet:
    """Residues t with a + t == a (a subgroup of Z_n)."""
    n = a.modulus
    return ZnSet(n, sum(1 << t for t in range(n) if _rotl(a.bits, t, n) == a.bits))


@dataclass(frozen=True)
class BoundsReport:
    lower_paper: int
    lower_safe: int
    upper: int
    actual: int
    paper_lower_holds: bool


def check_bounds(a: ZnSet, b: ZnSet) -> BoundsReport:
    s = sumset(a, b)
    n = a.modulus
    lower = len(a) + len(b) - 1
    return BoundsReport(
        lower_paper=lower,
        lower_safe=min(n, lower),
        upper=min(n, len(a) * len(b)),
        actual=len(s),
        paper_lower_holds=lower <= len(s),
    )
