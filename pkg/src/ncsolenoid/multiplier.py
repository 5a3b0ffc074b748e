"""Multipliers on Q_N x Q_N and their symmetrizer subgroups.

A coherent angle sequence alpha over scale N defines a multiplier on
the group (Q_N)**2: for g = (p1/N**k1, p2/N**k2) and
h = (p3/N**k3, p4/N**k4), both coordinates in lowest N-adic terms,

    Psi_alpha(g, h) = alpha_{k1 + k4} * p1 * p4   (mod 1).

Its antisymmetrisation Theta_alpha(g, h) = Psi(g, h) - Psi(h, g) is a
skew bicharacter.  The symmetrizer subgroup collects the g with
Theta_alpha(g, .) identically zero; its shape is decided entirely by
the range of alpha:

* alpha identically zero: everything symmetrizes (the full group).
* alpha periodic and nonzero, all terms with denominator b: the
  symmetrizer is the pair group of { p * b / N**k }, scale factor b.
* alpha aperiodic: only the trivial subgroup, and the twisted algebra
  attached to Psi_alpha is simple.

Periodicity itself is read off the storage: alpha is periodic exactly
when its carrier value equals -alpha_0 (so in particular alpha has
finite range if and only if it is periodic).
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import gcd

from .nadic import QnRational
from .sequences import Angle, AngleSequence


class SequenceKind(enum.Enum):
    """Partition of coherent angle sequences by range behaviour.

    ``IRRATIONAL_SURROGATE`` marks data that stands in for a sequence
    with irrational terms.  Exact constructors only ever build rational
    sequences, so this member is reachable only through explicitly
    flagged inputs; it is kept so reports have a stable vocabulary.
    """

    RATIONAL_PERIODIC = "RationalPeriodic"
    RATIONAL_APERIODIC = "RationalAperiodic"
    IRRATIONAL_SURROGATE = "IrrationalSurrogate"


class Symmetrizer:
    """Description of a symmetrizer subgroup of (Q_N)**2.

    One of three shapes: ``trivial`` (only the identity), ``full`` (the
    whole group), or ``scaled_lattice(b)`` (pairs whose reduced
    numerators are both multiples of b, with b > 1 coprime to N).

    >>> Symmetrizer.scaled_lattice(62)
    Symmetrizer('ScaledLattice', b=62)
    """

    __slots__ = ("variant", "b")

    def __init__(self, variant, b=None):
        if variant not in ("Trivial", "Full", "ScaledLattice"):
            raise ValueError("unknown symmetrizer variant %r" % (variant,))
        if variant == "ScaledLattice":
            if isinstance(b, bool) or not isinstance(b, int) or b <= 1:
                raise ValueError("lattice scale must be an integer > 1")
        elif b is not None:
            raise ValueError("only ScaledLattice carries a scale")
        object.__setattr__(self, "variant", variant)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("Symmetrizer is immutable")

    @classmethod
    def trivial(cls):
        return cls("Trivial")

    @classmethod
    def full(cls):
        return cls("Full")

    @classmethod
    def scaled_lattice(cls, b):
        return cls("ScaledLattice", b)

    def contains(self, g):
        """Whether a pair of QnRationals lies in the described subgroup."""
        x, y = _as_pair(g, None)
        if self.variant == "Full":
            return True
        if self.variant == "Trivial":
            return x.num == 0 and y.num == 0
        return x.num % self.b == 0 and y.num % self.b == 0

    def __eq__(self, other):
        if not isinstance(other, Symmetrizer):
            return NotImplemented
        return self.variant == other.variant and self.b == other.b

    def __hash__(self):
        return hash((self.variant, self.b))

    def __repr__(self):
        if self.variant == "ScaledLattice":
            return "Symmetrizer('ScaledLattice', b=%d)" % self.b
        return "Symmetrizer(%r)" % self.variant

    def to_json(self):
        if self.variant == "ScaledLattice":
            return {"variant": "ScaledLattice", "b": self.b}
        return {"variant": self.variant}


def _as_pair(g, modulus):
    """Validate g as a pair of QnRationals (optionally at a given scale)."""
    try:
        x, y = g
    except (TypeError, ValueError):
        raise ValueError("expected a pair of Q_N elements") from None
    for c in (x, y):
        if not isinstance(c, QnRational):
            raise ValueError("pair entries must be QnRational")
    if x.modulus != y.modulus:
        raise ValueError("pair entries live at different scales")
    if modulus is not None and x.modulus != modulus:
        raise ValueError("pair scale %d does not match %d" % (x.modulus, modulus))
    return x, y


def psi_phase(alpha, g, h):
    """The multiplier Psi_alpha(g, h) as an exact Angle.

    >>> a = AngleSequence.constant(3, Fraction(1, 2))
    >>> g = (QnRational(1, 1, 3), QnRational(0, 0, 3))
    >>> h = (QnRational(0, 0, 3), QnRational(1, 1, 3))
    >>> psi_phase(a, g, h)
    Angle(1/2)
    """
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    g1, _g2 = _as_pair(g, alpha.modulus)
    _h1, h2 = _as_pair(h, alpha.modulus)
    return Angle(alpha.value(g1.exp + h2.exp) * g1.num * h2.num)


def theta_phase(alpha, g, h):
    """The skew bicharacter Theta_alpha(g, h) = Psi(g, h) - Psi(h, g)."""
    return psi_phase(alpha, g, h) - psi_phase(alpha, h, g)


def bicharacter(zeta, xi, eta, chi, g, h):
    """A general product bicharacter from four angle sequences.

    With g = (p1/N**k1, p2/N**k2) and h = (p3/N**k3, p4/N**k4):

        zeta_{k1+k3} p1 p3 + eta_{k2+k3} p2 p3
        + chi_{k2+k4} p2 p4 + xi_{k1+k4} p1 p4   (mod 1).
    """
    seqs = (zeta, xi, eta, chi)
    for s in seqs:
        if not isinstance(s, AngleSequence):
            raise TypeError("expected AngleSequences")
        if s.modulus != zeta.modulus:
            raise ValueError("mismatched scales")
    g1, g2 = _as_pair(g, zeta.modulus)
    h1, h2 = _as_pair(h, zeta.modulus)
    total = (
        zeta.value(g1.exp + h1.exp) * g1.num * h1.num
        + eta.value(g2.exp + h1.exp) * g2.num * h1.num
        + chi.value(g2.exp + h2.exp) * g2.num * h2.num
        + xi.value(g1.exp + h2.exp) * g1.num * h2.num
    )
    return Angle(total)


def action_phase(alpha, x, n):
    """The rotation angle p * alpha_{k+n} applied at stage n by x = p/N**k."""
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    if not isinstance(x, QnRational) or x.modulus != alpha.modulus:
        raise ValueError("x must be a Q_N element at the sequence scale")
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError("stage must be a nonnegative integer")
    return Angle(alpha.value(x.exp + n) * x.num)


def symmetrizer(alpha):
    """The symmetrizer subgroup of Theta_alpha, described exactly.

    >>> from .nadic import NadicInteger
    >>> a = AngleSequence(5, Fraction(1, 62), NadicInteger.from_value(Fraction(-1, 62), 5))
    >>> symmetrizer(a)
    Symmetrizer('ScaledLattice', b=62)
    """
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    if not alpha.is_exact:
        raise ValueError("symmetrizer is undecidable from a finite prefix")
    if alpha.is_zero():
        return Symmetrizer.full()
    p = alpha.period()
    if p is None:
        return Symmetrizer.trivial()
    b = 1
    for n in range(p):
        d = alpha.value(n).denominator
        b = b * d // gcd(b, d)
    return Symmetrizer.scaled_lattice(b)


def is_simple(alpha):
    """Simplicity of the twisted algebra attached to Psi_alpha.

    Holds exactly when alpha is aperiodic (equivalently, has infinite
    range; equivalently, the symmetrizer is trivial).
    """
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    if not alpha.is_exact:
        raise ValueError("simplicity is undecidable from a finite prefix")
    return alpha.period() is None


def classify_type(alpha):
    """Place alpha in the range partition (see SequenceKind)."""
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    if not alpha.is_exact:
        raise ValueError("classification is undecidable from a finite prefix")
    if alpha.period() is not None:
        return SequenceKind.RATIONAL_PERIODIC
    return SequenceKind.RATIONAL_APERIODIC
