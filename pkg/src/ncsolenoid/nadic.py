"""Exact arithmetic at a fixed scale N >= 2.

Two abelian groups underlie everything in this package:

* ``Q_N``, the additive group of rationals whose denominator is a power
  of N.  Elements are kept in lowest N-adic terms ``p / N**k`` with
  either k = 0 or p not divisible by N.

* ``Z_N``, the N-adic integers, presented as coherent residue towers
  ``J_0 = 0, J_1, J_2, ...`` with ``J_k in [0, N**k)`` and
  ``J_{k+1} == J_k (mod N**k)``.  The tower is stored either as an exact
  rational ``a/b`` with ``gcd(b, N) == 1`` (the residues are then
  ``a * b**-1 mod N**k``), or as a finite digit prefix for bounded
  brute-force work.

N may be any integer >= 2, composite scales included.  All arithmetic is
exact; no floats enter or leave this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

#: Search cap for multiplicative orders.  Inputs are desk scale, so a
#: plain loop with a safety cap beats anything clever.
ORDER_CAP = 10 ** 6


def check_scale(modulus):
    """Validate a scale N and return it as an int."""
    if isinstance(modulus, bool) or not isinstance(modulus, int):
        raise ValueError("scale must be an integer")
    if modulus < 2:
        raise ValueError("scale must be at least 2")
    return modulus


def as_fraction(value):
    """Coerce ints, Fractions and 'a/b' strings to Fraction, rejecting floats.

    >>> as_fraction("-3/4")
    Fraction(-3, 4)
    >>> as_fraction(7)
    Fraction(7, 1)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("expected a rational, got a bool")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text or "E" in text:
            raise ValueError("floating point literals are not accepted: %r" % value)
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError("not a rational literal: %r" % value) from None
    raise ValueError("cannot interpret %r as an exact rational" % (value,))


def format_fraction(q):
    """Render a Fraction as 'a' or 'a/b' (the JSON wire form)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def frac_part(q):
    """The representative of q mod 1 in [0, 1).

    >>> frac_part(Fraction(-1, 3))
    Fraction(2, 3)
    """
    q = Fraction(q)
    return q - (q.numerator // q.denominator)


def prime_factors(n):
    """Prime factors of n >= 2 in ascending order with multiplicity.

    Trial division only; inputs are desk scale.

    >>> prime_factors(360)
    (2, 2, 2, 3, 3, 5)
    """
    if n < 2:
        raise ValueError("need an integer >= 2")
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def distinct_primes(n):
    """The set of primes dividing n."""
    return frozenset(prime_factors(n))


def is_prime(n):
    return n >= 2 and prime_factors(n) == (n,)


def multiplicative_order(n, m, cap=ORDER_CAP):
    """Least t >= 1 with n**t == 1 (mod m), for gcd(n, m) == 1.

    m == 1 gives order 1.  Raises if the order exceeds ``cap``.

    >>> multiplicative_order(5, 62)
    3
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return 1
    if gcd(n, m) != 1:
        raise ValueError("%d is not a unit mod %d" % (n, m))
    acc = n % m
    t = 1
    while acc != 1:
        acc = (acc * n) % m
        t += 1
        if t > cap:
            raise ValueError("multiplicative order exceeds cap %d" % cap)
    return t


class QnRational:
    """An element p / N**k of Q_N in lowest N-adic terms.

    The constructor normalises: trailing factors of N are cancelled, and
    zero is stored as (0, 0).

    >>> QnRational(10, 2, 5)
    QnRational(2, 1, scale=5)
    >>> QnRational(3, 2, 6) + QnRational(1, 1, 6)
    QnRational(9, 2, scale=6)
    """

    __slots__ = ("num", "exp", "modulus")

    def __init__(self, num, exp, modulus):
        modulus = check_scale(modulus)
        if isinstance(num, bool) or not isinstance(num, int):
            raise ValueError("numerator must be an integer")
        if isinstance(exp, bool) or not isinstance(exp, int) or exp < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if num == 0:
            exp = 0
        else:
            while exp > 0 and num % modulus == 0:
                num //= modulus
                exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("QnRational is immutable")

    @classmethod
    def from_fraction(cls, value, modulus):
        """Embed an exact rational whose denominator divides a power of N.

        >>> QnRational.from_fraction(Fraction(5, 8), 4)
        QnRational(10, 2, scale=4)
        """
        q = as_fraction(value)
        modulus = check_scale(modulus)
        d = q.denominator
        k = 0
        t = d
        while t != 1:
            g = gcd(t, modulus)
            if g == 1:
                raise ValueError(
                    "denominator %d is not supported by scale %d" % (d, modulus)
                )
            t //= g
            k += 1
        return cls(q.numerator * (modulus ** k // d), k, modulus)

    @property
    def fraction(self):
        return Fraction(self.num, self.modulus ** self.exp)

    def _require_same(self, other):
        if not isinstance(other, QnRational):
            raise TypeError("expected a QnRational")
        if other.modulus != self.modulus:
            raise ValueError("mismatched scales %d and %d" % (self.modulus, other.modulus))

    def __add__(self, other):
        self._require_same(other)
        return QnRational.from_fraction(self.fraction + other.fraction, self.modulus)

    def __neg__(self):
        return QnRational(-self.num, self.exp, self.modulus)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, m):
        """Multiply by an integer scalar."""
        if isinstance(m, bool) or not isinstance(m, int):
            raise ValueError("scalar must be an integer")
        return QnRational(self.num * m, self.exp, self.modulus)

    def __bool__(self):
        return self.num != 0

    def __eq__(self, other):
        if not isinstance(other, QnRational):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.num == other.num
            and self.exp == other.exp
        )

    def __hash__(self):
        return hash((self.modulus, self.num, self.exp))

    def __repr__(self):
        return "QnRational(%d, %d, scale=%d)" % (self.num, self.exp, self.modulus)

    def to_json(self):
        return {"num": str(self.num), "exp": self.exp}

    @classmethod
    def from_json(cls, obj, modulus):
        if not isinstance(obj, dict) or set(obj) - {"num", "exp"}:
            raise ValueError("bad Q_N element object")
        num = obj.get("num", "0")
        if isinstance(num, str):
            num = int(as_fraction(num))
        if isinstance(num, bool) or not isinstance(num, int):
            raise ValueError("bad numerator in Q_N element")
        exp = obj.get("exp", 0)
        return cls(num, exp, modulus)


class NadicInteger:
    """An N-adic integer as a coherent residue tower.

    Exact form: ``NadicInteger.from_value(Fraction(a, b), N)`` with
    gcd(b, N) == 1; the tower is J_k = a * b**-1 mod N**k and every
    residue, digit and segment is available.

    Prefix form: ``NadicInteger.from_prefix([j0, j1, ...], N)`` records
    finitely many digits for brute-force windows; queries beyond the
    recorded depth raise.

    >>> J = NadicInteger.iota(5, 3)
    >>> [J.at(k) for k in range(5)]
    [0, 2, 5, 5, 5]
    >>> [J.digit(n) for n in range(4)]
    [2, 1, 0, 0]
    >>> NadicInteger.from_value(Fraction(-1, 62), 5).at(4)
    252
    """

    __slots__ = ("modulus", "value", "prefix", "_reps")

    def __init__(self, modulus, value=None, prefix=None):
        modulus = check_scale(modulus)
        if (value is None) == (prefix is None):
            raise ValueError("exactly one of value and prefix is required")
        if value is not None:
            value = as_fraction(value)
            if gcd(value.denominator, modulus) != 1:
                raise ValueError(
                    "denominator %d shares a factor with scale %d"
                    % (value.denominator, modulus)
                )
        else:
            prefix = tuple(prefix)
            for j in prefix:
                if isinstance(j, bool) or not isinstance(j, int) or not 0 <= j < modulus:
                    raise ValueError("digits must be integers in [0, %d)" % modulus)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "_reps", {0: 0})

    def __setattr__(self, name, value):
        raise AttributeError("NadicInteger is immutable")

    @classmethod
    def iota(cls, z, modulus):
        """The canonical copy of an ordinary integer."""
        if isinstance(z, bool) or not isinstance(z, int):
            raise ValueError("iota embeds integers")
        return cls(modulus, value=Fraction(z))

    @classmethod
    def from_value(cls, value, modulus):
        return cls(modulus, value=value)

    @classmethod
    def from_prefix(cls, digits, modulus):
        return cls(modulus, prefix=digits)

    @property
    def is_exact(self):
        return self.value is not None

    @property
    def length(self):
        """Usable tower depth: None when unbounded."""
        return None if self.prefix is None else len(self.prefix)

    def _check_depth(self, k):
        if self.prefix is not None and k > len(self.prefix):
            raise ValueError(
                "depth %d exceeds recorded prefix of length %d" % (k, len(self.prefix))
            )

    def at(self, k):
        """The residue J_k in [0, N**k)."""
        if isinstance(k, bool) or not isinstance(k, int) or k < 0:
            raise ValueError("depth must be a nonnegative integer")
        got = self._reps.get(k)
        if got is not None:
            return got
        self._check_depth(k)
        if self.value is not None:
            m = self.modulus ** k
            rep = (self.value.numerator * pow(self.value.denominator, -1, m)) % m
        else:
            rep = 0
            w = 1
            for j in self.prefix[:k]:
                rep += w * j
                w *= self.modulus
        self._reps[k] = rep
        return rep

    def digit(self, n):
        """The base-N digit j_n in [0, N)."""
        if self.prefix is not None:
            if not 0 <= n < len(self.prefix):
                raise ValueError("digit %d is outside the recorded prefix" % n)
            return self.prefix[n]
        return (self.at(n + 1) - self.at(n)) // self.modulus ** n

    def segment(self, k, m):
        """The integer (J_m - J_k) / N**k for k <= m.

        >>> NadicInteger.from_value(Fraction(-1, 2), 3).segment(1, 3)
        4
        """
        if not 0 <= k <= m:
            raise ValueError("need 0 <= k <= m")
        return (self.at(m) - self.at(k)) // self.modulus ** k

    def _require_same(self, other):
        if not isinstance(other, NadicInteger):
            raise TypeError("expected a NadicInteger")
        if other.modulus != self.modulus:
            raise ValueError("mismatched scales %d and %d" % (self.modulus, other.modulus))

    def _from_tower(self, depth, tower_fn):
        """Prefix-form result whose residues are tower_fn(k) mod N**k."""
        reps = [tower_fn(k) % self.modulus ** k for k in range(depth + 1)]
        digits = [
            (reps[k + 1] - reps[k]) // self.modulus ** k for k in range(depth)
        ]
        return NadicInteger(self.modulus, prefix=digits)

    def __add__(self, other):
        self._require_same(other)
        if self.value is not None and other.value is not None:
            return NadicInteger(self.modulus, value=self.value + other.value)
        depth = min(x for x in (self.length, other.length) if x is not None)
        return self._from_tower(depth, lambda k: self.at(k) + other.at(k))

    def __neg__(self):
        if self.value is not None:
            return NadicInteger(self.modulus, value=-self.value)
        return self._from_tower(len(self.prefix), lambda k: -self.at(k))

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, m):
        """Multiply the tower by an integer scalar."""
        if isinstance(m, bool) or not isinstance(m, int):
            raise ValueError("scalar must be an integer")
        if self.value is not None:
            return NadicInteger(self.modulus, value=self.value * m)
        return self._from_tower(len(self.prefix), lambda k: self.at(k) * m)

    def zeta(self):
        """Recover an ordinary integer from its canonical copy.

        >>> NadicInteger.iota(-7, 3).zeta()
        -7
        """
        if self.value is None:
            raise ValueError("prefix towers do not determine an integer")
        if self.value.denominator != 1:
            raise ValueError("not in the image of the integers")
        return self.value.numerator

    def __eq__(self, other):
        if not isinstance(other, NadicInteger):
            return NotImplemented
        if self.modulus != other.modulus:
            return False
        if (self.value is None) != (other.value is None):
            return False
        if self.value is not None:
            return self.value == other.value
        return self.prefix == other.prefix

    def __hash__(self):
        return hash((self.modulus, self.value, self.prefix))

    def __repr__(self):
        if self.value is not None:
            return "NadicInteger(%r, scale=%d)" % (self.value, self.modulus)
        return "NadicInteger(prefix=%r, scale=%d)" % (list(self.prefix), self.modulus)

    def to_json(self):
        if self.value is not None:
            return {"value": format_fraction(self.value)}
        return {"prefix": list(self.prefix)}

    @classmethod
    def from_json(cls, obj, modulus):
        if not isinstance(obj, dict):
            raise ValueError("bad carrier object")
        if "value" in obj and "prefix" not in obj:
            return cls(modulus, value=as_fraction(obj["value"]))
        if "prefix" in obj and "value" not in obj:
            return cls(modulus, prefix=obj["prefix"])
        raise ValueError("carrier object needs exactly one of value and prefix")


class PrimeSeq:
    """A periodic sequence of primes, with products and depth lookups.

    ``PrimeSeq.of(N)`` is the ascending factorisation of N repeated
    forever; its block product reproduces N.

    >>> PrimeSeq.of(12).period
    (2, 2, 3)
    >>> PrimeSeq.of(12).pi(4)
    24
    >>> PrimeSeq((2, 3)).delta(6)
    2
    """

    __slots__ = ("period",)

    def __init__(self, period):
        period = tuple(period)
        if not period:
            raise ValueError("need at least one prime")
        for p in period:
            if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
                raise ValueError("%r is not prime" % (p,))
        object.__setattr__(self, "period", period)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeSeq is immutable")

    @classmethod
    def of(cls, scale):
        """The ascending prime factorisation of a scale, as a period."""
        return cls(prime_factors(check_scale(scale)))

    @property
    def omega(self):
        """Slots per block."""
        return len(self.period)

    @property
    def block(self):
        """Product of one period."""
        out = 1
        for p in self.period:
            out *= p
        return out

    def entry(self, n):
        if n < 0:
            raise ValueError("index must be nonnegative")
        return self.period[n % len(self.period)]

    def pi(self, k):
        """Product of the first k entries (pi(0) == 1)."""
        if k < 0:
            raise ValueError("depth must be nonnegative")
        full, rest = divmod(k, len(self.period))
        out = self.block ** full
        for i in range(rest):
            out *= self.period[i]
        return out

    def delta(self, m):
        """The depth k with pi(k) == m, if one exists.

        >>> PrimeSeq.of(12).delta(12)
        3
        """
        if m < 1:
            raise ValueError("need a positive target")
        k = 0
        acc = 1
        while acc < m:
            acc *= self.entry(k)
            k += 1
        if acc != m:
            raise ValueError("%d is not a partial product of %r" % (m, self.period))
        return k

    def __eq__(self, other):
        if not isinstance(other, PrimeSeq):
            return NotImplemented
        return self.period == other.period

    def __hash__(self):
        return hash(self.period)

    def __repr__(self):
        return "PrimeSeq(%r)" % (self.period,)
