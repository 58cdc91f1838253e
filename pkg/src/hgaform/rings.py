"""Exact coefficient rings: the integers, the rationals, and the integers mod m."""

from fractions import Fraction


class Ring:
    """A commutative ring with unit whose elements are Python numbers.

    Subclasses only need to say how to bring a raw number into canonical
    form; chain arithmetic calls :meth:`normalize` after every operation
    so that zero coefficients can be pruned by a plain ``== 0`` test.
    """

    name = "?"
    is_field = False

    zero = 0
    one = 1

    def normalize(self, c):
        raise NotImplementedError

    def divide(self, a, b):
        raise ZeroDivisionError("%s is not a field" % self.name)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class Integers(Ring):
    name = "ZZ"

    def normalize(self, c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError("%r is not an integer" % c)
            return c.numerator
        return int(c)


class Rationals(Ring):
    name = "QQ"
    is_field = True
    one = Fraction(1)
    zero = Fraction(0)

    def normalize(self, c):
        return Fraction(c)

    def divide(self, a, b):
        return Fraction(a) / Fraction(b)


class IntegersMod(Ring):
    def __init__(self, modulus):
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        self.modulus = modulus
        self.name = "ZZ/%d" % modulus
        self.is_field = _is_prime(modulus)

    def normalize(self, c):
        if isinstance(c, Fraction):
            c = c.numerator * pow(c.denominator, -1, self.modulus)
        return int(c) % self.modulus

    def divide(self, a, b):
        if not self.is_field:
            return Ring.divide(self, a, b)
        return a * pow(b, -1, self.modulus) % self.modulus


def _is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


ZZ = Integers()
QQ = Rationals()


def ring_from_name(name):
    """Parse ``ZZ``, ``QQ``, ``ZZ/7`` (also ``GF7``, ``Z``, ``Q``)."""
    key = name.strip().upper()
    if key in ("ZZ", "Z", "INTEGERS"):
        return ZZ
    if key in ("QQ", "Q", "RATIONALS"):
        return QQ
    for prefix in ("ZZ/", "Z/", "GF"):
        if key.startswith(prefix):
            return IntegersMod(int(key[len(prefix):]))
    raise ValueError("unknown coefficient ring %r" % name)
