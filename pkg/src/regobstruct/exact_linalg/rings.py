"""Coefficient rings: the integers, the rationals, and prime fields.

Elements are plain Python objects (int for Z and GF(p), Fraction for Q);
the ring object supplies the arithmetic so that algorithms can stay
generic.  GF(p) residues are kept reduced to 0 <= r < p.  Every element
type is falsy exactly when it is zero; hot loops rely on that.
"""

from fractions import Fraction


class Ring:
    is_field = False
    ZERO = 0
    ONE = 1

    def zero(self):
        return self.ZERO

    def one(self):
        return self.ONE

    def is_zero(self, a):
        return not a

    def convert(self, a):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def scalar_to_json(self, a):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = "Z"

    def convert(self, a):
        if type(a) is int:
            return a
        if isinstance(a, int):
            return int(a)
        if isinstance(a, Fraction):
            if a.denominator != 1:
                raise ValueError(f"{a} is not an integer")
            return int(a)
        raise TypeError(f"cannot coerce {a!r} into Z")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in Z")

    def scalar_to_json(self, a):
        return a if -(2**63) < a < 2**63 else str(a)


class RationalField(Ring):
    name = "Q"
    is_field = True
    ZERO = Fraction(0)
    ONE = Fraction(1)

    def convert(self, a):
        if type(a) is Fraction:
            return a
        if isinstance(a, (int, Fraction, str)):
            return Fraction(a)
        raise TypeError(f"cannot coerce {a!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / Fraction(a)

    def scalar_to_json(self, a):
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


class PrimeField(Ring):
    is_field = True

    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"

    def convert(self, a):
        if type(a) is int:
            return a % self.p
        if isinstance(a, int):
            return int(a) % self.p
        if isinstance(a, Fraction):
            if a.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {a} vanishes mod {self.p}")
            return (a.numerator * pow(a.denominator, -1, self.p)) % self.p
        raise TypeError(f"cannot coerce {a!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def scalar_to_json(self, a):
        return a


ZZ = IntegerRing()
QQ = RationalField()

_prime_fields = {}


def GF(p):
    """Prime field GF(p); instances are cached so GF(2) is GF(2)."""
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def ring_from_name(name):
    """Parse "Z", "Q", "F2", "F3", ... into a ring object."""
    if name == "Z":
        return ZZ
    if name == "Q":
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return GF(int(name[1:]))
    raise ValueError(f"unknown ring {name!r}")
