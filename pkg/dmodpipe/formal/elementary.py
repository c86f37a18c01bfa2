"""
Elementary modules on the punctured formal disk.

An elementary module is the pushforward along z ↦ z^r of a rank-one
connection d/dz + f(z) + residue/z, tensored with a unipotent Jordan block
of size m. Its rank is r·m.
"""
from fractions import Fraction

from ..core.errors import InsufficientPrecision, InvalidInput
from ..exact import TruncatedPuiseuxSeries, as_rational, frac_mod, format_rational

__all__ = ['ElementaryModule', 'kummer', 'exponential']


def _sign_canonical(f):
    """
    For r = 2, z^(1/2) ↦ -z^(1/2) multiplies z^(k/2) by (-1)^k; choose the
    representative whose lowest odd-k term has a positive coefficient.
    """
    for e, c in f.items():
        if (2 * e).numerator % 2:
            if c < 0:
                return f.map_terms(
                    lambda e, c: -c if (2 * e).numerator % 2 else c)
            break
    return f


class ElementaryModule:
    """
    (r, f, residue, unip), always stored in canonical form.

    Canonical form: f keeps only exponents < -1 and is exact, the z^-1
    coefficient of f is moved into the residue, and the residue is reduced
    into [0, 1) for r = 1 and into [0, 1/r) for r > 1. For r = 2 the sign
    of z^(1/2) is normalized as well; for r ≥ 3 the exponential part is
    kept as given.

    Parameters
    ----------
    f: TruncatedPuiseuxSeries
        exponential part, exponents in (1/r)Z
    residue: rational
        Kummer exponent
    r: int
        ramification index
    unip: int
        size of the unipotent block
    """
    __slots__ = ('r', 'f', 'residue', 'unip')

    def __init__(self, f=None, residue=0, r=1, unip=1):
        r = int(r)
        unip = int(unip)
        if r < 1:
            raise InvalidInput("ramification index must be ≥ 1, got {}".format(r))
        if unip < 1:
            raise InvalidInput("unipotent size must be ≥ 1, got {}".format(unip))
        if f is None:
            f = TruncatedPuiseuxSeries.zero(ram=r)
        if not isinstance(f, TruncatedPuiseuxSeries):
            f = TruncatedPuiseuxSeries(f, ram=r)
        if r % f.ram:
            raise InvalidInput("exponential part has ramification {}, "
                               "component has {}".format(f.ram, r))
        if f.trunc is not None and f.trunc <= -1:
            raise InsufficientPrecision(
                "exponential part must be known up to z^-1, known below z^{}"
                .format(f.trunc))

        residue = as_rational(residue) + f.coefficient(-1)
        polar = TruncatedPuiseuxSeries(
            {e: c for e, c in f.items() if e < -1}, ram=r)
        if r == 1:
            residue = frac_mod(residue)
        else:
            residue = frac_mod(residue, Fraction(1, r))
            if r == 2:
                polar = _sign_canonical(polar)

        self.r = r
        self.f = polar
        self.residue = residue
        self.unip = unip

    @property
    def slope(self):
        """ -ord(f) - 1, 0 for regular components """
        if self.f.is_zero:
            return Fraction(0)
        return -self.f.order - 1

    @property
    def rank(self):
        return self.r * self.unip

    @property
    def irregularity(self):
        return self.slope * self.rank

    @property
    def is_regular(self):
        return self.f.is_zero

    @property
    def is_trivial(self):
        """ regular with residue 0: carries exactly one horizontal section """
        return self.f.is_zero and self.residue == 0

    @property
    def leading_coefficient(self):
        return self.f.leading_coefficient

    def key(self):
        return (self.r, tuple(self.f.items()), self.residue, self.unip)

    def replace(self, f=None, residue=None, r=None, unip=None):
        return ElementaryModule(
            self.f if f is None else f,
            self.residue if residue is None else residue,
            self.r if r is None else r,
            self.unip if unip is None else unip,
        )

    def tensor_kummer(self, gamma):
        return self.replace(residue=self.residue + as_rational(gamma))

    def dual(self):
        return self.replace(f=-self.f, residue=-self.residue)

    def __eq__(self, other):
        if not isinstance(other, ElementaryModule):
            return NotImplemented
        return self.key() == other.key()

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        parts = []
        if self.r != 1:
            parts.append("r={}".format(self.r))
        if not self.f.is_zero:
            parts.append("f={}".format(self.f))
        parts.append("residue={}".format(format_rational(self.residue)))
        if self.unip != 1:
            parts.append("unip={}".format(self.unip))
        return "E({})".format(", ".join(parts))


def kummer(alpha, unip=1):
    """ K^alpha ⊗ U_unip """
    return ElementaryModule(residue=alpha, unip=unip)


def exponential(terms, residue=0, r=1, unip=1):
    """ elementary module with exponential part Σ c z^e given as {e: c} """
    return ElementaryModule(TruncatedPuiseuxSeries(terms, ram=r), residue, r, unip)
