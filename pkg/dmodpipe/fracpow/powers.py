"""
Rational powers P^a of P = (1/C)(d/dz + f) acting on z^γ k((z^(1/r))),
and the identities they satisfy:

* P^a·∂ = ∂·P^a and P^a·z = z·P^a + (a/C)·P^(a-1)
* ∂ζ·P^a = P^a·(∂ζ - a/ζ) with ∂ζ = -∂·∂·z and 1/ζ = -∂

Example:

.. code-block:: python

    >>> engine = FractionalPowerEngine(truncation=8)
    >>> sym = engine.symbol({-2: 1})
    >>> engine.check_heisenberg(sym, Fraction(1, 2)).passed
    True
"""
from fractions import Fraction
from math import ceil

from ..core import Component
from ..core.errors import InsufficientPrecision
from ..core.traits import Int
from ..exact import (TruncatedPuiseuxSeries, as_rational, evaluate,
                     format_rational, lcm)
from ..io.containers import IdentityCheckContainer, PowerTableContainer
from .symbol import apply_symbol, check_lattice, symbol_from_connection
from .table import check_addition, power_table, validate_table

__all__ = [
    'apply_power',
    'required_depth',
    'check_heisenberg',
    'check_radon_intertwiner',
    'FractionalPowerEngine',
]

# integer powers up to this one are compared with repeated direct application
BRUTE_FORCE_POWERS = 6
# depth of the addition check in table reports
ADDITION_DEPTH = 6


def _output_bound(sym, alpha, v, trunc):
    shift = alpha * Fraction(sym.d, sym.ram)
    bounds = []
    if v.trunc is not None:
        bounds.append(v.trunc + shift)
    if trunc is not None:
        bounds.append(as_rational(trunc))
    if not bounds:
        raise InsufficientPrecision(
            "P^a of an exact series needs an explicit truncation")
    return min(bounds)


def _terms_needed(sym, alpha, beta, bound):
    """ number of indices i with b + (a·d + i)/r below `bound` """
    return max(0, ceil(sym.ram * (bound - beta) - alpha * sym.d))


def required_depth(sym, alpha, v, trunc=None):
    """ table depth needed to apply P^a to `v` up to the output bound """
    alpha = as_rational(alpha)
    bound = _output_bound(sym, alpha, v, trunc)
    if v.order is None:
        return 0
    return max(0, _terms_needed(sym, alpha, v.order, bound) - 1)


def apply_power(sym, table, alpha, gamma, v, trunc=None):
    """
    P^a(Σ c_b z^b) = Σ c_b Σ_i p_i(a, b) z^(b + (a·d + i)/r).

    Parameters
    ----------
    sym: OperatorSymbol
    table: PowerTable
    alpha: rational
        the power a
    gamma: rational
        `v` lives in z^γ k((z^(1/r)))
    v: TruncatedPuiseuxSeries
    trunc: rational or None
        bound of the output; the bound `v` determines is used when None

    Returns
    -------
    TruncatedPuiseuxSeries
        in z^(γ + a·d/r) k((z^(1/r))), known below the output bound

    Raises
    ------
    InsufficientDepth
        if the table is too shallow for the bound
    """
    alpha = as_rational(alpha)
    check_lattice(gamma, v, sym.ram)
    bound = _output_bound(sym, alpha, v, trunc)
    shift = alpha * Fraction(sym.d, sym.ram)

    coeffs = {}
    for beta, c in v.items():
        for i in range(_terms_needed(sym, alpha, beta, bound)):
            value = evaluate(table.entry(i), alpha, beta)
            if value:
                e = beta + shift + Fraction(i, sym.ram)
                coeffs[e] = coeffs.get(e, 0) + c * value

    ram = lcm(v.ram, sym.ram, bound.denominator,
              *(e.denominator for e in coeffs))
    return TruncatedPuiseuxSeries(coeffs, ram=ram, trunc=bound)


def _test_vectors(sym, gamma, count):
    gamma = as_rational(gamma)
    return [TruncatedPuiseuxSeries.monomial(gamma + Fraction(k, sym.ram))
            for k in range(count)]


def _instance(name, v):
    return "{} on z^{}".format(name, format_rational(v.order))


def check_heisenberg(sym, table, alpha, trunc, gamma=0, vectors=None):
    """
    P^a·∂ = ∂·P^a and P^a·z = z·P^a + (a/C)·P^(a-1) on test monomials
    z^(γ + k/r), each side known up to `trunc` steps above its lowest
    exponent. For a ≤ 6 a nonnegative integer, P^a is also compared with
    repeated direct application of P.

    Returns
    -------
    IdentityCheckContainer
    """
    alpha = as_rational(alpha)
    trunc = as_rational(trunc)
    if vectors is None:
        vectors = _test_vectors(sym, gamma, sym.ram + 2)
    shift = alpha * Fraction(sym.d, sym.ram)
    step = Fraction(sym.d, sym.ram)

    def derivation(w):
        return apply_symbol(sym, w.order if w.order is not None else gamma,
                            w).scale(sym.C)

    failure = None
    checked = 0
    for v in vectors:
        beta = v.order
        bound = beta + shift + trunc

        # P^a ∂ = ∂ P^a
        lhs = apply_power(sym, table, alpha, beta, derivation(v), bound + step)
        rhs = derivation(apply_power(sym, table, alpha, beta, v, bound))
        checked += 1
        if failure is None and not lhs.agrees_with(rhs):
            failure = _instance("P^a d = d P^a", v)

        # P^a z = z P^a + (a/C) P^(a-1)
        lhs = apply_power(sym, table, alpha, beta, v.shift(1), bound + 1)
        rhs = apply_power(sym, table, alpha, beta, v, bound).shift(1) + \
            apply_power(sym, table, alpha - 1, beta, v, bound + 1).scale(
                alpha / sym.C)
        checked += 1
        if failure is None and not lhs.agrees_with(rhs):
            failure = _instance("P^a z = z P^a + (a/C) P^(a-1)", v)

        if alpha.denominator == 1 and 0 <= alpha <= BRUTE_FORCE_POWERS:
            brute = v
            for _ in range(int(alpha)):
                brute = apply_symbol(sym, brute.order if brute.order is not None
                                     else beta, brute)
            power = apply_power(sym, table, alpha, beta, v, bound)
            checked += 1
            if failure is None and not power.agrees_with(brute, bound):
                failure = _instance("P^a = P···P", v)

    return IdentityCheckContainer(
        identity='heisenberg',
        passed=failure is None,
        n_checked=checked,
        first_failure=failure,
        precision=trunc,
    )


def check_radon_intertwiner(f, alpha, trunc, gamma=0, table=None, vectors=None):
    """
    ∂ζ·P^a = P^a·(∂ζ - a/ζ) on test monomials, with the Fourier structure
    ∂ζ = -∂·∂·z and 1/ζ = -∂ realized on the connection `f`.

    Returns
    -------
    IdentityCheckContainer

    Raises
    ------
    RegularConnection
        if f has no term below z^-1
    """
    from ..tate import Realization

    alpha = as_rational(alpha)
    trunc = as_rational(trunc)
    sym = symbol_from_connection(f)
    if table is None:
        table = power_table(sym, sym.ram * ceil(trunc) + 2)
    real = Realization(sym.f)
    if vectors is None:
        vectors = _test_vectors(sym, gamma, sym.ram + 1)
    shift = alpha * Fraction(sym.d, sym.ram)
    loss = 1 + 2 * Fraction(sym.d, sym.ram)

    def dzeta(w):
        return -real.derivation(real.derivation(w.shift(1)))

    failure = None
    for v in vectors:
        beta = v.order
        bound = beta + shift + trunc

        lhs = dzeta(apply_power(sym, table, alpha, beta, v, bound))
        twisted = dzeta(v) + real.derivation(v).scale(alpha)
        rhs = apply_power(sym, table, alpha, beta, twisted, bound + loss)
        if not lhs.agrees_with(rhs):
            failure = _instance("dzeta P^a = P^a (dzeta - a/zeta)", v)
            break

    return IdentityCheckContainer(
        identity='radon intertwiner',
        passed=failure is None,
        n_checked=len(vectors),
        first_failure=failure,
        precision=trunc,
    )


class FractionalPowerEngine(Component):
    """
    Builds symbols and power tables on demand and runs the identity
    checks. Tables are cached per symbol and extended when a deeper one is
    needed.
    """
    depth = Int(
        None, allow_none=True,
        help='fixed table depth; chosen from the truncation when None',
    ).tag(config=True)
    truncation = Int(
        12, help='number of exponent steps compared by the checks'
    ).tag(config=True)

    def __init__(self, config=None, tool=None, **kwargs):
        super().__init__(config=config, parent=tool, **kwargs)
        self._tables = {}

    def symbol(self, f, r=None):
        return symbol_from_connection(f, r)

    def table(self, sym, depth=None):
        """ a table of `sym` of at least `depth` (cached) """
        if depth is None:
            depth = self.depth
        if depth is None:
            depth = sym.ram * self.truncation + 2
        cached = self._tables.get(sym)
        if cached is not None and cached.depth >= depth:
            return cached
        self.log.debug("building a power table of depth %d for %s", depth, sym)
        table = power_table(sym, depth, start=cached)
        self._tables[sym] = table
        return table

    def apply(self, sym, alpha, v, gamma=None, trunc=None):
        """
        P^a·v; with automatic depth the table is grown as needed, with a
        fixed depth `InsufficientDepth` is raised instead.
        """
        if gamma is None:
            gamma = v.order if v.order is not None else 0
        if self.depth is None:
            table = self.table(sym, required_depth(sym, alpha, v, trunc) + 2)
        else:
            table = self.table(sym)
        return apply_power(sym, table, alpha, gamma, v, trunc)

    def check_addition(self, sym, depth=None):
        return check_addition(self.table(sym, depth), depth)

    def check_heisenberg(self, sym, alpha, gamma=0):
        report = check_heisenberg(sym, self.table(sym), alpha,
                                  self.truncation, gamma)
        self._log_report(report)
        return report

    def check_radon_intertwiner(self, f, alpha, gamma=0):
        report = check_radon_intertwiner(f, alpha, self.truncation, gamma,
                                         table=self.table(self.symbol(f)))
        self._log_report(report)
        return report

    def _log_report(self, report):
        if report.passed:
            self.log.debug("%s holds on %d instances to precision %s",
                           report.identity, report.n_checked, report.precision)
        else:
            self.log.warning("%s fails: %s", report.identity,
                             report.first_failure)

    def table_report(self, sym, depth=None, alpha=None):
        """
        The power table with its structural checks (and the Heisenberg
        relations at `alpha` when given).

        Returns
        -------
        PowerTableContainer
        """
        table = self.table(sym, depth)
        checks = validate_table(table) + [
            check_addition(table, min(table.depth, ADDITION_DEPTH))]
        if alpha is not None:
            checks.append(self.check_heisenberg(sym, alpha))
        return PowerTableContainer(
            d=sym.d,
            ram=sym.ram,
            leading=sym.C,
            depth=table.depth,
            entries=table.entries,
            checks=checks,
            precision=None if alpha is None else self.truncation,
        )
