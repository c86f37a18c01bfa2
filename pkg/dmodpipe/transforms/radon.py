"""
The local Radon transform at a finite point: every slope-s part is
tensored with the Kummer module K^(λ(s+1)).
"""
import logging

from ..core.errors import IntegralLambda, InvalidInput, UnsupportedRamification
from ..exact import as_rational, format_rational
from ..formal import (FormalModule, determinant_exponent, exponential,
                      newton_slopes, twist_operator)
from ..io.containers import RadonCrosscheckContainer

log = logging.getLogger(__name__)

__all__ = ['check_lambda', 'radon_local', 'radon_local_crosscheck']


def check_lambda(lam):
    """ λ as a Fraction; raises `IntegralLambda` for integers """
    lam = as_rational(lam)
    if lam.denominator == 1:
        raise IntegralLambda(
            "the Radon transform needs λ outside Z, got {}".format(lam))
    return lam


def radon_local(module, lam):
    """
    ⊕_s M^s ⊗ K^(λ(s+1)).

    Raises
    ------
    IntegralLambda
        if λ is an integer
    """
    lam = check_lambda(lam)
    return module.map(lambda c: c.tensor_kummer(lam * (c.slope + 1)))


def radon_local_crosscheck(f, residue=0, lam=None, trunc=40, oracle=None):
    """
    Compare both sides of Four(M) ⊗ K^λ = Four(M ⊗ K^(λ(1+s))) on the
    realization oracle, for the rank-one connection d/dz + f + residue/z.

    The left side twists the annihilator of Four(M); the right side is
    the annihilator of Four of the `radon_local` output. Newton slopes
    and determinants must agree.

    Returns
    -------
    RadonCrosscheckContainer

    Raises
    ------
    IntegralLambda
        if λ is an integer
    InvalidInput
        if the connection is regular
    """
    from ..tate import LocalFourierOracle

    lam = check_lambda(lam)
    component = exponential(f or {}, residue)
    if component.is_regular:
        raise InvalidInput("the Radon cross-check needs an irregular connection")
    if component.r != 1:
        raise UnsupportedRamification(
            "the Radon cross-check needs an unramified connection")
    if oracle is None:
        oracle = LocalFourierOracle(truncation=trunc)

    symbolic = radon_local(FormalModule([component]), lam)
    (twisted_input,) = symbolic

    left = twist_operator(
        oracle.annihilator(oracle.realize(component.f, component.residue)), lam)
    right = oracle.annihilator(
        oracle.realize(twisted_input.f, twisted_input.residue))

    slopes_left, _ = newton_slopes(left)
    slopes_right, _ = newton_slopes(right)
    det_left = determinant_exponent(left)
    det_right = determinant_exponent(right)

    report = RadonCrosscheckContainer(
        agree=slopes_left == slopes_right and det_left == det_right,
        lam=lam,
        symbolic=symbolic,
        slopes_twisted=slopes_left,
        slopes_transformed=slopes_right,
        determinant_twisted=det_left,
        determinant_transformed=det_right,
        precision=oracle.truncation,
    )
    if report.agree:
        log.debug("radon cross-check agrees for λ = %s at window %d",
                  format_rational(lam), oracle.truncation)
    else:
        log.warning("radon cross-check disagrees for λ = %s: %s vs %s",
                    format_rational(lam), det_left, det_right)
    return report
