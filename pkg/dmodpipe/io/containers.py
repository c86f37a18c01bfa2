"""
Container structures for the reports produced by the oracles, the
transform rules and the identity checks
"""
from ..core import Container, Field, Map

__all__ = [
    'GrowthVerdict',
    'LocalFourierContainer',
    'TopologyContainer',
    'TransformBookkeeping',
    'InfinityDecomposition',
    'TransformContainer',
    'RadonCrosscheckContainer',
    'IdentityCheckContainer',
    'PowerTableContainer',
    'AnalysisContainer',
    'TransformedPoint',
    'TransformedType',
    'RigidityContainer',
    'CONTRACTING',
    'EXPANDING',
    'INCONCLUSIVE',
]

CONTRACTING = 'contracting'
EXPANDING = 'expanding'
INCONCLUSIVE = 'inconclusive'


class GrowthVerdict(Container):
    verdict = Field(INCONCLUSIVE, "contracting, expanding or inconclusive")
    operator = Field("", "the classified operator")
    witness = Field([], "minimal z-order of the iterates, per generator",
                    exact=False)
    inverse_witness = Field([], "the same for the inverse operator",
                            exact=False)
    precision = Field(None, "truncation in effect")


class LocalFourierContainer(Container):
    rank_out = Field(0, "rank of the transform (rank + irregularity)")
    slopes_out = Field([], "Newton slopes of the annihilator, [slope, mult]",
                       exact=False)
    residue_out = Field(None, "Kummer residue of a regular rank one output",
                        exact=False)
    operator = Field(None, "annihilating operator in zeta, d/dzeta",
                     exact=False)
    order = Field(0, "order of the annihilating operator")
    precision = Field(None, "truncation in effect")
    mode = Field('oracle', "how the result was obtained")


class TopologyContainer(Container):
    n = Field(0, "requested z-adic depth")
    forward = Field(0, "least m with zeta^m L inside z^(o+n)k[[z]]",
                    exact=False)
    backward = Field(0, "largest m with z^(o'+n)k[[z]] inside zeta^m L",
                     exact=False)
    lattice_order = Field(0, "lowest z-order o of the lattice generators")
    lattice_conductor = Field(0, "least o' with z^o' k[[z]] inside L",
                              exact=False)
    precision = Field(None, "truncation in effect")


class TransformBookkeeping(Container):
    flavor = Field("", "transform flavor, e.g. 0-infty")
    rank_out = Field(0, "rank of the transformed module")
    irr_out = Field(0, "irregularity of the transformed module")
    slopes_out = Field([], "slope multiset as [slope, multiplicity]")
    class_label = Field(None, "leading-term class x, or 'infty'")


class InfinityDecomposition(Container):
    over1 = Field(None, "components of slope > 1")
    classes = Field(Map(), "leading-term class -> components of slope <= 1")


class TransformContainer(Container):
    mode = Field('exact', "exact or bookkeeping")
    module = Field(None, "the transformed formal module (exact mode)")
    rank = Field(0, "rank of the result")
    slopes = Field([], "slope multiset as [slope, multiplicity]")
    class_label = Field(None, "class label of a transform at infinity")
    notes = Field([], "derived rules and normalization caveats")
    checks = Field([], "cross-check reports")
    precision = Field(None, "truncation in effect")


class RadonCrosscheckContainer(Container):
    agree = Field(False, "all comparisons agree")
    lam = Field(None, "the twisting parameter")
    symbolic = Field(None, "radon_local of the input")
    slopes_twisted = Field([], "slopes of Four(M) twisted at infinity",
                           exact=False)
    slopes_transformed = Field([], "slopes of Four of the twisted input",
                               exact=False)
    determinant_twisted = Field(None, "determinant exponent, left side",
                                exact=False)
    determinant_transformed = Field(None, "determinant exponent, right side",
                                    exact=False)
    precision = Field(None, "truncation in effect")


class IdentityCheckContainer(Container):
    identity = Field("", "name of the checked identity")
    passed = Field(False, "True if every tested instance holds")
    n_checked = Field(0, "number of instances tested")
    first_failure = Field(None, "description of the first failing instance")
    precision = Field(None, "truncation in effect, None for polynomial identities")


class PowerTableContainer(Container):
    d = Field(0, "degree offset in steps of 1/r")
    ram = Field(1, "ramification index r")
    leading = Field(None, "leading coefficient C")
    depth = Field(0, "largest index I of the table")
    entries = Field([], "p_i(a, b) as {'i,j': coefficient}")
    checks = Field([], "structural identity reports")
    precision = Field(None, "truncation of the Heisenberg check, if run")


class AnalysisContainer(Container):
    module = Field(None, "canonical form of the input")
    rank = Field(0, "rank")
    irregularity = Field(0, "irregularity")
    slopes = Field([], "slope multiset as [slope, multiplicity]")
    hor_rank = Field(0, "number of horizontal sections")
    phi_mid_rank = Field(0, "rank of the vanishing cycles of the middle extension")
    oracle_ranks = Field([], "oracle rank of Four(0,∞) per rank-one component",
                         exact=False)
    precision = Field(None, "truncation in effect")


class TransformedPoint(Container):
    label = Field("", "point label")
    weight = Field(1, "degree weight of the point")
    phi = Field(None, "vanishing cycles (exact mode)")
    psi = Field(None, "nearby cycles (exact mode)")
    bookkeeping = Field(None, "invariants only (bookkeeping mode)")
    exact = Field(True, "False for bookkeeping entries")


class TransformedType(Container):
    transform = Field("", "fourier or radon")
    mode = Field('exact', "exact or bookkeeping")
    rank_out = Field(0, "rank of the transformed local system")
    points_out = Field([], "list of TransformedPoint")
    notes = Field([], "assumptions and caveats")
    precision = Field(None, "truncation in effect")


class RigidityContainer(Container):
    rank = Field(0, "rank of the local system")
    genus = Field(0, "genus of the curve")
    euler_char = Field(0, "Euler characteristic of the middle extension")
    rigidity_index = Field(0, "Euler characteristic of END")
    precision = Field(None, "truncation in effect")
