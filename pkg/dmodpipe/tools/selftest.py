"""
Run the exact acceptance suite of dmodpipe.

Every check is exact at its stated truncation; the report lists one
entry per check and ``passed`` is true only if all of them hold.
"""
import sys
from fractions import Fraction

from tqdm import tqdm

from ..core.traits import Dict, Int
from ..exact import TruncatedPuiseuxSeries, bipoly, is_integral, pochhammer_ratio
from ..formal import FormalModule, exponential, kummer
from ..fracpow import (FractionalPowerEngine, PowerTable, check_addition,
                       check_radon_intertwiner, power_table,
                       symbol_from_connection)
from ..globalcalc import (FormalPoint, FormalType, fourier_formal_type,
                          fourier_rank, radon_formal_type, radon_rank,
                          rigidity_index, to_formal_type)
from ..io.containers import (CONTRACTING, EXPANDING, INCONCLUSIVE,
                             IdentityCheckContainer)
from ..quiver import (canonical_morphism, dual_pair, dual_quad,
                      horizontal_quotient, image_quad, j_mid, j_shriek,
                      j_star, pairs_isomorphic, phi, psi, quads_isomorphic)
from ..tate import (GrowthOperator, LocalFourierOracle, Realization,
                    classify_growth, zeta_action)
from ..transforms import radon_local, radon_local_crosscheck
from ..utils import RandomObjectGenerator
from .utils import DModTool

__all__ = ['SelfTestTool']

S = TruncatedPuiseuxSeries
half = Fraction(1, 2)
third = Fraction(1, 3)

#: one connection per slope of the contraction grid
GRID_CONNECTIONS = {
    Fraction(0): S({}),
    half: S({Fraction(-3, 2): 1}, ram=2),
    Fraction(1): S({-2: 1}),
    Fraction(2): S({-3: 1}),
}


def _residues(*residues):
    return FormalModule([kummer(Fraction(a)) for a in residues])


def _kummer_type():
    return FormalType(1, [FormalPoint('0', _residues('1/3')),
                          FormalPoint('inf', _residues('2/3'))])


def _hypergeometric():
    return FormalType(2, [
        FormalPoint('0', _residues('1/2', '1/3')),
        FormalPoint('1', _residues('1/4', '1/5')),
        FormalPoint('inf', _residues('1/6', '11/20')),
    ])


class _Failure(Exception):
    pass


def _expect(condition, instance):
    if not condition:
        raise _Failure(instance)


class SelfTestTool(DModTool):
    description = __doc__
    name = 'dmod selftest'

    seed = Int(0, help='seed of the random objects').tag(config=True)
    trunc = Int(30, help='truncation of the oracle checks').tag(config=True)
    stability = Int(10, help='truncation increase of the stability check'
                    ).tag(config=True)

    aliases = Dict({
        'seed': 'SelfTestTool.seed',
        'trunc': 'SelfTestTool.trunc',
    })
    examples = 'dmod selftest --output selftest.json'

    def setup(self):
        self.generator = RandomObjectGenerator(seed=self.seed, max_dim=5)
        self.checks = [
            ('kummer local fourier', self.check_kummer_fourier),
            ('gamma ratio', self.check_gamma_ratio),
            ('irregular local fourier', self.check_irregular_fourier),
            ('contraction grid', self.check_contraction_grid),
            ('power tables', self.check_power_tables),
            ('radon intertwiner', self.check_intertwiner),
            ('local radon', self.check_local_radon),
            ('quiver identities', self.check_quivers),
            ('rigidity', self.check_rigidity),
            ('rank formulas', self.check_rank_formulas),
            ('stability', self.check_stability),
        ]

    def start(self):
        self.reports = []
        for identity, check in tqdm(self.checks, desc='selftest',
                                    disable=not sys.stderr.isatty()):
            report = IdentityCheckContainer(identity=identity)
            try:
                report.n_checked, report.precision = check()
                report.passed = True
            except _Failure as failure:
                report.first_failure = str(failure)
            except Exception as err:
                self.log.debug("%s raised", identity, exc_info=True)
                report.first_failure = '{}: {}'.format(
                    err.__class__.__name__, err)
            if not report.passed:
                self.log.warning("%s fails: %s", identity, report.first_failure)
            self.reports.append(report)

    def finish(self):
        self.write_report({
            'checks': self.reports,
            'passed': all(r.passed for r in self.reports),
        }, precision=self.trunc)

    # the checks return (number of instances, truncation)

    def check_kummer_fourier(self):
        oracle = LocalFourierOracle(parent=self, truncation=self.trunc)
        alphas = [half, third, Fraction(-1, 4), Fraction(0), Fraction(-1)]
        for alpha in alphas:
            report = oracle.local_fourier_invariants(residue=alpha)
            _expect(report.rank_out == 1 and report.slopes_out == [[0, 1]]
                    and is_integral(report.residue_out - alpha - 1),
                    "alpha = {}".format(alpha))
        return len(alphas), self.trunc

    def check_gamma_ratio(self):
        real = Realization(residue=half)
        v = S({0: 1})
        for k in range(1, 11):
            v = zeta_action(real, v)
            _expect(v == S({k: pochhammer_ratio(half, k)}), "k = {}".format(k))
        return 10, None

    def check_irregular_fourier(self):
        oracle = LocalFourierOracle(parent=self, truncation=40)
        cases = [({-2: -1}, 1), ({-3: 1}, 2), ({-4: 2}, 3)]
        for f, s in cases:
            report = oracle.local_fourier_invariants(f)
            _expect(report.rank_out == 1 + s
                    and report.slopes_out == [[Fraction(s, 1 + s), 1 + s]],
                    "f = {}".format(f))
        return len(cases), 40

    def check_contraction_grid(self):
        count = 0
        for slope, f in sorted(GRID_CONNECTIONS.items()):
            real = Realization(f, residue=half, window=40)
            for a in (1, 2, 3):
                if slope < a - 1:
                    expected = CONTRACTING
                elif slope > a - 1:
                    expected = EXPANDING
                else:
                    expected = INCONCLUSIVE
                verdict = classify_growth(GrowthOperator.z_power_derivation(a),
                                          real).verdict
                _expect(verdict == expected,
                        "slope {}, a = {}: {}".format(slope, a, verdict))
                count += 1
        return count, 40

    def check_power_tables(self):
        count = 0
        for f in ({-2: 1}, {-2: 2}, {-2: -3}, {-3: 1, -2: 1}):
            table = power_table(symbol_from_connection(f), 6)
            _expect(check_addition(table, 6).passed, "addition, f = {}".format(f))
            count += 1

        for c in (1, 2, -3):
            table = power_table(symbol_from_connection({-2: c}), 1)
            inv = Fraction(1, c)
            _expect(table.entries[1] == bipoly(
                {(1, 1): inv, (2, 0): -inv, (1, 0): inv}), "p_1, C = {}".format(c))
            count += 1

        engine = FractionalPowerEngine(tool=self)
        sym = engine.symbol({-2: 1})
        for alpha in (2, half, -third):
            _expect(engine.check_heisenberg(sym, alpha).passed,
                    "heisenberg, alpha = {}".format(alpha))
            count += 1

        table = power_table(sym, 6)
        entries = list(table.entries)
        entries[1] = entries[1] + 1
        _expect(not check_addition(PowerTable(sym, entries)).passed,
                "corrupted table accepted")
        return count + 1, engine.truncation

    def check_intertwiner(self):
        cases = [({-2: -1}, third), ({-3: 1}, half)]
        for f, alpha in cases:
            report = check_radon_intertwiner(f, alpha, self.trunc)
            _expect(report.passed, report.first_failure)
        return len(cases), self.trunc

    def check_local_radon(self):
        oracle = LocalFourierOracle(parent=self, truncation=40)
        lams = (third, half, Fraction(-2, 5))
        count = 0
        for lam in lams:
            for f in ({-2: -1}, {-3: 1}):
                report = radon_local_crosscheck(f, lam=lam, oracle=oracle)
                _expect(report.agree, "f = {}, lambda = {}".format(f, lam))
                count += 1
            for alpha in (0, Fraction(1, 4)):
                _expect(radon_local(_residues(alpha), lam) == _residues(alpha + lam),
                        "K^{} with lambda = {}".format(alpha, lam))
                count += 1

        for _ in range(50):
            module = self.generator.random_module()
            _expect(radon_local(radon_local(module, third), -third) == module,
                    "double application on {!r}".format(module))
        return count + 50, 40

    def check_quivers(self):
        gen = self.generator
        for _ in range(200):
            p = gen.random_pair()
            _expect(psi(j_star(p)) == p and psi(j_shriek(p)) == p
                    and phi(j_star(p)) == p and phi(j_shriek(p)) == p,
                    "extensions of {!r}".format(p))
            _expect(pairs_isomorphic(dual_pair(dual_pair(p)), p),
                    "double dual of {!r}".format(p))
            _expect(pairs_isomorphic(phi(j_mid(p)), horizontal_quotient(p)),
                    "middle extension of {!r}".format(p))
            _expect(quads_isomorphic(dual_quad(j_star(p)), j_shriek(dual_pair(p))),
                    "dual of the extension of {!r}".format(p))
            source, target = j_star(p), j_shriek(p)
            _expect(image_quad(canonical_morphism(p), source, target) == j_mid(p),
                    "image of j_! -> j_* for {!r}".format(p))
        for _ in range(200):
            q = gen.random_quad()
            _expect(quads_isomorphic(dual_quad(dual_quad(q)), q),
                    "double dual of {!r}".format(q))
        return 400, None

    def check_rigidity(self):
        rank_one = FormalType(1, [
            FormalPoint('0', FormalModule([exponential({-2: 1}, third)])),
            FormalPoint('inf', FormalModule([exponential({-3: 2, -2: 1})])),
        ])
        hypergeometric = _hypergeometric()
        four_points = FormalType(2, hypergeometric.points + [
            FormalPoint('2', _residues('1/7', '2/7'))])
        _expect(rigidity_index(rank_one) == 2, "rank one")
        _expect(rigidity_index(hypergeometric) == 2, "hypergeometric")
        _expect(rigidity_index(four_points) == 0, "four points")

        for ft in (_kummer_type(), hypergeometric):
            for lam in (third, half):
                # Kummer with λ = 1/3 is punctual at infinity
                if ft.rank == 1 and lam == third:
                    continue
                there = to_formal_type(radon_formal_type(ft, lam))
                _expect(rigidity_index(there) == rigidity_index(ft),
                        "radon with lambda = {}".format(lam))
            there = to_formal_type(fourier_formal_type(ft))
            _expect(rigidity_index(there) == rigidity_index(ft), "fourier")

        gen = RandomObjectGenerator(seed=self.seed, max_rank=3)
        for _ in range(100):
            ft = gen.random_formal_type()
            _expect(rigidity_index(ft) % 2 == 0, "odd rigidity of {!r}".format(ft))
        return 109, None

    def check_rank_formulas(self):
        kummer_type = _kummer_type()
        e_inverse_z = FormalType(1, [
            FormalPoint('0', FormalModule([exponential({-2: -1})]))])
        gaussian = FormalModule([exponential({-3: 1})])
        two_points = FormalType(1, [
            FormalPoint('0', _residues('1/3')),
            FormalPoint('1', _residues('1/4')),
            FormalPoint('inf', _residues('5/12')),
        ])
        _expect(fourier_rank(kummer_type) == 1, "Kummer")
        _expect(fourier_rank(e_inverse_z) == 2, "e^(1/z)")
        _expect(fourier_rank(FormalType(1), psi_inf=gaussian) == 1, "gaussian")
        _expect(fourier_rank(two_points) == 2, "two points")

        for ft in (kummer_type, two_points, _hypergeometric()):
            _expect(fourier_formal_type(ft).rank_out == fourier_rank(ft),
                    "assembled fourier rank")
        hypergeometric = _hypergeometric()
        _expect(radon_formal_type(hypergeometric, half).rank_out
                == radon_rank(hypergeometric), "assembled radon rank")
        return 8, None

    def check_stability(self):
        low = LocalFourierOracle(parent=self, truncation=40)
        high = LocalFourierOracle(parent=self, truncation=40 + self.stability)
        cases = [({}, half), ({}, third), ({-2: -1}, 0), ({-3: 1}, 0),
                 ({-2: 2}, third)]
        for f, residue in cases:
            a = low.local_fourier_invariants(f, residue)
            b = high.local_fourier_invariants(f, residue)
            _expect((a.rank_out, a.slopes_out, a.residue_out)
                    == (b.rank_out, b.slopes_out, b.residue_out),
                    "f = {}, residue = {}".format(f, residue))
        return len(cases), 40 + self.stability


def main():
    sys.exit(SelfTestTool().run())
