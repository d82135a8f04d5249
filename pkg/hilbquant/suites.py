"""Named verification suites with a wall-clock budget.

Each suite expands into cases. A case is (name, cost, thunk) where the thunk
returns (ok, witness). Cases are run cheapest first; once the budget is spent the
remaining cases are reported as skipped, never silently dropped.
"""
import time
from dataclasses import dataclass, field

from .beads import bead_check
from .combinat import e_lambda, partitions_of, transpose
from .config import MAX_SECONDS
from .divisors import commutator_check, degree_scaling_check, golden_check
from .eoperator import e_operator
from .errors import HilbQuantError, InvalidSelector
from .exactalg import coefficient_field, matrices_equal, ratfunc_eq, reduce_mod_theta2
from .fock import fock_space
from .golden import golden_e_alpha, golden_gram
from .logger import get_logger
from .minors import extremal_pair_check, minor_diagonalization_check
from .omega import factorization_check, punctual_check, symmetry_check, vacuum_check
from .perturbation import perturbation_check
from .residues import residue_check
from .surface import Root, surface
from .symfun import operator_A, operator_B, schur_in_powersums

logger = get_logger(__name__)


@dataclass
class CaseResult:
    name: str
    status: str
    seconds: float = 0.0
    witness: object = None

    def to_dict(self) -> dict:
        payload = {'name': self.name, 'status': self.status, 'seconds': round(self.seconds, 3)}
        if self.witness is not None:
            payload['witness'] = self.witness
        return payload


@dataclass
class SuiteReport:
    suite: str
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status != 'fail' for r in self.results)

    def counts(self) -> dict:
        counts = {'pass': 0, 'fail': 0, 'skip': 0}
        for r in self.results:
            counts[r.status] += 1
        return counts

    def to_dict(self) -> dict:
        return {
            'suite': self.suite,
            'passed': self.passed,
            'counts': self.counts(),
            'results': [r.to_dict() for r in self.results],
        }


# ---------- kernel checks ----------

def _localization_check(max_n: int):
    for n in range(max_n + 1):
        sd = surface(n)
        cf = sd.cf
        total = cf.zero
        for e in sd.euler:
            total += 1 / e
        if not ratfunc_eq(total, 1 / ((n + 1) * cf.t1 * cf.t2)):
            return False, {'n': n}
    return True, None


def _vacuum_chain_check(max_m: int):
    """e(empty) (e((m-1)) - e((m))) = -x^(m-1)."""
    cf = coefficient_field(1)
    empty = e_lambda((), cf)
    for m in range(1, max_m + 1):
        previous = (m - 1,) if m > 1 else ()
        if not ratfunc_eq(empty * (e_lambda(previous, cf) - e_lambda((m,), cf)), -cf.x ** (m - 1)):
            return False, {'m': m}
    return True, None


def _theta_multiplicative_check():
    cf = coefficient_field(1)
    t1, t2, u = cf.t1, cf.t2, cf.u
    samples = [t1 * t2 + u, 1 / (t1 - t2), (t1 + t2) * u / (1 + t1), (t1 ** 2 - 3 * t2) / (u - t2)]
    for a in samples:
        for b in samples:
            if reduce_mod_theta2(a * b, cf) != reduce_mod_theta2(a, cf) * reduce_mod_theta2(b, cf):
                return False, {'a': str(a), 'b': str(b)}
    return True, None


def _golden_operator_checks():
    space = fock_space(1, 'e')
    if not matrices_equal(space.gram_normalized(2), golden_gram()):
        return False, {'matrix': 'gram'}
    E = space.to_normalized(e_operator(1, 'e').e_alpha_matrix(2, Root(1, 2)), 2)
    if not matrices_equal(E, golden_e_alpha()):
        return False, {'matrix': 'E_alpha'}
    return golden_check()


def _eigen_lemma_check(max_degree: int):
    cf = coefficient_field(1)
    for d in range(max_degree + 1):
        for lam in partitions_of(d):
            s = schur_in_powersums(lam, cf)
            if not operator_A(s).equals(s.scale(e_lambda(lam, cf))):
                return False, {'operator': 'A', 'lambda': list(lam)}
            if not operator_B(s).equals(s.scale(e_lambda(transpose(lam), cf))):
                return False, {'operator': 'B', 'lambda': list(lam)}
    return True, None


def _roots(n):
    return surface(n).roots()


def _intervals(n):
    return [(r.i, r.j) for r in _roots(n)]


# ---------- registry ----------

def _pick(value, defaults):
    return [value] if value is not None else list(defaults)


def suite_cases(suite: str, m=None, n=None, i=None, j=None) -> list:
    """[(name, cost, thunk)] for one suite; m, n, i, j narrow the sweep."""
    suite = resolve_suite(suite)
    cases = []
    if suite == 'kernel':
        cases.append(('localization n<=8', 1, lambda: _localization_check(8)))
        cases.append(('vacuum chain m<=6', 1, lambda: _vacuum_chain_check(6)))
        cases.append(('mod theta^2 multiplicative', 1, _theta_multiplicative_check))
    elif suite == 'golden':
        cases.append(('m=2 n=1 gram, E_alpha, M_D, M_omega', 5, _golden_operator_checks))
    elif suite == 'commute':
        for mm, nn in ((2, 1), (3, 1), (2, 2), (4, 1), (3, 2)):
            if (m is None or m == mm) and (n is None or n == nn):
                cases.append((f'm={mm} n={nn}', mm ** 3 * nn ** 3, lambda mm=mm, nn=nn: commutator_check(mm, nn)))
        if m is not None and n is not None and not cases:
            cases.append((f'm={m} n={n}', m ** 3 * n ** 3, lambda: commutator_check(m, n)))
    elif suite == 'extremal-pairs':
        for mm in _pick(m, (2, 3, 4)):
            for nn in _pick(n, (1, 2)):
                for ii, jj in ([(i, j)] if i is not None and j is not None else _intervals(nn)):
                    cases.append((f'm={mm} n={nn} [{ii},{jj}]', mm ** 3 * nn ** 2,
                                  lambda mm=mm, nn=nn, ii=ii, jj=jj: extremal_pair_check(mm, nn, ii, jj)))
    elif suite == 'eigen-lemma':
        cases.append(('A(q) and B(q) on s_lambda, |lambda|<=5', 3, lambda: _eigen_lemma_check(5)))
    elif suite == 'vanishing':
        for mm in _pick(m, (1, 2, 3)):
            for nn in _pick(n, (1, 2)):
                for root in _roots(nn):
                    cases.append((f'm={mm} n={nn} {root.label()}', mm ** 2 * nn ** 2,
                                  lambda mm=mm, nn=nn, root=root: minor_diagonalization_check(mm, nn, root)))
    elif suite == 'factorization':
        for nn in _pick(n, (1, 2)):
            cases.append((f'n={nn} grades<=3', 9 * nn ** 2, lambda nn=nn: factorization_check(nn, m or 3)))
    elif suite == 'symmetry':
        for nn in _pick(n, (1, 2)):
            cases.append((f'n={nn} grades<=3', 9 * nn ** 2, lambda nn=nn: symmetry_check(nn, m or 3)))
            cases.append((f'n={nn} vacuum', 1, lambda nn=nn: (vacuum_check(nn), None)))
    elif suite == 'scaling':
        for mm in _pick(m, (1, 2, 3)):
            for nn in _pick(n, (1, 2)):
                cases.append((f'm={mm} n={nn} d<=3', mm ** 2 * nn ** 2, lambda mm=mm, nn=nn: degree_scaling_check(mm, nn, 3)))
    elif suite == 'punctual':
        for mm in _pick(m, (1, 2, 3, 4)):
            for nn in _pick(n, (0, 1, 2)):
                cases.append((f'm={mm} n={nn}', mm * (nn + 1), lambda mm=mm, nn=nn: punctual_check(nn, mm)))
    elif suite == 'residues':
        for mm in _pick(m, (1, 2, 3)):
            for nn in _pick(n, (1, 2)):
                cases.append((f'm={mm} n={nn}', mm ** 3 * nn ** 2, lambda mm=mm, nn=nn: residue_check(mm, nn)))
    elif suite == 'perturbation':
        for mm in _pick(m, (1, 2, 3, 4)):
            cases.append((f'm={mm}', mm ** 2, lambda mm=mm: perturbation_check(mm)))
    elif suite == 'beads':
        for mm in _pick(m, (0, 1, 2)):
            for nn in _pick(n, (1, 2)):
                cases.append((f'm={mm} n={nn}', (mm + 1) * nn, lambda mm=mm, nn=nn: bead_check(mm, nn)))
    else:
        raise InvalidSelector(f'unknown suite {suite!r}; expected one of {", ".join(SUITES)}')
    return cases


SUITES = (
    'kernel', 'golden', 'commute', 'extremal-pairs', 'eigen-lemma', 'vanishing', 'factorization',
    'symmetry', 'scaling', 'punctual', 'residues', 'perturbation', 'beads',
)

SUITE_ALIASES = {'golden-7.1': 'golden', 'fixedlemma3': 'extremal-pairs'}


def resolve_suite(suite: str) -> str:
    name = SUITE_ALIASES.get(suite, suite)
    if name not in SUITES:
        raise InvalidSelector(f'unknown suite {suite!r}; expected one of {", ".join(SUITES)}')
    return name


def run_suite(suite: str, max_seconds: float = None, **params) -> SuiteReport:
    suite = resolve_suite(suite)
    budget = MAX_SECONDS if max_seconds is None else max_seconds
    cases = sorted(suite_cases(suite, **params), key=lambda case: case[1])
    report = SuiteReport(suite)
    started = time.monotonic()
    for name, _, thunk in cases:
        if time.monotonic() - started > budget:
            report.results.append(CaseResult(name, 'skip', witness={'reason': f'budget of {budget}s spent'}))
            continue
        case_start = time.monotonic()
        try:
            ok, witness = thunk()
        except HilbQuantError as exc:
            ok, witness = False, exc.to_dict()
        elapsed = time.monotonic() - case_start
        report.results.append(CaseResult(name, 'pass' if ok else 'fail', elapsed, None if ok else witness))
        logger.info('%s / %s: %s (%.2fs)', suite, name, 'pass' if ok else 'FAIL', elapsed)
    return report
