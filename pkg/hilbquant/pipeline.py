from .combinat import parse_multipartition, weighted_size
from .divisors import Divisor, DivisorOperators
from .errors import GradeMismatch, UserInputError
from .export import render_operator, render_two_point
from .fock import fock_space
from .logger import get_logger
from .omega import two_point, two_point_vectors
from .suites import run_suite
from .symfun import fixedpoint_to_nakajima

logger = get_logger(__name__)

BASES = ('nakajima', 'fixed')


class QuantumPipeline:
    """Entry point shared by the CLI and the service: validates, computes, renders."""

    def __init__(self, n: int, labels: str = 'omega'):
        if n < 0:
            raise UserInputError(f'n must be >= 0, got {n}')
        self.n = n
        self.labels = labels
        try:
            self.space = fock_space(n, labels)
        except ValueError as exc:
            raise UserInputError(str(exc)) from exc

    def divisor_operator(self, m: int, divisor: str):
        if m < 0:
            raise UserInputError(f'm must be >= 0, got {m}')
        if self.n < 1:
            raise UserInputError('divisor operators need n >= 1')
        selected = Divisor.parse(divisor, self.n)
        op = DivisorOperators(m, self.n, self.labels).operator(selected)
        return selected, op.normalized()

    def matrix(self, m: int, divisor: str, fmt: str = 'text') -> str:
        selected, op = self.divisor_operator(m, divisor)
        logger.info('rendering M_%s on grade %d as %s', selected.label(), m, fmt)
        return render_operator(op, fmt, selected.label())

    def two_point(self, mu: str, nu: str, basis: str = 'nakajima'):
        if basis == 'nakajima':
            left, right = self.space.parse(mu), self.space.parse(nu)
            if weighted_size(left) != weighted_size(right):
                raise GradeMismatch(f'{weighted_size(left)} points against {weighted_size(right)} points')
            return two_point(left, right, self.n, self.labels)
        if basis == 'fixed':
            slots = self.n + 1
            left = fixedpoint_to_nakajima(parse_multipartition(mu, slots), self.n, self.labels)
            right = fixedpoint_to_nakajima(parse_multipartition(nu, slots), self.n, self.labels)
            return two_point_vectors(left, right)
        raise UserInputError(f'basis must be one of {", ".join(BASES)}, got {basis!r}')

    def render_two_point(self, mu: str, nu: str, basis: str = 'nakajima', fmt: str = 'text') -> str:
        return render_two_point(self.two_point(mu, nu, basis), self.space.cf, fmt)


def verify(suite: str, max_seconds: float = None, **params):
    return run_suite(suite, max_seconds=max_seconds, **params)
