class HilbQuantError(Exception):
    """Base error for the engine. Carries the CLI exit code and the HTTP status."""

    exit_code = 1
    status_code = 500

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_dict(self):
        payload = {'error': self.message, 'kind': type(self).__name__}
        if self.witness is not None:
            payload['witness'] = self.witness
        return payload


class UserInputError(HilbQuantError):
    exit_code = 2
    status_code = 400


class ParseError(UserInputError):
    pass


class GradeMismatch(UserInputError):
    pass


class InvalidSelector(UserInputError):
    pass


class PoleAtTheta(HilbQuantError):
    """Denominator vanishes identically on t1 + t2 = 0."""


class NotExpandable(HilbQuantError):
    """Series expansion requested at a pole."""


class SingularSystem(HilbQuantError):
    exit_code = 3


class EigenvalueCollision(HilbQuantError):
    exit_code = 3


class DenominatorSurvived(HilbQuantError):
    """A (1 + q) factor survived in an operator that must be Laurent in q."""

    exit_code = 3


class WindowViolation(HilbQuantError):
    """A Laurent coefficient appeared outside its allowed exponent window."""

    exit_code = 3
