"""Exception types shared by the quadrature, Carlson and Coxeter modules."""


class DomainError(ValueError):
    """Arguments fall outside the region where a quantity is defined."""


class PrincipalValueError(DomainError):
    """The requested Carlson integral would need a Cauchy principal value."""


class BranchError(DomainError):
    """An assembled complex expression kept an imaginary part it should not have."""


class ConvergenceError(ArithmeticError):
    """An iteration did not settle within its iteration budget."""


class EvaluationError(ArithmeticError):
    """An integrand returned a non-finite value at an interior node.

    The offending abscissa is kept on ``abscissa``.
    """

    def __init__(self, abscissa, value):
        self.abscissa = float(abscissa)
        self.value = value
        super().__init__(f"integrand returned {value!r} at x = {self.abscissa!r}")
