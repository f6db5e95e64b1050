"""Exception types distinguished by the CLI exit-code contract."""


class NumericalError(RuntimeError):
    """An iterative kernel failed to converge, or a computed quantity
    landed in a numerically impossible state."""


class GenerationCapExceeded(RuntimeError):
    """Rejection sampling exhausted its attempt budget."""
