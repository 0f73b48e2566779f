class DomainError(ValueError):
    """An input violates a documented precondition (bad box, bad bidegree, ...)."""
