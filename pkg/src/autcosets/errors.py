"""Exception types shared across modules."""


class SupportViolation(ValueError):
    """An automorphism moves generators outside the block an operation allows."""


class SizeLimitError(ValueError):
    """A brute-force enumeration would exceed the configured point budget."""
