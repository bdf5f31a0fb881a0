"""Exception types shared across the package.

Input validation failures raise plain ``ValueError``; the classes here mark
conditions a caller may want to handle separately from bad input.
"""


class ResourceLimitError(RuntimeError):
    """An enumeration or recursion guard was exceeded.

    Raised instead of silently truncating: every count this package reports
    is exact or absent.
    """


class GenerationError(RuntimeError):
    """Random graph generation exhausted its rejection budget."""


class PrecisionError(RuntimeError):
    """A certified comparison stayed undecidable at the maximum precision."""
