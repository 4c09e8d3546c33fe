"""Exception hierarchy shared across the package.

Two failure families matter to callers (and to the CLI exit codes): a
mathematical claim that the library set out to verify turned out false on
the given input, versus an ordinary usage or resource problem.
"""


class ClaimViolationError(Exception):
    """A verified mathematical identity or classification failed.

    Raised e.g. when a polynomial is not in the invariant ring it should
    belong to, or a length-24 Type II code produces a tetrad system outside
    the known list.  The CLI maps this to exit status 1.
    """


class ResourceLimitError(Exception):
    """An enumeration or expansion exceeds the documented budget."""
