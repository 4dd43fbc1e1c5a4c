"""Exception hierarchy shared by all modules.

Three failure classes, matching the CLI exit codes:

* bad input (malformed files, out-of-range arguments) -> plain ValueError, exit 1
* mathematical degeneracy (general position fails, a web is not
  semi-extremal, a non-transverse arrangement) -> DegenerateWebError, exit 2
* violation of a proven identity -- something the underlying theory
  guarantees can never happen -> InternalContradictionError, exit 3
"""


class DegenerateWebError(Exception):
    """Input is mathematically degenerate for the requested operation."""


class InternalContradictionError(Exception):
    """A theorem-backed invariant failed; indicates a bug, never bad input."""
