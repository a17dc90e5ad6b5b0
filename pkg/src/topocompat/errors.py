"""Exception hierarchy shared across the package."""


class TopoCompatError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertex(TopoCompatError):
    """A vertex id is outside the graph's 0..n-1 range."""


class InvalidEdge(TopoCompatError):
    """An edge is malformed (self-loop)."""


class InvalidParameter(TopoCompatError):
    """A topology parameter is outside its legal range."""


class InvalidReachability(TopoCompatError):
    """The reachability passed to the power transform is not a positive integer."""


class InvalidPotential(TopoCompatError):
    """A potential/order pair does not satisfy 0 <= p <= n."""


class HostTooLarge(TopoCompatError):
    """The host graph exceeds the search budget's order cap."""


class BudgetExceeded(TopoCompatError):
    """A search ran out of node or time budget; the result is unknown."""


class EdgeListFormatError(TopoCompatError):
    """An edge-list file does not follow the `n m` / `u v` text format."""
