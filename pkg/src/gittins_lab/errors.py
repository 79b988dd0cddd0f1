"""Exception taxonomy.

Two broad families matter for exit codes: input/validation problems
(``ValidationFailure``) and numerical/capacity problems
(``NumericalFailure``).
"""


class GittinsLabError(Exception):
    """Base class for all errors raised by this package."""


class ValidationFailure(GittinsLabError):
    """An input model, distribution, or instance is malformed."""


class NumericalFailure(GittinsLabError):
    """A computation could not be completed at the requested size or scale."""


# -- model / distribution validation ------------------------------------

class NonStochasticRow(ValidationFailure):
    """A transition row has a negative entry or its sum is off by more than 1e-12."""


class NoTerminationPath(ValidationFailure):
    """An undiscounted chain has a state from which the terminal set is unreachable."""


class FreeStatePresent(ValidationFailure):
    """An undiscounted chain contains a state with nonnegative reward and no
    direct transition into the terminal set.  Such states make the index
    infinite and are rejected outright."""


class InflationUnsupported(ValidationFailure):
    """Discount factors above 1 require an explicit opt-in flag, and no solver
    in this package accepts them."""


class NonPositiveCost(ValidationFailure):
    """A box opening cost must be strictly positive."""


class UndiscountedBetaChain(ValidationFailure):
    """The beta-Bernoulli chain never terminates, so discount must be < 1."""


class EmptyDistribution(ValidationFailure):
    """A distribution needs at least one atom of positive probability."""


class ZeroSize(ValidationFailure):
    """Job sizes must be integers >= 1."""


class SteppedTerminal(ValidationFailure):
    """Attempted to advance a chain from a terminal state."""


class ExhaustedSupport(ValidationFailure):
    """Conditioning event has zero probability under the given distribution."""


# -- selection / policies ------------------------------------------------

class NoEligibleAction(ValidationFailure):
    """No chain may be advanced from the given selection state."""


class NotPandoraShaped(ValidationFailure):
    """One-step-lookahead needs box-shaped chains (closed -> value -> done)."""


class DiscountedChainUnsupported(ValidationFailure):
    """Surrogate-value machinery is defined for undiscounted chains only."""


class InfeasibleConstraint(ValidationFailure):
    """The forest constraint cannot support the requested finish count."""


# -- numerics / capacity -------------------------------------------------

class BracketFailure(NumericalFailure):
    """Root bracketing expansion exceeded its iteration cap."""


class ExactModeTooLarge(NumericalFailure):
    """Exact enumeration would exceed the configured atom cap."""


class ProductTooLarge(NumericalFailure):
    """The reachable product state space exceeds the configured cap."""


# -- queueing -------------------------------------------------------------

class UnstableModel(ValidationFailure):
    """Arrival rate times mean service exceeds capacity; override to proceed."""


class SrptNeedsKnownSizes(ValidationFailure):
    """The SRPT policy is only defined when job sizes are known on arrival."""


class EmptyRecords(ValidationFailure):
    """Metrics require at least one completed job after warmup."""


class DegenerateBaseline(ValidationFailure):
    """Tail improvement is undefined when the baseline exceedance is zero."""


# -- bayesopt --------------------------------------------------------------

class ZeroVariancePoint(ValidationFailure):
    """The acquisition gradient is undefined where the posterior deviation is zero."""


# -- serialization ----------------------------------------------------------

class ParseError(ValidationFailure):
    """An instance file could not be parsed; the message names the offending field."""
