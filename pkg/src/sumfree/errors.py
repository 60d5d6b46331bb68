"""Shared exception types.

Failure semantics, toolkit-wide:

* ``PrecisionInsufficient`` -- an interval computation could not resolve a
  comparison (root bracketing, floor of a threshold, a verdict) even after
  the working precision was refined up to its cap.  Callers may retry with
  a larger cap; the CLI maps this to exit code 2.
* ``CapExceeded`` -- an enumeration or table would exceed a configured size
  cap.  Also exit code 2.
* ``EmptyLayer`` -- a layer index outside the nonempty range was used where
  a distribution over the layer is required.
* ``SingularSystem`` -- the stationary-distribution solve did not have a
  one-dimensional solution space.  This would contradict the ergodicity of
  the underlying chain and is surfaced loudly, never papered over.
"""


class SumfreeError(Exception):
    """Base class for toolkit errors."""


class PrecisionInsufficient(SumfreeError):
    """Interval arithmetic could not certify a decision at the precision cap."""


class CapExceeded(SumfreeError):
    """A table, enumeration, or recursion exceeded its configured cap."""


class EmptyLayer(SumfreeError):
    """Layer sum out of range: the layer is empty."""


class SingularSystem(SumfreeError):
    """Fixed-point system has no unique normalized solution."""
