"""Sign and orientation conventions shared by the engine.

The chart convention says how the three vectors stored per chart are read:

* ``functions``: they are the characters of the chart's coordinate functions
  (the dual basis of the cone's rays). A box ``(i, j, k)`` has character
  ``t^(i*a1 + j*a2 + k*a3)``.
* ``tangents``: they are tangent characters, so every chart character
  (tangent and bundle) is negated before the vertex is built.

Both are internally consistent and give the same integers because every
vertex character has rank zero. ``functions`` is pinned by the calibration
test ``DT^1(P^3, O) == 20``.

The bundle convention chooses the tautological class on P(O + L):
``lines`` uses xi = c1(O(1)) on the projective bundle of lines with
relation xi^2 + c1(L) xi = 0, ``quotients`` the bundle of rank-one quotients
with xi^2 - c1(L) xi = 0.
"""

CHART_FUNCTIONS = 'functions'
CHART_TANGENTS = 'tangents'
CHART_CONVENTIONS = (CHART_FUNCTIONS, CHART_TANGENTS)

BUNDLE_LINES = 'lines'
BUNDLE_QUOTIENTS = 'quotients'
BUNDLE_CONVENTIONS = (BUNDLE_LINES, BUNDLE_QUOTIENTS)

DEFAULT_CHART_CONVENTION = CHART_FUNCTIONS
DEFAULT_BUNDLE_CONVENTION = BUNDLE_LINES

PARAM_BOUND = 10 ** 6
MAX_RESAMPLES = 32
MIN_TRIALS = 2
DEFAULT_TRIALS = 3

# Calibration target for the chart convention.
CALIBRATION_DT1_P3 = 20
