EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2
EXIT_MISMATCH = 3


class QuotDTError(Exception):
    exit_code = EXIT_INVARIANT
    default_detail = 'Computation failed.'
    default_code = 'error'

    def __init__(self, detail=None):
        if detail is None:
            detail = self.default_detail
        super(QuotDTError, self).__init__(detail)
        self.detail = detail


class InvalidDescriptor(QuotDTError):
    exit_code = EXIT_USAGE
    default_detail = 'Invalid space or bundle descriptor.'
    default_code = 'invalid_descriptor'


class UnknownSpace(InvalidDescriptor):
    default_detail = 'Unknown built-in space.'
    default_code = 'unknown_space'


class RankMismatch(QuotDTError):
    default_detail = 'Operands have different rank.'
    default_code = 'rank_mismatch'


class DimensionMismatch(QuotDTError):
    default_detail = 'Ring has the wrong dimension.'
    default_code = 'dimension_mismatch'


class ZeroWeight(QuotDTError):
    default_detail = 'A monomial evaluates to the zero weight at these parameters.'
    default_code = 'zero_weight'


class NonzeroFixedPart(QuotDTError):
    default_detail = 'Virtual character has a nonzero constant term.'
    default_code = 'nonzero_fixed_part'


class SymmetryViolation(QuotDTError):
    default_detail = 'Virtual character is not anti-symmetric under the twisted dual.'
    default_code = 'symmetry_violation'


class ParameterDependence(QuotDTError):
    default_detail = 'Localization sums disagree across parameter points.'
    default_code = 'parameter_dependence'


class NonIntegral(QuotDTError):
    default_detail = 'Localization sum is not an integer.'
    default_code = 'non_integral'


class SingularBasisMatrix(QuotDTError):
    default_detail = 'Chern-number matrix of the partition-pair basis is singular.'
    default_code = 'singular_basis'


class InvalidPartitionPair(QuotDTError):
    exit_code = EXIT_USAGE
    default_detail = 'Not a partition pair of size 3 and the given type.'
    default_code = 'invalid_partition_pair'


class NonUnitSeries(QuotDTError):
    default_detail = 'Series with constant term other than 1 cannot be raised to this power.'
    default_code = 'non_unit_series'


class OracleMismatch(QuotDTError):
    exit_code = EXIT_MISMATCH
    default_detail = 'Localization series does not match the closed formula.'
    default_code = 'oracle_mismatch'
