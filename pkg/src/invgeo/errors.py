"""Exception hierarchy with stable machine-readable codes.

Every domain error carries a ``code`` string that the CLI emits verbatim in
its JSON error documents, so scripts can match on it without parsing prose.
"""


class InvGeoError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"


class NonFiniteEntry(InvGeoError):
    """A constructor received NaN or infinity."""

    code = "non_finite_entry"


class InvalidTolerance(InvGeoError):
    code = "invalid_tolerance"


class DegenerateParameter(InvGeoError):
    """A family parameter sits on the excluded b = 0 (or c = 0) locus."""

    code = "degenerate_parameter"


class WrongConstructor(InvGeoError):
    code = "wrong_constructor"


class NotAnInvolution(InvGeoError):
    code = "not_an_involution"


class InvalidCount(InvGeoError):
    code = "invalid_count"


class NotInHyperplane(InvGeoError):
    code = "not_in_hyperplane"


class AlphaMismatch(InvGeoError):
    code = "alpha_mismatch"


class DegenerateSeed(InvGeoError):
    """The seed matrix produced a (near-)zero generator direction."""

    code = "degenerate_seed"


class NotUnitVector(InvGeoError):
    code = "not_unit_vector"


class NotPythagorean(InvGeoError):
    code = "not_pythagorean"


class NotInvertible(InvGeoError):
    code = "not_invertible"


class SingularParameter(InvGeoError):
    code = "singular_parameter"


class ComplexEigenvalues(InvGeoError):
    code = "complex_eigenvalues"


class FunctionUndefinedAtEigenvalue(InvGeoError):
    code = "function_undefined_at_eigenvalue"


class NonPositiveScale(InvGeoError):
    code = "non_positive_scale"


class NotASquareRoot(InvGeoError):
    code = "not_a_square_root"


class SingularConjugator(InvGeoError):
    code = "singular_conjugator"


class WrongDecomposer(InvGeoError):
    code = "wrong_decomposer"


class DegenerateAngle(InvGeoError):
    code = "degenerate_angle"
