"""Exception hierarchy shared across the package."""


class IdealpackError(Exception):
    """Base class for all package errors."""


# -- number field construction ------------------------------------------------

class NotMonic(IdealpackError):
    pass


class Reducible(IdealpackError):
    """A nontrivial rational factor of the defining polynomial was found."""


class IrreducibilityUnknown(IdealpackError):
    """No irreducibility certificate found and no override was given."""


class NotMaximal(IdealpackError):
    """Dedekind's criterion failed at some prime: Z[alpha] is not maximal."""

    def __init__(self, p):
        super().__init__(f"Z[alpha] is not p-maximal at p={p}")
        self.p = p


class DimensionMismatch(IdealpackError):
    pass


# -- ideals -------------------------------------------------------------------

class NotPrime(IdealpackError):
    pass


class ZeroIdeal(IdealpackError):
    pass


class NotIntegral(IdealpackError):
    pass


class DegenerateLevel(IdealpackError):
    """No HNF basis row of p^i escapes p^(i+1); signals an upstream bug."""


# -- numerics -----------------------------------------------------------------

class PrecisionExhausted(IdealpackError):
    pass


class DeterminantMismatch(IdealpackError):
    """Embedded basis determinant deviates from N(I)*sqrt(|D_K|).

    Usually means the working precision is too low; retry with more bits.
    """


class RankTooLarge(IdealpackError):
    pass


class BoundTooLarge(IdealpackError):
    pass


class AmbiguousCeiling(IdealpackError):
    """A certified error interval straddles an integer ceiling boundary."""


# -- codes --------------------------------------------------------------------

class DomainError(IdealpackError):
    pass


class ParseError(IdealpackError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class MissingEntry(IdealpackError):
    def __init__(self, q, n, d):
        super().__init__(f"no code-table entry covers (q={q}, n={n}, d>={d})")
        self.q = q
        self.n = n
        self.d = d


class Unsupported(IdealpackError):
    pass


# -- packing ------------------------------------------------------------------

class ScaleTooLarge(IdealpackError):
    pass
