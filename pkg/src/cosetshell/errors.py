"""Exception hierarchy.

Every error carries a machine-readable ``code`` (the class name) so the
command line front end can report it and pick an exit status:

* :class:`InputError` -- malformed input (exit 4)
* :class:`PreconditionError` -- well-formed input that an operation refuses (exit 2)
* :class:`VerificationError` -- a certificate did not check out (exit 3)
"""


class CosetShellError(Exception):
    exit_code = 1

    @property
    def code(self) -> str:
        return type(self).__name__


class InputError(CosetShellError, ValueError):
    exit_code = 4


class PreconditionError(CosetShellError, ValueError):
    exit_code = 2


class VerificationError(CosetShellError):
    exit_code = 3


# group construction
class BadTable(InputError):
    pass


class NotAssociative(InputError):
    pass


class NoIdentity(InputError):
    pass


class NoInverse(InputError):
    pass


class UnsupportedKind(InputError):
    pass


class OrderCapExceeded(InputError):
    pass


class BadFactors(InputError):
    pass


class ExprSyntaxError(InputError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class NonPrimeModulus(InputError):
    pass


# group-theoretic preconditions
class NotNormal(PreconditionError):
    pass


class NotSubgroup(PreconditionError):
    pass


class NotSolvable(PreconditionError):
    pass


class NotSupersolvable(PreconditionError):
    pass


class ContainmentImpossible(PreconditionError):
    pass


class EqualSubgroups(PreconditionError):
    pass


class TrivialGroup(PreconditionError):
    pass


class TrivialN(PreconditionError):
    pass


class NotProper(PreconditionError):
    pass


# posets and complexes
class NotComparable(PreconditionError):
    pass


class DimensionTooLarge(PreconditionError):
    pass


class NotPure(PreconditionError):
    pass


class EmptyComplex(PreconditionError):
    pass


class ComplexTooLarge(PreconditionError):
    pass


class NotAPermutation(PreconditionError):
    pass


# linear algebra
class NotNested(PreconditionError):
    pass


class EqualSpaces(PreconditionError):
    pass


# labeling
class NoFactorStructure(PreconditionError):
    pass


class NonSquareFreeFactor(PreconditionError):
    pass


class NotACover(PreconditionError):
    pass


class NonPrimeIndex(PreconditionError):
    pass


class UnlabeledCover(PreconditionError):
    pass


class ELNotVerified(VerificationError):
    pass
