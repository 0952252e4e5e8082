"""Exception types raised across the package.

Every error that reports a mathematical obstruction carries an exact witness
(rational data, integer matrices, or element coordinates) in ``.witness`` so
callers and the CLI can surface *why* an operation failed, not just that it
did.  All exceptions derive from :class:`GrextError`.
"""

from __future__ import annotations


class GrextError(Exception):
    """Base class for all package errors.

    Parameters
    ----------
    message:
        Human-readable description.
    witness:
        Optional exact data exhibiting the failure (JSON-serializable).
    """

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def payload(self) -> dict:
        """JSON-friendly description of the error."""
        out: dict = {"name": type(self).__name__, "message": self.message}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


# ---------------------------------------------------------------- exact numbers

class NoRootInInterval(GrextError):
    """The given interval contains no root of the defining polynomial."""


class MultipleRootsInInterval(GrextError):
    """The given interval contains more than one root, so it isolates none."""


class NotSquarefree(GrextError):
    """The defining polynomial has a repeated factor (gcd with derivative
    is nonconstant)."""


class DivisionByZero(GrextError):
    """Division by the zero element of a number field."""


class MixedFields(GrextError):
    """Two operands live in different number fields (or different embeddings
    of the same abstract field)."""


class ReduciblePolynomialDetected(GrextError):
    """A nonzero, noninvertible element was found, certifying a nontrivial
    factor of the defining polynomial.  Carries the factor as witness."""


class PerfectSquare(GrextError):
    """Pell parameter D is a perfect square, so x^2 - D y^2 = +-1 has no
    nontrivial solutions."""


# ---------------------------------------------------------------- dense groups

class DependentGenerators(GrextError):
    """Proposed lattice generators are linearly dependent over Q."""


class NotDense(GrextError):
    """The generated subgroup is discrete (not dense) in the ambient group."""


class AmbientDimUnsupported(GrextError):
    """Ambient dimension outside the supported range {1, 2}."""


class DegreeUnsupported(GrextError):
    """Field degree outside what the requested operation supports."""


class NotLatticePreserving(GrextError):
    """A linear map fails to send the finitely generated subgroup into
    itself; witness is a generator whose image leaves the subgroup."""


class NotSurjective(GrextError):
    """A linear map sends the subgroup strictly into itself (integer matrix
    with |det| != 1); witness carries the coordinate matrix and determinant."""


class IncompleteBase(GrextError):
    """An operation needs a certified-complete automorphism group and the
    base computation is only a bounded search."""


class NotSL2(GrextError):
    """Matrix is not in SL(2, Z) (integer 2x2 with determinant 1)."""


class TraceTooSmall(GrextError):
    """Hyperbolicity requires trace > 2."""


# -------------------------------------------------------------------- groupoid

class NotComposable(GrextError):
    """Groupoid elements with mismatched target/source cannot compose."""


class MixedLattices(GrextError):
    """Operands attached to different translation subgroups."""


class UnsupportedInstance(GrextError):
    """The verification hypothesis fails for this instance (e.g. the relevant
    subgroup is dense where the statement needs a closed/discrete one)."""


# ---------------------------------------------------------------- classifying

class DisconnectedSkeleton(GrextError):
    """The nerve's 1-skeleton is not connected."""


class MissingEdgeOfTriangle(GrextError):
    """A triangle of the nerve uses an edge that is not listed."""


class NotSimplicial(GrextError):
    """Simplex data is malformed (repeated vertices, bad arity, unknown
    vertex ids, or duplicates)."""


class RelatorNotKilled(GrextError):
    """A candidate holonomy assignment fails to kill an edge-path relator."""


class UndecidableCoefficients(GrextError):
    """Conjugacy in the coefficient group cannot be decided with the
    structure available."""


class IncompleteAutRho(GrextError):
    """Classification requested against an automorphism group that is only a
    bounded-search lower bound; counts would not be certified."""


class SpecTooLarge(GrextError):
    """Enumeration would exceed the configured state budget."""


class UnknownGDescriptor(GrextError):
    """Ambient-group descriptor not in the built-in homotopy tables."""


class NotAnAction(GrextError):
    """The given maps do not define a group action (identity or
    compatibility fails)."""


# ------------------------------------------------------------------------- CLI

class ParseError(GrextError):
    """Input document is not valid JSON."""


class SchemaError(GrextError):
    """Input document is valid JSON but violates the expected schema;
    witness carries a JSON-pointer-style path."""
