"""Exception hierarchy shared by all modules."""


class TwistlabError(Exception):
    """Base class for every error raised by the package."""


class UnknownElement(TwistlabError, KeyError):
    def __init__(self, element, where=""):
        self.element = element
        suffix = f" in {where}" if where else ""
        super().__init__(f"unknown element {element!r}{suffix}")

    def __str__(self):
        return self.args[0]


class NotAPoset(TwistlabError):
    pass


class NotALattice(TwistlabError):
    pass


class NotHeyting(TwistlabError):
    pass


class ConnectiveUnavailable(TwistlabError):
    pass


class NotABilattice(TwistlabError):
    def __init__(self, axiom, witness=None):
        self.axiom = axiom
        self.witness = witness
        msg = f"bilattice axiom {axiom} violated"
        if witness is not None:
            msg += f" at {witness!r}"
        super().__init__(msg)


class NotInterlaced(TwistlabError):
    pass


class RepresentationCheckFailed(TwistlabError):
    pass


class NotInCarrier(TwistlabError):
    pass


class TwistNeedsSymmetric(TwistlabError):
    pass


class NotInjective(TwistlabError):
    pass


class NotAHomomorphism(TwistlabError):
    pass


class NotPMId(TwistlabError):
    pass


class NotATopology(TwistlabError):
    pass


class IllFormedType(TwistlabError):
    pass


class IllFormedTerm(TwistlabError):
    pass


class ReservedIdentifier(TwistlabError):
    pass


class IncompatibleThresholds(TwistlabError):
    pass


class InvalidInterleaving(TwistlabError):
    pass


class ParseError(TwistlabError):
    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class UnresolvedReference(TwistlabError):
    pass


class UsageError(TwistlabError):
    pass
