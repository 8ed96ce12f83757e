"""Exception types shared across the package."""


class PolarityLabError(Exception):
    """Base class for all errors raised by this package."""


class VertexOutOfRange(PolarityLabError):
    """An endpoint or vertex index is not in 0..n-1."""


class LoopRejected(PolarityLabError):
    """A self-loop (v, v) was supplied; graphs here are simple."""


class CapExceeded(PolarityLabError):
    """A size limit (vertex cap or enumeration cap) would be exceeded."""


class BadParameter(PolarityLabError):
    """A numeric parameter is outside its valid range (e.g. spider j < 2)."""


class Graph6Error(PolarityLabError):
    """Base class for graph6 decoding problems."""


class MalformedHeader(Graph6Error):
    """The leading byte is not a valid single-byte graph6 header."""


class TruncatedBody(Graph6Error):
    """Fewer body bytes than the vertex count requires."""


class TrailingGarbage(Graph6Error):
    """Extra bytes (or nonzero padding bits) after the encoded triangle."""


class NotAP4(PolarityLabError):
    """A vertex set expected to induce a P4 does not."""


class NotInClass(PolarityLabError):
    """A graph fed to a decomposition does not belong to the stated class.

    ``certificate`` carries the offending structure: a 5-vertex set inducing
    two P4s, or a pair (W, S(W)) with |S(W)| >= 2.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class UnknownName(PolarityLabError):
    """Catalog lookup with an unrecognized graph name."""


class UnknownId(PolarityLabError):
    """Obstruction-list lookup with an unrecognized list id."""


class UnknownClaim(PolarityLabError):
    """Verification harness invoked with an unrecognized claim id."""
