"""Three-valued decisions with mandatory structured certificates.

Unknown is an honest outcome, never silently coerced.  Certificates are
JSON-able dictionaries: subspaces appear as lists of coordinate strings so a
separate verifier can re-check them without trusting the search path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Matrix, Subspace

__all__ = ["Decision", "encode_vector", "encode_subspace", "encode_matrix",
           "decode_vector", "decode_subspace"]


def encode_vector(v) -> list:
    return [str(x) for x in v]


def decode_vector(data) -> tuple:
    return tuple(Fraction(x) for x in data)


def encode_subspace(W: Subspace) -> dict:
    return {"ambient_dim": W.ambient_dim,
            "basis": [encode_vector(b) for b in W.basis]}


def decode_subspace(data) -> Subspace:
    return Subspace.span(data["ambient_dim"],
                         [decode_vector(b) for b in data["basis"]])


def encode_matrix(M: Matrix) -> dict:
    return {"rows": M.rows, "cols": M.cols, "entries": encode_vector(M.flat())}


@dataclass(frozen=True)
class Decision:
    """Status yes/no/unknown plus a re-verifiable certificate."""

    status: str
    certificate: dict

    @staticmethod
    def yes(certificate: dict) -> "Decision":
        return Decision("yes", certificate)

    @staticmethod
    def no(certificate: dict) -> "Decision":
        return Decision("no", certificate)

    @staticmethod
    def unknown(reason: str, **extra) -> "Decision":
        cert = {"reason": reason}
        cert.update(extra)
        return Decision("unknown", cert)

    @property
    def is_yes(self) -> bool:
        return self.status == "yes"

    @property
    def is_no(self) -> bool:
        return self.status == "no"

    @property
    def is_unknown(self) -> bool:
        return self.status == "unknown"
