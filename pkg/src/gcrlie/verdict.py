"""Three-valued answers carrying the evidence behind them."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Verdict:
    """``value`` is True, False or None (unknown).

    ``certificate`` holds the objects that justify the answer (witness
    subspaces, cocharacters, idempotents, ...); ``provenance`` names the
    route that produced it.
    """

    value: object
    certificate: dict = field(default_factory=dict)
    provenance: str = ""

    @property
    def status(self):
        return {True: "true", False: "false"}.get(self.value, "unknown")

    @property
    def known(self):
        return self.value is not None

    def __bool__(self):
        raise TypeError("Verdict has three values; compare .value explicitly")


def unknown(reason, **certificate):
    certificate = dict(certificate)
    certificate["reason"] = reason
    return Verdict(None, certificate, "undecided")
