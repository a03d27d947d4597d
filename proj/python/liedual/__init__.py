"""Exact rational Lie algebra toolkit: invariant forms, double extensions,
bargmannian reduction and the carroll/galilei duality.

Algebras travel as JSON documents (the same format the ``liedual`` CLI reads
and writes); every entry is an exact rational written as a string.
"""

import json as _json

from . import _liedual
from ._liedual import (
    DEFAULT_MAX_DIM,
    LiedualError,
    canonical_rational,
    catalog_names,
    command_names,
    invariant_forms,
    normalize,
    numeric_skew_eigenvalues,
    skew_eigenvalues,
)

LiedualError.code = property(lambda self: self.args[0])
LiedualError.location = property(lambda self: self.args[1])
LiedualError.message = property(lambda self: self.args[2])

__all__ = [
    "Algebra",
    "CommandError",
    "DEFAULT_MAX_DIM",
    "LiedualError",
    "canonical_rational",
    "catalog",
    "catalog_names",
    "command_names",
    "invariant_forms",
    "nappi_witten",
    "normalize",
    "numeric_skew_eigenvalues",
    "run",
    "skew_eigenvalues",
]


class CommandError(LiedualError):
    """A command exited nonzero; carries the decoded error record."""

    def __init__(self, status, code, location, message):
        super().__init__(code, location, message)
        self.status = status


def _text(doc):
    if isinstance(doc, str):
        return doc
    return _json.dumps(doc)


def run(name, *args, files=None, **options):
    """Run a CLI command in-process; returns (status, stdout, stderr)."""
    return _liedual.run(name, list(args), files=files, **options)


def _call(name, args, files, **options):
    status, out, err = _liedual.run(name, list(args), json=True, files=files, **options)
    if status != 0:
        rec = _json.loads(err)["error"]
        raise CommandError(status, rec["code"], rec["location"], rec["message"])
    return _json.loads(out)


class Algebra:
    """A validated algebra document (optionally carrying a form, a derivation
    and a structure certificate)."""

    def __init__(self, doc):
        self.text = normalize(_text(doc))

    @property
    def doc(self):
        return _json.loads(self.text)

    @property
    def dim(self):
        return self.doc["dim"]

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.text == other.text

    def __repr__(self):
        return f"Algebra(dim={self.dim})"

    def _run(self, name, extra=None, **options):
        files = {"input": self.text}
        if extra:
            files.update(extra)
        return _call(name, ["input"], files, **options)

    def check(self):
        return self._run("check")

    def invariant_forms(self):
        return self._run("invariant-forms")

    def derivations(self, skew=False, form=None):
        extra = None
        options = {"skew": skew}
        if form is not None:
            extra = {"form": _text(form)}
            options["form_file"] = "form"
        return self._run("derivations", extra, **options)

    def double_extend(self, derivation):
        return Algebra(self._run("double-extend", {"derivation": _text(derivation)}, derivation_file="derivation"))

    def reduce(self):
        return Algebra(self._run("reduce"))

    def carroll_dual(self):
        return Algebra(self._run("carroll-dual"))

    def galilei_dual(self):
        return Algebra(self._run("galilei-dual"))

    def classify(self, numeric=False, tol=1e-9):
        return self._run("classify", numeric=numeric, tol=tol)

    def leibniz_decompose(self):
        return self._run("leibniz-decompose")


def catalog(name, *args):
    """Export a catalog algebra, e.g. ``catalog("nappi-witten", "3", "1")``."""
    return Algebra(_liedual.catalog_export(name, [str(a) for a in args]))


def nappi_witten(mu):
    return Algebra(_liedual.nappi_witten([str(m) for m in mu]))
