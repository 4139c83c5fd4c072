"""Exact computations with quadratic algebras and Clifford deformations.

``run`` mirrors the command line tool: it takes presentation text and returns
the report as a dict, with scalars as strings.
"""

import json

from ._qforge import QForgeError, canonical
from ._qforge import exit_code as _exit_code
from ._qforge import run as _run

__all__ = ["QForgeError", "canonical", "run", "run_file", "exit_code"]


def run(command, text, **options):
    """Report for one command, e.g. run("deform", text, theta="pp")."""
    return json.loads(_run(command, text, **options))


def run_file(command, path, **options):
    with open(path, encoding="utf-8") as fh:
        return run(command, fh.read(), file_name=str(path), **options)


def exit_code(report):
    """0, 1 or 2, as the command line tool would exit for this report."""
    return _exit_code(json.dumps(report))
