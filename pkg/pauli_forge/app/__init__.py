"""
App: the ``pauli-forge`` command line and process bootstrap.

The only layer allowed to read settings, configure logging and turn exceptions
into exit codes.
"""

from pauli_forge.app.bootstrap import bootstrap
from pauli_forge.app.main import main, run

__all__ = ["bootstrap", "main", "run"]
