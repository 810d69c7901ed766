#!/usr/bin/env python3
"""
Architecture validation script.

Runs import validation to check for imports that cross the layer stack upward
or sideways. Treat violations as build errors.
"""

import sys
from pathlib import Path

# Add the project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from pauli_forge.shared.import_validator import check_imports


if __name__ == "__main__":
    success = check_imports(project_root / "pauli_forge")
    sys.exit(0 if success else 1)
