"""
Import validation to enforce architecture boundaries.

Walks the AST of every module in the package and reports imports that reach a
sub-package on the same or a higher layer (see shared/architecture.py). Treat
violations as build errors.
"""

import ast
from pathlib import Path
from typing import List, Optional, Tuple

from pauli_forge.shared.architecture import LAYERS, PACKAGE_NAME, is_allowed

Violation = Tuple[str, str, str]  # (file, importing sub-package, imported sub-package)


class ImportValidator:
    """Validates imports to enforce architecture boundaries."""

    def __init__(self, package_root: Path):
        """Initialize validator.

        Args:
            package_root: Path to the pauli_forge/ directory
        """
        self.package_root = package_root

    def validate_file(self, file_path: Path) -> List[Violation]:
        """Validate imports in a single file.

        Args:
            file_path: Path to Python file to validate

        Returns:
            List of violations: (file, importing sub-package, imported sub-package)
        """
        if not file_path.exists() or file_path.suffix != ".py":
            return []

        relative = file_path.relative_to(self.package_root)
        if len(relative.parts) < 2 or relative.parts[0] not in LAYERS:
            return []
        importing = relative.parts[0]

        tree = ast.parse(file_path.read_text(encoding="utf-8"), filename=str(file_path))
        violations = []
        for node in ast.walk(tree):
            if isinstance(node, ast.Import):
                names = [alias.name for alias in node.names]
            elif isinstance(node, ast.ImportFrom) and node.module and node.level == 0:
                names = [node.module]
            else:
                continue
            for name in names:
                imported = self._subpackage(name)
                if imported is not None and not is_allowed(importing, imported):
                    violations.append((str(file_path), importing, imported))
        return violations

    def validate_directory(self, directory: Optional[Path] = None) -> List[Violation]:
        """Validate all Python files below ``directory`` (default: the package root)."""
        all_violations = []
        for py_file in sorted((directory or self.package_root).rglob("*.py")):
            if "__pycache__" in py_file.parts:
                continue
            all_violations.extend(self.validate_file(py_file))
        return all_violations

    @staticmethod
    def _subpackage(module: str) -> Optional[str]:
        parts = module.split(".")
        if len(parts) < 2 or parts[0] != PACKAGE_NAME or parts[1] not in LAYERS:
            return None
        return parts[1]


def check_imports(package_root: Optional[Path] = None) -> bool:
    """Check imports and report violations.

    Args:
        package_root: Path to pauli_forge/ (default: auto-detect)

    Returns:
        True if no violations, False otherwise
    """
    if package_root is None:
        package_root = Path(__file__).resolve().parent.parent

    violations = ImportValidator(package_root).validate_directory()

    if violations:
        print("=" * 80)
        print("ARCHITECTURE VIOLATIONS DETECTED")
        print("=" * 80)
        for file_path, importing, imported in violations:
            print(f"{file_path}")
            print(f"   '{importing}' (layer {LAYERS[importing]}) imports "
                  f"'{imported}' (layer {LAYERS[imported]})")
        print("=" * 80)
        print(f"Total violations: {len(violations)}")
        return False

    print("No architecture violations detected")
    return True


if __name__ == "__main__":
    import sys

    sys.exit(0 if check_imports() else 1)
