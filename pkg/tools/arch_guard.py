"""Layering check: fails when a package imports a layer it must not see.

    fcalc             -> nothing from app or app_cli
    app.domain        -> no fcalc, no outer app layers
    app.application   -> no app.infrastructure or app.presentation
    app.presentation  -> no app.infrastructure, no fcalc
    tools             -> no app
"""

from __future__ import annotations

import ast
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, List, Tuple

ROOT = Path(__file__).resolve().parents[1]


@dataclass(frozen=True)
class LayerRule:
    name: str
    base: Path
    denied: Tuple[str, ...]

    def violates(self, module: str) -> bool:
        return any(module == prefix or module.startswith(prefix + ".") for prefix in self.denied)


RULES = (
    LayerRule("core_imports_app", ROOT / "fcalc", ("app", "app_cli")),
    LayerRule("domain_imports_outer", ROOT / "app" / "domain", ("fcalc", "app.application", "app.infrastructure", "app.presentation")),
    LayerRule("application_imports_outer", ROOT / "app" / "application", ("app.infrastructure", "app.presentation")),
    LayerRule("presentation_imports_infrastructure", ROOT / "app" / "presentation", ("app.infrastructure", "fcalc")),
    LayerRule("tools_import_app", ROOT / "tools", ("app",)),
)


def imported_modules(path: Path) -> Iterator[Tuple[int, str]]:
    """Absolute module names imported by a file; relative imports stay inside their package."""
    tree = ast.parse(path.read_text(encoding="utf-8", errors="ignore"), filename=str(path))
    for node in ast.walk(tree):
        if isinstance(node, ast.Import):
            for alias in node.names:
                yield node.lineno, alias.name
        elif isinstance(node, ast.ImportFrom) and node.level == 0 and node.module:
            yield node.lineno, node.module


def check(rules: Tuple[LayerRule, ...] = RULES) -> List[Tuple[str, Path, int, str]]:
    violations: List[Tuple[str, Path, int, str]] = []
    for rule in rules:
        for path in sorted(rule.base.rglob("*.py")):
            for lineno, module in imported_modules(path):
                if rule.violates(module):
                    violations.append((rule.name, path, lineno, module))
    return violations


def main() -> int:
    violations = check()
    if not violations:
        print("Architecture guard passed.")
        return 0
    print("Architecture guard violations:")
    for name, path, lineno, module in violations:
        print(f"- {name}: {path.relative_to(ROOT)}:{lineno}: imports {module}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
