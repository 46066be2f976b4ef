"""Run settings shared by the CLI, the scripts and the cross-check tests."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckConfig:
    max_degree: int = 6
    seed_points: int = 3  # regular evaluation points per cross-check
    random_monomials: int = 10
    monomial_degree: int = 5
    seed: int = 0


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    @property
    def tag(self) -> str:
        return f"{self.family}({','.join(f'{k}={v}' for k, v in self.params.items())})"


# pairs with a known restriction image, used by scripts and acceptance tests
SHIPPED = (
    FamilySpec("c-special", {"q": 1}),
    FamilySpec("c-special", {"q": 2}),
    FamilySpec("group-gl", {"p": 1, "q": 1}),
    FamilySpec("group-osp", {"m": 1, "n": 2}),
    FamilySpec("gl-block", {"p": 1, "q": 1, "r": 1, "s": 1}),
)
