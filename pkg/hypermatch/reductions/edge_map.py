"""
Correspondence between source objects and the hyperedges they become
"""
from dataclasses import dataclass
from typing import List, Tuple

from hypermatch.core.instances import IntegralSolution
from hypermatch.shared.errors import ValidationError


@dataclass(frozen=True)
class EdgeMap:
    """
    Bijection source index i <-> target edge targets[i]

    Sources are colored edges or bids, listed in input order.
    """
    targets: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.targets) != list(range(len(self.targets))):
            raise ValidationError("EdgeMap must be a bijection onto 0..m-1")

    @classmethod
    def identity(cls, size: int) -> 'EdgeMap':
        return cls(tuple(range(size)))

    def __len__(self) -> int:
        return len(self.targets)

    def target(self, source: int) -> int:
        return self.targets[source]

    def source(self, target: int) -> int:
        return self.targets.index(target)

    def to_target(self, solution: IntegralSolution) -> IntegralSolution:
        values = [0] * len(self.targets)
        for source, m in enumerate(solution.multiplicities):
            values[self.targets[source]] = m
        return IntegralSolution(tuple(values))

    def to_source(self, solution: IntegralSolution) -> IntegralSolution:
        values: List[int] = [solution.multiplicities[t] for t in self.targets]
        return IntegralSolution(tuple(values))
