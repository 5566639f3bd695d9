"""Resource bounds shared by every exhaustive search in the package."""
from dataclasses import dataclass


@dataclass
class Bounds:
    max_objects: int = 12
    max_morphisms: int = 200
    max_set: int = 10_000
    max_search: int = 1_000_000


BOUNDS = Bounds()
