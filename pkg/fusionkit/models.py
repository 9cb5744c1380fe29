from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class FusionRing:
    name: str
    labels: tuple[str, ...]
    dual: tuple[int, ...]
    constants: dict[Triple, int] = field(hash=False)
    grades: tuple[str, ...] | None = None

    unit = 0

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def basis(self) -> range:
        return range(self.rank)

    @cached_property
    def products(self) -> dict[tuple[int, int], dict[int, int]]:
        table: dict[tuple[int, int], dict[int, int]] = {}
        for (i, j, k), value in sorted(self.constants.items()):
            table.setdefault((i, j), {})[k] = value
        return table

    def product(self, i: int, j: int) -> dict[int, int]:
        return self.products.get((i, j), {})

    def coefficient(self, i: int, j: int, k: int) -> int:
        return self.constants.get((i, j, k), 0)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError as exc:
            raise ValueError(f"unknown label {label!r} in {self.name}") from exc

    def label_set(self, members) -> str:
        return "{" + ",".join(self.labels[i] for i in sorted(members)) + "}"


@dataclass(frozen=True)
class RingElement:
    ring: FusionRing
    coeffs: tuple[Fraction, ...]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c != 0)

    @property
    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)


@dataclass(frozen=True)
class Subring:
    ring: FusionRing
    members: tuple[int, ...]

    def __contains__(self, index: int) -> bool:
        return index in self.members

    @property
    def label(self) -> str:
        return self.ring.label_set(self.members)


@dataclass(frozen=True)
class MemberSet:
    members: tuple[int, ...]
    is_subring: bool


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""
    residual: float | None = None

    @property
    def passed(self) -> bool:
        return self.status != "fail"


@dataclass(frozen=True)
class FPData:
    dims: tuple[float, ...]
    ring_dim: float
    residual: float
    iterations: int = 0

    def subring_dim(self, members) -> float:
        return sum(self.dims[i] ** 2 for i in members)


@dataclass(frozen=True)
class RegularElement:
    subring: Subring
    coeffs: tuple[float, ...]

    @property
    def support(self) -> tuple[int, ...]:
        return self.subring.members


@dataclass(frozen=True)
class CosetDecomposition:
    ring: FusionRing
    left: Subring
    right: Subring
    classes: tuple[tuple[int, ...], ...]
    class_vectors: tuple[tuple[float, ...], ...]
    t_counts: tuple[tuple[int, ...], ...]
    t_matrix: tuple[tuple[float, ...], ...]

    def class_of(self, index: int) -> int:
        for position, block in enumerate(self.classes):
            if index in block:
                return position
        raise ValueError(f"index {index} outside the basis")


@dataclass(frozen=True)
class FormulaResult:
    index: int
    class_index: int
    scalar: float
    residual: float
    passed: bool


@dataclass(frozen=True)
class RingFunctor:
    name: str
    source: FusionRing
    target: FusionRing
    matrix: tuple[tuple[int, ...], ...]
    subgroup: tuple[str, tuple[int, ...]] | None = None

    def row(self, i: int) -> tuple[int, ...]:
        return self.matrix[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    def row_support(self, i: int) -> tuple[int, ...]:
        return tuple(j for j, v in enumerate(self.matrix[i]) if v)


@dataclass(frozen=True)
class Relation:
    sim: tuple[tuple[bool, ...], ...]
    classes: tuple[tuple[int, ...], ...]
    transitive: bool


@dataclass(frozen=True)
class FunctorAnalysis:
    kernel: Subring
    dominant_image: Subring
    up_classes: tuple[tuple[int, ...], ...]
    down_classes: tuple[tuple[int, ...], ...]
    is_normal: bool
    is_dominant: bool
    sim_up_transitive: bool
    index: float


@dataclass(frozen=True)
class Grading:
    ring: FusionRing
    trivial_component: Subring
    components: tuple[tuple[int, ...], ...]
    component_labels: tuple[str, ...]
    group_table: tuple[tuple[int, ...], ...]

    @property
    def group_order(self) -> int:
        return len(self.components)

    def component_of(self, index: int) -> int:
        for position, block in enumerate(self.components):
            if index in block:
                return position
        raise ValueError(f"index {index} outside the basis")


@dataclass(frozen=True)
class SubgroupEntry:
    subgroup: tuple[int, ...]
    subring: Subring


@dataclass(frozen=True)
class IntermediateMap:
    entries: tuple[SubgroupEntry, ...]
    injective: bool
    surjective: bool | None


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    identity = 0

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(self.identity) for row in self.table)

    def element_labels(self) -> tuple[str, ...]:
        if self.labels is not None:
            return self.labels
        return tuple("e" if i == 0 else f"g{i}" for i in range(self.order))


@dataclass(frozen=True)
class Corpus:
    rings: dict[str, tuple[str, FusionRing]]
    functors: dict[str, tuple[str, RingFunctor]]
    groups: dict[str, tuple[str, FiniteGroup]]


@dataclass(frozen=True)
class DominantReport:
    index: float
    pairs: tuple[tuple[int, int], ...]
    constants: tuple[float, ...]
    checks: tuple[CheckResult, ...]
