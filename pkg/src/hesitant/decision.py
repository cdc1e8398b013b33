"""Fuzzy preference relations and baseline-relative multi-criteria evaluation."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any, Callable, Mapping, Optional, Sequence

from .dominance import HALF, DominanceKind, dominance
from .errors import ConfigError, HesitantError, ParseError
from .grades import THFE
from .jsonio import loads, to_thfe

__all__ = [
    "AGGREGATIONS",
    "AlternativeResult",
    "EvaluationConfig",
    "PreferenceMatrix",
    "RankingReport",
    "bundled_fixture",
    "evaluate",
    "load_config",
    "preference_matrix",
]

Aggregation = Callable[[Sequence[Fraction]], Fraction]


def _mean(values: Sequence[Fraction]) -> Fraction:
    return sum(values, Fraction(0)) / len(values)


AGGREGATIONS: dict[str, Aggregation] = {"mean": _mean}


@dataclass(frozen=True)
class PreferenceMatrix:
    """Reciprocal matrix: ``entries[i][j] + entries[j][i] == 1`` and a diagonal of 1/2."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("preference matrix must be square")
            if row[i] != HALF:
                raise ValueError(f"diagonal entry {i} is {row[i]}, expected 1/2")
            for j, v in enumerate(row):
                if v < 0 or v + self.entries[j][i] != 1:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not reciprocal")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]


def preference_matrix(kind: DominanceKind, alternatives: Sequence[THFE]) -> PreferenceMatrix:
    """Entry ``(i, j)`` is the dominance of alternative ``i`` with alternative ``j`` as control.

    So ``r_ij > 1/2`` means alternative ``i`` is preferred to alternative ``j``.
    """
    if not alternatives:
        raise ValueError("need at least one alternative")
    return PreferenceMatrix(
        tuple(tuple(dominance(kind, a_j, a_i) for a_j in alternatives) for a_i in alternatives)
    )


@dataclass(frozen=True)
class EvaluationConfig:
    criteria: tuple[tuple[str, THFE], ...]
    alternatives: tuple[tuple[str, Mapping[str, THFE]], ...]
    kind: DominanceKind = DominanceKind.DDF
    aggregation: str = "mean"
    aggregate_fn: Optional[Aggregation] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        crit_ids = [c for c, _ in self.criteria]
        alt_ids = [a for a, _ in self.alternatives]
        if not crit_ids:
            raise ConfigError("at least one criterion is required")
        if len(set(crit_ids)) != len(crit_ids):
            raise ConfigError("criterion ids must be unique")
        if len(set(alt_ids)) != len(alt_ids):
            raise ConfigError("alternative ids must be unique")
        for alt, values in self.alternatives:
            missing = [c for c in crit_ids if c not in values]
            if missing:
                raise ConfigError(f"alternative {alt!r} has no value for criteria {missing}")
            extra = [c for c in values if c not in crit_ids]
            if extra:
                raise ConfigError(f"alternative {alt!r} rates unknown criteria {extra}")
        if self.aggregate_fn is None and self.aggregation not in AGGREGATIONS:
            raise ConfigError(f"unknown aggregation {self.aggregation!r}; built-ins: {sorted(AGGREGATIONS)}")

    def aggregator(self) -> Aggregation:
        return self.aggregate_fn or AGGREGATIONS[self.aggregation]

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any], kind: Optional[DominanceKind] = None) -> "EvaluationConfig":
        """Build from the JSON document layout; ``kind`` overrides the document's own."""
        if not isinstance(doc, Mapping):
            raise ConfigError("configuration must be a JSON object")
        try:
            criteria = tuple((str(c["id"]), to_thfe(c["baseline"])) for c in doc["criteria"])
            alternatives = tuple(
                (str(a["id"]), {str(k): to_thfe(v) for k, v in a["values"].items()}) for a in doc["alternatives"]
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise ConfigError(f"malformed configuration: missing or invalid field {exc}") from exc
        except ParseError as exc:
            raise ConfigError(str(exc)) from exc
        weights = doc.get("weights")
        if weights is not None:
            values = list(weights.values()) if isinstance(weights, Mapping) else list(weights)
            if len(set(values)) > 1:
                raise ConfigError("unequal criterion weights are not supported")
        if kind is None:
            try:
                kind = DominanceKind(str(doc.get("kind", "ddf")).lower())
            except ValueError as exc:
                raise ConfigError(f"unknown dominance kind {doc.get('kind')!r}") from exc
        return cls(criteria, alternatives, kind, str(doc.get("aggregation", "mean")))


def load_config(text: str, kind: Optional[DominanceKind] = None) -> EvaluationConfig:
    return EvaluationConfig.from_dict(loads(text), kind)


def bundled_fixture(name: str) -> str:
    """Text of a fixture shipped with the package, e.g. ``"project_evaluation.json"``."""
    if not name.endswith(".json"):
        name += ".json"
    try:
        return resources.files("hesitant.fixtures").joinpath(name).read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise HesitantError(f"no bundled fixture named {name!r}") from exc


@dataclass(frozen=True)
class AlternativeResult:
    id: str
    values: tuple[Fraction, ...]
    aggregate: Fraction
    rank: int
    tied: bool


@dataclass(frozen=True)
class RankingReport:
    """Per-criterion dominance values, aggregates and ranks.

    ``rows`` keeps the configuration order; ``ranking`` is sorted by
    descending aggregate with ties broken by alternative id.
    """

    kind: DominanceKind
    criteria: tuple[str, ...]
    rows: tuple[AlternativeResult, ...]

    @property
    def ranking(self) -> tuple[AlternativeResult, ...]:
        return tuple(sorted(self.rows, key=lambda r: r.rank))

    def row(self, alt_id: str) -> AlternativeResult:
        for r in self.rows:
            if r.id == alt_id:
                return r
        raise KeyError(alt_id)

    @property
    def has_ties(self) -> bool:
        return any(r.tied for r in self.rows)


def evaluate(config: EvaluationConfig) -> RankingReport:
    agg = config.aggregator()
    partial = []
    for alt_id, values in config.alternatives:
        row = tuple(dominance(config.kind, baseline, values[crit]) for crit, baseline in config.criteria)
        partial.append((alt_id, row, agg(row)))
    order = sorted(partial, key=lambda item: (-item[2], item[0]))
    counts: dict[Fraction, int] = {}
    for _, _, total in partial:
        counts[total] = counts.get(total, 0) + 1
    rank = {alt_id: i + 1 for i, (alt_id, _, _) in enumerate(order)}
    rows = tuple(
        AlternativeResult(alt_id, row, total, rank[alt_id], counts[total] > 1) for alt_id, row, total in partial
    )
    return RankingReport(config.kind, tuple(c for c, _ in config.criteria), rows)
