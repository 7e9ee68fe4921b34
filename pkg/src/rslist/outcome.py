"""The list returned by every decoder."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class DecodeOutcome:
    """Candidate messages with their agreement counts.

    ``candidates`` is sorted by descending agreement, ties broken by the
    message tuple. ``solution_dim`` records the dimension of the affine
    solution space seen by the folded decoder (None for other decoders).
    """

    candidates: tuple[tuple[tuple[int, ...], int], ...] = ()
    solution_dim: int | None = None
    info: dict = field(default_factory=dict, compare=False)

    @classmethod
    def build(cls, pairs, **kw) -> "DecodeOutcome":
        uniq = {tuple(m): a for m, a in pairs}
        ordered = sorted(uniq.items(), key=lambda ma: (-ma[1], ma[0]))
        return cls(tuple(ordered), **kw)

    @property
    def messages(self) -> list[tuple[int, ...]]:
        return [m for m, _ in self.candidates]

    @property
    def message_set(self) -> set[tuple[int, ...]]:
        return {m for m, _ in self.candidates}

    def __len__(self):
        return len(self.candidates)

    def __contains__(self, message):
        return tuple(message) in self.message_set

    def to_json(self) -> list[dict]:
        return [{"message": list(m), "agreements": a} for m, a in self.candidates]
