"""
Modelos para conteos de caminos y clasificación de unambigüedad
"""
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple
from pydantic import BaseModel
from app.utils.constants import CountKind

@dataclass(frozen=True)
class PathCount:
    """
    Conteo exacto N(i,j): finito, infinito (ciclo) o desbordado (mayor que el tope)
    """
    kind: CountKind
    value: Optional[int] = None  # conteo si es finito, tope si es desbordado

    @classmethod
    def finite(cls, count: int) -> "PathCount":
        if count < 0:
            raise ValueError("Un conteo finito no puede ser negativo")
        return cls(CountKind.FINITE, int(count))

    @classmethod
    def infinite(cls) -> "PathCount":
        return cls(CountKind.INFINITE)

    @classmethod
    def overflow(cls, cap: int) -> "PathCount":
        return cls(CountKind.OVERFLOW, int(cap))

    @property
    def is_finite(self) -> bool:
        return self.kind == CountKind.FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind == CountKind.INFINITE

    @property
    def is_overflow(self) -> bool:
        return self.kind == CountKind.OVERFLOW

    def exceeds(self, k: int) -> bool:
        """True si el conteo es mayor que k (infinito y desbordado siempre lo son)"""
        if self.is_finite:
            return self.value > k
        if self.is_overflow:
            return self.value >= k
        return True

    def sort_key(self) -> Tuple[int, int]:
        """Orden total: finitos < desbordados < infinito"""
        order = {CountKind.FINITE: 0, CountKind.OVERFLOW: 1, CountKind.INFINITE: 2}
        return order[self.kind], self.value or 0

    def to_json(self):
        """Representación JSON: entero, "inf" o ">cap" """
        if self.is_finite:
            return self.value
        if self.is_infinite:
            return "inf"
        return f">{self.value}"

    def __str__(self) -> str:
        return str(self.to_json())

@dataclass(frozen=True)
class PathCountMatrix:
    """Matriz n×n de conteos N(i,j)"""
    n: int
    entries: Tuple[Tuple[PathCount, ...], ...]

    def get(self, i: int, j: int) -> PathCount:
        return self.entries[i][j]

    def __getitem__(self, pair: Tuple[int, int]) -> PathCount:
        i, j = pair
        return self.entries[i][j]

    def pairs(self) -> Iterator[Tuple[int, int, PathCount]]:
        """Recorre (i, j, N(i,j)) en orden de filas"""
        for i, row in enumerate(self.entries):
            for j, count in enumerate(row):
                yield i, j, count

    def max_count(self) -> PathCount:
        """Máximo conteo sobre todos los pares"""
        return max((c for _, _, c in self.pairs()), key=PathCount.sort_key)

    def row_max(self, i: int) -> PathCount:
        return max(self.entries[i], key=PathCount.sort_key)

    def column_max(self, j: int) -> PathCount:
        return max((row[j] for row in self.entries), key=PathCount.sort_key)

    @property
    def has_infinite(self) -> bool:
        return any(c.is_infinite for _, _, c in self.pairs())

class UnambiguityReport(BaseModel):
    """Clasificación según las tres nociones de unambigüedad"""
    k: int
    s: int
    t: int
    unambiguous_st: bool
    st_witness: Optional[Tuple[int, int]] = None
    reach_unambiguous_s: bool
    reach_witness: Optional[int] = None
    strongly_unambiguous: bool
    strong_witness: Optional[Tuple[int, int]] = None
    infinite_detected: bool = False
    max_count: str = "0"
