"""Association weighting and entropy-based term generality.

Raw co-occurrence counts are turned into positive pointwise mutual
information (PPMI) or local mutual information (LMI) weights.  Context
entropies measure how informative a context is; a word's generality is the
median normalized entropy of its most associated contexts, so that more
general words score higher.
"""

from __future__ import annotations

import math
import statistics
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from pathlib import Path

from .contexts import ContextKey, ContextMatrix, context_label

DEFAULT_TOP_CONTEXTS = 50


class WeightedMatrix:
    """Term-by-context matrix of real weights; only positive entries stored."""

    def __init__(self, scheme: str, rows: Mapping[str, Mapping[ContextKey, float]]) -> None:
        if scheme not in ("ppmi", "lmi"):
            raise ValueError(f"scheme must be 'ppmi' or 'lmi', got {scheme!r}")
        self.scheme = scheme
        self._rows: dict[str, dict[ContextKey, float]] = {
            term: dict(row) for term, row in rows.items() if row
        }

    def terms(self) -> list[str]:
        return sorted(self._rows)

    def row(self, term: str) -> dict[ContextKey, float]:
        """Positive weights for a term (empty when none); do not mutate."""
        return self._rows.get(term, {})

    def __contains__(self, term: str) -> bool:
        return term in self._rows

    def __len__(self) -> int:
        return len(self._rows)


def _marginals(m: ContextMatrix):
    row_totals: dict[str, int] = {}
    col_totals: Counter = Counter()
    for term in m.terms():
        row = m.row(term)
        row_totals[term] = sum(row.values())
        for key, count in row.items():
            col_totals[key] += count
    grand = sum(row_totals.values())
    if grand <= 0:
        raise ValueError("matrix has no counts")
    return row_totals, col_totals, grand


def _weighted(m: ContextMatrix, local: bool) -> WeightedMatrix:
    row_totals, col_totals, grand = _marginals(m)
    rows: dict[str, dict[ContextKey, float]] = {}
    for term in m.terms():
        out: dict[ContextKey, float] = {}
        for key, count in m.row(term).items():
            # PMI with maximum-likelihood probabilities from matrix totals.
            pmi = math.log(count * grand / (row_totals[term] * col_totals[key]))
            if pmi > 0:
                out[key] = count * pmi if local else pmi
        if out:
            rows[term] = out
    return WeightedMatrix("lmi" if local else "ppmi", rows)


def weight_ppmi(m: ContextMatrix) -> WeightedMatrix:
    """Positive PMI weights: log p(t,c)/(p(t)p(c)), negatives clamped to zero."""
    return _weighted(m, local=False)


def weight_lmi(m: ContextMatrix) -> WeightedMatrix:
    """Local mutual information: count(t,c) * PMI(t,c), clamped at zero."""
    return _weighted(m, local=True)


@dataclass(frozen=True)
class EntropyTable:
    """Raw and min-max normalized Shannon entropy per context."""

    raw: dict[ContextKey, float]
    normalized: dict[ContextKey, float]


def context_entropies(m: ContextMatrix) -> EntropyTable:
    """Shannon entropy of each context's term distribution, then min-max scaled.

    H(c) = -sum_t p(t|c) log2 p(t|c).  Normalization maps the minimum
    entropy to 0 and the maximum to 1; if all contexts have equal entropy
    everything maps to 0.
    """
    col_counts: dict[ContextKey, list[int]] = {}
    for term in m.terms():
        for key, count in m.row(term).items():
            col_counts.setdefault(key, []).append(count)
    if not col_counts:
        raise ValueError("matrix has no contexts")
    raw: dict[ContextKey, float] = {}
    for key, counts in col_counts.items():
        total = sum(counts)
        h = 0.0
        for c in counts:
            p = c / total
            h -= p * math.log2(p)
        raw[key] = h
    lo, hi = min(raw.values()), max(raw.values())
    if hi > lo:
        normalized = {k: (v - lo) / (hi - lo) for k, v in raw.items()}
    else:
        normalized = {k: 0.0 for k in raw}
    return EntropyTable(raw=raw, normalized=normalized)


def word_generality(
    term: str,
    lmi: WeightedMatrix,
    entropies: EntropyTable,
    top_n: int = DEFAULT_TOP_CONTEXTS,
) -> float:
    """Median normalized entropy of the term's top ``top_n`` contexts by LMI.

    Fewer than ``top_n`` contexts are used as-is; ranking ties break on the
    lexicographic context label.  The median of an even-length list is the
    mean of the two middle values.  Raises ValueError for terms without any
    positively weighted context, whose generality is undefined.
    """
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    row = lmi.row(term)
    if not row:
        raise ValueError(f"generality undefined: {term!r} has no weighted contexts")
    ranked = sorted(row.items(), key=lambda kv: (-kv[1], context_label(kv[0])))
    return statistics.median(entropies.normalized[key] for key, _ in ranked[:top_n])


def word_generalities(
    lmi: WeightedMatrix,
    entropies: EntropyTable,
    terms: Iterable[str],
    top_n: int = DEFAULT_TOP_CONTEXTS,
) -> dict[str, float]:
    """Generality for every term that has one; undefined terms are skipped."""
    return {
        t: word_generality(t, lmi, entropies, top_n) for t in terms if lmi.row(t)
    }


def save_context_entropies(table: EntropyTable, path: str | Path) -> None:
    """Write sorted ``context<TAB>rawH<TAB>normH`` lines."""
    items = sorted((context_label(k), k) for k in table.raw)
    with open(path, "w", encoding="utf-8") as fh:
        for label, key in items:
            fh.write(f"{label}\t{table.raw[key]!r}\t{table.normalized[key]!r}\n")


def save_generalities(generalities: Mapping[str, float], path: str | Path) -> None:
    """Write sorted ``term<TAB>generality`` lines."""
    with open(path, "w", encoding="utf-8") as fh:
        for term in sorted(generalities):
            fh.write(f"{term}\t{generalities[term]!r}\n")
