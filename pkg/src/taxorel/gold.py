"""Gold-standard synset digraph with transitive hypernym queries.

A gold taxonomy is a directed graph of synsets (sets of synonymous lemmas)
whose edges point from a synset to its hypernym synsets.  Queries are
lemma-level: a lemma is a hypernym of another if any synset of the latter
reaches any synset of the former through one or more hypernym edges.

Lemmas are case-folded for lookup; diacritics are preserved.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path


class GoldFormatError(ValueError):
    """Malformed synset-lines input; the message carries file and line."""


@dataclass(frozen=True)
class Synset:
    id: int
    lemmas: frozenset[str]
    hypernym_ids: frozenset[int]

    def __post_init__(self) -> None:
        if not self.lemmas:
            raise ValueError(f"synset {self.id} has no lemmas")


class GoldTaxonomy:
    """Immutable synset graph with a lemma index and reachability queries."""

    def __init__(self, synsets: Iterable[Synset]) -> None:
        self._synsets: dict[int, Synset] = {}
        for syn in synsets:
            if syn.id in self._synsets:
                raise ValueError(f"duplicate synset id {syn.id}")
            # A synset listed as its own hypernym is a self-cycle; drop it.
            if syn.id in syn.hypernym_ids:
                syn = Synset(syn.id, syn.lemmas, syn.hypernym_ids - {syn.id})
            self._synsets[syn.id] = syn
        for syn in self._synsets.values():
            for hid in syn.hypernym_ids:
                if hid not in self._synsets:
                    raise ValueError(
                        f"synset {syn.id} references unknown hypernym id {hid}"
                    )
        self._lemma_index: dict[str, set[int]] = {}
        for syn in self._synsets.values():
            for lemma in syn.lemmas:
                self._lemma_index.setdefault(lemma.casefold(), set()).add(syn.id)
        self._ancestor_cache: dict[int, frozenset[int]] = {}

    @property
    def synsets(self) -> dict[int, Synset]:
        return dict(self._synsets)

    def __len__(self) -> int:
        return len(self._synsets)

    def contains_term(self, lemma: str) -> bool:
        return lemma.casefold() in self._lemma_index

    def term_set(self) -> frozenset[str]:
        return frozenset(self._lemma_index)

    def synsets_of(self, lemma: str) -> frozenset[int]:
        return frozenset(self._lemma_index.get(lemma.casefold(), ()))

    def _ancestors(self, sid: int) -> frozenset[int]:
        """Synset ids reachable via one or more hypernym edges.

        Traversal keeps a visited set, so cycles among distinct synsets
        (present in noisy gold data) terminate; ``sid`` itself appears only
        when a cycle leads back to it.
        """
        cached = self._ancestor_cache.get(sid)
        if cached is not None:
            return cached
        seen: set[int] = set()
        queue = deque(self._synsets[sid].hypernym_ids)
        while queue:
            cur = queue.popleft()
            if cur in seen:
                continue
            seen.add(cur)
            queue.extend(self._synsets[cur].hypernym_ids)
        result = frozenset(seen)
        self._ancestor_cache[sid] = result
        return result

    def is_hypernym(self, hyper: str, hypo: str) -> bool:
        """True iff some synset of ``hypo`` reaches some synset of ``hyper``.

        Unknown lemmas yield False rather than an error, keeping evaluation
        loops total.
        """
        hyper_ids = self._lemma_index.get(hyper.casefold())
        hypo_ids = self._lemma_index.get(hypo.casefold())
        if not hyper_ids or not hypo_ids:
            return False
        return any(not hyper_ids.isdisjoint(self._ancestors(sid)) for sid in hypo_ids)

    def reaches(self, ancestor: str, descendant: str) -> bool:
        """Alias of :meth:`is_hypernym`; shared interface with Taxonomy."""
        return self.is_hypernym(ancestor, descendant)

    def ancestor_lemmas(self, lemma: str) -> frozenset[str]:
        """Case-folded lemmas of every transitive hypernym synset of ``lemma``."""
        out: set[str] = set()
        for sid in self._lemma_index.get(lemma.casefold(), ()):
            for aid in self._ancestors(sid):
                out.update(l.casefold() for l in self._synsets[aid].lemmas)
        return frozenset(out)


def load_gold(path: str | Path) -> GoldTaxonomy:
    """Read a synset-lines file: ``id<TAB>lemma1|lemma2|...<TAB>hyp1,hyp2,...``.

    An empty third field marks a root synset.  Self-cycles are dropped;
    duplicate ids and dangling hypernym references are errors.
    """
    path = Path(path)
    synsets: list[Synset] = []
    seen_ids: set[int] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise GoldFormatError(
                    f"{path}:{lineno}: expected 3 tab-separated fields, got {len(fields)}"
                )
            try:
                sid = int(fields[0])
            except ValueError:
                raise GoldFormatError(f"{path}:{lineno}: bad synset id {fields[0]!r}") from None
            if sid in seen_ids:
                raise GoldFormatError(f"{path}:{lineno}: duplicate synset id {sid}")
            seen_ids.add(sid)
            lemmas = frozenset(x for x in fields[1].split("|") if x)
            if not lemmas:
                raise GoldFormatError(f"{path}:{lineno}: synset {sid} has no lemmas")
            try:
                hypernyms = frozenset(int(x) for x in fields[2].split(",") if x)
            except ValueError:
                raise GoldFormatError(
                    f"{path}:{lineno}: bad hypernym id list {fields[2]!r}"
                ) from None
            synsets.append(Synset(sid, lemmas, hypernyms))
    try:
        return GoldTaxonomy(synsets)
    except ValueError as exc:
        raise GoldFormatError(f"{path}: {exc}") from None
