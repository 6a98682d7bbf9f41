"""Lexico-syntactic pattern matching for is-a relation extraction.

Templates are token sequences over POS-tagged sentences with two slots:
``HYPER`` matches one noun phrase (the hypernym) and ``HYPO+`` a list of
noun phrases separated by commas and/or conjunctions (the hyponyms).
Literal tokens match the token surface case-insensitively; a trailing
``?`` marks an optional literal.

Noun phrases are approximated as noun runs with adjectives on the
language's modifier side (before the noun in English, after it in
Portuguese); the emitted term is the run's head-noun lemma.  An article
may precede a noun phrase and is skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .contexts import TermSet
from .corpus import Corpus, Sentence
from .relations import RelationSet

_NOUN_TAGS = ("NOUN", "PROPN")

_LANG_CONJUNCTIONS = {"EN": frozenset({"and", "or"}), "PT": frozenset({"e", "ou"})}
_LANG_ARTICLES = {
    "EN": frozenset({"the", "a", "an"}),
    "PT": frozenset({"o", "a", "os", "as", "um", "uma", "uns", "umas"}),
}


@dataclass(frozen=True)
class TemplateElement:
    kind: str  # "lit" | "hyper" | "hypos"
    text: str = ""
    optional: bool = False


@dataclass(frozen=True)
class PatternTemplate:
    source: str
    elements: tuple[TemplateElement, ...]


@dataclass(frozen=True)
class PatternSet:
    language: str
    templates: tuple[PatternTemplate, ...]
    conjunctions: frozenset[str]
    articles: frozenset[str]


def parse_template(line: str) -> PatternTemplate:
    elements: list[TemplateElement] = []
    for tok in line.split():
        if tok == "HYPER":
            elements.append(TemplateElement("hyper"))
        elif tok == "HYPO+":
            elements.append(TemplateElement("hypos"))
        elif tok.endswith("?") and len(tok) > 1:
            elements.append(TemplateElement("lit", tok[:-1].casefold(), optional=True))
        else:
            elements.append(TemplateElement("lit", tok.casefold()))
    kinds = [e.kind for e in elements]
    if kinds.count("hyper") != 1 or kinds.count("hypos") != 1:
        raise ValueError(
            f"template must contain exactly one HYPER and one HYPO+ slot: {line!r}"
        )
    return PatternTemplate(source=line, elements=tuple(elements))


def _build(language: str, lines) -> PatternSet:
    language = language.upper()
    if language not in _LANG_CONJUNCTIONS:
        raise ValueError(f"no pattern support for language {language!r}")
    templates = []
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        templates.append(parse_template(line))
    if not templates:
        raise ValueError("pattern file contains no templates")
    return PatternSet(
        language=language,
        templates=tuple(templates),
        conjunctions=_LANG_CONJUNCTIONS[language],
        articles=_LANG_ARTICLES[language],
    )


def load_patterns(path: str | Path, language: str) -> PatternSet:
    """Read one template per line; blank lines and ``#`` comments are skipped."""
    with open(path, encoding="utf-8") as fh:
        return _build(language, fh)


def default_patterns(language: str) -> PatternSet:
    """The packaged template set for EN or PT."""
    if language.upper() not in _LANG_CONJUNCTIONS:
        raise ValueError(f"no pattern support for language {language!r}")
    name = f"patterns_{language.lower()}.txt"
    text = resources.files("taxorel.data").joinpath(name).read_text(encoding="utf-8")
    return _build(language, text.splitlines())


def _np_at(tokens: Sentence, pos: int, pset: PatternSet) -> tuple[int, str] | None:
    """Match a noun phrase starting at ``pos``; return (end, head lemma).

    An optional leading article is consumed.  English: ADJ* NOUN+ with the
    rightmost noun as head; Portuguese: NOUN+ ADJ* with the leftmost noun
    as head.
    """
    n = len(tokens)
    i = pos
    if i < n and tokens[i].pos == "OTHER" and tokens[i].surface.casefold() in pset.articles:
        i += 1
    if pset.language == "EN":
        while i < n and tokens[i].pos == "ADJ":
            i += 1
        start = i
        while i < n and tokens[i].pos in _NOUN_TAGS:
            i += 1
        if i == start:
            return None
        return i, tokens[i - 1].lemma.casefold()
    start = i
    while i < n and tokens[i].pos in _NOUN_TAGS:
        i += 1
    if i == start:
        return None
    head = tokens[start].lemma.casefold()
    while i < n and tokens[i].pos == "ADJ":
        i += 1
    return i, head


def _hypo_list(tokens: Sentence, pos: int, pset: PatternSet):
    """All parses of ``NP (SEP NP)*`` from ``pos``, shortest to longest.

    SEP is a comma, a conjunction, or a comma followed by a conjunction.
    Returns (end, heads) checkpoints so the caller can backtrack.
    """
    first = _np_at(tokens, pos, pset)
    if first is None:
        return []
    end, head = first
    checkpoints = [(end, [head])]
    heads = [head]
    n = len(tokens)
    while True:
        cur = checkpoints[-1][0]
        nxt = None
        for width in (2, 1):
            if cur + width > n:
                continue
            seps = [t.surface.casefold() for t in tokens[cur : cur + width]]
            if width == 2 and not (seps[0] == "," and seps[1] in pset.conjunctions):
                continue
            if width == 1 and not (seps[0] == "," or seps[0] in pset.conjunctions):
                continue
            np = _np_at(tokens, cur + width, pset)
            if np is not None:
                nxt = np
                break
        if nxt is None:
            return checkpoints
        heads = heads + [nxt[1]]
        checkpoints.append((nxt[0], heads))


def _match_template(
    template: PatternTemplate, tokens: Sentence, start: int, pset: PatternSet
) -> tuple[str, list[str]] | None:
    elements = template.elements
    n = len(tokens)

    def rec(ei: int, pos: int, hyper: str | None, hypos: list[str] | None):
        if ei == len(elements):
            return (hyper, hypos)
        el = elements[ei]
        if el.kind == "lit":
            if pos < n and tokens[pos].surface.casefold() == el.text:
                found = rec(ei + 1, pos + 1, hyper, hypos)
                if found:
                    return found
            if el.optional:
                return rec(ei + 1, pos, hyper, hypos)
            return None
        if el.kind == "hyper":
            np = _np_at(tokens, pos, pset)
            if np is None:
                return None
            return rec(ei + 1, np[0], np[1], hypos)
        # HYPO+ list: prefer the longest parse, backtracking on failure.
        for end, heads in reversed(_hypo_list(tokens, pos, pset)):
            found = rec(ei + 1, end, hyper, heads)
            if found:
                return found
        return None

    return rec(0, start, None, None)


def match_sentence(tokens: Sentence, pset: PatternSet) -> list[tuple[str, str]]:
    """All (hyponym, hypernym) lemma pairs matched anywhere in the sentence."""
    pairs: list[tuple[str, str]] = []
    for start in range(len(tokens)):
        for template in pset.templates:
            found = _match_template(template, tokens, start, pset)
            if found is None:
                continue
            hyper, hypos = found
            for hypo in hypos:
                if hypo != hyper:
                    pairs.append((hypo, hyper))
    return pairs


def extract_patterns(corpus: Corpus, patterns: PatternSet, vocab: TermSet) -> RelationSet:
    """Scan every sentence with the template set; keep in-vocabulary pairs."""
    if corpus.language != patterns.language:
        raise ValueError(
            f"corpus language {corpus.language} does not match "
            f"pattern language {patterns.language}"
        )
    relset = RelationSet("patt")
    for doc in corpus.documents:
        for sentence in doc.sentences:
            for hypo, hyper in match_sentence(sentence, patterns):
                if hypo in vocab and hyper in vocab:
                    relset.add(hypo, hyper)
    return relset
