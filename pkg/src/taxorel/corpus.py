"""POS-tagged corpus model and vertical token-format ingestion.

A corpus is an ordered sequence of documents, each an ordered list of
sentences, each a sequence of (surface, lemma, pos) tokens.  Tokens carry
one of five coarse part-of-speech tags; nouns, proper nouns, verbs and
adjectives count as content words.

The on-disk format is vertical text: one token per line with three
tab-separated fields ``surface<TAB>lemma<TAB>pos``, a blank line as
sentence boundary, and one file per document.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path

COARSE_TAGS = frozenset({"NOUN", "PROPN", "VERB", "ADJ", "OTHER"})
CONTENT_TAGS = frozenset({"NOUN", "PROPN", "VERB", "ADJ"})
LANGUAGES = ("EN", "PT")


class CorpusFormatError(ValueError):
    """Malformed vertical-format input; the message carries file and line."""


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    lemma: str
    pos: str

    def __post_init__(self) -> None:
        if not self.surface or not self.lemma:
            raise ValueError("token surface and lemma must be non-empty")
        if self.pos not in COARSE_TAGS:
            raise ValueError(f"unknown coarse POS tag: {self.pos!r}")

    @property
    def is_content(self) -> bool:
        return self.pos in CONTENT_TAGS


Sentence = tuple[TaggedToken, ...]


@dataclass(frozen=True)
class Document:
    id: str
    sentences: tuple[Sentence, ...]

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("document id must be non-empty")
        if any(len(s) == 0 for s in self.sentences):
            raise ValueError(f"document {self.id!r} contains an empty sentence")


@dataclass(frozen=True)
class Corpus:
    language: str
    documents: tuple[Document, ...]

    def __post_init__(self) -> None:
        if self.language not in LANGUAGES:
            raise ValueError(f"language must be one of {LANGUAGES}, got {self.language!r}")
        if not self.documents:
            raise ValueError("corpus must contain at least one document")
        ids = [d.id for d in self.documents]
        if len(set(ids)) != len(ids):
            raise ValueError("document ids must be unique within a corpus")

    def tokens(self):
        """Yield every token in document, sentence, position order."""
        for doc in self.documents:
            for sentence in doc.sentences:
                yield from sentence


@dataclass(frozen=True)
class CorpusStats:
    num_documents: int
    num_sentences: int
    num_content_words: int
    vocabulary_size: int


def load_pos_mapping(path: str | Path) -> dict[str, str]:
    """Read a ``finePOS<TAB>coarsePOS`` mapping file.

    The coarse side must be one of the five coarse tags.
    """
    mapping: dict[str, str] = {}
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise CorpusFormatError(
                    f"{path}:{lineno}: expected 2 tab-separated fields, got {len(fields)}"
                )
            fine, coarse = fields
            coarse = coarse.strip().upper()
            if coarse not in COARSE_TAGS:
                raise CorpusFormatError(
                    f"{path}:{lineno}: {coarse!r} is not a coarse POS tag"
                )
            mapping[fine.strip()] = coarse
    return mapping


def coarse_pos(tag: str, mapping: Mapping[str, str] | None = None) -> str:
    """Map a parser tag to a coarse tag; anything unrecognized becomes OTHER."""
    if mapping is not None:
        tag = mapping.get(tag, tag)
    tag = tag.upper()
    return tag if tag in COARSE_TAGS else "OTHER"


def _parse_document(path: Path, mapping: Mapping[str, str] | None) -> Document:
    sentences: list[Sentence] = []
    current: list[TaggedToken] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip():
                if current:
                    sentences.append(tuple(current))
                    current = []
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise CorpusFormatError(
                    f"{path}:{lineno}: expected 3 tab-separated fields, got {len(fields)}"
                )
            surface, lemma, tag = fields
            if not surface or not lemma or not tag:
                raise CorpusFormatError(f"{path}:{lineno}: empty field in token line")
            current.append(TaggedToken(surface, lemma, coarse_pos(tag, mapping)))
    if current:
        sentences.append(tuple(current))
    return Document(id=path.name, sentences=tuple(sentences))


def load_corpus(
    path: str | Path,
    language: str,
    pos_mapping: Mapping[str, str] | None = None,
) -> Corpus:
    """Load a vertical-format corpus from a file or a directory of files.

    Each file becomes one document whose id is the file name; files in a
    directory are read in sorted name order so repeated loads are stable.
    """
    path = Path(path)
    if path.is_dir():
        files = sorted(
            p for p in path.iterdir() if p.is_file() and not p.name.startswith(".")
        )
        if not files:
            raise CorpusFormatError(f"empty corpus: no files under {path}")
    else:
        files = [path]
    documents = tuple(_parse_document(f, pos_mapping) for f in files)
    return Corpus(language=language.upper(), documents=documents)


def save_corpus(corpus: Corpus, directory: str | Path) -> None:
    """Write each document back to vertical format under ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for doc in corpus.documents:
        chunks = []
        for sentence in doc.sentences:
            chunks.append(
                "\n".join(f"{t.surface}\t{t.lemma}\t{t.pos}" for t in sentence)
            )
        text = "\n\n".join(chunks)
        (directory / doc.id).write_text(text + ("\n" if text else ""), encoding="utf-8")


def sentence_documents(corpus: Corpus) -> Corpus:
    """Split every sentence into its own pseudo-document.

    Useful for corpora without document borders, where the effective
    document size is a single sentence.  Pseudo-document ids are derived
    from the source document id and the 1-based sentence index.
    """
    documents = []
    for doc in corpus.documents:
        for i, sentence in enumerate(doc.sentences, 1):
            documents.append(Document(id=f"{doc.id}#s{i}", sentences=(sentence,)))
    if not documents:
        raise ValueError("corpus has no sentences to split into pseudo-documents")
    return Corpus(language=corpus.language, documents=tuple(documents))


def corpus_stats(corpus: Corpus) -> CorpusStats:
    """Count documents, sentences, content-word tokens and distinct lemmas.

    Only content words (NOUN/PROPN/VERB/ADJ) enter the token and
    vocabulary counts; lemmas are case-folded before deduplication.
    """
    num_sentences = 0
    num_content = 0
    lemmas: set[str] = set()
    for doc in corpus.documents:
        num_sentences += len(doc.sentences)
        for sentence in doc.sentences:
            for token in sentence:
                if token.is_content:
                    num_content += 1
                    lemmas.add(token.lemma.casefold())
    return CorpusStats(
        num_documents=len(corpus.documents),
        num_sentences=num_sentences,
        num_content_words=num_content,
        vocabulary_size=len(lemmas),
    )
