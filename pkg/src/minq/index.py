"""Positional inverted index with a line-oriented text persistence format.

Documents are plain text; tokenization lowercases and splits on any run of
non-alphanumeric characters, numbering words from 0. The index maps each
term to per-document strictly increasing position lists, plus a document
table of source path and word count. Once built (or loaded) an index is
never mutated by queries, so it can be shared freely across threads.

The on-disk format is diffable text, fixed so golden files stay bit-exact:

    IVX1 <doc count>
    D <doc id> <word count> <path>
    ...
    T <term>
    P <doc id> <pos> <pos> ...
    ...

Terms are sorted, and posting lines within a term come in document order.
"""

import re
from dataclasses import dataclass

_WORD = re.compile(r"[^\W_]+")

_MAGIC = "IVX1"


class IndexFormatError(ValueError):
    """An index file failed to parse; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def tokenize(text: str):
    """Lowercased (term, position) pairs; words are alphanumeric runs."""
    return [(m.group().lower(), pos) for pos, m in enumerate(_WORD.finditer(text))]


@dataclass
class DocInfo:
    path: str
    word_count: int


class PositionalIndex:
    def __init__(self):
        self.docs: list[DocInfo] = []
        self.postings: dict[str, dict[int, list[int]]] = {}

    def add_document(self, path: str, text: str) -> int:
        doc_id = len(self.docs)
        tokens = tokenize(text)
        self.docs.append(DocInfo(path=path, word_count=len(tokens)))
        for term, pos in tokens:
            self.postings.setdefault(term, {}).setdefault(doc_id, []).append(pos)
        return doc_id

    def doc_count(self) -> int:
        return len(self.docs)

    def word_count(self, doc_id: int) -> int:
        return self.docs[doc_id].word_count

    def positions(self, term: str, doc_id: int) -> list[int]:
        """Positions of term in document; empty when absent."""
        return self.postings.get(term, {}).get(doc_id, [])

    def term_docs(self, term: str) -> set[int]:
        return set(self.postings.get(term, {}))

    def __eq__(self, other):
        return (
            isinstance(other, PositionalIndex)
            and self.docs == other.docs
            and self.postings == other.postings
        )


def build_index(documents) -> PositionalIndex:
    """Index an iterable of (path, text) pairs in order."""
    index = PositionalIndex()
    for path, text in documents:
        index.add_document(path, text)
    return index


def save_index(index: PositionalIndex, path) -> None:
    with open(path, "w", encoding="utf-8") as out:
        out.write(f"{_MAGIC} {index.doc_count()}\n")
        for doc_id, doc in enumerate(index.docs):
            out.write(f"D {doc_id} {doc.word_count} {doc.path}\n")
        for term in sorted(index.postings):
            out.write(f"T {term}\n")
            docs = index.postings[term]
            for doc_id in sorted(docs):
                positions = " ".join(str(p) for p in docs[doc_id])
                out.write(f"P {doc_id} {positions}\n")


def load_index(path) -> PositionalIndex:
    index = PositionalIndex()
    with open(path, "r", encoding="utf-8") as src:
        lines = src.read().splitlines()
    if not lines:
        raise IndexFormatError(1, "missing header")
    header = lines[0].split()
    if len(header) != 2 or header[0] != _MAGIC:
        raise IndexFormatError(1, f"bad header {lines[0]!r}")
    try:
        doc_count = int(header[1])
    except ValueError:
        raise IndexFormatError(1, f"bad document count {header[1]!r}") from None
    term = None
    for number, line in enumerate(lines[1:], start=2):
        kind, _, rest = line.partition(" ")
        if kind == "D":
            fields = rest.split(" ", 2)
            if len(fields) != 3:
                raise IndexFormatError(number, "document line needs id, count, path")
            try:
                doc_id, words = int(fields[0]), int(fields[1])
            except ValueError:
                raise IndexFormatError(number, f"bad document fields {rest!r}") from None
            if doc_id != len(index.docs):
                raise IndexFormatError(number, f"document id {doc_id} out of order")
            index.docs.append(DocInfo(path=fields[2], word_count=words))
        elif kind == "T":
            if not rest:
                raise IndexFormatError(number, "empty term")
            if rest in index.postings:
                raise IndexFormatError(number, f"duplicate term {rest!r}")
            term = rest
            index.postings[term] = {}
        elif kind == "P":
            if term is None:
                raise IndexFormatError(number, "postings before any term")
            fields = rest.split()
            try:
                values = [int(f) for f in fields]
            except ValueError:
                raise IndexFormatError(number, f"bad posting fields {rest!r}") from None
            if len(values) < 2:
                raise IndexFormatError(number, "posting line needs doc id and positions")
            doc_id, positions = values[0], values[1:]
            if not 0 <= doc_id < len(index.docs):
                raise IndexFormatError(number, f"unknown document id {doc_id}")
            if doc_id in index.postings[term]:
                raise IndexFormatError(number, f"duplicate postings for doc {doc_id}")
            limit = index.docs[doc_id].word_count
            for prev, cur in zip([-1] + positions, positions):
                if cur <= prev:
                    raise IndexFormatError(number, "positions not strictly increasing")
                if cur >= limit:
                    raise IndexFormatError(number, f"position {cur} beyond word count {limit}")
            index.postings[term][doc_id] = positions
        else:
            raise IndexFormatError(number, f"unknown record {line!r}")
    if len(index.docs) != doc_count:
        raise IndexFormatError(
            len(lines), f"header promised {doc_count} documents, found {len(index.docs)}"
        )
    return index
