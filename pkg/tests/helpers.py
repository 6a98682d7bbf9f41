"""Shared fixture builders and independent brute-force oracles.

The oracles here deliberately use different algorithms than the library
(sequential remove-and-test reduction, Floyd-Warshall closures, naive
pairwise agglomerative merging) so tests compare two independent routes.
"""

from __future__ import annotations

import random
from itertools import combinations

from taxorel.contexts import ContextMatrix
from taxorel.corpus import Corpus, Document, TaggedToken
from taxorel.gold import GoldTaxonomy, Synset
from taxorel.taxonomy import Taxonomy

_POS = {"N": "NOUN", "P": "PROPN", "V": "VERB", "J": "ADJ", "O": "OTHER"}


def sent(text: str) -> tuple[TaggedToken, ...]:
    """Build a sentence from "word:N word:V" shorthand (surface == lemma)."""
    tokens = []
    for item in text.split():
        word, _, letter = item.rpartition(":")
        tokens.append(TaggedToken(word, word, _POS[letter]))
    return tuple(tokens)


def tok(surface: str, lemma: str, pos: str) -> TaggedToken:
    return TaggedToken(surface, lemma, pos)


def doc(doc_id: str, *sentences) -> Document:
    sents = tuple(sent(s) if isinstance(s, str) else tuple(s) for s in sentences)
    return Document(doc_id, sents)


def corpus(*documents, language: str = "EN") -> Corpus:
    return Corpus(language, tuple(documents))


def gold_from(*rows) -> GoldTaxonomy:
    """Rows of (id, lemmas, hypernym_ids)."""
    return GoldTaxonomy(
        Synset(sid, frozenset(lemmas), frozenset(hypers)) for sid, lemmas, hypers in rows
    )


def doc_matrix(rows: dict) -> ContextMatrix:
    """Document matrix from {term: {doc: count}} or {term: [docs]} rows."""
    norm = {}
    for term, docs in rows.items():
        norm[term] = docs if isinstance(docs, dict) else {d: 1 for d in docs}
    return ContextMatrix("document", norm)


# --- golden fixtures -------------------------------------------------------


def two_tree_forest() -> Taxonomy:
    """Two reduced trees over 17 terms used by the hierarchy-metric goldens.

    Tree 1 (root t01): leaf depths 1, 4, 4, 5, 5, 6 and branch widths
    2, 1, 1, 4, 1, 2, 1.  Tree 2 (root t14): leaf depths 2, 2 and widths
    1, 2.  Expected: 17 terms, 2 roots, max depth 6, min depth 1,
    avg depth 29/2 = 14.5 (per root) or 29/8 (per leaf), max width 4,
    min width 1, avg width (12/7 + 3/2)/2 ~ 1.61.
    """
    edges = [
        ("t01", "t02"),
        ("t01", "t03"),
        ("t03", "t04"),
        ("t04", "t05"),
        ("t05", "t06"),
        ("t05", "t07"),
        ("t05", "t09"),
        ("t05", "t10"),
        ("t07", "t08"),
        ("t10", "t11"),
        ("t10", "t12"),
        ("t12", "t13"),
        ("t14", "t15"),
        ("t15", "t16"),
        ("t15", "t17"),
    ]
    return Taxonomy(edges, is_reduced=True)


def diamond_dag() -> Taxonomy:
    """Six-node digraph whose reduction removes exactly A->F, B->F, C->F.

    A, B and C each point at D, E and F; D and E point at F, so the three
    direct edges into F are implied by two-step paths.
    """
    edges = [(u, v) for u in "ABC" for v in "DEF"] + [("D", "F"), ("E", "F")]
    return Taxonomy(edges)


def car_taxonomy_and_gold() -> tuple[Taxonomy, GoldTaxonomy]:
    """Extracted taxonomy vs gold for the common-relations golden test.

    The extracted side places vehicle above car through an intermediate
    term absent from the gold standard, and claims car->tram which the
    gold does not contain (though it knows the term tram).
    """
    extracted = Taxonomy(
        [
            ("vehicle", "motor_vehicle"),
            ("motor_vehicle", "car"),
            ("car", "cab"),
            ("car", "tram"),
        ]
    )
    gold = gold_from(
        (1, ["vehicle"], []),
        (2, ["car"], [1]),
        (3, ["cab"], [2]),
        (4, ["tram"], [1]),
        (5, ["bus"], [1]),
    )
    return extracted, gold


# --- brute-force oracles ---------------------------------------------------


def oracle_reachable(edges: set[tuple[str, str]], src: str, dst: str) -> bool:
    """Plain DFS over an edge set; at least one edge must be taken."""
    stack = [c for p, c in edges if p == src]
    seen = set()
    while stack:
        node = stack.pop()
        if node == dst:
            return True
        if node in seen:
            continue
        seen.add(node)
        stack.extend(c for p, c in edges if p == node)
    return False


def oracle_reduction(edges: set[tuple[str, str]]) -> set[tuple[str, str]]:
    """Remove-and-test reduction: drop each edge still implied by a path."""
    result = set(edges)
    for edge in sorted(edges):
        result.discard(edge)
        if not oracle_reachable(result, edge[0], edge[1]):
            result.add(edge)
    return result


def oracle_closure(nodes, edges) -> set[tuple[str, str]]:
    """All (ancestor, descendant) pairs via Floyd-Warshall-style closure."""
    nodes = sorted(nodes)
    reach = {(u, v): False for u in nodes for v in nodes}
    for u, v in edges:
        reach[(u, v)] = True
    for k in nodes:
        for i in nodes:
            if reach[(i, k)]:
                for j in nodes:
                    if reach[(k, j)]:
                        reach[(i, j)] = True
    return {pair for pair, ok in reach.items() if ok}


def oracle_evaluate(taxo: Taxonomy, gold: GoldTaxonomy):
    """Literal per-term common-relations evaluation, built from closures.

    Returns (precision, recall, fmeasure, common, extracted, gold_count).
    """
    t_closure = oracle_closure(taxo.nodes, taxo.edge_set())

    synsets = gold.synsets
    syn_edges = {
        (sid, hid) for sid, syn in synsets.items() for hid in syn.hypernym_ids
    }
    syn_closure = oracle_closure(synsets.keys(), {(h, s) for s, h in syn_edges})
    # syn_closure holds (ancestor_synset, descendant_synset) pairs.
    g_closure = set()
    for anc, desc in syn_closure:
        for hyper in synsets[anc].lemmas:
            for hypo in synsets[desc].lemmas:
                g_closure.add((hyper.casefold(), hypo.casefold()))

    c_t = set(taxo.nodes)
    c_gs = {l.casefold() for syn in synsets.values() for l in syn.lemmas}
    shared = c_t & c_gs

    def cr(c, order_pairs):
        out = set()
        for other in shared:
            if (other, c) in order_pairs:
                out.add((other, c))
            if (c, other) in order_pairs:
                out.add((c, other))
        return out

    common = extracted = gold_count = 0
    for c in shared:
        cr_t = cr(c, t_closure)
        cr_g = cr(c, g_closure)
        common += len(cr_t & cr_g)
        extracted += len(cr_t)
        gold_count += len(cr_g)
    precision = common / extracted if extracted else 0.0
    recall = common / gold_count if gold_count else 0.0
    f = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f, common, extracted, gold_count


def oracle_average_linkage(vectors: dict[str, dict], k: int) -> set[frozenset]:
    """Naive pairwise agglomerative clustering with average linkage."""

    def cosine_distance(u, v):
        dot = sum(w * v[f] for f, w in u.items() if f in v)
        nu = sum(w * w for w in u.values()) ** 0.5
        nv = sum(w * w for w in v.values()) ** 0.5
        if nu == 0 or nv == 0:
            return 1.0
        return 1.0 - dot / (nu * nv)

    terms = sorted(vectors)
    dist = {
        frozenset((u, v)): cosine_distance(vectors[u], vectors[v])
        for u, v in combinations(terms, 2)
    }
    clusters = [[t] for t in terms]
    while len(clusters) > k:
        best = None
        for i, j in combinations(range(len(clusters)), 2):
            pairs = [frozenset((u, v)) for u in clusters[i] for v in clusters[j]]
            d = sum(dist[p] for p in pairs) / len(pairs)
            if best is None or d < best[0] - 1e-12:
                best = (d, i, j)
        _, i, j = best
        merged = sorted(clusters[i] + clusters[j])
        clusters = [c for idx, c in enumerate(clusters) if idx not in (i, j)]
        clusters.append(merged)
    return {frozenset(c) for c in clusters}


# --- random generators -----------------------------------------------------


def random_dag(rng: random.Random, max_nodes: int = 12) -> Taxonomy:
    """Random DAG: edges only go forward in a shuffled node order."""
    n = rng.randint(2, max_nodes)
    names = [f"n{i:02d}" for i in range(n)]
    rng.shuffle(names)
    edges = set()
    for i, j in combinations(range(n), 2):
        if rng.random() < 0.35:
            edges.add((names[i], names[j]))
    return Taxonomy(edges, nodes=names)


def random_corpus(rng: random.Random, language: str = "EN") -> Corpus:
    """Small random corpus mixing POS tags; lemmas drawn from a 12-word pool."""
    pool = [f"w{i:02d}" for i in range(12)]
    tags = ["NOUN", "NOUN", "NOUN", "PROPN", "VERB", "ADJ", "OTHER"]
    documents = []
    for d in range(rng.randint(2, 5)):
        sentences = []
        for _ in range(rng.randint(1, 4)):
            tokens = tuple(
                TaggedToken(w, w, rng.choice(tags))
                for w in rng.choices(pool, k=rng.randint(2, 9))
            )
            sentences.append(tokens)
        documents.append(Document(f"doc{d}.txt", tuple(sentences)))
    return Corpus(language, tuple(documents))
