import pytest

from taxorel.contexts import TermSet
from taxorel.patterns import (
    default_patterns,
    extract_patterns,
    load_patterns,
    match_sentence,
    parse_template,
)

from helpers import corpus, doc, sent, tok


EN = default_patterns("EN")
PT = default_patterns("PT")


def en_pairs(tokens):
    return set(match_sentence(tokens, EN))


class TestEnglishPatterns:
    def test_such_as_with_np_head(self):
        tokens = (
            tok("The", "the", "OTHER"),
            tok("bow", "bow", "NOUN"),
            tok("lute", "lute", "NOUN"),
            tok(",", ",", "OTHER"),
            tok("such", "such", "ADJ"),
            tok("as", "as", "OTHER"),
            tok("the", "the", "OTHER"),
            tok("Bambarandang", "Bambarandang", "PROPN"),
            tok(",", ",", "OTHER"),
            tok("is", "be", "VERB"),
            tok("plucked", "pluck", "VERB"),
        )
        assert en_pairs(tokens) == {("bambarandang", "lute")}

    def test_no_trigger_yields_nothing(self):
        assert en_pairs(sent("the:O dog:N barked:V")) == set()

    def test_such_as_list(self):
        tokens = (
            tok("animals", "animal", "NOUN"),
            tok("such", "such", "ADJ"),
            tok("as", "as", "OTHER"),
            tok("dogs", "dog", "NOUN"),
            tok(",", ",", "OTHER"),
            tok("cats", "cat", "NOUN"),
            tok("and", "and", "OTHER"),
            tok("horses", "horse", "NOUN"),
        )
        assert en_pairs(tokens) == {
            ("dog", "animal"),
            ("cat", "animal"),
            ("horse", "animal"),
        }

    def test_or_other(self):
        tokens = (
            tok("bruises", "bruise", "NOUN"),
            tok(",", ",", "OTHER"),
            tok("wounds", "wound", "NOUN"),
            tok("or", "or", "OTHER"),
            tok("other", "other", "ADJ"),
            tok("injuries", "injury", "NOUN"),
        )
        assert en_pairs(tokens) == {("bruise", "injury"), ("wound", "injury")}

    def test_and_other_with_oxford_comma(self):
        tokens = (
            tok("cars", "car", "NOUN"),
            tok(",", ",", "OTHER"),
            tok("trucks", "truck", "NOUN"),
            tok(",", ",", "OTHER"),
            tok("and", "and", "OTHER"),
            tok("other", "other", "ADJ"),
            tok("vehicles", "vehicle", "NOUN"),
        )
        assert en_pairs(tokens) == {("car", "vehicle"), ("truck", "vehicle")}

    def test_including(self):
        tokens = (
            tok("continents", "continent", "NOUN"),
            tok(",", ",", "OTHER"),
            tok("including", "include", "VERB"),
            tok("Africa", "Africa", "PROPN"),
            tok("and", "and", "OTHER"),
            tok("Asia", "Asia", "PROPN"),
        )
        assert en_pairs(tokens) == {("africa", "continent"), ("asia", "continent")}

    def test_especially(self):
        tokens = (
            tok("composers", "composer", "NOUN"),
            tok(",", ",", "OTHER"),
            tok("especially", "especially", "OTHER"),
            tok("Bach", "Bach", "PROPN"),
        )
        assert en_pairs(tokens) == {("bach", "composer")}

    def test_such_np_as(self):
        tokens = (
            tok("such", "such", "ADJ"),
            tok("trees", "tree", "NOUN"),
            tok("as", "as", "OTHER"),
            tok("oaks", "oak", "NOUN"),
            tok("and", "and", "OTHER"),
            tok("pines", "pine", "NOUN"),
        )
        assert en_pairs(tokens) == {("oak", "tree"), ("pine", "tree")}

    def test_head_is_rightmost_noun_of_run(self):
        tokens = (
            tok("big", "big", "ADJ"),
            tok("sea", "sea", "NOUN"),
            tok("animals", "animal", "NOUN"),
            tok("such", "such", "ADJ"),
            tok("as", "as", "OTHER"),
            tok("whales", "whale", "NOUN"),
        )
        assert en_pairs(tokens) == {("whale", "animal")}

    def test_self_pairs_are_dropped(self):
        tokens = (
            tok("animals", "animal", "NOUN"),
            tok("such", "such", "ADJ"),
            tok("as", "as", "OTHER"),
            tok("animals", "animal", "NOUN"),
        )
        assert en_pairs(tokens) == set()


class TestPortuguesePatterns:
    def test_tais_como(self):
        tokens = (
            tok("animais", "animal", "NOUN"),
            tok("tais", "tal", "OTHER"),
            tok("como", "como", "OTHER"),
            tok("cães", "cão", "NOUN"),
            tok("e", "e", "OTHER"),
            tok("gatos", "gato", "NOUN"),
        )
        assert set(match_sentence(tokens, PT)) == {
            ("cão", "animal"),
            ("gato", "animal"),
        }

    def test_np_head_is_leftmost_noun(self):
        tokens = (
            tok("cachorros", "cachorro", "NOUN"),
            tok("pequenos", "pequeno", "ADJ"),
            tok("e", "e", "OTHER"),
            tok("outros", "outro", "OTHER"),
            tok("animais", "animal", "NOUN"),
        )
        assert set(match_sentence(tokens, PT)) == {("cachorro", "animal")}

    def test_incluindo(self):
        tokens = (
            tok("frutas", "fruta", "NOUN"),
            tok(",", ",", "OTHER"),
            tok("incluindo", "incluir", "VERB"),
            tok("maçãs", "maçã", "NOUN"),
        )
        assert set(match_sentence(tokens, PT)) == {("maçã", "fruta")}


class TestExtractPatterns:
    def _corpus(self):
        tokens = (
            tok("animals", "animal", "NOUN"),
            tok("such", "such", "ADJ"),
            tok("as", "as", "OTHER"),
            tok("dogs", "dog", "NOUN"),
            tok("and", "and", "OTHER"),
            tok("cats", "cat", "NOUN"),
        )
        return corpus(doc("a.txt", tokens))

    def test_relations_filtered_to_vocabulary(self):
        relset = extract_patterns(self._corpus(), EN, TermSet(["animal", "dog"]))
        assert relset.pair_set() == {("dog", "animal")}
        assert relset.method == "patt"

    def test_full_vocabulary(self):
        relset = extract_patterns(
            self._corpus(), EN, TermSet(["animal", "dog", "cat"])
        )
        assert relset.pair_set() == {("dog", "animal"), ("cat", "animal")}

    def test_language_mismatch_is_an_error(self):
        with pytest.raises(ValueError):
            extract_patterns(self._corpus(), PT, TermSet(["animal"]))

    def test_duplicate_matches_deduped(self):
        c = corpus(doc("a.txt", self._corpus().documents[0].sentences[0],
                       self._corpus().documents[0].sentences[0]))
        relset = extract_patterns(c, EN, TermSet(["animal", "dog", "cat"]))
        assert len(relset) == 2


class TestTemplateParsing:
    def test_slots_required(self):
        with pytest.raises(ValueError):
            parse_template("HYPER such as")
        with pytest.raises(ValueError):
            parse_template("such as HYPO+")

    def test_optional_literal(self):
        template = parse_template("HYPER ,? like HYPO+")
        kinds = [(e.kind, e.text, e.optional) for e in template.elements]
        assert kinds[1] == ("lit", ",", True)

    def test_load_custom_file(self, tmp_path):
        path = tmp_path / "patterns.txt"
        path.write_text("# comment\nHYPER like HYPO+\n", encoding="utf-8")
        pset = load_patterns(path, "EN")
        assert len(pset.templates) == 1
        tokens = (
            tok("animals", "animal", "NOUN"),
            tok("like", "like", "OTHER"),
            tok("dogs", "dog", "NOUN"),
        )
        assert set(match_sentence(tokens, pset)) == {("dog", "animal")}

    def test_default_sets_have_six_templates_each(self):
        assert len(EN.templates) == 6
        assert len(PT.templates) == 6

    def test_unknown_language(self):
        with pytest.raises(ValueError):
            default_patterns("DE")
