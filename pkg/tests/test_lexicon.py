from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from aspectscore.errors import NoOpinionTerms, ParseError, ValidationError
from aspectscore.lexicon import (INTENSIFIER, NEGATOR, OPINION, Lexicon, LexiconEntry,
                                 apply_modifier, intensify, load_lexicon, match_opinion_terms,
                                 negate, opinion_value, parse_lexicon, validate_lexicon)
from aspectscore.text import tokenize


def test_reference_fixture_counts(lexicon):
    assert lexicon.count(OPINION) == 11
    assert lexicon.count(NEGATOR) == 2
    assert lexicon.count(INTENSIFIER) == 2
    assert validate_lexicon(lexicon.entries) == []


def test_empty_lexicon_has_no_opinions():
    lex = load_lexicon("")
    assert len(lex) == 0
    assert match_opinion_terms(lex, tokenize("she is good")) == []
    with pytest.raises(NoOpinionTerms):
        opinion_value([])


def test_duplicate_phrase():
    with pytest.raises(ValidationError) as ei:
        load_lexicon("good\topinion\t7\ngood\topinion\t6\n")
    assert "good" in str(ei.value)


@pytest.mark.parametrize("text, lineno", [
    ("good\topinion\n", 1),
    ("# c\ngood\tadjective\t3\n", 2),
    ("good\topinion\tseven\n", 1),
    ("not\tnegator\t3\n", 1),
    ("lonely\n", 1),
])
def test_parse_errors(text, lineno):
    with pytest.raises(ParseError) as ei:
        parse_lexicon(text)
    assert ei.value.lineno == lineno


def test_score_out_of_range_is_violation():
    assert validate_lexicon(parse_lexicon("great\topinion\t11\n")) == \
        ["score out of range [0,10]: great"]


def _match(lexicon, sentence, aspect_words=()):
    tokens = tokenize(sentence)
    spans = [(tokens.index(w), tokens.index(w) + 1) for w in aspect_words]
    return match_opinion_terms(lexicon, tokens, spans)


def test_trait_adjective_doubles_as_opinion(lexicon):
    (m,) = _match(lexicon, "he is an obedient student", ["obedient"])
    assert m.entry.phrase == "obedient"
    assert m.effective_score == 7


def test_intensified_trait(lexicon):
    (m,) = _match(lexicon, "she is a very punctual student", ["punctual"])
    assert [x.entry.phrase for x in m.applied_modifiers] == ["very"]
    assert m.effective_score == 7


def test_two_terms_with_intensifier(lexicon):
    ms = _match(lexicon, "she is an elegant dancer but she is very talkative", ["dancer"])
    assert [(m.entry.phrase, m.effective_score) for m in ms] == [("elegant", 8), ("talkative", 2)]
    assert opinion_value(ms) == 5


def test_should_be_negates(lexicon):
    (m,) = _match(lexicon, "he should be more participative in co-curricular activities",
                  ["co-curricular"])
    assert m.entry.phrase == "participative"
    assert m.effective_score == 4


def test_longest_match_good_marks(lexicon):
    (m,) = _match(lexicon, "he scored good marks in dbms", ["dbms"])
    assert m.entry.phrase == "good marks"
    assert m.effective_score == 6
    (m,) = _match(lexicon, "she is good in academics", ["academics"])
    assert m.entry.phrase == "good"


def test_excluded_span_not_used_when_other_opinion_exists():
    lex = Lexicon([LexiconEntry("obedient", OPINION, 7), LexiconEntry("good", OPINION, 2)])
    tokens = tokenize("good and obedient")
    (m,) = match_opinion_terms(lex, tokens, [(2, 3)])
    assert m.entry.phrase == "good"


def test_modifier_window():
    lex = Lexicon([LexiconEntry("good", OPINION, 8), LexiconEntry("not", NEGATOR)])
    assert match_opinion_terms(lex, tokenize("not good"))[0].effective_score == 2
    assert match_opinion_terms(lex, tokenize("not at all good"))[0].effective_score == 2
    assert match_opinion_terms(lex, tokenize("not at all that good"))[0].effective_score == 8
    assert match_opinion_terms(lex, tokenize("not at all that good"), window=4)[0].effective_score == 2


def test_modifier_after_opinion_ignored():
    lex = Lexicon([LexiconEntry("good", OPINION, 8), LexiconEntry("not", NEGATOR)])
    (m,) = match_opinion_terms(lex, tokenize("good not"))
    assert m.applied_modifiers == ()
    assert m.effective_score == 8


def test_modifier_attaches_to_nearest_following_only():
    lex = Lexicon([LexiconEntry("good", OPINION, 8), LexiconEntry("kind", OPINION, 9),
                   LexiconEntry("not", NEGATOR)])
    ms = match_opinion_terms(lex, tokenize("not good kind"))
    assert [m.effective_score for m in ms] == [2, 9]


def test_stacked_modifiers_apply_nearest_first():
    lex = Lexicon([LexiconEntry("good", OPINION, 8), LexiconEntry("not", NEGATOR),
                   LexiconEntry("very", INTENSIFIER)])
    (m,) = match_opinion_terms(lex, tokenize("not very good"))
    # very: 8 -> 9, then not: 9 -> 1
    assert [x.entry.phrase for x in m.applied_modifiers] == ["very", "not"]
    assert m.effective_score == 1


def test_opinion_value_examples():
    lex = Lexicon([LexiconEntry("a", OPINION, 8), LexiconEntry("b", OPINION, 2),
                   LexiconEntry("c", OPINION, 7), LexiconEntry("d", OPINION, 4)])
    assert opinion_value(match_opinion_terms(lex, ["c"])) == 7
    assert opinion_value(match_opinion_terms(lex, ["a", "b"])) == 5
    s = opinion_value(match_opinion_terms(lex, ["a", "c", "d"]))
    assert s == Fraction(19, 3)
    assert isinstance(s, Fraction)


def test_opinion_value_permutation_invariant():
    lex = Lexicon([LexiconEntry(w, OPINION, v) for w, v in zip("abcd", (1, 4, 9, 10))])
    matches = match_opinion_terms(lex, list("abcd"))
    assert len({opinion_value(list(p)) for p in permutations(matches)}) == 1


@pytest.mark.parametrize("s", range(11))
def test_modifier_algebra(s):
    assert negate(negate(s)) == s
    assert 0 <= intensify(s) <= 10
    if s > 5:
        assert negate(s) < 5
    if s < 5:
        assert negate(s) > 5
    if s == 5:
        assert negate(s) == 5


@given(st.lists(st.sampled_from([NEGATOR, INTENSIFIER]), max_size=12), st.integers(0, 10))
def test_any_modifier_sequence_stays_in_range(roles, base):
    s = Fraction(base)
    for role in roles:
        s = apply_modifier(role, s)
        assert 0 <= s <= 10


def test_intensifier_moves_away_from_neutral():
    assert intensify(6) == 7
    assert intensify(3) == 2
    assert intensify(10) == 10
    assert intensify(0) == 0
