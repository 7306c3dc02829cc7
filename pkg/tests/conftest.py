import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from logometre import parse_corpus
from logometre.lexicon import parse_lexicon
from logometre.synthetic import bilingual_fixture

# Small hand corpus used throughout the unit tests. Counts by inspection:
# doc1 has 3 sentences (4 + 4 + 2 tokens), doc2 one sentence of 3, doc3 one
# sentence of 2; 15 tokens overall. Noun/propn lemma counts: pays 4,
# français 1, travail 1, année 1, monde 1, povo 1, trabalho 1.
HAND_CORPUS = """#!logometre v1 lang=fr-x-test tags=NOUN,PROPN,VERB,ADJ,DET
#### id=doc1 country=FR speaker=degaulle year=1959
Le\tle\tDET
pays\tpays\tNOUN
demande\tdemander\tVERB
travail\ttravail\tNOUN

Les\tle\tDET
Français\tfrançais\tPROPN
aiment\taimer\tVERB
pays\tpays\tNOUN
##p
Grand\tgrand\tADJ
pays\tpays\tNOUN

#### id=doc2 country=FR speaker=pompidou year=1970
Année\tannée\tNOUN
pays\tpays\tNOUN
monde\tmonde\tNOUN

#### id=doc3 country=BR speaker=lula year=2005 note="two words"
Povo\tpovo\tNOUN
trabalho\ttrabalho\tNOUN
"""


@pytest.fixture(scope="session")
def hand_corpus():
    return parse_corpus(HAND_CORPUS)


@pytest.fixture(scope="session")
def fixture_pair():
    return bilingual_fixture()


@pytest.fixture(scope="session")
def fixture_corpora(fixture_pair):
    return parse_corpus(fixture_pair.corpus_a), parse_corpus(fixture_pair.corpus_b)


@pytest.fixture(scope="session")
def fixture_lexicon(fixture_pair):
    return parse_lexicon(fixture_pair.lexicon)


@pytest.fixture(scope="session")
def fixture_files(tmp_path_factory, fixture_pair):
    """The bilingual fixture written to disk for CLI and server tests."""
    root = tmp_path_factory.mktemp("fixture")
    paths = {
        "a": root / "corpus_a.tsv",
        "b": root / "corpus_b.tsv",
        "lexicon": root / "lexicon.tsv",
    }
    paths["a"].write_text(fixture_pair.corpus_a, encoding="utf-8")
    paths["b"].write_text(fixture_pair.corpus_b, encoding="utf-8")
    paths["lexicon"].write_text(fixture_pair.lexicon, encoding="utf-8")
    return paths
