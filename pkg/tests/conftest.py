import pytest

from uzlemma import data, load_affixes, load_lexicon, load_manifest


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(data.words_path())


@pytest.fixture(scope="session")
def affix_store():
    return load_affixes(data.affixes_path())


@pytest.fixture(scope="session")
def reference_manifest():
    return load_manifest(data.reference_manifest_path())


@pytest.fixture(scope="session")
def corpus_forms(lexicon, affix_store):
    from corpus import generate_forms

    return generate_forms(lexicon, affix_store)
