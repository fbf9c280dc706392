from logrank.demo_corpus import bundled_path, generate
from logrank.candidate_provider import tokenize


def test_bundle_matches_generator():
    files = generate()
    root = bundled_path()
    on_disk = {p.relative_to(root).as_posix(): p.read_text("utf-8") for p in root.rglob("*.py")}
    assert on_disk == files


def test_corpus_shape():
    files = generate()
    assert len(files) >= 50
    assert len({path.split("/")[0] for path in files}) == 6
    for text in files.values():
        compile(text, "<demo>", "exec")
        assert tokenize(text)


def test_generator_is_seeded():
    assert generate(seed=3, modules_per_package=2) == generate(seed=3, modules_per_package=2)
    assert generate(seed=3, modules_per_package=2) != generate(seed=4, modules_per_package=2)
