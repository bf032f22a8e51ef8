import shutil

from loopdecomp import corpus
from loopdecomp.free_lie import witt_count


def test_oracle_series_product_examples():
    n = 8
    factors = []
    for k in range(1, n + 1):
        f = [0] * (n + 1)
        f[k] = 1
        factors.append((f, witt_count(2, k)))
    assert corpus.oracle_series_product(factors, n) == [2**d for d in range(n + 1)]
    assert corpus.oracle_series_product([], 5) == [1, 0, 0, 0, 0, 0]
    assert corpus.oracle_series_product([([0, 1], 1)], 4) == [1, 1, 1, 1, 1]


def test_regen_is_bit_identical(tmp_path, fixtures_root):
    written = corpus.regen(tmp_path)
    assert written == [fx.path for fx in corpus.fixtures()]
    for path in written:
        for name in ("input.json", "expected.json", "meta.json"):
            assert (tmp_path / path / name).read_bytes() == (fixtures_root / path / name).read_bytes()


def test_check_passes_on_repo_fixtures(fixtures_root):
    assert corpus.check(fixtures_root) == []


def test_meta_names_oracle(fixtures_root):
    import json

    for fx in corpus.fixtures():
        meta = json.loads((fixtures_root / fx.path / "meta.json").read_text())
        assert meta["oracle"].startswith("oracle_") and meta["certified_cutoff"] == fx.cutoff


def test_check_flags_corrupted_golden(tmp_path, fixtures_root):
    shutil.copytree(fixtures_root, tmp_path / "fx")
    target = tmp_path / "fx" / "tensor_hopf" / "prim_m2_p3" / "expected.json"
    target.write_text(target.read_text().replace("10", "11"))
    problems = corpus.check(tmp_path / "fx", only="tensor_hopf")
    assert problems == ["tensor_hopf/prim_m2_p3/expected.json: differs from a fresh oracle run"]
