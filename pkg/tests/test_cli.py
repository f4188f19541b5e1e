"""CLI subcommands, exit-code contract, configuration precedence."""
import pytest

from crossplag.cli import main
from crossplag.translation import BilingualDictionary, dictionary_translate

from conftest import write_corpus


@pytest.fixture
def corpus_dir(tmp_path):
    d = tmp_path / "corpus"
    d.mkdir()
    write_corpus(d, 5, seed=21)
    return d


class TestIngestCommand:
    def test_ingest(self, corpus_dir, capsys):
        assert main(["ingest", str(corpus_dir)]) == 0
        assert "ingested 5 documents" in capsys.readouterr().out

    def test_rerun_uses_cache(self, corpus_dir, capsys):
        main(["ingest", str(corpus_dir)])
        assert main(["ingest", str(corpus_dir)]) == 0
        assert "cache up to date" in capsys.readouterr().out

    def test_empty_directory(self, tmp_path, capsys):
        empty = tmp_path / "empty"
        empty.mkdir()
        assert main(["ingest", str(empty)]) == 1
        assert "error" in capsys.readouterr().err


class TestDetectCommand:
    def test_verbatim_copy_detected(self, corpus_dir, tmp_path, capsys):
        suspect = tmp_path / "suspect.txt"
        suspect.write_text((corpus_dir / "doc02.txt").read_text())
        code = main(["detect", str(suspect), "--corpus", str(corpus_dir)])
        out = capsys.readouterr().out
        assert code == 3
        assert "doc02.txt" in out and "100.0%" in out

    def test_unrelated_suspect_clean(self, corpus_dir, tmp_path, capsys):
        suspect = tmp_path / "suspect.txt"
        suspect.write_text("Zymurgy quandary oblique frippery. Vexing jolt plume gnarls.")
        code = main(["detect", str(suspect), "--corpus", str(corpus_dir)])
        assert code == 0
        assert "no plagiarism detected" in capsys.readouterr().out

    def test_missing_corpus_flag(self, tmp_path, capsys):
        suspect = tmp_path / "s.txt"
        suspect.write_text("Some text.")
        assert main(["detect", str(suspect)]) == 1

    def test_bad_threshold(self, corpus_dir, tmp_path):
        suspect = tmp_path / "s.txt"
        suspect.write_text("Some text.")
        assert main(
            ["detect", str(suspect), "--corpus", str(corpus_dir), "--threshold", "1.5"]
        ) == 1

    def test_unreachable_search_backend(self, corpus_dir, tmp_path, capsys):
        suspect = tmp_path / "s.txt"
        suspect.write_text((corpus_dir / "doc00.txt").read_text())
        code = main([
            "detect", str(suspect), "--corpus", str(corpus_dir),
            "--search-backend", "http",
            "--search-endpoint", "http://127.0.0.1:1/search",
        ])
        assert code == 2

    def test_json_determinism(self, corpus_dir, tmp_path, capsys):
        suspect = tmp_path / "suspect.txt"
        suspect.write_text((corpus_dir / "doc01.txt").read_text())
        args = ["detect", str(suspect), "--corpus", str(corpus_dir), "--format", "json"]
        main(args)
        first = capsys.readouterr().out
        main(args)
        second = capsys.readouterr().out
        assert first == second

    def test_figure_flag(self, corpus_dir, tmp_path, capsys):
        suspect = tmp_path / "suspect.txt"
        suspect.write_text((corpus_dir / "doc03.txt").read_text())
        figure = tmp_path / "report.png"
        main(["detect", str(suspect), "--corpus", str(corpus_dir),
              "--figure", str(figure)])
        assert figure.stat().st_size > 0

    def test_cross_language_with_dictionary(self, corpus_dir, tmp_path, capsys):
        # build a pseudo-Malay suspect from a corpus doc using the inverse
        # of a dictionary covering the document's vocabulary
        source_text = (corpus_dir / "doc04.txt").read_text()
        words = {w.lower() for w in source_text.replace(".", " ").split()}
        dictionary = tmp_path / "dict.tsv"
        dictionary.write_text("".join(f"q{w}\t{w}\n" for w in words))
        forward = BilingualDictionary.load(dictionary, "ms", "en")
        suspect_text, unknown = dictionary_translate(source_text, forward.inverse())
        assert unknown == []
        suspect = tmp_path / "suspect_ms.txt"
        suspect.write_text(suspect_text)
        code = main([
            "detect", str(suspect), "--corpus", str(corpus_dir),
            "--source-lang", "ms", "--dictionary", str(dictionary),
        ])
        out = capsys.readouterr().out
        assert code == 3
        assert "doc04.txt" in out


class TestCompareCommand:
    def test_self_comparison(self, tmp_path, capsys):
        f = tmp_path / "a.txt"
        f.write_text("The zebra gallops across the savanna. Boats rest quietly.")
        assert main(["compare", str(f), str(f)]) == 0
        assert "similarity 100.0%" in capsys.readouterr().out

    def test_disjoint_texts(self, tmp_path, capsys):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text("Zebra gallops over savanna plains.")
        b.write_text("Quiet harbor boats drift slowly.")
        assert main(["compare", str(a), str(b)]) == 0
        assert "similarity 0.0%" in capsys.readouterr().out

    def test_unreadable_input(self, tmp_path):
        a = tmp_path / "a.txt"
        a.write_text("Some text.")
        assert main(["compare", str(a), str(tmp_path / "missing.txt")]) == 1

    def test_constructed_half_overlap(self, tmp_path, capsys):
        # two documents sharing one of their sentences; with all grams
        # distinct per document the shared sentence fingerprints equal
        shared = "Zebra gallops over the savanna."
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text(shared)
        b.write_text(shared)
        assert main(["compare", str(a), str(b), "--format", "json"]) == 0
        out = capsys.readouterr().out
        assert '"similarity_percent": 100.0' in out


class TestConfigFile:
    def test_config_file_applies(self, corpus_dir, tmp_path, capsys):
        cfg = tmp_path / "crossplag.conf"
        cfg.write_text("threshold = 0.9\nformat = json\n")
        suspect = tmp_path / "suspect.txt"
        suspect.write_text((corpus_dir / "doc00.txt").read_text())
        main(["detect", str(suspect), "--corpus", str(corpus_dir),
              "--config", str(cfg)])
        out = capsys.readouterr().out
        assert '"threshold": 0.9' in out

    def test_flag_overrides_config_file(self, corpus_dir, tmp_path, capsys):
        cfg = tmp_path / "crossplag.conf"
        cfg.write_text("threshold = 0.9\n")
        suspect = tmp_path / "suspect.txt"
        suspect.write_text((corpus_dir / "doc00.txt").read_text())
        main(["detect", str(suspect), "--corpus", str(corpus_dir),
              "--config", str(cfg), "--threshold", "0.1", "--format", "json"])
        assert '"threshold": 0.1' in capsys.readouterr().out

    def test_corpus_from_config_file(self, corpus_dir, tmp_path, capsys):
        cfg = tmp_path / "crossplag.conf"
        cfg.write_text(f"corpus = {corpus_dir}\n")
        suspect = tmp_path / "suspect.txt"
        suspect.write_text((corpus_dir / "doc00.txt").read_text())
        assert main(["detect", str(suspect), "--config", str(cfg)]) == 3

    def test_unknown_config_key(self, tmp_path, capsys):
        cfg = tmp_path / "bad.conf"
        cfg.write_text("fizziness = 11\n")
        f = tmp_path / "a.txt"
        f.write_text("Text here.")
        assert main(["compare", str(f), str(f), "--config", str(cfg)]) == 1
