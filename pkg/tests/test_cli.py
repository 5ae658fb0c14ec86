import json
import re

import pytest

from conftest import fixture_path
from Classifier.model_store import load_model
from Config import config as cfg
from Config.run_config import RunConfig
from Core.errors import UsageError
from main import main
from SpecIO.openapi_io import read_spec

REFERENCE = fixture_path("reference_corpus")
EXAMPLE = fixture_path("example_corpus")
LABELED = cfg.TRAINING_CORPUS_DIR
LABELS = cfg.TRAINING_LABELS_PATH


def _extract(corpus, out):
    return main(["extract", "--input-dir", corpus, "--out", str(out)])


def test_extract_reference_corpus(tmp_path, capsys):
    out = tmp_path / "spec.json"

    assert _extract(REFERENCE, out) == 0

    spec = read_spec(str(out))
    assert spec.base.full == "https://api.shelf.example/v1"
    assert spec.endpoint_map() == {
        "/authors/{authorId}/books": {"GET"},
        "/books": {"GET", "POST"},
        "/books/{bookId}": {"GET", "PUT", "DELETE"},
    }
    assert sum(len(m) for m in spec.endpoint_map().values()) == 6
    assert spec.source == "reference_corpus"
    assert "Extraction summary" in capsys.readouterr().out


def test_extract_example_corpus(tmp_path):
    out = tmp_path / "spec.json"

    assert _extract(EXAMPLE, out) == 0

    spec = read_spec(str(out))
    assert spec.base.full == "https://api.octo.example"
    assert spec.endpoint_map() == {
        "/orgs/{org}": {"GET"},
        "/repos/{owner}/{repo}/issues": {"POST"},
        "/users/{username}/received_events": {"GET"},
        "/users/{username}/repos": {"GET"},
    }


def test_extract_is_byte_deterministic(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"

    assert _extract(REFERENCE, first) == 0
    assert _extract(REFERENCE, second) == 0

    assert first.read_bytes() == second.read_bytes()


def test_extract_without_urls_exits_2(tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "index.html").write_text("<p>Nothing but prose here.</p>", encoding="utf-8")

    assert _extract(str(corpus), tmp_path / "spec.json") == 2
    assert not (tmp_path / "spec.json").exists()


def test_train_writes_a_loadable_model(tmp_path, capsys):
    model_path = tmp_path / "model.json"

    assert main(["train", "--corpus", LABELED, "--labels", LABELS, "--out", str(model_path)]) == 0

    load_model(str(model_path))
    assert "accuracy" in capsys.readouterr().out


def test_cv_prints_metrics(capsys):
    assert main(["cv", "--corpus", LABELED, "--labels", LABELS, "--folds", "4", "--seed", "3"]) == 0

    out = capsys.readouterr().out
    assert "4-fold cross-validation" in out
    assert re.search(r"accuracy\W+\d\.\d{3}", out)
    assert re.search(r"F1\W+\d\.\d{3}", out)


def test_diff_reports_mismatches(tmp_path):
    report_path = tmp_path / "report.json"

    code = main(
        [
            "diff",
            "--generated",
            fixture_path("slack_generated.json"),
            "--existing",
            fixture_path("slack_existing.json"),
            "--out",
            str(report_path),
        ]
    )

    assert code == 3
    assert json.loads(report_path.read_text(encoding="utf-8"))["counts"]["generated_only"] == 7


def test_diff_of_identical_specs_is_clean(capsys):
    spec = fixture_path("slack_existing.json")

    assert main(["diff", "--generated", spec, "--existing", spec]) == 0
    assert "base URL: match" in capsys.readouterr().out


def test_diff_on_malformed_document_is_an_input_error(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{ not json", encoding="utf-8")

    assert main(["diff", "--generated", str(broken), "--existing", str(broken)]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["extract", "--out", "spec.json"],
        ["extract", "--seed", "https://docs.example", "--input-dir", "docs", "--out", "spec.json"],
        ["-v", "-q", "diff", "--generated", "a.json", "--existing", "b.json"],
        ["train", "--corpus", "docs"],
        ["cv", "--corpus", "docs", "--labels", "labels.csv", "--folds", "ten"],
    ],
)
def test_usage_errors_exit_1(argv):
    assert main(argv) == 1


def test_missing_input_files_exit_1(tmp_path):
    assert _extract(str(tmp_path / "nowhere"), tmp_path / "spec.json") == 1
    assert main(["diff", "--generated", str(tmp_path / "a.json"), "--existing", str(tmp_path / "b.json")]) == 1


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("extract", out="spec.json")
    with pytest.raises(UsageError):
        RunConfig("publish")
    assert RunConfig("diff", generated="a", existing="b").folds == cfg.DEFAULT_FOLDS
