import json
import os
import sys
from typing import Optional

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Config import config as cfg
from Core.errors import ClassifierError
from Classifier.labels import load_labeled_examples
from Classifier.linear_svm import LinearModel, train
from UI.console_handler import log_info

# Model files are JSON: weights, bias, means, scales and the fixed
# feature_order they refer to.


def model_to_json(model: LinearModel) -> str:
    document = {
        "feature_order": list(cfg.FEATURE_ORDER),
        "weights": list(model.weights),
        "bias": model.bias,
        "means": list(model.feature_means),
        "scales": list(model.feature_scales),
    }
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def model_from_json(text: str) -> LinearModel:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ClassifierError(f"Model file is not valid JSON: {e}") from e
    if document.get("feature_order") != cfg.FEATURE_ORDER:
        raise ClassifierError("Model feature_order does not match this version")
    try:
        return LinearModel(
            tuple(float(v) for v in document["weights"]),
            float(document["bias"]),
            tuple(float(v) for v in document["means"]),
            tuple(float(v) for v in document["scales"]),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ClassifierError(f"Malformed model file: {e}") from e


def save_model(model: LinearModel, path: str):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(model_to_json(model))
    log_info("[CLASSIFIER]", f"Model written to {path}")


def train_bundled_model() -> LinearModel:
    """Trains on the labeled corpus shipped under Models/training with the default settings."""
    examples = load_labeled_examples(cfg.TRAINING_CORPUS_DIR, cfg.TRAINING_LABELS_PATH)
    return train(examples)


def load_model(path: Optional[str] = None) -> LinearModel:
    """
    Reads a model file. Without a path the bundled model is used:
    Models/default_model.json if present, else a model trained on the
    bundled corpus. The file must hold exactly what that training gives.
    """
    if path is None:
        if not os.path.exists(cfg.DEFAULT_MODEL_PATH):
            log_info("[CLASSIFIER]", "No bundled model file; training on the bundled corpus")
            return train_bundled_model()
        path = cfg.DEFAULT_MODEL_PATH
    if not os.path.exists(path):
        raise ClassifierError(f"Model file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        return model_from_json(f.read())
