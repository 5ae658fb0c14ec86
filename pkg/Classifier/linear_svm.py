import os
import sys
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Config import config as cfg
from Core.errors import ClassifierError
from Harvest.features import FeatureVector
from UI.console_handler import log_debug, log_info, log_warning

"""
linear_svm.py

Linear maximum-margin classifier deciding whether a candidate URL is a web
API call. Features are standardized with means/scales stored in the model;
the hinge loss with an L2 penalty is minimized by deterministic stochastic
subgradient descent (step size 1/(reg*t)); the bias is learned as the weight
of a constant input so it is regularized like the other weights.
"""

N_FEATURES = len(cfg.FEATURE_ORDER)


@dataclass(frozen=True)
class LinearModel:
    weights: Tuple[float, ...]
    bias: float
    feature_means: Tuple[float, ...]
    feature_scales: Tuple[float, ...]

    def __post_init__(self):
        for name in ("weights", "feature_means", "feature_scales"):
            if len(getattr(self, name)) != N_FEATURES:
                raise ClassifierError(f"{name} must have {N_FEATURES} entries")
        if any(not scale > 0 for scale in self.feature_scales):
            raise ClassifierError("feature scales must be strictly positive")


@dataclass(frozen=True)
class LabeledExample:
    features: FeatureVector
    label: bool


def constant_model(label: bool) -> LinearModel:
    """Model that answers label for every input."""
    return LinearModel(
        (0.0,) * N_FEATURES, 1.0 if label else -1.0, (0.0,) * N_FEATURES, (1.0,) * N_FEATURES
    )


def _raw_vector(features: Union[FeatureVector, Sequence[float]]) -> np.ndarray:
    values = features.as_tuple() if isinstance(features, FeatureVector) else tuple(features)
    if len(values) != N_FEATURES:
        raise ClassifierError(f"expected {N_FEATURES} raw feature values, got {len(values)}")
    return np.asarray(values, dtype=np.float64)


def decision_value(model: LinearModel, features: Union[FeatureVector, Sequence[float]]) -> float:
    """w . standardize(x) + b for raw (unstandardized) features x."""
    x = _raw_vector(features)
    z = (x - np.asarray(model.feature_means)) / np.asarray(model.feature_scales)
    return float(np.dot(np.asarray(model.weights), z) + model.bias)


def predict(model: LinearModel, features: Union[FeatureVector, Sequence[float]]) -> bool:
    """True iff the decision value is strictly positive."""
    return decision_value(model, features) > 0.0


def train(
    examples: List[LabeledExample],
    epochs: int = cfg.DEFAULT_EPOCHS,
    reg: float = cfg.DEFAULT_REG,
    seed: int = cfg.DEFAULT_SEED,
) -> LinearModel:
    """
    Fits a linear SVM. Identical inputs give a bit-identical model.
    Raises ClassifierError unless both labels are present.
    """
    if epochs < 1:
        raise ClassifierError("epochs must be positive")
    if not reg > 0:
        raise ClassifierError("reg must be positive")
    labels = [e.label for e in examples]
    if not any(labels) or all(labels):
        raise ClassifierError("training needs at least one example of each label")

    X = np.array([e.features.as_tuple() for e in examples], dtype=np.float64)
    y = np.where(np.array(labels), 1.0, -1.0)

    means = X.mean(axis=0)
    scales = X.std(axis=0)
    scales[scales == 0.0] = 1.0
    # Constant column carries the bias
    Z = np.hstack([(X - means) / scales, np.ones((X.shape[0], 1))])

    rng = np.random.default_rng(seed)
    w = np.zeros(Z.shape[1])
    t = 0
    for _ in range(epochs):
        for i in rng.permutation(Z.shape[0]):
            t += 1
            eta = 1.0 / (reg * t)
            margin = y[i] * np.dot(w, Z[i])
            w *= 1.0 - eta * reg
            if margin < 1.0:
                w += eta * y[i] * Z[i]

    model = LinearModel(
        tuple(float(v) for v in w[:-1]),
        float(w[-1]),
        tuple(float(v) for v in means),
        tuple(float(v) for v in scales),
    )
    log_debug("[CLASSIFIER]", f"Trained on {len(examples)} examples for {epochs} epochs")
    return model


def evaluate(model: LinearModel, examples: List[LabeledExample]) -> Tuple[float, float]:
    """Accuracy and positive-class F1 of model on examples."""
    counts = _confusion(model, examples)
    return _metrics(*counts)


def _confusion(model, examples):
    tp = fp = tn = fn = 0
    for example in examples:
        predicted = predict(model, example.features)
        if predicted and example.label:
            tp += 1
        elif predicted:
            fp += 1
        elif example.label:
            fn += 1
        else:
            tn += 1
    return tp, fp, tn, fn


def _metrics(tp, fp, tn, fn) -> Tuple[float, float]:
    total = tp + fp + tn + fn
    accuracy = (tp + tn) / total if total else 0.0
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return accuracy, f1


def assign_folds(labels: Sequence[bool], folds: int, seed: int) -> List[int]:
    """
    Fold index per example. Stratified: each class is shuffled separately and
    dealt round-robin over the folds. Falls back to a plain shuffled split
    (with a warning) when a class has fewer members than folds.
    """
    rng = np.random.default_rng(seed)
    positives = [i for i, label in enumerate(labels) if label]
    negatives = [i for i, label in enumerate(labels) if not label]
    assignment = [0] * len(labels)

    if min(len(positives), len(negatives)) < folds:
        log_warning(
            "[CLASSIFIER]",
            f"Fewer than {folds} examples in a class; using an unstratified split",
        )
        for k, i in enumerate(rng.permutation(len(labels))):
            assignment[int(i)] = k % folds
        return assignment

    for group in (positives, negatives):
        for k, i in enumerate(rng.permutation(np.array(group, dtype=np.int64))):
            assignment[int(i)] = k % folds
    return assignment


def cross_validate(
    examples: List[LabeledExample],
    folds: int = cfg.DEFAULT_FOLDS,
    seed: int = cfg.DEFAULT_SEED,
    epochs: int = cfg.DEFAULT_EPOCHS,
    reg: float = cfg.DEFAULT_REG,
) -> Tuple[float, float]:
    """
    k-fold cross-validation. Returns (accuracy, f1) pooled over all
    held-out predictions.
    """
    if folds < 2:
        raise ClassifierError("cross-validation needs at least 2 folds")
    if len(examples) < folds:
        raise ClassifierError(f"{len(examples)} examples cannot fill {folds} folds")

    assignment = assign_folds([e.label for e in examples], folds, seed)
    totals = [0, 0, 0, 0]
    for fold in range(folds):
        train_set = [e for e, f in zip(examples, assignment) if f != fold]
        test_set = [e for e, f in zip(examples, assignment) if f == fold]
        if not test_set:
            continue
        train_labels = {e.label for e in train_set}
        if len(train_labels) == 1:
            model = constant_model(train_labels.pop())
        else:
            model = train(train_set, epochs, reg, seed)
        for i, count in enumerate(_confusion(model, test_set)):
            totals[i] += count

    accuracy, f1 = _metrics(*totals)
    log_info("[CLASSIFIER]", f"{folds}-fold CV: accuracy {accuracy:.3f}, F1 {f1:.3f}")
    return accuracy, f1
