import os
import sys
from dataclasses import dataclass
from typing import Optional

# Add the parent directory to sys.path to allow importing configuration
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Config import config as cfg
from Core.errors import UsageError

SUBCOMMANDS = ("extract", "train", "cv", "diff")


@dataclass(frozen=True)
class RunConfig:
    """Everything one subcommand run needs, built from the parsed arguments."""

    subcommand: str
    # extract
    seed_url: Optional[str] = None
    input_dir: Optional[str] = None
    out: Optional[str] = None
    model: Optional[str] = None  # None selects the bundled model
    probe: bool = False
    max_pages: int = cfg.DEFAULT_MAX_PAGES
    max_depth: int = cfg.DEFAULT_MAX_DEPTH
    delay_ms: int = cfg.DEFAULT_DELAY_MS
    cache_dir: Optional[str] = None
    # train / cv
    corpus: Optional[str] = None
    labels: Optional[str] = None
    epochs: int = cfg.DEFAULT_EPOCHS
    reg: float = cfg.DEFAULT_REG
    random_seed: int = cfg.DEFAULT_SEED
    folds: int = cfg.DEFAULT_FOLDS
    # diff
    generated: Optional[str] = None
    existing: Optional[str] = None
    # console
    verbose: bool = False
    quiet: bool = False

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"Unknown subcommand {self.subcommand!r}")
        if self.verbose and self.quiet:
            raise UsageError("--verbose and --quiet are mutually exclusive")
        if self.subcommand == "extract":
            if (self.seed_url is None) == (self.input_dir is None):
                raise UsageError("extract needs exactly one of --seed or --input-dir")
            if not self.out:
                raise UsageError("extract needs --out")
        elif self.subcommand in ("train", "cv"):
            if not self.corpus or not self.labels:
                raise UsageError(f"{self.subcommand} needs --corpus and --labels")
            if self.subcommand == "train" and not self.out:
                raise UsageError("train needs --out")
        elif not self.generated or not self.existing:
            raise UsageError("diff needs --generated and --existing")

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        """Builds a RunConfig from an argparse namespace."""
        values = {"subcommand": args.command}
        for name in cls.__dataclass_fields__:
            if name != "subcommand" and getattr(args, name, None) is not None:
                values[name] = getattr(args, name)
        return cls(**values)
