import argparse
import os
import sys
import dotenv

dotenv.load_dotenv()

# Add the repository root to sys.path so the top-level packages import from anywhere
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from Config import config as cfg
from Config.run_config import RunConfig
from Commands import cli_commands
from Core.errors import DocforgeError, ExtractionError
from UI.console_handler import log_error, log_info, set_verbosity


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="docforge",
        description="Extract web API specifications from HTML documentation and diff them.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Show debug messages")
    parser.add_argument("-q", "--quiet", action="store_true", help="Only show errors")
    sub = parser.add_subparsers(dest="command", required=True)

    extract = sub.add_parser("extract", help="Extract a specification from documentation")
    source = extract.add_mutually_exclusive_group(required=True)
    source.add_argument("--seed", dest="seed_url", help="Seed page of online documentation")
    source.add_argument("--input-dir", dest="input_dir", help="Directory of saved HTML pages")
    extract.add_argument("--out", required=True, help="Output specification file")
    extract.add_argument("--model", default=None, help="Classifier model file (default: bundled model)")
    extract.add_argument("--probe", action="store_true", help="Probe candidate URLs with live GET requests")
    extract.add_argument("--max-pages", dest="max_pages", type=int, default=cfg.DEFAULT_MAX_PAGES)
    extract.add_argument("--max-depth", dest="max_depth", type=int, default=cfg.DEFAULT_MAX_DEPTH)
    extract.add_argument("--delay-ms", dest="delay_ms", type=int, default=cfg.DEFAULT_DELAY_MS)
    extract.add_argument("--cache-dir", dest="cache_dir", help="Directory caching fetched pages")

    train = sub.add_parser("train", help="Train the URL classifier")
    train.add_argument("--corpus", required=True, help="Directory of labeled documentation pages")
    train.add_argument("--labels", required=True, help="CSV with page,url,label")
    train.add_argument("--out", required=True, help="Output model file")
    train.add_argument("--epochs", type=int, default=cfg.DEFAULT_EPOCHS)
    train.add_argument("--reg", type=float, default=cfg.DEFAULT_REG)
    train.add_argument("--seed", dest="random_seed", type=int, default=cfg.DEFAULT_SEED)

    cv = sub.add_parser("cv", help="Cross-validate the URL classifier")
    cv.add_argument("--corpus", required=True, help="Directory of labeled documentation pages")
    cv.add_argument("--labels", required=True, help="CSV with page,url,label")
    cv.add_argument("--folds", type=int, default=cfg.DEFAULT_FOLDS)
    cv.add_argument("--seed", dest="random_seed", type=int, default=cfg.DEFAULT_SEED)

    diff = sub.add_parser("diff", help="Compare a generated specification with an existing one")
    diff.add_argument("--generated", required=True, help="Generated specification file")
    diff.add_argument("--existing", required=True, help="Existing specification file")
    diff.add_argument("--out", help="JSON report file")

    return parser


def main(argv=None) -> int:
    """
    Main entry point for the application.
    Parses the command line, runs the subcommand and maps errors to exit codes.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2; usage errors are exit code 1 here
        return cfg.EXIT_OK if e.code in (0, None) else cfg.EXIT_USAGE
    set_verbosity(args.verbose, args.quiet)

    try:
        config = RunConfig.from_args(args)
        return cli_commands.run(config)
    except ExtractionError as e:
        log_error("[MAIN]", str(e))
        return cfg.EXIT_NOTHING_EXTRACTED
    except DocforgeError as e:
        # UsageError, CorpusError, ClassifierError, SpecFormatError
        log_error("[MAIN]", str(e))
        return cfg.EXIT_USAGE
    except OSError as e:
        log_error("[MAIN]", f"File error: {e}")
        return cfg.EXIT_USAGE
    except KeyboardInterrupt:
        log_info("[MAIN]", "Process interrupted by user.")
        return cfg.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
