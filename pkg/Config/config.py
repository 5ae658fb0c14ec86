import os
import sys
from dotenv import load_dotenv

# Add the parent directory to sys.path to allow importing modules from Core
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Load environment variables from .env file
load_dotenv()

# Repository root, used to locate bundled artifacts such as the default model
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# -------------------------------
# Crawler configuration
# -------------------------------

DEFAULT_MAX_PAGES = int(os.environ.get("DOCFORGE_MAX_PAGES", 200))
DEFAULT_MAX_DEPTH = int(os.environ.get("DOCFORGE_MAX_DEPTH", 3))
DEFAULT_DELAY_MS = int(os.environ.get("DOCFORGE_DELAY_MS", 250))

# Seconds before a single page request is abandoned
CRAWL_TIMEOUT = float(os.environ.get("DOCFORGE_CRAWL_TIMEOUT", 15))

# Upper bound on pages fetched at the same time
CRAWL_WORKERS = int(os.environ.get("DOCFORGE_CRAWL_WORKERS", 4))

DEFAULT_USER_AGENT = "docforge/1.0 (web API documentation miner)"

# Extensions accepted when loading a documentation directory
HTML_EXTENSIONS = (".html", ".htm")

# -------------------------------
# Probe configuration
# -------------------------------

PROBE_TIMEOUT = float(os.environ.get("DOCFORGE_PROBE_TIMEOUT", 5))
PROBE_WORKERS = int(os.environ.get("DOCFORGE_PROBE_WORKERS", 8))

# Status codes that mean "the URL exists but wants credentials"
AUTH_STATUS_CODES = (401, 407)
AUTH_ERROR_MARKER = "Invalid certificate"

# -------------------------------
# Classifier configuration
# -------------------------------

# Fixed order of the feature vector dimensions (also written to model files)
FEATURE_ORDER = [
    "clickable",
    "code_tag",
    "within_json",
    "same_domain_with_doc_link",
    "query_parameter",
    "api_convention",
    "path_template",
    "probe_json",
    "probe_auth",
    "probe_other",
]

DEFAULT_EPOCHS = int(os.environ.get("DOCFORGE_EPOCHS", 200))
DEFAULT_REG = float(os.environ.get("DOCFORGE_REG", 0.01))
DEFAULT_SEED = int(os.environ.get("DOCFORGE_SEED", 42))
DEFAULT_FOLDS = int(os.environ.get("DOCFORGE_FOLDS", 10))

DEFAULT_MODEL_PATH = os.path.join(BASE_DIR, "Models", "default_model.json")
# Labeled corpus the bundled model is trained on when no model file exists
TRAINING_CORPUS_DIR = os.path.join(BASE_DIR, "Models", "training", "corpus")
TRAINING_LABELS_PATH = os.path.join(BASE_DIR, "Models", "training", "labels.csv")

# -------------------------------
# Path template inference
# -------------------------------

CLUSTER_THRESHOLD = float(os.environ.get("DOCFORGE_CLUSTER_THRESHOLD", 1.0))

# Score of a segment position where either side is a parameter
PARAM_DISCOUNT = 0.8

# Characters that open/close an explicit path parameter
PARAM_MARKERS = {"{": "}", "[": "]", "(": ")", "<": ">"}

# -------------------------------
# HTTP methods
# -------------------------------

HTTP_METHODS = ["GET", "POST", "PUT", "DELETE", "OPTIONS", "HEAD", "PATCH"]
DEFAULT_METHOD = "GET"

# -------------------------------
# Process exit codes
# -------------------------------

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOTHING_EXTRACTED = 2
EXIT_MISMATCH = 3


def get_user_agent():
    """
    Returns the user-agent sent by the crawler and the prober.
    DOCFORGE_USER_AGENT in the environment (or .env) overrides the default.
    """
    return os.environ.get("DOCFORGE_USER_AGENT") or DEFAULT_USER_AGENT
