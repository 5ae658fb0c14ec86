import os
import sys
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest

# Make the top-level packages importable from the tests
ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)

from UI.console_handler import clear_history, set_verbosity  # noqa: E402

FIXTURES = os.path.join(ROOT, "tests", "fixtures")


def fixture_path(*parts: str) -> str:
    return os.path.join(FIXTURES, *parts)


@pytest.fixture(autouse=True)
def _fresh_console_history():
    clear_history()
    yield
    clear_history()
    set_verbosity()


class _Site:
    """Routes served by the local HTTP server: path -> (status, content type, body)."""

    def __init__(self):
        self.routes = {}
        self.requests = []
        self.base_url = ""

    def add(self, path: str, body, content_type: str = "text/html; charset=utf-8", status: int = 200):
        if isinstance(body, str):
            body = body.encode("utf-8")
        self.routes[path] = (status, content_type, body)

    def url(self, path: str) -> str:
        return self.base_url + path


@pytest.fixture
def local_site():
    """A throwaway HTTP server on 127.0.0.1 serving the routes added to it."""
    site = _Site()

    class Handler(BaseHTTPRequestHandler):
        def do_GET(self):
            site.requests.append(self.path)
            status, content_type, body = site.routes.get(
                self.path, (404, "text/plain", b"not found")
            )
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def log_message(self, format, *args):
            pass

    server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
    site.base_url = f"http://127.0.0.1:{server.server_address[1]}"
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield site
    server.shutdown()
    server.server_close()
