import datetime
import threading
from enum import Enum
from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.text import Text


class MessageType(Enum):
    """Console message types"""

    DEBUG = "debug"
    INFO = "info"
    SUCCESS = "success"
    WARNING = "warning"
    ERROR = "error"


# Lower rank = more verbose
_RANKS = {
    MessageType.DEBUG: 0,
    MessageType.INFO: 1,
    MessageType.SUCCESS: 1,
    MessageType.WARNING: 2,
    MessageType.ERROR: 3,
}


class ConsoleHandler:
    """
    Centralized console handler for every pipeline message.
    Messages go to standard error so that standard output stays reserved
    for summaries and machine-readable output.
    """

    def __init__(self):
        self.console = Console(stderr=True)
        self.message_history = []
        self.max_history = 5000
        self.min_rank = _RANKS[MessageType.INFO]
        self.message_lock = threading.Lock()

        # Style configuration for each message type
        self.styles = {
            MessageType.DEBUG: {"color": "blue", "prefix": "DEBUG"},
            MessageType.INFO: {"color": "cyan", "prefix": "INFO"},
            MessageType.SUCCESS: {"color": "green", "prefix": "OK"},
            MessageType.WARNING: {"color": "yellow", "prefix": "WARN"},
            MessageType.ERROR: {"color": "red", "prefix": "ERROR"},
        }

        # Component configuration
        self.components = {
            "CORPUS": "Corpus",
            "CRAWLER": "Crawler",
            "HARVEST": "Harvest",
            "PROBE": "Probe",
            "CLASSIFIER": "Classifier",
            "BASE_URL": "Base URL",
            "TEMPLATES": "Templates",
            "METHODS": "Methods",
            "SPEC_IO": "Spec IO",
            "DIFF": "Diff",
            "MAIN": "Main",
        }

    def set_verbosity(self, verbose: bool = False, quiet: bool = False):
        """Selects which message types are printed (errors always are)"""
        if verbose:
            self.min_rank = _RANKS[MessageType.DEBUG]
        elif quiet:
            self.min_rank = _RANKS[MessageType.ERROR]
        else:
            self.min_rank = _RANKS[MessageType.INFO]

    def get_timestamp(self) -> str:
        """Gets formatted timestamp"""
        return datetime.datetime.now().strftime("%H:%M:%S")

    def format_message(
        self,
        component: str,
        message: str,
        msg_type: MessageType = MessageType.INFO,
        details: Optional[Dict[str, Any]] = None,
    ) -> Text:
        """
        Formats a message with unified style.

        Args:
            component: Pipeline component (CORPUS, HARVEST, etc.)
            message: Main message
            msg_type: Message type
            details: Optional additional details
        """
        style_config = self.styles[msg_type]

        formatted_text = Text()
        formatted_text.append(f"[{self.get_timestamp()}] ", style="dim white")
        formatted_text.append(
            f"{style_config['prefix']:<5} ", style=f"bold {style_config['color']}"
        )

        component_key = component.strip("[]")
        component_name = self.components.get(component_key, component_key)
        formatted_text.append(
            f"[{component_name}] ", style=f"bold {style_config['color']}"
        )
        formatted_text.append(message, style=style_config["color"])

        if details:
            for key, value in details.items():
                formatted_text.append(f"\n  {key}: {value}", style="dim white")

        return formatted_text

    def print_message(
        self,
        component: str,
        message: str,
        msg_type: MessageType = MessageType.INFO,
        details: Optional[Dict[str, Any]] = None,
    ):
        """
        Prints a formatted message (if the verbosity allows it) and records it.
        Messages are plain text (no rich markup): URLs may carry [] markers.
        """
        with self.message_lock:
            self.message_history.append(
                {
                    "timestamp": datetime.datetime.now().isoformat(),
                    "component": component.strip("[]"),
                    "message": message,
                    "type": msg_type.value,
                    "details": details,
                }
            )
            if len(self.message_history) > self.max_history:
                self.message_history = self.message_history[-self.max_history :]

        if _RANKS[msg_type] >= self.min_rank:
            self.console.print(
                self.format_message(component, message, msg_type, details)
            )

    def get_history(
        self, msg_type: Optional[MessageType] = None, component: Optional[str] = None
    ) -> List[Dict[str, Any]]:
        """
        Returns recorded messages, optionally filtered by type and component.
        """
        with self.message_lock:
            history = list(self.message_history)
        if msg_type is not None:
            history = [m for m in history if m["type"] == msg_type.value]
        if component is not None:
            history = [m for m in history if m["component"] == component.strip("[]")]
        return history

    def clear_history(self):
        """Clears the message history."""
        with self.message_lock:
            self.message_history.clear()


# Global instance of the console handler
console_handler = ConsoleHandler()


def log_debug(component: str, message: str, details: Optional[Dict[str, Any]] = None):
    """Debug message, only shown with --verbose"""
    console_handler.print_message(component, message, MessageType.DEBUG, details)


def log_info(component: str, message: str, details: Optional[Dict[str, Any]] = None):
    """Informational message"""
    console_handler.print_message(component, message, MessageType.INFO, details)


def log_success(component: str, message: str, details: Optional[Dict[str, Any]] = None):
    """Success message"""
    console_handler.print_message(component, message, MessageType.SUCCESS, details)


def log_warning(component: str, message: str, details: Optional[Dict[str, Any]] = None):
    """Warning message; recorded so callers can inspect skipped work"""
    console_handler.print_message(component, message, MessageType.WARNING, details)


def log_error(component: str, message: str, details: Optional[Dict[str, Any]] = None):
    """Error message"""
    console_handler.print_message(component, message, MessageType.ERROR, details)


def get_warnings(component: Optional[str] = None) -> List[str]:
    """Returns the text of every recorded warning"""
    return [
        m["message"]
        for m in console_handler.get_history(MessageType.WARNING, component)
    ]


def set_verbosity(verbose: bool = False, quiet: bool = False):
    """Sets the console verbosity"""
    console_handler.set_verbosity(verbose, quiet)


def clear_history():
    """Clears recorded messages"""
    console_handler.clear_history()
