"""Package logger `"qratio"`: a coloured console handler on stderr, plus an optional log file from the command line."""
import logging
import sys
from pathlib import Path

try:
    import colorama
except ImportError:
    colorama = None
else:
    colorama.just_fix_windows_console()

_PACKAGE_ROOT = Path(__file__).resolve().parent


def _module_path(pathname: str) -> str:
    """`qratio.criteria.sums` for files inside the package, the raw path otherwise."""
    try:
        relative = Path(pathname).resolve().relative_to(_PACKAGE_ROOT)
    except ValueError:
        return pathname
    return ".".join(("qratio", *relative.with_suffix("").parts))


class QRatioFormatter(logging.Formatter):
    """Adds `modulepath` to each record and, when `level_colors` is given, colours the whole line by level."""

    def __init__(self, fmt: str, level_colors: dict[int, str] | None = None):
        super().__init__(fmt, style="{")
        self.level_colors = level_colors or {}
        self.reset = colorama.Style.RESET_ALL if colorama else "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        record.modulepath = _module_path(record.pathname)
        message = super().format(record)
        if color := self.level_colors.get(record.levelno):
            return f"{color}{message}{self.reset}"
        return message


def _console_colors() -> dict[int, str]:
    if colorama is None:
        return {}
    fore = colorama.Fore
    return {
        logging.DEBUG: fore.BLUE,
        logging.INFO: fore.CYAN,
        logging.WARNING: fore.YELLOW,
        logging.ERROR: fore.RED,
        logging.CRITICAL: colorama.Style.BRIGHT + fore.RED,
    }


CONSOLE_FORMATTER = QRatioFormatter(
    "{levelname:>7} :: {modulepath:<32} :: {lineno:>4d} :: {message}", _console_colors()
)
FILE_FORMATTER = QRatioFormatter("{levelname:>7} :: {asctime} :: {modulepath} :: Line {lineno:>4d} :: {message}")

# Reports go to stdout, so log records stay on stderr.
CONSOLE_HANDLER = logging.StreamHandler(sys.stderr)
CONSOLE_HANDLER.set_name("qratio-console")
CONSOLE_HANDLER.setFormatter(CONSOLE_FORMATTER)
CONSOLE_HANDLER.setLevel(logging.WARNING)

_LOGGER = logging.getLogger("qratio")
_LOGGER.setLevel(1)  # handlers filter


def _replace_handler(handler: logging.Handler):
    """Attach `handler`, closing any handler of the same name left by an earlier call or module reload."""
    for old in [h for h in _LOGGER.handlers if h.name == handler.name]:
        _LOGGER.removeHandler(old)
        old.close()
    _LOGGER.addHandler(handler)


_replace_handler(CONSOLE_HANDLER)


def add_file_handler(log_path: str | Path, level: int = logging.DEBUG) -> logging.FileHandler:
    """Log to `log_path` as well. Only the command line calls this, so library use never writes files."""
    file_handler = logging.FileHandler(str(log_path), mode="w", encoding="utf-8")
    file_handler.set_name("qratio-file")
    file_handler.setFormatter(FILE_FORMATTER)
    file_handler.setLevel(level)
    _replace_handler(file_handler)
    return file_handler


def handle_unhandled_exception(exc_type, exc_value, exc_traceback):
    if issubclass(exc_type, KeyboardInterrupt):
        sys.__excepthook__(exc_type, exc_value, exc_traceback)
    else:
        _LOGGER.critical("Unhandled exception: ", exc_info=(exc_type, exc_value, exc_traceback))


sys.excepthook = handle_unhandled_exception
