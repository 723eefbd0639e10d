"""
Logging configuration for the parity groups verifier.
Provides structured logging to standard error with text or JSON formatting.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from .settings import settings

_RESERVED_ATTRS = {
    'name', 'msg', 'args', 'levelname', 'levelno', 'pathname',
    'filename', 'module', 'exc_info', 'exc_text', 'stack_info',
    'lineno', 'funcName', 'created', 'msecs', 'relativeCreated',
    'thread', 'threadName', 'processName', 'process', 'message',
    'taskName',
}


class JSONFormatter(logging.Formatter):
    """
    JSON formatter for structured logging.

    Outputs one JSON object per record so verification runs can be parsed.
    """

    def format(self, record: logging.LogRecord) -> str:
        """
        Format log record as JSON.

        Args:
            record (LogRecord): Log record to format

        Returns:
            str: JSON formatted log message
        """
        log_entry = {
            'timestamp': datetime.now(timezone.utc).isoformat().replace('+00:00', 'Z'),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno
        }

        if record.exc_info:
            log_entry['exception'] = self.formatException(record.exc_info)

        extra_fields = {
            key: value for key, value in record.__dict__.items()
            if key not in _RESERVED_ATTRS
        }
        if extra_fields:
            log_entry['extra'] = extra_fields

        return json.dumps(log_entry, default=str)


class VerificationLoggerAdapter(logging.LoggerAdapter):
    """
    Logger adapter that stamps module/check context onto every record.
    """

    def __init__(self, logger: logging.Logger, context: Dict[str, Any]):
        super().__init__(logger, context)

    def process(self, msg: str, kwargs: Dict[str, Any]) -> tuple:
        extra = kwargs.get('extra', {})
        extra.update(self.extra)
        kwargs['extra'] = extra
        return msg, kwargs


class LoggingManager:
    """
    Central logging management for the verifier.

    One standard-error handler on the root logger; format and level follow
    the settings and may be switched at runtime by the CLI.
    """

    def __init__(self):
        """Initialize logging manager from the current settings."""
        self.loggers: Dict[str, logging.Logger] = {}
        self.log_level = settings.log_level.upper()
        self.log_format = settings.log_format
        self.console_format = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        self._handler: Optional[logging.Handler] = None
        self._configure_root_logger()

    def _configure_root_logger(self) -> None:
        """Install (or replace) the standard-error handler."""
        root_logger = logging.getLogger()
        root_logger.setLevel(getattr(logging, self.log_level, logging.WARNING))

        if self._handler is not None:
            root_logger.removeHandler(self._handler)

        # stdout is reserved for reports
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(getattr(logging, self.log_level, logging.WARNING))
        if self.log_format == 'json':
            handler.setFormatter(JSONFormatter())
        else:
            handler.setFormatter(logging.Formatter(self.console_format, datefmt='%Y-%m-%d %H:%M:%S'))
        root_logger.addHandler(handler)
        self._handler = handler

    def configure(self, level: Optional[str] = None, log_format: Optional[str] = None) -> None:
        """
        Change level and/or format for all loggers.

        Args:
            level (str): New log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            log_format (str): "text" or "json"
        """
        if level:
            self.log_level = level.upper()
        if log_format:
            self.log_format = log_format
        self._configure_root_logger()

    def get_logger(self, name: str) -> logging.Logger:
        """
        Get or create a named logger.

        Args:
            name (str): Logger name

        Returns:
            Logger: Configured logger instance
        """
        if name not in self.loggers:
            self.loggers[name] = logging.getLogger(name)
        return self.loggers[name]

    def get_check_logger(self, module: str, check: Optional[str] = None) -> VerificationLoggerAdapter:
        """
        Get a logger carrying verification context.

        Args:
            module (str): Verified module (group-engine, lattice-complex, ...)
            check (str): Check name

        Returns:
            VerificationLoggerAdapter: Logger with check context
        """
        context = {'verified_module': module}
        if check:
            context['check'] = check
        return VerificationLoggerAdapter(logging.getLogger('parity.verification'), context)

    def log_check_result(self, module: str, check: str, passed: bool,
                         details: Optional[Dict[str, Any]] = None) -> None:
        """
        Log one verification check with structured data.

        Args:
            module (str): Verified module
            check (str): Check name
            passed (bool): Outcome
            details (dict): Expected/actual values
        """
        logger = self.get_check_logger(module, check)
        extra = {'operation_type': 'check', 'passed': passed}
        if details:
            extra.update(details)
        level = logging.INFO if passed else logging.ERROR
        logger.log(level, f"Check {check}: {'PASS' if passed else 'FAIL'}", extra=extra)


# Global logging manager instance
logging_manager = LoggingManager()


def get_logger(name: str) -> logging.Logger:
    """Get a configured logger instance."""
    return logging_manager.get_logger(name)


def configure_logging(level: Optional[str] = None, log_format: Optional[str] = None) -> None:
    """Switch level/format of the standard-error handler."""
    logging_manager.configure(level, log_format)


def log_check_result(module: str, check: str, passed: bool, details: Optional[Dict[str, Any]] = None) -> None:
    """Log a verification check outcome with structured data."""
    logging_manager.log_check_result(module, check, passed, details)
