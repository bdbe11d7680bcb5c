import json
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from geometry import CevianConfig, equal_division_config, load_config_file, parse_rational
from utils import *


@dataclass
class CommandResponse:
    exit_code: int = EXIT_SUCCESS
    stdout: str = ""
    error: Optional[Dict[str, Any]] = None

    @property
    def stderr(self) -> str:
        if self.error is None:
            return ""
        return json.dumps(self.error, indent=2, sort_keys=True) + "\n"


class BaseRequest:
    """Parsed command-line arguments plus the response the command produced."""

    def __init__(self, args, command: str = None):
        logger.debug(f"Initializing {self.__class__.__name__} for command {command}")
        self.args = args
        self.command = command
        self.response = None
        self.workers = getattr(args, "workers", None)

    # Config sources shared by count and render

    def has_inline_config(self) -> bool:
        return any(getattr(self.args, key, None) is not None for key in ("a", "b", "c"))

    def _inline_feet(self, key: str) -> List:
        raw = getattr(self.args, key, None)
        if raw is None or raw.strip() == "":
            return []
        return [parse_rational(item) for item in raw.split(",")]

    def config_from_args(self) -> CevianConfig:
        """Exactly one of --a/--b/--c, --config FILE or --equal n."""
        sources = [
            name for name, present in (
                ("inline", self.has_inline_config()),
                ("config", getattr(self.args, "config", None) is not None),
                ("equal", getattr(self.args, "equal", None) is not None),
            ) if present
        ]
        if len(sources) != 1:
            raise ConfigValidationError(
                f"Exactly one config source is required (--a/--b/--c, --config or --equal), got {sources or 'none'}",
                entry="config source")

        if sources[0] == "config":
            return load_config_file(self.args.config)
        if sources[0] == "equal":
            return equal_division_config(self.args.equal)

        config = CevianConfig.from_feet(
            self._inline_feet("a"), self._inline_feet("b"), self._inline_feet("c"))
        logger.info(f"Inline config: {config.to_dict()}")
        return config

    # Responses

    def return_error(self, message: str = None, exit_code: int = EXIT_VALIDATION_ERROR,
                     error_body: Dict[str, Any] = None) -> CommandResponse:
        message = message if message else "Error"
        logger.debug(f"Returning error - message: {message} \n exit code: {exit_code}")
        body = dict(error_body or {})
        body.setdefault("message", message)
        return self.respond(exit_code=exit_code, error_body=body, origin="return_error")

    def return_exception(self, e: Exception, message: str = None) -> CommandResponse:
        if isinstance(e, CevianBaseException):
            body = e.to_dict()
            if message:
                body["message"] = f"{message}: {body['message']}"
            return self.return_error(body["message"], exit_code=e.exit_code, error_body=body)

        logger.critical(f"Unexpected {type(e).__name__} in {self.command}: {e}")
        return self.return_error(
            f"{message or 'Unexpected error'}: {e}",
            exit_code=EXIT_CONSISTENCY_ERROR,
            error_body={"error_code": type(e).__name__},
        )

    def return_success(self, text: str = None, json_out: Any = None) -> CommandResponse:
        """Plain text, or json_out serialized deterministically."""
        if json_out is not None:
            text = json.dumps(json_out, indent=2, sort_keys=False)
        logger.debug(f"Returning success for {self.command}")
        return self.respond(exit_code=EXIT_SUCCESS, text=text, origin="return_success")

    def respond(self, exit_code: int, text: str = None, error_body: Dict[str, Any] = None,
                origin: str = None) -> CommandResponse:
        logger.debug(f"Creating CommandResponse for {origin}")
        logger.flush_logger()

        stdout = ""
        if isinstance(text, str) and text:
            stdout = text if text.endswith("\n") else text + "\n"

        if origin == "return_error":
            error_body = dict(error_body or {})
            error_body["command"] = self.command
            error_body["exit_code"] = exit_code
            error_body["error_log"] = list(log_list.log_messages)

        return CommandResponse(exit_code=exit_code, stdout=stdout, error=error_body)

    def run(self) -> CommandResponse:
        """Execute the command, converting any exception into an error response."""
        log_list.clear()
        try:
            self.response = self.execute()
        except Exception as e:
            self.response = self.return_exception(e, message=f"{self.command} failed")
        return self.response

    def execute(self) -> CommandResponse:
        return self.return_error(f"Invalid command: {self.command}")
