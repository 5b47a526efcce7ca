from .parser import SessionParser, parse_session
from .runner import CommandReport, CommandStatus, SessionRunner, exit_code, format_table, run_command
from .session import Command, CommandKind, Session, SessionOptions

__all__ = [
    "SessionParser",
    "parse_session",
    "CommandReport",
    "CommandStatus",
    "SessionRunner",
    "exit_code",
    "format_table",
    "run_command",
    "Command",
    "CommandKind",
    "Session",
    "SessionOptions",
]
