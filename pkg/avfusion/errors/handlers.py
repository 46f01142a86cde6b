# File: avfusion/errors/handlers.py
# 🚨 CLI Error Handlers

from functools import wraps

import click
import structlog

from . import AVFusionError

log = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2


def exit_code_for(error):
    """Map an exception to the process exit code."""
    if isinstance(error, AVFusionError):
        return error.exit_code
    return EXIT_RUNTIME


def report_error(error):
    """Log the failure and print a one-line message on stderr."""
    code = exit_code_for(error)
    log.error('command_failed', error=type(error).__name__, detail=str(error), exit_code=code)
    click.echo(f'Error: {type(error).__name__}: {error}', err=True)
    return code


def handle_pipeline_errors(f):
    """Decorator turning pipeline errors into exit codes for click commands."""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except Exception as e:  # noqa: BLE001
            code = report_error(e)
            raise click.exceptions.Exit(code)
    return decorated_function
