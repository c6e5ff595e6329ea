import logging
from typing import List, Optional

import click

from src.config import configure_logging, load_settings
from src.utils.errors import TorprodError

from .classes import cohomology_command, pontryagin, sw_class
from .fields import verify_fields
from .report import all_command, euler, fixtures, schema, span
from .topology import homology_command, hvector

logger = logging.getLogger(__name__)


class TorprodGroup(click.Group):
    """Maps torprod errors to their exit codes instead of a traceback."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except TorprodError as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(e.exit_code)
        except (click.ClickException, click.exceptions.Exit, click.exceptions.Abort):
            raise
        except Exception as e:
            logger.exception("unexpected failure")
            click.echo(f"internal error: {e}", err=True)
            ctx.exit(1)


@click.group(cls=TorprodGroup)
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              help="Overrides TORPROD_LOG_LEVEL.")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]):
    """Computations on generalized projective product spaces."""
    settings = load_settings()
    if log_level:
        settings = settings.model_copy(update={"log_level": log_level.upper()})
    configure_logging(settings.log_level)
    ctx.obj = settings


cli.add_command(hvector)
cli.add_command(cohomology_command)
cli.add_command(homology_command)
cli.add_command(sw_class)
cli.add_command(pontryagin)
cli.add_command(euler)
cli.add_command(span)
cli.add_command(verify_fields)
cli.add_command(all_command)
cli.add_command(fixtures)
cli.add_command(schema)


def run(argv: Optional[List[str]] = None) -> int:
    """Runs the command line and returns the exit code."""
    try:
        result = cli.main(args=argv, prog_name="torprod", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return 2
    except click.exceptions.Abort:
        return 1
    return result if isinstance(result, int) else 0
