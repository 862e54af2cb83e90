"""Main module for the application."""

import sys

from src.infra.cli import build_parser, dispatch
from src.infra.config.di import container


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = container.config()
    logger = container.logger().get_logger()
    logger.info(f"{settings.app_title} {settings.app_version} - {args.command}")
    return dispatch(args, container)


if __name__ == "__main__":
    sys.exit(main())
