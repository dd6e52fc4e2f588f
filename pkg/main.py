# main.py
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from cli.commands import COMMANDS, build_parser, config_from_args
from config import get_settings
from errors import SymprodError

load_dotenv()

logger = logging.getLogger("symprod")


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, settings.log_level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage on stderr
        return int(exc.code or 0)

    try:
        config = config_from_args(args)
        return COMMANDS[config.command](config)
    except ValidationError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2
    except SymprodError as exc:
        if exc.exit_code == 1:
            logger.error("invariant violation: %s", exc.detail)
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    except Exception:
        logger.exception("unexpected failure")
        return 1


if __name__ == "__main__":
    sys.exit(main())
