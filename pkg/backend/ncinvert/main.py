"""Entry point for ncinvert."""
import logging
import sys
from typing import List, Optional

from .config import settings

# Configure logging; stdout carries results only
logging.basicConfig(
    level=getattr(logging, settings.log_level.upper(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name

    Returns:
        Process exit code
    """
    from .cli import main

    logger.debug(f"🚀 ncinvert v{settings.app_version}")
    return main(argv)
